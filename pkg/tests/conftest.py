import io
import sys
from contextlib import redirect_stdout
from itertools import combinations
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "suite", max_examples=60, deadline=None, derandomize=True,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("suite")

sys.path.insert(0, str(Path(__file__).parent))

from multigroup import catalog, cli  # noqa: E402
from multigroup.subspaces import SubsetRef, is_subspace  # noqa: E402

INSTANCE_DIR = Path(__file__).resolve().parent.parent / "instances"

# fixtures small enough for exhaustive subset scans
SMALL_FIXTURE_NAMES = ("gf3", "gf5", "z6units", "z2link", "z2z3", "z2z2",
                       "s3", "z6", "klein", "trivial")


@pytest.fixture(scope="session")
def corpus():
    return catalog.corpus_groups()


@pytest.fixture(scope="session")
def gf3():
    return catalog.gf3()


@pytest.fixture(scope="session")
def z2z3():
    return catalog.z2_z3()


@pytest.fixture(scope="session")
def z2z2():
    return catalog.z2_z2()


@pytest.fixture(scope="session")
def small_spaces():
    """Valid multi-space fixtures with universe size at most 8, by name."""
    return dict(small_space_catalog())


def small_space_catalog():
    return {
        "gf3": catalog.gf3(),
        "gf5": catalog.prime_field(5),
        "z6units": catalog.z6_with_units(),
        "z2link": catalog.linked_z2s(),
        "z2z3": catalog.z2_z3(),
        "z2z2": catalog.z2_z2(),
        "s3": catalog.single(catalog.symmetric_3()),
        "z6": catalog.single(catalog.cyclic(6)),
        "klein": catalog.single(catalog.klein_four()),
        "trivial": catalog.trivial_space(),
    }


@pytest.fixture(scope="session")
def instance_dir():
    return INSTANCE_DIR


def subset_op_combinations(ms):
    """Every constructible (subset, retained ops) pair over a space."""
    for r in range(0, len(ms.universe) + 1):
        for elems in combinations(ms.universe, r):
            present = [op for op in ms.op_set
                       if set(elems) & set(ms.group_of(op).carrier)]
            for k in range(1, len(present) + 1):
                for ops in combinations(present, k):
                    yield SubsetRef.of(ms, elems, ops)


def subspaces_of(ms):
    return [s for s in subset_op_combinations(ms) if is_subspace(ms, s)]


def run_cli(argv):
    """Invoke the CLI in process, returning (stdout text, exit code)."""
    buffer = io.StringIO()
    with redirect_stdout(buffer):
        code = cli.main(argv)
    return buffer.getvalue(), code


def relabel(group, names, op_id):
    """The same group structure over fresh element names."""
    from multigroup.groups import FiniteGroup
    mapping = dict(zip(group.carrier, names))
    table = tuple(tuple(mapping[x] for x in row) for row in group.table)
    return FiniteGroup(op_id, tuple(mapping[e] for e in group.carrier), table,
                       mapping[group.identity])


def overlapping_pair_family(max_universe=8):
    """All valid two-group spaces from small pieces over every tail/head
    carrier overlap, a search space nobody hand-picked."""
    from multigroup.spaces import MultiGroupSpace, validate_multigroup
    pieces = [catalog.cyclic(2), catalog.cyclic(3), catalog.cyclic(4),
              catalog.klein_four(), catalog.symmetric_3()]
    spaces = []
    for g1 in pieces:
        for g2 in pieces:
            for overlap in range(0, min(g1.order, g2.order) + 1):
                total = g1.order + g2.order - overlap
                if total > max_universe:
                    continue
                names = [f"n{i}" for i in range(total)]
                first = relabel(g1, names[:g1.order], "p")
                second = relabel(
                    g2, names[g1.order - overlap: g1.order - overlap + g2.order],
                    "q")
                ms = MultiGroupSpace(tuple(names), (first, second))
                if validate_multigroup(ms).ok:
                    spaces.append(ms)
    return spaces
