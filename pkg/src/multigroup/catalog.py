"""Programmatic constructors for the test corpus.

Groups use conventional element names (cycle notation for permutation
groups, unit names for the quaternions) so witnesses in reports read like
textbook elements. Spaces mirror the shipped instance files.
"""

from __future__ import annotations

from itertools import permutations

from .groups import FiniteGroup
from .spaces import MultiGroupSpace


def cyclic(n: int, op_id: str = "+", prefix: str = "") -> FiniteGroup:
    names = [f"{prefix}{i}" for i in range(n)]
    return FiniteGroup.from_function(
        op_id, names,
        lambda a, b: f"{prefix}{(int(a[len(prefix):]) + int(b[len(prefix):])) % n}",
        names[0])


def klein_four() -> FiniteGroup:
    names = ["e", "a", "b", "c"]

    def mul(x, y):
        if x == "e":
            return y
        if y == "e":
            return x
        if x == y:
            return "e"
        return ({"a", "b", "c"} - {x, y}).pop()

    return FiniteGroup.from_function("*", names, mul, "e")


def _cycle_name(perm: tuple[int, ...]) -> str:
    """Cycle notation over 1-based points; the identity is 'e'."""
    seen: set[int] = set()
    cycles = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            seen.add(start)
            continue
        cycle = [start]
        seen.add(start)
        nxt = perm[start]
        while nxt != start:
            cycle.append(nxt)
            seen.add(nxt)
            nxt = perm[nxt]
        cycles.append("(" + "".join(str(p + 1) for p in cycle) + ")")
    return "".join(cycles) if cycles else "e"


def _permutation_group(op_id: str, perms: list[tuple[int, ...]]) -> FiniteGroup:
    names = {p: _cycle_name(p) for p in perms}
    by_name = {v: k for k, v in names.items()}

    def mul(a, b):
        pa, pb = by_name[a], by_name[b]
        return names[tuple(pa[pb[i]] for i in range(len(pa)))]

    identity = names[tuple(range(len(perms[0])))]
    return FiniteGroup.from_function(op_id, [names[p] for p in perms], mul, identity)


def symmetric_3() -> FiniteGroup:
    return _permutation_group("*", list(permutations(range(3))))


def alternating_4() -> FiniteGroup:
    def even(p):
        inv = sum(1 for i in range(4) for j in range(i + 1, 4) if p[i] > p[j])
        return inv % 2 == 0
    return _permutation_group("*", [p for p in permutations(range(4)) if even(p)])


def dihedral_4() -> FiniteGroup:
    """Symmetries of the square: r^4 = s^2 = e, s r s = r^-1."""
    decode = {"e": (0, 0), "r": (1, 0), "r2": (2, 0), "r3": (3, 0),
              "s": (0, 1), "rs": (1, 1), "r2s": (2, 1), "r3s": (3, 1)}
    encode = {v: k for k, v in decode.items()}

    def mul(x, y):
        i, a = decode[x]
        j, b = decode[y]
        k = (i + (j if a == 0 else -j)) % 4
        return encode[(k, (a + b) % 2)]

    return FiniteGroup.from_function("*", list(decode), mul, "e")


def quaternion_8() -> FiniteGroup:
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    base = {("1", "1"): "1", ("1", "i"): "i", ("1", "j"): "j", ("1", "k"): "k",
            ("i", "1"): "i", ("j", "1"): "j", ("k", "1"): "k",
            ("i", "i"): "-1", ("j", "j"): "-1", ("k", "k"): "-1",
            ("i", "j"): "k", ("j", "k"): "i", ("k", "i"): "j",
            ("j", "i"): "-k", ("k", "j"): "-i", ("i", "k"): "-j"}

    def mul(x, y):
        sign = -1 if (x.startswith("-") ^ y.startswith("-")) else 1
        r = base[(x.lstrip("-"), y.lstrip("-"))]
        if r.startswith("-"):
            sign, r = -sign, r[1:]
        return r if sign == 1 else "-" + r

    return FiniteGroup.from_function("*", names, mul, "1")


def corpus_groups() -> dict[str, FiniteGroup]:
    """All groups of the acceptance corpus: Z2..Z12, S3, D4, Q8, A4, Klein."""
    corpus = {f"Z{n}": cyclic(n) for n in range(2, 13)}
    corpus["S3"] = symmetric_3()
    corpus["D4"] = dihedral_4()
    corpus["Q8"] = quaternion_8()
    corpus["A4"] = alternating_4()
    corpus["V4"] = klein_four()
    return corpus


# ----------------------------------------------------------------- spaces

def single(group: FiniteGroup) -> MultiGroupSpace:
    return MultiGroupSpace(group.carrier, (group,))


def trivial_space() -> MultiGroupSpace:
    return single(cyclic(1, op_id="*", prefix="e"))


def prime_field(p: int) -> MultiGroupSpace:
    """The field of p elements: addition on everything, units under product."""
    names = [str(i) for i in range(p)]
    add = FiniteGroup.from_function(
        "+", names, lambda a, b: str((int(a) + int(b)) % p), "0")
    mul = FiniteGroup.from_function(
        "*", names[1:], lambda a, b: str((int(a) * int(b)) % p), "1")
    return MultiGroupSpace(tuple(names), (add, mul))


def gf3() -> MultiGroupSpace:
    """The field of three elements as two overlapping groups."""
    return prime_field(3)


def gf3_corrupt() -> MultiGroupSpace:
    """gf3 with the multiplicative table broken: 2*2 = 2, so 2 has no inverse."""
    add = cyclic(3, op_id="+")
    mul = FiniteGroup("*", ("1", "2"), (("1", "2"), ("2", "2")), "1")
    return MultiGroupSpace(("0", "1", "2"), (add, mul))


def z2_z3() -> MultiGroupSpace:
    """Disjoint union of a 2-cycle and a 3-cycle with unrelated operations."""
    a = cyclic(2, op_id="a", prefix="a")
    b = cyclic(3, op_id="b", prefix="b")
    return MultiGroupSpace(a.carrier + b.carrier, (a, b))


def z2_z2() -> MultiGroupSpace:
    a = cyclic(2, op_id="a", prefix="a")
    b = cyclic(2, op_id="b", prefix="b")
    return MultiGroupSpace(a.carrier + b.carrier, (a, b))


def z4_twice() -> MultiGroupSpace:
    """Two relabelled copies of the 4-cycle on one carrier.

    Addition does not distribute over itself, so this space fails the
    pairwise distribution condition and validates as invalid.
    """
    p = cyclic(4, op_id="p")
    q = FiniteGroup("q", p.carrier, p.table, p.identity)
    return MultiGroupSpace(p.carrier, (p, q))


def z6_with_units() -> MultiGroupSpace:
    """Addition mod 6 together with the multiplicative group of units {1,5}.

    A shared-carrier space that is not a field: the unit carrier is a
    proper subset of the nonzero elements.
    """
    names = [str(i) for i in range(6)]
    add = FiniteGroup.from_function(
        "+", names, lambda a, b: str((int(a) + int(b)) % 6), "0")
    units = FiniteGroup.from_function(
        "*", ["1", "5"], lambda a, b: str((int(a) * int(b)) % 6), "1")
    return MultiGroupSpace(tuple(names), (add, units))


def linked_z2s() -> MultiGroupSpace:
    """Two order-2 groups chained through one shared element.

    Element 1 is the non-identity of the first group and the identity of
    the second. The space validates, yet cosets of the whole universe
    overlap without coinciding ({0,1} meets {1,2}), making this the
    smallest witness that transversal decompositions can genuinely fail.
    """
    p = FiniteGroup("p", ("0", "1"), (("0", "1"), ("1", "0")), "0")
    q = FiniteGroup("q", ("1", "2"), (("1", "2"), ("2", "1")), "1")
    return MultiGroupSpace(("0", "1", "2"), (p, q))
