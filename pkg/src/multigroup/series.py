"""Normal subspaces and descending series of them.

Normality has two independent routes: the conjugation scan straight from
the definition (g * h * g^-1 stays inside, for every retained operation
and every g in that operation's carrier) and the criterion that every
decomposition part is a normal subgroup of its component group.

Series are built by the staged programming: operations are visited in the
oriented order, and at each stage the current part of that operation is
walked down a composition series, removing the stripped elements from the
whole link. Removals can clip or delete the carriers of later operations;
such anomalies are recorded on the series instead of being papered over,
and the series may legitimately terminate away from the last operation's
identity (flagged TERMINAL_MISMATCH).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .config import DEFAULT_LIMITS, Limits
from .errors import (BoundExceeded, DomainError, InternalConsistencyError,
                     PreconditionError)
from .groups import (Element, is_normal_subgroup,
                     maximal_proper_normal_subgroups)
from .spaces import MultiGroupSpace, validate_multigroup
from .subspaces import (SubsetRef, induced_space, is_subspace,
                        subspace_decomposition)

ANOMALY_TERMINAL_MISMATCH = "TERMINAL_MISMATCH"
ANOMALY_CARRIER_LOST = "CARRIER_LOST"
ANOMALY_REJECTED_STEP = "INTERPOSABLE_STEP"


@dataclass(frozen=True)
class OrientedOperationSequence:
    """A total order on the operation identifiers."""

    order: tuple[str, ...]

    @staticmethod
    def of(ms: MultiGroupSpace, order=None) -> "OrientedOperationSequence":
        if order is None:
            return OrientedOperationSequence(ms.op_set)
        order = tuple(order)
        if sorted(order) != sorted(ms.op_set):
            raise DomainError(
                f"sequence {order!r} is not a permutation of the operation set "
                f"{ms.op_set!r}")
        return OrientedOperationSequence(order)


@dataclass(frozen=True)
class NormalityEvidence:
    ok: bool
    witness: tuple[str, Element, Element, Element] | None = None  # op, g, h, conjugate

    def __bool__(self) -> bool:
        return self.ok


def is_normal_subspace(ms: MultiGroupSpace, h: SubsetRef) -> NormalityEvidence:
    """Conjugation route: g * h' * g^-1 stays inside for every retained op.

    h' ranges over the subset's intersection with the op's carrier and g
    over the whole carrier; membership of the conjugate is tested against
    the subset itself.
    """
    if not is_subspace(ms, h):
        raise PreconditionError("normality requires a subspace")
    members = set(h.elements)
    for op in h.retained_ops:
        g = ms.group_of(op)
        inside = [e for e in h.elements if e in g]
        for x in g.carrier:
            xi = g.inverse(x)
            for member in inside:
                conjugate = g.mul(g.mul(x, member), xi)
                if conjugate not in members:
                    return NormalityEvidence(False, (op, x, member, conjugate))
    return NormalityEvidence(True)


def normality_criterion(ms: MultiGroupSpace, h: SubsetRef) -> bool:
    """Criterion route: every canonical decomposition part is a normal
    subgroup of its component group."""
    decomp = subspace_decomposition(ms, h)
    if decomp is None:
        raise PreconditionError("normality requires a subspace")
    return all(is_normal_subgroup(ms.group_of(op), part)
               for op, part in decomp.items())


@dataclass(frozen=True)
class NormalSeries:
    """A descending chain of subspaces with the operation that drove each step."""

    chain: tuple[SubsetRef, ...]
    step_ops: tuple[str, ...]
    anomalies: tuple[str, ...] = ()

    @property
    def length(self) -> int:
        return len(self.chain) - 1

    def element_chain(self) -> tuple[tuple[Element, ...], ...]:
        return tuple(link.elements for link in self.chain)


def _check_preconditions(ms: MultiGroupSpace, limits: Limits) -> None:
    worst = max((g.order for g in ms.groups), default=0)
    if worst > limits.max_group_order:
        raise BoundExceeded(
            f"series construction bounded at group order {limits.max_group_order}, "
            f"got {worst}", limits.max_group_order)
    if not validate_multigroup(ms).ok:
        raise PreconditionError(
            "series construction requires a valid multi-group space")


def _validate_link(parent_space: MultiGroupSpace, elements) -> SubsetRef:
    """A link must be a normal subspace of the space induced on its parent."""
    ref = SubsetRef.of(parent_space, elements)
    if not is_subspace(parent_space, ref):
        raise InternalConsistencyError(
            f"constructed link {tuple(elements)!r} is not a subspace of its parent")
    if not is_normal_subspace(parent_space, ref):
        raise InternalConsistencyError(
            f"constructed link {tuple(elements)!r} is not normal in its parent")
    return ref


def _series_stages(ms: MultiGroupSpace, seq: OrientedOperationSequence,
                   limits: Limits, branch: bool):
    """Generate (chain, step_ops, anomalies) triples from the staged programming.

    With branch=False only the canonically smallest maximal proper normal
    subgroup is taken at each step (the single-witness mode); with
    branch=True every choice is explored.
    """
    whole = SubsetRef.of(ms, ms.universe)
    if not is_subspace(ms, whole):
        raise PreconditionError("the whole space must validate as a subspace")

    def stages(parent_space, current, chain, steps, anomalies, op_index):
        if op_index == len(seq.order):
            yield chain, steps, anomalies
            return
        op = seq.order[op_index]
        decomp = subspace_decomposition(ms, current)
        if op not in decomp:
            note = f"{ANOMALY_CARRIER_LOST}:{op}"
            yield from stages(parent_space, current, chain,
                              steps, anomalies + [note], op_index + 1)
            return
        part = decomp[op]

        def descend(parent_space, current, part, chain, steps, anomalies):
            if len(part) == 1:
                yield from stages(parent_space, current, chain, steps,
                                  anomalies, op_index + 1)
                return
            part_group = ms.group_of(op).restrict(part)
            choices = sorted(maximal_proper_normal_subgroups(part_group, limits),
                             key=ms.sort_key)
            if not branch:
                choices = choices[:1]
            for nxt in choices:
                removed = set(part) - set(nxt)
                new_elements = [e for e in current.elements if e not in removed]
                link = _validate_link(parent_space, new_elements)
                new_current = SubsetRef.of(ms, new_elements)
                new_space = induced_space(parent_space, link)
                yield from descend(new_space, new_current, nxt,
                                   chain + [new_current], steps + [op], anomalies)

        yield from descend(parent_space, current, part, chain, steps, anomalies)

    yield from stages(ms, whole, [whole], [], [], 0)


def _finish_series(ms: MultiGroupSpace, seq: OrientedOperationSequence,
                   chain, steps, anomalies) -> NormalSeries:
    last_identity = ms.group_of(seq.order[-1]).identity
    terminal = chain[-1].elements
    if set(terminal) != {last_identity}:
        anomalies = anomalies + [
            f"{ANOMALY_TERMINAL_MISMATCH}: terminal {{{', '.join(terminal)}}} "
            f"!= {{{last_identity}}}"]
    return NormalSeries(tuple(chain), tuple(steps), tuple(anomalies))


def build_series(ms: MultiGroupSpace, seq: OrientedOperationSequence | None = None,
                 limits: Limits = DEFAULT_LIMITS) -> NormalSeries:
    """Single-witness staged construction under an oriented sequence.

    Ties among maximal proper normal subgroups break to the canonically
    smallest, so the result is deterministic.
    """
    seq = seq if seq is not None else OrientedOperationSequence.of(ms)
    _check_preconditions(ms, limits)
    chain, steps, anomalies = next(_series_stages(ms, seq, limits, branch=False))
    return _finish_series(ms, seq, chain, steps, anomalies)


def _strict_subsets_between(lower: frozenset, upper: tuple[Element, ...]):
    """All E with lower < E < set(upper), by adding nonempty proper subsets."""
    from itertools import combinations
    extra = [e for e in upper if e not in lower]
    for size in range(1, len(extra)):
        for add in combinations(extra, size):
            yield lower | set(add)


def _interposable(ms: MultiGroupSpace, upper_space: MultiGroupSpace,
                  lower: SubsetRef) -> tuple[Element, ...] | None:
    """Search for a normal subspace strictly between a link and its parent.

    Returns the witness subset if one interposes, else None. Exhaustive
    over subsets of the gap, which stays small because parents and links
    differ by at most one composition step.
    """
    lower_set = frozenset(lower.elements)
    for elems in _strict_subsets_between(lower_set, upper_space.universe):
        mid = SubsetRef.of(upper_space, elems)
        if not is_subspace(upper_space, mid):
            continue
        if not is_normal_subspace(upper_space, mid):
            continue
        mid_space = induced_space(upper_space, mid)
        low_in_mid = SubsetRef.of(mid_space, lower.elements)
        if is_subspace(mid_space, low_in_mid) and \
                is_normal_subspace(mid_space, low_in_mid):
            return tuple(sorted(elems, key=ms.index))
    return None


@dataclass(frozen=True)
class MaximalSeriesResult:
    sequence: OrientedOperationSequence
    series: tuple[NormalSeries, ...]
    rejected: tuple[tuple[NormalSeries, str], ...] = ()

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(s.length for s in self.series)


def enumerate_maximal_series(ms: MultiGroupSpace,
                             seq: OrientedOperationSequence | None = None,
                             limits: Limits = DEFAULT_LIMITS) -> MaximalSeriesResult:
    """All staged series with no normal subspace interposable between links.

    Every branching choice of maximal proper normal subgroup is explored;
    each produced chain is then re-checked link by link with the exhaustive
    interposition search. Chains that fail it are returned separately,
    never silently dropped or silently kept.
    """
    seq = seq if seq is not None else OrientedOperationSequence.of(ms)
    if len(ms.universe) > limits.max_exhaustive_universe:
        raise BoundExceeded(
            f"exhaustive series enumeration bounded at universe size "
            f"{limits.max_exhaustive_universe}, got {len(ms.universe)}; "
            f"use build_series for a single witness", limits.max_exhaustive_universe)
    _check_preconditions(ms, limits)

    accepted: list[NormalSeries] = []
    rejected: list[tuple[NormalSeries, str]] = []
    seen: set[tuple] = set()
    for chain, steps, anomalies in _series_stages(ms, seq, limits, branch=True):
        series = _finish_series(ms, seq, chain, steps, anomalies)
        key = series.element_chain()
        if key in seen:
            continue
        seen.add(key)
        reason = None
        parent_space = ms
        for upper, lower in zip(series.chain, series.chain[1:]):
            witness = _interposable(ms, parent_space, lower)
            if witness is not None:
                reason = (f"{ANOMALY_REJECTED_STEP}: {{{', '.join(witness)}}} "
                          f"interposes below {{{', '.join(upper.elements)}}}")
                break
            parent_space = induced_space(parent_space,
                                         SubsetRef.of(parent_space, lower.elements))
        if reason is None:
            accepted.append(series)
        else:
            rejected.append((series, reason))
    return MaximalSeriesResult(seq, tuple(accepted), tuple(rejected))


@dataclass(frozen=True)
class SequenceLengths:
    order: tuple[str, ...]
    lengths: tuple[int, ...]
    constant: int | None            # the common length, when one exists
    series_count: int
    anomalies: tuple[str, ...]


@dataclass(frozen=True)
class LengthInvariance:
    per_sequence: tuple[SequenceLengths, ...]
    within_each_ok: bool
    cross_sequence_constant: bool | None
    counterexample: tuple[NormalSeries, NormalSeries] | None = None

    @property
    def ok(self) -> bool:
        return self.within_each_ok


def length_invariance_check(ms: MultiGroupSpace,
                            seq: OrientedOperationSequence | None = None,
                            limits: Limits = DEFAULT_LIMITS,
                            across_sequences: bool = True) -> LengthInvariance:
    """Empirical length-invariance verdict for one or all oriented sequences.

    Within a fixed sequence all maximal series must share one length; the
    comparison across different sequences is reported, not asserted, since
    its status is exactly what the construction leaves open.
    """
    orders: list[tuple[str, ...]]
    if seq is not None:
        orders = [seq.order]
    elif across_sequences:
        orders = [tuple(p) for p in permutations(ms.op_set)]
    else:
        orders = [ms.op_set]

    stats: list[SequenceLengths] = []
    counterexample = None
    for order in orders:
        try:
            result = enumerate_maximal_series(
                ms, OrientedOperationSequence.of(ms, order), limits)
        except InternalConsistencyError as exc:
            # an ordering whose staged construction breaks down is a fact
            # about the space, reported alongside the orderings that work
            stats.append(SequenceLengths(order, (), None, 0,
                                         (f"CONSTRUCTION_FAILED: {exc}",)))
            continue
        lengths = result.lengths
        distinct = sorted(set(lengths))
        constant = distinct[0] if len(distinct) == 1 else None
        anomalies = tuple(dict.fromkeys(
            a for s in result.series for a in s.anomalies))
        if constant is None and len(distinct) > 1 and counterexample is None:
            by_len = {s.length: s for s in result.series}
            counterexample = (by_len[distinct[0]], by_len[distinct[-1]])
        stats.append(SequenceLengths(order, lengths, constant,
                                     len(result.series), anomalies))

    within = all(s.constant is not None for s in stats if s.series_count > 0)
    constants = {s.constant for s in stats if s.series_count > 0}
    cross = None
    if all(s.series_count > 0 for s in stats) and within:
        cross = len(constants) == 1
    return LengthInvariance(tuple(stats), within, cross, counterexample)
