# convergence.py
#
# This file is part of rieszstat: exact verification of statistical order
# convergence of nets in Riesz spaces.
#
#    Copyright (c) 2024 and later, the rieszstat developers
#    All rights reserved.
#
#    This source code is licensed under the BSD-style license found in the
#    LICENSE file in the root directory of this source tree.
############################################################################
"""
Checkers for order convergence, μ-statistical decrease, μ-statistical order
convergence and relatively uniform convergence of finitely described nets.

Every checker evaluates the explicit prefix of the nets involved and then decides
the tail cell by cell: the tail rules partition ℕ into set expressions carrying
closed forms, and the pointwise requirement is reduced to eventual sign decisions
on those forms. The finitely many indices before a decision threshold are evaluated
explicitly. A cell that cannot be decided makes the verdict undetermined, never
accepted.
"""

import itertools
import logging

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple, Union

import rieszstat.core.constants as const
import rieszstat.settings as settings
import rieszstat.utils.misc as utils

from rieszstat.core.closed_forms import (
    ClosedForm,
    SignDecision,
    UnitSweep,
    decreasing,
    jointly_nonnegative,
    nonnegative,
)
from rieszstat.core.density import Bounds, Exact, is_exactly
from rieszstat.core.exceptions import (
    EmptyDeltaError,
    NotDecreasingError,
    NotPositiveError,
    OutsideFieldError,
    SpaceMismatchError,
    UndeterminedError,
    UndeterminedMeasureError,
)
from rieszstat.core.lattice import RieszElement, RieszSpace, absolute, leq, sup_all
from rieszstat.core.measures import (
    DirectedSetMeasure,
    PrefixBoundsDensity,
    measure_eval,
)
from rieszstat.core.nets import Net
from rieszstat.core.set_algebra import (
    finite_members,
    first_member,
    is_empty,
    is_finite,
    iter_members,
    simplify,
)
from rieszstat.core.set_expr import (
    FULL,
    Complement,
    FiniteList,
    SetExpr,
    interval,
    meet,
    union_all,
)
from rieszstat.core.tail_rules import (
    GeometricScale,
    HarmonicScale,
    Piece,
    spike_sets,
)
from rieszstat.core.verdicts import Undetermined, Verdict

LOGGER = logging.getLogger(__name__)

# ε schedule of the classical statistical check on the real line
DEFAULT_EPSILONS = tuple(Fraction(1, 2**k) for k in range(11))


@dataclass(frozen=True, eq=False)
class Witness:
    """A dominating net `p` and the measure-one set `delta` it is used on."""

    p: Net
    delta: SetExpr

    def to_text(self) -> str:
        return "p = {}, delta = {}".format(self.p.to_text(), self.delta.to_text())


@dataclass(frozen=True)
class NotFound:
    """Outcome of an unsuccessful witness search; not a proof of divergence."""

    reason: str
    tried: int = 0

    def to_text(self) -> str:
        return "NotFound ({})".format(self.reason)


# ------------------------------------------------------------------------------
# cell analysis


@dataclass
class _Analysis:
    window: int
    explicit: List[int] = field(default_factory=list)
    failing_tails: List[Tuple[SetExpr, int]] = field(default_factory=list)
    undetermined: List[str] = field(default_factory=list)

    def first_violation(self) -> Optional[int]:
        candidates = list(self.explicit)
        for cell, threshold in self.failing_tails:
            n = first_member(cell, threshold)
            if n is None:
                self.undetermined.append(
                    "no member of {} found from {}".format(cell.to_text(), threshold)
                )
                continue
            candidates.append(n)
        return min(candidates, default=None)


Decision = Callable[[List[Piece], int], SignDecision]


def _normalized(piece: Piece, space: RieszSpace) -> Piece:
    if isinstance(piece, UnitSweep) and piece.scale == 0:
        return ClosedForm.zero(space)
    return piece


def _beyond(region: SetExpr, window: int) -> SetExpr:
    if window == 0:
        return region
    return meet(region, Complement(interval(1, window)))


def _analyse(
    delta: SetExpr, nets: Sequence[Net], holds_at: Callable[[int], bool], decide: Decision
) -> _Analysis:
    """Violations of a pointwise requirement on Δ, found explicitly on the prefix
    window and symbolically on the tail cells."""
    window = max(net.horizon for net in nets)
    analysis = _Analysis(window, [n for n in iter_members(delta, 1, window) if not holds_at(n)])
    piece_lists = [net.tail.pieces() for net in nets]
    if any(pieces is None for pieces in piece_lists):
        analysis.undetermined.append("tail rule without closed-form cells")
        return analysis
    region = _beyond(delta, window)
    space = nets[0].space
    for combo in itertools.product(*piece_lists):
        cell = region
        for part, _ in combo:
            cell = meet(cell, part)
        if is_empty(cell) is True:
            continue
        pieces = [_normalized(piece, space) for _, piece in combo]
        if is_finite(cell) is True:
            members = finite_members(cell)
            if members is None:
                analysis.undetermined.append("cannot list {}".format(cell.to_text()))
                continue
            analysis.explicit += [n for n in members if n > window and not holds_at(n)]
            continue
        decision = decide(pieces, window + 1)
        if decision.holds is None:
            analysis.undetermined.append(
                "sign undecided on {} for {}".format(
                    cell.to_text(), ", ".join(p.to_text() for p in pieces)
                )
            )
            continue
        threshold = max(decision.threshold, window + 1)
        if threshold - window > settings.MEMBER_SEARCH_CAP:
            analysis.undetermined.append(
                "threshold {} beyond the search cap".format(threshold)
            )
            continue
        analysis.explicit += [
            n for n in iter_members(cell, window + 1, threshold - 1) if not holds_at(n)
        ]
        if decision.holds is False:
            analysis.failing_tails.append((cell, threshold))
    analysis.explicit = sorted(set(analysis.explicit))
    return analysis


def _verdict(analysis: _Analysis, clause: str) -> Verdict:
    n = analysis.first_violation()
    if n is not None:
        return Verdict.reject(clause, index=n, horizon=analysis.window)
    if analysis.undetermined:
        return Verdict.reject(
            const.CLAUSE_UNDETERMINED, reason="; ".join(analysis.undetermined)
        )
    return Verdict.accept(horizon=analysis.window)


def _keys(pieces: Sequence[Piece], *elements: RieszElement) -> int:
    keys = [k for e in elements for k in e.support()]
    for piece in pieces:
        if isinstance(piece, ClosedForm):
            keys += piece.keys()
    return max(keys, default=0)


def _sweep_start(pieces: Sequence[Piece], start: int, *elements: RieszElement) -> int:
    """First index from which every unit sweep among `pieces` hits a coordinate
    outside the support of all other data."""
    bound = _keys(pieces, *elements)
    positions = [p.position_of(bound + 1) for p in pieces if isinstance(p, UnitSweep)]
    return max([start] + positions)


def _same_sweep(left: UnitSweep, right: UnitSweep) -> bool:
    return (left.first, left.period) == (right.first, right.period)


def _domination_decision(x: RieszElement) -> Decision:
    """|a_n − x| <= p_n"""

    def decide(pieces: List[Piece], start: int) -> SignDecision:
        a, p = pieces
        if isinstance(a, ClosedForm) and isinstance(p, ClosedForm):
            deviation = a.shift(-x)
            return jointly_nonnegative([p - deviation, p + deviation], start)
        start = _sweep_start(pieces, start, x)
        if isinstance(a, UnitSweep) and isinstance(p, UnitSweep):
            if not _same_sweep(a, p):
                return SignDecision(None, 0)
            return SignDecision(x.is_zero and abs(a.scale) <= p.scale, start)
        if isinstance(a, UnitSweep):
            # the swept coordinate is bounded by p_k = 0
            return SignDecision(False, start)
        if p.scale < 0:
            return SignDecision(False, start)
        deviation = a.shift(-x)
        return jointly_nonnegative([deviation, -deviation], start)

    return decide


def _leq_decision(pieces: List[Piece], start: int) -> SignDecision:
    """a_n <= b_n"""
    a, b = pieces
    if isinstance(a, ClosedForm) and isinstance(b, ClosedForm):
        return nonnegative(b - a, start)
    start = _sweep_start(pieces, start)
    if isinstance(a, UnitSweep) and isinstance(b, UnitSweep):
        if not _same_sweep(a, b):
            return SignDecision(None, 0)
        return SignDecision(a.scale <= b.scale, start)
    if isinstance(a, UnitSweep):
        if a.scale > 0:
            return SignDecision(False, start)
        return nonnegative(b, start)
    if b.scale < 0:
        return SignDecision(False, start)
    return nonnegative(-a, start)


def _require_space(space: RieszSpace, *items: Union[Net, RieszElement]) -> None:
    for item in items:
        if item.space != space:
            raise SpaceMismatchError(
                "expected {}, got {}".format(space.to_text(), item.space.to_text())
            )


def dominated(net: Net, x: RieszElement, p: Net, delta: SetExpr = FULL) -> Verdict:
    """|x_n − x| <= p_n for every n ∈ Δ."""
    _require_space(net.space, x, p)

    def holds_at(n: int) -> bool:
        return leq(absolute(net.eval(n) - x), p.eval(n))

    verdict = _verdict(
        _analyse(delta, [net, p], holds_at, _domination_decision(x)),
        const.CLAUSE_DOMINATION,
    )
    if not verdict.accepted and "index" in verdict.evidence:
        n = verdict.evidence["index"]
        verdict = verdict.with_evidence(
            deviation=absolute(net.eval(n) - x), bound=p.eval(n)
        )
    return verdict


def pointwise_leq(a: Net, b: Net, delta: SetExpr = FULL) -> Verdict:
    """a_n <= b_n for every n ∈ Δ."""
    _require_space(a.space, b)
    verdict = _verdict(
        _analyse(delta, [a, b], lambda n: leq(a.eval(n), b.eval(n)), _leq_decision),
        const.CLAUSE_LEQ,
    )
    if not verdict.accepted and "index" in verdict.evidence:
        n = verdict.evidence["index"]
        verdict = verdict.with_evidence(left=a.eval(n), right=b.eval(n))
    return verdict


def exceptional_set(net: Net, x: RieszElement, p: Net) -> SetExpr:
    """
    {n : |x_n − x| ≰ p_n}, as a set expression.

    Raises
    ------
    UndeterminedError
        if some tail cell cannot be decided
    """
    _require_space(net.space, x, p)
    analysis = _analyse(
        FULL,
        [net, p],
        lambda n: leq(absolute(net.eval(n) - x), p.eval(n)),
        _domination_decision(x),
    )
    if analysis.undetermined:
        raise UndeterminedError("; ".join(analysis.undetermined))
    parts: List[SetExpr] = []
    if analysis.explicit:
        parts.append(FiniteList(tuple(analysis.explicit)))
    for cell, threshold in analysis.failing_tails:
        parts.append(_beyond(cell, threshold - 1))
    return simplify(union_all(parts))


# ------------------------------------------------------------------------------
# decrease and infimum


def _consecutive_violation(net: Net, members: List[int]) -> Optional[Tuple[int, int]]:
    for n, m in zip(members, members[1:]):
        if not leq(net.eval(m), net.eval(n)):
            return n, m
    return None


def _reject_pair(net: Net, pair: Tuple[int, int], horizon: int) -> Verdict:
    n, m = pair
    return Verdict.reject(
        const.CLAUSE_DECREASING,
        pair=[n, m],
        values=[net.eval(n), net.eval(m)],
        horizon=horizon,
    )


def _undetermined(reason: str) -> Verdict:
    return Verdict.reject(const.CLAUSE_UNDETERMINED, reason=reason)


def _decrease_analysis(
    net: Net, delta: SetExpr, horizon: int
) -> Tuple[Verdict, Optional[ClosedForm]]:
    """Verdict on (x_δ)_{δ∈Δ} being decreasing, and the closed form that governs the
    restriction eventually."""
    if is_finite(delta) is True:
        raise EmptyDeltaError(
            "Δ = {} is finite; restrictions need an infinite index set".format(
                delta.to_text()
            )
        )
    window = net.horizon
    bound = max(window, horizon)
    pieces = net.tail.pieces()
    infinite: List[Tuple[SetExpr, Piece]] = []
    if pieces is not None:
        for cell, piece in pieces:
            cell = meet(_beyond(delta, window), cell)
            if is_empty(cell) is True:
                continue
            piece = _normalized(piece, net.space)
            if is_finite(cell) is True:
                members = finite_members(cell)
                if members is None:
                    return _undetermined("cannot list {}".format(cell.to_text())), None
                bound = max([bound] + members)
                continue
            if piece not in [p for _, p in infinite]:
                infinite.append((cell, piece))

    decision: Optional[SignDecision] = None
    if len(infinite) == 1 and isinstance(infinite[0][1], ClosedForm):
        decision = decreasing(infinite[0][1], window + 1)
        if decision.holds is not None:
            bound = max(bound, decision.threshold)

    members = list(iter_members(delta, 1, bound))
    following = first_member(delta, bound + 1)
    if following is not None:
        members.append(following)
    pair = _consecutive_violation(net, members)
    if pair is not None:
        return _reject_pair(net, pair, bound), None

    if pieces is None:
        return _undetermined("tail rule without closed-form cells"), None
    if not infinite:
        return _undetermined("no infinite cell found in {}".format(delta.to_text())), None
    if len(infinite) > 1:
        return (
            _undetermined(
                "{} interleaved tail forms on {}".format(len(infinite), delta.to_text())
            ),
            None,
        )
    cell, piece = infinite[0]
    if isinstance(piece, UnitSweep):
        # consecutive swept unit vectors are incomparable
        start = first_member(delta, bound + 1)
        if start is not None:
            stop = start + settings.CHECK_HORIZON * piece.period
            pair = _consecutive_violation(net, list(iter_members(delta, start, stop)))
            if pair is not None:
                return _reject_pair(net, pair, stop), None
        return _undetermined("unit sweep on {}".format(cell.to_text())), None
    if decision is None or decision.holds is None:
        return _undetermined("monotonicity of {} undecided".format(piece.to_text())), None
    if decision.holds is False:
        n = first_member(delta, bound + 1)
        m = first_member(delta, n + 1) if n is not None else None
        if n is None or m is None:
            return _undetermined("no members of Δ beyond {}".format(bound)), None
        return _reject_pair(net, (n, m), bound), None
    return Verdict.accept(horizon=bound, tail=piece.to_text()), piece


def is_decreasing_on(
    net: Net, delta: SetExpr = FULL, horizon: int = settings.CHECK_HORIZON
) -> Verdict:
    """
    Whether the restriction (x_δ)_{δ∈Δ} is decreasing.

    Consecutive members of Δ are compared explicitly up to `horizon` (and up to the
    point from which the tail form is decided); beyond it the tail form must be
    decreasing.

    Raises
    ------
    EmptyDeltaError
        if Δ is finite
    """
    verdict, _ = _decrease_analysis(net, delta, horizon)
    return verdict


def infimum_on(
    net: Net, delta: SetExpr = FULL, horizon: int = settings.CHECK_HORIZON
) -> Union[RieszElement, Undetermined]:
    """
    inf_{δ∈Δ} x_δ of a decreasing restriction: the limit of its tail form.

    Raises
    ------
    NotDecreasingError
        if the restriction is shown not to be decreasing
    """
    verdict, form = _decrease_analysis(net, delta, horizon)
    if not verdict.accepted:
        if verdict.clause == const.CLAUSE_UNDETERMINED:
            return Undetermined(verdict.evidence.get("reason", ""))
        raise NotDecreasingError(
            "restriction to {} is not decreasing: {}".format(
                delta.to_text(), verdict.evidence.get("pair")
            )
        )
    return form.limit()


# ------------------------------------------------------------------------------
# convergence notions


def is_order_bounded(net: Net) -> Optional[bool]:
    """Whether {x_n} has an upper and a lower bound; None if undecided."""
    pieces = net.tail.pieces()
    if pieces is None:
        return None
    for cell, piece in pieces:
        if isinstance(piece, UnitSweep) and piece.scale != 0:
            finite = is_finite(_beyond(cell, net.horizon))
            if finite is not True:
                return None if finite is None else False
    return True


def _bounded_text(bounded: Optional[bool]) -> Union[bool, str]:
    return "undetermined" if bounded is None else bounded


def check_order_conv(
    net: Net, x: RieszElement, dominating: Net, horizon: int = settings.CHECK_HORIZON
) -> Verdict:
    """x_n → x in order, with y = `dominating`: y ↓ 0 and |x_n − x| <= y_n."""
    _require_space(net.space, x, dominating)

    def rejected(verdict: Verdict) -> Verdict:
        return verdict.with_evidence(order_bounded=_bounded_text(is_order_bounded(net)))

    decrease, form = _decrease_analysis(dominating, FULL, horizon)
    if not decrease.accepted:
        return rejected(decrease)
    limit = form.limit()
    if not limit.is_zero:
        return rejected(Verdict.reject(const.CLAUSE_INFIMUM, infimum=limit))
    domination = dominated(net, x, dominating, FULL)
    if not domination.accepted:
        return rejected(domination)
    return Verdict.accept(infimum=limit, horizon=decrease.evidence["horizon"])


def _exact_measure(measure: DirectedSetMeasure, s: SetExpr) -> Exact:
    value = measure_eval(measure, s)
    if isinstance(value, Bounds) and value.collapsed:
        value = Exact(value.lo)
    if not isinstance(value, Exact):
        raise UndeterminedMeasureError(
            "{} of {} is {}".format(measure.to_text(), s.to_text(), value.to_text())
        )
    return value


def _measure_text(value: Exact) -> str:
    return "μ(Δ)={}".format(utils.format_rational(value.value))


def check_st_decreasing(
    net: Net,
    x: RieszElement,
    delta: SetExpr,
    measure: DirectedSetMeasure,
    horizon: int = settings.CHECK_HORIZON,
) -> Verdict:
    """
    μ(Δ) = 1 and (x_δ)_{δ∈Δ} ↓ x.

    Raises
    ------
    OutsideFieldError
        if Δ is not in the field of `measure`
    UndeterminedMeasureError
        if μ(Δ) is only known up to non-collapsing bounds
    """
    _require_space(net.space, x)
    value = _exact_measure(measure, delta)
    measure_value = _measure_text(value)
    if value.value != 1:
        return Verdict.reject(const.CLAUSE_MEASURE, measure_value=measure_value)
    decrease, form = _decrease_analysis(net, delta, horizon)
    if not decrease.accepted:
        return decrease.with_evidence(measure_value=measure_value)
    limit = form.limit()
    if limit != x:
        return Verdict.reject(
            const.CLAUSE_INFIMUM, infimum=limit, expected=x, measure_value=measure_value
        )
    return Verdict.accept(
        measure_value=measure_value, infimum=limit, horizon=decrease.evidence["horizon"]
    )


def check_st_order_conv(
    net: Net,
    x: RieszElement,
    witness: Witness,
    measure: DirectedSetMeasure,
    horizon: int = settings.CHECK_HORIZON,
) -> Verdict:
    """x_n → x μ-statistically in order, witnessed by (p, Δ): (p_δ)_{δ∈Δ} is
    μ-statistically decreasing to 0 and |x_δ − x| <= p_δ for δ ∈ Δ."""
    _require_space(net.space, x, witness.p)
    decrease = check_st_decreasing(witness.p, net.space.zero(), witness.delta, measure, horizon)
    if not decrease.accepted:
        return decrease
    domination = dominated(net, x, witness.p, witness.delta)
    if domination.accepted:
        return Verdict.accept(
            measure_value=decrease.evidence["measure_value"],
            horizon=max(decrease.evidence["horizon"], domination.evidence["horizon"]),
        )
    evidence = {"measure_value": decrease.evidence["measure_value"]}
    try:
        exceptional = exceptional_set(net, x, witness.p)
        evidence["exceptional_set"] = exceptional
        evidence["exceptional_measure"] = measure_eval(measure, exceptional)
    except (UndeterminedError, OutsideFieldError) as error:
        LOGGER.debug("exceptional set not measured: {}".format(error))
    return domination.with_evidence(**evidence)


def holds_almost_everywhere(
    net: Net, x: RieszElement, p: Net, measure: DirectedSetMeasure
) -> Verdict:
    """|x_n − x| <= p_n for μ-almost all n."""
    exceptional = exceptional_set(net, x, p)
    value = measure_eval(measure, exceptional)
    if is_exactly(value, 0):
        return Verdict.accept(exceptional_set=exceptional, measure_value=value)
    return Verdict.reject(
        const.CLAUSE_MEASURE, exceptional_set=exceptional, measure_value=value
    )


def ru_check(
    net: Net, x: RieszElement, u: RieszElement, horizon: int = settings.CHECK_HORIZON
) -> Verdict:
    """
    Relatively uniform convergence with regulator u: for each n <= horizon some α_n
    with |x_α − x| <= (1/n)·u for all α >= α_n.

    Raises
    ------
    NotPositiveError
        if u is not positive
    """
    _require_space(net.space, x, u)
    if not u.is_positive:
        raise NotPositiveError("regulator {} is not positive".format(u.to_text()))
    alphas = []
    for n in range(1, horizon + 1):
        bound = Net.constant(u.scale(Fraction(1, n)))
        try:
            exceptional = exceptional_set(net, x, bound)
        except UndeterminedError as error:
            return _undetermined(str(error)).with_evidence(n=n)
        members = finite_members(exceptional)
        if members is None:
            if is_finite(exceptional) is False:
                return Verdict.reject(
                    const.CLAUSE_DOMINATION,
                    n=n,
                    exceptional_set=exceptional,
                    reason="infinitely many indices exceed (1/n)·u",
                )
            return _undetermined(
                "cannot bound {}".format(exceptional.to_text())
            ).with_evidence(n=n)
        alphas.append(max(members, default=0) + 1)
    return Verdict.accept(alpha=alphas, horizon=horizon)


def check_classical_statistical(
    net: Net,
    x: RieszElement,
    epsilons: Sequence[Fraction] = DEFAULT_EPSILONS,
    measure: Optional[DirectedSetMeasure] = None,
) -> Verdict:
    """Classical statistical convergence of a rational sequence: the density of
    {n : |x_n − x| > ε} is 0 for every ε of the schedule."""
    if net.space.kind != const.RATIONALS:
        raise ValueError(
            "classical statistical convergence is defined on the rationals, got {}".format(
                net.space.to_text()
            )
        )
    measure = measure or PrefixBoundsDensity()
    for epsilon in epsilons:
        exceptional = exceptional_set(net, x, Net.constant(net.space.element(epsilon)))
        value = measure_eval(measure, exceptional)
        if not is_exactly(value, 0):
            return Verdict.reject(
                const.CLAUSE_MEASURE,
                epsilon=Fraction(epsilon),
                exceptional_set=exceptional,
                measure_value=value,
            )
    return Verdict.accept(epsilons=[Fraction(e) for e in epsilons])


# ------------------------------------------------------------------------------
# witness search


def _deviation_bounds(
    net: Net, x: RieszElement
) -> Tuple[RieszElement, Optional[Tuple[RieszElement, Fraction]]]:
    """
    U with |x_n − x| <= U/n, and (G, r) with |x_n − x| <= G·rⁿ if available, on
    the prefix and on every tail cell whose form tends to x.
    """
    space = net.space
    harmonic = [absolute(v - x).scale(n) for n, v in net.prefix.items()]
    forms = [
        piece
        for _, piece in (net.tail.pieces() or [])
        if isinstance(piece, ClosedForm) and piece.constant == x
    ]
    harmonic += [form.envelope() for form in forms]
    envelope = sup_all([space.zero()] + harmonic)
    if any(not form.harmonic.is_zero for form in forms):
        return envelope, None
    ratios = [r for form in forms for r, _ in form.geometric]
    ratio = max(ratios, default=Fraction(1, 2))
    geometric = [absolute(v - x).scale(ratio ** (-n)) for n, v in net.prefix.items()]
    for form in forms:
        total = space.zero()
        for _, g in form.geometric:
            total = total + absolute(g)
        geometric.append(total)
    return envelope, (sup_all([space.zero()] + geometric), ratio)


def _template_nets(net: Net, x: RieszElement, templates: Sequence[str]) -> List[Net]:
    space = net.space
    candidates = []
    if "zero" in templates:
        candidates.append(Net.constant(space.zero()))
    envelope, geometric = _deviation_bounds(net, x)
    if "harmonic" in templates and not envelope.is_zero:
        for c in (1, 2):
            candidates.append(Net.from_tail(space, HarmonicScale(envelope.scale(c))))
    if "geometric" in templates and geometric is not None and not geometric[0].is_zero:
        bound, ratio = geometric
        for c in (1, 2):
            candidates.append(Net.from_tail(space, GeometricScale(bound.scale(c), ratio)))
    return candidates


def witness_search(
    net: Net,
    x: RieszElement,
    measure: DirectedSetMeasure,
    templates: Sequence[str] = const.WITNESS_TEMPLATES,
) -> Union[Witness, NotFound]:
    """
    Search (p, Δ) over template dominating nets and candidate sets: the full index
    set, complements of the switching sets of the tail rule, and the complement of
    the exceptional set of p when it is μ-null.
    """
    unknown = [t for t in templates if t not in const.WITNESS_TEMPLATES]
    if unknown:
        raise ValueError(
            "unknown templates {}, expected some of {}".format(
                unknown, const.WITNESS_TEMPLATES
            )
        )
    deltas: List[SetExpr] = [FULL]
    for s in spike_sets(net.tail):
        complement = simplify(Complement(s))
        if complement not in deltas:
            deltas.append(complement)
    tried = 0
    for p in _template_nets(net, x, templates):
        candidates = list(deltas)
        try:
            exceptional = exceptional_set(net, x, p)
            if is_exactly(measure_eval(measure, exceptional), 0):
                complement = simplify(Complement(exceptional))
                if complement not in candidates:
                    candidates.append(complement)
        except (UndeterminedError, OutsideFieldError):
            pass
        for delta in candidates:
            if not measure.in_field(delta):
                LOGGER.debug("skipping {}: outside the field".format(delta.to_text()))
                continue
            tried += 1
            witness = Witness(p, delta)
            try:
                verdict = check_st_order_conv(net, x, witness, measure)
            except (UndeterminedMeasureError, EmptyDeltaError) as error:
                LOGGER.debug("candidate {} skipped: {}".format(witness.to_text(), error))
                continue
            LOGGER.debug(
                "candidate {}: {}".format(
                    witness.to_text(), "accepted" if verdict else verdict.clause
                )
            )
            if verdict.accepted:
                return witness
    return NotFound("templates exhausted", tried)
