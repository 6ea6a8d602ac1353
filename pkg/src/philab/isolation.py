"""Isolating subtypes, defining formulas, and the extension pipeline.

The central objects:

* an isolation certificate: a smallest subtype of a type whose realizer set
  already equals the whole type's, found by an ascending exhaustive search
  (or a greedy elimination pass when the search budget is exceeded);

* a defining formula: for a literal conjunction gamma, the parameter
  predicate "every realizer of gamma satisfies phi(.; b)", which agrees with
  the target type's signs on the target's whole domain whenever gamma
  isolates the target;

* the extension pipeline: build a maximal good configuration of p, extend p
  by the configuration literals, and certify the extension, reporting the
  2K <= 2*dimension budget.  When the finite structure lacks the witnesses
  an idealized saturated extension would provide, the resulting certificate
  is no smaller than isolating p over the base set alone; that outcome is a
  first-class saturation-deficit diagnostic, not a failure.

Complete types over the base-and-configuration parameters are represented
by full traces over all of Y: the structure interprets a single formula, so
the trace algebra is the whole definable closure available here.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Optional

from .delta import ALL, DEFAULT_TABLE_LIMIT, DeltaFamily, _AllSentinel, delta_eval
from .errors import (
    ArityMismatchError,
    LiteralClashError,
    NotWitnessedError,
    PreconditionError,
    ResourceLimitError,
)
from .goodconfig import GoodConfiguration, build_maximal, extend_type
from .structure import BipartiteStructure, PhiType
from .vc import cached_dimension

SATURATION_DEFICIT = "saturation-deficit"
DEFAULT_COVER_ENUM_LIMIT = 1 << 16
Q_SAMPLE_DOM_LIMIT = 14
Q_PAIR_LIMIT = 2
Q_THETA_LIMIT = 12


@dataclass(frozen=True)
class IsolationCertificate:
    """A subtype entailing its target.  `minimal` means no strictly smaller
    subtype entails; it holds exactly when the ascending search completed
    (method "exhaustive") rather than falling back to greedy elimination."""

    target: PhiType
    subtype: PhiType
    minimal: bool
    method: str

    @property
    def size(self) -> int:
        return len(self.subtype)


def find_isolating_subtype(
    struct: BipartiteStructure,
    p: PhiType,
    budget: int | _AllSentinel = ALL,
) -> IsolationCertificate:
    """Minimum-cardinality subtype of p with the same realizer set.

    Searches subsets of p's literals by increasing size (lexicographic
    within a size, so ties resolve to the least literal tuple) up to
    `budget`; past the budget a greedy elimination pass over the full
    literal list yields an inclusion-minimal but possibly non-minimum
    certificate.  A consistent p always isolates itself, so this never
    fails.
    """
    if not struct.is_consistent(p):
        raise PreconditionError("type must be consistent")
    target_mask = struct.type_mask(p)
    size_cap = len(p) if isinstance(budget, _AllSentinel) else min(budget, len(p))

    for size in range(size_cap + 1):
        for subset in combinations(p.items, size):
            if struct.literals_mask(subset) == target_mask:
                return IsolationCertificate(p, PhiType(subset), True, "exhaustive")

    kept = list(p.items)
    for item in list(kept):
        trial = [it for it in kept if it != item]
        if struct.literals_mask(trial) == target_mask:
            kept = trial
    return IsolationCertificate(p, PhiType(kept), False, "greedy")


@dataclass(frozen=True)
class DefiningFormula:
    """The parameter predicate induced by a literal conjunction gamma:
    holds(b) iff every realizer of gamma satisfies phi(.; b).  Outside the
    constrained domain the predicate is defined but carries no guarantee;
    evaluate_flagged exposes that distinction."""

    struct: BipartiteStructure
    gamma: PhiType
    constrained_domain: frozenset[int]

    def holds(self, b: int) -> bool:
        return self.struct.type_mask(self.gamma) & ~self.struct.column_mask(b) == 0

    def evaluate_flagged(self, b: int) -> tuple[bool, bool]:
        return self.holds(b), b in self.constrained_domain


def phi_defining_formula(
    struct: BipartiteStructure, cert: IsolationCertificate
) -> DefiningFormula:
    """Defining formula from a certificate, with gamma the certified subtype.

    For a valid certificate the predicate provably matches the target's
    signs across the target's domain (the subtype and target share one
    nonempty realizer set), and that agreement is re-checked here.
    """
    if not cert.subtype.is_subtype_of(cert.target):
        raise PreconditionError("certificate subtype is not contained in its target")
    if not struct.entails(cert.subtype, cert.target):
        raise PreconditionError("certificate subtype does not entail its target")
    formula = DefiningFormula(struct, cert.subtype, frozenset(cert.target.domain))
    for b, sign in cert.target.items:
        assert formula.holds(b) == bool(sign), "defining formula disagrees on domain"
    return formula


@dataclass(frozen=True)
class IsolatedExtensionResult:
    """Pipeline output: the extension, its configuration and certificates,
    the budget report, and the optional saturation-deficit diagnostic."""

    extension: PhiType
    configuration: GoodConfiguration
    certificate: IsolationCertificate
    base_certificate: IsolationCertificate
    added_params: int
    two_k: int
    two_id: int
    diagnostic: Optional[str]

    @property
    def budget_ok(self) -> bool:
        return self.added_params <= self.two_id and self.two_k <= self.two_id


def isolated_extension(
    struct: BipartiteStructure,
    p: PhiType,
    k_sat: int | _AllSentinel = ALL,
    family: Optional[DeltaFamily] = None,
    strategy: str = "greedy",
    budget: int | _AllSentinel = ALL,
) -> IsolatedExtensionResult:
    """Extend p by a maximal good configuration and certify the result.

    The number of parameters added beyond the base set is at most twice the
    configuration size, itself at most twice the independence dimension;
    both are reported.  The diagnostic fires when the extension certificate
    is not strictly smaller than the certificate of p over the base set
    alone, naming the gap between this finite structure and the idealized
    saturated extension the guarantee presumes.
    """
    if not struct.is_consistent(p):
        raise PreconditionError("type must be consistent")
    if not set(p.domain) <= struct.base_set:
        raise PreconditionError("type domain must lie inside base_set")
    if family is None:
        family = DeltaFamily(cached_dimension(struct))

    base_cert = find_isolating_subtype(struct, p, budget)
    config = build_maximal(struct, p, strategy, k_sat, family)
    extension = extend_type(p, config)
    cert = find_isolating_subtype(struct, extension, budget)
    added = len(set(extension.domain) - struct.base_set)
    diagnostic = SATURATION_DEFICIT if cert.size >= base_cert.size else None
    return IsolatedExtensionResult(
        extension=extension,
        configuration=config,
        certificate=cert,
        base_certificate=base_cert,
        added_params=added,
        two_k=2 * config.size,
        two_id=2 * cached_dimension(struct),
        diagnostic=diagnostic,
    )


# -- witness formulas from non-satisfiability --------------------------------


def gamma_certificate(
    struct: BipartiteStructure,
    a: int,
    config: GoodConfiguration,
    p: PhiType,
    cover_enum_limit: int = DEFAULT_COVER_ENUM_LIMIT,
) -> PhiType:
    """Literal conjunction from a realizer's full trace entailing the
    extended type.

    Treating the full trace of `a` as its complete type, search for a
    smallest set of trace literals such that no base parameter satisfies
    every induced existential condition; those literals plus the
    configuration literals form gamma, and entailment of the extended type
    is asserted on every return.  When some base parameter survives even the
    full trace (impossible here whenever the base parameters' own literals
    appear in the trace, but kept as a defensive diagnostic), the finite
    structure cannot witness the separation and NotWitnessedError carries
    the survivors.
    """
    p_c = extend_type(p, config)
    struct.check_element(a)
    if struct.type_mask(p_c) >> a & 1 == 0:
        raise PreconditionError(f"element {a} does not realize the extended type")
    trace = struct.full_trace(a)
    base = struct.base_members()

    # eliminations[b] = literals (c, sign) of the trace such that for some t
    # no element has sign t at b and sign `sign` at c
    eliminations: dict[int, list[tuple[int, int]]] = {}
    survivors = []
    for b in base:
        masks = (struct.literal_mask(b, 0), struct.literal_mask(b, 1))
        hits = [
            (c, sign)
            for c, sign in trace.items
            if masks[0] & struct.literal_mask(c, sign) == 0
            or masks[1] & struct.literal_mask(c, sign) == 0
        ]
        if not hits:
            survivors.append(b)
        eliminations[b] = hits
    if survivors:
        raise NotWitnessedError(tuple(survivors))

    chosen = _minimum_hitting_literals(base, eliminations, cover_enum_limit)
    gamma = PhiType(tuple(chosen) + tuple(extend_type(PhiType(), config).items))
    assert struct.entails(gamma, p_c), "gamma fails to entail the extended type"
    return gamma


def _minimum_hitting_literals(
    base: tuple[int, ...],
    eliminations: dict[int, list[tuple[int, int]]],
    enum_limit: int,
) -> tuple[tuple[int, int], ...]:
    """Smallest literal set hitting every base parameter's elimination list
    (lexicographically least among minimum ones); greedy fallback past the
    enumeration limit.  Literals sharing an elimination pattern are collapsed
    to the least literal, which preserves both optimality and tie order."""
    if not base:
        return ()
    pattern_of: dict[frozenset[int], tuple[int, int]] = {}
    literal_bs: dict[tuple[int, int], set[int]] = {}
    for b, hits in eliminations.items():
        for lit in hits:
            literal_bs.setdefault(lit, set()).add(b)
    for lit in sorted(literal_bs):
        pat = frozenset(literal_bs[lit])
        pattern_of.setdefault(pat, lit)
    reps = sorted(pattern_of.values())
    need = set(base)

    budget = 0
    for size in range(1, len(reps) + 1):
        for combo in combinations(reps, size):
            budget += 1
            if budget > enum_limit:
                return _greedy_hitting(reps, literal_bs, need)
            covered = set()
            for lit in combo:
                covered |= literal_bs[lit]
            if covered >= need:
                return combo
    raise AssertionError("full literal set always hits every base parameter")


def _greedy_hitting(reps, literal_bs, need) -> tuple[tuple[int, int], ...]:
    uncovered = set(need)
    chosen: list[tuple[int, int]] = []
    for lit in sorted(reps, key=lambda r: (-len(literal_bs[r] & need), r)):
        if not uncovered:
            break
        if literal_bs[lit] & uncovered:
            chosen.append(lit)
            uncovered -= literal_bs[lit]
    if uncovered:
        raise AssertionError("greedy hitting ran out of literals")
    # drop redundant picks, scanning in lexicographic order
    for lit in sorted(chosen):
        rest = [other for other in chosen if other != lit]
        covered = set()
        for other in rest:
            covered |= literal_bs[other]
        if covered >= need:
            chosen = rest
    return tuple(sorted(chosen))


def psi_disjunction(
    struct: BipartiteStructure,
    p: PhiType,
    config: GoodConfiguration,
    cover_enum_limit: int = DEFAULT_COVER_ENUM_LIMIT,
) -> tuple[PhiType, ...]:
    """Literal conjunctions, one per trace class of the extended type's
    realizers, whose realizer sets jointly cover exactly those realizers;
    a minimal subfamily is extracted by direct cover search (smallest, then
    lexicographically least by class index).  NotWitnessedError from any
    class propagates."""
    p_c = extend_type(p, config)
    if not struct.is_consistent(p_c):
        raise PreconditionError("extended type must be consistent")
    reps: list[int] = []
    seen = set()
    for a in struct.realizers(p_c):
        t = struct.full_trace(a)
        if t not in seen:
            seen.add(t)
            reps.append(a)
    gammas = [gamma_certificate(struct, a, config, p, cover_enum_limit) for a in reps]
    target_mask = struct.type_mask(p_c)
    masks = [struct.type_mask(g) for g in gammas]
    for mask in masks:
        assert mask & ~target_mask == 0, "gamma realizers leak outside the type"

    chosen_idx: Optional[tuple[int, ...]] = None
    budget = 0
    for size in range(len(gammas) + 1):
        for combo in combinations(range(len(gammas)), size):
            budget += 1
            if budget > cover_enum_limit:
                chosen_idx = tuple(range(len(gammas)))  # full family always covers
                break
            union = 0
            for i in combo:
                union |= masks[i]
            if union == target_mask:
                chosen_idx = combo
                break
        if chosen_idx is not None:
            break
    assert chosen_idx is not None
    union = 0
    for i in chosen_idx:
        union |= masks[i]
    assert union == target_mask, "disjunction does not match the extended type"
    return tuple(gammas[i] for i in chosen_idx)


def embed_trace(
    struct: BipartiteStructure,
    a: int,
    k_sat: int | _AllSentinel = ALL,
    family: Optional[DeltaFamily] = None,
) -> tuple[DefiningFormula, IsolatedExtensionResult]:
    """Defining formula for an element's base-set trace via the extension
    pipeline.  The formula provably reproduces the element's truth row on
    the base set; the agreement is asserted on every run.  The pipeline
    result rides along so callers see any saturation-deficit diagnostic."""
    struct.check_element(a)
    p = struct.trace(a, struct.base_members())
    result = isolated_extension(struct, p, k_sat, family)
    formula = phi_defining_formula(struct, result.certificate)
    for b in struct.base_members():
        assert formula.holds(b) == bool(struct.truth[a][b]), (
            "defining formula disagrees with the source row on the base set"
        )
    return formula, result


# -- the parameter-tuple type behind a configuration -------------------------

Token = tuple[str, int]  # ("p", base param) | ("c", component index)
SchemaEntry = tuple[int, tuple[Token, ...], int, tuple[int, ...]]


@dataclass(frozen=True)
class QType:
    """What a parameter tuple must satisfy to stand in for a configuration.

    q_prime: every component lies in theta.  q_double_prime: each sampled
    sub-conjunction of p is jointly realizable with the candidate's signed
    component literals.  q_triple_prime: each component's delta-table over
    the base parameters and the other components (components appear as
    re-substitutable slots, so the table constrains the candidate's mutual
    relations, not just its relations to the base) matches the generating
    tuple's.  The generating tuple itself satisfies all three parts by
    construction, which is asserted when the type is built.
    """

    struct: BipartiteStructure
    family: DeltaFamily
    pair_count: int
    generating: tuple[int, ...]
    base_type: PhiType
    q_double_prime: tuple[PhiType, ...]
    q_triple_prime: tuple[tuple[SchemaEntry, bool], ...]

    @property
    def component_count(self) -> int:
        return 2 * self.pair_count


def _component_literals(components: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    # component order (c_{0,0}, c_{0,1}, c_{1,0}, ...): sign = index parity
    return tuple((c, j % 2) for j, c in enumerate(components))


def _sampled_conjunctions(p: PhiType, sample: int | _AllSentinel) -> tuple[PhiType, ...]:
    if isinstance(sample, _AllSentinel):
        if len(p) > Q_SAMPLE_DOM_LIMIT:
            raise ResourceLimitError(
                f"materializing all conjunctions needs 2^{len(p)} entries"
            )
        count = None
    else:
        if sample < 0:
            raise ValueError("sample must be >= 0 or ALL")
        count = sample
    out: list[PhiType] = []
    for size in range(len(p) + 1):
        for subset in combinations(p.items, size):
            if count is not None and len(out) >= count:
                return tuple(out)
            out.append(PhiType(subset))
    return tuple(out)


def q_type(
    struct: BipartiteStructure,
    config: GoodConfiguration,
    p: Optional[PhiType] = None,
    family: Optional[DeltaFamily] = None,
    sample: int | _AllSentinel = ALL,
) -> QType:
    """Materialize the three-part description of a maximal configuration's
    tuple.  Maximality of `config` is the caller's obligation (it is what
    makes realizers of q useful); goodness is implicit in the asserted
    self-realization."""
    if p is None:
        p = config.base_type
    if family is None:
        family = DeltaFamily(cached_dimension(struct))
    components = config.components
    tokens: tuple[Token, ...] = tuple(
        [("p", b) for b in struct.base_members()]
        + [("c", j) for j in range(len(components))]
    )
    entries = len(components) * len(tokens) ** family.arity * 2 ** (family.arity + 1)
    if entries > DEFAULT_TABLE_LIMIT:
        raise ResourceLimitError(
            f"delta schema would have {entries} entries, over {DEFAULT_TABLE_LIMIT}"
        )

    schema: list[tuple[SchemaEntry, bool]] = []
    for j, subject in enumerate(components):
        for zs in product(tokens, repeat=family.arity):
            resolved = tuple(
                idx if kind == "p" else components[idx] for kind, idx in zs
            )
            for t in (0, 1):
                for s in product((0, 1), repeat=family.arity):
                    value = delta_eval(struct, family, subject, resolved, t, s)
                    schema.append(((j, zs, t, s), value))

    q = QType(
        struct=struct,
        family=family,
        pair_count=config.size,
        generating=components,
        base_type=p,
        q_double_prime=_sampled_conjunctions(p, sample),
        q_triple_prime=tuple(schema),
    )
    assert check_q_realizer(struct, q, components), "generating tuple fails its own type"
    return q


def check_q_realizer(
    struct: BipartiteStructure, q: QType, candidate: tuple[int, ...]
) -> bool:
    """Decide candidate |= q.  Membership first, then joint realizability of
    the sampled conjunctions with the candidate's signed literals, then the
    delta schema with candidate components substituted into the slots."""
    if len(candidate) != q.component_count:
        raise ArityMismatchError(
            f"expected {q.component_count} components, got {len(candidate)}"
        )
    for c in candidate:
        struct.check_parameter(c)
        if c not in struct.theta_set:
            return False
    literals = _component_literals(candidate)
    for conj in q.q_double_prime:
        try:
            combined = conj.union(PhiType(literals))
        except LiteralClashError:
            return False
        if not struct.is_consistent(combined):
            return False
    for (j, zs, t, s), value in q.q_triple_prime:
        resolved = tuple(idx if kind == "p" else candidate[idx] for kind, idx in zs)
        if delta_eval(struct, q.family, candidate[j], resolved, t, s) != value:
            return False
    return True


@dataclass(frozen=True)
class QHarnessReport:
    """Per-tuple certificate sizes for realizers of q.  A `None` size marks a
    tuple whose extended type is inconsistent, which can only happen when the
    conjunction sample was thinner than ALL."""

    reference_size: int
    candidates_checked: int
    passing: tuple[tuple[tuple[int, ...], Optional[int]], ...]
    ok: bool


def q_harness(
    struct: BipartiteStructure,
    config: GoodConfiguration,
    p: Optional[PhiType] = None,
    family: Optional[DeltaFamily] = None,
    sample: int | _AllSentinel = ALL,
) -> QHarnessReport:
    """Enumerate all theta tuples, keep those realizing q, and certify each
    passing tuple's type at most as hard to isolate as the generating one
    (certificate size <=).  Guarded to small configurations and theta sets:
    the tuple space is |theta|^(2K)."""
    if p is None:
        p = config.base_type
    if config.size > Q_PAIR_LIMIT:
        raise ResourceLimitError(
            f"harness guard: {config.size} pairs > {Q_PAIR_LIMIT}"
        )
    theta = struct.theta_members()
    if len(theta) > Q_THETA_LIMIT:
        raise ResourceLimitError(
            f"harness guard: |theta| = {len(theta)} > {Q_THETA_LIMIT}"
        )
    q = q_type(struct, config, p, family, sample)
    reference = find_isolating_subtype(struct, extend_type(p, config)).size
    passing = []
    checked = 0
    for candidate in product(theta, repeat=q.component_count):
        checked += 1
        if not check_q_realizer(struct, q, candidate):
            continue
        try:
            p_cand = p.union(PhiType(_component_literals(candidate)))
        except LiteralClashError:
            passing.append((candidate, None))
            continue
        if not struct.is_consistent(p_cand):
            passing.append((candidate, None))
            continue
        size = find_isolating_subtype(struct, p_cand).size
        passing.append((candidate, size))
    ok = all(size is not None and size <= reference for _, size in passing)
    return QHarnessReport(reference, checked, tuple(passing), ok)
