"""Good configurations: bounded pair families extending a type.

A good configuration of a type p is an ordered list of parameter pairs
(c_{i,0}, c_{i,1}), all drawn from theta, such that

  (i)   every component lies in theta;
  (ii)  p plus the literals phi(x; c_{j,t})^t for all j, t is consistent;
  (iii) for every sign selection s over the pairs and every index j, the two
        components of pair j have equal delta-types over
        base_set + {c_{i,s(i)} : i != j}.

Sizes of good configurations are bounded by the independence dimension when
the family arity equals that dimension; verify_bound certifies the bound on
checker-passing configurations and treats any violation as an implementation
bug, dumping the full instance.

Every prefix of a good configuration is good (clauses (i)/(ii) restrict to
subsets, and clause (iii) restricts by delta-type monotonicity), which is
what makes greedy one-pair-at-a-time construction sound.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable, Optional

from .delta import (
    ALL,
    DeltaComparison,
    DeltaFamily,
    _AllSentinel,
    cached_delta_type,
    finitely_satisfiable_in,
)
from .errors import LiteralClashError, PreconditionError, ResourceLimitError
from .structure import BipartiteStructure, PhiType
from .vc import cached_dimension

DEFAULT_CHECK_LIMIT = 4096
DEFAULT_EXHAUSTIVE_THETA_LIMIT = 12

Pair = tuple[int, int]


@dataclass(frozen=True)
class GoodConfiguration:
    """An ordered pair list together with the type it extends."""

    pairs: tuple[Pair, ...]
    base_type: PhiType

    @property
    def size(self) -> int:
        return len(self.pairs)

    @property
    def components(self) -> tuple[int, ...]:
        return tuple(c for pair in self.pairs for c in pair)

    def extended(self, pair: Pair) -> "GoodConfiguration":
        return GoodConfiguration(self.pairs + (pair,), self.base_type)


@dataclass(frozen=True)
class ConfigCheck:
    """Checker verdict; `clause` in {"i", "ii", "iii"} and a witness locate
    the first violation in canonical scan order."""

    ok: bool
    clause: Optional[str] = None
    witness: Optional[tuple] = None

    def __bool__(self) -> bool:
        return self.ok


def extend_type(p: PhiType, config: GoodConfiguration | Iterable[Pair]) -> PhiType:
    """p plus the signed pair literals: c_{j,0} gets sign 0, c_{j,1} sign 1.
    Raises LiteralClashError when any parameter is forced to both signs."""
    pairs = config.pairs if isinstance(config, GoodConfiguration) else tuple(config)
    literals = list(p.items)
    for c0, c1 in pairs:
        literals.append((c0, 0))
        literals.append((c1, 1))
    return PhiType(literals)


def is_good_configuration(
    struct: BipartiteStructure,
    candidate: GoodConfiguration | Iterable[Pair],
    p: Optional[PhiType] = None,
    family: Optional[DeltaFamily] = None,
    limit: int = DEFAULT_CHECK_LIMIT,
) -> ConfigCheck:
    """Check the three clauses; on failure report the first violated one.

    Clause (iii) is scanned over all sign selections s and pair indices j;
    the delta comparisons are memoized per domain since distinct (s, j)
    combinations repeat domains.
    """
    if isinstance(candidate, GoodConfiguration):
        pairs = candidate.pairs
        if p is None:
            p = candidate.base_type
    else:
        pairs = tuple(candidate)
        if p is None:
            raise PreconditionError("a base type is required for bare pair lists")
    if family is None:
        family = DeltaFamily(cached_dimension(struct))
    k = len(pairs)
    if 2**k * max(k, 1) > limit:
        raise ResourceLimitError(
            f"clause (iii) needs {2 ** k * k} comparisons, over the limit {limit}"
        )

    for j, pair in enumerate(pairs):
        for t in (0, 1):
            if pair[t] not in struct.theta_set:
                return ConfigCheck(False, "i", (j, t))

    try:
        p_c = extend_type(p, pairs)
    except LiteralClashError:
        return ConfigCheck(False, "ii", None)
    if not struct.is_consistent(p_c):
        return ConfigCheck(False, "ii", None)

    base = struct.base_set
    memo: dict[tuple[int, int, tuple[int, ...]], DeltaComparison] = {}
    for s in product((0, 1), repeat=k):
        for j in range(k):
            domain = tuple(
                sorted(base | {pairs[i][s[i]] for i in range(k) if i != j})
            )
            c0, c1 = pairs[j]
            key = (c0, c1, domain)
            cmp = memo.get(key)
            if cmp is None:
                cmp = delta_equal_over(struct, family, c0, c1, domain)
                memo[key] = cmp
            if not cmp:
                return ConfigCheck(False, "iii", (j, s))
    return ConfigCheck(True)


def delta_equal_over(
    struct: BipartiteStructure,
    family: DeltaFamily,
    c0: int,
    c1: int,
    domain: tuple[int, ...],
) -> DeltaComparison:
    """Table equality via the per-structure delta cache (both tables end up
    memoized, which pays off across the checker's repeated domains)."""
    t0 = cached_delta_type(struct, family, c0, domain)
    t1 = cached_delta_type(struct, family, c1, domain)
    if t0.table == t1.table:
        return DeltaComparison(True)
    for entry, value in t0.table.items():
        if t1.table[entry] != value:
            return DeltaComparison(False, entry)
    raise AssertionError("tables differ but no entry disagrees")


def find_extension_pair(
    struct: BipartiteStructure,
    config: GoodConfiguration,
    k_sat: int | _AllSentinel = ALL,
    family: Optional[DeltaFamily] = None,
) -> Optional[Pair]:
    """Least pair (d0, d1) from theta^2, scanned lexicographically, with

      (i)   d0, d1 in theta;
      (ii)  the extended type plus {d0 -> 0, d1 -> 1} consistent;
      (iii) d0 and d1 delta-equal over base_set + current components;
      (iv)  d0's delta-type over that domain finitely satisfiable in
            base_set at strength k_sat.

    Diagonal pairs are skipped: both signs on one parameter can never
    satisfy (ii).  Each hit is re-verified with is_good_configuration before
    being returned; with k_sat=ALL the four conditions provably transfer the
    clauses, but at weaker k_sat they may not, and unsound candidates are
    skipped so the returned pair always extends to a good configuration.
    """
    if family is None:
        family = DeltaFamily(cached_dimension(struct))
    p = config.base_type
    try:
        p_c = extend_type(p, config.pairs)
    except LiteralClashError as exc:
        raise PreconditionError("configuration clashes with its type") from exc
    theta = struct.theta_members()
    base = struct.base_set
    domain = tuple(sorted(base | set(config.components)))
    p_c_mask = struct.type_mask(p_c)
    for d0 in theta:
        mask0 = p_c_mask & struct.literal_mask(d0, 0)
        if not mask0:
            continue
        dt0 = None
        for d1 in theta:
            if d1 == d0:
                continue
            if not mask0 & struct.literal_mask(d1, 1):
                continue  # (ii)
            if not delta_equal_over(struct, family, d0, d1, domain):
                continue  # (iii)
            if dt0 is None:
                dt0 = cached_delta_type(struct, family, d0, domain)
            if not finitely_satisfiable_in(struct, dt0, base, k_sat):
                break  # (iv) depends on d0 only
            if is_good_configuration(struct, config.extended((d0, d1)), family=family):
                return (d0, d1)
    return None


def build_maximal(
    struct: BipartiteStructure,
    p: PhiType,
    strategy: str = "greedy",
    k_sat: int | _AllSentinel = ALL,
    family: Optional[DeltaFamily] = None,
    theta_limit: int = DEFAULT_EXHAUSTIVE_THETA_LIMIT,
) -> GoodConfiguration:
    """A good configuration of p admitting no extension pair.

    greedy (the default) repeats find_extension_pair until exhaustion,
    mirroring the one-pair-at-a-time extension argument; exhaustive searches
    every pair list over theta (prefix-pruned, which loses nothing since
    prefixes of good configurations are good) and returns the maximum-size
    configuration, lexicographically least among ties.  Exhaustive exists as
    an oracle for greedy and is guarded by theta_limit.
    """
    if not struct.is_consistent(p):
        raise PreconditionError("base type must be consistent")
    if not set(p.domain) <= struct.base_set:
        raise PreconditionError("base type domain must lie inside base_set")
    if family is None:
        family = DeltaFamily(cached_dimension(struct))

    if strategy == "greedy":
        config = GoodConfiguration((), p)
        while True:
            pair = find_extension_pair(struct, config, k_sat, family)
            if pair is None:
                return config
            config = config.extended(pair)
    if strategy != "exhaustive":
        raise ValueError(f"unknown strategy {strategy!r}")

    theta = struct.theta_members()
    if len(theta) > theta_limit:
        raise ResourceLimitError(
            f"exhaustive search over |theta| = {len(theta)} exceeds {theta_limit}"
        )
    all_pairs = [(d0, d1) for d0 in theta for d1 in theta if d0 != d1]
    best = GoodConfiguration((), p)

    def descend(config: GoodConfiguration) -> None:
        nonlocal best
        for pair in all_pairs:
            cand = config.extended(pair)
            if is_good_configuration(struct, cand, family=family):
                if cand.size > best.size:
                    best = cand
                descend(cand)

    if not is_good_configuration(struct, best, family=family):
        raise PreconditionError("empty configuration fails the checker")
    descend(best)
    return best


def verify_bound(
    struct: BipartiteStructure,
    config: GoodConfiguration,
    sink: Optional[Callable[[str], None]] = None,
) -> bool:
    """Certify size <= independence dimension for a checker-passing
    configuration.  A false return is a certified counterexample to this
    implementation, never to the bound itself, so the full instance is
    dumped for post-mortem before returning."""
    bound = cached_dimension(struct)
    if config.size <= bound:
        return True
    from .structure import serialize_structure

    dump = {
        "structure": serialize_structure(struct),
        "pairs": [list(pair) for pair in config.pairs],
        "base_type": [list(item) for item in config.base_type.items],
        "size": config.size,
        "independence_dimension": bound,
    }
    emit = sink if sink is not None else lambda s: print(s, file=sys.stderr)
    emit(json.dumps(dump, sort_keys=True))
    return False


def config_certificate(
    struct: BipartiteStructure,
    config: GoodConfiguration,
    family: Optional[DeltaFamily] = None,
) -> dict:
    """JSON-ready certificate: pairs, size, dimension, bound check, and the
    per-clause checker verdicts."""
    if family is None:
        family = DeltaFamily(cached_dimension(struct))
    check = is_good_configuration(struct, config, family=family)
    clauses = {"i": True, "ii": True, "iii": True}
    if not check.ok:
        for name in clauses:
            clauses[name] = name != check.clause
    return {
        "pairs": [list(pair) for pair in config.pairs],
        "size": config.size,
        "id": cached_dimension(struct),
        "bound_ok": config.size <= cached_dimension(struct),
        "checker": {
            "ok": check.ok,
            "clauses": clauses,
            "witness": _jsonable(check.witness),
        },
    }


def _jsonable(value):
    if isinstance(value, tuple):
        return [_jsonable(v) for v in value]
    return value
