"""Lower bounds for gamma(S_n), gamma(A_n) by exact set cover, and brackets.

The lower-bound model keeps only cycle types with 2, 3 or 4 cycles of
coprime lengths (plus the n-cycle). Any real normal covering by maximal
subgroups induces a cover of this universe by the model's candidates of
no greater size, so the model's minimum is a lower bound whenever the
primitive catalog is complete (n > 36).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .arith import divisors, is_prime, repunit_forms
from .catalog import VALIDITY_THRESHOLD
from .coverage import SubgroupClass, class_covers
from .cycletypes import CycleType, iter_partitions
from .families import (
    CoveringFamily,
    applicable_provenances,
    build_family,
    verify_family,
)
from .setcover import InfeasibleCover, min_set_cover

UNIVERSE_CYCLE_COUNTS = (2, 3, 4)


@dataclass
class CoverModel:
    n: int
    group: str
    universe: list[Any]
    candidates: list[Any]
    coverage: np.ndarray  # bool, candidates x universe
    sound: bool = False

    def element_sets(self) -> list[frozenset[int]]:
        return [frozenset(np.flatnonzero(self.coverage[:, j]).tolist()) for j in range(len(self.universe))]


def model_universe(n: int, group: str) -> list[CycleType]:
    out = []
    for k in UNIVERSE_CYCLE_COUNTS:
        if k > n:
            break
        for parts in iter_partitions(n, max_parts=k):
            if len(parts) != k:
                continue
            t = CycleType(parts)
            if t.part_gcd != 1 or (group == "A" and t.sign != 1):
                continue
            out.append(t)
    top = CycleType((n,))
    if group == "S" or top.sign == 1:
        out.append(top)
    return out


def model_candidates(n: int, group: str) -> list[SubgroupClass]:
    cands = [SubgroupClass.intransitive(k, n, group) for k in range(1, n // 2 + 1)]
    cands += [SubgroupClass.imprimitive(b, n, group) for b in divisors(n)[1:-1]]
    if is_prime(n):
        cands.append(SubgroupClass.affine(n, group))
    wild = SubgroupClass.wildcard(n, group)
    if wild is not None:
        cands.append(wild)
    if group == "S":
        cands.append(SubgroupClass.alternating(n))
    return cands


def build_model(n: int, group: str) -> CoverModel:
    if n < 5:
        raise ValueError(f"build_model needs n >= 5, got {n}")
    if group not in ("S", "A"):
        raise ValueError(f"group must be 'S' or 'A', got {group!r}")
    universe = model_universe(n, group)
    cands = model_candidates(n, group)
    cov = np.array([[class_covers(c, t) for t in universe] for c in cands], dtype=bool)
    return CoverModel(n, group, universe, cands, cov, sound=n > VALIDITY_THRESHOLD)


@dataclass(frozen=True)
class MinCover:
    value: int
    witness: tuple[Any, ...]
    witness_indices: tuple[int, ...]
    certified: bool
    nodes: int


def min_cover(m: CoverModel, time_budget: float | None = None) -> MinCover:
    """Exact minimum number of candidates covering the universe.

    Raises InfeasibleCover naming the first uncoverable element.
    """
    sets = m.element_sets()
    for j, s in enumerate(sets):
        if not s:
            raise InfeasibleCover(j, f"type {m.universe[j]} is covered by no candidate")
    res = min_set_cover(sets, len(m.candidates), time_budget=time_budget)
    return MinCover(
        res.value,
        tuple(m.candidates[i] for i in res.witness),
        res.witness,
        res.certified,
        res.nodes,
    )


def closed_form_gamma(n: int, group: str) -> tuple[int, str] | None:
    """Known exact value of gamma with the result it comes from, if any applies."""
    if group == "S":
        two_power = n & (n - 1) == 0
        two_p = n % 2 == 0 and is_prime(n // 2)
        if n > VALIDITY_THRESHOLD and (two_power or two_p):
            return n // 4 + 1, "S_2p-lower"
        if n >= 5 and is_prime(n):
            return n // 2, "known-exact-S_p"
    elif group == "A":
        if n > VALIDITY_THRESHOLD and is_prime(n) and not repunit_forms(n):
            return (n + 1) // 3, "A_p-lower"
    else:
        raise ValueError(f"group must be 'S' or 'A', got {group!r}")
    return None


@dataclass
class GammaBracket:
    n: int
    group: str
    lower: int | None
    lower_sound: bool
    upper: int
    lower_witness: tuple[SubgroupClass, ...] = ()
    upper_witness: CoveringFamily | None = None
    closed_form: int | None = None
    closed_form_source: str | None = None
    lower_certified: bool = True
    upper_verified: bool = True
    family_sizes: dict[str, int] = field(default_factory=dict)

    @property
    def consistent(self) -> bool:
        ok = True
        if self.lower is not None and self.lower_sound and self.lower_certified:
            ok = self.lower <= self.upper
            if self.closed_form is not None:
                ok = ok and self.lower <= self.closed_form
        if self.closed_form is not None:
            ok = ok and self.closed_form <= self.upper
        return ok

    def to_row(self) -> dict:
        return {
            "n": self.n,
            "group": self.group,
            "lower": self.lower,
            "lower_sound": self.lower_sound,
            "lower_certified": self.lower_certified,
            "upper": self.upper,
            "upper_verified": self.upper_verified,
            "upper_family": self.upper_witness.provenance if self.upper_witness else None,
            "closed_form": self.closed_form,
            "closed_form_source": self.closed_form_source,
            "witness_sizes": dict(sorted(self.family_sizes.items())),
            "consistent": self.consistent,
        }


class VerificationFailure(RuntimeError):
    pass


def best_family(
    n: int, group: str, verify: bool = True, verify_budget: float | None = None
) -> tuple[CoveringFamily, dict[str, int], bool]:
    """Smallest applicable construction, its rivals' sizes, and whether it
    was verified. Only the chosen family is verified; running out of
    ``verify_budget`` leaves it unverified, a missed type raises."""
    fams = [build_family(prov, n, group) for prov in applicable_provenances(n, group)]
    if not fams:
        raise ValueError(f"no construction applies to n={n}, group {group}")
    sizes = {f.provenance: f.size for f in fams}
    best = min(fams, key=lambda f: f.size)
    verified = False
    if verify:
        rep = verify_family(best, time_budget=verify_budget)
        if not rep.covered:
            raise VerificationFailure(
                f"{best.provenance} at n={n}, {group}: uncovered {[str(t) for t in rep.uncovered_types[:5]]}"
            )
        verified = rep.complete
    return best, sizes, verified


def gamma_bracket(
    n: int,
    group: str,
    solve_lower: bool = True,
    verify: bool = True,
    time_budget: float | None = None,
    verify_budget: float | None = None,
) -> GammaBracket:
    if n < 5:
        raise ValueError(f"gamma_bracket needs n >= 5, got {n}")
    fam, sizes, verified = best_family(n, group, verify=verify, verify_budget=verify_budget)
    cf = closed_form_gamma(n, group)
    lower, witness, certified = None, (), True
    if solve_lower:
        res = min_cover(build_model(n, group), time_budget=time_budget)
        lower, witness, certified = res.value, res.witness, res.certified
    return GammaBracket(
        n=n,
        group=group,
        lower=lower,
        lower_sound=n > VALIDITY_THRESHOLD and certified,
        upper=fam.size,
        lower_witness=witness,
        upper_witness=fam,
        closed_form=cf[0] if cf else None,
        closed_form_source=cf[1] if cf else None,
        lower_certified=certified,
        upper_verified=verified,
        family_sizes=sizes,
    )


def limits_row(
    n: int,
    group: str,
    time_budget: float | None = None,
    verify_budget: float | None = None,
) -> dict:
    """One row of the ratio table: bracket for gamma over n.

    The lower end is the closed form when one applies, otherwise the model
    minimum (sound only for n > 36 and when certified).
    """
    fam, _, verified = best_family(n, group, verify=True, verify_budget=verify_budget)
    cf = closed_form_gamma(n, group)
    if cf is not None:
        lower, source, sound, certified = cf[0], cf[1], True, True
    else:
        res = min_cover(build_model(n, group), time_budget=time_budget)
        lower, source, certified = res.value, "set-cover", res.certified
        sound = certified and n > VALIDITY_THRESHOLD
    return {
        "n": n,
        "group": group,
        "lower": lower,
        "upper": fam.size,
        "lower_ratio": round(lower / n, 6),
        "upper_ratio": round(fam.size / n, 6),
        "lower_source": source,
        "lower_sound": sound,
        "lower_certified": certified,
        "upper_family": fam.provenance,
        "upper_verified": verified,
    }


__all__ = [
    "CoverModel",
    "GammaBracket",
    "InfeasibleCover",
    "MinCover",
    "VerificationFailure",
    "best_family",
    "build_model",
    "closed_form_gamma",
    "gamma_bracket",
    "limits_row",
    "min_cover",
    "model_candidates",
    "model_universe",
]
