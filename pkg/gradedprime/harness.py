"""Executable checks of the graded-prime results over finite structures.

Each check takes one graded near-ring and reports an Outcome. Some results
are known not to survive literally on finite carriers; those are registered
with the counterexample they are expected to hit, and a hit is reported as
EXPECTED_FAIL rather than FAIL.
"""
import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Callable, Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union

from .config import CHAIN_LIMIT, FACTOR_BOUND, resolve_workers
from .constructions import (
    NearRingHom, QuotientStructure, box_mask, component_preimage_mismatch,
    component_respect_witness, cyclic_reduction_hom, image, preimage, quotient,
)
from .corpus import CorpusEntry, get_entry, list_entries, reduction_pairs
from .errors import EXIT_FAILED, EXIT_OK, UnknownTheoremId, ValidationError
from .grading import GradedNearRing, component, graded_ideal_masks, is_graded_ideal
from .ideals import IdealScope, generated_mask, ideal_masks, maximal_ideals, set_power, set_product
from .primality import (
    graded_primes, is_graded_prime_def, is_prime_ideal, prime_ideals, proper_graded_ideals,
    replay_witness, run_checker,
)
from . import masks

# Set up logging
logger = logging.getLogger(__name__)


class Outcome(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    EXPECTED_FAIL = "fail-as-expected"
    NOT_APPLICABLE = "not-applicable"
    DIVERGED = "diverged"


class Finding(NamedTuple):
    outcome: Outcome
    detail: str = ""
    witnesses: Tuple[Dict, ...] = ()
    parameters: Dict = {}


@dataclass
class TheoremCheck:
    """Outcome of one check on one structure"""
    check_id: str
    title: str
    structure: str
    outcome: Outcome
    detail: str = ""
    witnesses: List[Dict] = field(default_factory=list)
    parameters: Dict = field(default_factory=dict)

    @property
    def unexpected(self) -> bool:
        return self.outcome is Outcome.FAIL

    def to_dict(self) -> Dict:
        return {
            "id": self.check_id,
            "title": self.title,
            "structure": self.structure,
            "outcome": self.outcome.value,
            "detail": self.detail,
            "witnesses": list(self.witnesses),
            "parameters": dict(self.parameters),
        }


@dataclass
class HarnessReport:
    checks: List[TheoremCheck]
    scope: IdealScope = IdealScope.ALL

    @property
    def failures(self) -> List[TheoremCheck]:
        return [c for c in self.checks if c.unexpected]

    @property
    def exit_code(self) -> int:
        return EXIT_FAILED if self.failures else EXIT_OK

    def counts(self) -> Dict[str, int]:
        counts = {outcome.value: 0 for outcome in Outcome}
        for c in self.checks:
            counts[c.outcome.value] += 1
        return counts

    def to_document(self) -> Dict:
        return {
            "kind": "harness-report",
            "scope": IdealScope(self.scope).value,
            "summary": self.counts(),
            "checks": [c.to_dict() for c in self.checks],
        }


@dataclass(frozen=True)
class CheckDefinition:
    check_id: str
    title: str
    runner: Callable[[GradedNearRing, IdealScope], Finding]


CHECKS: Dict[str, CheckDefinition] = {}


def register(check_id: str, title: str):
    def decorator(runner):
        CHECKS[check_id] = CheckDefinition(check_id, title, runner)
        return runner
    return decorator


# --- Helpers ---
def _subset(mask: int) -> List[int]:
    return masks.members(mask)


def _gp_set(graded: GradedNearRing, scope: IdealScope) -> set:
    return set(graded_primes(graded, scope))


def _not_prime_witness(graded: GradedNearRing, ideal: int, scope: IdealScope) -> Dict:
    """The definition's (A, B, g, h) against `ideal` as index lists; replays with replay_witness"""
    report = is_graded_prime_def(graded, ideal, scope)
    if report.verdict:
        return {}
    w = report.witness
    return {"A": _subset(w["A"]), "B": _subset(w["B"]), "g": w["g"], "h": w["h"]}


def _graded_maximal(graded: GradedNearRing) -> List[int]:
    return [m for m in maximal_ideals(graded.near_ring) if is_graded_ideal(graded, m)]


def _intersection_closure(ideals: Iterable[int]) -> List[int]:
    closed = set(ideals)
    frontier = set(closed)
    while frontier:
        fresh = {a & b for a in frontier for b in closed} - closed
        closed |= fresh
        frontier = fresh
    return masks.canonical_order(closed)


@lru_cache(maxsize=1024)
def _quotient(graded: GradedNearRing, ideal: int) -> QuotientStructure:
    return quotient(graded, ideal)


def _homomorphisms(graded: GradedNearRing) -> List[Tuple[str, NearRingHom, GradedNearRing]]:
    """Projections onto every quotient plus the registered reductions out of `graded`"""
    homs = []
    for q in proper_graded_ideals(graded):
        structure = _quotient(graded, q)
        homs.append((f"N -> N/{graded.near_ring.format(q)}", structure.projection, structure.graded))
    for label, source, target in reduction_pairs():
        if source != graded.name:
            continue
        target_graded = get_entry(target).structure
        try:
            hom = cyclic_reduction_hom(graded.near_ring, target_graded.near_ring)
        except ValidationError as e:
            logger.debug(f"Skipping {label}: {e}")
            continue
        homs.append((label, hom, target_graded))
    return homs


def _applicable_homs(graded: GradedNearRing):
    """Surjective homomorphisms that respect components"""
    for label, hom, target in _homomorphisms(graded):
        if not hom.surjective:
            continue
        try:
            if component_respect_witness(hom, graded, target) is not None:
                continue
        except ValidationError:
            continue
        yield label, hom, target


def _power_violations(graded: GradedNearRing, p: int, j: int, max_exponent: int) -> Iterable[Dict]:
    near_ring = graded.near_ring
    for g in graded.grades():
        j_g = component(graded, j, g)
        if masks.is_subset(j_g, p):
            continue
        power = j_g
        for n in range(1, max_exponent + 1):
            if masks.is_subset(power, component(graded, p, graded.monoid.power(g, n))):
                yield {"P": _subset(p), "J": _subset(j), "g": g, "n": n}
                break
            power = set_product(near_ring, power, j_g)


def _whole_power_violation(graded: GradedNearRing, p: int, j: int, max_exponent: int) -> Optional[Dict]:
    if masks.is_subset(j, p):
        return None
    power = j
    for n in range(1, max_exponent + 1):
        if masks.is_subset(power, p):
            return {"P": _subset(p), "J": _subset(j), "n": n}
        power = set_product(graded.near_ring, power, j)
    return None


def _factors_unital(graded: GradedNearRing) -> bool:
    first, second = graded.factors
    return first.near_ring.one is not None and second.near_ring.one is not None


def _reachable_products(graded: GradedNearRing, scope: IdealScope, bound: int) -> set:
    """Ideals that are products of at most `bound` graded primes"""
    near_ring = graded.near_ring
    primes = graded_primes(graded, scope)
    reached = set(primes)
    level = set(primes)
    for _ in range(bound - 1):
        level = {generated_mask(near_ring, set_product(near_ring, x, p)) for x in level for p in primes}
        level -= reached
        if not level:
            break
        reached |= level
    return reached


def _unfactored(graded: GradedNearRing, scope: IdealScope, bound: int) -> List[int]:
    reached = _reachable_products(graded, scope, bound)
    return [m for m in proper_graded_ideals(graded) if m not in reached]


# --- Prime systems ---
@register("2.3", "graded maximal ideals of a unital near-ring are graded prime")
def check_maximal_unital(graded: GradedNearRing, scope: IdealScope) -> Finding:
    if graded.near_ring.one is None:
        return Finding(Outcome.NOT_APPLICABLE, "no multiplicative identity")
    maximal = _graded_maximal(graded)
    if not maximal:
        return Finding(Outcome.NOT_APPLICABLE, "no maximal ideal is graded")
    primes = _gp_set(graded, scope)
    bad = [{"I": _subset(m), "witness": _not_prime_witness(graded, m, scope)}
           for m in maximal if m not in primes]
    if bad:
        return Finding(Outcome.FAIL, "graded maximal ideal that is not graded prime", tuple(bad))
    return Finding(Outcome.PASS, f"{len(maximal)} graded maximal ideals, all graded prime")


@register("2.4", "intersection of a chain of graded primes is graded prime")
def check_chains(graded: GradedNearRing, scope: IdealScope) -> Finding:
    primes = graded_primes(graded, scope)
    if not primes:
        return Finding(Outcome.NOT_APPLICABLE, "no graded prime ideals")
    prime_set = set(primes)
    seen = 0
    truncated = False
    bad = []
    stack = [[i] for i in range(len(primes))]
    while stack:
        chain = stack.pop()
        seen += 1
        if seen > CHAIN_LIMIT:
            truncated = True
            break
        meet = masks.full(graded.near_ring.order)
        for i in chain:
            meet &= primes[i]
        if meet not in prime_set:
            bad.append({"chain": [_subset(primes[i]) for i in chain]})
        last = primes[chain[-1]]
        for k in range(chain[-1] + 1, len(primes)):
            if masks.is_proper_subset(last, primes[k]):
                stack.append(chain + [k])
    parameters = {"chains": min(seen, CHAIN_LIMIT), "truncated": truncated}
    if bad:
        return Finding(Outcome.FAIL, "chain intersection is not graded prime", tuple(bad), parameters)
    return Finding(Outcome.PASS, f"{parameters['chains']} chains checked", (), parameters)


@register("2.4-cex", "intersection of incomparable graded primes need not be graded prime")
def check_incomparable(graded: GradedNearRing, scope: IdealScope) -> Finding:
    primes = graded_primes(graded, scope)
    prime_set = set(primes)
    pairs = [(a, b) for a, b in itertools.combinations(primes, 2)
             if not masks.is_subset(a, b) and not masks.is_subset(b, a)]
    if not pairs:
        return Finding(Outcome.NOT_APPLICABLE, "no incomparable graded primes")
    hits = [{"P1": _subset(a), "P2": _subset(b), "meet": _subset(a & b),
             "witness": _not_prime_witness(graded, a & b, scope)}
            for a, b in pairs if a & b not in prime_set]
    if hits:
        return Finding(Outcome.EXPECTED_FAIL, "incomparable graded primes meet in a non-prime", tuple(hits))
    return Finding(Outcome.PASS, f"{len(pairs)} incomparable pairs meet in graded primes")


@register("2.5", "componentwise powers descend into intersections of graded primes")
def check_component_powers(graded: GradedNearRing, scope: IdealScope) -> Finding:
    primes = graded_primes(graded, scope)
    if not primes:
        return Finding(Outcome.NOT_APPLICABLE, "no graded prime ideals")
    max_exponent = graded.near_ring.order
    bad = []
    meets = _intersection_closure(primes)
    for p in meets:
        for j in ideal_masks(graded.near_ring):
            bad.extend(_power_violations(graded, p, j, max_exponent))
    parameters = {"intersections": len(meets), "max_exponent": max_exponent}
    if bad:
        return Finding(Outcome.FAIL, "(J_g)^n inside P without J_g inside P", tuple(bad), parameters)
    return Finding(Outcome.PASS, "", (), parameters)


@register("2.6", "powers of ideals descend into intersections of graded primes")
def check_whole_powers(graded: GradedNearRing, scope: IdealScope) -> Finding:
    primes = graded_primes(graded, scope)
    if not primes:
        return Finding(Outcome.NOT_APPLICABLE, "no graded prime ideals")
    max_exponent = graded.near_ring.order
    meets = _intersection_closure(primes)
    graded_hits, ungraded_hits = [], []
    for p in meets:
        for j in ideal_masks(graded.near_ring):
            hit = _whole_power_violation(graded, p, j, max_exponent)
            if hit is None:
                continue
            if is_graded_ideal(graded, j):
                graded_hits.append(hit)
            else:
                ungraded_hits.append(hit)
    parameters = {"intersections": len(meets), "max_exponent": max_exponent}
    if graded_hits:
        return Finding(Outcome.FAIL, "graded J with J^n inside P but not J", tuple(graded_hits), parameters)
    if ungraded_hits:
        first = ungraded_hits[0]
        labels = graded.near_ring.format(masks.from_indices(first["J"]))
        detail = (f"counterexample with ungraded J: J = {labels} {first['J']} is not inside "
                  f"P = {first['P']} but J^{first['n']} is; {len(ungraded_hits)} such pairs, "
                  f"no graded J escapes")
        return Finding(Outcome.EXPECTED_FAIL, detail, tuple(ungraded_hits), parameters)
    return Finding(Outcome.PASS, "", (), parameters)


@register("2.6-note", "graded ideals that are prime are graded prime")
def check_prime_is_graded_prime(graded: GradedNearRing, scope: IdealScope) -> Finding:
    graded_set = set(proper_graded_ideals(graded))
    candidates = [p for p in prime_ideals(graded.near_ring) if p in graded_set]
    if not candidates:
        return Finding(Outcome.NOT_APPLICABLE, "no prime graded ideals")
    primes = _gp_set(graded, scope)
    bad = [{"P": _subset(p), "witness": _not_prime_witness(graded, p, scope)}
           for p in candidates if p not in primes]
    if bad:
        return Finding(Outcome.FAIL, "prime graded ideal that is not graded prime", tuple(bad))
    return Finding(Outcome.PASS, f"{len(candidates)} prime graded ideals")


@register("2.7-analog", "a graded prime ideal need not be prime")
def check_graded_prime_not_prime(graded: GradedNearRing, scope: IdealScope) -> Finding:
    found = []
    for p in graded_primes(graded, scope):
        report = is_prime_ideal(graded.near_ring, p)
        if not report.verdict:
            found.append({"P": _subset(p), "A": _subset(report.witness["A"]), "B": _subset(report.witness["B"])})
    if found:
        return Finding(Outcome.PASS, "graded prime ideal that is not prime", tuple(found))
    return Finding(Outcome.NOT_APPLICABLE, "every graded prime ideal here is prime")


# --- Checker agreement ---
def _agreement(graded: GradedNearRing, scope: IdealScope, checkers: Sequence[str]):
    disagreements, bad_replays = [], []
    ideals = proper_graded_ideals(graded)
    for p in ideals:
        reports = {c: run_checker(graded, p, c, scope) for c in ("def",) + tuple(checkers)}
        verdicts = {c: r.verdict for c, r in reports.items()}
        if len(set(verdicts.values())) > 1:
            disagreements.append({"P": _subset(p), "verdicts": verdicts})
        for c, r in reports.items():
            if not r.verdict and not replay_witness(graded, r):
                bad_replays.append({"P": _subset(p), "checker": c, "witness": r.witness})
    return ideals, disagreements, bad_replays


@register("2.8", "equivalent forms of graded primeness agree")
def check_equivalent_forms(graded: GradedNearRing, scope: IdealScope) -> Finding:
    ideals, disagreements, bad_replays = _agreement(graded, scope, ("homog", "t28c2", "t28c3"))
    if not ideals:
        return Finding(Outcome.NOT_APPLICABLE, "no proper graded ideals")
    if disagreements or bad_replays:
        return Finding(Outcome.FAIL, "checkers disagree or a witness does not replay",
                       tuple(disagreements + bad_replays))
    return Finding(Outcome.PASS, f"{len(ideals)} ideals, 4 checkers agree", (), {"ideals": len(ideals)})


@register("2.9", "element and colon characterisations match the definition")
def check_colon_forms(graded: GradedNearRing, scope: IdealScope) -> Finding:
    ideals, disagreements, bad_replays = _agreement(graded, scope, ("p29", "p29c2"))
    if not ideals:
        return Finding(Outcome.NOT_APPLICABLE, "no proper graded ideals")
    if bad_replays:
        return Finding(Outcome.FAIL, "a witness does not replay", tuple(bad_replays))
    if disagreements:
        return Finding(Outcome.DIVERGED, "element forms disagree with the definition", tuple(disagreements))
    return Finding(Outcome.PASS, f"{len(ideals)} ideals agree", (), {"ideals": len(ideals)})


@register("2.13", "nonzero components have nonzero products in the quotient")
def check_quotient_products(graded: GradedNearRing, scope: IdealScope) -> Finding:
    ideals, disagreements, bad_replays = _agreement(graded, scope, ("p213",))
    if not ideals:
        return Finding(Outcome.NOT_APPLICABLE, "no proper graded ideals")
    if disagreements or bad_replays:
        return Finding(Outcome.FAIL, "quotient test disagrees with the definition",
                       tuple(disagreements + bad_replays))
    return Finding(Outcome.PASS, f"{len(ideals)} ideals agree", (), {"ideals": len(ideals)})


# --- Homomorphisms and quotients ---
@register("2.10", "surjective component-respecting homomorphisms transport graded primes")
def check_hom_transport(graded: GradedNearRing, scope: IdealScope) -> Finding:
    homs = list(_applicable_homs(graded))
    if not homs:
        return Finding(Outcome.NOT_APPLICABLE, "no surjective homomorphism respecting components")
    source_primes = _gp_set(graded, scope)
    source_graded = set(graded_ideal_masks(graded))
    bad = []
    for label, hom, target in homs:
        for q in graded_primes(target, scope):
            back = preimage(hom, q)
            if back not in source_graded or back not in source_primes:
                bad.append({"hom": label, "direction": "preimage", "Q": _subset(q), "P": _subset(back)})
        target_primes = _gp_set(target, scope)
        for p in source_primes:
            if not masks.is_subset(hom.kernel, p):
                continue
            forward = image(hom, p)
            if forward not in target_primes:
                bad.append({"hom": label, "direction": "image", "P": _subset(p), "Q": _subset(forward)})
    parameters = {"homomorphisms": [label for label, _, _ in homs]}
    if bad:
        return Finding(Outcome.FAIL, "graded prime not transported", tuple(bad), parameters)
    return Finding(Outcome.PASS, f"{len(homs)} homomorphisms", (), parameters)


@register("2.11", "preimages of quotient ideals meet components as expected")
def check_component_preimages(graded: GradedNearRing, scope: IdealScope) -> Finding:
    ideals = proper_graded_ideals(graded)
    if not ideals:
        return Finding(Outcome.NOT_APPLICABLE, "no proper graded ideals")
    bad = []
    for q in ideals:
        mismatch = component_preimage_mismatch(_quotient(graded, q), graded)
        if mismatch is not None:
            j, g, form = mismatch
            bad.append({"Q": _subset(q), "J": _subset(j), "g": g, "form": form})
    if bad:
        return Finding(Outcome.FAIL, "preimage identity fails", tuple(bad))
    return Finding(Outcome.PASS, f"{len(ideals)} quotients", (), {"quotients": len(ideals)})


@register("2.12", "P is graded prime exactly when its image in N/Q is")
def check_quotient_correspondence(graded: GradedNearRing, scope: IdealScope) -> Finding:
    ideals = proper_graded_ideals(graded)
    pairs = [(q, p) for q in ideals for p in ideals if masks.is_subset(q, p)]
    if not pairs:
        return Finding(Outcome.NOT_APPLICABLE, "no nested proper graded ideals")
    primes = _gp_set(graded, scope)
    bad = []
    for q, p in pairs:
        structure = _quotient(graded, q)
        projected = image(structure.projection, p)
        downstairs = projected in _gp_set(structure.graded, scope)
        if (p in primes) != downstairs:
            if downstairs:
                witness = {"in": "N", **_not_prime_witness(graded, p, scope)}
            else:
                witness = {"in": "N/Q", **_not_prime_witness(structure.graded, projected, scope)}
            bad.append({"Q": _subset(q), "P": _subset(p), "upstairs": p in primes, "downstairs": downstairs,
                        "witness": witness})
    if bad:
        return Finding(Outcome.FAIL, "correspondence breaks", tuple(bad))
    return Finding(Outcome.PASS, f"{len(pairs)} pairs", (), {"pairs": len(pairs)})


@register("2.14", "I is graded prime exactly when zero is graded prime in N/I")
def check_zero_in_quotient(graded: GradedNearRing, scope: IdealScope) -> Finding:
    ideals = proper_graded_ideals(graded)
    if not ideals:
        return Finding(Outcome.NOT_APPLICABLE, "no proper graded ideals")
    primes = _gp_set(graded, scope)
    bad = []
    for i in ideals:
        target = _quotient(graded, i).graded
        zero_prime = target.near_ring.zero_mask in _gp_set(target, scope)
        if zero_prime != (i in primes):
            if zero_prime:
                witness = {"in": "N", **_not_prime_witness(graded, i, scope)}
            else:
                witness = {"in": "N/I", **_not_prime_witness(target, target.near_ring.zero_mask, scope)}
            bad.append({"I": _subset(i), "ideal_prime": i in primes, "zero_prime": zero_prime,
                        "witness": witness})
    if bad:
        return Finding(Outcome.FAIL, "zero of N/I disagrees with I", tuple(bad))
    return Finding(Outcome.PASS, f"{len(ideals)} quotients")


@register("2.15", "graded maximal ideals are graded prime unless N² ⊆ I")
def check_maximal(graded: GradedNearRing, scope: IdealScope) -> Finding:
    maximal = _graded_maximal(graded)
    if not maximal:
        return Finding(Outcome.NOT_APPLICABLE, "no maximal ideal is graded")
    square = set_power(graded.near_ring, graded.near_ring.full_mask, 2)
    primes = _gp_set(graded, scope)
    bad = [{"I": _subset(m), "witness": _not_prime_witness(graded, m, scope)}
           for m in maximal if m not in primes and not masks.is_subset(square, m)]
    if bad:
        return Finding(Outcome.FAIL, "graded maximal ideal neither graded prime nor above N²", tuple(bad))
    return Finding(Outcome.PASS, f"{len(maximal)} graded maximal ideals")


@register("2.16", "with unity, graded maximal ideals are graded prime")
def check_maximal_with_unity(graded: GradedNearRing, scope: IdealScope) -> Finding:
    if graded.near_ring.one is None:
        return Finding(Outcome.NOT_APPLICABLE, "no multiplicative identity")
    return check_maximal(graded, scope)


@register("2.17", "kernels are graded prime when zero is graded prime in the target")
def check_kernel(graded: GradedNearRing, scope: IdealScope) -> Finding:
    relevant = [(label, hom, target) for label, hom, target in _applicable_homs(graded)
                if target.near_ring.zero_mask in _gp_set(target, scope)]
    if not relevant:
        return Finding(Outcome.NOT_APPLICABLE, "no homomorphism onto a target whose zero is graded prime")
    primes = _gp_set(graded, scope)
    bad = [{"hom": label, "kernel": _subset(hom.kernel)} for label, hom, _ in relevant
           if hom.kernel not in primes]
    if bad:
        return Finding(Outcome.FAIL, "kernel is not graded prime", tuple(bad))
    return Finding(Outcome.PASS, f"{len(relevant)} homomorphisms")


@register("2.17-converse", "zero graded prime in the target does not make it graded prime in the source")
def check_kernel_converse(graded: GradedNearRing, scope: IdealScope) -> Finding:
    homs = list(_applicable_homs(graded))
    if not homs:
        return Finding(Outcome.NOT_APPLICABLE, "no surjective homomorphism respecting components")
    zero = graded.near_ring.zero_mask
    if zero in _gp_set(graded, scope):
        return Finding(Outcome.PASS, f"{len(homs)} homomorphisms, zero is graded prime in the source")
    hits = [{"hom": label, "zero": _subset(zero), "witness": _not_prime_witness(graded, zero, scope)}
            for label, hom, target in homs if target.near_ring.zero_mask in _gp_set(target, scope)]
    if hits:
        return Finding(Outcome.EXPECTED_FAIL, "zero graded prime downstairs only", tuple(hits))
    return Finding(Outcome.PASS, f"{len(homs)} homomorphisms")


# --- Products ---
def _product_guard(graded: GradedNearRing, unital: bool = False) -> Optional[Finding]:
    if graded.factors is None:
        return Finding(Outcome.NOT_APPLICABLE, "not a componentwise product")
    if unital and not _factors_unital(graded):
        return Finding(Outcome.NOT_APPLICABLE, "a factor has no multiplicative identity")
    return None


@register("2.18", "P × M is graded prime exactly when P is")
def check_product_factor(graded: GradedNearRing, scope: IdealScope) -> Finding:
    guard = _product_guard(graded, unital=True)
    if guard:
        return guard
    first, second = graded.factors
    primes = _gp_set(graded, scope)
    bad = []
    for p in proper_graded_ideals(first):
        boxed = box_mask(first, second, p, second.near_ring.full_mask)
        if (p in _gp_set(first, scope)) != (boxed in primes):
            bad.append({"factor": 1, "P": _subset(p)})
    for j in proper_graded_ideals(second):
        boxed = box_mask(first, second, first.near_ring.full_mask, j)
        if (j in _gp_set(second, scope)) != (boxed in primes):
            bad.append({"factor": 2, "P": _subset(j)})
    if bad:
        return Finding(Outcome.FAIL, "factor primeness not reflected", tuple(bad))
    return Finding(Outcome.PASS)


@register("2.18-note", "a product of two graded primes is not graded prime")
def check_product_of_primes(graded: GradedNearRing, scope: IdealScope) -> Finding:
    guard = _product_guard(graded)
    if guard:
        return guard
    first, second = graded.factors
    pairs = list(itertools.product(graded_primes(first, scope), graded_primes(second, scope)))
    if not pairs:
        return Finding(Outcome.NOT_APPLICABLE, "a factor has no graded primes")
    primes = _gp_set(graded, scope)
    boxes = [(a, b, box_mask(first, second, a, b)) for a, b in pairs]
    hits = [{"P1": _subset(a), "P2": _subset(b), "box": _subset(box),
             "witness": _not_prime_witness(graded, box, scope)}
            for a, b, box in boxes if box not in primes]
    if hits:
        return Finding(Outcome.EXPECTED_FAIL, "P1 × P2 is not graded prime", tuple(hits))
    return Finding(Outcome.PASS)


@register("2.19", "graded ideals of a product factor into graded primes")
def check_factorisation(graded: GradedNearRing, scope: IdealScope) -> Finding:
    guard = _product_guard(graded, unital=True)
    if guard:
        return guard
    parameters = {"bound": FACTOR_BOUND}
    for position, factor in enumerate(graded.factors, start=1):
        missing = _unfactored(factor, scope, FACTOR_BOUND)
        if missing:
            return Finding(Outcome.NOT_APPLICABLE, f"factor {position} has ideals without a factorisation",
                           tuple({"factor": position, "I": _subset(m)} for m in missing), parameters)
    missing = _unfactored(graded, scope, FACTOR_BOUND)
    if missing:
        return Finding(Outcome.FAIL, f"no factorisation with at most {FACTOR_BOUND} graded primes",
                       tuple({"I": _subset(m)} for m in missing), parameters)
    return Finding(Outcome.PASS, "", (), parameters)


@register("2.20", "graded primes of a product are P × M or N × Q")
def check_product_primes(graded: GradedNearRing, scope: IdealScope) -> Finding:
    guard = _product_guard(graded, unital=True)
    if guard:
        return guard
    first, second = graded.factors
    expected = {box_mask(first, second, p, second.near_ring.full_mask) for p in graded_primes(first, scope)}
    expected |= {box_mask(first, second, first.near_ring.full_mask, q) for q in graded_primes(second, scope)}
    actual = _gp_set(graded, scope)
    bad = [{"I": _subset(m), "graded_prime": m in actual,
            "witness": {} if m in actual else _not_prime_witness(graded, m, scope)}
           for m in masks.canonical_order(expected ^ actual)]
    if bad:
        return Finding(Outcome.FAIL, "graded primes of the product differ from the box forms", tuple(bad))
    return Finding(Outcome.PASS, f"{len(actual)} graded primes")


def _nontrivial_factors(graded: GradedNearRing) -> bool:
    return all(f.near_ring.order > 1 for f in graded.factors)


@register("2.21", "the zero ideal of a product of nontrivial factors is not graded prime")
def check_product_zero(graded: GradedNearRing, scope: IdealScope) -> Finding:
    guard = _product_guard(graded)
    if guard:
        return guard
    if not _nontrivial_factors(graded):
        return Finding(Outcome.NOT_APPLICABLE, "a factor is trivial")
    witness = _not_prime_witness(graded, graded.near_ring.zero_mask, scope)
    if not witness:
        return Finding(Outcome.FAIL, "zero ideal of the product is graded prime")
    return Finding(Outcome.PASS, "zero ideal is not graded prime", (witness,))


@register("2.22", "a product of nontrivial factors is not graded-fully-prime")
def check_not_fully_prime(graded: GradedNearRing, scope: IdealScope) -> Finding:
    guard = _product_guard(graded)
    if guard:
        return guard
    if not _nontrivial_factors(graded):
        return Finding(Outcome.NOT_APPLICABLE, "a factor is trivial")
    primes = _gp_set(graded, scope)
    for m in proper_graded_ideals(graded):
        if m not in primes:
            return Finding(Outcome.PASS, "proper graded ideal that is not graded prime",
                           ({"I": _subset(m), "witness": _not_prime_witness(graded, m, scope)},))
    return Finding(Outcome.FAIL, "every proper graded ideal is graded prime")


# --- Entry points ---
def list_checks() -> List[str]:
    return list(CHECKS)


def _resolve(structure: Union[str, CorpusEntry, GradedNearRing]) -> GradedNearRing:
    if isinstance(structure, str):
        return get_entry(structure).structure
    if isinstance(structure, CorpusEntry):
        return structure.structure
    return structure


def check(check_id: str, structure: Union[str, CorpusEntry, GradedNearRing],
          scope: IdealScope = IdealScope.ALL) -> TheoremCheck:
    """Run one registered check on one structure

    Raises:
        UnknownTheoremId: `check_id` is not registered.
    """
    try:
        definition = CHECKS[check_id]
    except KeyError:
        raise UnknownTheoremId(f"unknown theorem id '{check_id}' (known: {', '.join(CHECKS)})")
    graded = _resolve(structure)
    scope = IdealScope(scope)
    finding = definition.runner(graded, scope)
    logger.info(f"{check_id} on {graded.name}: {finding.outcome.value}")
    return TheoremCheck(check_id=check_id, title=definition.title, structure=graded.name,
                        outcome=finding.outcome, detail=finding.detail,
                        witnesses=list(finding.witnesses), parameters=dict(finding.parameters))


def run_all(structures: Optional[Sequence[Union[str, GradedNearRing]]] = None,
            check_ids: Optional[Sequence[str]] = None,
            scope: IdealScope = IdealScope.ALL,
            workers: Optional[int] = None) -> HarnessReport:
    """Run checks over structures; results come back in (structure, check) order"""
    targets = [_resolve(s) for s in (structures if structures is not None else list_entries())]
    ids = list(check_ids) if check_ids is not None else list_checks()
    for check_id in ids:
        if check_id not in CHECKS:
            raise UnknownTheoremId(f"unknown theorem id '{check_id}'")
    tasks = [(check_id, target) for target in targets for check_id in ids]
    workers = resolve_workers(workers)
    if workers == 1:
        results = [check(check_id, target, scope) for check_id, target in tasks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(lambda task: check(task[0], task[1], scope), tasks))
    report = HarnessReport(checks=results, scope=IdealScope(scope))
    if report.failures:
        logger.warning(f"{len(report.failures)} unexpected failures")
    return report
