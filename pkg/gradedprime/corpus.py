"""Built-in structures used by the harness and the CLI.

Every entry is built from tables and certified by the validators; nothing
here is trusted without going through validate_near_ring and
validate_grading.
"""
import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, List, Tuple

from .constructions import NearRingHom, cyclic_reduction_hom, direct_product
from .errors import UnknownStructure
from .grading import GradedNearRing, make_graded, trivial_grading, trivial_monoid
from .structures import (
    FiniteMonoid, FiniteNearRing, left_distributivity_witness, validate_monoid, validate_near_ring,
)
from . import masks

# Set up logging
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    structure: GradedNearRing
    notes: str = ""


# --- Monoids ---
def or_monoid() -> FiniteMonoid:
    """({0, 1}, OR) with identity 0"""
    return validate_monoid(2, [[0, 1], [1, 1]], 0, name="or")


def multiplicative_monoid() -> FiniteMonoid:
    """({0, 1}, ·) with identity 1"""
    return validate_monoid(2, [[0, 0], [0, 1]], 1, name="mult")


def cyclic_group_monoid(n: int) -> FiniteMonoid:
    return validate_monoid(n, [[(a + b) % n for b in range(n)] for a in range(n)], 0, name=f"c{n}")


MONOIDS: Dict[str, Callable[[], FiniteMonoid]] = {
    "trivial": trivial_monoid,
    "or": or_monoid,
    "mult": multiplicative_monoid,
    "c2": lambda: cyclic_group_monoid(2),
}


# --- Carriers ---
def cyclic_near_ring(n: int) -> FiniteNearRing:
    """The ring Z_n"""
    add = [[(a + b) % n for b in range(n)] for a in range(n)]
    mul = [[(a * b) % n for b in range(n)] for a in range(n)]
    return validate_near_ring(n, add, mul, name=f"z{n}")


def map_near_ring(k: int) -> FiniteNearRing:
    """All maps Z_k -> Z_k under pointwise addition and composition

    The map f has index f(0) + f(1)k + f(2)k² + ...; (fg)(x) = f(g(x)).
    """
    maps = list(itertools.product(range(k), repeat=k))
    index = {f: sum(v * k ** x for x, v in enumerate(f)) for f in maps}
    ordered = sorted(maps, key=lambda f: index[f])
    n = len(ordered)
    add = [[index[tuple((f[x] + g[x]) % k for x in range(k))] for g in ordered] for f in ordered]
    mul = [[index[tuple(f[g[x]] for x in range(k))] for g in ordered] for f in ordered]
    labels = ["(" + ",".join(str(v) for v in f) + ")" for f in ordered]
    return validate_near_ring(n, add, mul, labels=labels, name=f"mz{k}")


def _gaussian_label(a: int, b: int) -> str:
    if b == 0:
        return str(a)
    imaginary = "i" if b == 1 else f"{b}i"
    return imaginary if a == 0 else f"{a}+{imaginary}"


def gaussian_near_ring(n: int) -> FiniteNearRing:
    """Z[i]/(n); a + bi has index a + n*b"""
    pairs = [(a, b) for b in range(n) for a in range(n)]

    def index(a, b):
        return a % n + n * (b % n)

    add = [[index(a1 + a2, b1 + b2) for (a2, b2) in pairs] for (a1, b1) in pairs]
    mul = [[index(a1 * a2 - b1 * b2, a1 * b2 + a2 * b1) for (a2, b2) in pairs] for (a1, b1) in pairs]
    labels = [_gaussian_label(a, b) for (a, b) in pairs]
    return validate_near_ring(n * n, add, mul, labels=labels, name=f"gauss{n}")


def symmetric_group_zero_near_ring() -> FiniteNearRing:
    """S_3 under composition with every product equal to the identity"""
    perms = list(itertools.permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    add = [[index[tuple(p[q[x]] for x in range(3))] for q in perms] for p in perms]
    mul = [[0] * len(perms) for _ in perms]
    labels = ["".join(str(v) for v in p) for p in perms]
    return validate_near_ring(len(perms), add, mul, labels=labels, name="s3-zero")


# --- Graded entries ---
def cyclic_graded(n: int, grading: str = "or") -> CorpusEntry:
    """Z_n graded by OR (N_0 = Z_n, N_1 = {0}), by ({0,1},·) (N_0 = {0}, N_1 = Z_n)
    or trivially"""
    near_ring = cyclic_near_ring(n)
    name = f"z{n}-{grading}"
    notes = f"Z_{n} with the {grading} grading"
    full, zero = near_ring.full_mask, near_ring.zero_mask
    if grading == "or":
        graded = make_graded(near_ring, or_monoid(), [full, zero], name=name, notes=notes)
    elif grading == "mult":
        graded = make_graded(near_ring, multiplicative_monoid(), [zero, full], name=name, notes=notes)
    elif grading == "trivial":
        graded = trivial_grading(near_ring, name=name, notes=notes)
    else:
        raise UnknownStructure(f"unknown grading '{grading}' for Z_{n}")
    return CorpusEntry(name=name, structure=graded, notes=notes)


def map_graded(k: int, grading: str = "trivial") -> CorpusEntry:
    near_ring = map_near_ring(k)
    name = f"mz{k}" if grading == "trivial" else f"mz{k}-{grading}"
    a, b, c = left_distributivity_witness(near_ring)
    notes = (f"maps Z_{k} -> Z_{k} under pointwise + and composition; "
             f"not left distributive: a(b+c) != ab+ac at (a, b, c) = ({a}, {b}, {c})")
    if grading == "trivial":
        graded = trivial_grading(near_ring, name=name, notes=notes)
    elif grading == "or":
        # The OR identity 0 carries {0}; the absorbing grade carries everything
        graded = make_graded(near_ring, or_monoid(), [near_ring.zero_mask, near_ring.full_mask],
                             name=name, notes=notes)
    else:
        raise UnknownStructure(f"unknown grading '{grading}' for M(Z_{k})")
    return CorpusEntry(name=name, structure=graded, notes=notes)


def gaussian_mod(n: int) -> CorpusEntry:
    """Z[i]/(n) graded by Z_2: real parts in grade 0, imaginary parts in grade 1"""
    near_ring = gaussian_near_ring(n)
    reals = masks.from_indices(range(n))
    imaginaries = masks.from_indices(n * b for b in range(n))
    notes = f"Gaussian integers mod {n}, graded by Z_2"
    if n in (2, 4):
        notes += "; has a graded-prime ideal that is not prime"
    graded = make_graded(near_ring, cyclic_group_monoid(2), [reals, imaginaries], name=f"gauss{n}", notes=notes)
    return CorpusEntry(name=f"gauss{n}", structure=graded, notes=notes)


def zero_product(group: str = "s3") -> CorpusEntry:
    if group != "s3":
        raise UnknownStructure(f"unknown group '{group}' for a zero-product near-ring")
    notes = "non-abelian S_3 with zero multiplication; ideals are the normal subgroups"
    graded = trivial_grading(symmetric_group_zero_near_ring(), name="s3-zero", notes=notes)
    return CorpusEntry(name="s3-zero", structure=graded, notes=notes)


def product_entry(first: str, second: str, name: str) -> CorpusEntry:
    left, right = get_entry(first).structure, get_entry(second).structure
    notes = f"componentwise product {first} × {second}"
    graded = direct_product(left, right, name=name, notes=notes)
    return CorpusEntry(name=name, structure=graded, notes=notes)


def z2_multiplicative() -> CorpusEntry:
    """Z_2 over ({0,1}, ·): the identity grade 1 carries Z_2, the absorbing grade 0 carries {0}"""
    return cyclic_graded(2, "mult")


def z2_product() -> CorpusEntry:
    return product_entry("z2-mult", "z2-mult", "z2xz2")


CORPUS_BUILDERS: Dict[str, Callable[[], CorpusEntry]] = {
    "z1-or": lambda: cyclic_graded(1, "or"),
    "z2-or": lambda: cyclic_graded(2, "or"),
    "z2-mult": z2_multiplicative,
    "z6-or": lambda: cyclic_graded(6, "or"),
    "z8-or": lambda: cyclic_graded(8, "or"),
    "mz2": lambda: map_graded(2, "trivial"),
    "mz2-or": lambda: map_graded(2, "or"),
    "mz3": lambda: map_graded(3, "trivial"),
    "mz3-or": lambda: map_graded(3, "or"),
    "gauss2": lambda: gaussian_mod(2),
    "gauss3": lambda: gaussian_mod(3),
    "gauss4": lambda: gaussian_mod(4),
    "s3-zero": lambda: zero_product("s3"),
    "z2xz2": z2_product,
    "z6xz2": lambda: product_entry("z6-or", "z2-or", "z6xz2"),
}


def list_entries() -> List[str]:
    return list(CORPUS_BUILDERS)


@lru_cache(maxsize=None)
def get_entry(name: str) -> CorpusEntry:
    """Build (once) and return a corpus entry by name

    Raises:
        UnknownStructure: no entry of that name.
    """
    try:
        builder = CORPUS_BUILDERS[name]
    except KeyError:
        raise UnknownStructure(f"unknown corpus entry '{name}' (known: {', '.join(CORPUS_BUILDERS)})")
    entry = builder()
    logger.debug(f"Built corpus entry {name} (order {entry.structure.near_ring.order})")
    return entry


def corpus() -> List[CorpusEntry]:
    return [get_entry(name) for name in CORPUS_BUILDERS]


# --- Homomorphisms between entries ---
def reduction_pairs() -> List[Tuple[str, str, str]]:
    """(label, source entry, target entry) for the built-in cyclic reductions"""
    return [("z8-or -> z2-or", "z8-or", "z2-or")]


def reduction_hom(source: str, target: str) -> NearRingHom:
    return cyclic_reduction_hom(get_entry(source).structure.near_ring,
                                get_entry(target).structure.near_ring)


def product_pairs() -> List[Tuple[str, str]]:
    """Factor names of the built-in product entries"""
    return [("z2-mult", "z2-mult"), ("z6-or", "z2-or")]
