"""Handlers behind each CLI subcommand.

Every handler takes the parsed argparse namespace, prints its result and
returns a process exit code. Errors propagate as GradedPrimeError and are
turned into exit codes by main().
"""
import logging
from pathlib import Path
from typing import Callable, Dict, Optional, Union

from .constructions import (
    direct_product, hom_respects_components, quotient, validate_hom,
)
from .corpus import get_entry, list_entries
from .documents import as_graded, dumps, load, to_document
from .errors import EXIT_OK, DocumentError, MalformedTable
from .grading import GradedNearRing, graded_ideal_masks, homogeneous_elements
from .harness import run_all
from .ideals import IdealScope, enumerate_normal_subgroups, ideal_generated_by, ideal_masks
from .primality import is_prime_ideal, proper_graded_ideals, run_checker
from .structures import FiniteMonoid, FiniteNearRing, diagnostics
from . import masks
from . import ui_manager as ui

# Set up logging
logger = logging.getLogger(__name__)


def load_structure(reference: str) -> Union[FiniteMonoid, FiniteNearRing, GradedNearRing]:
    """A document path, or failing that a corpus entry name"""
    path = Path(reference)
    if path.exists():
        return load(path)
    if reference in list_entries():
        return get_entry(reference).structure
    raise DocumentError(f"'{reference}' is neither a readable file nor a corpus entry")


def load_graded(reference: str) -> GradedNearRing:
    return as_graded(load_structure(reference))


def _emit(document: Dict, out: Optional[str] = None) -> None:
    text = dumps(document)
    if out:
        Path(out).write_text(text, encoding="utf-8")
        ui.console.print(f"[green]Wrote[/green] {out}")
    else:
        ui.print_raw(text)


def handle_validate(args) -> int:
    """Load a document; loading runs every validator"""
    structure = load_structure(args.file)
    if isinstance(structure, FiniteMonoid):
        ui.print_diagnostics(structure.name or args.file, {"order": structure.order, "identity": structure.identity})
        return EXIT_OK
    graded = as_graded(structure)
    extra = {}
    if isinstance(structure, GradedNearRing):
        near_ring = structure.near_ring
        extra = {
            "monoid": structure.monoid.name or f"order {structure.monoid.order}",
            "components": ", ".join(near_ring.format(c) for c in structure.components),
            "homogeneous": near_ring.format(homogeneous_elements(structure)),
        }
    ui.print_diagnostics(graded.name or args.file, diagnostics(graded.near_ring), extra)
    return EXIT_OK


def handle_ideals(args) -> int:
    graded = load_graded(args.file)
    near_ring = graded.near_ring
    if args.normal_subgroups:
        rows, title = enumerate_normal_subgroups(near_ring), "Normal subgroups"
    elif args.graded:
        rows, title = graded_ideal_masks(graded), "Graded ideals"
    else:
        rows, title = ideal_masks(near_ring), "Ideals"
    if args.format == "json":
        _emit({"kind": "subsets", "structure": graded.name, "title": title,
               "subsets": [masks.members(m) for m in rows]})
    else:
        ui.print_subsets(near_ring, rows, f"{title} of {graded.name}")
    return EXIT_OK


def handle_primes(args) -> int:
    graded = load_graded(args.file)
    near_ring = graded.near_ring
    if args.graded:
        candidates = proper_graded_ideals(graded)
        reports = [run_checker(graded, p, args.checker, IdealScope(args.scope)) for p in candidates]
        title = f"Graded primeness ({args.checker}, scope {args.scope})"
    else:
        candidates = [m for m in ideal_masks(near_ring) if m != near_ring.full_mask]
        reports = [is_prime_ideal(near_ring, p) for p in candidates]
        title = "Primeness"
    if args.format == "json":
        _emit({"kind": "primality", "structure": graded.name, "checker": args.checker if args.graded else "prime",
               "ideals": [{"ideal": masks.members(r.ideal), "verdict": r.verdict, "witness": r.witness}
                          for r in reports]})
    else:
        ui.print_subsets(near_ring, candidates, f"{title} of {graded.name}", {
            "Verdict": [r.verdict for r in reports],
            "Witness": ["-" if r.witness is None else
                        ", ".join(f"{k}={v}" for k, v in sorted(r.witness.items())) for r in reports],
        })
    return EXIT_OK


def handle_generate(args) -> int:
    graded = load_graded(args.file)
    near_ring = graded.near_ring
    subset = masks.parse_indices(args.elements, near_ring.order)
    ideal = ideal_generated_by(near_ring, subset)
    ui.print_subsets(near_ring, [ideal.mask], f"Ideal generated by {near_ring.format(subset)}")
    return EXIT_OK


def handle_quotient(args) -> int:
    structure = load_structure(args.file)
    graded = as_graded(structure)
    subset = masks.parse_indices(args.ideal, graded.near_ring.order)
    result = quotient(graded, subset).graded
    document = to_document(result if isinstance(structure, GradedNearRing) else result.near_ring)
    _emit(document, args.out)
    return EXIT_OK


def handle_product(args) -> int:
    first, second = load_graded(args.first), load_graded(args.second)
    _emit(to_document(direct_product(first, second, name=args.name)), args.out)
    return EXIT_OK


def handle_corpus(args) -> int:
    if args.corpus_command == "list":
        for name in list_entries():
            entry = get_entry(name)
            ui.console.print(f"[cyan]{name}[/cyan] (order {entry.structure.near_ring.order}) {entry.notes}",
                             highlight=False)
        return EXIT_OK
    if args.all:
        if not args.out:
            raise DocumentError("--all needs --out DIR")
        directory = Path(args.out)
        directory.mkdir(parents=True, exist_ok=True)
        for name in list_entries():
            (directory / f"{name}.json").write_text(dumps(to_document(get_entry(name).structure)), encoding="utf-8")
        ui.console.print(f"[green]Wrote[/green] {len(list_entries())} documents to {directory}")
        return EXIT_OK
    if not args.name:
        raise DocumentError("corpus emit needs an entry name or --all")
    _emit(to_document(get_entry(args.name).structure), args.out)
    return EXIT_OK


def handle_check(args) -> int:
    graded = load_graded(args.target)
    ids = None if args.theorem == "all" else [args.theorem]
    report = run_all([graded], ids, IdealScope(args.scope))
    if args.format == "json":
        ui.print_raw(dumps(report.to_document()))
    else:
        ui.print_harness_report(report)
    return report.exit_code


def handle_hom(args) -> int:
    source, target = load_graded(args.source), load_graded(args.target)
    try:
        mapping = [int(v) for v in args.map.split(",") if v.strip()]
    except ValueError:
        raise MalformedTable(f"cannot parse map '{args.map}'")
    hom = validate_hom(source.near_ring, target.near_ring, mapping)
    details = {
        "surjective": hom.surjective,
        "kernel": source.near_ring.format(hom.kernel),
    }
    if source.monoid.same_as(target.monoid):
        details["respects components"] = hom_respects_components(hom, source, target)
    ui.print_diagnostics(f"{source.name} -> {target.name}", details)
    return EXIT_OK


command_handlers: Dict[str, Callable] = {
    "validate": handle_validate,
    "ideals": handle_ideals,
    "primes": handle_primes,
    "generate": handle_generate,
    "quotient": handle_quotient,
    "product": handle_product,
    "corpus": handle_corpus,
    "check": handle_check,
    "hom": handle_hom,
}
