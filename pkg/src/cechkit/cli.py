"""Batch command line front end.

Commands: validate, cohomology, mv, fibred, bundles, count,
collapse-check, refine-check, gallery.  Global flags: --field P renders
the run over another prime (overriding the document), --report PATH
writes the structured report as canonical JSON.  Exit codes: 0 when every
verdict in the report holds, 1 on a verdict failure, 2 on input errors.
Structured reports are deterministic; wall time only appears in the
human-readable output.
"""

from __future__ import annotations

import argparse
import hashlib
import sys
import time
from pathlib import Path
from typing import Any

import numpy as np

from .bundles import (
    IncompatibleData,
    WrongField,
    cocycle_class,
    cocycles_equivalent,
    colimit_bundle,
    enumerate_line_bundles,
    glue_section_space,
    parallel_sections,
    restrict_bundle,
)
from .cochains import cohomology
from .complexes import components
from .diagrams import InvalidSystem, canonicalize, collapse, validate_system
from .documents import (
    ParseError,
    ParsedDocument,
    canonical_json,
    load_diagram,
    materialise_bundle,
    materialise_refinement,
)
from .fplinalg import FMatrix, NotPrime
from .gallery import GALLERY_NAMES, UnknownGallery, gallery_document
from .mv import (
    assemble_les,
    count_line_bundles,
    fibred_product,
    h1_fibred_check,
    inductive_fibred_dim,
    phi_star,
    total_cohomology,
    verify_exact_sequence,
)
from .refinements import induced_cohomology_map, naturality_check, validate_refinement


class UnknownCommand(ValueError):
    pass


def _digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def _key(t: tuple[str, ...]) -> str:
    return ",".join(t)


def _println(line: str = "") -> None:
    sys.stdout.write(line + "\n")


def _table(rows: list[tuple]) -> None:
    if not rows:
        return
    widths = [max(len(str(r[c])) for r in rows) for c in range(len(rows[0]))]
    for r in rows:
        _println("  " + "  ".join(str(v).ljust(w) for v, w in zip(r, widths)))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cechkit", description=__doc__)
    parser.add_argument("--field", type=int, default=None,
                        help="prime modulus overriding the document (default: document value)")
    parser.add_argument("--report", type=Path, default=None,
                        help="write the structured JSON report to this path")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, extra in (
        ("validate", ()),
        ("cohomology", ("qmax",)),
        ("mv", ()),
        ("fibred", ("q",)),
        ("bundles", ()),
        ("count", ()),
        ("collapse-check", ()),
        ("refine-check", ()),
    ):
        p = sub.add_parser(name)
        p.add_argument("path", type=Path)
        if "qmax" in extra:
            p.add_argument("--qmax", type=int, default=None)
        if "q" in extra:
            p.add_argument("--q", type=int, default=None)

    g = sub.add_parser("gallery")
    g.add_argument("name", type=str)
    g.add_argument("--n", type=int, default=2)
    g.add_argument("--seed", type=int, default=0)
    return parser


def _load(args) -> tuple[ParsedDocument, str]:
    data = Path(args.path).read_bytes()
    parsed = load_diagram(args.path, args.field)
    return parsed, _digest(data)


def _base_report(command: str, digest: str, field: int) -> dict[str, Any]:
    return {"command": command, "input_digest": digest, "field": field, "verdicts": {}}


def _cmd_validate(args) -> tuple[dict, int]:
    parsed, digest = _load(args)
    report = _base_report("validate", digest, parsed.system.field.p)
    verdict = validate_system(parsed.system)
    report["verdicts"]["valid"] = verdict.valid
    report["violations"] = [
        {"condition": v.condition, "message": v.message, "witness": list(v.witness)}
        for v in verdict.violations]
    _println(f"system valid: {verdict.valid}")
    for v in verdict.violations:
        _println(f"  [{v.condition}] {v.message}  witness={list(v.witness)}")
    return report, 0 if verdict.valid else 1


def _cmd_cohomology(args) -> tuple[dict, int]:
    parsed, digest = _load(args)
    diagram = canonicalize(parsed.system)
    q_max = args.qmax if args.qmax is not None else max(diagram.nerve.dim, 0)
    report = _base_report("cohomology", digest, diagram.field.p)
    union = [cohomology(diagram.nerve, q, diagram.field).dimension for q in range(q_max + 1)]
    report["global_labels"] = list(diagram.nerve.vertices)
    report["union_dims"] = union
    report["piece_dims"] = {
        pid: [cohomology(diagram.nerves[pid], q, diagram.field).dimension for q in range(q_max + 1)]
        for pid in diagram.piece_ids}
    report["intersection_dims"] = {}
    for size in range(2, diagram.n_pieces + 1):
        for t in diagram.index_subsets(size):
            nerve = diagram.intersection_nerve(t)
            report["intersection_dims"][_key(t)] = [
                cohomology(nerve, q, diagram.field).dimension for q in range(q_max + 1)]
    report["verdicts"]["h0_matches_components"] = union[0] == len(components(diagram.nerve))
    _println(f"global labels: {', '.join(diagram.nerve.vertices)}")
    _table([("space", *[f"H^{q}" for q in range(q_max + 1)]),
            ("union", *union)]
           + [(pid, *report["piece_dims"][pid]) for pid in diagram.piece_ids]
           + [(k, *v) for k, v in sorted(report["intersection_dims"].items())])
    ok = all(report["verdicts"].values())
    return report, 0 if ok else 1


def _cmd_mv(args) -> tuple[dict, int]:
    parsed, digest = _load(args)
    diagram = canonicalize(parsed.system)
    q_top = max(diagram.nerve.dim, 0)
    report = _base_report("mv", digest, diagram.field.p)

    ses = [verify_exact_sequence(diagram, q) for q in range(q_top + 1)]
    report["short_exact"] = [
        {"q": v.degree, "exact": v.exact,
         "positions": [{"position": r.position, "dim": r.dim, "incoming_rank": r.incoming_rank,
                        "outgoing_nullity": r.outgoing_nullity, "exact": r.exact}
                       for r in v.records]} for v in ses]
    report["verdicts"]["cochain_sequences_exact"] = all(v.exact for v in ses)

    total = total_cohomology(diagram, q_top)
    report["bicomplex"] = {"total_dims": list(total.total_dims),
                           "union_dims": list(total.union_dims),
                           "d_square_zero": total.d_square_zero}
    report["verdicts"]["bicomplex_matches_union"] = total.matches

    h1 = h1_fibred_check(diagram)
    report["h1_fibred"] = {
        "hypothesis_holds": h1.hypothesis_holds,
        "disconnected": [_key(t) for t in h1.disconnected],
        "h1_union": h1.h1_union, "fibred_dim": h1.fibred_dim, "equal": h1.equal}
    report["verdicts"]["h1_theorem_instance"] = h1.theorem_instance_ok

    if diagram.n_pieces == 2:
        les = assemble_les(diagram, q_top)
        report["les"] = {
            "union_dims": list(les.union_dims),
            "piece_dims": {k: list(v) for k, v in les.piece_dims.items()},
            "intersection_dims": list(les.intersection_dims),
            "alpha_ranks": list(les.alpha_ranks),
            "delta_star_ranks": list(les.delta_star_ranks),
            "positions": [{"q": p.degree, "position": p.position, "exact": p.exact}
                          for p in les.positions],
            "identity_ok": list(les.identity_ok)}
        report["verdicts"]["les_exact"] = les.all_ok

    _println(f"cochain sequences exact for q <= {q_top}: "
             f"{report['verdicts']['cochain_sequences_exact']}")
    _println(f"bicomplex total dims {total.total_dims} vs union {total.union_dims}: "
             f"match={total.matches}")
    _println(f"H^1 fibred: union={h1.h1_union} fibred={h1.fibred_dim} "
             f"hypothesis={h1.hypothesis_holds} equal={h1.equal}")
    if diagram.n_pieces == 2:
        _println(f"binary LES exact: {report['verdicts']['les_exact']}")
    ok = all(report["verdicts"].values())
    return report, 0 if ok else 1


def _cmd_fibred(args) -> tuple[dict, int]:
    parsed, digest = _load(args)
    diagram = canonicalize(parsed.system)
    degrees = [args.q] if args.q is not None else list(range(min(2, max(diagram.nerve.dim, 0)) + 1))
    report = _base_report("fibred", digest, diagram.field.p)
    report["degrees"] = []
    all_ok = True
    for q in degrees:
        fp = fibred_product(diagram, q)
        union_dim = cohomology(diagram.nerve, q, diagram.field).space.dim
        rank_phi = phi_star(diagram, q).matrix.rank()
        two_step, basis = inductive_fibred_dim(diagram, q)
        joint = FMatrix(np.hstack([fp.basis.entries, basis.entries])
                        if fp.basis.cols + basis.cols else np.zeros((fp.level1.dim, 0), dtype=np.int64),
                        diagram.field)
        same_span = joint.rank() == fp.dimension and two_step == fp.dimension
        entry = {"q": q, "cochain_dim_union": union_dim, "fibred_dim": fp.dimension,
                 "rank_phi_star": rank_phi, "inductive_dim": two_step,
                 "matches_union": fp.dimension == union_dim,
                 "matches_phi": fp.dimension == rank_phi,
                 "inductive_matches": same_span}
        report["degrees"].append(entry)
        all_ok = all_ok and entry["matches_union"] and entry["matches_phi"] and entry["inductive_matches"]
        _println(f"q={q}: dim C^q(union)={union_dim} fibred={fp.dimension} "
                 f"rank(phi*)={rank_phi} inductive={two_step}")
    report["verdicts"]["fibred_equals_union_cochains"] = all_ok
    return report, 0 if all_ok else 1


def _cmd_bundles(args) -> tuple[dict, int]:
    parsed, digest = _load(args)
    diagram = canonicalize(parsed.system)
    report = _base_report("bundles", digest, diagram.field.p)
    reps = enumerate_line_bundles(diagram)
    h1_dim = cohomology(diagram.nerve, 1, diagram.field).dimension
    classes = []
    round_trips_ok = True
    glue_ok = True
    for g in reps:
        coords = cocycle_class(g)
        sections = parallel_sections(g)
        data = restrict_bundle(g, diagram)
        back = colimit_bundle(diagram, data)
        preserved = back.ok and cocycles_equivalent(back.cocycle, g)
        round_trips_ok = round_trips_ok and preserved
        glue_dim = glue_section_space(data)
        glue_match = glue_dim == sections.dimension
        glue_ok = glue_ok and glue_match
        classes.append({
            "class": [int(c) for c in coords],
            "nonzero_edges": [list(e) for e in sorted(k for k, v in g.values.items() if int(v))],
            "parallel_dim": sections.dimension,
            "round_trip_class_preserved": preserved,
            "glue_space_dim": glue_dim,
            "glue_matches_parallel": glue_match})
    report["classes"] = classes
    report["verdicts"]["count_is_two_to_h1"] = len(reps) == 2 ** h1_dim
    report["verdicts"]["round_trips_preserve_class"] = round_trips_ok
    report["verdicts"]["glued_sections_match"] = glue_ok

    if parsed.bundle is not None:
        data = materialise_bundle(diagram, parsed.bundle)
        result = colimit_bundle(diagram, data)
        block: dict[str, Any] = {"status": result.status}
        if result.ok:
            if data.rank == 1:
                block["class"] = [int(c) for c in cocycle_class(result.cocycle)]
            block["parallel_dim"] = parallel_sections(result.cocycle).dimension
            block["glue_space_dim"] = glue_section_space(data)
            report["verdicts"]["bundle_block_glues"] = True
        else:
            block["witness"] = [str(w) for w in result.witness]
            report["verdicts"]["bundle_block_glues"] = False
        report["bundle_block"] = block

    _println(f"line bundle classes: {len(reps)} (2^{h1_dim})")
    _table([("class", "parallel_dim", "round_trip", "glue_dim")]
           + [(str(c["class"]), c["parallel_dim"], c["round_trip_class_preserved"],
               c["glue_space_dim"]) for c in classes])
    if "bundle_block" in report:
        _println(f"document bundle block: {report['bundle_block']}")
    ok = all(report["verdicts"].values())
    return report, 0 if ok else 1


def _cmd_count(args) -> tuple[dict, int]:
    parsed, digest = _load(args)
    diagram = canonicalize(parsed.system)
    result = count_line_bundles(diagram)
    report = _base_report("count", digest, diagram.field.p)
    report["h1_dims"] = {_key(t): d for t, d in sorted(result.h1_dims.items())}
    report["hypotheses"] = {
        "all_intersections_connected": result.connected_hypothesis,
        "disconnected": [_key(t) for t in result.disconnected],
        "descended_maps_surjective": result.surjective_hypothesis,
        "non_surjective_levels": list(result.non_surjective_levels)}
    report["exponent"] = result.exponent
    report["dimension_form_count"] = result.dimension_form_count
    report["literal_form_count"] = result.literal_form_count
    report["ground_truth"] = result.ground_truth
    report["flags"] = {"dimension_form_matches": result.dimension_form_matches,
                       "literal_form_matches": result.literal_form_matches}
    hypotheses = result.connected_hypothesis and result.surjective_hypothesis
    report["verdicts"]["count_theorem_instance"] = (not hypotheses) or result.dimension_form_matches
    _println(f"hypotheses hold: {hypotheses}")
    _println(f"dimension form: {result.dimension_form_count}  "
             f"literal form: {result.literal_form_count}  ground truth: {result.ground_truth}")
    if not result.dimension_form_matches:
        _println("flag: dimension form disagrees with ground truth")
    if not result.literal_form_matches:
        _println("flag: literal order-sum form disagrees with ground truth")
    ok = all(report["verdicts"].values())
    return report, 0 if ok else 1


def _cmd_collapse_check(args) -> tuple[dict, int]:
    parsed, digest = _load(args)
    diagram = canonicalize(parsed.system)
    q_top = max(diagram.nerve.dim, 0)
    field = diagram.field
    baseline = [cohomology(diagram.nerve, q, field).dimension for q in range(q_top + 1)]
    report = _base_report("collapse-check", digest, field.p)
    report["baseline_dims"] = baseline
    steps = []
    current = diagram
    nerves_ok = True
    dims_ok = True
    while current.n_pieces > 2:
        j = current.piece_ids[:2]
        merged = collapse(current, j)
        nerve_same = merged.nerve.simplices == current.nerve.simplices
        dims = [cohomology(merged.nerve, q, field).dimension for q in range(q_top + 1)]
        steps.append({"collapsed": list(j), "pieces_left": merged.n_pieces,
                      "nerve_preserved": nerve_same, "dims": dims})
        nerves_ok = nerves_ok and nerve_same
        dims_ok = dims_ok and dims == baseline
        current = merged
    report["steps"] = steps
    report["verdicts"]["union_nerve_preserved"] = nerves_ok
    report["verdicts"]["cohomology_invariant"] = dims_ok
    if current.n_pieces == 2:
        les = assemble_les(current, q_top)
        report["final_les_exact"] = les.all_ok
        report["verdicts"]["final_les_exact"] = les.all_ok
    _println(f"collapse steps: {len(steps)}; nerve preserved: {nerves_ok}; "
             f"dims invariant: {dims_ok}")
    ok = all(report["verdicts"].values())
    return report, 0 if ok else 1


def _cmd_refine_check(args) -> tuple[dict, int]:
    parsed, digest = _load(args)
    diagram = canonicalize(parsed.system)
    if parsed.refinement is None:
        raise ParseError("document has no refinement block", "$.refinement")
    refinement = materialise_refinement(diagram, parsed.refinement, diagram.field)
    report = _base_report("refine-check", digest, diagram.field.p)
    verdict = validate_refinement(refinement)
    report["verdicts"]["refinement_valid"] = verdict.valid
    report["violations"] = list(verdict.violations)
    if verdict.valid:
        q_max = min(2, max(refinement.coarse.nerve.dim, refinement.fine.nerve.dim, 0))
        nat = naturality_check(refinement, q_max)
        report["squares"] = [{"name": s.name, "commutes": s.commutes} for s in nat.squares]
        report["verdicts"]["naturality_squares_commute"] = nat.all_commute
        h_maps = {}
        for q in (0, 1):
            m = induced_cohomology_map(refinement, q)
            h_maps[f"H^{q}"] = {"rank": m.rank(), "coarse_dim": m.cols, "fine_dim": m.rows}
        report["induced_cohomology"] = h_maps
        _println(f"refinement valid; naturality squares commute: {nat.all_commute}")
        for k, v in h_maps.items():
            _println(f"  {k}: rank {v['rank']} (coarse {v['coarse_dim']}, fine {v['fine_dim']})")
    else:
        for v in verdict.violations:
            _println(f"  violation: {v}")
    ok = all(report["verdicts"].values())
    return report, 0 if ok else 1


def _cmd_gallery(args) -> tuple[dict | None, int, str]:
    if args.name == "list":
        listing = "\n".join(GALLERY_NAMES) + "\n"
        sys.stdout.write(listing)
        return None, 0, listing
    field = args.field if args.field is not None else 2
    doc = gallery_document(args.name, field=field, n=args.n, seed=args.seed)
    text = canonical_json(doc)
    sys.stdout.write(text)
    if args.name == "random_admissible":
        sys.stderr.write(f"seed: {args.seed}\n")
    return doc, 0, text


_HANDLERS = {
    "validate": _cmd_validate,
    "cohomology": _cmd_cohomology,
    "mv": _cmd_mv,
    "fibred": _cmd_fibred,
    "bundles": _cmd_bundles,
    "count": _cmd_count,
    "collapse-check": _cmd_collapse_check,
    "refine-check": _cmd_refine_check,
}


def run_command(command: str, options: dict[str, Any] | None = None) -> tuple[dict, int]:
    """Programmatic dispatch of one file command; returns (report, exit code).

    Options: path (required), plus field, qmax, q where the command takes
    them.  Input failures raise instead of returning exit code 2; the
    command line wrapper maps them.
    """
    if command not in _HANDLERS:
        raise UnknownCommand(command)
    options = dict(options or {})
    args = argparse.Namespace(field=options.get("field"), report=None,
                              qmax=options.get("qmax"), q=options.get("q"),
                              path=Path(options["path"]))
    return _HANDLERS[command](args)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        if args.command == "gallery":
            doc, code, text = _cmd_gallery(args)
            if args.report is not None and doc is not None:
                args.report.write_text(canonical_json(doc), encoding="utf-8")
            return code
        report, code = _HANDLERS[args.command](args)
    except UnknownGallery as exc:
        sys.stderr.write(f"input error: unknown gallery name {exc.args[0]!r}; "
                         f"try: {', '.join(GALLERY_NAMES)}\n")
        return 2
    except (ParseError, NotPrime, FileNotFoundError) as exc:
        sys.stderr.write(f"input error: {exc}\n")
        return 2
    except InvalidSystem as exc:
        sys.stderr.write("input error: invalid adjunction system\n")
        for v in exc.report.violations:
            sys.stderr.write(f"  [{v.condition}] {v.message}  witness={list(v.witness)}\n")
        return 2
    except (IncompatibleData, WrongField) as exc:
        sys.stderr.write(f"input error: {exc}\n")
        return 2
    elapsed = time.perf_counter() - started
    _println(f"elapsed: {elapsed:.3f}s")
    if args.report is not None:
        args.report.write_text(canonical_json(report), encoding="utf-8")
    return code


if __name__ == "__main__":
    raise SystemExit(main())
