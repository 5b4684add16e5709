"""Command-line surface for the rational-representation pipeline.

Subcommands: ``list`` (catalog table), ``pairs`` (required-pair rows),
``reps`` (representation export files), ``wedderburn`` (decomposition
report), ``verify`` (full invariant suite, nonzero exit on failure), and
``ingest`` (presentation echo with consistency and classification).

All stdout output is deterministic (fixed orderings; rationals printed as
``num/den``); progress lines for long runs go to stderr.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import catalog
from .catalog import CatalogError, CatalogGroup, classify, instantiate, names_for_prime
from .characters import euler_phi, is_camina_pair, is_vz_group
from .ingest import (
    FIXTURES,
    IngestError,
    fixture_names,
    load_group,
    parse_presentation,
    render_presentation,
)
from .pairs import RequiredPair, check_cover, closed_form_pairs, generic_search
from .pcgroup import PcGroup, StructureError
from .reps import RationalRep, all_rational_irreps, build_rep
from .wedderburn import (
    DecompositionError,
    FormulaError,
    decompose,
    formula_decomposition,
    oracle_decomposition,
)

# Accepted for interface compatibility; the pipeline itself is sequential and
# deterministic regardless of the requested worker count.
WORKERS_ENV = "P5REPS_WORKERS"


@dataclass
class ResolvedGroup:
    """One group selected on the command line, however it was named."""

    label: str
    p: int
    group: PcGroup
    family: int
    cg: CatalogGroup | None  # None for ingested/fixture groups

    def pairs(self, progress=None) -> list[RequiredPair]:
        if self.cg is not None:
            return closed_form_pairs(self.cg, progress)
        return generic_search(self.group, progress)


def _progress(p: int, quiet: bool):
    if quiet or p < 5:
        return None

    def emit(msg: str) -> None:
        print(f"  .. {msg}", file=sys.stderr, flush=True)

    return emit


def resolve_groups(selector: str, p: int) -> list[ResolvedGroup]:
    """Resolve a selector: 'all', a catalog name, a fixture name, or a file."""
    if selector == "all":
        out = [resolve_groups(name, p)[0] for name in names_for_prime(p)]
        if p == 3:
            out.extend(resolve_groups(name, p)[0] for name in fixture_names())
        return out
    if selector in FIXTURES:
        group, ing, family = load_group(FIXTURES[selector])
        if group.p != p:
            raise CatalogError(f"fixture {selector!r} is defined at p={group.p}")
        return [ResolvedGroup(selector, group.p, group, family, None)]
    if Path(selector).is_file():
        try:
            group, ing, family = load_group(Path(selector).read_text())
        except (IngestError, StructureError) as exc:
            raise CatalogError(f"cannot ingest {selector}: {exc}") from exc
        label = ing.name or Path(selector).stem
        return [ResolvedGroup(label, group.p, group, family, None)]
    cg = instantiate(selector, p)
    return [ResolvedGroup(selector, p, cg.group, cg.family, cg)]


def _sorted_pairs(pairs: list[RequiredPair]) -> list[RequiredPair]:
    return sorted(pairs, key=lambda pr: pr.key)


def _word(group: PcGroup, x: int) -> str:
    return "(" + " ".join(map(str, group.exps(x))) + ")"


def _small_gens(h) -> list[int]:
    """A short deterministic generating set (least members, greedy closure)."""
    group = h.group
    span = {group.identity}
    gens: list[int] = []
    for x in h.members:
        if x in span:
            continue
        gens.append(x)
        span = set(group.subgroup(gens).members)
        if len(span) == h.order:
            break
    return gens


def _fraction_str(value) -> str:
    f = Fraction(value)
    return f"{f.numerator}/{f.denominator}"


# ---------------------------------------------------------------------------
# Subcommands.
# ---------------------------------------------------------------------------


def cmd_list(args) -> int:
    rows = []
    for rg in resolve_groups(args.group, args.p):
        z = rg.group.center().order
        der = rg.group.derived_subgroup().order
        cd = rg.group.char_degree_counts()
        cd_str = " ".join(f"{d}^{m}" for d, m in sorted(cd.items()))
        rows.append((rg.label, rg.family, rg.group.size, z, der, cd_str))
    width = max(len(r[0]) for r in rows)
    print(f"{'name':{width}}  family  order  |Z|  |G'|  cd(G)")
    for label, family, order, z, der, cd_str in rows:
        print(f"{label:{width}}  Phi_{family:<3}  {order:5d}  {z:3d}  {der:4d}  {cd_str}")
    return 0


def cmd_pairs(args) -> int:
    for rg in resolve_groups(args.group, args.p):
        pairs = _sorted_pairs(rg.pairs(_progress(rg.p, args.quiet)))
        print(f"# group {rg.label} p={rg.p} orbits={len(pairs)}")
        for oid, pr in enumerate(pairs):
            gens = _small_gens(pr.subgroup)
            h_words = " ".join(_word(rg.group, g) for g in gens)
            psi = " ".join(str(pr.psi.value_exponent(g)) for g in gens)
            print(
                f"orbit={oid} chi1={pr.degree} d={pr.d} "
                f"rational_degree={pr.rational_degree} index={rg.group.size // pr.subgroup.order} "
                f"H=[{h_words}] psi_exponents=[{psi}]"
            )
    return 0


def _export_rep(path: Path, rg: ResolvedGroup, oid: int, rep: RationalRep) -> None:
    lines = [
        f"group {rg.label}",
        f"p {rg.p}",
        f"orbit {oid}",
        f"degree {rep.degree}",
        f"d {rep.d}",
        f"chi_degree {rep.pair.degree}",
        f"generators {len(rep.gen_images)}",
    ]
    for gi, img in enumerate(rep.gen_images, start=1):
        lines.append(f"generator {gi} dimension {rep.degree}")
        for row in img.dense():
            lines.append(" ".join(_fraction_str(v) for v in row))
    path.write_text("\n".join(lines) + "\n")


def cmd_reps(args) -> int:
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    for rg in resolve_groups(args.group, args.p):
        pairs = _sorted_pairs(rg.pairs(_progress(rg.p, args.quiet)))
        reps = all_rational_irreps(rg.group, pairs, verify=not args.no_verify)
        by_pair = {id(rep.pair): rep for rep in reps}
        safe = rg.label.replace("/", "_").replace(" ", "_")
        for oid, pr in enumerate(pairs):
            rep = by_pair[id(pr)]
            path = outdir / f"{safe}__p{rg.p}__orbit{oid}.rep"
            _export_rep(path, rg, oid, rep)
            print(f"wrote {path} degree={rep.degree} d={rep.d}")
    return 0


def _print_decomposition(dec, group: PcGroup) -> None:
    for comp, mult in dec.items():
        print(f"{comp} x {mult}")
    print(f"dimension {dec.dimension} = |G| {group.size}: "
          + ("OK" if dec.dimension == group.size else "MISMATCH"))


def cmd_wedderburn(args) -> int:
    status = 0
    for rg in resolve_groups(args.group, args.p):
        print(f"# group {rg.label} p={rg.p} method={args.method}")
        pairs = None
        if args.method in ("oracle", "both"):
            pairs = rg.pairs(_progress(rg.p, args.quiet))
        try:
            dec = decompose(
                rg.cg if rg.cg is not None else rg.group,
                pairs=pairs,
                method=args.method,
            )
        except (FormulaError, DecompositionError) as exc:
            print(f"error: {exc}")
            status = 1
            continue
        _print_decomposition(dec, rg.group)
    return status


def cmd_ingest(args) -> int:
    text = Path(args.file).read_text()
    ing = parse_presentation(text)
    group = ing.group()
    family = classify(group)
    print(render_presentation(ing), end="")
    print(f"# consistent: order {group.size} = {group.p}^{group.ngens}")
    print(f"# classification: Phi_{family}")
    print(f"# |Z(G)| = {group.center().order}  |G'| = {group.derived_subgroup().order}")
    for label in sorted(ing.subgroups):
        sub = ing.resolve(group, label)
        print(f"# subgroup {label}: order {sub.order}")
    return 0


# ---------------------------------------------------------------------------
# Verification suite.
# ---------------------------------------------------------------------------


def _check_catalog(rg: ResolvedGroup) -> str | None:
    group = rg.group
    if group.size != rg.p**5:
        return f"order {group.size} != p^5"
    if rg.cg is not None:
        # instantiate() already matched declared vs computed subgroups.
        if classify(group) != rg.cg.family:
            return "classification does not match the declared family"
    return None


def _check_pairs(rg: ResolvedGroup, pairs: list[RequiredPair]) -> str | None:
    try:
        check_cover(rg.group, pairs)
    except StructureError as exc:
        return str(exc)
    for pr in pairs:
        if rg.group.size // pr.subgroup.order != pr.degree:
            return f"[G:H] != chi(1) for orbit d={pr.d}"
    return None


def _check_cross(rg: ResolvedGroup, pairs: list[RequiredPair], progress) -> str | None:
    # Closed-form vs generic search at the Galois-orbit level.  At p = 5 the
    # comparison is restricted to the entries that only exist for p >= 5.
    if rg.cg is None:
        return None  # ingested groups already use the generic search
    if rg.p != 3 and rg.cg.entry.min_p != 5:
        return None
    generic = generic_search(rg.group, progress)
    if {pr.key for pr in pairs} != {pr.key for pr in generic}:
        return "closed-form and generic orbit sets differ"
    return None


def _check_reps(rg: ResolvedGroup, pairs: list[RequiredPair]) -> str | None:
    try:
        all_rational_irreps(rg.group, pairs, verify=True)
    except StructureError as exc:
        return str(exc)
    return None


def _check_wedderburn(rg: ResolvedGroup, pairs: list[RequiredPair]) -> str | None:
    try:
        decompose(rg.cg if rg.cg is not None else rg.group, pairs=pairs)
    except StructureError as exc:
        return str(exc)
    return None


def _check_predicates(rg: ResolvedGroup) -> str | None:
    vz = is_vz_group(rg.group)
    if vz != (rg.family in (2, 5)):
        return f"is_vz_group={vz} for family Phi_{rg.family}"
    camina = is_camina_pair(rg.group, rg.group.center())
    if camina != (rg.family in (5, 7, 8, 10)):
        return f"is_camina_pair(G,Z)={camina} for family Phi_{rg.family}"
    return None


VERIFY_CHECKS = ("catalog", "pairs", "cross", "reps", "wedderburn", "predicates")


def verify_group(rg: ResolvedGroup, progress=None) -> dict[str, str | None]:
    """Run every invariant check; maps check name -> None or failure text."""
    report: dict[str, str | None] = {}
    report["catalog"] = _check_catalog(rg)
    try:
        pairs = rg.pairs(progress)
    except StructureError as exc:
        for check in VERIFY_CHECKS[1:]:
            report[check] = f"pair construction failed: {exc}"
        return report
    report["pairs"] = _check_pairs(rg, pairs)
    report["cross"] = _check_cross(rg, pairs, progress)
    report["reps"] = _check_reps(rg, pairs)
    report["wedderburn"] = _check_wedderburn(rg, pairs)
    report["predicates"] = _check_predicates(rg)
    return report


def cmd_verify(args) -> int:
    failures = 0
    rows = []
    for rg in resolve_groups(args.group, args.p):
        if args.p >= 5 and not args.quiet:
            print(f"verifying {rg.label} ...", file=sys.stderr, flush=True)
        report = verify_group(rg, _progress(rg.p, args.quiet))
        cells = []
        for check in VERIFY_CHECKS:
            msg = report.get(check)
            cells.append(f"{check}=ok" if msg is None else f"{check}=FAIL({msg})")
            if msg is not None:
                failures += 1
        rows.append((rg.label, cells))
    width = max(len(label) for label, _ in rows)
    for label, cells in rows:
        print(f"{label:{width}}  " + "  ".join(cells))
    print(f"# groups={len(rows)} failures={failures}")
    return 1 if failures else 0


# ---------------------------------------------------------------------------
# Entry point.
# ---------------------------------------------------------------------------


def _add_common(sub, group_default: str | None = None) -> None:
    sub.add_argument("--p", type=int, default=3, help="odd prime (3, 5, or 7)")
    if group_default is not None:
        sub.add_argument(
            "--group",
            default=group_default,
            help="catalog name, fixture name, presentation file, or 'all'",
        )
    sub.add_argument("--quiet", action="store_true", help="suppress progress lines")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="p5reps",
        description="Irreducible rational representations of groups of order p^5",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("list", help="catalog table for a prime")
    _add_common(sub, group_default="all")
    sub.set_defaults(func=cmd_list)

    sub = subs.add_parser("pairs", help="required-pair rows per Galois orbit")
    _add_common(sub, group_default="all")
    sub.set_defaults(func=cmd_pairs)

    sub = subs.add_parser("reps", help="export rational representations")
    _add_common(sub, group_default="all")
    sub.add_argument("--out", default="reps_out", help="output directory")
    sub.add_argument("--no-verify", action="store_true", help="skip verification")
    sub.set_defaults(func=cmd_reps)

    sub = subs.add_parser("wedderburn", help="Wedderburn decomposition report")
    _add_common(sub, group_default="all")
    sub.add_argument(
        "--method", choices=("formula", "oracle", "both"), default="both"
    )
    sub.set_defaults(func=cmd_wedderburn)

    sub = subs.add_parser("verify", help="run the full invariant suite")
    _add_common(sub, group_default="all")
    sub.add_argument("--all", action="store_true", help="verify every group (default)")
    sub.set_defaults(func=cmd_verify)

    sub = subs.add_parser("ingest", help="validate and echo a presentation file")
    sub.add_argument("--file", required=True, help="presentation text file")
    sub.set_defaults(func=cmd_ingest)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    os.environ.setdefault(WORKERS_ENV, "1")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CatalogError, IngestError, StructureError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
