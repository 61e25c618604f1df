"""Command-line entry point: ``hopfcentre {verify,centre,double,crosscheck} FILE``.

Exit codes: 0 when every check passes, 1 when a check fails, 2 on parse or
builder errors.  Output is deterministic plain text with one line per check.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .centre import VARIANTS, canonical_projection, embed_and_compare, full_centre, morita_amplification
from .double import DEFAULT_CONVENTION, convention_search, drinfeld_double, verify_double
from .exact_linalg import Field
from .grouplike import g_full_centre, graded_full_centre
from .hopf import HopfAlgebraData, NoAntipode, check_lemma_aux, verify_antipode_properties, verify_hopf
from .modalg import BuilderError, GroupData, group_hopf, verify_algebra, verify_module_algebra
from .report import AxiomReport
from .scalg import ScalgDocument, ScalgError, build_object, parse_scalg, serialize
from .yd import ClosureError, YDAlgebraData, adjunction_maps, verify_yd, verify_yd_algebra


class UsageError(ValueError):
    pass


@dataclass
class Output:
    lines: list[str] = field(default_factory=list)
    failed: bool = False

    def say(self, text: str = "") -> None:
        self.lines.append(text)

    def report(self, rep: AxiomReport, prefix: str = "") -> None:
        for line in rep.lines():
            self.say(prefix + line)
        self.failed |= not rep.ok

    def check(self, name: str, ok: bool, note: str = "") -> None:
        self.say(f"{name}: {'PASS' if ok else 'FAIL'}" + (f" ({note})" if note else ""))
        self.failed |= not ok


def _field_name(fld: Field) -> str:
    return "Q" if fld.is_rational else f"GF({fld.p})"


def load(path: str) -> ScalgDocument:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_scalg(text)


def _pick(doc: ScalgDocument, kinds: tuple[str, ...], name: str | None, what: str) -> str:
    if name is not None:
        if name not in doc.objects or doc.objects[name].kind not in kinds:
            raise UsageError(f"no {what} object named {name!r}")
        return name
    found = doc.of_kind(*kinds)
    if not found:
        raise UsageError(f"document has no {what} object")
    return found[-1].name


def _module_algebra(doc: ScalgDocument, name: str | None):
    """Return (label, ModuleAlgebraData, group or None, kind) for the chosen action/grading object."""
    label = _pick(doc, ("action", "grading"), name, "action or grading")
    obj = doc.objects[label]
    cache: dict = {}
    M = build_object(doc, label, cache)
    group = None
    if obj.kind == "grading":
        group = cache[obj.refs["group"]]
    elif doc.objects[obj.refs["hopf"]].kind == "group":
        group = cache[obj.refs["hopf"]]
    return label, M, group, obj


def _format_vector(v, m: int, n: int, fld: Field) -> str:
    terms = []
    for i, c in enumerate(v):
        if c != 0:
            a, h = divmod(i, n)
            terms.append(f"{fld.format(c)}*a{a}#h{h}")
    return " + ".join(terms) if terms else "0"


def cmd_verify(args, out: Output) -> None:
    doc = load(args.file)
    out.say(f"field: {_field_name(doc.field)}")
    cache: dict = {}
    for name, obj in doc.objects.items():
        built = build_object(doc, name, cache)
        tag = f"[{obj.kind} {name}] "
        if obj.kind == "hopf":
            out.report(verify_hopf(built), tag)
            out.report(verify_antipode_properties(built), tag)
            out.report(check_lemma_aux(built), tag)
        elif obj.kind == "algebra":
            out.report(verify_algebra(built), tag)
        elif obj.kind == "group":
            out.check(tag + "group table", True, note=f"order {built.order}")
        elif obj.kind in ("action", "grading"):
            out.report(verify_module_algebra(built), tag)
        elif obj.kind == "yd":
            rep = verify_yd_algebra(built) if isinstance(built, YDAlgebraData) else verify_yd(built)
            out.report(rep, tag)


def cmd_centre(args, out: Output) -> None:
    doc = load(args.file)
    label, M, _, _ = _module_algebra(doc, args.object)
    H, A = M.hopf, M.alg
    out.say(f"module algebra: {label} (dim H = {H.dim}, dim A = {A.dim}, field {_field_name(doc.field)})")
    try:
        Z = full_centre(M, args.variant)
    except ClosureError as exc:
        out.check("centraliser closed under the YD structure", False, note=str(exc))
        return
    out.say(f"dim Z(A) = {Z.dim}")
    for i, v in enumerate(Z.basis):
        out.say(f"z{i} = {_format_vector(v, A.dim, H.dim, doc.field)}")
    out.report(Z.report)
    try:
        canonical_projection(Z)
        out.check("canonical projection Z(A) -> A is an algebra map", True)
    except ArithmeticError:
        out.check("canonical projection Z(A) -> A is an algebra map", False)
    out.check("quantum commutative", Z.report["quantum commutativity"].ok)
    if args.out:
        Path(args.out).write_text(serialize(Z.yd), encoding="utf-8")
        out.say(f"wrote {args.out}")


def _hopf_for_double(doc: ScalgDocument, name: str | None) -> tuple[str, HopfAlgebraData]:
    label = _pick(doc, ("hopf", "group"), name, "hopf or group")
    built = build_object(doc, label)
    if isinstance(built, GroupData):
        built = group_hopf(built, doc.field)
    return label, built


def cmd_double(args, out: Output) -> None:
    doc = load(args.file)
    label, H = _hopf_for_double(doc, args.object)
    if args.search:
        for conv, rep in convention_search([(label, H)]).items():
            out.say(f"candidate [{conv}]: {'PASS' if rep.ok else 'FAIL'}")
    try:
        DD = drinfeld_double(H, DEFAULT_CONVENTION)
    except ArithmeticError as exc:
        out.check(f"D({label}) construction", False, note=str(exc))
        return
    out.say(f"convention: {DD.convention}")
    out.say(f"dim D({label}) = {DD.dim}")
    out.report(verify_double(DD))
    if args.out:
        Path(args.out).write_text(serialize(DD.hopf), encoding="utf-8")
        out.say(f"wrote {args.out}")


def cmd_crosscheck(args, out: Output) -> None:
    doc = load(args.file)
    label, M, group, obj = _module_algebra(doc, args.object)
    out.say(f"module algebra: {label}")
    Z = full_centre(M)
    out.say(f"dim Z(A) = {Z.dim}")
    out.report(embed_and_compare(M, Z), "[embedding] ")
    try:
        alt = embed_and_compare(M, full_centre(M, "sinv"), direction="sinv").ok
    except ClosureError:
        alt = False
    out.say(f"note: a#h -> S^-1(h) (x) a gives {'PASS' if alt else 'FAIL'} (informational)")
    if group is not None and obj.kind == "action":
        out.report(g_full_centre(group, M, Z).report, "[G-algebra] ")
    if obj.kind == "grading":
        degrees = [obj.degs[i] for i in range(obj.dim)]
        gf = graded_full_centre(group, M, degrees, Z)
        out.report(gf.report, "[graded] ")
        out.say(f"note: action z(g^-1 f) agrees with the centre: {'yes' if gf.left_action_agrees else 'no'}")
    out.report(morita_amplification(M, 2), "[morita] ")
    out.report(check_lemma_aux(M.hopf), "[hopf] ")
    _, _, rep = adjunction_maps(Z.yd.module, M.action)
    out.report(rep, "[adjunction] ")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hopfcentre", description="Full centres of module algebras over Hopf algebras.")
    sub = p.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", help="run every applicable axiom suite")
    v.add_argument("file")
    c = sub.add_parser("centre", help="compute the full centre")
    c.add_argument("file")
    c.add_argument("--object", help="action or grading object to use (default: the last one)")
    c.add_argument("--variant", choices=VARIANTS, default="s", help="YD structure formulas on A#H")
    c.add_argument("--out", help="write the centre as a yd object")
    d = sub.add_parser("double", help="build and verify the Drinfeld double")
    d.add_argument("file")
    d.add_argument("--object", help="hopf or group object (default: the last one)")
    d.add_argument("--search", action="store_true", help="also score all H* conventions")
    d.add_argument("--out", help="write D(H) as a hopf object")
    x = sub.add_parser("crosscheck", help="run the cross-pipeline oracles")
    x.add_argument("file")
    x.add_argument("--object", help="action or grading object to use (default: the last one)")
    return p


COMMANDS = {"verify": cmd_verify, "centre": cmd_centre, "double": cmd_double, "crosscheck": cmd_crosscheck}


def run(argv: list[str]) -> tuple[int, str]:
    args = build_parser().parse_args(argv)
    out = Output()
    try:
        COMMANDS[args.command](args, out)
    except (ScalgError, BuilderError, NoAntipode, UsageError) as exc:
        return 2, f"error: {exc}\n"
    text = "\n".join(out.lines) + "\n"
    return (1 if out.failed else 0), text


def main(argv: list[str] | None = None) -> int:
    code, text = run(sys.argv[1:] if argv is None else argv)
    stream = sys.stderr if code == 2 else sys.stdout
    stream.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
