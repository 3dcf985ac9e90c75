"""Command-line frontend: parse a group, run the pipeline, emit reports.

Grammar for group descriptions::

    n=<rank>; gens=<generator>;<generator>;...

where each generator is either a product of disjoint cycles in 1-based
indices, e.g. ``(1,5,4,2,3)`` or ``(1,4)(3,6)``, or a signed image list in
brackets, e.g. ``[-2,1,3]`` meaning the first basis vector maps to minus the
second.  ``()`` denotes the identity; an empty generator list gives the
trivial group.

Exit codes: 0 success, 2 parse error, 3 unsupported size, 4 internal
invariant violation.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from typing import Sequence

from .deficiency import (
    SYMBOLIC_INDEX_GUARD,
    DeficiencyReport,
    bad_primes,
    deficiency_evaluated,
    deficiency_symbolic,
)
from .errors import (
    CmprimesError,
    InternalCheckError,
    ParseError,
    UnsupportedSizeError,
)
from .frame import (
    build_frame,
    delta_degree,
    delta_degree_check,
    discriminant_exponents,
    evaluation_points,
)
from .hilbert import secondary_degrees
from .modp import is_good_prime
from .perm import Group, Permutation, count_reflections, group_from_generators
from .poly import render_monomial, render_orbit_sum
from .secondaries import universal_secondaries

SCHEMA_VERSION = 1

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_group(text: str) -> tuple[int, list[Permutation]]:
    """Parse ``n=<int>; gens=...`` into a rank and generator list."""
    text = text.strip()
    m = re.match(r"^n\s*=\s*(\d+)\s*;\s*gens\s*=\s*(.*)$", text, re.DOTALL)
    if not m:
        raise ParseError("expected 'n=<int>; gens=<generators>'")
    n = int(m.group(1))
    if n < 1:
        raise ParseError(f"rank must be positive, got {n}")
    body = m.group(2).strip()
    generators: list[Permutation] = []
    if body:
        for part in body.split(";"):
            part = part.strip()
            if not part:
                continue
            generators.append(_parse_generator(n, part))
    return n, generators


def _parse_generator(n: int, text: str) -> Permutation:
    if text.startswith("["):
        if not text.endswith("]"):
            raise ParseError(f"unterminated signed generator {text!r}")
        entries = [s.strip() for s in text[1:-1].split(",")]
        if len(entries) != n:
            raise ParseError(f"signed generator {text!r} needs exactly {n} entries")
        images = []
        signs = []
        for s in entries:
            try:
                v = int(s)
            except ValueError:
                raise ParseError(f"bad entry {s!r} in signed generator") from None
            if v == 0 or abs(v) > n:
                raise ParseError(f"index {v} out of range 1..{n}")
            images.append(abs(v) - 1)
            signs.append(1 if v > 0 else -1)
        if sorted(images) != list(range(n)):
            raise ParseError(f"signed generator {text!r} repeats an index")
        return Permutation(images, signs)
    if not text.startswith("("):
        raise ParseError(f"generator {text!r} must be cycles (…) or a signed list […]")
    stripped = text.replace(" ", "")
    consumed = "".join(_CYCLE_RE.findall(stripped))
    if _CYCLE_RE.sub("", stripped):
        raise ParseError(f"trailing characters in generator {text!r}")
    cycles = []
    for inner in _CYCLE_RE.findall(stripped):
        if not inner:
            continue
        pts = []
        for s in inner.split(","):
            try:
                pts.append(int(s))
            except ValueError:
                raise ParseError(f"bad index {s!r} in cycle of {text!r}") from None
        if any(p < 1 or p > n for p in pts):
            raise ParseError(f"cycle index out of range 1..{n} in {text!r}")
        cycles.append(tuple(pts))
    del consumed
    return Permutation.from_cycles(n, cycles)


def analyze(
    text: str,
    ambient: str | None = None,
    point: Sequence[int] | None = None,
    verify: bool = False,
    max_degree: int | None = None,
    with_timings: bool = False,
) -> dict:
    """Full pipeline: frame, degrees, universal secondaries, deficiency, report."""
    timings: dict[str, float] = {}
    t0 = time.perf_counter()
    n, gens = parse_group(text)
    group = group_from_generators(n, gens)
    frame = build_frame(group, ambient)
    timings["frame"] = time.perf_counter() - t0

    if max_degree is not None and delta_degree(frame) > max_degree:
        raise UnsupportedSizeError(
            f"discriminant degree {delta_degree(frame)} exceeds --max-degree {max_degree}"
        )

    t0 = time.perf_counter()
    hd = secondary_degrees(frame)
    timings["hilbert"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    secondary_set = universal_secondaries(frame, hd, point=point)
    timings["secondaries"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    report = deficiency_evaluated(frame, secondary_set, universal=True)
    identities = ["delta_degree", "secondary_degree_sum"]
    symbolic: DeficiencyReport | None = None
    if frame.index <= SYMBOLIC_INDEX_GUARD:
        symbolic = deficiency_symbolic(frame, secondary_set, universal=True)
        if symbolic.deficiency != report.deficiency:
            raise InternalCheckError(
                f"evaluated deficiency {report.deficiency} != symbolic {symbolic.deficiency}"
            )
        identities.append("det_equals_sign_deficiency_discriminant")
    timings["deficiency"] = time.perf_counter() - t0

    verification = None
    if verify:
        t0 = time.perf_counter()
        verification = []
        for p in bad_primes_candidates(group):
            verdict = is_good_prime(frame, secondary_set, p)
            verification.append(
                {
                    "prime": p,
                    "is_good": verdict.is_good,
                    "witness": None
                    if verdict.witness is None
                    else {
                        "degree": verdict.witness[0],
                        "orbit_sum": render_orbit_sum(verdict.witness[1]),
                    },
                }
            )
        timings["verification"] = time.perf_counter() - t0

    out = {
        "schema": SCHEMA_VERSION,
        "input": {"n": n, "generators": [str(g) for g in gens]},
        "group_order": group.order,
        "ambient": {"kind": frame.kind, "order": frame.sigma.order},
        "index": frame.index,
        "reflections": {
            "ambient": count_reflections(frame.sigma),
            "group": count_reflections(group),
        },
        "delta_exponents": discriminant_exponents(frame),
        "delta_degree": delta_degree_check(frame)[0],
        "goebel_bound": hd.goebel_bound,
        "secondary_degrees": list(hd.degrees),
        "secondaries": [
            {
                "degree": deg,
                "combination": [
                    {"coefficient": c, "orbit_sum": render_orbit_sum(rep)}
                    for c, rep in combo
                ],
            }
            for deg, combo in zip(secondary_set.degrees, secondary_set.combos)
        ],
        "evaluation_point": list(secondary_set.evaluation_point),
        "deficiency": report.deficiency,
        "bad_primes": list(report.bad_primes),
        "det_sign": symbolic.det_sign if symbolic else report.det_sign,
        "identities_checked": identities,
    }
    if verification is not None:
        out["verification"] = verification
    if with_timings:
        out["timings"] = {k: round(v, 6) for k, v in timings.items()}
    return out


def bad_primes_candidates(group: Group) -> list[int]:
    """Primes dividing the group order, in increasing order."""
    rest = group.order
    out = []
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            out.append(p)
            while rest % p == 0:
                rest //= p
        p += 1
    if rest > 1:
        out.append(rest)
    return out


def _render_text(report: dict) -> str:
    lines = []
    lines.append(
        f"group of order {report['group_order']} at rank n={report['input']['n']}"
        f" inside {report['ambient']['kind']} ambient of order {report['ambient']['order']}"
    )
    lines.append(f"coset index: {report['index']}")
    refl = report["reflections"]
    lines.append(f"reflections: ambient {refl['ambient']}, group {refl['group']}")
    exps = ", ".join(f"{k}: {v}" for k, v in report["delta_exponents"].items())
    lines.append(f"discriminant exponents: {exps}")
    lines.append(f"discriminant degree: {report['delta_degree']}")
    lines.append(f"secondary degrees: {report['secondary_degrees']}")
    for sec in report["secondaries"]:
        combo = " + ".join(
            (f"{t['coefficient']}*{t['orbit_sum']}" if t["coefficient"] != 1 else t["orbit_sum"])
            for t in sec["combination"]
        )
        lines.append(f"  degree {sec['degree']}: {combo}")
    lines.append(f"deficiency: {report['deficiency']}")
    lines.append(f"bad primes: {report['bad_primes']}")
    if "det_equals_sign_deficiency_discriminant" in report["identities_checked"]:
        sign = "+" if report["det_sign"] > 0 else "-"
        lines.append(
            f"det M = {sign}{report['deficiency']} * Delta(G)  (symbolically verified)"
        )
    if "verification" in report:
        for v in report["verification"]:
            status = "good" if v["is_good"] else "bad"
            extra = ""
            if v["witness"]:
                extra = f" (witness {v['witness']['orbit_sum']} at degree {v['witness']['degree']})"
            lines.append(f"prime {v['prime']}: {status}{extra}")
    return "\n".join(lines) + "\n"


def _emit(report: dict, fmt: str, out_path: str | None) -> None:
    if fmt == "json":
        payload = json.dumps(report, indent=2, sort_keys=False) + "\n"
    else:
        payload = _render_text(report)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def _parse_point(text: str | None) -> tuple[int, ...] | None:
    if text is None:
        return None
    try:
        return tuple(int(s) for s in text.split(","))
    except ValueError:
        raise ParseError(f"bad evaluation point {text!r}") from None


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("group", help="group description, e.g. 'n=5; gens=(1,5,4,2,3);(2,3,4,5)'")
    sub.add_argument("--ambient", choices=["sym", "young", "hyperoctahedral"], default=None)
    sub.add_argument("--format", choices=["text", "json"], default="text")
    sub.add_argument("--point", default=None, help="evaluation point z1,z2,...")
    sub.add_argument("--max-degree", type=int, default=None, help="abort beyond this discriminant degree")
    sub.add_argument("--out", default=None, help="write the report to a file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cmprimes",
        description="Cohen-Macaulay primes of (signed) permutation invariant rings",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_analyze = subs.add_parser("analyze", help="full pipeline")
    _add_common(p_analyze)
    p_analyze.add_argument("--verify", action="store_true", help="run the mod-p oracle for all primes dividing |G|")
    p_analyze.add_argument("--timings", action="store_true", help="include wall-clock timings in the report")

    p_verify = subs.add_parser("verify", help="mod-p oracle only")
    _add_common(p_verify)
    p_verify.add_argument("--prime", type=int, required=True)

    p_oracle = subs.add_parser("oracle", help="symbolic determinant cross-check")
    _add_common(p_oracle)

    p_hilbert = subs.add_parser("hilbert", help="secondary degrees only")
    _add_common(p_hilbert)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        point = _parse_point(args.point)
        if args.command == "analyze":
            report = analyze(
                args.group,
                ambient=args.ambient,
                point=point,
                verify=args.verify,
                max_degree=args.max_degree,
                with_timings=args.timings,
            )
            _emit(report, args.format, args.out)
        elif args.command == "hilbert":
            n, gens = parse_group(args.group)
            group = group_from_generators(n, gens)
            frame = build_frame(group, args.ambient)
            if args.max_degree is not None and delta_degree(frame) > args.max_degree:
                raise UnsupportedSizeError(
                    f"discriminant degree {delta_degree(frame)} exceeds --max-degree {args.max_degree}"
                )
            hd = secondary_degrees(frame)
            report = {
                "schema": SCHEMA_VERSION,
                "input": {"n": n, "generators": [str(g) for g in gens]},
                "group_order": group.order,
                "index": frame.index,
                "secondary_degrees": list(hd.degrees),
                "goebel_bound": hd.goebel_bound,
            }
            if args.format == "json":
                _emit(report, "json", args.out)
            else:
                text = (
                    f"index {report['index']}, secondary degrees {report['secondary_degrees']},"
                    f" degree bound {report['goebel_bound']}\n"
                )
                if args.out:
                    with open(args.out, "w", encoding="utf-8") as fh:
                        fh.write(text)
                else:
                    sys.stdout.write(text)
        elif args.command == "verify":
            n, gens = parse_group(args.group)
            group = group_from_generators(n, gens)
            frame = build_frame(group, args.ambient)
            hd = secondary_degrees(frame)
            secondary_set = universal_secondaries(frame, hd, point=point)
            verdict = is_good_prime(frame, secondary_set, args.prime)
            report = {
                "schema": SCHEMA_VERSION,
                "input": {"n": n, "generators": [str(g) for g in gens]},
                "group_order": group.order,
                "prime": verdict.prime,
                "is_good": verdict.is_good,
                "witness": None
                if verdict.witness is None
                else {
                    "degree": verdict.witness[0],
                    "orbit_sum": render_orbit_sum(verdict.witness[1]),
                },
            }
            if args.format == "json":
                _emit(report, "json", args.out)
            else:
                status = "good" if verdict.is_good else "bad"
                extra = ""
                if verdict.witness is not None:
                    extra = (
                        f" (witness {render_orbit_sum(verdict.witness[1])}"
                        f" at degree {verdict.witness[0]})"
                    )
                sys.stdout.write(f"prime {verdict.prime} is {status}{extra}\n")
        elif args.command == "oracle":
            n, gens = parse_group(args.group)
            group = group_from_generators(n, gens)
            frame = build_frame(group, args.ambient)
            hd = secondary_degrees(frame)
            secondary_set = universal_secondaries(frame, hd, point=point)
            evaluated = deficiency_evaluated(frame, secondary_set, universal=True)
            symbolic = deficiency_symbolic(frame, secondary_set, universal=True)
            agree = evaluated.deficiency == symbolic.deficiency
            if not agree:
                raise InternalCheckError(
                    f"evaluated deficiency {evaluated.deficiency} != symbolic {symbolic.deficiency}"
                )
            report = {
                "schema": SCHEMA_VERSION,
                "input": {"n": n, "generators": [str(g) for g in gens]},
                "deficiency": evaluated.deficiency,
                "det_sign": symbolic.det_sign,
                "methods_agree": agree,
                "identity": "det M = sign * deficiency * Delta(G)",
            }
            if args.format == "json":
                _emit(report, "json", args.out)
            else:
                sign = "+" if symbolic.det_sign > 0 else "-"
                sys.stdout.write(
                    f"det M = {sign}{evaluated.deficiency} * Delta(G); evaluated and symbolic agree\n"
                )
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except UnsupportedSizeError as exc:
        print(f"unsupported size: {exc}", file=sys.stderr)
        return 3
    except (InternalCheckError, CmprimesError) as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 4
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
