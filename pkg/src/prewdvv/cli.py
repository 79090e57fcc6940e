"""Command-line front end.

Subcommands cover the main computations: face enumeration, f/h-vectors,
Hilbert series, the Morse matching with its verification, homology in
prime-field or integer mode, the link-vanishing check, the reference
h-vector table, and forest statistics of a single face.

Exit codes: 0 success, 2 usage error, 3 a verification-style command found
a failure (details as JSON on stderr), 4 the face-count cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import __version__
from .hilbert import hilbert_series, koszul_evidence, verify_table1
from .homology import reduced_betti, reisner_check
from .morse import (
    build_matching,
    characterize_critical,
    covers_all_faces,
    critical_census,
    matching_to_json,
    modified_hasse_dot,
    verify_acyclic,
)
from .partitions import members_of
from .whitehouse import (
    Face,
    build_direct,
    f_recurrence,
    forest_of,
    h_recurrence,
    link_decomposition,
    link_wedge_profile,
    mask_faces,
    total_face_count,
)

DEFAULT_MAX_FACES = 15_000_000


class VerificationFailure(Exception):
    """A check ran to completion and found the property violated."""

    def __init__(self, payload: dict):
        super().__init__(payload.get("reason", "verification failed"))
        self.payload = payload


class CapExceeded(Exception):
    """The requested size would enumerate more faces than allowed."""

    def __init__(self, payload: dict):
        super().__init__("face cap exceeded")
        self.payload = payload


@dataclass(frozen=True)
class RunConfig:
    """Where and how a command writes its result."""

    format: str
    output: str | None
    max_faces: int

    def emit(self, text: str):
        if not text.endswith("\n"):
            text += "\n"
        if self.output:
            with open(self.output, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)


def _guard_cap(n: int, config: RunConfig):
    total = total_face_count(n)
    if total > config.max_faces:
        raise CapExceeded({"n": n, "faces": total, "max_faces": config.max_faces})


def _dict_literal(d: dict) -> str:
    return "{%s}" % ", ".join(f"{k}: {d[k]}" for k in sorted(d))


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _face_text(face) -> str:
    if not face:
        return "{}"
    return "|".join("{%s}" % ",".join(map(str, members_of(m))) for m in face)


def _no_dot(config: RunConfig):
    if config.format == "dot":
        raise ValueError("format 'dot' is not available for this command")


# ---- subcommands -----------------------------------------------------------

def cmd_faces(args, config: RunConfig) -> int:
    _no_dot(config)
    _guard_cap(args.n, config)
    faces = sorted(mask_faces(args.n), key=lambda f: (len(f), f))
    if config.format == "json":
        config.emit(_json_text({
            "n": args.n,
            "faces": [[list(members_of(m)) for m in f] for f in faces],
        }))
    elif config.format == "csv":
        config.emit("\n".join(
            ";".join(" ".join(map(str, members_of(m))) for m in f)
            for f in faces))
    else:
        config.emit("\n".join(_face_text(f) for f in faces))
    return 0


def cmd_fvector(args, config: RunConfig) -> int:
    _no_dot(config)
    entries = f_recurrence(args.n).entries
    if config.format == "json":
        config.emit(_json_text({"n": args.n, "f": list(entries)}))
    elif config.format == "csv":
        config.emit(",".join(map(str, entries)))
    else:
        config.emit(", ".join(map(str, entries)))
    return 0


def cmd_hvector(args, config: RunConfig) -> int:
    _no_dot(config)
    entries = h_recurrence(args.n).entries
    if config.format == "json":
        config.emit(_json_text({"n": args.n, "h": list(entries)}))
    elif config.format == "csv":
        config.emit(",".join(map(str, entries)))
    else:
        config.emit(", ".join(map(str, entries)))
    return 0


def cmd_hilbert(args, config: RunConfig) -> int:
    _no_dot(config)
    series = hilbert_series(args.n)
    expansion = series.expand(args.terms)
    recip = series.reciprocal(args.terms) if args.reciprocal else None
    if config.format == "json":
        doc = {
            "n": args.n,
            "numerator": list(series.numerator),
            "denominator_power": series.denominator_power,
            "expansion": list(expansion),
        }
        if recip is not None:
            doc["reciprocal"] = list(recip)
        config.emit(_json_text(doc))
    elif config.format == "csv":
        config.emit(",".join(map(str, recip if recip is not None else expansion)))
    else:
        lines = [f"series: {series}",
                 "expansion: " + ", ".join(map(str, expansion))]
        if recip is not None:
            lines.append("reciprocal: " + ", ".join(map(str, recip)))
        config.emit("\n".join(lines))
    return 0


def cmd_morse(args, config: RunConfig) -> int:
    _guard_cap(args.n, config)
    matching = build_matching(args.n)
    census = critical_census(matching)
    if args.verify:
        acyclic = verify_acyclic(matching)
        covered = covers_all_faces(matching)
        crit = characterize_critical(matching)
        if not (acyclic.acyclic and covered and crit.ok):
            raise VerificationFailure({
                "reason": "morse verification failed",
                "n": args.n,
                "acyclic": acyclic.acyclic,
                "covers_all_faces": covered,
                "critical_ok": crit.ok,
                "census": {str(k): v for k, v in census.items()},
            })
    if args.export:
        config.emit(_json_text(matching_to_json(matching)))
        return 0
    if config.format == "dot":
        config.emit(modified_hasse_dot(matching))
        return 0
    if config.format == "json":
        doc = {
            "n": args.n,
            "pairs": matching.n_pairs(),
            "critical": {str(k): v for k, v in census.items()},
        }
        if args.verify:
            doc["acyclic"] = True
        config.emit(_json_text(doc))
    elif config.format == "csv":
        config.emit("\n".join(f"{k},{v}" for k, v in sorted(census.items())))
    else:
        if args.verify:
            config.emit(f"acyclic: true, critical: {_dict_literal(census)}")
        else:
            config.emit(f"pairs: {matching.n_pairs()}, "
                        f"critical: {_dict_literal(census)}")
    return 0


def cmd_homology(args, config: RunConfig) -> int:
    _no_dot(config)
    _guard_cap(args.n, config)
    profile = reduced_betti(build_direct(args.n), mode=args.ring)
    nonzero = profile.nonzero()
    if config.format == "json":
        doc = {
            "n": args.n,
            "ring": args.ring,
            "betti": {str(k): v for k, v in nonzero.items()},
            "torsion": {str(k): list(v) for k, v in profile.torsion.items()},
        }
        if profile.primes:
            doc["primes"] = list(profile.primes)
        config.emit(_json_text(doc))
    elif config.format == "csv":
        config.emit("\n".join(f"{k},{v}" for k, v in sorted(nonzero.items())))
    else:
        text = f"betti: {_dict_literal(nonzero)}"
        if profile.torsion:
            text += ", torsion: %s" % repr(
                {k: profile.torsion[k] for k in sorted(profile.torsion)})
        config.emit(text)
    return 0


def cmd_reisner(args, config: RunConfig) -> int:
    _no_dot(config)
    _guard_cap(args.n, config)
    report = reisner_check(args.n, jobs=args.jobs)
    if config.format == "json":
        config.emit(_json_text({
            "n": report.n,
            "ok": report.ok,
            "total_faces": report.total_faces,
            "classes": [{
                "signature": list(c.signature),
                "count": c.count,
                "link_dim": c.link_dim,
                "spheres": c.expected_spheres,
                "ok": c.ok,
            } for c in report.classes],
        }))
    elif config.format == "csv":
        lines = ["signature;count;link_dim;spheres;ok"]
        lines += [
            f"{' '.join(map(str, c.signature))};{c.count};"
            f"{c.link_dim};{c.expected_spheres};{str(c.ok).lower()}"
            for c in report.classes
        ]
        config.emit("\n".join(lines))
    else:
        lines = [f"ok: {str(report.ok).lower()}, "
                 f"classes: {len(report.classes)}, faces: {report.total_faces}"]
        for c in report.classes:
            lines.append(
                f"  {c.signature}: {c.count} faces, link dim {c.link_dim}, "
                f"spheres {c.expected_spheres}, "
                f"{'ok' if c.ok else 'FAILED'}")
        config.emit("\n".join(lines))
    if not report.ok:
        raise VerificationFailure({
            "reason": "link homology not concentrated in top dimension",
            "n": report.n,
            "failing": [list(c.signature) for c in report.classes if not c.ok],
        })
    return 0


def cmd_table1(args, config: RunConfig) -> int:
    _no_dot(config)
    report = verify_table1()
    if config.format == "json":
        config.emit(_json_text({
            "ok": report.ok,
            "rows": [{
                "n": r.n,
                "from_faces": list(r.from_faces),
                "from_recurrence": list(r.from_recurrence),
                "reference": list(r.reference),
                "ok": r.ok,
            } for r in report.rows],
        }))
    elif config.format == "csv":
        config.emit("\n".join(
            f"{r.n}," + ",".join(map(str, r.from_faces)) for r in report.rows))
    else:
        lines = [
            f"n={r.n}: " + ", ".join(map(str, r.from_faces))
            + ("" if r.ok else "  MISMATCH")
            for r in report.rows
        ]
        lines.append(f"ok: {str(report.ok).lower()}")
        config.emit("\n".join(lines))
    if not report.ok:
        raise VerificationFailure({
            "reason": "h-vector table mismatch",
            "rows": [r.n for r in report.rows if not r.ok],
        })
    return 0


def cmd_koszul(args, config: RunConfig) -> int:
    _no_dot(config)
    ev = koszul_evidence(args.n, terms=args.terms)
    if config.format == "json":
        config.emit(_json_text({
            "n": ev.n,
            "terms": list(ev.terms),
            "alternating": ev.alternating,
        }))
    elif config.format == "csv":
        config.emit(",".join(map(str, ev.terms)))
    else:
        config.emit("reciprocal: " + ", ".join(map(str, ev.terms))
                    + f"\nalternating: {str(ev.alternating).lower()}")
    if not ev.alternating:
        raise VerificationFailure({
            "reason": "reciprocal coefficients do not alternate",
            "n": ev.n,
            "terms": list(ev.terms),
        })
    return 0


def cmd_forest(args, config: RunConfig) -> int:
    face = Face.from_json(json.loads(args.face))
    forest = forest_of(face)
    factors = link_decomposition(face)
    wedge_dim, spheres = link_wedge_profile(face)
    if config.format == "dot":
        config.emit(forest.to_dot())
        return 0
    counts = forest.child_counts()
    if config.format == "json":
        config.emit(_json_text({
            "n": face.n,
            "blocks": [list(b.members) for b in face.blocks],
            "components": forest.component_count,
            "children": {
                ",".join(map(str, b.members)): c for b, c in counts.items()
            },
            "link_factors": list(factors),
            "wedge_dim": wedge_dim,
            "spheres": spheres,
        }))
    elif config.format == "csv":
        config.emit(",".join(map(str, factors)))
    else:
        kids = ", ".join(
            "{%s}: %d" % (",".join(map(str, b.members)), counts[b])
            for b in sorted(counts))
        lines = [f"components: {forest.component_count}"]
        if kids:
            lines.append(f"children: {kids}")
        lines.append(f"link factors: {factors}")
        lines.append(f"wedge: dimension {wedge_dim}, spheres {spheres}")
        config.emit("\n".join(lines))
    return 0


# ---- parser ----------------------------------------------------------------

def _add_common(sub):
    sub.add_argument("--format", choices=("plain", "json", "csv", "dot"),
                     default="plain", help="output format (default: plain)")
    sub.add_argument("--output", metavar="FILE",
                     help="write to FILE instead of stdout")
    sub.add_argument("--max-faces", type=int, default=DEFAULT_MAX_FACES,
                     metavar="N",
                     help="refuse enumerations beyond N faces "
                          f"(default: {DEFAULT_MAX_FACES})")


def _add_n(sub):
    sub.add_argument("n", type=int, help="ambient size (at least 3)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prewdvv",
        description="Whitehouse complex toolkit: faces, Morse matching, "
                    "homology, and the Hilbert series of its face ring.")
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("faces", help="list every face")
    _add_n(p)
    _add_common(p)
    p.set_defaults(func=cmd_faces)

    p = subs.add_parser("fvector", help="face counts by dimension")
    _add_n(p)
    _add_common(p)
    p.set_defaults(func=cmd_fvector)

    p = subs.add_parser("hvector", help="h-vector of the complex")
    _add_n(p)
    _add_common(p)
    p.set_defaults(func=cmd_hvector)

    p = subs.add_parser("hilbert", help="Hilbert series of the face ring")
    _add_n(p)
    p.add_argument("--terms", type=int, default=12,
                   help="how many coefficients to expand (default: 12)")
    p.add_argument("--reciprocal", action="store_true",
                   help="also expand 1/H(t)")
    _add_common(p)
    p.set_defaults(func=cmd_hilbert)

    p = subs.add_parser("morse", help="build the Morse matching")
    _add_n(p)
    p.add_argument("--verify", action="store_true",
                   help="check acyclicity, coverage, and the critical cells")
    p.add_argument("--export", action="store_true",
                   help="emit the full matching as JSON")
    _add_common(p)
    p.set_defaults(func=cmd_morse)

    p = subs.add_parser("homology", help="reduced Betti numbers")
    _add_n(p)
    p.add_argument("--ring", choices=("field", "integer"), default="field",
                   help="coefficients: two prime fields (default) or exact "
                        "integers with torsion")
    _add_common(p)
    p.set_defaults(func=cmd_homology)

    p = subs.add_parser("reisner", help="link homology vanishing check")
    _add_n(p)
    p.add_argument("--jobs", type=int, default=1,
                   help="parallel worker processes (default: 1)")
    _add_common(p)
    p.set_defaults(func=cmd_reisner)

    p = subs.add_parser("table1", help="recompute the reference h-vectors")
    _add_common(p)
    p.set_defaults(func=cmd_table1)

    p = subs.add_parser("koszul", help="sign pattern of 1/H(t)")
    _add_n(p)
    p.add_argument("--terms", type=int, default=20,
                   help="how many coefficients to test (default: 20)")
    _add_common(p)
    p.set_defaults(func=cmd_koszul)

    p = subs.add_parser("forest", help="forest statistics of one face")
    p.add_argument("face", metavar="FACE_JSON",
                   help='face as JSON, e.g. \'{"n": 6, "blocks": [[2, 3]]}\'')
    _add_common(p)
    p.set_defaults(func=cmd_forest)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    config = RunConfig(format=args.format, output=args.output,
                       max_faces=getattr(args, "max_faces", DEFAULT_MAX_FACES))
    try:
        return args.func(args, config)
    except VerificationFailure as exc:
        sys.stderr.write(_json_text({"error": "verification", **exc.payload}) + "\n")
        return 3
    except CapExceeded as exc:
        sys.stderr.write(_json_text({"error": "cap", **exc.payload}) + "\n")
        return 4
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
