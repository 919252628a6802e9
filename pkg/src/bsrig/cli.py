"""Command line front end.

One binary, subcommand style.  The group is passed globally as
``--group n,m`` (negative values allowed, e.g. ``2,-3``); parameter-pair
subcommands (iso, obstruction, witness) take their pairs positionally and
need no group.  ``--format json`` emits exactly one JSON document on
stdout.  Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import fusion, hecke, rigidity, selftest, tree, words
from .words import bs, parse_word, format_word, normalize


@dataclass(frozen=True)
class CliConfig:
    group: tuple[int, int] | None
    format: str
    seed: int


class _UsageError(Exception):
    pass


def _parse_pair(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise _UsageError(f"expected 'n,m', got {text!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise _UsageError(f"expected two integers in {text!r}") from None
    if n == 0 or m == 0:
        raise _UsageError("group parameters must be nonzero")
    return n, m


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bsrig",
        description="Exact computations in Baumslag-Solitar groups BS(n, m).",
    )
    parser.add_argument("--group", help="group parameters n,m (e.g. 2,3 or 2,-3)")
    parser.add_argument("--format", choices=["text", "json"], default=None)
    parser.add_argument("--seed", type=int, default=None)

    # SUPPRESS keeps a subcommand-level absence from clobbering a value
    # given before the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)

    sub = parser.add_subparsers(dest="command", metavar="command")

    p = sub.add_parser("reduce", parents=[common], help="normal form of a word")
    p.add_argument("word")
    p = sub.add_parser("eq", parents=[common], help="equality of two words in the group")
    p.add_argument("word1")
    p.add_argument("word2")
    p = sub.add_parser("blength", parents=[common], help="b-length of a word")
    p.add_argument("word")
    p = sub.add_parser("profile", parents=[common], help="coset indices (l, r, L)")
    p.add_argument("word")
    p = sub.add_parser("qc", parents=[common], help="quasi-centralizer membership")
    p.add_argument("word")
    p = sub.add_parser("classify", parents=[common], help="elliptic or hyperbolic")
    p.add_argument("word")
    p = sub.add_parser("fixed", parents=[common], help="common fixed vertex of elliptic words")
    p.add_argument("words", nargs="+")
    p.add_argument("--radius", type=int, default=8)
    p = sub.add_parser("tree-ball", parents=[common], help="DOT export of a tree ball")
    p.add_argument("center")
    p.add_argument("radius", type=int)
    p = sub.add_parser("coset", parents=[common], help="canonical double coset")
    p.add_argument("word")
    p = sub.add_parser("convolve", parents=[common], help="double coset convolution")
    p.add_argument("word1")
    p.add_argument("word2")
    p = sub.add_parser("fuse-selfinv", parents=[common], help="self-inverse fusion decomposition")
    p.add_argument("word")
    p = sub.add_parser("exchange", parents=[common], help="exchange partners of a root of unity")
    p.add_argument("root", help="angle p/q")
    p.add_argument("word")
    p = sub.add_parser("invariants", parents=[common], help="derived invariants of the group")
    p.add_argument("--depth", type=int, default=3)
    p = sub.add_parser("iso", parents=[common], help="isomorphism of two parameter pairs")
    p.add_argument("pair1")
    p.add_argument("pair2")
    p = sub.add_parser("obstruction", parents=[common], help="crossed product obstruction verdict")
    p.add_argument("pair1")
    p.add_argument("pair2")
    p = sub.add_parser("witness", parents=[common], help="sign witness for n,|m| with n != |m|")
    p.add_argument("pair")
    sub.add_parser("selftest", parents=[common], help="run the desk-scale check suite")
    return parser


def _config(args: argparse.Namespace) -> CliConfig:
    group = _parse_pair(args.group) if args.group else None
    fmt = getattr(args, "format", None) or "text"
    seed = getattr(args, "seed", None)
    return CliConfig(group, fmt, 0 if seed is None else seed)


def _require_group(cfg: CliConfig) -> words.BsPresentation:
    if cfg.group is None:
        raise _UsageError("this subcommand needs --group n,m")
    return bs(*cfg.group)


def _parse_root(text: str) -> fusion.RootOfUnity:
    parts = text.split("/")
    try:
        if len(parts) == 1:
            return fusion.RootOfUnity.of(int(parts[0]), 1)
        if len(parts) == 2:
            return fusion.RootOfUnity.of(int(parts[0]), int(parts[1]))
    except (ValueError, ZeroDivisionError):
        pass
    raise ValueError(f"expected a fraction p/q, got {text!r}")


def _emit(cfg: CliConfig, payload, text: str | None = None) -> str:
    if cfg.format == "json" or text is None:
        return json.dumps(payload, separators=(",", ":")) + "\n"
    return text + "\n"


def _run(args: argparse.Namespace) -> str:
    cfg = _config(args)
    cmd = args.command

    if cmd == "reduce":
        G = _require_group(cfg)
        nf = normalize(parse_word(args.word), G)
        return _emit(cfg, {"word": format_word(nf)}, format_word(nf))

    if cmd == "eq":
        G = _require_group(cfg)
        equal = normalize(parse_word(args.word1), G) == normalize(parse_word(args.word2), G)
        return _emit(cfg, {"equal": equal}, "true" if equal else "false")

    if cmd == "blength":
        G = _require_group(cfg)
        k = words.b_length(parse_word(args.word), G)
        return _emit(cfg, {"b_length": k}, str(k))

    if cmd == "profile":
        G = _require_group(cfg)
        p = hecke.coset_profile(normalize(parse_word(args.word), G), G)
        return _emit(cfg, p.as_json())

    if cmd == "qc":
        G = _require_group(cfg)
        member = hecke.qc_member(normalize(parse_word(args.word), G), G)
        return _emit(cfg, {"qc": member}, "true" if member else "false")

    if cmd == "classify":
        G = _require_group(cfg)
        kind = tree.classify(normalize(parse_word(args.word), G), G)
        if isinstance(kind, tree.Elliptic):
            payload = {"kind": "elliptic", "witness": format_word(kind.witness)}
        else:
            payload = {"kind": "hyperbolic", "translation_length": kind.translation_length}
        return _emit(cfg, payload)

    if cmd == "fixed":
        G = _require_group(cfg)
        gs = [normalize(parse_word(w), G) for w in args.words]
        found = tree.common_fixed_vertex(gs, G, args.radius)
        if found is None:
            return _emit(cfg, {"vertex": None}, "absent")
        v, g0 = found
        payload = {"vertex": str(v), "g0": format_word(g0)}
        return _emit(cfg, payload, f"vertex={v} g0={format_word(g0)}")

    if cmd == "tree-ball":
        G = _require_group(cfg)
        center = tree.vertex_of(normalize(parse_word(args.center), G), G)
        dot = tree.export_ball(center, args.radius, G)
        return _emit(cfg, {"dot": dot}, dot.rstrip("\n"))

    if cmd == "coset":
        G = _require_group(cfg)
        D = hecke.double_coset(normalize(parse_word(args.word), G), G)
        payload = {"coset": str(D), "l": D.profile.l, "r": D.profile.r, "L": D.profile.L}
        return _emit(cfg, payload)

    if cmd == "convolve":
        G = _require_group(cfg)
        x = hecke.HeckeElement.single(hecke.double_coset(normalize(parse_word(args.word1), G), G))
        y = hecke.HeckeElement.single(hecke.double_coset(normalize(parse_word(args.word2), G), G))
        return _emit(cfg, hecke.hecke_convolve(x, y, G).as_json())

    if cmd == "fuse-selfinv":
        G = _require_group(cfg)
        dec = fusion.decompose_self_inverse(normalize(parse_word(args.word), G), G)
        return _emit(cfg, dec.as_json())

    if cmd == "exchange":
        G = _require_group(cfg)
        w = _parse_root(args.root)
        partners = fusion.exchange_partners(w, normalize(parse_word(args.word), G), G)
        ordered = sorted(partners, key=lambda u: u.angle)
        return _emit(cfg, [str(u) for u in ordered], " ".join(str(u) for u in ordered))

    if cmd == "invariants":
        G = _require_group(cfg)
        payload = {
            "n": G.n,
            "m": G.m,
            "k": G.k,
            "n0": G.n0,
            "m0": G.m0,
            "standard_form": G.is_standard,
            "amenable": rigidity.is_amenable(G.n, G.m),
            "canonical": list(rigidity.canonicalize(G.n, G.m)),
        }
        if G.is_standard:
            payload["index_values"] = sorted(hecke.f_set(args.depth, G))
        return _emit(cfg, payload)

    if cmd == "iso":
        n1, m1 = _parse_pair(args.pair1)
        n2, m2 = _parse_pair(args.pair2)
        same = rigidity.is_isomorphic(n1, m1, n2, m2)
        return _emit(cfg, {"isomorphic": same}, "true" if same else "false")

    if cmd == "obstruction":
        n1, m1 = _parse_pair(args.pair1)
        n2, m2 = _parse_pair(args.pair2)
        verdict = rigidity.crossed_product_obstruction(n1, m1, n2, m2)
        return _emit(cfg, verdict.as_json())

    if cmd == "witness":
        n, m = _parse_pair(args.pair)
        wit = rigidity.sign_witness(n, m)
        return _emit(cfg, wit.as_json())

    if cmd == "selftest":
        passed, failed, lines = selftest.run_selftest(cfg.seed)
        if cfg.format == "json":
            out = json.dumps({"passed": passed, "failed": failed}, separators=(",", ":")) + "\n"
        else:
            out = "\n".join(lines) + "\n"
        if failed:
            raise _SelftestFailure(out)
        return out

    raise _UsageError("missing subcommand")


class _SelftestFailure(Exception):
    def __init__(self, output: str):
        super().__init__("selftest failed")
        self.output = output


def run(argv: list[str]) -> int:
    """Entry point used by tests: returns the exit code, writing to the real
    stdout/stderr."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        sys.stdout.write(_run(args))
        return 0
    except _UsageError as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"bsrig: {exc}\n")
        return 2
    except _SelftestFailure as exc:
        sys.stdout.write(exc.output)
        return 1
    except (ValueError, RuntimeError) as exc:
        sys.stderr.write(f"bsrig: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
