"""Command-line front end.

Exit status: 0 success, 1 unparsable word or vertex literal, 2 precondition
violation, 3 internal invariant breach (failed relator, cycle in the tree).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Callable, Optional, Sequence, TextIO

from . import amalgam, factors, homology, tree
from .words import Word, WordParseError, parse_word, render

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_PRECONDITION = 2
EXIT_INVARIANT = 3


class _InvariantBreach(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # usage mistakes are input errors, same as a bad word
    def error(self, message):
        self.print_usage(sys.stderr)
        raise WordParseError(f"{self.prog}: error: {message}")


def _word(text: str) -> Word:
    return () if text.strip() in ("", "1") else parse_word(text)


def _word_text(w: Word) -> str:
    return render(w) or "1"


def _order_value(k):
    return "infinite" if k == math.inf else k


def _cmd_nf(args):
    x = amalgam.normal_form(_word(args.word))
    return amalgam.elem_to_json(x), str(x)


def _cmd_eq(args):
    same = amalgam.equal(_word(args.w1), _word(args.w2))
    return {"equal": same}, "true" if same else "false"


def _cmd_order(args):
    k = _order_value(amalgam.order(_word(args.word)))
    return {"order": k}, str(k)


def _cmd_member(args):
    m = amalgam.membership(_word(args.word))
    return {"membership": m.value}, m.value


def _cmd_dist(args):
    d = tree.distance(tree.parse_vertex(args.v1), tree.parse_vertex(args.v2))
    return {"distance": d}, str(d)


def _vertex_list(vs):
    return {"vertices": [tree.vertex_to_json(v) for v in vs]}, "\n".join(map(str, vs))


def _cmd_geodesic(args):
    return _vertex_list(tree.geodesic(tree.parse_vertex(args.v1), tree.parse_vertex(args.v2)))


def _cmd_neighbors(args):
    if args.twist < 1:
        raise tree.PreconditionError("--twist must be >= 1")
    return _vertex_list(tree.neighbors(tree.parse_vertex(args.v), args.twist))


def _cmd_descend(args):
    u, mate = tree.descend(tree.parse_vertex(args.v), tree.parse_vertex(args.target))
    return (
        {"u": tree.vertex_to_json(u), "mate": tree.vertex_to_json(mate)},
        f"u: {u}\nmate: {mate}",
    )


def _cmd_ball(args):
    if args.radius < 0 or args.twist < 1:
        raise tree.PreconditionError("need --radius >= 0 and --twist >= 1")
    ball = tree.enumerate_ball(args.radius, args.twist)
    n_p = sum(1 for v in ball.depth if v.kind == "P")
    payload = {
        "radius": ball.radius,
        "twist_bound": ball.twist_bound,
        "vertex_count": len(ball),
        "p_vertices": n_p,
        "m_vertices": len(ball) - n_p,
        "cycle_witnesses": [[str(a), str(b)] for a, b in ball.cycle_witnesses],
    }
    text = "\n".join(
        [
            f"radius: {ball.radius}",
            f"twist_bound: {ball.twist_bound}",
            f"vertices: {len(ball)} ({n_p} P, {len(ball) - n_p} M)",
            f"cycle witnesses: {len(ball.cycle_witnesses)}",
        ]
    )
    if ball.cycle_witnesses:
        raise _InvariantBreach((payload, text))
    return payload, text


RELATOR_FAMILIES = (
    ("H2", tuple(render(r) for r in amalgam.relators())),
    ("H_P", factors.P_RELATORS),
    ("H_M", factors.M_RELATORS),
    ("H_E", factors.E_RELATORS),
)


def relcheck_rows() -> list[dict]:
    rows = []
    for family, words in RELATOR_FAMILIES:
        for r in words:
            w = parse_word(r)
            engine = amalgam.is_identity(amalgam.normal_form(w))
            hom = homology.represent(w) == homology.IDENTITY_MATRIX
            rows.append({"family": family, "relator": r, "engine": engine, "homology": hom, "ok": engine and hom})
    return rows


def _cmd_relcheck(args):
    rows = relcheck_rows()
    all_ok = all(r["ok"] for r in rows)
    lines = [f"{'family':<6} {'relator':<8} {'engine':<7} {'homology':<9} status"]
    for r in rows:
        lines.append(
            f"{r['family']:<6} {r['relator']:<8} {str(r['engine']).lower():<7} "
            f"{str(r['homology']).lower():<9} {'ok' if r['ok'] else 'FAIL'}"
        )
    lines.append(f"{sum(r['ok'] for r in rows)}/{len(rows)} ok")
    payload = {"rows": rows, "all_ok": all_ok}
    text = "\n".join(lines)
    if not all_ok:
        raise _InvariantBreach((payload, text))
    return payload, text


def _cmd_homrep(args):
    m = homology.represent(_word(args.word)).tolist()
    return {"matrix": m}, "\n".join(" ".join(f"{v:3d}" for v in row) for row in m)


def _cmd_theta(args):
    w = amalgam.theta_twist(_word(args.word))
    return {"word": render(w)}, _word_text(w)


_COMMANDS: dict[str, Callable] = {
    "nf": _cmd_nf,
    "eq": _cmd_eq,
    "order": _cmd_order,
    "member": _cmd_member,
    "dist": _cmd_dist,
    "geodesic": _cmd_geodesic,
    "neighbors": _cmd_neighbors,
    "descend": _cmd_descend,
    "ball": _cmd_ball,
    "relcheck": _cmd_relcheck,
    "homrep": _cmd_homrep,
    "theta": _cmd_theta,
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")

    p = _Parser(prog="goeritz", description="Word problem and tree geometry for the genus-2 Goeritz group.")
    p.add_argument("--json", action="store_true", help="emit JSON")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help, *args):
        sp = sub.add_parser(name, help=help, parents=[common])
        for a in args:
            sp.add_argument(a)
        return sp

    add("nf", "normal form of a word", "word")
    add("eq", "decide whether two words are equal", "w1", "w2")
    add("order", "order of a word", "word")
    add("member", "factor membership", "word")
    add("dist", "tree distance between vertices", "v1", "v2")
    add("geodesic", "shortest path between vertices", "v1", "v2")
    add("neighbors", "neighbours of a vertex", "v").add_argument("--twist", type=int, default=1)
    add("descend", "closer sphere vertex and its triangle mate", "v", "target")
    ball = add("ball", "enumerate a ball around v_P")
    ball.add_argument("--radius", type=int, required=True)
    ball.add_argument("--twist", type=int, default=1)
    add("relcheck", "verify every relator family")
    add("homrep", "homology matrix of a word", "word")
    add("theta", "apply the theta twist to a word", "word")
    return p


def _emit(payload, text, as_json: bool, out: TextIO) -> None:
    print(json.dumps(payload) if as_json else text, file=out)


def run(argv: Optional[Sequence[str]] = None, out: TextIO = None, err: TextIO = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except WordParseError as e:
        print(e, file=err)
        return EXIT_PARSE
    as_json = getattr(args, "json", False)
    try:
        payload, text = _COMMANDS[args.command](args)
    except WordParseError as e:
        print(f"parse error: {e}", file=err)
        return EXIT_PARSE
    except tree.PreconditionError as e:
        print(f"precondition violated: {e}", file=err)
        return EXIT_PRECONDITION
    except _InvariantBreach as e:
        payload, text = e.args[0]
        _emit(payload, text, as_json, out)
        print("internal invariant breached", file=err)
        return EXIT_INVARIANT
    _emit(payload, text, as_json, out)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
