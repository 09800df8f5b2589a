"""Command-line entry point: ``polyforge <subcommand> ...``.

Exit codes: 0 all requested checks pass, 1 a check failed, 2 a resource cap
was hit.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any

from . import __version__
from .claims import run_claims
from .corpus import parse_group
from .cstring import check_intersection_property, check_string_relations, schlafli
from .fap import has_fap_cofaces, has_fap_faces, n_minus, n_plus
from .fpres import (DEFAULT_MAX_COSETS, flat_presentation, presentation_44,
                    todd_coxeter, universal_presentation)
from .geometry import (build_poset, check_diamond, check_flag_connected, flag_graph_dot,
                       hasse_dot, to_json)
from .kernel import CapExceeded, closure_order
from .mix import build_flat_tower, tower_order
from .power import power_2k, predicted_order_2kg, proper_central_involutions
from .semireg import (build_semireg_poset, build_semiregular, constituent_posets,
                      doubling_automorphism_exists, facet_family_counts,
                      families_alternate, full_automorphism_group, predicted_order,
                      semireg_f0_formula)
from .toroidal import TorusParams, build_torus_group, params_for_exponent, polarity_exists


def _ints(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


class Report:
    """Ordered key/value rows plus a list of named pass/fail checks."""

    def __init__(self, title: str):
        self.title = title
        self.values: dict[str, Any] = {}
        self.checks: dict[str, bool] = {}

    def value(self, key: str, v: Any) -> None:
        self.values[key] = v

    def check(self, key: str, ok: bool) -> None:
        self.checks[key] = bool(ok)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def render(self, as_json: bool) -> str:
        if as_json:
            return json.dumps({"title": self.title, "values": self.values,
                               "checks": self.checks, "passed": self.passed}, indent=1, default=str)
        lines = [self.title]
        for k, v in self.values.items():
            lines.append(f"  {k:<28} {v}")
        for k, ok in self.checks.items():
            lines.append(f"  {k:<28} {'pass' if ok else 'FAIL'}")
        return "\n".join(lines)


def cmd_toroidal(a) -> Report:
    if a.params:
        params = TorusParams(*_ints(a.params))
    else:
        params = params_for_exponent(a.n)
    G = build_torus_group(params)
    r = Report(f"toroidal {G.name}")
    r.value("params", str(params))
    r.value("order", G.order())
    r.value("schlafli", schlafli(G))
    r.value("self_dual", polarity_exists(G))
    r.value("|N(alpha0)|", n_minus(G, 0).order())
    r.value("|N(alpha2)|", n_plus(G, 2).order())
    r.check("order = 8(s^2+t^2)", G.order() == params.group_order)
    r.check("intersection property", check_intersection_property(G))
    r.value("FAP vertex-figures", has_fap_cofaces(G, 0))
    r.value("FAP facets", has_fap_faces(G, 2))
    return r


def cmd_flat(a) -> Report:
    ns = _ints(a.types)
    T = build_flat_tower(ns)
    r = Report(f"flat tower {T.name}")
    r.value("rank", T.rank)
    r.value("order", T.order())
    r.value("schlafli", schlafli(T))
    r.check("order formula", T.order() == tower_order(ns))
    r.check("intersection property", check_intersection_property(T, "reduced"))
    r.check("FAP facets", has_fap_faces(T, T.rank - 1))
    r.check("FAP vertex-figures", has_fap_cofaces(T, 0))
    return r


def cmd_semireg(a) -> Report:
    tail = tuple(_ints(a.tail or ""))
    last = tuple(_ints(a.last))
    if len(last) != 2:
        raise SystemExit("--last needs two values a,b")
    T = build_semiregular(tail, last)
    r = Report(f"semiregular {T.name}")
    r.value("rank", T.rank)
    r.value("order", T.order())
    doubling = doubling_automorphism_exists(T)
    r.value("doubling", doubling)
    r.value("full group order", full_automorphism_group(T).order())
    r.check("order formula", T.order() == predicted_order(tail, last))
    r.check("doubling iff n = m", doubling == (last[0] == last[1]))
    if not a.no_poset:
        S = build_semireg_poset(T, limit=a.poset_limit)
        PP, QQ, KK = constituent_posets(T)
        r.value("f-vector", S.f_vector())
        r.value("facet families", facet_family_counts(S))
        r.check("f0 formula", S.counts[0] == semireg_f0_formula(PP.counts[0], QQ.counts[0],
                                                                 KK.counts[0]))
        r.check("families alternate", families_alternate(S))
        r.check("diamond", check_diamond(S))
    return r


def cmd_power(a) -> Report:
    K = parse_group(a.base)
    G = power_2k(K)
    r = Report(f"power {G.name}")
    r.value("order", G.order())
    r.value("schlafli", schlafli(G))
    r.value("degree", G.degree)
    r.check("intersection property", check_intersection_property(G, "reduced"))
    invs = proper_central_involutions(K)
    r.value("proper central involutions of base", len(invs))
    r.value("  also avoiding facet group", sum(c.avoids_facet for c in invs))
    if a.m is not None:
        r.value(f"predicted |2^(K,G(2^{a.m}))|", predicted_order_2kg(K, a.m))
    return r


def _registry(specs: list[str]):
    return [(s, parse_group(s)) for s in specs]


def cmd_verify(a) -> Report:
    r = Report("verify")
    chosen = {k for k in ("fap", "intersection", "orders", "diamond") if getattr(a, k)}
    if a.all or not chosen:
        chosen = {"fap", "intersection", "orders", "diamond"}
    for spec, G in _registry(a.group or []):
        if "orders" in chosen:
            r.check(f"{spec} chain order = closure", G.order() == closure_order(G))
        if "intersection" in chosen:
            r.check(f"{spec} relations", not check_string_relations(G))
            r.check(f"{spec} intersection property", check_intersection_property(G))
        if "fap" in chosen:
            r.value(f"{spec} FAP facets", has_fap_faces(G, G.rank - 1))
        if "diamond" in chosen:
            P = build_poset(G)
            r.check(f"{spec} diamond", check_diamond(P))
            r.check(f"{spec} flag connected", check_flag_connected(P))
    return r


def cmd_lattice(a) -> Report:
    G = parse_group(a.group)
    P = build_poset(G)
    if a.export == "json":
        text = to_json(P)
    elif a.flags:
        text = flag_graph_dot(P)
    else:
        text = hasse_dot(P)
    Path(a.out).write_text(text)
    r = Report(f"lattice {P.name}")
    r.value("f-vector", P.f_vector())
    r.value("written", a.out)
    return r


def cmd_tc(a) -> Report:
    if a.preset == "torus":
        P = presentation_44(*_ints(a.params or "2,0"))
        expected = TorusParams(*_ints(a.params or "2,0")).group_order
    elif a.preset == "flat":
        ns = _ints(a.types or "5,5")
        P = flat_presentation(ns, not a.no_commutators)
        expected = tower_order(ns) if not a.no_commutators else None
    else:
        sections = [TorusParams(*_ints(s)) for s in (a.sections or "2,0;2,0").split(";")]
        P = universal_presentation(sections)
        expected = None
    n = todd_coxeter(P, (), a.max_cosets, a.strategy)
    r = Report(f"coset enumeration {P.name}")
    r.value("strategy", a.strategy)
    r.value("order", n)
    if expected is not None:
        r.check("order matches construction", n == expected)
    return r


def cmd_reproduce(a) -> Report:
    r = Report("reproduce")
    for res in run_claims(a.only):
        r.value(res.key, f"{res.seconds:7.2f}s  {res.detail}")
        r.check(res.key, res.passed)
    return r


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="polyforge", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("toroidal", help="[4,4]_(s,t) groups")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=int, help="exponent: the group of order 2^n")
    g.add_argument("--params", help="s,t")
    s.set_defaults(fn=cmd_toroidal)

    s = sub.add_parser("flat", help="flat {4,...,4} towers")
    s.add_argument("--types", required=True, help="n3,n4,...")
    s.set_defaults(fn=cmd_flat)

    s = sub.add_parser("semireg", help="alternating semiregular polytopes")
    s.add_argument("--tail", default="", help="n3,...,n_{d-2} (empty for d=4)")
    s.add_argument("--last", required=True, help="n_{d-1},m_{d-1}")
    s.add_argument("--no-poset", action="store_true")
    s.add_argument("--poset-limit", type=int, default=2**15)
    s.set_defaults(fn=cmd_semireg)

    s = sub.add_parser("power", help="power polytopes 2^K")
    s.add_argument("--base", required=True, help="group spec, e.g. square or torus:2,0")
    s.add_argument("--m", type=int)
    s.set_defaults(fn=cmd_power)

    s = sub.add_parser("verify", help="run checks on named groups")
    s.add_argument("--group", action="append", help="group spec (repeatable)")
    for flag in ("all", "fap", "intersection", "orders", "diamond"):
        s.add_argument(f"--{flag}", action="store_true")
    s.set_defaults(fn=cmd_verify)

    s = sub.add_parser("lattice", help="export a face lattice")
    s.add_argument("--group", default="torus:2,0")
    s.add_argument("--export", choices=("json", "dot"), required=True)
    s.add_argument("--flags", action="store_true", help="DOT of the flag graph")
    s.add_argument("--out", required=True)
    s.set_defaults(fn=cmd_lattice)

    s = sub.add_parser("tc", help="Todd-Coxeter coset enumeration")
    s.add_argument("--preset", choices=("torus", "flat", "universal"), required=True)
    s.add_argument("--params", help="torus: s,t")
    s.add_argument("--types", help="flat: n3,n4,...")
    s.add_argument("--no-commutators", action="store_true")
    s.add_argument("--sections", help="universal: 's,t;s,t;...'")
    s.add_argument("--strategy", choices=("hlt", "felsch"), default="hlt")
    s.add_argument("--max-cosets", type=int, default=DEFAULT_MAX_COSETS)
    s.set_defaults(fn=cmd_tc)

    s = sub.add_parser("reproduce", help="check every numeric claim")
    s.add_argument("--only", action="append", help="claim key prefix (repeatable)")
    s.set_defaults(fn=cmd_reproduce)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        report = args.fn(args)
    except CapExceeded as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(report.render(args.json))
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
