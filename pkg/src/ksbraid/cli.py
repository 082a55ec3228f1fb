"""Command-line interface: ``ksbraid {hom,gin,is-identity,check,burau}``.

Exit codes: 0 success or true, 1 failed check or false, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from .braid_functors import BraidWord, apply_word, grothendieck_class, r_apply, tl_check
from .burau import LaurentPoly, burau_matrix, euler_pairing, reduced_burau, vector_from_class
from .complexes import fingerprint, hom_poincare, projective
from .curves import (
    apply_word_curve,
    basic_curve,
    gin_basic,
    gin_by_types,
    ibigr_basic,
    identity_witness,
    l_complex,
)
from .path_algebra import AlgebraSpec, Coefficients

SCHEMA_VERSION = 1
SUITES = ("tl", "braid-relations", "inverses", "dimequals", "main-theorem", "burau-euler")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    m: int = 2
    coefficients: Coefficients = Coefficients.INTEGERS
    braid: str = ""
    i: int = 0
    j: int = 0
    suite: Optional[str] = None
    seed: int = 0
    max_len: int = 8
    cases: int = 50
    n: Optional[int] = None
    fmt: str = "text"

    def word(self) -> BraidWord:
        try:
            return BraidWord.parse(self.m, self.braid)
        except ValueError as e:
            raise UsageError(str(e)) from None

    def validate(self) -> None:
        if self.m < 1:
            raise UsageError("--m must be at least 1")
        for name in ("i", "j"):
            v = getattr(self, name)
            if not 0 <= v <= self.m:
                raise UsageError(f"--{name} must lie in 0..{self.m}")
        if self.max_len < 0 or self.cases < 0:
            raise UsageError("--max-len and --cases must be nonnegative")
        self.word()


Report = Tuple[dict, List[str], int]


def random_word(rng: random.Random, m: int, max_len: int) -> BraidWord:
    n = rng.randint(0, max_len)
    return BraidWord(m, tuple(rng.choice((1, -1)) * rng.randint(1, m) for _ in range(n)))


def _poly_at_n(poly, n: int) -> Dict[int, int]:
    return poly.specialize(1, n)


def _laurent_str(terms: Dict[int, int]) -> str:
    return str(LaurentPoly(terms))


# ---------------------------------------------------------------------------
# commands


def cmd_hom(cfg: RunConfig) -> Report:
    w = cfg.word()
    spec = AlgebraSpec(cfg.m, cfg.coefficients)
    c = apply_word(w, projective(cfg.j, spec))
    poly, torsion = hom_poincare(cfg.i, c)
    curve_poly = ibigr_basic(cfg.i, apply_word_curve(w, basic_curve(cfg.j, cfg.m)))
    if poly != curve_poly:
        raise AssertionError(f"Hom side {poly} differs from curve side {curve_poly}")
    data = {
        "poincare": poly.to_json(),
        "total_rank": poly.total(),
        "torsion": [{"r1": t.r1, "r2": t.r2, "factors": list(t.factors)} for t in torsion],
        "curve_side_agrees": True,
    }
    lines = [
        f"Hom(P_{cfg.i}, R_w P_{cfg.j}) = {poly}",
        f"total rank: {poly.total()}",
        "torsion: " + (", ".join(f"({t.r1},{t.r2}): {t.factors}" for t in torsion) or "none"),
    ]
    return data, lines, 0


def cmd_gin(cfg: RunConfig) -> Report:
    w = cfg.word()
    curve = apply_word_curve(w, basic_curve(cfg.j, cfg.m))
    poly = ibigr_basic(cfg.i, curve)
    gin = gin_basic(cfg.i, curve)
    data = {"gin": str(gin), "ibigr": poly.to_json()}
    lines = [f"I(b_{cfg.i}, w(b_{cfg.j})) = {gin}", f"I^bigr = {poly}"]
    if cfg.n is not None:
        spec_n = _poly_at_n(poly, cfg.n)
        data["specialization"] = {"n": cfg.n, "terms": [{"e": e, "c": c} for e, c in spec_n.items()]}
        lines.append(f"q1=q, q2=q^{cfg.n}: {_laurent_str(spec_n)}")
    return data, lines, 0


def cmd_is_identity(cfg: RunConfig) -> Report:
    w = cfg.word()
    wit = identity_witness(w)
    data: dict = {"identity": wit is None}
    if wit is None:
        return data, ["true"], 0
    j, k, which = wit
    data["witness"] = {"j": j, "k": k, "power": which}
    return data, [f"false (I(b_{j}, {which}(b_{k})) != I(b_{j}, b_{k}))"], 1


def cmd_burau(cfg: RunConfig) -> Report:
    w = cfg.word()
    full = burau_matrix(w)
    red = reduced_burau(w)
    data = {"burau": full.to_json(), "reduced": red.to_json()}
    lines = ["Burau:", str(full), "reduced:", str(red)]
    return data, lines, 0


def _suite_cases(cfg: RunConfig) -> List[Tuple[str, Callable[[], bool]]]:
    m = cfg.m
    spec = AlgebraSpec(m, cfg.coefficients)
    cases: List[Tuple[str, Callable[[], bool]]] = []
    if cfg.suite == "tl":
        for k in range(1, m + 1):
            for l in range(1, m + 1):
                for j in range(m + 1):
                    cases.append((f"U{k}U{l} P{j}", lambda k=k, l=l, j=j: tl_check(k, l, projective(j, spec))))
    elif cfg.suite == "inverses":
        for k in range(1, m + 1):
            for j in range(m + 1):
                for s in (1, -1):
                    def case(k=k, j=j, s=s) -> bool:
                        c = r_apply(k, -s, r_apply(k, s, projective(j, spec)))
                        return fingerprint(c) == ((j, 0, 0),)
                    cases.append((f"R{k}^{-s} R{k}^{s} P{j}", case))
    elif cfg.suite == "braid-relations":
        pairs = []
        for i in range(1, m):
            pairs.append(((i, i + 1, i), (i + 1, i, i + 1)))
        for a in range(1, m + 1):
            for b in range(a + 2, m + 1):
                pairs.append(((a, b), (b, a)))
        for lhs, rhs in pairs:
            for j in range(m + 1):
                def case(lhs=lhs, rhs=rhs, j=j) -> bool:
                    c1 = apply_word(BraidWord(m, lhs), projective(j, spec))
                    c2 = apply_word(BraidWord(m, rhs), projective(j, spec))
                    if fingerprint(c1) != fingerprint(c2):
                        return False
                    return all(hom_poincare(i, c1)[0] == hom_poincare(i, c2)[0] for i in range(m + 1))
                cases.append((f"{lhs} vs {rhs} on P{j}", case))
    else:
        rng = random.Random(cfg.seed)
        for n in range(cfg.cases):
            w = random_word(rng, m, cfg.max_len)
            j = rng.randint(0, m)
            cases.append((f"w=[{w}] j={j}", _random_case(cfg.suite, w, j, spec)))
    return cases


def _random_case(suite: str, w: BraidWord, j: int, spec: AlgebraSpec) -> Callable[[], bool]:
    m = w.m

    def case() -> bool:
        c = apply_word(w, projective(j, spec))
        if suite == "burau-euler":
            if vector_from_class(grothendieck_class(c)) != burau_matrix(w).column(j):
                return False
            return all(
                LaurentPoly(hom_poincare(i, c)[0].at_q1_minus_one()) == euler_pairing(i, w, j)
                for i in range(m + 1)
            )
        curve = apply_word_curve(w, basic_curve(j, m))
        if suite == "main-theorem":
            return fingerprint(l_complex(curve)) == fingerprint(c)
        for i in range(m + 1):
            poly, torsion = hom_poincare(i, c)
            if torsion or poly != ibigr_basic(i, curve):
                return False
            if Fraction(poly.total(), 2) != gin_by_types(i, curve):
                return False
        return True

    return case


def cmd_check(cfg: RunConfig) -> Report:
    if cfg.suite not in SUITES:
        raise UsageError(f"unknown suite {cfg.suite!r}; choose from {', '.join(SUITES)}")
    results = []
    for name, fn in _suite_cases(cfg):
        try:
            ok = bool(fn())
        except Exception as e:  # a crash is a failed case, reported with its message
            ok = False
            name = f"{name} ({type(e).__name__}: {e})"
        results.append((name, ok))
    passed = sum(ok for _, ok in results)
    failed = [name for name, ok in results if not ok]
    data = {"suite": cfg.suite, "passed": passed, "failed": len(failed), "failures": failed}
    lines = [f"suite {cfg.suite}: {passed} passed, {len(failed)} failed"] + [f"FAIL {n}" for n in failed]
    return data, lines, 0 if not failed else 1


COMMANDS: Dict[str, Callable[[RunConfig], Report]] = {
    "hom": cmd_hom,
    "gin": cmd_gin,
    "is-identity": cmd_is_identity,
    "check": cmd_check,
    "burau": cmd_burau,
}


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=int, default=2, help="number of generators (vertices 0..m)")
    common.add_argument("--braid", default="", help='braid word such as "1,-2,3"; empty is the identity')
    common.add_argument("--coefficients", choices=["integers", "mod2"], default="integers")
    common.add_argument("--format", dest="fmt", choices=["text", "json"], default="text")

    parser = argparse.ArgumentParser(prog="ksbraid", description="Categorified braid action over A_m.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name in ("hom", "gin"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("--i", type=int, required=True)
        p.add_argument("--j", type=int, required=True)
        if name == "gin":
            p.add_argument("--n", type=int, default=None, help="also print the q1=q, q2=q^n specialization")
    sub.add_parser("is-identity", parents=[common])
    sub.add_parser("burau", parents=[common])
    p = sub.add_parser("check", parents=[common])
    p.add_argument("--suite", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-len", type=int, default=8)
    p.add_argument("--cases", type=int, default=50, help="number of sampled words for randomized suites")
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    coeff = Coefficients.MOD2 if ns.coefficients == "mod2" else Coefficients.INTEGERS
    return RunConfig(
        command=ns.command,
        m=ns.m,
        coefficients=coeff,
        braid=ns.braid,
        i=getattr(ns, "i", 0),
        j=getattr(ns, "j", 0),
        suite=getattr(ns, "suite", None),
        seed=getattr(ns, "seed", 0),
        max_len=getattr(ns, "max_len", 8),
        cases=getattr(ns, "cases", 50),
        n=getattr(ns, "n", None),
        fmt=ns.fmt,
    )


def _glue_braid(argv: List[str]) -> List[str]:
    """Allow ``--braid -1,2``: argparse would read the value as an option."""
    out: List[str] = []
    it = iter(argv)
    for a in it:
        if a == "--braid":
            val = next(it, None)
            out.append("--braid" if val is None else f"--braid={val}")
        else:
            out.append(a)
    return out


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    argv = _glue_braid(list(sys.argv[1:] if argv is None else argv))
    try:
        ns = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    cfg = config_from_args(ns)
    try:
        cfg.validate()
        data, lines, code = COMMANDS[cfg.command](cfg)
    except UsageError as e:
        print(f"ksbraid: error: {e}", file=sys.stderr)
        return 2
    if cfg.fmt == "json":
        payload = {"schema_version": SCHEMA_VERSION, "command": cfg.command, "m": cfg.m, "braid": cfg.braid}
        payload.update(data)
        print(json.dumps(payload, sort_keys=True))
    else:
        print("\n".join(lines))
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
