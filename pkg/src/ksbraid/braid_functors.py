"""Braid group action on complexes: R_k, R_k^{-1}, words, TL checks, K-classes.

Word orientation: a word ``w = (s_1, ..., s_n)`` acts as the composite
``R_{s_1} R_{s_2} ... R_{s_n}``, so the rightmost letter is applied first.
The curve action and the Burau matrices use the same orientation.
"""

from __future__ import annotations

import enum
import re
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

from .complexes import (
    ChainMap,
    ProjComplex,
    Summand,
    cone,
    direct_sum,
    reduce,
    shift,
    u_functor,
    u_functor_with_copies,
)
from .path_algebra import AlgebraSpec, slice_element


@dataclass(frozen=True)
class BraidWord:
    m: int
    letters: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        letters = tuple(int(x) for x in self.letters)
        object.__setattr__(self, "letters", letters)
        for x in letters:
            if x == 0 or abs(x) > self.m:
                raise ValueError(f"generator {x} out of range for m={self.m}")

    @classmethod
    def parse(cls, m: int, text: str) -> "BraidWord":
        text = text.strip()
        if not text:
            return cls(m, ())
        parts = [p.strip() for p in text.split(",")]
        if any(not re.fullmatch(r"[+-]?\d+", p) for p in parts):
            raise ValueError(f"cannot parse braid word {text!r}; expected e.g. '1,-2,3'")
        return cls(m, tuple(int(p) for p in parts))

    def inverse(self) -> "BraidWord":
        return BraidWord(self.m, tuple(-x for x in reversed(self.letters)))

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.m != other.m:
            raise ValueError("words for different braid groups")
        return BraidWord(self.m, self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return ",".join(map(str, self.letters))


class BimoduleMapTag(enum.Enum):
    BETA = "beta"
    GAMMA = "gamma"


def _check_k(k: int, spec: AlgebraSpec) -> None:
    if not 1 <= k <= spec.m:
        raise ValueError(f"generator index {k} out of range 1..{spec.m}")


def beta_map(k: int, c: ProjComplex) -> ChainMap:
    """beta_k on C: each copy P_k ⊗ e of U_k(P_j) maps to P_j by right multiplication by e."""
    _check_k(k, c.spec)
    u, copies = u_functor_with_copies(k, c)
    return ChainMap(u, c, {(nid, orig): 1 for nid, orig, _ in copies})


def _gamma_targets(k: int, j: int, m: int) -> List[Tuple[int, int]]:
    """(degree of the (k)A(j) basis path e, degree of the map P_j -> copy e)."""
    if j == k:
        # (k) ⊗ (k|k-1|k) and (k|k-1|k) ⊗ (k)
        return [(1, 0), (0, 1)]
    if j == k - 1:
        return [(1, 0)]  # (k-1|k) ⊗ (k|k-1)
    if j == k + 1 and k < m:
        return [(0, 1)]  # (k+1|k) ⊗ (k|k+1)
    return []


def r_plus(k: int, c: ProjComplex, check: bool = False) -> ProjComplex:
    """Cone of beta_k : U_k(C) -> C (unreduced)."""
    return cone(beta_map(k, c), check=check)


def r_minus(k: int, c: ProjComplex, check: bool = False) -> ProjComplex:
    """Total complex of gamma_k : C -> U_k(C){-1}, C kept in place (unreduced)."""
    spec = c.spec
    _check_k(k, spec)
    u, copies = u_functor_with_copies(k, c)
    u = shift(u, -1, -1)  # moves one step right, negates d, applies {-1}
    off = max((s.id for s in c.summands), default=-1) + 1
    summands = list(c.summands) + [Summand(s.id + off, s.vertex, s.hdeg, s.ideg) for s in u.summands]
    entries = dict(c.entries)
    entries.update({(a + off, b + off): v for (a, b), v in u.entries.items()})
    for nid, orig, d in copies:
        j = c.summand(orig).vertex
        for e_deg, map_deg in _gamma_targets(k, j, spec.m):
            if e_deg == d:
                entries[(orig, nid + off)] = 1
    out = ProjComplex(spec, summands, entries, check=check)
    return out


def r_apply(k: int, sign: int, c: ProjComplex, check: bool = False) -> ProjComplex:
    """R_k (sign=+1) or R_k^{-1} (sign=-1) applied to C, then reduced."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    raw = r_plus(k, c, check) if sign == 1 else r_minus(k, c, check)
    return reduce(raw)


def apply_word(w: BraidWord, c: ProjComplex, check: bool = False) -> ProjComplex:
    """R_w(C), rightmost letter first, reducing after every letter."""
    if w.m != c.spec.m:
        raise ValueError("word and complex use different m")
    out = c
    for x in reversed(w.letters):
        out = r_apply(abs(x), 1 if x > 0 else -1, out, check)
    return out


# ---------------------------------------------------------------------------
# Temperley-Lieb relations on objects


def graded_ranks(c: ProjComplex) -> Counter:
    return c.signature_multiset()


def tl_check(k: int, l: int, c: ProjComplex) -> bool:
    """Check the relation between U_k and U_l on C at the level of graded ranks.

    |k-l| > 1: U_k U_l C = 0.  k = l: U_k U_k C = U_k C + U_k C{1}.
    |k-l| = 1: U_k U_l U_k C = U_k C{1}.
    """
    spec = c.spec
    _check_k(k, spec)
    _check_k(l, spec)
    uk = u_functor(k, c)
    if abs(k - l) > 1:
        return u_functor(k, u_functor(l, c)).is_zero()
    if k == l:
        lhs = graded_ranks(u_functor(k, uk))
        rhs = graded_ranks(direct_sum(uk, shift(uk, 0, 1)))
        return lhs == rhs
    lhs = graded_ranks(u_functor(k, u_functor(l, uk)))
    rhs = graded_ranks(shift(uk, 0, 1))
    return lhs == rhs


# ---------------------------------------------------------------------------
# Grothendieck group


def grothendieck_class(c: ProjComplex) -> List[Dict[int, int]]:
    """[C] = sum (-1)^h q^t e_i as a list of Laurent polynomials {exp: coeff}."""
    vec: List[Dict[int, int]] = [dict() for _ in range(c.spec.m + 1)]
    for s in c.summands:
        v = vec[s.vertex]
        v[s.ideg] = v.get(s.ideg, 0) + (-1 if s.hdeg % 2 else 1)
    return [{e: x for e, x in sorted(v.items()) if x} for v in vec]
