"""Bigraded admissible curves on the punctured disc, stored combinatorially.

Model
-----
Punctures 0..m sit on a horizontal line.  Vertical chords d_0..d_m cut the
disc into regions D_0..D_{m+1}: d_0 lies left of puncture 0, d_k (k >= 1)
between punctures k-1 and k.  Region D_r (1 <= r <= m+1) holds puncture
r-1; D_0 holds the boundary endpoint of b_0.  Region D_r has left chord
d_{r-1} and right chord d_r when those exist.

A curve in normal form is its sequence of crossings with the chords plus,
for every piece between consecutive crossings, the region and the winding
``t`` (in units of pi) of the piece around that region's puncture, measured
along the curve.  The only essential pieces are

* left -> right, ``t = -1`` (over the puncture) or ``t = +1`` (under it),
* left -> left or right -> right around the puncture, ``t = ±2``,

and their reverses.  Pieces ending at a puncture or at the boundary point
carry no winding.

Half twists act on k-strings (maximal runs inside D_k ∪ D_{k+1}) through
the fundamental groupoid of that twice-punctured disc; see ``_twist_word``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .braid_functors import BraidWord
from .complexes import BigradedPoly, ProjComplex, Summand
from .path_algebra import AlgebraSpec, slice_element

BOUNDARY = -1


class CurveError(ValueError):
    pass


@dataclass(frozen=True)
class Crossing:
    line: int
    x1: int
    x2: int

    def shifted(self, r1: int, r2: int) -> "Crossing":
        return Crossing(self.line, self.x1 + r1, self.x2 + r2)

    @property
    def bigrading(self) -> Tuple[int, int]:
        return (self.x1, self.x2)


@dataclass(frozen=True)
class Segment:
    """Essential piece between two consecutive crossings."""

    region: int
    winding: int


@dataclass(frozen=True)
class KString:
    type_tag: str
    u: Optional[int]
    shift: Tuple[int, int]


def _region_of_end(e: int) -> int:
    return 0 if e == BOUNDARY else e + 1


def _side(line: int, region: int) -> str:
    if line == region - 1:
        return "L"
    if line == region:
        return "R"
    raise CurveError(f"chord d_{line} does not bound region D_{region}")


def _increment(src: str, dst: str, t: int) -> Tuple[int, int]:
    """Change of (x1, x2) along an essential piece, by chord sides and winding."""
    table = {
        ("L", "R", -1): (1, 0),
        ("L", "R", 1): (-1, 1),
        ("R", "L", 1): (-1, 0),
        ("R", "L", -1): (1, -1),
        ("L", "L", -2): (1, -1),
        ("L", "L", 2): (-1, 1),
        ("R", "R", 2): (-1, 1),
        ("R", "R", -2): (1, -1),
    }
    try:
        return table[(src, dst, t)]
    except KeyError:
        raise CurveError(f"no essential piece {src}->{dst} with winding {t}") from None


def _type_code(src: str, dst: str, t: int) -> str:
    if src != dst:
        over = (t == -1) if src == "L" else (t == 1)
        return "1" if over else "1'"
    return "2" if src == "L" else "2'"


class BigradedNormalCurve:
    __slots__ = ("m", "crossings", "segments", "ends")

    def __init__(
        self,
        m: int,
        crossings: Sequence[Crossing],
        segments: Sequence[Segment],
        ends: Tuple[int, int],
        canonical: bool = True,
    ):
        self.m = m
        self.crossings = tuple(crossings)
        self.segments = tuple(segments)
        self.ends = (int(ends[0]), int(ends[1]))
        self._validate()
        if canonical:
            rev = self._reversed()
            if rev._key() < self._key():
                self.crossings, self.segments, self.ends = rev.crossings, rev.segments, rev.ends

    def _reversed(self) -> "BigradedNormalCurve":
        return BigradedNormalCurve(
            self.m,
            self.crossings[::-1],
            [Segment(s.region, -s.winding) for s in self.segments[::-1]],
            (self.ends[1], self.ends[0]),
            canonical=False,
        )

    def _key(self) -> tuple:
        return (
            self.ends,
            tuple((c.line, c.x1, c.x2) for c in self.crossings),
            tuple((s.region, s.winding) for s in self.segments),
        )

    def _validate(self) -> None:
        m, cr, seg = self.m, self.crossings, self.segments
        if not cr:
            raise CurveError("a curve needs at least one crossing")
        if len(seg) != len(cr) - 1:
            raise CurveError("need exactly one segment between consecutive crossings")
        for e in self.ends:
            if e != BOUNDARY and not 0 <= e <= m:
                raise CurveError(f"bad end {e}")
        if self.ends[0] == self.ends[1]:
            raise CurveError("both ends at the same point")
        for c in cr:
            if not 0 <= c.line <= m:
                raise CurveError(f"bad chord index {c.line}")
        regions = [_region_of_end(self.ends[0])] + [s.region for s in seg] + [_region_of_end(self.ends[1])]
        for n, c in enumerate(cr):
            if {regions[n], regions[n + 1]} != {c.line, c.line + 1}:
                raise CurveError(f"crossing {n} on d_{c.line} does not separate regions {regions[n]}, {regions[n + 1]}")
        for n, s in enumerate(seg):
            a, b = cr[n], cr[n + 1]
            src, dst = _side(a.line, s.region), _side(b.line, s.region)
            if src == dst and not 1 <= s.region <= m + 1:
                raise CurveError("U-turn piece in a region without a puncture")
            if src != dst and not 1 <= s.region <= m:
                raise CurveError("crossing piece in a region with one chord")
            if src == dst == "R" and s.region == 0:
                raise CurveError("U-turn piece in D_0")
            d = _increment(src, dst, s.winding)
            if (b.x1 - a.x1, b.x2 - a.x2) != d:
                raise CurveError(f"bigrading jump {a} -> {b} does not match piece type {src}{dst}{s.winding}")

    # ------------------------------------------------------------------

    def __eq__(self, o: object) -> bool:
        return isinstance(o, BigradedNormalCurve) and self.m == o.m and self._key() == o._key()

    def __hash__(self) -> int:
        return hash((self.m, self._key()))

    def __repr__(self) -> str:
        cr = " ".join(f"d{c.line}({c.x1},{c.x2})" for c in self.crossings)
        return f"Curve(m={self.m}, ends={self.ends}, {cr})"

    def crossing_counts(self) -> Dict[int, int]:
        out: Dict[int, int] = {}
        for c in self.crossings:
            out[c.line] = out.get(c.line, 0) + 1
        return out

    def segment_types(self) -> List[str]:
        out = []
        for n, s in enumerate(self.segments):
            src = _side(self.crossings[n].line, s.region)
            dst = _side(self.crossings[n + 1].line, s.region)
            out.append(_type_code(src, dst, s.winding))
        return out

    def to_json(self) -> dict:
        def end(e: int):
            return "boundary" if e == BOUNDARY else e

        return {
            "m": self.m,
            "crossings": [{"line": c.line, "x1": c.x1, "x2": c.x2} for c in self.crossings],
            "segments": [
                {"region": s.region, "winding": s.winding, "type": t}
                for s, t in zip(self.segments, self.segment_types())
            ],
            "ends": [end(e) for e in self.ends],
        }

    @classmethod
    def from_json(cls, data: dict) -> "BigradedNormalCurve":
        def end(e) -> int:
            return BOUNDARY if e == "boundary" else int(e)

        return cls(
            int(data["m"]),
            [Crossing(int(c["line"]), int(c["x1"]), int(c["x2"])) for c in data["crossings"]],
            [Segment(int(s["region"]), int(s["winding"])) for s in data["segments"]],
            (end(data["ends"][0]), end(data["ends"][1])),
        )


# ---------------------------------------------------------------------------
# basic curves and shifts


def basic_curve(k: int, m: int) -> BigradedNormalCurve:
    """b_k with its single crossing on d_k at bigrading (0, 0)."""
    if not 0 <= k <= m:
        raise ValueError(f"basic curve index {k} out of range 0..{m}")
    ends = (BOUNDARY, 0) if k == 0 else (k - 1, k)
    return BigradedNormalCurve(m, [Crossing(k, 0, 0)], [], ends)


def curve_shift(c: BigradedNormalCurve, r1: int, r2: int) -> BigradedNormalCurve:
    return BigradedNormalCurve(c.m, [x.shifted(r1, r2) for x in c.crossings], c.segments, c.ends)


# ---------------------------------------------------------------------------
# pieces and k-strings

# A piece: (region, start node, end node, winding or None).  Nodes are
# ("x", crossing index) or ("e", end index 0/1).


def _pieces(c: BigradedNormalCurve) -> List[Tuple[int, Optional[int]]]:
    regions = [_region_of_end(c.ends[0])] + [s.region for s in c.segments] + [_region_of_end(c.ends[1])]
    winds: List[Optional[int]] = [None] + [s.winding for s in c.segments] + [None]
    return list(zip(regions, winds))


def _runs(c: BigradedNormalCurve, regions: Tuple[int, ...]) -> List[Tuple[int, int]]:
    """Maximal index ranges [i0, i1] of pieces lying in the given regions."""
    pcs = _pieces(c)
    out = []
    i = 0
    while i < len(pcs):
        if pcs[i][0] in regions:
            j = i
            while j + 1 < len(pcs) and pcs[j + 1][0] in regions:
                j += 1
            out.append((i, j))
            i = j + 1
        else:
            i += 1
    return out


def _node_label(c: BigradedNormalCurve, node: int, k: int) -> str:
    """Local label of node ``node`` (0 = first end, n+1 = last end) for a k-string."""
    n = len(c.crossings)
    if node == 0 or node == n + 1:
        e = c.ends[0 if node == 0 else 1]
        if e == k - 1:
            return "p"
        if e == k:
            return "q"
        raise CurveError("run ends at an unexpected end")
    line = c.crossings[node - 1].line
    return {k - 1: "L", k: "o", k + 1: "R"}[line]


Token = Tuple[str, int]


def _piece_tokens(region_local: int, src: str, dst: str, t: Optional[int]) -> List[Token]:
    if region_local == 0:
        pair = {
            ("L", "o"): lambda: [("L", 1), ("a", (t + 1) // 2)],
            ("o", "L"): lambda: [("a", (t - 1) // 2), ("L", -1)],
            ("o", "o"): lambda: [("a", t // 2)],
            ("L", "L"): lambda: [("L", 1), ("a", t // 2), ("L", -1)],
            ("p", "o"): lambda: [("p", 1)],
            ("o", "p"): lambda: [("p", -1)],
            ("p", "L"): lambda: [("p", 1), ("L", -1)],
            ("L", "p"): lambda: [("L", 1), ("p", -1)],
        }
    else:
        pair = {
            ("o", "R"): lambda: [("b", (t + 1) // 2), ("R", 1)],
            ("R", "o"): lambda: [("R", -1), ("b", (t - 1) // 2)],
            ("o", "o"): lambda: [("b", t // 2)],
            ("R", "R"): lambda: [("R", -1), ("b", t // 2), ("R", 1)],
            ("q", "o"): lambda: [("q", 1)],
            ("o", "q"): lambda: [("q", -1)],
            ("q", "R"): lambda: [("q", 1), ("R", 1)],
            ("R", "q"): lambda: [("R", -1), ("q", -1)],
        }
    try:
        return pair[(src, dst)]()
    except KeyError:
        raise CurveError(f"impossible piece {src}->{dst} in local region {region_local}") from None


_REGION_OF_TOKEN = {"L": 0, "a": 0, "p": 0, "R": 1, "b": 1, "q": 1}


def _reduce_word(tokens: Iterable[Token]) -> Tuple[Token, ...]:
    out: List[Token] = []
    for tok in tokens:
        out.append(tok)
        while out:
            top = out[-1]
            if top[0] in "ab" and top[1] == 0:
                out.pop()
                continue
            if len(out) >= 2:
                prev = out[-2]
                if prev[0] == top[0] and top[0] in "ab":
                    out[-2:] = [(top[0], prev[1] + top[1])]
                    continue
                if prev[0] == top[0] and prev[1] == -top[1]:
                    del out[-2:]
                    continue
                # a puncture endpoint swallows loops around itself
                if prev == ("p", 1) and top[0] == "a" or prev == ("q", 1) and top[0] == "b":
                    out.pop()
                    continue
                if top == ("p", -1) and prev[0] == "a" or top == ("q", -1) and prev[0] == "b":
                    del out[-2]
                    continue
            break
    return tuple(out)


def _invert_word(w: Sequence[Token]) -> Tuple[Token, ...]:
    return tuple((x, -e) for x, e in reversed(w))


# Half twist along b_k as an automorphism of the groupoid.  Base point: top
# end of d_k.  a, b: loops around punctures k-1, k (counterclockwise);
# L, R: paths over the punctures from d_{k-1} to d_k and from d_k to d_{k+1};
# p, q: paths from punctures k-1, k to d_k.
_TWIST = {
    1: {
        ("a", 1): [("a", 1), ("b", 1), ("a", -1)],
        ("a", -1): [("a", 1), ("b", -1), ("a", -1)],
        ("b", 1): [("a", 1)],
        ("b", -1): [("a", -1)],
        ("p", 1): [("q", 1), ("a", -1)],
        ("p", -1): [("a", 1), ("q", -1)],
        ("q", 1): [("p", 1)],
        ("q", -1): [("p", -1)],
    },
    -1: {
        ("a", 1): [("b", 1)],
        ("a", -1): [("b", -1)],
        ("b", 1): [("b", -1), ("a", 1), ("b", 1)],
        ("b", -1): [("b", -1), ("a", -1), ("b", 1)],
        ("p", 1): [("q", 1)],
        ("p", -1): [("q", -1)],
        ("q", 1): [("p", 1), ("b", 1)],
        ("q", -1): [("b", -1), ("p", -1)],
    },
}


def _twist_word(w: Sequence[Token], sign: int) -> Tuple[Token, ...]:
    table = _TWIST[sign]
    out: List[Token] = []
    for x, e in w:
        if x in "LR":
            out.append((x, e))
        elif x in "ab":
            unit = 1 if e > 0 else -1
            for _ in range(abs(e)):
                out.extend(table[(x, unit)])
        else:
            out.extend(table[(x, e)])
    return _reduce_word(out)


def _parse_word(w: Sequence[Token]) -> List[Tuple[int, str, str, Optional[int]]]:
    """Split a reduced string word into pieces (local region, src, dst, winding)."""
    if not w:
        raise CurveError("empty string word")
    start = {("L", 1): "L", ("R", -1): "R", ("p", 1): "p", ("q", 1): "q"}.get(w[0])
    end = {("L", -1): "L", ("R", 1): "R", ("p", -1): "p", ("q", -1): "q"}.get(w[-1])
    if start is None or end is None:
        raise CurveError(f"malformed string word {w}")
    parts: List[List[Token]] = []
    for tok in w:
        reg = _REGION_OF_TOKEN[tok[0]]
        if parts and _REGION_OF_TOKEN[parts[-1][0][0]] == reg:
            parts[-1].append(tok)
        else:
            parts.append([tok])
    out = []
    for n, part in enumerate(parts):
        reg = _REGION_OF_TOKEN[part[0][0]]
        src = start if n == 0 else "o"
        dst = end if n == len(parts) - 1 else "o"
        if src in "pq" or dst in "pq":
            t = None
        else:
            t = 0
            for x, e in part:
                t += 2 * e if x in "ab" else -e
            if src == dst and abs(t) != 2 or src != dst and abs(t) != 1:
                raise CurveError(f"string word {w} is not in normal form")
        out.append((reg, src, dst, t))
    return out


def _side_local(label: str, reg: int) -> str:
    if reg == 0:
        return {"L": "L", "o": "R"}[label]
    return {"o": "L", "R": "R"}[label]


def _run_word(c: BigradedNormalCurve, i0: int, i1: int, k: int) -> Tuple[Token, ...]:
    pcs = _pieces(c)
    toks: List[Token] = []
    for i in range(i0, i1 + 1):
        region, t = pcs[i]
        src = _node_label(c, i, k)
        dst = _node_label(c, i + 1, k)
        toks.extend(_piece_tokens(region - k, src, dst, t))
    return _reduce_word(toks)


def twist(c: BigradedNormalCurve, k: int, sign: int = 1) -> BigradedNormalCurve:
    """Image of c under the bigraded half twist along b_k (or its inverse)."""
    m = c.m
    if not 1 <= k <= m:
        raise ValueError(f"generator index {k} out of range 1..{m}")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    n = len(c.crossings)
    pcs = _pieces(c)
    runs = _runs(c, (k, k + 1))
    line_of = {"L": k - 1, "o": k, "R": k + 1}

    new_cross: List[Crossing] = []
    new_pieces: List[Tuple[int, Optional[int]]] = []
    cursor = 0  # next piece index to copy
    ends = list(c.ends)
    punct = {"p": k - 1, "q": k}

    def node_crossing(node: int) -> Optional[Crossing]:
        return c.crossings[node - 1] if 1 <= node <= n else None

    for i0, i1 in runs:
        # copy untouched pieces and the crossings after them
        for i in range(cursor, i0):
            new_pieces.append(pcs[i])
            new_cross.append(c.crossings[i])
        word = _twist_word(_run_word(c, i0, i1, k), sign)
        parts = _parse_word(word)
        if i0 == 0:
            ends[0] = punct[parts[0][1]]
        if i1 == n:
            ends[1] = punct[parts[-1][2]]
        start_x = node_crossing(i0)
        end_x = node_crossing(i1 + 1)
        # bigradings of the new internal crossings
        steps = []
        for reg, src, dst, t in parts:
            if t is None:
                steps.append(None)
            else:
                steps.append(_increment(_side_local(src, reg), _side_local(dst, reg), t))
        inner: List[Tuple[int, int]] = []
        if start_x is not None:
            cur = start_x.bigrading
            for st in steps[:-1]:
                cur = (cur[0] + st[0], cur[1] + st[1])
                inner.append(cur)
            if end_x is not None:
                st = steps[-1]
                fin = (cur[0] + st[0], cur[1] + st[1])
                if fin != end_x.bigrading:
                    raise CurveError("bigrading mismatch across a twisted string")
        elif end_x is not None:
            cur = end_x.bigrading
            for st in reversed(steps[1:]):
                cur = (cur[0] - st[0], cur[1] - st[1])
                inner.append(cur)
            inner.reverse()
        else:
            # the whole curve is b_k: t_k(b_k) = chi(-1, 1) b_k
            if len(parts) != 2 or i1 - i0 != 1:
                raise CurveError("unexpected closed string")
            old = c.crossings[i0]
            inner.append((old.x1 - sign, old.x2 + sign))
        for idx, (reg, src, dst, t) in enumerate(parts):
            new_pieces.append((reg + k, t))
            if idx < len(parts) - 1:
                x1, x2 = inner[idx]
                new_cross.append(Crossing(k, x1, x2))
        if end_x is not None:
            new_cross.append(end_x)
        cursor = i1 + 1
    for i in range(cursor, len(pcs)):
        new_pieces.append(pcs[i])
        if i < n:
            new_cross.append(c.crossings[i])
    segs = [Segment(r, t) for r, t in new_pieces[1:-1]]
    return BigradedNormalCurve(m, new_cross, segs, (ends[0], ends[1]))


def apply_word_curve(w: BraidWord, c: BigradedNormalCurve) -> BigradedNormalCurve:
    """Rightmost letter first, matching ``apply_word``."""
    if w.m != c.m:
        raise ValueError("word and curve use different m")
    for x in reversed(w.letters):
        c = twist(c, abs(x), 1 if x > 0 else -1)
    return c


# ---------------------------------------------------------------------------
# classification of k-strings

_FAMILY_BASE: Dict[str, Tuple[Token, ...]] = {
    "I": (("L", 1), ("b", 1), ("R", 1)),
    "II": (("L", 1), ("a", -1), ("L", -1)),
    "II'": (("R", -1), ("b", 1), ("R", 1)),
    "III": (("L", 1), ("p", -1)),
    "III'": (("R", -1), ("q", -1)),
}
_EXCEPTIONAL: Dict[str, Tuple[Token, ...]] = {
    "IV": (("L", 1), ("R", 1)),
    "IV'": (("L", 1), ("a", 1), ("b", 1), ("R", 1)),
    "V": (("L", 1), ("a", 1), ("b", 1), ("L", -1)),
    "V'": (("R", -1), ("a", 1), ("b", 1), ("R", 1)),
    "VI": (("p", 1), ("q", -1)),
}

# contribution of X_0(0, 0) as {(r1, r2): coeff}
_CONTRIB: Dict[str, Dict[Tuple[int, int], int]] = {
    "I": {(1, 0): 1, (0, 1): 1},
    "II": {(1, 0): 1, (0, 1): 1},
    "II'": {(1, -1): 1, (0, 0): 1},
    "III": {(0, 1): 1},
    "III'": {(0, 0): 1},
    "IV": {},
    "IV'": {},
    "V": {},
    "V'": {},
    "VI": {(0, 0): 1, (0, 1): 1},
    "VII": {},
    "VIII": {(1, -1): 1, (0, 0): 1},
    "IX": {(0, 0): 1},
    "X": {(1, -1): 1, (0, 0): 1},
    "XI": {(0, 0): 1},
}


def _canon(w: Sequence[Token]) -> Tuple[Token, ...]:
    w = tuple(w)
    return min(w, _invert_word(w))


class _FamilyTable:
    def __init__(self) -> None:
        self.bound = 0
        self.table: Dict[Tuple[Token, ...], Tuple[str, Optional[int]]] = {
            _canon(v): (k, None) for k, v in _EXCEPTIONAL.items()
        }
        self.longest = 0
        self._grow(8)

    def _grow(self, bound: int) -> None:
        for tag, base in _FAMILY_BASE.items():
            for sign in (1, -1):
                w = base
                for u in range(0, bound + 1):
                    if u > self.bound or (u == 0 and self.bound == 0):
                        key = _canon(w)
                        prev = self.table.setdefault(key, (tag, sign * u))
                        if prev != (tag, sign * u):
                            raise AssertionError(f"family collision {prev} vs {(tag, sign * u)}")
                        self.longest = max(self.longest, len(w))
                    w = _twist_word(w, sign)
        self.bound = bound

    def lookup(self, w: Sequence[Token]) -> Tuple[str, Optional[int]]:
        key = _canon(w)
        while key not in self.table:
            if self.bound > 4 * len(key) + 16:
                raise CurveError(f"unclassifiable k-string {w}")
            self._grow(2 * self.bound)
        return self.table[key]


_TABLE: Optional[_FamilyTable] = None


def _family_table() -> _FamilyTable:
    global _TABLE
    if _TABLE is None:
        _TABLE = _FamilyTable()
    return _TABLE


def _end_gradings(c: BigradedNormalCurve, i0: int, i1: int) -> List[Tuple[int, int]]:
    """Bigradings of the two end nodes of a run; (0, 0) stands in for a puncture."""
    n = len(c.crossings)
    return [c.crossings[node - 1].bigrading if 1 <= node <= n else (0, 0) for node in (i0, i1 + 1)]


def _u_turn_reference(a: Tuple[int, int], b: Tuple[int, int]) -> Tuple[int, int]:
    if (b[0] - a[0], b[1] - a[1]) == (1, -1):
        return a
    if (a[0] - b[0], a[1] - b[1]) == (1, -1):
        return b
    raise CurveError(f"U-turn string ends {a}, {b} are not one step apart")


def decompose_kstrings(c: BigradedNormalCurve, k: int) -> List[KString]:
    """Classify every k-string of c, with its family parameter and bigrading shift."""
    if not 0 <= k <= c.m:
        raise ValueError(f"index {k} out of range 0..{c.m}")
    if k == 0:
        return [_classify_zero(c, i0, i1) for i0, i1 in _runs(c, (0, 1))]
    out = []
    for i0, i1 in _runs(c, (k, k + 1)):
        word = _run_word(c, i0, i1, k)
        tag, u = _family_table().lookup(word)
        labels = (_node_label(c, i0, k), _node_label(c, i1 + 1, k))
        grads = _end_gradings(c, i0, i1)
        if tag in ("IV", "IV'", "V", "V'"):
            ref = (0, 0)
        elif tag == "VI":
            ref = c.crossings[i0].bigrading
        elif tag in ("II", "II'"):
            ref = _u_turn_reference(grads[0], grads[1])
        else:
            want = {"I": "L", "III": "L", "III'": "R"}[tag]
            ref = grads[labels.index(want)]
        out.append(KString(tag, u, ref))
    return out


def _classify_zero(c: BigradedNormalCurve, i0: int, i1: int) -> KString:
    pcs = _pieces(c)
    n = len(c.crossings)

    def label(node: int) -> str:
        if node in (0, n + 1):
            return "B" if c.ends[0 if node == 0 else 1] == BOUNDARY else "p"
        return "o" if c.crossings[node - 1].line == 0 else "R"

    nodes = list(range(i0, i1 + 2))
    winds = [pcs[i][1] for i in range(i0, i1 + 1)]
    seq = [label(x) for x in nodes]
    if seq[-1] == "R" or (seq[0] == "p" and seq[-1] == "B"):
        nodes, seq = nodes[::-1], seq[::-1]
        winds = [None if t is None else -t for t in winds[::-1]]

    def grading(node: int) -> Tuple[int, int]:
        return c.crossings[node - 1].bigrading

    if seq == ["R", "R"]:
        return KString("VIII", None, _u_turn_reference(grading(nodes[0]), grading(nodes[1])))
    if seq == ["R", "p"]:
        return KString("IX", None, grading(nodes[0]))
    if seq == ["R", "o", "B"]:
        return KString("VII" if winds[0] == 1 else "X", None, grading(nodes[0]))
    if seq == ["B", "o", "p"]:
        return KString("XI", None, grading(nodes[1]))
    raise CurveError(f"unclassifiable 0-string {seq}")


def kstring_contribution(s: KString) -> BigradedPoly:
    base = BigradedPoly(_CONTRIB[s.type_tag])
    u = s.u or 0
    return base.shifted(s.shift[0] - u, s.shift[1] + u)


def ibigr_basic(k: int, c: BigradedNormalCurve) -> BigradedPoly:
    """I^bigr(b_k, c) as a sum of k-string contributions."""
    total = BigradedPoly()
    for s in decompose_kstrings(c, k):
        total = total + kstring_contribution(s)
    return total


def gin_basic(k: int, c: BigradedNormalCurve) -> Fraction:
    """Geometric intersection number I(b_k, c)."""
    return Fraction(ibigr_basic(k, c).total(), 2)


_TYPE_WEIGHT = {
    "I": Fraction(1), "II": Fraction(1), "II'": Fraction(1), "VI": Fraction(1),
    "III": Fraction(1, 2), "III'": Fraction(1, 2),
    "VIII": Fraction(1), "X": Fraction(1), "IX": Fraction(1, 2), "XI": Fraction(1, 2),
}


def gin_by_types(k: int, c: BigradedNormalCurve) -> Fraction:
    """I(b_k, c) counted from string types alone, ignoring bigradings."""
    return sum((_TYPE_WEIGHT.get(s.type_tag, Fraction(0)) for s in decompose_kstrings(c, k)), Fraction(0))


# ---------------------------------------------------------------------------
# the complex L(c)


def l_complex(c: BigradedNormalCurve) -> ProjComplex:
    spec = AlgebraSpec(c.m)
    summands = [Summand(n, x.line, x.x1, x.x2) for n, x in enumerate(c.crossings)]
    entries: Dict[Tuple[int, int], int] = {}
    for n in range(len(c.segments)):
        a, b = c.crossings[n], c.crossings[n + 1]
        if b.x1 == a.x1 + 1:
            src, dst = n, n + 1
        elif a.x1 == b.x1 + 1:
            src, dst = n + 1, n
        else:
            raise CurveError("essential segment without a unit step in x1")
        x, y = c.crossings[src], c.crossings[dst]
        if x.line == y.line and x.x2 != y.x2 + 1:
            raise CurveError("same-chord segment must drop x2 by one")
        if slice_element(c.m, x.line, y.line, x.x2 - y.x2) is None:
            raise CurveError(f"segment d_{x.line} -> d_{y.line} is not grading preserving")
        entries[(src, dst)] = 1
    return ProjComplex(spec, summands, entries)


def is_identity_word(w: BraidWord) -> bool:
    return identity_witness(w) is None


def identity_witness(w: BraidWord) -> Optional[Tuple[int, int, str]]:
    """None if w acts trivially; else a (j, k, which) pair witnessing a change."""
    m = w.m
    for kk in range(m + 1):
        b = basic_curve(kk, m)
        fb = apply_word_curve(w, b)
        ffb = apply_word_curve(w, fb)
        for j in range(m + 1):
            ref = gin_basic(j, b)
            if gin_basic(j, fb) != ref:
                return (j, kk, "f")
            if gin_basic(j, ffb) != ref:
                return (j, kk, "f^2")
    return None
