"""Bounded complexes of shifted indecomposable projectives over A_m.

Conventions:

* A summand ``(i, h, t)`` is ``P_i{t}`` placed in cohomological degree ``h``.
  ``(M{k})_d = M_{d-k}``.
* A differential entry ``x -> y`` is right multiplication by an element of
  ``(vertex x) A (vertex y)`` homogeneous of degree ``ideg(x) - ideg(y)``.
  Each such homogeneous slice has rank at most one, so entries are stored
  as a single integer coefficient of that slice's basis path.
* ``Hom(P_i, P_j{s}) = ((i) A (j))_{-s}``.
"""

from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from . import _kernels
from .path_algebra import (
    AlgebraElement,
    AlgebraSpec,
    Coefficients,
    idempotent_slice,
    slice_element,
    slice_product,
)

Key = Tuple[int, int]


@dataclass(frozen=True)
class Summand:
    id: int
    vertex: int
    hdeg: int
    ideg: int

    @property
    def signature(self) -> Tuple[int, int, int]:
        return (self.vertex, self.hdeg, self.ideg)


class BigradedPoly:
    """Polynomial in q1^{±1}, q2^{±1} with integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Tuple[int, int], int]] = None):
        self._terms = {k: v for k, v in sorted((terms or {}).items()) if v}

    @classmethod
    def monomial(cls, r1: int, r2: int, c: int = 1) -> "BigradedPoly":
        return cls({(r1, r2): c})

    @property
    def terms(self) -> Dict[Tuple[int, int], int]:
        return dict(self._terms)

    def __add__(self, other: "BigradedPoly") -> "BigradedPoly":
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, 0) + v
        return BigradedPoly(out)

    def __mul__(self, other):
        if isinstance(other, int):
            return BigradedPoly({k: v * other for k, v in self._terms.items()})
        out: Dict[Tuple[int, int], int] = {}
        for (a1, a2), u in self._terms.items():
            for (b1, b2), v in other._terms.items():
                k = (a1 + b1, a2 + b2)
                out[k] = out.get(k, 0) + u * v
        return BigradedPoly(out)

    __rmul__ = __mul__

    def shifted(self, r1: int, r2: int) -> "BigradedPoly":
        return BigradedPoly({(a + r1, b + r2): v for (a, b), v in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BigradedPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def is_zero(self) -> bool:
        return not self._terms

    def total(self) -> int:
        return sum(self._terms.values())

    def specialize(self, a1: int, a2: int):
        """Laurent polynomial in q after q1 -> q^a1, q2 -> q^a2, as {exp: coeff}."""
        out: Dict[int, int] = {}
        for (r1, r2), v in self._terms.items():
            e = a1 * r1 + a2 * r2
            out[e] = out.get(e, 0) + v
        return {e: c for e, c in sorted(out.items()) if c}

    def at_q1_minus_one(self) -> Dict[int, int]:
        """q1 -> -1, q2 -> q."""
        out: Dict[int, int] = {}
        for (r1, r2), v in self._terms.items():
            out[r2] = out.get(r2, 0) + (-1) ** (r1 % 2) * v
        return {e: c for e, c in sorted(out.items()) if c}

    def to_json(self) -> dict:
        return {"terms": [{"r1": a, "r2": b, "coeff": v} for (a, b), v in self._terms.items()]}

    @classmethod
    def from_json(cls, data: dict) -> "BigradedPoly":
        return cls({(t["r1"], t["r2"]): t["coeff"] for t in data["terms"]})

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (r1, r2), v in self._terms.items():
            mono = []
            for name, e in (("q1", r1), ("q2", r2)):
                if e == 1:
                    mono.append(name)
                elif e:
                    mono.append(f"{name}^{e}")
            body = " ".join(mono)
            if not body:
                parts.append(str(v))
            elif v == 1:
                parts.append(body)
            else:
                parts.append(f"{v} {body}")
        return " + ".join(parts)

    __repr__ = __str__


class ComplexError(ValueError):
    pass


class ProjComplex:
    """Immutable complex of shifted projectives with integer-coded entries."""

    __slots__ = ("spec", "summands", "entries", "_by_id")

    def __init__(
        self,
        spec: AlgebraSpec,
        summands: Iterable[Summand],
        entries: Optional[Mapping[Key, int]] = None,
        check: bool = True,
    ):
        self.spec = spec
        self.summands: Tuple[Summand, ...] = tuple(summands)
        self._by_id = {s.id: s for s in self.summands}
        ents = {}
        for k, v in (entries or {}).items():
            v = spec.normalize(int(v))
            if v:
                ents[k] = v
        self.entries: Dict[Key, int] = ents
        if check:
            self.validate()

    # construction helpers -------------------------------------------------

    @classmethod
    def zero(cls, spec: AlgebraSpec) -> "ProjComplex":
        return cls(spec, ())

    @classmethod
    def from_elements(
        cls,
        spec: AlgebraSpec,
        summands: Iterable[Summand],
        entries: Mapping[Key, AlgebraElement],
    ) -> "ProjComplex":
        summands = tuple(summands)
        by_id = {s.id: s for s in summands}
        coded: Dict[Key, int] = {}
        for (a, b), el in entries.items():
            if el.is_zero():
                continue
            x, y = by_id[a], by_id[b]
            d = x.ideg - y.ideg
            p = slice_element(spec.m, x.vertex, y.vertex, d)
            terms = el.terms
            if p is None or set(terms) != {p}:
                raise ComplexError(f"entry {a}->{b} = {el} is not in ({x.vertex})A({y.vertex}) of degree {d}")
            coded[(a, b)] = terms[p]
        return cls(spec, summands, coded)

    def summand(self, sid: int) -> Summand:
        return self._by_id[sid]

    def entry_element(self, src: int, dst: int) -> AlgebraElement:
        c = self.entries.get((src, dst), 0)
        if not c:
            return AlgebraElement.zero(self.spec)
        x, y = self._by_id[src], self._by_id[dst]
        p = slice_element(self.spec.m, x.vertex, y.vertex, x.ideg - y.ideg)
        return AlgebraElement(self.spec, {p: c})

    def validate(self) -> None:
        m = self.spec.m
        if len(self._by_id) != len(self.summands):
            raise ComplexError("duplicate summand ids")
        for s in self.summands:
            if not 0 <= s.vertex <= m:
                raise ComplexError(f"vertex out of range: {s}")
        out = defaultdict(dict)
        for (a, b), c in self.entries.items():
            if a not in self._by_id or b not in self._by_id:
                raise ComplexError(f"entry {a}->{b} references a missing summand")
            x, y = self._by_id[a], self._by_id[b]
            if y.hdeg != x.hdeg + 1:
                raise ComplexError(f"entry {a}->{b} does not raise hdeg by one")
            if slice_element(m, x.vertex, y.vertex, x.ideg - y.ideg) is None:
                raise ComplexError(f"entry {a}->{b} has no homogeneous slice of the right degree")
            out[a][b] = c
        for a, row in out.items():
            x = self._by_id[a]
            acc: Dict[int, int] = defaultdict(int)
            for b, c1 in row.items():
                y = self._by_id[b]
                for z_id, c2 in out.get(b, {}).items():
                    z = self._by_id[z_id]
                    sp = slice_product(m, x.vertex, y.vertex, z.vertex, x.ideg - y.ideg, y.ideg - z.ideg)
                    if sp:
                        acc[z_id] += c1 * c2 * sp
            for z_id, v in acc.items():
                if self.spec.normalize(v):
                    raise ComplexError(f"d^2 != 0 between {a} and {z_id}")

    # views ----------------------------------------------------------------

    def __len__(self) -> int:
        return len(self.summands)

    def is_zero(self) -> bool:
        return not self.summands

    def signature_multiset(self) -> Counter:
        return Counter(s.signature for s in self.summands)

    def relabeled(self, offset: int = 0) -> "ProjComplex":
        """Renumber ids 0..n-1 (plus offset) in (hdeg, vertex, ideg, id) order."""
        order = sorted(self.summands, key=lambda s: (s.hdeg, s.vertex, s.ideg, s.id))
        mp = {s.id: n + offset for n, s in enumerate(order)}
        return ProjComplex(
            self.spec,
            [Summand(mp[s.id], s.vertex, s.hdeg, s.ideg) for s in order],
            {(mp[a], mp[b]): c for (a, b), c in self.entries.items()},
            check=False,
        )

    def canonical_data(self) -> tuple:
        """Hashable description up to summand relabeling (ids ordered by signature)."""
        c = self.relabeled()
        return (
            tuple(s.signature for s in c.summands),
            tuple(sorted(c.entries.items())),
        )

    def to_json(self) -> dict:
        return {
            "m": self.spec.m,
            "summands": [
                {"id": s.id, "vertex": s.vertex, "hdeg": s.hdeg, "ideg": s.ideg} for s in self.summands
            ],
            "entries": [
                {"src": a, "dst": b, "value": self.entry_element(a, b).to_json()}
                for (a, b) in sorted(self.entries)
            ],
        }

    @classmethod
    def from_json(cls, data: dict, coefficients: Coefficients = Coefficients.INTEGERS) -> "ProjComplex":
        spec = AlgebraSpec(int(data["m"]), coefficients)
        summands = [Summand(int(s["id"]), int(s["vertex"]), int(s["hdeg"]), int(s["ideg"])) for s in data["summands"]]
        entries = {
            (int(e["src"]), int(e["dst"])): AlgebraElement.from_json(spec, e["value"]) for e in data["entries"]
        }
        return cls.from_elements(spec, summands, entries)

    def __repr__(self) -> str:
        body = ", ".join(f"P{s.vertex}[{-s.hdeg}]{{{s.ideg}}}" for s in self.summands)
        return f"ProjComplex(m={self.spec.m}; {body}; {len(self.entries)} entries)"


# ---------------------------------------------------------------------------
# constructors


def projective(i: int, spec: AlgebraSpec) -> ProjComplex:
    if not 0 <= i <= spec.m:
        raise ValueError(f"vertex {i} out of range for m={spec.m}")
    return ProjComplex(spec, [Summand(0, i, 0, 0)])


def shift(c: ProjComplex, a: int, b: int) -> ProjComplex:
    """C[a]{b}."""
    sign = -1 if a % 2 else 1
    return ProjComplex(
        c.spec,
        [Summand(s.id, s.vertex, s.hdeg - a, s.ideg + b) for s in c.summands],
        {k: sign * v for k, v in c.entries.items()},
        check=False,
    )


def _next_id(c: ProjComplex) -> int:
    return max((s.id for s in c.summands), default=-1) + 1


def direct_sum(c1: ProjComplex, c2: ProjComplex) -> ProjComplex:
    if c1.spec != c2.spec:
        raise ValueError("complexes over different algebras")
    off = _next_id(c1)
    summands = list(c1.summands) + [Summand(s.id + off, s.vertex, s.hdeg, s.ideg) for s in c2.summands]
    entries = dict(c1.entries)
    entries.update({(a + off, b + off): v for (a, b), v in c2.entries.items()})
    return ProjComplex(c1.spec, summands, entries, check=False)


@dataclass(frozen=True)
class ChainMap:
    """Grading-preserving map source -> target; entries keyed (source id, target id)."""

    source: ProjComplex
    target: ProjComplex
    entries: Mapping[Key, int] = field(default_factory=dict)

    def check(self) -> None:
        src, tgt, m = self.source, self.target, self.source.spec.m
        for (a, b) in self.entries:
            x, y = src.summand(a), tgt.summand(b)
            if x.hdeg != y.hdeg or slice_element(m, x.vertex, y.vertex, x.ideg - y.ideg) is None:
                raise ComplexError(f"map entry {a}->{b} is not grading preserving")
        # f d_src == d_tgt f, both as maps x -> z with hdeg(z) = hdeg(x) + 1
        lhs: Dict[Key, int] = defaultdict(int)
        f_out = defaultdict(dict)
        for (a, b), v in self.entries.items():
            f_out[a][b] = v
        d_src = defaultdict(dict)
        for (a, b), v in src.entries.items():
            d_src[a][b] = v
        d_tgt = defaultdict(dict)
        for (a, b), v in tgt.entries.items():
            d_tgt[a][b] = v
        for a, row in d_src.items():
            x = src.summand(a)
            for b, v1 in row.items():
                y = src.summand(b)
                for c, v2 in f_out.get(b, {}).items():
                    z = tgt.summand(c)
                    lhs[(a, c)] += v1 * v2 * slice_product(m, x.vertex, y.vertex, z.vertex, x.ideg - y.ideg, y.ideg - z.ideg)
        for a, row in f_out.items():
            x = src.summand(a)
            for b, v1 in row.items():
                y = tgt.summand(b)
                for c, v2 in d_tgt.get(b, {}).items():
                    z = tgt.summand(c)
                    lhs[(a, c)] -= v1 * v2 * slice_product(m, x.vertex, y.vertex, z.vertex, x.ideg - y.ideg, y.ideg - z.ideg)
        for k, v in lhs.items():
            if src.spec.normalize(v):
                raise ComplexError(f"not a chain map at {k}")


def cone(f: ChainMap, check: bool = True) -> ProjComplex:
    """M[1] + N with d(x, y) = (-dx, f(x) + dy)."""
    if check:
        f.check()
    m_part = shift(f.source, 1, 0)
    off = _next_id(m_part)
    summands = list(m_part.summands) + [
        Summand(s.id + off, s.vertex, s.hdeg, s.ideg) for s in f.target.summands
    ]
    entries = dict(m_part.entries)
    entries.update({(a + off, b + off): v for (a, b), v in f.target.entries.items()})
    for (a, b), v in f.entries.items():
        entries[(a, b + off)] = v
    return ProjComplex(f.source.spec, summands, entries, check=check)


# ---------------------------------------------------------------------------
# the functor U_k


def u_functor_with_copies(k: int, c: ProjComplex) -> Tuple[ProjComplex, List[Tuple[int, int, int]]]:
    """U_k(C) plus the list of (new id, original id, degree of the basis path of (k)A(j))."""
    m = c.spec.m
    if not 1 <= k <= m:
        raise ValueError(f"generator index {k} out of range 1..{m}")
    copies: List[Tuple[int, int, int]] = []
    summands: List[Summand] = []
    index: Dict[Tuple[int, int], int] = {}
    nid = 0
    for s in c.summands:
        for d, _ in idempotent_slice(k, s.vertex, c.spec):
            summands.append(Summand(nid, k, s.hdeg, s.ideg + d))
            copies.append((nid, s.id, d))
            index[(s.id, d)] = nid
            nid += 1
    entries: Dict[Key, int] = {}
    for (a, b), v in c.entries.items():
        x, y = c.summand(a), c.summand(b)
        delta = x.ideg - y.ideg
        for d, _ in idempotent_slice(k, x.vertex, c.spec):
            sp = slice_product(m, k, x.vertex, y.vertex, d, delta)
            if sp:
                entries[(index[(a, d)], index[(b, d + delta)])] = v * sp
    return ProjComplex(c.spec, summands, entries, check=False), copies


def u_functor(k: int, c: ProjComplex) -> ProjComplex:
    return u_functor_with_copies(k, c)[0]


# ---------------------------------------------------------------------------
# Gaussian elimination


def reduce(c: ProjComplex) -> ProjComplex:
    """Cancel every isomorphism entry ±(i) with zig-zag correction.

    Deterministic: always eliminates the first eligible entry in
    (hdeg, summand order) of the source, then target order.
    """
    spec, m = c.spec, c.spec.m
    info = {s.id: s for s in c.summands}
    order = {s.id: n for n, s in enumerate(c.summands)}
    out: Dict[int, Dict[int, int]] = {s.id: {} for s in c.summands}
    inn: Dict[int, Dict[int, int]] = {s.id: {} for s in c.summands}
    for (a, b), v in c.entries.items():
        out[a][b] = v
        inn[b][a] = v
    alive = sorted(info, key=lambda i: (info[i].hdeg, order[i]))

    def unit(v: int) -> bool:
        return v in (1, -1) if spec.coefficients is Coefficients.INTEGERS else v % 2 == 1

    while True:
        pick = None
        for x_id in alive:
            x = info[x_id]
            for y_id in sorted(out[x_id], key=order.__getitem__):
                y = info[y_id]
                if y.vertex == x.vertex and y.ideg == x.ideg and unit(out[x_id][y_id]):
                    pick = (x_id, y_id)
                    break
            if pick:
                break
        if pick is None:
            break
        x_id, y_id = pick
        x, y = info[x_id], info[y_id]
        cxy = out[x_id][y_id]
        inv = cxy  # ±1 is its own inverse
        for w_id, a_wy in list(inn[y_id].items()):
            if w_id == x_id:
                continue
            w = info[w_id]
            for z_id, a_xz in list(out[x_id].items()):
                if z_id == y_id:
                    continue
                z = info[z_id]
                sp = slice_product(m, w.vertex, x.vertex, z.vertex, w.ideg - y.ideg, x.ideg - z.ideg)
                if not sp:
                    continue
                nv = spec.normalize(out[w_id].get(z_id, 0) - a_wy * inv * a_xz * sp)
                if nv:
                    out[w_id][z_id] = nv
                    inn[z_id][w_id] = nv
                else:
                    out[w_id].pop(z_id, None)
                    inn[z_id].pop(w_id, None)
        for dead in (x_id, y_id):
            for z_id in out[dead]:
                inn[z_id].pop(dead, None)
            for w_id in inn[dead]:
                out[w_id].pop(dead, None)
            del out[dead], inn[dead]
        alive = [i for i in alive if i not in (x_id, y_id)]
    keep = [info[i] for i in sorted(out, key=order.__getitem__)]
    entries = {(a, b): v for a, row in out.items() for b, v in row.items()}
    return ProjComplex(spec, keep, entries, check=False)


def fingerprint(c: ProjComplex) -> Tuple[Tuple[int, int, int], ...]:
    """Sorted summand signatures (vertex, hdeg, ideg) of reduce(C)."""
    return tuple(sorted(s.signature for s in reduce(c).summands))


# ---------------------------------------------------------------------------
# Hom spaces


@dataclass(frozen=True)
class TorsionEntry:
    r1: int
    r2: int
    factors: Tuple[int, ...]


def _gf2_rank(rows: List[List[int]]) -> int:
    vecs = [int("".join(str(v % 2) for v in r), 2) if r else 0 for r in rows]
    rank = 0
    for bit in reversed(range(max((len(r) for r in rows), default=0))):
        piv = next((i for i, v in enumerate(vecs) if (v >> bit) & 1), None)
        if piv is None:
            continue
        pv = vecs.pop(piv)
        vecs = [v ^ pv if (v >> bit) & 1 else v for v in vecs]
        rank += 1
    return rank


def hom_poincare(i: int, c: ProjComplex, backend: Optional[str] = None) -> Tuple[BigradedPoly, List[TorsionEntry]]:
    """Poincaré polynomial of Hom(P_i, C[r1]{-r2}) and any torsion found.

    The coefficient of q1^r1 q2^r2 is the rank of that Hom group in the
    homotopy category.
    """
    spec, m = c.spec, c.spec.m
    if not 0 <= i <= m:
        raise ValueError(f"vertex {i} out of range for m={m}")
    # generators: (summand id, degree d of the basis path of (i)A(vertex))
    gens: Dict[Tuple[int, int], List[Tuple[int, int]]] = defaultdict(list)
    where: Dict[Tuple[int, int], int] = {}
    for s in c.summands:
        for d, _ in idempotent_slice(i, s.vertex, spec):
            key = (s.ideg + d, s.hdeg)
            where[(s.id, d)] = len(gens[key])
            gens[key].append((s.id, d))
    mats: Dict[Tuple[int, int], List[List[int]]] = {}
    for (a, b), v in c.entries.items():
        x, y = c.summand(a), c.summand(b)
        delta = x.ideg - y.ideg
        for d, _ in idempotent_slice(i, x.vertex, spec):
            sp = slice_product(m, i, x.vertex, y.vertex, d, delta)
            if not sp:
                continue
            r2 = x.ideg + d
            key = (r2, x.hdeg)
            if key not in mats:
                mats[key] = [[0] * len(gens[key]) for _ in gens.get((r2, x.hdeg + 1), [])]
            mats[key][where[(b, d + delta)]][where[(a, d)]] += v * sp
    ranks: Dict[Tuple[int, int], int] = {}
    tors: Dict[Tuple[int, int], List[int]] = {}
    for key, rows in mats.items():
        if spec.coefficients is Coefficients.MOD2:
            ranks[key], tors[key] = _gf2_rank(rows), []
        else:
            ranks[key], tors[key] = _kernels.rank_and_torsion(rows, backend)
    poly: Dict[Tuple[int, int], int] = {}
    torsion: List[TorsionEntry] = []
    for (r2, h), g in gens.items():
        n = len(g) - ranks.get((r2, h), 0) - ranks.get((r2, h - 1), 0)
        if n:
            poly[(h, r2)] = n
        t = tors.get((r2, h - 1), [])
        if t:
            torsion.append(TorsionEntry(h, r2, tuple(t)))
    return BigradedPoly(poly), sorted(torsion, key=lambda e: (e.r1, e.r2))
