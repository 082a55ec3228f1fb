"""The graded zigzag ring A_m.

A_m is the path ring of the quiver with vertices 0..m and arrows i <-> i+1,
modulo the relations

    (i-1|i|i+1) = (i+1|i|i-1) = 0,   (i|i+1|i) = (i|i-1|i),   (0|1|0) = 0.

Paths are written as vertex tuples and compose by concatenation, so
``(a)(b)`` is nonzero only when ``a`` ends where ``b`` starts.  The grading
counts descending steps.  As an abelian group A_m is free of rank 4m+1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple

Path = Tuple[int, ...]


class Coefficients(enum.Enum):
    INTEGERS = "integers"
    MOD2 = "mod2"


@dataclass(frozen=True)
class AlgebraSpec:
    m: int
    coefficients: Coefficients = Coefficients.INTEGERS

    def __post_init__(self) -> None:
        if not isinstance(self.m, int) or self.m < 1:
            raise ValueError(f"m must be a positive integer, got {self.m!r}")

    @property
    def vertices(self) -> range:
        return range(self.m + 1)

    def normalize(self, c: int) -> int:
        return c % 2 if self.coefficients is Coefficients.MOD2 else c


def is_path(p: Path, m: Optional[int] = None) -> bool:
    if len(p) == 0:
        return False
    if m is not None and any(not 0 <= v <= m for v in p):
        return False
    return all(abs(b - a) == 1 for a, b in zip(p, p[1:]))


def _check_path(p: Path, spec: AlgebraSpec) -> Path:
    p = tuple(int(v) for v in p)
    if not is_path(p, spec.m):
        raise ValueError(f"not a path in the quiver for m={spec.m}: {p}")
    return p


@lru_cache(maxsize=None)
def _basis(m: int) -> Tuple[Path, ...]:
    out: List[Path] = [(i,) for i in range(m + 1)]
    out += [(i, i + 1) for i in range(m)]
    out += [(i + 1, i) for i in range(m)]
    out += [(i, i - 1, i) for i in range(1, m + 1)]
    return tuple(out)


@lru_cache(maxsize=None)
def _basis_index(m: int) -> Dict[Path, int]:
    return {p: n for n, p in enumerate(_basis(m))}


def basis(spec: AlgebraSpec) -> List[Path]:
    """The 4m+1 basis paths in canonical order."""
    return list(_basis(spec.m))


def degree(p: Path) -> int:
    """Number of descending steps in ``p``."""
    return sum(1 for a, b in zip(p, p[1:]) if b == a - 1)


def _rewrite_once(p: Path, pos: int) -> Optional[Path]:
    """Apply one relation to the triple starting at ``pos``.

    Returns the rewritten path, ``()`` for zero, or None if the triple is
    already reduced.
    """
    a, b, c = p[pos : pos + 3]
    if a != c:
        return ()
    if b == a + 1:
        if a == 0:
            return ()
        return p[:pos] + (a, a - 1, a) + p[pos + 3 :]
    return None


def _rewrite_sites(p: Path) -> Iterator[int]:
    for pos in range(len(p) - 2):
        a, b, c = p[pos : pos + 3]
        if a != c or b == a + 1:
            yield pos


@lru_cache(maxsize=None)
def _reduce_tuple(p: Path) -> Path:
    # Leftmost rewriting.  Returns () for zero.  Relations carry no signs, so
    # the result is 0 or exactly one basis path with coefficient 1.
    while True:
        site = next(_rewrite_sites(p), None)
        if site is None:
            break
        p = _rewrite_once(p, site)  # type: ignore[assignment]
        if p == ():
            return ()
    if len(p) > 3:
        return ()
    return p


def reduce_path_all_orders(p: Path) -> set:
    """Every normal form reachable by rewriting ``p`` in any order.

    Exponential; used by the confluence tests on short paths.
    """
    seen = {p}
    stack = [p]
    leaves = set()
    while stack:
        cur = stack.pop()
        sites = list(_rewrite_sites(cur))
        if not sites:
            leaves.add(cur if len(cur) <= 3 else ())
            continue
        for s in sites:
            nxt = _rewrite_once(cur, s)
            if nxt == ():
                leaves.add(())
            elif nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return leaves


class AlgebraElement:
    """Integer combination of basis paths, kept in basis form."""

    __slots__ = ("spec", "_terms")

    def __init__(self, spec: AlgebraSpec, terms: Optional[Mapping[Path, int]] = None):
        self.spec = spec
        idx = _basis_index(spec.m)
        clean: Dict[Path, int] = {}
        for p, c in (terms or {}).items():
            p = tuple(p)
            if p not in idx:
                raise ValueError(f"{p} is not a basis path; use reduce_path")
            c = spec.normalize(int(c))
            if c:
                clean[p] = c
        self._terms = dict(sorted(clean.items(), key=lambda kv: idx[kv[0]]))

    @classmethod
    def zero(cls, spec: AlgebraSpec) -> "AlgebraElement":
        return cls(spec)

    @classmethod
    def unit(cls, spec: AlgebraSpec) -> "AlgebraElement":
        return cls(spec, {(i,): 1 for i in spec.vertices})

    @classmethod
    def path(cls, spec: AlgebraSpec, p: Iterable[int], coeff: int = 1) -> "AlgebraElement":
        return reduce_path(tuple(p), spec) * coeff

    @property
    def terms(self) -> Dict[Path, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degrees(self) -> set:
        return {degree(p) for p in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._same(other)
        out = dict(self._terms)
        for p, c in other._terms.items():
            out[p] = out.get(p, 0) + c
        return AlgebraElement(self.spec, out)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.spec, {p: -c for p, c in self._terms.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return AlgebraElement(self.spec, {p: c * other for p, c in self._terms.items()})
        return multiply(self, other, self.spec)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.spec == other.spec and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.spec, tuple(self._terms.items())))

    def _same(self, other: "AlgebraElement") -> None:
        if self.spec != other.spec:
            raise ValueError("elements live in different algebras")

    def to_json(self) -> list:
        return [{"path": list(p), "coeff": c} for p, c in self._terms.items()]

    @classmethod
    def from_json(cls, spec: AlgebraSpec, data: list) -> "AlgebraElement":
        out = cls.zero(spec)
        for t in data:
            out = out + cls.path(spec, t["path"], t["coeff"])
        return out

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for p, c in self._terms.items():
            s = "(" + "|".join(map(str, p)) + ")"
            parts.append(s if c == 1 else f"{c}*{s}")
        return " + ".join(parts)


def reduce_path(p: Path, spec: AlgebraSpec) -> AlgebraElement:
    """Rewrite a path into basis form (zero or a single basis path)."""
    p = _check_path(p, spec)
    r = _reduce_tuple(p)
    if r == ():
        return AlgebraElement.zero(spec)
    return AlgebraElement(spec, {r: 1})


@lru_cache(maxsize=None)
def _basis_product(m: int, a: Path, b: Path) -> Path:
    if a[-1] != b[0]:
        return ()
    return _reduce_tuple(a + b[1:])


def multiply(a: AlgebraElement, b: AlgebraElement, spec: Optional[AlgebraSpec] = None) -> AlgebraElement:
    spec = spec or a.spec
    a._same(b)
    out: Dict[Path, int] = {}
    for pa, ca in a._terms.items():
        for pb, cb in b._terms.items():
            r = _basis_product(spec.m, pa, pb)
            if r:
                out[r] = out.get(r, 0) + ca * cb
    return AlgebraElement(spec, out)


def idempotent_slice(i: int, j: int, spec: AlgebraSpec) -> List[Tuple[int, int]]:
    """Graded rank of (i)A(j) as a sorted list of (degree, rank)."""
    counts: Dict[int, int] = {}
    for p in _basis(spec.m):
        if p[0] == i and p[-1] == j:
            counts[degree(p)] = counts.get(degree(p), 0) + 1
    return sorted(counts.items())


@lru_cache(maxsize=None)
def slice_element(m: int, i: int, j: int, d: int) -> Optional[Path]:
    """The unique basis path of (i)A(j) in degree ``d``, if any.

    Every homogeneous slice of A_m has rank at most one, which is what lets
    complexes store their differentials as plain integers.
    """
    hits = [p for p in _basis(m) if p[0] == i and p[-1] == j and degree(p) == d]
    assert len(hits) <= 1
    return hits[0] if hits else None


@lru_cache(maxsize=None)
def slice_product(m: int, i: int, j: int, k: int, d1: int, d2: int) -> int:
    """Structure constant: slice(i,j,d1) * slice(j,k,d2) = c * slice(i,k,d1+d2)."""
    a = slice_element(m, i, j, d1)
    b = slice_element(m, j, k, d2)
    if a is None or b is None:
        return 0
    r = _basis_product(m, a, b)
    if not r:
        return 0
    assert r == slice_element(m, i, k, d1 + d2)
    return 1
