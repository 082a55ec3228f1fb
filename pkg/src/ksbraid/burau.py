"""Burau matrices over Z[q, q^-1] and the Euler-form pairing."""

from __future__ import annotations

from typing import Dict, Iterable, List, Mapping, Optional, Sequence

from .braid_functors import BraidWord
from .path_algebra import AlgebraSpec, idempotent_slice


class LaurentPoly:
    __slots__ = ("_t",)

    def __init__(self, terms: Optional[Mapping[int, int]] = None):
        self._t = {int(e): int(c) for e, c in sorted((terms or {}).items()) if c}

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def q(cls, e: int = 1, c: int = 1) -> "LaurentPoly":
        return cls({e: c})

    @property
    def terms(self) -> Dict[int, int]:
        return dict(self._t)

    def __add__(self, o: "LaurentPoly") -> "LaurentPoly":
        out = dict(self._t)
        for e, c in o._t.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._t.items()})

    def __sub__(self, o: "LaurentPoly") -> "LaurentPoly":
        return self + (-o)

    def __mul__(self, o) -> "LaurentPoly":
        if isinstance(o, int):
            return LaurentPoly({e: c * o for e, c in self._t.items()})
        out: Dict[int, int] = {}
        for e1, c1 in self._t.items():
            for e2, c2 in o._t.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __eq__(self, o: object) -> bool:
        if isinstance(o, LaurentPoly):
            return self._t == o._t
        if isinstance(o, int):
            return self._t == ({0: o} if o else {})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._t.items()))

    def is_zero(self) -> bool:
        return not self._t

    def to_json(self) -> dict:
        return {"terms": [{"e": e, "c": c} for e, c in self._t.items()]}

    def __str__(self) -> str:
        if not self._t:
            return "0"
        out = []
        for e, c in self._t.items():
            mono = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
            if not mono:
                out.append(str(c))
            elif c == 1:
                out.append(mono)
            elif c == -1:
                out.append("-" + mono)
            else:
                out.append(f"{c}{mono}")
        return " + ".join(out).replace("+ -", "- ")

    __repr__ = __str__


class LaurentMatrix:
    def __init__(self, rows: Sequence[Sequence[LaurentPoly]]):
        self.rows: List[List[LaurentPoly]] = [list(r) for r in rows]

    @property
    def shape(self):
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    @classmethod
    def identity(cls, n: int) -> "LaurentMatrix":
        return cls([[LaurentPoly.const(1 if i == j else 0) for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, o: "LaurentMatrix") -> "LaurentMatrix":
        n, k = self.shape
        k2, p = o.shape
        assert k == k2
        out = []
        for i in range(n):
            row = []
            for j in range(p):
                acc = LaurentPoly()
                for t in range(k):
                    a, b = self.rows[i][t], o.rows[t][j]
                    if not a.is_zero() and not b.is_zero():
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return LaurentMatrix(out)

    def apply(self, vec: Sequence[LaurentPoly]) -> List[LaurentPoly]:
        return [sum((self.rows[i][j] * vec[j] for j in range(len(vec))), LaurentPoly()) for i in range(self.shape[0])]

    def column(self, j: int) -> List[LaurentPoly]:
        return [r[j] for r in self.rows]

    def submatrix(self, idx: Sequence[int]) -> "LaurentMatrix":
        return LaurentMatrix([[self.rows[i][j] for j in idx] for i in idx])

    def determinant(self) -> LaurentPoly:
        n = self.shape[0]
        if n == 1:
            return self.rows[0][0]
        total = LaurentPoly()
        for j in range(n):
            minor = LaurentMatrix([r[:j] + r[j + 1 :] for r in self.rows[1:]])
            term = self.rows[0][j] * minor.determinant()
            total = total + (term if j % 2 == 0 else -term)
        return total

    def __eq__(self, o: object) -> bool:
        return isinstance(o, LaurentMatrix) and self.rows == o.rows

    def to_json(self) -> list:
        return [[x.to_json() for x in r] for r in self.rows]

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows)


def generator_matrix(m: int, k: int, sign: int = 1) -> LaurentMatrix:
    """Matrix of sigma_k^{sign} on the basis [P_0], ..., [P_m] (columns are images)."""
    if not 1 <= k <= m:
        raise ValueError(f"generator index {k} out of range 1..{m}")
    mat = LaurentMatrix.identity(m + 1)
    r = mat.rows
    if sign == 1:
        r[k][k] = LaurentPoly.q(1, -1)
        if k + 1 <= m:
            r[k][k + 1] = LaurentPoly.const(-1)
        r[k][k - 1] = LaurentPoly.q(1, -1)
    else:
        r[k][k] = LaurentPoly.q(-1, -1)
        if k + 1 <= m:
            r[k][k + 1] = LaurentPoly.q(-1, -1)
        r[k][k - 1] = LaurentPoly.const(-1)
    return mat


def burau_matrix(w: BraidWord) -> LaurentMatrix:
    """Product B(s_1) ... B(s_n); acts on column vectors, rightmost letter first."""
    out = LaurentMatrix.identity(w.m + 1)
    for x in w.letters:
        out = out @ generator_matrix(w.m, abs(x), 1 if x > 0 else -1)
    return out


def reduced_burau(w: BraidWord) -> LaurentMatrix:
    """Restriction to the invariant span of [P_1], ..., [P_m]."""
    full = burau_matrix(w)
    for i in range(1, w.m + 1):
        if not full[0, i].is_zero():
            raise AssertionError("span of e_1..e_m is not invariant")
    return full.submatrix(list(range(1, w.m + 1)))


def euler_form(m: int) -> LaurentMatrix:
    """E(i, j) = sum_d rank((i)A(j))_d q^d, read off the algebra basis."""
    spec = AlgebraSpec(m)
    return LaurentMatrix(
        [[LaurentPoly(dict(idempotent_slice(i, j, spec))) for j in range(m + 1)] for i in range(m + 1)]
    )


def euler_pairing(i: int, w: BraidWord, j: int) -> LaurentPoly:
    """<e_i, B(w) e_j> under the Euler form."""
    if not (0 <= i <= w.m and 0 <= j <= w.m):
        raise ValueError("vertex out of range")
    col = burau_matrix(w).column(j)
    e = euler_form(w.m)
    return sum((e[i, t] * col[t] for t in range(w.m + 1)), LaurentPoly())


def vector_from_class(vec: Sequence[Mapping[int, int]]) -> List[LaurentPoly]:
    return [LaurentPoly(v) for v in vec]
