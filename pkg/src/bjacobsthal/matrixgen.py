"""3x3 matrices over a commutative ring and the companion matrix of the Jacobsthal recurrence."""

from __future__ import annotations

from .bihyperbolic import Bihyperbolic
from .polyring import Polynomial
from .report import IdentityReport
from .sequences import SeqParams, engine_for

__all__ = ["Mat3", "qj_matrix", "mat_pow", "charpoly", "check_column_relation", "check_matrix_identity"]

_X = Polynomial.x()


class Mat3:
    __slots__ = ("entries",)

    def __init__(self, rows):
        entries = tuple(v for row in rows for v in row)
        if len(entries) != 9:
            raise ValueError("Mat3 needs three rows of three entries")
        self.entries = entries

    @classmethod
    def identity(cls, one=1, zero=0) -> Mat3:
        return cls([[one, zero, zero], [zero, one, zero], [zero, zero, one]])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[3 * i + j]

    @property
    def rows(self) -> list[list]:
        e = self.entries
        return [list(e[0:3]), list(e[3:6]), list(e[6:9])]

    def map(self, f) -> Mat3:
        return Mat3([[f(v) for v in row] for row in self.rows])

    def __add__(self, other):
        return Mat3([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return Mat3([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __mul__(self, other):
        if not isinstance(other, Mat3):
            return Mat3([[v * other for v in row] for row in self.rows])
        a, b = self.entries, other.entries
        return Mat3([
            [a[3 * i] * b[j] + a[3 * i + 1] * b[3 + j] + a[3 * i + 2] * b[6 + j] for j in range(3)]
            for i in range(3)
        ])

    def __rmul__(self, s):
        return Mat3([[s * v for v in row] for row in self.rows])

    def apply(self, vec):
        """Matrix-vector product with a length-3 column."""
        return [r[0] * vec[0] + r[1] * vec[1] + r[2] * vec[2] for r in self.rows]

    def trace(self):
        e = self.entries
        return e[0] + e[4] + e[8]

    def det(self):
        a, b, c, d, e, f, g, h, i = self.entries
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)

    def __pow__(self, n: int):
        return mat_pow(self, n)

    def __eq__(self, other):
        if not isinstance(other, Mat3):
            return NotImplemented
        return self.entries == other.entries

    __hash__ = None

    def __repr__(self):
        return f"Mat3({self.rows!r})"

    def to_json(self):
        from .jsonio import encode

        return [[encode(v) for v in row] for row in self.rows]


def qj_matrix() -> Mat3:
    """Companion matrix ``[[x-1, x-1, x], [1, 0, 0], [0, 1, 0]]`` over Z[x]."""
    one, zero = Polynomial((1,)), Polynomial(())
    return Mat3([[_X - 1, _X - 1, _X], [one, zero, zero], [zero, one, zero]])


def _identity_like(M: Mat3) -> Mat3:
    one = M.entries[0] ** 0 if not isinstance(M.entries[0], Bihyperbolic) else Bihyperbolic.scalar(Polynomial((1,)))
    zero = one - one
    return Mat3.identity(one, zero)


def mat_pow(M: Mat3, n: int) -> Mat3:
    """``M**n`` by repeated squaring; ``M**0`` is the identity."""
    if n < 0:
        raise ValueError("mat_pow needs n >= 0")
    result = _identity_like(M)
    base = M
    while n:
        if n & 1:
            result = result * base
        base = base * base
        n >>= 1
    return result


def charpoly(M: Mat3) -> list:
    """Coefficients ``[c0, c1, c2, 1]`` of ``det(lambda*I - M)`` in ascending powers of lambda."""
    e = M.entries
    minors = (e[0] * e[4] - e[1] * e[3]) + (e[0] * e[8] - e[2] * e[6]) + (e[4] * e[8] - e[5] * e[7])
    return [-M.det(), minors, -M.trace(), 1]


def check_column_relation(n: int, params: SeqParams) -> IdentityReport:
    """``[BJ(n+2), BJ(n+1), BJ(n)] = Q * [BJ(n+1), BJ(n), BJ(n-1)]`` for ``n >= 1``."""
    if n < 1:
        raise ValueError("check_column_relation needs n >= 1")
    e = engine_for(params)
    lhs = tuple(e.bj_rec(k) for k in (n + 2, n + 1, n))
    rhs = tuple(qj_matrix().apply([e.bj_rec(k) for k in (n + 1, n, n - 1)]))
    return IdentityReport.compare("column_relation", {"n": n, **params.as_dict()}, lhs, rhs)


def _window(e, n: int) -> Mat3:
    return Mat3([
        [e.bj_rec(n + 3 - i), e.cal_T(n + 4 - i), e.bj_rec(n + 2 - i).scale(_X)]
        for i in range(3)
    ])


def check_matrix_identity(n: int, params: SeqParams) -> IdentityReport:
    """Window at ``n`` equals the window at 0 times ``Q**n`` (entries in H2 over Z[x])."""
    if n < 0:
        raise ValueError("check_matrix_identity needs n >= 0")
    e = engine_for(params)
    lhs = _window(e, n)
    rhs = _window(e, 0) * mat_pow(qj_matrix(), n).map(Bihyperbolic.scalar)
    return IdentityReport.compare("matrix_identity", {"n": n, **params.as_dict()}, lhs, rhs)
