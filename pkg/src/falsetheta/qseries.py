"""Exact truncated power series in ``z`` and ``q``.

Coefficients are Python ints, so there is no overflow to detect.  A series
keeps one ``{z_degree: coefficient}`` row per q-degree ``0..N``; ``z`` is never
truncated on its own.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Union

from .errors import InvalidFamily, NonUnitConstant, TruncationMismatch
from .partitions import FQ3Prime, Family, General, signed_bivariate, signed_count

Row = dict[int, int]


class BivariateSeries:
    __slots__ = ("N", "_rows")

    def __init__(self, N: int, terms: Union[Mapping[tuple[int, int], int], None] = None):
        if N < 0:
            raise ValueError(f"truncation must be non-negative, got {N}")
        self.N = N
        self._rows: list[Row] = [{} for _ in range(N + 1)]
        for (z, q), c in (terms or {}).items():
            if z < 0 or q < 0:
                raise ValueError(f"negative degree in term {(z, q)}")
            if q <= N and c:
                row = self._rows[q]
                row[z] = row.get(z, 0) + c
                if not row[z]:
                    del row[z]

    @classmethod
    def _from_rows(cls, N: int, rows: list[Row]) -> "BivariateSeries":
        out = cls.__new__(cls)
        out.N = N
        out._rows = [{z: c for z, c in row.items() if c} for row in rows]
        return out

    @classmethod
    def one(cls, N: int) -> "BivariateSeries":
        return cls(N, {(0, 0): 1})

    @classmethod
    def monomial(cls, N: int, c: int = 1, z: int = 0, q: int = 0) -> "BivariateSeries":
        return cls(N, {(z, q): c})

    # ------------------------------------------------------------------ access

    def terms(self) -> dict[tuple[int, int], int]:
        return {(z, q): c for q, row in enumerate(self._rows) for z, c in row.items()}

    def coefficient(self, z: int, q: int) -> int:
        if q > self.N:
            raise IndexError(f"q^{q} is beyond truncation {self.N}")
        return self._rows[q].get(z, 0)

    def row(self, q: int) -> Row:
        return dict(self._rows[q])

    def at_z1(self) -> "BivariateSeries":
        """Substitute ``z = 1``, collapsing all mass onto z-degree 0."""
        rows = [{0: sum(row.values())} for row in self._rows]
        return BivariateSeries._from_rows(self.N, rows)

    def q_coefficients(self) -> list[int]:
        """Coefficients of ``q^0..q^N`` after ``z = 1``."""
        return [sum(row.values()) for row in self._rows]

    def is_zero(self) -> bool:
        return not any(self._rows)

    def truncate(self, N: int) -> "BivariateSeries":
        if N > self.N:
            raise TruncationMismatch(f"cannot extend truncation {self.N} to {N}")
        return BivariateSeries._from_rows(N, [dict(r) for r in self._rows[: N + 1]])

    # ------------------------------------------------------------------ ring ops

    def _check(self, other: "BivariateSeries") -> None:
        if self.N != other.N:
            raise TruncationMismatch(f"truncations differ: {self.N} vs {other.N}")

    def __add__(self, other: "BivariateSeries") -> "BivariateSeries":
        self._check(other)
        rows = []
        for a, b in zip(self._rows, other._rows):
            row = dict(a)
            for z, c in b.items():
                row[z] = row.get(z, 0) + c
            rows.append(row)
        return BivariateSeries._from_rows(self.N, rows)

    def __neg__(self) -> "BivariateSeries":
        return BivariateSeries._from_rows(self.N, [{z: -c for z, c in r.items()} for r in self._rows])

    def __sub__(self, other: "BivariateSeries") -> "BivariateSeries":
        return self + (-other)

    def __mul__(self, other: "BivariateSeries") -> "BivariateSeries":
        self._check(other)
        N = self.N
        rows: list[Row] = [{} for _ in range(N + 1)]
        b_nonzero = [(q, row) for q, row in enumerate(other._rows) if row]
        for qa, ra in enumerate(self._rows):
            if not ra:
                continue
            for qb, rb in b_nonzero:
                q = qa + qb
                if q > N:
                    break
                out = rows[q]
                for za, ca in ra.items():
                    for zb, cb in rb.items():
                        out[za + zb] = out.get(za + zb, 0) + ca * cb
        return BivariateSeries._from_rows(N, rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        return self.N == other.N and self._rows == other._rows

    def __hash__(self):
        return hash((self.N, tuple(tuple(sorted(r.items())) for r in self._rows)))

    def invert(self) -> "BivariateSeries":
        """Multiplicative inverse; the q^0 part must be exactly 1."""
        if self._rows[0] != {0: 1}:
            raise NonUnitConstant(f"q^0 part is {self._rows[0]}, need exactly 1")
        N = self.N
        support = [(q, row) for q, row in enumerate(self._rows) if q and row]
        inv: list[Row] = [{0: 1}]
        for n in range(1, N + 1):
            acc: Row = {}
            for q, ra in support:
                if q > n:
                    break
                for za, ca in ra.items():
                    for zb, cb in inv[n - q].items():
                        acc[za + zb] = acc.get(za + zb, 0) - ca * cb
            inv.append({z: c for z, c in acc.items() if c})
        return BivariateSeries._from_rows(N, inv)

    # ------------------------------------------------------------------ fast paths

    def shift(self, z: int, q: int) -> "BivariateSeries":
        """Multiply by the monomial ``z^z q^q``."""
        rows: list[Row] = [{} for _ in range(self.N + 1)]
        for qq in range(self.N + 1 - q):
            rows[qq + q] = {zz + z: c for zz, c in self._rows[qq].items()}
        return BivariateSeries._from_rows(self.N, rows)

    def mul_binomial(self, c: int, z: int, q: int) -> "BivariateSeries":
        """Multiply by ``1 + c z^z q^q`` (q >= 1) in linear time."""
        rows = [dict(r) for r in self._rows]
        for qq in range(self.N - q, -1, -1):
            src = self._rows[qq]
            dst = rows[qq + q]
            for zz, cc in src.items():
                dst[zz + z] = dst.get(zz + z, 0) + c * cc
        return BivariateSeries._from_rows(self.N, rows)

    def div_binomial(self, c: int, z: int, q: int) -> "BivariateSeries":
        """Divide by ``1 + c z^z q^q`` (q >= 1) in linear time."""
        if q < 1:
            raise NonUnitConstant("divisor must have constant term exactly 1")
        rows: list[Row] = []
        for qq in range(self.N + 1):
            row = dict(self._rows[qq])
            if qq >= q:
                for zz, cc in rows[qq - q].items():
                    row[zz + z] = row.get(zz + z, 0) - c * cc
            rows.append({zz: cc for zz, cc in row.items() if cc})
        return BivariateSeries._from_rows(self.N, rows)

    # ------------------------------------------------------------------ display

    def to_json(self) -> dict:
        terms = [
            {"z": z, "q": q, "c": str(c)}
            for q, row in enumerate(self._rows)
            for z, c in sorted(row.items())
        ]
        return {"q_truncation": self.N, "terms": terms}

    @classmethod
    def from_json(cls, data: Mapping) -> "BivariateSeries":
        return cls(data["q_truncation"], {(t["z"], t["q"]): int(t["c"]) for t in data["terms"]})

    def __str__(self) -> str:
        pieces = []
        for q, row in enumerate(self._rows):
            for z, c in sorted(row.items()):
                mono = "*".join(
                    s for s in (_power("z", z), _power("q", q)) if s
                )
                mag = abs(c)
                body = mono if mag == 1 and mono else (f"{mag}*{mono}" if mono else str(mag))
                pieces.append(("-" if c < 0 else "+", body))
        if not pieces:
            return f"0 + O(q^{self.N + 1})"
        head_sign, head = pieces[0]
        text = ("-" if head_sign == "-" else "") + head
        for s, body in pieces[1:]:
            text += f" {s} {body}"
        return f"{text} + O(q^{self.N + 1})"

    def __repr__(self) -> str:
        return f"BivariateSeries({self})"


def _power(var: str, e: int) -> str:
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


def add(a: BivariateSeries, b: BivariateSeries) -> BivariateSeries:
    return a + b


def mul(a: BivariateSeries, b: BivariateSeries) -> BivariateSeries:
    return a * b


def negate(a: BivariateSeries) -> BivariateSeries:
    return -a


def invert(a: BivariateSeries) -> BivariateSeries:
    return a.invert()


def pochhammer_signed(
    sign: int, z_on: bool, base_exp: int, step: int, count: int, N: int
) -> BivariateSeries:
    """``prod_{j<count} (1 + sign * Z * q^(base_exp + step*j))`` with ``Z = z`` or 1.

    ``(z q^r; q^m)_n`` is ``pochhammer_signed(-1, True, r, m, n, N)``.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if base_exp < 1 or step < 1 or count < 0:
        raise ValueError("need base_exp >= 1, step >= 1, count >= 0")
    out = BivariateSeries.one(N)
    zd = 1 if z_on else 0
    for j in range(count):
        e = base_exp + step * j
        if e > N:
            break
        out = out.mul_binomial(sign, zd, e)
    return out


def false_theta(scale: int, N: int) -> BivariateSeries:
    """``sum_n (-1)^n q^(scale * n(n+1)/2)`` truncated at ``q^N``."""
    if scale < 1:
        raise ValueError("scale must be positive")
    terms = {}
    n = 0
    while scale * n * (n + 1) // 2 <= N:
        terms[(0, scale * n * (n + 1) // 2)] = -1 if n % 2 else 1
        n += 1
    return BivariateSeries(N, terms)


# --------------------------------------------------------------------------- identities


@dataclass(frozen=True)
class Identity:
    """``fq4`` (f(q^4)), ``fq3`` (f(q^3)) or ``general`` (z-refined, residue r mod m)."""

    name: str
    m: int = 2
    r: int = 1

    def __post_init__(self):
        if self.name not in ("fq4", "fq3", "general"):
            raise InvalidFamily(f"unknown identity {self.name!r}")
        if self.name == "general" and not (self.m >= 2 and 1 <= self.r < self.m):
            raise InvalidFamily(f"need m >= 2 and 1 <= r < m, got m={self.m}, r={self.r}")

    def __str__(self) -> str:
        return f"general(m={self.m},r={self.r})" if self.name == "general" else self.name


FQ4_ID = Identity("fq4")
FQ3_ID = Identity("fq3")


def general_z(m: int, r: int) -> Identity:
    return Identity("general", m, r)


def _general_lhs(m: int, r: int, N: int, z_on: bool) -> BivariateSeries:
    # summand_n = (Zq^r;q^m)_n Z^n q^(rn) / (-Zq^r;q^m)_(n+1); each has q-order >= r*n
    zd = 1 if z_on else 0
    term = BivariateSeries.one(N).div_binomial(1, zd, r)
    total = term
    for n in range(1, N // r + 1):
        term = term.mul_binomial(-1, zd, r + m * (n - 1))
        term = term.shift(zd, r)
        term = term.div_binomial(1, zd, r + m * n)
        total = total + term
    return total


def _fq3_lhs(N: int) -> BivariateSeries:
    # summand_n = q^n (q;q^2)_n / (-q;q)_(2n+1); q-order >= n
    term = BivariateSeries.one(N).div_binomial(1, 0, 1)
    total = term
    for n in range(1, N + 1):
        term = term.mul_binomial(-1, 0, 2 * n - 1).shift(0, 1)
        term = term.div_binomial(1, 0, 2 * n).div_binomial(1, 0, 2 * n + 1)
        total = total + term
    return total


def identity_lhs(ident: Identity, N: int) -> BivariateSeries:
    if ident.name == "fq4":
        return _general_lhs(2, 1, N, z_on=False)
    if ident.name == "fq3":
        return _fq3_lhs(N)
    return _general_lhs(ident.m, ident.r, N, z_on=True)


def identity_lhs_naive(ident: Identity, N: int) -> BivariateSeries:
    """Same sum built from full Pochhammer products and generic inversion.

    Quadratic per summand; kept as an independent route for small ``N``.
    """
    total = BivariateSeries(N)
    if ident.name == "fq3":
        for n in range(N + 1):
            num = pochhammer_signed(-1, False, 1, 2, n, N).shift(0, n)
            den = pochhammer_signed(1, False, 1, 1, 2 * n + 1, N)
            total = total + num * den.invert()
        return total
    m, r = (2, 1) if ident.name == "fq4" else (ident.m, ident.r)
    z_on = ident.name == "general"
    zd = 1 if z_on else 0
    for n in range(N // r + 1):
        num = pochhammer_signed(-1, z_on, r, m, n, N).shift(zd * n, r * n)
        den = pochhammer_signed(1, z_on, r, m, n + 1, N)
        total = total + num * den.invert()
    return total


def identity_rhs(ident: Identity, N: int) -> BivariateSeries:
    if ident.name == "fq4":
        return false_theta(4, N)
    if ident.name == "fq3":
        return false_theta(3, N)
    m, r = ident.m, ident.r
    terms = {}
    j = 0
    while j * (m * j + 2 * r) <= N:
        terms[(2 * j, j * (m * j + 2 * r))] = -1 if j % 2 else 1
        j += 1
    return BivariateSeries(N, terms)


def identity_for(family: Family) -> Identity:
    """The z-refined identity whose left side counts ``family``."""
    if isinstance(family, General):
        return general_z(family.m, family.r)
    return FQ3_ID


def series_from_enumeration(family: Family, N: int) -> BivariateSeries:
    """Signed pair counts assembled as a series, coefficient by coefficient."""
    terms = {}
    for n in range(N + 1):
        if isinstance(family, FQ3Prime):
            terms[(0, n)] = signed_count(n, family)
        else:
            for z, c in signed_bivariate(n, family).items():
                terms[(z, n)] = c
    return BivariateSeries(N, terms)


def terms_sorted(series: BivariateSeries) -> list[tuple[int, int, int]]:
    """``(q, z, c)`` triples sorted by q then z."""
    return sorted((q, z, c) for (z, q), c in series.terms().items())

