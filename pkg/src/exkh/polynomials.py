"""Integer Laurent polynomials in one variable q."""

from __future__ import annotations


class LaurentPoly:
    """Immutable Laurent polynomial with integer coefficients.

    Stored as exponent -> coefficient with zero coefficients dropped.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: dict[int, int] | None = None):
        self._coeffs = {e: c for e, c in (coeffs or {}).items() if c != 0}

    @classmethod
    def term(cls, coeff: int, exponent: int) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls({})

    def coefficient(self, exponent: int) -> int:
        return self._coeffs.get(exponent, 0)

    def items(self):
        return sorted(self._coeffs.items())

    @property
    def min_exponent(self) -> int | None:
        return min(self._coeffs) if self._coeffs else None

    @property
    def max_exponent(self) -> int | None:
        return max(self._coeffs) if self._coeffs else None

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(tuple(self.items()))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    def scale(self, k: int) -> "LaurentPoly":
        return LaurentPoly({e: k * c for e, c in self._coeffs.items()})

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("negative powers are not defined here")
        result = LaurentPoly({0: 1})
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __str__(self):
        """Terms in ascending powers, every sign written out."""
        if not self._coeffs:
            return "0"
        parts = []
        for e, c in self.items():
            sign = "+" if c > 0 else "-"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                q = "q" if e == 1 else f"q^{e}"
                body = q if mag == 1 else f"{mag}{q}"
            parts.append(f"{sign}{body}")
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({self._coeffs!r})"


Q_PLUS_QINV = LaurentPoly({1: 1, -1: 1})
