"""One-variable Laurent polynomials with exact integer coefficients.

Stored as a map exponent -> coefficient with no zero entries, so equality
is structural and all arithmetic is exact.
"""

from __future__ import annotations


class Laurent:
    """Integer Laurent polynomial in a single formal variable."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[int, int] | None = None):
        self.coeffs: dict[int, int] = {}
        if coeffs:
            for e, c in coeffs.items():
                if c != 0:
                    self.coeffs[int(e)] = int(c)

    @classmethod
    def zero(cls) -> "Laurent":
        return cls()

    @classmethod
    def one(cls) -> "Laurent":
        return cls({0: 1})

    @classmethod
    def term(cls, coeff: int, exp: int) -> "Laurent":
        return cls({exp: coeff})

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Laurent({0: other})
        if not isinstance(other, Laurent):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other: "Laurent | int") -> "Laurent":
        if isinstance(other, int):
            other = Laurent({0: other})
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        result = Laurent()
        result.coeffs = out
        return result

    __radd__ = __add__

    def __neg__(self) -> "Laurent":
        result = Laurent()
        result.coeffs = {e: -c for e, c in self.coeffs.items()}
        return result

    def __sub__(self, other: "Laurent | int") -> "Laurent":
        if isinstance(other, int):
            other = Laurent({0: other})
        return self + (-other)

    def __mul__(self, other: "Laurent | int") -> "Laurent":
        if isinstance(other, int):
            other = Laurent({0: other})
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        result = Laurent()
        result.coeffs = out
        return result

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Laurent":
        if k < 0:
            raise ValueError("negative powers of a polynomial are not defined")
        result = Laurent.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def min_exp(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no degrees")
        return min(self.coeffs)

    def max_exp(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no degrees")
        return max(self.coeffs)

    def span(self) -> int:
        """Leading degree minus lowest degree (0 for a monomial)."""
        return self.max_exp() - self.min_exp()

    def substitute_inverse(self) -> "Laurent":
        """Replace the variable x by x^-1."""
        result = Laurent()
        result.coeffs = {-e: c for e, c in self.coeffs.items()}
        return result

    def substitute_signed_power(self, sign: int, k: int) -> "Laurent":
        """Replace the variable x by sign * y^k, returning a polynomial in y.

        sign must be +1 or -1.
        """
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        out: dict[int, int] = {}
        for e, c in self.coeffs.items():
            v = c if (sign == 1 or e % 2 == 0) else -c
            ne = k * e
            w = out.get(ne, 0) + v
            if w:
                out[ne] = w
            else:
                out.pop(ne, None)
        result = Laurent()
        result.coeffs = out
        return result

    def terms(self) -> list[tuple[int, int]]:
        """(exponent, coefficient) pairs, highest exponent first."""
        return sorted(self.coeffs.items(), reverse=True)

    def format(self, var: str = "A") -> str:
        if not self.coeffs:
            return "0"
        pieces = []
        for e, c in self.terms():
            mag = abs(c)
            body = f"{mag}*{var}^{e}" if e != 0 else f"{mag}"
            pieces.append(("-" if c < 0 else "+", body))
        sign0, body0 = pieces[0]
        text = body0 if sign0 == "+" else "-" + body0
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Laurent({self.coeffs!r})"


# Loop value of the bracket state sum: -A^2 - A^-2.
LOOP = Laurent({2: -1, -2: -1})
