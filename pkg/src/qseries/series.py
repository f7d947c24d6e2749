"""Truncated formal power series in q with exact rational coefficients."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence, Union

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class QSeries:
    """c_0 + c_1 q + ... + c_N q^N + O(q^(N+1)).

    Attributes:
        order: Truncation order N (coefficients c_0..c_N are known)
        coeffs: Exactly N + 1 coefficients
    """

    order: int
    coeffs: tuple

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError(f"order must be >= 0, got {self.order}")
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if len(coeffs) != self.order + 1:
            raise ValueError(
                f"series of order {self.order} needs {self.order + 1} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls, order: int) -> "QSeries":
        return cls(order, (0,) * (order + 1))

    @classmethod
    def constant(cls, value: Scalar, order: int) -> "QSeries":
        return cls(order, (value,) + (0,) * order)

    @classmethod
    def from_coefficients(cls, coeffs: Sequence[Scalar], order: Optional[int] = None) -> "QSeries":
        """Pad with zeros or truncate so that the result has the given order."""
        order = len(coeffs) - 1 if order is None else order
        padded = list(coeffs[: order + 1]) + [0] * max(0, order + 1 - len(coeffs))
        return cls(order, tuple(padded))

    def coefficient(self, n: int) -> Fraction:
        if n > self.order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> "QSeries":
        if order > self.order:
            raise ValueError(f"cannot raise order from {self.order} to {order}")
        return QSeries(order, self.coeffs[: order + 1])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def first_difference(self, other: "QSeries") -> Optional[int]:
        """Lowest n where the two series differ, or None if they agree up to the common order."""
        for n, (a, b) in enumerate(zip(self.coeffs, other.coeffs)):
            if a != b:
                return n
        return None

    def __add__(self, other: "QSeries") -> "QSeries":
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return QSeries(n, tuple(a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)))

    def __sub__(self, other: "QSeries") -> "QSeries":
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return QSeries(n, tuple(a - b for a, b in zip(self.coeffs[: n + 1], other.coeffs)))

    def __neg__(self) -> "QSeries":
        return QSeries(self.order, tuple(-c for c in self.coeffs))

    def scale(self, s: Scalar) -> "QSeries":
        s = Fraction(s)
        return QSeries(self.order, tuple(c * s for c in self.coeffs))

    def __mul__(self, other: Union["QSeries", Scalar]) -> "QSeries":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        b = other.coeffs
        for i, a in enumerate(self.coeffs[: n + 1]):
            if not a:
                continue
            for j in range(n + 1 - i):
                if b[j]:
                    out[i + j] += a * b[j]
        return QSeries(n, tuple(out))

    def __rmul__(self, other: Scalar) -> "QSeries":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    # Serialization

    def to_dict(self) -> Dict[str, Any]:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "QSeries":
        return cls(int(data["order"]), tuple(Fraction(c) for c in data["coeffs"]))

    @classmethod
    def from_json(cls, text: str) -> "QSeries":
        return cls.from_dict(json.loads(text))

    def render(self, with_floats: bool = False) -> str:
        """Human-readable form ``1 + 2q^2 - 1/12q^3 + O(q^N+1)``.

        With ``with_floats`` each exact coefficient is followed by a decimal
        approximation in brackets; the exact value is always printed.
        """
        parts: List[str] = []
        for n, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = -c if c < 0 else c
            power = "" if n == 0 else ("q" if n == 1 else f"q^{n}")
            if n == 0:
                body = str(mag)
            elif mag == 1:
                body = power
            else:
                body = f"{mag}{'*' if mag.denominator != 1 else ''}{power}"
            if with_floats and mag.denominator != 1:
                body += f" [{float(mag):.6g}]"
            sign = "-" if c < 0 else "+"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        head = "".join(parts) if parts else "0"
        return f"{head} + O(q^{self.order + 1})"

    def __str__(self) -> str:
        return self.render()


def series_sum(items: Iterable[tuple], order: int) -> QSeries:
    """sum c_i * s_i over (c_i, s_i) pairs, truncated to ``order``."""
    out = [Fraction(0)] * (order + 1)
    for coeff, s in items:
        if not coeff:
            continue
        if s.order < order:
            raise ValueError(f"series of order {s.order} cannot fill order {order}")
        c = Fraction(coeff)
        for n in range(order + 1):
            if s.coeffs[n]:
                out[n] += c * s.coeffs[n]
    return QSeries(order, tuple(out))
