"""A minimal univariate counting polynomial with non-negative integer coefficients."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator


@dataclass(frozen=True)
class Polynomial:
    """Finitely supported map exponent -> positive count.

    Used both for level polynomials of sandpile models and for single-variable
    specialisations of the Tutte polynomial.  Zero coefficients are never
    stored; two polynomials compare equal iff their supports and counts match.
    """

    _items: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self) -> None:
        seen = set()
        for exp, coeff in self._items:
            if exp < 0:
                raise ValueError(f"negative exponent {exp}")
            if coeff <= 0:
                raise ValueError(f"coefficient for x^{exp} must be positive, got {coeff}")
            if exp in seen:
                raise ValueError(f"duplicate exponent {exp}")
            seen.add(exp)
        object.__setattr__(self, "_items", tuple(sorted(self._items)))

    @classmethod
    def from_dict(cls, coeffs: dict[int, int]) -> "Polynomial":
        return cls(tuple((e, c) for e, c in coeffs.items() if c != 0))

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "Polynomial":
        counts: dict[int, int] = {}
        for e in exponents:
            counts[e] = counts.get(e, 0) + 1
        return cls.from_dict(counts)

    @property
    def coefficients(self) -> dict[int, int]:
        return dict(self._items)

    def coefficient(self, exp: int) -> int:
        return dict(self._items).get(exp, 0)

    @property
    def degree(self) -> int:
        return max((e for e, _ in self._items), default=0)

    def evaluate(self, x: int) -> int:
        return sum(c * x**e for e, c in self._items)

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(self._items)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        coeffs = self.coefficients
        for e, c in other.items():
            coeffs[e] = coeffs.get(e, 0) + c
        return Polynomial.from_dict(coeffs)

    def __str__(self) -> str:
        if not self._items:
            return "0"
        parts = []
        for e, c in self._items:
            if e == 0:
                parts.append(str(c))
            elif e == 1:
                parts.append(f"{c}*x" if c != 1 else "x")
            else:
                parts.append(f"{c}*x^{e}" if c != 1 else f"x^{e}")
        return " + ".join(parts)
