"""
Решётка L₀₀ = ℤe₁ + L₀ + ℤe₁′ с (e₁, e₁′) = 1.

Вектор хранится тройкой (α, x, β) = αe₁ + x + βe₁′, Q = Q(x) + αβ.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from lattice import PosDefLattice
from lattice.posdef import Vector

Triple = Tuple[Fraction, Vector, Fraction]


@dataclass(frozen=True)
class V00Frame:
    L0: PosDefLattice

    def vector(self, alpha, x: Sequence, beta) -> Triple:
        if len(x) != self.L0.rank:
            raise ValueError(f"Компонента x должна иметь длину {self.L0.rank}")
        return Fraction(alpha), tuple(Fraction(t) for t in x), Fraction(beta)

    def from_abx(self, a, b, x0: Sequence) -> Triple:
        """x₀₀ = b·e₁ − x₀ − a·e₁′, так что Q(x₀₀) = Q(x₀) − ab."""
        return self.vector(b, tuple(-Fraction(t) for t in x0), -Fraction(a))

    def pair(self, u: Triple, v: Triple) -> Fraction:
        return self.L0.pair(u[1], v[1]) + u[0] * v[2] + u[2] * v[0]

    def Q(self, u: Triple) -> Fraction:
        return self.L0.Q(u[1]) + u[0] * u[2]

    def witness(self, y2, y0: Sequence, y1=1) -> Triple:
        """Вектор y, для которого (x₀₀, y) = a·y₂ + b·y₁ − (x₀, y₀)."""
        return self.vector(-Fraction(y2), y0, y1)

    def monomial(self, u: Triple) -> Tuple[Fraction, Fraction, Vector]:
        """Показатели (q₂, q₁, X) одночлена e((u, 𝔷)) = q₂^a q₁^b X^{−x₀}."""
        alpha, x, beta = u
        return -beta, alpha, x
