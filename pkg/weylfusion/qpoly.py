"""Polynômes à coefficients entiers en une variable t et q-analogues"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, List, Tuple, Union

# Degré conventionnel du polynôme nul
ZERO_DEGREE = -1


def _canonical(coeffs: Iterable[int]) -> Tuple[int, ...]:
    """Supprime les coefficients nuls de plus haut degré"""
    values = [int(c) for c in coeffs]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


@dataclass(frozen=True)
class QPoly:
    """Polynôme Σ coeffs[k] t^k, forme canonique sans zéro final"""
    
    coeffs: Tuple[int, ...] = ()
    
    def __post_init__(self):
        object.__setattr__(self, "coeffs", _canonical(self.coeffs))
    
    @classmethod
    def zero(cls) -> "QPoly":
        return cls(())
    
    @classmethod
    def one(cls) -> "QPoly":
        return cls((1,))
    
    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> "QPoly":
        """Retourne coefficient · t^degree"""
        if degree < 0:
            raise ValueError("Les puissances négatives de t ne sont pas prises en charge")
        return cls((0,) * degree + (coefficient,))
    
    @property
    def degree(self) -> int:
        """Degré, ZERO_DEGREE pour le polynôme nul"""
        return len(self.coeffs) - 1
    
    def is_zero(self) -> bool:
        return not self.coeffs
    
    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0
    
    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)
    
    def eval_at_one(self) -> int:
        """Spécialisation t = 1"""
        return sum(self.coeffs)
    
    def shift(self, k: int) -> "QPoly":
        """Retourne t^k · p"""
        if self.is_zero():
            return self
        return QPoly((0,) * k + self.coeffs)
    
    def __add__(self, other: Union["QPoly", int]) -> "QPoly":
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return QPoly(tuple(self.coefficient(k) + other.coefficient(k) for k in range(n)))
    
    __radd__ = __add__
    
    def __neg__(self) -> "QPoly":
        return QPoly(tuple(-c for c in self.coeffs))
    
    def __sub__(self, other: Union["QPoly", int]) -> "QPoly":
        return self + (-_coerce(other))
    
    def __rsub__(self, other: Union["QPoly", int]) -> "QPoly":
        return _coerce(other) - self
    
    def __mul__(self, other: Union["QPoly", int]) -> "QPoly":
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return QPoly.zero()
        product = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    product[i + j] += a * b
        return QPoly(product)
    
    __rmul__ = __mul__
    
    def to_list(self) -> List[int]:
        """Coefficients du plus bas au plus haut degré (sérialisation JSON)"""
        return list(self.coeffs)
    
    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
                continue
            power = "t" if k == 1 else f"t^{k}"
            terms.append(power if c == 1 else f"{c}{power}")
        return " + ".join(terms)


def _coerce(value: Union[QPoly, int]) -> QPoly:
    if isinstance(value, QPoly):
        return value
    return QPoly((int(value),))


def q_integer(n: int) -> QPoly:
    """Retourne [n]_t = 1 + t + ... + t^{n-1}"""
    return QPoly((1,) * max(n, 0))


@lru_cache(maxsize=None)
def qbinom(n: int, k: int) -> QPoly:
    """
    Coefficient q-binomial [n choose k]_t
    
    Calculé par la récurrence de Pascal
    [n,k] = [n-1,k-1] + t^k [n-1,k], sans division polynomiale.
    
    Args:
        n: Entier positif ou nul
        k: Entier quelconque
        
    Returns:
        Le polynôme, nul si k < 0 ou k > n
    """
    if n < 0 or k < 0 or k > n:
        return QPoly.zero()
    if k == 0 or k == n:
        return QPoly.one()
    return qbinom(n - 1, k - 1) + qbinom(n - 1, k).shift(k)


def eval_at_one(p: QPoly) -> int:
    """Somme des coefficients de p"""
    return p.eval_at_one()
