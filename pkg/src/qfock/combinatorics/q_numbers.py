import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Tuple, Union

Number = Union[float, Fraction]

DEFAULT_CQ_TOL = 1e-12


def check_q(q: Number) -> Number:
    """Reject deformation parameters outside the open interval (-1, 1)"""
    if not -1 < q < 1:
        raise ValueError(f"q must lie in (-1, 1), got {q}")
    return q


def q_integer(k: int, q: Number) -> Number:
    """[k]_q = (1 - q^k) / (1 - q); exact for Fraction q"""
    check_q(q)
    if k < 0:
        raise ValueError(f"q-integers are defined for natural k, got {k}")
    return (1 - q ** k) / (1 - q)


def q_factorial(n: int, q: Number) -> Number:
    """[n]_q! = [1]_q ... [n]_q, with [0]_q! = 1"""
    check_q(q)
    if n < 0:
        raise ValueError(f"q-factorials are defined for natural n, got {n}")
    start = Fraction(1) if isinstance(q, Fraction) else 1.0
    return math.prod((q_integer(k, q) for k in range(1, n + 1)), start=start)


def gaussian_binomial(n: int, m: int, q: Number) -> Number:
    """[n choose m]_q = [n]_q! / ([m]_q! [n-m]_q!)"""
    if not 0 <= m <= n:
        raise ValueError(f"Need 0 <= m <= n, got n={n}, m={m}")
    return q_factorial(n, q) / (q_factorial(m, q) * q_factorial(n - m, q))


def c_q(q: float, tol: float = DEFAULT_CQ_TOL) -> float:
    """
    Truncated C_q = prod_{i>=1} (1 - |q|^i)^{-1}.

    Factors are multiplied until the last one is within tol of 1, then the
    remaining tail is replaced by its geometric upper bound
    exp(a^{M+1} / ((1 - a)(1 - a^{M+1}))), so the result never underestimates
    the infinite product.
    """
    check_q(q)
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")
    a = abs(float(q))
    if a == 0.0:
        return 1.0

    product = 1.0
    i = 0
    while True:
        i += 1
        factor = 1.0 / (1.0 - a ** i)
        product *= factor
        if factor - 1.0 < tol:
            break
    tail = a ** (i + 1) / ((1.0 - a) * (1.0 - a ** (i + 1)))
    return product * math.exp(tail)


@dataclass(frozen=True)
class QScalar:
    """A deformation parameter with write-once caches of its q-numbers"""
    q: Number
    _integers: Dict[int, Number] = field(default_factory=dict, repr=False, compare=False)
    _factorials: Dict[int, Number] = field(default_factory=dict, repr=False, compare=False)
    _constants: Dict[float, float] = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        check_q(self.q)

    def integer(self, k: int) -> Number:
        if k not in self._integers:
            self._integers[k] = q_integer(k, self.q)
        return self._integers[k]

    def factorial(self, n: int) -> Number:
        if n not in self._factorials:
            self._factorials[n] = q_factorial(n, self.q)
        return self._factorials[n]

    def factorials(self, n: int) -> Tuple[Number, ...]:
        """[0]_q!, ..., [n]_q!"""
        return tuple(self.factorial(k) for k in range(n + 1))

    def c_q(self, tol: float = DEFAULT_CQ_TOL) -> float:
        if tol not in self._constants:
            self._constants[tol] = c_q(float(self.q), tol)
        return self._constants[tol]
