from ..fock import FockBasis
from .fock_operator import FockOperator
from .primitives import (
    annihilation_left,
    annihilation_right,
    creation_left,
    creation_right,
    gaussian_left,
    gaussian_right,
)


class OperatorFactory:
    # Mapeo de nombres a constructores
    _OPERATOR_BUILDERS = {
        "l": creation_left,
        "l*": annihilation_left,
        "lr": creation_right,
        "lr*": annihilation_right,
        "w": gaussian_left,
        "wr": gaussian_right,
    }

    @classmethod
    def kinds(cls):
        return sorted(cls._OPERATOR_BUILDERS)

    @classmethod
    def get_operator(cls, kind: str, basis: FockBasis, letter: int) -> FockOperator:
        """
        Create or get a one-letter operator.

        Args:
            kind: 'l', 'l*', 'lr', 'lr*', 'w' or 'wr'
            basis: truncated basis the operator acts on
            letter: letter index, 0 being e

        Operators are cached on the basis, so every Wick term of a long symbol
        shares the same sparse factors.
        """
        key = kind.lower().replace('_', '').replace('-', '')
        builder = cls._OPERATOR_BUILDERS.get(key)
        if not builder:
            raise ValueError(f"Invalid operator kind: {kind}")

        cache = basis._operator_cache
        if (key, letter) not in cache:
            cache[(key, letter)] = builder(basis, letter)
        return cache[(key, letter)]
