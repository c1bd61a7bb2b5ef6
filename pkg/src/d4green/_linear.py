"""Shared machinery for free abelian groups on an ordered basis."""

from __future__ import annotations

from typing import Iterable, Mapping


class LinearCombination:
    """Finite integer-coefficient map over hashable, sortable basis keys.

    Zero coefficients are never stored; equality and hashing are by the
    underlying map.  Subclasses supply the multiplication.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping | Iterable[tuple] | None = None):
        store = {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else (coeffs or ())
        for key, c in items:
            c = int(c)
            if c:
                c0 = store.get(key, 0) + c
                if c0:
                    store[key] = c0
                elif key in store:
                    del store[key]
        self._coeffs = store

    @classmethod
    def zero(cls):
        return cls()

    def coeff(self, key) -> int:
        return self._coeffs.get(key, 0)

    def keys(self):
        return sorted(self._coeffs)

    def terms(self) -> list[tuple]:
        """(key, coefficient) pairs in canonical basis order."""
        return [(k, self._coeffs[k]) for k in sorted(self._coeffs)]

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other) -> bool:
        return type(self) is type(other) and self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        out = dict(self._coeffs)
        for k, c in other._coeffs.items():
            c0 = out.get(k, 0) + c
            if c0:
                out[k] = c0
            elif k in out:
                del out[k]
        return self._wrap(out)

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        out = dict(self._coeffs)
        for k, c in other._coeffs.items():
            c0 = out.get(k, 0) - c
            if c0:
                out[k] = c0
            elif k in out:
                del out[k]
        return self._wrap(out)

    def __neg__(self):
        return self._wrap({k: -c for k, c in self._coeffs.items()})

    def scaled(self, n: int):
        n = int(n)
        if not n:
            return self._wrap({})
        return self._wrap({k: n * c for k, c in self._coeffs.items()})

    def _wrap(self, coeffs: dict):
        obj = type(self).__new__(type(self))
        obj._coeffs = coeffs
        return obj

    def __repr__(self) -> str:
        if not self._coeffs:
            return f"{type(self).__name__}(0)"
        body = " + ".join(f"{c}*{k!r}" for k, c in self.terms())
        return f"{type(self).__name__}({body})"
