"""Exact coefficient fields: the rationals and prime fields.

Scalars are stored as raw values (``fractions.Fraction`` for the rationals,
``int`` residues in ``[0, p)`` for a prime field); the field object carries the
tag and supplies arithmetic, parsing and canonical formatting.  Keeping raw
values out of wrapper objects keeps the elimination loops fast.
"""

from __future__ import annotations

from fractions import Fraction


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Field:
    """Common interface of the two exact fields."""

    label: str

    def __repr__(self):
        return self.label

    def parse(self, text):
        raise NotImplementedError

    def format(self, value) -> str:
        raise NotImplementedError

    def to_json(self):
        raise NotImplementedError


class RationalField(Field):
    """The field of arbitrary-precision rationals.  Singleton ``QQ``."""

    label = "Q"
    char = 0

    zero = Fraction(0)
    one = Fraction(1)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("homalg.Q")

    def from_int(self, k):
        return Fraction(k)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in Q")
        return a / b

    def parse(self, text):
        if isinstance(text, int):
            return Fraction(text)
        try:
            return Fraction(str(text).strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad rational literal {text!r}") from exc

    def format(self, value) -> str:
        f = Fraction(value)
        if f.denominator == 1:
            return str(f.numerator)
        return f"{f.numerator}/{f.denominator}"

    def to_json(self):
        return "Q"


class PrimeField(Field):
    """Integers modulo a prime ``p``; residues normalized into ``[0, p)``."""

    char: int

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.char = p
        self.label = f"F{p}"
        self.zero = 0
        self.one = 1 % p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("homalg.Fp", self.p))

    def from_int(self, k):
        return k % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def div(self, a, b):
        if b % self.p == 0:
            raise ZeroDivisionError(f"division by zero in F{self.p}")
        return a * pow(b, -1, self.p) % self.p

    def parse(self, text):
        try:
            return int(str(text).strip()) % self.p
        except ValueError as exc:
            raise ValueError(f"bad F{self.p} literal {text!r}") from exc

    def format(self, value) -> str:
        return str(value % self.p)

    def to_json(self):
        return {"Fp": self.p}


QQ = RationalField()

_FP_CACHE: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    if p not in _FP_CACHE:
        _FP_CACHE[p] = PrimeField(p)
    return _FP_CACHE[p]


def field_from_json(obj) -> Field:
    if obj == "Q":
        return QQ
    if isinstance(obj, dict) and set(obj) == {"Fp"}:
        return GF(int(obj["Fp"]))
    raise ValueError(f"unrecognized field descriptor {obj!r}")
