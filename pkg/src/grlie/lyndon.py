"""Free Lie algebra over the integers on a weighted alphabet.

Words are tuples of letter indices into a :class:`WeightedAlphabet` and are
compared lexicographically by index (Python tuple order).  Lie elements are
stored in Lyndon coordinates; brackets are computed in the tensor algebra
and brought back by unitriangular elimination against the standard
bracketing of Lyndon words.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Dict, Iterable, Iterator, List, Mapping, Tuple

Word = Tuple[int, ...]


class NotLieElement(ValueError):
    """The tensor polynomial is not in the free Lie algebra."""


class AlphabetMismatch(ValueError):
    pass


class InhomogeneousExpression(ValueError):
    """Two terms of different weighted degree were combined."""


@dataclass(frozen=True)
class WeightedAlphabet:
    symbols: Tuple[str, ...]
    weights: Tuple[int, ...] = ()

    def __post_init__(self):
        symbols = tuple(self.symbols)
        weights = tuple(self.weights) if self.weights else (1,) * len(symbols)
        if len(weights) != len(symbols):
            raise ValueError("one weight per symbol required")
        if len(set(symbols)) != len(symbols):
            dups = sorted({s for s in symbols if symbols.count(s) > 1})
            raise ValueError(f"duplicate generator names: {dups}")
        for s, w in zip(symbols, weights):
            if not isinstance(w, int) or w < 1:
                raise ValueError(f"weight of {s!r} must be a positive integer, got {w!r}")
        object.__setattr__(self, "symbols", symbols)
        object.__setattr__(self, "weights", weights)

    def __len__(self) -> int:
        return len(self.symbols)

    @cached_property
    def index(self) -> Dict[str, int]:
        return {s: i for i, s in enumerate(self.symbols)}

    def weight(self, word: Word) -> int:
        ws = self.weights
        return sum(ws[i] for i in word)

    def format(self, word: Word) -> str:
        return "".join(self.symbols[i] for i in word) if all(
            len(s) == 1 for s in self.symbols
        ) else "*".join(self.symbols[i] for i in word)


def is_lyndon(w: Word) -> bool:
    """True iff ``w`` is strictly smaller than each of its proper suffixes."""
    if not w:
        raise ValueError("the empty word is not a Lyndon candidate")
    w = tuple(w)
    return all(w < w[i:] for i in range(1, len(w)))


def _duval(k: int, n: int) -> Iterator[Word]:
    # all Lyndon words of length <= n over k letters, in lex order
    w = [-1]
    while w:
        w[-1] += 1
        yield tuple(w)
        m = len(w)
        while len(w) < n:
            w.append(w[len(w) - m])
        while w and w[-1] == k - 1:
            w.pop()


@lru_cache(maxsize=None)
def _lyndon_words(alphabet: WeightedAlphabet, degree: int) -> Tuple[Word, ...]:
    if len(alphabet) == 0:
        return ()
    max_len = degree // min(alphabet.weights)
    return tuple(
        w for w in _duval(len(alphabet), max_len) if alphabet.weight(w) == degree
    )


def lyndon_words(alphabet: WeightedAlphabet, degree: int) -> List[Word]:
    """Lyndon words of weighted degree ``degree`` in lexicographic order."""
    if degree < 1:
        raise ValueError(f"degree must be >= 1, got {degree}")
    return list(_lyndon_words(alphabet, degree))


@lru_cache(maxsize=None)
def basis_index(alphabet: WeightedAlphabet, degree: int) -> Dict[Word, int]:
    """Position of each degree-``degree`` Lyndon word in the coordinate vector."""
    return {w: i for i, w in enumerate(_lyndon_words(alphabet, degree))}


@lru_cache(maxsize=None)
def standard_factorization(w: Word) -> Tuple[Word, Word]:
    """Split a Lyndon word as ``uv`` with ``v`` its longest proper Lyndon suffix."""
    w = tuple(w)
    if len(w) < 2:
        raise ValueError("standard factorization needs a word of length >= 2")
    if not is_lyndon(w):
        raise ValueError(f"{w} is not a Lyndon word")
    for i in range(1, len(w)):
        if is_lyndon(w[i:]):
            return w[:i], w[i:]
    raise AssertionError("unreachable: last letter is always Lyndon")


# -- tensor algebra --------------------------------------------------------


def _mul(p: Mapping[Word, int], q: Mapping[Word, int]) -> Dict[Word, int]:
    out: Dict[Word, int] = {}
    for u, a in p.items():
        for v, b in q.items():
            k = u + v
            c = out.get(k, 0) + a * b
            if c:
                out[k] = c
            else:
                out.pop(k, None)
    return out


def _commutator(p: Mapping[Word, int], q: Mapping[Word, int]) -> Dict[Word, int]:
    out = _mul(p, q)
    for k, c in _mul(q, p).items():
        c = out.get(k, 0) - c
        if c:
            out[k] = c
        else:
            out.pop(k, None)
    return out


@lru_cache(maxsize=None)
def _rho(w: Word) -> Dict[Word, int]:
    if len(w) == 1:
        return {w: 1}
    u, v = standard_factorization(w)
    return _commutator(_rho(u), _rho(v))


class TensorPoly:
    """Integer noncommutative polynomial, homogeneous in the weighted grading."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[Word, int] = ()):
        self.coeffs: Dict[Word, int] = {
            tuple(k): int(c) for k, c in dict(coeffs).items() if c
        }

    def __eq__(self, other):
        if not isinstance(other, TensorPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self):
        return f"TensorPoly({self.coeffs!r})"

    def __add__(self, other: "TensorPoly") -> "TensorPoly":
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return TensorPoly(out)

    def __neg__(self) -> "TensorPoly":
        return TensorPoly({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: "TensorPoly") -> "TensorPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return TensorPoly({k: other * c for k, c in self.coeffs.items()})
        return TensorPoly(_mul(self.coeffs, other.coeffs))

    def __rmul__(self, other: int) -> "TensorPoly":
        return self * other

    def is_homogeneous(self, alphabet: WeightedAlphabet) -> bool:
        return len({alphabet.weight(w) for w in self.coeffs}) <= 1


def rho_expand(w: Word) -> TensorPoly:
    """Standard bracketing of a Lyndon word, expanded in the tensor algebra."""
    w = tuple(w)
    if not w or not is_lyndon(w):
        raise ValueError(f"{w} is not a Lyndon word")
    return TensorPoly(_rho(w))


def _eliminate(p: Mapping[Word, int]) -> Dict[Word, int]:
    residual = dict(p)
    heap = list(residual)
    heapq.heapify(heap)
    coords: Dict[Word, int] = {}
    while heap:
        w = heapq.heappop(heap)
        c = residual.pop(w, 0)
        if not c:
            continue
        if not is_lyndon(w):
            raise NotLieElement(f"leading word {w} of the residual is not Lyndon")
        coords[w] = c
        for k, r in _rho(w).items():
            if k == w:
                continue
            if k not in residual:
                heapq.heappush(heap, k)
            v = residual.get(k, 0) - c * r
            if v:
                residual[k] = v
            else:
                residual.pop(k, None)
    return coords


@dataclass(frozen=True, eq=False)
class LieElement:
    """Homogeneous element of the free Lie algebra in Lyndon coordinates."""

    alphabet: WeightedAlphabet
    degree: int
    coeffs: Mapping[Word, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError(f"degree must be >= 1, got {self.degree}")
        clean = {}
        for w, c in self.coeffs.items():
            w = tuple(w)
            if not c:
                continue
            if not is_lyndon(w):
                raise ValueError(f"{w} is not a Lyndon word")
            if self.alphabet.weight(w) != self.degree:
                raise InhomogeneousExpression(
                    f"word {w} has degree {self.alphabet.weight(w)}, expected {self.degree}"
                )
            clean[w] = int(c)
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def _raw(cls, alphabet, degree, coeffs) -> "LieElement":
        # trusted constructor: coeffs already nonzero, Lyndon, of the right degree
        obj = object.__new__(cls)
        object.__setattr__(obj, "alphabet", alphabet)
        object.__setattr__(obj, "degree", degree)
        object.__setattr__(obj, "coeffs", coeffs)
        return obj

    @classmethod
    def generator(cls, alphabet: WeightedAlphabet, name: str) -> "LieElement":
        i = alphabet.index[name]
        return cls._raw(alphabet, alphabet.weights[i], {(i,): 1})

    @classmethod
    def zero(cls, alphabet: WeightedAlphabet, degree: int) -> "LieElement":
        return cls(alphabet, degree, {})

    @classmethod
    def from_vector(cls, alphabet, degree, vector: Iterable[int]) -> "LieElement":
        words = _lyndon_words(alphabet, degree)
        return cls._raw(alphabet, degree, {w: c for w, c in zip(words, vector) if c})

    def to_vector(self) -> List[int]:
        idx = basis_index(self.alphabet, self.degree)
        v = [0] * len(idx)
        for w, c in self.coeffs.items():
            v[idx[w]] = c
        return v

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, LieElement):
            return NotImplemented
        return (
            self.alphabet == other.alphabet
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.alphabet, self.degree, frozenset(self.coeffs.items())))

    def __repr__(self):
        if not self.coeffs:
            return f"LieElement(0, degree={self.degree})"
        terms = " ".join(
            f"{c:+d}*{self.alphabet.format(w)}" for w, c in sorted(self.coeffs.items())
        )
        return f"LieElement({terms})"

    def _check(self, other: "LieElement"):
        if self.alphabet != other.alphabet:
            raise AlphabetMismatch("elements live over different alphabets")
        if self.degree != other.degree:
            raise InhomogeneousExpression(
                f"cannot add elements of degrees {self.degree} and {other.degree}"
            )

    def __add__(self, other: "LieElement") -> "LieElement":
        if not isinstance(other, LieElement):
            return NotImplemented
        self._check(other)
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            v = out.get(w, 0) + c
            if v:
                out[w] = v
            else:
                del out[w]
        return LieElement._raw(self.alphabet, self.degree, out)

    def __neg__(self) -> "LieElement":
        return LieElement._raw(
            self.alphabet, self.degree, {w: -c for w, c in self.coeffs.items()}
        )

    def __sub__(self, other: "LieElement") -> "LieElement":
        return self + (-other)

    def __mul__(self, k: int) -> "LieElement":
        if not isinstance(k, int):
            return NotImplemented
        if k == 0:
            return LieElement._raw(self.alphabet, self.degree, {})
        return LieElement._raw(
            self.alphabet, self.degree, {w: k * c for w, c in self.coeffs.items()}
        )

    __rmul__ = __mul__

    def tensor(self) -> TensorPoly:
        out: Dict[Word, int] = {}
        for w, c in self.coeffs.items():
            for k, r in _rho(w).items():
                out[k] = out.get(k, 0) + c * r
        return TensorPoly(out)


def to_lyndon_coords(p: TensorPoly, alphabet: WeightedAlphabet) -> LieElement:
    """Write a homogeneous Lie polynomial in the Lyndon basis.

    Raises :class:`NotLieElement` when ``p`` is not a Lie polynomial.
    """
    degrees = {alphabet.weight(w) for w in p.coeffs}
    if len(degrees) > 1:
        raise InhomogeneousExpression(f"polynomial mixes degrees {sorted(degrees)}")
    if not degrees:
        raise ValueError("the zero polynomial carries no degree; use LieElement.zero")
    (degree,) = degrees
    return LieElement._raw(alphabet, degree, _eliminate(p.coeffs))


@lru_cache(maxsize=None)
def structure_constants(u: Word, v: Word) -> Dict[Word, int]:
    """Lyndon coordinates of the bracket of two Lyndon basis elements."""
    if u == v:
        return {}
    if u > v:
        return {w: -c for w, c in structure_constants(v, u).items()}
    return _eliminate(_commutator(_rho(u), _rho(v)))


def bracket(e1: LieElement, e2: LieElement) -> LieElement:
    if e1.alphabet != e2.alphabet:
        raise AlphabetMismatch("cannot bracket elements over different alphabets")
    out: Dict[Word, int] = {}
    for u, a in e1.coeffs.items():
        for v, b in e2.coeffs.items():
            ab = a * b
            for w, c in structure_constants(u, v).items():
                out[w] = out.get(w, 0) + ab * c
    return LieElement._raw(
        e1.alphabet, e1.degree + e2.degree, {w: c for w, c in out.items() if c}
    )
