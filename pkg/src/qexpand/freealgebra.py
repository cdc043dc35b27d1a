"""The free associative algebra on the generators a, b, c.

Words are plain strings over the alphabet ``abc``; the empty string is the
multiplicative identity.  An :class:`NCPolynomial` maps words to nonzero
rational-function coefficients; multiplication concatenates words and is
deliberately noncommutative.  Serialization and printing use a fixed term
order (word length first, then lexicographic with a < b < c) so output is
deterministic.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from .exactarith import RF_ONE, RF_ZERO, RationalFunction

GENERATORS = "abc"


def parse_word(text: str) -> str:
    """Validate a word over the generator alphabet; '' is the identity word."""
    for i, ch in enumerate(text):
        if ch not in GENERATORS:
            raise ValueError(f"invalid generator '{ch}' at position {i + 1}")
    return text


def word_sort_key(word: str) -> tuple[int, str]:
    """Canonical term order: by length, then lexicographic with a < b < c."""
    return (len(word), word)


def format_word(word: str) -> str:
    """Render a word with powers and middle dots, e.g. 'aab' -> 'a^2·b'."""
    if not word:
        return "1"
    runs: list[list] = []
    for ch in word:
        if runs and runs[-1][0] == ch:
            runs[-1][1] += 1
        else:
            runs.append([ch, 1])
    return "·".join(ch if n == 1 else f"{ch}^{n}" for ch, n in runs)


class NCPolynomial:
    """A finite linear combination of words with rational-function coefficients.

    Zero coefficients are pruned eagerly, so equality is a structural
    comparison of the underlying term maps.
    """

    __slots__ = ("_terms",)

    def __init__(
        self,
        terms: Mapping[str, RationalFunction]
        | Iterable[tuple[str, RationalFunction]] = (),
    ):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[str, RationalFunction] = {}
        for word, coeff in items:
            parse_word(word)
            if coeff.is_zero():
                continue
            merged = clean.get(word)
            total = coeff if merged is None else merged + coeff
            if total.is_zero():
                clean.pop(word, None)
            else:
                clean[word] = total
        self._terms = clean

    @classmethod
    def _from_reduced(cls, terms: dict[str, RationalFunction]) -> NCPolynomial:
        # internal: caller guarantees valid words and no zero coefficients
        out = object.__new__(cls)
        out._terms = terms
        return out

    @classmethod
    def zero(cls) -> NCPolynomial:
        return cls._from_reduced({})

    @classmethod
    def one(cls) -> NCPolynomial:
        return cls._from_reduced({"": RF_ONE})

    @classmethod
    def from_word(cls, word: str, coeff: RationalFunction = RF_ONE) -> NCPolynomial:
        parse_word(word)
        if coeff.is_zero():
            return cls.zero()
        return cls._from_reduced({word: coeff})

    def items(self):
        """Raw (word, coefficient) view; use terms() for canonical order."""
        return self._terms.items()

    def terms(self) -> list[tuple[str, RationalFunction]]:
        """Terms sorted in the canonical word order."""
        return sorted(self._terms.items(), key=lambda kv: word_sort_key(kv[0]))

    def words(self) -> list[str]:
        return sorted(self._terms, key=word_sort_key)

    def coefficient(self, word: str) -> RationalFunction:
        return self._terms.get(word, RF_ZERO)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[str]:
        return iter(self.words())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NCPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __add__(self, other: NCPolynomial) -> NCPolynomial:
        if not isinstance(other, NCPolynomial):
            return NotImplemented
        out = dict(self._terms)
        for word, coeff in other._terms.items():
            merged = out.get(word)
            total = coeff if merged is None else merged + coeff
            if total.is_zero():
                out.pop(word, None)
            else:
                out[word] = total
        return NCPolynomial._from_reduced(out)

    def __sub__(self, other: NCPolynomial) -> NCPolynomial:
        if not isinstance(other, NCPolynomial):
            return NotImplemented
        out = dict(self._terms)
        for word, coeff in other._terms.items():
            merged = out.get(word)
            total = -coeff if merged is None else merged - coeff
            if total.is_zero():
                out.pop(word, None)
            else:
                out[word] = total
        return NCPolynomial._from_reduced(out)

    def __neg__(self) -> NCPolynomial:
        return NCPolynomial._from_reduced({w: -c for w, c in self._terms.items()})

    def scale(self, factor: RationalFunction) -> NCPolynomial:
        if factor.is_zero():
            return NCPolynomial.zero()
        return NCPolynomial._from_reduced(
            {w: c * factor for w, c in self._terms.items()}
        )

    def __mul__(self, other: NCPolynomial | RationalFunction) -> NCPolynomial:
        if isinstance(other, RationalFunction):
            return self.scale(other)
        if not isinstance(other, NCPolynomial):
            return NotImplemented
        out: dict[str, RationalFunction] = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                word = w1 + w2
                coeff = c1 * c2
                merged = out.get(word)
                total = coeff if merged is None else merged + coeff
                if total.is_zero():
                    out.pop(word, None)
                else:
                    out[word] = total
        return NCPolynomial._from_reduced(out)

    def __rmul__(self, other: RationalFunction) -> NCPolynomial:
        if isinstance(other, RationalFunction):
            return self.scale(other)
        return NotImplemented

    def to_json(self) -> list[dict]:
        """Terms in canonical order; the empty word serializes as ''."""
        return [{"word": w, "coeff": c.to_json()} for w, c in self.terms()]

    @classmethod
    def from_json(cls, data: Iterable[dict]) -> NCPolynomial:
        return cls(
            (item["word"], RationalFunction.from_json(item["coeff"])) for item in data
        )

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for word, coeff in self.terms():
            if coeff == RF_ONE:
                parts.append(format_word(word))
            elif word:
                parts.append(f"({coeff})·{format_word(word)}")
            else:
                parts.append(f"({coeff})")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"NCPolynomial({str(self)!r})"
