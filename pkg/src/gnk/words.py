"""Word algebra over finitely presented alphabets.

Everything downstream (group elements, relators, invariant values) is a
``Word``: a freely reduced sequence of signed letters over an ``Alphabet``.
Alphabets may declare symbols involutive (g^2 = 1); involutive letters are
stored with sign +1 and adjacent equal involutive letters cancel, so the
square relation is structural rather than a rewrite rule.

Free products of Z_2 (all-involutive alphabets) therefore have a unique
normal form: two words are equal in the group iff they are letter-identical.

Text grammar: whitespace-separated tokens, ``^-1`` suffix for an inverse,
e.g. ``a_123 a_234^-1``.  Parsing and printing round-trip exactly.
"""

from __future__ import annotations

from typing import Iterable, Tuple


class UnknownSymbolError(KeyError):
    """A letter does not belong to the word's alphabet."""


class Alphabet:
    """Finite ordered set of generator names, each optionally involutive.

    The declared order of symbols is the canonical symbol order used for
    cyclic-word canonicalization and deterministic sorting.
    """

    def __init__(self, symbols: Iterable[str], involutive=True):
        self.symbols = tuple(symbols)
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError("duplicate symbol names")
        if isinstance(involutive, bool):
            self._invol = {s: involutive for s in self.symbols}
        else:
            inv = set(involutive)
            self._invol = {s: (s in inv) for s in self.symbols}
        self.index = {s: i for i, s in enumerate(self.symbols)}

    def is_involutive(self, symbol: str) -> bool:
        return self._invol[symbol]

    def __contains__(self, symbol):
        return symbol in self._invol

    def __len__(self):
        return len(self.symbols)

    def __eq__(self, other):
        return (isinstance(other, Alphabet) and self.symbols == other.symbols
                and self._invol == other._invol)

    def __hash__(self):
        return hash((self.symbols, tuple(sorted(self._invol.items()))))

    def __repr__(self):
        return "Alphabet(%d symbols)" % len(self.symbols)


Letter = Tuple[str, int]


def _normalize_letter(alphabet: Alphabet, symbol: str, sign: int) -> Letter:
    if symbol not in alphabet:
        raise UnknownSymbolError(symbol)
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if alphabet.is_involutive(symbol):
        return (symbol, 1)
    return (symbol, sign)


def reduce_letters(alphabet: Alphabet, letters: Iterable[Letter]) -> tuple:
    """Freely reduce a raw letter sequence (stack pass, linear time).

    Adjacent g g^-1 cancel; for involutive g, adjacent g g cancel.  The
    result is the unique reduced form (cancellation is confluent).
    """
    out = []
    for symbol, sign in letters:
        symbol, sign = _normalize_letter(alphabet, symbol, sign)
        if out:
            psym, psign = out[-1]
            if psym == symbol and (alphabet.is_involutive(symbol)
                                   or psign == -sign):
                out.pop()
                continue
        out.append((symbol, sign))
    return tuple(out)


class Word:
    """Freely reduced word; immutable and hashable."""

    __slots__ = ("alphabet", "letters")

    def __init__(self, alphabet: Alphabet, letters: Iterable[Letter] = ()):
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "letters", reduce_letters(alphabet, letters))

    def __setattr__(self, *a):
        raise AttributeError("Word is immutable")

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __bool__(self):
        return bool(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        if other.alphabet != self.alphabet:
            raise ValueError("alphabet mismatch")
        return Word(self.alphabet, self.letters + other.letters)

    def inverse(self) -> "Word":
        inv = [(s, -e) for s, e in reversed(self.letters)]
        return Word(self.alphabet, inv)

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return self.inverse() ** (-n)
        w = Word(self.alphabet)
        for _ in range(n):
            w = w * self
        return w

    def __eq__(self, other):
        return (isinstance(other, Word) and self.alphabet == other.alphabet
                and self.letters == other.letters)

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        return "Word(%s)" % (format_word(self) or "1")

    def symbol_counts(self) -> dict:
        counts = {}
        for s, _ in self.letters:
            counts[s] = counts.get(s, 0) + 1
        return counts


class CyclicWord:
    """Conjugacy-class key: cyclically reduced, rotation-canonical word.

    Canonical form = lexicographically least rotation under the alphabet's
    declared symbol order (inverse letters sort after positive ones).
    """

    __slots__ = ("alphabet", "letters")

    def __init__(self, word: Word):
        letters = list(word.letters)
        # cyclic reduction: cancel across the seam until stable
        while len(letters) >= 2:
            (s1, e1), (s2, e2) = letters[0], letters[-1]
            if s1 == s2 and (word.alphabet.is_involutive(s1) or e1 == -e2):
                letters = reduce_letters(word.alphabet, letters[1:-1])
                letters = list(letters)
            else:
                break
        object.__setattr__(self, "alphabet", word.alphabet)
        object.__setattr__(self, "letters", self._least_rotation(word.alphabet, letters))

    @staticmethod
    def _least_rotation(alphabet, letters):
        if not letters:
            return ()
        def key(rot):
            return tuple((alphabet.index[s], 0 if e == 1 else 1) for s, e in rot)
        n = len(letters)
        best = min((tuple(letters[i:]) + tuple(letters[:i]) for i in range(n)), key=key)
        return best

    def __setattr__(self, *a):
        raise AttributeError("CyclicWord is immutable")

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other):
        return (isinstance(other, CyclicWord) and self.alphabet == other.alphabet
                and self.letters == other.letters)

    def __hash__(self):
        return hash(("cyc", self.letters))

    def __repr__(self):
        return "CyclicWord(%s)" % (format_word(self) or "1")

    def to_word(self) -> Word:
        return Word(self.alphabet, self.letters)

    def reversal(self) -> "CyclicWord":
        return CyclicWord(self.to_word().inverse())


def word(alphabet: Alphabet, letters: Iterable) -> Word:
    """Build a Word from (symbol, sign) pairs or bare symbol names."""
    norm = []
    for item in letters:
        if isinstance(item, str):
            norm.append((item, 1))
        else:
            norm.append(tuple(item))
    return Word(alphabet, norm)


def complexity(w) -> int:
    """Letter count of the given reduced representative."""
    return len(w)


def format_word(w) -> str:
    parts = []
    for s, e in w:
        parts.append(s if e == 1 else s + "^-1")
    return " ".join(parts)


def parse_word(alphabet: Alphabet, text: str) -> Word:
    """Parse the whitespace token grammar; ``^-1`` marks an inverse."""
    letters = []
    for tok in text.split():
        if tok.endswith("^-1"):
            letters.append((tok[:-3], -1))
        elif tok == "1":
            continue
        else:
            letters.append((tok, 1))
    return Word(alphabet, letters)


def free_product_z2_alphabet(symbols: Iterable[str]) -> Alphabet:
    """Alphabet of a free product of Z_2's: every symbol involutive."""
    return Alphabet(symbols, involutive=True)
