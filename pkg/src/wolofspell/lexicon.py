"""Trie-backed lexicon with exact membership lookup.

The lexicon file format is one word per line, UTF-8, LF or CRLF endings,
surrounding whitespace trimmed, blank lines and ``#`` comments ignored.
Duplicate words collapse silently.  Words are stored lowercase and
NFC-composed; membership follows the character path from the root node
(the empty string) and requires it to end on a terminal node.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .preprocess import normalize


class MalformedLexiconError(ValueError):
    """A lexicon line contains whitespace inside a word or a digit."""


class _Node:
    __slots__ = ("children", "terminal")

    def __init__(self):
        self.children: dict[str, _Node] = {}
        self.terminal = False


class TrieDict:
    """Immutable-after-construction character trie over a word set."""

    def __init__(self, words: Iterable[str] = ()):
        self.root = _Node()
        self.word_count = 0
        for word in words:
            self._insert(word)

    @classmethod
    def from_words(cls, words: Iterable[str]) -> "TrieDict":
        """Build a trie from raw word strings (normalized on the way in)."""
        trie = cls()
        for word in words:
            trie._insert(cls._clean(word, where=repr(word)))
        return trie

    @staticmethod
    def _clean(word: str, where: str) -> str:
        word = normalize(word.strip())
        if not word:
            raise MalformedLexiconError(f"{where}: empty word")
        if any(c.isspace() for c in word):
            raise MalformedLexiconError(f"{where}: whitespace inside word {word!r}")
        if any(c.isdigit() for c in word):
            raise MalformedLexiconError(f"{where}: digit inside word {word!r}")
        return word

    def _insert(self, word: str) -> None:
        node = self.root
        for c in word:
            node = node.children.setdefault(c, _Node())
        if not node.terminal:
            node.terminal = True
            self.word_count += 1

    def contains(self, word: str) -> bool:
        """True iff the path for ``word`` exists and ends on a terminal node."""
        node = self.root
        for c in word:
            node = node.children.get(c)
            if node is None:
                return False
        return node.terminal

    def __contains__(self, word: str) -> bool:
        return self.contains(word)

    def __len__(self) -> int:
        return self.word_count

    def iterate(self) -> Iterator[str]:
        """Yield every stored word once, in lexicographic scalar order."""
        yield from self._walk(self.root, [])

    def _walk(self, node, prefix):
        if node.terminal:
            yield "".join(prefix)
        for c in sorted(node.children):
            prefix.append(c)
            yield from self._walk(node.children[c], prefix)
            prefix.pop()

    def __iter__(self) -> Iterator[str]:
        return self.iterate()

    def node_count(self) -> int:
        """Number of trie nodes, the root included."""
        count = 0
        stack = [self.root]
        while stack:
            node = stack.pop()
            count += 1
            stack.extend(node.children.values())
        return count


def load(path) -> TrieDict:
    """Load a lexicon file into a TrieDict.

    Raises MalformedLexiconError on a word with internal whitespace or a
    digit, and the usual OSError when the file cannot be read.
    """
    trie = TrieDict()
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            word = line.strip()
            if not word or word.startswith("#"):
                continue
            trie._insert(TrieDict._clean(word, where=f"{path}:{lineno}"))
    return trie
