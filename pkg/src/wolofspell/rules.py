"""Phonotactic validation of candidate words.

Two Wolof writing conventions are enforced:

  INITIAL_STRONG     a word may not begin with a geminate consonant
                     (prenasalized consonants are fine word-initially);
  STRONG_AFTER_LONG  a strong consonant (geminate or prenasalized) may not
                     immediately follow a long vowel.

A word containing a character outside the Wolof alphabet fails outright
with FOREIGN_CHAR.

Because digraphs make segmentation ambiguous, the verdict quantifies over
parses: a word is valid when at least one parse satisfies both rules.
The quantification runs over orthographically faithful parses only, i.e.
parses that never read a doubled letter as two separate weak consonants or
short vowels: doubling is how Wolof spells geminates and long vowels, so
the split reading would let any rule violation escape through it ("ppa"
read as p+p+a).  Non-identical digraphs such as "mb" or "nt" keep both
readings, which is what admits legitimate words like "jaambaar" (weak m
after the long vowel) that the greedy parse alone would reject.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .alphabet import (
    Grapheme,
    GraphemeClass,
    GraphemeInventory,
    UnsegmentableError,
    default_inventory,
)

INITIAL_STRONG = "INITIAL_STRONG"
STRONG_AFTER_LONG = "STRONG_AFTER_LONG"
FOREIGN_CHAR = "FOREIGN_CHAR"


@dataclass(frozen=True)
class Violation:
    rule: str
    index: int  # grapheme index (scalar index for FOREIGN_CHAR)


@dataclass(frozen=True)
class RuleVerdict:
    valid: bool
    violations: tuple[Violation, ...] = field(default_factory=tuple)


def is_faithful(parse: list[Grapheme], inventory: GraphemeInventory) -> bool:
    """True when no doubled letter is read as two identical single graphemes."""
    for a, b in zip(parse, parse[1:]):
        if (len(a.text) == 1 and a.text == b.text
                and a.text + b.text in inventory.digraphs):
            return False
    return True


def parse_violations(parse: list[Grapheme]) -> tuple[Violation, ...]:
    """Rule violations of one concrete parse."""
    found = []
    for i, g in enumerate(parse):
        if i == 0:
            if g.cls is GraphemeClass.GEMINATE_CONSONANT:
                found.append(Violation(INITIAL_STRONG, 0))
        elif g.is_strong and parse[i - 1].cls is GraphemeClass.LONG_VOWEL:
            found.append(Violation(STRONG_AFTER_LONG, i))
    return tuple(found)


def validate(word: str, inventory: GraphemeInventory | None = None) -> RuleVerdict:
    """Check ``word`` against the writing conventions.

    ``word`` must be normalized (lowercase NFC).  Valid when some faithful
    parse violates neither rule; otherwise the violations of the first
    failing parse (the greedy one) are reported.  A non-Wolof character is
    reported as FOREIGN_CHAR with its scalar index, never as an exception.
    """
    inventory = inventory or default_inventory()
    try:
        parses = inventory.segmentations(word)
    except UnsegmentableError as err:
        return RuleVerdict(False, (Violation(FOREIGN_CHAR, err.index),))

    first_failure: tuple[Violation, ...] | None = None
    for parse in parses:
        if not is_faithful(parse, inventory):
            continue
        violations = parse_violations(parse)
        if not violations:
            return RuleVerdict(True)
        if first_failure is None:
            first_failure = violations
    assert first_failure is not None  # the bound-digraph parse always exists
    return RuleVerdict(False, first_failure)
