"""Word stemming via an exception map plus ordered suffix-detachment rules.

The lexicon is self-contained: irregular forms live in an exception map
(``wrote -> write``), regular inflections are handled by detachment rules
applied longest-suffix-first, and a small embedded word list arbitrates
the ambiguous cases (``writing`` restores the trailing e only because
``write`` is a known word; ``drawing`` falls back to the bare strip).
Stop words are a separate set consulted after stemming.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

#: (suffix, replacement, min_stem_len, needs_word_list), tried in order.
#: A rule applies when the word ends with the suffix and at least
#: min_stem_len characters remain before it; a gated rule is skipped
#: unless its candidate is in the embedded word list.  The "ss" -> "ss"
#: identity rule shields words like "class" from the bare "s" strip.
DETACHMENT_RULES: tuple[tuple[str, str, int, bool], ...] = (
    ("ies", "y", 2, False),
    ("ing", "e", 2, True),
    ("ing", "", 2, False),
    ("ied", "y", 2, False),
    ("ed", "e", 2, True),
    ("ed", "", 2, False),
    ("ss", "ss", 2, False),
    ("es", "", 2, True),
    ("s", "", 2, False),
)


@dataclass(frozen=True)
class StemLexicon:
    """Immutable stemming data: safe to share across threads."""

    exceptions: dict[str, str]
    detachment_rules: tuple[tuple[str, str, int, bool], ...]
    stop_words: frozenset[str]
    word_list: frozenset[str]


class LexiconError(ValueError):
    """Raised when a lexicon data file is malformed."""


def _is_lower_alpha(word: str) -> bool:
    return word != "" and all("a" <= c <= "z" for c in word)


def _iter_data_lines(text: str, source: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line, source


def _read_word_set(text: str, source: str) -> frozenset[str]:
    words = set()
    for lineno, line, src in _iter_data_lines(text, source):
        if not _is_lower_alpha(line):
            raise LexiconError(f"{src}:{lineno}: expected one lowercase word, got {line!r}")
        words.add(line)
    return frozenset(words)


def _read_pairs(text: str, source: str) -> dict[str, str]:
    pairs: dict[str, str] = {}
    for lineno, line, src in _iter_data_lines(text, source):
        parts = line.split()
        if len(parts) != 2 or not all(_is_lower_alpha(p) for p in parts):
            raise LexiconError(f"{src}:{lineno}: expected two lowercase words, got {line!r}")
        pairs[parts[0]] = parts[1]
    return pairs


def _bundled(name: str) -> str:
    return resources.files("codecloud.data").joinpath(name).read_text(encoding="utf-8")


def load_lexicon(
    exceptions_path: str | Path | None = None,
    stopwords_path: str | Path | None = None,
) -> StemLexicon:
    """Load the bundled lexicon, optionally overriding its data files.

    ``exceptions.txt`` holds one ``inflected base`` pair per line,
    ``stopwords.txt`` one word per line; ``#`` starts a comment in both.
    """
    if exceptions_path is None:
        exceptions = _read_pairs(_bundled("exceptions.txt"), "exceptions.txt")
    else:
        exceptions = _read_pairs(
            Path(exceptions_path).read_text(encoding="utf-8"), str(exceptions_path)
        )
    if stopwords_path is None:
        stop_words = _read_word_set(_bundled("stopwords.txt"), "stopwords.txt")
    else:
        stop_words = _read_word_set(
            Path(stopwords_path).read_text(encoding="utf-8"), str(stopwords_path)
        )
    word_list = _read_word_set(_bundled("wordlist.txt"), "wordlist.txt")
    return StemLexicon(
        exceptions=exceptions,
        detachment_rules=DETACHMENT_RULES,
        stop_words=stop_words,
        word_list=word_list,
    )


def stem_word(word: str, lexicon: StemLexicon) -> str:
    """Map a lowercase word to its base form.

    Exception map first, then the first applicable detachment rule (applied
    once); words matching nothing pass through unchanged.
    """
    base = lexicon.exceptions.get(word)
    if base is not None:
        return base
    for suffix, replacement, min_stem, needs_list in lexicon.detachment_rules:
        if len(word) - len(suffix) >= min_stem and word.endswith(suffix):
            candidate = word[: len(word) - len(suffix)] + replacement
            if needs_list and candidate not in lexicon.word_list:
                continue
            return candidate
    return word


def is_stop_word(word: str, lexicon: StemLexicon) -> bool:
    """True when the (lowercase) word is a stop word."""
    return word in lexicon.stop_words
