"""Camel-case splitting of identifier names into lowercase words.

An identifier is cut at three kinds of boundaries:

  a. before an uppercase letter that follows a lowercase letter or a digit
     ("drawShape" -> draw|Shape);
  b. before the last uppercase letter of an uppercase run that is followed
     by a lowercase letter, so acronyms stay whole ("HTTPServer" ->
     HTTP|Server);
  c. at underscores, dollar signs, and digit runs, which are discarded.

Segments are lowercased; empty segments are dropped.  Letters outside
a-z are reduced to their ASCII base letter where one exists (e.g. an
accented vowel) and act as separators otherwise.
"""

from __future__ import annotations

import unicodedata


def _fold_letter(ch: str) -> str:
    """ASCII base letters for one character, lowercased; "" if none remain."""
    folded = unicodedata.normalize("NFKD", ch.casefold())
    return "".join(c for c in folded if "a" <= c <= "z")


def split_identifier(name: str) -> list[str]:
    """Split an identifier name into its constituent lowercase words.

    A name with no letters (e.g. "_1") yields an empty list.
    """
    n = len(name)
    upper = [False] * n
    folded: list[str] = [""] * n
    for i, ch in enumerate(name):
        if "a" <= ch <= "z":
            folded[i] = ch
        elif "A" <= ch <= "Z":
            folded[i] = ch.lower()
            upper[i] = True
        elif ch.isalpha():
            folded[i] = _fold_letter(ch)
            # a letter folding to several ASCII letters acts as lowercase
            upper[i] = ch.isupper() and len(folded[i]) == 1
        # digits, _, $, and anything unfoldable stay "" and separate

    words: list[str] = []
    current: list[str] = []
    for i in range(n):
        if not folded[i]:
            if current:
                words.append("".join(current))
                current = []
            continue
        if current and upper[i]:
            prev_lower = folded[i - 1] != "" and not upper[i - 1]
            run_end = (
                upper[i - 1]
                and i + 1 < n
                and folded[i + 1] != ""
                and not upper[i + 1]
            )
            if prev_lower or run_end:
                words.append("".join(current))
                current = []
        current.append(folded[i])
    if current:
        words.append("".join(current))
    return words
