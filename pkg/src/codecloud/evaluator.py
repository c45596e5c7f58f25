"""Oracle-based evaluation of tag clouds.

The oracle is a second, deliberately naive implementation of the
split-and-stem pipeline: regex substitutions insert word boundaries and a
straight loop interprets the same lexicon data.  It shares nothing with
the production code path except the lexicon, so agreement between the two
is evidence rather than tautology.  Each cloud tag gets precision, recall,
and F-measure computed from its cloud weight and the oracle's count of
identifiers containing the tag.
"""

from __future__ import annotations

import csv
import io
import re
import unicodedata
from dataclasses import dataclass

from .cloudmodel import CloudKind, TagCloud
from .extractor import Identifier, IdentifierKind
from .stemmer import StemLexicon


class CorpusMismatchError(ValueError):
    """The cloud's contributor references do not belong to the given corpus."""


# --- the naive reference pipeline ---------------------------------------

_ACRONYM_BOUNDARY = re.compile(r"([A-Z]+)([A-Z][a-z])")
_CASE_BOUNDARY = re.compile(r"([a-z0-9])([A-Z])")
_NON_LETTER = re.compile(r"[^A-Za-z]+")


def _ascii_fold(name: str) -> str:
    """Reduce non-ASCII letters to ASCII base letters, preserving case.

    Characters with no ASCII base become spaces (separators); a letter
    folding to several ASCII letters stays lowercase.
    """
    if name.isascii():
        return name
    out = []
    for ch in name:
        if ch.isascii():
            out.append(ch)
            continue
        base = "".join(
            c
            for c in unicodedata.normalize("NFKD", ch.casefold())
            if "a" <= c <= "z"
        )
        if not base:
            out.append(" ")
        elif ch.isupper() and len(base) == 1:
            out.append(base.upper())
        else:
            out.append(base)
    return "".join(out)


def _naive_split(name: str) -> list[str]:
    spaced = _ACRONYM_BOUNDARY.sub(r"\1 \2", _ascii_fold(name))
    spaced = _CASE_BOUNDARY.sub(r"\1 \2", spaced)
    return _NON_LETTER.sub(" ", spaced).lower().split()


def _naive_stem(word: str, lexicon: StemLexicon) -> str:
    if word in lexicon.exceptions:
        return lexicon.exceptions[word]
    for suffix, replacement, min_stem, needs_list in lexicon.detachment_rules:
        if not word.endswith(suffix):
            continue
        stem = word[: len(word) - len(suffix)]
        if len(stem) < min_stem:
            continue
        candidate = stem + replacement
        if needs_list and candidate not in lexicon.word_list:
            continue
        return candidate
    return word


def oracle_words(
    name: str, lexicon: StemLexicon, stop_words_enabled: bool = True
) -> set[str]:
    """Stem set of one identifier name, via the naive reference pipeline."""
    stems = {_naive_stem(word, lexicon) for word in _naive_split(name)}
    if stop_words_enabled:
        stems -= lexicon.stop_words
    return stems


def oracle_frequency(
    stem: str,
    ids: list[Identifier],
    lexicon: StemLexicon,
    stop_words_enabled: bool = True,
) -> int:
    """How many identifiers contain ``stem``, per the reference pipeline."""
    return sum(
        1
        for identifier in ids
        if stem in oracle_words(identifier.simple_name, lexicon, stop_words_enabled)
    )


# --- metrics -------------------------------------------------------------


@dataclass(frozen=True)
class EvalRow:
    stem: str
    cloud_frequency: int
    oracle_frequency: int
    precision: float
    recall: float
    f_measure: float

    @property
    def perfect(self) -> bool:
        return self.precision == 1.0 and self.recall == 1.0 and self.f_measure == 1.0

    @classmethod
    def from_frequencies(cls, stem: str, cloud_frequency: int, oracle_frequency: int) -> EvalRow:
        """Score one tag: correct counts are modeled as min(cloud, oracle)."""
        correct = min(cloud_frequency, oracle_frequency)
        if cloud_frequency > 0:
            precision = correct / cloud_frequency
        else:
            precision = 1.0 if oracle_frequency == 0 else 0.0
        if oracle_frequency > 0:
            recall = correct / oracle_frequency
        else:
            recall = 1.0 if cloud_frequency == 0 else 0.0
        if precision + recall > 0:
            f_measure = 2 * precision * recall / (precision + recall)
        else:
            f_measure = 0.0
        return cls(stem, cloud_frequency, oracle_frequency, precision, recall, f_measure)


@dataclass(frozen=True)
class EvalReport:
    corpus_label: str
    rows: tuple[EvalRow, ...]
    all_perfect: bool


_CLOUD_KIND_TO_IDENTIFIER_KIND = {
    CloudKind.PACKAGE: IdentifierKind.PACKAGE,
    CloudKind.CLASS: IdentifierKind.CLASS,
    CloudKind.ATTRIBUTE: IdentifierKind.ATTRIBUTE,
    CloudKind.METHOD: IdentifierKind.METHOD,
}


def evaluate(cloud: TagCloud, ids: list[Identifier], lexicon: StemLexicon) -> EvalReport:
    """Score every cloud tag against the oracle frequency.

    The cloud must have been built from ``ids`` (checked through its
    contributor references) and without a short-tag filter, so that every
    tag is covered.  A kind-restricted cloud is scored against the oracle
    over that kind's identifiers.
    """
    known = {(identifier.file, identifier.ordinal) for identifier in ids}
    for tag in cloud.tags:
        for contributor in tag.contributors:
            if not isinstance(contributor, Identifier):
                raise CorpusMismatchError(
                    "cloud carries name-only contributor references "
                    "(deserialized clouds cannot be evaluated)"
                )
            if (contributor.file, contributor.ordinal) not in known:
                raise CorpusMismatchError(
                    f"contributor {contributor.qualified_name!r} of tag "
                    f"{tag.stem!r} is not part of the given corpus"
                )

    wanted = _CLOUD_KIND_TO_IDENTIFIER_KIND.get(cloud.kind)
    selected = ids if wanted is None else [i for i in ids if i.kind is wanted]
    stop_words_enabled = cloud.filters.stop_words_enabled
    word_sets = [
        oracle_words(identifier.simple_name, lexicon, stop_words_enabled)
        for identifier in selected
    ]
    rows = []
    for tag in cloud.tags:
        oracle_count = sum(1 for words in word_sets if tag.stem in words)
        rows.append(EvalRow.from_frequencies(tag.stem, tag.weight, oracle_count))
    return EvalReport(
        corpus_label=cloud.corpus_label,
        rows=tuple(rows),
        all_perfect=all(row.perfect for row in rows),
    )


# --- serialization -------------------------------------------------------

_CSV_COLUMNS = ("stem", "cloudFreq", "oracleFreq", "precision", "recall", "fMeasure")


def report_to_csv(report: EvalReport) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(_CSV_COLUMNS)
    for row in report.rows:
        writer.writerow(
            [
                row.stem,
                row.cloud_frequency,
                row.oracle_frequency,
                f"{row.precision:.6g}",
                f"{row.recall:.6g}",
                f"{row.f_measure:.6g}",
            ]
        )
    return buffer.getvalue()


def report_to_json_dict(report: EvalReport) -> dict:
    return {
        "corpus": report.corpus_label,
        "allPerfect": report.all_perfect,
        "rows": [
            {
                "stem": row.stem,
                "cloudFreq": row.cloud_frequency,
                "oracleFreq": row.oracle_frequency,
                "precision": row.precision,
                "recall": row.recall,
                "fMeasure": row.f_measure,
            }
            for row in report.rows
        ],
    }
