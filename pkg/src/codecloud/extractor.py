"""Declaration-level scanning of Java source trees.

A lexer strips comments and string/char literals, then a brace-tracking
parser walks the token stream and emits one identifier per declaration:
the package declaration, every type declaration (class, interface, enum,
annotation type, record; nested included), every field declarator and enum
constant, and every method or constructor.  Method bodies, local variables,
parameters, and type parameters are never inspected, so the parser needs
no expression grammar.  Files that do not parse cleanly recover at the
next plausible boundary and report diagnostics instead of failing.
"""

from __future__ import annotations

import logging
import os
import re
from concurrent import futures
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

log = logging.getLogger(__name__)

PARALLEL_ENV_VAR = "CODECLOUD_NO_PARALLEL"
_PARALLEL_MIN_FILES = 8

#: Java identifier shape: letter/underscore/dollar start, then letters,
#: digits, underscores, dollars.
IDENTIFIER_RE = re.compile(r"[^\W\d][\w$]*|[_$][\w$]*")

_MODIFIERS = frozenset(
    "public private protected static final abstract native synchronized "
    "transient volatile strictfp default sealed".split()
)
_TYPE_KEYWORDS = frozenset({"class", "interface", "enum"})
_KEYWORDS_NEVER_NAMES = frozenset(
    "package import class interface enum extends implements throws new "
    "return if else for while do switch case break continue try catch "
    "finally throw this super instanceof void".split()
) | _MODIFIERS


class CorpusError(Exception):
    """Fatal problem with the corpus root (missing or unreadable)."""


class IdentifierKind(Enum):
    PACKAGE = "Package"
    CLASS = "Class"
    ATTRIBUTE = "Attribute"
    METHOD = "Method"


@dataclass(frozen=True)
class Diagnostic:
    message: str
    line: int


@dataclass
class SourceUnit:
    """One ``.java`` file: path, decoded text, and non-fatal parse warnings."""

    path: str
    text: str
    diagnostics: list[Diagnostic] = field(default_factory=list)


@dataclass(frozen=True)
class Identifier:
    """One declared program element.

    ``ordinal`` is the 0-based position of the declaration within its file,
    so ``(file, ordinal)`` is unique across a corpus and corpus assembly is
    independent of extraction order.
    """

    kind: IdentifierKind
    simple_name: str
    qualified_name: str
    file: str
    line: int
    ordinal: int


def identifier_to_dict(identifier: Identifier) -> dict:
    """JSON-dump shape for one identifier."""
    return {
        "kind": identifier.kind.value,
        "simpleName": identifier.simple_name,
        "qualifiedName": identifier.qualified_name,
        "file": identifier.file,
        "line": identifier.line,
    }


# --- lexer ---------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""
      (?P<ws>\s+)
    | (?P<line_comment>//[^\n]*)
    | (?P<block_comment>/\*.*?(?:\*/|\Z))
    | (?P<text_block>\"{3}.*?(?:\"{3}|\Z))
    | (?P<string>"(?:\\.|[^"\\\n])*"?)
    | (?P<char>'(?:\\.|[^'\\\n])*'?)
    | (?P<ident>(?:[^\W\d]|\$)[\w$]*)
    | (?P<number>[0-9][0-9a-zA-Z_]*(?:\.[0-9a-zA-Z_]*)?(?:[eEpP][+-]?[0-9]+)?|\.[0-9][0-9a-zA-Z_]*)
    | (?P<punct>.)
    """,
    re.VERBOSE | re.DOTALL,
)

_IDENT = "ident"
_PUNCT = "punct"
_LITERAL = "lit"


def _lex(text: str, diagnostics: list[Diagnostic]) -> list[tuple[str, str, int]]:
    """Tokenize to (kind, text, line) triples; comments and whitespace drop out."""
    tokens: list[tuple[str, str, int]] = []
    line = 1
    for match in _TOKEN_RE.finditer(text):
        kind = match.lastgroup
        value = match.group()
        if kind == "ws":
            pass
        elif kind == "line_comment":
            pass
        elif kind == "block_comment":
            if not value.endswith("*/"):
                diagnostics.append(Diagnostic("unterminated block comment", line))
        elif kind == "text_block":
            if len(value) < 6 or not value.endswith('"""'):
                diagnostics.append(Diagnostic("unterminated text block", line))
            tokens.append((_LITERAL, value, line))
        elif kind == "string":
            if len(value) < 2 or not value.endswith('"'):
                diagnostics.append(Diagnostic("unterminated string literal", line))
            tokens.append((_LITERAL, value, line))
        elif kind == "char":
            if len(value) < 2 or not value.endswith("'"):
                diagnostics.append(Diagnostic("unterminated character literal", line))
            tokens.append((_LITERAL, value, line))
        elif kind == "ident":
            tokens.append((_IDENT, value, line))
        elif kind == "number":
            tokens.append((_LITERAL, value, line))
        else:
            tokens.append((_PUNCT, value, line))
        line += value.count("\n")
    return tokens


# --- parser --------------------------------------------------------------

_OPEN_TO_CLOSE = {"(": ")", "{": "}", "[": "]"}


class _Extraction:
    """Single-file parse state: token cursor plus output accumulators."""

    def __init__(self, unit: SourceUnit):
        self.unit = unit
        self.tokens = _lex(unit.text, unit.diagnostics)
        self.pos = 0
        self.package: str | None = None
        self.out: list[Identifier] = []

    # -- token helpers --

    def _peek(self, offset: int = 0) -> tuple[str, str, int] | None:
        index = self.pos + offset
        return self.tokens[index] if index < len(self.tokens) else None

    def _advance(self) -> tuple[str, str, int]:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def _diag(self, message: str, line: int) -> None:
        self.unit.diagnostics.append(Diagnostic(message, line))

    def _emit(self, kind: IdentifierKind, simple: str, scope: tuple[str, ...], line: int) -> None:
        if not IDENTIFIER_RE.fullmatch(simple):
            self._diag(f"skipping malformed identifier {simple!r}", line)
            return
        qualified = ".".join(scope + (simple,)) if scope else simple
        self.out.append(
            Identifier(kind, simple, qualified, self.unit.path, line, len(self.out))
        )

    def _skip_balanced(self, opener: str) -> None:
        """Skip past a balanced bracket group; cursor sits on the opener."""
        closer = _OPEN_TO_CLOSE[opener]
        _, _, open_line = self._advance()
        depth = 1
        while self.pos < len(self.tokens):
            kind, value, _ = self._advance()
            if kind != _PUNCT:
                continue
            if value == opener:
                depth += 1
            elif value == closer:
                depth -= 1
                if depth == 0:
                    return
        self._diag(f"unbalanced {opener!r}", open_line)

    def _skip_annotation(self) -> None:
        """Skip ``@Name``, ``@pkg.Name``, ``@Name(...)``; cursor on '@'."""
        self._advance()
        while True:
            token = self._peek()
            if token is None or token[0] != _IDENT:
                return
            self._advance()
            nxt = self._peek()
            if nxt and nxt[0] == _PUNCT and nxt[1] == ".":
                self._advance()
                continue
            break
        nxt = self._peek()
        if nxt and nxt[0] == _PUNCT and nxt[1] == "(":
            self._skip_balanced("(")

    def _skip_statement(self) -> None:
        """Recovery: drop tokens up to the next ';', balanced '{...}', or '}'."""
        while self.pos < len(self.tokens):
            kind, value, _ = self.tokens[self.pos]
            if kind == _PUNCT:
                if value == ";":
                    self._advance()
                    return
                if value == "{":
                    self._skip_balanced("{")
                    return
                if value == "}":
                    return
            self._advance()

    # -- grammar --

    def run(self) -> list[Identifier]:
        while self.pos < len(self.tokens):
            kind, value, line = self.tokens[self.pos]
            if kind == _IDENT:
                if value == "package":
                    self._parse_package()
                elif value == "import":
                    self._advance()
                    self._skip_statement()
                elif value in _TYPE_KEYWORDS or self._at_record():
                    self._parse_type(())
                elif value in _MODIFIERS:
                    self._advance()
                else:
                    self._diag(f"unexpected {value!r} at top level", line)
                    self._advance()
                    self._skip_statement()
            elif kind == _PUNCT and value == "@":
                if self._annotation_is_type_decl():
                    self._parse_type(())
                else:
                    self._skip_annotation()
            elif kind == _PUNCT and value == ";":
                self._advance()
            elif kind == _PUNCT and value == "}":
                self._diag("unmatched '}' at top level", line)
                self._advance()
            elif kind == _PUNCT and value == "{":
                self._diag("unexpected '{' at top level", line)
                self._skip_balanced("{")
            else:
                self._diag(f"unexpected {value!r} at top level", line)
                self._advance()
                self._skip_statement()
        return self.out

    def _at_record(self) -> bool:
        token = self._peek()
        if token is None or token[0] != _IDENT or token[1] != "record":
            return False
        name = self._peek(1)
        header = self._peek(2)
        return (
            name is not None
            and name[0] == _IDENT
            and header is not None
            and header[0] == _PUNCT
            and header[1] in ("(", "<")
        )

    def _annotation_is_type_decl(self) -> bool:
        nxt = self._peek(1)
        return nxt is not None and nxt[0] == _IDENT and nxt[1] == "interface"

    def _parse_package(self) -> None:
        _, _, line = self._advance()
        segments: list[str] = []
        while True:
            token = self._peek()
            if token is None:
                break
            kind, value, _ = token
            if kind == _IDENT:
                segments.append(value)
                self._advance()
            elif kind == _PUNCT and value == ".":
                self._advance()
            else:
                break
        self._skip_statement()
        if not segments:
            self._diag("package declaration without a name", line)
            return
        self.package = ".".join(segments)
        if not IDENTIFIER_RE.fullmatch(segments[-1]):
            self._diag(f"skipping malformed identifier {segments[-1]!r}", line)
            return
        self.out.append(
            Identifier(
                IdentifierKind.PACKAGE,
                segments[-1],
                self.package,
                self.unit.path,
                line,
                len(self.out),
            )
        )

    def _scope(self, type_stack: tuple[str, ...]) -> tuple[str, ...]:
        prefix = tuple(self.package.split(".")) if self.package else ()
        return prefix + type_stack

    def _parse_type(self, type_stack: tuple[str, ...]) -> None:
        """Parse a type declaration; cursor on its keyword (or '@')."""
        kind_token = self._advance()
        keyword = kind_token[1]
        if keyword == "@":  # @interface
            self._advance()
            keyword = "@interface"
        name_token = self._peek()
        if name_token is None or name_token[0] != _IDENT:
            self._diag("type declaration without a name", kind_token[2])
            self._skip_statement()
            return
        _, name, name_line = self._advance()
        self._emit(IdentifierKind.CLASS, name, self._scope(type_stack), name_line)

        # Skim the header (generics, extends/implements/permits, record
        # components) up to the body.
        angle = 0
        while self.pos < len(self.tokens):
            kind, value, _ = self.tokens[self.pos]
            if kind == _PUNCT:
                if value == "<":
                    angle += 1
                elif value == ">":
                    angle = max(0, angle - 1)
                elif value == "(" and angle == 0:
                    self._skip_balanced("(")
                    continue
                elif value == "{" and angle == 0:
                    self._parse_body(type_stack + (name,), is_enum=keyword == "enum")
                    return
                elif value == ";" and angle == 0:
                    self._advance()
                    return
                elif value == "}" and angle == 0:
                    return
            self._advance()
        self._diag(f"missing body for type {name!r}", name_line)

    def _parse_body(self, type_stack: tuple[str, ...], is_enum: bool) -> None:
        """Parse a type body; cursor on '{'."""
        _, _, open_line = self._advance()
        if is_enum and not self._parse_enum_constants(type_stack, open_line):
            return
        while self.pos < len(self.tokens):
            kind, value, line = self.tokens[self.pos]
            if kind == _PUNCT and value == "}":
                self._advance()
                return
            self._parse_member(type_stack)
        self._diag("unbalanced '{'", open_line)

    def _parse_enum_constants(self, type_stack: tuple[str, ...], open_line: int) -> bool:
        """Enum constant section; returns False if the body already ended."""
        while self.pos < len(self.tokens):
            kind, value, line = self.tokens[self.pos]
            if kind == _PUNCT and value == "@":
                self._skip_annotation()
                continue
            if kind == _PUNCT and value == ";":
                self._advance()
                return True
            if kind == _PUNCT and value == "}":
                self._advance()
                return False
            if kind == _PUNCT and value == ",":
                self._advance()
                continue
            if kind == _IDENT:
                self._advance()
                self._emit(IdentifierKind.ATTRIBUTE, value, self._scope(type_stack), line)
                nxt = self._peek()
                if nxt and nxt[0] == _PUNCT and nxt[1] == "(":
                    self._skip_balanced("(")
                    nxt = self._peek()
                if nxt and nxt[0] == _PUNCT and nxt[1] == "{":
                    # constant body: an anonymous subclass scoped by the
                    # constant's own name
                    self._parse_body(type_stack + (value,), is_enum=False)
                continue
            self._diag(f"unexpected {value!r} in enum constants", line)
            self._advance()
        self._diag("unbalanced '{'", open_line)
        return False

    def _parse_member(self, type_stack: tuple[str, ...]) -> None:
        """One member: nested type, initializer block, field(s), or method."""
        last_ident: str | None = None
        last_line = 0
        prev_punct = ""
        angle = 0
        while self.pos < len(self.tokens):
            kind, value, line = self.tokens[self.pos]
            if kind == _IDENT:
                if angle == 0 and prev_punct != "." and (
                    value in _TYPE_KEYWORDS or self._at_record()
                ):
                    self._parse_type(type_stack)
                    return
                if angle == 0:
                    last_ident, last_line = value, line
                self._advance()
                prev_punct = ""
                continue
            if kind == _LITERAL:
                self._advance()
                prev_punct = ""
                continue
            # punct
            if value == "@":
                if self._annotation_is_type_decl():
                    self._parse_type(type_stack)
                    return
                self._skip_annotation()
                prev_punct = ""
                continue
            if value == "<":
                angle += 1
            elif value == ">":
                angle = max(0, angle - 1)
            elif angle == 0:
                if value == "(":
                    if last_ident is None or last_ident in _KEYWORDS_NEVER_NAMES:
                        self._diag("stray '(' in type body", line)
                        self._skip_balanced("(")
                        self._skip_statement()
                        return
                    self._emit(IdentifierKind.METHOD, last_ident, self._scope(type_stack), last_line)
                    self._skip_balanced("(")
                    self._finish_method(line)
                    return
                if value == "=":
                    if last_ident is not None:
                        self._emit(
                            IdentifierKind.ATTRIBUTE, last_ident, self._scope(type_stack), last_line
                        )
                    self._advance()
                    self._finish_field_declarators(type_stack, skip_initializer=True)
                    return
                if value == ",":
                    if last_ident is not None:
                        self._emit(
                            IdentifierKind.ATTRIBUTE, last_ident, self._scope(type_stack), last_line
                        )
                    self._advance()
                    self._finish_field_declarators(type_stack, skip_initializer=False)
                    return
                if value == ";":
                    if last_ident is not None and last_ident not in _KEYWORDS_NEVER_NAMES:
                        self._emit(
                            IdentifierKind.ATTRIBUTE, last_ident, self._scope(type_stack), last_line
                        )
                    self._advance()
                    return
                if value == "{":
                    # static/instance initializer block (or recovery)
                    if last_ident is not None and last_ident not in _MODIFIERS:
                        self._diag(f"unexpected '{{' after {last_ident!r}", line)
                    self._skip_balanced("{")
                    return
                if value == "}":
                    if last_ident is not None:
                        self._diag("incomplete member before '}'", line)
                    return
            self._advance()
            prev_punct = value
        if last_ident is not None:
            self._diag("incomplete member at end of file", last_line)

    def _finish_method(self, params_line: int) -> None:
        """After the parameter list: throws clause, then body, ';', or default."""
        saw_default = False
        while self.pos < len(self.tokens):
            kind, value, _ = self.tokens[self.pos]
            if kind == _IDENT:
                saw_default = saw_default or value == "default"
                self._advance()
                continue
            if kind == _LITERAL:
                self._advance()
                continue
            if value == "@":
                self._skip_annotation()
                continue
            if value == "(":
                self._skip_balanced("(")
                continue
            if value == "[":
                self._skip_balanced("[")
                continue
            if value == ";":
                self._advance()
                return
            if value == "{":
                self._skip_balanced("{")
                if saw_default:
                    saw_default = False
                    continue
                return
            if value == "}":
                self._diag("method declaration ends abruptly", params_line)
                return
            self._advance()
        self._diag("method declaration ends at end of file", params_line)

    def _finish_field_declarators(self, type_stack: tuple[str, ...], skip_initializer: bool) -> None:
        """Remaining ``, next [= init]`` declarators up to ';'."""
        expect_name = not skip_initializer
        while self.pos < len(self.tokens):
            kind, value, line = self.tokens[self.pos]
            if kind == _IDENT and expect_name:
                self._emit(IdentifierKind.ATTRIBUTE, value, self._scope(type_stack), line)
                expect_name = False
                self._advance()
                continue
            if kind == _PUNCT:
                if value in "({[":
                    self._skip_balanced(value)
                    continue
                if value == ";":
                    self._advance()
                    return
                if value == ",":
                    expect_name = True
                    self._advance()
                    continue
                if value == "}":
                    self._diag("field declaration ends abruptly", line)
                    return
            self._advance()
        self._diag("field declaration ends at end of file", 0)


def extract_identifiers(unit: SourceUnit) -> list[Identifier]:
    """Extract all declared identifiers from one source unit, in source order.

    Parse trouble is recorded on ``unit.diagnostics``; extraction never
    raises for malformed source.
    """
    return _Extraction(unit).run()


# --- corpus assembly -----------------------------------------------------


def scan_tree(root: str | Path) -> list[SourceUnit]:
    """Collect every ``.java`` file under ``root``, sorted by path bytes.

    Raises :class:`CorpusError` if the root is missing or unreadable; an
    unreadable individual file becomes an empty unit with a diagnostic.
    """
    root_path = Path(root)
    if not root_path.is_dir():
        raise CorpusError(f"source root is not a readable directory: {root_path}")
    try:
        paths = [p for p in root_path.rglob("*.java") if p.is_file()]
    except OSError as exc:
        raise CorpusError(f"cannot scan {root_path}: {exc}") from exc
    paths.sort(key=lambda p: p.relative_to(root_path).as_posix().encode("utf-8"))
    units = []
    for path in paths:
        rel = path.relative_to(root_path).as_posix()
        try:
            raw = path.read_bytes()
        except OSError as exc:
            units.append(SourceUnit(rel, "", [Diagnostic(f"unreadable file: {exc}", 0)]))
            continue
        text = raw.decode("utf-8", errors="replace").lstrip("\ufeff")
        unit = SourceUnit(rel, text)
        if "\ufffd" in text:
            unit.diagnostics.append(Diagnostic("invalid UTF-8 bytes were replaced", 0))
        units.append(unit)
    return units


def _extract_for_merge(unit: SourceUnit) -> tuple[list[Identifier], list[Diagnostic]]:
    return extract_identifiers(unit), unit.diagnostics


def parallel_enabled() -> bool:
    return os.environ.get(PARALLEL_ENV_VAR, "") != "1"


def extract_corpus(units: list[SourceUnit], parallel: bool | None = None) -> list[Identifier]:
    """Extract identifiers from all units and assemble the corpus list.

    Units are processed independently (optionally across processes) and
    merged in path order, so the result does not depend on scheduling.
    Package declarations are deduplicated corpus-wide by qualified name,
    keeping the first occurrence; surviving identifiers keep their original
    per-file ordinals.
    """
    if parallel is None:
        parallel = parallel_enabled() and len(units) >= _PARALLEL_MIN_FILES
    results: list[list[Identifier]] | None = None
    if parallel:
        try:
            with futures.ProcessPoolExecutor() as pool:
                chunk = max(1, len(units) // (4 * (os.cpu_count() or 1)))
                merged = list(pool.map(_extract_for_merge, units, chunksize=chunk))
            results = []
            for unit, (ids, diags) in zip(units, merged):
                unit.diagnostics[:] = diags
                results.append(ids)
        except OSError as exc:  # e.g. sandboxes without working semaphores
            log.warning("parallel extraction unavailable (%s); running sequentially", exc)
            results = None
    if results is None:
        results = [extract_identifiers(unit) for unit in units]

    corpus: list[Identifier] = []
    seen_packages: set[str] = set()
    for ids in results:
        for identifier in ids:
            if identifier.kind is IdentifierKind.PACKAGE:
                if identifier.qualified_name in seen_packages:
                    continue
                seen_packages.add(identifier.qualified_name)
            corpus.append(identifier)
    return corpus
