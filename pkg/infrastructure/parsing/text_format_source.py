"""
Line-oriented reader for algebra files.

    field Q                      or  field F <p>
    name <text>
    nakayama cyclic|linear c_1 ... c_n
    quiver
    vertex <name>
    arrow <name> <source> <target>
    relations
    b*a - 2*alpha*gamma*beta     one relation per line, right-to-left composition
    nilpotency <N>
    module <name>
    dim <vertex> <n>
    map <arrow> <row-major entries>
    end
    generator <reference> ...

Everything after '#' is a comment.
"""
import re
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from core.exceptions import InputError, ParseError
from domain.models.algebra import AlgebraData, Arrow, FieldSpec, PathWord, Quiver, RelationElement
from domain.models.document import AlgebraDocument
from domain.models.module import FdModule
from domain.repositories.algebra_source import AlgebraSource
from infrastructure.algebra import modcat, qalg
from infrastructure.logging.logger import get_logger

logger = get_logger(__name__)

KEYWORDS = {
    "field", "name", "nakayama", "quiver", "vertex", "arrow", "relations",
    "nilpotency", "module", "dim", "map", "end", "generator",
}
_EXPRESSION = re.compile(r"(\s*[+-]?\s*[^+\-\s][^+-]*)+")
_TERM = re.compile(r"\s*([+-]?)\s*([^+-]+)")
_NUMBER = re.compile(r"^\d+(/\d+)?$")
_BASIC_REFERENCE = re.compile(r"^([PSI])_(\w+)$")
_NAKAYAMA_REFERENCE = re.compile(r"^(?:N_(\w+)_(\d+)|S_(\w+)\^\[(\d+)\])$")


class _ModuleBlock:
    def __init__(self, name: str, line_number: int):
        self.name = name
        self.line_number = line_number
        self.dims: Dict[str, int] = {}
        self.entries: Dict[str, List[str]] = {}


class _Draft:
    """Everything collected from the file before the algebra is built."""

    def __init__(self):
        self.field: Optional[FieldSpec] = None
        self.name: Optional[str] = None
        self.nakayama: Optional[Tuple[bool, List[int], int]] = None
        self.vertices: List[str] = []
        self.arrows: List[Arrow] = []
        self.relations: List[Tuple[int, str]] = []
        self.nilpotency: Optional[int] = None
        self.modules: List[_ModuleBlock] = []
        self.generator: List[str] = []
        self.generator_line: Optional[int] = None


class TextFormatAlgebraSource(AlgebraSource):
    """
    Reads the text format above. Errors carry the file name and line number.
    """

    def __init__(self, default_field: Optional[FieldSpec] = None):
        self.default_field = default_field or FieldSpec.rationals()

    def load(self, path: Union[str, Path], field: Optional[FieldSpec] = None) -> AlgebraDocument:
        location = Path(path)
        if not location.is_file():
            raise InputError(f"Algebra file not found: {location}")
        logger.info(f"Loading algebra file {location}")
        return self.parse(location.read_text(encoding="utf-8"), source=str(location), field=field)

    def parse(self, text: str, source: str = "<string>", field: Optional[FieldSpec] = None) -> AlgebraDocument:
        draft = self._read(text, source)
        chosen = field or draft.field or self.default_field
        algebra = self._build_algebra(draft, chosen, source)
        modules: Dict[str, FdModule] = {}
        for block in draft.modules:
            unknown = sorted(set(block.dims) - set(algebra.vertices))
            if unknown:
                raise ParseError(f"Module '{block.name}' uses unknown vertices {unknown}", block.line_number, source)
            try:
                modules[block.name] = modcat.make_module(algebra, block.dims, block.entries, label=block.name)
            except ValueError as e:
                raise ParseError(f"Module '{block.name}': {e}", block.line_number, source)
        document = AlgebraDocument(
            source=source, algebra=algebra, modules=modules, generator=tuple(draft.generator)
        )
        for reference in draft.generator:
            try:
                self.resolve(document, reference)
            except ValueError as e:
                raise ParseError(str(e), draft.generator_line, source)
        logger.debug(f"{source}: {algebra.name} with modules {sorted(modules)}")
        return document

    def resolve(self, document: AlgebraDocument, reference: str) -> FdModule:
        ref = reference.strip()
        if ref in document.modules:
            return document.modules[ref]
        algebra = document.algebra
        if ref == "A":
            return modcat.regular_module(algebra)
        match = _BASIC_REFERENCE.match(ref)
        if match:
            kind, vertex = match.groups()
            if vertex not in algebra.vertices:
                raise InputError(f"Unknown vertex '{vertex}' in module reference '{ref}'")
            builder = {"P": modcat.projective, "S": modcat.simple, "I": modcat.injective}[kind]
            return builder(algebra, vertex)
        match = _NAKAYAMA_REFERENCE.match(ref)
        if match:
            vertex = match.group(1) or match.group(3)
            length = int(match.group(2) or match.group(4))
            if vertex not in algebra.vertices:
                raise InputError(f"Unknown vertex '{vertex}' in module reference '{ref}'")
            return modcat.nakayama_indecomposable(algebra, vertex, length)
        raise InputError(f"Unknown module reference '{reference}'")

    def _read(self, text: str, source: str) -> _Draft:
        draft = _Draft()
        section: Optional[str] = None
        block: Optional[_ModuleBlock] = None
        for line_number, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            tokens = line.split()
            keyword = tokens[0].lower()

            if block is not None:
                if keyword == "end":
                    draft.modules.append(block)
                    block = None
                elif keyword == "dim":
                    self._expect(tokens, 3, line_number, source)
                    block.dims[tokens[1]] = self._integer(tokens[2], line_number, source)
                elif keyword == "map":
                    if len(tokens) < 2:
                        raise ParseError("'map' needs an arrow name", line_number, source)
                    block.entries[tokens[1]] = tokens[2:]
                else:
                    raise ParseError(f"Unexpected '{tokens[0]}' inside module '{block.name}'", line_number, source)
                continue

            if keyword not in KEYWORDS:
                if section == "relations":
                    draft.relations.append((line_number, line))
                    continue
                raise ParseError(f"Unknown directive '{tokens[0]}'", line_number, source)

            section = None
            if keyword == "field":
                try:
                    draft.field = FieldSpec.parse(" ".join(tokens[1:]))
                except ValueError as e:
                    raise ParseError(str(e), line_number, source)
            elif keyword == "name":
                self._expect(tokens, 2, line_number, source, at_least=True)
                draft.name = " ".join(tokens[1:])
            elif keyword == "nakayama":
                if len(tokens) < 3 or tokens[1].lower() not in ("cyclic", "linear"):
                    raise ParseError("Use 'nakayama cyclic|linear c_1 ... c_n'", line_number, source)
                sequence = [self._integer(t, line_number, source) for t in tokens[2:]]
                draft.nakayama = (tokens[1].lower() == "cyclic", sequence, line_number)
            elif keyword == "quiver":
                self._expect(tokens, 1, line_number, source)
            elif keyword == "vertex":
                self._expect(tokens, 2, line_number, source)
                if tokens[1] in draft.vertices:
                    raise ParseError(f"Vertex '{tokens[1]}' declared twice", line_number, source)
                draft.vertices.append(tokens[1])
            elif keyword == "arrow":
                self._expect(tokens, 4, line_number, source)
                name, start, end = tokens[1:]
                for vertex in (start, end):
                    if vertex not in draft.vertices:
                        raise ParseError(f"Arrow '{name}' uses undeclared vertex '{vertex}'", line_number, source)
                if any(a.name == name for a in draft.arrows):
                    raise ParseError(f"Arrow '{name}' declared twice", line_number, source)
                if name.lower() in KEYWORDS:
                    raise ParseError(f"'{name}' is reserved and cannot name an arrow", line_number, source)
                draft.arrows.append(Arrow(name=name, source=start, target=end))
            elif keyword == "relations":
                self._expect(tokens, 1, line_number, source)
                section = "relations"
            elif keyword == "nilpotency":
                self._expect(tokens, 2, line_number, source)
                draft.nilpotency = self._integer(tokens[1], line_number, source)
            elif keyword == "module":
                self._expect(tokens, 2, line_number, source)
                if any(m.name == tokens[1] for m in draft.modules):
                    raise ParseError(f"Module '{tokens[1]}' declared twice", line_number, source)
                block = _ModuleBlock(tokens[1], line_number)
            elif keyword == "generator":
                self._expect(tokens, 2, line_number, source, at_least=True)
                draft.generator.extend(tokens[1:])
                draft.generator_line = line_number
            else:
                raise ParseError(f"'{tokens[0]}' outside a module block", line_number, source)

        if block is not None:
            raise ParseError(f"Module '{block.name}' is missing 'end'", block.line_number, source)
        return draft

    def _build_algebra(self, draft: _Draft, field: FieldSpec, source: str) -> AlgebraData:
        if draft.nakayama is not None:
            cyclic, sequence, line_number = draft.nakayama
            if draft.vertices or draft.relations:
                raise ParseError("'nakayama' cannot be combined with a quiver or relations", line_number, source)
            try:
                return qalg.nakayama(sequence, field, cyclic=cyclic, name=draft.name)
            except ValueError as e:
                raise ParseError(str(e), line_number, source)

        if not draft.vertices:
            raise ParseError("No vertices declared", None, source)
        quiver = Quiver(vertices=tuple(draft.vertices), arrows=tuple(draft.arrows))
        relations = [self._relation(quiver, text, line_number, source) for line_number, text in draft.relations]
        name = draft.name or "A"
        try:
            if draft.nilpotency is None:
                if relations:
                    raise ParseError("Relations need a 'nilpotency' bound", draft.relations[0][0], source)
                return qalg.path_algebra(quiver, field, name=name)
            return qalg.build_algebra(quiver, relations, draft.nilpotency, field, name=name)
        except ParseError:
            raise
        except ValueError as e:
            raise ParseError(str(e), None, source)

    def _relation(self, quiver: Quiver, text: str, line_number: int, source: str) -> RelationElement:
        if not _EXPRESSION.fullmatch(text):
            raise ParseError(f"Malformed relation '{text}'", line_number, source)
        collected: Dict[PathWord, Fraction] = {}
        for sign, body in _TERM.findall(text):
            factors = [f.strip() for f in body.split("*")]
            if any(not f for f in factors):
                raise ParseError(f"Empty factor in '{text}'", line_number, source)
            coefficient = Fraction(-1 if sign == "-" else 1)
            while factors and _NUMBER.match(factors[0]):
                coefficient *= Fraction(factors.pop(0))
            if not factors:
                raise ParseError(f"Constant term in relation '{text}'", line_number, source)
            try:
                path = PathWord.from_arrows(quiver, tuple(factors))
            except ValueError as e:
                raise ParseError(str(e), line_number, source)
            collected[path] = collected.get(path, Fraction(0)) + coefficient
        terms = tuple((c, p) for p, c in collected.items() if c != 0)
        try:
            return RelationElement(terms=terms)
        except ValueError as e:
            raise ParseError(f"Relation '{text}': {e}", line_number, source)

    @staticmethod
    def _expect(tokens: List[str], count: int, line_number: int, source: str, at_least: bool = False) -> None:
        if (len(tokens) < count) if at_least else (len(tokens) != count):
            raise ParseError(f"'{tokens[0]}' takes {count - 1} argument(s)", line_number, source)

    @staticmethod
    def _integer(token: str, line_number: int, source: str) -> int:
        try:
            return int(token)
        except ValueError:
            raise ParseError(f"Expected an integer, got '{token}'", line_number, source)
