"""Reading and writing the ``.dcx`` complex document format.

A document is line based::

    DCX 1
    M generator grid
    V a
    E a b
    C a,b,c
    U3 a,b,c,d

Records appear in the order header, metadata, vertices, edges, cells,
3-cells. Blank lines and lines starting with ``#`` are ignored. A document
without ``C`` records asks for the default surface-cell construction.
"""

__all__ = ["ComplexDocument"]

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .complex import CellComplex, default_u2
from .const import (
    COMMENT_PREFIX,
    DCX_FORMAT_VERSION,
    DCX_HEADER,
    LIST_SEPARATOR,
    RECORD_CELL,
    RECORD_EDGE,
    RECORD_META,
    RECORD_U3,
    RECORD_VERTEX,
)
from .exceptions import DocumentError, InputError
from .graph import Graph, validate_vertex_id
from .models import parse_vertex_list

_LOGGER = logging.getLogger(__name__)
_LOGGER.addHandler(logging.NullHandler())

_SECTION_ORDER = {
    RECORD_META: 0,
    RECORD_VERTEX: 1,
    RECORD_EDGE: 2,
    RECORD_CELL: 3,
    RECORD_U3: 4,
}


def _skip_or_raise(strict: bool, message: str, line: int) -> None:
    """Raise in strict mode, otherwise warn and let the caller skip the record.

    Raises:
        DocumentError: If strict is True.
    """
    if strict:
        raise DocumentError(message, line)
    _LOGGER.warning("Line %d: %s; skipping", line, message)


@dataclass(frozen=True)
class ComplexDocument:
    """Parsed content of a ``.dcx`` document."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    cells: tuple[tuple[str, ...], ...] | None = None
    u3: tuple[tuple[str, ...], ...] | None = None
    metadata: tuple[tuple[str, str], ...] = ()

    def __post_init__(self) -> None:
        """Treat empty cell sections as absent."""
        if self.cells is not None and not self.cells:
            object.__setattr__(self, "cells", None)
        if self.u3 is not None and not self.u3:
            object.__setattr__(self, "u3", None)

    @classmethod
    def parse(cls, text: str, *, strict: bool = True) -> "ComplexDocument":
        """Parse document text.

        Args:
            text: Document content.
            strict: Raise on duplicate declarations instead of skipping them
                with a warning.

        Raises:
            DocumentError: On malformed records, with the line number.
        """
        version_seen = False
        section = -1
        metadata: list[tuple[str, str]] = []
        vertices: list[str] = []
        declared: set[str] = set()
        edges: list[tuple[str, str]] = []
        edge_keys: set[frozenset[str]] = set()
        cells: list[tuple[str, ...]] = []
        u3: list[tuple[str, ...]] = []

        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith(COMMENT_PREFIX):
                continue
            parts = line.split()
            tag = parts[0]
            if not version_seen:
                if tag != DCX_HEADER or len(parts) != 2:
                    raise DocumentError(
                        f"expected '{DCX_HEADER} <version>' header", number
                    )
                if parts[1] != str(DCX_FORMAT_VERSION):
                    raise DocumentError(
                        f"unsupported format version {parts[1]!r}", number
                    )
                version_seen = True
                continue
            if tag not in _SECTION_ORDER:
                raise DocumentError(f"unknown record {tag!r}", number)
            if _SECTION_ORDER[tag] < section:
                raise DocumentError(f"{tag} record out of section order", number)
            section = _SECTION_ORDER[tag]

            if tag == RECORD_META:
                fields = line.split(None, 2)
                if len(fields) != 3:
                    raise DocumentError("metadata needs a key and a value", number)
                metadata.append((fields[1], fields[2]))
            elif tag == RECORD_VERTEX:
                if len(parts) != 2:
                    raise DocumentError("vertex record needs exactly one id", number)
                try:
                    validate_vertex_id(parts[1])
                except InputError as err:
                    raise DocumentError(str(err), number) from err
                if parts[1] in declared:
                    _skip_or_raise(strict, f"duplicate vertex {parts[1]!r}", number)
                    continue
                declared.add(parts[1])
                vertices.append(parts[1])
            elif tag == RECORD_EDGE:
                if len(parts) != 3:
                    raise DocumentError("edge record needs exactly two ids", number)
                u, v = parts[1], parts[2]
                for end in (u, v):
                    if end not in declared:
                        raise DocumentError(
                            f"edge uses undeclared vertex {end!r}", number
                        )
                if u == v:
                    raise DocumentError(f"self-loop at {u!r}", number)
                if frozenset((u, v)) in edge_keys:
                    _skip_or_raise(strict, f"duplicate edge {u} {v}", number)
                    continue
                edge_keys.add(frozenset((u, v)))
                edges.append((u, v))
            else:
                if len(parts) != 2:
                    raise DocumentError(
                        f"{tag} record needs one comma-separated vertex list", number
                    )
                try:
                    names = parse_vertex_list(parts[1])
                except InputError as err:
                    raise DocumentError(str(err), number) from err
                unknown = [n for n in names if n not in declared]
                if unknown:
                    raise DocumentError(f"undeclared vertex {unknown[0]!r}", number)
                target = cells if tag == RECORD_CELL else u3
                if names in target:
                    _skip_or_raise(strict, f"duplicate {tag} record", number)
                    continue
                target.append(names)

        if not version_seen:
            raise DocumentError(f"missing '{DCX_HEADER}' header")
        return cls(
            vertices=tuple(vertices),
            edges=tuple(edges),
            cells=tuple(cells) or None,
            u3=tuple(u3) or None,
            metadata=tuple(metadata),
        )

    @classmethod
    def load(cls, path: str | Path, *, strict: bool = True) -> "ComplexDocument":
        """Read and parse a document file.

        Raises:
            InputError: If the file cannot be read.
            DocumentError: If the content is malformed.
        """
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as err:
            raise InputError(f"Cannot read {path}: {err}") from err
        return cls.parse(text, strict=strict)

    @classmethod
    def from_complex(
        cls, cx: CellComplex, metadata: tuple[tuple[str, str], ...] = ()
    ) -> "ComplexDocument":
        """Document describing a complex, cells in travel order."""
        return cls(
            vertices=cx.graph.vertices,
            edges=cx.graph.edges,
            cells=tuple(cell.vertices for cell in cx.cells),
            u3=tuple(cx.graph.sort_vertices(s) for s in cx.u3) if cx.u3 else None,
            metadata=metadata,
        )

    def to_text(self) -> str:
        """Serialize in canonical record order."""
        lines = [f"{DCX_HEADER} {DCX_FORMAT_VERSION}"]
        lines.extend(f"{RECORD_META} {key} {value}" for key, value in self.metadata)
        lines.extend(f"{RECORD_VERTEX} {v}" for v in self.vertices)
        lines.extend(f"{RECORD_EDGE} {u} {v}" for u, v in self.edges)
        for cell in self.cells or ():
            lines.append(f"{RECORD_CELL} {LIST_SEPARATOR.join(cell)}")
        for members in self.u3 or ():
            lines.append(f"{RECORD_U3} {LIST_SEPARATOR.join(members)}")
        return "\n".join(lines) + "\n"

    def save(self, path: str | Path) -> None:
        """Write the document to a file."""
        Path(path).write_text(self.to_text(), encoding="utf-8")

    def build_graph(self) -> Graph:
        """Build the ambient graph.

        Raises:
            InputError: If the graph is not simple and connected.
        """
        return Graph(self.vertices, self.edges)

    def build(
        self, *, strict_u3: bool = True, trust_minimal: bool = False
    ) -> CellComplex:
        """Build the complex, using the default cells when none are listed.

        Raises:
            InputError: If the graph or a cell is malformed.
            ComplexError: If the cells or 3-cells break a rule.
        """
        graph = self.build_graph()
        if self.cells is None:
            cells = default_u2(graph)
        else:
            cells = tuple(graph.cycle(cell) for cell in self.cells)
        return CellComplex(
            graph,
            cells,
            self.u3,
            strict_u3=strict_u3,
            trust_minimal=trust_minimal,
        )

    def metadata_value(self, key: str) -> str | None:
        """First metadata value stored under a key."""
        return next((value for k, value in self.metadata if k == key), None)

    def to_dict(self) -> dict[str, Any]:
        """Return a summary of the document."""
        return {
            "vertices": len(self.vertices),
            "edges": len(self.edges),
            "cells": len(self.cells) if self.cells is not None else None,
            "u3": len(self.u3) if self.u3 is not None else None,
            "metadata": dict(self.metadata),
        }
