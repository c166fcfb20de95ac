"""Plain-text formats for arrangements, tope graphs and cycle certificates.

Arrangement::

    dim 3
    field rational            # or: field quadratic 5
    normal 1 0 0
    normal 0 1 -1/2           # quadratic entries look like 1/2+1/3*sqrt

Tope graph::

    topes <C> edges <E> m <M>
    <C tope lines>
    <E lines: index-a index-b type>      (indices refer to the tope lines, 0-based)

Certificate::

    cycle m <M> len <L> start <tope>
    <L flip indices separated by whitespace>
"""

from __future__ import annotations

from pathlib import Path

from .arrangement import Arrangement
from .errors import DuplicateHyperplane, ParseError, UnsupportedField
from .scalar import format_scalar, is_squarefree, parse_scalar
from .topes import HamiltonCertificate, TopeGraph


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def _int(tok: str, no: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {tok!r}", no) from None


# ------------------------------------------------------------------ arrangements


def format_arrangement(A: Arrangement) -> str:
    out = [f"dim {A.dim}"]
    out.append("field rational" if A.field is None else f"field quadratic {A.field}")
    for v in A.normals:
        out.append("normal " + " ".join(format_scalar(x) for x in v))
    return "\n".join(out) + "\n"


def parse_arrangement_text(text: str) -> Arrangement:
    dim = None
    d = None
    field_seen = False
    normals = []
    lines = []
    for no, line in _lines(text):
        tok = line.split()
        head = tok[0]
        if head == "dim":
            if dim is not None or len(tok) != 2:
                raise ParseError("expected a single 'dim <n>' line", no)
            dim = _int(tok[1], no, "dim")
            if dim < 1:
                raise ParseError("dim must be positive", no)
        elif head == "field":
            if field_seen or normals:
                raise ParseError("'field' must appear once, before the normals", no)
            field_seen = True
            if tok[1:] == ["rational"]:
                d = None
            elif len(tok) == 3 and tok[1] == "quadratic":
                d = _int(tok[2], no, "field parameter")
                if not is_squarefree(d):
                    raise UnsupportedField(f"line {no}: sqrt({d}) needs a square-free d > 1")
            else:
                raise ParseError(f"unknown field {' '.join(tok[1:])!r}", no)
        elif head == "normal":
            if dim is None:
                raise ParseError("'normal' before 'dim'", no)
            if len(tok) != dim + 1:
                raise ParseError(f"normal has {len(tok) - 1} entries, expected {dim}", no)
            try:
                vec = tuple(parse_scalar(x, d) for x in tok[1:])
            except ParseError as exc:
                raise ParseError(str(exc), no) from None
            except UnsupportedField as exc:
                raise UnsupportedField(f"line {no}: {exc}") from None
            if not any(vec):
                raise ParseError("zero normal", no)
            normals.append(vec)
            lines.append(no)
        else:
            raise ParseError(f"unknown directive {head!r}", no)
    if dim is None:
        raise ParseError("missing 'dim' line")
    if not normals:
        raise ParseError("no normals")
    try:
        return Arrangement(dim, tuple(normals), d)
    except DuplicateHyperplane as exc:
        raise DuplicateHyperplane(f"{exc} (normals on lines {', '.join(map(str, lines))})") from None


def parse_arrangement(path) -> Arrangement:
    return parse_arrangement_text(Path(path).read_text(encoding="utf-8"))


def write_arrangement(A: Arrangement, path) -> None:
    Path(path).write_text(format_arrangement(A), encoding="utf-8", newline="\n")


# ------------------------------------------------------------------ tope graphs


def format_graph(G: TopeGraph) -> str:
    index = {t: i for i, t in enumerate(G.topes)}
    out = [f"topes {len(G.topes)} edges {len(G.edges)} m {G.m}"]
    out.extend(G.topes)
    out.extend(f"{index[a]} {index[b]} {h}" for a, b, h in G.edges)
    return "\n".join(out) + "\n"


def parse_graph_text(text: str) -> TopeGraph:
    it = _lines(text)
    try:
        no, header = next(it)
    except StopIteration:
        raise ParseError("empty graph file") from None
    tok = header.split()
    if len(tok) != 6 or tok[0] != "topes" or tok[2] != "edges" or tok[4] != "m":
        raise ParseError("expected 'topes <C> edges <E> m <M>'", no)
    nt, ne, m = (_int(tok[k], no, tok[k - 1]) for k in (1, 3, 5))
    topes = []
    for _ in range(nt):
        try:
            no, line = next(it)
        except StopIteration:
            raise ParseError(f"expected {nt} topes") from None
        if len(line) != m or set(line) - {"+", "-"}:
            raise ParseError(f"bad tope {line!r}", no)
        topes.append(line)
    edges = []
    for _ in range(ne):
        try:
            no, line = next(it)
        except StopIteration:
            raise ParseError(f"expected {ne} edges") from None
        tok = line.split()
        if len(tok) != 3:
            raise ParseError("edge lines are '<a> <b> <type>'", no)
        a, b, h = (_int(x, no, "edge field") for x in tok)
        if not (0 <= a < nt and 0 <= b < nt and 0 <= h < m):
            raise ParseError("edge index out of range", no)
        edges.append((topes[a], topes[b], h))
    extra = next(it, None)
    if extra is not None:
        raise ParseError("trailing content", extra[0])
    if len(set(topes)) != nt:
        raise ParseError("repeated tope")
    return TopeGraph.from_parts(m, topes, edges)


def parse_graph(path) -> TopeGraph:
    return parse_graph_text(Path(path).read_text(encoding="utf-8"))


def write_graph(G: TopeGraph, path) -> None:
    Path(path).write_text(format_graph(G), encoding="utf-8", newline="\n")


# ------------------------------------------------------------------ certificates


def format_certificate(c: HamiltonCertificate) -> str:
    head = f"cycle m {c.m} len {len(c.flips)} start {c.start}"
    return head + "\n" + " ".join(map(str, c.flips)) + "\n"


def parse_certificate_text(text: str) -> HamiltonCertificate:
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty certificate file")
    no, header = lines[0]
    tok = header.split()
    if len(tok) != 7 or tok[0] != "cycle" or tok[1] != "m" or tok[3] != "len" or tok[5] != "start":
        raise ParseError("expected 'cycle m <M> len <L> start <tope>'", no)
    m = _int(tok[2], no, "m")
    length = _int(tok[4], no, "len")
    start = tok[6]
    if len(start) != m or set(start) - {"+", "-"}:
        raise ParseError(f"bad start tope {start!r}", no)
    flips = []
    for no, line in lines[1:]:
        flips.extend(_int(x, no, "flip") for x in line.split())
    if len(flips) != length:
        raise ParseError(f"header says {length} flips, found {len(flips)}")
    return HamiltonCertificate(start, tuple(flips))


def parse_certificate(path) -> HamiltonCertificate:
    return parse_certificate_text(Path(path).read_text(encoding="utf-8"))


def write_certificate(c: HamiltonCertificate, path) -> None:
    Path(path).write_text(format_certificate(c), encoding="utf-8", newline="\n")


def sniff(path) -> str:
    """'arrangement' or 'graph', from the first directive of the file."""
    for _, line in _lines(Path(path).read_text(encoding="utf-8")):
        head = line.split()[0]
        if head in ("dim", "field", "normal"):
            return "arrangement"
        if head == "topes":
            return "graph"
        break
    raise ParseError(f"{path}: neither an arrangement nor a tope graph")
