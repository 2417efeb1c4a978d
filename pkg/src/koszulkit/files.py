"""Text file formats: ring descriptors with quotient/ideal sections, graph
files, and integer matrix files.

Ring descriptor::

    field QQ            # or: field GF 3
    vars a b c
    order degrevlex     # or: order lex a > c > b   (default: declaration order)

followed by optional sections, each a header line ending in ':' and one
polynomial per line::

    quotient:
    a^2
    b^2 - a*c
    ideal:
    a + b
"""

from __future__ import annotations

from .gtheory import Graph
from .rings import DegRevLex, GF, Lex, PolyRing, QQ


class FileFormatError(ValueError):
    pass


def _content_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_ring_descriptor(text):
    """Parse a ring descriptor plus its sections.

    Returns (ring, sections) where sections maps a section name to the list
    of polynomials in it ('ideal' collects every ideal: section, in order,
    as a list of lists).
    """
    field = None
    names = None
    order_spec = None
    body = []
    for lineno, line in _content_lines(text):
        words = line.split()
        head = words[0].lower()
        if head == "field" and field is None and not body:
            if words[1:] == ["QQ"]:
                field = QQ
            elif len(words) == 3 and words[1] == "GF":
                field = GF(int(words[2]))
            else:
                raise FileFormatError(f"line {lineno}: bad field declaration {line!r}")
        elif head == "vars" and names is None and not body:
            names = words[1:]
            if not names:
                raise FileFormatError(f"line {lineno}: empty variable list")
        elif head == "order" and order_spec is None and not body:
            order_spec = (lineno, words[1:])
        else:
            body.append((lineno, line))
    if field is None:
        raise FileFormatError("missing 'field' declaration")
    if names is None:
        raise FileFormatError("missing 'vars' declaration")

    order = None
    if order_spec is not None:
        lineno, words = order_spec
        if not words:
            raise FileFormatError(f"line {lineno}: empty order declaration")
        kind = words[0].lower()
        rest = [w for w in words[1:] if w != ">"]
        if rest:
            unknown = [w for w in rest if w not in names]
            if unknown or sorted(rest) != sorted(names):
                raise FileFormatError(
                    f"line {lineno}: order must list every variable exactly once"
                )
            perm = [names.index(w) for w in rest]
        else:
            perm = list(range(len(names)))
        if kind == "lex":
            order = Lex(len(names), perm)
        elif kind == "degrevlex":
            order = DegRevLex(len(names), perm)
        else:
            raise FileFormatError(f"line {lineno}: unknown order kind {kind!r}")
    ring = PolyRing(field, names, order)

    sections = {"quotient": [], "ideal": []}
    current = None
    for lineno, line in body:
        if line.endswith(":") and line[:-1].lower() in sections:
            name = line[:-1].lower()
            if name == "ideal":
                sections["ideal"].append([])
                current = sections["ideal"][-1]
            else:
                current = sections["quotient"]
            continue
        if current is None:
            raise FileFormatError(f"line {lineno}: polynomial outside any section")
        try:
            current.append(ring.parse(line))
        except Exception as exc:
            raise FileFormatError(f"line {lineno}: {exc}") from exc
    return ring, sections


def load_quotient_ring(text):
    """Quotient file -> (QuotientRing, list of RIdeal generator lists)."""
    from .quotient import QuotientRing

    ring, sections = parse_ring_descriptor(text)
    R = QuotientRing(ring, sections["quotient"])
    return R, sections["ideal"]


def load_ideal(text):
    """Ideal file -> (ring, generators of the first ideal section)."""
    ring, sections = parse_ring_descriptor(text)
    if not sections["ideal"]:
        raise FileFormatError("missing 'ideal:' section")
    return ring, sections["ideal"][0]


def load_forms(text, ring):
    """One polynomial per line (comments allowed)."""
    return [ring.parse(line) for _, line in _content_lines(text)]


def load_graph(text):
    """Graph file: first line 'n <count>', then one 'i j' edge per line."""
    lines = list(_content_lines(text))
    if not lines or lines[0][1].split()[0].lower() != "n":
        raise FileFormatError("graph file must start with 'n <count>'")
    n = int(lines[0][1].split()[1])
    edges = []
    for lineno, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise FileFormatError(f"line {lineno}: expected 'i j'")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph(n, edges)


def load_matrix(text):
    """Whitespace-separated integers, one row per line."""
    rows = []
    for lineno, line in _content_lines(text):
        try:
            rows.append([int(w) for w in line.split()])
        except ValueError as exc:
            raise FileFormatError(f"line {lineno}: {exc}") from exc
    if not rows:
        raise FileFormatError("empty matrix")
    if len({len(r) for r in rows}) != 1:
        raise FileFormatError("ragged matrix")
    return rows
