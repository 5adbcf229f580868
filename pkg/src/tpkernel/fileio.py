"""Text formats: graph files, edit lists, reduction traces, manifests.

Graph files are DIMACS-like: a header ``p tp <n> <m>``, then exactly m
lines ``e <u> <v>`` with 1-based endpoints; ``#`` comments and blank lines
may appear anywhere.  Parsing renumbers vertices to 0-based internally;
serialization is canonical (ascending vertices renumbered to 1..n, edges
in ascending lexicographic order) and records the original name of any
renumbered vertex in a comment.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Optional

from .combs import Comb
from .graph import EditSet, Edge, Graph, norm_edge
from .rules import Instance, ReductionStep, ReductionTrace, VARIANTS


class ParseError(ValueError):
    def __init__(self, line_no: int, message: str):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


def _content_lines(text: str):
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield i, line


def parse_graph(text: str) -> Graph:
    """Parse a graph file; vertices come out 0-based (input id minus one)."""
    lines = _content_lines(text)
    try:
        line_no, header = next(lines)
    except StopIteration:
        raise ParseError(1, "missing header line 'p tp <n> <m>'") from None
    parts = header.split()
    if len(parts) != 4 or parts[0] != "p" or parts[1] != "tp":
        raise ParseError(line_no, f"bad header {header!r}, expected 'p tp <n> <m>'")
    try:
        n, m = int(parts[2]), int(parts[3])
    except ValueError:
        raise ParseError(line_no, "header vertex/edge counts must be integers") from None
    if n < 0 or m < 0:
        raise ParseError(line_no, "header vertex/edge counts must be non-negative")
    edges: list[Edge] = []
    seen: set[Edge] = set()
    last_line = line_no
    for line_no, line in lines:
        last_line = line_no
        parts = line.split()
        if parts[0] != "e":
            raise ParseError(line_no, f"unexpected line {line!r}, expected 'e <u> <v>'")
        if len(parts) != 3:
            raise ParseError(line_no, "edge lines need exactly two endpoints")
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise ParseError(line_no, "edge endpoints must be integers") from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(line_no, f"endpoint out of range 1..{n}")
        if u == v:
            raise ParseError(line_no, f"self-loop on vertex {u}")
        pair = norm_edge(u - 1, v - 1)
        if pair in seen:
            raise ParseError(line_no, f"duplicate edge {u} {v}")
        seen.add(pair)
        edges.append(pair)
        if len(edges) > m:
            raise ParseError(line_no, f"more than the declared {m} edges")
    if len(edges) != m:
        raise ParseError(last_line, f"expected {m} edges, found {len(edges)}")
    return Graph(range(n), edges)


def serialize_graph(g: Graph, names: Optional[Mapping[int, int]] = None) -> str:
    """Canonical text form.

    `names` maps internal ids to the 1-based input names; by default the
    identity shift.  Vertices are renumbered 1..n ascending, and any vertex
    whose output number differs from its name gets a mapping comment.
    """
    order = sorted(g.vertices)
    if names is None:
        names = {v: v + 1 for v in order}
    newid = {v: i + 1 for i, v in enumerate(order)}
    out = [f"p tp {g.n} {g.m}"]
    for v in order:
        if names[v] != newid[v]:
            out.append(f"# vertex {newid[v]} was {names[v]}")
    for u, v in sorted(g.edges()):
        out.append(f"e {newid[u]} {newid[v]}")
    return "\n".join(out) + "\n"


def serialize_edits(f: EditSet) -> str:
    """Lines `add u v` / `del u v` (1-based), ascending lexicographic."""
    rows = [("add", u, v) for u, v in f.adds] + [("del", u, v) for u, v in f.deletes]
    rows.sort(key=lambda r: (r[1], r[2], r[0]))
    return "".join(f"{op} {u + 1} {v + 1}\n" for op, u, v in rows)


def parse_edits(text: str) -> EditSet:
    adds: set[Edge] = set()
    deletes: set[Edge] = set()
    for line_no, line in _content_lines(text):
        parts = line.split()
        if len(parts) != 3 or parts[0] not in ("add", "del"):
            raise ParseError(line_no, f"expected 'add <u> <v>' or 'del <u> <v>', got {line!r}")
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise ParseError(line_no, "edit endpoints must be integers") from None
        if u < 1 or v < 1 or u == v:
            raise ParseError(line_no, f"bad edit pair {u} {v}")
        pair = norm_edge(u - 1, v - 1)
        (adds if parts[0] == "add" else deletes).add(pair)
    if adds & deletes:
        raise ParseError(0, "a pair may not be tagged both add and delete")
    return EditSet(adds=frozenset(adds), deletes=frozenset(deletes))


def _fmt_vertices(vs: Iterable[int]) -> str:
    vals = sorted(vs)
    return ",".join(str(v + 1) for v in vals) if vals else "-"

def _fmt_edges(es: Iterable[Edge]) -> str:
    vals = sorted(es)
    return ",".join(f"{u + 1}-{v + 1}" for u, v in vals) if vals else "-"


def serialize_trace(trace: ReductionTrace) -> str:
    """One line per step: rule id, removed vertices, added edges, note."""
    out = ["# reduction trace"]
    for i, s in enumerate(trace.steps, start=1):
        out.append(
            f"step {i} rule {s.rule} removed {_fmt_vertices(s.removed)} "
            f"added {_fmt_edges(s.added_edges)} note {s.note}"
        )
    return "\n".join(out) + "\n"


def parse_trace(text: str) -> ReductionTrace:
    steps = []
    for line_no, line in _content_lines(text):
        parts = line.split(" note ", 1)
        head = parts[0].split()
        note = parts[1] if len(parts) == 2 else ""
        if len(head) != 8 or head[0] != "step" or head[2] != "rule" or head[4] != "removed" or head[6] != "added":
            raise ParseError(line_no, f"bad trace line {line!r}")
        try:
            rule = int(head[3])
            removed = () if head[5] == "-" else tuple(int(x) - 1 for x in head[5].split(","))
            added = ()
            if head[7] != "-":
                added = tuple(
                    norm_edge(int(a) - 1, int(b) - 1)
                    for a, b in (pair.split("-") for pair in head[7].split(","))
                )
        except ValueError:
            raise ParseError(line_no, "bad numbers in trace line") from None
        steps.append(ReductionStep(rule, removed, added, note))
    return ReductionTrace(tuple(steps))


def replay_trace(g: Graph, trace: ReductionTrace) -> Graph:
    """Apply the steps of a trace to a graph."""
    cur = g
    for s in trace.steps:
        cur = cur.without_vertices(set(s.removed))
        if s.added_edges:
            cur = cur.with_edges_added(s.added_edges)
    return cur


def comb_to_line(c: Comb) -> str:
    """`shaft [sets] teeth [sets] vp [set] vf [set]`, 1-based ids; sets are
    ascending comma-joined, multiple sets separated by ';'."""

    def group(sets: Iterable[frozenset[int]]) -> str:
        return ";".join(",".join(str(v + 1) for v in sorted(s)) for s in sets)

    def single(s: frozenset[int]) -> str:
        return ",".join(str(v + 1) for v in sorted(s)) if s else "-"

    return (
        f"shaft [{group(c.shaft)}] teeth [{group(c.teeth)}] "
        f"vp [{single(c.attach_all)}] vf [{single(c.attach_shaft)}]"
    )


def format_manifest(seed: int, n: int, k: int, variant: str, planted: int, params: str = "") -> str:
    extra = f" params={params}" if params else ""
    return f"# manifest seed={seed} n={n} k={k} variant={variant} planted={planted}{extra}"


def read_manifest(text: str) -> Optional[dict[str, str]]:
    for raw in text.splitlines():
        line = raw.strip()
        if line.startswith("# manifest "):
            out: dict[str, str] = {}
            for tok in line[len("# manifest "):].split():
                if "=" in tok:
                    key, val = tok.split("=", 1)
                    out[key] = val
            return out
    return None


def read_instance_text(text: str) -> tuple[Instance, dict[str, str]]:
    """Graph file with a manifest comment -> (instance, manifest fields)."""
    meta = read_manifest(text)
    if meta is None:
        raise ValueError("instance file lacks a '# manifest' comment")
    try:
        k = int(meta["k"])
        variant = meta["variant"]
    except KeyError as missing:
        raise ValueError(f"manifest lacks required field {missing}") from None
    if variant not in VARIANTS:
        raise ValueError(f"manifest variant {variant!r} unknown")
    return Instance(parse_graph(text), k, variant), meta
