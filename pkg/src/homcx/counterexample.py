"""Mechanical check of the 9-vertex counterexample and its connectivity proof.

Colourings of g9 are written as 3x3 grids, rows ``c1 t c2 / l z r / c4 b c3``,
colours 1..5, e.g. ``"132 514 423"``.  An edge of the flip graph is written as
a grid where one cell carries two colours, e.g. ``"132 514 42{3,5}"``.

Every 5-colouring gets a class name such as ``s1234``, ``t1234``, ``h1234a``
or ``v1534b``: kind, corner signature read clockwise from c1, and for h/v the
template square it completes.
"""

from __future__ import annotations

import re
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from itertools import permutations

from .chromatic import chromatic_number
from .errors import VerificationError
from .flip import FlipGraph, build_flip_graph, components
from .graph import (
    BOTTOM, C1, C2, C3, C4, CENTER, LEFT, RIGHT, TOP, Graph, complete, counterexample_g9,
)
from .homs import HomSet, enumerate_homs

GRID = (C1, TOP, C2, LEFT, CENTER, RIGHT, C4, BOTTOM, C3)
CORNERS = (C1, C2, C3, C4)
SPARE = 4  # colour "5" after relabelling corners to 1..4

S_GRID = "132 254 413"
T_GRID = "142 351 423"

# '+' must be the spare colour, '-' is free.
SQUARES = {
    ("h", "a"): "132 +-- 423",
    ("h", "b"): "142 --+ 413",
    ("v", "a"): "1+2 3-4 4-3",
    ("v", "b"): "1-2 2-1 4+3",
    ("h", "c"): "132 --- 413",
    ("h", "d"): "142 --- 423",
    ("v", "c"): "1-2 3-1 4-3",
    ("v", "d"): "1-2 2-4 4-3",
}

CENTRAL_ROWS = {
    "h1234a": {"514", "515", "545", "541"},
    "h1234c": {"245", "545", "525", "524"},
}

PATH_CERTIFICATE = ("132 514 423", "132 515 423", "132 545 423", "132 541 423")

# (edge, class of first-colour endpoint, class of second-colour endpoint)
EDGE_CERTIFICATES = (
    ("132 514 42{3,5}", "h1234a", "v1254a"),
    ("132 524 41{5,3}", "v1254a", "h1234c"),
    ("13{2,5} 541 423", "h1234a", "v1534b"),
    ("14{5,2} 531 423", "v1534b", "h1234d"),
    ("{1,5}42 235 413", "h1234b", "v5234b"),
    ("{5,1}32 245 413", "v5234b", "h1234c"),
)

# edges tying h1234 (any subtype) to four v-classes of neighbouring signatures
BRIDGE_CERTIFICATES = (
    ("13{2,5} 514 423", "h1234", "v1534"),
    ("132 514 42{3,5}", "h1234", "v1254"),
    ("{1,5}42 235 413", "h1234", "v5234"),
    ("142 235 {4,5}13", "h1234", "v1235"),
)

# class pairs asserted adjacent without an explicit edge
CLASS_LINKS = (
    ("s1234", "v5234"),
    ("s1234", "h1534"),
    ("h1534", "v1234"),
    ("v1234", "h5234"),
    ("t1234", "h5234"),
)

EXPECTED_CHI = 5
EXPECTED_TOTAL = 4080
EXPECTED_PER_SIGNATURE = {"s": 1, "t": 1, "h": 16, "v": 16}
EXPECTED_SQUARE_SIZE = 4


def parse_grid(text: str) -> tuple[int, ...]:
    """``"132 514 423"`` -> 0-indexed colouring of g9 in vertex order."""
    digits = [ch for ch in text if not ch.isspace()]
    if len(digits) != 9 or not all(ch.isdigit() for ch in digits):
        raise ValueError(f"not a 3x3 grid of colours: {text!r}")
    col = [0] * 9
    for cell, ch in zip(GRID, digits):
        col[cell] = int(ch) - 1
    return tuple(col)


def format_grid(coloring) -> str:
    s = "".join(str(coloring[v] + 1) for v in GRID)
    return f"{s[:3]} {s[3:6]} {s[6:]}"


_CELL = re.compile(r"\{(\d),(\d)\}|(\d)")


def parse_edge(text: str) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Grid with one two-coloured cell -> the two colourings it joins."""
    cells = _CELL.findall(text.replace(" ", ""))
    if len(cells) != 9 or sum(1 for a, b, c in cells if a) != 1:
        raise ValueError(f"not an edge grid: {text!r}")
    first, second = [], []
    for a, b, c in cells:
        first.append(a or c)
        second.append(b or c)
    return parse_grid("".join(first)), parse_grid("".join(second))


def _template_key(kind: str, template: str) -> tuple[int, int]:
    pos = (TOP, BOTTOM) if kind == "h" else (LEFT, RIGHT)
    cells = dict(zip(GRID, template.replace(" ", "")))
    return tuple(int(cells[p].replace("+", "5")) - 1 for p in pos)


SUBTYPE_KEYS = {
    kind: {_template_key(kind, t): sub for (k, sub), t in SQUARES.items() if k == kind}
    for kind in ("h", "v")
}


def _matches(coloring, pattern: str) -> bool:
    for v, ch in zip(GRID, pattern.replace(" ", "")):
        if ch == "+" and coloring[v] != SPARE:
            return False
        if ch.isdigit() and coloring[v] != int(ch) - 1:
            return False
    return True


def signature_label(signature) -> str:
    return "".join(str(c + 1) for c in signature)


@dataclass(frozen=True)
class ClassifiedColoring:
    coloring: tuple[int, ...]
    signature: tuple[int, int, int, int]
    spare: int
    kind: str
    subtype: str | None

    @property
    def name(self) -> str:
        return f"{self.kind}{signature_label(self.signature)}{self.subtype or ''}"

    @property
    def group(self) -> str:
        """Class name without the subtype, e.g. ``h1234``."""
        return f"{self.kind}{signature_label(self.signature)}"


def classify(coloring) -> ClassifiedColoring:
    coloring = tuple(coloring)
    if len(coloring) != 9:
        raise VerificationError(f"expected a colouring of 9 vertices, got {len(coloring)}")
    sig = tuple(coloring[v] for v in CORNERS)
    if len(set(sig)) != 4 or not all(0 <= c < 5 for c in coloring):
        raise VerificationError(f"corners not 4 distinct colours of 5: {format_grid(coloring)}")
    (spare,) = set(range(5)) - set(sig)
    relabel = {c: i for i, c in enumerate(sig)}
    relabel[spare] = SPARE
    canon = tuple(relabel[c] for c in coloring)

    if canon[CENTER] == SPARE:
        for kind, grid in (("s", S_GRID), ("t", T_GRID)):
            if canon == parse_grid(grid):
                return ClassifiedColoring(coloring, sig, spare, kind, None)
        raise VerificationError(f"spare colour at centre but neither s nor t: {format_grid(coloring)}")

    where = {v for v in (TOP, RIGHT, BOTTOM, LEFT) if canon[v] == SPARE}
    if where and where <= {LEFT, RIGHT}:
        kind, key = "h", (canon[TOP], canon[BOTTOM])
    elif where and where <= {TOP, BOTTOM}:
        kind, key = "v", (canon[LEFT], canon[RIGHT])
    else:
        raise VerificationError(f"spare colour neither row- nor column-confined: {format_grid(coloring)}")
    sub = SUBTYPE_KEYS[kind].get(key)
    if sub is None or not _matches(canon, SQUARES[kind, sub]):
        raise VerificationError(f"no {kind}-template fits {format_grid(coloring)}")
    return ClassifiedColoring(coloring, sig, spare, kind, sub)


@dataclass
class Census:
    per_signature: dict = field(default_factory=dict)  # signature label -> Counter of kinds
    squares: dict = field(default_factory=dict)  # class name (h/v) -> colourings
    labels: list = field(default_factory=list)  # ClassifiedColoring per homset index
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def central_rows(self, name: str) -> set[str]:
        return {format_grid(c).split()[1] for c in self.squares.get(name, ())}


def verify_counts(homset: HomSet) -> Census:
    census = Census()
    per_sig: dict[str, Counter] = defaultdict(Counter)
    squares: dict[str, list] = defaultdict(list)
    unclassified = []
    for c in homset:
        try:
            cc = classify(c)
        except VerificationError as e:
            unclassified.append(str(e))
            census.labels.append(None)
            continue
        census.labels.append(cc)
        per_sig[signature_label(cc.signature)][cc.kind] += 1
        if cc.subtype:
            squares[cc.name].append(c)
    if unclassified:
        census.failures.append(
            f"{len(unclassified)} unclassifiable colorings, first: {unclassified[0]}"
        )
    census.per_signature = dict(per_sig)
    census.squares = dict(squares)

    for sig in permutations(range(5), 4):
        label = signature_label(sig)
        got = {k: per_sig.get(label, Counter())[k] for k in EXPECTED_PER_SIGNATURE}
        if got != EXPECTED_PER_SIGNATURE:
            census.failures.append(f"signature {label}: {got} != {EXPECTED_PER_SIGNATURE}")
        for kind, sub in SQUARES:
            name = f"{kind}{label}{sub}"
            n = len(squares.get(name, ()))
            if n != EXPECTED_SQUARE_SIZE:
                census.failures.append(f"square {name}: {n} completions")
    for name, rows in CENTRAL_ROWS.items():
        got = census.central_rows(name)
        if got != rows:
            census.failures.append(f"square {name}: central rows {sorted(got)} != {sorted(rows)}")
    return census


def _is_path(fg: FlipGraph, members: list[int]) -> bool:
    ms = set(members)
    deg = {i: sum(1 for j in fg.adjacency[i] if j in ms) for i in members}
    if sum(deg.values()) != 2 * (len(members) - 1) or max(deg.values(), default=0) > 2:
        return False
    # connected check: a forest with n-1 edges is a tree
    seen, stack = {members[0]}, [members[0]]
    while stack:
        i = stack.pop()
        for j in fg.adjacency[i]:
            if j in ms and j not in seen:
                seen.add(j)
                stack.append(j)
    return len(seen) == len(members)


@dataclass
class CertificateCheck:
    failures: list = field(default_factory=list)
    checked: int = 0

    @property
    def ok(self) -> bool:
        return self.checked > 0 and not self.failures


def verify_certificates(fg: FlipGraph, census: Census | None = None) -> CertificateCheck:
    hs = fg.homset
    if census is None:
        census = verify_counts(hs)
    out = CertificateCheck()

    def fail(msg):
        out.failures.append(msg)

    def present(grid_col, what) -> bool:
        if grid_col not in hs:
            fail(f"{what}: {format_grid(grid_col)} is not a proper colouring")
            return False
        return True

    def label(c):
        return census.labels[hs.position(c)]

    path = [parse_grid(p) for p in PATH_CERTIFICATE]
    out.checked += 1
    if all(present(c, "path") for c in path):
        for a, b in zip(path, path[1:]):
            if not fg.is_edge(a, b):
                fail(f"path: no edge {format_grid(a)} -> {format_grid(b)}")

    for edges, exact in ((EDGE_CERTIFICATES, True), (BRIDGE_CERTIFICATES, False)):
        for text, left, right in edges:
            out.checked += 1
            a, b = parse_edge(text)
            if not (present(a, text) and present(b, text)):
                continue
            if not fg.is_edge(a, b):
                fail(f"edge {text}: endpoints not flip-adjacent")
                continue
            la, lb = label(a), label(b)
            if la is None or lb is None:
                fail(f"edge {text}: endpoint unclassified")
                continue
            got = (la.name, lb.name) if exact else (la.group, lb.group)
            if got != (left, right):
                fail(f"edge {text}: joins {got}, expected {(left, right)}")

    linked = set()
    for i, j in fg.edges():
        li, lj = census.labels[i], census.labels[j]
        if li is not None and lj is not None:
            linked.add((li.group, lj.group))
            linked.add((lj.group, li.group))
    for a, b in CLASS_LINKS:
        out.checked += 1
        if (a, b) not in linked:
            fail(f"no flip edge between classes {a} and {b}")

    for name, members in sorted(census.squares.items()):
        out.checked += 1
        if not _is_path(fg, [hs.position(c) for c in members]):
            fail(f"square {name}: completions do not induce a path")
    return out


@dataclass
class PaperReport:
    chi: int
    total: int
    signatures: int
    per_signature: dict
    squares_ok: bool
    certificates_ok: bool
    components: int
    failures: list
    class_groups: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "chi": self.chi,
            "total": self.total,
            "signatures": self.signatures,
            "per_signature": self.per_signature,
            "squares_ok": self.squares_ok,
            "certificates_ok": self.certificates_ok,
            "components": self.components,
            "pass": self.passed,
        }

    def summary(self) -> str:
        def mark(ok):
            return "ok" if ok else "FAIL"

        ps = self.per_signature
        rows = [
            ("chromatic number", str(self.chi), mark(self.chi == EXPECTED_CHI)),
            ("5-colorings", str(self.total), mark(self.total == EXPECTED_TOTAL)),
            ("corner signatures", str(self.signatures), mark(self.signatures == 120)),
            ("per signature s/t/h/v",
             "/".join(str(ps.get(k, 0)) for k in "sthv"),
             mark(ps == EXPECTED_PER_SIGNATURE)),
            ("template squares", "4 completions each" if self.squares_ok else "mismatch",
             mark(self.squares_ok)),
            ("(signature, kind) groups", str(self.class_groups), "info"),
            ("certificates", "all present" if self.certificates_ok else "missing",
             mark(self.certificates_ok)),
            ("flip-graph components", str(self.components), mark(self.components == 1)),
        ]
        w = max(len(r[0]) for r in rows)
        lines = [f"{a:<{w}}  {b:<20} {c}" for a, b, c in rows]
        lines += [f"  - {f}" for f in self.failures]
        lines.append("verdict: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines) + "\n"


def verify_paper(g: Graph | None = None, threads: int = 1) -> PaperReport:
    """Re-derive every claim about the counterexample; ``g`` defaults to g9.

    Passing a different graph (an edge-deleted mutant, say) runs the same
    checks against it, which is how the edge list is guarded.
    """
    if g is None:
        g = counterexample_g9()
    failures = []
    chi = chromatic_number(g).chi
    if chi != EXPECTED_CHI:
        failures.append(f"chromatic number {chi} != {EXPECTED_CHI}")
    hs = enumerate_homs(g, complete(EXPECTED_CHI), threads=threads)
    if len(hs) != EXPECTED_TOTAL:
        failures.append(f"{len(hs)} colorings != {EXPECTED_TOTAL}")
    fg = build_flip_graph(hs, threads=threads)
    ncomp = components(fg).component_count
    if ncomp != 1:
        failures.append(f"flip graph has {ncomp} components, expected 1")

    per_signature: dict = {}
    signatures = 0
    squares_ok = certificates_ok = False
    groups = 0
    if g.n != 9:
        failures.append(f"graph has {g.n} vertices; census needs the 3x3 grid")
    else:
        census = verify_counts(hs)
        signatures = len(census.per_signature)
        # reported for the representative signature 1234; any other
        # signature that disagrees is already listed in census.failures
        ref = census.per_signature.get("1234", Counter())
        per_signature = {k: ref[k] for k in "sthv"}
        squares_ok = census.ok
        failures += census.failures
        groups = len({cc.group for cc in census.labels if cc is not None})
        if len(hs) and not any(lbl is None for lbl in census.labels):
            cert = verify_certificates(fg, census)
            certificates_ok = cert.ok
            failures += cert.failures
        else:
            failures.append("certificates skipped: census incomplete")
    return PaperReport(
        chi, len(hs), signatures, per_signature, squares_ok, certificates_ok, ncomp,
        failures, groups,
    )

