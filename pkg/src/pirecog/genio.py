"""Instance generators and the text/JSON formats shared by tests and the CLI.

Instance text format (0-based indices, ``#`` starts a comment)::

    graph n m          then m lines  "e a b"
    order n k          then k lines  "r a b"   (a precedes b)
    bigraph nu nv m    then m lines  "e u v", optionally followed by "f u v"
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .bigraph import BipartiteGraph, Edge, InputError, from_edge_list
from .chaincover import ChainCover, CoverProblem
from .orders import PartialOrder, SimpleGraph, simple_graph
from .recognizer import RecognitionResult

Instance = Union[SimpleGraph, PartialOrder, CoverProblem]


@dataclass(frozen=True)
class TriangleRepresentation:
    """Triangle i has apex ``apex[i]`` on the top line and base
    ``[left[i], right[i]]`` on the bottom line."""

    apex: tuple[int, ...]
    left: tuple[int, ...]
    right: tuple[int, ...]

    def __post_init__(self):
        n = len(self.apex)
        if len(self.left) != n or len(self.right) != n:
            raise InputError("coordinate tuples differ in length")
        if any(a > b for a, b in zip(self.left, self.right)):
            raise InputError("interval with left > right")
        if len(set(self.apex)) != n or len(set(self.left + self.right)) != 2 * n:
            raise InputError("coordinates are not in general position")

    @property
    def n(self) -> int:
        return len(self.apex)

    def left_of(self, a: int, b: int) -> bool:
        return self.apex[a] < self.apex[b] and self.right[a] < self.left[b]


def gen_triangle_representation(n: int, seed: int) -> TriangleRepresentation:
    rng = random.Random(seed)
    apex = list(range(1, n + 1))
    rng.shuffle(apex)
    ends = list(range(1, 2 * n + 1))
    rng.shuffle(ends)
    left, right = [], []
    for i in range(n):
        a, b = sorted(ends[2 * i : 2 * i + 2])
        left.append(a)
        right.append(b)
    return TriangleRepresentation(tuple(apex), tuple(left), tuple(right))


def order_of_representation(r: TriangleRepresentation) -> PartialOrder:
    rel = frozenset((a, b) for a in range(r.n) for b in range(r.n) if a != b and r.left_of(a, b))
    return PartialOrder(r.n, rel)


def intersection_graph(r: TriangleRepresentation) -> SimpleGraph:
    return simple_graph(
        r.n,
        (
            (a, b)
            for a in range(r.n)
            for b in range(a + 1, r.n)
            if not r.left_of(a, b) and not r.left_of(b, a)
        ),
    )


def _check_density(density: float) -> None:
    if not 0.0 <= density <= 1.0:
        raise InputError(f"density {density} outside [0, 1]")


def gen_random_bipartite(u_count: int, v_count: int, density: float, seed: int) -> BipartiteGraph:
    _check_density(density)
    rng = random.Random(seed)
    return from_edge_list(
        u_count,
        v_count,
        [(u, v) for u in range(u_count) for v in range(v_count) if rng.random() < density],
    )


def gen_random_F(g: BipartiteGraph, density: float, seed: int) -> frozenset[Edge]:
    _check_density(density)
    rng = random.Random(seed)
    return frozenset(e for e in g.sorted_edges() if rng.random() < density)


def gen_permutation_graph(n: int, seed: int) -> SimpleGraph:
    rng = random.Random(seed)
    perm = list(range(n))
    rng.shuffle(perm)
    return simple_graph(
        n, ((a, b) for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
    )


def gen_interval_graph(n: int, seed: int) -> SimpleGraph:
    rng = random.Random(seed)
    ends = list(range(2 * n))
    rng.shuffle(ends)
    iv = [sorted(ends[2 * i : 2 * i + 2]) for i in range(n)]
    return simple_graph(
        n,
        (
            (a, b)
            for a in range(n)
            for b in range(a + 1, n)
            if iv[a][0] < iv[b][1] and iv[b][0] < iv[a][1]
        ),
    )


# -- text instances -------------------------------------------------------


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise InputError(f"line {lineno}: expected integers, got {' '.join(tokens)!r}") from None


def parse_instance(text: str) -> Instance:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].split()
        if line:
            rows.append((lineno, line))
    if not rows:
        raise InputError("empty instance")
    lineno, head = rows[0]
    kind, body = head[0], rows[1:]
    expected = {"graph": 2, "order": 2, "bigraph": 3}
    if kind not in expected or len(head) != expected[kind] + 1:
        raise InputError(f"line {lineno}: bad header {' '.join(head)!r}")
    sizes = _ints(head[1:], lineno)
    if min(sizes) < 0:
        raise InputError(f"line {lineno}: negative size")
    count = sizes[-1]
    allowed = {"graph": {"e"}, "order": {"r"}, "bigraph": {"e", "f"}}[kind]
    pairs: dict[str, list[Edge]] = {"e": [], "r": [], "f": []}
    for lineno, toks in body:
        if toks[0] not in allowed or len(toks) != 3:
            raise InputError(f"line {lineno}: unexpected {' '.join(toks)!r} in {kind} instance")
        a, b = _ints(toks[1:], lineno)
        pairs[toks[0]].append((a, b))
    main = pairs["r" if kind == "order" else "e"]
    if len(main) != count:
        raise InputError(f"header announces {count} pairs, found {len(main)}")
    if kind == "graph":
        return simple_graph(sizes[0], main)
    if kind == "order":
        n = sizes[0]
        for a, b in main:
            if not (0 <= a < n and 0 <= b < n):
                raise InputError(f"pair ({a}, {b}) out of range for n={n}")
        return PartialOrder(n, frozenset(main))
    g = from_edge_list(sizes[0], sizes[1], main)
    return CoverProblem(g, frozenset(pairs["f"]))


def format_instance(inst: Instance) -> str:
    if isinstance(inst, SimpleGraph):
        edges = sorted(inst.edges)
        lines = [f"graph {inst.n} {len(edges)}"] + [f"e {a} {b}" for a, b in edges]
    elif isinstance(inst, PartialOrder):
        rel = sorted(inst.relation)
        lines = [f"order {inst.n} {len(rel)}"] + [f"r {a} {b}" for a, b in rel]
    elif isinstance(inst, CoverProblem):
        g = inst.graph
        edges = g.sorted_edges()
        lines = [f"bigraph {g.u_count} {g.v_count} {len(edges)}"]
        lines += [f"e {u} {v}" for u, v in edges]
        lines += [f"f {u} {v}" for u, v in sorted(inst.forbidden)]
    else:
        raise TypeError(f"cannot format {type(inst).__name__}")
    return "\n".join(lines) + "\n"


# -- certificates ---------------------------------------------------------


def _pairs(es: Iterable[Edge]) -> list[list[int]]:
    return [list(e) for e in sorted(es)]


def certificate_dict(
    verdict: bool,
    reason: Optional[str] = None,
    orientation: Optional[PartialOrder] = None,
    cover: Optional[ChainCover] = None,
) -> dict:
    out: dict = {"verdict": "yes" if verdict else "no"}
    if reason is not None:
        out["reason"] = reason
    if orientation is not None:
        out["orientation"] = _pairs(orientation.relation)
    if cover is not None:
        out["cover"] = {"g1": _pairs(cover.g1_edges), "g2": _pairs(cover.g2_edges)}
    return out


def result_certificate(res: RecognitionResult) -> dict:
    return certificate_dict(res.verdict, res.reason, res.orientation if res.verdict else None, res.cover)


def dump_certificate(cert: dict) -> str:
    return json.dumps(cert, sort_keys=True) + "\n"


def _edge_list(obj, what: str) -> frozenset[Edge]:
    if not isinstance(obj, list):
        raise InputError(f"{what} must be a list of pairs")
    out = set()
    for item in obj:
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in item)
        ):
            raise InputError(f"{what}: bad pair {item!r}")
        out.add((item[0], item[1]))
    return frozenset(out)


def load_certificate(text: str) -> dict:
    """Parse certificate JSON into verdict/reason plus edge sets."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"certificate is not JSON: {exc}") from None
    if not isinstance(raw, dict) or raw.get("verdict") not in ("yes", "no"):
        raise InputError("certificate needs a 'verdict' of 'yes' or 'no'")
    out = {"verdict": raw["verdict"] == "yes", "reason": raw.get("reason")}
    if "orientation" in raw:
        out["orientation"] = _edge_list(raw["orientation"], "orientation")
    if "cover" in raw:
        cov = raw["cover"]
        if not isinstance(cov, dict):
            raise InputError("cover must be an object with g1 and g2")
        out["cover"] = ChainCover(_edge_list(cov.get("g1"), "g1"), _edge_list(cov.get("g2"), "g2"))
    return out
