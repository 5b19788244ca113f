"""2-satisfiability via strongly connected components of the implication graph."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

# (variable index, polarity); polarity True means the positive literal x_i
Literal = tuple[int, bool]
Clause = tuple[Literal, Literal]


@dataclass
class TwoSatInstance:
    var_count: int
    clauses: list[Clause] = field(default_factory=list)

    def add_clause(self, a: Literal, b: Optional[Literal] = None) -> "TwoSatInstance":
        """Append ``(a or b)``; a unit clause is stored as ``(a, a)``."""
        if b is None:
            b = a
        for var, _ in (a, b):
            if not 0 <= var < self.var_count:
                raise ValueError(f"variable {var} out of range (var_count={self.var_count})")
        self.clauses.append((a, b))
        return self

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.var_count} {len(self.clauses)}"]
        for a, b in self.clauses:
            lits = [(v + 1) if pos else -(v + 1) for v, pos in ((a, b) if a != b else (a,))]
            lines.append(" ".join(map(str, lits)) + " 0")
        return "\n".join(lines) + "\n"


def satisfies(inst: TwoSatInstance, values: list[bool]) -> bool:
    return all(values[va] == pa or values[vb] == pb for (va, pa), (vb, pb) in inst.clauses)


def _strong_components(n: int, succ: list[list[int]]) -> list[int]:
    """Iterative Tarjan. Component ids come out in reverse topological order."""
    index = [-1] * n
    low = [0] * n
    comp = [-1] * n
    stack: list[int] = []
    counter = 0
    ncomp = 0
    for root in range(n):
        if index[root] != -1:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        work = [(root, iter(succ[root]))]
        while work:
            node, it = work[-1]
            descended = False
            for nxt in it:
                if index[nxt] == -1:
                    index[nxt] = low[nxt] = counter
                    counter += 1
                    stack.append(nxt)
                    work.append((nxt, iter(succ[nxt])))
                    descended = True
                    break
                # visited but unassigned means still on the Tarjan stack
                if comp[nxt] == -1 and index[nxt] < low[node]:
                    low[node] = index[nxt]
            if descended:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                if low[node] < low[parent]:
                    low[parent] = low[node]
            if low[node] == index[node]:
                while True:
                    w = stack.pop()
                    comp[w] = ncomp
                    if w == node:
                        break
                ncomp += 1
    return comp


def solve(inst: TwoSatInstance) -> Optional[list[bool]]:
    """Return a satisfying assignment, or None if the formula is unsatisfiable.

    Literal x_i is node 2i and its negation 2i + 1. A variable is set true
    when its positive node lies later in topological order than its negation.
    """
    n = 2 * inst.var_count
    succ: list[list[int]] = [[] for _ in range(n)]
    for (va, pa), (vb, pb) in inst.clauses:
        na = 2 * va + (not pa)
        nb = 2 * vb + (not pb)
        # (a or b) gives not-a -> b and not-b -> a
        succ[na ^ 1].append(nb)
        succ[nb ^ 1].append(na)
    comp = _strong_components(n, succ)
    values = []
    for var in range(inst.var_count):
        pos, neg = comp[2 * var], comp[2 * var + 1]
        if pos == neg:
            return None
        # lower Tarjan id = later in topological order
        values.append(pos < neg)
    return values
