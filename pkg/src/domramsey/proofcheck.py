"""Machine checks of the domination arguments on concrete graphs.

* :func:`scan_lemma2` -- every graph with Gamma <= 2 and IR = k >= 3 must have
  an induced K_{k+1,k+1} minus a k-matching in its complement.
* :func:`scan_theorem3_falsifier` -- no graph has beta = Gamma = 2 and IR >= 3.
* :func:`trace_theorem3_chain` -- the embedding chain on one graph.
* :func:`check_extremal_t38` -- verification of user-supplied extremal
  t(3,8,21) colourings.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .canon import canonical_key
from .generate import graphs_by_order
from .graph import (Graph, Graph6Error, complement, complement_rows, cycle_graph, encode_graph6,
                    parse_graph6)
from .invariants import beta_value, gamma_at_least, gamma_value, ir_at_least, ir_value
from .structure import find_biclique_minus_matching, find_induced, is_induced_embedding

C6 = cycle_graph(6)


@dataclass
class ScanReport:
    name: str
    n_max: int
    scanned: int = 0
    hypothesis: int = 0
    passing: int = 0
    violators: list = field(default_factory=list)   # graph6 strings
    by_order: dict = field(default_factory=dict)    # order -> (scanned, hypothesis)

    @property
    def ok(self) -> bool:
        return not self.violators

    def to_text(self) -> str:
        lines = [f"scan {self.name}", f"orders = 1..{self.n_max}", f"scanned = {self.scanned}",
                 f"hypothesis = {self.hypothesis}", f"passing = {self.passing}"]
        for order in sorted(self.by_order):
            s, h = self.by_order[order]
            lines.append(f"order {order}: scanned={s} hypothesis={h}")
        lines.append(f"{len(self.violators)} violators")
        lines += [f"violator {g6}" for g6 in self.violators]
        return "\n".join(lines) + "\n"


def _levels(n_max, graphs, workers):
    if graphs is not None:
        return graphs
    return graphs_by_order(n_max, workers)


def scan_lemma2(n_max: int, graphs: Optional[Sequence[Sequence[tuple]]] = None, workers: int = 1) -> ScanReport:
    """``graphs`` may supply precomputed per-order lists (order 1 first)."""
    report = ScanReport("lemma2", n_max)
    for order, level in enumerate(_levels(n_max, graphs, workers)[:n_max], 1):
        hyp = 0
        for adj in level:
            if not ir_at_least(adj, 3) or gamma_at_least(adj, 3):
                continue
            hyp += 1
            k = ir_value(adj)
            host = Graph(order, complement_rows(adj, order))
            if find_biclique_minus_matching(host, k) is not None:
                report.passing += 1
            else:
                report.violators.append(encode_graph6(Graph(order, adj)))
        report.scanned += len(level)
        report.hypothesis += hyp
        report.by_order[order] = (len(level), hyp)
    return report


def scan_theorem3_falsifier(n_max: int, graphs: Optional[Sequence[Sequence[tuple]]] = None,
                            workers: int = 1) -> ScanReport:
    """Hypothesis: beta = 2 and IR >= 3.  Conclusion: Gamma >= 3."""
    report = ScanReport("theorem3", n_max)
    for order, level in enumerate(_levels(n_max, graphs, workers)[:n_max], 1):
        hyp = 0
        for adj in level:
            if not ir_at_least(adj, 3) or beta_value(adj) != 2:
                continue
            hyp += 1
            if gamma_at_least(adj, 3):
                report.passing += 1
            else:
                report.violators.append(encode_graph6(Graph(order, adj)))
        report.scanned += len(level)
        report.hypothesis += hyp
        report.by_order[order] = (len(level), hyp)
    return report


class PreconditionError(ValueError):
    def __init__(self, message, triple):
        super().__init__(f"{message} (beta, Gamma, IR) = {triple}")
        self.triple = triple


@dataclass
class ChainTrace:
    beta: int
    gamma: int
    ir: int
    biclique: Optional[tuple]        # embedding of K_{k+1,k+1}-M in the complement
    hexagon: Optional[tuple]         # six vertices in cycle order, from three matched pairs
    induces_c6: Optional[bool]       # do they induce C6 in the complement (G1 in the graph)?
    triangle_free_side: bool         # beta <= 2: the complement has no triangle

    def steps(self) -> list[str]:
        k = self.ir
        lines = [f"(beta, Gamma, IR) = ({self.beta}, {self.gamma}, {self.ir})"]
        if self.biclique is None:
            lines.append(f"step 1: no induced K_{{{k + 1},{k + 1}}}-M in the complement")
            return lines
        lines.append(f"step 1: K_{{{k + 1},{k + 1}}}-M at {list(self.biclique)}")
        lines.append(f"step 2: K_{{3,3}}-M' on {sorted(self.hexagon)}")
        note = "complement triangle-free" if self.triangle_free_side else "beta > 2, no triangle condition"
        lines.append(f"step 3: induced C6 in complement = {self.induces_c6} ({note})")
        return lines


def trace_theorem3_chain(b: Graph) -> ChainTrace:
    beta, gamma, ir = beta_value(b.adj), gamma_value(b.adj), ir_value(b.adj)
    triple = (beta, gamma, ir)
    if gamma > 2 or ir < 3:
        raise PreconditionError("trace needs Gamma <= 2 and IR >= 3", triple)
    red = complement(b)
    k = ir
    emb = find_biclique_minus_matching(red, k)
    if emb is None:
        return ChainTrace(beta, gamma, ir, None, None, None, beta <= 2)
    x = emb[:3]
    y = emb[k + 1:k + 4]
    hexagon = (x[0], y[1], x[2], y[0], x[1], y[2])
    return ChainTrace(beta, gamma, ir, emb, hexagon, is_induced_embedding(C6, red, hexagon), beta <= 2)


# -- extremal colouring pipeline --------------------------------------------------

class ExtremalInputError(ValueError):
    pass


@dataclass
class ColoringCheck:
    index: int
    graph6: str
    blue_ir_ok: bool                 # IR(blue) below the blue threshold
    red_beta: int
    red_beta_ok: bool
    red_gamma_ok: bool               # Gamma(red) reaches the required minimum
    duplicate_of: Optional[int] = None
    pattern_embedding: Optional[tuple] = None
    pattern_checked: bool = False

    @property
    def passed(self) -> bool:
        ok = self.blue_ir_ok and self.red_beta_ok and self.red_gamma_ok and self.duplicate_of is None
        if self.pattern_checked:
            ok = ok and self.pattern_embedding is not None
        return ok

    @property
    def avoidance_flag(self) -> bool:
        """Blue IR stays low and red Gamma stays low: an avoidance colouring
        for the upper domination number at this order."""
        return self.blue_ir_ok and not self.red_gamma_ok


@dataclass
class ExtremalReport:
    order: int
    checks: list

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(c.passed for c in self.checks)

    @property
    def flagged(self) -> list:
        return [c for c in self.checks if c.avoidance_flag]

    def to_text(self) -> str:
        lines = [f"extremal colourings on {self.order} vertices: {len(self.checks)}"]
        for c in self.checks:
            parts = [
                f"#{c.index}",
                f"blue_IR_ok={c.blue_ir_ok}",
                f"red_beta={c.red_beta} ok={c.red_beta_ok}",
                f"red_Gamma_ok={c.red_gamma_ok}",
                "unique" if c.duplicate_of is None else f"duplicate_of=#{c.duplicate_of}",
            ]
            if c.pattern_checked:
                emb = "none" if c.pattern_embedding is None else list(c.pattern_embedding)
                parts.append(f"pattern={emb}")
            parts.append("PASS" if c.passed else "FAIL")
            if c.avoidance_flag:
                parts.append("FLAG: avoidance colouring for upper domination")
            lines.append(" ".join(parts))
        lines.append("all checks pass" if self.passed else "some checks fail")
        return "\n".join(lines) + "\n"


def read_colorings(lines: Iterable[str], order: int) -> list[Graph]:
    graphs = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line:
            continue
        try:
            g = parse_graph6(line)
        except Graph6Error as exc:
            raise ExtremalInputError(f"line {lineno}: {exc}") from exc
        if g.order != order:
            raise ExtremalInputError(f"line {lineno}: expected order {order}, got {g.order}")
        graphs.append(g)
    if not graphs:
        raise ExtremalInputError("no colourings in input")
    return graphs


def check_extremal(blues: Sequence[Graph], *, order: int, blue_ir_below: int, red_beta: int,
                   red_gamma_min: int, pattern: Optional[Graph] = None) -> ExtremalReport:
    codes: dict = {}
    checks = []
    for i, blue in enumerate(blues, 1):
        if blue.order != order:
            raise ExtremalInputError(f"colouring #{i} has order {blue.order}, expected {order}")
        red = complement(blue)
        rb = beta_value(red.adj)
        key = canonical_key(blue.adj, order)
        check = ColoringCheck(
            index=i,
            graph6=encode_graph6(blue),
            blue_ir_ok=not ir_at_least(blue.adj, blue_ir_below),
            red_beta=rb,
            red_beta_ok=rb == red_beta,
            red_gamma_ok=gamma_at_least(red.adj, red_gamma_min),
            duplicate_of=codes.get(key),
        )
        codes.setdefault(key, i)
        if pattern is not None:
            check.pattern_checked = True
            check.pattern_embedding = find_induced(pattern, red)
        checks.append(check)
    return ExtremalReport(order, checks)


def check_extremal_t38(path, g2_pattern: Optional[Graph] = None) -> ExtremalReport:
    """IR(blue) <= 2, beta(red) = 7 and Gamma(red) >= 8 on each colouring of K_21."""
    try:
        with open(path, encoding="ascii") as fh:
            blues = read_colorings(fh, 21)
    except UnicodeDecodeError as exc:
        raise ExtremalInputError(f"{path}: not a graph6 text file") from exc
    return check_extremal(blues, order=21, blue_ir_below=3, red_beta=7, red_gamma_min=8, pattern=g2_pattern)
