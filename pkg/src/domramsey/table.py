"""Published table of nonclassical Ramsey values and its desk-scale regeneration."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .search import RamseyVariant, compute_ramsey

COLUMNS = "swutvr"

# (m, n) -> letter -> exact value or (low, high) bounds, as printed
PRINTED: dict[tuple[int, int], dict[str, object]] = {
    (3, 3): dict(s=6, w=6, u=6, t=6, v=6, r=6),
    (3, 4): dict(s=8, w=8, u=8, t=9, v=9, r=9),
    (4, 3): dict(s=8, w=6, u=8, t=8, v=8, r=9),
    (3, 5): dict(s=12, w=12, u=12, t=12, v=12, r=14),
    (5, 3): dict(s=12, w=12, u=12, t=13, v=13, r=14),
    (3, 6): dict(s=15, w=15, u=15, t=15, v=15, r=18),
    (6, 3): dict(s=15, w=15, u=15, t=15, v=15, r=18),
    (3, 7): dict(s=18, w=18, u=18, t=18, v=18, r=23),
    (7, 3): dict(s=18, w=18, u=18, t=(18, 23), v=(18, 23), r=23),
    (3, 8): dict(s=21, w=21, u=21, t=22, v=22, r=28),
    (8, 3): dict(s=21, w=21, u=21, t=(21, 28), v=(21, 28), r=28),
    # the r entry of this row is printed with the label r(3,4)
    (4, 4): dict(s=13, w=13, u=13, t=14, v=14, r=18),
}

CHAINS = ("swuvr", "swtvr")


def printed_chain_conflicts() -> list[str]:
    """Places where the printed exact values break s<=w<=u<=v<=r or s<=w<=t<=v<=r."""
    out = []
    for (m, n), row in PRINTED.items():
        for chain in CHAINS:
            for a, b in zip(chain, chain[1:]):
                x, y = row[a], row[b]
                if isinstance(x, int) and isinstance(y, int) and x > y:
                    msg = f"printed {a}({m},{n})={x} > {b}({m},{n})={y}"
                    if msg not in out:
                        out.append(msg)
    return out


@dataclass
class Cell:
    letter: str
    m: int
    n: int
    printed: int
    computed: Optional[int]
    status: str        # agree, disagree, undetermined, refuted

    @property
    def name(self) -> str:
        return f"{self.letter}({self.m},{self.n})"


@dataclass
class TableReport:
    max_order: int
    cells: list = field(default_factory=list)
    chain_violations: list = field(default_factory=list)
    printed_conflicts: list = field(default_factory=list)

    @property
    def disagreements(self) -> list:
        return [c for c in self.cells if c.status in ("disagree", "refuted")]

    def to_text(self) -> str:
        lines = [f"table regeneration, max order {self.max_order}"]
        if not self.cells:
            lines.append("no printed value is within the order cap")
        for c in self.cells:
            comp = "undetermined" if c.computed is None else str(c.computed)
            lines.append(f"{c.name}: printed={c.printed} computed={comp} {c.status}")
        for v in self.chain_violations:
            lines.append(f"chain violation: {v}")
        for v in self.printed_conflicts:
            lines.append(f"printed table inconsistent: {v}")
        for c in self.disagreements:
            lines.append(f"FLAG {c.name}: printed {c.printed} is not the computed value")
        return "\n".join(lines) + "\n"


def regenerate(max_order: int, workers: int = 1) -> TableReport:
    """Recompute every exact printed cell with value <= ``max_order``.

    A cell whose search is still undetermined at the cap means avoidance
    colourings exist at the printed order, which refutes the printed value.
    """
    report = TableReport(max_order)
    computed: dict[tuple[str, int, int], Optional[int]] = {}
    for (m, n), row in PRINTED.items():
        for letter in COLUMNS:
            printed = row[letter]
            if not isinstance(printed, int) or printed > max_order:
                continue
            result = compute_ramsey(RamseyVariant.named(letter, m, n), max_order, workers=workers)
            computed[(letter, m, n)] = result.value
            if result.value is None:
                status = "refuted"
            elif result.value == printed:
                status = "agree"
            else:
                status = "disagree"
            report.cells.append(Cell(letter, m, n, printed, result.value, status))
    pairs = {(m, n) for (_, m, n) in computed}
    for m, n in sorted(pairs):
        for chain in CHAINS:
            for a, b in zip(chain, chain[1:]):
                x, y = computed.get((a, m, n)), computed.get((b, m, n))
                if x is not None and y is not None and x > y:
                    report.chain_violations.append(f"{a}({m},{n})={x} > {b}({m},{n})={y}")
    if report.cells:
        report.printed_conflicts = [c for c in printed_chain_conflicts()
                                    if any(f"({cell.m},{cell.n})" in c for cell in report.cells)]
    return report
