"""Certification of small nonclassical Ramsey numbers.

Blue graphs are grown one vertex at a time through the isomorph-free
generator.  With pruning on, a partial colouring is dropped only on an
induced-monotone bound: an independent set of size ``m`` in blue (which
forces the blue parameter to ``m`` whatever it is) or, for an irredundance
threshold, an irredundant set of size ``m``; the red side is handled the same
way.  Upper domination is never pruned on directly because it can drop when a
vertex is added; it is evaluated exactly on every surviving colouring.
"""
from __future__ import annotations

import enum
import hashlib
import re
from dataclasses import dataclass, field
from typing import Optional

from .generate import MAX_FULL_ORDER, Expander, extend
from .graph import EdgeColoring, Graph, complement_rows, encode_graph6, parse_graph6
from .invariants import beta_at_least, beta_value, gamma_at_least, gamma_value, ir_at_least, ir_value


class ParamKind(enum.Enum):
    INDEPENDENCE = "beta"
    UPPER_DOMINATION = "Gamma"
    UPPER_IRREDUNDANCE = "IR"


BETA = ParamKind.INDEPENDENCE
GAMMA = ParamKind.UPPER_DOMINATION
IR = ParamKind.UPPER_IRREDUNDANCE

LETTERS = {
    "r": (BETA, BETA),
    "s": (IR, IR),
    "w": (IR, GAMMA),
    "t": (IR, BETA),
    "u": (GAMMA, GAMMA),
    "v": (GAMMA, BETA),
}

_SPEC = re.compile(r"^\s*([rstuvw])\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*$")


@dataclass(frozen=True)
class RamseyVariant:
    """``blue`` parameter must stay below ``m`` and ``red`` below ``n``."""

    blue: ParamKind
    red: ParamKind
    m: int
    n: int

    def __post_init__(self):
        if self.m < 2 or self.n < 2:
            raise ValueError("thresholds m and n must be at least 2")

    @classmethod
    def parse(cls, spec: str) -> "RamseyVariant":
        match = _SPEC.match(spec)
        if not match:
            raise ValueError(f"bad variant spec {spec!r}; expected e.g. 'u(3,4)'")
        letter, m, n = match.groups()
        blue, red = LETTERS[letter]
        return cls(blue, red, int(m), int(n))

    @classmethod
    def named(cls, letter: str, m: int, n: int) -> "RamseyVariant":
        blue, red = LETTERS[letter]
        return cls(blue, red, m, n)

    @property
    def letter(self) -> Optional[str]:
        for letter, pair in LETTERS.items():
            if pair == (self.blue, self.red):
                return letter
        return None

    @property
    def name(self) -> str:
        letter = self.letter
        if letter is None:
            return f"[{self.blue.value},{self.red.value}]({self.m},{self.n})"
        return f"{letter}({self.m},{self.n})"

    def __str__(self):
        return self.name


def param_value(kind: ParamKind, adj) -> int:
    if kind is BETA:
        return beta_value(adj)
    if kind is GAMMA:
        return gamma_value(adj)
    return ir_value(adj)


def param_at_least(kind: ParamKind, adj, k: int) -> bool:
    if beta_at_least(adj, k):
        return True
    if kind is BETA:
        return False
    if kind is GAMMA:
        return gamma_at_least(adj, k)
    return ir_at_least(adj, k)


@dataclass(frozen=True)
class AvoidanceVerdict:
    blue_value: int
    red_value: int
    avoids: bool


def evaluate_coloring(coloring: EdgeColoring, variant: RamseyVariant) -> AvoidanceVerdict:
    blue = coloring.blue.adj
    red = complement_rows(blue, coloring.order)
    b = param_value(variant.blue, blue)
    r = param_value(variant.red, red)
    return AvoidanceVerdict(b, r, b < variant.m and r < variant.n)


def avoids(adj, variant: RamseyVariant) -> bool:
    """Threshold form of :func:`evaluate_coloring`; red is only looked at if blue passes."""
    if param_at_least(variant.blue, adj, variant.m):
        return False
    return not param_at_least(variant.red, complement_rows(adj, len(adj)), variant.n)


class HereditaryBound:
    """Keep-filter for the generator: rejects extensions that already reach
    an induced-monotone threshold.  Assumes the parent passed."""

    def __init__(self, variant: RamseyVariant):
        self.variant = variant

    def __call__(self, adj, size) -> bool:
        v = self.variant
        new = size - 1
        bit = 1 << new
        nbrs = adj[new]
        old = bit - 1
        # independent sets through the new vertex
        if beta_at_least(adj, v.m - 1, old & ~nbrs):
            return False
        if v.blue is IR and ir_at_least(adj, v.m):
            return False
        red = complement_rows(adj, size)
        if beta_at_least(red, v.n - 1, nbrs):
            return False
        if v.red is IR and ir_at_least(red, v.n):
            return False
        return True

    def __reduce__(self):
        return (HereditaryBound, (self.variant,))


class AvoidanceMark:
    def __init__(self, variant: RamseyVariant):
        self.variant = variant

    def __call__(self, adj) -> bool:
        return avoids(adj, self.variant)

    def __reduce__(self):
        return (AvoidanceMark, (self.variant,))


@dataclass(frozen=True)
class LevelStats:
    order: int
    parents: int
    extensions: int       # one-vertex extensions of the surviving parents
    pruned: int           # extensions rejected by the hereditary bound
    canonical: int        # canonical colourings kept at this order
    avoiders: Optional[int] = None

    def to_text(self) -> str:
        av = "-" if self.avoiders is None else str(self.avoiders)
        return (f"level {self.order}: parents={self.parents} extensions={self.extensions} "
                f"pruned={self.pruned} canonical={self.canonical} avoiders={av}")

    @classmethod
    def from_text(cls, line: str) -> "LevelStats":
        m = re.match(r"level (\d+): parents=(\d+) extensions=(\d+) pruned=(\d+) "
                     r"canonical=(\d+) avoiders=(\d+|-)$", line.strip())
        if not m:
            raise ValueError(f"bad level line {line!r}")
        a = m.groups()
        return cls(int(a[0]), int(a[1]), int(a[2]), int(a[3]), int(a[4]),
                   None if a[5] == "-" else int(a[5]))


class _Levels:
    """Level-by-level expansion shared by certification and computation."""

    def __init__(self, variant: RamseyVariant, prune: bool, workers: int):
        self.variant = variant
        self.prune = prune
        self.expander = Expander(HereditaryBound(variant) if prune else None, workers)

    def __enter__(self):
        self.expander.__enter__()
        return self

    def __exit__(self, *exc):
        self.expander.__exit__(*exc)

    def step(self, parents, mark: bool):
        groups, flags, stats = self.expander.expand(parents, AvoidanceMark(self.variant) if mark else None)
        children = [c for g in groups for c in g]
        found = None
        if mark:
            found = [c for g, fl in zip(groups, flags) for c, ok in zip(g, fl) if ok]
        return children, found, stats


@dataclass
class Certificate:
    variant: RamseyVariant
    value: int
    witness: str              # graph6 of a blue graph on value-1 vertices
    examined: int             # one-vertex extensions checked at order ``value``
    pruning: bool
    levels: tuple = ()
    digest: str = ""

    def __post_init__(self):
        if not self.digest:
            self.digest = self.content_hash()

    def content_hash(self) -> str:
        payload = f"{self.variant.name}|{self.value}|{self.witness}|{self.examined}"
        return hashlib.sha256(payload.encode("ascii")).hexdigest()

    def to_text(self) -> str:
        lines = [
            "# nonclassical Ramsey certificate",
            f"variant = {self.variant.name}",
            f"blue_param = {self.variant.blue.value}",
            f"red_param = {self.variant.red.value}",
            f"m = {self.variant.m}",
            f"n = {self.variant.n}",
            f"value = {self.value}",
            f"witness_order = {self.value - 1}",
            f"witness_graph6 = {self.witness}",
            f"examined = {self.examined}",
            f"pruning = {'on' if self.pruning else 'off'}",
        ]
        lines += [lv.to_text() for lv in self.levels]
        lines.append(f"sha256 = {self.digest}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Certificate":
        fields: dict[str, str] = {}
        levels = []
        for raw in text.splitlines():
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if line.startswith("level "):
                levels.append(LevelStats.from_text(line))
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise ValueError(f"bad certificate line {raw!r}")
            fields[key.strip()] = value.strip()
        try:
            variant = RamseyVariant(ParamKind(fields["blue_param"]), ParamKind(fields["red_param"]),
                                    int(fields["m"]), int(fields["n"]))
            return cls(variant, int(fields["value"]), fields["witness_graph6"], int(fields["examined"]),
                       fields.get("pruning", "on") == "on", tuple(levels), fields["sha256"])
        except KeyError as exc:
            raise ValueError(f"certificate is missing field {exc.args[0]!r}") from None


class CertificateError(ValueError):
    pass


def verify_certificate(cert: Certificate) -> bool:
    """Re-check the lower-bound witness (and the record's integrity)."""
    witness = parse_graph6(cert.witness)
    if witness.order != cert.value - 1:
        raise CertificateError(f"witness has order {witness.order}, expected {cert.value - 1}")
    if cert.examined <= 0 or cert.digest != cert.content_hash():
        return False
    return avoids(witness.adj, cert.variant)


@dataclass
class RamseyResult:
    variant: RamseyVariant
    p_max: int
    value: Optional[int]
    certificate: Optional[Certificate]
    levels: list = field(default_factory=list)
    extremal: list = field(default_factory=list)   # graph6 of every avoider at value-1

    @property
    def determined(self) -> bool:
        return self.value is not None


def compute_ramsey(variant: RamseyVariant, p_max: int, *, prune: bool = True, workers: int = 1) -> RamseyResult:
    """Smallest ``p <= p_max`` with no avoidance colouring of K_p, with certificate."""
    if not prune and p_max > MAX_FULL_ORDER:
        raise ValueError(f"unpruned search is capped at order {MAX_FULL_ORDER}")
    levels: list[LevelStats] = []
    previous: list = []
    parents: list = [()]
    with _Levels(variant, prune, workers) as lv:
        for p in range(1, p_max + 1):
            children, found, stats = lv.step(parents, mark=True)
            levels.append(LevelStats(p, len(parents), stats["extensions"], stats["pruned"],
                                     len(children), len(found)))
            if not found:
                witness = encode_graph6(Graph(p - 1, previous[0]))
                cert = Certificate(variant, p, witness, stats["extensions"], prune, tuple(levels))
                extremal = [encode_graph6(Graph(p - 1, c)) for c in previous]
                return RamseyResult(variant, p_max, p, cert, levels, extremal)
            previous = found
            parents = children
    return RamseyResult(variant, p_max, None, None, levels)


@dataclass
class UpperCertification:
    variant: RamseyVariant
    order: int
    status: str                      # "exhausted", "counterexample" or "budget"
    counterexample: Optional[EdgeColoring] = None
    levels: list = field(default_factory=list)

    @property
    def examined(self) -> int:
        return self.levels[-1].extensions if self.levels else 0


def certify_upper(p: int, variant: RamseyVariant, *, prune: bool = True, workers: int = 1,
                  budget: Optional[int] = None) -> UpperCertification:
    """Exhaust all colourings of K_p; ``budget`` caps the total canonical nodes."""
    if p < 1:
        raise ValueError("order must be positive")
    if not prune and p > MAX_FULL_ORDER:
        raise ValueError(f"unpruned search is capped at order {MAX_FULL_ORDER}")
    levels: list[LevelStats] = []
    parents: list = [()]
    nodes = 0
    with _Levels(variant, prune, workers) as lv:
        for q in range(1, p + 1):
            last = q == p
            children, found, stats = lv.step(parents, mark=last)
            nodes += len(children)
            levels.append(LevelStats(q, len(parents), stats["extensions"], stats["pruned"],
                                     len(children), len(found) if last else None))
            if budget is not None and nodes > budget and not last:
                return UpperCertification(variant, p, "budget", None, levels)
            if last:
                if found:
                    blue = Graph(p, found[0])
                    return UpperCertification(variant, p, "counterexample", EdgeColoring(p, blue), levels)
                return UpperCertification(variant, p, "exhausted", None, levels)
            parents = children
    raise AssertionError("unreachable")


@dataclass
class AvoidanceSearch:
    coloring: Optional[EdgeColoring]
    nodes: int
    complete: bool     # the whole pruned tree was walked

    @property
    def found(self) -> bool:
        return self.coloring is not None


def find_avoidance(p: int, variant: RamseyVariant, budget: Optional[int] = None) -> AvoidanceSearch:
    """Depth-first search for an avoidance colouring of K_p.

    Deterministic for a given budget.  When the budget runs out the result
    says nothing about existence; a complete walk without a find proves that
    none exists.
    """
    if p < 1:
        raise ValueError("order must be positive")
    keep = HereditaryBound(variant)
    nodes = 0
    stack = [iter(extend((), keep))]
    depth = [1]
    while stack:
        child = next(stack[-1], None)
        if child is None:
            stack.pop()
            depth.pop()
            continue
        nodes += 1
        if budget is not None and nodes > budget:
            return AvoidanceSearch(None, nodes - 1, False)
        order = depth[-1]
        if order == p:
            if avoids(child, variant):
                return AvoidanceSearch(EdgeColoring(p, Graph(p, child)), nodes, False)
            continue
        stack.append(iter(extend(child, keep)))
        depth.append(order + 1)
    return AvoidanceSearch(None, nodes, True)
