"""Search for co-det and strongly-co-det-candidate graph pairs.

Two non-isomorphic graphs are co-det when their adjacency determinants
agree exactly. A co-det pair is a strongly-co-det *candidate* when a budget
of independent random draws never separates ``det f(A)`` from ``det f(B)``.
Surviving the budget is evidence only; no finite sample proves the property.

Report format (tab separated, one record per line, after ``#`` metadata):

    n  id_a  id_b  g6_a  g6_b  det_a  det_b  oracle  attempted  distinguished
    classification  perturbed_distinguished

``oracle`` is always ``non-similar``; ``perturbed_distinguished`` is the
number of distinguishing draws after adding 1 to diagonal entry 0 of both
matrices (``-`` when the pair was not re-stressed).
"""

from __future__ import annotations

import enum
from collections.abc import Iterable
from dataclasses import dataclass, field, replace
from itertools import combinations

from .detsim import TestParams, sample_coefficients, similarity_trial
from .graphio import Graph, adjacency_matrix, to_graph6
from .matrix import Matrix, det_exact
from .oracle import brute_force_similar

DEFAULT_BUDGET = 100

REPORT_COLUMNS = ("n", "id_a", "id_b", "g6_a", "g6_b", "det_a", "det_b", "oracle",
                  "attempted", "distinguished", "classification",
                  "perturbed_distinguished")


class Classification(enum.Enum):
    DISTINGUISHED = "distinguished"
    CANDIDATE = "strongly-co-det-candidate"


@dataclass(frozen=True)
class CodetPair:
    id_a: int
    id_b: int
    graph_a: Graph
    graph_b: Graph
    det_a: int
    det_b: int


@dataclass
class PairRecord:
    n: int
    det_a: int
    det_b: int
    attempted: int
    distinguished: int
    perturbed_distinguished: int | None = None
    id_a: int | None = None
    id_b: int | None = None
    g6_a: str = "-"
    g6_b: str = "-"
    oracle: str = "non-similar"

    @property
    def classification(self) -> Classification:
        if self.distinguished == 0:
            return Classification.CANDIDATE
        return Classification.DISTINGUISHED

    def to_line(self) -> str:
        fields = (self.n, _dash(self.id_a), _dash(self.id_b), self.g6_a, self.g6_b,
                  self.det_a, self.det_b, self.oracle, self.attempted, self.distinguished,
                  self.classification.value, _dash(self.perturbed_distinguished))
        return "\t".join(map(str, fields))


def _dash(x) -> str:
    return "-" if x is None else str(x)


@dataclass
class HuntReport:
    seed: int
    p: int
    budget: int
    records: list[PairRecord] = field(default_factory=list)
    graphs_examined: int = 0
    pairs_examined: int = 0

    @property
    def candidates(self) -> list[PairRecord]:
        return [r for r in self.records if r.classification is Classification.CANDIDATE]

    def to_tsv(self) -> str:
        lines = [f"# seed={self.seed}\tp={self.p}\tbudget={self.budget}",
                 f"# graphs={self.graphs_examined}\tpairs={self.pairs_examined}"
                 f"\tcodet={len(self.records)}\tcandidates={len(self.candidates)}",
                 "# candidate = survived the whole budget; evidence, not proof",
                 "#" + "\t".join(REPORT_COLUMNS)]
        lines += [r.to_line() for r in self.records]
        return "\n".join(lines) + "\n"

    def summary(self) -> str:
        return (f"graphs examined: {self.graphs_examined}\n"
                f"pairs examined: {self.pairs_examined}\n"
                f"co-det pairs: {len(self.records)}\n"
                f"strongly-co-det candidates (budget {self.budget}): {len(self.candidates)}")


def find_codet_pairs(graphs: list[Graph]) -> list[CodetPair]:
    """Non-isomorphic pairs with equal exact adjacency determinants.

    ``id`` values are positions in ``graphs``; pairs come out ordered by
    ``(id_a, id_b)`` with ``id_a < id_b``.
    """
    if len({G.n for G in graphs}) > 1:
        raise ValueError("all graphs must have the same vertex count")
    mats = [adjacency_matrix(G) for G in graphs]
    dets = [det_exact(A) for A in mats]
    out = []
    for i, j in combinations(range(len(graphs)), 2):
        if dets[i] != dets[j]:
            continue
        if brute_force_similar(mats[i], mats[j]) is not None:
            continue
        out.append(CodetPair(i, j, graphs[i], graphs[j], dets[i], dets[j]))
    return out


def count_distinguishing(A: Matrix, B: Matrix, budget: int, params: TestParams) -> int:
    if budget < 1:
        raise ValueError("budget must be at least 1")
    params = params.bind(A.n)
    A, B = A.to_ring(params.ring), B.to_ring(params.ring)
    hits = 0
    for t in range(budget):
        draw = sample_coefficients(A.n, params.p, params.seed, t)
        da, db = similarity_trial(A, B, draw)
        hits += da != db
    return hits


def diagonal_perturbation(A: Matrix, index: int, value: int) -> Matrix:
    """Copy of A with ``value`` added to diagonal entry ``index``."""
    if not 0 <= index < A.n:
        raise IndexError(f"diagonal index {index} outside 0..{A.n - 1}")
    if A.ring.reduce(value) == 0:
        raise ValueError("perturbation value must be nonzero")
    rows = A.tolist()
    rows[index][index] += value
    return Matrix(rows, A.ring)


def stress_pair(A: Matrix, B: Matrix, budget: int = DEFAULT_BUDGET,
                params: TestParams = TestParams(), *, perturb: bool = True) -> PairRecord:
    """Run ``budget`` draws on an oracle-confirmed non-similar pair.

    A and B must be exact. Candidates are re-stressed after the
    matched-index edit ``A[0][0] += 1, B[0][0] += 1`` when ``perturb`` is set.
    """
    hits = count_distinguishing(A, B, budget, params)
    record = PairRecord(A.n, det_exact(A), det_exact(B), budget, hits)
    if hits == 0 and perturb:
        record.perturbed_distinguished = count_distinguishing(
            diagonal_perturbation(A, 0, 1), diagonal_perturbation(B, 0, 1), budget, params)
    return record


def hunt(graphs: Iterable[Graph], budget: int = DEFAULT_BUDGET,
         params: TestParams = TestParams()) -> HuntReport:
    """Co-det search over isomorphism-class representatives, grouped by n."""
    by_n: dict[int, list[Graph]] = {}
    for G in graphs:
        by_n.setdefault(G.n, []).append(G)
    report = HuntReport(params.seed, params.p, budget)
    for n in sorted(by_n):
        group = by_n[n]
        report.graphs_examined += len(group)
        report.pairs_examined += len(group) * (len(group) - 1) // 2
        for pair in find_codet_pairs(group):
            record = stress_pair(adjacency_matrix(pair.graph_a), adjacency_matrix(pair.graph_b),
                                 budget, params)
            report.records.append(replace(record, id_a=pair.id_a, id_b=pair.id_b,
                                          g6_a=to_graph6(pair.graph_a),
                                          g6_b=to_graph6(pair.graph_b)))
    return report
