"""Shared corpus and brute-force oracles for the test suite."""

from __future__ import annotations

import itertools

import numpy as np

from vertex_energy import Graph, new_graph

CORPUS_SEED = 20240611
CORPUS_SIZE = 200


def random_graph(rng: np.random.Generator, n_min: int = 2, n_max: int = 10) -> Graph:
    n = int(rng.integers(n_min, n_max + 1))
    p = rng.uniform(0.15, 0.85)
    edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
    return new_graph(n, edges)


def random_corpus(size: int = CORPUS_SIZE, seed: int = CORPUS_SEED, **kw) -> list[Graph]:
    rng = np.random.default_rng(seed)
    return [random_graph(rng, **kw) for _ in range(size)]


def brute_force_closed_walks(g: Graph, v: int, k: int) -> int:
    """Enumerate closed walks of length ``k`` at ``v`` by explicit recursion over neighbours."""
    nbrs = {u: g.neighbors(u) for u in range(g.n)}

    def count(at: int, left: int) -> int:
        if left == 0:
            return int(at == v)
        return sum(count(w, left - 1) for w in nbrs[at])

    return count(v, k)


PAPER_FRUCHT_EIGENVALUES = [
    -2.33866, -2, -1.80194, -1.45106, -1, -0.44504, 0, 0.51912, 1.24698, 2, 2.2706, 3,
]

PAPER_FRUCHT_ENERGIES = [
    1.50636, 1.55632, 1.45627, 1.44865, 1.54705, 1.52488,
    1.48642, 1.54800, 1.43233, 1.44129, 1.55632, 1.56952,
]

# rows k = 0..11, columns v1..v12
PAPER_TABLE_1 = [
    [1] * 12,
    [0] * 12,
    [3] * 12,
    [2, 2, 0, 2, 2, 2, 2, 2, 0, 2, 2, 0],
    [15, 15, 17, 17, 15, 15, 15, 15, 17, 17, 15, 15],
    [22, 20, 8, 20, 22, 20, 22, 22, 6, 20, 20, 8],
    [95, 95, 111, 111, 95, 93, 93, 95, 113, 113, 95, 97],
    [200, 182, 116, 184, 200, 182, 200, 198, 100, 180, 182, 120],
    [701, 697, 799, 799, 699, 677, 679, 699, 823, 821, 697, 721],
    [1756, 1638, 1280, 1658, 1758, 1636, 1756, 1736, 1178, 1614, 1638, 1324],
    [5653, 5603, 6209, 6205, 5627, 5461, 5487, 5627, 6401, 6373, 5603, 5797],
    [15422, 14732, 12796, 14870, 15452, 14708, 15422, 15286, 12188, 14532, 14732, 13132],
]

SQRT2 = 2 ** 0.5

# roots of the characteristic polynomials, ascending with multiplicity
PAPER_SPECTRA = {
    "desargues": [-3] + [-2] * 4 + [-1] * 5 + [1] * 5 + [2] * 4 + [3],
    "tutte_coxeter": [-3] + [-2] * 9 + [0] * 10 + [2] * 9 + [3],
    "heawood": [-3] + [-SQRT2] * 6 + [SQRT2] * 6 + [3],
    "shrikhande": [-2] * 9 + [2] * 6 + [6],
    "petersen": [-2] * 4 + [1] * 5 + [3],
}

# class weights per vertex, eigenvalue classes ascending; 5-decimal rounded values
PAPER_CLASS_WEIGHTS = {
    "desargues": [0.05, 0.2, 0.25, 0.25, 0.2, 0.05],
    "tutte_coxeter": [0.03333, 0.3, 0.33333, 0.3, 0.03333],
    "heawood": [0.07143, 0.42857, 0.42857, 0.07143],
    "shrikhande": [0.5625, 0.375, 0.0625],
    # printed in the order (3, -2, 1) as (0.1, 0.4, 0.5)
    "petersen": [0.4, 0.5, 0.1],
}

PAPER_CONSTANT_ENERGY = {
    "desargues": 1.6,
    "tutte_coxeter": 1.4,
    "heawood": (6 + 12 * SQRT2) / 14,
    "shrikhande": 2.25,
    "petersen": 1.6,
}
