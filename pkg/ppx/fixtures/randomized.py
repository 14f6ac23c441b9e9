"""
Seeded random instances: terms, chain complexes and identified polyplexes.
"""

import logging
import random
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

from sympy import Matrix, eye

from ppx.core.algebra import boundary, compose, dimension, normalize
from ppx.core.constructions import identify_cells
from ppx.core.polygraph import ClassTag, Polygraph
from ppx.core.terms import Gen, Sign, Term, rename, term_size
from ppx.core.validation import validate
from ppx.errors import PolygraphError
from ppx.linearization.globular import ChainComplex
from ppx.linearization.vectors import Vector
from ppx.polyplex.polyplex import Polyplex
from ppx.polyplex.regularity import is_regular

LOGGER = logging.getLogger(__name__)


def random_terms(p: Polygraph, count: int, seed: int = 0, max_size: int = 12) -> List[Term]:
    """
    Random well-typed composites of the cells of p.

    Args:
        p: A positive polygraph
        count: Number of terms wanted
        seed: Random seed
        max_size: Largest number of nodes in a term

    Returns:
        count terms, generators included
    """
    rng = random.Random(seed)
    pool: List[Term] = [Gen(c.id) for c in p]
    dims: Dict[Term, int] = {t: dimension(p, t) for t in pool}
    seen = set(pool)
    attempts = 0
    while len(pool) < count and attempts < 50 * count:
        attempts += 1
        t = rng.choice(pool)
        if dims[t] == 0:
            continue
        k = rng.randrange(dims[t])
        target = normalize(p, boundary(p, t, k, Sign.PLUS))
        partners = [
            u for u in pool
            if dims[u] > k and normalize(p, boundary(p, u, k, Sign.MINUS)) == target
        ]
        if not partners:
            continue
        u = rng.choice(partners)
        if term_size(t) + term_size(u) > max_size:
            continue
        try:
            c = compose(p, t, u, k)
        except PolygraphError:
            continue
        if c in seen:
            continue
        seen.add(c)
        pool.append(c)
        dims[c] = max(dims[t], dims[u])
    LOGGER.debug("Generated %d terms in %d attempts", len(pool), attempts)
    if len(pool) >= count:
        return pool[:count]
    return [rng.choice(pool) for _ in range(count)]


def _unimodular(rng: random.Random, n: int, steps: int = 6) -> Tuple[Matrix, Matrix]:
    """A random integer matrix of determinant +-1 and its inverse."""
    u, inv = eye(n), eye(n)
    if n < 2:
        return u, inv
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        c = rng.choice((-2, -1, 1, 2))
        e = eye(n)
        e[i, j] = c
        e_inv = eye(n)
        e_inv[i, j] = -c
        u = e * u
        inv = inv * e_inv
    return u, inv


def random_chain_complex(
    seed: int = 0, max_grade: int = 4, max_basis: int = 6, augmented: bool = False
) -> ChainComplex:
    """
    A random bounded chain complex with basis.

    Elementary pieces b -> c a (a in grade n, b in grade n + 1) and free
    generators are laid out, then every grade is conjugated by a random
    unimodular matrix.

    Args:
        seed: Random seed
        max_grade: Largest grade
        max_basis: Largest total basis size
        augmented: Attach the augmentation 1 on a single 0-generator
    """
    rng = random.Random(seed)
    top = rng.randint(0, max_grade)
    total = rng.randint(top + 1, max(top + 1, max_basis))
    sizes = [1] * (top + 1)
    for _ in range(total - top - 1):
        sizes[rng.randrange(top + 1)] += 1
    if augmented:
        sizes[0] = 1
    used = [set() for _ in range(top + 1)]
    d: List[Matrix] = [Matrix.zeros(0, sizes[0])]
    for n in range(1, top + 1):
        m = Matrix.zeros(sizes[n - 1], sizes[n])
        if not augmented or n > 1:
            for col in range(sizes[n]):
                free = [r for r in range(sizes[n - 1]) if r not in used[n - 1]]
                if free and rng.random() < 0.6:
                    row = rng.choice(free)
                    used[n - 1].add(row)
                    used[n].add(col)
                    m[row, col] = rng.choice((1, 1, 2, 3))
        d.append(m)
    conj = [_unimodular(rng, s) for s in sizes]
    for n in range(1, top + 1):
        d[n] = conj[n - 1][0] * d[n] * conj[n][1]
    keys: List[List[Hashable]] = [[f"c{n}_{i}" for i in range(s)] for n, s in enumerate(sizes)]
    grades = {key: n for n, level in enumerate(keys) for key in level}
    differential: Dict[Hashable, Vector] = {}
    for n in range(1, top + 1):
        for col, key in enumerate(keys[n]):
            differential[key] = Vector(
                (keys[n - 1][row], int(d[n][row, col])) for row in range(sizes[n - 1]) if d[n][row, col] != 0
            )
    augmentation = {keys[0][0]: 1} if augmented else None
    return ChainComplex(grades, differential, augmentation)


def _pairs(p: Polygraph) -> List[Tuple[int, int]]:
    by_dim: Dict[int, List[int]] = {}
    for c in p:
        by_dim.setdefault(c.dim, []).append(c.id)
    return [(a, b) for ids in by_dim.values() for i, a in enumerate(ids) for b in ids[i + 1:]]


def random_identifications(
    polyplexes: Sequence[Polyplex],
    count: int,
    seed: int = 0,
    max_attempts: Optional[int] = None,
    regular_only: bool = True,
) -> List[Tuple[Polygraph, Term]]:
    """
    Polygraphs obtained from polyplexes by identifying two cells.

    Only well-formed quotients are kept, and with regular_only only the
    regular ones.

    Returns:
        Up to count pairs of (quotient, image of the universal arrow)
    """
    rng = random.Random(seed)
    candidates = [(pp, pair) for pp in polyplexes for pair in _pairs(pp.underlying)]
    if not candidates:
        return []
    found: List[Tuple[Polygraph, Term]] = []
    attempts = 0
    limit = max_attempts if max_attempts is not None else 20 * count
    while len(found) < count and attempts < limit:
        attempts += 1
        pp, pair = rng.choice(candidates)
        q, f = identify_cells(pp.underlying, [pair])
        q = q.with_class(ClassTag.REGULAR)
        if not validate(q).ok or (regular_only and not is_regular(q)):
            continue
        arrow = rename(pp.universal, {x: f.image(x).cell for x in pp.underlying.ids})  # type: ignore[union-attr]
        found.append((q, arrow))
    LOGGER.debug("Kept %d identified polyplexes out of %d attempts", len(found), attempts)
    return found
