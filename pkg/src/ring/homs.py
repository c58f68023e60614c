"""Local homomorphisms from a presented complete local ring into a finite test ring."""

from itertools import product
from typing import Optional, Sequence

import numpy as np

from config.setting import settings
from src.core.exceptions import ResourceCapError
from src.core.log import get_logger
from src.ring.artin import ArtinTestRing
from src.ring.polynomial import TruncatedPolynomial

logger = get_logger(__name__)


def evaluate(p: TruncatedPolynomial, values: np.ndarray, R: ArtinTestRing) -> np.ndarray:
    """Image of p under t_j -> values[..., j, :] (a batch of ring-element assignments)"""
    batch_shape = values.shape[:-2]
    result = np.zeros(batch_shape + (R.dimension,), dtype=np.int64)
    if p.is_zero:
        return result
    max_exponent = max(max(m) for m in p.element) if p.ring.n else 0
    powers = []
    for j in range(p.ring.n):
        column = [np.broadcast_to(R.one(), batch_shape + (R.dimension,)).copy()]
        for _ in range(max_exponent):
            column.append(R.multiply(column[-1], values[..., j, :]))
        powers.append(column)
    for monomial, value in p.python_terms():
        term = np.broadcast_to(R.one(), batch_shape + (R.dimension,)).copy()
        for j, e in enumerate(monomial):
            if e:
                term = R.multiply(term, powers[j][e])
        result = np.mod(result + (int(value) % R.p) * term, R.p)
    return result


def count_homs(pres, R: ArtinTestRing, cap: Optional[int] = None, batch_size: Optional[int] = None) -> int:
    """Number of local k-algebra maps k[[t_1..t_n]]/(generators) -> R.

    Each t_j runs over the maximal ideal of R; an assignment counts when every
    generator maps to zero. `pres` needs `n` and `generators`.
    """
    n = pres.n
    if n == 0:
        return 1
    cap = cap if cap is not None else settings.COUNT_HOMS_MAX_ASSIGNMENTS
    batch_size = batch_size or settings.ORACLE_BATCH_SIZE
    elements = R.maximal_ideal_elements()
    total = len(elements) ** n
    if total > cap:
        raise ResourceCapError(f"hom count into {R.name} over {n} variables", total, cap)

    generators: Sequence[TruncatedPolynomial] = list(pres.generators)
    # leading variable partitions the space; each slice is an independent count
    count = 0
    rest = list(product(range(len(elements)), repeat=n - 1))
    for leading in range(len(elements)):
        for start in range(0, len(rest), batch_size):
            block = rest[start:start + batch_size]
            chunk = np.array(block, dtype=np.int64).reshape(len(block), n - 1)
            indices = np.hstack([np.full((len(chunk), 1), leading, dtype=np.int64), chunk])
            values = elements[indices]
            alive = np.ones(len(chunk), dtype=bool)
            for g in generators:
                alive &= ~np.any(evaluate(g, values, R), axis=-1)
            count += int(alive.sum())
    logger.debug("homs_counted", ring=R.name, n=n, assignments=total, homs=count)
    return count
