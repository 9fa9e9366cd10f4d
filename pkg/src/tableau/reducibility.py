"""S-reducibility: stage partitions whose indicator space is A-invariant."""

import itertools
import logging
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from config.settings import WsoConfig
from core.exceptions import CapExceededError, ValidationError
from exact import rmatrix
from tableau.model import ReducibilityCertificate, Tableau

logger = logging.getLogger(__name__)

Partition = Tuple[Tuple[int, ...], ...]


def set_partitions(items: Sequence[int]) -> Iterator[List[List[int]]]:
    """All set partitions of ``items``, each block in increasing order."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for smaller in set_partitions(rest):
        yield [[first]] + smaller
        for k in range(len(smaller)):
            yield smaller[:k] + [[first] + smaller[k]] + smaller[k + 1:]


def _abscissa_groups(tableau: Tableau) -> List[List[int]]:
    groups: Dict[Fraction, List[int]] = {}
    for index, value in enumerate(tableau.c):
        groups.setdefault(value, []).append(index)
    return list(groups.values())


def _candidate_partitions(tableau: Tableau) -> List[Partition]:
    per_group = [list(set_partitions(group)) for group in _abscissa_groups(tableau)]
    candidates = []
    for combination in itertools.product(*per_group):
        blocks = [tuple(block) for group in combination for block in group]
        if len(blocks) == tableau.s:
            continue
        blocks.sort(key=lambda block: block[0])
        candidates.append(tuple(blocks))
    candidates.sort(key=lambda partition: -len(partition))
    return candidates


def _reduced_matrix(tableau: Tableau, partition: Partition) -> Optional[List[List[Fraction]]]:
    """B with A S = S B, or None when the block sums are not block-constant."""
    B = []
    for block_i in partition:
        row = None
        for stage in block_i:
            sums = [sum((tableau.A[stage, k] for k in block_j), Fraction(0)) for block_j in partition]
            if row is None:
                row = sums
            elif sums != row:
                return None
        B.append(row)
    return B


def s_reducibility(tableau: Tableau) -> ReducibilityCertificate:
    """
    Search for an S-reducing partition.

    Only refinements of the equal-abscissa partition are tried, largest
    block count first; the first hit is returned.

    Raises:
        CapExceededError: more stages than the exhaustive search allows.
    """
    cap = WsoConfig.REDUCIBILITY_MAX_STAGES
    if tableau.s > cap:
        raise CapExceededError(
            f"S-reducibility search supports at most {cap} stages, got {tableau.s}",
            cap=cap,
            operation="s_reducibility",
        )

    candidates = _candidate_partitions(tableau)
    for searched, partition in enumerate(candidates, start=1):
        B = _reduced_matrix(tableau, partition)
        if B is not None:
            logger.debug("%s reducible to %d stages after %d partitions", tableau.name, len(partition), searched)
            return ReducibilityCertificate(
                reducible=True,
                partition=partition,
                B=rmatrix(B, cols=len(partition)),
                searched=searched,
            )
    return ReducibilityCertificate(reducible=False, searched=len(candidates))


def partition_matrix(partition: Partition, s: int):
    """Indicator matrix S (s x r) of a stage partition."""
    return rmatrix(
        [[int(stage in block) for block in partition] for stage in range(s)],
        cols=len(partition),
    )


def reduce_by_certificate(tableau: Tableau, certificate: ReducibilityCertificate) -> Tableau:
    """
    The equivalent smaller tableau: A* = B, weights summed per block.

    Blocks are ordered by their smallest stage, which keeps B strictly lower
    triangular for explicit methods.
    """
    if not certificate.reducible:
        raise ValidationError("Certificate does not describe a reduction", field="certificate")
    partition = certificate.partition
    weights = [sum((tableau.b[k] for k in block), Fraction(0)) for block in partition]
    return Tableau.build(
        A=certificate.B.tolist(),
        b=weights,
        c=[tableau.c[block[0]] for block in partition],
        name=f"{tableau.name} reduced" if tableau.name else "",
    )
