"""Brauer tree algebras through their Nakayama model N(e, me + 1).

Only the edge count e and the exceptional multiplicity m enter the presentation;
the shape of the tree does not.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from src.core.exceptions import IndexOutOfRangeError, UnsupportedModeError
from src.core.models import BrauerRecord, VerificationReport
from src.deformation.presentation import udr_presentation
from src.nakayama.algebra import NakayamaSpec


@dataclass(frozen=True)
class BrauerTreeSpec:
    e: int
    m: int

    def __post_init__(self):
        if self.e < 1:
            raise UnsupportedModeError(f"a Brauer tree needs e >= 1 edges, got {self.e}")
        if self.m < 1:
            raise UnsupportedModeError(f"exceptional multiplicity must be >= 1, got {self.m}")

    @property
    def nakayama(self) -> NakayamaSpec:
        return NakayamaSpec(self.e, self.m * self.e + 1)

    @property
    def max_distance(self) -> int:
        return (self.m * self.e + 1) // 2 - 1

    def distances(self) -> List[int]:
        return list(range(self.max_distance + 1))


def brauer_mv(e: int, m: int, d_v: int) -> Tuple[int, int, Optional[int]]:
    """(n, i, m_V) for a module at distance d_V; m_V is None when n = 0 (R = k)"""
    tree = BrauerTreeSpec(e, m)
    if not 0 <= d_v <= tree.max_distance:
        raise IndexOutOfRangeError(f"distance {d_v} outside 0..{tree.max_distance} for e={e}, m={m}")
    n, i = divmod(d_v + 1, e)
    if n == 0:
        return n, i, None
    if e == 1:
        return n, i, m + 1
    return n, i, m if i in (0, 1) else m - 1


def brauer_record(e: int, m: int, d_v: int) -> BrauerRecord:
    n, i, mv = brauer_mv(e, m, d_v)
    tree = BrauerTreeSpec(e, m)
    presentation = udr_presentation(tree.nakayama.module(1, d_v + 1))
    return BrauerRecord(
        e=e,
        multiplicity=m,
        distance=d_v,
        n=n,
        i=i,
        m_v=mv,
        generators=presentation.generator_texts(),
        agrees_with_nakayama=(presentation.n, presentation.m_v) == (n, mv),
    )


def brauer_report(e_max: int, m_max: int) -> VerificationReport:
    """The corollary's m_V agrees with the Nakayama presentation for every e, m and distance"""
    report = VerificationReport(subject=f"Brauer trees e <= {e_max}, m <= {m_max}")
    for e in range(1, e_max + 1):
        for m in range(1, m_max + 1):
            for d_v in BrauerTreeSpec(e, m).distances():
                record = brauer_record(e, m, d_v)
                report.add(
                    f"e={e} m={m} d={d_v}",
                    record.agrees_with_nakayama,
                    f"n={record.n} i={record.i} m_V={record.m_v}",
                )
    return report
