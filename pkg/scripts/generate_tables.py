"""
Write deformation ring tables for every N(e, ℓ) of a grid as JSON files
"""
import os
import sys
from pathlib import Path
from typing import List

sys.path.insert(0, os.path.abspath('.'))

import click
from pydantic import TypeAdapter

from config.setting import settings
from src.cli.main import result_record
from src.core.log import configure_logging, get_logger
from src.core.models import ResultRecord
from src.deformation.presentation import udr_presentation
from src.nakayama.algebra import NakayamaSpec
from src.ring.coefficients import CoefficientDomainFactory

logger = get_logger(__name__)


def table_records(e: int, ell: int, p: int) -> List[ResultRecord]:
    coefficients = CoefficientDomainFactory.prime_field(p)
    return [
        result_record(V, udr_presentation(V, coefficients), {"e": e, "ell": ell, "top": V.top, "len": V.length})
        for V in NakayamaSpec(e, ell).modules()
    ]


@click.command()
@click.option("--e-max", type=int, default=3, show_default=True)
@click.option("--ell-max", type=int, default=9, show_default=True)
@click.option("--p", type=int, default=None)
@click.option("--out", "out_dir", type=click.Path(file_okay=False), default="data/tables", show_default=True)
def main(e_max, ell_max, p, out_dir):
    """Generate and save one table per algebra"""
    configure_logging()
    p = p or settings.DEFAULT_PRIME
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    adapter = TypeAdapter(List[ResultRecord])
    written = 0
    for e in range(1, e_max + 1):
        for ell in range(2, ell_max + 1):
            records = table_records(e, ell, p)
            path = out / f"nakayama_e{e}_ell{ell}.json"
            path.write_bytes(adapter.dump_json(records, by_alias=True, indent=2))
            logger.info("table_written", e=e, ell=ell, modules=len(records), path=str(path))
            written += 1
    click.echo(f"Wrote {written} tables to {out}/")


if __name__ == "__main__":
    main()
