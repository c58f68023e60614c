from .brauer import BrauerTreeSpec, brauer_mv, brauer_record, brauer_report
from .main import cli, result_record

__all__ = [
    "BrauerTreeSpec",
    "brauer_mv",
    "brauer_record",
    "brauer_report",
    "cli",
    "result_record",
]
