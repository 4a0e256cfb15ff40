# isolation/__init__.py
from .services import (
    IsolationReport, analyze, is_cp1, is_isolated, is_isolated_simple,
    isolation_report, isolation_witness, non_isolated_closed_under_conjugation,
)

__all__ = [
    'IsolationReport', 'analyze', 'is_cp1', 'is_isolated', 'is_isolated_simple',
    'isolation_report', 'isolation_witness', 'non_isolated_closed_under_conjugation',
]
