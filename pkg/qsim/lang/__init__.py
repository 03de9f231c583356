from .execute import (
    ExecutionReport,
    MeasurementRecord,
    execute,
    register_statement_kind,
)
from .nodes import GATE_TOKENS, Statement, StatementKind, render
from .parse import parse
from .program import Program, load_corpus
