from dblhatch.cli.commands import main
from dblhatch.cli.corpus import CORPUS, corpus_entry, corpus_names
from dblhatch.cli.dblx import emit_dblx, parse_dblx
from dblhatch.cli.report import Report

__all__ = [
    "main",
    "CORPUS",
    "corpus_entry",
    "corpus_names",
    "emit_dblx",
    "parse_dblx",
    "Report",
]
