"""Explain Python tracebacks with a summarized community answer."""

from pathlib import Path as _Path

from ._core import (  # noqa: F401
    EmptyQuery,
    EnhancedMessage,
    ErrorKind,
    KnowledgeTables,
    MalformedTable,
    NotAnError,
    ParsedError,
    QueryPlan,
    SearchQuery,
    TransportError,
    UnknownKind,
    build_query,
    clean_format,
    default_data_dir,
    doc_message,
    enhance,
    fix_typo,
    gestalt_ratio,
    load_tables,
    luhn_summarize,
    parse_traceback,
    plan_query,
    split_answer,
    split_sentences,
)

_tables = None


def tables():
    """Knowledge tables shipped with the package, loaded once."""
    global _tables
    if _tables is None:
        bundled = _Path(__file__).with_name("data")
        _tables = load_tables(bundled if bundled.is_dir() else default_data_dir())
    return _tables
