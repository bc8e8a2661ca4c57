"""Query expansion experiments: TREC ingestion, inverted index, TF-IDF/BM25/InL2
retrieval, relatedness-based expansion term selection and trec_eval-style metrics."""

from ._core import (
    DuplicateIdError,
    Document,
    Index,
    InvalidArgument,
    IoError,
    ParseError,
    Qrel,
    Relatedness,
    RelatednessModel,
    Topic,
    analyze,
    average_precision,
    bo1_weight,
    collocation_index,
    evaluate,
    ewc,
    interpolated_pr,
    load_documents,
    load_qrels,
    load_topics,
    parse_documents,
    parse_qrels,
    parse_topics,
    r_precision,
    run,
    stem,
)

__all__ = [
    "DuplicateIdError",
    "Document",
    "Index",
    "InvalidArgument",
    "IoError",
    "ParseError",
    "Qrel",
    "Relatedness",
    "RelatednessModel",
    "Topic",
    "analyze",
    "average_precision",
    "bo1_weight",
    "collocation_index",
    "evaluate",
    "ewc",
    "interpolated_pr",
    "load_documents",
    "load_qrels",
    "load_topics",
    "parse_documents",
    "parse_qrels",
    "parse_topics",
    "r_precision",
    "run",
    "stem",
]
