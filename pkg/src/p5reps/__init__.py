"""Exact rational representation theory for groups of order p^5 (p odd)."""

__all__ = ["cyclotomic", "pcgroup", "characters", "catalog", "pairs", "reps", "wedderburn", "ingest", "cli"]
