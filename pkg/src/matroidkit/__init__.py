"""Exact small-matroid toolkit."""
