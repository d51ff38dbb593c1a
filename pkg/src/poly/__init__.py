"""Exact polynomial and truncated series arithmetic."""
