"""Exact enumeration of graphs and multigraphs by edge count."""
