"""Generating functions of simple graphs and multigraphs."""
