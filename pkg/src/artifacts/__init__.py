"""
Table artifact writing utilities.

Goal: stable, hashed CSV tables of graph counts.
"""
