"""Determinants of polynomial matrices."""
