"""Brute-force ground truth by canonical forms."""
