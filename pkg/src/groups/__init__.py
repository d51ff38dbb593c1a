"""Symmetric group, conjugacy classes and the induced action on vertex pairs."""
