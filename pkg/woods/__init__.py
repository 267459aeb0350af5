"""Certified constructions of well-rounded unimodular lattices with large covering radius."""

__all__: list[str] = []
