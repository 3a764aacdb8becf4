"""Ontology-driven essay grading toolkit."""

__version__ = "0.1.0"
