"""Skew monoidal structures on actegories, built from strong actions and
adjunctions and checked exhaustively on finite carriers."""

__version__ = "0.1.0"
