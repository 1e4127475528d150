"""Obstructions to Bing spaces among 2-complexes, and the explicit self-maps behind them."""

__version__ = "0.1.0"
