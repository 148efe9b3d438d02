"""Exact algebra for the deformed Virasoro algebra, level-N free-field
representations of the Ding-Iohara-Miki algebra and their q -> 0 crystal limit."""

__version__ = "0.1.0"
