"""Exact symbolic verification of quantized Painleve monodromy algebras,
Sklyanin-type algebras and their Poisson/semiclassical counterparts."""

__version__ = "0.1.0"
