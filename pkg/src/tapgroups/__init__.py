"""Free-group word calculus, order-derived seminorms, weights and multipliers,
and an experiment lab for multiplier products in linear topological groups."""

__version__ = "0.1.0"
