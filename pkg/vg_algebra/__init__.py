"""Exact Varchenko-Gelfand algebras of real central hyperplane
arrangements."""
