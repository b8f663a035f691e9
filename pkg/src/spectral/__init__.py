"""Number theory, graph construction and dense linear algebra for unitary Cayley graphs."""
