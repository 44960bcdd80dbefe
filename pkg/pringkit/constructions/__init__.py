# Quotient rings, trivial extensions and amalgamations
