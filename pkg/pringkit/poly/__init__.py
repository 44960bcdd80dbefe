# Polynomials over prime fields
