# Finite ring families and homomorphisms
