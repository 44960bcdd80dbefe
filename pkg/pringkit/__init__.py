# Finite p-ring toolkit package
