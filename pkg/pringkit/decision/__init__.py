# Oracles, theorem fast paths and the McCoy decomposition
