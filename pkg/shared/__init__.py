# Shared package: complexes, ideals, homology and the depth scan
