# Group realizations: permutations, signed permutations, root systems, engine, catalog
