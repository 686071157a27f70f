"""Structure constants: the simple families and their invariants.

A Lie algebra enters the library as a table of real antisymmetric
structure constants normalized so that the Killing-type trace is twice
the dual Coxeter number.  The catalog lists dim and g for every simple
family; sl2 ships as a concrete table.
"""

from nsvertex.liealg import CATALOG, catalog_entry, sl2

print("family  rank   dim            g")
for row in CATALOG:
    print(f"  {row['family']:<5} {row['rank']:<6} {row['dim']:<14} {row['dual_coxeter']}")

print()
print("concrete entries:")
for family, rank in (("A", 1), ("A", 2), ("D", 4), ("E", 8), ("G", 2)):
    dim, g = catalog_entry(family, rank)
    print(f"  {family}{rank}: dim = {dim}, g = {g}")

print()
lie = sl2()
report = lie.validate()
print("sl2 validation:", report["checks"], "valid =", report["valid"])
print("sl2 dual Coxeter number =", lie.dual_coxeter())

# the structure tensor itself: Gamma[a][b] lists (c, coefficient)
print("nonzero brackets:")
for a in range(lie.dim):
    for b in range(lie.dim):
        for c in range(lie.dim):
            g = lie.gamma_entry(a, b, c)
            if g and a < b:
                print(f"  [x{a + 1}, x{b + 1}] contains {g} * i * x{c + 1}")
