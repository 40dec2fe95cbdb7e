"""Character tables of strongly regular graphs, exactly.

A strongly regular graph with parameters (n, k, mu, nu) - mu counting common
neighbours of adjacent pairs - has a rank-3 adjacency algebra whose character
table is determined by the eigenvalues r > s of the adjacency matrix.  This
script builds a few tables, checks the feasibility constraints, and shows the
regular matrices whose nonnegativity is what feasibility means.
"""

from srgfusion import (
    SrgParams, char_table, eigen_from_params, feasibility, imprimitive_eigen,
    regular_matrices,
)


def show(label, eigen):
    table = char_table(eigen)
    print(f"== {label}: k={eigen.k}, l={eigen.l}, r={eigen.r}, s={eigen.s}")
    for row_label, row, mult in zip(table.row_labels, table.rows, table.mults):
        print(f"   {row_label}: {tuple(str(v) for v in row)}  x{mult}")
    rep = feasibility(eigen)
    print(f"   primitive: {rep.primitive}  imprimitive kind: {rep.imprimitive_kind}")


show("Petersen (10,3,0,1)", eigen_from_params(SrgParams(10, 3, 0, 1)))
show("pentagon (5,2,0,1), golden-ratio eigenvalues",
     eigen_from_params(SrgParams(5, 2, 0, 1)))
show("Paley(13), eigenvalues in Q(sqrt 13)",
     eigen_from_params(SrgParams(13, 6, 2, 3)))
show("three triangles (9,2,1,0), imprimitive", imprimitive_eigen(2, 2))

e = eigen_from_params(SrgParams(10, 3, 0, 1))
b1, b2 = regular_matrices(e)
print("\nregular matrix of the adjacency class (recovers mu=0, nu=1):")
for row in b1:
    print("  ", [str(v) for v in row])
