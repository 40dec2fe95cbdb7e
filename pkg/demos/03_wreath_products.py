"""Fusions of the wreath product.

The wreath product is the rank-5 fusion of the tensor square along
2|3|456|789 (or its mirror 258|369|4|7).  Its own fusions are coarsenings of
that partition: three hold always, three more exactly in the union-of-cliques
case k = r, three in the complete-multipartite case r = 0, and four never.
"""

from srgfusion import (
    char_table, classify_wreath, imprimitive_eigen, wreath_table,
)

for orientation in (1, 2):
    w = classify_wreath(orientation)
    print(f"== orientation {orientation} (base {w.base})")
    print("   guaranteed:           ", ", ".join(w.guaranteed))
    print("   only when k = r:      ", ", ".join(w.clique_case))
    print("   only when r = 0:      ", ", ".join(w.multipartite_case))
    print("   never:                ", ", ".join(w.never))

print("\nwreath character table of three triangles (k = r case):")
t = wreath_table(char_table(imprimitive_eigen(2, 2)), 1)
for label, row, mult in zip(t.row_labels, t.rows, t.mults):
    print(f"  {label}: {tuple(str(v) for v in row)}  x{mult}")
