"""Special-case fusions: parameter families and sporadic small tables.

Beyond the guaranteed thirteen, special fusions exist exactly on a catalogue
of parameter families.  Scanning concrete instances shows the catalogue at
work; the same lists fall out of the symbolic classifier.
"""

from srgfusion import (
    SrgParams, char_table, eigen_from_params, eigen_from_values, scan_all,
    tensor_square_table,
)
from srgfusion.classifier import family_catalog

GUARANTEED = 13


def scan(label, eigen):
    table = tensor_square_table(char_table(eigen))
    got = sorted(str(v.partition) for v in scan_all(table))
    print(f"== {label}: {len(got)} fusions ({len(got) - GUARANTEED} special)")
    return set(got)


conf = scan("Paley(13), conference family", eigen_from_params(SrgParams(13, 6, 2, 3)))
rook4 = scan("rook(4) = (16,6,2,2)", eigen_from_params(SrgParams(16, 6, 2, 2)))
clebc = scan("complement of the folded 5-cube (16,10,6,6)",
             eigen_from_params(SrgParams(16, 10, 6, 6)))
rook3 = scan("rook(3) = Paley(9), in six families plus sporadics",
             eigen_from_params(SrgParams(9, 4, 1, 2)))
pent = scan("pentagon", eigen_from_params(SrgParams(5, 2, 0, 1)))
latin = scan("order-36 Latin-square graph (36,15,6,6)",
             eigen_from_values(15, 20, 3, -3, integral=True))

print("\nrook(4) and the Latin-square graph share the rank-3 fusion 2468|3579:")
print("  rook4 specials: ", sorted(rook4)[-2:])
print("  latin specials:  ", [t for t in sorted(latin) if t == "2468|3579"])

print("\nthe catalogue:")
for fam in family_catalog():
    print(f"  {fam.id:6s} {fam.description.splitlines()[0]}")
