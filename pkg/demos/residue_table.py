"""Print the residue group order next to the dimension formula.

Usage: python3 demos/residue_table.py [max_n]
"""

import sys

from skeinlab.cyclotomic import root_spec
from skeinlab.residue_degree import D_formula, build_lattices, residue_order
from skeinlab.surface_coords import SurfaceSig, build_datum

SIGNATURES = [(0, 4), (1, 1), (1, 2), (2, 0), (2, 1)]


def main(max_n: int = 12) -> None:
    print("g\tp\tn\tresidues\tD\tfactors")
    for g, p in SIGNATURES:
        datum = build_datum(SurfaceSig(g, p))
        for n in range(2, max_n + 1):
            lat = build_lattices(datum, root_spec(n))
            factors = [d for d in lat.residue_quotient.diag if d != 1]
            print(f"{g}\t{p}\t{n}\t{residue_order(lat)}\t{D_formula(SurfaceSig(g, p), lat.spec)}\t{factors}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 12)
