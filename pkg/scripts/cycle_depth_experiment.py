#!/usr/bin/env python3
"""Show how coprime cycle lengths force deep unravellings.

The fig5 fixture connects three hubs to cycles of pairwise coprime lengths;
the most specific concept of the hub set only stops covering the bare-cycle
element once the unravelling depth passes the product of the cycle lengths
minus one.  This script sweeps the depth and prints the membership flip,
then the adaptively chosen depth for a few element sets.
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from ciforge.fixtures import builtin_fixture
from ciforge.mmsc import adaptable_depth, mmsc_at_depth
from ciforge.simulation import semantic_extension


def main() -> int:
    i = builtin_fixture("fig5")
    hubs = {"x1", "x2", "x3"}
    memo: dict = {}
    flip = None
    for d in range(0, 32):
        ext = semantic_extension(mmsc_at_depth(i, hubs, d), i, memo)
        inside = "x4" in ext
        if flip is None and not inside:
            flip = d
        marker = " <-- first depth excluding x4" if flip == d else ""
        print(f"depth {d:2d}: |extension| = {len(ext):2d}, x4 in = {inside}{marker}")
    print()
    for elements in ({"x1"}, {"x1", "x2"}, hubs):
        report = adaptable_depth(i, elements)
        print(
            f"adaptable_depth({sorted(elements)}): branch={report.branch} "
            f"product_mvf={report.product_mvf} chosen={report.chosen_depth}"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
