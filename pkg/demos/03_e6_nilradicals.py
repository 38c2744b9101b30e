"""Parabolic nilradicals of E6: layer sizes and 2-abelian witnesses.

Run: python demos/03_e6_nilradicals.py
"""

from __future__ import annotations

from kabelian import e6roots as e6


if __name__ == "__main__":
    rs = e6.build_e6()
    print(f"{len(rs.positive_roots)} positive roots, highest {e6.maximal_root(rs)}")
    print()
    print(f"{'delta1':<14}{'layers':<26}{'verdict':<14}witness (heights)")
    for d in e6.L_SUBSETS + ((1, 3, 6), (1,), (1, 2, 3, 4, 5, 6)):
        lay = e6.layers(rs, d)
        sizes = ",".join(str(len(v)) for v in lay.values())
        w = e6.two_abelian_witness(rs, d)
        extra = ""
        if isinstance(w, e6.TwoAbelian):
            extra = f"{w.alpha} + {w.beta} ({e6.height(w.alpha, d)},{e6.height(w.beta, d)})"
        print(f"{','.join(map(str, d)):<14}{sizes:<26}{w.verdict:<14}{extra}")
