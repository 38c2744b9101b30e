"""Why sampling the characteristic sequence matters.

X1 has Jordan type (5,1,1,1) on g^5_8, but ad(X2) has a 5-chain and a
separate 2-chain, so the characteristic sequence is at least (5,2,1).
The chains are printed so the claim can be checked by hand.

Run: python demos/02_sequence_jump.py
"""

from __future__ import annotations

from kabelian import catalog as cat
from kabelian.liealg import char_seq_at, char_seq_search


def fmt(g, v) -> str:
    parts = [f"{c}*{g.labels[i]}" for i, c in enumerate(v) if c]
    return " + ".join(parts) or "0"


def chain(g, x, start):
    v = g.basis_vector(start)
    out = [fmt(g, v)]
    while any(v):
        v = g.bracket(x, v)
        out.append(fmt(g, v))
    return " -> ".join(out)


if __name__ == "__main__":
    g = cat.build_family(5, 8)
    x1, x2 = g.basis_vector("X1"), g.basis_vector("X2")
    print("c(X1) =", char_seq_at(g, x1))
    print("c(X2) =", char_seq_at(g, x2))
    print("ad X2 chains:")
    print("  ", chain(g, x2, "X1"))
    print("  ", chain(g, x2, "X4"))
    s = char_seq_search(g, seed=0)
    print(f"sampled maximum over {s.candidates} vectors: {s.partition} at {fmt(g, s.witness)}")
