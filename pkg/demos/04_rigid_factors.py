"""The algebras g_m and their central-series factors.

For each k between m and 2m-2 the factor g_m / C^k g_m is 1-abelian with
characteristic sequence (k,2,1); dropping X_{2m+2} as well leaves (k,1,1).

Run: python demos/04_rigid_factors.py
"""

from __future__ import annotations

from kabelian import catalog as cat
from kabelian.exactlin import span
from kabelian.liealg import char_seq_at, commutativity_index, quotient


if __name__ == "__main__":
    for m in (4, 5):
        g = cat.build_gm(m)
        print(f"g_{m}: dim {g.dim}, c(X1) = {char_seq_at(g, g.basis_vector('X1'))}, "
              f"{commutativity_index(g)}-abelian")
        for k in range(m, 2 * m - 1):
            q = cat.gm_factor(m, k)
            s, _ = quotient(q, span([q.basis_vector(f"X{2 * m + 2}")], q.dim))
            print(f"  k={k}: factor dim {q.dim} c={char_seq_at(q, q.basis_vector('X1'))} "
                  f"index {commutativity_index(q)};  without X{2 * m + 2}: c={char_seq_at(s, s.basis_vector('X1'))}")
        r = cat.build_rmk(m, m)
        w1, w2 = cat.rmk_weights(m, m)
        print(f"  r_{m},{m} weights V1 {w1}")
        print(f"  r_{m},{m} weights V2 {w2}")
