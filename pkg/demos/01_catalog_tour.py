"""A walk through one catalog algebra: build it, read off its invariants,
and decide characteristic nilpotence.

Run: python demos/01_catalog_tour.py
"""

from __future__ import annotations

from kabelian import catalog as cat
from kabelian.derivations import derivation_space, diagonal_torus, is_characteristically_nilpotent
from kabelian.liealg import char_seq_at, commutativity_index, lcs_dims, verify_jacobi


def show(fid: int, n: int, alpha=None) -> None:
    g = cat.build_family(fid, n, alpha)
    name = cat.family_name(fid, n, alpha)
    print(f"{name}: recipe " + " + ".join(str(t) for t in cat.family_terms(fid, n)))
    print(f"  Jacobi violations     {len(verify_jacobi(g))}")
    print(f"  dims of C^k           {lcs_dims(g)}")
    print(f"  commutativity index   {commutativity_index(g)}")
    print(f"  c(X1)                 {char_seq_at(g, g.basis_vector('X1'))}")
    der = derivation_space(g)
    cn = is_characteristically_nilpotent(g, der)
    print(f"  dim Der               {der.dim}")
    print(f"  diagonal torus dim    {diagonal_torus(g).dim}")
    print(f"  Der chain             {cn.profile}  ->  {'CN' if cn else 'not CN'}")
    print()


if __name__ == "__main__":
    show(11, 7)  # characteristically nilpotent
    show(1, 8)  # carries a nonzero diagonal derivation
    show(24, 7, 2)  # parametrized family
