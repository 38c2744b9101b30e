"""Batch verification suites.

Each suite yields :class:`Check` records; :func:`run_suite` sorts them by id
and wraps them in a :class:`SuiteReport`.  Check ids start with ``C<n>.`` where
``n`` is the numbered acceptance property the check belongs to, so a caller
can filter a report down to one property; ``C0.`` marks supplementary checks.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Iterator

from . import catalog as cat
from . import e6roots as e6
from .derivations import (
    cocycle2_check,
    derivation_space,
    diagonal_torus,
    is_characteristically_nilpotent,
    is_derivation,
)
from .exactlin import Matrix, Partition, span
from .liealg import (
    char_seq_at,
    char_seq_search,
    commutativity_index,
    derived_algebra,
    lower_central_series,
    quotient,
    verify_jacobi,
)

SUITES = ("catalog", "cocycles", "cn", "rigid", "e6")
PASS, FAIL = "pass", "fail"


@dataclass(frozen=True)
class Check:
    id: str
    description: str
    status: str
    details: str = ""

    @property
    def criterion(self) -> int:
        return int(self.id.split(".", 1)[0][1:])


@dataclass
class SuiteReport:
    suite: str
    seed: int
    max_dim: int
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(c.status == PASS for c in self.checks)

    @property
    def failed(self) -> int:
        return len(self.checks) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.status != PASS]

    def for_criterion(self, n: int) -> list[Check]:
        return [c for c in self.checks if c.criterion == n]

    def to_text(self) -> str:
        lines = [f"suite: {self.suite}  seed: {self.seed}  max_dim: {self.max_dim}"]
        for c in self.checks:
            tail = f"  [{c.details}]" if c.details else ""
            lines.append(f"{c.status.upper():4} {c.id}  {c.description}{tail}")
        lines.append(f"summary: {len(self.checks)} checks, {self.passed} passed, {self.failed} failed")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        data = {
            "suite": self.suite,
            "seed": self.seed,
            "max_dim": self.max_dim,
            "checks": [asdict(c) for c in self.checks],
            "summary": {"total": len(self.checks), "passed": self.passed, "failed": self.failed},
        }
        return json.dumps(data, indent=2) + "\n"


def _check(cid: str, desc: str, ok: bool, details: str = "") -> Check:
    return Check(cid, desc, PASS if ok else FAIL, details)


def _tag(fid: int, n: int, alpha) -> str:
    a = "" if alpha is None else f".a{str(Fraction(alpha)).replace('/', '_').replace('-', 'm')}"
    return f"g{fid:02d}.n{n:02d}{a}"


def _jacobi_details(g) -> tuple[bool, str]:
    bad = verify_jacobi(g)
    if not bad:
        return True, ""
    v = bad[0]
    return False, f"{len(bad)} violating triples, first {v}"


# -- catalog: Jacobi, classification invariants, 1-or-2-abelian ---------------


def catalog_suite(max_dim: int = 16, seed: int = 0) -> Iterator[Check]:
    hi = max_dim
    for fid, n, alpha in cat.catalog_instances(7, hi):
        g = cat.build_family(fid, n, alpha)
        tag = _tag(fid, n, alpha)
        name = cat.family_name(fid, n, alpha)
        ok, det = _jacobi_details(g)
        yield _check(f"C1.jacobi.{tag}", f"Jacobi identity for {name}", ok, det)
        if not ok:
            continue
        ci = commutativity_index(g)
        yield _check(f"C2.commindex.{tag}", f"commutativity index of {name} is 2", ci == 2, f"got {ci}")
        want_c1 = cat.CATALOG[fid].expected_c1_dim
        c1 = derived_algebra(g).dim
        yield _check(f"C2.c1dim.{tag}", f"dim C^1 {name} = {want_c1}", c1 == want_c1, f"got {c1}")
        target = Partition((5,) + (1,) * (n - 5))
        found = char_seq_search(g, seed=seed, samples=64)
        at_x1 = char_seq_at(g, g.basis_vector("X1"))
        ok = found.partition == target and at_x1 == target
        det = f"sampled {found.partition}, at X1 {at_x1}"
        if found.partition != target:
            det += f", witness {_fmt_vec(g, found.witness)}"
        yield _check(f"C2.charseq.{tag}", f"characteristic sequence of {name} is {target} at X1", ok, det)
        yield _check(f"C3.onetwo.{tag}", f"{name} is 1- or 2-abelian", ci in (1, 2), f"got {ci}")
    for n in range(7, hi + 1):
        g = cat.build_g0(n)
        ok, det = _jacobi_details(g)
        yield _check(f"C1.jacobi.g00.n{n:02d}", f"Jacobi identity for g_0^{n}", ok, det)
        ci = commutativity_index(g)
        yield _check(f"C3.onetwo.g00.n{n:02d}", f"g_0^{n} is 1- or 2-abelian", ci in (1, 2), f"got {ci}")


def _fmt_vec(g, v) -> str:
    out = ""
    for i, c in enumerate(v):
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        term = g.labels[i] if mag == 1 else f"{mag}*{g.labels[i]}"
        out += (f" {sign} " if out else ("-" if c < 0 else "")) + term
    return out or "0"


# -- cocycles -------------------------------------------------------------------


def cocycles_suite(max_dim: int = 12, seed: int = 0) -> Iterator[Check]:
    for n in range(7, min(max_dim, 12) + 1):
        g = cat.build_g0(n)
        for name, c in sorted(cat.all_cocycles(n).items()):
            bad = cocycle2_check(g, c)
            det = f"{len(bad)} nonzero coboundary values, first {bad[0]}" if bad else ""
            yield _check(f"C4.cocycle.n{n:02d}.{name}", f"{name} is a 2-cocycle of g_0^{n}", not bad, det)


# -- characteristic nilpotence and rank ----------------------------------------


def isolated_pairs(fid: int, n: int) -> list[tuple[int, int]]:
    """psi1_{i,j} terms whose Y_i, Y_j occur in no other term of the recipe."""
    terms = cat.family_terms(fid, n)
    out = []
    for t in terms:
        if t.kind != "psi1":
            continue
        i, j = t.indices
        clash = False
        for u in terms:
            if u is t:
                continue
            ys = _y_indices(u)
            if i in ys or j in ys:
                clash = True
                break
        if not clash:
            out.append((i, j))
    return out


def _y_indices(t) -> set[int]:
    if t.kind == "psi1":
        return set(t.indices)
    if t.kind in ("psi", "phi1k", "phi3k"):
        return {t.indices[0]}
    return set()


def pair_derivation(g, i: int, j: int) -> Matrix:
    """d(Y_i) = Y_i, d(Y_j) = -Y_j, zero elsewhere."""
    w = [0] * g.dim
    w[g.index(f"Y{i}") - 1] = 1
    w[g.index(f"Y{j}") - 1] = -1
    return Matrix.diagonal(w)


def cn_suite(max_dim: int = 9, seed: int = 0) -> Iterator[Check]:
    hi = min(max_dim, 9)
    for fid, n, alpha in cat.catalog_instances(7, hi, alphas=(1, -1, 2)):
        g = cat.build_family(fid, n, alpha)
        tag = _tag(fid, n, alpha)
        name = cat.family_name(fid, n, alpha)
        der = derivation_space(g)
        res = is_characteristically_nilpotent(g, der)
        want = cat.expected_cn(fid, n, alpha)
        torus = diagonal_torus(g).dim
        det = f"dim Der {der.dim}, chain {res.profile}, torus {torus}"
        if not res.nilpotent:
            cert = torus >= 1 or (res.stable is not None and res.stable.dim > 0)
            det += "; certificate: " + ("diagonal torus" if torus >= 1 else "Der chain stalls")
        else:
            cert = True
        ok = res.nilpotent == want and cert
        verdict = "characteristically nilpotent" if want else "not characteristically nilpotent"
        yield _check(f"C5.cn.{tag}", f"{name} is {verdict}", ok, det)
    # supplementary: alpha = 0 in the parametrized families equals its twin family
    for fid, twin in sorted(cat.ALPHA_ZERO_TWIN.items()):
        for n in cat.CATALOG[fid].dimensions(7, hi):
            g = cat.build_family(fid, n, 0)
            same = g.same_constants(cat.build_family(twin, n))
            res = is_characteristically_nilpotent(g)
            yield _check(
                f"C0.alpha0.g{fid:02d}.n{n:02d}",
                f"{cat.family_name(fid, n, 0)} equals g^{twin}_{n} and shares its CN status",
                same and res.nilpotent == cat.expected_cn(twin, n),
                f"chain {res.profile}",
            )
    for fid, n, alpha in cat.catalog_instances(7, max_dim):
        if fid <= 5:
            g = cat.build_family(fid, n, alpha)
            t = diagonal_torus(g).dim
            yield _check(f"C6.torus.{_tag(fid, n, alpha)}", f"diagonal torus of {cat.family_name(fid, n, alpha)} is nonzero", t >= 1, f"dim {t}")
    for fid, n, alpha in cat.catalog_instances(7, max_dim):
        pairs = isolated_pairs(fid, n)
        if not pairs:
            continue
        g = cat.build_family(fid, n, alpha)
        for i, j in pairs:
            bad = is_derivation(g, pair_derivation(g, i, j))
            yield _check(
                f"C6.pairderiv.{_tag(fid, n, alpha)}.y{i:02d}y{j:02d}",
                f"Y{i} -> Y{i}, Y{j} -> -Y{j} is a derivation of {cat.family_name(fid, n, alpha)}",
                not bad,
                f"{len(bad)} failing pairs" if bad else "",
            )


# -- rigid nilradicals -----------------------------------------------------------


def rigid_suite(max_dim: int = 16, seed: int = 0) -> Iterator[Check]:
    for m in range(4, 8):
        g = cat.build_gm(m)
        ok, det = _jacobi_details(g)
        yield _check(f"C1.jacobi.gm{m}", f"Jacobi identity for g_{m}", ok, det)
        want = Partition((2 * m - 1, 2, 1))
        got = char_seq_at(g, g.basis_vector("X1"))
        yield _check(f"C7.charseq.gm{m}", f"c(X1) on g_{m} is {want}", got == want, f"got {got}")
        ci = commutativity_index(g)
        yield _check(f"C7.commindex.gm{m}", f"g_{m} is {m - 1}-abelian", ci == m - 1, f"got {ci}")
        series = lower_central_series(g)
        for k in range(m, 2 * m - 1):
            key = f"m{m}k{k:02d}"
            q, _ = quotient(g, series[k])
            exp = cat.gm_factor_expected(m, k)
            same = q.labels == exp.labels and q.same_constants(exp)
            yield _check(f"C7.factor.{key}", f"g_{m}/C^{k} matches its defining brackets", same)
            ci = commutativity_index(q)
            yield _check(f"C7.factor_abelian.{key}", f"g_{m}/C^{k} is 1-abelian", ci == 1, f"got {ci}")
            want = Partition((k, 2, 1))
            got = char_seq_at(q, q.basis_vector("X1"))
            sampled = char_seq_search(q, seed=seed).partition
            yield _check(
                f"C7.factor_charseq.{key}",
                f"g_{m}/C^{k} has characteristic sequence {want}",
                got == want and sampled == want,
                f"at X1 {got}, sampled {sampled}",
            )
            top = q.basis_vector(f"X{2 * m + 2}")
            s, _ = quotient(q, span([top], q.dim))
            want = Partition((k, 1, 1))
            got = char_seq_at(s, s.basis_vector("X1"))
            sampled = char_seq_search(s, seed=seed).partition
            yield _check(
                f"C7.smk_charseq.{key}",
                f"(g_{m}/C^{k})/<X{2 * m + 2}> has characteristic sequence {want}",
                got == want and sampled == want,
                f"at X1 {got}, sampled {sampled}",
            )
            if m <= 6:
                r = cat.build_rmk(m, k)
                ok, det = _jacobi_details(r)
                yield _check(f"C1.jacobi.rmk.{key}", f"Jacobi identity for r_{m},{k}", ok, det)
                yield _torus_check(m, k, r, key)
    r = cat.build_rmk(4, 4, a=1, b=2)
    ok, _ = _jacobi_details(r)
    yield _check("C1.jacobi.rmk.m4k04.b2", "r_4,4 with a=1, b=2 violates Jacobi", not ok)


def _torus_check(m: int, k: int, r, key: str) -> Check:
    """V1, V2 act diagonally with the listed weights, commute, and restrict to derivations."""
    nil = cat.nilradical_part(r)
    w1, w2 = cat.rmk_weights(m, k)
    problems = []
    if any(r.basis_bracket(1, 2).values()):
        problems.append("[V1,V2] != 0")
    for v, w in ((1, w1), (2, w2)):
        for j, wt in w.items():
            x = r.index(f"X{j}")
            want = {x: Fraction(wt)} if wt else {}
            got = {a: c for a, c in r.basis_bracket(v, x).items() if c}
            if got != want:
                problems.append(f"[V{v},X{j}] = {got}, expected weight {wt}")
        diag = Matrix.diagonal([w[int(lab[1:])] for lab in nil.labels])
        if is_derivation(nil, diag):
            problems.append(f"ad V{v} is not a derivation of the nilradical")
    return _check(
        f"C7.torus.{key}",
        f"V1, V2 act on r_{m},{k} as commuting diagonal derivations with the listed weights",
        not problems,
        "; ".join(problems),
    )


# -- E6 ---------------------------------------------------------------------------


def e6_suite(max_dim: int = 16, seed: int = 0) -> Iterator[Check]:
    rs = e6.build_e6()
    yield _check("C8.e6.count", "E6 has 36 positive roots", len(rs.positive_roots) == 36, f"got {len(rs.positive_roots)}")
    top = e6.maximal_root(rs)
    yield _check("C8.e6.maxroot", "maximal root is (1,2,2,3,2,1)", top == (1, 2, 2, 3, 2, 1), f"got {top}")
    for d in e6.L_SUBSETS:
        key = "".join(map(str, d))
        w = e6.two_abelian_witness(rs, d)
        ok = isinstance(w, e6.TwoAbelian) and e6.check_witness(rs, d, w.alpha, w.beta).valid
        det = w.verdict
        if isinstance(w, e6.TwoAbelian):
            det += f" alpha={w.alpha} beta={w.beta} heights={(e6.height(w.alpha, d), e6.height(w.beta, d))}"
        yield _check(f"C8.e6.set{key}", f"n({{{','.join(map(str, d))}}}) is 2-abelian with a verified witness", ok, det)
        dims = e6.nilradical_lcs_dims(rs, d)
        yield _check(
            f"C8.e6.lcs{key}",
            f"layer and bracket-closure central series agree for {{{','.join(map(str, d))}}}",
            dims == e6.nilradical_lcs_by_closure(rs, d),
            f"{dims}",
        )
    for d, a, b, s in e6.published_witnesses():
        key = "".join(map(str, d))
        wc = e6.check_witness(rs, d, a, b)
        ok = wc.ok and e6.add(a, b) == s
        det = (
            f"alpha={a} beta={b} heights={wc.heights} in_phi2=({wc.alpha_in_phi2},{wc.beta_in_phi2}) "
            f"sum_root={wc.sum_in_phi2} sum_matches={e6.add(a, b) == s}"
        )
        yield _check(f"C8.e6.published{key}", f"published witness for {{{','.join(map(str, d))}}} verifies", ok, det)
    # supplementary: the set analysed alongside the list but not in it
    w = e6.two_abelian_witness(rs, (1, 3, 6))
    ok = isinstance(w, e6.TwoAbelian) and e6.check_witness(rs, (1, 3, 6), w.alpha, w.beta).valid
    yield _check("C0.e6.set136", "n({1,3,6}) is 2-abelian with a verified witness", ok, w.verdict)
    w = e6.two_abelian_witness(rs, (1,))
    yield _check("C8.e6.single1", "n({1}) is 1-abelian", isinstance(w, e6.OneAbelian), w.verdict)


_SUITE_FUNCS: dict[str, Callable[..., Iterator[Check]]] = {
    "catalog": catalog_suite,
    "cocycles": cocycles_suite,
    "cn": cn_suite,
    "rigid": rigid_suite,
    "e6": e6_suite,
}


def run_suite(name: str, max_dim: int = 16, seed: int = 0) -> SuiteReport:
    """Run one suite (or ``all``) and return its report with checks sorted by id."""
    names = SUITES if name == "all" else (name,)
    if any(s not in _SUITE_FUNCS for s in names):
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES + ('all',))}")
    checks = []
    for s in names:
        checks.extend(_SUITE_FUNCS[s](max_dim=max_dim, seed=seed))
    checks.sort(key=lambda c: c.id)
    return SuiteReport(name, seed, max_dim, checks)
