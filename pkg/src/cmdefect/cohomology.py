"""First cohomology machinery: cocycles, coboundary decisions by exact
linear solving over GF(p), embeddings into graded pieces of the coordinate
ring, and annihilator searches.

Every witness returned by a solver is re-verified symbolically before it
is handed back; every negative answer carries the rank data of the linear
system that proves unsolvability.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .groups import context
from .linalg import LinearReport
from .poly import Poly, ResourceCapError, Ring, grevlex_key
from .reps import (
    Hom0Data,
    Representation,
    SliceEngine,
    Submodule,
    slice_engine,
)


class CocycleError(ValueError):
    """A claimed cocycle fails verification."""


class RetractionError(ValueError):
    """The given projection does not restrict to the identity on the
    submodule."""


class SummandError(ValueError):
    """No verified direct summand witness exists for the requested slot."""


@dataclass(frozen=True)
class Cocycle:
    """A map from the group to a module, given by one polynomial per
    coordinate in the group's generic point."""

    target: Representation
    components: tuple

    def __post_init__(self):
        if len(self.components) != self.target.dim:
            raise CocycleError("component count does not match the target dimension")

    def __add__(self, other: "Cocycle") -> "Cocycle":
        if self.target != other.target:
            raise CocycleError("cocycles have different targets")
        return Cocycle(
            self.target,
            tuple(a + b for a, b in zip(self.components, other.components)),
        )

    def __sub__(self, other: "Cocycle") -> "Cocycle":
        if self.target != other.target:
            raise CocycleError("cocycles have different targets")
        return Cocycle(
            self.target,
            tuple(a - b for a, b in zip(self.components, other.components)),
        )

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)


def coboundary_of(target: Representation, w) -> Cocycle:
    """The cocycle sigma -> (sigma - 1) w for an integer vector w."""
    ring = target.ring
    comps = []
    for i in range(target.dim):
        acc = ring.zero()
        for j, wj in enumerate(w):
            c = int(wj) % target.group.p
            if c:
                acc = acc + (target.action[i][j] - (1 if i == j else 0)) * c
        comps.append(acc)
    return Cocycle(target, tuple(comps))


def verify_cocycle(g: Cocycle) -> bool:
    """Vanishing at the unit plus the cocycle identity with two generic
    points, all modulo the relation ideal."""
    target = g.target
    group = target.group
    for comp in g.components:
        if comp.eval_ints(group.unit) != 0:
            return False
    ctx = context(group, 2)
    sigma, tau = ctx.point(0), ctx.point(1)
    prod = ctx.mult(sigma, tau)
    g_st = [comp.subst(prod, ctx.ring) for comp in g.components]
    g_s = [ctx.lift1(comp, 0) for comp in g.components]
    g_t = [ctx.lift1(comp, 1) for comp in g.components]
    a_s = [[ctx.lift1(e, 0) for e in row] for row in target.action]
    for i in range(target.dim):
        acc = ctx.ring.zero()
        for j in range(target.dim):
            if not a_s[i][j].is_zero() and not g_t[j].is_zero():
                acc = acc + a_s[i][j] * g_t[j]
        if not ctx.is_zero(g_st[i] - acc - g_s[i]):
            return False
    return True


@dataclass(frozen=True)
class CoboundaryWitness:
    """A vector w with (sigma - 1) w equal to the cocycle."""

    w: tuple


@dataclass(frozen=True)
class CoboundaryDecision:
    witness: CoboundaryWitness | None
    report: LinearReport

    def is_coboundary(self) -> bool:
        return self.witness is not None


def _sorted_row_keys(keys):
    return sorted(keys, key=lambda k: (k[0], grevlex_key(k[1])))


def is_coboundary(g: Cocycle) -> CoboundaryDecision:
    """Decide whether g is a coboundary by exact linear solving; a witness
    is re-verified symbolically, a negative answer is a rank statement."""
    target = g.target
    group = target.group
    p = group.p
    ctx = context(group, 1)
    m = target.dim
    cols = {}
    rows = set()
    for j in range(m):
        col = {}
        for i in range(m):
            e = ctx.nf(target.action[i][j] - (1 if i == j else 0))
            for exps, c in e.terms.items():
                col[(i, exps)] = c
                rows.add((i, exps))
        cols[j] = col
    rhs = {}
    for i in range(m):
        e = ctx.nf(g.components[i])
        for exps, c in e.terms.items():
            rhs[(i, exps)] = c
            rows.add((i, exps))
    row_list = _sorted_row_keys(rows)
    row_index = {k: r for r, k in enumerate(row_list)}
    a = np.zeros((len(row_list), m), dtype=np.int64)
    b = np.zeros(len(row_list), dtype=np.int64)
    for j in range(m):
        for k, c in cols[j].items():
            a[row_index[k], j] = c
    for k, c in rhs.items():
        b[row_index[k]] = c
    sol, report = linalg.solve(a, b, p)
    if sol is None:
        return CoboundaryDecision(None, report)
    w = tuple(int(x) for x in sol)
    check = coboundary_of(target, w)
    diff = check - g
    if not all(ctx.is_zero(c) for c in diff.components):
        raise AssertionError("solver returned an invalid coboundary witness")
    return CoboundaryDecision(CoboundaryWitness(w), report)


def cocycle_from_projection(v: Representation, sub: Submodule, iota) -> Cocycle:
    """The cocycle sigma -> sigma.iota - iota attached to a retraction
    iota onto a submodule, valued in the maps vanishing on the submodule."""
    group = v.group
    p = group.p
    iota = np.mod(np.array(iota, dtype=np.int64), p)
    incl = sub.inclusion_array()
    if iota.shape != (sub.dim, v.dim):
        raise RetractionError("retraction has the wrong shape")
    if not np.array_equal(
        np.mod(iota @ incl, p), np.eye(sub.dim, dtype=np.int64)
    ):
        raise RetractionError("iota does not restrict to the identity on the submodule")
    data = Hom0Data(v, sub)
    ring = v.ring
    ctx = context(group, 1)
    a_inv = v.action_at_inverse()
    b_act = sub.module.action
    n, w = v.dim, sub.dim
    # sigma.iota = B(sigma) . iota . A(sigma^{-1})
    mid = [[ring.zero()] * n for _ in range(w)]
    for r in range(w):
        for j in range(n):
            acc = ring.zero()
            for s in range(n):
                c = int(iota[r, s])
                if c:
                    acc = acc + a_inv[s][j] * c
            mid[r][j] = acc
    g_mat = [[ring.zero()] * n for _ in range(w)]
    for i in range(w):
        for j in range(n):
            acc = ring.zero()
            for r in range(w):
                if not b_act[i][r].is_zero() and not mid[r][j].is_zero():
                    acc = acc + b_act[i][r] * mid[r][j]
            g_mat[i][j] = ctx.nf(acc - int(iota[i, j]))
    components = data.coords_of(g_mat)
    g = Cocycle(data.rep, tuple(components))
    if not verify_cocycle(g):
        raise CocycleError("projection cocycle failed the cocycle identity")
    return g


# -- cocycles valued in a graded piece of the coordinate ring -------------------


@dataclass(frozen=True)
class RingCocycle:
    """A homogeneous cocycle valued in the degree-d functions on a module,
    stored as one group-ring polynomial per degree-d monomial."""

    module: Representation
    degree: int
    components: tuple

    def engine(self) -> SliceEngine:
        return slice_engine(self.module)

    def component_map(self):
        eng = self.engine()
        monos = eng.monomials(self.degree)
        return dict(zip(monos, self.components))

    def joint_value(self) -> Poly:
        """The cocycle as a single polynomial in (group coords, module
        coords)."""
        eng = self.engine()
        out = eng.joint.zero()
        for beta, comp in zip(eng.monomials(self.degree), self.components):
            if not comp.is_zero():
                shift = (0,) * eng.nc + beta
                out = out + eng.lift_g(comp) * Poly(eng.joint, {shift: 1})
        return out

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def support_multidegs(self):
        eng = self.engine()
        seen = []
        for beta, comp in zip(eng.monomials(self.degree), self.components):
            if not comp.is_zero():
                delta = eng.multideg(beta)
                if delta not in seen:
                    seen.append(delta)
        return seen


def verify_ring_cocycle(rc: RingCocycle) -> bool:
    """Unit vanishing plus the cocycle identity, with two generic points
    and the module coordinates carried along symbolically."""
    eng = rc.engine()
    group = rc.module.group
    nc = group.ncoords
    n = rc.module.dim
    for comp in rc.components:
        if comp.eval_ints(group.unit) != 0:
            return False
    ctx = context(group, 2, extra=n)
    ring2 = ctx.ring
    monos = eng.monomials(rc.degree)

    def x_mono(beta) -> Poly:
        return Poly(ring2, {(0,) * (2 * nc) + beta: 1})

    sigma, tau = ctx.point(0), ctx.point(1)
    prod = ctx.mult(sigma, tau)
    g_st = ring2.zero()
    g_s = ring2.zero()
    for beta, comp in zip(monos, rc.components):
        if comp.is_zero():
            continue
        g_st = g_st + comp.subst(prod, ring2) * x_mono(beta)
        g_s = g_s + comp.lift(ring2, 0) * x_mono(beta)
    # sigma . g_tau: expand each monomial through the point-0 dual action
    from .reps import dual

    d_action = dual(rc.module).action
    forms = []
    for i in range(n):
        acc = ring2.zero()
        for j in range(n):
            e = d_action[j][i]
            if not e.is_zero():
                acc = acc + e.lift(ring2, 0) * ring2.var(2 * nc + j)
        forms.append(acc)
    sg_t = ring2.zero()
    for beta, comp in zip(monos, rc.components):
        if comp.is_zero():
            continue
        prod_beta = ring2.one()
        for i, e in enumerate(beta):
            if e:
                prod_beta = prod_beta * forms[i] ** e
        sg_t = sg_t + comp.lift(ring2, nc) * prod_beta
    return ctx.is_zero(g_st - sg_t - g_s)


@dataclass(frozen=True)
class RingCoboundaryDecision:
    witness: Poly | None
    report: LinearReport

    def is_coboundary(self) -> bool:
        return self.witness is not None


def _merge_reports(reports) -> LinearReport:
    return LinearReport(
        rows=sum(r.rows for r in reports),
        cols=sum(r.cols for r in reports),
        rank=sum(r.rank for r in reports),
        aug_rank=sum(r.aug_rank for r in reports),
    )


def is_coboundary_ring(rc: RingCocycle) -> RingCoboundaryDecision:
    """Coboundary decision inside the fixed graded component, solved one
    block multidegree at a time."""
    eng = rc.engine()
    p = rc.module.group.p
    comp_map = rc.component_map()
    deltas = rc.support_multidegs()
    components = eng.components(rc.degree)
    reports = []
    witness = eng.ring_x.zero()
    solvable = True
    for delta in deltas:
        betas = components[delta]
        col_index = {b: i for i, b in enumerate(betas)}
        rows = set()
        cols = {}
        rhs = {}
        for beta in betas:
            col = {}
            joint = eng.expand(beta) - eng.lift_x(eng.x_monomial(beta))
            for key, c in eng.split_terms(joint):
                gamma, alpha = key
                col[(alpha, gamma)] = c
                rows.add((alpha, gamma))
            cols[beta] = col
            comp = comp_map.get(beta)
            if comp is not None and not comp.is_zero():
                for exps, c in eng.nf(eng.lift_g(comp)).terms.items():
                    gamma, alpha = exps[: eng.nc], exps[eng.nc :]
                    key = (beta, gamma)
                    rhs[(beta, gamma)] = (rhs.get((beta, gamma), 0) + c) % p
                    rows.add((beta, gamma))
        row_list = sorted(rows, key=lambda k: (grevlex_key(k[0]), grevlex_key(k[1])))
        row_of = {k: i for i, k in enumerate(row_list)}
        a = np.zeros((len(row_list), len(betas)), dtype=np.int64)
        b = np.zeros(len(row_list), dtype=np.int64)
        for beta in betas:
            j = col_index[beta]
            for key, c in cols[beta].items():
                a[row_of[key], j] = c
        for key, c in rhs.items():
            b[row_of[key]] = c
        sol, report = linalg.solve(a, b, p)
        reports.append(report)
        if sol is None:
            solvable = False
            continue
        for beta, c in zip(betas, sol):
            if c:
                witness = witness + eng.ring_x.monomial(beta, int(c))
    report = _merge_reports(reports) if reports else LinearReport(0, 0, 0, 0)
    if not solvable:
        return RingCoboundaryDecision(None, report)
    check = eng.act_on_x_poly(witness) - eng.lift_x(witness) - rc.joint_value()
    if not eng.nf(check).is_zero():
        raise AssertionError("solver returned an invalid coboundary witness")
    return RingCoboundaryDecision(witness, report)


def is_invariant(v: Representation, a: Poly) -> bool:
    """Whether sigma . a equals a identically modulo the relations."""
    eng = slice_engine(v)
    if a.ring != eng.ring_x:
        raise ValueError("polynomial does not live in the module coordinates")
    diff = eng.act_on_x_poly(a) - eng.lift_x(a)
    return eng.nf(diff).is_zero()


def multiply_invariant(a: Poly, rc: RingCocycle, check: bool = True) -> RingCocycle:
    """The cocycle (a g)_sigma = a g_sigma for a verified invariant a."""
    eng = rc.engine()
    if not a.is_homogeneous():
        raise ValueError("invariant factor must be homogeneous")
    if check and not is_invariant(rc.module, a):
        raise ValueError("factor is not invariant")
    da = max(a.total_degree(), 0)
    new_degree = rc.degree + da
    product = rc.joint_value() * eng.lift_x(a)
    monos = eng.monomials(new_degree)
    acc = {beta: eng.module.ring.zero() for beta in monos}
    ring_g = eng.module.ring
    for exps, c in product.terms.items():
        gamma, alpha = exps[: eng.nc], exps[eng.nc :]
        acc[alpha] = acc[alpha] + ring_g.monomial(gamma, c)
    return RingCocycle(rc.module, new_degree, tuple(acc[b] for b in monos))


def annihilator_witness(a: Poly, rc: RingCocycle) -> RingCoboundaryDecision:
    """A homogeneous b with a g_sigma = (sigma - 1) b, if one exists; the
    witness is re-verified before return."""
    ag = multiply_invariant(a, rc)
    return is_coboundary_ring(ag)


def annihilator_space(rc: RingCocycle, d: int, invariant_basis) -> list:
    """Basis of the degree-d invariants a with a g a coboundary, found by
    the joint linear system over (a coefficients, b coefficients)."""
    eng = rc.engine()
    p = rc.module.group.p
    basis = list(invariant_basis)
    if not basis:
        return []
    products = [multiply_invariant(a, rc, check=False) for a in basis]
    target_degree = rc.degree + d
    components = eng.components(target_degree)
    needed = []
    for prod in products:
        for delta in prod.support_multidegs():
            if delta not in needed:
                needed.append(delta)
    b_betas = []
    for delta in needed:
        b_betas.extend(components[delta])
    b_index = {b: i for i, b in enumerate(b_betas)}
    ncols = len(basis) + len(b_betas)
    rows = set()
    entries = {}

    def put(key, col, c):
        entries[(key, col)] = (entries.get((key, col), 0) + c) % p
        rows.add(key)

    for s, prod in enumerate(products):
        for beta, comp in zip(eng.monomials(target_degree), prod.components):
            if comp.is_zero():
                continue
            for exps, c in eng.nf(eng.lift_g(comp)).terms.items():
                gamma = exps[: eng.nc]
                put((beta, gamma), s, -c)
    for beta in b_betas:
        joint = eng.expand(beta) - eng.lift_x(eng.x_monomial(beta))
        for key, c in eng.split_terms(joint):
            gamma, alpha = key
            put((alpha, gamma), len(basis) + b_index[beta], c)
    row_list = sorted(rows, key=lambda k: (grevlex_key(k[0]), grevlex_key(k[1])))
    row_of = {k: i for i, k in enumerate(row_list)}
    a = np.zeros((len(row_list), ncols), dtype=np.int64)
    for (key, col), c in entries.items():
        a[row_of[key], col] = c
    null = linalg.nullspace(a, p)
    if null.shape[0] == 0:
        return []
    lam = null[:, : len(basis)]
    lam, _ = linalg.rref(lam, p)
    out = []
    for row in lam:
        if not row.any():
            continue
        poly = eng.ring_x.zero()
        for s, c in enumerate(row):
            if c:
                poly = poly + basis[s] * int(c)
        out.append(poly)
    return out


# -- direct summand witnesses and embeddings ------------------------------------


@dataclass(frozen=True)
class SummandWitness:
    """A verified realization of a module as a direct summand of one block
    multidegree component of a degree-d coordinate slice: an equivariant
    inclusion and an equivariant projection with projection . inclusion
    equal to the identity."""

    module: Representation  # the summand U
    ambient: Representation  # the module V whose coordinate ring is used
    degree: int
    multideg: tuple
    betas: tuple  # monomials of the component, in slice order
    inclusion: tuple  # len(betas) x dim U
    projection: tuple  # dim U x len(betas)


def _component_expansions(eng: SliceEngine, betas):
    expansions = {}
    beta_set = set(betas)
    for beta in betas:
        joint = eng.expand(beta)
        table = {}
        for key, c in eng.split_terms(joint):
            gamma, alpha = key
            if alpha not in beta_set:
                raise AssertionError("slice expansion left its multidegree component")
            table[(alpha, gamma)] = c
        expansions[beta] = table
    return expansions


def find_summand_witness(
    u: Representation, v: Representation, degree: int, multideg: tuple,
    enumeration_cap: int = 100000,
) -> SummandWitness:
    """Search one block multidegree component of the degree-d slice for a
    direct summand isomorphic to u, by solving for equivariant maps in both
    directions and scanning the product condition."""
    eng = slice_engine(v)
    ctx = context(v.group, 1)
    p = v.group.p
    components = eng.components(degree)
    if multideg not in components:
        raise SummandError(f"no component of multidegree {multideg} in degree {degree}")
    betas = components[multideg]
    m = len(betas)
    udim = u.dim
    expansions = _component_expansions(eng, betas)
    beta_index = {b: i for i, b in enumerate(betas)}
    u_nf = [[ctx.nf(e) for e in row] for row in u.action]

    def assemble(rows, ncols, sort_key):
        row_list = sorted(rows, key=sort_key)
        a = np.zeros((len(row_list), ncols), dtype=np.int64)
        for r, key in enumerate(row_list):
            for col, c in rows[key].items():
                a[r, col] = c
        return a

    # inclusion J: (slice action) . J = J . (action of u)
    rows: dict = {}

    def add(key, col, c):
        row = rows.setdefault(key, {})
        row[col] = (row.get(col, 0) + c) % p

    for j in range(udim):
        for beta in betas:
            bi = beta_index[beta]
            for (alpha, gamma), c in expansions[beta].items():
                add((beta_index[alpha], gamma, j), bi * udim + j, c)
        for jp in range(udim):
            e = u_nf[jp][j]
            for exps, c in e.terms.items():
                for alpha_i in range(m):
                    add((alpha_i, exps, j), alpha_i * udim + jp, -c)
    a = assemble(rows, m * udim, lambda k: (k[0], grevlex_key(k[1]), k[2]))
    incl_space = linalg.nullspace(a, p)

    # projection Pr: (action of u) . Pr = Pr . (slice action)
    rows = {}
    for beta in betas:
        bi = beta_index[beta]
        for i in range(udim):
            for (alpha, gamma), c in expansions[beta].items():
                add((i, beta, gamma), i * m + beta_index[alpha], c)
            for ip in range(udim):
                e = u_nf[i][ip]
                for exps, c in e.terms.items():
                    add((i, beta, exps), ip * m + bi, -c)
    a = assemble(rows, udim * m, lambda k: (k[0], grevlex_key(k[1]), grevlex_key(k[2])))
    proj_space = linalg.nullspace(a, p)

    r_dim, s_dim = incl_space.shape[0], proj_space.shape[0]
    if r_dim == 0 or s_dim == 0:
        raise SummandError("no equivariant maps into or out of the component")
    if p ** (r_dim + s_dim) > enumeration_cap:
        raise ResourceCapError(
            f"summand search space {p}^{r_dim + s_dim} exceeds the cap"
        )
    j_mats = [vec.reshape(m, udim) for vec in incl_space]
    p_mats = [vec.reshape(udim, m) for vec in proj_space]
    products = [
        [np.mod(pm @ jm, p) for jm in j_mats] for pm in p_mats
    ]
    eye = np.eye(udim, dtype=np.int64)

    def scan(space_size, length):
        coeffs = [0] * length
        for _ in range(space_size):
            yield tuple(coeffs)
            for i in range(length):
                coeffs[i] += 1
                if coeffs[i] < p:
                    break
                coeffs[i] = 0

    for ce in scan(p ** s_dim, s_dim):
        if not any(ce):
            continue
        for cj in scan(p ** r_dim, r_dim):
            if not any(cj):
                continue
            total = np.zeros((udim, udim), dtype=np.int64)
            for bi, cb in enumerate(ce):
                if not cb:
                    continue
                for ai, ca in enumerate(cj):
                    if ca:
                        total = (total + cb * ca * products[bi][ai]) % p
            if np.array_equal(total, eye):
                j_mat = np.zeros((m, udim), dtype=np.int64)
                for ai, ca in enumerate(cj):
                    if ca:
                        j_mat = (j_mat + ca * j_mats[ai]) % p
                p_mat = np.zeros((udim, m), dtype=np.int64)
                for bi, cb in enumerate(ce):
                    if cb:
                        p_mat = (p_mat + cb * p_mats[bi]) % p
                witness = SummandWitness(
                    module=u,
                    ambient=v,
                    degree=degree,
                    multideg=multideg,
                    betas=tuple(betas),
                    inclusion=tuple(tuple(int(x) for x in row) for row in j_mat),
                    projection=tuple(tuple(int(x) for x in row) for row in p_mat),
                )
                verify_summand_witness(witness)
                return witness
    raise SummandError("component contains no direct summand copy of the module")


def verify_summand_witness(w: SummandWitness) -> None:
    """Re-verify both intertwining identities and the retraction property."""
    u, v = w.module, w.ambient
    eng = slice_engine(v)
    ctx = context(v.group, 1)
    p = v.group.p
    betas = list(w.betas)
    beta_index = {b: i for i, b in enumerate(betas)}
    expansions = _component_expansions(eng, betas)
    jm = np.array(w.inclusion, dtype=np.int64)
    pm = np.array(w.projection, dtype=np.int64)
    if not np.array_equal(np.mod(pm @ jm, p), np.eye(u.dim, dtype=np.int64)):
        raise SummandError("projection . inclusion is not the identity")
    ring = v.ring
    # slice action on the component, as a matrix of group-ring polynomials
    act = [[ring.zero()] * len(betas) for _ in range(len(betas))]
    for beta in betas:
        for (alpha, gamma), c in expansions[beta].items():
            act[beta_index[alpha]][beta_index[beta]] = act[beta_index[alpha]][
                beta_index[beta]
            ] + ring.monomial(gamma, c)
    u_act = u.action
    for bi in range(len(betas)):
        for j in range(u.dim):
            lhs = ring.zero()
            for bj in range(len(betas)):
                c = int(jm[bj, j])
                if c:
                    lhs = lhs + act[bi][bj] * c
            rhs = ring.zero()
            for jp in range(u.dim):
                c = int(jm[bi, jp])
                if c:
                    rhs = rhs + u_act[jp][j] * c
            if not ctx.is_zero(lhs - rhs):
                raise SummandError("inclusion fails to intertwine")
    for i in range(u.dim):
        for bj in range(len(betas)):
            lhs = ring.zero()
            for bi in range(len(betas)):
                c = int(pm[i, bi])
                if c:
                    lhs = lhs + act[bi][bj] * c
            rhs = ring.zero()
            for ip in range(u.dim):
                c = int(pm[ip, bj])
                if c:
                    rhs = rhs + u_act[i][ip] * c
            if not ctx.is_zero(lhs - rhs):
                raise SummandError("projection fails to intertwine")


def embed_in_coordinate_ring(g: Cocycle, witness: SummandWitness) -> RingCocycle:
    """Push a module-valued cocycle into the degree-d slice through a
    verified summand witness.  Nontriviality is not transported: callers
    re-check it with is_coboundary_ring in the ambient component."""
    if g.target != witness.module:
        raise SummandError("witness does not match the cocycle's target")
    verify_summand_witness(witness)
    v = witness.ambient
    eng = slice_engine(v)
    jm = np.array(witness.inclusion, dtype=np.int64)
    monos = eng.monomials(witness.degree)
    ring_g = v.ring
    comp_of = {b: ring_g.zero() for b in monos}
    for bi, beta in enumerate(witness.betas):
        acc = ring_g.zero()
        for j in range(g.target.dim):
            c = int(jm[bi, j])
            if c:
                acc = acc + g.components[j] * c
        comp_of[beta] = acc
    rc = RingCocycle(v, witness.degree, tuple(comp_of[b] for b in monos))
    if not verify_ring_cocycle(rc):
        raise CocycleError("embedded cocycle failed the cocycle identity")
    return rc
