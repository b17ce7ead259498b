"""Finite dimensional rational modules of a presented group.

A representation is an action matrix with entries in the coordinate ring,
normalized modulo the relation ideal.  The functors here cover everything
the certificate pipeline needs: dual, direct sum, tensor, symmetric and
Frobenius powers, submodules and quotients, the module of maps vanishing
on a submodule, extensions by a cocycle, restriction along a homomorphism,
and an exact point-kernel faithfulness test.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

import numpy as np

from . import linalg
from .groups import GroupHom, GroupPresentation, context
from .poly import (
    DEFAULT_CAPS,
    IdealBasis,
    Poly,
    ResourceCaps,
    Ring,
    groebner,
    normal_form,
)


class RepresentationError(ValueError):
    """A construction produced data violating the module axioms."""


class SubmoduleError(ValueError):
    """The given column span is not stable under the ambient action."""


class CocycleIdentityError(ValueError):
    """A claimed cocycle fails the cocycle identity."""


# -- polynomial matrices -------------------------------------------------------


def mat_mul(a, b, ring: Ring):
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = ring.zero()
            for r in range(k):
                x = a[i][r]
                if x.is_zero():
                    continue
                y = b[r][j]
                if y.is_zero():
                    continue
                acc = acc + x * y
            row.append(acc)
        out.append(row)
    return out


def mat_int_poly(m: np.ndarray, rows_of_polys, ring: Ring):
    """Product of an integer matrix with a matrix of polynomials."""
    out = []
    for i in range(m.shape[0]):
        row = []
        for j in range(len(rows_of_polys[0])):
            acc = ring.zero()
            for r in range(m.shape[1]):
                c = int(m[i, r])
                if c:
                    acc = acc + rows_of_polys[r][j] * c
            row.append(acc)
        out.append(row)
    return out


def _blocks_of(action):
    """Connected components of the coupling graph of the action matrix."""
    n = len(action)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    for i in range(n):
        for j in range(n):
            if i != j and not action[i][j].is_zero():
                union(i, j)
    groups: dict = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return tuple(tuple(v) for _, v in sorted(groups.items()))


class Representation:
    """A module given by its action matrix over the coordinate ring.

    Entries are stored in normal form modulo the relation ideal; the unit
    law is checked on construction, the two-point homomorphism law by
    verify().
    """

    __slots__ = ("group", "dim", "action", "basis", "provenance", "blocks", "_key")

    def __init__(self, group: GroupPresentation, action, basis=None, provenance: str = ""):
        self.group = group
        self.dim = len(action)
        ctx = context(group, 1)
        self.action = tuple(tuple(ctx.nf(e) for e in row) for row in action)
        if any(len(row) != self.dim for row in self.action):
            raise RepresentationError("action matrix is not square")
        if basis is None:
            basis = tuple(f"e{i}" for i in range(self.dim))
        self.basis = tuple(basis)
        if len(self.basis) != self.dim:
            raise RepresentationError("basis labels do not match the dimension")
        self.provenance = provenance
        for i in range(self.dim):
            for j in range(self.dim):
                want = 1 if i == j else 0
                if self.action[i][j].eval_ints(group.unit) != want:
                    raise RepresentationError(
                        f"action at the unit is not the identity (entry {i},{j})"
                    )
        self.blocks = _blocks_of(self.action)
        self._key = None

    @property
    def ring(self) -> Ring:
        return self.group.ring1

    def key(self):
        if self._key is None:
            self._key = (self.group, self.dim, self.action)
        return self._key

    def __eq__(self, other):
        if not isinstance(other, Representation):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"<Representation {self.provenance or 'dim ' + str(self.dim)} over {self.group}>"

    def action_at(self, coords, ring: Ring):
        """Action matrix evaluated at a point given by coordinate polys."""
        images = list(coords)
        return [[e.subst(images, ring) for e in row] for row in self.action]

    def action_at_inverse(self):
        """Action matrix at the inverse generic point, normalized."""
        ctx = context(self.group, 1)
        inv = [f.lift(ctx.ring) for f in self.group.inv]
        return [[ctx.nf(e.subst(inv, ctx.ring)) for e in row] for row in self.action]

    def verify(self) -> bool:
        """Two-generic-point homomorphism identity, checked symbolically."""
        ctx = context(self.group, 2)
        sigma, tau = ctx.point(0), ctx.point(1)
        a_s = [[ctx.lift1(e, 0) for e in row] for row in self.action]
        a_t = [[ctx.lift1(e, 1) for e in row] for row in self.action]
        prod = mat_mul(a_s, a_t, ctx.ring)
        mult = ctx.mult(sigma, tau)
        a_st = self.action_at(mult, ctx.ring)
        for i in range(self.dim):
            for j in range(self.dim):
                if not ctx.is_zero(prod[i][j] - a_st[i][j]):
                    return False
        return True


def natural_module(group: GroupPresentation) -> Representation:
    labels = ("X", "Y")[: len(group.natural_matrix)]
    if len(group.natural_matrix) > 2:
        labels = tuple(f"e{i}" for i in range(len(group.natural_matrix)))
    return Representation(
        group, group.natural_matrix, labels, f"natural({group.name})"
    )


def trivial_module(group: GroupPresentation, dim: int = 1) -> Representation:
    ring = group.ring1
    action = [[ring.one() if i == j else ring.zero() for j in range(dim)] for i in range(dim)]
    return Representation(group, action, None, f"trivial^{dim}({group.name})")


def dual(v: Representation) -> Representation:
    """Transpose of the action at the inverse generic point; no matrix
    inversion over the coordinate ring is ever performed."""
    inv_action = v.action_at_inverse()
    action = [[inv_action[j][i] for j in range(v.dim)] for i in range(v.dim)]
    labels = tuple(f"{l}*" for l in v.basis)
    return Representation(v.group, action, labels, f"dual({v.provenance})")


def direct_sum(*vs: Representation) -> Representation:
    group = vs[0].group
    ring = group.ring1
    for v in vs:
        if v.group != group:
            raise RepresentationError("direct sum needs modules of the same group")
    dim = sum(v.dim for v in vs)
    action = [[ring.zero()] * dim for _ in range(dim)]
    labels = []
    off = 0
    for v in vs:
        for i in range(v.dim):
            for j in range(v.dim):
                action[off + i][off + j] = v.action[i][j]
        labels.extend(v.basis)
        off += v.dim
    prov = "(+)".join(v.provenance for v in vs)
    return Representation(group, action, labels, prov)


def tensor(v: Representation, w: Representation) -> Representation:
    if v.group != w.group:
        raise RepresentationError("tensor needs modules of the same group")
    action = []
    labels = []
    for i in range(v.dim):
        for k in range(w.dim):
            row = []
            for j in range(v.dim):
                for l in range(w.dim):
                    row.append(v.action[i][j] * w.action[k][l])
            action.append(row)
            labels.append(f"{v.basis[i]}(x){w.basis[k]}")
    return Representation(
        v.group, action, labels, f"tensor({v.provenance},{w.provenance})"
    )


def sym_monomials(n: int, d: int):
    """Exponent tuples of the degree-d monomials in n symbols: the pure
    d-th powers first, then the rest in descending lexicographic order."""
    if d == 0:
        return [(0,) * n]
    pure = []
    rest = []
    for combo in combinations_with_replacement(range(n), d):
        beta = [0] * n
        for i in combo:
            beta[i] += 1
        beta = tuple(beta)
        if max(beta) == d:
            pure.append(beta)
        else:
            rest.append(beta)
    pure.sort(key=lambda b: b.index(d))
    rest.sort(reverse=True)
    return pure + rest


def monomial_label(labels, beta) -> str:
    parts = []
    for lab, e in zip(labels, beta):
        if e == 1:
            parts.append(lab)
        elif e > 1:
            parts.append(f"{lab}^{e}")
    if not parts:
        return "1"
    sep = "" if all(len(l) <= 3 for l in labels) else "*"
    return sep.join(parts)


def symmetric_power(v: Representation, d: int) -> Representation:
    """The induced substitution action on degree-d monomials in the basis."""
    if d < 1:
        raise ValueError("symmetric power needs d >= 1")
    group = v.group
    nc = group.ncoords
    n = v.dim
    aux = Ring(group.p, nc + n)
    images = []
    for i in range(n):
        acc = aux.zero()
        for r in range(n):
            e = v.action[r][i]
            if not e.is_zero():
                acc = acc + e.lift(aux, 0) * aux.var(nc + r)
        images.append(acc)
    monos = sym_monomials(n, d)
    index = {m: i for i, m in enumerate(monos)}
    ring = group.ring1
    action = [[ring.zero()] * len(monos) for _ in range(len(monos))]
    for col, beta in enumerate(monos):
        prod = aux.one()
        for i, e in enumerate(beta):
            if e:
                prod = prod * images[i] ** e
        for exps, c in prod.terms.items():
            gamma, alpha = exps[:nc], exps[nc:]
            action[index[alpha]][col] = action[index[alpha]][col] + ring.monomial(gamma, c)
    labels = tuple(monomial_label(v.basis, b) for b in monos)
    return Representation(group, action, labels, f"sym^{d}({v.provenance})")


@dataclass(frozen=True)
class Submodule:
    """A verified submodule: ambient module, inclusion matrix of full
    column rank over GF(p), the induced module structure, and the data of
    a distinguished coordinate complement."""

    ambient: Representation
    inclusion: tuple
    module: Representation
    pivot_rows: tuple
    complement: tuple
    reduction: tuple  # rows express ambient coordinates in the residue basis

    @property
    def dim(self) -> int:
        return self.module.dim

    def inclusion_array(self) -> np.ndarray:
        return np.array(self.inclusion, dtype=np.int64)

    def reduction_array(self) -> np.ndarray:
        return np.array(self.reduction, dtype=np.int64).reshape(
            len(self.complement), self.ambient.dim
        )


def submodule(ambient: Representation, inclusion, labels=None, provenance="") -> Submodule:
    """Verify that the column span of `inclusion` is stable under the
    ambient action and package the induced module."""
    p = ambient.group.p
    incl = np.mod(np.array(inclusion, dtype=np.int64), p)
    n, w = incl.shape
    if n != ambient.dim:
        raise SubmoduleError("inclusion has wrong number of rows")
    pivot_rows = []
    seen = np.zeros((0, w), dtype=np.int64)
    for r in range(n):
        cand = np.concatenate([seen, incl[r : r + 1]], axis=0)
        if linalg.rank(cand, p) > len(pivot_rows):
            pivot_rows.append(r)
            seen = cand
        if len(pivot_rows) == w:
            break
    if len(pivot_rows) < w:
        raise SubmoduleError("inclusion does not have full column rank")
    inv_rr = linalg.invert(incl[pivot_rows], p)
    ring = ambient.ring
    ctx = context(ambient.group, 1)

    incl_cols = [[ring.const(int(incl[i, j])) for j in range(w)] for i in range(n)]
    m = mat_mul([list(row) for row in ambient.action], incl_cols, ring)
    m_pivot = [m[r] for r in pivot_rows]
    b = mat_int_poly(inv_rr, m_pivot, ring)
    # closure: action . incl must equal incl . b identically
    back = mat_int_poly(incl, b, ring)
    for i in range(n):
        for j in range(w):
            if not ctx.is_zero(m[i][j] - back[i][j]):
                raise SubmoduleError(
                    f"column span is not stable under the action (entry {i},{j})"
                )
    if labels is None:
        labels = []
        for j in range(w):
            col = incl[:, j]
            nz = np.nonzero(col)[0]
            if nz.size == 1 and col[nz[0]] == 1:
                labels.append(ambient.basis[nz[0]])
            else:
                labels.append(f"w{j}")
    sub_rep = Representation(
        ambient.group, b, labels, provenance or f"sub({ambient.provenance})"
    )
    complement = tuple(i for i in range(n) if i not in pivot_rows)
    t = np.zeros((n, n), dtype=np.int64)
    t[:, :w] = incl
    for k, c in enumerate(complement):
        t[c, w + k] = 1
    t_inv = linalg.invert(t, p)
    reduction = tuple(tuple(int(x) for x in row) for row in t_inv[w:, :])
    return Submodule(
        ambient=ambient,
        inclusion=tuple(tuple(int(x) for x in row) for row in incl),
        module=sub_rep,
        pivot_rows=tuple(pivot_rows),
        complement=complement,
        reduction=reduction,
    )


def frobenius_power(v: Representation) -> Submodule:
    """The span of the p-th powers of the basis inside the p-th symmetric
    power; closure under the ambient action is re-verified."""
    p = v.group.p
    s = symmetric_power(v, p)
    incl = np.zeros((s.dim, v.dim), dtype=np.int64)
    for i in range(v.dim):
        incl[i, i] = 1
    try:
        sub = submodule(s, incl, provenance=f"frob({v.provenance})")
    except SubmoduleError as exc:  # pragma: no cover - would signal a bug
        raise RepresentationError(f"frobenius power closure failed: {exc}")
    return sub


def quotient(v: Representation, sub: Submodule) -> Representation:
    """Action on the residue classes of the coordinates complementary to
    the submodule's pivot coordinates."""
    if sub.ambient != v:
        raise SubmoduleError("submodule does not belong to this module")
    ring = v.ring
    ctx = context(v.group, 1)
    p_mat = sub.reduction_array()
    comp = sub.complement
    q_dim = len(comp)
    # quotient action = reduction . action . unit columns of the complement
    pa = mat_int_poly(p_mat, [list(r) for r in v.action], ring)
    action = [[pa[i][c] for c in comp] for i in range(q_dim)]
    # the projection intertwines: reduction . action == action_quotient . reduction
    p_polys = [[ring.const(int(x)) for x in row] for row in p_mat]
    qp = mat_mul(action, p_polys, ring)
    for i in range(q_dim):
        for j in range(v.dim):
            if not ctx.is_zero(pa[i][j] - qp[i][j]):
                raise SubmoduleError("quotient projection fails to intertwine")
    labels = tuple(v.basis[c] for c in comp)
    return Representation(
        v.group, action, labels, f"quot({v.provenance}/{sub.module.provenance})"
    )


class Hom0Data:
    """The module of linear maps into a submodule that vanish on it, under
    conjugation, together with the coordinate machinery for expanding such
    maps in the basis f[i,c]: v -> (class coordinate c of v) * w_i.

    The action computed through conjugation is checked against the tensor
    construction sub (x) dual(quotient); on these bases the two agree
    entry by entry, so the identity matrix is the verified intertwiner.
    """

    def __init__(self, v: Representation, sub: Submodule):
        if sub.ambient != v:
            raise SubmoduleError("submodule does not belong to this module")
        self.ambient = v
        self.sub = sub
        group = v.group
        ring = v.ring
        ctx = context(group, 1)
        p = group.p
        n = v.dim
        w = sub.dim
        self.quot = quotient(v, sub)
        q = self.quot.dim
        self.n, self.w, self.q = n, w, q
        if w * q == 0:
            self.rep = Representation(group, [], (), f"hom0({v.provenance})")
            return
        p_mat = sub.reduction_array()
        phi = np.zeros((w * n, w * q), dtype=np.int64)
        for i in range(w):
            for c in range(q):
                for j in range(n):
                    phi[i * n + j, i * q + c] = p_mat[c, j]
        pivot_rows = []
        seen = np.zeros((0, w * q), dtype=np.int64)
        for r in range(w * n):
            cand = np.concatenate([seen, phi[r : r + 1]], axis=0)
            if linalg.rank(cand, p) > len(pivot_rows):
                pivot_rows.append(r)
                seen = cand
            if len(pivot_rows) == w * q:
                break
        self.phi = phi
        self.pivot_rows = pivot_rows
        self.inv_rr = linalg.invert(phi[pivot_rows], p)

        a_inv = v.action_at_inverse()
        b_act = sub.module.action
        action = [[ring.zero()] * (w * q) for _ in range(w * q)]
        for c in range(q):
            # row c of the reduction matrix composed with the inverse action
            vec = []
            for j in range(n):
                acc = ring.zero()
                for r in range(n):
                    coef = int(p_mat[c, r])
                    if coef:
                        acc = acc + a_inv[r][j] * coef
                vec.append(ctx.nf(acc))
            for i in range(w):
                mat = [[None] * n for _ in range(w)]
                for r in range(w):
                    br = b_act[r][i]
                    for j in range(n):
                        mat[r][j] = ring.zero() if br.is_zero() else br * vec[j]
                coords = self.coords_of(mat)
                for kk in range(w * q):
                    action[kk][i * q + c] = coords[kk]

        labels = tuple(
            f"{sub.module.basis[i]}({self.quot.basis[c]})"
            for i in range(w)
            for c in range(q)
        )
        self.rep = Representation(group, action, labels, f"hom0({v.provenance})")
        other = tensor(sub.module, dual(self.quot))
        for i in range(w * q):
            for j in range(w * q):
                if not ctx.is_zero(self.rep.action[i][j] - other.action[i][j]):
                    raise RepresentationError(
                        "conjugation action disagrees with the tensor construction"
                    )

    def coords_of(self, mat):
        """Coordinates of a w x n polynomial matrix in the f[i,c] basis;
        raises if the matrix does not lie in the span (i.e. does not vanish
        on the submodule)."""
        ring = self.ambient.ring
        ctx = context(self.ambient.group, 1)
        w, n, q = self.w, self.n, self.q
        flat = [mat[r][j] for r in range(w) for j in range(n)]
        coords = []
        for kk in range(w * q):
            acc = ring.zero()
            for rr in range(w * q):
                coef = int(self.inv_rr[kk, rr])
                if coef:
                    acc = acc + flat[self.pivot_rows[rr]] * coef
            coords.append(ctx.nf(acc))
        for rr in range(w * n):
            acc = ring.zero()
            for kk in range(w * q):
                coef = int(self.phi[rr, kk])
                if coef:
                    acc = acc + coords[kk] * coef
            if not ctx.is_zero(acc - flat[rr]):
                raise RepresentationError(
                    "matrix does not lie in the span of maps vanishing on the submodule"
                )
        return coords

    def matrix_of(self, coords):
        """Inverse of coords_of on exact coordinate vectors over GF(p)."""
        w, n, q = self.w, self.n, self.q
        out = np.zeros((w, n), dtype=np.int64)
        for kk, c in enumerate(coords):
            i, cc = divmod(kk, q)
            for j in range(n):
                out[i, j] = (out[i, j] + c * self.phi[i * n + j, kk]) % self.ambient.group.p
        return out


def hom0_data(v: Representation, sub: Submodule) -> Hom0Data:
    return Hom0Data(v, sub)


def hom0(v: Representation, sub: Submodule) -> Representation:
    return Hom0Data(v, sub).rep


def extend_by_cocycle(u: Representation, components, check: bool = True) -> Representation:
    """The extension of u by a one-dimensional trivial module twisted by a
    cocycle, acting by [[A, g], [0, 1]].  Verifying the module law re-proves
    the cocycle identity."""
    ring = u.ring
    ctx = context(u.group, 1)
    components = [ctx.nf(c) for c in components]
    if len(components) != u.dim:
        raise CocycleIdentityError("cocycle has wrong number of components")
    n = u.dim
    action = [[u.action[i][j] for j in range(n)] + [components[i]] for i in range(n)]
    action.append([ring.zero()] * n + [ring.one()])
    labels = tuple(u.basis) + ("lam",)
    try:
        rep = Representation(u.group, action, labels, f"extend({u.provenance})")
    except RepresentationError as exc:
        raise CocycleIdentityError(f"cocycle does not vanish at the unit: {exc}")
    if check and not rep.verify():
        raise CocycleIdentityError("cocycle identity fails symbolically")
    return rep


def restrict(v: Representation, hom: GroupHom, check: bool = True) -> Representation:
    """Pull the action back along a verified homomorphism."""
    if hom.target != v.group:
        raise RepresentationError("homomorphism does not land in the module's group")
    ring = hom.source.ring1
    images = list(hom.coord_map)
    action = [[e.subst(images, ring) for e in row] for row in v.action]
    rep = Representation(
        hom.source, action, v.basis, f"restrict({v.provenance},{hom.source.name})"
    )
    if check and not rep.verify():
        raise RepresentationError("restricted action fails the module law")
    return rep


def is_faithful(v: Representation, caps: ResourceCaps = DEFAULT_CAPS) -> bool:
    """Whether the point kernel of the action is trivial.

    The kernel equations action(sigma) = identity are adjoined to the group
    relations; each coordinate is then tested for vanishing on the solution
    set by radical membership (Rabinowitsch trick), which decides triviality
    of the kernel over the algebraic closure."""
    group = v.group
    ring = group.ring1
    nc = group.ncoords
    gens = list(group.relations)
    for i in range(v.dim):
        for j in range(v.dim):
            e = v.action[i][j] - (1 if i == j else 0)
            if not e.is_zero():
                gens.append(e)
    gens = sorted(set(gens), key=lambda g: (tuple(sorted(g.terms.items()))))
    ring_t = Ring(group.p, nc + 1)
    t = ring_t.var(nc)
    lifted = [g.lift(ring_t) for g in gens]
    for i in range(nc):
        target = ring_t.var(i) - group.unit[i]
        gb = groebner(lifted + [ring_t.one() - t * target], caps)
        one_in_ideal = normal_form(ring_t.one(), gb).is_zero()
        if not one_in_ideal:
            return False
    return True


def block_subrep(v: Representation, indices) -> Representation:
    """The sub-representation on one coupling block of the action matrix."""
    indices = list(indices)
    for i in indices:
        for j in range(v.dim):
            if j not in indices and (
                not v.action[i][j].is_zero() or not v.action[j][i].is_zero()
            ):
                raise RepresentationError("indices do not form a closed block")
    action = [[v.action[i][j] for j in indices] for i in indices]
    labels = tuple(v.basis[i] for i in indices)
    return Representation(v.group, action, labels, f"block({v.provenance})")


def intertwiner_space(src: Representation, dst: Representation):
    """Basis of the GF(p) matrices T with T . action_src = action_dst . T."""
    if src.group != dst.group:
        raise RepresentationError("intertwiners need a common group")
    group = src.group
    p = group.p
    ctx = context(group, 1)
    ns, nd = src.dim, dst.dim
    rows: dict = {}

    def add(key, col, c):
        row = rows.setdefault(key, {})
        row[col] = (row.get(col, 0) + c) % p

    for i in range(nd):
        for l in range(ns):
            for j in range(ns):
                e = ctx.nf(src.action[j][l])
                for exps, c in e.terms.items():
                    add((i, l, exps), i * ns + j, c)
            for j in range(nd):
                e = ctx.nf(dst.action[i][j])
                for exps, c in e.terms.items():
                    add((i, l, exps), j * ns + l, -c)
    from .poly import grevlex_key

    row_list = sorted(rows, key=lambda k: (k[0], k[1], grevlex_key(k[2])))
    a = np.zeros((len(row_list), nd * ns), dtype=np.int64)
    for r, key in enumerate(row_list):
        for col, c in rows[key].items():
            a[r, col] = c
    return [vec.reshape(nd, ns) for vec in linalg.nullspace(a, p)]


def find_isomorphism(src: Representation, dst: Representation, cap: int = 100000):
    """An invertible intertwiner from the span, or None."""
    if src.dim != dst.dim:
        return None
    p = src.group.p
    space = intertwiner_space(src, dst)
    r = len(space)
    if r == 0:
        return None
    if p**r > cap:
        raise ResourceCapError(f"isomorphism scan space {p}^{r} exceeds the cap")
    coeffs = [0] * r
    for _ in range(p**r):
        total = np.zeros((dst.dim, src.dim), dtype=np.int64)
        nonzero = False
        for i, c in enumerate(coeffs):
            if c:
                nonzero = True
                total = (total + c * space[i]) % p
        if nonzero and linalg.rank(total, p) == src.dim:
            return total
        for i in range(r):
            coeffs[i] += 1
            if coeffs[i] < p:
                break
            coeffs[i] = 0
    return None


# -- coordinate ring slices ----------------------------------------------------


class SliceEngine:
    """Symbolic engine for the graded pieces of the polynomial functions
    on a module.

    Variables x0..x_{n-1} are the coordinate functionals; sigma acts by
    composing with the inverse, so sigma . x_i expands through the dual
    action.  Expansions carry the group coordinates in the first block of
    the joint ring and the module coordinates in the second.
    """

    def __init__(self, v: Representation):
        self.module = v
        group = v.group
        self.nc = group.ncoords
        self.n = v.dim
        self.ring_x = Ring(group.p, self.n)
        self.joint = Ring(group.p, self.nc + self.n)
        gb1 = context(group, 1).relations
        self.relations = IdealBasis(
            self.joint,
            tuple(g.lift(self.joint, 0) for g in gb1.generators),
            tuple(g.lift(self.joint, 0) for g in (gb1.groebner or ())),
        )
        d_action = dual(v).action
        self.forms = []
        for i in range(self.n):
            acc = self.joint.zero()
            for j in range(self.n):
                e = d_action[j][i]
                if not e.is_zero():
                    acc = acc + e.lift(self.joint, 0) * self.joint.var(self.nc + j)
            self.forms.append(acc)
        index_of_block = {}
        for bi, block in enumerate(v.blocks):
            for i in block:
                index_of_block[i] = bi
        self.block_of = index_of_block
        self.nblocks = len(v.blocks)
        self._expand_cache: dict = {}
        self._monomial_cache: dict = {}

    def nf(self, f: Poly) -> Poly:
        return normal_form(f, self.relations) if self.relations.groebner else f

    def monomials(self, d: int):
        if d not in self._monomial_cache:
            self._monomial_cache[d] = sym_monomials(self.n, d)
        return self._monomial_cache[d]

    def multideg(self, beta) -> tuple:
        out = [0] * self.nblocks
        for i, e in enumerate(beta):
            if e:
                out[self.block_of[i]] += e
        return tuple(out)

    def components(self, d: int):
        """Degree-d monomials grouped by block multidegree, in order of
        first appearance."""
        comps: dict = {}
        for beta in self.monomials(d):
            comps.setdefault(self.multideg(beta), []).append(beta)
        return comps

    def expand(self, beta) -> Poly:
        """Normal form of sigma . x^beta in the joint ring."""
        cached = self._expand_cache.get(beta)
        if cached is not None:
            return cached
        prod = self.joint.one()
        for i, e in enumerate(beta):
            if e:
                prod = prod * self.forms[i] ** e
        prod = self.nf(prod)
        self._expand_cache[beta] = prod
        return prod

    def x_monomial(self, beta) -> Poly:
        return self.ring_x.monomial(beta)

    def lift_x(self, f: Poly) -> Poly:
        return f.lift(self.joint, self.nc)

    def lift_g(self, f: Poly) -> Poly:
        return f.lift(self.joint, 0)

    def split_terms(self, f: Poly):
        """Terms of a joint polynomial as ((gamma, alpha), coeff) pairs."""
        nc = self.nc
        for exps, c in f.terms.items():
            yield (exps[:nc], exps[nc:]), c

    def act_on_x_poly(self, f: Poly) -> Poly:
        """sigma . f for f in the module coordinates, as a joint polynomial."""
        out = self.joint.zero()
        for beta, c in f.terms.items():
            out = out + self.expand(beta) * c
        return self.nf(out)


_ENGINES: dict = {}


def slice_engine(v: Representation) -> SliceEngine:
    eng = _ENGINES.get(v)
    if eng is None:
        eng = SliceEngine(v)
        _ENGINES[v] = eng
    return eng


# -- serialization -------------------------------------------------------------


def rep_to_json(v: Representation) -> dict:
    from .groups import group_to_json

    return {
        "group": group_to_json(v.group),
        "dim": v.dim,
        "basis": list(v.basis),
        "action": [[str(e) for e in row] for row in v.action],
        "provenance": v.provenance,
    }


def rep_from_json(data: dict) -> Representation:
    from .groups import group_from_json

    group = group_from_json(data["group"])
    ring = group.ring1
    action = [[ring.parse(e) for e in row] for row in data["action"]]
    return Representation(group, action, tuple(data["basis"]), data.get("provenance", ""))
