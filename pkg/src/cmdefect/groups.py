"""Algebraic groups as coordinate rings with polynomial structure maps.

A group is presented by its coordinate variables, defining relations,
unit point, and substitution maps for multiplication and inversion.
Generic points turn "for all sigma, tau in G" into finite symbolic
identity checks modulo the relation ideal.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .poly import IdealBasis, Poly, Ring, groebner, is_prime, normal_form


class GroupLawError(ValueError):
    """A declared group structure map fails one of the group laws."""


@dataclass(frozen=True)
class GroupPresentation:
    """Coordinate-ring presentation of a linear algebraic group.

    mult lives in the ring on two coordinate blocks (sigma then tau); inv
    and the natural matrix live in the one-point ring.  Reductivity and the
    torus property of the identity component are declared metadata, not
    computed; certificates record when they consume these declarations.
    """

    name: str
    p: int
    ncoords: int
    relations: tuple
    unit: tuple
    mult: tuple
    inv: tuple
    natural_matrix: tuple
    reductive: bool
    connected_component_is_torus: bool

    @property
    def ring1(self) -> Ring:
        return Ring(self.p, self.ncoords)

    def __str__(self):
        return f"{self.name}(p={self.p})"


class IdentityContext:
    """Workspace for symbolic identities in several generic points plus
    optional extra variables, all reduced modulo the relation ideal."""

    def __init__(self, group: GroupPresentation, npoints: int, extra: int = 0):
        self.group = group
        self.npoints = npoints
        self.extra = extra
        nc = group.ncoords
        self.ring = Ring(group.p, npoints * nc + extra)
        rels = []
        for i in range(npoints):
            for r in group.relations:
                rels.append(r.lift(self.ring, i * nc))
        if rels:
            self.relations = groebner(rels)
        else:
            self.relations = IdealBasis(self.ring, (), ())

    def point(self, i: int):
        """Coordinate polynomials of the i-th generic point."""
        nc = self.group.ncoords
        return [self.ring.var(i * nc + j) for j in range(nc)]

    def lift1(self, f: Poly, point: int = 0) -> Poly:
        return f.lift(self.ring, point * self.group.ncoords)

    def nf(self, f: Poly) -> Poly:
        return normal_form(f, self.relations)

    def is_zero(self, f: Poly) -> bool:
        return self.nf(f).is_zero()

    def mult(self, coords_a, coords_b):
        images = list(coords_a) + list(coords_b)
        return [m.subst(images, self.ring) for m in self.group.mult]

    def inv(self, coords):
        return [m.subst(list(coords), self.ring) for m in self.group.inv]

    def unit_coords(self):
        return [self.ring.const(c) for c in self.group.unit]


@lru_cache(maxsize=None)
def context(group: GroupPresentation, npoints: int, extra: int = 0) -> IdentityContext:
    return IdentityContext(group, npoints, extra)


def builtin_group(name: str, p: int) -> GroupPresentation:
    """The built-in presentations: SL2, the additive group Ga, and the
    one-dimensional torus Gm."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if name == "SL2":
        r1 = Ring(p, 4)
        r2 = Ring(p, 8)
        a, b, c, d = (r1.var(i) for i in range(4))
        a1, b1, c1, d1, a2, b2, c2, d2 = (r2.var(i) for i in range(8))
        return GroupPresentation(
            name="SL2",
            p=p,
            ncoords=4,
            relations=(a * d - b * c - 1,),
            unit=(1, 0, 0, 1),
            mult=(
                a1 * a2 + b1 * c2,
                a1 * b2 + b1 * d2,
                c1 * a2 + d1 * c2,
                c1 * b2 + d1 * d2,
            ),
            inv=(d, -b, -c, a),
            natural_matrix=((a, b), (c, d)),
            reductive=True,
            connected_component_is_torus=False,
        )
    if name == "Ga":
        r1 = Ring(p, 1)
        r2 = Ring(p, 2)
        t = r1.var(0)
        t1, t2 = r2.var(0), r2.var(1)
        one = r1.one()
        zero = r1.zero()
        return GroupPresentation(
            name="Ga",
            p=p,
            ncoords=1,
            relations=(),
            unit=(0,),
            mult=(t1 + t2,),
            inv=(-t,),
            natural_matrix=((one, t), (zero, one)),
            reductive=False,
            connected_component_is_torus=False,
        )
    if name == "Gm":
        r1 = Ring(p, 2)
        r2 = Ring(p, 4)
        s, u = r1.var(0), r1.var(1)
        s1, u1, s2, u2 = (r2.var(i) for i in range(4))
        return GroupPresentation(
            name="Gm",
            p=p,
            ncoords=2,
            relations=(s * u - 1,),
            unit=(1, 1),
            mult=(s1 * s2, u1 * u2),
            inv=(u, s),
            natural_matrix=((s,),),
            reductive=True,
            connected_component_is_torus=True,
        )
    raise ValueError(f"unknown group {name!r}")


def verify_group_laws(group: GroupPresentation) -> bool:
    """Symbolic check of every presentation invariant with two generic
    points: unit laws, inverses, stability of the relation ideal, and the
    homomorphism property of the natural matrix."""
    ctx = context(group, 2)
    sigma = ctx.point(0)
    tau = ctx.point(1)
    unit = ctx.unit_coords()

    for r in group.relations:
        if r.eval_ints(group.unit) != 0:
            return False

    for got, want in zip(ctx.mult(unit, sigma), sigma):
        if not ctx.is_zero(got - want):
            return False
    for got, want in zip(ctx.mult(sigma, unit), sigma):
        if not ctx.is_zero(got - want):
            return False

    inv_sigma = ctx.inv(sigma)
    for r in group.relations:
        if not ctx.is_zero(r.subst(inv_sigma, ctx.ring)):
            return False
    for got, want in zip(ctx.mult(sigma, inv_sigma), unit):
        if not ctx.is_zero(got - want):
            return False

    prod = ctx.mult(sigma, tau)
    for r in group.relations:
        if not ctx.is_zero(r.subst(prod, ctx.ring)):
            return False

    n = len(group.natural_matrix)
    for i in range(n):
        for j in range(n):
            if group.natural_matrix[i][j].eval_ints(group.unit) != (1 if i == j else 0):
                return False
    mat_s = [[ctx.lift1(e, 0) for e in row] for row in group.natural_matrix]
    mat_t = [[ctx.lift1(e, 1) for e in row] for row in group.natural_matrix]
    mat_st = [[e.subst(prod, ctx.ring) for e in row] for row in group.natural_matrix]
    for i in range(n):
        for j in range(n):
            acc = ctx.ring.zero()
            for r in range(n):
                acc = acc + mat_s[i][r] * mat_t[r][j]
            if not ctx.is_zero(acc - mat_st[i][j]):
                return False
    return True


@dataclass(frozen=True)
class GroupHom:
    """A verified homomorphism, stored as the coordinate pullback: images
    of the target's coordinates as polynomials in the source's."""

    source: GroupPresentation
    target: GroupPresentation
    coord_map: tuple

    def apply(self, coords, ring: Ring):
        """Images of a source point given by coordinate polynomials."""
        images = [m.subst(list(coords), ring) for m in self.coord_map]
        return images


def homomorphism(source: GroupPresentation, target: GroupPresentation, coord_map) -> GroupHom:
    """Build and symbolically verify a homomorphism from coordinate images.

    Checks: target relations pull back into the source's relation ideal,
    the unit maps to the unit, and the map commutes with mult and inv."""
    if source.p != target.p:
        raise GroupLawError("homomorphism needs equal characteristics")
    coord_map = tuple(coord_map)
    if len(coord_map) != target.ncoords:
        raise GroupLawError("coordinate map has wrong length")
    for f in coord_map:
        if f.ring != source.ring1:
            raise GroupLawError("coordinate images must live in the source ring")

    ctx1 = context(source, 1)
    phi1 = [f.lift(ctx1.ring) for f in coord_map]
    for r in target.relations:
        if not ctx1.is_zero(r.subst(phi1, ctx1.ring)):
            raise GroupLawError(f"relation {r} does not pull back to zero")

    unit_img = [f.eval_ints(source.unit) for f in coord_map]
    if tuple(unit_img) != tuple(c % source.p for c in target.unit):
        raise GroupLawError("unit does not map to the unit")

    ctx2 = context(source, 2)
    sigma = ctx2.point(0)
    tau = ctx2.point(1)
    phi = lambda coords: [f.subst(list(coords), ctx2.ring) for f in coord_map]
    lhs = phi(ctx2.mult(sigma, tau))
    img_s, img_t = phi(sigma), phi(tau)
    rhs = [m.subst(img_s + img_t, ctx2.ring) for m in target.mult]
    for x, y in zip(lhs, rhs):
        if not ctx2.is_zero(x - y):
            raise GroupLawError("map does not commute with multiplication")

    lhs_inv = phi(ctx2.inv(sigma))
    rhs_inv = [m.subst(phi(sigma), ctx2.ring) for m in target.inv]
    for x, y in zip(lhs_inv, rhs_inv):
        if not ctx2.is_zero(x - y):
            raise GroupLawError("map does not commute with inversion")

    return GroupHom(source, target, coord_map)


def compose(outer: GroupHom, inner: GroupHom) -> GroupHom:
    """The composite homomorphism (outer after inner), re-verified."""
    if inner.target != outer.source:
        raise GroupLawError("homomorphisms do not compose")
    ring = inner.source.ring1
    images = [f.subst(list(inner.coord_map), ring) for f in outer.coord_map]
    return homomorphism(inner.source, outer.target, images)


def identity_hom(group: GroupPresentation) -> GroupHom:
    ring = group.ring1
    return homomorphism(group, group, [ring.var(i) for i in range(group.ncoords)])


def additive_to_sl2(p: int) -> GroupHom:
    """The upper-triangular unipotent embedding of Ga into SL2."""
    ga = builtin_group("Ga", p)
    sl2 = builtin_group("SL2", p)
    t = ga.ring1.var(0)
    one = ga.ring1.one()
    zero = ga.ring1.zero()
    return homomorphism(ga, sl2, (one, t, zero, one))


# -- serialization ------------------------------------------------------------


def group_to_json(group: GroupPresentation) -> dict:
    return {
        "name": group.name,
        "p": group.p,
        "ncoords": group.ncoords,
        "relations": [str(r) for r in group.relations],
        "unit": list(group.unit),
        "mult": [str(m) for m in group.mult],
        "inv": [str(m) for m in group.inv],
        "natural_matrix": [[str(e) for e in row] for row in group.natural_matrix],
        "reductive": group.reductive,
        "connected_component_is_torus": group.connected_component_is_torus,
    }


def group_from_json(data: dict) -> GroupPresentation:
    p = int(data["p"])
    nc = int(data["ncoords"])
    r1 = Ring(p, nc)
    r2 = Ring(p, 2 * nc)
    return GroupPresentation(
        name=data["name"],
        p=p,
        ncoords=nc,
        relations=tuple(r1.parse(s) for s in data["relations"]),
        unit=tuple(int(c) for c in data["unit"]),
        mult=tuple(r2.parse(s) for s in data["mult"]),
        inv=tuple(r1.parse(s) for s in data["inv"]),
        natural_matrix=tuple(
            tuple(r1.parse(e) for e in row) for row in data["natural_matrix"]
        ),
        reductive=bool(data["reductive"]),
        connected_component_is_torus=bool(data["connected_component_is_torus"]),
    )
