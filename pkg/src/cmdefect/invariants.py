"""Degree-by-degree invariants of a module action, by exact nullspace
solving over GF(p).

A slice is the space of degree-d polynomial functions f with
sigma . f = f identically modulo the group relations; bases are echelon
canonical, and slices are memoized because certificates query the same
ones repeatedly.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from . import linalg
from .linalg import LinearReport
from .poly import Poly, ResourceCapError, groebner, grevlex_key, normal_form
from .reps import Representation, slice_engine


@dataclass(frozen=True)
class InvariantSlice:
    module: Representation
    degree: int
    basis: tuple

    @property
    def dimension(self) -> int:
        return len(self.basis)


_SLICE_CACHE: dict = {}

MAX_SLICE_MONOMIALS = 20000


def invariant_slice(v: Representation, d: int, max_monomials: int = MAX_SLICE_MONOMIALS) -> InvariantSlice:
    """Exact basis of the invariant degree-d functions, solved one block
    multidegree at a time."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    key = (v, d)
    cached = _SLICE_CACHE.get(key)
    if cached is not None:
        return cached
    if comb(v.dim + d - 1, d) > max_monomials:
        raise ResourceCapError(
            f"degree-{d} slice of a {v.dim}-dimensional module exceeds the cap"
        )
    eng = slice_engine(v)
    p = v.group.p
    basis = []
    if d == 0:
        basis.append(eng.ring_x.one())
    else:
        for delta, betas in eng.components(d).items():
            rows = set()
            cols = {}
            for beta in betas:
                col = {}
                joint = eng.expand(beta) - eng.lift_x(eng.x_monomial(beta))
                for key2, c in eng.split_terms(joint):
                    gamma, alpha = key2
                    col[(alpha, gamma)] = c
                    rows.add((alpha, gamma))
                cols[beta] = col
            row_list = sorted(rows, key=lambda k: (grevlex_key(k[0]), grevlex_key(k[1])))
            row_of = {k: i for i, k in enumerate(row_list)}
            a = np.zeros((len(row_list), len(betas)), dtype=np.int64)
            for j, beta in enumerate(betas):
                for key2, c in cols[beta].items():
                    a[row_of[key2], j] = c
            for vec in linalg.nullspace(a, p):
                f = eng.ring_x.zero()
                for beta, c in zip(betas, vec):
                    if c:
                        f = f + eng.ring_x.monomial(beta, int(c))
                basis.append(f)
    slice_ = InvariantSlice(v, d, tuple(basis))
    _SLICE_CACHE[key] = slice_
    return slice_


def hilbert_function(v: Representation, max_degree: int) -> list:
    """Dimensions of the invariant slices for d = 0 .. max_degree."""
    return [invariant_slice(v, d).dimension for d in range(max_degree + 1)]


@dataclass(frozen=True)
class SubringMembership:
    """Outcome of the graded membership test in the subring generated by
    the given invariants, together with the ambient polynomial-ideal
    answer (the two can differ)."""

    witness: tuple | None
    report: LinearReport
    ambient_member: bool

    def is_member(self) -> bool:
        return self.witness is not None


def subring_membership(m: Poly, gens, v: Representation) -> SubringMembership:
    """Decide m = sum f_i a_i with every f_i an invariant of the matching
    degree.  Gradedness makes this one exact linear solve per certificate;
    the ambient ideal membership is reported alongside via a Groebner
    normal form."""
    from .cohomology import is_invariant

    eng = slice_engine(v)
    gens = list(gens)
    if not m.is_homogeneous() or any(not a.is_homogeneous() for a in gens):
        raise ValueError("membership test needs homogeneous data")
    if not is_invariant(v, m):
        raise ValueError("candidate m is not invariant")
    for a in gens:
        if not is_invariant(v, a):
            raise ValueError("generator is not invariant")
    dm = m.total_degree()
    p = v.group.p

    unknowns = []  # (generator index, slice element)
    columns = []
    for i, a in enumerate(gens):
        di = a.total_degree()
        if di > dm:
            continue
        for s in invariant_slice(v, dm - di).basis:
            unknowns.append((i, s))
            columns.append(a * s)
    rows = set()
    for f in columns + [m]:
        rows.update(f.terms.keys())
    row_list = sorted(rows, key=grevlex_key)
    row_of = {e: i for i, e in enumerate(row_list)}
    a_mat = np.zeros((len(row_list), len(unknowns)), dtype=np.int64)
    b_vec = np.zeros(len(row_list), dtype=np.int64)
    for j, f in enumerate(columns):
        for e, c in f.terms.items():
            a_mat[row_of[e], j] = c
    for e, c in m.terms.items():
        b_vec[row_of[e]] = c
    sol, report = linalg.solve(a_mat, b_vec, p)

    gb = groebner(gens)
    ambient = normal_form(m, gb).is_zero()

    if sol is None:
        return SubringMembership(None, report, ambient)
    fs = [eng.ring_x.zero() for _ in gens]
    for (i, s), c in zip(unknowns, sol):
        if c:
            fs[i] = fs[i] + s * int(c)
    total = eng.ring_x.zero()
    for f, a in zip(fs, gens):
        total = total + f * a
    if total != m:
        raise AssertionError("membership solver returned an invalid combination")
    return SubringMembership(tuple(fs), report, ambient)
