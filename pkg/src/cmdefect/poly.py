"""Exact multivariate polynomial arithmetic over GF(p).

Sparse polynomials under a fixed graded reverse lexicographic order, with
multivariate division, a small Buchberger engine using the two classical
pair criteria, combinatorial Krull dimension of leading term ideals, and
the canonical text format shared by the CLI and every JSON artifact.
"""

from __future__ import annotations

from dataclasses import dataclass


class RingMismatchError(ValueError):
    """Operands live in different polynomial rings."""


class NotHomogeneousError(ValueError):
    """Homogeneous input of positive degree was required."""


class ResourceCapError(RuntimeError):
    """Desk-scale exceeded: a computation ran past the configured caps."""


@dataclass(frozen=True)
class ResourceCaps:
    """Hard limits for the Buchberger engine; exceeding them is an error,
    never a silent truncation."""

    max_basis: int = 400
    max_degree: int = 64


DEFAULT_CAPS = ResourceCaps()


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def grevlex_key(exps: tuple[int, ...]) -> tuple:
    """Sort key: larger key means larger monomial in grevlex."""
    return (sum(exps), tuple(-e for e in reversed(exps)))


@dataclass(frozen=True)
class Ring:
    """The polynomial ring GF(p)[x0, ..., x_{nvars-1}]."""

    p: int
    nvars: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"characteristic {self.p} is not prime")
        if self.nvars < 0:
            raise ValueError("negative variable count")

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return self.const(1)

    def const(self, c: int) -> "Poly":
        c %= self.p
        return Poly(self, {(0,) * self.nvars: c} if c else {})

    def var(self, i: int) -> "Poly":
        if not 0 <= i < self.nvars:
            raise IndexError(f"variable x{i} out of range")
        exps = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Poly(self, {exps: 1})

    def monomial(self, exps, c: int = 1) -> "Poly":
        exps = tuple(int(e) for e in exps)
        if len(exps) != self.nvars or any(e < 0 for e in exps):
            raise ValueError(f"bad exponent tuple {exps}")
        c %= self.p
        return Poly(self, {exps: c} if c else {})

    def parse(self, text: str) -> "Poly":
        return parse_poly(self, text)


class Poly:
    """Immutable sparse polynomial: map from exponent tuples to nonzero
    residues mod p."""

    __slots__ = ("ring", "terms", "_key")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        p = ring.p
        clean = {}
        for exps, c in terms.items():
            c %= p
            if c:
                clean[exps] = c
        self.terms = clean
        self._key = None

    # -- basic queries ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Degree of the zero polynomial is -1 by convention."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def homogeneous_component(self, d: int) -> "Poly":
        return Poly(self.ring, {e: c for e, c in self.terms.items() if sum(e) == d})

    def coeff_of(self, exps) -> int:
        return self.terms.get(tuple(exps), 0)

    def constant_value(self) -> int:
        return self.terms.get((0,) * self.ring.nvars, 0)

    def sorted_terms(self):
        """Terms in grevlex descending order."""
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def leading(self):
        """(exponents, coefficient) of the grevlex leading term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exps = max(self.terms, key=grevlex_key)
        return exps, self.terms[exps]

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "Poly"):
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return Poly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            c = other % self.ring.p
            if not c:
                return self.ring.zero()
            return Poly(self.ring, {e: c * v for e, v in self.terms.items()})
        self._check(other)
        p = self.ring.p
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = (terms.get(e, 0) + c1 * c2) % p
        return Poly(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while n > 0:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- structural maps ----------------------------------------------------

    def subst(self, images, target: Ring) -> "Poly":
        """Substitute variable i by images[i] (a Poly in target)."""
        if len(images) != self.ring.nvars:
            raise ValueError("substitution needs one image per variable")
        out = target.zero()
        powcache: dict = {}
        for exps, c in self.terms.items():
            term = target.const(c)
            for i, e in enumerate(exps):
                if not e:
                    continue
                key = (i, e)
                pw = powcache.get(key)
                if pw is None:
                    pw = images[i] ** e
                    powcache[key] = pw
                term = term * pw
            out = out + term
        return out

    def lift(self, target: Ring, offset: int = 0) -> "Poly":
        """Reinterpret in a larger ring, variable i becoming offset+i."""
        if target.p != self.ring.p or offset + self.ring.nvars > target.nvars:
            raise RingMismatchError("cannot lift into target ring")
        pre = (0,) * offset
        post = (0,) * (target.nvars - offset - self.ring.nvars)
        return Poly(target, {pre + e + post: c for e, c in self.terms.items()})

    def eval_ints(self, values) -> int:
        """Full evaluation at integer coordinates, reduced mod p."""
        if len(values) != self.ring.nvars:
            raise ValueError("need one value per variable")
        p = self.ring.p
        total = 0
        for exps, c in self.terms.items():
            v = c
            for x, e in zip(values, exps):
                if e:
                    v = v * pow(x % p, e, p) % p
            total += v
        return total % p

    # -- identity ------------------------------------------------------------

    def key(self):
        if self._key is None:
            self._key = (self.ring, tuple(sorted(self.terms.items())))
        return self._key

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(self.key())

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"


# -- text format --------------------------------------------------------------


def format_poly(f: Poly) -> str:
    """Canonical text form: grevlex-descending terms joined by '+', each
    term 'c*x<i>^<e>*...' with c in 0..p-1; '^1' omitted; zero prints '0'."""
    if f.is_zero():
        return "0"
    parts = []
    for exps, c in f.sorted_terms():
        piece = [str(c)]
        for i, e in enumerate(exps):
            if e == 1:
                piece.append(f"x{i}")
            elif e > 1:
                piece.append(f"x{i}^{e}")
        parts.append("*".join(piece))
    return "+".join(parts)


def parse_poly(ring: Ring, text: str) -> Poly:
    """Inverse of format_poly; whitespace tolerated, coefficient optional."""
    text = text.replace(" ", "")
    if not text:
        raise ValueError("empty polynomial text")
    if text == "0":
        return ring.zero()
    total = ring.zero()
    for term in text.split("+"):
        if not term:
            raise ValueError(f"empty term in {text!r}")
        coeff = 1
        exps = [0] * ring.nvars
        for factor in term.split("*"):
            if factor.startswith("x"):
                body = factor[1:]
                if "^" in body:
                    idx, _, exp = body.partition("^")
                    exps[int(idx)] += int(exp)
                else:
                    exps[int(body)] += 1
            else:
                coeff = coeff * int(factor)
        total = total + ring.monomial(exps, coeff)
    return total


# -- division and Groebner bases ------------------------------------------------


@dataclass(frozen=True)
class IdealBasis:
    """Generators of an ideal, optionally with a reduced Groebner basis."""

    ring: Ring
    generators: tuple
    groebner: tuple | None = None


def _reduce(f: Poly, divisors) -> Poly:
    """Remainder of multivariate division by the given (nonzero) divisors."""
    p = f.ring.p
    lead = [(g.leading(), g) for g in divisors]
    work = dict(f.terms)
    remainder: dict = {}
    while work:
        exps = max(work, key=grevlex_key)
        c = work.pop(exps)
        hit = None
        for (lexp, lc), g in lead:
            if all(a >= b for a, b in zip(exps, lexp)):
                hit = (lexp, lc, g)
                break
        if hit is None:
            remainder[exps] = c
            continue
        lexp, lc, g = hit
        shift = tuple(a - b for a, b in zip(exps, lexp))
        factor = c * pow(lc, p - 2, p) % p
        # subtract factor * x^shift * g; the leading term cancels the popped one
        # and every other term is strictly smaller, so only `work` is touched
        for ge, gc in g.terms.items():
            e = tuple(a + b for a, b in zip(shift, ge))
            if e == exps:
                continue
            v = (work.get(e, 0) - factor * gc) % p
            if v:
                work[e] = v
            else:
                work.pop(e, None)
    return Poly(f.ring, remainder)


def normal_form(f: Poly, rel: IdealBasis) -> Poly:
    """Unique remainder of f modulo rel's Groebner basis; zero iff f lies
    in the ideal."""
    if f.ring != rel.ring:
        raise RingMismatchError("polynomial and ideal in different rings")
    if rel.groebner is None:
        raise ValueError("normal_form needs a Groebner basis; call groebner() first")
    if not rel.groebner:
        return f
    return _reduce(f, rel.groebner)


def _spair_exps(e1, e2):
    return tuple(max(a, b) for a, b in zip(e1, e2))


def groebner(gens, caps: ResourceCaps = DEFAULT_CAPS) -> IdealBasis:
    """Reduced Groebner basis under grevlex via Buchberger's algorithm with
    the coprimality and chain criteria."""
    gens = list(gens)
    ring = None
    for g in gens:
        if ring is None:
            ring = g.ring
        elif g.ring != ring:
            raise RingMismatchError("generators live in different rings")
    gens = [g for g in gens if not g.is_zero()]
    if ring is None or not gens:
        return IdealBasis(ring if ring else Ring(2, 0), tuple(gens), tuple())

    p = ring.p

    def monic(g: Poly) -> Poly:
        _, lc = g.leading()
        return g * pow(lc, p - 2, p)

    basis: list[Poly] = []
    for g in gens:
        r = _reduce(g, basis) if basis else g
        if not r.is_zero():
            basis.append(monic(r))

    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}

    def cap_check(g: Poly):
        if len(basis) > caps.max_basis:
            raise ResourceCapError(f"basis size exceeded cap {caps.max_basis}")
        if g.total_degree() > caps.max_degree:
            raise ResourceCapError(f"degree exceeded cap {caps.max_degree}")

    while pairs:
        i, j = min(
            pairs,
            key=lambda ij: (
                grevlex_key(_spair_exps(basis[ij[0]].leading()[0], basis[ij[1]].leading()[0])),
                ij,
            ),
        )
        pairs.discard((i, j))
        ei, _ = basis[i].leading()
        ej, _ = basis[j].leading()
        lcm = _spair_exps(ei, ej)
        # first criterion: coprime leading terms reduce to zero
        if all(a + b == m for a, b, m in zip(ei, ej, lcm)):
            continue
        # second (chain) criterion
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            ek, _ = basis[k].leading()
            if all(a >= b for a, b in zip(lcm, ek)):
                pi = (min(i, k), max(i, k))
                pj = (min(j, k), max(j, k))
                if pi not in pairs and pj not in pairs:
                    skip = True
                    break
        if skip:
            continue
        si = tuple(m - a for m, a in zip(lcm, ei))
        sj = tuple(m - a for m, a in zip(lcm, ej))
        s = basis[i] * Poly(ring, {si: 1}) - basis[j] * Poly(ring, {sj: 1})
        r = _reduce(s, basis)
        if r.is_zero():
            continue
        r = monic(r)
        cap_check(r)
        basis.append(r)
        new = len(basis) - 1
        for k in range(new):
            pairs.add((k, new))

    # minimalize: drop any element whose leading term another one divides
    basis.sort(key=lambda g: grevlex_key(g.leading()[0]))
    minimal: list[Poly] = []
    for g in basis:
        eg, _ = g.leading()
        if any(all(a >= b for a, b in zip(eg, h.leading()[0])) for h in minimal):
            continue
        minimal.append(g)
    # tail-reduce to the unique reduced basis
    reduced = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1 :]
        r = _reduce(g, others) if others else g
        reduced.append(monic(r))
    reduced.sort(key=lambda g: grevlex_key(g.leading()[0]), reverse=True)
    return IdealBasis(ring, tuple(gens), tuple(reduced))


def _require_phsop_input(gens):
    for g in gens:
        if g.is_zero():
            raise NotHomogeneousError("zero generator rejected")
        if not g.is_homogeneous():
            raise NotHomogeneousError(f"non-homogeneous generator: {g}")
        if g.total_degree() < 1:
            raise NotHomogeneousError("generators must have positive degree")


def ideal_codim(gens, caps: ResourceCaps = DEFAULT_CAPS) -> int:
    """Height of the ideal generated by homogeneous positive-degree
    polynomials, as nvars minus the combinatorial dimension of the leading
    term ideal."""
    gens = list(gens)
    if not gens:
        return 0
    _require_phsop_input(gens)
    gb = groebner(gens, caps).groebner
    n = gens[0].ring.nvars
    supports = []
    for g in gb:
        exps, _ = g.leading()
        supports.append(sum(1 << i for i, e in enumerate(exps) if e))
    # dimension = size of the largest variable subset S such that no leading
    # monomial is supported entirely inside S
    best = 0
    for mask in range(1 << n):
        size = mask.bit_count()
        if size <= best:
            continue
        if all(s & ~mask for s in supports):
            best = size
    return n - best


def coprime(a1: Poly, a2: Poly, caps: ResourceCaps = DEFAULT_CAPS) -> bool:
    """For homogeneous elements of positive degree, a pair is coprime iff
    the ideal it generates has height two."""
    if a1.ring != a2.ring:
        raise RingMismatchError("coprime needs both elements in one ring")
    _require_phsop_input([a1, a2])
    return ideal_codim([a1, a2], caps) == 2
