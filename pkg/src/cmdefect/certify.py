"""Assembly and verification of Cohen-Macaulay defect lower bound
certificates.

A certificate records a module, a homogeneous nontrivial cohomology class
in its coordinate ring, k invariant annihilators with witnesses, height
evidence, and the witness invariant whose non-membership pins the depth.
Every check is re-runnable from the serialized certificate alone; the
conclusion cmdef >= k-2 is only emitted when every premise verifies.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .cohomology import (
    Cocycle,
    RingCocycle,
    SummandError,
    annihilator_space,
    annihilator_witness,
    cocycle_from_projection,
    embed_in_coordinate_ring,
    find_summand_witness,
    is_coboundary,
    is_coboundary_ring,
    is_invariant,
    multiply_invariant,
    verify_ring_cocycle,
)
from .groups import GroupPresentation, additive_to_sl2, builtin_group, group_to_json
from .invariants import invariant_slice, subring_membership
from .linalg import LinearReport
from .poly import DEFAULT_CAPS, Poly, ResourceCaps, Ring, coprime, ideal_codim
from .reps import (
    Representation,
    block_subrep,
    direct_sum,
    dual,
    extend_by_cocycle,
    find_isomorphism,
    frobenius_power,
    hom0,
    hom0_data,
    is_faithful,
    natural_module,
    quotient,
    rep_from_json,
    rep_to_json,
    restrict,
    slice_engine,
    symmetric_power,
)

SCHEMA_VERSION = 1

ROBERTS_FACT = (
    "Roberts isomorphism (trusted): restriction to the slice through the "
    "unipotent-fixed vector identifies the SL2 invariants of nat (+) V with "
    "the Ga invariants of V"
)


class SpecError(ValueError):
    """Inconsistent build request (wrong characteristic, unknown name)."""


class PremiseError(RuntimeError):
    premise = "unknown"
    exit_code = 1


class CocyclePremiseError(PremiseError):
    premise = "cocycle"
    exit_code = 10


class NontrivialityPremiseError(PremiseError):
    premise = "nontriviality"
    exit_code = 11


class AnnihilatorPremiseError(PremiseError):
    premise = "annihilator"
    exit_code = 12


class PhsopPremiseError(PremiseError):
    premise = "phsop"
    exit_code = 13


class WitnessMPremiseError(PremiseError):
    premise = "witness_m"
    exit_code = 14


@dataclass
class CertificateInputs:
    """Everything a certificate run consumes: the module, the embedded
    cocycle, candidate annihilators, and bookkeeping for transfers."""

    name: str
    module: Representation
    k: int
    cocycle: RingCocycle
    annihilators: tuple
    declared_facts: tuple = ()
    nat_span: tuple | None = None  # (start, length 2) of a natural summand
    annotations: tuple = ()
    faithful: bool | None = None


@dataclass
class Certificate:
    name: str
    module: Representation
    k: int
    condition: str
    cocycle: RingCocycle
    annihilators: tuple
    witnesses: tuple
    m: Poly | None
    evidence: dict
    declared_facts: tuple
    conclusion: int
    faithful: bool | None = None
    annotations: tuple = ()
    transfer: dict | None = None

    def to_json(self) -> dict:
        data = {
            "schema_version": SCHEMA_VERSION,
            "name": self.name,
            "module": rep_to_json(self.module),
            "k": self.k,
            "condition": self.condition,
            "cocycle": {
                "degree": self.cocycle.degree,
                "components": [str(c) for c in self.cocycle.components],
            },
            "annihilators": [str(a) for a in self.annihilators],
            "witnesses": [str(b) for b in self.witnesses],
            "m": str(self.m) if self.m is not None else None,
            "evidence": self.evidence,
            "declared_facts": list(self.declared_facts),
            "conclusion": self.conclusion,
            "faithful": self.faithful,
            "annotations": list(self.annotations),
        }
        if self.transfer is not None:
            data["transfer"] = self.transfer
        return data


def build_witness_m(a1: Poly, b1: Poly, a2: Poly, b2: Poly, module: Representation) -> Poly:
    """m = a1 b2 - a2 b1; its invariance follows from the witness equations
    but is re-verified independently."""
    m = a1 * b2 - a2 * b1
    if not is_invariant(module, m):
        raise WitnessMPremiseError("a1 b2 - a2 b1 failed the invariance re-check")
    return m


def _determinant_identities(anns, witnesses):
    """u_jl a_i - u_il a_j + u_ij a_l = 0 exactly, for all triples; these
    are the relations that put m times the other annihilators into the
    ideal of the first two."""

    def u(i, j):
        return anns[i] * witnesses[j] - anns[j] * witnesses[i]

    count = 0
    for i in range(len(anns)):
        for j in range(i + 1, len(anns)):
            for l in range(j + 1, len(anns)):
                expr = u(j, l) * anns[i] - u(i, l) * anns[j] + u(i, j) * anns[l]
                if not expr.is_zero():
                    raise WitnessMPremiseError(
                        f"determinant identity failed for triple ({i},{j},{l})"
                    )
                count += 1
    return count


def certify_cmdef(
    inputs: CertificateInputs,
    condition: str = "a",
    caps: ResourceCaps = DEFAULT_CAPS,
    transfer: dict | None = None,
) -> Certificate:
    """Verify, in order: the cocycle identity, nontriviality in the graded
    component, invariance plus an annihilator witness for every a_i, the
    phsop/coprimality condition, and the witness-m non-membership.  Each
    failed premise raises its own named error; no partial certificates."""
    v = inputs.module
    rc = inputs.cocycle
    anns = list(inputs.annihilators)
    k = len(anns)
    if k != inputs.k:
        raise SpecError("annihilator count does not match k")
    facts = list(inputs.declared_facts)
    evidence: dict = {}

    if not verify_ring_cocycle(rc):
        raise CocyclePremiseError("the cocycle identity fails symbolically")

    dec = is_coboundary_ring(rc)
    if dec.is_coboundary():
        raise NontrivialityPremiseError(
            "the class is a coboundary in its graded component"
        )
    evidence["noncoboundary_rank"] = dec.report.to_json()

    witnesses = []
    ann_reports = []
    for idx, a in enumerate(anns):
        if a.is_zero() or not a.is_homogeneous() or a.total_degree() < 1:
            raise AnnihilatorPremiseError(
                f"annihilator {idx} is not homogeneous of positive degree"
            )
        if not is_invariant(v, a):
            raise AnnihilatorPremiseError(f"annihilator {idx} is not invariant")
        d = annihilator_witness(a, rc)
        if not d.is_coboundary():
            raise AnnihilatorPremiseError(
                f"no witness: annihilator {idx} does not kill the class"
            )
        witnesses.append(d.witness)
        ann_reports.append(d.report.to_json())
    evidence["annihilator_ranks"] = ann_reports

    codim = ideal_codim(anns, caps) if anns else 0
    evidence["codim"] = codim
    if condition == "a":
        if not v.group.reductive:
            raise PhsopPremiseError("condition (a) needs a declared reductive group")
        facts.append(f"{v.group.name} is reductive (declared)")
        if codim != k:
            raise PhsopPremiseError(
                f"annihilators generate an ideal of height {codim}, not {k}"
            )
        evidence["phsop_route"] = (
            "reductive: a phsop in the polynomial ring restricts to a phsop "
            "in the invariant ring"
        )
    elif condition == "b":
        if k >= 2:
            cop = coprime(anns[0], anns[1], caps)
            evidence["coprime"] = cop
            if not cop:
                raise PhsopPremiseError("a1 and a2 are not coprime")
        if codim != k:
            raise PhsopPremiseError(
                f"annihilators generate an ideal of height {codim}, not {k}"
            )
        if v.group.reductive:
            facts.append(f"{v.group.name} is reductive (declared)")
            evidence["phsop_route"] = (
                "reductive: a phsop in the polynomial ring restricts to a "
                "phsop in the invariant ring"
            )
        elif any("Roberts" in f for f in facts):
            evidence["phsop_route"] = (
                "transfer: the ring isomorphism carries the verified phsop "
                "of the reductive side to the invariant ring"
            )
        else:
            raise PhsopPremiseError(
                "no route establishes a phsop inside the invariant ring"
            )
    else:
        raise SpecError(f"unknown condition {condition!r}")

    m = None
    if k >= 2:
        m = build_witness_m(anns[0], witnesses[0], anns[1], witnesses[1], v)
        res = subring_membership(m, anns[:2], v)
        if res.is_member():
            raise WitnessMPremiseError(
                "m lies in the annihilator-generated subring ideal"
            )
        evidence["nonmembership_rank"] = res.report.to_json()
        evidence["ambient_membership"] = res.ambient_member
        evidence["determinant_triples"] = _determinant_identities(anns, witnesses)

    conclusion = max(k - 2, 0)
    return Certificate(
        name=inputs.name,
        module=v,
        k=k,
        condition=condition,
        cocycle=rc,
        annihilators=tuple(anns),
        witnesses=tuple(witnesses),
        m=m,
        evidence=evidence,
        declared_facts=tuple(dict.fromkeys(facts)),
        conclusion=conclusion,
        faithful=inputs.faithful,
        annotations=inputs.annotations,
        transfer=transfer,
    )


# -- builders -------------------------------------------------------------------


def frobenius_cocycle(group: GroupPresentation, v: Representation | None = None):
    """The projection cocycle of the Frobenius power inside the p-th
    symmetric power of a faithful module, valued in the maps vanishing on
    it.  This is the universal source of nontrivial classes here."""
    if v is None:
        v = natural_module(group)
    s = symmetric_power(v, group.p)
    f = frobenius_power(v)
    iota = np.zeros((f.dim, s.dim), dtype=np.int64)
    for i in range(f.dim):
        iota[i, i] = 1
    g = cocycle_from_projection(s, f, iota)
    return g, s, f


def _multideg_unit(eng, block_index, second=None):
    delta = [0] * eng.nblocks
    delta[block_index] += 1
    if second is not None:
        delta[second] += 1
    return tuple(delta)


def _blocks_within(v: Representation, start: int, stop: int):
    """Indices of the blocks lying entirely inside a coordinate range."""
    out = []
    for bi, block in enumerate(v.blocks):
        if all(start <= i < stop for i in block):
            out.append(bi)
    return out


def _embed_for(g: Cocycle, v: Representation, degree: int, candidates) -> RingCocycle:
    last = None
    for delta in candidates:
        try:
            wit = find_summand_witness(g.target, v, degree, delta)
            return embed_in_coordinate_ring(g, wit)
        except SummandError as exc:
            last = exc
    raise SummandError(f"no summand slot found: {last}")


def build_theorem47(u: Representation, g: Cocycle, k: int) -> CertificateInputs:
    """Dual of the target plus k extension blocks; the tagged coordinate of
    each extension block is a degree-one invariant annihilator."""
    if k < 0:
        raise SpecError("k must be nonnegative")
    dec = is_coboundary(g)
    if dec.is_coboundary():
        raise NontrivialityPremiseError("the class is trivial; nothing to build")
    udim = u.dim
    ext = extend_by_cocycle(u, g.components)
    v = direct_sum(dual(u), *[ext] * k)
    eng = slice_engine(v)
    anns = tuple(
        eng.ring_x.var(udim + i * (udim + 1) + udim) for i in range(k)
    )
    candidates = [
        _multideg_unit(eng, bi) for bi in _blocks_within(v, 0, udim)
    ]
    rc = _embed_for(g, v, 1, candidates)
    return CertificateInputs(
        name=f"theorem47({u.group.name},p={u.group.p},k={k})",
        module=v,
        k=k,
        cocycle=rc,
        annihilators=anns,
    )


def build_theorem48(
    u: Representation, g: Cocycle, k: int, faithful_prefix: Representation | None = None
) -> CertificateInputs:
    """k copies of (dual target (+) extension block), optionally preceded
    by a faithful module; annihilators are the tagged coordinates across
    the copies."""
    if k < 0:
        raise SpecError("k must be nonnegative")
    dec = is_coboundary(g)
    if dec.is_coboundary():
        raise NontrivialityPremiseError("the class is trivial; nothing to build")
    udim = u.dim
    ext = extend_by_cocycle(u, g.components)
    blocks = []
    if faithful_prefix is not None:
        blocks.append(faithful_prefix)
    for _ in range(k):
        blocks.append(dual(u))
        blocks.append(ext)
    v = direct_sum(*blocks)
    off = faithful_prefix.dim if faithful_prefix is not None else 0
    eng = slice_engine(v)
    anns = tuple(
        eng.ring_x.var(off + i * (2 * udim + 1) + udim + udim) for i in range(k)
    )
    if k == 0:
        raise SpecError("the repeated layout needs at least one copy")
    candidates = [
        _multideg_unit(eng, bi) for bi in _blocks_within(v, off, off + udim)
    ]
    rc = _embed_for(g, v, 1, candidates)
    faithful = None
    if faithful_prefix is not None:
        faithful = is_faithful(v)
    return CertificateInputs(
        name=f"theorem48({u.group.name},p={u.group.p},k={k})",
        module=v,
        k=k,
        cocycle=rc,
        annihilators=anns,
        faithful=faithful,
    )


def build_mk(group: GroupPresentation, vfaith: Representation, k: int) -> CertificateInputs:
    """The faithful module: dual Frobenius power (+) symmetric-power
    quotient (+) k extension blocks, with the class embedded in degree two
    and every fact re-checked."""
    if group.connected_component_is_torus:
        raise SpecError(
            "construction requires the identity component not to be a torus"
        )
    if not is_faithful(vfaith):
        raise SpecError("the seed module is not faithful")
    g, s, f = frobenius_cocycle(group, vfaith)
    dec = is_coboundary(g)
    if dec.is_coboundary():
        raise NontrivialityPremiseError(
            "the Frobenius class is trivial; the group looks linearly reductive"
        )
    u = g.target
    ext = extend_by_cocycle(u, g.components)
    fdual = dual(f.module)
    quot = quotient(s, f)
    v = direct_sum(fdual, quot, *[ext] * k)
    fd, qd, ud = fdual.dim, quot.dim, u.dim
    eng = slice_engine(v)
    anns = tuple(
        eng.ring_x.var(fd + qd + i * (ud + 1) + ud) for i in range(k)
    )
    candidates = []
    for b0 in _blocks_within(v, 0, fd):
        for b1 in _blocks_within(v, fd, fd + qd):
            candidates.append(_multideg_unit(eng, b0, b1))
    rc = _embed_for(g, v, 2, candidates)
    faithful = is_faithful(v)
    facts = (
        f"identity component of {group.name} is not a torus (declared)",
    )
    return CertificateInputs(
        name=f"mk({group.name},p={group.p},k={k})",
        module=v,
        k=k,
        cocycle=rc,
        annihilators=anns,
        declared_facts=facts,
        faithful=faithful,
        annotations=(f"dim = {v.dim}",),
    )


def _per_block_invariants(v: Representation, degree: int, block_indices):
    """Invariant slice elements supported inside single listed blocks, one
    chosen per block, in block order."""
    eng = slice_engine(v)
    slice_ = invariant_slice(v, degree)
    chosen = []
    for bi in block_indices:
        block_vars = set(v.blocks[bi])
        hits = [
            b
            for b in slice_.basis
            if all(
                set(i for i, e in enumerate(exps) if e) <= block_vars
                for exps in b.terms
            )
        ]
        if not hits:
            raise SpecError(
                f"no degree-{degree} invariant supported on block {bi}"
            )
        chosen.append(hits[0])
    return tuple(chosen)


def build_example(name: str, p: int, k: int) -> CertificateInputs:
    """The named explicit modules with their distinguished cocycles and
    candidate annihilators."""
    if name == "ex51":
        if p != 2:
            raise SpecError("ex51 requires p = 2")
        sl2 = builtin_group("SL2", 2)
        g, s2, f2 = frobenius_cocycle(sl2)
        v = direct_sum(f2.module, *[s2] * k)
        eng = slice_engine(v)
        anns = tuple(eng.ring_x.var(2 + 3 * i + 2) for i in range(k))
        candidates = [_multideg_unit(eng, bi) for bi in _blocks_within(v, 0, 2)]
        rc = _embed_for(g, v, 1, candidates)
        return CertificateInputs(
            name=f"ex51(k={k})",
            module=v,
            k=k,
            cocycle=rc,
            annihilators=anns,
            annotations=(f"dim = {v.dim}",),
        )
    if name in ("ex52a", "ex52b"):
        if p != 3:
            raise SpecError(f"{name} requires p = 3")
        sl2 = builtin_group("SL2", 3)
        nat = natural_module(sl2)
        g, s3, f3 = frobenius_cocycle(sl2)
        tail = symmetric_power(nat, 4) if name == "ex52a" else symmetric_power(nat, 2)
        v = direct_sum(f3.module, nat, *[tail] * k)
        eng = slice_engine(v)
        blocks0 = _blocks_within(v, 0, 2)
        blocks1 = _blocks_within(v, 2, 4)
        candidates = [
            _multideg_unit(eng, b0, b1) for b0 in blocks0 for b1 in blocks1
        ]
        rc = _embed_for(g, v, 2, candidates)
        tail_blocks = _blocks_within(v, 4, v.dim)
        ann_degree = 1 if name == "ex52a" else 2
        anns = _per_block_invariants(v, ann_degree, tail_blocks)
        if len(anns) != k:
            raise SpecError("did not find one annihilator per tail block")
        return CertificateInputs(
            name=f"{name}(k={k})",
            module=v,
            k=k,
            cocycle=rc,
            annihilators=anns,
            nat_span=(2, 2),
            annotations=(f"dim = {v.dim}",),
        )
    if name == "thm52":
        sl2 = builtin_group("SL2", p)
        nat = natural_module(sl2)
        g, sp, fp = frobenius_cocycle(sl2)
        v = direct_sum(fp.module, *[nat] * k)
        eng = slice_engine(v)
        blocks0 = _blocks_within(v, 0, 2)
        if quotient_is_trivial := (sp.dim - fp.dim == 1):
            candidates = [_multideg_unit(eng, b0) for b0 in blocks0]
            degree = 1
        else:
            nat_blocks = _blocks_within(v, 2, 4)
            candidates = [
                _multideg_unit(eng, b0, b1) for b0 in blocks0 for b1 in nat_blocks
            ]
            degree = 2
        rc = _embed_for(g, v, degree, candidates)
        anns = _search_annihilators(rc, k, max_degree=3)
        return CertificateInputs(
            name=f"thm52(p={p},k={k})",
            module=v,
            k=k,
            cocycle=rc,
            annihilators=anns,
            nat_span=None,
            annotations=(
                f"dim = {v.dim}",
                "annihilators found by search; the stated dimension and depth "
                "bounds of the source construction are recorded unverified",
            ),
        )
    raise SpecError(f"unknown example {name!r}")


def _search_annihilators(rc: RingCocycle, k: int, max_degree: int = 3) -> tuple:
    """Greedy search for k annihilators forming a phsop, scanning the
    annihilator space degree by degree."""
    v = rc.module
    chosen: list = []
    for d in range(1, max_degree + 1):
        basis = invariant_slice(v, d).basis
        if not basis:
            continue
        for a in annihilator_space(rc, d, basis):
            trial = chosen + [a]
            try:
                if ideal_codim(trial) == len(trial):
                    chosen.append(a)
            except Exception:
                continue
            if len(chosen) == k:
                return tuple(chosen)
    return tuple(chosen)


# -- Roberts transfer ------------------------------------------------------------


@dataclass
class TransferOutcome:
    certificate: Certificate | None
    sl2_certificate: Certificate | None
    failed_reason: str | None = None

    def ok(self) -> bool:
        return self.certificate is not None


def _shift_inputs_with_nat_prefix(inputs: CertificateInputs) -> CertificateInputs:
    """Prefix a natural block and shift all coordinate data by two."""
    sl2 = inputs.module.group
    nat = natural_module(sl2)
    v2 = direct_sum(nat, inputs.module)
    eng2 = slice_engine(v2)
    ring2 = eng2.ring_x

    def shift_poly(f: Poly) -> Poly:
        return f.lift(ring2, 2)

    monos_old = slice_engine(inputs.module).monomials(inputs.cocycle.degree)
    comp_of = {b: c for b, c in zip(monos_old, inputs.cocycle.components)}
    new_monos = eng2.monomials(inputs.cocycle.degree)
    comps = []
    for beta in new_monos:
        if beta[0] == 0 and beta[1] == 0:
            comps.append(comp_of.get(beta[2:], inputs.module.ring.zero()))
        else:
            comps.append(inputs.module.ring.zero())
    rc2 = RingCocycle(v2, inputs.cocycle.degree, tuple(comps))
    return CertificateInputs(
        name=inputs.name + "+nat",
        module=v2,
        k=inputs.k,
        cocycle=rc2,
        annihilators=tuple(shift_poly(a) for a in inputs.annihilators),
        declared_facts=inputs.declared_facts,
        nat_span=(0, 2),
        annotations=inputs.annotations,
    )


def roberts_transfer(inputs: CertificateInputs, caps: ResourceCaps = DEFAULT_CAPS) -> TransferOutcome:
    """Turn a verified SL2 certificate whose module contains a natural
    summand into a Ga certificate for the complementary module, restricting
    along t -> (1 t; 0 1) and evaluating the natural coordinates at the
    fixed vector.  Every group-dependent premise is re-verified over Ga;
    nontriviality of the restricted class is proved afresh."""
    if inputs.module.group.name != "SL2":
        raise SpecError("transfer starts from an SL2 certificate")
    p = inputs.module.group.p
    if inputs.nat_span is None:
        inputs = _shift_inputs_with_nat_prefix(inputs)
    s, ln = inputs.nat_span
    if ln != 2:
        raise SpecError("the natural span must have length two")

    sl2_cert = certify_cmdef(inputs, condition="a", caps=caps)

    v = inputs.module
    n = v.dim
    keep = [i for i in range(n) if not (s <= i < s + 2)]
    for i in keep:
        for j in range(s, s + 2):
            if not v.action[i][j].is_zero() or not v.action[j][i].is_zero():
                raise SpecError("the natural span is not a direct summand")
    emb = additive_to_sl2(p)
    sub_action = [[v.action[i][j] for j in keep] for i in keep]
    v_sl2_sub = Representation(
        v.group, sub_action, tuple(v.basis[i] for i in keep), f"drop_nat({v.provenance})"
    )
    v_ga = restrict(v_sl2_sub, emb)
    eng_ga = slice_engine(v_ga)
    ring_ga_x = eng_ga.ring_x
    ga = v_ga.group

    old_index = {old: new for new, old in enumerate(keep)}

    def eval_poly(f: Poly, ring_x_target: Ring) -> Poly:
        """Evaluate the natural coordinates at the fixed vector (1, 0)."""
        out = ring_x_target.zero()
        for exps, c in f.terms.items():
            if exps[s + 1]:
                continue
            new = [0] * ring_x_target.nvars
            ok = True
            for i, e in enumerate(exps):
                if not e or i == s or i == s + 1:
                    continue
                new[old_index[i]] = e
            out = out + ring_x_target.monomial(new, c)
        return out

    def restrict_groupring(f: Poly) -> Poly:
        return f.subst(
            [ga.ring1.one(), ga.ring1.var(0), ga.ring1.zero(), ga.ring1.one()],
            ga.ring1,
        )

    # evaluate the cocycle; split by residual degree and keep the nontrivial part
    eng_old = slice_engine(v)
    by_degree: dict = {}
    for beta, comp in zip(eng_old.monomials(inputs.cocycle.degree), inputs.cocycle.components):
        if comp.is_zero() or beta[s + 1]:
            continue
        new = [0] * v_ga.dim
        for i, e in enumerate(beta):
            if not e or i == s or i == s + 1:
                continue
            new[old_index[i]] = e
        dd = sum(new)
        by_degree.setdefault(dd, {})
        key = tuple(new)
        comp_ga = restrict_groupring(comp)
        if key in by_degree[dd]:
            by_degree[dd][key] = by_degree[dd][key] + comp_ga
        else:
            by_degree[dd][key] = comp_ga

    ga_rc = None
    for dd in sorted(by_degree):
        monos = eng_ga.monomials(dd)
        comps = tuple(by_degree[dd].get(b, ga.ring1.zero()) for b in monos)
        cand = RingCocycle(v_ga, dd, comps)
        if cand.is_zero():
            continue
        if not verify_ring_cocycle(cand):
            return TransferOutcome(
                None, sl2_cert, "evaluated class is not a cocycle over Ga"
            )
        if not is_coboundary_ring(cand).is_coboundary():
            ga_rc = cand
            break
    if ga_rc is None:
        return TransferOutcome(
            None,
            sl2_cert,
            "transfer failed: the restricted class is a coboundary over Ga",
        )

    ga_anns = []
    for a in inputs.annihilators:
        if any(exps[s] or exps[s + 1] for exps in a.terms):
            return TransferOutcome(
                None, sl2_cert, "an annihilator involves the natural coordinates"
            )
        ga_anns.append(eval_poly(a, ring_ga_x))

    transfer_payload = {
        "kind": "roberts",
        "embedding": "t -> (1 t; 0 1)",
        "evaluation_point": [1, 0],
        "nat_span": [s, 2],
        "sl2_certificate": sl2_cert.to_json(),
    }
    ga_inputs = CertificateInputs(
        name=inputs.name + "->Ga",
        module=v_ga,
        k=inputs.k,
        cocycle=ga_rc,
        annihilators=tuple(ga_anns),
        declared_facts=inputs.declared_facts + (ROBERTS_FACT,),
        annotations=inputs.annotations,
    )
    try:
        ga_cert = certify_cmdef(ga_inputs, condition="b", caps=caps, transfer=transfer_payload)
    except PremiseError as exc:
        return TransferOutcome(None, sl2_cert, f"{exc.premise} premise failed over Ga: {exc}")
    return TransferOutcome(ga_cert, sl2_cert)


def self_duality_intertwiner(v: Representation):
    """A block-diagonal invertible intertwiner between the module and its
    dual, assembled from per-block isomorphisms."""
    p = v.group.p
    n = v.dim
    total = np.zeros((n, n), dtype=np.int64)
    for block in v.blocks:
        sub = block_subrep(v, block)
        t = find_isomorphism(sub, dual(sub))
        if t is None:
            raise SpecError(f"block {block} is not isomorphic to its dual")
        for bi, i in enumerate(block):
            for bj, j in enumerate(block):
                total[i, j] = t[bi, bj]
    # global re-verification against the full dual
    dv = dual(v)
    from .groups import context

    ctx = context(v.group, 1)
    ring = v.ring
    for i in range(n):
        for j in range(n):
            lhs = ring.zero()
            for r in range(n):
                c = int(total[i, r])
                if c:
                    lhs = lhs + v.action[r][j] * c
            rhs = ring.zero()
            for r in range(n):
                c = int(total[r, j])
                if c:
                    rhs = rhs + dv.action[i][r] * c
            if not ctx.is_zero(lhs - rhs):
                raise SpecError("assembled intertwiner fails to intertwine")
    return total


# -- verification from serialized data -------------------------------------------


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class VerifyReport:
    checks: list = field(default_factory=list)

    def add(self, name: str, ok: bool, detail: str = ""):
        self.checks.append(CheckResult(name, ok, detail))

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def first_failure(self) -> CheckResult | None:
        for c in self.checks:
            if not c.ok:
                return c
        return None


def certificate_from_json(data: dict):
    """Reconstruct the objects a verification run needs."""
    v = rep_from_json(data["module"])
    eng = slice_engine(v)
    degree = int(data["cocycle"]["degree"])
    comps = tuple(v.ring.parse(c) for c in data["cocycle"]["components"])
    rc = RingCocycle(v, degree, comps)
    anns = tuple(eng.ring_x.parse(a) for a in data["annihilators"])
    wits = tuple(eng.ring_x.parse(b) for b in data["witnesses"])
    m = eng.ring_x.parse(data["m"]) if data.get("m") else None
    return v, rc, anns, wits, m


def verify_certificate(data: dict, caps: ResourceCaps = DEFAULT_CAPS) -> VerifyReport:
    """Re-run every premise check from the serialized certificate alone."""
    report = VerifyReport()
    if data.get("schema_version") != SCHEMA_VERSION:
        report.add("schema", False, "unknown schema version")
        return report
    try:
        v, rc, anns, wits, m = certificate_from_json(data)
    except Exception as exc:
        report.add("decode", False, str(exc))
        return report
    report.add("decode", True)
    k = int(data["k"])
    condition = data["condition"]
    eng = slice_engine(v)

    report.add("module_laws", v.verify())

    report.add("cocycle", verify_ring_cocycle(rc))

    dec = is_coboundary_ring(rc)
    stored = data["evidence"].get("noncoboundary_rank", {})
    report.add(
        "nontriviality",
        (not dec.is_coboundary()) and dec.report.to_json() == stored,
        f"recomputed {dec.report.to_json()}, stored {stored}",
    )

    if len(anns) != k or len(wits) != k:
        report.add("annihilator", False, "count mismatch")
    for idx, (a, b) in enumerate(zip(anns, wits)):
        ok = (
            not a.is_zero()
            and a.is_homogeneous()
            and a.total_degree() >= 1
            and is_invariant(v, a)
        )
        if ok:
            ag = multiply_invariant(a, rc)
            diff = eng.act_on_x_poly(b) - eng.lift_x(b) - ag.joint_value()
            ok = eng.nf(diff).is_zero()
        report.add(f"annihilator_{idx}", ok)

    try:
        codim = ideal_codim(anns, caps) if anns else 0
    except Exception as exc:
        codim = -1
        report.add("phsop", False, str(exc))
    else:
        ok = codim == k == data["evidence"].get("codim", -2) and codim == k
        if condition == "a":
            ok = ok and bool(v.group.reductive)
        elif condition == "b":
            if k >= 2:
                ok = ok and coprime(anns[0], anns[1], caps)
            ok = ok and (
                bool(v.group.reductive)
                or any("Roberts" in f for f in data.get("declared_facts", []))
            )
        report.add("phsop", ok, f"codim {codim}")

    if k >= 2:
        try:
            m2 = build_witness_m(anns[0], wits[0], anns[1], wits[1], v)
        except PremiseError as exc:
            report.add("witness_m", False, str(exc))
        else:
            ok = m is not None and m2 == m
            detail = ""
            if ok:
                res = subring_membership(m, anns[:2], v)
                stored_rank = data["evidence"].get("nonmembership_rank", {})
                ok = (not res.is_member()) and res.report.to_json() == stored_rank
                detail = f"recomputed {res.report.to_json()}"
                if ok:
                    try:
                        _determinant_identities(anns, wits)
                    except PremiseError as exc:
                        ok = False
                        detail = str(exc)
            report.add("witness_m", ok, detail)

    report.add(
        "conclusion",
        int(data["conclusion"]) == max(k - 2, 0),
        f"stored {data['conclusion']}",
    )

    if data.get("faithful") is not None:
        report.add("faithful", is_faithful(v) == bool(data["faithful"]))

    if data.get("transfer"):
        inner = data["transfer"].get("sl2_certificate")
        if inner is None:
            report.add("transfer_inner", False, "missing inner certificate")
        else:
            inner_report = verify_certificate(inner, caps)
            report.add(
                "transfer_inner",
                inner_report.ok,
                "" if inner_report.ok else str(inner_report.first_failure()),
            )
            report.add(
                "transfer_consistency",
                _check_transfer_consistency(data, inner),
            )
    return report


def _check_transfer_consistency(outer: dict, inner: dict) -> bool:
    """The Ga data must be the evaluation of the SL2 data at the fixed
    vector of the natural summand."""
    try:
        v_sl2, rc_sl2, anns_sl2, _, _ = certificate_from_json(inner)
        v_ga, rc_ga, anns_ga, _, _ = certificate_from_json(outer)
        s, ln = outer["transfer"]["nat_span"]
        if ln != 2:
            return False
        keep = [i for i in range(v_sl2.dim) if not (s <= i < s + 2)]
        emb = additive_to_sl2(v_sl2.group.p)
        sub_action = [[v_sl2.action[i][j] for j in keep] for i in keep]
        v_expected = restrict(
            Representation(
                v_sl2.group,
                sub_action,
                tuple(v_sl2.basis[i] for i in keep),
                "drop_nat",
            ),
            emb,
        )
        if v_expected.action != v_ga.action:
            return False
        ga = v_ga.group
        old_index = {old: new for new, old in enumerate(keep)}
        expected: dict = {}
        eng_old = slice_engine(v_sl2)
        for beta, comp in zip(eng_old.monomials(rc_sl2.degree), rc_sl2.components):
            if comp.is_zero() or beta[s + 1]:
                continue
            new = [0] * v_ga.dim
            for i, e in enumerate(beta):
                if not e or i == s or i == s + 1:
                    continue
                new[old_index[i]] = e
            if sum(new) != rc_ga.degree:
                continue
            key = tuple(new)
            comp_ga = comp.subst(
                [ga.ring1.one(), ga.ring1.var(0), ga.ring1.zero(), ga.ring1.one()],
                ga.ring1,
            )
            expected[key] = expected.get(key, ga.ring1.zero()) + comp_ga
        eng_ga = slice_engine(v_ga)
        for beta, comp in zip(eng_ga.monomials(rc_ga.degree), rc_ga.components):
            want = expected.get(beta, ga.ring1.zero())
            from .groups import context as _ctx

            if not _ctx(ga, 1).is_zero(comp - want):
                return False
        return True
    except Exception:
        return False
