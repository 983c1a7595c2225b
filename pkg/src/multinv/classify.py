"""Cohen-Macaulay classification of F_p[Z^n]^G with checkable certificates.

The decision procedure fires the first applicable rule in a fixed order:

  R1  CM     p does not divide |G| (the averaging map splits the inclusion).
  R2  CM     G is generated by reflections (rank(g-1) <= 1); the invariants
             form an affine normal semigroup algebra.
  R3  CM     rank of A/A^P is at most 2 for a Sylow p-subgroup P.
  R4  CM     P itself is settled CM by R1-R3 (indices prime to p transfer
             the property from R^P up to R^G).
  R5  NotCM  P is cyclic, G has a nontrivial p-group quotient, and no
             generator of P is a bireflection (rank(g-1) <= 2).
  R6  CM/NotCM  P acts fixed-point-freely; then CM holds iff n <= mu + 1,
             where mu is the least positive degree with nonvanishing
             action cohomology.
  R7  NotCM  |P| = p and n - rank A^P exceeds 2*[N_G(P):C_G(P)].
  R8  Unknown, listing why each rule was inapplicable.

The criteria overlap; audit mode evaluates every rule and raises
InconsistentRulesError if a CM rule and a NotCM rule ever both apply, which
turns the overlap into a correctness check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .action import mu_action
from .intlinalg import fixed_lattice, intmat
from .matgroup import (
    MatGroup,
    is_fixed_point_free,
    is_prime,
    op_core,
    subgroup_structure,
    sylow,
)

CM = "CM"
NOT_CM = "NotCM"
UNKNOWN = "Unknown"


class InconsistentRulesError(RuntimeError):
    """A CM rule and a NotCM rule both applied to the same input."""


@dataclass
class ClassifyOptions:
    max_group_order: int = 10000
    subgroup_bound: int = 200
    mu_search_limit: int = 9
    audit: bool = False


@dataclass(frozen=True)
class Verdict:
    status: str
    rule: str
    certificate: dict
    notes: tuple[str, ...] = ()


def _matrix_list(m) -> list[list[int]]:
    return [[int(x) for x in row] for row in m.tolist()]


class _Context:
    """Lazy per-input facts shared by the rule evaluators."""

    def __init__(self, G: MatGroup, p: int, opts: ClassifyOptions):
        self.G = G
        self.p = p
        self.opts = opts
        self.notes: list[str] = []
        self._sylow = None
        self._rank_drops = None
        self._moved_rank = None

    @property
    def sylow(self) -> MatGroup:
        if self._sylow is None:
            self._sylow = sylow(self.G, self.p)
        return self._sylow

    def rank_drops(self) -> list[int]:
        if self._rank_drops is None:
            n = self.G.n
            self._rank_drops = [n - fixed_lattice([g]).rank for g in self.G.elements]
        return self._rank_drops

    @property
    def moved_rank(self) -> int:
        """rank of A / A^P for the chosen Sylow subgroup."""
        if self._moved_rank is None:
            self._moved_rank = self.G.n - fixed_lattice(self.sylow.elements).rank
        return self._moved_rank


def _rule_r1(ctx: _Context):
    if ctx.G.order % ctx.p != 0:
        cert = {"group_order": ctx.G.order, "p": ctx.p}
        return (CM, cert), None
    return None, f"p = {ctx.p} divides the group order {ctx.G.order}"


def _rule_r2(ctx: _Context):
    drops = ctx.rank_drops()
    reflections = [i for i in range(ctx.G.order) if drops[i] <= 1]
    span = ctx.G.closure_indices(reflections)
    if len(span) == ctx.G.order:
        # trim to a short generating set of G among the reflections
        chosen: list[int] = []
        for i in reflections:
            if i in ctx.G.closure_indices(chosen):
                continue
            chosen.append(i)
            if len(ctx.G.closure_indices(chosen)) == ctx.G.order:
                break
        cert = {"reflection_generators": [_matrix_list(ctx.G.elements[i]) for i in chosen]}
        return (CM, cert), None
    return None, (f"reflections generate a subgroup of order {len(span)} "
                  f"inside order {ctx.G.order}")


def _rule_r3(ctx: _Context):
    if ctx.moved_rank <= 2:
        P = ctx.sylow
        cert = {
            "sylow_order": P.order,
            "moved_rank": ctx.moved_rank,
            "sylow_generators": [_matrix_list(P.elements[i])
                                 for i in P.small_generating_indices()],
        }
        return (CM, cert), None
    return None, f"rank A/A^P = {ctx.moved_rank} > 2"


def _rule_r4(ctx: _Context):
    sub_ctx = _Context(ctx.sylow, ctx.p, ctx.opts)
    for rule_id, fn in (("R1", _rule_r1), ("R2", _rule_r2), ("R3", _rule_r3)):
        outcome, _ = fn(sub_ctx)
        if outcome is not None:
            status, sub_cert = outcome
            assert status == CM
            cert = {
                "sylow_order": ctx.sylow.order,
                "sylow_rule": rule_id,
                "sylow_certificate": sub_cert,
            }
            return (CM, cert), None
    return None, "Sylow subgroup is not settled CM by rules R1-R3"


def _cyclic_generator_indices(P: MatGroup) -> list[int]:
    orders = P.element_orders()
    return [i for i in range(P.order) if orders[i] == P.order]


def _rule_r5(ctx: _Context):
    P = ctx.sylow
    if P.order == 1:
        return None, "Sylow subgroup is trivial"
    gens = _cyclic_generator_indices(P)
    if not gens:
        return None, "Sylow subgroup is not cyclic"
    core = op_core(ctx.G, ctx.p)
    if core.order == ctx.G.order:
        return None, "G has no nontrivial p-group quotient"
    # all generators of a cyclic P share the fixed lattice of P
    drop = ctx.moved_rank
    if drop <= 2:
        return None, "the Sylow generator is a bireflection"
    cert = {
        "sylow_order": P.order,
        "sylow_generator": _matrix_list(P.elements[gens[0]]),
        "generator_rank_drop": drop,
        "p_quotient_order": ctx.G.order // core.order,
    }
    return (NOT_CM, cert), None


def _rule_r6(ctx: _Context):
    P = ctx.sylow
    if not is_fixed_point_free(P):
        return None, "Sylow subgroup does not act fixed-point-freely"
    mu = mu_action(ctx.G, ctx.p, ctx.opts.mu_search_limit, ctx.opts.subgroup_bound)
    if not mu.exact:
        ctx.notes.append(
            f"mu undetermined: H^r nonzero first occurs above degree {mu.value - 1}")
        return None, "fixed-point-free, but mu exceeded the search limit"
    n = ctx.G.n
    mu_repr = "infinity" if mu.is_infinite else int(mu.value)
    cert = {"mu": mu_repr, "dim": n, "fixed_point_free": True}
    status = CM if (mu.is_infinite or n <= mu.value + 1) else NOT_CM
    return (status, cert), None


def _rule_r7(ctx: _Context):
    P = ctx.sylow
    if P.order != ctx.p:
        return None, f"Sylow subgroup has order {P.order}, not exactly p"
    _, _, nc = subgroup_structure(ctx.G, P)
    height = ctx.moved_rank
    if height > 2 * nc:
        cert = {"sylow_order": P.order, "nc_index": nc, "sylow_height": height}
        return (NOT_CM, cert), None
    return None, f"height {height} <= 2*[N:C] = {2 * nc}"


_RULES = [
    ("R1", _rule_r1),
    ("R2", _rule_r2),
    ("R3", _rule_r3),
    ("R4", _rule_r4),
    ("R5", _rule_r5),
    ("R6", _rule_r6),
    ("R7", _rule_r7),
]


def classify(G: MatGroup, p: int, opts: ClassifyOptions | None = None) -> Verdict:
    """Render the Cohen-Macaulay verdict for F_p[Z^n]^G.

    In audit mode every rule is evaluated and a CM/NotCM conflict raises
    InconsistentRulesError; otherwise evaluation stops at the first hit.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    opts = opts or ClassifyOptions()
    if G.order > opts.max_group_order:
        raise ValueError(f"group order {G.order} exceeds max_group_order")
    ctx = _Context(G, p, opts)
    evaluations: list[tuple[str, tuple | None, str | None]] = []
    for rule_id, fn in _RULES:
        outcome, reason = fn(ctx)
        evaluations.append((rule_id, outcome, reason))
        if outcome is not None and not opts.audit:
            break
    if opts.audit:
        statuses = {out[0] for _, out, _ in evaluations if out is not None}
        if CM in statuses and NOT_CM in statuses:
            detail = {rid: out[0] for rid, out, _ in evaluations if out is not None}
            raise InconsistentRulesError(f"conflicting applicable rules: {detail}")
    for rule_id, outcome, _ in evaluations:
        if outcome is not None:
            status, cert = outcome
            return Verdict(status, rule_id, cert, tuple(ctx.notes))
    inapplicable = [{"rule": rid, "reason": reason} for rid, _, reason in evaluations]
    return Verdict(UNKNOWN, "R8", {"inapplicable": inapplicable}, tuple(ctx.notes))


def applicable_rules(G: MatGroup, p: int,
                     opts: ClassifyOptions | None = None) -> dict[str, str]:
    """Map rule id -> status for every applicable rule (audit helper)."""
    opts = opts or ClassifyOptions()
    ctx = _Context(G, p, opts)
    out = {}
    for rule_id, fn in _RULES:
        outcome, _ = fn(ctx)
        if outcome is not None:
            out[rule_id] = outcome[0]
    return out


def verify_certificate(G: MatGroup, p: int, verdict: Verdict) -> bool:
    """Re-run the cited test on the certificate data."""
    cert = verdict.certificate
    if verdict.rule == "R1":
        return (cert["group_order"] == G.order and cert["p"] == p
                and G.order % p != 0 and verdict.status == CM)
    if verdict.rule == "R2":
        gens = [intmat(m) for m in cert["reflection_generators"]]
        n = G.n
        if any(n - fixed_lattice([g]).rank > 1 for g in gens):
            return False
        idx = [G.index_of(g) for g in gens]
        return len(G.closure_indices(idx)) == G.order and verdict.status == CM
    if verdict.rule == "R3":
        P = sylow(G, p)
        moved = G.n - fixed_lattice(P.elements).rank
        return (moved == cert["moved_rank"] and moved <= 2
                and P.order == cert["sylow_order"] and verdict.status == CM)
    if verdict.rule == "R4":
        P = sylow(G, p)
        if P.order != cert["sylow_order"]:
            return False
        sub_verdict = Verdict(CM, cert["sylow_rule"], cert["sylow_certificate"])
        return verify_certificate(P, p, sub_verdict) and verdict.status == CM
    if verdict.rule == "R5":
        g = intmat(cert["sylow_generator"])
        P = sylow(G, p)
        if P.order != cert["sylow_order"] or cert["p_quotient_order"] <= 1:
            return False
        drop = G.n - fixed_lattice([g]).rank
        core = op_core(G, p)
        return (drop == cert["generator_rank_drop"] and drop > 2
                and G.order // core.order == cert["p_quotient_order"]
                and verdict.status == NOT_CM)
    if verdict.rule == "R6":
        P = sylow(G, p)
        if not is_fixed_point_free(P):
            return False
        mu = mu_action(G, p)
        if not mu.exact:
            return False
        mu_repr = "infinity" if mu.is_infinite else int(mu.value)
        if mu_repr != cert["mu"] or cert["dim"] != G.n:
            return False
        cm = mu.is_infinite or G.n <= mu.value + 1
        return verdict.status == (CM if cm else NOT_CM)
    if verdict.rule == "R7":
        P = sylow(G, p)
        if P.order != p:
            return False
        _, _, nc = subgroup_structure(G, P)
        height = G.n - fixed_lattice(P.elements).rank
        return (nc == cert["nc_index"] and height == cert["sylow_height"]
                and height > 2 * nc and verdict.status == NOT_CM)
    if verdict.rule == "R8":
        return verdict.status == UNKNOWN
    return False
