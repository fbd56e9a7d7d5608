"""Pipeline from a weight tuple to the invariant Gauss-Manin report.

Given positive weights w = (w_0, ..., w_n) with d = sum(w_i) and
e = gcd(w_i), the pipeline produces:

  * the critical parameter value gamma = d^-d * prod(w_i^w_i) and the locus
    of singular fibers gamma * t^d = 1;
  * the set C of classes k/d that coincide with some j/w_i (0 < j < w_i);
  * the irreducible hypergeometric datum obtained by cancelling the lists
    (j/w_i : all i, j) against (k/d : k = 1..d);
  * the block G of rank d - e carrying the nonconstant cohomology, with its
    exponents at zero and infinity, Euler characteristic -1, unique finite
    singularity at gamma, and the two exact sequences describing how it sits
    inside the degree-zero cohomology;
  * the per-degree cohomology tables of the two auxiliary complexes;
  * the Fourier operator pair (P, Q) with its calibrated sign.

For non-primitive weights (e > 1) the report wraps the primitive report of
w/e in a pushforward pair along z -> z^e instead of refusing: gamma scales
as gamma(w) = gamma(w/e)^e, ranks multiply by e and exponent classes are the
e-fold preimages of the primitive ones.

Every report embeds the pass/fail results of its internal consistency
checks, which confront the closed formulas with the operator-level oracles
(indicial roots, singular support, Fourier identity) and with the
arrangement-cohomology tables.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from . import arrangement, weyl
from .hypergeom import (ExpMultiset, FactorList, HypModule, KummerModule,
                        PushforwardHyp, euler_char, hyp_factor, hyp_operator,
                        is_irreducible, kummer, make_hyp, power_pullback,
                        structure)
from .weyl import WeylOp, format_poly

WeightsLike = Union["Weights", Sequence[int]]


# ---------------------------------------------------------------------------
# Weights
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Weights:
    """Tuple of n+1 positive weights with its derived gcd chain."""

    w: tuple[int, ...]

    def __post_init__(self):
        if len(self.w) < 2:
            raise ValueError("need at least two weights")
        if any(x < 1 for x in self.w):
            raise ValueError("weights must be positive integers")

    @property
    def n(self) -> int:
        return len(self.w) - 1

    @property
    def d(self) -> int:
        return sum(self.w)

    @property
    def e_chain(self) -> tuple[int, ...]:
        chain = []
        g = 0
        for x in self.w:
            g = math.gcd(g, x)
            chain.append(g)
        return tuple(chain)

    @property
    def e(self) -> int:
        return self.e_chain[-1]

    @property
    def primitive(self) -> bool:
        return self.e == 1

    def reduced(self) -> "Weights":
        """The primitive tuple w/e."""
        e = self.e
        return Weights(tuple(x // e for x in self.w))

    def __iter__(self):
        return iter(self.w)

    def __len__(self) -> int:
        return len(self.w)


def validate_weights(raw: WeightsLike) -> Weights:
    """Check and wrap a weight sequence; at least two entries, all >= 1."""
    if isinstance(raw, Weights):
        return raw
    return Weights(tuple(int(x) for x in raw))


# ---------------------------------------------------------------------------
# Critical value and singular fibers
# ---------------------------------------------------------------------------

def gamma_n(w: WeightsLike) -> Fraction:
    """The critical parameter value d^-d * prod(w_i^w_i), exactly."""
    w = validate_weights(w)
    num = 1
    for x in w:
        num *= x ** x
    return Fraction(num, w.d ** w.d)


def _integer_nthroot(x: int, n: int) -> tuple[int, bool]:
    if x == 0:
        return 0, True
    r = max(1, int(round(x ** (1.0 / n))))
    while r ** n > x:
        r -= 1
    while (r + 1) ** n <= x:
        r += 1
    return r, r ** n == x


@dataclass(frozen=True)
class SingularFibers:
    """The locus descriptor gamma * t^d - 1 of the singular parameters."""

    gamma: Fraction
    degree: int
    rational_roots: tuple[Fraction, ...]

    @property
    def poly_str(self) -> str:
        coeffs = [Fraction(-1)] + [Fraction(0)] * (self.degree - 1) + [self.gamma]
        return format_poly(coeffs, "t")


def singular_fibers(w: WeightsLike) -> SingularFibers:
    """Polynomial gamma * t^d - 1; rational roots listed when 1/gamma is a
    perfect d-th power of a rational."""
    w = validate_weights(w)
    g = gamma_n(w)
    inv = 1 / g
    rn, okn = _integer_nthroot(inv.numerator, w.d)
    rd, okd = _integer_nthroot(inv.denominator, w.d)
    roots: tuple[Fraction, ...] = ()
    if okn and okd:
        r = Fraction(rn, rd)
        roots = (-r, r) if w.d % 2 == 0 else (r,)
    return SingularFibers(gamma=g, degree=w.d, rational_roots=roots)


def c_set(w: WeightsLike) -> ExpMultiset:
    """Classes k/d (0 < k < d) equal to some j/w_i with 0 < j < w_i, each once.

    Empty exactly when d is prime to every w_i.
    """
    w = validate_weights(w)
    d = w.d
    found = set()
    for k in range(1, d):
        if any((k * wi) % d == 0 for wi in w):
            found.add(Fraction(k, d))
    return ExpMultiset(sorted(found))


# ---------------------------------------------------------------------------
# The invariant hypergeometric datum and the G block
# ---------------------------------------------------------------------------

def invariant_hyp(w: WeightsLike) -> HypModule:
    """The irreducible hypergeometric datum of the invariant part.

    cancel(j/w_i : i = 0..n, j = 1..w_i ; k/d : k = 1..d) with gamma the
    critical value; requires primitive weights.
    """
    w = validate_weights(w)
    if not w.primitive:
        raise ValueError("the invariant datum is defined for primitive weights; "
                         "use the pushforward pair for gcd > 1")
    alpha = [Fraction(j, wi) for wi in w for j in range(1, wi + 1)]
    beta = [Fraction(k, w.d) for k in range(1, w.d + 1)]
    return make_hyp(gamma_n(w), alpha, beta, reduce=True)


@dataclass(frozen=True)
class ExactSeq:
    left: str
    middle: str
    right: str
    split: str = "unknown"

    def as_json(self) -> dict:
        return {"left": self.left, "middle": self.middle,
                "right": self.right, "split": self.split}


@dataclass(frozen=True)
class GBlock:
    """Structured description of the rank d - e block G.

    ``kummer_block`` lists the Kummer composition factors of G (the classes
    of the C set in the primitive case, their e-fold preimages otherwise);
    ``c_set`` always records the combinatorial C set of the weights
    themselves.
    """

    rank: int
    c_set: ExpMultiset
    hyp: HypModule | PushforwardHyp
    kummer_block: FactorList
    exps_zero: ExpMultiset
    exps_infinity: ExpMultiset
    chi: int
    finite_singularity: Fraction
    sequences: tuple[ExactSeq, ExactSeq]

    @property
    def base_hyp(self) -> HypModule:
        return self.hyp.base if isinstance(self.hyp, PushforwardHyp) else self.hyp

    def hyp_display(self) -> object:
        if isinstance(self.hyp, PushforwardHyp):
            return {"e": self.hyp.e, "base": self.hyp.base.display()}
        return self.hyp.display()

    def as_json(self) -> dict:
        return {
            "rank": self.rank,
            "c_set": [str(c) for c in self.c_set.canonical()],
            "hyp": self.hyp_display(),
            "exps_zero": [str(c) for c in self.exps_zero.canonical()],
            "exps_infinity": [str(c) for c in self.exps_infinity.canonical()],
            "chi": self.chi,
            "finite_singularity": str(self.finite_singularity),
            "sequences": [s.as_json() for s in self.sequences],
        }


def _constant_quotient(w: Weights) -> FactorList:
    return FactorList((kummer(Fraction(a, w.e)), w.n) for a in range(1, w.e + 1))


def g_block(w: WeightsLike) -> GBlock:
    """Assemble the G block of the degree-zero cohomology."""
    w = validate_weights(w)
    d, e = w.d, w.e
    cs = c_set(w)
    if w.primitive:
        h: HypModule | PushforwardHyp = invariant_hyp(w)
        kblock = FactorList(kummer(c) for c in cs)
        exps_zero = ExpMultiset(
            Fraction(j, wi) for wi in w for j in range(1, wi + 1)
        ).remove_class(1)
        exps_inf = ExpMultiset(Fraction(k, d) for k in range(1, d))
    else:
        base = g_block(w.reduced())
        h = PushforwardHyp(e=e, base=base.hyp)
        kblock = FactorList(
            kummer((f.param + a) / e)
            for f in base.kummer_block for a in range(e)
        )
        exps_zero = base.exps_zero.pushforward(e)
        exps_inf = base.exps_infinity.pushforward(e)
    quotient = _constant_quotient(w)
    sequences = (
        ExactSeq(left="G", middle="H^0(K)", right=str(quotient)),
        ExactSeq(left=h.display(), middle="G", right=str(kblock)),
    )
    return GBlock(
        rank=d - e,
        c_set=cs,
        hyp=h,
        kummer_block=kblock,
        exps_zero=exps_zero,
        exps_infinity=exps_inf,
        chi=-1,
        finite_singularity=gamma_n(w),
        sequences=sequences,
    )


# ---------------------------------------------------------------------------
# Cohomology tables
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Extension:
    """Degree-zero entry of the K table: G sits under a constant quotient."""

    sub: GBlock
    quotient: FactorList

    def total_rank(self) -> int:
        return self.sub.rank + self.quotient.rank()


def k_table(w: WeightsLike) -> dict[int, FactorList | Extension]:
    """Cohomology table of the K complex: Kummer sums in degrees -(n-1)..-1
    and the extension descriptor in degree 0; empty elsewhere.

    For n = 1 the single degree-zero entry carries the base-case data (total
    rank d, unique finite singularity at gamma).
    """
    w = validate_weights(w)
    n, e = w.n, w.e
    table: dict[int, FactorList | Extension] = {}
    for i in range(-(n - 1), 0):
        mult = math.comb(n, i + n - 1)
        table[i] = FactorList(
            (kummer(Fraction(a, e)), mult) for a in range(1, e + 1)
        )
    table[0] = Extension(sub=g_block(w), quotient=_constant_quotient(w))
    return table


def m_table(w: WeightsLike) -> dict[int, FactorList]:
    """Cohomology table of the M complex, concentrated in degrees -(n-2)..0.

    Uses the first n weights only: d' = d - w_n and e' = gcd(w_0..w_{n-1}).
    """
    w = validate_weights(w)
    n = w.n
    if n < 2:
        raise ValueError("the M table needs at least three weights")
    d1 = w.d - w.w[-1]
    e1 = w.e_chain[-2]
    table: dict[int, FactorList] = {}
    for i in range(-(n - 2), 0):
        mult = math.comb(n - 1, i + n - 2)
        table[i] = FactorList(
            (kummer(Fraction(a, e1)), mult) for a in range(1, e1 + 1)
        )
    deg0 = [(kummer(Fraction(a, e1)), n - 2) for a in range(1, e1 + 1)]
    deg0 += [(kummer(Fraction(a, d1)), 1) for a in range(1, d1 + 1)]
    table[0] = FactorList(deg0)
    return table


def structure_multiplicities(table: dict[int, FactorList]) -> dict[int, int]:
    """Multiplicity of the structure-sheaf factor in each degree."""
    out = {}
    for i, fl in table.items():
        mult = dict(fl.items()).get(structure(), 0)
        if mult:
            out[i] = mult
    return out


# ---------------------------------------------------------------------------
# Fourier operator pair
# ---------------------------------------------------------------------------

def ft_sign(d: int) -> int:
    """The calibrated global Fourier sign: inverse(P) = sign * Q.

    Calibrated once on the two-weight instance and then fixed as part of the
    contract; under the convention t -> d, d -> -t the exact computation
    gives (-1)^(d+1).
    """
    return -1 if d % 2 == 0 else 1


@dataclass(frozen=True)
class FTPair:
    p: WeylOp
    q: WeylOp
    rhs_power: int
    rhs_hyp: HypModule
    sign: int


def ft_pair(w: WeightsLike) -> FTPair:
    """The operator pair of the Fourier-transform step.

    P = gamma * prod_{i,j} (D - d*j/w_i) - t^d and
    Q = d^d - gamma * prod_{i,j} (d*t + d*j/w_i), with d*t the composite
    operator D + 1; the right-hand side descriptor is the pullback along
    z -> z^d of the type-(d, 0) datum with gamma scaled by d^d.
    """
    w = validate_weights(w)
    g, d = gamma_n(w), w.d
    params = [Fraction(d * j, wi) for wi in w for j in range(1, wi + 1)]
    # the composite d*t is D + 1, so prod(d*t + c) = prod(D - (-1 - c))
    p = weyl.euler_product(params) * g - WeylOp.t(d)
    q = WeylOp.d(d) - weyl.euler_product([-1 - c for c in params]) * g
    rhs = make_hyp(g * Fraction(d) ** d, params, ())
    return FTPair(p=p, q=q, rhs_power=d, rhs_hyp=rhs, sign=ft_sign(d))


def ft_identity_holds(pair: FTPair) -> bool:
    """Exact check of fourier(P, inverse) = sign * Q."""
    return weyl.fourier(pair.p, "inverse") == pair.q * pair.sign


# ---------------------------------------------------------------------------
# Consistency checks
# ---------------------------------------------------------------------------

def _indicial_checks(h: HypModule, gamma: Fraction) -> dict[str, bool]:
    # One mobius pass shared between the infinity exponents and the
    # regularity flags; the Fuchs condition says the indicial polynomial
    # keeps full degree.
    op = hyp_operator(h)
    mob = weyl.mobius_infinity(op)
    ind0 = weyl.indicial_polynomial(op, "zero")
    ind_mob = weyl.indicial_polynomial(mob, "zero")
    finite, other = weyl.finite_singular_points(op)
    return {
        "indicial_zero": ind0.has_roots_exactly(h.alpha.reps),
        "indicial_infinity": ind_mob.has_roots_exactly(-b for b in h.beta.reps),
        "singular_support_gamma": finite == (gamma,) and not other,
        "regular": (ind0.degree == op.order()
                    and ind_mob.degree == mob.order()),
    }


def _arrangement_checks(w: Weights) -> dict[str, bool]:
    checks = {}
    if w.n >= 2:
        mt = m_table(w)
        const = structure_multiplicities(mt)
        tn = arrangement.torus_slice_dims(w.n)
        ok = all(tn.get(i, 0) == const.get(i, 0) + const.get(i + 1, 0)
                 for i in range(-(w.n - 1), 0))
        ok = ok and tn.get(0, 0) == const.get(0, 0)
        checks["torus_slice_vs_m_table"] = ok
        if w.primitive:
            milnor = arrangement.milnor_fiber_dims(w.w)
            extended = m_table(Weights(w.w + (1,)))
            dims = {i: fl.rank() for i, fl in extended.items()}
            checks["milnor_vs_m_table"] = milnor == dims
    return checks


def consistency_checks(w: WeightsLike, _parts=None) -> dict[str, bool]:
    """Run every internal consistency check for one weight tuple."""
    w = validate_weights(w)
    if _parts is None:
        kt = k_table(w)
        gb = kt[0].sub
        ft = ft_pair(w)
    else:
        gb, kt, ft = _parts
    d, e, n = w.d, w.e, w.n
    cs = gb.c_set
    checks: dict[str, bool] = {}
    if w.primitive:
        h = gb.hyp
        cs_exps = ExpMultiset(cs.canonical())
        checks["exps_zero_identity"] = gb.exps_zero == h.alpha + cs_exps
        checks["exps_infinity_identity"] = gb.exps_infinity == h.beta + cs_exps
        checks["alpha_count"] = len(h.alpha) == d - 1 - len(cs)
        checks["irreducible"] = is_irreducible(h)
        checks["chi_block"] = euler_char(FactorList([hyp_factor(h)]) + gb.kummer_block) == -1
        checks["cn_sent_to_structure"] = all(
            (d * c).denominator == 1
            and power_pullback(KummerModule(c), -d) == structure()
            for c in cs
        )
        checks.update(_indicial_checks(h, gamma_n(w)))
    else:
        base_gb = g_block(w.reduced())
        checks["pushforward_gamma"] = gamma_n(w) == gamma_n(w.reduced()) ** e
        checks["exps_zero_identity"] = (
            gb.exps_zero == gb.hyp.exponents("zero")
            + ExpMultiset(f.param for f in gb.kummer_block)
        )
        checks["exps_infinity_identity"] = (
            gb.exps_infinity == gb.hyp.exponents("infinity")
            + ExpMultiset(f.param for f in gb.kummer_block)
        )
        checks["pushforward_exponents"] = (
            gb.exps_zero == base_gb.exps_zero.pushforward(e)
            and gb.exps_infinity == base_gb.exps_infinity.pushforward(e)
        )
        checks["chi_block"] = euler_char(
            FactorList([hyp_factor(gb.base_hyp)]) + gb.kummer_block) == -1
    checks["rank"] = gb.rank == d - e and len(gb.exps_zero) == d - e \
        and len(gb.exps_infinity) == d - e
    checks["fourier_pair"] = ft_identity_holds(ft)
    checks["k_table_window"] = set(kt) == set(range(-(n - 1), 1))
    if w.primitive:
        checks["rank_bounds"] = all(
            math.comb(n, i + n - 1) - 1
            <= kt[i].rank()
            <= math.comb(n, i + n - 1) + 1
            for i in range(-(n - 1), 0)
        )
    checks.update(_arrangement_checks(w))
    return checks


# ---------------------------------------------------------------------------
# Full report
# ---------------------------------------------------------------------------

def _exps_json(ms: ExpMultiset) -> list[str]:
    return [str(c) for c in ms.canonical()]


def _invariant_statement(w: Weights, gb: GBlock) -> dict:
    integral = all(c == 1 for c in gb.exps_zero.canonical())
    if not w.primitive:
        return {
            "reduction": (f"gcd {w.e} > 1: wrapped as the pushforward pair "
                          f"[{w.e}]_+ of the primitive report"),
            "integral_exponents_at_zero": integral,
        }
    d = w.d
    pull = power_pullback(gb.hyp, -d)
    return {
        "middle_extension_at": "0",
        "pullback_power": -d,
        "nonconstant_part": (
            f"middle extension at 0 of the pullback along z -> z^{-d} "
            f"of {gb.hyp.display()}"
        ),
        "pullback_alpha": _exps_json(pull.alpha),
        "pullback_beta": _exps_json(pull.beta),
        "cn_sent_to_structure": [str(c) for c in gb.c_set.canonical()],
        "integral_exponents_at_zero": integral,
        "constant_part": "constant summands present but not computed",
    }


def full_report(w: WeightsLike) -> dict:
    """Assemble the complete structural report as a JSON-ready mapping.

    The report is invariant under permutations of the weights (all formulas
    depend on the multiset only); the weights are echoed in sorted order.
    """
    w = validate_weights(w)
    n, d, e = w.n, w.d, w.e
    gamma = gamma_n(w)
    fibers = singular_fibers(w)
    kt = k_table(w)
    gb = kt[0].sub
    ft = ft_pair(w)
    gjson = gb.as_json()

    cohomology: dict[str, object] = {}
    for i in range(-(n - 1), 0):
        fl = kt[i]
        cohomology[str(i)] = {"factors": str(fl), "rank": fl.rank()}
    cohomology["0"] = {
        "g_block": gjson,
        "constant_quotient": str(kt[0].quotient),
    }

    report: dict[str, object] = {
        "weights": sorted(w.w),
        "n": n,
        "d": d,
        "e": e,
        "gamma": str(gamma),
        "singular_fibers": {
            "poly": fibers.poly_str,
            "rational_roots": [str(r) for r in fibers.rational_roots],
        },
        "cohomology": cohomology,
        "g_block": gjson,
        "invariant_statement": _invariant_statement(w, gb),
        "ft": {"P": str(ft.p), "Q": str(ft.q), "sign": ft.sign},
    }
    if not w.primitive:
        report["pushforward"] = {
            "e": e,
            "base_report": full_report(w.reduced()),
        }
    report["checks"] = consistency_checks(w, _parts=(gb, kt, ft))
    return report


def primitive_sweep(n_max: int, w_max: int) -> list[Weights]:
    """All primitive weight tuples with 1 <= n <= n_max and entries <= w_max."""
    out = []
    for n in range(1, n_max + 1):
        stack: list[tuple[int, ...]] = [()]
        for _ in range(n + 1):
            stack = [t + (x,) for t in stack for x in range(1, w_max + 1)]
        for t in stack:
            if math.gcd(*t) == 1:
                out.append(Weights(t))
    return out
