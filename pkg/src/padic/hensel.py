"""Certified root lifting for polynomials over the p-adic integers.

Given ``f`` with p-integral coefficients and a seed ``a`` satisfying the
strong hypothesis ``nu(f(a)) > 2*nu(f'(a))`` (in norm form,
``|f(a)| < |f'(a)|**2``), Newton iteration
``a_{n+1} = a_n - f(a_n)/f'(a_n)`` converges to the unique root near the
seed.  :func:`lift` runs the iteration with exact valuation bookkeeping
and returns a :class:`HenselCertificate` recording the hypothesis
exponents, the full iteration trace, the root residue, and the
uniqueness radius; :func:`verify_certificate` re-checks everything from
scratch without trusting the lifter.

Exponent conventions.  With ``e = nu(f'(a))`` and ``m = nu(f(a))`` the
hypothesis reads ``m > 2e`` and the gap ``t = m - 2e >= 1`` controls
convergence: along the iteration ``nu(f(a_n)) >= 2e + t*2**n`` (the
residual norm is squared each step) while ``nu(f'(a_n)) = e`` stays put.
The root satisfies ``nu(root - a) = m - e`` and is the only root z with
``nu(z - a) > e``.

Iterates are computed modulo ``p**(k + e)`` and reported modulo ``p**k``:
the division by ``f'`` costs exactly ``e`` digits of absolute precision,
and one slack of ``e`` suffices because the derivative valuation never
drifts.  Valuations recorded in the trace are exact values of ``f`` at
the integer representatives; any bound involving them is capped at the
working precision ``k + e``, beyond which a residue cannot witness a
valuation.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DerivativeVanishes,
    HypothesisFailed,
    InternalBoundViolation,
    NotAnInteger,
    PrecisionExhausted,
)
from .number import rational_residue
from .polynomial import PadicPoly
from .valuation import padic_val_int, padic_val_rat

MAX_STEPS = 64


@dataclass(frozen=True)
class Hypothesis:
    """Exponent form of the lifting hypothesis at the seed.

    ``e = nu(f'(a))``; ``m = nu(f(a))`` with ``None`` encoding +infinity
    (the seed is an exact root); ``t = m - 2e >= 1`` when finite.
    """

    e: int
    m: int | None
    t: int | None

    @property
    def degenerate(self) -> bool:
        return self.m is None


@dataclass(frozen=True)
class LiftStep:
    """One iteration state: residue of a_n mod p**k and exact valuations."""

    n: int
    residue: int
    val_f: int | None  # None encodes +infinity (exact zero)
    val_fp: int


@dataclass(frozen=True)
class HenselCertificate:
    p: int
    f: PadicPoly
    a: Fraction
    k: int
    hypothesis: Hypothesis
    trace: tuple[LiftStep, ...]
    root: int
    dist_exponent: int | None  # nu(root - a) mod p**k; None when they agree
    uniqueness_radius_exponent: int
    degenerate: bool
    checks_passed: bool


@dataclass(frozen=True)
class VerificationResult:
    ok: bool
    failures: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.ok


def check_hypothesis(f: PadicPoly, a) -> Hypothesis:
    """Exact hypothesis check at a rational seed.

    Raises :class:`DerivativeVanishes` when f'(a) = 0 (the hypothesis
    |f(a)| < |f'(a)|**2 is then unsatisfiable) and
    :class:`HypothesisFailed` when nu(f(a)) <= 2*nu(f'(a)).
    """
    p = f.p
    a = Fraction(a)
    if f.degree < 1:
        raise ValueError("polynomial must be nonconstant")
    if padic_val_rat(p, a) < 0:
        raise NotAnInteger(f"seed {a} is not a {p}-adic integer")
    fpa = f.derivative().eval_exact(a)
    if fpa == 0:
        raise DerivativeVanishes(f"f'({a}) = 0, no lifting neighborhood")
    e = padic_val_rat(p, fpa)
    fa = f.eval_exact(a)
    if fa == 0:
        return Hypothesis(e=e, m=None, t=None)
    m = padic_val_rat(p, fa)
    if m <= 2 * e:
        raise HypothesisFailed(m, e)
    return Hypothesis(e=e, m=m, t=m - 2 * e)


def _correction(p: int, e: int, fa: Fraction, fpa: Fraction, modulus: int) -> int:
    # f(a_n)/f'(a_n) via exact cancellation of p**e plus a modular inverse
    # of the remaining unit; both inputs are p-integral with nu(fa) > e.
    scale = Fraction(p**e)
    g = rational_residue(fa / scale, modulus)
    h = rational_residue(fpa / scale, modulus)
    return g * pow(h, -1, modulus) % modulus


def newton_step(f: PadicPoly, a_n: int, hyp: Hypothesis, k: int) -> int:
    """One Newton update a_n - f(a_n)/f'(a_n), reduced modulo p**k.

    Requires nu(f(a_n)) >= e + 1 so the quotient is an integer.  When
    a_n is already a root modulo p**k the step is the identity.
    """
    p = f.p
    e = hyp.e
    if k - e <= 0:
        raise PrecisionExhausted(
            f"target exponent {k} leaves no room below nu(f'(a)) = {e}"
        )
    modulus = p**k
    a_n = a_n % modulus
    fa = f.eval_exact(a_n)
    if fa == 0 or rational_residue(fa, modulus) == 0:
        return a_n
    if padic_val_rat(p, fa) < e + 1:
        raise ValueError(
            f"newton step needs nu(f(a_n)) > {e}, got {padic_val_rat(p, fa)}"
        )
    fpa = f.derivative().eval_exact(a_n)
    if fpa == 0 or padic_val_rat(p, fpa) != e:
        raise ValueError("derivative valuation at a_n does not match e")
    return (a_n - _correction(p, e, fa, fpa, modulus)) % modulus


def lift(f: PadicPoly, a, k: int) -> HenselCertificate:
    """Lift the seed to a certified root of f modulo p**k.

    Iterates Newton steps until the correction has valuation at least
    ``k`` (so the reported residue equals the true root's residue, not
    merely an approximate zero), recording each state in the trace.
    When f(a) = 0 exactly the seed itself is returned with an empty
    trace.  The returned certificate has been re-checked by
    :func:`verify_certificate`.
    """
    p = f.p
    if not isinstance(k, int) or k < 1:
        raise ValueError("k must be a positive integer")
    a = Fraction(a)
    hyp = check_hypothesis(f, a)
    mod_k = p**k
    seed_res = rational_residue(a, mod_k)

    if hyp.degenerate:
        cert = HenselCertificate(
            p, f, a, k, hyp, (), seed_res, None, hyp.e, True, False
        )
        return dataclasses.replace(
            cert, checks_passed=bool(verify_certificate(cert))
        )

    e, t = hyp.e, hyp.t
    if k - e <= 0:
        raise PrecisionExhausted(
            f"target exponent {k} leaves no room below nu(f'(a)) = {e}"
        )
    kw = k + e
    mod_w = p**kw
    fprime = f.derivative()
    cur = rational_residue(a, mod_w)
    trace: list[LiftStep] = []
    root = None
    for n in range(MAX_STEPS + 1):
        fa = f.eval_exact(cur)
        val_f = None if fa == 0 else padic_val_rat(p, fa)
        fpa = fprime.eval_exact(cur)
        if fpa == 0 or padic_val_rat(p, fpa) != e:
            raise InternalBoundViolation(
                f"derivative valuation drifted from {e} at step {n}"
            )
        if val_f is not None and val_f < min(2 * e + t * 2**n, kw):
            raise InternalBoundViolation(
                f"induction bound broken at step {n}: nu(f(a_n)) = {val_f}"
            )
        trace.append(LiftStep(n, cur % mod_k, val_f, e))
        if val_f is None or val_f >= kw:
            root = cur % mod_k
            break
        cur = (cur - _correction(p, e, fa, fpa, mod_w)) % mod_w
    if root is None:
        raise InternalBoundViolation(f"no convergence within {MAX_STEPS} steps")

    diff = (root - seed_res) % mod_k
    dist = None if diff == 0 else padic_val_int(p, diff)
    cert = HenselCertificate(
        p, f, a, k, hyp, tuple(trace), root, dist, e, False, False
    )
    return dataclasses.replace(cert, checks_passed=bool(verify_certificate(cert)))


def verify_certificate(cert: HenselCertificate) -> VerificationResult:
    """Re-check every certificate invariant from scratch.

    Re-evaluates f at the root and at every trace residue, recomputes the
    hypothesis exponents, and checks the induction bound, the quadratic
    growth of residual valuations, the pairwise distance law between
    iterates, and the step-count bound.  Returns a falsy result carrying
    the labels of all failed checks; never raises.
    """
    fails: list[str] = []
    p, k, f = cert.p, cert.k, cert.f
    hyp = cert.hypothesis
    e = hyp.e
    mod_k = p**k
    fprime = f.derivative()

    fa = f.eval_exact(cert.a)
    fpa = fprime.eval_exact(cert.a)
    if fpa == 0 or padic_val_rat(p, fpa) != e:
        fails.append("hypothesis_e")
    m_true = None if fa == 0 else padic_val_rat(p, fa)
    if hyp.m != m_true:
        fails.append("hypothesis_m")
    if cert.degenerate != (m_true is None):
        fails.append("degenerate_flag")
    if not hyp.degenerate and (
        hyp.m is None or hyp.t != hyp.m - 2 * e or hyp.t < 1
    ):
        fails.append("hypothesis_strength")
    if cert.uniqueness_radius_exponent != e:
        fails.append("uniqueness_radius")

    seed_res = rational_residue(cert.a, mod_k)
    if rational_residue(f.eval_exact(cert.root), mod_k) != 0:
        fails.append("root_residue")
    if (cert.root - seed_res) % p ** min(e + 1, k) != 0:
        fails.append("root_near_seed")

    fp_root = fprime.eval_exact(cert.root)
    v_fp_root = None if fp_root == 0 else padic_val_rat(p, fp_root)
    if e < k:
        if v_fp_root != e:
            fails.append("derivative_stability")
    elif v_fp_root is not None and v_fp_root < k:
        fails.append("derivative_stability")

    diff = (cert.root - seed_res) % mod_k
    measured = None if diff == 0 else padic_val_int(p, diff)
    if cert.dist_exponent != measured:
        fails.append("distance_measured")

    if cert.degenerate:
        if cert.trace:
            fails.append("trace_empty")
        if measured is not None:
            fails.append("degenerate_root")
        return VerificationResult(not fails, tuple(fails))

    m, t = hyp.m, hyp.t
    expected_dist = m - e if m - e < k else None
    if measured != expected_dist:
        fails.append("distance_law")
    if not cert.trace:
        fails.append("trace_missing")
        return VerificationResult(False, tuple(fails))

    if [s.n for s in cert.trace] != list(range(len(cert.trace))):
        fails.append("trace_indices")
    if cert.trace[0].residue != seed_res:
        fails.append("trace_seed")
    if cert.trace[-1].residue != cert.root:
        fails.append("trace_root")

    cap = k + e
    for step in cert.trace:
        if step.val_fp != e:
            fails.append(f"trace_derivative_{step.n}")
        if step.val_f is not None and step.val_f < min(2 * e + t * 2**step.n, cap):
            fails.append(f"trace_ih_{step.n}")
        # valuations below k are fully visible in the reported residue
        fa_n = f.eval_exact(step.residue)
        v_n = None if fa_n == 0 else padic_val_rat(p, fa_n)
        if step.val_f is not None and step.val_f < k:
            if v_n != step.val_f:
                fails.append(f"trace_reval_{step.n}")
        elif v_n is not None and v_n < k:
            fails.append(f"trace_reval_{step.n}")

    for s1, s2 in zip(cert.trace, cert.trace[1:]):
        if s1.val_f is None:
            fails.append(f"trace_after_zero_{s2.n}")
            continue
        if s2.val_f is not None and s2.val_f < min(2 * s1.val_f - 2 * e, cap):
            fails.append(f"trace_quadratic_{s2.n}")

    for i, si in enumerate(cert.trace):
        bound = min(e + t * 2**si.n, k)
        for sj in cert.trace[i + 1:]:
            d = (sj.residue - si.residue) % mod_k
            if d != 0 and padic_val_int(p, d) < bound:
                fails.append(f"trace_distance_{si.n}_{sj.n}")

    # quadratic convergence: steps needed is log-sized in (k - e)/t
    steps_taken = len(cert.trace) - 1
    doublings = 0
    while t << doublings < k - e:
        doublings += 1
    if steps_taken > doublings + 1:
        fails.append("trace_length")

    return VerificationResult(not fails, tuple(fails))


def unique_in_neighborhood(f: PadicPoly, cert: HenselCertificate, z2: int) -> bool:
    """Whether a root residue inside the uniqueness ball matches the root.

    ``z2`` must satisfy f(z2) = 0 (mod p**k).  Returns True when
    nu(z2 - a) > e implies z2 = root (mod p**k), and True vacuously for
    residues outside the ball.  Intended as a test predicate against
    exhaustive root lists; for e > 0 a root modulo p**k need not come
    from a true root, so apply it where e = 0 or to certified residues.
    """
    p, k = cert.p, cert.k
    mod_k = p**k
    z2 = z2 % mod_k
    if rational_residue(f.eval_exact(z2), mod_k) != 0:
        raise ValueError(f"{z2} is not a root of f modulo {p}^{k}")
    seed_res = rational_residue(cert.a, mod_k)
    d = (z2 - seed_res) % mod_k
    inside = d == 0 or padic_val_int(p, d) > cert.uniqueness_radius_exponent
    if inside:
        return z2 == cert.root
    return True


def certificate_to_record(cert: HenselCertificate) -> dict:
    """JSON-ready record with stable field order."""
    return {
        "p": cert.p,
        "f": [str(c) for c in cert.f.coeffs],
        "a": str(cert.a),
        "K": cert.k,
        "e": cert.hypothesis.e,
        "m": cert.hypothesis.m,
        "t": cert.hypothesis.t,
        "trace": [[s.n, s.residue, s.val_f] for s in cert.trace],
        "root": cert.root,
        "checks_passed": cert.checks_passed,
    }


def certificate_from_record(record: dict) -> HenselCertificate:
    """Inverse of :func:`certificate_to_record`."""
    p = int(record["p"])
    k = int(record["K"])
    f = PadicPoly(p, tuple(Fraction(c) for c in record["f"]))
    a = Fraction(record["a"])
    e = int(record["e"])
    m = record["m"]
    t = record["t"]
    hyp = Hypothesis(e, None if m is None else int(m), None if t is None else int(t))
    trace = tuple(
        LiftStep(int(n), int(res), None if val is None else int(val), e)
        for n, res, val in record["trace"]
    )
    root = int(record["root"]) % p**k
    diff = (root - rational_residue(a, p**k)) % p**k
    dist = None if diff == 0 else padic_val_int(p, diff)
    return HenselCertificate(
        p, f, a, k, hyp, trace, root, dist, e, m is None, bool(record["checks_passed"])
    )
