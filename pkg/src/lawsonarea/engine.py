"""Order-by-order expansion of the potential coefficients and the area.

At the minimal angle (phi = pi/4, where the Sym rotation angle is constant)
the four parameter functions a, b, c (Laurent coefficients of the residue
matrix) and the scalar r admit a recursion in the expansion order n:

1. Assemble the lower-order part of the frame derivative P^(n+1) at z = 1
   from word integrals and Leibniz products of known derivatives.
2. The reality condition p = star(p) on the trace coordinate
   p = P11 P21 - P12 P22 determines the positive-degree part of c^(n); the
   Sym-point condition p(i) = 0 pins its constant term.
3. b^(n) = (-1)^n c^(n) by the angle-reflection symmetry.
4. The normalization det(r A) = -1 gives lambda * K_lower = (lambda^2 - 1)
   a^(n) + 2 lambda r^(n): dividing by lambda^2 - 1 yields a^(n) as the
   quotient and r^(n) from the remainder.

Every order asserts the structural invariants (polynomial degree <= n + 1,
lambda-parity, reality, divisibility) and records their residuals; a
violation above tolerance raises :class:`EngineError` instead of silently
absorbing precision loss.

The area of the closed surface is 8 pi (1 - r (cos(phi) b0 - sin(phi) c0));
Taylor coefficients alpha_k (Area = 8 pi (1 - sum alpha_k t^k)) follow from
the stored derivatives by one more Leibniz pass.  First-order data at
general phi is available in closed form, no recursion needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import mpmath

from .laurent import LaurentPoly, LaurentMatrix2
from .omega import OmegaTable, cached_table, parse_phi
from .precision import PrecisionConfig

# Constant 2x2 matrices attached to the three forms (exact Gaussian integers).
M_MATS = (
    ((1j, 0), (0, -1j)),
    ((0, 1), (1, 0)),
    ((0, 1j), (-1j, 0)),
)

_IDENTITY2 = ((1, 0), (0, 1))


class EngineError(ArithmeticError):
    """A structural invariant of the recursion failed beyond tolerance."""


def _mat_mul(m1, m2):
    return tuple(
        tuple(sum(m1[i][k] * m2[k][j] for k in range(2)) for j in range(2))
        for i in range(2))


@dataclass
class DerivativeState:
    """Derivatives of (a, b, c, r) and the frame, complete through ``order``."""

    cfg: PrecisionConfig
    phi_label: str
    order: int
    a: list
    b: list
    c: list
    r: list
    frames: list          # frames[m] = P^(m) at z = 1, m = 0..order+1
    diagnostics: list = field(default_factory=list)

    @property
    def theta(self):
        return self.cfg.context.pi / 2

    def x(self, i: int, k: int) -> LaurentPoly:
        return (self.a, self.b, self.c)[i - 1][k]

    def y(self, i: int, k: int) -> LaurentPoly:
        """k-th derivative of r * x_i (Leibniz over the stored lists)."""
        total = LaurentPoly.zero(self.cfg)
        for ell in range(k + 1):
            rv = self.r[k - ell]
            if rv == 0:
                continue
            total = total + self.x(i, ell).scale(math.comb(k, ell) * rv)
        return total

    def derivatives_jsonable(self) -> list:
        digits = self.cfg.target_digits
        out = []
        for k in range(1, self.order + 1):
            out.append({
                "order": k,
                "a": self.a[k].to_jsonable(),
                "b": self.b[k].to_jsonable(),
                "c": self.c[k].to_jsonable(),
                "r": mpmath.nstr(self.r[k], digits),
            })
        return out


def central_state(cfg: PrecisionConfig, phi: str = "pi/4") -> DerivativeState:
    ctx = cfg.context
    phiv = parse_phi(phi, cfg)
    half = ctx.mpf(1) / 2
    a0 = LaurentPoly(cfg, {-1: half, 1: -half})
    b0 = LaurentPoly(cfg, {-1: -half * ctx.sin(phiv), 1: -half * ctx.sin(phiv)})
    c0 = LaurentPoly(cfg, {-1: -half * ctx.cos(phiv), 1: -half * ctx.cos(phiv)})
    return DerivativeState(
        cfg=cfg, phi_label=str(phi).strip(), order=0,
        a=[a0], b=[b0], c=[c0], r=[ctx.mpf(1)],
        frames=[LaurentMatrix2.identity(cfg)])


# ---------------------------------------------------------------------------
# frame derivatives from word integrals
# ---------------------------------------------------------------------------

def frame_lower(n: int, state: DerivativeState, table: OmegaTable) -> LaurentMatrix2:
    """Part of P^(n+1) determined by derivatives of order below n.

    Sum over words of length 2..n+1 of (n+1)!/(n+1-l)! times the
    (n+1-l)-th derivative of the product y_{i_1} ... y_{i_l}, the constant
    matrix product, and the word integral at 1; plus the single-letter
    cross terms with 1 <= l <= n-1 in the Leibniz expansion of y_i^(n).
    """
    cfg = state.cfg
    if table.max_length < n + 1:
        raise ValueError(f"table depth {table.max_length} < required {n + 1}")
    acc = LaurentMatrix2(cfg)
    if n == 0:
        return acc

    # single-letter cross terms (orders 1..n-1 of x against r)
    for i in (1, 2, 3):
        cross = LaurentPoly.zero(cfg)
        for ell in range(1, n):
            rv = state.r[n - ell]
            if rv == 0:
                continue
            cross = cross + state.x(i, ell).scale(math.comb(n, ell) * rv)
        if not cross.is_zero:
            omega_i = table.value((i,))
            acc = acc.add_scaled_constant(cross, (n + 1) * omega_i, M_MATS[i - 1])

    # words of length >= 2
    y_single = {(i, k): state.y(i, k) for i in (1, 2, 3) for k in range(n)}

    def descend(word, mmat, derivs):
        depth = len(word)
        if depth >= 2:
            factor = math.perm(n + 1, depth)
            poly = derivs[n + 1 - depth]
            if not poly.is_zero:
                nonlocal acc
                acc = acc.add_scaled_constant(poly, factor * table.value(word), mmat)
        if depth >= n + 1:
            return
        # a child at depth d contributes derivative order n+1-d (d >= 2 only)
        # and feeds its own children orders up to n-d; depth-1 nodes only feed.
        max_child = n - max(depth, 1)
        if max_child < 0:
            return
        for letter in (1, 2, 3):
            child_m = _mat_mul(mmat, M_MATS[letter - 1])
            child = []
            for s in range(max_child + 1):
                total = LaurentPoly.zero(cfg)
                for j in range(s + 1):
                    left = derivs[j]
                    right = y_single[(letter, s - j)]
                    if left.is_zero or right.is_zero:
                        continue
                    total = total + (left * right).scale(math.comb(s, j))
                child.append(total)
            descend(word + (letter,), child_m, child)

    root = [LaurentPoly.one(cfg)] + [LaurentPoly.zero(cfg)] * n
    descend((), _IDENTITY2, root)
    return acc


def frame_derivative(n: int, state: DerivativeState, table: OmegaTable,
                     lower: LaurentMatrix2 | None = None) -> LaurentMatrix2:
    """Full P^(n+1) once the order-n derivatives are in the state."""
    if state.order < n:
        raise ValueError(f"state complete to {state.order} < requested order {n}")
    cfg = state.cfg
    if lower is None:
        lower = frame_lower(n, state, table)
    acc = lower
    for i in (1, 2, 3):
        if n == 0:
            head = state.y(i, 0)
        else:
            head = state.x(i, n) + state.x(i, 0).scale(state.r[n])
        if not head.is_zero:
            acc = acc.add_scaled_constant(head, (n + 1) * table.value((i,)),
                                          M_MATS[i - 1])
    mat = acc
    if mat.max_abs_degree() > n + 1:
        raise EngineError(f"frame derivative order {n + 1} has degree "
                          f"{mat.max_abs_degree()} > {n + 1}")
    return mat


def p_derivative(n: int, state: DerivativeState,
                 frame_low: LaurentMatrix2) -> LaurentPoly:
    """Lower-order part of the (n+1)-st derivative of p = P11 P21 - P12 P22."""
    cfg = state.cfg
    p_low = frame_low[1, 0] - frame_low[0, 1]
    for k in range(1, n + 1):
        pk = state.frames[k]
        pm = state.frames[n + 1 - k]
        coeff = math.comb(n + 1, k)
        p_low = p_low + (pk[0, 0] * pm[1, 0] - pk[0, 1] * pm[1, 1]).scale(coeff)
    if not p_low.is_zero and max(abs(p_low.min_degree()), p_low.max_degree()) > n + 1:
        raise EngineError(f"p_lower^({n + 1}) exceeds degree bound {n + 1}")
    return p_low


# ---------------------------------------------------------------------------
# extraction of the order-n parameters
# ---------------------------------------------------------------------------

def _drop_noise(poly: LaurentPoly, scale, cfg: PrecisionConfig) -> None:
    """Remove coefficients below the residual tolerance of their defining
    constraint; anything that small is indistinguishable from zero."""
    cut = scale * cfg.eps(6)
    for d in [d for d, v in poly.coeffs.items() if abs(v) < cut]:
        del poly.coeffs[d]


def _parity_check(poly: LaurentPoly, n: int, label: str, cfg: PrecisionConfig) -> dict:
    """Degrees d with d + n even must vanish; drop the dust, report the peak."""
    tol = max(poly.max_abs(), cfg.context.mpf(1)) * cfg.eps(6)
    bad = cfg.context.mpf(0)
    for d, v in list(poly.coeffs.items()):
        if (d + n) % 2 == 0:
            if abs(v) > tol:
                raise EngineError(
                    f"{label}: parity-forbidden coefficient at degree {d} "
                    f"has size {mpmath.nstr(abs(v), 5)}")
            bad = max(bad, abs(v))
            del poly.coeffs[d]
    return {"parity_residual": bad}


def extract_c(n: int, p_low: LaurentPoly, cfg: PrecisionConfig) -> tuple:
    """Order-n c from reality and Sym-point constraints on p^(n+1)."""
    ctx = cfg.context
    factor = 1 / (2 * ctx.pi * (n + 1))
    c_plus = (p_low.project("minus").star() - p_low.project("plus")).scale(factor)
    lam_i = ctx.mpc(0, 1)
    c0 = -c_plus.eval(lam_i) - p_low.eval(lam_i) * factor
    c_n = c_plus + LaurentPoly(cfg, {0: c0})
    diag = {"imag_residual": c_n.imag_residual()}
    if diag["imag_residual"] > max(c_n.max_abs(), ctx.mpf(1)) * cfg.eps(6):
        raise EngineError(f"c^({n}) has imaginary leakage "
                          f"{mpmath.nstr(diag['imag_residual'], 5)}")
    c_n = c_n.realified()
    _drop_noise(c_n, max(p_low.max_abs() * abs(factor), ctx.mpf(1)), cfg)
    diag.update(_parity_check(c_n, n, f"c^({n})", cfg))
    if not c_n.is_zero and (c_n.min_degree() < 0 or c_n.max_degree() > n + 1):
        raise EngineError(f"c^({n}) outside polynomial degree bound {n + 1}")
    return c_n, diag


def extract_a_r(n: int, state: DerivativeState, c_n: LaurentPoly,
                b_n: LaurentPoly) -> tuple:
    """Order-n a and r from dividing the curvature constraint by lambda^2 - 1."""
    cfg = state.cfg
    ctx = cfg.context
    k_low = (state.x(2, 0) * b_n).scale(-2) + (state.x(3, 0) * c_n).scale(-2)
    for k in range(1, n):
        coeff = math.comb(n, k)
        rv = state.r[k]
        if rv != 0:
            combo = (state.x(1, 0) * state.x(1, n - k)
                     - state.x(2, 0) * state.x(2, n - k)
                     - state.x(3, 0) * state.x(3, n - k))
            k_low = k_low + combo.scale(2 * coeff * rv)
        combo = (state.y(1, k) * state.y(1, n - k)
                 - state.y(2, k) * state.y(2, n - k)
                 - state.y(3, k) * state.y(3, n - k))
        k_low = k_low + combo.scale(coeff)
    shifted = k_low.shift(1)
    if not shifted.is_zero and shifted.min_degree() < 0:
        raise EngineError(
            f"lambda * K_lower^({n}) kept negative degrees {shifted.min_degree()}")
    quot, rem = shifted.divrem_l2m1()
    scale = max(shifted.max_abs(), ctx.mpf(1))
    div_residual = abs(rem.coefficient(0))
    if div_residual > scale * cfg.eps(8):
        raise EngineError(
            f"(lambda^2 - 1) division at order {n} left a constant remainder "
            f"{mpmath.nstr(div_residual, 5)}")
    r_val = rem.coefficient(1) / 2
    r_imag = abs(ctx.im(r_val))
    if r_imag > scale * cfg.eps(6):
        raise EngineError(f"r^({n}) has imaginary leakage {mpmath.nstr(r_imag, 5)}")
    r_n = ctx.re(r_val)
    if abs(r_n) < scale * cfg.eps(6):
        r_n = ctx.mpf(0)
    diag = {"div_residual": div_residual, "r_imag_residual": r_imag,
            "k_lower": k_low}
    if n % 2 == 1:
        diag["r_odd_residual"] = abs(r_n)
        if abs(r_n) > scale * cfg.eps(6):
            raise EngineError(f"r^({n}) should vanish at odd order, got "
                              f"{mpmath.nstr(r_n, 5)}")
        r_n = ctx.mpf(0)
    a_n = quot
    imag = a_n.imag_residual()
    if imag > max(a_n.max_abs(), ctx.mpf(1)) * cfg.eps(6):
        raise EngineError(f"a^({n}) has imaginary leakage {mpmath.nstr(imag, 5)}")
    a_n = a_n.realified()
    _drop_noise(a_n, scale, cfg)
    diag.update(_parity_check(a_n, n, f"a^({n})", cfg))
    if not a_n.is_zero and (a_n.min_degree() < 0 or a_n.max_degree() > n + 1):
        raise EngineError(f"a^({n}) outside polynomial degree bound {n + 1}")
    return a_n, r_n, diag


def advance(state: DerivativeState, table: OmegaTable) -> DerivativeState:
    """Extend the state by one order (phi = pi/4 only)."""
    cfg = state.cfg
    ctx = cfg.context
    n = state.order + 1
    if abs(parse_phi(state.phi_label, cfg) - ctx.pi / 4) > cfg.eps(2):
        raise ValueError("the order recursion requires phi = pi/4; general phi "
                         "is limited to the first-order closed forms")
    f_low = frame_lower(n, state, table)
    p_low = p_derivative(n, state, f_low)
    c_n, diag_c = extract_c(n, p_low, cfg)
    b_n = c_n.scale((-1) ** n)
    state.c.append(c_n)
    state.b.append(b_n)
    a_n, r_n, diag_ar = extract_a_r(n, state, c_n, b_n)
    state.a.append(a_n)
    state.r.append(r_n)
    state.order = n

    # residual diagnostics on the assembled constraints
    p_full = (c_n + state.x(3, 0).scale(r_n)).scale(2 * ctx.pi * (n + 1)) + p_low
    star_res = (p_full - p_full.star()).max_abs()
    sym_res = abs(p_full.eval(ctx.mpc(0, 1)))
    k_assembled = (LaurentPoly(cfg, {0: -2 * r_n})
                   + LaurentPoly(cfg, {-1: 1, 1: -1}) * a_n
                   + diag_ar.pop("k_lower"))
    k_res = k_assembled.max_abs()
    scale = max(p_full.max_abs(), ctx.mpf(1))
    if star_res > scale * cfg.eps(6):
        raise EngineError(f"star-reality residual {mpmath.nstr(star_res, 5)} at order {n}")
    if sym_res > scale * cfg.eps(6):
        raise EngineError(f"Sym-point residual {mpmath.nstr(sym_res, 5)} at order {n}")
    if k_res > scale * cfg.eps(6):
        raise EngineError(f"normalization residual {mpmath.nstr(k_res, 5)} at order {n}")
    diag = {"order": n, "star_residual": star_res, "sym_residual": sym_res,
            "normalization_residual": k_res}
    diag.update(diag_c)
    diag.update(diag_ar)
    state.diagnostics.append(diag)

    state.frames.append(frame_derivative(n, state, table, lower=f_low))
    return state


def run(order: int, cfg: PrecisionConfig | None = None, phi: str = "pi/4",
        table: OmegaTable | None = None, cache_dir=None) -> DerivativeState:
    """Run the recursion at phi = pi/4 up to the requested order."""
    cfg = cfg or PrecisionConfig()
    if order < 1:
        raise ValueError("order must be >= 1")
    if table is None:
        table = cached_table("1", phi, order + 1, cfg, cache_dir)
    state = central_state(cfg, phi)
    state.frames.append(frame_derivative(0, state, table))
    while state.order < order:
        advance(state, table)
    return state


# ---------------------------------------------------------------------------
# area / Willmore / mean curvature series
# ---------------------------------------------------------------------------

@dataclass
class ExpansionResult:
    """Taylor data of the area and Willmore energy at t = 0."""

    cfg: PrecisionConfig
    phi_label: str
    order: int
    alphas: list                 # alpha_k, k = 1..order (real)
    willmore: list               # Willmore coefficients (equal at pi/4)
    mean_curvature: list         # H-series coefficients (zero at pi/4)
    imag_residual: object
    even_alpha_residual: object
    diagnostics: list

    def alpha(self, k: int):
        return self.alphas[k - 1]

    def per_genus_coefficients(self) -> list:
        """Coefficients in powers of 1/(g+1) = 2t."""
        ctx = self.cfg.context
        return [a / ctx.mpf(2) ** (k + 1) for k, a in enumerate(self.alphas)]

    def to_jsonable(self) -> dict:
        ctx = self.cfg.context
        digits = self.cfg.target_digits
        return {
            "version": 1,
            "phi": self.phi_label,
            "precision": self.cfg.target_digits,
            "guard_digits": self.cfg.guard_digits,
            "order": self.order,
            "area_prefactor": "8*pi",
            "alpha_t": [mpmath.nstr(a, digits) for a in self.alphas],
            "alpha_per_genus": [mpmath.nstr(a, digits)
                                for a in self.per_genus_coefficients()],
            "willmore_t": [mpmath.nstr(a, digits) for a in self.willmore],
            "mean_curvature_t": [mpmath.nstr(a, digits) for a in self.mean_curvature],
            "imag_residual": mpmath.nstr(self.imag_residual, 3),
            "even_alpha_residual": mpmath.nstr(self.even_alpha_residual, 3),
            "order_diagnostics": [
                {k: (v if isinstance(v, (int, str)) else mpmath.nstr(v, 3))
                 for k, v in d.items()} for d in self.diagnostics],
        }


def area_series(state: DerivativeState, order: int | None = None) -> ExpansionResult:
    """alpha_1..alpha_N with Area = 8 pi (1 - sum alpha_k t^k)."""
    cfg = state.cfg
    ctx = cfg.context
    order = order or state.order
    if order > state.order:
        raise ValueError(f"state complete to order {state.order} < {order}")
    phiv = parse_phi(state.phi_label, cfg)
    cosp, sinp = ctx.cos(phiv), ctx.sin(phiv)
    alphas = []
    imag_peak = ctx.mpf(0)
    even_peak = ctx.mpf(0)
    for k in range(1, order + 1):
        total = ctx.mpc(0)
        for j in range(k + 1):
            rv = state.r[j]
            if rv == 0:
                continue
            mixed = cosp * state.b[k - j].coefficient(0) \
                - sinp * state.c[k - j].coefficient(0)
            total += math.comb(k, j) * rv * mixed
        total = total / math.factorial(k)
        imag_peak = max(imag_peak, abs(ctx.im(total)))
        value = ctx.re(total)
        if k % 2 == 0:
            even_peak = max(even_peak, abs(value))
        alphas.append(value)
    if imag_peak > cfg.eps(6):
        raise EngineError(f"area coefficients leak imaginary parts {imag_peak}")
    # the family is minimal at pi/4: H = 0 identically, Willmore = area
    return ExpansionResult(
        cfg=cfg, phi_label=state.phi_label, order=order, alphas=alphas,
        willmore=list(alphas), mean_curvature=[ctx.mpf(0)] * order,
        imag_residual=imag_peak, even_alpha_residual=even_peak,
        diagnostics=list(state.diagnostics))


def expand(order: int, cfg: PrecisionConfig | None = None, phi: str = "pi/4",
           table: OmegaTable | None = None, cache_dir=None) -> ExpansionResult:
    """Convenience: run the recursion and extract the area series."""
    state = run(order, cfg, phi, table, cache_dir)
    return area_series(state)


# ---------------------------------------------------------------------------
# first order at general phi (closed forms)
# ---------------------------------------------------------------------------

@dataclass
class FirstOrderData:
    """Closed-form first derivatives of all parameters at t = 0."""

    phi_label: str
    a0: object
    a2: object
    b0: object
    b2: object
    c0: object
    c2: object
    r1: object
    theta1: object
    mean_curvature_slope: object
    willmore_slope: object
    area_slope: object

    def a_poly(self, cfg: PrecisionConfig) -> LaurentPoly:
        return LaurentPoly(cfg, {0: self.a0, 2: self.a2})

    def b_poly(self, cfg: PrecisionConfig) -> LaurentPoly:
        return LaurentPoly(cfg, {0: self.b0, 2: self.b2})

    def c_poly(self, cfg: PrecisionConfig) -> LaurentPoly:
        return LaurentPoly(cfg, {0: self.c0, 2: self.c2})


def first_order_general_phi(phi: str, cfg: PrecisionConfig | None = None) -> FirstOrderData:
    cfg = cfg or PrecisionConfig()
    ctx = cfg.context
    phiv = parse_phi(phi, cfg)
    sinp, cosp = ctx.sin(phiv), ctx.cos(phiv)
    sin2, cos2 = ctx.sin(2 * phiv), ctx.cos(2 * phiv)
    logtan = ctx.ln(ctx.tan(phiv))
    a0 = a2 = sin2 * logtan
    b2 = -2 * cosp * ctx.ln(cosp)
    c2 = 2 * sinp * ctx.ln(sinp)
    b0 = b2 * cos2 - c2 * sin2
    c0 = -b2 * sin2 - c2 * cos2
    theta1 = 2 * sin2 * logtan
    # H = cot(theta); theta(0) = pi/2, so H'(0) = -theta'(0)
    h_slope = -theta1
    w_slope = 8 * ctx.pi * (2 * cosp ** 2 * ctx.ln(cosp) + 2 * sinp ** 2 * ctx.ln(sinp))
    area_slope = -8 * ctx.pi * (cosp * b0 - sinp * c0)
    return FirstOrderData(
        phi_label=str(phi).strip(), a0=a0, a2=a2, b0=b0, b2=b2, c0=c0, c2=c2,
        r1=ctx.mpf(0), theta1=theta1, mean_curvature_slope=h_slope,
        willmore_slope=w_slope, area_slope=area_slope)


def q_first_order_check(phi: str, cfg: PrecisionConfig | None = None,
                        table: OmegaTable | None = None, cache_dir=None):
    """Residual of q'(0) = 2 pi r b against the endpoint-i word integrals.

    The left side is assembled from the numeric table at z = i, the right
    side from the central values; only the weight-1 integral at i enters.
    """
    cfg = cfg or PrecisionConfig()
    ctx = cfg.context
    if table is None:
        table = cached_table("i", phi, 1, cfg, cache_dir)
    state = central_state(cfg, phi)
    q1 = LaurentMatrix2(cfg)
    for i in (1, 2, 3):
        q1 = q1.add_scaled_constant(state.x(i, 0), table.value((i,)), M_MATS[i - 1])
    lhs = (q1[1, 0] + q1[0, 1]).scale(ctx.mpc(0, 1))
    rhs = state.x(2, 0).scale(2 * ctx.pi)
    return lhs.residual_against(rhs)
