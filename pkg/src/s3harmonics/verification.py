"""Named verification suites over the analytic modes and operators.

Each suite returns a list of CheckResult records; a check compares a
measured residual against a pinned tolerance (or a measured value
against a lower bound, for convergence orders).  The CLI exposes the
suites by name and fails with a nonzero exit status when any check
fails.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .exterior import (
    FormJet,
    PointForm,
    d_form,
    d_scalar_jet,
    delta_jet,
    hodge,
    hodge_jet,
    inner_pointwise,
    interior,
    laplace_jet,
    parity,
    point_form,
    star_d_jet,
    wedge,
)
from .fd_oracle import (
    FdConfig,
    fd_d_scalar,
    fd_delta,
    fd_directional,
    fd_laplace,
    fd_scalar_laplacian,
    fd_star_d,
)
from .geometry import sample_interior_points
from .mode_families import (
    coexact_field,
    enumerate_coexact,
    dimension_coexact,
    dimension_exact,
    killing_coordinate_closure,
    killing_one_form,
    killing_point,
    mode,
    mode_coordinate_closure,
    mode_is_null,
    mode_point,
    oneform_field,
)
from .quadrature import build_grid, gram
from .scalar_modes import (
    enumerate_scalar,
    mode_value,
    scalar_field,
    scalar_mode_closure,
    scalar_mode_jet,
    spectral_data,
)

__all__ = [
    "CheckResult",
    "suite_eigen",
    "suite_identities",
    "suite_oracle",
    "suite_counts",
    "SUITES",
    "run_suite",
]


@dataclass(frozen=True)
class CheckResult:
    """One verified relation: a measured value against its bound."""

    name: str
    residual: float
    tolerance: float
    passed: bool
    kind: str = "residual <= tolerance"


def check_le(name: str, residual: float, tolerance: float) -> CheckResult:
    residual = float(residual)
    return CheckResult(name, residual, float(tolerance), residual <= tolerance)


def check_ge(name: str, value: float, bound: float) -> CheckResult:
    value = float(value)
    return CheckResult(
        name, value, float(bound), value >= bound, kind="value >= bound"
    )


def _max_abs(arr) -> float:
    arr = np.asarray(arr)
    if arr.size == 0:
        return 0.0
    return float(np.max(np.abs(arr)))


def _rel(actual, expected) -> float:
    scale = _max_abs(expected)
    if scale == 0.0:
        return _max_abs(actual)
    return _max_abs(np.asarray(actual) - np.asarray(expected)) / scale


def _comps(f: PointForm) -> np.ndarray:
    return f.components


# ---------------------------------------------------------------------------
# eigen suite: every differential relation of the mode families
# ---------------------------------------------------------------------------


def _star_d_point(tag: str, i, p) -> np.ndarray:
    return _comps(point_form(star_d_jet(mode(tag, i, p, 1), p), p))


def _laplace_point(tag: str, i, p) -> np.ndarray:
    return _comps(point_form(laplace_jet(mode(tag, i, p, 2), p), p))


def _delta_point(tag: str, i, p) -> np.ndarray:
    return _comps(point_form(delta_jet(mode(tag, i, p, 1), p), p))


def suite_eigen(l_max: int = 4, seed: int = 0, n_points: int = 60):
    if l_max < 2:
        raise DomainError(f"the eigen suite needs l_max >= 2, got {l_max}")
    rng = np.random.default_rng(seed)
    p = sample_interior_points(n_points, rng)
    checks = []

    for which, sign in (("xi", -2.0), ("xiprime", 2.0)):
        w = killing_one_form(which, p, 1)
        sd = _comps(point_form(star_d_jet(w, p), p))
        val = _comps(killing_point(which, p))
        checks.append(
            check_le(f"star_d {which} = {sign:+g} {which}", _max_abs(sd - sign * val), 1e-13)
        )
    for which in ("xi", "xiprime"):
        w = killing_one_form(which, p, 2)
        lv = _comps(point_form(laplace_jet(w, p), p))
        val = _comps(killing_point(which, p))
        checks.append(check_le(f"laplace {which} = -4 {which}", _max_abs(lv + 4.0 * val), 1e-12))

    for L in range(1, l_max + 1):
        indices = enumerate_scalar(L)
        lam = float(-L * (L + 2))

        res_lap_a = 0.0
        res_delta_a = 0.0
        for i in indices:
            a_val = _comps(mode_point("A", i, p))
            res_lap_a = max(res_lap_a, _rel(_laplace_point("A", i, p), lam * a_val))
            phi = mode_value(i, p)
            res_delta_a = max(res_delta_a, _rel(_delta_point("A", i, p)[0], -lam * phi))
        checks.append(check_le(f"laplace A = lam A (L={L})", res_lap_a, 1e-8))
        checks.append(check_le(f"codifferential A = -lam Phi (L={L})", res_delta_a, 1e-9))

        res_c = 0.0
        res_cp = 0.0
        res_dual = 0.0
        res_dual_p = 0.0
        res_f = 0.0
        res_coexact = 0.0
        for i in indices:
            b_val = _comps(mode_point("B", i, p))
            bp_val = _comps(mode_point("Bprime", i, p))
            c_val = _comps(mode_point("C", i, p))
            cp_val = _comps(mode_point("Cprime", i, p))
            f_val = _comps(mode_point("F", i, p))
            res_c = max(res_c, _rel(_star_d_point("C", i, p), -lam * b_val - 2.0 * c_val))
            res_cp = max(res_cp, _rel(_star_d_point("Cprime", i, p), -lam * bp_val + 2.0 * cp_val))
            res_dual = max(res_dual, _rel(_star_d_point("B", i, p), c_val))
            res_dual_p = max(res_dual_p, _rel(_star_d_point("Bprime", i, p), cp_val))
            res_f = max(res_f, _rel(_star_d_point("F", i, p), -(L + 2.0) * f_val))
            for tag, val in (
                ("B", b_val), ("Bprime", bp_val), ("C", c_val),
                ("Cprime", cp_val), ("F", f_val),
            ):
                scale = max(_max_abs(val), 1.0)
                res_coexact = max(res_coexact, _max_abs(_delta_point(tag, i, p)) / scale)
        checks.append(check_le(f"star_d C = -lam B - 2 C (L={L})", res_c, 1e-9))
        checks.append(check_le(f"star_d Cprime = -lam Bprime + 2 Cprime (L={L})", res_cp, 1e-9))
        checks.append(check_le(f"star_d B reproduces the C expansion (L={L})", res_dual, 1e-10))
        checks.append(
            check_le(f"star_d Bprime reproduces the Cprime expansion (L={L})", res_dual_p, 1e-10)
        )
        checks.append(check_le(f"star_d F = -(L+2) F (L={L})", res_f, 1e-9))

        res_e = 0.0
        res_ep = 0.0
        res_lap_e = 0.0
        res_lap_ep = 0.0
        res_null = 0.0
        for i in indices:
            for tag, sgn in (("E", 1.0), ("Eprime", -1.0)):
                val = _comps(mode_point(tag, i, p))
                if mode_is_null(tag, i):
                    res_null = max(res_null, _max_abs(val))
                    continue
                sd = _star_d_point(tag, i, p)
                lv = _laplace_point(tag, i, p)
                if tag == "E":
                    res_e = max(res_e, _rel(sd, sgn * L * val))
                    res_lap_e = max(res_lap_e, _rel(lv, -(L**2) * val))
                else:
                    res_ep = max(res_ep, _rel(sd, sgn * L * val))
                    res_lap_ep = max(res_lap_ep, _rel(lv, -(L**2) * val))
                scale = max(_max_abs(val), 1.0)
                res_coexact = max(res_coexact, _max_abs(_delta_point(tag, i, p)) / scale)
        if L >= 2:
            checks.append(check_le(f"star_d E = +L E (L={L})", res_e, 1e-9))
            checks.append(check_le(f"star_d Eprime = -L Eprime (L={L})", res_ep, 1e-9))
            checks.append(check_le(f"laplace E = -L^2 E (L={L})", res_lap_e, 1e-8))
            checks.append(check_le(f"laplace Eprime = -L^2 Eprime (L={L})", res_lap_ep, 1e-8))
        checks.append(
            check_le(f"codifferential annihilates co-exact families (L={L})", res_coexact, 1e-10)
        )
        checks.append(check_le(f"boundary and low-level modes vanish (L={L})", res_null, 1e-12))

    return checks


# ---------------------------------------------------------------------------
# identity suite: the frame-level operator algebra
# ---------------------------------------------------------------------------


def _random_point_form(rng, degree: int, n: int) -> PointForm:
    k = {0: 1, 1: 3, 2: 3, 3: 1}[degree]
    comps = rng.standard_normal((k, n)) + 1j * rng.standard_normal((k, n))
    return PointForm(degree, comps)


def _random_scalar_jet(rng, p, order: int = 3):
    pool = enumerate_scalar(2) + enumerate_scalar(3)
    picks = rng.choice(len(pool), size=4, replace=False)
    total = None
    for k in picks:
        coef = complex(rng.standard_normal(), rng.standard_normal())
        jet = scalar_mode_jet(pool[int(k)], p, order) * coef
        total = jet if total is None else total + jet
    return total


def _random_form_jet(rng, p, degree: int, order: int = 3) -> FormJet:
    k = {0: 1, 1: 3, 2: 3, 3: 1}[degree]
    return FormJet(degree, tuple(_random_scalar_jet(rng, p, order) for _ in range(k)))


def suite_identities(seed: int = 0, n_points: int = 40):
    rng = np.random.default_rng(seed)
    p = sample_interior_points(n_points, rng)
    n = p.alpha.size
    checks = []

    res = 0.0
    for degree in range(4):
        f = _random_point_form(rng, degree, n)
        res = max(res, _max_abs(hodge(hodge(f)).components - f.components))
    checks.append(check_le("hodge twice is the identity", res, 0.0))

    res = 0.0
    for degree in range(4):
        f = _random_point_form(rng, degree, n)
        lhs = hodge(parity(f))
        rhs = parity(hodge(f))
        res = max(res, _max_abs(lhs.components + rhs.components))
    checks.append(check_le("hodge of parity is minus parity of hodge", res, 0.0))

    res = 0.0
    gamma = rng.standard_normal((3, n)) + 1j * rng.standard_normal((3, n))
    gamma_form = PointForm(1, gamma)
    for degree in (0, 1, 2):
        f = _random_point_form(rng, degree, n)
        lhs = interior(gamma, hodge(f))
        rhs = hodge(wedge(gamma_form, parity(f)))
        res = max(res, _rel(lhs.components, rhs.components))
    checks.append(check_le("contraction of a hodge image is the hodge of a wedge", res, 1e-12))

    res = 0.0
    gamma_r = rng.standard_normal((3, n))
    gamma_r_form = PointForm(1, gamma_r.astype(complex))
    for degree in (0, 1, 2):
        a = _random_point_form(rng, degree, n)
        b = _random_point_form(rng, degree + 1, n)
        lhs = inner_pointwise(wedge(gamma_r_form, a), b)
        rhs = inner_pointwise(a, interior(gamma_r, b))
        res = max(res, _rel(lhs, rhs))
    checks.append(check_le("wedge and contraction are pointwise adjoint", res, 1e-12))

    # complex multiplication is one rounding away from commutative when the
    # kernel contracts multiply-adds, so these two are near-exact, not exact
    f1 = _random_point_form(rng, 1, n)
    scale = _max_abs(f1.components) ** 2
    checks.append(
        check_le(
            "wedge of a one-form with itself vanishes",
            _max_abs(wedge(f1, f1).components) / scale,
            1e-15,
        )
    )

    res = 0.0
    for dp, dq in ((1, 1), (1, 2)):
        a = _random_point_form(rng, dp, n)
        b = _random_point_form(rng, dq, n)
        sign = (-1.0) ** (dp * dq)
        diff = _max_abs(wedge(a, b).components - sign * wedge(b, a).components)
        res = max(res, diff / (_max_abs(a.components) * _max_abs(b.components)))
    checks.append(check_le("wedge has graded symmetry", res, 1e-15))

    res = 0.0
    v = rng.standard_normal((3, n)) + 1j * rng.standard_normal((3, n))
    for degree in (2, 3):
        f = _random_point_form(rng, degree, n)
        twice = interior(v, interior(v, f))
        scale = max(_max_abs(v) ** 2 * _max_abs(f.components), 1.0)
        res = max(res, _max_abs(twice.components) / scale)
    checks.append(check_le("contraction is nilpotent", res, 1e-12))

    fj = _random_scalar_jet(rng, p, 2)
    dd = d_form(d_scalar_jet(fj))
    checks.append(
        check_le("d of d on scalars vanishes", max(_max_abs(c.value) for c in dd.comps), 0.0)
    )

    wj = _random_form_jet(rng, p, 1, 2)
    scale = max(_max_abs(c.value) for c in wj.comps)
    ddw = d_form(d_form(wj))
    checks.append(
        check_le(
            "d of d on one-forms vanishes",
            max(_max_abs(c.value) for c in ddw.comps) / scale,
            1e-12,
        )
    )

    w2 = _random_form_jet(rng, p, 2, 2)
    scale = max(_max_abs(c.value) for c in w2.comps)
    ddel = delta_jet(delta_jet(w2, p), p)
    checks.append(
        check_le(
            "codifferential twice vanishes",
            max(_max_abs(c.value) for c in ddel.comps) / scale,
            1e-12,
        )
    )

    res = 0.0
    for degree in (0, 1, 2):
        w = _random_form_jet(rng, p, degree, 2)
        lhs = delta_jet(hodge_jet(w, p), p)
        rhs = (-1.0) * hodge_jet(d_form((-1.0) ** degree * w), p)
        res = max(
            res,
            _rel(
                _comps(point_form(lhs, p)),
                _comps(point_form(rhs, p)),
            ),
        )
    checks.append(
        check_le("codifferential of hodge is minus hodge of d of parity", res, 1e-12)
    )

    res = 0.0
    for degree in (1, 2, 3):
        w = _random_form_jet(rng, p, degree, 2)
        lhs = d_form(hodge_jet(w, p))
        rhs = hodge_jet(delta_jet((-1.0) ** degree * w, p), p)
        res = max(
            res,
            _rel(
                _comps(point_form(lhs, p)),
                _comps(point_form(rhs, p)),
            ),
        )
    checks.append(check_le("d of hodge is hodge of codifferential of parity", res, 1e-12))

    res = 0.0
    for which in ("xi", "xiprime"):
        xi = killing_point(which, p).components
        omega = _random_point_form(rng, 1, n)
        val = interior(xi, hodge(wedge(PointForm(1, xi), omega)))
        res = max(res, _max_abs(val.components) / max(_max_abs(omega.components), 1.0))
    checks.append(
        check_le("a unit Killing vector annihilates the hodge of its own wedge", res, 1e-12)
    )

    return checks


# ---------------------------------------------------------------------------
# oracle suite: finite differences against the analytic operators
# ---------------------------------------------------------------------------


def suite_oracle(l_max: int = 3, seed: int = 0, n_points: int = 20):
    if l_max < 2:
        raise DomainError(f"the oracle suite needs l_max >= 2, got {l_max}")
    rng = np.random.default_rng(seed)
    p = sample_interior_points(n_points, rng)
    p_small = sample_interior_points(min(n_points, 6), rng)
    cfg = FdConfig()
    cfg4 = FdConfig(scheme="central4")
    checks = []

    res_grad = 0.0
    res_lap = 0.0
    res_kill = 0.0
    for L in range(1, l_max + 1):
        lam = float(-L * (L + 2))
        for i in enumerate_scalar(L):
            closure = scalar_mode_closure(i)
            phi = mode_value(i, p)
            grad = _comps(fd_d_scalar(closure, p, cfg))
            ana = _comps(point_form(d_scalar_jet(scalar_mode_jet(i, p, 1)), p))
            res_grad = max(res_grad, _rel(grad, ana))
            res_lap = max(res_lap, _rel(fd_scalar_laplacian(closure, p, cfg), lam * phi))
            sd = spectral_data(i)
            res_kill = max(res_kill, _rel(fd_directional(closure, p, 1.0, 1.0, cfg), sd.mu * phi))
            res_kill = max(res_kill, _rel(fd_directional(closure, p, -1.0, 1.0, cfg), sd.nu * phi))
    checks.append(check_le("gradient matches the analytic differential", res_grad, 1e-7))
    checks.append(check_le("scalar laplacian reproduces lam Phi", res_lap, 1e-5))
    checks.append(check_le("Killing derivatives reproduce mu and nu", res_kill, 1e-7))

    for which, sign in (("xi", -2.0), ("xiprime", 2.0)):
        w = killing_coordinate_closure(which)
        sd_fd = _comps(fd_star_d(w, p, cfg))
        val = _comps(killing_point(which, p))
        checks.append(
            check_le(f"fd star_d {which} = {sign:+g} {which}", _max_abs(sd_fd - sign * val), 1e-6)
        )

    res_sd = {tag: 0.0 for tag in ("A", "B", "Bprime", "C", "Cprime", "E", "Eprime", "F")}
    res_delta = 0.0
    res_delta_a = 0.0
    for L in range(1, l_max + 1):
        lam = float(-L * (L + 2))
        for i in enumerate_scalar(L):
            for tag in res_sd:
                if mode_is_null(tag, i):
                    continue
                closure = mode_coordinate_closure(tag, i)
                fd_val = _comps(fd_star_d(closure, p, cfg))
                ana = _comps(point_form(star_d_jet(mode(tag, i, p, 1), p), p))
                res_sd[tag] = max(res_sd[tag], _rel(fd_val, ana))
                if tag == "A":
                    phi = mode_value(i, p)
                    res_delta_a = max(res_delta_a, _rel(fd_delta(closure, p, cfg), -lam * phi))
                else:
                    scale = max(_max_abs(_comps(mode_point(tag, i, p))), 1.0)
                    res_delta = max(res_delta, _max_abs(fd_delta(closure, p, cfg)) / scale)
    for tag, res in res_sd.items():
        checks.append(check_le(f"fd star_d agrees with the analytic curl on {tag}", res, 1e-5))
    checks.append(check_le("fd codifferential vanishes on co-exact families", res_delta, 1e-6))
    checks.append(check_le("fd codifferential of A reproduces -lam Phi", res_delta_a, 1e-6))

    res_lap_e = 0.0
    for L in range(2, l_max + 1):
        for tag in ("E", "Eprime"):
            i = next(
                j for j in enumerate_scalar(L) if not mode_is_null(tag, j)
            )
            closure = mode_coordinate_closure(tag, i)
            fd_val = _comps(fd_laplace(closure, p_small, cfg4))
            val = _comps(mode_point(tag, i, p_small))
            res_lap_e = max(res_lap_e, _rel(fd_val, -(L**2) * val))
    checks.append(check_le("fd laplacian reproduces -L^2 on the co-exact basis", res_lap_e, 1e-4))

    for tag in ("A", "B", "Bprime", "C", "Cprime", "E", "Eprime", "F"):
        L = max(2, min(3, l_max))
        i = next(j for j in enumerate_scalar(L) if not mode_is_null(tag, j))
        closure = mode_coordinate_closure(tag, i)
        ana = _comps(point_form(star_d_jet(mode(tag, i, p_small, 1), p_small), p_small))
        errs = []
        for h in (1e-3, 5e-4):
            c = FdConfig(step_alpha=h, step_theta=h, step_phi=h)
            errs.append(_max_abs(_comps(fd_star_d(closure, p_small, c)) - ana))
        order = float(np.log2(errs[0] / errs[1]))
        checks.append(check_ge(f"fd convergence order on {tag}", order, 1.9))

    return checks


# ---------------------------------------------------------------------------
# counts suite: dimensions, enumeration, and Gram orthonormality
# ---------------------------------------------------------------------------


def suite_counts(l_max: int = 10, gram_level: int = 3, seed: int = 0):
    if l_max < 2:
        raise DomainError(f"the counts suite needs l_max >= 2, got {l_max}")
    checks = []

    res = 0
    for L in range(1, l_max + 1):
        res = max(res, abs(len(enumerate_scalar(L)) - dimension_exact(L)))
    checks.append(check_le("scalar enumeration matches the exact dimension", res, 0))

    res = 0
    for L in range(2, l_max + 1):
        labels = enumerate_coexact(L)
        res = max(res, abs(len(labels) - dimension_coexact(L)))
        res = max(res, abs(len(labels) - 2 * (L - 1) * (L + 1)))
    checks.append(check_le("co-exact enumeration matches 2(L-1)(L+1)", res, 0))

    grid = build_grid(gram_level)
    fields = [scalar_field(i) for L in range(gram_level + 1) for i in enumerate_scalar(L)]
    g = gram(fields, grid)
    checks.append(
        check_le(
            f"scalar modes are orthonormal through L={gram_level}",
            _max_abs(g - np.eye(len(fields))),
            1e-12,
        )
    )

    fields = [oneform_field("A", i, normalized=True) for i in enumerate_scalar(gram_level)]
    fields += [coexact_field(b) for b in enumerate_coexact(gram_level)]
    g = gram(fields, grid)
    checks.append(
        check_le(
            f"normalized one-form set is orthonormal at L={gram_level}",
            _max_abs(g - np.eye(len(fields))),
            1e-9,
        )
    )

    return checks


SUITES = {
    "eigen": suite_eigen,
    "identities": suite_identities,
    "oracle": suite_oracle,
    "counts": suite_counts,
}


def run_suite(name: str, l_max: int | None = None, seed: int = 0):
    """Run one named suite with its default scope unless l_max is given."""
    if name not in SUITES:
        raise DomainError(f"unknown suite {name!r}; available: {sorted(SUITES)}")
    if name == "identities":
        return suite_identities(seed=seed)
    if name == "counts":
        return suite_counts(l_max=l_max if l_max is not None else 10, seed=seed)
    if name == "eigen":
        return suite_eigen(l_max=l_max if l_max is not None else 4, seed=seed)
    return suite_oracle(l_max=l_max if l_max is not None else 3, seed=seed)
