"""Command line interface.

Every data command assembles one output record

    {command, parameters, payload, metadata}

and emits it as JSON (with [re, im] complex pairs and %.17g floats, so
every number round-trips bit for bit) or as CSV with paired _re/_im
columns.  The metadata block pins the conventions the numbers depend
on: orientation, frame, winding convention, enumeration order and the
Hermitian inner product.  Exit status is 0 on success, 2 on a usage or
domain error, and 3 when a verification suite reports a failed check.
"""

from __future__ import annotations

import functools
import io
import pathlib
from fractions import Fraction
from importlib import metadata as _importlib_metadata

import click
import numpy as np

from .errors import (
    ChartDomainError,
    DegreeError,
    DomainError,
    GridResolutionError,
    InvalidModeError,
)
from .exterior import point_form, star_d_jet
from .geometry import HopfPoint
from .indices import CoexactBasisIndex, ModeIndex, as_mode_index
from .mode_families import (
    FAMILY_TAGS,
    KILLING_TAGS,
    closed_form_gram,
    coexact_field,
    dimension_coexact,
    dimension_exact,
    enumerate_coexact,
    killing_one_form,
    killing_point,
    mode,
    mode_is_null,
    mode_point,
    oneform_field,
)
from .quadrature import build_grid, gram
from .report import render_report
from .scalar_modes import enumerate_scalar, mode_value, spectral_data
from .serialization import complex_pair, format_float, matrix_pairs, render_json
from .verification import SUITES, run_suite

_USAGE_ERRORS = (
    DomainError,
    InvalidModeError,
    GridResolutionError,
    ChartDomainError,
    DegreeError,
)

_FAMILY_ALIASES = {"Ep": "Eprime", "Bp": "Bprime", "Cp": "Cprime"}

_SUITE_DEFAULT_LMAX = {"eigen": 4, "oracle": 3, "counts": 10, "identities": None}

try:
    _VERSION = _importlib_metadata.version("s3harmonics")
except _importlib_metadata.PackageNotFoundError:
    _VERSION = "0.1.0"


def _conventions() -> dict:
    return {
        "orientation": "e_alpha ^ e_theta ^ e_phi positively oriented; vol = 2 pi^2",
        "frame": "(e_alpha, e_theta, e_phi) = (d alpha, cos(alpha) d theta, sin(alpha) d phi)",
        "degree_2_basis": "(e_theta^e_phi, e_phi^e_alpha, e_alpha^e_theta)",
        "inner_product": "Hermitian L2 product, conjugate-linear in the second slot",
        "windings": (
            "phase exp(i (S phi + D theta)) with S = (two_mp - two_mm)/2 "
            "and D = (two_mp + two_mm)/2"
        ),
        "enumeration": (
            "scalar: two_mp ascending outer, two_mm ascending inner; "
            "co-exact: full E block then full Eprime block, each in scalar order"
        ),
        "complex_format": "[re, im] pairs in JSON; _re/_im column pairs in CSV",
    }


def _record(command: str, parameters: dict, payload: dict) -> dict:
    return {
        "command": command,
        "parameters": parameters,
        "payload": payload,
        "metadata": {
            "package": "s3harmonics",
            "version": _VERSION,
            "conventions": _conventions(),
        },
    }


def _emit(record: dict, fmt: str, out: str | None, csv_text: str | None = None) -> None:
    if fmt == "csv":
        if csv_text is None:
            raise click.UsageError("this command has no CSV rendering")
        text = csv_text
    else:
        text = render_json(record)
    if out:
        pathlib.Path(out).write_text(text, newline="")
    else:
        click.echo(text, nl=False)


def _kv_csv(rows) -> str:
    buf = io.StringIO()
    buf.write("name,value_re,value_im\r\n")
    for name, value in rows:
        z = complex(value)
        buf.write(f"{name},{format_float(z.real)},{format_float(z.imag)}\r\n")
    return buf.getvalue()


def _usage_guard(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except _USAGE_ERRORS as exc:
            raise click.UsageError(str(exc)) from exc

    return wrapper


class RationalType(click.ParamType):
    """Exact rational option value: accepts forms like 3, -1/2, 0.5."""

    name = "rational"

    def convert(self, value, param, ctx):
        if isinstance(value, Fraction):
            return value
        try:
            return Fraction(str(value))
        except (ValueError, ZeroDivisionError):
            self.fail(f"{value!r} is not a rational number", param, ctx)


RATIONAL = RationalType()

_FORMAT_OPTION = click.option(
    "--format", "fmt", type=click.Choice(["json", "csv"]), default="json",
    show_default=True, help="Output rendering.",
)
_OUT_OPTION = click.option(
    "--out", type=click.Path(dir_okay=False, writable=True), default=None,
    help="Write the output to this file instead of stdout.",
)


@click.group()
@click.version_option(version=_VERSION, prog_name="s3harm")
def main() -> None:
    """Explicit one-form eigenmodes of the Laplacian on the 3-sphere."""


# ---------------------------------------------------------------------------
# modes list
# ---------------------------------------------------------------------------


@main.group()
def modes() -> None:
    """Mode enumeration."""


@modes.command("list")
@click.option("--L", "level", type=int, required=True, help="Level to enumerate.")
@_FORMAT_OPTION
@_OUT_OPTION
@_usage_guard
def modes_list(level: int, fmt: str, out: str | None) -> None:
    """List the scalar modes and the co-exact one-form basis at one level."""
    scalar = enumerate_scalar(level)
    coexact = enumerate_coexact(level) if level >= 2 else []

    def scalar_row(i: ModeIndex) -> dict:
        sd = spectral_data(i)
        return {
            "L": i.L,
            "two_mp": i.two_mp,
            "two_mm": i.two_mm,
            "mp": str(i.mp),
            "mm": str(i.mm),
            "S": i.S,
            "D": i.D,
            "lam": sd.lam,
            "mu": complex_pair(sd.mu),
            "nu": complex_pair(sd.nu),
        }

    payload = {
        "scalar": [scalar_row(i) for i in scalar],
        "coexact": [
            {"family": b.tag, "L": b.index.L, "two_mp": b.index.two_mp,
             "two_mm": b.index.two_mm}
            for b in coexact
        ],
        "counts": {
            "scalar": len(scalar),
            "coexact": len(coexact),
            "exact_dimension": dimension_exact(level) if level >= 1 else 0,
            "coexact_dimension": dimension_coexact(level) if level >= 2 else 0,
        },
    }

    buf = io.StringIO()
    buf.write("kind,family,L,two_mp,two_mm,S,D,lam,mu_re,mu_im,nu_re,nu_im\r\n")
    for i in scalar:
        sd = spectral_data(i)
        buf.write(
            f"scalar,,{i.L},{i.two_mp},{i.two_mm},{i.S},{i.D},{sd.lam},"
            f"{format_float(sd.mu.real)},{format_float(sd.mu.imag)},"
            f"{format_float(sd.nu.real)},{format_float(sd.nu.imag)}\r\n"
        )
    for b in coexact:
        i = b.index
        sd = spectral_data(i)
        buf.write(
            f"coexact,{b.tag},{i.L},{i.two_mp},{i.two_mm},{i.S},{i.D},{sd.lam},"
            f"{format_float(sd.mu.real)},{format_float(sd.mu.imag)},"
            f"{format_float(sd.nu.real)},{format_float(sd.nu.imag)}\r\n"
        )

    _emit(_record("modes list", {"L": level}, payload), fmt, out, buf.getvalue())


# ---------------------------------------------------------------------------
# eval
# ---------------------------------------------------------------------------


def _canonical_family(family: str) -> str:
    family = _FAMILY_ALIASES.get(family, family)
    allowed = ("Phi",) + FAMILY_TAGS + KILLING_TAGS
    if family not in allowed:
        raise click.UsageError(
            f"unknown family {family!r}; choose one of {', '.join(allowed)} "
            f"(aliases: {', '.join(sorted(_FAMILY_ALIASES))})"
        )
    return family


@main.command("eval")
@click.option("--family", required=True,
              help="Phi, A, B, Bprime, C, Cprime, E, Eprime, F, xi or xiprime.")
@click.option("--L", "level", type=int, default=None, help="Level (not used for xi).")
@click.option("--mp", type=RATIONAL, default=None, help="m_plus as an exact rational.")
@click.option("--mm", type=RATIONAL, default=None, help="m_minus as an exact rational.")
@click.option("--alpha", type=float, default=np.pi / 4, show_default="pi/4")
@click.option("--theta", type=float, default=0.0, show_default=True)
@click.option("--phi", type=float, default=0.0, show_default=True)
@click.option("--star-d", "with_star_d", is_flag=True,
              help="Also report the image under star after d.")
@_FORMAT_OPTION
@_OUT_OPTION
@_usage_guard
def eval_cmd(family: str, level, mp, mm, alpha: float, theta: float, phi: float,
             with_star_d: bool, fmt: str, out: str | None) -> None:
    """Evaluate one mode (or Killing one-form) at a point, orthonormal frame."""
    family = _canonical_family(family)
    p = HopfPoint(alpha, theta, phi)

    parameters = {
        "family": family,
        "alpha": alpha,
        "theta": theta,
        "phi": phi,
        "star_d": with_star_d,
    }
    payload: dict = {
        "point": {"alpha": alpha, "theta": theta, "phi": phi},
        "frame": ["e_alpha", "e_theta", "e_phi"],
    }
    rows = [("alpha", alpha), ("theta", theta), ("phi", phi)]

    if family in KILLING_TAGS:
        comps = killing_point(family, p).components[:, 0]
        payload["components"] = [complex_pair(z) for z in comps]
        rows += [(f"component_{n}", z) for n, z in zip(("alpha", "theta", "phi"), comps)]
        if with_star_d:
            sd = point_form(star_d_jet(killing_one_form(family, p, 1), p), p)
            sd_comps = sd.components[:, 0]
            payload["star_d"] = {"components": [complex_pair(z) for z in sd_comps]}
            rows += [(f"star_d_{n}", z) for n, z in zip(("alpha", "theta", "phi"), sd_comps)]
        _emit(_record("eval", parameters, payload), fmt, out, _kv_csv(rows))
        return

    if level is None or mp is None or mm is None:
        raise click.UsageError(f"family {family} needs --L, --mp and --mm")
    i = as_mode_index(level, mp, mm)
    sd_data = spectral_data(i)
    parameters.update({"L": i.L, "mp": str(i.mp), "mm": str(i.mm)})
    payload["index"] = {
        "L": i.L, "two_mp": i.two_mp, "two_mm": i.two_mm, "S": i.S, "D": i.D,
    }
    payload["spectral"] = {
        "lam": sd_data.lam,
        "mu": complex_pair(sd_data.mu),
        "nu": complex_pair(sd_data.nu),
    }
    rows += [("lam", sd_data.lam), ("mu", sd_data.mu), ("nu", sd_data.nu)]

    if family == "Phi":
        if with_star_d:
            raise click.UsageError("--star-d applies to one-form families only")
        value = mode_value(i, p)[0]
        payload["value"] = complex_pair(value)
        rows.append(("value", value))
        _emit(_record("eval", parameters, payload), fmt, out, _kv_csv(rows))
        return

    comps = mode_point(family, i, p).components[:, 0]
    payload["components"] = [complex_pair(z) for z in comps]
    payload["is_null"] = mode_is_null(family, i)
    rows += [(f"component_{n}", z) for n, z in zip(("alpha", "theta", "phi"), comps)]

    if family == "A":
        # delta(d Phi) must reproduce -lam Phi; echo both sides
        from .exterior import delta_jet

        delta_val = point_form(delta_jet(mode("A", i, p, 1), p), p).components[0, 0]
        expected = -float(sd_data.lam) * mode_value(i, p)[0]
        payload["codifferential_check"] = {
            "codifferential": complex_pair(delta_val),
            "minus_lam_phi": complex_pair(expected),
            "abs_deviation": abs(delta_val - expected),
        }
        rows += [
            ("codifferential", delta_val),
            ("minus_lam_phi", expected),
            ("codifferential_abs_deviation", abs(delta_val - expected)),
        ]

    if with_star_d:
        sd_form = point_form(star_d_jet(mode(family, i, p, 1), p), p)
        sd_comps = sd_form.components[:, 0]
        payload["star_d"] = {"components": [complex_pair(z) for z in sd_comps]}
        rows += [(f"star_d_{n}", z) for n, z in zip(("alpha", "theta", "phi"), sd_comps)]

    _emit(_record("eval", parameters, payload), fmt, out, _kv_csv(rows))


# ---------------------------------------------------------------------------
# gram
# ---------------------------------------------------------------------------


def _gram_members(family: str, level: int):
    """The (tag, ModeIndex) list the gram command reports, in order."""
    if family == "A":
        if level < 1:
            raise DomainError("family A has no modes below L = 1")
        return [("A", i) for i in enumerate_scalar(level)]
    if family in ("E", "Eprime"):
        if level < 2:
            raise DomainError(f"family {family} has no modes below L = 2")
        return [(b.tag, b.index) for b in enumerate_coexact(level) if b.tag == family]
    members = [("A", i) for i in enumerate_scalar(level)] if level >= 1 else []
    if level >= 2:
        members += [(b.tag, b.index) for b in enumerate_coexact(level)]
    if not members:
        raise DomainError("no one-form modes below L = 1")
    return members


def _closed_matrix(members, normalized: bool) -> np.ndarray:
    n = len(members)
    m = np.zeros((n, n), dtype=complex)
    diag = [closed_form_gram(tag, tag, i, i).real for tag, i in members]
    for r, (tag_r, i_r) in enumerate(members):
        for c, (tag_c, i_c) in enumerate(members):
            if i_r != i_c:
                continue
            val = closed_form_gram(tag_r, tag_c, i_r, i_c)
            if normalized:
                denom = np.sqrt(diag[r] * diag[c])
                val = val / denom if denom != 0.0 else val
            m[r, c] = val
    return m


@main.command("gram")
@click.option("--family", type=click.Choice(["A", "E", "Ep", "Eprime", "all"]),
              default="all", show_default=True)
@click.option("--L", "level", type=int, required=True, help="Level of the block.")
@click.option("--grid-lmax", type=int, default=None,
              help="Quadrature resolution level; defaults to --L.")
@click.option("--normalized/--unnormalized", default=False, show_default=True,
              help="Scale each mode by its closed-form norm first.")
@_FORMAT_OPTION
@_OUT_OPTION
@_usage_guard
def gram_cmd(family: str, level: int, grid_lmax, normalized: bool, fmt: str,
             out: str | None) -> None:
    """Numeric Gram matrix of one mode family against its closed form."""
    family = _FAMILY_ALIASES.get(family, family)
    members = _gram_members(family, level)
    resolution = level if grid_lmax is None else grid_lmax
    if resolution < level:
        raise GridResolutionError(
            f"--grid-lmax {resolution} cannot resolve products of level-{level} modes"
        )
    grid = build_grid(resolution)

    fields = []
    for tag, i in members:
        if tag == "A":
            fields.append(oneform_field("A", i, normalized=normalized))
        else:
            fields.append(coexact_field(CoexactBasisIndex(tag, i), normalized=normalized))
    numeric = gram(fields, grid)
    closed = _closed_matrix(members, normalized)
    deviation = float(np.max(np.abs(numeric - closed))) if members else 0.0

    labels = [f"{tag}({i.L}, {i.mp}, {i.mm})" for tag, i in members]
    payload = {
        "labels": labels,
        "grid": {
            "level": resolution,
            "n_x": len(grid.x_nodes),
            "n_theta": grid.n_theta,
            "n_phi": grid.n_phi,
        },
        "numeric": matrix_pairs(numeric),
        "closed_form": matrix_pairs(closed),
        "max_abs_deviation": deviation,
    }
    parameters = {
        "family": family,
        "L": level,
        "grid_lmax": resolution,
        "normalized": normalized,
    }

    buf = io.StringIO()
    buf.write("matrix,row,col,value_re,value_im\r\n")
    for label, matrix in (("numeric", numeric), ("closed_form", closed)):
        for r in range(matrix.shape[0]):
            for c in range(matrix.shape[1]):
                z = matrix[r, c]
                buf.write(
                    f"{label},{r},{c},{format_float(z.real)},{format_float(z.imag)}\r\n"
                )
    buf.write(f"max_abs_deviation,0,0,{format_float(deviation)},0\r\n")

    _emit(_record("gram", parameters, payload), fmt, out, buf.getvalue())


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


@main.command("verify")
@click.option("--suite", type=click.Choice(sorted(SUITES)), required=True)
@click.option("--L-max", "l_max", type=int, default=None,
              help="Scope of the suite; each suite has its own default.")
@click.option("--seed", type=int, default=0, show_default=True)
@_FORMAT_OPTION
@_OUT_OPTION
@_usage_guard
def verify_cmd(suite: str, l_max, seed: int, fmt: str, out: str | None) -> None:
    """Run one verification suite; exit status 3 if any check fails."""
    resolved = l_max if l_max is not None else _SUITE_DEFAULT_LMAX[suite]
    checks = run_suite(suite, l_max=l_max, seed=seed)
    n_passed = sum(c.passed for c in checks)
    payload = {
        "checks": [
            {
                "name": c.name,
                "residual": c.residual,
                "tolerance": c.tolerance,
                "kind": c.kind,
                "passed": c.passed,
            }
            for c in checks
        ],
        "summary": {
            "total": len(checks),
            "passed": n_passed,
            "failed": len(checks) - n_passed,
        },
    }
    parameters = {"suite": suite, "l_max": resolved, "seed": seed}

    buf = io.StringIO()
    buf.write("name,residual,tolerance,kind,passed\r\n")
    for c in checks:
        buf.write(
            f"\"{c.name}\",{format_float(c.residual)},{format_float(c.tolerance)},"
            f"\"{c.kind}\",{str(c.passed).lower()}\r\n"
        )

    _emit(_record("verify", parameters, payload), fmt, out, buf.getvalue())
    if n_passed != len(checks):
        raise SystemExit(3)


# ---------------------------------------------------------------------------
# dims
# ---------------------------------------------------------------------------


@main.command("dims")
@click.option("--L-max", "l_max", type=int, default=10, show_default=True)
@_FORMAT_OPTION
@_OUT_OPTION
@_usage_guard
def dims_cmd(l_max: int, fmt: str, out: str | None) -> None:
    """Exact and co-exact one-form degeneracies for each level."""
    if l_max < 1:
        raise DomainError(f"dims needs --L-max >= 1, got {l_max}")
    levels = []
    for L in range(1, l_max + 1):
        exact = dimension_exact(L)
        coexact = dimension_coexact(L) if L >= 2 else 0
        levels.append(
            {"L": L, "exact": exact, "coexact": coexact, "total": exact + coexact}
        )
    payload = {"levels": levels}

    buf = io.StringIO()
    buf.write("L,exact_dimension,coexact_dimension,total\r\n")
    for row in levels:
        buf.write(f"{row['L']},{row['exact']},{row['coexact']},{row['total']}\r\n")

    _emit(_record("dims", {"l_max": l_max}, payload), fmt, out, buf.getvalue())


# ---------------------------------------------------------------------------
# report
# ---------------------------------------------------------------------------


@main.command("report")
@click.option("--out", "out_dir", type=click.Path(file_okay=False), default="report",
              show_default=True, help="Directory receiving figures and data files.")
@click.option("--L-max", "l_max", type=int, default=4, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@_usage_guard
def report_cmd(out_dir: str, l_max: int, seed: int) -> None:
    """Render diagnostic figures with their data files and a manifest."""
    if l_max < 2:
        raise DomainError(f"report needs --L-max >= 2, got {l_max}")
    manifest = render_report(out_dir, l_max=l_max, seed=seed)
    record = _record("report", {"out": out_dir, "l_max": l_max, "seed": seed}, manifest)
    click.echo(render_json(record), nl=False)


if __name__ == "__main__":
    main()
