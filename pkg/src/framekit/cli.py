"""Command-line front end and the flat-file schemas it reads and writes.

Files are UTF-8 JSON.  Frame file:

    {"grid": {"points": [...], "weights": [...]}, "vectors": [[...], ...]}

Model file:

    {"atoms": [{"u": ..., "mass": ...}, ...],
     "frame": [[...], ...],
     "phat": {"re": [...], "im": [...]}        # exactly one of phat /
     "phi_x": {"grid": {...}, "values": [...]}}  # phi_x for GP commands

Kernel output adds {"matrix": [[...]], "kind": "rkhs"|"naive", "rank_tol": r}.
Machine files carry 17 significant digits (bit-exact round trip); human
reports print 6.

Exit codes: 0 success; 1 unreadable file; 2 schema or argument violation;
3 degenerate input (zero span / not a frame); 4 a mathematical assertion
failed; 5 sandwich violated in gp-sim.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import classic, frames, gp, rkhs
from .errors import (
    DimensionMismatch,
    FramekitError,
    InvalidArgument,
    InvalidIndex,
    InvalidMatrix,
    NotAFrame,
    ZeroSpan,
)
from .spectral import DEFAULT_RANK_TOL, sym_eig

EXIT_OK = 0
EXIT_MISSING = 1
EXIT_SCHEMA = 2
EXIT_DEGENERATE = 3
EXIT_MATH = 4
EXIT_SANDWICH = 5


class SchemaError(FramekitError):
    """File content violates the expected schema; message names the field."""


# ---------------------------------------------------------------------------
# serialization


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _fmt_human(x: float) -> str:
    return format(float(x), ".6g")


def _emit(value, out: list) -> None:
    if isinstance(value, dict):
        out.append("{")
        for i, (k, v) in enumerate(value.items()):
            if i:
                out.append(", ")
            out.append(json.dumps(k))
            out.append(": ")
            _emit(v, out)
        out.append("}")
    elif isinstance(value, (list, tuple, np.ndarray)):
        out.append("[")
        for i, v in enumerate(value):
            if i:
                out.append(", ")
            _emit(v, out)
        out.append("]")
    elif isinstance(value, bool):
        out.append("true" if value else "false")
    elif isinstance(value, (int, np.integer)):
        out.append(str(int(value)))
    elif isinstance(value, (float, np.floating)):
        out.append(_fmt(value))
    elif isinstance(value, str):
        out.append(json.dumps(value))
    else:
        raise TypeError(f"cannot serialize {type(value)!r}")


def dump_json(value) -> str:
    """JSON text with floats at 17 significant digits."""
    out: list = []
    _emit(value, out)
    return "".join(out) + "\n"


def _read_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise FileNotFoundError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: not valid JSON (line {exc.lineno}: {exc.msg})")


def _number_list(raw, field: str) -> np.ndarray:
    if not isinstance(raw, list) or not all(
        isinstance(x, (int, float)) and not isinstance(x, bool) for x in raw
    ):
        raise SchemaError(f"{field}: expected an array of numbers")
    return np.asarray(raw, dtype=float)


def _matrix(raw, field: str) -> np.ndarray:
    if not isinstance(raw, list) or not raw:
        raise SchemaError(f"{field}: expected a non-empty array of rows")
    rows = [_number_list(r, f"{field}[{i}]") for i, r in enumerate(raw)]
    width = rows[0].size
    for i, r in enumerate(rows):
        if r.size != width:
            raise SchemaError(
                f"{field}[{i}]: expected {width} numbers, got {r.size}"
            )
    return np.vstack(rows)


def _parse_grid(raw, field: str) -> frames.Grid:
    if not isinstance(raw, dict):
        raise SchemaError(f"{field}: expected an object with points and weights")
    for key in ("points", "weights"):
        if key not in raw:
            raise SchemaError(f"{field}.{key}: missing")
    points = _number_list(raw["points"], f"{field}.points")
    weights = _number_list(raw["weights"], f"{field}.weights")
    if points.size != weights.size:
        raise SchemaError(
            f"{field}.weights: {weights.size} entries for {points.size} points"
        )
    try:
        return frames.Grid(points=points, weights=weights)
    except FramekitError as exc:
        raise SchemaError(f"{field}: {exc}")


def parse_frame_file(path: str) -> frames.FrameSystem:
    raw = _read_json(path)
    if not isinstance(raw, dict):
        raise SchemaError(f"{path}: top level must be an object")
    if "grid" not in raw:
        raise SchemaError("grid: missing")
    if "vectors" not in raw:
        raise SchemaError("vectors: missing")
    grid = _parse_grid(raw["grid"], "grid")
    vectors = _matrix(raw["vectors"], "vectors")
    try:
        return frames.FrameSystem(grid=grid, vectors=vectors)
    except FramekitError as exc:
        raise SchemaError(f"vectors: {exc}")


def write_frame_file(path: str, fs: frames.FrameSystem) -> None:
    payload = {
        "grid": {
            "points": fs.grid.points,
            "weights": fs.grid.weights,
        },
        "vectors": fs.vectors,
    }
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_json(payload))


def parse_model_file(path: str):
    """Returns (model, phat) for GP commands."""
    raw = _read_json(path)
    if not isinstance(raw, dict):
        raise SchemaError(f"{path}: top level must be an object")
    if "atoms" not in raw:
        raise SchemaError("atoms: missing")
    if not isinstance(raw["atoms"], list) or not raw["atoms"]:
        raise SchemaError("atoms: expected a non-empty array")
    locations, masses = [], []
    for i, atom in enumerate(raw["atoms"]):
        if not isinstance(atom, dict) or "u" not in atom or "mass" not in atom:
            raise SchemaError(f"atoms[{i}]: expected an object with u and mass")
        locations.append(atom["u"])
        masses.append(atom["mass"])
    try:
        measure = gp.AtomicMeasure(
            locations=_number_list(locations, "atoms[].u"),
            masses=_number_list(masses, "atoms[].mass"),
        )
    except FramekitError as exc:
        raise SchemaError(f"atoms: {exc}")
    if "frame" not in raw:
        raise SchemaError("frame: missing")
    vectors = _matrix(raw["frame"], "frame")
    try:
        sigma_frame = gp.SigmaFrame(measure=measure, vectors=vectors)
    except FramekitError as exc:
        raise SchemaError(f"frame: {exc}")

    has_phat = "phat" in raw
    has_phi = "phi_x" in raw
    if has_phat == has_phi:
        raise SchemaError("phat/phi_x: exactly one must be present")
    if has_phat:
        section = raw["phat"]
        if not isinstance(section, dict) or "re" not in section or "im" not in section:
            raise SchemaError("phat: expected an object with re and im")
        re = _number_list(section["re"], "phat.re")
        im = _number_list(section["im"], "phat.im")
        try:
            phat = gp.ComplexVector(re=re, im=im)
        except FramekitError as exc:
            raise SchemaError(f"phat: {exc}")
        if len(phat) != measure.n_atoms:
            raise SchemaError(
                f"phat: {len(phat)} entries for {measure.n_atoms} atoms"
            )
    else:
        section = raw["phi_x"]
        if not isinstance(section, dict) or "grid" not in section or "values" not in section:
            raise SchemaError("phi_x: expected an object with grid and values")
        x_grid = _parse_grid(section["grid"], "phi_x.grid")
        values = _number_list(section["values"], "phi_x.values")
        if values.size != x_grid.size:
            raise SchemaError(
                f"phi_x.values: {values.size} entries for {x_grid.size} grid points"
            )
        phat = gp.fourier_at_atoms(x_grid, values, measure)
    return sigma_frame, phat


def write_kernel_file(path: str, k: rkhs.KernelMatrix, kind: str, rank_tol: float):
    payload = {"matrix": k.values, "kind": kind, "rank_tol": rank_tol}
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_json(payload))


def read_kernel_file(path: str):
    raw = _read_json(path)
    if not isinstance(raw, dict) or "matrix" not in raw:
        raise SchemaError("matrix: missing")
    return _matrix(raw["matrix"], "matrix"), raw.get("kind"), raw.get("rank_tol")


# ---------------------------------------------------------------------------
# commands


def _bool_str(x: bool) -> str:
    return "true" if x else "false"


def cmd_analyze(args) -> int:
    fs = parse_frame_file(args.path)
    report = frames.compute_frame_bounds(fs, args.rank_tol)
    print(
        f"N={fs.n_vectors} M={fs.n_points} rank={report.rank} "
        f"B1={_fmt_human(report.lower)} B2={_fmt_human(report.upper)} "
        f"frame={_bool_str(report.is_frame)} "
        f"parseval={_bool_str(report.is_parseval)}"
    )
    return EXIT_OK


def cmd_kernel(args) -> int:
    fs = parse_frame_file(args.path)
    if args.naive:
        kernel = rkhs.naive_kernel(fs)
        kind = "naive"
    else:
        kernel = rkhs.rk_kernel(fs, args.rank_tol)
        kind = "rkhs"
    eig = sym_eig(_as_sym(kernel.values))
    psd_violation = max(0.0, -float(eig.eigenvalues[-1]))
    residual = 0.0
    for row in fs.vectors:
        residual = max(residual, rkhs.verify_reproducing(fs, kernel, row))
    if args.out:
        write_kernel_file(args.out, kernel, kind, args.rank_tol)
        print(f"wrote {args.out}")
    print(
        f"kind={kind} M={fs.n_points} "
        f"psd_violation={_fmt_human(psd_violation)} "
        f"max_reproducing_residual={_fmt_human(residual)}"
    )
    return EXIT_OK


def cmd_hilbert(args) -> int:
    sizes = _parse_sizes(args.sizes)
    rows = classic.hilbert_spectrum_report(sizes)
    print("n lam_max lam_min pi_minus_lam_max")
    for row in rows:
        print(
            f"{row.n} {_fmt_human(row.lam_max)} {_fmt_human(row.lam_min)} "
            f"{_fmt_human(row.pi_gap)}"
        )
    lam = [row.lam_max for row in rows]
    if any(x >= math.pi for x in lam):
        print("violation: lam_max reached pi", file=sys.stderr)
        return EXIT_MATH
    ordered = sorted(range(len(rows)), key=lambda i: rows[i].n)
    if any(
        lam[ordered[i]] >= lam[ordered[i + 1]]
        and rows[ordered[i]].n < rows[ordered[i + 1]].n
        for i in range(len(ordered) - 1)
    ):
        print("violation: lam_max not increasing with n", file=sys.stderr)
        return EXIT_MATH
    return EXIT_OK


def cmd_gp_sim(args) -> int:
    sigma_frame, phat = parse_model_file(args.path)
    model = gp.GaussianModel.from_frame(sigma_frame, args.rank_tol)
    report = gp.sandwich_check(model, phat)
    sampled = gp.sample_kl(model, phat, args.samples, args.seed)
    empirical = gp.empirical_variance(sampled)
    ex2, ey2 = gp.theoretical_variances(model, phat)
    print(
        f"a={_fmt_human(model.a)} b={_fmt_human(model.b)} "
        f"cauchy_mass={_fmt_human(model.frame.measure.cauchy_mass())}"
    )
    print(
        f"ex2={_fmt_human(ex2)} ey2={_fmt_human(ey2)} "
        f"ey2_empirical={_fmt_human(empirical)} "
        f"samples={args.samples} seed={args.seed}"
    )
    print(
        f"sandwich {_fmt_human(report.lower)} <= {_fmt_human(report.middle)} "
        f"<= {_fmt_human(report.upper)}: "
        f"{'holds' if report.holds else 'VIOLATED'}"
    )
    return EXIT_OK if report.holds else EXIT_SANDWICH


def cmd_canonical(args) -> int:
    fs = parse_frame_file(args.path)
    tight = rkhs.canonical_tight(fs, args.rank_tol)
    out = tight.as_frame_system()
    gram = frames.build_gramian(out)
    eig = sym_eig(gram.matrix)
    projector_residual = float(
        np.max(np.abs(eig.eigenvalues * (eig.eigenvalues - 1.0)))
    )
    if args.out:
        write_frame_file(args.out, out)
        print(f"wrote {args.out}")
    print(
        f"N={out.n_vectors} M={out.n_points} "
        f"projector_residual={_fmt_human(projector_residual)}"
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    fs = parse_frame_file(args.path)
    residuals = identity_suite(fs, args.rank_tol)
    worst_scaled = 0.0
    for name, (value, tolerance) in residuals.items():
        print(f"{name}={_fmt_human(value)} (tolerance {_fmt_human(tolerance)})")
        worst_scaled = max(worst_scaled, value / tolerance)
    if worst_scaled > 1.0:
        print("violation: identity residual above tolerance", file=sys.stderr)
        return EXIT_MATH
    return EXIT_OK


def identity_suite(fs: frames.FrameSystem, rank_tol: float) -> dict:
    """Max residuals of the frame/kernel identities on deterministic probes.

    Returns {name: (residual, tolerance)}.  Probes are the frame vectors
    themselves plus synthesized combinations, so everything lies in the span.
    Identities that route through the Gramian pseudo-inverse lose digits in
    proportion to the retained condition number (Hilbert-type systems reach
    1e10), so their pass gates widen from the 1e-8 floor accordingly.
    """
    gram = frames.build_gramian(fs)
    kernel = rkhs.rk_kernel(fs, rank_tol)
    tight = rkhs.canonical_tight(fs, rank_tol)
    lax = rkhs.lax_milgram(fs, rank_tol)
    n = fs.n_vectors

    kernel_vs_tight = float(
        np.max(np.abs(kernel.values - rkhs.kernel_from_tight(tight).values))
    )

    probes = [fs.vectors[i] for i in range(n)]
    coeffs = [np.zeros(n) for _ in range(min(n, 3))]
    for i, c in enumerate(coeffs):
        c[i] = 1.0
        c[(i + 1) % n] = -0.5
        probes.append(frames.synthesis(fs, c))

    reproducing = 0.0
    norms = [1.0]
    for f in probes:
        reproducing = max(reproducing, rkhs.verify_reproducing(fs, kernel, f))
        norms.append(frames.weighted_norm(fs.grid, f))
    scale = max(norms)

    lax_residual = 0.0
    for f in probes:
        for g in probes:
            lax_residual = max(lax_residual, rkhs.verify_lax_identity(fs, lax, f, g))

    isometry = 0.0
    adjoint = 0.0
    for i in range(min(n, 6)):
        c = np.zeros(n)
        c[i] = 1.0
        c[n - 1 - i] += 0.25
        lhs, rhs = rkhs.isometry_check(fs, c)
        isometry = max(isometry, abs(lhs - rhs) / max(1.0, abs(rhs)))
        for f in probes[: min(len(probes), 4)]:
            left = float(np.dot(frames.analysis(fs, f), c))
            right = frames.weighted_inner(fs.grid, f, frames.synthesis(fs, c))
            adjoint = max(adjoint, abs(left - right) / max(1.0, abs(right)))

    eig = sym_eig(_as_sym(kernel.values))
    lam_max = max(float(eig.eigenvalues[0]), 0.0)
    psd_violation = max(0.0, -float(eig.eigenvalues[-1]))

    gram_eig = sym_eig(gram.matrix)
    gram_psd = max(0.0, -float(gram_eig.eigenvalues[-1]))
    gram_lam_max = float(gram_eig.eigenvalues[0])
    gram_scale = max(gram_lam_max, 1.0)
    keep = gram_eig.eigenvalues > rank_tol * gram_lam_max
    retained = gram_eig.eigenvalues[keep]
    kappa = gram_lam_max / float(retained[-1]) if retained.size else 1.0
    inverse_gate = max(1e-8, 1.1e-14 * kappa)
    # probes hold genuine mass along eigendirections the rank cut discards;
    # the kernel reproduces only the retained span, so allow for that tail
    cut = gram_eig.eigenvalues[~keep]
    cut_max = float(cut[0]) if cut.size else 0.0
    if cut_max <= 100 * 2.2e-16 * gram_lam_max:
        cut_max = 0.0
    truncation = 2.0 * math.sqrt(cut_max / float(np.min(fs.grid.weights)))

    return {
        "max_reproducing_residual": (reproducing, inverse_gate * scale + truncation),
        "kernel_vs_tight_max": (kernel_vs_tight, inverse_gate * max(1.0, lam_max)),
        "lax_identity_max": (lax_residual, inverse_gate * max(1.0, scale * scale)),
        "isometry_relative_max": (isometry, 1e-10),
        "adjoint_relative_max": (adjoint, 1e-10),
        "kernel_psd_violation": (psd_violation, 1e-9 * max(1.0, lam_max)),
        "gramian_psd_violation": (gram_psd, 1e-10 * gram_scale),
    }


def _as_sym(values: np.ndarray):
    from .spectral import SymMatrix

    return SymMatrix(values)


def _parse_sizes(raw: str) -> list[int]:
    try:
        sizes = [int(chunk) for chunk in raw.split(",") if chunk.strip()]
    except ValueError:
        raise InvalidArgument(f"--sizes expects comma-separated integers, got {raw!r}")
    if not sizes:
        raise InvalidArgument("--sizes is empty")
    return sizes


# ---------------------------------------------------------------------------
# dispatch


def _build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument(
        "--rank-tol",
        type=float,
        default=DEFAULT_RANK_TOL,
        help="relative eigenvalue threshold for rank decisions",
    )
    shared.add_argument("--out", default=None, help="output file path")
    shared.add_argument("--seed", type=int, default=0, help="sampling seed")
    shared.add_argument(
        "--samples", type=int, default=200_000, help="Monte-Carlo sample count"
    )
    shared.add_argument(
        "--naive",
        action="store_true",
        help="plain vector-sum kernel instead of the inverse-Gramian kernel",
    )

    parser = argparse.ArgumentParser(
        prog="framekit",
        description="Frame bounds, reproducing kernels, and KL Gaussian sampling",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[shared], help="frame bounds of a frame file")
    p.add_argument("path")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("kernel", parents=[shared], help="write the kernel matrix")
    p.add_argument("path")
    p.set_defaults(func=cmd_kernel)

    p = sub.add_parser("hilbert", parents=[shared], help="Hilbert spectrum table")
    p.add_argument("--sizes", required=True, help="comma-separated matrix sizes")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("gp-sim", parents=[shared], help="KL sandwich simulation")
    p.add_argument("path")
    p.set_defaults(func=cmd_gp_sim)

    p = sub.add_parser(
        "canonical", parents=[shared], help="write the canonical tight frame"
    )
    p.add_argument("path")
    p.set_defaults(func=cmd_canonical)

    p = sub.add_parser("verify", parents=[shared], help="run the identity suite")
    p.add_argument("path")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISSING
    except SchemaError as exc:
        print(f"schema error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except (InvalidArgument, InvalidMatrix, DimensionMismatch, InvalidIndex) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except (ZeroSpan, NotAFrame) as exc:
        print(f"degenerate input: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
