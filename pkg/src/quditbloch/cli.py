"""Batch command-line front end.

Subcommands: ``basis dump``, ``state make``, ``decompose``, ``measure``,
``sweep``, ``selftest``. JSON goes to stdout as a single document, logs to
stderr. Exit codes: 0 success, 1 usage error, 2 domain/contract error.
Floats are emitted with 17 significant digits so identical invocations are
byte-identical.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

import numpy as np

from .bases import BasisKind, get_basis
from .bloch import Convention, bloch_encode, purity
from .entanglement import (RegionLabel, hs_measure_isotropic,
                           hs_measure_qubit_plane, hs_measure_qutrit_plane)
from .gilbert import GilbertConfig, nearest_separable_numeric
from .linalg import (TOL_PSD, BipartiteState, is_hermitian, matrix_from_json,
                     matrix_to_json, partial_transpose)
from .states import (bell_state, isotropic_state, two_param_qubit,
                     two_param_qutrit, weyl_bell_projector)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _json_dumps(obj) -> str:
    """JSON with fixed 17-significant-digit float formatting."""
    out = io.StringIO()
    _write_json(obj, out)
    return out.getvalue()


def _write_json(obj, out) -> None:
    if obj is None:
        out.write("null")
    elif obj is True or obj is False:
        out.write("true" if obj else "false")
    elif isinstance(obj, (int, np.integer)):
        out.write(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        out.write(_fmt(obj))
    elif isinstance(obj, str):
        out.write(json.dumps(obj))
    elif isinstance(obj, dict):
        out.write("{")
        for i, (k, v) in enumerate(obj.items()):
            if i:
                out.write(", ")
            out.write(json.dumps(str(k)))
            out.write(": ")
            _write_json(v, out)
        out.write("}")
    elif isinstance(obj, (list, tuple)):
        out.write("[")
        for i, v in enumerate(obj):
            if i:
                out.write(", ")
            _write_json(v, out)
        out.write("]")
    else:
        raise TypeError(f"cannot serialize {type(obj)!r}")


def _matrix_json(mat) -> dict:
    doc = matrix_to_json(mat)
    return {"dim": doc["dim"], "re": doc["re"], "im": doc["im"]}


def _label_str(label) -> str:
    return ":".join(str(x) for x in label)


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise RuntimeError(f"cannot write output file {path!r}: {exc}") from exc


def _read_matrix(path: str) -> np.ndarray:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise RuntimeError(f"cannot read input file {path!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON in {path!r}: {exc}") from exc
    return matrix_from_json(doc)


def _cmd_basis_dump(args) -> int:
    basis = get_basis(args.kind, args.dim)
    if args.format == "json":
        doc = {
            "kind": basis.kind.value,
            "dim": basis.dim,
            "ortho_const": basis.ortho_const,
            "elements": [
                {"label": _label_str(lab), "matrix": _matrix_json(el)}
                for lab, el in zip(basis.labels, basis.elements)
            ],
        }
        _emit(_json_dumps(doc) + "\n", args.out)
    else:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["label", "row", "col", "re", "im"])
        for lab, el in zip(basis.labels, basis.elements):
            for r in range(basis.dim):
                for c in range(basis.dim):
                    writer.writerow([_label_str(lab), r, c,
                                     _fmt(el[r, c].real), _fmt(el[r, c].imag)])
        _emit(out.getvalue(), args.out)
    return 0


def _make_state(args):
    fam = args.family
    checked = not args.unchecked
    if fam == "bell":
        return bell_state(args.dim)
    if fam == "isotropic":
        if args.alpha is None:
            raise _UsageError("--alpha is required for isotropic states")
        return isotropic_state(args.dim, args.alpha, checked=checked)
    if fam == "qubit2p":
        if args.alpha is None or args.beta is None:
            raise _UsageError("--alpha and --beta are required for qubit2p")
        return two_param_qubit(args.alpha, args.beta, checked=checked)
    if fam == "qutrit2p":
        if args.alpha is None or args.beta is None:
            raise _UsageError("--alpha and --beta are required for qutrit2p")
        return two_param_qutrit(args.alpha, args.beta, checked=checked)
    if fam == "weylproj":
        if args.n is None or args.k is None:
            raise _UsageError("--n and --k are required for weylproj")
        return weyl_bell_projector(args.dim, args.n, args.k)
    raise _UsageError(f"unknown family {fam!r}")


def _cmd_state_make(args) -> int:
    state = _make_state(args)
    _emit(_json_dumps(_matrix_json(state.matrix)) + "\n", args.out)
    return 0


def _cmd_decompose(args) -> int:
    mat = _read_matrix(args.infile)
    if not is_hermitian(mat):
        raise ValueError("input state is not Hermitian")
    tr = np.trace(mat)
    if abs(tr - 1.0) > 1e-8:
        raise ValueError(f"input state trace {tr} is not 1")
    vec = bloch_encode(mat, args.kind, Convention(args.convention))
    physical = bool(np.linalg.eigvalsh((mat + mat.conj().T) / 2)[0] >= -TOL_PSD)
    doc = {
        "kind": args.kind,
        "dim": vec.dim,
        "convention": vec.convention.value,
        "labels": [_label_str(lab) for lab in vec.labels],
        "re": [float(x) for x in vec.components.real],
        "im": [float(x) for x in vec.components.imag],
        "radius": vec.radius,
        "purity": purity(mat),
        "is_physical": physical,
    }
    _emit(_json_dumps(doc) + "\n", args.out)
    return 0


def _witness_json(report) -> dict:
    return {
        "operator": _matrix_json(report.operator),
        "ent_expectation": report.ent_expectation,
        "sep_min_estimate": report.sep_min_estimate,
        "verdict": report.verdict.value,
        "method": report.method.value,
    }


def _cmd_measure(args) -> int:
    fam = args.family
    if fam == "isotropic":
        if args.alpha is None:
            raise _UsageError("--alpha is required")
        d = args.dim
        lo = -1.0 / (d * d - 1)
        if not (lo - 1e-12 <= args.alpha <= 1 + 1e-12):
            region, result = "Unphysical", None
        elif args.alpha <= 1.0 / (d + 1) + 1e-12:
            region, result = "Separable", None
        else:
            region = "Entangled"
            result = hs_measure_isotropic(d, args.alpha)
        ent = isotropic_state(d, args.alpha, checked=False) if region != "Unphysical" else None
    elif fam in ("qubit2p", "qutrit2p"):
        if args.alpha is None or args.beta is None:
            raise _UsageError("--alpha and --beta are required")
        fn = hs_measure_qubit_plane if fam == "qubit2p" else hs_measure_qutrit_plane
        label, result = fn(args.alpha, args.beta)
        region = label.value
        mk = two_param_qubit if fam == "qubit2p" else two_param_qutrit
        ent = mk(args.alpha, args.beta, checked=False) if label is not RegionLabel.UNPHYSICAL else None
    else:
        raise _UsageError(f"unknown family {fam!r}")

    doc = {"family": fam, "alpha": args.alpha, "region": region}
    if fam != "isotropic":
        doc["beta"] = args.beta
    else:
        doc["dim"] = args.dim
    if result is not None:
        doc["D"] = result.distance
        doc["B"] = result.max_violation
        doc["rho0"] = _matrix_json(result.nearest_separable.matrix)
        doc["witness"] = _witness_json(result.witness)
        if args.oracle:
            cfg = GilbertConfig(seed=args.seed)
            doc["oracle_D"] = nearest_separable_numeric(ent, cfg).distance
    else:
        doc["D"] = None
    _emit(_json_dumps(doc) + "\n", args.out)
    return 0


@dataclass(frozen=True)
class SweepSpec:
    """Grid over the (alpha, beta) plane of a two-parameter family."""

    family: str                        # "qubit2p" | "qutrit2p"
    alpha_range: tuple[float, float, int]
    beta_range: tuple[float, float, int]
    outputs: tuple[str, ...] = ("region", "hs_measure", "min_eigenvalue", "ppt_min_eigenvalue")

    def __post_init__(self):
        if self.family not in ("qubit2p", "qutrit2p"):
            raise ValueError(f"unknown sweep family {self.family!r}")
        for name, (lo, hi, steps) in (("alpha", self.alpha_range), ("beta", self.beta_range)):
            if steps < 2:
                raise ValueError(f"{name} steps must be >= 2, got {steps}")
            if not lo < hi:
                raise ValueError(f"{name} range needs min < max, got [{lo}, {hi}]")
        bad = set(self.outputs) - {"region", "hs_measure", "min_eigenvalue", "ppt_min_eigenvalue"}
        if bad:
            raise ValueError(f"unknown sweep outputs: {sorted(bad)}")


_SWEEP_COLUMNS = {
    "region": "region",
    "hs_measure": "D",
    "min_eigenvalue": "min_eig",
    "ppt_min_eigenvalue": "ppt_min_eig",
}


def run_sweep(spec: SweepSpec) -> list[dict]:
    """One row per grid point, beta-major order.

    ``D`` is None for separable and unphysical points; eigenvalue columns are
    computed from the unchecked construction so unphysical points are probed
    too.
    """
    measure = hs_measure_qubit_plane if spec.family == "qubit2p" else hs_measure_qutrit_plane
    make = two_param_qubit if spec.family == "qubit2p" else two_param_qutrit
    alphas = np.linspace(*spec.alpha_range[:2], spec.alpha_range[2])
    betas = np.linspace(*spec.beta_range[:2], spec.beta_range[2])
    rows = []
    for beta in betas:
        for alpha in alphas:
            row = {"alpha": float(alpha), "beta": float(beta)}
            label, result = measure(float(alpha), float(beta))
            if "region" in spec.outputs:
                row["region"] = label.value
            if "hs_measure" in spec.outputs:
                row["D"] = None if result is None else result.distance
            if "min_eigenvalue" in spec.outputs or "ppt_min_eigenvalue" in spec.outputs:
                state = make(float(alpha), float(beta), checked=False)
                if "min_eigenvalue" in spec.outputs:
                    row["min_eig"] = float(np.linalg.eigvalsh(state.matrix)[0])
                if "ppt_min_eigenvalue" in spec.outputs:
                    pt = partial_transpose(state.matrix, "B", state.subdim)
                    row["ppt_min_eig"] = float(np.linalg.eigvalsh(pt)[0])
            rows.append(row)
    return rows


def _cmd_sweep(args) -> int:
    outputs = tuple(args.outputs) if args.outputs else \
        ("region", "hs_measure", "min_eigenvalue", "ppt_min_eigenvalue")
    spec = SweepSpec(args.family,
                     (args.alpha[0], args.alpha[1], int(args.alpha[2])),
                     (args.beta[0], args.beta[1], int(args.beta[2])),
                     outputs)
    rows = run_sweep(spec)
    columns = ["alpha", "beta"] + [_SWEEP_COLUMNS[o] for o in
                                   ("region", "hs_measure", "min_eigenvalue", "ppt_min_eigenvalue")
                                   if o in spec.outputs]
    if args.format == "json":
        doc = {"family": spec.family, "columns": columns, "rows": rows}
        _emit(_json_dumps(doc) + "\n", args.out)
    else:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            rec = []
            for col in columns:
                val = row.get(col)
                if val is None:
                    rec.append("")
                elif isinstance(val, float):
                    rec.append(_fmt(val))
                else:
                    rec.append(val)
            writer.writerow(rec)
        _emit(out.getvalue(), args.out)
    return 0


def _selftest_checks(seed: int):
    from .bases import expand_standard_ggb, expand_standard_pob, expand_standard_wob, reconstruct
    from .bloch import bloch_decode
    from .linalg import hs_inner, hs_norm
    from .states import random_density_matrix

    rng = np.random.default_rng(seed)

    def orthogonality():
        worst = 0.0
        for d in range(2, 7):
            for kind in BasisKind:
                basis = get_basis(kind, d)
                stack = basis.stacked
                gram = np.einsum("iab,jab->ij", stack.conj(), stack)
                off = np.abs(gram - np.diag(np.diag(gram))).max()
                diag = np.abs(np.diag(gram).real[1:] - basis.ortho_const).max()
                worst = max(worst, off, diag)
        return worst, 1e-12

    def expansions():
        worst = 0.0
        for d in range(2, 5):
            for j in range(1, d + 1):
                for k in range(1, d + 1):
                    target = np.zeros((d, d), dtype=complex)
                    target[j - 1, k - 1] = 1
                    for kind, expand in ((BasisKind.GGB, expand_standard_ggb),
                                         (BasisKind.POB, expand_standard_pob)):
                        got = reconstruct(get_basis(kind, d), expand(d, j, k))
                        worst = max(worst, float(np.abs(got - target).max()))
                    got = reconstruct(get_basis(BasisKind.WOB, d),
                                      expand_standard_wob(d, j - 1, k - 1))
                    worst = max(worst, float(np.abs(got - target).max()))
        return worst, 1e-12

    def round_trip():
        worst = 0.0
        for d in range(2, 5):
            for kind in BasisKind:
                for _ in range(20):
                    rho = random_density_matrix(d, rng)
                    dec = bloch_decode(bloch_encode(rho, kind))
                    worst = max(worst, hs_norm(dec.matrix - rho.matrix))
        return worst, 1e-10

    def isotropic_identities():
        worst = 0.0
        for d in range(2, 5):
            res = hs_measure_isotropic(d, 0.9)
            expected = np.sqrt(d * d - 1.0) / d * (0.9 - 1.0 / (d + 1))
            worst = max(worst, abs(res.distance - expected),
                        abs(res.max_violation - res.distance),
                        abs(hs_inner(res.nearest_separable.matrix, res.witness.operator).real))
        return worst, 1e-10

    return [("basis orthogonality (d=2..6)", orthogonality),
            ("standard-matrix expansions (d=2..4)", expansions),
            ("Bloch round trip (d=2..4)", round_trip),
            ("isotropic measure identities (d=2..4)", isotropic_identities)]


def _cmd_selftest(args) -> int:
    failures = 0
    print(f"{'check':<40} {'worst':>12} {'bound':>9} result", file=sys.stdout)
    for name, fn in _selftest_checks(args.seed):
        worst, bound = fn()
        ok = worst <= bound
        failures += 0 if ok else 1
        print(f"{name:<40} {worst:>12.3e} {bound:>9.0e} {'PASS' if ok else 'FAIL'}")
    return 0 if failures == 0 else 2


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="quditbloch",
                     description="Operator bases, Bloch vectors, and entanglement geometry for qudits.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_basis = sub.add_parser("basis", help="operator basis utilities")
    basis_sub = p_basis.add_subparsers(dest="basis_command", required=True)
    p_dump = basis_sub.add_parser("dump", help="emit all basis elements with labels")
    p_dump.add_argument("--kind", required=True, choices=[k.value for k in BasisKind])
    p_dump.add_argument("--dim", required=True, type=int)
    p_dump.add_argument("--format", default="json", choices=["json", "csv"])
    p_dump.add_argument("--out", default=None, metavar="FILE")
    p_dump.set_defaults(fn=_cmd_basis_dump)

    p_state = sub.add_parser("state", help="state construction")
    state_sub = p_state.add_subparsers(dest="state_command", required=True)
    p_make = state_sub.add_parser("make", help="build a state and emit its matrix JSON")
    p_make.add_argument("--family", required=True,
                        choices=["bell", "isotropic", "qubit2p", "qutrit2p", "weylproj"])
    p_make.add_argument("--dim", type=int, default=2)
    p_make.add_argument("--alpha", type=float, default=None)
    p_make.add_argument("--beta", type=float, default=None)
    p_make.add_argument("--n", type=int, default=None)
    p_make.add_argument("--k", type=int, default=None)
    p_make.add_argument("--unchecked", action="store_true",
                        help="skip the physicality check (boundary studies)")
    p_make.add_argument("--out", default=None, metavar="FILE")
    p_make.set_defaults(fn=_cmd_state_make)

    p_dec = sub.add_parser("decompose", help="Bloch decomposition of a state file")
    p_dec.add_argument("--kind", required=True, choices=[k.value for k in BasisKind])
    p_dec.add_argument("--in", dest="infile", required=True, metavar="FILE")
    p_dec.add_argument("--convention", default="coeff", choices=["coeff", "expval"])
    p_dec.add_argument("--out", default=None, metavar="FILE")
    p_dec.set_defaults(fn=_cmd_decompose)

    p_meas = sub.add_parser("measure", help="HS measure, witness, and region")
    p_meas.add_argument("--family", required=True,
                        choices=["isotropic", "qubit2p", "qutrit2p"])
    p_meas.add_argument("--dim", type=int, default=2)
    p_meas.add_argument("--alpha", type=float, default=None)
    p_meas.add_argument("--beta", type=float, default=None)
    p_meas.add_argument("--oracle", action="store_true",
                        help="also run the numeric nearest-separable oracle")
    p_meas.add_argument("--seed", type=int, default=0)
    p_meas.add_argument("--out", default=None, metavar="FILE")
    p_meas.set_defaults(fn=_cmd_measure)

    p_sweep = sub.add_parser("sweep", help="parameter-plane sweep dataset")
    p_sweep.add_argument("--family", required=True, choices=["qubit2p", "qutrit2p"])
    p_sweep.add_argument("--alpha", nargs=3, type=float, required=True,
                         metavar=("MIN", "MAX", "STEPS"))
    p_sweep.add_argument("--beta", nargs=3, type=float, required=True,
                         metavar=("MIN", "MAX", "STEPS"))
    p_sweep.add_argument("--outputs", nargs="+", default=None,
                         choices=["region", "hs_measure", "min_eigenvalue", "ppt_min_eigenvalue"])
    p_sweep.add_argument("--format", default="csv", choices=["json", "csv"])
    p_sweep.add_argument("--out", default=None, metavar="FILE")
    p_sweep.set_defaults(fn=_cmd_sweep)

    p_self = sub.add_parser("selftest", help="run the built-in verification suite")
    p_self.add_argument("--seed", type=int, default=0)
    p_self.set_defaults(fn=_cmd_selftest)

    return parser


def cli_main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
