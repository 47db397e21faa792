"""Deterministic JSON command line: one subcommand per computation.

Every subcommand echoes its inputs, names the quantity it computes in a
"reference" field, and emits sorted-key JSON so identical invocations are
byte-identical.  Exit code 2 flags bad invocations (including missing
files), 1 flags domain errors raised by the computation itself, 0 is
success.  `--json-schema` on any subcommand prints the shipped schema for
its output and exits.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path

from .caps import SizeCapError
from .category import CategoryParams, GradedMorphism, compose
from .centre import h_vector, list_centre_simples
from .cyclotomic import CycNum, approx_complex, to_json
from .frobenius import InadmissibleMarkingError, frobenius_zr, nakayama
from .frobenius import sigma_F as _sigma_F
from .linalg import rank_cyc
from .modular import ModularDataError, load_modular_data, sphere_charge_dim
from .rspin import (
    MarkedPLCW,
    count_rspin,
    enumerate_admissible,
    is_admissible,
    sphere_decomposition,
    standard_decomposition,
)
from .spaces import annulus_hom_dim, sn_closed_dim, sphere_sn_dim, tilde_bp_operator

COMMANDS = (
    "sn-dim",
    "sphere",
    "torus-basis",
    "bp-operator",
    "annulus",
    "rspin-count",
    "rspin-enumerate",
    "rspin-check",
    "sigma-f",
    "frobenius-check",
    "charge",
    "validate-modular",
)


class _FlagError(Exception):
    """Bad invocation detected after argparse; exits with code 2."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        _emit({"error": message})
        raise SystemExit(2)


class _SchemaAction(argparse.Action):
    def __init__(self, option_strings, dest, command=None, **kwargs):
        super().__init__(
            option_strings,
            dest,
            nargs=0,
            help="print this subcommand's output schema and exit",
        )
        self.command = command

    def __call__(self, parser, namespace, values, option_string=None):
        sys.stdout.write(schema_text(self.command))
        raise SystemExit(0)


def schema_text(command: str) -> str:
    if command not in COMMANDS:
        raise ValueError(f"unknown subcommand {command!r}")
    return (
        resources.files("stringnet").joinpath("schemas", f"{command}.json").read_text()
    )


def _emit(payload: dict) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _render(a: CycNum, approx: bool) -> dict:
    obj = to_json(a)
    if approx:
        z = approx_complex(a)
        obj["approx"] = f"{z.real:.12g}{z.imag:+.12g}j"
    return obj


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _nonnegative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}"
        ) from None


def _existing_file(text: str) -> Path:
    path = Path(text)
    if not path.is_file():
        raise _FlagError(f"no such file: {text}")
    return path


def _decomposition(genus: int):
    return sphere_decomposition() if genus == 0 else standard_decomposition(genus)


def _marking(args) -> MarkedPLCW:
    complex_ = _decomposition(args.genus)
    n_edges = len(complex_.edges)
    if len(args.indices) != n_edges:
        raise _FlagError(
            f"genus {args.genus} needs {n_edges} indices, got {len(args.indices)}"
        )
    return MarkedPLCW(complex_, args.r, dict(enumerate(args.indices)))


def _cmd_sn_dim(args) -> dict:
    return {
        "inputs": {"r": args.r, "genus": args.genus},
        "reference": "closed-surface string-net dimension r^2g when r divides 2-2g",
        "dim": sn_closed_dim(CategoryParams(args.r), args.genus),
    }


def _cmd_sphere(args) -> dict:
    return {
        "inputs": {"r": args.r},
        "reference": "sphere string-net dimension via sum of dim_r(U)^2 over Dim",
        "dim": sphere_sn_dim(CategoryParams(args.r)),
    }


def _cmd_torus_basis(args) -> dict:
    params = CategoryParams(args.r)
    vectors = []
    coords_matrix = []
    for z in list_centre_simples(params):
        v = h_vector(z, params)
        vectors.append(
            {"z": z.to_json(), "coords": [_render(c, args.approx) for c in v.coords]}
        )
        coords_matrix.append(list(v.coords))
    rank = rank_cyc([list(col) for col in zip(*coords_matrix)]) if vectors else 0
    return {
        "inputs": {"r": args.r},
        "reference": "torus vectors h_Z, one per simple of the centre",
        "vectors": vectors,
        "rank": rank,
    }


def _cmd_bp_operator(args) -> dict:
    report = tilde_bp_operator(
        CategoryParams(args.r),
        args.genus,
        cap=args.cap,
        orientation=args.orientation,
    )
    return {
        "inputs": {"r": args.r, "genus": args.genus, "orientation": args.orientation},
        "reference": "plaquette projector on the genus-g handle space",
        "dim": args.r ** (2 * args.genus),
        "scalar": _render(report.analytic_scalar, args.approx),
        "matrix": [
            [_render(entry, args.approx) for entry in row]
            for row in report.operator_matrix
        ],
        "rank": report.image_rank,
    }


def _cmd_annulus(args) -> dict:
    if not (0 <= args.a < args.r and 0 <= args.b < args.r):
        raise _FlagError(f"boundary grades must lie in 0..{args.r - 1}")
    return {
        "inputs": {"r": args.r, "a": args.a, "b": args.b},
        "reference": "annulus space dimension r when the boundary grades agree",
        "dim": annulus_hom_dim(args.a, args.b, CategoryParams(args.r)),
    }


def _cmd_rspin_count(args) -> dict:
    return {
        "inputs": {"r": args.r, "genus": args.genus},
        "reference": "closed-form r-spin count r^2g when r divides 2-2g",
        "count": count_rspin(args.genus, args.r),
    }


def _cmd_rspin_enumerate(args) -> dict:
    complex_ = _decomposition(args.genus)
    edge_ids = [e.id for e in complex_.edges]
    markings = enumerate_admissible(complex_, args.r, cap=args.cap)
    rows = [[m.edge_index[i] for i in edge_ids] for m in markings]
    return {
        "inputs": {"r": args.r, "genus": args.genus},
        "reference": "admissible edge-index assignments on the standard decomposition",
        "count": len(rows),
        "markings": rows,
    }


def _cmd_rspin_check(args) -> dict:
    report = is_admissible(_marking(args))
    return {
        "inputs": {"r": args.r, "genus": args.genus, "indices": list(args.indices)},
        "reference": "per-vertex residues of one edge-index assignment",
        "admissible": report.ok,
        "residues": {str(v): res for v, res in sorted(report.residues.items())},
    }


def _cmd_sigma_f(args) -> dict:
    marking = _marking(args)
    vector = _sigma_F(marking, frobenius_zr(CategoryParams(args.r)))
    return {
        "inputs": {"r": args.r, "genus": args.genus, "indices": list(args.indices)},
        "reference": "state-sum vector of an admissible marking in the handle space",
        "marking": marking.to_json(),
        "vector": {
            "r": vector.r,
            "genus": vector.genus,
            "coords": [_render(c, args.approx) for c in vector.coords],
        },
    }


def _cmd_frobenius_check(args) -> dict:
    f_data = frobenius_zr(CategoryParams(args.r))
    pair = nakayama(f_data)
    ident = GradedMorphism.identity(f_data.object)
    power = pair.forward
    order = 1
    while power != ident:
        power = compose(pair.forward, power)
        order += 1
    return {
        "inputs": {"r": args.r},
        "reference": "Frobenius axioms and the Nakayama automorphism of the group algebra",
        "nakayama_diagonal": [
            _render(pair.forward.matrix[a][a], args.approx) for a in range(args.r)
        ],
        "nakayama_order": order,
    }


def _cmd_charge(args) -> dict:
    data = load_modular_data(_existing_file(args.data))
    return {
        "inputs": {"data": args.data, "j": args.j, "u": args.u, "v": args.v},
        "reference": "dimension of the one-marked-point sphere space at background J",
        "dim": sphere_charge_dim(args.j, args.u, args.v, data),
    }


def _cmd_validate_modular(args) -> dict:
    path = _existing_file(args.data)
    inputs = {"data": args.data}
    reference = "defining identities of an unnormalized s-matrix"
    try:
        load_modular_data(path)
    except ModularDataError as exc:
        return {
            "inputs": inputs,
            "reference": reference,
            "valid": False,
            "violations": list(exc.violations),
        }
    return {"inputs": inputs, "reference": reference, "valid": True, "violations": []}


def _build_parser() -> _Parser:
    parser = _Parser(prog="stringnet", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def command(name, handler, **arguments):
        p = sub.add_parser(name)
        for flag, options in arguments.items():
            p.add_argument(f"--{flag}", **options)
        p.add_argument("--json-schema", action=_SchemaAction, command=name)
        p.set_defaults(handler=handler)
        return p

    r_flag = {"type": _positive_int, "required": True}
    genus_flag = {"type": _nonnegative_int, "required": True}
    cap_flag = {"type": _positive_int, "default": None}
    approx_flag = {"action": "store_true"}
    indices_flag = {
        "type": _int_list,
        "required": True,
        "help": "comma-separated edge indices in edge order",
    }

    command("sn-dim", _cmd_sn_dim, r=r_flag, genus=genus_flag)
    command("sphere", _cmd_sphere, r=r_flag)
    command("torus-basis", _cmd_torus_basis, r=r_flag, approx=approx_flag)
    command(
        "bp-operator",
        _cmd_bp_operator,
        r=r_flag,
        genus=genus_flag,
        orientation={
            "choices": ["anticlockwise", "clockwise"],
            "default": "anticlockwise",
        },
        cap=cap_flag,
        approx=approx_flag,
    )
    command(
        "annulus",
        _cmd_annulus,
        r=r_flag,
        a={"type": _nonnegative_int, "required": True},
        b={"type": _nonnegative_int, "required": True},
    )
    command("rspin-count", _cmd_rspin_count, r=r_flag, genus=genus_flag)
    command(
        "rspin-enumerate", _cmd_rspin_enumerate, r=r_flag, genus=genus_flag, cap=cap_flag
    )
    command("rspin-check", _cmd_rspin_check, r=r_flag, genus=genus_flag, indices=indices_flag)
    command(
        "sigma-f",
        _cmd_sigma_f,
        r=r_flag,
        genus=genus_flag,
        indices=indices_flag,
        approx=approx_flag,
    )
    command("frobenius-check", _cmd_frobenius_check, r=r_flag, approx=approx_flag)
    command(
        "charge",
        _cmd_charge,
        data={"required": True, "help": "modular-data JSON file"},
        j={"required": True},
        u={"required": True},
        v={"required": True},
    )
    command("validate-modular", _cmd_validate_modular, data={"required": True})
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        payload = args.handler(args)
    except _FlagError as exc:
        _emit({"error": str(exc)})
        return 2
    except SizeCapError as exc:
        _emit({"error": str(exc), "size": exc.size, "cap": exc.cap})
        return 1
    except InadmissibleMarkingError as exc:
        _emit(
            {
                "error": str(exc),
                "residues": {str(v): res for v, res in sorted(exc.report.residues.items())},
            }
        )
        return 1
    except ModularDataError as exc:
        _emit({"error": str(exc), "violations": list(exc.violations)})
        return 1
    except ValueError as exc:
        _emit({"error": str(exc)})
        return 1
    _emit(payload)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
