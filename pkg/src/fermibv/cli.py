"""JSON command-line interface.

Every subcommand reads one JSON document (stdin or ``--input``), writes one
JSON document to stdout, and reserves stderr for diagnostics.  Exit codes:
0 success, 1 constraint or canonicity failure, 2 malformed input,
3 internal consistency failure.

Output is byte-stable: keys are sorted and floats are printed with a fixed
number of significant digits (17 by default, which round-trips doubles).
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import states, transform, verification
from .errors import InternalConsistencyError
from .hamiltonian import (
    ExternalFieldHamiltonian,
    diagonalize,
    transform_fermi_oscillator,
)
from .transform import (
    AxisAngle,
    BVCoefficients,
    KappaTriple,
    axis_angle_from_coefficients,
    compose,
    from_axis_angle,
    invert,
    isotropic_frame,
    random_canonical,
    rotation_matrix,
    to_kappa,
    validate,
)

EXIT_OK = 0
EXIT_CONSTRAINT = 1
EXIT_MALFORMED = 2
EXIT_INTERNAL = 3


class PayloadError(Exception):
    """The request payload does not match the subcommand's schema."""


# ---------------------------------------------------------------------------
# stable JSON rendering


def render_json(doc, precision: int = 17) -> str:
    """Serialize with sorted keys and fixed-significant-digit floats."""
    pieces: list[str] = []
    _render(doc, precision, pieces)
    return "".join(pieces)


def _render(doc, precision: int, out: list[str]) -> None:
    if isinstance(doc, bool):
        out.append("true" if doc else "false")
    elif isinstance(doc, (int, np.integer)):
        out.append(str(int(doc)))
    elif isinstance(doc, (float, np.floating)):
        out.append(format(float(doc), f".{precision}g"))
    elif isinstance(doc, str):
        out.append(json.dumps(doc))
    elif isinstance(doc, (list, tuple)):
        out.append("[")
        for i, item in enumerate(doc):
            if i:
                out.append(",")
            _render(item, precision, out)
        out.append("]")
    elif isinstance(doc, dict):
        out.append("{")
        for i, key in enumerate(sorted(doc)):
            if i:
                out.append(",")
            out.append(json.dumps(key))
            out.append(":")
            _render(doc[key], precision, out)
        out.append("}")
    elif doc is None:
        out.append("null")
    else:
        raise TypeError(f"cannot serialize {type(doc).__name__}")


# ---------------------------------------------------------------------------
# payload parsing


def _reject_constant(name: str):
    raise PayloadError(f"non-finite JSON constant {name!r} is not accepted")


def load_payload(args) -> dict:
    if args.input:
        try:
            text = Path(args.input).read_text()
        except OSError as exc:
            raise PayloadError(f"cannot read --input file: {exc}") from exc
    else:
        text = sys.stdin.read()
    try:
        doc = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise PayloadError(f"payload is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise PayloadError("payload must be a JSON object")
    return doc


def _complex_in(doc: dict, key: str) -> complex:
    try:
        re, im = doc[key]
        return complex(float(re), float(im))
    except KeyError:
        raise PayloadError(f"missing key {key!r}") from None
    except (TypeError, ValueError):
        raise PayloadError(f"{key!r} must be a two-element [re, im] array") from None


def _real_in(doc: dict, key: str) -> float:
    value = doc.get(key)
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise PayloadError(f"{key!r} must be a number")
    return float(value)


def parse_coefficients(doc: dict) -> BVCoefficients:
    return BVCoefficients(*(_complex_in(doc, k) for k in ("l00", "l01", "l10", "l11")))


def parse_axis_angle(doc: dict) -> AxisAngle:
    phi = _real_in(doc, "phi")
    n = doc.get("n")
    if not isinstance(n, list) or len(n) != 3:
        raise PayloadError("'n' must be a three-element array")
    try:
        return AxisAngle(phi, tuple(float(v) for v in n))
    except TypeError:
        raise PayloadError("'n' components must be numbers") from None


def parse_kappa(doc: dict) -> KappaTriple:
    return KappaTriple(*(_complex_in(doc, k) for k in ("k01", "k10", "k11")))


def parse_hamiltonian(doc: dict) -> ExternalFieldHamiltonian:
    return ExternalFieldHamiltonian(_real_in(doc, "alpha"), _complex_in(doc, "beta"))


def _is_axis_angle(doc: dict) -> bool:
    return "phi" in doc and "n" in doc


def _is_kappa(doc: dict) -> bool:
    return all(k in doc for k in ("k01", "k10", "k11"))


# ---------------------------------------------------------------------------
# subcommand handlers: each returns (document, exit_code)


def _cmd_validate(args):
    report = validate(parse_coefficients(load_payload(args)), args.tolerance)
    return report.to_dict(), EXIT_OK if report.canonical else EXIT_CONSTRAINT


def _cmd_invert(args):
    nu = invert(parse_coefficients(load_payload(args)), args.tolerance)
    return nu.to_dict(), EXIT_OK


def _cmd_compose(args):
    doc = load_payload(args)
    for key in ("outer", "inner"):
        if not isinstance(doc.get(key), dict):
            raise PayloadError(f"compose payload needs an object under {key!r}")
    result = compose(
        parse_coefficients(doc["outer"]),
        parse_coefficients(doc["inner"]),
        args.tolerance,
    )
    return result.to_dict(), EXIT_OK


def _cmd_rotation(args):
    a = rotation_matrix(parse_coefficients(load_payload(args)), args.tolerance)
    return [[float(v) for v in row] for row in a], EXIT_OK


def _cmd_axis_angle(args):
    doc = load_payload(args)
    if _is_axis_angle(doc):
        return from_axis_angle(parse_axis_angle(doc)).to_dict(), EXIT_OK
    return (
        axis_angle_from_coefficients(parse_coefficients(doc), args.tolerance).to_dict(),
        EXIT_OK,
    )


def _cmd_frame(args):
    doc = load_payload(args)
    if _is_kappa(doc):
        kappa = parse_kappa(doc)
    else:
        kappa = to_kappa(parse_coefficients(doc), args.tolerance)
    frame = isotropic_frame(kappa, args.tolerance)
    return (
        {
            "e1": [float(v) for v in frame.e1],
            "e2": [float(v) for v in frame.e2],
            "e3": [float(v) for v in frame.e3],
        },
        EXIT_OK,
    )


def _cmd_diagonalize(args):
    result = diagonalize(parse_hamiltonian(load_payload(args)), args.tolerance)
    return result.to_dict(), EXIT_OK


def _cmd_transform_h(args):
    image = transform_fermi_oscillator(
        parse_coefficients(load_payload(args)), args.tolerance
    )
    return image.to_dict(), EXIT_OK


def _cmd_vacuum(args):
    doc = load_payload(args)
    if doc and _is_axis_angle(doc):
        state = states.transformed_vacuum(parse_axis_angle(doc))
    elif not doc:
        state = states.vacuum()
    else:
        raise PayloadError("vacuum payload must be {} or an axis-angle object")
    return state.to_dict(), EXIT_OK


def _cmd_sample(args):
    if args.count < 1:
        raise PayloadError("--count must be >= 1")
    rng = np.random.default_rng(args.seed)
    samples = [random_canonical(rng).to_dict() for _ in range(args.count)]
    return samples, EXIT_OK


def _cmd_verify(args):
    if args.trials < 1:
        raise PayloadError("--trials must be >= 1")
    if args.jobs < 1:
        raise PayloadError("--jobs must be >= 1")
    report = verification.run_suite(
        seed=args.seed, trials=args.trials, tolerance=args.tolerance, jobs=args.jobs
    )
    if not report.all_pass:
        print(
            "verification failed: " + ", ".join(report.failing()),
            file=sys.stderr,
        )
    return report.to_dict(), EXIT_OK if report.all_pass else EXIT_CONSTRAINT


_HANDLERS = {
    "validate": _cmd_validate,
    "invert": _cmd_invert,
    "compose": _cmd_compose,
    "rotation": _cmd_rotation,
    "axis-angle": _cmd_axis_angle,
    "frame": _cmd_frame,
    "diagonalize": _cmd_diagonalize,
    "transform-h": _cmd_transform_h,
    "vacuum": _cmd_vacuum,
    "sample": _cmd_sample,
    "verify": _cmd_verify,
}

_USAGE = {
    "validate": "report canonicity residuals of a coefficient payload",
    "invert": "invert a canonical transformation",
    "compose": "compose {\"outer\":…, \"inner\":…} coefficient payloads",
    "rotation": "3×3 rotation matrix of a coefficient payload",
    "axis-angle": "convert coefficients ↔ axis-angle (direction inferred from keys)",
    "frame": "orthonormal frame of a coefficient or kappa payload",
    "diagonalize": "diagonalize {\"alpha\":…, \"beta\":[re,im]}",
    "transform-h": "expand b†b − 1/2 over the original mode",
    "vacuum": "transformed vacuum of an axis-angle payload ({} for |0⟩)",
    "sample": "emit --count canonical coefficient sets for --seed",
    "verify": "run the invariant suite over --trials seeded trials",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fermibv",
        description="Nonlinear canonical transformations of one fermionic mode.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)
    for name, handler in _HANDLERS.items():
        p = sub.add_parser(name, help=_USAGE[name])
        p.add_argument("--input", metavar="PATH", help="read the JSON payload from a file")
        p.add_argument(
            "--tolerance",
            type=float,
            default=transform.DEFAULT_TOLERANCE,
            help="constraint tolerance (default 1e-12)",
        )
        p.add_argument(
            "--precision",
            type=int,
            default=17,
            help="significant digits in output numbers (default 17)",
        )
        p.add_argument("--seed", type=int, default=0, help="RNG seed")
        if name == "sample":
            p.add_argument("--count", type=int, default=1, help="number of samples")
        if name == "verify":
            p.add_argument("--trials", type=int, default=1000, help="trials per property")
            p.add_argument("--jobs", type=int, default=1, help="worker processes")
        p.set_defaults(handler=handler)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc, code = args.handler(args)
    except PayloadError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except InternalConsistencyError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONSTRAINT
    print(render_json(doc, args.precision))
    return code


if __name__ == "__main__":
    sys.exit(main())
