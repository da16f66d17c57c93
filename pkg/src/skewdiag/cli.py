"""Command-line front end.

Exit codes: 0 success / verification pass, 1 verification failure,
2 usage or format error, 3 unsupported ring or theorem precondition.
Payloads go to stdout as JSON; errors go to stderr as JSON objects
{"error": code, "detail": message}.
"""

import argparse
import json
import random
import sys

from . import io as sio
from .certificates import verify_certificate
from .errors import FormatError, SkewdiagError
from .matrices import DRMatrix
from .products import product_decompose
from .rings import HF, RINGS, ring_by_name
from .sharpness import width_table
from .sums import sum_decompose
from .waring import lincomb_two, product_two_squares, waring_two

USAGE_EXIT = 2
PRECOND_EXIT = 3


def _emit(obj, out_path=None):
    text = json.dumps(obj, indent=2, sort_keys=True)
    print(text)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def _error(code, detail):
    json.dump({"error": code, "detail": str(detail)}, sys.stderr)
    sys.stderr.write("\n")


def _load_matrix(path) -> DRMatrix:
    with open(path, encoding="utf-8") as fh:
        return sio.decode_matrix(json.load(fh))


def _cmd_decompose(args) -> int:
    ring = ring_by_name(args.ring)
    A = _load_matrix(args.input)
    if A.ring is not ring:
        _error("format-error", f"input matrix ring {A.ring.name} does not match --ring {ring.name}")
        return USAGE_EXIT
    seed = args.seed
    if args.mode in ("sum", "product"):
        if args.mode == "sum":
            result = sum_decompose(A, start=seed)
        else:
            result = product_decompose(A, strategy=args.strategy, start=seed)
    else:
        if ring is not HF:
            _error("unsupported-ring", "Waring modes need --ring hf")
            return PRECOND_EXIT
        if args.mode == "waring-sum":
            result = waring_two(A, args.k, "sum", start=seed)
        elif args.mode == "waring-product":
            result = waring_two(A, args.k, "product", start=seed)
        elif args.mode == "squares":
            result = product_two_squares(A, start=seed)
        else:  # lincomb
            if args.ks is None or args.coeffs is None:
                _error("format-error", "lincomb needs --ks K1,K2 and --coeffs L1,L2")
                return USAGE_EXIT
            k1, k2 = args.ks
            l1, l2 = args.coeffs
            result = lincomb_two(A, k1, k2, l1, l2, start=seed)
    report = verify_certificate(result)
    if not report.ok:
        _error("verification-failed", report.failure)
        return 1
    _emit(sio.encode_payload(result), args.out)
    return 0


def _cmd_verify(args) -> int:
    with open(args.file, encoding="utf-8") as fh:
        payload = sio.decode_payload(json.load(fh))
    report = verify_certificate(payload)
    _emit(report.to_json())
    return 0 if report.ok else 1


def _cmd_sharpness(args) -> int:
    ring = ring_by_name(args.field)
    table = width_table(ring, args.n, args.mode, jobs=args.jobs)
    _emit(table.to_json(), args.out)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(table.to_csv())
    return 0


def _cmd_roundtrip(args) -> int:
    rng = random.Random(args.seed)
    failures = 0
    checked = 0
    for name, ring in RINGS.items():
        for _ in range(args.count):
            x = ring.random_element(rng)
            enc = sio.encode_element(x)
            back = sio.decode_element(ring, json.loads(json.dumps(enc)))
            checked += 1
            if back != x:
                failures += 1
    _emit({"ok": failures == 0, "values": checked, "failures": failures})
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="skewdiag",
        description="decompositions of matrices over division rings, "
                    "with verifiable certificates")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("decompose", help="write a certificate or witness")
    d.add_argument("--mode", required=True,
                   choices=["sum", "product", "waring-sum", "waring-product",
                            "lincomb", "squares"])
    d.add_argument("--ring", required=True, choices=sorted(RINGS))
    d.add_argument("--input", required=True)
    d.add_argument("--out")
    d.add_argument("--k", type=int, default=2)
    d.add_argument("--ks", type=_int_pair)
    d.add_argument("--coeffs", type=_float_pair)
    d.add_argument("--strategy", default="auto",
                   choices=["auto", "char-ne2", "central-rich", "char2"])
    d.add_argument("--seed", type=int, default=0)

    v = sub.add_parser("verify", help="re-check a certificate file")
    v.add_argument("file")

    s = sub.add_parser("sharpness", help="exhaustive width table")
    s.add_argument("--field", required=True, choices=["gf2", "gf3", "gf4"])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--mode", required=True, choices=["sum", "product"])
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--out")
    s.add_argument("--csv")

    r = sub.add_parser("roundtrip", help="fuzz the JSON element encodings")
    r.add_argument("--count", type=int, default=1000)
    r.add_argument("--seed", type=int, default=0)
    return p


def _int_pair(text):
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("expected K1,K2")
    return int(parts[0]), int(parts[1])


def _float_pair(text):
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("expected L1,L2")
    return float(parts[0]), float(parts[1])


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "decompose": _cmd_decompose,
        "verify": _cmd_verify,
        "sharpness": _cmd_sharpness,
        "roundtrip": _cmd_roundtrip,
    }
    try:
        return handlers[args.command](args)
    except FileNotFoundError as exc:
        _error("format-error", exc)
        return USAGE_EXIT
    except json.JSONDecodeError as exc:
        _error("format-error", f"invalid JSON: {exc}")
        return USAGE_EXIT
    except FormatError as exc:
        _error(exc.code, exc)
        return USAGE_EXIT
    except ValueError as exc:
        _error("format-error", exc)
        return USAGE_EXIT
    except SkewdiagError as exc:
        _error(exc.code, exc)
        return PRECOND_EXIT


if __name__ == "__main__":
    sys.exit(main())
