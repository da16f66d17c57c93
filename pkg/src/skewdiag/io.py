"""JSON encodings.

Element texts: qq as a rational string "p/q"; hq as four rational
strings; hf as four numbers; gf2/gf3/gf4 as a residue integer; asq as
four {"num": bits, "den": bits} objects in basis order 1, u, v, uv with
bit lists low degree first.  Matrices carry their ring tag, shape and a
nested row-major entry array.  Certificates, decompositions, Waring
witnesses and width tables build on those.
"""

from fractions import Fraction

from .certificates import DiagCertificate, Decomposition, WaringWitness
from .errors import FormatError
from .gf2x import RatFun, bits_of, from_bits
from .matrices import DRMatrix
from .rings import ASQ, HF, HQ, QQ, ASQ4, FQuat, GFRing, Quat, Rat, ring_by_name


def encode_element(x):
    ring = x.ring
    if ring is QQ:
        return str(x.value)
    if ring is HQ:
        return [str(x.a), str(x.b), str(x.c), str(x.d)]
    if ring is HF:
        return [x.a, x.b, x.c, x.d]
    if isinstance(ring, GFRing):
        return x.v
    if ring is ASQ:
        return [{"num": bits_of(c.num), "den": bits_of(c.den)} for c in x.comps()]
    raise FormatError(f"cannot encode elements of {ring.name}")


def decode_element(ring, obj):
    try:
        if ring is QQ:
            return Rat(Fraction(obj))
        if ring is HQ:
            a, b, c, d = obj
            return Quat(Fraction(a), Fraction(b), Fraction(c), Fraction(d))
        if ring is HF:
            a, b, c, d = obj
            return FQuat(float(a), float(b), float(c), float(d))
        if isinstance(ring, GFRing):
            return ring.element(int(obj))
        if ring is ASQ:
            comps = [RatFun(from_bits(o["num"]), from_bits(o["den"])) for o in obj]
            return ASQ4(*comps)
    except FormatError:
        raise
    except (ValueError, TypeError, KeyError, ZeroDivisionError) as exc:
        raise FormatError(f"bad {ring.name} element {obj!r}: {exc}") from None
    raise FormatError(f"cannot decode elements of {ring.name}")


def encode_matrix(M: DRMatrix):
    return {
        "ring": M.ring.name,
        "rows": M.rows,
        "cols": M.cols,
        "entries": [[encode_element(M[i, j]) for j in range(M.cols)]
                    for i in range(M.rows)],
    }


def decode_matrix(obj) -> DRMatrix:
    try:
        ring = ring_by_name(obj["ring"])
        rows = int(obj["rows"])
        cols = int(obj["cols"])
        entries = obj["entries"]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad matrix object: {exc}") from None
    if not isinstance(entries, list) or len(entries) != rows:
        raise FormatError("entry array does not match the row count")
    flat = []
    for row in entries:
        if not isinstance(row, list) or len(row) != cols:
            raise FormatError("entry row does not match the column count")
        flat.extend(decode_element(ring, e) for e in row)
    return DRMatrix(ring, rows, cols, flat)


def encode_decomposition(dec: Decomposition):
    return {
        "mode": dec.mode,
        "target": encode_matrix(dec.target),
        "parts": [{"P": encode_matrix(p.P),
                   "diag": [encode_element(d) for d in p.diag],
                   "target": encode_matrix(p.target)}
                  for p in dec.parts],
    }


def decode_decomposition(obj) -> Decomposition:
    try:
        mode = obj["mode"]
        target = decode_matrix(obj["target"])
        raw_parts = obj["parts"]
    except (KeyError, TypeError) as exc:
        raise FormatError(f"bad decomposition object: {exc}") from None
    parts = []
    for rp in raw_parts:
        try:
            P = decode_matrix(rp["P"])
            diag = [decode_element(P.ring, d) for d in rp["diag"]]
            ptarget = decode_matrix(rp["target"])
        except (KeyError, TypeError) as exc:
            raise FormatError(f"bad decomposition part: {exc}") from None
        parts.append(DiagCertificate(P, diag, ptarget))
    if mode not in ("sum", "product"):
        raise FormatError(f"bad decomposition mode {mode!r}")
    return Decomposition(mode, parts, target)


def encode_witness(w: WaringWitness):
    out = {
        "mode": w.mode,
        "target": encode_matrix(w.target),
        "parts": [encode_matrix(w.X), encode_matrix(w.Y)],
    }
    if w.mode == "lincomb":
        out["ks"] = list(w.ks)
        out["coeffs"] = [encode_element(c) for c in w.coeffs]
    else:
        out["k"] = w.ks[0]
    return out


def decode_witness(obj) -> WaringWitness:
    try:
        mode = obj["mode"]
        target = decode_matrix(obj["target"])
        X = decode_matrix(obj["parts"][0])
        Y = decode_matrix(obj["parts"][1])
        if "ks" in obj:
            ks = tuple(int(k) for k in obj["ks"])
        else:
            ks = (int(obj["k"]),)
        coeffs = tuple(decode_element(target.ring, c)
                       for c in obj.get("coeffs", []))
    except (KeyError, TypeError, IndexError, ValueError) as exc:
        raise FormatError(f"bad witness object: {exc}") from None
    if mode not in ("sum", "product", "lincomb", "squares"):
        raise FormatError(f"bad witness mode {mode!r}")
    return WaringWitness(mode, ks, X, Y, target, coeffs=coeffs)


def decode_payload(obj):
    """Certificate-bearing payloads: decomposition or Waring witness."""
    if not isinstance(obj, dict):
        raise FormatError("payload must be a JSON object")
    if "k" in obj or "ks" in obj:
        return decode_witness(obj)
    return decode_decomposition(obj)


def encode_payload(obj):
    if isinstance(obj, Decomposition):
        return encode_decomposition(obj)
    if isinstance(obj, WaringWitness):
        return encode_witness(obj)
    raise FormatError(f"cannot encode {type(obj).__name__}")


def random_fuzz_element(ring, rng):
    return ring.random_element(rng)
