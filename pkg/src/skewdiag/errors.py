"""Exception hierarchy.

Every error that can cross the CLI boundary carries a stable ``code``
string; the CLI maps SkewdiagError to exit status 3 and emits the code
in a JSON object on stderr.
"""


class SkewdiagError(Exception):
    code = "error"

    def __init__(self, message=""):
        super().__init__(message or self.code)


class RingMismatch(SkewdiagError):
    code = "ring-mismatch"


class ShapeMismatch(SkewdiagError):
    code = "shape-mismatch"


class DivisionByZero(SkewdiagError):
    code = "division-by-zero"


class Singular(SkewdiagError):
    code = "singular"


class CenterTooSmall(SkewdiagError):
    code = "center-too-small"


class ZeroX(SkewdiagError):
    code = "zero-x"


class NotNilpotent(SkewdiagError):
    code = "not-nilpotent"


class NotInvolution(SkewdiagError):
    code = "not-involution"


class CharTwo(SkewdiagError):
    code = "char-two"


class NotCharTwo(SkewdiagError):
    code = "not-char-two"


class NonCentralRoot(SkewdiagError):
    code = "non-central-root"


class RootMismatch(SkewdiagError):
    code = "root-mismatch"


class RepeatedRoot(SkewdiagError):
    code = "repeated-root"


class UnsupportedRing(SkewdiagError):
    code = "unsupported-ring"


class AnnihilatorFails(SkewdiagError):
    code = "annihilator-fails"


class NotInvertible(SkewdiagError):
    code = "not-invertible"


class GF3Unsupported(SkewdiagError):
    code = "gf3-unsupported"


class GF2NonsingularUnreachable(SkewdiagError):
    code = "gf2-nonsingular-unreachable"


class GF2ProductUnreachable(SkewdiagError):
    code = "gf2-product-unreachable"


class TooLarge(SkewdiagError):
    code = "too-large"


class IllConditioned(SkewdiagError):
    code = "ill-conditioned"


class FormatError(SkewdiagError):
    """Malformed JSON payload; maps to the usage exit code."""

    code = "format-error"
