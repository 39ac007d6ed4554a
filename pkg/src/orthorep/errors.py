"""Exception hierarchy shared across the package.

Every error that names lattice elements, ring elements or vectors keeps
the witness on the exception object so reports can echo it.
"""


class OrthorepError(Exception):
    """Base class for all package errors."""


# ---------------------------------------------------------------- lattices

class NotALattice(OrthorepError):
    def __init__(self, a, b, what="infimum"):
        self.pair = (a, b)
        self.what = what
        super().__init__(f"elements {a} and {b} have no unique {what}")


class NoBounds(OrthorepError):
    pass


class TooLarge(OrthorepError):
    def __init__(self, size, guard):
        self.size = size
        self.guard = guard
        super().__init__(f"size {size} exceeds enumeration guard {guard}")


# ------------------------------------------------------------ ortholattices

class NotInvolution(OrthorepError):
    def __init__(self, a):
        self.witness = a
        super().__init__(f"perp(perp({a})) != {a}")


class NotOrderReversing(OrthorepError):
    def __init__(self, a, b):
        self.witness = (a, b)
        super().__init__(f"{a} <= {b} but perp({b}) <= perp({a}) fails")


class NotComplement(OrthorepError):
    def __init__(self, a):
        self.witness = a
        super().__init__(f"{a} and perp({a}) are not complementary")


class PreconditionFailed(OrthorepError):
    pass


class InternalProofViolation(OrthorepError):
    """An identity that must hold under the stated preconditions failed.

    Signals bad input that slipped past validation (e.g. a non-modular
    lattice) or a library defect; never a normal outcome.
    """


# -------------------------------------------------------------------- rings

class NotARing(OrthorepError):
    pass


class NotRegular(OrthorepError):
    def __init__(self, witness=None):
        self.witness = witness
        super().__init__(f"ring is not regular (witness element: {witness})")


class NotStarRegular(OrthorepError):
    def __init__(self, witness=None):
        self.witness = witness
        super().__init__(f"no projection generator exists (witness: {witness})")


class NotProjection(OrthorepError):
    def __init__(self, witness=None):
        self.witness = witness
        super().__init__(f"element is not a projection: {witness}")


class InfiniteLattice(OrthorepError):
    pass


# ------------------------------------------------------------------- spaces

class NotOrthosymmetric(OrthorepError):
    def __init__(self, v, w):
        self.witness = (v, w)
        super().__init__(f"<v,w>=0 but <w,v>!=0 for v={v}, w={w}")


class Isotropic(OrthorepError):
    def __init__(self, vector=None, detail=""):
        self.vector = vector
        if vector is not None:
            msg = f"nonzero vector {vector} has <v,v>=0"
        else:
            msg = "form is not definite; anisotropy certificate failed"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class NotInvertibleGram(OrthorepError):
    pass


class NotClosed(OrthorepError):
    pass


# ---------------------------------------------------------- representations

class WellDefinednessViolation(OrthorepError):
    def __init__(self, a, b):
        self.witness = (a, b)
        super().__init__("aR = bR but im iota(a) != im iota(b)")


class PerpViolation(OrthorepError):
    def __init__(self, witness, expected, got):
        self.witness = witness
        self.expected = expected
        self.got = got
        super().__init__(
            f"eta(perp) mismatch at {witness}: expected {expected}, got {got}")


class NoSolution(OrthorepError):
    pass


class CancellationFailure(OrthorepError):
    pass


class StepFailure(OrthorepError):
    def __init__(self, step, witness):
        self.step = step
        self.witness = witness
        super().__init__(f"step {step} failed at witness {witness}")


class NotAFrame(OrthorepError):
    pass


class NonPrimeField(OrthorepError):
    pass


class ClosureFailure(OrthorepError):
    pass


class FrameImageDegenerate(OrthorepError):
    pass


class LibraryInconsistency(OrthorepError):
    """A verified mathematical fact failed on validated input."""
