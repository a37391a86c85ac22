class FractureError(Exception):
    """
    Base class of every error raised by the fracture toolkit.
    """


class NonPositiveDeterminantError(FractureError, ValueError):
    pass


class DegenerateFrameError(FractureError, ValueError):
    pass


class NotUnitError(FractureError, ValueError):
    pass


class DimensionMismatchError(FractureError, ValueError):
    pass


class NonPositiveError(FractureError, ValueError):
    pass


class NotPositiveDefiniteError(FractureError, ValueError):
    pass


class EmptyMeshError(FractureError, ValueError):
    pass


class MeshError(FractureError, ValueError):
    pass


class ConfigError(FractureError, ValueError):
    pass


class RelaxationDivergedError(FractureError, RuntimeError):
    pass


class SingularSystemError(FractureError, RuntimeError):
    pass


class LineSearchFailedError(FractureError, RuntimeError):
    pass


class ElementInvertedError(FractureError, RuntimeError):
    """
    Raised when an element of the deformed mesh has a non-positive Jacobian.

    :param elementId: Index of the first inverted element.
    :type elementId: int
    :param determinant: Determinant of its deformation gradient.
    :type determinant: float
    """
    def __init__(self, elementId: int, determinant: float) -> None:
        self.elementId = elementId
        self.determinant = determinant
        super().__init__(f"Element {elementId} is inverted "
                         f"(det = {determinant:.6g}).")


class NotConvergedError(FractureError, RuntimeError):
    """
    Raised when the staggered scheme exhausts its iterations.

    :param residual: Last max-norm update of the staggered loop.
    :type residual: float
    :param step: Load step index, or None outside a load program.
    :type step: int | None
    """
    def __init__(self, residual: float, step: int | None = None) -> None:
        self.residual = residual
        self.step = step
        where = "" if step is None else f" at load step {step}"
        super().__init__(f"Staggered scheme did not converge{where} "
                         f"(residual {residual:.3e}).")
