class GeometryError(Exception):
    pass


class SingularMatrix(GeometryError):
    pass


class DegenerateSimplex(GeometryError):
    pass


class DimensionMismatch(GeometryError):
    pass


class DimensionTooLarge(GeometryError):
    pass


class UnsupportedOrder(GeometryError):
    pass


class GenerationFailed(GeometryError):
    pass


class PreconditionFailed(GeometryError):
    pass
