"""Exception types raised across the package."""


class SpherewrightError(ValueError):
    pass


class MixedDimensions(SpherewrightError):
    pass


class FaceNotInComplex(SpherewrightError):
    pass


class WrongDimension(SpherewrightError):
    pass


class GroundSetTooSmall(SpherewrightError):
    pass


class InvalidN(SpherewrightError):
    pass


class OutOfRange(SpherewrightError):
    pass


class ApexCollision(SpherewrightError):
    pass


class InvalidSite(SpherewrightError):
    pass


class SiteRejected(SpherewrightError):
    """E(a, u) is not an interior edge of its ball, so the site cannot host a bipyramid."""

    def __init__(self, a, u, reason=""):
        self.site = (a, u)
        msg = f"site ({a},{u}) rejected"
        if reason:
            msg += f": {reason}"
        super().__init__(msg)


class MaskLengthMismatch(SpherewrightError):
    pass


class TooLarge(SpherewrightError):
    pass


class LimitExceeded(SpherewrightError):
    pass


class ParseError(SpherewrightError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
