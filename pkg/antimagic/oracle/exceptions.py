from ..core.exceptions import AntimagicError


class InvalidDifferenceSpec(AntimagicError):
    pass
