from ..core.exceptions import AntimagicError


class CommandLineError(AntimagicError):
    """Inconsistent or missing command line options."""
    pass
