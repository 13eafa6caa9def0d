class AntimagicError(Exception):
    pass


class SizeCapExceeded(AntimagicError):
    pass
