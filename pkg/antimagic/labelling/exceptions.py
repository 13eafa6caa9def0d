from ..core.exceptions import AntimagicError


class LabellingFormatError(AntimagicError):
    def __init__(self, message: str, line_number: int or None = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
