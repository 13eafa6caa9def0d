from ..core.exceptions import AntimagicError


class GraphFormatError(AntimagicError):
    def __init__(self, message: str, line_number: int or None = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class InvalidGraphParameters(AntimagicError):
    pass


class NotLabellableError(AntimagicError):
    def __init__(self, isolated_edges=(), message: str or None = None):
        self.isolated_edges = list(isolated_edges)
        if message is None:
            message = f"graph has isolated edge(s) {self.isolated_edges}, " \
                      f"no labelling can distinguish their endpoints"
        super().__init__(message)
