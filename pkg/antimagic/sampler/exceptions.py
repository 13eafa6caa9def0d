from ..core.exceptions import AntimagicError


class RoundsExhaustedError(AntimagicError):
    def __init__(self, rounds: int):
        self.rounds = rounds
        super().__init__(f"no local antimagic labelling found within {rounds} rounds")


class VerificationFailure(AntimagicError):
    """A labelling produced as local antimagic failed its final check."""
    pass
