import numpy as np


class RunStats:
    """Bookkeeping of a Las Vegas run or of a Monte Carlo batch.

    Attributes
    ----------
    rounds: int
        Las Vegas attempts used, 0 for pure Monte Carlo runs
    trials: int
        random labellings drawn
    successes: int
        local antimagic labellings among them
    per_edge_collisions: np.ndarray
        for every edge, number of trials giving both endpoints the same sum
    wall_time: float
        seconds spent
    pair_collisions: np.ndarray
        for every extra vertex pair tracked by a Monte Carlo run, number of trials giving both the same sum
    """
    __slots__ = ['rounds', 'trials', 'successes', 'per_edge_collisions', 'pair_collisions', 'wall_time']

    def __init__(self, rounds: int, trials: int, successes: int, per_edge_collisions: np.ndarray,
                 wall_time: float = 0., pair_collisions: np.ndarray or None = None):
        if not 0 <= successes <= trials:
            raise ValueError(f"successes must lie in [0, {trials}], got {successes}")
        self.rounds = int(rounds)
        self.trials = int(trials)
        self.successes = int(successes)
        self.per_edge_collisions = np.asarray(per_edge_collisions, dtype=np.int64)
        self.wall_time = float(wall_time)
        self.pair_collisions = np.asarray(pair_collisions if pair_collisions is not None else [], dtype=np.int64)

    def __repr__(self):
        return f"<RunStats: rounds={self.rounds} successes={self.successes}/{self.trials}>"

    def __add__(self, other: "RunStats") -> "RunStats":
        return RunStats(self.rounds + other.rounds, self.trials + other.trials, self.successes + other.successes,
                        self.per_edge_collisions + other.per_edge_collisions,
                        max(self.wall_time, other.wall_time), self.pair_collisions + other.pair_collisions)

    def to_dictionary(self) -> dict:
        return {
            "rounds": self.rounds,
            "trials": self.trials,
            "successes": self.successes,
            "per_edge_collisions": self.per_edge_collisions.tolist(),
            "wall_time": self.wall_time
        }
