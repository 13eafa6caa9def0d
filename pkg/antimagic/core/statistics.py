import math
from fractions import Fraction
from typing import Tuple

from scipy.stats import norm

from ..config import sampler as sampler_cfg


class Estimate:
    """Monte Carlo estimate of a probability with its Wilson score interval.

    Attributes
    ----------
    successes: int
        number of successful trials
    trials: int
        number of trials
    p_hat: Fraction
        exact ratio successes / trials
    ci_low: float
        lower bound of the confidence interval, never above p_hat
    ci_high: float
        upper bound of the confidence interval, never below p_hat
    confidence: float
        confidence level used to build the interval
    """
    __slots__ = ['successes', 'trials', 'p_hat', 'ci_low', 'ci_high', 'confidence']

    def __init__(self, successes: int, trials: int, confidence: float or None = None):
        if trials <= 0:
            raise ValueError(f"trials must be positive, got {trials}")
        if not 0 <= successes <= trials:
            raise ValueError(f"successes must lie in [0, {trials}], got {successes}")
        self.successes = int(successes)
        self.trials = int(trials)
        self.confidence = float(confidence if confidence is not None else sampler_cfg.confidence())
        self.p_hat = Fraction(self.successes, self.trials)
        low, high = wilson_interval(self.successes, self.trials, self.confidence)
        p = float(self.p_hat)
        self.ci_low = min(low, p)
        self.ci_high = max(high, p)

    def __repr__(self):
        return f"<Estimate: {float(self.p_hat):.6g} [{self.ci_low:.6g}, {self.ci_high:.6g}] over {self.trials} trials>"

    def contains(self, value) -> bool:
        return self.ci_low <= float(value) <= self.ci_high

    def to_dictionary(self) -> dict:
        return {
            "successes": self.successes,
            "trials": self.trials,
            "p_hat": float(self.p_hat),
            "ci_low": self.ci_low,
            "ci_high": self.ci_high,
            "confidence": self.confidence
        }


def wilson_interval(successes: int, trials: int, confidence: float) -> Tuple[float, float]:
    """Wilson score interval for a binomial proportion.

    Parameters
    ----------
    successes: int
        observed successes
    trials: int
        number of trials, must be positive
    confidence: float
        two sided confidence level in (0, 1)

    Returns
    -------
    Tuple[float, float]
        interval bounds clamped to [0, 1]

    Examples
    --------
    >>> low, high = wilson_interval(0, 100, 0.95)
    >>> round(low, 6)
    0.0
    >>> round(high, 4)
    0.037
    """
    if not 0. < confidence < 1.:
        raise ValueError(f"confidence must lie in (0, 1), got {confidence}")
    z = float(norm.ppf(1. - (1. - confidence) / 2.))
    p = successes / trials
    denominator = 1. + z * z / trials
    centre = (p + z * z / (2. * trials)) / denominator
    half_width = z * math.sqrt(p * (1. - p) / trials + z * z / (4. * trials * trials)) / denominator
    return max(0., centre - half_width), min(1., centre + half_width)


def family_confidence(checks: int, family_confidence_level: float = 0.99) -> float:
    """Per-check confidence so that checks intervals hold jointly with family_confidence_level (Bonferroni).

    Examples
    --------
    >>> round(family_confidence(10, 0.99), 6)
    0.999
    """
    return 1. - (1. - family_confidence_level) / max(int(checks), 1)
