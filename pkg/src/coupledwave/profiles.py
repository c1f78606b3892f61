from dataclasses import dataclass, field
from typing import Callable

import numpy as np

__all__ = ["TravelingWave"]


@dataclass(frozen=True)
class TravelingWave:
    """A profile u(xi) moving at speed ``c``.

    ``func`` must accept arrays and must not raise at poles (it may return
    inf/nan there); ``poles`` lists the pole locations in xi so that
    verifiers can exclude their neighbourhoods.
    """

    func: Callable[[np.ndarray], np.ndarray]
    c: float = 0.0
    poles: tuple = ()
    periodic: bool = False
    label: str = ""
    extra: dict = field(default_factory=dict, compare=False)

    def __call__(self, xi):
        return self.func(np.asarray(xi, dtype=float))

    def at(self, x, t):
        x = np.asarray(x, dtype=float)
        t = np.asarray(t, dtype=float)
        return self.func(x - self.c * t)

    def mapped(self, fn, label=None):
        """Pointwise transform of the profile value, keeping poles and speed."""
        return TravelingWave(
            lambda xi: fn(self.func(xi)),
            c=self.c,
            poles=self.poles,
            periodic=self.periodic,
            label=label or self.label,
        )
