from dataclasses import dataclass
from typing import Callable


@dataclass(frozen=True)
class LimitEigenpair:
    """
    Eigenpair of the h -> 0 Newtonian-potential operator on the unit ball,
    with eta0 = 1. ``u0`` is normalized in L2 of the ball.
    """
    lambda0: float
    u0: Callable
    U0: float

    def __str__(self):
        return f"lambda0={self.lambda0:.15g} U0={self.U0:.15g}"
