"""Shared invariant checks for the test modules."""

import math

POP_TOL = 1e-12
COHERENCE_TOL = 1e-10


def assert_valid_xstate(state, mass=1.0, mass_tol=1e-10):
    """Check the X-state invariants: population range, trace, coherence bound.

    ``mass`` is the expected trace (1 for per-term states, the retained
    thermal mass for truncated averages).
    """
    a, b, c, d, e = state.as_tuple()
    for name, value in zip("ABCD", (a, b, c, d)):
        assert -POP_TOL <= value <= 1.0 + POP_TOL, f"population {name} out of range: {value}"
    assert abs((a + b + c + d) - mass) <= mass_tol, f"trace {a+b+c+d} != {mass}"
    assert abs(e) <= math.sqrt(b * c) + COHERENCE_TOL, f"coherence {e} exceeds sqrt(B*C)"
