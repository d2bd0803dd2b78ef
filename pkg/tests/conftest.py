from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from halphen.numfield import KElem

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

small_fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def kelems(draw, nonzero=False):
    coords = draw(st.lists(small_fractions, min_size=6, max_size=6))
    a = KElem(coords)
    if nonzero and a.is_zero():
        a = KElem([Fraction(1)] + coords[1:])
    return a


# one line per acceptance criterion, printed in the terminal summary
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        passed, text = ACCEPTANCE[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if passed else 'FAIL'}  {text}")
