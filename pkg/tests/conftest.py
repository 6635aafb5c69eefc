from fractions import Fraction

from hypothesis import settings, strategies as st

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

small_fractions = st.fractions(min_value=-50, max_value=50, max_denominator=40)


@st.composite
def polynomials(draw, max_degree=8, nonzero=False):
    coeffs = draw(st.lists(small_fractions, min_size=1 if nonzero else 0, max_size=max_degree + 1))
    if nonzero and all(c == 0 for c in coeffs):
        coeffs[-1] = Fraction(1)
    return coeffs


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import SCORECARD

    if SCORECARD:
        terminalreporter.section("acceptance scorecard")
        for k in sorted(SCORECARD):
            terminalreporter.write_line(SCORECARD[k])
