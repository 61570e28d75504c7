from __future__ import annotations

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from phicong.series import QSeries

settings.register_profile(
    "phicong",
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
    deadline=None,
)
settings.load_profile("phicong")


@st.composite
def qseries(draw, min_prec: int = -2, max_prec: int = 14) -> QSeries:
    prec = draw(st.integers(min_prec, max_prec))
    raw = draw(
        st.dictionaries(st.integers(-6, 13), st.integers(-50, 50), max_size=6)
    )
    return QSeries(prec, {e: c for e, c in raw.items() if e < prec})


@st.composite
def positive_val_qseries(draw, max_prec: int = 16) -> QSeries:
    prec = draw(st.integers(2, max_prec))
    raw = draw(
        st.dictionaries(st.integers(1, 15), st.integers(-50, 50), max_size=6)
    )
    return QSeries(prec, {e: c for e, c in raw.items() if e < prec})
