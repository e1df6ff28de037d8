import math

import hypothesis.strategies as st

from bellwigner import AngleConfig, AngleConvention, DataSetTriple

TAU = 2 * math.pi

angles = st.floats(min_value=0.0, max_value=TAU, exclude_max=True, allow_nan=False)
conventions = st.sampled_from(AngleConvention)
configs = st.builds(AngleConfig, a=angles, b=angles, bp=angles, convention=conventions)

outcomes = st.sampled_from((1, -1))
trial_rows = st.tuples(outcomes, outcomes, outcomes)
quad_rows = st.tuples(outcomes, outcomes, outcomes, outcomes)
datasets = st.lists(trial_rows, min_size=1, max_size=64).map(DataSetTriple.from_trials)
