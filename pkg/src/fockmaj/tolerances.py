"""Default numerical tolerances.

EPS_CMP governs entrywise and partial-sum comparisons, EPS_NORM the
normalization check, TAIL_EPS the discarded mass allowed per kernel column.
"""

EPS_CMP = 1e-12
EPS_NORM = 1e-10
TAIL_EPS = 1e-10
MAX_ROWS = 4096
