import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

FIG1 = [
    [0, 2, 2, 1, 1, 2, 2, 1],
    [2, 0, 2, 1, 1, 2, 2, 1],
    [2, 2, 0, 1, 1, 2, 2, 1],
    [1, 1, 1, 0, 1, 2, 2, 1],
    [1, 1, 1, 1, 0, 2, 2, 1],
    [2, 2, 2, 2, 2, 0, 2, 1],
    [2, 2, 2, 2, 2, 2, 0, 1],
    [1, 1, 1, 1, 1, 1, 1, 0],
]

# det(D - xI) of FIG1, monic, ascending; frozen from charpoly_interp
FIG1_MONIC = [-16, -240, -848, -1300, -1011, -404, -70, 0, 1]
