from itertools import combinations
from typing import List


def shapes_up_to(n_max: int, n_min: int = 2) -> List[str]:
    """Every flag shape "n1,...,nl/n" with n_min <= n <= n_max."""
    return [
        f"{','.join(map(str, steps))}/{n}"
        for n in range(n_min, n_max + 1)
        for length in range(1, n)
        for steps in combinations(range(1, n), length)
    ]
