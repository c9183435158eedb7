"""Published census of Calabi-Yau complete-intersection 3-folds in partial flag manifolds.

Rows are listed in publication order, keyed by shape text. Each splitting of the
anticanonical class is written as a sum of degree vectors with multiplicities,
e.g. "2(1,0)+6(0,1)".
"""
import re
from typing import Dict, List, Tuple

REFERENCE_SPLITTINGS: Dict[str, Tuple[str, ...]] = {
    "2/7": (
        "7(1)",
    ),
    "1,2/7": (
        "2(1,0)+6(0,1)",
    ),
    "1,5/7": (
        "5(1,0)+6(0,1)",
    ),
    "1,2,6/7": (
        "2(1,0,0)+5(0,1,0)+5(0,0,1)",
    ),
    "2/6": (
        "(2)+4(1)",
    ),
    "3/6": (
        "6(1)",
    ),
    "1,2/6": (
        "(2,0)+5(0,1)",
        "(1,0)+(1,1)+4(0,1)",
        "2(1,0)+(0,2)+3(0,1)",
    ),
    "1,3/6": (
        "3(1,0)+5(0,1)",
    ),
    "1,4/6": (
        "(2,0)+2(1,0)+5(0,1)",
        "3(1,0)+(1,1)+4(0,1)",
        "4(1,0)+(0,2)+3(0,1)",
    ),
    "1,2,5/6": (
        "(2,0,0)+4(0,1,0)+4(0,0,1)",
        "(1,0,0)+(1,1,0)+3(0,1,0)+4(0,0,1)",
        "(1,0,0)+(1,0,1)+4(0,1,0)+3(0,0,1)",
        "2(1,0,0)+(0,2,0)+2(0,1,0)+4(0,0,1)",
        "2(1,0,0)+(0,1,1)+3(0,1,0)+3(0,0,1)",
        "2(1,0,0)+4(0,1,0)+(0,0,2)+2(0,0,1)",
    ),
    "1,3,5/6": (
        "3(1,0,0)+4(0,1,0)+3(0,0,1)",
    ),
    "2/5": (
        "(3)+2(1)",
        "2(2)+(1)",
    ),
    "1,2/5": (
        "(2,0)+(0,2)+2(0,1)",
        "(1,0)+(1,1)+(0,2)+(0,1)",
        "2(1,1)+2(0,1)",
        "2(1,0)+2(0,2)",
        "(1,0)+(1,2)+2(0,1)",
        "(2,1)+3(0,1)",
    ),
    "2,3/5": (
        "(1,0)+(2,0)+3(0,1)",
        "2(1,0)+(1,1)+2(0,1)",
    ),
    "1,3/5": (
        "(3,0)+4(0,1)",
        "(1,0)+(2,1)+3(0,1)",
        "(1,1)+(2,0)+3(0,1)",
        "(1,0)+2(1,1)+2(0,1)",
        "(1,0)+(2,0)+(0,2)+2(0,1)",
        "3(1,0)+2(0,2)",
        "3(1,0)+(0,1)+(0,3)",
        "2(1,0)+(1,2)+2(0,1)",
    ),
    "1,2,4/5": (
        "2(1,0,0)+(0,3,0)+3(0,0,1)",
        "2(1,0,0)+3(0,1,0)+(0,0,3)",
        "(2,1,0)+2(0,1,0)+3(0,0,1)",
        "(2,0,1)+3(0,1,0)+2(0,0,1)",
        "(1,2,0)+(1,0,0)+(0,1,0)+3(0,0,1)",
        "2(1,0,0)+(0,2,1)+(0,1,0)+2(0,0,1)",
        "2(1,0,0)+(0,1,2)+2(0,1,0)+(0,0,1)",
        "(1,0,0)+(1,0,2)+3(0,1,0)+(0,0,1)",
        "(1,1,1)+(1,0,0)+2(0,1,0)+2(0,0,1)",
        "(2,0,0)+(0,2,0)+(0,1,0)+3(0,0,1)",
        "(2,0,0)+(0,0,2)+3(0,1,0)+(0,0,1)",
        "2(1,0,0)+(0,2,0)+(0,1,0)+(0,0,2)+(0,0,1)",
        "2(1,1,0)+(0,1,0)+3(0,0,1)",
        "(1,1,0)+(1,0,1)+2(0,1,0)+2(0,0,1)",
        "(1,1,0)+(1,0,0)+(0,1,1)+(0,1,0)+2(0,0,1)",
        "2(1,0,0)+2(0,1,1)+(0,1,0)+(0,0,1)",
        "(1,0,0)+(1,0,1)+(0,1,1)+2(0,1,0)+(0,0,1)",
        "2(1,0,1)+3(0,1,0)+(0,0,1)",
        "(2,0,0)+(0,1,1)+2(0,1,0)+2(0,0,1)",
        "(1,1,0)+(0,2,0)+(1,0,0)+3(0,0,1)",
        "(1,0,1)+(0,2,0)+(1,0,0)+(0,1,0)+2(0,0,1)",
        "2(1,0,0)+(0,2,0)+(0,1,1)+2(0,0,1)",
        "(1,1,0)+(1,0,0)+2(0,1,0)+(0,0,2)+(0,0,1)",
        "(1,0,1)+(1,0,0)+3(0,1,0)+(0,0,2)",
        "2(1,0,0)+(0,1,1)+2(0,1,0)+(0,0,2)",
    ),
    "1,2,3/5": (
        "(2,0,0)+2(0,1,0)+3(0,0,1)",
        "(0,2,0)+2(1,0,0)+3(0,0,1)",
        "(0,0,2)+2(1,0,0)+2(0,1,0)+(0,0,1)",
        "(1,1,0)+(1,0,0)+(0,1,0)+3(0,0,1)",
        "(1,0,1)+(1,0,0)+2(0,1,0)+2(0,0,1)",
        "(0,1,1)+2(1,0,0)+(0,1,0)+2(0,0,1)",
    ),
    "1,2,3,4/5": (
        "(2,0,0,0)+2(0,1,0,0)+2(0,0,1,0)+2(0,0,0,1)",
        "2(1,0,0,0)+(0,2,0,0)+2(0,0,1,0)+2(0,0,0,1)",
        "(1,1,0,0)+(1,0,0,0)+(0,1,0,0)+2(0,0,1,0)+2(0,0,0,1)",
        "(1,0,0,1)+(1,0,0,0)+2(0,1,0,0)+2(0,0,1,0)+(0,0,0,1)",
        "(1,0,1,0)+(1,0,0,0)+2(0,1,0,0)+(0,0,1,0)+2(0,0,0,1)",
        "(0,1,1,0)+2(1,0,0,0)+(0,1,0,0)+(0,0,1,0)+2(0,0,0,1)",
    ),
    "2/4": (
        "(4)",
    ),
    "1,2/4": (
        "(1,0)+(1,3)",
        "(1,1)+(1,2)",
        "(2,1)+(0,2)",
        "(2,2)+(0,1)",
    ),
    "1,2,3/4": (
        "(2,0,0)+(0,2,0)+(0,0,2)",
        "(1,1,0)+(1,0,1)+(0,1,1)",
        "(1,2,0)+(1,0,0)+(0,0,2)",
        "(1,2,0)+(1,0,1)+(0,0,1)",
        "(2,1,0)+(0,1,0)+(0,0,2)",
        "(2,1,0)+(0,1,1)+(0,0,1)",
        "(2,0,1)+(0,2,0)+(0,0,1)",
        "(2,0,1)+(0,1,1)+(0,1,0)",
        "2(1,1,0)+(0,0,2)",
        "2(1,0,1)+(0,2,0)",
        "(2,2,0)+2(0,0,1)",
        "(2,0,2)+2(0,1,0)",
    ),
}

_TERM = re.compile(r"^(\d*)\(([\d,]+)\)$")


def parse_splitting(text: str) -> Tuple[Tuple[int, ...], ...]:
    parts: List[Tuple[int, ...]] = []
    for term in text.replace(" ", "").split("+"):
        match = _TERM.match(term)
        if not match:
            raise ValueError(f"malformed splitting term '{term}'")
        multiplicity = int(match.group(1)) if match.group(1) else 1
        vector = tuple(int(x) for x in match.group(2).split(","))
        parts.extend([vector] * multiplicity)
    return tuple(parts)


def reference_order() -> List[str]:
    return list(REFERENCE_SPLITTINGS)
