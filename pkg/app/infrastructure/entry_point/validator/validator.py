from typing import List, Optional, Tuple

FORMATS = ("json", "csv", "text")


def _integer(text: str, start: int, what: str) -> int:
    if not text:
        raise ValueError(f"expected {what} at position {start}")
    for offset, char in enumerate(text):
        if not char.isdigit():
            raise ValueError(f"unexpected '{char}' at position {start + offset}")
    return int(text)


def parse_shape(text: str) -> Tuple[Tuple[int, ...], int]:
    """Split "n1,n2,.../n" into its steps and ambient dimension.

    Only the grammar is checked here; ordering and bounds are left to the
    ladder graph use case.
    """
    if text is None or not text.strip():
        raise ValueError("empty shape at position 0")
    text = text.strip()
    slash = text.find("/")
    if slash < 0:
        raise ValueError(f"missing '/' at position {len(text)}")
    if text.count("/") > 1:
        raise ValueError(f"unexpected '/' at position {text.find('/', slash + 1)}")
    steps = []
    position = 0
    for chunk in text[:slash].split(","):
        steps.append(_integer(chunk, position, "a step"))
        position += len(chunk) + 1
    ambient = _integer(text[slash + 1:], slash + 1, "the ambient dimension")
    return tuple(steps), ambient


def parse_degrees(text: Optional[str]) -> List[Tuple[int, ...]]:
    """"a,b;c,d" -> [(a, b), (c, d)]; an empty text means no degrees."""
    if text is None or not text.strip():
        return []
    degrees = []
    for j, chunk in enumerate(text.strip().split(";"), start=1):
        try:
            degrees.append(tuple(int(x) for x in chunk.split(",")))
        except ValueError:
            raise ValueError(f"degree {j} '{chunk}' is not a list of integers")
    return degrees


def parse_values(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.strip().split(","))
    except (AttributeError, ValueError):
        raise ValueError(f"values '{text}' are not a list of integers")


def parse_assignment(text: Optional[str]) -> Optional[List[Tuple[int, ...]]]:
    if text is None or not text.strip():
        return None
    return [parse_values(chunk) for chunk in text.strip().split(";")]


def validate_format(output_format: str):
    if output_format not in FORMATS:
        raise ValueError(f"format must be one of {', '.join(FORMATS)}")
    return True


def validate_seed_order(seed_order: str):
    if seed_order != "fixed":
        raise ValueError("only the fixed enumeration order is available")
    return True


def validate_degree_bound(max_degree: int, name: str = "max-deg"):
    if max_degree < 0:
        raise ValueError(f"{name} must be nonnegative")
    return True
