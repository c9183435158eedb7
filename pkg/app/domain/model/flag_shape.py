from typing import Tuple

from pydantic import BaseModel, ConfigDict


class FlagShape(BaseModel):
    """Dimension vector (n_1 < ... < n_l) of a partial flag manifold in C^n."""

    model_config = ConfigDict(frozen=True)

    steps: Tuple[int, ...]
    ambient: int

    @property
    def length(self) -> int:
        return len(self.steps)

    @property
    def padded(self) -> Tuple[int, ...]:
        return (0, *self.steps, self.ambient)

    @property
    def blocks(self) -> Tuple[int, ...]:
        padded = self.padded
        return tuple(padded[j] - padded[j - 1] for j in range(1, len(padded)))

    @property
    def dimension(self) -> int:
        padded = self.padded
        return sum(
            (padded[i] - padded[i - 1]) * (self.ambient - padded[i])
            for i in range(1, self.length + 1)
        )

    @property
    def anticanonical(self) -> Tuple[int, ...]:
        padded = self.padded
        return tuple(padded[i + 1] - padded[i - 1] for i in range(1, self.length + 1))

    @property
    def label(self) -> str:
        return "F(%s)" % ",".join(str(x) for x in (*self.steps, self.ambient))

    @property
    def text(self) -> str:
        return "%s/%d" % (",".join(str(x) for x in self.steps), self.ambient)

    def block_of(self, column: int) -> int:
        padded = self.padded
        for j in range(1, len(padded)):
            if column <= padded[j]:
                return j
        raise ValueError(f"column {column} outside 1..{self.ambient}")

    def dual(self) -> "FlagShape":
        return FlagShape(
            steps=tuple(self.ambient - x for x in reversed(self.steps)),
            ambient=self.ambient,
        )

    @property
    def is_self_dual(self) -> bool:
        return self.dual().steps == self.steps
