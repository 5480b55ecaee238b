"""The endpoint sets F on which the walk is conditioned."""
from __future__ import annotations

from dataclasses import dataclass
from typing import ClassVar

from .exceptions import DomainError

KINDS = ("free", "bridge", "positive", "negative", "pinned")


@dataclass(frozen=True)
class Conditioning:
    """One of Free (F = Z), Bridge (F = {0}), Positive (F = {1, 2, ...}),
    Negative (F = {-1, -2, ...}) or Pinned(j) (F = {j}, j != 0)."""

    kind: str
    j: int | None = None

    FREE: ClassVar["Conditioning"]
    BRIDGE: ClassVar["Conditioning"]
    POSITIVE: ClassVar["Conditioning"]
    NEGATIVE: ClassVar["Conditioning"]

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DomainError(f"unknown conditioning {self.kind!r}")
        if self.kind == "pinned":
            if self.j is None or isinstance(self.j, bool) or int(self.j) != self.j:
                raise DomainError("pinned conditioning needs an integer endpoint")
            if self.j == 0:
                raise DomainError("pinned endpoint must be nonzero, use the bridge")
            object.__setattr__(self, "j", int(self.j))
        elif self.j is not None:
            raise DomainError(f"{self.kind} takes no endpoint")

    @classmethod
    def pinned(cls, j: int) -> "Conditioning":
        return cls("pinned", j)

    @classmethod
    def parse(cls, text: str) -> "Conditioning":
        """Parse 'free', 'bridge', 'positive', 'negative' or 'pinned:J'."""
        text = text.strip().lower()
        if text.startswith("pinned"):
            _, _, rest = text.partition(":")
            try:
                j = int(rest)
            except ValueError:
                raise DomainError(f"bad pinned endpoint in {text!r}") from None
            return cls.pinned(j)
        return cls(text)

    @property
    def tag(self) -> str:
        return f"pinned:{self.j}" if self.kind == "pinned" else self.kind

    def __str__(self):
        return self.tag

    def contains(self, x: int) -> bool:
        if self.kind == "free":
            return True
        if self.kind == "bridge":
            return x == 0
        if self.kind == "positive":
            return x > 0
        if self.kind == "negative":
            return x < 0
        return x == self.j

    def mask(self, xs):
        """Vectorized `contains` for a numpy integer array."""
        if self.kind == "free":
            return xs == xs
        if self.kind == "bridge":
            return xs == 0
        if self.kind == "positive":
            return xs > 0
        if self.kind == "negative":
            return xs < 0
        return xs == self.j

    def endpoints(self, n: int) -> list[int]:
        """Members of F reachable in n steps."""
        return [x for x in range(-n, n + 1, 2) if self.contains(x)]

    def dual(self) -> "Conditioning":
        """Conditioning for the negated walk."""
        swap = {"positive": Conditioning.NEGATIVE, "negative": Conditioning.POSITIVE}
        if self.kind == "pinned":
            return Conditioning.pinned(-self.j)
        return swap.get(self.kind, self)


Conditioning.FREE = Conditioning("free")
Conditioning.BRIDGE = Conditioning("bridge")
Conditioning.POSITIVE = Conditioning("positive")
Conditioning.NEGATIVE = Conditioning("negative")


def all_conditionings(n: int) -> list[Conditioning]:
    """The four fixed conditionings plus every pinned endpoint with |j| <= n."""
    out = [Conditioning.FREE, Conditioning.BRIDGE, Conditioning.POSITIVE, Conditioning.NEGATIVE]
    out += [Conditioning.pinned(j) for j in range(-n, n + 1) if j]
    return out
