"""Words in a free group on meridian generators 1..m."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class GroupWord:
    """Ordered letters ``(generator, exponent)`` with exponent +1 or -1.

    No normal form is enforced; call :meth:`reduced` for free reduction.
    """

    letters: tuple[tuple[int, int], ...] = ()

    @classmethod
    def gen(cls, i: int, e: int = 1) -> "GroupWord":
        return cls(((i, 1 if e > 0 else -1),) * abs(e))

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return GroupWord(self.letters + other.letters)

    def inverse(self) -> "GroupWord":
        return GroupWord(tuple((g, -e) for g, e in reversed(self.letters)))

    def __pow__(self, n: int) -> "GroupWord":
        base = self if n >= 0 else self.inverse()
        return GroupWord(base.letters * abs(n))

    def conjugate(self, c: "GroupWord") -> "GroupWord":
        """c * self * c^-1"""
        return c * self * c.inverse()

    def reduced(self) -> "GroupWord":
        out: list[tuple[int, int]] = []
        for g, e in self.letters:
            if out and out[-1][0] == g and out[-1][1] == -e:
                out.pop()
            else:
                out.append((g, e))
        return GroupWord(tuple(out))

    def exponent_sum(self, i: int) -> int:
        return sum(e for g, e in self.letters if g == i)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"x{g}" if e > 0 else f"x{g}^-1" for g, e in self.letters)


def commutator(a: GroupWord, b: GroupWord) -> GroupWord:
    """[a, b] = a b a^-1 b^-1"""
    return a * b * a.inverse() * b.inverse()
