"""Defining sequences (a_i) for a-adic groups and their cumulative moduli."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Basis:
    """A defining sequence (a_i), every entry >= 2, with a window offset <= 0.

    ``kind`` is one of ``"const"``, ``"cycle"``, ``"list"``:

    * ``const``: a(i) is the single entry of ``params`` for every i.
    * ``cycle``: a(i) = params[i mod len(params)], indexed globally, so
      negative indices follow the same cycle.
    * ``list``: params covers exactly the indices offset..offset+len-1.

    ``offset`` is 0 for the integer ring and negative for a window that
    extends finitely many digits below position 0.
    """

    kind: str
    params: tuple[int, ...]
    offset: int = 0

    def __post_init__(self):
        if self.kind not in ("const", "cycle", "list"):
            raise ValueError(f"unknown basis kind {self.kind!r}")
        if not self.params:
            raise ValueError("basis needs at least one entry")
        if any(p < 2 for p in self.params):
            raise ValueError("basis entries must be >= 2")
        if self.offset > 0:
            raise ValueError("basis offset must be <= 0")

    def a(self, i: int) -> int:
        """Entry at index i; i must be >= offset (and in range for list kind)."""
        if i < self.offset:
            raise IndexError(f"index {i} below basis offset {self.offset}")
        if self.kind == "const":
            return self.params[0]
        if self.kind == "cycle":
            return self.params[i % len(self.params)]
        j = i - self.offset
        if j >= len(self.params):
            raise IndexError(f"index {i} beyond explicit basis entries")
        return self.params[j]

    def modulus(self, r: int) -> int:
        """Cumulative modulus: the product a(offset) * ... * a(r)."""
        if r < self.offset:
            raise ValueError(f"precision {r} below basis offset {self.offset}")
        m = 1
        for i in range(self.offset, r + 1):
            m *= self.a(i)
        return m

    def digit_count(self, r: int) -> int:
        return r - self.offset + 1

    def window_factor(self) -> int:
        """Product of the entries at negative indices (1 when offset == 0)."""
        m = 1
        for i in range(self.offset, 0):
            m *= self.a(i)
        return m

    def rebased(self) -> "Basis":
        """The offset-0 basis b with b(i) = a(i + offset) (pure reindex)."""
        if self.offset == 0:
            return self
        if self.kind == "const":
            return Basis("const", self.params, 0)
        if self.kind == "cycle":
            m = len(self.params)
            k = self.offset % m
            return Basis("cycle", self.params[k:] + self.params[:k], 0)
        return Basis("list", self.params, 0)

    def nonnegative_part(self) -> "Basis":
        """The offset-0 basis agreeing with this one on indices >= 0."""
        if self.offset == 0:
            return self
        if self.kind == "list":
            return Basis("list", self.params[-self.offset:], 0)
        return Basis(self.kind, self.params, 0)

    def spec_string(self) -> str:
        if self.kind == "const":
            body = f"const:{self.params[0]}"
        else:
            body = f"{self.kind}:" + ",".join(str(p) for p in self.params)
        if self.offset != 0:
            body += f"@offset:{self.offset}"
        return body


def parse_basis(text: str) -> Basis:
    """Parse ``const:<c>`` | ``cycle:<c0>,...`` | ``list:<c0>,...``
    with an optional ``@offset:<k>`` suffix."""
    body = text.strip()
    offset = 0
    if "@" in body:
        body, _, tail = body.partition("@")
        if not tail.startswith("offset:"):
            raise ValueError(f"bad basis suffix {tail!r} (expected offset:<k>)")
        offset = int(tail[len("offset:"):])
    kind, _, entries = body.partition(":")
    if not entries:
        raise ValueError(f"bad basis spec {text!r}")
    try:
        params = tuple(int(p) for p in entries.split(","))
    except ValueError:
        raise ValueError(f"bad basis entries in {text!r}") from None
    if kind == "const" and len(params) != 1:
        raise ValueError("const basis takes exactly one entry")
    return Basis(kind, params, offset)
