"""Exact sign-matrix arithmetic and the signed-permutation symmetry group.

Everything downstream (constructors, verifiers, canonical forms, census)
works with the integer matrix B = k*A, which has entries +1/-1.  A itself
is never materialized in floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random

# Default dimension cap.  Keeps everything desk-scale; pass max_dim=None
# (or a larger bound) to a SignMatrix constructor to override.
MAX_DIM = 32


class SignMatrix:
    """Immutable square matrix with entries +1/-1.

    Entries are plain Python ints, so all derived products are exact at
    any size (a fixed-width port would need 64-bit accumulators up to
    n = 64; here there is no bound to enforce).
    """

    __slots__ = ("rows",)

    def __init__(self, rows, max_dim: int | None = MAX_DIM):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        if n < 1:
            raise ValueError("matrix must have at least one row")
        if max_dim is not None and n > max_dim:
            raise ValueError(f"dimension {n} exceeds cap {max_dim}")
        for r in rows:
            if len(r) != n:
                raise ValueError("matrix must be square")
            for e in r:
                if e != 1 and e != -1:
                    raise ValueError(f"entry {e!r} is not +1/-1")
        self.rows = rows

    @property
    def n(self) -> int:
        return len(self.rows)

    def __eq__(self, other) -> bool:
        return isinstance(other, SignMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"SignMatrix({self.n}x{self.n}: {' '.join(self.to_strings())})"

    def to_strings(self) -> list[str]:
        """Rows as strings of '+'/'-' characters."""
        return ["".join("+" if e == 1 else "-" for e in r) for r in self.rows]

    @classmethod
    def from_strings(cls, rows: list[str], max_dim: int | None = MAX_DIM) -> "SignMatrix":
        table = {"+": 1, "-": -1}
        try:
            return cls([[table[ch] for ch in r] for r in rows], max_dim=max_dim)
        except KeyError as e:
            raise ValueError(f"bad sign character {e.args[0]!r}") from None

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.n))


@dataclass(frozen=True)
class SignedPermutation:
    """A signature matrix S combined with a permutation matrix P, acting
    on sign matrices by conjugation M -> (S P) M (S P)^-1.

    perm[old] = new index; signs are indexed by the new position.
    """

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        n = len(self.perm)
        if sorted(self.perm) != list(range(n)):
            raise ValueError("perm is not a bijection on 0..n-1")
        if len(self.signs) != n or any(s != 1 and s != -1 for s in self.signs):
            raise ValueError("signs must be an n-vector of +1/-1")

    @property
    def n(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(tuple(range(n)), (1,) * n)

    def is_identity(self) -> bool:
        return self.perm == tuple(range(self.n)) and all(s == 1 for s in self.signs)

    def inverse(self) -> "SignedPermutation":
        inv = [0] * self.n
        for old, new in enumerate(self.perm):
            inv[new] = old
        return SignedPermutation(tuple(inv), tuple(self.signs[self.perm[i]] for i in range(self.n)))

    def compose(self, other: "SignedPermutation") -> "SignedPermutation":
        """Group product self * other (other acts first)."""
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        inv_self = [0] * self.n
        for old, new in enumerate(self.perm):
            inv_self[new] = old
        perm = tuple(self.perm[other.perm[x]] for x in range(self.n))
        signs = tuple(self.signs[i] * other.signs[inv_self[i]] for i in range(self.n))
        return SignedPermutation(perm, signs)

    @classmethod
    def random(cls, n: int, rng: Random) -> "SignedPermutation":
        perm = list(range(n))
        rng.shuffle(perm)
        signs = tuple(rng.choice((1, -1)) for _ in range(n))
        return cls(tuple(perm), signs)


def apply_similarity(M: SignMatrix, g: SignedPermutation) -> SignMatrix:
    """Conjugate M by g, i.e. (S P) M (S P)^-1, computed on indices in O(n^2)."""
    if M.n != g.n:
        raise ValueError("dimension mismatch")
    inv = [0] * g.n
    for old, new in enumerate(g.perm):
        inv[new] = old
    rows = M.rows
    s = g.signs
    out = [
        tuple(s[i] * s[j] * rows[inv[i]][inv[j]] for j in range(g.n))
        for i in range(g.n)
    ]
    return SignMatrix(out, max_dim=None)


def transpose(M: SignMatrix) -> SignMatrix:
    return SignMatrix(tuple(zip(*M.rows)), max_dim=None)


def multiply(Ma: SignMatrix, Mb: SignMatrix) -> tuple[tuple[int, ...], ...]:
    """Exact integer product Ma @ Mb (entries are ints, not signs)."""
    if Ma.n != Mb.n:
        raise ValueError("dimension mismatch")
    n = Ma.n
    bcols = tuple(zip(*Mb.rows))
    return tuple(
        tuple(sum(ra[t] * cb[t] for t in range(n)) for cb in bcols)
        for ra in Ma.rows
    )


def format_matrix(M: SignMatrix, k: int) -> str:
    """Render the interchange text format: 'n k' header then sign rows."""
    lines = [f"{M.n} {k}"]
    for r in M.rows:
        lines.append(" ".join("+" if e == 1 else "-" for e in r))
    return "\n".join(lines) + "\n"


_TOKENS = {"+": 1, "1": 1, "+1": 1, "-": -1, "-1": -1}


def parse_matrix(text: str) -> tuple[SignMatrix, int]:
    """Parse the interchange text format, returning (B, k)."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty matrix text")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError("header must be 'n k'")
    n, k = int(header[0]), int(header[1])
    if len(lines) != n + 1:
        raise ValueError(f"expected {n} matrix rows, got {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        toks = ln.split()
        if len(toks) != n:
            raise ValueError(f"expected {n} tokens per row, got {len(toks)}")
        try:
            rows.append([_TOKENS[t] for t in toks])
        except KeyError as e:
            raise ValueError(f"bad sign token {e.args[0]!r}") from None
    return SignMatrix(rows), k
