"""Exact 4x4 linear solving over F_p.

Gaussian elimination with first-nonzero pivoting: exact arithmetic needs
no magnitude heuristics, and the fixed pivot rule keeps runs
deterministic.  A singular system is a meaningful answer (shared-support
detection relies on it), so it is returned as None, never raised.
"""

from __future__ import annotations

from typing import Optional, Sequence, TYPE_CHECKING

from .field import FieldElement, PrimeField

if TYPE_CHECKING:
    from .counters import OpCounters


class System4:
    """A 4x4 matrix and right-hand side over one prime field."""

    __slots__ = ("field", "_raw")

    def __init__(
        self,
        field: PrimeField,
        matrix: Sequence[Sequence[FieldElement | int]],
        rhs: Sequence[FieldElement | int],
    ):
        if len(matrix) != 4 or any(len(row) != 4 for row in matrix) or len(rhs) != 4:
            raise ValueError("System4 requires a 4x4 matrix and a length-4 rhs")
        p = field.p

        def residue(x):
            if isinstance(x, FieldElement):
                if x.field.p != p:
                    raise ValueError(f"entry from F_{x.field.p} in F_{p} system")
                return x.value
            return x % p

        self.field = field
        self._raw = tuple(
            tuple(residue(x) for x in row) + (residue(b),)
            for row, b in zip(matrix, rhs)
        )

    @property
    def matrix(self) -> tuple[tuple[FieldElement, ...], ...]:
        return tuple(
            tuple(FieldElement(x, self.field) for x in row[:4]) for row in self._raw
        )

    @property
    def rhs(self) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(row[4], self.field) for row in self._raw)

    def rows(self) -> list[list[FieldElement]]:
        """Augmented rows [a0, a1, a2, a3, rhs]."""
        return [[FieldElement(x, self.field) for x in row] for row in self._raw]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, System4):
            return NotImplemented
        return self.field.p == other.field.p and self._raw == other._raw

    def __hash__(self) -> int:
        return hash((self.field.p, self._raw))

    def __repr__(self) -> str:
        body = "; ".join(
            "[" + ",".join(str(x) for x in row[:4]) + f" | {row[4]}]" for row in self._raw
        )
        return f"System4(F_{self.field.p}: {body})"


def solve(system: System4, counters: Optional["OpCounters"] = None) -> Optional[tuple[FieldElement, ...]]:
    """Unique solution vector, or None when the matrix is singular."""
    p = system.field.p
    aug = [list(row) for row in system._raw]
    mults = 0
    invs = 0
    for col in range(4):
        pivot_row = None
        for r in range(col, 4):
            if aug[r][col] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            if counters is not None:
                counters.add_mults(mults)
                counters.add_invs(invs)
            return None
        if pivot_row != col:
            aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        inv_piv = pow(aug[col][col], -1, p)
        invs += 1
        row_c = aug[col]
        for j in range(col, 5):
            if row_c[j]:
                row_c[j] = row_c[j] * inv_piv % p
                mults += 1
        for r in range(4):
            if r == col:
                continue
            factor = aug[r][col]
            if factor == 0:
                continue
            row_r = aug[r]
            for j in range(col, 5):
                if row_c[j]:
                    row_r[j] = (row_r[j] - factor * row_c[j]) % p
                    mults += 1
    if counters is not None:
        counters.add_mults(mults)
        counters.add_invs(invs)
    return tuple(FieldElement(aug[i][4], system.field) for i in range(4))


def determinant(system: System4) -> FieldElement:
    """4x4 determinant by cofactor expansion along the first row.

    Independent of the elimination in solve(), so the two can cross-check
    each other's singularity verdicts.
    """
    p = system.field.p
    m = [row[:4] for row in system._raw]

    def det3(r0, r1, r2, c0, c1, c2):
        return (
            m[r0][c0] * (m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1])
            - m[r0][c1] * (m[r1][c0] * m[r2][c2] - m[r1][c2] * m[r2][c0])
            + m[r0][c2] * (m[r1][c0] * m[r2][c1] - m[r1][c1] * m[r2][c0])
        ) % p

    total = 0
    for col, sign in ((0, 1), (1, -1), (2, 1), (3, -1)):
        if m[0][col] == 0:
            continue
        cols = [c for c in range(4) if c != col]
        total += sign * m[0][col] * det3(1, 2, 3, *cols)
    return FieldElement(total % p, system.field)
