"""Dense linear algebra over the scalar backends (internal).

Everything works coefficient-by-coefficient over a field: Fraction, Quartic2,
or float. The float path uses partial pivoting and treats entries within the
module tolerance as zero; the exact paths take the first nonzero pivot.
"""

from __future__ import annotations

from typing import List, Sequence, Tuple

from .exactnum import get_epsilon, is_zero


def _copy(rows: Sequence[Sequence]) -> List[List]:
    return [list(r) for r in rows]


def _is_float_matrix(rows) -> bool:
    for r in rows:
        for x in r:
            return isinstance(x, float)
    return False


def _pick_pivot(rows, col: int, start: int, use_float: bool) -> int:
    best = -1
    if use_float:
        mag = get_epsilon()
        for i in range(start, len(rows)):
            if abs(rows[i][col]) > mag:
                mag = abs(rows[i][col])
                best = i
    else:
        for i in range(start, len(rows)):
            if not is_zero(rows[i][col]):
                best = i
                break
    return best


def rref(rows: Sequence[Sequence], ncols: int) -> Tuple[List[List], List[int]]:
    """Reduced row echelon form and pivot column indices."""
    m = _copy(rows)
    use_float = _is_float_matrix(m)
    pivots: List[int] = []
    r = 0
    for col in range(ncols):
        if r >= len(m):
            break
        i = _pick_pivot(m, col, r, use_float)
        if i < 0:
            continue
        m[r], m[i] = m[i], m[r]
        inv = m[r][col]
        m[r] = [x / inv for x in m[r]]
        for j in range(len(m)):
            if j != r and not is_zero(m[j][col]):
                factor = m[j][col]
                m[j] = [a - factor * b for a, b in zip(m[j], m[r])]
        pivots.append(col)
        r += 1
    return m, pivots


def rank(rows: Sequence[Sequence], ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> List[List]:
    """Basis of the right nullspace, one vector per free column."""
    if not rows:
        rows = []
    m, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [0] * ncols
        vec[free] = 1
        for row_idx, pcol in enumerate(pivots):
            vec[pcol] = -m[row_idx][free]
        basis.append(vec)
    return basis


def det(rows: Sequence[Sequence]):
    """Determinant over a field, by elimination with division."""
    n = len(rows)
    m = _copy(rows)
    use_float = _is_float_matrix(m)
    sign = 1
    result = 1
    for col in range(n):
        i = _pick_pivot(m, col, col, use_float)
        if i < 0:
            return 0 * (m[0][0] if n else 0)
        if i != col:
            m[col], m[i] = m[i], m[col]
            sign = -sign
        pivot = m[col][col]
        result = result * pivot
        for j in range(col + 1, n):
            if not is_zero(m[j][col]):
                factor = m[j][col] / pivot
                m[j] = [a - factor * b for a, b in zip(m[j], m[col])]
    return sign * result


def det_int(rows: Sequence[Sequence[int]]) -> int:
    """Bareiss determinant for integer matrices; exact, no fractions."""
    n = len(rows)
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            row_k = m[k]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]
