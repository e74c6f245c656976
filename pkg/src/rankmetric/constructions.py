"""Named code families.

All of them except :func:`linked_diagonal_code` are coordinate codes: spans
of elementary matrices E_{i,j} over an explicit set of positions.  Rows and
columns are 0-based here.
"""

from __future__ import annotations

from .budget import BudgetExceeded
from .codes import InconsistentResult, RankMetricCode, maxrk
from .field import GF, make_field
from .linalg import Subspace

VALIDATION_CAP = 2**16


class ParameterError(ValueError):
    pass


def coordinate_code(F: GF, n: int, m: int, positions) -> RankMetricCode:
    """Span of E_{i,j} for (i, j) in positions."""
    coords = []
    for i, j in positions:
        if not (0 <= i < n and 0 <= j < m):
            raise ParameterError(f"position {(i, j)} outside a {n}x{m} matrix")
        coords.append(i * m + j)
    return RankMetricCode(n, m, Subspace.standard(F, n * m, coords))


def _rows(first: int, count: int, cols) -> list[tuple[int, int]]:
    return [(i, j) for i in range(first, first + count) for j in cols]


def _validate(C: RankMetricCode, expected_dim: int, expected_maxrk: int | None, cap=VALIDATION_CAP):
    if C.dim != expected_dim:
        raise InconsistentResult(f"{C!r} has dimension {C.dim}, expected {expected_dim}")
    if expected_maxrk is None or cap is None or C.field.q**C.dim > cap:
        return C
    try:
        r = maxrk(C, cap)
    except BudgetExceeded:
        return C
    if r != expected_maxrk:
        raise InconsistentResult(f"{C!r} has maximum rank {r}, expected {expected_maxrk}")
    return C


def block_code(F: GF, n: int, m: int, s: int, h: int, k: int, validate_cap=VALIDATION_CAP) -> RankMetricCode:
    """Full top s rows, an h x k block below them, zeros elsewhere.

    Equals Mat(<e_1..e_s>) + (Mat(<f_1..f_k>)^t intersected with
    Mat(<e_1..e_{s+h}>)); dimension sm + hk.
    """
    if min(s, h, k) < 0 or k > m or not 0 < s + h <= n:
        raise ParameterError(f"need s,h,k >= 0, k <= m and 0 < s+h <= n; got s={s}, h={h}, k={k}, n={n}, m={m}")
    C = coordinate_code(F, n, m, _rows(0, s, range(m)) + _rows(s, h, range(k)))
    expected = s + min(h, k) if n <= m else None
    return _validate(C, s * m + h * k, expected, validate_cap)


def two_row_family(F: GF, n: int, m: int, alpha: int, rho: int, k: int, validate_cap=VALIDATION_CAP) -> RankMetricCode:
    """alpha-1 full rows, then a row supported on the first m-k columns and a
    row supported on the first rho+k columns.

    Members with k and m-rho-k are equivalent.  Dimension alpha*m + rho,
    maximum rank alpha+1.
    """
    if not (m >= max(2, n) and 0 < alpha < n <= m and 0 < rho < m and 0 <= k <= m - rho):
        raise ParameterError(
            f"need m >= max(2,n), 0 < alpha < n <= m, 0 < rho < m, 0 <= k <= m-rho; "
            f"got n={n}, m={m}, alpha={alpha}, rho={rho}, k={k}")
    positions = (_rows(0, alpha - 1, range(m))
                 + _rows(alpha - 1, 1, range(m - k))
                 + _rows(alpha, 1, range(rho + k)))
    C = coordinate_code(F, n, m, positions)
    return _validate(C, alpha * m + rho, alpha + 1, validate_cap)


def two_row_family_is_dual_qoac(m: int, rho: int, k: int) -> bool:
    """Which members of :func:`two_row_family` have a qOAC dual."""
    if k in (0, m - rho):
        return True
    if k in (1, m - rho - 1):
        return rho >= m - 2
    return False


DUALLY_QOAC_FORMS = ("a", "b", "c", "d")


def dually_qoac_form_params(n: int, m: int, alpha: int, rho: int, form: str) -> tuple[int, int, int] | None:
    """(s, h, k) of the block code realizing a canonical form, or None when
    the form's parameter constraints fail."""
    if not (0 <= alpha < n <= m and 0 < rho < m):
        return None
    if form == "a":
        return alpha, 1, rho
    if form == "b":
        return (alpha, rho, 1) if rho <= n - alpha else None
    if form == "c":
        return (alpha + rho + 1 - m, m - rho, m - 1) if rho >= m - alpha - 1 else None
    if form == "d":
        return (0, n, alpha + 1) if (m == n + 1 and rho == n - alpha) else None
    raise ParameterError(f"unknown form {form!r}; expected one of {DUALLY_QOAC_FORMS}")


def dually_qoac_form(F: GF, n: int, m: int, alpha: int, rho: int, form: str, validate_cap=VALIDATION_CAP) -> RankMetricCode:
    """Canonical dually qOAC of dimension alpha*m + rho.

    (a) alpha full rows plus the first rho entries of the next row;
    (b) alpha full rows plus rho entries down the first column;
    (c) alpha+rho+1-m full rows plus m-rho rows on the first m-1 columns;
    (d) m = n+1: the first alpha+1 columns.
    """
    params = dually_qoac_form_params(n, m, alpha, rho, form)
    if params is None:
        raise ParameterError(f"form {form!r} not available for n={n}, m={m}, alpha={alpha}, rho={rho}")
    s, h, k = params
    if form == "a":
        positions = _rows(0, alpha, range(m)) + _rows(alpha, 1, range(rho))
    elif form == "b":
        positions = _rows(0, alpha, range(m)) + _rows(alpha, rho, range(1))
    elif form == "c":
        positions = _rows(0, s, range(m)) + _rows(s, m - rho, range(m - 1))
    else:
        positions = _rows(0, n, range(alpha + 1))
    C = coordinate_code(F, n, m, positions)
    assert C == block_code(F, n, m, s, h, k, validate_cap=None)
    return _validate(C, alpha * m + rho, alpha + 1, validate_cap)


def zero_diagonal_code(F: GF, n: int, m: int, alpha: int, rho: int, validate_cap=VALIDATION_CAP) -> RankMetricCode:
    """A qOAC whose dual is not a qOAC.

    Top m-rho rows: a zero-diagonal (m-rho)-square block next to a free
    block; then alpha+1-m+rho full rows; zeros below.
    """
    if not (1 <= alpha <= n - 1 and m - alpha - 1 <= rho <= m - 2 and n <= m):
        raise ParameterError(
            f"need 1 <= alpha <= n-1 and m-alpha-1 <= rho <= m-2; got n={n}, m={m}, alpha={alpha}, rho={rho}")
    t = m - rho
    positions = [(i, j) for i in range(t) for j in range(m) if i != j]
    positions += _rows(t, alpha + 1 - t, range(m))
    C = coordinate_code(F, n, m, positions)
    return _validate(C, alpha * m + rho, alpha + 1, validate_cap)


def linked_diagonal_code(validate_cap=VALIDATION_CAP) -> RankMetricCode:
    """The 9-dimensional upper triangular code in F_2^{4x4} with diagonal
    (a1, a2, a2 + a3, a3): maximum rank 3, yet contained in no
    Mat(U) + Mat(W)^t with dim U + dim W = 3."""
    F = make_field(2)
    gens = []

    def E(*cells):
        M = [[0] * 4 for _ in range(4)]
        for i, j in cells:
            M[i][j] = 1
        gens.append(M)

    E((0, 0))
    E((1, 1), (2, 2))
    E((2, 2), (3, 3))
    E((0, 1))
    E((0, 2))
    E((0, 3))
    E((1, 2))
    E((1, 3))
    E((2, 3))
    C = RankMetricCode.from_matrices(F, gens)
    return _validate(C, 9, 3, None if validate_cap is None else max(validate_cap, 2**9))


# name -> (constructor, ordered parameter names); the field is always the first argument
GALLERY = {
    "block": (block_code, ("n", "m", "s", "h", "k")),
    "two-row": (two_row_family, ("n", "m", "alpha", "rho", "k")),
    "dually-qoac-form": (dually_qoac_form, ("n", "m", "alpha", "rho", "form")),
    "zero-diagonal": (zero_diagonal_code, ("n", "m", "alpha", "rho")),
    "linked-diagonal": (None, ()),
}

# identifiers used by the command-line interface
GALLERY_ALIASES = {
    "cshk": "block",
    "example-2.3": "two-row",
    "thm2.5": "dually-qoac-form",
    "example-2.7": "zero-diagonal",
    "example-2.8": "linked-diagonal",
}


def gallery(name: str, F: GF | None = None, **params) -> RankMetricCode:
    name = GALLERY_ALIASES.get(name, name)
    if name not in GALLERY:
        raise ParameterError(f"unknown gallery code {name!r}; choose from {sorted(GALLERY)}")
    if name == "linked-diagonal":
        if F is not None and F.q != 2:
            raise ParameterError("the linked-diagonal code is defined over F_2 only")
        return linked_diagonal_code()
    fn, names = GALLERY[name]
    missing = [p for p in names if p not in params]
    if missing:
        raise ParameterError(f"{name} needs parameters {missing}")
    if F is None:
        F = make_field(2)
    return fn(F, *(params[p] for p in names))


def block_code_is_qoac(s: int, h: int, k: int, m: int, n: int) -> bool:
    """Closed-form qOAC test for :func:`block_code` (n <= m, k < m).

    With a = min(h, k) and b = max(h, k) the code is a qOAC exactly when
    0 < a <= floor((m - 1) / (m - b)).  b = m forces m | hk, so no.
    """
    if min(s, h, k) < 0 or not 0 < s + h <= n or not k < m or n > m:
        raise ParameterError(f"need s,h,k >= 0, 0 < s+h <= n <= m and k < m; got s={s}, h={h}, k={k}, n={n}, m={m}")
    a, b = min(h, k), max(h, k)
    if a == 0 or b >= m:
        return False
    return a <= (m - 1) // (m - b)
