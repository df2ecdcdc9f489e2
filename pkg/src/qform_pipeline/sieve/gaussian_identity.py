from math import fsum, gcd, isclose
from typing import Any

from qform_pipeline.errors import InvariantError, ValidationError
from qform_pipeline.forms import Form
from qform_pipeline.sieve.lambda_spec import LambdaSpec
from qform_pipeline.sieve.lattice import lattice_points
from qform_pipeline.sieve.sequences import a_N

GAUSSIAN_FORM = Form(1, 0, 1)


def gaussian_representations(X: int) -> dict[int, list[tuple[int, int]]]:
    """Primitive Gaussian integers ``w`` grouped by norm ``|w|^2 <= X``."""

    representations: dict[int, list[tuple[int, int]]] = {}

    for x, y, norm in lattice_points(GAUSSIAN_FORM, X):
        if gcd(x, y) == 1:
            representations.setdefault(norm, []).append((x, y))

    return representations


def fi_crosscheck(X: int, lam: LambdaSpec) -> dict[str, Any]:
    """
    Compare ``a_{mn}`` with a quarter of the sum of ``lambda(Re(conj(w) z))``
    over primitive ``|w|^2 = m`` and ``|z|^2 = n``, for every coprime ``m n <= X``.

    Any disagreement raises.
    """

    if X < 1:
        raise ValidationError(f"X [ {X} ] must be positive")

    direct = a_N(GAUSSIAN_FORM, X, lam)
    representations = gaussian_representations(X)
    checked = 0

    for m in range(1, X + 1):
        m_points = representations.get(m, [])

        for n in range(1, X // m + 1):
            if gcd(m, n) != 1:
                continue

            n_points = representations.get(n, [])
            weights = [lam(w1 * z1 + w2 * z2) for w1, w2 in m_points for z1, z2 in n_points]
            bilinear = fsum(weights) / 4
            checked += 1

            if not isclose(bilinear, direct[m * n], rel_tol=1e-12, abs_tol=1e-12):
                raise InvariantError(
                    f"a_[ {m * n} ] = [ {direct[m * n]} ] but the Gaussian sum at "
                    f"m = [ {m} ], n = [ {n} ] gives [ {bilinear} ]"
                )

    return {"X": X, "pairs_checked": checked, "mismatches": 0}
