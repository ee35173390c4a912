"""Calibration of the degree-3 symbols against tensor-algebra brackets.

The 216 symbols z_ijk satisfy

    z_ijk = -z_kji,   z_iji = 0,   z_ijk + z_jki + z_kij = 0,
    [a_k, [a_i, a_j]] = z_kij - z_ijk,

and we realize them inside the free tensor algebra on odd letters a_i via
the two-parameter ansatz

    z_ijk := c1 [a_i, [a_j, a_k]] + c2 [[a_i, a_j], a_k].

This module solves the resulting exact linear system for (c1, c2).  The
solution is stored in data/z_calibration.json; run

    python -m sullivan.calibration

to regenerate the file, and the test suite re-derives it independently.
"""

import json
from fractions import Fraction
from importlib import resources

from .lie import SemidirectFree, graded_commutator


def _letters(pres, *idx):
    return [pres.letter(f"a{i+1}") for i in idx]


def _z(pres, c1, c2, i, j, k):
    ai, aj, ak = _letters(pres, i, j, k)
    return graded_commutator(ai, graded_commutator(aj, ak)).scale(c1) + \
        graded_commutator(graded_commutator(ai, aj), ak).scale(c2)


def calibration_constraint_rows(num_letters=3):
    """Rows (coeff_of_c1, coeff_of_c2, rhs) per tensor coordinate."""
    pres = SemidirectFree("calibration",
                          [(f"a{i+1}", 1) for i in range(num_letters)])
    rows = []

    def push(expr_c1, expr_c2, rhs):
        words = set(expr_c1.terms) | set(expr_c2.terms) | set(rhs.terms)
        for w in sorted(words):
            rows.append((expr_c1.coefficient(w), expr_c2.coefficient(w),
                         rhs.coefficient(w)))

    n = num_letters
    for i in range(n):
        for j in range(n):
            for k in range(n):
                z1 = _z(pres, 1, 0, i, j, k)
                z2 = _z(pres, 0, 1, i, j, k)
                # antisymmetry z_ijk + z_kji = 0
                push(z1 + _z(pres, 1, 0, k, j, i),
                     z2 + _z(pres, 0, 1, k, j, i), pres.zero())
                # Jacobi sum z_ijk + z_jki + z_kij = 0
                push(z1 + _z(pres, 1, 0, j, k, i) + _z(pres, 1, 0, k, i, j),
                     z2 + _z(pres, 0, 1, j, k, i) + _z(pres, 0, 1, k, i, j),
                     pres.zero())
                # [a_k, [a_i, a_j]] = z_kij - z_ijk
                ai, aj, ak = _letters(pres, i, j, k)
                rhs = graded_commutator(ak, graded_commutator(ai, aj))
                push(_z(pres, 1, 0, k, i, j) - z1,
                     _z(pres, 0, 1, k, i, j) - z2, rhs)
        for j in range(n):
            # z_iji = 0
            push(_z(pres, 1, 0, i, j, i), _z(pres, 0, 1, i, j, i), pres.zero())
    return rows


def calibrate():
    """Solve the constraint system; returns (c1, c2) and asserts uniqueness."""
    from . import linalg
    rows = calibration_constraint_rows()
    matrix = [[r[0], r[1]] for r in rows]
    rhs = [r[2] for r in rows]
    sol = linalg.solve(matrix, rhs)
    if sol is None:
        raise RuntimeError("calibration system is infeasible; the two-parameter "
                           "ansatz does not apply")
    # uniqueness: the homogeneous system must have trivial kernel
    if linalg.kernel_basis(matrix):
        raise RuntimeError("calibration is underdetermined")
    return sol[0], sol[1]


def load_calibration():
    with resources.files("sullivan").joinpath("data/z_calibration.json").open() as fh:
        data = json.load(fh)
    return Fraction(data["c1"]), Fraction(data["c2"])


def write_calibration(path):
    c1, c2 = calibrate()
    with open(path, "w") as fh:
        json.dump({"c1": str(c1), "c2": str(c2),
                   "ansatz": "z_ijk = c1*[a_i,[a_j,a_k]] + c2*[[a_i,a_j],a_k]"},
                  fh, indent=2, sort_keys=True)
        fh.write("\n")
    return c1, c2


def main():
    import pathlib
    target = pathlib.Path(__file__).parent / "data" / "z_calibration.json"
    target.parent.mkdir(exist_ok=True)
    c1, c2 = write_calibration(target)
    print(f"wrote {target}: c1 = {c1}, c2 = {c2}")


if __name__ == "__main__":
    main()
