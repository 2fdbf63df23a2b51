#!/usr/bin/env python3
"""Smoke test for the pyumbral extension module.

Builds the cdylib with cargo, stages it under a temporary directory as an
importable module, and exercises the main types and operations.

Run from the repository root:  python3 python/smoke_test.py
"""

import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent


def build_and_import():
    subprocess.run(
        ["cargo", "build", "-p", "umbral-py"],
        cwd=REPO,
        check=True,
    )
    built = REPO / "target" / "debug" / "libpyumbral.so"
    if not built.exists():  # e.g. macOS
        built = REPO / "target" / "debug" / "libpyumbral.dylib"
    stage = Path(tempfile.mkdtemp(prefix="pyumbral-"))
    shutil.copy2(built, stage / "pyumbral.so")
    sys.path.insert(0, str(stage))
    import pyumbral

    return pyumbral


def main():
    m = build_and_import()

    # special umbrae and moments
    delta = m.Umbra.special("delta")
    assert delta.moments()[:5] == ["1", "1", "4", "18", "120"], delta.moments()[:5]
    iota = m.Umbra.special("iota")
    assert iota.moment(1) == "-1/2" and iota.moment(4) == "-1/30"

    # auxiliary constructions: adj(u) = chi, ubar.bell.D(chi) = delta
    u = m.Umbra.special("u")
    chi = m.Umbra.special("chi")
    ubar = m.Umbra.special("ubar")
    assert u.adjoint().is_similar(chi)
    assert ubar.dot(chi.derivative().partition()).is_similar(delta)
    assert chi.comp_inverse().is_similar(chi)
    eps = m.Umbra.special("eps")
    assert chi.dot_int(-1).add(chi).is_similar(eps)

    # expression DSL
    assert m.eval_expr("x.chi", 3) == "x^3 - 3x^2 + 2x"
    assert m.eval_expr("ubar", 4) == "24"
    assert m.gf_coeffs("delta", 5) == ["1", "1", "2", "3", "5", "8"]
    assert m.gf_coeffs("-1.-chi", 4) == ["1"] * 5

    # Sheffer machinery
    sigma = m.Sheffer(iota, u)
    assert sigma.moment_poly(0) == "1"
    assert all(sigma.check_sheffer_identity(n) for n in range(7))
    assert m.check_binomial_identity(u, 6)

    # recurrence case studies
    assert m.solve_fibonacci(2) == "1/2x^2 + 1/2x + 2"
    assert m.solve_pascal(1) == "x + 1"
    assert m.solve_integral(1) == "x + 1/2"
    assert m.dyck_count(2, 5) == 11
    assert m.dyck_count(3, 5) == 17
    table = m.dyck_table(6)
    assert table[6] == [1, 6, 16, 29, 46, 63, 63]
    for mm in range(7):
        for n in range(mm + 1):
            assert table[mm][n] == m.count_ballot_paths(n, mm), (n, mm)

    # oracles and bound checks
    assert [m.fibonacci(k) for k in range(6)] == [1, 1, 2, 3, 5, 8]
    assert m.bell_numbers(4) == [1, 1, 2, 5, 15]
    assert m.bernoulli_numbers(2) == ["1", "-1/2", "1/6"]
    assert m.check_prop_reci(u, 5)
    assert m.check_final_theorem(m.Umbra.special("u", 8), "2", 6)

    # the verification report surfaces the non-asserted observation
    rows = m.verify_suite("recurrences", 8)
    statuses = {status for (_, _, status, _) in rows}
    assert "fail" not in statuses
    assert any(
        status == "reported" and "F_2(0) = 3" in detail
        for (_, _, status, detail) in rows
    )

    # error paths surface as ValueError
    try:
        m.Umbra.special("nope")
    except ValueError:
        pass
    else:
        raise AssertionError("unknown special name must raise")

    print("pyumbral smoke test: all checks passed")


if __name__ == "__main__":
    main()
