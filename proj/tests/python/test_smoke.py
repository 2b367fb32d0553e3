#!/usr/bin/env python3
"""Smoke test for the python bindings: exact values cross the boundary as
canonical p/q strings."""

import sys

sys.path.insert(0, sys.argv[1])  # build directory holding the extension

import eulerkind as ek  # noqa: E402

failures = 0


def check(name, cond, extra=""):
    global failures
    if cond:
        print(f"ok   {name}")
    else:
        failures += 1
        print(f"FAIL {name} {extra}")


check("euler1_neg(4,3) == 33/2", ek.euler1_neg(4, 3) == "33/2", ek.euler1_neg(4, 3))
check("euler2_neg_num(6,3) == 183", ek.euler2_neg_num(6, 3) == "183")
check("y3(5,1,'2','3','1') == 487", ek.y3(5, 1, "2", "3", "1") == "487")
check("w(2,'1') == -1/8", ek.w(2, "1") == "-1/8")
check("w(0,'3/5') == 15/64", ek.w(0, "3/5") == "15/64")
check("stirling2(4,2) == 7", ek.stirling2(4, 2) == "7")
check("central_T(4,3) == 14", ek.central_T(4, 3) == "14")
check("bernstein partition", ek.bernstein(1, 2, "1/2") == "1/2")

check("rooks_2d(3,2) == 18", ek.rooks_2d(3, 2) == 18)
check("rooks_3d_triangle(2,1) == 5", ek.rooks_3d_triangle(2, 1) == 5)

fit = ek.conjecture_fit(3)
check("conjecture d=3", fit["coefficients"] == ["3", "0"] and fit["all_integer"]
      and fit["formula_verified"])

reports = ek.verify_all(8)
check("verify_all returns 19 reports", len(reports) == 19)
check("all outcomes as expected", all(r["as_expected"] for r in reports))
check("I9 stated form fails", [r for r in reports if r["id"] == "I9"][0]["literal"] == "failed")

csv = ek.table_csv("E2neg", 4, 3)
check("table_csv header", csv.splitlines()[0] == "n\\k,0,-1,-2,-3")
check("table_csv row 4", csv.splitlines()[5] == "4,0,1,8,21")

try:
    ek.y2(1, 1, "0")
    check("y2 lambda=0 raises", False)
except Exception:
    check("y2 lambda=0 raises", True)

print()
if failures:
    print(f"{failures} python smoke checks failed")
    sys.exit(1)
print("all python smoke checks passed")
