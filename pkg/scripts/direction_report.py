"""Print which D(H) conventions survive and which embedding direction matches C_l(R(A)).

    python scripts/direction_report.py
"""

from __future__ import annotations

from hopfcentre import fixtures as fx
from hopfcentre.centre import embed_and_compare, full_centre
from hopfcentre.double import convention_search
from hopfcentre.modalg import dual_regular_module_algebra, trivial_module_algebra
from hopfcentre.yd import ClosureError, adjoint_yd, induce_R


def conventions() -> None:
    H4 = fx.sweedler()
    yds = [("ad", "H4", adjoint_yd(H4)), ("reg", "H4", induce_R(H4, H4.mul))]
    for conv, rep in convention_search([("kC2", fx.kc2()), ("H4", H4)], yds).items():
        print(f"{str(conv):40s} {'PASS' if rep.ok else 'FAIL'}")


def directions() -> None:
    cases = {"F4": fx.f4(), "F5": fx.f5()}
    for name, build in fx.HOPF_FIXTURES.items():
        H = build()
        cases[f"k over {name}"] = trivial_module_algebra(H)
        if H.dim <= 4:
            cases[f"{name}* over {name}"] = dual_regular_module_algebra(H)
    print(f"{'module algebra':24s} {'S':6s} S^-1")
    for name, M in cases.items():
        s = embed_and_compare(M).ok
        try:
            sinv = embed_and_compare(M, full_centre(M, "sinv"), direction="sinv").ok
        except ClosureError:
            sinv = False
        print(f"{name:24s} {'PASS' if s else 'FAIL':6s} {'PASS' if sinv else 'FAIL'}")


if __name__ == "__main__":
    conventions()
    print()
    directions()
