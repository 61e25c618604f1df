"""Write the named fixtures to fixtures/*.scalg (canonical serialization)."""

from __future__ import annotations

import argparse
from pathlib import Path

from hopfcentre import fixtures as fx
from hopfcentre.modalg import AlgebraData, dual_regular_module_algebra, trivial_module_algebra
from hopfcentre.scalg import Serializer, serialize


def group_doc(G, M) -> str:
    s = Serializer(M.field)
    s.action(M, group=G)
    return s.text()


def graded_doc(G, A: AlgebraData, degrees) -> str:
    s = Serializer(A.field)
    s.grading(G, A, degrees)
    return s.text()


def documents() -> dict[str, str]:
    H4 = fx.sweedler()
    mat2 = fx.matrix_algebra(fx.QQ, 2)
    kc2 = fx.kc2()
    return {
        "f1_kc2": serialize(kc2),
        "f3_sweedler": serialize(H4),
        "kc3": serialize(fx.kc3()),
        "ks3": serialize(fx.ks3()),
        "fun_s3": serialize(fx.fun_s3()),
        "f4": group_doc(fx.C2, fx.f4()),
        "f5": group_doc(fx.C2, fx.f5()),
        "trivial_sweedler": serialize(trivial_module_algebra(H4)),
        "dual_sweedler": serialize(dual_regular_module_algebra(H4)),
        "dual_kc3": serialize(dual_regular_module_algebra(fx.kc3())),
        "graded_kc2": graded_doc(fx.C2, AlgebraData(kc2.field, kc2.mul, kc2.unit), [0, 1]),
        "graded_mat2": graded_doc(fx.C2, mat2, [0, 1, 1, 0]),
        "graded_ks3": graded_doc(fx.S3, AlgebraData(fx.QQ, fx.ks3().mul, fx.ks3().unit), range(6)),
        "f4_gf7": group_doc(fx.C2, fx.f4(fx.Field(7))),
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dir", default=str(Path(__file__).resolve().parent.parent / "fixtures"))
    args = ap.parse_args()
    out = Path(args.dir)
    out.mkdir(parents=True, exist_ok=True)
    for name, text in documents().items():
        (out / f"{name}.scalg").write_text(text, encoding="utf-8")
        print(f"wrote {out / (name + '.scalg')}")


if __name__ == "__main__":
    main()
