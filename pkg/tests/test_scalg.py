import numpy as np
import pytest
from hypothesis import given, strategies as st

from hopfcentre.centre import full_centre
from hopfcentre.double import drinfeld_double
from hopfcentre.exact_linalg import QQ, Field, is_zero
from hopfcentre.fixtures import C2, S3, f4, f5, fun_s3, kc2, ks3, sweedler
from hopfcentre.hopf import verify_hopf
from hopfcentre.modalg import BuilderError, dual_regular_module_algebra, verify_module_algebra
from hopfcentre.scalg import ScalgError, Serializer, build_all, build_object, parse_scalg, serialize
from hopfcentre.yd import YDAlgebraData, verify_yd_algebra

F1 = """scalars rational
object hopf kc2
dim 2
unit 0 1
mul 0 0 0 1
mul 0 1 1 1
mul 1 0 1 1
mul 1 1 0 1
comul 0 0 0 1
comul 1 1 1 1
counit 0 1
counit 1 1
antipode 0 0 1
antipode 1 1 1
end
"""


def test_f1_document():
    doc = parse_scalg(F1)
    H = build_object(doc, "kc2")
    assert H.dim == 2 and H.same_as(kc2())
    assert verify_hopf(H).ok


def test_comments_and_blank_lines():
    text = "# header\n\n" + F1.replace("dim 2", "dim 2   # two elements")
    assert build_object(parse_scalg(text), "kc2").same_as(kc2())


def test_antipode_may_be_omitted():
    text = "\n".join(l for l in F1.splitlines() if not l.startswith("antipode"))
    assert build_object(parse_scalg(text), "kc2").same_as(kc2())


def test_duplicates_are_summed():
    text = F1.replace("\nmul 0 0 0 1\n", "\nmul 0 0 0 1/2\nmul 0 0 0 1/2\n")
    assert build_object(parse_scalg(text), "kc2").mul[0, 0, 0] == 1


@pytest.mark.parametrize(
    "text,needle,line",
    [
        ("scalars gf 4\n", "modulus not prime: 4", 1),
        ("scalars complex\n", "unknown field descriptor", 1),
        (F1.replace("mul 1 1 0 1", "mul 1 1 2 1"), "index out of range", 8),
        (F1.replace("end\n", ""), "not terminated", 2),
        (F1 + "object action M hopf kc2 algebra A\nend\n", "unknown algebra object", 16),
        (F1.replace("unit 0 1", "unit 0 x"), "bad scalar", 4),
        (F1.replace("unit 0 1", "frobnicate 0 1"), "unknown directive", 4),
        ("object hopf H\n", "missing 'scalars'", 1),
    ],
)
def test_parse_errors(text, needle, line):
    with pytest.raises(ScalgError, match=needle) as exc:
        parse_scalg(text)
    assert exc.value.line == line
    assert str(exc.value).startswith(f"line {line}:")


def test_gf7_scalars():
    doc = parse_scalg(F1.replace("rational", "gf 7").replace("mul 0 0 0 1", "mul 0 0 0 8"))
    H = build_object(doc, "kc2")
    assert H.field == Field(7) and H.mul[0, 0, 0] == 1


def test_non_hopf_is_a_builder_error():
    text = F1.replace("mul 1 1 0 1", "mul 1 1 1 1").replace("antipode 0 0 1\nantipode 1 1 1\n", "")
    with pytest.raises(BuilderError):
        build_object(parse_scalg(text), "kc2")


def _same(a, b):
    return a.shape == b.shape and is_zero(a - b)


@pytest.mark.parametrize("build", [kc2, sweedler, ks3, fun_s3])
@pytest.mark.parametrize("fld", [QQ, Field(7)])
def test_hopf_roundtrip(build, fld):
    H = build(fld)
    text = serialize(H)
    (K,) = build_all(parse_scalg(text)).values()
    assert K.same_as(H)
    assert serialize(K) == text


def test_action_roundtrip():
    M = dual_regular_module_algebra(sweedler())
    text = serialize(M)
    objs = build_all(parse_scalg(text))
    (N,) = [o for o in objs.values() if hasattr(o, "action") and hasattr(o, "alg")]
    assert _same(N.action, M.action) and _same(N.alg.mul, M.alg.mul)
    assert verify_module_algebra(N).ok
    assert serialize(N) == text


@pytest.mark.parametrize("build", [f4, f5])
def test_group_action_roundtrip(build):
    M = build()
    s = Serializer(QQ)
    s.action(M, group=C2)
    text = s.text()
    objs = build_all(parse_scalg(text))
    assert _same(objs["M"].action, M.action)
    assert objs["G"].table == C2.table


def test_grading_roundtrip():
    H = ks3()
    from hopfcentre.modalg import AlgebraData

    s = Serializer(QQ)
    s.grading(S3, AlgebraData(QQ, H.mul, H.unit), range(6))
    objs = build_all(parse_scalg(s.text()))
    assert verify_module_algebra(objs["grading"]).ok


def test_centre_roundtrip_reverifies():
    Z = full_centre(f4())
    text = serialize(Z.yd)
    objs = build_all(parse_scalg(text))
    Y = objs["Z"]
    assert isinstance(Y, YDAlgebraData)
    for key in ("action", "coaction", "mul", "unit"):
        assert _same(getattr(Y, key), getattr(Z.yd, key))
    assert verify_yd_algebra(Y).ok


def test_double_roundtrip():
    D = drinfeld_double(kc2()).hopf
    (K,) = build_all(parse_scalg(serialize(D))).values()
    assert K.same_as(D) and verify_hopf(K).ok


@given(st.lists(st.tuples(st.integers(0, 1), st.integers(0, 1), st.integers(0, 1), st.integers(-5, 5)), max_size=12))
def test_algebra_entries_roundtrip(entries):
    from hopfcentre.modalg import AlgebraData

    mul = QQ.zeros(2, 2, 2)
    for i, j, k, c in entries:
        mul[i, j, k] += QQ(c)
    A = AlgebraData(QQ, mul, QQ.array([1, 0]))
    text = serialize(A)
    (B,) = build_all(parse_scalg(text)).values()
    assert _same(B.mul, A.mul) and _same(B.unit, A.unit)
    assert serialize(B) == text
