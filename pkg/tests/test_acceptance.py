"""One test per acceptance criterion; each records a PASS/FAIL line in the terminal summary."""

import importlib.util
import itertools
import random
from pathlib import Path

import numpy as np
import pytest

from hopfcentre.centre import (
    centralizer,
    compare_trivial_centre,
    embed_and_compare,
    full_centre,
    morita_amplification,
)
from hopfcentre.cli import run
from hopfcentre.double import drinfeld_double, verify_double, yd_double_roundtrip
from hopfcentre.exact_linalg import QQ, Field, coordinates, inverse, is_zero, NotInSpan, rank, same_row_space
from hopfcentre.fixtures import (
    C2,
    HOPF_FIXTURES,
    S3,
    f4,
    f5,
    graded_kc2,
    graded_mat2_c2,
    graded_s3_group_algebra,
    graded_trivial_mat2,
    graded_x_squared_one,
    kc2,
    kc3,
    ks3,
    sweedler,
)
from hopfcentre.grouplike import g_full_centre, graded_full_centre, zg_convert
from hopfcentre.hopf import (
    HopfAlgebraData,
    check_lemma_aux,
    dual_hopf,
    opposite_hopf,
    solve_antipode,
    verify_hopf,
)
from hopfcentre.modalg import dual_regular_module_algebra, trivial_module_algebra
from hopfcentre.scalg import build_all, parse_scalg, serialize
from hopfcentre.smash import smash_product, theta_map
from hopfcentre.yd import (
    ClosureError,
    YDModuleData,
    adjoint_yd,
    adjunction_maps,
    braiding,
    hexagon_checks,
    induce_R,
    quantum_commutative_check,
    trivial_yd,
    verify_yd,
)

ROOT = Path(__file__).resolve().parent.parent
GF7 = Field(7)


def module_fixtures():
    out = {"f4": f4(), "f5": f5(), "f4_gf7": f4(GF7)}
    for name, build in HOPF_FIXTURES.items():
        H = build()
        out[f"k/{name}"] = trivial_module_algebra(H)
        if H.dim <= 4:
            out[f"dual/{name}"] = dual_regular_module_algebra(H)
    out.update(
        graded_kc2=graded_kc2(),
        graded_x2=graded_x_squared_one(),
        graded_mat2_trivial=graded_trivial_mat2(),
        graded_mat2=graded_mat2_c2(),
        graded_s3=graded_s3_group_algebra(),
    )
    return out


MODULES = module_fixtures()


@pytest.fixture(scope="module")
def centres():
    return {name: full_centre(M) for name, M in MODULES.items()}


def yd_pool(H, centres):
    pool = {"k": trivial_yd(H), "ad": adjoint_yd(H)}
    if H.dim <= 2:
        pool["reg"] = induce_R(H, H.mul)
    for name, Z in centres.items():
        if Z.yd.hopf is H or (Z.yd.hopf.same_as(H)):
            if Z.dim <= 4:
                pool[f"Z({name})"] = Z.yd.module
    return pool


def transported(M, rnd):
    """Same action, coaction conjugated by a random invertible matrix."""
    d = M.dim
    while True:
        P = QQ.array([[rnd.randint(-2, 2) for _ in range(d)] for _ in range(d)])
        if rank(P) == d:
            break
    return YDModuleData(M.hopf, M.action, np.einsum("ab,bhc,cd->ahd", inverse(P), M.coaction, P))


def flipped(M):
    return YDModuleData(M.hopf, M.action, M.coaction.transpose(0, 2, 1).copy()) if M.dim == M.hopf.dim else None


# 1


def _with(H, name, arr):
    data = {k: getattr(H, k) for k in ("field", "mul", "unit", "comul", "counit", "antipode", "antipode_inv")}
    data[name] = arr
    return HopfAlgebraData(**data)


def test_criterion_1_axiom_suites(criterion):
    bad = []
    for fld in (QQ, GF7):
        for name, build in HOPF_FIXTURES.items():
            H = build(fld)
            for tag, K in (("", H), ("dual ", dual_hopf(H)), ("op ", opposite_hopf(H))):
                if not verify_hopf(K).ok:
                    bad.append(f"{tag}{name}/{fld.p}")
    rnd = random.Random(20240611)
    rejected, trials = 0, 0
    for fld in (QQ, GF7):
        H = ks3(fld)
        for _ in range(15):
            key = rnd.choice(["mul", "comul", "unit", "counit", "antipode"])
            arr = getattr(H, key).copy()
            idx = tuple(rnd.randrange(s) for s in arr.shape)
            arr[idx] = arr[idx] + fld(rnd.choice([1, 2, 3]))
            rep = verify_hopf(_with(H, key, arr))
            trials += 1
            if not rep.ok and all(c.witness is not None for c in rep.failures):
                rejected += 1
            else:
                bad.append(f"mutation {key}{idx} accepted")
    ok = not bad and rejected == trials >= 20
    criterion(1, ok, f"{rejected}/{trials} k[S3] mutations rejected with witnesses" + (f"; {bad}" if bad else ""))
    assert ok, bad


# 2


def test_criterion_2_trivial_centre_is_H_op(criterion):
    bad = []
    for fld in (QQ, GF7):
        for name, build in HOPF_FIXTURES.items():
            H = build(fld)
            if not compare_trivial_centre(H, "sinv", "sinv").ok:
                bad.append(f"S^-1/{name}/{fld.p}")
            if not compare_trivial_centre(H, "s", "s").ok:
                bad.append(f"S/{name}/{fld.p}")
    criterion(
        2,
        not bad,
        "eps(a)S^-1(h) onto H^op for the formula structure; eps(a)S(h) for the default structure" + (f"; {bad}" if bad else ""),
    )
    assert not bad


# 3


def test_criterion_3_dual_example(criterion):
    bad = []
    for name, build in (("kc2", kc2), ("kc3", kc3), ("H4", sweedler)):
        H = build()
        n = H.dim
        M = dual_regular_module_algebra(H)
        S = smash_product(M)
        ops = theta_map(S)
        if rank(ops.reshape(S.dim, -1)) != n * n:
            bad.append(f"{name}: theta rank")
        B = centralizer(S)
        if B.shape[0] != n:
            bad.append(f"{name}: centraliser dim {B.shape[0]}")
        right = np.array([M.alg.right_mult(QQ.identity(n)[j]).ravel() for j in range(n)], dtype=object)
        try:
            coordinates(right, np.einsum("zu,uab->zab", B, ops).reshape(B.shape[0], -1))
        except NotInSpan:
            bad.append(f"{name}: centre element is not a right multiplication")
    criterion(3, not bad, "theta bijective, dim C = dim H, centre acts by right multiplications" + (f"; {bad}" if bad else ""))
    assert not bad


# 4


def _brute_centraliser_dim(M):
    S = smash_product(M)
    d = S.dim
    rows = []
    for u in range(d):
        # (a#1) u - u (a#1) over the basis of A
        rows.append(np.concatenate([S.mul[S.index(a, 0), u] - S.mul[u, S.index(a, 0)] for a in range(M.alg.dim)]))
    return d - rank(np.array(rows, dtype=object).reshape(d, -1))


def test_criterion_4_worked_centres(criterion, centres):
    info = {}
    for name, M in (("F4", f4()), ("F5", f5())):
        Z = centres[name.lower()]
        Zg = zg_convert(C2, Z.yd)
        info[name] = (Z.dim, _brute_centraliser_dim(M), tuple(sorted(Zg.degrees)))
    ok = info["F4"] == (2, 2, (0, 0)) and info["F5"] == (2, 2, (0, 1))
    criterion(4, ok, f"(dim, brute-force dim, degrees): {info}")
    assert ok


# 5


def _literal_embedding(M):
    """S^-1 embedding against the centre built with the matching (S^-1, S^2) formulas."""
    try:
        Z = full_centre(M, "sinv")
    except ClosureError:
        return False
    return embed_and_compare(M, Z, direction="sinv").ok


def test_criterion_5_embedding_S_inverse(criterion, centres):
    literal_fail = [n for n, M in MODULES.items() if not _literal_embedding(M)]
    s_fail = [n for n, M in MODULES.items() if not embed_and_compare(M, centres[n], direction="s").ok]
    ok = not literal_fail
    detail = f"a#h -> S^-1(h)(x)a fails on {literal_fail or 'nothing'}; a#h -> S(h)(x)a fails on {s_fail or 'nothing'} ({len(MODULES)} fixtures)"
    criterion(5, ok, detail)
    assert not s_fail
    assert ok, detail


# 6


def test_criterion_6_specialisations(criterion, centres):
    bad = []
    for name, M in (("f4", f4()), ("f5", f5())):
        G = g_full_centre(C2, M, centres[name])
        if not G.report.ok or not G.report["degree of x # g^-1 is g"].ok:
            bad.append(name)
    graded = {
        "graded_kc2": (C2, [0, 1]),
        "graded_x2": (C2, [0, 1]),
        "graded_mat2_trivial": (C2, [0, 0, 0, 0]),
        "graded_mat2": (C2, [0, 1, 1, 0]),
        "graded_s3": (S3, list(range(6))),
    }
    for name, (G, degrees) in graded.items():
        F = graded_full_centre(G, MODULES[name], degrees, centres[name])
        if not F.report.ok or F.dim != centres[name].dim:
            bad.append(name)
    criterion(6, not bad, "fcga and graded pipelines agree with the centraliser" + (f"; {bad}" if bad else ""))
    assert not bad


# 7


def test_criterion_7_morita(criterion):
    reps = {name: morita_amplification(M, 2) for name, M in (("F4", f4()), ("F5", f5()))}
    ok = all(r.ok for r in reps.values())
    criterion(7, ok, "z -> z(I_2 # 1) is a YD-algebra isomorphism for F4 and F5")
    assert ok


# 8


def test_criterion_8_yd_machinery(criterion, centres):
    rnd = random.Random(7)
    bad, mutants, rejected = [], 0, 0
    for name in HOPF_FIXTURES:
        H = HOPF_FIXTURES[name]()
        hz = {k: Z for k, Z in centres.items() if Z.yd.hopf.same_as(H)}
        pool = yd_pool(H, hz)
        for label, M in pool.items():
            rep = verify_yd(M)
            if not rep.ok or not rep["com/yde verdicts agree"].ok:
                bad.append(f"{name}/{label} invalid")
            for mut in (transported(M, rnd), flipped(M)):
                if mut is None:
                    continue
                r = verify_yd(mut)
                mutants += 1
                rejected += not r.ok
                if r["yd condition (com)"].ok != r["yd condition (yde)"].ok:
                    bad.append(f"{name}/{label} mutant: com/yde disagree")
        small = {k: M for k, M in pool.items() if M.dim <= 4}
        for (a, X), (b, Y) in itertools.product(small.items(), repeat=2):
            if not braiding(X, Y)[2].ok:
                bad.append(f"{name}: braiding {a},{b}")
        for (a, X), (b, Y), (c, Z) in itertools.product(small.items(), repeat=3):
            if not hexagon_checks(X, Y, Z).ok:
                bad.append(f"{name}: hexagon {a},{b},{c}")
    qc = [n for n, Z in centres.items() if not quantum_commutative_check(Z.yd).ok]
    bad += [f"QC {n}" for n in qc]
    ok = not bad and rejected > 0
    criterion(8, ok, f"com/yde agree on {mutants} mutants ({rejected} non-YD); hexagons and QC on all pools" + (f"; {bad[:5]}" if bad else ""))
    assert ok, bad


# 9


def test_criterion_9_double(criterion, centres):
    bad = []
    rnd = random.Random(11)
    for name, H in (("kc2", kc2()), ("H4", sweedler())):
        D = drinfeld_double(H)
        if not verify_double(D).ok or not is_zero(solve_antipode(D.hopf) - D.hopf.antipode):
            bad.append(f"D({name}) Hopf")
        hz = {k: Z for k, Z in centres.items() if Z.yd.hopf.same_as(H)}
        for label, M in yd_pool(H, hz).items():
            perm = H.field.identity(H.dim)[::-1].copy()
            if not yd_double_roundtrip(D, M, [perm]).ok:
                bad.append(f"{name}/{label} rejected")
            for mut in (transported(M, rnd), flipped(M)):
                if mut is None:
                    continue
                if yd_double_roundtrip(D, mut).ok != verify_yd(mut).ok:
                    bad.append(f"{name}/{label} mutant verdict differs")
    criterion(9, not bad, "D(kC2), D(H4) Hopf; roundtrip accepts YD fixtures and rejects violations" + (f"; {bad}" if bad else ""))
    assert not bad


# 10


def test_criterion_10_identities(criterion, centres):
    bad = []
    for fld in (QQ, GF7):
        for name, build in HOPF_FIXTURES.items():
            H = build(fld)
            for K in (H, dual_hopf(H), opposite_hopf(H)):
                if not check_lemma_aux(K).ok:
                    bad.append(f"lemma {name}")
    for name, build in HOPF_FIXTURES.items():
        H = build()
        hz = {k: Z for k, Z in centres.items() if Z.yd.hopf.same_as(H)}
        Ns = [trivial_yd(H).action, H.mul] + [M.action for M in MODULES.values() if M.hopf.same_as(H)]
        for label, M in yd_pool(H, hz).items():
            for N in Ns:
                _, beta, rep = adjunction_maps(M, N)
                if not rep.ok or rank(beta) != N.shape[1]:
                    bad.append(f"adjunction {name}/{label}")
    criterion(10, not bad, "lemma aux on all fixtures, duals and opposites; triangles and rank(beta) = dim N" + (f"; {bad}" if bad else ""))
    assert not bad


# 11


def _fixture_documents():
    spec = importlib.util.spec_from_file_location("make_fixtures", ROOT / "scripts" / "make_fixtures.py")
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    return mod.documents()


def test_criterion_11_determinism(criterion, centres):
    bad = []
    files = sorted((ROOT / "fixtures").glob("*.scalg"))
    for p in files:
        if run(["centre", str(p)]) != run(["centre", str(p)]):
            bad.append(f"centre {p.name}")
    for name, text in _fixture_documents().items():
        if (ROOT / "fixtures" / f"{name}.scalg").read_text() != text:
            bad.append(f"stale fixture {name}")
    objs = [build() for build in HOPF_FIXTURES.values()] + [build(GF7) for build in HOPF_FIXTURES.values()]
    objs += list(MODULES.values()) + [Z.yd for Z in centres.values()]
    objs += [drinfeld_double(kc2()).hopf, drinfeld_double(sweedler()).hopf]
    for x in objs:
        text = serialize(x)
        built = build_all(parse_scalg(text))
        again = serialize(list(built.values())[-1])
        if again != text:
            bad.append(f"roundtrip {type(x).__name__}")
    ok = not bad
    criterion(11, ok, f"{len(files)} fixture files, {len(objs)} serialized objects" + (f"; {bad}" if bad else ""))
    assert ok, bad
