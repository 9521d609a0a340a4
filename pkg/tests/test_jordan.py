import random
from fractions import Fraction

import pytest

from conftest import complete, complete_bipartite, cycle
from nbjordan import exactmat, intpoly
from nbjordan.errors import DomainError
from nbjordan.families import family_chain, fixture, k44_plus_k1
from nbjordan.graphs import Graph
from nbjordan.jordan import (
    JordanChain,
    check_eigvec_equations,
    check_gen_eigvec_equations,
    compare_B_M,
    extract_chain,
    is_defective,
    jordan_profile,
    lift_chain,
    torres_multiplicities,
    twin_chain_constraints,
    twin_eigen,
    unicyclic_gen_vectors,
    verify_chain,
)
from nbjordan.nbmatrices import NbMatrixBundle, build_B, build_K
from nbjordan.numfield import NumberField, field_kernel, field_mat_mul


def fig1() -> Graph:
    return Graph.from_edges(5, [(1, 2), (2, 3), (1, 3), (1, 4), (4, 5)])


def profile_map(report):
    return {p.factor_string: p for p in report.profiles}


def test_profile_K_C3():
    rep = jordan_profile(build_K(cycle(3)), "K")
    pm = profile_map(rep)
    assert pm["x-1"].multiplicity == 2
    assert pm["x-1"].nullities == [1, 2]
    assert pm["x-1"].blocks == [2]
    assert pm["x-1"].defective
    assert pm["x^2+x+1"].blocks == [1, 1]
    assert not pm["x^2+x+1"].defective


def test_profile_accounting():
    for g in (cycle(5), complete(4), fig1(), k44_plus_k1()):
        rep = jordan_profile(build_K(g), "K")
        assert sum(p.multiplicity * p.degree for p in rep.profiles) == 2 * g.n
        for p in rep.profiles:
            assert p.nullities == sorted(p.nullities)
            if p.blocks:
                assert sum(p.blocks) == p.multiplicity


def test_is_defective_examples():
    flag, factors = is_defective(build_K(cycle(7)))
    assert flag and factors == ["x-1"]
    flag, factors = is_defective(build_K(k44_plus_k1()))
    assert flag and factors == ["x+2"]
    assert not is_defective(build_K(complete(4)))[0]


def test_eigvec_equations_regular_graph():
    # on a d-regular graph [1..1, -1/lam ..] is an eigenvector for lam
    # solving lam^2 - d lam + (d-1) = 0, i.e. lam in {1, d-1}
    g = complete(4)  # 3-regular: lam^2 - 3 lam + 2 = 0 gives lam in {1, 2}
    for lam in (1, 2):
        v = [Fraction(1)] * 4 + [Fraction(-1, lam)] * 4
        assert check_eigvec_equations(g, lam, v)
    v = [Fraction(1)] * 4 + [Fraction(-1, 3)] * 4
    assert not check_eigvec_equations(g, 3, v)


def test_eigvec_equations_random_vector_rejected():
    rng = random.Random(3)
    g = cycle(5)
    v = [Fraction(rng.randint(-5, 5)) for _ in range(10)]
    assert not check_eigvec_equations(g, 1, v)


def test_eigvec_equations_zero_lambda_rejected():
    with pytest.raises(DomainError):
        check_eigvec_equations(cycle(3), 0, [Fraction(0)] * 6)


def test_gen_eigvec_requires_eigenvector():
    g = cycle(3)
    with pytest.raises(DomainError):
        check_gen_eigvec_equations(g, 1, [Fraction(1)] * 6, [Fraction(0)] * 6)


def test_gen_eigvec_u_equal_v_rejected():
    fam = family_chain("crustacean_a")
    v = fam.chain.vectors[0]
    assert not check_gen_eigvec_equations(
        fam.graph, fam.chain.eigenvalue, v, v
    )


def test_extract_chain_examples():
    k = build_K(cycle(3))
    chain = extract_chain(k, (-1, 1), 2, "K")
    assert chain is not None and chain.length == 2
    assert verify_chain(k, chain)
    # fig5b: block of size 3 at x^2+x+2
    k5b = build_K(fixture("fig5b"))
    chain = extract_chain(k5b, (2, 1, 1), 3, "K")
    assert chain is not None and chain.length == 3
    assert extract_chain(k5b, (2, 1, 1), 4, "K") is None
    # K4 has no block of size >= 2 anywhere
    k4 = build_K(complete(4))
    cp = exactmat.charpoly(k4)
    _, sf = intpoly.squarefree_decomposition(cp)
    for q, e in sf:
        if e < 2:
            continue
        for f in intpoly.refine_factor(q)[0]:
            assert extract_chain(k4, f, 2, "K") is None


def test_extract_chain_guards():
    with pytest.raises(DomainError):
        extract_chain(build_K(cycle(3)), (5, 1), 2, "K")  # x+5 not a factor
    with pytest.raises(DomainError):
        extract_chain(build_K(cycle(3)), (1, 0, 0, 1), 2, "K")  # degree 3


def test_lift_chain_shortens_for_cycle():
    g = cycle(3)
    bundle = NbMatrixBundle(g)
    chain = extract_chain(bundle.K, (-1, 1), 2, "K")
    lifted, dropped = lift_chain(bundle, chain)
    assert dropped == 1
    assert lifted is not None and lifted.length == 1


def test_lift_chain_preserves_quadratic():
    for name in ("crustacean_a", "restricted_diamonds"):
        fam = family_chain(name)
        bundle = NbMatrixBundle(fam.graph)
        lifted, dropped = lift_chain(bundle, fam.chain)
        assert dropped == 0
        assert lifted.length == 2


def test_compare_B_M():
    assert compare_B_M(complete(4))["equal"]
    res = compare_B_M(cycle(7))
    assert res["differing_factors"] == ["x-1"]
    res = compare_B_M(cycle(8))
    assert set(res["differing_factors"]) == {"x-1", "x+1"}
    res = compare_B_M(fig1())
    assert res["differing_factors"] == ["x-1"]


def test_unicyclic_gen_vectors():
    v, u = unicyclic_gen_vectors(cycle(5), 1)
    assert v == [1] * 5 + [-1] * 5
    assert u[:5] == [0] * 5 and u[5:] == [1] * 5
    v, u = unicyclic_gen_vectors(fig1(), 1)
    assert u[:5] == [0, 0, 0, -1, -2]  # distances 0,0,0,1,2 to the triangle
    unicyclic_gen_vectors(cycle(6), -1)
    with pytest.raises(DomainError):
        unicyclic_gen_vectors(cycle(5), -1)
    with pytest.raises(DomainError):
        unicyclic_gen_vectors(complete(4), 1)


def test_twin_eigen():
    g = complete_bipartite(2, 3)
    lam, v = twin_eigen(g, 0, 1)
    assert lam.field.modulus == (2, 0, 1)  # lam^2 = -2 for degree 3
    assert check_eigvec_equations(g, lam, v)
    lam, v = twin_eigen(complete(4), 0, 1)
    assert lam.field.modulus == (2, 1, 1)  # adjacent twins, d = 3
    path = Graph.from_edges(3, [(1, 2), (2, 3)])
    with pytest.raises(DomainError):
        twin_eigen(path, 0, 2)  # degree-1 twins excluded
    with pytest.raises(DomainError):
        twin_eigen(complete(4), 0, 0)


def test_twin_chain_constraints():
    # C4: opposite vertices are non-adjacent twins of degree 2; the twin
    # polynomial is x^2+1 but the defective chain lives at x-1, so the
    # constraint is u_x = u_y
    g = cycle(4)
    chain = extract_chain(build_K(g), (-1, 1), 2, "K")
    assert chain is not None
    assert twin_chain_constraints(g, 0, 2, chain)
    # synthetic violation
    field = chain.field
    bad_u = list(chain.vectors[1])
    bad_u[0] = bad_u[0] + 1
    bad = JordanChain("K", field, chain.eigenvalue,
                      [chain.vectors[0], bad_u])
    assert not twin_chain_constraints(g, 0, 2, bad)


def test_torres_multiplicities():
    assert torres_multiplicities(complete(4))
    assert torres_multiplicities(complete_bipartite(3, 3))
    fam_graph = fixture("crustacean_a")
    assert torres_multiplicities(fam_graph)
    with pytest.raises(DomainError):
        torres_multiplicities(cycle(5))


def test_profile_matches_field_rank_oracle():
    # brute-force oracle: nullities of (K - lam I)^j over the explicit
    # quadratic field, compared against the nullity-arithmetic profile
    for name, modulus in (
        ("crustacean_a", (2, 0, 1)),
        ("restricted_diamonds", (2, 1, 1)),
        ("diamonds", (2, 1, 1)),
    ):
        g = fixture(name)
        k = build_K(g)
        rep = jordan_profile(k, "K")
        prof = next(p for p in rep.profiles if p.factor == modulus)
        field = NumberField(modulus)
        lam = field.generator()
        a = [
            [field.from_rational(k[i][j]) - (lam if i == j else 0)
             for j in range(2 * g.n)]
            for i in range(2 * g.n)
        ]
        power = a
        zero, one = field.zero(), field.one()
        for j, nu in enumerate(prof.nullities, start=1):
            field_nullity = len(field_kernel(power, zero, one))
            assert 2 * field_nullity == nu
            power = field_mat_mul(power, a)
