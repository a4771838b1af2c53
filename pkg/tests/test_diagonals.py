import math
import random
from fractions import Fraction

import pytest

from cyclopoint.exact import RootOfUnity, totient
from cyclopoint.diagonals import (
    PARAM_FAMILIES, SPORADIC, SYMMETRIES, TABLE, DiagonalRatio, QuadrupleSolution,
    apply_symmetry, cj_solutions, cos_sum_element, count_fixing_automorphisms,
    defective_congruence, diagonal_element, diagonal_rep, field_degree, fixing_units,
    is_defective, lemma42_solutions, oracle_degree, quadruple_poly, quadruple_value,
    ratio_degree, ratio_minpoly, solve_quadruple_from_cj, symmetry_orbit, theorem11_scan,
    totient_bound_check, verify_cj, verify_diagonal,
)
from cyclopoint.diagonals import _cj
from cyclopoint.metallic import MetallicParam as M

Z = RootOfUnity
F = Fraction


def coprime_pairs(N):
    return [(a, b) for a in range(1, N) for b in range(1, N) if math.gcd(a, b) == 1]


# ------------------------------------------------------------ diagonals

def test_diagonal_rep_examples():
    assert diagonal_rep(5, 1) == (3, 17)
    assert diagonal_rep(5, 2) == (1, 19)
    assert diagonal_rep(10, 1) == (8, 32)
    with pytest.raises(ValueError):
        diagonal_rep(5, 10)


def test_golden_ratio_display():
    ratio = diagonal_element(5, 2) / diagonal_element(5, 1)
    assert ratio_minpoly(5, 2, 1).pretty() == "t^2 - t - 1"
    assert abs(ratio.to_complex() - (1 + 5 ** 0.5) / 2) < 1e-12


@pytest.mark.parametrize("N", range(3, 41))
def test_every_diagonal_verifies(N):
    for a in range(1, N):
        assert verify_diagonal(N, a)
        e1, e2 = diagonal_rep(N, a)
        assert (e1 + e2) % (4 * N) == 0        # the two summands multiply to 1
        # independent check of the absolute value through floating point
        assert abs(diagonal_element(N, a).to_complex() - abs(1 - complex(math.cos(2 * math.pi * a / N), math.sin(2 * math.pi * a / N)))) < 1e-9


def test_diagonal_ratio_validation():
    with pytest.raises(ValueError):
        DiagonalRatio(6, 2, 4)
    with pytest.raises(ValueError):
        DiagonalRatio(6, 0, 1)
    r = DiagonalRatio(7, 1, 6)
    assert r.trivial and r.ratio().as_rational() == 1
    assert DiagonalRatio(10, 1, 3).to_json()["numerator_exps"] == [8, 32]


# ------------------------------------------------------------ cosine sums

def test_sporadic_quadruples_vanish():
    assert len(SPORADIC) == 10
    for s in SPORADIC:
        assert verify_cj(s), s


def test_sporadic_first_entry_numerically():
    vals = [F(2, 5), F(1, 2), F(4, 5), F(1, 3)]
    assert abs(sum(math.cos(math.pi * v) for v in vals)) < 1e-12
    assert cos_sum_element(vals).is_zero()


def test_family_examples():
    assert verify_cj(_cj("family1", (F(1, 7), F(1, 11), F(6, 7), F(10, 11))))
    assert verify_cj(_cj("family2", (F(1, 5), F(7, 15), F(13, 15), F(1, 2))))
    assert not cos_sum_element([F(1, 5), F(1, 7), F(1, 3), F(1, 2)]).is_zero()


def test_cj_solutions_listing():
    sols = cj_solutions(6)
    assert all(verify_cj(s) for s in sols)
    kinds = {s.kind for s in sols}
    assert kinds == {"family1", "family2", "sporadic"}
    vals = [s.values for s in sols if s.kind != "sporadic"]
    assert len(vals) == len(set(vals))
    assert tuple(sorted((F(1, 5), F(7, 15), F(13, 15), F(1, 2)))) in vals
    # every family member with denominators <= 3 appears
    assert _cj("family1", (F(1, 3), F(1, 2), F(2, 3), F(1, 2))).values in vals
    with pytest.raises(ValueError):
        cj_solutions(0)


def _fold2(vals):
    # cos(pi v) depends only on v up to v -> -v mod 2
    return tuple(sorted(min(v % 2, 2 - v % 2) for v in vals))


def test_cj_listing_against_brute_force():
    # every vanishing sum with denominators <= 4 is a listed solution up to folding
    import itertools
    grid = sorted({F(p, q) for q in range(1, 5) for p in range(0, q + 1)})
    listed = {_fold2(s.values) for s in cj_solutions(4)}
    hits = 0
    for combo in itertools.combinations_with_replacement(grid, 4):
        if cos_sum_element(combo).is_zero():
            hits += 1
            assert _fold2(combo) in listed, combo
    assert hits > 10


# ------------------------------------------------------------ quadruples

def test_quadruple_poly_shape():
    f = quadruple_poly()
    assert len(f.terms) == 8 and f.vars == ("x1", "x2", "y1", "y2")


def test_table_first_row():
    q = TABLE[0]
    assert (q.x1, q.y2, q.x2, q.y1) == (Z(40, 9), Z(40, 39), Z(60, 17), Z(60, 7))
    assert q.verify()


def test_family_a1_at_trivial_parameter():
    q = QuadrupleSolution(Z(3, 2), Z(24, 11), Z(24, 5), Z(3, 1))
    assert q.verify()
    A1 = next(f for f in PARAM_FAMILIES if f.name == "A1")
    assert A1.instantiate(Z(1, 0)).tup() == q.tup()


def test_lemma42_loads_clean():
    res = lemma42_solutions()
    assert len(res.rows) == 30 and not res.quarantined
    assert [f.name for f in res.families] == ["A1", "A2", "A3", "B1", "B2", "B3"]
    repaired = {f.name: f.signs for f in res.families if f.note}
    assert repaired == {"B2": (1, 1, 1, -1), "B3": (1, 1, 1, -1)}


def test_families_vanish_at_sample_parameters():
    rng = random.Random(6)
    for fam in lemma42_solutions().families:
        for _ in range(10):
            ps = [Z(m, rng.randrange(m)) for m in rng.sample(range(1, 30), fam.nparams)]
            assert fam.instantiate(*ps).verify()


def test_sign_variants_vanish():
    for q in TABLE:
        assert all(v.verify() for v in q.sign_variants())


def _random_verified_quadruples(count, seed=0):
    rng = random.Random(seed)
    fams = lemma42_solutions().families
    out = []
    pool = list(TABLE)
    while len(out) < count:
        if rng.random() < 0.5:
            q = rng.choice(pool)
        else:
            fam = rng.choice(fams)
            q = fam.instantiate(*[Z(m, rng.randrange(m)) for m in
                                  (rng.randint(1, 24) for _ in range(fam.nparams))])
        q = rng.choice(q.sign_variants())
        assert q.verify()
        out.append(q)
    return out


def test_symmetries_preserve_zeros():
    assert len(SYMMETRIES) == 7
    for q in _random_verified_quadruples(100):
        for i in range(1, 8):
            assert apply_symmetry(i, q).verify()


def test_symmetries_are_involutions_or_permutations():
    q = TABLE[3]
    for i in range(1, 8):
        assert apply_symmetry(i, apply_symmetry(i, q)).tup() == q.tup()


def test_symmetry_orbit_closed():
    orbit = symmetry_orbit(TABLE[0])
    keys = {o.tup() for o in orbit}
    for o in orbit:
        assert o.verify()
        for i in range(1, 8):
            assert apply_symmetry(i, o).tup() in keys


def test_nonzero_point_rejected():
    assert not quadruple_value((Z(5, 1), Z(7, 1), Z(3, 1), Z(1, 0))).is_zero()


def test_solve_from_sporadic_contains_table_row():
    sols = solve_quadruple_from_cj(SPORADIC[0])
    assert len(sols) == 4
    assert any(s.tup() == TABLE[0].tup() for s in sols)
    assert all(s.verify() for s in sols)


def test_solve_from_cj_any_perm_and_signs():
    import itertools
    cj = SPORADIC[4]
    for perm in itertools.permutations(range(4)):
        for signs in itertools.product((1, -1), repeat=4):
            for q in solve_quadruple_from_cj(cj, perm, signs):
                assert q.verify()


def test_solve_from_equal_family_parameters_is_degenerate():
    cj = _cj("family1", (F(1, 3), F(1, 3), F(2, 3), F(2, 3)))
    sols = solve_quadruple_from_cj(cj, (0, 2, 1, 3))
    assert sols
    for q in sols:
        assert q.x1 in (q.x2, -q.x2, q.x2.inverse(), -q.x2.inverse())
    brute = set()
    r12 = [Z(12, k) for k in range(12)]
    for x1 in r12:
        for x2 in r12:
            for y1 in r12:
                for y2 in r12:
                    if x1 in (x2, -x2, x2.inverse(), -x2.inverse()) and \
                            quadruple_value((x1, x2, y1, y2)).is_zero():
                        brute.add((x1, x2, y1, y2))
    assert {q.tup() for q in sols} <= brute


# ------------------------------------------------------------ defectiveness

def test_congruence_examples():
    assert defective_congruence(20, 1, 3) == 11
    assert defective_congruence(20, 1, 2) is None
    for N in (4, 6, 10, 12):
        # with a a unit the congruence pins k down to N + 1
        assert defective_congruence(2 * N, 1, 1) == N + 1
        k = defective_congruence(2 * N, 3, 3)
        assert k is not None and (3 * k - N - 3) % (2 * N) == 0


def test_defective_examples():
    d = is_defective(5, 2, 1)
    assert d.defective and d.status == "by_k" and d.k == 11
    assert not is_defective(10, 1, 2).defective
    assert is_defective(7, 1, 6).status == "trivial"
    assert is_defective(7, 1, 1).status == "trivial"


def test_defectiveness_matches_degree_drop():
    # defective exactly when d1/d2 generates a proper subfield of Q(d1, d2)
    for N in range(3, 31):
        for a, b in coprime_pairs(N):
            d = is_defective(N, a, b)
            fd = field_degree(N, a, b)
            drop = oracle_degree(N, a, b) < fd
            if d.status == "trivial":
                # ratio 1: a genuine drop unless the diagonal itself is rational
                assert drop == (fd > 1), (N, a, b)
            else:
                assert d.defective == drop, (N, a, b)


def test_plain_congruence_suffices_at_full_real_degree():
    # where Q(d1, d2) is all of Q(zeta_4N)^+, the unsigned congruence alone decides
    for N in range(3, 31):
        half = totient(4 * N) // 2
        for a, b in coprime_pairs(N):
            if field_degree(N, a, b) != half or DiagonalRatio(N, a, b).trivial:
                continue
            plain = is_defective(N, a, b).congruence == "+"
            assert plain == (oracle_degree(N, a, b) < half), (N, a, b)


def test_fixing_units_parity_odd_n():
    for N in range(3, 31, 2):
        for a, b in coprime_pairs(N):
            if DiagonalRatio(N, a, b).trivial:
                continue
            ks = fixing_units(N, a, b)
            assert len(ks) == 2 and all(k % 2 for k in ks)
            assert count_fixing_automorphisms(N, a, b) == 2


def test_fixing_count_even_n():
    for N in range(4, 31, 2):
        for a, b in coprime_pairs(N):
            if not DiagonalRatio(N, a, b).trivial:
                assert count_fixing_automorphisms(N, a, b) <= 5


def test_fixing_count_golden():
    assert fixing_units(5, 2, 1) == [9, 11]
    assert count_fixing_automorphisms(5, 2, 1) == 2


# ------------------------------------------------------------ degrees

def test_ratio_degree_examples():
    assert ratio_degree(5, 2, 1) == (2, "formula_odd")
    assert ratio_degree(7, 2, 1) == (3, "formula_odd")
    assert ratio_degree(3, 1, 1) == (1, "oracle")
    assert ratio_degree(10, 1, 3)[1] == "oracle"


def test_oracle_matches_minimal_polynomial():
    for N, a, b in [(5, 2, 1), (7, 2, 1), (7, 3, 1), (8, 3, 1), (9, 4, 1), (10, 1, 3), (12, 5, 1)]:
        assert oracle_degree(N, a, b) == ratio_minpoly(N, a, b).degree("t")


def test_odd_degree_formula_nontrivial_pairs():
    for N in range(3, 26, 2):
        q = totient(4 * N) // 4
        for a, b in coprime_pairs(N):
            if not DiagonalRatio(N, a, b).trivial:
                assert oracle_degree(N, a, b) == q, (N, a, b)


def test_even_degree_bound_nontrivial_pairs():
    for N in range(4, 25, 2):
        for a, b in coprime_pairs(N):
            if not DiagonalRatio(N, a, b).trivial:
                assert 10 * oracle_degree(N, a, b) >= totient(4 * N), (N, a, b)


def test_field_degree_of_single_diagonal_pairs():
    # Q(d1, d2) sits inside the real subfield of Q(zeta_4N)
    for N in (5, 8, 12, 15):
        half = totient(4 * N) // 2
        for a, b in coprime_pairs(N):
            assert half % field_degree(N, a, b) == 0


# ------------------------------------------------------------ scans

def test_scan_small():
    assert theorem11_scan(4) == {M(0), M(F(1, 2), 1), M(F(1, 2), -1)}
    found = theorem11_scan(12)
    for a in (1, 4, F(9, 4), 2, 5, 12, F(1, 6), F(4, 3), F(1, 12)):
        assert M(a, 1) in found and M(a, -1) in found


def test_scan_parallel_matches_serial():
    assert theorem11_scan(40, jobs=2) == theorem11_scan(40)


def test_totient_bound():
    assert totient(210) == 48 and totient_bound_check(210)
    assert totient(1144) == 480 and totient_bound_check(1144)
    assert all(totient_bound_check(n) for n in range(1, 10001))
    with pytest.raises(ValueError):
        totient_bound_check(0)


def test_even_bound_tenth_fails_at_30_and_42():
    # |1 - zeta_30^3| / |1 - zeta_30^5| = 2 sin(pi/10) = 1/golden ratio
    assert ratio_minpoly(30, 3, 5).pretty() == "t^2 + t - 1"
    assert ratio_degree(30, 3, 5) == (2, "oracle")
    assert 10 * 2 < totient(120) <= 16 * 2
    assert oracle_degree(42, 3, 7) == 3 and 10 * 3 < totient(168) <= 16 * 3


def test_even_sixteenth_bound_up_to_30():
    for N in range(26, 31, 2):
        for a, b in coprime_pairs(N):
            if not DiagonalRatio(N, a, b).trivial:
                assert 16 * oracle_degree(N, a, b) >= totient(4 * N), (N, a, b)
