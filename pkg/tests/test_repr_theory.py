import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cptgroups.exact_arith import I_UNIT, CMatrix, Cyclotomic
from cptgroups.group_core import cyclic_group, direct_product
from cptgroups.repr_theory import (
    Character, CharacterTable, Representation, RepresentationError, are_equivalent, char_inner_product,
    character_of, character_table, complete_by_orthogonality, conjugated, decompose_character, direct_sum,
    homomorphism_violations, is_irreducible, one_dim_rep, regular_character, regular_representation,
    tables_match, tensor_product_rep, trivial_rep,
)
from oracles import (
    complex_value, intertwiner_dimension, linear_characters_brute, numeric_rep_ok, numeric_table_orthogonal,
    s4_characters,
)
from small_groups import SMALL, a4, d4, quaternion, s4


def numeric_rows(t):
    return [[complex_value(v) for v in r] for r in t.rows]


def quaternion_two_dim(q):
    """The defining 2-dim rep: iota -> diag(i, -i), gamma -> [[0, 1], [-1, 0]]."""
    i_img = CMatrix.from_rows([[I_UNIT, 0], [0, -I_UNIT]])
    j_img = CMatrix.from_rows([[0, 1], [-1, 0]])
    return Representation.from_generators(q, {q.index("ι"): i_img, q.index("γ"): j_img}, name="two")


def d4_two_dim(g):
    """Square symmetries acting on the plane: (1234) -> rotation, (13) -> reflection."""
    rot = CMatrix.from_rows([[0, -1], [1, 0]])
    ref = CMatrix.from_rows([[0, 1], [1, 0]])
    return Representation.from_generators(g, {g.index("(1234)"): rot, g.index("(13)"): ref}, name="square")


# --- Dixon tables -------------------------------------------------------------------

@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 8])
def test_cyclic_tables_are_roots_of_unity(n):
    g = cyclic_group(n)
    t = character_table(g)
    want = {tuple(cmath.exp(2j * math.pi * j * k / n) for k in range(n)) for j in range(n)}
    got = numeric_rows(t)
    assert len(got) == n
    for row in got:
        assert any(np.allclose(row, w) for w in want)
    assert t.problems() == []


def test_s4_table_matches_permutation_characters():
    g = s4()
    t = character_table(g)
    oracle_rows = set()
    for name in ("trivial", "sign", "standard", "standard_sign", "two"):
        oracle_rows.add(tuple(s4_characters(g.elements[c.representative].images)[name] for c in t.classes))
    assert {tuple(int(v.to_rational()) for v in r) for r in t.rows} == oracle_rows
    assert sorted(t.dims) == [1, 1, 2, 3, 3]


def test_a4_table_is_orthogonal_numerically():
    t = character_table(a4())
    assert sorted(t.dims) == [1, 1, 1, 3]
    assert numeric_table_orthogonal(numeric_rows(t), t.sizes, 12)
    # the three linear characters factor through C3, so their values are cube roots of unity
    for r, d in zip(numeric_rows(t), t.dims):
        if d == 1:
            assert all(abs(v ** 3 - 1) < 1e-9 for v in r)


@pytest.mark.parametrize("name", sorted(SMALL))
def test_dixon_tables_are_valid(name):
    g = SMALL[name]()
    t = character_table(g)
    assert t.is_square() and t.problems() == []
    assert sum(d * d for d in t.dims) == g.order
    assert numeric_table_orthogonal(numeric_rows(t), t.sizes, g.order)
    assert set(t.provenance) == {"dixon"}


def test_quaternion_and_dihedral_share_a_table():
    tq, td = character_table(quaternion()), character_table(d4())
    perms = tables_match(tq, td)
    assert perms is not None
    rows, cols = perms
    for i, r in enumerate(tq.rows):
        for j, v in enumerate(r):
            assert td.rows[rows[i]][cols[j]] == v
    assert tables_match(tq, character_table(SMALL["Z2^3"]())) is None


def test_linear_rows_agree_with_brute_force_homs():
    for name in ("D4", "Q", "Z2^3", "C4xC2"):
        g = SMALL[name]()
        t = character_table(g)
        brute = linear_characters_brute(g.cayley)
        real_linear = {tuple(int(chi.at(x).to_rational()) for x in range(g.order))
                       for chi, d in zip(t.characters(), t.dims)
                       if d == 1 and all(v.is_rational() for v in chi.values)}
        assert real_linear == brute


# --- completion by orthogonality ------------------------------------------------------------

@pytest.mark.parametrize("name, group", [("Q", quaternion), ("D4", d4),
                                         ("D4xC2", lambda: direct_product(d4(), cyclic_group(2)))])
def test_completion_recovers_dropped_linear_rows(name, group):
    g = group()
    full = character_table(g)
    keep = [i for i, d in enumerate(full.dims) if d > 1] + [i for i, d in enumerate(full.dims) if d == 1][:1]
    partial = full.with_rows([full.rows[i] for i in keep], [full.provenance[i] for i in keep])
    done = complete_by_orthogonality(partial)
    assert set(done.rows) == set(full.rows)
    assert done.problems() == []
    added = [r for r, p in zip(done.rows, done.provenance) if p == "orthogonality-completion"]
    assert len(added) == len(full.rows) - len(keep)
    brute = linear_characters_brute(g.cayley)
    idx = {c.representative: j for j, c in enumerate(done.classes)}
    for r in added:
        values = tuple(int(r[idx[c.representative]].to_rational()) for x in range(g.order)
                       for c in [g.classes[g.class_of[x]]])
        assert values in brute


def test_completion_rejects_inconsistent_partial_table():
    full = character_table(quaternion())
    bad_row = tuple(Cyclotomic.rational(1) for _ in full.classes)
    partial = full.with_rows([full.rows[0], bad_row], ["dixon", "dixon"])
    with pytest.raises(ValueError):
        complete_by_orthogonality(partial)


# --- equivalence, decomposition, tensor products ----------------------------------------------

def _gaussian():
    return st.builds(lambda a, b: Cyclotomic.rational(a) + I_UNIT * b, st.integers(-2, 2), st.integers(-2, 2))


invertible_gaussian_2x2 = st.tuples(_gaussian(), _gaussian(), _gaussian(), _gaussian()).filter(
    lambda e: e[0] * e[3] - e[1] * e[2] != 0).map(lambda e: CMatrix.from_rows([[e[0], e[1]], [e[2], e[3]]]))


@settings(max_examples=25, deadline=None)
@given(invertible_gaussian_2x2)
def test_conjugated_reps_are_equivalent(s):
    q = quaternion()
    rho = quaternion_two_dim(q)
    other = conjugated(rho, s)
    assert numeric_rep_ok(other)
    assert are_equivalent(rho, other)
    assert intertwiner_dimension(rho, other) == 1


def test_equivalence_agrees_with_intertwiners():
    g = d4()
    sq = d4_two_dim(g)
    linear = [one_dim_rep(chi) for chi, d in zip(character_table(g).characters(), character_table(g).dims) if d == 1]
    reps = [sq, *linear]
    for a in reps:
        for b in reps:
            assert are_equivalent(a, b) == (intertwiner_dimension(a, b) > 0)


def test_irreducibility():
    q = quaternion()
    rho = quaternion_two_dim(q)
    assert is_irreducible(rho) and numeric_rep_ok(rho)
    assert not is_irreducible(direct_sum(trivial_rep(q), trivial_rep(q)))
    assert is_irreducible(trivial_rep(q))


def test_regular_character_decomposes_by_degree():
    for name in ("Q", "A4", "S4"):
        g = SMALL[name]()
        t = character_table(g)
        assert decompose_character(regular_character(g), t) == t.dims
        assert character_of(regular_representation(g)) == regular_character(g)


def test_square_of_quaternion_two_dim_character():
    q = quaternion()
    t = character_table(q)
    chi = character_of(quaternion_two_dim(q))
    mult = decompose_character(chi * chi, t)
    # 2 x 2 = four linear characters, once each
    assert sorted(mult) == [0, 1, 1, 1, 1]
    assert all(m == 1 for m, d in zip(mult, t.dims) if d == 1)


def test_decompose_rejects_non_characters():
    t = character_table(cyclic_group(2))
    g = t.group
    half = Character(g, tuple(Cyclotomic.rational(1) for _ in g.classes)) + Character(
        g, (Cyclotomic.rational(1), Cyclotomic.rational(0)))
    with pytest.raises(ValueError):
        decompose_character(half, t)


def test_tensor_product_rep_multiplies_characters():
    q, c2 = quaternion(), cyclic_group(2)
    prod = direct_product(q, c2)
    sign = one_dim_rep(character_table(c2).characters()[1])
    rho = tensor_product_rep(quaternion_two_dim(q), sign, group=prod)
    assert rho.dim == 2 and is_irreducible(rho) and numeric_rep_ok(rho)
    info = prod.product_info
    for x in range(prod.order):
        a, b = info.decode(x)
        assert character_of(rho).at(x) == character_of(quaternion_two_dim(q)).at(a) * character_of(sign).at(b)
    with pytest.raises(RepresentationError):
        tensor_product_rep(quaternion_two_dim(q), sign, group=q)


def test_inner_product_of_distinct_irreducibles_is_zero():
    t = character_table(d4())
    chars = t.characters()
    for i, a in enumerate(chars):
        for j, b in enumerate(chars):
            assert char_inner_product(a, b) == (1 if i == j else 0)


# --- broken representations ----------------------------------------------------------------

def test_homomorphism_violations_are_reported():
    q = quaternion()
    rho = quaternion_two_dim(q)
    mats = list(rho.matrices)
    x = q.index("ι")
    mats[x] = -mats[x]
    broken = Representation(q, mats, verify=False)
    bad = homomorphism_violations(broken)
    assert bad
    # only products touching the altered matrix can fail
    assert all(x in (a, b, q.mul(a, b)) for a, b in bad)
    assert not numeric_rep_ok(broken)
    with pytest.raises(RepresentationError):
        Representation(q, mats, name="broken")


def test_representation_shape_checks():
    g = cyclic_group(2)
    with pytest.raises(RepresentationError):
        Representation(g, [CMatrix.identity(1)])
    with pytest.raises(RepresentationError):
        Representation(g, [CMatrix.identity(1), CMatrix.identity(2)])
    with pytest.raises(RepresentationError):
        Representation(g, [CMatrix.scalar(2), CMatrix.scalar(1)])


# --- table matching ------------------------------------------------------------------------

def _permuted(t, row_perm, col_perm):
    classes = [t.classes[j] for j in col_perm]
    rows = [[t.rows[i][j] for j in col_perm] for i in row_perm]
    return CharacterTable(t.group, classes, rows, [t.provenance[i] for i in row_perm])


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["D4", "Q", "S4", "A4", "C4xC2"]), st.randoms(use_true_random=False))
def test_tables_match_finds_hidden_permutations(name, rnd):
    t = character_table(SMALL[name]())
    rp, cp = list(range(len(t.rows))), list(range(len(t.classes)))
    rnd.shuffle(rp)
    rnd.shuffle(cp)
    u = _permuted(t, rp, cp)
    found = tables_match(t, u)
    assert found is not None
    rows, cols = found
    for i in range(len(t.rows)):
        for j in range(len(t.classes)):
            assert u.rows[rows[i]][cols[j]] == t.rows[i][j]
    assert sorted(rows) == list(range(len(t.rows))) and sorted(cols) == list(range(len(t.classes)))


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["D4", "Q", "S4", "A4"]), st.data())
def test_tables_match_rejects_altered_entries(name, data):
    t = character_table(SMALL[name]())
    i = data.draw(st.integers(0, len(t.rows) - 1))
    j = data.draw(st.integers(0, len(t.classes) - 1))
    rows = [list(r) for r in t.rows]
    rows[i][j] = rows[i][j] + 7
    u = CharacterTable(t.group, t.classes, rows, t.provenance)
    assert tables_match(t, u) is None


def test_tables_match_rejects_swapped_entries_within_a_row():
    # D4: swap the values of a sign character on two classes of equal size
    t = character_table(d4())
    row = next(i for i, r in enumerate(t.rows) if len(set(r)) > 1 and t.dims[i] == 1)
    r = list(t.rows[row])
    a = next(j for j in range(len(r)) if r[j] == 1 and t.sizes[j] == 2)
    b = next(j for j in range(len(r)) if r[j] == -1 and t.sizes[j] == 2)
    r[a], r[b] = r[b], r[a]
    rows = list(t.rows)
    rows[row] = tuple(r)
    u = CharacterTable(t.group, t.classes, rows, t.provenance)
    assert u.problems()
    assert tables_match(t, u) is None
