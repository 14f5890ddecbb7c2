from fractions import Fraction

import pytest

import msub


def unit(n, i, j):
    return [[1 if (r, c) == (i - 1, j - 1) else 0 for c in range(n)] for r in range(n)]


def add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def running_example(field):
    return msub.Space(field, 3, [add(unit(3, 1, 2), unit(3, 2, 2)), add(unit(3, 2, 2), unit(3, 2, 3))])


def test_space_basics():
    h = msub.Space.trace_zero(5, 2)
    assert h.dim == 3 and h.codim == 1 and h.field == "F5"
    assert h.constraints() == msub.Space.scalars(5, 2)
    assert h.contains([[1, 2], [3, 4]])
    assert not h.contains_identity()


def test_rational_entries_round_trip():
    s = msub.Space("Q", 2, [[[Fraction(1, 2), 0], [0, "-3/4"]]])
    assert s.basis == [[[1, 0], [0, Fraction(-3, 2)]]]
    assert msub.read_space(msub.write_space(s)) == s


def test_space_file_round_trip_and_override():
    text = msub.write_space(running_example(3), "example")
    assert "name = example" in text
    assert msub.read_space(text) == running_example(3)
    generators = "field = 3\nn = 3\n[matrix]\n0 1 0\n0 1 0\n0 0 0\n[matrix]\n0 0 0\n0 1 1\n0 0 0\n"
    assert msub.read_space(generators, field=2) == running_example(2)
    with pytest.raises(msub.SpaceFileError):
        msub.read_space("field = 4\nn = 2\n")


def test_profile_and_normalize():
    c = running_example(3)
    with_scalars = msub.Space(3, 3, c.basis + msub.Space.scalars(3, 3).basis)
    assert msub.profile(with_scalars)["d"] == [0, 0, 1, 3]
    res = msub.normalize(with_scalars)
    assert res["final"] == with_scalars.conjugate(res["t"])
    assert res["profile"]["b"][1:] == res["profile"]["col_dims"][1:]
    with pytest.raises(msub.FieldTooSmall):
        msub.normalize(msub.Space(2, 3, with_scalars.basis))


def test_generic_rank():
    assert msub.generic_rank(msub.Space.scalars("Q", 3)) == 1
    assert msub.generic_rank(msub.Space.full("Q", 3)) == 3
    assert msub.generic_rank(msub.Space.zero(7, 2)) == 0


def test_main2_and_idempotents():
    m = running_example(3).constraints()
    t, r = msub.main2(m)
    assert r == 2
    fam = msub.idempotent_family(m.conjugate(t), r)
    assert fam["rank"] == 2
    for e in fam["members"]:
        assert m.conjugate(t).contains(e)


def test_mathieu_boundary():
    assert msub.verify(msub.Space.trace_zero(3, 2), "two")["holds"]
    v = msub.verify(msub.Space.trace_zero(2, 2), "left")
    assert not v["holds"] and v["witness"]["replays"]
    with pytest.raises(msub.PreconditionViolated):
        msub.verify(msub.Space.trace_zero("Q", 2))


def test_proposition_family_has_only_zero_idempotent():
    m = msub.proposition_family(5, 2)
    assert msub.verify(m, "two")["holds"]
    assert msub.idempotents(m) == [[[0, 0], [0, 0]]]


def test_left_ideal_equivalences():
    rep = msub.rad_equivalences(msub.Space.trace_zero(2, 2))
    assert rep["equivalent"]
    assert msub.max_left_ideal(msub.Space.full(3, 2)) == msub.Space.full(3, 2)
