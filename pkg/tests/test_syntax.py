import pytest

from src.concepts.syntax import (
    BOT, TOP, ConceptKind, Dialect, DialectError, Signature, SignatureError, UndeclaredNameError,
    check_dialect, check_signature, conj, depth, dialect_of, disj, exists, exists_chain, forall,
    name, neg, nnf, normalize, signature_of, subconcepts,
)

A, B, C = name("A"), name("B"), name("C")


class TestSignature:

    def test_names_are_sorted(self):
        sig = Signature.of(["B", "A"], ["s", "r"])
        assert sig.concept_names == ("A", "B")
        assert sig.role_names == ("r", "s")
        assert str(sig) == "({A, B}, {r, s})"

    def test_empty_signature_prints(self):
        assert str(Signature.of()) == "({}, {})"

    @pytest.mark.parametrize("concepts, roles", [
        (["A", "A"], []),
        (["and"], []),
        (["1A"], []),
        (["A"], ["A"]),
        ([], ["exists"]),
    ])
    def test_invalid_signatures(self, concepts, roles):
        with pytest.raises(SignatureError):
            Signature.of(concepts, roles)

    def test_union_and_subset(self):
        left = Signature.of(["A"], ["r"])
        right = Signature.of(["B"], ["r", "s"])
        both = left.union(right)
        assert both == Signature.of(["A", "B"], ["r", "s"])
        assert left.issubset(both)
        assert not both.issubset(left)


class TestConstructors:

    def test_units_vanish(self):
        assert conj(A, TOP) == A
        assert disj(A, BOT) == A
        assert conj() == TOP
        assert disj() == BOT

    def test_absorbing_elements_are_not_simplified(self):
        assert conj(A, BOT).text == "(A and bot)"
        assert disj(A, TOP).text == "(A or top)"

    def test_flatten_sort_dedupe(self):
        assert conj(C, conj(B, A), A).text == "(A and B and C)"
        assert disj(B, disj(A, B)) == disj(A, B)
        assert conj(B, A) == conj(A, B)

    def test_duplicates_kept_on_request(self):
        twice = exists("r", A)
        assert conj(twice, twice, dedupe=False).text == "((exists r.A) and (exists r.A))"
        assert conj(twice, twice) == twice

    def test_quantifiers(self):
        assert exists("r").text == "(exists r.top)"
        assert forall("r", BOT).text == "(forall r.bot)"
        assert neg(A).text == "(not A)"
        assert exists_chain(3, "r").text == "(exists r.(exists r.(exists r.top)))"
        assert exists_chain(0, "r", A) == A

    def test_equality_and_hash_follow_text(self):
        assert conj(A, B) == conj(B, A)
        assert len({conj(A, B), conj(B, A), A}) == 2
        assert exists("r", A).child == A
        assert exists("r", A).kind is ConceptKind.EXISTS

    def test_normalize_is_identity_on_smart_output(self):
        c = conj(exists("r", disj(A, B)), neg(C))
        assert normalize(c) == c


class TestMeasures:

    def test_depth(self):
        assert depth(TOP) == 0
        assert depth(conj(A, exists("r", exists("s", B)))) == 2
        assert depth(neg(forall("r", A))) == 1

    def test_signature_of(self):
        c = conj(A, exists("r", forall("s", neg(B))))
        assert signature_of(c) == Signature.of(["A", "B"], ["r", "s"])

    def test_check_signature(self):
        check_signature(exists("r", A), Signature.of(["A"], ["r"]))
        with pytest.raises(UndeclaredNameError):
            check_signature(exists("s", A), Signature.of(["A"], ["r"]))

    def test_subconcepts(self):
        c = conj(A, exists("r", A))
        assert subconcepts(c) == frozenset({c, A, exists("r", A)})


class TestDialects:

    @pytest.mark.parametrize("concept, dialect", [
        (conj(A, exists("r", B)), Dialect.EL),
        (conj(A, exists("r", BOT)), Dialect.EL_BOT),
        (neg(A), Dialect.ALC),
        (disj(A, B), Dialect.ALC),
        (forall("r", A), Dialect.ALC),
    ])
    def test_dialect_of(self, concept, dialect):
        assert dialect_of(concept) is dialect

    def test_admits(self):
        assert Dialect.ALC.admits(Dialect.EL)
        assert Dialect.EL_BOT.admits(Dialect.EL)
        assert not Dialect.EL.admits(Dialect.EL_BOT)

    def test_check_dialect(self):
        check_dialect(BOT, Dialect.EL_BOT)
        with pytest.raises(DialectError):
            check_dialect(neg(A), Dialect.EL_BOT)


class TestNegationNormalForm:

    def test_pushes_negation_inwards(self):
        c = neg(conj(A, exists("r", B)))
        assert nnf(c) == disj(neg(A), forall("r", neg(B)))

    def test_double_negation(self):
        assert nnf(neg(neg(A))) == A

    def test_constants(self):
        assert nnf(neg(TOP)) == BOT
        assert nnf(neg(forall("r", BOT))) == exists("r", TOP)
