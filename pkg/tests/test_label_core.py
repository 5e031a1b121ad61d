"""Tests for the quiver, label grammar and projective/injective dictionaries."""

import pytest

from dinfty_cluster.exceptions import InvalidLabelError, LabelParseError
from dinfty_cluster.label_core import (
    Component,
    DerivedObject,
    DimVector,
    Family,
    a,
    a0,
    a1,
    b,
    classify_component,
    dim_vector,
    injective_label,
    injective_vertex,
    is_sink,
    labels_up_to,
    parse_derived,
    parse_label,
    parse_object,
    path_endpoints,
    projective_label,
    projective_vertex,
    quiver_arrows,
    require_valid,
    validate,
)


class TestQuiver:
    """Test the zigzag orientation of Q."""

    def test_arrows_of_small_truncation(self):
        """Test the arrows of the truncation to vertices 0..5."""
        assert quiver_arrows(5) == [(2, 0), (2, 1), (2, 3), (4, 3), (4, 5)]

    def test_truncation_must_contain_branch_point(self):
        """Test that a truncation without vertex 2 is rejected."""
        with pytest.raises(ValueError):
            quiver_arrows(1)

    def test_sinks_and_sources(self):
        """Test that 0 and the odd vertices are sinks and even vertices from 2 on are sources."""
        assert [v for v in range(8) if is_sink(v)] == [0, 1, 3, 5, 7]
        for x, y in quiver_arrows(12):
            assert not is_sink(x)
            assert is_sink(y)

    def test_path_endpoints(self):
        """Test the vertices reachable from a vertex."""
        assert path_endpoints(2) == {0, 1, 2, 3}
        assert path_endpoints(6) == {5, 6, 7}
        assert path_endpoints(7) == {7}


class TestValidate:
    """Test parameter constraints of the label families."""

    def test_valid_and_invalid_labels(self):
        """Test the examples of each constraint."""
        assert validate(a(3, 5))
        assert not validate(a(1, 4))
        assert not validate(b(2, 2))
        assert validate(b(1, 2))
        assert validate(a0(1))

    def test_require_valid_raises(self):
        """Test that require_valid names the offending family."""
        with pytest.raises(InvalidLabelError, match="A family"):
            require_valid(a(1, 4))


class TestClassify:
    """Test component membership by parity of the parameters."""

    def test_examples(self):
        """Test one label of each component."""
        assert classify_component(a(3, 5)) is Component.P
        assert classify_component(a0(4)) is Component.I
        assert classify_component(b(2, 9)) is Component.R

    def test_partition_is_total(self):
        """Test that every label up to 20 lies in exactly one component."""
        counts = {component: 0 for component in Component}
        for label in labels_up_to(20):
            counts[classify_component(label)] += 1
        assert sum(counts.values()) == len(labels_up_to(20))
        assert all(counts.values())


class TestDimVector:
    """Test dimension vectors of the four families."""

    def test_interval_family(self):
        """Test that A(3,5) is one-dimensional at 3, 4 and 5."""
        assert dim_vector(a(3, 5)).entries == (0, 0, 0, 1, 1, 1)

    def test_boundary_families(self):
        """Test A1(1), A0(3) and A1(3)."""
        assert dim_vector(a1(1)).entries == (1,)
        assert dim_vector(a0(3)).entries == (0, 1, 1, 1)
        assert dim_vector(a1(3)).entries == (1, 0, 1, 1)

    def test_b_family(self):
        """Test the two-dimensional range of B(n,m)."""
        assert dim_vector(b(1, 3)).entries == (1, 1, 1, 1)
        assert dim_vector(b(3, 6)).entries == (1, 1, 2, 2, 1, 1, 1)

    def test_entries_and_support(self):
        """Test that entries stay in {0,1,2} and the support lies in 0..m."""
        for label in labels_up_to(12):
            dims = dim_vector(label)
            assert set(dims.entries) <= {0, 1, 2}
            assert dims.top <= label.m
            if 2 in dims.entries:
                assert label.family is Family.B

    def test_trailing_zeros_are_dropped(self):
        """Test DimVector normalisation and addition."""
        assert DimVector((1, 0, 0)).entries == (1,)
        assert (DimVector((1,)) + DimVector((0, 2))).entries == (1, 2)
        assert DimVector((0, 1)).padded(4) == (0, 1, 0, 0)


class TestDictionaries:
    """Test the projective and injective labels."""

    def test_projectives(self):
        """Test the documented projective labels."""
        assert projective_label(0) == a1(1)
        assert projective_label(1) == a0(1)
        assert projective_label(2) == b(1, 3)
        assert projective_label(4) == a(3, 5)
        assert projective_label(5) == a(5, 5)

    def test_injectives(self):
        """Test the documented injective labels."""
        assert injective_label(0) == a1(2)
        assert injective_label(1) == a0(2)
        assert injective_label(2) == a(2, 2)
        assert injective_label(3) == a(2, 4)
        assert injective_label(4) == a(4, 4)

    def test_vertex_lookups_invert_dictionaries(self):
        """Test that projective_vertex and injective_vertex invert the dictionaries."""
        for t in range(20):
            assert projective_vertex(projective_label(t)) == t
            assert injective_vertex(injective_label(t)) == t
        assert projective_vertex(b(1, 2)) is None
        assert injective_vertex(a(3, 5)) is None

    def test_projective_support_is_path_closure(self):
        """Test that P_t is one-dimensional at t and supported on the endpoints of paths from t."""
        for t in range(15):
            dims = dim_vector(projective_label(t))
            assert dims[t] == 1
            assert dims.support == path_endpoints(t)

    def test_negative_vertex(self):
        """Test that negative vertices are rejected."""
        with pytest.raises(ValueError):
            projective_label(-1)


class TestParsing:
    """Test the ASCII label grammar."""

    def test_parse_labels(self):
        """Test each family."""
        assert parse_label("A(3,5)") == a(3, 5)
        assert parse_label("A0(4)") == a0(4)
        assert parse_label("A1(12)") == a1(12)
        assert parse_label("B(2,9)") == b(2, 9)

    def test_str_round_trip(self):
        """Test that printing and parsing agree on every label up to 8."""
        for label in labels_up_to(8):
            assert parse_label(str(label)) == label

    def test_parse_shifted_object(self):
        """Test an object with a shift suffix."""
        obj = parse_object("A0(4)[-1]")
        assert obj == DerivedObject(a0(4), -1)
        assert str(obj) == "A0(4)[-1]"
        assert parse_object("B(1,2)") == DerivedObject(b(1, 2))

    @pytest.mark.parametrize(
        "text, position",
        [
            ("A(3,5", 5),
            ("C(1,2)", 0),
            ("A(03,5)", 2),
            ("A0(4) ", 5),
            ("A(3;5)", 3),
            ("A0(4)[x]", 6),
        ],
    )
    def test_parse_errors_name_position(self, text, position):
        """Test that grammar violations report the offending character position."""
        with pytest.raises(LabelParseError) as excinfo:
            parse_object(text)
        assert excinfo.value.position == position
        assert f"position {position}" in str(excinfo.value)

    @pytest.mark.parametrize(
        "text, position",
        [("A(3,5)[0]", 7), ("A(3,5)[7]", 7), ("A(3,5)[-2]", 8), ("A(3,5)[-10]", 9)],
    )
    def test_objects_only_take_the_minus_one_shift(self, text, position):
        """Test that fundamental-domain objects accept no shift other than [-1]."""
        with pytest.raises(LabelParseError) as excinfo:
            parse_object(text)
        assert excinfo.value.position == position

    @pytest.mark.parametrize(
        "text, expected",
        [
            ("B(1,2)[1]", DerivedObject(b(1, 2), 1)),
            ("A(3,5)[-2]", DerivedObject(a(3, 5), -2)),
            ("A0(4)", DerivedObject(a0(4))),
        ],
    )
    def test_derived_objects_take_any_shift(self, text, expected):
        """Test the derived-category parser."""
        assert parse_derived(text) == expected

    def test_constraint_violation_is_not_a_parse_error(self):
        """Test that well-formed text with bad parameters raises InvalidLabelError."""
        with pytest.raises(InvalidLabelError):
            parse_label("A(1,4)")
        with pytest.raises(InvalidLabelError):
            parse_label("B(2,2)")


class TestOrdering:
    """Test grammar order of labels and objects."""

    def test_labels_up_to_three(self):
        """Test the complete list of labels supported in 0..3."""
        assert [str(label) for label in labels_up_to(3)] == [
            "A0(1)",
            "A0(2)",
            "A0(3)",
            "A1(1)",
            "A1(2)",
            "A1(3)",
            "A(2,2)",
            "A(2,3)",
            "A(3,3)",
            "B(1,2)",
            "B(1,3)",
            "B(2,3)",
        ]

    def test_sorted_matches_grammar_order(self):
        """Test that sorting labels reproduces labels_up_to."""
        labels = labels_up_to(7)
        assert sorted(reversed(labels)) == labels

    def test_objects_order_by_label_then_shift(self):
        """Test DerivedObject ordering."""
        assert DerivedObject(a0(2), -1) < DerivedObject(a0(2)) < DerivedObject(a1(1), -1)
