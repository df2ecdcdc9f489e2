import unittest
from math import gcd

from hypothesis import assume, given
from hypothesis import strategies as st

from qform_pipeline.errors import ValidationError
from qform_pipeline.forms import (
    Form,
    UnimodularMap,
    complete_to_unimodular,
    format_form,
    parse_form,
    validate_form,
)


class TestBinaryForm(unittest.TestCase):
    def test_discriminant_examples(self):
        parameters = [(Form(1, 0, 1), -4), (Form(1, 1, 6), -23), (Form(2, 1, 1), -7)]

        for form, expected in parameters:
            with self.subTest(form=form):
                self.assertEqual(expected, form.discriminant)

    def test_parse_form_accepted_inputs(self):
        parameters = ["4,5,3", "(4,5,3)", " (4, 5, 3) ", [4, 5, 3], (4, 5, 3), Form(4, 5, 3)]

        for value in parameters:
            with self.subTest(value=value):
                self.assertEqual(Form(4, 5, 3), parse_form(value))

    def test_parse_form_negative_coefficients(self):
        self.assertEqual(Form(2, -1, 3), parse_form("2,-1,3"))
        self.assertEqual("(2,-1,3)", format_form(Form(2, -1, 3)))

    def test_parse_form_invalid_inputs_raise(self):
        for value in ["4,5", "a,b,c", [1, 2], "1,2,3,4"]:
            with self.subTest(value=value):
                with self.assertRaises(ValidationError):
                    parse_form(value)

    def test_validate_form_rejects_indefinite_and_imprimitive(self):
        for form in [Form(1, 0, -1), Form(2, 0, 2), Form(0, 1, 1)]:
            with self.subTest(form=form):
                with self.assertRaises(ValidationError):
                    validate_form(form)


class TestUnimodularMap(unittest.TestCase):
    def test_unimodular_map_wrong_determinant_raises(self):
        with self.assertRaises(ValidationError):
            UnimodularMap(2, 0, 0, 1)

    def test_complete_to_unimodular_examples(self):
        parameters = [
            ((2, 3), UnimodularMap(2, 1, 3, 2)),
            ((1, 0), UnimodularMap(1, 0, 0, 1)),
            ((0, 1), UnimodularMap(0, -1, 1, 0)),
        ]

        for (p, r), expected in parameters:
            with self.subTest(p=p, r=r):
                self.assertEqual(expected, complete_to_unimodular(p, r))

    @given(st.integers(-50, 50), st.integers(-50, 50))
    def test_complete_to_unimodular_keeps_first_column(self, p, r):
        assume(gcd(p, r) == 1)

        transformation = complete_to_unimodular(p, r)

        self.assertEqual((p, r), (transformation.p, transformation.r))
        self.assertEqual((p, r), transformation.apply(1, 0))

    def test_complete_to_unimodular_imprimitive_column_raises(self):
        with self.assertRaises(ValidationError):
            complete_to_unimodular(2, 4)


if __name__ == "__main__":
    unittest.main()
