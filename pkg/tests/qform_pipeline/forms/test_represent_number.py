import unittest

from hypothesis import given
from hypothesis import strategies as st

from qform_pipeline.forms import Form, automorph_count, represent_number


class TestRepresentNumber(unittest.TestCase):
    def test_represent_number_sum_of_two_squares(self):
        expected = [(-2, -1), (-2, 1), (-1, -2), (-1, 2), (1, -2), (1, 2), (2, -1), (2, 1)]
        self.assertEqual(expected, represent_number(Form(1, 0, 1), 5))

    def test_represent_number_primitive_filter(self):
        form = Form(1, 0, 1)

        self.assertEqual(8, len(represent_number(form, 25)))
        self.assertEqual(12, len(represent_number(form, 25, primitive=False)))
        self.assertIn((0, 5), represent_number(form, 25, primitive=False))

    def test_represent_number_discriminant_minus_23(self):
        expected = [(-7, 2), (-5, -2), (5, 2), (7, -2)]
        self.assertEqual(expected, represent_number(Form(1, 1, 6), 59))

    def test_represent_number_no_representations(self):
        parameters = [(Form(1, 0, 1), 3), (Form(1, 0, 1), 0), (Form(1, 0, 1), -5)]

        for form, n in parameters:
            with self.subTest(form=form, n=n):
                self.assertEqual([], represent_number(form, n))

    @given(st.integers(-30, 30), st.integers(-30, 30))
    def test_represent_number_contains_evaluated_points(self, x, y):
        form = Form(3, -1, 2)
        value = form.evaluate(x, y)

        self.assertIn((x, y), represent_number(form, value, primitive=False))

        for u, v in represent_number(form, value, primitive=False):
            self.assertEqual(value, form.evaluate(u, v))

    def test_automorph_count(self):
        parameters = [(-3, 6), (-4, 4), (-7, 2), (-23, 2)]

        for disc, expected in parameters:
            with self.subTest(disc=disc):
                self.assertEqual(expected, automorph_count(disc))


if __name__ == "__main__":
    unittest.main()
