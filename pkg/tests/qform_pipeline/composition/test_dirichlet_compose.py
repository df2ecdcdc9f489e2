import unittest
from itertools import product

from hypothesis import given
from hypothesis import strategies as st

from qform_pipeline.composition import (
    dirichlet_compose,
    reconstruct_representation,
    wz_substitution,
)
from qform_pipeline.errors import ValidationError
from qform_pipeline.forms import Form, reduce_form

COORDINATES = st.integers(-40, 40)

COMPOSABLE = [
    (Form(2, 1, 3), Form(2, 1, 3), 5),
    (Form(1, 1, 6), Form(2, 1, 3), 1),
    (Form(3, -1, 2), Form(1, 1, 6), 95),
    (Form(1, 0, 1), Form(1, 0, 1), 0),
    (Form(1, 1, 1), Form(1, 1, 1), 1),
    (Form(7, 5, 1), Form(1, 1, 1), 5),
    (Form(1, 1, 2), Form(2, 1, 1), 1),
    (Form(11, 9, 2), Form(2, 1, 1), 9),
    (Form(1, 0, 5), Form(2, 2, 3), 2),
    (Form(3, 2, 2), Form(2, 2, 3), 2),
    (Form(5, 0, 2), Form(2, 0, 5), 0),
    (Form(7, 4, 2), Form(2, 0, 5), 4),
]


class TestDirichletCompose(unittest.TestCase):
    def test_dirichlet_compose_examples(self):
        parameters = [
            (Form(1, 1, 6), Form(2, 1, 3), 1, Form(2, 1, 3)),
            (Form(2, 1, 3), Form(2, 1, 3), 5, Form(4, 5, 3)),
            (Form(1, 0, 1), Form(1, 0, 1), 0, Form(1, 0, 1)),
        ]

        for form, target, middle, expected in parameters:
            with self.subTest(form=form, target=target):
                self.assertEqual(expected, dirichlet_compose(form, target, middle))

    def test_dirichlet_compose_square_of_class_of_order_three(self):
        composite = dirichlet_compose(Form(2, 1, 3), Form(2, 1, 3), 5)
        self.assertEqual(Form(2, -1, 3), reduce_form(composite)[0])

    def test_dirichlet_compose_invalid_middle_raises(self):
        for middle in [3, 4, 1]:
            with self.subTest(middle=middle):
                with self.assertRaises(ValidationError):
                    dirichlet_compose(Form(2, 1, 3), Form(2, 1, 3), middle)

    def test_dirichlet_compose_different_discriminants_raise(self):
        with self.assertRaises(ValidationError):
            dirichlet_compose(Form(1, 0, 1), Form(1, 1, 6), 1)


class TestWzSubstitution(unittest.TestCase):
    def test_wz_substitution_gaussian_product(self):
        form = Form(1, 0, 1)

        for u, v, x, y in [(1, 2, 3, 4), (-2, 5, 7, -1), (0, 1, 1, 0)]:
            with self.subTest(u=u, v=v, x=x, y=y):
                self.assertEqual(
                    (u * x - v * y, v * x + u * y), wz_substitution(form, form, 0, u, v, x, y)
                )

    def test_wz_substitution_principal_factor(self):
        w, z = wz_substitution(Form(1, 1, 6), Form(2, 1, 3), 1, 1, 0, 1, 0)
        self.assertEqual(2, Form(2, 1, 3).evaluate(w, z))

    def test_wz_substitution_zero_factor(self):
        composite = dirichlet_compose(Form(2, 1, 3), Form(2, 1, 3), 5)
        w, z = wz_substitution(Form(2, 1, 3), Form(2, 1, 3), 5, 0, 0, 3, 4)
        self.assertEqual(0, composite.evaluate(w, z))

    def test_wz_substitution_multiplies_values_for_each_discriminant(self):
        discriminants = {-form.discriminant for form, _, _ in COMPOSABLE}
        self.assertEqual({3, 4, 7, 20, 23, 40}, discriminants)

        for form, target, middle in COMPOSABLE:
            composite = dirichlet_compose(form, target, middle)

            with self.subTest(form=form, target=target, middle=middle):
                for u, v, x, y in product(range(-3, 4), repeat=4):
                    w, z = wz_substitution(form, target, middle, u, v, x, y)
                    self.assertEqual(
                        form.evaluate(u, v) * target.evaluate(x, y), composite.evaluate(w, z)
                    )

    @given(st.sampled_from(COMPOSABLE), COORDINATES, COORDINATES, COORDINATES, COORDINATES)
    def test_wz_substitution_multiplies_values(self, composable, u, v, x, y):
        form, target, middle = composable
        composite = dirichlet_compose(form, target, middle)
        w, z = wz_substitution(form, target, middle, u, v, x, y)

        self.assertEqual(form.evaluate(u, v) * target.evaluate(x, y), composite.evaluate(w, z))

    @given(st.sampled_from(COMPOSABLE), COORDINATES, COORDINATES, COORDINATES, COORDINATES)
    def test_reconstruct_representation_inverts_substitution(self, composable, u, v, x, y):
        form, target, middle = composable
        m = form.evaluate(u, v)
        w, z = wz_substitution(form, target, middle, u, v, x, y)

        self.assertEqual(
            (m * x, m * y), reconstruct_representation(form, target, middle, u, v, w, z)
        )


if __name__ == "__main__":
    unittest.main()
