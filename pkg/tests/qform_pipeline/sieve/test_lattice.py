import unittest
from math import isqrt

from hypothesis import given
from hypothesis import strategies as st

from qform_pipeline.errors import ValidationError
from qform_pipeline.forms import Form
from qform_pipeline.sieve import ell_bound, ell_stripes, lattice_iterate, lattice_points

FORMS = [Form(1, 0, 1), Form(1, 1, 6), Form(2, 1, 1), Form(3, -1, 2), Form(5, 4, 5)]


def brute_force_points(form, X):
    delta = -form.discriminant
    ell_box = isqrt(4 * form.c * X // delta) + 1
    m_box = isqrt(4 * form.a * X // delta) + 1

    return {
        (ell, m)
        for ell in range(-ell_box, ell_box + 1)
        for m in range(-m_box, m_box + 1)
        if 1 <= form.evaluate(ell, m) <= X
    }


class TestLatticeIterate(unittest.TestCase):
    def test_lattice_iterate_gaussian_form(self):
        points = [(ell, m) for ell, m, _ in lattice_points(Form(1, 0, 1), 2)]
        self.assertEqual(8, len(points))
        self.assertNotIn((0, 0), points)

    def test_lattice_iterate_include_origin(self):
        visited = []

        def visit(ell, m_values, n_values):
            visited.extend((ell, int(m), int(n)) for m, n in zip(m_values, n_values))

        lattice_iterate(Form(1, 0, 1), 2, visit, include_origin=True)

        self.assertEqual(9, len(visited))
        self.assertIn((0, 0, 0), visited)

    def test_lattice_iterate_discriminant_minus_23(self):
        points = {(ell, m) for ell, m, _ in lattice_points(Form(1, 1, 6), 6)}

        self.assertEqual(8, len(points))
        self.assertTrue({(0, 1), (0, -1), (1, 0), (-1, 0), (2, 0), (-2, 0)} <= points)

    def test_lattice_iterate_empty_below_smallest_value(self):
        self.assertEqual([], list(lattice_points(Form(2, 1, 3), 1)))
        self.assertEqual([], list(lattice_points(Form(1, 0, 1), 0)))

    @given(st.sampled_from(FORMS), st.integers(0, 300))
    def test_lattice_iterate_matches_brute_force(self, form, X):
        triples = list(lattice_points(form, X))
        points = [(ell, m) for ell, m, _ in triples]

        self.assertEqual(len(points), len(set(points)))
        self.assertEqual(brute_force_points(form, X), set(points))
        self.assertTrue(all(form.evaluate(ell, m) == n for ell, m, n in triples))
        self.assertEqual(sorted(points), points)

    def test_lattice_iterate_indefinite_form_raises(self):
        with self.assertRaises(ValidationError):
            lattice_iterate(Form(1, 0, -1), 10, lambda ell, m_values, n_values: None)


class TestEllStripes(unittest.TestCase):
    def test_ell_stripes_cover_positive_range(self):
        for form, X, partitions in [(Form(1, 0, 1), 10**4, 4), (Form(1, 1, 6), 5000, 7)]:
            with self.subTest(form=form, X=X, partitions=partitions):
                stripes = ell_stripes(form, X, partitions)
                covered = [ell for low, high in stripes for ell in range(low, high + 1)]

                self.assertEqual(partitions, len(stripes))
                self.assertEqual(list(range(1, ell_bound(form, X) + 1)), covered)

    def test_ell_stripes_more_partitions_than_rows(self):
        stripes = ell_stripes(Form(1, 0, 1), 4, 10)
        self.assertEqual([(1, 1), (2, 2)], stripes)

    def test_ell_stripes_invalid_partitions_raise(self):
        with self.assertRaises(ValidationError):
            ell_stripes(Form(1, 0, 1), 100, 0)


if __name__ == "__main__":
    unittest.main()
