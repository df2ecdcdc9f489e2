import unittest

from sympy import isprime

from qform_pipeline.composition import (
    build_context,
    build_SF,
    candidate_points,
    choose_B,
    context_from_json,
    context_to_dict,
    context_to_json,
    find_representatives,
    fstar,
    qf_bilinear,
)
from qform_pipeline.errors import SearchBudgetError, ValidationError
from qform_pipeline.forms import Form, reduce_form, transform

SF_23 = [Form(1, 1, 6), Form(3, -1, 2), Form(29, 37, 12)]


class TestBuildSF(unittest.TestCase):
    def test_candidate_points_start(self):
        points = candidate_points()
        first = [next(points) for _ in range(6)]
        self.assertEqual([(0, 1), (1, 0), (1, 1), (1, 2), (2, 1), (1, 3)], first)

    def test_build_SF_examples(self):
        parameters = [
            (Form(1, 0, 1), 1, [Form(1, 0, 1)]),
            (Form(1, 0, 1), 7, [Form(1, 0, 1)]),
            (Form(1, 1, 6), 1, SF_23),
            (Form(1, 1, 1), 1, [Form(1, 1, 1)]),
        ]

        for form, t, expected in parameters:
            with self.subTest(form=form, t=t):
                self.assertEqual(expected, build_SF(form, t))

    def test_find_representatives_derivations(self):
        for representative in find_representatives(-23, 1):
            with self.subTest(form=representative.form):
                form = representative.form
                self.assertEqual(
                    form, transform(representative.reduced, representative.transformation)
                )
                self.assertEqual(representative.reduced, reduce_form(form)[0])
                self.assertEqual(form.a, representative.reduced.evaluate(*representative.point))

    def test_find_representatives_avoids_excluded_primes(self):
        representatives = find_representatives(-23, 1, excluded=frozenset({3, 29}))
        coefficients = [representative.form.a for representative in representatives]

        self.assertEqual(1, coefficients[0])
        self.assertTrue(all(isprime(a) for a in coefficients[1:]))
        self.assertNotIn(3, coefficients)
        self.assertNotIn(29, coefficients)
        self.assertEqual(len(set(coefficients)), len(coefficients))

    def test_find_representatives_exhausted_budget_raises(self):
        with self.assertRaises(SearchBudgetError):
            find_representatives(-23, 1, budget=1)

    def test_find_representatives_invalid_t_raises(self):
        with self.assertRaises(ValidationError):
            find_representatives(-23, 0)


class TestChooseB(unittest.TestCase):
    def test_choose_B_examples(self):
        parameters = [
            ([Form(1, 0, 1)], Form(1, 0, 1), 0),
            (SF_23, Form(1, 1, 6), 95),
            ([Form(1, 1, 1)], Form(1, 1, 1), 1),
        ]

        for sf, form, expected in parameters:
            with self.subTest(form=form):
                self.assertEqual(expected, choose_B(sf, form))

    def test_choose_B_satisfies_quadratic_conditions(self):
        middle = choose_B(SF_23, Form(1, 1, 6))

        for form in SF_23:
            with self.subTest(form=form):
                self.assertEqual(0, (middle - form.b) % (2 * form.a))
                self.assertEqual(0, (middle * middle + 23) % (4 * form.a))


class TestBuildContext(unittest.TestCase):
    def test_build_context_gaussian_form(self):
        context = build_context(Form(1, 0, 1))

        self.assertEqual((Form(1, 0, 1),), context.SF)
        self.assertEqual(0, context.B)
        self.assertEqual(8, context.QF)
        self.assertEqual(2, context.CF)
        self.assertEqual(2, context.PF)

    def test_build_context_discriminant_minus_3(self):
        context = build_context(Form(1, 1, 1))

        self.assertEqual((Form(1, 1, 1),), context.SF)
        self.assertEqual(1, context.B)
        self.assertEqual(6, context.QF)
        self.assertEqual(3, context.CF)
        self.assertEqual(6, context.PF)

    def test_build_context_discriminant_minus_7(self):
        context = build_context(Form(2, 1, 1))

        self.assertEqual((Form(1, 1, 2),), context.SF)
        self.assertEqual(1, context.B)
        self.assertEqual(7, context.CF)
        self.assertEqual(210, context.PF)

    def test_build_context_discriminant_minus_23(self):
        context = build_context(Form(1, 1, 6), nested=False)

        self.assertEqual(tuple(SF_23), context.SF)
        self.assertEqual(95, context.B)
        self.assertEqual(24012, context.QF)
        self.assertEqual(29, context.CF)

        for prime in [2, 3, 23, 29]:
            with self.subTest(prime=prime):
                self.assertEqual(0, context.PF % prime)

    def test_build_context_nested_family_is_covered(self):
        context = build_context(Form(1, 1, 6))

        self.assertEqual(3, len(context.SFstar))

        for form in context.SF:
            for nested in context.SFstar:
                with self.subTest(form=form, nested=nested):
                    self.assertEqual(0, (context.B - nested.b) % (2 * nested.a))
                    self.assertEqual(0, (context.B**2 + 23) % (4 * form.a * nested.a))
                    self.assertLessEqual(nested.a, context.CF)

    def test_build_context_coprime_to_pf(self):
        context = build_context(Form(1, 0, 1))

        self.assertTrue(context.coprime_to_pf(65))
        self.assertTrue(context.coprime_to_pf(1))
        self.assertFalse(context.coprime_to_pf(10))
        self.assertFalse(context.coprime_to_pf(0))

    def test_context_json_round_trip(self):
        context = build_context(Form(1, 1, 6))
        self.assertEqual(context, context_from_json(context_to_json(context)))

    def test_context_to_dict_writes_small_pf(self):
        context = build_context(Form(1, 1, 6), nested=False)
        contents = context_to_dict(context)

        self.assertEqual(str(context.PF), contents["PF"])
        forms = [rep["form"] for rep in contents["SF"]]
        self.assertEqual([[1, 1, 6], [3, -1, 2], [29, 37, 12]], forms)
        self.assertEqual(context, context_from_json(context_to_json(context)))


class TestBilinearForms(unittest.TestCase):
    def test_fstar_examples(self):
        gaussian = build_context(Form(1, 0, 1))
        context = build_context(Form(1, 1, 6), nested=False)

        self.assertEqual(Form(1, 0, 1), fstar(Form(1, 0, 1), gaussian))
        self.assertEqual(Form(3, 95, 754), fstar(Form(3, -1, 2), context))
        self.assertEqual(Form(1, 95, 2262), fstar(Form(1, 1, 6), context))

    def test_qf_bilinear_examples(self):
        gaussian = build_context(Form(1, 0, 1))
        context = build_context(Form(1, 1, 6), nested=False)

        for u, v, w, z in [(1, 2, 3, 4), (-1, 0, 5, 2), (1, 0, 0, 1)]:
            with self.subTest(u=u, v=v, w=w, z=z):
                self.assertEqual(v * w + u * z, qf_bilinear(Form(1, 0, 1), gaussian, u, v, w, z))

        self.assertEqual(1, qf_bilinear(Form(3, -1, 2), context, 1, 0, 0, 1))
        self.assertEqual(-45, qf_bilinear(Form(1, 1, 6), context, 1, 1, 1, 1))


if __name__ == "__main__":
    unittest.main()
