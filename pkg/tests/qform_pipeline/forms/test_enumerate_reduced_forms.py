import unittest

from qform_pipeline.errors import ValidationError
from qform_pipeline.forms import Form, enumerate_reduced_forms, principal_form


class TestEnumerateReducedForms(unittest.TestCase):
    def test_enumerate_reduced_forms_examples(self):
        parameters = [
            (-23, [Form(1, 1, 6), Form(2, 1, 3), Form(2, -1, 3)]),
            (-4, [Form(1, 0, 1)]),
            (-3, [Form(1, 1, 1)]),
            (-7, [Form(1, 1, 2)]),
            (-20, [Form(1, 0, 5), Form(2, 2, 3)]),
            (-56, [Form(1, 0, 14), Form(2, 0, 7), Form(3, 2, 5), Form(3, -2, 5)]),
        ]

        for disc, expected in parameters:
            with self.subTest(disc=disc):
                self.assertEqual(expected, enumerate_reduced_forms(disc))

    def test_enumerate_reduced_forms_class_numbers(self):
        parameters = [(-47, 5), (-71, 7), (-84, 4), (-163, 1)]

        for disc, class_number in parameters:
            with self.subTest(disc=disc):
                self.assertEqual(class_number, len(enumerate_reduced_forms(disc)))

    def test_enumerate_reduced_forms_principal_form_first(self):
        for disc in [-3, -4, -7, -8, -15, -23, -24]:
            with self.subTest(disc=disc):
                self.assertEqual(principal_form(disc), enumerate_reduced_forms(disc)[0])

    def test_enumerate_reduced_forms_skips_imprimitive_forms(self):
        self.assertNotIn(Form(2, 2, 2), enumerate_reduced_forms(-12))

    def test_enumerate_reduced_forms_invalid_discriminant_raises(self):
        for disc in [-1, -2, 5, 0]:
            with self.subTest(disc=disc):
                with self.assertRaises(ValidationError):
                    enumerate_reduced_forms(disc)


if __name__ == "__main__":
    unittest.main()
