import cmath
import unittest
from math import gcd

from hypothesis import given
from hypothesis import strategies as st

from qform_pipeline.arithmetic import characters_mod, euler_totient, unit_group
from qform_pipeline.errors import ValidationError

MODULI = [1, 2, 3, 4, 5, 7, 8, 9, 12, 15, 16, 24]


class TestDirichletCharacters(unittest.TestCase):
    def test_characters_mod_examples(self):
        trivial = characters_mod(1)
        self.assertEqual(1, len(trivial))
        self.assertEqual(1, trivial[0](17))

        quartic = characters_mod(4)
        self.assertEqual(2, len(quartic))
        self.assertTrue(cmath.isclose(-1, quartic[1](3)))
        self.assertEqual(0, quartic[1](2))

        quintic = characters_mod(5)
        self.assertEqual(4, len(quintic))
        self.assertTrue(cmath.isclose(1j, quintic[1](2)))

    def test_characters_mod_count_and_principal_first(self):
        for modulus in MODULI:
            with self.subTest(modulus=modulus):
                characters = characters_mod(modulus)
                self.assertEqual(euler_totient(modulus), len(characters))
                self.assertTrue(characters[0].is_principal)
                self.assertEqual(euler_totient(modulus), unit_group(modulus).size)

    def test_characters_mod_orthogonality(self):
        for modulus in MODULI:
            totient = euler_totient(modulus)

            for character in characters_mod(modulus):
                with self.subTest(modulus=modulus, indices=character.indices):
                    total = sum(character(n) for n in range(modulus))
                    expected = totient if character.is_principal else 0
                    self.assertTrue(cmath.isclose(expected, total, abs_tol=1e-9))

            for n in range(modulus):
                if gcd(n, modulus) != 1:
                    continue

                with self.subTest(modulus=modulus, n=n):
                    total = sum(character(n) for character in characters_mod(modulus))
                    expected = totient if n % modulus == 1 % modulus else 0
                    self.assertTrue(cmath.isclose(expected, total, abs_tol=1e-9))

    @given(st.sampled_from(MODULI), st.integers(0, 500), st.integers(0, 500))
    def test_characters_are_multiplicative(self, modulus, m, n):
        for character in characters_mod(modulus):
            self.assertTrue(
                cmath.isclose(character(m * n), character(m) * character(n), abs_tol=1e-9)
            )

    def test_conjugate_character_inverts_values(self):
        for character in characters_mod(15):
            conjugate = character.conjugate()

            for n in [1, 2, 4, 7, 8, 11, 13, 14]:
                with self.subTest(indices=character.indices, n=n):
                    self.assertTrue(cmath.isclose(1, character(n) * conjugate(n)))

    def test_exponent_is_none_off_units(self):
        character = characters_mod(12)[1]

        self.assertIsNone(character.exponent(6))
        self.assertIsNotNone(character.exponent(5))

    def test_unit_group_invalid_modulus_raises(self):
        with self.assertRaises(ValidationError):
            unit_group(0)


if __name__ == "__main__":
    unittest.main()
