"""
M1 Acceptance Test: Polynomial Ring
Tests parsing, canonical serialization, term orders and initial forms.
"""
import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

import unittest
from fractions import Fraction

from tools.errors import (
    DimensionMismatchError,
    PolynomialSyntaxError,
    RingMismatchError,
    UnknownVariableError,
    ZeroPolynomialError,
)
from tools.ring import (
    Ordering,
    compare_monomials,
    display_weight,
    grevlex_order,
    initial_form,
    lex_order,
    make_ring,
    monomials_of_degree,
    parse_nonzero,
    parse_polynomial,
    parse_weight,
    primitive_int,
    weight_refined_order,
)


class TestM1Ring(unittest.TestCase):
    """Test Suite for M1 - Polynomial Ring"""

    @classmethod
    def setUpClass(cls):
        cls.ring = make_ring("x,y,z")

    def test_01_parse_and_serialize(self):
        """Test 1: Parsing and canonical output"""
        print("\n" + "=" * 70)
        print("Test 1: Parse and Serialize")
        print("=" * 70)

        cases = [
            ("y*x^2 + x*y^2", "x^2*y + x*y^2"),
            ("-z^3 + 3/2*x*y*z", "3/2*x*y*z - z^3"),
            ("x*x*y", "x^2*y"),
            ("2*x - x - x + y", "y"),
            ("7", "7"),
        ]
        for text, expected in cases:
            f = parse_polynomial(text, self.ring)
            self.assertEqual(f.to_string(), expected)
            self.assertEqual(parse_polynomial(f.to_string(), self.ring), f)
            print(f"✓ {text!r} -> {f.to_string()!r}")

    def test_02_zero_polynomial(self):
        """Test 2: Zero is representable but rejected where nonzero is required"""
        print("\n" + "=" * 70)
        print("Test 2: Zero Polynomial")
        print("=" * 70)

        f = parse_polynomial("x - x", self.ring)
        self.assertTrue(f.is_zero())
        self.assertEqual(f.to_string(), "0")
        with self.assertRaises(ZeroPolynomialError):
            parse_nonzero("x*y - y*x", self.ring)
        with self.assertRaises(ZeroPolynomialError):
            f.degree()

        print("✓ Zero polynomial handled")

    def test_03_syntax_errors(self):
        """Test 3: Malformed input reports a column"""
        print("\n" + "=" * 70)
        print("Test 3: Syntax Errors")
        print("=" * 70)

        for text in ["x +", "x ^ ", "2/0*x", "", "x y", "x^-1"]:
            with self.assertRaises(PolynomialSyntaxError, msg=text):
                parse_polynomial(text, self.ring)
        with self.assertRaises(UnknownVariableError):
            parse_polynomial("x + q", self.ring)
        with self.assertRaises(PolynomialSyntaxError) as ctx:
            parse_polynomial("x + * y", self.ring)
        self.assertEqual(ctx.exception.column, 5)

        print("✓ Syntax errors raised with positions")

    def test_04_ring_validation(self):
        """Test 4: Variable lists"""
        print("\n" + "=" * 70)
        print("Test 4: Ring Validation")
        print("=" * 70)

        with self.assertRaises(DimensionMismatchError):
            make_ring("x,x")
        with self.assertRaises(DimensionMismatchError):
            make_ring("")
        with self.assertRaises(UnknownVariableError):
            make_ring("x,2y")

        other = make_ring("a,b,c")
        with self.assertRaises(RingMismatchError):
            self.ring.parse("x") + other.parse("a")

        print("✓ Bad rings rejected")

    def test_05_arithmetic(self):
        """Test 5: Exact arithmetic"""
        print("\n" + "=" * 70)
        print("Test 5: Arithmetic")
        print("=" * 70)

        x, y = self.ring.variable("x"), self.ring.variable("y")
        self.assertEqual(((x + y) ** 2).to_string(), "x^2 + 2*x*y + y^2")
        self.assertEqual(((x + y) * (x - y)).to_string(), "x^2 - y^2")
        half = self.ring.parse("1/2*x^2 + 1/3*y^2")
        self.assertEqual(half.normalized().to_string(), "x^2 + 2/3*y^2")
        self.assertEqual(half.clear_denominators().to_string(), "3*x^2 + 2*y^2")
        self.assertTrue(half.is_homogeneous())
        self.assertFalse(self.ring.parse("x^2 + y").is_homogeneous())

        print("✓ Arithmetic and normalization exact")

    def test_06_term_orders(self):
        """Test 6: lex, grevlex and weight-refined orders"""
        print("\n" + "=" * 70)
        print("Test 6: Term Orders")
        print("=" * 70)

        lex, grevlex = lex_order(3), grevlex_order(3)
        xz, y2 = (1, 0, 1), (0, 2, 0)
        self.assertEqual(compare_monomials(lex, xz, y2), Ordering.GREATER)
        self.assertEqual(compare_monomials(grevlex, xz, y2), Ordering.LESS)
        self.assertEqual(compare_monomials(grevlex, (2, 0, 0), (2, 0, 0)), Ordering.EQUAL)
        with self.assertRaises(DimensionMismatchError):
            compare_monomials(grevlex, (1, 0), (0, 1, 0))

        # y made the smallest variable
        revlex_y = grevlex_order(3, last=1)
        self.assertEqual(compare_monomials(revlex_y, (0, 1, 1), (0, 0, 2)), Ordering.LESS)

        f = self.ring.parse("x^2 + y^2 + z^2")
        refined = weight_refined_order((1, 0, 0), grevlex)
        self.assertEqual(f.leading_monomial(refined), (0, 2, 0))
        self.assertEqual(weight_refined_order((0, 0, 0), grevlex), grevlex)

        print("✓ Orders compare as expected")

    def test_07_initial_forms(self):
        """Test 7: Initial forms take the minimum weight"""
        print("\n" + "=" * 70)
        print("Test 7: Initial Forms")
        print("=" * 70)

        f = self.ring.parse("x^2*y + x*y^2 + z^3")
        self.assertEqual(initial_form((0, 0, 1), f).to_string(), "x^2*y + x*y^2")
        self.assertEqual(initial_form((1, 0, 0), f).to_string(), "z^3")
        self.assertEqual(initial_form((Fraction(1, 3), Fraction(1, 3), Fraction(1, 3)), f), f)
        self.assertEqual(initial_form((5, 5, 5), f), f)
        with self.assertRaises(DimensionMismatchError):
            initial_form((1, 0), f)
        with self.assertRaises(ZeroPolynomialError):
            initial_form((1, 0, 0), self.ring.zero())

        print("✓ Initial forms correct")

    def test_08_weights_and_monomials(self):
        """Test 8: Weight parsing and monomial enumeration"""
        print("\n" + "=" * 70)
        print("Test 8: Weights and Monomials")
        print("=" * 70)

        w = parse_weight("1, -1/2, 0", 3)
        self.assertEqual(w, (Fraction(1), Fraction(-1, 2), Fraction(0)))
        self.assertEqual(display_weight(w, "max"), ["-1", "1/2", "0"])
        self.assertEqual(primitive_int(w), (2, -1, 0))
        with self.assertRaises(DimensionMismatchError):
            parse_weight("1,2", 3)
        with self.assertRaises(DimensionMismatchError):
            parse_weight("1,a,2", 3)

        cubics = monomials_of_degree(3, 3)
        self.assertEqual(len(cubics), 10)
        self.assertEqual(cubics[0], (3, 0, 0))
        self.assertEqual(cubics[-1], (0, 0, 3))

        print("✓ Weights and monomials correct")


def run_tests():
    """Run all M1 acceptance tests"""
    print("\n" + "=" * 70)
    print("M1 ACCEPTANCE TESTS - POLYNOMIAL RING")
    print("=" * 70)

    suite = unittest.TestLoader().loadTestsFromTestCase(TestM1Ring)
    runner = unittest.TextTestRunner(verbosity=2)
    result = runner.run(suite)

    print("\n" + "=" * 70)
    print("TEST SUMMARY")
    print("=" * 70)
    print(f"Tests run: {result.testsRun}")
    print(f"Successes: {result.testsRun - len(result.failures) - len(result.errors)}")
    print(f"Failures: {len(result.failures)}")
    print(f"Errors: {len(result.errors)}")

    if result.wasSuccessful():
        print("\n✅ ALL M1 TESTS PASSED!")
    else:
        print("\n❌ SOME TESTS FAILED")

    return result.wasSuccessful()


if __name__ == "__main__":
    success = run_tests()
    sys.exit(0 if success else 1)
