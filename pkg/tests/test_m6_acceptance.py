"""
M6 Acceptance Test: Tropical Geometry
Tests hypersurfaces, prevarieties, tropical varieties, tropical basis checks and witnesses.
"""
import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

import itertools
import random
import unittest

from tools.errors import (
    DimensionMismatchError,
    NoWitnessError,
    NotGeneratingError,
    NotInIdealError,
    ParameterError,
    ZeroPolynomialError,
)
from tools.gfan import groebner_fan
from tools.grassmannian import pluecker_ideal, pluecker_relations, pluecker_variable, three_term_relations
from tools.groebner import Ideal, ideal_member, krull_dimension, same_ideal, saturate_torus
from tools.ideal_io import load_ideal, load_polynomials
from tools.linalg import integer_det
from tools.ring import initial_form, make_ring, monomial_degree
from tools.tropical import (
    check_generates,
    classify_groebner_fan,
    complex_f_vector,
    find_witness,
    in_prevariety,
    is_tropical_basis,
    same_support,
    tropical_hypersurface,
    tropical_prevariety,
    tropical_variety,
    variety_fvector_check,
)


DATA_DIR = project_root / "data" / "ideals"


class TestM6Tropical(unittest.TestCase):
    """Test Suite for M6 - Tropical Geometry"""

    @classmethod
    def setUpClass(cls):
        cls.ring = make_ring("x,y,z")
        cls.delta24 = load_ideal(DATA_DIR / "delta24.ideal")
        cls.cubics = load_ideal(DATA_DIR / "cubics.ideal")
        cls.binary_forms = load_ideal(DATA_DIR / "binary_forms.ideal")
        cls.delta24_classified = classify_groebner_fan(cls.delta24)
        cls.binary_forms_classified = classify_groebner_fan(cls.binary_forms)
        cls.cubics_classified = classify_groebner_fan(cls.cubics, groebner_fan(cls.cubics))

    def test_01_hypersurface(self):
        """Test 1: Tropical hypersurface of a linear form"""
        print("\n" + "=" * 70)
        print("Test 1: Tropical Hypersurface")
        print("=" * 70)

        T = tropical_hypersurface(self.ring.parse("x + y + z"))
        self.assertEqual(complex_f_vector(T), (0, 1, 3, 0))
        self.assertEqual(T.dim(), 2)
        self.assertTrue(T.contains((0, 0, 1)))
        self.assertFalse(T.contains((0, 1, 1)))

        with self.assertRaises(ZeroPolynomialError):
            tropical_hypersurface(self.ring.zero())

        print("✓ Tropical line: one vertex, three rays (modulo lineality)")

    def test_02_prevariety(self):
        """Test 2: Intersection of two hypersurfaces"""
        print("\n" + "=" * 70)
        print("Test 2: Tropical Prevariety")
        print("=" * 70)

        polys = [self.ring.parse("x + y + z"), self.ring.parse("x + y")]
        P = tropical_prevariety(polys)
        self.assertEqual(complex_f_vector(P), (0, 1, 1, 0))
        self.assertTrue(in_prevariety(polys, (0, 0, 1)))
        self.assertFalse(in_prevariety(polys, (1, 1, 0)))
        self.assertTrue(P.contains((0, 0, 1)))

        single = tropical_prevariety([self.ring.parse("x + y + z")])
        self.assertTrue(same_support(single, tropical_hypersurface(self.ring.parse("x + y + z"))))

        empty = tropical_prevariety([self.ring.parse("x + y"), self.ring.parse("x*z")])
        self.assertTrue(empty.is_empty())
        self.assertEqual(empty.dim(), -1)

        print("✓ Prevariety {w_x = w_y <= w_z}")

    def test_03_pluecker_variety(self):
        """Test 3: trop of the Pluecker hypersurface"""
        print("\n" + "=" * 70)
        print("Test 3: Pluecker Tropical Variety")
        print("=" * 70)

        T = tropical_variety(self.delta24, classified=self.delta24_classified)
        self.assertEqual(complex_f_vector(T), (0, 0, 0, 0, 1, 3, 0))
        self.assertEqual(T.dim(), 5)
        self.assertEqual(self.delta24_classified.max_alpha(), 1)

        hypersurface = tropical_hypersurface(self.delta24.generators[0])
        self.assertTrue(same_support(T, hypersurface))

        print("✓ f-vector (0, 0, 0, 0, 1, 3, 0)")

    def test_04_empty_varieties(self):
        """Test 4: Ideals with monomials in every initial ideal"""
        print("\n" + "=" * 70)
        print("Test 4: Empty Tropical Varieties")
        print("=" * 70)

        self.assertTrue(tropical_variety(self.binary_forms, classified=self.binary_forms_classified).is_empty())
        self.assertTrue(tropical_variety(self.cubics, classified=self.cubics_classified).is_empty())
        self.assertFalse(any(self.cubics_classified.in_tropical))

        print("✓ Both tropical varieties are empty")

    def test_05_generation_checks(self):
        """Test 5: Candidates must lie in and generate the ideal"""
        print("\n" + "=" * 70)
        print("Test 5: Generation Checks")
        print("=" * 70)

        ring = self.binary_forms.ring
        check_generates(self.binary_forms, list(self.binary_forms.generators))
        with self.assertRaises(NotInIdealError):
            check_generates(self.binary_forms, [ring.parse("x^4")])
        with self.assertRaises(NotGeneratingError):
            check_generates(self.binary_forms, [ring.parse("x^5"), ring.parse("y^5")])

        print("✓ Membership and generation enforced")

    def test_06_tropical_basis_checks(self):
        """Test 6: Tropical basis verification"""
        print("\n" + "=" * 70)
        print("Test 6: Tropical Basis Check")
        print("=" * 70)

        pluecker = is_tropical_basis(self.delta24, list(self.delta24.generators), self.delta24_classified)
        self.assertTrue(pluecker.result)
        self.assertIsNone(pluecker.certificate)

        binary = is_tropical_basis(self.binary_forms, list(self.binary_forms.generators), self.binary_forms_classified)
        self.assertTrue(binary.result)

        _, listed = load_polynomials(DATA_DIR / "cubics_ugb.ideal")
        universal = is_tropical_basis(self.cubics, listed, self.cubics_classified)
        self.assertFalse(universal.result)
        self.assertTrue(in_prevariety(listed, universal.certificate))

        _, extended = load_polynomials(DATA_DIR / "cubics_tbasis.ideal")
        self.assertTrue(is_tropical_basis(self.cubics, extended, self.cubics_classified).result)

        print(f"✓ Universal basis refuted at {universal.to_dict()['certificate']}")

    def test_07_witness(self):
        """Test 7: Witness polynomials"""
        print("\n" + "=" * 70)
        print("Test 7: Witness Search")
        print("=" * 70)

        _, listed = load_polynomials(DATA_DIR / "cubics_ugb.ideal")
        w = is_tropical_basis(self.cubics, listed, self.cubics_classified).certificate
        witness = find_witness(self.cubics, w)
        self.assertTrue(ideal_member(self.cubics, witness))
        self.assertTrue(initial_form(w, witness).is_monomial())
        self.assertLessEqual(witness.degree(), 4)
        self.assertFalse(in_prevariety(listed + [witness], w))

        pluecker = find_witness(self.delta24, (0, 1, 1, 1, 1, 1))
        self.assertEqual(pluecker, self.delta24.generators[0].normalized())
        self.assertEqual(monomial_degree(initial_form((0, 1, 1, 1, 1, 1), pluecker).monomials()[0]), 2)

        print(f"✓ Witness at the certificate: {witness.to_string()}")

    def test_08_no_witness(self):
        """Test 8: No witness on the tropical variety"""
        print("\n" + "=" * 70)
        print("Test 8: No Witness")
        print("=" * 70)

        line = Ideal([make_ring("x,y").parse("x + y")])
        with self.assertRaises(NoWitnessError):
            find_witness(line, (1, 1))
        with self.assertRaises(NoWitnessError):
            find_witness(self.delta24, (1, 0, 0, 0, 0, 0))
        with self.assertRaises(DimensionMismatchError):
            find_witness(self.delta24, (1, 0))

        print("✓ NoWitnessError on trop(I)")

    def test_09_saturation_invariance(self):
        """Test 9: trop(I) equals trop of its torus saturation"""
        print("\n" + "=" * 70)
        print("Test 9: Saturation Invariance")
        print("=" * 70)

        shifted = Ideal([self.ring.parse("x^2*y - x*z^2")])
        for I in (self.delta24, shifted):
            saturated = saturate_torus(I)
            self.assertFalse(saturated.is_unit())
            T = tropical_variety(I)
            S = tropical_variety(saturated.ideal)
            self.assertTrue(same_support(T, S))
            self.assertEqual(complex_f_vector(T), complex_f_vector(S))
        self.assertTrue(same_ideal(saturate_torus(shifted).ideal, Ideal([self.ring.parse("x*y - z^2")])))

        for I, classified in ((self.cubics, self.cubics_classified), (self.binary_forms, self.binary_forms_classified)):
            self.assertTrue(saturate_torus(I).is_unit())
            self.assertTrue(tropical_variety(I, classified=classified).is_empty())

        print("✓ Saturation leaves the tropical variety unchanged")

    def test_10_pluecker_ideals(self):
        """Test 10: Pluecker relations vanish on maximal minors"""
        print("\n" + "=" * 70)
        print("Test 10: Pluecker Ideals")
        print("=" * 70)

        self.assertEqual(pluecker_variable((1, 2), 4), "p12")
        self.assertEqual(pluecker_variable((1, 10), 10), "p1_10")

        I24 = pluecker_ideal(2, 4)
        self.assertEqual(len(I24.generators), 1)
        self.assertEqual(len(I24.generators[0]), 3)
        self.assertEqual(
            complex_f_vector(tropical_variety(I24)),
            complex_f_vector(tropical_variety(self.delta24, classified=self.delta24_classified))
        )

        three_term = pluecker_ideal(2, 5, three_term=True)
        self.assertEqual(len(three_term.generators), 5)
        self.assertTrue(same_ideal(three_term, pluecker_ideal(2, 5)))
        self.assertEqual(krull_dimension(three_term), 7)

        self.assertEqual(len(three_term_relations(3, 6)), 30)
        rng = random.Random(17)
        matrix = [[rng.randint(-4, 4) for _ in range(6)] for _ in range(3)]
        subsets = list(itertools.combinations(range(1, 7), 3))
        minors = [integer_det([[row[c - 1] for c in S] for row in matrix]) for S in subsets]
        for f in pluecker_relations(3, 6) + three_term_relations(3, 6):
            value = 0
            for m, c in f.terms.items():
                term = c
                for i, e in enumerate(m):
                    term *= minors[i] ** e
                value += term
            self.assertEqual(value, 0, msg=f.to_string())

        with self.assertRaises(ParameterError):
            pluecker_ideal(1, 4)
        with self.assertRaises(ParameterError):
            pluecker_ideal(3, 4)

        print(f"✓ {len(pluecker_relations(3, 6))} relations of I(3,6) vanish at random minors")

    def test_11_variety_fvector_bound(self):
        """Test 11: Cell counts of trop(I) stay within the variety bound"""
        print("\n" + "=" * 70)
        print("Test 11: Variety f-Vector Bound")
        print("=" * 70)

        check = variety_fvector_check(self.delta24, classified=self.delta24_classified)
        self.assertTrue(check.within_bound)
        self.assertEqual(check.variety, (0, 0, 0, 0, 1, 3, 0))
        self.assertEqual(check.bound_by_dim[5], 105)
        self.assertEqual(check.bound_by_dim[4], 231)

        empty = variety_fvector_check(self.cubics, classified=self.cubics_classified)
        self.assertTrue(empty.within_bound)
        self.assertEqual(sum(empty.variety), 0)
        self.assertEqual(set(empty.bound_by_dim), {1, 2, 3})

        print(f"✓ trop(delta24) {check.variety} within {check.bound_by_dim}")


def run_tests():
    """Run all M6 acceptance tests"""
    print("\n" + "=" * 70)
    print("M6 ACCEPTANCE TESTS - TROPICAL GEOMETRY")
    print("=" * 70)

    suite = unittest.TestLoader().loadTestsFromTestCase(TestM6Tropical)
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
        print("\n✅ ALL M6 TESTS PASSED!")
    else:
        print("\n❌ SOME TESTS FAILED")

    return result.wasSuccessful()


if __name__ == "__main__":
    success = run_tests()
    sys.exit(0 if success else 1)
