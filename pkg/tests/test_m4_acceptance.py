"""
M4 Acceptance Test: Cones & Fans
Tests canonical cones, exact LPs, face enumeration and normal fans.
"""
import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

import unittest
from fractions import Fraction

from tools.cones import (
    Fan,
    cone_from_hrep,
    full_cone_faces,
    make_cone,
    normal_fan,
    relative_interior_point,
    relint_intersection_point,
    whole_space,
)
from tools.errors import DimensionMismatchError, InternalInconsistencyError
from tools.linalg import integer_det, normal_of, nullspace, project_away, rank, row_basis, rref
from tools.polytopes import convex_hull


class TestM4Cones(unittest.TestCase):
    """Test Suite for M4 - Cones and Fans"""

    @classmethod
    def setUpClass(cls):
        cls.triangle = convex_hull([(1, 0, 0), (0, 1, 0), (0, 0, 1)])

    def test_01_canonical_cones(self):
        """Test 1: Canonical H-representations"""
        print("\n" + "=" * 70)
        print("Test 1: Canonical Cones")
        print("=" * 70)

        orthant = make_cone(2, [], [(2, 0), (0, 3)], (1, 1))
        self.assertEqual(orthant.inequalities, ((0, 1), (1, 0)))
        self.assertEqual(orthant.dim, 2)
        self.assertEqual(orthant.lineality_dim, 0)
        self.assertTrue(orthant.contains((0, 5)))
        self.assertFalse(orthant.contains_relint((0, 5)))
        self.assertTrue(orthant.contains_relint(relative_interior_point(orthant)))

        plane = whole_space(3)
        self.assertEqual(plane.dim, 3)
        self.assertEqual(plane.lineality_dim, 3)

        with self.assertRaises(DimensionMismatchError):
            make_cone(2, [], [(1, 0, 0)], (1, 1))
        with self.assertRaises(InternalInconsistencyError):
            make_cone(2, [], [(1, 0)], (0, 1))

        print("✓ Canonical forms and membership")

    def test_02_hrep_cleanup(self):
        """Test 2: Redundant inequalities and implicit equations"""
        print("\n" + "=" * 70)
        print("Test 2: H-representation Cleanup")
        print("=" * 70)

        redundant = cone_from_hrep(2, [(1, 0), (0, 1), (1, 1)])
        self.assertEqual(len(redundant.inequalities), 2)
        self.assertEqual(redundant.dim, 2)

        flat = cone_from_hrep(2, [(1, 0), (-1, 0), (0, 1)])
        self.assertEqual(flat.dim, 1)
        self.assertEqual(flat.equations, ((1, 0),))
        self.assertEqual(flat.inequalities, ((0, 1),))

        print("✓ Redundancy removed, implicit equation found")

    def test_03_relint_intersection(self):
        """Test 3: Relative-interior intersections by LP"""
        print("\n" + "=" * 70)
        print("Test 3: Relint Intersection")
        print("=" * 70)

        orthant = make_cone(2, [], [(1, 0), (0, 1)], (1, 1))
        left = make_cone(2, [], [(-1, 0)], (-1, 0))
        wedge = make_cone(2, [], [(1, -1)], (1, 0))

        self.assertIsNone(relint_intersection_point(orthant, left))
        point = relint_intersection_point(orthant, wedge)
        self.assertIsNotNone(point)
        self.assertTrue(orthant.contains_relint(point))
        self.assertTrue(wedge.contains_relint(point))

        with self.assertRaises(DimensionMismatchError):
            relint_intersection_point(orthant, whole_space(3))

        print(f"✓ Common relative-interior point {[str(x) for x in point]}")

    def test_04_cone_faces(self):
        """Test 4: Faces of a full-dimensional cone"""
        print("\n" + "=" * 70)
        print("Test 4: Cone Faces")
        print("=" * 70)

        faces = full_cone_faces(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)], (1, 1, 1))
        dims = sorted(C.dim for C in faces.faces)
        self.assertEqual(dims, [0, 1, 1, 1, 2, 2, 2, 3])
        self.assertEqual(len(faces.facet_points), 3)
        for normal, point in faces.facet_points.items():
            facet = next(C for C in faces.faces if C.dim == 2 and C.contains_relint(point))
            self.assertEqual(facet.equations, (normal,))

        print("✓ Orthant in R^3 has f-vector (1, 3, 3, 1)")

    def test_05_normal_fan(self):
        """Test 5: Normal fan of a triangle in R^3"""
        print("\n" + "=" * 70)
        print("Test 5: Normal Fan")
        print("=" * 70)

        fan = normal_fan(self.triangle)
        self.assertEqual(fan.f_vector(), (0, 1, 3, 3))
        self.assertEqual(len(fan.maximal), 3)
        self.assertTrue(all(fan.cones[i].lineality_dim == 1 for i in fan.maximal))

        self.assertEqual(fan.locate((0, 1, 1)).dim, 3)
        self.assertEqual(fan.locate((0, 0, 1)).dim, 2)
        self.assertEqual(fan.locate((4, 4, 4)).dim, 1)
        self.assertTrue(fan.contains((5, -2, 7)))

        skeleton = normal_fan(self.triangle, min_face_dim=1)
        self.assertEqual(skeleton.f_vector(), (0, 1, 3, 0))
        self.assertIsNone(skeleton.locate((0, 1, 1)))

        incidences = fan.incidence()
        self.assertEqual(len(incidences), 3 + 3 + 6)

        print("✓ Fan f-vector (0, 1, 3, 3)")

    def test_06_fan_deduplication(self):
        """Test 6: Fans deduplicate cones and find maximal ones"""
        print("\n" + "=" * 70)
        print("Test 6: Fan Deduplication")
        print("=" * 70)

        orthant = make_cone(2, [], [(1, 0), (0, 1)], (1, 1))
        same = make_cone(2, [], [(3, 0), (0, 1)], (2, 5))
        ray = make_cone(2, [(1, 0)], [(0, 1)], (0, 1))
        fan = Fan.from_cones(2, [orthant, same, ray])
        self.assertEqual(len(fan.cones), 2)
        self.assertEqual([fan.cones[i].dim for i in fan.maximal], [2])
        self.assertEqual(fan.dim(), 2)
        self.assertFalse(fan.is_empty())
        self.assertEqual(Fan.from_cones(2, []).dim(), -1)

        print("✓ Duplicate cone merged, ray is not maximal")

    def test_07_exact_linear_algebra(self):
        """Test 7: Row reduction, kernels and determinants stay exact"""
        print("\n" + "=" * 70)
        print("Test 7: Exact Linear Algebra")
        print("=" * 70)

        reduced, pivots = rref([[2, 4], [1, 3]], 2)
        self.assertEqual(reduced, [[1, 0], [0, 1]])
        self.assertEqual(pivots, [0, 1])
        reduced, pivots = rref([[1, 2, 3], [2, 4, 6]], 3)
        self.assertEqual(reduced, [[1, 2, 3]])
        self.assertEqual(pivots, [0])
        self.assertEqual(rref([], 3), ([], []))
        self.assertEqual(rank([[1, 2, 3], [2, 4, 6], [0, 1, 1]], 3), 2)
        self.assertEqual(rank([[Fraction(1, 2), Fraction(1, 3)]], 2), 1)

        self.assertEqual(nullspace([[1, 1, 1]], 3), [(-1, 1, 0), (-1, 0, 1)])
        self.assertEqual(nullspace([], 2), [(1, 0), (0, 1)])
        self.assertEqual(row_basis([[2, 4, 6], [1, 1, 1]], 3), [(1, 0, -1), (0, 1, 2)])

        self.assertEqual(integer_det([[2, 1], [1, 3]]), 5)
        self.assertEqual(integer_det([[1, 2, 3], [4, 5, 6], [7, 8, 10]]), -3)
        self.assertEqual(integer_det([]), 1)

        self.assertEqual(normal_of([(1, 0, -1), (0, 1, -1)], 3), (1, 1, 1))
        self.assertEqual(normal_of([(1, 1, 0), (2, 2, 0)], 3), (0, 0, 0))

        projected = project_away((1, 2, 3), [(1, 1, 1)])
        self.assertEqual(projected, (-1, 0, 1))
        self.assertTrue(all(isinstance(x, Fraction) for x in projected))
        self.assertEqual(project_away((Fraction(1, 2), 0), [(0, 3)]), (Fraction(1, 2), 0))
        self.assertEqual(project_away((1, 2), []), (1, 2))

        print("✓ rref, kernels, determinants and projections")


def run_tests():
    """Run all M4 acceptance tests"""
    print("\n" + "=" * 70)
    print("M4 ACCEPTANCE TESTS - CONES AND FANS")
    print("=" * 70)

    suite = unittest.TestLoader().loadTestsFromTestCase(TestM4Cones)
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
        print("\n✅ ALL M4 TESTS PASSED!")
    else:
        print("\n❌ SOME TESTS FAILED")

    return result.wasSuccessful()


if __name__ == "__main__":
    success = run_tests()
    sys.exit(0 if success else 1)
