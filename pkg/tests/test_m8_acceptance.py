"""
M8 Acceptance Test: Tropical Basis Pipeline
Tests the LangGraph workflow, its routing and the tropical basis it produces.
"""
import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

import unittest

from graphs.base_graph import build_graph, run_tropical_basis
from graphs.nodes.prevariety_check import prevariety_check_node, route_after_prevariety
from graphs.nodes.verify_basis import route_after_verify
from tools.errors import BudgetExceededError
from tools.ideal_io import load_ideal
from tools.logger import StageType, get_logger
from tools.tropical import classify_groebner_fan, compute_tropical_basis, is_tropical_basis


DATA_DIR = project_root / "data" / "ideals"


class TestM8Pipeline(unittest.TestCase):
    """Test Suite for M8 - Tropical Basis Pipeline"""

    @classmethod
    def setUpClass(cls):
        cls.delta24 = load_ideal(DATA_DIR / "delta24.ideal")
        cls.binary_forms = load_ideal(DATA_DIR / "binary_forms.ideal")
        cls.cubics = load_ideal(DATA_DIR / "cubics.ideal")

    def test_01_graph_compiles(self):
        """Test 1: Graph construction"""
        print("\n" + "=" * 70)
        print("Test 1: Graph Construction")
        print("=" * 70)

        graph = build_graph()
        self.assertIsNotNone(graph)

        print("✓ Graph compiled")

    def test_02_routing(self):
        """Test 2: Conditional edges"""
        print("\n" + "=" * 70)
        print("Test 2: Routing")
        print("=" * 70)

        self.assertEqual(route_after_prevariety({"pending": [(0, 1)]}), "witness_search")
        self.assertEqual(route_after_prevariety({"pending": []}), "verify_basis")
        self.assertEqual(route_after_verify({"verification": {"result": True, "certificate": None}}),
                         "report_builder")
        self.assertEqual(route_after_verify({"verification": {"result": False, "certificate": (0, 1)}}),
                         "witness_search")

        print("✓ Routes follow pending points and verification")

    def test_03_prevariety_check_node(self):
        """Test 3: Pending points come from non-tropical cones"""
        print("\n" + "=" * 70)
        print("Test 3: Prevariety Check Node")
        print("=" * 70)

        classified = classify_groebner_fan(self.binary_forms)
        ring = self.binary_forms.ring
        binomial_only = [ring.parse("x^4 + x^2*y^2 + y^4")]
        state = prevariety_check_node({
            "ideal": self.binary_forms,
            "basis": binomial_only,
            "classification": classified,
            "stage_timings": {}
        })
        self.assertGreater(len(state["pending"]), 0)
        self.assertIn(StageType.PREVARIETY_CHECK.value, state["stage_timings"])

        state = prevariety_check_node({
            "ideal": self.binary_forms,
            "basis": list(self.binary_forms.generators),
            "classification": classified,
            "stage_timings": {}
        })
        self.assertEqual(state["pending"], [])

        print("✓ Pending points reported only while the prevariety is too large")

    def test_04_pluecker_basis(self):
        """Test 4: The Pluecker generator is already a tropical basis"""
        print("\n" + "=" * 70)
        print("Test 4: Pluecker Tropical Basis")
        print("=" * 70)

        result = compute_tropical_basis(self.delta24)
        self.assertEqual(result.degree, 2)
        self.assertEqual(result.universal_degree, 2)
        self.assertEqual(result.witnesses, [])
        self.assertEqual(result.rounds, 0)
        self.assertEqual(result.alpha, 1)
        self.assertEqual(result.bound_chain, {
            "observed": 2,
            "max_degU_alpha_n": 6,
            "n_degU": 12,
            "eq3": 786432
        })
        self.assertEqual(result.variety.f_vector, (0, 0, 0, 0, 1, 3, 0))
        self.assertEqual(result.to_dict()["bound_chain"]["eq3"], "786432")

        print(f"✓ Basis {[f.to_string() for f in result.basis]}, chain 2 <= 6 <= 12 <= 786432")

    def test_05_binary_forms_basis(self):
        """Test 5: Universal basis with a monomial needs no witness"""
        print("\n" + "=" * 70)
        print("Test 5: Binary Forms")
        print("=" * 70)

        result = compute_tropical_basis(self.binary_forms)
        self.assertEqual(result.witnesses, [])
        self.assertEqual(result.degree, 5)
        self.assertTrue(result.variety.is_empty())
        self.assertIsNone(result.bound_chain["eq3"])
        self.assertTrue(is_tropical_basis(self.binary_forms, result.basis).result)

        print("✓ Zero-dimensional ideal: eq3 not applicable")

    def test_06_witness_rounds(self):
        """Test 6: The universal basis of six cubics needs witnesses"""
        print("\n" + "=" * 70)
        print("Test 6: Witness Rounds")
        print("=" * 70)

        result = compute_tropical_basis(self.cubics)
        self.assertEqual(result.degree, 4)
        self.assertEqual(result.universal_degree, 3)
        self.assertTrue(is_tropical_basis(self.cubics, result.basis).result)
        self.assertGreater(len(result.witnesses), 0)
        self.assertGreaterEqual(result.rounds, 1)
        chain = result.bound_chain
        self.assertLessEqual(chain["observed"], chain["max_degU_alpha_n"])
        self.assertLessEqual(chain["max_degU_alpha_n"], chain["n_degU"])

        print(f"✓ Witnesses: {[f.to_string() for f in result.witnesses]}")

    def test_07_budget_and_trace(self):
        """Test 7: Budget propagation and stage logging"""
        print("\n" + "=" * 70)
        print("Test 7: Budget and Trace")
        print("=" * 70)

        with self.assertRaises(BudgetExceededError):
            compute_tropical_basis(self.delta24, budget=1)

        logger = get_logger()
        trace_id = logger.generate_trace_id()
        state = run_tropical_basis(self.delta24, threads=2, trace_id=trace_id)
        self.assertEqual(state["trace_id"], trace_id)
        self.assertIn(StageType.REPORT_BUILDER.value, state["stage_timings"])

        stages = [s["stage_type"] for s in logger.replay_trace(trace_id)["stages"]]
        self.assertEqual(stages[0], StageType.UNIVERSAL_BASIS.value)
        self.assertEqual(stages[-1], StageType.REPORT_BUILDER.value)

        print(f"✓ Stages: {' -> '.join(stages)}")


def run_tests():
    """Run all M8 acceptance tests"""
    print("\n" + "=" * 70)
    print("M8 ACCEPTANCE TESTS - TROPICAL BASIS PIPELINE")
    print("=" * 70)

    suite = unittest.TestLoader().loadTestsFromTestCase(TestM8Pipeline)
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
        print("\n✅ ALL M8 TESTS PASSED!")
    else:
        print("\n❌ SOME TESTS FAILED")

    return result.wasSuccessful()


if __name__ == "__main__":
    success = run_tests()
    sys.exit(0 if success else 1)
