"""
Fixture framework: named groups of exact checks on reference computations.
Each case runs exact computations and reports named boolean checks.
"""
import sys
import json
import time
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from tools.errors import WorkbenchError
from tools.logger import get_logger


CheckOutcome = Dict[str, Any]


class FixtureCase:
    """Single fixture: a named group of exact checks"""

    def __init__(
        self,
        name: str,
        check: Callable[[], CheckOutcome],
        description: str = "",
        category: str = "general",
        heavy: bool = False
    ):
        """
        Initialize fixture case.

        Args:
            name: Unique case name
            check: Callable returning {"checks": {name: bool}, "details": {...}}
            description: What the case reproduces
            category: cubics, binary_forms, pluecker, lambda or bounds
            heavy: Skipped by quick runs
        """
        self.name = name
        self.check = check
        self.description = description
        self.category = category
        self.heavy = heavy

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "description": self.description,
            "category": self.category,
            "heavy": self.heavy
        }


class FixtureResult:
    """Outcome of one fixture case"""

    def __init__(
        self,
        case: FixtureCase,
        checks: Dict[str, bool],
        details: Dict[str, Any],
        execution_time: float,
        error: Optional[str] = None
    ):
        self.case = case
        self.checks = checks
        self.details = details
        self.execution_time = execution_time
        self.error = error

    @property
    def passed(self) -> bool:
        return self.error is None and bool(self.checks) and all(self.checks.values())

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.case.name,
            "category": self.case.category,
            "description": self.case.description,
            "passed": self.passed,
            "checks": dict(self.checks),
            "details": self.details,
            "execution_time": self.execution_time,
            "error": self.error
        }


class FixtureRunner:
    """Runs fixture cases and summarizes them"""

    def __init__(self, verbose: bool = True, trace_id: Optional[str] = None):
        self.verbose = verbose
        self.trace_id = trace_id
        self.results: List[FixtureResult] = []

    def _say(self, message: str) -> None:
        if self.verbose:
            print(message)

    def run_case(self, case: FixtureCase) -> FixtureResult:
        self._say(f"\nRunning: {case.name} ({case.description})")
        start_time = time.time()
        try:
            outcome = case.check()
            result = FixtureResult(
                case=case,
                checks=outcome.get("checks", {}),
                details=outcome.get("details", {}),
                execution_time=round(time.time() - start_time, 3)
            )
        except WorkbenchError as e:
            result = FixtureResult(
                case=case,
                checks={},
                details={},
                execution_time=round(time.time() - start_time, 3),
                error=f"{type(e).__name__}: {e}"
            )

        for name, ok in result.checks.items():
            self._say(f"  {'✓' if ok else '✗'} {name}")
        if result.error:
            self._say(f"  ✗ Error: {result.error}")
        self._say(f"  Time: {result.execution_time:.2f}s")
        return result

    def run_suite(self, cases: List[FixtureCase]) -> Dict[str, Any]:
        """
        Run every case and build the report.

        Returns:
            {"timestamp", "summary", "by_category", "results"}
        """
        self._say("\n" + "=" * 70)
        self._say(f"Running Fixtures: {len(cases)} cases")
        self._say("=" * 70)

        self.results = []
        start_time = time.time()
        for i, case in enumerate(cases, 1):
            self._say(f"\n[{i}/{len(cases)}] Category: {case.category}")
            self.results.append(self.run_case(case))

        report = self._generate_report(time.time() - start_time)
        if self.trace_id:
            get_logger().log_metrics(self.trace_id, {"fixtures": report["summary"]})
        return report

    def _generate_report(self, total_time: float) -> Dict[str, Any]:
        total = len(self.results)
        passed = sum(1 for r in self.results if r.passed)

        by_category: Dict[str, Dict[str, int]] = {}
        for r in self.results:
            stats = by_category.setdefault(r.case.category, {"total": 0, "passed": 0})
            stats["total"] += 1
            stats["passed"] += int(r.passed)

        return {
            "timestamp": time.strftime("%Y-%m-%dT%H:%M:%S"),
            "summary": {
                "total_cases": total,
                "passed": passed,
                "failed": total - passed,
                "total_time": round(total_time, 3)
            },
            "by_category": by_category,
            "results": [r.to_dict() for r in self.results]
        }

    @staticmethod
    def print_report(report: Dict[str, Any]) -> None:
        summary = report["summary"]
        print("\n" + "=" * 70)
        print("Fixture Report")
        print("=" * 70)
        print(f"{'Case':<32} | {'Category':<8} | Result")
        print("-" * 70)
        for r in report["results"]:
            print(f"{r['name']:<32} | {r['category']:<8} | {'PASS' if r['passed'] else 'FAIL'}")
        print("-" * 70)
        print(f"Passed {summary['passed']}/{summary['total_cases']} in {summary['total_time']}s")

    @staticmethod
    def save_report(report: Dict[str, Any], output_path: str) -> None:
        output = Path(output_path)
        output.parent.mkdir(parents=True, exist_ok=True)
        with open(output, 'w', encoding='utf-8') as f:
            json.dump(report, f, indent=2, ensure_ascii=False, default=str)
        print(f"\n✓ Report saved to: {output_path}")
