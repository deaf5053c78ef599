"""
Fixture runner for the reference ideals, the lambda table and the bounds.
"""
import sys
import argparse
from pathlib import Path
from datetime import datetime

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from eval.fixtures import FixtureRunner
from eval.report_generator import ReportGenerator
from eval.test_cases import (
    get_all_test_cases,
    get_test_cases_by_category
)
from tools.polytopes import lambda_table


def _finish(runner: FixtureRunner, report: dict, name: str, output_dir: str):
    runner.print_report(report)
    timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
    runner.save_report(report, f"{output_dir}/fixtures_{name}_{timestamp}.json")
    ReportGenerator.generate_markdown(report, f"{output_dir}/fixtures_{name}_{timestamp}.md")
    return report


def run_full_suite(output_dir: str = "eval/reports"):
    """Run every fixture case"""
    print("\n" + "=" * 70)
    print("tropws Full Fixture Suite")
    print("=" * 70)

    runner = FixtureRunner()
    report = runner.run_suite(get_all_test_cases())
    return _finish(runner, report, "full", output_dir)


def run_category(category: str, output_dir: str = "eval/reports"):
    """Run fixtures of one category"""
    test_cases = get_test_cases_by_category(category)
    if not test_cases:
        print(f"\n✗ No fixture cases found for category: {category}")
        return None

    runner = FixtureRunner()
    report = runner.run_suite(test_cases)
    return _finish(runner, report, category, output_dir)


def run_quick(output_dir: str = "eval/reports"):
    """Run every fixture case not marked heavy"""
    runner = FixtureRunner()
    report = runner.run_suite([c for c in get_all_test_cases() if not c.heavy])
    return _finish(runner, report, "quick", output_dir)


def write_lambda_csv(max_n: int, max_d: int, budget: int, output_dir: str = "eval/reports", search: bool = False):
    """Enumerate (or search) the lambda grid and write it as CSV"""
    csv_text = ReportGenerator.generate_lambda_csv(lambda_table(max_n, max_d, budget, search=search))
    output = Path(output_dir) / "lambda.csv"
    output.parent.mkdir(parents=True, exist_ok=True)
    output.write_text(csv_text, encoding="utf-8")
    print(csv_text)
    print(f"✓ Lambda table saved to: {output}")


def main():
    """Main entry point"""
    parser = argparse.ArgumentParser(description="tropws Fixture Runner")
    parser.add_argument(
        "mode",
        choices=["full", "category", "quick", "lambda"],
        help="Run mode"
    )
    parser.add_argument(
        "--category",
        help="Category name (for category mode): cubics, binary_forms, pluecker, lambda, bounds"
    )
    parser.add_argument("--max-n", type=int, default=5, help="Largest n (lambda mode)")
    parser.add_argument("--max-d", type=int, default=5, help="Largest d (lambda mode)")
    parser.add_argument("--budget", type=int, default=200000, help="Node budget per entry (lambda mode)")
    parser.add_argument("--search", action="store_true", help="Seeded lower-bound search; --budget counts proposals (lambda mode)")
    parser.add_argument(
        "--output-dir",
        default="eval/reports",
        help="Output directory for reports (default: eval/reports)"
    )

    args = parser.parse_args()

    if args.mode == "full":
        run_full_suite(args.output_dir)
    elif args.mode == "category":
        if not args.category:
            print("✗ --category required for category mode")
            sys.exit(1)
        run_category(args.category, args.output_dir)
    elif args.mode == "quick":
        run_quick(args.output_dir)
    elif args.mode == "lambda":
        write_lambda_csv(args.max_n, args.max_d, args.budget, args.output_dir, search=args.search)


if __name__ == "__main__":
    main()
