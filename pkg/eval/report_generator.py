"""
Report generation for fixture runs and the lambda table.
"""
import csv
import io
from pathlib import Path
from typing import Dict, Any, Tuple

from tools.polytopes import LambdaResult


class ReportGenerator:
    """Generate formatted reports from fixture results"""

    @staticmethod
    def generate_markdown(report: Dict[str, Any], output_path: str):
        """Generate Markdown report"""
        md_lines = []

        md_lines.append("# tropws Fixture Report\n")
        md_lines.append(f"**Generated:** {report.get('timestamp', 'N/A')}\n")
        md_lines.append("---\n")

        summary = report.get('summary', {})
        md_lines.append("## Summary\n")
        md_lines.append(f"- **Total Cases:** {summary.get('total_cases', 0)}")
        md_lines.append(f"- **Passed:** {summary.get('passed', 0)}")
        md_lines.append(f"- **Failed:** {summary.get('failed', 0)}")
        md_lines.append(f"- **Total Time:** {summary.get('total_time', 0)}s\n")

        by_category = report.get('by_category', {})
        if by_category:
            md_lines.append("## Results by Category\n")
            md_lines.append("| Category | Total | Passed |")
            md_lines.append("|----------|-------|--------|")
            for cat, stats in sorted(by_category.items()):
                md_lines.append(f"| {cat} | {stats['total']} | {stats['passed']} |")
            md_lines.append("")

        results = report.get('results', [])
        failed = [r for r in results if not r.get('passed')]
        if failed:
            md_lines.append("## Failed Cases\n")
            for i, case in enumerate(failed, 1):
                md_lines.append(f"### {i}. {case.get('name')}")
                md_lines.append(f"- **Category:** {case.get('category')}")
                bad = [name for name, ok in case.get('checks', {}).items() if not ok]
                if bad:
                    md_lines.append(f"- **Failed checks:** {', '.join(bad)}")
                if case.get('error'):
                    md_lines.append(f"- **Error:** {case['error']}")
                md_lines.append("")

        output = Path(output_path)
        output.parent.mkdir(parents=True, exist_ok=True)
        with open(output, 'w', encoding='utf-8') as f:
            f.write("\n".join(md_lines))
        print(f"✓ Markdown report saved to: {output}")

    @staticmethod
    def generate_lambda_csv(table: Dict[Tuple[int, int], LambdaResult]) -> str:
        """
        Grid layout: one row per n, one column per d.

        A cell lists lambda_0 .. lambda_{n-2} separated by spaces; a trailing
        '*' marks a lower bound from a budget-limited run.
        """
        ns = sorted({n for n, _ in table})
        ds = sorted({d for _, d in table})
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["n"] + [f"d={d}" for d in ds])
        for n in ns:
            row = [str(n)]
            for d in ds:
                result = table.get((n, d))
                if result is None:
                    row.append("")
                    continue
                cell = " ".join(str(v) for v in result.values)
                row.append(cell if result.exact else cell + "*")
            writer.writerow(row)
        return buffer.getvalue()
