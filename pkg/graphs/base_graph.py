"""
Tropical basis pipeline as a LangGraph.

universal_basis -> tropical_variety -> prevariety_check
prevariety_check -> witness_search (pending points) | verify_basis
witness_search -> prevariety_check
verify_basis -> witness_search (certificate) | report_builder -> END
"""
import sys
from pathlib import Path
from typing import Optional

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from langgraph.graph import StateGraph, END

from configs.config import config
from graphs.state import TropicalBasisState
from graphs.nodes.universal_basis import universal_basis_node
from graphs.nodes.tropical_variety import tropical_variety_node
from graphs.nodes.prevariety_check import prevariety_check_node, route_after_prevariety
from graphs.nodes.witness_search import witness_search_node
from graphs.nodes.verify_basis import verify_basis_node, route_after_verify
from graphs.nodes.report_builder import report_builder_node
from tools.groebner import Ideal


def build_graph():
    """Build and compile the tropical basis graph."""
    workflow = StateGraph(TropicalBasisState)

    workflow.add_node("universal_basis", universal_basis_node)
    workflow.add_node("tropical_variety", tropical_variety_node)
    workflow.add_node("prevariety_check", prevariety_check_node)
    workflow.add_node("witness_search", witness_search_node)
    workflow.add_node("verify_basis", verify_basis_node)
    workflow.add_node("report_builder", report_builder_node)

    workflow.set_entry_point("universal_basis")
    workflow.add_edge("universal_basis", "tropical_variety")
    workflow.add_edge("tropical_variety", "prevariety_check")
    workflow.add_conditional_edges(
        "prevariety_check",
        route_after_prevariety,
        {"witness_search": "witness_search", "verify_basis": "verify_basis"}
    )
    workflow.add_edge("witness_search", "prevariety_check")
    workflow.add_conditional_edges(
        "verify_basis",
        route_after_verify,
        {"witness_search": "witness_search", "report_builder": "report_builder"}
    )
    workflow.add_edge("report_builder", END)

    return workflow.compile()


def run_tropical_basis(
    ideal: Ideal,
    threads: Optional[int] = None,
    trace_id: Optional[str] = None,
    budget: Optional[int] = None
) -> TropicalBasisState:
    """
    Run the tropical basis pipeline on one ideal.

    Args:
        ideal: nonzero homogeneous ideal
        threads: worker threads for fan traversal and cone classification
        trace_id: trace to attach stage logs to; a new one is generated if omitted
        budget: maximal-cone ceiling for the fan traversal; gfan.max_cones if omitted

    Returns:
        Final state; `basis` and `report` hold the result
    """
    graph = build_graph()

    initial_state: TropicalBasisState = {
        "ideal": ideal,
        "threads": threads or config.threads(),
        "budget": budget,
        "trace_id": trace_id,
        "round": 0,
        "stage_timings": {},
        "gfan": None,
        "universal_basis": None,
        "classification": None,
        "basis": None,
        "pending": None,
        "witnesses": None,
        "verification": None,
        "report": None
    }

    return graph.invoke(
        initial_state,
        config={"recursion_limit": config.get("graph.recursion_limit", 200)}
    )


if __name__ == "__main__":
    from tools.ring import make_ring

    ring = make_ring("x,y,z,w,u,v")
    result = run_tropical_basis(Ideal.from_strings(ring, ["x*y - z*w + u*v"]))
    print(f"Basis: {[f.to_string() for f in result['basis']]}")
    print(f"Degree: {result['report']['degree']}")
    print(f"Bound chain: {result['report']['bound_chain']}")
