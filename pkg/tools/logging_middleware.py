"""
Logging middleware for pipeline stages.
Stage decorator, trace context, and stderr progress output.
"""
import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

import time
import traceback
from functools import wraps
from typing import Callable, Dict, Any, Optional

from configs.config import config
from tools.logger import get_logger, StageType


def progress(message: str) -> None:
    """Stage progress on stderr; silent unless graph.verbose is set."""
    if config.get("graph.verbose", False):
        print(message, file=sys.stderr)


def log_stage(stage_type: StageType):
    """
    Decorator to log a pipeline stage.

    Usage:
        @log_stage(StageType.WITNESS_SEARCH)
        def witness_search_node(state: TropicalBasisState) -> TropicalBasisState:
            ...

    Args:
        stage_type: Stage being decorated

    Returns:
        Decorated function that times the stage, logs errors with their
        traceback and re-raises, and records the timing in state['stage_timings'].
    """
    def decorator(func: Callable[[Dict[str, Any]], Dict[str, Any]]) -> Callable:
        @wraps(func)
        def wrapper(state: Dict[str, Any]) -> Dict[str, Any]:
            logger = get_logger()
            trace_id = state.get('trace_id')
            if not trace_id:
                trace_id = logger.generate_trace_id()
                state['trace_id'] = trace_id

            input_data = _extract_stage_input(state)
            start_time = time.time()
            success = True
            error_msg = None
            result_state: Optional[Dict[str, Any]] = None

            try:
                result_state = func(state)
            except Exception as e:
                success = False
                error_msg = str(e)
                logger.log_error(
                    trace_id=trace_id,
                    stage_type=stage_type,
                    error_type=type(e).__name__,
                    error_message=error_msg,
                    stack_trace=traceback.format_exc(),
                    context={"state_keys": list(state.keys())}
                )
                raise
            finally:
                execution_time = time.time() - start_time
                if success:
                    output_data = _extract_stage_output(stage_type, result_state)
                else:
                    output_data = {"error": error_msg}

                logger.log_stage_execution(
                    trace_id=trace_id,
                    stage_type=stage_type,
                    input_data=input_data,
                    output_data=output_data,
                    execution_time=execution_time,
                    success=success,
                    error=error_msg
                )

                if success:
                    timings = dict(result_state.get('stage_timings') or {})
                    timings[stage_type.value] = timings.get(stage_type.value, 0.0) + execution_time
                    result_state['stage_timings'] = timings

            return result_state

        return wrapper
    return decorator


def _extract_stage_input(state: Dict[str, Any]) -> Dict[str, Any]:
    ideal = state.get('ideal')
    return {
        "ring": list(ideal.ring.variables) if ideal is not None else None,
        "generators": len(ideal.generators) if ideal is not None else 0,
        "round": state.get('round', 0),
        "basis_size": len(state.get('basis') or [])
    }


def _extract_stage_output(stage_type: StageType, state: Dict[str, Any]) -> Dict[str, Any]:
    """Per-stage summary of what the stage put into the state."""
    output: Dict[str, Any] = {}

    if stage_type == StageType.UNIVERSAL_BASIS:
        universal = state.get('universal_basis') or []
        output['universal_size'] = len(universal)
        output['universal_degree'] = max((f.degree() for f in universal), default=0)

    elif stage_type == StageType.TROPICAL_VARIETY:
        classified = state.get('classification')
        if classified is not None:
            output['cones'] = len(classified.in_tropical)
            output['tropical_cones'] = sum(classified.in_tropical)

    elif stage_type == StageType.PREVARIETY_CHECK:
        output['pending'] = len(state.get('pending') or [])

    elif stage_type == StageType.WITNESS_SEARCH:
        output['witnesses'] = len(state.get('witnesses') or [])
        output['basis_size'] = len(state.get('basis') or [])

    elif stage_type == StageType.VERIFY_BASIS:
        verification = state.get('verification') or {}
        output['is_tropical_basis'] = verification.get('result')

    elif stage_type == StageType.REPORT_BUILDER:
        report = state.get('report') or {}
        output['degree'] = report.get('degree')

    return output


class TraceContext:
    """
    Context manager for a trace.

    Usage:
        with TraceContext(command="trop", metadata={"file": path}) as trace:
            ...
    """

    def __init__(self, command: str, metadata: Dict = None):
        self.command = command
        self.metadata = metadata or {}
        self.trace_id = None
        self.start_time = None
        self.summary: Dict[str, Any] = {}
        self.logger = get_logger()

    def __enter__(self) -> "TraceContext":
        self.trace_id = self.logger.generate_trace_id()
        self.start_time = time.time()
        self.logger.log_trace_start(
            trace_id=self.trace_id,
            command=self.command,
            metadata=self.metadata
        )
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        total_time = time.time() - self.start_time
        success = exc_type is None
        error_msg = None
        if not success:
            error_msg = f"{exc_type.__name__}: {exc_val}"

        self.logger.log_trace_end(
            trace_id=self.trace_id,
            success=success,
            total_time=total_time,
            summary=self.summary,
            error=error_msg
        )
        # Don't suppress exceptions
        return False
