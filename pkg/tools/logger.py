"""
Workbench Logger with Trace Support
Structured JSONL logging of CLI commands and pipeline stages, keyed by trace ID.
"""
import json
import sys
import uuid
from datetime import datetime
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Dict, Any, Optional, List

from configs.config import config


class StageType(Enum):
    """Pipeline stages and standalone computations"""
    UNIVERSAL_BASIS = "universal_basis"
    TROPICAL_VARIETY = "tropical_variety"
    PREVARIETY_CHECK = "prevariety_check"
    WITNESS_SEARCH = "witness_search"
    VERIFY_BASIS = "verify_basis"
    REPORT_BUILDER = "report_builder"
    GROEBNER_FAN = "groebner_fan"
    LAMBDA_ENUMERATION = "lambda_enumeration"
    BOUNDS = "bounds"
    CLI_COMMAND = "cli_command"


class WorkbenchLogger:
    """
    Structured logger with trace support.

    Features:
    - TraceID generation and propagation
    - Structured JSON lines, one file per record kind
    - Stage-level timing
    - Error tracking with stack traces
    - Trace replay
    """

    def __init__(self, log_dir: str = "logs", enabled: bool = True):
        """
        Initialize logger.

        Args:
            log_dir: Directory to store log files
            enabled: When False nothing is written
        """
        self.enabled = enabled
        self.log_dir = Path(log_dir)
        if self.enabled:
            try:
                self.log_dir.mkdir(parents=True, exist_ok=True)
            except OSError as e:
                print(f"Log directory unavailable ({e}); logging disabled", file=sys.stderr)
                self.enabled = False

        self.trace_log_file = self.log_dir / "traces.jsonl"
        self.stage_log_file = self.log_dir / "stages.jsonl"
        self.error_log_file = self.log_dir / "errors.jsonl"
        self.metrics_log_file = self.log_dir / "metrics.jsonl"

    def generate_trace_id(self) -> str:
        """Generate unique trace ID for a command"""
        return f"trace_{uuid.uuid4().hex[:16]}_{datetime.now().strftime('%Y%m%d_%H%M%S')}"

    def log_trace_start(
        self,
        trace_id: str,
        command: str,
        metadata: Optional[Dict[str, Any]] = None
    ) -> None:
        log_entry = {
            "timestamp": datetime.now().isoformat(),
            "trace_id": trace_id,
            "event": "trace_start",
            "command": command,
            "metadata": self._sanitize_data(metadata or {})
        }
        self._write_log(self.trace_log_file, log_entry)

    def log_trace_end(
        self,
        trace_id: str,
        success: bool,
        total_time: float,
        summary: Optional[Dict[str, Any]] = None,
        error: Optional[str] = None
    ) -> None:
        log_entry = {
            "timestamp": datetime.now().isoformat(),
            "trace_id": trace_id,
            "event": "trace_end",
            "success": success,
            "total_time": total_time,
            "summary": self._sanitize_data(summary or {}),
            "error": error
        }
        self._write_log(self.trace_log_file, log_entry)

    def log_stage_execution(
        self,
        trace_id: str,
        stage_type: StageType,
        input_data: Dict[str, Any],
        output_data: Dict[str, Any],
        execution_time: float,
        success: bool = True,
        error: Optional[str] = None
    ) -> None:
        """
        Log execution of a pipeline stage.

        Args:
            trace_id: Trace identifier
            stage_type: Stage executed
            input_data: Stage input summary
            output_data: Stage output summary
            execution_time: Wall time in seconds
            success: Whether the stage finished
            error: Error message if failed
        """
        log_entry = {
            "timestamp": datetime.now().isoformat(),
            "trace_id": trace_id,
            "stage_type": stage_type.value,
            "input_data": self._sanitize_data(input_data),
            "output_data": self._sanitize_data(output_data),
            "execution_time": execution_time,
            "success": success,
            "error": error
        }
        self._write_log(self.stage_log_file, log_entry)

    def log_error(
        self,
        trace_id: str,
        stage_type: Optional[StageType],
        error_type: str,
        error_message: str,
        stack_trace: Optional[str] = None,
        context: Optional[Dict[str, Any]] = None
    ) -> None:
        log_entry = {
            "timestamp": datetime.now().isoformat(),
            "trace_id": trace_id,
            "stage_type": stage_type.value if stage_type else None,
            "error_type": error_type,
            "error_message": error_message,
            "stack_trace": stack_trace,
            "context": self._sanitize_data(context or {})
        }
        self._write_log(self.error_log_file, log_entry)

    def log_metrics(self, trace_id: str, metrics: Dict[str, Any]) -> None:
        log_entry = {
            "timestamp": datetime.now().isoformat(),
            "trace_id": trace_id,
            **self._sanitize_data(metrics)
        }
        self._write_log(self.metrics_log_file, log_entry)

    def get_trace_logs(self, trace_id: str) -> List[Dict[str, Any]]:
        """All records of one trace, oldest first."""
        logs = []
        for log_file in [self.trace_log_file, self.stage_log_file,
                         self.error_log_file, self.metrics_log_file]:
            if not log_file.exists():
                continue
            with open(log_file, 'r', encoding='utf-8') as f:
                for line in f:
                    try:
                        entry = json.loads(line.strip())
                    except json.JSONDecodeError:
                        continue
                    if entry.get('trace_id') == trace_id:
                        logs.append(entry)
        logs.sort(key=lambda x: x.get('timestamp', ''))
        return logs

    def replay_trace(self, trace_id: str) -> Dict[str, Any]:
        """
        Replay a trace for debugging.

        Returns:
            {"trace_id", "timeline", "stages", "errors", "metrics", "summary"}
        """
        logs = self.get_trace_logs(trace_id)
        if not logs:
            return {"error": f"No logs found for trace {trace_id}"}

        trace_info = {
            "trace_id": trace_id,
            "timeline": [],
            "stages": [],
            "errors": [],
            "metrics": [],
            "summary": {}
        }
        for log in logs:
            event_type = log.get('event')
            if event_type == 'trace_start':
                trace_info['summary']['command'] = log.get('command')
                trace_info['summary']['start_time'] = log.get('timestamp')
            elif event_type == 'trace_end':
                trace_info['summary']['end_time'] = log.get('timestamp')
                trace_info['summary']['success'] = log.get('success')
                trace_info['summary']['total_time'] = log.get('total_time')
            elif 'stage_type' in log and 'execution_time' in log:
                trace_info['stages'].append(log)
            elif 'error_type' in log:
                trace_info['errors'].append(log)
            else:
                trace_info['metrics'].append(log)
            trace_info['timeline'].append(log)
        return trace_info

    def _sanitize_data(self, data: Any, max_length: int = 500) -> Any:
        """Make data JSON-safe: stringify exact numbers, truncate long strings."""
        if isinstance(data, str):
            if len(data) > max_length:
                return data[:max_length] + "... (truncated)"
            return data
        if isinstance(data, Fraction):
            return str(data)
        if isinstance(data, bool) or data is None or isinstance(data, float):
            return data
        if isinstance(data, int):
            # exact bounds can exceed any JSON reader's integer range
            return data if abs(data) < 2 ** 53 else str(data)
        if isinstance(data, dict):
            return {str(k): self._sanitize_data(v, max_length) for k, v in data.items()}
        if isinstance(data, (list, tuple)):
            return [self._sanitize_data(item, max_length) for item in data]
        return self._sanitize_data(str(data), max_length)

    def _write_log(self, log_file: Path, entry: Dict[str, Any]) -> None:
        if not self.enabled:
            return
        try:
            with open(log_file, 'a', encoding='utf-8') as f:
                f.write(json.dumps(entry, ensure_ascii=False) + '\n')
        except Exception as e:
            # Fallback to stderr if file write fails
            print(f"Failed to write log: {e}", file=sys.stderr)


# Global logger instance
_global_logger: Optional[WorkbenchLogger] = None


def get_logger(log_dir: Optional[str] = None) -> WorkbenchLogger:
    """
    Get or create the global logger.

    Args:
        log_dir: Directory to store log files; defaults to the configured one.
            A different directory replaces the global instance.
    """
    global _global_logger

    directory = log_dir or config.get("logging.log_dir", "logs")
    if _global_logger is None or Path(directory) != _global_logger.log_dir:
        _global_logger = WorkbenchLogger(directory, enabled=bool(config.get("logging.enabled", True)))
    return _global_logger


if __name__ == "__main__":
    """Demo: one trace with two stages, then replay it."""
    import time

    logger = get_logger(log_dir="logs/demo")
    trace_id = logger.generate_trace_id()
    print(f"1. Starting trace: {trace_id}")
    logger.log_trace_start(trace_id, "tbasis", metadata={"ideal": "data/ideals/delta24.ideal"})

    start_time = time.time()
    logger.log_stage_execution(
        trace_id=trace_id,
        stage_type=StageType.UNIVERSAL_BASIS,
        input_data={"generators": 1},
        output_data={"universal_size": 1, "degree": 2},
        execution_time=0.05
    )
    logger.log_stage_execution(
        trace_id=trace_id,
        stage_type=StageType.TROPICAL_VARIETY,
        input_data={"cones": 7},
        output_data={"tropical_cones": 4},
        execution_time=0.2
    )
    logger.log_trace_end(trace_id, success=True, total_time=time.time() - start_time,
                         summary={"degree": 2})

    replay = logger.replay_trace(trace_id)
    print(f"2. Stages replayed: {[s['stage_type'] for s in replay['stages']]}")
    print(f"✓ Logs saved to: {logger.log_dir}")
