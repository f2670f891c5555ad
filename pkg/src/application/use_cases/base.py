"""
Command Use Case - Application Layer

Shared execution frame for the subcommand use cases: runs the computation,
logs the written files and turns failures into an error.json report.
"""

import logging
from pathlib import Path
from typing import Any, Dict, List

from src.application.ports import ReportWriterPort
from src.domain.errors import CknError, EmitError, ErrorReport
from src.domain.value_objects import Parameters, RunConfig

logger = logging.getLogger(__name__)

ERROR_REPORT = "error.json"


def parameter_record(params: Parameters) -> Dict[str, Any]:
    return {"n": params.n, "gamma": params.gamma, "alpha": params.alpha, "beta": params.beta, "p": params.p}


class CommandUseCase:
    """
    Base class for one CLI subcommand.

    Subclasses implement `_run`, which computes and writes the outputs and
    returns their paths. Library errors propagate up to `execute`, the only
    place they are caught.
    """

    def __init__(self, config: RunConfig, writer: ReportWriterPort):
        """
        Initialize the use case with injected dependencies.

        Args:
            config: Validated configuration for the command
            writer: Output writer rooted at the output directory
        """
        self.config = config
        self.writer = writer

    def execute(self) -> bool:
        """
        Run the command.

        Returns:
            True if every output was written, False on a computational failure
        """
        logger.info(f"Running '{self.config.command}'...")
        try:
            written = self._run()
        except CknError as e:
            logger.error(f"❌ {self.config.command} failed: {e.kind}: {e.message}")
            self._report_failure(e.to_report())
            return False
        except Exception as e:
            logger.error(f"❌ Unexpected error in {self.config.command}: {e}", exc_info=True)
            self._report_failure(ErrorReport(kind=type(e).__name__, message=str(e)))
            return False

        for path in written:
            logger.info(f"📂 Wrote {path}")
        logger.info(f"✅ {self.config.command} finished")
        return True

    def _run(self) -> List[Path]:
        raise NotImplementedError

    def _report_failure(self, report: ErrorReport) -> None:
        report.details.setdefault("command", self.config.command)
        try:
            path = self.writer.write_json(ERROR_REPORT, report.to_record())
            logger.info(f"📂 Error report written to {path}")
        except EmitError as e:
            logger.error(f"Could not write the error report: {e.message}")
