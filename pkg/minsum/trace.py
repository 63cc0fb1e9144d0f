"""
Per-iteration message trace as JSON lines.

One TraceRecord per (iteration, direction, edge, beta).
"""

import logging
from pathlib import Path
from typing import Iterator, Literal, Optional, TextIO, Union

from pydantic import BaseModel, ConfigDict

from factor_graph.extended import format_extended
from minsum.messages import MessageState


logger = logging.getLogger(__name__)


class TraceRecord(BaseModel):
    """A single message table entry."""

    iteration: int
    direction: Literal["v->C", "C->v"]
    variable: int
    constraint: int
    beta: int
    value: str

    model_config = ConfigDict(frozen=True)


def state_records(state: MessageState) -> Iterator[TraceRecord]:
    """Records of both tables of a state, in row-major edge order."""
    for direction, tables in (("v->C", state.var_to_con), ("C->v", state.con_to_var)):
        for i, j in state.fg.edges:
            table = tables.get((i, j))
            if table is None:
                continue
            for beta, value in enumerate(table):
                yield TraceRecord(
                    iteration=state.iteration, direction=direction, variable=i,
                    constraint=j, beta=beta, value=format_extended(value),
                )


class TraceWriter:
    """Append message tables to a JSON-lines file, one state at a time."""

    def __init__(self, path: Union[str, Path]):
        self.path = Path(path)
        self.path.parent.mkdir(parents=True, exist_ok=True)
        self._handle: Optional[TextIO] = None
        self.records_written = 0

    def __enter__(self) -> "TraceWriter":
        self._handle = self.path.open("w", encoding="utf-8")
        return self

    def __exit__(self, *exc) -> None:
        if self._handle is not None:
            self._handle.close()
            self._handle = None
        logger.info(f"Wrote {self.records_written} trace records to {self.path}")

    def __call__(self, state: MessageState) -> None:
        if self._handle is None:
            raise RuntimeError("TraceWriter used outside of its context")
        for record in state_records(state):
            self._handle.write(record.model_dump_json() + "\n")
            self.records_written += 1


def read_trace(path: Union[str, Path]) -> list[TraceRecord]:
    """Load a trace file written by TraceWriter."""
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    return [TraceRecord.model_validate_json(line) for line in lines if line.strip()]
