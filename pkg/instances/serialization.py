"""
Parse and serialize instance files.

Instance files are JSON text with fields n, m, rows, b, w, X, sense.
Rationals are written as "p/q" in lowest terms, or "p" when q = 1.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, Union

from pydantic import ValidationError

from instances.model import ProblemInstance
from utils.errors import InstanceFormatError


logger = logging.getLogger(__name__)

FIELD_ORDER = ("n", "m", "rows", "b", "w", "X", "sense")


class InstanceParser:
    """Parse and validate instance files."""

    @staticmethod
    def to_dict(inst: ProblemInstance) -> Dict[str, Any]:
        """JSON-ready dict with rationals rendered as text."""
        data = inst.model_dump(mode="json")
        return {key: data[key] for key in FIELD_ORDER}

    @staticmethod
    def serialize(inst: ProblemInstance) -> str:
        """
        Render an instance as JSON text.

        Args:
            inst: Instance to render

        Returns:
            JSON text; parse(serialize(inst)) == inst
        """
        return json.dumps(InstanceParser.to_dict(inst), indent=2) + "\n"

    @staticmethod
    def parse(text: str) -> ProblemInstance:
        """
        Parse JSON text into a validated ProblemInstance.

        Args:
            text: Instance file contents

        Returns:
            ProblemInstance

        Raises:
            InstanceFormatError: malformed JSON or failed validation
        """
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            logger.error(f"Instance text is not valid JSON: {e}")
            raise InstanceFormatError(f"invalid JSON: {e}") from e

        if not isinstance(data, dict):
            raise InstanceFormatError("instance JSON must be an object")

        missing = [key for key in FIELD_ORDER if key not in data and key != "sense"]
        if missing:
            raise InstanceFormatError(f"instance is missing fields: {', '.join(missing)}")

        try:
            inst = ProblemInstance.model_validate(data)
        except ValidationError as e:
            logger.error(f"Validation error parsing instance: {e}")
            raise InstanceFormatError(str(e)) from e

        logger.debug(f"Parsed {inst.sense.value} instance with n={inst.n}, m={inst.m}")
        return inst


def serialize_instance(inst: ProblemInstance) -> str:
    return InstanceParser.serialize(inst)


def parse_instance(text: str) -> ProblemInstance:
    return InstanceParser.parse(text)


def load_instance(path: Union[str, Path]) -> ProblemInstance:
    """Read and parse an instance file."""
    path = Path(path)
    logger.info(f"Loading instance from {path}")
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise InstanceFormatError(f"cannot read instance file {path}: {e}") from e
    return InstanceParser.parse(text)


def save_instance(inst: ProblemInstance, path: Union[str, Path]) -> Path:
    """Write an instance file, creating parent directories."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(InstanceParser.serialize(inst), encoding="utf-8")
    logger.info(f"Saved instance to {path}")
    return path
