"""
Configuration management using Pydantic v2 and environment variables.

All configuration is loaded from .env file via python-dotenv.
Environment variables override defaults. Every resource cap used by the
solvers, the tree oracle and the lift constructions lives here so a desk-scale
run can be widened or tightened without touching code.
"""

from pathlib import Path

from pydantic import Field, field_validator, ConfigDict
from pydantic_settings import BaseSettings
from dotenv import load_dotenv


# Load environment variables from .env file
load_dotenv()


class Settings(BaseSettings):
    """
    Global application settings.

    All settings can be overridden via environment variables.
    Validation ensures configuration is correct before any solver runs.
    """

    # ===== LOGGING CONFIGURATION =====
    log_level: str = Field(
        default="INFO",
        description="Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)"
    )
    log_dir: str = Field(
        default="./logs",
        description="Directory for log files"
    )

    # ===== COMPUTATION TREE =====
    tree_node_cap: int = Field(
        default=1_000_000,
        description="Maximum number of paths a path-prefix tree may hold",
        gt=0,
    )
    tree_enumeration_limit: int = Field(
        default=10_000,
        description="Per-node child assignment count up to which the tree oracle enumerates exhaustively",
        gt=0,
    )

    # ===== EXACT LP =====
    lp_system_cap: int = Field(
        default=2_000_000,
        description="Maximum number of basis systems the vertex enumeration may visit",
        gt=0,
    )
    exhaustive_box_limit: int = Field(
        default=10_000,
        description="Maximum size of ZBox(X) for brute-force integral enumeration",
        gt=0,
    )

    # ===== LIFTS =====
    max_doubling_edges: int = Field(
        default=16,
        description="Largest edge count accepted by the 2^|E| girth doubling lift",
        gt=0,
        le=24,
    )
    max_lift_fold: int = Field(
        default=65_536,
        description="Largest fold amplify_girth may build",
        gt=0,
    )
    realizer_fold_multiplier: int = Field(
        default=8,
        description="Default M_max of the fractional realizer, as a multiple of the denominator lcm",
        gt=0,
    )
    realizer_node_budget: int = Field(
        default=200_000,
        description="Backtracking node budget of the fractional realizer",
        gt=0,
    )

    # ===== MIN-SUM =====
    normalize_messages: bool = Field(
        default=False,
        description="Subtract each constraint-to-variable table's maximum finite entry every iteration"
    )
    minsum_workers: int = Field(
        default=1,
        description="Thread workers used within each half-iteration (1 = sequential)",
        ge=1,
        le=64,
    )

    # ===== HARNESS =====
    sweep_workers: int = Field(
        default=1,
        description="Process workers used across sweep instances (1 = sequential)",
        ge=1,
        le=64,
    )
    convergence_slack: int = Field(
        default=1,
        description="Extra iterations checked past the convergence bound",
        ge=0,
    )

    # ===== INSTANCE GENERATORS =====
    generator_max_vars: int = Field(
        default=12,
        description="Largest variable count accepted by the instance generators",
        gt=0,
    )
    generator_max_constraints: int = Field(
        default=12,
        description="Largest constraint count accepted by the instance generators",
        gt=0,
    )
    generator_max_bound: int = Field(
        default=4,
        description="Largest box bound X_i accepted by the instance generators",
        ge=0,
    )

    model_config = ConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Validate log level is valid."""
        valid_levels = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}
        if v.upper() not in valid_levels:
            raise ValueError(f"log_level must be one of {valid_levels}, got {v}")
        return v.upper()

    def get_log_path(self) -> Path:
        """Get log directory path, creating if needed."""
        log_path = Path(self.log_dir)
        log_path.mkdir(parents=True, exist_ok=True)
        return log_path


# Create singleton instance of settings
# This is imported and used throughout the application
settings = Settings()


def get_settings() -> Settings:
    """Get the global settings instance."""
    return settings


if __name__ == "__main__":
    # Show the effective settings when run directly
    print("=" * 60)
    print("Configuration Settings")
    print("=" * 60)
    print()
    for name, value in settings.model_dump().items():
        print(f"  {name}: {value}")
    print()
    print("=" * 60)
