"""
Configuration loader for the tropical workbench.
Loads settings from .env and configs/{env}.yaml; environment variables win.
"""
import os
import sys
import yaml
from pathlib import Path
from dotenv import load_dotenv
from typing import Dict, Any, Optional


# Load .env file
load_dotenv()


def _int_or_none(value: Optional[str]) -> Optional[int]:
    if value is None or value.strip() == "":
        return None
    return int(value)


def _flag_or_none(value: Optional[str]) -> Optional[bool]:
    if value is None or value.strip() == "":
        return None
    return value.strip().lower() in ("1", "true", "yes", "on")


class Config:
    """Configuration manager for the workbench."""

    def __init__(self, env: str = "dev"):
        """
        Initialize configuration.

        Args:
            env: Environment name (dev, prod)
        """
        self.env = env
        self._load_yaml_config()
        self._load_env_vars()

    def _load_yaml_config(self):
        """Load configuration from YAML file."""
        config_path = Path(__file__).parent.parent / "configs" / f"{self.env}.yaml"

        if not config_path.exists():
            print(f"Warning: Config file {config_path} not found. Using defaults.", file=sys.stderr)
            self.yaml_config = {}
            return

        with open(config_path, "r", encoding="utf-8") as f:
            self.yaml_config = yaml.safe_load(f) or {}

    def _load_env_vars(self):
        """Load overrides from environment variables; unset variables are skipped."""
        overrides = {
            "runtime.threads": _int_or_none(os.getenv("TROPWS_THREADS")),
            "logging.log_dir": os.getenv("TROPWS_LOG_DIR") or None,
            "logging.enabled": _flag_or_none(os.getenv("TROPWS_LOG_ENABLED")),
            "graph.verbose": _flag_or_none(os.getenv("TROPWS_VERBOSE")),
            "lambda.budget": _int_or_none(os.getenv("TROPWS_LAMBDA_BUDGET")),
            "lambda.search_budget": _int_or_none(os.getenv("TROPWS_LAMBDA_SEARCH_BUDGET")),
            "gfan.max_cones": _int_or_none(os.getenv("TROPWS_GFAN_BUDGET")),
        }
        self.env_config = {k: v for k, v in overrides.items() if v is not None}

    def get(self, key: str, default: Any = None) -> Any:
        """
        Get configuration value by key.

        Args:
            key: Configuration key (supports dot notation, e.g., 'gfan.max_cones')
            default: Default value if key not found

        Returns:
            Configuration value
        """
        # Try env vars first
        if key in self.env_config:
            return self.env_config[key]

        # Try YAML config with dot notation
        keys = key.split(".")
        value = self.yaml_config
        for k in keys:
            if isinstance(value, dict):
                value = value.get(k)
            else:
                return default
        return value if value is not None else default

    def threads(self) -> int:
        return max(1, int(self.get("runtime.threads", 1)))

    def get_all(self) -> Dict[str, Any]:
        """Get all configuration as a dictionary."""
        return {
            "env": self.env,
            "yaml_config": self.yaml_config,
            "env_config": self.env_config
        }


# Global config instance
config = Config(os.getenv("TROPWS_ENV", "dev"))


if __name__ == "__main__":
    """Show the effective configuration."""
    import json

    print("=== tropws configuration ===\n")
    print(f"Environment: {config.env}")
    print(f"Threads: {config.threads()}")
    print(f"Gfan max cones: {config.get('gfan.max_cones')}")
    print(f"Lambda budget: {config.get('lambda.budget')} (search {config.get('lambda.search_budget')})")
    print(f"Log dir: {config.get('logging.log_dir')}")
    print("\n=== Full configuration ===")
    print(json.dumps(config.get_all(), indent=2))
