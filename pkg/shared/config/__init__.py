"""Settings: keyword arguments > SRSQ_* environment > settings.yaml > defaults."""

from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, List

import yaml
from dotenv import load_dotenv
from pydantic import BaseSettings, Field, validator

load_dotenv()

SETTINGS_YAML = Path(__file__).with_name("settings.yaml")

# condition (3) builds 2^n x 2^n pair tables
CONDITION3_MAX_N = 12


def _yaml_source(settings: BaseSettings) -> Dict[str, Any]:
    if not SETTINGS_YAML.exists():
        return {}
    raw = yaml.safe_load(SETTINGS_YAML.read_text()) or {}
    scan = raw.get("scan", {})
    out: Dict[str, Any] = {
        "scan_budget": scan.get("budget"),
        "jobs": scan.get("jobs"),
        "fields": raw.get("fields"),
        "condition3_max_n": raw.get("criteria", {}).get("condition3_max_n"),
        "counterexample_dir": raw.get("explore", {}).get("counterexample_dir"),
        "celery_broker_url": raw.get("worker", {}).get("broker_url"),
        "celery_result_backend": raw.get("worker", {}).get("result_backend"),
        "log_level": raw.get("log_level"),
    }
    return {k: v for k, v in out.items() if v is not None}


class Settings(BaseSettings):
    scan_budget: int = Field(1_000_000, ge=1, env="SRSQ_BUDGET")
    jobs: int = Field(1, ge=1)
    fields: List[str] = ["Q", "F2"]
    condition3_max_n: int = Field(9, ge=1, le=CONDITION3_MAX_N)
    counterexample_dir: str = "counterexamples"
    celery_broker_url: str = "memory://"
    celery_result_backend: str = "cache+memory://"
    log_level: str = "INFO"

    @validator("fields", pre=True)
    def _split_fields(cls, v):
        if isinstance(v, str):
            return [f.strip() for f in v.split(",") if f.strip()]
        return v

    class Config:
        env_prefix = "SRSQ_"

        @classmethod
        def parse_env_var(cls, field_name: str, raw_val: str):
            if field_name == "fields":
                return [f.strip() for f in raw_val.split(",") if f.strip()]
            return cls.json_loads(raw_val)

        @classmethod
        def customise_sources(cls, init_settings, env_settings, file_secret_settings):
            return init_settings, env_settings, _yaml_source, file_secret_settings


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings()
