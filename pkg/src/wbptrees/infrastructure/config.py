import json
from dataclasses import dataclass, replace

from src.wbptrees.exceptions.CensusExceptions import ConfigurationError


class Infos:
    """
    Class containing information for the whole program.
    """
    config_json_file = "config.json"
    logs_folder_name = "logs"
    run_logs_filename = "wbptrees.log"

    PROJECT_NAME: str = "wbptrees"
    PACKAGE_NAME: str = "wbptrees"

    default_oracle_max_points = 16
    default_verify_max_weight = 8
    default_verify_max_part = 6
    default_closed_form_max_sum = 16
    default_max_labelings = 5040
    default_max_workers = 4
    log_levels = ("debug", "info", "warning", "error", "critical")


@dataclass(frozen=True)
class EngineSettings:
    """
    Runtime settings, read from config.json. CLI flags override them per run through `with_overrides`.
    """
    oracle_max_points: int = Infos.default_oracle_max_points
    verify_max_weight: int = Infos.default_verify_max_weight
    verify_max_part: int = Infos.default_verify_max_part
    closed_form_max_sum: int = Infos.default_closed_form_max_sum
    max_workers: int = Infos.default_max_workers
    log_level: str = "info"
    log_to_file: bool = True

    def __post_init__(self):
        for name in ("oracle_max_points", "verify_max_weight", "verify_max_part", "closed_form_max_sum",
                     "max_workers"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise ConfigurationError(f"'{name}' must be a positive integer, got {value!r}")
        if self.log_level not in Infos.log_levels:
            raise ConfigurationError(f"'log_level' must be one of {', '.join(Infos.log_levels)}, "
                                     f"got {self.log_level!r}")
        if not isinstance(self.log_to_file, bool):
            raise ConfigurationError(f"'log_to_file' must be true or false, got {self.log_to_file!r}")

    def with_overrides(self, **overrides) -> "EngineSettings":
        """
        :param overrides: Settings to replace. None values are ignored, so unset CLI flags can be passed as is.
        :return: A new EngineSettings object.
        """
        return replace(self, **{key: value for key, value in overrides.items() if value is not None})


def load_settings(config_path: str | None = None) -> EngineSettings:
    """
    Loads the settings from the config.json file of the project. A missing file gives the default settings.
    :param config_path: Optional explicit path to a json file.
    :return: The EngineSettings object.
    """
    if config_path is None:
        # Imported here, paths depends on Infos.
        from src.wbptrees.infrastructure.paths import ProjectPath
        config_path = ProjectPath.get_config_json_file()

    try:
        with open(config_path, "r", encoding="utf-8") as file:
            raw = json.load(file)
    except FileNotFoundError:
        return EngineSettings()
    except json.JSONDecodeError as e:
        raise ConfigurationError(f"Cannot read {config_path}: {e}")

    if not isinstance(raw, dict):
        raise ConfigurationError(f"{config_path} must contain a json object")

    known = EngineSettings.__dataclass_fields__.keys()
    unknown = set(raw) - set(known)
    if unknown:
        raise ConfigurationError(f"Unknown settings in {config_path}: {', '.join(sorted(unknown))}")

    return EngineSettings(**raw)
