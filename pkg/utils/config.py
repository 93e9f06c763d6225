"""
Configuration
Valores por defecto, fichero YAML opcional y variables de entorno

Orden de resolución (gana el último): defaults -> hyperminor.yaml (o la
ruta de HYPERMINOR_CONFIG) -> variables HYPERMINOR_* -> flags de la CLI.
"""

import os
from dataclasses import dataclass, fields, replace
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Optional, Union

import yaml
from dotenv import load_dotenv

from .errors import ConfigError, ValidationError
from .validation import parse_rational

DEFAULT_CONFIG_FILE = "hyperminor.yaml"

ENV_KEYS = {
    "HYPERMINOR_SEED": "seed",
    "HYPERMINOR_BETA": "beta",
    "HYPERMINOR_OUTPUT": "output",
    "HYPERMINOR_LOG_LEVEL": "log_level",
}

OUTPUT_MODES = ("plain", "json")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


@dataclass(frozen=True)
class HyperminorConfig:
    """Configuración efectiva"""
    seed: int = 20240601
    beta: str = "9/50"
    output: str = "plain"
    log_level: str = "WARNING"
    expansion_limit: int = 28
    certificate_max_vertices: int = 6
    certificate_max_d: int = 4
    cubic_max_resamples: int = 1000

    @property
    def beta_fraction(self) -> Fraction:
        return parse_rational(self.beta)

    def merged(self, values: Dict[str, Any]) -> "HyperminorConfig":
        """Copia con los valores dados (ignora los None), validada"""
        known = {f.name: f.type for f in fields(self)}
        updates = {}
        for key, value in values.items():
            if value is None:
                continue
            if key not in known:
                raise ConfigError(f"Clave de configuración desconocida: {key!r}")
            updates[key] = _coerce(key, value, getattr(self, key))
        return replace(self, **updates)._validated()

    def _validated(self) -> "HyperminorConfig":
        try:
            beta = parse_rational(self.beta)
        except ValidationError as e:
            raise ConfigError(str(e))
        if beta < 0:
            raise ConfigError(f"beta no puede ser negativo: {self.beta}")
        if self.output not in OUTPUT_MODES:
            raise ConfigError(f"output debe ser uno de {OUTPUT_MODES}: {self.output!r}")
        if self.log_level not in LOG_LEVELS:
            raise ConfigError(f"log_level debe ser uno de {LOG_LEVELS}: {self.log_level!r}")
        for name in ("expansion_limit", "certificate_max_vertices",
                     "certificate_max_d", "cubic_max_resamples"):
            if getattr(self, name) < 1:
                raise ConfigError(f"{name} debe ser positivo")
        return self


def _coerce(key: str, value: Any, current: Any) -> Any:
    if isinstance(current, int):
        try:
            return int(str(value).strip())
        except ValueError:
            raise ConfigError(f"{key} debe ser entero: {value!r}")
    text = str(value).strip()
    return text.upper() if key == "log_level" else text.lower() if key == "output" else text


def _read_yaml(path: Path) -> Dict[str, Any]:
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}
    except yaml.YAMLError as e:
        raise ConfigError(f"YAML inválido en {path}: {e}")
    if not isinstance(data, dict):
        raise ConfigError(f"{path}: se esperaba un mapa clave: valor")
    return data


def load_config(path: Optional[Union[str, Path]] = None) -> HyperminorConfig:
    """
    Resuelve la configuración

    Args:
        path: fichero YAML explícito; si falta se usa HYPERMINOR_CONFIG o
              hyperminor.yaml si existe

    Raises:
        ConfigError si algún valor es inválido o el fichero explícito no existe
    """
    load_dotenv()
    config = HyperminorConfig()

    explicit = path is not None or "HYPERMINOR_CONFIG" in os.environ
    yaml_path = Path(path or os.environ.get("HYPERMINOR_CONFIG", DEFAULT_CONFIG_FILE))
    if yaml_path.exists():
        config = config.merged(_read_yaml(yaml_path))
    elif explicit:
        raise ConfigError(f"No existe el fichero de configuración {yaml_path}")

    env_values = {field_name: os.environ.get(var) for var, field_name in ENV_KEYS.items()}
    return config.merged(env_values)


_config: Optional[HyperminorConfig] = None


def get_config() -> HyperminorConfig:
    """Configuración cacheada del proceso"""
    global _config
    if _config is None:
        _config = load_config()
    return _config


def reset_config() -> None:
    global _config
    _config = None


__all__ = ['HyperminorConfig', 'load_config', 'get_config', 'reset_config']
