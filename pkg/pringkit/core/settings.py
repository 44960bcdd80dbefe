#!/usr/bin/env python3
"""
Settings for pringkit: size guards, sweep partitioning and the random seed.
Handles config directory resolution, settings file validation and environment overrides.
"""

import json
import os
from dataclasses import asdict, dataclass, replace
from pathlib import Path
from typing import Any, Dict, Optional

from jsonschema import ValidationError, validate as jsonValidate

from pringkit.core.errors import InvalidParameterError, SizeGuardError
from pringkit.core.logging import printVerbose
from pringkit.core.schemas import settingsSchema

settingsFileName = "settings.json"

# Environment variable → settings field
environmentOverrides = {
    "PRINGKIT_SIZE_GUARD": "sizeGuard",
    "PRINGKIT_ORACLE_GUARD": "oracleGuard",
    "PRINGKIT_WORKERS": "workers",
}


@dataclass(frozen=True)
class Settings:
    """Resolved pringkit settings."""
    # Largest ring that may be materialized element by element
    sizeGuard: int = 4096

    # Largest ring handed to the ideal-lattice, McCoy and vNr oracles
    oracleGuard: int = 256

    # Partitions for exhaustive sweeps
    workers: int = 1

    randomSeed: int = 20240611


activeSettings: Settings = Settings()


def getSettings() -> Settings:
    """Get the active settings."""
    return activeSettings


def setSettings(settings: Settings) -> None:
    """Replace the active settings."""
    global activeSettings
    activeSettings = settings


def getProjectRoot() -> Path:
    """
    Get the pringkit project root directory.
    Works from anywhere in the project by looking for ringtool.py.
    """
    current = Path(__file__).resolve()
    for parent in current.parents:
        if (parent / "ringtool.py").exists() and (parent / "pringkit").exists():
            return parent
    return Path(__file__).resolve().parent.parent.parent


def getConfigDirectory(configDir: Optional[str] = None) -> Path:
    """
    Get the configuration directory path.

    Priority:
        1. configDir argument (command-line --configDir)
        2. PRINGKIT_CONFIG_DIR environment variable
        3. Default: projectRoot/configs
    """
    if configDir:
        return Path(configDir)
    envConfigDir = os.environ.get("PRINGKIT_CONFIG_DIR")
    if envConfigDir:
        return Path(envConfigDir)
    return getProjectRoot() / "configs"


def readSettingsFile(path: Path) -> Dict[str, Any]:
    """
    Read and validate a settings file.

    Returns:
        The validated mapping, or an empty mapping if the file does not exist

    Raises:
        InvalidParameterError: If the file is not valid JSON or violates the schema
    """
    if not path.exists():
        return {}
    try:
        with open(path, 'r', encoding='utf-8') as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise InvalidParameterError(f"Invalid JSON in settings file {path}: {e}") from e
    try:
        jsonValidate(instance=data, schema=settingsSchema)
    except ValidationError as e:
        raise InvalidParameterError(f"Settings file {path} failed validation: {e.message}") from e
    return data


def loadSettings(configDir: Optional[str] = None, overrides: Optional[Dict[str, Optional[int]]] = None) -> Settings:
    """
    Resolve settings from defaults, the settings file, the environment and explicit overrides.

    Args:
        configDir: Optional configuration directory (from --configDir)
        overrides: Field values from command-line flags; None entries are ignored

    Returns:
        The resolved Settings (not activated; call setSettings)
    """
    values = asdict(Settings())

    settingsPath = getConfigDirectory(configDir) / settingsFileName
    values.update(readSettingsFile(settingsPath))

    for variable, fieldName in environmentOverrides.items():
        raw = os.environ.get(variable)
        if raw is None:
            continue
        try:
            values[fieldName] = int(raw)
        except ValueError as e:
            raise InvalidParameterError(f"{variable} must be an integer, got '{raw}'") from e

    for fieldName, value in (overrides or {}).items():
        if value is not None:
            values[fieldName] = value

    try:
        jsonValidate(instance=values, schema=settingsSchema)
    except ValidationError as e:
        raise InvalidParameterError(f"Invalid settings: {e.message}") from e

    settings = replace(Settings(), **values)
    printVerbose(f"Settings: {settings}")
    return settings


def requireWithinGuard(order: int, cap: Optional[int] = None, what: str = "ring") -> None:
    """
    Reject materializing a structure of the given order above the size guard.

    Raises:
        SizeGuardError: If order exceeds cap (defaults to the active sizeGuard)
    """
    if cap is None:
        cap = activeSettings.sizeGuard
    if order > cap:
        raise SizeGuardError(order, cap, what)


def requireWithinOracleGuard(order: int, cap: Optional[int] = None, what: str = "ring") -> None:
    """Same as requireWithinGuard, against the oracle guard."""
    requireWithinGuard(order, activeSettings.oracleGuard if cap is None else cap, what)


__all__ = [
    "Settings",
    "getSettings",
    "setSettings",
    "getProjectRoot",
    "getConfigDirectory",
    "readSettingsFile",
    "loadSettings",
    "requireWithinGuard",
    "requireWithinOracleGuard",
]
