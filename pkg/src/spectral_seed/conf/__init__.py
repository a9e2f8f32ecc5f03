"""Settings for spectral-seed.

Defaults live in ``global_settings``. A project overrides them with upper-case
names in its own settings module:

    # settings.py
    EPSILON = 0.005
    PEAK_THRESHOLD = 0.15

    # anywhere
    from spectral_seed.conf import settings

    settings.EPSILON  # 0.005
    settings.GRID_CAP  # 1024, the library default

The module is named by ``SPECTRAL_SEED_SETTINGS_MODULE`` and defaults to
``settings`` on the import path. A missing module is not an error; a module
that exists but fails to import is.
"""

import importlib
import os
from types import ModuleType
from typing import Any

from spectral_seed.conf import global_settings
from spectral_seed.conf.run_config import RunConfig

SETTINGS_MODULE_ENV_VAR = "SPECTRAL_SEED_SETTINGS_MODULE"
DEFAULT_SETTINGS_MODULE = "settings"


def _upper_names(module: ModuleType) -> dict[str, Any]:
    """Upper-case attributes of a module."""
    return {name: getattr(module, name) for name in dir(module) if name.isupper()}


def _import_user_module(name: str) -> ModuleType | None:
    """Import the user's settings module, or None when it does not exist."""
    try:
        return importlib.import_module(name)
    except ModuleNotFoundError as e:
        if e.name == name:
            return None
        raise


class Settings:
    """Attribute container seeded with the library defaults."""

    def __init__(self) -> None:
        """Copy every default from global_settings."""
        self.update(_upper_names(global_settings))

    def update(self, values: dict[str, Any]) -> None:
        """Set several settings at once."""
        for name, value in values.items():
            setattr(self, name, value)


class LazySettings:
    """Proxy that builds the Settings on first access.

    Reads fall through to the wrapped Settings; the user module is imported
    only then, so tests can call configure() before anything is loaded.
    """

    def __init__(self) -> None:
        """Start unloaded."""
        self._wrapped: Settings | None = None

    def _load(self) -> Settings:
        """Build the settings from the defaults and the user's module."""
        loaded = Settings()
        module = _import_user_module(os.environ.get(SETTINGS_MODULE_ENV_VAR, DEFAULT_SETTINGS_MODULE))
        if module is not None:
            loaded.update(_upper_names(module))
        return loaded

    def _settings(self) -> Settings:
        if self._wrapped is None:
            self._wrapped = self._load()
        return self._wrapped

    def __getattr__(self, name: str) -> Any:  # noqa: ANN401
        """Return a setting, loading the settings on first use.

        Raises:
            AttributeError: If no such setting is defined.
        """
        try:
            return getattr(self._settings(), name)
        except AttributeError:
            msg = f"Unknown setting {name!r}"
            raise AttributeError(msg) from None

    def __setattr__(self, name: str, value: Any) -> None:  # noqa: ANN401
        """Change one setting."""
        if name == "_wrapped":
            self.__dict__["_wrapped"] = value
            return
        setattr(self._settings(), name, value)

    def configure(self, **options: Any) -> None:  # noqa: ANN401
        """Override settings in code, mainly from tests.

        When nothing has been loaded yet the user module is skipped, so the
        result only depends on the defaults and these options.

        Raises:
            ValueError: If an option name is not upper-case.
        """
        lower = sorted(name for name in options if not name.isupper())
        if lower:
            msg = f"Setting names must be upper-case, got {', '.join(lower)}"
            raise ValueError(msg)
        if self._wrapped is None:
            self._wrapped = Settings()
        self._wrapped.update(options)

    def is_configured(self) -> bool:
        """Whether the settings have been built."""
        return self._wrapped is not None


settings = LazySettings()

__all__ = ["SETTINGS_MODULE_ENV_VAR", "LazySettings", "RunConfig", "Settings", "global_settings", "settings"]
