"""Error categories the CLI maps to exit codes."""


class InputError(Exception):
    """A file is missing, unparsable, or inconsistent with the declared geometry."""


class ConfigError(Exception):
    """The requested evaluation is invalid before any computation starts."""
