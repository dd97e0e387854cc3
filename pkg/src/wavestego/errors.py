"""Exception types shared across the package.

The CLI maps these onto stable exit codes, so new error conditions should
reuse one of the classes below rather than raising bare builtins.
"""


class WavestegoError(Exception):
    """Base class for all package errors."""


class UsageError(WavestegoError):
    """Bad arguments, configs, or manifests supplied by the caller. Exit code 1."""


class AudioIOError(WavestegoError):
    """Unreadable, empty, or unsupported audio files. Exit code 2."""


class ShapeError(WavestegoError):
    """Length/shape preconditions violated (mismatched or non-divisible signals). Exit code 3."""


class ModelError(WavestegoError):
    """Model-level failures: bad checkpoints, incompatible parameters. Exit code 3."""


class FlowDivergenceError(ModelError):
    """Non-finite values inside the invertible network (diverged parameters)."""


class ExternalToolError(WavestegoError):
    """External codec or scoring tool missing or failed. Exit code 4."""
