"""Exception classes shared across the package."""


class ConfigError(ValueError):
    """Configuration file or override is invalid; message names the field path."""


class SingularCovarianceError(ValueError):
    """Noise covariance is numerically singular and cannot be whitened."""


class DetectionFailureError(RuntimeError):
    """Linear system in the detector could not be solved."""
