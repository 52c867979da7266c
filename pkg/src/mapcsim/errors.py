"""Exception types shared across the simulator."""


class SimulationError(Exception):
    """Base class for all simulator-specific errors."""


class ConfigError(SimulationError):
    """Invalid configuration value or malformed config file."""


class ScenarioError(SimulationError):
    """Malformed or inconsistent scenario document."""


class SchedulingError(SimulationError):
    """No valid schedule exists (e.g. a station is unreachable)."""


class ModelError(SimulationError):
    """Throughput model preconditions violated."""


class ExperimentError(SimulationError):
    """A batch experiment could not produce any results."""
