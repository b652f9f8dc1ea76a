from .settings import EnumerationConfig, NewtonPolyConfig, NondegeneracyConfig, OutputConfig

__all__ = ["EnumerationConfig", "NewtonPolyConfig", "NondegeneracyConfig", "OutputConfig"]
