from .enumerators import Branch, BoundaryKind, DataKeys, EnergyFamily  # noqa: F401
from .enumerators import FrozenCrackMode, MeshGenerator                # noqa: F401
from .enumerators import ScenarioName, SeedKind, SplitMethod           # noqa: F401
from .errors import ConfigError, FractureError                        # noqa: F401
from .materialData import MaterialData                                # noqa: F401

__all__ = ['Branch', 'BoundaryKind', 'ConfigError', 'DataKeys',
           'EnergyFamily', 'FractureError', 'FrozenCrackMode',
           'MaterialData', 'MeshGenerator', 'ScenarioName', 'SeedKind',
           'SplitMethod']
