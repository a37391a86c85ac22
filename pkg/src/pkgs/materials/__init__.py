from .hyperelasticEnergy import HyperelasticEnergy                  # noqa: F401
from .materialModel import MaterialModel                            # noqa: F401
from .mooneyRivlin import MooneyRivlin3D                            # noqa: F401
from .neoHookean import NeoHookean2D                                # noqa: F401
from .pqEnergy import PQEnergy2D, PQEnergy3D                        # noqa: F401
from .userEnergy import UserSuppliedEnergy                          # noqa: F401

__all__ = ['HyperelasticEnergy', 'MaterialModel', 'MooneyRivlin3D',
           'NeoHookean2D', 'PQEnergy2D', 'PQEnergy3D', 'UserSuppliedEnergy']
