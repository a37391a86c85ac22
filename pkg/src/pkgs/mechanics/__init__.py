from .crackEnergy import CrackEnergy, CrackTraction                     # noqa: F401
from .crackEnergy import GenericRelaxationSettings                     # noqa: F401
from .crackEnergy import RelaxationResult, findLocalMinima             # noqa: F401
from .smallStrain import ElasticityTensor, PositiveDefinitenessReport   # noqa: F401
from .smallStrain import checkPositiveDefinite                         # noqa: F401
from .smallStrain import rotateElasticityTensor, wdlin3d               # noqa: F401
from .smallStrain import wdlinAnisotropic2d, wdlinIsotropic2d          # noqa: F401
from .smallStrain import wdlinStress                                   # noqa: F401
from .splitting import SplitStress, SplittingRow, amorSplitStress      # noqa: F401
from .splitting import mieheSplitStress, splittingReport               # noqa: F401

__all__ = ['CrackEnergy', 'CrackTraction', 'ElasticityTensor',
           'GenericRelaxationSettings', 'PositiveDefinitenessReport',
           'RelaxationResult', 'SplitStress', 'SplittingRow',
           'amorSplitStress', 'checkPositiveDefinite', 'findLocalMinima',
           'mieheSplitStress', 'rotateElasticityTensor', 'splittingReport',
           'wdlin3d', 'wdlinAnisotropic2d', 'wdlinIsotropic2d',
           'wdlinStress']
