from .crackFrame import CrackFrame, TriangularFactor                    # noqa: F401
from .crackFrame import frameFromNormal, normalStretch, qrInFrame       # noqa: F401
from .crackFrame import validateDeformationGradient                     # noqa: F401

__all__ = ['CrackFrame', 'TriangularFactor', 'frameFromNormal',
           'normalStretch', 'qrInFrame', 'validateDeformationGradient']
