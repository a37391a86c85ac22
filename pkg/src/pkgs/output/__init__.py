from .csvWriter import formatCell, writeCsv                            # noqa: F401
from .vtkWriter import VtkFields, writeVtk                             # noqa: F401

__all__ = ['VtkFields', 'formatCell', 'writeCsv', 'writeVtk']
