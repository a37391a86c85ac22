from .boundaryConditions import BoundaryCondition, DirichletData       # noqa: F401
from .boundaryConditions import dirichletData                         # noqa: F401
from .checkpoint import loadCheckpoint, saveCheckpoint                # noqa: F401
from .crackSeeds import CrackSeed, applySeeds                         # noqa: F401
from .lbfgs import MinimizationReport, ProjectedLbfgs                 # noqa: F401
from .mesh import Mesh, readMesh, writeMesh                           # noqa: F401
from .meshGenerators import rectangleMesh, squareWithHoleMesh         # noqa: F401
from .phaseFieldEnergy import EnergyEvaluation, PhaseFieldEnergy      # noqa: F401
from .phaseFieldEnergy import totalEnergy                             # noqa: F401
from .phaseFieldParams import PhaseFieldParams, SolverSettings        # noqa: F401
from .simulationState import SimulationState                          # noqa: F401
from .staggeredSolver import StaggerReport, applyIrreversibility      # noqa: F401
from .staggeredSolver import solveDamage, solveDisplacement           # noqa: F401
from .staggeredSolver import staggeredStep                            # noqa: F401

__all__ = ['BoundaryCondition', 'CrackSeed', 'DirichletData',
           'EnergyEvaluation', 'MinimizationReport', 'Mesh',
           'PhaseFieldEnergy', 'PhaseFieldParams', 'ProjectedLbfgs',
           'SimulationState', 'SolverSettings', 'StaggerReport',
           'applyIrreversibility', 'applySeeds', 'dirichletData',
           'loadCheckpoint', 'readMesh', 'rectangleMesh', 'saveCheckpoint',
           'solveDamage', 'solveDisplacement', 'squareWithHoleMesh',
           'staggeredStep', 'totalEnergy', 'writeMesh']
