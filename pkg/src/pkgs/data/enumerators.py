from enum import Enum


class EnergyFamily(Enum):
    NEO_HOOKEAN_2D = 'NeoHookean2D'
    MOONEY_RIVLIN_3D = 'MooneyRivlin3D'
    PQ_ENERGY_2D = 'PQEnergy2D'
    PQ_ENERGY_3D = 'PQEnergy3D'
    USER_SUPPLIED = 'UserSupplied'


class Branch(Enum):
    OPEN = 'open'
    CLOSED = 'closed'


class SplitMethod(Enum):
    PRINCIPAL_STRAIN = 'PrincipalStrain'
    HYDRO_DEVIATORIC = 'HydroDeviatoric'


class BoundaryKind(Enum):
    DIRICHLET_AFFINE = 'dirichlet_affine'
    DIRICHLET_ZERO = 'dirichlet_zero'
    TRACTION_FREE = 'traction_free'


class ScenarioName(Enum):
    FROZEN_CRACK = 'frozen-crack'
    CYCLIC_SHEAR = 'cyclic-shear'
    CAVITY = 'cavity'
    LANDSCAPE = 'landscape'
    SPLITTING_DEMO = 'splitting-demo'


class FrozenCrackMode(Enum):
    OPENING = 'a'
    SLIDING = 'b'
    TANGENTIAL_COMPRESSION = 'c'
    TANGENTIAL_EXTENSION = 'd'
    NORMAL_COMPRESSION = 'e'
    RELAXED_EXTENSION = 'd-relaxed'


class MeshGenerator(Enum):
    RECTANGLE = 'rectangle'
    SQUARE_WITH_HOLE = 'square_with_hole'


class SeedKind(Enum):
    SEGMENT = 'segment'
    ARC = 'arc'
    DISK = 'disk'


class DataKeys:
    # Material presets
    MATERIALS = 'materials'
    NAME = 'name'
    FAMILY = 'family'
    PARAMETERS = 'parameters'
    GC = 'gc'
    UNITS = 'units'
    STRESS_UNIT = 'stress'
    PRESET = 'preset'
    # Scenario configuration
    SCENARIO = 'scenario'
    MATERIAL = 'material'
    PARAMS = 'params'
    EPSILON = 'epsilon'
    ETA = 'eta'
    D_C = 'd_c'
    STAGGER_TOL = 'stagger_tol'
    MAX_STAGGER = 'max_stagger'
    SPECIMEN_LENGTH = 'specimen_length'
    MESH = 'mesh'
    MESH_PATH = 'path'
    GENERATOR = 'generator'
    WIDTH = 'width'
    HEIGHT = 'height'
    NX = 'nx'
    NY = 'ny'
    ORIGIN = 'origin'
    SIZE = 'size'
    N_THETA = 'n_theta'
    N_RADIAL = 'n_radial'
    GRADING = 'grading'
    BOUNDARY_CONDITIONS = 'boundary_conditions'
    TAG = 'tag'
    KIND = 'kind'
    F0 = 'F0'
    MASK = 'mask'
    LOAD_PROGRAM = 'load_program'
    STEP = 'step'
    LOAD = 'load'
    PHASE = 'phase'
    LOWER_BOUND = 'lower_bound'
    SEED_CRACKS = 'seed_cracks'
    START = 'start'
    END = 'end'
    CENTRE = 'centre'
    RADIUS = 'radius'
    START_ANGLE = 'start_angle'
    END_ANGLE = 'end_angle'
    HALF_WIDTH = 'half_width'
    DIRECTION = 'direction'
    OUTPUT_DIR = 'output_dir'
    SEED = 'seed'
    MODE = 'mode'
    AMPLITUDE = 'amplitude'
    SAMPLES = 'samples'
    DEFORMATION = 'deformation'
    SOLVER = 'solver'
    MAX_ITERATIONS = 'max_iterations'
    GRADIENT_TOLERANCE = 'gradient_tolerance'
    HISTORY = 'history'
    MAX_BACKTRACKS = 'max_backtracks'
    ARMIJO = 'armijo'
    INITIAL_STEP = 'initial_step'
    BASELINE = 'baseline'
    SHRINK_AFTER = 'shrink_after'
    MIN_INCREMENT = 'min_increment'
    CHECKPOINT = 'checkpoint'
    SPLITTING = 'splitting'
    LAMBDA = 'lambda'
    MU = 'mu'
    SIGMA0 = 'sigma0'
    TAU = 'tau'
