"""Global constants and default configurations for diamgraph."""
import math

# Global paths will be initialized by core.config
DIAMGRAPH_HOME = None
DIAMGRAPH_CONFIG_FILE = None

THREADS_ENV_VAR = "DIAMGRAPH_THREADS"

# "At diameter" means dist >= diam * (1 - EPSILON)
DEFAULT_EPSILON = 1e-9
MAX_EPSILON = 1e-3

# Relative tolerance for points constrained to a sphere
SPHERE_TOLERANCE = 1e-9
# Hemisphere / cap membership slack
HEMISPHERE_TOLERANCE = 1e-12
CAP_TOLERANCE = 1e-12
# Residual threshold (relative) for non-negative cone combinations
CONE_TOLERANCE = 1e-8
# Angular tolerance for coincident directions and polygon contacts
ANGLE_TOLERANCE = 1e-9
# Slack for on-arc tests of unit vectors
ARC_TOLERANCE = 1e-12

# Separation kept between non-diameter chords and the diameter in generators
CHORD_MARGIN = 1e-3

# Exhaustive search caps
CHROMATIC_CAP = 64
ODD_CYCLE_CAP = 16
SEARCH_CAP = 64
ORACLE_CAP = 7

HULL_SAMPLES = 100

JUNG_LIMIT = 1 / math.sqrt(2)
# The diametral-sphere construction needs r > 1/sqrt(2) strictly
THEOREM1_RADIUS = JUNG_LIMIT * (1 + 1e-9)

# Default configuration
DEFAULT_CONFIG = {
    "epsilon": DEFAULT_EPSILON,
    "seed": 0,
    "threads": None,
    "chromatic_cap": CHROMATIC_CAP,
    "odd_cycle_cap": ODD_CYCLE_CAP,
    "hull_samples": HULL_SAMPLES,
    "anneal_steps": 20000,
}

# Stable CLI exit codes
EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_PRECONDITION = 3
