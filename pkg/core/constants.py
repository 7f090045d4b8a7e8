import os

# --- Logging ---
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
LOG_FILE = os.getenv("GADGET_LOG_FILE")  # unset -> stderr only

# --- Graph Signature ---
EDGE = "E"

# --- Verification Budgets ---
DEFAULT_SEED = int(os.getenv("GADGET_SEED", "0"))
DEFAULT_MAX_R = int(os.getenv("GADGET_MAX_R", "1"))
# unset -> every suite runs at its own bound / sample count below
DEFAULT_MAX_VERTICES = int(os.environ["GADGET_MAX_VERTICES"]) if os.getenv("GADGET_MAX_VERTICES") else None
RANDOM_SAMPLES = int(os.environ["GADGET_RANDOM_SAMPLES"]) if os.getenv("GADGET_RANDOM_SAMPLES") else None

HOM_ORACLE_PAIRS = 200
PP_GRID_VARIABLES = 4
PP_GRID_CONJUNCTS = 3
PP_RANDOM_FORMULAS = 500
WELLFOUNDED_RANDOM_GRAPHS = 1000
FULLEMBED_PAIR_VERTICES = 3   # pairs with a larger graph are sampled
FULLEMBED_SAMPLED_PAIRS = 2000

# --- Miner ---
MINER_MAX_WITNESSES = int(os.getenv("GADGET_MINER_MAX_WITNESSES", "400"))
MIN_USABLE_INDICES = 3   # below this the canonical types degenerate
