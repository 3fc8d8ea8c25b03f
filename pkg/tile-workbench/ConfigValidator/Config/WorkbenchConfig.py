from pathlib import Path
from os.path import dirname, realpath


class WorkbenchConfig:
    ROOT_DIR = Path(dirname(realpath(__file__)))

    # ================================ USER SPECIFIC CONFIG ================================
    """The path in which JSON reports (verify, audit, bit provenance) are written when `--report` is given.
    (Path does not need to exist - it will be created if necessary.)"""
    results_output_path:        Path            = Path.cwd() / 'reports'

    """Upper bound on `maxSteps` for any single simulation run. Requests above it raise StepBudgetOverflowError.
    Overridden per invocation with `--max-steps-cap`."""
    max_steps_hard_cap:         int             = 50_000_000

    """Steps `simulate` allows when `--steps` is not given."""
    default_max_steps:          int             = 1_000_000

    """Upper bound on the number of strength-free systems `diag bits` will simulate.
    Overridden per invocation with `--universe-cap`."""
    universe_hard_cap:          int             = 200_000

    """Trials used by `verify` when `--trials` is not given (1 PaperOrder + the rest UniformRandom)."""
    default_trials:             int             = 20

    """Seed of the generator that derives the per-trial seeds of UniformRandom verification trials."""
    default_rng_seed:           int             = 0

    """Exhaustive exploration replaces sampling when the target area and tile-set size are both at or below these."""
    exhaustive_max_area:        int             = 64
    exhaustive_max_types:       int             = 16

    """Limits handed to the exhaustive explorer when it is used by `verify`."""
    exhaustive_max_assemblies:  int             = 200_000

    """Worker processes for independent random trials. 0 means one per physical core (psutil), 1 runs inline."""
    worker_count:               int             = 1

    """Re-check every compiled blueprint for attachment uniqueness before emitting the tile set."""
    certify_blueprints:         bool            = True

    """Constants (coefficient, additive term) of the tile-type caps each compiler claims.
    grid-repeat uses (c, c2) in c*n^2/log n + c2*log(nm); pn-lift uses c*(|b| + log m) + c2;
    the others use c*log-term + additive term."""
    budget_constants:           dict            = {
        'single-pixel': (16, 80),
        'multi-pixel':  (24, 96),
        'stripes':      (16, 128),
        'square':       (8, 64),
        'grid-repeat':  (160, 32),
        'pn-lift':      (8, 128),
    }
