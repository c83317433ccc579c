"""omvkit: mantissa-exponent tooling for values spanning many decades."""

from .core import (
    DEFAULT_PRECISION,
    HybridNotation,
    OmValue,
    compose,
    decompose,
    tick_label,
    to_hybrid,
    value_label,
)
from .data import Dataset, DataRow, gen_dataset, gen_datasets, sample_seven
from .design_space import (
    Channel,
    ConstraintVerdict,
    Mark,
    OtherType,
    VisConfig,
    canonical_set,
    canonicalize,
    enumerate_all,
    mirror,
    validate,
    viable_set,
)
from .errors import (
    ConfigSemanticError,
    ConfigSyntaxError,
    DomainError,
    DomainExceeded,
    EmptyDataset,
    InsufficientPairs,
    MissingTrials,
    NonPositiveValue,
    OmvkitError,
    OutOfRange,
    TooFewSamples,
    UnrenderableConfig,
)
from .grammar import config_filename, parse, serialize
from .render import DESIGNS, RenderSpec, StyleSpec, render
from .gallery import render_gallery, render_panel
from .scales import (
    ScaleSpec,
    TickSet,
    eplusm_forward,
    eplusm_inverse,
    facet_place,
    ssb_rows,
    ticks,
)
from .scoring import ErrorScore, aggregate, bootstrap_ci, score, score_response
from .simulate import NoiseModel, ResponseRecord, simulate
from .trials import TrialSpec, build_trials

__version__ = "0.1.0"
