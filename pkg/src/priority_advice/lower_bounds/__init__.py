from .formulas import (
    TABLE1,
    GadgetParams,
    SpecError,
    advice_threshold,
    binary_entropy,
    bound_report_line,
    ratio_at_mistakes,
    ratio_bound,
    table1_report,
)
from .gadgets import GadgetSpec, instantiate_vc_gadget_pair, pair_universe
from .reduction import (
    GadgetVertexCoverAlgorithm,
    ReductionTrace,
    SGKHInstance,
    certify_reduction,
    guesser_tape,
    run_sgkh_reduction,
)
from .thorny import baseline_library, thorny_fool, thorny_solve
