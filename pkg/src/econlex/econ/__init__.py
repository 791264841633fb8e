from .decompose import Decomposition, delta_ep_decomposition
from .design import DesignMatrix, build_design
from .logit import ConvergenceError, PerfectSeparationWarning, logit_mle, predict_proba
from .ols import RankError, auto_bandwidth, ols_newey_west
from .results import FitResult, render_table
from .roc import AucComparison, RocResult, auc_compare, roc_auc

__all__ = [
    "AucComparison",
    "ConvergenceError",
    "Decomposition",
    "DesignMatrix",
    "FitResult",
    "PerfectSeparationWarning",
    "RankError",
    "RocResult",
    "auc_compare",
    "auto_bandwidth",
    "build_design",
    "delta_ep_decomposition",
    "logit_mle",
    "ols_newey_west",
    "predict_proba",
    "render_table",
    "roc_auc",
]
