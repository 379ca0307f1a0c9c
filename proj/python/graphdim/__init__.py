try:
    from ._graphdim import (
        EvalError,
        ExpressionParseError,
        InfeasibleError,
        decompose,
        estimate,
        evaluate,
        sample,
        suite_names,
        verify,
    )
except ImportError:  # extension built standalone (e.g. straight CMake build)
    from _graphdim import (
        EvalError,
        ExpressionParseError,
        InfeasibleError,
        decompose,
        estimate,
        evaluate,
        sample,
        suite_names,
        verify,
    )

__all__ = [
    "EvalError",
    "ExpressionParseError",
    "InfeasibleError",
    "decompose",
    "estimate",
    "evaluate",
    "sample",
    "suite_names",
    "verify",
]
