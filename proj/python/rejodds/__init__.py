"""Rejection odds for experimental design and evidence reporting.

Thin wrapper over the C++ core: pre-experimental rejection ratios and odds,
Bayes factors and the p-value-only Bayes factor bound, frequentist-identity
verification, and optional-stopping simulation.
"""

try:
    from ._rejodds import *  # noqa: F401,F403  (wheel layout)
    from ._rejodds import __doc__ as _core_doc  # noqa: F401
except ImportError:  # in-tree build: extension sits on PYTHONPATH
    from _rejodds import *  # noqa: F401,F403

__version__ = "0.1.0"
