"""Crowd-knowledge code search.

Mines keyword-API associations from a programming Q&A corpus, reformulates
free-text queries into ranked API classes, and retrieves method-level code
snippets from a code corpus.
"""

__version__ = "0.1.0"

from rack.kernels import KERNEL_BACKEND

__all__ = ["KERNEL_BACKEND", "__version__"]
