"""Exact segment combinatorics and Jacquet-module calculus.

The heavy lifting lives in the compiled extension ``genera._genera``; this
package re-exports its surface.
"""

from ._genera import (  # noqa: F401
    GeneraError,
    Workspace,
    linked,
    m_star_terms,
    selftest,
    standard_workspace,
)

__all__ = [
    "GeneraError",
    "Workspace",
    "linked",
    "m_star_terms",
    "selftest",
    "standard_workspace",
]
