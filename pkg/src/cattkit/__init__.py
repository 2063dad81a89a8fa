"""cattkit: a kernel for the type theory CaTT, the inductive category of
finite computads for weak omega-categories, and the translation between
them.

The package follows the four faces of a pasting diagram: syntax
(`syntax`, `gsett`, `pasting`, `catt`), combinatorics (`globular`,
`batanin`), computads (`computad`) and the functors relating them
(`translation`).  A small surface language and CLI live in `surface` and
`cli`.
"""

from . import batanin, catt, computad, globular, gsett, pasting, surface, translation
from .syntax import OBJ, Arr, Coh, Obj, Var

__all__ = [
    "OBJ",
    "Arr",
    "Coh",
    "Obj",
    "Var",
    "batanin",
    "catt",
    "computad",
    "globular",
    "gsett",
    "pasting",
    "surface",
    "translation",
]
