"""Universal link invariants over a Laurent ring, with ADO and coloured Jones specializations."""

from .braid import BraidWord, LinkData, link_data
from .laurent import LaurentPoly, const, monomial, var
from .specialize import ado_polynomial, jones_polynomial, psi_ado, psi_jones, psi_universal
from .unify import eq_in_quotient, habiro_reduce, universal_sequence
from .verma import a_gamma, j_gamma

__version__ = "0.1.0"

__all__ = [
    "BraidWord", "LinkData", "LaurentPoly", "a_gamma", "ado_polynomial", "const",
    "eq_in_quotient", "habiro_reduce", "j_gamma", "jones_polynomial", "link_data",
    "monomial", "psi_ado", "psi_jones", "psi_universal", "universal_sequence", "var",
]
