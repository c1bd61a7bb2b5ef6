"""Green ring calculator for the Drinfeld double of Sweedler's Hopf algebra.

Three coordinated models of the same ring:

* :mod:`d4green.green` -- labels for the indecomposable modules and the
  closed-form tensor decomposition table;
* :mod:`d4green.presentation` -- normal forms over generators and
  relations, with the isomorphism onto the label model;
* :mod:`d4green.replab` -- explicit rational matrix representations, the
  tensor/dual constructions and an independent decomposition oracle that
  re-derives every product from scratch.

:mod:`d4green.verify` cross-checks the models; :mod:`d4green.cli` exposes
everything on the command line.
"""

from .green import (
    ETA_INF,
    Eta,
    GreenElement,
    Label,
    LabelKind,
    band,
    case_name,
    composition_factors,
    dimension,
    dual,
    dual_label,
    eta,
    grothendieck_image,
    label_dimension,
    mul,
    mul_labels,
    omega,
    projective,
    simple_one,
    simple_two,
)
from .presentation import (
    GroupRingPair,
    PresElement,
    PresKind,
    PresMonomial,
    a_seq,
    f_poly,
    from_green,
    nf_mul,
    to_green,
)

__all__ = [
    "ETA_INF",
    "Eta",
    "GreenElement",
    "GroupRingPair",
    "Label",
    "LabelKind",
    "PresElement",
    "PresKind",
    "PresMonomial",
    "a_seq",
    "band",
    "case_name",
    "composition_factors",
    "dimension",
    "dual",
    "dual_label",
    "eta",
    "f_poly",
    "from_green",
    "grothendieck_image",
    "label_dimension",
    "mul",
    "mul_labels",
    "nf_mul",
    "omega",
    "projective",
    "simple_one",
    "simple_two",
    "to_green",
]

__version__ = "0.1.0"
