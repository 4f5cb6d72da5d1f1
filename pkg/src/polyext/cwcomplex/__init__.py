"""CW posets, inclusion-exclusion complexes and their stalk-wise exactness."""
from .poset import CWPoset, incidence_signs, boolean_poset, chain_pair, face_lattice, fan_face_poset
from .complex import IEComplex, check_exactness_tstalks
from .constructions import (
    subdivision_koszul, brianchon_gram, truncated_bg, tensor_translate, truncate_complex,
    two_chain, IndicatorExpr, alternating_indicator, derksen_fink_decompose, tangent_cone,
    covers_by_sampling,
)
