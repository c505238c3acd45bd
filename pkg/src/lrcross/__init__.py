"""Exact construction and verification of L-R-crossed products U ⊗ H."""

from .algebra import (
    Algebra,
    InvalidAlgebraError,
    NotAGroupError,
    builtin_algebra,
    group_algebra,
    multiply,
    tensor_product_algebra,
    validate_algebra,
)
from .constructions import (
    INSTANCE_NAMES,
    VALID_INSTANCES,
    BimoduleAlgebraData,
    IteratedData,
    LRSmashData,
    LRTwistData,
    MirrorBrzezinskiData,
    QuasiBialgebraData,
    builtin_instance,
    builtin_source,
    direct_multiply,
    direct_product_algebra,
    dual_bimodule_algebra,
    from_iterated,
    from_lr_smash,
    from_lr_twisted,
    from_mirror_brzezinski,
    from_ordinary_tensor,
    to_datum,
)
from .crossed import (
    AXIOM_LABELS,
    AxiomFailure,
    AxiomReport,
    CrossedDatum,
    PointedSpace,
    build_crossed_product,
    check_all,
    check_axiom,
    check_reduced_products,
    crossed_multiply,
)
from .io import Document, DocumentError, parse_document, serialize_document
from .scalars import QQ, FieldSpec, Scalar, format_scalar, parse_scalar, scalar_arith
from .tensor import Tensor, contract, tensor_product

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
