"""curvelab: evolutoids, singular evolutoid sets, and extended fronts of
planar curves given by support functions or coefficient tables."""

from .curves import (
    CoefficientMap,
    GenericityReport,
    JetSample,
    ParamCurve,
    SupportCurve,
    check_genericity,
    curve_length,
    hedgehog_point,
    inflexion_points,
    oriented_area,
    param_jet,
    shoelace_area,
    support_jet,
)
from .errors import (
    BorderlineClassification,
    CurveLabError,
    DegenerateSigmaPointError,
    DegenerateSingularSetError,
    FlatError,
    IoError,
    NotClosedError,
    OnSigmaError,
    RegularityError,
    SpecError,
)
from .evolutoid import (
    AsymptoteLine,
    EvolutoidSingularity,
    EvolutoidSpec,
    area_identity,
    asymptote_lines,
    check_cor24,
    evolutoid_point,
    evolutoid_points,
    evolutoid_support,
    singular_params,
)
from .front import (
    FrontSample,
    SigmaCurve,
    SingularFrontPoint,
    TriangleMesh,
    classify_sigma,
    classify_sigma_point,
    extract_sigma,
    front_sample,
    mesh_front,
    projection_check,
    write_obj,
)
from .gaussbonnet import (
    GaussBonnetReport,
    gauss_bonnet_check,
    gaussian_curvature,
    geodesic_curvature_form,
    integrate_K_dA,
    integrate_ks_dtau,
    singular_curvature_form,
)
from .quadrature import QuadratureEstimate, adaptive_gauss_legendre
from .ses import (
    SesPoint,
    SesSingularity,
    model_cusp_ses,
    ses_inflexions,
    ses_point,
    ses_singularities,
)
from .specio import parse_angle, parse_curve_spec, serialize_curve_spec
from .trigpoly import TrigPoly

__version__ = "0.1.0"
