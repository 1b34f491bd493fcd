"""Graph polynomials of ribbon graphs, relative plane graphs and virtual links.

Exact computation of the doubly weighted Bollobas-Riordan polynomial, the
relative Tutte polynomial, planar duality, the two conversions between
ribbon graphs and relative plane graphs, and the Kauffman bracket / Jones
polynomial of virtual link diagrams, together with an executable suite of
exact identity checks relating all of them.
"""

from .errors import (
    GenusError,
    MalformedCode,
    MalformedDiagram,
    MalformedPresentation,
    MissingOrientation,
    NonMonomialNegativePower,
    ParseError,
    RgpolyError,
    SizeLimit,
)
from .poly import Polynomial, monomial, parse, swap_vars, var
from .ribbon import (
    ArrowPresentation,
    Edge,
    RibbonGraph,
    arrow_presentation,
    bollobas_riordan,
    boundary_components,
    components,
    from_arrow_presentation,
    make_edge,
    nullity,
)
from .planemap import (
    ContractionResult,
    MapEdge,
    PlaneMap,
    RelPlaneGraph,
    contract,
    contract_all,
    delete,
    dual,
    faces,
    medial_circles,
    psi,
    relative_tutte,
)
from .convert import (
    ConversionCertificate,
    link_to_tait,
    plane_to_ribbon,
    ribbon_to_plane,
)
from .links import (
    VirtualLinkDiagram,
    jones,
    kauffman_bracket,
    realize_gauss_code,
    split,
    writhe,
)
from .verify import (
    CheckReport,
    check_bracket,
    check_duality,
    check_main_theorem,
    check_subset_identities,
    generate,
    run_suite,
)

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
