"""Kauffman bracket, atoms, Khovanov homology and diagram minimality
certificates for classical and virtual link diagrams."""

from .atom import Atom, GenusValue, build_atom, euler_characteristic, genus, orientable
from .diagram import (
    Diagram,
    Orientation,
    components,
    crossing_signs,
    is_connected,
    mirror,
    orient,
    parse_gauss,
    parse_pd,
    r1_add,
    r2_add,
    render_pd,
    split_components,
    switch_crossing,
    virtualize,
)
from .errors import (
    DiagramError,
    KmcError,
    LimitError,
    ParseError,
    TableError,
    UnsupportedFieldError,
)
from .khovanov import (
    GF2,
    KhComplex,
    KhTable,
    Q,
    broad_1_complete,
    build_complex,
    graded_euler_characteristic,
    homology,
    is_2_complete,
    kh_table,
    load_table,
    q_span,
    thickness,
)
from .laurent import LOOP, Laurent
from .minimality import Certificate, FieldReport, certify, certify_from_table
from .single_circle import (
    SingleCircleCensus,
    single_circle_census,
    single_circle_window,
)
from .statesum import (
    StateSummary,
    all_a_b_circles,
    circles_of_state,
    is_1_complete,
    kauffman_bracket,
    span_bound,
    state_circles,
)

__version__ = "0.1.0"
