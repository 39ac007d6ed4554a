"""orthorep: exact-arithmetic toolkit for modular ortholattices,
regular rings with involution, frames, and inner-product-space
representations."""

from .fields import GF, QQ
from .frames import (FrameWitness, build_orthogonal_semiframe, lemma1_step,
                     search_frame, verify_frame)
from .lattice import (Congruence, FiniteLattice, complements, congruences,
                      height, is_modular, perspectivity_axes, sub_perspective,
                      validate_lattice)
from .linalg import Matrix
from .ortho import OrthoLattice, check_congruence_perp, section, \
    validate_ortholattice
from .reps import (EtaMap, RingRep, claim1_test, claim3_cancellator,
                   coordinatize, induce_lattice_rep, recover_adjoints,
                   ring_embedding_from_ortho_rep, verify_ortho_rep,
                   verify_ring_rep)
from .rings import (MatrixRing, TableRing, corner, fact3_check, ideals,
                    is_regular, is_star_regular, lat_of, ortholat_of,
                    projection_generator, regularity_witness)
from .spaces import (IPSpace, StarEndo, Subspace, adjoint, fact9_check,
                     is_closed, ortho_projection, orthogonal, validate_space)

__version__ = "0.1.0"
