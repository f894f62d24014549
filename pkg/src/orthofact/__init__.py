"""Orthomodular posets and orthoalgebras of direct product decompositions."""

from .corpus import Corpus, corpus_run, default_corpus
from .errors import FactError
from .eqrel import EqRel
from .finset_cat import (Decomposition, cat_section, claims_check, decomposition_oa,
                         enumerate_D, honesty_spot_check)
from .lattice_fact import Mode, build_L2, complementary_pairs, lattice_section
from .order import FinLattice, FinPoset, build_lattice, is_modular, symmetry_class
from .ortho import (OrthoAlgebra, OrthoPoset, check_oa, check_omp, interval_oa,
                    interval_omp, oa_to_orthoposet, omp_to_oa)
from .report import Report, SectionCertificate
from .ring_fact import FinRing, build_ER, corner_ring, ring_section
from .setfact import build_FactX, factor_pairs, factx_vs_decompositions, set_section

__version__ = "0.1.0"
