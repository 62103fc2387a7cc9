"""Workbench for Kauffman bracket skein computations over the dual-number
ring C[e]/(e^2): skein resolution of labeled diagrams, the quantum torus
symbol calculus, SL2(C) character-variety numerics, the torsion transport
check for handlebodies, and the first-order self-linking identities."""

from .rings import QQi, LaurentPoly, DualScalar, dual_mul, eval_dual
from .words import parse_word, word_str, conj_class
from .quantum_torus import (TorusElement, CommutativeLM, RSequence,
                            multiply, sigma, act, symbol0, symbol1,
                            poisson_bracket, SYMBOL_PRODUCT_CONSTANT)
from .sl2 import (Representation, eval_word, traceless, star, killing,
                  q_functional, project_pi, occurrence_endomorphism,
                  divergence, fd_divergence, crossing_contribution)
from .skein import (Diagram, Edge, SkeinElement, resolve, resolve_oracle,
                    evaluate, goldman_bracket, build_handle_slide,
                    slide_cuts, load_diagram, MalformedDiagramError,
                    NoOccurrenceError)
from .transport import (TransportReport, f_and_fprime, fprime_closed_form,
                        based_divergence, transport_residual,
                        calibrate_kappa, default_kappa, CalibrationError)
from .selflink import (DeformedWord, first_derivative, hessian_pair,
                       trace_identity_hessian, q_case_smooth, q_case_split,
                       kauffman_scalar_check)
from .suites import run_suites, summarize

__version__ = "0.1.0"
