"""Configuration checkers, axiom suites and the undecidability demos."""

from .brouwer import EXAMPLES, DemoReport, brouwerian_demo
from .configs import (
    CheckOutcome,
    DesarguesConfig,
    Holds,
    HypothesisFails,
    PappusConfig,
    Violated,
    check_d1,
    check_d2,
    check_desargues,
    check_pappus,
)
from .harness import VerificationReport, verify_axioms
from .real import DistanceReport, real1_check

__all__ = [
    "EXAMPLES", "DemoReport", "brouwerian_demo",
    "CheckOutcome", "DesarguesConfig", "Holds", "HypothesisFails", "PappusConfig", "Violated",
    "check_d1", "check_d2", "check_desargues", "check_pappus",
    "VerificationReport", "verify_axioms",
    "DistanceReport", "real1_check",
]
