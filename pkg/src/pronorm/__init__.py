"""pronorm - Hall subgroups and pronormality in finite permutation groups.

Builds small classical groups as permutation groups, classifies their Hall
pi-subgroups up to conjugacy and decides pronormality with a re-checkable
certificate.

Example:
    ```python
    from pronorm import PiSet, build, hall_subgroups, is_pronormal_definition

    G = build("psl2:7")
    result = hall_subgroups(G, PiSet.parse("2,3"))
    print(result.orders)  # [24, 24]

    cert = is_pronormal_definition(G, result.class_reps[0])
    print(cert.verdict)
    ```

For CLI usage:
    ```bash
    pronorm hall sym:7 --pi 2,3
    pronorm pronormal alt:4 --subgroup "gens:(0 1)(2 3)"
    pronorm verify table1 --save table1.json
    ```
"""

from ._config import EngineConfig, current_config, use_config
from .arith import PiSet, complement, factorize, is_pi_group, pi_part, prime_set
from .atlas import (
    CATALOG,
    CATALOG_SIMPLE,
    Expectation,
    Family,
    GroupSpec,
    Source,
    build,
    classical_order,
    epsilon,
    expectations,
    fingerprint,
    parse_group_spec,
)
from .exceptions import (
    ContainmentError,
    DegreeError,
    ExhaustiveBoundError,
    HomomorphismError,
    NotHallError,
    NotNormalError,
    OrderBoundExceeded,
    ParseError,
    PermutationError,
    PronormError,
    UnsupportedGroupError,
)
from .groups import (
    Homomorphism,
    PermGroup,
    group_from_generators,
    normalizer,
    quotient_by_normal,
)
from .hall import (
    HallClassification,
    SearchMode,
    SylowComplexion,
    classify_pi_properties,
    hall_subgroups,
    is_pi_separable,
    sylow,
    sylow_complexion,
)
from .lemmas import verify_reduction_lemmas
from .models import Report, reverify_report
from .perm import Permutation
from .pronormality import (
    Method,
    PronormalityCertificate,
    Verdict,
    decide,
    decide_async,
    is_pronormal_definition,
    is_pronormal_reduced,
    is_pronormal_sylow_tower,
    verify_certificate,
)
from .verify import Suite, run_suite

__version__ = "0.1.0"

__all__ = [
    # Permutations and groups
    "Permutation",
    "PermGroup",
    "Homomorphism",
    "group_from_generators",
    "normalizer",
    "quotient_by_normal",
    # Prime sets
    "PiSet",
    "complement",
    "factorize",
    "is_pi_group",
    "pi_part",
    "prime_set",
    # Hall subgroups
    "HallClassification",
    "SearchMode",
    "SylowComplexion",
    "classify_pi_properties",
    "hall_subgroups",
    "is_pi_separable",
    "sylow",
    "sylow_complexion",
    # Pronormality
    "Method",
    "PronormalityCertificate",
    "Verdict",
    "decide",
    "decide_async",
    "is_pronormal_definition",
    "is_pronormal_reduced",
    "is_pronormal_sylow_tower",
    "verify_certificate",
    "verify_reduction_lemmas",
    # Atlas
    "CATALOG",
    "CATALOG_SIMPLE",
    "Expectation",
    "Family",
    "GroupSpec",
    "Source",
    "build",
    "classical_order",
    "epsilon",
    "expectations",
    "fingerprint",
    "parse_group_spec",
    # Verification and reports
    "Suite",
    "run_suite",
    "Report",
    "reverify_report",
    # Configuration
    "EngineConfig",
    "current_config",
    "use_config",
    # Exceptions
    "PronormError",
    "PermutationError",
    "DegreeError",
    "ContainmentError",
    "NotNormalError",
    "NotHallError",
    "HomomorphismError",
    "ExhaustiveBoundError",
    "OrderBoundExceeded",
    "UnsupportedGroupError",
    "ParseError",
    # Version
    "__version__",
]
