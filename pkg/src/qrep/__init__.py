"""qrep: cohomological and representation-theoretic analysis of conjugation quandles.

For a finite group given by its multiplication table, the package computes:

- group structure: conjugacy classes, center, commutator subgroup,
  abelianization, maximal abelian subgroups (:mod:`qrep.groups`,
  :mod:`qrep.catalog`);
- the conjugation quandle, its axioms, orbits, inner group and characters
  (:mod:`qrep.quandles`);
- second cohomology ``H²(G, ℤ/m)`` with constructive representatives, the
  scalar class group ``H²(G, ℂ×)`` realized at modulus ``|G|``, the subgroup
  of symmetric classes, and the Bogomolov subgroup (:mod:`qrep.cohomology`);
- irreducible linear and quandle representations, projective-cocycle
  extraction, character twists and their decomposition (:mod:`qrep.reps`);
- the enveloping group of the quandle: presentation, abelianization, and a
  Todd–Coxeter coset-enumeration oracle for its finite quotients
  (:mod:`qrep.enveloping`);
- per-group JSON/markdown/CSV reports, figures, and a catalog-wide
  verification suite (:mod:`qrep.report`, :mod:`qrep.figures`,
  ``qrep`` CLI in :mod:`qrep.cli`).
"""

from __future__ import annotations

__version__ = "0.1.0"

from .errors import ComputationError, QrepError, ResourceLimitError, ValidationError
from .snf import KernelModM, ModQuotient, ModSolver, SmithForm, smith_normal_form
from .groups import (
    FiniteGroup,
    StructureReport,
    Subgroup,
    dedup_subgroups_up_to_conjugacy,
    generating_set,
    group_from_closure,
    group_from_perm_gens,
    invariants_from_element_orders,
    maximal_abelian_subgroups,
    permutations_from_cycle_text,
    structure_invariants,
)
from .catalog import (
    CATALOG_TOKENS,
    abelian,
    alternating,
    catalog_battery,
    cyclic,
    dihedral,
    group_from_catalog,
    klein4,
    parse_group_token,
    quaternion8,
    sl23,
    symmetric,
)
from .quandles import (
    OrbitsInner,
    Quandle,
    QuandleChar,
    QuandleVerdict,
    conj_quandle,
    enumerate_characters,
    is_quandle_morphism,
    orbits_and_inner,
    validate_quandle,
)
from .cohomology import (
    ClassSubgroup,
    Cocycle2,
    CohomologyGroup,
    CxClassGroup,
    bogomolov_BC,
    class_trivial_over_QZ,
    cochain_maps,
    h2_mod_m,
    is_symmetric,
    restrict_class,
    schur_multiplier_Cx,
    symmetric_classes_HS2,
    symmetric_equation_holds,
)
from .reps import (
    DecompositionResult,
    LinearRep,
    ProjectiveData,
    QuandleRep,
    char_times_rep,
    commutant_dim,
    decompose_char_times_linear,
    extract_projective_data,
    irreducible_reps,
    is_quandle_rep,
    lift_by_symmetric_cocycle,
    linear_as_quandle_rep,
    pauli_fixture,
    regular_rep,
)
from .enveloping import (
    Presentation,
    PresentationAbelianization,
    enveloping_presentation,
    expected_KN_order,
    free_reduce,
    perfect_surjectivity_witness,
    pi_times_ab_check,
    presentation_abelianization,
    presentation_from_text,
    presentation_to_text,
    todd_coxeter_order,
)
from .report import (
    GroupReport,
    SuiteReport,
    analyze_group,
    markdown_header,
    markdown_row,
    report_csv_text,
    report_json_bytes,
    report_json_dict,
    suite_csv_text,
    suite_json_bytes,
    verify_theorem_suite,
)

__all__ = [
    "__version__",
    # errors
    "QrepError", "ValidationError", "ResourceLimitError", "ComputationError",
    # snf
    "smith_normal_form", "SmithForm", "ModSolver", "KernelModM", "ModQuotient",
    # groups
    "FiniteGroup", "Subgroup", "StructureReport", "structure_invariants",
    "group_from_closure", "group_from_perm_gens", "permutations_from_cycle_text",
    "invariants_from_element_orders", "dedup_subgroups_up_to_conjugacy",
    "maximal_abelian_subgroups", "generating_set",
    # catalog
    "CATALOG_TOKENS", "cyclic", "abelian", "klein4", "dihedral", "symmetric",
    "alternating", "quaternion8", "sl23", "parse_group_token",
    "group_from_catalog", "catalog_battery",
    # quandles
    "Quandle", "QuandleVerdict", "validate_quandle", "conj_quandle",
    "OrbitsInner", "orbits_and_inner", "QuandleChar", "enumerate_characters",
    "is_quandle_morphism",
    # cohomology
    "Cocycle2", "CohomologyGroup", "h2_mod_m", "cochain_maps", "CxClassGroup",
    "schur_multiplier_Cx", "ClassSubgroup", "symmetric_classes_HS2",
    "bogomolov_BC", "is_symmetric", "symmetric_equation_holds",
    "class_trivial_over_QZ", "restrict_class",
    # reps
    "LinearRep", "QuandleRep", "regular_rep", "is_quandle_rep",
    "irreducible_reps", "commutant_dim", "linear_as_quandle_rep",
    "char_times_rep", "ProjectiveData", "extract_projective_data",
    "DecompositionResult", "decompose_char_times_linear",
    "lift_by_symmetric_cocycle", "pauli_fixture",
    # enveloping
    "Presentation", "free_reduce", "enveloping_presentation",
    "PresentationAbelianization", "presentation_abelianization",
    "pi_times_ab_check", "perfect_surjectivity_witness", "todd_coxeter_order",
    "expected_KN_order", "presentation_to_text", "presentation_from_text",
    # report
    "GroupReport", "analyze_group", "report_json_dict", "report_json_bytes",
    "markdown_header", "markdown_row", "report_csv_text", "SuiteReport",
    "verify_theorem_suite", "suite_json_bytes", "suite_csv_text",
]
