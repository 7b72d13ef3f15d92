"""sylowtab: decide Sylow-subgroup commutator/center indices from character tables.

Given only the ordinary character table of a finite group, the detectors
decide whether a Sylow p-subgroup P satisfies |P:P'| = p^2 and whether
|P:Z(P)| = p^2.  A brute-force permutation-group oracle (element
enumeration, Sylow construction, exact Burnside-Dixon character tables)
provides ground truth for cross-validation on the embedded corpus.
"""

from .blocks import (BlockPartition, abelian_sylow_test, block_partition,
                     count_height_zero_principal)
from .chartab import (CharTable, ClassData, NormalSet, centralizer_order,
                      core_subgroups, minimal_normals, normal_lattice,
                      quotient_table, validate)
from .corpus import CorpusEntry, build_group, corpus_entries, corpus_entry
from .cyclo import Cyc, cyc_root
from .detectors import (Verdict, compute_K, detect_center_index_p2,
                        detect_commutator_index_p2, detect_normal_p_abelian)
from .dixon import DixonFailure, dixon_table
from .perm import CapExceeded, GroundTruth, PermGroup, perm_from_cycles
from .serialize import (GroupDocument, ParseError, ReportRow, emit_group,
                        emit_report, emit_table, parse_group, parse_table,
                        parse_text_table)
from .simplerec import (SimpleId, SocleFacts, is_almost_simple,
                        recognize_minimal_normal, simple_order_candidates,
                        socle_sylow_lookup)

__version__ = "0.1.0"

__all__ = [
    "BlockPartition", "CapExceeded", "CharTable", "ClassData", "CorpusEntry",
    "Cyc", "DixonFailure", "GroundTruth", "GroupDocument", "NormalSet",
    "ParseError", "PermGroup", "ReportRow", "SimpleId", "SocleFacts",
    "Verdict", "abelian_sylow_test", "block_partition", "build_group",
    "centralizer_order", "compute_K", "core_subgroups",
    "corpus_entries", "corpus_entry", "count_height_zero_principal",
    "cyc_root", "detect_center_index_p2", "detect_commutator_index_p2",
    "detect_normal_p_abelian", "dixon_table", "emit_group", "emit_report",
    "emit_table", "is_almost_simple", "minimal_normals", "normal_lattice",
    "parse_group", "parse_table", "parse_text_table", "perm_from_cycles",
    "quotient_table", "recognize_minimal_normal", "simple_order_candidates",
    "socle_sylow_lookup", "validate",
]
