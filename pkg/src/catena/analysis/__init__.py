"""Cover classification, closures and catenarity analysis of ring extensions."""
from __future__ import annotations

from catena.analysis.catenarity import (
    CatenarityReport,
    ExchangeReport,
    InertPairReport,
    analyze_catenarity,
    check_crosswise_exchange,
    check_inert_then_noninert,
    inert_then_noninert,
)
from catena.analysis.closure import (
    is_infra_integral,
    is_infra_integral_direct,
    is_subintegral_chainwise,
    is_t_closed,
    is_t_closed_direct,
    seminormalization_chainwise,
    t_closure,
    t_closure_chainwise,
)
from catena.analysis.corpus import CorpusItem, corpus, named_corpus, small_corpus, small_rings
from catena.analysis.interval import ExtensionLattice, enumerate_interval
from catena.analysis.minimal import Classification, MinimalType, classify_minimal, is_minimal_pair
from catena.analysis.pointwise import PointwiseReport, is_pointwise_minimal
from catena.analysis.transfer import (
    TransferReport,
    check_idealization_transfer,
    check_product_transfer,
    check_quotient_transfer,
)

__all__ = [
    "CatenarityReport",
    "Classification",
    "CorpusItem",
    "ExchangeReport",
    "ExtensionLattice",
    "InertPairReport",
    "MinimalType",
    "PointwiseReport",
    "TransferReport",
    "analyze_catenarity",
    "check_crosswise_exchange",
    "check_idealization_transfer",
    "check_inert_then_noninert",
    "check_product_transfer",
    "check_quotient_transfer",
    "classify_minimal",
    "corpus",
    "enumerate_interval",
    "inert_then_noninert",
    "is_infra_integral",
    "is_infra_integral_direct",
    "is_minimal_pair",
    "is_pointwise_minimal",
    "is_subintegral_chainwise",
    "is_t_closed",
    "is_t_closed_direct",
    "named_corpus",
    "seminormalization_chainwise",
    "small_corpus",
    "small_rings",
    "t_closure",
    "t_closure_chainwise",
]
