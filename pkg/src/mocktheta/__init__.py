"""Mock theta functions omega and nu, odd Ferrers graphs, and the bijections between them."""
from .ferrers import OddFerrersGraph
from .partitions import DomainError, Partition, format_partition, parse_partition
from .qseries import LaurentSeries, Monomial

__all__ = ["DomainError", "LaurentSeries", "Monomial", "OddFerrersGraph", "Partition",
           "format_partition", "parse_partition"]
