"""Exact certificates for the R-infinity property of pure braid groups."""

from .errors import CertificateError
from .partitions import Partition, StandardTableau
from .symgrp import Permutation

__all__ = ["CertificateError", "Partition", "Permutation", "StandardTableau"]
__version__ = "0.1.0"
