"""Benchmark circuits and their shipped sources."""

from .circuits import (DOMAND_ANNOTATED, DOMAND_BALANCED, DOMAND_SOURCE, MOTIVATING_SOURCE, PRESENT_SBOX,
                       PRESENT_SOURCE, Builder, aes_sbox, aes_sbox_table, present_sbox)

__all__ = ["Builder", "present_sbox", "aes_sbox", "aes_sbox_table", "PRESENT_SBOX", "PRESENT_SOURCE",
           "DOMAND_SOURCE", "DOMAND_ANNOTATED", "DOMAND_BALANCED", "MOTIVATING_SOURCE"]
