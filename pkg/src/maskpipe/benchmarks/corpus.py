"""The shipped benchmark sources.

Unmasked S-boxes are written once; the pre-masked variants are generated
by the masking pass and rendered with ``reg(...)`` at every annotation.
``regenerate`` rewrites the data directory and a test checks it for drift.
"""

from __future__ import annotations

from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Callable

from ..codegen import emit_source
from ..dfg import Dfg
from ..frontend import parse_masked_c
from ..gadgets import GadgetKind, apply_masking_pass
from .circuits import (AND2_SOURCE, DOMAND_ANNOTATED, DOMAND_BALANCED, DOMAND_SOURCE, MOTIVATING_SOURCE,
                       PRESENT_SOURCE, aes_sbox)

UNMASKED: dict[str, Callable[[], Dfg]] = {
    "present": lambda: parse_masked_c(PRESENT_SOURCE),
    "aes": aes_sbox,
}


def _fixed_sources() -> dict[str, str]:
    return {
        "present.c": PRESENT_SOURCE,
        "aes.c": emit_source(aes_sbox()),
        "domand.c": DOMAND_SOURCE,
        "domand_annotated.c": DOMAND_ANNOTATED,
        "domand_balanced.c": DOMAND_BALANCED,
        "motivating.c": MOTIVATING_SOURCE,
        "and2.c": AND2_SOURCE,
    }


def masked_dfg(bench: str, kind: GadgetKind | str) -> Dfg:
    k = GadgetKind.parse(kind)
    g = apply_masking_pass(UNMASKED[bench](), k)
    g.name = f"{bench}_{k.value.lower()}"
    return g


def generate() -> dict[str, str]:
    """File name -> text for the whole corpus."""
    out = _fixed_sources()
    for bench in UNMASKED:
        for k in GadgetKind:
            out[f"{bench}_{k.value.lower()}_masked.c"] = emit_source(masked_dfg(bench, k))
    return out


def regenerate(directory: str | Path) -> list[Path]:
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    written = []
    for name, text in sorted(generate().items()):
        p = d / name
        p.write_text(text)
        written.append(p)
    return written


def shipped_names() -> list[str]:
    root = resources.files(__package__) / "data"
    return sorted(p.name for p in root.iterdir() if p.name.endswith(".c"))


@lru_cache(maxsize=None)
def shipped_source(name: str) -> str:
    if not name.endswith(".c"):
        name += ".c"
    return (resources.files(__package__) / "data" / name).read_text()


def data_path(name: str) -> Path:
    if not name.endswith(".c"):
        name += ".c"
    return Path(str(resources.files(__package__) / "data" / name))
