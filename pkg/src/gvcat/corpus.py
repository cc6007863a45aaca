"""The bundled corpus: builder outputs serialized under ``gvcat/data``."""

from __future__ import annotations

from importlib import resources
from pathlib import Path
from typing import Callable

from .builders import (
    build_extension_specimen, build_graded_lines, build_semion, build_three_object_gv,
    build_trivial_braided,
)
from .core import StructureError
from .duality import GVData, dualizing_from_K
from .extension import verify_r_extension
from .fileformat import CategoryFile, load, parse, serialize
from .monoidal import BraidingData, MonoidalData

__all__ = ["CORPUS", "category_file", "corpus_text", "bundled_path", "load_bundled",
           "write_corpus", "from_structures"]


def from_structures(m: MonoidalData, b: BraidingData | None = None, gv: GVData | None = None,
                    with_ev: bool = True) -> CategoryFile:
    ev = None
    if gv is not None and with_ev:
        ev = tuple((gv.D(y), gv.ev[y]) for y in range(m.cat.n))
    return CategoryFile(m.cat, m, b, gv.K if gv is not None else None, ev)


def _braided(b: BraidingData, K: int = 0) -> CategoryFile:
    gv = dualizing_from_K(b.base, K)
    return from_structures(b.base, b, gv)


def _e1() -> CategoryFile:
    m = build_three_object_gv(5)
    return from_structures(m, None, dualizing_from_K(m, m.cat.obj("K")))


def _extension() -> CategoryFile:
    ex = build_extension_specimen()
    gv, report = verify_r_extension(ex)
    report.raise_for_theorem()
    return from_structures(ex.M, None, gv)


# name → builder; the order here is the canonical report order
CORPUS: dict[str, Callable[[], CategoryFile]] = {
    "trivial": lambda: _braided(build_trivial_braided()),
    "e1_z5": _e1,
    "e2_minus": lambda: _braided(build_graded_lines(sign=-1)),
    "e2_plus": lambda: _braided(build_graded_lines(sign=1)),
    "semion_z5": lambda: _braided(build_semion()),
    "lines_z4": lambda: _braided(build_graded_lines(4, 5, q=2)),
    "e1_extension": _extension,
}


def category_file(name: str) -> CategoryFile:
    try:
        return CORPUS[name]()
    except KeyError:
        raise StructureError(f"no bundled category named {name!r}") from None


def corpus_text(name: str) -> str:
    return serialize(category_file(name))


def bundled_path(name: str) -> Path:
    return Path(str(resources.files("gvcat") / "data" / f"{name}.cat"))


def load_bundled(name: str) -> CategoryFile:
    return load(bundled_path(name))


def write_corpus(directory: str | Path | None = None) -> list[Path]:
    """Regenerate every bundled file; each is re-parsed before it is written."""
    from .cli import validate_file
    out = []
    d = Path(directory) if directory is not None else bundled_path("x").parent
    d.mkdir(parents=True, exist_ok=True)
    for name in CORPUS:
        text = corpus_text(name)
        cf = parse(text)
        if serialize(cf) != text:
            raise StructureError(f"{name}: serialization is not a fixed point")
        validate_file(cf).raise_for_input()
        p = d / f"{name}.cat"
        p.write_text(text, encoding="utf-8", newline="\n")
        out.append(p)
    return out
