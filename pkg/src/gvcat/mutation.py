"""Seeded single-entry mutations of composition, associator and braiding tables.

Every mutation replaces one entry by a different morphism with the same
source and target, so the result is well typed and only the axioms can
reject it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .core import FinCategory, MorId
from .fileformat import CategoryFile
from .monoidal import BraidingData, MonoidalData

__all__ = ["TABLES", "Mutation", "mutable_entries", "mutate", "mutations"]

TABLES = ("comp", "assoc", "braid")


@dataclass(frozen=True)
class Mutation:
    table: str
    key: tuple
    old: MorId
    new: MorId
    cf: CategoryFile

    def describe(self) -> str:
        cat = self.cf.cat
        return f"{self.table}{self.key}: {cat.label(self.old)} -> {cat.label(self.new)}"


def _table(cf: CategoryFile, table: str) -> dict:
    if table == "comp":
        return cf.cat.comp
    if table == "assoc":
        return cf.monoidal.assoc if cf.monoidal is not None else {}
    if table == "braid":
        return cf.braiding.beta if cf.braiding is not None else {}
    raise ValueError(f"unknown table {table!r}")


def mutable_entries(cf: CategoryFile, table: str) -> list:
    """Keys whose hom-set has another morphism to switch to."""
    cat = cf.cat
    return [k for k, v in _table(cf, table).items() if cat.hom_size(v.src, v.dst) > 1]


def _rebuild(cf: CategoryFile, table: str, key, new: MorId) -> CategoryFile:
    cat, m, b = cf.cat, cf.monoidal, cf.braiding
    if table == "comp":
        comp = dict(cat.comp)
        comp[key] = new
        cat = FinCategory(cat.name, cat.objects, cat.homs, comp, cat.ids)
    if m is not None:
        assoc = dict(m.assoc)
        if table == "assoc":
            assoc[key] = new
        m = MonoidalData(cat, m.unit, m.tensor_obj, m.tensor_mor, assoc, m.lunit, m.runit)
    if b is not None:
        beta = dict(b.beta)
        if table == "braid":
            beta[key] = new
        b = BraidingData(m, beta)
    return CategoryFile(cat, m, b, cf.K, cf.ev)


def mutate(cf: CategoryFile, table: str, rng: random.Random) -> Mutation | None:
    keys = mutable_entries(cf, table)
    if not keys:
        return None
    key = keys[rng.randrange(len(keys))]
    old = _table(cf, table)[key]
    choices = [g for g in cf.cat.hom(old.src, old.dst) if g != old]
    new = choices[rng.randrange(len(choices))]
    return Mutation(table, key, old, new, _rebuild(cf, table, key, new))


def mutations(cf: CategoryFile, table: str, count: int, seed: int) -> list[Mutation]:
    """``count`` seeded mutations of one table (empty if nothing is mutable)."""
    rng = random.Random(f"{seed}:{table}:{cf.cat.name}")
    out = []
    for _ in range(count):
        mu = mutate(cf, table, rng)
        if mu is None:
            break
        out.append(mu)
    return out
