"""Built-in example catalog with expected invariants.

Each entry records the classical values for the minimally graded curve
singularities (a-invariant, period, quotient-ring component data, the
derived-equivalence comparison target) plus the non-reduced family used
for the negative-a workflow.  ``source`` tags where the expectation
comes from: classical singularity data or values computed once and
frozen here.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    f_text: str
    wx: int
    wy: int
    expected: dict
    source: str = "classical ADE data"
    canonical_parameters: dict | None = None


CATALOG: list[CatalogEntry] = [
    CatalogEntry(
        "A3", "x^4-y^2", 1, 2,
        dict(a=1, p=1, m=2, p_list=[1, 1], rank=3, vertices=3,
             target=("dynkin", "D3"), semisimple=True, gldim_finite=True),
    ),
    CatalogEntry(
        "A4", "x^5-y^2", 2, 5,
        dict(a=3, p=1, m=1, p_list=[1], rank=4, vertices=4,
             target=("dynkin", "A4"), semisimple=True, gldim_finite=True),
    ),
    CatalogEntry(
        "A5", "x^6-y^2", 1, 3,
        dict(a=2, p=1, m=2, p_list=[1, 1], rank=4, vertices=4,
             target=("dynkin", "D4"), semisimple=True, gldim_finite=True),
    ),
    CatalogEntry(
        "A6", "x^7-y^2", 2, 7,
        dict(a=5, p=1, m=1, p_list=[1], rank=6, vertices=6,
             target=("dynkin", "A6"), semisimple=True, gldim_finite=True),
    ),
    CatalogEntry(
        "D5", "x^4-x*y^2", 2, 3,
        dict(a=3, p=3, m=2, p_list=[1, 3], rank=7, vertices=7,
             target=("dynkin", "A7"), semisimple=True, gldim_finite=True),
    ),
    CatalogEntry(
        "D6", "x^5-x*y^2", 1, 2,
        dict(a=2, p=2, m=3, p_list=[1, 1, 2], rank=6, vertices=6,
             target=("dynkin", "D6"), semisimple=True, gldim_finite=True),
    ),
    CatalogEntry(
        "E6", "x^4-y^3", 3, 4,
        dict(a=5, p=1, m=1, p_list=[1], rank=6, vertices=6,
             target=("dynkin", "E6"), semisimple=True, gldim_finite=True),
    ),
    CatalogEntry(
        "E7", "x^3*y-y^3", 2, 3,
        dict(a=4, p=2, m=2, p_list=[1, 2], rank=7, vertices=7,
             target=("dynkin", "E7"), semisimple=True, gldim_finite=True),
    ),
    CatalogEntry(
        "E8", "x^5-y^3", 3, 5,
        dict(a=7, p=1, m=1, p_list=[1], rank=8, vertices=8,
             target=("dynkin", "E8"), semisimple=True, gldim_finite=True),
    ),
    CatalogEntry(
        "T44", "x(x-y)(x-2y)(x-3y)", 1, 1,
        dict(a=2, p=1, m=4, p_list=[1, 1, 1, 1], rank=6, vertices=6,
             target=("canonical", "2222"), semisimple=True, gldim_finite=True),
        source="tame quartic, roots 0,1,2,3",
        canonical_parameters=dict(case="a", alphas=[0, 1, 2, 3]),
    ),
    CatalogEntry(
        "T36", "x(x-y^2)(x-2y^2)", 2, 1,
        dict(a=3, p=1, m=3, p_list=[1, 1, 1], rank=6, vertices=6,
             target=("canonical", "2222"), semisimple=True, gldim_finite=True),
        source="tame sextic, roots 0,1,2",
        canonical_parameters=dict(case="b", alphas=[0, 1, 2]),
    ),
    CatalogEntry(
        "N1", "y^2", 1, 1,
        dict(a=0, p=1, m=1, p_list=[1], rank=1, vertices=1,
             target=None, semisimple=False, gldim_finite=False),
        source="non-reduced family, computed",
    ),
    CatalogEntry(
        "N2", "y^2", 2, 1,
        dict(a=-1, p=2, m=1, p_list=[2], rank=1,
             semisimple=False, silting=True, tilting=False, lambda_dim=4),
        source="non-reduced family, computed",
    ),
    CatalogEntry(
        "N3", "y^2", 3, 1,
        dict(a=-2, p=3, m=1, p_list=[3], rank=1,
             semisimple=False, silting=True, tilting=False, lambda_dim=6),
        source="non-reduced family, computed",
    ),
]


def get_entry(name: str) -> CatalogEntry:
    for e in CATALOG:
        if e.name.lower() == name.lower():
            return e
    raise KeyError(f"no catalog entry named {name!r}")
