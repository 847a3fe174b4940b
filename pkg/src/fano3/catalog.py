"""The twelve Sarkisov links of nonrational Fano threefolds with ``rk Cl = 2``.

Descriptions are the table text; signatures were read off the descriptions by
hand.  B1 signatures carry the invariants of the blown-up curve
(``iotaY``, ``dY`` or ``gY``, ``m``, ``n``, ``pa``) in the normalization of the
equation system that produces them; B2/B3B4 carry the target ``Y``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import ContractionSignature, sig

__all__ = ["CatalogRow", "CATALOG", "catalog_row", "SCHEMA"]

SCHEMA = "fano3/1"


@dataclass(frozen=True)
class CatalogRow:
    row: int
    genus: int
    left_desc: str
    right_desc: str
    left_sig: ContractionSignature
    right_sig: ContractionSignature
    nodes: int
    nonrational: str  # "All" or "General"

    @property
    def symmetric(self) -> bool:
        return self.row <= 5

    def key(self) -> tuple:
        pair = tuple(sorted((self.left_sig, self.right_sig), key=ContractionSignature.sort_key))
        return (self.genus, pair)

    def to_json(self) -> dict:
        return {
            "row": self.row,
            "genus": self.genus,
            "left": self.left_sig.to_json(),
            "right": self.right_sig.to_json(),
            "left_desc": self.left_desc,
            "right_desc": self.right_desc,
            "nodes": self.nodes,
            "nonrational": self.nonrational.lower(),
            "symmetric": self.symmetric,
        }


_DP4 = "del Pezzo fibration of degree 4 over P^1"
_V14_CONIC = sig("B1", iotaY=1, gY=8, m=2, n=4, pa=0)
_W2_POINT = sig("B2", iotaY=2, dY=2)
_CB5 = sig("C1", d=5)
_V3_POINT = sig("B2", iotaY=2, dY=3)

CATALOG: tuple[CatalogRow, ...] = (
    CatalogRow(1, 5, _DP4, _DP4, sig("D1", d=4), sig("D1", d=4), 4, "General"),
    CatalogRow(2, 5,
               "blowup of a conic on a smooth threefold Y_14 in P^9",
               "blowup of a conic on a smooth threefold Y_14' in P^9",
               _V14_CONIC, _V14_CONIC, 10, "All"),
    CatalogRow(3, 5,
               "blowup of a smooth point on a del Pezzo threefold Y_2",
               "blowup of a smooth point on Y_2",
               _W2_POINT, _W2_POINT, 12, "General"),
    CatalogRow(4, 8,
               "conic bundle over P^2 with discriminant curve of degree 5",
               "conic bundle over P^2 with discriminant curve of degree 5",
               _CB5, _CB5, 1, "All"),
    CatalogRow(5, 9,
               "blowup of a point on a smooth cubic Y_3 in P^4",
               "blowup of a point on Y_3 in P^4",
               _V3_POINT, _V3_POINT, 6, "All"),
    CatalogRow(6, 5,
               "del Pezzo fibration of degree 3 over P^1",
               "conic bundle over P^2 with discriminant curve of degree 7",
               sig("D1", d=3), sig("C1", d=7), 1, "General"),
    CatalogRow(7, 5,
               "blowup of a cA_1-point on locally factorial threefold Y_10^s in P^7",
               "conic bundle over P^2 with discriminant curve of degree 6",
               sig("B3B4", iotaY=1, gY=6), sig("C1", d=6), 6, "General"),
    CatalogRow(8, 6, _DP4,
               "conic bundle over P^2 with discriminant curve of degree 6",
               sig("D1", d=4), sig("C1", d=6), 2, "General"),
    CatalogRow(9, 6,
               "blowup of a line on a smooth threefold Y_14 in P^9",
               "conic bundle over P^2 with discriminant curve of degree 5",
               sig("B1", iotaY=1, gY=8, m=1, n=3, pa=0), _CB5, 6, "All"),
    CatalogRow(10, 6,
               "blowup of a rational twisted cubic curve on a smooth cubic Y_3 in P^4",
               "blowup of a point 1/2(1,1,1) on Y_21/2",
               sig("B1", iotaY=2, dY=3, m=3, n=4, pa=0), sig("B5"), 6, "All"),
    CatalogRow(11, 6,
               "blowup of a line on a del Pezzo threefold Y_2",
               "del Pezzo fibration of degree 3",
               sig("B1", iotaY=2, dY=2, m=1, n=2, pa=0), sig("D1", d=3), 1, "General"),
    CatalogRow(12, 8,
               "blowup of a conic on a smooth cubic Y_3 in P^4",
               _DP4,
               sig("B1", iotaY=2, dY=3, m=2, n=3, pa=0), sig("D1", d=4), 1, "All"),
)


def catalog_row(row: int) -> CatalogRow:
    for r in CATALOG:
        if r.row == row:
            return r
    raise KeyError(f"no catalog row {row}")


def match_pair(genus: int, a: ContractionSignature, b: ContractionSignature) -> CatalogRow | None:
    key = (genus, tuple(sorted((a, b), key=ContractionSignature.sort_key)))
    for r in CATALOG:
        if r.key() == key:
            return r
    return None


def match_side(genus: int, s: ContractionSignature) -> CatalogRow | None:
    """Catalog row of genus ``genus`` having ``s`` on either side."""
    for r in CATALOG:
        if r.genus == genus and s in (r.left_sig, r.right_sig):
            return r
    return None
