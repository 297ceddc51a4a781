"""JSON schemas for alphabets, codes, witnesses, and reports.

Coordinate indices and permutations are 1-based on the wire and 0-based in
memory. Emitted documents are canonical: words sorted, alphabets written
in table form, isometries in the pull convention, so byte-identical output
for identical inputs is guaranteed. Loaders additionally accept the
cyclic/product alphabet shorthands and push-convention witnesses.
"""

from __future__ import annotations

import json
from typing import Any

from .classify import Classification
from .codes import Code, GroupCode, ParameterReport, generate_group_code
from .cyclic import ComponentStructure, CyclicReport, GcdCertificate
from .decompose import Decomposition, Partition
from .errors import ClosureError, GroupCodesError, SchemaError
from .groups import FiniteGroup, cyclic_group, group_from_table, product_group
from .isometry import Configuration, Equivalence, Isometry
from .isomorphy import AutGroupReport, GroupCodeIso


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2) + "\n"


# alphabets ----------------------------------------------------------------

def alphabet_to_json(G: FiniteGroup) -> dict:
    return {"kind": "table", "order": G.order,
            "table": [list(row) for row in G.table], "label": G.label}


def alphabet_from_json(obj: Any) -> FiniteGroup:
    if not isinstance(obj, dict):
        raise SchemaError("alphabet must be an object", "alphabet")
    kind = obj.get("kind")
    if kind == "cyclic":
        modulus = obj.get("modulus")
        if not isinstance(modulus, int) or modulus < 1:
            raise SchemaError(f"bad modulus {modulus!r}", "alphabet.modulus")
        return cyclic_group(modulus)
    if kind == "product":
        factors = obj.get("factors")
        if not isinstance(factors, list) or not factors:
            raise SchemaError("product needs a non-empty factor list", "alphabet.factors")
        return product_group([alphabet_from_json(f) for f in factors])
    if kind == "table":
        table = obj.get("table")
        if not isinstance(table, list):
            raise SchemaError("missing multiplication table", "alphabet.table")
        label = obj.get("label", "")
        try:
            return group_from_table(table, label=str(label))
        except GroupCodesError as err:
            raise SchemaError(str(err), "alphabet.table") from err
    raise SchemaError(f"unknown alphabet kind {kind!r}", "alphabet.kind")


# codes --------------------------------------------------------------------

def code_to_json(C: Code) -> dict:
    doc = {"alphabet": alphabet_to_json(C.alphabet), "length": C.length,
           "codewords": [list(w) for w in C.words]}
    if isinstance(C, GroupCode):
        doc["group"] = True
    return doc


def code_from_json(obj: Any) -> Code:
    if not isinstance(obj, dict):
        raise SchemaError("code must be an object")
    G = alphabet_from_json(obj.get("alphabet"))
    length = obj.get("length")
    if not isinstance(length, int) or length < 1:
        raise SchemaError(f"bad length {length!r}", "length")
    is_group = bool(obj.get("group", False))
    if "generators" in obj:
        if not is_group:
            raise SchemaError('"generators" requires "group": true', "generators")
        gens = obj["generators"]
        if not isinstance(gens, list):
            raise SchemaError("generators must be a list of words", "generators")
        try:
            return generate_group_code(G, length, gens)
        except GroupCodesError as err:
            raise SchemaError(str(err), "generators") from err
    words = obj.get("codewords")
    if not isinstance(words, list) or not words:
        raise SchemaError("codewords must be a non-empty list of words", "codewords")
    try:
        if is_group:
            return GroupCode.from_words(G, length, words)
        return Code.from_words(G, length, words)
    except ClosureError as err:
        raise SchemaError(f"not closed under the group operations: {err}", "codewords") from err
    except GroupCodesError as err:
        raise SchemaError(str(err), "codewords") from err


# isometries ---------------------------------------------------------------

def isometry_to_json(iso: Isometry) -> dict:
    return {"sigma": [i + 1 for i in iso.equiv.perm],
            "config": [list(f) for f in iso.config.maps],
            "convention": "pull"}


def isometry_from_json(obj: Any) -> Isometry:
    if not isinstance(obj, dict):
        raise SchemaError("isometry witness must be an object")
    sigma = obj.get("sigma")
    config = obj.get("config")
    convention = obj.get("convention", "pull")
    if convention not in ("pull", "push"):
        raise SchemaError(f"unknown convention {convention!r}", "convention")
    if not isinstance(sigma, list) or not all(isinstance(i, int) for i in sigma):
        raise SchemaError("sigma must be a list of 1-based integers", "sigma")
    if not isinstance(config, list):
        raise SchemaError("config must be a list of alphabet maps", "config")
    try:
        equiv = Equivalence(tuple(i - 1 for i in sigma))
        if convention == "push":
            equiv = equiv.inverse()
        return Isometry(Configuration(tuple(tuple(f) for f in config)), equiv)
    except GroupCodesError as err:
        raise SchemaError(str(err)) from err


def gc_witness_to_json(w: GroupCodeIso) -> dict:
    doc = isometry_to_json(w.iso)
    doc["verified_hom"] = True
    return doc


# reports ------------------------------------------------------------------

def parameters_to_json(p: ParameterReport) -> dict:
    return {"length": p.length, "alphabet_size": p.alphabet_size, "size": p.size,
            "dimension": p.dimension_exact if p.dimension_exact is not None else p.dimension,
            "dimension_is_exact": p.dimension_exact is not None,
            "min_distance": p.min_distance,
            "correction_capacity": p.correction_capacity}


def classification_to_json(c: Classification) -> dict:
    cw = None
    if c.constant_weight is not None:
        center, radius = c.constant_weight
        cw = {"center": list(center), "radius": radius}
    return {"is_trivial": c.is_trivial,
            "is_degenerate": c.is_degenerate,
            "degenerate_coordinates": [i + 1 for i in c.degenerate_coordinates],
            "is_mds": c.is_mds,
            "is_perfect": c.is_perfect,
            "constant_weight": cw,
            "constant_weight_checked": c.constant_weight_checked,
            "correction_capacity": c.correction_capacity}


def partition_to_json(p: Partition) -> list[list[int]]:
    return [[i + 1 for i in b] for b in p.blocks]


def decomposition_to_json(d: Decomposition) -> dict:
    return {"blocks": partition_to_json(d.partition),
            "components": [code_to_json(c) for c in d.components],
            "isotypes": [{"rep": rep, "alpha": alpha} for rep, alpha in d.isotypes],
            "witness": isometry_to_json(d.witness),
            "certificates": list(d.certificates)}


def aut_report_to_json(r: AutGroupReport) -> dict:
    doc: dict = {"order": r.order,
                 "generators": [gc_witness_to_json(g) for g in r.generators],
                 "complete": r.complete}
    doc["elements"] = ([isometry_to_json(e) for e in r.elements]
                       if r.elements is not None else None)
    if r.structure is not None:
        doc["structure"] = [{"isotype": i, "component_aut_order": o, "alpha": a}
                            for i, o, a in r.structure]
    return doc


def gcd_certificate_to_json(c: GcdCertificate | None) -> dict | None:
    if c is None:
        return None
    return {"xi": c.xi, "verdict": c.verdict}


def component_structure_to_json(s: ComponentStructure | None) -> dict | None:
    if s is None:
        return None
    return {"component": code_to_json(s.component),
            "multiplicity": s.multiplicity,
            "components_pairwise_isomorphic": s.components_pairwise_isomorphic,
            "components_cyclic": s.components_cyclic}


def cyclic_report_to_json(r: CyclicReport) -> dict:
    return {"is_cyclic": r.is_cyclic,
            "shift_orbit_sizes": list(r.shift_orbit_sizes),
            "gcd_certificate": gcd_certificate_to_json(r.gcd_certificate),
            "component_structure": component_structure_to_json(r.component_structure)}
