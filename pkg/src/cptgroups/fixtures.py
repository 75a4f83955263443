"""Published tables and label dictionaries, stored exactly as printed.

Nothing here is corrected in place.  Entries that cannot be read (a bare
minus sign where a number should be) are stored as ``None`` and every known
print error is listed in ``DEFECTS`` together with the value that the group
law forces and a note on how that value was obtained.

Tokens are plain ASCII: ``I C P T CP CT PT Theta``, with a leading ``-`` for
multiplication by -I.  Matrices are written row by row as ``"0 i; -i 0"``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .exact_arith import I_UNIT, CMatrix, Cyclotomic

Value = Union[Cyclotomic, CMatrix, None]


def value(text) -> Cyclotomic:
    """Parse ``1``, ``-2``, ``i``, ``-i`` or ``2i`` into an exact number."""
    s = str(text).strip()
    if s.endswith("i"):
        coef = s[:-1]
        k = {"": 1, "-": -1}.get(coef)
        return I_UNIT * (k if k is not None else int(coef))
    return Cyclotomic.rational(int(s))


def matrix(text: str) -> CMatrix:
    return CMatrix.from_rows([[value(x) for x in row.split()] for row in text.split(";")])


def _row(text: str) -> tuple[Value, ...]:
    # a bare "−" glyph is unreadable and kept as None
    return tuple(None if x in ("−", "-") else value(x) for x in text.split())


def _mrow(text: str) -> tuple[CMatrix, ...]:
    return tuple(matrix(m) for m in text.split("|"))


@dataclass(frozen=True)
class PrintDefect:
    defect_id: str
    location: str
    printed: str
    corrected: str
    derivation: str
    table_id: Optional[int] = None
    row: Optional[str] = None
    columns: tuple[str, ...] = ()


@dataclass(frozen=True)
class PaperFixture:
    """One published table.

    ``kind`` is ``"classes"`` when columns are conjugacy classes (given by a
    representative) and ``"elements"`` when there is one column per element.
    ``columns`` holds the lookup keys; ``headers`` holds the printed headers.
    """

    table_id: int
    group_id: str
    kind: str
    columns: tuple[str, ...]
    headers: tuple[str, ...]
    sizes: tuple[int, ...]
    rows: tuple[tuple[str, tuple[Value, ...]], ...]
    key_type: str = "label"  # "label" (structural element label) or "token"
    aliases: tuple[str, ...] = ()
    defects: tuple[str, ...] = field(default=())

    @property
    def row_names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.rows)

    def row(self, name: str) -> tuple[Value, ...]:
        return dict(self.rows)[name]


# ---------------------------------------------------------------------------
# label dictionaries
# ---------------------------------------------------------------------------

# operator group of the Dirac field -> Q x Z2, with Z2 written as {1, -1}
PSI_HAT_PRINTED = {
    "I": "(1,1)", "-I": "(-1,1)",
    "C": "(1,-1)", "-C": "(-1,-1)",
    "P": "(ι,1)", "-P": "(-ι,1)",
    "T": "(γ,1)", "-T": "(-γ,1)",
    "CP": "(ι,-1)", "-CP": "(-ι,-1)",
    "CT": "(γ,-1)", "-CT": "(-γ,-1)",
    "PT": "(κ,1)", "-PT": "(-κ,1)",
    "Theta": "(κ,-1)", "-Theta": "(-κ,-1)",
}


def _z2_as_ea(label: str) -> str:
    q, z = label[1:-1].rsplit(",", 1)
    return f"({q},{'e' if z == '1' else 'a'})"


PSI_HAT_NAMING = {tok: _z2_as_ea(lab) for tok, lab in PSI_HAT_PRINTED.items()}

# operator group of the 4-potential -> Z2^3, as printed (T row repeats the PT row)
G_A_PRINTED = {
    "I": "(e,e,e)",
    "C": "(a,e,e)",
    "P": "(e,a,e)",
    "T": "(e,a,a)",
    "PT": "(e,a,a)",
    "CP": "(a,a,e)",
    "CT": "(a,e,a)",
    "Theta": "(a,a,a)",
}

# D4 as permutations: the five classes in printed order
D4_CLASSES = (("I",), ("(1234)", "(1432)"), ("(13)(24)",), ("(12)(34)", "(14)(23)"), ("(24)", "(13)"))

# the non-trivial automorphism of D4 used for the semidirect product
D4_ACTION_FLIP = {
    "I": "I",
    "(1234)": "(1234)",
    "(24)": "(13)",
    "(13)": "(24)",
    "(12)(34)": "(14)(23)",
    "(14)(23)": "(12)(34)",
    "(13)(24)": "(13)(24)",
    "(1432)": "(1432)",
}

# D4 permutations -> CPT tokens
D4_CYCLE_NAMES = {
    "I": "I",
    "(1234)": "P",
    "(1432)": "-P",
    "(13)(24)": "-I",
    "(12)(34)": "Theta",
    "(14)(23)": "-Theta",
    "(24)": "-CT",
    "(13)": "CT",
}

# 2-dim realisation of D4: permutation -> (matrix, token written next to it)
D4_TWO_DIM_PRINTED = (
    ("I", "1 0; 0 1", "I"),
    ("(13)(24)", "-1 0; 0 -1", "-I"),
    ("(1234)", "0 -1; 1 0", "P"),
    ("(1432)", "0 1; -1 0", "-P"),
    ("(12)(34)", "-1 0; 0 1", "Theta"),
    ("(14)(23)", "1 0; 0 -1", "-Theta"),
    ("(24)", "0 1; 1 0", "-CT"),
    ("(13)", "0 -1; -1 0", "CT"),
)
D4_TWO_DIM_IMAGES = {tok: matrix(m) for _, m, tok in D4_TWO_DIM_PRINTED}

# Dirac-equation group -> D4 x| Z2
PSI_EQ_NAMING = {
    "I": "(I,1)", "-I": "(-I,1)",
    "C": "(-Theta,-1)", "-C": "(Theta,-1)",
    "P": "(P,1)", "-P": "(-P,1)",
    "T": "(P,-1)", "-T": "(-P,-1)",
    "CP": "(CT,-1)", "-CP": "(-CT,-1)",
    "CT": "(CT,1)", "-CT": "(-CT,1)",
    "PT": "(-I,-1)", "-PT": "(I,-1)",
    "Theta": "(Theta,1)", "-Theta": "(-Theta,1)",
}

# the element set of D4 x| Z2 as listed (D4 part by token)
PSI_EQ_ELEMENTS = (
    "(I,1)", "(I,-1)", "(-I,1)", "(-I,-1)", "(P,1)", "(P,-1)", "(-P,1)", "(-P,-1)",
    "(CT,1)", "(CT,-1)", "(-CT,1)", "(-CT,-1)", "(Theta,1)", "(Theta,-1)", "(-Theta,1)", "(-Theta,-1)",
)

# two-dimensional irreps: C = +i sigma1 and C = -i sigma1 on top of the D4 matrices
PHI9_CHOICE = {
    "C": matrix("0 i; i 0"),
    "P": D4_TWO_DIM_IMAGES["P"],
    "T": matrix("i 0; 0 i"),
}
PHI9_CONSEQUENCES = {"T": matrix("i 0; 0 i"), "CP": matrix("i 0; 0 -i"), "PT": matrix("0 -i; i 0")}
PHI10_CONSEQUENCES = {"T": matrix("-i 0; 0 -i"), "CP": matrix("-i 0; 0 i"), "PT": matrix("0 i; -i 0")}

# pinned 2-dim irrep of Q (the tensored form in the operator-group table)
Q_TWO_DIM = {"ι": matrix("i 0; 0 -i"), "γ": matrix("0 1; -1 0"), "κ": matrix("0 i; i 0")}

# order of the Z2^3 irreps: phi_ijk = psi_i psi_j psi_k
G_A_IRREP_CODES = ("111", "211", "121", "112", "221", "212", "122", "222")

# class listings
PSI_HAT_CLASSES = (
    ("(1,e)",), ("(1,a)",), ("(-1,e)",), ("(-1,a)",),
    ("(ι,e)", "(-ι,e)"), ("(ι,a)", "(-ι,a)"), ("(γ,e)", "(-γ,e)"),
    ("(γ,a)", "(-γ,a)"), ("(κ,e)", "(-κ,e)"), ("(κ,a)", "(-κ,a)"),
)
PSI_EQ_CLASSES = (
    ("I",), ("-I",), ("C", "-C"), ("T",), ("-T",), ("P", "-P"),
    ("CP", "-CP"), ("CT", "-CT"), ("PT", "-PT"), ("Theta", "-Theta"),
)

# invariant subgroups of D4 x| Z2 and the non-trivial coset of each
C4XZ2_ELEMENTS = ("(I,1)", "(I,-1)", "(-I,1)", "(-I,-1)", "(P,1)", "(P,-1)", "(-P,1)", "(-P,-1)")
Q_IN_PSI_EQ = ("I", "C", "P", "CP", "-I", "-C", "-P", "-CP")
QUOTIENT_NONTRIVIAL_COSETS = {
    "D4": ("C", "T", "CP", "PT", "-C", "-T", "-CP", "-PT"),
    "C4xZ2": ("C", "CP", "CT", "Theta", "-C", "-CP", "-CT", "-Theta"),
    "Q": ("T", "CT", "PT", "Theta", "-T", "-CT", "-PT", "-Theta"),
}

# (operator-group index, Dirac-equation-group index) pairs of equal 1-dim irreps
ONE_DIM_IDENTIFICATIONS = ((1, 1), (2, 3), (3, 4), (4, 2), (5, 8), (6, 6), (7, 7), (8, 5))

# numeric claims made in the text
QED_ORDER = 128
QED_IRREP_COUNTS = {"total": 80, "dim1": 64, "dim2": 16}
PSI_HAT_ORDER = 16
PSI_HAT_IRREP_COUNT = 10
G_A_ORDER = 8
G_A_IRREP_COUNT = 8
PSI_EQ_CLASS_COUNT = 10
PSI_EQ_DIM_SQUARE_SUM_CLAIM = 10
PSI_HAT_Z2_SUBGROUP_CLAIM = (("I", "C"),)
PSI_EQ_Z2_SUBGROUPS = (("I", "CT"), ("I", "PT"), ("I", "Theta"))


# ---------------------------------------------------------------------------
# tables
# ---------------------------------------------------------------------------

TABLE1 = PaperFixture(
    table_id=1,
    group_id="Q",
    kind="classes",
    columns=("1", "-1", "ι", "γ", "κ"),
    headers=("[1]", "[-1]", "2[ι]", "2[γ]", "2[κ]"),
    sizes=(1, 1, 2, 2, 2),
    rows=(
        ("χ1", _row("1 1 1 1 1")),
        ("χ2", _row("1 1 1 -1 -1")),
        ("χ3", _row("1 1 -1 1 -1")),
        ("χ4", _row("1 1 -1 -1 1")),
        ("χ5", _row("2 -2 0 0 0")),
    ),
)

_T2_TOKENS = ("I", "C", "-I", "-C", "P", "CP", "-P", "-CP", "T", "CT", "-T", "-CT", "PT", "Theta", "-PT", "-Theta")
_T2_PAIRS = ("(1,e)", "(1,a)", "(-1,e)", "(-1,a)", "(ι,e)", "(ι,a)", "(-ι,e)", "(-ι,a)",
             "(γ,e)", "(γ,a)", "(-γ,e)", "(-γ,a)", "(κ,e)", "(κ,a)", "(-κ,e)", "(-κ,a)")

TABLE2 = PaperFixture(
    table_id=2,
    group_id="G_psi_hat",
    kind="elements",
    columns=_T2_TOKENS,
    headers=("Î", "Ĉ", "-Î", "-Ĉ", "P̂", "Ĉ*P̂", "-P̂", "-Ĉ*P̂", "T̂", "Ĉ*T̂", "-T̂", "-Ĉ*T̂", "P̂*T̂", "Θ̂", "-P̂*T̂", "-Θ̂"),
    sizes=(1,) * 16,
    key_type="token",
    aliases=_T2_PAIRS,
    rows=(
        ("φ1", _row("1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1")),
        ("φ2", _row("1 -1 1 -1 1 -1 1 -1 1 -1 1 -1 1 -1 1 -1")),
        ("φ3", _row("1 1 1 1 1 1 1 1 -1 -1 -1 -1 -1 -1 -1 -1")),
        ("φ4", _row("1 -1 1 -1 1 -1 1 -1 -1 1 -1 1 -1 1 -1 1")),
        ("φ5", _row("1 1 1 1 -1 -1 -1 -1 1 1 1 1 -1 -1 -1 -1")),
        ("φ6", _row("1 -1 1 -1 -1 1 -1 1 1 -1 1 -1 -1 1 -1 1")),
        ("φ7", _row("1 1 1 1 -1 -1 -1 -1 -1 -1 -1 -1 1 1 1 1")),
        ("φ8", _row("1 -1 1 -1 -1 1 -1 1 -1 1 -1 1 1 -1 1 -1")),
        ("φ9", _mrow("1 0; 0 1 | 1 0; 0 1 | -1 0; 0 -1 | -1 0; 0 -1 | i 0; 0 -i | i 0; 0 -i | -i 0; 0 i | -i 0; 0 i"
                     " | 0 1; -1 0 | 0 1; -1 0 | 0 -1; 1 0 | 0 -1; 1 0 | 0 i; i 0 | 0 i; i 0 | 0 -i; -i 0 | 0 -i; -i 0")),
        ("φ10", _mrow("1 0; 0 1 | -1 0; 0 -1 | -1 0; 0 -1 | 1 0; 0 1 | i 0; 0 -i | -i 0; 0 i | -i 0; 0 i | i 0; 0 -i"
                      " | 0 1; -1 0 | 0 -1; 1 0 | 0 -1; 1 0 | 0 1; -1 0 | 0 i; i 0 | 0 -i; -i 0 | 0 -i; -i 0 | 0 i; i 0")),
    ),
)

TABLE3 = PaperFixture(
    table_id=3,
    group_id="G_psi_hat",
    kind="classes",
    columns=("(1,e)", "(1,a)", "(-1,e)", "(-1,a)", "(ι,e)", "(ι,a)", "(γ,e)", "(γ,a)", "(κ,e)", "(κ,a)"),
    headers=("[(1,e)]", "[(1,a)]", "[(-1,e)]", "[(-1,a)]", "2[(ι,e)]", "2[(ι,a)]", "2[(γ,e)]", "2[(γ,a)]",
             "2[(κ,e)]", "2[(κ,a)]"),
    sizes=(1, 1, 1, 1, 2, 2, 2, 2, 2, 2),
    rows=(
        ("λ1", _row("1 1 1 1 1 1 1 1 1 1")),
        ("λ2", _row("1 -1 1 -1 1 -1 1 -1 1 -1")),
        ("λ3", _row("1 1 1 1 1 1 -1 -1 -1 -1")),
        ("λ4", _row("1 -1 1 -1 1 -1 -1 1 -1 1")),
        ("λ5", _row("1 1 1 1 -1 -1 1 1 -1 -1")),
        ("λ6", _row("1 -1 1 -1 -1 1 1 -1 -1 1")),
        ("λ7", _row("1 1 1 1 -1 -1 -1 -1 1 1")),
        ("λ8", _row("1 -1 1 -1 -1 1 -1 1 1 -1")),
        ("λ9", _row("2 2 -2 -2 0 0 0 0 0 0")),
        ("λ10", _row("2 -2 -2 2 0 0 0 0 0 0")),
    ),
)

TABLE4 = PaperFixture(
    table_id=4,
    group_id="G_A",
    kind="elements",
    columns=("I", "C", "P", "T", "PT", "CP", "CT", "Theta"),
    headers=("Î", "Ĉ", "P̂", "T̂", "P̂*T̂", "Ĉ*P̂", "Ĉ*T̂", "Θ̂"),
    sizes=(1,) * 8,
    key_type="token",
    aliases=("(e,e,e)", "(a,e,e)", "(e,a,e)", "(e,e,a)", "(e,a,a)", "(a,a,e)", "(a,e,a)", "(a,a,a)"),
    rows=(
        ("Φ1", _row("1 1 1 1 1 1 1 1")),
        ("Φ2", _row("1 -1 1 1 1 -1 -1 -1")),
        ("Φ3", _row("1 1 -1 1 -1 -1 1 -1")),
        ("Φ4", _row("1 1 1 -1 -1 1 -1 -1")),
        ("Φ5", _row("1 -1 -1 1 -1 1 -1 1")),
        ("Φ6", _row("1 -1 1 -1 -1 -1 1 1")),
        ("Φ7", _row("1 1 -1 -1 1 -1 -1 1")),
        ("Φ8", _row("1 -1 -1 -1 1 1 1 -1")),
    ),
)

TABLE5 = PaperFixture(
    table_id=5,
    group_id="G_psi_eq",
    kind="elements",
    columns=_T2_TOKENS,
    headers=("I", "C", "-I", "-C", "P", "CP", "-P", "-CP", "T", "CT", "-T", "-CT", "PT", "Θ", "-PT", "-Θ"),
    sizes=(1,) * 16,
    key_type="token",
    rows=(
        ("φ1", _row("1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1")),
        ("φ2", _row("1 -1 1 -1 1 -1 1 -1 -1 1 -1 1 -1 1 -1 1")),
        ("φ3", _row("1 -1 1 -1 1 -1 1 -1 1 -1 1 -1 1 -1 1 -1")),
        ("φ4", _row("1 1 1 1 1 1 1 1 -1 -1 -1 -1 -1 -1 -1 -1")),
        ("φ5", _row("1 -1 1 -1 -1 1 -1 1 -1 1 -1 1 1 -1 1 -1")),
        ("φ6", _row("1 -1 1 -1 -1 1 -1 1 1 -1 1 -1 -1 1 -1 1")),
        ("φ7", _row("1 1 1 1 -1 -1 -1 -1 -1 -1 -1 -1 1 1 1 1")),
        ("φ8", _row("1 − 1 − -1 -1 -1 -1 1 1 1 1 -1 -1 -1 -1")),
        ("φ9", _mrow("1 0; 0 1 | 0 i; i 0 | -1 0; 0 -1 | 0 -i; -i 0 | 0 -1; 1 0 | i 0; 0 -i | 0 1; -1 0 | -i 0; 0 i"
                     " | i 0; 0 i | 0 -1; -1 0 | -i 0; 0 -i | 0 1; 1 0 | 0 -i; i 0 | -1 0; 0 1 | 0 i; -i 0 | 1 0; 0 -1")),
        ("φ10", _mrow("1 0; 0 1 | 0 -i; -i 0 | -1 0; 0 -1 | 0 i; i 0 | 0 -1; 1 0 | -i 0; 0 i | 0 1; -1 0 | i 0; 0 -i"
                      " | -i 0; 0 -i | 0 -1; -1 0 | i 0; 0 i | 0 -1; -1 0 | 0 i; -i 0 | -1 0; 0 1 | 0 -i; i 0 | 1 0; 0 -1")),
    ),
    defects=("table5-phi8-glyphs", "table5-phi10-minus-CT"),
)

TABLE6 = PaperFixture(
    table_id=6,
    group_id="G_psi_eq",
    kind="classes",
    columns=("I", "-I", "C", "T", "-T", "P", "CP", "CT", "PT", "Theta"),
    headers=("[I]", "[-I]", "2[C]", "[T]", "[-T]", "2[P]", "2[CP]", "2[CT]", "2[PT]", "2[Θ]"),
    sizes=(1, 1, 2, 1, 1, 2, 2, 2, 2, 2),
    key_type="token",
    rows=(
        ("χ1", _row("1 1 1 1 1 1 1 1 1 1")),
        ("χ2", _row("1 1 -1 -1 -1 1 -1 1 -1 1")),
        ("χ3", _row("1 1 -1 1 1 1 -1 -1 1 -1")),
        ("χ4", _row("1 1 1 -1 -1 1 1 -1 -1 -1")),
        ("χ5", _row("1 1 -1 -1 -1 -1 1 1 1 -1")),
        ("χ6", _row("1 1 -1 1 1 -1 1 -1 -1 1")),
        ("χ7", _row("1 1 1 -1 -1 -1 -1 -1 1 1")),
        ("χ8", _row("1 1 1 1 1 -1 -1 1 -1 -1")),
        ("χ9", _row("2 -2 0 2i -2i 0 0 0 0 0")),
        ("χ10", _row("2 -2 0 -2i 2i 0 0 0 0 0")),
    ),
)

TABLES = (TABLE1, TABLE2, TABLE3, TABLE4, TABLE5, TABLE6)


# ---------------------------------------------------------------------------
# known print defects
# ---------------------------------------------------------------------------

DEFECTS = (
    PrintDefect(
        defect_id="g_A-map-T-row",
        location="operator group of A_mu -> Z2^3 map, row T",
        printed="T -> (e,a,a), identical to the PT row",
        corrected="T -> (e,e,a)",
        derivation="group law: the printed map sends T and PT to the same element so it is not injective and "
                   "P*T would map to (e,e,e); the Z2^3 table header uses T -> (e,e,a)",
    ),
    PrintDefect(
        defect_id="table5-phi8-glyphs",
        location="Dirac-equation group irreps, row φ8, columns C and -C",
        printed="bare '−' glyph",
        corrected="1",
        derivation="Table 6 consistency: χ8 is 1 on the class {C,-C}; the identification φ5 = φ8 with the operator "
                   "group also gives 1",
        table_id=5,
        row="φ8",
        columns=("C", "-C"),
    ),
    PrintDefect(
        defect_id="table5-phi10-minus-CT",
        location="Dirac-equation group irreps, row φ10, column -CT",
        printed="[[0,-1],[-1,0]] (the CT matrix repeated)",
        corrected="[[0,1],[1,0]]",
        derivation="group law: φ10(-CT) = φ10(-I) φ10(CT) = -(-σ1) = σ1",
        table_id=5,
        row="φ10",
        columns=("-CT",),
    ),
    PrintDefect(
        defect_id="dim-square-sum-sentence",
        location="Dirac-equation group text: 'the sum of the squares of the dimensions ... must be 10'",
        printed="10",
        corrected="16",
        derivation="sum of squared dimensions equals the group order: 8*1 + 2*4 = 16",
    ),
    PrintDefect(
        defect_id="only-one-z2-sentence",
        location="closing text: 'in G(psi-hat) there is only one Z2 subgroup'",
        printed="1 subgroup of order 2, {I, C}",
        corrected="3 subgroups of order 2",
        derivation="exhaustive subgroup search: -I, C and -C are the involutions of Q x Z2",
    ),
)

DEFECT_IDS = tuple(d.defect_id for d in DEFECTS)


def defect(defect_id: str) -> PrintDefect:
    for d in DEFECTS:
        if d.defect_id == defect_id:
            return d
    raise KeyError(defect_id)
