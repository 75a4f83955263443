"""Concrete CPT groups, their element naming, and their irreducible representations.

Group elements carry two names: the structural label produced by the
construction (``(ι,a)``, ``(P,-1)``, ``(e,a,a)``) and a CPT token such as
``-CP`` or ``Theta``.  Tokens are words in the generators C, P, T, with Theta
standing for CPT and a leading minus meaning multiplication by -I.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from . import fixtures as fx
from .exact_arith import I_UNIT, CMatrix, mat_trace
from .group_core import (
    ActionTable, FiniteGroup, GroupHom, Permutation, SignedQuaternion, action_from_images, cyclic_group,
    direct_product, generate_group, quotient_group, semidirect_product,
)
from .repr_theory import (
    Character, CharacterTable, Representation, complete_by_orthogonality, one_dim_rep,
    pullback_rep, tensor_product_rep, trivial_rep,
)

TOKENS = ("I", "C", "P", "T", "CP", "CT", "PT", "Theta")
_LETTERS = {"I": "", "C": "C", "P": "P", "T": "T", "CP": "CP", "CT": "CT", "PT": "PT", "Theta": "CPT"}
_PLAIN = {"I": "I", "C": "C", "P": "P", "T": "T", "CP": "CP", "CT": "CT", "PT": "PT", "Theta": "Θ"}
_HAT = {"I": "Î", "C": "Ĉ", "P": "P̂", "T": "T̂", "CP": "Ĉ*P̂", "CT": "Ĉ*T̂", "PT": "P̂*T̂", "Theta": "Θ̂"}


@dataclass(frozen=True)
class CptLabel:
    token: str
    negative: bool = False
    hat: bool = False

    def __post_init__(self):
        if self.token not in TOKENS:
            raise ValueError(f"unknown CPT token {self.token!r}")

    @classmethod
    def parse(cls, text: str, hat: bool = False) -> CptLabel:
        neg = text.startswith("-")
        body = text[1:] if neg else text
        reverse = {**{v: k for k, v in _PLAIN.items()}, **{v: k for k, v in _HAT.items()}}
        return cls(reverse.get(body, body), neg, hat)

    @property
    def key(self) -> str:
        """Hat-free ASCII form, e.g. '-CP'; used to match across groups."""
        return ("-" if self.negative else "") + self.token

    def __str__(self) -> str:
        return ("-" if self.negative else "") + (_HAT if self.hat else _PLAIN)[self.token]


@dataclass(frozen=True)
class CptGroup:
    """A FiniteGroup together with one CPT token per element."""

    group: FiniteGroup
    cpt: tuple[CptLabel, ...]

    def __post_init__(self):
        if len(self.cpt) != self.group.order:
            raise ValueError("one CPT label per element required")
        if len({c.key for c in self.cpt}) != self.group.order:
            raise ValueError("CPT labels must be distinct")

    def element(self, token: str) -> int:
        key = CptLabel.parse(token).key
        for i, c in enumerate(self.cpt):
            if c.key == key:
                return i
        raise KeyError(f"{self.group.name} has no element {token!r}")

    def token(self, x: int) -> CptLabel:
        return self.cpt[x]

    def names(self) -> tuple[str, ...]:
        return tuple(str(c) for c in self.cpt)

    def word_violations(self) -> list[str]:
        """Elements whose token disagrees with the product of its letters.

        ``CP`` must be C*P, ``Theta`` must be C*P*T and ``-X`` must be (-I)*X.
        """
        g = self.group
        out = []
        for x, lab in enumerate(self.cpt):
            y = g.identity
            for letter in _LETTERS[lab.token]:
                y = g.mul(y, self.element(letter))
            if lab.negative:
                y = g.mul(self.element("-I"), y)
            if y != x:
                out.append(f"{lab} is {g.labels[x]} but its word evaluates to {g.labels[y]}")
        return out


# ---------------------------------------------------------------------------
# field transformations of the 4-potential
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FieldTransform:
    """A_mu(x, t) -> overall_sign * A^(lowered?)_mu((-1)^s x, (-1)^t t).

    Lowering the index with the metric diag(1,-1,-1,-1) flips the sign of the
    three spatial components.
    """

    overall_sign: int = 1
    lower_index: int = 0
    space_flip: int = 0
    time_flip: int = 0

    def __mul__(self, other: FieldTransform) -> FieldTransform:
        return FieldTransform(
            self.overall_sign * other.overall_sign,
            self.lower_index ^ other.lower_index,
            self.space_flip ^ other.space_flip,
            self.time_flip ^ other.time_flip,
        )

    def component_sign(self, mu: int) -> int:
        """Net sign picked up by component mu (0 = time, 1..3 = space)."""
        metric = -1 if (self.lower_index and mu > 0) else 1
        return self.overall_sign * metric

    def token(self) -> str:
        # basis C = sign flip, P = lower + space, T = lower + time
        letters = ("C" if self.overall_sign < 0 else "") + ("P" if self.space_flip else "") + ("T" if self.time_flip else "")
        return {"": "I", "CPT": "Theta"}.get(letters, letters)

    def __str__(self) -> str:
        sign = "-" if self.overall_sign < 0 else ""
        idx = "A_mu" if self.lower_index else "A^mu"
        x = "-x" if self.space_flip else "x"
        t = "-t" if self.time_flip else "t"
        return f"{sign}{idx}({x},{t})"


FIELD_C = FieldTransform(overall_sign=-1)
FIELD_P = FieldTransform(lower_index=1, space_flip=1)
FIELD_T = FieldTransform(lower_index=1, time_flip=1)


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

ID2 = fx.matrix("1 0; 0 1")
SIGMA1 = fx.matrix("0 1; 1 0")
SIGMA2 = fx.matrix("0 -i; i 0")
SIGMA3 = fx.matrix("1 0; 0 -1")


# ---------------------------------------------------------------------------
# groups
# ---------------------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def build_quaternion() -> FiniteGroup:
    return generate_group([SignedQuaternion(1, "i"), SignedQuaternion(1, "j")], lambda a, b: a * b, name="Q")


@functools.lru_cache(maxsize=None)
def build_z2() -> FiniteGroup:
    return cyclic_group(2, name="Z2", labels=["e", "a"])


@functools.lru_cache(maxsize=None)
def build_z2_signed() -> FiniteGroup:
    return cyclic_group(2, name="Z2", labels=["1", "-1"])


def _labels_from_pairs(g: FiniteGroup, pairs: dict[str, str], hat: bool) -> tuple[CptLabel, ...]:
    inverse = {lab: tok for tok, lab in pairs.items()}
    return tuple(CptLabel.parse(inverse[lab], hat=hat) for lab in g.labels)


@functools.lru_cache(maxsize=None)
def build_g_psi_hat() -> CptGroup:
    """Q x Z2 with the operator-group names attached."""
    g = direct_product(build_quaternion(), build_z2(), name="G_psi_hat")
    return CptGroup(g, _labels_from_pairs(g, fx.PSI_HAT_NAMING, hat=True))


def _word_labels(g: FiniteGroup, generators: dict[str, int], hat: bool) -> tuple[CptLabel, ...]:
    names: dict[int, CptLabel] = {}
    for tok in TOKENS:
        y = g.identity
        for letter in _LETTERS[tok]:
            y = g.mul(y, generators[letter])
        names[y] = CptLabel(tok, hat=hat)
    if len(names) != g.order:
        raise ValueError("generator words do not name every element")
    return tuple(names[x] for x in range(g.order))


@functools.lru_cache(maxsize=None)
def build_g_A() -> CptGroup:
    """Z2^3 with C, P, T sent to the three coordinate generators."""
    z = build_z2()
    g = direct_product(z, z, z, name="G_A")
    gens = {"C": g.index("(a,e,e)"), "P": g.index("(e,a,e)"), "T": g.index("(e,e,a)")}
    return CptGroup(g, _word_labels(g, gens, hat=True))


@functools.lru_cache(maxsize=None)
def derive_g_A_from_field_action() -> tuple[CptGroup, GroupHom]:
    """Close the C, P, T transformations of the 4-potential and match them to Z2^3."""
    g = generate_group([FIELD_C, FIELD_P, FIELD_T], lambda a, b: a * b, label=str, name="G_A(field)")
    cpt = tuple(CptLabel(t.token(), hat=True) for t in g.elements)
    field_group = CptGroup(g, cpt)
    target = build_g_A()
    hom = GroupHom(g, target.group, tuple(target.element(c.key) for c in cpt))
    return field_group, hom


@functools.lru_cache(maxsize=None)
def build_d4() -> FiniteGroup:
    """Symmetries of the square as permutations of its vertices 1..4."""
    return generate_group(
        [Permutation.parse("(1234)", 4), Permutation.parse("(13)", 4)],
        lambda a, b: a * b,
        label=lambda p: str(p) if p.cycles() else "I",
        name="D4",
    )


@functools.lru_cache(maxsize=None)
def d4_matrix_group() -> CptGroup:
    """The 2x2 real matrices I, -I, +-P, +-Theta, +-CT realising D4."""
    names = {m: tok for tok, m in fx.D4_TWO_DIM_IMAGES.items()}
    g = generate_group([fx.D4_TWO_DIM_IMAGES["P"], fx.D4_TWO_DIM_IMAGES["CT"]], lambda a, b: a @ b,
                       label=lambda m: names[m], name="D4(matrices)")
    return CptGroup(g, tuple(CptLabel.parse(lab) for lab in g.labels))


def d4_relabel_hom() -> GroupHom:
    """Permutation D4 -> matrix D4 through the published cycle -> token dictionary."""
    src = build_d4()
    tgt = d4_matrix_group()
    return GroupHom(src, tgt.group, tuple(tgt.element(fx.D4_CYCLE_NAMES[lab]) for lab in src.labels))


@functools.lru_cache(maxsize=None)
def d4_action() -> ActionTable:
    d4 = build_d4()
    z2 = build_z2_signed()
    flip = {d4.index(a): d4.index(b) for a, b in fx.D4_ACTION_FLIP.items()}
    return action_from_images(z2, d4, {z2.index("-1"): flip})


@functools.lru_cache(maxsize=None)
def build_g_psi_eq() -> CptGroup:
    """D4 x| Z2 with the Dirac-equation group names attached."""
    d4 = build_d4()
    z2 = build_z2_signed()
    g = semidirect_product(d4, z2, d4_action(), name="G_psi_eq")
    # display the D4 component by token rather than by cycle
    relabel = []
    for lab in g.labels:
        cyc, h = lab[1:-1].rsplit(",", 1)
        relabel.append(f"({fx.D4_CYCLE_NAMES[cyc]},{h})")
    g2 = g.relabel(relabel)
    g2.semidirect_info = g.semidirect_info
    return CptGroup(g2, _labels_from_pairs(g2, fx.PSI_EQ_NAMING, hat=False))


@functools.lru_cache(maxsize=None)
def pauli_word_group() -> CptGroup:
    """Group generated by C = i sigma1, P = -i sigma2, T = iI, each element named by its word."""
    gens = {t: fx.PHI9_CHOICE[t] for t in ("C", "P", "T")}
    g = generate_group([gens["C"], gens["P"], gens["T"]], lambda a, b: a @ b, label=str, name="G_psi_eq(matrices)")
    words: dict[CMatrix, CptLabel] = {}
    for tok in TOKENS:
        m = ID2
        for letter in _LETTERS[tok]:
            m = m @ gens[letter]
        words[m] = CptLabel(tok)
        words[-m] = CptLabel(tok, negative=True)
    return CptGroup(g, tuple(words[m] for m in g.elements))


def relabel_hom(source: CptGroup, target: CptGroup, naming: Optional[dict[str, str]] = None) -> GroupHom:
    """Map x -> element of target whose token is naming[token(x)] (identity naming by default)."""
    out = []
    for c in source.cpt:
        key = naming[c.key] if naming else c.key
        out.append(target.element(key))
    return GroupHom(source.group, target.group, tuple(out))


@functools.lru_cache(maxsize=None)
def build_qed_group() -> FiniteGroup:
    return direct_product(build_g_psi_hat().group, build_g_A().group, name="G_QED")


@functools.lru_cache(maxsize=None)
def build_d4xz2() -> FiniteGroup:
    return direct_product(build_d4(), build_z2(), name="D4xZ2")


@functools.lru_cache(maxsize=None)
def build_c4() -> FiniteGroup:
    return cyclic_group(4, name="C4")


@functools.lru_cache(maxsize=None)
def build_c4xz2() -> FiniteGroup:
    return direct_product(build_c4(), build_z2(), name="C4xZ2")


# ---------------------------------------------------------------------------
# irreducible representations
# ---------------------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def irreps_quaternion() -> tuple[Representation, ...]:
    q = build_quaternion()
    i, j = q.index("ι"), q.index("γ")
    reps = []
    for n, (si, sj) in enumerate([(1, 1), (1, -1), (-1, 1), (-1, -1)], start=1):
        reps.append(Representation.from_generators(q, {i: CMatrix.scalar(si), j: CMatrix.scalar(sj)}, name=f"φ{n}"))
    reps.append(Representation.from_generators(q, {i: fx.Q_TWO_DIM["ι"], j: fx.Q_TWO_DIM["γ"]}, name="φ5"))
    return tuple(reps)


@functools.lru_cache(maxsize=None)
def irreps_z2(signed: bool = False) -> tuple[Representation, ...]:
    z = build_z2_signed() if signed else build_z2()
    psi1 = trivial_rep(z)
    psi1.name = "ψ1"
    return (psi1, Representation(z, [CMatrix.scalar(1), CMatrix.scalar(-1)], name="ψ2"))


@functools.lru_cache(maxsize=None)
def irreps_g_psi_hat() -> tuple[Representation, ...]:
    """Ten tensor products, interleaved: (chi_a x psi1, chi_a x psi2) for a = 1..4, then the 2-dim pair."""
    g = build_g_psi_hat().group
    q_reps = irreps_quaternion()
    z_reps = irreps_z2()
    out = []
    for qr in q_reps:
        for zr in z_reps:
            out.append(tensor_product_rep(qr, zr, group=g))
    for k, r in enumerate(out, start=1):
        r.name = f"φ{k}"
    return tuple(out)


@functools.lru_cache(maxsize=None)
def irreps_g_A() -> tuple[Representation, ...]:
    g = build_g_A().group
    z = irreps_z2()
    out = []
    for k, code in enumerate(fx.G_A_IRREP_CODES, start=1):
        r = tensor_product_rep(*(z[int(c) - 1] for c in code), group=g)
        r.name = f"Φ{k}"
        out.append(r)
    return tuple(out)


def g_psi_eq_subgroups() -> dict[str, tuple[int, ...]]:
    """The three index-2 subgroups used for the pulled-back linear representations."""
    cg = build_g_psi_eq()
    g = cg.group
    one = build_z2_signed().identity
    d4 = tuple(x for x in range(g.order) if g.semidirect_info.decode(x)[1] == one)
    c4z2 = tuple(sorted(g.index(lab) for lab in fx.C4XZ2_ELEMENTS))
    q = tuple(sorted(cg.element(t) for t in fx.Q_IN_PSI_EQ))
    return {"D4": d4, "C4xZ2": c4z2, "Q": q}


def sign_pullback(g: FiniteGroup, normal: Sequence[int], name: str) -> Representation:
    quo, proj = quotient_group(g, normal)
    sign = Representation(quo, [CMatrix.scalar(1 if x == quo.identity else -1) for x in range(quo.order)], name="sign")
    return pullback_rep(sign, proj, name=name)


def two_dim_g_psi_eq(c_sign: int, name: str) -> Representation:
    """D4 part from the 2x2 realisation, C sent to c_sign * i * sigma1."""
    cg = build_g_psi_eq()
    images = {
        cg.element("P"): fx.D4_TWO_DIM_IMAGES["P"],
        cg.element("CT"): fx.D4_TWO_DIM_IMAGES["CT"],
        cg.element("C"): SIGMA1.scale(I_UNIT * c_sign),
    }
    return Representation.from_generators(cg.group, images, name=name)


@functools.lru_cache(maxsize=None)
def irreps_g_psi_eq() -> tuple[Representation, ...]:
    """phi1 trivial; phi2..phi4 pulled back from quotients by D4, C4xZ2, Q;
    phi5..phi8 completed by orthogonality; phi9, phi10 with C = +-i sigma1.

    The completed rows come out as an unordered set; they are numbered by
    matching against the published table so later comparisons can refer to
    them by index.
    """
    g = build_g_psi_eq().group
    subs = g_psi_eq_subgroups()
    phi1 = trivial_rep(g)
    phi1.name = "φ1"
    pulled = [sign_pullback(g, subs[key], f"φ{k}") for k, key in zip((2, 3, 4), ("D4", "C4xZ2", "Q"))]
    phi9 = two_dim_g_psi_eq(1, "φ9")
    phi10 = two_dim_g_psi_eq(-1, "φ10")
    known = [phi1, *pulled, phi9, phi10]
    partial = CharacterTable.from_representations(known)
    full = complete_by_orthogonality(partial)
    completed = [full.character(i) for i in range(len(known), len(full.rows))]
    published = fixture_characters(fx.TABLE6)
    ordered: list[Optional[Representation]] = [None] * 4
    for chi in completed:
        k = next((k for k in range(4, 8) if published[k] == chi), None)
        if k is None:
            # no published counterpart: keep it, numbered after the matched ones
            k = next(idx + 4 for idx in range(4) if ordered[idx] is None)
        ordered[k - 4] = one_dim_rep(chi, name=f"φ{k + 1}")
    return (phi1, *pulled, *ordered, phi9, phi10)


@functools.lru_cache(maxsize=None)
def irreps_d4() -> tuple[Representation, ...]:
    d4 = build_d4()
    r, s = d4.index("(1234)"), d4.index("(13)")
    reps = [Representation.from_generators(d4, {r: CMatrix.scalar(a), s: CMatrix.scalar(b)}, name=f"φ{k}")
            for k, (a, b) in enumerate([(1, 1), (1, -1), (-1, 1), (-1, -1)], start=1)]
    reps.append(Representation.from_generators(d4, {r: fx.D4_TWO_DIM_IMAGES["P"], s: fx.D4_TWO_DIM_IMAGES["CT"]},
                                               name="φ5"))
    return tuple(reps)


def _product_irreps(group: FiniteGroup, left: Sequence[Representation], right: Sequence[Representation]):
    out = []
    for a in left:
        for b in right:
            r = tensor_product_rep(a, b, group=group)
            r.name = f"{a.name}⊗{b.name}"
            out.append(r)
    return tuple(out)


@functools.lru_cache(maxsize=None)
def irreps_d4xz2() -> tuple[Representation, ...]:
    return _product_irreps(build_d4xz2(), irreps_d4(), irreps_z2())


@functools.lru_cache(maxsize=None)
def irreps_c4xz2() -> tuple[Representation, ...]:
    c4 = build_c4()
    c4_reps = [Representation.from_generators(c4, {1: CMatrix.scalar(I_UNIT ** k)}, name=f"ω{k}") for k in range(4)]
    return _product_irreps(build_c4xz2(), c4_reps, irreps_z2())


@functools.lru_cache(maxsize=None)
def irreps_qed() -> tuple[Representation, ...]:
    return _product_irreps(build_qed_group(), irreps_g_psi_hat(), irreps_g_A())


# ---------------------------------------------------------------------------
# registry of named groups
# ---------------------------------------------------------------------------

GROUP_IDS = ("Q", "Z2", "Z2^3", "D4", "C4xZ2", "G_psi_hat", "G_A", "G_psi_eq", "G_QED", "D4xZ2")

_BUILDERS: dict[str, Callable[[], FiniteGroup]] = {
    "Q": build_quaternion,
    "Z2": build_z2,
    "Z2^3": lambda: build_g_A().group,
    "D4": build_d4,
    "C4xZ2": build_c4xz2,
    "G_psi_hat": lambda: build_g_psi_hat().group,
    "G_A": lambda: build_g_A().group,
    "G_psi_eq": lambda: build_g_psi_eq().group,
    "G_QED": build_qed_group,
    "D4xZ2": build_d4xz2,
}

_IRREPS: dict[str, Callable[[], Sequence[Representation]]] = {
    "Q": irreps_quaternion,
    "Z2": irreps_z2,
    "Z2^3": irreps_g_A,
    "D4": irreps_d4,
    "C4xZ2": irreps_c4xz2,
    "G_psi_hat": irreps_g_psi_hat,
    "G_A": irreps_g_A,
    "G_psi_eq": irreps_g_psi_eq,
    "G_QED": irreps_qed,
    "D4xZ2": irreps_d4xz2,
}

_CPT: dict[str, Callable[[], CptGroup]] = {
    "G_psi_hat": build_g_psi_hat,
    "G_A": build_g_A,
    "G_psi_eq": build_g_psi_eq,
}


def named_group(group_id: str) -> FiniteGroup:
    try:
        return _BUILDERS[group_id]()
    except KeyError:
        raise KeyError(f"unknown group id {group_id!r}; known: {', '.join(GROUP_IDS)}") from None


def named_irreps(group_id: str) -> tuple[Representation, ...]:
    named_group(group_id)
    return tuple(_IRREPS[group_id]())


def named_cpt(group_id: str) -> Optional[CptGroup]:
    builder = _CPT.get(group_id)
    return builder() if builder else None


def constructive_table(group_id: str) -> CharacterTable:
    reps = named_irreps(group_id)
    return CharacterTable.from_representations(reps, [r.name for r in reps])


def display_names(group_id: str) -> tuple[str, ...]:
    cg = named_cpt(group_id)
    return cg.names() if cg else named_group(group_id).labels


# ---------------------------------------------------------------------------
# locating published columns
# ---------------------------------------------------------------------------

def fixture_columns(fixture: fx.PaperFixture) -> tuple[int, ...]:
    """Element index for every column key of a published table."""
    if fixture.key_type == "token":
        cg = named_cpt(fixture.group_id)
        return tuple(cg.element(k) for k in fixture.columns)
    g = named_group(fixture.group_id)
    return tuple(g.index(k) for k in fixture.columns)


def fixture_class_map(fixture: fx.PaperFixture) -> tuple[int, ...]:
    """Column of the published table covering each element; raises if columns miss or repeat a class."""
    g = named_group(fixture.group_id)
    cols = fixture_columns(fixture)
    if fixture.kind == "elements":
        if sorted(cols) != list(range(g.order)):
            raise ValueError(f"table {fixture.table_id} columns do not list every element once")
        out = [0] * g.order
        for j, x in enumerate(cols):
            out[x] = j
        return tuple(out)
    cls_cols = [g.class_of[x] for x in cols]
    if sorted(cls_cols) != list(range(len(g.classes))):
        raise ValueError(f"table {fixture.table_id} columns do not list every class once")
    by_class = {c: j for j, c in enumerate(cls_cols)}
    return tuple(by_class[g.class_of[x]] for x in range(g.order))


def _row_values(row) -> list:
    return [v if v is None or not isinstance(v, CMatrix) else mat_trace(v) for v in row]


def fixture_characters(fixture: fx.PaperFixture) -> list[Optional[Character]]:
    """Published rows as characters.

    Matrix rows become traces.  A row is None when it holds an unreadable
    entry or (for per-element tables) is not constant on classes.
    """
    g = named_group(fixture.group_id)
    where = fixture_class_map(fixture)
    out: list[Optional[Character]] = []
    for _, row in fixture.rows:
        vals = _row_values(row)
        per_class = []
        for c in g.classes:
            seen = {vals[where[x]] for x in c.members} if all(vals[where[x]] is not None for x in c.members) else {None}
            per_class.append(seen.pop() if len(seen) == 1 else None)
        out.append(None if any(v is None for v in per_class) else Character(g, tuple(per_class)))
    return out


def fixture_table(fixture: fx.PaperFixture) -> CharacterTable:
    """A published table as a CharacterTable on the matching group (rows must be readable)."""
    chars = fixture_characters(fixture)
    if any(c is None for c in chars):
        raise ValueError(f"table {fixture.table_id} has unreadable rows")
    g = named_group(fixture.group_id)
    # provenance records the route the printed rows came from
    return CharacterTable(g, g.classes, [c.values for c in chars], ["constructive"] * len(chars),
                          row_names=fixture.row_names)
