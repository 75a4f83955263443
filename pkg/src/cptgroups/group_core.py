"""Fully materialised finite groups and the searches run over them.

Every group is an element list plus a Cayley table of element indices.  The
constructions here (closure, products, quotients) all produce such tables,
and the searches (subgroups, embeddings, isomorphisms) work on indices only.
"""

from __future__ import annotations

import os
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Callable, Hashable, Iterable, Optional, Sequence

import numpy as np

DEFAULT_ORDER_CAP = 4096
ORDER_CAP_ENV = "CPTGROUPS_ORDER_CAP"


class GroupError(ValueError):
    """A table or construction violates the group axioms."""


class OrderCapExceeded(GroupError):
    pass


def order_cap() -> int:
    raw = os.environ.get(ORDER_CAP_ENV)
    if not raw:
        return DEFAULT_ORDER_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise GroupError(f"{ORDER_CAP_ENV} must be a positive integer, got {raw!r}") from None
    if cap < 1:
        raise GroupError(f"{ORDER_CAP_ENV} must be a positive integer, got {raw!r}")
    return cap


# ---------------------------------------------------------------------------
# concrete element types
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Permutation:
    """Bijection of 0..m-1; ``a * b`` applies b first, then a."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a bijection: {self.images}")

    @classmethod
    def identity(cls, m: int) -> Permutation:
        return cls(tuple(range(m)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], m: int, one_based: bool = True) -> Permutation:
        images = list(range(m))
        shift = 1 if one_based else 0
        for cyc in cycles:
            pts = [p - shift for p in cyc]
            for a, b in zip(pts, pts[1:] + pts[:1]):
                images[a] = b
        return cls(tuple(images))

    @classmethod
    def parse(cls, text: str, m: int) -> Permutation:
        """Parse 1-based cycle notation such as '(13)(24)' (single-digit points)."""
        cycles = []
        for chunk in text.replace(" ", "").split(")"):
            chunk = chunk.lstrip("(")
            if chunk:
                cycles.append([int(ch) for ch in chunk])
        return cls.from_cycles(cycles, m)

    def __mul__(self, other: Permutation) -> Permutation:
        return Permutation(tuple(self.images[x] for x in other.images))

    def __call__(self, x: int) -> int:
        return self.images[x]

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for start in range(len(self.images)):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self.images[start]
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self.images[x]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + "".join(str(p + 1) for p in c) + ")" for c in cyc)


_QMUL = {
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}
_QNAMES = {"1": "1", "i": "ι", "j": "γ", "k": "κ"}


@dataclass(frozen=True)
class SignedQuaternion:
    """One of the eight units +-1, +-iota, +-gamma, +-kappa (i, j, k internally)."""

    sign: int
    unit: str

    def __post_init__(self):
        if self.sign not in (1, -1) or self.unit not in _QNAMES:
            raise ValueError(f"bad quaternion unit {self.sign}{self.unit}")

    def __mul__(self, other: SignedQuaternion) -> SignedQuaternion:
        s, u = _QMUL[self.unit, other.unit]
        return SignedQuaternion(self.sign * other.sign * s, u)

    def __str__(self) -> str:
        return ("-" if self.sign < 0 else "") + _QNAMES[self.unit]


# ---------------------------------------------------------------------------
# FiniteGroup
# ---------------------------------------------------------------------------

class FiniteGroup:
    """Group given by a Cayley table on element indices 0..order-1.

    The table is validated on construction: Latin square, two-sided identity,
    inverses, generators generating everything and (for order <= 256) full
    associativity.
    """

    def __init__(
        self,
        cayley: Sequence[Sequence[int]] | np.ndarray,
        labels: Sequence[str],
        generators: Sequence[int],
        name: str = "G",
        elements: Optional[Sequence[Any]] = None,
        cap: Optional[int] = None,
    ):
        table = np.asarray(cayley, dtype=np.int64)
        n = table.shape[0]
        limit = order_cap() if cap is None else cap
        if n > limit:
            raise OrderCapExceeded(f"order {n} exceeds cap {limit}")
        if table.shape != (n, n) or n == 0:
            raise GroupError("cayley table must be square and non-empty")
        if len(labels) != n:
            raise GroupError("one label per element required")
        if len(set(labels)) != n:
            raise GroupError("labels must be distinct")
        self.cayley = table
        self.cayley.setflags(write=False)
        self.labels = tuple(labels)
        self.name = name
        self.elements = tuple(elements) if elements is not None else None
        self.generators = tuple(int(g) for g in generators)
        self._validate()

    def _validate(self) -> None:
        t = self.cayley
        n = self.order
        if t.min() < 0 or t.max() >= n:
            raise GroupError("cayley entries out of range")
        full = np.arange(n)
        for r in range(n):
            if not np.array_equal(np.sort(t[r]), full) or not np.array_equal(np.sort(t[:, r]), full):
                raise GroupError("cayley table is not a Latin square")
        ids = [e for e in range(n) if np.array_equal(t[e], full) and np.array_equal(t[:, e], full)]
        if len(ids) != 1:
            raise GroupError("no two-sided identity")
        self.identity = ids[0]
        inv = np.argmax(t == self.identity, axis=1)
        if not all(t[inv[a], a] == self.identity for a in range(n)):
            raise GroupError("left and right inverses disagree")
        self.inverses = tuple(int(x) for x in inv)
        if n <= 256:
            left = t[t, :]          # left[a, b, c] = (ab)c
            right = t[:, t]         # right[a, b, c] = a(bc)
            if not np.array_equal(left, right):
                raise GroupError("multiplication is not associative")
        if any(not 0 <= g < n for g in self.generators):
            raise GroupError("generator index out of range")
        if len(subgroup_closure(self, self.generators)) != n:
            raise GroupError("generators do not generate the group")

    # basic interface ----------------------------------------------------
    @property
    def order(self) -> int:
        return self.cayley.shape[0]

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"

    def mul(self, a: int, b: int) -> int:
        return int(self.cayley[a, b])

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def index(self, label: str) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise KeyError(f"{self.name} has no element labelled {label!r}") from None

    @cached_property
    def _label_index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def power(self, a: int, k: int) -> int:
        x = self.identity
        base = a if k >= 0 else self.inv(a)
        for _ in range(abs(k)):
            x = self.mul(x, base)
        return x

    def conjugate(self, x: int, by: int) -> int:
        return self.mul(self.mul(by, x), self.inv(by))

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.cayley, self.cayley.T))

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        return tuple(element_order(self, x) for x in range(self.order))

    @cached_property
    def exponent(self) -> int:
        from math import lcm
        out = 1
        for o in self.element_orders:
            out = lcm(out, o)
        return out

    @cached_property
    def center(self) -> tuple[int, ...]:
        t = self.cayley
        return tuple(z for z in range(self.order) if np.array_equal(t[z], t[:, z]))

    @cached_property
    def classes(self) -> tuple[ConjugacyClass, ...]:
        return tuple(_compute_classes(self))

    @cached_property
    def class_of(self) -> tuple[int, ...]:
        out = [0] * self.order
        for ci, cls in enumerate(self.classes):
            for m in cls.members:
                out[m] = ci
        return tuple(out)

    def relabel(self, labels: Sequence[str], name: Optional[str] = None) -> FiniteGroup:
        return FiniteGroup(self.cayley, labels, self.generators, name or self.name, self.elements)

    # serialisation ------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "order": self.order,
            "labels": list(self.labels),
            "cayley": self.cayley.tolist(),
            "generators": list(self.generators),
        }

    @classmethod
    def from_json(cls, data: dict, name: str = "G") -> FiniteGroup:
        g = cls(data["cayley"], data["labels"], data["generators"], name=data.get("name", name))
        if g.order != data["order"]:
            raise GroupError("declared order does not match the table")
        return g


@dataclass(frozen=True)
class ConjugacyClass:
    representative: int
    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)


def _compute_classes(g: FiniteGroup) -> list[ConjugacyClass]:
    t = g.cayley
    inv = np.asarray(g.inverses)
    seen = np.zeros(g.order, dtype=bool)
    out = []
    for x in range(g.order):
        if seen[x]:
            continue
        # h x h^-1 for all h at once
        orbit = np.unique(t[t[:, x], inv])
        seen[orbit] = True
        out.append(ConjugacyClass(x, tuple(int(m) for m in orbit)))
    return out


def conjugacy_classes(g: FiniteGroup) -> list[ConjugacyClass]:
    """Classes ordered by least member; each representative is that least member."""
    return list(g.classes)


def element_order(g: FiniteGroup, x: int) -> int:
    k, y = 1, x
    while y != g.identity:
        y = g.mul(y, x)
        k += 1
    return k


def subgroup_closure(g: FiniteGroup, gens: Iterable[int]) -> frozenset[int]:
    gens = list(dict.fromkeys(int(x) for x in gens))
    seen = {g.identity}
    queue = deque([g.identity])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = int(g.cayley[x, s])
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


def is_subgroup(g: FiniteGroup, members: Iterable[int]) -> bool:
    s = set(members)
    if g.identity not in s:
        return False
    return all(int(g.cayley[a, b]) in s for a in s for b in s)


def is_normal(g: FiniteGroup, members: Iterable[int]) -> bool:
    s = set(members)
    return all(g.conjugate(x, h) in s for x in s for h in range(g.order))


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------

def generate_group(
    seed_elements: Sequence[Any],
    multiply: Callable[[Any, Any], Any],
    key: Callable[[Any], Hashable] = lambda x: x,
    label: Callable[[Any], str] = str,
    name: str = "G",
    cap: Optional[int] = None,
) -> FiniteGroup:
    """Close ``seed_elements`` under ``multiply`` and tabulate the result.

    Elements are identified through ``key`` (equal keys <=> equal elements).
    The element list is breadth-first from the identity, multiplying on the
    right by the seeds in the order given.
    """
    limit = order_cap() if cap is None else cap
    seeds = list({key(s): s for s in seed_elements}.values())
    if not seeds:
        raise GroupError("need at least one seed element")
    # first pass: find the identity inside the closure
    found = {key(s): s for s in seeds}
    queue = deque(seeds)
    while queue:
        x = queue.popleft()
        for s in seeds:
            y = multiply(x, s)
            k = key(y)
            if k not in found:
                found[k] = y
                if len(found) > limit:
                    raise OrderCapExceeded(f"closure exceeds cap {limit}")
                queue.append(y)
    idents = [x for x in found.values() if key(multiply(x, x)) == key(x)]
    if len(idents) != 1:
        raise GroupError("closure does not contain a unique idempotent")
    ident = idents[0]
    elems = [ident]
    index = {key(ident): 0}
    for x in elems:
        for s in seeds:
            y = multiply(x, s)
            k = key(y)
            if k not in index:
                index[k] = len(elems)
                elems.append(y)
    if len(elems) != len(found):
        raise GroupError("inconsistent closure: multiply is not a group law on the seeds")
    n = len(elems)
    table = np.empty((n, n), dtype=np.int64)
    for i, a in enumerate(elems):
        for j, b in enumerate(elems):
            k = key(multiply(a, b))
            if k not in index:
                raise GroupError("multiply leaves the generated set")
            table[i, j] = index[k]
    gens = [index[key(s)] for s in seeds]
    return FiniteGroup(table, [label(x) for x in elems], gens, name=name, elements=elems, cap=limit)


def trivial_group(name: str = "1") -> FiniteGroup:
    return FiniteGroup([[0]], ["e"], [0], name=name)


def cyclic_group(n: int, name: Optional[str] = None, labels: Optional[Sequence[str]] = None) -> FiniteGroup:
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    labels = labels or [str(k) for k in range(n)]
    return FiniteGroup(table, labels, [1 % n], name=name or f"C{n}")


@dataclass(frozen=True)
class ProductInfo:
    factors: tuple[FiniteGroup, ...]

    def encode(self, parts: Sequence[int]) -> int:
        idx = 0
        for g, p in zip(self.factors, parts):
            idx = idx * g.order + p
        return idx

    def decode(self, idx: int) -> tuple[int, ...]:
        parts = []
        for g in reversed(self.factors):
            idx, r = divmod(idx, g.order)
            parts.append(r)
        return tuple(reversed(parts))


def direct_product(*groups: FiniteGroup, name: Optional[str] = None) -> FiniteGroup:
    """Componentwise product; element (a, b, ...) has index in mixed radix."""
    if len(groups) < 2:
        raise ValueError("direct_product needs at least two factors")
    total = 1
    for g in groups:
        total *= g.order
    if total > order_cap():
        raise OrderCapExceeded(f"product order {total} exceeds cap {order_cap()}")
    info = ProductInfo(tuple(groups))
    tables = [g.cayley for g in groups]
    # mixed-radix index arrays
    grids = np.indices([g.order for g in groups]).reshape(len(groups), -1)
    table = np.zeros((total, total), dtype=np.int64)
    for f, t in enumerate(tables):
        comp = t[np.ix_(grids[f], grids[f])]
        table = table * groups[f].order + comp
    labels = ["(" + ",".join(g.labels[p] for g, p in zip(groups, info.decode(i))) + ")" for i in range(total)]
    gens = []
    for f, g in enumerate(groups):
        for s in g.generators:
            parts = [h.identity for h in groups]
            parts[f] = s
            gens.append(info.encode(parts))
    out = FiniteGroup(table, labels, gens, name=name or "x".join(g.name for g in groups))
    out.product_info = info
    return out


def projection(prod: FiniteGroup, factor: int) -> GroupHom:
    info: ProductInfo = prod.product_info
    target = info.factors[factor]
    return GroupHom(prod, target, tuple(info.decode(i)[factor] for i in range(prod.order)))


def injection(prod: FiniteGroup, factor: int) -> GroupHom:
    info: ProductInfo = prod.product_info
    src = info.factors[factor]
    out = []
    for x in range(src.order):
        parts = [h.identity for h in info.factors]
        parts[factor] = x
        out.append(info.encode(parts))
    return GroupHom(src, prod, tuple(out))


@dataclass(frozen=True)
class ActionTable:
    """Homomorphism H -> Aut(N), stored as one element permutation of N per h."""

    acting: FiniteGroup
    target: FiniteGroup
    table: tuple[tuple[int, ...], ...]

    def apply(self, h: int, g: int) -> int:
        return self.table[h][g]

    def problems(self) -> list[str]:
        n, h = self.target, self.acting
        out = []
        if len(self.table) != h.order:
            return ["one permutation per element of the acting group is required"]
        for a, perm in enumerate(self.table):
            if sorted(perm) != list(range(n.order)):
                out.append(f"image of {h.labels[a]} is not a bijection")
                continue
            for x in range(n.order):
                for y in range(n.order):
                    if perm[n.mul(x, y)] != n.mul(perm[x], perm[y]):
                        out.append(f"image of {h.labels[a]} is not an automorphism")
                        break
                else:
                    continue
                break
        if out:
            return out
        for a in range(h.order):
            for b in range(h.order):
                ab = self.table[h.mul(a, b)]
                composed = tuple(self.table[a][self.table[b][x]] for x in range(n.order))
                if ab != composed:
                    out.append(f"action is not a homomorphism at ({h.labels[a]}, {h.labels[b]})")
        return out


def action_from_images(acting: FiniteGroup, target: FiniteGroup,
                       generator_images: dict[int, dict[int, int]]) -> ActionTable:
    """Extend automorphisms given on generators of ``acting`` to the whole group."""
    ident = tuple(range(target.order))
    perms: dict[int, tuple[int, ...]] = {acting.identity: ident}
    queue = deque([acting.identity])
    gen_perm = {h: tuple(img[x] for x in range(target.order)) for h, img in generator_images.items()}
    while queue:
        a = queue.popleft()
        for s, sp in gen_perm.items():
            b = acting.mul(a, s)
            composed = tuple(perms[a][sp[x]] for x in range(target.order))
            if b not in perms:
                perms[b] = composed
                queue.append(b)
            elif perms[b] != composed:
                raise GroupError("generator images do not define an action")
    if len(perms) != acting.order:
        raise GroupError("images given for a non-generating set")
    return ActionTable(acting, target, tuple(perms[a] for a in range(acting.order)))


@dataclass(frozen=True)
class SemidirectInfo:
    normal: FiniteGroup
    acting: FiniteGroup
    action: ActionTable

    def encode(self, g: int, h: int) -> int:
        return g * self.acting.order + h

    def decode(self, idx: int) -> tuple[int, int]:
        return divmod(idx, self.acting.order)


def semidirect_product(n: FiniteGroup, h: FiniteGroup, action: ActionTable,
                       name: Optional[str] = None) -> FiniteGroup:
    """Pairs (g, h) with (g', h')(g, h) = (g' * action(h')(g), h'h)."""
    problems = action.problems()
    if problems:
        raise GroupError("invalid action: " + "; ".join(problems))
    total = n.order * h.order
    if total > order_cap():
        raise OrderCapExceeded(f"product order {total} exceeds cap {order_cap()}")
    info = SemidirectInfo(n, h, action)
    table = np.empty((total, total), dtype=np.int64)
    for x in range(total):
        g1, h1 = info.decode(x)
        for y in range(total):
            g2, h2 = info.decode(y)
            table[x, y] = info.encode(n.mul(g1, action.apply(h1, g2)), h.mul(h1, h2))
    labels = [f"({n.labels[g]},{h.labels[k]})" for g, k in map(info.decode, range(total))]
    gens = [info.encode(s, h.identity) for s in n.generators] + [info.encode(n.identity, s) for s in h.generators]
    out = FiniteGroup(table, labels, gens, name=name or f"{n.name}:{h.name}")
    out.semidirect_info = info
    return out


def semidirect_inverse_violations(g: FiniteGroup) -> list[int]:
    """Elements whose inverse differs from (action(h^-1)(g^-1), h^-1)."""
    info: SemidirectInfo = g.semidirect_info
    n, h, act = info.normal, info.acting, info.action
    bad = []
    for x in range(g.order):
        a, b = info.decode(x)
        hinv = h.inv(b)
        expected = info.encode(act.apply(hinv, n.inv(a)), hinv)
        if g.inv(x) != expected or g.mul(expected, x) != g.identity:
            bad.append(x)
    return bad


def quotient_group(g: FiniteGroup, normal: Iterable[int], name: Optional[str] = None) -> tuple[FiniteGroup, GroupHom]:
    """G/N on cosets (ordered by least member) plus the canonical projection."""
    nset = set(int(x) for x in normal)
    if not is_subgroup(g, nset):
        raise GroupError("not a subgroup")
    if not is_normal(g, nset):
        raise GroupError("subgroup is not normal")
    coset_of = [-1] * g.order
    reps: list[int] = []
    for x in range(g.order):
        if coset_of[x] >= 0:
            continue
        ci = len(reps)
        reps.append(x)
        for m in nset:
            coset_of[g.mul(x, m)] = ci
    k = len(reps)
    table = [[coset_of[g.mul(reps[a], reps[b])] for b in range(k)] for a in range(k)]
    labels = [f"{g.labels[r]}N" for r in reps]
    gens = sorted({coset_of[s] for s in g.generators})
    quo = FiniteGroup(table, labels, gens, name=name or f"{g.name}/N")
    quo.cosets = tuple(tuple(x for x in range(g.order) if coset_of[x] == c) for c in range(k))
    return quo, GroupHom(g, quo, tuple(coset_of))


# ---------------------------------------------------------------------------
# homomorphisms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GroupHom:
    source: FiniteGroup
    target: FiniteGroup
    map: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.map[x]

    @property
    def is_injective(self) -> bool:
        return len(set(self.map)) == self.source.order

    @property
    def is_surjective(self) -> bool:
        return len(set(self.map)) == self.target.order

    def kernel(self) -> tuple[int, ...]:
        return tuple(x for x in range(self.source.order) if self.map[x] == self.target.identity)

    def image(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.map)))

    def compose(self, after: GroupHom) -> GroupHom:
        return GroupHom(self.source, after.target, tuple(after.map[y] for y in self.map))


@dataclass
class HomReport:
    violations: list[tuple[int, int]] = field(default_factory=list)
    injective: bool = False
    surjective: bool = False

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_hom(hom: GroupHom) -> HomReport:
    """Check map(ab) = map(a)map(b) on every pair; violations are returned, not raised."""
    s, t, m = hom.source, hom.target, np.asarray(hom.map)
    lhs = m[s.cayley]                # map(ab)
    rhs = t.cayley[np.ix_(m, m)]     # map(a)map(b)
    bad = np.argwhere(lhs != rhs)
    return HomReport([(int(a), int(b)) for a, b in bad], hom.is_injective, hom.is_surjective)


def _extend(source: FiniteGroup, target: FiniteGroup, gens: Sequence[int],
            images: Sequence[int]) -> Optional[dict[int, int]]:
    """Extend generator images along right multiplication; None if inconsistent."""
    mapping = {source.identity: target.identity}
    queue = deque([source.identity])
    while queue:
        x = queue.popleft()
        fx = mapping[x]
        for s, fs in zip(gens, images):
            y = source.mul(x, s)
            fy = target.mul(fx, fs)
            prev = mapping.get(y)
            if prev is None:
                mapping[y] = fy
                queue.append(y)
            elif prev != fy:
                return None
    return mapping


def small_generating_set(g: FiniteGroup) -> list[int]:
    """Greedy generating set: prefer high-order elements, ties by index."""
    order = sorted(range(g.order), key=lambda x: (-g.element_orders[x], x))
    gens: list[int] = []
    span = frozenset([g.identity])
    for x in order:
        if x in span:
            continue
        gens.append(x)
        span = subgroup_closure(g, gens)
        if len(span) == g.order:
            break
    return gens


def _hom_search(source: FiniteGroup, target: FiniteGroup, candidates: list[list[int]],
                gens: list[int], bijective: bool) -> Optional[GroupHom]:
    chosen: list[int] = []

    def rec(depth: int) -> Optional[dict[int, int]]:
        if depth == len(gens):
            mapping = _extend(source, target, gens, chosen)
            return mapping
        for c in candidates[depth]:
            chosen.append(c)
            partial = _extend_partial(depth + 1)
            if partial is not None:
                found = rec(depth + 1)
                if found is not None:
                    return found
            chosen.pop()
        return None

    def _extend_partial(k: int) -> Optional[dict[int, int]]:
        mapping = _extend(source, target, gens[:k], chosen[:k])
        if mapping is None or len(set(mapping.values())) != len(mapping):
            return None
        return mapping

    mapping = rec(0)
    if mapping is None or len(mapping) != source.order:
        return None
    hom = GroupHom(source, target, tuple(mapping[x] for x in range(source.order)))
    if bijective and not hom.is_surjective:
        return None
    return hom


def embeds(h: FiniteGroup, g: FiniteGroup) -> Optional[GroupHom]:
    """An injective homomorphism h -> g, or None when none exists."""
    if g.order % h.order:
        return None
    gens = small_generating_set(h)
    cands = [[y for y in range(g.order) if g.element_orders[y] == h.element_orders[s]] for s in gens]
    return _hom_search(h, g, cands, gens, bijective=False)


def _class_size_profile(g: FiniteGroup) -> Counter:
    return Counter((g.element_orders[c.representative], c.size) for c in g.classes)


def is_isomorphic(g: FiniteGroup, h: FiniteGroup) -> Optional[GroupHom]:
    """A bijective homomorphism g -> h, or None.

    Pruned first by order, element-order profile, class sizes and centre size.
    """
    if g.order != h.order:
        return None
    if Counter(g.element_orders) != Counter(h.element_orders):
        return None
    if _class_size_profile(g) != _class_size_profile(h) or len(g.center) != len(h.center):
        return None
    gens = small_generating_set(g)
    cands = []
    for s in gens:
        key = (g.element_orders[s], g.classes[g.class_of[s]].size)
        pool = [y for y in range(h.order) if (h.element_orders[y], h.classes[h.class_of[y]].size) == key]
        pool.sort(key=lambda y: (y != s, y))
        cands.append(pool)
    return _hom_search(g, h, cands, gens, bijective=True)


def subgroups_of_order(g: FiniteGroup, k: int) -> list[tuple[int, ...]]:
    """All subgroups of order k, grown from cyclic subgroups by joins.

    Only subgroups whose order divides k are ever kept, since anything else
    cannot sit inside an order-k subgroup.
    """
    if k < 1 or g.order % k:
        return []
    cyclic = {subgroup_closure(g, [x]) for x in range(g.order) if k % g.element_orders[x] == 0}
    cyclic_list = sorted(cyclic, key=lambda s: (len(s), sorted(s)))
    seen = set(cyclic)
    frontier = list(cyclic)
    while frontier:
        nxt = []
        for sub in frontier:
            if len(sub) == k:
                continue
            for c in cyclic_list:
                if c <= sub:
                    continue
                joined = subgroup_closure(g, sub | c)
                if k % len(joined) == 0 and joined not in seen:
                    seen.add(joined)
                    nxt.append(joined)
        frontier = nxt
    return sorted((tuple(sorted(s)) for s in seen if len(s) == k))
