"""Adjunction systems of nerves and their glued diagrams.

An adjunction system is a family of local nerves together with label
bijections describing how cover elements are shared between pieces.  The
gluing conditions checked here are:

  A1  a self-gluing, when supplied, is the identity on all labels;
  A2  the gluing for (j, i) is the inverse of the gluing for (i, j),
      with matching domains;
  A3  gluings compose on overlapping domains.

Canonicalisation groups labels into equivalence classes, names each class
deterministically, and produces the glued diagram: per-piece nerves on
global labels, their intersections, and the union nerve.  Gluing maps act
on cover labels, not points; a gluing must restrict to a simplicial
isomorphism between the induced subcomplexes on its domain and image.

Modelling obligation (documented, not checkable here): per-piece covers
should be good covers, and a cover element should either be contained in
a gluing region (a shared label) or not shared at all.  Point-set
conditions such as boundary homeomorphisms between gluing regions have no
nerve-level content and are not validated.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping

from .complexes import (
    SimplicialComplex,
    full_subcomplex,
    intersect,
    relabel,
    union_complexes,
)
from .fplinalg import F2, PrimeField


class InvalidSystem(ValueError):
    def __init__(self, report: "ValidationReport"):
        super().__init__("; ".join(v.message for v in report.violations) or "invalid system")
        self.report = report


class EmptyIndexSet(ValueError):
    pass


class BadIndexSet(ValueError):
    pass


class IncompatibleFamily(ValueError):
    pass


class NotSimplicial(ValueError):
    pass


@dataclass(frozen=True)
class LocalPiece:
    piece_id: str
    nerve: SimplicialComplex

    @property
    def labels(self) -> tuple[str, ...]:
        return self.nerve.vertices


@dataclass(frozen=True)
class GluingBijection:
    source: str
    target: str
    pairs: tuple[tuple[str, str], ...]

    @property
    def mapping(self) -> dict[str, str]:
        return dict(self.pairs)

    @property
    def domain(self) -> tuple[str, ...]:
        return tuple(sorted(x for x, _ in self.pairs))

    @property
    def image(self) -> tuple[str, ...]:
        return tuple(sorted(y for _, y in self.pairs))


@dataclass(frozen=True)
class AdjunctionSystem:
    pieces: tuple[LocalPiece, ...]
    gluings: tuple[GluingBijection, ...]
    field: PrimeField = F2

    def piece(self, piece_id: str) -> LocalPiece:
        for p in self.pieces:
            if p.piece_id == piece_id:
                return p
        raise KeyError(piece_id)

    def gluing(self, i: str, j: str) -> GluingBijection | None:
        for g in self.gluings:
            if g.source == i and g.target == j:
                return g
        return None

    def domain(self, i: str, j: str) -> set[str]:
        g = self.gluing(i, j)
        return set(g.domain) if g is not None else set()


def shared_label_system(piece_nerves: Mapping[str, SimplicialComplex],
                        field: PrimeField = F2) -> AdjunctionSystem:
    """System whose pieces share cover elements by literal label equality."""
    pieces = tuple(LocalPiece(str(pid), nerve) for pid, nerve in sorted(piece_nerves.items()))
    gluings: list[GluingBijection] = []
    for a, b in itertools.combinations(pieces, 2):
        shared = sorted(set(a.labels) & set(b.labels))
        if shared:
            pairs = tuple((s, s) for s in shared)
            gluings.append(GluingBijection(a.piece_id, b.piece_id, pairs))
            gluings.append(GluingBijection(b.piece_id, a.piece_id, pairs))
    return AdjunctionSystem(pieces, tuple(gluings), field)


@dataclass(frozen=True)
class Violation:
    condition: str
    message: str
    witness: tuple = ()


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    violations: tuple[Violation, ...]


def validate_system(system: AdjunctionSystem) -> ValidationReport:
    violations: list[Violation] = []
    ids = [p.piece_id for p in system.pieces]
    if len(set(ids)) != len(ids):
        violations.append(Violation("STRUCTURE", "duplicate piece ids", tuple(ids)))
        return ValidationReport(False, tuple(violations))
    by_id = {p.piece_id: p for p in system.pieces}

    for g in system.gluings:
        if g.source not in by_id or g.target not in by_id:
            violations.append(Violation("STRUCTURE", f"gluing {g.source}->{g.target} names unknown pieces"))
            continue
        src_labels = set(by_id[g.source].labels)
        dom = [x for x, _ in g.pairs]
        img = [y for _, y in g.pairs]
        if len(set(dom)) != len(dom):
            violations.append(Violation("STRUCTURE", f"gluing {g.source}->{g.target} domain has repeats"))
        if len(set(img)) != len(img):
            violations.append(Violation("STRUCTURE", f"gluing {g.source}->{g.target} is not injective"))
        missing = sorted(set(dom) - src_labels)
        if missing:
            violations.append(Violation("STRUCTURE",
                                         f"gluing {g.source}->{g.target} domain not in source labels",
                                         tuple(missing)))
        extra = sorted(set(img) - set(by_id[g.target].labels))
        if extra:
            violations.append(Violation("STRUCTURE",
                                         f"gluing {g.source}->{g.target} image not in target labels",
                                         tuple(extra)))
    if violations:
        return ValidationReport(False, tuple(violations))

    # A1: supplied self-gluings must be the identity on all labels.
    for g in system.gluings:
        if g.source == g.target:
            piece = by_id[g.source]
            if set(g.domain) != set(piece.labels) or any(x != y for x, y in g.pairs):
                bad = sorted(x for x, y in g.pairs if x != y) or sorted(set(piece.labels) - set(g.domain))
                violations.append(Violation("A1", f"self-gluing of {g.source} is not the identity",
                                            tuple(bad)))

    # A2: the reverse gluing is the inverse with matching domains.
    for g in system.gluings:
        if g.source == g.target:
            continue
        back = system.gluing(g.target, g.source)
        if back is None:
            violations.append(Violation("A2", f"gluing {g.target}->{g.source} is missing"))
            continue
        if set(back.domain) != set(g.image):
            violations.append(Violation("A2",
                                        f"domain of {g.target}->{g.source} differs from image of {g.source}->{g.target}",
                                        tuple(sorted(set(back.domain) ^ set(g.image)))))
            continue
        back_map = back.mapping
        for x, y in g.pairs:
            if back_map.get(y) != x:
                violations.append(Violation("A2",
                                            f"gluing {g.target}->{g.source} is not inverse to {g.source}->{g.target} at {y!r}",
                                            (y,)))

    # A3: composition on overlapping domains.
    for gi in system.gluings:
        i, j = gi.source, gi.target
        if i == j:
            continue
        for gk in system.gluings:
            if gk.source != i or gk.target == j or gk.target == i:
                continue
            k = gk.target
            jk = system.gluing(j, k)
            jk_map = jk.mapping if jk is not None else {}
            fij, fik = gi.mapping, gk.mapping
            for x in sorted(set(fij) & set(fik)):
                y = fij[x]
                if y not in jk_map:
                    violations.append(Violation("A3",
                                                f"label {x!r}: image under {i}->{j} misses the domain of {j}->{k}",
                                                (x,)))
                elif jk_map[y] != fik[x]:
                    violations.append(Violation("A3",
                                                f"label {x!r}: {i}->{k} differs from {j}->{k} after {i}->{j}",
                                                (x,)))

    # Gluings must be simplicial isomorphisms between induced subcomplexes.
    for g in system.gluings:
        if g.source == g.target:
            continue
        src_sub = full_subcomplex(by_id[g.source].nerve, g.domain)
        tgt_sub = full_subcomplex(by_id[g.target].nerve, g.image)
        mapping = g.mapping
        mapped = frozenset(tuple(sorted(mapping[v] for v in s)) for s in src_sub.simplices)
        if mapped != tgt_sub.simplices:
            diff = sorted(mapped ^ tgt_sub.simplices)
            violations.append(Violation("SIMPLICIAL",
                                        f"gluing {g.source}->{g.target} is not a simplicial isomorphism "
                                        f"between induced subcomplexes",
                                        tuple(diff[:4])))

    return ValidationReport(not violations, tuple(violations))


@dataclass(frozen=True)
class GluedDiagram:
    """Per-piece nerves on canonical global labels, plus the union nerve."""

    field: PrimeField
    piece_ids: tuple[str, ...]
    nerves: dict[str, SimplicialComplex]
    nerve: SimplicialComplex
    label_classes: dict[tuple[str, str], str] | None = None

    @property
    def n_pieces(self) -> int:
        return len(self.piece_ids)

    def piece_nerve(self, piece_id: str) -> SimplicialComplex:
        return self.nerves[piece_id]

    def intersection_nerve(self, t: Iterable[str]) -> SimplicialComplex:
        ids = sorted(set(t))
        if not ids:
            raise EmptyIndexSet("intersection over an empty index set")
        unknown = [i for i in ids if i not in self.nerves]
        if unknown:
            raise BadIndexSet(f"unknown piece ids {unknown}")
        out = self.nerves[ids[0]]
        for i in ids[1:]:
            out = intersect(out, self.nerves[i])
        return out

    def index_subsets(self, size: int) -> tuple[tuple[str, ...], ...]:
        return tuple(itertools.combinations(self.piece_ids, size))


def glued_from_nerves(piece_nerves: Mapping[str, SimplicialComplex],
                      field: PrimeField = F2) -> GluedDiagram:
    nerves = {str(k): v for k, v in piece_nerves.items()}
    ids = tuple(sorted(nerves))
    return GluedDiagram(field, ids, nerves, union_complexes(nerves[i] for i in ids))


def canonicalize(system: AdjunctionSystem) -> GluedDiagram:
    """Glue a validated system: classes of labels become global vertices.

    Each class is named by the local label of its lexicographically
    minimal (piece_id, label) member; colliding names are qualified with
    the piece id.
    """
    report = validate_system(system)
    if not report.valid:
        raise InvalidSystem(report)

    parent: dict[tuple[str, str], tuple[str, str]] = {}
    for piece in system.pieces:
        for v in piece.labels:
            parent[(piece.piece_id, v)] = (piece.piece_id, v)

    def find(node: tuple[str, str]) -> tuple[str, str]:
        while parent[node] != node:
            parent[node] = parent[parent[node]]
            node = parent[node]
        return node

    def union(a: tuple[str, str], b: tuple[str, str]) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for g in system.gluings:
        if g.source == g.target:
            continue
        for x, y in g.pairs:
            union((g.source, x), (g.target, y))

    classes: dict[tuple[str, str], list[tuple[str, str]]] = {}
    for node in parent:
        classes.setdefault(find(node), []).append(node)
    for members in classes.values():
        per_piece = [p for p, _ in members]
        if len(set(per_piece)) != len(per_piece):
            raise InvalidSystem(ValidationReport(False, (Violation(
                "STRUCTURE", "a gluing chain identifies two labels of one piece"),)))

    names: dict[tuple[str, str], str] = {}
    by_name: dict[str, list[tuple[str, str]]] = {}
    for root, members in classes.items():
        minimal = min(members)
        names[root] = minimal[1]
        by_name.setdefault(minimal[1], []).append(root)
    for name, roots in by_name.items():
        if len(roots) > 1:
            for root in roots:
                names[root] = f"{min(classes[root])[1]}@{min(classes[root])[0]}"
    if len(set(names.values())) != len(names):
        raise InvalidSystem(ValidationReport(False, (Violation(
            "STRUCTURE", "canonical class names collide even after qualification"),)))

    label_classes = {node: names[find(node)] for node in parent}
    nerves: dict[str, SimplicialComplex] = {}
    for piece in system.pieces:
        mapping = {v: label_classes[(piece.piece_id, v)] for v in piece.labels}
        nerves[piece.piece_id] = relabel(piece.nerve, mapping)
    ids = tuple(sorted(nerves))
    union_nerve = union_complexes(nerves[i] for i in ids)
    return GluedDiagram(system.field, ids, nerves, union_nerve, label_classes)


def collapse(diagram: GluedDiagram, j: Iterable[str]) -> GluedDiagram:
    """Merge the pieces in j into one piece carrying the union of their nerves.

    The union nerve is unchanged simplex for simplex, so every cohomology
    computed downstream is invariant under any collapse sequence.
    """
    js = sorted(set(j))
    if not js:
        raise BadIndexSet("collapse of an empty index set")
    unknown = [i for i in js if i not in diagram.nerves]
    if unknown:
        raise BadIndexSet(f"unknown piece ids {unknown}")
    if set(js) == set(diagram.piece_ids):
        raise BadIndexSet("collapse must leave at least one other piece")
    merged_id = js[0]
    nerves = {i: n for i, n in diagram.nerves.items() if i not in js}
    nerves[merged_id] = union_complexes(diagram.nerves[i] for i in js)
    return glued_from_nerves(nerves, diagram.field)


def subsystem_embedding(diagram: GluedDiagram, j: Iterable[str]) -> tuple[GluedDiagram, dict[str, str]]:
    """Glued diagram of the subsystem on j, plus the label injection into the parent.

    Global labels are inherited from the parent diagram, so the injection
    is the identity on the labels the subsystem retains.
    """
    js = sorted(set(j))
    if not js:
        raise BadIndexSet("subsystem over an empty index set")
    unknown = [i for i in js if i not in diagram.nerves]
    if unknown:
        raise BadIndexSet(f"unknown piece ids {unknown}")
    sub = glued_from_nerves({i: diagram.nerves[i] for i in js}, diagram.field)
    kappa = {v: v for v in sub.nerve.vertices}
    return sub, kappa


def induced_map(diagram: GluedDiagram, target: SimplicialComplex,
                psi: Mapping[str, Mapping[str, str]]) -> dict[str, str]:
    """The unique simplicial map on the union nerve restricting to each psi_i."""
    for pid in diagram.piece_ids:
        if pid not in psi:
            raise IncompatibleFamily(f"no vertex map supplied for piece {pid!r}")
    merged: dict[str, str] = {}
    owner: dict[str, str] = {}
    for pid in diagram.piece_ids:
        nerve = diagram.nerves[pid]
        vm = psi[pid]
        for v in nerve.vertices:
            if v not in vm:
                raise NotSimplicial(f"map for piece {pid!r} undefined on label {v!r}")
        for s in nerve.simplices:
            image = tuple(sorted({vm[v] for v in s}))
            if image not in target:
                raise NotSimplicial(f"piece {pid!r}: image of {s!r} is not a simplex of the target")
        for v in nerve.vertices:
            if v in merged and merged[v] != vm[v]:
                raise IncompatibleFamily(
                    f"maps for pieces {owner[v]!r} and {pid!r} disagree at label {v!r}")
            merged[v] = vm[v]
            owner[v] = pid
    return merged
