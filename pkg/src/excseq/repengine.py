"""Explicit rational representations of simply-laced Dynkin quivers.

Every exceptional module is identified by its positive root.  The canonical
indecomposable for a root is built with reflection functors: the root is
reflected down to a unit vector through an admissible sink sequence, and the
representation is rebuilt by applying the inverse functors from the simple
module.  Hom spaces are computed exactly as the nullspace of the intertwining
equations; Ext follows from the hereditary defect formula
dim Ext(M, N) = dim Hom(M, N) - <dim M, dim N>.

Hom/Ext results are memoized per root pair; caches are write-once.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from . import linalg
from .dynkin import (Quiver, Root, build_diagram, build_quiver, coxeter_for_tag,
                     euler_matrix, positive_roots)
from .errors import InputError, InternalConsistencyError
from .linalg import Mat


@dataclass(frozen=True)
class Representation:
    quiver: Quiver
    dims: Root
    maps: tuple[Mat, ...]  # one per arrow, shape (dims[target], dims[source])


class HomSpace(NamedTuple):
    source: Root
    target: Root
    dimension: int
    basis: tuple[tuple[Mat, ...], ...]  # each element: one matrix per vertex


class Approximation(NamedTuple):
    multiplicity: int
    kind: str  # "mono" or "epi"
    complement: Root  # cokernel dims if mono, kernel dims if epi


def _reflect_arrows(arrows: tuple[tuple[int, int], ...], k: int) -> tuple[tuple[int, int], ...]:
    return tuple((t, s) if k in (s, t) else (s, t) for s, t in arrows)


def _admissible_order(n: int, arrows: tuple[tuple[int, int], ...]) -> list[int]:
    """One full round of sink reflections, lowest-id sink first."""
    remaining = set(range(n))
    cur = arrows
    order = []
    while remaining:
        k = min(v for v in remaining if not any(s == v for s, _ in cur))
        order.append(k)
        remaining.discard(k)
        cur = _reflect_arrows(cur, k)
    if cur != arrows:
        raise InternalConsistencyError("full reflection round changed the orientation")
    return order


class RepCategory:
    """The module category of one quiver, with memoized exact invariants."""

    def __init__(self, quiver: Quiver):
        self.quiver = quiver
        self.n = quiver.diagram.rank
        self.roots = positive_roots(quiver.diagram)
        self.root_set = frozenset(self.roots)
        self.E = euler_matrix(quiver)
        einv = linalg.inverse(linalg.mat(self.E))
        proj = []
        for row in einv.rows:
            if any(x.denominator != 1 for x in row):
                raise InternalConsistencyError("Euler matrix is not unimodular")
            proj.append(tuple(int(x) for x in row))
        # row i of E^{-1} is the dimension vector of the projective at vertex i
        self.projective_roots = tuple(proj)
        self._adj = quiver.diagram.adjacency()
        self._reps: dict[Root, Representation] = {}
        self._hom: dict[tuple[Root, Root], int] = {}
        self._hom_basis: dict[tuple[Root, Root], HomSpace] = {}
        self._approx: dict[tuple[Root, Root], Approximation] = {}
        self._verified: set[Root] = set()
        self._projective_check_done = False
        # caches used by the layers above (wide subcategories, mutation search)
        self.perp_cache: dict = {}
        self.relproj_cache: dict = {}
        self.pair_cache: dict = {}
        self.pair_inv_cache: dict = {}
        self.seq_cache: dict = {}
        self.ambient_cache = None
        self.cluster_cache: dict = {}
        self.transport_cache: dict = {}

    # ----- basic data -----

    def euler(self, x, y) -> int:
        e = self.E
        return sum(int(x[i]) * e[i][j] * int(y[j])
                   for i in range(self.n) for j in range(self.n))

    def simple(self, i: int) -> Root:
        return tuple(1 if j == i else 0 for j in range(self.n))

    def check_root(self, beta) -> Root:
        beta = tuple(int(b) for b in beta)
        if beta not in self.root_set:
            raise InputError(f"{beta} is not a positive root of {self.quiver.diagram.type_tag}")
        return beta

    # ----- module construction -----

    def rep(self, beta: Root) -> Representation:
        beta = self.check_root(beta)
        if beta not in self._reps:
            self._reps[beta] = self._build(beta)
            self._verify_exceptional(beta)
        return self._reps[beta]

    def _simple_rep(self, quiver: Quiver, i: int) -> Representation:
        dims = self.simple(i)
        maps = tuple(linalg.zeros(dims[t], dims[s]) for s, t in quiver.arrows)
        return Representation(quiver, dims, maps)

    def _reflect_root(self, root: Root, k: int) -> Root:
        pairing = 2 * root[k] - sum(root[j] for j in self._adj[k])
        out = list(root)
        out[k] = root[k] - pairing
        return tuple(out)

    def _build(self, beta: Root) -> Representation:
        if sum(beta) == 1:
            return self._simple_rep(self.quiver, beta.index(1))
        order = _admissible_order(self.n, self.quiver.arrows)
        limit = sum(len(ids) * (coxeter_for_tag(tag).h + 2)
                    for tag, ids in self.quiver.diagram.components)
        word: list[int] = []
        arrow_hist = [self.quiver.arrows]
        gamma = beta
        while sum(gamma) > 1:
            for k in order:
                if sum(gamma) == 1:
                    break
                gamma = self._reflect_root(gamma, k)
                if any(c < 0 for c in gamma):
                    raise InternalConsistencyError(f"reflection left the positive cone at {beta}")
                word.append(k)
                arrow_hist.append(_reflect_arrows(arrow_hist[-1], k))
                if len(word) > limit:
                    raise InternalConsistencyError(f"reflection of {beta} did not terminate")
        rep = self._simple_rep(Quiver(self.quiver.diagram, arrow_hist[-1]), gamma.index(1))
        for i in reversed(range(len(word))):
            rep = self._coreflect(rep, word[i])
            if rep.quiver.arrows != arrow_hist[i]:
                raise InternalConsistencyError("orientation bookkeeping out of sync")
        if rep.dims != beta:
            raise InternalConsistencyError(f"rebuilt module has dims {rep.dims}, wanted {beta}")
        return rep

    def _coreflect(self, rep: Representation, k: int) -> Representation:
        """Inverse reflection at a source k: cokernel of M_k -> sum of targets."""
        arrows = rep.quiver.arrows
        out = [i for i, (s, _) in enumerate(arrows) if s == k]
        targets = [arrows[i][1] for i in out]
        stacked = linalg.vstack([rep.maps[i] for i in out]) if out else linalg.zeros(0, rep.dims[k])
        proj_rows = linalg.left_kernel(stacked)
        total = stacked.nrows
        c = len(proj_rows)
        new_dims = list(rep.dims)
        new_dims[k] = c
        if c != total - rep.dims[k]:
            raise InternalConsistencyError("canonical map at a source failed to be injective")
        pmat = Mat(c, total, tuple(proj_rows))
        new_maps = list(rep.maps)
        off = 0
        for i, t in zip(out, targets):
            w = rep.dims[t]
            new_maps[i] = Mat(c, w, tuple(row[off:off + w] for row in pmat.rows))
            off += w
        return Representation(Quiver(rep.quiver.diagram, _reflect_arrows(arrows, k)),
                              tuple(new_dims), tuple(new_maps))

    def _verify_exceptional(self, beta: Root) -> None:
        if beta in self._verified:
            return
        self._verified.add(beta)
        if self.hom(beta, beta) != 1:
            raise InternalConsistencyError(f"module at {beta} is not Schurian")
        if self.ext(beta, beta) != 0:
            raise InternalConsistencyError(f"module at {beta} is not rigid")

    # ----- hom / ext -----

    def hom(self, a, b) -> int:
        a, b = self.check_root(a), self.check_root(b)
        key = (a, b)
        if key not in self._hom:
            self._hom[key] = self._hom_system(a, b, want_basis=False)
        return self._hom[key]

    def hom_basis(self, a, b) -> HomSpace:
        a, b = self.check_root(a), self.check_root(b)
        key = (a, b)
        if key not in self._hom_basis:
            self._hom_system(a, b, want_basis=True)
        return self._hom_basis[key]

    def _hom_system(self, a: Root, b: Root, want_basis: bool) -> int:
        m, nrep = self.rep(a), self.rep(b)
        md, nd = m.dims, nrep.dims
        offsets = []
        total = 0
        for v in range(self.n):
            offsets.append(total)
            total += md[v] * nd[v]
        rows: list[list[Fraction]] = []
        for idx, (s, t) in enumerate(self.quiver.arrows):
            ma, na = m.maps[idx], nrep.maps[idx]
            for i in range(nd[t]):
                for j in range(md[s]):
                    row = [Fraction(0)] * total
                    for c in range(md[t]):
                        row[offsets[t] + i * md[t] + c] += ma.rows[c][j]
                    for r in range(nd[s]):
                        row[offsets[s] + r * md[s] + j] -= na.rows[i][r]
                    rows.append(row)
        system = Mat(len(rows), total, tuple(tuple(r) for r in rows))
        if want_basis:
            kernel = linalg.right_kernel(system)
            basis = []
            for vec in kernel:
                mats = []
                for v in range(self.n):
                    entries = vec[offsets[v]:offsets[v] + md[v] * nd[v]]
                    mats.append(Mat(nd[v], md[v], tuple(
                        tuple(entries[i * md[v]:(i + 1) * md[v]]) for i in range(nd[v]))))
                basis.append(tuple(mats))
            space = HomSpace(a, b, len(kernel), tuple(basis))
            self._hom_basis[(a, b)] = space
            self._hom[(a, b)] = space.dimension
            return space.dimension
        return total - linalg.rank(system)

    def ext(self, a, b) -> int:
        a, b = self.check_root(a), self.check_root(b)
        value = self.hom(a, b) - self.euler(a, b)
        if value < 0:
            raise InternalConsistencyError(f"negative Ext dimension for {a}, {b}")
        return value

    # ----- projectivity and approximations -----

    def is_projective(self, beta) -> bool:
        beta = self.check_root(beta)
        if not self._projective_check_done:
            by_table = set(self.projective_roots)
            by_ext = {r for r in self.roots
                      if all(self.ext(r, x) == 0 for x in self.roots)}
            if by_table != by_ext:
                raise InternalConsistencyError(
                    "projectives from the Euler matrix disagree with Ext vanishing")
            self._projective_check_done = True
        return beta in self.projective_roots

    def approximation(self, x, t) -> Approximation:
        """Diagonal map X -> T^s on a hom basis; must be mono or epi."""
        x, t = self.check_root(x), self.check_root(t)
        key = (x, t)
        if key in self._approx:
            return self._approx[key]
        s = self.hom(x, t)
        if s == 0:
            raise InputError(f"no maps from {x} to {t}: approximation undefined")
        basis = self.hom_basis(x, t).basis
        tdims = self.rep(t).dims
        xdims = self.rep(x).dims
        mono = True
        epi = True
        for v in range(self.n):
            stacked = linalg.vstack([phi[v] for phi in basis])
            r = linalg.rank(stacked)
            mono = mono and r == xdims[v]
            epi = epi and r == s * tdims[v]
        if mono == epi:
            raise InternalConsistencyError(
                f"approximation {x} -> {t}^{s} is neither mono nor epi (or both)")
        if mono:
            comp = tuple(s * tdims[v] - xdims[v] for v in range(self.n))
            result = Approximation(s, "mono", comp)
        else:
            comp = tuple(xdims[v] - s * tdims[v] for v in range(self.n))
            result = Approximation(s, "epi", comp)
        if any(c < 0 for c in result.complement):
            raise InternalConsistencyError("approximation complement went negative")
        self._approx[key] = result
        return result


@lru_cache(maxsize=None)
def category(tag: str) -> RepCategory:
    """RepCategory for a type tag with the default orientation, shared per tag."""
    return RepCategory(build_quiver(build_diagram(tag)))
