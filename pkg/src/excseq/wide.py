"""Wide subcategories, exceptional sequences, and exceptional-pair mutation.

A wide subcategory is kept as an explicit list of exceptional modules (their
roots); it is never re-quiverized.  An exceptional sequence "in W" is an
ambient sequence whose terms all lie in W, and completeness means its length
equals rank(W).  The mutation of an exceptional pair (X, T) -> (T, Y) is
found by a filtered search: Y is the unique exceptional module such that
(T, Y) is exceptional, dim Y = +-dim X + s*dim T for an integer s, and X, T
and Y, T span the same rank-2 wide subcategory.  Uniqueness is asserted at
runtime, which doubles as a structural check.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import counting, linalg
from .dynkin import Root
from .errors import InputError, InternalConsistencyError
from .repengine import RepCategory


@dataclass(frozen=True)
class WideSubcat:
    generators: tuple[Root, ...]
    objects: tuple[Root, ...]
    rank: int


@dataclass(frozen=True)
class ExcSequence:
    terms: tuple[Root, ...]
    rel_proj_flags: tuple[bool, ...]


class PairCase(Enum):
    """How an exceptional pair (X, T) interacts.

    MONO:       X embeds in a power of T (the level-shifting case).
    ORTHOGONAL: X and T are hom- and ext-orthogonal.
    EXTENSION:  Ext(X, T) != 0.
    EPI:        X surjects onto a power of T.
    """

    MONO = "mono"
    ORTHOGONAL = "orthogonal"
    EXTENSION = "extension"
    EPI = "epi"


def _span_rank(vectors) -> int:
    vectors = list(vectors)
    if not vectors:
        return 0
    return linalg.rank(linalg.mat(vectors))


def ambient(cat: RepCategory) -> WideSubcat:
    if cat.ambient_cache is None:
        cat.ambient_cache = WideSubcat((), cat.roots, cat.n)
    return cat.ambient_cache


def perp(cat: RepCategory, generators, within: WideSubcat | None = None) -> WideSubcat:
    """Right perpendicular: objects X in scope with Hom(G, X) = 0 = Ext(G, X)."""
    scope = within if within is not None else ambient(cat)
    gens = tuple(sorted({cat.check_root(g) for g in generators}))
    if not gens:
        return scope
    key = ("R", gens, scope.objects)
    cached = cat.perp_cache.get(key)
    if cached is not None:
        return cached
    objs = tuple(x for x in scope.objects
                 if all(cat.hom(g, x) == 0 and cat.ext(g, x) == 0 for g in gens))
    result = WideSubcat(gens, objs, _checked_rank(cat, scope, gens, objs))
    cat.perp_cache[key] = result
    return result


def left_perp(cat: RepCategory, generators, within: WideSubcat | None = None) -> WideSubcat:
    """Left perpendicular: objects X in scope with Hom(X, G) = 0 = Ext(X, G)."""
    scope = within if within is not None else ambient(cat)
    gens = tuple(sorted({cat.check_root(g) for g in generators}))
    if not gens:
        return scope
    key = ("L", gens, scope.objects)
    cached = cat.perp_cache.get(key)
    if cached is not None:
        return cached
    objs = tuple(x for x in scope.objects
                 if all(cat.hom(x, g) == 0 and cat.ext(x, g) == 0 for g in gens))
    result = WideSubcat(gens, objs, _checked_rank(cat, scope, gens, objs))
    cat.perp_cache[key] = result
    return result


def _checked_rank(cat, scope, gens, objs) -> int:
    by_span = _span_rank(objs)
    expected = scope.rank - _span_rank(gens)
    if by_span != expected:
        raise InternalConsistencyError(
            f"perpendicular of {gens} has span rank {by_span}, expected {expected}")
    return by_span


def is_exceptional_sequence(cat: RepCategory, terms) -> bool:
    terms = [cat.check_root(t) for t in terms]
    for j in range(len(terms)):
        for i in range(j):
            if cat.hom(terms[j], terms[i]) != 0 or cat.ext(terms[j], terms[i]) != 0:
                return False
    return True


def relative_projectives(cat: RepCategory, w: WideSubcat) -> tuple[Root, ...]:
    """Objects of W with no extensions into anything in W."""
    key = w.objects
    cached = cat.relproj_cache.get(key)
    if cached is None:
        cached = tuple(x for x in w.objects
                       if all(cat.ext(x, z) == 0 for z in w.objects))
        cat.relproj_cache[key] = cached
    return cached


def is_relatively_projective(cat: RepCategory, x: Root, w: WideSubcat) -> bool:
    return x in relative_projectives(cat, w)


def mark_relative_projectives(cat: RepCategory, terms,
                              within: WideSubcat | None = None) -> ExcSequence:
    """Flag each term that is projective in the perpendicular of its later terms."""
    scope = within if within is not None else ambient(cat)
    terms = tuple(cat.check_root(t) for t in terms)
    if not is_exceptional_sequence(cat, terms):
        raise InputError("terms do not form an exceptional sequence")
    flags = [False] * len(terms)
    cur = scope
    for j in reversed(range(len(terms))):
        if terms[j] not in cur.objects:
            raise InputError(f"term {terms[j]} escapes the scope of its later terms")
        flags[j] = is_relatively_projective(cat, terms[j], cur)
        cur = perp(cat, (terms[j],), cur)
    if len(terms) == scope.rank and terms and not flags[0]:
        raise InternalConsistencyError(
            "first term of a complete sequence must be relatively projective")
    return ExcSequence(terms, tuple(flags))


def _sequences_with_flag_counts(cat: RepCategory, scope: WideSubcat):
    key = scope.objects
    cached = cat.seq_cache.get(key)
    if cached is not None:
        return cached
    if scope.rank == 0:
        if scope.objects:
            raise InternalConsistencyError("rank-0 subcategory with objects")
        result = (((), 0),)
    else:
        out = []
        for last in scope.objects:
            sub = perp(cat, (last,), scope)
            flag = is_relatively_projective(cat, last, scope)
            for prefix, k in _sequences_with_flag_counts(cat, sub):
                out.append((prefix + (last,), k + (1 if flag else 0)))
        result = tuple(out)
    cat.seq_cache[key] = result
    return result


def complete_exc_sequences(cat: RepCategory,
                           within: WideSubcat | None = None) -> tuple[tuple[Root, ...], ...]:
    """All complete exceptional sequences of the scope, deterministically ordered."""
    scope = within if within is not None else ambient(cat)
    return tuple(seq for seq, _ in _sequences_with_flag_counts(cat, scope))


def rel_proj_poly_enumerated(cat: RepCategory) -> counting.IntPoly:
    """Generating polynomial of complete sequences by relatively projective terms."""
    n = cat.n
    coeffs = [0] * (n + 1)
    for _, k in _sequences_with_flag_counts(cat, ambient(cat)):
        coeffs[k] += 1
    if coeffs[0] != 0:
        raise InternalConsistencyError("a complete sequence had no relatively projective term")
    return counting.IntPoly(tuple(coeffs), "x")


def _check_pair(cat: RepCategory, x: Root, t: Root) -> None:
    if x == t or cat.hom(t, x) != 0 or cat.ext(t, x) != 0:
        raise InputError(f"({x}, {t}) is not an exceptional pair")


def classify_pair(cat: RepCategory, x, t) -> PairCase:
    x, t = cat.check_root(x), cat.check_root(t)
    _check_pair(cat, x, t)
    if cat.ext(x, t) > 0:
        return PairCase.EXTENSION
    if cat.hom(x, t) > 0:
        return PairCase.MONO if cat.approximation(x, t).kind == "mono" else PairCase.EPI
    return PairCase.ORTHOGONAL


def _signed_translate(z: Root, x: Root, t: Root):
    """Return (delta, s) with z = delta*x + s*t for delta = +-1, integer s."""
    for delta in (1, -1):
        w = [zi - delta * xi for zi, xi in zip(z, x)]
        s = None
        ok = True
        for wi, ti in zip(w, t):
            if ti == 0:
                if wi != 0:
                    ok = False
                    break
            else:
                if wi % ti != 0:
                    ok = False
                    break
                q = wi // ti
                if s is None:
                    s = q
                elif s != q:
                    ok = False
                    break
        if ok:
            return delta, (s if s is not None else 0)
    return None


def _pair_span_perp(cat: RepCategory, a: Root, b: Root) -> tuple[Root, ...]:
    return perp(cat, (a, b)).objects


def mutate_pair(cat: RepCategory, x, t) -> Root:
    """The braid move (X, T) -> (T, Y) on exceptional pairs; returns Y."""
    x, t = cat.check_root(x), cat.check_root(t)
    key = (x, t)
    cached = cat.pair_cache.get(key)
    if cached is not None:
        return cached
    _check_pair(cat, x, t)
    target_perp = _pair_span_perp(cat, x, t)
    found = [z for z in cat.roots
             if cat.hom(z, t) == 0 and cat.ext(z, t) == 0
             and _signed_translate(z, x, t) is not None
             and _pair_span_perp(cat, z, t) == target_perp]
    if len(found) != 1:
        raise InternalConsistencyError(
            f"pair mutation of ({x}, {t}) found {len(found)} candidates")
    cat.pair_cache[key] = found[0]
    return found[0]


def mutate_pair_inverse(cat: RepCategory, y, t) -> Root:
    """The braid move (T, Y) -> (X, T) on exceptional pairs; returns X."""
    y, t = cat.check_root(y), cat.check_root(t)
    key = (y, t)
    cached = cat.pair_inv_cache.get(key)
    if cached is not None:
        return cached
    if y == t or cat.hom(y, t) != 0 or cat.ext(y, t) != 0:
        raise InputError(f"({t}, {y}) is not an exceptional pair")
    target_perp = _pair_span_perp(cat, y, t)
    found = [z for z in cat.roots
             if cat.hom(t, z) == 0 and cat.ext(t, z) == 0
             and _signed_translate(z, y, t) is not None
             and _pair_span_perp(cat, z, t) == target_perp]
    if len(found) != 1:
        raise InternalConsistencyError(
            f"inverse pair mutation of ({y}, {t}) found {len(found)} candidates")
    cat.pair_inv_cache[key] = found[0]
    return found[0]
