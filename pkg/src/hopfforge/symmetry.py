"""Permutations, small permutation groups, orbits and permcycles."""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from itertools import permutations
from math import gcd
from typing import Iterable, Mapping, Sequence

from .complex import SimplicialComplex, Simplex, simplex
from .errors import MalformedInputError, OrderTooLargeError

DEFAULT_CAP = 10**6


class Permutation:
    """A permutation of integer labels; labels not mentioned are fixed."""

    __slots__ = ("_map",)

    def __init__(self, mapping: Mapping[int, int] | None = None):
        m = {int(k): int(v) for k, v in (mapping or {}).items() if int(k) != int(v)}
        if sorted(m) != sorted(m.values()):
            raise MalformedInputError("mapping is not a bijection")
        self._map = m

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]]) -> "Permutation":
        m: dict[int, int] = {}
        for cyc in cycles:
            cyc = list(cyc)
            for i, x in enumerate(cyc):
                if x in m:
                    raise MalformedInputError(f"label {x} appears twice in cycle notation")
                m[x] = cyc[(i + 1) % len(cyc)]
        return cls(m)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse cycle notation such as ``(1 3 5)(2 4)``; commas are allowed."""
        cycles = []
        for body in re.findall(r"\(([^()]*)\)", text):
            items = [int(t) for t in re.split(r"[\s,]+", body.strip()) if t]
            if items:
                cycles.append(items)
        if not cycles and text.strip() not in ("", "()"):
            raise MalformedInputError(f"cannot parse permutation {text!r}")
        return cls.from_cycles(cycles)

    @classmethod
    def from_function(cls, fn, universe: Iterable[int]) -> "Permutation":
        return cls({x: fn(x) for x in universe})

    def __call__(self, x: int) -> int:
        return self._map.get(x, x)

    def __mul__(self, other: "Permutation") -> "Permutation":
        """``(self * other)(x) == self(other(x))``."""
        support = set(self._map) | set(other._map)
        return Permutation({x: self(other(x)) for x in support})

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        out = Permutation()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> "Permutation":
        return Permutation({v: k for k, v in self._map.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self._map == other._map

    def __hash__(self) -> int:
        return hash(frozenset(self._map.items()))

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self._map))

    def is_identity(self) -> bool:
        return not self._map

    def cycles(self, universe: Iterable[int] = ()) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for x in sorted(set(self._map) | set(universe)):
            if x in seen:
                continue
            cyc = [x]
            seen.add(x)
            y = self(x)
            while y != x:
                cyc.append(y)
                seen.add(y)
                y = self(y)
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        o = 1
        for cyc in self.cycles():
            o = o * len(cyc) // gcd(o, len(cyc))
        return o

    def cycle_string(self, universe: Iterable[int] = ()) -> str:
        cyc = self.cycles(universe)
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_string()})"

    def apply_simplex(self, s: Simplex) -> Simplex:
        return tuple(sorted(self(v) for v in s))


class GroupAction:
    """Permutation group given by generators, with a cached element list."""

    def __init__(self, generators: Iterable[Permutation], universe: Iterable[int] = ()):
        self.generators = [g for g in generators]
        self.universe = tuple(sorted(set(universe) | {x for g in self.generators for x in g.support}))
        self._elements: list[Permutation] | None = None

    @classmethod
    def cyclic(cls, n: int) -> "GroupAction":
        return cls([Permutation({x: (x + 1) % n for x in range(n)})], range(n))

    def elements(self, cap: int = DEFAULT_CAP) -> list[Permutation]:
        if self._elements is None:
            ident = Permutation()
            seen = {ident}
            order = [ident]
            queue = deque([ident])
            while queue:
                g = queue.popleft()
                for s in self.generators:
                    h = s * g
                    if h not in seen:
                        seen.add(h)
                        order.append(h)
                        queue.append(h)
                        if len(seen) > cap:
                            raise OrderTooLargeError(f"group order exceeds cap {cap}")
            self._elements = order
        elif len(self._elements) > cap:
            raise OrderTooLargeError(f"group order exceeds cap {cap}")
        return self._elements

    def order(self, cap: int = DEFAULT_CAP) -> int:
        return len(self.elements(cap))


def group_order(g: GroupAction, cap: int = DEFAULT_CAP) -> int:
    return g.order(cap)


def group_elements(g: GroupAction, cap: int = DEFAULT_CAP) -> list[Permutation]:
    return g.elements(cap)


def orbit(s: Iterable[int], g: GroupAction) -> list[Simplex]:
    """Orbit of a simplex under the group generated by ``g``'s generators."""
    start = simplex(s)
    seen = {start}
    queue = deque([start])
    while queue:
        t = queue.popleft()
        for gen in g.generators:
            u = gen.apply_simplex(t)
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return sorted(seen)


def cyclic_orbit(s: Iterable[int], n: int) -> list[Simplex]:
    """Orbit under ``x -> x + 1 mod n``."""
    s = tuple(s)
    return sorted({tuple(sorted((x + t) % n for x in s)) for t in range(n)})


def expand_orbits(generators: Iterable[Iterable[int]], g: GroupAction | int) -> list[Simplex]:
    out: set[Simplex] = set()
    for s in generators:
        if isinstance(g, int):
            out.update(cyclic_orbit(s, g))
        else:
            out.update(orbit(s, g))
    return sorted(out)


def orbit_complex(generators: Iterable[Iterable[int]], n: int) -> SimplicialComplex:
    return SimplicialComplex(expand_orbits(generators, n), modulus=n)


@dataclass(frozen=True)
class PermCycle:
    """Permuted difference cycle ``d_1 ... d_{k+1}`` with modulus ``sum(d)``."""

    entries: tuple[int, ...]

    def __post_init__(self):
        if not self.entries or any(int(d) <= 0 for d in self.entries):
            raise MalformedInputError("permcycle entries must be positive integers")

    @property
    def modulus(self) -> int:
        return sum(self.entries)

    def generators(self) -> list[Simplex]:
        """Partial-sum simplices of all distinct orderings of the entries."""
        n = self.modulus
        gens = set()
        for perm in set(permutations(self.entries)):
            acc = 0
            verts = [0]
            for d in perm[:-1]:
                acc += d
                verts.append(acc % n)
            if len(set(verts)) == len(verts):
                gens.add(tuple(sorted(verts)))
        return sorted(gens)


def expand_permcycle(pc: PermCycle | Sequence[int]) -> SimplicialComplex:
    if not isinstance(pc, PermCycle):
        pc = PermCycle(tuple(int(x) for x in pc))
    return orbit_complex(pc.generators(), pc.modulus)


def apply_perm(c: SimplicialComplex, p: Permutation) -> SimplicialComplex:
    return SimplicialComplex((p.apply_simplex(f) for f in c.facets), modulus=c.modulus)


def is_automorphism(c: SimplicialComplex, p: Permutation) -> bool:
    fs = set(c.facets)
    return all(p.apply_simplex(f) in fs for f in c.facets)


def multiply_labels(c: SimplicialComplex, factor: int, n: int) -> SimplicialComplex:
    return apply_perm(c, Permutation({x: (factor * x) % n for x in range(n)}))


@dataclass(frozen=True)
class StandardAutos:
    k: int
    n: int
    tau: Permutation
    rho: Permutation
    sigma: Permutation

    def sigma_tilde(self) -> Permutation:
        """``sigma`` pushed through the identification ``x ~ -x mod n``."""
        cls = lambda x: min(x % self.n, (-x) % self.n)  # noqa: E731
        reps = sorted({cls(x) for x in range(self.n)})
        m = {}
        for r in reps:
            m[r] = cls(self.sigma(r))
        return Permutation(m)


def standard_autos(k: int) -> StandardAutos:
    if k < 1:
        raise MalformedInputError("k must be at least 1")
    n = 2 ** (k + 1) - 1
    rng = range(n)
    return StandardAutos(
        k, n,
        Permutation({x: (x + 1) % n for x in rng}),
        Permutation({x: (-x) % n for x in rng}),
        Permutation({x: (2 * x) % n for x in rng}),
    )
