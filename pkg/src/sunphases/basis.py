"""Boson occupation bases and weight-diagram combinatorics for symmetric su(n) irreps.

A symmetric irrep (lambda, 0, ..., 0) of su(n) is carried by the n-mode boson
states |n_1 ... n_n> with fixed total occupation lambda.  This module owns the
canonical ordering of that basis, the weights of its states, the partition of
the basis into su(2) weight strings parallel to a root, and the edge/kernel
counting used to explain phase-operator non-commutativity.

Everything here is exact integer combinatorics; floats appear only in the
optional Cartesian embedding of su(3) weights.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

Occupations = tuple[int, ...]
Weight = tuple[int, ...]
Root = tuple[int, int]

_SQRT2 = math.sqrt(2.0)
_SQRT6 = math.sqrt(6.0)

#: Cartesian coordinates of the two fundamental weights of su(3).
FUNDAMENTAL_WEIGHTS_SU3: tuple[tuple[float, float], ...] = (
    (1.0 / _SQRT2, 1.0 / _SQRT6),
    (0.0, math.sqrt(2.0 / 3.0)),
)

#: Cartesian coordinates of the two simple roots of su(3), dual to the above.
SIMPLE_ROOTS_SU3: tuple[tuple[float, float], ...] = (
    (_SQRT2, 0.0),
    (-_SQRT2 / 2.0, _SQRT6 / 2.0),
)


def dimension(n: int, lam: int) -> int:
    """Number of n-mode boson states with total occupation lam."""
    return math.comb(lam + n - 1, n - 1)


def check_root(n: int, root: Root) -> Root:
    """Validate a ladder-operator label (i, j), 1-based, i != j."""
    i, j = root
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"root indices must lie in 1..{n}, got {root}")
    if i == j:
        raise ValueError(f"root indices must differ, got {root}")
    return (i, j)


@dataclass(frozen=True)
class OrderedBasis:
    """Canonically ordered occupation basis of the irrep (lam, 0, ..., 0) of su(n).

    States are ordered lexicographically decreasing in (n_1, ..., n_n), so the
    highest weight state |lam 0 ... 0> comes first.
    """

    n: int
    lam: int
    states: tuple[Occupations, ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "_index", {s: k for k, s in enumerate(self.states)}
        )

    def __len__(self) -> int:
        return len(self.states)

    def index(self, state: Occupations) -> int:
        """Position of a state in the canonical order."""
        return self._index[tuple(state)]  # type: ignore[attr-defined]

    def __contains__(self, state: Occupations) -> bool:
        return tuple(state) in self._index  # type: ignore[attr-defined]


def enumerate_basis(n: int, lam: int) -> OrderedBasis:
    """Enumerate the occupation basis of (lam, 0, ..., 0) for n boson modes.

    Raises ValueError for n < 2 or negative lam.
    """
    if n < 2:
        raise ValueError(f"need at least two modes, got n={n}")
    if lam < 0:
        raise ValueError(f"total occupation must be non-negative, got {lam}")

    states: list[Occupations] = []

    def fill(prefix: list[int], remaining: int, slots: int) -> None:
        if slots == 1:
            states.append(tuple(prefix + [remaining]))
            return
        for head in range(remaining, -1, -1):
            fill(prefix + [head], remaining - head, slots - 1)

    fill([], lam, n)
    assert len(states) == dimension(n, lam)
    return OrderedBasis(n=n, lam=lam, states=tuple(states))


def weight_of(state: Occupations) -> Weight:
    """Weight of an occupation state: component k is n_k - n_{k+1}."""
    return tuple(state[k] - state[k + 1] for k in range(len(state) - 1))


def root_components(n: int, root: Root) -> Weight:
    """Weight shift produced by the ladder operator C_ij (its root)."""
    i, j = check_root(n, root)
    shift = [0] * n
    shift[i - 1] += 1
    shift[j - 1] -= 1
    return tuple(shift[k] - shift[k + 1] for k in range(n - 1))


def cartesian_embedding(weight: Weight, n: int = 3) -> tuple[float, float]:
    """Map an su(3) weight (x, y) to the Cartesian weight plane.

    Only n = 3 has a specified embedding; other ranks raise ValueError.
    """
    if n != 3:
        raise ValueError(f"Cartesian embedding not defined for n={n}")
    if len(weight) != 2:
        raise ValueError(f"su(3) weight needs two components, got {weight}")
    x, y = weight
    w1, w2 = FUNDAMENTAL_WEIGHTS_SU3
    return (x * w1[0] + y * w2[0], x * w1[1] + y * w2[1])


@dataclass(frozen=True)
class StringPartition:
    """Partition of a basis into su(2) weight strings parallel to one root.

    Each orbit lists basis indices ordered by increasing n_i, so C_ij acts as
    the successor map inside an orbit.  Occupations of all modes other than i
    and j are constant along an orbit.
    """

    root: Root
    orbits: tuple[tuple[int, ...], ...]


def su2_strings(basis: OrderedBasis, root: Root) -> StringPartition:
    """Group the basis into su(2)_{ij} strings for the root (i, j)."""
    i, j = check_root(basis.n, root)
    frozen_modes = [k for k in range(basis.n) if k not in (i - 1, j - 1)]

    groups: dict[Occupations, list[int]] = {}
    for idx, state in enumerate(basis.states):
        key = tuple(state[k] for k in frozen_modes)
        groups.setdefault(key, []).append(idx)

    orbits = []
    for members in groups.values():
        members.sort(key=lambda idx: basis.states[idx][i - 1])
        orbits.append(tuple(members))
    orbits.sort(key=lambda orbit: orbit[0])
    return StringPartition(root=(i, j), orbits=tuple(orbits))


def kernel_states(basis: OrderedBasis, root: Root) -> list[int]:
    """Indices of states annihilated by C_ij, i.e. those with n_j = 0.

    These are the edge states of the weight diagram for this root.
    """
    _, j = check_root(basis.n, root)
    return [k for k, s in enumerate(basis.states) if s[j - 1] == 0]


def edge_overlap_count(
    basis: OrderedBasis, root_a: Root, root_b: Root
) -> tuple[int, int, int, int]:
    """Cardinalities (|A|, |B|, |A & B|, |A | B|) of two kernel edges."""
    if tuple(root_a) == tuple(root_b):
        raise ValueError("edge overlap needs two distinct roots")
    a = set(kernel_states(basis, root_a))
    b = set(kernel_states(basis, root_b))
    return (len(a), len(b), len(a & b), len(a | b))
