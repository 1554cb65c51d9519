"""Pure-Python kernels for matrix-group closure and orbit enumeration.

Matrices over GF(p) are row-major tuples of residues; vectors are tuples.
These functions mirror the compiled backend exactly: same signatures, same
results, chosen at import time by the engine.  Cap overruns are signalled
by returning ``None`` so the kernels stay exception-free and swappable.
"""

from __future__ import annotations

BACKEND = "pure"


def mat_mul(a: tuple, b: tuple, p: int, dim: int) -> tuple:
    """Product of two row-major dim x dim matrices mod p."""
    out = [0] * (dim * dim)
    for i in range(dim):
        row = i * dim
        for k in range(dim):
            aik = a[row + k]
            if aik:
                col = k * dim
                for j in range(dim):
                    out[row + j] = (out[row + j] + aik * b[col + j]) % p
    return tuple(out)


def mat_vec(m: tuple, v: tuple, p: int, dim: int) -> tuple:
    """Matrix times column vector mod p."""
    out = [0] * dim
    for i in range(dim):
        row = i * dim
        acc = 0
        for j in range(dim):
            acc += m[row + j] * v[j]
        out[i] = acc % p
    return tuple(out)


def close_set(generators: list, p: int, dim: int, cap: int):
    """Subgroup elements generated by ``generators``; None if > cap.

    Breadth-first closure under right multiplication starting from the
    identity: in a finite group this reaches inverses automatically.
    """
    identity = tuple(
        1 if i == j else 0 for i in range(dim) for j in range(dim)
    )
    elements = {identity}
    frontier = [identity]
    while frontier:
        next_frontier = []
        for elem in frontier:
            for gen in generators:
                product = mat_mul(elem, gen, p, dim)
                if product not in elements:
                    elements.add(product)
                    if len(elements) > cap:
                        return None
                    next_frontier.append(product)
        frontier = next_frontier
    return elements


def orbit_partition(generators: list, p: int, dim: int) -> list:
    """Sizes of the generator-closure orbits on all p^dim vectors.

    Returned in discovery order over lexicographically enumerated seed
    vectors, so the output is deterministic.
    """
    total = p**dim
    seen = [False] * total
    weights = [p ** (dim - 1 - i) for i in range(dim)]

    def index(vec):
        acc = 0
        for i in range(dim):
            acc += vec[i] * weights[i]
        return acc

    sizes = []
    for start in range(total):
        if seen[start]:
            continue
        vec = []
        rem = start
        for w in weights:
            vec.append(rem // w)
            rem %= w
        vec = tuple(vec)
        seen[start] = True
        orbit_size = 1
        frontier = [vec]
        while frontier:
            next_frontier = []
            for v in frontier:
                for gen in generators:
                    w = mat_vec(gen, v, p, dim)
                    wi = index(w)
                    if not seen[wi]:
                        seen[wi] = True
                        orbit_size += 1
                        next_frontier.append(w)
            frontier = next_frontier
        sizes.append(orbit_size)
    return sizes
