# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for matrix-group closure and orbit enumeration.

Drop-in twin of the pure-Python backend: same functions, same outputs.
Matrices are row-major tuples of residues mod p; the hot multiply loops
run on C integer buffers.
"""

from libc.stdlib cimport free, malloc

BACKEND = "compiled"

DEF MAXDIM = 24
DEF MAXCELLS = MAXDIM * MAXDIM


cdef void _load(tuple t, long* buf, int cells):
    cdef int i
    for i in range(cells):
        buf[i] = t[i]


cdef tuple _dump(long* buf, int cells):
    cdef int i
    return tuple([buf[i] for i in range(cells)])


cdef void _mul(long* a, long* b, long* out, long p, int dim):
    cdef int i, j, k
    cdef long acc
    for i in range(dim):
        for j in range(dim):
            acc = 0
            for k in range(dim):
                acc += a[i * dim + k] * b[k * dim + j]
            out[i * dim + j] = acc % p


def mat_mul(tuple a, tuple b, long p, int dim):
    """Product of two row-major dim x dim matrices mod p."""
    cdef long abuf[MAXCELLS]
    cdef long bbuf[MAXCELLS]
    cdef long obuf[MAXCELLS]
    if dim > MAXDIM:
        raise ValueError("dimension exceeds compiled kernel limit")
    cdef int cells = dim * dim
    _load(a, abuf, cells)
    _load(b, bbuf, cells)
    _mul(abuf, bbuf, obuf, p, dim)
    return _dump(obuf, cells)


def mat_vec(tuple m, tuple v, long p, int dim):
    """Matrix times column vector mod p."""
    cdef long mbuf[MAXCELLS]
    cdef long vbuf[MAXDIM]
    cdef long obuf[MAXDIM]
    cdef int i, j
    cdef long acc
    if dim > MAXDIM:
        raise ValueError("dimension exceeds compiled kernel limit")
    _load(m, mbuf, dim * dim)
    for i in range(dim):
        vbuf[i] = v[i]
    for i in range(dim):
        acc = 0
        for j in range(dim):
            acc += mbuf[i * dim + j] * vbuf[j]
        obuf[i] = acc % p
    return tuple([obuf[i] for i in range(dim)])


def close_set(list generators, long p, int dim, long cap):
    """Subgroup elements generated by ``generators``; None if > cap."""
    cdef int cells = dim * dim
    cdef int i, g
    cdef long ebuf[MAXCELLS]
    cdef long obuf[MAXCELLS]
    if dim > MAXDIM:
        raise ValueError("dimension exceeds compiled kernel limit")
    cdef int ngens = len(generators)
    cdef long* gbuf = <long*> malloc(ngens * cells * sizeof(long))
    if not gbuf:
        raise MemoryError()
    try:
        for g in range(ngens):
            _load(generators[g], gbuf + g * cells, cells)
        identity = tuple(
            [1 if i // dim == i % dim else 0 for i in range(cells)]
        )
        elements = {identity}
        frontier = [identity]
        while frontier:
            next_frontier = []
            for elem in frontier:
                _load(elem, ebuf, cells)
                for g in range(ngens):
                    _mul(ebuf, gbuf + g * cells, obuf, p, dim)
                    product = _dump(obuf, cells)
                    if product not in elements:
                        elements.add(product)
                        if len(elements) > cap:
                            return None
                        next_frontier.append(product)
            frontier = next_frontier
        return elements
    finally:
        free(gbuf)


def orbit_partition(list generators, long p, int dim):
    """Sizes of the generator-closure orbits on all p^dim vectors."""
    cdef int i, j, g
    cdef long total = 1
    cdef long start, vi, wi, acc, rem, orbit_size
    cdef long vbuf[MAXDIM]
    cdef long wbuf[MAXDIM]
    cdef long weights[MAXDIM]
    if dim > MAXDIM:
        raise ValueError("dimension exceeds compiled kernel limit")
    for i in range(dim):
        total *= p
    weights[dim - 1] = 1
    for i in range(dim - 2, -1, -1):
        weights[i] = weights[i + 1] * p
    cdef int cells = dim * dim
    cdef int ngens = len(generators)
    cdef long* gbuf = <long*> malloc(ngens * cells * sizeof(long))
    cdef char* seen = <char*> malloc(total * sizeof(char))
    if not gbuf or not seen:
        if gbuf:
            free(gbuf)
        if seen:
            free(seen)
        raise MemoryError()
    try:
        for g in range(ngens):
            _load(generators[g], gbuf + g * cells, cells)
        for start in range(total):
            seen[start] = 0
        sizes = []
        for start in range(total):
            if seen[start]:
                continue
            seen[start] = 1
            orbit_size = 1
            frontier = [start]
            while frontier:
                next_frontier = []
                for item in frontier:
                    vi = item
                    rem = vi
                    for i in range(dim):
                        vbuf[i] = rem // weights[i]
                        rem %= weights[i]
                    for g in range(ngens):
                        for i in range(dim):
                            acc = 0
                            for j in range(dim):
                                acc += gbuf[g * cells + i * dim + j] * vbuf[j]
                            wbuf[i] = acc % p
                        wi = 0
                        for i in range(dim):
                            wi += wbuf[i] * weights[i]
                        if not seen[wi]:
                            seen[wi] = 1
                            orbit_size += 1
                            next_frontier.append(wi)
                frontier = next_frontier
            sizes.append(orbit_size)
        return sizes
    finally:
        free(gbuf)
        free(seen)
