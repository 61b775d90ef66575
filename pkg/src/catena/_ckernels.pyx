# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; see ``_pykernels`` for the reference semantics."""
import numpy as np
cimport numpy as cnp

cnp.import_array()


def closure(const int[:, :, ::1] tables, const unsigned char[::1] member):
    cdef Py_ssize_t k = tables.shape[0], n = tables.shape[1]
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] out_arr = np.zeros(n, dtype=np.uint8)
    cdef unsigned char[::1] out = out_arr
    cdef cnp.ndarray[cnp.int32_t, ndim=1] elems_arr = np.empty(n, dtype=np.int32)
    cdef int[::1] elems = elems_arr
    cdef Py_ssize_t count = 0, i, j, t
    cdef int x, y, z
    for i in range(n):
        if member[i]:
            out[i] = 1
            elems[count] = <int>i
            count += 1
    i = 0
    while i < count:
        x = elems[i]
        for j in range(i + 1):
            y = elems[j]
            for t in range(k):
                z = tables[t, x, y]
                if not out[z]:
                    out[z] = 1
                    elems[count] = z
                    count += 1
                z = tables[t, y, x]
                if not out[z]:
                    out[z] = 1
                    elems[count] = z
                    count += 1
        i += 1
    return out_arr


def join_meet(const unsigned char[:, ::1] leq):
    cdef Py_ssize_t n = leq.shape[0], a, b, c
    cdef cnp.ndarray[cnp.int32_t, ndim=2] join_arr = np.full((n, n), -1, dtype=np.int32)
    cdef cnp.ndarray[cnp.int32_t, ndim=2] meet_arr = np.full((n, n), -1, dtype=np.int32)
    cdef int[:, ::1] join = join_arr
    cdef int[:, ::1] meet = meet_arr
    cdef cnp.ndarray[cnp.int32_t, ndim=1] down_arr = np.zeros(n, dtype=np.int32)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] up_arr = np.zeros(n, dtype=np.int32)
    cdef int[::1] down = down_arr
    cdef int[::1] up = up_arr
    cdef int best, ok
    for a in range(n):
        for b in range(n):
            if leq[a, b]:
                up[a] += 1
                down[b] += 1
    for a in range(n):
        for b in range(a, n):
            best = -1
            for c in range(n):
                if leq[a, c] and leq[b, c] and (best < 0 or down[c] < down[best]):
                    best = <int>c
            ok = best >= 0
            if ok:
                for c in range(n):
                    if leq[a, c] and leq[b, c] and not leq[best, c]:
                        ok = 0
                        break
            if not ok:
                return join_arr, meet_arr, a * n + b
            join[a, b] = best
            join[b, a] = best
            best = -1
            for c in range(n):
                if leq[c, a] and leq[c, b] and (best < 0 or up[c] < up[best]):
                    best = <int>c
            ok = best >= 0
            if ok:
                for c in range(n):
                    if leq[c, a] and leq[c, b] and not leq[c, best]:
                        ok = 0
                        break
            if not ok:
                return join_arr, meet_arr, a * n + b
            meet[a, b] = best
            meet[b, a] = best
    return join_arr, meet_arr, -1


def distributive(const int[:, ::1] join, const int[:, ::1] meet, idx):
    cdef const long[::1] ix = np.ascontiguousarray(idx, dtype=np.int_)
    cdef Py_ssize_t m = ix.shape[0], i, j, l
    cdef long a, b, c
    for i in range(m):
        a = ix[i]
        for j in range(m):
            b = ix[j]
            for l in range(j, m):
                c = ix[l]
                if meet[a, join[b, c]] != join[meet[a, b], meet[a, c]]:
                    return False
    return True


def left_modular_elements(const int[:, ::1] join, const int[:, ::1] meet,
                          const unsigned char[:, ::1] leq):
    cdef Py_ssize_t n = join.shape[0], x, y, z
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] out_arr = np.ones(n, dtype=np.uint8)
    cdef unsigned char[::1] out = out_arr
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if leq[y, z] and meet[join[y, x], z] != join[y, meet[x, z]]:
                    out[x] = 0
                    break
            if not out[x]:
                break
    return out_arr


cdef inline int _popcount(unsigned int x):
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


def atom_children(const unsigned int[::1] up):
    cdef int k = up.shape[0]
    if k < 2 or k > 31:
        raise ValueError("atom_children needs between 2 and 31 elements")
    cdef unsigned int down[32]
    cdef unsigned int span[32]
    cdef int dsz[32]
    cdef int meet[32][32]
    cdef int atoms[32]
    cdef int natoms = 0
    cdef int x, y, z, i, depth, u
    cdef unsigned int c, F, F_up
    for x in range(k):
        down[x] = 0
        for y in range(k):
            if up[y] >> x & 1:
                down[x] |= 1u << y
    for x in range(k):
        dsz[x] = _popcount(down[x])
        span[x] = up[x] | down[x]
        if x and down[x] == (1u | (1u << x)):
            atoms[natoms] = x
            natoms += 1
    for x in range(k):
        for y in range(x, k):
            c = down[x] & down[y]
            for z in range(k):
                if c >> z & 1 and down[z] & c == c:
                    meet[x][y] = z
                    meet[y][x] = z
                    break

    cdef list out = [], unique = []
    # iterative antichain enumeration: next candidate index, chosen up-set and blocked set per level
    cdef int nxt[33]
    cdef unsigned int ups[33]
    cdef unsigned int blocked[33]
    cdef int inv_a0, inv_a1, o0, o1, ok, uniq
    depth = 0
    nxt[0] = 1
    ups[0] = 0
    blocked[0] = 0
    while depth >= 0:
        x = nxt[depth]
        while x < k and blocked[depth] >> x & 1:
            x += 1
        if x >= k:
            depth -= 1
            continue
        nxt[depth] = x + 1
        F = ups[depth] | up[x]
        depth += 1
        nxt[depth] = x + 1
        ups[depth] = F
        blocked[depth] = blocked[depth - 1] | span[x]

        ok = 1
        for y in range(k):
            if not (F >> y & 1):
                continue
            for z in range(y + 1, k):
                if F >> z & 1 and meet[y][z] != 0 and not (F >> meet[y][z] & 1):
                    ok = 0
                    break
            if not ok:
                break
        if not ok:
            continue
        inv_a0 = _popcount(F) + 1
        inv_a1 = 2
        for y in range(k):
            if F >> y & 1:
                inv_a1 += dsz[y] + 1
        uniq = 1
        for i in range(natoms):
            u = atoms[i]
            if F >> u & 1:
                continue
            F_up = up[u]
            o0 = _popcount(F_up)
            o1 = 0
            for y in range(k):
                if F_up >> y & 1:
                    o1 += dsz[y] + (F >> y & 1)
            if o0 > inv_a0 or (o0 == inv_a0 and o1 > inv_a1):
                ok = 0
                break
            if o0 == inv_a0 and o1 == inv_a1:
                uniq = 0
        if ok:
            out.append(F)
            unique.append(bool(uniq))
    return out, unique
