# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled counting kernels.

Drop-in twins of league_ties._pure (that module documents the semantics);
this one exists because the season sweep and the completion search dominate
the runtime from n=5 upward.  Accumulators are 64-bit with explicit guards:
a count that will not fit raises OverflowError rather than wrapping.
"""

from libc.stdint cimport int64_t, uint64_t

cdef int _PA[6]
cdef int _PB[6]
cdef int _PM[6]
cdef int _SA[5]
cdef int _SB[5]
cdef int _SD[5]

cdef int _init_i
for _init_i in range(6):
    _PA[_init_i] = (0, 1, 2, 3, 4, 6)[_init_i]
    _PB[_init_i] = (6, 4, 2, 3, 1, 0)[_init_i]
    _PM[_init_i] = (1, 2, 1, 2, 2, 1)[_init_i]
for _init_i in range(5):
    _SA[_init_i] = (1, 1, 1, 1, 2)[_init_i]
    _SB[_init_i] = (-2, -2, 1, -2, -1)[_init_i]
    _SD[_init_i] = (1, -1, 1, 0, -1)[_init_i]

cdef uint64_t _U64_MAX = <uint64_t> -1
cdef int64_t _I64_MAX = <int64_t> (_U64_MAX >> 1)


def count_tied_range(n, start, stop):
    """Tied outcomes among base-3 season encodings in [start, stop)."""
    cdef int nn = n
    if not 2 <= nn <= 9:
        raise ValueError(f"season sweep supports 2 <= n <= 9, got {n}")
    cdef int m = nn * (nn - 1)
    space = 3 ** m
    if not 0 <= start <= stop <= space:
        raise ValueError(f"bad encoding range [{start}, {stop}) for n={n}")
    if start == stop:
        return 0
    cdef int64_t remaining = stop - start  # raises OverflowError when absurd

    cdef int mh[72]
    cdef int ma[72]
    cdef int digits[72]
    cdef int points[9]
    cdef int i, h, a, r, v, p0, idx
    cdef bint tied

    i = 0
    for h in range(nn):
        for a in range(nn):
            if a != h:
                mh[i] = h
                ma[i] = a
                i += 1
    for v in range(nn):
        points[v] = 0
    e = start  # digit extraction in Python ints: start may exceed 64 bits
    for i in range(m):
        e, rem = divmod(e, 3)
        r = rem
        digits[i] = r
        if r == 0:
            points[ma[i]] += 3
        elif r == 1:
            points[mh[i]] += 1
            points[ma[i]] += 1
        else:
            points[mh[i]] += 3

    cdef int64_t count = 0
    while True:
        p0 = points[0]
        tied = 1
        for v in range(1, nn):
            if points[v] != p0:
                tied = 0
                break
        if tied:
            count += 1
        remaining -= 1
        if remaining == 0:
            return count
        idx = 0
        while True:
            h = mh[idx]
            a = ma[idx]
            r = digits[idx]
            if r == 0:  # away win -> draw
                digits[idx] = 1
                points[h] += 1
                points[a] -= 2
                break
            elif r == 1:  # draw -> home win
                digits[idx] = 2
                points[h] += 2
                points[a] -= 1
                break
            else:  # home win -> away win, carry
                digits[idx] = 0
                points[h] -= 3
                points[a] += 3
                idx += 1


def completions_sweep(base, target):
    """Weighted full enumeration over the pair encounters among the teams."""
    cdef int k = len(base)
    if k > 8:
        raise ValueError(f"completion sweep supports at most 8 teams, got {k}")
    cdef int tgt = target
    cdef int points[8]
    cdef int pair_i[28]
    cdef int pair_j[28]
    cdef int codes[28]
    cdef int i, j, m, c, idx, v, lo, hi
    cdef int doubled = 0

    for v in range(k):
        points[v] = base[v]
    m = 0
    for i in range(k):
        for j in range(i + 1, k):
            pair_i[m] = i
            pair_j[m] = j
            m += 1
    if m == 0:
        for v in range(k):
            if points[v] != tgt:
                return 0
        return 1

    space = 6 ** (<object> m)  # Python int
    cdef int64_t remaining = space  # raises OverflowError when absurd
    for idx in range(m):
        codes[idx] = 0
        points[pair_j[idx]] += 6  # code 0 gives (0, 6)

    cdef uint64_t count = 0
    cdef uint64_t inc
    while True:
        lo = points[0]
        hi = points[0]
        for v in range(1, k):
            if points[v] < lo:
                lo = points[v]
            elif points[v] > hi:
                hi = points[v]
        if lo == hi == tgt:
            inc = (<uint64_t> 1) << doubled
            if count > _U64_MAX - inc:
                raise OverflowError("completion sweep count exceeds 64 bits")
            count += inc
        remaining -= 1
        if remaining == 0:
            return count
        idx = 0
        while True:
            c = codes[idx]
            i = pair_i[idx]
            j = pair_j[idx]
            if c == 5:  # wrap (6,0) -> (0,6), carry
                codes[idx] = 0
                points[i] -= 6
                points[j] += 6
                idx += 1
            else:
                codes[idx] = c + 1
                points[i] += _SA[c]
                points[j] += _SB[c]
                doubled += _SD[c]
                break


cdef int64_t _search_row(
    int i, int j, int k, int64_t w, int *points, int target, bint strict
) except -1:
    cdef int64_t total, sub
    cdef int code, pi, pj, na, nb
    if j == k:  # row of team i complete: its total is final
        if points[i] != target:
            return 0
        if i + 1 == k - 1:
            return w if points[k - 1] == target else 0
        return _search_row(i + 1, i + 2, k, w, points, target, strict)
    total = 0
    pi = points[i]
    pj = points[j]
    for code in range(6):
        na = pi + _PA[code]
        nb = pj + _PB[code]
        if not strict and (na > target or nb > target):
            continue
        points[i] = na
        points[j] = nb
        sub = _search_row(i, j + 1, k, w * _PM[code], points, target, strict)
        if sub > 0:
            if total > _I64_MAX - sub:
                points[i] = pi
                points[j] = pj
                raise OverflowError("completion count exceeds 64 bits")
            total += sub
    points[i] = pi
    points[j] = pj
    return total


def completions_search(base, target, strict=False, prefix=()):
    """Weighted completion count by row-wise recursive search."""
    cdef int k = len(base)
    if k > 8:
        raise ValueError(f"completion search supports at most 8 teams, got {k}")
    cdef int plen = len(prefix)
    if plen > (k - 1 if k > 1 else 0):
        raise ValueError(f"prefix of {plen} codes exceeds the first row")
    cdef int tgt = target
    cdef bint strict_c = strict
    cdef int points[9]
    cdef int v, d, code
    for v in range(k):
        points[v] = base[v]
    if k == 1:
        return 1 if points[0] == tgt else 0

    cdef int64_t w = 1
    for d in range(plen):
        code = prefix[d]
        if not 0 <= code <= 5:
            raise ValueError(f"prefix codes must be 0..5, got {prefix}")
        points[0] += _PA[code]
        points[d + 1] += _PB[code]
        w *= _PM[code]
        if not strict_c and (points[0] > tgt or points[d + 1] > tgt):
            return 0
    return _search_row(0, 1 + plen, k, w, points, tgt, strict_c)
