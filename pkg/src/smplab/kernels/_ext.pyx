# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan kernels; semantics mirror smplab.kernels._fallback."""

from libc.math cimport fabs, pow, sqrt

BACKEND = "cython"

DEF MAXLEN = 24


cdef inline double _rho(double p11, double p12, double p21, double p22) noexcept nogil:
    cdef double tr = p11 + p22
    cdef double det = p11 * p22 - p12 * p21
    cdef double disc = tr * tr - 4.0 * det
    if disc >= 0.0:
        return 0.5 * (fabs(tr) + sqrt(disc))
    return sqrt(det)


cdef inline double _norm(double p11, double p12, double p21, double p22) noexcept nogil:
    cdef double t = p11 * p11 + p12 * p12 + p21 * p21 + p22 * p22
    cdef double d = p11 * p22 - p12 * p21
    cdef double disc = t * t - 4.0 * d * d
    if disc < 0.0:
        disc = 0.0
    return sqrt(0.5 * (t + sqrt(disc)))


def scan_classes(a, b, int max_len, double tie_tol):
    """Per-length best/second spectral-radius roots over Lyndon words."""
    cdef double a11 = a[0], a12 = a[1], a21 = a[2], a22 = a[3]
    cdef double b11 = b[0], b12 = b[1], b21 = b[2], b22 = b[3]
    if max_len < 1 or max_len > MAXLEN:
        raise ValueError(f"max_len must be in 1..{MAXLEN}")

    cdef double best[MAXLEN + 1]
    cdef double second[MAXLEN + 1]
    cdef int k
    for k in range(max_len + 1):
        best[k] = -1.0
        second[k] = -1.0
    best_word = [None] * (max_len + 1)
    ties = []
    cdef double gbest = -1.0

    # Duval enumeration of Lyndon words of length <= max_len, lex order.
    cdef int wbuf[MAXLEN + 1]
    cdef int wlen = 1, m, i
    cdef double p11, p12, p21, p22, q11, q12, q21, q22, root
    wbuf[0] = -1
    while wlen > 0:
        wbuf[wlen - 1] += 1
        m = wlen
        # product along wbuf[0..m), left to right
        if wbuf[0] == 0:
            p11 = a11; p12 = a12; p21 = a21; p22 = a22
        else:
            p11 = b11; p12 = b12; p21 = b21; p22 = b22
        for i in range(1, m):
            if wbuf[i] == 0:
                q11 = p11 * a11 + p12 * a21; q12 = p11 * a12 + p12 * a22
                q21 = p21 * a11 + p22 * a21; q22 = p21 * a12 + p22 * a22
            else:
                q11 = p11 * b11 + p12 * b21; q12 = p11 * b12 + p12 * b22
                q21 = p21 * b11 + p22 * b21; q22 = p21 * b12 + p22 * b22
            p11 = q11; p12 = q12; p21 = q21; p22 = q22
        root = pow(_rho(p11, p12, p21, p22), 1.0 / m)

        if root > best[m]:
            second[m] = best[m]
            best[m] = root
            best_word[m] = "".join("01"[wbuf[i]] for i in range(m))
        elif root > second[m]:
            second[m] = root

        if root >= gbest - tie_tol:
            ties.append(("".join("01"[wbuf[i]] for i in range(m)), root))
            if root > gbest:
                gbest = root
                if len(ties) > 256:
                    ties = [t for t in ties if t[1] >= gbest - tie_tol]

        # extend then pop trailing 1s
        while wlen < max_len:
            wbuf[wlen] = wbuf[wlen - m]
            wlen += 1
        while wlen > 0 and wbuf[wlen - 1] == 1:
            wlen -= 1

    nan = float("nan")
    neg_inf = float("-inf")
    best_root = [nan] + [best[k] for k in range(1, max_len + 1)]
    second_root = [nan] + [
        second[k] if second[k] >= 0.0 else neg_inf for k in range(1, max_len + 1)
    ]
    ties = [t for t in ties if t[1] >= gbest - tie_tol]
    return best_root, best_word, second_root, ties


cdef void _dfs(double p11, double p12, double p21, double p22,
               int depth, int max_len,
               const double* am, const double* bm, double* best) noexcept nogil:
    cdef double c11, c12, c21, c22, n
    if depth == max_len:
        return
    c11 = p11 * am[0] + p12 * am[2]; c12 = p11 * am[1] + p12 * am[3]
    c21 = p21 * am[0] + p22 * am[2]; c22 = p21 * am[1] + p22 * am[3]
    n = _norm(c11, c12, c21, c22)
    if n > best[depth + 1]:
        best[depth + 1] = n
    _dfs(c11, c12, c21, c22, depth + 1, max_len, am, bm, best)
    c11 = p11 * bm[0] + p12 * bm[2]; c12 = p11 * bm[1] + p12 * bm[3]
    c21 = p21 * bm[0] + p22 * bm[2]; c22 = p21 * bm[1] + p22 * bm[3]
    n = _norm(c11, c12, c21, c22)
    if n > best[depth + 1]:
        best[depth + 1] = n
    _dfs(c11, c12, c21, c22, depth + 1, max_len, am, bm, best)


def norm_profile(a, b, int max_len):
    """Per-length max operator norm over all 2^k products, as k-th roots."""
    if max_len < 1 or max_len > MAXLEN:
        raise ValueError(f"max_len must be in 1..{MAXLEN}")
    cdef double am[4]
    cdef double bm[4]
    cdef double best[MAXLEN + 1]
    cdef int i, k
    for i in range(4):
        am[i] = a[i]
        bm[i] = b[i]
    for k in range(max_len + 1):
        best[k] = 0.0
    with nogil:
        _dfs(1.0, 0.0, 0.0, 1.0, 0, max_len, am, bm, best)
    return [float("nan")] + [pow(best[k], 1.0 / k) for k in range(1, max_len + 1)]
