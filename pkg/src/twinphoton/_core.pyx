# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled summation kernels for the thermally weighted Fock-grid sums.

Operation-for-operation mirror of twinphoton._core_py (same expressions, same
fixed grid traversal, same compensated accumulation); see that module for the
reference semantics.
"""

from libc.math cimport cos, sin, sqrt

# initial-state codes, equal to the two-atom basis index
cdef enum:
    CODE_EE = 0
    CODE_EG = 1
    CODE_GE = 2
    CODE_GG = 3


cdef inline double _block_frequency(int m1, int m2) noexcept nogil:
    return sqrt(2.0 * ((m1 + 1.0) * (m2 + 1.0) + (<double>m1) * m2))


cdef void _xstate_term(int code, int n1, int n2, double gt, double* out) noexcept nogil:
    cdef double w, th, s, c, sf, cf, ch, sh, cos4, sin4, a, d, e, bce, dd, aa
    if code == CODE_EG or code == CODE_GE:
        w = _block_frequency(n1, n2)
        th = w * gt
        s = sin(th)
        sf = s * s / (w * w)
        ch = cos(0.5 * th)
        sh = sin(0.5 * th)
        cos4 = (ch * ch) * (ch * ch)
        sin4 = (sh * sh) * (sh * sh)
        a = (<double>n1) * n2 * sf
        d = (n1 + 1.0) * (n2 + 1.0) * sf
        e = -0.25 * (s * s)
        out[0] = a
        out[3] = d
        out[4] = e
        if code == CODE_EG:
            out[1] = cos4
            out[2] = sin4
        else:
            out[1] = sin4
            out[2] = cos4
    elif code == CODE_GG:
        if n1 == 0 or n2 == 0:
            # no photon pair available: the state is stationary
            out[0] = 0.0
            out[1] = 0.0
            out[2] = 0.0
            out[3] = 1.0
            out[4] = 0.0
        else:
            w = _block_frequency(n1 - 1, n2 - 1)
            th = w * gt
            s = sin(th)
            c = cos(th)
            sf = s * s / (w * w)
            cf = 2.0 * (c - 1.0) / (w * w)
            bce = (<double>n1) * n2 * sf
            dd = 1.0 + (<double>n1) * n2 * cf
            a = 0.0
            if n1 >= 2 and n2 >= 2:
                a = (<double>n1) * (n1 - 1) * n2 * (n2 - 1) * (cf * cf)
            out[0] = a
            out[1] = bce
            out[2] = bce
            out[3] = dd * dd
            out[4] = bce
    else:
        w = _block_frequency(n1 + 1, n2 + 1)
        th = w * gt
        s = sin(th)
        c = cos(th)
        sf = s * s / (w * w)
        cf = 2.0 * (c - 1.0) / (w * w)
        bce = (n1 + 1.0) * (n2 + 1.0) * sf
        aa = 1.0 + (n1 + 1.0) * (n2 + 1.0) * cf
        d = (n1 + 1.0) * (n1 + 2.0) * (n2 + 1.0) * (n2 + 2.0) * (cf * cf)
        out[0] = aa * aa
        out[1] = bce
        out[2] = bce
        out[3] = d
        out[4] = bce


def xstate_term(int code, int n1, int n2, double gt):
    """Single-Fock-pair X-state elements (A, B, C, D, E) at dimensionless time gt."""
    cdef double out[5]
    _xstate_term(code, n1, n2, gt, out)
    return (out[0], out[1], out[2], out[3], out[4])


def thermal_sweep(int code, double[::1] w1, double[::1] w2, double[::1] gts,
                  double[:, ::1] out):
    """Thermally weighted X-state elements for every time in ``gts``.

    Writes one row (A, B, C, D, E) per time sample into ``out``; fixed
    (n1 outer, n2 inner) summation order with Kahan compensation.
    """
    cdef Py_ssize_t i, n1, n2
    cdef int j
    cdef double gt, wa, w, y, t
    cdef double term[5]
    cdef double acc[5]
    cdef double comp[5]
    with nogil:
        for i in range(gts.shape[0]):
            gt = gts[i]
            for j in range(5):
                acc[j] = 0.0
                comp[j] = 0.0
            for n1 in range(w1.shape[0]):
                wa = w1[n1]
                for n2 in range(w2.shape[0]):
                    w = wa * w2[n2]
                    _xstate_term(code, <int>n1, <int>n2, gt, term)
                    for j in range(5):
                        y = w * term[j] - comp[j]
                        t = acc[j] + y
                        comp[j] = (t - acc[j]) - y
                        acc[j] = t
            for j in range(5):
                out[i, j] = acc[j]
