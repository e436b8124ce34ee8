"""Input table for the emitted golden-vector file.

One entry per record: operation name, inputs, and the absolute
tolerance the consuming test suite applies.  Values are never stored
here; every emission recomputes them from scratch.
"""

RECORDS = (
    {
        "op": 'riemann_zeta',
        "s_re": 0.5,
        "s_im": 0.0,
        "x": 0.0,
        "side": '',
        "extra": {},
        "abs_tol": 1e-12,
    },
    {
        "op": 'riemann_zeta',
        "s_re": 2.5,
        "s_im": 0.0,
        "x": 0.0,
        "side": '',
        "extra": {},
        "abs_tol": 1e-12,
    },
    {
        "op": 'riemann_zeta',
        "s_re": -0.5,
        "s_im": 0.0,
        "x": 0.0,
        "side": '',
        "extra": {},
        "abs_tol": 1e-12,
    },
    {
        "op": 'riemann_zeta',
        "s_re": 0.5,
        "s_im": 14.1,
        "x": 0.0,
        "side": '',
        "extra": {},
        "abs_tol": 1e-12,
    },
    {
        "op": 'riemann_zeta',
        "s_re": -22.5,
        "s_im": 3.0,
        "x": 0.0,
        "side": '',
        "extra": {},
        "abs_tol": 1e-07,
    },
    {
        "op": 'gamma',
        "s_re": 0.25,
        "s_im": 0.0,
        "x": 0.0,
        "side": '',
        "extra": {},
        "abs_tol": 1e-12,
    },
    {
        "op": 'gamma',
        "s_re": -2.5,
        "s_im": 0.0,
        "x": 0.0,
        "side": '',
        "extra": {},
        "abs_tol": 1e-12,
    },
    {
        "op": 'gamma',
        "s_re": 6.3,
        "s_im": -4.2,
        "x": 0.0,
        "side": '',
        "extra": {},
        "abs_tol": 1e-12,
    },
    {
        "op": 'gamma',
        "s_re": 0.5,
        "s_im": 3.0,
        "x": 0.0,
        "side": '',
        "extra": {},
        "abs_tol": 1e-14,
    },
    {
        "op": 'digamma',
        "s_re": 3.7,
        "s_im": 2.1,
        "x": 0.0,
        "side": '',
        "extra": {},
        "abs_tol": 1e-12,
    },
    {
        "op": 'digamma',
        "s_re": -3.3,
        "s_im": 0.0,
        "x": 0.0,
        "side": '',
        "extra": {},
        "abs_tol": 1e-11,
    },
    {
        "op": 'li_eval',
        "s_re": 0.5,
        "s_im": 0.0,
        "x": -1.0,
        "side": '',
        "extra": {},
        "abs_tol": 1e-12,
    },
    {
        "op": 'li_eval',
        "s_re": -0.5,
        "s_im": 0.0,
        "x": -0.3,
        "side": '',
        "extra": {},
        "abs_tol": 1e-11,
    },
    {
        "op": 'li_eval',
        "s_re": 2.5,
        "s_im": 0.0,
        "x": -2.0,
        "side": '',
        "extra": {},
        "abs_tol": 1e-12,
    },
    {
        "op": 'li_eval',
        "s_re": 1.5,
        "s_im": 0.7,
        "x": -1.0,
        "side": '',
        "extra": {},
        "abs_tol": 1e-12,
    },
    {
        "op": 'li_eval',
        "s_re": 0.5,
        "s_im": 0.0,
        "x": -0.75,
        "side": '',
        "extra": {},
        "abs_tol": 1e-12,
    },
    {
        "op": 'li_eval',
        "s_re": 2.0,
        "s_im": 0.0,
        "x": -1.0,
        "side": '',
        "extra": {},
        "abs_tol": 1e-12,
    },
    {
        "op": 'li_eval',
        "s_re": 3.0,
        "s_im": 0.0,
        "x": -0.5,
        "side": '',
        "extra": {},
        "abs_tol": 1e-12,
    },
    {
        "op": 'li_eval',
        "s_re": 1.0,
        "s_im": 0.0,
        "x": -3.0,
        "side": '',
        "extra": {},
        "abs_tol": 1e-12,
    },
    {
        "op": 'li_eval',
        "s_re": 4.0,
        "s_im": 0.0,
        "x": -0.2,
        "side": '',
        "extra": {},
        "abs_tol": 1e-12,
    },
    {
        "op": 'li_eval',
        "s_re": -1.5,
        "s_im": 0.0,
        "x": -0.4,
        "side": '',
        "extra": {},
        "abs_tol": 1e-11,
    },
    {
        "op": 'li_eval',
        "s_re": -2.0,
        "s_im": 0.0,
        "x": 1.0,
        "side": 'principal',
        "extra": {},
        "abs_tol": 1e-11,
    },
    {
        "op": 'li_eval',
        "s_re": 0.5,
        "s_im": 0.0,
        "x": 0.5,
        "side": 'above',
        "extra": {},
        "abs_tol": 1e-12,
    },
    {
        "op": 'li_eval',
        "s_re": 0.5,
        "s_im": 0.0,
        "x": 1.0,
        "side": 'principal',
        "extra": {},
        "abs_tol": 1e-12,
    },
    {
        "op": 'li_eval',
        "s_re": 0.25,
        "s_im": 0.0,
        "x": 2.0,
        "side": 'below',
        "extra": {},
        "abs_tol": 1e-12,
    },
    {
        "op": 'li_eval',
        "s_re": 2.0,
        "s_im": 0.0,
        "x": 0.05,
        "side": 'principal',
        "extra": {},
        "abs_tol": 1e-12,
    },
    {
        "op": 'li_eval',
        "s_re": 1.0,
        "s_im": 0.0,
        "x": 0.1,
        "side": 'principal',
        "extra": {},
        "abs_tol": 1e-12,
    },
    {
        "op": 'li_eval',
        "s_re": 2.001,
        "s_im": 0.0,
        "x": -1.0,
        "side": '',
        "extra": {},
        "abs_tol": 1e-09,
    },
    {
        "op": 'li_eval',
        "s_re": 1.999,
        "s_im": 0.0,
        "x": -1.0,
        "side": '',
        "extra": {},
        "abs_tol": 1e-09,
    },
    {
        "op": 'li_eval',
        "s_re": 2.0,
        "s_im": 1e-05,
        "x": -1.0,
        "side": '',
        "extra": {},
        "abs_tol": 1e-09,
    },
    {
        "op": 'Li_eval',
        "s_re": 0.5,
        "s_im": 0.0,
        "x": 2.0,
        "side": 'above',
        "extra": {},
        "abs_tol": 1e-12,
    },
    {
        "op": 'smooth_remainder',
        "s_re": 0.5,
        "s_im": 0.0,
        "x": -0.1,
        "side": '',
        "extra": {},
        "abs_tol": 1e-11,
    },
    {
        "op": 'smooth_remainder',
        "s_re": 0.5,
        "s_im": 0.0,
        "x": 0.1,
        "side": 'principal',
        "extra": {},
        "abs_tol": 1e-11,
    },
    {
        "op": 'smooth_remainder',
        "s_re": 2.0,
        "s_im": 0.0,
        "x": -0.05,
        "side": '',
        "extra": {},
        "abs_tol": 1e-11,
    },
    {
        "op": 'smooth_remainder',
        "s_re": 2.0,
        "s_im": 0.0,
        "x": 0.05,
        "side": 'principal',
        "extra": {},
        "abs_tol": 1e-11,
    },
    {
        "op": 'singular_eval',
        "s_re": 0.25,
        "s_im": 0.0,
        "x": 1.0,
        "side": 'principal',
        "extra": {},
        "abs_tol": 1e-12,
    },
    {
        "op": 'lambda_i',
        "s_re": 2.0,
        "s_im": 0.0,
        "x": -1.0,
        "side": '',
        "extra": {},
        "abs_tol": 1e-11,
    },
    {
        "op": 'lambda_i',
        "s_re": 2.0,
        "s_im": 0.0,
        "x": 0.3,
        "side": 'principal',
        "extra": {},
        "abs_tol": 1e-11,
    },
    {
        "op": 'lambda_i',
        "s_re": 4.0,
        "s_im": 0.0,
        "x": -0.5,
        "side": '',
        "extra": {},
        "abs_tol": 1e-11,
    },
    {
        "op": 'bloch_wigner',
        "s_re": 0.0,
        "s_im": 0.0,
        "x": 0.0,
        "side": '',
        "extra": {"z_im": 1.0},
        "abs_tol": 1e-11,
    },
    {
        "op": 'bloch_wigner',
        "s_re": 0.0,
        "s_im": 0.0,
        "x": 0.5,
        "side": '',
        "extra": {"z_im": 0.5},
        "abs_tol": 1e-11,
    },
    {
        "op": 'bloch_wigner',
        "s_re": 0.0,
        "s_im": 0.0,
        "x": 0.5,
        "side": '',
        "extra": {"z_im": 0.8660254037844386},
        "abs_tol": 1e-11,
    },
    {
        "op": 'bloch_wigner',
        "s_re": 0.0,
        "s_im": 0.0,
        "x": 2.0,
        "side": '',
        "extra": {"z_im": 1e-06},
        "abs_tol": 1e-13,
    },
    {
        "op": 'classical_modified',
        "s_re": 2.0,
        "s_im": 0.0,
        "x": 0.0,
        "side": 'imag_part',
        "extra": {"z_im": 1.0},
        "abs_tol": 1e-10,
    },
    {
        "op": 'profile',
        "s_re": 0.5,
        "s_im": 0.0,
        "x": 0.0,
        "side": '',
        "extra": {"f_c0": 1.0, "f_mu": 0.0, "f_sigma": 1.0},
        "abs_tol": 1e-11,
    },
    {
        "op": 'profile',
        "s_re": 1.5,
        "s_im": 0.5,
        "x": 1.2,
        "side": '',
        "extra": {"f_c0": 1.0, "f_c1": 0.0, "f_c2": 1.0, "f_mu": 0.0, "f_sigma": 1.0},
        "abs_tol": 1e-11,
    },
    {
        "op": 'pair_gamma_plus',
        "s_re": 2.0,
        "s_im": 0.0,
        "x": 0.0,
        "side": '',
        "extra": {"f_c0": 0.3989422804014327, "f_mu": 0.0, "f_sigma": 1.0},
        "abs_tol": 1e-11,
    },
    {
        "op": 'pair_gamma_plus',
        "s_re": 1.3,
        "s_im": 0.4,
        "x": 0.0,
        "side": '',
        "extra": {"f_c0": 0.0, "f_c1": 1.0, "f_c2": 0.0, "f_c3": -0.3, "f_mu": 0.4, "f_sigma": 0.8},
        "abs_tol": 1e-11,
    },
    {
        "op": 'pair_li0',
        "s_re": 0.0,
        "s_im": 0.0,
        "x": 0.0,
        "side": '',
        "extra": {"f_c0": 0.3989422804014327, "f_mu": 0.0, "f_sigma": 1.0},
        "abs_tol": 1e-10,
    },
    {
        "op": 'pair_li0',
        "s_re": 0.0,
        "s_im": 0.0,
        "x": 0.0,
        "side": '',
        "extra": {"f_c0": 0.0, "f_c1": 1.0, "f_c2": 0.0, "f_c3": -0.3, "f_mu": 0.4, "f_sigma": 0.8},
        "abs_tol": 1e-10,
    },
    {
        "op": 'pair_li0',
        "s_re": 0.0,
        "s_im": 0.0,
        "x": 0.0,
        "side": '',
        "extra": {"f_c0": 0.3989422804014327, "f_mu": 30.0, "f_sigma": 1.0},
        "abs_tol": 1e-10,
    },
    {
        "op": 'pair_li',
        "s_re": 1.0,
        "s_im": 0.0,
        "x": 0.0,
        "side": '',
        "extra": {"f_c0": 0.3989422804014327, "f_mu": 0.0, "f_sigma": 1.0},
        "abs_tol": 1e-10,
    },
    {
        "op": 'pair_li',
        "s_re": 2.5,
        "s_im": 0.0,
        "x": 0.0,
        "side": '',
        "extra": {"f_c0": 0.3989422804014327, "f_mu": -3.0, "f_sigma": 1.0},
        "abs_tol": 1e-10,
    },
    {
        "op": 'pair_li',
        "s_re": 2.0,
        "s_im": 0.0,
        "x": 0.0,
        "side": '',
        "extra": {"f_c0": 0.3989422804014327, "f_mu": -2.0, "f_sigma": 1.0},
        "abs_tol": 1e-10,
    },
    {
        "op": 'pair_li',
        "s_re": 1.0,
        "s_im": 0.0,
        "x": 0.0,
        "side": '',
        "extra": {"f_c0": 0.5319230405352436, "f_mu": 0.0, "f_sigma": 0.75},
        "abs_tol": 1e-10,
    },
    {
        "op": 'pair_li',
        "s_re": 0.5,
        "s_im": 0.0,
        "x": 0.0,
        "side": '',
        "extra": {"f_c0": 0.5319230405352436, "f_mu": 0.0, "f_sigma": 0.75},
        "abs_tol": 1e-10,
    },
    {
        "op": 'pair_li',
        "s_re": 0.5,
        "s_im": 0.0,
        "x": 0.0,
        "side": '',
        "extra": {"f_c0": 0.0, "f_c1": 1.0, "f_c2": 0.0, "f_c3": -0.3, "f_mu": 0.4, "f_sigma": 0.8},
        "abs_tol": 1e-10,
    },
    {
        "op": 'pair_direct',
        "s_re": 1.0,
        "s_im": 0.0,
        "x": 0.0,
        "side": '',
        "extra": {"f_c0": 0.5319230405352436, "f_mu": 0.0, "f_sigma": 0.75},
        "abs_tol": 1e-08,
    },
    {
        "op": 'pair_direct',
        "s_re": 2.0,
        "s_im": 0.0,
        "x": 0.0,
        "side": '',
        "extra": {"f_c0": 0.3989422804014327, "f_mu": -2.0, "f_sigma": 1.0},
        "abs_tol": 1e-08,
    },
    {
        "op": 'pair_eta',
        "s_re": -0.5,
        "s_im": 0.0,
        "x": 0.0,
        "side": 'minus',
        "extra": {"f_c0": 0.3989422804014327, "f_mu": 0.0, "f_sigma": 1.0},
        "abs_tol": 1e-10,
    },
    {
        "op": 'pair_eta',
        "s_re": -0.5,
        "s_im": 0.0,
        "x": 0.0,
        "side": 'minus',
        "extra": {"f_c0": 0.0, "f_c1": 1.0, "f_c2": 0.0, "f_c3": -0.3, "f_mu": 0.4, "f_sigma": 0.8},
        "abs_tol": 1e-10,
    },
)
