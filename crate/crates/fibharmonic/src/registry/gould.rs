//! Identities obtained from polynomial identities by specializing the free
//! variable at golden-ratio powers.

use super::*;
use crate::harmonic::binom_rat;

fn w_half(x: &HalfInt, k: i64) -> Rational {
    weight(x, k)
}

fn gould_base_lhs(a: &Assignment) -> Eval {
    let (n, x, y) = (a.int("n"), a.rat("x"), a.rat("y"));
    lsum(0, n, |k| {
        let b = binom_rat(&x, k).map_err(|e| EvalError::Internal(e.to_string()))?;
        Ok(LogValue::from_rational(
            &b * &pow_or_skip(&y, k, || format!("y^k at k={k}"))?,
        ))
    })
}

fn gould_base_rhs(a: &Assignment) -> Eval {
    let (n, x, y) = (a.int("n"), a.rat("x"), a.rat("y"));
    let one_plus = &Rational::one() + &y;
    lsum(0, n, |k| {
        let b = binom_rat(&(&Rational::int(n) - &x), k)
            .map_err(|e| EvalError::Internal(e.to_string()))?;
        let p = &pow_or_skip(&one_plus, n - k, || format!("(1+y)^(n-k) at k={k}"))?
            * &pow_or_skip(&y, k, || format!("y^k at k={k}"))?;
        Ok(LogValue::from_rational(&(&sign(k) * &b) * &p))
    })
}

fn gould_g_lhs(a: &Assignment) -> Eval {
    let (n, t, x, seed) = (a.int("n"), a.int("t"), a.half("x"), a.seed("seed"));
    lsum(0, n, |k| {
        Ok(LogValue::from_rational(
            &binom_int_lower(&x, k)? * &gibr(&seed, k + t),
        ))
    })
}

fn gould_g_rhs(a: &Assignment) -> Eval {
    let (n, t, x, seed) = (a.int("n"), a.int("t"), a.half("x"), a.seed("seed"));
    let nx = &HalfInt::from_int(n) - &x;
    lsum(0, n, |k| {
        Ok(LogValue::from_rational(
            &(&sign(k) * &binom_int_lower(&nx, k)?) * &gibr(&seed, 2 * n - k + t),
        ))
    })
}

fn gould_h_lhs(a: &Assignment) -> Eval {
    let (n, t, x, seed) = (a.int("n"), a.int("t"), a.half("x"), a.seed("seed"));
    lsum(0, n, |k| {
        Ok(LogValue::from_rational(
            &w_half(&x, k) * &gibr(&seed, k + t),
        ))
    })
}

fn gould_h_rhs(a: &Assignment) -> Eval {
    let (n, t, x, seed) = (a.int("n"), a.int("t"), a.half("x"), a.seed("seed"));
    let nx = &HalfInt::from_int(n) - &x;
    lsum(0, n, |k| {
        Ok(LogValue::from_rational(
            &(&sign(k) * &w_half(&nx, k)) * &gibr(&seed, 2 * n - k + t),
        ))
    })
}

fn gould_o_lhs(a: &Assignment) -> Eval {
    let (n, t, seed) = (a.int("n"), a.int("t"), a.seed("seed"));
    lsum(0, n, |k| {
        let c = &sign(k) * &Rational::pow2(-2 * k);
        Ok(LogValue::from_rational(
            &(&c * &o_at(k + 1)?) * &gibr(&seed, k + t),
        ))
    })
}

fn gould_o_rhs(a: &Assignment) -> Eval {
    let (n, t, seed) = (a.int("n"), a.int("t"), a.seed("seed"));
    let sum = rsum(0, n, |k| {
        let c = &(&sign(k + 1) * &chooser(2 * k, k))
            * &(&Rational::pow2(-(2 * k + 1)) * &inv_choose(n, k)?);
        Ok(&(&c * &(&o_at(n + 1)? - &o_at(n - k)?)) * &gibr(&seed, 2 * n - k + t))
    })?;
    Ok(LogValue::from_rational(&rat(2 * n + 1) * &sum))
}

fn gould_cube_lhs(a: &Assignment) -> Eval {
    let (n, t, x, seed) = (a.int("n"), a.int("t"), a.half("x"), a.seed("seed"));
    lsum(0, n, |k| {
        let tail = &gibr(&seed, 2 * k + t) - &sign(k);
        Ok(LogValue::from_rational(
            &(&w_half(&x, k) * &gibr(&seed, k + t)) * &tail,
        ))
    })
}

fn gould_cube_rhs(a: &Assignment) -> Eval {
    let (n, t, x, seed) = (a.int("n"), a.int("t"), a.half("x"), a.seed("seed"));
    let nx = &HalfInt::from_int(n) - &x;
    lsum(0, n, |k| {
        let c = &(&sign(k) * &Rational::pow2(n - k)) * &w_half(&nx, k);
        Ok(LogValue::from_rational(
            &c * &gibr(&seed, 2 * n + k + t),
        ))
    })
}

/// H_b + H_{n-b} - H_{b-n+k}, the right-side weight of the second Gould
/// family; any harmonic pole skips the point.
fn gw(b: &HalfInt, n: i64, k: i64) -> Eval {
    let nb = &HalfInt::from_int(n) - b;
    let bnk = &(b - n) + k;
    Ok(&(&h_at(b)? + &h_at(&nb)?) - &h_at(&bnk)?)
}

/// The left-side factors C(n-b, k-b) H_{k-b} (1+x)^k summed with signs and
/// an optional 2^k scale; today's displays share this spine.
fn gould2_lhs_sum(
    n: i64,
    b: &HalfInt,
    scale_pow2: bool,
    sign_shift: i64,
    mut tail: impl FnMut(i64) -> REval,
) -> Eval {
    let nb = &HalfInt::from_int(n) - b;
    lsum(0, n, |k| {
        let h = h_at(&(&HalfInt::from_int(k) - b))?;
        let kb = &HalfInt::from_int(k) - b;
        let c = binom_half(&nb, &kb)?;
        let mut coeff = &sign(n - k + sign_shift) * &c;
        if scale_pow2 {
            coeff = &coeff * &Rational::pow2(k);
        }
        Ok(h.scale(&(&coeff * &tail(k)?)))
    })
}

fn gould2_base_lhs(a: &Assignment) -> Eval {
    let (n, b, x) = (a.int("n"), a.half("b"), a.rat("x"));
    let one_plus = &Rational::one() + &x;
    gould2_lhs_sum(n, &b, false, 0, |k| {
        pow_or_skip(&one_plus, k, || format!("(1+x)^k at k={k}"))
    })
}

fn gould2_base_rhs(a: &Assignment) -> Eval {
    let (n, b, x) = (a.int("n"), a.half("b"), a.rat("x"));
    lsum(0, n, |k| {
        let c = binom_half(&b, &HalfInt::from_int(n - k))?;
        let xk = pow_or_skip(&x, k, || format!("x^k at k={k}"))?;
        Ok(gw(&b, n, k)?.scale(&(&c * &xk)))
    })
}

fn gould2_f_lhs(a: &Assignment) -> Eval {
    let (n, b) = (a.int("n"), a.half("b"));
    gould2_lhs_sum(n, &b, false, 0, |k| Ok(fibr(2 * k)))
}

fn gould2_f_rhs(a: &Assignment) -> Eval {
    let (n, b) = (a.int("n"), a.half("b"));
    lsum(0, n, |k| {
        let c = binom_half(&b, &HalfInt::from_int(n - k))?;
        Ok(gw(&b, n, k)?.scale(&(&c * &fibr(k))))
    })
}

fn gould2_g_lhs(a: &Assignment) -> Eval {
    let (n, b, t, seed) = (a.int("n"), a.half("b"), a.int("t"), a.seed("seed"));
    gould2_lhs_sum(n, &b, false, 0, |k| Ok(gibr(&seed, 2 * k + t)))
}

fn gould2_g_rhs(a: &Assignment) -> Eval {
    let (n, b, t, seed) = (a.int("n"), a.half("b"), a.int("t"), a.seed("seed"));
    lsum(0, n, |k| {
        let c = binom_half(&b, &HalfInt::from_int(n - k))?;
        Ok(gw(&b, n, k)?.scale(&(&c * &gibr(&seed, k + t))))
    })
}

fn gould2_alt_lhs(a: &Assignment) -> Eval {
    let (n, b, t, seed) = (a.int("n"), a.half("b"), a.int("t"), a.seed("seed"));
    gould2_lhs_sum(n, &b, false, 0, |k| Ok(gibr(&seed, k + t)))
}

fn gould2_alt_rhs(a: &Assignment) -> Eval {
    let (n, b, t, seed) = (a.int("n"), a.half("b"), a.int("t"), a.seed("seed"));
    lsum(0, n, |k| {
        let c = &sign(k) * &binom_half(&b, &HalfInt::from_int(n - k))?;
        Ok(gw(&b, n, k)?.scale(&(&c * &gibr(&seed, k + t))))
    })
}

fn gould2_3t_lhs(a: &Assignment) -> Eval {
    let (n, b, t, seed) = (a.int("n"), a.half("b"), a.int("t"), a.seed("seed"));
    gould2_lhs_sum(n, &b, true, 0, |k| Ok(gibr(&seed, 2 * k + t)))
}

fn gould2_3t_rhs(a: &Assignment) -> Eval {
    let (n, b, t, seed) = (a.int("n"), a.half("b"), a.int("t"), a.seed("seed"));
    lsum(0, n, |k| {
        let c = binom_half(&b, &HalfInt::from_int(n - k))?;
        Ok(gw(&b, n, k)?.scale(&(&c * &gibr(&seed, 3 * k + t))))
    })
}

fn gould2_3t_alt_lhs(a: &Assignment) -> Eval {
    let (n, b, t, seed) = (a.int("n"), a.half("b"), a.int("t"), a.seed("seed"));
    gould2_lhs_sum(n, &b, true, 1, |k| Ok(gibr(&seed, k + t)))
}

fn gould2_3t_alt_rhs(a: &Assignment) -> Eval {
    let (n, b, t, seed) = (a.int("n"), a.half("b"), a.int("t"), a.seed("seed"));
    lsum(0, n, |k| {
        let c = &sign(k) * &binom_half(&b, &HalfInt::from_int(n - k))?;
        Ok(gw(&b, n, k)?.scale(&(&c * &gibr(&seed, 3 * k + t))))
    })
}

fn is_neg_half(h: &HalfInt) -> bool {
    *h == HalfInt::halves(-1)
}

fn x_pole_free(a: &Assignment) -> bool {
    // Integer x at or above n keeps H_{x-k} off the poles; x = -1/2 stays on
    // the half-integer lattice where no poles exist.
    let x = a.half("x");
    is_neg_half(&x) || x.as_int().is_some_and(|x| x >= a.int("n"))
}

fn b_pole_free(a: &Assignment) -> bool {
    // b half-integer at or above n - 1/2, or integer at or above n.
    let b = a.half("b");
    let lo = HalfInt::halves(2 * a.int("n") - 1);
    b >= lo
}

const P_X_FREE: ParamSpec = ParamSpec {
    name: "x",
    kind: ParamKind::Rat,
    domain: Domain::Rats(&[(-2, 1), (-1, 2), (1, 3), (1, 1), (5, 2)]),
};

const P_Y_FREE: ParamSpec = ParamSpec {
    name: "y",
    kind: ParamKind::Rat,
    domain: Domain::Rats(&[(-3, 1), (-1, 2), (1, 4), (1, 1), (2, 1)]),
};

// x in {n, n+1, n+2} or -1/2: the pole-free slots of the harmonic-weighted
// displays.
const P_X_NEAR_N: ParamSpec = ParamSpec {
    name: "x",
    kind: ParamKind::Half,
    domain: Domain::Rel {
        bases: &["n"],
        offsets_twice: &[0, 2, 4],
        extras_twice: &[-1],
    },
};

// x for the harmonic-free display also samples small absolute values.
const P_X_WIDE: ParamSpec = ParamSpec {
    name: "x",
    kind: ParamKind::Half,
    domain: Domain::Rel {
        bases: &["n"],
        offsets_twice: &[0],
        extras_twice: &[-1, 0, 1, 2, 4],
    },
};

const P_B: ParamSpec = ParamSpec {
    name: "b",
    kind: ParamKind::Half,
    domain: Domain::Rel {
        bases: &["n"],
        offsets_twice: &[-1, 0, 1, 2, 4],
        extras_twice: &[],
    },
};

pub(super) static ENTRIES: &[IdentityEntry] = &[
    IdentityEntry {
        id: "gould-base",
        family: Family::Gould,
        anchor: "eq.46",
        params: &[P_N0, P_X_FREE, P_Y_FREE],
        admissible: None,
        lhs: gould_base_lhs,
        rhs: gould_base_rhs,
    },
    IdentityEntry {
        id: "gould-G",
        family: Family::Gould,
        anchor: "eq.48",
        params: &[P_N0, P_T, P_X_WIDE, P_SEED],
        admissible: None,
        lhs: gould_g_lhs,
        rhs: gould_g_rhs,
    },
    IdentityEntry {
        id: "gould-H",
        family: Family::Gould,
        anchor: "eq.47",
        params: &[P_N0, P_T, P_X_NEAR_N, P_SEED],
        admissible: Some(x_pole_free),
        lhs: gould_h_lhs,
        rhs: gould_h_rhs,
    },
    IdentityEntry {
        id: "gould-O",
        family: Family::Gould,
        anchor: "cor.47.odd",
        params: &[P_N0, P_T, P_SEED],
        admissible: None,
        lhs: gould_o_lhs,
        rhs: gould_o_rhs,
    },
    IdentityEntry {
        id: "gould-cube",
        family: Family::Gould,
        anchor: "thm.47.cube",
        params: &[P_N0, P_T, P_X_NEAR_N, P_SEED],
        admissible: Some(x_pole_free),
        lhs: gould_cube_lhs,
        rhs: gould_cube_rhs,
    },
    IdentityEntry {
        id: "gould2-base",
        family: Family::Gould,
        anchor: "eq.gldge7l",
        params: &[P_N0, P_B, P_X_FREE],
        admissible: Some(b_pole_free),
        lhs: gould2_base_lhs,
        rhs: gould2_base_rhs,
    },
    IdentityEntry {
        id: "gould2-F",
        family: Family::Gould,
        anchor: "today55.fib",
        params: &[P_N0, P_B],
        admissible: Some(b_pole_free),
        lhs: gould2_f_lhs,
        rhs: gould2_f_rhs,
    },
    IdentityEntry {
        id: "gould2-G",
        family: Family::Gould,
        anchor: "eq.today55",
        params: &[P_N0, P_B, P_T, P_SEED],
        admissible: Some(b_pole_free),
        lhs: gould2_g_lhs,
        rhs: gould2_g_rhs,
    },
    IdentityEntry {
        id: "gould2-alt",
        family: Family::Gould,
        anchor: "eq.today56",
        params: &[P_N0, P_B, P_T, P_SEED],
        admissible: Some(b_pole_free),
        lhs: gould2_alt_lhs,
        rhs: gould2_alt_rhs,
    },
    IdentityEntry {
        id: "gould2-3t",
        family: Family::Gould,
        anchor: "eq.today57",
        params: &[P_N0, P_B, P_T, P_SEED],
        admissible: Some(b_pole_free),
        lhs: gould2_3t_lhs,
        rhs: gould2_3t_rhs,
    },
    IdentityEntry {
        id: "gould2-3t-alt",
        family: Family::Gould,
        anchor: "eq.today58",
        params: &[P_N0, P_B, P_T, P_SEED],
        admissible: Some(b_pole_free),
        lhs: gould2_3t_alt_lhs,
        rhs: gould2_3t_alt_rhs,
    },
];
