//! Partial-summation identities built on the Pascal-rule combinatorial step.
//!
//! The weight C(r, j)(H_r - H_{r-j}) is evaluated through `weight`, which is
//! the derivative polynomial of the binomial in its upper index; within these
//! entries' domains (r >= n + s + 1) the plain harmonic product would agree
//! everywhere, but the polynomial form also covers the boundary uses below.

use super::*;

fn w_at(r: i64, j: i64) -> Rational {
    weight(&HalfInt::from_int(r), j)
}

fn comb_o_f_lhs(a: &Assignment) -> Eval {
    let n = a.int("n");
    lsum(1, n, |k| {
        let c = &(&sign(k - 1) * &chooser(2 * k, k)) * &Rational::pow2(-2 * k);
        Ok(LogValue::from_rational(
            &c * &(&o_at(k)? * &fibr(k - 1)),
        ))
    })
}

fn comb_o_f_rhs(a: &Assignment) -> Eval {
    let n = a.int("n");
    let sum = rsum(1, n, |k| {
        let c = &(&sign(k - 1) * &chooser(2 * k, k)) * &Rational::pow2(-2 * k);
        let core = &(&rat(2 * k + 1) * &(&o_at(k + 1)? - &Rational::one())) * &fibr(k + 1);
        Ok(&c * &core)
    })?;
    let tail = &(&(&sign(n) * &chooser(2 * n, n)) * &Rational::pow2(-2 * n))
        * &(&(&rat(2 * n + 1) * &(&o_at(n + 1)? - &Rational::one())) * &fibr(n));
    Ok(LogValue::from_rational(&sum + &tail))
}

fn comb_h_g_lhs(a: &Assignment) -> Eval {
    let (n, s, t, r, seed) = (
        a.int("n"),
        a.int("s"),
        a.int("t"),
        a.int("r"),
        a.seed("seed"),
    );
    lsum(1, n, |k| {
        Ok(LogValue::from_rational(
            &w_at(r, k + s) * &gibr(&seed, k + t),
        ))
    })
}

fn comb_h_g_rhs(a: &Assignment) -> Eval {
    let (n, s, t, r, seed) = (
        a.int("n"),
        a.int("s"),
        a.int("t"),
        a.int("r"),
        a.seed("seed"),
    );
    let sum = rsum(1, n, |k| Ok(&w_at(r - 1, k + s) * &gibr(&seed, k + t + 2)))?;
    let first = &w_at(r - 1, s) * &gibr(&seed, t + 1);
    let last = &w_at(r - 1, n + s) * &gibr(&seed, n + t + 1);
    Ok(LogValue::from_rational(&(&sum + &first) - &last))
}

fn comb_h_g_base_lhs(a: &Assignment) -> Eval {
    let (n, s, t, r, seed) = (
        a.int("n"),
        a.int("s"),
        a.int("t"),
        a.int("r"),
        a.seed("seed"),
    );
    lsum(1, n, |k| {
        Ok(LogValue::from_rational(
            &chooser(r, k + s) * &gibr(&seed, k + t),
        ))
    })
}

fn comb_h_g_base_rhs(a: &Assignment) -> Eval {
    let (n, s, t, r, seed) = (
        a.int("n"),
        a.int("s"),
        a.int("t"),
        a.int("r"),
        a.seed("seed"),
    );
    let sum = rsum(1, n, |k| Ok(&chooser(r - 1, k + s) * &gibr(&seed, k + t + 2)))?;
    let first = &chooser(r - 1, s) * &gibr(&seed, t + 1);
    let last = &chooser(r - 1, n + s) * &gibr(&seed, n + t + 1);
    Ok(LogValue::from_rational(&(&sum + &first) - &last))
}

fn comb_h_g_x_lhs(a: &Assignment) -> Eval {
    let (n, s, r, x) = (a.int("n"), a.int("s"), a.half("r"), a.rat("x"));
    lsum(1, n, |k| {
        let xk = pow_or_skip(&x, k, || format!("x^k at k={k}"))?;
        Ok(LogValue::from_rational(&binom_int_lower(&r, k + s)? * &xk))
    })
}

fn comb_h_g_x_rhs(a: &Assignment) -> Eval {
    let (n, s, r, x) = (a.int("n"), a.int("s"), a.half("r"), a.rat("x"));
    let r1 = &r - 1;
    let one_plus = &Rational::one() + &x;
    let sum = rsum(1, n, |k| {
        let xk = pow_or_skip(&x, k, || format!("x^k at k={k}"))?;
        Ok(&(&xk * &one_plus) * &binom_int_lower(&r1, k + s)?)
    })?;
    let first = &x * &binom_int_lower(&r1, s)?;
    let last = &pow_or_skip(&x, n + 1, || "x^{n+1}".into())? * &binom_int_lower(&r1, n + s)?;
    Ok(LogValue::from_rational(&(&sum + &first) - &last))
}

fn comb_h_g_s_lhs(a: &Assignment) -> Eval {
    let (n, s, t, r, seed) = (
        a.int("n"),
        a.int("s"),
        a.int("t"),
        a.int("r"),
        a.seed("seed"),
    );
    lsum(1, n, |k| {
        let d = hdiff(&HalfInt::from_int(r - k - s), &HalfInt::from_int(k + s))?;
        Ok(LogValue::from_rational(
            &(&chooser(r, k + s) * &d) * &gibr(&seed, k + t),
        ))
    })
}

fn comb_h_g_s_rhs(a: &Assignment) -> Eval {
    let (n, s, t, r, seed) = (
        a.int("n"),
        a.int("s"),
        a.int("t"),
        a.int("r"),
        a.seed("seed"),
    );
    let sum = rsum(1, n, |k| {
        let d = hdiff(
            &HalfInt::from_int(r - 1 - k - s),
            &HalfInt::from_int(k + s),
        )?;
        Ok(&(&chooser(r - 1, k + s) * &d) * &gibr(&seed, k + t + 2))
    })?;
    let first = &(&chooser(r - 1, s)
        * &hdiff(&HalfInt::from_int(r - 1 - s), &HalfInt::from_int(s))?)
        * &gibr(&seed, t + 1);
    let last = &(&chooser(r - 1, n + s)
        * &hdiff(&HalfInt::from_int(r - 1 - n - s), &HalfInt::from_int(n + s))?)
        * &gibr(&seed, n + t + 1);
    Ok(LogValue::from_rational(&(&sum + &first) - &last))
}

fn comb_g3_lhs(a: &Assignment) -> Eval {
    let (n, s, t, r, seed) = (
        a.int("n"),
        a.int("s"),
        a.int("t"),
        a.int("r"),
        a.seed("seed"),
    );
    lsum(1, n, |k| {
        Ok(LogValue::from_rational(
            &w_at(r, k + s) * &gibr(&seed, 3 * k + t),
        ))
    })
}

fn comb_g3_rhs(a: &Assignment) -> Eval {
    let (n, s, t, r, seed) = (
        a.int("n"),
        a.int("s"),
        a.int("t"),
        a.int("r"),
        a.seed("seed"),
    );
    let sum = rsum(1, n, |k| Ok(&w_at(r - 1, k + s) * &gibr(&seed, 3 * k + t + 2)))?;
    let first = &w_at(r - 1, s) * &gibr(&seed, t + 3);
    let last = &w_at(r - 1, n + s) * &gibr(&seed, 3 * n + t + 3);
    Ok(LogValue::from_rational(
        &(&(&sum + &sum) + &first) - &last,
    ))
}

fn comb_alt_lhs(a: &Assignment) -> Eval {
    let (n, s, t, r, seed) = (
        a.int("n"),
        a.int("s"),
        a.int("t"),
        a.int("r"),
        a.seed("seed"),
    );
    lsum(1, n, |k| {
        Ok(LogValue::from_rational(
            &(&sign(k) * &w_at(r, k + s)) * &gibr(&seed, k + t),
        ))
    })
}

fn comb_alt_rhs(a: &Assignment) -> Eval {
    let (n, s, t, r, seed) = (
        a.int("n"),
        a.int("s"),
        a.int("t"),
        a.int("r"),
        a.seed("seed"),
    );
    let sum = rsum(1, n, |k| {
        Ok(&(&sign(k + 1) * &w_at(r - 1, k + s)) * &gibr(&seed, k + t - 1))
    })?;
    let first = &w_at(r - 1, s) * &gibr(&seed, t + 1);
    let last = &(&sign(n) * &w_at(r - 1, n + s)) * &gibr(&seed, n + t + 1);
    Ok(LogValue::from_rational(&(&sum - &first) + &last))
}

fn r_keeps_harmonics_nonnegative(a: &Assignment) -> bool {
    // r >= n + s + 1 keeps every harmonic argument at or above zero.
    let r = a.half("r");
    r.is_integer() && r.as_int().is_some_and(|r| r > a.int("n") + a.int("s"))
        && a.int("s") >= 0
}

fn s_nonnegative(a: &Assignment) -> bool {
    a.int("s") >= 0
}

const P_R_COMB: ParamSpec = ParamSpec {
    name: "r",
    kind: ParamKind::Half,
    domain: Domain::Rel {
        bases: &["n", "s"],
        offsets_twice: &[2, 4, 6],
        extras_twice: &[],
    },
};

const P_R_MIXED: ParamSpec = ParamSpec {
    name: "r",
    kind: ParamKind::Half,
    domain: Domain::Halves(&[-4, -1, 0, 1, 4, 7]),
};

const P_X_RATS: ParamSpec = ParamSpec {
    name: "x",
    kind: ParamKind::Rat,
    domain: Domain::Rats(&[(-2, 1), (-1, 2), (1, 3), (1, 1), (5, 2)]),
};

pub(super) static ENTRIES: &[IdentityEntry] = &[
    IdentityEntry {
        id: "comb-O-F",
        family: Family::AbelComb,
        anchor: "eq.lt63xqk",
        params: &[P_N1],
        admissible: None,
        lhs: comb_o_f_lhs,
        rhs: comb_o_f_rhs,
    },
    IdentityEntry {
        id: "comb-H-G",
        family: Family::AbelComb,
        anchor: "eq.zmuo9et",
        params: &[P_N1, P_S, P_T, P_R_COMB, P_SEED],
        admissible: Some(r_keeps_harmonics_nonnegative),
        lhs: comb_h_g_lhs,
        rhs: comb_h_g_rhs,
    },
    IdentityEntry {
        id: "comb-H-G-base",
        family: Family::AbelComb,
        anchor: "eq.p517m2v",
        params: &[P_N1, P_S, P_T, P_R_COMB, P_SEED],
        admissible: Some(r_keeps_harmonics_nonnegative),
        lhs: comb_h_g_base_lhs,
        rhs: comb_h_g_base_rhs,
    },
    IdentityEntry {
        id: "comb-H-G-x",
        family: Family::AbelComb,
        anchor: "eq.lem837w",
        params: &[P_N1, P_S, P_R_MIXED, P_X_RATS],
        admissible: Some(s_nonnegative),
        lhs: comb_h_g_x_lhs,
        rhs: comb_h_g_x_rhs,
    },
    IdentityEntry {
        id: "comb-H-G-s",
        family: Family::AbelComb,
        anchor: "thm.sderiv",
        params: &[P_N1, P_S, P_T, P_R_COMB, P_SEED],
        admissible: Some(r_keeps_harmonics_nonnegative),
        lhs: comb_h_g_s_lhs,
        rhs: comb_h_g_s_rhs,
    },
    IdentityEntry {
        id: "comb-G3",
        family: Family::AbelComb,
        anchor: "eq.49",
        params: &[P_N1, P_S, P_T, P_R_COMB, P_SEED],
        admissible: Some(r_keeps_harmonics_nonnegative),
        lhs: comb_g3_lhs,
        rhs: comb_g3_rhs,
    },
    IdentityEntry {
        id: "comb-alt",
        family: Family::AbelComb,
        anchor: "eq.121",
        params: &[P_N1, P_S, P_T, P_R_COMB, P_SEED],
        admissible: Some(r_keeps_harmonics_nonnegative),
        lhs: comb_alt_lhs,
        rhs: comb_alt_rhs,
    },
];
