//! Identities from the Gould-Quaintance pair identity applied to the scaled
//! gibonacci transform pair, including the m = 0 and m = -3/2 branches.

use super::*;

fn lt_inv_pows(t: i64, n: i64) -> Vec<Rational> {
    let inv = lucr(t).inv().expect("Lucas numbers are nonzero");
    let mut v = Vec::with_capacity((n + 1) as usize);
    let mut acc = Rational::one();
    for _ in 0..=n {
        v.push(acc.clone());
        acc = &acc * &inv;
    }
    v
}

fn tau_core(seed: &GibonacciSeed, t: i64, s: i64, k: i64) -> Rational {
    // G_0 L_{tk-s} - G_{tk-s}
    &(&big(&seed.g0) * &lucr(t * k - s)) - &gibr(seed, t * k - s)
}

fn tau_mixed(seed: &GibonacciSeed, t: i64, s: i64, k: i64) -> Rational {
    // G_0 L_{tk+s} - G_{tk-s}, the subscript mix exactly as displayed.
    &(&big(&seed.g0) * &lucr(t * k + s)) - &gibr(seed, t * k - s)
}

fn gq_thm_lhs(a: &Assignment) -> Eval {
    let (n, m, r, s, t, seed) = (
        a.int("n"),
        a.half("m"),
        a.int("r"),
        a.int("s"),
        a.int("t"),
        a.seed("seed"),
    );
    let inv = lt_inv_pows(t, n);
    let m1 = &m + 1;
    lsum(0, n, |k| {
        let upper = &(&m + (r + n - k)) + 1;
        let ib = inv_binom_half(&upper, &m1)?;
        let hd = hdiff(&m1, &upper)?;
        let c = &(&(&sign(k) * &chooser(n, k)) * &ib) * &hd;
        Ok(LogValue::from_rational(
            &(&c * &gibr(&seed, t * k + s)) * &inv[k as usize],
        ))
    })
}

fn gq_thm_rhs(a: &Assignment) -> Eval {
    let (n, m, r, s, t, seed) = (
        a.int("n"),
        a.half("m"),
        a.int("r"),
        a.int("s"),
        a.int("t"),
        a.seed("seed"),
    );
    let inv = lt_inv_pows(t, n);
    let r1 = HalfInt::from_int(r + 1);
    // Two sums share the binomial coefficients: the harmonic-weighted one
    // scaled by (m+1)/(r+1) and a bare one scaled by 1/(r+1).
    let m1r = (&m + 1).to_rational();
    let scale1 = m1r
        .checked_div(&Rational::int(r + 1))
        .map_err(|_| EvalError::Internal("r = -1".into()))?;
    let scale2 = Rational::frac(1, r + 1);
    let sum1 = rsum(0, n, |k| {
        let upper = &(&m + (r + n - k)) + 1;
        let ib = inv_binom_half(&upper, &r1)?;
        let hd = hdiff(&(&m + (n - k)), &upper)?;
        let c = &(&(&sign(n - k) * &chooser(n, k)) * &ib) * &hd;
        Ok(&(&c * &(&sign(s) * &tau_core(&seed, t, s, k))) * &inv[k as usize])
    })?;
    let sum2 = rsum(0, n, |k| {
        let upper = &(&m + (r + n - k)) + 1;
        let ib = inv_binom_half(&upper, &r1)?;
        let c = &(&sign(n - k) * &chooser(n, k)) * &ib;
        Ok(&(&c * &(&sign(s) * &tau_core(&seed, t, s, k))) * &inv[k as usize])
    })?;
    Ok(LogValue::from_rational(
        &(&sum1 * &scale1) + &(&sum2 * &scale2),
    ))
}

fn gq_thm2_lhs(a: &Assignment) -> Eval {
    let (n, m, r, s, t, seed) = (
        a.int("n"),
        a.half("m"),
        a.int("r"),
        a.int("s"),
        a.int("t"),
        a.seed("seed"),
    );
    let inv = lt_inv_pows(t, n);
    let m1 = &m + 1;
    lsum(0, n, |k| {
        let upper = &(&m + (r + n - k)) + 1;
        let ib = inv_binom_half(&upper, &m1)?;
        let hd = hdiff(&m1, &upper)?;
        let c = &(&(&sign(k) * &chooser(n, k)) * &ib) * &hd;
        Ok(LogValue::from_rational(
            &(&c * &(&sign(s) * &tau_core(&seed, t, s, k))) * &inv[k as usize],
        ))
    })
}

fn gq_thm2_rhs(a: &Assignment) -> Eval {
    let (n, m, r, s, t, seed) = (
        a.int("n"),
        a.half("m"),
        a.int("r"),
        a.int("s"),
        a.int("t"),
        a.seed("seed"),
    );
    let inv = lt_inv_pows(t, n);
    let r1 = HalfInt::from_int(r + 1);
    let m1r = (&m + 1).to_rational();
    let scale1 = m1r
        .checked_div(&Rational::int(r + 1))
        .map_err(|_| EvalError::Internal("r = -1".into()))?;
    let sum1 = rsum(0, n, |k| {
        let upper = &(&m + (r + n - k)) + 1;
        let ib = inv_binom_half(&upper, &r1)?;
        let hd = hdiff(&(&m + (n - k)), &upper)?;
        let c = &(&(&sign(n - k) * &chooser(n, k)) * &ib) * &hd;
        Ok(&(&c * &gibr(&seed, t * k + s)) * &inv[k as usize])
    })?;
    let sum2 = rsum(0, n, |k| {
        let upper = &(&m + (r + n - k)) + 1;
        let ib = inv_binom_half(&upper, &r1)?;
        let c = &(&sign(n - k) * &chooser(n, k)) * &ib;
        Ok(&(&c * &gibr(&seed, t * k + s)) * &inv[k as usize])
    })?;
    Ok(LogValue::from_rational(
        &(&sum1 * &scale1) + &(&sum2 * &Rational::frac(1, r + 1)),
    ))
}

fn gq_cor_m0_lhs(a: &Assignment) -> Eval {
    let (n, r, s, t, seed) = (
        a.int("n"),
        a.int("r"),
        a.int("s"),
        a.int("t"),
        a.seed("seed"),
    );
    let inv = lt_inv_pows(t, n);
    lsum(0, n, |k| {
        let arg = r + n - k + 1;
        let w = &(&Rational::one() - &h_int(arg)?.rat) * &Rational::frac(1, arg);
        let c = &(&sign(k) * &chooser(n, k)) * &w;
        Ok(LogValue::from_rational(
            &(&c * &gibr(&seed, t * k + s)) * &inv[k as usize],
        ))
    })
}

fn gq_cor_m0_rhs(a: &Assignment) -> Eval {
    let (n, r, s, t, seed) = (
        a.int("n"),
        a.int("r"),
        a.int("s"),
        a.int("t"),
        a.seed("seed"),
    );
    let inv = lt_inv_pows(t, n);
    let sum1 = rsum(0, n, |k| {
        let arg = r + n - k + 1;
        let ib = inv_choose(arg, r + 1)?;
        let hd = &h_int(n - k)?.rat - &h_int(arg)?.rat;
        let c = &(&(&sign(n - k - s) * &chooser(n, k)) * &ib) * &hd;
        Ok(&(&c * &tau_core(&seed, t, s, k)) * &inv[k as usize])
    })?;
    let sum2 = rsum(0, n, |k| {
        let arg = r + n - k + 1;
        let ib = inv_choose(arg, r + 1)?;
        let c = &(&sign(n - k - s) * &chooser(n, k)) * &ib;
        Ok(&(&c * &tau_core(&seed, t, s, k)) * &inv[k as usize])
    })?;
    Ok(LogValue::from_rational(
        &(&sum1 + &sum2) * &Rational::frac(1, r + 1),
    ))
}

fn gq_cor_m0_part_lhs(a: &Assignment) -> Eval {
    let (n, s, t, seed) = (a.int("n"), a.int("s"), a.int("t"), a.seed("seed"));
    let inv = lt_inv_pows(t, n);
    lsum(0, n, |k| {
        let arg = n - k + 1;
        let w = &(&Rational::one() - &h_int(arg)?.rat) * &Rational::frac(1, arg);
        let c = &(&sign(k) * &chooser(n, k)) * &w;
        Ok(LogValue::from_rational(
            &(&c * &gibr(&seed, t * k + s)) * &inv[k as usize],
        ))
    })
}

fn gq_cor_m0_part_rhs(a: &Assignment) -> Eval {
    let (n, s, t, seed) = (a.int("n"), a.int("s"), a.int("t"), a.seed("seed"));
    let inv = lt_inv_pows(t, n);
    let term = |k: i64, square: bool| -> REval {
        let d = n - k + 1;
        let den = if square {
            Rational::new(1.into(), (d * d).into()).unwrap()
        } else {
            Rational::frac(1, d)
        };
        let c = &(&sign(n - k - s) * &chooser(n, k)) * &den;
        Ok(&(&c * &tau_mixed(&seed, t, s, k)) * &inv[k as usize])
    };
    let sum1 = rsum(0, n, |k| term(k, false))?;
    let sum2 = rsum(0, n, |k| term(k, true))?;
    Ok(LogValue::from_rational(&sum1 - &sum2))
}

fn odd_block(r: i64, n: i64, k: i64) -> REval {
    // C(n,k) C(2(n-k-1), n-k-1) / (C(2(r+n-k), r+1) C(r+n-k, r+1)),
    // the shared coefficient of the m = -3/2 right sides, as displayed.
    let c1 = chooser(2 * (n - k - 1), n - k - 1);
    let ib1 = inv_choose(2 * (r + n - k), r + 1)?;
    let ib2 = inv_choose(r + n - k, r + 1)?;
    Ok(&(&chooser(n, k) * &c1) * &(&ib1 * &ib2))
}

fn gq_cor_odd_lhs(a: &Assignment) -> Eval {
    let (n, r, s, t, seed) = (
        a.int("n"),
        a.int("r"),
        a.int("s"),
        a.int("t"),
        a.seed("seed"),
    );
    let inv = lt_inv_pows(t, n);
    lsum(0, n, |k| {
        let p = r + n - k;
        let c = &(&(&sign(k + 1) * &chooser(n, k)) * &inv_choose(2 * p, p)?)
            * &Rational::pow2(2 * p + 1);
        Ok(LogValue::from_rational(
            &(&(&c * &o_at(p)?) * &gibr(&seed, t * k + s)) * &inv[k as usize],
        ))
    })
}

fn gq_cor_odd_rhs(a: &Assignment) -> Eval {
    let (n, r, s, t, seed) = (
        a.int("n"),
        a.int("r"),
        a.int("s"),
        a.int("t"),
        a.seed("seed"),
    );
    let inv = lt_inv_pows(t, n);
    let lead = &Rational::pow2(2 * (r + 1)) * &Rational::frac(1, r + 1);
    let sum1 = rsum(0, n - 1, |k| {
        let block = odd_block(r, n, k)?;
        let od = &o_at(n - k - 1)? - &o_at(r + n - k)?;
        let c = &(&sign(n - k + 1 + s) * &block) * &od;
        Ok(&(&c * &tau_core(&seed, t, s, k)) * &inv[k as usize])
    })?;
    let sum2 = rsum(0, n - 1, |k| {
        let block = odd_block(r, n, k)?;
        let c = &sign(n - k + 1 + s) * &block;
        Ok(&(&c * &tau_core(&seed, t, s, k)) * &inv[k as usize])
    })?;
    let tail = &(&(&sign(s)
        * &Rational::new(1.into(), ((r + 1) * (r + 1)).into()).unwrap())
        * &chooser(2 * r, r))
        * &(&(&Rational::one() - &o_at(r)?) * &(&tau_core(&seed, t, s, n) * &inv[n as usize]));
    Ok(LogValue::from_rational(
        &(&(&sum1 + &sum2) * &lead) + &tail,
    ))
}

fn gq_cor_odd_part_lhs(a: &Assignment) -> Eval {
    let (n, s, t, seed) = (a.int("n"), a.int("s"), a.int("t"), a.seed("seed"));
    let inv = lt_inv_pows(t, n);
    lsum(0, n, |k| {
        let c = &(&(&sign(k + 1) * &Rational::pow2(2 * (n - k))) * &chooser(n, k))
            * &inv_choose(2 * n - 2 * k, n - k)?;
        Ok(LogValue::from_rational(
            &(&(&c * &o_at(n - k)?) * &gibr(&seed, t * k + s)) * &inv[k as usize],
        ))
    })
}

fn gq_cor_odd_part_rhs(a: &Assignment) -> Eval {
    let (n, s, t, seed) = (a.int("n"), a.int("s"), a.int("t"), a.seed("seed"));
    let inv = lt_inv_pows(t, n);
    let term = |k: i64, extra_odd_den: bool| -> REval {
        let d = n - k;
        let mut den = Rational::new(1.into(), (d * d).into()).unwrap();
        if extra_odd_den {
            den = &den * &Rational::frac(1, 2 * n - 2 * k - 1);
        }
        let c = &(&(&sign(n - k + s + 1) * &chooser(n, k))
            * &chooser(2 * (n - k - 1), n - k - 1))
            * &den;
        Ok(&(&c * &tau_core(&seed, t, s, k)) * &inv[k as usize])
    };
    let sum1 = rsum(0, n - 1, |k| term(k, false))?;
    let sum2 = rsum(0, n - 1, |k| term(k, true))?;
    Ok(LogValue::from_rational(&sum1 - &sum2))
}

fn gq_cor2_m0_lhs(a: &Assignment) -> Eval {
    let (n, r, s, t, seed) = (
        a.int("n"),
        a.int("r"),
        a.int("s"),
        a.int("t"),
        a.seed("seed"),
    );
    let inv = lt_inv_pows(t, n);
    lsum(0, n, |k| {
        let arg = r + n - k + 1;
        let w = &(&Rational::one() - &h_int(arg)?.rat) * &Rational::frac(1, arg);
        let c = &(&sign(k - s) * &chooser(n, k)) * &w;
        Ok(LogValue::from_rational(
            &(&c * &tau_core(&seed, t, s, k)) * &inv[k as usize],
        ))
    })
}

fn gq_cor2_m0_rhs(a: &Assignment) -> Eval {
    let (n, r, s, t, seed) = (
        a.int("n"),
        a.int("r"),
        a.int("s"),
        a.int("t"),
        a.seed("seed"),
    );
    let inv = lt_inv_pows(t, n);
    let sum1 = rsum(0, n, |k| {
        let arg = r + n - k + 1;
        let ib = inv_choose(arg, r + 1)?;
        let hd = &h_int(n - k)?.rat - &h_int(arg)?.rat;
        let c = &(&(&sign(n - k) * &chooser(n, k)) * &ib) * &hd;
        Ok(&(&c * &gibr(&seed, t * k + s)) * &inv[k as usize])
    })?;
    let sum2 = rsum(0, n, |k| {
        let arg = r + n - k + 1;
        let ib = inv_choose(arg, r + 1)?;
        let c = &(&sign(n - k) * &chooser(n, k)) * &ib;
        Ok(&(&c * &gibr(&seed, t * k + s)) * &inv[k as usize])
    })?;
    Ok(LogValue::from_rational(
        &(&sum1 + &sum2) * &Rational::frac(1, r + 1),
    ))
}

fn gq_cor2_m0_part_lhs(a: &Assignment) -> Eval {
    let (n, s, t, seed) = (a.int("n"), a.int("s"), a.int("t"), a.seed("seed"));
    let inv = lt_inv_pows(t, n);
    lsum(0, n, |k| {
        let arg = n - k + 1;
        let w = &(&Rational::one() - &h_int(arg)?.rat) * &Rational::frac(1, arg);
        let c = &(&sign(k) * &chooser(n, k)) * &w;
        Ok(LogValue::from_rational(
            &(&c * &tau_mixed(&seed, t, s, k)) * &inv[k as usize],
        ))
    })
}

fn gq_cor2_m0_part_rhs(a: &Assignment) -> Eval {
    let (n, s, t, seed) = (a.int("n"), a.int("s"), a.int("t"), a.seed("seed"));
    let inv = lt_inv_pows(t, n);
    let term = |k: i64, square: bool| -> REval {
        let d = n - k + 1;
        let den = if square {
            Rational::new(1.into(), (d * d).into()).unwrap()
        } else {
            Rational::frac(1, d)
        };
        let c = &(&sign(n - k - s) * &chooser(n, k)) * &den;
        Ok(&(&c * &gibr(&seed, t * k + s)) * &inv[k as usize])
    };
    let sum1 = rsum(0, n, |k| term(k, false))?;
    let sum2 = rsum(0, n, |k| term(k, true))?;
    Ok(LogValue::from_rational(&sum1 - &sum2))
}

fn gq_cor2_odd_lhs(a: &Assignment) -> Eval {
    let (n, r, s, t, seed) = (
        a.int("n"),
        a.int("r"),
        a.int("s"),
        a.int("t"),
        a.seed("seed"),
    );
    let inv = lt_inv_pows(t, n);
    lsum(0, n, |k| {
        let p = r + n - k;
        let c = &(&(&sign(k + 1 - s) * &chooser(n, k)) * &inv_choose(2 * p, p)?)
            * &Rational::pow2(2 * p + 1);
        Ok(LogValue::from_rational(
            &(&(&c * &o_at(p)?) * &tau_core(&seed, t, s, k)) * &inv[k as usize],
        ))
    })
}

fn gq_cor2_odd_rhs(a: &Assignment) -> Eval {
    let (n, r, s, t, seed) = (
        a.int("n"),
        a.int("r"),
        a.int("s"),
        a.int("t"),
        a.seed("seed"),
    );
    let inv = lt_inv_pows(t, n);
    let lead = &Rational::pow2(2 * (r + 1)) * &Rational::frac(1, r + 1);
    let sum1 = rsum(0, n - 1, |k| {
        let block = odd_block(r, n, k)?;
        let od = &o_at(n - k - 1)? - &o_at(r + n - k)?;
        let c = &(&sign(n - k + 1) * &block) * &od;
        Ok(&(&c * &gibr(&seed, t * k + s)) * &inv[k as usize])
    })?;
    let sum2 = rsum(0, n - 1, |k| {
        let block = odd_block(r, n, k)?;
        let c = &sign(n - k + 1) * &block;
        Ok(&(&c * &gibr(&seed, t * k + s)) * &inv[k as usize])
    })?;
    let tail = &(&(&sign(s)
        * &Rational::new(1.into(), ((r + 1) * (r + 1)).into()).unwrap())
        * &chooser(2 * r, r))
        * &(&(&Rational::one() - &o_at(r)?) * &(&gibr(&seed, t * n + s) * &inv[n as usize]));
    Ok(LogValue::from_rational(
        &(&(&sum1 + &sum2) * &lead) + &tail,
    ))
}

fn gq_cor2_odd_part_lhs(a: &Assignment) -> Eval {
    let (n, s, t, seed) = (a.int("n"), a.int("s"), a.int("t"), a.seed("seed"));
    let inv = lt_inv_pows(t, n);
    lsum(0, n, |k| {
        let c = &(&(&sign(k + 1) * &Rational::pow2(2 * (n - k))) * &chooser(n, k))
            * &inv_choose(2 * n - 2 * k, n - k)?;
        Ok(LogValue::from_rational(
            &(&(&c * &o_at(n - k)?) * &tau_core(&seed, t, s, k)) * &inv[k as usize],
        ))
    })
}

fn gq_cor2_odd_part_rhs(a: &Assignment) -> Eval {
    let (n, s, t, seed) = (a.int("n"), a.int("s"), a.int("t"), a.seed("seed"));
    let inv = lt_inv_pows(t, n);
    let term = |k: i64, extra_odd_den: bool| -> REval {
        let d = n - k;
        let mut den = Rational::new(1.into(), (d * d).into()).unwrap();
        if extra_odd_den {
            den = &den * &Rational::frac(1, 2 * n - 2 * k - 1);
        }
        let c = &(&(&sign(n - k + s + 1) * &chooser(n, k))
            * &chooser(2 * (n - k - 1), n - k - 1))
            * &den;
        Ok(&(&c * &gibr(&seed, t * k + s)) * &inv[k as usize])
    };
    let sum1 = rsum(0, n - 1, |k| term(k, false))?;
    let sum2 = rsum(0, n - 1, |k| term(k, true))?;
    Ok(LogValue::from_rational(&sum1 - &sum2))
}


fn gq_params_ok(a: &Assignment) -> bool {
    let m = a.half("m");
    let m_ok = m == HalfInt::halves(-1)
        || m == HalfInt::halves(-3)
        || m.as_int().is_some_and(|m| m >= 0);
    m_ok && a.int("r") >= 0
}

fn r_nonneg(a: &Assignment) -> bool {
    a.int("r") >= 0
}

const P_M_GQ: ParamSpec = ParamSpec {
    name: "m",
    kind: ParamKind::Half,
    domain: Domain::Halves(&[-3, -1, 0, 2, 4, 6]),
};

const P_S_INT: ParamSpec = ParamSpec {
    name: "s",
    kind: ParamKind::Int,
    domain: Domain::Ints(&[0, 1, 2, 3, 4]),
};

pub(super) static ENTRIES: &[IdentityEntry] = &[
    IdentityEntry {
        id: "gq-thm",
        family: Family::BtGq,
        anchor: "eq.gooday1",
        params: &[P_N0, P_M_GQ, P_R_GE0, P_S_INT, P_T, P_SEED],
        admissible: Some(gq_params_ok),
        lhs: gq_thm_lhs,
        rhs: gq_thm_rhs,
    },
    IdentityEntry {
        id: "gq-cor-m0",
        family: Family::BtGq,
        anchor: "eq.go13",
        params: &[P_N0, P_R_GE0, P_S_INT, P_T, P_SEED],
        admissible: Some(r_nonneg),
        lhs: gq_cor_m0_lhs,
        rhs: gq_cor_m0_rhs,
    },
    IdentityEntry {
        id: "gq-cor-m0-part",
        family: Family::BtGq,
        anchor: "eq.may1",
        params: &[P_N0, P_S_INT, P_T, P_SEED],
        admissible: None,
        lhs: gq_cor_m0_part_lhs,
        rhs: gq_cor_m0_part_rhs,
    },
    IdentityEntry {
        id: "gq-cor-odd",
        family: Family::BtGq,
        anchor: "eq.go14",
        params: &[P_N0, P_R_GE0, P_S_INT, P_T, P_SEED],
        admissible: Some(r_nonneg),
        lhs: gq_cor_odd_lhs,
        rhs: gq_cor_odd_rhs,
    },
    IdentityEntry {
        id: "gq-cor-odd-part",
        family: Family::BtGq,
        anchor: "eq.may10.first",
        params: &[P_N0, P_S_INT, P_T, P_SEED],
        admissible: None,
        lhs: gq_cor_odd_part_lhs,
        rhs: gq_cor_odd_part_rhs,
    },
    IdentityEntry {
        id: "gq-thm2",
        family: Family::BtGq,
        anchor: "eq.gooday100",
        params: &[P_N0, P_M_GQ, P_R_GE0, P_S_INT, P_T, P_SEED],
        admissible: Some(gq_params_ok),
        lhs: gq_thm2_lhs,
        rhs: gq_thm2_rhs,
    },
    IdentityEntry {
        id: "gq-cor2-m0",
        family: Family::BtGq,
        anchor: "eq.go130",
        params: &[P_N0, P_R_GE0, P_S_INT, P_T, P_SEED],
        admissible: Some(r_nonneg),
        lhs: gq_cor2_m0_lhs,
        rhs: gq_cor2_m0_rhs,
    },
    IdentityEntry {
        id: "gq-cor2-m0-part",
        family: Family::BtGq,
        anchor: "eq.may117",
        params: &[P_N0, P_S_INT, P_T, P_SEED],
        admissible: None,
        lhs: gq_cor2_m0_part_lhs,
        rhs: gq_cor2_m0_part_rhs,
    },
    IdentityEntry {
        id: "gq-cor2-odd",
        family: Family::BtGq,
        anchor: "eq.go140",
        params: &[P_N0, P_R_GE0, P_S_INT, P_T, P_SEED],
        admissible: Some(r_nonneg),
        lhs: gq_cor2_odd_lhs,
        rhs: gq_cor2_odd_rhs,
    },
    IdentityEntry {
        id: "gq-cor2-odd-part",
        family: Family::BtGq,
        anchor: "eq.may10.second",
        params: &[P_N0, P_S_INT, P_T, P_SEED],
        admissible: None,
        lhs: gq_cor2_odd_part_lhs,
        rhs: gq_cor2_odd_part_rhs,
    },
];
