//! Identities obtained from binomial-transform pair lemmas applied to scaled
//! gibonacci and harmonic pairs.

use super::*;

fn lt_pows(t: i64, n: i64) -> Vec<Rational> {
    // L_t^0 .. L_t^n; L_t is never zero.
    let lt = lucr(t);
    let mut v = Vec::with_capacity((n + 1) as usize);
    let mut acc = Rational::one();
    for _ in 0..=n {
        v.push(acc.clone());
        acc = &acc * &lt;
    }
    v
}

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

fn scaled_tau(seed: &GibonacciSeed, t: i64, r: i64, k: i64) -> Rational {
    // (G_0 L_{tk-r} - G_{tk-r}), the transform image's core factor.
    &(&big(&seed.g0) * &lucr(t * k - r)) - &gibr(seed, t * k - r)
}

fn bt_g_scaled_lhs(a: &Assignment) -> Eval {
    let (n, r, t, seed) = (a.int("n"), a.int("r"), a.int("t"), a.seed("seed"));
    let inv = lt_inv_pows(t, n);
    lsum(0, n, |k| {
        let c = &(&sign(k) * &chooser(n, k)) * &inv[k as usize];
        Ok(LogValue::from_rational(&c * &gibr(&seed, t * k + r)))
    })
}

fn bt_g_scaled_rhs(a: &Assignment) -> Eval {
    let (n, r, t, seed) = (a.int("n"), a.int("r"), a.int("t"), a.seed("seed"));
    let inv_n = lt_inv_pows(t, n)[n as usize].clone();
    Ok(LogValue::from_rational(
        &(&sign(r) * &inv_n) * &scaled_tau(&seed, t, r, n),
    ))
}

fn boyad_h_g_lhs(a: &Assignment) -> Eval {
    let (n, r, t, seed) = (a.int("n"), a.int("r"), a.int("t"), a.seed("seed"));
    let pows = lt_pows(t, n);
    lsum(0, n, |k| {
        let c = &(&sign(k) * &chooser(n, k)) * &pows[(n - k) as usize];
        Ok(h_int(k)?.scale(&(&c * &gibr(&seed, t * k + r))))
    })
}

fn boyad_h_g_rhs(a: &Assignment) -> Eval {
    let (n, r, t, seed) = (a.int("n"), a.int("r"), a.int("t"), a.seed("seed"));
    let pows = lt_pows(t, n);
    let head = h_int(n)?.scale(&(&sign(r) * &scaled_tau(&seed, t, r, n)));
    let sum = rsum(0, n - 1, |k| {
        let c = &pows[(n - k) as usize] * &Rational::frac(1, n - k);
        Ok(&c * &scaled_tau(&seed, t, r, k))
    })?;
    Ok(&head - &LogValue::from_rational(&sign(r) * &sum))
}

fn boyad_h_f_lhs(a: &Assignment) -> Eval {
    let (n, r, t) = (a.int("n"), a.int("r"), a.int("t"));
    let pows = lt_pows(t, n);
    lsum(0, n, |k| {
        let c = &(&sign(k) * &chooser(n, k)) * &pows[(n - k) as usize];
        Ok(h_int(k)?.scale(&(&c * &fibr(t * k + r))))
    })
}

fn boyad_h_f_rhs(a: &Assignment) -> Eval {
    let (n, r, t) = (a.int("n"), a.int("r"), a.int("t"));
    let pows = lt_pows(t, n);
    let head = h_int(n)?.scale(&(&sign(r + 1) * &fibr(t * n - r)));
    let sum = rsum(0, n - 1, |k| {
        Ok(&(&pows[(n - k) as usize] * &fibr(t * k - r)) * &Rational::frac(1, n - k))
    })?;
    Ok(&head + &LogValue::from_rational(&sign(r) * &sum))
}

fn boyad_h_l_lhs(a: &Assignment) -> Eval {
    let (n, r, t) = (a.int("n"), a.int("r"), a.int("t"));
    let pows = lt_pows(t, n);
    lsum(0, n, |k| {
        let c = &(&sign(k) * &chooser(n, k)) * &pows[(n - k) as usize];
        Ok(h_int(k)?.scale(&(&c * &lucr(t * k + r))))
    })
}

fn boyad_h_l_rhs(a: &Assignment) -> Eval {
    let (n, r, t) = (a.int("n"), a.int("r"), a.int("t"));
    let pows = lt_pows(t, n);
    let head = h_int(n)?.scale(&(&sign(r) * &lucr(t * n - r)));
    let sum = rsum(0, n - 1, |k| {
        Ok(&(&pows[(n - k) as usize] * &lucr(t * k - r)) * &Rational::frac(1, n - k))
    })?;
    Ok(&head - &LogValue::from_rational(&sign(r) * &sum))
}

fn boyad_hf_part_lhs(a: &Assignment) -> Eval {
    let n = a.int("n");
    lsum(0, n, |k| {
        Ok(h_int(k)?.scale(&(&(&sign(k) * &chooser(n, k)) * &fibr(k))))
    })
}

fn boyad_hf_part_rhs(a: &Assignment) -> Eval {
    let n = a.int("n");
    let head = h_int(n)?.scale(&fibr(n));
    let sum = rsum(0, n - 1, |k| Ok(&fibr(k) * &Rational::frac(1, n - k)))?;
    Ok(&(-&head) + &LogValue::from_rational(sum))
}

fn boyad_hl_part_lhs(a: &Assignment) -> Eval {
    let n = a.int("n");
    lsum(0, n, |k| {
        Ok(h_int(k)?.scale(&(&(&sign(k) * &chooser(n, k)) * &lucr(k))))
    })
}

fn boyad_hl_part_rhs(a: &Assignment) -> Eval {
    let n = a.int("n");
    let head = h_int(n)?.scale(&lucr(n));
    let sum = rsum(0, n - 1, |k| Ok(&lucr(k) * &Rational::frac(1, n - k)))?;
    Ok(&head - &LogValue::from_rational(sum))
}

fn boyad_rev_lhs(a: &Assignment) -> Eval {
    let (n, r, t, seed) = (a.int("n"), a.int("r"), a.int("t"), a.seed("seed"));
    let pows = lt_pows(t, n);
    lsum(0, n, |k| {
        let c = &(&(&sign(k + r) * &chooser(n, k)) * &pows[(n - k) as usize])
            * &scaled_tau(&seed, t, r, k);
        Ok(h_int(k)?.scale(&c))
    })
}

fn boyad_rev_rhs(a: &Assignment) -> Eval {
    let (n, r, t, seed) = (a.int("n"), a.int("r"), a.int("t"), a.seed("seed"));
    let pows = lt_pows(t, n);
    let head = h_int(n)?.scale(&gibr(&seed, t * n + r));
    let sum = rsum(0, n - 1, |k| {
        Ok(&(&pows[(n - k) as usize] * &gibr(&seed, t * k + r)) * &Rational::frac(1, n - k))
    })?;
    Ok(&head - &LogValue::from_rational(sum))
}

fn boyad_rev_f_lhs(a: &Assignment) -> Eval {
    let (n, r, t) = (a.int("n"), a.int("r"), a.int("t"));
    let pows = lt_pows(t, n);
    lsum(0, n, |k| {
        let c = &(&(&sign(k + r + 1) * &chooser(n, k)) * &pows[(n - k) as usize])
            * &fibr(t * k - r);
        Ok(h_int(k)?.scale(&c))
    })
}

fn boyad_rev_f_rhs(a: &Assignment) -> Eval {
    let (n, r, t) = (a.int("n"), a.int("r"), a.int("t"));
    let pows = lt_pows(t, n);
    let head = h_int(n)?.scale(&fibr(t * n + r));
    let sum = rsum(0, n - 1, |k| {
        Ok(&(&pows[(n - k) as usize] * &fibr(t * k + r)) * &Rational::frac(1, n - k))
    })?;
    Ok(&head - &LogValue::from_rational(sum))
}

fn boyad_rev_l_lhs(a: &Assignment) -> Eval {
    let (n, r, t) = (a.int("n"), a.int("r"), a.int("t"));
    let pows = lt_pows(t, n);
    lsum(0, n, |k| {
        let c = &(&(&sign(k + r) * &chooser(n, k)) * &pows[(n - k) as usize])
            * &lucr(t * k - r);
        Ok(h_int(k)?.scale(&c))
    })
}

fn boyad_rev_l_rhs(a: &Assignment) -> Eval {
    let (n, r, t) = (a.int("n"), a.int("r"), a.int("t"));
    let pows = lt_pows(t, n);
    let head = h_int(n)?.scale(&lucr(t * n + r));
    let sum = rsum(0, n - 1, |k| {
        Ok(&(&pows[(n - k) as usize] * &lucr(t * k + r)) * &Rational::frac(1, n - k))
    })?;
    Ok(&head - &LogValue::from_rational(sum))
}

fn h_shifted(k: i64, m: &HalfInt) -> Eval {
    h_at(&(&HalfInt::from_int(k) + m))
}

fn bt2_m_lhs(a: &Assignment) -> Eval {
    let (n, m, seed) = (a.int("n"), a.half("m"), a.seed("seed"));
    let mr = m.to_rational();
    lsum(0, n, |k| {
        let km = &Rational::int(k) + &mr;
        let c = &(&(&sign(k + 1) * &chooser(n, k)) * &mr)
            * &inv_or_skip(km, || format!("k+m at k={k}"))?;
        Ok(h_shifted(k, &m)?.scale(&(&c * &gibr(&seed, k))))
    })
}

fn bt2_m_rhs(a: &Assignment) -> Eval {
    let (n, m, seed) = (a.int("n"), a.half("m"), a.seed("seed"));
    lsum(0, n, |k| {
        let km = &HalfInt::from_int(k) + &m;
        let c = &(&sign(k) * &chooser(n, k)) * &inv_binom_half(&km, &m)?;
        let hd = &h_shifted(k, &m)? - &h_int(k)?;
        Ok(hd.scale(&(&c * &gibr(&seed, n - 2 * k))))
    })
}

fn bt2_m_sym_lhs(a: &Assignment) -> Eval {
    let (n, m, seed) = (a.int("n"), a.half("m"), a.seed("seed"));
    lsum(0, n, |k| {
        let km = &HalfInt::from_int(k) + &m;
        let c = &(&sign(k + 1) * &chooser(n, k)) * &inv_binom_half(&km, &m)?;
        let hd = &h_shifted(k, &m)? - &h_int(k)?;
        Ok(hd.scale(&(&c * &gibr(&seed, k))))
    })
}

fn bt2_m_sym_rhs(a: &Assignment) -> Eval {
    let (n, m, seed) = (a.int("n"), a.half("m"), a.seed("seed"));
    let mr = m.to_rational();
    lsum(0, n, |k| {
        let km = &Rational::int(k) + &mr;
        let c = &(&(&sign(k) * &chooser(n, k)) * &mr)
            * &inv_or_skip(km, || format!("k+m at k={k}"))?;
        Ok(h_shifted(k, &m)?.scale(&(&c * &gibr(&seed, n - 2 * k))))
    })
}

fn bt2_m1a_lhs(a: &Assignment) -> Eval {
    let (n, seed) = (a.int("n"), a.seed("seed"));
    lsum(0, n, |k| {
        let c = &(&sign(k + 1) * &chooser(n, k)) * &Rational::frac(1, k + 1);
        Ok(h_int(k + 1)?.scale(&(&c * &gibr(&seed, k))))
    })
}

fn bt2_m1a_rhs(a: &Assignment) -> Eval {
    let (n, seed) = (a.int("n"), a.seed("seed"));
    lsum(0, n, |k| {
        let c = &(&sign(k) * &chooser(n, k))
            * &Rational::new(1.into(), ((k + 1) * (k + 1)).into()).unwrap();
        Ok(LogValue::from_rational(&c * &gibr(&seed, n - 2 * k)))
    })
}

fn bt2_m1b_lhs(a: &Assignment) -> Eval {
    let (n, seed) = (a.int("n"), a.seed("seed"));
    lsum(0, n, |k| {
        let c = &(&sign(k + 1) * &chooser(n, k))
            * &Rational::new(1.into(), ((k + 1) * (k + 1)).into()).unwrap();
        Ok(LogValue::from_rational(&c * &gibr(&seed, k)))
    })
}

fn bt2_m1b_rhs(a: &Assignment) -> Eval {
    let (n, seed) = (a.int("n"), a.seed("seed"));
    lsum(0, n, |k| {
        let c = &(&sign(k) * &chooser(n, k)) * &Rational::frac(1, k + 1);
        Ok(h_int(k + 1)?.scale(&(&c * &gibr(&seed, n - 2 * k))))
    })
}

fn ln2_minus_o(k: i64) -> Eval {
    Ok(&LogValue::ln2(Rational::one()) - &LogValue::from_rational(o_at(k)?))
}

/// 2 O_k - H_k - 2 ln2 as one Q[ln2] value.
fn two_o_minus_h_minus_2ln2(k: i64) -> Eval {
    let o = o_at(k)?;
    let v = &LogValue::from_rational(&o + &o) - &h_int(k)?;
    Ok(&v - &LogValue::ln2(Rational::int(2)))
}

fn prop1_ln2_a_lhs(a: &Assignment) -> Eval {
    let (n, seed) = (a.int("n"), a.seed("seed"));
    let sum = lsum(0, n, |k| {
        let c = &(&sign(k + 1) * &chooser(n, k)) * &Rational::frac(1, 2 * k - 1);
        Ok(ln2_minus_o(k)?.scale(&(&c * &gibr(&seed, k))))
    })?;
    Ok(sum.scale(&rat(2)))
}

fn prop1_ln2_a_rhs(a: &Assignment) -> Eval {
    let (n, seed) = (a.int("n"), a.seed("seed"));
    lsum(0, n, |k| {
        let c = &(&(&sign(k) * &Rational::pow2(2 * k)) * &chooser(n, k))
            * &inv_choose(2 * k, k)?;
        Ok(two_o_minus_h_minus_2ln2(k)?.scale(&(&c * &gibr(&seed, n - 2 * k))))
    })
}

fn prop1_ln2_b_lhs(a: &Assignment) -> Eval {
    let (n, seed) = (a.int("n"), a.seed("seed"));
    lsum(0, n, |k| {
        let c = &(&(&sign(k + 1) * &Rational::pow2(2 * k)) * &chooser(n, k))
            * &inv_choose(2 * k, k)?;
        Ok(two_o_minus_h_minus_2ln2(k)?.scale(&(&c * &gibr(&seed, k))))
    })
}

fn prop1_ln2_b_rhs(a: &Assignment) -> Eval {
    let (n, seed) = (a.int("n"), a.seed("seed"));
    let sum = lsum(0, n, |k| {
        let c = &(&sign(k + 1) * &chooser(n, k)) * &Rational::frac(1, 2 * k - 1);
        Ok((&LogValue::from_rational(o_at(k)?) - &LogValue::ln2(Rational::one()))
            .scale(&(&c * &gibr(&seed, n - 2 * k))))
    })?;
    Ok(sum.scale(&rat(2)))
}

fn prop1_a_lhs(a: &Assignment) -> Eval {
    let (n, seed) = (a.int("n"), a.seed("seed"));
    lsum(0, n, |k| {
        let c = &(&sign(k + 1) * &chooser(n, k)) * &Rational::frac(1, 2 * k - 1);
        Ok(LogValue::from_rational(&c * &gibr(&seed, k)))
    })
}

fn prop1_a_rhs(a: &Assignment) -> Eval {
    let (n, seed) = (a.int("n"), a.seed("seed"));
    lsum(0, n, |k| {
        let c = &(&(&sign(k + 1) * &Rational::pow2(2 * k)) * &chooser(n, k))
            * &inv_choose(2 * k, k)?;
        Ok(LogValue::from_rational(&c * &gibr(&seed, n - 2 * k)))
    })
}

fn prop1_b_lhs(a: &Assignment) -> Eval {
    let (n, seed) = (a.int("n"), a.seed("seed"));
    lsum(0, n, |k| {
        let c = &(&sign(k + 1) * &chooser(n, k)) * &Rational::frac(1, 2 * k - 1);
        Ok(LogValue::from_rational(
            &(&c * &o_at(k)?) * &gibr(&seed, k),
        ))
    })
}

fn prop1_b_rhs(a: &Assignment) -> Eval {
    let (n, seed) = (a.int("n"), a.seed("seed"));
    lsum(0, n, |k| {
        let c = &(&(&sign(k) * &Rational::pow2(2 * k - 1)) * &chooser(n, k))
            * &inv_choose(2 * k, k)?;
        let hk = h_int(k)?;
        let o = o_at(k)?;
        let diff = &hk.rat - &(&o + &o);
        Ok(LogValue::from_rational(
            &(&c * &diff) * &gibr(&seed, n - 2 * k),
        ))
    })
}

fn prop2_a_lhs(a: &Assignment) -> Eval {
    let (n, seed) = (a.int("n"), a.seed("seed"));
    lsum(0, n, |k| {
        let c = &(&sign(k) * &chooser(n, k)) * &Rational::frac(1, 2 * k - 1);
        Ok(LogValue::from_rational(&c * &gibr(&seed, n - 2 * k)))
    })
}

fn prop2_a_rhs(a: &Assignment) -> Eval {
    let (n, seed) = (a.int("n"), a.seed("seed"));
    lsum(0, n, |k| {
        let c = &(&(&sign(k) * &Rational::pow2(2 * k)) * &chooser(n, k))
            * &inv_choose(2 * k, k)?;
        Ok(LogValue::from_rational(&c * &gibr(&seed, k)))
    })
}

fn prop2_b_lhs(a: &Assignment) -> Eval {
    let (n, seed) = (a.int("n"), a.seed("seed"));
    lsum(0, n, |k| {
        let c = &(&sign(k + 1) * &chooser(n, k)) * &Rational::frac(1, 2 * k - 1);
        Ok(LogValue::from_rational(
            &(&c * &o_at(k)?) * &gibr(&seed, n - 2 * k),
        ))
    })
}

fn prop2_b_rhs(a: &Assignment) -> Eval {
    let (n, seed) = (a.int("n"), a.seed("seed"));
    lsum(0, n, |k| {
        let c = &(&(&sign(k + 1) * &Rational::pow2(2 * k - 1)) * &chooser(n, k))
            * &inv_choose(2 * k, k)?;
        let o = o_at(k)?;
        let diff = &(&o + &o) - &h_int(k)?.rat;
        Ok(LogValue::from_rational(
            &(&c * &diff) * &gibr(&seed, k),
        ))
    })
}

fn bt3_lhs(a: &Assignment) -> Eval {
    let (n, m, seed) = (a.int("n"), a.half("m"), a.seed("seed"));
    lsum(1, n, |k| {
        let c = &(&sign(k + 1) * &chooser(n, k)) * &gibr(&seed, k);
        Ok(h_shifted(k, &m)?.scale(&c))
    })
}

fn bt3_rhs(a: &Assignment) -> Eval {
    let (n, m, seed) = (a.int("n"), a.half("m"), a.seed("seed"));
    let head = h_at(&m)?.scale(&gibr(&seed, n));
    let sum = lsum(1, n, |k| {
        let km = &HalfInt::from_int(k) + &m;
        let c = &(&(&sign(k + 1) * &chooser(n, k)) * &inv_binom_half(&km, &m)?)
            * &Rational::frac(1, k);
        Ok(LogValue::from_rational(&c * &gibr(&seed, n - 2 * k)))
    })?;
    Ok(&head + &sum)
}

fn bt3_sym_lhs(a: &Assignment) -> Eval {
    let (n, m, seed) = (a.int("n"), a.half("m"), a.seed("seed"));
    lsum(1, n, |k| {
        let km = &HalfInt::from_int(k) + &m;
        let c = &(&(&sign(k) * &chooser(n, k)) * &inv_binom_half(&km, &m)?)
            * &Rational::frac(1, k);
        Ok(LogValue::from_rational(&c * &gibr(&seed, k)))
    })
}

fn bt3_sym_rhs(a: &Assignment) -> Eval {
    let (n, m, seed) = (a.int("n"), a.half("m"), a.seed("seed"));
    lsum(0, n, |k| {
        let c = &(&sign(k) * &chooser(n, k)) * &gibr(&seed, n - 2 * k);
        Ok(h_shifted(k, &m)?.scale(&c))
    })
}

fn bt3_m0a_lhs(a: &Assignment) -> Eval {
    let (n, seed) = (a.int("n"), a.seed("seed"));
    lsum(1, n, |k| {
        let c = &(&sign(k) * &chooser(n, k)) * &gibr(&seed, k);
        Ok(h_int(k)?.scale(&c))
    })
}

fn bt3_m0a_rhs(a: &Assignment) -> Eval {
    let (n, seed) = (a.int("n"), a.seed("seed"));
    lsum(1, n, |k| {
        let c = &(&(&sign(k) * &chooser(n, k)) * &gibr(&seed, n - 2 * k))
            * &Rational::frac(1, k);
        Ok(LogValue::from_rational(c))
    })
}

fn bt3_m0b_lhs(a: &Assignment) -> Eval {
    let (n, seed) = (a.int("n"), a.seed("seed"));
    lsum(1, n, |k| {
        let c = &(&(&sign(k + 1) * &chooser(n, k)) * &gibr(&seed, k))
            * &Rational::frac(1, k);
        Ok(LogValue::from_rational(c))
    })
}

fn bt3_m0b_rhs(a: &Assignment) -> Eval {
    let (n, seed) = (a.int("n"), a.seed("seed"));
    lsum(1, n, |k| {
        let c = &(&sign(k) * &chooser(n, k)) * &gibr(&seed, n - 2 * k);
        Ok(h_int(k)?.scale(&c))
    })
}


fn m_positive_or_neg_half(a: &Assignment) -> bool {
    let m = a.half("m");
    m == HalfInt::halves(-1) || m.as_int().is_some_and(|m| m >= 1)
}

fn m_nonneg_or_neg_half(a: &Assignment) -> bool {
    let m = a.half("m");
    m == HalfInt::halves(-1) || m.as_int().is_some_and(|m| m >= 0)
}

const P_M_POS_OR_NEG_HALF: ParamSpec = ParamSpec {
    name: "m",
    kind: ParamKind::Half,
    domain: Domain::Halves(&[-1, 2, 4, 6]),
};

const P_M_NONNEG_OR_NEG_HALF: ParamSpec = ParamSpec {
    name: "m",
    kind: ParamKind::Half,
    domain: Domain::Halves(&[-1, 0, 2, 4, 6]),
};

pub(super) static ENTRIES: &[IdentityEntry] = &[
    IdentityEntry {
        id: "bt-G-scaled",
        family: Family::BtBoyad,
        anchor: "eq.oxjlkzh",
        params: &[P_N0, P_R_ALL, P_T, P_SEED],
        admissible: None,
        lhs: bt_g_scaled_lhs,
        rhs: bt_g_scaled_rhs,
    },
    IdentityEntry {
        id: "boyad-H-G",
        family: Family::BtBoyad,
        anchor: "thm.oxjlkzh.h",
        params: &[P_N0, P_R_ALL, P_T, P_SEED],
        admissible: None,
        lhs: boyad_h_g_lhs,
        rhs: boyad_h_g_rhs,
    },
    IdentityEntry {
        id: "boyad-H-F",
        family: Family::BtBoyad,
        anchor: "cor.boyad.f",
        params: &[P_N0, P_R_ALL, P_T],
        admissible: None,
        lhs: boyad_h_f_lhs,
        rhs: boyad_h_f_rhs,
    },
    IdentityEntry {
        id: "boyad-H-L",
        family: Family::BtBoyad,
        anchor: "cor.boyad.l",
        params: &[P_N0, P_R_ALL, P_T],
        admissible: None,
        lhs: boyad_h_l_lhs,
        rhs: boyad_h_l_rhs,
    },
    IdentityEntry {
        id: "boyad-HF-part",
        family: Family::BtBoyad,
        anchor: "eq.lcrsozt",
        params: &[P_N0],
        admissible: None,
        lhs: boyad_hf_part_lhs,
        rhs: boyad_hf_part_rhs,
    },
    IdentityEntry {
        id: "boyad-HL-part",
        family: Family::BtBoyad,
        anchor: "eq.lcrsozt.lucas",
        params: &[P_N0],
        admissible: None,
        lhs: boyad_hl_part_lhs,
        rhs: boyad_hl_part_rhs,
    },
    IdentityEntry {
        id: "boyad-rev",
        family: Family::BtBoyad,
        anchor: "thm.boyad.rev",
        params: &[P_N0, P_R_ALL, P_T, P_SEED],
        admissible: None,
        lhs: boyad_rev_lhs,
        rhs: boyad_rev_rhs,
    },
    IdentityEntry {
        id: "boyad-rev-F",
        family: Family::BtBoyad,
        anchor: "cor.boyad.rev.f",
        params: &[P_N0, P_R_ALL, P_T],
        admissible: None,
        lhs: boyad_rev_f_lhs,
        rhs: boyad_rev_f_rhs,
    },
    IdentityEntry {
        id: "boyad-rev-L",
        family: Family::BtBoyad,
        anchor: "cor.boyad.rev.l",
        params: &[P_N0, P_R_ALL, P_T],
        admissible: None,
        lhs: boyad_rev_l_lhs,
        rhs: boyad_rev_l_rhs,
    },
    IdentityEntry {
        id: "bt2-m",
        family: Family::BtBoyad,
        anchor: "eq.uwn5wo9",
        params: &[P_N0, P_M_POS_OR_NEG_HALF, P_SEED],
        admissible: Some(m_positive_or_neg_half),
        lhs: bt2_m_lhs,
        rhs: bt2_m_rhs,
    },
    IdentityEntry {
        id: "bt2-m-sym",
        family: Family::BtBoyad,
        anchor: "eq.mlvhmnt",
        params: &[P_N0, P_M_POS_OR_NEG_HALF, P_SEED],
        admissible: Some(m_positive_or_neg_half),
        lhs: bt2_m_sym_lhs,
        rhs: bt2_m_sym_rhs,
    },
    IdentityEntry {
        id: "bt2-m1a",
        family: Family::BtBoyad,
        anchor: "eq.uwn5wo9.m1",
        params: &[P_N0, P_SEED],
        admissible: None,
        lhs: bt2_m1a_lhs,
        rhs: bt2_m1a_rhs,
    },
    IdentityEntry {
        id: "bt2-m1b",
        family: Family::BtBoyad,
        anchor: "eq.mlvhmnt.m1",
        params: &[P_N0, P_SEED],
        admissible: None,
        lhs: bt2_m1b_lhs,
        rhs: bt2_m1b_rhs,
    },
    IdentityEntry {
        id: "prop1-ln2-a",
        family: Family::BtBoyad,
        anchor: "eq.new1",
        params: &[P_N0, P_SEED],
        admissible: None,
        lhs: prop1_ln2_a_lhs,
        rhs: prop1_ln2_a_rhs,
    },
    IdentityEntry {
        id: "prop1-ln2-b",
        family: Family::BtBoyad,
        anchor: "eq.new2",
        params: &[P_N0, P_SEED],
        admissible: None,
        lhs: prop1_ln2_b_lhs,
        rhs: prop1_ln2_b_rhs,
    },
    IdentityEntry {
        id: "prop1-a",
        family: Family::BtBoyad,
        anchor: "eq.irration1",
        params: &[P_N0, P_SEED],
        admissible: None,
        lhs: prop1_a_lhs,
        rhs: prop1_a_rhs,
    },
    IdentityEntry {
        id: "prop1-b",
        family: Family::BtBoyad,
        anchor: "eq.irration2",
        params: &[P_N0, P_SEED],
        admissible: None,
        lhs: prop1_b_lhs,
        rhs: prop1_b_rhs,
    },
    IdentityEntry {
        id: "prop2-a",
        family: Family::BtBoyad,
        anchor: "eq.irration3",
        params: &[P_N0, P_SEED],
        admissible: None,
        lhs: prop2_a_lhs,
        rhs: prop2_a_rhs,
    },
    IdentityEntry {
        id: "prop2-b",
        family: Family::BtBoyad,
        anchor: "eq.irration4",
        params: &[P_N0, P_SEED],
        admissible: None,
        lhs: prop2_b_lhs,
        rhs: prop2_b_rhs,
    },
    IdentityEntry {
        id: "bt3",
        family: Family::BtBoyad,
        anchor: "eq.x63o4jh",
        params: &[P_N1, P_M_NONNEG_OR_NEG_HALF, P_SEED],
        admissible: Some(m_nonneg_or_neg_half),
        lhs: bt3_lhs,
        rhs: bt3_rhs,
    },
    IdentityEntry {
        id: "bt3-sym",
        family: Family::BtBoyad,
        anchor: "eq.x63o4jh.sym",
        params: &[P_N1, P_M_NONNEG_OR_NEG_HALF, P_SEED],
        admissible: Some(m_nonneg_or_neg_half),
        lhs: bt3_sym_lhs,
        rhs: bt3_sym_rhs,
    },
    IdentityEntry {
        id: "bt3-m0a",
        family: Family::BtBoyad,
        anchor: "eq.x63o4jh.m0",
        params: &[P_N1, P_SEED],
        admissible: None,
        lhs: bt3_m0a_lhs,
        rhs: bt3_m0a_rhs,
    },
    IdentityEntry {
        id: "bt3-m0b",
        family: Family::BtBoyad,
        anchor: "eq.x63o4jh.sym.m0",
        params: &[P_N1, P_SEED],
        admissible: None,
        lhs: bt3_m0b_lhs,
        rhs: bt3_m0b_rhs,
    },
];
