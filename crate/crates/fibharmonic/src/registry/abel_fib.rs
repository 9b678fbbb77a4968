//! Partial-summation identities built on basic Fibonacci relations.

use super::*;
use crate::sequences::gib_product;

fn shift_binom_lhs(a: &Assignment) -> Eval {
    let (n, r, s, t) = (a.int("n"), a.int("r"), a.int("s"), a.int("t"));
    lsum(1, n, |k| {
        Ok(LogValue::from_rational(
            &fibr(k + r + 2) * &inv_choose(t + k + s, t + 1)?,
        ))
    })
}

fn shift_binom_rhs(a: &Assignment) -> Eval {
    let (n, r, s, t) = (a.int("n"), a.int("r"), a.int("s"), a.int("t"));
    let sum1 = rsum(1, n, |k| Ok(&fibr(k + r + 1) * &inv_choose(t + k + s, t + 1)?))?;
    let sum2 = rsum(1, n, |k| {
        Ok(&fibr(k + r + 1) * &inv_choose(t + k + s + 1, t + 1)?)
    })?;
    let boundary = &fibr(n + r + 1) * &inv_choose(t + n + s + 1, t + 1)?;
    let first = &fibr(r + 1) * &inv_choose(s + t + 1, t + 1)?;
    Ok(LogValue::from_rational(
        &(&(&sum1 - &boundary) + &sum2) + &first,
    ))
}

fn shift_simple_lhs(a: &Assignment) -> Eval {
    let (n, r, s) = (a.int("n"), a.int("r"), a.int("s"));
    lsum(1, n, |k| {
        Ok(LogValue::from_rational(
            &fibr(k + r + 2) * &inv_or_skip(rat(k + s), || format!("k+s at k={k}"))?,
        ))
    })
}

fn shift_simple_rhs(a: &Assignment) -> Eval {
    let (n, r, s) = (a.int("n"), a.int("r"), a.int("s"));
    let sum = rsum(1, n, |k| {
        let den = inv_or_skip(&rat(k + s) * &rat(k + s + 1), || {
            format!("(k+s)(k+s+1) at k={k}")
        })?;
        Ok(&(&rat(2 * k + 3) * &fibr(k + r + 1)) * &den)
    })?;
    let first = &fibr(r + 1) * &inv_or_skip(rat(s + 1), || "s+1".into())?;
    let last = &fibr(n + r + 1) * &inv_or_skip(rat(n + s + 1), || "n+s+1".into())?;
    Ok(LogValue::from_rational(&(&sum + &first) - &last))
}

fn harm_shift_lhs(a: &Assignment) -> Eval {
    let (n, r, s, t) = (a.int("n"), a.int("r"), a.int("s"), a.int("t"));
    let ht = h_int(t)?;
    lsum(1, n, |k| {
        let coeff = inv_choose(t + k + s - 1, t + 1)?;
        let diff = &ht - &h_int(k + t + s - 1)?;
        Ok(diff.scale(&(&coeff * &fibr(k + r - 1))))
    })
}

fn harm_shift_rhs(a: &Assignment) -> Eval {
    let (n, r, s, t) = (a.int("n"), a.int("r"), a.int("s"), a.int("t"));
    let ht = h_int(t)?;
    let sum1 = lsum(1, n, |k| {
        let coeff = inv_choose(t + k + s - 1, t + 1)?;
        Ok((&ht - &h_int(k + t + s - 1)?).scale(&(&coeff * &fibr(k + r + 1))))
    })?;
    let sum2 = lsum(1, n, |k| {
        let coeff = inv_choose(t + k + s, t + 1)?;
        Ok((&ht - &h_int(k + t + s)?).scale(&(&coeff * &fibr(k + r + 1))))
    })?;
    let boundary = (&ht - &h_int(n + t + s)?)
        .scale(&(&inv_choose(n + t + s, t + 1)? * &fibr(n + r + 1)));
    let first = (&ht - &h_int(s + t)?).scale(&(&inv_choose(t + s, t + 1)? * &fibr(r + 1)));
    Ok(&(&(&sum1 - &sum2) + &boundary) - &first)
}

fn prod_ff_h_lhs(a: &Assignment) -> Eval {
    let n = a.int("n");
    lsum(1, n, |k| {
        let c = &(&fibr(k - 2) * &fibr(k + 1)) * &Rational::frac(1, k);
        Ok(h_int(k)?.scale(&c))
    })
}

fn prod_ff_h_rhs(a: &Assignment) -> Eval {
    let n = a.int("n");
    let sum = lsum(1, n - 1, |k| {
        let c = &fibr(k).pow(2).unwrap() * &Rational::new(1.into(), (k * (k + 1)).into()).unwrap();
        Ok((&h_int(k + 1)? - &LogValue::int(1)).scale(&c))
    })?;
    let tail = h_int(n)?.scale(&(&fibr(n).pow(2).unwrap() * &Rational::frac(1, n)));
    Ok(&sum + &tail)
}

fn prod_ff_o_lhs(a: &Assignment) -> Eval {
    let n = a.int("n");
    lsum(1, n, |k| {
        let c = &(&(&Rational::pow2(2 * k) * &Rational::frac(1, k)) * &o_at(k)?)
            * &inv_choose(2 * k, k)?;
        Ok(LogValue::from_rational(&c * &(&fibr(k - 2) * &fibr(k + 1))))
    })
}

fn prod_ff_o_rhs(a: &Assignment) -> Eval {
    let n = a.int("n");
    let sum = rsum(1, n - 1, |k| {
        let c = &(&Rational::pow2(2 * k)
            * &Rational::new(1.into(), (k * (k + 1)).into()).unwrap())
            * &(&o_at(k + 1)? - &Rational::one());
        Ok(&(&c * &inv_choose(2 * (k + 1), k + 1)?) * &fibr(k).pow(2).unwrap())
    })?;
    let tail = &(&(&Rational::pow2(2 * n) * &Rational::frac(1, n)) * &o_at(n)?)
        * &(&inv_choose(2 * n, n)? * &fibr(n).pow(2).unwrap());
    Ok(LogValue::from_rational(&(&sum + &sum) + &tail))
}

fn prod_ff_gen_lhs(a: &Assignment) -> Eval {
    let (n, r, s, t) = (a.int("n"), a.int("r"), a.int("s"), a.int("t"));
    let ht = h_int(t)?;
    lsum(1, n, |k| {
        let diff = &h_int(k + s + t)? - &ht;
        let c = &inv_choose(k + s + t, t + 1)? * &(&fibr(k + r - 1) * &fibr(k + r + 2));
        Ok(diff.scale(&c))
    })
}

fn prod_ff_gen_rhs(a: &Assignment) -> Eval {
    let (n, r, s, t) = (a.int("n"), a.int("r"), a.int("s"), a.int("t"));
    let ht = h_int(t)?;
    let ht1 = h_int(t + 1)?;
    let sum = lsum(1, n, |k| {
        let diff = &h_int(k + s + t)? - &ht1;
        let c = &inv_choose(k + s + t, t + 2)? * &fibr(k + r).pow(2).unwrap();
        Ok(diff.scale(&c))
    })?
    .scale(&Rational::frac(t + 1, t + 2));
    let first = (&h_int(s + t)? - &ht)
        .scale(&(&inv_choose(s + t, t + 1)? * &fibr(r + 1).pow(2).unwrap()));
    let boundary = (&h_int(n + s + t)? - &ht)
        .scale(&(&inv_choose(n + s + t, t + 1)? * &fibr(n + r + 1).pow(2).unwrap()));
    Ok(&(&sum - &first) + &boundary)
}

fn fib4_sq_lhs(a: &Assignment) -> Eval {
    let (n, r, s, t) = (a.int("n"), a.int("r"), a.int("s"), a.int("t"));
    lsum(1, n, |k| {
        Ok(LogValue::from_rational(
            &fibr(4 * (k + r) + 2) * &inv_choose(k + t + s - 1, t + 1)?,
        ))
    })
}

fn fib4_sq_rhs(a: &Assignment) -> Eval {
    let (n, r, s, t) = (a.int("n"), a.int("r"), a.int("s"), a.int("t"));
    let sum = rsum(1, n, |k| {
        Ok(&fibr(2 * (k + r) + 2).pow(2).unwrap() * &inv_choose(k + t + s, t + 2)?)
    })?;
    let scaled = &sum * &Rational::frac(t + 1, t + 2);
    let boundary = &fibr(2 * (n + r) + 2).pow(2).unwrap() * &inv_choose(n + t + s, t + 1)?;
    let first = &fibr(2 * (r + 1)).pow(2).unwrap() * &inv_choose(t + s, t + 1)?;
    Ok(LogValue::from_rational(&(&scaled + &boundary) - &first))
}

fn fib4_sq_simple_lhs(a: &Assignment) -> Eval {
    let (n, r, s) = (a.int("n"), a.int("r"), a.int("s"));
    lsum(1, n, |k| {
        Ok(LogValue::from_rational(
            &fibr(4 * (k + r) + 2)
                * &inv_or_skip(rat(k + s - 1), || format!("k+s-1 at k={k}"))?,
        ))
    })
}

fn fib4_sq_simple_rhs(a: &Assignment) -> Eval {
    let (n, r, s) = (a.int("n"), a.int("r"), a.int("s"));
    let sum = rsum(1, n, |k| {
        let den = inv_or_skip(&rat(k + s) * &rat(k + s - 1), || {
            format!("(k+s)(k+s-1) at k={k}")
        })?;
        Ok(&fibr(2 * (k + r) + 2).pow(2).unwrap() * &den)
    })?;
    let boundary = &fibr(2 * (n + r) + 2).pow(2).unwrap()
        * &inv_or_skip(rat(n + s), || "n+s".into())?;
    let first = &fibr(2 * (r + 1)).pow(2).unwrap() * &inv_or_skip(rat(s), || "s".into())?;
    Ok(LogValue::from_rational(&(&sum + &boundary) - &first))
}

fn fib4_sq_h_lhs(a: &Assignment) -> Eval {
    let (n, r, s, t) = (a.int("n"), a.int("r"), a.int("s"), a.int("t"));
    let ht = h_int(t)?;
    lsum(1, n, |k| {
        let diff = &ht - &h_int(k + t + s - 1)?;
        Ok(diff.scale(&(&inv_choose(k + t + s - 1, t + 1)? * &fibr(4 * (k + r) + 2))))
    })
}

fn fib4_sq_h_rhs(a: &Assignment) -> Eval {
    let (n, r, s, t) = (a.int("n"), a.int("r"), a.int("s"), a.int("t"));
    let ht = h_int(t)?;
    let sum = lsum(1, n, |k| {
        let diff = &h_int(t + 1)? - &h_int(k + t + s)?;
        Ok(diff.scale(
            &(&inv_choose(k + t + s, t + 2)? * &fibr(2 * (k + r) + 2).pow(2).unwrap()),
        ))
    })?
    .scale(&Rational::frac(t + 1, t + 2));
    let boundary = (&ht - &h_int(n + t + s)?).scale(
        &(&inv_choose(n + t + s, t + 1)? * &fibr(2 * (n + r) + 2).pow(2).unwrap()),
    );
    let first = (&ht - &h_int(t + s)?)
        .scale(&(&inv_choose(t + s, t + 1)? * &fibr(2 * (r + 1)).pow(2).unwrap()));
    Ok(&(&sum + &boundary) - &first)
}

fn fib4_sq_h_simple_lhs(a: &Assignment) -> Eval {
    let (n, r, s) = (a.int("n"), a.int("r"), a.int("s"));
    lsum(1, n, |k| {
        let den = inv_or_skip(rat(k + s - 1), || format!("k+s-1 at k={k}"))?;
        Ok(h_int(k + s - 1)?.scale(&(&den * &fibr(4 * (k + r) + 2))))
    })
}

fn fib4_sq_h_simple_rhs(a: &Assignment) -> Eval {
    let (n, r, s) = (a.int("n"), a.int("r"), a.int("s"));
    let sum = lsum(1, n, |k| {
        let den = inv_or_skip(&rat(k + s) * &rat(k + s - 1), || {
            format!("(k+s)(k+s-1) at k={k}")
        })?;
        Ok((&h_int(k + s)? - &LogValue::int(1))
            .scale(&(&den * &fibr(2 * (k + r) + 2).pow(2).unwrap())))
    })?;
    let boundary = h_int(n + s)?.scale(
        &(&inv_or_skip(rat(n + s), || "n+s".into())?
            * &fibr(2 * (n + r) + 2).pow(2).unwrap()),
    );
    let first = h_int(s)?.scale(
        &(&inv_or_skip(rat(s), || "s".into())? * &fibr(2 * (r + 1)).pow(2).unwrap()),
    );
    Ok(&(&sum + &boundary) - &first)
}

fn rec_lhs_common(a: &Assignment) -> Eval {
    let (n, r, s) = (a.int("n"), a.int("r"), a.int("s"));
    lsum(1, n, |k| {
        let den = inv_or_skip(&fibr(r * k) * &fibr(r * (k + 1)), || {
            format!("F_{{rk}}F_{{r(k+1)}} at k={k}")
        })?;
        Ok(h_int(k + s - 1)?.scale(&(&sign(r * k) * &den)))
    })
}

fn rec_ff_rhs(a: &Assignment) -> Eval {
    let (n, r, s) = (a.int("n"), a.int("r"), a.int("s"));
    let sum = rsum(1, n, |k| {
        let ratio = &fibr(r * (k + 2))
            * &inv_or_skip(fibr(r * (k + 1)), || format!("F_{{r(k+1)}} at k={k}"))?;
        Ok(&ratio * &inv_or_skip(rat(k + s), || format!("k+s at k={k}"))?)
    })?;
    let ratio_n = &fibr(r * (n + 2))
        * &inv_or_skip(fibr(r * (n + 1)), || "F_{r(n+1)}".into())?;
    let with_h = &LogValue::from_rational(sum) - &h_int(n + s)?.scale(&ratio_n);
    let tail = h_int(s)?.scale(&lucr(r));
    let total = &with_h + &tail;
    Ok(total.scale(&inv_or_skip(fibr(r).pow(2).unwrap(), || "F_r^2".into())?))
}

fn rec_ff_part_lhs(a: &Assignment) -> Eval {
    let n = a.int("n");
    lsum(1, n, |k| {
        let den = inv_or_skip(&fibr(k) * &fibr(k + 1), || {
            format!("F_k F_{{k+1}} at k={k}")
        })?;
        Ok(h_int(k)?.scale(&(&sign(k) * &den)))
    })
}

fn rec_ff_part_rhs(a: &Assignment) -> Eval {
    let n = a.int("n");
    let sum = rsum(1, n, |k| {
        let ratio = &fibr(k) * &inv_or_skip(fibr(k + 1), || format!("F_{{k+1}} at k={k}"))?;
        Ok(&ratio * &Rational::frac(1, k + 1))
    })?;
    let ratio_n = &fibr(n) * &inv_or_skip(fibr(n + 1), || "F_{n+1}".into())?;
    Ok(&LogValue::from_rational(sum) - &h_int(n + 1)?.scale(&ratio_n))
}

fn rec_fl_rhs(a: &Assignment) -> Eval {
    let (n, r, s) = (a.int("n"), a.int("r"), a.int("s"));
    let sum = rsum(1, n, |k| {
        let ratio = &lucr(r * (k + 1))
            * &inv_or_skip(fibr(r * (k + 1)), || format!("F_{{r(k+1)}} at k={k}"))?;
        Ok(&ratio * &inv_or_skip(rat(k + s), || format!("k+s at k={k}"))?)
    })?;
    let ratio_n = &lucr(r * (n + 1))
        * &inv_or_skip(fibr(r * (n + 1)), || "F_{r(n+1)}".into())?;
    let lr_fr = &lucr(r) * &inv_or_skip(fibr(r), || "F_r".into())?;
    let total = &(&LogValue::from_rational(sum) - &h_int(n + s)?.scale(&ratio_n))
        + &h_int(s)?.scale(&lr_fr);
    Ok(total.scale(&inv_or_skip(&rat(2) * &fibr(r), || "2F_r".into())?))
}

fn rec_fl_cor_lhs(a: &Assignment) -> Eval {
    let (n, r, s) = (a.int("n"), a.int("r"), a.int("s"));
    lsum(1, n, |k| {
        let ratio = &lucr(r * (k + 1))
            * &inv_or_skip(fibr(r * (k + 1)), || format!("F_{{r(k+1)}} at k={k}"))?;
        Ok(LogValue::from_rational(
            &ratio * &inv_or_skip(rat(k + s), || format!("k+s at k={k}"))?,
        ))
    })
}

fn rec_fl_cor_rhs(a: &Assignment) -> Eval {
    let (n, r, s) = (a.int("n"), a.int("r"), a.int("s"));
    let two_over_fr = &rat(2) * &inv_or_skip(fibr(r), || "F_r".into())?;
    let sum = rsum(1, n, |k| {
        let ratio = &fibr(r * (k + 2))
            * &inv_or_skip(fibr(r * (k + 1)), || format!("F_{{r(k+1)}} at k={k}"))?;
        Ok(&ratio * &inv_or_skip(rat(k + s), || format!("k+s at k={k}"))?)
    })?;
    let first = &sum * &two_over_fr;
    let coeff = &lucr(r * (n + 1)) - &(&two_over_fr * &fibr(r * (n + 2)));
    let mid = h_int(n + s)?
        .scale(&(&coeff * &inv_or_skip(fibr(r * (n + 1)), || "F_{r(n+1)}".into())?));
    let lr_fr = &lucr(r) * &inv_or_skip(fibr(r), || "F_r".into())?;
    Ok(&(&LogValue::from_rational(first) + &mid) + &h_int(s)?.scale(&lr_fr))
}

fn rec_odd_lhs(a: &Assignment) -> Eval {
    let (n, r, s) = (a.int("n"), a.int("r"), a.int("s"));
    lsum(1, n, |k| {
        let den = inv_or_skip(&fibr(2 * r * k) * &fibr(2 * r * (k + 1)), || {
            format!("F_{{2rk}}F_{{2r(k+1)}} at k={k}")
        })?;
        Ok(h_int(k + s - 1)?.scale(&(&fibr(r * (2 * k + 1)) * &den)))
    })
}

fn rec_odd_rhs(a: &Assignment) -> Eval {
    let (n, r, s) = (a.int("n"), a.int("r"), a.int("s"));
    let sum = rsum(1, n, |k| {
        let den = inv_or_skip(fibr(2 * r * (k + 1)), || format!("F_{{2r(k+1)}} at k={k}"))?;
        Ok(&den * &inv_or_skip(rat(k + s), || format!("k+s at k={k}"))?)
    })?;
    let boundary =
        h_int(n + s)?.scale(&inv_or_skip(fibr(2 * r * (n + 1)), || "F_{2r(n+1)}".into())?);
    let first = h_int(s)?.scale(&inv_or_skip(fibr(2 * r), || "F_{2r}".into())?);
    let total = &(&LogValue::from_rational(sum) - &boundary) + &first;
    Ok(total.scale(&inv_or_skip(lucr(r), || "L_r".into())?))
}

fn rec_odd_part_lhs(a: &Assignment) -> Eval {
    let n = a.int("n");
    lsum(1, n, |k| {
        let den = inv_or_skip(&fibr(2 * k) * &fibr(2 * k + 2), || {
            format!("F_{{2k}}F_{{2k+2}} at k={k}")
        })?;
        Ok(h_int(k)?.scale(&(&fibr(2 * k + 1) * &den)))
    })
}

fn rec_odd_part_rhs(a: &Assignment) -> Eval {
    let n = a.int("n");
    let sum = rsum(1, n, |k| {
        let den = inv_or_skip(fibr(2 * k + 2), || format!("F_{{2k+2}} at k={k}"))?;
        Ok(&den * &Rational::frac(1, k + 1))
    })?;
    let boundary = h_int(n + 1)?.scale(&inv_or_skip(fibr(2 * n + 2), || "F_{2n+2}".into())?);
    Ok(&(&LogValue::from_rational(sum) - &boundary) + &LogValue::int(1))
}

fn rec_sq_lhs(a: &Assignment) -> Eval {
    let (n, r, s) = (a.int("n"), a.int("r"), a.int("s"));
    lsum(1, n, |k| {
        let den = inv_or_skip(
            &fibr(r * k).pow(2).unwrap() * &fibr(r * (k + 1)).pow(2).unwrap(),
            || format!("F_{{rk}}^2 F_{{r(k+1)}}^2 at k={k}"),
        )?;
        Ok(h_int(k + s - 1)?.scale(&(&fibr(r * (2 * k + 1)) * &den)))
    })
}

fn rec_sq_rhs(a: &Assignment) -> Eval {
    let (n, r, s) = (a.int("n"), a.int("r"), a.int("s"));
    let sum = rsum(1, n, |k| {
        let den = inv_or_skip(fibr(r * (k + 1)).pow(2).unwrap(), || {
            format!("F_{{r(k+1)}}^2 at k={k}")
        })?;
        Ok(&den * &inv_or_skip(rat(k + s), || format!("k+s at k={k}"))?)
    })?;
    let boundary = h_int(n + s)?.scale(&inv_or_skip(
        fibr(r * (n + 1)).pow(2).unwrap(),
        || "F_{r(n+1)}^2".into(),
    )?);
    let first = h_int(s)?.scale(&inv_or_skip(fibr(r).pow(2).unwrap(), || "F_r^2".into())?);
    let total = &(&LogValue::from_rational(sum) - &boundary) + &first;
    Ok(total.scale(&inv_or_skip(fibr(r), || "F_r".into())?))
}

fn rec_sq_part_lhs(a: &Assignment) -> Eval {
    let n = a.int("n");
    lsum(1, n, |k| {
        let den = inv_or_skip(
            &fibr(2 * k).pow(2).unwrap() * &fibr(2 * k + 2).pow(2).unwrap(),
            || format!("F_{{2k}}^2 F_{{2k+2}}^2 at k={k}"),
        )?;
        Ok(h_int(k)?.scale(&(&fibr(4 * k + 2) * &den)))
    })
}

fn rec_sq_part_rhs(a: &Assignment) -> Eval {
    let n = a.int("n");
    let sum = rsum(1, n, |k| {
        let den = inv_or_skip(fibr(2 * k + 2).pow(2).unwrap(), || {
            format!("F_{{2k+2}}^2 at k={k}")
        })?;
        Ok(&den * &Rational::frac(1, k + 1))
    })?;
    let boundary = h_int(n + 1)?.scale(&inv_or_skip(
        fibr(2 * n + 2).pow(2).unwrap(),
        || "F_{2n+2}^2".into(),
    )?);
    Ok(&(&LogValue::from_rational(sum) - &boundary) + &LogValue::int(1))
}

fn rec_quad_lhs(a: &Assignment) -> Eval {
    let (n, r, s) = (a.int("n"), a.int("r"), a.int("s"));
    lsum(1, n, |k| {
        let den = inv_or_skip(
            &(&fibr(r * k) * &fibr(r * (k + 1)).pow(2).unwrap()) * &fibr(r * (k + 2)),
            || format!("F_{{rk}}F_{{r(k+1)}}^2F_{{r(k+2)}} at k={k}"),
        )?;
        Ok(h_int(k + s - 1)?.scale(&(&fibr(2 * r * (k + 1)) * &den)))
    })
}

fn rec_quad_rhs(a: &Assignment) -> Eval {
    let (n, r, s) = (a.int("n"), a.int("r"), a.int("s"));
    let sum = rsum(1, n, |k| {
        let den = inv_or_skip(&fibr(r * (k + 1)) * &fibr(r * (k + 2)), || {
            format!("F_{{r(k+1)}}F_{{r(k+2)}} at k={k}")
        })?;
        Ok(&den * &inv_or_skip(rat(k + s), || format!("k+s at k={k}"))?)
    })?;
    let boundary = h_int(n + s)?.scale(&inv_or_skip(
        &fibr(r * (n + 1)) * &fibr(r * (n + 2)),
        || "F_{r(n+1)}F_{r(n+2)}".into(),
    )?);
    let first = h_int(s)?.scale(&inv_or_skip(&fibr(r) * &fibr(2 * r), || {
        "F_r F_{2r}".into()
    })?);
    let total = &(&LogValue::from_rational(sum) - &boundary) + &first;
    Ok(total.scale(&inv_or_skip(fibr(r), || "F_r".into())?))
}

fn rec_quad_part_lhs(a: &Assignment) -> Eval {
    let n = a.int("n");
    lsum(1, n, |k| {
        let den = inv_or_skip(
            &(&fibr(2 * k) * &fibr(2 * k + 2).pow(2).unwrap()) * &fibr(2 * k + 4),
            || format!("F_{{2k}}F_{{2k+2}}^2F_{{2k+4}} at k={k}"),
        )?;
        Ok(h_int(k)?.scale(&(&fibr(4 * k + 4) * &den)))
    })
}

fn rec_quad_part_rhs(a: &Assignment) -> Eval {
    let n = a.int("n");
    let sum = rsum(1, n, |k| {
        let den = inv_or_skip(&fibr(2 * k + 2) * &fibr(2 * k + 4), || {
            format!("F_{{2k+2}}F_{{2k+4}} at k={k}")
        })?;
        Ok(&den * &Rational::frac(1, k + 1))
    })?;
    let boundary = h_int(n + 1)?.scale(&inv_or_skip(
        &fibr(2 * n + 2) * &fibr(2 * n + 4),
        || "F_{2n+2}F_{2n+4}".into(),
    )?);
    let third = LogValue::from_rational(Rational::frac(1, 3));
    Ok(&(&LogValue::from_rational(sum) - &boundary) + &third)
}

fn conv_sq_lhs(a: &Assignment) -> Eval {
    let n = a.int("n");
    lsum(0, n, |k| Ok(h_int(k)?.scale(&fibr(n - k).pow(2).unwrap())))
}

fn conv_sq_rhs(a: &Assignment) -> Eval {
    let n = a.int("n");
    lsum(0, n, |k| {
        Ok(LogValue::from_rational(
            &(&fibr(n - k) * &fibr(n - k - 1)) * &Rational::frac(1, k + 1),
        ))
    })
}

fn gib_sq_lhs(a: &Assignment) -> Eval {
    let (n, seed) = (a.int("n"), a.seed("seed"));
    lsum(0, n, |k| Ok(h_int(k)?.scale(&gibr(&seed, k + 1).pow(2).unwrap())))
}

fn gib_sq_rhs(a: &Assignment) -> Eval {
    let (n, seed) = (a.int("n"), a.seed("seed"));
    let head = h_int(n + 1)?.scale(&(&gibr(&seed, n + 1) * &gibr(&seed, n + 2)));
    let sum = rsum(0, n, |k| {
        Ok(&(&gibr(&seed, k + 1) * &gibr(&seed, k + 2)) * &Rational::frac(1, k + 1))
    })?;
    Ok(&head - &LogValue::from_rational(sum))
}

fn gib_prod_lhs(a: &Assignment) -> Eval {
    let (n, m, r, s, seed) = (
        a.int("n"),
        a.int("m"),
        a.int("r"),
        a.int("s"),
        a.seed("seed"),
    );
    let prod = |base: i64| big(&gib_product(&seed, base, 2 * m));
    let sum = lsum(0, n, |k| {
        Ok(LogValue::from_rational(
            &inv_or_skip(rat(k + s), || format!("k+s at k={k}"))? * &prod(k + r + 1),
        ))
    })?;
    let mid = h_int(n + s)?.scale(&prod(n + r + 1));
    let first = h_int(s - 1)?.scale(&prod(r));
    Ok(&(&(-&sum) + &mid) - &first)
}

fn gib_prod_rhs(a: &Assignment) -> Eval {
    let (n, m, r, s, seed) = (
        a.int("n"),
        a.int("m"),
        a.int("r"),
        a.int("s"),
        a.seed("seed"),
    );
    // The inner product runs j = 1 .. 2m-1 and is empty at m = 0.
    let inner = |base: i64| big(&gib_product(&seed, base + 1, (2 * m - 1).max(0)));
    if m % 2 == 0 {
        let sum = lsum(0, n, |k| {
            let pair = &gibr(&seed, k + m + r - 1) + &gibr(&seed, k + m + r + 1);
            Ok(h_int(k + s - 1)?.scale(&(&pair * &inner(k + r))))
        })?;
        Ok(sum.scale(&fibr(m)))
    } else {
        let sum = lsum(0, n, |k| {
            Ok(h_int(k + s - 1)?.scale(&(&gibr(&seed, k + m + r) * &inner(k + r))))
        })?;
        Ok(sum.scale(&lucr(m)))
    }
}

fn st_ge1(a: &Assignment) -> bool {
    a.int("s") >= 0 && a.int("t") >= 0 && a.int("s") + a.int("t") >= 1
}

fn st_ge0(a: &Assignment) -> bool {
    a.int("s") >= 0 && a.int("t") >= 0
}

fn s_ge0(a: &Assignment) -> bool {
    a.int("s") >= 0
}

fn s_ge1(a: &Assignment) -> bool {
    a.int("s") >= 1
}

fn r_ge1_s_ge0(a: &Assignment) -> bool {
    a.int("r") >= 1 && a.int("s") >= 0
}

fn r_odd_s_ge0(a: &Assignment) -> bool {
    let r = a.int("r");
    r >= 1 && r % 2 == 1 && a.int("s") >= 0
}

fn r_even_s_ge0(a: &Assignment) -> bool {
    let r = a.int("r");
    r >= 2 && r % 2 == 0 && a.int("s") >= 0
}

fn m_ge0_s_ge1(a: &Assignment) -> bool {
    a.int("m") >= 0 && a.int("s") >= 1
}

const P_M_PROD: ParamSpec = ParamSpec {
    name: "m",
    kind: ParamKind::Int,
    domain: Domain::Ints(&[0, 1, 2, 3]),
};

pub(super) static ENTRIES: &[IdentityEntry] = &[
    IdentityEntry {
        id: "shift-binom",
        family: Family::AbelFib,
        anchor: "thm1_eq1",
        params: &[P_N1, P_R_ALL, P_S, P_T],
        admissible: Some(st_ge0),
        lhs: shift_binom_lhs,
        rhs: shift_binom_rhs,
    },
    IdentityEntry {
        id: "shift-simple",
        family: Family::AbelFib,
        anchor: "thm1_eq2",
        params: &[P_N1, P_R_ALL, P_S],
        admissible: Some(s_ge0),
        lhs: shift_simple_lhs,
        rhs: shift_simple_rhs,
    },
    IdentityEntry {
        id: "harm-shift",
        family: Family::AbelFib,
        anchor: "thm2_eq1",
        params: &[P_N1, P_R_ALL, P_S, P_T],
        admissible: Some(st_ge1),
        lhs: harm_shift_lhs,
        rhs: harm_shift_rhs,
    },
    IdentityEntry {
        id: "prodFF-H",
        family: Family::AbelFib,
        anchor: "eq.xslb526",
        params: &[P_N1],
        admissible: None,
        lhs: prod_ff_h_lhs,
        rhs: prod_ff_h_rhs,
    },
    IdentityEntry {
        id: "prodFF-O",
        family: Family::AbelFib,
        anchor: "eq.qsl14h7",
        params: &[P_N1],
        admissible: None,
        lhs: prod_ff_o_lhs,
        rhs: prod_ff_o_rhs,
    },
    IdentityEntry {
        id: "prodFF-gen",
        family: Family::AbelFib,
        anchor: "eq.c6bw3gq",
        params: &[P_N1, P_R_ALL, P_S, P_T],
        admissible: Some(st_ge0),
        lhs: prod_ff_gen_lhs,
        rhs: prod_ff_gen_rhs,
    },
    IdentityEntry {
        id: "fib4-sq",
        family: Family::AbelFib,
        anchor: "thm1_Fib_squared.1",
        params: &[P_N1, P_R_ALL, P_S, P_T],
        admissible: Some(st_ge0),
        lhs: fib4_sq_lhs,
        rhs: fib4_sq_rhs,
    },
    IdentityEntry {
        id: "fib4-sq-simple",
        family: Family::AbelFib,
        anchor: "thm1_Fib_squared.2",
        params: &[P_N1, P_R_ALL, P_S1],
        admissible: Some(s_ge1),
        lhs: fib4_sq_simple_lhs,
        rhs: fib4_sq_simple_rhs,
    },
    IdentityEntry {
        id: "fib4-sq-H",
        family: Family::AbelFib,
        anchor: "thm2_Fib_squared.1",
        params: &[P_N1, P_R_ALL, P_S, P_T],
        admissible: Some(st_ge1),
        lhs: fib4_sq_h_lhs,
        rhs: fib4_sq_h_rhs,
    },
    IdentityEntry {
        id: "fib4-sq-H-simple",
        family: Family::AbelFib,
        anchor: "thm2_Fib_squared.2",
        params: &[P_N1, P_R_ALL, P_S1],
        admissible: Some(s_ge1),
        lhs: fib4_sq_h_simple_lhs,
        rhs: fib4_sq_h_simple_rhs,
    },
    IdentityEntry {
        id: "rec-FF",
        family: Family::AbelFib,
        anchor: "eq1_thm1_rec",
        params: &[P_N1, P_R_GE1, P_S],
        admissible: Some(r_ge1_s_ge0),
        lhs: rec_lhs_common,
        rhs: rec_ff_rhs,
    },
    IdentityEntry {
        id: "rec-FF-part",
        family: Family::AbelFib,
        anchor: "thm1_rec.particular",
        params: &[P_N1],
        admissible: None,
        lhs: rec_ff_part_lhs,
        rhs: rec_ff_part_rhs,
    },
    IdentityEntry {
        id: "rec-FL",
        family: Family::AbelFib,
        anchor: "eq2_thm1_rec",
        params: &[P_N1, P_R_GE1, P_S],
        admissible: Some(r_ge1_s_ge0),
        lhs: rec_lhs_common,
        rhs: rec_fl_rhs,
    },
    IdentityEntry {
        id: "rec-FL-cor",
        family: Family::AbelFib,
        anchor: "thm2_rec.corollary",
        params: &[P_N1, P_R_GE1, P_S],
        admissible: Some(r_ge1_s_ge0),
        lhs: rec_fl_cor_lhs,
        rhs: rec_fl_cor_rhs,
    },
    IdentityEntry {
        id: "rec-odd",
        family: Family::AbelFib,
        anchor: "eq1_thm3_rec",
        params: &[P_N1, P_R_ODD, P_S],
        admissible: Some(r_odd_s_ge0),
        lhs: rec_odd_lhs,
        rhs: rec_odd_rhs,
    },
    IdentityEntry {
        id: "rec-odd-part",
        family: Family::AbelFib,
        anchor: "thm3_rec.particular",
        params: &[P_N1],
        admissible: None,
        lhs: rec_odd_part_lhs,
        rhs: rec_odd_part_rhs,
    },
    IdentityEntry {
        id: "rec-sq",
        family: Family::AbelFib,
        anchor: "eq1_thm4_rec",
        params: &[P_N1, P_R_EVEN, P_S],
        admissible: Some(r_even_s_ge0),
        lhs: rec_sq_lhs,
        rhs: rec_sq_rhs,
    },
    IdentityEntry {
        id: "rec-sq-part",
        family: Family::AbelFib,
        anchor: "thm4_rec.particular",
        params: &[P_N1],
        admissible: None,
        lhs: rec_sq_part_lhs,
        rhs: rec_sq_part_rhs,
    },
    IdentityEntry {
        id: "rec-quad",
        family: Family::AbelFib,
        anchor: "eq1_thm5_rec",
        params: &[P_N1, P_R_EVEN, P_S],
        admissible: Some(r_even_s_ge0),
        lhs: rec_quad_lhs,
        rhs: rec_quad_rhs,
    },
    IdentityEntry {
        id: "rec-quad-part",
        family: Family::AbelFib,
        anchor: "thm5_rec.particular",
        params: &[P_N1],
        admissible: None,
        lhs: rec_quad_part_lhs,
        rhs: rec_quad_part_rhs,
    },
    IdentityEntry {
        id: "conv-sq",
        family: Family::AbelFib,
        anchor: "conv.1",
        params: &[P_N0],
        admissible: None,
        lhs: conv_sq_lhs,
        rhs: conv_sq_rhs,
    },
    IdentityEntry {
        id: "gib-sq",
        family: Family::AbelFib,
        anchor: "conv.2",
        params: &[P_N0, P_SEED],
        admissible: None,
        lhs: gib_sq_lhs,
        rhs: gib_sq_rhs,
    },
    IdentityEntry {
        id: "gib-prod",
        family: Family::AbelFib,
        anchor: "eq.g8er2qv",
        params: &[P_N0, P_M_PROD, P_R_ALL, P_S1, P_SEED],
        admissible: Some(m_ge0_s_ge1),
        lhs: gib_prod_lhs,
        rhs: gib_prod_rhs,
    },
];
