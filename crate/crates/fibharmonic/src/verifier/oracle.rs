//! Independent direct-summation evaluators, one per catalog identity and
//! side. These are deliberately plain transliterations of the displays,
//! written apart from the registry encoders: binomial-harmonic weights go
//! through the derivative polynomial instead of harmonic products, scaled
//! powers are recomputed per term, and no coefficients are shared. The audit
//! compares the two routes value-for-value.

use crate::exact::{HalfInt, LogValue, Rational};
use crate::harmonic::{
    binom, binom_deriv, binom_halfint_lower, binom_rat, choose, harmonic, odd_harmonic,
    HarmonicError,
};
use crate::registry::{EvalError, RegistryError};
use crate::report::{Assignment, CheckReport};
use crate::sequences::{fib, gib, gib_product, lucas, GibonacciSeed};

type Ev = Result<LogValue, EvalError>;
type Rv = Result<Rational, EvalError>;
pub type OracleFn = fn(&Assignment) -> Ev;

fn q(n: i64) -> Rational {
    Rational::int(n)
}

fn f(j: i64) -> Rational {
    Rational::from(&fib(j))
}

fn l(j: i64) -> Rational {
    Rational::from(&lucas(j))
}

fn g(seed: &GibonacciSeed, j: i64) -> Rational {
    Rational::from(&gib(seed, j))
}

fn c(n: i64, k: i64) -> Rational {
    Rational::from(&choose(n, k))
}

fn neg1(e: i64) -> Rational {
    Rational::neg_one_pow(e)
}

fn p2(e: i64) -> Rational {
    Rational::pow2(e)
}

fn inv(x: Rational, what: &str) -> Rv {
    x.inv()
        .map_err(|_| EvalError::Skip(format!("zero denominator {what}")))
}

fn invc(n: i64, k: i64) -> Rv {
    inv(c(n, k), &format!("C({n}, {k})"))
}

fn hq(n: i64) -> Rv {
    match harmonic(&HalfInt::from_int(n)) {
        Ok(v) => Ok(v.rat),
        Err(HarmonicError::Pole(_)) => {
            Err(EvalError::Skip(format!("harmonic pole at H_{{{n}}}")))
        }
        Err(e) => Err(EvalError::Internal(e.to_string())),
    }
}

fn hlv(z: &HalfInt) -> Ev {
    match harmonic(z) {
        Ok(v) => Ok(v),
        Err(HarmonicError::Pole(_)) => {
            Err(EvalError::Skip(format!("harmonic pole at H_{{{z}}}")))
        }
        Err(e) => Err(EvalError::Internal(e.to_string())),
    }
}

fn ov(n: i64) -> Rv {
    odd_harmonic(n).map_err(|_| EvalError::Skip(format!("odd harmonic at O_{{{n}}}")))
}

/// C(x, j)(H_x - H_{x-j}) through the derivative polynomial.
fn dcb(x: &HalfInt, j: i64) -> Rational {
    binom_deriv(x, j)
}

fn dcb_int(x: i64, j: i64) -> Rational {
    binom_deriv(&HalfInt::from_int(x), j)
}

/// Plain generalized binomial, any half-integer slots.
fn cbh(upper: &HalfInt, lower: &HalfInt) -> Rv {
    binom_halfint_lower(upper, lower).map_err(|e| EvalError::Internal(e.to_string()))
}

fn cb(upper: &HalfInt, lower: i64) -> Rv {
    if lower < 0 {
        return Ok(Rational::zero());
    }
    binom(upper, lower).map_err(|e| EvalError::Internal(e.to_string()))
}

fn lv(r: Rational) -> LogValue {
    LogValue::from_rational(r)
}

fn powr(base: &Rational, e: i64, what: &str) -> Rv {
    base.pow(e)
        .map_err(|_| EvalError::Skip(format!("zero base {what}")))
}

// ---- ABEL-FIB --------------------------------------------------------------

fn sb_l(a: &Assignment) -> Ev {
    let (n, r, s, t) = (a.int("n"), a.int("r"), a.int("s"), a.int("t"));
    let mut acc = Rational::zero();
    for k in 1..=n {
        acc = &acc + &(&f(k + r + 2) * &invc(t + k + s, t + 1)?);
    }
    Ok(lv(acc))
}

fn sb_r(a: &Assignment) -> Ev {
    let (n, r, s, t) = (a.int("n"), a.int("r"), a.int("s"), a.int("t"));
    let mut acc = Rational::zero();
    for k in 1..=n {
        acc = &acc + &(&f(k + r + 1) * &invc(t + k + s, t + 1)?);
        acc = &acc + &(&f(k + r + 1) * &invc(t + k + s + 1, t + 1)?);
    }
    acc = &acc - &(&f(n + r + 1) * &invc(t + n + s + 1, t + 1)?);
    acc = &acc + &(&f(r + 1) * &invc(s + t + 1, t + 1)?);
    Ok(lv(acc))
}

fn ss_l(a: &Assignment) -> Ev {
    let (n, r, s) = (a.int("n"), a.int("r"), a.int("s"));
    let mut acc = Rational::zero();
    for k in 1..=n {
        acc = &acc + &(&f(k + r + 2) * &inv(q(k + s), "k+s")?);
    }
    Ok(lv(acc))
}

fn ss_r(a: &Assignment) -> Ev {
    let (n, r, s) = (a.int("n"), a.int("r"), a.int("s"));
    let mut acc = Rational::zero();
    for k in 1..=n {
        let den = inv(&q(k + s) * &q(k + s + 1), "(k+s)(k+s+1)")?;
        acc = &acc + &(&(&q(2 * k + 3) * &f(k + r + 1)) * &den);
    }
    acc = &acc + &(&f(r + 1) * &inv(q(s + 1), "s+1")?);
    acc = &acc - &(&f(n + r + 1) * &inv(q(n + s + 1), "n+s+1")?);
    Ok(lv(acc))
}

fn hs_l(a: &Assignment) -> Ev {
    let (n, r, s, t) = (a.int("n"), a.int("r"), a.int("s"), a.int("t"));
    let mut acc = Rational::zero();
    for k in 1..=n {
        let w = &(&hq(t)? - &hq(k + t + s - 1)?) * &invc(t + k + s - 1, t + 1)?;
        acc = &acc + &(&w * &f(k + r - 1));
    }
    Ok(lv(acc))
}

fn hs_r(a: &Assignment) -> Ev {
    let (n, r, s, t) = (a.int("n"), a.int("r"), a.int("s"), a.int("t"));
    let mut acc = Rational::zero();
    for k in 1..=n {
        let w1 = &(&hq(t)? - &hq(k + t + s - 1)?) * &invc(t + k + s - 1, t + 1)?;
        acc = &acc + &(&w1 * &f(k + r + 1));
        let w2 = &(&hq(t)? - &hq(k + t + s)?) * &invc(t + k + s, t + 1)?;
        acc = &acc - &(&w2 * &f(k + r + 1));
    }
    let wb = &(&hq(t)? - &hq(n + t + s)?) * &invc(n + t + s, t + 1)?;
    acc = &acc + &(&wb * &f(n + r + 1));
    let w0 = &(&hq(t)? - &hq(s + t)?) * &invc(t + s, t + 1)?;
    acc = &acc - &(&w0 * &f(r + 1));
    Ok(lv(acc))
}

fn pfh_l(a: &Assignment) -> Ev {
    let n = a.int("n");
    let mut acc = Rational::zero();
    for k in 1..=n {
        acc = &acc + &(&(&hq(k)? * &inv(q(k), "k")?) * &(&f(k - 2) * &f(k + 1)));
    }
    Ok(lv(acc))
}

fn pfh_r(a: &Assignment) -> Ev {
    let n = a.int("n");
    let mut acc = Rational::zero();
    for k in 1..=n - 1 {
        let w = &(&hq(k + 1)? - &Rational::one()) * &inv(&q(k) * &q(k + 1), "k(k+1)")?;
        acc = &acc + &(&w * &(&f(k) * &f(k)));
    }
    acc = &acc + &(&(&hq(n)? * &inv(q(n), "n")?) * &(&f(n) * &f(n)));
    Ok(lv(acc))
}

fn pfo_l(a: &Assignment) -> Ev {
    let n = a.int("n");
    let mut acc = Rational::zero();
    for k in 1..=n {
        let w = &(&(&p2(2 * k) * &inv(q(k), "k")?) * &ov(k)?) * &invc(2 * k, k)?;
        acc = &acc + &(&w * &(&f(k - 2) * &f(k + 1)));
    }
    Ok(lv(acc))
}

fn pfo_r(a: &Assignment) -> Ev {
    let n = a.int("n");
    let mut acc = Rational::zero();
    for k in 1..=n - 1 {
        let w = &(&(&p2(2 * k) * &inv(&q(k) * &q(k + 1), "k(k+1)")?)
            * &(&ov(k + 1)? - &Rational::one()))
            * &invc(2 * (k + 1), k + 1)?;
        acc = &acc + &(&w * &(&f(k) * &f(k)));
    }
    let acc = &(&acc + &acc)
        + &(&(&(&(&p2(2 * n) * &inv(q(n), "n")?) * &ov(n)?) * &invc(2 * n, n)?)
            * &(&f(n) * &f(n)));
    Ok(lv(acc))
}

fn pfg_l(a: &Assignment) -> Ev {
    let (n, r, s, t) = (a.int("n"), a.int("r"), a.int("s"), a.int("t"));
    let mut acc = Rational::zero();
    for k in 1..=n {
        let w = &(&hq(k + s + t)? - &hq(t)?) * &invc(k + s + t, t + 1)?;
        acc = &acc + &(&w * &(&f(k + r - 1) * &f(k + r + 2)));
    }
    Ok(lv(acc))
}

fn pfg_r(a: &Assignment) -> Ev {
    let (n, r, s, t) = (a.int("n"), a.int("r"), a.int("s"), a.int("t"));
    let mut sum = Rational::zero();
    for k in 1..=n {
        let w = &(&hq(k + s + t)? - &hq(t + 1)?) * &invc(k + s + t, t + 2)?;
        sum = &sum + &(&w * &(&f(k + r) * &f(k + r)));
    }
    let mut acc = &sum * &(&q(t + 1) * &inv(q(t + 2), "t+2")?);
    let w0 = &(&hq(s + t)? - &hq(t)?) * &invc(s + t, t + 1)?;
    acc = &acc - &(&w0 * &(&f(r + 1) * &f(r + 1)));
    let wb = &(&hq(n + s + t)? - &hq(t)?) * &invc(n + s + t, t + 1)?;
    acc = &acc + &(&wb * &(&f(n + r + 1) * &f(n + r + 1)));
    Ok(lv(acc))
}

fn f4_l(a: &Assignment) -> Ev {
    let (n, r, s, t) = (a.int("n"), a.int("r"), a.int("s"), a.int("t"));
    let mut acc = Rational::zero();
    for k in 1..=n {
        acc = &acc + &(&f(4 * (k + r) + 2) * &invc(k + t + s - 1, t + 1)?);
    }
    Ok(lv(acc))
}

fn f4_r(a: &Assignment) -> Ev {
    let (n, r, s, t) = (a.int("n"), a.int("r"), a.int("s"), a.int("t"));
    let mut sum = Rational::zero();
    for k in 1..=n {
        let sq = &f(2 * (k + r) + 2) * &f(2 * (k + r) + 2);
        sum = &sum + &(&sq * &invc(k + t + s, t + 2)?);
    }
    let mut acc = &sum * &(&q(t + 1) * &inv(q(t + 2), "t+2")?);
    let sqn = &f(2 * (n + r) + 2) * &f(2 * (n + r) + 2);
    acc = &acc + &(&sqn * &invc(n + t + s, t + 1)?);
    let sq0 = &f(2 * (r + 1)) * &f(2 * (r + 1));
    acc = &acc - &(&sq0 * &invc(t + s, t + 1)?);
    Ok(lv(acc))
}

fn f4s_l(a: &Assignment) -> Ev {
    let (n, r, s) = (a.int("n"), a.int("r"), a.int("s"));
    let mut acc = Rational::zero();
    for k in 1..=n {
        acc = &acc + &(&f(4 * (k + r) + 2) * &inv(q(k + s - 1), "k+s-1")?);
    }
    Ok(lv(acc))
}

fn f4s_r(a: &Assignment) -> Ev {
    let (n, r, s) = (a.int("n"), a.int("r"), a.int("s"));
    let mut acc = Rational::zero();
    for k in 1..=n {
        let sq = &f(2 * (k + r) + 2) * &f(2 * (k + r) + 2);
        acc = &acc + &(&sq * &inv(&q(k + s) * &q(k + s - 1), "(k+s)(k+s-1)")?);
    }
    let sqn = &f(2 * (n + r) + 2) * &f(2 * (n + r) + 2);
    acc = &acc + &(&sqn * &inv(q(n + s), "n+s")?);
    let sq0 = &f(2 * (r + 1)) * &f(2 * (r + 1));
    acc = &acc - &(&sq0 * &inv(q(s), "s")?);
    Ok(lv(acc))
}

fn f4h_l(a: &Assignment) -> Ev {
    let (n, r, s, t) = (a.int("n"), a.int("r"), a.int("s"), a.int("t"));
    let mut acc = Rational::zero();
    for k in 1..=n {
        let w = &(&hq(t)? - &hq(k + t + s - 1)?) * &invc(k + t + s - 1, t + 1)?;
        acc = &acc + &(&w * &f(4 * (k + r) + 2));
    }
    Ok(lv(acc))
}

fn f4h_r(a: &Assignment) -> Ev {
    let (n, r, s, t) = (a.int("n"), a.int("r"), a.int("s"), a.int("t"));
    let mut sum = Rational::zero();
    for k in 1..=n {
        let w = &(&hq(t + 1)? - &hq(k + t + s)?) * &invc(k + t + s, t + 2)?;
        sum = &sum + &(&w * &(&f(2 * (k + r) + 2) * &f(2 * (k + r) + 2)));
    }
    let mut acc = &sum * &(&q(t + 1) * &inv(q(t + 2), "t+2")?);
    let wb = &(&hq(t)? - &hq(n + t + s)?) * &invc(n + t + s, t + 1)?;
    acc = &acc + &(&wb * &(&f(2 * (n + r) + 2) * &f(2 * (n + r) + 2)));
    let w0 = &(&hq(t)? - &hq(t + s)?) * &invc(t + s, t + 1)?;
    acc = &acc - &(&w0 * &(&f(2 * (r + 1)) * &f(2 * (r + 1))));
    Ok(lv(acc))
}

fn f4hs_l(a: &Assignment) -> Ev {
    let (n, r, s) = (a.int("n"), a.int("r"), a.int("s"));
    let mut acc = Rational::zero();
    for k in 1..=n {
        let w = &hq(k + s - 1)? * &inv(q(k + s - 1), "k+s-1")?;
        acc = &acc + &(&w * &f(4 * (k + r) + 2));
    }
    Ok(lv(acc))
}

fn f4hs_r(a: &Assignment) -> Ev {
    let (n, r, s) = (a.int("n"), a.int("r"), a.int("s"));
    let mut acc = Rational::zero();
    for k in 1..=n {
        let w = &(&hq(k + s)? - &Rational::one())
            * &inv(&q(k + s) * &q(k + s - 1), "(k+s)(k+s-1)")?;
        acc = &acc + &(&w * &(&f(2 * (k + r) + 2) * &f(2 * (k + r) + 2)));
    }
    acc = &acc
        + &(&(&hq(n + s)? * &inv(q(n + s), "n+s")?)
            * &(&f(2 * (n + r) + 2) * &f(2 * (n + r) + 2)));
    acc = &acc
        - &(&(&hq(s)? * &inv(q(s), "s")?) * &(&f(2 * (r + 1)) * &f(2 * (r + 1))));
    Ok(lv(acc))
}

fn rec_l(a: &Assignment) -> Ev {
    let (n, r, s) = (a.int("n"), a.int("r"), a.int("s"));
    let mut acc = Rational::zero();
    for k in 1..=n {
        let den = inv(&f(r * k) * &f(r * (k + 1)), "F_{rk}F_{r(k+1)}")?;
        acc = &acc + &(&(&neg1(r * k) * &den) * &hq(k + s - 1)?);
    }
    Ok(lv(acc))
}

fn rff_r(a: &Assignment) -> Ev {
    let (n, r, s) = (a.int("n"), a.int("r"), a.int("s"));
    let mut inner = Rational::zero();
    for k in 1..=n {
        let ratio = &f(r * (k + 2)) * &inv(f(r * (k + 1)), "F_{r(k+1)}")?;
        inner = &inner + &(&ratio * &inv(q(k + s), "k+s")?);
    }
    let ratio_n = &f(r * (n + 2)) * &inv(f(r * (n + 1)), "F_{r(n+1)}")?;
    inner = &inner - &(&ratio_n * &hq(n + s)?);
    inner = &inner + &(&l(r) * &hq(s)?);
    Ok(lv(&inner * &inv(&f(r) * &f(r), "F_r^2")?))
}

fn rffp_l(a: &Assignment) -> Ev {
    let n = a.int("n");
    let mut acc = Rational::zero();
    for k in 1..=n {
        let den = inv(&f(k) * &f(k + 1), "F_k F_{k+1}")?;
        acc = &acc + &(&(&neg1(k) * &den) * &hq(k)?);
    }
    Ok(lv(acc))
}

fn rffp_r(a: &Assignment) -> Ev {
    let n = a.int("n");
    let mut acc = Rational::zero();
    for k in 1..=n {
        let ratio = &f(k) * &inv(f(k + 1), "F_{k+1}")?;
        acc = &acc + &(&ratio * &inv(q(k + 1), "k+1")?);
    }
    let ratio_n = &f(n) * &inv(f(n + 1), "F_{n+1}")?;
    acc = &acc - &(&ratio_n * &hq(n + 1)?);
    Ok(lv(acc))
}

fn rfl_r(a: &Assignment) -> Ev {
    let (n, r, s) = (a.int("n"), a.int("r"), a.int("s"));
    let mut inner = Rational::zero();
    for k in 1..=n {
        let ratio = &l(r * (k + 1)) * &inv(f(r * (k + 1)), "F_{r(k+1)}")?;
        inner = &inner + &(&ratio * &inv(q(k + s), "k+s")?);
    }
    let ratio_n = &l(r * (n + 1)) * &inv(f(r * (n + 1)), "F_{r(n+1)}")?;
    inner = &inner - &(&ratio_n * &hq(n + s)?);
    inner = &inner + &(&(&l(r) * &inv(f(r), "F_r")?) * &hq(s)?);
    Ok(lv(&inner * &inv(&q(2) * &f(r), "2F_r")?))
}

fn rflc_l(a: &Assignment) -> Ev {
    let (n, r, s) = (a.int("n"), a.int("r"), a.int("s"));
    let mut acc = Rational::zero();
    for k in 1..=n {
        let ratio = &l(r * (k + 1)) * &inv(f(r * (k + 1)), "F_{r(k+1)}")?;
        acc = &acc + &(&ratio * &inv(q(k + s), "k+s")?);
    }
    Ok(lv(acc))
}

fn rflc_r(a: &Assignment) -> Ev {
    let (n, r, s) = (a.int("n"), a.int("r"), a.int("s"));
    let two_fr = &q(2) * &inv(f(r), "F_r")?;
    let mut acc = Rational::zero();
    for k in 1..=n {
        let ratio = &f(r * (k + 2)) * &inv(f(r * (k + 1)), "F_{r(k+1)}")?;
        acc = &acc + &(&ratio * &inv(q(k + s), "k+s")?);
    }
    acc = &acc * &two_fr;
    let coeff = &l(r * (n + 1)) - &(&two_fr * &f(r * (n + 2)));
    acc = &acc + &(&(&coeff * &hq(n + s)?) * &inv(f(r * (n + 1)), "F_{r(n+1)}")?);
    acc = &acc + &(&(&l(r) * &inv(f(r), "F_r")?) * &hq(s)?);
    Ok(lv(acc))
}

fn rodd_l(a: &Assignment) -> Ev {
    let (n, r, s) = (a.int("n"), a.int("r"), a.int("s"));
    let mut acc = Rational::zero();
    for k in 1..=n {
        let den = inv(&f(2 * r * k) * &f(2 * r * (k + 1)), "F_{2rk}F_{2r(k+1)}")?;
        acc = &acc + &(&(&f(r * (2 * k + 1)) * &den) * &hq(k + s - 1)?);
    }
    Ok(lv(acc))
}

fn rodd_r(a: &Assignment) -> Ev {
    let (n, r, s) = (a.int("n"), a.int("r"), a.int("s"));
    let mut inner = Rational::zero();
    for k in 1..=n {
        inner = &inner
            + &(&inv(f(2 * r * (k + 1)), "F_{2r(k+1)}")? * &inv(q(k + s), "k+s")?);
    }
    inner = &inner - &(&hq(n + s)? * &inv(f(2 * r * (n + 1)), "F_{2r(n+1)}")?);
    inner = &inner + &(&hq(s)? * &inv(f(2 * r), "F_{2r}")?);
    Ok(lv(&inner * &inv(l(r), "L_r")?))
}

fn roddp_l(a: &Assignment) -> Ev {
    let n = a.int("n");
    let mut acc = Rational::zero();
    for k in 1..=n {
        let den = inv(&f(2 * k) * &f(2 * k + 2), "F_{2k}F_{2k+2}")?;
        acc = &acc + &(&(&f(2 * k + 1) * &den) * &hq(k)?);
    }
    Ok(lv(acc))
}

fn roddp_r(a: &Assignment) -> Ev {
    let n = a.int("n");
    let mut acc = Rational::zero();
    for k in 1..=n {
        acc = &acc + &(&inv(f(2 * k + 2), "F_{2k+2}")? * &inv(q(k + 1), "k+1")?);
    }
    acc = &acc - &(&hq(n + 1)? * &inv(f(2 * n + 2), "F_{2n+2}")?);
    acc = &acc + &Rational::one();
    Ok(lv(acc))
}

fn rsq_l(a: &Assignment) -> Ev {
    let (n, r, s) = (a.int("n"), a.int("r"), a.int("s"));
    let mut acc = Rational::zero();
    for k in 1..=n {
        let d = &(&f(r * k) * &f(r * k)) * &(&f(r * (k + 1)) * &f(r * (k + 1)));
        acc = &acc + &(&(&f(r * (2 * k + 1)) * &inv(d, "F_{rk}^2F_{r(k+1)}^2")?) * &hq(k + s - 1)?);
    }
    Ok(lv(acc))
}

fn rsq_r(a: &Assignment) -> Ev {
    let (n, r, s) = (a.int("n"), a.int("r"), a.int("s"));
    let mut inner = Rational::zero();
    for k in 1..=n {
        let d = &f(r * (k + 1)) * &f(r * (k + 1));
        inner = &inner + &(&inv(d, "F_{r(k+1)}^2")? * &inv(q(k + s), "k+s")?);
    }
    inner = &inner
        - &(&hq(n + s)? * &inv(&f(r * (n + 1)) * &f(r * (n + 1)), "F_{r(n+1)}^2")?);
    inner = &inner + &(&hq(s)? * &inv(&f(r) * &f(r), "F_r^2")?);
    Ok(lv(&inner * &inv(f(r), "F_r")?))
}

fn rsqp_l(a: &Assignment) -> Ev {
    let n = a.int("n");
    let mut acc = Rational::zero();
    for k in 1..=n {
        let d = &(&f(2 * k) * &f(2 * k)) * &(&f(2 * k + 2) * &f(2 * k + 2));
        acc = &acc + &(&(&f(4 * k + 2) * &inv(d, "F_{2k}^2F_{2k+2}^2")?) * &hq(k)?);
    }
    Ok(lv(acc))
}

fn rsqp_r(a: &Assignment) -> Ev {
    let n = a.int("n");
    let mut acc = Rational::zero();
    for k in 1..=n {
        let d = &f(2 * k + 2) * &f(2 * k + 2);
        acc = &acc + &(&inv(d, "F_{2k+2}^2")? * &inv(q(k + 1), "k+1")?);
    }
    acc = &acc - &(&hq(n + 1)? * &inv(&f(2 * n + 2) * &f(2 * n + 2), "F_{2n+2}^2")?);
    acc = &acc + &Rational::one();
    Ok(lv(acc))
}

fn rquad_l(a: &Assignment) -> Ev {
    let (n, r, s) = (a.int("n"), a.int("r"), a.int("s"));
    let mut acc = Rational::zero();
    for k in 1..=n {
        let d = &(&f(r * k) * &(&f(r * (k + 1)) * &f(r * (k + 1)))) * &f(r * (k + 2));
        acc = &acc
            + &(&(&f(2 * r * (k + 1)) * &inv(d, "F_{rk}F_{r(k+1)}^2F_{r(k+2)}")?)
                * &hq(k + s - 1)?);
    }
    Ok(lv(acc))
}

fn rquad_r(a: &Assignment) -> Ev {
    let (n, r, s) = (a.int("n"), a.int("r"), a.int("s"));
    let mut inner = Rational::zero();
    for k in 1..=n {
        let d = &f(r * (k + 1)) * &f(r * (k + 2));
        inner = &inner + &(&inv(d, "F_{r(k+1)}F_{r(k+2)}")? * &inv(q(k + s), "k+s")?);
    }
    inner = &inner
        - &(&hq(n + s)? * &inv(&f(r * (n + 1)) * &f(r * (n + 2)), "F_{r(n+1)}F_{r(n+2)}")?);
    inner = &inner + &(&hq(s)? * &inv(&f(r) * &f(2 * r), "F_rF_{2r}")?);
    Ok(lv(&inner * &inv(f(r), "F_r")?))
}

fn rquadp_l(a: &Assignment) -> Ev {
    let n = a.int("n");
    let mut acc = Rational::zero();
    for k in 1..=n {
        let d = &(&f(2 * k) * &(&f(2 * k + 2) * &f(2 * k + 2))) * &f(2 * k + 4);
        acc = &acc + &(&(&f(4 * k + 4) * &inv(d, "F_{2k}F_{2k+2}^2F_{2k+4}")?) * &hq(k)?);
    }
    Ok(lv(acc))
}

fn rquadp_r(a: &Assignment) -> Ev {
    let n = a.int("n");
    let mut acc = Rational::zero();
    for k in 1..=n {
        let d = &f(2 * k + 2) * &f(2 * k + 4);
        acc = &acc + &(&inv(d, "F_{2k+2}F_{2k+4}")? * &inv(q(k + 1), "k+1")?);
    }
    acc = &acc - &(&hq(n + 1)? * &inv(&f(2 * n + 2) * &f(2 * n + 4), "F_{2n+2}F_{2n+4}")?);
    acc = &acc + &Rational::frac(1, 3);
    Ok(lv(acc))
}

fn conv_l(a: &Assignment) -> Ev {
    let n = a.int("n");
    let mut acc = Rational::zero();
    for k in 0..=n {
        acc = &acc + &(&hq(k)? * &(&f(n - k) * &f(n - k)));
    }
    Ok(lv(acc))
}

fn conv_r(a: &Assignment) -> Ev {
    let n = a.int("n");
    let mut acc = Rational::zero();
    for k in 0..=n {
        acc = &acc + &(&(&f(n - k) * &f(n - k - 1)) * &inv(q(k + 1), "k+1")?);
    }
    Ok(lv(acc))
}

fn gsq_l(a: &Assignment) -> Ev {
    let (n, seed) = (a.int("n"), a.seed("seed"));
    let mut acc = Rational::zero();
    for k in 0..=n {
        acc = &acc + &(&hq(k)? * &(&g(&seed, k + 1) * &g(&seed, k + 1)));
    }
    Ok(lv(acc))
}

fn gsq_r(a: &Assignment) -> Ev {
    let (n, seed) = (a.int("n"), a.seed("seed"));
    let mut acc = &hq(n + 1)? * &(&g(&seed, n + 1) * &g(&seed, n + 2));
    for k in 0..=n {
        acc = &acc - &(&(&g(&seed, k + 1) * &g(&seed, k + 2)) * &inv(q(k + 1), "k+1")?);
    }
    Ok(lv(acc))
}

fn gprod_l(a: &Assignment) -> Ev {
    let (n, m, r, s, seed) = (
        a.int("n"),
        a.int("m"),
        a.int("r"),
        a.int("s"),
        a.seed("seed"),
    );
    let mut acc = Rational::zero();
    for k in 0..=n {
        let p = Rational::from(&gib_product(&seed, k + r + 1, 2 * m));
        acc = &acc - &(&inv(q(k + s), "k+s")? * &p);
    }
    acc = &acc + &(&hq(n + s)? * &Rational::from(&gib_product(&seed, n + r + 1, 2 * m)));
    acc = &acc - &(&hq(s - 1)? * &Rational::from(&gib_product(&seed, r, 2 * m)));
    Ok(lv(acc))
}

fn gprod_r(a: &Assignment) -> Ev {
    let (n, m, r, s, seed) = (
        a.int("n"),
        a.int("m"),
        a.int("r"),
        a.int("s"),
        a.seed("seed"),
    );
    let mut acc = Rational::zero();
    for k in 0..=n {
        let mut inner = Rational::one();
        for j in 1..=(2 * m - 1) {
            inner = &inner * &g(&seed, k + r + j);
        }
        let head = if m % 2 == 0 {
            &g(&seed, k + m + r - 1) + &g(&seed, k + m + r + 1)
        } else {
            g(&seed, k + m + r)
        };
        acc = &acc + &(&(&hq(k + s - 1)? * &head) * &inner);
    }
    let lead = if m % 2 == 0 { f(m) } else { l(m) };
    Ok(lv(&lead * &acc))
}

// ---- ABEL-COMB -------------------------------------------------------------

fn cof_l(a: &Assignment) -> Ev {
    let n = a.int("n");
    let mut acc = Rational::zero();
    for k in 1..=n {
        let w = &(&neg1(k - 1) * &c(2 * k, k)) * &p2(-2 * k);
        acc = &acc + &(&(&w * &ov(k)?) * &f(k - 1));
    }
    Ok(lv(acc))
}

fn cof_r(a: &Assignment) -> Ev {
    let n = a.int("n");
    let mut acc = Rational::zero();
    for k in 1..=n {
        let w = &(&neg1(k - 1) * &c(2 * k, k)) * &p2(-2 * k);
        let core = &(&q(2 * k + 1) * &(&ov(k + 1)? - &Rational::one())) * &f(k + 1);
        acc = &acc + &(&w * &core);
    }
    let tail = &(&(&neg1(n) * &c(2 * n, n)) * &p2(-2 * n))
        * &(&(&q(2 * n + 1) * &(&ov(n + 1)? - &Rational::one())) * &f(n));
    Ok(lv(&acc + &tail))
}

fn chg_l(a: &Assignment) -> Ev {
    let (n, s, t, r, seed) = (
        a.int("n"),
        a.int("s"),
        a.int("t"),
        a.int("r"),
        a.seed("seed"),
    );
    let mut acc = Rational::zero();
    for k in 1..=n {
        acc = &acc + &(&dcb_int(r, k + s) * &g(&seed, k + t));
    }
    Ok(lv(acc))
}

fn chg_r(a: &Assignment) -> Ev {
    let (n, s, t, r, seed) = (
        a.int("n"),
        a.int("s"),
        a.int("t"),
        a.int("r"),
        a.seed("seed"),
    );
    let mut acc = Rational::zero();
    for k in 1..=n {
        acc = &acc + &(&dcb_int(r - 1, k + s) * &g(&seed, k + t + 2));
    }
    acc = &acc + &(&dcb_int(r - 1, s) * &g(&seed, t + 1));
    acc = &acc - &(&dcb_int(r - 1, n + s) * &g(&seed, n + t + 1));
    Ok(lv(acc))
}

fn chgb_l(a: &Assignment) -> Ev {
    let (n, s, t, r, seed) = (
        a.int("n"),
        a.int("s"),
        a.int("t"),
        a.int("r"),
        a.seed("seed"),
    );
    let mut acc = Rational::zero();
    for k in 1..=n {
        acc = &acc + &(&c(r, k + s) * &g(&seed, k + t));
    }
    Ok(lv(acc))
}

fn chgb_r(a: &Assignment) -> Ev {
    let (n, s, t, r, seed) = (
        a.int("n"),
        a.int("s"),
        a.int("t"),
        a.int("r"),
        a.seed("seed"),
    );
    let mut acc = Rational::zero();
    for k in 1..=n {
        acc = &acc + &(&c(r - 1, k + s) * &g(&seed, k + t + 2));
    }
    acc = &acc + &(&c(r - 1, s) * &g(&seed, t + 1));
    acc = &acc - &(&c(r - 1, n + s) * &g(&seed, n + t + 1));
    Ok(lv(acc))
}

fn chgx_l(a: &Assignment) -> Ev {
    let (n, s, r, x) = (a.int("n"), a.int("s"), a.half("r"), a.rat("x"));
    let mut acc = Rational::zero();
    for k in 1..=n {
        acc = &acc + &(&cb(&r, k + s)? * &powr(&x, k, "x^k")?);
    }
    Ok(lv(acc))
}

fn chgx_r(a: &Assignment) -> Ev {
    let (n, s, r, x) = (a.int("n"), a.int("s"), a.half("r"), a.rat("x"));
    let rm1 = &r - 1;
    let mut acc = Rational::zero();
    for k in 1..=n {
        let xk1 = &powr(&x, k, "x^k")? * &(&Rational::one() + &x);
        acc = &acc + &(&xk1 * &cb(&rm1, k + s)?);
    }
    acc = &acc + &(&x * &cb(&rm1, s)?);
    acc = &acc - &(&powr(&x, n + 1, "x^{n+1}")? * &cb(&rm1, n + s)?);
    Ok(lv(acc))
}

fn chgs_l(a: &Assignment) -> Ev {
    let (n, s, t, r, seed) = (
        a.int("n"),
        a.int("s"),
        a.int("t"),
        a.int("r"),
        a.seed("seed"),
    );
    let mut acc = Rational::zero();
    for k in 1..=n {
        let w = &c(r, k + s) * &(&hq(r - k - s)? - &hq(k + s)?);
        acc = &acc + &(&w * &g(&seed, k + t));
    }
    Ok(lv(acc))
}

fn chgs_r(a: &Assignment) -> Ev {
    let (n, s, t, r, seed) = (
        a.int("n"),
        a.int("s"),
        a.int("t"),
        a.int("r"),
        a.seed("seed"),
    );
    let mut acc = Rational::zero();
    for k in 1..=n {
        let w = &c(r - 1, k + s) * &(&hq(r - 1 - k - s)? - &hq(k + s)?);
        acc = &acc + &(&w * &g(&seed, k + t + 2));
    }
    acc = &acc + &(&(&c(r - 1, s) * &(&hq(r - 1 - s)? - &hq(s)?)) * &g(&seed, t + 1));
    acc = &acc
        - &(&(&c(r - 1, n + s) * &(&hq(r - 1 - n - s)? - &hq(n + s)?))
            * &g(&seed, n + t + 1));
    Ok(lv(acc))
}

fn cg3_l(a: &Assignment) -> Ev {
    let (n, s, t, r, seed) = (
        a.int("n"),
        a.int("s"),
        a.int("t"),
        a.int("r"),
        a.seed("seed"),
    );
    let mut acc = Rational::zero();
    for k in 1..=n {
        acc = &acc + &(&dcb_int(r, k + s) * &g(&seed, 3 * k + t));
    }
    Ok(lv(acc))
}

fn cg3_r(a: &Assignment) -> Ev {
    let (n, s, t, r, seed) = (
        a.int("n"),
        a.int("s"),
        a.int("t"),
        a.int("r"),
        a.seed("seed"),
    );
    let mut acc = Rational::zero();
    for k in 1..=n {
        acc = &acc + &(&(&q(2) * &dcb_int(r - 1, k + s)) * &g(&seed, 3 * k + t + 2));
    }
    acc = &acc + &(&dcb_int(r - 1, s) * &g(&seed, t + 3));
    acc = &acc - &(&dcb_int(r - 1, n + s) * &g(&seed, 3 * n + t + 3));
    Ok(lv(acc))
}

fn calt_l(a: &Assignment) -> Ev {
    let (n, s, t, r, seed) = (
        a.int("n"),
        a.int("s"),
        a.int("t"),
        a.int("r"),
        a.seed("seed"),
    );
    let mut acc = Rational::zero();
    for k in 1..=n {
        acc = &acc + &(&(&neg1(k) * &dcb_int(r, k + s)) * &g(&seed, k + t));
    }
    Ok(lv(acc))
}

fn calt_r(a: &Assignment) -> Ev {
    let (n, s, t, r, seed) = (
        a.int("n"),
        a.int("s"),
        a.int("t"),
        a.int("r"),
        a.seed("seed"),
    );
    let mut acc = Rational::zero();
    for k in 1..=n {
        acc = &acc + &(&(&neg1(k + 1) * &dcb_int(r - 1, k + s)) * &g(&seed, k + t - 1));
    }
    acc = &acc - &(&dcb_int(r - 1, s) * &g(&seed, t + 1));
    acc = &acc + &(&(&neg1(n) * &dcb_int(r - 1, n + s)) * &g(&seed, n + t + 1));
    Ok(lv(acc))
}

// ---- GOULD -----------------------------------------------------------------

fn gb_l(a: &Assignment) -> Ev {
    let (n, x, y) = (a.int("n"), a.rat("x"), a.rat("y"));
    let mut acc = Rational::zero();
    for k in 0..=n {
        let b = binom_rat(&x, k).map_err(|e| EvalError::Internal(e.to_string()))?;
        acc = &acc + &(&b * &powr(&y, k, "y^k")?);
    }
    Ok(lv(acc))
}

fn gb_r(a: &Assignment) -> Ev {
    let (n, x, y) = (a.int("n"), a.rat("x"), a.rat("y"));
    let mut acc = Rational::zero();
    for k in 0..=n {
        let b = binom_rat(&(&q(n) - &x), k).map_err(|e| EvalError::Internal(e.to_string()))?;
        let pw = &powr(&(&Rational::one() + &y), n - k, "(1+y)^{n-k}")?
            * &powr(&y, k, "y^k")?;
        acc = &acc + &(&(&neg1(k) * &b) * &pw);
    }
    Ok(lv(acc))
}

fn gg_l(a: &Assignment) -> Ev {
    let (n, t, x, seed) = (a.int("n"), a.int("t"), a.half("x"), a.seed("seed"));
    let mut acc = Rational::zero();
    for k in 0..=n {
        acc = &acc + &(&cb(&x, k)? * &g(&seed, k + t));
    }
    Ok(lv(acc))
}

fn gg_r(a: &Assignment) -> Ev {
    let (n, t, x, seed) = (a.int("n"), a.int("t"), a.half("x"), a.seed("seed"));
    let nx = &HalfInt::from_int(n) - &x;
    let mut acc = Rational::zero();
    for k in 0..=n {
        acc = &acc + &(&(&neg1(k) * &cb(&nx, k)?) * &g(&seed, 2 * n - k + t));
    }
    Ok(lv(acc))
}

fn gh_l(a: &Assignment) -> Ev {
    let (n, t, x, seed) = (a.int("n"), a.int("t"), a.half("x"), a.seed("seed"));
    let mut acc = Rational::zero();
    for k in 0..=n {
        acc = &acc + &(&dcb(&x, k) * &g(&seed, k + t));
    }
    Ok(lv(acc))
}

fn gh_r(a: &Assignment) -> Ev {
    let (n, t, x, seed) = (a.int("n"), a.int("t"), a.half("x"), a.seed("seed"));
    let nx = &HalfInt::from_int(n) - &x;
    let mut acc = Rational::zero();
    for k in 0..=n {
        acc = &acc + &(&(&neg1(k) * &dcb(&nx, k)) * &g(&seed, 2 * n - k + t));
    }
    Ok(lv(acc))
}

fn go_l(a: &Assignment) -> Ev {
    let (n, t, seed) = (a.int("n"), a.int("t"), a.seed("seed"));
    let mut acc = Rational::zero();
    for k in 0..=n {
        acc = &acc + &(&(&(&neg1(k) * &p2(-2 * k)) * &ov(k + 1)?) * &g(&seed, k + t));
    }
    Ok(lv(acc))
}

fn go_r(a: &Assignment) -> Ev {
    let (n, t, seed) = (a.int("n"), a.int("t"), a.seed("seed"));
    let mut acc = Rational::zero();
    for k in 0..=n {
        let w = &(&(&neg1(k + 1) * &c(2 * k, k)) * &p2(-(2 * k + 1))) * &invc(n, k)?;
        acc = &acc + &(&(&w * &(&ov(n + 1)? - &ov(n - k)?)) * &g(&seed, 2 * n - k + t));
    }
    Ok(lv(&q(2 * n + 1) * &acc))
}

fn gc_l(a: &Assignment) -> Ev {
    let (n, t, x, seed) = (a.int("n"), a.int("t"), a.half("x"), a.seed("seed"));
    let mut acc = Rational::zero();
    for k in 0..=n {
        let tail = &g(&seed, 2 * k + t) - &neg1(k);
        acc = &acc + &(&(&dcb(&x, k) * &g(&seed, k + t)) * &tail);
    }
    Ok(lv(acc))
}

fn gc_r(a: &Assignment) -> Ev {
    let (n, t, x, seed) = (a.int("n"), a.int("t"), a.half("x"), a.seed("seed"));
    let nx = &HalfInt::from_int(n) - &x;
    let mut acc = Rational::zero();
    for k in 0..=n {
        let w = &(&neg1(k) * &p2(n - k)) * &dcb(&nx, k);
        acc = &acc + &(&w * &g(&seed, 2 * n + k + t));
    }
    Ok(lv(acc))
}

fn g2_rhs_weight(b: &HalfInt, n: i64, k: i64) -> Ev {
    let hb = hlv(b)?;
    let hnb = hlv(&(&HalfInt::from_int(n) - b))?;
    let hbnk = hlv(&(&(b - n) + k))?;
    Ok(&(&hb + &hnb) - &hbnk)
}

fn g2b_l(a: &Assignment) -> Ev {
    let (n, b, x) = (a.int("n"), a.half("b"), a.rat("x"));
    let nb = &HalfInt::from_int(n) - &b;
    let mut acc = LogValue::zero();
    for k in 0..=n {
        let kb = &HalfInt::from_int(k) - &b;
        let h = hlv(&kb)?;
        let pw = powr(&(&Rational::one() + &x), k, "(1+x)^k")?;
        acc = &acc + &h.scale(&(&(&neg1(n - k) * &cbh(&nb, &kb)?) * &pw));
    }
    Ok(acc)
}

fn g2b_r(a: &Assignment) -> Ev {
    let (n, b, x) = (a.int("n"), a.half("b"), a.rat("x"));
    let mut acc = LogValue::zero();
    for k in 0..=n {
        let w = g2_rhs_weight(&b, n, k)?;
        let coeff = &cbh(&b, &HalfInt::from_int(n - k))? * &powr(&x, k, "x^k")?;
        acc = &acc + &w.scale(&coeff);
    }
    Ok(acc)
}

fn g2f_l(a: &Assignment) -> Ev {
    let (n, b) = (a.int("n"), a.half("b"));
    let nb = &HalfInt::from_int(n) - &b;
    let mut acc = LogValue::zero();
    for k in 0..=n {
        let kb = &HalfInt::from_int(k) - &b;
        let h = hlv(&kb)?;
        acc = &acc + &h.scale(&(&(&neg1(n - k) * &cbh(&nb, &kb)?) * &f(2 * k)));
    }
    Ok(acc)
}

fn g2f_r(a: &Assignment) -> Ev {
    let (n, b) = (a.int("n"), a.half("b"));
    let mut acc = LogValue::zero();
    for k in 0..=n {
        let w = g2_rhs_weight(&b, n, k)?;
        acc = &acc + &w.scale(&(&cbh(&b, &HalfInt::from_int(n - k))? * &f(k)));
    }
    Ok(acc)
}

fn g2g_l(a: &Assignment) -> Ev {
    let (n, b, t, seed) = (a.int("n"), a.half("b"), a.int("t"), a.seed("seed"));
    let nb = &HalfInt::from_int(n) - &b;
    let mut acc = LogValue::zero();
    for k in 0..=n {
        let kb = &HalfInt::from_int(k) - &b;
        let h = hlv(&kb)?;
        acc = &acc + &h.scale(&(&(&neg1(n - k) * &cbh(&nb, &kb)?) * &g(&seed, 2 * k + t)));
    }
    Ok(acc)
}

fn g2g_r(a: &Assignment) -> Ev {
    let (n, b, t, seed) = (a.int("n"), a.half("b"), a.int("t"), a.seed("seed"));
    let mut acc = LogValue::zero();
    for k in 0..=n {
        let w = g2_rhs_weight(&b, n, k)?;
        acc = &acc
            + &w.scale(&(&cbh(&b, &HalfInt::from_int(n - k))? * &g(&seed, k + t)));
    }
    Ok(acc)
}

fn g2a_l(a: &Assignment) -> Ev {
    let (n, b, t, seed) = (a.int("n"), a.half("b"), a.int("t"), a.seed("seed"));
    let nb = &HalfInt::from_int(n) - &b;
    let mut acc = LogValue::zero();
    for k in 0..=n {
        let kb = &HalfInt::from_int(k) - &b;
        let h = hlv(&kb)?;
        acc = &acc + &h.scale(&(&(&neg1(n - k) * &cbh(&nb, &kb)?) * &g(&seed, k + t)));
    }
    Ok(acc)
}

fn g2a_r(a: &Assignment) -> Ev {
    let (n, b, t, seed) = (a.int("n"), a.half("b"), a.int("t"), a.seed("seed"));
    let mut acc = LogValue::zero();
    for k in 0..=n {
        let w = g2_rhs_weight(&b, n, k)?;
        let coeff = &(&neg1(k) * &cbh(&b, &HalfInt::from_int(n - k))?) * &g(&seed, k + t);
        acc = &acc + &w.scale(&coeff);
    }
    Ok(acc)
}

fn g23_l(a: &Assignment) -> Ev {
    let (n, b, t, seed) = (a.int("n"), a.half("b"), a.int("t"), a.seed("seed"));
    let nb = &HalfInt::from_int(n) - &b;
    let mut acc = LogValue::zero();
    for k in 0..=n {
        let kb = &HalfInt::from_int(k) - &b;
        let h = hlv(&kb)?;
        let coeff = &(&(&neg1(n - k) * &p2(k)) * &cbh(&nb, &kb)?) * &g(&seed, 2 * k + t);
        acc = &acc + &h.scale(&coeff);
    }
    Ok(acc)
}

fn g23_r(a: &Assignment) -> Ev {
    let (n, b, t, seed) = (a.int("n"), a.half("b"), a.int("t"), a.seed("seed"));
    let mut acc = LogValue::zero();
    for k in 0..=n {
        let w = g2_rhs_weight(&b, n, k)?;
        acc = &acc
            + &w.scale(&(&cbh(&b, &HalfInt::from_int(n - k))? * &g(&seed, 3 * k + t)));
    }
    Ok(acc)
}

fn g23a_l(a: &Assignment) -> Ev {
    let (n, b, t, seed) = (a.int("n"), a.half("b"), a.int("t"), a.seed("seed"));
    let nb = &HalfInt::from_int(n) - &b;
    let mut acc = LogValue::zero();
    for k in 0..=n {
        let kb = &HalfInt::from_int(k) - &b;
        let h = hlv(&kb)?;
        let coeff = &(&(&neg1(n - k + 1) * &p2(k)) * &cbh(&nb, &kb)?) * &g(&seed, k + t);
        acc = &acc + &h.scale(&coeff);
    }
    Ok(acc)
}

fn g23a_r(a: &Assignment) -> Ev {
    let (n, b, t, seed) = (a.int("n"), a.half("b"), a.int("t"), a.seed("seed"));
    let mut acc = LogValue::zero();
    for k in 0..=n {
        let w = g2_rhs_weight(&b, n, k)?;
        let coeff =
            &(&neg1(k) * &cbh(&b, &HalfInt::from_int(n - k))?) * &g(&seed, 3 * k + t);
        acc = &acc + &w.scale(&coeff);
    }
    Ok(acc)
}

// ---- BT-BOYAD --------------------------------------------------------------

fn ltp(t: i64, e: i64) -> Rv {
    powr(&l(t), e, "L_t^e")
}

fn tau(seed: &GibonacciSeed, t: i64, r: i64, k: i64) -> Rational {
    &(&Rational::from(&seed.g0) * &l(t * k - r)) - &g(seed, t * k - r)
}

fn btg_l(a: &Assignment) -> Ev {
    let (n, r, t, seed) = (a.int("n"), a.int("r"), a.int("t"), a.seed("seed"));
    let mut acc = Rational::zero();
    for k in 0..=n {
        let term = &(&neg1(k) * &c(n, k)) * &(&g(&seed, t * k + r) * &ltp(t, -k)?);
        acc = &acc + &term;
    }
    Ok(lv(acc))
}

fn btg_r(a: &Assignment) -> Ev {
    let (n, r, t, seed) = (a.int("n"), a.int("r"), a.int("t"), a.seed("seed"));
    Ok(lv(&(&neg1(r) * &ltp(t, -n)?) * &tau(&seed, t, r, n)))
}

fn bhg_l(a: &Assignment) -> Ev {
    let (n, r, t, seed) = (a.int("n"), a.int("r"), a.int("t"), a.seed("seed"));
    let mut acc = Rational::zero();
    for k in 0..=n {
        acc = &acc
            + &(&(&(&neg1(k) * &c(n, k)) * &ltp(t, n - k)?)
                * &(&hq(k)? * &g(&seed, t * k + r)));
    }
    Ok(lv(acc))
}

fn bhg_r(a: &Assignment) -> Ev {
    let (n, r, t, seed) = (a.int("n"), a.int("r"), a.int("t"), a.seed("seed"));
    let mut acc = &(&neg1(r) * &hq(n)?) * &tau(&seed, t, r, n);
    for k in 0..=n - 1 {
        let term = &(&ltp(t, n - k)? * &inv(q(n - k), "n-k")?) * &tau(&seed, t, r, k);
        acc = &acc - &(&neg1(r) * &term);
    }
    Ok(lv(acc))
}

fn bhf_l(a: &Assignment) -> Ev {
    let (n, r, t) = (a.int("n"), a.int("r"), a.int("t"));
    let mut acc = Rational::zero();
    for k in 0..=n {
        acc = &acc
            + &(&(&(&neg1(k) * &c(n, k)) * &ltp(t, n - k)?) * &(&hq(k)? * &f(t * k + r)));
    }
    Ok(lv(acc))
}

fn bhf_r(a: &Assignment) -> Ev {
    let (n, r, t) = (a.int("n"), a.int("r"), a.int("t"));
    let mut acc = &(&neg1(r + 1) * &hq(n)?) * &f(t * n - r);
    for k in 0..=n - 1 {
        acc = &acc
            + &(&neg1(r) * &(&(&ltp(t, n - k)? * &f(t * k - r)) * &inv(q(n - k), "n-k")?));
    }
    Ok(lv(acc))
}

fn bhl_l(a: &Assignment) -> Ev {
    let (n, r, t) = (a.int("n"), a.int("r"), a.int("t"));
    let mut acc = Rational::zero();
    for k in 0..=n {
        acc = &acc
            + &(&(&(&neg1(k) * &c(n, k)) * &ltp(t, n - k)?) * &(&hq(k)? * &l(t * k + r)));
    }
    Ok(lv(acc))
}

fn bhl_r(a: &Assignment) -> Ev {
    let (n, r, t) = (a.int("n"), a.int("r"), a.int("t"));
    let mut acc = &(&neg1(r) * &hq(n)?) * &l(t * n - r);
    for k in 0..=n - 1 {
        acc = &acc
            - &(&neg1(r) * &(&(&ltp(t, n - k)? * &l(t * k - r)) * &inv(q(n - k), "n-k")?));
    }
    Ok(lv(acc))
}

fn bhfp_l(a: &Assignment) -> Ev {
    let n = a.int("n");
    let mut acc = Rational::zero();
    for k in 0..=n {
        acc = &acc + &(&(&neg1(k) * &c(n, k)) * &(&hq(k)? * &f(k)));
    }
    Ok(lv(acc))
}

fn bhfp_r(a: &Assignment) -> Ev {
    let n = a.int("n");
    let mut acc = -(&hq(n)? * &f(n));
    for k in 0..=n - 1 {
        acc = &acc + &(&f(k) * &inv(q(n - k), "n-k")?);
    }
    Ok(lv(acc))
}

fn bhlp_l(a: &Assignment) -> Ev {
    let n = a.int("n");
    let mut acc = Rational::zero();
    for k in 0..=n {
        acc = &acc + &(&(&neg1(k) * &c(n, k)) * &(&hq(k)? * &l(k)));
    }
    Ok(lv(acc))
}

fn bhlp_r(a: &Assignment) -> Ev {
    let n = a.int("n");
    let mut acc = &hq(n)? * &l(n);
    for k in 0..=n - 1 {
        acc = &acc - &(&l(k) * &inv(q(n - k), "n-k")?);
    }
    Ok(lv(acc))
}

fn brev_l(a: &Assignment) -> Ev {
    let (n, r, t, seed) = (a.int("n"), a.int("r"), a.int("t"), a.seed("seed"));
    let mut acc = Rational::zero();
    for k in 0..=n {
        let term = &(&(&neg1(k + r) * &c(n, k)) * &(&hq(k)? * &ltp(t, n - k)?))
            * &tau(&seed, t, r, k);
        acc = &acc + &term;
    }
    Ok(lv(acc))
}

fn brev_r(a: &Assignment) -> Ev {
    let (n, r, t, seed) = (a.int("n"), a.int("r"), a.int("t"), a.seed("seed"));
    let mut acc = &hq(n)? * &g(&seed, t * n + r);
    for k in 0..=n - 1 {
        acc = &acc
            - &(&(&ltp(t, n - k)? * &g(&seed, t * k + r)) * &inv(q(n - k), "n-k")?);
    }
    Ok(lv(acc))
}

fn brevf_l(a: &Assignment) -> Ev {
    let (n, r, t) = (a.int("n"), a.int("r"), a.int("t"));
    let mut acc = Rational::zero();
    for k in 0..=n {
        acc = &acc
            + &(&(&(&neg1(k + r + 1) * &c(n, k)) * &ltp(t, n - k)?)
                * &(&hq(k)? * &f(t * k - r)));
    }
    Ok(lv(acc))
}

fn brevf_r(a: &Assignment) -> Ev {
    let (n, r, t) = (a.int("n"), a.int("r"), a.int("t"));
    let mut acc = &hq(n)? * &f(t * n + r);
    for k in 0..=n - 1 {
        acc = &acc + &(-(&(&ltp(t, n - k)? * &f(t * k + r)) * &inv(q(n - k), "n-k")?));
    }
    Ok(lv(acc))
}

fn brevl_l(a: &Assignment) -> Ev {
    let (n, r, t) = (a.int("n"), a.int("r"), a.int("t"));
    let mut acc = Rational::zero();
    for k in 0..=n {
        acc = &acc
            + &(&(&(&neg1(k + r) * &c(n, k)) * &ltp(t, n - k)?)
                * &(&hq(k)? * &l(t * k - r)));
    }
    Ok(lv(acc))
}

fn brevl_r(a: &Assignment) -> Ev {
    let (n, r, t) = (a.int("n"), a.int("r"), a.int("t"));
    let mut acc = &hq(n)? * &l(t * n + r);
    for k in 0..=n - 1 {
        acc = &acc - &(&(&ltp(t, n - k)? * &l(t * k + r)) * &inv(q(n - k), "n-k")?);
    }
    Ok(lv(acc))
}

fn hm(k: i64, m: &HalfInt) -> Ev {
    hlv(&(&HalfInt::from_int(k) + m))
}

fn bt2_l(a: &Assignment) -> Ev {
    let (n, m, seed) = (a.int("n"), a.half("m"), a.seed("seed"));
    let mut acc = LogValue::zero();
    for k in 0..=n {
        let km = &q(k) + &m.to_rational();
        let coeff = &(&(&neg1(k + 1) * &c(n, k)) * &(&m.to_rational() * &inv(km, "k+m")?))
            * &g(&seed, k);
        acc = &acc + &hm(k, &m)?.scale(&coeff);
    }
    Ok(acc)
}

fn bt2_r(a: &Assignment) -> Ev {
    let (n, m, seed) = (a.int("n"), a.half("m"), a.seed("seed"));
    let mut acc = LogValue::zero();
    for k in 0..=n {
        let ib = inv(
            cbh(&(&HalfInt::from_int(k) + &m), &m)?,
            &format!("C(k+m, m) at k={k}"),
        )?;
        let coeff = &(&(&neg1(k) * &c(n, k)) * &ib) * &g(&seed, n - 2 * k);
        let hdiff = &hm(k, &m)? - &hlv(&HalfInt::from_int(k))?;
        acc = &acc + &hdiff.scale(&coeff);
    }
    Ok(acc)
}

fn bt2s_l(a: &Assignment) -> Ev {
    let (n, m, seed) = (a.int("n"), a.half("m"), a.seed("seed"));
    let mut acc = LogValue::zero();
    for k in 0..=n {
        let ib = inv(
            cbh(&(&HalfInt::from_int(k) + &m), &m)?,
            &format!("C(k+m, m) at k={k}"),
        )?;
        let coeff = &(&(&neg1(k + 1) * &c(n, k)) * &ib) * &g(&seed, k);
        let hdiff = &hm(k, &m)? - &hlv(&HalfInt::from_int(k))?;
        acc = &acc + &hdiff.scale(&coeff);
    }
    Ok(acc)
}

fn bt2s_r(a: &Assignment) -> Ev {
    let (n, m, seed) = (a.int("n"), a.half("m"), a.seed("seed"));
    let mut acc = LogValue::zero();
    for k in 0..=n {
        let km = &q(k) + &m.to_rational();
        let coeff = &(&(&neg1(k) * &c(n, k)) * &(&m.to_rational() * &inv(km, "k+m")?))
            * &g(&seed, n - 2 * k);
        acc = &acc + &hm(k, &m)?.scale(&coeff);
    }
    Ok(acc)
}

fn bt2a_l(a: &Assignment) -> Ev {
    let (n, seed) = (a.int("n"), a.seed("seed"));
    let mut acc = Rational::zero();
    for k in 0..=n {
        let coeff = &(&(&neg1(k + 1) * &c(n, k)) * &g(&seed, k)) * &inv(q(k + 1), "k+1")?;
        acc = &acc + &(&coeff * &hq(k + 1)?);
    }
    Ok(lv(acc))
}

fn bt2a_r(a: &Assignment) -> Ev {
    let (n, seed) = (a.int("n"), a.seed("seed"));
    let mut acc = Rational::zero();
    for k in 0..=n {
        let d = inv(&q(k + 1) * &q(k + 1), "(k+1)^2")?;
        acc = &acc + &(&(&(&neg1(k) * &c(n, k)) * &g(&seed, n - 2 * k)) * &d);
    }
    Ok(lv(acc))
}

fn bt2b_l(a: &Assignment) -> Ev {
    let (n, seed) = (a.int("n"), a.seed("seed"));
    let mut acc = Rational::zero();
    for k in 0..=n {
        let d = inv(&q(k + 1) * &q(k + 1), "(k+1)^2")?;
        acc = &acc + &(&(&(&neg1(k + 1) * &c(n, k)) * &g(&seed, k)) * &d);
    }
    Ok(lv(acc))
}

fn bt2b_r(a: &Assignment) -> Ev {
    let (n, seed) = (a.int("n"), a.seed("seed"));
    let mut acc = Rational::zero();
    for k in 0..=n {
        let coeff =
            &(&(&neg1(k) * &c(n, k)) * &g(&seed, n - 2 * k)) * &inv(q(k + 1), "k+1")?;
        acc = &acc + &(&coeff * &hq(k + 1)?);
    }
    Ok(lv(acc))
}

fn p1a_lhs(a: &Assignment) -> Ev {
    let (n, seed) = (a.int("n"), a.seed("seed"));
    let mut acc = LogValue::zero();
    for k in 0..=n {
        let coeff = &(&(&q(2) * &neg1(k + 1)) * &c(n, k))
            * &(&inv(q(2 * k - 1), "2k-1")? * &g(&seed, k));
        let core = &LogValue::ln2(Rational::one()) - &lv(ov(k)?);
        acc = &acc + &core.scale(&coeff);
    }
    Ok(acc)
}

fn p1a_rhs(a: &Assignment) -> Ev {
    let (n, seed) = (a.int("n"), a.seed("seed"));
    let mut acc = LogValue::zero();
    for k in 0..=n {
        let coeff = &(&(&neg1(k) * &p2(2 * k)) * &(&c(n, k) * &invc(2 * k, k)?))
            * &g(&seed, n - 2 * k);
        let core = &lv(&(&ov(k)? + &ov(k)?) - &hq(k)?)
            - &LogValue::ln2(Rational::int(2));
        acc = &acc + &core.scale(&coeff);
    }
    Ok(acc)
}

fn p1b_lhs(a: &Assignment) -> Ev {
    let (n, seed) = (a.int("n"), a.seed("seed"));
    let mut acc = LogValue::zero();
    for k in 0..=n {
        let coeff = &(&(&neg1(k + 1) * &p2(2 * k)) * &(&c(n, k) * &invc(2 * k, k)?))
            * &g(&seed, k);
        let core = &lv(&(&ov(k)? + &ov(k)?) - &hq(k)?)
            - &LogValue::ln2(Rational::int(2));
        acc = &acc + &core.scale(&coeff);
    }
    Ok(acc)
}

fn p1b_rhs(a: &Assignment) -> Ev {
    let (n, seed) = (a.int("n"), a.seed("seed"));
    let mut acc = LogValue::zero();
    for k in 0..=n {
        let coeff = &(&(&q(2) * &neg1(k + 1)) * &c(n, k))
            * &(&inv(q(2 * k - 1), "2k-1")? * &g(&seed, n - 2 * k));
        let core = &lv(ov(k)?) - &LogValue::ln2(Rational::one());
        acc = &acc + &core.scale(&coeff);
    }
    Ok(acc)
}

fn ir1_l(a: &Assignment) -> Ev {
    let (n, seed) = (a.int("n"), a.seed("seed"));
    let mut acc = Rational::zero();
    for k in 0..=n {
        acc = &acc
            + &(&(&neg1(k + 1) * &c(n, k)) * &(&g(&seed, k) * &inv(q(2 * k - 1), "2k-1")?));
    }
    Ok(lv(acc))
}

fn ir1_r(a: &Assignment) -> Ev {
    let (n, seed) = (a.int("n"), a.seed("seed"));
    let mut acc = Rational::zero();
    for k in 0..=n {
        acc = &acc
            + &(&(&(&neg1(k + 1) * &p2(2 * k)) * &(&c(n, k) * &invc(2 * k, k)?))
                * &g(&seed, n - 2 * k));
    }
    Ok(lv(acc))
}

fn ir2_l(a: &Assignment) -> Ev {
    let (n, seed) = (a.int("n"), a.seed("seed"));
    let mut acc = Rational::zero();
    for k in 0..=n {
        acc = &acc
            + &(&(&neg1(k + 1) * &c(n, k))
                * &(&(&ov(k)? * &g(&seed, k)) * &inv(q(2 * k - 1), "2k-1")?));
    }
    Ok(lv(acc))
}

fn ir2_r(a: &Assignment) -> Ev {
    let (n, seed) = (a.int("n"), a.seed("seed"));
    let mut acc = Rational::zero();
    for k in 0..=n {
        let core = &hq(k)? - &(&ov(k)? + &ov(k)?);
        acc = &acc
            + &(&(&(&neg1(k) * &p2(2 * k - 1)) * &(&c(n, k) * &invc(2 * k, k)?))
                * &(&core * &g(&seed, n - 2 * k)));
    }
    Ok(lv(acc))
}

fn ir3_l(a: &Assignment) -> Ev {
    let (n, seed) = (a.int("n"), a.seed("seed"));
    let mut acc = Rational::zero();
    for k in 0..=n {
        acc = &acc
            + &(&(&neg1(k) * &c(n, k))
                * &(&g(&seed, n - 2 * k) * &inv(q(2 * k - 1), "2k-1")?));
    }
    Ok(lv(acc))
}

fn ir3_r(a: &Assignment) -> Ev {
    let (n, seed) = (a.int("n"), a.seed("seed"));
    let mut acc = Rational::zero();
    for k in 0..=n {
        acc = &acc
            + &(&(&(&neg1(k) * &p2(2 * k)) * &(&c(n, k) * &invc(2 * k, k)?))
                * &g(&seed, k));
    }
    Ok(lv(acc))
}

fn ir4_l(a: &Assignment) -> Ev {
    let (n, seed) = (a.int("n"), a.seed("seed"));
    let mut acc = Rational::zero();
    for k in 0..=n {
        acc = &acc
            + &(&(&neg1(k + 1) * &c(n, k))
                * &(&(&ov(k)? * &g(&seed, n - 2 * k)) * &inv(q(2 * k - 1), "2k-1")?));
    }
    Ok(lv(acc))
}

fn ir4_r(a: &Assignment) -> Ev {
    let (n, seed) = (a.int("n"), a.seed("seed"));
    let mut acc = Rational::zero();
    for k in 0..=n {
        let core = &(&ov(k)? + &ov(k)?) - &hq(k)?;
        acc = &acc
            + &(&(&(&neg1(k + 1) * &p2(2 * k - 1)) * &(&c(n, k) * &invc(2 * k, k)?))
                * &(&core * &g(&seed, k)));
    }
    Ok(lv(acc))
}

fn bt3_l_o(a: &Assignment) -> Ev {
    let (n, m, seed) = (a.int("n"), a.half("m"), a.seed("seed"));
    let mut acc = LogValue::zero();
    for k in 1..=n {
        let coeff = &(&neg1(k + 1) * &c(n, k)) * &g(&seed, k);
        acc = &acc + &hm(k, &m)?.scale(&coeff);
    }
    Ok(acc)
}

fn bt3_r_o(a: &Assignment) -> Ev {
    let (n, m, seed) = (a.int("n"), a.half("m"), a.seed("seed"));
    let mut acc = hlv(&m)?.scale(&g(&seed, n));
    for k in 1..=n {
        let ib = inv(
            cbh(&(&HalfInt::from_int(k) + &m), &m)?,
            &format!("C(k+m, m) at k={k}"),
        )?;
        let coeff = &(&(&neg1(k + 1) * &c(n, k)) * &ib)
            * &(&g(&seed, n - 2 * k) * &inv(q(k), "k")?);
        acc = &acc + &lv(coeff);
    }
    Ok(acc)
}

fn bt3s_l(a: &Assignment) -> Ev {
    let (n, m, seed) = (a.int("n"), a.half("m"), a.seed("seed"));
    let mut acc = Rational::zero();
    for k in 1..=n {
        let ib = inv(
            cbh(&(&HalfInt::from_int(k) + &m), &m)?,
            &format!("C(k+m, m) at k={k}"),
        )?;
        acc = &acc
            + &(&(&(&neg1(k) * &c(n, k)) * &ib) * &(&g(&seed, k) * &inv(q(k), "k")?));
    }
    Ok(lv(acc))
}

fn bt3s_r(a: &Assignment) -> Ev {
    let (n, m, seed) = (a.int("n"), a.half("m"), a.seed("seed"));
    let mut acc = LogValue::zero();
    for k in 0..=n {
        let coeff = &(&neg1(k) * &c(n, k)) * &g(&seed, n - 2 * k);
        acc = &acc + &hm(k, &m)?.scale(&coeff);
    }
    Ok(acc)
}

fn bt30a_l(a: &Assignment) -> Ev {
    let (n, seed) = (a.int("n"), a.seed("seed"));
    let mut acc = Rational::zero();
    for k in 1..=n {
        acc = &acc + &(&(&neg1(k) * &c(n, k)) * &(&g(&seed, k) * &hq(k)?));
    }
    Ok(lv(acc))
}

fn bt30a_r(a: &Assignment) -> Ev {
    let (n, seed) = (a.int("n"), a.seed("seed"));
    let mut acc = Rational::zero();
    for k in 1..=n {
        acc = &acc
            + &(&(&neg1(k) * &c(n, k)) * &(&g(&seed, n - 2 * k) * &inv(q(k), "k")?));
    }
    Ok(lv(acc))
}

fn bt30b_l(a: &Assignment) -> Ev {
    let (n, seed) = (a.int("n"), a.seed("seed"));
    let mut acc = Rational::zero();
    for k in 1..=n {
        acc = &acc
            + &(&(&neg1(k + 1) * &c(n, k)) * &(&g(&seed, k) * &inv(q(k), "k")?));
    }
    Ok(lv(acc))
}

fn bt30b_r(a: &Assignment) -> Ev {
    let (n, seed) = (a.int("n"), a.seed("seed"));
    let mut acc = Rational::zero();
    for k in 1..=n {
        acc = &acc + &(&(&neg1(k) * &c(n, k)) * &(&g(&seed, n - 2 * k) * &hq(k)?));
    }
    Ok(lv(acc))
}

// ---- BT-GQ -----------------------------------------------------------------

fn half_diff(a: &HalfInt, b: &HalfInt) -> Rv {
    let d = &hlv(a)? - &hlv(b)?;
    if d.is_rational() {
        Ok(d.rat)
    } else {
        Err(EvalError::Internal(format!(
            "H_{{{a}}} - H_{{{b}}} is not rational"
        )))
    }
}

fn inv_cbh(upper: &HalfInt, lower: &HalfInt) -> Rv {
    let v = cbh(upper, lower)?;
    v.inv()
        .map_err(|_| EvalError::Skip(format!("zero binomial C({upper}, {lower})")))
}

fn gqt_l(a: &Assignment) -> Ev {
    let (n, m, r, s, t, seed) = (
        a.int("n"),
        a.half("m"),
        a.int("r"),
        a.int("s"),
        a.int("t"),
        a.seed("seed"),
    );
    let m1 = &m + 1;
    let mut acc = Rational::zero();
    for k in 0..=n {
        let upper = &(&m + 1) + (r + n - k);
        let w = &inv_cbh(&upper, &m1)? * &half_diff(&m1, &upper)?;
        acc = &acc
            + &(&(&(&neg1(k) * &c(n, k)) * &w) * &(&g(&seed, t * k + s) * &ltp(t, -k)?));
    }
    Ok(lv(acc))
}

fn gqt_r(a: &Assignment) -> Ev {
    let (n, m, r, s, t, seed) = (
        a.int("n"),
        a.half("m"),
        a.int("r"),
        a.int("s"),
        a.int("t"),
        a.seed("seed"),
    );
    let r1 = HalfInt::from_int(r + 1);
    let mut acc = Rational::zero();
    for k in 0..=n {
        let upper = &(&m + 1) + (r + n - k);
        let ib = inv_cbh(&upper, &r1)?;
        let tk = &(&neg1(s) * &tau(&seed, t, s, k)) * &ltp(t, -k)?;
        let hd = half_diff(&(&m + (n - k)), &upper)?;
        let w1 = &(&(&m + 1).to_rational() * &inv(q(r + 1), "r+1")?) * &hd;
        let w2 = inv(q(r + 1), "r+1")?;
        acc = &acc + &(&(&(&neg1(n - k) * &c(n, k)) * &ib) * &(&(&w1 + &w2) * &tk));
    }
    Ok(lv(acc))
}

fn gq2t_l(a: &Assignment) -> Ev {
    let (n, m, r, s, t, seed) = (
        a.int("n"),
        a.half("m"),
        a.int("r"),
        a.int("s"),
        a.int("t"),
        a.seed("seed"),
    );
    let m1 = &m + 1;
    let mut acc = Rational::zero();
    for k in 0..=n {
        let upper = &(&m + 1) + (r + n - k);
        let w = &inv_cbh(&upper, &m1)? * &half_diff(&m1, &upper)?;
        let tk = &(&neg1(s) * &tau(&seed, t, s, k)) * &ltp(t, -k)?;
        acc = &acc + &(&(&(&neg1(k) * &c(n, k)) * &w) * &tk);
    }
    Ok(lv(acc))
}

fn gq2t_r(a: &Assignment) -> Ev {
    let (n, m, r, s, t, seed) = (
        a.int("n"),
        a.half("m"),
        a.int("r"),
        a.int("s"),
        a.int("t"),
        a.seed("seed"),
    );
    let r1 = HalfInt::from_int(r + 1);
    let mut acc = Rational::zero();
    for k in 0..=n {
        let upper = &(&m + 1) + (r + n - k);
        let ib = inv_cbh(&upper, &r1)?;
        let gk = &g(&seed, t * k + s) * &ltp(t, -k)?;
        let hd = half_diff(&(&m + (n - k)), &upper)?;
        let w1 = &(&(&m + 1).to_rational() * &inv(q(r + 1), "r+1")?) * &hd;
        let w2 = inv(q(r + 1), "r+1")?;
        acc = &acc + &(&(&(&neg1(n - k) * &c(n, k)) * &ib) * &(&(&w1 + &w2) * &gk));
    }
    Ok(lv(acc))
}

fn gqm0_l(a: &Assignment) -> Ev {
    let (n, r, s, t, seed) = (
        a.int("n"),
        a.int("r"),
        a.int("s"),
        a.int("t"),
        a.seed("seed"),
    );
    let mut acc = Rational::zero();
    for k in 0..=n {
        let d = r + n - k + 1;
        let w = &(&Rational::one() - &hq(d)?) * &inv(q(d), "r+n-k+1")?;
        acc = &acc
            + &(&(&(&neg1(k) * &c(n, k)) * &w) * &(&g(&seed, t * k + s) * &ltp(t, -k)?));
    }
    Ok(lv(acc))
}

fn gqm0_r(a: &Assignment) -> Ev {
    let (n, r, s, t, seed) = (
        a.int("n"),
        a.int("r"),
        a.int("s"),
        a.int("t"),
        a.seed("seed"),
    );
    let mut acc = Rational::zero();
    for k in 0..=n {
        let d = r + n - k + 1;
        let ib = invc(d, r + 1)?;
        let tk = &tau(&seed, t, s, k) * &ltp(t, -k)?;
        let w = &(&hq(n - k)? - &hq(d)?) + &Rational::one();
        acc = &acc + &(&(&(&neg1(n - k - s) * &c(n, k)) * &ib) * &(&w * &tk));
    }
    Ok(lv(&acc * &inv(q(r + 1), "r+1")?))
}

fn gqm0p_l(a: &Assignment) -> Ev {
    let (n, s, t, seed) = (a.int("n"), a.int("s"), a.int("t"), a.seed("seed"));
    let mut acc = Rational::zero();
    for k in 0..=n {
        let d = n - k + 1;
        let w = &(&Rational::one() - &hq(d)?) * &inv(q(d), "n-k+1")?;
        acc = &acc
            + &(&(&(&neg1(k) * &c(n, k)) * &w) * &(&g(&seed, t * k + s) * &ltp(t, -k)?));
    }
    Ok(lv(acc))
}

fn gqm0p_r(a: &Assignment) -> Ev {
    let (n, s, t, seed) = (a.int("n"), a.int("s"), a.int("t"), a.seed("seed"));
    let mut acc = Rational::zero();
    for k in 0..=n {
        let d = n - k + 1;
        let mixed = &(&Rational::from(&seed.g0) * &l(t * k + s)) - &g(&seed, t * k - s);
        let per_l = &mixed * &ltp(t, -k)?;
        let w = &inv(q(d), "n-k+1")? - &inv(&q(d) * &q(d), "(n-k+1)^2")?;
        acc = &acc + &(&(&(&neg1(n - k - s) * &c(n, k)) * &w) * &per_l);
    }
    Ok(lv(acc))
}

fn gqodd_l(a: &Assignment) -> Ev {
    let (n, r, s, t, seed) = (
        a.int("n"),
        a.int("r"),
        a.int("s"),
        a.int("t"),
        a.seed("seed"),
    );
    let mut acc = Rational::zero();
    for k in 0..=n {
        let p = r + n - k;
        let w = &(&invc(2 * p, p)? * &p2(2 * p + 1)) * &ov(p)?;
        acc = &acc
            + &(&(&(&neg1(k + 1) * &c(n, k)) * &w)
                * &(&g(&seed, t * k + s) * &ltp(t, -k)?));
    }
    Ok(lv(acc))
}

fn gqodd_r(a: &Assignment) -> Ev {
    let (n, r, s, t, seed) = (
        a.int("n"),
        a.int("r"),
        a.int("s"),
        a.int("t"),
        a.seed("seed"),
    );
    let mut acc = Rational::zero();
    for k in 0..=n - 1 {
        let p = r + n - k;
        let num = &c(n, k) * &c(2 * (n - k - 1), n - k - 1);
        let den = &invc(2 * p, r + 1)? * &invc(p, r + 1)?;
        let tk = &tau(&seed, t, s, k) * &ltp(t, -k)?;
        let w = &(&ov(n - k - 1)? - &ov(p)?) + &Rational::one();
        acc = &acc + &(&(&(&neg1(n - k + 1 + s) * &num) * &den) * &(&w * &tk));
    }
    acc = &acc * &(&p2(2 * (r + 1)) * &inv(q(r + 1), "r+1")?);
    let tail = &(&(&neg1(s) * &inv(&q(r + 1) * &q(r + 1), "(r+1)^2")?) * &c(2 * r, r))
        * &(&(&Rational::one() - &ov(r)?) * &(&tau(&seed, t, s, n) * &ltp(t, -n)?));
    Ok(lv(&acc + &tail))
}

fn gqoddp_l(a: &Assignment) -> Ev {
    let (n, s, t, seed) = (a.int("n"), a.int("s"), a.int("t"), a.seed("seed"));
    let mut acc = Rational::zero();
    for k in 0..=n {
        let w = &(&p2(2 * (n - k)) * &invc(2 * n - 2 * k, n - k)?) * &ov(n - k)?;
        acc = &acc
            + &(&(&(&neg1(k + 1) * &c(n, k)) * &w)
                * &(&g(&seed, t * k + s) * &ltp(t, -k)?));
    }
    Ok(lv(acc))
}

fn gqoddp_r(a: &Assignment) -> Ev {
    let (n, s, t, seed) = (a.int("n"), a.int("s"), a.int("t"), a.seed("seed"));
    let mut acc = Rational::zero();
    for k in 0..=n - 1 {
        let d = n - k;
        let num = &c(n, k) * &c(2 * (n - k - 1), n - k - 1);
        let tk = &tau(&seed, t, s, k) * &ltp(t, -k)?;
        let w = &inv(&q(d) * &q(d), "(n-k)^2")?
            - &inv(&(&q(d) * &q(d)) * &q(2 * n - 2 * k - 1), "(n-k)^2(2n-2k-1)")?;
        acc = &acc + &(&(&neg1(n - k + s + 1) * &num) * &(&w * &tk));
    }
    Ok(lv(acc))
}

fn gq2m0_l(a: &Assignment) -> Ev {
    let (n, r, s, t, seed) = (
        a.int("n"),
        a.int("r"),
        a.int("s"),
        a.int("t"),
        a.seed("seed"),
    );
    let mut acc = Rational::zero();
    for k in 0..=n {
        let d = r + n - k + 1;
        let w = &(&Rational::one() - &hq(d)?) * &inv(q(d), "r+n-k+1")?;
        let tk = &tau(&seed, t, s, k) * &ltp(t, -k)?;
        acc = &acc + &(&(&(&neg1(k - s) * &c(n, k)) * &w) * &tk);
    }
    Ok(lv(acc))
}

fn gq2m0_r(a: &Assignment) -> Ev {
    let (n, r, s, t, seed) = (
        a.int("n"),
        a.int("r"),
        a.int("s"),
        a.int("t"),
        a.seed("seed"),
    );
    let mut acc = Rational::zero();
    for k in 0..=n {
        let d = r + n - k + 1;
        let ib = invc(d, r + 1)?;
        let gk = &g(&seed, t * k + s) * &ltp(t, -k)?;
        let w = &(&hq(n - k)? - &hq(d)?) + &Rational::one();
        acc = &acc + &(&(&(&neg1(n - k) * &c(n, k)) * &ib) * &(&w * &gk));
    }
    Ok(lv(&acc * &inv(q(r + 1), "r+1")?))
}

fn gq2m0p_l(a: &Assignment) -> Ev {
    let (n, s, t, seed) = (a.int("n"), a.int("s"), a.int("t"), a.seed("seed"));
    let mut acc = Rational::zero();
    for k in 0..=n {
        let d = n - k + 1;
        let w = &(&Rational::one() - &hq(d)?) * &inv(q(d), "n-k+1")?;
        let mixed = &(&Rational::from(&seed.g0) * &l(t * k + s)) - &g(&seed, t * k - s);
        acc = &acc + &(&(&(&neg1(k) * &c(n, k)) * &w) * &(&mixed * &ltp(t, -k)?));
    }
    Ok(lv(acc))
}

fn gq2m0p_r(a: &Assignment) -> Ev {
    let (n, s, t, seed) = (a.int("n"), a.int("s"), a.int("t"), a.seed("seed"));
    let mut acc = Rational::zero();
    for k in 0..=n {
        let d = n - k + 1;
        let gk = &g(&seed, t * k + s) * &ltp(t, -k)?;
        let w = &inv(q(d), "n-k+1")? - &inv(&q(d) * &q(d), "(n-k+1)^2")?;
        acc = &acc + &(&(&(&neg1(n - k - s) * &c(n, k)) * &w) * &gk);
    }
    Ok(lv(acc))
}

fn gq2odd_l(a: &Assignment) -> Ev {
    let (n, r, s, t, seed) = (
        a.int("n"),
        a.int("r"),
        a.int("s"),
        a.int("t"),
        a.seed("seed"),
    );
    let mut acc = Rational::zero();
    for k in 0..=n {
        let p = r + n - k;
        let w = &(&invc(2 * p, p)? * &p2(2 * p + 1)) * &ov(p)?;
        let tk = &tau(&seed, t, s, k) * &ltp(t, -k)?;
        acc = &acc + &(&(&(&neg1(k + 1 - s) * &c(n, k)) * &w) * &tk);
    }
    Ok(lv(acc))
}

fn gq2odd_r(a: &Assignment) -> Ev {
    let (n, r, s, t, seed) = (
        a.int("n"),
        a.int("r"),
        a.int("s"),
        a.int("t"),
        a.seed("seed"),
    );
    let mut acc = Rational::zero();
    for k in 0..=n - 1 {
        let p = r + n - k;
        let num = &c(n, k) * &c(2 * (n - k - 1), n - k - 1);
        let den = &invc(2 * p, r + 1)? * &invc(p, r + 1)?;
        let gk = &g(&seed, t * k + s) * &ltp(t, -k)?;
        let w = &(&ov(n - k - 1)? - &ov(p)?) + &Rational::one();
        acc = &acc + &(&(&(&neg1(n - k + 1) * &num) * &den) * &(&w * &gk));
    }
    acc = &acc * &(&p2(2 * (r + 1)) * &inv(q(r + 1), "r+1")?);
    let tail = &(&(&neg1(s) * &inv(&q(r + 1) * &q(r + 1), "(r+1)^2")?) * &c(2 * r, r))
        * &(&(&Rational::one() - &ov(r)?) * &(&g(&seed, t * n + s) * &ltp(t, -n)?));
    Ok(lv(&acc + &tail))
}

fn gq2oddp_l(a: &Assignment) -> Ev {
    let (n, s, t, seed) = (a.int("n"), a.int("s"), a.int("t"), a.seed("seed"));
    let mut acc = Rational::zero();
    for k in 0..=n {
        let w = &(&p2(2 * (n - k)) * &invc(2 * n - 2 * k, n - k)?) * &ov(n - k)?;
        let tk = &tau(&seed, t, s, k) * &ltp(t, -k)?;
        acc = &acc + &(&(&(&neg1(k + 1) * &c(n, k)) * &w) * &tk);
    }
    Ok(lv(acc))
}

fn gq2oddp_r(a: &Assignment) -> Ev {
    let (n, s, t, seed) = (a.int("n"), a.int("s"), a.int("t"), a.seed("seed"));
    let mut acc = Rational::zero();
    for k in 0..=n - 1 {
        let d = n - k;
        let num = &c(n, k) * &c(2 * (n - k - 1), n - k - 1);
        let gk = &g(&seed, t * k + s) * &ltp(t, -k)?;
        let w = &inv(&q(d) * &q(d), "(n-k)^2")?
            - &inv(&(&q(d) * &q(d)) * &q(2 * n - 2 * k - 1), "(n-k)^2(2n-2k-1)")?;
        acc = &acc + &(&(&neg1(n - k + s + 1) * &num) * &(&w * &gk));
    }
    Ok(lv(acc))
}

/// Oracle pair for one identity id.
pub fn oracle_for(id: &str) -> Option<(OracleFn, OracleFn)> {
    let pair: (OracleFn, OracleFn) = match id {
        "shift-binom" => (sb_l, sb_r),
        "shift-simple" => (ss_l, ss_r),
        "harm-shift" => (hs_l, hs_r),
        "prodFF-H" => (pfh_l, pfh_r),
        "prodFF-O" => (pfo_l, pfo_r),
        "prodFF-gen" => (pfg_l, pfg_r),
        "fib4-sq" => (f4_l, f4_r),
        "fib4-sq-simple" => (f4s_l, f4s_r),
        "fib4-sq-H" => (f4h_l, f4h_r),
        "fib4-sq-H-simple" => (f4hs_l, f4hs_r),
        "rec-FF" => (rec_l, rff_r),
        "rec-FF-part" => (rffp_l, rffp_r),
        "rec-FL" => (rec_l, rfl_r),
        "rec-FL-cor" => (rflc_l, rflc_r),
        "rec-odd" => (rodd_l, rodd_r),
        "rec-odd-part" => (roddp_l, roddp_r),
        "rec-sq" => (rsq_l, rsq_r),
        "rec-sq-part" => (rsqp_l, rsqp_r),
        "rec-quad" => (rquad_l, rquad_r),
        "rec-quad-part" => (rquadp_l, rquadp_r),
        "conv-sq" => (conv_l, conv_r),
        "gib-sq" => (gsq_l, gsq_r),
        "gib-prod" => (gprod_l, gprod_r),
        "comb-O-F" => (cof_l, cof_r),
        "comb-H-G" => (chg_l, chg_r),
        "comb-H-G-base" => (chgb_l, chgb_r),
        "comb-H-G-x" => (chgx_l, chgx_r),
        "comb-H-G-s" => (chgs_l, chgs_r),
        "comb-G3" => (cg3_l, cg3_r),
        "comb-alt" => (calt_l, calt_r),
        "gould-base" => (gb_l, gb_r),
        "gould-G" => (gg_l, gg_r),
        "gould-H" => (gh_l, gh_r),
        "gould-O" => (go_l, go_r),
        "gould-cube" => (gc_l, gc_r),
        "gould2-base" => (g2b_l, g2b_r),
        "gould2-F" => (g2f_l, g2f_r),
        "gould2-G" => (g2g_l, g2g_r),
        "gould2-alt" => (g2a_l, g2a_r),
        "gould2-3t" => (g23_l, g23_r),
        "gould2-3t-alt" => (g23a_l, g23a_r),
        "bt-G-scaled" => (btg_l, btg_r),
        "boyad-H-G" => (bhg_l, bhg_r),
        "boyad-H-F" => (bhf_l, bhf_r),
        "boyad-H-L" => (bhl_l, bhl_r),
        "boyad-HF-part" => (bhfp_l, bhfp_r),
        "boyad-HL-part" => (bhlp_l, bhlp_r),
        "boyad-rev" => (brev_l, brev_r),
        "boyad-rev-F" => (brevf_l, brevf_r),
        "boyad-rev-L" => (brevl_l, brevl_r),
        "bt2-m" => (bt2_l, bt2_r),
        "bt2-m-sym" => (bt2s_l, bt2s_r),
        "bt2-m1a" => (bt2a_l, bt2a_r),
        "bt2-m1b" => (bt2b_l, bt2b_r),
        "prop1-ln2-a" => (p1a_lhs, p1a_rhs),
        "prop1-ln2-b" => (p1b_lhs, p1b_rhs),
        "prop1-a" => (ir1_l, ir1_r),
        "prop1-b" => (ir2_l, ir2_r),
        "prop2-a" => (ir3_l, ir3_r),
        "prop2-b" => (ir4_l, ir4_r),
        "bt3" => (bt3_l_o, bt3_r_o),
        "bt3-sym" => (bt3s_l, bt3s_r),
        "bt3-m0a" => (bt30a_l, bt30a_r),
        "bt3-m0b" => (bt30b_l, bt30b_r),
        "gq-thm" => (gqt_l, gqt_r),
        "gq-cor-m0" => (gqm0_l, gqm0_r),
        "gq-cor-m0-part" => (gqm0p_l, gqm0p_r),
        "gq-cor-odd" => (gqodd_l, gqodd_r),
        "gq-cor-odd-part" => (gqoddp_l, gqoddp_r),
        "gq-thm2" => (gq2t_l, gq2t_r),
        "gq-cor2-m0" => (gq2m0_l, gq2m0_r),
        "gq-cor2-m0-part" => (gq2m0p_l, gq2m0p_r),
        "gq-cor2-odd" => (gq2odd_l, gq2odd_r),
        "gq-cor2-odd-part" => (gq2oddp_l, gq2oddp_r),
        _ => return None,
    };
    Some(pair)
}

/// Evaluates both oracle sides at a point with the same outcome rules as the
/// registry path.
pub fn evaluate(
    id: &str,
    lhs: OracleFn,
    rhs: OracleFn,
    assignment: &Assignment,
) -> Result<CheckReport, RegistryError> {
    match (lhs(assignment), rhs(assignment)) {
        (Ok(lhs), Ok(rhs)) => Ok(CheckReport::equal_or_not(id, assignment.clone(), lhs, rhs)),
        (Err(EvalError::Skip(reason)), _) | (_, Err(EvalError::Skip(reason))) => {
            Ok(CheckReport::skipped(id, assignment.clone(), reason))
        }
        (Err(EvalError::Internal(msg)), _) | (_, Err(EvalError::Internal(msg))) => Err(
            RegistryError::Internal(format!("oracle {id} at {assignment}: {msg}")),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registry;

    #[test]
    fn every_entry_has_an_oracle() {
        for entry in registry::entries() {
            assert!(oracle_for(entry.id).is_some(), "missing oracle for {}", entry.id);
        }
    }

    #[test]
    fn oracle_spot_values() {
        let (lhs, rhs) = oracle_for("rec-FF-part").unwrap();
        let a = Assignment::new().with("n", crate::report::ParamValue::Int(1));
        assert_eq!(lhs(&a).unwrap(), LogValue::int(-1));
        assert_eq!(rhs(&a).unwrap(), LogValue::int(-1));

        let (lhs, rhs) = oracle_for("conv-sq").unwrap();
        let a = Assignment::new().with("n", crate::report::ParamValue::Int(2));
        assert_eq!(lhs(&a).unwrap(), LogValue::int(1));
        assert_eq!(rhs(&a).unwrap(), LogValue::int(1));

        let (lhs, rhs) = oracle_for("boyad-HF-part").unwrap();
        let a = Assignment::new().with("n", crate::report::ParamValue::Int(2));
        assert_eq!(lhs(&a).unwrap(), lv(Rational::frac(-1, 2)));
        assert_eq!(rhs(&a).unwrap(), lv(Rational::frac(-1, 2)));

        let (lhs, rhs) = oracle_for("rec-odd-part").unwrap();
        let a = Assignment::new().with("n", crate::report::ParamValue::Int(1));
        assert_eq!(lhs(&a).unwrap(), lv(Rational::frac(2, 3)));
        assert_eq!(rhs(&a).unwrap(), lv(Rational::frac(2, 3)));
    }
}
