//! Exact harmonic and odd harmonic numbers at integer and half-integer
//! arguments, generalized binomial coefficients, and the relation suites
//! built on them.
//!
//! Integer arguments stay in Q. A half-integer argument m - 1/2 evaluates to
//! 2*O_{|m|} - 2 ln2, which is where the ln2 coefficient of every identity
//! in the catalog originates. Negative integers are poles.

use std::cell::RefCell;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::exact::{HalfInt, HalfIntClass, LogValue, Rational};
use crate::report::{Assignment, CheckReport, ParamValue};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HarmonicError {
    /// Harmonic number requested at a negative integer.
    Pole(HalfInt),
    /// Argument outside an operation's domain (negative n, negative order).
    Domain(String),
    /// Binomial with a half-integer lower index outside the reducible family.
    UnsupportedBinomial(HalfInt, HalfInt),
}

impl fmt::Display for HarmonicError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HarmonicError::Pole(z) => write!(f, "harmonic pole at H_{{{z}}}"),
            HarmonicError::Domain(msg) => write!(f, "domain error: {msg}"),
            HarmonicError::UnsupportedBinomial(u, l) => {
                write!(f, "unsupported binomial C({u}, {l})")
            }
        }
    }
}

impl std::error::Error for HarmonicError {}

thread_local! {
    // Prefix sums H_0..H_n and O_0..O_n, grown on demand per worker thread.
    static HARMONIC_TABLE: RefCell<Vec<Rational>> = RefCell::new(vec![Rational::zero()]);
    static ODD_TABLE: RefCell<Vec<Rational>> = RefCell::new(vec![Rational::zero()]);
}

fn harmonic_prefix(n: i64) -> Rational {
    debug_assert!(n >= 0);
    HARMONIC_TABLE.with(|t| {
        let mut t = t.borrow_mut();
        while (t.len() as i64) <= n {
            let j = t.len() as i64;
            let next = t.last().unwrap() + &Rational::frac(1, j);
            t.push(next);
        }
        t[n as usize].clone()
    })
}

fn odd_prefix(n: i64) -> Rational {
    debug_assert!(n >= 0);
    ODD_TABLE.with(|t| {
        let mut t = t.borrow_mut();
        while (t.len() as i64) <= n {
            let j = t.len() as i64;
            let next = t.last().unwrap() + &Rational::frac(1, 2 * j - 1);
            t.push(next);
        }
        t[n as usize].clone()
    })
}

/// O_n = sum_{j=1}^n 1/(2j-1) for n >= 0.
pub fn odd_harmonic(n: i64) -> Result<Rational, HarmonicError> {
    if n < 0 {
        return Err(HarmonicError::Domain(format!(
            "odd_harmonic needs n >= 0, got {n}"
        )));
    }
    Ok(odd_prefix(n))
}

/// H_z in Q[ln2]. Integer z >= 0 gives the rational prefix sum; half-integer
/// z = m - 1/2 gives 2*O_{|m|} - 2 ln2 (the downward recurrence
/// H_{z-1} = H_z - 1/z extends the identity below -1/2); negative integers
/// are poles.
pub fn harmonic(z: &HalfInt) -> Result<LogValue, HarmonicError> {
    match z.classify() {
        HalfIntClass::Zero => Ok(LogValue::zero()),
        HalfIntClass::NegativeInteger => Err(HarmonicError::Pole(z.clone())),
        HalfIntClass::PositiveInteger => {
            let n = z
                .as_int()
                .ok_or_else(|| HarmonicError::Domain(format!("harmonic index too large: {z}")))?;
            Ok(LogValue::from_rational(harmonic_prefix(n)))
        }
        HalfIntClass::PositiveHalf | HalfIntClass::NegativeHalf => {
            // twice = 2m - 1 identifies z = m - 1/2, and H_{m - 1/2} is
            // 2 O_{|m|} - 2 ln2 in both directions of the recurrence.
            let m = (z.twice() + BigInt::from(1)) / BigInt::from(2);
            let m_abs = m
                .abs()
                .to_i64()
                .ok_or_else(|| HarmonicError::Domain(format!("harmonic index too large: {z}")))?;
            let o = odd_prefix(m_abs);
            Ok(LogValue {
                rat: &o + &o,
                log2: Rational::int(-2),
            })
        }
    }
}

/// H_n^{(m)} = sum_{j=1}^n 1/j^m.
pub fn harmonic_general(n: i64, m: i64) -> Result<Rational, HarmonicError> {
    if n < 0 || m < 1 {
        return Err(HarmonicError::Domain(format!(
            "harmonic_general needs n >= 0 and m >= 1, got ({n}, {m})"
        )));
    }
    let mut acc = Rational::zero();
    for j in 1..=n {
        acc = &acc + &Rational::int(j).pow(m).unwrap().inv().unwrap();
    }
    Ok(acc)
}

/// O_n^{(m)} = sum_{j=1}^n 1/(2j-1)^m.
pub fn odd_harmonic_general(n: i64, m: i64) -> Result<Rational, HarmonicError> {
    if n < 0 || m < 1 {
        return Err(HarmonicError::Domain(format!(
            "odd_harmonic_general needs n >= 0 and m >= 1, got ({n}, {m})"
        )));
    }
    let mut acc = Rational::zero();
    for j in 1..=n {
        acc = &acc + &Rational::int(2 * j - 1).pow(m).unwrap().inv().unwrap();
    }
    Ok(acc)
}

/// Integer binomial coefficient as an exact integer, defined for any integer
/// upper argument via the falling factorial; zero for k < 0.
pub fn choose(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

/// C(upper, lower) = prod_{i=0}^{lower-1} (upper - i) / lower! for any
/// half-integer upper argument and integer lower >= 0.
pub fn binom(upper: &HalfInt, lower: i64) -> Result<Rational, HarmonicError> {
    if lower < 0 {
        return Err(HarmonicError::Domain(format!(
            "binom needs lower >= 0, got {lower}"
        )));
    }
    let mut num = Rational::one();
    for i in 0..lower {
        num = &num * &(upper - i).to_rational();
    }
    let mut den = BigInt::from(1);
    for i in 1..=lower {
        den *= BigInt::from(i);
    }
    Ok(&num * &Rational::from_bigint(den).inv().unwrap())
}

/// C(upper, lower) for an arbitrary rational upper argument via the falling
/// factorial; used where a free rational variable sits in the upper slot.
pub fn binom_rat(upper: &Rational, lower: i64) -> Result<Rational, HarmonicError> {
    if lower < 0 {
        return Err(HarmonicError::Domain(format!(
            "binom needs lower >= 0, got {lower}"
        )));
    }
    let mut num = Rational::one();
    for i in 0..lower {
        num = &num * &(upper - &Rational::int(i));
    }
    let mut den = BigInt::from(1);
    for i in 1..=lower {
        den *= BigInt::from(i);
    }
    Ok(&num * &Rational::from_bigint(den).inv().unwrap())
}

/// Generalized binomial with a half-integer lower index, restricted to the
/// reducible family:
///  - integer lower: falling factorial (negative integer lower gives 0);
///  - half-integer lower with half-integer upper and integral difference d:
///    C(u, l) = C(u, d) by symmetry when d >= 0, and 0 when d < 0.
///
/// Anything else (an integer upper with a genuinely half-integer lower)
/// leaves Q[ln2] and is reported as unsupported.
pub fn binom_halfint_lower(upper: &HalfInt, lower: &HalfInt) -> Result<Rational, HarmonicError> {
    if lower.is_integer() {
        let l = lower
            .as_int()
            .ok_or_else(|| HarmonicError::Domain(format!("binomial lower too large: {lower}")))?;
        if l < 0 {
            return Ok(Rational::zero());
        }
        return binom(upper, l);
    }
    let diff = upper - lower;
    if !upper.is_integer() && diff.is_integer() {
        let d = diff
            .as_int()
            .ok_or_else(|| HarmonicError::Domain(format!("binomial spread too large: {upper}")))?;
        if d < 0 {
            return Ok(Rational::zero());
        }
        return binom(upper, d);
    }
    Err(HarmonicError::UnsupportedBinomial(
        upper.clone(),
        lower.clone(),
    ))
}

/// d/dx C(x, k) as a polynomial in x:
/// sum_{j=0}^{k-1} prod_{i != j} (x - i) / k!.
///
/// Where both harmonic values exist this equals C(x,k) * (H_x - H_{x-k});
/// unlike the product it stays finite when x or x - k is a negative integer,
/// which is exactly how terms with a vanishing binomial against a harmonic
/// pole are evaluated.
pub fn binom_deriv(x: &HalfInt, k: i64) -> Rational {
    if k <= 0 {
        return Rational::zero();
    }
    let factors: Vec<Rational> = (0..k).map(|i| (x - i).to_rational()).collect();
    let mut total = Rational::zero();
    for j in 0..k as usize {
        let mut prod = Rational::one();
        for (i, f) in factors.iter().enumerate() {
            if i != j {
                prod = &prod * f;
            }
        }
        total = &total + &prod;
    }
    let mut kfact = BigInt::from(1);
    for i in 1..=k {
        kfact *= BigInt::from(i);
    }
    &total * &Rational::from_bigint(kfact).inv().unwrap()
}

/// C(x, k) * (H_x - H_{x-k}) as a single exact value: the harmonic-product
/// form when both harmonic values exist (their ln2 parts cancel, so the
/// result is rational), and the derivative polynomial at the 0 * pole points.
pub fn binom_hdiff(x: &HalfInt, k: i64) -> Result<Rational, HarmonicError> {
    if k < 0 {
        return Ok(Rational::zero());
    }
    let shifted = x - k;
    match (harmonic(x), harmonic(&shifted)) {
        (Ok(hx), Ok(hxk)) => {
            let diff = &hx - &hxk;
            debug_assert!(diff.is_rational(), "ln2 parts must cancel in H_x - H_{{x-k}}");
            Ok(&binom(x, k)? * &diff.rat)
        }
        _ => Ok(binom_deriv(x, k)),
    }
}

fn report(id: &str, assignment: Assignment, lhs: LogValue, rhs: LogValue) -> CheckReport {
    CheckReport::equal_or_not(id, assignment, lhs, rhs)
}

fn ln2_times(c: i64) -> LogValue {
    LogValue::ln2(Rational::int(c))
}

/// Verifies the eight half-integer harmonic relations for n in [0, n_max],
/// all as exact equalities in Q[ln2].
pub fn lemma2_suite(n_max: i64) -> Vec<CheckReport> {
    let mut out = Vec::new();
    let two = |r: Rational| LogValue::from_rational(&r + &r);
    for n in 0..=n_max {
        let asg = |label: &str| {
            (
                format!("lemma2/{label}"),
                Assignment::new().with("n", ParamValue::Int(n)),
            )
        };
        let h = |v: HalfInt| harmonic(&v).expect("lemma2 arguments avoid poles");
        let nm = HalfInt::halves(2 * n - 1); // n - 1/2
        let np = HalfInt::halves(2 * n + 1); // n + 1/2
        let mhalf = HalfInt::halves(-1);
        let phalf = HalfInt::halves(1);
        let m3half = HalfInt::halves(-3);
        let on = odd_prefix(n);
        let on1 = odd_prefix(n + 1);

        let (id, a) = asg("zts4fm1");
        out.push(report(
            &id,
            a,
            h(nm.clone()),
            &two(on.clone()) + &ln2_times(-2),
        ));
        let (id, a) = asg("plh634k");
        out.push(report(&id, a, &h(nm.clone()) - &h(mhalf.clone()), two(on.clone())));
        let (id, a) = asg("hgplrbd");
        out.push(report(
            &id,
            a,
            &h(nm.clone()) - &h(phalf.clone()),
            two(&on - &Rational::one()),
        ));
        let (id, a) = asg("ivi1ex5");
        out.push(report(&id, a, &h(np.clone()) - &h(mhalf), two(on1.clone())));
        let (id, a) = asg("u6ng5d6");
        out.push(report(
            &id,
            a,
            &h(np.clone()) - &h(phalf),
            two(&on1 - &Rational::one()),
        ));
        let (id, a) = asg("step2n1");
        out.push(report(
            &id,
            a,
            &h(np.clone()) - &h(nm.clone()),
            LogValue::from_rational(Rational::frac(2, 2 * n + 1)),
        ));
        let (id, a) = asg("pobmr6h");
        out.push(report(
            &id,
            a,
            &h(nm) - &h(m3half.clone()),
            two(&on - &Rational::one()),
        ));
        let (id, a) = asg("pobmr6h_up");
        out.push(report(
            &id,
            a,
            &h(np) - &h(m3half),
            two(&on1 - &Rational::one()),
        ));
    }
    out
}

/// Compares the four closed forms for half-integer binomial coefficients
/// against the falling-factorial definition over r, s in [0, max]. Points
/// where a closed form divides by zero are recorded as skipped; everywhere
/// else the report states whether the two routes agree.
pub fn lemma3_suite(r_max: i64, s_max: i64) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for r in 0..=r_max {
        for s in 0..=s_max {
            let asg = |label: &str| {
                (
                    format!("lemma3/{label}"),
                    Assignment::new()
                        .with("r", ParamValue::Int(r))
                        .with("s", ParamValue::Int(s)),
                )
            };

            // C(r + 1/2, s) = ((2r+1)/(2s)) C(2s,s) / (C(r,s) 2^{2s})
            let (id, a) = asg("half_up");
            let truth = binom(&HalfInt::halves(2 * r + 1), s).unwrap();
            let crs = choose(r, s);
            if s == 0 || crs.is_zero() {
                out.push(CheckReport::skipped(
                    &id,
                    a,
                    if s == 0 {
                        "zero denominator 2s".into()
                    } else {
                        format!("zero binomial C({r}, {s})")
                    },
                ));
            } else {
                let closed = &(&Rational::frac(2 * r + 1, 2 * s)
                    * &Rational::from_bigint(choose(2 * s, s)))
                    * &(&Rational::from_bigint(crs) * &Rational::pow2(2 * s))
                        .inv()
                        .unwrap();
                out.push(report(
                    &id,
                    a,
                    LogValue::from_rational(truth),
                    LogValue::from_rational(closed),
                ));
            }

            // C(1/2, r) = (-1)^{r+1} C(2r,r) / (2^{2r} (2r - 1)); only r varies.
            if s == 0 {
                let (id, a) = asg("one_half");
                let truth = binom(&HalfInt::halves(1), r).unwrap();
                let closed = &(&Rational::neg_one_pow(r + 1)
                    * &Rational::from_bigint(choose(2 * r, r)))
                    * &(&Rational::pow2(2 * r) * &Rational::int(2 * r - 1))
                        .inv()
                        .unwrap();
                out.push(report(
                    &id,
                    a,
                    LogValue::from_rational(truth),
                    LogValue::from_rational(closed),
                ));
            }

            // C(r - 1/2, s) = C(2r,r) C(r,s) / (C(2(r-s), r-s) 2^{2s})
            let (id, a) = asg("half_down");
            let truth = binom(&HalfInt::halves(2 * r - 1), s).unwrap();
            let denom_binom = choose(2 * (r - s), r - s);
            if denom_binom.is_zero() {
                out.push(CheckReport::skipped(
                    &id,
                    a,
                    format!("zero binomial C({}, {})", 2 * (r - s), r - s),
                ));
            } else {
                let closed = &(&Rational::from_bigint(choose(2 * r, r))
                    * &Rational::from_bigint(choose(r, s)))
                    * &(&Rational::from_bigint(denom_binom) * &Rational::pow2(2 * s))
                        .inv()
                        .unwrap();
                out.push(report(
                    &id,
                    a,
                    LogValue::from_rational(truth),
                    LogValue::from_rational(closed),
                ));
            }

            // C(-1/2, r) = (-1)^r C(2r,r) 2^{-2r}; only r varies.
            if s == 0 {
                let (id, a) = asg("minus_half");
                let truth = binom(&HalfInt::halves(-1), r).unwrap();
                let closed = &(&Rational::neg_one_pow(r)
                    * &Rational::from_bigint(choose(2 * r, r)))
                    * &Rational::pow2(-2 * r);
                out.push(report(
                    &id,
                    a,
                    LogValue::from_rational(truth),
                    LogValue::from_rational(closed),
                ));
            }
        }
    }
    out
}

/// Verifies the half-integer reduction chain used by the m = -3/2 branch of
/// the transform catalog, for r in [0, r_max], n in [0, n_max], admissible k.
pub fn halfint_reduction_suite(r_max: i64, n_max: i64) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for r in 0..=r_max {
        // C(r - 1/2, r + 1) = -2^{-(2r+1)}/(r+1) * C(2r, r), checked in both
        // the value and the inverse form (at r = 0 the inverse is -2).
        let a = Assignment::new().with("r", ParamValue::Int(r));
        let lhs = binom(&HalfInt::halves(2 * r - 1), r + 1).unwrap();
        let rhs = &(&(-Rational::pow2(-(2 * r + 1))) * &Rational::frac(1, r + 1))
            * &Rational::from_bigint(choose(2 * r, r));
        let inverses_match = lhs.inv().unwrap() == rhs.inv().unwrap();
        let mut rep = report(
            "halfint/kgwmxuxuu",
            a,
            LogValue::from_rational(lhs),
            LogValue::from_rational(rhs),
        );
        if !inverses_match {
            rep.outcome = crate::report::Outcome::Unequal;
        }
        out.push(rep);

        for n in 0..=n_max {
            for k in 0..=n {
                let asg = |label: &str| {
                    (
                        format!("halfint/{label}"),
                        Assignment::new()
                            .with("r", ParamValue::Int(r))
                            .with("n", ParamValue::Int(n))
                            .with("k", ParamValue::Int(k)),
                    )
                };
                let p = r + n - k;

                // C(p - 1/2, -1/2)^{-1} = C(p - 1/2, p)^{-1} = C(2p, p)^{-1} 2^{2p}
                let (id, a) = asg("mn5v94x");
                let upper = HalfInt::halves(2 * p - 1);
                let via_lower_half = binom_halfint_lower(&upper, &HalfInt::halves(-1))
                    .unwrap()
                    .inv()
                    .unwrap();
                let via_symmetry = binom(&upper, p).unwrap().inv().unwrap();
                let closed = &Rational::from_bigint(choose(2 * p, p)).inv().unwrap()
                    * &Rational::pow2(2 * p);
                let all_equal = via_lower_half == via_symmetry && via_symmetry == closed;
                out.push(CheckReport {
                    outcome: if all_equal {
                        crate::report::Outcome::Equal
                    } else {
                        crate::report::Outcome::Unequal
                    },
                    lhs: Some(LogValue::from_rational(via_lower_half)),
                    rhs: Some(LogValue::from_rational(closed)),
                    id,
                    assignment: a,
                    elapsed: None,
                });

                // H_{-1/2} - H_{-1/2 + p} = -2 O_p
                let (id, a) = asg("mdxkxi4");
                let lhs = &harmonic(&HalfInt::halves(-1)).unwrap()
                    - &harmonic(&HalfInt::halves(2 * p - 1)).unwrap();
                let rhs = LogValue::from_rational(
                    &Rational::int(-2) * &odd_prefix(p),
                );
                out.push(report(&id, a, lhs, rhs));

                if k < n {
                    // H_{-3/2 + n - k} - H_{-1/2 + r + n - k}
                    //   = 2 (O_{n-k-1} - O_{r+n-k})
                    let (id, a) = asg("zj8qis2");
                    let lhs = &harmonic(&HalfInt::halves(2 * (n - k) - 3)).unwrap()
                        - &harmonic(&HalfInt::halves(2 * p - 1)).unwrap();
                    let diff = &odd_prefix(n - k - 1) - &odd_prefix(p);
                    let rhs = LogValue::from_rational(&diff + &diff);
                    out.push(report(&id, a, lhs, rhs));

                    // C(p - 1/2, r+1)^{-1}
                    //   = C(2p, p)^{-1} C(p, r+1)^{-1} C(2(n-k-1), n-k-1) 2^{2(r+1)},
                    // the k < n reduction that follows from half_down.
                    let (id, a) = asg("kgwmxux");
                    let lhs = binom(&HalfInt::halves(2 * p - 1), r + 1)
                        .unwrap()
                        .inv()
                        .unwrap();
                    let rhs = &(&(&Rational::from_bigint(choose(2 * p, p))
                        .inv()
                        .unwrap()
                        * &Rational::from_bigint(choose(p, r + 1)).inv().unwrap())
                        * &Rational::from_bigint(choose(2 * (n - k - 1), n - k - 1)))
                        * &Rational::pow2(2 * (r + 1));
                    out.push(report(
                        &id,
                        a,
                        LogValue::from_rational(lhs),
                        LogValue::from_rational(rhs),
                    ));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Outcome;

    fn h(z: HalfInt) -> LogValue {
        harmonic(&z).unwrap()
    }

    #[test]
    fn integer_harmonics() {
        assert_eq!(h(HalfInt::from_int(3)), LogValue::from_rational(Rational::frac(11, 6)));
        assert_eq!(h(HalfInt::zero()), LogValue::zero());
        assert!(matches!(
            harmonic(&HalfInt::from_int(-2)),
            Err(HarmonicError::Pole(_))
        ));
    }

    #[test]
    fn half_integer_harmonics() {
        assert_eq!(h(HalfInt::halves(-1)), LogValue::ln2(Rational::int(-2)));
        assert_eq!(
            h(HalfInt::halves(-3)),
            LogValue {
                rat: Rational::int(2),
                log2: Rational::int(-2),
            }
        );
        assert_eq!(
            h(HalfInt::halves(1)),
            LogValue {
                rat: Rational::int(2),
                log2: Rational::int(-2),
            }
        );
        // Integer harmonic values carry no ln2; half-integer ones carry -2.
        for t in -41..=81 {
            let z = HalfInt::halves(t);
            match harmonic(&z) {
                Ok(v) if z.is_integer() => assert!(v.log2.is_zero()),
                Ok(v) => assert_eq!(v.log2, Rational::int(-2)),
                Err(_) => assert_eq!(z.classify(), HalfIntClass::NegativeInteger),
            }
        }
    }

    #[test]
    fn harmonic_recurrence_exact() {
        // H_z - H_{z-1} = 1/z on the half-integer lattice [-20, 40].
        for t in -40..=80 {
            let z = HalfInt::halves(t);
            if z.is_zero() {
                continue;
            }
            let prev = &z - 1;
            let (Ok(hz), Ok(hprev)) = (harmonic(&z), harmonic(&prev)) else {
                continue;
            };
            assert_eq!(
                &hz - &hprev,
                LogValue::from_rational(z.to_rational().inv().unwrap()),
                "recurrence at z = {z}"
            );
        }
    }

    #[test]
    fn odd_harmonic_values() {
        assert_eq!(odd_harmonic(0).unwrap(), Rational::zero());
        assert_eq!(odd_harmonic(1).unwrap(), Rational::one());
        assert_eq!(odd_harmonic(3).unwrap(), Rational::frac(23, 15));
        assert!(odd_harmonic(-1).is_err());
    }

    #[test]
    fn generalized_harmonics() {
        assert_eq!(harmonic_general(3, 2).unwrap(), Rational::frac(49, 36));
        assert_eq!(harmonic_general(0, 5).unwrap(), Rational::zero());
        assert_eq!(odd_harmonic_general(2, 2).unwrap(), Rational::frac(10, 9));
        assert_eq!(harmonic_general(4, 1).unwrap(), harmonic_prefix(4));
        assert!(harmonic_general(-1, 1).is_err());
        assert!(odd_harmonic_general(2, 0).is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(
            binom(&HalfInt::halves(-1), 2).unwrap(),
            Rational::frac(3, 8)
        );
        assert_eq!(binom(&HalfInt::from_int(7), 3).unwrap(), Rational::int(35));
        assert_eq!(
            binom(&HalfInt::halves(7), 0).unwrap(),
            Rational::one()
        );
        assert_eq!(
            binom(&HalfInt::halves(3), 2).unwrap(),
            Rational::frac(3, 8)
        );
        assert!(binom(&HalfInt::from_int(3), -1).is_err());
    }

    #[test]
    fn integer_choose() {
        assert_eq!(choose(10, 5), BigInt::from(252));
        assert_eq!(choose(5, 0), BigInt::from(1));
        assert_eq!(choose(3, 5), BigInt::from(0));
        assert_eq!(choose(3, -1), BigInt::from(0));
        assert_eq!(choose(-2, 3), BigInt::from(-4));
        assert_eq!(choose(-1, 4), BigInt::from(1));
    }

    #[test]
    fn halfint_lower_binomials() {
        // C(n - 1/2, n) = C(2n, n) / 4^n, here at n = 2.
        assert_eq!(
            binom_halfint_lower(&HalfInt::halves(3), &HalfInt::from_int(2)).unwrap(),
            Rational::frac(3, 8)
        );
        let p = 2;
        assert_eq!(
            binom_halfint_lower(&HalfInt::halves(2 * p - 1), &HalfInt::halves(-1)).unwrap(),
            &Rational::from_bigint(choose(2 * p, p)) * &Rational::pow2(-2 * p)
        );
        // Negative integer lower index annihilates the coefficient.
        assert_eq!(
            binom_halfint_lower(&HalfInt::halves(5), &HalfInt::from_int(-2)).unwrap(),
            Rational::zero()
        );
        // A half-integer lower under an integer upper leaves the ring.
        assert!(matches!(
            binom_halfint_lower(&HalfInt::from_int(3), &HalfInt::halves(1)),
            Err(HarmonicError::UnsupportedBinomial(_, _))
        ));
    }

    #[test]
    fn binom_deriv_matches_product_form() {
        // Where H_x and H_{x-k} both exist the polynomial derivative equals
        // C(x,k) (H_x - H_{x-k}).
        for t in [-9i64, -1, 0, 1, 3, 8, 15] {
            let x = HalfInt::halves(t);
            for k in 0..=9 {
                let shifted = &x - k;
                let (Ok(hx), Ok(hxk)) = (harmonic(&x), harmonic(&shifted)) else {
                    continue;
                };
                let product = &binom(&x, k).unwrap() * &(&hx - &hxk).rat;
                assert_eq!(binom_deriv(&x, k), product, "at x={x}, k={k}");
                assert_eq!(binom_hdiff(&x, k).unwrap(), product);
            }
        }
        // At the 0 * pole points the derivative form stays finite.
        assert_eq!(binom_deriv(&HalfInt::zero(), 1), Rational::one());
        assert_eq!(binom_hdiff(&HalfInt::zero(), 2).unwrap(), Rational::frac(-1, 2));
    }

    #[test]
    fn pascal_rule_for_half_integer_upper() {
        for t in [-7i64, -1, 1, 5, 9, 13] {
            let x = HalfInt::halves(t);
            let x1 = &x + 1;
            for k in 1..=12 {
                assert_eq!(
                    &binom(&x, k).unwrap() + &binom(&x, k - 1).unwrap(),
                    binom(&x1, k).unwrap(),
                    "Pascal at x={x}, k={k}"
                );
            }
        }
    }

    #[test]
    fn lemma2_small_values() {
        let reports = lemma2_suite(2);
        assert!(reports.iter().all(|r| r.outcome.is_equal()));
        // H_{3/2} - H_{-1/2} = 2 O_2 = 8/3 at n = 2.
        let r = reports
            .iter()
            .find(|r| r.id == "lemma2/plh634k" && r.assignment.to_string() == "n=2")
            .unwrap();
        assert_eq!(
            r.lhs.as_ref().unwrap(),
            &LogValue::from_rational(Rational::frac(8, 3))
        );
        // H_{1/2} - H_{1/2} = 2 (O_1 - 1) = 0 at n = 0.
        let r = reports
            .iter()
            .find(|r| r.id == "lemma2/u6ng5d6" && r.assignment.to_string() == "n=0")
            .unwrap();
        assert_eq!(r.lhs.as_ref().unwrap(), &LogValue::zero());
    }

    #[test]
    fn lemma3_records_the_broken_form_and_the_sound_ones() {
        let reports = lemma3_suite(6, 6);
        // half_up as printed disagrees with the falling factorial already at
        // r = s = 1 (3/2 against 3/4); the suite records that, it does not
        // assume a domain.
        let r = reports
            .iter()
            .find(|r| r.id == "lemma3/half_up" && r.assignment.to_string() == "r=1,s=1")
            .unwrap();
        assert_eq!(r.outcome, Outcome::Unequal);
        assert_eq!(r.lhs.as_ref().unwrap().to_string(), "3/2");
        assert_eq!(r.rhs.as_ref().unwrap().to_string(), "3/4");
        for label in ["lemma3/one_half", "lemma3/half_down", "lemma3/minus_half"] {
            assert!(
                reports
                    .iter()
                    .filter(|r| r.id == label)
                    .all(|r| !matches!(r.outcome, Outcome::Unequal)),
                "{label} must agree wherever it is defined"
            );
        }
    }

    #[test]
    fn halfint_reduction_small() {
        let reports = halfint_reduction_suite(3, 5);
        assert!(
            reports.iter().all(|r| r.outcome.is_equal()),
            "first failure: {:?}",
            reports.iter().find(|r| !r.outcome.is_equal())
        );
        // H_{-1/2} - H_{3/2} = -2 O_2 = -8/3 at r + n - k = 2.
        let r = reports
            .iter()
            .find(|r| r.id == "halfint/mdxkxi4" && r.assignment.to_string() == "r=2,n=0,k=0")
            .unwrap();
        assert_eq!(
            r.rhs.as_ref().unwrap(),
            &LogValue::from_rational(Rational::frac(-8, 3))
        );
    }
}
