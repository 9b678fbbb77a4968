//! Abel partial-summation checker and binomial-transform machinery: the
//! meta-oracles behind the transform-based catalog families.

use std::fmt;

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exact::{ExactError, HalfInt, LogValue, Rational};
use crate::harmonic::{binom_halfint_lower, choose, harmonic, HarmonicError};
use crate::report::{Assignment, CheckReport, ParamValue};
use crate::sequences::{gib, GibonacciSeed};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TransformError {
    /// A sequence does not cover the index range an operation needs.
    Domain(String),
    /// The two sequences handed to a pair lemma are not a transform pair.
    PairMismatch,
    /// A product left Q[ln2].
    Degree,
}

impl fmt::Display for TransformError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TransformError::Domain(msg) => write!(f, "domain error: {msg}"),
            TransformError::PairMismatch => {
                write!(f, "sequences are not a binomial-transform pair")
            }
            TransformError::Degree => write!(f, "product outside Q[ln2]"),
        }
    }
}

impl std::error::Error for TransformError {}

impl From<ExactError> for TransformError {
    fn from(e: ExactError) -> Self {
        match e {
            ExactError::DegreeOverflow => TransformError::Degree,
            ExactError::DivisionByZero => {
                TransformError::Domain("division by zero".into())
            }
        }
    }
}

/// Dense finite sequence of Q[ln2] values starting at a declared index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSequence {
    start: i64,
    values: Vec<LogValue>,
}

impl FiniteSequence {
    pub fn new(start: i64, values: Vec<LogValue>) -> Self {
        assert!(!values.is_empty(), "sequences have length >= 1");
        FiniteSequence { start, values }
    }

    pub fn from_fn(start: i64, len: usize, f: impl FnMut(i64) -> LogValue) -> Self {
        let mut f = f;
        FiniteSequence::new(start, (start..start + len as i64).map(&mut f).collect())
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        // The constructor enforces length >= 1.
        false
    }

    pub fn end(&self) -> i64 {
        self.start + self.values.len() as i64 - 1
    }

    pub fn get(&self, i: i64) -> Result<&LogValue, TransformError> {
        if i < self.start || i > self.end() {
            return Err(TransformError::Domain(format!(
                "index {i} outside [{}, {}]",
                self.start,
                self.end()
            )));
        }
        Ok(&self.values[(i - self.start) as usize])
    }
}

/// Which Abel identity to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AbelVariant {
    /// sum b_k (a_{k+1} - a_k) = sum a_{k+1} (b_k - b_{k+1}) + a_{n+1} b_{n+1} - a_1 b_1
    Difference,
    /// sum b_k (a_{k+1} + a_k) = sum a_{k+1} (b_k + b_{k+1}) - a_{n+1} b_{n+1} + a_1 b_1
    Sum,
}

/// Checks one Abel partial-summation identity exactly on [1, n+1].
pub fn abel_check(
    a: &FiniteSequence,
    b: &FiniteSequence,
    n: i64,
    variant: AbelVariant,
) -> Result<CheckReport, TransformError> {
    if n < 1 {
        return Err(TransformError::Domain(format!("abel needs n >= 1, got {n}")));
    }
    for s in [a, b] {
        if s.start() > 1 || s.end() < n + 1 {
            return Err(TransformError::Domain(format!(
                "sequence on [{}, {}] does not cover [1, {}]",
                s.start(),
                s.end(),
                n + 1
            )));
        }
    }
    let mut lhs = LogValue::zero();
    let mut rhs = LogValue::zero();
    for k in 1..=n {
        let (ak, ak1, bk, bk1) = (a.get(k)?, a.get(k + 1)?, b.get(k)?, b.get(k + 1)?);
        match variant {
            AbelVariant::Difference => {
                lhs = &lhs + &bk.try_mul(&(ak1 - ak))?;
                rhs = &rhs + &ak1.try_mul(&(bk - bk1))?;
            }
            AbelVariant::Sum => {
                lhs = &lhs + &bk.try_mul(&(ak1 + ak))?;
                rhs = &rhs + &ak1.try_mul(&(bk + bk1))?;
            }
        }
    }
    let boundary = a.get(n + 1)?.try_mul(b.get(n + 1)?)?;
    let first = a.get(1)?.try_mul(b.get(1)?)?;
    rhs = match variant {
        AbelVariant::Difference => &(&rhs + &boundary) - &first,
        AbelVariant::Sum => &(&rhs - &boundary) + &first,
    };
    let id = match variant {
        AbelVariant::Difference => "abel1",
        AbelVariant::Sum => "abel2",
    };
    Ok(CheckReport::equal_or_not(
        id,
        Assignment::new().with("n", ParamValue::Int(n)),
        lhs,
        rhs,
    ))
}

/// sigma_n = sum_{k=0}^n (-1)^k C(n,k) s_k; the map is an involution.
pub fn binomial_transform(s: &FiniteSequence) -> Result<FiniteSequence, TransformError> {
    if s.start() != 0 {
        return Err(TransformError::Domain(format!(
            "binomial transform starts at 0, sequence starts at {}",
            s.start()
        )));
    }
    let len = s.len() as i64;
    let mut out = Vec::with_capacity(s.len());
    for n in 0..len {
        let mut acc = LogValue::zero();
        let mut coeff = BigInt::from(1);
        for k in 0..=n {
            let signed = if k % 2 == 0 {
                Rational::from_bigint(coeff.clone())
            } else {
                -Rational::from_bigint(coeff.clone())
            };
            acc = &acc + &s.get(k)?.scale(&signed);
            // C(n, k+1) from C(n, k).
            coeff = coeff * BigInt::from(n - k) / BigInt::from(k + 1);
        }
        out.push(acc);
    }
    Ok(FiniteSequence::new(0, out))
}

fn verify_pair(
    s: &FiniteSequence,
    sigma: &FiniteSequence,
    n: i64,
) -> Result<(), TransformError> {
    if s.start() != 0 || sigma.start() != 0 {
        return Err(TransformError::Domain(
            "transform pairs are indexed from 0".into(),
        ));
    }
    if s.end() < n || sigma.end() < n {
        return Err(TransformError::Domain(format!(
            "pair does not cover [0, {n}]"
        )));
    }
    let forward = binomial_transform(s)?;
    for k in 0..=n {
        if forward.get(k)? != sigma.get(k)? {
            return Err(TransformError::PairMismatch);
        }
    }
    Ok(())
}

/// Checks sum (-1)^k C(n,k) H_k s_k = H_n sigma_n - sum_{k<n} sigma_k/(n-k)
/// for a verified transform pair.
pub fn boyad1_check(
    s: &FiniteSequence,
    sigma: &FiniteSequence,
    n: i64,
) -> Result<CheckReport, TransformError> {
    if n < 0 {
        return Err(TransformError::Domain(format!("need n >= 0, got {n}")));
    }
    verify_pair(s, sigma, n)?;
    let mut lhs = LogValue::zero();
    for k in 0..=n {
        let h = harmonic(&HalfInt::from_int(k)).expect("H_k at k >= 0");
        let c = &Rational::neg_one_pow(k) * &Rational::from_bigint(choose(n, k));
        lhs = &lhs + &h.try_mul(s.get(k)?)?.scale(&c);
    }
    let hn = harmonic(&HalfInt::from_int(n)).expect("H_n at n >= 0");
    let mut rhs = hn.try_mul(sigma.get(n)?)?;
    for k in 0..n {
        rhs = &rhs - &sigma.get(k)?.scale(&Rational::frac(1, n - k));
    }
    Ok(CheckReport::equal_or_not(
        "boyad1",
        Assignment::new().with("n", ParamValue::Int(n)),
        lhs,
        rhs,
    ))
}

/// Checks sum (-1)^{k+1} C(n,k) G_k s_k = sum (-1)^k C(n,k) G_{n-2k} sigma_k
/// as displayed. The relation is reported, not assumed: it holds for
/// Fibonacci-proportional seeds and generally fails otherwise, and the
/// report carries whichever way it lands.
pub fn boyad2_check(
    s: &FiniteSequence,
    sigma: &FiniteSequence,
    g_seed: &GibonacciSeed,
    n: i64,
) -> Result<CheckReport, TransformError> {
    if n < 0 {
        return Err(TransformError::Domain(format!("need n >= 0, got {n}")));
    }
    verify_pair(s, sigma, n)?;
    let mut lhs = LogValue::zero();
    let mut rhs = LogValue::zero();
    for k in 0..=n {
        let c = Rational::from_bigint(choose(n, k));
        let lc = &Rational::neg_one_pow(k + 1) * &(&c * &Rational::from(&gib(g_seed, k)));
        lhs = &lhs + &s.get(k)?.scale(&lc);
        let rc = &Rational::neg_one_pow(k) * &(&c * &Rational::from(&gib(g_seed, n - 2 * k)));
        rhs = &rhs + &sigma.get(k)?.scale(&rc);
    }
    Ok(CheckReport::equal_or_not(
        "boyad2",
        Assignment::new()
            .with("n", ParamValue::Int(n))
            .with("seed", ParamValue::Seed(g_seed.clone())),
        lhs,
        rhs,
    ))
}

/// Checks the Gould-Quaintance pair identity
///   sum (-1)^k C(n,k) C(r+m+n-k+1, m+1)^{-1} t_k
///     = (m+1)/(r+1) sum (-1)^{n-k} C(n,k) C(r+m+n-k+1, r+1)^{-1} tau_k
/// for a verified pair and half-integer m, r that are not negative integers.
pub fn gouldqu_check(
    t: &FiniteSequence,
    tau: &FiniteSequence,
    n: i64,
    m: &HalfInt,
    r: &HalfInt,
) -> Result<CheckReport, TransformError> {
    if n < 0 {
        return Err(TransformError::Domain(format!("need n >= 0, got {n}")));
    }
    for v in [m, r] {
        if v.is_integer() && v.is_negative() {
            return Err(TransformError::Domain(format!(
                "parameter {v} is a negative integer"
            )));
        }
    }
    verify_pair(t, tau, n)?;

    let assignment = Assignment::new()
        .with("n", ParamValue::Int(n))
        .with("m", ParamValue::Half(m.clone()))
        .with("r", ParamValue::Half(r.clone()));

    let inv_binom = |upper: &HalfInt, lower: &HalfInt| -> Result<Option<Rational>, TransformError> {
        match binom_halfint_lower(upper, lower) {
            Ok(v) => {
                if v.is_zero() {
                    Ok(None)
                } else {
                    Ok(Some(v.inv().expect("nonzero")))
                }
            }
            Err(HarmonicError::UnsupportedBinomial(u, l)) => Err(TransformError::Domain(
                format!("unsupported binomial C({u}, {l})"),
            )),
            Err(e) => Err(TransformError::Domain(e.to_string())),
        }
    };

    let m1 = m + 1;
    let r1 = r + 1;
    let mut lhs = LogValue::zero();
    let mut rhs = LogValue::zero();
    for k in 0..=n {
        let upper = &(&(m + r) + (n - k)) + 1;
        let Some(left_inv) = inv_binom(&upper, &m1)? else {
            return Ok(CheckReport::skipped(
                "gouldqu",
                assignment,
                format!("zero binomial C({upper}, {m1})"),
            ));
        };
        let Some(right_inv) = inv_binom(&upper, &r1)? else {
            return Ok(CheckReport::skipped(
                "gouldqu",
                assignment,
                format!("zero binomial C({upper}, {r1})"),
            ));
        };
        let c = Rational::from_bigint(choose(n, k));
        lhs = &lhs + &t.get(k)?.scale(&(&(&Rational::neg_one_pow(k) * &c) * &left_inv));
        rhs = &rhs
            + &tau
                .get(k)?
                .scale(&(&(&Rational::neg_one_pow(n - k) * &c) * &right_inv));
    }
    let scale = m1
        .to_rational()
        .checked_div(&r1.to_rational())
        .map_err(|_| TransformError::Domain("r = -1".into()))?;
    rhs = rhs.scale(&scale);
    Ok(CheckReport::equal_or_not("gouldqu", assignment, lhs, rhs))
}

/// Deterministic generator of small rational test sequences: entries have
/// numerators in [-9, 9] and denominators in [1, 9].
pub fn random_rational_sequence(rng_seed: u64, start: i64, len: usize) -> FiniteSequence {
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    FiniteSequence::from_fn(start, len, |_| {
        let p = rng.gen_range(-9i64..=9);
        let q = rng.gen_range(1i64..=9);
        LogValue::from_rational(Rational::frac(p, q))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::fib;

    fn constant_one(len: usize) -> FiniteSequence {
        FiniteSequence::from_fn(0, len, |_| LogValue::int(1))
    }

    #[test]
    fn abel_constants_telescope() {
        let ones = FiniteSequence::from_fn(1, 5, |_| LogValue::int(1));
        let rep = abel_check(&ones, &ones, 3, AbelVariant::Difference).unwrap();
        assert!(rep.outcome.is_equal());
        assert_eq!(rep.lhs.as_ref().unwrap(), &LogValue::zero());
    }

    #[test]
    fn abel_fibonacci_spot() {
        // a_k = F_k, b_k = 1: LHS telescopes to F_{n+2} - F_2 through
        // sum F_{k-1}; at n = 4 both sides are 4.
        let a = FiniteSequence::from_fn(1, 6, |k| {
            LogValue::from_rational(Rational::from(&fib(k)))
        });
        let b = FiniteSequence::from_fn(1, 6, |_| LogValue::int(1));
        let rep = abel_check(&a, &b, 4, AbelVariant::Difference).unwrap();
        assert!(rep.outcome.is_equal());
        assert_eq!(rep.lhs.as_ref().unwrap(), &LogValue::int(4));
        assert_eq!(rep.rhs.as_ref().unwrap(), &LogValue::int(4));
    }

    #[test]
    fn abel_short_sequence_is_domain_error() {
        let a = FiniteSequence::from_fn(1, 3, |_| LogValue::int(1));
        assert!(matches!(
            abel_check(&a, &a, 3, AbelVariant::Sum),
            Err(TransformError::Domain(_))
        ));
    }

    #[test]
    fn abel_random_pairs_both_variants() {
        for i in 0..40 {
            let n = 1 + (i % 13);
            let a = random_rational_sequence(1000 + i as u64, 1, (n + 1) as usize);
            let b = random_rational_sequence(2000 + i as u64, 1, (n + 1) as usize);
            for variant in [AbelVariant::Difference, AbelVariant::Sum] {
                let rep = abel_check(&a, &b, n, variant).unwrap();
                assert!(rep.outcome.is_equal(), "abel failed at n={n}, {variant:?}");
            }
        }
    }

    #[test]
    fn transform_of_ones() {
        let sigma = binomial_transform(&constant_one(6)).unwrap();
        assert_eq!(sigma.get(0).unwrap(), &LogValue::int(1));
        for k in 1..=5 {
            assert_eq!(sigma.get(k).unwrap(), &LogValue::zero(), "at {k}");
        }
    }

    #[test]
    fn transform_matches_scaled_gibonacci_form() {
        // s_k = F_{tk+r} / L_t^k at t = 1, r = 0 transforms to
        // (-1)^r (G_0 L_{tk-r} - G_{tk-r}) / L_t^k = -F_k.
        let s = FiniteSequence::from_fn(0, 6, |k| {
            LogValue::from_rational(Rational::from(&fib(k)))
        });
        let sigma = binomial_transform(&s).unwrap();
        assert_eq!(
            sigma.get(3).unwrap(),
            &LogValue::from_rational(Rational::int(-2))
        );
        for k in 0..=5 {
            assert_eq!(
                sigma.get(k).unwrap(),
                &LogValue::from_rational(-Rational::from(&fib(k))),
                "sigma at {k}"
            );
        }
    }

    #[test]
    fn involution_on_random_sequences() {
        for i in 0..30 {
            let len = 2 + (i % 24);
            let s = random_rational_sequence(7000 + i as u64, 0, len);
            let twice = binomial_transform(&binomial_transform(&s).unwrap()).unwrap();
            assert_eq!(twice, s, "involution failed for sequence {i}");
        }
    }

    #[test]
    fn boyad1_holds_for_arbitrary_pairs() {
        for i in 0..25 {
            let n = i % 12;
            let s = random_rational_sequence(500 + i as u64, 0, (n + 1) as usize);
            let sigma = binomial_transform(&s).unwrap();
            let rep = boyad1_check(&s, &sigma, n).unwrap();
            assert!(rep.outcome.is_equal(), "boyad1 failed at n={n}");
        }
    }

    #[test]
    fn pair_mismatch_is_detected() {
        let s = random_rational_sequence(42, 0, 5);
        let not_sigma = random_rational_sequence(43, 0, 5);
        assert_eq!(
            boyad1_check(&s, &not_sigma, 4).unwrap_err(),
            TransformError::PairMismatch
        );
    }

    #[test]
    fn boyad2_is_seed_sensitive() {
        // The displayed relation holds for the Fibonacci seed and is
        // reported as unequal for the Lucas seed on the same pair.
        let s = FiniteSequence::from_fn(0, 4, |k| {
            if k == 1 {
                LogValue::int(1)
            } else {
                LogValue::zero()
            }
        });
        let sigma = binomial_transform(&s).unwrap();
        let rep = boyad2_check(&s, &sigma, &GibonacciSeed::fibonacci(), 1).unwrap();
        assert!(rep.outcome.is_equal());
        let rep = boyad2_check(&s, &sigma, &GibonacciSeed::lucas(), 1).unwrap();
        assert_eq!(rep.outcome, crate::report::Outcome::Unequal);
    }

    #[test]
    fn gouldqu_holds_for_arbitrary_pairs() {
        let params = [
            (HalfInt::from_int(0), HalfInt::from_int(0)),
            (HalfInt::from_int(2), HalfInt::from_int(1)),
            (HalfInt::halves(-3), HalfInt::from_int(2)),
            (HalfInt::halves(-1), HalfInt::from_int(0)),
            (HalfInt::from_int(1), HalfInt::halves(-1)),
        ];
        for i in 0..20 {
            let n = i % 9;
            let t = random_rational_sequence(900 + i as u64, 0, (n + 1) as usize);
            let tau = binomial_transform(&t).unwrap();
            for (m, r) in &params {
                let rep = gouldqu_check(&t, &tau, n, m, r).unwrap();
                assert!(
                    rep.outcome.is_equal(),
                    "gouldqu failed at n={n}, m={m}, r={r}: {rep:?}"
                );
            }
        }
    }

    #[test]
    fn generator_is_deterministic() {
        assert_eq!(
            random_rational_sequence(7, 0, 12),
            random_rational_sequence(7, 0, 12)
        );
    }
}
