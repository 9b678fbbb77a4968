//! Exact integer Fibonacci, Lucas, and gibonacci sequences over all of Z.
//!
//! Values are produced by cached linear iteration: each worker thread keeps
//! its own forward and backward tables per seed, so lookups behave as pure
//! functions and sweeps stay deterministic regardless of thread count.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exact::ParseError;

/// Initial values (G_0, G_1) of a gibonacci sequence; not both zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GibonacciSeed {
    pub g0: BigInt,
    pub g1: BigInt,
}

impl GibonacciSeed {
    pub fn new(g0: i64, g1: i64) -> Self {
        assert!(
            g0 != 0 || g1 != 0,
            "gibonacci seed must not be (0, 0)"
        );
        GibonacciSeed {
            g0: BigInt::from(g0),
            g1: BigInt::from(g1),
        }
    }

    pub fn fibonacci() -> Self {
        GibonacciSeed::new(0, 1)
    }

    pub fn lucas() -> Self {
        GibonacciSeed::new(2, 1)
    }
}

impl fmt::Display for GibonacciSeed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.g0, self.g1)
    }
}

impl FromStr for GibonacciSeed {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let bad = || ParseError(format!("invalid seed (expected g0:g1): {s:?}"));
        let (a, b) = s.split_once(':').ok_or_else(bad)?;
        let g0 = BigInt::from_str(a.trim()).map_err(|_| bad())?;
        let g1 = BigInt::from_str(b.trim()).map_err(|_| bad())?;
        if g0.is_zero() && g1.is_zero() {
            return Err(bad());
        }
        Ok(GibonacciSeed { g0, g1 })
    }
}

/// Forward and backward value tables for one seed. `forward[j] = G_j` for
/// j >= 0 and `backward[j] = G_{-1-j}`, both extended on demand so that
/// G_j = G_{j-1} + G_{j-2} holds across the whole cached range.
#[derive(Debug, Clone)]
pub struct SequenceCache {
    seed: GibonacciSeed,
    forward: Vec<BigInt>,
    backward: Vec<BigInt>,
}

impl SequenceCache {
    pub fn new(seed: GibonacciSeed) -> Self {
        let forward = vec![seed.g0.clone(), seed.g1.clone()];
        SequenceCache {
            seed,
            forward,
            backward: Vec::new(),
        }
    }

    pub fn seed(&self) -> &GibonacciSeed {
        &self.seed
    }

    pub fn get(&mut self, j: i64) -> BigInt {
        if j >= 0 {
            let j = j as usize;
            while self.forward.len() <= j {
                let n = self.forward.len();
                let next = &self.forward[n - 1] + &self.forward[n - 2];
                self.forward.push(next);
            }
            self.forward[j].clone()
        } else {
            // Backward step: G_{j-2} = G_j - G_{j-1}.
            let idx = (-j - 1) as usize;
            while self.backward.len() <= idx {
                let (a, b) = match self.backward.len() {
                    0 => (self.forward[1].clone(), self.forward[0].clone()),
                    1 => (self.forward[0].clone(), self.backward[0].clone()),
                    n => (self.backward[n - 2].clone(), self.backward[n - 1].clone()),
                };
                self.backward.push(a - b);
            }
            self.backward[idx].clone()
        }
    }
}

thread_local! {
    static FIB: RefCell<SequenceCache> =
        RefCell::new(SequenceCache::new(GibonacciSeed::fibonacci()));
    static LUCAS: RefCell<SequenceCache> =
        RefCell::new(SequenceCache::new(GibonacciSeed::lucas()));
    static GIB: RefCell<HashMap<GibonacciSeed, SequenceCache>> =
        RefCell::new(HashMap::new());
}

/// F_j for any integer j; negative indices via F_{-j} = (-1)^{j-1} F_j.
pub fn fib(j: i64) -> BigInt {
    if j >= 0 {
        FIB.with(|c| c.borrow_mut().get(j))
    } else {
        let v = fib(-j);
        if (-j) % 2 == 1 {
            v
        } else {
            -v
        }
    }
}

/// L_j for any integer j; negative indices via L_{-j} = (-1)^j L_j.
pub fn lucas(j: i64) -> BigInt {
    if j >= 0 {
        LUCAS.with(|c| c.borrow_mut().get(j))
    } else {
        let v = lucas(-j);
        if (-j) % 2 == 0 {
            v
        } else {
            -v
        }
    }
}

/// G_j for the given seed; backward indices by reversed recurrence.
pub fn gib(seed: &GibonacciSeed, j: i64) -> BigInt {
    GIB.with(|map| {
        let mut map = map.borrow_mut();
        let cache = map
            .entry(seed.clone())
            .or_insert_with(|| SequenceCache::new(seed.clone()));
        cache.get(j)
    })
}

/// Product of `count` consecutive gibonacci values starting at `start`;
/// the empty product is 1.
pub fn gib_product(seed: &GibonacciSeed, start: i64, count: i64) -> BigInt {
    assert!(count >= 0, "gib_product needs a non-negative count");
    let mut acc = BigInt::from(1);
    for j in 0..count {
        acc *= gib(seed, start + j);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fib_base_and_reflection() {
        assert_eq!(fib(0), BigInt::from(0));
        assert_eq!(fib(1), BigInt::from(1));
        assert_eq!(fib(10), BigInt::from(55));
        assert_eq!(fib(-3), BigInt::from(2));
        for j in 0..=100 {
            let lhs = fib(-j);
            let sign = if (j - 1).rem_euclid(2) == 0 { 1 } else { -1 };
            assert_eq!(lhs, fib(j) * sign, "fib reflection at {j}");
        }
    }

    #[test]
    fn lucas_base_and_reflection() {
        assert_eq!(lucas(0), BigInt::from(2));
        assert_eq!(lucas(5), BigInt::from(11));
        assert_eq!(lucas(-4), BigInt::from(7));
        for j in 0..=100 {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            assert_eq!(lucas(-j), lucas(j) * sign, "lucas reflection at {j}");
        }
    }

    #[test]
    fn gib_matches_named_sequences() {
        let f = GibonacciSeed::fibonacci();
        let l = GibonacciSeed::lucas();
        assert_eq!(gib(&f, 7), BigInt::from(13));
        assert_eq!(gib(&l, 5), BigInt::from(11));
        for j in -30..=60 {
            assert_eq!(gib(&f, j), fib(j));
            assert_eq!(gib(&l, j), lucas(j));
        }
    }

    #[test]
    fn gib_backward_step() {
        let seed = GibonacciSeed::new(1, 3);
        assert_eq!(gib(&seed, -1), BigInt::from(2));
    }

    #[test]
    fn recurrence_holds_everywhere() {
        let seeds = [
            GibonacciSeed::fibonacci(),
            GibonacciSeed::lucas(),
            GibonacciSeed::new(1, 1),
            GibonacciSeed::new(3, -1),
            GibonacciSeed::new(-2, 5),
        ];
        for seed in &seeds {
            for j in -50..=200 {
                assert_eq!(
                    gib(seed, j),
                    gib(seed, j - 1) + gib(seed, j - 2),
                    "recurrence at {j} for seed {seed}"
                );
            }
        }
    }

    #[test]
    fn gib_products() {
        assert_eq!(
            gib_product(&GibonacciSeed::fibonacci(), 1, 4),
            BigInt::from(6)
        );
        assert_eq!(gib_product(&GibonacciSeed::new(3, -1), 5, 0), BigInt::from(1));
        assert_eq!(gib_product(&GibonacciSeed::lucas(), 0, 2), BigInt::from(2));
    }

    #[test]
    fn howard_cross_checks() {
        for a in 0..=20i64 {
            for b in 0..=20i64 {
                let lhs = fib(a + b).pow(2) - fib(a - b).pow(2);
                assert_eq!(lhs, fib(2 * a) * fib(2 * b), "squares at ({a},{b})");
                let lhs = lucas(a + b).pow(2) - lucas(a - b).pow(2);
                assert_eq!(
                    lhs,
                    fib(2 * a) * fib(2 * b) * 5,
                    "lucas squares at ({a},{b})"
                );
            }
        }
    }

    #[test]
    fn howard_three_index() {
        for a in 0..=12i64 {
            for b in 0..=12i64 {
                for c in 0..=12i64 {
                    let sign = if (a + 1) % 2 == 0 { 1 } else { -1 };
                    assert_eq!(
                        fib(a) * fib(a + 2 * b + c),
                        fib(a + b + c) * fib(a + b) + fib(b) * fib(b + c) * sign,
                        "three-index at ({a},{b},{c})"
                    );
                }
            }
        }
    }
}
