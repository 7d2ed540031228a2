//! Exhaustive ground-truth verification of sign representations and
//! pointwise approximations over enumerable domains.
//!
//! Multilinear polynomials are evaluated by submask accumulation: a term
//! contributes at a point exactly when its support is contained in the
//! point's set bits, so the value at `x` is a sum over submasks of `x`. That
//! makes a sweep over the cube cost `3^n` map lookups instead of
//! `2^n * terms`. Sweeps run in parallel over point chunks and merge
//! deterministically: the counterexample with the smallest enumeration index
//! wins.

use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::dlist::{mask_to_bitstring, mask_to_bools, DecisionList, Domain, ModifiedDecisionList};
use crate::poly::{format_rational, Polynomial};
use crate::Result;

/// Why a point failed verification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailureKind {
    /// Polynomial sign disagrees with the list output.
    WrongSign,
    /// Polynomial evaluates to zero; zero is never a valid sign value.
    ZeroSign,
    /// Pointwise deviation exceeds the approximation budget.
    EpsExceeded,
}

/// First failing point of a sweep, in enumeration order.
#[derive(Debug, Clone)]
pub struct Counterexample {
    /// Enumeration index of the point.
    pub index: usize,
    pub mask: u64,
    pub n: u32,
    pub expected: String,
    pub got: String,
    pub kind: FailureKind,
}

impl Counterexample {
    pub fn bitstring(&self) -> String {
        mask_to_bitstring(self.mask, self.n)
    }
}

/// Outcome of an exhaustive sweep.
#[derive(Debug, Clone)]
pub struct VerifyOutcome {
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
    pub points_checked: u64,
    /// Largest observed |list - polynomial| deviation (approximation sweeps).
    pub max_deviation: Option<BigRational>,
}

impl VerifyOutcome {
    fn pass(points: u64, max_deviation: Option<BigRational>) -> Self {
        VerifyOutcome {
            passed: true,
            counterexample: None,
            points_checked: points,
            max_deviation,
        }
    }

    fn fail(points: u64, ce: Counterexample, max_deviation: Option<BigRational>) -> Self {
        VerifyOutcome {
            passed: false,
            counterexample: Some(ce),
            points_checked: points,
            max_deviation,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if self.passed {
            let _ = writeln!(out, "pass: {} points checked", self.points_checked);
        } else {
            let ce = self.counterexample.as_ref().unwrap();
            let _ = writeln!(
                out,
                "FAIL at point {} (x = {}): expected {}, got {} ({:?})",
                ce.index,
                ce.bitstring(),
                ce.expected,
                ce.got,
                ce.kind
            );
        }
        if let Some(d) = &self.max_deviation {
            let _ = writeln!(out, "max deviation: {}", format_rational(d));
        }
        out
    }

    /// One benchmark-table row: `label,passed,points,detail`.
    pub fn csv_row(&self, label: &str) -> String {
        let detail = match &self.counterexample {
            None => String::new(),
            Some(ce) => format!("{}@{}", ce.bitstring(), ce.index),
        };
        format!(
            "{},{},{},{}\n",
            label, self.passed, self.points_checked, detail
        )
    }
}

/// Degree, weight, and term count of a polynomial.
pub fn measure(p: &Polynomial) -> (u32, BigRational, usize) {
    (p.degree(), p.weight(), p.term_count())
}

/// Scaled-integer evaluator over bitmask points.
///
/// Holds `denom * p` as integer numerators keyed by support mask, so exact
/// evaluation never touches rational reduction in the sweep's inner loop.
pub struct MaskEvaluator {
    /// Common denominator: stored values are `denom * coefficient`.
    pub denom: BigInt,
    terms: HashMap<u64, BigInt>,
    /// Sum of |scaled coefficients|; bounds every scaled value.
    pub scaled_weight: BigInt,
    multilinear: bool,
    fallback: Option<Polynomial>,
}

impl MaskEvaluator {
    pub fn new(p: &Polynomial) -> Self {
        match p.multilinear_masks() {
            Some(masks) => {
                let mut denom = BigInt::one();
                for (_, c) in &masks {
                    denom = denom.lcm(c.denom());
                }
                let mut terms = HashMap::with_capacity(masks.len());
                let mut scaled_weight = BigInt::zero();
                for (m, c) in masks {
                    let scaled = c.numer() * (&denom / c.denom());
                    scaled_weight += scaled.abs();
                    terms.insert(m, scaled);
                }
                MaskEvaluator {
                    denom,
                    terms,
                    scaled_weight,
                    multilinear: true,
                    fallback: None,
                }
            }
            None => MaskEvaluator {
                denom: BigInt::one(),
                terms: HashMap::new(),
                scaled_weight: BigInt::zero(),
                multilinear: false,
                fallback: Some(p.clone()),
            },
        }
    }

    /// `denom * p(x)` as an exact integer.
    pub fn eval_scaled(&self, x: u64) -> BigInt {
        if self.multilinear {
            let mut acc = BigInt::zero();
            let mut s = x;
            loop {
                if let Some(c) = self.terms.get(&s) {
                    acc += c;
                }
                if s == 0 {
                    break;
                }
                s = (s - 1) & x;
            }
            debug_assert!(
                acc.abs() <= self.scaled_weight,
                "value exceeds weight bound"
            );
            acc
        } else {
            let p = self.fallback.as_ref().unwrap();
            let bools = mask_to_bools(x, p.nvars());
            let v = p.evaluate(&bools).expect("point covers all variables");
            debug_assert!(v.denom().is_one(), "fallback path expects integer values");
            v.to_integer()
        }
    }

    pub fn eval(&self, x: u64) -> BigRational {
        BigRational::new(self.eval_scaled(x), self.denom.clone())
    }
}

/// Check `sign(p(x)) = L(x)` and `p(x) != 0` at every point of the domain.
///
/// The first counterexample in enumeration order is reported; a zero value is
/// a failure of kind [`FailureKind::ZeroSign`].
pub fn verify_sign(
    p: &Polynomial,
    list: &DecisionList,
    dom: &Domain,
    cap: u64,
) -> Result<VerifyOutcome> {
    let points = dom.points(cap)?;
    let eval = MaskEvaluator::new(p);
    let first_bad = sweep_first(&points, |&mask| {
        let v = eval.eval_scaled(mask);
        let expected = list.eval_mask(mask);
        if v.is_zero() {
            Some((mask, "0".to_string(), FailureKind::ZeroSign, expected))
        } else {
            let got: i8 = if v.is_positive() { 1 } else { -1 };
            if got != expected {
                Some((mask, got.to_string(), FailureKind::WrongSign, expected))
            } else {
                None
            }
        }
    });
    Ok(match first_bad {
        None => VerifyOutcome::pass(points.len() as u64, None),
        Some((index, (mask, got, kind, expected))) => VerifyOutcome::fail(
            points.len() as u64,
            Counterexample {
                index,
                mask,
                n: dom.n(),
                expected: expected.to_string(),
                got,
                kind,
            },
            None,
        ),
    })
}

/// Check `|L(x) - p(x)| <= eps` at every point; reports the maximum observed
/// deviation alongside the outcome.
pub fn verify_eps(
    p: &Polynomial,
    list: &ModifiedDecisionList,
    dom: &Domain,
    eps: &BigRational,
    cap: u64,
) -> Result<VerifyOutcome> {
    let points = dom.points(cap)?;
    let eval = MaskEvaluator::new(p);
    // |L(x) - num/denom| <= a/b  <=>  b * |L(x)*denom - num| <= a * denom
    let bound = eps.numer() * &eval.denom;
    let eps_denom = eps.denom().clone();

    let per_point = |&mask: &u64| -> (BigInt, Option<(u64, String)>) {
        let num = eval.eval_scaled(mask);
        let target = BigInt::from(list.eval_mask(mask)) * &eval.denom;
        let dev_scaled = (target - num).abs();
        let bad = if &dev_scaled * &eps_denom > bound {
            Some((
                mask,
                format_rational(&BigRational::new(dev_scaled.clone(), eval.denom.clone())),
            ))
        } else {
            None
        };
        (dev_scaled, bad)
    };

    type ChunkOutcome = (BigInt, Option<(usize, (u64, String))>);
    let chunk_size = 4096;
    let merged: Vec<ChunkOutcome> = points
        .par_chunks(chunk_size)
        .enumerate()
        .map(|(ci, chunk)| {
            let mut max_dev = BigInt::zero();
            let mut first: Option<(usize, (u64, String))> = None;
            for (i, mask) in chunk.iter().enumerate() {
                let (dev, bad) = per_point(mask);
                if dev > max_dev {
                    max_dev = dev;
                }
                if first.is_none() {
                    if let Some(b) = bad {
                        first = Some((ci * chunk_size + i, b));
                    }
                }
            }
            (max_dev, first)
        })
        .collect();

    let mut max_dev = BigInt::zero();
    let mut first: Option<(usize, (u64, String))> = None;
    for (dev, bad) in merged {
        if dev > max_dev {
            max_dev = dev;
        }
        if let Some(b) = bad {
            if first.as_ref().is_none_or(|f| b.0 < f.0) {
                first = Some(b);
            }
        }
    }
    let max_deviation = Some(BigRational::new(max_dev, eval.denom.clone()));
    Ok(match first {
        None => VerifyOutcome::pass(points.len() as u64, max_deviation),
        Some((index, (mask, got))) => VerifyOutcome::fail(
            points.len() as u64,
            Counterexample {
                index,
                mask,
                n: dom.n(),
                expected: format!("deviation <= {}", format_rational(eps)),
                got,
                kind: FailureKind::EpsExceeded,
            },
            max_deviation,
        ),
    })
}

/// Sign check on a uniform sample of the domain, for sizes beyond the
/// enumeration cap. Sampling never substitutes for an exhaustive run; it
/// only screens.
pub fn verify_sign_sampled(
    p: &Polynomial,
    list: &DecisionList,
    dom: &Domain,
    samples: u64,
    seed: u64,
) -> Result<VerifyOutcome> {
    use num_traits::ToPrimitive;
    use rand::{Rng, SeedableRng};

    let n = dom.n();
    let eval = MaskEvaluator::new(p);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);

    // cumulative weight-class sizes for uniform ball draws
    let ball_cdf: Option<Vec<u128>> = match *dom {
        Domain::FullCube(_) => None,
        Domain::HammingBall { n, k } => {
            let mut acc = 0u128;
            Some(
                (0..=k.min(n))
                    .map(|w| {
                        acc += num_integer::binomial(
                            num_bigint::BigInt::from(n),
                            num_bigint::BigInt::from(w),
                        )
                        .to_u128()
                        .expect("class size fits u128");
                        acc
                    })
                    .collect(),
            )
        }
    };

    for index in 0..samples {
        let mask = match &ball_cdf {
            None => rng.gen::<u64>() & ((1u64 << n) - 1),
            Some(cdf) => {
                let total = *cdf.last().unwrap();
                let r = rng.gen_range(0..total);
                let w = cdf.partition_point(|&c| c <= r) as u32;
                // uniform w-subset of [n]
                let mut mask = 0u64;
                let mut chosen = 0;
                for pos in 0..n {
                    let remaining = n - pos;
                    let needed = w - chosen;
                    if needed > 0 && rng.gen_range(0..remaining) < needed {
                        mask |= 1 << pos;
                        chosen += 1;
                    }
                }
                mask
            }
        };
        let v = eval.eval_scaled(mask);
        let expected = list.eval_mask(mask);
        let bad = if v.is_zero() {
            Some(("0".to_string(), FailureKind::ZeroSign))
        } else {
            let got: i8 = if v.is_positive() { 1 } else { -1 };
            (got != expected).then(|| (got.to_string(), FailureKind::WrongSign))
        };
        if let Some((got, kind)) = bad {
            return Ok(VerifyOutcome::fail(
                index + 1,
                Counterexample {
                    index: index as usize,
                    mask,
                    n,
                    expected: expected.to_string(),
                    got,
                    kind,
                },
                None,
            ));
        }
    }
    Ok(VerifyOutcome::pass(samples, None))
}

/// Run `check` over every point in parallel chunks; return the failure with
/// the smallest enumeration index.
fn sweep_first<T: Send>(
    points: &[u64],
    check: impl Fn(&u64) -> Option<T> + Sync,
) -> Option<(usize, T)> {
    let chunk_size = 4096;
    points
        .par_chunks(chunk_size)
        .enumerate()
        .filter_map(|(ci, chunk)| {
            chunk
                .iter()
                .enumerate()
                .find_map(|(i, m)| check(m).map(|t| (ci * chunk_size + i, t)))
        })
        .min_by_key(|(i, _)| *i)
}
