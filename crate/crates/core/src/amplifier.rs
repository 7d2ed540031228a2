//! One-sided univariate amplifiers: polynomials that are 1 at the origin and
//! polynomially damped on an integer range.
//!
//! An amplifier for `(range, decay, eps)` satisfies `P(0) = 1` exactly and
//! `|P(t)| <= eps / t^decay` for integer `t` in `[3, range]`. These are the
//! only points the decision-list constructions evaluate (selector values are
//! multiples of 3), so the construction-time validation grid is exactly
//! `{0} + {3..range}`. Wider grids can be checked explicitly through
//! [`validate`].
//!
//! The polynomial is assembled as `gap^decay * (series o gap) * rounds` with
//! every hidden constant exposed in [`AmplifierParams`] and a frozen, exactly
//! re-derivable schedule in the constants file.

use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::poly::{chebyshev, format_rational, parse_rational, IntegerPolynomial, Polynomial};
use crate::{Error, Result};

/// Environment variable naming an external constants file that overrides the
/// embedded schedule.
pub const CONSTANTS_ENV: &str = "PTF_AMPLIFIER_CONSTANTS";

const EMBEDDED_CONSTANTS: &str = include_str!("../constants/amplifier.txt");

/// Every tunable of the three-factor construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmplifierParams {
    /// Upper end of the damped interval; the `n` of the value bounds.
    pub range: u32,
    /// Decay exponent `d` in the `eps / t^d` bound.
    pub decay: u32,
    /// Accuracy budget, exact.
    pub eps: BigRational,
    /// Chebyshev gap index; the gap factor has degree `gap_index + 1`.
    pub gap_index: u32,
    /// Number of correction terms in the truncated series factor.
    pub series_terms: u32,
    /// Round count of the thresholded rounds factor.
    pub rounds: u32,
    /// Rational inner scaling of the rounds factor.
    pub round_scale: BigRational,
    /// Lower summation index of the rounds factor.
    pub round_floor: u32,
    /// Use the literal `u^i (1-u)^i` form instead of the Bernstein basis.
    pub literal_rounds: bool,
}

impl AmplifierParams {
    /// The documented starting schedule: gap index `floor(sqrt(2(range-1)))`,
    /// `4(decay + ceil(log2(1/eps)))` series terms, `8 ceil(log2(1/eps))`
    /// rounds at scale 1/1097, floor `ceil(2.5 * rounds / 1097)`.
    pub fn defaults(range: u32, decay: u32, eps: BigRational) -> Self {
        let log_eps = ceil_log2_inverse(&eps);
        let rounds = (8 * log_eps).max(1);
        let floor = BigRational::new(BigInt::from(5 * rounds), BigInt::from(2194))
            .ceil()
            .to_integer()
            .to_u32()
            .unwrap_or(0);
        AmplifierParams {
            range,
            decay,
            eps,
            gap_index: isqrt(2 * (range - 1)).max(1),
            series_terms: 4 * (decay + log_eps),
            rounds,
            round_scale: BigRational::new(BigInt::one(), BigInt::from(1097)),
            round_floor: floor,
            literal_rounds: false,
        }
    }

    pub fn validate_fields(&self) -> Result<()> {
        if self.range < 3 {
            return Err(Error::InvalidParams("range must be at least 3".into()));
        }
        if self.decay < 1 {
            return Err(Error::InvalidParams("decay must be at least 1".into()));
        }
        if self.eps <= BigRational::zero() || self.eps >= BigRational::one() {
            return Err(Error::InvalidParams("eps must lie in (0, 1)".into()));
        }
        if self.gap_index < 1 || self.rounds < 1 {
            return Err(Error::InvalidParams(
                "gap_index and rounds must be at least 1".into(),
            ));
        }
        if self.round_scale <= BigRational::zero() || self.round_scale >= BigRational::one() {
            return Err(Error::InvalidParams(
                "round_scale must lie in (0, 1)".into(),
            ));
        }
        if self.round_floor > self.rounds {
            return Err(Error::InvalidParams(
                "round_floor must not exceed rounds".into(),
            ));
        }
        Ok(())
    }
}

/// A validated amplifier: the rational polynomial, its integer rescaling, and
/// the validation evidence.
#[derive(Debug, Clone)]
pub struct Amplifier {
    pub params: AmplifierParams,
    pub poly: Polynomial,
    pub int_poly: IntegerPolynomial,
    /// Integerizing constant: `int_poly = scale * poly` exactly.
    pub scale: BigInt,
    pub validation: ValidationReport,
}

impl Amplifier {
    pub fn degree(&self) -> u32 {
        self.poly.degree()
    }

    /// Formal degree contributions of the three factors.
    pub fn degree_parts(&self) -> (u32, u32, u32) {
        let g = self.params.gap_index + 1;
        let rounds_deg = rounds_polynomial(
            self.params.range,
            self.params.rounds,
            &self.params.round_scale,
            self.params.round_floor,
            self.params.literal_rounds,
        )
        .degree();
        (
            self.params.decay * g,
            self.params.series_terms * g,
            rounds_deg,
        )
    }

    /// Base-2 logarithm of the integer weight, for reports.
    pub fn log2_weight(&self) -> f64 {
        log2_bigint(&self.int_poly.weight())
    }

    pub fn report_text(&self) -> String {
        let (a, b, c) = self.degree_parts();
        format!(
            "amplifier range={} decay={} eps={} degree={} (parts {}+{}+{}) log2_weight={:.1} scale_bits={} validated={}",
            self.params.range,
            self.params.decay,
            format_rational(&self.params.eps),
            self.degree(),
            a,
            b,
            c,
            self.log2_weight(),
            self.scale.bits(),
            self.validation.passed,
        )
    }
}

/// One grid point of a validation run.
#[derive(Debug, Clone)]
pub struct PointCheck {
    pub t: BigRational,
    pub value: BigRational,
    /// 1 on the near-1 segment, 0 on the damped segment.
    pub target: BigRational,
    pub bound: BigRational,
    /// `bound - |value - target|`; negative means failure.
    pub margin: BigRational,
    pub pass: bool,
    /// Points in `(1, 2]` carry no bound and pass vacuously.
    pub constrained: bool,
}

/// Exact per-point outcome of checking the two value bounds on a grid.
#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub points: Vec<PointCheck>,
    pub passed: bool,
    pub empty_grid: bool,
}

impl ValidationReport {
    pub fn first_failure(&self) -> Option<&PointCheck> {
        self.points.iter().find(|p| !p.pass)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("t,value,target,bound,margin,pass\n");
        for p in &self.points {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{}",
                format_rational(&p.t),
                format_rational(&p.value),
                format_rational(&p.target),
                format_rational(&p.bound),
                format_rational(&p.margin),
                p.pass
            );
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if self.empty_grid {
            out.push_str("warning: empty validation grid, vacuous pass\n");
        }
        for p in &self.points {
            let _ = writeln!(
                out,
                "t={:<10} {} (margin {})",
                format_rational(&p.t),
                if p.pass { "ok" } else { "FAIL" },
                format_rational(&p.margin),
            );
        }
        let _ = writeln!(
            out,
            "overall: {}",
            if self.passed { "pass" } else { "FAIL" }
        );
        out
    }
}

/// The normalized Chebyshev gap factor.
///
/// Equals 1 at `t = 0` exactly; on `[1, range]` its magnitude is at most the
/// reciprocal of the normalizer. Degree `gap_index + 1`.
pub fn gap_polynomial(range: u32, gap_index: u32) -> Polynomial {
    assert!(range >= 3);
    let n = BigInt::from(range);
    let nm1: BigInt = &n - 1;
    // inner affine map: ((range + 1) - 2t) / (range - 1)
    let inner = Polynomial::constant(BigRational::new(&n + 1, nm1.clone()))
        .add(&Polynomial::var(1).scale(&BigRational::new(BigInt::from(-2), nm1)));
    let t = chebyshev(gap_index + 1).into_poly();
    let numerator = t.compose(&inner).expect("chebyshev is univariate");
    let normalizer = gap_normalizer(range, gap_index);
    numerator.scale(&normalizer.recip())
}

/// Value of the gap factor's normalizing constant,
/// `T_{gap_index+1}((range+1)/(range-1))`.
pub fn gap_normalizer(range: u32, gap_index: u32) -> BigRational {
    let n = BigInt::from(range);
    let x = BigRational::new(&n + 1, &n - 1);
    chebyshev_value(gap_index + 1, &x)
}

/// Evaluate `T_k` at a rational point by the value recurrence.
pub fn chebyshev_value(k: u32, x: &BigRational) -> BigRational {
    let mut prev = BigRational::one();
    if k == 0 {
        return prev;
    }
    let mut cur = x.clone();
    let two_x = x * BigRational::from_integer(BigInt::from(2));
    for _ in 1..k {
        let next = &two_x * &cur - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// The truncated correction series `sum_{i=0..terms} C(i+decay-1, i)(1-t)^i`.
///
/// Integer coefficients, degree `terms`, value 1 at `t = 1`.
pub fn series_polynomial(decay: u32, terms: u32) -> Polynomial {
    let one_minus_t = Polynomial::one().sub(&Polynomial::var(1));
    let mut acc = Polynomial::zero(1);
    let mut pow = Polynomial::one();
    for i in 0..=terms {
        let coeff = if decay == 0 {
            if i == 0 {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        } else {
            binomial(BigInt::from(i + decay - 1), BigInt::from(i))
        };
        acc = acc.add(&pow.scale(&BigRational::from_integer(coeff)));
        if i < terms {
            pow = pow.mul(&one_minus_t);
        }
    }
    acc
}

/// The thresholded rounds factor: a Bernstein tail (or the literal
/// `u^i (1-u)^i` form) applied to a scaled Chebyshev of index
/// `floor(sqrt(range))`.
///
/// With `rounds = 1` and `round_floor = 0` the Bernstein form is identically
/// 1, which switches the factor off.
pub fn rounds_polynomial(
    range: u32,
    rounds: u32,
    round_scale: &BigRational,
    round_floor: u32,
    literal: bool,
) -> Polynomial {
    let m = isqrt(range).max(1);
    let n = BigInt::from(range);
    // inner affine map: 1 + (2 - t)/range = (range + 2 - t)/range
    let inner = Polynomial::constant(BigRational::new(&n + 2, n.clone()))
        .add(&Polynomial::var(1).scale(&BigRational::new(BigInt::from(-1), n)));
    let u = chebyshev(m)
        .into_poly()
        .compose(&inner)
        .expect("chebyshev is univariate")
        .scale(round_scale);
    let one_minus_u = Polynomial::one().sub(&u);

    let mut acc = Polynomial::zero(1);
    if literal {
        // sum C(rounds, i) (u(1-u))^i
        let w = u.mul(&one_minus_u);
        let mut pow = w.power(round_floor);
        for i in round_floor..=rounds {
            let c = binomial(BigInt::from(rounds), BigInt::from(i));
            acc = acc.add(&pow.scale(&BigRational::from_integer(c)));
            if i < rounds {
                pow = pow.mul(&w);
            }
        }
    } else {
        // Bernstein tail: sum C(rounds, i) u^i (1-u)^{rounds-i}
        for i in round_floor..=rounds {
            let c = binomial(BigInt::from(rounds), BigInt::from(i));
            let term = u
                .power(i)
                .mul(&one_minus_u.power(rounds - i))
                .scale(&BigRational::from_integer(c));
            acc = acc.add(&term);
        }
    }
    acc
}

/// Assemble the three factors and validate on the construction grid.
///
/// A validation failure is an error naming the first violated point; it
/// signals that the constants need retuning, never a silent pass.
pub fn build(params: AmplifierParams) -> Result<Amplifier> {
    let amp = build_unchecked(params)?;
    if !amp.validation.passed {
        let bad = amp.validation.first_failure().expect("failed report");
        return Err(Error::AmplifierValidation {
            point: format_rational(&bad.t),
            value: format_rational(&bad.value),
            bound: format_rational(&bad.bound),
        });
    }
    Ok(amp)
}

/// Assemble without failing on validation; the report records the outcome.
pub fn build_unchecked(params: AmplifierParams) -> Result<Amplifier> {
    params.validate_fields()?;
    let gap = gap_polynomial(params.range, params.gap_index);
    let series = series_polynomial(params.decay, params.series_terms);
    let rounds = rounds_polynomial(
        params.range,
        params.rounds,
        &params.round_scale,
        params.round_floor,
        params.literal_rounds,
    );
    let poly = gap
        .power(params.decay)
        .mul(&series.compose(&gap)?)
        .mul(&rounds);
    let (int_poly, scale) = poly.clear_denominators();
    let grid = construction_grid(params.range);
    let validation = validate_poly(&poly, &params, &grid);
    Ok(Amplifier {
        params,
        poly,
        int_poly,
        scale,
        validation,
    })
}

/// Grid of every point the decision-list constructions evaluate:
/// 0 plus the integers 3..=range.
pub fn construction_grid(range: u32) -> Vec<BigRational> {
    let mut g = vec![BigRational::zero()];
    g.extend((3..=range).map(|t| BigRational::from_integer(BigInt::from(t))));
    g
}

/// The integer grid {0, 1} + {3..=range}.
pub fn integer_grid(range: u32) -> Vec<BigRational> {
    let mut g = vec![BigRational::zero(), BigRational::one()];
    g.extend((3..=range).map(|t| BigRational::from_integer(BigInt::from(t))));
    g
}

/// The integer grid plus a density-10 subdivision of [0, 1].
pub fn full_grid(range: u32) -> Vec<BigRational> {
    let mut g: Vec<BigRational> = (0..=10)
        .map(|j| BigRational::new(BigInt::from(j), BigInt::from(10)))
        .collect();
    g.extend((3..=range).map(|t| BigRational::from_integer(BigInt::from(t))));
    g
}

/// Check the two value bounds of an amplifier on an arbitrary rational grid.
///
/// Points in `[0, 1]` must be within `eps` of 1; points in `(2, range]` must
/// have magnitude at most `eps / t^decay`; points in `(1, 2]` carry no bound.
pub fn validate(amp: &Amplifier, grid: &[BigRational]) -> ValidationReport {
    validate_poly(&amp.poly, &amp.params, grid)
}

fn validate_poly(
    poly: &Polynomial,
    params: &AmplifierParams,
    grid: &[BigRational],
) -> ValidationReport {
    let one = BigRational::one();
    let two = BigRational::from_integer(BigInt::from(2));
    let points: Vec<PointCheck> = grid
        .iter()
        .map(|t| {
            let value = poly
                .evaluate_univariate(t)
                .expect("amplifier polynomials are univariate");
            if *t <= one {
                let dev = (&value - &one).abs();
                let margin = &params.eps - &dev;
                PointCheck {
                    t: t.clone(),
                    pass: !margin.is_negative(),
                    margin,
                    value,
                    target: one.clone(),
                    bound: params.eps.clone(),
                    constrained: true,
                }
            } else if *t <= two {
                PointCheck {
                    t: t.clone(),
                    value,
                    target: BigRational::zero(),
                    bound: BigRational::zero(),
                    margin: BigRational::zero(),
                    pass: true,
                    constrained: false,
                }
            } else {
                let bound = &params.eps / rational_pow(t, params.decay);
                let dev = value.abs();
                let margin = &bound - &dev;
                PointCheck {
                    t: t.clone(),
                    pass: !margin.is_negative(),
                    margin,
                    value,
                    target: BigRational::zero(),
                    bound,
                    constrained: true,
                }
            }
        })
        .collect();
    ValidationReport {
        passed: points.iter().all(|p| p.pass),
        empty_grid: points.is_empty(),
        points,
    }
}

/// Tuned parameters for a bucket: the frozen constants file when it has the
/// bucket, otherwise the exact derivation that produced the file.
pub fn tuned_params(range: u32, decay: u32, eps: &BigRational) -> Result<AmplifierParams> {
    if let Some(p) = lookup_constants(range, decay, eps)? {
        return Ok(p);
    }
    derive_params(range, decay, eps)
}

/// Derive the minimal-degree schedule for a bucket by exact search: the
/// series and rounds factors are switched off and the gap index grows until
/// the construction grid validates.
pub fn derive_params(range: u32, decay: u32, eps: &BigRational) -> Result<AmplifierParams> {
    for gap_index in 1..=512 {
        let params = AmplifierParams {
            range,
            decay,
            eps: eps.clone(),
            gap_index,
            series_terms: 0,
            rounds: 1,
            round_scale: BigRational::new(BigInt::one(), BigInt::from(1097)),
            round_floor: 0,
            literal_rounds: false,
        };
        if gap_schedule_passes(&params) {
            return Ok(params);
        }
    }
    Err(Error::InvalidParams(format!(
        "no gap index up to 512 validates range={range} decay={decay} eps={eps}"
    )))
}

/// Exact validation predicate for the derived schedule, computed on Chebyshev
/// values rather than coefficients: for every integer `t` in `[3, range]`,
/// `|T_g(arg_t)|^decay * t^decay <= eps * normalizer^decay`.
fn gap_schedule_passes(params: &AmplifierParams) -> bool {
    let g = params.gap_index + 1;
    let n = BigInt::from(params.range);
    let nm1: BigInt = &n - 1;
    let normalizer = gap_normalizer(params.range, params.gap_index);
    let rhs = &params.eps * rational_pow(&normalizer, params.decay);
    for t in 3..=params.range {
        let arg = BigRational::new(&n + 1 - BigInt::from(2 * t), nm1.clone());
        let val = rational_pow(&chebyshev_value(g, &arg).abs(), params.decay);
        let lhs = val * BigRational::from_integer(BigInt::from(t).pow(params.decay));
        if lhs > rhs {
            return false;
        }
    }
    true
}

/// Render one bucket line of the constants file.
pub fn constants_line(p: &AmplifierParams) -> String {
    format!(
        "range={} decay={} eps={} gap_index={} series_terms={} rounds={} round_scale={} round_floor={} literal_rounds={}",
        p.range,
        p.decay,
        format_rational(&p.eps),
        p.gap_index,
        p.series_terms,
        p.rounds,
        format_rational(&p.round_scale),
        p.round_floor,
        p.literal_rounds,
    )
}

fn parse_constants(text: &str) -> Result<HashMap<(u32, u32, String), AmplifierParams>> {
    let mut map = HashMap::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields: HashMap<&str, &str> = HashMap::new();
        for tok in line.split_whitespace() {
            let (k, v) = tok
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("bad constants token {tok:?}")))?;
            fields.insert(k, v);
        }
        let get = |k: &str| -> Result<&str> {
            fields
                .get(k)
                .copied()
                .ok_or_else(|| Error::Parse(format!("constants line missing {k}: {line:?}")))
        };
        let parse_u32 = |k: &str| -> Result<u32> {
            get(k)?
                .parse()
                .map_err(|e| Error::Parse(format!("bad {k}: {e}")))
        };
        let params = AmplifierParams {
            range: parse_u32("range")?,
            decay: parse_u32("decay")?,
            eps: parse_rational(get("eps")?)?,
            gap_index: parse_u32("gap_index")?,
            series_terms: parse_u32("series_terms")?,
            rounds: parse_u32("rounds")?,
            round_scale: parse_rational(get("round_scale")?)?,
            round_floor: parse_u32("round_floor")?,
            literal_rounds: get("literal_rounds")?
                .parse()
                .map_err(|e| Error::Parse(format!("bad literal_rounds: {e}")))?,
        };
        map.insert(
            (params.range, params.decay, format_rational(&params.eps)),
            params,
        );
    }
    Ok(map)
}

fn lookup_constants(range: u32, decay: u32, eps: &BigRational) -> Result<Option<AmplifierParams>> {
    let text = match std::env::var(CONSTANTS_ENV) {
        Ok(path) => std::fs::read_to_string(path)?,
        Err(_) => EMBEDDED_CONSTANTS.to_string(),
    };
    let map = parse_constants(&text)?;
    Ok(map.get(&(range, decay, format_rational(eps))).cloned())
}

/// Tuned parameters for a bucket, built and validated.
pub fn tuned(range: u32, decay: u32, eps: &BigRational) -> Result<Amplifier> {
    build(tuned_params(range, decay, eps)?)
}

pub(crate) fn rational_pow(r: &BigRational, e: u32) -> BigRational {
    BigRational::new(r.numer().pow(e), r.denom().pow(e))
}

fn isqrt(n: u32) -> u32 {
    let mut r = (n as f64).sqrt() as u32;
    while (r + 1).saturating_mul(r + 1) <= n {
        r += 1;
    }
    while r > 0 && r * r > n {
        r -= 1;
    }
    r
}

fn ceil_log2_inverse(eps: &BigRational) -> u32 {
    // smallest k with 2^k >= 1/eps
    let inv = eps.recip();
    let mut k = 0u32;
    let mut pow = BigRational::one();
    let two = BigRational::from_integer(BigInt::from(2));
    while pow < inv {
        pow *= &two;
        k += 1;
    }
    k
}

pub fn log2_bigint(v: &BigInt) -> f64 {
    if v.is_zero() {
        return 0.0;
    }
    let mag = v.magnitude();
    let bits = mag.bits();
    if bits <= 52 {
        return (mag.to_u64().expect("fits") as f64).log2();
    }
    let shift = bits - 52;
    let top = (mag >> shift).to_u64().expect("52 bits fit");
    (top as f64).log2() + shift as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn gap_is_one_at_origin() {
        for range in [3u32, 9, 16, 25] {
            for gap_index in [1u32, 3, 5] {
                let g = gap_polynomial(range, gap_index);
                assert_eq!(
                    g.evaluate_univariate(&BigRational::zero()).unwrap(),
                    BigRational::one(),
                    "range={range} gap_index={gap_index}"
                );
                assert_eq!(g.degree(), gap_index + 1);
            }
        }
    }

    #[test]
    fn default_gap_normalizer_within_constant_window() {
        // the default gap index puts the normalizer in [5, 55]
        for range in 3..=64u32 {
            let gap_index = isqrt(2 * (range - 1));
            let v = gap_normalizer(range, gap_index);
            assert!(v >= int(5), "range={range}: {v}");
            assert!(v <= int(55), "range={range}: {v}");
        }
    }

    #[test]
    fn gap_values_on_integer_grid_stay_in_normalized_band() {
        // on [1, range] the Chebyshev argument lies in [-1, 1], so values
        // stay within the reciprocal of the normalizer
        for range in [9u32, 16] {
            let gap_index = isqrt(2 * (range - 1));
            let g = gap_polynomial(range, gap_index);
            let band = gap_normalizer(range, gap_index).recip();
            for t in 1..=range {
                let v = g.evaluate_univariate(&int(t as i64)).unwrap().abs();
                assert!(v <= band, "range={range} t={t}: {v}");
            }
        }
    }

    #[test]
    fn series_examples() {
        // zero terms: constant 1
        assert_eq!(series_polynomial(2, 0), Polynomial::one());

        // decay 2, two terms: 1 + 2(1-t) + 3(1-t)^2
        let p = series_polynomial(2, 2);
        let expected = Polynomial::one()
            .add(&Polynomial::one().sub(&Polynomial::var(1)).scale(&int(2)))
            .add(
                &Polynomial::one()
                    .sub(&Polynomial::var(1))
                    .power(2)
                    .scale(&int(3)),
            );
        assert_eq!(p, expected);

        // value 1 at t = 1 for any parameters
        for decay in 1..=4u32 {
            for terms in 0..=6u32 {
                let p = series_polynomial(decay, terms);
                assert_eq!(
                    p.evaluate_univariate(&BigRational::one()).unwrap(),
                    BigRational::one()
                );
            }
        }
    }

    #[test]
    fn rounds_degenerate_is_one() {
        let p = rounds_polynomial(16, 1, &rat(1, 1097), 0, false);
        assert_eq!(p, Polynomial::one());
    }

    #[test]
    fn rounds_inner_chebyshev_at_least_one_on_low_segment() {
        // inner argument 1 + (2-t)/range >= 1 for t in [0, 2], where
        // Chebyshev values are >= 1
        let m = isqrt(16);
        for t in [int(0), rat(1, 2), int(1), rat(3, 2), int(2)] {
            let arg = int(1) + (int(2) - &t) / int(16);
            assert!(chebyshev_value(m, &arg) >= BigRational::one());
        }
    }

    #[test]
    fn rounds_literal_form_differs() {
        let bern = rounds_polynomial(9, 2, &rat(1, 4), 1, false);
        let lit = rounds_polynomial(9, 2, &rat(1, 4), 1, true);
        assert_ne!(bern, lit);
    }

    #[test]
    fn tuned_buckets_validate_with_small_degree() {
        for range in [9u32, 16, 25, 36] {
            let amp = tuned(range, 2, &rat(1, 100)).unwrap();
            assert!(amp.validation.passed);
            // P(0) = 1 exactly
            assert_eq!(
                amp.poly.evaluate_univariate(&BigRational::zero()).unwrap(),
                BigRational::one()
            );
            let budget = (10.0 * (range as f64).sqrt()).floor() as u32;
            assert!(
                amp.degree() <= budget,
                "range={range}: degree {} over {budget}",
                amp.degree()
            );
        }
    }

    #[test]
    fn integer_rescaling_is_exact_term_by_term() {
        let amp = tuned(9, 2, &rat(1, 100)).unwrap();
        let scaled = amp
            .poly
            .scale(&BigRational::from_integer(amp.scale.clone()));
        assert_eq!(&scaled, amp.int_poly.as_poly());
        for (_, c) in amp.int_poly.as_poly().terms() {
            assert!(c.is_integer());
        }
    }

    #[test]
    fn degree_parts_match_total() {
        let amp = tuned(16, 2, &rat(1, 200)).unwrap();
        let (a, b, c) = amp.degree_parts();
        assert_eq!(amp.degree(), a + b + c);
    }

    #[test]
    fn validation_failure_names_the_point() {
        // deliberately too small a gap index
        let params = AmplifierParams {
            range: 16,
            decay: 2,
            eps: rat(1, 100),
            gap_index: 1,
            series_terms: 0,
            rounds: 1,
            round_scale: rat(1, 1097),
            round_floor: 0,
            literal_rounds: false,
        };
        match build(params) {
            Err(Error::AmplifierValidation { point, .. }) => {
                assert!(!point.is_empty());
            }
            other => panic!("expected validation failure, got {other:?}"),
        }
    }

    #[test]
    fn empty_grid_is_vacuous_pass_with_warning() {
        let amp = tuned(9, 2, &rat(1, 100)).unwrap();
        let rep = validate(&amp, &[]);
        assert!(rep.passed);
        assert!(rep.empty_grid);
        assert!(rep.to_text().contains("warning"));
    }

    #[test]
    fn segment_between_one_and_two_is_unconstrained() {
        let amp = tuned(9, 2, &rat(1, 100)).unwrap();
        let rep = validate(&amp, &[rat(3, 2)]);
        assert!(rep.passed);
        assert!(!rep.points[0].constrained);
    }

    #[test]
    fn full_grid_fails_only_on_the_near_one_segment() {
        // the tuned schedule trades the near-1 bound away from t = 0; on the
        // wide grid every failure sits in (0, 1] and the damped range is
        // clean
        let amp = tuned(16, 2, &rat(1, 100)).unwrap();
        let rep = validate(&amp, &full_grid(16));
        assert!(!rep.passed);
        for p in rep.points.iter().filter(|p| !p.pass) {
            assert!(p.t > BigRational::zero() && p.t <= int(1), "t={}", p.t);
        }
    }

    #[test]
    fn constants_file_matches_derivation() {
        let map = parse_constants(EMBEDDED_CONSTANTS).unwrap();
        assert!(!map.is_empty());
        for params in map.values() {
            let derived = derive_params(params.range, params.decay, &params.eps).unwrap();
            assert_eq!(
                &derived,
                params,
                "stale constants for {}",
                constants_line(params)
            );
        }
    }

    #[test]
    fn constants_round_trip() {
        let p = derive_params(12, 2, &rat(1, 200)).unwrap();
        let line = constants_line(&p);
        let map = parse_constants(&line).unwrap();
        assert_eq!(map.values().next().unwrap(), &p);
    }

    #[test]
    fn defaults_follow_documented_schedule() {
        let p = AmplifierParams::defaults(16, 2, rat(1, 100));
        assert_eq!(p.gap_index, 5); // floor(sqrt(30))
        assert_eq!(p.series_terms, 4 * (2 + 7));
        assert_eq!(p.rounds, 56);
        assert_eq!(p.round_scale, rat(1, 1097));
        assert_eq!(p.round_floor, 1); // ceil(2.5 * 56 / 1097)
    }

    #[test]
    fn log2_weight_is_usable() {
        let amp = tuned(9, 2, &rat(1, 100)).unwrap();
        let w = amp.log2_weight();
        assert!(w.is_finite() && w > 0.0);
        let bits = amp.int_poly.weight().bits() as f64;
        assert!((w - bits).abs() <= 1.0 + 1e-9);
    }
}
