//! Assembly of integer sign representations for decision lists.
//!
//! A modified decision list is approximated by the sum of its arithmetized
//! literals, each gated by an amplifier evaluated at the selector form of its
//! position. Selector values at 0/1 points are `3 * (satisfied prefix
//! literals)`, so the gate sees 0 exactly at positions that are reached and
//! values `>= 3` at positions already passed. A full decision list is split
//! into blocks whose approximators are combined with base-3 weights; base-3
//! dominance makes the first firing block determine the sign.
//!
//! Composing an amplifier with a selector is done without formal expansion:
//! for 0/1-valued gates `y_j`, a univariate `G` applied to `y_1 + ... + y_m`
//! equals `sum_r (forward difference)^r G(0) * e_r(y)`, where `e_r` is the
//! elementary symmetric polynomial. The `e_r` are built by one incremental
//! pass over the prefix, keeping everything multilinear and sparse. On a
//! Hamming ball, monomials with more distinct variables than the radius
//! vanish identically and are dropped as they appear.

use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::amplifier::{self, Amplifier};
use crate::dlist::{DecisionList, Domain, Literal, ModifiedDecisionList};
use crate::poly::{IntegerPolynomial, Monomial, Polynomial};
use crate::verify::{MaskEvaluator, VerifyOutcome};
use crate::{Error, Result};

/// Approximation budget used for the integerized inner construction.
pub fn inner_eps() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(100))
}

/// The 0/1-valued linear polynomial matching a literal's truth value.
pub fn arithmetize(lit: &Literal) -> Polynomial {
    if lit.negated {
        Polynomial::one().sub(&Polynomial::var(lit.var))
    } else {
        Polynomial::var(lit.var)
    }
}

/// The linear selector form of position `i`: three times the number of
/// satisfied literals before `i`. Zero exactly when position `i` is reached.
#[derive(Debug, Clone)]
pub struct SelectorForm {
    pub index: usize,
    pub linear: Polynomial,
}

/// Build the selector for 1-based position `i` of a modified list.
pub fn selector(list: &ModifiedDecisionList, i: usize) -> SelectorForm {
    assert!(i >= 1 && i <= list.len(), "selector position out of range");
    let three = BigRational::from_integer(BigInt::from(3));
    let mut linear = Polynomial::zero(list.n);
    for (lit, _) in &list.items[..i - 1] {
        linear = linear.add(&arithmetize(lit).scale(&three));
    }
    SelectorForm { index: i, linear }
}

/// Largest selector value reachable on the domain, maximized over the given
/// positions. Grouping prefix occurrences by variable makes this a top-k
/// selection: the value at `x` is `3(sum_v m_v + sum_v x_v (p_v - m_v))` with
/// `p_v`/`m_v` the positive/negated occurrence counts.
fn max_selector_value(list: &ModifiedDecisionList, positions: &[usize], dom: &Domain) -> u32 {
    let mut best = 0u32;
    for &i in positions {
        let mut pos_occ: HashMap<u32, i64> = HashMap::new();
        let mut neg_occ: HashMap<u32, i64> = HashMap::new();
        for (lit, _) in &list.items[..i - 1] {
            if lit.negated {
                *neg_occ.entry(lit.var).or_insert(0) += 1;
            } else {
                *pos_occ.entry(lit.var).or_insert(0) += 1;
            }
        }
        let base: i64 = neg_occ.values().sum();
        let mut gains: Vec<i64> = Vec::new();
        let vars: std::collections::BTreeSet<u32> =
            pos_occ.keys().chain(neg_occ.keys()).copied().collect();
        for v in vars {
            let g = pos_occ.get(&v).copied().unwrap_or(0) - neg_occ.get(&v).copied().unwrap_or(0);
            if g > 0 {
                gains.push(g);
            }
        }
        gains.sort_unstable_by(|a, b| b.cmp(a));
        let take = match *dom {
            Domain::FullCube(_) => gains.len(),
            Domain::HammingBall { k, .. } => (k as usize).min(gains.len()),
        };
        let total = base + gains[..take].iter().sum::<i64>();
        best = best.max(3 * total as u32);
    }
    best
}

/// Whether some domain point falsifies every literal before position `i`.
///
/// Falsifying a positive literal forces its variable to 0, a negated literal
/// forces it to 1. Infeasible when a variable is forced both ways, or when
/// the forced ones exceed the ball radius. Positions that are infeasible are
/// never reached on the ball and their terms can be dropped.
pub fn feasible_on_ball(list: &ModifiedDecisionList, i: usize, k: u32) -> bool {
    let mut forced_zero: std::collections::BTreeSet<u32> = Default::default();
    let mut forced_one: std::collections::BTreeSet<u32> = Default::default();
    for (lit, _) in &list.items[..i - 1] {
        if lit.negated {
            forced_one.insert(lit.var);
        } else {
            forced_zero.insert(lit.var);
        }
    }
    if forced_zero.intersection(&forced_one).next().is_some() {
        return false;
    }
    forced_one.len() as u64 <= k as u64
}

/// Sparse multilinear accumulator over support masks with integer
/// coefficients; carrier for the elementary symmetric pass.
#[derive(Debug, Clone, Default)]
struct IntMaskPoly {
    terms: HashMap<u64, i64>,
}

impl IntMaskPoly {
    fn one() -> Self {
        let mut terms = HashMap::new();
        terms.insert(0u64, 1i64);
        IntMaskPoly { terms }
    }

    fn add_term(&mut self, mask: u64, c: i64) {
        let e = self.terms.entry(mask).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&mask);
        }
    }

    /// `self * y` where `y` is an arithmetized literal, truncating monomials
    /// with more distinct variables than `max_degree`.
    fn mul_literal(&self, lit: &Literal, max_degree: Option<u32>) -> IntMaskPoly {
        let bit = 1u64 << (lit.var - 1);
        let mut out = IntMaskPoly::default();
        for (&mask, &c) in &self.terms {
            let grown = mask | bit;
            let fits = max_degree.is_none_or(|d| grown.count_ones() <= d);
            if lit.negated {
                out.add_term(mask, c);
                if fits {
                    out.add_term(grown, -c);
                }
            } else if fits {
                out.add_term(grown, c);
            }
        }
        out
    }
}

/// Rational multilinear accumulator over support masks.
#[derive(Debug, Clone, Default)]
struct RatMaskPoly {
    terms: HashMap<u64, BigRational>,
}

impl RatMaskPoly {
    fn add_term(&mut self, mask: u64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mask) {
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::hash_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn add_scaled(&mut self, other: &IntMaskPoly, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        for (&mask, &k) in &other.terms {
            self.add_term(mask, c * BigRational::from_integer(BigInt::from(k)));
        }
    }

    fn mul_literal(&self, lit: &Literal, max_degree: Option<u32>) -> RatMaskPoly {
        let bit = 1u64 << (lit.var - 1);
        let mut out = RatMaskPoly::default();
        for (mask, c) in &self.terms {
            let grown = mask | bit;
            let fits = max_degree.is_none_or(|d| grown.count_ones() <= d);
            if lit.negated {
                out.add_term(*mask, c.clone());
                if fits {
                    out.add_term(grown, -c.clone());
                }
            } else if fits {
                out.add_term(grown, c.clone());
            }
        }
        out
    }

    fn into_polynomial(self, nvars: u32) -> Polynomial {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (mask, c) in self.terms {
            let pairs: Vec<(u32, u32)> = (0..64)
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| (b + 1, 1))
                .collect();
            terms.push((Monomial::from_pairs(&pairs), c));
        }
        Polynomial::from_terms(terms, nvars)
    }
}

/// Forward differences `c_r = (difference)^r G(0)` of the amplifier evaluated
/// at selector values `G(s) = P(3s)`, for `r = 0..=m`.
fn gate_differences(amp: &Amplifier, m: usize) -> Vec<BigRational> {
    let three = BigRational::from_integer(BigInt::from(3));
    let mut values: Vec<BigRational> = (0..=m)
        .map(|s| {
            let t = &three * BigRational::from_integer(BigInt::from(s as u32));
            amp.poly
                .evaluate_univariate(&t)
                .expect("amplifier is univariate")
        })
        .collect();
    // in-place difference table; after step r, values[r] = c_r
    let mut out = Vec::with_capacity(m + 1);
    out.push(values[0].clone());
    for r in 1..=m {
        for j in (r..=m).rev() {
            let prev = values[j - 1].clone();
            values[j] -= prev;
        }
        out.push(values[r].clone());
    }
    out
}

/// The rational pointwise approximator of a modified decision list, plus the
/// construction figures a report needs.
#[derive(Debug, Clone)]
pub struct SublistApprox {
    pub poly: Polynomial,
    pub amp_range: u32,
    pub amp_degree: u32,
    /// Degree of the amplifier-composed form: amplifier degree plus the
    /// literal factor. The stored multilinear polynomial never exceeds it in
    /// meaning, only in representation.
    pub formal_degree: u32,
    /// Positions dropped as unreachable on a ball domain.
    pub pruned: Vec<usize>,
}

/// Pointwise-approximate a modified decision list within `eps` on a domain.
///
/// The gate amplifier carries half the budget; the other half covers the
/// tail of already-passed positions. On a ball the amplifier range is
/// `6k`, raised when repeated prefix variables push selector values higher,
/// and unreachable positions are pruned first.
pub fn sublist_approx(
    list: &ModifiedDecisionList,
    eps: &BigRational,
    dom: &Domain,
) -> Result<SublistApprox> {
    let half = eps / BigRational::from_integer(BigInt::from(2));
    let (amp, pruned) = sublist_amplifier(list, &half, dom)?;
    build_sublist(list, &amp, dom, pruned)
}

/// Choose and build the gate amplifier for a sublist on a domain, returning
/// the pruned position set alongside.
fn sublist_amplifier(
    list: &ModifiedDecisionList,
    amp_eps: &BigRational,
    dom: &Domain,
) -> Result<(Amplifier, Vec<usize>)> {
    let h = list.len() as u32;
    let (range, pruned) = match *dom {
        Domain::FullCube(_) => ((3 * h).max(3), Vec::new()),
        Domain::HammingBall { k, .. } => {
            let pruned: Vec<usize> = (1..=list.len())
                .filter(|&i| !feasible_on_ball(list, i, k))
                .collect();
            let kept: Vec<usize> = (1..=list.len()).filter(|i| !pruned.contains(i)).collect();
            let needed = max_selector_value(list, &kept, dom);
            ((6 * k).max(needed).max(3), pruned)
        }
    };
    let amp = amplifier::tuned(range, 2, amp_eps)?;
    Ok((amp, pruned))
}

fn build_sublist(
    list: &ModifiedDecisionList,
    amp: &Amplifier,
    dom: &Domain,
    pruned: Vec<usize>,
) -> Result<SublistApprox> {
    let truncate = match *dom {
        Domain::FullCube(_) => None,
        Domain::HammingBall { k, .. } => Some(k),
    };
    let m = list.len();
    let diffs = gate_differences(amp, m.saturating_sub(1));

    let mut acc = RatMaskPoly::default();
    // elementary symmetric accumulators over the prefix seen so far
    let mut sym: Vec<IntMaskPoly> = vec![IntMaskPoly::one()];
    for (idx, (lit, out)) in list.items.iter().enumerate() {
        let i = idx + 1;
        if !pruned.contains(&i) {
            // gate polynomial at position i: sum_r c_r e_r(prefix)
            let mut gate = RatMaskPoly::default();
            for (r, e_r) in sym.iter().enumerate() {
                gate.add_scaled(e_r, &diffs[r]);
            }
            let signed = gate.mul_literal(lit, truncate);
            let b = BigRational::from_integer(BigInt::from(*out));
            for (mask, c) in signed.terms {
                acc.add_term(mask, c * &b);
            }
        }
        // extend the symmetric accumulators by this literal
        let prev_len = sym.len();
        sym.push(IntMaskPoly::default());
        for r in (1..=prev_len).rev() {
            let grown = sym[r - 1].mul_literal(lit, truncate);
            for (mask, c) in grown.terms {
                sym[r].add_term(mask, c);
            }
        }
    }

    Ok(SublistApprox {
        poly: acc.into_polynomial(list.n),
        amp_range: amp.params.range,
        amp_degree: amp.degree(),
        formal_degree: amp.degree() + 1,
        pruned,
    })
}

/// An integerized sublist approximator: `poly = scale * approximator` with
/// `|scale * L(x) - poly(x)| <= scale * eps_inner` on the domain, and
/// `poly(x) = 0` exactly when no literal of the sublist fires.
#[derive(Debug, Clone)]
pub struct SublistPTF {
    pub source: ModifiedDecisionList,
    pub poly: IntegerPolynomial,
    pub scale: BigInt,
    pub eps_inner: BigRational,
}

/// Integerize the sublist approximator at the standard 1/100 budget.
pub fn sublist_ptf(list: &ModifiedDecisionList, dom: &Domain) -> Result<SublistPTF> {
    let approx = sublist_approx(list, &inner_eps(), dom)?;
    let (poly, scale) = approx.poly.clear_denominators();
    Ok(SublistPTF {
        source: list.clone(),
        poly,
        scale,
        eps_inner: inner_eps(),
    })
}

/// Split a decision list into ceil(len/h) modified sublists of block size
/// `h` (the last block may be shorter); the default output rides separately.
pub fn decompose(list: &DecisionList, h: u32) -> Result<(Vec<ModifiedDecisionList>, i8)> {
    if h < 1 {
        return Err(Error::InvalidParams("block size must be at least 1".into()));
    }
    let blocks = list
        .items
        .chunks(h as usize)
        .map(|chunk| ModifiedDecisionList::new(list.n, chunk.to_vec()))
        .collect();
    Ok((blocks, list.default))
}

/// Construction figures for one assembled sign representation.
#[derive(Debug, Clone)]
pub struct BuildReport {
    pub n: u32,
    pub block_count: usize,
    /// Amplifier-composed degree bound; the number degree claims refer to.
    pub formal_degree: u32,
    /// Degree of the stored multilinear polynomial.
    pub stored_degree: u32,
    pub log2_weight: f64,
    pub scale_bits: u64,
    pub amp_range: u32,
    pub amp_degree: u32,
}

impl BuildReport {
    pub fn csv_header() -> &'static str {
        "n,param,blocks,formal_degree,stored_degree,log2_weight,scale_bits,amp_range,amp_degree\n"
    }

    pub fn csv_row(&self, param: u32) -> String {
        format!(
            "{},{},{},{},{},{:.2},{},{},{}\n",
            self.n,
            param,
            self.block_count,
            self.formal_degree,
            self.stored_degree,
            self.log2_weight,
            self.scale_bits,
            self.amp_range,
            self.amp_degree
        )
    }
}

/// An integer polynomial whose sign computes a decision list on a domain.
#[derive(Debug, Clone)]
pub struct AssembledPTF {
    pub source: DecisionList,
    pub domain: Domain,
    /// Block size on the cube; the ball radius on a ball.
    pub size_param: u32,
    pub poly: IntegerPolynomial,
    /// The shared integerizing constant of all blocks.
    pub scale: BigInt,
    /// Block approximators, already rescaled to the shared constant.
    pub blocks: Vec<IntegerPolynomial>,
    pub report: BuildReport,
}

/// Assemble the base-3 weighted sum of block approximators for a full list
/// over the cube.
pub fn assemble_cube_ptf(list: &DecisionList, h: u32) -> Result<AssembledPTF> {
    let dom = Domain::FullCube(list.n);
    assemble(list, h, &dom)
}

/// Assemble a sign representation over a Hamming ball of radius `k`. The
/// whole list forms a single block; the gate amplifier range depends on `k`,
/// not on the list length, and unreachable positions are pruned.
pub fn assemble_ball_ptf(list: &DecisionList, k: u32) -> Result<AssembledPTF> {
    if k < 1 {
        return Err(Error::InvalidParams(
            "ball radius must be at least 1".into(),
        ));
    }
    let dom = Domain::HammingBall { n: list.n, k };
    assemble(list, list.len().max(1) as u32, &dom)
}

fn assemble(list: &DecisionList, h: u32, dom: &Domain) -> Result<AssembledPTF> {
    let (sublists, default) = decompose(list, h)?;
    let r = sublists.len();
    let eps_half = inner_eps() / BigRational::from_integer(BigInt::from(2));

    // one amplifier serves all blocks: full-size blocks dominate the range
    let mut approxes = Vec::with_capacity(r);
    let mut amp_range = 3;
    let mut amp_degree = 0;
    if r > 0 {
        let widest = sublists
            .iter()
            .max_by_key(|s| s.len())
            .expect("nonempty block set");
        let (amp, _) = sublist_amplifier(widest, &eps_half, dom)?;
        amp_range = amp.params.range;
        amp_degree = amp.degree();
        for sub in &sublists {
            let pruned = match *dom {
                Domain::FullCube(_) => Vec::new(),
                Domain::HammingBall { k, .. } => (1..=sub.len())
                    .filter(|&i| !feasible_on_ball(sub, i, k))
                    .collect(),
            };
            approxes.push((sub.clone(), build_sublist(sub, &amp, dom, pruned)?));
        }
    }

    // shared integerizing constant: lcm of the per-block constants
    let mut scale = BigInt::one();
    for (_, a) in &approxes {
        let (_, c) = a.poly.clear_denominators();
        scale = scale.lcm(&c);
    }

    let scale_rat = BigRational::from_integer(scale.clone());
    let mut blocks = Vec::with_capacity(r);
    let mut total = Polynomial::zero(list.n);
    let three = BigInt::from(3);
    for (i, (_, a)) in approxes.iter().enumerate() {
        let block_int = IntegerPolynomial::new(a.poly.scale(&scale_rat))
            .expect("scale clears every denominator");
        let power = three.pow((r - i) as u32); // 3^(r - i + 1) for 1-based i
        total = total.add(&block_int.as_poly().scale(&BigRational::from_integer(power)));
        blocks.push(block_int);
    }
    total.add_term(
        Monomial::unit(),
        BigRational::from_integer(&scale * BigInt::from(default)),
    );
    let poly = IntegerPolynomial::new(total).expect("integer combination");

    let formal_degree = if r > 0 { amp_degree + 1 } else { 0 };
    let report = BuildReport {
        n: list.n,
        block_count: r,
        formal_degree,
        stored_degree: poly.degree(),
        log2_weight: amplifier::log2_bigint(&poly.weight()),
        scale_bits: scale.bits(),
        amp_range,
        amp_degree,
    };
    Ok(AssembledPTF {
        source: list.clone(),
        domain: *dom,
        size_param: match *dom {
            Domain::FullCube(_) => h,
            Domain::HammingBall { k, .. } => k,
        },
        poly,
        scale,
        blocks,
        report,
    })
}

impl AssembledPTF {
    /// Block index (0-based) holding 1-based item position `pos`.
    fn block_of(&self, pos: usize) -> usize {
        match self.domain {
            Domain::FullCube(_) => (pos - 1) / self.size_param as usize,
            Domain::HammingBall { .. } => 0,
        }
    }

    pub fn report_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "n={} blocks={} formal_degree={} stored_degree={} log2_weight={:.1} scale_bits={} amp_range={} amp_degree={}",
            self.report.n,
            self.report.block_count,
            self.report.formal_degree,
            self.report.stored_degree,
            self.report.log2_weight,
            self.report.scale_bits,
            self.report.amp_range,
            self.report.amp_degree,
        );
        out
    }
}

/// Exact per-point checker of the base-3 dominance ledger.
///
/// At a point whose first fired literal sits in block `i` (1-based), with
/// `pow = 3^(r-i+1)`:
///   - blocks before `i` evaluate to exactly 0,
///   - the firing block is within `scale * pow / 100` of `scale * pow * b`,
///   - the later blocks plus the firing error plus the default stay strictly
///     below `scale * pow`.
pub struct DominanceChecker<'a> {
    ptf: &'a AssembledPTF,
    evals: Vec<MaskEvaluator>,
    total: MaskEvaluator,
}

impl<'a> DominanceChecker<'a> {
    pub fn new(ptf: &'a AssembledPTF) -> Self {
        let evals = ptf
            .blocks
            .iter()
            .map(|b| MaskEvaluator::new(b.as_poly()))
            .collect();
        let total = MaskEvaluator::new(ptf.poly.as_poly());
        DominanceChecker { ptf, evals, total }
    }

    /// True when every dominance clause holds at the point; points firing
    /// nothing must evaluate to exactly `scale * default`.
    pub fn check_mask(&self, mask: u64) -> bool {
        let r = self.ptf.blocks.len();
        let scale = &self.ptf.scale;
        let hundred = BigInt::from(100);
        match self.ptf.source.first_fired_mask(mask) {
            None => {
                let h = self.total.eval_scaled(mask);
                h == scale * BigInt::from(self.ptf.source.default)
            }
            Some((pos0, b)) => {
                let i = self.ptf.block_of(pos0 + 1); // 0-based block
                let pow_i = BigInt::from(3).pow((r - i) as u32);
                // earlier blocks are exactly zero
                for e in &self.evals[..i] {
                    if !e.eval_scaled(mask).is_zero() {
                        return false;
                    }
                }
                // firing block envelope: 100 |v - scale b| <= scale
                let v = self.evals[i].eval_scaled(mask);
                if &hundred * (&v - scale * BigInt::from(b)).abs() > scale.clone() {
                    return false;
                }
                // later blocks: 100 |sum| + scale*pow + 100*scale < 100*scale*pow
                let mut tail = BigInt::zero();
                for (j, e) in self.evals.iter().enumerate().skip(i + 1) {
                    let pow_j = BigInt::from(3).pow((r - j) as u32);
                    tail += e.eval_scaled(mask) * pow_j;
                }
                &hundred * tail.abs() + scale * &pow_i + &hundred * scale
                    < &hundred * scale * &pow_i
            }
        }
    }
}

impl IntegerPolynomial {
    /// Exact value at a bitmask point (one-off; sweeps should reuse a
    /// [`MaskEvaluator`]).
    pub fn evaluate_scalar_mask(&self, mask: u64) -> BigInt {
        MaskEvaluator::new(self.as_poly()).eval_scaled(mask)
    }
}

/// On-disk form of an assembled sign representation.
#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct PtfRecord {
    pub n: u32,
    /// `"cube"` or `"ball"`.
    pub domain: String,
    /// Block size on the cube, radius on the ball.
    pub param: u32,
    /// Shared integerizing constant, as a decimal string.
    pub scale: String,
    pub poly: crate::poly::PolynomialRecord,
}

impl From<&AssembledPTF> for PtfRecord {
    fn from(p: &AssembledPTF) -> Self {
        PtfRecord {
            n: p.source.n,
            domain: match p.domain {
                Domain::FullCube(_) => "cube".into(),
                Domain::HammingBall { .. } => "ball".into(),
            },
            param: p.size_param,
            scale: p.scale.to_string(),
            poly: crate::poly::PolynomialRecord::from(p.poly.as_poly()),
        }
    }
}

impl PtfRecord {
    pub fn polynomial(&self) -> Result<IntegerPolynomial> {
        let poly = Polynomial::try_from(&self.poly)?;
        IntegerPolynomial::new(poly)
    }
}

/// Sweep a domain checking that the approximator vanishes exactly at points
/// firing no literal and is nonzero elsewhere.
pub fn verify_zero_iff_no_fire(
    p: &Polynomial,
    list: &ModifiedDecisionList,
    dom: &Domain,
    cap: u64,
) -> Result<VerifyOutcome> {
    let points = dom.points(cap)?;
    let eval = MaskEvaluator::new(p);
    for (index, &mask) in points.iter().enumerate() {
        let zero = eval.eval_scaled(mask).is_zero();
        let fired = list.first_fired_mask(mask).is_some();
        if zero == fired {
            return Ok(VerifyOutcome {
                passed: false,
                counterexample: Some(crate::verify::Counterexample {
                    index,
                    mask,
                    n: dom.n(),
                    expected: if fired { "nonzero" } else { "0" }.into(),
                    got: if zero { "0" } else { "nonzero" }.into(),
                    kind: crate::verify::FailureKind::WrongSign,
                }),
                points_checked: points.len() as u64,
                max_deviation: None,
            });
        }
    }
    Ok(VerifyOutcome {
        passed: true,
        counterexample: None,
        points_checked: points.len() as u64,
        max_deviation: None,
    })
}
