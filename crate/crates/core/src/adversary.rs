//! Adversarial witness search: a chain of low-weight inputs on which a
//! polynomial's magnitude crosses successive powers of two, certifying a
//! weight lower bound.
//!
//! The variable range is laid out as a seed block of the first `t` positions
//! followed by extension blocks of size `t` (the final block may be shorter,
//! trimmed to even size). The seed input sets the whole seed block. Each
//! extension fills the next block: new ones go to positions whose parity
//! matches the sign the chain needs next, and every new one retires one of
//! the current ones, so the total number of ones never grows. Candidate
//! fillings are searched exhaustively in ascending order and the first one
//! whose value flips sign and reaches the next power of two is taken.
//!
//! Since `|p(x)|` never exceeds the coefficient weight on 0/1 inputs, a chain
//! reaching `|p(y_m)| >= 2^m` is a machine-checkable certificate that the
//! weight is at least `2^m`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::dlist::{bitstring_to_mask, mask_to_bitstring, DecisionList, Domain};
use crate::poly::IntegerPolynomial;
use crate::verify::{verify_sign, MaskEvaluator};
use crate::{Error, Result};

/// Block layout for a witness search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockPlan {
    pub n: u32,
    /// Degree the block size was chosen for (informational).
    pub degree: u32,
    /// Ball radius; every chain vector keeps at most `k` ones.
    pub k: u32,
    /// Even block size.
    pub block: u32,
    /// Nominal block count `floor(n / block)`.
    pub blocks: u32,
}

impl BlockPlan {
    pub fn new(n: u32, degree: u32, k: u32, block: u32) -> Result<Self> {
        if block < 2 || block & 1 != 0 {
            return Err(Error::InvalidParams(
                "block size must be even and at least 2".into(),
            ));
        }
        if k < block {
            return Err(Error::InvalidParams(
                "ball radius must be at least the block size".into(),
            ));
        }
        if n < block {
            return Err(Error::InvalidParams("need at least one full block".into()));
        }
        Ok(BlockPlan {
            n,
            degree,
            k,
            block,
            blocks: n / block,
        })
    }

    /// Default block size for a target degree: the smallest even integer at
    /// least `4 d^2`.
    pub fn for_degree(n: u32, degree: u32, k: u32) -> Result<Self> {
        let t = (4 * degree * degree).max(2);
        let t = if t & 1 == 0 { t } else { t + 1 };
        Self::new(n, degree, k, t)
    }

    /// Seed block mask: positions `1..=block`.
    pub fn seed_mask(&self) -> u64 {
        (1u64 << self.block) - 1
    }

    /// Extension blocks after the seed, as (start position, size), sizes even;
    /// a trailing fragment shorter than 2 is discarded.
    pub fn extension_blocks(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        let mut start = self.block + 1;
        while start < self.n {
            let size = (self.n - start + 1).min(self.block) & !1;
            if size < 2 {
                break;
            }
            out.push((start, size));
            start += size;
        }
        out
    }

    /// Positions allowed to carry ones after `i` extensions.
    pub fn allowed_mask(&self, extensions: usize) -> u64 {
        let mut m = self.seed_mask();
        for &(start, size) in self.extension_blocks().iter().take(extensions) {
            for p in start..start + size {
                m |= 1 << (p - 1);
            }
        }
        m
    }
}

/// A sequence of inputs with exponentially growing magnitudes: the chain
/// element `y_i` satisfies `|p(y_i)| >= 2^i`, with alternating signs.
#[derive(Debug, Clone)]
pub struct WitnessChain {
    pub plan: BlockPlan,
    pub vectors: Vec<u64>,
    pub values: Vec<BigInt>,
}

impl WitnessChain {
    /// Number of extensions performed (the chain index of the last vector).
    pub fn length(&self) -> usize {
        self.vectors.len().saturating_sub(1)
    }
}

/// Whether the polynomial's correctness on the target domain was checked
/// before the search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum CertStatus {
    /// Sign-correctness verified exhaustively on the ball.
    Verified,
    /// Domain too large to enumerate; the certificate is conditional on the
    /// polynomial computing the target function.
    Conditional,
}

/// Result of a witness search.
#[derive(Debug, Clone)]
pub struct AdversaryRun {
    pub chain: WitnessChain,
    pub status: CertStatus,
    /// Extension block index at which no filling qualified, if the search
    /// stopped before exhausting the layout.
    pub exhausted_at: Option<usize>,
}

/// The seed input `1^t 0^(n-t)` and its value. A zero value rejects the seed:
/// a nonzero integer polynomial never vanishes there if it is to witness
/// anything.
pub fn seed_witness(eval: &MaskEvaluator, plan: &BlockPlan) -> Result<(u64, BigInt)> {
    let y0 = plan.seed_mask();
    let v = eval.eval_scaled(y0);
    if v.is_zero() {
        return Err(Error::ZeroSeed);
    }
    Ok((y0, v))
}

/// Fill extension block `i` (0-based) of `y`, searching all fillings for one
/// that flips the sign and reaches `2^(i+1)`.
///
/// New ones are placed at positions of the block whose parity matches the
/// needed sign (even positions for +1, odd for -1); setting the j-th filling
/// bit also clears the j-th lowest current one, so the weight never grows.
/// Fillings are tried in ascending order; the first success wins.
pub fn extend_witness(
    eval: &MaskEvaluator,
    plan: &BlockPlan,
    y: u64,
    value: &BigInt,
    i: usize,
) -> Option<(u64, BigInt)> {
    let blocks = plan.extension_blocks();
    let &(start, size) = blocks.get(i)?;
    let target_positive = value.is_negative();
    // positions in the block with the parity of the needed sign
    let slots: Vec<u32> = (start..start + size)
        .filter(|p| (p % 2 == 0) == target_positive)
        .collect();
    let ones: Vec<u32> = (0..64).filter(|b| y >> b & 1 == 1).map(|b| b + 1).collect();
    let threshold = BigInt::from(1) << (i + 1);

    for filling in 0u64..(1 << slots.len()) {
        let mut cand = y;
        let mut retired = 0usize;
        for (j, &slot) in slots.iter().enumerate() {
            if filling >> j & 1 == 1 {
                cand |= 1 << (slot - 1);
                cand &= !(1 << (ones[retired] - 1));
                retired += 1;
            }
        }
        let v = eval.eval_scaled(cand);
        let flipped = v.is_positive() == target_positive && !v.is_zero();
        if flipped && v.abs() >= threshold {
            debug_assert!(cand.count_ones() <= plan.k);
            return Some((cand, v));
        }
    }
    None
}

/// Run the full search: verify the polynomial on the ball when enumerable,
/// seed, then extend through the block layout as far as fillings qualify.
pub fn run_adversary(
    p: &IntegerPolynomial,
    plan: &BlockPlan,
    list: &DecisionList,
    cap: u64,
) -> Result<AdversaryRun> {
    let dom = Domain::HammingBall {
        n: plan.n,
        k: plan.k,
    };
    let status = if dom.size() <= cap as u128 {
        let out = verify_sign(p.as_poly(), list, &dom, cap)?;
        if !out.passed {
            return Err(Error::BadCertificate(format!(
                "polynomial does not compute the list on the ball: {}",
                out.to_text().trim()
            )));
        }
        CertStatus::Verified
    } else {
        CertStatus::Conditional
    };

    let eval = MaskEvaluator::new(p.as_poly());
    let (y0, v0) = seed_witness(&eval, plan)?;
    let mut vectors = vec![y0];
    let mut values = vec![v0];
    let mut exhausted_at = None;
    for i in 0..plan.extension_blocks().len() {
        match extend_witness(&eval, plan, vectors[i], &values[i], i) {
            Some((y, v)) => {
                vectors.push(y);
                values.push(v);
            }
            None => {
                exhausted_at = Some(i);
                break;
            }
        }
    }
    Ok(AdversaryRun {
        chain: WitnessChain {
            plan: plan.clone(),
            vectors,
            values,
        },
        status,
        exhausted_at,
    })
}

/// Re-verify every chain invariant against the polynomial and return the
/// certified weight lower bound `2^length`.
///
/// The bound is sound because |p(x)| on a 0/1 input never exceeds the sum of
/// absolute coefficients.
pub fn weight_certificate(chain: &WitnessChain, p: &IntegerPolynomial) -> Result<BigInt> {
    if chain.vectors.is_empty() || chain.vectors.len() != chain.values.len() {
        return Err(Error::BadCertificate("empty or ragged chain".into()));
    }
    let eval = MaskEvaluator::new(p.as_poly());
    for (i, (y, claimed)) in chain.vectors.iter().zip(&chain.values).enumerate() {
        if y.count_ones() > chain.plan.k {
            return Err(Error::BadCertificate(format!(
                "vector {i} carries more than k ones"
            )));
        }
        if y & !chain.plan.allowed_mask(i) != 0 {
            return Err(Error::BadCertificate(format!(
                "vector {i} has ones outside its blocks"
            )));
        }
        let v = eval.eval_scaled(*y);
        if &v != claimed {
            return Err(Error::BadCertificate(format!(
                "vector {i}: recorded value {claimed} but polynomial gives {v}"
            )));
        }
        if v.abs() < (BigInt::from(1) << i) {
            return Err(Error::BadCertificate(format!(
                "vector {i}: magnitude below 2^{i}"
            )));
        }
        if i > 0 && v.is_positive() == chain.values[i - 1].is_positive() {
            return Err(Error::BadCertificate(format!(
                "vectors {} and {i} do not alternate in sign",
                i - 1
            )));
        }
    }
    Ok(BigInt::from(1) << chain.length())
}

/// On-disk form of a chain: plan, vectors as bitstrings, values as integer
/// strings.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChainRecord {
    pub plan: BlockPlan,
    pub vectors: Vec<String>,
    pub values: Vec<String>,
}

impl From<&WitnessChain> for ChainRecord {
    fn from(c: &WitnessChain) -> Self {
        ChainRecord {
            plan: c.plan.clone(),
            vectors: c
                .vectors
                .iter()
                .map(|&m| mask_to_bitstring(m, c.plan.n))
                .collect(),
            values: c.values.iter().map(|v| v.to_string()).collect(),
        }
    }
}

impl TryFrom<&ChainRecord> for WitnessChain {
    type Error = Error;

    fn try_from(r: &ChainRecord) -> Result<WitnessChain> {
        let mut vectors = Vec::with_capacity(r.vectors.len());
        for s in &r.vectors {
            let (mask, n) = bitstring_to_mask(s)?;
            if n != r.plan.n {
                return Err(Error::Parse(format!(
                    "vector length {n} does not match plan n={}",
                    r.plan.n
                )));
            }
            vectors.push(mask);
        }
        let values = r
            .values
            .iter()
            .map(|s| {
                s.parse::<BigInt>()
                    .map_err(|e| Error::Parse(format!("bad value: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(WitnessChain {
            plan: r.plan.clone(),
            vectors,
            values,
        })
    }
}

/// Independent certificate check from the serialized form alone: parse,
/// re-evaluate the polynomial at every vector, re-check every invariant, and
/// return the certified bound.
pub fn recheck_chain(json: &str, p: &IntegerPolynomial) -> Result<BigInt> {
    let record: ChainRecord = serde_json::from_str(json)?;
    let chain = WitnessChain::try_from(&record)?;
    weight_certificate(&chain, p)
}
