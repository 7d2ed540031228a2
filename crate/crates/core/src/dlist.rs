//! Decision lists, their evaluation semantics, and enumerable 0/1 domains.
//!
//! Points of `{0,1}^n` are carried as `u64` bitmasks with `x_i` stored at bit
//! `i-1`. Enumeration orders are fixed so golden tests and serialized
//! artifacts are reproducible: the cube is listed in lexicographic order of
//! the vector `(x_1, ..., x_n)`, the Hamming ball by increasing weight and
//! lexicographically within each weight.

use num_integer::binomial;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::poly::Var;
use crate::{Error, Result};

/// Default ceiling on exhaustive enumeration (2^22 points).
pub const DEFAULT_ENUM_CAP: u64 = 1 << 22;

/// A Boolean variable or its negation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Literal {
    pub var: Var,
    pub negated: bool,
}

impl Literal {
    pub fn pos(var: Var) -> Self {
        Literal {
            var,
            negated: false,
        }
    }

    pub fn neg(var: Var) -> Self {
        Literal { var, negated: true }
    }

    /// Truth value at a point given as a bitmask.
    pub fn satisfied_mask(&self, mask: u64) -> bool {
        let bit = mask >> (self.var - 1) & 1 == 1;
        bit != self.negated
    }

    pub fn satisfied(&self, x: &[bool]) -> Result<bool> {
        let idx = self.var as usize - 1;
        if idx >= x.len() {
            return Err(Error::MissingVariable {
                var: self.var,
                given: x.len(),
            });
        }
        Ok(x[idx] != self.negated)
    }
}

/// Ordered (literal, output) pairs with a +-1 default output.
///
/// The value at `x` is the output of the first satisfied literal, or the
/// default when none is satisfied. Repeated and contradictory literals are
/// allowed; the first-match rule resolves them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecisionList {
    pub n: u32,
    pub items: Vec<(Literal, i8)>,
    pub default: i8,
}

impl DecisionList {
    pub fn new(n: u32, items: Vec<(Literal, i8)>, default: i8) -> Self {
        assert!(default == 1 || default == -1, "default must be +-1");
        for (l, b) in &items {
            assert!(*b == 1 || *b == -1, "outputs must be +-1");
            assert!(l.var >= 1 && l.var <= n, "literal variable out of range");
        }
        DecisionList { n, items, default }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// Index and output of the first satisfied literal.
    pub fn first_fired_mask(&self, mask: u64) -> Option<(usize, i8)> {
        self.items
            .iter()
            .position(|(l, _)| l.satisfied_mask(mask))
            .map(|i| (i, self.items[i].1))
    }

    pub fn eval_mask(&self, mask: u64) -> i8 {
        self.first_fired_mask(mask)
            .map(|(_, b)| b)
            .unwrap_or(self.default)
    }

    pub fn eval(&self, x: &[bool]) -> Result<i8> {
        if x.len() != self.n as usize {
            return Err(Error::LengthMismatch {
                expected: self.n,
                given: x.len(),
            });
        }
        Ok(self.eval_mask(bools_to_mask(x)))
    }
}

/// A decision list whose default output is 0 rather than +-1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModifiedDecisionList {
    pub n: u32,
    pub items: Vec<(Literal, i8)>,
}

impl ModifiedDecisionList {
    pub fn new(n: u32, items: Vec<(Literal, i8)>) -> Self {
        for (l, b) in &items {
            assert!(*b == 1 || *b == -1, "outputs must be +-1");
            assert!(l.var >= 1 && l.var <= n, "literal variable out of range");
        }
        ModifiedDecisionList { n, items }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn first_fired_mask(&self, mask: u64) -> Option<(usize, i8)> {
        self.items
            .iter()
            .position(|(l, _)| l.satisfied_mask(mask))
            .map(|i| (i, self.items[i].1))
    }

    /// Output of the first satisfied literal, or 0 when none fires.
    pub fn eval_mask(&self, mask: u64) -> i8 {
        self.first_fired_mask(mask).map(|(_, b)| b).unwrap_or(0)
    }

    pub fn eval(&self, x: &[bool]) -> Result<i8> {
        if x.len() != self.n as usize {
            return Err(Error::LengthMismatch {
                expected: self.n,
                given: x.len(),
            });
        }
        Ok(self.eval_mask(bools_to_mask(x)))
    }
}

/// ODD-MAX-BIT over n variables: (-1)^i where i is the largest index of a set
/// bit, +1 on the all-zero input. Encoded as the decision list testing x_n,
/// x_{n-1}, ..., x_1 with outputs (-1)^n, ..., (-1)^1 and default +1.
pub fn odd_max_bit(n: u32) -> DecisionList {
    assert!(n >= 1);
    let items = (1..=n)
        .rev()
        .map(|i| {
            let out = if i % 2 == 0 { 1 } else { -1 };
            (Literal::pos(i), out)
        })
        .collect();
    DecisionList::new(n, items, 1)
}

/// Seed-deterministic random decision list of length `h` over `[n]`.
pub fn random_list(n: u32, h: usize, seed: u64) -> DecisionList {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let items = (0..h)
        .map(|_| {
            let var = rng.gen_range(1..=n);
            let negated = rng.gen::<bool>();
            let out = if rng.gen::<bool>() { 1 } else { -1 };
            (Literal { var, negated }, out)
        })
        .collect();
    let default = if rng.gen::<bool>() { 1 } else { -1 };
    DecisionList::new(n, items, default)
}

/// Seed-deterministic random modified decision list.
pub fn random_modified_list(n: u32, h: usize, seed: u64) -> ModifiedDecisionList {
    let l = random_list(n, h, seed);
    ModifiedDecisionList::new(l.n, l.items)
}

/// One list entry of the on-disk format.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ItemRecord {
    pub var: u32,
    pub negated: bool,
    pub output: i8,
}

/// On-disk form of a decision list: named-field records, default last.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DecisionListRecord {
    pub n: u32,
    pub items: Vec<ItemRecord>,
    pub default: i8,
}

impl From<&DecisionList> for DecisionListRecord {
    fn from(l: &DecisionList) -> Self {
        DecisionListRecord {
            n: l.n,
            items: l
                .items
                .iter()
                .map(|(lit, out)| ItemRecord {
                    var: lit.var,
                    negated: lit.negated,
                    output: *out,
                })
                .collect(),
            default: l.default,
        }
    }
}

impl TryFrom<&DecisionListRecord> for DecisionList {
    type Error = Error;

    fn try_from(r: &DecisionListRecord) -> Result<DecisionList> {
        if r.default != 1 && r.default != -1 {
            return Err(Error::Parse("default output must be +-1".into()));
        }
        let mut items = Vec::with_capacity(r.items.len());
        for it in &r.items {
            if it.output != 1 && it.output != -1 {
                return Err(Error::Parse("outputs must be +-1".into()));
            }
            if it.var < 1 || it.var > r.n {
                return Err(Error::Parse(format!("variable x{} out of range", it.var)));
            }
            items.push((
                Literal {
                    var: it.var,
                    negated: it.negated,
                },
                it.output,
            ));
        }
        Ok(DecisionList::new(r.n, items, r.default))
    }
}

/// Where sign-correctness is demanded: the full cube or a Hamming ball.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Domain {
    FullCube(u32),
    HammingBall { n: u32, k: u32 },
}

impl Domain {
    pub fn n(&self) -> u32 {
        match *self {
            Domain::FullCube(n) => n,
            Domain::HammingBall { n, .. } => n,
        }
    }

    /// Number of points.
    pub fn size(&self) -> u128 {
        match *self {
            Domain::FullCube(n) => 1u128 << n,
            Domain::HammingBall { n, k } => (0..=k.min(n))
                .map(|i| {
                    binomial(num_bigint::BigInt::from(n), num_bigint::BigInt::from(i))
                        .to_u128()
                        .expect("ball size fits in u128")
                })
                .sum(),
        }
    }

    /// All points in the documented deterministic order, as bitmasks.
    pub fn points(&self, cap: u64) -> Result<Vec<u64>> {
        let size = self.size();
        if size > cap as u128 {
            return Err(Error::CapExceeded { size, cap });
        }
        match *self {
            Domain::FullCube(n) => {
                assert!(n <= 32, "cube enumeration limited to n <= 32");
                Ok((0..1u64 << n).map(|c| reverse_bits(c, n)).collect())
            }
            Domain::HammingBall { n, k } => {
                assert!(n <= 32, "ball enumeration limited to n <= 32");
                let mut out = Vec::with_capacity(size as usize);
                for w in 0..=k.min(n) {
                    for msb in fixed_weight_ascending(n, w) {
                        out.push(reverse_bits(msb, n));
                    }
                }
                Ok(out)
            }
        }
    }

    pub fn contains_mask(&self, mask: u64) -> bool {
        match *self {
            Domain::FullCube(n) => mask < (1u64 << n),
            Domain::HammingBall { n, k } => mask < (1u64 << n) && mask.count_ones() <= k,
        }
    }
}

/// Reverse the low `n` bits, mapping the lexicographic counter (x_1 most
/// significant) to the internal x_i-at-bit-(i-1) mask.
fn reverse_bits(c: u64, n: u32) -> u64 {
    if n == 0 {
        return 0;
    }
    c.reverse_bits() >> (64 - n)
}

/// All n-bit values with exactly `w` ones, ascending (Gosper's hack).
fn fixed_weight_ascending(n: u32, w: u32) -> Vec<u64> {
    if w == 0 {
        return vec![0];
    }
    if w > n {
        return vec![];
    }
    let limit = 1u64 << n;
    let mut v = (1u64 << w) - 1;
    let mut out = Vec::new();
    loop {
        out.push(v);
        let c = v & v.wrapping_neg();
        let r = v + c;
        // the successor is >= r, so once r leaves the n-bit range we are done
        if r >= limit {
            break;
        }
        v = (((v ^ r) >> 2) / c) | r;
    }
    out
}

pub fn bools_to_mask(x: &[bool]) -> u64 {
    let mut m = 0u64;
    for (i, &b) in x.iter().enumerate() {
        if b {
            m |= 1 << i;
        }
    }
    m
}

pub fn mask_to_bools(mask: u64, n: u32) -> Vec<bool> {
    (0..n).map(|i| mask >> i & 1 == 1).collect()
}

/// Render a mask as the bit string `x_1 x_2 ... x_n`.
pub fn mask_to_bitstring(mask: u64, n: u32) -> String {
    (0..n)
        .map(|i| if mask >> i & 1 == 1 { '1' } else { '0' })
        .collect()
}

pub fn bitstring_to_mask(s: &str) -> Result<(u64, u32)> {
    let mut mask = 0u64;
    let mut n = 0u32;
    for ch in s.chars() {
        match ch {
            '0' => {}
            '1' => mask |= 1 << n,
            _ => return Err(Error::Parse(format!("bad bitstring character {ch:?}"))),
        }
        n += 1;
    }
    Ok((mask, n))
}
