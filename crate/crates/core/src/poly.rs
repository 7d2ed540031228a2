//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! The representation is formal: exponents are kept as written, so degree and
//! weight accounting match the algebra that produced a polynomial.
//! [`Polynomial::multilinearize`] is an explicit opt-in reduction that
//! preserves values on 0/1 assignments. Variables are indexed from 1.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Variable index, 1-based.
pub type Var = u32;

/// A product of variables with positive exponents, sorted by variable index.
/// The empty monomial is the constant 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    vars: Vec<(Var, u32)>,
}

impl Monomial {
    /// The constant monomial.
    pub fn unit() -> Self {
        Monomial { vars: Vec::new() }
    }

    /// The monomial `x_i`.
    pub fn var(i: Var) -> Self {
        assert!(i >= 1, "variable indices start at 1");
        Monomial { vars: vec![(i, 1)] }
    }

    /// Build from (variable, exponent) pairs; zero exponents are dropped.
    pub fn from_pairs(pairs: &[(Var, u32)]) -> Self {
        let mut map: BTreeMap<Var, u32> = BTreeMap::new();
        for &(v, e) in pairs {
            assert!(v >= 1, "variable indices start at 1");
            if e > 0 {
                *map.entry(v).or_insert(0) += e;
            }
        }
        Monomial {
            vars: map.into_iter().collect(),
        }
    }

    pub fn pairs(&self) -> &[(Var, u32)] {
        &self.vars
    }

    pub fn degree(&self) -> u32 {
        self.vars.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.vars.is_empty()
    }

    /// Largest variable index appearing, or 0 for the constant monomial.
    pub fn max_var(&self) -> Var {
        self.vars.last().map(|&(v, _)| v).unwrap_or(0)
    }

    /// Product of two monomials: exponents add.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut vars = Vec::with_capacity(self.vars.len() + other.vars.len());
        let (mut a, mut b) = (self.vars.iter().peekable(), other.vars.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(va, ea)), Some(&&(vb, eb))) => {
                    if va < vb {
                        vars.push((va, ea));
                        a.next();
                    } else if vb < va {
                        vars.push((vb, eb));
                        b.next();
                    } else {
                        vars.push((va, ea + eb));
                        a.next();
                        b.next();
                    }
                }
                (Some(&&p), None) => {
                    vars.push(p);
                    a.next();
                }
                (None, Some(&&p)) => {
                    vars.push(p);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Monomial { vars }
    }

    /// Value at a 0/1 assignment: 1 iff every variable is set.
    pub fn eval_01(&self, x: &[bool]) -> Result<bool> {
        for &(v, _) in &self.vars {
            let idx = v as usize - 1;
            if idx >= x.len() {
                return Err(Error::MissingVariable {
                    var: v,
                    given: x.len(),
                });
            }
            if !x[idx] {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Cap every exponent at 1.
    fn multilinear(&self) -> Monomial {
        Monomial {
            vars: self.vars.iter().map(|&(v, _)| (v, 1)).collect(),
        }
    }

    /// Bitmask of the support, if all variables fit in 64 bits.
    pub fn support_mask(&self) -> Option<u64> {
        let mut m = 0u64;
        for &(v, _) in &self.vars {
            if v > 64 {
                return None;
            }
            m |= 1u64 << (v - 1);
        }
        Some(m)
    }
}

/// Sparse multivariate polynomial over exact rationals.
///
/// Zero coefficients are never stored. `nvars` is the declared ambient
/// variable count and is always at least the largest index in use; it is
/// bookkeeping, so equality compares terms only.
#[derive(Debug, Clone)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigRational>,
    nvars: u32,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(nvars: u32) -> Self {
        Polynomial {
            terms: BTreeMap::new(),
            nvars,
        }
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::unit(), c);
        }
        Polynomial { terms, nvars: 0 }
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The polynomial `x_i`.
    pub fn var(i: Var) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(i), BigRational::one());
        Polynomial { terms, nvars: i }
    }

    pub fn from_terms(terms: Vec<(Monomial, BigRational)>, nvars: u32) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Add `c * m` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        self.nvars = self.nvars.max(m.max_var());
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn nvars(&self) -> u32 {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Max monomial degree; 0 for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// Sum of absolute coefficient values.
    pub fn weight(&self) -> BigRational {
        let mut w = BigRational::zero();
        for c in self.terms.values() {
            w += c.abs();
        }
        w
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.nvars = out.nvars.max(other.nvars);
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.nvars = out.nvars.max(other.nvars);
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars.max(other.nvars));
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = &*v * c;
        }
        out
    }

    /// `self^e` by repeated squaring; `power(p, 0) = 1`.
    pub fn power(&self, e: u32) -> Polynomial {
        let mut result = Polynomial::one();
        result.nvars = self.nvars;
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// True iff at most one distinct variable index appears.
    pub fn is_univariate(&self) -> bool {
        let mut seen: Option<Var> = None;
        for m in self.terms.keys() {
            for &(v, _) in m.pairs() {
                match seen {
                    None => seen = Some(v),
                    Some(s) if s == v => {}
                    Some(_) => return false,
                }
            }
        }
        true
    }

    /// Dense coefficient vector `[c_0, ..., c_deg]` of a univariate polynomial.
    pub fn univariate_coeffs(&self) -> Result<Vec<BigRational>> {
        if !self.is_univariate() {
            return Err(Error::NotUnivariate);
        }
        let deg = self.degree() as usize;
        let mut coeffs = vec![BigRational::zero(); deg + 1];
        for (m, c) in &self.terms {
            coeffs[m.degree() as usize] = c.clone();
        }
        Ok(coeffs)
    }

    /// Substitute `inner` for the variable of a univariate `self` (Horner).
    pub fn compose(&self, inner: &Polynomial) -> Result<Polynomial> {
        let coeffs = self.univariate_coeffs()?;
        let mut result = Polynomial::zero(inner.nvars);
        for c in coeffs.iter().rev() {
            result = result.mul(inner);
            result.add_term(Monomial::unit(), c.clone());
        }
        Ok(result)
    }

    /// Exact value at a 0/1 assignment `x = (x_1, ..., x_n)`.
    pub fn evaluate(&self, x: &[bool]) -> Result<BigRational> {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            if m.eval_01(x)? {
                acc += c;
            }
        }
        Ok(acc)
    }

    /// Exact value of a univariate polynomial at a rational point.
    pub fn evaluate_univariate(&self, t: &BigRational) -> Result<BigRational> {
        let coeffs = self.univariate_coeffs()?;
        let mut acc = BigRational::zero();
        for c in coeffs.iter().rev() {
            acc = acc * t + c;
        }
        Ok(acc)
    }

    /// Reduce every exponent to 1; value-preserving on 0/1 assignments.
    pub fn multilinearize(&self) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            out.add_term(m.multilinear(), c.clone());
        }
        out
    }

    /// Smallest positive integer `C` with `C * self` integral, and that product.
    pub fn clear_denominators(&self) -> (IntegerPolynomial, BigInt) {
        let mut c = BigInt::one();
        for coeff in self.terms.values() {
            c = c.lcm(coeff.denom());
        }
        let scaled = self.scale(&BigRational::from_integer(c.clone()));
        (
            IntegerPolynomial::new(scaled).expect("denominators cleared by lcm"),
            c,
        )
    }

    /// Terms as (support mask, coefficient), if multilinear with vars <= 64.
    pub fn multilinear_masks(&self) -> Option<Vec<(u64, BigRational)>> {
        let mut out = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            if m.pairs().iter().any(|&(_, e)| e > 1) {
                return None;
            }
            out.push((m.support_mask()?, c.clone()));
        }
        Some(out)
    }
}

/// A polynomial whose coefficients are all integers; the PTF carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerPolynomial {
    poly: Polynomial,
}

impl IntegerPolynomial {
    /// Wrap a polynomial, checking integrality of every coefficient.
    pub fn new(poly: Polynomial) -> Result<Self> {
        for (m, c) in poly.terms() {
            if !c.is_integer() {
                return Err(Error::InvalidParams(format!(
                    "coefficient {} of {} is not an integer",
                    c,
                    display_monomial(m)
                )));
            }
        }
        Ok(IntegerPolynomial { poly })
    }

    pub fn as_poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn into_poly(self) -> Polynomial {
        self.poly
    }

    pub fn degree(&self) -> u32 {
        self.poly.degree()
    }

    pub fn nvars(&self) -> u32 {
        self.poly.nvars()
    }

    pub fn term_count(&self) -> usize {
        self.poly.term_count()
    }

    /// Weight as an exact integer.
    pub fn weight(&self) -> BigInt {
        self.poly.weight().to_integer()
    }

    pub fn evaluate(&self, x: &[bool]) -> Result<BigInt> {
        Ok(self.poly.evaluate(x)?.to_integer())
    }

    pub fn evaluate_univariate(&self, t: &BigRational) -> Result<BigRational> {
        self.poly.evaluate_univariate(t)
    }

    pub fn scale_int(&self, c: &BigInt) -> IntegerPolynomial {
        IntegerPolynomial {
            poly: self.poly.scale(&BigRational::from_integer(c.clone())),
        }
    }

    pub fn add(&self, other: &IntegerPolynomial) -> IntegerPolynomial {
        IntegerPolynomial {
            poly: self.poly.add(&other.poly),
        }
    }
}

impl From<IntegerPolynomial> for Polynomial {
    fn from(p: IntegerPolynomial) -> Polynomial {
        p.poly
    }
}

/// Chebyshev polynomial of the first kind, `T_d`, over variable `x_1`.
///
/// Built by the recurrence `T_d = 2 x T_{d-1} - T_{d-2}` with `T_0 = 1`,
/// `T_1 = x`; coefficients are integers.
pub fn chebyshev(d: u32) -> IntegerPolynomial {
    let x = Polynomial::var(1);
    let two_x = x.scale(&BigRational::from_integer(BigInt::from(2)));
    let mut prev = Polynomial::one(); // T_0
    if d == 0 {
        return IntegerPolynomial::new(prev).unwrap();
    }
    let mut cur = x; // T_1
    for _ in 1..d {
        let next = two_x.mul(&cur).sub(&prev);
        prev = cur;
        cur = next;
    }
    IntegerPolynomial::new(cur).unwrap()
}

fn display_monomial(m: &Monomial) -> String {
    if m.is_unit() {
        return String::new();
    }
    m.pairs()
        .iter()
        .map(|&(v, e)| {
            if e == 1 {
                format!("x{}", v)
            } else {
                format!("x{}^{}", v, e)
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

impl fmt::Display for Polynomial {
    /// Text form: header `poly nvars=<n>`, then one `num/den * x<i>^<e> ...`
    /// line per term, in the map's deterministic order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "poly nvars={}", self.nvars)?;
        for (m, c) in &self.terms {
            let coeff = if c.denom().is_one() {
                format!("{}", c.numer())
            } else {
                format!("{}/{}", c.numer(), c.denom())
            };
            if m.is_unit() {
                writeln!(f, "{}", coeff)?;
            } else {
                writeln!(f, "{} * {}", coeff, display_monomial(m))?;
            }
        }
        Ok(())
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Polynomial> {
        let mut lines = s.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty polynomial text".into()))?;
        let nvars: u32 = header
            .trim()
            .strip_prefix("poly nvars=")
            .ok_or_else(|| Error::Parse(format!("bad header: {header:?}")))?
            .parse()
            .map_err(|e| Error::Parse(format!("bad nvars: {e}")))?;
        let mut p = Polynomial::zero(nvars);
        for line in lines {
            let (coeff_s, mono_s) = match line.split_once('*') {
                Some((c, m)) => (c.trim(), m.trim()),
                None => (line.trim(), ""),
            };
            let coeff = parse_rational(coeff_s)?;
            let mut pairs = Vec::new();
            for tok in mono_s.split_whitespace() {
                let tok = tok
                    .strip_prefix('x')
                    .ok_or_else(|| Error::Parse(format!("bad monomial token: {tok:?}")))?;
                let (v, e) = match tok.split_once('^') {
                    Some((v, e)) => (
                        v.parse().map_err(|e| Error::Parse(format!("{e}")))?,
                        e.parse().map_err(|e| Error::Parse(format!("{e}")))?,
                    ),
                    None => (tok.parse().map_err(|e| Error::Parse(format!("{e}")))?, 1),
                };
                pairs.push((v, e));
            }
            p.add_term(Monomial::from_pairs(&pairs), coeff);
        }
        Ok(p)
    }
}

/// Parse `a` or `a/b` into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|e| Error::Parse(format!("bad numerator {num:?}: {e}")))?;
    let den: BigInt = den
        .parse()
        .map_err(|e| Error::Parse(format!("bad denominator {den:?}: {e}")))?;
    if den.is_zero() {
        return Err(Error::Parse("zero denominator".into()));
    }
    Ok(BigRational::new(num, den))
}

/// Render a rational as `a` or `a/b`.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// One term of the structured on-disk form: variable-exponent pairs plus the
/// coefficient as integer strings.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TermRecord {
    pub vars: Vec<(u32, u32)>,
    pub num: String,
    pub den: String,
}

/// Structured on-disk form of a polynomial.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolynomialRecord {
    pub nvars: u32,
    pub terms: Vec<TermRecord>,
}

impl From<&Polynomial> for PolynomialRecord {
    fn from(p: &Polynomial) -> Self {
        PolynomialRecord {
            nvars: p.nvars(),
            terms: p
                .terms()
                .map(|(m, c)| TermRecord {
                    vars: m.pairs().to_vec(),
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<&PolynomialRecord> for Polynomial {
    type Error = Error;

    fn try_from(rec: &PolynomialRecord) -> Result<Polynomial> {
        let mut p = Polynomial::zero(rec.nvars);
        for t in &rec.terms {
            let num: BigInt = t
                .num
                .parse()
                .map_err(|e| Error::Parse(format!("bad numerator: {e}")))?;
            let den: BigInt = t
                .den
                .parse()
                .map_err(|e| Error::Parse(format!("bad denominator: {e}")))?;
            if den.is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            p.add_term(Monomial::from_pairs(&t.vars), BigRational::new(num, den));
        }
        Ok(p)
    }
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
    fn add_cancels() {
        // (x1 + 1) + (x1 - 1) = 2 x1
        let a = Polynomial::var(1).add(&Polynomial::one());
        let b = Polynomial::var(1).sub(&Polynomial::one());
        let sum = a.add(&b);
        assert_eq!(sum, Polynomial::var(1).scale(&int(2)));
        assert_eq!(sum.term_count(), 1);
    }

    #[test]
    fn mul_difference_of_squares() {
        let a = Polynomial::var(1).add(&Polynomial::var(2));
        let b = Polynomial::var(1).sub(&Polynomial::var(2));
        let prod = a.mul(&b);
        let expected = Polynomial::var(1)
            .power(2)
            .sub(&Polynomial::var(2).power(2));
        assert_eq!(prod, expected);
    }

    #[test]
    fn mul_by_zero_annihilates() {
        let p = Polynomial::var(1).add(&Polynomial::from_int(7));
        let z = Polynomial::zero(3);
        assert!(z.mul(&p).is_zero());
    }

    #[test]
    fn power_examples() {
        // (x1 + 1)^2 = x1^2 + 2 x1 + 1
        let p = Polynomial::var(1).add(&Polynomial::one()).power(2);
        assert_eq!(p.coefficient(&Monomial::from_pairs(&[(1, 2)])), int(1));
        assert_eq!(p.coefficient(&Monomial::var(1)), int(2));
        assert_eq!(p.coefficient(&Monomial::unit()), int(1));

        // p^0 = 1
        let q = Polynomial::var(3).power(0);
        assert_eq!(q, Polynomial::one());

        // (2 x1)^3 = 8 x1^3, weight 8 = weight(2 x1)^3
        let c = Polynomial::var(1).scale(&int(2)).power(3);
        assert_eq!(c.weight(), int(8));
        assert_eq!(c.degree(), 3);
    }

    #[test]
    fn compose_examples() {
        // x^2 composed with (x1 + x2): weight 4 <= 2^2 * 1
        let sq = Polynomial::var(1).power(2);
        let inner = Polynomial::var(1).add(&Polynomial::var(2));
        let comp = sq.compose(&inner).unwrap();
        assert_eq!(comp.weight(), int(4));

        // T_2 = 2x^2 - 1 composed with x1
        let t2 = chebyshev(2).into_poly();
        let comp = t2.compose(&Polynomial::var(1)).unwrap();
        assert_eq!(comp, t2);

        // (x + 1) composed with (3 x1 - 2) = 3 x1 - 1
        let xp1 = Polynomial::var(1).add(&Polynomial::one());
        let inner = Polynomial::var(1)
            .scale(&int(3))
            .sub(&Polynomial::from_int(2));
        let comp = xp1.compose(&inner).unwrap();
        assert_eq!(
            comp,
            Polynomial::var(1).scale(&int(3)).sub(&Polynomial::one())
        );

        // non-univariate outer is rejected
        let bad = Polynomial::var(1).add(&Polynomial::var(2));
        assert!(bad.compose(&Polynomial::var(1)).is_err());
    }

    #[test]
    fn evaluate_examples() {
        // 2 x1 - 1 at x1 = 0 is -1
        let p = Polynomial::var(1).scale(&int(2)).sub(&Polynomial::one());
        assert_eq!(p.evaluate(&[false]).unwrap(), int(-1));

        // x1 x2 + x2 at (1,1) is 2, meeting the weight bound
        let q = Polynomial::var(1)
            .mul(&Polynomial::var(2))
            .add(&Polynomial::var(2));
        assert_eq!(q.evaluate(&[true, true]).unwrap(), int(2));
        assert_eq!(q.weight(), int(2));

        // missing variable is an error
        assert!(q.evaluate(&[true]).is_err());
    }

    #[test]
    fn weight_and_degree_examples() {
        // 3 x1^2 x2 - 2 x1 + 1 has weight 6
        let p = Polynomial::from_terms(
            vec![
                (Monomial::from_pairs(&[(1, 2), (2, 1)]), int(3)),
                (Monomial::var(1), int(-2)),
                (Monomial::unit(), int(1)),
            ],
            2,
        );
        assert_eq!(p.weight(), int(6));
        assert_eq!(p.degree(), 3);

        // zero polynomial: degree 0 by convention
        assert_eq!(Polynomial::zero(4).degree(), 0);
        assert_eq!(Polynomial::zero(4).weight(), int(0));
    }

    #[test]
    fn chebyshev_base_cases_and_values() {
        assert_eq!(chebyshev(0).into_poly(), Polynomial::one());
        assert_eq!(chebyshev(1).into_poly(), Polynomial::var(1));

        // T_2 = 2x^2 - 1
        let t2 = chebyshev(2).into_poly();
        assert_eq!(t2.coefficient(&Monomial::from_pairs(&[(1, 2)])), int(2));
        assert_eq!(t2.coefficient(&Monomial::unit()), int(-1));

        // T_4 = 8x^4 - 8x^2 + 1, weight 17 <= 2^8
        let t4 = chebyshev(4).into_poly();
        assert_eq!(t4.weight(), int(17));

        // T_5 = 16x^5 - 20x^3 + 5x, weight 41 <= 2^10
        let t5 = chebyshev(5).into_poly();
        assert_eq!(t5.coefficient(&Monomial::from_pairs(&[(1, 5)])), int(16));
        assert_eq!(t5.coefficient(&Monomial::from_pairs(&[(1, 3)])), int(-20));
        assert_eq!(t5.coefficient(&Monomial::var(1)), int(5));
        assert_eq!(t5.weight(), int(41));
        assert_eq!(t5.term_count(), 3);
    }

    #[test]
    fn clear_denominators_examples() {
        // x/2 + 1/3 -> (3x + 2, C = 6)
        let p = Polynomial::var(1)
            .scale(&rat(1, 2))
            .add(&Polynomial::constant(rat(1, 3)));
        let (ip, c) = p.clear_denominators();
        assert_eq!(c, BigInt::from(6));
        assert_eq!(ip.as_poly().coefficient(&Monomial::var(1)), int(3));
        assert_eq!(ip.as_poly().coefficient(&Monomial::unit()), int(2));

        // already integral -> C = 1
        let q = Polynomial::var(1).scale(&int(5));
        let (_, c) = q.clear_denominators();
        assert_eq!(c, BigInt::one());
    }

    #[test]
    fn multilinearize_examples() {
        let p = Polynomial::var(1).power(2);
        assert_eq!(p.multilinearize(), Polynomial::var(1));

        // (x1 + x2)^2 -> x1 + 2 x1 x2 + x2
        let q = Polynomial::var(1).add(&Polynomial::var(2)).power(2);
        let ml = q.multilinearize();
        assert_eq!(ml.coefficient(&Monomial::var(1)), int(1));
        assert_eq!(ml.coefficient(&Monomial::var(2)), int(1));
        assert_eq!(
            ml.coefficient(&Monomial::from_pairs(&[(1, 1), (2, 1)])),
            int(2)
        );

        // weight can shrink: (x1 - 1)^2 has weight 4, reduction has weight 2
        let r = Polynomial::var(1).sub(&Polynomial::one()).power(2);
        assert_eq!(r.weight(), int(4));
        assert_eq!(r.multilinearize().weight(), int(2));
    }

    #[test]
    fn text_round_trip() {
        let p = Polynomial::from_terms(
            vec![
                (Monomial::from_pairs(&[(1, 2), (3, 1)]), rat(-7, 3)),
                (Monomial::var(2), int(4)),
                (Monomial::unit(), rat(1, 2)),
            ],
            5,
        );
        let text = p.to_string();
        let back: Polynomial = text.parse().unwrap();
        assert_eq!(back, p);
        assert_eq!(back.to_string(), text);
    }

    #[test]
    fn record_round_trip() {
        let p = Polynomial::from_terms(
            vec![
                (Monomial::from_pairs(&[(2, 3)]), rat(22, 7)),
                (Monomial::unit(), int(-1)),
            ],
            4,
        );
        let rec = PolynomialRecord::from(&p);
        let json = serde_json::to_string(&rec).unwrap();
        let rec2: PolynomialRecord = serde_json::from_str(&json).unwrap();
        let back = Polynomial::try_from(&rec2).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn integer_polynomial_rejects_fractions() {
        let p = Polynomial::constant(rat(1, 2));
        assert!(IntegerPolynomial::new(p).is_err());
    }
}
