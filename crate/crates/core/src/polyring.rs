//! Sparse polynomials with integer coefficients in `x_1, x_2, ...` and the
//! grading marker `b` (written β in the literature).
//!
//! Monomials are ordered by the tail-lexicographic order on their x-exponents
//! (the last index where two exponent vectors differ decides), with the
//! β-exponent as a tie-breaker. Every [`Polynomial`] iterates its terms in that
//! order, which makes rendering and serialization deterministic.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `x^xexp * b^bexp`, with trailing zero x-exponents trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    xexp: Vec<u32>,
    bexp: u32,
}

fn trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

impl Monomial {
    pub fn new(mut xexp: Vec<u32>, bexp: u32) -> Self {
        trim(&mut xexp);
        Self { xexp, bexp }
    }

    pub fn one() -> Self {
        Self::default()
    }

    pub fn is_one(&self) -> bool {
        self.xexp.is_empty() && self.bexp == 0
    }

    /// The variable `x_i` (1-indexed).
    pub fn x(i: usize) -> Self {
        assert!(i >= 1, "variables are 1-indexed");
        let mut xexp = vec![0; i];
        xexp[i - 1] = 1;
        Self { xexp, bexp: 0 }
    }

    pub fn xexp(&self) -> &[u32] {
        &self.xexp
    }

    pub fn bexp(&self) -> u32 {
        self.bexp
    }

    /// Exponent of `x_i` (1-indexed); zero past the stored support.
    pub fn exp(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.xexp.get(i - 1).copied().unwrap_or(0)
    }

    pub fn x_degree(&self) -> u32 {
        self.xexp.iter().sum()
    }

    /// Largest index `i` with a positive `x_i` exponent (0 for constants).
    pub fn num_vars(&self) -> usize {
        self.xexp.len()
    }

    pub fn x_part(&self) -> Monomial {
        Self {
            xexp: self.xexp.clone(),
            bexp: 0,
        }
    }

    pub fn with_bexp(&self, bexp: u32) -> Monomial {
        Self {
            xexp: self.xexp.clone(),
            bexp,
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.xexp.len() >= other.xexp.len() {
            (&self.xexp, &other.xexp)
        } else {
            (&other.xexp, &self.xexp)
        };
        let mut xexp = long.clone();
        for (e, s) in xexp.iter_mut().zip(short) {
            *e += s;
        }
        Self {
            xexp,
            bexp: self.bexp + other.bexp,
        }
    }

    /// Whether `self` divides `other` (x- and β-exponents).
    pub fn divides(&self, other: &Monomial) -> bool {
        self.bexp <= other.bexp
            && self
                .xexp
                .iter()
                .enumerate()
                .all(|(k, &e)| e <= other.exp(k + 1))
    }

    /// Copy with the exponents of `x_i` and `x_{i+1}` replaced.
    fn with_pair(&self, i: usize, a: u32, b: u32) -> Monomial {
        let mut xexp = self.xexp.clone();
        if xexp.len() < i + 1 {
            xexp.resize(i + 1, 0);
        }
        xexp[i - 1] = a;
        xexp[i] = b;
        Monomial::new(xexp, self.bexp)
    }

    /// Exchange the exponents of `x_i` and `x_{i+1}`.
    pub fn swapped(&self, i: usize) -> Monomial {
        assert!(i >= 1, "s_i requires i >= 1");
        self.with_pair(i, self.exp(i + 1), self.exp(i))
    }

    /// Tail-lexicographic comparison of the x-parts; β is ignored.
    pub fn cmp_taillex(&self, other: &Monomial) -> Ordering {
        let n = self.xexp.len().max(other.xexp.len());
        for k in (1..=n).rev() {
            match self.exp(k).cmp(&other.exp(k)) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_taillex(other).then(self.bexp.cmp(&other.bexp))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A finite `Z`-linear combination of [`Monomial`]s. No stored coefficient is zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c.into());
        p
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, 1)
    }

    /// `x^exps` for an exponent vector (`exps[0]` is the exponent of `x_1`).
    pub fn x_power(exps: &[u32]) -> Self {
        Self::monomial(Monomial::new(exps.to_vec(), 0))
    }

    pub fn x(i: usize) -> Self {
        Self::monomial(Monomial::x(i))
    }

    pub fn beta() -> Self {
        Self::monomial(Monomial::new(Vec::new(), 1))
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigInt)>,
    {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order (tail-lex on x, then β).
    pub fn terms(
        &self,
    ) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.mul(m), c.clone()))
                .collect(),
        }
    }

    /// Whether every monomial is free of β.
    pub fn is_pure_x(&self) -> bool {
        self.terms.keys().all(|m| m.bexp == 0)
    }

    /// Largest variable index occurring in the polynomial.
    pub fn num_vars(&self) -> usize {
        self.terms.keys().map(Monomial::num_vars).max().unwrap_or(0)
    }

    /// The action of `s_i`: swap `x_i` and `x_{i+1}` in every monomial.
    pub fn swap(&self, i: usize) -> Polynomial {
        Self::from_terms(self.terms.iter().map(|(m, c)| (m.swapped(i), c.clone())))
    }

    /// `(f - s_i f) / (x_i - x_{i+1})`.
    ///
    /// Computed monomial by monomial: for exponents `a > b` of `x_i, x_{i+1}`
    /// the quotient is `sum_{b <= j < a} x_i^j x_{i+1}^{a+b-1-j}`, and the
    /// case `a < b` is the negated mirror image, so no division is performed.
    pub fn divided_difference(&self, i: usize) -> Polynomial {
        assert!(i >= 1, "divided differences require i >= 1");
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let (a, b) = (m.exp(i), m.exp(i + 1));
            if a == b {
                continue;
            }
            let (lo, hi, coeff) = if a > b {
                (b, a, c.clone())
            } else {
                (a, b, -c.clone())
            };
            for j in lo..hi {
                out.add_term(m.with_pair(i, j, a + b - 1 - j), coeff.clone());
            }
        }
        debug_assert_eq!(
            &(&Polynomial::x(i) - &Polynomial::x(i + 1)) * &out,
            self - &self.swap(i),
            "divided difference is not an exact quotient"
        );
        out
    }

    /// The Demazure operator `pi_i(f) = d_i(x_i f)`.
    pub fn demazure(&self, i: usize) -> Polynomial {
        self.mul_monomial(&Monomial::x(i)).divided_difference(i)
    }

    /// The x-polynomial `[b^d] f`.
    pub fn beta_component(&self, d: u32) -> Polynomial {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.bexp == d)
                .map(|(m, c)| (m.x_part(), c.clone()))
                .collect(),
        }
    }

    /// Largest β-exponent present, `None` for the zero polynomial.
    pub fn beta_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.bexp).max()
    }

    /// `(d, [b^d] f)` for the largest `d` with a nonzero layer.
    pub fn top_component(&self) -> Result<(u32, Polynomial)> {
        let d = self.beta_degree().ok_or(Error::ZeroPolynomial)?;
        Ok((d, self.beta_component(d)))
    }

    /// The tail-lex largest monomial of a pure x-polynomial and its coefficient.
    pub fn leading_monomial_taillex(&self) -> Result<(Monomial, BigInt)> {
        if !self.is_pure_x() {
            return Err(Error::BetaPresent);
        }
        self.terms
            .iter()
            .next_back()
            .map(|(m, c)| (m.clone(), c.clone()))
            .ok_or(Error::ZeroPolynomial)
    }

    /// Whether `self = c * other` for some nonzero scalar `c`.
    pub fn is_scalar_multiple_of(&self, other: &Polynomial) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let Some(((m0, a0), (n0, b0))) = self.terms.iter().zip(other.terms.iter()).next() else {
            return true;
        };
        if m0 != n0 {
            return false;
        }
        self.terms
            .iter()
            .zip(other.terms.iter())
            .all(|((m, a), (n, b))| m == n && a * b0 == b * a0)
    }

    /// Whether every coefficient is positive.
    pub fn is_positive(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }
}

impl From<Monomial> for Polynomial {
    fn from(m: Monomial) -> Self {
        Polynomial::monomial(m)
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, a) in &self.terms {
            for (n, b) in &rhs.terms {
                out.add_term(m.mul(n), a * b);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: &Polynomial) -> Polynomial {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl Zero for Polynomial {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Polynomial {
    fn one() -> Self {
        Polynomial::one()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.bexp == 1 {
            parts.push("b".to_string());
        } else if self.bexp > 1 {
            parts.push(format!("b^{}", self.bexp));
        }
        for (k, &e) in self.xexp.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("x{}", k + 1)),
                _ => parts.push(format!("x{}^{}", k + 1, e)),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}
