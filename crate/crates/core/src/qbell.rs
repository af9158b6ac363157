//! q-Stirling and q-Bell numbers, rook placements in the staircase and
//! Hilbert series of the spans of top Grothendieck polynomials.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::compositions::{dark_inverse, enumerate_snowy_cn, WeakComposition};
use crate::diagrams::{Cell, Diagram, RookDiagram};
use crate::error::{Error, Result};

/// A polynomial in one variable `q` with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    pub fn new<T: Into<BigInt>>(coeffs: Vec<T>) -> Self {
        let mut coeffs: Vec<BigInt> = coeffs.into_iter().map(Into::into).collect();
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::new(vec![1])
    }

    /// `q^k`.
    pub fn q_power(k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = BigInt::one();
        Self { coeffs: v }
    }

    /// `[k]_q = 1 + q + ... + q^(k-1)`.
    pub fn q_integer(k: usize) -> Self {
        Self::new(vec![1; k])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Self { coeffs: v }
    }

    /// Coefficients reversed: `q^deg f(1/q)`.
    pub fn reversed(&self) -> Self {
        Self::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// Terms of degree at most `n`.
    pub fn truncated(&self, n: usize) -> Self {
        Self::new(self.coeffs.iter().take(n + 1).cloned().collect())
    }

    /// Adds `c q^k`.
    pub fn add_term(&mut self, k: usize, c: impl Into<BigInt>) {
        if self.coeffs.len() <= k {
            self.coeffs.resize(k + 1, BigInt::zero());
        }
        self.coeffs[k] += c.into();
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl Add<&QPolynomial> for &QPolynomial {
    type Output = QPolynomial;

    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPolynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Mul<&QPolynomial> for &QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        QPolynomial::new(v)
    }
}

impl fmt::Display for QPolynomial {
    /// `1 + 2*q + q^3`; the zero polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let var = match k {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{k}"),
            };
            let mag = c.magnitude();
            let body = match (mag.is_one(), var.is_empty()) {
                (_, true) => mag.to_string(),
                (true, false) => var,
                (false, false) => format!("{mag}*{var}"),
            };
            let negative = c.sign() == num_bigint::Sign::Minus;
            out.push_str(match (out.is_empty(), negative) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            });
            out.push_str(&body);
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

/// `S_{n,k}(q)` from `S_{n+1,k} = q^(k-1) S_{n,k-1} + [k]_q S_{n,k}`.
pub fn q_stirling(n: usize, k: usize) -> QPolynomial {
    q_stirling_table(n)
        .swap_remove(n)
        .into_iter()
        .nth(k)
        .unwrap_or_default()
}

/// Rows `0..=n` of the q-Stirling triangle.
fn q_stirling_table(n: usize) -> Vec<Vec<QPolynomial>> {
    let mut rows = vec![vec![QPolynomial::one()]];
    for m in 0..n {
        let prev = &rows[m];
        let row: Vec<QPolynomial> = (0..=m + 1)
            .map(|k| {
                let mut s = QPolynomial::zero();
                if k >= 1 && k - 1 < prev.len() {
                    s = &s + &prev[k - 1].shift(k - 1);
                }
                if k < prev.len() {
                    s = &s + &(&QPolynomial::q_integer(k) * &prev[k]);
                }
                s
            })
            .collect();
        rows.push(row);
    }
    rows
}

/// `B_n(q) = sum_k S_{n,k}(q)`.
pub fn q_bell(n: usize) -> QPolynomial {
    q_stirling_table(n)
        .swap_remove(n)
        .iter()
        .fold(QPolynomial::zero(), |acc, s| &acc + s)
}

/// `B_n(q)` from `B_{m+1}(q) = sum_j q^j C(m,j) B_j(q)`.
pub fn q_bell_by_binomial_recurrence(n: usize) -> QPolynomial {
    let mut b = vec![QPolynomial::one()];
    for m in 0..n {
        let next = (0..=m).fold(QPolynomial::zero(), |acc, j| {
            &acc + &b[j].shift(j).scale(&binomial(m, j))
        });
        b.push(next);
    }
    b.swap_remove(n)
}

fn binomial(n: usize, k: usize) -> BigInt {
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// Stirling numbers of the second kind.
pub fn stirling(n: usize, k: usize) -> BigUint {
    let mut row = vec![BigUint::one()];
    for m in 0..n {
        row = (0..=m + 1)
            .map(|j| {
                let mut s = BigUint::zero();
                if j >= 1 {
                    s += &row[j - 1];
                }
                if j < row.len() {
                    s += &row[j] * BigUint::from(j);
                }
                s
            })
            .collect();
    }
    row.get(k).cloned().unwrap_or_default()
}

pub fn bell(n: usize) -> BigUint {
    (0..=n).map(|k| stirling(n, k)).sum()
}

/// Non-attacking rook placements inside `Stair_n`, in lexicographic order of
/// their sorted cell lists.
pub fn enumerate_rook_n(n: usize) -> Vec<RookDiagram> {
    assert!(n >= 1, "Rook_n requires n >= 1");
    fn go(r: u32, n: u32, used: &mut Vec<bool>, cur: &mut Vec<Cell>, out: &mut Vec<RookDiagram>) {
        if r >= n {
            out.push(RookDiagram::new(cur.iter().copied()).expect("placement is non-attacking"));
            return;
        }
        go(r + 1, n, used, cur, out);
        for c in 1..=n - r {
            if !used[c as usize] {
                used[c as usize] = true;
                cur.push((r, c));
                go(r + 1, n, used, cur, out);
                cur.pop();
                used[c as usize] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(
        1,
        n as u32,
        &mut vec![false; n + 1],
        &mut Vec::new(),
        &mut out,
    );
    out.sort();
    out
}

/// Garsia-Remmel statistic: each rook marks itself, the cells above it and
/// the cells to its left; count the unmarked cells of `Stair_n`.
pub fn gr_stat(rooks: &RookDiagram, n: usize) -> Result<u32> {
    let stair = Diagram::stair(n);
    if !rooks.as_diagram().is_subset(&stair) {
        return Err(Error::NotInStaircase(n));
    }
    let unmarked = stair
        .cells()
        .filter(|&(r, c)| {
            !rooks
                .cells()
                .any(|(rr, rc)| (c == rc && r <= rr) || (r == rr && c <= rc))
        })
        .count();
    Ok(unmarked as u32)
}

/// Northwest statistic: `raj` of the snowy composition with these dark clouds.
pub fn nw_stat(rooks: &RookDiagram) -> u32 {
    dark_inverse(rooks).raj()
}

/// `sum over snowy alpha in C_n of q^raj(alpha)`.
pub fn hilb_vn_snowy(n: usize) -> QPolynomial {
    let mut h = QPolynomial::zero();
    for alpha in enumerate_snowy_cn(n) {
        h.add_term(alpha.raj() as usize, 1);
    }
    h
}

/// `sum over Rook_n of q^NW(R)`.
pub fn hilb_vn_rooks(n: usize) -> QPolynomial {
    let mut h = QPolynomial::zero();
    for r in enumerate_rook_n(n) {
        h.add_term(nw_stat(&r) as usize, 1);
    }
    h
}

/// `q^C(n,2) B_n(1/q)`.
pub fn hilb_vn_qbell(n: usize) -> QPolynomial {
    let b = q_bell(n);
    debug_assert_eq!(b.degree(), Some(n * (n - 1) / 2));
    b.reversed()
}

/// Hilbert series of the span of top Grothendieck polynomials for `S_n`.
///
/// # Panics
/// If the snowy-composition sum, the rook sum and the reversed q-Bell number
/// disagree.
pub fn hilb_vn(n: usize) -> QPolynomial {
    assert!(n >= 1, "requires n >= 1");
    let h = hilb_vn_snowy(n);
    assert_eq!(h, hilb_vn_rooks(n), "rook sum disagrees for n = {n}");
    assert_eq!(h, hilb_vn_qbell(n), "reversed q-Bell disagrees for n = {n}");
    h
}

/// Coefficients up to `q^limit` of `prod_{m >= 1} (1 + q^m / (1 - q))`, with
/// `1/(1-q)` truncated to `1 + q + ... + q^limit`.
pub fn hilb_v_truncated(limit: usize) -> QPolynomial {
    let geometric = QPolynomial::q_integer(limit + 1);
    (1..=limit).fold(QPolynomial::one(), |acc, m| {
        let factor = &QPolynomial::one() + &geometric.shift(m);
        (&acc * &factor).truncated(limit)
    })
}

/// Coefficients up to `q^limit` of the Hilbert series of the full span, by
/// counting snowy compositions of every length with `raj <= limit`.
///
/// A positive entry in row `r` puts a cell of the snow diagram in each of
/// rows `1..=r`, so only compositions of length and entries at most `limit`
/// can qualify.
pub fn hilb_v_by_enumeration(limit: usize) -> QPolynomial {
    fn go(
        cur: &mut Vec<u32>,
        used: &mut Vec<bool>,
        limit: usize,
        size: usize,
        h: &mut QPolynomial,
    ) {
        let alpha = WeakComposition::new(cur.clone());
        if cur.last() != Some(&0) {
            let raj = alpha.raj() as usize;
            if raj <= limit {
                h.add_term(raj, 1);
            }
        }
        if cur.len() == limit {
            return;
        }
        for a in 0..=(limit - size) as u32 {
            if a > 0 && used[a as usize] {
                continue;
            }
            used[a as usize] = a > 0;
            cur.push(a);
            go(cur, used, limit, size + a as usize, h);
            cur.pop();
            used[a as usize] = false;
        }
    }
    let mut h = QPolynomial::zero();
    go(
        &mut Vec::new(),
        &mut vec![false; limit + 1],
        limit,
        0,
        &mut h,
    );
    h
}

/// Smallest `n` at which the coefficients of `hilb_vn` up to `q^limit` stop
/// changing, searched up to `cap`, with those coefficients. The comparison
/// uses the reversed q-Bell form of `hilb_vn`.
pub fn stabilized_hilb_vn(limit: usize, cap: usize) -> Option<(usize, QPolynomial)> {
    let mut prev = hilb_vn_qbell(1).truncated(limit);
    for n in 2..=cap {
        let cur = hilb_vn_qbell(n).truncated(limit);
        if cur == prev {
            return Some((n - 1, cur));
        }
        prev = cur;
    }
    None
}
