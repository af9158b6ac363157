//! Grothendieck and Lascoux polynomials, their top components and the
//! expansions among them.

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;
use std::sync::{Arc, LazyLock, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::compositions::{enumerate_cn, enumerate_snowy_cn, snowy_from_rajcode, WeakComposition};
use crate::error::{Error, Result};
use crate::permutations::Permutation;
use crate::polyring::{Monomial, Polynomial};

/// Which ascent the recursions step through. Results do not depend on it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum AscentRule {
    #[default]
    First,
    Last,
}

type Memo<K> = Mutex<HashMap<K, Arc<OnceLock<Polynomial>>>>;

/// Memo tables for Grothendieck and Lascoux polynomials. Lookups may run
/// concurrently; every key is computed at most once.
#[derive(Default)]
pub struct PolyCache {
    groth: Memo<Permutation>,
    lascoux: Memo<WeakComposition>,
}

fn memoized<K: Clone + Eq + Hash>(
    memo: &Memo<K>,
    key: &K,
    compute: impl FnOnce() -> Polynomial,
) -> Polynomial {
    let slot = memo
        .lock()
        .expect("cache lock poisoned")
        .entry(key.clone())
        .or_default()
        .clone();
    slot.get_or_init(compute).clone()
}

fn one_plus_beta_x(i: usize) -> Polynomial {
    &Polynomial::one()
        + &Polynomial::from(Monomial::new(
            {
                let mut v = vec![0; i];
                v[i - 1] = 1;
                v
            },
            1,
        ))
}

fn staircase(n: usize) -> Vec<u32> {
    (1..n as u32).rev().collect()
}

fn groth_ascent(w: &Permutation, rule: AscentRule) -> Option<usize> {
    let n = w.len();
    let mut ascents = (1..n).filter(|&i| w.has_ascent(i));
    match rule {
        AscentRule::First => ascents.next(),
        AscentRule::Last => ascents.next_back(),
    }
}

/// `G_w` from `G_{w s_i}` when `i` is an ascent, or the staircase monomial.
fn groth_step(
    w: &Permutation,
    rule: AscentRule,
    recurse: impl FnOnce(&Permutation) -> Polynomial,
) -> Polynomial {
    match groth_ascent(w, rule) {
        None => Polynomial::x_power(&staircase(w.len())),
        Some(i) => (&one_plus_beta_x(i + 1) * &recurse(&w.times_s(i))).divided_difference(i),
    }
}

fn lascoux_ascent(alpha: &WeakComposition, rule: AscentRule) -> Option<usize> {
    match rule {
        AscentRule::First => alpha.first_ascent(),
        AscentRule::Last => alpha.last_ascent(),
    }
}

fn lascoux_step(
    alpha: &WeakComposition,
    rule: AscentRule,
    recurse: impl FnOnce(&WeakComposition) -> Polynomial,
) -> Polynomial {
    match lascoux_ascent(alpha, rule) {
        None => Polynomial::x_power(alpha.entries()),
        Some(i) => (&one_plus_beta_x(i + 1) * &recurse(&alpha.s_action(i))).demazure(i),
    }
}

impl PolyCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn grothendieck(&self, w: &Permutation) -> Polynomial {
        memoized(&self.groth, w, || {
            groth_step(w, AscentRule::First, |v| self.grothendieck(v))
        })
    }

    pub fn lascoux(&self, alpha: &WeakComposition) -> Polynomial {
        memoized(&self.lascoux, alpha, || {
            lascoux_step(alpha, AscentRule::First, |a| self.lascoux(a))
        })
    }

    pub fn top_grothendieck(&self, w: &Permutation) -> Polynomial {
        top(&self.grothendieck(w))
    }

    pub fn top_lascoux(&self, alpha: &WeakComposition) -> Polynomial {
        top(&self.lascoux(alpha))
    }

    /// Number of memoized Grothendieck and Lascoux polynomials.
    pub fn len(&self) -> (usize, usize) {
        (
            self.groth.lock().expect("cache lock poisoned").len(),
            self.lascoux.lock().expect("cache lock poisoned").len(),
        )
    }

    pub fn is_empty(&self) -> bool {
        self.len() == (0, 0)
    }
}

static DEFAULT_CACHE: LazyLock<PolyCache> = LazyLock::new(PolyCache::new);

/// The process-wide cache used by the free functions of this module.
pub fn default_cache() -> &'static PolyCache {
    &DEFAULT_CACHE
}

fn top(f: &Polynomial) -> Polynomial {
    f.top_component().expect("recursions never produce zero").1
}

/// The Grothendieck polynomial `G_w`.
pub fn grothendieck(w: &Permutation) -> Polynomial {
    DEFAULT_CACHE.grothendieck(w)
}

/// `G_w` without memoization, stepping through the ascent chosen by `rule`.
pub fn grothendieck_uncached(w: &Permutation, rule: AscentRule) -> Polynomial {
    groth_step(w, rule, |v| grothendieck_uncached(v, rule))
}

/// The Schubert polynomial, the `b^0` part of `G_w`.
pub fn schubert(w: &Permutation) -> Polynomial {
    grothendieck(w).beta_component(0)
}

/// The Lascoux polynomial `L_alpha`.
pub fn lascoux(alpha: &WeakComposition) -> Polynomial {
    DEFAULT_CACHE.lascoux(alpha)
}

pub fn lascoux_uncached(alpha: &WeakComposition, rule: AscentRule) -> Polynomial {
    lascoux_step(alpha, rule, |a| lascoux_uncached(a, rule))
}

/// The key polynomial, the `b^0` part of `L_alpha`.
pub fn key_polynomial(alpha: &WeakComposition) -> Polynomial {
    lascoux(alpha).beta_component(0)
}

/// Top `b`-degree component of `G_w`, as an x-polynomial.
pub fn top_grothendieck(w: &Permutation) -> Polynomial {
    DEFAULT_CACHE.top_grothendieck(w)
}

/// Top `b`-degree component of `L_alpha`, as an x-polynomial.
pub fn top_lascoux(alpha: &WeakComposition) -> Polynomial {
    DEFAULT_CACHE.top_lascoux(alpha)
}

/// The top Lascoux polynomial of a snowy composition computed directly:
/// `x^alpha` when weakly decreasing, else `pi_i(x_{i+1} * top(s_i alpha))`.
pub fn top_lascoux_recursive(alpha: &WeakComposition) -> Result<Polynomial> {
    if !alpha.is_snowy() {
        return Err(Error::NotSnowy(alpha.to_string()));
    }
    Ok(match alpha.first_ascent() {
        None => Polynomial::x_power(alpha.entries()),
        Some(i) => {
            (&Polynomial::x(i + 1) * &top_lascoux_recursive(&alpha.s_action(i))?).demazure(i)
        }
    })
}

fn expand_greedy<K: Ord + Clone>(
    f: &Polynomial,
    mut basis_for: impl FnMut(&Monomial) -> Result<(K, Polynomial)>,
) -> Result<BTreeMap<K, BigInt>> {
    if !f.is_pure_x() {
        return Err(Error::BetaPresent);
    }
    let mut rest = f.clone();
    let mut out = BTreeMap::new();
    while !rest.is_zero() {
        let (mu, c) = rest.leading_monomial_taillex()?;
        let (key, element) = basis_for(&mu)?;
        let (lead, lead_coeff) = element.leading_monomial_taillex()?;
        if lead != mu || !lead_coeff.is_one() {
            return Err(Error::ExpansionFailed(format!(
                "basis element for {mu} has leading term {lead_coeff}*{lead}"
            )));
        }
        rest -= &element.scale(&c);
        *out.entry(key).or_insert_with(BigInt::zero) += c;
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// Writes an x-polynomial as an integer combination of the top Lascoux
/// polynomials of snowy compositions in `C_n`.
///
/// Each step removes the tail-lex leading monomial `x^mu` using the snowy
/// composition whose rajcode is `mu`; its top Lascoux polynomial has leading
/// term exactly `x^mu`, so coefficients stay integral.
pub fn expand_top_into_snowy_basis(
    f: &Polynomial,
    n: usize,
) -> Result<BTreeMap<WeakComposition, BigInt>> {
    expand_greedy(f, |mu| {
        let code = WeakComposition::new(mu.xexp().to_vec());
        let alpha = snowy_from_rajcode(&code)
            .filter(|a| a.in_cn(n))
            .ok_or_else(|| Error::NoBasisElement(mu.to_string()))?;
        let element = top_lascoux(&alpha);
        Ok((alpha, element))
    })
}

/// Like [`expand_top_into_snowy_basis`] with the basis of top Grothendieck
/// polynomials of inverse fireworks permutations in `S_n`.
pub fn expand_top_into_fireworks_basis(
    f: &Polynomial,
    n: usize,
) -> Result<BTreeMap<Permutation, BigInt>> {
    let by_code: HashMap<WeakComposition, Permutation> = Permutation::all(n)
        .into_iter()
        .filter(Permutation::is_inverse_fireworks)
        .map(|w| (w.rajcode(n).expect("w lies in S_n"), w))
        .collect();
    expand_greedy(f, |mu| {
        let code = WeakComposition::new(mu.xexp().to_vec());
        let w = by_code
            .get(&code)
            .ok_or_else(|| Error::NoBasisElement(mu.to_string()))?;
        Ok((w.clone(), top_grothendieck(w)))
    })
}

/// Writes `G_w` as `sum_alpha g_alpha(b) L_alpha` over `alpha` in `C_n`.
///
/// Greedy elimination picks the remaining term of least x-degree, then least
/// `b`-exponent, then tail-lex largest x-part `x^mu`, and removes it with
/// `b^j L_mu`. If that stalls, the coefficients are found by exact linear
/// algebra instead. The result is checked by re-expansion.
pub fn expand_grothendieck_into_lascoux(
    w: &Permutation,
    n: usize,
) -> Result<BTreeMap<WeakComposition, Polynomial>> {
    let g = grothendieck(w);
    let out = match expand_grothendieck_greedy(&g, n) {
        Ok(out) => out,
        Err(_) => expand_grothendieck_linear(w, n)?,
    };
    let mut rebuilt = Polynomial::zero();
    for (alpha, coeff) in &out {
        rebuilt += &(coeff * &lascoux(alpha));
    }
    if rebuilt != g {
        return Err(Error::ExpansionFailed(format!(
            "re-expansion of G_{w} does not match"
        )));
    }
    Ok(out)
}

fn expand_grothendieck_greedy(
    g: &Polynomial,
    n: usize,
) -> Result<BTreeMap<WeakComposition, Polynomial>> {
    let mut rest = g.clone();
    let mut out: BTreeMap<WeakComposition, Polynomial> = BTreeMap::new();
    let mut steps = 0usize;
    while !rest.is_zero() {
        steps += 1;
        if steps > 100_000 {
            return Err(Error::ExpansionFailed(
                "greedy elimination did not terminate".into(),
            ));
        }
        let (m, c) = rest
            .terms()
            .max_by(|(a, _), (b, _)| {
                b.x_degree()
                    .cmp(&a.x_degree())
                    .then(b.bexp().cmp(&a.bexp()))
                    .then(a.cmp_taillex(b))
            })
            .map(|(m, c)| (m.clone(), c.clone()))
            .expect("remainder is nonzero");
        let alpha = WeakComposition::new(m.xexp().to_vec());
        if !alpha.in_cn(n) {
            return Err(Error::NoBasisElement(m.x_part().to_string()));
        }
        let coeff = Polynomial::term(Monomial::new(vec![], m.bexp()), c);
        rest -= &(&coeff * &lascoux(&alpha));
        *out.entry(alpha).or_default() += &coeff;
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// Solves `G_w = sum c_alpha b^(|alpha| - inv(w)) L_alpha` over the rationals.
/// The `b`-exponent is forced because every term of `G_w` has x-degree minus
/// `b`-degree equal to `inv(w)`, and every term of `L_alpha` has `|alpha|`.
pub fn expand_grothendieck_linear(
    w: &Permutation,
    n: usize,
) -> Result<BTreeMap<WeakComposition, Polynomial>> {
    let g = grothendieck(w);
    let inv = w.inv();
    let candidates: Vec<WeakComposition> = enumerate_cn(n)
        .into_iter()
        .filter(|a| a.size() >= inv)
        .collect();
    let columns: Vec<Polynomial> = candidates
        .iter()
        .map(|a| &Polynomial::from(Monomial::new(vec![], a.size() - inv)) * &lascoux(a))
        .collect();
    let coeffs = solve_in_span(&columns, &g)?;
    let mut out = BTreeMap::new();
    for (alpha, c) in candidates.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        if !c.is_integer() {
            return Err(Error::ExpansionFailed(format!(
                "coefficient {c} of L_{alpha} is not an integer"
            )));
        }
        let b = Monomial::new(vec![], alpha.size() - inv);
        out.insert(alpha.clone(), Polynomial::term(b, c.to_integer()));
    }
    Ok(out)
}

/// Exact coefficients `c` with `sum c_k columns[k] = target`, by Gaussian
/// elimination over the rationals. Errors if `target` is outside the span or
/// the columns are dependent.
fn solve_in_span(columns: &[Polynomial], target: &Polynomial) -> Result<Vec<BigRational>> {
    let mut index: BTreeMap<Monomial, usize> = BTreeMap::new();
    for p in columns.iter().chain(std::iter::once(target)) {
        for (m, _) in p.terms() {
            let next = index.len();
            index.entry(m.clone()).or_insert(next);
        }
    }
    let k = columns.len();
    let mut rows: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); k + 1]; index.len()];
    for (j, p) in columns.iter().enumerate() {
        for (m, c) in p.terms() {
            rows[index[m]][j] = BigRational::from_integer(c.clone());
        }
    }
    for (m, c) in target.terms() {
        rows[index[m]][k] = BigRational::from_integer(c.clone());
    }
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..k {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            return Err(Error::ExpansionFailed(
                "spanning set is linearly dependent".into(),
            ));
        };
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let factor = row[col].clone();
                for (x, y) in row[col..=k].iter_mut().zip(&pivot[col..=k]) {
                    *x -= &factor * y;
                }
            }
        }
        pivots.push(r);
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[k].is_zero()) {
        return Err(Error::NoBasisElement("target is outside the span".into()));
    }
    Ok(pivots.into_iter().map(|i| rows[i][k].clone()).collect())
}

/// Index sets of the two bases of the span of top Grothendieck polynomials
/// for `S_n`: inverse fireworks permutations and snowy compositions in `C_n`.
pub fn vhat_basis(n: usize) -> (Vec<Permutation>, Vec<WeakComposition>) {
    let perms = Permutation::all(n)
        .into_iter()
        .filter(Permutation::is_inverse_fireworks)
        .collect();
    (perms, enumerate_snowy_cn(n))
}

/// Whether every coefficient in an expansion is nonnegative.
pub fn is_nonnegative<K>(expansion: &BTreeMap<K, BigInt>) -> bool {
    expansion.values().all(|c| !c.is_negative())
}
