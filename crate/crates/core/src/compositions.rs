//! Weak compositions, snowiness and rajcode equivalence.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::diagrams::{Diagram, RookDiagram};
use crate::error::{Error, Result};
use crate::polyring::Monomial;

/// A finitely supported sequence of nonnegative integers, stored without
/// trailing zeros. Indexing is 1-based: `alpha.get(1)` is the first entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct WeakComposition(Vec<u32>);

impl WeakComposition {
    pub fn new(mut entries: Vec<u32>) -> Self {
        while entries.last() == Some(&0) {
            entries.pop();
        }
        Self(entries)
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The unit vector `e_i`.
    pub fn unit(i: usize) -> Self {
        assert!(i >= 1);
        let mut v = vec![0; i];
        v[i - 1] = 1;
        Self(v)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// Entry `i` (1-indexed), zero past the stored support.
    pub fn get(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Index of the last positive entry.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|alpha|`, the sum of the entries.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn monomial(&self) -> Monomial {
        Monomial::new(self.0.clone(), 0)
    }

    pub fn is_weakly_decreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Positive entries are pairwise distinct.
    pub fn is_snowy(&self) -> bool {
        let positive = self.0.iter().filter(|&&a| a > 0);
        positive.clone().count() == positive.collect::<BTreeSet<_>>().len()
    }

    /// Smallest `i` with `alpha_i < alpha_{i+1}`.
    pub fn first_ascent(&self) -> Option<usize> {
        (1..self.len()).find(|&i| self.get(i) < self.get(i + 1))
    }

    /// Largest `i` with `alpha_i < alpha_{i+1}`.
    pub fn last_ascent(&self) -> Option<usize> {
        (1..self.len())
            .rev()
            .find(|&i| self.get(i) < self.get(i + 1))
    }

    /// `s_i alpha`: exchange entries `i` and `i+1`.
    pub fn s_action(&self, i: usize) -> Self {
        assert!(i >= 1, "s_i requires i >= 1");
        let mut v = self.0.clone();
        if v.len() < i + 1 {
            v.resize(i + 1, 0);
        }
        v.swap(i - 1, i);
        Self::new(v)
    }

    /// Entry-wise sum.
    pub fn plus(&self, other: &Self) -> Self {
        let n = self.len().max(other.len());
        Self::new((1..=n).map(|i| self.get(i) + other.get(i)).collect())
    }

    /// Whether every entry is at most the corresponding entry of `other`.
    pub fn le_entrywise(&self, other: &Self) -> bool {
        (1..=self.len()).all(|i| self.get(i) <= other.get(i))
    }

    /// Membership in `C_n`: support in `[n-1]` and `alpha_i <= n - i`.
    pub fn in_cn(&self, n: usize) -> bool {
        self.len() < n.max(1) && (1..=self.len()).all(|i| self.get(i) as usize <= n - i)
    }

    pub fn key_diagram(&self) -> Diagram {
        Diagram::key(self)
    }

    /// Weight of the snow diagram of the key diagram.
    pub fn rajcode(&self) -> WeakComposition {
        self.key_diagram().rajcode()
    }

    pub fn raj(&self) -> u32 {
        self.rajcode().size()
    }

    pub fn dark(&self) -> RookDiagram {
        self.key_diagram().dark()
    }

    /// Closed form of the rajcode for snowy compositions:
    /// `alpha_r + #{r' > r : alpha_r < alpha_r'}`.
    pub fn rajcode_snowy_direct(&self) -> Result<WeakComposition> {
        if !self.is_snowy() {
            return Err(Error::NotSnowy(self.to_string()));
        }
        Ok(Self::new(
            (1..=self.len())
                .map(|r| {
                    let a = self.get(r);
                    a + (r + 1..=self.len()).filter(|&s| a < self.get(s)).count() as u32
                })
                .collect(),
        ))
    }

    /// Closed form of `raj` for snowy compositions: `|alpha|` plus the number
    /// of pairs `r < r'` with `alpha_r < alpha_r'`.
    pub fn raj_snowy_direct(&self) -> Result<u32> {
        if !self.is_snowy() {
            return Err(Error::NotSnowy(self.to_string()));
        }
        let ascending_pairs = (1..=self.len())
            .tuple_combinations()
            .filter(|&(r, s)| self.get(r) < self.get(s))
            .count() as u32;
        Ok(self.size() + ascending_pairs)
    }

    /// The unique snowy composition with the same rajcode; it is the
    /// entry-wise minimum of its equivalence class.
    pub fn snowy_representative(&self) -> WeakComposition {
        dark_inverse(&self.dark())
    }

    pub fn raj_equivalent(&self, other: &Self) -> bool {
        self.rajcode() == other.rajcode()
    }
}

/// Inverse of `dark` on snowy compositions: row `r` of the rook diagram holds
/// `(r, alpha_r)` whenever `alpha_r > 0`.
pub fn dark_inverse(rooks: &RookDiagram) -> WeakComposition {
    let len = rooks.cells().map(|(r, _)| r as usize).max().unwrap_or(0);
    let mut v = vec![0; len];
    for (r, c) in rooks.cells() {
        v[r as usize - 1] = c;
    }
    WeakComposition::new(v)
}

/// Recover the dark-cloud diagram shared by every composition whose rajcode
/// is `code`, reading rows from the bottom up.
///
/// With `taken` the columns holding dark clouds strictly below row `r`, row
/// `r` has no dark cloud when `code_r = |taken|`, and otherwise has one in the
/// `(code_r - |taken|)`-th smallest free column. Returns `None` if `code` is
/// not the rajcode of any weak composition.
pub fn dark_from_rajcode(code: &WeakComposition) -> Option<RookDiagram> {
    let mut taken = BTreeSet::new();
    let mut cells = Vec::new();
    for r in (1..=code.len()).rev() {
        let k = code.get(r) as usize;
        if k < taken.len() {
            return None;
        }
        let rank = k - taken.len();
        if rank == 0 {
            continue;
        }
        let c = (1u32..).filter(|c| !taken.contains(c)).nth(rank - 1)?;
        taken.insert(c);
        cells.push((r as u32, c));
    }
    let rooks = RookDiagram::new(cells).ok()?;
    Some(rooks)
}

/// The snowy composition whose rajcode is `code`, if one exists.
pub fn snowy_from_rajcode(code: &WeakComposition) -> Option<WeakComposition> {
    let alpha = dark_inverse(&dark_from_rajcode(code)?);
    (alpha.rajcode() == *code).then_some(alpha)
}

/// All of `C_n` in lexicographic order (`n!` compositions).
pub fn enumerate_cn(n: usize) -> Vec<WeakComposition> {
    assert!(n >= 1, "C_n requires n >= 1");
    let mut out: Vec<_> = (1..n)
        .map(|i| 0..=(n - i) as u32)
        .multi_cartesian_product()
        .map(WeakComposition::new)
        .collect();
    if n == 1 {
        out = vec![WeakComposition::empty()];
    }
    out.sort();
    out
}

/// The snowy members of `C_n` in lexicographic order (`B_n` compositions).
pub fn enumerate_snowy_cn(n: usize) -> Vec<WeakComposition> {
    assert!(n >= 1, "C_n requires n >= 1");
    fn go(
        i: usize,
        n: usize,
        used: &mut Vec<bool>,
        cur: &mut Vec<u32>,
        out: &mut Vec<WeakComposition>,
    ) {
        if i == n {
            out.push(WeakComposition::new(cur.clone()));
            return;
        }
        for a in 0..=(n - i) as u32 {
            if a > 0 && used[a as usize] {
                continue;
            }
            used[a as usize] = a > 0;
            cur.push(a);
            go(i + 1, n, used, cur, out);
            cur.pop();
            used[a as usize] = false;
        }
    }
    let mut out = Vec::new();
    go(1, n, &mut vec![false; n + 1], &mut Vec::new(), &mut out);
    out.sort();
    out
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

impl FromStr for WeakComposition {
    type Err = Error;

    /// Accepts `2,0,4,3,1`, `(2,0,4,3,1)` and `()`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .trim();
        if inner.is_empty() {
            return Ok(Self::empty());
        }
        inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("invalid composition entry {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }
}

impl From<Vec<u32>> for WeakComposition {
    fn from(v: Vec<u32>) -> Self {
        Self::new(v)
    }
}

impl From<&[u32]> for WeakComposition {
    fn from(v: &[u32]) -> Self {
        Self::new(v.to_vec())
    }
}
