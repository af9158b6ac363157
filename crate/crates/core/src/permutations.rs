//! Permutations with finite support, the rajcode via longest increasing
//! subsequences, decreasing Schensted insertion and shadow lines.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::compositions::WeakComposition;
use crate::diagrams::{Cell, Diagram};
use crate::error::{Error, Result};

/// A permutation of the positive integers fixing all but finitely many,
/// stored in one-line notation with its fixed tail removed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    /// Validates that `oneline` is a bijection of `[n]`.
    pub fn new(oneline: Vec<u32>) -> Result<Self> {
        let n = oneline.len();
        let mut seen = vec![false; n + 1];
        for &v in &oneline {
            if v == 0 || v as usize > n || seen[v as usize] {
                return Err(Error::Parse(format!(
                    "{oneline:?} is not a permutation of 1..={n}"
                )));
            }
            seen[v as usize] = true;
        }
        Ok(Self::trimmed(oneline))
    }

    fn trimmed(mut v: Vec<u32>) -> Self {
        while v.last().is_some_and(|&x| x as usize == v.len()) {
            v.pop();
        }
        Self(v)
    }

    pub fn identity() -> Self {
        Self::default()
    }

    /// The longest element `[n, n-1, ..., 1]` of `S_n`.
    pub fn longest(n: usize) -> Self {
        Self::trimmed((1..=n as u32).rev().collect())
    }

    /// All of `S_n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Self> {
        (1..=n as u32).permutations(n).map(Self::trimmed).collect()
    }

    /// Parses `3721564` or `3,7,2,1,5,6,4` and also returns the number of
    /// entries given, which callers may use as the ambient size.
    pub fn parse_with_size(s: &str) -> Result<(Self, usize)> {
        let s = s.trim();
        let entries: Vec<u32> = if s.contains(',') {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("invalid permutation entry {t:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|ch| {
                    ch.to_digit(10)
                        .ok_or_else(|| Error::Parse(format!("invalid permutation {s:?}")))
                })
                .collect::<Result<_>>()?
        };
        if entries.is_empty() {
            return Err(Error::Parse("empty permutation".into()));
        }
        let n = entries.len();
        Ok((Self::new(entries)?, n))
    }

    pub fn oneline(&self) -> &[u32] {
        &self.0
    }

    /// Length of the stored one-line word; the smallest `n` with `w` in `S_n`
    /// is `max(len, 1)`.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    /// `w(i)` for `i >= 1`.
    pub fn value(&self, i: usize) -> u32 {
        self.0.get(i.wrapping_sub(1)).copied().unwrap_or(i as u32)
    }

    /// One-line notation as an element of `S_n`.
    pub fn padded(&self, n: usize) -> Result<Vec<u32>> {
        self.check_ambient(n)?;
        Ok((1..=n).map(|i| self.value(i)).collect())
    }

    fn check_ambient(&self, n: usize) -> Result<()> {
        if n < self.len() {
            return Err(Error::AmbientTooSmall {
                ambient: n,
                len: self.len(),
            });
        }
        Ok(())
    }

    pub fn inverse(&self) -> Self {
        let mut v = vec![0; self.len()];
        for (i, &x) in self.0.iter().enumerate() {
            v[x as usize - 1] = i as u32 + 1;
        }
        Self::trimmed(v)
    }

    /// `w s_i`: exchange positions `i` and `i+1`.
    pub fn times_s(&self, i: usize) -> Self {
        assert!(i >= 1);
        let mut v: Vec<u32> = (1..=self.len().max(i + 1)).map(|j| self.value(j)).collect();
        v.swap(i - 1, i);
        Self::trimmed(v)
    }

    pub fn has_ascent(&self, i: usize) -> bool {
        self.value(i) < self.value(i + 1)
    }

    pub fn inversions(&self) -> BTreeSet<(usize, usize)> {
        let n = self.len();
        (1..=n)
            .tuple_combinations()
            .filter(|&(i, j)| self.value(i) > self.value(j))
            .collect()
    }

    pub fn invcode(&self) -> WeakComposition {
        WeakComposition::new(
            (1..=self.len())
                .map(|i| {
                    (i + 1..=self.len())
                        .filter(|&j| self.value(i) > self.value(j))
                        .count() as u32
                })
                .collect(),
        )
    }

    pub fn inv(&self) -> u32 {
        self.invcode().size()
    }

    pub fn rothe_diagram(&self) -> Diagram {
        Diagram::rothe(self)
    }

    /// `LIS^w(w(r))` for every position `r` of `w` in `S_n`.
    pub fn lis_by_position(&self, n: usize) -> Result<Vec<u32>> {
        let v = self.padded(n)?;
        let mut lis = vec![1u32; n];
        for i in (0..n).rev() {
            lis[i] = 1
                + (i + 1..n)
                    .filter(|&j| v[j] > v[i])
                    .map(|j| lis[j])
                    .max()
                    .unwrap_or(0);
        }
        Ok(lis)
    }

    /// Length of the longest increasing subsequence of `w` in `S_n` that
    /// starts with the value `q`.
    pub fn lis_from(&self, q: u32, n: usize) -> Result<u32> {
        if q == 0 || q as usize > n {
            return Err(Error::ValueAbsent(q));
        }
        let lis = self.lis_by_position(n)?;
        let pos = (1..=n)
            .find(|&i| self.value(i) == q)
            .expect("q lies in [n]");
        Ok(lis[pos - 1])
    }

    /// `rajcode(w)_r = n + 1 - r - LIS^w(w(r))`.
    pub fn rajcode(&self, n: usize) -> Result<WeakComposition> {
        let lis = self.lis_by_position(n)?;
        Ok(WeakComposition::new(
            lis.iter()
                .enumerate()
                .map(|(i, &l)| (n - i) as u32 - l)
                .collect(),
        ))
    }

    pub fn raj(&self, n: usize) -> Result<u32> {
        Ok(self.rajcode(n)?.size())
    }

    /// The maximal decreasing runs of `w^{-1}` start with increasing values.
    pub fn is_inverse_fireworks(&self) -> bool {
        let inv = self.inverse();
        let v = inv.oneline();
        let initials: Vec<u32> = (0..v.len())
            .filter(|&i| i == 0 || v[i - 1] < v[i])
            .map(|i| v[i])
            .collect();
        initials.windows(2).all(|p| p[0] < p[1])
    }

    /// Insert `w(n), ..., w(1)` into a tableau with decreasing rows and columns.
    pub fn schensted(&self, n: usize) -> Result<Schensted> {
        let v = self.padded(n)?;
        let mut rows: Vec<Vec<u32>> = Vec::new();
        let mut events = Vec::with_capacity(n);
        for r in (1..=n).rev() {
            let mut x = v[r - 1];
            let mut level = 0;
            loop {
                if level == rows.len() {
                    rows.push(Vec::new());
                }
                let row = &mut rows[level];
                match row.iter().position(|&y| y < x) {
                    None => {
                        row.push(x);
                        if level == 0 {
                            events.push(RowOneEvent::Append {
                                position: r,
                                value: x,
                                column: row.len(),
                            });
                        }
                        break;
                    }
                    Some(k) => {
                        let bumped = std::mem::replace(&mut row[k], x);
                        if level == 0 {
                            events.push(RowOneEvent::Bump {
                                position: r,
                                value: x,
                                bumped,
                                column: k + 1,
                            });
                        }
                        x = bumped;
                        level += 1;
                    }
                }
            }
        }
        Ok(Schensted {
            tableau: PartialTableau { rows },
            events,
        })
    }

    /// Shadow lines of the points `(i, w(i))`, `i` in `[n]`, where `(m, v)`
    /// lies in the shadow of `(i, j)` when `m <= i` and `v <= j`.
    pub fn shadow_lines(&self, n: usize) -> Result<Vec<ShadowLine>> {
        let v = self.padded(n)?;
        let mut remaining: Vec<Cell> = (1..=n).map(|i| (i as u32, v[i - 1])).collect();
        let mut lines = Vec::new();
        while !remaining.is_empty() {
            let (mut line, rest): (Vec<Cell>, Vec<Cell>) = remaining.iter().partition(|&&p| {
                !remaining
                    .iter()
                    .any(|&q| q != p && p.0 <= q.0 && p.1 <= q.1)
            });
            line.sort_by_key(|p| std::cmp::Reverse(p.0));
            lines.push(ShadowLine { points: line });
            remaining = rest;
        }
        Ok(lines)
    }

    pub fn turning_points(&self, n: usize) -> Result<BTreeSet<Cell>> {
        Ok(self
            .shadow_lines(n)?
            .iter()
            .flat_map(ShadowLine::turning_points)
            .collect())
    }
}

impl fmt::Display for Permutation {
    /// Digits run together when every entry is a single digit, otherwise
    /// comma-separated; the identity prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        if self.0.len() <= 9 {
            write!(f, "{}", self.0.iter().join(""))
        } else {
            write!(f, "{}", self.0.iter().join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_with_size(s).map(|(w, _)| w)
    }
}

/// A tableau whose rows and columns are decreasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialTableau {
    rows: Vec<Vec<u32>>,
}

impl PartialTableau {
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn row_one(&self) -> &[u32] {
        self.rows.first().map_or(&[], |r| r.as_slice())
    }
}

/// What happened in row one when `w(position)` was inserted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowOneEvent {
    Append {
        position: usize,
        value: u32,
        column: usize,
    },
    Bump {
        position: usize,
        value: u32,
        bumped: u32,
        column: usize,
    },
}

impl RowOneEvent {
    pub fn position(&self) -> usize {
        match *self {
            Self::Append { position, .. } | Self::Bump { position, .. } => position,
        }
    }

    pub fn value(&self) -> u32 {
        match *self {
            Self::Append { value, .. } | Self::Bump { value, .. } => value,
        }
    }

    pub fn column(&self) -> usize {
        match *self {
            Self::Append { column, .. } | Self::Bump { column, .. } => column,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Schensted {
    pub tableau: PartialTableau,
    /// One event per inserted value, in insertion order (position `n` first).
    pub events: Vec<RowOneEvent>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShadowLine {
    points: Vec<Cell>,
}

impl ShadowLine {
    /// Points `(i, w(i))` ordered by decreasing row index.
    pub fn points(&self) -> &[Cell] {
        &self.points
    }

    /// `(i_{k+1}, w(i_k))` for consecutive points.
    pub fn turning_points(&self) -> Vec<Cell> {
        self.points.windows(2).map(|p| (p[1].0, p[0].1)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn wc(v: &[u32]) -> WeakComposition {
        WeakComposition::from(v)
    }

    #[test]
    fn canonical_form() {
        assert_eq!(p("1324"), p("132"));
        assert_eq!(p("123"), Permutation::identity());
        assert_eq!(p("1").to_string(), "1");
        assert_eq!(p("2,1,3").to_string(), "21");
        assert!("1224".parse::<Permutation>().is_err());
        assert!("".parse::<Permutation>().is_err());
        assert_eq!(Permutation::parse_with_size("1324").unwrap().1, 4);
        let big = p("10,9,8,7,6,5,4,3,2,1");
        assert_eq!(big.to_string(), "10,9,8,7,6,5,4,3,2,1");
        assert_eq!(big.to_string().parse::<Permutation>().unwrap(), big);
    }

    #[test]
    fn inversion_statistics() {
        let w = p("41532");
        assert_eq!(
            w.inversions(),
            BTreeSet::from([(1, 2), (1, 4), (1, 5), (3, 4), (3, 5), (4, 5)])
        );
        assert_eq!(w.invcode(), wc(&[3, 0, 2, 1]));
        assert_eq!(Permutation::identity().invcode(), WeakComposition::empty());
        assert_eq!(w.inv(), 6);
        assert_eq!(w.inverse().inverse(), w);
        assert_eq!(p("2143").times_s(1), p("1243"));
    }

    #[test]
    fn lis_examples() {
        let w = p("3721564");
        assert_eq!(w.lis_from(2, 7).unwrap(), 3);
        assert_eq!(w.lis_from(7, 7).unwrap(), 1);
        assert_eq!(Permutation::identity().lis_from(1, 5).unwrap(), 5);
        assert_eq!(w.lis_from(8, 7), Err(Error::ValueAbsent(8)));
        assert_eq!(
            w.lis_from(1, 3),
            Err(Error::AmbientTooSmall { ambient: 3, len: 7 })
        );
    }

    #[test]
    fn rajcode_examples() {
        assert_eq!(p("3721564").rajcode(7).unwrap(), wc(&[4, 5, 2, 1, 1, 1]));
        assert_eq!(p("3721564").raj(7).unwrap(), 14);
        assert_eq!(
            Permutation::identity().rajcode(4).unwrap(),
            WeakComposition::empty()
        );
        assert_eq!(p("1432").rajcode(4).unwrap(), wc(&[2, 2, 1]));
        assert_eq!(p("1432").rajcode(6).unwrap(), wc(&[2, 2, 1]));
    }

    #[test]
    fn inverse_fireworks_examples() {
        assert!(p("4312").is_inverse_fireworks());
        assert!(!p("2341").is_inverse_fireworks());
        assert!(Permutation::identity().is_inverse_fireworks());
    }

    #[test]
    fn schensted_examples() {
        let s = p("3721564").schensted(7).unwrap();
        assert_eq!(s.tableau.rows(), &[vec![7, 5, 3], vec![6, 2], vec![4, 1]]);
        let e = s.events.iter().find(|e| e.position() == 4).unwrap();
        assert_eq!(
            *e,
            RowOneEvent::Append {
                position: 4,
                value: 1,
                column: 3
            }
        );

        let s = Permutation::identity().schensted(3).unwrap();
        assert_eq!(s.tableau.rows(), &[vec![3, 2, 1]]);
        let s = p("21").schensted(2).unwrap();
        assert_eq!(s.tableau.rows(), &[vec![2], vec![1]]);
    }

    #[test]
    fn shadow_examples() {
        let w = p("3721564");
        let lines = w.shadow_lines(7).unwrap();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[0].points(), &[(7, 4), (6, 6), (2, 7)]);
        assert_eq!(lines[1].points(), &[(5, 5)]);
        assert_eq!(lines[2].points(), &[(4, 1), (3, 2), (1, 3)]);
        assert_eq!(
            w.turning_points(7).unwrap(),
            BTreeSet::from([(3, 1), (1, 2), (6, 4), (2, 6)])
        );
        assert!(Permutation::identity()
            .turning_points(4)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn enumeration() {
        assert_eq!(Permutation::all(3).len(), 6);
        assert_eq!(Permutation::all(1), vec![Permutation::identity()]);
        assert_eq!(Permutation::longest(3), p("321"));
    }
}
