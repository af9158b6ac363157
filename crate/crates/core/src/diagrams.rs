//! Finite cell diagrams and the snow diagram construction.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::compositions::WeakComposition;
use crate::error::{Error, Result};
use crate::permutations::Permutation;

/// A cell `(row, col)`, both 1-indexed; row 1 is the top row.
pub type Cell = (u32, u32);

/// A finite set of cells, iterated in `(row, col)` order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    cells: BTreeSet<Cell>,
}

impl Diagram {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a diagram, rejecting cells with a zero coordinate.
    pub fn from_cells<I: IntoIterator<Item = Cell>>(cells: I) -> Result<Self> {
        let cells: BTreeSet<Cell> = cells.into_iter().collect();
        if let Some(&(r, c)) = cells.iter().find(|(r, c)| *r == 0 || *c == 0) {
            return Err(Error::Parse(format!(
                "cell ({r},{c}) has a zero coordinate"
            )));
        }
        Ok(Self { cells })
    }

    pub(crate) fn from_set(cells: BTreeSet<Cell>) -> Self {
        Self { cells }
    }

    /// `D(alpha)`: row `r` holds columns `1..=alpha_r`.
    pub fn key(alpha: &WeakComposition) -> Self {
        let cells = alpha
            .entries()
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| (1..=a).map(move |c| (i as u32 + 1, c)))
            .collect();
        Self { cells }
    }

    /// `RD(w)`: cells `(r, w(r'))` for every inversion `(r, r')` of `w`.
    pub fn rothe(w: &Permutation) -> Self {
        let v = w.oneline();
        let mut cells = BTreeSet::new();
        for r in 0..v.len() {
            for s in r + 1..v.len() {
                if v[r] > v[s] {
                    cells.insert((r as u32 + 1, v[s]));
                }
            }
        }
        Self { cells }
    }

    /// `Stair_n`, the key diagram of `(n-1, ..., 1)`.
    pub fn stair(n: usize) -> Self {
        assert!(n >= 1, "Stair_n requires n >= 1");
        Self::key(&WeakComposition::new((1..n as u32).rev().collect()))
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.contains(&cell)
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> impl DoubleEndedIterator<Item = Cell> + '_ {
        self.cells.iter().copied()
    }

    pub fn cell_set(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    /// Columns of row `r`, increasing.
    pub fn row(&self, r: u32) -> impl DoubleEndedIterator<Item = u32> + '_ {
        self.cells.range((r, 0)..=(r, u32::MAX)).map(|&(_, c)| c)
    }

    pub fn max_row(&self) -> u32 {
        self.cells.iter().next_back().map_or(0, |&(r, _)| r)
    }

    pub fn max_col(&self) -> u32 {
        self.cells.iter().map(|&(_, c)| c).max().unwrap_or(0)
    }

    /// Number of cells in each row.
    pub fn weight(&self) -> WeakComposition {
        let mut v = vec![0; self.max_row() as usize];
        for &(r, _) in &self.cells {
            v[r as usize - 1] += 1;
        }
        WeakComposition::new(v)
    }

    /// Every cell together with all cells above it in its column.
    pub fn overline(&self) -> Self {
        let cells = self
            .cells
            .iter()
            .flat_map(|&(r, c)| (1..=r).map(move |s| (s, c)))
            .collect();
        Self { cells }
    }

    pub fn union(&self, other: &Self) -> Self {
        Self {
            cells: self.cells.union(&other.cells).copied().collect(),
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.cells.is_subset(&other.cells)
    }

    pub fn snow(&self) -> SnowDiagram {
        let mut used_cols = BTreeSet::new();
        let mut dark = BTreeSet::new();
        let mut snowflakes = BTreeSet::new();
        for r in (1..=self.max_row()).rev() {
            let Some(c) = self.row(r).rev().find(|c| !used_cols.contains(c)) else {
                continue;
            };
            used_cols.insert(c);
            dark.insert((r, c));
            snowflakes.extend((1..r).map(|s| (s, c)).filter(|&cell| !self.contains(cell)));
        }
        SnowDiagram {
            base: self.clone(),
            dark,
            snowflakes,
        }
    }

    pub fn dark(&self) -> RookDiagram {
        RookDiagram {
            cells: self.snow().dark,
        }
    }

    pub fn rajcode(&self) -> WeakComposition {
        self.snow().weight()
    }

    pub fn raj(&self) -> u32 {
        self.snow().raj()
    }

    pub fn render_ascii(&self) -> String {
        render(self.max_row(), self.max_col(), |cell| {
            self.contains(cell).then_some('·')
        })
    }
}

impl fmt::Display for Diagram {
    /// Cells as `r,c;r,c`, the same syntax accepted by `FromStr`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.cells.iter().map(|(r, c)| format!("{r},{c}")).collect();
        f.write_str(&parts.join(";"))
    }
}

impl FromStr for Diagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let cells = parse_cells(s)?;
        Self::from_cells(cells)
    }
}

/// Parses `r,c;r,c;...` (empty input is the empty list).
pub fn parse_cells(s: &str) -> Result<Vec<Cell>> {
    s.split(';')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            let t = t.trim_start_matches('(').trim_end_matches(')');
            let bad = || Error::Parse(format!("invalid cell {t:?}"));
            let (r, c) = t.split_once(',').ok_or_else(bad)?;
            Ok((
                r.trim().parse().map_err(|_| bad())?,
                c.trim().parse().map_err(|_| bad())?,
            ))
        })
        .collect()
}

/// Label of a cell in a snow diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SnowLabel {
    Plain,
    DarkCloud,
    Snowflake,
}

/// The output of the snow algorithm: the input diagram, its dark clouds and
/// the snowflakes added above them.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SnowDiagram {
    base: Diagram,
    dark: BTreeSet<Cell>,
    snowflakes: BTreeSet<Cell>,
}

impl SnowDiagram {
    pub fn base(&self) -> &Diagram {
        &self.base
    }

    pub fn dark_clouds(&self) -> &BTreeSet<Cell> {
        &self.dark
    }

    pub fn snowflakes(&self) -> &BTreeSet<Cell> {
        &self.snowflakes
    }

    pub fn dark(&self) -> RookDiagram {
        RookDiagram {
            cells: self.dark.clone(),
        }
    }

    pub fn label(&self, cell: Cell) -> Option<SnowLabel> {
        if self.dark.contains(&cell) {
            Some(SnowLabel::DarkCloud)
        } else if self.base.contains(cell) {
            Some(SnowLabel::Plain)
        } else if self.snowflakes.contains(&cell) {
            Some(SnowLabel::Snowflake)
        } else {
            None
        }
    }

    /// Base cells together with snowflakes.
    pub fn underlying(&self) -> Diagram {
        Diagram::from_set(self.base.cells.union(&self.snowflakes).copied().collect())
    }

    pub fn labeled_cells(&self) -> BTreeMap<Cell, SnowLabel> {
        self.underlying()
            .cells()
            .map(|cell| (cell, self.label(cell).expect("cell of the snow diagram")))
            .collect()
    }

    pub fn weight(&self) -> WeakComposition {
        self.underlying().weight()
    }

    pub fn raj(&self) -> u32 {
        (self.base.len() + self.snowflakes.len()) as u32
    }

    pub fn render_ascii(&self) -> String {
        let d = self.underlying();
        render(d.max_row(), d.max_col(), |cell| {
            self.label(cell).map(|l| match l {
                SnowLabel::Plain => '·',
                SnowLabel::DarkCloud => '●',
                SnowLabel::Snowflake => '*',
            })
        })
    }
}

/// A set of cells with at most one cell in each row and each column.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RookDiagram {
    cells: BTreeSet<Cell>,
}

impl RookDiagram {
    pub fn new<I: IntoIterator<Item = Cell>>(cells: I) -> Result<Self> {
        let cells: BTreeSet<Cell> = cells.into_iter().collect();
        let mut rows = BTreeSet::new();
        let mut cols = BTreeSet::new();
        for &(r, c) in &cells {
            if r == 0 || c == 0 {
                return Err(Error::Parse(format!(
                    "cell ({r},{c}) has a zero coordinate"
                )));
            }
            if !rows.insert(r) {
                return Err(Error::AttackingRooks(format!("row {r}")));
            }
            if !cols.insert(c) {
                return Err(Error::AttackingRooks(format!("column {c}")));
            }
        }
        Ok(Self { cells })
    }

    pub fn cells(&self) -> impl DoubleEndedIterator<Item = Cell> + '_ {
        self.cells.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.contains(&cell)
    }

    /// Cell in row `r`, if any.
    pub fn col_of_row(&self, r: u32) -> Option<u32> {
        self.cells
            .range((r, 0)..=(r, u32::MAX))
            .next()
            .map(|&(_, c)| c)
    }

    pub fn as_diagram(&self) -> Diagram {
        Diagram::from_set(self.cells.clone())
    }

    /// Cells sorted by column.
    pub fn by_column(&self) -> Vec<Cell> {
        let mut v: Vec<Cell> = self.cells.iter().copied().collect();
        v.sort_by_key(|&(r, c)| (c, r));
        v
    }
}

impl TryFrom<Diagram> for RookDiagram {
    type Error = Error;

    fn try_from(d: Diagram) -> Result<Self> {
        Self::new(d.cells)
    }
}

impl fmt::Display for RookDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.as_diagram().fmt(f)
    }
}

fn render(max_row: u32, max_col: u32, glyph: impl Fn(Cell) -> Option<char>) -> String {
    let width = max_row.to_string().len();
    let mut out = String::new();
    for r in 1..=max_row {
        let line: String = (1..=max_col)
            .map(|c| glyph((r, c)).unwrap_or(' '))
            .collect();
        let line = format!("{r:>width$} {line}");
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
