//! Ghost diagrams, K-Kohnert moves and the witness construction.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;

use crate::compositions::WeakComposition;
use crate::diagrams::{Cell, Diagram};
use crate::error::{Error, Result};
use crate::polyring::{Monomial, Polynomial};

/// A diagram whose cells may be ghosts. Ghosts never move.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GhostDiagram {
    cells: BTreeMap<Cell, bool>,
}

impl GhostDiagram {
    /// Builds from `(row, col, ghost)` triples; each position may appear once.
    pub fn new<I: IntoIterator<Item = (u32, u32, bool)>>(cells: I) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (r, c, ghost) in cells {
            if r == 0 || c == 0 {
                return Err(Error::Parse(format!(
                    "cell ({r},{c}) has a zero coordinate"
                )));
            }
            if map.insert((r, c), ghost).is_some() {
                return Err(Error::Parse(format!("cell ({r},{c}) listed twice")));
            }
        }
        Ok(Self { cells: map })
    }

    pub fn from_diagram(d: &Diagram) -> Self {
        Self {
            cells: d.cells().map(|cell| (cell, false)).collect(),
        }
    }

    /// `(row, col, ghost)` in `(row, col)` order.
    pub fn cells(&self) -> impl Iterator<Item = (u32, u32, bool)> + '_ {
        self.cells.iter().map(|(&(r, c), &g)| (r, c, g))
    }

    pub fn ghosts(&self) -> impl Iterator<Item = Cell> + '_ {
        self.cells.iter().filter(|(_, &g)| g).map(|(&cell, _)| cell)
    }

    /// `Some(true)` for a ghost, `Some(false)` for a plain cell.
    pub fn get(&self, cell: Cell) -> Option<bool> {
        self.cells.get(&cell).copied()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Number of ghosts.
    pub fn excess(&self) -> u32 {
        self.ghosts().count() as u32
    }

    pub fn underlying(&self) -> Diagram {
        Diagram::from_cells(self.cells.keys().copied()).expect("cells are positive")
    }

    /// Weight of the underlying diagram; ghosts count.
    pub fn weight(&self) -> WeakComposition {
        self.underlying().weight()
    }

    /// `x^wt(D) b^ex(D)`.
    pub fn monomial(&self) -> Monomial {
        Monomial::new(self.weight().entries().to_vec(), self.excess())
    }

    /// All diagrams reachable by one K-Kohnert move.
    ///
    /// In each row only the rightmost cell may move, and only if it is not a
    /// ghost. It moves up its column to the first empty position, passing over
    /// plain cells but never over a ghost, optionally leaving a ghost behind.
    pub fn kkohnert_successors(&self) -> BTreeSet<GhostDiagram> {
        let mut out = BTreeSet::new();
        let rows: BTreeSet<u32> = self.cells.keys().map(|&(r, _)| r).collect();
        for r in rows {
            let (&(_, c), &ghost) = self
                .cells
                .range((r, 0)..=(r, u32::MAX))
                .next_back()
                .expect("row is nonempty");
            if ghost {
                continue;
            }
            let Some(target) = self.kkohnert_target(r, c) else {
                continue;
            };
            let mut moved = self.clone();
            moved.cells.remove(&(r, c));
            moved.cells.insert((target, c), false);
            let mut with_ghost = moved.clone();
            with_ghost.cells.insert((r, c), true);
            out.insert(moved);
            out.insert(with_ghost);
        }
        out
    }

    fn kkohnert_target(&self, r: u32, c: u32) -> Option<u32> {
        for s in (1..r).rev() {
            match self.get((s, c)) {
                None => return Some(s),
                Some(true) => return None,
                Some(false) => {}
            }
        }
        None
    }

    fn check_movable(&self, r: u32, c: u32) -> Result<()> {
        match self.get((r, c)) {
            None => Err(Error::MissingCell(r, c)),
            Some(true) => Err(Error::GhostCell(r, c)),
            Some(false) => Ok(()),
        }
    }

    fn highest_empty(&self, c: u32) -> u32 {
        (1..)
            .find(|&s| self.get((s, c)).is_none())
            .expect("finitely many cells")
    }

    /// Move the plain cell `(r, c)` to the highest empty position of column
    /// `c`, if that position is above row `r`.
    pub fn up_move(&self, r: u32, c: u32) -> Result<Self> {
        self.check_movable(r, c)?;
        let target = self.highest_empty(c);
        let mut out = self.clone();
        if target < r {
            out.cells.remove(&(r, c));
            out.cells.insert((target, c), false);
        }
        Ok(out)
    }

    /// As [`up_move`](Self::up_move), then fill `(r, c)` and every empty
    /// position strictly between the target and row `r` with ghosts.
    pub fn up_ghost_move(&self, r: u32, c: u32) -> Result<Self> {
        self.check_movable(r, c)?;
        let target = self.highest_empty(c);
        let mut out = self.clone();
        if target < r {
            out.cells.insert((target, c), false);
            out.cells.insert((r, c), true);
            for s in target + 1..r {
                out.cells.entry((s, c)).or_insert(true);
            }
        }
        Ok(out)
    }

    pub fn render_ascii(&self) -> String {
        let d = self.underlying();
        let width = d.max_row().to_string().len();
        let mut out = String::new();
        for r in 1..=d.max_row() {
            let line: String = (1..=d.max_col())
                .map(|c| match self.get((r, c)) {
                    None => ' ',
                    Some(false) => '·',
                    Some(true) => 'X',
                })
                .collect();
            out.push_str(format!("{r:>width$} {line}").trim_end());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for GhostDiagram {
    /// Cells as `r,c;r,c` with ghosts suffixed by `X`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .cells()
            .map(|(r, c, g)| format!("{r},{c}{}", if g { "X" } else { "" }))
            .collect();
        f.write_str(&parts.join(";"))
    }
}

impl std::str::FromStr for GhostDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut triples = Vec::new();
        for t in s.split(';').map(str::trim).filter(|t| !t.is_empty()) {
            let (body, ghost) = match t.strip_suffix(['X', 'x']) {
                Some(b) => (b, true),
                None => (t, false),
            };
            let (r, c) = crate::diagrams::parse_cells(body)?
                .pop()
                .ok_or_else(|| Error::Parse(format!("invalid cell {t:?}")))?;
            triples.push((r, c, ghost));
        }
        Self::new(triples)
    }
}

/// Every ghost diagram reachable from `start` by K-Kohnert moves, including
/// `start` itself.
pub fn kkd_closure(start: &GhostDiagram) -> BTreeSet<GhostDiagram> {
    let mut seen: HashSet<GhostDiagram> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(d) = queue.pop_front() {
        for next in d.kkohnert_successors() {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen.into_iter().collect()
}

/// `KKD(alpha)`.
pub fn enumerate_kkd(alpha: &WeakComposition) -> BTreeSet<GhostDiagram> {
    kkd_closure(&GhostDiagram::from_diagram(&alpha.key_diagram()))
}

/// Sum of `x^wt b^ex` over the K-Kohnert closure of an arbitrary diagram.
pub fn kkohnert_poly_generic(d: &Diagram) -> Polynomial {
    let mut p = Polynomial::zero();
    for g in kkd_closure(&GhostDiagram::from_diagram(d)) {
        p.add_term(g.monomial(), BigInt::from(1));
    }
    p
}

/// The Lascoux polynomial as a sum over `KKD(alpha)`.
pub fn lascoux_via_kkd(alpha: &WeakComposition) -> Polynomial {
    kkohnert_poly_generic(&alpha.key_diagram())
}

/// A member of `KKD(alpha)` with the same cells as the snow diagram of
/// `D(alpha)`, built from `D(alpha)` by UP and UP^G moves.
///
/// Dark clouds `(r_i, c_i)` are processed by increasing column. For each,
/// the cells `(r_i, alpha_{r_i}), ..., (r_i, c_i + 1)` are lifted with UP in
/// that order, then `(r_i, c_i)` is lifted with UP^G.
pub fn witness_diagram(alpha: &WeakComposition) -> GhostDiagram {
    witness_steps(alpha)
        .pop()
        .expect("D(alpha) itself is the first step")
        .1
}

/// `D^0 = D(alpha)`, then `D^i` after the `i`-th dark cloud, each paired
/// with the column `c_i` of that cloud (`0` for `D^0`).
pub fn witness_steps(alpha: &WeakComposition) -> Vec<(u32, GhostDiagram)> {
    let mut g = GhostDiagram::from_diagram(&alpha.key_diagram());
    let mut steps = vec![(0, g.clone())];
    for (r, c) in alpha.dark().by_column() {
        for k in (c + 1..=alpha.get(r as usize)).rev() {
            g = g
                .up_move(r, k)
                .expect("cell of the row is present and plain");
        }
        g = g
            .up_ghost_move(r, c)
            .expect("dark cloud is present and plain");
        steps.push((c, g.clone()));
    }
    steps
}
