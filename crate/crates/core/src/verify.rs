//! Exhaustive verification suites over small symmetric groups and `C_n`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::One;

use crate::compositions::{enumerate_cn, enumerate_snowy_cn, WeakComposition};
use crate::diagrams::Diagram;
use crate::error::{Error, Result};
use crate::kkohnert::{enumerate_kkd, lascoux_via_kkd, witness_diagram, GhostDiagram};
use crate::permutations::{Permutation, RowOneEvent};
use crate::polyring::Polynomial;
use crate::qbell;
use crate::schubert::{
    expand_grothendieck_into_lascoux, expand_top_into_snowy_basis, grothendieck, is_nonnegative,
    lascoux, top_grothendieck, top_lascoux, top_lascoux_recursive,
};
use crate::tables::{TableRow, GROTHENDIECK_S4, LASCOUX_C4};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Tables,
    RajcodeEquiv,
    TopLas,
    Psw,
    Kkohnert,
    Shadow,
    Qbell,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Tables,
        Suite::RajcodeEquiv,
        Suite::TopLas,
        Suite::Psw,
        Suite::Kkohnert,
        Suite::Shadow,
        Suite::Qbell,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Tables => "tables",
            Suite::RajcodeEquiv => "rajcode-equiv",
            Suite::TopLas => "top-las",
            Suite::Psw => "psw",
            Suite::Kkohnert => "kkohnert",
            Suite::Shadow => "shadow",
            Suite::Qbell => "qbell",
        }
    }

    /// Scale used when none is given.
    pub fn default_scale(self) -> usize {
        match self {
            Suite::Tables | Suite::Kkohnert => 4,
            Suite::TopLas | Suite::Psw => 5,
            Suite::RajcodeEquiv | Suite::Shadow => 6,
            Suite::Qbell => 7,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub scale: usize,
    pub checks: Vec<Check>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} (n = {})", self.suite, self.scale)?;
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "  {status} {}: {}", c.name, c.detail)?;
        }
        write!(f, "  {:.3}s", self.elapsed.as_secs_f64())
    }
}

struct Checks(Vec<Check>);

impl Checks {
    fn add(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.0.push(Check {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        });
    }

    /// Records `failures` out of `total`, with `what` describing the items.
    fn tally(&mut self, name: &str, total: usize, failures: &[String], what: &str) {
        let detail = match failures.first() {
            None => format!("{total} {what} checked"),
            Some(first) => format!(
                "{} of {total} {what} failed, first: {first}",
                failures.len()
            ),
        };
        self.add(name, failures.is_empty(), detail);
    }
}

pub fn run_suite(suite: Suite, scale: Option<usize>) -> SuiteReport {
    let scale = scale.unwrap_or(suite.default_scale()).max(1);
    let start = Instant::now();
    let mut checks = Checks(Vec::new());
    match suite {
        Suite::Tables => tables(&mut checks),
        Suite::RajcodeEquiv => rajcode_equiv(&mut checks, scale),
        Suite::TopLas => top_las(&mut checks, scale),
        Suite::Psw => psw(&mut checks, scale),
        Suite::Kkohnert => kkohnert(&mut checks, scale),
        Suite::Shadow => shadow(&mut checks, scale),
        Suite::Qbell => qbell_suite(&mut checks, scale),
    }
    SuiteReport {
        suite,
        scale,
        checks: checks.0,
        elapsed: start.elapsed(),
    }
}

fn table_row_matches(row: &TableRow, full: &Polynomial, marked: bool) -> bool {
    let (Ok(expected_full), Ok(expected_top)) = (
        row.full.parse::<Polynomial>(),
        row.top.parse::<Polynomial>(),
    ) else {
        return false;
    };
    let top = full.top_component().map(|(_, t)| t);
    *full == expected_full && top.as_ref() == Ok(&expected_top) && marked == row.marked
}

/// Compares computed Grothendieck and Lascoux polynomials with the
/// reference tables, including top components and markers.
pub fn table_mismatches() -> Vec<String> {
    let mut bad = Vec::new();
    for row in &GROTHENDIECK_S4 {
        let w: Permutation = row.index.parse().expect("table index parses");
        if !table_row_matches(row, &grothendieck(&w), w.is_inverse_fireworks()) {
            bad.push(format!("G_{}", row.index));
        }
    }
    for row in &LASCOUX_C4 {
        let a: WeakComposition = row.index.parse().expect("table index parses");
        if !table_row_matches(row, &lascoux(&a), a.is_snowy()) {
            bad.push(format!("L_({})", row.index));
        }
    }
    bad
}

fn tables(checks: &mut Checks) {
    let bad = table_mismatches();
    let total = GROTHENDIECK_S4.len() + LASCOUX_C4.len();
    let mut detail = format!("{}/{total} table rows match", total - bad.len());
    if let Some(first) = bad.first() {
        detail.push_str(&format!(", first mismatch {first}"));
    }
    checks.add("tables", bad.is_empty(), detail);
}

fn rajcode_equiv(checks: &mut Checks, n: usize) {
    let perms = Permutation::all(n);
    let bad: Vec<String> = perms
        .iter()
        .filter(|w| w.rajcode(n).ok() != Some(Diagram::rothe(w).rajcode()))
        .map(ToString::to_string)
        .collect();
    checks.tally(
        "rajcode equals rajcode of Rothe diagram",
        perms.len(),
        &bad,
        "permutations",
    );
}

/// Checks the leading-term theorem for a family of top polynomials indexed by
/// `keys`: leading monomial `x^code`, proportional exactly when codes agree,
/// and the distinguished members have leading coefficient 1 with exactly one
/// per class.
fn leading_term_checks<K: Ord + Clone + fmt::Display>(
    checks: &mut Checks,
    items: &[(K, WeakComposition, Polynomial, bool)],
    what: &str,
    marker: &str,
) {
    let bad: Vec<String> = items
        .iter()
        .filter(|(_, code, top, _)| {
            top.leading_monomial_taillex().map(|(m, _)| m) != Ok(code.monomial())
        })
        .map(|(k, ..)| k.to_string())
        .collect();
    checks.tally("leading monomial is x^rajcode", items.len(), &bad, what);

    let mut bad = Vec::new();
    for (i, (k1, c1, t1, _)) in items.iter().enumerate() {
        for (k2, c2, t2, _) in &items[i + 1..] {
            if t1.is_scalar_multiple_of(t2) != (c1 == c2) {
                bad.push(format!("{k1} vs {k2}"));
            }
        }
    }
    let pairs = items.len() * items.len().saturating_sub(1) / 2;
    checks.tally("proportional iff equal rajcode", pairs, &bad, "pairs");

    let bad: Vec<String> = items
        .iter()
        .filter(|(_, _, top, marked)| {
            *marked
                && !top
                    .leading_monomial_taillex()
                    .is_ok_and(|(_, c)| c.is_one())
        })
        .map(|(k, ..)| k.to_string())
        .collect();
    let marked = items.iter().filter(|i| i.3).count();
    checks.tally(
        &format!("{marker} leading coefficient is 1"),
        marked,
        &bad,
        what,
    );

    let mut per_class: BTreeMap<&WeakComposition, usize> = BTreeMap::new();
    for (_, code, _, m) in items {
        *per_class.entry(code).or_default() += usize::from(*m);
    }
    let bad: Vec<String> = per_class
        .iter()
        .filter(|(_, &count)| count != 1)
        .map(|(code, count)| format!("class {code} has {count}"))
        .collect();
    checks.tally(
        &format!("one {marker} element per class"),
        per_class.len(),
        &bad,
        "classes",
    );
}

fn psw(checks: &mut Checks, n: usize) {
    let items: Vec<_> = Permutation::all(n)
        .into_iter()
        .map(|w| {
            let code = w.rajcode(n).expect("w lies in S_n");
            let top = top_grothendieck(&w);
            let marked = w.is_inverse_fireworks();
            (w, code, top, marked)
        })
        .collect();
    leading_term_checks(checks, &items, "permutations", "inverse fireworks");

    let bad: Vec<String> = items
        .iter()
        .filter(|(_, _, top, _)| {
            !expand_top_into_snowy_basis(top, n).is_ok_and(|e| is_nonnegative(&e))
        })
        .map(|(w, ..)| w.to_string())
        .collect();
    checks.tally(
        "top expands nonnegatively into snowy basis",
        items.len(),
        &bad,
        "permutations",
    );

    let m = n.min(4);
    let perms = Permutation::all(m);
    let bad: Vec<String> = perms
        .iter()
        .filter(|w| {
            !expand_grothendieck_into_lascoux(w, m)
                .is_ok_and(|e| e.values().all(Polynomial::is_positive))
        })
        .map(ToString::to_string)
        .collect();
    checks.tally(
        &format!("G_w expands positively into Lascoux (S_{m})"),
        perms.len(),
        &bad,
        "permutations",
    );

    let fireworks = items.iter().filter(|i| i.3).count();
    let bell = qbell::bell(n);
    checks.add(
        "inverse fireworks count is Bell",
        BigInt::from(fireworks) == BigInt::from(bell.clone()),
        format!("{fireworks} inverse fireworks, B_{n} = {bell}"),
    );
}

fn top_las(checks: &mut Checks, n: usize) {
    let items: Vec<_> = enumerate_cn(n)
        .into_iter()
        .map(|a| {
            let code = a.rajcode();
            let top = top_lascoux(&a);
            let snowy = a.is_snowy();
            (a, code, top, snowy)
        })
        .collect();
    leading_term_checks(checks, &items, "compositions", "snowy");

    let bad: Vec<String> = items
        .iter()
        .filter(|(a, _, top, snowy)| *snowy && top_lascoux_recursive(a).as_ref() != Ok(top))
        .map(|(a, ..)| a.to_string())
        .collect();
    let snowy = enumerate_snowy_cn(n);
    checks.tally(
        "recursive top Lascoux agrees",
        snowy.len(),
        &bad,
        "snowy compositions",
    );

    let bad: Vec<String> = snowy
        .iter()
        .filter(|a| lascoux(a).top_component().map(|(d, _)| d) != Ok(a.raj() - a.size()))
        .map(ToString::to_string)
        .collect();
    checks.tally(
        "b-degree is raj - |alpha|",
        snowy.len(),
        &bad,
        "snowy compositions",
    );

    let bell = qbell::bell(n);
    checks.add(
        "snowy count is Bell",
        BigInt::from(snowy.len()) == BigInt::from(bell.clone()),
        format!("{} snowy compositions, B_{n} = {bell}", snowy.len()),
    );
}

fn kkohnert(checks: &mut Checks, n: usize) {
    let comps = enumerate_cn(n);
    let bad: Vec<String> = comps
        .iter()
        .filter(|a| lascoux_via_kkd(a) != lascoux(a))
        .map(ToString::to_string)
        .collect();
    checks.tally("K-Kohnert formula", comps.len(), &bad, "compositions");

    let bad: Vec<String> = comps
        .iter()
        .filter(|a| !witness_is_valid(a, &enumerate_kkd(a)))
        .map(ToString::to_string)
        .collect();
    checks.tally("witness diagram", comps.len(), &bad, "compositions");
}

/// The witness lies in `kkd`, has the cells of the snow diagram, weight
/// `rajcode(alpha)` and excess `raj(alpha) - |alpha|`.
pub fn witness_is_valid(alpha: &WeakComposition, kkd: &BTreeSet<GhostDiagram>) -> bool {
    let w = witness_diagram(alpha);
    let snow = alpha.key_diagram().snow();
    kkd.contains(&w)
        && w.underlying() == snow.underlying()
        && w.weight() == alpha.rajcode()
        && w.excess() == alpha.raj() - alpha.size()
}

/// Row-one events of decreasing insertion against dark clouds of the Rothe
/// diagram, insertion columns against LIS, and turning points against dark
/// clouds. Returns a description of the first disagreement.
pub fn shadow_mismatch(w: &Permutation, n: usize) -> Option<String> {
    let dark = Diagram::rothe(w).dark();
    let lis = w.lis_by_position(n).ok()?;
    let ins = w.schensted(n).ok()?;
    for e in &ins.events {
        let r = e.position() as u32;
        if e.column() as u32 != lis[e.position() - 1] {
            return Some(format!("{w}: insertion column of w({r}) is not LIS"));
        }
        let ok = match *e {
            RowOneEvent::Append { .. } => dark.col_of_row(r).is_none(),
            RowOneEvent::Bump { bumped, .. } => dark.col_of_row(r) == Some(bumped),
        };
        if !ok {
            return Some(format!("{w}: event for w({r}) disagrees with dark clouds"));
        }
    }
    let turning = w.turning_points(n).ok()?;
    let dark_cells: BTreeSet<_> = dark.cells().collect();
    (turning != dark_cells).then(|| format!("{w}: turning points differ from dark clouds"))
}

fn shadow(checks: &mut Checks, n: usize) {
    let perms = Permutation::all(n);
    let bad: Vec<String> = perms.iter().filter_map(|w| shadow_mismatch(w, n)).collect();
    checks.tally(
        "insertion, LIS, turning points and dark clouds",
        perms.len(),
        &bad,
        "permutations",
    );
}

fn qbell_suite(checks: &mut Checks, n: usize) {
    for m in 1..=n {
        let rooks = qbell::enumerate_rook_n(m);
        let stair = (m * (m - 1) / 2) as u32;
        let mut gr_sum = qbell::QPolynomial::zero();
        let mut by_size: BTreeMap<usize, qbell::QPolynomial> = BTreeMap::new();
        let mut complementary = true;
        for r in &rooks {
            let gr = qbell::gr_stat(r, m).expect("rook lies in the staircase");
            gr_sum.add_term(gr as usize, 1);
            by_size
                .entry(m - r.len())
                .or_default()
                .add_term(gr as usize, 1);
            complementary &= gr + qbell::nw_stat(r) == stair;
        }
        let qb = qbell::q_bell(m);
        let stirling_ok =
            (0..=m).all(|k| by_size.remove(&k).unwrap_or_default() == qbell::q_stirling(m, k));
        checks.add(
            &format!("n = {m}: GR sums"),
            gr_sum == qb && stirling_ok,
            format!(
                "sum of q^GR over {} rooks equals B_{m}(q) and S_({m},k)(q)",
                rooks.len()
            ),
        );
        checks.add(
            &format!("n = {m}: GR + NW"),
            complementary,
            format!("GR + NW = {stair} for every rook"),
        );
        let snowy = qbell::hilb_vn_snowy(m);
        let agree = snowy == qbell::hilb_vn_rooks(m) && snowy == qbell::hilb_vn_qbell(m);
        checks.add(
            &format!("n = {m}: Hilbert series"),
            agree,
            format!("Hilb = {snowy}"),
        );
        checks.add(
            &format!("n = {m}: q-Bell degree"),
            qb.degree() == Some(m * (m - 1) / 2) && qb == qbell::q_bell_by_binomial_recurrence(m),
            format!("deg B_{m}(q) = {}", qb.degree().unwrap_or(0)),
        );
    }
    checks.add(
        "Hilb of V-hat_3",
        qbell::hilb_vn_snowy(3) == qbell::QPolynomial::new(vec![1, 1, 2, 1]),
        "1 + q + 2*q^2 + q^3",
    );
    let (ok, detail) = product_formula_check(8);
    checks.add("product formula up to q^8", ok, detail);
}

/// Compares the truncated product formula with the enumeration of snowy
/// compositions and with the stabilized Hilbert series of `V-hat_n`.
pub fn product_formula_check(limit: usize) -> (bool, String) {
    let product = qbell::hilb_v_truncated(limit);
    let enumerated = qbell::hilb_v_by_enumeration(limit);
    let stable = qbell::stabilized_hilb_vn(limit, limit + 2);
    let coeffs: Vec<String> = product.coeffs().iter().map(ToString::to_string).collect();
    match stable {
        Some((n, h)) => (
            product == enumerated && product == h,
            format!("coefficients {} stable from n = {n}", coeffs.join(" ")),
        ),
        None => (false, format!("no stabilization up to n = {}", limit + 2)),
    }
}
