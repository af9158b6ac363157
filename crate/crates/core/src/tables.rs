//! Reference values of every Grothendieck polynomial for `S_4` and every
//! Lascoux polynomial for `C_4`, with their top components and whether the
//! index is inverse fireworks (resp. snowy).

/// One reference row: index, full polynomial, top component, marker.
#[derive(Clone, Copy, Debug)]
pub struct TableRow {
    pub index: &'static str,
    pub full: &'static str,
    pub top: &'static str,
    pub marked: bool,
}

const fn row(index: &'static str, full: &'static str, top: &'static str, marked: bool) -> TableRow {
    TableRow {
        index,
        full,
        top,
        marked,
    }
}

pub const GROTHENDIECK_S4: [TableRow; 24] = [
    row("1234", "1", "1", true),
    row("2134", "x1", "x1", true),
    row("1324", "(x1+x2) + b*x1*x2", "x1*x2", true),
    row("2314", "x1*x2", "x1*x2", false),
    row("3124", "x1^2", "x1^2", true),
    row("3214", "x1^2*x2", "x1^2*x2", true),
    row(
        "1243",
        "(x1+x2+x3) + b*(x1*x2+x1*x3+x2*x3) + b^2*x1*x2*x3",
        "x1*x2*x3",
        true,
    ),
    row(
        "2143",
        "(x1*x2+x1*x3+x1^2) + b*(x1*x2*x3+x1^2*x2+x1^2*x3) + b^2*x1^2*x2*x3",
        "x1^2*x2*x3",
        true,
    ),
    row("1342", "(x1*x2+x1*x3+x2*x3) + b*2*x1*x2*x3", "2*x1*x2*x3", false),
    row(
        "1423",
        "(x1^2+x2^2+x1*x2) + b*(x1^2*x2+x1*x2^2)",
        "x1^2*x2+x1*x2^2",
        true,
    ),
    row("2341", "x1*x2*x3", "x1*x2*x3", false),
    row("2413", "(x1*x2^2+x1^2*x2) + b*x1^2*x2^2", "x1^2*x2^2", true),
    row("3142", "(x1^2*x2+x1^2*x3) + b*x1^2*x2*x3", "x1^2*x2*x3", false),
    row("4123", "x1^3", "x1^3", true),
    row(
        "1432",
        "(x1^2*x2+x1*x2^2+x1^2*x3+x1*x2*x3+x2^2*x3) + b*(x1^2*x2^2+2*x1^2*x2*x3+2*x1*x2^2*x3) + b^2*x1^2*x2^2*x3",
        "x1^2*x2^2*x3",
        true,
    ),
    row(
        "2431",
        "(x1^2*x2*x3+x1*x2^2*x3) + b*x1^2*x2^2*x3",
        "x1^2*x2^2*x3",
        false,
    ),
    row("3241", "x1^2*x2*x3", "x1^2*x2*x3", false),
    row("3412", "x1^2*x2^2", "x1^2*x2^2", false),
    row("4132", "(x1^3*x2+x1^3*x3) + b*x1^3*x2*x3", "x1^3*x2*x3", true),
    row("4213", "x1^3*x2", "x1^3*x2", true),
    row("3421", "x1^2*x2^2*x3", "x1^2*x2^2*x3", false),
    row("4231", "x1^3*x2*x3", "x1^3*x2*x3", false),
    row("4312", "x1^3*x2^2", "x1^3*x2^2", true),
    row("4321", "x1^3*x2^2*x3", "x1^3*x2^2*x3", true),
];

pub const LASCOUX_C4: [TableRow; 24] = [
    row("0,0,0", "1", "1", true),
    row("1,0,0", "x1", "x1", true),
    row("0,1,0", "(x1+x2) + b*x1*x2", "x1*x2", true),
    row("1,1,0", "x1*x2", "x1*x2", false),
    row("2,0,0", "x1^2", "x1^2", true),
    row("2,1,0", "x1^2*x2", "x1^2*x2", true),
    row(
        "0,0,1",
        "(x1+x2+x3) + b*(x1*x2+x1*x3+x2*x3) + b^2*x1*x2*x3",
        "x1*x2*x3",
        true,
    ),
    row("0,1,1", "(x1*x2+x1*x3+x2*x3) + b*2*x1*x2*x3", "2*x1*x2*x3", false),
    row(
        "0,2,0",
        "(x1^2+x1*x2+x2^2) + b*(x1^2*x2+x1*x2^2)",
        "x1^2*x2+x1*x2^2",
        true,
    ),
    row("1,0,1", "(x1*x2+x1*x3) + b*x1*x2*x3", "x1*x2*x3", false),
    row("3,0,0", "x1^3", "x1^3", true),
    row("2,0,1", "(x1^2*x2+x1^2*x3) + b*x1^2*x2*x3", "x1^2*x2*x3", true),
    row("1,2,0", "(x1*x2^2+x1^2*x2) + b*x1^2*x2^2", "x1^2*x2^2", true),
    row(
        "0,2,1",
        "(x1^2*x2+x1^2*x3+x1*x2^2+x1*x2*x3+x2^2*x3) + b*(x1^2*x2^2+2*x1^2*x2*x3+2*x1*x2^2*x3) + b^2*x1^2*x2^2*x3",
        "x1^2*x2^2*x3",
        true,
    ),
    row("1,1,1", "x1*x2*x3", "x1*x2*x3", false),
    row("3,1,0", "x1^3*x2", "x1^3*x2", true),
    row("3,0,1", "(x1^3*x2+x1^3*x3) + b*x1^3*x2*x3", "x1^3*x2*x3", true),
    row("2,2,0", "x1^2*x2^2", "x1^2*x2^2", false),
    // weakly decreasing, so the polynomial is the monomial x^(2,1,1)
    row("2,1,1", "x1^2*x2*x3", "x1^2*x2*x3", false),
    row("1,2,1", "(x1^2*x2*x3+x1*x2^2*x3) + b*x1^2*x2^2*x3", "x1^2*x2^2*x3", false),
    row("3,2,0", "x1^3*x2^2", "x1^3*x2^2", true),
    row("3,1,1", "x1^3*x2*x3", "x1^3*x2*x3", false),
    row("2,2,1", "x1^2*x2^2*x3", "x1^2*x2^2*x3", false),
    row("3,2,1", "x1^3*x2^2*x3", "x1^3*x2^2*x3", true),
];
