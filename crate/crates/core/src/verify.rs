//! Self-checks run by `fission verify`: published tables, closed forms,
//! figure counts, and the enumeration oracle against the formulas.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::counting::{closed_form_phi, table4_row, Counts};
use crate::enumerate::Enumerator;
use crate::error::{domain, Error, Result};
use crate::graph::{self, canonical_form};
use crate::tree::View;

/// `φ(k, n)` for `k = 0..=10`, `n = 1..=10`.
pub const PHI_REFERENCE: [[u64; 10]; 11] = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [0, 1, 2, 4, 6, 10, 14, 21, 29, 41],
    [0, 1, 3, 9, 20, 47, 96, 201, 394, 775],
    [0, 1, 4, 16, 48, 148, 407, 1121, 2933, 7612],
    [0, 1, 5, 25, 95, 365, 1271, 4383, 14479, 47198],
    [0, 1, 6, 36, 166, 766, 3237, 13466, 53933, 212645],
    [0, 1, 7, 49, 266, 1435, 7140, 34853, 164324, 761829],
    [0, 1, 8, 64, 400, 2472, 14162, 79430, 431242, 2301016],
    [0, 1, 9, 81, 573, 3993, 25893, 164157, 1009029, 6094011],
    [0, 1, 10, 100, 790, 6130, 44392, 314011, 2156113, 14544961],
];

/// `ψ(k, n)` for `k = 0..=10`, `n = 1..=10`.
pub const PSI_REFERENCE: [[u64; 10]; 11] = [
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [0, 1, 2, 4, 6, 10, 14, 21, 29, 41],
    [0, 1, 3, 9, 20, 47, 96, 201, 394, 775],
    [0, 1, 4, 16, 48, 148, 407, 1121, 2933, 7612],
    [0, 1, 5, 25, 95, 365, 1271, 4383, 14479, 47198],
    [0, 1, 6, 36, 166, 766, 3237, 13466, 53933, 212645],
    [0, 1, 7, 49, 266, 1435, 7140, 34853, 164324, 761829],
    [0, 1, 8, 64, 400, 2472, 14162, 79430, 431242, 2301016],
    [0, 1, 9, 81, 573, 3993, 25893, 164157, 1009029, 6094011],
    [0, 1, 10, 100, 790, 6130, 44392, 314011, 2156113, 14544961],
    [0, 1, 11, 121, 1056, 9031, 72248, 564201, 4280870, 31910879],
];

/// `σ(k, n)` for `k = 1..=3`, `n = 1..=10`.
pub const SIGMA_REFERENCE: [[u64; 10]; 3] = [
    [0, 1, 2, 6, 14, 36, 78, 172, 350, 709],
    [0, 1, 4, 16, 48, 148, 407, 1121, 2933, 7612],
    [0, 1, 5, 25, 95, 365, 1271, 4383, 14479, 47198],
];

/// Simply-laced supernova graphs by node count `n = 2..=10`:
/// `(n, star-shaped, other, total, non-Dynkin)`.
pub const SIMPLY_LACED_REFERENCE: [[u64; 5]; 9] = [
    [2, 1, 0, 1, 0],
    [3, 1, 1, 2, 1],
    [4, 2, 4, 6, 4],
    [5, 3, 11, 14, 12],
    [6, 5, 31, 36, 33],
    [7, 8, 70, 78, 75],
    [8, 12, 160, 172, 169],
    [9, 18, 332, 350, 348],
    [10, 26, 683, 709, 707],
];

/// The proper double partitions of 4, as printed.
pub const DOUBLE_PARTITIONS_OF_FOUR: [&str; 9] = [
    "[[1][1][1][1]]",
    "[[111][1]]",
    "[[3][1]]",
    "[[11][11]]",
    "[[11][1][1]]",
    "[[2][2]]",
    "[[2][11]]",
    "[[21][1]]",
    "[[2][1][1]]",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Oracle,
    Tables,
    ClosedForm,
    Figures,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Oracle => "oracle",
            Suite::Tables => "tables",
            Suite::ClosedForm => "closed-form",
            Suite::Figures => "figures",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [Suite::Oracle, Suite::Tables, Suite::ClosedForm, Suite::Figures, Suite::All]
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| domain(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    fn new(suite: Suite) -> Self {
        VerifyReport { suite, checks: Vec::new() }
    }

    fn check(&mut self, name: impl Into<String>, expected: impl ToString, actual: impl ToString) {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let pass = expected == actual;
        self.checks.push(Check { name: name.into(), expected, actual, pass });
    }

    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.pass).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            if c.pass {
                writeln!(f, "PASS {}: {}", c.name, c.actual)?;
            } else {
                writeln!(f, "FAIL {}: expected {}, got {}", c.name, c.expected, c.actual)?;
            }
        }
        writeln!(f, "suite {}: {} passed, {} failed", self.suite.name(), self.passed(), self.failed())
    }
}

/// Bounds for the oracle suite.
#[derive(Clone, Copy, Debug)]
pub struct OracleBounds {
    pub k_max: usize,
    pub n_max: usize,
}

impl Default for OracleBounds {
    fn default() -> Self {
        OracleBounds { k_max: 5, n_max: 8 }
    }
}

pub fn run(suite: Suite, bounds: OracleBounds) -> Result<VerifyReport> {
    let mut report = VerifyReport::new(suite);
    let parts: &[Suite] = match suite {
        Suite::All => &[Suite::Tables, Suite::ClosedForm, Suite::Figures, Suite::Oracle],
        _ => std::slice::from_ref(&suite),
    };
    for part in parts {
        match part {
            Suite::Tables => tables(&mut report)?,
            Suite::ClosedForm => closed_forms(&mut report)?,
            Suite::Figures => figures(&mut report)?,
            Suite::Oracle => oracle(&mut report, bounds)?,
            Suite::All => unreachable!("expanded above"),
        }
    }
    Ok(report)
}

/// Number of cells that differ, and the first one as `(k, n, expected, actual)`.
fn compare_grid<const N: usize>(
    reference: &[[u64; N]],
    k_min: usize,
    value: impl Fn(usize, usize) -> BigInt,
) -> (usize, Option<(usize, usize, u64, BigInt)>) {
    let mut bad = 0;
    let mut first = None;
    for (i, row) in reference.iter().enumerate() {
        for (j, &want) in row.iter().enumerate() {
            let got = value(k_min + i, j + 1);
            if got != BigInt::from(want) {
                bad += 1;
                first.get_or_insert((k_min + i, j + 1, want, got));
            }
        }
    }
    (bad, first)
}

fn grid_check<const N: usize>(
    report: &mut VerifyReport,
    name: &str,
    reference: &[[u64; N]],
    k_min: usize,
    value: impl Fn(usize, usize) -> BigInt,
) {
    let cells = reference.len() * N;
    let (bad, first) = compare_grid(reference, k_min, value);
    let actual = match first {
        None => format!("{cells} cells match"),
        Some((k, n, want, got)) => format!("{bad} cells differ, first at k={k} n={n}: {got} (want {want})"),
    };
    report.check(name, format!("{cells} cells match"), actual);
}

fn join(v: impl IntoIterator<Item = impl ToString>) -> String {
    v.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn tables(report: &mut VerifyReport) -> Result<()> {
    let c = Counts::new(10, 10)?;
    grid_check(report, "phi(k,n) k=0..10 n=1..10", &PHI_REFERENCE, 0, |k, n| c.phi(k, n));
    grid_check(report, "psi(k,n) k=0..10 n=1..10", &PSI_REFERENCE, 0, |k, n| c.psi(k, n));
    grid_check(report, "sigma(k,n) k=1..3 n=1..10", &SIGMA_REFERENCE, 1, |k, n| c.sigma(k, n));
    let mut bad = Vec::new();
    for row in SIMPLY_LACED_REFERENCE {
        let r = table4_row(row[0] as usize)?;
        let got = [BigInt::from(r.nodes), r.starshaped, r.other, r.total, r.non_dynkin];
        if got != row.map(BigInt::from) {
            bad.push(row[0]);
        }
    }
    report.check(
        "simply-laced supernova rows n=2..10",
        "9 rows match",
        if bad.is_empty() { "9 rows match".to_string() } else { format!("rows differ for n in {bad:?}") },
    );
    report.check("Phi(3,n) n=1..10", "1,3,6,14,27,58,111,223,424,817", join((1..=10).map(|n| c.cumulative_phi(3, n))));
    report.check("p(n) n=1..10", "1,2,3,5,7,11,15,22,30,42", join((1..=10).map(|n| c.partition(n))));
    Ok(())
}

fn closed_forms(report: &mut VerifyReport) -> Result<()> {
    let c = Counts::new(50, 6)?;
    for column in 3..=6 {
        let mut bad = Vec::new();
        for k in 1..=10u64 {
            if closed_form_phi(column, k)? != c.phi(k as usize, column) {
                bad.push(k);
            }
        }
        report.check(
            format!("phi(k,{column}) closed form k=1..10"),
            "agrees",
            if bad.is_empty() { "agrees".to_string() } else { format!("differs at k in {bad:?}") },
        );
    }
    let bad: Vec<u64> = (1..=50u64).filter(|&k| c.phi(k as usize, 4) != BigInt::from(k * k)).collect();
    report.check(
        "phi(k,4) = k^2 k=1..50",
        "agrees",
        if bad.is_empty() { "agrees".to_string() } else { format!("differs at k in {bad:?}") },
    );
    Ok(())
}

fn figures(report: &mut VerifyReport) -> Result<()> {
    let e = Enumerator::default();
    let slope3: Vec<usize> = (2..=4).map(|n| e.exact(3, n, View::LeafCount).map(|v| v.len())).collect::<Result<_>>()?;
    report.check("slope-3 trees with 2,3,4 leaves", "1,3,9", join(slope3));

    let nine = e.exact(3, 4, View::LeafCount)?;
    let mut compact: Vec<String> = nine.iter().filter_map(|t| t.shape().to_compact_string()).collect();
    let mut printed: Vec<String> = DOUBLE_PARTITIONS_OF_FOUR.iter().map(|s| s.to_string()).collect();
    compact.sort();
    printed.sort();
    report.check("proper double partitions of 4", join(&printed), join(&compact));

    let graphs = nine.iter().map(graph::fission_graph).collect::<Result<Vec<_>>>()?;
    let mut forms = graphs.iter().map(canonical_form).collect::<Result<Vec<_>>>()?;
    let max_mult = graphs.iter().map(|g| g.max_multiplicity()).max().unwrap_or(0);
    forms.sort();
    forms.dedup();
    report.check(
        "fission graphs of slope-3 trees with 4 leaves: distinct / max multiplicity",
        "9/2",
        format!("{}/{max_mult}", forms.len()),
    );

    let mut non_star = 0;
    for n in 2..=6 {
        for t in e.exact(2, n, View::LeafCount)? {
            if !graph::is_star_shaped(&graph::fission_graph(&t)?) {
                non_star += 1;
            }
        }
    }
    report.check("non-star-shaped simply-laced fission graphs with <= 6 nodes", 18, non_star);

    let s = e.supernova(1, 4)?;
    report.check(
        "rank-4 equipped simple graphs -> supernova graphs",
        "9 -> 6",
        format!("{} -> {}", s.equipped, s.graphs.len()),
    );

    let non_dynkin = (3..=5)
        .map(|n| e.supernova(1, n).map(|s| s.graphs.iter().filter(|g| !graph::is_dynkin(g)).count()))
        .collect::<Result<Vec<_>>>()?;
    report.check("non-Dynkin simple supernova graphs with 3,4,5 nodes", "1,4,12", join(non_dynkin));
    Ok(())
}

fn oracle(report: &mut VerifyReport, b: OracleBounds) -> Result<()> {
    let e = Enumerator::default();
    let c = Counts::new(b.k_max.max(1), b.n_max.max(1))?;
    let mut bad = Vec::new();
    let mut cells = 0;
    for k in 0..=b.k_max {
        for n in 1..=b.n_max {
            cells += 1;
            let got = e.exact(k, n as u64, View::LeafCount)?.len();
            if BigInt::from(got) != c.phi(k, n) {
                bad.push((k, n));
            }
        }
    }
    report.check(
        format!("enumerated leaf-count trees = phi(k,n), k<={} n<={}", b.k_max, b.n_max),
        format!("{cells} cells agree"),
        if bad.is_empty() { format!("{cells} cells agree") } else { format!("differs at {bad:?}") },
    );

    let mut bad = Vec::new();
    let mut cells = 0;
    for k in 0..b.k_max {
        for n in 1..=b.n_max {
            cells += 1;
            let got = e.exact(k, n as u64, View::Multiplicity)?.len();
            if BigInt::from(got) != c.psi(k, n) {
                bad.push((k, n));
            }
        }
    }
    report.check(
        format!("enumerated multiplicity trees = psi(k,n), k<{} n<={}", b.k_max, b.n_max),
        format!("{cells} cells agree"),
        if bad.is_empty() { format!("{cells} cells agree") } else { format!("differs at {bad:?}") },
    );

    let ext_n = b.n_max.min(6);
    let mut bad = Vec::new();
    for k in 0..=2 {
        for n in 1..=ext_n {
            let all = e.extended(k, n as u64)?;
            let ss = all.iter().filter(|x| x.is_semisimple()).count();
            if BigInt::from(all.len()) != c.ext(k, n) || BigInt::from(ss) != c.ext_semisimple(k, n) {
                bad.push((k, n));
            }
        }
    }
    report.check(
        format!("enumerated extended trees = ext / ext-ss, k<=2 n<={ext_n}"),
        "agree",
        if bad.is_empty() { "agree".to_string() } else { format!("differs at {bad:?}") },
    );

    let sn_n = b.n_max.min(7);
    let mut bad = Vec::new();
    for k in 1..=3.min(b.k_max.max(1)) {
        for n in 2..=sn_n {
            if BigInt::from(e.supernova(k, n as u64)?.graphs.len()) != c.sigma(k, n) {
                bad.push((k, n));
            }
        }
    }
    report.check(
        format!("enumerated supernova graphs = sigma(k,n), n<={sn_n}"),
        "agree",
        if bad.is_empty() { "agree".to_string() } else { format!("differs at {bad:?}") },
    );
    Ok(())
}
