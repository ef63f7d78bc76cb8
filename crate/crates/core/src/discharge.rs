//! Exact audit of the degree-tuple case analysis for high-degree vertices in
//! the `(3, 11)` discharging argument.
//!
//! For a vertex `v` of degree `d >= 6` the tuple `(d3, d3*, d4, d5)` counts
//! its low-degree neighbors by kind. Negative final charge needs
//!
//! ```text
//! (1)  d3 + d3*/2 + d4/2 + d5/5  >  d - 6
//! (2)  2 d3 + 3 d3*/2 + 2 d4 + 2 d5  <=  d
//! (3)  d3 + d3* + 3 d4/2 + 9 d5/5  <  6        ((2) minus (1))
//! ```
//!
//! and the light-edge reduction forces `d >= 9` if `d5 > 0`, `d >= 10` if
//! `d3* + d4 > 0`, and `d >= 11` if `d3 > 0`. The audit shows every tuple
//! allowed by (3) fails (1) at its smallest admissible degree.

use std::fmt;

use crate::error::{Error, Result};
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tuple {
    pub d3: u32,
    pub d3_star: u32,
    pub d4: u32,
    pub d5: u32,
}

impl Tuple {
    pub const fn new(d3: u32, d3_star: u32, d4: u32, d5: u32) -> Self {
        Tuple { d3, d3_star, d4, d5 }
    }

    fn coords(self) -> [i64; 4] {
        [self.d3, self.d3_star, self.d4, self.d5].map(i64::from)
    }
}

impl fmt::Display for Tuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.d3, self.d3_star, self.d4, self.d5)
    }
}

/// Outcome of checking inequality (1) at a tuple's minimum degree. Named for
/// the direction the proof needs: the tuple must *fail* (1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ineq1Verdict {
    /// (1) is false at `min_degree`, so no admissible degree lets `v` go
    /// negative.
    FailsIneq1,
    /// (1) holds at `min_degree`: the case analysis would have a gap.
    Violates,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TupleRecord {
    pub tuple: Tuple,
    pub min_degree: u32,
    pub verdict: Ineq1Verdict,
}

/// Coefficients of inequality (1)'s left side, in tuple order. Exposed so the
/// auditor can be run against perturbed weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ineq1Weights(pub [Rational; 4]);

impl Default for Ineq1Weights {
    fn default() -> Self {
        Ineq1Weights([
            Rational::from(1),
            Rational::new(1, 2),
            Rational::new(1, 2),
            Rational::new(1, 5),
        ])
    }
}

const INEQ2: [(i64, i64); 4] = [(2, 1), (3, 2), (2, 1), (2, 1)];
const INEQ3: [(i64, i64); 4] = [(1, 1), (1, 1), (3, 2), (9, 5)];

fn weighted(weights: [Rational; 4], t: Tuple) -> Rational {
    weights
        .iter()
        .zip(t.coords())
        .map(|(&w, x)| w * Rational::from(x))
        .sum()
}

fn ratios(raw: [(i64, i64); 4]) -> [Rational; 4] {
    raw.map(|(n, d)| Rational::new(n, d))
}

/// Left side of (1) with the standard weights.
pub fn ineq1_lhs(t: Tuple) -> Rational {
    weighted(Ineq1Weights::default().0, t)
}

pub fn ineq2_lhs(t: Tuple) -> Rational {
    weighted(ratios(INEQ2), t)
}

pub fn ineq3_lhs(t: Tuple) -> Rational {
    weighted(ratios(INEQ3), t)
}

/// Inequality (3).
pub fn satisfies_ineq3(t: Tuple) -> bool {
    ineq3_lhs(t) < Rational::from(6)
}

/// (3) with every coefficient scaled by 10, in integers only.
pub fn satisfies_ineq3_scaled(t: Tuple) -> bool {
    10 * t.d3 + 10 * t.d3_star + 15 * t.d4 + 18 * t.d5 < 60
}

/// Smallest degree the light-edge implications allow for a vertex with this
/// tuple.
pub fn min_degree(t: Tuple) -> u32 {
    let mut d = 6;
    if t.d5 > 0 {
        d = d.max(9);
    }
    if t.d3_star + t.d4 > 0 {
        d = d.max(10);
    }
    if t.d3 > 0 {
        d = d.max(11);
    }
    d
}

/// All nonnegative tuples satisfying (3), lexicographically ordered, with
/// their minimum degree and inequality (1) verdict.
pub fn enumerate_tuples() -> Vec<TupleRecord> {
    enumerate_tuples_with(Ineq1Weights::default())
}

pub fn enumerate_tuples_with(weights: Ineq1Weights) -> Vec<TupleRecord> {
    // (3) bounds each coordinate: d3, d3* <= 5, d4 <= 3, d5 <= 3.
    let mut out = Vec::new();
    for d3 in 0..=5 {
        for d3_star in 0..=5 {
            for d4 in 0..=3 {
                for d5 in 0..=3 {
                    let tuple = Tuple::new(d3, d3_star, d4, d5);
                    if !satisfies_ineq3(tuple) {
                        continue;
                    }
                    let min_degree = min_degree(tuple);
                    let mut rec = TupleRecord {
                        tuple,
                        min_degree,
                        verdict: Ineq1Verdict::Violates,
                    };
                    rec.verdict = audit_with(&rec, weights).expect("tuple satisfies (3)");
                    out.push(rec);
                }
            }
        }
    }
    out
}

/// Checks (1) at `rec.min_degree`: `FailsIneq1` iff
/// `d3 + d3*/2 + d4/2 + d5/5 <= min_degree - 6`.
pub fn audit_inequality1(rec: &TupleRecord) -> Result<Ineq1Verdict> {
    audit_with(rec, Ineq1Weights::default())
}

pub fn audit_with(rec: &TupleRecord, weights: Ineq1Weights) -> Result<Ineq1Verdict> {
    if !satisfies_ineq3(rec.tuple) {
        return Err(Error::InvalidParams(format!(
            "tuple {} does not satisfy (3)",
            rec.tuple
        )));
    }
    let rhs = Rational::from(i64::from(rec.min_degree) - 6);
    Ok(if weighted(weights.0, rec.tuple) <= rhs {
        Ineq1Verdict::FailsIneq1
    } else {
        Ineq1Verdict::Violates
    })
}

/// The (1) verdict recomputed in integers (everything times 10).
pub fn audit_inequality1_scaled(rec: &TupleRecord) -> Ineq1Verdict {
    let t = rec.tuple;
    let lhs = 10 * i64::from(t.d3) + 5 * i64::from(t.d3_star) + 5 * i64::from(t.d4) + 2 * i64::from(t.d5);
    if lhs <= 10 * (i64::from(rec.min_degree) - 6) {
        Ineq1Verdict::FailsIneq1
    } else {
        Ineq1Verdict::Violates
    }
}

/// Whether (2) holds at degree `dv`, after confirming that (2) minus (1) is
/// (3) at this tuple: `LHS(2) - LHS(1) = LHS(3)` and `dv - (dv - 6) = 6`.
/// Returns false if either part fails.
pub fn audit_inequality2_consistency(rec: &TupleRecord, dv: u32) -> bool {
    let t = rec.tuple;
    let dv_r = Rational::from(i64::from(dv));
    let derivation = ineq2_lhs(t) - ineq1_lhs(t) == ineq3_lhs(t)
        && dv_r - (dv_r - Rational::from(6)) == Rational::from(6);
    derivation && ineq2_lhs(t) <= dv_r
}

/// Coefficient-level form of the same derivation: (2) minus (1) term by
/// term equals (3).
pub fn ineq3_is_difference() -> bool {
    let one = Ineq1Weights::default().0;
    let two = ratios(INEQ2);
    let three = ratios(INEQ3);
    (0..4).all(|i| two[i] - one[i] == three[i])
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    pub records: Vec<TupleRecord>,
}

impl AuditReport {
    pub fn failing_count(&self) -> usize {
        self.records
            .iter()
            .filter(|r| r.verdict == Ineq1Verdict::FailsIneq1)
            .count()
    }

    pub fn violations(&self) -> Vec<TupleRecord> {
        self.records
            .iter()
            .copied()
            .filter(|r| r.verdict == Ineq1Verdict::Violates)
            .collect()
    }

    pub fn passed(&self) -> bool {
        !self.records.is_empty() && self.failing_count() == self.records.len()
    }

    /// One line per tuple, e.g. `(0,0,0,3) fails (1) for d(v) ≥ 9.`
    pub fn table(&self) -> String {
        let mut s = String::new();
        for r in &self.records {
            s.push_str(&row_text(r));
            s.push('\n');
        }
        s
    }
}

pub fn row_text(r: &TupleRecord) -> String {
    match r.verdict {
        Ineq1Verdict::FailsIneq1 => format!("{} fails (1) for d(v) ≥ {}.", r.tuple, r.min_degree),
        Ineq1Verdict::Violates => format!("{} satisfies (1) at d(v) = {}.", r.tuple, r.min_degree),
    }
}

pub fn full_audit() -> AuditReport {
    AuditReport {
        records: enumerate_tuples(),
    }
}

/// A row of the reference table: tuple and the degree it is stated to fail at.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GoldenRow {
    pub tuple: Tuple,
    pub min_degree: u32,
}

/// Parses lines like `(0,0,0,3) fails (1) for d(v) ≥ 9.` (`>=` also
/// accepted). Blank lines and `#` comments are skipped; whitespace is
/// insignificant.
pub fn parse_golden(text: &str) -> Result<Vec<GoldenRow>> {
    let mut rows = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |reason: &str| Error::Parse {
            line: i + 1,
            reason: reason.to_string(),
        };
        let line = line.replace(">=", "≥");
        let (head, tail) = line
            .strip_prefix('(')
            .and_then(|l| l.split_once(')'))
            .ok_or_else(|| err("expected a parenthesized tuple"))?;
        let nums: Vec<u32> = head
            .split(',')
            .map(|x| x.parse::<u32>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| err("tuple entries must be nonnegative integers"))?;
        let [d3, d3_star, d4, d5] = nums[..] else {
            return Err(err("tuple must have four entries"));
        };
        let degree = tail
            .strip_prefix("fails(1)ford(v)≥")
            .ok_or_else(|| err("expected 'fails (1) for d(v) ≥ N'"))?
            .trim_end_matches('.');
        let min_degree = degree
            .parse()
            .map_err(|_| err("degree bound must be an integer"))?;
        rows.push(GoldenRow {
            tuple: Tuple::new(d3, d3_star, d4, d5),
            min_degree,
        });
    }
    Ok(rows)
}

/// The reference table shipped with the crate.
pub const REFERENCE_TABLE: &str = include_str!("../data/reference_table.txt");

/// Differences between the audit and a reference table, compared row by row
/// in order. Empty means identical.
pub fn golden_diff(report: &AuditReport, golden: &[GoldenRow]) -> Vec<String> {
    let mut diffs = Vec::new();
    let ours: Vec<GoldenRow> = report
        .records
        .iter()
        .map(|r| GoldenRow {
            tuple: r.tuple,
            min_degree: r.min_degree,
        })
        .collect();
    for (i, (a, b)) in ours.iter().zip(golden).enumerate() {
        if a != b {
            diffs.push(format!(
                "row {}: computed {} ≥ {}, reference {} ≥ {}",
                i + 1,
                a.tuple,
                a.min_degree,
                b.tuple,
                b.min_degree
            ));
        }
    }
    for a in ours.iter().skip(golden.len()) {
        diffs.push(format!("extra computed row {} ≥ {}", a.tuple, a.min_degree));
    }
    for b in golden.iter().skip(ours.len()) {
        diffs.push(format!("missing reference row {} ≥ {}", b.tuple, b.min_degree));
    }
    for r in report.violations() {
        diffs.push(format!("{} does not fail (1)", r.tuple));
    }
    diffs
}
