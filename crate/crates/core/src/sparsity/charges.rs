//! Exact re-check of the discharging argument for
//! `Mad(G) < 𝔠 = 2k - 2k²/(t+1)  =>  (k, t)-choosable`.
//!
//! Every vertex starts with charge `d(v)`. A vertex `u` with `d(u) < 𝔠` pulls
//! `(𝔠 - d(u)) / d(u)` from each neighbor. The argument needs every final
//! charge to be at least `𝔠`. Degrees are integers, so the checks below are
//! evaluated at integer degrees, plus the exact root identity that pins the
//! real-valued sign pattern of the mid-range quadratic.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargeCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargeReport {
    pub k: usize,
    pub t: usize,
    pub c_threshold: Rational,
    pub checks: Vec<ChargeCheck>,
}

impl ChargeReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for ChargeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "(k,t) = ({},{}), c = {}", self.k, self.t, self.c_threshold)?;
        for c in &self.checks {
            let verdict = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "  {verdict} {}: {}", c.name, c.detail)?;
        }
        write!(f, "overall: {}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

fn r(x: i64) -> Rational {
    Rational::from(x)
}

fn ceil(x: Rational) -> i64 {
    x.ceil().to_integer()
}

/// Exact integer square root, if `x` is a perfect square.
fn exact_sqrt(x: Rational) -> Option<Rational> {
    if x < Rational::zero() || !x.is_integer() {
        return None;
    }
    let v = x.to_integer();
    let mut s = (v as f64).sqrt() as i64;
    while s * s > v {
        s -= 1;
    }
    while (s + 1) * (s + 1) <= v {
        s += 1;
    }
    (s * s == v).then(|| r(s))
}

/// Runs the six exact checks for `k >= 2`, `t >= 2k - 1`.
pub fn verify_mad_charges(k: usize, t: usize) -> Result<ChargeReport> {
    if k < 2 || t + 1 < 2 * k {
        return Err(Error::InvalidParams(format!(
            "charge bound needs k >= 2 and t >= 2k - 1, got ({k},{t})"
        )));
    }
    let (ki, ti) = (k as i64, t as i64);
    let t1 = r(ti + 1);
    let c = r(2 * ki) - r(2 * ki * ki) / t1;
    let pull = |d: i64| (c - r(d)) / r(d);
    // receivers: integer degrees k <= d < c
    let receivers: Vec<i64> = (ki..ceil(c)).filter(|&d| r(d) < c).collect();
    let mut checks = Vec::with_capacity(6);

    checks.push(ChargeCheck {
        name: "threshold-vs-k",
        passed: c >= r(ki),
        detail: format!("c = {c} >= k = {k}"),
    });

    let bad_receivers: Vec<i64> = receivers
        .iter()
        .copied()
        .filter(|&d| r(d) + r(d) * pull(d) != c)
        .collect();
    checks.push(ChargeCheck {
        name: "receiver-final-charge",
        passed: bad_receivers.is_empty(),
        detail: format!(
            "receiver degrees {receivers:?} end at exactly c; failures {bad_receivers:?}"
        ),
    });

    let gap_ok = t1 - c >= c;
    let bad_senders: Vec<i64> = receivers
        .iter()
        .copied()
        .filter(|&du| r(ti + 1 - du) <= c)
        .collect();
    checks.push(ChargeCheck {
        name: "sender-separation",
        passed: gap_ok && bad_senders.is_empty(),
        detail: format!(
            "t+1-c = {} >= c; senders next to receivers have degree > c; failures {bad_senders:?}",
            t1 - c
        ),
    });

    // d >= t+1-k: neighbors pull at most (c-k)/k each
    let max_pull = pull(ki);
    let pulls_monotone = receivers.iter().all(|&d| pull(d) <= max_pull);
    let start = ti + 1 - ki;
    let high: Vec<i64> = (start..=start + 2 * (ti + 1)).collect();
    let bad_high: Vec<i64> = high
        .iter()
        .copied()
        .filter(|&d| {
            let fin = r(d) - r(d) * max_pull;
            fin != r(d) * r(2 * ki) / t1 || fin < c
        })
        .collect();
    let tight = r(start) * r(2 * ki) / t1 == c;
    checks.push(ChargeCheck {
        name: "high-degree-sender",
        passed: pulls_monotone && bad_high.is_empty() && tight,
        detail: format!(
            "d in [{start}, {}]: final d*2k/(t+1) >= c, equal at d = {start}; failures {bad_high:?}",
            start + 2 * (ti + 1)
        ),
    });

    // ceil(c) <= d < t+1-k: pullers have degree >= d' = t+1-d
    let mid: Vec<i64> = (ceil(c)..start).collect();
    let bad_mid: Vec<i64> = mid
        .iter()
        .copied()
        .filter(|&d| {
            let dp = r(ti + 1 - d);
            let fin = r(d) * (r(2) * dp - c) / dp;
            let quad = r(2 * (ti + 1 - d) * d) - t1 * c;
            let pullers_bounded = receivers
                .iter()
                .filter(|&&du| r(du) >= dp)
                .all(|&du| pull(du) <= (c - dp) / dp);
            fin < c || quad < Rational::zero() || !pullers_bounded
        })
        .collect();
    checks.push(ChargeCheck {
        name: "mid-degree-sender",
        passed: bad_mid.is_empty(),
        detail: format!(
            "d in {mid:?}: 2(t+1-d)d - (t+1)c >= 0; failures {bad_mid:?}"
        ),
    });

    // 2(t+1-d)d - (t+1)c = 0 has discriminant (t+1)(t+1-2c) (scaled)
    let disc = t1 * (t1 - r(2) * c);
    let square = r((ti + 1 - 2 * ki) * (ti + 1 - 2 * ki));
    let roots = exact_sqrt(disc).map(|s| {
        let half = Rational::one() / r(2);
        (half * (t1 - s), half * (t1 + s))
    });
    let quad = |d: i64| r(2 * (ti + 1 - d) * d) - t1 * c;
    let roots_ok = roots == Some((r(ki), r(ti + 1 - ki)));
    checks.push(ChargeCheck {
        name: "discriminant-identity",
        passed: disc == square && roots_ok && quad(ki).is_zero() && quad(ti + 1 - ki).is_zero(),
        detail: format!(
            "(t+1)(t+1-2c) = {disc} = (t+1-2k)^2 = {square}; roots {}",
            roots.map_or("irrational".to_string(), |(a, b)| format!("{{{a}, {b}}}"))
        ),
    });

    Ok(ChargeReport {
        k,
        t,
        c_threshold: c,
        checks,
    })
}
