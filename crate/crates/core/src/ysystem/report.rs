//! Verification reports.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dynkin::DynkinType;
use crate::seed::SeedJson;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SystemKind {
    Boxtimes,
    Square,
    Direct,
    Fold,
}

impl fmt::Display for SystemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SystemKind::Boxtimes => "boxtimes",
            SystemKind::Square => "square",
            SystemKind::Direct => "direct",
            SystemKind::Fold => "fold",
        })
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Verified,
    Counterexample,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub fn new(name: &str) -> Self {
        Check {
            name: name.to_string(),
            passed: true,
            detail: None,
        }
    }
}

/// Where and why a run failed, with the seed reached at that point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub round: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub step: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex: Option<usize>,
    pub reason: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<SeedJson>,
}

/// Lifted pair and orbit data of a folding run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftInfo {
    pub lifted: [DynkinType; 2],
    pub lifted_vertices: usize,
    pub group_order: usize,
    pub orbits: Vec<Vec<String>>,
    pub d: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodicityReport {
    pub version: String,
    pub pair: [DynkinType; 2],
    pub system: SystemKind,
    pub vertices: usize,
    /// `h + h'`.
    pub coxeter_sum: usize,
    /// `h + h'` for seed patterns, `2(h + h')` for the direct system.
    pub expected_period: usize,
    /// Rounds (or recurrence steps) executed.
    pub rounds: usize,
    pub minimal_period: Option<usize>,
    pub divides: bool,
    pub returned_at_expected: bool,
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lift: Option<LiftInfo>,
    /// Invocation flags, filled in by front ends.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub flags: BTreeMap<String, String>,
    pub verdict: Verdict,
}

impl PeriodicityReport {
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn new(
        left: DynkinType,
        right: DynkinType,
        system: SystemKind,
        vertices: usize,
        coxeter_sum: usize,
        rounds: usize,
        minimal_period: Option<usize>,
        divides: bool,
        returned_at_expected: bool,
        checks: Vec<Check>,
        counterexample: Option<Counterexample>,
    ) -> Self {
        let expected_period = match system {
            SystemKind::Direct => 2 * coxeter_sum,
            _ => coxeter_sum,
        };
        let mut r = PeriodicityReport {
            version: env!("CARGO_PKG_VERSION").to_string(),
            pair: [left, right],
            system,
            vertices,
            coxeter_sum,
            expected_period,
            rounds,
            minimal_period,
            divides,
            returned_at_expected,
            checks,
            counterexample,
            lift: None,
            flags: BTreeMap::new(),
            verdict: Verdict::Counterexample,
        };
        r.update_verdict();
        r
    }

    /// Verified iff every check passed, no counterexample was recorded and
    /// the return happened on schedule.
    pub(crate) fn update_verdict(&mut self) {
        let ok = self.counterexample.is_none()
            && self.checks.iter().all(|c| c.passed)
            && self.minimal_period.is_some()
            && self.divides
            && self.returned_at_expected;
        self.verdict = if ok {
            Verdict::Verified
        } else {
            Verdict::Counterexample
        };
    }

    pub fn is_verified(&self) -> bool {
        self.verdict == Verdict::Verified
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

impl fmt::Display for PeriodicityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "pair            {} x {}", self.pair[0], self.pair[1])?;
        writeln!(f, "system          {}", self.system)?;
        writeln!(f, "vertices        {}", self.vertices)?;
        if let Some(l) = &self.lift {
            writeln!(
                f,
                "lift            {} x {} ({} vertices, group of order {})",
                l.lifted[0], l.lifted[1], l.lifted_vertices, l.group_order
            )?;
            let orbits: Vec<String> = l
                .orbits
                .iter()
                .map(|o| format!("{{{}}}", o.join(",")))
                .collect();
            writeln!(f, "orbits          {}", orbits.join(" "))?;
            let d: Vec<String> = l.d.iter().map(u64::to_string).collect();
            writeln!(f, "d               ({})", d.join(","))?;
        }
        writeln!(f, "h + h'          {}", self.coxeter_sum)?;
        writeln!(f, "expected period {}", self.expected_period)?;
        writeln!(f, "rounds          {}", self.rounds)?;
        match self.minimal_period {
            Some(p) => writeln!(f, "minimal period  {p}")?,
            None => writeln!(f, "minimal period  none")?,
        }
        writeln!(f, "divides         {}", self.divides)?;
        for c in &self.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            match &c.detail {
                Some(d) => writeln!(f, "  [{mark}] {}: {d}", c.name)?,
                None => writeln!(f, "  [{mark}] {}", c.name)?,
            }
        }
        if let Some(c) = &self.counterexample {
            writeln!(f, "counterexample  round {}: {}", c.round, c.reason)?;
        }
        write!(
            f,
            "verdict         {}",
            match self.verdict {
                Verdict::Verified => "verified",
                Verdict::Counterexample => "counterexample",
            }
        )
    }
}

/// Accumulates named checks; the first failure becomes the counterexample.
#[derive(Default)]
pub(super) struct Ledger {
    pub(super) checks: Vec<Check>,
    pub(super) counterexample: Option<Counterexample>,
}

impl Ledger {
    pub(super) fn open(&mut self, name: &str) -> usize {
        self.checks.push(Check::new(name));
        self.checks.len() - 1
    }

    pub(super) fn fail(&mut self, check: usize, cx: Counterexample) {
        let c = &mut self.checks[check];
        if c.passed {
            c.passed = false;
            c.detail = Some(cx.reason.clone());
        }
        if self.counterexample.is_none() {
            self.counterexample = Some(cx);
        }
    }

    pub(super) fn failed(&self) -> bool {
        self.counterexample.is_some()
    }
}

pub(super) fn cx(
    round: usize,
    step: Option<usize>,
    vertex: Option<usize>,
    reason: String,
) -> Counterexample {
    Counterexample {
        round,
        step,
        vertex,
        reason,
        seed: None,
    }
}
