//! Instance files, suites over them, and their reports.

pub mod format;
pub mod oracle;
pub mod suites;

use std::fmt;

use serde::Serialize;

pub use format::{load_instance, load_instance_str, parse_instance_file, InstanceFile, InstanceSpec, LoadError};
pub use oracle::{oracle_balanced_tensor, OracleError};
pub use suites::{run_suite, Command, Options};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Row {
    pub family: String,
    pub params: String,
    pub verdict: Verdict,
    /// The failing diagram and its two sides, or why the row was skipped.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub command: String,
    pub instance: String,
    pub seed: u64,
    pub rows: Vec<Row>,
}

#[derive(Serialize)]
struct Summary<'a> {
    format_version: u32,
    command: &'a str,
    instance: &'a str,
    seed: u64,
    counts: Counts,
    failures: Vec<&'a Row>,
}

impl SuiteReport {
    pub fn new(command: &str, instance: String, seed: u64) -> Self {
        SuiteReport { command: command.into(), instance, seed, rows: Vec::new() }
    }

    pub fn push(&mut self, family: impl Into<String>, params: impl Into<String>, verdict: Verdict, witness: Option<String>) {
        self.rows.push(Row { family: family.into(), params: params.into(), verdict, witness });
    }

    pub fn pass(&mut self, family: impl Into<String>, params: impl Into<String>) {
        self.push(family, params, Verdict::Pass, None);
    }

    pub fn fail(&mut self, family: impl Into<String>, params: impl Into<String>, witness: impl Into<String>) {
        self.push(family, params, Verdict::Fail, Some(witness.into()));
    }

    pub fn skip(&mut self, family: impl Into<String>, params: impl Into<String>, why: impl Into<String>) {
        self.push(family, params, Verdict::Skip, Some(why.into()));
    }

    pub fn counts(&self) -> Counts {
        let mut c = Counts::default();
        for r in &self.rows {
            match r.verdict {
                Verdict::Pass => c.pass += 1,
                Verdict::Fail => c.fail += 1,
                Verdict::Skip => c.skip += 1,
            }
        }
        c
    }

    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.verdict != Verdict::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Row> {
        self.rows.iter().filter(|r| r.verdict == Verdict::Fail)
    }

    pub fn family(&self, name: &str) -> impl Iterator<Item = &Row> + '_ {
        let name = name.to_string();
        self.rows.iter().filter(move |r| r.family == name)
    }

    /// The machine-readable summary line.
    pub fn json(&self) -> String {
        let s = Summary {
            format_version: 1,
            command: &self.command,
            instance: &self.instance,
            seed: self.seed,
            counts: self.counts(),
            failures: self.failures().collect(),
        };
        serde_json::to_string(&s).expect("summary serializes")
    }
}

/// One line per family, failing rows listed beneath it, then the counts and
/// the JSON summary.
impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} on {} (seed {})", self.command, self.instance, self.seed)?;
        let mut families: Vec<&str> = Vec::new();
        for r in &self.rows {
            if !families.contains(&r.family.as_str()) {
                families.push(&r.family);
            }
        }
        for fam in families {
            let rows: Vec<&Row> = self.family(fam).collect();
            let failed: Vec<&&Row> = rows.iter().filter(|r| r.verdict == Verdict::Fail).collect();
            let skipped = rows.iter().filter(|r| r.verdict == Verdict::Skip).count();
            if !failed.is_empty() {
                writeln!(f, "FAIL {fam} ({} of {} rows failed)", failed.len(), rows.len())?;
                for r in failed {
                    writeln!(f, "  {}: {}", r.params, r.witness.as_deref().unwrap_or(""))?;
                }
            } else if skipped == rows.len() {
                writeln!(f, "skip {fam} ({skipped}): {}", rows[0].witness.as_deref().unwrap_or(""))?;
            } else if rows.len() == 1 {
                writeln!(f, "pass {fam} ({})", rows[0].params)?;
            } else {
                writeln!(f, "pass {fam} ({} checked)", rows.len() - skipped)?;
            }
        }
        let c = self.counts();
        writeln!(f, "{} passed, {} failed, {} skipped", c.pass, c.fail, c.skip)?;
        write!(f, "{}", self.json())
    }
}
