//! A registry of identity checks keyed by stable ids, and a runner that
//! evaluates a selection of them into a deterministic report.

mod checks;
mod report;
pub mod util;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Error;
use crate::qkernel::{frac, RatFunc, Rational, Var};

pub use report::{CheckResult, Report, Sampling, Status};
use util::{Failure, Outcome};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    PolyIdentity,
    SeriesIdentity,
    MomentEquality,
    Annihilation,
    Limit,
}

impl CheckKind {
    pub fn name(self) -> &'static str {
        match self {
            CheckKind::PolyIdentity => "poly-identity",
            CheckKind::SeriesIdentity => "series-identity",
            CheckKind::MomentEquality => "moment-equality",
            CheckKind::Annihilation => "annihilation",
            CheckKind::Limit => "limit",
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Section {
    S1,
    S2,
    S3,
    S4,
    S5,
    Final,
    Misc,
}

impl Section {
    pub const ALL: [Section; 7] =
        [Section::S1, Section::S2, Section::S3, Section::S4, Section::S5, Section::Final, Section::Misc];

    pub fn name(self) -> &'static str {
        match self {
            Section::S1 => "s1",
            Section::S2 => "s2",
            Section::S3 => "s3",
            Section::S4 => "s4",
            Section::S5 => "s5",
            Section::Final => "final",
            Section::Misc => "misc",
        }
    }
}

impl fmt::Display for Section {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Section {
    type Err = Error;
    fn from_str(s: &str) -> Result<Section, Error> {
        // The classical background lives in s1.
        if s == "classical" {
            return Ok(Section::S1);
        }
        Section::ALL
            .into_iter()
            .find(|sec| sec.name() == s)
            .ok_or_else(|| Error::UnknownSection(s.to_string()))
    }
}

/// What a check body sees: its bound and the value standing in for `z`.
pub struct Ctx {
    pub bound: usize,
    pub z: RatFunc,
}

/// One registered identity.
pub struct IdentityCheck {
    pub id: &'static str,
    pub section: Section,
    pub kind: CheckKind,
    pub about: &'static str,
    /// Max `n` or truncation order, from the requested order.
    pub bound: fn(usize) -> usize,
    /// Whether the identity involves `z`, and so can be sampled.
    pub uses_z: bool,
    pub(crate) run: fn(&Ctx) -> Outcome,
}

impl fmt::Debug for IdentityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityCheck").field("id", &self.id).field("section", &self.section).finish()
    }
}

/// Every registered check, in report order.
pub fn registry() -> &'static [IdentityCheck] {
    checks::REGISTRY
}

pub fn find_check(id: &str) -> Option<&'static IdentityCheck> {
    registry().iter().find(|c| c.id == id)
}

pub fn known_ids() -> String {
    registry().iter().map(|c| c.id).collect::<Vec<_>>().join(", ")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Selector {
    All,
    Ids(Vec<String>),
    Section(Section),
}

impl Selector {
    /// `all`, a section name, or a comma-separated id list.
    pub fn parse(s: &str) -> Result<Selector, Error> {
        if s == "all" {
            return Ok(Selector::All);
        }
        if let Ok(sec) = s.parse::<Section>() {
            return Ok(Selector::Section(sec));
        }
        Ok(Selector::Ids(s.split(',').map(|p| p.trim().to_string()).filter(|p| !p.is_empty()).collect()))
    }

    pub fn name(&self) -> String {
        match self {
            Selector::All => "all".into(),
            Selector::Ids(ids) => ids.join(","),
            Selector::Section(s) => s.name().into(),
        }
    }

    fn select(&self) -> Result<Vec<&'static IdentityCheck>, Error> {
        match self {
            Selector::All => Ok(registry().iter().collect()),
            Selector::Section(s) => Ok(registry().iter().filter(|c| c.section == *s).collect()),
            Selector::Ids(ids) => {
                let mut seen = BTreeSet::new();
                let mut out = Vec::new();
                for id in ids {
                    let c = find_check(id)
                        .ok_or_else(|| Error::UnknownCheck { id: id.clone(), known: known_ids() })?;
                    if seen.insert(c.id) {
                        out.push(c);
                    }
                }
                Ok(out)
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Symbolic,
    /// `z` is replaced by seeded random rationals, one more than the
    /// declared degree bound.
    Sampled { seed: u64 },
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Symbolic => "symbolic",
            Mode::Sampled { .. } => "sampled",
        }
    }
}

/// Declared bound on the `z`-degree of numerator and denominator of every
/// coefficient compared at truncation order `n`: each side is built from
/// at most `n` factors `(q^j z; q)_k` with `k <= n`, so a difference has
/// `z`-degree at most `2 n (n + 1)`.
pub fn z_degree_bound(n: usize) -> usize {
    2 * n * (n + 1)
}

/// `count` distinct rationals avoiding `0` and `1`, the only values of `z`
/// where a factor `1 - q^j z` can vanish.
pub fn sample_points(seed: u64, count: usize) -> Vec<Rational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let p: i64 = rng.gen_range(-60..=60);
        let d: i64 = rng.gen_range(1..=12);
        let r = frac(p, d);
        if r == frac(0, 1) || r == frac(1, 1) || !seen.insert(r.clone()) {
            continue;
        }
        out.push(r);
    }
    out
}

fn run_one(check: &IdentityCheck, order: usize, mode: Mode) -> CheckResult {
    let bound = (check.bound)(order);
    let symbolic = Ctx { bound, z: RatFunc::var(Var::Z) };
    let (outcome, sampling) = match mode {
        Mode::Sampled { seed } if check.uses_z => {
            let degree_bound = z_degree_bound(bound);
            let points = sample_points(seed, degree_bound + 1);
            let mut outcome: Outcome = Ok(None);
            for p in &points {
                let ctx = Ctx { bound, z: RatFunc::constant(p.clone()) };
                outcome = (check.run)(&ctx).map_err(|f| match f {
                    Failure::Mismatch { at, left, right } => {
                        Failure::Mismatch { at: format!("z={p}, {at}"), left, right }
                    }
                    e => e,
                });
                if outcome.is_err() {
                    break;
                }
            }
            let sampling = Sampling { degree_bound, points: points.iter().map(|p| p.to_string()).collect() };
            (outcome, Some(sampling))
        }
        _ => ((check.run)(&symbolic), None),
    };
    CheckResult::new(check, bound, outcome, sampling)
}

/// Runs the selected checks; the report keeps registry order whatever the
/// completion order.
pub fn run_suite(selector: &Selector, order: usize, mode: Mode) -> Result<Report, Error> {
    let selected = selector.select()?;
    let start = Instant::now();
    let checks: Vec<CheckResult> = selected.par_iter().map(|c| run_one(c, order, mode)).collect();
    let elapsed_ms = start.elapsed().as_millis();
    Ok(Report::new(selector.name(), order, mode, checks, elapsed_ms))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let mut seen = BTreeSet::new();
        for c in registry() {
            assert!(seen.insert(c.id), "duplicate id {}", c.id);
        }
    }

    #[test]
    fn selectors() {
        assert_eq!(Selector::parse("all").unwrap(), Selector::All);
        assert_eq!(Selector::parse("classical").unwrap(), Selector::Section(Section::S1));
        assert_eq!(
            Selector::parse("eq-4.21, eq-1.4").unwrap(),
            Selector::Ids(vec!["eq-4.21".into(), "eq-1.4".into()])
        );
        let err = run_suite(&Selector::parse("eq-9.99").unwrap(), 4, Mode::Symbolic).unwrap_err();
        assert!(matches!(err, Error::UnknownCheck { .. }));
        assert!(err.to_string().contains("eq-4.21"));
    }

    #[test]
    fn sample_points_are_distinct_and_seeded() {
        let a = sample_points(7, 50);
        assert_eq!(a, sample_points(7, 50));
        assert_ne!(a, sample_points(8, 50));
        let set: BTreeSet<_> = a.iter().collect();
        assert_eq!(set.len(), 50);
        assert!(!a.contains(&frac(1, 1)) && !a.contains(&frac(0, 1)));
    }
}
