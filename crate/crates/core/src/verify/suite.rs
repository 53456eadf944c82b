use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{check_ideal, BoundReport, CheckOptions, Claim};
use crate::error::{Error, Result};
use crate::ideals::Ideal;
use crate::linkage::{splitmix64, LinkOptions};
use crate::polyring::{CoefficientField, Ring};

/// Environment variable capping the worker threads of a suite run.
pub const THREADS_ENV: &str = "LIAISON_THREADS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// (a) complete intersections.
    CompleteIntersection,
    /// (b) rational normal curves.
    RationalNormal,
    /// (c) products `l·H` in three variables.
    Exceptional,
    /// (d) cone over a smooth plane cubic.
    Cone,
    /// (e) Fermat type hypersurfaces.
    Hypersurface,
}

impl Family {
    pub const ALL: [Family; 5] =
        [Family::CompleteIntersection, Family::RationalNormal, Family::Exceptional, Family::Cone, Family::Hypersurface];

    pub fn letter(self) -> char {
        match self {
            Family::CompleteIntersection => 'a',
            Family::RationalNormal => 'b',
            Family::Exceptional => 'c',
            Family::Cone => 'd',
            Family::Hypersurface => 'e',
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::CompleteIntersection => "complete-intersection",
            Family::RationalNormal => "rational-normal",
            Family::Exceptional => "exceptional",
            Family::Cone => "cone",
            Family::Hypersurface => "hypersurface",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s) || s.len() == 1 && s.starts_with(f.letter()))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown family `{s}`")))
    }
}

/// A curated test ideal. Log canonicity is a label, never computed.
#[derive(Clone, Debug)]
pub struct SuiteEntry {
    pub name: &'static str,
    pub family: Family,
    pub variables: usize,
    pub generators: &'static str,
    pub provenance: &'static str,
}

impl SuiteEntry {
    pub fn ideal(&self, field: CoefficientField, gb_degree_cap: u32) -> Result<Ideal> {
        let ring = Ring::standard(field, self.variables);
        Ok(Ideal::parse(&ring, self.generators)?.with_gb_degree_cap(gb_degree_cap))
    }
}

macro_rules! entry {
    ($name:expr, $family:ident, $n:expr, $gens:expr, $note:expr) => {
        SuiteEntry { name: $name, family: Family::$family, variables: $n, generators: $gens, provenance: $note }
    };
}

/// The built-in allowlist, in a fixed order (entry seeds depend on it).
pub fn builtin_suite() -> Vec<SuiteEntry> {
    vec![
        entry!(
            "ci_2_2_p3",
            CompleteIntersection,
            4,
            "x0^2 + x1^2 + x2^2 + x3^2, x0^2 + 2*x1^2 + 3*x2^2 + 4*x3^2",
            "smooth elliptic quartic curve: diagonal pencil with distinct ratios"
        ),
        entry!(
            "ci_3_2_p3",
            CompleteIntersection,
            4,
            "x0^3 + 2*x1^3 + 3*x2^3 + 4*x3^3, x0^2 + x1^2 + x2^2 + x3^2",
            "smooth canonical genus 4 curve"
        ),
        entry!(
            "ci_3_3_p3",
            CompleteIntersection,
            4,
            "x0^3 + x1^3 + x2^3 + x3^3, x0^3 + 2*x1^3 + 3*x2^3 + 4*x3^3",
            "smooth curve: diagonal cubics with distinct ratios"
        ),
        entry!(
            "ci_2_2_p4",
            CompleteIntersection,
            5,
            "x0^2 + x1^2 + x2^2 + x3^2 + x4^2, x0^2 + 2*x1^2 + 3*x2^2 + 4*x3^2 + 5*x4^2",
            "smooth del Pezzo surface of degree 4"
        ),
        entry!(
            "ci_3_2_p4",
            CompleteIntersection,
            5,
            "x0^3 + x1^3 + x2^3 + x3^3 + x4^3, x0^2 + 2*x1^2 + 3*x2^2 + 4*x3^2 + 5*x4^2",
            "smooth K3 surface of degree 6"
        ),
        entry!(
            "ci_2_2_2_p4",
            CompleteIntersection,
            5,
            "x0^2 + x1^2 + x2^2 + x3^2 + x4^2, x0^2 + 2*x1^2 + 3*x2^2 + 4*x3^2 + 5*x4^2, \
             x0^2 + 4*x1^2 + 9*x2^2 + 16*x3^2 + 25*x4^2",
            "smooth canonical genus 5 curve: Vandermonde diagonal net"
        ),
        entry!(
            "twisted_cubic",
            RationalNormal,
            4,
            "x0*x2 - x1^2, x0*x3 - x1*x2, x1*x3 - x2^2",
            "smooth rational normal curve of degree 3"
        ),
        entry!(
            "rational_normal_quartic",
            RationalNormal,
            5,
            "x0*x2 - x1^2, x0*x3 - x1*x2, x0*x4 - x2^2, x1*x3 - x2^2, x1*x4 - x2*x3, x2*x4 - x3^2",
            "smooth rational normal curve of degree 4"
        ),
        entry!(
            "line_times_linear",
            Exceptional,
            3,
            "(x0 + x1 + x2)*x0, (x0 + x1 + x2)*x1, (x0 + x1 + x2)*x2",
            "l·m: a line with an embedded point at the vertex, d_1 = 2"
        ),
        entry!(
            "line_times_quadrics",
            Exceptional,
            3,
            "(x0 + x1 + x2)*x0^2, (x0 + x1 + x2)*x1^2, (x0 + x1 + x2)*x2^2",
            "l·H with H a complete intersection of three quadrics, d_1 = 3"
        ),
        entry!(
            "cone_plane_cubic",
            Cone,
            4,
            "x0^3 + x1^3 + x2^3",
            "cone over a smooth plane cubic: log canonical, not rational"
        ),
        entry!("plane_conic", Hypersurface, 3, "x0^2 + x1^2 + x2^2", "smooth conic"),
        entry!("plane_cubic", Hypersurface, 3, "x0^3 + x1^3 + x2^3", "smooth Fermat cubic curve"),
        entry!("quadric_p3", Hypersurface, 4, "x0^2 + x1^2 + x2^2 + x3^2", "smooth quadric surface"),
        entry!("fermat_cubic_p3", Hypersurface, 4, "x0^3 + x1^3 + x2^3 + x3^3", "smooth Fermat cubic surface"),
        entry!("fermat_quartic_p3", Hypersurface, 4, "x0^4 + x1^4 + x2^4 + x3^4", "smooth Fermat quartic surface"),
    ]
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteConfig {
    #[serde(with = "field_text")]
    pub field: CoefficientField,
    pub seed: u64,
    pub max_retries: u32,
    pub gb_degree_cap: u32,
    pub families: Vec<Family>,
    pub claims: Vec<Claim>,
    /// Links tried per entry by `LINKDEG`.
    pub link_seeds: usize,
    /// Worker threads; falls back to `LIAISON_THREADS`, then 1.
    pub threads: Option<usize>,
    pub output: Option<PathBuf>,
    pub timings: bool,
}

mod field_text {
    use crate::polyring::CoefficientField;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(f: &CoefficientField, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&f.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<CoefficientField, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(D::Error::custom)
    }
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            field: CoefficientField::Rational,
            seed: 0,
            max_retries: LinkOptions::default().max_retries,
            gb_degree_cap: 40,
            families: Family::ALL.to_vec(),
            claims: Claim::ALL.to_vec(),
            link_seeds: 5,
            threads: None,
            output: None,
            timings: false,
        }
    }
}

impl SuiteConfig {
    fn thread_count(&self) -> usize {
        self.threads
            .or_else(|| std::env::var(THREADS_ENV).ok().and_then(|v| v.parse().ok()))
            .unwrap_or(1)
            .max(1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteError {
    pub name: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteRun {
    pub field: String,
    pub seed: u64,
    pub reports: Vec<BoundReport>,
    pub errors: Vec<SuiteError>,
}

impl SuiteRun {
    pub fn violations(&self) -> usize {
        self.reports.iter().map(|r| r.violations()).sum()
    }

    /// Hard errors: whole entries that failed plus per-claim errors.
    pub fn error_count(&self) -> usize {
        self.errors.len() + self.reports.iter().map(|r| r.errors()).sum::<usize>()
    }

    pub fn is_clean(&self) -> bool {
        self.violations() == 0 && self.error_count() == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("suite run serializes")
    }
}

/// Runs `check_ideal` over the selected families. Entries run in parallel;
/// each gets a seed derived from the master seed and its index, and reports
/// are ordered by entry name.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteRun> {
    let entries: Vec<(usize, SuiteEntry)> =
        builtin_suite().into_iter().enumerate().filter(|(_, e)| config.families.contains(&e.family)).collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.thread_count())
        .build()
        .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    let link = LinkOptions { max_retries: config.max_retries, ..LinkOptions::default() };
    let mut outcomes: Vec<(String, Result<BoundReport>)> = pool.install(|| {
        entries
            .par_iter()
            .map(|(index, entry)| {
                let opts = CheckOptions {
                    seed: splitmix64(config.seed ^ *index as u64),
                    link_seeds: config.link_seeds,
                    link: link.clone(),
                    timings: config.timings,
                };
                let report = entry
                    .ideal(config.field, config.gb_degree_cap)
                    .and_then(|i| check_ideal(entry.name, &i, &config.claims, &opts));
                (entry.name.to_string(), report)
            })
            .collect()
    });
    outcomes.sort_by(|a, b| a.0.cmp(&b.0));
    let mut run = SuiteRun { field: config.field.to_string(), seed: config.seed, reports: Vec::new(), errors: Vec::new() };
    for (name, outcome) in outcomes {
        match outcome {
            Ok(r) => run.reports.push(r),
            Err(e) => run.errors.push(SuiteError { name, message: e.to_string() }),
        }
    }
    if let Some(path) = &config.output {
        std::fs::write(path, run.to_json()).map_err(|e| Error::Io(e.to_string()))?;
    }
    Ok(run)
}

/// One line per report plus a totals line.
pub fn summary(run: &SuiteRun) -> String {
    let mut out = String::new();
    for r in &run.reports {
        let checks: Vec<String> = r
            .checks
            .iter()
            .map(|c| format!("{}={}", c.claim, c.verdict))
            .collect();
        out.push_str(&format!(
            "{:<26} degrees={:?} codim={} dimX={} reg={} sigma={} {}\n",
            r.name,
            r.degrees,
            r.codim,
            r.dim_x,
            r.reg,
            r.sigma,
            checks.join(" ")
        ));
    }
    for e in &run.errors {
        out.push_str(&format!("{:<26} ERROR {}\n", e.name, e.message));
    }
    out.push_str(&format!(
        "{} ideals, {} violations, {} errors\n",
        run.reports.len() + run.errors.len(),
        run.violations(),
        run.error_count()
    ));
    out
}
