//! Regularity bounds for log canonical local complete intersections and a
//! harness that checks them against computed invariants.

mod suite;
#[cfg(test)]
mod tests;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideals::{HilbertSeries, Ideal};
use crate::linkage::{graded_generic_link, max_generator_degree, splitmix64, LinkOptions};
use crate::polyring::Polynomial;
use crate::resolution::{canonical_module, minimal_free_resolution, module_hilbert_series, module_regularity};

pub use suite::{builtin_suite, run_suite, summary, Family, SuiteConfig, SuiteEntry, SuiteError, SuiteRun, THREADS_ENV};

/// `Σ_{i≤r} (d_i − 1)` for degrees sorted descending.
pub fn sigma(degrees: &[u32], r: usize) -> Result<u32> {
    if r > degrees.len() {
        return Err(Error::InvalidArgument(format!("codimension {r} exceeds {} generators", degrees.len())));
    }
    Ok(degrees[..r].iter().map(|d| d - 1).sum())
}

fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

fn degree_sum(degrees: &[u32], r: usize) -> Result<i64> {
    if r > degrees.len() {
        return Err(Error::InvalidArgument(format!("codimension {r} exceeds {} generators", degrees.len())));
    }
    Ok(degrees[..r].iter().map(|&d| d as i64).sum())
}

fn niu_with_offset(dim_x: i64, degrees: &[u32], r: usize, offset: i64) -> Result<BigInt> {
    if dim_x < 1 {
        return Err(Error::InvalidArgument(format!("bound needs dim X ≥ 1, got {dim_x}")));
    }
    let s = degree_sum(degrees, r)?;
    Ok(factorial(dim_x as u64 + 2) / 2 * BigInt::from(s - r as i64 - offset))
}

/// `(dim X + 2)!/2 · (Σ_{i≤r} d_i − r)`.
pub fn niu_bound(dim_x: i64, degrees: &[u32], r: usize) -> Result<BigInt> {
    niu_with_offset(dim_x, degrees, r, 0)
}

/// `(dim X + 2)!/2 · (Σ_{i≤r} d_i − r − 1)`, for ideals that are not
/// complete intersections.
pub fn niu_sharp_bound(dim_x: i64, degrees: &[u32], r: usize) -> Result<BigInt> {
    niu_with_offset(dim_x, degrees, r, 1)
}

/// `Σ_{i≤r} d_i − r`.
pub fn bel_bound(degrees: &[u32], r: usize) -> Result<i64> {
    Ok(degree_sum(degrees, r)? - r as i64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Claim {
    /// Sharpened bound for non complete intersections.
    #[serde(rename = "NIU")]
    Niu,
    /// `reg R/I ≤ (dim X + 2)!/2 · (Σ d_i − r)`.
    #[serde(rename = "NIU11")]
    Niu11,
    /// `reg R/I_X ≤ Σ d_i − r` on the saturation.
    #[serde(rename = "BEL")]
    Bel,
    /// Minimal generators of a generic link live in degrees `≤ σ`.
    #[serde(rename = "LINKDEG")]
    LinkDeg,
    /// `reg ω = dim X + 1` for arithmetically Gorenstein inputs.
    #[serde(rename = "OMEGA")]
    Omega,
    /// `I = l·H` in three variables has `reg R/I = 3 d_1 − 5`.
    #[serde(rename = "EXC")]
    Exc,
}

impl Claim {
    pub const ALL: [Claim; 6] = [Claim::Niu, Claim::Niu11, Claim::Bel, Claim::LinkDeg, Claim::Omega, Claim::Exc];

    pub fn name(self) -> &'static str {
        match self {
            Claim::Niu => "NIU",
            Claim::Niu11 => "NIU11",
            Claim::Bel => "BEL",
            Claim::LinkDeg => "LINKDEG",
            Claim::Omega => "OMEGA",
            Claim::Exc => "EXC",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Claim::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown claim `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
    Error,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "FAIL",
            Verdict::Skipped => "skip",
            Verdict::Error => "ERROR",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub claim: Claim,
    pub verdict: Verdict,
    pub detail: String,
}

mod bigint_number {
    use num_bigint::BigInt;
    use serde::{de::Error as _, Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            None => s.serialize_none(),
            Some(b) => {
                let n: serde_json::Number = b.to_string().parse().map_err(serde::ser::Error::custom)?;
                n.serialize(s)
            }
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigInt>, D::Error> {
        let n: Option<serde_json::Number> = Option::deserialize(d)?;
        n.map(|n| n.to_string().parse::<BigInt>().map_err(D::Error::custom)).transpose()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub name: String,
    pub field: String,
    pub variables: usize,
    /// Minimal generator degrees, descending.
    pub degrees: Vec<u32>,
    pub t: usize,
    pub codim: usize,
    /// Projective dimension of `X = Proj R/I`; `−1` when empty.
    pub dim_x: i64,
    pub sigma: u32,
    pub reg: i64,
    pub reg_saturation: Option<i64>,
    pub complete_intersection: bool,
    pub gorenstein: bool,
    #[serde(with = "bigint_number")]
    pub niu_bound: Option<BigInt>,
    #[serde(with = "bigint_number")]
    pub niu_sharp_bound: Option<BigInt>,
    pub bel_bound: i64,
    pub exceptional_case: bool,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, u64>>,
}

impl BoundReport {
    pub fn violations(&self) -> usize {
        self.checks.iter().filter(|c| c.verdict == Verdict::Fail).count()
    }

    pub fn errors(&self) -> usize {
        self.checks.iter().filter(|c| c.verdict == Verdict::Error).count()
    }

    pub fn check(&self, claim: Claim) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.claim == claim)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Parses a report and rejects it unless the stored `σ` matches the
    /// degrees and codimension.
    pub fn from_json(text: &str) -> Result<Self> {
        let report: BoundReport = serde_json::from_str(text).map_err(|e| Error::InvalidArgument(e.to_string()))?;
        let expected = sigma(&report.degrees, report.codim)?;
        if expected != report.sigma {
            return Err(Error::InvalidArgument(format!("stored sigma {} differs from {expected}", report.sigma)));
        }
        Ok(report)
    }
}

#[derive(Clone, Debug)]
pub struct CheckOptions {
    pub seed: u64,
    /// Number of independent links tried by `LINKDEG`.
    pub link_seeds: usize,
    pub link: LinkOptions,
    pub timings: bool,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { seed: 0, link_seeds: 1, link: LinkOptions::default(), timings: false }
    }
}

/// The `I = l·H` shape with `l` linear and `H` a complete intersection of
/// three forms of degree `d_1 − 1` in three variables. Returns `H`.
fn exceptional_factor(i: &Ideal, gens: &[Polynomial], codim: usize) -> Result<Option<Ideal>> {
    let ring = i.ring();
    if ring.nvars() != 3 || codim != 1 || gens.len() != 3 {
        return Ok(None);
    }
    let d1 = gens[0].degree().unwrap_or(0);
    if gens.iter().any(|g| g.degree() != Some(d1)) || d1 < 2 {
        return Ok(None);
    }
    let sat = i.saturation(&Ideal::maximal(ring))?;
    let sat_gens = sat.minimal_generators()?;
    if sat_gens.len() != 1 || sat_gens[0].degree() != Some(1) {
        return Ok(None);
    }
    let l = &sat_gens[0];
    let Some(h): Option<Vec<Polynomial>> = gens.iter().map(|g| g.div_exact(l)).collect() else {
        return Ok(None);
    };
    let h = Ideal::new(ring, h);
    if h.is_unit()? || h.codimension()? != 3 {
        return Ok(None);
    }
    Ok(Some(h))
}

struct Timer {
    enabled: bool,
    map: BTreeMap<String, u64>,
}

impl Timer {
    fn run<T>(&mut self, key: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        if self.enabled {
            self.map.insert(key.to_string(), start.elapsed().as_millis() as u64);
        }
        out
    }
}

fn outcome(claim: Claim, r: Result<(bool, String)>) -> CheckResult {
    match r {
        Ok((true, detail)) => CheckResult { claim, verdict: Verdict::Pass, detail },
        Ok((false, detail)) => CheckResult { claim, verdict: Verdict::Fail, detail },
        Err(e) => CheckResult { claim, verdict: Verdict::Error, detail: e.to_string() },
    }
}

fn skipped(claim: Claim, reason: &str) -> CheckResult {
    CheckResult { claim, verdict: Verdict::Skipped, detail: reason.to_string() }
}

/// Computes the invariants of `R/I` and evaluates each requested claim.
/// A failing computation for one claim is recorded as an error verdict.
pub fn check_ideal(name: &str, i: &Ideal, claims: &[Claim], opts: &CheckOptions) -> Result<BoundReport> {
    i.ring().require_graded()?;
    i.require_homogeneous()?;
    if i.is_unit()? {
        return Err(Error::UnitIdeal);
    }
    let mut timer = Timer { enabled: opts.timings, map: BTreeMap::new() };
    let ring = i.ring();
    let gens = timer.run("generators", || i.minimal_generators())?;
    let base = Ideal::new(ring, gens.clone()).with_gb_degree_cap(i.gb_degree_cap());
    let degrees: Vec<u32> = gens.iter().filter_map(|g| g.degree()).collect();
    let t = degrees.len();
    let codim = base.codimension()?;
    let dim_x = base.krull_dimension()? as i64 - 1;
    let sig = sigma(&degrees, codim)?;
    let res = timer.run("resolution", || minimal_free_resolution(&base))?;
    let betti = res.betti_table();
    let reg = betti.regularity().unwrap_or(0);
    let complete_intersection = t == codim;
    let cohen_macaulay = res.length() == codim;
    let gorenstein = cohen_macaulay && betti.total(codim) == 1;
    let niu = (dim_x >= 1).then(|| niu_bound(dim_x, &degrees, codim)).transpose()?;
    let niu_sharp = (dim_x >= 1).then(|| niu_sharp_bound(dim_x, &degrees, codim)).transpose()?;
    let bel = bel_bound(&degrees, codim)?;
    let exc_h = if claims.contains(&Claim::Exc) || claims.contains(&Claim::Niu) {
        timer.run("exceptional", || exceptional_factor(&base, &gens, codim))?
    } else {
        None
    };
    let exceptional_case = exc_h.is_some();
    let mut reg_saturation = None;
    let mut checks = Vec::new();
    let mut sorted: Vec<Claim> = claims.to_vec();
    sorted.sort();
    sorted.dedup();
    for claim in sorted {
        let result = match claim {
            Claim::Niu => {
                if dim_x < 1 {
                    skipped(claim, &format!("dim X = {dim_x} < 1"))
                } else if complete_intersection {
                    skipped(claim, "complete intersection: sharpened bound does not apply")
                } else if exceptional_case {
                    skipped(claim, "exceptional l·H shape, see EXC")
                } else {
                    let b = niu_sharp.clone().expect("dim X ≥ 1");
                    CheckResult {
                        claim,
                        verdict: if BigInt::from(reg) <= b { Verdict::Pass } else { Verdict::Fail },
                        detail: format!("reg={reg} bound={b}"),
                    }
                }
            }
            Claim::Niu11 => match &niu {
                None => skipped(claim, &format!("dim X = {dim_x} < 1")),
                Some(b) => CheckResult {
                    claim,
                    verdict: if BigInt::from(reg) <= *b { Verdict::Pass } else { Verdict::Fail },
                    detail: format!("reg={reg} bound={b}"),
                },
            },
            Claim::Bel => outcome(
                claim,
                timer.run("BEL", || {
                    let sat = base.saturation(&Ideal::maximal(ring))?;
                    let reg_sat = if sat.is_unit()? {
                        0
                    } else {
                        minimal_free_resolution(&sat)?.betti_table().regularity().unwrap_or(0)
                    };
                    reg_saturation = Some(reg_sat);
                    let relation = if reg_sat == bel { "equality" } else { "strict" };
                    Ok((reg_sat <= bel, format!("reg_sat={reg_sat} bound={bel} ({relation})")))
                }),
            ),
            Claim::LinkDeg => {
                if complete_intersection {
                    skipped(claim, "complete intersection: the link is the unit ideal")
                } else {
                    outcome(
                        claim,
                        timer.run("LINKDEG", || {
                            let mut seed = opts.seed;
                            let mut worst = 0;
                            for _ in 0..opts.link_seeds.max(1) {
                                let link = graded_generic_link(&base, seed, &opts.link)?;
                                worst = worst.max(max_generator_degree(&link.j)?);
                                seed = splitmix64(seed);
                            }
                            Ok((worst <= sig, format!("max_degree={worst} sigma={sig} links={}", opts.link_seeds.max(1))))
                        }),
                    )
                }
            }
            Claim::Omega => {
                if !gorenstein {
                    skipped(claim, "not arithmetically Gorenstein")
                } else {
                    outcome(
                        claim,
                        timer.run("OMEGA", || {
                            let omega = canonical_module(&base, codim)?;
                            let reg_omega = module_regularity(&omega)?.unwrap_or(i64::MIN);
                            Ok((reg_omega == dim_x + 1, format!("reg_omega={reg_omega} expected={}", dim_x + 1)))
                        }),
                    )
                }
            }
            Claim::Exc => match &exc_h {
                None => skipped(claim, "not of the l·H shape"),
                Some(_) => {
                    let expected = 3 * degrees[0] as i64 - 5;
                    CheckResult {
                        claim,
                        verdict: if reg == expected { Verdict::Pass } else { Verdict::Fail },
                        detail: format!("reg={reg} expected={expected}"),
                    }
                }
            },
        };
        checks.push(result);
    }
    Ok(BoundReport {
        name: name.to_string(),
        field: ring.field().to_string(),
        variables: ring.nvars(),
        degrees,
        t,
        codim,
        dim_x,
        sigma: sig,
        reg,
        reg_saturation,
        complete_intersection,
        gorenstein,
        niu_bound: niu,
        niu_sharp_bound: niu_sharp,
        bel_bound: bel,
        exceptional_case,
        seed: opts.seed,
        checks,
        timings_ms: opts.timings.then_some(timer.map),
    })
}

/// Compares the Hilbert function of `J/b` (with `b = (α)` and `J` a generic
/// link of `I`) against that of `ω` shifted by `d − σ`, for degrees
/// `0..=max_degree`. Returns the two value lists.
pub fn link_module_hilbert(i: &Ideal, seed: u64, max_degree: i64) -> Result<(Vec<i64>, Vec<i64>)> {
    let link = graded_generic_link(i, seed, &LinkOptions::default())?;
    let ring = i.ring();
    let b = Ideal::new(ring, link.alpha.clone());
    let quotient: HilbertSeries = b.hilbert_series()?.sub(&link.j.hilbert_series()?);
    let d = i.krull_dimension()? as i64;
    let s = sigma(&link.degrees, link.codim)? as i64;
    let omega = module_hilbert_series(&canonical_module(&link.ideal, link.codim)?)?.shifted(s - d);
    Ok((
        quotient.hilbert_function_range(0, max_degree),
        omega.hilbert_function_range(0, max_degree),
    ))
}
