//! Generic residual intersections and links: `α = f·M`, `J = [α : I]`,
//! `Z = I + J`, with `M` either a matrix of fresh variables (symbolic mode)
//! or a seeded scalar specialization of the graded link matrix.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideals::Ideal;
use crate::polyring::{Coeff, CoefficientField, Polynomial, RingMode, RingRef, MonomialOrder};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LinkMode {
    Symbolic,
    GradedRandom,
}

/// The `t × s` matrix `M` with `α = (f_1, ..., f_t) · M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkMatrix {
    pub mode: LinkMode,
    /// `entries[i][j]`, `i < t`, `j < s`.
    pub entries: Vec<Vec<Polynomial>>,
}

impl LinkMatrix {
    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.entries.first().map_or(0, |r| r.len())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Genericity {
    pub alpha_is_regular_sequence: bool,
    pub codim_alpha: usize,
    /// `None` when `J` is the unit ideal.
    pub codim_j: Option<usize>,
    /// `None` when `Z` is the unit ideal.
    pub codim_z: Option<usize>,
    pub resample_count: u32,
}

#[derive(Clone, Debug)]
pub struct LinkageResult {
    /// The ideal being linked, in the ring of the result.
    pub ideal: Ideal,
    pub alpha: Vec<Polynomial>,
    pub j: Ideal,
    pub z: Ideal,
    pub matrix: LinkMatrix,
    /// Seed that produced this matrix (after any resampling).
    pub seed: u64,
    pub initial_seed: u64,
    pub genericity: Genericity,
    /// `J = (1)`, e.g. when `I` is already a complete intersection.
    pub degenerate: bool,
    /// Generator degrees of `I`, descending.
    pub degrees: Vec<u32>,
    pub codim: usize,
}

#[derive(Clone, Debug)]
pub struct LinkOptions {
    /// Resampling attempts after the first one.
    pub max_retries: u32,
    /// Coefficients over QQ are drawn from `{−B..B} \ {0}`.
    pub coefficient_bound: i64,
    /// Largest `t·s` accepted in symbolic mode.
    pub symbolic_cap: usize,
}

impl Default for LinkOptions {
    fn default() -> Self {
        LinkOptions { max_retries: 8, coefficient_bound: 100, symbolic_cap: 6 }
    }
}

/// SplitMix64 successor, used to derive resampling seeds.
pub fn splitmix64(seed: u64) -> u64 {
    let mut z = seed.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn random_coeff(rng: &mut ChaCha8Rng, field: &CoefficientField, bound: i64) -> Coeff {
    match field {
        CoefficientField::Rational => {
            let v = rng.random_range(1..=2 * bound);
            field.from_i64(if v > bound { bound - v } else { v })
        }
        CoefficientField::Prime(p) => field.from_i64(rng.random_range(1..*p as i64)),
    }
}

/// Dense form of degree `d` with random nonzero coefficients.
fn random_form(ring: &RingRef, d: u32, rng: &mut ChaCha8Rng, bound: i64) -> Polynomial {
    let field = ring.field();
    let terms = ring.monomials_of_degree(d).into_iter().map(|m| (random_coeff(rng, field, bound), m)).collect();
    Polynomial::from_terms(ring, terms)
}

fn codim_or_none(i: &Ideal) -> Result<Option<usize>> {
    if i.is_unit()? {
        Ok(None)
    } else {
        Ok(Some(i.codimension()?))
    }
}

/// Graded generic link of `I` with the generic link matrix specialized to
/// seeded scalars: `α_j = f_j + Σ_{i>r} a_ij f_i` with `a_ij` a random form
/// of degree `d_j − d_i`. Genericity is checked afterwards and the matrix is
/// resampled with a derived seed on failure.
pub fn graded_generic_link(i: &Ideal, seed: u64, opts: &LinkOptions) -> Result<LinkageResult> {
    i.require_homogeneous()?;
    if i.is_unit()? {
        return Err(Error::UnitIdeal);
    }
    let ring = i.ring();
    let gens = i.minimal_generators()?;
    let degrees: Vec<u32> = gens.iter().map(|g| g.degree().expect("nonzero")).collect();
    let t = gens.len();
    let r = i.codimension()?;
    let base = Ideal::new(ring, gens.clone()).with_gb_degree_cap(i.gb_degree_cap());
    let mut cur = seed;
    for attempt in 0..=opts.max_retries {
        let mut rng = ChaCha8Rng::seed_from_u64(cur);
        let mut entries = vec![vec![Polynomial::zero(ring); r]; t];
        for (k, row) in entries.iter_mut().enumerate().take(r) {
            row[k] = Polynomial::one(ring);
        }
        for (row_idx, row) in entries.iter_mut().enumerate().skip(r) {
            for (j, entry) in row.iter_mut().enumerate() {
                let (dj, di) = (degrees[j], degrees[row_idx]);
                if dj >= di {
                    *entry = random_form(ring, dj - di, &mut rng, opts.coefficient_bound);
                }
            }
        }
        let alpha: Vec<Polynomial> = (0..r)
            .map(|j| {
                let mut acc = Polynomial::zero(ring);
                for (k, g) in gens.iter().enumerate() {
                    if !entries[k][j].is_zero() {
                        acc = acc.add(&g.mul(&entries[k][j]));
                    }
                }
                acc
            })
            .collect();
        let matrix = LinkMatrix { mode: LinkMode::GradedRandom, entries };
        let a = Ideal::new(ring, alpha.clone()).with_gb_degree_cap(i.gb_degree_cap());
        let codim_alpha = if a.is_unit()? { 0 } else { a.codimension()? };
        let regular = alpha.len() == r && alpha.iter().all(|f| !f.is_zero()) && codim_alpha == r;
        let mut genericity = Genericity {
            alpha_is_regular_sequence: regular,
            codim_alpha,
            codim_j: None,
            codim_z: None,
            resample_count: attempt,
        };
        if regular {
            let j = a.colon(&base)?;
            let z = base.sum(&j);
            genericity.codim_j = codim_or_none(&j)?;
            genericity.codim_z = codim_or_none(&z)?;
            let degenerate = genericity.codim_j.is_none();
            let ok = degenerate || (genericity.codim_j == Some(r) && genericity.codim_z.is_none_or(|c| c == r + 1));
            if ok {
                return Ok(LinkageResult {
                    ideal: base,
                    alpha,
                    j,
                    z,
                    matrix,
                    seed: cur,
                    initial_seed: seed,
                    genericity,
                    degenerate,
                    degrees,
                    codim: r,
                });
            }
        }
        cur = splitmix64(cur);
    }
    Err(Error::GenericityFailure { attempts: opts.max_retries as usize + 1 })
}

/// `s`-generic residual intersection with a `t × s` matrix of fresh
/// variables `U_i_j` adjoined in an affine ring.
pub fn symbolic_residual(i: &Ideal, s: usize, opts: &LinkOptions) -> Result<LinkageResult> {
    let ring = i.ring();
    let gens: Vec<Polynomial> = i.generators().to_vec();
    let t = gens.len();
    if t * s > opts.symbolic_cap {
        return Err(Error::SizeCapExceeded { size: t * s, cap: opts.symbolic_cap });
    }
    if t == 0 || s == 0 {
        return Err(Error::InvalidArgument("symbolic residual needs generators and s ≥ 1".into()));
    }
    let mut prefix = String::from("U");
    while ring.names().iter().any(|n| n.starts_with(&prefix)) {
        prefix.push('_');
    }
    let u_names: Vec<String> = (0..t).flat_map(|a| (0..s).map(move |b| (a, b))).map(|(a, b)| format!("{prefix}{a}_{b}")).collect();
    let ext = ring.extended_front(&u_names, RingMode::Affine, MonomialOrder::Grevlex)?;
    let positions: Vec<usize> = (0..ring.nvars()).map(|v| t * s + v).collect();
    let lifted: Vec<Polynomial> = gens.iter().map(|g| g.map_variables(&ext, &positions)).collect();
    let entries: Vec<Vec<Polynomial>> =
        (0..t).map(|a| (0..s).map(|b| Polynomial::variable(&ext, a * s + b)).collect()).collect();
    let alpha: Vec<Polynomial> = (0..s)
        .map(|b| {
            let mut acc = Polynomial::zero(&ext);
            for (a, f) in lifted.iter().enumerate() {
                acc = acc.add(&f.mul(&entries[a][b]));
            }
            acc
        })
        .collect();
    let cap = i.gb_degree_cap();
    let base = Ideal::new(&ext, lifted).with_gb_degree_cap(cap);
    let a = Ideal::new(&ext, alpha.clone()).with_gb_degree_cap(cap);
    let j = a.colon(&base)?;
    let z = base.sum(&j);
    let r = if i.is_unit()? { 0 } else { i.codimension()? };
    let codim_alpha = if a.is_unit()? { 0 } else { a.codimension()? };
    let genericity = Genericity {
        alpha_is_regular_sequence: codim_alpha == alpha.len(),
        codim_alpha,
        codim_j: codim_or_none(&j)?,
        codim_z: codim_or_none(&z)?,
        resample_count: 0,
    };
    let degrees = if ring.is_graded() { gens.iter().filter_map(|g| g.degree()).collect() } else { Vec::new() };
    Ok(LinkageResult {
        degenerate: genericity.codim_j.is_none(),
        ideal: base,
        alpha,
        j,
        z,
        matrix: LinkMatrix { mode: LinkMode::Symbolic, entries },
        seed: 0,
        initial_seed: 0,
        genericity,
        degrees,
        codim: r,
    })
}

/// `Z = I + J`.
pub fn intersection_divisor(result: &LinkageResult) -> Ideal {
    result.ideal.sum(&result.j)
}

/// Largest degree of a minimal generator; 0 for the unit ideal.
pub fn max_generator_degree(j: &Ideal) -> Result<u32> {
    if j.is_unit()? {
        return Ok(0);
    }
    Ok(j.generator_degrees()?.into_iter().max().unwrap_or(0))
}

/// JSON form of a [`LinkageResult`]; polynomials in the input grammar.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkageReport {
    pub mode: LinkMode,
    pub ring: Vec<String>,
    pub field: String,
    pub seed: u64,
    pub initial_seed: u64,
    pub degrees: Vec<u32>,
    pub codim: usize,
    pub sigma: Option<u32>,
    pub alpha: Vec<String>,
    #[serde(rename = "J")]
    pub j: Vec<String>,
    #[serde(rename = "Z")]
    pub z: Vec<String>,
    pub matrix: Vec<Vec<String>>,
    pub genericity: Genericity,
    pub degenerate: bool,
    pub max_generator_degree_j: Option<u32>,
}

fn strings(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

/// Minimal generators when graded, else the reduced Gröbner basis.
fn display_generators(i: &Ideal) -> Result<Vec<Polynomial>> {
    if i.ring().is_graded() {
        if i.is_unit()? {
            return Ok(vec![Polynomial::one(i.ring())]);
        }
        i.minimal_generators()
    } else {
        Ok(i.groebner_basis()?.elements().to_vec())
    }
}

impl LinkageResult {
    pub fn sigma(&self) -> Option<u32> {
        (self.degrees.len() >= self.codim).then(|| self.degrees[..self.codim].iter().map(|d| d - 1).sum())
    }

    pub fn report(&self) -> Result<LinkageReport> {
        let ring = self.j.ring();
        let max_deg = if ring.is_graded() { Some(max_generator_degree(&self.j)?) } else { None };
        Ok(LinkageReport {
            mode: self.matrix.mode,
            ring: ring.names().to_vec(),
            field: ring.field().to_string(),
            seed: self.seed,
            initial_seed: self.initial_seed,
            degrees: self.degrees.clone(),
            codim: self.codim,
            sigma: if self.matrix.mode == LinkMode::GradedRandom { self.sigma() } else { None },
            alpha: strings(&self.alpha),
            j: strings(&display_generators(&self.j)?),
            z: strings(&display_generators(&self.z)?),
            matrix: self.matrix.entries.iter().map(|row| strings(row)).collect(),
            genericity: self.genericity.clone(),
            degenerate: self.degenerate,
            max_generator_degree_j: max_deg,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{parse_polynomial, CoefficientField, Ring};

    fn ring(n: usize) -> RingRef {
        Ring::standard(CoefficientField::Rational, n)
    }

    fn twisted_cubic() -> Ideal {
        Ideal::parse(&ring(4), "x0*x2 - x1^2, x0*x3 - x1*x2, x1*x3 - x2^2").unwrap()
    }

    #[test]
    fn splitmix_is_deterministic() {
        assert_eq!(splitmix64(0), 0xE220_A839_7B1D_CDAF);
        assert_ne!(splitmix64(1), splitmix64(2));
    }

    #[test]
    fn complete_intersection_link_is_degenerate() {
        let i = Ideal::parse(&ring(4), "x0^2 + x1^2 + x2^2 + x3^2, x0^2 + 2*x1^2 + 3*x2^2 + 4*x3^2").unwrap();
        let res = graded_generic_link(&i, 42, &LinkOptions::default()).unwrap();
        assert!(res.degenerate);
        assert!(res.j.is_unit().unwrap());
        assert_eq!(res.alpha, i.minimal_generators().unwrap());
        assert_eq!(max_generator_degree(&res.j).unwrap(), 0);
    }

    #[test]
    fn twisted_cubic_link() {
        let i = twisted_cubic();
        let res = graded_generic_link(&i, 42, &LinkOptions::default()).unwrap();
        assert!(!res.degenerate);
        assert!(res.genericity.alpha_is_regular_sequence);
        assert_eq!(res.genericity.codim_j, Some(2));
        assert_eq!(res.genericity.codim_z, Some(3));
        assert!(max_generator_degree(&res.j).unwrap() <= 2);
        for a in &res.alpha {
            assert_eq!(a.degree(), Some(2));
            assert!(a.is_homogeneous().unwrap());
            assert!(res.j.contains(a).unwrap());
            assert!(i.contains(a).unwrap());
        }
        // liaison is an involution on unmixed ideals
        let alpha = Ideal::new(i.ring(), res.alpha.clone());
        assert!(alpha.colon(&res.j).unwrap().same_ideal(&i).unwrap());
        let again = graded_generic_link(&i, 42, &LinkOptions::default()).unwrap();
        assert_eq!(again.report().unwrap(), res.report().unwrap());
    }

    #[test]
    fn principal_product_link() {
        let r = ring(3);
        let i = Ideal::parse(&r, "(x0 + x1 + x2)*x0^2, (x0 + x1 + x2)*x1^2, (x0 + x1 + x2)*x2^2").unwrap();
        let res = graded_generic_link(&i, 7, &LinkOptions::default()).unwrap();
        assert_eq!(res.codim, 1);
        assert_eq!(res.alpha.len(), 1);
        assert_eq!(res.alpha[0].degree(), Some(3));
        assert_eq!(res.genericity.codim_j, Some(1));
        let brute = Ideal::new(&r, res.alpha.clone()).colon(&i).unwrap();
        assert!(brute.same_ideal(&res.j).unwrap());
    }

    #[test]
    fn symbolic_complete_intersection_lemma() {
        let r = Ring::graded(CoefficientField::Rational, &["x", "y"]).unwrap();
        let i = Ideal::parse(&r, "x, y").unwrap();
        let res = symbolic_residual(&i, 2, &LinkOptions::default()).unwrap();
        let ext = res.j.ring().clone();
        let det = parse_polynomial("U0_0*U1_1 - U0_1*U1_0", &ext).unwrap();
        let mut gens = res.alpha.clone();
        gens.push(det);
        assert!(res.j.same_ideal(&Ideal::new(&ext, gens)).unwrap());
    }

    #[test]
    fn symbolic_below_codimension() {
        let r = Ring::graded(CoefficientField::Rational, &["x", "y"]).unwrap();
        let i = Ideal::parse(&r, "x, y").unwrap();
        let res = symbolic_residual(&i, 1, &LinkOptions::default()).unwrap();
        assert!(res.j.same_ideal(&Ideal::new(res.j.ring(), res.alpha.clone())).unwrap());
        assert!(intersection_divisor(&res).same_ideal(&res.ideal).unwrap());
    }

    #[test]
    fn symbolic_principal() {
        let r = Ring::graded(CoefficientField::Rational, &["x"]).unwrap();
        let i = Ideal::parse(&r, "x").unwrap();
        let res = symbolic_residual(&i, 1, &LinkOptions::default()).unwrap();
        let ext = res.j.ring().clone();
        assert!(res.j.same_ideal(&Ideal::parse(&ext, "U0_0").unwrap()).unwrap());
        assert!(res.z.same_ideal(&Ideal::parse(&ext, "U0_0, x").unwrap()).unwrap());
    }

    #[test]
    fn symbolic_size_cap() {
        let i = Ideal::parse(&ring(3), "x0, x1, x2").unwrap();
        assert_eq!(
            symbolic_residual(&i, 3, &LinkOptions::default()).unwrap_err(),
            Error::SizeCapExceeded { size: 9, cap: 6 }
        );
    }

    #[test]
    fn max_degree_examples() {
        let r = Ring::graded(CoefficientField::Rational, &["x", "y"]).unwrap();
        assert_eq!(max_generator_degree(&Ideal::parse(&r, "x, y^2").unwrap()).unwrap(), 2);
        assert_eq!(max_generator_degree(&Ideal::unit(&r)).unwrap(), 0);
    }
}
