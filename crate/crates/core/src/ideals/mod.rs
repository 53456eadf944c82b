//! Ideals: sums, products, intersections, colons, saturation, elimination,
//! dimension and Hilbert series.

mod hilbert;

use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::groebner::engine::{self, ModuleContext};
use crate::groebner::{from_vector, reduced_groebner_basis, to_vector, GbOptions, GroebnerBasis};
use crate::polyring::{parse_polynomials, Homogeneity, Monomial, Polynomial, RingRef};

pub use hilbert::{monomial_numerator, HilbertSeries};

/// An ideal of a polynomial ring given by generators. The reduced Gröbner
/// basis for the ring's order is computed on first use and cached.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: RingRef,
    generators: Vec<Polynomial>,
    gb_cap: u32,
    gb: Arc<OnceLock<GroebnerBasis>>,
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: &RingRef, generators: Vec<Polynomial>) -> Self {
        let generators = generators
            .into_iter()
            .filter(|g| !g.is_zero())
            .map(|g| {
                assert!(ring.same_variables(g.ring()), "generator from another ring");
                g.with_ring(ring)
            })
            .collect();
        Ideal { ring: ring.clone(), generators, gb_cap: engine::DEFAULT_GB_DEGREE_CAP, gb: Arc::default() }
    }

    pub fn zero(ring: &RingRef) -> Self {
        Self::new(ring, Vec::new())
    }

    pub fn unit(ring: &RingRef) -> Self {
        Self::new(ring, vec![Polynomial::one(ring)])
    }

    /// Parses a comma separated generator list.
    pub fn parse(ring: &RingRef, text: &str) -> Result<Self> {
        Ok(Self::new(ring, parse_polynomials(text, ring)?))
    }

    /// Ideal generated by the variables.
    pub fn maximal(ring: &RingRef) -> Self {
        Self::new(ring, (0..ring.nvars()).map(|i| Polynomial::variable(ring, i)).collect())
    }

    /// Overrides the Gröbner degree cap used by computations on this ideal.
    pub fn with_gb_degree_cap(mut self, cap: u32) -> Self {
        self.gb_cap = cap;
        self.gb = Arc::default();
        self
    }

    pub fn gb_degree_cap(&self) -> u32 {
        self.gb_cap
    }

    fn derived(&self, ring: &RingRef, generators: Vec<Polynomial>) -> Self {
        Self::new(ring, generators).with_gb_degree_cap(self.gb_cap)
    }

    fn options(&self) -> GbOptions {
        GbOptions { degree_cap: self.gb_cap, ..GbOptions::default() }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Reduced Gröbner basis in the ring's order (cached).
    pub fn groebner_basis(&self) -> Result<&GroebnerBasis> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb);
        }
        let gb = reduced_groebner_basis(&self.ring, &self.generators, &self.options())?;
        let _ = self.gb.set(gb);
        Ok(self.gb.get().expect("just set"))
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.groebner_basis()?.is_unit())
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        self.check_ring(f.ring());
        Ok(self.groebner_basis()?.contains(f))
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Ideal) -> Result<bool> {
        self.check_ring(other.ring());
        let gb = other.groebner_basis()?;
        Ok(self.generators.iter().all(|g| gb.contains(g)))
    }

    /// Equality as ideals (equal reduced Gröbner bases).
    pub fn same_ideal(&self, other: &Ideal) -> Result<bool> {
        self.check_ring(other.ring());
        Ok(self.groebner_basis()?.elements() == other.groebner_basis()?.elements())
    }

    fn check_ring(&self, other: &RingRef) {
        assert!(self.ring.same_variables(other), "ideals live in different rings");
    }

    /// Every generator is homogeneous (graded rings only).
    pub fn is_homogeneous(&self) -> Result<bool> {
        self.ring.require_graded()?;
        for g in &self.generators {
            if !g.is_homogeneous()? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub(crate) fn require_homogeneous(&self) -> Result<()> {
        self.ring.require_graded()?;
        for g in &self.generators {
            if g.homogeneity()? == Homogeneity::Inhomogeneous {
                return Err(Error::NotHomogeneous(g.to_string()));
            }
        }
        Ok(())
    }

    /// A minimal homogeneous generating set, drawn from the given generators
    /// and sorted by descending degree (stable).
    pub fn minimal_generators(&self) -> Result<Vec<Polynomial>> {
        self.require_homogeneous()?;
        let ctx = ModuleContext::ideal(&self.ring);
        let inputs = self.generators.iter().map(to_vector).collect();
        let run = engine::buchberger(&ctx, inputs, &self.options())?;
        if self.gb.get().is_none() {
            let elements = engine::interreduce(&ctx, run.basis)
                .into_iter()
                .map(|v| from_vector(&self.ring, v))
                .collect();
            let _ = self.gb.set(GroebnerBasis::from_reduced(&self.ring, elements));
        }
        let mut survivors = run.survivors;
        survivors.sort_unstable();
        let mut out: Vec<Polynomial> = survivors.into_iter().map(|i| self.generators[i].clone()).collect();
        out.sort_by_key(|p| std::cmp::Reverse(p.degree()));
        Ok(out)
    }

    /// Degrees of the minimal generators, descending.
    pub fn generator_degrees(&self) -> Result<Vec<u32>> {
        Ok(self.minimal_generators()?.iter().filter_map(|g| g.degree()).collect())
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        ideal_sum(self, other)
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        ideal_product(self, other)
    }

    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        intersection(self, other)
    }

    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        colon(self, other)
    }

    pub fn saturation(&self, other: &Ideal) -> Result<Ideal> {
        saturation(self, other)
    }

    pub fn krull_dimension(&self) -> Result<usize> {
        krull_dimension(self)
    }

    pub fn codimension(&self) -> Result<usize> {
        codimension(self)
    }

    pub fn hilbert_series(&self) -> Result<HilbertSeries> {
        hilbert_series(self)
    }
}

/// Generators concatenated.
pub fn ideal_sum(i: &Ideal, j: &Ideal) -> Ideal {
    i.check_ring(j.ring());
    let mut gens = i.generators.clone();
    gens.extend(j.generators.iter().map(|g| g.with_ring(&i.ring)));
    i.derived(&i.ring, gens).with_gb_degree_cap(i.gb_cap.max(j.gb_cap))
}

/// Pairwise products of generators.
pub fn ideal_product(i: &Ideal, j: &Ideal) -> Ideal {
    i.check_ring(j.ring());
    let mut gens = Vec::with_capacity(i.generators.len() * j.generators.len());
    for f in &i.generators {
        for g in &j.generators {
            gens.push(f.mul(&g.with_ring(&i.ring)));
        }
    }
    i.derived(&i.ring, gens).with_gb_degree_cap(i.gb_cap.max(j.gb_cap))
}

/// Elements of `gb` free of the first `k` variables, moved to `target`
/// (whose variables are the remaining ones, in order).
fn drop_front(gb: &GroebnerBasis, k: usize, target: &RingRef) -> Vec<Polynomial> {
    let n = target.nvars();
    let mut keep = vec![false; k];
    keep.extend(std::iter::repeat_n(true, n));
    gb.elements()
        .iter()
        .filter(|p| p.uses_only(&keep))
        .map(|p| {
            let terms = p
                .terms()
                .iter()
                .map(|t| (t.coeff.clone(), Monomial::from_exponents(&t.monomial.exponents()[k..])))
                .collect();
            Polynomial::from_terms(target, terms)
        })
        .collect()
}

/// `I ∩ J` by eliminating `t` from `t·I + (1 − t)·J`.
pub fn intersection(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    i.check_ring(j.ring());
    let ring = &i.ring;
    if i.is_zero() || j.is_zero() {
        return Ok(Ideal::zero(ring).with_gb_degree_cap(i.gb_cap));
    }
    let cap = i.gb_cap.max(j.gb_cap);
    let aux = ring.with_auxiliary_front(1);
    let positions: Vec<usize> = (1..=ring.nvars()).collect();
    let t = Polynomial::variable(&aux, 0);
    let one_minus_t = Polynomial::one(&aux).sub(&t);
    let mut gens = Vec::new();
    for f in &i.generators {
        gens.push(t.mul(&f.map_variables(&aux, &positions)));
    }
    for g in &j.generators {
        gens.push(one_minus_t.mul(&g.map_variables(&aux, &positions)));
    }
    let opts = GbOptions { degree_cap: cap, ..GbOptions::default() };
    let gb = reduced_groebner_basis(&aux, &gens, &opts)?;
    let kept = drop_front(&gb, 1, ring);
    Ok(i.derived(ring, canonical_generators(ring, kept, cap)?).with_gb_degree_cap(cap))
}

/// Generators of a result ideal: the reduced Gröbner basis in `ring`.
fn canonical_generators(ring: &RingRef, gens: Vec<Polynomial>, cap: u32) -> Result<Vec<Polynomial>> {
    let opts = GbOptions { degree_cap: cap, ..GbOptions::default() };
    Ok(reduced_groebner_basis(ring, &gens, &opts)?.into_elements())
}

/// `[I : (g)]`, computed as `(I ∩ (g)) / g`.
pub fn colon_element(i: &Ideal, g: &Polynomial) -> Result<Ideal> {
    let ring = &i.ring;
    let g = g.with_ring(ring);
    if g.is_zero() {
        return Ok(Ideal::unit(ring).with_gb_degree_cap(i.gb_cap));
    }
    if g.is_constant() {
        return Ok(i.clone());
    }
    let meet = intersection(i, &i.derived(ring, vec![g.clone()]))?;
    let quotients = meet
        .generators
        .iter()
        .map(|h| h.div_exact(&g).expect("elements of (g) are divisible by g"))
        .collect();
    Ok(i.derived(ring, quotients))
}

/// `[I : J] = {f : f·J ⊆ I}`, the intersection of `[I : (g)]` over the
/// generators `g` of `J`.
pub fn colon(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    i.check_ring(j.ring());
    let mut acc: Option<Ideal> = None;
    for g in &j.generators {
        let q = colon_element(i, g)?;
        acc = Some(match acc {
            None => q,
            Some(a) => {
                if a.is_unit()? {
                    q
                } else if q.is_unit()? {
                    a
                } else {
                    intersection(&a, &q)?
                }
            }
        });
    }
    Ok(acc.unwrap_or_else(|| Ideal::unit(&i.ring).with_gb_degree_cap(i.gb_cap)))
}

/// `[I : J^∞]`: colon iterated until the reduced Gröbner basis stabilizes.
pub fn saturation(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    let mut cur = i.clone();
    loop {
        let next = colon(&cur, j)?;
        if next.same_ideal(&cur)? {
            return Ok(cur);
        }
        cur = next;
    }
}

/// `I ∩ k[remaining variables]`, as an ideal of the original ring.
pub fn eliminate(i: &Ideal, vars: &[usize]) -> Result<Ideal> {
    let ring = &i.ring;
    let n = ring.nvars();
    let mut eliminated = vec![false; n];
    for &v in vars {
        if v >= n {
            return Err(Error::InvalidArgument(format!("variable index {v} out of range")));
        }
        eliminated[v] = true;
    }
    let k = eliminated.iter().filter(|&&e| e).count();
    if k == 0 {
        return Ok(i.clone());
    }
    let perm: Vec<usize> = (0..n).filter(|&v| eliminated[v]).chain((0..n).filter(|&v| !eliminated[v])).collect();
    let mut positions = vec![0; n];
    for (new, &old) in perm.iter().enumerate() {
        positions[old] = new;
    }
    let elim_ring = ring.permuted(&perm, crate::polyring::MonomialOrder::Elimination(k))?;
    let gens: Vec<Polynomial> = i.generators.iter().map(|f| f.map_variables(&elim_ring, &positions)).collect();
    let gb = reduced_groebner_basis(&elim_ring, &gens, &i.options())?;
    let mut keep = vec![false; k];
    keep.extend(std::iter::repeat_n(true, n - k));
    let back: Vec<usize> = perm.clone();
    let kept = gb
        .elements()
        .iter()
        .filter(|p| p.uses_only(&keep))
        .map(|p| p.map_variables(ring, &back))
        .collect();
    Ok(i.derived(ring, canonical_generators(ring, kept, i.gb_cap)?))
}

/// Supports (as bit masks) of the minimal leading monomials.
fn leading_supports(i: &Ideal) -> Result<Vec<u64>> {
    let gb = i.groebner_basis()?;
    if gb.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let n = i.ring.nvars();
    if n > 64 {
        return Err(Error::InvalidArgument("dimension needs at most 64 variables".into()));
    }
    let mut masks: Vec<u64> = gb.leading_monomials().iter().map(|m| m.support_mask()).collect();
    masks.sort_unstable();
    masks.dedup();
    Ok(masks)
}

/// Size of a smallest variable set meeting every support.
fn min_hitting_set(masks: &[u64], chosen: u64, budget: usize, best: &mut usize) {
    let Some(&m) = masks.iter().find(|&&m| m & chosen == 0) else {
        *best = (*best).min(budget);
        return;
    };
    if budget + 1 >= *best {
        return;
    }
    let mut bits = m;
    while bits != 0 {
        let b = bits & bits.wrapping_neg();
        min_hitting_set(masks, chosen | b, budget + 1, best);
        bits &= bits - 1;
    }
}

/// Dimension of `R/I`, from the leading-term ideal: the largest set of
/// variables containing no leading monomial's support.
pub fn krull_dimension(i: &Ideal) -> Result<usize> {
    Ok(i.ring.nvars() - codimension(i)?)
}

pub fn codimension(i: &Ideal) -> Result<usize> {
    let masks = leading_supports(i)?;
    let mut best = i.ring.nvars();
    min_hitting_set(&masks, 0, 0, &mut best);
    Ok(best)
}

/// Hilbert series of `R/I` (graded rings, homogeneous generators).
pub fn hilbert_series(i: &Ideal) -> Result<HilbertSeries> {
    i.require_homogeneous()?;
    let gb = i.groebner_basis()?;
    let weights = i.ring.weights().to_vec();
    Ok(HilbertSeries::from_numerator(monomial_numerator(&gb.leading_monomials(), &weights), weights))
}

#[cfg(test)]
mod tests;
