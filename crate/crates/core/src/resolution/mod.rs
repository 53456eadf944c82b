//! Graded free modules, syzygies, minimal free resolutions, Betti tables,
//! regularity and the canonical module.
//!
//! Twist convention: the free module `⊕ R(−a_i)` is stored as `[a_1, ...]`,
//! so a generator of twist `a` lives in degree `a`. Dualizing negates twists.

mod betti;
mod ext;
#[cfg(test)]
mod tests;

use crate::error::{Error, Result};
use crate::groebner::engine::{self, ModuleContext, VTerm, Vector};
use crate::groebner::GbOptions;
use crate::ideals::{monomial_numerator, HilbertSeries, Ideal};
use crate::polyring::{Coeff, Homogeneity, Monomial, Polynomial, RingRef};

pub use betti::BettiTable;
pub use ext::{canonical_module, dual, ext_module};

/// `⊕ R(−a_i)`, stored as the list of `a_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GradedFreeModule {
    twists: Vec<i64>,
}

impl GradedFreeModule {
    pub fn new(twists: Vec<i64>) -> Self {
        GradedFreeModule { twists }
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    pub fn dual(&self) -> Self {
        GradedFreeModule { twists: self.twists.iter().map(|a| -a).collect() }
    }

    pub fn shifted(&self, a: i64) -> Self {
        GradedFreeModule { twists: self.twists.iter().map(|t| t + a).collect() }
    }

    /// Hilbert series of the free module.
    pub fn hilbert_series(&self, weights: &[u32]) -> HilbertSeries {
        HilbertSeries::from_terms(self.twists.iter().map(|&a| (a, 1)), weights.to_vec())
    }
}

/// A homogeneous map of graded free modules; column `j` is the image of the
/// `j`-th source generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap {
    ring: RingRef,
    source: GradedFreeModule,
    target: GradedFreeModule,
    /// `matrix[i][j]`, `i` indexing target generators.
    matrix: Vec<Vec<Polynomial>>,
}

impl ModuleMap {
    /// Checks shapes and that `deg entry(i,j) = source[j] − target[i]`.
    pub fn new(
        ring: &RingRef,
        source: GradedFreeModule,
        target: GradedFreeModule,
        matrix: Vec<Vec<Polynomial>>,
    ) -> Result<Self> {
        ring.require_graded()?;
        if matrix.len() != target.rank() || matrix.iter().any(|row| row.len() != source.rank()) {
            return Err(Error::InvalidArgument("matrix shape does not match the modules".into()));
        }
        for (i, row) in matrix.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                match e.homogeneity()? {
                    Homogeneity::Zero => {}
                    Homogeneity::Degree(d) if d as i64 == source.twists[j] - target.twists[i] => {}
                    _ => return Err(Error::NotHomogeneous(format!("entry ({i},{j}) = {e}"))),
                }
            }
        }
        Ok(ModuleMap { ring: ring.clone(), source, target, matrix })
    }

    pub(crate) fn new_unchecked(
        ring: &RingRef,
        source: GradedFreeModule,
        target: GradedFreeModule,
        matrix: Vec<Vec<Polynomial>>,
    ) -> Self {
        debug_assert_eq!(matrix.len(), target.rank());
        ModuleMap { ring: ring.clone(), source, target, matrix }
    }

    /// The `1 × t` map `⊕ R(−deg f_j) → R` given by the generators.
    pub fn from_generators(ring: &RingRef, gens: &[Polynomial]) -> Result<Self> {
        let mut twists = Vec::with_capacity(gens.len());
        for g in gens {
            match g.homogeneity()? {
                Homogeneity::Degree(d) => twists.push(d as i64),
                Homogeneity::Zero => return Err(Error::InvalidArgument("zero generator".into())),
                Homogeneity::Inhomogeneous => return Err(Error::NotHomogeneous(g.to_string())),
            }
        }
        Self::new(ring, GradedFreeModule::new(twists), GradedFreeModule::new(vec![0]), vec![gens.to_vec()])
    }

    /// Zero map from the rank-zero module.
    pub fn zero_from(ring: &RingRef, target: GradedFreeModule) -> Self {
        let matrix = vec![Vec::new(); target.rank()];
        ModuleMap { ring: ring.clone(), source: GradedFreeModule::default(), target, matrix }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn source(&self) -> &GradedFreeModule {
        &self.source
    }

    pub fn target(&self) -> &GradedFreeModule {
        &self.target
    }

    pub fn matrix(&self) -> &[Vec<Polynomial>] {
        &self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.matrix[i][j]
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.iter().flatten().all(|e| e.is_zero())
    }

    /// Some entry is a nonzero constant.
    pub fn has_unit_entry(&self) -> bool {
        self.matrix.iter().flatten().any(|e| !e.is_zero() && e.is_constant())
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        self.matrix.iter().map(|row| row[j].clone()).collect()
    }

    pub fn transpose(&self) -> ModuleMap {
        let (m, k) = (self.target.rank(), self.source.rank());
        let matrix = (0..k).map(|j| (0..m).map(|i| self.matrix[i][j].clone()).collect()).collect();
        ModuleMap { ring: self.ring.clone(), source: self.target.dual(), target: self.source.dual(), matrix }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ModuleMap) -> ModuleMap {
        assert_eq!(self.source.rank(), other.target.rank(), "maps are not composable");
        let zero = Polynomial::zero(&self.ring);
        let matrix = (0..self.target.rank())
            .map(|i| {
                (0..other.source.rank())
                    .map(|j| {
                        let mut acc = zero.clone();
                        for l in 0..self.source.rank() {
                            let (a, b) = (&self.matrix[i][l], &other.matrix[l][j]);
                            if !a.is_zero() && !b.is_zero() {
                                acc = acc.add(&a.mul(b));
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        ModuleMap {
            ring: self.ring.clone(),
            source: other.source.clone(),
            target: self.target.clone(),
            matrix,
        }
    }

    fn column_vector(&self, j: usize) -> Vector {
        let mut v = Vec::new();
        for (i, row) in self.matrix.iter().enumerate() {
            for t in row[j].terms() {
                v.push(VTerm { coeff: t.coeff.clone(), mono: t.monomial.clone(), comp: i });
            }
        }
        v
    }

    fn with_columns(&self, cols: &[usize]) -> ModuleMap {
        let matrix = self.matrix.iter().map(|row| cols.iter().map(|&j| row[j].clone()).collect()).collect();
        let source = GradedFreeModule::new(cols.iter().map(|&j| self.source.twists[j]).collect());
        ModuleMap { ring: self.ring.clone(), source, target: self.target.clone(), matrix }
    }
}

fn vector_to_column(ring: &RingRef, v: &[VTerm], rank: usize, offset: usize) -> Vec<Polynomial> {
    let mut parts: Vec<Vec<(Coeff, Monomial)>> = vec![Vec::new(); rank];
    for t in v {
        parts[t.comp - offset].push((t.coeff.clone(), t.mono.clone()));
    }
    parts.into_iter().map(|terms| Polynomial::from_terms(ring, terms)).collect()
}

fn columns_to_map(ring: &RingRef, target: &GradedFreeModule, cols: Vec<(i64, Vec<Polynomial>)>) -> ModuleMap {
    let source = GradedFreeModule::new(cols.iter().map(|c| c.0).collect());
    let matrix = (0..target.rank()).map(|i| cols.iter().map(|c| c.1[i].clone()).collect()).collect();
    ModuleMap { ring: ring.clone(), source, target: target.clone(), matrix }
}

/// Context for the augmented module `target ⊕ source`, target block first.
fn augmented_context(m: &ModuleMap) -> ModuleContext {
    let mut twists = m.target.twists.clone();
    twists.extend(m.source.twists.iter().copied());
    let mut blocks = vec![0; m.target.rank()];
    blocks.extend(std::iter::repeat_n(1, m.source.rank()));
    ModuleContext::new(&m.ring, twists, blocks)
}

fn augmented_inputs(ctx: &ModuleContext, m: &ModuleMap) -> Vec<Vector> {
    let one = m.ring.field().one();
    let n = m.ring.nvars();
    (0..m.source.rank())
        .map(|j| {
            let mut v = m.column_vector(j);
            v.push(VTerm { coeff: one.clone(), mono: Monomial::one(n), comp: m.target.rank() + j });
            ctx.normalize(v)
        })
        .collect()
}

/// Minimal homogeneous generators (by index) of the submodule spanned by
/// `vectors` in the free module with the given twists.
fn minimal_subset(ring: &RingRef, twists: &[i64], vectors: &[Vector], opts: &GbOptions) -> Result<Vec<usize>> {
    let ctx = ModuleContext::free(ring, twists.to_vec());
    let run = engine::buchberger(&ctx, vectors.to_vec(), opts)?;
    let mut s = run.survivors;
    s.sort_unstable();
    Ok(s)
}

/// Minimal generators of the kernel of `m`, as a map into `m`'s source.
pub fn syzygies(m: &ModuleMap) -> Result<ModuleMap> {
    syzygies_with(m, &GbOptions::default())
}

pub fn syzygies_with(m: &ModuleMap, opts: &GbOptions) -> Result<ModuleMap> {
    m.ring.require_graded()?;
    let (rows, k) = (m.target.rank(), m.source.rank());
    if k == 0 {
        return Ok(ModuleMap::zero_from(&m.ring, m.source.clone()));
    }
    let ctx = augmented_context(m);
    let run = engine::buchberger(&ctx, augmented_inputs(&ctx, m), opts)?;
    let kernel: Vec<Vector> = run
        .basis
        .into_iter()
        .filter(|v| v[0].comp >= rows)
        .map(|v| v.into_iter().map(|t| VTerm { comp: t.comp - rows, ..t }).collect())
        .collect();
    let keep = minimal_subset(&m.ring, &m.source.twists, &kernel, opts)?;
    let free = ModuleContext::free(&m.ring, m.source.twists.clone());
    let mut cols: Vec<(i64, Vec<Polynomial>)> = keep
        .into_iter()
        .map(|i| {
            let mut v = kernel[i].clone();
            free.make_primitive(&mut v);
            let deg = free.homogeneous_degree(&v).expect("homogeneous syzygy");
            (deg, vector_to_column(&m.ring, &v, k, 0))
        })
        .collect();
    cols.sort_by_key(|c| c.0);
    Ok(columns_to_map(&m.ring, &m.source, cols))
}

/// Solves `m · x = v`; `None` if `v` is not in the image of `m`.
pub fn lift(m: &ModuleMap, v: &[Polynomial]) -> Result<Option<Vec<Polynomial>>> {
    let ring = &m.ring;
    let (rows, k) = (m.target.rank(), m.source.rank());
    assert_eq!(v.len(), rows);
    let field = ring.field();
    let mut target_vec = Vec::new();
    for (i, p) in v.iter().enumerate() {
        for t in p.terms() {
            target_vec.push(VTerm { coeff: t.coeff.clone(), mono: t.monomial.clone(), comp: i });
        }
    }
    if k == 0 {
        return Ok(target_vec.is_empty().then(Vec::new));
    }
    let ctx = augmented_context(m);
    let run = engine::buchberger(&ctx, augmented_inputs(&ctx, m), &GbOptions::default())?;
    let reducers: Vec<engine::Reducer> = run.basis.into_iter().map(engine::Reducer::new).collect();
    let red = engine::reduce(&ctx, ctx.normalize(target_vec), &reducers, true);
    if red.result.iter().any(|t| t.comp < rows) {
        return Ok(None);
    }
    // scale·(v, 0) − (0, w) = Σ x_j (m_j, e_j)  ⟹  x = −w / scale
    let factor = field.neg(&field.inv(&red.scale));
    let x = vector_to_column(ring, &red.result, k, rows).into_iter().map(|p| p.scale(&factor)).collect();
    Ok(Some(x))
}

/// Chain `F_0 ← F_1 ← ... ← F_p` with `maps[i]` the differential `F_{i+1} → F_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Resolution {
    ring: RingRef,
    maps: Vec<ModuleMap>,
    base: GradedFreeModule,
}

impl Resolution {
    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    /// Differentials `d_1, ..., d_p`.
    pub fn maps(&self) -> &[ModuleMap] {
        &self.maps
    }

    pub fn length(&self) -> usize {
        self.maps.len()
    }

    /// Free module `F_i`.
    pub fn module(&self, i: usize) -> &GradedFreeModule {
        if i == 0 {
            &self.base
        } else {
            self.maps[i - 1].source()
        }
    }

    pub fn modules(&self) -> Vec<&GradedFreeModule> {
        (0..=self.length()).map(|i| self.module(i)).collect()
    }

    /// Consecutive compositions vanish.
    pub fn is_complex(&self) -> bool {
        self.maps.windows(2).all(|w| w[0].compose(&w[1]).is_zero())
    }

    pub fn is_minimal(&self) -> bool {
        self.maps.iter().all(|m| !m.has_unit_entry())
    }

    pub fn betti_table(&self) -> BettiTable {
        betti_table(self)
    }

    /// `Σ_i (−1)^i Σ_j β_{i,j} t^j`.
    pub fn euler_characteristic(&self) -> HilbertSeries {
        let weights = self.ring.weights().to_vec();
        let mut terms = Vec::new();
        for (i, f) in self.modules().iter().enumerate() {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            terms.extend(f.twists().iter().map(|&a| (a, sign)));
        }
        HilbertSeries::from_terms(terms, weights)
    }

    /// The dual complex `F_0^* → F_1^* → ...`, each map transposed.
    pub fn dual_maps(&self) -> Vec<ModuleMap> {
        self.maps.iter().map(|m| m.transpose()).collect()
    }
}

/// Minimal free resolution of `R/I`.
pub fn minimal_free_resolution(i: &Ideal) -> Result<Resolution> {
    i.require_homogeneous()?;
    let ring = i.ring();
    if i.is_unit()? {
        return Err(Error::UnitIdeal);
    }
    let opts = GbOptions { degree_cap: i.gb_degree_cap(), ..GbOptions::default() };
    let mut gens = i.minimal_generators()?;
    gens.sort_by_key(|g| g.degree());
    let base = GradedFreeModule::new(vec![0]);
    if gens.is_empty() {
        return Ok(Resolution { ring: ring.clone(), maps: Vec::new(), base });
    }
    let d1 = ModuleMap::from_generators(ring, &gens)?;
    resolve_from(ring, base, d1, &opts)
}

fn resolve_from(ring: &RingRef, base: GradedFreeModule, first: ModuleMap, opts: &GbOptions) -> Result<Resolution> {
    let mut maps = vec![first];
    loop {
        let next = syzygies_with(maps.last().unwrap(), opts)?;
        if next.source.rank() == 0 {
            break;
        }
        maps.push(next);
        if maps.len() > ring.nvars() + 1 {
            unreachable!("resolution longer than the number of variables");
        }
    }
    let mut res = Resolution { ring: ring.clone(), maps, base };
    prune(&mut res);
    Ok(res)
}

/// Minimal free resolution of `coker(pres)`.
pub fn resolve_cokernel(pres: &ModuleMap) -> Result<Resolution> {
    resolve_cokernel_with(pres, &GbOptions::default())
}

pub fn resolve_cokernel_with(pres: &ModuleMap, opts: &GbOptions) -> Result<Resolution> {
    let ring = &pres.ring;
    ring.require_graded()?;
    let d1 = minimal_presentation(pres, opts)?;
    let base = d1.target.clone();
    if d1.source.rank() == 0 {
        return Ok(Resolution { ring: ring.clone(), maps: Vec::new(), base });
    }
    resolve_from(ring, base, d1, opts)
}

/// Drops redundant columns and cancels unit entries until the presentation
/// is minimal.
pub fn minimal_presentation(pres: &ModuleMap, opts: &GbOptions) -> Result<ModuleMap> {
    let mut cur = pres.clone();
    loop {
        let vecs: Vec<Vector> = (0..cur.source.rank()).map(|j| cur.column_vector(j)).collect();
        let keep = minimal_subset(&cur.ring, &cur.target.twists, &vecs, opts)?;
        cur = cur.with_columns(&keep);
        let Some((a, b)) = unit_pivot(&cur) else {
            return Ok(cur);
        };
        cur = cancel_unit(&cur, a, b);
    }
}

/// Smallest `(row, col)` holding a nonzero constant.
fn unit_pivot(m: &ModuleMap) -> Option<(usize, usize)> {
    for (i, row) in m.matrix.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            if !e.is_zero() && e.is_constant() {
                return Some((i, j));
            }
        }
    }
    None
}

/// Schur complement at the unit entry `(a, b)`: removes target generator `a`
/// and source generator `b`.
fn cancel_unit(m: &ModuleMap, a: usize, b: usize) -> ModuleMap {
    let field = m.ring.field();
    let c = m.matrix[a][b].leading_coeff().expect("unit").clone();
    let cinv = field.inv(&c);
    let mut matrix = Vec::new();
    for (k, row) in m.matrix.iter().enumerate() {
        if k == a {
            continue;
        }
        let factor = row[b].scale(&cinv);
        let new_row = (0..m.source.rank())
            .filter(|&j| j != b)
            .map(|j| {
                if factor.is_zero() || m.matrix[a][j].is_zero() {
                    row[j].clone()
                } else {
                    row[j].sub(&factor.mul(&m.matrix[a][j]))
                }
            })
            .collect();
        matrix.push(new_row);
    }
    let drop = |tw: &[i64], x: usize| GradedFreeModule::new(tw.iter().enumerate().filter(|&(i, _)| i != x).map(|(_, &t)| t).collect());
    ModuleMap {
        ring: m.ring.clone(),
        source: drop(&m.source.twists, b),
        target: drop(&m.target.twists, a),
        matrix,
    }
}

fn drop_row(m: &ModuleMap, a: usize) -> ModuleMap {
    let mut out = m.clone();
    out.matrix.remove(a);
    out.target.twists.remove(a);
    out
}

fn drop_column(m: &ModuleMap, b: usize) -> ModuleMap {
    let mut out = m.clone();
    for row in out.matrix.iter_mut() {
        row.remove(b);
    }
    out.source.twists.remove(b);
    out
}

/// Cancels unit entries of a resolution (smallest `(i, j)` pivot first) by
/// exact row and column elimination.
pub fn prune(res: &mut Resolution) {
    let mut i = 0;
    while i < res.maps.len() {
        let Some((a, b)) = unit_pivot(&res.maps[i]) else {
            i += 1;
            continue;
        };
        res.maps[i] = cancel_unit(&res.maps[i], a, b);
        if i + 1 < res.maps.len() {
            res.maps[i + 1] = drop_row(&res.maps[i + 1], b);
        }
        if i > 0 {
            res.maps[i - 1] = drop_column(&res.maps[i - 1], a);
        } else {
            res.base.twists.remove(a);
        }
    }
    while res.maps.last().is_some_and(|m| m.source.rank() == 0) {
        res.maps.pop();
    }
}

pub fn betti_table(res: &Resolution) -> BettiTable {
    BettiTable::from_modules(res.modules().into_iter().map(|f| f.twists().to_vec()).collect())
}

/// `max (j − i)` over the table; `None` for the zero module.
pub fn regularity(bt: &BettiTable) -> Option<i64> {
    bt.regularity()
}

/// Regularity of `coker(pres)` from its minimal free resolution.
pub fn module_regularity(pres: &ModuleMap) -> Result<Option<i64>> {
    Ok(resolve_cokernel(pres)?.betti_table().regularity())
}

/// Hilbert series of `coker(pres)`.
pub fn module_hilbert_series(pres: &ModuleMap) -> Result<HilbertSeries> {
    let ring = &pres.ring;
    ring.require_graded()?;
    let weights = ring.weights().to_vec();
    let ctx = ModuleContext::free(ring, pres.target.twists.clone());
    let vecs: Vec<Vector> = (0..pres.source.rank()).map(|j| pres.column_vector(j)).collect();
    let run = engine::buchberger(&ctx, vecs, &GbOptions::default())?;
    let mut per_comp: Vec<Vec<Monomial>> = vec![Vec::new(); pres.target.rank()];
    for v in &run.basis {
        per_comp[v[0].comp].push(v[0].mono.clone());
    }
    let mut terms = Vec::new();
    for (c, lead) in per_comp.iter().enumerate() {
        let num = monomial_numerator(lead, &weights);
        let tw = pres.target.twists[c];
        terms.extend(num.into_iter().enumerate().map(|(k, v)| (k as i64 + tw, v)));
    }
    Ok(HilbertSeries::from_terms(terms, weights))
}
