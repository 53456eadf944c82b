//! Buchberger's algorithm over submodules of a free module `R^m`.
//!
//! Ideals are the rank-one case. Terms carry a component index; the module
//! order compares, in turn: the component block (lower block wins), the
//! twisted degree `deg(m) + twist[c]` when the ring order is degree
//! compatible, the ring order on monomials, and finally the component
//! (lower index wins).
//!
//! Input generators are queued alongside S-pairs, keyed by degree, with
//! pairs of a degree handled before inputs of that degree. For homogeneous
//! input under a degree compatible order this makes the inputs that survive
//! reduction a minimal generating set of the submodule.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::polyring::{Coeff, CoefficientField, Monomial, RingRef};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct VTerm {
    pub coeff: Coeff,
    pub mono: Monomial,
    pub comp: usize,
}

pub(crate) type Vector = Vec<VTerm>;

/// Default cap on the degree of S-pairs and inputs.
pub const DEFAULT_GB_DEGREE_CAP: u32 = 40;

#[derive(Clone, Debug)]
pub(crate) struct ModuleContext {
    pub ring: RingRef,
    pub twists: Vec<i64>,
    pub blocks: Vec<u32>,
    degree_compatible: bool,
}

impl ModuleContext {
    pub fn new(ring: &RingRef, twists: Vec<i64>, blocks: Vec<u32>) -> Self {
        assert_eq!(twists.len(), blocks.len());
        ModuleContext {
            degree_compatible: ring.order().is_degree_compatible(),
            ring: ring.clone(),
            twists,
            blocks,
        }
    }

    /// The rank-one context of an ideal.
    pub fn ideal(ring: &RingRef) -> Self {
        Self::new(ring, vec![0], vec![0])
    }

    /// Free module with the given twists and a single block.
    pub fn free(ring: &RingRef, twists: Vec<i64>) -> Self {
        let blocks = vec![0; twists.len()];
        Self::new(ring, twists, blocks)
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn field(&self) -> &CoefficientField {
        self.ring.field()
    }

    pub fn term_degree(&self, m: &Monomial, comp: usize) -> i64 {
        self.ring.monomial_degree(m) as i64 + self.twists[comp]
    }

    pub fn compare(&self, a: (&Monomial, usize), b: (&Monomial, usize)) -> Ordering {
        let (ma, ca) = a;
        let (mb, cb) = b;
        match self.blocks[cb].cmp(&self.blocks[ca]) {
            Ordering::Equal => {}
            o => return o,
        }
        if self.degree_compatible {
            match self.term_degree(ma, ca).cmp(&self.term_degree(mb, cb)) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        self.ring.compare(ma, mb).then_with(|| cb.cmp(&ca))
    }

    fn cmp_terms(&self, a: &VTerm, b: &VTerm) -> Ordering {
        self.compare((&a.mono, a.comp), (&b.mono, b.comp))
    }

    /// Sorts and merges an arbitrary term list into canonical form.
    pub fn normalize(&self, mut terms: Vec<VTerm>) -> Vector {
        let field = self.field();
        terms.sort_by(|a, b| self.cmp_terms(b, a));
        let mut out: Vector = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.mono == t.mono && last.comp == t.comp => {
                    last.coeff = field.add(&last.coeff, &t.coeff);
                }
                _ => out.push(t),
            }
        }
        out.retain(|t| !field.is_zero(&t.coeff));
        out
    }

    /// `u * f - v * m * g`.
    pub fn combine(&self, f: &[VTerm], u: &Coeff, v: &Coeff, m: &Monomial, g: &[VTerm]) -> Vector {
        let field = self.field();
        let u_is_one = field.is_one(u);
        let mut out = Vec::with_capacity(f.len() + g.len());
        let scaled_f = |t: &VTerm| VTerm {
            coeff: if u_is_one { t.coeff.clone() } else { field.mul(&t.coeff, u) },
            mono: t.mono.clone(),
            comp: t.comp,
        };
        let neg_v = field.neg(v);
        let shifted_g = |t: &VTerm| VTerm { coeff: field.mul(&t.coeff, &neg_v), mono: t.mono.mul(m), comp: t.comp };
        let (mut i, mut j) = (0, 0);
        let mut gj = g.first().map(shifted_g);
        while i < f.len() {
            let Some(gt) = gj.as_ref() else { break };
            match self.cmp_terms(&f[i], gt) {
                Ordering::Greater => {
                    out.push(scaled_f(&f[i]));
                    i += 1;
                }
                Ordering::Less => {
                    out.push(gj.take().unwrap());
                    j += 1;
                    gj = g.get(j).map(shifted_g);
                }
                Ordering::Equal => {
                    let a = scaled_f(&f[i]);
                    let c = field.add(&a.coeff, &gt.coeff);
                    if !field.is_zero(&c) {
                        out.push(VTerm { coeff: c, mono: a.mono, comp: a.comp });
                    }
                    i += 1;
                    j += 1;
                    gj = g.get(j).map(shifted_g);
                }
            }
        }
        out.extend(f[i..].iter().map(scaled_f));
        if let Some(gt) = gj {
            out.push(gt);
            out.extend(g[j + 1..].iter().map(shifted_g));
        }
        out
    }

    /// Scales a vector so its coefficients are primitive.
    pub fn make_primitive(&self, v: &mut Vector) {
        let field = self.field();
        let coeffs: Vec<&Coeff> = v.iter().map(|t| &t.coeff).collect();
        let s = field.primitive_factor(&coeffs);
        if !field.is_one(&s) {
            for t in v.iter_mut() {
                t.coeff = field.mul(&t.coeff, &s);
            }
        }
    }

    pub fn make_monic(&self, v: &mut Vector) {
        let field = self.field();
        if let Some(lc) = v.first().map(|t| t.coeff.clone()) {
            if !field.is_one(&lc) {
                let inv = field.inv(&lc);
                for t in v.iter_mut() {
                    t.coeff = field.mul(&t.coeff, &inv);
                }
            }
        }
    }

    pub fn scale(&self, v: &mut Vector, c: &Coeff) {
        let field = self.field();
        for t in v.iter_mut() {
            t.coeff = field.mul(&t.coeff, c);
        }
    }

    /// Homogeneous degree of a nonzero vector, if it has one.
    pub fn homogeneous_degree(&self, v: &[VTerm]) -> Option<i64> {
        let d = self.term_degree(&v.first()?.mono, v[0].comp);
        v.iter().all(|t| self.term_degree(&t.mono, t.comp) == d).then_some(d)
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Reducer {
    pub vector: Vector,
    mask: u64,
}

impl Reducer {
    pub fn new(vector: Vector) -> Self {
        let mask = vector.first().map(|t| t.mono.support_mask()).unwrap_or(0);
        Reducer { vector, mask }
    }

    fn lead(&self) -> &VTerm {
        &self.vector[0]
    }

    fn divides(&self, t: &VTerm, t_mask: u64) -> bool {
        let l = self.lead();
        l.comp == t.comp && self.mask & !t_mask == 0 && l.mono.divides(&t.mono)
    }
}

/// Outcome of a reduction: `result = scale * f - (element of the submodule)`.
pub(crate) struct Reduced {
    pub result: Vector,
    pub scale: Coeff,
}

/// Reduces `f` by `basis`. With `full` every term is reduced, otherwise only
/// the leading term is (repeatedly) eliminated.
pub(crate) fn reduce(ctx: &ModuleContext, f: Vector, basis: &[Reducer], full: bool) -> Reduced {
    let field = ctx.field();
    let mut f = f;
    let mut scale = field.one();
    let mut pos = 0;
    let mut steps = 0usize;
    while pos < f.len() {
        let t = &f[pos];
        let mask = t.mono.support_mask();
        match basis.iter().find(|g| g.divides(t, mask)) {
            Some(g) => {
                let lead = g.lead();
                let (u, v) = field.elimination_factors(&t.coeff, &lead.coeff);
                let m = t.mono.div(&lead.mono);
                if !field.is_one(&u) {
                    scale = field.mul(&scale, &u);
                }
                f = ctx.combine(&f, &u, &v, &m, &g.vector);
                steps += 1;
                if field.is_rational() && steps.is_multiple_of(24) {
                    // keep integer coefficient growth in check during long reductions
                    let coeffs: Vec<&Coeff> = f.iter().map(|t| &t.coeff).collect();
                    let s = field.primitive_factor(&coeffs);
                    if !field.is_one(&s) {
                        ctx.scale(&mut f, &s);
                        scale = field.mul(&scale, &s);
                    }
                }
            }
            None if full => pos += 1,
            None => break,
        }
    }
    Reduced { result: f, scale }
}

#[derive(Clone, Debug)]
struct Item {
    degree: i64,
    /// 0 for S-pairs, 1 for input generators.
    kind: u8,
    a: usize,
    b: usize,
    lcm: Monomial,
    comp: usize,
}

#[derive(Clone, Debug)]
pub struct GbOptions {
    pub degree_cap: u32,
    /// Fully reduce new elements (otherwise only top-reduce).
    pub full_reduction: bool,
}

impl Default for GbOptions {
    fn default() -> Self {
        GbOptions { degree_cap: DEFAULT_GB_DEGREE_CAP, full_reduction: true }
    }
}

pub(crate) struct GbRun {
    /// A Gröbner basis (redundant elements removed, not interreduced).
    pub basis: Vec<Vector>,
    /// Indices of inputs that did not reduce to zero when processed.
    pub survivors: Vec<usize>,
}

struct Element {
    reducer: Reducer,
    redundant: bool,
}

pub(crate) fn buchberger(ctx: &ModuleContext, inputs: Vec<Vector>, opts: &GbOptions) -> Result<GbRun> {
    let rank_one = ctx.rank() == 1;
    let mut items: Vec<Item> = Vec::new();
    let inputs: Vec<Vector> = inputs;
    for (i, v) in inputs.iter().enumerate() {
        if let Some(l) = v.first() {
            items.push(Item {
                degree: ctx.term_degree(&l.mono, l.comp),
                kind: 1,
                a: i,
                b: i,
                lcm: l.mono.clone(),
                comp: l.comp,
            });
        }
    }
    let mut elems: Vec<Element> = Vec::new();
    let mut survivors = Vec::new();
    let mut reducers: Vec<Reducer> = Vec::new();

    while !items.is_empty() {
        let best = (0..items.len())
            .min_by(|&x, &y| {
                let (p, q) = (&items[x], &items[y]);
                p.degree
                    .cmp(&q.degree)
                    .then(p.kind.cmp(&q.kind))
                    .then_with(|| ctx.compare((&p.lcm, p.comp), (&q.lcm, q.comp)))
                    .then(p.a.cmp(&q.a))
                    .then(p.b.cmp(&q.b))
            })
            .expect("nonempty");
        let item = items.swap_remove(best);
        if ctx.ring.monomial_degree(&item.lcm) > opts.degree_cap {
            return Err(Error::DegreeCapExceeded { cap: opts.degree_cap });
        }
        let poly = if item.kind == 1 {
            let mut v = inputs[item.a].clone();
            ctx.make_primitive(&mut v);
            v
        } else {
            spoly(ctx, &elems[item.a].reducer.vector, &elems[item.b].reducer.vector, &item.lcm)
        };
        let mut red = reduce(ctx, poly, &reducers, opts.full_reduction).result;
        if red.is_empty() {
            continue;
        }
        if item.kind == 1 {
            survivors.push(item.a);
        }
        ctx.make_primitive(&mut red);
        let h = elems.len();
        let reducer = Reducer::new(red);
        reducers.push(reducer.clone());
        elems.push(Element { reducer, redundant: false });
        update_pairs(ctx, &mut items, &mut elems, h, rank_one);
    }

    let basis = elems
        .into_iter()
        .filter(|e| !e.redundant)
        .map(|e| e.reducer.vector)
        .collect();
    Ok(GbRun { basis, survivors })
}

fn spoly(ctx: &ModuleContext, f: &[VTerm], g: &[VTerm], lcm: &Monomial) -> Vector {
    let field = ctx.field();
    let (u, v) = field.elimination_factors(&f[0].coeff, &g[0].coeff);
    // u * lc(f) == v * lc(g)  =>  u * (lcm/lf) * f - v * (lcm/lg) * g
    let mf = lcm.div(&f[0].mono);
    let mg = lcm.div(&g[0].mono);
    let fm: Vector = f
        .iter()
        .map(|t| VTerm { coeff: field.mul(&t.coeff, &u), mono: t.mono.mul(&mf), comp: t.comp })
        .collect();
    let mut out = ctx.combine(&fm, &field.one(), &v, &mg, g);
    // the leading terms cancel by construction
    debug_assert!(out.first().is_none_or(|t| !(t.mono == *lcm && t.comp == f[0].comp)));
    out.shrink_to_fit();
    out
}

fn update_pairs(ctx: &ModuleContext, items: &mut Vec<Item>, elems: &mut [Element], h: usize, rank_one: bool) {
    let hl = elems[h].reducer.vector[0].mono.clone();
    let hc = elems[h].reducer.vector[0].comp;

    struct Cand {
        g: usize,
        lcm: Monomial,
        coprime: bool,
    }
    let mut cands: Vec<Cand> = Vec::new();
    for (g, e) in elems.iter().enumerate().take(h) {
        if e.redundant {
            continue;
        }
        let gl = &e.reducer.vector[0];
        if gl.comp != hc {
            continue;
        }
        cands.push(Cand { g, lcm: gl.mono.lcm(&hl), coprime: rank_one && gl.mono.is_coprime(&hl) });
    }

    // Gebauer-Möller: drop new pairs whose lcm is a proper multiple of
    // another new pair's lcm (one representative per equal lcm survives).
    let mut kept: Vec<Cand> = Vec::new();
    let mut rest = cands;
    rest.reverse();
    while let Some(p) = rest.pop() {
        let dominated = |q: &Cand| q.lcm.divides(&p.lcm);
        if p.coprime || (!rest.iter().any(dominated) && !kept.iter().any(dominated)) {
            kept.push(p);
        }
    }

    // Old pairs (a, b) whose lcm is divisible by lt(h) with distinct lcms.
    items.retain(|it| {
        if it.kind != 0 || it.comp != hc || !hl.divides(&it.lcm) {
            return true;
        }
        let la = elems[it.a].reducer.vector[0].mono.lcm(&hl);
        let lb = elems[it.b].reducer.vector[0].mono.lcm(&hl);
        la == it.lcm || lb == it.lcm
    });

    for c in kept {
        if c.coprime {
            continue;
        }
        items.push(Item {
            degree: ctx.term_degree(&c.lcm, hc),
            kind: 0,
            a: c.g,
            b: h,
            lcm: c.lcm,
            comp: hc,
        });
    }

    for e in elems.iter_mut().take(h) {
        let gl = &e.reducer.vector[0];
        if gl.comp == hc && hl.divides(&gl.mono) {
            e.redundant = true;
        }
    }
}

/// Interreduces a Gröbner basis into the reduced one (monic, sorted by
/// leading term, descending).
pub(crate) fn interreduce(ctx: &ModuleContext, basis: Vec<Vector>) -> Vec<Vector> {
    let mut basis: Vec<Vector> = basis.into_iter().filter(|v| !v.is_empty()).collect();
    basis.sort_by(|a, b| ctx.cmp_terms(&a[0], &b[0]));
    // minimal: drop elements whose leading term is divisible by another one
    let mut minimal: Vec<Vector> = Vec::new();
    for v in basis {
        let l = &v[0];
        if minimal.iter().any(|w| w[0].comp == l.comp && w[0].mono.divides(&l.mono)) {
            continue;
        }
        minimal.push(v);
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Reducer> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, w)| Reducer::new(w.clone()))
            .collect();
        let mut v = minimal[i].clone();
        let head = v.remove(0);
        let tail = reduce(ctx, v, &others, true);
        let mut head = head;
        head.coeff = ctx.field().mul(&head.coeff, &tail.scale);
        let mut w = vec![head];
        w.extend(tail.result);
        ctx.make_monic(&mut w);
        out.push(w);
    }
    out.sort_by(|a, b| ctx.cmp_terms(&b[0], &a[0]));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{parse_polynomial, CoefficientField, Ring};

    fn vec_of(ctx: &ModuleContext, text: &str) -> Vector {
        let p = parse_polynomial(text, &ctx.ring).unwrap();
        p.terms()
            .iter()
            .map(|t| VTerm { coeff: t.coeff.clone(), mono: t.monomial.clone(), comp: 0 })
            .collect()
    }

    #[test]
    fn combine_cancels_leading_term() {
        let r = Ring::graded(CoefficientField::Rational, &["x", "y"]).unwrap();
        let ctx = ModuleContext::ideal(&r);
        let f = vec_of(&ctx, "x*y + y^2");
        let g = vec_of(&ctx, "x");
        let out = reduce(&ctx, f, &[Reducer::new(g)], true);
        assert_eq!(out.result, vec_of(&ctx, "y^2"));
    }

    #[test]
    fn module_order_prefers_lower_block() {
        let r = Ring::graded(CoefficientField::Rational, &["x", "y"]).unwrap();
        let ctx = ModuleContext::new(&r, vec![0, 5], vec![0, 1]);
        let one = Monomial::one(2);
        let big = Monomial::from_exponents(&[3, 3]);
        assert_eq!(ctx.compare((&one, 0), (&big, 1)), Ordering::Greater);
    }

    #[test]
    fn surviving_inputs_are_minimal_generators() {
        let r = Ring::graded(CoefficientField::Rational, &["x", "y"]).unwrap();
        let ctx = ModuleContext::ideal(&r);
        let inputs = vec![vec_of(&ctx, "x^2"), vec_of(&ctx, "x"), vec_of(&ctx, "x*y"), vec_of(&ctx, "y^3")];
        let run = buchberger(&ctx, inputs, &GbOptions::default()).unwrap();
        let mut s = run.survivors.clone();
        s.sort();
        assert_eq!(s, vec![1, 3]);
    }
}
