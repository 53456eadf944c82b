//! Normal forms, Buchberger's algorithm and reduced Gröbner bases.

pub(crate) mod engine;

use crate::error::Result;
use crate::ideals::Ideal;
use crate::polyring::{Monomial, MonomialOrder, Polynomial, RingRef, Term};
use engine::{ModuleContext, Reducer, VTerm, Vector};

pub use engine::{GbOptions, DEFAULT_GB_DEGREE_CAP};

/// A Gröbner basis of an ideal with respect to `order`. The elements live in
/// a ring whose active order is `order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: RingRef,
    elements: Vec<Polynomial>,
    reduced: bool,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Polynomial> {
        self.elements
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The basis of the unit ideal is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.elements.iter().any(|p| p.is_unit())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        normal_form(&f.with_ring(&self.ring), &self.elements)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().filter_map(|p| p.leading_monomial().cloned()).collect()
    }
}

pub(crate) fn to_vector(p: &Polynomial) -> Vector {
    p.terms()
        .iter()
        .map(|t| VTerm { coeff: t.coeff.clone(), mono: t.monomial.clone(), comp: 0 })
        .collect()
}

pub(crate) fn from_vector(ring: &RingRef, v: Vector) -> Polynomial {
    Polynomial::from_sorted_terms(
        ring,
        v.into_iter().map(|t| Term { coeff: t.coeff, monomial: t.mono }).collect(),
    )
}

/// Fully reduces `f` against `basis` (all in one ring). The result has no
/// term divisible by a leading term of the basis and `f - result` lies in
/// the ideal generated by `basis`.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let ring = f.ring();
    let ctx = ModuleContext::ideal(ring);
    let reducers: Vec<Reducer> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| Reducer::new(to_vector(&g.with_ring(ring))))
        .collect();
    let red = engine::reduce(&ctx, to_vector(f), &reducers, true);
    let field = ring.field();
    let mut out = red.result;
    if !field.is_one(&red.scale) {
        let inv = field.inv(&red.scale);
        ctx.scale(&mut out, &inv);
    }
    from_vector(ring, out)
}

fn ring_for(gens: &[Polynomial], order: MonomialOrder) -> Option<RingRef> {
    let ring = gens.first()?.ring();
    if ring.order() == order {
        Some(ring.clone())
    } else {
        Some(ring.with_order(order).expect("order fits the ring"))
    }
}

/// Gröbner basis of the ideal generated by `gens` (not interreduced).
pub fn buchberger(gens: &[Polynomial], order: MonomialOrder) -> Result<GroebnerBasis> {
    buchberger_with(gens, order, &GbOptions::default())
}

pub fn buchberger_with(gens: &[Polynomial], order: MonomialOrder, opts: &GbOptions) -> Result<GroebnerBasis> {
    let Some(ring) = ring_for(gens, order) else {
        return Err(crate::Error::InvalidArgument(
            "an empty generator list has no ring; use GroebnerBasis::empty".into(),
        ));
    };
    buchberger_in(&ring, gens, opts)
}

/// Runs Buchberger in `ring` (whose order is used).
pub fn buchberger_in(ring: &RingRef, gens: &[Polynomial], opts: &GbOptions) -> Result<GroebnerBasis> {
    let ctx = ModuleContext::ideal(ring);
    let inputs: Vec<Vector> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| to_vector(&g.with_ring(ring)))
        .collect();
    let run = engine::buchberger(&ctx, inputs, opts)?;
    let mut elements: Vec<Polynomial> = run.basis.into_iter().map(|v| from_vector(ring, v)).collect();
    elements.sort_by(|a, b| ring.compare(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
    Ok(GroebnerBasis { ring: ring.clone(), elements, reduced: false })
}

impl GroebnerBasis {
    pub(crate) fn from_reduced(ring: &RingRef, elements: Vec<Polynomial>) -> Self {
        GroebnerBasis { ring: ring.clone(), elements, reduced: true }
    }

    /// Basis of the zero ideal.
    pub fn empty(ring: &RingRef) -> Self {
        GroebnerBasis { ring: ring.clone(), elements: Vec::new(), reduced: true }
    }
}

/// The unique reduced Gröbner basis of the ideal spanned by `gb`. Elements
/// that do not yet form a basis are completed first.
pub fn reduce_basis(gb: &GroebnerBasis) -> GroebnerBasis {
    if gb.reduced {
        return gb.clone();
    }
    let ring = &gb.ring;
    let ctx = ModuleContext::ideal(ring);
    let vecs = gb.elements.iter().map(to_vector).collect();
    let vecs = match engine::buchberger(&ctx, vecs, &GbOptions { degree_cap: u32::MAX, ..GbOptions::default() }) {
        Ok(run) => run.basis,
        Err(_) => unreachable!("no degree cap"),
    };
    let elements = engine::interreduce(&ctx, vecs).into_iter().map(|v| from_vector(ring, v)).collect();
    GroebnerBasis { ring: ring.clone(), elements, reduced: true }
}

/// Reduced Gröbner basis of `gens` in `ring`'s order.
pub fn reduced_groebner_basis(ring: &RingRef, gens: &[Polynomial], opts: &GbOptions) -> Result<GroebnerBasis> {
    let gb = buchberger_in(ring, gens, opts)?;
    Ok(reduce_basis(&gb))
}

/// The monomial ideal generated by the leading terms of `gb`.
pub fn leading_term_ideal(gb: &GroebnerBasis) -> Ideal {
    let ring = &gb.ring;
    let field = ring.field();
    let gens = gb
        .elements
        .iter()
        .filter_map(|p| p.leading_monomial())
        .map(|m| Polynomial::term(ring, field.one(), m.clone()))
        .collect();
    Ideal::new(ring, gens)
}

/// Every S-polynomial of the basis reduces to zero.
pub fn satisfies_buchberger_criterion(gb: &GroebnerBasis) -> bool {
    let els = &gb.elements;
    for i in 0..els.len() {
        for j in i + 1..els.len() {
            let (f, g) = (&els[i], &els[j]);
            let (lf, lg) = (f.leading_term().unwrap(), g.leading_term().unwrap());
            let lcm = lf.monomial.lcm(&lg.monomial);
            let field = gb.ring.field();
            let s = f
                .mul_term(&field.inv(&lf.coeff), &lcm.div(&lf.monomial))
                .sub(&g.mul_term(&field.inv(&lg.coeff), &lcm.div(&lg.monomial)));
            if !normal_form(&s, els).is_zero() {
                return false;
            }
        }
    }
    true
}
