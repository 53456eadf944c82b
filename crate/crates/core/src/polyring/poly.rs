//! Sparse multivariate polynomials in canonical form.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use super::field::Coeff;
use super::monomial::Monomial;
use super::ring::RingRef;
#[cfg(test)]
use super::ring::Ring;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Coeff,
    pub monomial: Monomial,
}

/// A polynomial whose terms are nonzero, pairwise distinct and strictly
/// descending in the ring's order.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: RingRef,
    terms: Vec<Term>,
}

/// Result of a homogeneity test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    /// The zero polynomial: homogeneous of every degree.
    Zero,
    Degree(u32),
    Inhomogeneous,
}

impl Homogeneity {
    pub fn is_homogeneous(&self) -> bool {
        !matches!(self, Homogeneity::Inhomogeneous)
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl Polynomial {
    pub fn zero(ring: &RingRef) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &RingRef) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &RingRef, c: Coeff) -> Self {
        Self::term(ring, c, Monomial::one(ring.nvars()))
    }

    pub fn from_i64(ring: &RingRef, v: i64) -> Self {
        Self::constant(ring, ring.field().from_i64(v))
    }

    pub fn variable(ring: &RingRef, index: usize) -> Self {
        Self::term(ring, ring.field().one(), Monomial::variable(ring.nvars(), index))
    }

    pub fn term(ring: &RingRef, coeff: Coeff, monomial: Monomial) -> Self {
        assert_eq!(monomial.nvars(), ring.nvars(), "monomial arity mismatch");
        if ring.field().is_zero(&coeff) {
            return Self::zero(ring);
        }
        Polynomial { ring: ring.clone(), terms: vec![Term { coeff, monomial }] }
    }

    /// Builds the canonical form of an arbitrary term list.
    pub fn from_terms(ring: &RingRef, mut terms: Vec<(Coeff, Monomial)>) -> Self {
        let field = ring.field();
        terms.sort_by(|a, b| ring.compare(&b.1, &a.1));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            assert_eq!(m.nvars(), ring.nvars(), "monomial arity mismatch");
            match out.last_mut() {
                Some(last) if last.monomial == m => last.coeff = field.add(&last.coeff, &c),
                _ => out.push(Term { coeff: c, monomial: m }),
            }
        }
        out.retain(|t| !field.is_zero(&t.coeff));
        Polynomial { ring: ring.clone(), terms: out }
    }

    /// Wraps terms that are already canonical.
    pub(crate) fn from_sorted_terms(ring: &RingRef, terms: Vec<Term>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.compare(&w[0].monomial, &w[1].monomial) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !ring.field().is_zero(&t.coeff)));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.monomial.is_one())
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        !self.is_zero() && self.is_constant()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.monomial)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// Maximum weighted degree of a term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| self.ring.monomial_degree(&t.monomial)).max()
    }

    pub fn homogeneity(&self) -> Result<Homogeneity> {
        self.ring.require_graded()?;
        let mut degs = self.terms.iter().map(|t| self.ring.monomial_degree(&t.monomial));
        let Some(d) = degs.next() else {
            return Ok(Homogeneity::Zero);
        };
        if degs.all(|e| e == d) {
            Ok(Homogeneity::Degree(d))
        } else {
            Ok(Homogeneity::Inhomogeneous)
        }
    }

    pub fn is_homogeneous(&self) -> Result<bool> {
        Ok(self.homogeneity()?.is_homogeneous())
    }

    fn check_ring(&self, other: &Polynomial) {
        assert!(
            Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring,
            "polynomials from different rings"
        );
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.check_ring(other);
        let field = self.ring.field();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match self.ring.compare(&a[i].monomial, &b[j].monomial) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.add(&a[i].coeff, &b[j].coeff);
                    if !field.is_zero(&c) {
                        out.push(Term { coeff: c, monomial: a[i].monomial.clone() });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn neg(&self) -> Polynomial {
        let field = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term { coeff: field.neg(&t.coeff), monomial: t.monomial.clone() })
                .collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        let field = self.ring.field();
        if field.is_zero(c) {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term { coeff: field.mul(&t.coeff, c), monomial: t.monomial.clone() })
                .collect(),
        }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, c: &Coeff, m: &Monomial) -> Polynomial {
        let field = self.ring.field();
        if field.is_zero(c) {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term { coeff: field.mul(&t.coeff, c), monomial: t.monomial.mul(m) })
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.check_ring(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ring);
        }
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut acc = Self::zero(&self.ring);
        for t in &small.terms {
            acc = acc.add(&large.mul_term(&t.coeff, &t.monomial));
        }
        acc
    }

    /// Product with a check against the ring's degree cap.
    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        let cap = self.ring.degree_cap();
        if let (Some(a), Some(b)) = (self.degree(), other.degree()) {
            if a + b > cap {
                return Err(Error::DegreeCapExceeded { cap });
            }
        }
        Ok(self.mul(other))
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => self.scale(&self.ring.field().inv(lc)),
        }
    }

    /// Removes the content (integral primitive form over QQ, monic over GF(p)).
    pub fn primitive(&self) -> Polynomial {
        let coeffs: Vec<&Coeff> = self.terms.iter().map(|t| &t.coeff).collect();
        let s = self.ring.field().primitive_factor(&coeffs);
        if self.ring.field().is_one(&s) {
            self.clone()
        } else {
            self.scale(&s)
        }
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        self.check_ring(divisor);
        let lead = divisor.leading_term()?;
        let field = self.ring.field();
        let mut rest = self.clone();
        let mut quotient = Vec::new();
        while let Some(t) = rest.leading_term() {
            if !lead.monomial.divides(&t.monomial) {
                return None;
            }
            let c = field.div(&t.coeff, &lead.coeff);
            let m = t.monomial.div(&lead.monomial);
            rest = rest.sub(&divisor.mul_term(&c, &m));
            quotient.push(Term { coeff: c, monomial: m });
        }
        Some(Polynomial::from_sorted_terms(&self.ring, quotient))
    }

    /// Re-expresses the polynomial in `target`; variable `i` of the current
    /// ring becomes variable `positions[i]` of `target`.
    pub fn map_variables(&self, target: &RingRef, positions: &[usize]) -> Polynomial {
        assert_eq!(positions.len(), self.ring.nvars());
        assert_eq!(self.ring.field(), target.field());
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut m = Monomial::one(n);
                for (i, &e) in t.monomial.exponents().iter().enumerate() {
                    m.exponents_mut()[positions[i]] += e;
                }
                (t.coeff.clone(), m)
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }

    /// Same variables, possibly different order: re-sorts the terms.
    pub fn with_ring(&self, target: &RingRef) -> Polynomial {
        assert!(self.ring.same_variables(target), "rings have different variables");
        if Arc::ptr_eq(&self.ring, target) {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| target.compare(&b.monomial, &a.monomial));
        Polynomial { ring: target.clone(), terms }
    }

    /// True iff the polynomial only involves variables with `keep[i]`.
    pub fn uses_only(&self, keep: &[bool]) -> bool {
        self.terms.iter().all(|t| {
            t.monomial.exponents().iter().zip(keep).all(|(&e, &k)| k || e == 0)
        })
    }

    /// Evaluates the polynomial by substituting `values[i]` for variable `i`.
    pub fn substitute(&self, values: &[Polynomial]) -> Polynomial {
        assert_eq!(values.len(), self.ring.nvars());
        let target = values.first().map(|p| p.ring.clone()).unwrap_or_else(|| self.ring.clone());
        let mut acc = Polynomial::zero(&target);
        for t in &self.terms {
            let mut term = Polynomial::constant(&target, t.coeff.clone());
            for (i, &e) in t.monomial.exponents().iter().enumerate() {
                if e > 0 {
                    term = term.mul(&values[i].pow(e as u32));
                }
            }
            acc = acc.add(&term);
        }
        acc
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial, names: &[String]) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "{}", names[i])?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.ring.field();
        for (k, t) in self.terms.iter().enumerate() {
            let (negative, abs) = field.sign_split(&t.coeff);
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if t.monomial.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !field.is_one(&abs) {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, &t.monomial, self.ring.names())?;
            }
        }
        Ok(())
    }
}
