//! Buchberger's algorithm, normal forms and the graded invariants built on
//! top of a Gröbner basis.

mod hilbert;
mod mingens;
mod saturation;

pub use hilbert::{dimension_degree, hilbert_function, hilbert_numerator, standard_monomials, HilbertData};
pub use mingens::{
    graded_piece_dimension, graded_piece_span, is_minimal_generator, is_part_of_minimal_generators,
    minimal_generator_counts, minimal_generators,
};
pub use saturation::{ideal_quotient, ideal_quotient_saturation, intersect, saturate_irrelevant};

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::poly::Polynomial;
use crate::ring::{Monomial, MonomialOrder, Ring};

/// A reduced, monic Gröbner basis, sorted by increasing leading monomial.
#[derive(Clone)]
pub struct GroebnerBasis<K> {
    ring: Ring,
    elements: Vec<Polynomial<K>>,
}

impl<K: Coeff> PartialEq for GroebnerBasis<K> {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.elements == other.elements
    }
}

impl<K: Coeff> Eq for GroebnerBasis<K> {}

impl<K: Coeff> std::fmt::Debug for GroebnerBasis<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.elements.iter()).finish()
    }
}

impl<K: Coeff> GroebnerBasis<K> {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn elements(&self) -> &[Polynomial<K>] {
        &self.elements
    }

    pub fn is_reduced(&self) -> bool {
        true
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|g| *g.leading_monomial().expect("nonzero")).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.elements.iter().any(|g| g.is_constant())
    }

    /// Remainder of full division by the basis.
    pub fn normal_form(&self, p: &Polynomial<K>) -> Result<Polynomial<K>> {
        if p.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        Ok(reduce_full(p, &self.elements))
    }

    /// `p = sum_i q_i g_i + r` with `r` the normal form.
    pub fn divide(&self, p: &Polynomial<K>) -> Result<(Vec<Polynomial<K>>, Polynomial<K>)> {
        if p.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        let mut quotients = vec![Vec::new(); self.elements.len()];
        let mut rem = Vec::new();
        let mut work = p.clone();
        while let Some((m, c)) = work.leading_term().cloned() {
            match self
                .elements
                .iter()
                .position(|g| g.leading_monomial().is_some_and(|l| l.divides(&m)))
            {
                Some(i) => {
                    let g = &self.elements[i];
                    let (lm, lc) = g.leading_term().expect("nonzero");
                    let q = c.div(lc).expect("nonzero leading coefficient");
                    let u = lm.quotient(&m);
                    work.add_scaled_unchecked(&q.neg(), &u, g);
                    quotients[i].push((u, q));
                }
                None => {
                    rem.push((m, c));
                    work = Polynomial::from_sorted_terms(&self.ring, work.into_terms().split_off(1));
                }
            }
        }
        let qs = quotients.into_iter().map(|t| Polynomial::from_terms(&self.ring, t)).collect();
        Ok((qs, Polynomial::from_sorted_terms(&self.ring, rem)))
    }

    pub fn contains(&self, p: &Polynomial<K>) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }
}

/// Full reduction of `p` by `divisors` (any order of divisors is valid).
pub(crate) fn reduce_full<K: Coeff>(p: &Polynomial<K>, divisors: &[Polynomial<K>]) -> Polynomial<K> {
    let ring = p.ring().clone();
    let mut rem: Vec<(Monomial, K)> = Vec::new();
    let mut work = p.clone();
    while let Some((m, c)) = work.leading_term().cloned() {
        match divisors
            .iter()
            .find(|g| g.leading_monomial().is_some_and(|l| l.divides(&m)))
        {
            Some(g) => {
                let (lm, lc) = g.leading_term().expect("nonzero");
                let q = c.div(lc).expect("nonzero leading coefficient");
                work.add_scaled_unchecked(&q.neg(), &lm.quotient(&m), g);
            }
            None => {
                rem.push((m, c));
                let mut terms = work.into_terms();
                terms.remove(0);
                work = Polynomial::from_sorted_terms(&ring, terms);
            }
        }
    }
    Polynomial::from_sorted_terms(&ring, rem)
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct Engine<'a, K> {
    ring: &'a Ring,
    basis: Vec<Polynomial<K>>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl<K: Coeff> Engine<'_, K> {
    fn lm(&self, i: usize) -> &Monomial {
        self.basis[i].leading_monomial().expect("basis elements are nonzero")
    }

    fn active_elements(&self) -> Vec<Polynomial<K>> {
        self.basis
            .iter()
            .zip(&self.active)
            .filter(|(_, a)| **a)
            .map(|(g, _)| g.clone())
            .collect()
    }

    /// Gebauer–Möller installation of a new (reduced, monic) element.
    fn update(&mut self, h: Polynomial<K>) {
        let hi = self.basis.len();
        let h_lm = *h.leading_monomial().expect("nonzero");
        self.basis.push(h);
        self.active.push(false);

        let candidates: Vec<(usize, Monomial, bool)> = (0..hi)
            .filter(|&g| self.active[g])
            .map(|g| {
                let lm = self.lm(g);
                (g, self.ring.lcm(lm, &h_lm), lm.is_coprime(&h_lm))
            })
            .collect();
        let mut kept: Vec<usize> = Vec::new();
        for k in 0..candidates.len() {
            let (_, l1, coprime) = &candidates[k];
            let dominated = !coprime
                && (candidates[k + 1..].iter().any(|(_, l2, _)| l2.divides(l1))
                    || kept.iter().any(|&d| candidates[d].1.divides(l1)));
            if !dominated {
                kept.push(k);
            }
        }
        let ring = self.ring;
        let basis = &self.basis;
        self.pairs.retain(|p| {
            let li = basis[p.i].leading_monomial().unwrap();
            let lj = basis[p.j].leading_monomial().unwrap();
            !(h_lm.divides(&p.lcm) && ring.lcm(li, &h_lm) != p.lcm && ring.lcm(lj, &h_lm) != p.lcm)
        });
        for k in kept {
            let (g, lcm, coprime) = candidates[k];
            if !coprime {
                self.pairs.push(Pair { i: g, j: hi, lcm });
            }
        }
        for g in 0..hi {
            if self.active[g] && h_lm.divides(self.lm(g)) {
                self.active[g] = false;
            }
        }
        self.active[hi] = true;
    }

    fn next_pair(&mut self) -> Option<Pair> {
        let ring = self.ring;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.lcm
                    .degree()
                    .cmp(&b.lcm.degree())
                    .then_with(|| ring.cmp(&a.lcm, &b.lcm))
                    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            })
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }

    fn s_polynomial(&self, p: &Pair) -> Polynomial<K> {
        let (a, b) = (&self.basis[p.i], &self.basis[p.j]);
        let ua = a.leading_monomial().unwrap().quotient(&p.lcm);
        let ub = b.leading_monomial().unwrap().quotient(&p.lcm);
        // both monic
        let mut s = a.mul_monomial(&ua);
        s.add_scaled_unchecked(&K::one(self.ring.field()).neg(), &ub, b);
        s
    }
}

/// Reduced Gröbner basis of the ideal generated by `generators` in the
/// ring's monomial order. Works for inhomogeneous input too (used by
/// elimination).
pub fn buchberger<K: Coeff>(ring: &Ring, generators: &[Polynomial<K>]) -> GroebnerBasis<K> {
    let mut engine = Engine {
        ring,
        basis: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    let mut input: Vec<Polynomial<K>> = generators.iter().filter(|g| !g.is_zero()).cloned().collect();
    input.sort_by(|a, b| {
        let (la, lb) = (a.leading_monomial().unwrap(), b.leading_monomial().unwrap());
        la.degree().cmp(&lb.degree()).then_with(|| ring.cmp(la, lb))
    });
    for g in input {
        let r = reduce_full(&g, &engine.active_elements());
        if !r.is_zero() {
            engine.update(r.monic());
        }
    }
    while let Some(pair) = engine.next_pair() {
        let s = engine.s_polynomial(&pair);
        let r = reduce_full(&s, &engine.active_elements());
        if !r.is_zero() {
            engine.update(r.monic());
        }
    }
    let minimal = engine.active_elements();
    if minimal.iter().any(|g| g.is_constant()) {
        return GroebnerBasis {
            ring: ring.clone(),
            elements: vec![Polynomial::one(ring)],
        };
    }
    let mut reduced: Vec<Polynomial<K>> = (0..minimal.len())
        .map(|i| {
            let others: Vec<Polynomial<K>> = minimal
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g.clone())
                .collect();
            reduce_full(&minimal[i], &others).monic()
        })
        .collect();
    reduced.sort_by(|a, b| ring.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    GroebnerBasis {
        ring: ring.clone(),
        elements: reduced,
    }
}
