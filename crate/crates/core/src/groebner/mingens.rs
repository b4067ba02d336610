//! Minimal generators, decided degree by degree on graded pieces.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::ideal::Ideal;
use crate::linalg::{Echelon, Insert, SparseVec};
use crate::poly::Polynomial;
use crate::ring::{Monomial, Ring};

use super::standard_monomials;

/// Basis of the graded piece `I_d`: one element `mu - NF(mu)` for each
/// non-standard monomial `mu` of degree `d`.
pub fn graded_piece_span<K: Coeff>(ideal: &Ideal<K>, d: u32) -> Vec<Polynomial<K>> {
    let gb = ideal.groebner();
    let ring = ideal.ring();
    let lms = gb.leading_monomials();
    let one = K::one(ring.field());
    ring.monomials_of_degree(d)
        .into_iter()
        .filter(|m| lms.iter().any(|l| l.divides(m)))
        .map(|m| {
            let mono = Polynomial::term(ring, m, one.clone());
            let nf = gb.normal_form(&mono).expect("same ring");
            mono.sub_unchecked(&nf)
        })
        .collect()
}

/// Coordinates of degree-`d` polynomials in the monomial basis.
struct Coords {
    index: HashMap<Monomial, usize>,
}

impl Coords {
    fn new(ring: &Ring, d: u32) -> Self {
        let index = ring.monomials_of_degree(d).into_iter().enumerate().map(|(i, m)| (m, i)).collect();
        Coords { index }
    }

    fn len(&self) -> usize {
        self.index.len()
    }

    fn vector<K: Coeff>(&self, p: &Polynomial<K>) -> SparseVec<K> {
        let mut v: SparseVec<K> = p.terms().iter().map(|(m, c)| (self.index[m], c.clone())).collect();
        v.sort_by_key(|(i, _)| *i);
        v
    }
}

/// Echelon form of `(S_+ I)_d = sum_i Z_i I_{d - w_i}`.
fn decomposables<K: Coeff>(ideal: &Ideal<K>, d: u32, coords: &Coords) -> Echelon<K> {
    let ring = ideal.ring();
    let mut e = Echelon::new(coords.len(), ring.field());
    for (i, &w) in ring.weights().iter().enumerate() {
        if w > d {
            continue;
        }
        let z = ring.variable(i);
        for b in graded_piece_span(ideal, d - w) {
            e.insert(&coords.vector(&b.mul_monomial(&z)));
        }
    }
    e
}

fn check_member<K: Coeff>(f: &Polynomial<K>, ideal: &Ideal<K>) -> Result<u32> {
    if f.ring() != ideal.ring() {
        return Err(Error::RingMismatch);
    }
    let d = f
        .homogeneous_degree()
        .ok_or_else(|| Error::Inhomogeneous(f.to_string()))?;
    if f.is_zero() || !ideal.contains(f)? {
        return Err(Error::NotMember(f.to_string()));
    }
    Ok(d)
}

/// Whether `f` has nonzero image in `I / S_+ I`.
pub fn is_minimal_generator<K: Coeff>(f: &Polynomial<K>, ideal: &Ideal<K>) -> Result<bool> {
    let d = check_member(f, ideal)?;
    let coords = Coords::new(ideal.ring(), d);
    Ok(!decomposables(ideal, d, &coords).contains(&coords.vector(f)))
}

/// Minimal generating subset of the given generators, in input order.
pub fn minimal_generators<K: Coeff>(ideal: &Ideal<K>) -> Vec<Polynomial<K>> {
    let mut degrees: Vec<u32> = ideal.generators().iter().filter_map(|g| g.homogeneous_degree()).collect();
    degrees.sort_unstable();
    degrees.dedup();
    let mut keep = vec![false; ideal.generators().len()];
    for d in degrees {
        let coords = Coords::new(ideal.ring(), d);
        let mut e = decomposables(ideal, d, &coords);
        for (k, g) in ideal.generators().iter().enumerate() {
            if g.homogeneous_degree() == Some(d) {
                keep[k] = matches!(e.insert(&coords.vector(g)), Insert::Independent(_));
            }
        }
    }
    ideal
        .generators()
        .iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(g, _)| g.clone())
        .collect()
}

/// Whether `sub` is generated by part of a minimal generating set of
/// `ideal`: `sub` is contained in `ideal` and its minimal generators stay
/// linearly independent modulo `S_+ ideal`.
pub fn is_part_of_minimal_generators<K: Coeff>(sub: &Ideal<K>, ideal: &Ideal<K>) -> Result<bool> {
    let gens = minimal_generators(sub);
    for g in &gens {
        check_member(g, ideal)?;
    }
    let mut degrees: Vec<u32> = gens.iter().filter_map(|g| g.homogeneous_degree()).collect();
    degrees.sort_unstable();
    degrees.dedup();
    for d in degrees {
        let coords = Coords::new(ideal.ring(), d);
        let mut e = decomposables(ideal, d, &coords);
        for g in gens.iter().filter(|g| g.homogeneous_degree() == Some(d)) {
            if let Insert::Dependent(_) = e.insert(&coords.vector(g)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Number of minimal generators in each degree, ascending.
pub fn minimal_generator_counts<K: Coeff>(ideal: &Ideal<K>) -> Vec<(u32, usize)> {
    let mut degrees: Vec<u32> = minimal_generators(ideal)
        .iter()
        .filter_map(|g| g.homogeneous_degree())
        .collect();
    degrees.sort_unstable();
    let mut out: Vec<(u32, usize)> = Vec::new();
    for d in degrees {
        match out.last_mut() {
            Some((e, n)) if *e == d => *n += 1,
            _ => out.push((d, 1)),
        }
    }
    out
}

pub fn graded_piece_dimension<K: Coeff>(ideal: &Ideal<K>, d: u32) -> usize {
    ideal.ring().monomials_of_degree(d).len() - standard_monomials(ideal.groebner(), d).len()
}
