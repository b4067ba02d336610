//! Sparse multivariate polynomials.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::linalg;
use crate::ring::{Monomial, Ring, MAX_VARS};

/// Terms are kept sorted by the ring's monomial order, largest first, with no
/// zero coefficients.
#[derive(Clone)]
pub struct Polynomial<K> {
    ring: Ring,
    terms: Vec<(Monomial, K)>,
}

impl<K: Coeff> PartialEq for Polynomial<K> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && (std::sync::Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring)
    }
}

impl<K: Coeff> Eq for Polynomial<K> {}

impl<K: Coeff> Hash for Polynomial<K> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl<K: Coeff> Polynomial<K> {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Ring, c: K) -> Self {
        Self::term(ring, ring.one_monomial(), c)
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, K::one(ring.field()))
    }

    pub fn term(ring: &Ring, m: Monomial, c: K) -> Self {
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn variable(ring: &Ring, var: usize) -> Self {
        Self::term(ring, ring.variable(var), K::one(ring.field()))
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges equal
    /// monomials and drops zeros.
    pub fn from_terms(ring: &Ring, mut terms: Vec<(Monomial, K)>) -> Self {
        terms.sort_by(|a, b| ring.cmp(&b.0, &a.0));
        let mut merged: Vec<(Monomial, K)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match merged.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = lc.add(&c),
                _ => merged.push((m, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        Polynomial { ring: ring.clone(), terms: merged }
    }

    /// Assumes `terms` is already sorted and free of zeros.
    pub(crate) fn from_sorted_terms(ring: &Ring, terms: Vec<(Monomial, K)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { ring: ring.clone(), terms }
    }

    /// Integer coefficients with exponent vectors, e.g. `[(1, &[1,0,1]), (-1, &[0,2])]`.
    pub fn from_int_terms(ring: &Ring, terms: &[(i64, &[u16])]) -> Self {
        let f = ring.field();
        Self::from_terms(
            ring,
            terms.iter().map(|(c, e)| (ring.monomial(e), K::from_i64(*c, f))).collect(),
        )
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, K)] {
        &self.terms
    }

    pub(crate) fn into_terms(self) -> Vec<(Monomial, K)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn leading_term(&self) -> Option<&(Monomial, K)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&K> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn coeff_of(&self, m: &Monomial) -> Option<&K> {
        self.terms.iter().find(|(t, _)| t == m).map(|(_, c)| c)
    }

    /// Maximal weighted degree of a term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// `Some(d)` when the polynomial is nonzero and every term has weighted
    /// degree `d`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.terms.first()?.0.degree();
        self.terms.iter().all(|(m, _)| m.degree() == d).then_some(d)
    }

    /// Zero counts as homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if std::sync::Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.sub_unchecked(other))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn add_unchecked(&self, other: &Self) -> Self {
        let one = K::one(self.ring.field());
        let mut out = self.clone();
        out.add_scaled_unchecked(&one, &self.ring.one_monomial(), other);
        out
    }

    pub(crate) fn sub_unchecked(&self, other: &Self) -> Self {
        let m1 = K::one(self.ring.field()).neg();
        let mut out = self.clone();
        out.add_scaled_unchecked(&m1, &self.ring.one_monomial(), other);
        out
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ring);
        }
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut acc = Self::zero(&self.ring);
        for (m, c) in &small.terms {
            acc.add_scaled_unchecked(c, m, large);
        }
        acc
    }

    /// `self += c * m * other` by a sorted merge.
    pub(crate) fn add_scaled_unchecked(&mut self, c: &K, m: &Monomial, other: &Self) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        let ring = &self.ring;
        let lhs = std::mem::take(&mut self.terms);
        let mut out = Vec::with_capacity(lhs.len() + other.terms.len());
        let mut a = lhs.into_iter().peekable();
        let mut b = other.terms.iter().map(|(t, k)| (t.mul(m), k.mul(c))).peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (Some(x), Some(y)) => ring.cmp(&x.0, &y.0),
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (None, None) => break,
            };
            match ord {
                Ordering::Greater => out.push(a.next().unwrap()),
                Ordering::Less => out.push(b.next().unwrap()),
                Ordering::Equal => {
                    let (mx, cx) = a.next().unwrap();
                    let (_, cy) = b.next().unwrap();
                    let s = cx.add(&cy);
                    if !s.is_zero() {
                        out.push((mx, s));
                    }
                }
            }
        }
        self.terms = out;
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, k)| (*m, k.mul(c))).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, k)| (*m, k.neg())).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, k)| (t.mul(m), k.clone())).collect(),
        }
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    pub fn homogeneous_components(&self) -> Vec<Self> {
        let mut degrees: Vec<u32> = self.terms.iter().map(|(m, _)| m.degree()).collect();
        degrees.sort_unstable();
        degrees.dedup();
        degrees
            .into_iter()
            .rev()
            .map(|d| Polynomial {
                ring: self.ring.clone(),
                terms: self.terms.iter().filter(|(m, _)| m.degree() == d).cloned().collect(),
            })
            .collect()
    }

    pub fn evaluate(&self, point: &[K]) -> K {
        let f = self.ring.field();
        let mut acc = K::zero(f);
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, x) in point.iter().enumerate() {
                for _ in 0..m.exponent(i) {
                    t = t.mul(x);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Replaces `Z_i` by `sum_j M[i][j] Z_j`. Standard-graded rings only;
    /// `matrix` must be invertible.
    pub fn linear_substitute(&self, matrix: &[Vec<K>]) -> Result<Self> {
        let n = self.ring.num_vars();
        if !self.ring.is_standard_graded() {
            return Err(Error::WeightedRing);
        }
        if matrix.len() != n || matrix.iter().any(|r| r.len() != n) {
            return Err(Error::Precondition(format!("substitution matrix must be {n}x{n}")));
        }
        if linalg::determinant(matrix, self.ring.field()).is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(self.substitute_unchecked(matrix))
    }

    pub(crate) fn substitute_unchecked(&self, matrix: &[Vec<K>]) -> Self {
        let ring = &self.ring;
        let n = ring.num_vars();
        let images: Vec<Self> = (0..n)
            .map(|i| {
                Self::from_terms(
                    ring,
                    (0..n).map(|j| (ring.variable(j), matrix[i][j].clone())).collect(),
                )
            })
            .collect();
        // powers[i][e] = images[i]^e, built lazily
        let mut powers: Vec<Vec<Self>> = images.iter().map(|p| vec![Self::one(ring), p.clone()]).collect();
        let mut acc = Self::zero(ring);
        for (m, c) in &self.terms {
            let mut t = Self::constant(ring, c.clone());
            for i in 0..n {
                let e = m.exponent(i) as usize;
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap().mul_unchecked(&images[i]);
                    powers[i].push(next);
                }
                if e > 0 {
                    t = t.mul_unchecked(&powers[i][e]);
                }
            }
            acc = acc.add_unchecked(&t);
        }
        acc
    }

    /// Moves the polynomial into `target`, placing variable `i` at
    /// `i + offset`.
    pub(crate) fn shift_into(&self, target: &Ring, offset: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = [0u16; MAX_VARS];
                for i in 0..self.ring.num_vars() {
                    e[i + offset] = m.exponent(i);
                }
                (target.monomial_from_array(e), c.clone())
            })
            .collect();
        Self::from_terms(target, terms)
    }

    /// Inverse of [`shift_into`](Self::shift_into); `None` if a dropped
    /// variable occurs.
    pub(crate) fn unshift_into(&self, target: &Ring, offset: usize) -> Option<Self> {
        let mut terms = Vec::with_capacity(self.len());
        for (m, c) in &self.terms {
            if (0..offset).any(|i| m.exponent(i) > 0) {
                return None;
            }
            let mut e = [0u16; MAX_VARS];
            for i in 0..target.num_vars() {
                e[i] = m.exponent(i + offset);
            }
            terms.push((target.monomial_from_array(e), c.clone()));
        }
        Some(Self::from_terms(target, terms))
    }
}

impl<K: Coeff> fmt::Debug for Polynomial<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Renders in the ideal-description grammar, e.g. `z0*z2 - z1^2`,
/// `3 z0^2 + 1/2 z1*z3`.
impl<K: Coeff> fmt::Display for Polynomial<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let (neg, num, den) = c.to_parts();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let unit = num == 1.into() && den == 1.into();
            let coeff = if den == 1.into() { num.to_string() } else { format!("{num}/{den}") };
            if m.is_one() {
                write!(f, "{coeff}")?;
            } else if unit {
                write!(f, "{}", self.ring.format_monomial(m))?;
            } else {
                write!(f, "{coeff} {}", self.ring.format_monomial(m))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{FieldDescriptor, Rational};
    use crate::ring::RingDescriptor;
    use proptest::prelude::*;

    type P = Polynomial<Rational>;

    fn ring4() -> Ring {
        RingDescriptor::standard(FieldDescriptor::Rationals, 4).unwrap()
    }

    fn p(r: &Ring, t: &[(i64, &[u16])]) -> P {
        P::from_int_terms(r, t)
    }

    #[test]
    fn addition_examples() {
        let r = ring4();
        let a = p(&r, &[(1, &[1, 0, 1])]);
        let b = p(&r, &[(-1, &[0, 2])]);
        let s = a.add(&b).unwrap();
        assert_eq!(s.to_string(), "-z1^2 + z0*z2");
        assert!(s.add(&s.neg()).unwrap().is_zero());
        assert_eq!(s.add(&p(&r, &[(1, &[0, 2])])).unwrap(), a);
    }

    #[test]
    fn multiplication_examples() {
        let r = ring4();
        let z1 = P::variable(&r, 1);
        assert_eq!(z1.mul(&z1).unwrap().to_string(), "z1^2");
        let plus = p(&r, &[(1, &[1]), (1, &[0, 1])]);
        let minus = p(&r, &[(1, &[1]), (-1, &[0, 1])]);
        assert_eq!(plus.mul(&minus).unwrap().to_string(), "z0^2 - z1^2");
        let q = p(&r, &[(1, &[2]), (3, &[0, 1, 1])]);
        let c = p(&r, &[(1, &[3]), (-2, &[0, 0, 0, 3])]);
        assert_eq!(q.mul(&c).unwrap().homogeneous_degree(), Some(5));
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let r = ring4();
        let other = RingDescriptor::standard(FieldDescriptor::Rationals, 3).unwrap();
        assert_eq!(
            P::variable(&r, 0).add(&P::variable(&other, 0)).unwrap_err(),
            Error::RingMismatch
        );
    }

    #[test]
    fn homogeneity() {
        let r = ring4();
        assert_eq!(p(&r, &[(1, &[1, 0, 0, 1]), (-1, &[0, 1, 1])]).homogeneous_degree(), Some(2));
        assert_eq!(p(&r, &[(1, &[1]), (1, &[0, 2])]).homogeneous_degree(), None);
        let w = RingDescriptor::new(
            FieldDescriptor::Rationals,
            vec!["z0".into(), "z1".into(), "z2".into()],
            vec![1, 1, 2],
            crate::ring::MonomialOrder::DegRevLex,
        )
        .unwrap();
        assert_eq!(p(&w, &[(1, &[0, 0, 1]), (-1, &[1, 1])]).homogeneous_degree(), Some(2));
    }

    fn int_matrix(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| Rational::integer(x)).collect()).collect()
    }

    #[test]
    fn substitution_examples() {
        let r = ring4();
        let f = p(&r, &[(1, &[1, 0, 1]), (-1, &[0, 2])]);
        let id = int_matrix(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
        assert_eq!(f.linear_substitute(&id).unwrap(), f);
        let swap = int_matrix(&[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
        assert_eq!(f.linear_substitute(&swap).unwrap().to_string(), "-z0^2 + z1*z2");
        let singular = int_matrix(&[&[1, 1, 0, 0], &[1, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
        assert_eq!(f.linear_substitute(&singular).unwrap_err(), Error::SingularMatrix);
        let m = int_matrix(&[&[1, 2, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, -1], &[0, 0, 0, 1]]);
        let inv = linalg::invert(&m, FieldDescriptor::Rationals).unwrap();
        assert_eq!(f.linear_substitute(&m).unwrap().linear_substitute(&inv).unwrap(), f);
    }

    fn arb_poly(r: Ring) -> impl Strategy<Value = P> {
        proptest::collection::vec((-3i64..4, proptest::collection::vec(0u16..3, 4)), 0..6).prop_map(move |ts| {
            P::from_terms(
                &r,
                ts.into_iter().map(|(c, e)| (r.monomial(&e), Rational::integer(c))).collect(),
            )
        })
    }

    fn arb_matrix() -> impl Strategy<Value = Vec<Vec<Rational>>> {
        proptest::collection::vec(proptest::collection::vec(-2i64..3, 4), 4)
            .prop_map(|m| -> Vec<Vec<Rational>> {
                m.into_iter().map(|r| r.into_iter().map(Rational::integer).collect()).collect()
            })
            .prop_filter("invertible", |m: &Vec<Vec<Rational>>| !linalg::determinant(m, FieldDescriptor::Rationals).is_zero())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn arithmetic_is_a_commutative_ring(a in arb_poly(ring4()), b in arb_poly(ring4()), c in arb_poly(ring4())) {
            prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert_eq!(a.mul(&b.add(&c).unwrap()).unwrap(), a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
            prop_assert!(a.sub(&a).unwrap().is_zero());
            prop_assert_eq!(format!("{}", a.mul(&b).unwrap()), format!("{}", a.mul(&b).unwrap()));
        }

        #[test]
        fn homogeneous_degrees_add(a in arb_poly(ring4()), b in arb_poly(ring4())) {
            let comps_a = a.homogeneous_components();
            let comps_b = b.homogeneous_components();
            if let (Some(x), Some(y)) = (comps_a.first(), comps_b.first()) {
                let prod = x.mul(y).unwrap();
                prop_assert_eq!(prod.homogeneous_degree(), Some(x.homogeneous_degree().unwrap() + y.homogeneous_degree().unwrap()));
            }
        }

        #[test]
        fn substitution_is_a_right_action(a in arb_poly(ring4()), m in arb_matrix(), n in arb_matrix()) {
            let f = FieldDescriptor::Rationals;
            let mn = linalg::mat_mul(&m, &n, f);
            let lhs = a.linear_substitute(&m).unwrap().linear_substitute(&n).unwrap();
            prop_assert_eq!(lhs, a.linear_substitute(&mn).unwrap());
        }
    }
}
