//! Graded polynomial rings, monomials and monomial orders.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::FieldDescriptor;

/// Largest number of variables a ring may have (including the auxiliary
/// variables added by elimination).
pub const MAX_VARS: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic, `Z_0 > Z_1 > ... > Z_N`.
    DegRevLex,
    Lex,
    /// Block order: the first `k` variables are compared first (graded
    /// reverse lexicographic inside the block), then the rest.
    Elimination(usize),
}

/// A monomial with its weighted degree cached.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    degree: u32,
}

impl Monomial {
    pub fn exponents(&self) -> &[u16; MAX_VARS] {
        &self.exps
    }

    pub fn exponent(&self, var: usize) -> u16 {
        self.exps[var]
    }

    /// Weighted total degree.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps.iter()) {
            *e += *o;
        }
        Monomial {
            exps,
            degree: self.degree + other.degree,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    pub fn quotient(&self, other: &Monomial) -> Monomial {
        let mut exps = other.exps;
        for (e, s) in exps.iter_mut().zip(self.exps.iter()) {
            *e -= *s;
        }
        Monomial {
            exps,
            degree: other.degree - self.degree,
        }
    }

    /// Least common multiple; the weighted degree needs the ring weights.
    pub fn lcm(&self, other: &Monomial, weights: &[u32]) -> Monomial {
        let mut exps = [0u16; MAX_VARS];
        let mut degree = 0;
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i].max(other.exps[i]);
            if exps[i] > 0 {
                degree += exps[i] as u32 * weights[i];
            }
        }
        Monomial { exps, degree }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn support_contains(&self, var: usize) -> bool {
        self.exps[var] > 0
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.exps.iter().rposition(|&e| e > 0).map_or(0, |i| i + 1);
        write!(f, "{:?}", &self.exps[..last])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingDescriptor {
    field: FieldDescriptor,
    names: Vec<String>,
    weights: Vec<u32>,
    padded_weights: [u32; MAX_VARS],
    order: MonomialOrder,
}

/// Rings are shared by every polynomial built over them.
pub type Ring = Arc<RingDescriptor>;

impl RingDescriptor {
    pub fn new(
        field: FieldDescriptor,
        names: Vec<String>,
        weights: Vec<u32>,
        order: MonomialOrder,
    ) -> Result<Ring> {
        if names.is_empty() {
            return Err(Error::InvalidRing("a ring needs at least one variable".into()));
        }
        if names.len() > MAX_VARS {
            return Err(Error::InvalidRing(format!(
                "{} variables requested, at most {MAX_VARS} supported",
                names.len()
            )));
        }
        if weights.len() != names.len() {
            return Err(Error::InvalidRing("one weight per variable required".into()));
        }
        if weights.iter().any(|&w| w == 0) {
            return Err(Error::InvalidRing("weights must be positive".into()));
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::InvalidRing(format!("duplicate variable {n}")));
            }
        }
        if let MonomialOrder::Elimination(k) = order {
            if k == 0 || k >= names.len() {
                return Err(Error::InvalidRing("elimination block must be a proper prefix".into()));
            }
        }
        let mut padded_weights = [1u32; MAX_VARS];
        padded_weights[..weights.len()].copy_from_slice(&weights);
        Ok(Arc::new(RingDescriptor {
            field,
            names,
            weights,
            padded_weights,
            order,
        }))
    }

    /// `k[z0..z{n-1}]`, standard grading, degrevlex.
    pub fn standard(field: FieldDescriptor, num_vars: usize) -> Result<Ring> {
        let names = (0..num_vars).map(|i| format!("z{i}")).collect();
        Self::new(field, names, vec![1; num_vars], MonomialOrder::DegRevLex)
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn num_vars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn is_standard_graded(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    /// Same variables and field under another monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Ring> {
        Self::new(self.field, self.names.clone(), self.weights.clone(), order)
    }

    /// Prepends one auxiliary weight-1 variable and orders it in an
    /// elimination block ahead of the original variables.
    pub fn with_elimination_variable(&self) -> Result<Ring> {
        let mut names = vec!["_t".to_string()];
        names.extend(self.names.iter().cloned());
        let mut weights = vec![1];
        weights.extend(self.weights.iter().copied());
        Self::new(self.field, names, weights, MonomialOrder::Elimination(1))
    }

    pub fn monomial(&self, exps: &[u16]) -> Monomial {
        assert!(exps.len() <= self.num_vars(), "too many exponents for ring");
        let mut e = [0u16; MAX_VARS];
        e[..exps.len()].copy_from_slice(exps);
        self.monomial_from_array(e)
    }

    pub(crate) fn monomial_from_array(&self, exps: [u16; MAX_VARS]) -> Monomial {
        let degree = exps
            .iter()
            .zip(self.padded_weights.iter())
            .map(|(&e, &w)| e as u32 * w)
            .sum();
        Monomial { exps, degree }
    }

    pub fn one_monomial(&self) -> Monomial {
        Monomial {
            exps: [0; MAX_VARS],
            degree: 0,
        }
    }

    pub fn variable(&self, var: usize) -> Monomial {
        let mut e = [0u16; MAX_VARS];
        e[var] = 1;
        Monomial {
            exps: e,
            degree: self.weights[var],
        }
    }

    pub fn lcm(&self, a: &Monomial, b: &Monomial) -> Monomial {
        a.lcm(b, &self.padded_weights)
    }

    /// Compares two monomials in this ring's order.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.order {
            MonomialOrder::DegRevLex => degrevlex(a, b, 0, self.num_vars(), a.degree, b.degree),
            MonomialOrder::Lex => a.exps[..self.num_vars()].cmp(&b.exps[..self.num_vars()]),
            MonomialOrder::Elimination(k) => {
                let w = &self.padded_weights;
                let block = |m: &Monomial| -> u32 { (0..k).map(|i| m.exps[i] as u32 * w[i]).sum() };
                let (da, db) = (block(a), block(b));
                degrevlex(a, b, 0, k, da, db).then_with(|| {
                    degrevlex(a, b, k, self.num_vars(), a.degree - da, b.degree - db)
                })
            }
        }
    }

    pub fn lex_cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        a.exps[..self.num_vars()].cmp(&b.exps[..self.num_vars()])
    }

    /// All monomials of weighted degree `m`, largest first in the ring order.
    pub fn monomials_of_degree(&self, m: u32) -> Vec<Monomial> {
        let n = self.num_vars();
        let mut out = Vec::new();
        let mut exps = [0u16; MAX_VARS];
        self.enumerate(0, n, m, &mut exps, &mut out);
        out.sort_by(|a, b| self.cmp(b, a));
        out
    }

    fn enumerate(&self, var: usize, n: usize, left: u32, exps: &mut [u16; MAX_VARS], out: &mut Vec<Monomial>) {
        if var + 1 == n {
            let w = self.weights[var];
            if left % w == 0 {
                exps[var] = (left / w) as u16;
                out.push(self.monomial_from_array(*exps));
                exps[var] = 0;
            }
            return;
        }
        let w = self.weights[var];
        let mut e = 0u32;
        while e * w <= left {
            exps[var] = e as u16;
            self.enumerate(var + 1, n, left - e * w, exps, out);
            e += 1;
        }
        exps[var] = 0;
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let parts: Vec<String> = (0..self.num_vars())
            .filter(|&i| m.exps[i] > 0)
            .map(|i| {
                if m.exps[i] == 1 {
                    self.names[i].clone()
                } else {
                    format!("{}^{}", self.names[i], m.exps[i])
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

fn degrevlex(a: &Monomial, b: &Monomial, lo: usize, hi: usize, da: u32, db: u32) -> Ordering {
    da.cmp(&db).then_with(|| {
        for i in (lo..hi).rev() {
            match a.exps[i].cmp(&b.exps[i]) {
                Ordering::Equal => continue,
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    })
}
