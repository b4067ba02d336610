use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::groebner::{buchberger, GroebnerBasis};
use crate::poly::Polynomial;
use crate::ring::Ring;

/// A homogeneous ideal given by generators. Its reduced Gröbner basis is
/// computed on first use and shared between clones.
#[derive(Clone)]
pub struct Ideal<K> {
    ring: Ring,
    generators: Vec<Polynomial<K>>,
    gb: OnceLock<Arc<GroebnerBasis<K>>>,
}

impl<K: Coeff> Ideal<K> {
    /// Zero generators are dropped, as are repeats up to a scalar.
    pub fn new(ring: &Ring, generators: Vec<Polynomial<K>>) -> Result<Self> {
        if !K::supports(ring.field()) {
            return Err(Error::InvalidField(format!(
                "coefficient type does not match field {}",
                ring.field()
            )));
        }
        let mut kept: Vec<Polynomial<K>> = Vec::new();
        let mut seen: Vec<Polynomial<K>> = Vec::new();
        for g in generators {
            if g.ring() != ring {
                return Err(Error::RingMismatch);
            }
            if g.is_zero() {
                continue;
            }
            if g.homogeneous_degree().is_none() {
                return Err(Error::Inhomogeneous(g.to_string()));
            }
            let m = g.monic();
            if seen.contains(&m) {
                continue;
            }
            seen.push(m);
            kept.push(g);
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators: kept,
            gb: OnceLock::new(),
        })
    }

    pub fn zero(ring: &Ring) -> Self {
        Ideal {
            ring: ring.clone(),
            generators: Vec::new(),
            gb: OnceLock::new(),
        }
    }

    pub fn unit(ring: &Ring) -> Self {
        Self::new(ring, vec![Polynomial::one(ring)]).expect("constant is homogeneous")
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial<K>] {
        &self.generators
    }

    pub fn groebner(&self) -> &GroebnerBasis<K> {
        self.gb.get_or_init(|| Arc::new(buchberger(&self.ring, &self.generators)))
    }

    pub fn contains(&self, p: &Polynomial<K>) -> Result<bool> {
        self.groebner().contains(p)
    }

    /// Same ideal (as a set), decided by reduced Gröbner bases.
    pub fn same_ideal(&self, other: &Self) -> bool {
        self.ring == other.ring && self.groebner().elements() == other.groebner().elements()
    }

    pub fn is_unit(&self) -> bool {
        self.groebner().is_unit()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Sum of ideals.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let mut g = self.generators.clone();
        g.extend(other.generators.iter().cloned());
        Self::new(&self.ring, g)
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let mut g = Vec::new();
        for a in &self.generators {
            for b in &other.generators {
                g.push(a.mul_unchecked(b));
            }
        }
        Self::new(&self.ring, g)
    }

    pub fn power(&self, e: u32) -> Result<Self> {
        let mut acc = Self::unit(&self.ring);
        for _ in 0..e {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Applies a linear change of coordinates to every generator.
    pub fn linear_substitute(&self, matrix: &[Vec<K>]) -> Result<Self> {
        let gens = self
            .generators
            .iter()
            .map(|g| g.linear_substitute(matrix))
            .collect::<Result<Vec<_>>>()?;
        Self::new(&self.ring, gens)
    }

    /// Whether some nonzero linear form lies in the ideal.
    pub fn contains_linear_form(&self) -> bool {
        self.groebner()
            .elements()
            .iter()
            .any(|g| g.homogeneous_degree() == Some(1) || g.homogeneous_degree() == Some(0))
    }
}

impl<K: Coeff> std::fmt::Debug for Ideal<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.generators.iter().map(|g| g.to_string())).finish()
    }
}
