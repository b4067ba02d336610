//! Quotients, saturation and intersection by eliminating an auxiliary
//! variable `t`.

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::ring::Ring;

use super::buchberger;

/// Generators of the Gröbner basis of `generators` (given in the ring with
/// `t` prepended) that do not involve `t`, moved back to `ring`.
fn eliminate_t<K: Coeff>(ring: &Ring, big: &Ring, generators: &[Polynomial<K>]) -> Result<Ideal<K>> {
    let gb = buchberger(big, generators);
    let kept: Vec<Polynomial<K>> = gb.elements().iter().filter_map(|g| g.unshift_into(ring, 1)).collect();
    Ideal::new(ring, kept)
}

/// `(I : f^inf)` via `I + (t f - 1)` with `t` eliminated.
pub fn ideal_quotient_saturation<K: Coeff>(ideal: &Ideal<K>, f: &Polynomial<K>) -> Result<Ideal<K>> {
    let ring = ideal.ring();
    if f.ring() != ring {
        return Err(Error::RingMismatch);
    }
    if f.is_zero() {
        return Err(Error::Precondition("cannot saturate by the zero polynomial".into()));
    }
    if ideal.is_zero() {
        return Ok(ideal.clone());
    }
    let big = ring.with_elimination_variable()?;
    let one = K::one(ring.field());
    let t = Polynomial::variable(&big, 0);
    let mut gens: Vec<Polynomial<K>> = ideal.generators().iter().map(|g| g.shift_into(&big, 1)).collect();
    gens.push(t.mul_unchecked(&f.shift_into(&big, 1)).sub_unchecked(&Polynomial::constant(&big, one)));
    eliminate_t(ring, &big, &gens)
}

/// `I ∩ J` as `(t I + (1 - t) J) ∩ S`.
pub fn intersect<K: Coeff>(a: &Ideal<K>, b: &Ideal<K>) -> Result<Ideal<K>> {
    let ring = a.ring();
    if b.ring() != ring {
        return Err(Error::RingMismatch);
    }
    if a.is_zero() || b.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    let big = ring.with_elimination_variable()?;
    let t = Polynomial::variable(&big, 0);
    let one_minus_t = Polynomial::one(&big).sub_unchecked(&t);
    let mut gens: Vec<Polynomial<K>> = a.generators().iter().map(|g| t.mul_unchecked(&g.shift_into(&big, 1))).collect();
    gens.extend(b.generators().iter().map(|g| one_minus_t.mul_unchecked(&g.shift_into(&big, 1))));
    eliminate_t(ring, &big, &gens)
}

/// `(I : f)`, from `I ∩ (f)` divided by `f`.
pub fn ideal_quotient<K: Coeff>(ideal: &Ideal<K>, f: &Polynomial<K>) -> Result<Ideal<K>> {
    let ring = ideal.ring();
    if f.is_zero() {
        return Err(Error::Precondition("cannot take a quotient by the zero polynomial".into()));
    }
    let principal = Ideal::new(ring, vec![f.clone()])?;
    let meet = intersect(ideal, &principal)?;
    let divisor = principal.groebner();
    let quotients = meet
        .generators()
        .iter()
        .map(|g| {
            let (q, r) = divisor.divide(g)?;
            if !r.is_zero() {
                return Err(Error::Internal("intersection element not divisible".into()));
            }
            // the basis of (f) is f made monic
            let lc = f.leading_coeff().expect("nonzero").clone();
            Ok(q[0].scale(&lc.inv().expect("nonzero")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, quotients)
}

/// Saturation with respect to the irrelevant ideal, as `∩_i (I : Z_i^inf)`.
/// The flag reports whether the ideal changed.
pub fn saturate_irrelevant<K: Coeff>(ideal: &Ideal<K>) -> Result<(Ideal<K>, bool)> {
    let ring = ideal.ring();
    if ideal.is_unit() || ideal.is_zero() {
        return Ok((ideal.clone(), false));
    }
    let mut acc: Option<Ideal<K>> = None;
    for i in 0..ring.num_vars() {
        let part = ideal_quotient_saturation(ideal, &Polynomial::variable(ring, i))?;
        acc = Some(match acc {
            None => part,
            Some(prev) => intersect(&prev, &part)?,
        });
    }
    let sat = acc.expect("at least one variable");
    let changed = !sat.same_ideal(ideal);
    Ok(if changed { (sat, true) } else { (ideal.clone(), false) })
}
