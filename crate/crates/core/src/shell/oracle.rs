//! `mu_q` on Koszul homology: a cycle of `(S/I_W) ⊗ Λ k^n` is pushed to
//! `S/I_V` by normal forms and tested for independence modulo boundaries.

use crate::field::Coeff;
use crate::groebner::GroebnerBasis;
use crate::ideal::Ideal;
use crate::linalg::{Echelon, Insert, SparseVec};
use crate::poly::Polynomial;
use crate::resolution::{chain_to_parts, koszul_homology, KoszulHomology};
use crate::ring::Ring;

/// Degrees where `Tor_q(S/I, k)` may be nonzero, as `(q, m_max)` with
/// `q <= m`. The bound comes from the Taylor resolution of the initial
/// ideal: a generator in homological degree `q` has the degree of an lcm of
/// `q` leading monomials, and Betti numbers only drop from `in(I)` to `I`.
pub(crate) fn tor_support<K: Coeff>(gb: &GroebnerBasis<K>) -> Vec<(usize, i64)> {
    let ring = gb.ring();
    if gb.is_unit() || gb.is_empty() {
        return Vec::new();
    }
    let lms = gb.leading_monomials();
    let mut degrees: Vec<i64> = lms.iter().map(|m| m.degree() as i64).collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    let all = lms.iter().fold(ring.one_monomial(), |acc, m| ring.lcm(&acc, m)).degree() as i64;
    (1..=ring.num_vars().min(lms.len()))
        .map(|q| (q, degrees[..q].iter().sum::<i64>().min(all)))
        .collect()
}

pub(crate) struct OracleBlock<K> {
    pub(crate) source_dim: usize,
    pub(crate) target_dim: usize,
    pub(crate) rank: usize,
    pub(crate) witness: Option<OracleWitness<K>>,
}

pub(crate) struct OracleWitness<K> {
    pub(crate) cycle: Vec<(Vec<usize>, Polynomial<K>)>,
    pub(crate) verified: bool,
}

/// Image of a `W`-chain in the `V`-chain space of the same `(q, m)`.
fn push_forward<K: Coeff>(hw: &KoszulHomology<K>, hv: &KoszulHomology<K>, gb_v: &GroebnerBasis<K>, z: &SparseVec<K>) -> SparseVec<K> {
    let ring = gb_v.ring();
    let parts = chain_to_parts(ring, &hw.chains, z);
    let reduced: Vec<(Vec<usize>, Polynomial<K>)> =
        parts.into_iter().map(|(j, p)| (j, gb_v.normal_form(&p).expect("same ring"))).collect();
    hv.chains.coordinates(&reduced)
}

fn combine<K: Coeff>(vectors: &[SparseVec<K>], coeffs: &SparseVec<K>, len: usize, ring: &Ring) -> SparseVec<K> {
    let zero = K::zero(ring.field());
    let mut dense = vec![zero; len];
    for (k, c) in coeffs {
        for (i, x) in &vectors[*k] {
            dense[*i] = dense[*i].add(&x.mul(c));
        }
    }
    dense.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
}

/// `mu_q` in degree `m`; `None` when `Tor_q(S/I_W)_m = 0`.
pub(crate) fn oracle_block<K: Coeff>(v: &Ideal<K>, w: &Ideal<K>, q: usize, m: i64) -> Option<OracleBlock<K>> {
    let hw = koszul_homology(w, q, m);
    if hw.dimension() == 0 {
        return None;
    }
    let hv = koszul_homology(v, q, m);
    let ring = v.ring();
    let gb_v = v.groebner();
    let images: Vec<SparseVec<K>> = hw.cycles.iter().map(|z| push_forward(&hw, &hv, gb_v, z)).collect();

    let mut e = Echelon::with_tracking(hv.chains.len(), ring.field());
    let nb = hv.boundaries.rows().len();
    for b in hv.boundaries.rows() {
        e.insert(b);
    }
    let mut rank = 0;
    let mut witness = None;
    for img in &images {
        match e.insert(img) {
            Insert::Independent(_) => rank += 1,
            Insert::Dependent(rel) => {
                if witness.is_none() {
                    let coeffs: SparseVec<K> =
                        rel.expect("tracking").into_iter().filter(|(k, _)| *k >= nb).map(|(k, c)| (k - nb, c)).collect();
                    witness = Some(verify_witness(&hw, &hv, gb_v, &coeffs, ring));
                }
            }
        }
    }
    Some(OracleBlock {
        source_dim: hw.dimension(),
        target_dim: hv.dimension(),
        rank,
        witness,
    })
}

/// Rebuilds the cycle from its coefficients and re-checks, independently
/// of the elimination that produced it, that it is a nonzero class for
/// `W` whose image is a boundary for `V`.
fn verify_witness<K: Coeff>(
    hw: &KoszulHomology<K>,
    hv: &KoszulHomology<K>,
    gb_v: &GroebnerBasis<K>,
    coeffs: &SparseVec<K>,
    ring: &Ring,
) -> OracleWitness<K> {
    let z = combine(&hw.cycles, coeffs, hw.chains.len(), ring);
    let nonzero = !z.is_empty() && !hw.boundaries.contains(&z);
    let killed = hv.boundaries.contains(&push_forward(hw, hv, gb_v, &z));
    OracleWitness {
        cycle: chain_to_parts(ring, &hw.chains, &z),
        verified: nonzero && killed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{FieldDescriptor, Rational};
    use crate::ring::RingDescriptor;

    type P = Polynomial<Rational>;

    #[test]
    fn support_bound_twisted_cubic() {
        let r = RingDescriptor::standard(FieldDescriptor::Rationals, 4).unwrap();
        let g = vec![
            P::from_int_terms(&r, &[(1, &[1, 0, 1]), (-1, &[0, 2])]),
            P::from_int_terms(&r, &[(1, &[0, 1, 0, 1]), (-1, &[0, 0, 2])]),
            P::from_int_terms(&r, &[(1, &[1, 0, 0, 1]), (-1, &[0, 1, 1])]),
        ];
        let i = Ideal::new(&r, g).unwrap();
        let s = tor_support(i.groebner());
        assert_eq!(s, vec![(1, 2), (2, 4), (3, 4)]);
        assert!(tor_support(Ideal::<Rational>::zero(&r).groebner()).is_empty());
    }

    #[test]
    fn negative_block_has_verified_witness() {
        let r = RingDescriptor::standard(FieldDescriptor::Rationals, 4).unwrap();
        let q1 = P::from_int_terms(&r, &[(1, &[1, 0, 1]), (-1, &[0, 2])]);
        let v = Ideal::new(
            &r,
            vec![
                q1.clone(),
                P::from_int_terms(&r, &[(1, &[0, 1, 0, 1]), (-1, &[0, 0, 2])]),
                P::from_int_terms(&r, &[(1, &[1, 0, 0, 1]), (-1, &[0, 1, 1])]),
            ],
        )
        .unwrap();
        let w = Ideal::new(&r, vec![q1.mul(&P::variable(&r, 3)).unwrap()]).unwrap();
        let b = oracle_block(&v, &w, 1, 3).unwrap();
        assert_eq!((b.source_dim, b.rank), (1, 0));
        let wit = b.witness.unwrap();
        assert!(wit.verified);
        assert!(!wit.cycle.is_empty());
        assert!(oracle_block(&v, &w, 1, 2).is_none());
    }
}
