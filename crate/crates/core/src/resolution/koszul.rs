//! `Tor_q(S/I, k)_m` as homology of the Koszul complex on the variables,
//! tensored with `S/I`, computed on standard-monomial bases.

use std::collections::HashMap;

use crate::field::Coeff;
use crate::groebner::{standard_monomials, GroebnerBasis};
use crate::ideal::Ideal;
use crate::linalg::{kernel_of_vectors, Echelon, Insert, SparseVec};
use crate::poly::Polynomial;
use crate::ring::{Monomial, Ring};

/// Subsets of `0..n` of size `k`, in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Degree-`m` part of `(S/I) ⊗ Λ^q k^n`, with basis `mu e_J` for subsets `J`
/// (lexicographic) and standard monomials `mu` of degree `m - w(J)`.
pub(crate) struct ChainSpace {
    pub(crate) basis: Vec<(Vec<usize>, Monomial)>,
    index: HashMap<(Vec<usize>, Monomial), usize>,
}

impl ChainSpace {
    pub(crate) fn new<K: Coeff>(gb: &GroebnerBasis<K>, q: usize, m: i64) -> Self {
        let ring = gb.ring();
        let mut basis = Vec::new();
        if !gb.is_unit() && q <= ring.num_vars() {
            let mut cache: HashMap<u32, Vec<Monomial>> = HashMap::new();
            for j in subsets(ring.num_vars(), q) {
                let w: i64 = j.iter().map(|&v| ring.weights()[v] as i64).sum();
                if m < w {
                    continue;
                }
                let d = (m - w) as u32;
                let monos = cache.entry(d).or_insert_with(|| standard_monomials(gb, d));
                for mu in monos.iter() {
                    basis.push((j.clone(), *mu));
                }
            }
        }
        let index = basis.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();
        ChainSpace { basis, index }
    }

    pub(crate) fn len(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `sum_J p_J e_J` where every `p_J` is already in normal
    /// form.
    pub(crate) fn coordinates<K: Coeff>(&self, parts: &[(Vec<usize>, Polynomial<K>)]) -> SparseVec<K> {
        let mut v: SparseVec<K> = Vec::new();
        for (j, p) in parts {
            for (mu, c) in p.terms() {
                let i = self.index[&(j.clone(), *mu)];
                v.push((i, c.clone()));
            }
        }
        v.sort_by_key(|x| x.0);
        let mut merged: SparseVec<K> = Vec::with_capacity(v.len());
        for (i, c) in v {
            match merged.last_mut() {
                Some((li, lc)) if *li == i => *lc = lc.add(&c),
                _ => merged.push((i, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        merged
    }
}

/// Image of the basis element `mu e_J` under the Koszul differential:
/// `sum_t (-1)^t z_{j_t} mu e_{J - j_t}`, reduced modulo `I`.
pub(crate) fn boundary_of<K: Coeff>(
    gb: &GroebnerBasis<K>,
    j: &[usize],
    mu: &Monomial,
) -> Vec<(Vec<usize>, Polynomial<K>)> {
    let ring = gb.ring();
    let one = K::one(ring.field());
    j.iter()
        .enumerate()
        .map(|(t, &v)| {
            let c = if t % 2 == 0 { one.clone() } else { one.neg() };
            let p = Polynomial::term(ring, mu.mul(&ring.variable(v)), c);
            let mut rest = j.to_vec();
            rest.remove(t);
            (rest, gb.normal_form(&p).expect("same ring"))
        })
        .collect()
}

/// Koszul homology at `(q, m)` with a basis of representing cycles.
pub struct KoszulHomology<K> {
    pub q: usize,
    pub m: i64,
    pub(crate) chains: ChainSpace,
    pub(crate) boundaries: Echelon<K>,
    pub(crate) cycles: Vec<SparseVec<K>>,
}

impl<K: Coeff> KoszulHomology<K> {
    pub fn dimension(&self) -> usize {
        self.cycles.len()
    }

    /// Cycle `k` as `(J, coefficient polynomial)` pairs.
    pub fn cycle(&self, ring: &Ring, k: usize) -> Vec<(Vec<usize>, Polynomial<K>)> {
        chain_to_parts(ring, &self.chains, &self.cycles[k])
    }
}

pub(crate) fn chain_to_parts<K: Coeff>(ring: &Ring, chains: &ChainSpace, v: &SparseVec<K>) -> Vec<(Vec<usize>, Polynomial<K>)> {
    let mut grouped: Vec<(Vec<usize>, Vec<(Monomial, K)>)> = Vec::new();
    for (i, c) in v {
        let (j, mu) = &chains.basis[*i];
        match grouped.iter_mut().find(|(k, _)| k == j) {
            Some((_, terms)) => terms.push((*mu, c.clone())),
            None => grouped.push((j.clone(), vec![(*mu, c.clone())])),
        }
    }
    grouped.into_iter().map(|(j, t)| (j, Polynomial::from_terms(ring, t))).collect()
}

pub(crate) fn koszul_homology<K: Coeff>(ideal: &Ideal<K>, q: usize, m: i64) -> KoszulHomology<K> {
    let gb = ideal.groebner();
    let field = ideal.ring().field();
    let chains = ChainSpace::new(gb, q, m);
    let below = if q == 0 { None } else { Some(ChainSpace::new(gb, q - 1, m)) };
    let above = ChainSpace::new(gb, q + 1, m);

    let cycle_space: Vec<SparseVec<K>> = match &below {
        None => (0..chains.len()).map(|i| vec![(i, K::one(field))]).collect(),
        Some(below) => {
            let images: Vec<SparseVec<K>> = chains
                .basis
                .iter()
                .map(|(j, mu)| below.coordinates(&boundary_of(gb, j, mu)))
                .collect();
            kernel_of_vectors(&images, below.len(), field)
        }
    };
    let mut boundaries = Echelon::new(chains.len(), field);
    for (j, mu) in &above.basis {
        boundaries.insert(&chains.coordinates(&boundary_of(gb, j, mu)));
    }
    let mut quotient = boundaries.clone();
    let cycles = cycle_space
        .into_iter()
        .filter(|z| matches!(quotient.insert(z), Insert::Independent(_)))
        .collect();
    KoszulHomology {
        q,
        m,
        chains,
        boundaries,
        cycles,
    }
}

/// Dimension and a cycle basis of `Tor_q(S/I, k)_m`.
pub struct KoszulTor<K> {
    pub dimension: usize,
    pub cycles: Vec<Vec<(Vec<usize>, Polynomial<K>)>>,
}

pub fn koszul_tor<K: Coeff>(ideal: &Ideal<K>, q: usize, m: i64) -> KoszulTor<K> {
    let h = koszul_homology(ideal, q, m);
    let cycles = (0..h.dimension()).map(|k| h.cycle(ideal.ring(), k)).collect();
    KoszulTor {
        dimension: h.dimension(),
        cycles,
    }
}
