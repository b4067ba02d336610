//! Comparison maps between minimal resolutions and the maps they induce on
//! `Tor(-, k)`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::linalg::{kernel_of_vectors, rank_of_vectors, Echelon, SparseVec};
use crate::poly::Polynomial;
use crate::resolution::{FreeResolution, GradedFreeModule, GradedMatrix};
use crate::ring::{Monomial, Ring};

use super::check_containment;

/// A degree-0 chain map `phi_q : F_q -> G_q` over the surjection
/// `S/I_W -> S/I_V`, with `F` resolving `S/I_W` and `G` resolving `S/I_V`.
#[derive(Clone)]
pub struct ChainMap<K> {
    source: FreeResolution<K>,
    target: FreeResolution<K>,
    maps: Vec<GradedMatrix<K>>,
}

impl<K: Coeff> ChainMap<K> {
    pub fn source(&self) -> &FreeResolution<K> {
        &self.source
    }

    pub fn target(&self) -> &FreeResolution<K> {
        &self.target
    }

    /// `phi_q` for `0 <= q <= length of the source`.
    pub fn map(&self, q: usize) -> Option<&GradedMatrix<K>> {
        self.maps.get(q)
    }

    pub fn maps(&self) -> &[GradedMatrix<K>] {
        &self.maps
    }

    /// Whether `d^G_q phi_q = phi_{q-1} d^F_q` for every `q >= 1`.
    pub fn commutes(&self) -> bool {
        (1..self.maps.len()).all(|q| {
            let dg = differential_or_zero(&self.target, q);
            let df = self.source.differential(q).expect("within source length");
            match (dg.compose(&self.maps[q]), self.maps[q - 1].compose(df)) {
                (Ok(a), Ok(b)) => a == b,
                _ => false,
            }
        })
    }

    /// `mu_q`: the constant part of `phi_q`, split into degree blocks.
    pub fn tor_map(&self, q: usize) -> TorMap<K> {
        let source = self.source.module(q);
        let target = self.target.module(q);
        let Some(phi) = self.maps.get(q) else {
            return TorMap { q, blocks: Vec::new() };
        };
        let constant = phi.constant_part();
        let mut degrees = source.twists.clone();
        degrees.sort_unstable();
        degrees.dedup();
        let field = phi.ring().field();
        let blocks = degrees
            .into_iter()
            .map(|m| {
                let cols: Vec<usize> = (0..source.rank()).filter(|&j| source.twists[j] == m).collect();
                let rows: Vec<usize> = (0..target.rank()).filter(|&i| target.twists[i] == m).collect();
                let matrix: Vec<Vec<K>> = rows.iter().map(|&i| cols.iter().map(|&j| constant[i][j].clone()).collect()).collect();
                let columns = block_columns(&matrix, cols.len());
                let rank = rank_of_vectors(&columns, rows.len(), field);
                TorBlock {
                    m,
                    source_generators: cols,
                    target_generators: rows,
                    matrix,
                    rank,
                }
            })
            .collect();
        TorMap { q, blocks }
    }
}

fn block_columns<K: Coeff>(matrix: &[Vec<K>], ncols: usize) -> Vec<SparseVec<K>> {
    (0..ncols)
        .map(|j| matrix.iter().enumerate().filter(|(_, r)| !r[j].is_zero()).map(|(i, r)| (i, r[j].clone())).collect())
        .collect()
}

/// The degree-`m` part of `mu_q`, a matrix over the field from the
/// degree-`m` generators of `F_q` to those of `G_q`.
#[derive(Clone, Debug)]
pub struct TorBlock<K> {
    pub m: i64,
    /// Indices into the basis of `F_q`.
    pub source_generators: Vec<usize>,
    /// Indices into the basis of `G_q`.
    pub target_generators: Vec<usize>,
    /// `target_generators.len() x source_generators.len()`.
    pub matrix: Vec<Vec<K>>,
    pub rank: usize,
}

impl<K: Coeff> TorBlock<K> {
    pub fn is_injective(&self) -> bool {
        self.rank == self.source_generators.len()
    }

    /// Basis of the kernel, in coordinates over `source_generators`.
    pub fn kernel(&self, ring: &Ring) -> Vec<SparseVec<K>> {
        let columns = block_columns(&self.matrix, self.source_generators.len());
        kernel_of_vectors(&columns, self.target_generators.len(), ring.field())
    }

    pub fn apply(&self, x: &SparseVec<K>, ring: &Ring) -> Vec<K> {
        let zero = K::zero(ring.field());
        self.matrix
            .iter()
            .map(|row| x.iter().fold(zero.clone(), |acc, (j, c)| acc.add(&row[*j].mul(c))))
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct TorMap<K> {
    pub q: usize,
    pub blocks: Vec<TorBlock<K>>,
}

pub(crate) fn differential_or_zero<K: Coeff>(res: &FreeResolution<K>, q: usize) -> GradedMatrix<K> {
    match res.differential(q) {
        Some(d) => d.clone(),
        None => GradedMatrix::zero(res.ring(), res.module(q), res.module(q - 1)),
    }
}

/// Solves `d(u) = v` for homogeneous `v` of one fixed degree `a` by linear
/// algebra on the degree-`a` parts of source and target.
struct DegreeSolver<K> {
    coords: HashMap<(usize, Monomial), usize>,
    unknowns: Vec<(usize, Monomial)>,
    echelon: Echelon<K>,
}

impl<K: Coeff> DegreeSolver<K> {
    fn new(ring: &Ring, d: &GradedMatrix<K>, a: i64) -> Self {
        let mut coords = HashMap::new();
        for (i, &c) in d.target().twists.iter().enumerate() {
            if a >= c {
                for mu in ring.monomials_of_degree((a - c) as u32) {
                    let n = coords.len();
                    coords.insert((i, mu), n);
                }
            }
        }
        let mut solver = DegreeSolver {
            echelon: Echelon::with_tracking(coords.len(), ring.field()),
            coords,
            unknowns: Vec::new(),
        };
        for (k, &b) in d.source().twists.iter().enumerate() {
            if a < b {
                continue;
            }
            let column = d.column(k);
            for mu in ring.monomials_of_degree((a - b) as u32) {
                let image: Vec<Polynomial<K>> = column.iter().map(|p| p.mul_monomial(&mu)).collect();
                let v = solver.vector(&image);
                solver.echelon.insert(&v);
                solver.unknowns.push((k, mu));
            }
        }
        solver
    }

    fn vector(&self, parts: &[Polynomial<K>]) -> SparseVec<K> {
        let mut v: SparseVec<K> = parts
            .iter()
            .enumerate()
            .flat_map(|(i, p)| p.terms().iter().map(move |(m, c)| (self.coords[&(i, *m)], c.clone())))
            .collect();
        v.sort_by_key(|x| x.0);
        v
    }

    fn solve(&self, ring: &Ring, target: &[Polynomial<K>], rank: usize) -> Option<Vec<Polynomial<K>>> {
        let combo = self.echelon.solve(&self.vector(target))?;
        let mut terms: Vec<Vec<(Monomial, K)>> = vec![Vec::new(); rank];
        for (u, c) in combo {
            let (k, mu) = self.unknowns[u];
            terms[k].push((mu, c));
        }
        Some(terms.into_iter().map(|t| Polynomial::from_terms(ring, t)).collect())
    }
}

/// Lifts `S/I_W -> S/I_V` to a chain map between minimal resolutions,
/// solving for each `phi_q` column by column and checking commutation.
pub fn lift_chain_map<K: Coeff>(res_w: &FreeResolution<K>, res_v: &FreeResolution<K>) -> Result<ChainMap<K>> {
    let ring = res_w.ring().clone();
    if &ring != res_v.ring() {
        return Err(Error::RingMismatch);
    }
    if !check_containment(res_v.ideal(), res_w.ideal())? {
        return Err(Error::ContainmentFailed);
    }
    if !res_w.is_minimal() || !res_v.is_minimal() {
        return Err(Error::NotMinimal);
    }
    let (f0, g0) = (res_w.module(0), res_v.module(0));
    let phi0 = if f0.rank() == 1 && g0.rank() == 1 {
        GradedMatrix::identity(&ring, &f0)
    } else {
        GradedMatrix::zero(&ring, f0, g0)
    };
    let mut maps = vec![phi0];
    for q in 1..=res_w.length() {
        let df = res_w.differential(q).expect("within length");
        let wanted = maps[q - 1].compose(df)?;
        let dg = differential_or_zero(res_v, q);
        let gq: GradedFreeModule = res_v.module(q);
        let fq = df.source().clone();
        let mut solvers: HashMap<i64, DegreeSolver<K>> = HashMap::new();
        let mut columns = Vec::with_capacity(fq.rank());
        for (j, &a) in fq.twists.iter().enumerate() {
            let solver = solvers.entry(a).or_insert_with(|| DegreeSolver::new(&ring, &dg, a));
            let u = solver
                .solve(&ring, &wanted.column(j), gq.rank())
                .ok_or_else(|| Error::Internal(format!("no lift of column {j} in homological degree {q}")))?;
            columns.push(u);
        }
        let rows = (0..gq.rank()).map(|i| columns.iter().map(|c| c[i].clone()).collect()).collect();
        maps.push(GradedMatrix::new(&ring, fq, gq, rows)?);
    }
    let chain = ChainMap {
        source: res_w.clone(),
        target: res_v.clone(),
        maps,
    };
    if !chain.commutes() {
        return Err(Error::Internal("lifted chain map does not commute with the differentials".into()));
    }
    Ok(chain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{FieldDescriptor, Rational};
    use crate::ideal::Ideal;
    use crate::resolution::minimal_resolution;
    use crate::ring::RingDescriptor;

    type P = Polynomial<Rational>;

    fn tc() -> (Ring, Vec<P>) {
        let r = RingDescriptor::standard(FieldDescriptor::Rationals, 4).unwrap();
        let g = vec![
            P::from_int_terms(&r, &[(1, &[1, 0, 1]), (-1, &[0, 2])]),
            P::from_int_terms(&r, &[(1, &[0, 1, 0, 1]), (-1, &[0, 0, 2])]),
            P::from_int_terms(&r, &[(1, &[1, 0, 0, 1]), (-1, &[0, 1, 1])]),
        ];
        (r, g)
    }

    #[test]
    fn quadric_into_twisted_cubic() {
        let (r, g) = tc();
        let v = minimal_resolution(&Ideal::new(&r, g.clone()).unwrap()).unwrap();
        let w = minimal_resolution(&Ideal::new(&r, vec![g[0].clone()]).unwrap()).unwrap();
        let phi = lift_chain_map(&w, &v).unwrap();
        assert!(phi.commutes());
        let phi1 = phi.map(1).unwrap();
        assert_eq!((phi1.nrows(), phi1.ncols()), (3, 1));
        // d^V_1 phi_1 e = q1, so phi_1 e is a unit vector up to basis
        let image: Vec<P> = phi1.column(0);
        let d1 = v.differential(1).unwrap();
        let mut acc = P::zero(&r);
        for (i, c) in image.iter().enumerate() {
            assert!(c.is_constant() || c.is_zero());
            acc = acc.add(&d1.entry(0, i).mul(c).unwrap()).unwrap();
        }
        assert_eq!(acc, *w.differential(1).unwrap().entry(0, 0));
        let mu = phi.tor_map(1);
        assert_eq!(mu.blocks.len(), 1);
        assert!(mu.blocks[0].is_injective());
    }

    #[test]
    fn identity_and_zero_ideal() {
        let (r, g) = tc();
        let v = minimal_resolution(&Ideal::new(&r, g).unwrap()).unwrap();
        let phi = lift_chain_map(&v, &v).unwrap();
        for q in 1..=2 {
            let mu = phi.tor_map(q);
            assert!(mu.blocks.iter().all(|b| b.is_injective()));
        }
        let p = minimal_resolution(&Ideal::zero(&r)).unwrap();
        let phi = lift_chain_map(&p, &v).unwrap();
        assert_eq!(phi.maps().len(), 1);
        assert!(phi.tor_map(1).blocks.is_empty());
    }

    #[test]
    fn cubic_multiple_is_killed() {
        let (r, g) = tc();
        let v = minimal_resolution(&Ideal::new(&r, g.clone()).unwrap()).unwrap();
        let f = g[0].mul(&P::variable(&r, 3)).unwrap();
        let w = minimal_resolution(&Ideal::new(&r, vec![f]).unwrap()).unwrap();
        let phi = lift_chain_map(&w, &v).unwrap();
        let mu = phi.tor_map(1);
        assert_eq!(mu.blocks.len(), 1);
        assert_eq!(mu.blocks[0].m, 3);
        assert_eq!(mu.blocks[0].rank, 0);
        assert_eq!(mu.blocks[0].kernel(&r).len(), 1);
    }

    #[test]
    fn containment_is_required() {
        let (r, g) = tc();
        let v = minimal_resolution(&Ideal::new(&r, vec![g[0].clone()]).unwrap()).unwrap();
        let w = minimal_resolution(&Ideal::new(&r, g).unwrap()).unwrap();
        assert_eq!(lift_chain_map(&w, &v).err(), Some(Error::ContainmentFailed));
    }
}
