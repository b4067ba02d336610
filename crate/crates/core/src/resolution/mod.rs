//! Graded free resolutions of cyclic modules `S/I`.
//!
//! [`minimal_resolution`] builds a Schreyer frame from the Gröbner basis of
//! `I` and then splits off unit entries until every differential has
//! entries in `S_+`. [`koszul_tor`] computes the same Betti numbers
//! without any resolution and serves as the cross-check.

mod betti;
mod koszul;
mod module;
mod verify;

pub use betti::{regularity_and_depth, BettiTable, RegularityDepth};
pub use koszul::{koszul_tor, KoszulHomology, KoszulTor};
pub use verify::{verify_complex, ComplexReport};

pub(crate) use koszul::{chain_to_parts, koszul_homology, subsets as subsets_of};

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::ring::Ring;

use module::{divide, module_groebner, DivisorIndex, ModVec, ModuleOrder};

/// `⊕_i S(-d_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GradedFreeModule {
    pub twists: Vec<i64>,
}

impl GradedFreeModule {
    pub fn new(twists: Vec<i64>) -> Self {
        GradedFreeModule { twists }
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn is_zero(&self) -> bool {
        self.twists.is_empty()
    }

    /// Direct sum, `self` first.
    pub fn sum(&self, other: &Self) -> Self {
        let mut twists = self.twists.clone();
        twists.extend(&other.twists);
        GradedFreeModule { twists }
    }
}

/// A degree-0 map of graded free modules; entry `(i, j)` is zero or
/// homogeneous of degree `source[j] - target[i]`.
#[derive(Clone)]
pub struct GradedMatrix<K> {
    ring: Ring,
    source: GradedFreeModule,
    target: GradedFreeModule,
    rows: Vec<Vec<Polynomial<K>>>,
}

impl<K: Coeff> GradedMatrix<K> {
    pub fn new(
        ring: &Ring,
        source: GradedFreeModule,
        target: GradedFreeModule,
        rows: Vec<Vec<Polynomial<K>>>,
    ) -> Result<Self> {
        if rows.len() != target.rank() || rows.iter().any(|r| r.len() != source.rank()) {
            return Err(Error::Precondition(format!(
                "matrix shape does not match {} x {}",
                target.rank(),
                source.rank()
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            for (j, p) in row.iter().enumerate() {
                if p.ring() != ring {
                    return Err(Error::RingMismatch);
                }
                if p.is_zero() {
                    continue;
                }
                let want = source.twists[j] - target.twists[i];
                if p.homogeneous_degree().map(i64::from) != Some(want) {
                    return Err(Error::DegreeMismatch { row: i, col: j });
                }
            }
        }
        Ok(GradedMatrix {
            ring: ring.clone(),
            source,
            target,
            rows,
        })
    }

    pub fn zero(ring: &Ring, source: GradedFreeModule, target: GradedFreeModule) -> Self {
        let rows = vec![vec![Polynomial::zero(ring); source.rank()]; target.rank()];
        GradedMatrix {
            ring: ring.clone(),
            source,
            target,
            rows,
        }
    }

    pub fn identity(ring: &Ring, module: &GradedFreeModule) -> Self {
        let mut m = Self::zero(ring, module.clone(), module.clone());
        for i in 0..module.rank() {
            m.rows[i][i] = Polynomial::one(ring);
        }
        m
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn source(&self) -> &GradedFreeModule {
        &self.source
    }

    pub fn target(&self) -> &GradedFreeModule {
        &self.target
    }

    pub fn nrows(&self) -> usize {
        self.target.rank()
    }

    pub fn ncols(&self) -> usize {
        self.source.rank()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial<K> {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<Polynomial<K>>] {
        &self.rows
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial<K>> {
        self.rows.iter().map(|r| r[j].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(|p| p.is_zero())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.source != other.target {
            return Err(Error::Precondition("composition of incompatible maps".into()));
        }
        let rows = (0..self.nrows())
            .map(|i| {
                (0..other.ncols())
                    .map(|j| {
                        let mut acc = Polynomial::zero(&self.ring);
                        for k in 0..self.ncols() {
                            if !self.rows[i][k].is_zero() && !other.rows[k][j].is_zero() {
                                acc = acc.add_unchecked(&self.rows[i][k].mul_unchecked(&other.rows[k][j]));
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        Ok(GradedMatrix {
            ring: self.ring.clone(),
            source: other.source.clone(),
            target: self.target.clone(),
            rows,
        })
    }

    /// Positions of nonzero constant entries.
    pub fn unit_entries(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            for (j, p) in row.iter().enumerate() {
                if !p.is_zero() && p.is_constant() {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Reduction modulo `S_+`: the matrix of constant terms.
    pub fn constant_part(&self) -> Vec<Vec<K>> {
        let one = self.ring.one_monomial();
        let zero = K::zero(self.ring.field());
        self.rows
            .iter()
            .map(|r| r.iter().map(|p| p.coeff_of(&one).cloned().unwrap_or_else(|| zero.clone())).collect())
            .collect()
    }

    fn drop_row(&mut self, i: usize) {
        self.rows.remove(i);
        self.target.twists.remove(i);
    }

    fn drop_column(&mut self, j: usize) {
        for r in &mut self.rows {
            r.remove(j);
        }
        self.source.twists.remove(j);
    }
}

impl<K: Coeff> PartialEq for GradedMatrix<K> {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.source == other.source && self.target == other.target && self.rows == other.rows
    }
}

impl<K: Coeff> fmt::Debug for GradedMatrix<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:?} <- {:?}", self.target.twists, self.source.twists)?;
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|p| p.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// `F_0 <- F_1 <- ... <- F_l` resolving `S/I`.
#[derive(Clone)]
pub struct FreeResolution<K> {
    ideal: Ideal<K>,
    modules: Vec<GradedFreeModule>,
    differentials: Vec<GradedMatrix<K>>,
    minimal: bool,
}

impl<K: Coeff> FreeResolution<K> {
    /// Assembles a complex from its differentials `d_1, d_2, ...`; the
    /// minimal flag is computed, not trusted.
    pub fn from_differentials(ideal: &Ideal<K>, f0: GradedFreeModule, differentials: Vec<GradedMatrix<K>>) -> Result<Self> {
        let mut modules = vec![f0];
        for d in &differentials {
            if d.target() != modules.last().unwrap() || d.ring() != ideal.ring() {
                return Err(Error::Precondition("differentials do not chain".into()));
            }
            modules.push(d.source().clone());
        }
        let minimal = differentials.iter().all(|d| d.unit_entries().is_empty());
        Ok(FreeResolution {
            ideal: ideal.clone(),
            modules,
            differentials,
            minimal,
        })
    }

    pub fn ring(&self) -> &Ring {
        self.ideal.ring()
    }

    pub fn ideal(&self) -> &Ideal<K> {
        &self.ideal
    }

    pub fn modules(&self) -> &[GradedFreeModule] {
        &self.modules
    }

    /// `F_q`, or the zero module beyond the length.
    pub fn module(&self, q: usize) -> GradedFreeModule {
        self.modules.get(q).cloned().unwrap_or_default()
    }

    pub fn differentials(&self) -> &[GradedMatrix<K>] {
        &self.differentials
    }

    /// `d_q : F_q -> F_{q-1}` for `q >= 1`.
    pub fn differential(&self, q: usize) -> Option<&GradedMatrix<K>> {
        q.checked_sub(1).and_then(|k| self.differentials.get(k))
    }

    pub fn length(&self) -> usize {
        self.differentials.len()
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    /// Splits off trivial summands `S(-d) -> S(-d)` at unit entries until
    /// none remain.
    pub fn minimalize(mut self) -> Self {
        for k in 0..self.differentials.len() {
            while let Some(&(i, j)) = self.differentials[k].unit_entries().first() {
                self.cancel(k, i, j);
            }
        }
        while self.differentials.last().is_some_and(|d| d.ncols() == 0) {
            self.differentials.pop();
            self.modules.pop();
        }
        self.minimal = true;
        self.sort_by_degree();
        self
    }

    /// Reorders each basis by ascending twist (stable).
    fn sort_by_degree(&mut self) {
        let perms: Vec<Vec<usize>> = self
            .modules
            .iter()
            .map(|f| {
                let mut p: Vec<usize> = (0..f.rank()).collect();
                p.sort_by_key(|&i| f.twists[i]);
                p
            })
            .collect();
        for (q, f) in self.modules.iter_mut().enumerate() {
            f.twists = perms[q].iter().map(|&i| f.twists[i]).collect();
        }
        for (k, d) in self.differentials.iter_mut().enumerate() {
            let (rows_p, cols_p) = (&perms[k], &perms[k + 1]);
            d.rows = rows_p.iter().map(|&i| cols_p.iter().map(|&j| d.rows[i][j].clone()).collect()).collect();
            d.target = self.modules[k].clone();
            d.source = self.modules[k + 1].clone();
        }
    }

    // d = [[u, r], [c, D]] with u at (i, j) becomes D - c u^-1 r; the next
    // differential loses row j, the previous one loses column i.
    fn cancel(&mut self, k: usize, i: usize, j: usize) {
        let d = &mut self.differentials[k];
        let u_inv = d.rows[i][j].leading_coeff().expect("unit").inv().expect("unit");
        let pivot_row = d.rows[i].clone();
        for a in 0..d.nrows() {
            if a == i || d.rows[a][j].is_zero() {
                continue;
            }
            let factor = d.rows[a][j].scale(&u_inv);
            for b in 0..d.ncols() {
                if b != j && !pivot_row[b].is_zero() {
                    let t = factor.mul_unchecked(&pivot_row[b]);
                    d.rows[a][b] = d.rows[a][b].sub_unchecked(&t);
                }
            }
        }
        d.drop_row(i);
        d.drop_column(j);
        if let Some(next) = self.differentials.get_mut(k + 1) {
            next.drop_row(j);
        }
        if k > 0 {
            self.differentials[k - 1].drop_column(i);
        }
        self.modules[k].twists.remove(i);
        self.modules[k + 1].twists.remove(j);
    }

    pub fn betti(&self) -> Result<BettiTable> {
        if !self.minimal {
            return Err(Error::NotMinimal);
        }
        Ok(BettiTable::from_modules(&self.modules))
    }
}

impl<K: Coeff> fmt::Debug for FreeResolution<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (q, d) in self.differentials.iter().enumerate() {
            writeln!(f, "d_{}:", q + 1)?;
            write!(f, "{d:?}")?;
        }
        Ok(())
    }
}

/// Generators of the kernel of `m`, as the columns of a matrix into
/// `m.source()`.
pub fn syzygies<K: Coeff>(m: &GradedMatrix<K>) -> Result<GradedMatrix<K>> {
    let m = GradedMatrix::new(m.ring(), m.source().clone(), m.target().clone(), m.rows().to_vec())?;
    let ring = m.ring().clone();
    let (rg, rf) = (m.nrows(), m.ncols());
    // GB of the columns stacked on an identity block; elements whose
    // leading term falls in the identity block are syzygies.
    let order = ModuleOrder::block(&ring, rg);
    let gens: Vec<ModVec<K>> = (0..rf)
        .map(|j| {
            let mut entries = m.column(j);
            entries.extend((0..rf).map(|k| if k == j { Polynomial::one(&ring) } else { Polynomial::zero(&ring) }));
            ModVec::from_dense(&order, &entries).monic()
        })
        .collect();
    let gb = module_groebner(&order, &gens, rg + rf);
    let mut kernel: Vec<Vec<Polynomial<K>>> = gb
        .iter()
        .filter(|v| v.leading().is_some_and(|l| l.1 >= rg))
        .map(|v| v.to_dense(&ring, rg + rf).split_off(rg))
        .collect();
    let degree = |col: &[Polynomial<K>]| -> i64 {
        col.iter()
            .enumerate()
            .find(|(_, p)| !p.is_zero())
            .map(|(k, p)| p.homogeneous_degree().unwrap() as i64 + m.source().twists[k])
            .expect("nonzero syzygy")
    };
    kernel.sort_by_key(|c| degree(c));
    let kernel = minimal_subset(&ring, m.source(), kernel);
    let twists: Vec<i64> = kernel.iter().map(|c| degree(c)).collect();
    let rows = (0..rf).map(|k| kernel.iter().map(|c| c[k].clone()).collect()).collect();
    GradedMatrix::new(&ring, GradedFreeModule::new(twists), m.source().clone(), rows)
}

/// Drops generators that lie in the submodule generated by the earlier
/// ones (input sorted by degree), decided on graded pieces.
fn minimal_subset<K: Coeff>(ring: &Ring, module: &GradedFreeModule, gens: Vec<Vec<Polynomial<K>>>) -> Vec<Vec<Polynomial<K>>> {
    use crate::linalg::{Echelon, Insert};
    use std::collections::HashMap;
    let deg_of = |col: &[Polynomial<K>]| -> i64 {
        col.iter()
            .enumerate()
            .find(|(_, p)| !p.is_zero())
            .map(|(k, p)| p.homogeneous_degree().unwrap() as i64 + module.twists[k])
            .unwrap()
    };
    let mut kept: Vec<Vec<Polynomial<K>>> = Vec::new();
    let mut idx = 0;
    while idx < gens.len() {
        let d = deg_of(&gens[idx]);
        let mut coords: HashMap<(crate::ring::Monomial, usize), usize> = HashMap::new();
        for (k, t) in module.twists.iter().enumerate() {
            if d >= *t {
                for mono in ring.monomials_of_degree((d - t) as u32) {
                    let n = coords.len();
                    coords.insert((mono, k), n);
                }
            }
        }
        let coords = &coords;
        let vector = |col: &[Polynomial<K>]| {
            let mut v: Vec<(usize, K)> = col
                .iter()
                .enumerate()
                .flat_map(|(k, p)| p.terms().iter().map(move |(m, c)| (coords[&(*m, k)], c.clone())))
                .collect();
            v.sort_by_key(|x| x.0);
            v
        };
        let mut e = Echelon::new(coords.len(), ring.field());
        for g in &kept {
            let e_deg = deg_of(g);
            for mono in ring.monomials_of_degree((d - e_deg) as u32) {
                let shifted: Vec<Polynomial<K>> = g.iter().map(|p| p.mul_monomial(&mono)).collect();
                e.insert(&vector(&shifted));
            }
        }
        while idx < gens.len() && deg_of(&gens[idx]) == d {
            if let Insert::Independent(_) = e.insert(&vector(&gens[idx])) {
                kept.push(gens[idx].clone());
            }
            idx += 1;
        }
    }
    kept
}

/// One level of a Schreyer frame: monic elements of `F_{q-1}` forming a
/// Gröbner basis for `order`, sorted lex-descending inside each component.
struct Level<K> {
    order: ModuleOrder,
    elements: Vec<ModVec<K>>,
    rank_below: usize,
}

fn sort_frame<K: Coeff>(ring: &Ring, elements: &mut [ModVec<K>]) {
    elements.sort_by(|a, b| {
        let (ma, ca, _) = a.leading().unwrap();
        let (mb, cb, _) = b.leading().unwrap();
        ca.cmp(cb).then_with(|| ring.lex_cmp(mb, ma))
    });
}

/// Schreyer syzygies of a level, pruned to a minimal set of leading terms.
fn next_level<K: Coeff>(ring: &Ring, level: &Level<K>) -> Result<Option<Level<K>>> {
    let lts: Vec<(crate::ring::Monomial, usize)> =
        level.elements.iter().map(|v| { let l = v.leading().unwrap(); (l.0, l.1) }).collect();
    let order = level.order.induced(&lts);
    let index = DivisorIndex::new(&level.elements, level.rank_below);
    let one = K::one(ring.field());
    let mut syz: Vec<ModVec<K>> = Vec::new();
    for i in 0..lts.len() {
        let mut candidates: Vec<(crate::ring::Monomial, usize)> = Vec::new();
        for j in i + 1..lts.len() {
            if lts[j].1 != lts[i].1 {
                continue;
            }
            let lcm = ring.lcm(&lts[i].0, &lts[j].0);
            candidates.push((lts[i].0.quotient(&lcm), j));
        }
        let minimal: Vec<(crate::ring::Monomial, usize)> = candidates
            .iter()
            .enumerate()
            .filter(|(a, (m, _))| {
                !candidates
                    .iter()
                    .enumerate()
                    .any(|(b, (n, _))| b != *a && n.divides(m) && (n != m || b < *a))
            })
            .map(|(_, c)| *c)
            .collect();
        for (mi, j) in minimal {
            let lcm = ring.lcm(&lts[i].0, &lts[j].0);
            let mj = lts[j].0.quotient(&lcm);
            let mut s = ModVec::zero();
            s.add_scaled(&level.order, &one, &mi, &level.elements[i]);
            s.add_scaled(&level.order, &one.neg(), &mj, &level.elements[j]);
            let (quot, rem) = divide(&level.order, &s, &level.elements, &index);
            if !rem.is_zero() {
                return Err(Error::Internal("Schreyer frame is not a Gröbner basis".into()));
            }
            let mut terms = vec![(mi, i, one.clone()), (mj, j, one.neg())];
            terms.extend(quot.into_iter().map(|(u, k, c)| (u, k, c.neg())));
            let v = ModVec::from_terms(&order, terms);
            if v.leading().map(|l| (l.0, l.1)) != Some((mi, i)) {
                return Err(Error::Internal("unexpected Schreyer leading term".into()));
            }
            syz.push(v);
        }
    }
    if syz.is_empty() {
        return Ok(None);
    }
    sort_frame(ring, &mut syz);
    Ok(Some(Level {
        order,
        elements: syz,
        rank_below: lts.len(),
    }))
}

/// Schreyer resolution of `S/I`, before minimalization.
pub fn schreyer_resolution<K: Coeff>(ideal: &Ideal<K>) -> Result<FreeResolution<K>> {
    let ring = ideal.ring().clone();
    let f0 = GradedFreeModule::new(vec![0]);
    let gb = ideal.groebner();
    if gb.is_empty() {
        return FreeResolution::from_differentials(ideal, f0, Vec::new());
    }
    let order0 = ModuleOrder::top(&ring, 1);
    let mut elements: Vec<ModVec<K>> = gb.elements().iter().map(|g| ModVec::from_dense(&order0, &[g.clone()])).collect();
    sort_frame(&ring, &mut elements);
    let mut level = Level {
        order: order0,
        elements,
        rank_below: 1,
    };
    let mut modules = vec![f0];
    let mut differentials = Vec::new();
    loop {
        let below = modules.last().unwrap().clone();
        let twists: Vec<i64> = level
            .elements
            .iter()
            .map(|v| {
                let (m, c, _) = v.leading().unwrap();
                m.degree() as i64 + below.twists[*c]
            })
            .collect();
        let source = GradedFreeModule::new(twists);
        let cols: Vec<Vec<Polynomial<K>>> = level.elements.iter().map(|v| v.to_dense(&ring, below.rank())).collect();
        let rows = (0..below.rank()).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
        differentials.push(GradedMatrix::new(&ring, source.clone(), below, rows)?);
        modules.push(source);
        if differentials.len() > ring.num_vars() {
            return Err(Error::Internal("resolution longer than the number of variables".into()));
        }
        match next_level(&ring, &level)? {
            Some(next) => level = next,
            None => break,
        }
    }
    FreeResolution::from_differentials(ideal, modules.swap_remove(0), differentials)
}

/// Graded minimal free resolution of `S/I`.
pub fn minimal_resolution<K: Coeff>(ideal: &Ideal<K>) -> Result<FreeResolution<K>> {
    let res = schreyer_resolution(ideal)?.minimalize();
    if res.length() > ideal.ring().num_vars() {
        return Err(Error::Internal("minimal resolution exceeds the Hilbert syzygy bound".into()));
    }
    Ok(res)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{FieldDescriptor, Rational};
    use crate::ring::RingDescriptor;

    type P = Polynomial<Rational>;

    fn ring(n: usize) -> Ring {
        RingDescriptor::standard(FieldDescriptor::Rationals, n).unwrap()
    }

    fn twisted_cubic(r: &Ring) -> Vec<P> {
        vec![
            P::from_int_terms(r, &[(1, &[1, 0, 1]), (-1, &[0, 2])]),
            P::from_int_terms(r, &[(1, &[0, 1, 0, 1]), (-1, &[0, 0, 2])]),
            P::from_int_terms(r, &[(1, &[1, 0, 0, 1]), (-1, &[0, 1, 1])]),
        ]
    }

    fn row_matrix(r: &Ring, gens: &[P]) -> GradedMatrix<Rational> {
        let twists = gens.iter().map(|g| g.homogeneous_degree().unwrap() as i64).collect();
        GradedMatrix::new(r, GradedFreeModule::new(twists), GradedFreeModule::new(vec![0]), vec![gens.to_vec()]).unwrap()
    }

    #[test]
    fn degree_convention_is_enforced() {
        let r = ring(4);
        let g = twisted_cubic(&r);
        let bad = GradedMatrix::new(&r, GradedFreeModule::new(vec![3]), GradedFreeModule::new(vec![0]), vec![vec![g[0].clone()]]);
        assert_eq!(bad.unwrap_err(), Error::DegreeMismatch { row: 0, col: 0 });
    }

    #[test]
    fn twisted_cubic_syzygies() {
        let r = ring(4);
        let m = row_matrix(&r, &twisted_cubic(&r));
        let s = syzygies(&m).unwrap();
        assert_eq!(s.source().twists, vec![3, 3]);
        assert!(m.compose(&s).unwrap().is_zero());
    }

    #[test]
    fn syzygies_of_regular_sequences() {
        let r = ring(4);
        let f = P::from_int_terms(&r, &[(1, &[2]), (1, &[0, 1, 1])]);
        let single = syzygies(&row_matrix(&r, &[f.clone()])).unwrap();
        assert_eq!(single.ncols(), 0);
        let g = P::from_int_terms(&r, &[(1, &[0, 0, 0, 3]), (-1, &[0, 3])]);
        let pair = syzygies(&row_matrix(&r, &[f.clone(), g.clone()])).unwrap();
        assert_eq!(pair.ncols(), 1);
        let col = pair.column(0);
        // a scalar multiple of (g, -f)
        let c = col[0].leading_coeff().unwrap().div(g.leading_coeff().unwrap()).unwrap();
        assert_eq!(col[0], g.scale(&c));
        assert_eq!(col[1], f.scale(&c).neg());
    }

    #[test]
    fn twisted_cubic_resolution() {
        let r = ring(4);
        let i = Ideal::new(&r, twisted_cubic(&r)).unwrap();
        let res = minimal_resolution(&i).unwrap();
        assert!(res.is_minimal());
        assert_eq!(res.length(), 2);
        assert_eq!(res.module(0).twists, vec![0]);
        assert_eq!(res.module(1).twists, vec![2, 2, 2]);
        assert_eq!(res.module(2).twists, vec![3, 3]);
        let d1 = res.differential(1).unwrap();
        let d2 = res.differential(2).unwrap();
        assert!(d1.compose(d2).unwrap().is_zero());
    }

    #[test]
    fn complete_intersection_is_koszul() {
        let r = ring(4);
        let f = P::from_int_terms(&r, &[(1, &[1, 0, 0, 1]), (-1, &[0, 1, 1])]);
        let g = P::from_int_terms(&r, &[(1, &[3]), (1, &[0, 3]), (1, &[0, 0, 3]), (1, &[0, 0, 0, 3])]);
        let res = minimal_resolution(&Ideal::new(&r, vec![f, g]).unwrap()).unwrap();
        assert_eq!(res.module(1).twists, vec![2, 3]);
        assert_eq!(res.module(2).twists, vec![5]);
        assert_eq!(res.length(), 2);
    }

    #[test]
    fn zero_and_unit_ideals() {
        let r = ring(3);
        let zero = minimal_resolution(&Ideal::<Rational>::zero(&r)).unwrap();
        assert_eq!(zero.length(), 0);
        assert_eq!(zero.module(0).twists, vec![0]);
        let unit = minimal_resolution(&Ideal::<Rational>::unit(&r)).unwrap();
        assert!(unit.module(0).is_zero());
    }

    #[test]
    fn schreyer_frame_is_a_complex() {
        let r = ring(4);
        let mut g = twisted_cubic(&r);
        g.push(g[0].mul_monomial(&r.variable(3)));
        let i = Ideal::new(&r, g).unwrap();
        let res = schreyer_resolution(&i).unwrap();
        for q in 1..res.length() {
            let prod = res.differential(q).unwrap().compose(res.differential(q + 1).unwrap()).unwrap();
            assert!(prod.is_zero());
        }
    }
}
