use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::groebner::dimension_degree;
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::resolution::{minimal_resolution, verify_complex, BettiTable, ComplexReport, FreeResolution, GradedFreeModule, GradedMatrix};

use super::invariants::{invariants, stable_hilbert};
use super::{pgshell_check, Method, Verdict};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TensorReport {
    pub codim_y: i64,
    pub codim_z: i64,
    pub codim_sum: i64,
    pub complex: ComplexReport,
    pub betti: BettiTable,
    pub convolution: BettiTable,
    pub direct: BettiTable,
    pub matches_convolution: bool,
    pub matches_direct: bool,
    pub y_over_sum: Verdict,
    pub z_over_sum: Verdict,
}

impl TensorReport {
    pub fn passed(&self) -> bool {
        self.complex.passed()
            && self.matches_convolution
            && self.matches_direct
            && self.y_over_sum == Verdict::PgShell
            && self.z_over_sum == Verdict::PgShell
    }
}

fn codim<K: Coeff>(ideal: &Ideal<K>) -> Result<i64> {
    let n = ideal.ring().num_vars() as i64;
    let (dim, _) = dimension_degree(&stable_hilbert(ideal, n as u32 + 2)?)?;
    Ok(n - 1 - dim)
}

/// `F ⊗ G` for resolutions `F` of `S/I_Y` and `G` of `S/I_Z`, with
/// `d(x ⊗ y) = dx ⊗ y + (-1)^p x ⊗ dy` for `x` in `F_p`. Basis of the
/// degree-`q` module: `e_i ⊗ e_j` ordered by `p`, then `i`, then `j`.
pub fn tensor_complex<K: Coeff>(f: &FreeResolution<K>, g: &FreeResolution<K>, sum: &Ideal<K>) -> Result<FreeResolution<K>> {
    let ring = f.ring().clone();
    let basis = |q: usize| -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for p in 0..=q.min(f.length()) {
            if q - p > g.length() {
                continue;
            }
            for i in 0..f.module(p).rank() {
                for j in 0..g.module(q - p).rank() {
                    out.push((p, i, j));
                }
            }
        }
        out
    };
    let twists = |q: usize, b: &[(usize, usize, usize)]| -> GradedFreeModule {
        GradedFreeModule::new(b.iter().map(|&(p, i, j)| f.module(p).twists[i] + g.module(q - p).twists[j]).collect())
    };
    let mut prev = basis(0);
    let t0 = twists(0, &prev);
    let mut ds = Vec::new();
    for q in 1..=f.length() + g.length() {
        let cur = basis(q);
        let index: HashMap<(usize, usize, usize), usize> = prev.iter().enumerate().map(|(k, b)| (*b, k)).collect();
        let mut rows = vec![vec![Polynomial::zero(&ring); cur.len()]; prev.len()];
        for (col, &(p, i, j)) in cur.iter().enumerate() {
            if p >= 1 {
                let d = f.differential(p).expect("within length");
                for i2 in 0..d.nrows() {
                    if let Some(&row) = index.get(&(p - 1, i2, j)) {
                        rows[row][col] = d.entry(i2, i).clone();
                    }
                }
            }
            if q - p >= 1 {
                let d = g.differential(q - p).expect("within length");
                for j2 in 0..d.nrows() {
                    if let Some(&row) = index.get(&(p, i, j2)) {
                        let e = d.entry(j2, j);
                        rows[row][col] = if p % 2 == 0 { e.clone() } else { e.neg() };
                    }
                }
            }
        }
        ds.push(GradedMatrix::new(&ring, twists(q, &cur), twists(q - 1, &prev), rows)?);
        prev = cur;
    }
    FreeResolution::from_differentials(sum, t0, ds)
}

/// Resolves `S/(I_Y + I_Z)` as `F ⊗ G` when `Y` and `Z` are arithmetically
/// Cohen–Macaulay and meet in the expected codimension, certifies it, and
/// confirms that `Y` and `Z` are PG-shells of the intersection.
pub fn tensor_resolution<K: Coeff>(ideal_y: &Ideal<K>, ideal_z: &Ideal<K>) -> Result<(FreeResolution<K>, TensorReport)> {
    if ideal_y.ring() != ideal_z.ring() {
        return Err(Error::RingMismatch);
    }
    let ring = ideal_y.ring();
    for (name, ideal) in [("Y", ideal_y), ("Z", ideal_z)] {
        if !invariants(ideal)?.is_acm {
            return Err(Error::Precondition(format!("{name} is not arithmetically Cohen-Macaulay")));
        }
    }
    let mut gens = ideal_y.generators().to_vec();
    gens.extend_from_slice(ideal_z.generators());
    let sum = Ideal::new(ring, gens)?;
    let (codim_y, codim_z, codim_sum) = (codim(ideal_y)?, codim(ideal_z)?, codim(&sum)?);
    if codim_sum != codim_y + codim_z {
        return Err(Error::Precondition(format!(
            "codimension of the intersection is {codim_sum}, not {codim_y} + {codim_z}"
        )));
    }
    let f = minimal_resolution(ideal_y)?;
    let g = minimal_resolution(ideal_z)?;
    let t = tensor_complex(&f, &g, &sum)?;
    let complex = verify_complex(&t);
    let betti = BettiTable::from_modules(t.modules());
    let convolution = f.betti()?.convolve(&g.betti()?);
    let direct = minimal_resolution(&sum)?.betti()?;
    let y_over_sum = pgshell_check(&sum, ideal_y, Method::ChainMap)?.verdict;
    let z_over_sum = pgshell_check(&sum, ideal_z, Method::ChainMap)?.verdict;
    let report = TensorReport {
        codim_y,
        codim_z,
        codim_sum,
        complex,
        matches_convolution: betti == convolution,
        matches_direct: betti == direct,
        betti,
        convolution,
        direct,
        y_over_sum,
        z_over_sum,
    };
    Ok((t, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::field::{FieldDescriptor, Rational};

    const Q: FieldDescriptor = FieldDescriptor::Rationals;

    #[test]
    fn cone_times_linear_space() {
        let y = catalog::twisted_cubic_cone::<Rational>(Q).unwrap().ideal;
        let r = y.ring().clone();
        let z = Ideal::new(&r, vec![Polynomial::variable(&r, 4), Polynomial::variable(&r, 5)]).unwrap();
        let (t, rep) = tensor_resolution(&y, &z).unwrap();
        assert_eq!(t.length(), 4);
        assert!(rep.passed(), "{rep:?}");
        let expected = BettiTable::from_entries([
            ((0, 0), 1),
            ((1, 1), 2),
            ((1, 2), 3),
            ((2, 2), 1),
            ((2, 3), 6 + 2),
            ((3, 4), 3 + 4),
            ((4, 5), 2),
        ]);
        assert_eq!(rep.betti, expected);
    }

    #[test]
    fn two_hypersurfaces() {
        let e = catalog::complete_intersection::<Rational>(Q, 4, &[2, 3], 1).unwrap();
        let r = e.ring().clone();
        let y = Ideal::new(&r, vec![e.ideal.generators()[0].clone()]).unwrap();
        let z = Ideal::new(&r, vec![e.ideal.generators()[1].clone()]).unwrap();
        let (t, rep) = tensor_resolution(&y, &z).unwrap();
        assert!(rep.passed());
        assert_eq!(t.module(1).twists, vec![3, 2]);
        assert_eq!(rep.betti, BettiTable::from_entries([((0, 0), 1), ((1, 2), 1), ((1, 3), 1), ((2, 5), 1)]));
    }

    #[test]
    fn codimension_must_add() {
        let c = catalog::rational_normal_curve::<Rational>(Q, 2).unwrap().ideal;
        assert!(matches!(tensor_resolution(&c, &c), Err(Error::Precondition(_))));
    }
}
