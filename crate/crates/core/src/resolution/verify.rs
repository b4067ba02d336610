use serde::Serialize;

use crate::field::Coeff;
use crate::ideal::Ideal;

use super::{koszul_tor, BettiTable, FreeResolution};

/// Outcome of [`verify_complex`]; `failures` itemises every failed check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplexReport {
    pub is_complex: bool,
    pub augmentation_ok: bool,
    pub minimal: bool,
    /// `None` when the comparison was skipped (non-minimal input).
    pub betti_matches_oracle: Option<bool>,
    pub checked_degrees: usize,
    pub failures: Vec<String>,
}

impl ComplexReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `d∘d = 0`, that `d_1` generates the resolved ideal, minimality,
/// and (for minimal input) every Betti number against Koszul homology for
/// `m <= reg + q + 1`, including one row past the projective dimension.
pub fn verify_complex<K: Coeff>(res: &FreeResolution<K>) -> ComplexReport {
    let mut failures = Vec::new();
    let mut is_complex = true;
    for q in 1..res.length() {
        let (a, b) = (res.differential(q).unwrap(), res.differential(q + 1).unwrap());
        match a.compose(b) {
            Ok(p) if p.is_zero() => {}
            _ => {
                is_complex = false;
                failures.push(format!("d_{q} * d_{} is not zero", q + 1));
            }
        }
    }

    let ideal = res.ideal();
    let augmentation_ok = match res.differential(1) {
        _ if ideal.is_unit() => res.module(0).is_zero(),
        None => ideal.is_zero() && res.module(0).twists == [0],
        Some(d1) => {
            res.module(0).twists == [0]
                && Ideal::new(ideal.ring(), d1.rows()[0].clone()).is_ok_and(|img| img.same_ideal(ideal))
        }
    };
    if !augmentation_ok {
        failures.push("image of d_1 is not the resolved ideal".into());
    }

    let mut minimal = true;
    for q in 1..=res.length() {
        for (i, j) in res.differential(q).unwrap().unit_entries() {
            minimal = false;
            failures.push(format!("unit entry in d_{q} at ({i}, {j})"));
        }
    }

    let mut checked_degrees = 0;
    let betti_matches_oracle = if minimal && !res.module(0).is_zero() {
        let table = BettiTable::from_modules(res.modules());
        let pd = table.projective_dimension().unwrap_or(0);
        let reg = table.regularity().unwrap_or(0);
        let n = ideal.ring().num_vars();
        let mut ok = true;
        for q in 0..=(pd + 1).min(n) {
            for m in 0..=reg + q as i64 + 1 {
                checked_degrees += 1;
                let oracle = koszul_tor(ideal, q, m).dimension as u64;
                if oracle != table.get(q, m) {
                    ok = false;
                    failures.push(format!("beta_{q},{m} = {} but Koszul homology has dimension {oracle}", table.get(q, m)));
                }
            }
        }
        Some(ok)
    } else {
        None
    };

    ComplexReport {
        is_complex,
        augmentation_ok,
        minimal,
        betti_matches_oracle,
        checked_degrees,
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{FieldDescriptor, Rational};
    use crate::poly::Polynomial;
    use crate::resolution::{minimal_resolution, GradedFreeModule, GradedMatrix};
    use crate::ring::RingDescriptor;

    type P = Polynomial<Rational>;

    fn twisted_cubic() -> Ideal<Rational> {
        let r = RingDescriptor::standard(FieldDescriptor::Rationals, 4).unwrap();
        let g = vec![
            P::from_int_terms(&r, &[(1, &[1, 0, 1]), (-1, &[0, 2])]),
            P::from_int_terms(&r, &[(1, &[0, 1, 0, 1]), (-1, &[0, 0, 2])]),
            P::from_int_terms(&r, &[(1, &[1, 0, 0, 1]), (-1, &[0, 1, 1])]),
        ];
        Ideal::new(&r, g).unwrap()
    }

    #[test]
    fn minimal_resolution_passes() {
        let res = minimal_resolution(&twisted_cubic()).unwrap();
        let report = verify_complex(&res);
        assert!(report.passed(), "{:?}", report.failures);
        assert_eq!(report.betti_matches_oracle, Some(true));
    }

    #[test]
    fn broken_complex_is_caught() {
        let i = twisted_cubic();
        let r = i.ring().clone();
        let d1 = GradedMatrix::new(
            &r,
            GradedFreeModule::new(vec![2, 2, 2]),
            GradedFreeModule::new(vec![0]),
            vec![i.generators().to_vec()],
        )
        .unwrap();
        let z = P::variable(&r, 0);
        let d2 = GradedMatrix::new(
            &r,
            GradedFreeModule::new(vec![3]),
            GradedFreeModule::new(vec![2, 2, 2]),
            vec![vec![z.clone()], vec![z.clone()], vec![z]],
        )
        .unwrap();
        let res = FreeResolution::from_differentials(&i, GradedFreeModule::new(vec![0]), vec![d1, d2]).unwrap();
        let report = verify_complex(&res);
        assert!(!report.is_complex);
        assert!(report.failures[0].starts_with("d_1 * d_2"));
    }

    #[test]
    fn padded_complex_fails_only_minimality() {
        let i = twisted_cubic();
        let r = i.ring().clone();
        let mut gens = i.generators().to_vec();
        gens.push(gens[0].add_unchecked(&gens[1]));
        let d1 = GradedMatrix::new(&r, GradedFreeModule::new(vec![2; 4]), GradedFreeModule::new(vec![0]), vec![gens]).unwrap();
        let one = P::one(&r);
        let d2 = GradedMatrix::new(
            &r,
            GradedFreeModule::new(vec![2]),
            GradedFreeModule::new(vec![2; 4]),
            vec![vec![one.clone()], vec![one.clone()], vec![P::zero(&r)], vec![one.neg()]],
        )
        .unwrap();
        let res = FreeResolution::from_differentials(&i, GradedFreeModule::new(vec![0]), vec![d1, d2]).unwrap();
        assert!(!res.is_minimal());
        let report = verify_complex(&res);
        assert!(report.is_complex && report.augmentation_ok);
        assert!(!report.minimal);
        assert_eq!(report.betti_matches_oracle, None);
    }
}
