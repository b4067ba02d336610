mod common;

use common::*;
use pgshell::catalog::{self, SplitMix64};
use pgshell::format;
use pgshell::groebner::hilbert_function;
use pgshell::resolution::{koszul_tor, minimal_resolution, verify_complex};
use pgshell::shell::{invariants, DeltaGenusStatus, pgshell_check, tensor_resolution, Method, Verdict};
use pgshell::{Error, Ideal, MonomialOrder, Polynomial, Rational, Ring, RingDescriptor};
use proptest::prelude::*;

/// A homogeneous polynomial of degree `d` from `(monomial index, numerator, denominator)` triples.
fn form(ring: &Ring, d: u32, terms: &[(usize, i64, i64)]) -> Polynomial<Rational> {
    let monos = ring.monomials_of_degree(d);
    let terms = terms.iter().map(|&(k, n, q)| (monos[k % monos.len()], Rational::new(n, q).unwrap())).collect();
    Polynomial::from_terms(ring, terms)
}

fn terms() -> impl Strategy<Value = Vec<(usize, i64, i64)>> {
    prop::collection::vec((0usize..1000, -6i64..=6, 1i64..=4), 1..5)
}

fn forms(degrees: std::ops::RangeInclusive<u32>, count: std::ops::Range<usize>) -> impl Strategy<Value = Vec<(u32, Vec<(usize, i64, i64)>)>> {
    prop::collection::vec((degrees, terms()), count)
}

fn nonzero_ideal(ring: &Ring, gens: &[(u32, Vec<(usize, i64, i64)>)]) -> Option<Ideal<Rational>> {
    let polys: Vec<_> = gens.iter().map(|(d, t)| form(ring, *d, t)).filter(|p| !p.is_zero()).collect();
    if polys.is_empty() {
        return None;
    }
    Some(Ideal::new(ring, polys).unwrap())
}

#[test]
fn catalog_records_are_reproduced() {
    let mut checked = 0;
    for (name, ideal) in corpus_ideals() {
        let params: Vec<i64> = match name.as_str() {
            "rnc2" => vec![2],
            "rnc3" => vec![3],
            "rnc4" => vec![4],
            "ci2-3" => vec![4, 2, 3],
            _ => vec![],
        };
        let key = match name.as_str() {
            n if n.starts_with("rnc") => "rnc",
            n if n.starts_with("ci") => "ci",
            "scroll12" => "scroll",
            n => n,
        };
        let Ok(e) = catalog::by_name::<Rational>(Q, key, &params, 1) else { continue };
        let Some(x) = e.expected else { continue };
        assert_eq!(e.ideal.generators(), ideal.generators(), "{name}");
        let rec = invariants(&ideal).unwrap();
        let betti: Vec<_> = rec.betti.entries().collect();
        assert_eq!(betti, x.betti, "{name}");
        assert_eq!(
            (rec.dim, rec.degree, rec.depth, rec.reg_r),
            (x.dim, x.degree, x.depth, x.reg_r),
            "{name}"
        );
        match rec.delta_genus_status {
            DeltaGenusStatus::LowerBound => assert!(rec.delta_genus <= x.delta_genus, "{name}"),
            _ => assert_eq!(rec.delta_genus, x.delta_genus, "{name}"),
        }
        assert_eq!(
            (rec.is_complete_intersection, rec.is_2linear, rec.is_acm),
            (x.is_complete_intersection, x.is_2linear, x.is_acm),
            "{name}"
        );
        checked += 1;
    }
    assert!(checked >= 10, "only {checked} catalog records checked");
}

#[test]
fn oracle_window_on_the_corpus() {
    for (name, ideal) in corpus_ideals() {
        let b = minimal_resolution(&ideal).unwrap().betti().unwrap();
        let pd = b.projective_dimension().unwrap();
        let reg = b.regularity().unwrap();
        assert!(pd <= ideal.ring().num_vars(), "{name}: length {pd}");
        for q in 0..=pd {
            for m in q as i64..=q as i64 + reg + 1 {
                assert_eq!(koszul_tor(&ideal, q, m).dimension as u64, b.get(q, m), "{name}: ({q}, {m})");
            }
        }
    }
}

#[test]
fn resolutions_are_deterministic() {
    for (name, ideal) in corpus_ideals() {
        let a = minimal_resolution(&ideal).unwrap();
        let b = minimal_resolution(&ideal).unwrap();
        assert_eq!(a.differentials(), b.differentials(), "{name}");
    }
}

#[test]
fn tensor_of_two_hypersurfaces_is_the_koszul_complex() {
    let ci = ci23();
    let [f, g] = [0, 1].map(|i| principal(&ci, ci.generators()[i].clone()));
    let (res, report) = tensor_resolution(&f, &g).unwrap();
    assert!(report.passed());
    assert_eq!(res.betti().unwrap(), minimal_resolution(&ci).unwrap().betti().unwrap());
    let tc = twisted_cubic();
    let q = principal(&tc, tc.generators()[0].clone());
    assert!(matches!(tensor_resolution(&q, &q), Err(Error::Precondition(_))));
}

#[test]
fn permuting_and_rescaling_generators_keeps_reports() {
    let mut rng = SplitMix64::new(3);
    for p in corpus_pairs() {
        let base = pgshell_check(&p.v, &p.w, Method::ChainMap).unwrap();
        let shuffle = |i: &Ideal<Rational>, rng: &mut SplitMix64| {
            let mut gens = i.generators().to_vec();
            for k in (1..gens.len()).rev() {
                gens.swap(k, (rng.next_u64() % (k as u64 + 1)) as usize);
            }
            let gens = gens.iter().map(|g| g.scale(&Rational::new(rng.coefficient(), 3).unwrap())).collect();
            Ideal::new(i.ring(), gens).unwrap()
        };
        let (v, w) = (shuffle(&p.v, &mut rng), shuffle(&p.w, &mut rng));
        let rep = pgshell_check(&v, &w, Method::ChainMap).unwrap();
        assert_eq!((rep.verdict, &rep.table), (base.verdict, &base.table), "{}", p.name);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn print_then_parse_is_identity(gens in forms(0..=4, 1..4), weighted in any::<bool>()) {
        let names = vec!["x".to_string(), "y".to_string(), "z".to_string(), "t".to_string()];
        let weights = if weighted { vec![1, 2, 1, 3] } else { vec![1; 4] };
        let ring = RingDescriptor::new(Q, names, weights, MonomialOrder::DegRevLex).unwrap();
        let polys: Vec<_> = gens.iter().map(|(d, t)| form(&ring, *d, t)).collect();
        let ideal = Ideal::new(&ring, polys).unwrap();
        let text = format::print_source("R", &ring, &[("I", &ideal)]);
        let back = format::parse::<Rational>(&text, true).unwrap();
        prop_assert_eq!(back.ring.as_ref(), ring.as_ref());
        prop_assert_eq!(back.ideal("I").unwrap().generators(), ideal.generators());
        prop_assert_eq!(format::print_source("R", &back.ring, &[("I", back.ideal("I").unwrap())]), text);
    }

    #[test]
    fn random_resolutions_are_certified(gens in forms(1..=3, 1..4)) {
        let ring = RingDescriptor::standard(Q, 4).unwrap();
        let Some(ideal) = nonzero_ideal(&ring, &gens) else { return Ok(()) };
        prop_assume!(!ideal.is_unit());
        let res = minimal_resolution(&ideal).unwrap();
        prop_assert!(res.length() <= 4);
        let cert = verify_complex(&res);
        prop_assert!(cert.passed(), "{:?}", cert.failures);
        let b = res.betti().unwrap();
        let top = b.regularity().unwrap() + 5;
        let h = match hilbert_function(&ideal, top as u32) {
            Err(Error::NotStabilized { needed, .. }) => hilbert_function(&ideal, needed),
            other => other,
        }.unwrap();
        for m in 0..=top {
            prop_assert_eq!(h.values[m as usize] as i64, b.hilbert_value(4, m));
        }
    }

    #[test]
    fn methods_agree_on_random_pairs(gens in forms(1..=3, 2..4), keep in 1usize..3) {
        let ring = RingDescriptor::standard(Q, 4).unwrap();
        let Some(v) = nonzero_ideal(&ring, &gens) else { return Ok(()) };
        prop_assume!(!v.is_unit());
        let w = Ideal::new(&ring, v.generators()[..keep.min(v.generators().len())].to_vec()).unwrap();
        let both = pgshell_check(&v, &w, Method::Both).unwrap();
        let oracle = pgshell_check(&v, &w, Method::KoszulOracle).unwrap();
        prop_assert_eq!(both.verdict, oracle.verdict);
        prop_assert_eq!(&both.table, &oracle.table);
        if both.verdict == Verdict::NotPgShell {
            prop_assert!(both.witness.unwrap().verified);
            prop_assert!(oracle.witness.unwrap().verified);
        }
    }

    #[test]
    fn betti_tables_survive_coordinate_changes(seed in any::<u64>(), which in 0usize..4) {
        let ideal = match which {
            0 => twisted_cubic(),
            1 => ci23(),
            2 => catalog::points_on_twisted_cubic::<Rational>(Q).unwrap().ideal,
            _ => catalog::scroll_1_2::<Rational>(Q).unwrap().ideal,
        };
        let mut rng = SplitMix64::new(seed);
        let m = random_coordinate_change(ideal.ring().num_vars(), &mut rng);
        let moved = scramble(&ideal, &m, &mut rng);
        prop_assert_eq!(
            minimal_resolution(&moved).unwrap().betti().unwrap(),
            minimal_resolution(&ideal).unwrap().betti().unwrap()
        );
    }
}
