mod common;

use std::time::Instant;

use common::*;
use pgshell::catalog::SplitMix64;
use pgshell::shell::{check_containment, criteria_suite, invariants, pgshell_check, Method, Verdict};

#[test]
fn corpus_pairs_are_nested() {
    for p in corpus_pairs() {
        assert!(check_containment(&p.v, &p.w).unwrap(), "{}", p.name);
    }
}

#[test]
fn methods_agree_on_the_corpus() {
    let pairs = corpus_pairs();
    assert!(pairs.len() >= 12);
    for p in &pairs {
        let t = Instant::now();
        let both = pgshell_check(&p.v, &p.w, Method::Both).unwrap();
        let oracle = pgshell_check(&p.v, &p.w, Method::KoszulOracle).unwrap();
        assert_eq!(both.verdict, p.expected, "{}", p.name);
        assert_eq!(both.verdict, oracle.verdict, "{}", p.name);
        assert_eq!(both.table, oracle.table, "{}", p.name);
        eprintln!("{:<24} {:<13} {:?}", p.name, both.verdict.to_string(), t.elapsed());
    }
}

#[test]
fn negative_witnesses_are_verified() {
    for p in corpus_pairs().iter().filter(|p| p.expected == Verdict::NotPgShell) {
        for method in [Method::ChainMap, Method::KoszulOracle] {
            let rep = pgshell_check(&p.v, &p.w, method).unwrap();
            let w = rep.witness.expect("negative verdict carries a witness");
            assert!(w.verified, "{}", p.name);
            assert!(rep.table.iter().any(|e| (e.q, e.m) == (w.q, w.m) && !e.injective));
        }
    }
}

#[test]
fn shells_pass_to_intermediate_schemes() {
    // V ⊆ Y ⊆ W with W a shell of V: W is a shell of Y
    let tc = twisted_cubic();
    let points = pgshell::catalog::points_on_twisted_cubic::<pgshell::Rational>(Q).unwrap().ideal;
    let q1 = principal(&tc, tc.generators()[0].clone());
    assert!(pgshell_check(&points, &q1, Method::ChainMap).unwrap().is_pg_shell());
    assert!(pgshell_check(&tc, &q1, Method::ChainMap).unwrap().is_pg_shell());
    for m in 1..=2 {
        let y = points.power(m + 1).unwrap().sum(&q1).unwrap();
        assert!(pgshell_check(&y, &q1, Method::ChainMap).unwrap().is_pg_shell());
    }
}

#[test]
fn depth_and_regularity_inequalities() {
    for p in corpus_pairs().iter().filter(|p| p.expected == Verdict::PgShell) {
        let (iv, iw) = (invariants(&p.v).unwrap(), invariants(&p.w).unwrap());
        assert!(iv.depth <= iw.depth, "{}", p.name);
        if iv.depth >= 2 {
            assert!(iv.reg_r >= iw.reg_r, "{}", p.name);
        }
    }
}

#[test]
fn criteria_never_contradict_the_direct_check() {
    for p in corpus_pairs().iter().filter(|p| !p.name.starts_with("tensor")) {
        let t = Instant::now();
        let rep = criteria_suite(&p.v, &p.w).unwrap();
        assert!(rep.all_consistent(), "{}: {:?}", p.name, rep.criteria);
        eprintln!("criteria {:<24} {:?}", p.name, t.elapsed());
    }
}

#[test]
fn verdicts_survive_a_coordinate_change() {
    let mut rng = SplitMix64::new(20);
    for p in corpus_pairs() {
        let t = Instant::now();
        let base = pgshell_check(&p.v, &p.w, Method::ChainMap).unwrap();
        let m = random_coordinate_change(p.v.ring().num_vars(), &mut rng);
        let v = scramble(&p.v, &m, &mut rng);
        let w = scramble(&p.w, &m, &mut rng);
        let moved = pgshell_check(&v, &w, Method::ChainMap).unwrap();
        assert_eq!((base.verdict, &base.table), (moved.verdict, &moved.table), "{}", p.name);
        eprintln!("moved {:<24} {:?}", p.name, t.elapsed());
    }
}
