//! Acceptance checks, one line per criterion.
//!
//! cargo test --test acceptance

mod common;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use common::*;
use pgshell::catalog::{self, SplitMix64};
use pgshell::format;
use pgshell::groebner::hilbert_function;
use pgshell::resolution::{koszul_tor, minimal_resolution, verify_complex, BettiTable};
use pgshell::shell::{ci_chain_report, invariants, pgshell_check, tensor_resolution, Method, Verdict};
use pgshell::{Error, Ideal, Rational};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn betti(i: &Ideal<Rational>) -> BettiTable {
    minimal_resolution(i).unwrap().betti().unwrap()
}

fn table(entries: &[((usize, i64), u64)]) -> BettiTable {
    BettiTable::from_entries(entries.iter().copied())
}

/// Sum of `beta^Y_{a,i} beta^Z_{b,j}` over `a + b = q`, `i + j = m`.
fn convolution(y: &BettiTable, z: &BettiTable) -> BettiTable {
    let mut acc: BTreeMap<(usize, i64), u64> = BTreeMap::new();
    for ((a, i), x) in y.entries() {
        for ((b, j), w) in z.entries() {
            *acc.entry((a + b, i + j)).or_insert(0) += x * w;
        }
    }
    BettiTable::from_entries(acc)
}

fn criterion_1() -> Outcome {
    let cases = [
        ("twisted cubic", twisted_cubic(), table(&[((0, 0), 1), ((1, 2), 3), ((2, 3), 2)])),
        ("CI(2,3)", ci23(), table(&[((0, 0), 1), ((1, 2), 1), ((1, 3), 1), ((2, 5), 1)])),
        (
            "rational normal quartic",
            catalog::rational_normal_curve(Q, 4).unwrap().ideal,
            table(&[((0, 0), 1), ((1, 2), 6), ((2, 3), 8), ((3, 4), 3)]),
        ),
        (
            "Veronese surface",
            catalog::veronese_surface(Q).unwrap().ideal,
            table(&[((0, 0), 1), ((1, 2), 6), ((2, 3), 8), ((3, 4), 3)]),
        ),
    ];
    let mut checked = 0;
    for (name, ideal, expected) in cases {
        let b = betti(&ideal);
        ensure!(b == expected, "{name}: engine table {:?}", b.entries().collect::<Vec<_>>());
        let n = ideal.ring().num_vars();
        let reg = b.regularity().unwrap();
        // every (q, m) in the window m - q <= reg + 1 covers the support and
        // a vanishing degree in every row
        for q in 0..=n {
            for m in q as i64..=q as i64 + reg + 1 {
                let dim = koszul_tor(&ideal, q, m).dimension as u64;
                ensure!(dim == b.get(q, m), "{name}: beta_{q},{m} engine {} oracle {dim}", b.get(q, m));
                checked += 1;
            }
        }
    }
    Ok(format!("4 tables exact, {checked} (q,m) compared with Koszul homology"))
}

fn criterion_2() -> Outcome {
    let positive = ["tc/q1", "tc/q2", "tc/q3", "ci23/quadric", "points/tc", "tensor/Y", "tensor/Z"];
    let pairs = corpus_pairs();
    for name in positive {
        let p = pairs.iter().find(|p| p.name == name).unwrap();
        let both = pgshell_check(&p.v, &p.w, Method::Both).map_err(|e| format!("{name}: {e}"))?;
        ensure!(both.verdict == Verdict::PgShell, "{name}: both methods gave {}", both.verdict);
        let oracle = pgshell_check(&p.v, &p.w, Method::KoszulOracle).unwrap();
        ensure!(oracle.verdict == Verdict::PgShell && oracle.table == both.table, "{name}: oracle disagrees");
        let path = write_source(&format!("acc2-{}", name.replace('/', "-")), p.v.ring(), &[("V", &p.v), ("W", &p.w)]);
        let (code, out, _) = run_cli(&["pgshell", path.to_str().unwrap(), "V", "W", "--method", "both"]);
        std::fs::remove_file(&path).ok();
        ensure!(code == 0, "{name}: exit code {code}");
        ensure!(out.starts_with("verdict: pg-shell"), "{name}: output {out}");
    }
    Ok(format!("{} pairs pg-shell by chain map and Koszul oracle, exit code 0", positive.len()))
}

fn criterion_3() -> Outcome {
    let tc = twisted_cubic();
    let r = tc.ring().clone();
    let w = principal(&tc, tc.generators()[0].mul(&var(&r, 3)).unwrap());
    for method in [Method::ChainMap, Method::KoszulOracle, Method::Both] {
        let rep = pgshell_check(&tc, &w, method).unwrap();
        ensure!(rep.verdict == Verdict::NotPgShell, "{method}: verdict {}", rep.verdict);
        let wit = rep.witness.ok_or(format!("{method}: no witness"))?;
        ensure!((wit.q, wit.m) == (1, 3), "{method}: witness at ({}, {})", wit.q, wit.m);
        ensure!(wit.verified, "{method}: witness not verified");
    }
    let path = write_source("acc3", &r, &[("V", &tc), ("W", &w)]);
    let (code, out, _) = run_cli(&["pgshell", path.to_str().unwrap(), "V", "W", "--method", "both"]);
    std::fs::remove_file(&path).ok();
    ensure!(code == 1, "exit code {code}");
    ensure!(out.contains("not-pg-shell"), "output {out}");
    Ok("verified witness in mu_1 degree 3 by every method, exit code 1".into())
}

fn criterion_4() -> Outcome {
    let y = catalog::twisted_cubic_cone::<Rational>(Q).unwrap().ideal;
    let r = y.ring().clone();
    let z = generated(&r, vec![var(&r, 4), var(&r, 5)]);
    let (res, report) = tensor_resolution(&y, &z).map_err(|e| e.to_string())?;
    ensure!(res.length() == 4, "length {}", res.length());
    let cert = verify_complex(&res);
    ensure!(cert.passed() && report.complex.passed(), "verify_complex: {:?}", cert.failures);
    ensure!(cert.minimal && cert.betti_matches_oracle == Some(true), "not certified minimal");
    let t = res.betti().unwrap();
    let conv = convolution(&betti(&y), &betti(&z));
    ensure!(t == conv, "tensor {:?} vs convolution {:?}", t.entries().collect::<Vec<_>>(), conv.entries().collect::<Vec<_>>());
    let direct = betti(&y.sum(&z).unwrap());
    ensure!(t == direct, "tensor differs from the direct resolution");
    let expected = table(&[((0, 0), 1), ((1, 1), 2), ((1, 2), 3), ((2, 2), 1), ((2, 3), 8), ((3, 4), 7), ((4, 5), 2)]);
    ensure!(t == expected, "table {:?}", t.entries().collect::<Vec<_>>());
    ensure!(report.y_over_sum == Verdict::PgShell && report.z_over_sum == Verdict::PgShell, "factor verdicts");
    let path = write_source("acc4", &r, &[("Y", &y), ("Z", &z)]);
    let (code, _, err) = run_cli(&["tensor-res", path.to_str().unwrap(), "Y", "Z"]);
    std::fs::remove_file(&path).ok();
    ensure!(code == 0, "tensor-res exit code {code}: {err}");
    Ok(format!("certified over {} degrees, equals convolution and direct resolution (totals 1 5 9 7 2)", cert.checked_degrees))
}

fn criterion_5() -> Outcome {
    let mut n = 0;
    for p in corpus_pairs() {
        if pgshell_check(&p.v, &p.w, Method::ChainMap).unwrap().verdict != Verdict::PgShell {
            continue;
        }
        let (iv, iw) = (invariants(&p.v).unwrap(), invariants(&p.w).unwrap());
        ensure!(iv.depth <= iw.depth, "{}: depth {} > {}", p.name, iv.depth, iw.depth);
        if iv.depth >= 2 {
            ensure!(iv.reg_r >= iw.reg_r, "{}: reg_R {} < {}", p.name, iv.reg_r, iw.reg_r);
        }
        n += 1;
    }
    Ok(format!("both inequalities hold on {n} positive pairs"))
}

fn criterion_6() -> Outcome {
    let mut rng = SplitMix64::new(6);
    let trials = 10;
    let mut ideals = corpus_ideals();
    ideals.push(("ci2-2-2".into(), ci222()));
    for (name, ideal) in &ideals {
        let base = betti(ideal);
        for t in 0..trials {
            let m = random_coordinate_change(ideal.ring().num_vars(), &mut rng);
            let moved = betti(&scramble(ideal, &m, &mut rng));
            ensure!(moved == base, "{name}: Betti table changed in trial {t}");
        }
    }
    let pairs = corpus_pairs();
    for p in &pairs {
        let base = pgshell_check(&p.v, &p.w, Method::ChainMap).unwrap();
        for t in 0..trials {
            let m = random_coordinate_change(p.v.ring().num_vars(), &mut rng);
            let rep = pgshell_check(&scramble(&p.v, &m, &mut rng), &scramble(&p.w, &m, &mut rng), Method::ChainMap).unwrap();
            let at = |r: &pgshell::shell::ShellReport| r.witness.as_ref().map(|w| (w.q, w.m));
            ensure!(
                rep.verdict == base.verdict && rep.table == base.table && at(&rep) == at(&base),
                "{}: report changed in trial {t}",
                p.name
            );
        }
    }
    Ok(format!("{trials} scrambles each of {} ideals and {} pairs", ideals.len(), pairs.len()))
}

fn criterion_7() -> Outcome {
    let mut ideals = corpus_ideals();
    ideals.push(("ci2-2-2".into(), ci222()));
    for (name, ideal) in &ideals {
        let b = betti(ideal);
        let top = b.regularity().unwrap() + 5;
        let n = ideal.ring().num_vars();
        let h = match hilbert_function(ideal, top as u32) {
            Err(Error::NotStabilized { needed, .. }) => hilbert_function(ideal, needed),
            other => other,
        }
        .map_err(|e| format!("{name}: {e}"))?;
        for m in 0..=top {
            let alt = b.hilbert_value(n, m);
            ensure!(h.values[m as usize] as i64 == alt, "{name}: HF({m}) = {} but Betti sum {alt}", h.values[m as usize]);
        }
    }
    Ok(format!("{} ideals agree up to reg_R + 5", ideals.len()))
}

fn criterion_8() -> Outcome {
    let mut ideals = corpus_ideals();
    ideals.push(("ci2-2-2".into(), ci222()));
    let mut flagged = Vec::new();
    for (name, ideal) in &ideals {
        let rec = invariants(ideal).unwrap();
        // 2x2 minors of a 2x2 matrix cut out a single quadric, which is a
        // complete intersection
        let expected = matches!(name.as_str(), "ci2-3" | "ci2-2-2" | "hyperplane" | "zero" | "rnc2" | "conic-cone");
        ensure!(rec.is_complete_intersection == expected, "{name}: is_CI = {}", rec.is_complete_intersection);
        if expected {
            flagged.push(name.clone());
        }
    }
    for (ideal, degrees) in [(ci23(), vec![2, 3]), (ci222(), vec![2, 2, 2])] {
        let rep = ci_chain_report(&ideal).unwrap();
        ensure!(rep.degrees == degrees && rep.koszul_shape, "degrees {:?} expected {degrees:?}", rep.degrees);
    }
    let hyper = ci_chain_report(&catalog::hyperplane::<Rational>(Q, 4).unwrap().ideal).unwrap();
    ensure!(hyper.degrees == vec![1], "hyperplane degrees {:?}", hyper.degrees);
    let zero = ci_chain_report(&catalog::zero_ideal::<Rational>(Q, 4).unwrap().ideal).unwrap();
    ensure!(zero.degrees.is_empty(), "zero ideal degrees {:?}", zero.degrees);
    ensure!(ci_chain_report(&twisted_cubic()).is_err(), "twisted cubic accepted as a complete intersection");
    Ok(format!("is_CI exactly on {}; regular sequence degrees match", flagged.join(", ")))
}

fn criterion_9() -> Outcome {
    let mut exports = 0;
    for (name, params) in [
        ("rnc", vec![2]),
        ("rnc", vec![3]),
        ("rnc", vec![4]),
        ("veronese", vec![]),
        ("scroll", vec![]),
        ("conic-cone", vec![]),
        ("cubic-cone", vec![]),
        ("ci", vec![4, 2, 3]),
        ("ci", vec![6, 2, 2, 2]),
        ("hyperplane", vec![4]),
        ("zero", vec![4]),
        ("tc-points", vec![]),
    ] {
        let e = catalog::by_name::<Rational>(Q, name, &params, 1).unwrap();
        let args: Vec<String> = ["catalog".to_string(), name.to_string()].into_iter().chain(params.iter().map(|p| p.to_string())).collect();
        let (code, text, _) = run_cli(&args.iter().map(String::as_str).collect::<Vec<_>>());
        ensure!(code == 0, "catalog {name}: exit code {code}");
        let ident = pgshell::cli::catalog_ideal_name(&e.name);
        let back = format::parse::<Rational>(&text, true).map_err(|err| format!("{name}: {err}"))?;
        ensure!(back.ideal(&ident).unwrap().generators() == e.ideal.generators(), "{name}: generators changed");
        let again = format::print_source(&back.ring_name, &back.ring, &[(ident.as_str(), back.ideal(&ident).unwrap())]);
        ensure!(again == text, "{name}: second export differs");
        exports += 1;
    }
    let negatives = [
        ("dangling operator", "ring S = QQ[z0,z1,z2,z3];\nideal I = z0 +", (2, 15)),
        ("unknown variable", "ring S = QQ[x,y];\nideal J = x*w;", (2, 13)),
        ("zero denominator", "ring S = QQ[x,y];\nideal J = 1/0*x;", (2, 13)),
    ];
    for (what, src, pos) in negatives {
        match format::parse::<Rational>(src, false) {
            Err(Error::Parse { line, column, .. }) => ensure!((line, column) == pos, "{what}: at {line}:{column}"),
            other => return Err(format!("{what}: {other:?}")),
        }
        let path = std::env::temp_dir().join(format!("pgshell-{}-acc9.ideal", std::process::id()));
        std::fs::write(&path, src).unwrap();
        let (code, _, err) = run_cli(&["betti", path.to_str().unwrap(), "I"]);
        std::fs::remove_file(&path).ok();
        ensure!(code == 2, "{what}: exit code {code}");
        ensure!(err.contains(&format!("{}:{}", pos.0, pos.1)), "{what}: message {err}");
    }
    Ok(format!("{exports} exports round trip; 3 negative cases located, exit code 2"))
}

fn main() {
    let criteria: [(u32, fn() -> Outcome); 9] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (n, check) in criteria {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or(p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or("panic".into()))
        });
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {n}: PASS  {detail} ({secs:.2}s)"),
            Err(detail) => {
                failed += 1;
                println!("criterion {n}: FAIL  {detail} ({secs:.2}s)");
            }
        }
    }
    println!("acceptance: {} of 9 passed in {:.1}s", 9 - failed, start.elapsed().as_secs_f64());
    if failed > 0 {
        std::process::exit(1);
    }
}
