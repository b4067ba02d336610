//! Corpus shared by the integration tests.

#![allow(dead_code)]

use pgshell::catalog::{self, SplitMix64};
use pgshell::shell::Verdict;
use pgshell::{FieldDescriptor, Ideal, Polynomial, Rational, Ring};

pub const Q: FieldDescriptor = FieldDescriptor::Rationals;

pub fn twisted_cubic() -> Ideal<Rational> {
    catalog::rational_normal_curve(Q, 3).unwrap().ideal
}

pub fn ci23() -> Ideal<Rational> {
    catalog::complete_intersection(Q, 4, &[2, 3], 1).unwrap().ideal
}

pub fn principal(i: &Ideal<Rational>, g: Polynomial<Rational>) -> Ideal<Rational> {
    Ideal::new(i.ring(), vec![g]).unwrap()
}

pub fn generated(ring: &Ring, gens: Vec<Polynomial<Rational>>) -> Ideal<Rational> {
    Ideal::new(ring, gens).unwrap()
}

pub fn var(ring: &Ring, i: usize) -> Polynomial<Rational> {
    Polynomial::variable(ring, i)
}

/// Every catalog entry at desk scale, by name.
pub fn corpus_ideals() -> Vec<(String, Ideal<Rational>)> {
    let mut out: Vec<(String, Ideal<Rational>)> = Vec::new();
    for d in 2..=4 {
        let e = catalog::rational_normal_curve(Q, d).unwrap();
        out.push((e.name, e.ideal));
    }
    for e in [
        catalog::veronese_surface(Q).unwrap(),
        catalog::scroll_1_2(Q).unwrap(),
        catalog::conic_cone(Q).unwrap(),
        catalog::twisted_cubic_cone(Q).unwrap(),
        catalog::complete_intersection(Q, 4, &[2, 3], 1).unwrap(),
        catalog::hyperplane(Q, 4).unwrap(),
        catalog::zero_ideal(Q, 4).unwrap(),
        catalog::points_on_twisted_cubic(Q).unwrap(),
    ] {
        out.push((e.name, e.ideal));
    }
    out
}

pub struct Pair {
    pub name: &'static str,
    pub v: Ideal<Rational>,
    pub w: Ideal<Rational>,
    pub expected: Verdict,
}

fn pair(name: &'static str, v: &Ideal<Rational>, w: Ideal<Rational>, expected: Verdict) -> Pair {
    Pair { name, v: v.clone(), w, expected }
}

/// `(V, W)` pairs with `V ⊆ W` and the verdict each should receive.
pub fn corpus_pairs() -> Vec<Pair> {
    use Verdict::{NotPgShell as No, PgShell as Yes};
    let tc = twisted_cubic();
    let r = tc.ring().clone();
    let q = tc.generators().to_vec();
    let ci = ci23();
    let cg = ci.generators().to_vec();
    let rnc4 = catalog::rational_normal_curve::<Rational>(Q, 4).unwrap().ideal;
    let scroll = catalog::scroll_1_2::<Rational>(Q).unwrap().ideal;
    let veronese = catalog::veronese_surface::<Rational>(Q).unwrap().ideal;
    let points = catalog::points_on_twisted_cubic::<Rational>(Q).unwrap().ideal;
    let cone = catalog::twisted_cubic_cone::<Rational>(Q).unwrap().ideal;
    let r6 = cone.ring().clone();
    let lin = generated(&r6, vec![var(&r6, 4), var(&r6, 5)]);
    let x = cone.sum(&lin).unwrap();
    vec![
        pair("tc/q1", &tc, principal(&tc, q[0].clone()), Yes),
        pair("tc/q2", &tc, principal(&tc, q[1].clone()), Yes),
        pair("tc/q3", &tc, principal(&tc, q[2].clone()), Yes),
        pair("tc/z3*q1", &tc, principal(&tc, q[0].mul(&var(&r, 3)).unwrap()), No),
        pair("tc/tc", &tc, tc.clone(), Yes),
        pair("tc/P3", &tc, Ideal::zero(&r), Yes),
        pair("ci23/quadric", &ci, principal(&ci, cg[0].clone()), Yes),
        pair("ci23/cubic", &ci, principal(&ci, cg[1].clone()), Yes),
        pair("ci23/z0*quadric,cubic", &ci, generated(&r, vec![cg[0].mul(&var(&r, 0)).unwrap(), cg[1].clone()]), No),
        pair("points/tc", &points, tc.clone(), Yes),
        pair("points/q1", &points, principal(&points, q[0].clone()), Yes),
        // the scroll's matrix is three columns of the quartic's catalecticant
        pair("rnc4/scroll", &rnc4, scroll, Yes),
        pair("rnc4/z4*q", &rnc4, principal(&rnc4, rnc4.generators()[0].mul(&var(rnc4.ring(), 4)).unwrap()), No),
        pair("veronese/quadric", &veronese, principal(&veronese, veronese.generators()[0].clone()), Yes),
        pair("tensor/Y", &x, cone.clone(), Yes),
        pair("tensor/Z", &x, lin, Yes),
    ]
}

/// Unit lower times unit upper triangular with entries in `-2..=2`:
/// invertible by construction.
pub fn random_coordinate_change(n: usize, rng: &mut SplitMix64) -> Vec<Vec<Rational>> {
    let mut small = || (rng.next_u64() % 5) as i64 - 2;
    let mut l = vec![vec![0i64; n]; n];
    let mut u = vec![vec![0i64; n]; n];
    for i in 0..n {
        l[i][i] = 1;
        u[i][i] = 1;
        for j in 0..i {
            l[i][j] = small();
            u[j][i] = small();
        }
    }
    (0..n)
        .map(|i| (0..n).map(|j| Rational::integer((0..n).map(|k| l[i][k] * u[k][j]).sum())).collect())
        .collect()
}

/// Replaces the generators of each degree by an invertible combination of
/// them, then reverses and rescales the list.
pub fn recombine(ideal: &Ideal<Rational>, rng: &mut SplitMix64) -> Ideal<Rational> {
    let ring = ideal.ring();
    let gens = ideal.generators();
    let mut out: Vec<Polynomial<Rational>> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let mut acc = g.clone();
        for h in &gens[..i] {
            if h.homogeneous_degree() == g.homogeneous_degree() {
                let c = Rational::integer((rng.next_u64() % 5) as i64 - 2);
                acc = acc.add(&h.scale(&c)).unwrap();
            }
        }
        out.push(acc.scale(&Rational::integer(rng.coefficient())));
    }
    out.reverse();
    Ideal::new(ring, out).unwrap()
}

/// The same ideal after a coordinate change and a generator recombination.
pub fn scramble(ideal: &Ideal<Rational>, matrix: &[Vec<Rational>], rng: &mut SplitMix64) -> Ideal<Rational> {
    recombine(&ideal.linear_substitute(matrix).unwrap(), rng)
}

pub fn ci222() -> Ideal<Rational> {
    catalog::complete_intersection(Q, 6, &[2, 2, 2], 1).unwrap().ideal
}

/// Writes a source file declaring the named ideals over `ring` and returns its path.
pub fn write_source(tag: &str, ring: &Ring, ideals: &[(&str, &Ideal<Rational>)]) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("pgshell-{}-{tag}.ideal", std::process::id()));
    std::fs::write(&path, pgshell::format::print_source("S", ring, ideals)).unwrap();
    path
}

/// Runs the command line and returns the exit code with stdout and stderr.
pub fn run_cli(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("pgshell").chain(args.iter().copied());
    let code = pgshell::cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}
