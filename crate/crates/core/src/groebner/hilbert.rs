//! Hilbert functions of `S/I` via standard monomials.

use crate::error::{Error, Result};
use crate::field::{Coeff, Rational};
use crate::ideal::Ideal;
use crate::ring::{Monomial, Ring};

use super::GroebnerBasis;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    /// `values[m] = dim_k (S/I)_m` for `m` in `0..=m_max`.
    pub values: Vec<u64>,
    /// Hilbert polynomial coefficients in increasing powers of `m`;
    /// `None` for weighted gradings (the function is quasi-polynomial).
    pub hilbert_polynomial: Option<Vec<Rational>>,
    /// First degree from which the function agrees with the polynomial.
    pub stabilization_degree: u32,
}

impl HilbertData {
    pub fn polynomial_at(&self, m: i64) -> Option<Rational> {
        let coeffs = self.hilbert_polynomial.as_ref()?;
        let x = Rational::integer(m);
        let f = crate::field::FieldDescriptor::Rationals;
        Some(coeffs.iter().rev().fold(Rational::zero(f), |acc, c| acc.mul(&x).add(c)))
    }
}

/// Monomials of degree `d` not divisible by any leading monomial.
pub fn standard_monomials<K: Coeff>(gb: &GroebnerBasis<K>, d: u32) -> Vec<Monomial> {
    let lms = gb.leading_monomials();
    gb.ring()
        .monomials_of_degree(d)
        .into_iter()
        .filter(|m| !lms.iter().any(|l| l.divides(m)))
        .collect()
}

/// Numerator `N(t)` of the Hilbert series `N(t) / prod_i (1 - t^{w_i})` of
/// `S/(monomials)`, as coefficients in increasing powers of `t`.
pub fn hilbert_numerator(ring: &Ring, monomials: &[Monomial]) -> Vec<i64> {
    let mut gens = minimalize(monomials.to_vec());
    gens.sort_by(|a, b| ring.lex_cmp(a, b));
    numerator_rec(ring, gens)
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|o| o.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_shifted(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (j, y) in b.iter().enumerate() {
        a[j + shift] += y;
    }
}

// HS(S/J) = HS(S/(J + x)) + t^{w(x)} HS(S/(J : x)) for a pivot variable x.
fn numerator_rec(ring: &Ring, gens: Vec<Monomial>) -> Vec<i64> {
    let n = ring.num_vars();
    let pairwise_coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if pairwise_coprime {
        return gens.iter().fold(vec![1], |acc, g| {
            let mut f = vec![0; g.degree() as usize + 1];
            f[0] = 1;
            f[g.degree() as usize] -= 1;
            poly_mul(&acc, &f)
        });
    }
    // pivot on the variable occurring in the most non-pure-power generators
    let mixed = |m: &Monomial| (0..n).filter(|&i| m.exponent(i) > 0).count() > 1;
    let pivot = (0..n)
        .max_by_key(|&i| (gens.iter().filter(|g| mixed(g) && g.exponent(i) > 0).count(), n - i))
        .expect("at least one variable");
    let x = ring.variable(pivot);
    let mut plus: Vec<Monomial> = gens.iter().filter(|g| g.exponent(pivot) == 0).copied().collect();
    plus.push(x);
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| if g.exponent(pivot) > 0 { x.quotient(g) } else { *g })
        .collect();
    let mut out = numerator_rec(ring, minimalize(plus));
    let rest = numerator_rec(ring, minimalize(colon));
    poly_add_shifted(&mut out, &rest, ring.weights()[pivot] as usize);
    while out.len() > 1 && *out.last().unwrap() == 0 {
        out.pop();
    }
    out
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc as i64
}

/// Hilbert function of `S/I` up to `m_max`, with the Hilbert polynomial
/// interpolated on the stabilised tail (standard grading only).
pub fn hilbert_function<K: Coeff>(ideal: &Ideal<K>, m_max: u32) -> Result<HilbertData> {
    let ring = ideal.ring();
    let gb = ideal.groebner();
    let values: Vec<u64> = (0..=m_max).map(|m| standard_monomials(gb, m).len() as u64).collect();
    if !ring.is_standard_graded() {
        return Ok(HilbertData {
            values,
            hilbert_polynomial: None,
            stabilization_degree: 0,
        });
    }
    let n = ring.num_vars() as i64;
    let numerator = hilbert_numerator(ring, &gb.leading_monomials());
    let stab = (numerator.len() as i64 - 1 - n + 1).max(0) as u32;
    // n interpolation points for a polynomial of degree <= n - 1, two checks
    let needed = stab + n as u32 + 1;
    if needed > m_max {
        return Err(Error::NotStabilized { m_max, needed });
    }
    let window: Vec<i64> = (stab..stab + n as u32).map(|m| values[m as usize] as i64).collect();
    let poly = interpolate(stab as i64, &window);
    let data = HilbertData {
        values,
        hilbert_polynomial: Some(poly),
        stabilization_degree: stab,
    };
    for m in stab + n as u32..=needed {
        let v = Rational::integer(data.values[m as usize] as i64);
        if data.polynomial_at(m as i64) != Some(v) {
            return Err(Error::Internal(format!("Hilbert polynomial fails at degree {m}")));
        }
    }
    // cross-check the counted values with the series numerator
    for m in 0..=m_max as i64 {
        let from_series: i64 = numerator
            .iter()
            .enumerate()
            .map(|(i, k)| k * binomial(m - i as i64 + n - 1, n - 1))
            .sum();
        if from_series != data.values[m as usize] as i64 {
            return Err(Error::Internal(format!("Hilbert series disagrees with count at degree {m}")));
        }
    }
    Ok(data)
}

/// Newton interpolation through `(start + i, values[i])`, returned in the
/// monomial basis.
fn interpolate(start: i64, values: &[i64]) -> Vec<Rational> {
    let f = crate::field::FieldDescriptor::Rationals;
    let n = values.len();
    let mut diffs: Vec<Rational> = values.iter().map(|&v| Rational::integer(v)).collect();
    let mut newton = Vec::with_capacity(n);
    for k in 0..n {
        newton.push(diffs[0].clone());
        diffs = diffs.windows(2).map(|w| w[1].sub(&w[0])).collect();
        let _ = k;
    }
    // sum_k newton[k] * binom(m - start, k), expanded
    let mut out = vec![Rational::zero(f); n.max(1)];
    let mut basis = vec![Rational::one(f)]; // binom(m - start, 0)
    for (k, c) in newton.iter().enumerate() {
        for (i, b) in basis.iter().enumerate() {
            out[i] = out[i].add(&c.mul(b));
        }
        // basis *= (m - start - k) / (k + 1)
        let shift = Rational::integer(-(start + k as i64));
        let scale = Rational::new(1, k as i64 + 1).unwrap();
        let mut next = vec![Rational::zero(f); basis.len() + 1];
        for (i, b) in basis.iter().enumerate() {
            next[i + 1] = next[i + 1].add(&b.mul(&scale));
            next[i] = next[i].add(&b.mul(&shift).mul(&scale));
        }
        basis = next;
    }
    while out.len() > 1 && out.last().unwrap().is_zero() {
        out.pop();
    }
    if out.len() == 1 && out[0].is_zero() {
        out.clear();
    }
    out
}

/// `(dim, degree)` of the projective scheme from its Hilbert polynomial;
/// the empty scheme is `(-1, 0)`.
pub fn dimension_degree(h: &HilbertData) -> Result<(i64, u64)> {
    let poly = h
        .hilbert_polynomial
        .as_ref()
        .ok_or_else(|| Error::Precondition("Hilbert polynomial not available".into()))?;
    if poly.is_empty() {
        return Ok((-1, 0));
    }
    let dim = poly.len() as i64 - 1;
    let mut lead = poly.last().unwrap().clone();
    for k in 1..=dim {
        lead = lead.mul(&Rational::integer(k));
    }
    match lead.to_i64() {
        Some(d) if d > 0 => Ok((dim, d as u64)),
        _ => Err(Error::Internal(format!("non-integral degree {lead}"))),
    }
}
