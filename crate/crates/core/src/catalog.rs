//! Deterministic constructors for the classical ideals used as a
//! regression corpus, each with the invariants it is expected to have.

use crate::error::{Error, Result};
use crate::field::{Coeff, FieldDescriptor};
use crate::groebner::{dimension_degree, hilbert_function, minimal_generators};
use crate::ideal::Ideal;
use crate::linalg::{self, SparseVec};
use crate::poly::Polynomial;
use crate::ring::{Ring, RingDescriptor};

/// SplitMix64 (Steele, Lea, Flood 2014): state advances by
/// `0x9E3779B97F4A7C15`; output mixes with multipliers
/// `0xBF58476D1CE4E5B9`, `0x94D049BB133111EB` and shifts 30, 27, 31.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform on `{-5, ..., -1, 1, ..., 5}` (value `next % 10`).
    pub fn coefficient(&mut self) -> i64 {
        let k = (self.next_u64() % 10) as i64;
        if k < 5 {
            k - 5
        } else {
            k - 4
        }
    }
}

/// Invariants a catalog entry is known to have, with where they come from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expected {
    pub betti: Vec<((usize, i64), u64)>,
    pub dim: i64,
    pub degree: u64,
    pub depth: usize,
    pub reg_r: i64,
    pub is_complete_intersection: bool,
    pub is_2linear: bool,
    pub is_acm: bool,
    pub delta_genus: i64,
    pub source: &'static str,
}

#[derive(Clone)]
pub struct CatalogEntry<K> {
    pub name: String,
    pub ideal: Ideal<K>,
    pub expected: Option<Expected>,
    pub notes: String,
}

impl<K: Coeff> std::fmt::Debug for CatalogEntry<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CatalogEntry")
            .field("name", &self.name)
            .field("ideal", &self.ideal)
            .field("expected", &self.expected)
            .finish()
    }
}

impl<K: Coeff> CatalogEntry<K> {
    pub fn ring(&self) -> &Ring {
        self.ideal.ring()
    }
}

fn standard_ring(field: FieldDescriptor, num_vars: usize) -> Result<Ring> {
    RingDescriptor::standard(field, num_vars)
}

fn koszul_betti(degrees: &[i64]) -> Vec<((usize, i64), u64)> {
    let mut table = std::collections::BTreeMap::new();
    for mask in 0u32..(1 << degrees.len()) {
        let q = mask.count_ones() as usize;
        let m: i64 = (0..degrees.len()).filter(|i| mask & (1 << i) != 0).map(|i| degrees[i]).sum();
        *table.entry((q, m)).or_insert(0u64) += 1;
    }
    table.into_iter().collect()
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// All `t x t` minors, rows and columns chosen in lexicographic order,
/// each expanded along its first row; zero minors are dropped.
pub fn minors<K: Coeff>(ring: &Ring, matrix: &[Vec<Polynomial<K>>], t: usize) -> Vec<Polynomial<K>> {
    fn det<K: Coeff>(ring: &Ring, m: &[Vec<Polynomial<K>>]) -> Polynomial<K> {
        if m.len() == 1 {
            return m[0][0].clone();
        }
        let mut acc = Polynomial::zero(ring);
        for (c, a) in m[0].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let sub: Vec<Vec<Polynomial<K>>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, p)| p.clone()).collect())
                .collect();
            let term = a.mul_unchecked(&det(ring, &sub));
            acc = if c % 2 == 0 { acc.add_unchecked(&term) } else { acc.sub_unchecked(&term) };
        }
        acc
    }
    let rows = crate::resolution::subsets_of(matrix.len(), t);
    let cols = crate::resolution::subsets_of(matrix.first().map_or(0, |r| r.len()), t);
    let mut out = Vec::new();
    for r in &rows {
        for c in &cols {
            let sub: Vec<Vec<Polynomial<K>>> = r.iter().map(|&i| c.iter().map(|&j| matrix[i][j].clone()).collect()).collect();
            let d = det(ring, &sub);
            if !d.is_zero() {
                out.push(d);
            }
        }
    }
    out
}

/// Matrix of variables given by indices.
fn var_matrix<K: Coeff>(ring: &Ring, idx: &[&[usize]]) -> Vec<Vec<Polynomial<K>>> {
    idx.iter().map(|row| row.iter().map(|&v| Polynomial::variable(ring, v)).collect()).collect()
}

/// Ideal of `t x t` minors of a homogeneous matrix.
pub fn determinantal_minors<K: Coeff>(
    name: &str,
    ring: &Ring,
    matrix: &[Vec<Polynomial<K>>],
    t: usize,
) -> Result<CatalogEntry<K>> {
    let gens = minors(ring, matrix, t);
    if let Some(g) = gens.iter().find(|g| !g.is_homogeneous()) {
        return Err(Error::Inhomogeneous(g.to_string()));
    }
    Ok(CatalogEntry {
        name: name.to_string(),
        ideal: Ideal::new(ring, gens)?,
        expected: None,
        notes: format!("{t} x {t} minors"),
    })
}

/// 2 x 2 minors of `[[z_0 .. z_{d-1}], [z_1 .. z_d]]`.
pub fn rational_normal_curve<K: Coeff>(field: FieldDescriptor, d: usize) -> Result<CatalogEntry<K>> {
    if d < 2 {
        return Err(Error::Precondition("rational normal curve needs d >= 2".into()));
    }
    let ring = standard_ring(field, d + 1)?;
    let top: Vec<usize> = (0..d).collect();
    let bottom: Vec<usize> = (1..=d).collect();
    let m = var_matrix::<K>(&ring, &[&top, &bottom]);
    let mut e = determinantal_minors(&format!("rnc{d}"), &ring, &m, 2)?;
    // Eagon–Northcott: beta_{q,q+1} = q C(d, q+1)
    let mut betti = vec![((0, 0), 1)];
    betti.extend((1..d).map(|q| ((q, q as i64 + 1), q as u64 * binomial(d as u64, q as u64 + 1))));
    e.expected = Some(Expected {
        betti,
        dim: 1,
        degree: d as u64,
        depth: 2,
        reg_r: 1,
        is_complete_intersection: d == 2,
        is_2linear: true,
        is_acm: true,
        delta_genus: 0,
        source: "Eagon-Northcott resolution of the 2 x 2 minors",
    });
    e.notes = format!("rational normal curve of degree {d} in P^{d}");
    Ok(e)
}

/// Veronese surface in P^5: 2 x 2 minors of the generic symmetric 3 x 3 matrix.
pub fn veronese_surface<K: Coeff>(field: FieldDescriptor) -> Result<CatalogEntry<K>> {
    let ring = standard_ring(field, 6)?;
    let m = var_matrix::<K>(&ring, &[&[0, 1, 2], &[1, 3, 4], &[2, 4, 5]]);
    let mut e = determinantal_minors("veronese", &ring, &m, 2)?;
    e.expected = Some(Expected {
        betti: vec![((0, 0), 1), ((1, 2), 6), ((2, 3), 8), ((3, 4), 3)],
        dim: 2,
        degree: 4,
        depth: 3,
        reg_r: 1,
        is_complete_intersection: false,
        is_2linear: true,
        is_acm: true,
        delta_genus: 0,
        source: "Veronese surface of degree 4, a variety of minimal degree",
    });
    e.notes = "Veronese surface in P^5".into();
    Ok(e)
}

/// Rational normal scroll S(1,2) in P^4.
pub fn scroll_1_2<K: Coeff>(field: FieldDescriptor) -> Result<CatalogEntry<K>> {
    let ring = standard_ring(field, 5)?;
    let m = var_matrix::<K>(&ring, &[&[0, 2, 3], &[1, 3, 4]]);
    let mut e = determinantal_minors("scroll12", &ring, &m, 2)?;
    e.expected = Some(Expected {
        betti: vec![((0, 0), 1), ((1, 2), 3), ((2, 3), 2)],
        dim: 2,
        degree: 3,
        depth: 3,
        reg_r: 1,
        is_complete_intersection: false,
        is_2linear: true,
        is_acm: true,
        delta_genus: 0,
        source: "Eagon-Northcott resolution of a 2 x 3 matrix of linear forms",
    });
    e.notes = "rational normal scroll S(1,2) in P^4".into();
    Ok(e)
}

/// Cone over a conic in P^3: the minor of `[[z0, z1], [z1, z2]]`.
pub fn conic_cone<K: Coeff>(field: FieldDescriptor) -> Result<CatalogEntry<K>> {
    let ring = standard_ring(field, 4)?;
    let m = var_matrix::<K>(&ring, &[&[0, 1], &[1, 2]]);
    let mut e = determinantal_minors("conic-cone", &ring, &m, 2)?;
    e.expected = Some(Expected {
        betti: vec![((0, 0), 1), ((1, 2), 1)],
        dim: 2,
        degree: 2,
        depth: 3,
        reg_r: 1,
        is_complete_intersection: true,
        is_2linear: true,
        is_acm: true,
        delta_genus: 0,
        source: "quadric hypersurface",
    });
    e.notes = "quadric cone over a conic in P^3".into();
    Ok(e)
}

/// Cone over the twisted cubic in P^5: minors of `[[z0,z1,z2],[z1,z2,z3]]`.
pub fn twisted_cubic_cone<K: Coeff>(field: FieldDescriptor) -> Result<CatalogEntry<K>> {
    let ring = standard_ring(field, 6)?;
    let m = var_matrix::<K>(&ring, &[&[0, 1, 2], &[1, 2, 3]]);
    let mut e = determinantal_minors("cubic-cone", &ring, &m, 2)?;
    e.expected = Some(Expected {
        betti: vec![((0, 0), 1), ((1, 2), 3), ((2, 3), 2)],
        dim: 3,
        degree: 3,
        depth: 4,
        reg_r: 1,
        is_complete_intersection: false,
        is_2linear: true,
        is_acm: true,
        delta_genus: 0,
        source: "Eagon-Northcott resolution; coning adds two free variables",
    });
    e.notes = "cone over the twisted cubic in P^5".into();
    Ok(e)
}

/// Generic forms of the given degrees in `num_vars` variables with
/// coefficients drawn from [`SplitMix64::coefficient`], one per monomial in
/// the ring's monomial enumeration order. The regular-sequence property is
/// checked via the codimension of the Hilbert polynomial.
pub fn complete_intersection<K: Coeff>(
    field: FieldDescriptor,
    num_vars: usize,
    degrees: &[u32],
    seed: u64,
) -> Result<CatalogEntry<K>> {
    if degrees.is_empty() || degrees.len() >= num_vars {
        return Err(Error::Precondition("need 1 <= #degrees <= N".into()));
    }
    let ring = standard_ring(field, num_vars)?;
    let mut rng = SplitMix64::new(seed);
    let gens: Vec<Polynomial<K>> = degrees
        .iter()
        .map(|&d| {
            let terms = ring
                .monomials_of_degree(d)
                .into_iter()
                .map(|m| (m, K::from_i64(rng.coefficient(), field)))
                .collect();
            Polynomial::from_terms(&ring, terms)
        })
        .collect();
    let ideal = Ideal::new(&ring, gens)?;
    let bound = degrees.iter().sum::<u32>() + num_vars as u32 + 2;
    let (dim, degree) = dimension_degree(&hilbert_function(&ideal, bound)?)?;
    let codim = num_vars as i64 - 1 - dim;
    if codim != degrees.len() as i64 {
        return Err(Error::NotCompleteIntersection(format!(
            "seed {seed} gives codimension {codim}, not {}",
            degrees.len()
        )));
    }
    let prod: u64 = degrees.iter().map(|&d| d as u64).product();
    let sum: i64 = degrees.iter().map(|&d| d as i64).sum();
    let ds: Vec<i64> = degrees.iter().map(|&d| d as i64).collect();
    let r = degrees.len() as i64;
    let label: Vec<String> = degrees.iter().map(|d| d.to_string()).collect();
    Ok(CatalogEntry {
        name: format!("ci{}", label.join("-")),
        ideal,
        expected: Some(Expected {
            betti: koszul_betti(&ds),
            dim,
            degree,
            depth: num_vars - degrees.len(),
            reg_r: sum - r,
            is_complete_intersection: true,
            is_2linear: degrees.iter().all(|&d| d == 2) && degrees.len() == 1,
            is_acm: true,
            delta_genus: dim + prod as i64 - num_vars as i64,
            source: "Koszul complex of a regular sequence",
        }),
        notes: format!("complete intersection of type ({}) in P^{}, seed {seed}", label.join(","), num_vars - 1),
    })
}

/// The hyperplane `(z0)` in P^N.
pub fn hyperplane<K: Coeff>(field: FieldDescriptor, num_vars: usize) -> Result<CatalogEntry<K>> {
    let ring = standard_ring(field, num_vars)?;
    Ok(CatalogEntry {
        name: "hyperplane".into(),
        ideal: Ideal::new(&ring, vec![Polynomial::variable(&ring, 0)])?,
        expected: Some(Expected {
            betti: vec![((0, 0), 1), ((1, 1), 1)],
            dim: num_vars as i64 - 2,
            degree: 1,
            depth: num_vars - 1,
            reg_r: 0,
            is_complete_intersection: true,
            is_2linear: false,
            is_acm: true,
            delta_genus: 0,
            source: "linear hypersurface",
        }),
        notes: format!("hyperplane z0 = 0 in P^{}", num_vars - 1),
    })
}

/// The zero ideal (all of P^N).
pub fn zero_ideal<K: Coeff>(field: FieldDescriptor, num_vars: usize) -> Result<CatalogEntry<K>> {
    let ring = standard_ring(field, num_vars)?;
    Ok(CatalogEntry {
        name: "zero".into(),
        ideal: Ideal::zero(&ring),
        expected: Some(Expected {
            betti: vec![((0, 0), 1)],
            dim: num_vars as i64 - 1,
            degree: 1,
            depth: num_vars,
            reg_r: 0,
            is_complete_intersection: true,
            is_2linear: true,
            is_acm: true,
            delta_genus: 0,
            source: "polynomial ring",
        }),
        notes: format!("zero ideal of P^{}", num_vars - 1),
    })
}

/// Ideal of finitely many points with integer coordinates, from the
/// kernels of evaluation in degrees `1 ..= #points`.
pub fn points<K: Coeff>(field: FieldDescriptor, coords: &[Vec<i64>]) -> Result<Ideal<K>> {
    let n = coords.first().map_or(0, |p| p.len());
    let ring = standard_ring(field, n)?;
    let pts: Vec<Vec<K>> = coords.iter().map(|p| p.iter().map(|&c| K::from_i64(c, field)).collect()).collect();
    let mut gens = Vec::new();
    for d in 1..=coords.len().max(1) as u32 {
        let monos = ring.monomials_of_degree(d);
        // column k of the evaluation matrix is monomial k at every point
        let columns: Vec<SparseVec<K>> = monos
            .iter()
            .map(|m| {
                let p = Polynomial::term(&ring, *m, K::one(field));
                linalg::dense_to_sparse(&pts.iter().map(|pt| p.evaluate(pt)).collect::<Vec<_>>())
            })
            .collect();
        for rel in linalg::kernel_of_vectors(&columns, pts.len(), field) {
            gens.push(Polynomial::from_terms(&ring, rel.into_iter().map(|(k, c)| (monos[k], c)).collect()));
        }
    }
    let ideal = Ideal::new(&ring, gens)?;
    Ideal::new(&ring, minimal_generators(&ideal))
}

/// Five points `(1, t, t^2, t^3)` for `t = 0, 1, -1, 2` and `(0, 0, 0, 1)`.
pub fn points_on_twisted_cubic<K: Coeff>(field: FieldDescriptor) -> Result<CatalogEntry<K>> {
    let mut coords: Vec<Vec<i64>> = [0i64, 1, -1, 2].iter().map(|&t| vec![1, t, t * t, t * t * t]).collect();
    coords.push(vec![0, 0, 0, 1]);
    Ok(CatalogEntry {
        name: "tc-points".into(),
        ideal: points(field, &coords)?,
        expected: Some(Expected {
            betti: vec![((0, 0), 1), ((1, 2), 5), ((2, 3), 5), ((3, 5), 1)],
            dim: 0,
            degree: 5,
            depth: 1,
            reg_r: 2,
            is_complete_intersection: false,
            is_2linear: false,
            is_acm: true,
            delta_genus: 1,
            source: "five points in linear general position in P^3 (arithmetically Gorenstein)",
        }),
        notes: "five points on the twisted cubic".into(),
    })
}

/// Names accepted by [`by_name`].
pub const NAMES: &[&str] = &[
    "rnc", "veronese", "scroll", "conic-cone", "cubic-cone", "ci", "hyperplane", "zero", "tc-points",
];

/// Looks up an entry by name with integer parameters, as used by the
/// command line: `rnc D`, `ci N D1 D2 ...`, `hyperplane N`, `zero N`.
pub fn by_name<K: Coeff>(field: FieldDescriptor, name: &str, params: &[i64], seed: u64) -> Result<CatalogEntry<K>> {
    let param = |i: usize, default: i64| params.get(i).copied().unwrap_or(default);
    let positive = |x: i64| -> Result<usize> {
        usize::try_from(x).map_err(|_| Error::Precondition(format!("parameter {x} must be non-negative")))
    };
    match name {
        "rnc" => rational_normal_curve(field, positive(param(0, 3))?),
        "veronese" => veronese_surface(field),
        "scroll" => scroll_1_2(field),
        "conic-cone" => conic_cone(field),
        "cubic-cone" => twisted_cubic_cone(field),
        "ci" => {
            if params.len() < 2 {
                return Err(Error::Precondition("usage: ci NUM_VARS DEGREE...".into()));
            }
            let degrees = params[1..].iter().map(|&d| positive(d).map(|d| d as u32)).collect::<Result<Vec<_>>>()?;
            complete_intersection(field, positive(params[0])?, &degrees, seed)
        }
        "hyperplane" => hyperplane(field, positive(param(0, 4))?),
        "zero" => zero_ideal(field, positive(param(0, 4))?),
        "tc-points" => points_on_twisted_cubic(field),
        _ => Err(Error::Precondition(format!("unknown catalog entry '{name}' (known: {})", NAMES.join(", ")))),
    }
}
