use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::groebner::{dimension_degree, hilbert_function, minimal_generators, HilbertData};
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::resolution::{minimal_resolution, regularity_and_depth, BettiTable};

/// How far `dim + deg - (N + 1)` can be trusted as the Δ-genus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DeltaGenusStatus {
    /// No linear forms in the ideal, so `h^0(O_V(1)) = N + 1` is used.
    Nondegenerate,
    /// `V` lies in a hyperplane; the value is only a lower bound.
    LowerBound,
    /// `V = P^N`.
    Degenerate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantRecord {
    pub dim: i64,
    pub codim: i64,
    pub degree: u64,
    pub depth: usize,
    pub pd: usize,
    pub reg_r: i64,
    pub reg_i: i64,
    pub delta_genus: i64,
    pub delta_genus_status: DeltaGenusStatus,
    /// Minimal generator counts keyed by degree.
    pub num_min_gens: BTreeMap<i64, u64>,
    pub is_complete_intersection: bool,
    pub is_2linear: bool,
    pub is_acm: bool,
    pub betti: BettiTable,
}

/// Hilbert data, raising the degree bound until it stabilises.
pub(crate) fn stable_hilbert<K: Coeff>(ideal: &Ideal<K>, start: u32) -> Result<HilbertData> {
    let mut bound = start;
    loop {
        match hilbert_function(ideal, bound) {
            Err(Error::NotStabilized { needed, .. }) if needed > bound => bound = needed,
            other => return other,
        }
    }
}

/// Dimension, degree, depth, regularity and the Betti-derived flags of
/// `S/I` for a proper homogeneous ideal of a standard-graded ring.
pub fn invariants<K: Coeff>(ideal: &Ideal<K>) -> Result<InvariantRecord> {
    let ring = ideal.ring();
    if !ring.is_standard_graded() {
        return Err(Error::WeightedRing);
    }
    if ideal.is_unit() {
        return Err(Error::Precondition("the unit ideal defines the empty scheme".into()));
    }
    let betti = minimal_resolution(ideal)?.betti()?;
    let rd = regularity_and_depth(&betti, ring)?;
    let n = ring.num_vars() as i64;
    let hilbert = stable_hilbert(ideal, (rd.reg_r + n + 1).max(1) as u32)?;
    let (dim, degree) = dimension_degree(&hilbert)?;
    let codim = n - 1 - dim;
    let num_min_gens: BTreeMap<i64, u64> = betti.degrees(1).into_iter().map(|m| (m, betti.get(1, m))).collect();
    let is_2linear = betti.entries().all(|((q, m), _)| q == 0 || m == q as i64 + 1);
    let delta_genus_status = if ideal.is_zero() {
        DeltaGenusStatus::Degenerate
    } else if ideal.contains_linear_form() {
        DeltaGenusStatus::LowerBound
    } else {
        DeltaGenusStatus::Nondegenerate
    };
    Ok(InvariantRecord {
        dim,
        codim,
        degree,
        depth: rd.depth,
        pd: rd.pd,
        reg_r: rd.reg_r,
        reg_i: rd.reg_i,
        delta_genus: dim + degree as i64 - n,
        delta_genus_status,
        is_complete_intersection: betti.total(1) as i64 == codim,
        is_2linear,
        is_acm: rd.depth as i64 == dim + 1,
        num_min_gens,
        betti,
    })
}

/// The length-one composition series `E_1 = ⊕ O_P(m_s)` of a complete
/// intersection: the degrees of a minimal regular sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CiChainReport {
    /// `m_1 <= ... <= m_r`.
    pub degrees: Vec<i64>,
    /// A minimal generating set, which is a regular sequence, ordered by degree.
    pub generators: Vec<String>,
    /// The Betti table equals that of the Koszul complex on `degrees`.
    pub koszul_shape: bool,
    pub series_length: usize,
}

pub fn ci_chain_report<K: Coeff>(ideal: &Ideal<K>) -> Result<CiChainReport> {
    let rec = invariants(ideal)?;
    if !rec.is_complete_intersection {
        return Err(Error::NotCompleteIntersection(format!(
            "{} minimal generators but codimension {}",
            rec.betti.total(1),
            rec.codim
        )));
    }
    let mut gens: Vec<Polynomial<K>> = minimal_generators(ideal);
    gens.sort_by_key(|g| g.homogeneous_degree());
    let degrees: Vec<i64> = gens.iter().map(|g| g.homogeneous_degree().unwrap_or(0) as i64).collect();
    let mut koszul = BettiTable::from_entries([((0, 0), 1)]);
    for &d in &degrees {
        koszul = koszul.convolve(&BettiTable::from_entries([((0, 0), 1), ((1, d), 1)]));
    }
    Ok(CiChainReport {
        koszul_shape: koszul == rec.betti,
        generators: gens.iter().map(|g| g.to_string()).collect(),
        degrees,
        series_length: 1,
    })
}
