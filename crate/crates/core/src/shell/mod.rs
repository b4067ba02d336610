//! Intermediate schemes `V ⊆ W ⊆ P^N` and the maps
//! `mu_q : Tor_q(R_W, k) -> Tor_q(R_V, k)`.
//!
//! `W` is a PG-shell of `V` when every `mu_q` with `q >= 1` is injective.
//! [`pgshell_check`] decides this from a lifted chain map between minimal
//! resolutions, from Koszul homology, or both, and requires the two to agree
//! wherever both are computed.

mod chain;
mod criteria;
mod invariants;
mod oracle;
mod tensor;

pub use chain::{lift_chain_map, ChainMap, TorBlock, TorMap};
pub use criteria::{criteria_suite, CriteriaReport, CriterionResult};
pub use invariants::{ci_chain_report, invariants, CiChainReport, DeltaGenusStatus, InvariantRecord};
pub use tensor::{tensor_resolution, TensorReport};

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::ideal::Ideal;
use crate::linalg::SparseVec;
use crate::poly::Polynomial;
use crate::resolution::{koszul_homology, minimal_resolution};
use crate::ring::Ring;

use oracle::{oracle_block, tor_support};

/// Whether `I_W ⊆ I_V`, i.e. `V ⊆ W`.
pub fn check_containment<K: Coeff>(ideal_v: &Ideal<K>, ideal_w: &Ideal<K>) -> Result<bool> {
    if ideal_v.ring() != ideal_w.ring() {
        return Err(Error::RingMismatch);
    }
    for g in ideal_w.generators() {
        if !ideal_v.contains(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `I` equals its saturation by `S_+`, decided as
/// `Tor_n(S/I, k) = 0` (depth at least one).
pub fn is_saturated<K: Coeff>(ideal: &Ideal<K>) -> bool {
    let n = ideal.ring().num_vars();
    tor_support(ideal.groebner())
        .into_iter()
        .filter(|&(q, _)| q == n)
        .all(|(q, top)| (q as i64..=top).all(|m| koszul_homology(ideal, q, m).dimension() == 0))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Verdict {
    #[serde(rename = "pg-shell")]
    PgShell,
    #[serde(rename = "not-pg-shell")]
    NotPgShell,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::PgShell => "pg-shell",
            Verdict::NotPgShell => "not-pg-shell",
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub enum Method {
    /// Chain map, with the oracle run on `q = 1` as a spot check.
    #[default]
    #[serde(rename = "chain-map")]
    ChainMap,
    #[serde(rename = "koszul-oracle")]
    KoszulOracle,
    #[serde(rename = "both")]
    Both,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::ChainMap => "chain-map",
            Method::KoszulOracle => "koszul-oracle",
            Method::Both => "both",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "chain" | "chain-map" => Ok(Method::ChainMap),
            "oracle" | "koszul-oracle" => Ok(Method::KoszulOracle),
            "both" => Ok(Method::Both),
            _ => Err(Error::Precondition(format!("unknown method '{s}' (chain, oracle or both)"))),
        }
    }
}

/// Rank data of `mu_q` in degree `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct InjectivityEntry {
    pub q: usize,
    pub m: i64,
    /// `beta_{q,m}` of `R_W`.
    pub source_dim: usize,
    /// `beta_{q,m}` of `R_V`.
    pub target_dim: usize,
    pub rank: usize,
    pub injective: bool,
}

/// A nonzero element of `ker mu_q` in degree `m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub q: usize,
    pub m: i64,
    /// Coefficients on the degree-`m` generators of `F_q` (chain-map route),
    /// as `(generator index, coefficient)`.
    pub generator_coefficients: Option<Vec<(usize, String)>>,
    /// The same class as a Koszul cycle `sum p_J e_J` of `S/I_W`.
    pub cycle: String,
    /// Re-checked: the cycle is not a boundary for `W`, its image is a
    /// boundary for `V`, and any chain-map vector is killed by `mu_q`.
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShellReport {
    pub verdict: Verdict,
    pub method: Method,
    /// Every `(q, m)` with `q >= 1` and `beta_{q,m}(R_W) > 0`, ascending.
    pub table: Vec<InjectivityEntry>,
    pub witness: Option<Witness>,
    /// Homological degrees on which both routes were computed and agreed.
    pub cross_checked: Vec<usize>,
    pub warnings: Vec<String>,
}

impl ShellReport {
    pub fn is_pg_shell(&self) -> bool {
        self.verdict == Verdict::PgShell
    }
}

/// Renders `sum p_J e_J` with `e_J` written as `e(z0,z2)`.
pub fn format_cycle<K: Coeff>(ring: &Ring, parts: &[(Vec<usize>, Polynomial<K>)]) -> String {
    if parts.is_empty() {
        return "0".into();
    }
    parts
        .iter()
        .map(|(j, p)| {
            let names: Vec<&str> = j.iter().map(|&v| ring.names()[v].as_str()).collect();
            format!("({p})*e({})", names.join(","))
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

struct ChainOutcome<K> {
    table: Vec<InjectivityEntry>,
    kernel: Option<(usize, i64, Vec<usize>, SparseVec<K>, bool)>,
}

fn chain_route<K: Coeff>(v: &Ideal<K>, w: &Ideal<K>) -> Result<ChainOutcome<K>> {
    let res_v = minimal_resolution(v)?;
    let res_w = minimal_resolution(w)?;
    let phi = lift_chain_map(&res_w, &res_v)?;
    let ring = v.ring();
    let mut table = Vec::new();
    let mut kernel = None;
    for q in 1..=res_w.length() {
        for block in phi.tor_map(q).blocks {
            let injective = block.is_injective();
            table.push(InjectivityEntry {
                q,
                m: block.m,
                source_dim: block.source_generators.len(),
                target_dim: block.target_generators.len(),
                rank: block.rank,
                injective,
            });
            if !injective && kernel.is_none() {
                let x = block.kernel(ring).into_iter().next().expect("non-injective block has a kernel");
                let killed = block.apply(&x, ring).iter().all(|c| c.is_zero()) && !x.is_empty();
                let gens: Vec<usize> = x.iter().map(|(k, _)| block.source_generators[*k]).collect();
                kernel = Some((q, block.m, gens, x, killed));
            }
        }
    }
    Ok(ChainOutcome { table, kernel })
}

fn oracle_route<K: Coeff>(v: &Ideal<K>, w: &Ideal<K>, only_q: Option<usize>) -> Vec<InjectivityEntry> {
    let mut table = Vec::new();
    for (q, top) in tor_support(w.groebner()) {
        if only_q.is_some_and(|k| k != q) {
            continue;
        }
        for m in q as i64..=top {
            if let Some(b) = oracle_block(v, w, q, m) {
                table.push(InjectivityEntry {
                    q,
                    m,
                    source_dim: b.source_dim,
                    target_dim: b.target_dim,
                    rank: b.rank,
                    injective: b.rank == b.source_dim,
                });
            }
        }
    }
    table
}

/// Decides whether `W` (ideal `I_W`) is a PG-shell of `V` (ideal `I_V`).
///
/// A negative verdict always carries a witness re-verified on Koszul
/// homology; a failed verification or a disagreement between the two routes
/// is reported as [`Error::Internal`].
pub fn pgshell_check<K: Coeff>(ideal_v: &Ideal<K>, ideal_w: &Ideal<K>, method: Method) -> Result<ShellReport> {
    if !check_containment(ideal_v, ideal_w)? {
        return Err(Error::ContainmentFailed);
    }
    let mut warnings = Vec::new();
    for (name, ideal) in [("V", ideal_v), ("W", ideal_w)] {
        if !is_saturated(ideal) {
            warnings.push(format!("ideal of {name} is not saturated; results refer to this ideal, see `saturate`"));
        }
    }

    let (table, chain_kernel, cross_checked) = match method {
        Method::KoszulOracle => (oracle_route(ideal_v, ideal_w, None), None, Vec::new()),
        Method::ChainMap | Method::Both => {
            let chain = chain_route(ideal_v, ideal_w)?;
            let only = if method == Method::ChainMap { Some(1) } else { None };
            let oracle = oracle_route(ideal_v, ideal_w, only);
            let restricted: Vec<InjectivityEntry> =
                chain.table.iter().filter(|e| only.is_none_or(|k| e.q == k)).copied().collect();
            if restricted != oracle {
                return Err(Error::Internal(format!(
                    "chain-map and Koszul routes disagree: {restricted:?} vs {oracle:?}"
                )));
            }
            let mut qs: Vec<usize> = match only {
                Some(k) => vec![k],
                None => chain.table.iter().map(|e| e.q).collect(),
            };
            qs.dedup();
            (chain.table, chain.kernel, qs)
        }
    };

    let verdict = if table.iter().all(|e| e.injective) { Verdict::PgShell } else { Verdict::NotPgShell };
    let witness = match table.iter().find(|e| !e.injective) {
        None => None,
        Some(e) => {
            let block = oracle_block(ideal_v, ideal_w, e.q, e.m)
                .ok_or_else(|| Error::Internal(format!("Koszul homology vanishes at ({}, {})", e.q, e.m)))?;
            let ow = block.witness.ok_or_else(|| Error::Internal("no Koszul witness for a non-injective block".into()))?;
            let (coeffs, chain_ok) = match &chain_kernel {
                Some((q, m, gens, x, killed)) if (*q, *m) == (e.q, e.m) => (
                    Some(gens.iter().zip(x).map(|(g, (_, c))| (*g, c.to_string())).collect()),
                    *killed,
                ),
                Some(_) => (None, false),
                None => (None, true),
            };
            let w = Witness {
                q: e.q,
                m: e.m,
                generator_coefficients: coeffs,
                cycle: format_cycle(ideal_v.ring(), &ow.cycle),
                verified: ow.verified && chain_ok,
            };
            if !w.verified {
                return Err(Error::Internal(format!("witness at ({}, {}) failed verification", e.q, e.m)));
            }
            Some(w)
        }
    };
    Ok(ShellReport {
        verdict,
        method,
        table,
        witness,
        cross_checked,
        warnings,
    })
}
