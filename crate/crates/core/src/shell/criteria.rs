//! Sufficient and necessary conditions for a PG-shell, each compared with
//! the verdict of the direct check.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::groebner::{is_minimal_generator, is_part_of_minimal_generators, minimal_generators, saturate_irrelevant};
use crate::ideal::Ideal;

use super::invariants::{invariants, InvariantRecord};
use super::{check_containment, pgshell_check, Method, Verdict};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionResult {
    pub name: &'static str,
    pub statement: &'static str,
    pub applicable: bool,
    /// Why the criterion was skipped.
    pub reason: Option<String>,
    /// Predicted verdict or the inequality that must hold.
    pub predicted: Option<String>,
    pub observed: Option<String>,
    pub consistent: Option<bool>,
}

impl CriterionResult {
    fn skipped(name: &'static str, statement: &'static str, reason: impl Into<String>) -> Self {
        CriterionResult {
            name,
            statement,
            applicable: false,
            reason: Some(reason.into()),
            predicted: None,
            observed: None,
            consistent: None,
        }
    }

    fn checked(name: &'static str, statement: &'static str, predicted: String, observed: String, consistent: bool) -> Self {
        CriterionResult {
            name,
            statement,
            applicable: true,
            reason: None,
            predicted: Some(predicted),
            observed: Some(observed),
            consistent: Some(consistent),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriteriaReport {
    /// Verdict of the direct chain-map check.
    pub verdict: Verdict,
    pub invariants_v: InvariantRecord,
    pub invariants_w: InvariantRecord,
    pub criteria: Vec<CriterionResult>,
    pub notes: Vec<String>,
}

impl CriteriaReport {
    /// No applicable criterion contradicts the direct verdict.
    pub fn all_consistent(&self) -> bool {
        self.criteria.iter().all(|c| c.consistent != Some(false))
    }
}

fn verdict_if(b: bool) -> Verdict {
    if b {
        Verdict::PgShell
    } else {
        Verdict::NotPgShell
    }
}

const HYPERSURFACE: &str = "a hypersurface W is a PG-shell iff its equation is a minimal generator of I_V";
const CI: &str = "for V a complete intersection, W is a PG-shell iff I_W is generated by part of a minimal generating set of I_V";
const NEIGHBOURHOOD: &str = "a PG-shell W of V is a PG-shell of the neighbourhood defined by I_V^(m+1) + I_W";
const DEPTH: &str = "a PG-shell satisfies depth(V) <= depth(W)";
const REGULARITY: &str = "a PG-shell of V with depth(V) >= 2 satisfies reg(V) >= reg(W)";
const TWO_LINEAR: &str = "for V nondegenerate, W with a 2-linear resolution is a PG-shell";

/// Runs every criterion that applies to the pair `V ⊆ W` and records
/// whether its prediction matches the direct verdict.
pub fn criteria_suite<K: Coeff>(ideal_v: &Ideal<K>, ideal_w: &Ideal<K>) -> Result<CriteriaReport> {
    if !check_containment(ideal_v, ideal_w)? {
        return Err(Error::ContainmentFailed);
    }
    let direct = pgshell_check(ideal_v, ideal_w, Method::ChainMap)?.verdict;
    let iv = invariants(ideal_v)?;
    let iw = invariants(ideal_w)?;
    let shell = direct == Verdict::PgShell;
    let mut out = Vec::new();

    let gens_w = minimal_generators(ideal_w);
    out.push(if gens_w.len() == 1 {
        let f = &gens_w[0];
        let predicted = verdict_if(is_minimal_generator(f, ideal_v)?);
        CriterionResult::checked("hypersurface", HYPERSURFACE, predicted.to_string(), direct.to_string(), predicted == direct)
    } else {
        CriterionResult::skipped("hypersurface", HYPERSURFACE, format!("I_W has {} minimal generators", gens_w.len()))
    });

    out.push(if iv.is_complete_intersection {
        let predicted = verdict_if(is_part_of_minimal_generators(ideal_w, ideal_v)?);
        CriterionResult::checked("complete-intersection", CI, predicted.to_string(), direct.to_string(), predicted == direct)
    } else {
        CriterionResult::skipped("complete-intersection", CI, "V is not a complete intersection")
    });

    for (m, name) in [(1, "neighbourhood-1"), (2, "neighbourhood-2")] {
        out.push(if shell {
            let y = ideal_v.power(m + 1)?.sum(ideal_w)?;
            let (y, _) = saturate_irrelevant(&y)?;
            let observed = pgshell_check(&y, ideal_w, Method::ChainMap)?.verdict;
            CriterionResult::checked(name, NEIGHBOURHOOD, Verdict::PgShell.to_string(), observed.to_string(), observed == Verdict::PgShell)
        } else {
            CriterionResult::skipped(name, NEIGHBOURHOOD, "W is not a PG-shell of V")
        });
    }

    out.push(if shell {
        CriterionResult::checked(
            "depth",
            DEPTH,
            "depth(V) <= depth(W)".into(),
            format!("{} <= {}", iv.depth, iw.depth),
            iv.depth <= iw.depth,
        )
    } else {
        CriterionResult::skipped("depth", DEPTH, "W is not a PG-shell of V")
    });

    out.push(if !shell {
        CriterionResult::skipped("regularity", REGULARITY, "W is not a PG-shell of V")
    } else if iv.depth < 2 {
        CriterionResult::skipped("regularity", REGULARITY, format!("depth(V) = {} < 2", iv.depth))
    } else {
        CriterionResult::checked(
            "regularity",
            REGULARITY,
            "reg_R(V) >= reg_R(W)".into(),
            format!("{} >= {}", iv.reg_r, iw.reg_r),
            iv.reg_r >= iw.reg_r,
        )
    });

    out.push(if ideal_v.contains_linear_form() {
        CriterionResult::skipped("two-linear", TWO_LINEAR, "V lies in a hyperplane")
    } else if !iw.is_2linear {
        CriterionResult::skipped("two-linear", TWO_LINEAR, "W does not have a 2-linear resolution")
    } else {
        CriterionResult::checked("two-linear", TWO_LINEAR, Verdict::PgShell.to_string(), direct.to_string(), shell)
    });

    Ok(CriteriaReport {
        verdict: direct,
        invariants_v: iv,
        invariants_w: iw,
        criteria: out,
        notes: vec!["regularity compared as reg_R = max(m - q); reg_I = reg_R + 1 shifts both sides equally".into()],
    })
}
