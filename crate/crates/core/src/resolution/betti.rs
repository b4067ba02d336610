use std::collections::BTreeMap;
use std::fmt::Write;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::ring::Ring;

use super::GradedFreeModule;

/// `beta_{q,m}`: the number of degree-`m` generators of the `q`-th free
/// module in a minimal resolution.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BettiTable {
    entries: BTreeMap<(usize, i64), u64>,
}

impl BettiTable {
    pub fn from_modules(modules: &[GradedFreeModule]) -> Self {
        let mut entries = BTreeMap::new();
        for (q, f) in modules.iter().enumerate() {
            for &t in &f.twists {
                *entries.entry((q, t)).or_insert(0) += 1;
            }
        }
        BettiTable { entries }
    }

    pub fn from_entries(entries: impl IntoIterator<Item = ((usize, i64), u64)>) -> Self {
        BettiTable {
            entries: entries.into_iter().filter(|(_, b)| *b > 0).collect(),
        }
    }

    pub fn get(&self, q: usize, m: i64) -> u64 {
        self.entries.get(&(q, m)).copied().unwrap_or(0)
    }

    /// Nonzero entries, ordered by `(q, m)`.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, i64), u64)> + '_ {
        self.entries.iter().map(|(k, v)| (*k, *v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self, q: usize) -> u64 {
        self.entries.range((q, i64::MIN)..=(q, i64::MAX)).map(|(_, v)| v).sum()
    }

    /// Projective dimension: the last nonzero column.
    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|(q, _)| *q).max()
    }

    /// `max { m - q : beta_{q,m} != 0 }`.
    pub fn regularity(&self) -> Option<i64> {
        self.entries.keys().map(|(q, m)| m - *q as i64).max()
    }

    /// Degrees `m` with `beta_{q,m} != 0`.
    pub fn degrees(&self, q: usize) -> Vec<i64> {
        self.entries.range((q, i64::MIN)..=(q, i64::MAX)).map(|((_, m), _)| *m).collect()
    }

    /// `sum beta^a_{p,i} beta^b_{q-p,m-i}`: the table of a tensor product.
    pub fn convolve(&self, other: &Self) -> Self {
        let mut entries = BTreeMap::new();
        for (&(p, i), &a) in &self.entries {
            for (&(q, j), &b) in &other.entries {
                *entries.entry((p + q, i + j)).or_insert(0) += a * b;
            }
        }
        BettiTable { entries }
    }

    /// `dim (S/I)_m` recovered as `sum_q (-1)^q sum_j beta_{q,j} C(m - j + N, N)`
    /// (standard grading).
    pub fn hilbert_value(&self, num_vars: usize, m: i64) -> i64 {
        let n = num_vars as i64 - 1;
        self.entries
            .iter()
            .map(|(&(q, j), &b)| {
                let sign = if q % 2 == 0 { 1 } else { -1 };
                sign * b as i64 * binomial(m - j + n, n)
            })
            .sum()
    }

    /// `{"q": {"m": beta}}` with string keys.
    pub fn to_json(&self) -> Value {
        let mut out = Map::new();
        for (&(q, m), &b) in &self.entries {
            let row = out.entry(q.to_string()).or_insert_with(|| json!({}));
            row.as_object_mut().unwrap().insert(m.to_string(), json!(b));
        }
        Value::Object(out)
    }

    /// Grid with rows `m - q` and columns `q`, totals on top.
    pub fn render(&self) -> String {
        let Some(pd) = self.projective_dimension() else {
            return "total: 0\n".to_string();
        };
        let lo = self.entries.keys().map(|(q, m)| m - *q as i64).min().unwrap();
        let hi = self.regularity().unwrap();
        let cell = |q: usize, r: i64| -> String {
            match self.get(q, r + q as i64) {
                0 => ".".to_string(),
                b => b.to_string(),
            }
        };
        let mut widths: Vec<usize> = (0..=pd).map(|q| self.total(q).to_string().len().max(q.to_string().len())).collect();
        for (q, w) in widths.iter_mut().enumerate() {
            for r in lo..=hi {
                *w = (*w).max(cell(q, r).len());
            }
        }
        let label = format!("{hi}:").len().max(format!("{lo}:").len()).max("total:".len());
        let mut s = String::new();
        let _ = write!(s, "{:>label$}", "");
        for (q, w) in widths.iter().enumerate() {
            let _ = write!(s, " {:>w$}", q);
        }
        s.push('\n');
        let _ = write!(s, "{:>label$}", "total:");
        for (q, w) in widths.iter().enumerate() {
            let _ = write!(s, " {:>w$}", self.total(q));
        }
        s.push('\n');
        for r in lo..=hi {
            let _ = write!(s, "{:>label$}", format!("{r}:"));
            for (q, w) in widths.iter().enumerate() {
                let _ = write!(s, " {:>w$}", cell(q, r));
            }
            s.push('\n');
        }
        s
    }
}

impl serde::Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

pub(crate) fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc as i64
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct RegularityDepth {
    pub reg_r: i64,
    pub reg_i: i64,
    pub pd: usize,
    pub depth: usize,
}

/// Regularity of `S/I` and of `I`, projective dimension, and depth by
/// Auslander–Buchsbaum.
pub fn regularity_and_depth(table: &BettiTable, ring: &Ring) -> Result<RegularityDepth> {
    if !ring.is_standard_graded() {
        return Err(Error::WeightedRing);
    }
    let (Some(pd), Some(reg_r)) = (table.projective_dimension(), table.regularity()) else {
        return Err(Error::Precondition("Betti table of the zero module".into()));
    };
    Ok(RegularityDepth {
        reg_r,
        reg_i: reg_r + 1,
        pd,
        depth: ring.num_vars() - pd,
    })
}
