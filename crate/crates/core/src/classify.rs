//! Per-code classification and census summaries.

use std::collections::BTreeMap;

use crate::genetics::GeneticCode;
use crate::poset::IndexSubset;
use crate::zcl::{formula_bounds, tc_upper};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationRecord {
    pub n: u32,
    pub m: usize,
    pub s: usize,
    pub gees: Vec<IndexSubset>,
    /// `a_0, ..., a_s`.
    pub subgee_counts: Vec<usize>,
    pub k0: u32,
    /// Largest `k` with `G ∪ G >= [k]` for a single gee `G`.
    pub self_pair_k: u32,
    /// Largest `k` with `G ∪ G' >= [k]` over distinct gees; zero for one gee.
    pub distinct_pair_k: u32,
    pub zcl_lower: Option<usize>,
    pub zcl_upper: Option<usize>,
    pub zcl_exact: Option<usize>,
    pub tc_lower: Option<usize>,
    pub tc_upper: usize,
    pub model_exact: bool,
    pub connected: bool,
    /// A single gee `[j]` with `j < m`: a sphere, torus, or product of the two.
    pub special: bool,
}

pub fn classify(code: &GeneticCode) -> ClassificationRecord {
    let gees = code.gees();
    let m = code.m();
    let s = code.s();
    let mut self_pair_k = 0;
    let mut distinct_pair_k = 0;
    for (i, g) in gees.iter().enumerate() {
        for (j, h) in gees.iter().enumerate() {
            let k = g
                .to_multiset()
                .union(&h.to_multiset())
                .max_initial_segment();
            if i == j {
                self_pair_k = self_pair_k.max(k);
            } else {
                distinct_pair_k = distinct_pair_k.max(k);
            }
        }
    }
    let connected = code.is_connected();
    let bounds = connected.then(|| formula_bounds(code));
    ClassificationRecord {
        n: code.n(),
        m,
        s,
        subgee_counts: code.subgee_counts(),
        k0: self_pair_k.max(distinct_pair_k),
        self_pair_k,
        distinct_pair_k,
        zcl_lower: bounds.as_ref().map(|b| b.lower),
        zcl_upper: bounds.as_ref().map(|b| b.upper),
        zcl_exact: bounds.as_ref().and_then(|b| b.exact),
        tc_lower: bounds.as_ref().map(|b| b.lower + 1),
        tc_upper: tc_upper(code.n()),
        model_exact: m >= 2 * s,
        connected,
        special: code.initial_segment_gee().is_some_and(|j| (j as usize) < m),
        gees,
    }
}

/// Split of the codes with a given `s`, using the threshold `t = min(s + 2, m)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SBreakdown {
    pub total: usize,
    /// Some gee `G` has `G ∪ G >= [t]`.
    pub self_pair: usize,
    /// No single gee reaches `[t]`, but two distinct gees do.
    pub distinct_pair: usize,
    pub other: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CensusSummary {
    pub total: usize,
    pub disconnected: usize,
    pub special: usize,
    pub model_exact: usize,
    /// Connected, non-special codes by `s`.
    pub by_s: BTreeMap<usize, SBreakdown>,
    /// Connected codes by zcl lower bound.
    pub by_zcl_lower: BTreeMap<usize, usize>,
}

impl CensusSummary {
    pub fn from_records<'a, I: IntoIterator<Item = &'a ClassificationRecord>>(records: I) -> Self {
        let mut out = CensusSummary::default();
        for r in records {
            out.total += 1;
            if r.model_exact {
                out.model_exact += 1;
            }
            if let Some(lower) = r.zcl_lower {
                *out.by_zcl_lower.entry(lower).or_default() += 1;
            }
            if !r.connected {
                out.disconnected += 1;
                continue;
            }
            if r.special {
                out.special += 1;
                continue;
            }
            let threshold = (r.s + 2).min(r.m) as u32;
            let entry = out.by_s.entry(r.s).or_default();
            entry.total += 1;
            if r.self_pair_k >= threshold {
                entry.self_pair += 1;
            } else if r.distinct_pair_k >= threshold {
                entry.distinct_pair += 1;
            } else {
                entry.other += 1;
            }
        }
        out
    }

    /// Connected codes whose zcl lower bound is at least `z`.
    pub fn zcl_lower_at_least(&self, z: usize) -> usize {
        self.by_zcl_lower.range(z..).map(|(_, c)| c).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(text: &str, n: u32) -> ClassificationRecord {
        classify(&GeneticCode::parse(text, n).unwrap())
    }

    #[test]
    fn example_record() {
        let r = record("9421,95", 9);
        assert_eq!((r.s, r.m, r.k0), (3, 6, 4));
        assert_eq!(r.zcl_exact, Some(6));
        assert_eq!((r.tc_lower, r.tc_upper), (Some(7), 13));
        assert_eq!(r.subgee_counts, vec![1, 5, 5, 2]);
        assert!(r.model_exact && r.connected && !r.special);
    }

    #[test]
    fn special_records() {
        let r = record("8", 8);
        assert_eq!(
            (r.s, r.m, r.k0, r.zcl_exact, r.tc_lower),
            (0, 5, 0, Some(1), Some(2))
        );
        assert!(r.special);
        let r = record("84321", 8);
        assert_eq!(
            (r.s, r.zcl_lower, r.zcl_upper, r.model_exact),
            (4, Some(5), Some(10), false)
        );
        assert!(r.special);
        let r = record("854321", 8);
        assert!(!r.connected && !r.special);
        assert_eq!(r.zcl_lower, None);
    }

    #[test]
    fn summary_buckets() {
        let records: Vec<_> = [
            ("8", 8),
            ("854321", 8),
            ("8531", 8),
            ("8421,853", 8),
            ("8321,84", 8),
        ]
        .iter()
        .map(|&(t, n)| record(t, n))
        .collect();
        let sum = CensusSummary::from_records(&records);
        assert_eq!((sum.total, sum.disconnected, sum.special), (5, 1, 1));
        assert_eq!(
            sum.by_s[&3],
            SBreakdown {
                total: 3,
                self_pair: 1,
                distinct_pair: 1,
                other: 1
            }
        );
        assert_eq!(sum.zcl_lower_at_least(1), 4);
        assert_eq!(sum.zcl_lower_at_least(7), 2);
    }
}
