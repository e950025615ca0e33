//! Zero-divisor-cup-length bounds and topological complexity bounds.
//!
//! Upper bound: `min(2s + 2, 2m)`. Lower bound from
//! `k0 = max{k : G ∪ G' >= [k]}` over pairs of gees: the smallest integer
//! greater than `k0` with the parity of `m`. The lower bound is sharp when
//! there are no exotic products, which is guaranteed for `m >= 2s`.
//!
//! Every lower bound is backed by an explicit product of barred classes,
//! evaluated in the canonical ring.

use std::collections::HashSet;

use crate::canonical::{build_canonical_ring, CanonicalRing};
use crate::error::{Error, Result};
use crate::genetics::GeneticCode;
use crate::poset::{self, find_partition, IndexSubset};
use crate::ring::{BasisLabel, GradedRing};
use crate::tensor::{bar, tensor_multiply, tensor_product_all, TensorElement};

/// Default cap on stored partial products in [`search_zcl`].
pub const DEFAULT_SEARCH_BUDGET: usize = 1_000_000;

/// `k + 2` when `k ≡ m (mod 2)`, else `k + 1`.
pub fn lower_from_k(k: u32, m: usize) -> usize {
    let k = k as usize;
    if k % 2 == m % 2 {
        k + 2
    } else {
        k + 1
    }
}

/// An evaluated product of zero divisors witnessing a lower bound.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub k: u32,
    pub gees: (IndexSubset, IndexSubset),
    pub partition: (IndexSubset, IndexSubset),
    /// The barred classes, in multiplication order.
    pub factors: Vec<BasisLabel>,
    pub value: TensorElement,
}

impl Certificate {
    /// E.g. `bar(V_{1})·bar(W_{1})·bar(V_{2})·bar(W_{2})`.
    pub fn describe(&self) -> String {
        let parts: Vec<String> = self.factors.iter().map(|l| format!("bar({l})")).collect();
        parts.join("·")
    }
}

fn certificate_factors(
    cr: &CanonicalRing,
    m: usize,
    k: u32,
    s: &IndexSubset,
    t: &IndexSubset,
) -> Vec<usize> {
    let v = |i: u32| {
        cr.v(&IndexSubset::new([i]))
            .expect("elements of a subgee are subgees")
    };
    let mut factors: Vec<usize> = s.elements().iter().map(|&i| v(i)).collect();
    factors.push(cr.w(s).expect("partition blocks are subgees"));
    factors.extend(t.elements().iter().map(|&j| v(j)));
    if k as usize % 2 == m % 2 {
        factors.push(cr.w(t).expect("partition blocks are subgees"));
    }
    factors
}

/// `∏_{i∈S} bar(V_i) · bar(W_S) · ∏_{j∈T} bar(V_j)`, times `bar(W_T)` when
/// `k ≡ m (mod 2)`, for a partition `[k] = S ⊔ T` with `S <= G`, `T <= G'`.
///
/// Gee pairs are tried in order; the first nonzero product is returned, or
/// the first (zero) one if none is nonzero.
pub fn certificate_product(cr: &CanonicalRing, code: &GeneticCode, k: u32) -> Result<Certificate> {
    let gees = code.gees();
    let target = IndexSubset::initial_segment(k).to_multiset();
    let mut first: Option<Certificate> = None;
    for g in &gees {
        for h in &gees {
            if !target.dominated_by(&g.to_multiset().union(&h.to_multiset())) {
                continue;
            }
            let Some((s, t)) = find_partition(g, h, k) else {
                continue;
            };
            let indices = certificate_factors(cr, code.m(), k, &s, &t);
            let bars: Vec<TensorElement> = indices.iter().map(|&u| bar(&cr.ring, u)).collect();
            let value = tensor_product_all(&cr.ring, &bars);
            let cert = Certificate {
                k,
                gees: (g.clone(), h.clone()),
                partition: (s, t),
                factors: indices.iter().map(|&u| cr.ring.label(u).clone()).collect(),
                value,
            };
            if !cert.value.is_zero() {
                return Ok(cert);
            }
            first.get_or_insert(cert);
        }
    }
    first.ok_or(Error::NoPartition(k))
}

#[derive(Clone, Debug)]
pub struct ZclBounds {
    pub k0: u32,
    pub lower: usize,
    pub upper: usize,
    /// Present when the canonical model is the whole ring (`m >= 2s`).
    pub exact: Option<usize>,
    /// The product realizing `lower`.
    pub certificate: Option<Certificate>,
}

impl ZclBounds {
    /// Whether the certificate product is nonzero.
    pub fn verified(&self) -> bool {
        self.certificate
            .as_ref()
            .is_some_and(|c| !c.value.is_zero())
    }
}

pub fn zcl_bounds(code: &GeneticCode) -> Result<ZclBounds> {
    let cr = build_canonical_ring(code)?;
    zcl_bounds_in(&cr, code)
}

/// [`zcl_bounds`] with a prebuilt canonical ring.
pub fn zcl_bounds_in(cr: &CanonicalRing, code: &GeneticCode) -> Result<ZclBounds> {
    let mut bounds = formula_bounds(code);
    bounds.certificate = Some(certificate_product(cr, code, bounds.k0)?);
    Ok(bounds)
}

/// Bounds from `k0`, `s` and `m` alone, without building a ring or a
/// certificate. Meaningless for the disconnected code.
pub fn formula_bounds(code: &GeneticCode) -> ZclBounds {
    let m = code.m();
    let s = code.s();
    let k0 = poset::k0(&code.gees());
    let lower = lower_from_k(k0, m);
    ZclBounds {
        k0,
        lower,
        upper: (2 * s + 2).min(2 * m),
        exact: (m >= 2 * s).then_some(lower),
        certificate: None,
    }
}

/// `(zcl lower bound + 1, 2n - 5)`.
pub fn tc_bounds(code: &GeneticCode) -> Result<(usize, usize)> {
    let z = zcl_bounds(code)?;
    Ok((z.lower + 1, tc_upper(code.n())))
}

/// Dimensional upper bound `2n - 5`.
pub fn tc_upper(n: u32) -> usize {
    2 * n as usize - 5
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    /// Longest nonzero product found.
    pub length: usize,
    /// Generator indices of one longest product.
    pub witness: Vec<usize>,
    pub value: TensorElement,
}

/// Longest nonzero product of the given zero divisors (repetition allowed),
/// up to `max_len` factors.
///
/// Explores products level by level, keeping one representative per line
/// of partial products at each length; zero partials are dropped. Fails with
/// `BudgetExceeded` once more than `budget` partials have been stored.
pub fn search_zcl(
    ring: &GradedRing,
    generators: &[TensorElement],
    max_len: usize,
    budget: usize,
) -> Result<SearchOutcome> {
    let mut best = SearchOutcome {
        length: 0,
        witness: Vec::new(),
        value: TensorElement::one(ring),
    };
    let mut level: Vec<(TensorElement, Vec<usize>)> = vec![(TensorElement::one(ring), Vec::new())];
    let mut stored = 0usize;
    for length in 1..=max_len {
        let mut seen: HashSet<TensorElement> = HashSet::new();
        let mut next = Vec::new();
        for (partial, word) in &level {
            for (g, gen) in generators.iter().enumerate() {
                let product = tensor_multiply(ring, partial, gen);
                if product.is_zero() || !seen.insert(product.normalized()) {
                    continue;
                }
                stored += 1;
                if stored > budget {
                    return Err(Error::BudgetExceeded(budget));
                }
                let mut w = word.clone();
                w.push(g);
                next.push((product, w));
            }
        }
        let Some((value, witness)) = next.first().cloned() else {
            break;
        };
        best = SearchOutcome {
            length,
            witness,
            value,
        };
        level = next;
    }
    Ok(best)
}

/// `bar(u)` for every basis class of positive degree.
pub fn barred_generators(ring: &GradedRing) -> Vec<TensorElement> {
    (0..ring.len())
        .filter(|&u| ring.degree(u) > 0)
        .map(|u| bar(ring, u))
        .collect()
}

/// Product `bar(V_{D1}) bar(V_{D2}) bar(V_{D3}) bar(W_{D1∪D3}) bar(W_{D2∪D3})`,
/// with each `bar(V_D)` the product of `bar(V_i)` over ascending `i ∈ D`.
pub fn parity_product(
    cr: &CanonicalRing,
    d1: &IndexSubset,
    d2: &IndexSubset,
    d3: &IndexSubset,
) -> Option<TensorElement> {
    let ring = &cr.ring;
    let mut factors = Vec::new();
    for d in [d1, d2, d3] {
        for &i in d.elements() {
            factors.push(bar(ring, cr.v(&IndexSubset::new([i]))?));
        }
    }
    factors.push(bar(ring, cr.w(&d1.union(d3))?));
    factors.push(bar(ring, cr.w(&d2.union(d3))?));
    Some(tensor_product_all(ring, &factors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genus2::build_genus2_ring;
    use num_traits::Zero;

    fn code(text: &str, n: u32) -> GeneticCode {
        GeneticCode::parse(text, n).unwrap()
    }

    #[test]
    fn parity_rule() {
        assert_eq!(lower_from_k(4, 6), 6);
        assert_eq!(lower_from_k(3, 6), 4);
        assert_eq!(lower_from_k(0, 5), 1);
        assert_eq!(lower_from_k(0, 4), 2);
    }

    #[test]
    fn example_code_bounds() {
        let c = code("9421,95", 9);
        let z = zcl_bounds(&c).unwrap();
        assert_eq!((z.k0, z.lower, z.exact), (4, 6, Some(6)));
        assert_eq!(z.upper, 8);
        assert!(z.verified());
        assert_eq!(z.certificate.as_ref().unwrap().factors.len(), 6);
        assert_eq!(tc_bounds(&c).unwrap(), (7, 13));
    }

    #[test]
    fn special_table_rows() {
        for (text, lower, exact) in [
            ("8", 1, Some(1)),
            ("81", 3, Some(3)),
            ("821", 3, Some(3)),
            ("8321", 5, None),
            ("84321", 5, None),
        ] {
            let z = zcl_bounds(&code(text, 8)).unwrap();
            assert_eq!(z.lower, lower, "{text}");
            assert_eq!(z.exact, exact, "{text}");
            assert!(z.verified(), "{text}");
        }
        assert_eq!(tc_bounds(&code("8", 8)).unwrap(), (2, 11));
    }

    #[test]
    fn equilateral_heptagon() {
        let z = zcl_bounds(&code("765", 7)).unwrap();
        assert_eq!(z.exact, Some(6));
    }

    #[test]
    fn code_632_canonical_interval() {
        let z = zcl_bounds(&code("632", 6)).unwrap();
        assert_eq!((z.lower, z.upper, z.exact), (5, 6, None));
        assert!(z.verified());
    }

    #[test]
    fn certificates() {
        let c = code("8", 8);
        let cr = build_canonical_ring(&c).unwrap();
        let cert = certificate_product(&cr, &c, 0).unwrap();
        assert_eq!(cert.factors, vec![BasisLabel::W(IndexSubset::empty())]);
        assert!(!cert.value.is_zero());

        let c = code("632", 6);
        let cr = build_canonical_ring(&c).unwrap();
        let cert = certificate_product(&cr, &c, 3).unwrap();
        assert_eq!(cert.factors.len(), 5);
        assert!(!cert.value.is_zero());
        assert!(matches!(
            certificate_product(&cr, &c, 4),
            Err(Error::NoPartition(4))
        ));
    }

    #[test]
    fn genus2_search() {
        let g = build_genus2_ring();
        let degree_one: Vec<TensorElement> = (1..=6).map(|u| bar(&g, u)).collect();
        let out = search_zcl(&g, &degree_one, 8, DEFAULT_SEARCH_BUDGET).unwrap();
        assert_eq!(out.length, 5);
        assert_eq!(
            search_zcl(&g, &barred_generators(&g), 8, DEFAULT_SEARCH_BUDGET)
                .unwrap()
                .length,
            5
        );
        // The two top terms a1a2a3 ⊗ b1b2b3 and b1b2b3 ⊗ a1a2a3 carry
        // opposite Koszul signs.
        assert!(tensor_product_all(&g, &degree_one).is_zero());
        let five = tensor_product_all(&g, &degree_one[..5]);
        let tau = g.top_class().unwrap();
        let b12 = g.find(&BasisLabel::Named("b12".into())).unwrap();
        assert_eq!(five.len(), 2);
        assert_eq!(five.coefficient(tau, b12), -five.coefficient(b12, tau));
        assert!(!five.coefficient(tau, b12).is_zero());
    }

    #[test]
    fn canonical_632_search_finds_five() {
        let cr = build_canonical_ring(&code("632", 6)).unwrap();
        let gens = barred_generators(&cr.ring);
        let out = search_zcl(&cr.ring, &gens, 8, DEFAULT_SEARCH_BUDGET).unwrap();
        assert_eq!(out.length, 5);
    }

    #[test]
    fn sphere_search() {
        let cr = build_canonical_ring(&code("8", 8)).unwrap();
        let gens = barred_generators(&cr.ring);
        assert_eq!(search_zcl(&cr.ring, &gens, 4, 100).unwrap().length, 1);
        let cr = build_canonical_ring(&code("7", 7)).unwrap();
        let gens = barred_generators(&cr.ring);
        assert_eq!(search_zcl(&cr.ring, &gens, 4, 100).unwrap().length, 2);
    }

    #[test]
    fn parity_criterion_on_example() {
        let c = code("9421,95", 9);
        let cr = build_canonical_ring(&c).unwrap();
        let mut checked = 0;
        for d1 in &cr.subgees {
            for d2 in cr.subgees.iter().filter(|d| d.is_disjoint(d1)) {
                for d3 in cr
                    .subgees
                    .iter()
                    .filter(|d| d.is_disjoint(d1) && d.is_disjoint(d2))
                {
                    let Some(p) = parity_product(&cr, d1, d2, d3) else {
                        continue;
                    };
                    let size = d1.len() + d2.len() + d3.len();
                    assert_eq!(!p.is_zero(), size % 2 == c.m() % 2, "{d1} {d2} {d3}");
                    checked += 1;
                }
            }
        }
        assert!(checked > 50);
    }

    #[test]
    fn budget_is_enforced() {
        let g = build_genus2_ring();
        let gens = barred_generators(&g);
        assert_eq!(search_zcl(&g, &gens, 6, 10), Err(Error::BudgetExceeded(10)));
    }
}
