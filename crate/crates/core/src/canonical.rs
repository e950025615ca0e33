//! The canonical model of `H^*(M(l); Q)` built from a genetic code.
//!
//! Basis: `V_S` in degree `|S|` and `W_S` in degree `m - |S|` for every
//! subgee `S`. Products:
//!
//! * `V_S V_T = (-1)^{inv(S,T)} V_{S ∪ T}` when `S`, `T` are disjoint and
//!   `S ∪ T` is a subgee, else zero;
//! * `V_i W_S = (-1)^{rho_i(S - i)} W_{S - i}` when `i ∈ S`, else zero, with
//!   `V_T W_S` obtained by applying the elements of `T` from largest to
//!   smallest, so `V_S W_S = W_∅`;
//! * all products of two `W` classes vanish.
//!
//! When `m >= 2s` this is the full ring. Otherwise it is the ring without
//! exotic products, and results computed from it are model-dependent.

use crate::error::{Error, Result};
use crate::genetics::GeneticCode;
use crate::poset::IndexSubset;
use crate::rational::sign_of;
use crate::ring::{BasisClass, BasisLabel, GradedRing, RingElement};

/// Number of elements of `t` greater than `i`.
pub fn rho(i: u32, t: &IndexSubset) -> usize {
    t.elements().iter().filter(|&&x| x > i).count()
}

/// Inversions across the concatenation of the ascending lists `s` and `t`.
pub fn shuffle_inversions(s: &IndexSubset, t: &IndexSubset) -> usize {
    s.elements()
        .iter()
        .map(|&a| t.elements().iter().filter(|&&b| a > b).count())
        .sum()
}

/// `V_T · W_S` as `(sign exponent, S - T)`, or `None` when zero.
pub fn v_times_w(t: &IndexSubset, s: &IndexSubset) -> Option<(usize, IndexSubset)> {
    let mut current = s.clone();
    let mut exponent = 0;
    for &i in t.elements().iter().rev() {
        if !current.contains(i) {
            return None;
        }
        current = current.without(i);
        exponent += rho(i, &current);
    }
    Some((exponent, current))
}

#[derive(Clone, Debug)]
pub struct CanonicalRing {
    pub ring: GradedRing,
    /// `m >= 2s`: no exotic products can occur.
    pub model_exact: bool,
    pub subgees: Vec<IndexSubset>,
}

impl CanonicalRing {
    pub fn v(&self, s: &IndexSubset) -> Option<usize> {
        self.ring.find(&BasisLabel::V(s.clone()))
    }

    pub fn w(&self, s: &IndexSubset) -> Option<usize> {
        self.ring.find(&BasisLabel::W(s.clone()))
    }
}

pub fn build_canonical_ring(code: &GeneticCode) -> Result<CanonicalRing> {
    if !code.is_connected() {
        return Err(Error::Disconnected(code.to_string()));
    }
    let m = code.m();
    let subgees = code.subgees();
    let mut basis: Vec<BasisClass> = Vec::with_capacity(2 * subgees.len());
    for s in &subgees {
        basis.push(BasisClass {
            label: BasisLabel::V(s.clone()),
            degree: s.len(),
        });
        basis.push(BasisClass {
            label: BasisLabel::W(s.clone()),
            degree: m - s.len(),
        });
    }
    basis.sort_by(|a, b| {
        a.degree
            .cmp(&b.degree)
            .then_with(|| match (&a.label, &b.label) {
                (BasisLabel::V(x), BasisLabel::V(y)) | (BasisLabel::W(x), BasisLabel::W(y)) => {
                    x.len().cmp(&y.len()).then_with(|| x.cmp(y))
                }
                (BasisLabel::V(_), _) => std::cmp::Ordering::Less,
                _ => std::cmp::Ordering::Greater,
            })
    });
    let unit = basis
        .iter()
        .position(|b| b.label == BasisLabel::V(IndexSubset::empty()))
        .expect("the empty set is a subgee");
    let mut ring = GradedRing::new(m, basis, unit);

    let index_v = |ring: &GradedRing, s: &IndexSubset| ring.find(&BasisLabel::V(s.clone()));
    let index_w = |ring: &GradedRing, s: &IndexSubset| ring.find(&BasisLabel::W(s.clone()));

    for s in &subgees {
        for t in &subgees {
            let vs = index_v(&ring, s).unwrap();
            let vt = index_v(&ring, t).unwrap();
            let wt = index_w(&ring, t).unwrap();

            if s.is_disjoint(t) {
                if let Some(target) = index_v(&ring, &s.union(t)) {
                    let sign = sign_of(shuffle_inversions(s, t));
                    ring.set_product(vs, vt, RingElement::from_terms([(target, sign)]));
                }
            }

            // V_S · W_T and W_T · V_S.
            if let Some((exponent, rest)) = v_times_w(s, t) {
                let target = index_w(&ring, &rest).expect("subsets of subgees are subgees");
                let value = RingElement::from_terms([(target, sign_of(exponent))]);
                let swap = sign_of(s.len() * (m - t.len()));
                ring.set_product(wt, vs, value.scaled(&swap));
                ring.set_product(vs, wt, value);
            }
        }
    }

    Ok(CanonicalRing {
        ring,
        model_exact: m >= 2 * code.s(),
        subgees,
    })
}

/// `b_i = a_i + a_{m-i}` from the subgee counts.
pub fn betti(code: &GeneticCode) -> Vec<usize> {
    let a = code.subgee_counts();
    let m = code.m();
    let count = |k: usize| a.get(k).copied().unwrap_or(0);
    (0..=m).map(|i| count(i) + count(m - i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn set(v: &[u32]) -> IndexSubset {
        IndexSubset::new(v.iter().copied())
    }

    fn code(text: &str, n: u32) -> GeneticCode {
        GeneticCode::parse(text, n).unwrap()
    }

    #[test]
    fn rho_counts() {
        assert_eq!(rho(2, &set(&[1, 3])), 1);
        assert_eq!(rho(5, &set(&[1, 2, 4])), 0);
        assert_eq!(rho(1, &set(&[2, 3, 4])), 3);
    }

    #[test]
    fn example_ring_basis() {
        let c = code("9421,95", 9);
        let cr = build_canonical_ring(&c).unwrap();
        assert!(cr.model_exact);
        assert_eq!(cr.ring.betti(), vec![1, 5, 5, 4, 5, 5, 1]);
        assert_eq!(betti(&c), vec![1, 5, 5, 4, 5, 5, 1]);
        let deg3: Vec<String> = cr
            .ring
            .basis_in_degree(3)
            .iter()
            .map(|&i| cr.ring.label(i).to_string())
            .collect();
        assert_eq!(deg3, vec!["V_{123}", "V_{124}", "W_{123}", "W_{124}"]);
        assert!(cr.ring.verify_poincare());
    }

    #[test]
    fn v_w_sign_rule() {
        let cr = build_canonical_ring(&code("9421,95", 9)).unwrap();
        let v2 = cr.v(&set(&[2])).unwrap();
        let w123 = cr.w(&set(&[1, 2, 3])).unwrap();
        let w13 = cr.w(&set(&[1, 3])).unwrap();
        assert_eq!(
            cr.ring.basis_product(v2, w123),
            &RingElement::from_terms([(w13, int(-1))])
        );
        let top = cr.w(&IndexSubset::empty()).unwrap();
        for s in &cr.subgees {
            let vs = cr.v(s).unwrap();
            let ws = cr.w(s).unwrap();
            assert_eq!(
                cr.ring.basis_product(vs, ws),
                &RingElement::basis(top),
                "V_S W_S for {s}"
            );
        }
    }

    #[test]
    fn v_products() {
        let cr = build_canonical_ring(&code("632", 6)).unwrap();
        let v1 = RingElement::basis(cr.v(&set(&[1])).unwrap());
        let v2 = RingElement::basis(cr.v(&set(&[2])).unwrap());
        let v12 = cr.v(&set(&[1, 2])).unwrap();
        assert!(cr.ring.multiply(&v1, &v1).is_zero());
        let one = RingElement::basis(cr.ring.unit());
        assert_eq!(cr.ring.multiply(&one, &v2), v2);
        assert_eq!(
            cr.ring.multiply(&v1.plus(&v2), &v2),
            RingElement::basis(v12)
        );
        assert_eq!(
            cr.ring.multiply(&v2, &v1),
            RingElement::from_terms([(v12, int(-1))])
        );
    }

    #[test]
    fn small_rings() {
        assert_eq!(betti(&code("632", 6)), vec![1, 6, 6, 1]);
        assert_eq!(betti(&code("7", 7)), vec![1, 0, 0, 0, 1]);
        let sphere = build_canonical_ring(&code("8", 8)).unwrap();
        assert_eq!(sphere.ring.betti(), vec![1, 0, 0, 0, 0, 1]);
        assert!(sphere.ring.verify_poincare());
        assert!(matches!(
            build_canonical_ring(&code("854321", 8)),
            Err(Error::Disconnected(_))
        ));
    }

    #[test]
    fn deleting_a_class_breaks_poincare() {
        let cr = build_canonical_ring(&code("9421,95", 9)).unwrap();
        let w = cr.w(&set(&[1, 2])).unwrap();
        assert!(!cr.ring.without_basis(w).verify_poincare());
    }

    #[test]
    fn degree_guard_leaves_no_v_terms() {
        // With m - |S| >= s, V_i W_S is a single W class.
        let c = code("9421,95", 9);
        let cr = build_canonical_ring(&c).unwrap();
        for s in &cr.subgees {
            if c.m() - s.len() < c.s() {
                continue;
            }
            for i in 1..c.n() {
                let Some(vi) = cr.v(&set(&[i])) else { continue };
                let p = cr.ring.basis_product(vi, cr.w(s).unwrap());
                assert!(p
                    .terms()
                    .all(|(k, _)| matches!(cr.ring.label(k), BasisLabel::W(_))));
            }
        }
    }
}
