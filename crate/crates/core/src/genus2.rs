//! Cohomology of the connected sum of two 3-tori, the space with genetic
//! code `<632>`, and its comparison with the canonical model of that code.
//!
//! Positive-degree presentation: `(H^*(T^3) ⊕ H^*(T^3)) / (a1a2a3 - b1b2b3)`
//! with `a_i b_j = 0`.

use std::fmt;

use num_traits::{One, Zero};

use crate::canonical::{build_canonical_ring, CanonicalRing};
use crate::error::{Error, Result};
use crate::genetics::GeneticCode;
use crate::linalg;
use crate::poset::IndexSubset;
use crate::rational::{int, Rational};
use crate::ring::{BasisClass, BasisLabel, GradedRing, RingElement};

/// Basis order: `1, a1, a2, a3, b1, b2, b3, a12, a13, a23, b12, b13, b23, τ`.
pub fn build_genus2_ring() -> GradedRing {
    let mut basis = vec![BasisClass {
        label: BasisLabel::Named("1".into()),
        degree: 0,
    }];
    for family in ["a", "b"] {
        for i in 1..=3 {
            basis.push(BasisClass {
                label: BasisLabel::Named(format!("{family}{i}")),
                degree: 1,
            });
        }
    }
    for family in ["a", "b"] {
        for (i, j) in [(1, 2), (1, 3), (2, 3)] {
            basis.push(BasisClass {
                label: BasisLabel::Named(format!("{family}{i}{j}")),
                degree: 2,
            });
        }
    }
    basis.push(BasisClass {
        label: BasisLabel::Named("τ".into()),
        degree: 3,
    });
    let mut ring = GradedRing::new(3, basis, 0);
    let idx = |ring: &GradedRing, name: &str| ring.find(&BasisLabel::Named(name.into())).unwrap();
    let top = idx(&ring, "τ");

    for family in ["a", "b"] {
        let gen = |i: u32| format!("{family}{i}");
        // Exterior algebra on three generators, both product orders.
        for i in 1..=3u32 {
            for j in 1..=3u32 {
                if i == j {
                    continue;
                }
                let (lo, hi) = (i.min(j), i.max(j));
                let target = idx(&ring, &format!("{family}{lo}{hi}"));
                let sign = if i < j { int(1) } else { int(-1) };
                let (gi, gj) = (idx(&ring, &gen(i)), idx(&ring, &gen(j)));
                ring.set_product(gi, gj, RingElement::from_terms([(target, sign)]));
            }
        }
        for k in 1..=3u32 {
            for (i, j) in [(1u32, 2u32), (1, 3), (2, 3)] {
                if k == i || k == j {
                    continue;
                }
                // g_k · g_i g_j = sign of the permutation (k, i, j) times τ.
                let inversions = [k > i, k > j].iter().filter(|&&b| b).count();
                let sign = if inversions % 2 == 0 { int(1) } else { int(-1) };
                let gk = idx(&ring, &gen(k));
                let gij = idx(&ring, &format!("{family}{i}{j}"));
                // Degree 1 and 2 classes commute.
                ring.set_product(gk, gij, RingElement::from_terms([(top, sign.clone())]));
                ring.set_product(gij, gk, RingElement::from_terms([(top, sign)]));
            }
        }
    }
    ring
}

/// Image of each class of the canonical model of `<632>` in the genus-2
/// ring: `V_i = a_i - b_i`, `W_12 = a3`, `W_13 = b2`, `W_23 = a1`,
/// `W_1 = b2b3`, `W_2 = a1a3`, `W_3 = b1b2`, `W_∅ = τ`, and `V_S` the product
/// of its generators.
fn vw_images(canonical: &CanonicalRing, g: &GradedRing) -> Vec<RingElement> {
    let named = |s: &str| RingElement::basis(g.find(&BasisLabel::Named(s.into())).unwrap());
    let generator = |i: u32| named(&format!("a{i}")).minus(&named(&format!("b{i}")));
    canonical
        .ring
        .basis()
        .iter()
        .map(|class| match &class.label {
            BasisLabel::V(s) => s
                .elements()
                .iter()
                .fold(named("1"), |acc, &i| g.multiply(&acc, &generator(i))),
            BasisLabel::W(s) => {
                let name = match s.elements() {
                    [1, 2] => "a3",
                    [1, 3] => "b2",
                    [2, 3] => "a1",
                    [1] => "b23",
                    [2] => "a13",
                    [3] => "b12",
                    [] => "τ",
                    other => unreachable!("no W class {other:?} for <632>"),
                };
                named(name)
            }
            BasisLabel::Named(_) => unreachable!("canonical rings use V/W labels"),
        })
        .collect()
}

fn dense(g: &GradedRing, x: &RingElement) -> Vec<Rational> {
    (0..g.len()).map(|i| x.coefficient(i)).collect()
}

/// A product in the genus-2 ring that differs (beyond sign) from the
/// canonical model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExoticProduct {
    pub left: BasisLabel,
    pub right: BasisLabel,
    /// Actual value, written in the V/W basis.
    pub actual: Vec<(BasisLabel, Rational)>,
    /// What the canonical model predicts.
    pub canonical: Vec<(BasisLabel, Rational)>,
}

fn format_combination(terms: &[(BasisLabel, Rational)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (n, (label, c)) in terms.iter().enumerate() {
        let neg = c < &Rational::zero();
        let mag = if neg { -c.clone() } else { c.clone() };
        let body = if mag.is_one() {
            label.to_string()
        } else {
            format!("{mag}·{label}")
        };
        match (n, neg) {
            (0, false) => out.push_str(&body),
            (0, true) => out.push_str(&format!("-{body}")),
            (_, false) => out.push_str(&format!(" + {body}")),
            (_, true) => out.push_str(&format!(" - {body}")),
        }
    }
    out
}

impl fmt::Display for ExoticProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}·{} = {} (canonical model: {})",
            self.left,
            self.right,
            format_combination(&self.actual),
            format_combination(&self.canonical)
        )
    }
}

/// Checks that the V/W images satisfy the relations of the canonical
/// presentation that hold in every polygon space, and lists the products
/// where the genus-2 ring departs from the canonical model.
///
/// Checked: the images form a basis; `V_S = 0` exactly for non-subgees
/// `S ⊆ {1,2,3}`; `V_S V_T = ±V_{S∪T}` or `0` as in the model;
/// `V_S W_T = ±δ_{S,T} W_∅` when `|S| = |T|`; `W_S W_T = 0` in
/// complementary degrees.
pub fn check_vw_iso() -> Result<Vec<ExoticProduct>> {
    let code = GeneticCode::parse("632", 6).expect("valid code");
    let canonical = build_canonical_ring(&code)?;
    let g = build_genus2_ring();
    let images = vw_images(&canonical, &g);
    let violation = |msg: String| Err(Error::IsoViolation(msg));

    let rows: Vec<Vec<Rational>> = images.iter().map(|x| dense(&g, x)).collect();
    if linalg::rank(&rows) != g.len() {
        return violation("V/W images do not span the genus-2 ring".into());
    }

    // FHS relations on all subsets of the generators.
    for s in IndexSubset::initial_segment(3).subsets() {
        let image = s
            .elements()
            .iter()
            .fold(RingElement::basis(g.unit()), |acc, &i| {
                let gi = images[canonical.v(&IndexSubset::new([i])).unwrap()].clone();
                g.multiply(&acc, &gi)
            });
        if image.is_zero() == code.is_subgee(&s) {
            return violation(format!(
                "V_{s} is {} but should {}be zero",
                g.format_element(&image),
                if code.is_subgee(&s) { "not " } else { "" }
            ));
        }
    }

    let top = canonical.w(&IndexSubset::empty()).unwrap();
    let rc = &canonical.ring;
    let is_unit_multiple = |x: &RingElement, target: &RingElement| {
        *x == *target || *x == target.scaled(&-Rational::one())
    };
    for (i, class_i) in rc.basis().iter().enumerate() {
        for (j, class_j) in rc.basis().iter().enumerate() {
            let actual = g.multiply(&images[i], &images[j]);
            match (&class_i.label, &class_j.label) {
                (BasisLabel::V(s), BasisLabel::W(t)) if s.len() == t.len() => {
                    let expected = if s == t {
                        images[top].clone()
                    } else {
                        RingElement::zero()
                    };
                    if !is_unit_multiple(&actual, &expected) {
                        return violation(format!("V_{s} · W_{t} = {}", g.format_element(&actual)));
                    }
                }
                (BasisLabel::V(_), BasisLabel::V(_)) => {
                    let model = rc.basis_product(i, j);
                    let expected = RingElement::from_terms(model.terms().flat_map(|(k, c)| {
                        images[k]
                            .terms()
                            .map(move |(l, d)| (l, c * d))
                            .collect::<Vec<_>>()
                    }));
                    if !is_unit_multiple(&actual, &expected) {
                        return violation(format!(
                            "{} · {} = {}",
                            class_i.label,
                            class_j.label,
                            g.format_element(&actual)
                        ));
                    }
                }
                (BasisLabel::W(_), BasisLabel::W(_))
                    if class_i.degree + class_j.degree == rc.top_degree() && !actual.is_zero() =>
                {
                    return violation(format!("{} · {} ≠ 0", class_i.label, class_j.label));
                }
                _ => {}
            }
        }
    }

    // Compare every product with the model, up to sign.
    let mut exotic = Vec::new();
    for i in 0..rc.len() {
        for j in i..rc.len() {
            let actual = g.multiply(&images[i], &images[j]);
            let coords =
                linalg::express_in_rows(&rows, &dense(&g, &actual)).expect("images span the ring");
            let actual_vw = RingElement::from_terms(coords.into_iter().enumerate());
            let model = rc.basis_product(i, j);
            if is_unit_multiple(&actual_vw, model) {
                continue;
            }
            let as_labels = |x: &RingElement| -> Vec<(BasisLabel, Rational)> {
                x.terms()
                    .map(|(k, c)| (rc.label(k).clone(), c.clone()))
                    .collect()
            };
            exotic.push(ExoticProduct {
                left: rc.label(i).clone(),
                right: rc.label(j).clone(),
                actual: as_labels(&actual_vw),
                canonical: as_labels(model),
            });
        }
    }
    Ok(exotic)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn named(g: &GradedRing, s: &str) -> RingElement {
        RingElement::basis(g.find(&BasisLabel::Named(s.into())).unwrap())
    }

    #[test]
    fn presentation() {
        let g = build_genus2_ring();
        let tau = named(&g, "τ");
        assert_eq!(g.multiply(&named(&g, "a1"), &named(&g, "a23")), tau);
        assert_eq!(g.multiply(&named(&g, "b1"), &named(&g, "b23")), tau);
        assert_eq!(
            g.multiply(&named(&g, "a2"), &named(&g, "a13")),
            tau.scaled(&int(-1))
        );
        assert!(g.multiply(&named(&g, "a1"), &named(&g, "b2")).is_zero());
        assert_eq!(
            g.multiply(&named(&g, "a2"), &named(&g, "a1")),
            named(&g, "a12").scaled(&int(-1))
        );
        let a123 = g.multiply(
            &g.multiply(&named(&g, "a1"), &named(&g, "a2")),
            &named(&g, "a3"),
        );
        assert_eq!(a123, tau);
    }

    #[test]
    fn ring_axioms_and_duality() {
        let g = build_genus2_ring();
        assert_eq!(g.betti(), vec![1, 6, 6, 1]);
        assert!(g.verify_poincare());
        assert_eq!(g.associativity_violation(), None);
        assert_eq!(g.commutativity_violation(), None);
        let code = GeneticCode::parse("632", 6).unwrap();
        assert_eq!(crate::canonical::betti(&code), g.betti());
    }

    #[test]
    fn exotic_products_of_632() {
        let exotic = check_vw_iso().unwrap();
        let w = |v: &[u32]| BasisLabel::W(IndexSubset::new(v.iter().copied()));
        let v = |x: &[u32]| BasisLabel::V(IndexSubset::new(x.iter().copied()));
        let find = |l: &BasisLabel, r: &BasisLabel| {
            exotic
                .iter()
                .find(|e| &e.left == l && &e.right == r)
                .cloned()
        };
        let ww = find(&w(&[1, 2]), &w(&[2, 3])).expect("W12 W23 is exotic");
        assert_eq!(ww.actual, vec![(w(&[2]), int(-1))]);
        assert!(ww.canonical.is_empty());

        let vw = find(&v(&[2]), &w(&[1, 2])).expect("V2 W12 is exotic");
        let mut got = vw.actual.clone();
        got.sort();
        let mut want = vec![(w(&[1]), int(-1)), (v(&[2, 3]), int(1))];
        want.sort();
        assert_eq!(got, want);
        assert_eq!(
            vw.to_string(),
            "V_{2}·W_{12} = V_{23} - W_{1} (canonical model: W_{1})"
        );
    }

    #[test]
    fn pairing_in_the_image() {
        let g = build_genus2_ring();
        let v = |i: u32| named(&g, &format!("a{i}")).minus(&named(&g, &format!("b{i}")));
        let v12 = g.multiply(&v(1), &v(2));
        assert_eq!(g.multiply(&v12, &named(&g, "a3")), named(&g, "τ"));
    }
}
