//! Finite graded-commutative algebras over the rationals, given by a basis
//! with degrees and a table of structure constants.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::linalg;
use crate::poset::IndexSubset;
use crate::rational::{format_rational_short, sign_of, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisLabel {
    /// Monomial `V_S` in the degree-one generators.
    V(IndexSubset),
    /// Dual class `W_S`.
    W(IndexSubset),
    /// Any other named class.
    Named(String),
}

fn subscript(s: &IndexSubset) -> String {
    if s.is_empty() {
        "∅".to_string()
    } else if s.elements().iter().all(|&x| x <= 9) {
        s.elements().iter().map(|x| x.to_string()).collect()
    } else {
        let parts: Vec<String> = s.elements().iter().map(|x| x.to_string()).collect();
        parts.join(",")
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::V(s) if s.is_empty() => write!(f, "1"),
            BasisLabel::V(s) => write!(f, "V_{{{}}}", subscript(s)),
            BasisLabel::W(s) if s.is_empty() => write!(f, "W_∅"),
            BasisLabel::W(s) => write!(f, "W_{{{}}}", subscript(s)),
            BasisLabel::Named(name) => write!(f, "{name}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisClass {
    pub label: BasisLabel,
    pub degree: usize,
}

/// Sparse linear combination of basis classes. Zero coefficients are never
/// stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RingElement {
    terms: BTreeMap<usize, Rational>,
}

impl RingElement {
    pub fn zero() -> Self {
        RingElement::default()
    }

    pub fn basis(i: usize) -> Self {
        let mut e = RingElement::zero();
        e.add_term(i, Rational::one());
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (usize, Rational)>>(terms: I) -> Self {
        let mut e = RingElement::zero();
        for (i, c) in terms {
            e.add_term(i, c);
        }
        e
    }

    pub fn add_term(&mut self, i: usize, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(i).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&i);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.terms.iter().map(|(&i, c)| (i, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, i: usize) -> Rational {
        self.terms.get(&i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scaled(&self, c: &Rational) -> RingElement {
        RingElement::from_terms(self.terms.iter().map(|(&i, x)| (i, x * c)))
    }

    pub fn plus(&self, other: &RingElement) -> RingElement {
        let mut out = self.clone();
        for (&i, c) in &other.terms {
            out.add_term(i, c.clone());
        }
        out
    }

    pub fn minus(&self, other: &RingElement) -> RingElement {
        self.plus(&other.scaled(&-Rational::one()))
    }
}

#[derive(Clone, Debug)]
pub struct GradedRing {
    top_degree: usize,
    basis: Vec<BasisClass>,
    index: HashMap<BasisLabel, usize>,
    unit: usize,
    table: Vec<Vec<RingElement>>,
}

impl GradedRing {
    /// A ring with the given basis and all products zero except those with
    /// the unit. Fill in the rest with [`GradedRing::set_product`].
    pub fn new(top_degree: usize, basis: Vec<BasisClass>, unit: usize) -> Self {
        assert_eq!(basis[unit].degree, 0, "unit must have degree zero");
        let index = basis
            .iter()
            .enumerate()
            .map(|(i, b)| (b.label.clone(), i))
            .collect();
        let size = basis.len();
        let mut ring = GradedRing {
            top_degree,
            basis,
            index,
            unit,
            table: vec![vec![RingElement::zero(); size]; size],
        };
        for i in 0..size {
            ring.table[unit][i] = RingElement::basis(i);
            ring.table[i][unit] = RingElement::basis(i);
        }
        ring
    }

    /// Sets `e_i · e_j`. Panics when the value is not homogeneous of degree
    /// `|e_i| + |e_j|`; values above the top degree are dropped.
    pub fn set_product(&mut self, i: usize, j: usize, value: RingElement) {
        let d = self.basis[i].degree + self.basis[j].degree;
        if d > self.top_degree {
            return;
        }
        for (k, _) in value.terms() {
            assert_eq!(
                self.basis[k].degree, d,
                "product {i}·{j} is not homogeneous"
            );
        }
        self.table[i][j] = value;
    }

    pub fn top_degree(&self) -> usize {
        self.top_degree
    }

    pub fn basis(&self) -> &[BasisClass] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn degree(&self, i: usize) -> usize {
        self.basis[i].degree
    }

    pub fn label(&self, i: usize) -> &BasisLabel {
        &self.basis[i].label
    }

    pub fn find(&self, label: &BasisLabel) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Basis indices of the classes of degree `d`.
    pub fn basis_in_degree(&self, d: usize) -> Vec<usize> {
        (0..self.basis.len())
            .filter(|&i| self.basis[i].degree == d)
            .collect()
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &RingElement {
        &self.table[i][j]
    }

    pub fn multiply(&self, x: &RingElement, y: &RingElement) -> RingElement {
        let mut out = RingElement::zero();
        for (i, a) in x.terms() {
            for (j, b) in y.terms() {
                let p = &self.table[i][j];
                if p.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in p.terms() {
                    out.add_term(k, &ab * c);
                }
            }
        }
        out
    }

    /// Dimension of each graded piece, degrees `0..=top`.
    pub fn betti(&self) -> Vec<usize> {
        let mut b = vec![0; self.top_degree + 1];
        for c in &self.basis {
            b[c.degree] += 1;
        }
        b
    }

    /// The unique basis class of top degree, if the top piece is a line.
    pub fn top_class(&self) -> Option<usize> {
        let top = self.basis_in_degree(self.top_degree);
        (top.len() == 1).then(|| top[0])
    }

    /// Whether every pairing `H^i × H^{m-i} -> H^m` is a square invertible
    /// matrix.
    pub fn verify_poincare(&self) -> bool {
        let Some(top) = self.top_class() else {
            return false;
        };
        (0..=self.top_degree).all(|i| {
            let rows = self.basis_in_degree(i);
            let cols = self.basis_in_degree(self.top_degree - i);
            if rows.len() != cols.len() {
                return false;
            }
            let matrix: Vec<Vec<Rational>> = rows
                .iter()
                .map(|&a| {
                    cols.iter()
                        .map(|&b| self.table[a][b].coefficient(top))
                        .collect()
                })
                .collect();
            linalg::rank(&matrix) == rows.len()
        })
    }

    /// First basis triple where `(xy)z != x(yz)`.
    pub fn associativity_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.basis.len();
        for i in 0..n {
            for j in 0..n {
                let ij = &self.table[i][j];
                for k in 0..n {
                    let jk = &self.table[j][k];
                    if ij.is_zero() && jk.is_zero() {
                        continue;
                    }
                    let left = self.multiply(ij, &RingElement::basis(k));
                    let right = self.multiply(&RingElement::basis(i), jk);
                    if left != right {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// First basis pair where `xy != (-1)^{|x||y|} yx`.
    pub fn commutativity_violation(&self) -> Option<(usize, usize)> {
        let n = self.basis.len();
        for i in 0..n {
            for j in i..n {
                let sign = sign_of(self.degree(i) * self.degree(j));
                if self.table[i][j] != self.table[j][i].scaled(&sign) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Copy of the ring with basis class `idx` removed and products
    /// reindexed; terms involving the removed class are dropped.
    pub fn without_basis(&self, idx: usize) -> GradedRing {
        assert_ne!(idx, self.unit, "cannot remove the unit");
        let remap = |k: usize| -> Option<usize> {
            match k.cmp(&idx) {
                std::cmp::Ordering::Less => Some(k),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some(k - 1),
            }
        };
        let basis: Vec<BasisClass> = self
            .basis
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != idx)
            .map(|(_, b)| b.clone())
            .collect();
        let mut ring = GradedRing::new(self.top_degree, basis, remap(self.unit).unwrap());
        for i in 0..self.basis.len() {
            for j in 0..self.basis.len() {
                let (Some(a), Some(b)) = (remap(i), remap(j)) else {
                    continue;
                };
                let value = RingElement::from_terms(
                    self.table[i][j]
                        .terms()
                        .filter_map(|(k, c)| remap(k).map(|k| (k, c.clone()))),
                );
                ring.table[a][b] = value;
            }
        }
        ring
    }

    /// Human-readable form such as `-W_{1} + V_{23}`.
    pub fn format_element(&self, x: &RingElement) -> String {
        if x.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (n, (i, c)) in x.terms().enumerate() {
            let label = self.basis[i].label.to_string();
            let mag = c.abs();
            let body = if mag.is_one() {
                label
            } else {
                format!("{}·{label}", format_rational_short(&mag))
            };
            match (n, c.is_negative()) {
                (0, false) => out.push_str(&body),
                (0, true) => out.push_str(&format!("-{body}")),
                (_, false) => out.push_str(&format!(" + {body}")),
                (_, true) => out.push_str(&format!(" - {body}")),
            }
        }
        out
    }
}
