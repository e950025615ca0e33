//! The tensor square `R ⊗ R` with Koszul signs.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::rational::{sign_of, Rational};
use crate::ring::{GradedRing, RingElement};

/// Sparse element of `R ⊗ R`, keyed by pairs of basis indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TensorElement {
    terms: BTreeMap<(usize, usize), Rational>,
}

impl TensorElement {
    pub fn zero() -> Self {
        TensorElement::default()
    }

    /// `e_a ⊗ e_b`.
    pub fn pure(a: usize, b: usize) -> Self {
        let mut t = TensorElement::zero();
        t.add_term(a, b, Rational::one());
        t
    }

    pub fn one(ring: &GradedRing) -> Self {
        TensorElement::pure(ring.unit(), ring.unit())
    }

    pub fn add_term(&mut self, a: usize, b: usize, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((a, b)).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), &Rational)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn coefficient(&self, a: usize, b: usize) -> Rational {
        self.terms
            .get(&(a, b))
            .cloned()
            .unwrap_or_else(Rational::zero)
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

    pub fn scaled(&self, c: &Rational) -> TensorElement {
        let mut out = TensorElement::zero();
        for (&(a, b), x) in &self.terms {
            out.add_term(a, b, x * c);
        }
        out
    }

    pub fn plus(&self, other: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for (&(a, b), c) in &other.terms {
            out.add_term(a, b, c.clone());
        }
        out
    }

    /// Representative of the line through `self`: scaled so the first
    /// coefficient is one. Zero maps to zero.
    pub fn normalized(&self) -> TensorElement {
        match self.terms.values().next() {
            Some(lead) => self.scaled(&(Rational::one() / lead)),
            None => TensorElement::zero(),
        }
    }

    /// Total degree, if homogeneous and nonzero.
    pub fn degree(&self, ring: &GradedRing) -> Option<usize> {
        let mut degrees = self
            .terms
            .keys()
            .map(|&(a, b)| ring.degree(a) + ring.degree(b));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }
}

/// `(a ⊗ b)(c ⊗ d) = (-1)^{|b||c|} ac ⊗ bd`, extended bilinearly.
pub fn tensor_multiply(ring: &GradedRing, x: &TensorElement, y: &TensorElement) -> TensorElement {
    let mut out = TensorElement::zero();
    for (&(a, b), cx) in &x.terms {
        for (&(c, d), cy) in &y.terms {
            let ac = ring.basis_product(a, c);
            if ac.is_zero() {
                continue;
            }
            let bd = ring.basis_product(b, d);
            if bd.is_zero() {
                continue;
            }
            let coeff = sign_of(ring.degree(b) * ring.degree(c)) * cx * cy;
            for (p, u) in ac.terms() {
                let cu = &coeff * u;
                for (q, v) in bd.terms() {
                    out.add_term(p, q, &cu * v);
                }
            }
        }
    }
    out
}

/// Product of a sequence of factors, left to right; the unit for an empty list.
pub fn tensor_product_all<'a, I>(ring: &GradedRing, factors: I) -> TensorElement
where
    I: IntoIterator<Item = &'a TensorElement>,
{
    factors
        .into_iter()
        .fold(TensorElement::one(ring), |acc, f| {
            tensor_multiply(ring, &acc, f)
        })
}

/// `ū = u ⊗ 1 - 1 ⊗ u`.
pub fn bar(ring: &GradedRing, u: usize) -> TensorElement {
    let mut t = TensorElement::zero();
    t.add_term(u, ring.unit(), Rational::one());
    t.add_term(ring.unit(), u, -Rational::one());
    t
}

/// The multiplication map `R ⊗ R -> R`, `a ⊗ b ↦ ab`.
pub fn mult_map(ring: &GradedRing, x: &TensorElement) -> RingElement {
    let mut out = RingElement::zero();
    for (&(a, b), c) in &x.terms {
        for (k, v) in ring.basis_product(a, b).terms() {
            out.add_term(k, c * v);
        }
    }
    out
}
