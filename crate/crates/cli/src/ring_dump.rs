use polyzcl::rational::format_rational;
use polyzcl::ring::{BasisLabel, GradedRing};
use serde::Serialize;

#[derive(Serialize)]
pub struct BasisEntry {
    pub kind: String,
    pub set: Vec<u32>,
    pub degree: usize,
}

/// `[i, j, [[k, "p/q"], ...]]`.
pub type ProductEntry = (usize, usize, Vec<(usize, String)>);

#[derive(Serialize)]
pub struct RingDump {
    pub m: usize,
    pub basis: Vec<BasisEntry>,
    pub products: Vec<ProductEntry>,
}

/// Every nonzero product of basis classes, in row-major order.
pub fn dump_ring(ring: &GradedRing) -> RingDump {
    let basis = ring
        .basis()
        .iter()
        .map(|b| {
            let (kind, set) = match &b.label {
                BasisLabel::V(s) => ("V".to_string(), s.elements().to_vec()),
                BasisLabel::W(s) => ("W".to_string(), s.elements().to_vec()),
                BasisLabel::Named(name) => (name.clone(), Vec::new()),
            };
            BasisEntry {
                kind,
                set,
                degree: b.degree,
            }
        })
        .collect();
    let mut products = Vec::new();
    for i in 0..ring.len() {
        for j in 0..ring.len() {
            let p = ring.basis_product(i, j);
            if !p.is_zero() {
                products.push((
                    i,
                    j,
                    p.terms().map(|(k, c)| (k, format_rational(c))).collect(),
                ));
            }
        }
    }
    RingDump {
        m: ring.top_degree(),
        basis,
        products,
    }
}
