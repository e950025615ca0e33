use std::fmt::Write as _;

use polyzcl::canonical::{betti, build_canonical_ring};
use polyzcl::classify::classify;
use polyzcl::genetics::GeneticCode;
use polyzcl::genus2::{build_genus2_ring, check_vw_iso};
use polyzcl::poset::IndexSubset;
use polyzcl::rational::format_rational;
use polyzcl::tensor::bar;
use polyzcl::zcl::{search_zcl, zcl_bounds_in};
use serde::Serialize;

use crate::error::CliError;
use crate::input::Space;

pub const EXOTIC_WARNING: &str = "canonical model; exotic products possible";
pub const DISCONNECTED_WARNING: &str = "two disjoint tori; ring and zcl not computed";

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lower: usize,
    pub upper: usize,
}

#[derive(Serialize, Debug)]
pub struct ZclReport {
    pub lower: usize,
    pub upper: usize,
    pub exact: Option<usize>,
}

#[derive(Serialize, Debug)]
pub struct Genus2Report {
    /// Longest nonzero product of barred degree-one generators.
    pub zcl: usize,
    pub tc: Interval,
    pub exotic_products: Vec<String>,
}

#[derive(Serialize, Debug)]
pub struct Report {
    pub n: u32,
    pub m: usize,
    pub s: usize,
    pub code: String,
    pub gees: Vec<Vec<u32>>,
    pub lengths: Vec<String>,
    pub lengths_given: bool,
    pub subgee_counts: Vec<usize>,
    pub betti: Option<Vec<usize>>,
    pub k0: u32,
    pub zcl: Option<ZclReport>,
    pub tc: Option<Interval>,
    pub model_exact: bool,
    pub connected: bool,
    pub special: bool,
    pub certificate: Option<String>,
    pub certificate_nonzero: Option<bool>,
    pub genus2: Option<Genus2Report>,
    pub warnings: Vec<String>,
}

pub fn is_genus2_code(code: &GeneticCode) -> bool {
    code.n() == 6 && code.to_string() == "632"
}

pub fn genus2_report(budget: usize) -> Result<Genus2Report, CliError> {
    let g = build_genus2_ring();
    let gens: Vec<_> = (0..g.len())
        .filter(|&u| g.degree(u) == 1)
        .map(|u| bar(&g, u))
        .collect();
    let found = search_zcl(&g, &gens, 2 * g.top_degree(), budget)?;
    let exotic = check_vw_iso()?.iter().map(|e| e.to_string()).collect();
    Ok(Genus2Report {
        zcl: found.length,
        tc: Interval {
            lower: found.length + 1,
            upper: 2 * 6 - 5,
        },
        exotic_products: exotic,
    })
}

pub fn build_report(space: &Space, budget: usize) -> Result<Report, CliError> {
    let code = &space.code;
    let record = classify(code);
    let mut warnings = Vec::new();
    let (mut zcl, mut tc, mut certificate, mut certificate_nonzero, mut ring_betti) =
        (None, None, None, None, None);
    if record.connected {
        let cr = build_canonical_ring(code)?;
        let bounds = zcl_bounds_in(&cr, code)?;
        certificate_nonzero = Some(bounds.verified());
        certificate = bounds.certificate.as_ref().map(|c| c.describe());
        tc = Some(Interval {
            lower: bounds.lower + 1,
            upper: record.tc_upper,
        });
        zcl = Some(ZclReport {
            lower: bounds.lower,
            upper: bounds.upper,
            exact: bounds.exact,
        });
        ring_betti = Some(betti(code));
        if !record.model_exact {
            warnings.push(EXOTIC_WARNING.to_string());
        }
    } else {
        warnings.push(DISCONNECTED_WARNING.to_string());
    }
    let genus2 = if is_genus2_code(code) {
        Some(genus2_report(budget)?)
    } else {
        None
    };
    Ok(Report {
        n: record.n,
        m: record.m,
        s: record.s,
        code: code.to_string(),
        gees: record.gees.iter().map(|g| g.elements().to_vec()).collect(),
        lengths: space
            .lengths
            .lengths()
            .iter()
            .map(format_rational)
            .collect(),
        lengths_given: space.lengths_given,
        subgee_counts: record.subgee_counts,
        betti: ring_betti,
        k0: record.k0,
        zcl,
        tc,
        model_exact: record.model_exact,
        connected: record.connected,
        special: record.special,
        certificate,
        certificate_nonzero,
        genus2,
        warnings,
    })
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn gee_text(g: &[u32]) -> String {
    IndexSubset::new(g.iter().copied()).to_string()
}

impl Report {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let source = if self.lengths_given {
            "lengths"
        } else {
            "witness"
        };
        let _ = writeln!(
            out,
            "code          <{}>  (n={}, m={}, s={})",
            self.code, self.n, self.m, self.s
        );
        let lengths: Vec<&str> = self
            .lengths
            .iter()
            .map(|l| l.strip_suffix("/1").unwrap_or(l))
            .collect();
        let _ = writeln!(out, "{source:<13} ({})", lengths.join(","));
        let gees: Vec<String> = self.gees.iter().map(|g| gee_text(g)).collect();
        let _ = writeln!(out, "gees          {}", gees.join(" "));
        let _ = writeln!(out, "subgees       {}", join(&self.subgee_counts));
        if let Some(b) = &self.betti {
            let _ = writeln!(out, "betti         ({})", join(b));
        }
        let _ = writeln!(out, "k0            {}", self.k0);
        if let Some(z) = &self.zcl {
            match z.exact {
                Some(e) => {
                    let _ = writeln!(out, "zcl           {e}");
                }
                None => {
                    let _ = writeln!(out, "zcl           [{}, {}]", z.lower, z.upper);
                }
            }
        }
        if let Some(t) = &self.tc {
            let _ = writeln!(out, "TC            [{}, {}]", t.lower, t.upper);
        }
        if let Some(c) = &self.certificate {
            let ok = if self.certificate_nonzero == Some(true) {
                "nonzero"
            } else {
                "ZERO"
            };
            let _ = writeln!(out, "certificate   {c}  ({ok})");
        }
        let _ = writeln!(out, "model exact   {}", self.model_exact);
        if let Some(g) = &self.genus2 {
            let _ = writeln!(
                out,
                "genus-2 ring  zcl {}, TC [{}, {}]",
                g.zcl, g.tc.lower, g.tc.upper
            );
            for e in &g.exotic_products {
                let _ = writeln!(out, "  exotic      {e}");
            }
        }
        for w in &self.warnings {
            let _ = writeln!(out, "warning       {w}");
        }
        out
    }
}
