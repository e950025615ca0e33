use std::path::Path;

use polyzcl::canonical::build_canonical_ring;
use polyzcl::genetics::{genetic_code, GeneticCode, LengthVector};
use polyzcl::poset::IndexSubset;
use polyzcl::zcl::zcl_bounds;
use serde::Serialize;

use crate::census::load_census;
use crate::error::CliError;
use crate::report::genus2_report;

#[derive(Serialize, Debug)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub got: String,
    pub expected: String,
}

trait Show {
    fn show(&self) -> String;
}

impl Show for usize {
    fn show(&self) -> String {
        self.to_string()
    }
}

impl Show for bool {
    fn show(&self) -> String {
        self.to_string()
    }
}

impl Show for String {
    fn show(&self) -> String {
        self.clone()
    }
}

impl Show for (usize, usize) {
    fn show(&self) -> String {
        format!("({}, {})", self.0, self.1)
    }
}

impl Show for Option<(usize, usize, usize)> {
    fn show(&self) -> String {
        self.map_or_else(|| "none".to_string(), |(a, b, c)| format!("{a}/{b}/{c}"))
    }
}

impl Show for Vec<usize> {
    fn show(&self) -> String {
        format!(
            "({})",
            self.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

impl Show for Vec<IndexSubset> {
    fn show(&self) -> String {
        self.iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

struct Checks(Vec<Check>);

impl Checks {
    fn eq<T: PartialEq + Show>(&mut self, name: impl Into<String>, got: T, expected: T) {
        self.0.push(Check {
            name: name.into(),
            pass: got == expected,
            got: got.show(),
            expected: expected.show(),
        });
    }
}

fn opt(x: Option<usize>) -> String {
    x.map_or_else(|| "none".to_string(), |v| v.to_string())
}

fn code(text: &str, n: u32) -> Result<GeneticCode, CliError> {
    Ok(GeneticCode::parse(text, n)?)
}

/// Published census counts, table rows and worked examples, recomputed.
pub fn verify_tables(
    threads: usize,
    cache_dir: Option<&Path>,
    budget: usize,
) -> Result<Vec<Check>, CliError> {
    let mut c = Checks(Vec::new());

    let census = load_census(7, threads, cache_dir)?;
    let sum = census.summary();
    c.eq("n=7 codes", sum.total, 134);
    c.eq("n=7 codes with m >= 2s", sum.model_exact, 64);

    let census = load_census(8, threads, cache_dir)?;
    let sum = census.summary();
    c.eq("n=8 codes", sum.total, 2469);
    c.eq("n=8 disconnected", sum.disconnected, 1);
    c.eq("n=8 special cases", sum.special, 5);
    for (s, want) in [(1, 6), (2, 120), (3, 1569), (4, 768)] {
        c.eq(
            format!("n=8 codes with s={s}"),
            sum.by_s.get(&s).map_or(0, |b| b.total),
            want,
        );
    }
    let split = |s: usize| {
        sum.by_s
            .get(&s)
            .map(|b| (b.self_pair, b.distinct_pair, b.other))
    };
    c.eq(
        "n=8 s=3 self pair / distinct pair / other",
        split(3),
        Some((929, 524, 116)),
    );
    c.eq(
        "n=8 s=2 self pair / distinct pair / other",
        split(2),
        Some((85, 10, 25)),
    );
    c.eq("n=8 codes with zcl >= 7", sum.zcl_lower_at_least(7), 2221);

    for (text, zcl, tc, exact) in [
        ("8", 1, 2, true),
        ("81", 3, 4, true),
        ("821", 3, 4, true),
        ("8321", 5, 6, false),
        ("84321", 5, 6, false),
    ] {
        let z = zcl_bounds(&code(text, 8)?)?;
        c.eq(format!("<{text}> zcl lower bound"), z.lower, zcl);
        c.eq(format!("<{text}> TC lower bound"), z.lower + 1, tc);
        if exact {
            c.eq(format!("<{text}> zcl exact"), opt(z.exact), zcl.to_string());
        }
    }

    let example = code("9421,95", 9)?;
    let cr = build_canonical_ring(&example)?;
    c.eq(
        "<9421,95> betti",
        cr.ring.betti(),
        vec![1, 5, 5, 4, 5, 5, 1],
    );
    c.eq(
        "<9421,95> degree 3 classes",
        cr.ring.basis_in_degree(3).len(),
        4,
    );
    let z = zcl_bounds(&example)?;
    c.eq("<9421,95> zcl", opt(z.exact), "6".to_string());
    c.eq("<9421,95> TC bounds", (z.lower + 1, 13), (7, 13));

    let z = zcl_bounds(&code("632", 6)?)?;
    c.eq("<632> canonical zcl bounds", (z.lower, z.upper), (5, 6));
    let g = genus2_report(budget)?;
    c.eq("genus-2 ring zcl", g.zcl, 6);
    c.eq("genus-2 ring TC", (g.tc.lower, g.tc.upper), (7, 7));
    for want in ["W_{12}·W_{23} = -W_{2} ", "V_{2}·W_{12} = V_{23} - W_{1} "] {
        c.eq(
            format!("genus-2 exotic product {}", want.trim_end()),
            g.exotic_products.iter().any(|e| e.starts_with(want)),
            true,
        );
    }

    for k in 2..=4u32 {
        let n = 2 * k + 1;
        let l = LengthVector::from_integers(&vec![1; n as usize])?;
        let got = genetic_code(&l)?;
        c.eq(
            format!("equilateral n={n} code"),
            got.genes().to_vec(),
            vec![IndexSubset::new(k + 2..=n)],
        );
        c.eq(
            format!("equilateral n={n} zcl"),
            opt(zcl_bounds(&got)?.exact),
            (2 * k).to_string(),
        );
    }
    Ok(c.0)
}
