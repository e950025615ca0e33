use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use polyzcl::classify::{classify, CensusSummary, ClassificationRecord};
use polyzcl::enumerate::enumerate_codes_parallel;
use polyzcl::genetics::GeneticCode;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// Bumped whenever the row layout or the code notation changes.
pub const CACHE_FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub n: u32,
    pub genes: String,
    pub s: usize,
    pub k0: u32,
    pub zcl_lower: Option<usize>,
    pub zcl_upper: Option<usize>,
    pub zcl_exact: Option<usize>,
    pub connected: bool,
}

impl CensusRow {
    pub fn new(code: &GeneticCode, record: &ClassificationRecord) -> Self {
        CensusRow {
            n: record.n,
            genes: code.to_string(),
            s: record.s,
            k0: record.k0,
            zcl_lower: record.zcl_lower,
            zcl_upper: record.zcl_upper,
            zcl_exact: record.zcl_exact,
            connected: record.connected,
        }
    }
}

pub struct Census {
    pub codes: Vec<GeneticCode>,
    pub records: Vec<ClassificationRecord>,
}

impl Census {
    fn from_codes(codes: Vec<GeneticCode>) -> Self {
        let records = codes.iter().map(classify).collect();
        Census { codes, records }
    }

    pub fn rows(&self) -> Vec<CensusRow> {
        self.codes
            .iter()
            .zip(&self.records)
            .map(|(c, r)| CensusRow::new(c, r))
            .collect()
    }

    pub fn summary(&self) -> CensusSummary {
        CensusSummary::from_records(&self.records)
    }
}

pub fn write_csv<W: Write>(rows: &[CensusRow], out: W) -> Result<(), CliError> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

pub fn default_cache_dir() -> Option<PathBuf> {
    if let Some(dir) = std::env::var_os("POLYZCL_CACHE_DIR") {
        return Some(PathBuf::from(dir));
    }
    if let Some(dir) = std::env::var_os("XDG_CACHE_HOME") {
        return Some(PathBuf::from(dir).join("polyzcl"));
    }
    std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache").join("polyzcl"))
}

pub fn cache_file(dir: &Path, n: u32) -> PathBuf {
    dir.join(format!("codes-n{n}-v{CACHE_FORMAT_VERSION}.csv"))
}

/// Reads a cached census. Any row that fails to parse or disagrees with a
/// fresh classification invalidates the whole file.
fn read_cache(path: &Path, n: u32) -> Option<Census> {
    let mut reader = csv::Reader::from_path(path).ok()?;
    let mut codes = Vec::new();
    for row in reader.deserialize::<CensusRow>() {
        let row = row.ok()?;
        if row.n != n {
            return None;
        }
        codes.push(GeneticCode::parse(&row.genes, n).ok()?);
        let census_row = CensusRow::new(codes.last()?, &classify(codes.last()?));
        if census_row != row {
            return None;
        }
    }
    if codes.is_empty() || codes.windows(2).any(|w| w[0] >= w[1]) {
        return None;
    }
    Some(Census::from_codes(codes))
}

fn write_cache(path: &Path, census: &Census) -> Result<(), CliError> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir)?;
    }
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    write_csv(&census.rows(), fs::File::create(&tmp)?)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

/// Enumerates and classifies all codes with `n` sides, through the cache
/// when `cache_dir` is set.
pub fn load_census(n: u32, threads: usize, cache_dir: Option<&Path>) -> Result<Census, CliError> {
    if let Some(dir) = cache_dir {
        if let Some(c) = read_cache(&cache_file(dir, n), n) {
            return Ok(c);
        }
    }
    let census = Census::from_codes(enumerate_codes_parallel(n, threads)?);
    if let Some(dir) = cache_dir {
        // A cache that cannot be written is not an error.
        let _ = write_cache(&cache_file(dir, n), &census);
    }
    Ok(census)
}

#[derive(Serialize)]
pub struct SBucket {
    pub s: usize,
    pub total: usize,
    pub self_pair: usize,
    pub distinct_pair: usize,
    pub other: usize,
}

#[derive(Serialize)]
pub struct ZclBucket {
    pub zcl_lower: usize,
    pub count: usize,
    pub at_least: usize,
}

#[derive(Serialize)]
pub struct SummaryJson {
    pub n: u32,
    pub total: usize,
    pub disconnected: usize,
    pub special: usize,
    pub model_exact: usize,
    pub by_s: Vec<SBucket>,
    pub by_zcl_lower: Vec<ZclBucket>,
}

pub fn summary_json(n: u32, sum: &CensusSummary) -> SummaryJson {
    SummaryJson {
        n,
        total: sum.total,
        disconnected: sum.disconnected,
        special: sum.special,
        model_exact: sum.model_exact,
        by_s: sum
            .by_s
            .iter()
            .map(|(&s, b)| SBucket {
                s,
                total: b.total,
                self_pair: b.self_pair,
                distinct_pair: b.distinct_pair,
                other: b.other,
            })
            .collect(),
        by_zcl_lower: sum
            .by_zcl_lower
            .iter()
            .map(|(&z, &count)| ZclBucket {
                zcl_lower: z,
                count,
                at_least: sum.zcl_lower_at_least(z),
            })
            .collect(),
    }
}

pub fn summary_text(n: u32, sum: &CensusSummary) -> String {
    let mut out = format!(
        "n={n}: {} codes, {} disconnected, {} special, {} with m >= 2s\n",
        sum.total, sum.disconnected, sum.special, sum.model_exact
    );
    out.push_str("by s (other codes; pair buckets use [min(s+2, m)]):\n");
    for (s, b) in &sum.by_s {
        out.push_str(&format!(
            "  s={s}: {} (self pair {}, distinct pair {}, other {})\n",
            b.total, b.self_pair, b.distinct_pair, b.other
        ));
    }
    out.push_str("by zcl lower bound (connected codes):\n");
    for (z, c) in &sum.by_zcl_lower {
        out.push_str(&format!(
            "  zcl_lower={z}: {c} (>= {z}: {})\n",
            sum.zcl_lower_at_least(*z)
        ));
    }
    out
}
