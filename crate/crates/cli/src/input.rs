use clap::Args;
use polyzcl::genetics::{genetic_code, GeneticCode, LengthVector};

use crate::error::CliError;

/// A polygon space given by side lengths or by a genetic code.
#[derive(Args, Debug, Clone)]
pub struct SpaceArgs {
    /// Comma-separated side lengths, integers or fractions p/q.
    #[arg(long, conflicts_with_all = ["code", "n"])]
    pub lengths: Option<String>,
    /// Genetic code in gene notation, e.g. "9421,95" or "{10,4,2,1}".
    #[arg(long, requires = "n")]
    pub code: Option<String>,
    /// Number of sides, required with --code.
    #[arg(long, requires = "code")]
    pub n: Option<u32>,
}

pub struct Space {
    pub code: GeneticCode,
    /// The lengths as given, sorted, or a realizing witness for a code.
    pub lengths: LengthVector,
    pub lengths_given: bool,
}

impl SpaceArgs {
    pub fn resolve(&self) -> Result<Space, CliError> {
        match (&self.lengths, &self.code, self.n) {
            (Some(text), None, None) => {
                let lengths = LengthVector::parse(text)?;
                let code = genetic_code(&lengths)?;
                Ok(Space {
                    code,
                    lengths,
                    lengths_given: true,
                })
            }
            (None, Some(text), Some(n)) => {
                let code = GeneticCode::parse(text, n)?;
                let lengths = code.realize()?;
                Ok(Space {
                    code,
                    lengths,
                    lengths_given: false,
                })
            }
            _ => Err(CliError::Usage(
                "give either --lengths or both --code and --n".into(),
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(lengths: Option<&str>, code: Option<&str>, n: Option<u32>) -> SpaceArgs {
        SpaceArgs {
            lengths: lengths.map(String::from),
            code: code.map(String::from),
            n,
        }
    }

    #[test]
    fn resolves_either_form() {
        let a = args(Some("4,3,3,1,1,1"), None, None).resolve().unwrap();
        assert_eq!(a.code.to_string(), "632");
        assert!(a.lengths_given);
        let b = args(None, Some("632"), Some(6)).resolve().unwrap();
        assert_eq!(b.code, a.code);
        assert!(!b.lengths_given);
        assert!(matches!(
            args(None, None, None).resolve(),
            Err(CliError::Usage(_))
        ));
    }
}
