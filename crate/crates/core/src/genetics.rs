//! Length vectors, short subsets and genetic codes.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lp::{LinearProgram, LpOutcome, Relation};
use crate::poset::IndexSubset;
use crate::rational::{format_rational_short, int, parse_rational, Rational};

/// Largest `n` for which subset-sum questions are answered by enumeration.
pub const MAX_SUBSET_SIDES: usize = 12;

/// Side lengths `l_1 <= ... <= l_n`, all positive, `n >= 3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthVector(Vec<Rational>);

impl LengthVector {
    pub fn new(lengths: Vec<Rational>) -> Result<Self> {
        if lengths.len() < 3 {
            return Err(Error::InvalidLengths(format!(
                "need at least 3 sides, got {}",
                lengths.len()
            )));
        }
        if let Some(bad) = lengths.iter().find(|l| !l.is_positive()) {
            return Err(Error::InvalidLengths(format!(
                "side length {bad} is not positive"
            )));
        }
        if lengths.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidLengths(
                "lengths must be nondecreasing".into(),
            ));
        }
        Ok(LengthVector(lengths))
    }

    /// Like [`LengthVector::new`] but sorts the input first. Reordering sides
    /// does not change the space up to homeomorphism.
    pub fn sorted(mut lengths: Vec<Rational>) -> Result<Self> {
        lengths.sort();
        LengthVector::new(lengths)
    }

    pub fn from_integers(lengths: &[i64]) -> Result<Self> {
        LengthVector::new(lengths.iter().map(|&x| int(x)).collect())
    }

    /// Comma-separated integers or fractions `p/q`; the result is sorted.
    pub fn parse(text: &str) -> Result<Self> {
        let parts: Vec<Rational> = text.split(',').map(parse_rational).collect::<Result<_>>()?;
        LengthVector::sorted(parts)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn lengths(&self) -> &[Rational] {
        &self.0
    }

    pub fn total(&self) -> Rational {
        self.0.iter().sum()
    }

    pub fn subset_sum(&self, s: &IndexSubset) -> Rational {
        s.elements().iter().map(|&i| &self.0[i as usize - 1]).sum()
    }

    fn mask_sum(&self, mask: u64) -> Rational {
        self.0
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, l)| l)
            .sum()
    }

    /// True when no subset has exactly half the total length.
    pub fn is_generic(&self) -> Result<bool> {
        Ok(self.half_split()?.is_none())
    }

    fn half_split(&self) -> Result<Option<IndexSubset>> {
        let n = self.n();
        if n > MAX_SUBSET_SIDES {
            return Err(Error::SizeLimit {
                what: "number of sides",
                got: n,
                limit: MAX_SUBSET_SIDES,
            });
        }
        let total = self.total();
        // Every split pairs a set containing side n with its complement.
        let top = 1u64 << (n - 1);
        for rest in 0..top {
            let mask = rest | top;
            let twice: Rational = self.mask_sum(mask) * int(2);
            if twice == total {
                return Ok(Some(IndexSubset::from_mask(mask)));
            }
        }
        Ok(None)
    }

    /// Strict comparison `sum_S < total / 2`.
    pub fn is_short(&self, s: &IndexSubset) -> bool {
        self.subset_sum(s) * int(2) < self.total()
    }

    /// Rescales to the smallest positive integer vector with the same ratios.
    pub fn to_integer_lengths(&self) -> Vec<BigInt> {
        let lcm = self
            .0
            .iter()
            .fold(BigInt::one(), |acc, l| acc.lcm(l.denom()));
        let scaled: Vec<BigInt> = self
            .0
            .iter()
            .map(|l| (l * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let gcd = scaled.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        scaled.into_iter().map(|x| x / &gcd).collect()
    }

    pub fn integer_scaled(&self) -> LengthVector {
        LengthVector(
            self.to_integer_lengths()
                .into_iter()
                .map(Rational::from_integer)
                .collect(),
        )
    }
}

impl fmt::Display for LengthVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", format_rational_short(l))?;
        }
        write!(f, ")")
    }
}

/// The genes of a length vector: maximal short subsets containing `n`.
///
/// Genes are kept in canonical order (lexicographic on descending
/// enumerations), so two codes are equal iff their gene lists are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneticCode {
    n: u32,
    genes: Vec<IndexSubset>,
}

impl GeneticCode {
    pub fn new(n: u32, mut genes: Vec<IndexSubset>) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!("n = {n} is below 3")));
        }
        if genes.is_empty() {
            return Err(Error::Parse(
                "a genetic code needs at least one gene".into(),
            ));
        }
        for g in &genes {
            if g.max() != Some(n) {
                return Err(Error::Parse(format!(
                    "gene {g} must have largest element {n}"
                )));
            }
        }
        genes.sort_by(|a, b| a.cmp_descending(b));
        for (i, a) in genes.iter().enumerate() {
            for b in &genes[i + 1..] {
                if a.dominated_by(b) || b.dominated_by(a) {
                    return Err(Error::NotAntichain(format!("{a} and {b} are comparable")));
                }
            }
        }
        Ok(GeneticCode { n, genes })
    }

    /// Builds a code from gees (genes with `n` removed).
    pub fn from_gees(n: u32, gees: Vec<IndexSubset>) -> Result<Self> {
        GeneticCode::new(n, gees.into_iter().map(|g| g.with(n)).collect())
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Dimension `n - 3` of the polygon space.
    pub fn m(&self) -> usize {
        self.n as usize - 3
    }

    pub fn genes(&self) -> &[IndexSubset] {
        &self.genes
    }

    pub fn gees(&self) -> Vec<IndexSubset> {
        self.genes.iter().map(|g| g.without(self.n)).collect()
    }

    /// Size of the largest gee.
    pub fn s(&self) -> usize {
        self.genes.iter().map(|g| g.len() - 1).max().unwrap_or(0)
    }

    /// Whether `set` (a subset containing `n`) is short for every realization.
    pub fn is_short(&self, set: &IndexSubset) -> bool {
        self.genes.iter().any(|g| set.dominated_by(g))
    }

    pub fn is_subgee(&self, set: &IndexSubset) -> bool {
        self.gees().iter().any(|g| set.dominated_by(g))
    }

    /// All subgees, ordered by size and then lexicographically.
    pub fn subgees(&self) -> Vec<IndexSubset> {
        let gees = self.gees();
        let universe = IndexSubset::initial_segment(self.n - 1);
        let mut out: Vec<IndexSubset> = universe
            .subsets()
            .filter(|s| s.len() <= self.s() && gees.iter().any(|g| s.dominated_by(g)))
            .collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// `a_k`, the number of subgees of size `k`, for `k = 0..=s`.
    pub fn subgee_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.s() + 1];
        for sg in self.subgees() {
            counts[sg.len()] += 1;
        }
        counts
    }

    /// The single code `<{n, n-3, ..., 1}>` gives two disjoint tori.
    pub fn is_connected(&self) -> bool {
        let excluded = IndexSubset::initial_segment(self.n.saturating_sub(3)).with(self.n);
        !(self.genes.len() == 1 && self.genes[0] == excluded)
    }

    /// `<{n}>`, the code of a sphere.
    pub fn is_sphere(&self) -> bool {
        self.genes.len() == 1 && self.genes[0].len() == 1
    }

    /// A single gee equal to an initial segment `[j]`: the sphere, products
    /// of a sphere with a torus, the torus, and (for `j = m`) the disconnected
    /// pair of tori.
    pub fn initial_segment_gee(&self) -> Option<u32> {
        if self.genes.len() != 1 {
            return None;
        }
        let gee = self.genes[0].without(self.n);
        let j = gee.len() as u32;
        (gee == IndexSubset::initial_segment(j)).then_some(j)
    }

    /// Parses gene notation: genes separated by `,` or `;`, each either a run
    /// of digits (one element per digit) or `{a,b,...}`. A gene that omits
    /// `n` is read as a gee and `n` is added.
    pub fn parse(text: &str, n: u32) -> Result<Self> {
        let compact: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        let err = |msg: String| Error::Parse(format!("`{text}`: {msg}"));
        let mut genes = Vec::new();
        let mut i = 0;
        loop {
            let mut elems: Vec<u32> = Vec::new();
            match compact.get(i) {
                Some('{') => {
                    let close = compact[i..]
                        .iter()
                        .position(|&c| c == '}')
                        .map(|p| p + i)
                        .ok_or_else(|| err("unclosed `{`".into()))?;
                    let inner: String = compact[i + 1..close].iter().collect();
                    if inner.is_empty() {
                        return Err(err("empty braces".into()));
                    }
                    for part in inner.split(',') {
                        elems.push(
                            part.parse()
                                .map_err(|_| err(format!("bad element `{part}`")))?,
                        );
                    }
                    i = close + 1;
                }
                Some(c) if c.is_ascii_digit() => {
                    while let Some(d) = compact.get(i).and_then(|c| c.to_digit(10)) {
                        elems.push(d);
                        i += 1;
                    }
                }
                Some(c) => return Err(err(format!("unexpected `{c}`"))),
                None => return Err(err("expected a gene".into())),
            }
            if let Some(&z) = elems.iter().find(|&&x| x == 0 || x > n) {
                return Err(err(format!("element {z} is outside 1..={n}")));
            }
            let len = elems.len();
            let mut gene = IndexSubset::new(elems);
            if gene.len() != len {
                return Err(err("repeated element in a gene".into()));
            }
            if !gene.contains(n) {
                gene = gene.with(n);
            }
            genes.push(gene);
            match compact.get(i) {
                None => break,
                Some(',') | Some(';') => i += 1,
                Some(c) => return Err(err(format!("unexpected `{c}` after gene"))),
            }
        }
        GeneticCode::new(n, genes)
    }

    /// Realizes the code by a generic nondecreasing length vector, or
    /// reports that none exists.
    ///
    /// Solves an exact LP maximizing a uniform slack `eps` subject to
    /// `l_1 >= eps`, `l_i <= l_{i+1}`, total one, and for each set `A`
    /// containing `n`: `total - 2 sum(A) >= eps` when `A` lies below a gene,
    /// `2 sum(A) - total >= eps` otherwise.
    pub fn realize(&self) -> Result<LengthVector> {
        let n = self.n as usize;
        if n > MAX_SUBSET_SIDES {
            return Err(Error::SizeLimit {
                what: "number of sides",
                got: n,
                limit: MAX_SUBSET_SIDES,
            });
        }
        let mut lp = slack_program(n);
        let top = 1u64 << (n - 1);
        for rest in 0..top {
            let set = IndexSubset::from_mask(rest | top);
            add_side_constraint(&mut lp, n, set.mask(), self.is_short(&set));
        }
        let point = match lp.solve() {
            LpOutcome::Optimal { value, point } if value.is_positive() => point,
            _ => return Err(Error::NotRealizable(self.to_string())),
        };
        let witness = LengthVector::new(point[..n].to_vec())
            .expect("slack constraints force positive nondecreasing lengths")
            .integer_scaled();
        let back = genetic_code(&witness).expect("positive slack certifies genericity");
        assert_eq!(&back, self, "LP witness {witness} does not round-trip");
        Ok(witness)
    }
}

/// The LP skeleton shared by realization and enumeration: variables
/// `l_1..l_n, eps`, maximize `eps`.
pub(crate) fn slack_program(n: usize) -> LinearProgram {
    let mut objective = vec![Rational::zero(); n + 1];
    objective[n] = Rational::one();
    let mut lp = LinearProgram::maximize(objective);
    let mut row = vec![Rational::zero(); n + 1];
    row[0] = Rational::one();
    row[n] = -Rational::one();
    lp.add(row, Relation::Ge, Rational::zero());
    for i in 0..n - 1 {
        let mut row = vec![Rational::zero(); n + 1];
        row[i + 1] = Rational::one();
        row[i] = -Rational::one();
        lp.add(row, Relation::Ge, Rational::zero());
    }
    let mut total = vec![Rational::one(); n + 1];
    total[n] = Rational::zero();
    lp.add(total, Relation::Eq, Rational::one());
    lp
}

/// `total - 2 sum(A) >= eps` for short `A`, the reverse for long `A`.
pub(crate) fn add_side_constraint(lp: &mut LinearProgram, n: usize, mask: u64, short: bool) {
    let mut row: Vec<Rational> = (0..n)
        .map(|i| {
            let inside = mask >> i & 1 == 1;
            // coefficient of l_i in total - 2 sum(A)
            let c = if inside { -1 } else { 1 };
            int(if short { c } else { -c })
        })
        .collect();
    row.push(-Rational::one());
    lp.add(row, Relation::Ge, Rational::zero());
}

/// Genetic code of a generic length vector.
pub fn genetic_code(l: &LengthVector) -> Result<GeneticCode> {
    if let Some(split) = l.half_split()? {
        return Err(Error::NotGeneric(split.to_string()));
    }
    let n = l.n();
    let top = 1u64 << (n - 1);
    if !l.is_short(&IndexSubset::from_mask(top)) {
        return Err(Error::EmptySpace(n as u32));
    }
    let total = l.total();
    let short: Vec<IndexSubset> = (0..top)
        .map(|rest| rest | top)
        .filter(|&mask| l.mask_sum(mask) * int(2) < total)
        .map(IndexSubset::from_mask)
        .collect();
    let genes: Vec<IndexSubset> = short
        .iter()
        .filter(|a| !short.iter().any(|b| b != *a && a.dominated_by(b)))
        .cloned()
        .collect();
    GeneticCode::new(n as u32, genes)
}

fn format_set_compact(s: &IndexSubset) -> String {
    if s.elements().iter().all(|&x| x <= 9) {
        s.elements().iter().rev().map(|x| x.to_string()).collect()
    } else {
        let parts: Vec<String> = s.elements().iter().rev().map(|x| x.to_string()).collect();
        format!("{{{}}}", parts.join(","))
    }
}

impl fmt::Display for GeneticCode {
    /// Gene notation, e.g. `9421,95`; inverse of [`GeneticCode::parse`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.genes.iter().map(format_set_compact).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl PartialOrd for GeneticCode {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GeneticCode {
    /// By `n`, then lexicographically by gene list.
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| {
            for (a, b) in self.genes.iter().zip(&other.genes) {
                match a.cmp_descending(b) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            self.genes.len().cmp(&other.genes.len())
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn set(v: &[u32]) -> IndexSubset {
        IndexSubset::new(v.iter().copied())
    }

    fn lv(v: &[i64]) -> LengthVector {
        LengthVector::from_integers(v).unwrap()
    }

    #[test]
    fn genericity() {
        assert!(lv(&[1, 1, 1, 3, 3, 4]).is_generic().unwrap());
        assert!(!lv(&[1, 1, 1, 1]).is_generic().unwrap());
        assert!(lv(&[1, 1, 1, 1, 1, 1, 1, 6]).is_generic().unwrap());
        let big = LengthVector::from_integers(&[1; 13]).unwrap();
        assert!(matches!(big.is_generic(), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn shortness() {
        let l = lv(&[1, 1, 1, 3, 3, 4]);
        assert!(l.is_short(&set(&[6, 3, 2])));
        assert!(!l.is_short(&set(&[6, 4])));
        assert!(l.is_short(&IndexSubset::empty()));
    }

    #[test]
    fn codes_of_known_vectors() {
        let code = genetic_code(&lv(&[1, 1, 1, 3, 3, 4])).unwrap();
        assert_eq!(code.genes(), &[set(&[6, 3, 2])]);
        let code = genetic_code(&lv(&[1; 7])).unwrap();
        assert_eq!(code.genes(), &[set(&[7, 6, 5])]);
        let code = genetic_code(&lv(&[1, 1, 1, 1, 1, 1, 1, 6])).unwrap();
        assert_eq!(code.genes(), &[set(&[8])]);
        assert_eq!(
            genetic_code(&lv(&[1, 1, 1, 1])),
            Err(Error::NotGeneric("{1,4}".into()))
        );
        assert_eq!(genetic_code(&lv(&[1, 1, 5])), Err(Error::EmptySpace(3)));
    }

    #[test]
    fn small_sides_stand_in_for_zero_length() {
        let tiny = frac(1, 100);
        let mut v = vec![tiny.clone(), tiny.clone(), tiny];
        v.extend([1, 1, 1, 1, 3].iter().map(|&x| int(x)));
        let code = genetic_code(&LengthVector::new(v).unwrap()).unwrap();
        assert_eq!(code.to_string(), "8321");
    }

    #[test]
    fn subgee_lists() {
        let code = GeneticCode::parse("9421,95", 9).unwrap();
        let two: Vec<IndexSubset> = code
            .subgees()
            .into_iter()
            .filter(|s| s.len() == 2)
            .collect();
        assert_eq!(
            two,
            vec![
                set(&[1, 2]),
                set(&[1, 3]),
                set(&[1, 4]),
                set(&[2, 3]),
                set(&[2, 4])
            ]
        );
        assert_eq!(code.subgee_counts(), vec![1, 5, 5, 2]);

        let code = GeneticCode::parse("632", 6).unwrap();
        assert_eq!(code.subgee_counts(), vec![1, 3, 3]);
        assert_eq!(
            code.subgees(),
            vec![
                IndexSubset::empty(),
                set(&[1]),
                set(&[2]),
                set(&[3]),
                set(&[1, 2]),
                set(&[1, 3]),
                set(&[2, 3])
            ]
        );
        let sphere = GeneticCode::parse("7", 7).unwrap();
        assert_eq!(sphere.subgees(), vec![IndexSubset::empty()]);
    }

    #[test]
    fn connectivity() {
        assert!(!GeneticCode::parse("854321", 8).unwrap().is_connected());
        assert!(GeneticCode::parse("632", 6).unwrap().is_connected());
        assert!(GeneticCode::parse("8", 8).unwrap().is_connected());
    }

    #[test]
    fn parsing_and_formatting() {
        let code = GeneticCode::parse("9421,95", 9).unwrap();
        assert_eq!(code.genes(), &[set(&[9, 4, 2, 1]), set(&[9, 5])]);
        assert_eq!(code.to_string(), "9421,95");
        let code = GeneticCode::parse(" 95 ; 9421 ", 9).unwrap();
        assert_eq!(code.to_string(), "9421,95");
        let code = GeneticCode::parse("{10,4,2,1}", 10).unwrap();
        assert_eq!(code.genes(), &[set(&[10, 4, 2, 1])]);
        assert_eq!(code.to_string(), "{10,4,2,1}");
        assert_eq!(
            GeneticCode::parse("632", 6).unwrap().genes(),
            &[set(&[6, 3, 2])]
        );
        // A gene without n is a gee.
        assert_eq!(
            GeneticCode::parse("7531", 8).unwrap().genes(),
            &[set(&[8, 7, 5, 3, 1])]
        );

        assert!(matches!(GeneticCode::parse("", 6), Err(Error::Parse(_))));
        assert!(matches!(GeneticCode::parse("6a", 6), Err(Error::Parse(_))));
        assert!(matches!(GeneticCode::parse("672", 6), Err(Error::Parse(_))));
        assert!(matches!(
            GeneticCode::parse("{6,3", 6),
            Err(Error::Parse(_))
        ));
        assert!(matches!(GeneticCode::parse("633", 6), Err(Error::Parse(_))));
        assert!(matches!(
            GeneticCode::parse("632,631", 6),
            Err(Error::NotAntichain(_))
        ));
    }

    #[test]
    fn realization() {
        let code = GeneticCode::parse("632", 6).unwrap();
        let l = code.realize().unwrap();
        assert_eq!(genetic_code(&l).unwrap(), code);

        assert!(GeneticCode::parse("8531", 8).unwrap().realize().is_ok());
        assert!(matches!(
            GeneticCode::parse("7531", 8).unwrap().realize(),
            Err(Error::NotRealizable(_))
        ));
        for n in 4..=8 {
            let sphere = GeneticCode::parse(&n.to_string(), n).unwrap();
            assert_eq!(genetic_code(&sphere.realize().unwrap()).unwrap(), sphere);
        }
    }

    #[test]
    fn integer_rescaling() {
        let l = LengthVector::new(vec![frac(1, 6), frac(1, 3), frac(1, 2)]).unwrap();
        assert_eq!(l.integer_scaled(), lv(&[1, 2, 3]));
        assert_eq!(l.integer_scaled().to_string(), "(1,2,3)");
    }
}
