//! Index sets and multisets of positive integers under the dominance order.
//!
//! `S <= T` holds when `T` contains a subfamily `t_1 < ... < t_l` with
//! `s_i <= t_i` for the ascending enumeration `s_1 < ... < s_l` of `S`. The
//! same order is used on multisets. Both types store their elements sorted so
//! that equality is structural.

use std::cmp::Ordering;
use std::fmt;

/// Tail-alignment test for `s <= t` on sorted slices.
///
/// Matching the `i`-th smallest element of `s` with the `i`-th element of the
/// top `|s|` elements of `t` is optimal, so this agrees with the subfamily
/// definition.
fn tail_dominated(s: &[u32], t: &[u32]) -> bool {
    if s.len() > t.len() {
        return false;
    }
    let offset = t.len() - s.len();
    s.iter().zip(&t[offset..]).all(|(a, b)| a <= b)
}

/// A finite set of positive integers, stored strictly increasing.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSubset(Vec<u32>);

impl IndexSubset {
    pub fn empty() -> Self {
        IndexSubset(Vec::new())
    }

    /// Builds a set from arbitrary elements; duplicates are merged.
    ///
    /// Panics if an element is zero.
    pub fn new<I: IntoIterator<Item = u32>>(elements: I) -> Self {
        let mut v: Vec<u32> = elements.into_iter().collect();
        assert!(
            v.iter().all(|&x| x >= 1),
            "index sets hold positive integers"
        );
        v.sort_unstable();
        v.dedup();
        IndexSubset(v)
    }

    /// `{1, ..., k}`; empty for `k = 0`.
    pub fn initial_segment(k: u32) -> Self {
        IndexSubset((1..=k).collect())
    }

    /// Set whose elements are the positions of the one bits of `mask`
    /// (bit 0 is element 1).
    pub fn from_mask(mask: u64) -> Self {
        IndexSubset(
            (0..64)
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| b + 1)
                .collect(),
        )
    }

    pub fn mask(&self) -> u64 {
        self.0.iter().fold(0u64, |acc, &x| {
            assert!(x <= 64, "element {x} does not fit a 64-bit mask");
            acc | 1 << (x - 1)
        })
    }

    pub fn elements(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn max(&self) -> Option<u32> {
        self.0.last().copied()
    }

    pub fn dominated_by(&self, other: &IndexSubset) -> bool {
        tail_dominated(&self.0, &other.0)
    }

    pub fn with(&self, x: u32) -> IndexSubset {
        IndexSubset::new(self.0.iter().copied().chain(std::iter::once(x)))
    }

    pub fn without(&self, x: u32) -> IndexSubset {
        IndexSubset(self.0.iter().copied().filter(|&y| y != x).collect())
    }

    pub fn union(&self, other: &IndexSubset) -> IndexSubset {
        IndexSubset::new(self.0.iter().chain(&other.0).copied())
    }

    pub fn difference(&self, other: &IndexSubset) -> IndexSubset {
        IndexSubset(
            self.0
                .iter()
                .copied()
                .filter(|&x| !other.contains(x))
                .collect(),
        )
    }

    pub fn is_disjoint(&self, other: &IndexSubset) -> bool {
        self.0.iter().all(|&x| !other.contains(x))
    }

    pub fn is_subset(&self, other: &IndexSubset) -> bool {
        self.0.iter().all(|&x| other.contains(x))
    }

    /// Every subset of `self`, in increasing mask order.
    pub fn subsets(&self) -> impl Iterator<Item = IndexSubset> + '_ {
        let k = self.0.len();
        (0u64..1 << k).map(move |bits| {
            IndexSubset(
                (0..k)
                    .filter(|i| bits >> i & 1 == 1)
                    .map(|i| self.0[i])
                    .collect(),
            )
        })
    }

    pub fn to_multiset(&self) -> IndexMultiset {
        IndexMultiset(self.0.clone())
    }

    /// Comparison of the descending enumerations, the order genes are listed in.
    pub fn cmp_descending(&self, other: &IndexSubset) -> Ordering {
        self.0.iter().rev().cmp(other.0.iter().rev())
    }
}

impl fmt::Display for IndexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

/// A finite multiset of positive integers, stored nondecreasing.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexMultiset(Vec<u32>);

impl IndexMultiset {
    pub fn new<I: IntoIterator<Item = u32>>(elements: I) -> Self {
        let mut v: Vec<u32> = elements.into_iter().collect();
        assert!(
            v.iter().all(|&x| x >= 1),
            "multisets hold positive integers"
        );
        v.sort_unstable();
        IndexMultiset(v)
    }

    pub fn elements(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dominated_by(&self, other: &IndexMultiset) -> bool {
        tail_dominated(&self.0, &other.0)
    }

    /// Sorted merge keeping multiplicities.
    pub fn union(&self, other: &IndexMultiset) -> IndexMultiset {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            if a[i] <= b[j] {
                out.push(a[i]);
                i += 1;
            } else {
                out.push(b[j]);
                j += 1;
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        IndexMultiset(out)
    }

    /// Largest `k >= 0` with `[k] <= self`.
    pub fn max_initial_segment(&self) -> u32 {
        // [k] <= U implies [k-1] <= U, so the first failure ends the scan.
        let mut k = 0u32;
        while (k as usize) < self.0.len() {
            let next = k + 1;
            let offset = self.0.len() - next as usize;
            if (1..=next).zip(&self.0[offset..]).all(|(i, &u)| i <= u) {
                k = next;
            } else {
                break;
            }
        }
        k
    }
}

impl From<&IndexSubset> for IndexMultiset {
    fn from(s: &IndexSubset) -> Self {
        s.to_multiset()
    }
}

/// Largest `k` such that some ordered pair of gees (repetition allowed) has a
/// multiset union dominating `[k]`. Zero for an empty list.
pub fn k0(gees: &[IndexSubset]) -> u32 {
    let mut best = 0;
    for g in gees {
        for h in gees {
            best = best.max(
                g.to_multiset()
                    .union(&h.to_multiset())
                    .max_initial_segment(),
            );
        }
    }
    best
}

/// Searches the partitions `[k] = S ⊔ T` for one with `S <= g` and `T <= h`.
pub fn find_partition(
    g: &IndexSubset,
    h: &IndexSubset,
    k: u32,
) -> Option<(IndexSubset, IndexSubset)> {
    assert!(k < 64, "partition search is limited to k < 64");
    let segment = IndexSubset::initial_segment(k);
    for bits in 0u64..1 << k {
        let s = IndexSubset::from_mask(bits);
        if !s.dominated_by(g) {
            continue;
        }
        let t = segment.difference(&s);
        if t.dominated_by(h) {
            return Some((s, t));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[u32]) -> IndexSubset {
        IndexSubset::new(v.iter().copied())
    }

    fn ms(v: &[u32]) -> IndexMultiset {
        IndexMultiset::new(v.iter().copied())
    }

    /// Direct reading of the definition: try every injective order-preserving
    /// choice of a subfamily of `t`.
    fn brute_dominated(s: &[u32], t: &[u32]) -> bool {
        fn go(s: &[u32], t: &[u32]) -> bool {
            match s.split_first() {
                None => true,
                Some((&x, rest)) => (0..t.len()).any(|j| x <= t[j] && go(rest, &t[j + 1..])),
            }
        }
        go(s, t)
    }

    /// All nondecreasing sequences with entries in 1..=max and length <= len.
    fn all_multisets(max: u32, len: usize) -> Vec<Vec<u32>> {
        let mut out = vec![vec![]];
        let mut frontier = vec![vec![]];
        for _ in 0..len {
            let mut next = Vec::new();
            for v in &frontier {
                let lo = v.last().copied().unwrap_or(1);
                for x in lo..=max {
                    let mut w: Vec<u32> = v.clone();
                    w.push(x);
                    next.push(w);
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    #[test]
    fn dominance_examples() {
        assert!(set(&[2, 4]).dominated_by(&set(&[1, 2, 4])));
        assert!(brute_dominated(&[2, 4], &[1, 2, 4]));
        assert!(!set(&[1, 5]).dominated_by(&set(&[1, 2, 4])));
        assert!(IndexSubset::empty().dominated_by(&set(&[3])));
        assert!(IndexSubset::empty().dominated_by(&IndexSubset::empty()));
        assert!(!set(&[1]).dominated_by(&IndexSubset::empty()));
    }

    #[test]
    fn dominance_matches_brute_force_and_is_a_partial_order() {
        let all = all_multisets(6, 4);
        for a in &all {
            let ma = IndexMultiset(a.clone());
            assert!(ma.dominated_by(&ma));
            for b in &all {
                let mb = IndexMultiset(b.clone());
                let fast = ma.dominated_by(&mb);
                assert_eq!(fast, brute_dominated(a, b), "{a:?} vs {b:?}");
                if fast && mb.dominated_by(&ma) {
                    assert_eq!(a, b);
                }
            }
        }
        // Transitivity on a thinner slice to keep the cube small.
        let small = all_multisets(4, 3);
        for a in &small {
            for b in &small {
                if !tail_dominated(a, b) {
                    continue;
                }
                for c in &small {
                    if tail_dominated(b, c) {
                        assert!(tail_dominated(a, c), "{a:?} {b:?} {c:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn multiset_union_examples() {
        assert_eq!(ms(&[2, 3]).union(&ms(&[2, 3])), ms(&[2, 2, 3, 3]));
        assert_eq!(ms(&[1, 2, 4]).union(&ms(&[5])), ms(&[1, 2, 4, 5]));
        assert_eq!(ms(&[]).union(&ms(&[])), ms(&[]));
    }

    #[test]
    fn initial_segment_examples() {
        assert_eq!(ms(&[2, 2, 3, 3]).max_initial_segment(), 3);
        assert_eq!(ms(&[1, 1, 2, 2, 4, 4]).max_initial_segment(), 4);
        assert_eq!(ms(&[]).max_initial_segment(), 0);
        assert_eq!(ms(&[2]).max_initial_segment(), 1);
        assert_eq!(ms(&[2, 2]).max_initial_segment(), 2);
    }

    #[test]
    fn k0_examples() {
        assert_eq!(k0(&[set(&[4, 2, 1]), set(&[5])]), 4);
        assert_eq!(k0(&[set(&[3, 2])]), 3);
        assert_eq!(k0(&[IndexSubset::empty()]), 0);
    }

    #[test]
    fn k0_ignores_order_and_duplicates() {
        let a = vec![set(&[4, 2, 1]), set(&[5]), set(&[3, 1])];
        let mut b = a.clone();
        b.reverse();
        b.push(set(&[5]));
        assert_eq!(k0(&a), k0(&b));
    }

    #[test]
    fn partition_examples() {
        let (s, t) = find_partition(&set(&[4, 2, 1]), &set(&[5]), 4).unwrap();
        assert!(s.dominated_by(&set(&[4, 2, 1])) && t.dominated_by(&set(&[5])));
        assert_eq!(s.union(&t), IndexSubset::initial_segment(4));
        assert!(s.is_disjoint(&t));

        let (s, t) = find_partition(&set(&[3, 2]), &set(&[3, 2]), 3).unwrap();
        assert!(s.dominated_by(&set(&[2, 3])) && t.dominated_by(&set(&[2, 3])));
        assert_eq!(s.union(&t), IndexSubset::initial_segment(3));

        assert_eq!(
            find_partition(&IndexSubset::empty(), &IndexSubset::empty(), 0),
            Some((IndexSubset::empty(), IndexSubset::empty()))
        );
        assert_eq!(find_partition(&set(&[3, 2]), &set(&[3, 2]), 4), None);
    }

    /// A dominated initial segment always splits between the two sets.
    #[test]
    fn union_dominance_yields_partition() {
        let sets: Vec<IndexSubset> = (0u64..1 << 7)
            .map(IndexSubset::from_mask)
            .filter(|s| s.len() <= 4)
            .collect();
        for g in &sets {
            for h in &sets {
                let k = g
                    .to_multiset()
                    .union(&h.to_multiset())
                    .max_initial_segment();
                assert!(
                    find_partition(g, h, k).is_some(),
                    "anomaly at {g} {h} k={k}"
                );
            }
        }
    }

    #[test]
    fn mask_round_trip() {
        let s = set(&[1, 3, 7]);
        assert_eq!(s.mask(), 0b1000101);
        assert_eq!(IndexSubset::from_mask(s.mask()), s);
        assert_eq!(
            set(&[9, 4, 2, 1]).cmp_descending(&set(&[9, 5])),
            Ordering::Less
        );
    }
}
