//! Enumeration of realizable genetic codes.
//!
//! Sets containing `n` are visited in increasing order of element sum, which
//! is a linear extension of the dominance order. Each set is declared short
//! or long; a set above a known long set is forced long. A branch survives
//! only while the slack LP, restricted to the current maximal short and
//! minimal long sets, has positive optimum. Every leaf is a distinct
//! realizable code, and the LP point at the leaf realizes it.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::genetics::{add_side_constraint, slack_program, GeneticCode};
use crate::lp::LpOutcome;
use crate::poset::IndexSubset;
use crate::rational::{int, Rational};

pub const MAX_ENUMERATION_SIDES: u32 = 9;

struct Universe {
    n: usize,
    /// Masks over `[n]` of the sets containing `n`, in visiting order.
    sets: Vec<u64>,
    /// `below[i][j]`: `sets[i] <= sets[j]` in the dominance order.
    below: Vec<Vec<bool>>,
}

impl Universe {
    fn new(n: u32) -> Self {
        let top = 1u64 << (n - 1);
        let mut sets: Vec<u64> = (0..top).map(|r| r | top).collect();
        let weight = |m: u64| {
            (0..n)
                .filter(|b| m >> b & 1 == 1)
                .map(|b| b + 1)
                .sum::<u32>()
        };
        sets.sort_by_key(|&m| (weight(m), m));
        let subsets: Vec<IndexSubset> = sets.iter().map(|&m| IndexSubset::from_mask(m)).collect();
        let below = subsets
            .iter()
            .map(|a| subsets.iter().map(|b| a.dominated_by(b)).collect())
            .collect();
        Universe {
            n: n as usize,
            sets,
            below,
        }
    }
}

#[derive(Clone)]
struct State {
    next: usize,
    /// Indices of the current maximal short sets.
    short_max: Vec<usize>,
    /// Indices of the minimal long sets.
    long_min: Vec<usize>,
    witness: Vec<Rational>,
}

impl State {
    fn classifies_short(&self, u: &Universe, idx: usize) -> bool {
        let mask = u.sets[idx];
        let (mut inside, mut total) = (
            Rational::from_integer(0.into()),
            Rational::from_integer(0.into()),
        );
        for i in 0..u.n {
            total += &self.witness[i];
            if mask >> i & 1 == 1 {
                inside += &self.witness[i];
            }
        }
        inside * int(2) < total
    }

    fn solve(&self, u: &Universe) -> Option<Vec<Rational>> {
        let mut lp = slack_program(u.n);
        for &i in &self.short_max {
            add_side_constraint(&mut lp, u.n, u.sets[i], true);
        }
        for &i in &self.long_min {
            add_side_constraint(&mut lp, u.n, u.sets[i], false);
        }
        match lp.solve() {
            LpOutcome::Optimal { value, point } if value.is_positive() => Some(point),
            _ => None,
        }
    }

    fn push_short(&self, u: &Universe, idx: usize) -> State {
        let mut next = self.clone();
        next.short_max.retain(|&j| !u.below[j][idx]);
        next.short_max.push(idx);
        next.next = idx + 1;
        next
    }

    fn push_long(&self, idx: usize) -> State {
        let mut next = self.clone();
        next.long_min.push(idx);
        next.next = idx + 1;
        next
    }

    /// Children of this node, short branch first.
    fn children(&self, u: &Universe) -> Vec<State> {
        let idx = self.next;
        if self.long_min.iter().any(|&j| u.below[j][idx]) {
            let mut forced = self.clone();
            forced.next = idx + 1;
            return vec![forced];
        }
        let witness_short = self.classifies_short(u, idx);
        let mut out = Vec::with_capacity(2);
        for short in [true, false] {
            let mut child = if short {
                self.push_short(u, idx)
            } else {
                self.push_long(idx)
            };
            if short != witness_short {
                match child.solve(u) {
                    Some(w) => child.witness = w,
                    None => continue,
                }
            }
            out.push(child);
        }
        out
    }

    fn is_leaf(&self, u: &Universe) -> bool {
        self.next == u.sets.len()
    }

    fn code(&self, u: &Universe) -> GeneticCode {
        let genes = self
            .short_max
            .iter()
            .map(|&i| IndexSubset::from_mask(u.sets[i]))
            .collect();
        GeneticCode::new(u.n as u32, genes).expect("maximal short sets form an antichain")
    }
}

fn root(u: &Universe) -> State {
    // {n} is first in visiting order and is short exactly when the space is
    // nonempty.
    let mut s = State {
        next: 0,
        short_max: Vec::new(),
        long_min: Vec::new(),
        witness: Vec::new(),
    };
    s = s.push_short(u, 0);
    s.witness = s.solve(u).expect("{n} short is always feasible");
    s
}

fn explore(u: &Universe, state: State, out: &mut Vec<GeneticCode>) {
    let mut stack = vec![state];
    while let Some(s) = stack.pop() {
        if s.is_leaf(u) {
            out.push(s.code(u));
            continue;
        }
        let mut kids = s.children(u);
        kids.reverse();
        stack.extend(kids);
    }
}

fn check_range(n: u32) -> Result<()> {
    if n < 4 {
        return Err(Error::InvalidArgument(format!(
            "enumeration needs n >= 4, got {n}"
        )));
    }
    if n > MAX_ENUMERATION_SIDES {
        return Err(Error::SizeLimit {
            what: "number of sides",
            got: n as usize,
            limit: MAX_ENUMERATION_SIDES as usize,
        });
    }
    Ok(())
}

/// Every realizable genetic code with `n` sides (nonempty spaces only), in
/// canonical order.
pub fn enumerate_codes(n: u32) -> Result<Vec<GeneticCode>> {
    enumerate_codes_parallel(n, 1)
}

/// As [`enumerate_codes`], splitting the search tree over `threads` workers.
/// The output does not depend on `threads`.
pub fn enumerate_codes_parallel(n: u32, threads: usize) -> Result<Vec<GeneticCode>> {
    check_range(n)?;
    let u = Universe::new(n);
    let mut codes = Vec::new();
    if threads <= 1 {
        explore(&u, root(&u), &mut codes);
    } else {
        // Breadth-first until there is enough work to share.
        let mut frontier = vec![root(&u)];
        while frontier.len() < threads * 8 && frontier.iter().any(|s| !s.is_leaf(&u)) {
            let mut next = Vec::new();
            for s in frontier {
                if s.is_leaf(&u) {
                    next.push(s);
                } else {
                    next.extend(s.children(&u));
                }
            }
            frontier = next;
        }
        let cursor = AtomicUsize::new(0);
        let results = Mutex::new(Vec::new());
        std::thread::scope(|scope| {
            for _ in 0..threads {
                scope.spawn(|| {
                    let mut local = Vec::new();
                    loop {
                        let i = cursor.fetch_add(1, Ordering::Relaxed);
                        let Some(s) = frontier.get(i) else { break };
                        explore(&u, s.clone(), &mut local);
                    }
                    results.lock().expect("worker panicked").extend(local);
                });
            }
        });
        codes = results.into_inner().expect("worker panicked");
    }
    codes.sort();
    Ok(codes)
}

/// Necessary condition on a candidate code: for gees `G`, `G'` the set
/// `[n-1] - G'` (long, as the complement of a short set) must not lie below
/// the short set `G ∪ {n}`.
pub fn passes_prefilter(code: &GeneticCode) -> bool {
    let n = code.n();
    let gees = code.gees();
    let universe = IndexSubset::initial_segment(n - 1);
    gees.iter().all(|g| {
        let gene = g.with(n);
        gees.iter()
            .all(|h| !universe.difference(h).dominated_by(&gene))
    })
}

/// Every nonempty antichain of subsets of `[n-1]` under dominance, as
/// candidate codes. Exponential; meant for `n <= 6`.
pub fn candidate_codes(n: u32) -> Vec<GeneticCode> {
    let sets: Vec<IndexSubset> = (0u64..1 << (n - 1)).map(IndexSubset::from_mask).collect();
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    fn go(
        sets: &[IndexSubset],
        start: usize,
        chosen: &mut Vec<usize>,
        n: u32,
        out: &mut Vec<GeneticCode>,
    ) {
        if !chosen.is_empty() {
            let gees = chosen.iter().map(|&i| sets[i].clone()).collect();
            out.push(GeneticCode::from_gees(n, gees).expect("antichain by construction"));
        }
        for i in start..sets.len() {
            let ok = chosen
                .iter()
                .all(|&j| !sets[i].dominated_by(&sets[j]) && !sets[j].dominated_by(&sets[i]));
            if ok {
                chosen.push(i);
                go(sets, i + 1, chosen, n, out);
                chosen.pop();
            }
        }
    }
    go(&sets, 0, &mut chosen, n, &mut out);
    out.sort();
    out
}
