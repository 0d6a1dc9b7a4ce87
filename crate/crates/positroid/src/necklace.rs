//! Grassmann necklaces and the bijection with decorated permutations.
//!
//! A Grassmann necklace of type (d, n) is a sequence I_1, …, I_n of
//! d-subsets of [n] with the step condition: if i ∈ I_i then
//! I_{i+1} = I_i ∖ {i} ∪ {j} for some j, otherwise I_{i+1} = I_i
//! (indices mod n).
//!
//! The convention for the bijection: x ∈ I_k exactly when x <_k π⁻¹(x), or
//! x is a black fixed point. Under it the step always reads
//! I_{i+1} = I_i ∖ {i} ∪ {π(i)}, so the permutation can be read back off
//! the necklace one step at a time.

use std::fmt;
use std::str::FromStr;

use crate::cyclic::{GroundSet, Subset};
use crate::error::{Error, Result};
use crate::perm::{Color, DecoratedPermutation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrassmannNecklace {
    gs: GroundSet,
    d: u32,
    sets: Vec<Subset>,
}

impl GrassmannNecklace {
    /// Validate the step condition and cardinality at every index.
    pub fn new(n: u32, sets: Vec<Subset>) -> Result<GrassmannNecklace> {
        let gs = GroundSet::new(n)?;
        if sets.len() != n as usize {
            return Err(Error::parse(format!(
                "necklace needs {} sets, found {}",
                n,
                sets.len()
            )));
        }
        let d = sets[0].len();
        for (idx, s) in sets.iter().enumerate() {
            if !s.is_subset_of(gs.full_subset()) {
                return Err(Error::LabelOutOfRange {
                    label: s.labels().last().copied().unwrap_or(0) as u64,
                    n,
                });
            }
            if s.len() != d {
                return Err(Error::NecklaceCondition {
                    index: idx as u32 + 1,
                    detail: format!("|I_{}| = {} but d = {}", idx + 1, s.len(), d),
                });
            }
        }
        let necklace = GrassmannNecklace { gs, d, sets };
        necklace.check_steps()?;
        Ok(necklace)
    }

    fn check_steps(&self) -> Result<()> {
        let n = self.gs.n();
        for i in 1..=n {
            let cur = self.set(i);
            let nxt = self.set(self.gs.next(i));
            if cur.contains(i) {
                if cur == nxt {
                    continue; // black fixed point
                }
                let removed = cur - nxt;
                let added = nxt - cur;
                if removed != Subset::singleton(i) || added.len() != 1 {
                    return Err(Error::NecklaceCondition {
                        index: i,
                        detail: format!(
                            "I_{} = {} must be I_{} with {} swapped for one new element, found {}",
                            self.gs.next(i),
                            nxt,
                            i,
                            i,
                            cur
                        ),
                    });
                }
            } else if cur != nxt {
                return Err(Error::NecklaceCondition {
                    index: i,
                    detail: format!(
                        "{} not in I_{} so I_{} must equal it, found {}",
                        i,
                        i,
                        self.gs.next(i),
                        nxt
                    ),
                });
            }
        }
        Ok(())
    }

    /// The necklace of a decorated permutation: I_k is the set of x with
    /// x <_k π⁻¹(x), together with the black fixed points.
    pub fn from_permutation(p: &DecoratedPermutation) -> GrassmannNecklace {
        let gs = p.ground_set();
        let n = gs.n();
        let mut sets = Vec::with_capacity(n as usize);
        for k in 1..=n {
            let mut s = Subset::EMPTY;
            for x in 1..=n {
                let y = p.preimage(x);
                if x == y {
                    if p.color(x) == Some(Color::Black) {
                        s = s.with(x);
                    }
                } else if gs.position(k, x) < gs.position(k, y) {
                    s = s.with(x);
                }
            }
            sets.push(s);
        }
        let d = sets[0].len();
        debug_assert!(sets.iter().all(|s| s.len() == d));
        GrassmannNecklace { gs, d, sets }
    }

    /// Read the permutation back off the necklace steps; the two-sided
    /// inverse of `from_permutation`.
    pub fn to_permutation(&self) -> Result<DecoratedPermutation> {
        let n = self.gs.n();
        let mut images = vec![0u32; n as usize];
        let mut colors = Vec::new();
        for i in 1..=n {
            let cur = self.set(i);
            let nxt = self.set(self.gs.next(i));
            if cur == nxt {
                images[(i - 1) as usize] = i;
                colors.push((
                    i,
                    if cur.contains(i) {
                        Color::Black
                    } else {
                        Color::White
                    },
                ));
            } else {
                let added = nxt - cur;
                debug_assert_eq!(added.len(), 1, "validated step");
                images[(i - 1) as usize] = added.iter().next().unwrap();
            }
        }
        DecoratedPermutation::new(images, &colors)
    }

    pub fn n(&self) -> u32 {
        self.gs.n()
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn ground_set(&self) -> GroundSet {
        self.gs
    }

    /// I_k, 1-based.
    pub fn set(&self, k: u32) -> Subset {
        self.sets[(k - 1) as usize]
    }

    pub fn sets(&self) -> &[Subset] {
        &self.sets
    }
}

/// Prints each I_k sorted by `<_k`, e.g. `{1,2} {2,3} {3,4} {4,1}`.
impl fmt::Display for GrassmannNecklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for k in 1..=self.n() {
            if k > 1 {
                write!(f, " ")?;
            }
            write!(f, "{{")?;
            for (j, x) in self.gs.sorted_by_shift(k, self.set(k)).iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", x)?;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}

/// Parses the `Display` form: one `{…}` token per index.
impl FromStr for GrassmannNecklace {
    type Err = Error;

    fn from_str(s: &str) -> Result<GrassmannNecklace> {
        let tokens: Vec<&str> = s.split_whitespace().collect();
        if tokens.is_empty() {
            return Err(Error::parse("empty necklace"));
        }
        let n = tokens.len() as u32;
        let gs = GroundSet::new(n)?;
        let mut sets = Vec::with_capacity(tokens.len());
        for (idx, tok) in tokens.iter().enumerate() {
            let inner = tok
                .strip_prefix('{')
                .and_then(|t| t.strip_suffix('}'))
                .ok_or_else(|| {
                    Error::parse(format!("necklace set {} must look like {{1,2}}", idx + 1))
                })?;
            let mut s = Subset::EMPTY;
            if !inner.is_empty() {
                for part in inner.split(',') {
                    let x: u32 = part.trim().parse().map_err(|_| {
                        Error::parse(format!("bad label '{}' in necklace set {}", part, idx + 1))
                    })?;
                    gs.check_label(x)?;
                    s = s.with(x);
                }
            }
            sets.push(s);
        }
        GrassmannNecklace::new(n, sets)
    }
}
