//! Cyclic order on `[n]`, cyclic intervals, interval decompositions, and the
//! Gale order on equal-size subsets.
//!
//! Everything downstream is phrased in terms of the cyclically shifted order
//! `<_i` given by `i <_i i+1 <_i … <_i n <_i 1 <_i … <_i i-1`. Element labels
//! are 1-based. Subsets are bitmasks over at most 64 elements: bit `x-1`
//! stands for the label `x`.

use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use crate::error::{Error, Result};

/// Hard cap coming from the 64-bit subset representation.
pub const MAX_GROUND_SIZE: u32 = 64;

/// The ground set `{1, …, n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroundSet {
    n: u32,
}

impl GroundSet {
    pub fn new(n: u32) -> Result<GroundSet> {
        if n == 0 || n > MAX_GROUND_SIZE {
            return Err(Error::InvalidGroundSize { n: n as u64 });
        }
        Ok(GroundSet { n })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn contains(&self, label: u32) -> bool {
        (1..=self.n).contains(&label)
    }

    pub fn check_label(&self, label: u32) -> Result<()> {
        if self.contains(label) {
            Ok(())
        } else {
            Err(Error::LabelOutOfRange {
                label: label as u64,
                n: self.n,
            })
        }
    }

    /// Labels `1..=n` in natural order.
    pub fn elements(&self) -> impl Iterator<Item = u32> {
        1..=self.n
    }

    /// Successor of `x` on the cycle.
    pub fn next(&self, x: u32) -> u32 {
        debug_assert!(self.contains(x));
        x % self.n + 1
    }

    /// Predecessor of `x` on the cycle.
    pub fn prev(&self, x: u32) -> u32 {
        debug_assert!(self.contains(x));
        if x == 1 {
            self.n
        } else {
            x - 1
        }
    }

    /// Position of `x` in the order `<_i`: 0 for `i` itself, up to n-1.
    pub fn position(&self, i: u32, x: u32) -> u32 {
        debug_assert!(self.contains(i) && self.contains(x));
        (x + self.n - i) % self.n
    }

    /// `x ≤_i y` in the cyclically shifted order starting at `i`.
    pub fn cyclic_le(&self, i: u32, x: u32, y: u32) -> bool {
        self.position(i, x) <= self.position(i, y)
    }

    pub fn interval(&self, a: u32, b: u32) -> Result<CyclicInterval> {
        self.check_label(a)?;
        self.check_label(b)?;
        Ok(CyclicInterval { a, b })
    }

    pub fn empty_subset(&self) -> Subset {
        Subset(0)
    }

    pub fn full_subset(&self) -> Subset {
        Subset(full_mask(self.n))
    }

    /// The open interval `(b, a)`: everything strictly between `b` and `a`,
    /// equivalently the complement of `[a, b]`.
    pub fn open_interval(&self, b: u32, a: u32) -> Subset {
        debug_assert!(self.contains(a) && self.contains(b));
        CyclicInterval { a, b }.members(self).complement(self)
    }

    /// The half-open interval `[c, a)`; empty when `c == a`.
    pub fn half_open_interval(&self, c: u32, a: u32) -> Subset {
        debug_assert!(self.contains(a) && self.contains(c));
        if c == a {
            Subset(0)
        } else {
            CyclicInterval { a: c, b: self.prev(a) }.members(self)
        }
    }

    /// All `2^n` subsets in ascending mask order. Desk scale only; callers
    /// guard the exponent.
    pub fn subsets(&self) -> impl Iterator<Item = Subset> {
        (0..=full_mask(self.n)).map(Subset)
    }

    /// All `d`-subsets in lexicographic order of their sorted label vectors.
    pub fn subsets_of_size(&self, d: u32) -> Vec<Subset> {
        let n = self.n;
        let mut out = Vec::new();
        if d > n {
            return out;
        }
        if d == 0 {
            out.push(Subset(0));
            return out;
        }
        let d = d as usize;
        let mut comb: Vec<u32> = (1..=d as u32).collect();
        loop {
            out.push(Subset::from_sorted(&comb));
            // advance to the next combination in lexicographic order
            let mut i = d;
            while i > 0 && comb[i - 1] == n - (d - i) as u32 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            comb[i - 1] += 1;
            for j in i..d {
                comb[j] = comb[j - 1] + 1;
            }
        }
        out
    }

    /// Sort the members of `s` by the order `<_i`.
    pub fn sorted_by_shift(&self, i: u32, s: Subset) -> Vec<u32> {
        let mut v: Vec<u32> = s.iter().collect();
        v.sort_by_key(|&x| self.position(i, x));
        v
    }

    /// Gale order: with both subsets sorted by `<_i`, every component of `s`
    /// is `≤_i` the matching component of `t`. Requires `|s| = |t|`.
    pub fn gale_le(&self, i: u32, s: Subset, t: Subset) -> Result<bool> {
        self.check_label(i)?;
        if s.len() != t.len() {
            return Err(Error::CardinalityMismatch {
                expected: s.len(),
                found: t.len(),
            });
        }
        Ok(self.gale_le_unchecked(i, s, t))
    }

    /// Prefix-count formulation: `s ≤_i t` iff every `<_i`-prefix holds at
    /// least as many elements of `s` as of `t`.
    pub(crate) fn gale_le_unchecked(&self, i: u32, s: Subset, t: Subset) -> bool {
        let sr = self.rotate_to(i, s);
        let tr = self.rotate_to(i, t);
        // positions 0..p-1 live in the low bits after rotation
        for p in 1..=self.n {
            let cs = (sr & low_bits(p)).count_ones();
            let ct = (tr & low_bits(p)).count_ones();
            if cs < ct {
                return false;
            }
        }
        true
    }

    /// Rotate the mask so that bit 0 corresponds to label `i`.
    fn rotate_to(&self, i: u32, s: Subset) -> u64 {
        let m = s.0;
        let shift = i - 1;
        if shift == 0 {
            m
        } else {
            ((m >> shift) | (m << (self.n - shift))) & full_mask(self.n)
        }
    }

    /// Split a proper nonempty subset into its maximal cyclic intervals,
    /// ordered by smallest left endpoint in natural order. The empty and
    /// full subsets are reported as their own outcomes.
    pub fn decompose(&self, s: Subset) -> Decomposition {
        if s.is_empty() {
            return Decomposition::Empty;
        }
        if s == self.full_subset() {
            return Decomposition::Full;
        }
        let mut intervals = Vec::new();
        for a in self.elements() {
            if s.contains(a) && !s.contains(self.prev(a)) {
                let mut b = a;
                while s.contains(self.next(b)) {
                    b = self.next(b);
                }
                intervals.push(CyclicInterval { a, b });
            }
        }
        Decomposition::Proper(intervals)
    }
}

fn full_mask(n: u32) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn low_bits(p: u32) -> u64 {
    full_mask(p)
}

/// The cyclic interval `[a, b]` = `{x : x ≤_a b}`. `[a, a]` is the singleton
/// `{a}`; `[a, a-1]` wraps all the way around and is the whole ground set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CyclicInterval {
    a: u32,
    b: u32,
}

impl CyclicInterval {
    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn members(&self, gs: &GroundSet) -> Subset {
        let mut m = Subset(0);
        let mut x = self.a;
        loop {
            m = m.with(x);
            if x == self.b {
                break;
            }
            x = gs.next(x);
        }
        m
    }

    pub fn len(&self, gs: &GroundSet) -> u32 {
        gs.position(self.a, self.b) + 1
    }

    pub fn contains(&self, gs: &GroundSet, x: u32) -> bool {
        gs.cyclic_le(self.a, x, self.b)
    }

    pub fn is_full(&self, gs: &GroundSet) -> bool {
        self.b == gs.prev(self.a)
    }
}

impl fmt::Display for CyclicInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.a, self.b)
    }
}

/// Outcome of decomposing a subset into maximal cyclic intervals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decomposition {
    Empty,
    Full,
    Proper(Vec<CyclicInterval>),
}

impl Decomposition {
    /// The interval list of a proper nonempty subset, or a
    /// `ProperSubsetRequired` error.
    pub fn proper(self) -> Result<Vec<CyclicInterval>> {
        match self {
            Decomposition::Proper(v) => Ok(v),
            _ => Err(Error::ProperSubsetRequired),
        }
    }
}

/// A subset of the ground set, stored as a bitmask (bit `x-1` ⇔ label `x`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn singleton(x: u32) -> Subset {
        debug_assert!((1..=MAX_GROUND_SIZE).contains(&x));
        Subset(1 << (x - 1))
    }

    pub fn from_labels<I: IntoIterator<Item = u32>>(gs: &GroundSet, labels: I) -> Result<Subset> {
        let mut m = Subset(0);
        for x in labels {
            gs.check_label(x)?;
            m = m.with(x);
        }
        Ok(m)
    }

    fn from_sorted(labels: &[u32]) -> Subset {
        let mut m = 0u64;
        for &x in labels {
            m |= 1 << (x - 1);
        }
        Subset(m)
    }

    pub fn contains(&self, x: u32) -> bool {
        debug_assert!((1..=MAX_GROUND_SIZE).contains(&x));
        self.0 >> (x - 1) & 1 == 1
    }

    pub fn with(self, x: u32) -> Subset {
        debug_assert!((1..=MAX_GROUND_SIZE).contains(&x));
        Subset(self.0 | 1 << (x - 1))
    }

    pub fn without(self, x: u32) -> Subset {
        debug_assert!((1..=MAX_GROUND_SIZE).contains(&x));
        Subset(self.0 & !(1 << (x - 1)))
    }

    pub fn len(&self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(&self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(&self, other: Subset) -> bool {
        self.0 & other.0 != 0
    }

    pub fn complement(&self, gs: &GroundSet) -> Subset {
        Subset(!self.0 & full_mask(gs.n()))
    }

    pub fn is_full(&self, gs: &GroundSet) -> bool {
        self.0 == full_mask(gs.n())
    }

    /// Member labels in ascending natural order.
    pub fn iter(&self) -> SubsetIter {
        SubsetIter(self.0)
    }

    pub fn labels(&self) -> Vec<u32> {
        self.iter().collect()
    }

    /// The raw bitmask: bit `x-1` stands for label `x`. Rank tables are
    /// indexed by this.
    pub fn mask(&self) -> u64 {
        self.0
    }

    /// Wrap a raw bitmask. The caller keeps it within the ground set.
    pub fn from_mask(mask: u64) -> Subset {
        Subset(mask)
    }
}

impl BitAnd for Subset {
    type Output = Subset;
    fn bitand(self, rhs: Subset) -> Subset {
        Subset(self.0 & rhs.0)
    }
}

impl BitOr for Subset {
    type Output = Subset;
    fn bitor(self, rhs: Subset) -> Subset {
        Subset(self.0 | rhs.0)
    }
}

impl Sub for Subset {
    type Output = Subset;
    fn sub(self, rhs: Subset) -> Subset {
        Subset(self.0 & !rhs.0)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, x) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", x)?;
        }
        write!(f, "}}")
    }
}

pub struct SubsetIter(u64);

impl Iterator for SubsetIter {
    type Item = u32;
    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            None
        } else {
            let tz = self.0.trailing_zeros();
            self.0 &= self.0 - 1;
            Some(tz + 1)
        }
    }
}
