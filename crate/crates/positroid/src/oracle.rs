//! Brute-force matroid oracle over an explicit basis list.
//!
//! Every derived notion reduces to scans over the bases, so this module is
//! the trusted reference the fast permutation-level engines are tested
//! against. Single queries stay plain scans; the bulk operations (all flats,
//! separability, subset sweeps) go through a lazily built table of all `2^n`
//! ranks, which is itself cross-checked against the scans in tests.

use std::sync::OnceLock;

use crate::cyclic::{GroundSet, Subset};
use crate::error::{Error, Result};
use crate::positroid::Positroid;

/// Bulk operations refuse ground sets whose power set exceeds this.
pub const SUBSET_SWEEP_LIMIT: u32 = 20;

/// Construction runs the full exchange-axiom check only up to this many
/// bases; larger families defer to [`OracleMatroid::exchange_violation`].
const CONSTRUCTION_CHECK_LIMIT: usize = 512;

#[derive(Debug)]
pub struct OracleMatroid {
    gs: GroundSet,
    d: u32,
    bases: Vec<Subset>,
    rank_table: OnceLock<Vec<u8>>,
}

impl Clone for OracleMatroid {
    fn clone(&self) -> Self {
        OracleMatroid {
            gs: self.gs,
            d: self.d,
            bases: self.bases.clone(),
            rank_table: OnceLock::new(),
        }
    }
}

impl PartialEq for OracleMatroid {
    fn eq(&self, other: &Self) -> bool {
        self.gs == other.gs && self.d == other.d && self.bases == other.bases
    }
}

/// A witness that one of the two exchange axioms fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeViolation {
    /// False for the basis exchange axiom, true for its dual form.
    pub dual_form: bool,
    pub b1: Subset,
    pub b2: Subset,
    pub pivot: u32,
}

impl OracleMatroid {
    /// Validate shape (nonempty, equal cardinalities, labels in range) and,
    /// at desk scale, the basis exchange axiom.
    pub fn from_bases(n: u32, bases: Vec<Subset>) -> Result<OracleMatroid> {
        let m = OracleMatroid::from_bases_unchecked(n, bases)?;
        if m.bases.len() <= CONSTRUCTION_CHECK_LIMIT {
            if let Some(v) = m.exchange_violation() {
                return Err(Error::parse(format!(
                    "bases do not satisfy the {} exchange axiom: pivot {} in {} against {}",
                    if v.dual_form { "dual" } else { "basis" },
                    v.pivot,
                    v.b1,
                    v.b2
                )));
            }
        }
        Ok(m)
    }

    /// Shape checks only; exchange-axiom validity is the caller's problem.
    pub fn from_bases_unchecked(n: u32, mut bases: Vec<Subset>) -> Result<OracleMatroid> {
        let gs = GroundSet::new(n)?;
        if bases.is_empty() {
            return Err(Error::parse("a matroid needs at least one basis"));
        }
        let d = bases[0].len();
        for b in &bases {
            if b.len() != d {
                return Err(Error::CardinalityMismatch {
                    expected: d,
                    found: b.len(),
                });
            }
            if !b.is_subset_of(gs.full_subset()) {
                return Err(Error::LabelOutOfRange {
                    label: b.labels().last().copied().unwrap_or(0) as u64,
                    n,
                });
            }
        }
        bases.sort_unstable();
        bases.dedup();
        Ok(OracleMatroid {
            gs,
            d,
            bases,
            rank_table: OnceLock::new(),
        })
    }

    /// The positroid's bases, enumerated through the Gale criterion.
    pub fn from_positroid(p: &Positroid) -> Result<OracleMatroid> {
        let mut bases = p.enumerate_bases()?;
        debug_assert!(!bases.is_empty(), "necklace entries are bases");
        bases.sort_unstable();
        Ok(OracleMatroid {
            gs: p.ground_set(),
            d: p.d(),
            bases,
            rank_table: OnceLock::new(),
        })
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

    pub fn bases(&self) -> &[Subset] {
        &self.bases
    }

    pub fn contains_basis(&self, b: Subset) -> bool {
        self.bases.binary_search(&b).is_ok()
    }

    /// max over bases of `|B ∩ a|`, by direct scan.
    pub fn rank(&self, a: Subset) -> u32 {
        self.bases
            .iter()
            .map(|b| (*b & a).len())
            .max()
            .expect("nonempty basis list")
    }

    /// Some basis attaining the maximal intersection with `a`; the first in
    /// the stored (ascending bitmask) order.
    pub fn max_intersection_basis(&self, a: Subset) -> Subset {
        let best = self.rank(a);
        *self
            .bases
            .iter()
            .find(|b| (**b & a).len() == best)
            .expect("nonempty basis list")
    }

    pub fn is_independent(&self, a: Subset) -> bool {
        self.rank(a) == a.len()
    }

    /// Everything whose addition keeps the rank; contains `a` and is
    /// idempotent.
    pub fn closure(&self, a: Subset) -> Subset {
        let base = self.rank(a);
        let mut out = a;
        for e in self.gs.elements() {
            if !a.contains(e) && self.rank(a.with(e)) == base {
                out = out.with(e);
            }
        }
        out
    }

    pub fn is_flat(&self, a: Subset) -> bool {
        self.closure(a) == a
    }

    /// All flats, via the rank table. Ascending mask order.
    pub fn all_flats(&self) -> Result<Vec<Subset>> {
        let table = self.table()?;
        let n = self.n();
        let mut out = Vec::new();
        for s in self.gs.subsets() {
            let rk = table[s.mask() as usize];
            let flat = (1..=n).all(|e| s.contains(e) || table[s.with(e).mask() as usize] > rk);
            if flat {
                out.push(s);
            }
        }
        Ok(out)
    }

    /// Does some bipartition of `a` into nonempty parts have additive ranks?
    pub fn is_separable(&self, a: Subset) -> Result<bool> {
        Ok(self.separation_witness(a)?.is_some())
    }

    /// The first rank-additive bipartition in submask order, if any.
    pub fn separation_witness(&self, a: Subset) -> Result<Option<(Subset, Subset)>> {
        if a.len() <= 1 {
            return Ok(None);
        }
        let whole: u32;
        let rank_of: Box<dyn Fn(Subset) -> u32 + '_> = if self.n() <= SUBSET_SWEEP_LIMIT {
            let table = self.table()?;
            whole = table[a.mask() as usize] as u32;
            Box::new(move |s: Subset| table[s.mask() as usize] as u32)
        } else {
            if a.len() > SUBSET_SWEEP_LIMIT {
                return Err(Error::Capacity {
                    what: "bipartition sweep over 2^|A| splits",
                    limit: 1 << SUBSET_SWEEP_LIMIT,
                    requested: 1u64
                        .checked_shl(a.len())
                        .unwrap_or(u64::MAX),
                });
            }
            whole = self.rank(a);
            Box::new(move |s: Subset| self.rank(s))
        };
        // walk proper submasks containing a's lowest element, so each
        // unordered bipartition appears once
        let low = 1u64 << (a.mask().trailing_zeros());
        let mut s = a.mask();
        loop {
            s = (s - 1) & a.mask();
            if s == 0 {
                break;
            }
            if s & low == 0 {
                continue;
            }
            let part = Subset::from_mask(s);
            let rest = a - part;
            if rank_of(part) + rank_of(rest) == whole {
                return Ok(Some((part, rest)));
            }
        }
        Ok(None)
    }

    /// Complement every basis; an involution.
    pub fn dual(&self) -> OracleMatroid {
        let bases: Vec<Subset> = self.bases.iter().map(|b| b.complement(&self.gs)).collect();
        OracleMatroid::from_bases_unchecked(self.n(), bases).expect("complements stay in range")
    }

    /// Both exchange axioms over all basis pairs and pivots.
    pub fn satisfies_exchange_axioms(&self) -> bool {
        self.exchange_violation().is_none()
    }

    pub fn exchange_violation(&self) -> Option<ExchangeViolation> {
        for &b1 in &self.bases {
            for &b2 in &self.bases {
                for pivot in (b1 - b2).iter() {
                    let stripped = b1.without(pivot);
                    if !(b2 - b1)
                        .iter()
                        .any(|inc| self.contains_basis(stripped.with(inc)))
                    {
                        return Some(ExchangeViolation {
                            dual_form: false,
                            b1,
                            b2,
                            pivot,
                        });
                    }
                }
                for pivot in (b2 - b1).iter() {
                    if !(b1 - b2)
                        .iter()
                        .any(|out| self.contains_basis(b1.without(out).with(pivot)))
                    {
                        return Some(ExchangeViolation {
                            dual_form: true,
                            b1,
                            b2,
                            pivot,
                        });
                    }
                }
            }
        }
        None
    }

    /// Ranks of all `2^n` subsets, built once. Independence is the downward
    /// closure of the basis list; the rank of a dependent set is the best
    /// rank after dropping one element.
    pub fn rank_table(&self) -> Result<&[u8]> {
        self.table()
    }

    fn table(&self) -> Result<&[u8]> {
        if self.n() > SUBSET_SWEEP_LIMIT {
            return Err(Error::Capacity {
                what: "rank table over 2^n subsets",
                limit: 1 << SUBSET_SWEEP_LIMIT,
                requested: 1u64.checked_shl(self.n()).unwrap_or(u64::MAX),
            });
        }
        Ok(self.rank_table.get_or_init(|| {
            let n = self.n();
            let size = 1usize << n;
            let mut independent = vec![false; size];
            for b in &self.bases {
                independent[b.mask() as usize] = true;
            }
            for m in (0..size).rev() {
                if independent[m] {
                    let mut rest = m;
                    while rest != 0 {
                        let bit = rest & rest.wrapping_neg();
                        independent[m & !bit] = true;
                        rest &= rest - 1;
                    }
                }
            }
            let mut table = vec![0u8; size];
            for m in 1..size {
                if independent[m] {
                    table[m] = (m as u64).count_ones() as u8;
                } else {
                    let mut best = 0u8;
                    let mut rest = m;
                    while rest != 0 {
                        let bit = rest & rest.wrapping_neg();
                        best = best.max(table[m & !bit]);
                        rest &= rest - 1;
                    }
                    table[m] = best;
                }
            }
            table
        }))
    }
}
