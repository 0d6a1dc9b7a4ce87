//! Flats through the permutation: interval flats, intersections of interval
//! flats, inseparable flats, and their enumeration with ranks.
//!
//! The working criterion is a covering condition. Write the bridge interval
//! of a non-fixed element `x` for `[x, π⁻¹(x)]`. A proper cyclic interval
//! `[a, b]` is a flat exactly when every element of the complement gap
//! `(b, a)` lies in a bridge interval contained in the gap. A union of
//! intervals is an intersection of interval flats exactly when the same
//! holds gap by gap, and for inseparable subsets that covering condition
//! characterizes flatness outright.

use crate::cyclic::{CyclicInterval, Subset};
use crate::error::{Error, Result};
use crate::positroid::Positroid;

/// Flat enumeration and separability sweeps stop at this exponent.
pub const FLAT_SWEEP_LIMIT: u32 = 20;

/// The arc from `x` to `π⁻¹(x)`; the covering objects of the flat criteria.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BridgeInterval {
    pub x: u32,
    pub interval: CyclicInterval,
}

/// A nonempty inseparable flat with its rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatRecord {
    pub members: Subset,
    pub rank: u32,
    pub inseparable: bool,
}

impl Positroid {
    /// The bridge interval of `x`.
    pub fn bridge(&self, x: u32) -> Result<BridgeInterval> {
        self.require_fixed_point_free()?;
        let gs = self.ground_set();
        gs.check_label(x)?;
        let interval = gs.interval(x, self.permutation().preimage(x))?;
        Ok(BridgeInterval { x, interval })
    }

    /// All n bridge intervals.
    pub fn bridges(&self) -> Result<Vec<BridgeInterval>> {
        (1..=self.n()).map(|x| self.bridge(x)).collect()
    }

    /// Is the cyclic interval a flat? The full circle always is; a proper
    /// interval is one exactly when its complement gap is covered by
    /// bridge intervals inside the gap.
    pub fn is_interval_flat(&self, iv: CyclicInterval) -> Result<bool> {
        self.require_fixed_point_free()?;
        let gs = self.ground_set();
        if iv.is_full(&gs) {
            return Ok(true);
        }
        Ok(self.complement_covered(iv.members(&gs)))
    }

    /// Every element outside `e` covered by a bridge interval disjoint
    /// from `e`?
    fn complement_covered(&self, e: Subset) -> bool {
        let gs = self.ground_set();
        let mut covered = Subset::EMPTY;
        for x in gs.elements() {
            let arc = gs
                .interval(x, self.permutation().preimage(x))
                .expect("valid labels")
                .members(&gs);
            if !arc.intersects(e) {
                covered = covered | arc;
            }
        }
        e.complement(&gs).is_subset_of(covered)
    }

    /// If `e` is an intersection of interval flats, the witnessing flats
    /// `[a_i, b_{i-1}]` (one per complement gap); `None` otherwise.
    /// `e` must be a proper nonempty subset.
    pub fn interval_flat_intersection(&self, e: Subset) -> Result<Option<Vec<CyclicInterval>>> {
        self.require_fixed_point_free()?;
        let gs = self.ground_set();
        let intervals = gs.decompose(e).proper()?;
        if !self.complement_covered(e) {
            return Ok(None);
        }
        let k = intervals.len();
        let mut witnesses = Vec::with_capacity(k);
        for i in 0..k {
            let a_i = intervals[i].a();
            let b_prev = intervals[(i + k - 1) % k].b();
            let w = gs.interval(a_i, b_prev)?;
            debug_assert_eq!(self.is_interval_flat(w), Ok(true));
            witnesses.push(w);
        }
        Ok(Some(witnesses))
    }

    /// Flatness test for an inseparable subset: true exactly when the
    /// complement is covered by bridge intervals disjoint from `e`.
    /// Calling it on a separable subset is a contract violation; the
    /// criterion is unproven there.
    pub fn inseparable_flat_criterion(&self, e: Subset) -> Result<bool> {
        self.require_fixed_point_free()?;
        if e.is_empty() {
            return Err(Error::ProperSubsetRequired);
        }
        if self.is_separable(e)? {
            return Err(Error::contract(
                "inseparable_flat_criterion called on a separable subset",
            ));
        }
        Ok(self.complement_covered(e))
    }

    /// Does some bipartition of `e` into nonempty parts have additive
    /// ranks, computed with the fast rank engine? Same verdict as the
    /// oracle. Guarded at 2^|e| bipartitions.
    pub fn is_separable(&self, e: Subset) -> Result<bool> {
        self.require_fixed_point_free()?;
        if e.len() <= 1 {
            return Ok(false);
        }
        if e.len() > FLAT_SWEEP_LIMIT {
            return Err(Error::Capacity {
                what: "bipartition sweep over 2^|E| splits",
                limit: 1 << FLAT_SWEEP_LIMIT,
                requested: 1u64.checked_shl(e.len()).unwrap_or(u64::MAX),
            });
        }
        let whole = self.rank(e)?;
        let mut memo: std::collections::HashMap<u64, u32> = std::collections::HashMap::new();
        let low = 1u64 << e.mask().trailing_zeros();
        let mut s = e.mask();
        loop {
            s = (s - 1) & e.mask();
            if s == 0 {
                break;
            }
            if s & low == 0 {
                continue;
            }
            let part = Subset::from_mask(s);
            let rest = e - part;
            let rank_part = self.memoized_rank(&mut memo, part)?;
            if rank_part >= whole {
                continue;
            }
            let rank_rest = self.memoized_rank(&mut memo, rest)?;
            if rank_part + rank_rest == whole {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn memoized_rank(
        &self,
        memo: &mut std::collections::HashMap<u64, u32>,
        s: Subset,
    ) -> Result<u32> {
        if let Some(&r) = memo.get(&s.mask()) {
            return Ok(r);
        }
        let r = self.rank(s)?;
        memo.insert(s.mask(), r);
        Ok(r)
    }

    /// Exactly the nonempty inseparable flats, each with its rank, sorted
    /// by member labels. Candidates come from the covering criterion
    /// (cheap, permutation only); the separability filter runs second.
    pub fn enumerate_inseparable_flats(&self) -> Result<Vec<FlatRecord>> {
        self.require_fixed_point_free()?;
        let gs = self.ground_set();
        let n = self.n();
        if n > FLAT_SWEEP_LIMIT {
            return Err(Error::Capacity {
                what: "inseparable flat sweep over 2^n subsets",
                limit: 1 << FLAT_SWEEP_LIMIT,
                requested: 1u64.checked_shl(n).unwrap_or(u64::MAX),
            });
        }
        let table = self.rank_table()?;
        let arcs: Vec<Subset> = gs
            .elements()
            .map(|x| {
                gs.interval(x, self.permutation().preimage(x))
                    .expect("valid labels")
                    .members(&gs)
            })
            .collect();
        let mut out = Vec::new();
        for e in gs.subsets() {
            if e.is_empty() {
                continue;
            }
            let mut covered = Subset::EMPTY;
            for arc in &arcs {
                if !arc.intersects(e) {
                    covered = covered | *arc;
                }
            }
            if !e.complement(&gs).is_subset_of(covered) {
                continue;
            }
            if separable_by_table(&table, e) {
                continue;
            }
            out.push(FlatRecord {
                members: e,
                rank: table[e.mask() as usize] as u32,
                inseparable: true,
            });
        }
        out.sort_by(|a, b| label_lex(a.members, b.members));
        Ok(out)
    }
}

/// Bipartition scan against a full rank table.
pub(crate) fn separable_by_table(table: &[u8], e: Subset) -> bool {
    if e.len() <= 1 {
        return false;
    }
    let whole = table[e.mask() as usize];
    let low = 1u64 << e.mask().trailing_zeros();
    let mut s = e.mask();
    loop {
        s = (s - 1) & e.mask();
        if s == 0 {
            return false;
        }
        if s & low == 0 {
            continue;
        }
        if table[s as usize] + table[(e.mask() & !s) as usize] == whole {
            return true;
        }
    }
}

/// Lexicographic order on sorted label sequences; a prefix sorts first.
pub(crate) fn label_lex(a: Subset, b: Subset) -> std::cmp::Ordering {
    let mut ai = a.iter();
    let mut bi = b.iter();
    loop {
        match (ai.next(), bi.next()) {
            (None, None) => return std::cmp::Ordering::Equal,
            (None, Some(_)) => return std::cmp::Ordering::Less,
            (Some(_), None) => return std::cmp::Ordering::Greater,
            (Some(x), Some(y)) if x != y => return x.cmp(&y),
            _ => {}
        }
    }
}
