//! The positroid itself: a decorated permutation and its Grassmann necklace
//! kept in lockstep, with basis membership and enumeration through the Gale
//! order criterion.

use crate::cyclic::{GroundSet, Subset};
use crate::error::{Error, Result};
use crate::necklace::GrassmannNecklace;
use crate::perm::DecoratedPermutation;

/// Basis enumeration refuses to scan more than this many candidate subsets.
pub const BASIS_ENUM_LIMIT: u64 = 1_000_000;

/// A positroid of rank d on [n], addressed by either of its two equivalent
/// combinatorial handles. `B` is a basis exactly when `I_j ≤_j B` in the
/// Gale order for every `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Positroid {
    perm: DecoratedPermutation,
    necklace: GrassmannNecklace,
    fixed_point_free: bool,
}

impl Positroid {
    pub fn from_permutation(perm: DecoratedPermutation) -> Positroid {
        let necklace = GrassmannNecklace::from_permutation(&perm);
        let fixed_point_free = perm.is_fixed_point_free();
        Positroid {
            perm,
            necklace,
            fixed_point_free,
        }
    }

    pub fn from_necklace(necklace: GrassmannNecklace) -> Result<Positroid> {
        let perm = necklace.to_permutation()?;
        let fixed_point_free = perm.is_fixed_point_free();
        Ok(Positroid {
            perm,
            necklace,
            fixed_point_free,
        })
    }

    pub fn n(&self) -> u32 {
        self.perm.n()
    }

    pub fn d(&self) -> u32 {
        self.necklace.d()
    }

    pub fn ground_set(&self) -> GroundSet {
        self.perm.ground_set()
    }

    pub fn permutation(&self) -> &DecoratedPermutation {
        &self.perm
    }

    pub fn necklace(&self) -> &GrassmannNecklace {
        &self.necklace
    }

    /// I_k of the necklace.
    pub fn necklace_set(&self, k: u32) -> Subset {
        self.necklace.set(k)
    }

    pub fn is_fixed_point_free(&self) -> bool {
        self.fixed_point_free
    }

    /// Guard for the structural algorithms, which assume no loops and no
    /// coloops.
    pub fn require_fixed_point_free(&self) -> Result<()> {
        if self.fixed_point_free {
            Ok(())
        } else {
            Err(Error::FixedPointsPresent {
                fixed_points: self.perm.fixed_points().labels(),
            })
        }
    }

    /// Gale criterion for basis membership.
    pub fn is_basis(&self, b: Subset) -> Result<bool> {
        if b.len() != self.d() {
            return Err(Error::CardinalityMismatch {
                expected: self.d(),
                found: b.len(),
            });
        }
        if !b.is_subset_of(self.ground_set().full_subset()) {
            return Err(Error::LabelOutOfRange {
                label: b.labels().last().copied().unwrap_or(0) as u64,
                n: self.n(),
            });
        }
        Ok(self.is_basis_unchecked(b))
    }

    pub(crate) fn is_basis_unchecked(&self, b: Subset) -> bool {
        let gs = self.ground_set();
        (1..=self.n()).all(|j| gs.gale_le_unchecked(j, self.necklace_set(j), b))
    }

    /// All bases in lexicographic order of their sorted label vectors.
    /// Scans the full binomial; guarded at desk scale.
    pub fn enumerate_bases(&self) -> Result<Vec<Subset>> {
        let count = binomial(self.n() as u64, self.d() as u64);
        if count > BASIS_ENUM_LIMIT {
            return Err(Error::Capacity {
                what: "basis enumeration over C(n,d) candidates",
                limit: BASIS_ENUM_LIMIT,
                requested: count,
            });
        }
        let gs = self.ground_set();
        Ok(gs
            .subsets_of_size(self.d())
            .into_iter()
            .filter(|&b| self.is_basis_unchecked(b))
            .collect())
    }

    pub fn loops(&self) -> Subset {
        self.perm.loops()
    }

    pub fn coloops(&self) -> Subset {
        self.perm.coloops()
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}
