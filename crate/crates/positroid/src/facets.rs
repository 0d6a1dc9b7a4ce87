//! Inequality systems for the two polytopes attached to a positroid: the
//! independent-set polytope (nonnegativity plus one bound per nonempty
//! inseparable flat, a minimal system) and the basis polytope (the
//! cardinality equality plus one bound per cyclic interval).
//!
//! Systems serialize to a line-oriented H-representation: a `n d` header,
//! then one line per constraint, `<sense> <rhs> <sorted support labels>`,
//! with sense one of `le`, `ge`, `eq`. Nonnegativity rows appear as
//! `ge 0 e`. Row order is deterministic: equalities, then `ge` rows, then
//! `le` rows, each block sorted by support labels.

use std::fmt;

use crate::cyclic::Subset;
use crate::error::{Error, Result};
use crate::flats::label_lex;
use crate::oracle::OracleMatroid;
use crate::positroid::Positroid;

/// 0/1 validation sweeps stop at this exponent.
pub const POINT_SWEEP_LIMIT: u32 = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Le,
    Ge,
    Eq,
}

impl fmt::Display for Sense {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sense::Le => "le",
            Sense::Ge => "ge",
            Sense::Eq => "eq",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InequalityKind {
    FlatBound,
    Nonnegativity,
    CardinalityEquality,
}

/// One linear constraint `Σ_{e ∈ support} x_e  <sense>  rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inequality {
    pub support: Subset,
    pub rhs: u32,
    pub sense: Sense,
    pub kind: InequalityKind,
}

/// Which flat family backs the independent-set system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FlatFamily {
    /// Nonempty inseparable flats: the minimal system.
    #[default]
    Minimal,
    /// Interval flats and their intersections (everything passing the
    /// covering criterion, plus the full ground set). Redundant but valid.
    Cover,
}

/// Which polytope a 0/1 validation targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolytopeMode {
    IndependentSet,
    Basis,
}

/// A 0/1 point where a facet system and the oracle disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointMismatch {
    pub point: Subset,
    pub accepted_by_system: bool,
    pub accepted_by_oracle: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetSystem {
    pub n: u32,
    pub d: u32,
    pub equalities: Vec<Inequality>,
    pub inequalities: Vec<Inequality>,
}

impl Positroid {
    /// The minimal facet system of the independent-set polytope:
    /// `x_e ≥ 0` plus `x_F ≤ rk(F)` over nonempty inseparable flats.
    pub fn independent_set_facets(&self) -> Result<FacetSystem> {
        self.independent_set_system(FlatFamily::Minimal)
    }

    /// Same polytope, choosing the flat family behind the bounds.
    pub fn independent_set_system(&self, family: FlatFamily) -> Result<FacetSystem> {
        self.require_fixed_point_free()?;
        let gs = self.ground_set();
        let mut inequalities: Vec<Inequality> = gs
            .elements()
            .map(|e| Inequality {
                support: Subset::singleton(e),
                rhs: 0,
                sense: Sense::Ge,
                kind: InequalityKind::Nonnegativity,
            })
            .collect();
        let mut bounds: Vec<Inequality> = match family {
            FlatFamily::Minimal => self
                .enumerate_inseparable_flats()?
                .into_iter()
                .map(|f| Inequality {
                    support: f.members,
                    rhs: f.rank,
                    sense: Sense::Le,
                    kind: InequalityKind::FlatBound,
                })
                .collect(),
            FlatFamily::Cover => {
                let table = self.rank_table()?;
                let mut v = Vec::new();
                for e in gs.subsets() {
                    if e.is_empty() {
                        continue;
                    }
                    let covered = e.is_full(&gs)
                        || self.interval_flat_intersection(e)?.is_some();
                    if covered {
                        v.push(Inequality {
                            support: e,
                            rhs: table[e.mask() as usize] as u32,
                            sense: Sense::Le,
                            kind: InequalityKind::FlatBound,
                        });
                    }
                }
                v.sort_by(|a, b| label_lex(a.support, b.support));
                v
            }
        };
        inequalities.append(&mut bounds);
        Ok(FacetSystem {
            n: self.n(),
            d: self.d(),
            equalities: Vec::new(),
            inequalities,
        })
    }

    /// The basis polytope: `Σ x = d` plus one interval bound per cyclic
    /// interval (duplicates collapsed; redundant rows kept otherwise).
    pub fn basis_polytope_system(&self) -> Result<FacetSystem> {
        self.require_fixed_point_free()?;
        let gs = self.ground_set();
        let mut rows: Vec<Inequality> = Vec::new();
        for a in gs.elements() {
            for b in gs.elements() {
                let iv = gs.interval(a, b)?;
                rows.push(Inequality {
                    support: iv.members(&gs),
                    rhs: self.interval_rank(iv)?,
                    sense: Sense::Le,
                    kind: InequalityKind::FlatBound,
                });
            }
        }
        rows.sort_by(|a, b| label_lex(a.support, b.support).then(a.rhs.cmp(&b.rhs)));
        rows.dedup();
        Ok(FacetSystem {
            n: self.n(),
            d: self.d(),
            equalities: vec![Inequality {
                support: gs.full_subset(),
                rhs: self.d(),
                sense: Sense::Eq,
                kind: InequalityKind::CardinalityEquality,
            }],
            inequalities: rows,
        })
    }
}

impl FacetSystem {
    /// Does a 0/1 point (indicator of `point`) satisfy every constraint?
    pub fn accepts_01(&self, point: Subset) -> bool {
        self.equalities
            .iter()
            .chain(self.inequalities.iter())
            .all(|row| {
                let value = (row.support & point).len();
                match row.sense {
                    Sense::Le => value <= row.rhs,
                    Sense::Ge => value >= row.rhs,
                    Sense::Eq => value == row.rhs,
                }
            })
    }

    /// Drop `le` rows implied by the equality (full-support rows) or by a
    /// subset-support row whose slack covers the size difference given the
    /// unit bounds. Pairwise only; no full redundancy elimination.
    pub fn prune_dominated(&self) -> FacetSystem {
        let full = self.n;
        let rows = &self.inequalities;
        let keep: Vec<bool> = rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                if row.sense != Sense::Le {
                    return true;
                }
                if !self.equalities.is_empty()
                    && row.support.len() == full
                    && row.rhs >= self.d
                {
                    return false;
                }
                !rows.iter().enumerate().any(|(j, other)| {
                    j != i
                        && other.sense == Sense::Le
                        && other.support != row.support
                        && other.support.is_subset_of(row.support)
                        && other.rhs + (row.support.len() - other.support.len()) <= row.rhs
                })
            })
            .collect();
        FacetSystem {
            n: self.n,
            d: self.d,
            equalities: self.equalities.clone(),
            inequalities: rows
                .iter()
                .zip(keep)
                .filter_map(|(r, k)| k.then(|| r.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for FacetSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n, self.d)?;
        let write_row = |f: &mut fmt::Formatter<'_>, row: &Inequality| -> fmt::Result {
            write!(f, "{} {}", row.sense, row.rhs)?;
            for e in row.support.iter() {
                write!(f, " {}", e)?;
            }
            writeln!(f)
        };
        for row in &self.equalities {
            write_row(f, row)?;
        }
        for sense in [Sense::Ge, Sense::Le] {
            for row in self.inequalities.iter().filter(|r| r.sense == sense) {
                write_row(f, row)?;
            }
        }
        Ok(())
    }
}

/// Sweep all 0/1 points: in independent-set mode a point must satisfy the
/// system exactly when its support is oracle-independent, in basis mode
/// exactly when its support is a basis. Returns the first disagreement.
pub fn validate_01_points(
    p: &Positroid,
    system: &FacetSystem,
    mode: PolytopeMode,
) -> Result<Option<PointMismatch>> {
    p.require_fixed_point_free()?;
    let n = p.n();
    if n > POINT_SWEEP_LIMIT {
        return Err(Error::Capacity {
            what: "0/1 point sweep over 2^n vectors",
            limit: 1 << POINT_SWEEP_LIMIT,
            requested: 1u64.checked_shl(n).unwrap_or(u64::MAX),
        });
    }
    let oracle = OracleMatroid::from_positroid(p)?;
    Ok(validate_01_points_against(&oracle, system, mode))
}

pub(crate) fn validate_01_points_against(
    oracle: &OracleMatroid,
    system: &FacetSystem,
    mode: PolytopeMode,
) -> Option<PointMismatch> {
    for point in oracle.ground_set().subsets() {
        let by_system = system.accepts_01(point);
        let by_oracle = match mode {
            PolytopeMode::IndependentSet => oracle.is_independent(point),
            PolytopeMode::Basis => oracle.contains_basis(point),
        };
        if by_system != by_oracle {
            return Some(PointMismatch {
                point,
                accepted_by_system: by_system,
                accepted_by_oracle: by_oracle,
            });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::DecoratedPermutation;

    const PAPER14: &str = "2 8 6 7 9 4 5 14 13 3 10 11 1 12";

    fn pos(s: &str) -> Positroid {
        Positroid::from_permutation(s.parse::<DecoratedPermutation>().unwrap())
    }

    fn sub(p: &Positroid, labels: &[u32]) -> Subset {
        Subset::from_labels(&p.ground_set(), labels.iter().copied()).unwrap()
    }

    #[test]
    fn u24_independent_set_facets() {
        let p = pos("3 4 1 2");
        let system = p.independent_set_facets().unwrap();
        assert_eq!(
            system.to_string(),
            "4 2\n\
             ge 0 1\nge 0 2\nge 0 3\nge 0 4\n\
             le 1 1\nle 2 1 2 3 4\nle 1 2\nle 1 3\nle 1 4\n"
        );
    }

    #[test]
    fn paper_facet_rows() {
        let p = pos(PAPER14);
        let system = p.independent_set_facets().unwrap();
        // the closing example of the source material proposes the separable
        // flat {1,2,3,8,9,10}; the minimal system carries its two summands
        // instead
        let supports: Vec<(Subset, u32)> = system
            .inequalities
            .iter()
            .filter(|r| r.kind == InequalityKind::FlatBound)
            .map(|r| (r.support, r.rhs))
            .collect();
        assert!(supports.contains(&(sub(&p, &[1, 2, 3, 8, 9]), 2)));
        assert!(supports.contains(&(sub(&p, &[10]), 1)));
        assert!(!supports.iter().any(|(s, _)| *s == sub(&p, &[1, 2, 3, 8, 9, 10])));
        // the full-set bound appears since the ground set is inseparable here
        assert!(supports.contains(&(p.ground_set().full_subset(), 7)));
        // the separable flat does appear in the cover family, with its rank
        let cover = p.independent_set_system(FlatFamily::Cover).unwrap();
        assert!(cover
            .inequalities
            .iter()
            .any(|r| r.support == sub(&p, &[1, 2, 3, 8, 9, 10]) && r.rhs == 3));
    }

    #[test]
    fn both_families_accept_the_same_01_points() {
        for s in ["3 4 1 2", "2 6 5 3 4 1", "2 3 4 5 1"] {
            let p = pos(s);
            let minimal = p.independent_set_facets().unwrap();
            let cover = p.independent_set_system(FlatFamily::Cover).unwrap();
            assert!(validate_01_points(&p, &minimal, PolytopeMode::IndependentSet)
                .unwrap()
                .is_none());
            assert!(validate_01_points(&p, &cover, PolytopeMode::IndependentSet)
                .unwrap()
                .is_none());
        }
    }

    #[test]
    fn u24_basis_polytope() {
        let p = pos("3 4 1 2");
        let system = p.basis_polytope_system().unwrap();
        assert_eq!(
            system.to_string(),
            "4 2\n\
             eq 2 1 2 3 4\n\
             le 1 1\nle 2 1 2\nle 2 1 2 3\nle 2 1 2 3 4\nle 2 1 2 4\nle 2 1 3 4\nle 2 1 4\n\
             le 1 2\nle 2 2 3\nle 2 2 3 4\n\
             le 1 3\nle 2 3 4\nle 1 4\n"
        );
        assert!(
            validate_01_points(&p, &system, PolytopeMode::Basis)
                .unwrap()
                .is_none()
        );
    }

    #[test]
    fn paper_basis_polytope_rows() {
        let p = pos(PAPER14);
        let system = p.basis_polytope_system().unwrap();
        // rk([1,3]) = 2 appears as a row
        assert!(system
            .inequalities
            .iter()
            .any(|r| r.support == sub(&p, &[1, 2, 3]) && r.rhs == 2));
        // non-loop singletons bound at one
        assert!(system
            .inequalities
            .iter()
            .any(|r| r.support == Subset::singleton(5) && r.rhs == 1));
        assert_eq!(system.equalities.len(), 1);
    }

    #[test]
    fn validate_01_catches_wrong_rhs() {
        let p = pos("3 4 1 2");
        let mut system = p.independent_set_facets().unwrap();
        // loosen the full-set bound: dependent triples slip through
        for row in system.inequalities.iter_mut() {
            if row.support.len() == 4 {
                row.rhs = 3;
            }
        }
        let mismatch = validate_01_points(&p, &system, PolytopeMode::IndependentSet)
            .unwrap()
            .unwrap();
        assert!(mismatch.accepted_by_system && !mismatch.accepted_by_oracle);
        assert_eq!(mismatch.point.len(), 3);
    }

    #[test]
    fn rejected_point_from_facet_row() {
        let p = pos(PAPER14);
        let system = p.independent_set_facets().unwrap();
        // support {1,2,3,8,9,10} exceeds its rank 3, so its indicator is cut
        assert!(!system.accepts_01(sub(&p, &[1, 2, 3, 8, 9, 10])));
        // the zero vector is independent
        assert!(system.accepts_01(Subset::EMPTY));
        // a basis passes both systems
        let h = sub(&p, &[1, 4, 7, 8, 10, 11, 13]);
        assert!(system.accepts_01(h));
        assert!(p.basis_polytope_system().unwrap().accepts_01(h));
    }

    #[test]
    fn pruning_keeps_the_polytope() {
        for s in ["3 4 1 2", "2 6 5 3 4 1", PAPER14] {
            let p = pos(s);
            let system = p.basis_polytope_system().unwrap();
            let pruned = system.prune_dominated();
            assert!(pruned.inequalities.len() < system.inequalities.len());
            // full-support row goes: it is implied by the equality
            assert!(pruned
                .inequalities
                .iter()
                .all(|r| r.support.len() < p.n()));
            if p.n() <= 14 {
                assert!(validate_01_points(&p, &pruned, PolytopeMode::Basis)
                    .unwrap()
                    .is_none());
            }
        }
    }

    #[test]
    fn every_rhs_matches_both_rank_engines() {
        let p = pos(PAPER14);
        let oracle = OracleMatroid::from_positroid(&p).unwrap();
        let system = p.independent_set_facets().unwrap();
        for row in system
            .inequalities
            .iter()
            .filter(|r| r.kind == InequalityKind::FlatBound)
        {
            assert_eq!(row.rhs, p.rank(row.support).unwrap());
            assert_eq!(row.rhs, oracle.rank(row.support));
        }
        let basis_system = p.basis_polytope_system().unwrap();
        for row in &basis_system.inequalities {
            assert_eq!(row.rhs, p.rank(row.support).unwrap());
            assert_eq!(row.rhs, oracle.rank(row.support));
        }
    }

    /// Minimality probe: dropping any flat bound must admit a point that
    /// violates only the dropped row. Points are half-integral, encoded as
    /// a pair (ones, halves); an element in both carries 3/2.
    fn half_value(row: &Inequality, ones: Subset, halves: Subset) -> u32 {
        2 * (row.support & ones).len() + (row.support & halves).len()
    }

    fn satisfies_all_but(
        system: &FacetSystem,
        skip: usize,
        ones: Subset,
        halves: Subset,
    ) -> bool {
        system
            .inequalities
            .iter()
            .enumerate()
            .filter(|(i, row)| *i != skip && row.sense == Sense::Le)
            .all(|(_, row)| half_value(row, ones, halves) <= 2 * row.rhs)
    }

    /// All `r`-subsets of the given labels, as subsets.
    fn combinations(labels: &[u32], r: usize) -> Vec<Subset> {
        let mut out = Vec::new();
        let mut stack: Vec<(usize, Subset, usize)> = vec![(0, Subset::EMPTY, 0)];
        while let Some((idx, acc, size)) = stack.pop() {
            if size == r {
                out.push(acc);
                continue;
            }
            if idx >= labels.len() || labels.len() - idx < r - size {
                continue;
            }
            stack.push((idx + 1, acc, size));
            stack.push((idx + 1, acc.with(labels[idx]), size + 1));
        }
        out
    }

    #[test]
    fn minimality_probe_on_golden_instances() {
        for s in ["3 4 1 2", PAPER14] {
            let p = pos(s);
            let oracle = OracleMatroid::from_positroid(&p).unwrap();
            let system = p.independent_set_facets().unwrap();
            let flat_rows: Vec<usize> = system
                .inequalities
                .iter()
                .enumerate()
                .filter(|(_, r)| r.kind == InequalityKind::FlatBound)
                .map(|(i, _)| i)
                .collect();
            for i in flat_rows {
                let row = system.inequalities[i].clone();
                let mut found = false;
                if row.rhs == 1 && row.support.len() == 1 {
                    // 3/2 on the lone element
                    found = half_value(&row, row.support, row.support) > 2 * row.rhs
                        && satisfies_all_but(&system, i, row.support, row.support);
                }
                if !found {
                    // a maximal independent subset of the flat plus half an
                    // extra flat element
                    let flat_labels = row.support.labels();
                    'search: for ones in
                        combinations(&flat_labels, row.rhs as usize)
                    {
                        if !oracle.is_independent(ones) {
                            continue;
                        }
                        for e in (row.support - ones).iter() {
                            let halves = Subset::singleton(e);
                            if half_value(&row, ones, halves) > 2 * row.rhs
                                && satisfies_all_but(&system, i, ones, halves)
                            {
                                found = true;
                                break 'search;
                            }
                        }
                    }
                }
                assert!(
                    found,
                    "no half-integral violator for row {} of {}",
                    row.support, s
                );
            }
        }
    }
}
