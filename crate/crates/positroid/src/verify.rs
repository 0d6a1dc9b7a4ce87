//! Oracle-equivalence suite for a single instance: every fast computation
//! replayed against the brute-force matroid, with the first counterexample
//! reported. Exhaustive at small n, sampled (with a note) beyond.

use crate::cyclic::Subset;
use crate::error::Result;
use crate::facets::{validate_01_points_against, PolytopeMode};
use crate::flats::{label_lex, separable_by_table};
use crate::oracle::{OracleMatroid, SUBSET_SWEEP_LIMIT};
use crate::positroid::Positroid;

/// Exhaustive subset sweeps run while `2^n` stays at or under this.
pub const EXHAUSTIVE_SWEEP_LIMIT: u32 = 1 << 16;

/// Full exchange-axiom scans run while the square of the basis count stays
/// at or under this.
pub const EXHAUSTIVE_PAIR_LIMIT: u64 = 1 << 24;

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Seed for the sampled fallbacks.
    pub seed: u64,
    /// How many random subsets (or basis pairs) a sampled check draws.
    pub sample_size: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 0x5EED,
            sample_size: 4096,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    /// Counterexample or summary.
    pub detail: String,
    /// True when a capacity guard downgraded the check to sampling.
    pub sampled: bool,
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

struct SplitMix(u64);

impl SplitMix {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }
}

/// Run the whole suite. Needs the basis enumeration to fit in the capacity
/// guard; everything else degrades to sampling on its own.
pub fn run(p: &Positroid, opts: &VerifyOptions) -> Result<VerifyReport> {
    p.require_fixed_point_free()?;
    let oracle = OracleMatroid::from_positroid(p)?;
    let gs = p.ground_set();
    let n = p.n();
    let mut checks = Vec::new();

    // necklace round trip
    {
        let back = p.necklace().to_permutation()?;
        checks.push(CheckResult {
            name: "necklace-roundtrip",
            passed: back == *p.permutation(),
            detail: String::new(),
            sampled: false,
        });
    }

    // subset pool: exhaustive or sampled
    let exhaustive = (1u64 << n) <= EXHAUSTIVE_SWEEP_LIMIT as u64;
    let pool: Vec<Subset> = if exhaustive {
        gs.subsets().collect()
    } else {
        let mut rng = SplitMix(opts.seed);
        (0..opts.sample_size)
            .map(|_| Subset::from_mask(rng.next() & gs.full_subset().mask()))
            .collect()
    };

    // rank and closure against the oracle; the oracle side goes through its
    // rank table when that fits, closures then being lookups
    {
        let oracle_table: Option<Vec<u8>> = if n <= SUBSET_SWEEP_LIMIT {
            Some(oracle.rank_table()?.to_vec())
        } else {
            None
        };
        let oracle_rank = |e: Subset| -> u32 {
            match &oracle_table {
                Some(t) => t[e.mask() as usize] as u32,
                None => oracle.rank(e),
            }
        };
        let oracle_closure = |e: Subset| -> Subset {
            let base = oracle_rank(e);
            let mut out = e;
            for x in gs.elements() {
                if !e.contains(x) && oracle_rank(e.with(x)) == base {
                    out = out.with(x);
                }
            }
            out
        };
        let mut rank_fail = None;
        let mut closure_fail = None;
        // closure costs n+1 ranks per subset; cap it when the oracle has to scan
        let closure_cap = if oracle_table.is_some() {
            pool.len()
        } else {
            pool.len().min(256)
        };
        for (idx, &e) in pool.iter().enumerate() {
            let fast = p.rank(e)?;
            let slow = oracle_rank(e);
            if fast != slow && rank_fail.is_none() {
                rank_fail = Some(format!("rank({}) = {} but oracle says {}", e, fast, slow));
            }
            if idx < closure_cap {
                let fast_cl = p.closure(e)?;
                let slow_cl = oracle_closure(e);
                if fast_cl != slow_cl && closure_fail.is_none() {
                    closure_fail = Some(format!(
                        "closure({}) = {} but oracle says {}",
                        e, fast_cl, slow_cl
                    ));
                }
            }
        }
        checks.push(CheckResult {
            name: "rank-vs-oracle",
            passed: rank_fail.is_none(),
            detail: rank_fail.unwrap_or_else(|| format!("{} subsets", pool.len())),
            sampled: !exhaustive,
        });
        checks.push(CheckResult {
            name: "closure-vs-oracle",
            passed: closure_fail.is_none(),
            detail: closure_fail.unwrap_or_else(|| format!("{} subsets", closure_cap)),
            sampled: !exhaustive,
        });
    }

    // interval flats, all n^2 intervals
    {
        let mut fail = None;
        for a in gs.elements() {
            for b in gs.elements() {
                let iv = gs.interval(a, b)?;
                let fast = p.is_interval_flat(iv)?;
                let slow = oracle.is_flat(iv.members(&gs));
                if fast != slow {
                    fail = Some(format!("interval {} flat: fast {} oracle {}", iv, fast, slow));
                    break;
                }
            }
        }
        checks.push(CheckResult {
            name: "interval-flats",
            passed: fail.is_none(),
            detail: fail.unwrap_or_else(|| format!("{} intervals", n * n)),
            sampled: false,
        });
    }

    // inseparable flats: full enumeration when tables fit, else sampled
    // criterion agreement
    if n <= SUBSET_SWEEP_LIMIT {
        let fast: Vec<(Subset, u32)> = p
            .enumerate_inseparable_flats()?
            .into_iter()
            .map(|f| (f.members, f.rank))
            .collect();
        let table = oracle.rank_table()?.to_vec();
        let mut slow: Vec<(Subset, u32)> = oracle
            .all_flats()?
            .into_iter()
            .filter(|&f| !f.is_empty() && !separable_by_table(&table, f))
            .map(|f| (f, table[f.mask() as usize] as u32))
            .collect();
        slow.sort_by(|x, y| label_lex(x.0, y.0));
        let passed = fast == slow;
        let detail = if passed {
            format!("{} flats", fast.len())
        } else {
            let missing = slow.iter().find(|x| !fast.contains(x));
            let extra = fast.iter().find(|x| !slow.contains(x));
            format!("missing {:?}, extra {:?}", missing, extra)
        };
        checks.push(CheckResult {
            name: "inseparable-flats",
            passed,
            detail,
            sampled: false,
        });
    } else {
        let mut fail = None;
        let mut tested = 0;
        for &e in &pool {
            if e.is_empty() || e.is_full(&gs) || e.len() > SUBSET_SWEEP_LIMIT {
                continue;
            }
            if oracle.is_separable(e)? {
                continue;
            }
            tested += 1;
            let fast = p.inseparable_flat_criterion(e)?;
            let slow = oracle.is_flat(e);
            if fast != slow {
                fail = Some(format!("criterion({}) = {} but oracle flat = {}", e, fast, slow));
                break;
            }
        }
        checks.push(CheckResult {
            name: "inseparable-flats",
            passed: fail.is_none(),
            detail: fail.unwrap_or_else(|| format!("{} inseparable samples", tested)),
            sampled: true,
        });
    }

    // sharing property: I_a ∩ [b, a) ⊆ I_b for all a, b
    {
        let mut fail = None;
        'outer: for a in gs.elements() {
            for b in gs.elements() {
                let window = gs.half_open_interval(b, a);
                let lhs = p.necklace_set(a) & window;
                if !lhs.is_subset_of(p.necklace_set(b)) {
                    fail = Some(format!("I_{} ∩ [{},{}) ⊄ I_{}", a, b, a, b));
                    break 'outer;
                }
            }
        }
        checks.push(CheckResult {
            name: "sharing-property",
            passed: fail.is_none(),
            detail: fail.unwrap_or_default(),
            sampled: false,
        });
    }

    // exchange axioms, full or sampled pairs
    {
        let pairs = (oracle.bases().len() as u64).pow(2);
        if pairs <= EXHAUSTIVE_PAIR_LIMIT {
            let violation = oracle.exchange_violation();
            checks.push(CheckResult {
                name: "exchange-axioms",
                passed: violation.is_none(),
                detail: violation
                    .map(|v| format!("{:?}", v))
                    .unwrap_or_else(|| format!("{} basis pairs", pairs)),
                sampled: false,
            });
        } else {
            let mut rng = SplitMix(opts.seed ^ 0xEC);
            let bases = oracle.bases();
            let mut fail = None;
            for _ in 0..opts.sample_size {
                let b1 = bases[(rng.next() % bases.len() as u64) as usize];
                let b2 = bases[(rng.next() % bases.len() as u64) as usize];
                for pivot in (b1 - b2).iter() {
                    let ok = (b2 - b1)
                        .iter()
                        .any(|inc| oracle.contains_basis(b1.without(pivot).with(inc)));
                    if !ok {
                        fail = Some(format!("pivot {} of {} against {}", pivot, b1, b2));
                    }
                }
            }
            checks.push(CheckResult {
                name: "exchange-axioms",
                passed: fail.is_none(),
                detail: fail.unwrap_or_else(|| format!("{} sampled pairs", opts.sample_size)),
                sampled: true,
            });
        }
    }

    // 0/1 characterizations of both polytopes
    if (1u64 << n) <= (1 << SUBSET_SWEEP_LIMIT) {
        let independent = p.independent_set_facets()?;
        let mismatch = validate_01_points_against(&oracle, &independent, PolytopeMode::IndependentSet);
        checks.push(CheckResult {
            name: "polytope-01-independent-set",
            passed: mismatch.is_none(),
            detail: mismatch.map(|m| format!("{:?}", m)).unwrap_or_default(),
            sampled: false,
        });
        let basis_system = p.basis_polytope_system()?;
        let mismatch = validate_01_points_against(&oracle, &basis_system, PolytopeMode::Basis);
        checks.push(CheckResult {
            name: "polytope-01-basis",
            passed: mismatch.is_none(),
            detail: mismatch.map(|m| format!("{:?}", m)).unwrap_or_default(),
            sampled: false,
        });
    } else {
        let basis_system = p.basis_polytope_system()?;
        let mut rng = SplitMix(opts.seed ^ 0x01);
        let mut fail = None;
        for _ in 0..opts.sample_size {
            let point = Subset::from_mask(rng.next() & gs.full_subset().mask());
            let by_system = basis_system.accepts_01(point);
            let by_oracle = oracle.contains_basis(point);
            if by_system != by_oracle {
                fail = Some(format!("point {}", point));
                break;
            }
        }
        checks.push(CheckResult {
            name: "polytope-01-basis",
            passed: fail.is_none(),
            detail: fail.unwrap_or_else(|| format!("{} sampled points", opts.sample_size)),
            sampled: true,
        });
    }

    Ok(VerifyReport { checks })
}
