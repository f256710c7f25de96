//! Brute-force oracles. These share only the scalar product with the main
//! build: roots come from the Weyl orbit of the simple roots, dimensions from
//! a full box scan, and pairings from the Gram matrix directly.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bott::{bott_cohomology, CohomologyResult};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::nodeset::NodeSet;
use crate::rootsys::{BilinearForm, DynkinDiagram, Root, RootSystem, SimpleType, Weight};
use crate::vanishing::{ell_ab, ABConfig};
use crate::Rational;

fn form_pairing(form: &BilinearForm, v: &[i64], i: usize) -> Rational {
    v.iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(j, &c)| form.get(j, i) * Rational::from_integer(c))
        .sum()
}

/// Positive roots as the Weyl orbit of the simple roots, intersected with the
/// positive cone. Reflections are computed from the Gram matrix alone.
pub fn roots_by_reflections(diagram: &DynkinDiagram) -> BTreeSet<Root> {
    let form = diagram.form();
    let rank = diagram.rank();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut stack: Vec<Vec<i64>> = Vec::new();
    for i in 0..rank {
        let mut e = vec![0; rank];
        e[i] = 1;
        if seen.insert(e.clone()) {
            stack.push(e);
        }
    }
    while let Some(v) = stack.pop() {
        for i in 0..rank {
            let c = Rational::from_integer(2) * form_pairing(form, &v, i) / form.sq_len(i);
            assert!(c.is_integer(), "reflection left the root lattice");
            let mut w = v.clone();
            w[i] -= c.to_integer();
            if seen.insert(w.clone()) {
                stack.push(w);
            }
        }
    }
    seen.into_iter()
        .filter(|v| v.iter().all(|&c| c >= 0))
        .map(Root::new)
        .collect()
}

/// Pairings of shifted weights with the orbit roots, as integers over a
/// common positive denominator.
struct PairingTable {
    roots: Vec<Root>,
    rows: Vec<Vec<i64>>,
}

impl PairingTable {
    fn new(diagram: &DynkinDiagram) -> Self {
        let form = diagram.form();
        let rank = diagram.rank();
        let scale = (0..rank).fold(1i64, |acc, j| acc.lcm(form.sq_len(j).denom()));
        let roots: Vec<Root> = roots_by_reflections(diagram).into_iter().collect();
        // (fundamental weight w_j, root) = c_j (a_j, a_j) / 2
        let rows = roots
            .iter()
            .map(|r| {
                (0..rank)
                    .map(|j| {
                        let v = form.sq_len(j) * Rational::new(r.coeff(j) * scale, 2);
                        // scale by 2 as well to stay integral
                        (v * Rational::from_integer(2)).to_integer()
                    })
                    .collect()
            })
            .collect();
        PairingTable { roots, rows }
    }

    fn pair(&self, coords: &[i64], r: usize) -> i64 {
        coords.iter().zip(&self.rows[r]).map(|(a, b)| a * b).sum()
    }

    fn find(&self, root: &Root) -> Option<usize> {
        self.roots.iter().position(|r| r == root)
    }
}

/// Weyl dimension evaluated over the orbit roots.
fn orbit_weyl_dimension(table: &PairingTable, coords: &[i64]) -> BigUint {
    let shifted: Vec<i64> = coords.iter().map(|c| c + 1).collect();
    let ones = vec![1i64; coords.len()];
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for r in 0..table.roots.len() {
        let n = table.pair(&shifted, r);
        let d = table.pair(&ones, r);
        assert!(n > 0 && d > 0, "dominant weights pair positively");
        num *= n as u64;
        den *= d as u64;
    }
    let (q, rem) = num.div_rem(&den);
    assert!(rem.is_zero(), "Weyl dimension must be integral");
    q
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinDim {
    pub dimension: BigUint,
    pub weight: Weight,
}

/// Minimum Weyl dimension over nonzero dominant weights with every
/// coordinate at most `cap`. Ties go to the first weight in lexicographic
/// order (first coordinate slowest).
pub fn min_dim_scan(kind: SimpleType, cap: u32, exec: Execution) -> MinDim {
    assert!(cap >= 1, "cap must be at least 1");
    let diagram = DynkinDiagram::simple(kind);
    let table = PairingTable::new(&diagram);
    let rank = kind.rank;
    let width = cap as u64 + 1;
    let count = width.pow(rank as u32);
    let decode = |mut k: u64| {
        let mut c = vec![0i64; rank];
        for i in (0..rank).rev() {
            c[i] = (k % width) as i64;
            k /= width;
        }
        c
    };
    let best = exec.fold_range(
        count - 1,
        || None::<(BigUint, u64)>,
        |acc, k| {
            let idx = k + 1; // skip the zero weight
            let d = orbit_weyl_dimension(&table, &decode(idx));
            match acc {
                Some((bd, bi)) if (&bd, bi) <= (&d, idx) => Some((bd, bi)),
                _ => Some((d, idx)),
            }
        },
        |a, b| match (a, b) {
            (Some(x), Some(y)) => Some(if (&x.0, x.1) <= (&y.0, y.1) { x } else { y }),
            (x, None) => x,
            (None, y) => y,
        },
    );
    let (dimension, idx) = best.expect("rank >= 1 gives a nonzero weight");
    MinDim {
        dimension,
        weight: Weight::from_ints(&decode(idx)),
    }
}

/// Every `(Sigma, A, B)` with `A` outside Sigma and `B` inside it, including
/// empty `A`.
pub fn all_configs(rank: usize) -> Vec<(NodeSet, ABConfig)> {
    let full = NodeSet::full(rank);
    let mut out = Vec::new();
    for sigma in full.subsets() {
        for a in full.difference(sigma).subsets() {
            for b in sigma.subsets() {
                out.push((sigma, ABConfig::new(a, b).expect("disjoint")));
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepSpec {
    pub sigma: NodeSet,
    pub cfg: ABConfig,
    /// Inclusive `(lo, hi)` per fundamental coordinate. Coordinates in `A`
    /// are further clipped to negative values and those in `B` to zero.
    pub bounds: Vec<(i64, i64)>,
    pub seed: u64,
    /// Largest box enumerated exhaustively; bigger boxes are sampled with
    /// this many draws.
    pub cap: u64,
}

impl SweepSpec {
    pub fn uniform(rank: usize, sigma: NodeSet, cfg: ABConfig, lo: i64, hi: i64) -> Self {
        SweepSpec {
            sigma,
            cfg,
            bounds: vec![(lo, hi); rank],
            seed: 0,
            cap: 1 << 24,
        }
    }

    /// The box actually swept, after clipping to the configuration.
    pub fn effective_bounds(&self) -> Vec<(i64, i64)> {
        self.bounds
            .iter()
            .enumerate()
            .map(|(i, &(lo, hi))| {
                if self.cfg.a().contains(i) {
                    (lo, hi.min(-1))
                } else if self.cfg.b().contains(i) {
                    (lo.max(0), hi.min(0))
                } else {
                    (lo, hi)
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepMode {
    Exhaustive,
    Sampled { seed: u64, samples: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ViolationKind {
    IndexBelowBound { index: usize },
    SignificantRootNotNegative { root: Root },
    SignificantRootUnknown { root: Root },
    IndexMismatch { oracle: usize, main: Option<usize> },
    BottDegreeBelowBound { degree: usize },
    BottDisagrees { detail: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub weight: Weight,
    pub kind: ViolationKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub bound: usize,
    pub mode: SweepMode,
    pub box_size: u128,
    pub weights_checked: u64,
    pub regular: u64,
    pub singular: u64,
    /// Regular weights that are also Sigma-dominant, where Bott's theorem was
    /// compared against the bound.
    pub bott_checked: u64,
    pub min_index: Option<usize>,
    /// Sorted by weight coordinates.
    pub violations: Vec<Violation>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn into_result(self) -> Result<SweepReport> {
        match self.violations.first() {
            None => Ok(self),
            Some(v) => Err(Error::OracleViolation {
                weight: v.weight.clone(),
                detail: format!("{:?}", v.kind),
            }),
        }
    }
}

#[derive(Default)]
struct Tally {
    checked: u64,
    regular: u64,
    singular: u64,
    bott_checked: u64,
    min_index: Option<usize>,
    violations: Vec<Violation>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.regular += other.regular;
        self.singular += other.singular;
        self.bott_checked += other.bott_checked;
        self.min_index = match (self.min_index, other.min_index) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self.violations.extend(other.violations);
        self
    }
}

/// Checks, for every weight `L` of the box satisfying condition (AB), that a
/// regular `L + gamma` pairs negatively with every significant (A,B)-root
/// and has index at least `l(A,B)`; for Sigma-dominant `L` it also checks
/// that Bott's theorem places the cohomology at or above that degree.
pub fn index_bound_sweep(rs: &RootSystem, spec: &SweepSpec, exec: Execution) -> Result<SweepReport> {
    let rank = rs.rank();
    if spec.bounds.len() != rank {
        return Err(Error::DimensionMismatch {
            expected: rank,
            found: spec.bounds.len(),
        });
    }
    ABConfig::for_parabolic(spec.sigma, spec.cfg.a(), spec.cfg.b())?;
    rs.diagram().check_nodes(spec.sigma.union(spec.cfg.nodes()))?;

    let certificate = ell_ab(rs, &spec.cfg);
    let bound = certificate.count;
    let table = PairingTable::new(rs.diagram());
    let significant: Vec<(Root, Option<usize>)> = certificate
        .witnesses
        .iter()
        .map(|w| (w.root.clone(), table.find(&w.root)))
        .collect();

    let bounds = spec.effective_bounds();
    let widths: Vec<u64> = bounds
        .iter()
        .map(|&(lo, hi)| if hi >= lo { (hi - lo + 1) as u64 } else { 0 })
        .collect();
    let box_size: u128 = widths.iter().map(|&w| w as u128).product();
    let decode = |mut k: u64| -> Vec<i64> {
        let mut c = vec![0i64; rank];
        for i in (0..rank).rev() {
            c[i] = bounds[i].0 + (k % widths[i]) as i64;
            k /= widths[i];
        }
        c
    };

    let check = |tally: &mut Tally, coords: Vec<i64>| {
        tally.checked += 1;
        let weight = Weight::from_ints(&coords);
        let shifted: Vec<i64> = coords.iter().map(|c| c + 1).collect();
        let pairs: Vec<i64> = (0..table.roots.len()).map(|r| table.pair(&shifted, r)).collect();
        let sigma_dominant = spec.sigma.iter().all(|i| coords[i] >= 0);
        let mut push = |kind| {
            tally.violations.push(Violation {
                weight: weight.clone(),
                kind,
            })
        };
        if pairs.contains(&0) {
            tally.singular += 1;
            if sigma_dominant {
                match bott_cohomology(rs, spec.sigma, &weight) {
                    Ok(CohomologyResult::AllZero) => {}
                    other => push(ViolationKind::BottDisagrees {
                        detail: format!("singular shift but Bott gave {other:?}"),
                    }),
                }
            }
            return;
        }
        tally.regular += 1;
        let index = pairs.iter().filter(|&&p| p < 0).count();
        tally.min_index = Some(tally.min_index.map_or(index, |m| m.min(index)));
        let main = rs.index(&Weight::from_ints(&shifted)).ok();
        if main != Some(index) {
            push(ViolationKind::IndexMismatch { oracle: index, main });
        }
        if index < bound {
            push(ViolationKind::IndexBelowBound { index });
        }
        for (root, pos) in &significant {
            match pos {
                None => push(ViolationKind::SignificantRootUnknown { root: root.clone() }),
                Some(r) if pairs[*r] >= 0 => {
                    push(ViolationKind::SignificantRootNotNegative { root: root.clone() })
                }
                Some(_) => {}
            }
        }
        if sigma_dominant {
            tally.bott_checked += 1;
            match bott_cohomology(rs, spec.sigma, &weight) {
                Ok(CohomologyResult::Concentrated { degree, .. }) => {
                    if degree < bound {
                        push(ViolationKind::BottDegreeBelowBound { degree });
                    }
                    if degree != index {
                        push(ViolationKind::BottDisagrees {
                            detail: format!("degree {degree} but oracle index {index}"),
                        });
                    }
                }
                other => push(ViolationKind::BottDisagrees {
                    detail: format!("regular shift but Bott gave {other:?}"),
                }),
            }
        }
    };

    let (mode, tally) = if box_size <= spec.cap as u128 {
        let t = exec.fold_range(
            box_size as u64,
            Tally::default,
            |mut t, k| {
                check(&mut t, decode(k));
                t
            },
            Tally::merge,
        );
        (SweepMode::Exhaustive, t)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
        let samples: Vec<Vec<i64>> = (0..spec.cap)
            .map(|_| bounds.iter().map(|&(lo, hi)| rng.random_range(lo..=hi)).collect())
            .collect();
        let t = exec.fold_range(
            samples.len() as u64,
            Tally::default,
            |mut t, k| {
                check(&mut t, samples[k as usize].clone());
                t
            },
            Tally::merge,
        );
        (
            SweepMode::Sampled {
                seed: spec.seed,
                samples: spec.cap,
            },
            t,
        )
    };
    let mut violations = tally.violations;
    violations.sort_by(|x, y| x.weight.cmp(&y.weight).then_with(|| format!("{:?}", x.kind).cmp(&format!("{:?}", y.kind))));
    Ok(SweepReport {
        bound,
        mode,
        box_size,
        weights_checked: tally.checked,
        regular: tally.regular,
        singular: tally.singular,
        bott_checked: tally.bott_checked,
        min_index: tally.min_index,
        violations,
    })
}

/// Aggregate of [`index_bound_sweep`] over every configuration of a diagram.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConfigSweepSummary {
    pub configs: u64,
    pub weights_checked: u64,
    pub regular: u64,
    pub bott_checked: u64,
    pub violations: Vec<(NodeSet, ABConfig, Violation)>,
}

/// Runs the index-bound sweep for every `(Sigma, A, B)` with nonempty `A`,
/// with `A`-coordinates in `a_range`, `B`-coordinates zero and all other
/// coordinates in `free_range`. Configurations are processed in parallel
/// under `exec`; each sweep is exhaustive.
pub fn exhaustive_config_sweep(
    rs: &RootSystem,
    a_range: (i64, i64),
    free_range: (i64, i64),
    exec: Execution,
) -> Result<ConfigSweepSummary> {
    let rank = rs.rank();
    let configs: Vec<(NodeSet, ABConfig)> = all_configs(rank)
        .into_iter()
        .filter(|(_, c)| !c.a().is_empty())
        .collect();
    let reports = exec.map_slice(&configs, |&(sigma, cfg)| {
        let bounds = (0..rank)
            .map(|i| if cfg.a().contains(i) { a_range } else { free_range })
            .collect();
        let spec = SweepSpec {
            sigma,
            cfg,
            bounds,
            seed: 0,
            cap: u64::MAX,
        };
        index_bound_sweep(rs, &spec, Execution::Sequential).map(|r| (sigma, cfg, r))
    });
    let mut summary = ConfigSweepSummary::default();
    for r in reports {
        let (sigma, cfg, report) = r?;
        summary.configs += 1;
        summary.weights_checked += report.weights_checked;
        summary.regular += report.regular;
        summary.bott_checked += report.bott_checked;
        summary
            .violations
            .extend(report.violations.into_iter().map(|v| (sigma, cfg, v)));
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse::<DynkinDiagram>().unwrap())
    }

    fn set(v: &[usize]) -> NodeSet {
        v.iter().copied().collect()
    }

    #[test]
    fn orbit_root_counts() {
        for (s, n) in [("A2", 3), ("G2", 6), ("F4", 24), ("D4", 12), ("B3", 9), ("E6", 36)] {
            let d: DynkinDiagram = s.parse().unwrap();
            assert_eq!(roots_by_reflections(&d).len(), n, "{s}");
        }
    }

    #[test]
    fn min_dim_examples() {
        let t = |s: &str| {
            let d: DynkinDiagram = s.parse().unwrap();
            d.components()[0].kind
        };
        let m = min_dim_scan(t("A1"), 2, Execution::Sequential);
        assert_eq!(m.dimension, BigUint::from(2u32));
        assert_eq!(m.weight, Weight::from_ints(&[1]));
        let m = min_dim_scan(t("B2"), 2, Execution::Parallel);
        assert_eq!(m.dimension, BigUint::from(4u32));
        assert_eq!(m.weight, Weight::from_ints(&[0, 1]));
        let m = min_dim_scan(t("G2"), 2, Execution::Parallel);
        assert_eq!(m.dimension, BigUint::from(7u32));
    }

    #[test]
    fn sweep_examples() {
        let a2 = rs("A2");
        let cfg = ABConfig::for_parabolic(set(&[1]), set(&[0]), set(&[1])).unwrap();
        let spec = SweepSpec::uniform(2, set(&[1]), cfg, -4, 4);
        let r = index_bound_sweep(&a2, &spec, Execution::Parallel).unwrap();
        assert_eq!(r.bound, 2);
        assert_eq!(r.mode, SweepMode::Exhaustive);
        assert!(r.passed(), "{:?}", r.violations);
        // A-coordinate in -4..-1, B-coordinate 0
        assert_eq!(r.weights_checked, 4);
        assert_eq!(r.regular, 2);

        let b2 = rs("B2");
        let cfg = ABConfig::for_parabolic(set(&[0]), set(&[1]), set(&[0])).unwrap();
        let spec = SweepSpec::uniform(2, set(&[0]), cfg, -4, 4);
        let r = index_bound_sweep(&b2, &spec, Execution::Sequential).unwrap();
        assert_eq!(r.bound, 2);
        assert!(r.passed());

        let cfg = ABConfig::new(NodeSet::EMPTY, NodeSet::EMPTY).unwrap();
        let spec = SweepSpec::uniform(2, NodeSet::EMPTY, cfg, -2, 2);
        let r = index_bound_sweep(&b2, &spec, Execution::Sequential).unwrap();
        assert_eq!(r.bound, 0);
        assert!(r.passed());
        assert_eq!(r.weights_checked, 25);
    }

    #[test]
    fn sampled_sweeps_are_reproducible() {
        let a3 = rs("A3");
        let cfg = ABConfig::for_parabolic(set(&[0, 2]), set(&[1]), set(&[0, 2])).unwrap();
        let mut spec = SweepSpec::uniform(3, set(&[0, 2]), cfg, -50, 50);
        spec.cap = 20;
        spec.bounds[1] = (-50, 50);
        spec.seed = 7;
        let r1 = index_bound_sweep(&a3, &spec, Execution::Parallel).unwrap();
        let r2 = index_bound_sweep(&a3, &spec, Execution::Sequential).unwrap();
        assert_eq!(r1, r2);
        assert!(matches!(r1.mode, SweepMode::Sampled { seed: 7, samples: 20 }));
        assert!(r1.passed());
    }
}
