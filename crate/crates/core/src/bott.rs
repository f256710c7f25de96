//! Bott's theorem for irreducible representations of a parabolic subgroup,
//! given by their highest weight.

use std::ops::RangeInclusive;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::nodeset::NodeSet;
use crate::rootsys::{RootSystem, Weight};

/// Cohomology of the bundle attached to an irreducible representation of P.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CohomologyResult {
    /// `L + gamma` is singular: every cohomology group vanishes.
    AllZero,
    /// The only nonzero group sits in `degree` and is the irreducible
    /// G-module with the given dominant highest weight.
    Concentrated {
        degree: usize,
        highest_weight: Weight,
        dimension: BigUint,
    },
}

impl CohomologyResult {
    pub fn degree(&self) -> Option<usize> {
        match self {
            CohomologyResult::AllZero => None,
            CohomologyResult::Concentrated { degree, .. } => Some(*degree),
        }
    }

    /// `H^q` is zero.
    pub fn vanishes_in(&self, q: usize) -> bool {
        self.degree() != Some(q)
    }
}

/// Checks that `w` is an integral weight that is dominant on `sigma`.
pub fn check_highest_weight(rs: &RootSystem, sigma: NodeSet, w: &Weight) -> Result<()> {
    if w.rank() != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            found: w.rank(),
        });
    }
    rs.diagram().check_nodes(sigma)?;
    let coords = w.as_ints().ok_or_else(|| Error::NonIntegralWeight(w.clone()))?;
    if let Some(i) = sigma.iter().find(|&i| coords[i] < 0) {
        return Err(Error::NotSigmaDominant {
            weight: w.clone(),
            index: i,
        });
    }
    Ok(())
}

/// Number of positive roots outside `[sigma]`, the complex dimension of G/P.
pub fn flag_dimension(rs: &RootSystem, sigma: NodeSet) -> usize {
    rs.num_positive_roots() - rs.roots_supported_in(sigma).count()
}

pub fn bott_cohomology(rs: &RootSystem, sigma: NodeSet, highest_weight: &Weight) -> Result<CohomologyResult> {
    check_highest_weight(rs, sigma, highest_weight)?;
    let shifted = highest_weight + &rs.gamma();
    if rs.is_singular(&shifted)?.is_some() {
        return Ok(CohomologyResult::AllZero);
    }
    let (dominant, steps) = rs.dominantize(&shifted)?;
    let degree = rs.index(&shifted)?;
    if steps != degree {
        return Err(Error::Internal(format!(
            "reflection count {steps} differs from index {degree} for {highest_weight}"
        )));
    }
    let cap = flag_dimension(rs, sigma);
    if degree > cap {
        return Err(Error::Internal(format!(
            "degree {degree} exceeds dim G/P = {cap} for {highest_weight}"
        )));
    }
    let i_weight = &dominant - &rs.gamma();
    let dimension = weyl_dimension(rs, &i_weight)?;
    Ok(CohomologyResult::Concentrated {
        degree,
        highest_weight: i_weight,
        dimension,
    })
}

/// Dimension of the irreducible G-module with dominant highest weight `w`:
/// the product over positive roots of `(w + gamma, a) / (gamma, a)`.
pub fn weyl_dimension(rs: &RootSystem, w: &Weight) -> Result<BigUint> {
    if w.rank() != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            found: w.rank(),
        });
    }
    let coords = w.as_ints().ok_or_else(|| Error::NonIntegralWeight(w.clone()))?;
    if !w.is_dominant() {
        return Err(Error::NotDominant(w.clone()));
    }
    Ok(weyl_dimension_unchecked(rs, coords))
}

pub(crate) fn weyl_dimension_unchecked(rs: &RootSystem, coords: &[i64]) -> BigUint {
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for r in 0..rs.num_positive_roots() {
        let (n, d) = rs.weyl_factor(coords, r);
        num *= n as u64;
        den *= d as u64;
    }
    let (q, rem) = (&num / &den, &num % &den);
    debug_assert!(rem == BigUint::ZERO, "Weyl dimension must be an integer");
    q
}

/// One row of a line-bundle table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableEntry {
    pub weight: Weight,
    pub result: CohomologyResult,
}

/// Bott's theorem for every character of P in a box: weights vanishing on
/// `sigma` with each remaining coordinate in `range`. Rows are ordered
/// lexicographically, first coordinate slowest.
pub fn line_bundle_table(
    rs: &RootSystem,
    sigma: NodeSet,
    range: RangeInclusive<i64>,
    exec: Execution,
) -> Result<Vec<TableEntry>> {
    rs.diagram().check_nodes(sigma)?;
    let free: Vec<usize> = rs.diagram().all_nodes().difference(sigma).iter().collect();
    let (lo, hi) = (*range.start(), *range.end());
    let width = if hi >= lo { (hi - lo + 1) as u64 } else { 0 };
    let count = width.checked_pow(free.len() as u32).ok_or_else(|| {
        Error::Internal("line-bundle table too large".into())
    })?;
    let rows = exec.map_range(count, |mut k| {
        let mut coords = vec![0i64; rs.rank()];
        for &i in free.iter().rev() {
            coords[i] = lo + (k % width) as i64;
            k /= width;
        }
        let weight = Weight::from_ints(&coords);
        bott_cohomology(rs, sigma, &weight).map(|result| TableEntry { weight, result })
    });
    rows.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::DynkinDiagram;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse::<DynkinDiagram>().unwrap())
    }

    fn conc(degree: usize, w: &[i64], dim: u64) -> CohomologyResult {
        CohomologyResult::Concentrated {
            degree,
            highest_weight: Weight::from_ints(w),
            dimension: BigUint::from(dim),
        }
    }

    #[test]
    fn projective_line() {
        let a1 = rs("A1");
        let e = NodeSet::EMPTY;
        assert_eq!(bott_cohomology(&a1, e, &Weight::from_ints(&[-1])).unwrap(), CohomologyResult::AllZero);
        assert_eq!(bott_cohomology(&a1, e, &Weight::from_ints(&[0])).unwrap(), conc(0, &[0], 1));
        assert_eq!(bott_cohomology(&a1, e, &Weight::from_ints(&[-2])).unwrap(), conc(1, &[0], 1));
    }

    #[test]
    fn weyl_dimension_examples() {
        let a1 = rs("A1");
        for m in 0..10 {
            assert_eq!(weyl_dimension(&a1, &Weight::from_ints(&[m])).unwrap(), BigUint::from(m as u64 + 1));
        }
        let a2 = rs("A2");
        assert_eq!(weyl_dimension(&a2, &Weight::from_ints(&[1, 0])).unwrap(), BigUint::from(3u32));
        // adjoint of A2 is 8-dimensional
        assert_eq!(weyl_dimension(&a2, &Weight::from_ints(&[1, 1])).unwrap(), BigUint::from(8u32));
        let g2 = rs("G2");
        assert_eq!(weyl_dimension(&g2, &Weight::from_ints(&[1, 0])).unwrap(), BigUint::from(7u32));
        assert_eq!(weyl_dimension(&g2, &Weight::from_ints(&[0, 1])).unwrap(), BigUint::from(14u32));
        assert!(matches!(
            weyl_dimension(&a2, &Weight::from_ints(&[-1, 0])),
            Err(Error::NotDominant(_))
        ));
    }

    #[test]
    fn precondition_errors() {
        let a2 = rs("A2");
        let sigma = NodeSet::singleton(0);
        match bott_cohomology(&a2, sigma, &Weight::from_ints(&[-1, 0])) {
            Err(Error::NotSigmaDominant { index, .. }) => assert_eq!(index, 0),
            other => panic!("{other:?}"),
        }
        let half = Weight::from_fcoords(&[crate::Rational::new(1, 2), crate::Rational::from_integer(0)]);
        assert!(matches!(bott_cohomology(&a2, sigma, &half), Err(Error::NonIntegralWeight(_))));
        assert!(matches!(
            bott_cohomology(&a2, sigma, &Weight::from_ints(&[0])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn a2_regression_weight_is_singular() {
        // (1,-3) + gamma = (2,-2) is orthogonal to a1+a2.
        let a2 = rs("A2");
        let r = bott_cohomology(&a2, NodeSet::singleton(0), &Weight::from_ints(&[1, -3])).unwrap();
        assert_eq!(r, CohomologyResult::AllZero);
        // a regular neighbour: (1,-4) + gamma = (2,-3): negative on a2 and a1+a2.
        let r = bott_cohomology(&a2, NodeSet::singleton(0), &Weight::from_ints(&[1, -4])).unwrap();
        assert_eq!(r, conc(2, &[0, 1], 3));
    }

    #[test]
    fn table_matches_p1() {
        let a1 = rs("A1");
        let t = line_bundle_table(&a1, NodeSet::EMPTY, -3..=1, Execution::Sequential).unwrap();
        let degs: Vec<_> = t.iter().map(|e| e.result.degree()).collect();
        assert_eq!(degs, vec![Some(1), Some(1), None, Some(0), Some(0)]);
        let dims: Vec<_> = t
            .iter()
            .map(|e| match &e.result {
                CohomologyResult::Concentrated { dimension, .. } => Some(dimension.clone()),
                _ => None,
            })
            .collect();
        let b = |x: u32| Some(BigUint::from(x));
        assert_eq!(dims, vec![b(2), b(1), None, b(1), b(2)]);
        let par = line_bundle_table(&a1, NodeSet::EMPTY, -3..=1, Execution::Parallel).unwrap();
        assert_eq!(t, par);
    }

    #[test]
    fn table_only_varies_coordinates_off_sigma() {
        let a3 = rs("A3");
        let sigma: NodeSet = [0, 2].into_iter().collect();
        let t = line_bundle_table(&a3, sigma, -2..=2, Execution::Parallel).unwrap();
        assert_eq!(t.len(), 5);
        for e in &t {
            let c = e.weight.as_ints().unwrap();
            assert_eq!((c[0], c[2]), (0, 0));
        }
    }
}
