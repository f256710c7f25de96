//! The parabolic subgroup P determined by a set Sigma of simple roots: its
//! Levi components, their adjacency to the simple roots outside Sigma, and
//! the invariants d(alpha), l(alpha), d(P), l(P).

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_traits::ToPrimitive;

use crate::bott::weyl_dimension_unchecked;
use crate::error::{Error, Result};
use crate::nodeset::NodeSet;
use crate::rootsys::{DynkinDiagram, Family, Root, RootSystem, SimpleType};
use crate::vanishing::{ell_ab, ABConfig};

/// A connected component of Sigma together with its isomorphism type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeviComponent {
    pub nodes: NodeSet,
    pub kind: SimpleType,
    /// `labeling[k]` is the diagram index playing the role of the Bourbaki
    /// simple root `k + 1` of `kind`. For B2 the long root comes first.
    pub labeling: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct ParabolicData<'a> {
    rs: &'a RootSystem,
    sigma: NodeSet,
    components: Vec<LeviComponent>,
    /// For each simple root outside Sigma, the indices of the adjacent
    /// components, in component order.
    adjacency: Vec<(usize, Vec<usize>)>,
    levi_roots: Vec<Root>,
    nilradical_roots: Vec<Root>,
}

impl<'a> ParabolicData<'a> {
    pub fn analyze(rs: &'a RootSystem, sigma: NodeSet) -> Result<Self> {
        let d = rs.diagram();
        d.check_nodes(sigma)?;
        let components = d
            .connected_components(sigma)
            .into_iter()
            .map(|nodes| {
                let (kind, labeling) = classify(d, nodes)?;
                Ok(LeviComponent { nodes, kind, labeling })
            })
            .collect::<Result<Vec<_>>>()?;
        let adjacency = d
            .all_nodes()
            .difference(sigma)
            .iter()
            .map(|a| {
                let adj = components
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !d.neighbors(a).is_disjoint(c.nodes))
                    .map(|(k, _)| k)
                    .collect();
                (a, adj)
            })
            .collect();
        let mut levi_roots = Vec::new();
        let mut nilradical_roots = Vec::new();
        for (i, r) in rs.positive_roots().iter().enumerate() {
            if rs.support_of(i).is_subset(sigma) {
                levi_roots.push(r.clone());
                levi_roots.push(r.negate());
            } else {
                nilradical_roots.push(r.negate());
            }
        }
        Ok(ParabolicData {
            rs,
            sigma,
            components,
            adjacency,
            levi_roots,
            nilradical_roots,
        })
    }

    pub fn root_system(&self) -> &'a RootSystem {
        self.rs
    }

    pub fn sigma(&self) -> NodeSet {
        self.sigma
    }

    pub fn components(&self) -> &[LeviComponent] {
        &self.components
    }

    /// `[Sigma]`: all roots (both signs) in the span of Sigma.
    pub fn levi_roots(&self) -> &[Root] {
        &self.levi_roots
    }

    /// `Delta_- \ [Sigma]`.
    pub fn nilradical_roots(&self) -> &[Root] {
        &self.nilradical_roots
    }

    /// Complex dimension of G/P.
    pub fn flag_dimension(&self) -> usize {
        self.nilradical_roots.len()
    }

    pub fn outside(&self) -> NodeSet {
        self.rs.diagram().all_nodes().difference(self.sigma)
    }

    fn check_alpha(&self, alpha: usize) -> Result<()> {
        self.rs.diagram().check_nodes(NodeSet::singleton(alpha))?;
        if self.sigma.contains(alpha) {
            return Err(Error::AlphaInSigma(alpha));
        }
        Ok(())
    }

    /// Components of Sigma adjacent to `alpha`.
    pub fn adjacent_components(&self, alpha: usize) -> Result<Vec<&LeviComponent>> {
        self.check_alpha(alpha)?;
        let (_, adj) = self
            .adjacency
            .iter()
            .find(|(a, _)| *a == alpha)
            .expect("alpha outside sigma");
        Ok(adj.iter().map(|&k| &self.components[k]).collect())
    }

    /// Sum of the minimal nontrivial representation dimensions of the
    /// adjacent components, or 1 when there are none.
    pub fn d_alpha(&self, alpha: usize) -> Result<u64> {
        let adj = self.adjacent_components(alpha)?;
        if adj.is_empty() {
            return Ok(1);
        }
        Ok(adj.iter().map(|c| min_nontrivial_dim(c.kind)).sum())
    }

    /// Minimum of `l({alpha}, C)` over the adjacent components `C`, or 1 when
    /// there are none.
    pub fn ell_alpha(&self, alpha: usize) -> Result<usize> {
        let adj = self.adjacent_components(alpha)?;
        if adj.is_empty() {
            return Ok(1);
        }
        adj.iter()
            .map(|c| {
                let cfg = ABConfig::for_parabolic(self.sigma, NodeSet::singleton(alpha), c.nodes)?;
                Ok(ell_ab(self.rs, &cfg).count)
            })
            .collect::<Result<Vec<_>>>()
            .map(|v| v.into_iter().min().unwrap())
    }

    pub fn d_p(&self) -> Result<u64> {
        let outside = self.outside();
        if outside.is_empty() {
            return Err(Error::SigmaIsFull);
        }
        outside
            .iter()
            .map(|a| self.d_alpha(a))
            .collect::<Result<Vec<_>>>()
            .map(|v| v.into_iter().min().unwrap())
    }

    pub fn ell_p(&self) -> Result<usize> {
        let outside = self.outside();
        if outside.is_empty() {
            return Err(Error::SigmaIsFull);
        }
        outside
            .iter()
            .map(|a| self.ell_alpha(a))
            .collect::<Result<Vec<_>>>()
            .map(|v| v.into_iter().min().unwrap())
    }
}

/// A representation of a direct sum of simple ideals whose minimal
/// nontrivial dimensions are `dims` is guaranteed to be trivial on one of them
/// whenever its dimension is below their sum.
pub fn triviality_guarantee(dims: &[u64], repdim: u64) -> bool {
    repdim < dims.iter().sum::<u64>()
}

/// Minimal dimension of a nontrivial irreducible representation.
///
/// The Weyl dimension is strictly increasing in every fundamental
/// coordinate on dominant weights, so the minimum over nonzero dominant
/// weights is attained at a fundamental weight. Values are computed once per
/// type and cached.
pub fn min_nontrivial_dim(kind: SimpleType) -> u64 {
    static CACHE: OnceLock<Mutex<HashMap<SimpleType, u64>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(&v) = cache.lock().unwrap().get(&kind) {
        return v;
    }
    let rs = RootSystem::new(DynkinDiagram::simple(kind));
    let v = (0..kind.rank)
        .map(|i| {
            let mut w = vec![0; kind.rank];
            w[i] = 1;
            weyl_dimension_unchecked(&rs, &w)
        })
        .min()
        .expect("rank >= 1")
        .to_u64()
        .expect("minimal dimensions fit in u64");
    cache.lock().unwrap().insert(kind, v);
    v
}

/// Isomorphism type of a connected subdiagram together with a labeling that
/// matches the standard diagram of that type. The labeling is checked against
/// the standard Cartan matrix before returning.
pub fn classify(d: &DynkinDiagram, nodes: NodeSet) -> Result<(SimpleType, Vec<usize>)> {
    let n = nodes.len();
    if n == 0 || !d.is_connected(nodes) {
        return Err(Error::Internal(format!("{nodes:?} is not a connected subdiagram")));
    }
    let nbrs = |v: usize| d.neighbors(v).intersection(nodes);
    let deg = |v: usize| nbrs(v).len();
    let form = d.form();
    // walk a path from an endpoint, never revisiting
    let walk = |start: usize, avoid: NodeSet| -> Vec<usize> {
        let mut path = vec![start];
        let mut seen = avoid.union(NodeSet::singleton(start));
        let mut cur = start;
        while let Some(next) = nbrs(cur).difference(seen).first() {
            path.push(next);
            seen.insert(next);
            cur = next;
        }
        path
    };
    let multi: Vec<(usize, usize, u8)> = nodes
        .iter()
        .flat_map(|i| nbrs(i).iter().filter(move |&j| j > i).map(move |j| (i, j)))
        .map(|(i, j)| (i, j, d.edge_multiplicity(i, j)))
        .filter(|&(_, _, m)| m > 1)
        .collect();
    let ends: Vec<usize> = nodes.iter().filter(|&v| deg(v) <= 1).collect();
    let is_path = nodes.iter().all(|v| deg(v) <= 2);

    let (family, labeling) = if n == 1 {
        (Family::A, vec![nodes.first().unwrap()])
    } else if let Some(&(i, j, m)) = multi.first() {
        if multi.len() > 1 || !is_path {
            return Err(Error::Internal(format!("{nodes:?} is not a finite-type diagram")));
        }
        let (long, short) = if form.sq_len(i) > form.sq_len(j) { (i, j) } else { (j, i) };
        if m == 3 {
            (Family::G, vec![short, long])
        } else if n == 2 {
            (Family::B, vec![long, short])
        } else if deg(i) == 2 && deg(j) == 2 {
            // F4: double edge in the middle, start from the long end
            let start = *ends
                .iter()
                .find(|&&e| form.sq_len(e) > form.sq_len(short))
                .ok_or_else(|| Error::Internal("F4 orientation".into()))?;
            (Family::F, walk(start, NodeSet::EMPTY))
        } else {
            let end_of_double = if deg(i) == 1 { i } else { j };
            let start = *ends.iter().find(|&&e| e != end_of_double).unwrap();
            let family = if end_of_double == short { Family::B } else { Family::C };
            (family, walk(start, NodeSet::EMPTY))
        }
    } else if is_path {
        (Family::A, walk(ends[0], NodeSet::EMPTY))
    } else {
        let branch = nodes
            .iter()
            .find(|&v| deg(v) == 3)
            .ok_or_else(|| Error::Internal(format!("{nodes:?} has no branch node")))?;
        let mut arms: Vec<Vec<usize>> = nbrs(branch)
            .iter()
            .map(|s| walk(s, NodeSet::singleton(branch)))
            .collect();
        arms.sort_by_key(|a| (a.len(), a[0]));
        let lens: Vec<usize> = arms.iter().map(Vec::len).collect();
        match lens[..] {
            [1, 1, _] => {
                // D_n: long arm (far end first), branch, then the two leaves
                let long = arms.remove(2);
                let mut lab: Vec<usize> = long.into_iter().rev().collect();
                lab.push(branch);
                lab.push(arms[0][0]);
                lab.push(arms[1][0]);
                (Family::D, lab)
            }
            [1, 2, 2..=4] => {
                // E_n: a1-a3-a4(branch)-a5-..., a2 hanging off a4
                let mut lab = vec![arms[1][1], arms[0][0], arms[1][0], branch];
                lab.extend(arms[2].iter().copied());
                (Family::E, lab)
            }
            _ => return Err(Error::Internal(format!("{nodes:?} is not a finite-type diagram"))),
        }
    };
    let kind = SimpleType::new(family, n)?;
    verify_labeling(d, kind, &labeling)?;
    Ok((kind, labeling))
}

fn verify_labeling(d: &DynkinDiagram, kind: SimpleType, labeling: &[usize]) -> Result<()> {
    let standard = DynkinDiagram::simple(kind);
    let ok = labeling.len() == kind.rank
        && (0..kind.rank).all(|a| {
            (0..kind.rank).all(|b| d.cartan()[labeling[a]][labeling[b]] == standard.cartan()[a][b])
        });
    if ok {
        Ok(())
    } else {
        Err(Error::Internal(format!("labeling {labeling:?} does not match {kind}")))
    }
}
