//! Combinatorial vanishing criteria.
//!
//! For `A` outside Sigma and `B` inside Sigma, an (A,B)-root is a positive
//! root supported on `A u B` with a positive coefficient on some element of
//! `A`. It is *significant* when some (A,B)-root `s <= d` satisfies
//!
//! ```text
//! sum_{a in A} c_a(s) (a,a) >= sum_{b in B} c_b(s) (b,b)
//! ```
//!
//! and the simple roots in `C(d - s)` all have one common squared length, no
//! larger than `(s,s)`. For a highest weight `L` with `(L,a) < 0` on `A` and
//! `(L,b) = 0` on `B`, every significant root pairs negatively with a regular
//! `L + gamma`, so the number `l(A,B)` of significant roots bounds the Bott
//! degree from below.

use num_traits::Zero;

use crate::bott::check_highest_weight;
use crate::error::{Error, Result};
use crate::nodeset::NodeSet;
use crate::parabolic::ParabolicData;
use crate::rootsys::{Root, RootSystem, Weight};
use crate::Rational;

/// A pair of disjoint simple-root sets `A` and `B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ABConfig {
    a: NodeSet,
    b: NodeSet,
}

impl ABConfig {
    pub fn new(a: NodeSet, b: NodeSet) -> Result<Self> {
        if !a.is_disjoint(b) {
            return Err(Error::InvalidConfig(format!("A {a:?} and B {b:?} intersect")));
        }
        Ok(ABConfig { a, b })
    }

    /// `A` must avoid Sigma and `B` must lie in it.
    pub fn for_parabolic(sigma: NodeSet, a: NodeSet, b: NodeSet) -> Result<Self> {
        if !a.is_disjoint(sigma) {
            return Err(Error::InvalidConfig(format!("A {a:?} meets Sigma {sigma:?}")));
        }
        if !b.is_subset(sigma) {
            return Err(Error::InvalidConfig(format!("B {b:?} is not contained in Sigma {sigma:?}")));
        }
        Self::new(a, b)
    }

    pub fn a(&self) -> NodeSet {
        self.a
    }

    pub fn b(&self) -> NodeSet {
        self.b
    }

    pub fn nodes(&self) -> NodeSet {
        self.a.union(self.b)
    }

    /// Drops the components of `A u B` that miss `A`.
    pub fn pruned(&self, rs: &RootSystem) -> ABConfig {
        let mut b = self.b;
        for comp in rs.diagram().connected_components(self.nodes()) {
            if comp.is_disjoint(self.a) {
                b = b.difference(comp);
            }
        }
        ABConfig { a: self.a, b }
    }

    fn check(&self, rs: &RootSystem) -> Result<()> {
        rs.diagram().check_nodes(self.nodes())
    }
}

/// Which sufficient condition produced a significance witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FastPath {
    /// Found by searching every (A,B)-root below the root.
    Search,
    /// The support has a single root length; `s` is a simple root of `A`.
    Case1,
    /// A simple root of `A` is strictly longer than the rest of the support.
    Case2,
    /// A simple root `a0` of `A` is strictly shorter than the rest of the
    /// support and its coefficient equals `-2(b,a0)/(a0,a0)`; `s` is the
    /// reflection of `b` in `a0`.
    Case3,
}

impl FastPath {
    pub fn tag(self) -> &'static str {
        match self {
            FastPath::Search => "none",
            FastPath::Case1 => "case1",
            FastPath::Case2 => "case2",
            FastPath::Case3 => "case3",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignificanceWitness {
    pub root: Root,
    pub sigma: Root,
    pub fastpath: FastPath,
}

fn is_ab_support(support: NodeSet, cfg: &ABConfig) -> bool {
    support.is_subset(cfg.nodes()) && !support.is_disjoint(cfg.a)
}

fn ab_root_indices<'a>(rs: &'a RootSystem, cfg: &'a ABConfig) -> impl Iterator<Item = usize> + 'a {
    (0..rs.num_positive_roots()).filter(move |&i| is_ab_support(rs.support_of(i), cfg))
}

/// All (A,B)-roots, in root-system order.
pub fn ab_roots(rs: &RootSystem, cfg: &ABConfig) -> Vec<Root> {
    ab_root_indices(rs, cfg)
        .map(|i| rs.positive_roots()[i].clone())
        .collect()
}

/// Checks the full definition of a witness `s` for `d`.
pub fn is_witness(rs: &RootSystem, cfg: &ABConfig, root: &Root, sigma: &Root) -> bool {
    if !rs.is_positive_root(sigma) || !is_ab_support(sigma.support(), cfg) || !sigma.le(root) {
        return false;
    }
    let weighted = |set: NodeSet| -> Rational {
        set.iter()
            .map(|i| rs.sq_len(i) * Rational::from_integer(sigma.coeff(i)))
            .sum()
    };
    if weighted(cfg.a) < weighted(cfg.b) {
        return false;
    }
    let gap = root.difference(sigma).support();
    let Some(first) = gap.first() else {
        return true;
    };
    let len = rs.sq_len(first);
    gap.iter().all(|i| rs.sq_len(i) == len) && len <= rs.root_sq_len(sigma)
}

/// Decides whether an (A,B)-root is significant. The three sufficient
/// conditions are tried first; each of their witnesses is re-checked against
/// the full definition. Otherwise every (A,B)-root below `root` is tried.
pub fn significance(rs: &RootSystem, cfg: &ABConfig, root: &Root) -> Result<Option<SignificanceWitness>> {
    cfg.check(rs)?;
    if root.rank() != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            found: root.rank(),
        });
    }
    if !rs.is_positive_root(root) || !is_ab_support(root.support(), cfg) {
        return Err(Error::NotABRoot(root.clone()));
    }
    let witness = |sigma: Root, fastpath| SignificanceWitness {
        root: root.clone(),
        sigma,
        fastpath,
    };
    if let Some((sigma, path)) = fast_path(rs, cfg, root) {
        if is_witness(rs, cfg, root, &sigma) {
            return Ok(Some(witness(sigma, path)));
        }
        return Err(Error::Internal(format!(
            "{} witness {sigma} for {root} fails the definition",
            path.tag()
        )));
    }
    for i in ab_root_indices(rs, cfg) {
        let candidate = &rs.positive_roots()[i];
        if is_witness(rs, cfg, root, candidate) {
            return Ok(Some(witness(candidate.clone(), FastPath::Search)));
        }
    }
    Ok(None)
}

fn fast_path(rs: &RootSystem, cfg: &ABConfig, root: &Root) -> Option<(Root, FastPath)> {
    let support = root.support();
    let in_a = support.intersection(cfg.a);
    let rank = rs.rank();
    let first_len = rs.sq_len(support.first()?);
    if support.iter().all(|i| rs.sq_len(i) == first_len) {
        return Some((Root::simple(rank, in_a.first()?), FastPath::Case1));
    }
    for a0 in in_a.iter() {
        let rest = support.difference(NodeSet::singleton(a0));
        let l0 = rs.sq_len(a0);
        if rest.iter().all(|i| rs.sq_len(i) < l0) && root.coeff(a0) == 1 {
            return Some((Root::simple(rank, a0), FastPath::Case2));
        }
        if rest.iter().all(|i| rs.sq_len(i) > l0) {
            let form = rs.diagram().form();
            for beta in rest.iter() {
                // -2(b,a0)/(a0,a0)
                let c = -Rational::from_integer(2) * form.get(beta, a0) / l0;
                if c.is_integer() && !c.is_zero() && c.to_integer() == root.coeff(a0) {
                    let sigma = Root::simple(rank, beta).plus_simple(a0, c.to_integer());
                    return Some((sigma, FastPath::Case3));
                }
            }
        }
    }
    None
}

/// `l(A,B)` with its certificate: every significant root with a witness and
/// every (A,B)-root that is not significant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbCount {
    pub count: usize,
    pub witnesses: Vec<SignificanceWitness>,
    pub insignificant: Vec<Root>,
}

pub fn ell_ab(rs: &RootSystem, cfg: &ABConfig) -> AbCount {
    let mut witnesses = Vec::new();
    let mut insignificant = Vec::new();
    for root in ab_roots(rs, cfg) {
        match significance(rs, cfg, &root).expect("(A,B)-roots of a valid configuration") {
            Some(w) => witnesses.push(w),
            None => insignificant.push(root),
        }
    }
    AbCount {
        count: witnesses.len(),
        witnesses,
        insignificant,
    }
}

/// `l(A,B)` by root counting when every edge inside `A u B'` is simple:
/// positive roots supported on `A u B'` minus those supported on `B'`.
pub fn ell_simply_laced(rs: &RootSystem, cfg: &ABConfig) -> Result<usize> {
    cfg.check(rs)?;
    let pruned = cfg.pruned(rs);
    let nodes = pruned.nodes();
    for e in rs.diagram().edges() {
        if e.multiplicity > 1 && nodes.contains(e.i) && nodes.contains(e.j) {
            return Err(Error::NotSimplyLacedConfig(e.i, e.j));
        }
    }
    Ok(rs.roots_supported_in(nodes).count() - rs.roots_supported_in(pruned.b).count())
}

/// Checks condition (AB): `(L, a) < 0` on `A`, `(L, b) = 0` on `B`.
pub fn check_condition_ab(w: &Weight, cfg: &ABConfig) -> Result<()> {
    let num = w.numerators();
    if let Some(i) = cfg.a.iter().find(|&i| num[i] >= 0) {
        return Err(Error::ConditionABViolated {
            index: i,
            reason: "(L, alpha) must be negative on A",
        });
    }
    if let Some(i) = cfg.b.iter().find(|&i| num[i] != 0) {
        return Err(Error::ConditionABViolated {
            index: i,
            reason: "(L, beta) must vanish on B",
        });
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MainRange {
    /// `H^q = 0` for `0 <= q < q_max`.
    pub q_max: usize,
    pub certificate: AbCount,
}

/// Vanishing range for an irreducible bundle whose highest weight satisfies
/// condition (AB).
pub fn theorem_main_range(rs: &RootSystem, sigma: NodeSet, w: &Weight, cfg: &ABConfig) -> Result<MainRange> {
    check_highest_weight(rs, sigma, w)?;
    ABConfig::for_parabolic(sigma, cfg.a, cfg.b)?;
    check_condition_ab(w, cfg)?;
    let certificate = ell_ab(rs, cfg);
    Ok(MainRange {
        q_max: certificate.count,
        certificate,
    })
}

/// Per-weight data of a semisimplified representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentBound {
    pub weight: Weight,
    /// `{a outside Sigma : (L, a) < 0}`.
    pub a: NodeSet,
    /// `l(A, B)`, absent when `A` is empty.
    pub ell: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SemisimpleBound {
    /// Every weight is dominant: `H^q = 0` for all `q > 0`.
    Unbounded,
    /// `H^q = 0` for `0 < q < q_max`.
    Bounded(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemisimpleVanishing {
    /// Union of the components of Sigma on which every weight vanishes.
    pub b: NodeSet,
    pub components: Vec<ComponentBound>,
    pub bound: SemisimpleBound,
}

/// Vanishing range for a completely reducible representation given by the
/// highest weights of its irreducible summands.
pub fn semisimple_vanishing(rs: &RootSystem, sigma: NodeSet, weights: &[Weight]) -> Result<SemisimpleVanishing> {
    for w in weights {
        check_highest_weight(rs, sigma, w)?;
    }
    let mut b = NodeSet::EMPTY;
    for comp in rs.diagram().connected_components(sigma) {
        if weights.iter().all(|w| comp.iter().all(|i| w.numerators()[i] == 0)) {
            b = b.union(comp);
        }
    }
    let outside = rs.diagram().all_nodes().difference(sigma);
    let mut components = Vec::with_capacity(weights.len());
    let mut best: Option<usize> = None;
    for w in weights {
        let a: NodeSet = outside.iter().filter(|&i| w.numerators()[i] < 0).collect();
        let ell = (!a.is_empty()).then(|| {
            let cfg = ABConfig::new(a, b).expect("A and B are disjoint");
            ell_ab(rs, &cfg).count
        });
        if let Some(l) = ell {
            best = Some(best.map_or(l, |m| m.min(l)));
        }
        components.push(ComponentBound {
            weight: w.clone(),
            a,
            ell,
        });
    }
    Ok(SemisimpleVanishing {
        b,
        components,
        bound: best.map_or(SemisimpleBound::Unbounded, SemisimpleBound::Bounded),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum H1Range {
    /// `H^q = 0` for `lower < q < upper`.
    Range { lower: usize, upper: usize },
    NoGuarantee,
}

/// Vanishing range for bundles obtained by natural operations from a
/// representation of dimension `generating_dim`.
pub fn theorem_h1_range(pd: &ParabolicData<'_>, generating_dim: u64) -> Result<H1Range> {
    let d = pd.d_p()?;
    if generating_dim < d {
        Ok(H1Range::Range {
            lower: 0,
            upper: pd.ell_p()?,
        })
    } else {
        Ok(H1Range::NoGuarantee)
    }
}

/// Rigidity of bundles obtained by natural operations from a representation
/// of dimension `generating_dim`: requires `generating_dim < d(P)` and
/// `d(P) > 1`, which forces `l(P) >= 2` and hence `H^1(End E) = 0`.
pub fn rigidity_check(pd: &ParabolicData<'_>, generating_dim: u64) -> Result<bool> {
    let d = pd.d_p()?;
    Ok(generating_dim < d && d > 1)
}
