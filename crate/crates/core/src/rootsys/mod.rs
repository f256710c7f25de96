//! Root systems of semisimple Lie algebras: Dynkin diagrams, positive roots,
//! the invariant scalar product, and the Weyl-group operations needed for
//! Bott's theorem.

mod diagram;
mod root;
mod weight;

use std::collections::HashMap;

use num_integer::Integer;
use num_traits::{One, Zero};

pub use diagram::{BilinearForm, Component, DynkinDiagram, Edge, Family, SimpleType};
pub use root::{Root, RootSign};
pub use weight::Weight;

use crate::error::{Error, Result};
use crate::nodeset::NodeSet;
use crate::Rational;

/// Either kind of vector accepted by [`RootSystem::inner`].
#[derive(Debug, Clone, Copy)]
pub enum Element<'a> {
    Weight(&'a Weight),
    Root(&'a Root),
}

impl<'a> From<&'a Weight> for Element<'a> {
    fn from(w: &'a Weight) -> Self {
        Element::Weight(w)
    }
}

impl<'a> From<&'a Root> for Element<'a> {
    fn from(r: &'a Root) -> Self {
        Element::Root(r)
    }
}

/// A diagram together with its positive roots and the exact data needed to
/// pair weights with roots. Immutable after construction.
#[derive(Debug, Clone)]
pub struct RootSystem {
    diagram: DynkinDiagram,
    roots: Vec<Root>,
    supports: Vec<NodeSet>,
    lookup: HashMap<Root, usize>,
    /// `pair_vecs[r][j] = scale * c_j(root r) * (alpha_j, alpha_j) / 2`, all integers, so
    /// that `(L, root r) = sum_j fcoord_j(L) * pair_vecs[r][j] / scale`.
    pair_scale: i64,
    pair_vecs: Vec<Vec<i64>>,
    /// Inverse Cartan matrix: fundamental coordinates to root coordinates.
    cartan_inv: Vec<Vec<Rational>>,
}

impl RootSystem {
    pub fn new(diagram: DynkinDiagram) -> Self {
        let rank = diagram.rank();
        let form = diagram.form();
        let half_sq: Vec<Rational> = (0..rank)
            .map(|i| form.sq_len(i) / Rational::from_integer(2))
            .collect();
        let pair_scale = half_sq.iter().fold(1i64, |acc, h| acc.lcm(h.denom()));

        let roots = close_positive_roots(&diagram);
        let supports = roots.iter().map(Root::support).collect();
        let lookup = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let pair_vecs = roots
            .iter()
            .map(|r| {
                (0..rank)
                    .map(|j| (half_sq[j] * Rational::from_integer(r.coeff(j) * pair_scale)).to_integer())
                    .collect()
            })
            .collect();
        let cartan_inv = invert(diagram.cartan());
        RootSystem {
            diagram,
            roots,
            supports,
            lookup,
            pair_scale,
            pair_vecs,
            cartan_inv,
        }
    }

    pub fn from_types(types: &[SimpleType]) -> Result<Self> {
        Ok(Self::new(DynkinDiagram::new(types)?))
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn rank(&self) -> usize {
        self.diagram.rank()
    }

    /// Positive roots ordered by height, then by coefficients in decreasing
    /// lexicographic order (simple roots come first, as `alpha_1, alpha_2, ...`).
    pub fn positive_roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn support_of(&self, root_idx: usize) -> NodeSet {
        self.supports[root_idx]
    }

    pub fn root_index(&self, root: &Root) -> Option<usize> {
        self.lookup.get(root).copied()
    }

    pub fn is_positive_root(&self, root: &Root) -> bool {
        self.lookup.contains_key(root)
    }

    pub fn is_root(&self, root: &Root) -> bool {
        self.is_positive_root(root) || self.is_positive_root(&root.negate())
    }

    /// Positive roots whose support lies in `nodes`, i.e. the positive roots
    /// of the subsystem `[nodes]`.
    pub fn roots_supported_in(&self, nodes: NodeSet) -> impl Iterator<Item = usize> + '_ {
        (0..self.roots.len()).filter(move |&i| self.supports[i].is_subset(nodes))
    }

    pub fn highest_root(&self, component: usize) -> &Root {
        let nodes = self.diagram.components()[component].nodes();
        self.roots
            .iter()
            .rev()
            .find(|r| r.support().is_subset(nodes))
            .expect("every component has roots")
    }

    pub fn sq_len(&self, i: usize) -> Rational {
        self.diagram.form().sq_len(i)
    }

    fn check_rank(&self, found: usize) -> Result<()> {
        if found != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found,
            });
        }
        Ok(())
    }

    /// Root coordinates of a weight (exact inverse-Cartan solve).
    pub fn to_root_coords(&self, w: &Weight) -> Vec<Rational> {
        let f = w.fcoords();
        self.cartan_inv
            .iter()
            .map(|row| row.iter().zip(&f).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Fundamental coordinates of a root: `2(root, alpha_j)/(alpha_j, alpha_j)`.
    pub fn root_to_weight(&self, root: &Root) -> Weight {
        let a = self.diagram.cartan();
        let coords: Vec<i64> = (0..self.rank())
            .map(|j| (0..self.rank()).map(|k| a[j][k] * root.coeff(k)).sum())
            .collect();
        Weight::from_ints(&coords)
    }

    /// Exact scalar product of two weights or roots.
    pub fn inner<'a>(&self, x: impl Into<Element<'a>>, y: impl Into<Element<'a>>) -> Result<Rational> {
        let coords = |e: Element<'_>| -> Result<Vec<Rational>> {
            match e {
                Element::Weight(w) => {
                    self.check_rank(w.rank())?;
                    Ok(self.to_root_coords(w))
                }
                Element::Root(r) => {
                    self.check_rank(r.rank())?;
                    Ok(r.coeffs().iter().map(|&c| Rational::from_integer(c)).collect())
                }
            }
        };
        let (a, b) = (coords(x.into())?, coords(y.into())?);
        let gram = self.diagram.form().gram();
        let mut total = Rational::zero();
        for i in 0..a.len() {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..b.len() {
                if !b[j].is_zero() && !gram[i][j].is_zero() {
                    total += a[i] * gram[i][j] * b[j];
                }
            }
        }
        Ok(total)
    }

    /// Squared length of a root.
    pub fn root_sq_len(&self, root: &Root) -> Rational {
        self.inner(root, root).expect("root of matching rank")
    }

    /// `(w, root r)` scaled by the positive constant `w.denominator() * scale`;
    /// only its sign and zero-ness are meaningful.
    #[inline]
    pub(crate) fn pairing_numerator(&self, numerators: &[i64], root_idx: usize) -> i64 {
        numerators
            .iter()
            .zip(&self.pair_vecs[root_idx])
            .map(|(a, b)| a * b)
            .sum()
    }

    /// Exact `(w, root r)` for a positive root by index.
    pub fn pairing(&self, w: &Weight, root_idx: usize) -> Rational {
        Rational::new(
            self.pairing_numerator(w.numerators(), root_idx),
            w.denominator() * self.pair_scale,
        )
    }

    /// `(w + gamma, root r)` numerators and the denominators of the Weyl
    /// dimension factor, both scaled by the same positive constant.
    pub(crate) fn weyl_factor(&self, coords: &[i64], root_idx: usize) -> (i64, i64) {
        let v = &self.pair_vecs[root_idx];
        let den: i64 = v.iter().sum();
        let num: i64 = coords.iter().zip(v).map(|(a, b)| (a + 1) * b).sum();
        (num, den)
    }

    /// A positive root orthogonal to `w`, if any.
    pub fn is_singular(&self, w: &Weight) -> Result<Option<&Root>> {
        self.check_rank(w.rank())?;
        Ok((0..self.roots.len())
            .find(|&r| self.pairing_numerator(w.numerators(), r) == 0)
            .map(|r| &self.roots[r]))
    }

    /// Number of positive roots pairing strictly negatively with a regular
    /// weight.
    pub fn index(&self, w: &Weight) -> Result<usize> {
        if self.is_singular(w)?.is_some() {
            return Err(Error::SingularWeight(w.clone()));
        }
        Ok(self.count_negative(w.numerators()))
    }

    pub(crate) fn count_negative(&self, numerators: &[i64]) -> usize {
        (0..self.roots.len())
            .filter(|&r| self.pairing_numerator(numerators, r) < 0)
            .count()
    }

    /// The dominant element of the Weyl orbit of `w`, reached by reflecting
    /// at the lowest-index negative coordinate until none remain, and the
    /// number of reflections used.
    pub fn dominantize(&self, w: &Weight) -> Result<(Weight, usize)> {
        self.check_rank(w.rank())?;
        let cartan = self.diagram.cartan();
        let mut cur = w.clone();
        let mut steps = 0;
        while let Some(i) = cur.numerators().iter().position(|&x| x < 0) {
            cur.reflect(i, (0..self.rank()).map(|j| cartan[j][i]));
            steps += 1;
            if steps > self.roots.len() {
                return Err(Error::Internal(format!(
                    "dominantize of {w} exceeded {} reflections",
                    self.roots.len()
                )));
            }
        }
        Ok((cur, steps))
    }

    pub fn gamma(&self) -> Weight {
        Weight::gamma(self.rank())
    }

    /// `I(L) = w(L + gamma) - gamma` for the Weyl element `w` making
    /// `L + gamma` dominant.
    pub fn i_of(&self, w: &Weight) -> Result<Weight> {
        self.check_rank(w.rank())?;
        let gamma = self.gamma();
        let shifted = w + &gamma;
        if self.is_singular(&shifted)?.is_some() {
            return Err(Error::SingularShiftedWeight(w.clone()));
        }
        let (dom, _) = self.dominantize(&shifted)?;
        Ok(&dom - &gamma)
    }

    /// A chain of positive roots from `lower` to `upper` whose consecutive
    /// differences are simple roots in `C(upper - lower)`.
    ///
    /// At each step a simple root `a` in the support of the remaining gap with
    /// `(gap, a) > 0` is chosen; then either `upper - a` or `lower + a` is a
    /// positive root between the two, and the chain grows from that end.
    pub fn find_root_chain(&self, lower: &Root, upper: &Root) -> Result<Vec<Root>> {
        for r in [lower, upper] {
            self.check_rank(r.rank())?;
            if !self.is_positive_root(r) {
                return Err(Error::NotPositiveRoot(r.clone()));
            }
        }
        if !lower.le(upper) {
            return Err(Error::NotComparable {
                lower: lower.clone(),
                upper: upper.clone(),
            });
        }
        let mut head = vec![lower.clone()];
        let mut tail = vec![upper.clone()];
        loop {
            let lo = head.last().unwrap();
            let hi = tail.last().unwrap();
            if lo == hi {
                tail.pop();
                break;
            }
            let gap = hi.difference(lo);
            let alpha = gap
                .support()
                .iter()
                .find(|&a| self.inner(&gap, &Root::simple(self.rank(), a)).unwrap() > Rational::zero())
                .ok_or_else(|| Error::Internal(format!("no ascending direction between {lo} and {hi}")))?;
            let simple = Root::simple(self.rank(), alpha);
            let down = hi.plus_simple(alpha, -1);
            let up = lo.plus_simple(alpha, 1);
            if self.inner(hi, &simple)? > Rational::zero() && self.is_positive_root(&down) {
                tail.push(down);
            } else if self.is_positive_root(&up) {
                head.push(up);
            } else {
                return Err(Error::Internal(format!("root chain stuck between {lo} and {hi}")));
            }
        }
        head.extend(tail.into_iter().rev());
        Ok(head)
    }
}

/// Positive roots by closure under adding simple roots: `d + a_i` is a root
/// iff `p - <d, a_i^v> > 0`, where `p` is the length of the `a_i`-string below
/// `d`.
fn close_positive_roots(diagram: &DynkinDiagram) -> Vec<Root> {
    let rank = diagram.rank();
    let cartan = diagram.cartan();
    let mut known: HashMap<Root, ()> = HashMap::new();
    let mut layer: Vec<Root> = (0..rank).map(|i| Root::simple(rank, i)).collect();
    let mut all = Vec::new();
    for r in &layer {
        known.insert(r.clone(), ());
    }
    while !layer.is_empty() {
        let mut next = Vec::new();
        for d in &layer {
            for i in 0..rank {
                let coroot_pairing: i64 = (0..rank).map(|j| d.coeff(j) * cartan[i][j]).sum();
                let mut p = 0;
                loop {
                    let below = d.plus_simple(i, -(p + 1));
                    if known.contains_key(&below) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - coroot_pairing > 0 {
                    let up = d.plus_simple(i, 1);
                    if !known.contains_key(&up) {
                        known.insert(up.clone(), ());
                        next.push(up);
                    }
                }
            }
        }
        all.append(&mut layer);
        layer = next;
    }
    all.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.coeffs().cmp(a.coeffs())));
    all
}

/// Exact Gauss-Jordan inverse of an integer matrix.
fn invert(m: &[Vec<i64>]) -> Vec<Vec<Rational>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .map(|row| row.iter().map(|&x| Rational::from_integer(x)).collect())
        .collect();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero()).expect("Cartan matrices are invertible");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in 0..n {
                    let (x, y) = (a[col][j], inv[col][j]);
                    a[r][j] -= f * x;
                    inv[r][j] -= f * y;
                }
            }
        }
    }
    inv
}
