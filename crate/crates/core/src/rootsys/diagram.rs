use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::nodeset::{NodeSet, MAX_RANK};
use crate::Rational;

/// Cartan-Killing family letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// Isomorphism type of a connected Dynkin diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    pub family: Family,
    pub rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let invalid = |reason| Error::InvalidType {
            letter: family.letter(),
            rank,
            reason,
        };
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            return Err(invalid(match family {
                Family::A => "rank must be at least 1",
                Family::B | Family::C => "rank must be at least 2",
                Family::D => "rank must be at least 4",
                Family::E => "rank must be 6, 7 or 8",
                Family::F => "rank must be 4",
                Family::G => "rank must be 2",
            }));
        }
        if rank > MAX_RANK {
            return Err(invalid("rank exceeds 64"));
        }
        Ok(SimpleType { family, rank })
    }

    pub fn from_letter(letter: char, rank: usize) -> Result<Self> {
        let family = Family::from_letter(letter).ok_or(Error::InvalidType {
            letter,
            rank,
            reason: "unknown family letter",
        })?;
        SimpleType::new(family, rank)
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    /// Squared lengths (long roots = 2) and edges in Bourbaki labeling.
    fn shape(self) -> (Vec<Rational>, Vec<(usize, usize)>) {
        let n = self.rank;
        let two = Rational::from_integer(2);
        let one = Rational::one();
        let chain = |n: usize| (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
        match self.family {
            Family::A => (vec![two; n], chain(n)),
            Family::B => {
                let mut len = vec![two; n];
                len[n - 1] = one;
                (len, chain(n))
            }
            Family::C => {
                let mut len = vec![one; n];
                len[n - 1] = two;
                (len, chain(n))
            }
            Family::D => {
                let mut edges = chain(n - 1);
                edges.push((n - 3, n - 1));
                (vec![two; n], edges)
            }
            Family::E => {
                let mut edges = vec![(0, 2), (1, 3), (2, 3)];
                edges.extend((3..n - 1).map(|i| (i, i + 1)));
                (vec![two; n], edges)
            }
            Family::F => (vec![two, two, one, one], chain(4)),
            Family::G => (vec![Rational::new(2, 3), two], chain(2)),
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// One simple component of a diagram, occupying indices
/// `offset..offset + kind.rank`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Component {
    pub kind: SimpleType,
    pub offset: usize,
}

impl Component {
    pub fn nodes(&self) -> NodeSet {
        NodeSet::from_bits(NodeSet::full(self.kind.rank).bits() << self.offset)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub i: usize,
    pub j: usize,
    /// 1, 2 or 3 (the product a_ij * a_ji).
    pub multiplicity: u8,
}

/// Gram matrix `(alpha_i, alpha_j)` of the invariant scalar product on the
/// simple roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    gram: Vec<Vec<Rational>>,
}

impl BilinearForm {
    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.gram[i][j]
    }

    pub fn sq_len(&self, i: usize) -> Rational {
        self.gram[i][i]
    }

    pub fn gram(&self) -> &[Vec<Rational>] {
        &self.gram
    }

    /// Sylvester's criterion with exact leading minors.
    pub fn is_positive_definite(&self) -> bool {
        let n = self.rank();
        // Fraction-free elimination keeps the pivots equal to ratios of
        // consecutive leading minors.
        let mut m = self.gram.clone();
        for k in 0..n {
            if !m[k][k].is_positive() {
                return false;
            }
            for r in k + 1..n {
                let factor = m[r][k] / m[k][k];
                for c in k..n {
                    let v = m[k][c];
                    m[r][c] -= factor * v;
                }
            }
        }
        true
    }
}

/// A semisimple Dynkin diagram: ordered simple components, Cartan matrix,
/// edges and scalar product.
///
/// The Cartan matrix follows `a_ij = 2(alpha_i, alpha_j) / (alpha_i, alpha_i)`,
/// so row `i` lists the pairings of the coroot of `alpha_i` with the simple
/// roots, and column `i` is `alpha_i` written in fundamental coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynkinDiagram {
    components: Vec<Component>,
    cartan: Vec<Vec<i64>>,
    edges: Vec<Edge>,
    adjacency: Vec<NodeSet>,
    form: BilinearForm,
}

impl DynkinDiagram {
    pub fn new(types: &[SimpleType]) -> Result<Self> {
        let rank: usize = types.iter().map(|t| t.rank).sum();
        if rank > MAX_RANK {
            return Err(Error::InvalidType {
                letter: types.last().map_or('A', |t| t.family.letter()),
                rank,
                reason: "total rank exceeds 64",
            });
        }
        let mut gram = vec![vec![Rational::zero(); rank]; rank];
        let mut components = Vec::with_capacity(types.len());
        let mut offset = 0;
        for &kind in types {
            let (len, edges) = kind.shape();
            for (k, l) in len.iter().enumerate() {
                gram[offset + k][offset + k] = *l;
            }
            for (a, b) in edges {
                let v = -std::cmp::max(len[a], len[b]) / Rational::from_integer(2);
                gram[offset + a][offset + b] = v;
                gram[offset + b][offset + a] = v;
            }
            components.push(Component { kind, offset });
            offset += kind.rank;
        }
        Self::from_parts(components, BilinearForm { gram })
    }

    /// Convenience constructor from `(letter, rank)` pairs.
    pub fn build(spec: &[(char, usize)]) -> Result<Self> {
        let types = spec
            .iter()
            .map(|&(c, r)| SimpleType::from_letter(c, r))
            .collect::<Result<Vec<_>>>()?;
        Self::new(&types)
    }

    pub fn simple(kind: SimpleType) -> Self {
        Self::new(&[kind]).expect("valid simple type")
    }

    fn from_parts(components: Vec<Component>, form: BilinearForm) -> Result<Self> {
        let rank = form.rank();
        let mut cartan = vec![vec![0i64; rank]; rank];
        let mut adjacency = vec![NodeSet::EMPTY; rank];
        let mut edges = Vec::new();
        for i in 0..rank {
            for j in 0..rank {
                let a = Rational::from_integer(2) * form.get(i, j) / form.sq_len(i);
                if !a.is_integer() {
                    return Err(Error::Internal(format!("non-integral Cartan entry at ({i},{j})")));
                }
                cartan[i][j] = a.to_integer();
            }
        }
        for i in 0..rank {
            for j in i + 1..rank {
                if cartan[i][j] != 0 {
                    adjacency[i].insert(j);
                    adjacency[j].insert(i);
                    edges.push(Edge {
                        i,
                        j,
                        multiplicity: (cartan[i][j] * cartan[j][i]) as u8,
                    });
                }
            }
        }
        Ok(DynkinDiagram {
            components,
            cartan,
            edges,
            adjacency,
            form,
        })
    }

    /// Copy of this diagram with the scalar product of one component
    /// multiplied by a positive rational. The Cartan matrix is unchanged.
    pub fn rescaled(&self, component: usize, factor: Rational) -> Result<Self> {
        let comp = *self
            .components
            .get(component)
            .ok_or(Error::IndexOutOfRange {
                index: component,
                rank: self.components.len(),
            })?;
        if !factor.is_positive() {
            return Err(Error::Internal("scale factor must be positive".into()));
        }
        let mut gram = self.form.gram.clone();
        let nodes = comp.nodes();
        for i in nodes.iter() {
            for j in nodes.iter() {
                gram[i][j] *= factor;
            }
        }
        Self::from_parts(self.components.clone(), BilinearForm { gram })
    }

    pub fn rank(&self) -> usize {
        self.form.rank()
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn form(&self) -> &BilinearForm {
        &self.form
    }

    pub fn neighbors(&self, i: usize) -> NodeSet {
        self.adjacency[i]
    }

    pub fn edge_multiplicity(&self, i: usize, j: usize) -> u8 {
        if i == j || self.cartan[i][j] == 0 {
            0
        } else {
            (self.cartan[i][j] * self.cartan[j][i]) as u8
        }
    }

    pub fn component_of(&self, i: usize) -> usize {
        self.components
            .iter()
            .position(|c| c.nodes().contains(i))
            .expect("index within rank")
    }

    pub fn all_nodes(&self) -> NodeSet {
        NodeSet::full(self.rank())
    }

    pub fn is_simply_laced(&self) -> bool {
        self.edges.iter().all(|e| e.multiplicity == 1)
    }

    /// Connected components of the induced subgraph on `nodes`, each sorted,
    /// ordered by smallest index.
    pub fn connected_components(&self, nodes: NodeSet) -> Vec<NodeSet> {
        let mut rest = nodes;
        let mut out = Vec::new();
        while let Some(start) = rest.first() {
            let mut comp = NodeSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = NodeSet::EMPTY;
                for v in frontier.iter() {
                    next = next.union(self.adjacency[v]);
                }
                next = next.intersection(nodes).difference(comp);
                comp = comp.union(next);
                frontier = next;
            }
            rest = rest.difference(comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self, nodes: NodeSet) -> bool {
        self.connected_components(nodes).len() <= 1
    }

    /// Checks that an index set fits in this diagram.
    pub fn check_nodes(&self, nodes: NodeSet) -> Result<()> {
        match nodes.max_index() {
            Some(i) if i >= self.rank() => Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            }),
            _ => Ok(()),
        }
    }

    /// Canonical spec string such as `A2xB2`.
    pub fn label(&self) -> String {
        self.components
            .iter()
            .map(|c| c.kind.to_string())
            .collect::<Vec<_>>()
            .join("x")
    }
}

impl fmt::Display for DynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl FromStr for DynkinDiagram {
    type Err = Error;

    /// Parses `A4`, `A2xB2`, `E8 x A1` (also accepting `*` or `×` as
    /// separators). Positions in errors are character offsets.
    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().collect();
        let mut pos = 0;
        let mut types = Vec::new();
        let skip_ws = |pos: &mut usize| {
            while *pos < chars.len() && chars[*pos].is_whitespace() {
                *pos += 1;
            }
        };
        loop {
            skip_ws(&mut pos);
            let Some(&c) = chars.get(pos) else {
                return Err(Error::Parse {
                    position: pos,
                    message: "expected a type letter".into(),
                });
            };
            let Some(family) = Family::from_letter(c) else {
                return Err(Error::Parse {
                    position: pos,
                    message: format!("unexpected character {c:?}; expected one of A-G"),
                });
            };
            let letter_pos = pos;
            pos += 1;
            let start = pos;
            while pos < chars.len() && chars[pos].is_ascii_digit() {
                pos += 1;
            }
            if start == pos {
                return Err(Error::Parse {
                    position: pos,
                    message: "expected a rank after the type letter".into(),
                });
            }
            let digits: String = chars[start..pos].iter().collect();
            let rank: usize = digits.parse().map_err(|_| Error::Parse {
                position: start,
                message: format!("rank {digits} is too large"),
            })?;
            let kind = SimpleType::new(family, rank).map_err(|e| Error::Parse {
                position: letter_pos,
                message: e.to_string(),
            })?;
            types.push(kind);
            skip_ws(&mut pos);
            match chars.get(pos) {
                None => break,
                Some('x' | 'X' | '*' | '×') => pos += 1,
                Some(&other) => {
                    return Err(Error::Parse {
                        position: pos,
                        message: format!("unexpected character {other:?}; expected 'x'"),
                    })
                }
            }
        }
        DynkinDiagram::new(&types)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn simple(l: char, r: usize) -> DynkinDiagram {
        DynkinDiagram::build(&[(l, r)]).unwrap()
    }

    #[test]
    fn small_cartan_matrices() {
        assert_eq!(simple('A', 1).cartan(), &[vec![2]]);
        assert_eq!(simple('A', 2).cartan(), &[vec![2, -1], vec![-1, 2]]);
        let g2 = simple('G', 2);
        let mut off = vec![g2.cartan()[0][1], g2.cartan()[1][0]];
        off.sort();
        assert_eq!(off, vec![-3, -1]);
        assert_eq!(g2.form().sq_len(0), Rational::new(2, 3));
        assert_eq!(g2.form().sq_len(1), Rational::from_integer(2));
        assert_eq!(g2.edges()[0].multiplicity, 3);
    }

    #[test]
    fn rejects_out_of_range_types() {
        for (l, r) in [('E', 9), ('F', 3), ('G', 3), ('D', 3), ('B', 1), ('A', 0), ('E', 5)] {
            assert!(
                matches!(DynkinDiagram::build(&[(l, r)]), Err(Error::InvalidType { .. })),
                "{l}{r}"
            );
        }
        assert!(DynkinDiagram::build(&[('H', 3)]).is_err());
    }

    #[test]
    fn cartan_invariants_hold_for_all_types() {
        for kind in crate::catalog::simple_types(8) {
            let d = DynkinDiagram::simple(kind);
            let n = d.rank();
            for i in 0..n {
                assert_eq!(d.cartan()[i][i], 2);
                for j in 0..n {
                    if i != j {
                        assert!(d.cartan()[i][j] <= 0);
                        assert_eq!(d.cartan()[i][j] == 0, d.cartan()[j][i] == 0);
                        // 2(a_i,a_j)/(a_j,a_j) = a_ji
                        let v = Rational::from_integer(2) * d.form().get(i, j) / d.form().sq_len(j);
                        assert_eq!(v, Rational::from_integer(d.cartan()[j][i]));
                    }
                }
            }
            assert!(d.form().is_positive_definite(), "{kind}");
            let long = (0..n).map(|i| d.form().sq_len(i)).max().unwrap();
            assert_eq!(long, Rational::from_integer(2), "{kind}");
            assert!(d.is_connected(d.all_nodes()));
        }
    }

    #[test]
    fn bourbaki_labels() {
        // B3: alpha_3 short; C3: alpha_3 long; F4: alpha_1, alpha_2 long.
        assert_eq!(simple('B', 3).form().sq_len(2), Rational::one());
        assert_eq!(simple('C', 3).form().sq_len(2), Rational::from_integer(2));
        assert_eq!(simple('F', 4).form().sq_len(1), Rational::from_integer(2));
        assert_eq!(simple('F', 4).form().sq_len(2), Rational::one());
        // D5 fork at alpha_3; E6 branch alpha_4 adjacent to alpha_2.
        let d5 = simple('D', 5);
        assert_eq!(d5.neighbors(2).iter().collect::<Vec<_>>(), vec![1, 3, 4]);
        let e6 = simple('E', 6);
        assert_eq!(e6.neighbors(3).iter().collect::<Vec<_>>(), vec![1, 2, 4]);
        assert_eq!(e6.neighbors(1).iter().collect::<Vec<_>>(), vec![3]);
    }

    #[test]
    fn product_diagrams_are_block_diagonal() {
        let d: DynkinDiagram = "A2xB2".parse().unwrap();
        assert_eq!(d.rank(), 4);
        assert_eq!(d.components().len(), 2);
        for i in 0..2 {
            for j in 2..4 {
                assert_eq!(d.cartan()[i][j], 0);
                assert_eq!(d.form().get(i, j), Rational::zero());
            }
        }
        assert_eq!(d.connected_components(d.all_nodes()).len(), 2);
        assert_eq!(d.label(), "A2xB2");
    }

    #[test]
    fn parse_errors_carry_positions() {
        match "A2xQ3".parse::<DynkinDiagram>() {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 3),
            other => panic!("{other:?}"),
        }
        match "A2x".parse::<DynkinDiagram>() {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 3),
            other => panic!("{other:?}"),
        }
        match "E9".parse::<DynkinDiagram>() {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 0),
            other => panic!("{other:?}"),
        }
        assert!("a1 x a1".parse::<DynkinDiagram>().is_ok());
    }

    #[test]
    fn rescaling_keeps_cartan() {
        let d: DynkinDiagram = "B2xG2".parse().unwrap();
        let s = d.rescaled(1, Rational::new(1, 2)).unwrap();
        assert_eq!(s.cartan(), d.cartan());
        assert_eq!(s.form().sq_len(3), Rational::one());
        assert_eq!(s.form().sq_len(0), d.form().sq_len(0));
    }
}
