use std::fmt;

use crate::nodeset::NodeSet;

/// An element of the root lattice in the simple-root basis (the
/// coefficients `c_alpha`).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(Vec<i64>);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootSign {
    Positive,
    Negative,
    /// Mixed or zero coefficients; never the case for an actual root.
    Mixed,
}

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Root(coeffs)
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut c = vec![0; rank];
        c[i] = 1;
        Root(c)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.0[i]
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn sign(&self) -> RootSign {
        let pos = self.0.iter().any(|&c| c > 0);
        let neg = self.0.iter().any(|&c| c < 0);
        match (pos, neg) {
            (true, false) => RootSign::Positive,
            (false, true) => RootSign::Negative,
            _ => RootSign::Mixed,
        }
    }

    /// `C(xi)`: the simple roots with nonzero coefficient.
    pub fn support(&self) -> NodeSet {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Coordinatewise `self <= other`.
    pub fn le(&self, other: &Root) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn plus_simple(&self, i: usize, times: i64) -> Root {
        let mut c = self.0.clone();
        c[i] += times;
        Root(c)
    }

    pub fn difference(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn negate(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Root {
    /// `a1+2a2` style, or `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "a{}", i + 1)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Root({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_support() {
        let r = Root::new(vec![1, 2, 0]);
        assert_eq!(r.to_string(), "a1+2a2");
        assert_eq!(r.negate().to_string(), "-a1-2a2");
        assert_eq!(r.support().iter().collect::<Vec<_>>(), vec![0, 1]);
        assert_eq!(r.sign(), RootSign::Positive);
        assert!(Root::simple(3, 0).le(&r));
        assert!(!r.le(&Root::simple(3, 0)));
    }
}
