use std::fmt;
use std::ops::{Add, Sub};

use num_integer::Integer;

use crate::Rational;

/// An element of the weight space written in the fundamental-weight basis:
/// coordinate `i` is `2(L, alpha_i) / (alpha_i, alpha_i)`.
///
/// Coordinates are kept over a single positive common denominator, reduced.
/// A weight is integral exactly when that denominator is 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    num: Vec<i64>,
    den: i64,
}

impl Weight {
    pub fn from_ints(coords: &[i64]) -> Self {
        Weight {
            num: coords.to_vec(),
            den: 1,
        }
    }

    pub fn zero(rank: usize) -> Self {
        Weight {
            num: vec![0; rank],
            den: 1,
        }
    }

    /// The weight with every fundamental coordinate equal to 1 (half the sum
    /// of the positive roots).
    pub fn gamma(rank: usize) -> Self {
        Weight {
            num: vec![1; rank],
            den: 1,
        }
    }

    pub fn from_fcoords(coords: &[Rational]) -> Self {
        let den = coords.iter().fold(1i64, |acc, c| acc.lcm(c.denom()));
        let num = coords.iter().map(|c| c.numer() * (den / c.denom())).collect();
        Weight::normalized(num, den)
    }

    fn normalized(mut num: Vec<i64>, mut den: i64) -> Self {
        debug_assert!(den != 0);
        if den < 0 {
            den = -den;
            num.iter_mut().for_each(|x| *x = -*x);
        }
        let g = num.iter().fold(den, |acc, x| acc.gcd(x));
        if g > 1 {
            num.iter_mut().for_each(|x| *x /= g);
            den /= g;
        }
        Weight { num, den }
    }

    pub fn rank(&self) -> usize {
        self.num.len()
    }

    pub fn fcoord(&self, i: usize) -> Rational {
        Rational::new(self.num[i], self.den)
    }

    pub fn fcoords(&self) -> Vec<Rational> {
        (0..self.rank()).map(|i| self.fcoord(i)).collect()
    }

    pub fn is_integral(&self) -> bool {
        self.den == 1
    }

    /// Integer coordinates, when integral.
    pub fn as_ints(&self) -> Option<&[i64]> {
        self.is_integral().then_some(&self.num[..])
    }

    /// Numerators over the common denominator returned by [`Weight::denominator`].
    pub fn numerators(&self) -> &[i64] {
        &self.num
    }

    pub fn denominator(&self) -> i64 {
        self.den
    }

    /// All fundamental coordinates are non-negative.
    pub fn is_dominant(&self) -> bool {
        self.num.iter().all(|&x| x >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|&x| x == 0)
    }

    /// Reflection in the simple root `alpha_i`, given `alpha_i` in
    /// fundamental coordinates (a column of the Cartan matrix).
    pub(crate) fn reflect(&mut self, i: usize, root_fcoords: impl Iterator<Item = i64>) {
        let c = self.num[i];
        for (x, a) in self.num.iter_mut().zip(root_fcoords) {
            *x -= c * a;
        }
    }

    fn combine(&self, other: &Weight, sign: i64) -> Weight {
        assert_eq!(self.rank(), other.rank(), "weights of different rank");
        let den = self.den.lcm(&other.den);
        let (a, b) = (den / self.den, den / other.den);
        let num = self
            .num
            .iter()
            .zip(&other.num)
            .map(|(x, y)| x * a + sign * y * b)
            .collect();
        Weight::normalized(num, den)
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        self.combine(rhs, 1)
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        self.combine(rhs, -1)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for i in 0..self.rank() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", self.fcoord(i))?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Weight{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_and_integrality() {
        let w = Weight::from_fcoords(&[Rational::new(1, 2), Rational::new(-3, 2)]);
        assert!(!w.is_integral());
        assert_eq!(w.denominator(), 2);
        assert_eq!(w.to_string(), "(1/2, -3/2)");
        let v = &w + &w;
        assert!(v.is_integral());
        assert_eq!(v.as_ints(), Some(&[1, -3][..]));
        assert_eq!(&v - &v, Weight::zero(2));
        assert_eq!(Weight::from_fcoords(&[Rational::new(4, 2)]), Weight::from_ints(&[2]));
    }
}
