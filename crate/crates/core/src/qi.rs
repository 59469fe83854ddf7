//! Exact Gaussian rationals `a + b i` with `a, b` in Q.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Qi {
    pub re: BigRational,
    pub im: BigRational,
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl Qi {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Qi { re, im }
    }

    pub fn zero() -> Self {
        Qi { re: BigRational::zero(), im: BigRational::zero() }
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    pub fn i() -> Self {
        Qi { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn int(n: i64) -> Self {
        Qi { re: rat(n, 1), im: BigRational::zero() }
    }

    /// `n / d` as a real Gaussian rational. Panics if `d == 0`.
    pub fn frac(n: i64, d: i64) -> Self {
        Qi { re: rat(n, d), im: BigRational::zero() }
    }

    pub fn from_parts(re_n: i64, re_d: i64, im_n: i64, im_d: i64) -> Self {
        Qi { re: rat(re_n, re_d), im: rat(im_n, im_d) }
    }

    pub fn from_rational(r: BigRational) -> Self {
        Qi { re: r, im: BigRational::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Qi { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm_sqr();
        Ok(Qi { re: &self.re / &n, im: -&self.im / &n })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Qi::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }

    /// Sign used when printing a term: the real part, or the imaginary part if real is zero.
    pub(crate) fn leading_negative(&self) -> bool {
        if self.re.is_zero() {
            self.im.is_negative()
        } else {
            self.re.is_negative()
        }
    }

    /// True when the printed form needs parentheses as a factor.
    pub(crate) fn is_compound(&self) -> bool {
        !self.re.is_zero() && !self.im.is_zero()
    }
}

impl From<i64> for Qi {
    fn from(n: i64) -> Self {
        Qi::int(n)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl<'a> $tr<&'a Qi> for &'a Qi {
            type Output = Qi;
            fn $m(self, rhs: &'a Qi) -> Qi {
                let f: fn(&Qi, &Qi) -> Qi = $body;
                f(self, rhs)
            }
        }
        impl $tr<Qi> for Qi {
            type Output = Qi;
            fn $m(self, rhs: Qi) -> Qi {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Qi> for Qi {
            type Output = Qi;
            fn $m(self, rhs: &'a Qi) -> Qi {
                (&self).$m(rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| Qi { re: &a.re + &b.re, im: &a.im + &b.im });
forward_binop!(Sub, sub, |a, b| Qi { re: &a.re - &b.re, im: &a.im - &b.im });
forward_binop!(Mul, mul, |a, b| {
    if a.im.is_zero() && b.im.is_zero() {
        return Qi { re: &a.re * &b.re, im: BigRational::zero() };
    }
    Qi {
        re: &a.re * &b.re - &a.im * &b.im,
        im: &a.re * &b.im + &a.im * &b.re,
    }
});
forward_binop!(Div, div, |a, b| a * &b.inv().expect("division by zero Qi"));

impl AddAssign<&Qi> for Qi {
    fn add_assign(&mut self, rhs: &Qi) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&Qi> for Qi {
    fn sub_assign(&mut self, rhs: &Qi) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&Qi> for Qi {
    fn mul_assign(&mut self, rhs: &Qi) {
        *self = &*self * rhs;
    }
}

impl Neg for Qi {
    type Output = Qi;
    fn neg(self) -> Qi {
        Qi { re: -self.re, im: -self.im }
    }
}

impl Neg for &Qi {
    type Output = Qi;
    fn neg(self) -> Qi {
        Qi { re: -&self.re, im: -&self.im }
    }
}

fn fmt_rat(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Prints `1/2`, `1/2i`, `-i`, `1/2+1/3i`.
impl fmt::Display for Qi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let im = |r: &BigRational| -> String {
            if r.is_one() {
                "i".into()
            } else if (-r).is_one() {
                "-i".into()
            } else {
                format!("{}i", fmt_rat(r))
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", fmt_rat(&self.re)),
            (true, false) => write!(f, "{}", im(&self.im)),
            (false, false) => {
                let sign = if self.im.is_negative() { "" } else { "+" };
                write!(f, "{}{}{}", fmt_rat(&self.re), sign, im(&self.im))
            }
        }
    }
}

impl fmt::Debug for Qi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Qi {
    type Err = Error;

    /// Accepts anything the polynomial parser accepts as a constant, e.g. `-3/4+1/2i`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let z = crate::parse::parse_zh(s)?;
        z.as_constant().ok_or(Error::Parse {
            pos: 0,
            expected: "a constant".into(),
        })
    }
}

/// Solve `m x = b` exactly by Gauss-Jordan elimination; `None` if singular.
pub fn solve(mut m: Vec<Vec<Qi>>, mut b: Vec<Qi>) -> Option<Vec<Qi>> {
    let n = m.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        b.swap(col, piv);
        let inv = m[col][col].inv().ok()?;
        for c in col..n {
            m[col][c] = &m[col][c] * &inv;
        }
        b[col] = &b[col] * &inv;
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..n {
                    let t = &f * &m[col][c];
                    m[r][c] -= &t;
                }
                let t = &f * &b[col];
                b[r] -= &t;
            }
        }
    }
    Some(b)
}

/// Exact inverse of a square matrix; `None` if singular.
pub fn invert(m: &[Vec<Qi>]) -> Option<Vec<Vec<Qi>>> {
    let n = m.len();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let e: Vec<Qi> = (0..n).map(|i| if i == j { Qi::one() } else { Qi::zero() }).collect();
        cols.push(solve(m.to_vec(), e)?);
    }
    Some((0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_forms() {
        assert_eq!(Qi::frac(1, 2).to_string(), "1/2");
        assert_eq!(Qi::from_parts(0, 1, 1, 2).to_string(), "1/2i");
        assert_eq!(Qi::from_parts(1, 2, 1, 3).to_string(), "1/2+1/3i");
        assert_eq!(Qi::from_parts(1, 2, -1, 3).to_string(), "1/2-1/3i");
        assert_eq!((-Qi::i()).to_string(), "-i");
        assert_eq!(Qi::zero().to_string(), "0");
    }

    #[test]
    fn field_ops() {
        let a = Qi::from_parts(1, 2, 3, 4);
        let b = Qi::from_parts(-2, 3, 1, 5);
        let q = &a / &b;
        assert_eq!(&q * &b, a);
        assert_eq!(&Qi::i() * &Qi::i(), Qi::int(-1));
        assert!(Qi::zero().inv().is_err());
    }

    #[test]
    fn lowest_terms() {
        let a = Qi::frac(4, -6);
        assert_eq!(a.re.numer(), &BigInt::from(-2));
        assert_eq!(a.re.denom(), &BigInt::from(3));
    }

    #[test]
    fn invert_small() {
        let m = vec![
            vec![Qi::int(2), Qi::int(1)],
            vec![Qi::int(1), Qi::i()],
        ];
        let inv = invert(&m).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let mut s = Qi::zero();
                for k in 0..2 {
                    s += &(&m[i][k] * &inv[k][j]);
                }
                assert_eq!(s, if i == j { Qi::one() } else { Qi::zero() });
            }
        }
        assert!(invert(&[vec![Qi::int(1), Qi::int(2)], vec![Qi::int(2), Qi::int(4)]]).is_none());
    }
}
