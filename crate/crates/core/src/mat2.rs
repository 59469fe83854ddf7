//! 2x2 matrices over any of the scalar rings used in the crate.

use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;

use crate::poly::{Alphabet, Poly};
use crate::qi::Qi;
use crate::zh::Zh;

pub trait Ring: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
}

macro_rules! ring_via_refs {
    ($t:ty, $zero:expr, $one:expr, $is_zero:expr) => {
        impl Ring for $t {
            fn zero() -> Self {
                $zero
            }
            fn one() -> Self {
                $one
            }
            fn add(&self, o: &Self) -> Self {
                self + o
            }
            fn sub(&self, o: &Self) -> Self {
                self - o
            }
            fn mul(&self, o: &Self) -> Self {
                self * o
            }
            fn neg(&self) -> Self {
                -self
            }
            fn is_zero(&self) -> bool {
                let f: fn(&Self) -> bool = $is_zero;
                f(self)
            }
        }
    };
}

ring_via_refs!(Qi, Qi::zero(), Qi::one(), |x| x.is_zero());
ring_via_refs!(Poly, Poly::zero(), Poly::one(), |x| x.is_zero());
ring_via_refs!(Zh, Zh::zero(), Zh::one(), |x| x.is_zero());

impl Ring for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        *self == Complex64::new(0.0, 0.0)
    }
}

/// Row-major `[[m[0], m[1]], [m[2], m[3]]]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat2<T>(pub [T; 4]);

impl<T: Ring> Mat2<T> {
    pub fn new(a: T, b: T, c: T, d: T) -> Self {
        Mat2([a, b, c, d])
    }

    pub fn zero() -> Self {
        Mat2([T::zero(), T::zero(), T::zero(), T::zero()])
    }

    pub fn identity() -> Self {
        Mat2([T::one(), T::zero(), T::zero(), T::one()])
    }

    pub fn scalar(s: T) -> Self {
        Mat2([s.clone(), T::zero(), T::zero(), s])
    }

    pub fn at(&self, r: usize, c: usize) -> &T {
        &self.0[2 * r + c]
    }

    pub fn map<U, F: Fn(&T) -> U>(&self, f: F) -> Mat2<U> {
        let [a, b, c, d] = &self.0;
        Mat2([f(a), f(b), f(c), f(d)])
    }

    pub fn trace(&self) -> T {
        self.0[0].add(&self.0[3])
    }

    pub fn det(&self) -> T {
        self.0[0].mul(&self.0[3]).sub(&self.0[1].mul(&self.0[2]))
    }

    /// Adjugate `(d, -b; -c, a)`, so that `M * M^+ = det(M) * 1`.
    pub fn adjugate(&self) -> Self {
        let [a, b, c, d] = &self.0;
        Mat2([d.clone(), b.neg(), c.neg(), a.clone()])
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| x.mul(s))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Ring::is_zero)
    }
}

impl<T: Ring> Add for &Mat2<T> {
    type Output = Mat2<T>;
    fn add(self, o: &Mat2<T>) -> Mat2<T> {
        Mat2(std::array::from_fn(|i| self.0[i].add(&o.0[i])))
    }
}

impl<T: Ring> Sub for &Mat2<T> {
    type Output = Mat2<T>;
    fn sub(self, o: &Mat2<T>) -> Mat2<T> {
        Mat2(std::array::from_fn(|i| self.0[i].sub(&o.0[i])))
    }
}

impl<T: Ring> Mul for &Mat2<T> {
    type Output = Mat2<T>;
    fn mul(self, o: &Mat2<T>) -> Mat2<T> {
        let e = |r: usize, c: usize| self.at(r, 0).mul(o.at(0, c)).add(&self.at(r, 1).mul(o.at(1, c)));
        Mat2([e(0, 0), e(0, 1), e(1, 0), e(1, 1)])
    }
}

impl Mat2<Zh> {
    /// The coordinate matrix `X` of an alphabet.
    pub fn of(a: Alphabet) -> Self {
        Mat2(a.vars().map(Zh::var))
    }

    /// `conjugate_Z`: the quaternionic conjugate, i.e. the adjugate.
    pub fn conjugate(&self) -> Self {
        self.adjugate()
    }

    /// `df = (d11 f, d21 f; d12 f, d22 f)` in alphabet `a`.
    pub fn dee(f: &Zh, a: Alphabet) -> Self {
        let d = |r: usize, c: usize| f.partial(a.var(r, c));
        Mat2([d(0, 0), d(1, 0), d(0, 1), d(1, 1)])
    }

    /// `d^+ f`, the adjugate pattern applied to `df`.
    pub fn dee_plus(f: &Zh, a: Alphabet) -> Self {
        Self::dee(f, a).adjugate()
    }

    pub fn laplacian(&self, a: Alphabet) -> Self {
        self.map(|x| x.laplacian(a))
    }

    pub fn mul_zh(&self, s: &Zh) -> Self {
        self.map(|x| x * s)
    }

    pub fn from_qi(m: &Mat2<Qi>) -> Self {
        m.map(|x| Zh::constant(x.clone()))
    }
}

impl Mat2<Qi> {
    pub fn inverse(&self) -> Option<Self> {
        let d = self.det().inv().ok()?;
        Some(self.adjugate().scale(&d))
    }

    pub fn to_c64(&self) -> Mat2<Complex64> {
        self.map(Qi::to_c64)
    }
}

impl Mat2<Complex64> {
    pub fn inverse(&self) -> Self {
        let d = self.det();
        self.adjugate().map(|x| x / d)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|x| x.norm_sqr()).sum()
    }
}
