use super::Rat;
use alloc::string::String;
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use num_traits::{One, Zero};

/// An element of ℚ(i), stored as exact real and imaginary rational
/// parts. Equality is component-wise; the derived `Ord` is the
/// lexicographic order on `(re, im)` and is used only for canonical
/// sorting and map keys, it has no arithmetic meaning.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gauss {
    pub re: Rat,
    pub im: Rat,
}

impl Gauss {
    pub fn new(re: Rat, im: Rat) -> Self {
        Gauss { re, im }
    }

    pub fn from_rat(re: Rat) -> Self {
        Gauss { re, im: Rat::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Gauss::from_rat(super::rat_int(n))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Gauss { re: Rat::zero(), im: Rat::one() }
    }

    pub fn zero() -> Self {
        Gauss { re: Rat::zero(), im: Rat::zero() }
    }

    pub fn one() -> Self {
        Gauss { re: Rat::one(), im: Rat::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Gauss { re: self.re.clone(), im: -self.im.clone() }
    }

    /// `re² + im²`, the field norm down to ℚ. Non-negative, zero iff
    /// the element is zero.
    pub fn norm(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse. Panics on zero; callers guard.
    pub fn inv(&self) -> Self {
        let n = self.norm();
        assert!(!n.is_zero(), "inverse of zero in Q(i)");
        Gauss { re: &self.re / &n, im: -(&self.im / &n) }
    }

    pub fn scale(&self, r: &Rat) -> Self {
        Gauss { re: &self.re * r, im: &self.im * r }
    }

    /// Exact square root in ℚ(i) when one exists. For `w = u + vi` with
    /// `w² = self`: `u² − v² = re` and `2uv = im`, so `u²` solves a
    /// rational quadratic whose discriminant is `norm(self)`.
    pub fn sqrt(&self) -> Option<Gauss> {
        use super::rat_sqrt;
        if self.im.is_zero() {
            return if let Some(u) = rat_sqrt(&self.re) {
                Some(Gauss::from_rat(u))
            } else {
                rat_sqrt(&(-self.re.clone())).map(|v| Gauss::new(Rat::zero(), v))
            };
        }
        let modulus = rat_sqrt(&self.norm())?;
        let half = super::rat_frac(1, 2);
        let u_sq = (&self.re + &modulus) * &half;
        let u = rat_sqrt(&u_sq)?;
        if u.is_zero() {
            return None;
        }
        let v = &self.im / (&u * super::rat_int(2));
        let w = Gauss::new(u, v);
        (&w * &w == *self).then_some(w)
    }
}

impl fmt::Debug for Gauss {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}+{}i)", self.re, self.im)
    }
}

impl fmt::Display for Gauss {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        s.push_str(&super::rat_to_string(&self.re));
        if !self.im.is_zero() {
            s.push('+');
            s.push_str(&super::rat_to_string(&self.im));
            s.push('i');
        }
        f.write_str(&s)
    }
}

impl Add for &Gauss {
    type Output = Gauss;
    fn add(self, rhs: &Gauss) -> Gauss {
        Gauss { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub for &Gauss {
    type Output = Gauss;
    fn sub(self, rhs: &Gauss) -> Gauss {
        Gauss { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul for &Gauss {
    type Output = Gauss;
    fn mul(self, rhs: &Gauss) -> Gauss {
        Gauss {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div for &Gauss {
    type Output = Gauss;
    fn div(self, rhs: &Gauss) -> Gauss {
        self * &rhs.inv()
    }
}

impl Neg for &Gauss {
    type Output = Gauss;
    fn neg(self) -> Gauss {
        Gauss { re: -self.re.clone(), im: -self.im.clone() }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for Gauss {
            type Output = Gauss;
            fn $method(self, rhs: Gauss) -> Gauss {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Gauss {
    type Output = Gauss;
    fn neg(self) -> Gauss {
        -&self
    }
}

impl AddAssign<&Gauss> for Gauss {
    fn add_assign(&mut self, rhs: &Gauss) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Gauss> for Gauss {
    fn sub_assign(&mut self, rhs: &Gauss) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Gauss> for Gauss {
    fn mul_assign(&mut self, rhs: &Gauss) {
        *self = &*self * rhs;
    }
}
