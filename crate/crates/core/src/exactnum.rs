//! Exact scalar arithmetic: the [`Field`] abstraction shared by every
//! container in the crate, the rationals, and the Eisenstein field `Q(w)`
//! with `w^2 + w + 1 = 0`.
//!
//! Elements of `Q(w)` are kept on the basis `{1, w}`. Multiplication folds
//! `w^2` back into `-1 - w` immediately, so two values are equal exactly when
//! their two coordinates are equal.

use std::cmp::Ordering;
use std::fmt::{self, Debug, Display};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Arbitrary-precision rational number in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("division by zero")]
pub struct DivisionByZero;

/// A characteristic-zero field with exact arithmetic.
///
/// The `Ord` bound is a storage order (used for deterministic sorting of
/// points and canonical forms), not a field ordering.
pub trait Field:
    Clone
    + Debug
    + Display
    + Eq
    + Ord
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    /// Multiplicative inverse, `None` for zero.
    fn checked_inv(&self) -> Option<Self>;

    /// The image of a rational number under the embedding `Q -> Self`.
    fn from_rational(q: &Rational) -> Self;

    /// Inverse of [`Field::from_rational`]; `None` when the value is not rational.
    fn to_rational(&self) -> Option<Rational>;

    /// Whether the `Display` form is a sum and must be parenthesised when it
    /// is used as a factor.
    fn is_compound(&self) -> bool {
        false
    }

    /// A primitive cube root of unity, when the field contains one.
    fn cube_root_of_unity() -> Option<Self> {
        None
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self, DivisionByZero> {
        rhs.checked_inv()
            .map(|inv| self.clone() * inv)
            .ok_or(DivisionByZero)
    }

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(n)))
    }
}

impl Field for Rational {
    fn checked_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
}

/// Convenience constructor for `num / den`; panics on a zero denominator.
pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// An element `re + om*w` of the quadratic extension `K(w)` of a base field
/// `K`, where `w` is a primitive cube root of unity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Eisenstein<T> {
    re: T,
    om: T,
}

impl<T: Field> Eisenstein<T> {
    pub fn new(re: T, om: T) -> Self {
        Eisenstein { re, om }
    }

    /// The generator `w`.
    pub fn omega() -> Self {
        Eisenstein::new(T::zero(), T::one())
    }

    /// `w^2 = -1 - w`.
    pub fn omega_squared() -> Self {
        Eisenstein::new(-T::one(), -T::one())
    }

    pub fn from_base(re: T) -> Self {
        Eisenstein::new(re, T::zero())
    }

    /// Coefficient of `1`.
    pub fn re(&self) -> &T {
        &self.re
    }

    /// Coefficient of `w`.
    pub fn om(&self) -> &T {
        &self.om
    }

    /// Image under `w -> w^2`: `a + b*w` maps to `(a - b) - b*w`.
    pub fn conj(&self) -> Self {
        Eisenstein::new(self.re.clone() - self.om.clone(), -self.om.clone())
    }

    /// Field norm down to the base: `N(a + b*w) = a^2 - a*b + b^2`.
    pub fn norm(&self) -> T {
        let (a, b) = (&self.re, &self.om);
        a.clone() * a.clone() - a.clone() * b.clone() + b.clone() * b.clone()
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc *= base.clone();
            }
            base = base.clone() * base;
            exp >>= 1;
        }
        acc
    }
}

impl Eisenstein<Rational> {
    pub fn from_int(n: i64) -> Self {
        Self::from_base(Rational::from_integer(BigInt::from(n)))
    }

    /// `a + b*w` from integer coordinates.
    pub fn from_ints(a: i64, b: i64) -> Self {
        Eisenstein::new(
            Rational::from_integer(BigInt::from(a)),
            Rational::from_integer(BigInt::from(b)),
        )
    }
}

impl<T: Field> Zero for Eisenstein<T> {
    fn zero() -> Self {
        Eisenstein::new(T::zero(), T::zero())
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.om.is_zero()
    }
}

impl<T: Field> One for Eisenstein<T> {
    fn one() -> Self {
        Eisenstein::new(T::one(), T::zero())
    }
}

impl<T: Field> Add for Eisenstein<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Eisenstein::new(self.re + rhs.re, self.om + rhs.om)
    }
}

impl<T: Field> Sub for Eisenstein<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Eisenstein::new(self.re - rhs.re, self.om - rhs.om)
    }
}

impl<T: Field> Neg for Eisenstein<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Eisenstein::new(-self.re, -self.om)
    }
}

impl<T: Field> Mul for Eisenstein<T> {
    type Output = Self;
    // (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2, with w^2 = -1 - w
    fn mul(self, rhs: Self) -> Self {
        let bd = self.om.clone() * rhs.om.clone();
        let re = self.re.clone() * rhs.re.clone() - bd.clone();
        let om = self.re * rhs.om + self.om * rhs.re - bd;
        Eisenstein::new(re, om)
    }
}

impl<T: Field> Div for Eisenstein<T> {
    type Output = Self;
    /// Panics on a zero divisor; see [`Field::checked_div`].
    fn div(self, rhs: Self) -> Self {
        self.checked_div(&rhs).expect("division by zero in Q(w)")
    }
}

impl<T: Field> AddAssign for Eisenstein<T> {
    fn add_assign(&mut self, rhs: Self) {
        *self = self.clone() + rhs;
    }
}

impl<T: Field> SubAssign for Eisenstein<T> {
    fn sub_assign(&mut self, rhs: Self) {
        *self = self.clone() - rhs;
    }
}

impl<T: Field> MulAssign for Eisenstein<T> {
    fn mul_assign(&mut self, rhs: Self) {
        *self = self.clone() * rhs;
    }
}

impl<T: Field> PartialOrd for Eisenstein<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Field> Ord for Eisenstein<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.re.cmp(&other.re).then_with(|| self.om.cmp(&other.om))
    }
}

impl<T: Field> Field for Eisenstein<T> {
    fn checked_inv(&self) -> Option<Self> {
        // x * conj(x) = N(x), so 1/x = conj(x) / N(x)
        let n = self.norm().checked_inv()?;
        let c = self.conj();
        Some(Eisenstein::new(c.re * n.clone(), c.om * n))
    }

    fn from_rational(q: &Rational) -> Self {
        Eisenstein::from_base(T::from_rational(q))
    }

    fn to_rational(&self) -> Option<Rational> {
        if self.om.is_zero() {
            self.re.to_rational()
        } else {
            None
        }
    }

    fn cube_root_of_unity() -> Option<Self> {
        Some(Self::omega())
    }

    fn is_compound(&self) -> bool {
        (!self.re.is_zero() && !self.om.is_zero()) || self.re.is_compound() || self.om.is_compound()
    }
}

/// Formats in the parser's element syntax: `3/4`, `-w`, `2*w`, `1 - 2*w`.
impl<T: Field> Display for Eisenstein<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let om_term = |f: &mut fmt::Formatter<'_>, om: &T| -> fmt::Result {
            if om.is_one() {
                write!(f, "w")
            } else if om.is_compound() {
                write!(f, "({om})*w")
            } else {
                write!(f, "{om}*w")
            }
        };
        match (self.re.is_zero(), self.om.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => {
                if (-self.om.clone()).is_one() {
                    write!(f, "-w")
                } else {
                    om_term(f, &self.om)
                }
            }
            (false, false) => {
                write!(f, "{}", self.re)?;
                if !self.om.is_compound() && self.om.to_string().starts_with('-') {
                    write!(f, " - ")?;
                    om_term(f, &-self.om.clone())
                } else {
                    write!(f, " + ")?;
                    om_term(f, &self.om)
                }
            }
        }
    }
}

impl<T: Field> Debug for Eisenstein<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Eisenstein({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type E = Eisenstein<Rational>;

    fn w() -> E {
        E::omega()
    }

    #[test]
    fn one_plus_omega_squared_is_omega() {
        let x = E::one() + w();
        assert_eq!(x.clone() * x, w());
    }

    #[test]
    fn omega_is_a_cube_root_of_unity() {
        assert_eq!(w() * w(), E::from_ints(-1, -1));
        assert_eq!(w() * E::from_ints(-1, -1), E::one());
        assert_eq!(w().pow(3), E::one());
    }

    #[test]
    fn inverse_of_omega_is_its_square() {
        assert_eq!(E::one().checked_div(&w()).unwrap(), E::from_ints(-1, -1));
        assert_eq!(E::one() / w(), E::omega_squared());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(E::one().checked_div(&E::zero()), Err(DivisionByZero));
        assert_eq!(
            rational(1, 2).checked_div(&Rational::zero()),
            Err(DivisionByZero)
        );
    }

    #[test]
    fn zero_tests() {
        let s = w() + E::from_ints(-1, -1) + E::one();
        assert!(s.is_zero());
        assert!(!(w() - E::omega_squared()).is_zero());
        assert!(E::new(rational(0, 1), rational(0, 1)).is_zero());
    }

    #[test]
    fn rationals_are_canonical() {
        let q = rational(4, -6);
        assert_eq!(q, rational(-2, 3));
        assert_eq!(q.numer(), &BigInt::from(-2));
        assert_eq!(q.denom(), &BigInt::from(3));
        assert_eq!(rational(0, 5).denom(), &BigInt::from(1));
    }

    #[test]
    fn display_forms() {
        assert_eq!(E::zero().to_string(), "0");
        assert_eq!(E::new(rational(3, 4), rational(0, 1)).to_string(), "3/4");
        assert_eq!(w().to_string(), "w");
        assert_eq!((-w()).to_string(), "-w");
        assert_eq!(E::from_ints(0, 2).to_string(), "2*w");
        assert_eq!(E::from_ints(1, -2).to_string(), "1 - 2*w");
        assert_eq!(E::omega_squared().to_string(), "-1 - w");
        assert_eq!(
            E::new(rational(-1, 2), rational(3, 2)).to_string(),
            "-1/2 + 3/2*w"
        );
    }

    #[test]
    fn rational_round_trip_through_embedding() {
        let q = rational(-7, 3);
        assert_eq!(E::from_rational(&q).to_rational(), Some(q));
        assert_eq!(w().to_rational(), None);
    }
}
