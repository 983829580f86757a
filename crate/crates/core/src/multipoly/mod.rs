//! Sparse polynomials in the six ambient variables `x0..x5`.
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors, so iteration order
//! is the lexicographic monomial order with `x0` most significant. The
//! leading term is the last entry of the map. Zero coefficients are never
//! stored.

mod parse;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactnum::{Eisenstein, Field, Rational};
use crate::permgrp::Permutation;

pub use parse::{parse, parse_element, ParseError};

/// Number of ambient variables.
pub const NVARS: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable index {0} out of range 0..6")]
    VariableOutOfRange(usize),
    #[error("index map {0:?} is not a bijection of 0..6")]
    NotBijective(Vec<usize>),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("substitution for x{0} has degree above 1")]
    NonLinearSubstitution(usize),
    #[error("exponent overflow")]
    ExponentOverflow,
}

/// Exponent vector; entry `i` is the exponent of `x_i`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial([u16; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    pub fn new(exponents: [u16; NVARS]) -> Self {
        Monomial(exponents)
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0; NVARS];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u16; NVARS] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn checked_mul(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = [0; NVARS];
        for (k, slot) in e.iter_mut().enumerate() {
            *slot = self.0[k].checked_add(other.0[k])?;
        }
        Some(Monomial(e))
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = [0; NVARS];
        for (k, slot) in e.iter_mut().enumerate() {
            *slot = self.0[k].checked_sub(other.0[k])?;
        }
        Some(Monomial(e))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Polynomial<F> {
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero() -> Self {
        Polynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: F) -> Self {
        Self::monomial(c, Monomial::ONE)
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn monomial(c: F, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    /// The variable `x_i`; panics when `i >= 6`.
    pub fn var(i: usize) -> Self {
        assert!(i < NVARS, "variable index {i} out of range");
        Self::monomial(F::one(), Monomial::var(i))
    }

    /// Builds from `(coefficient, monomial)` pairs, summing repeats.
    pub fn from_terms(terms: impl IntoIterator<Item = (F, Monomial)>) -> Self {
        let mut p = Self::zero();
        for (c, m) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(m, s);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    /// Lex-largest term.
    pub fn leading_term(&self) -> Option<(&Monomial, &F)> {
        self.terms.iter().next_back()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous_of_degree(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    /// The common degree of all terms, if there is one. Zero has none.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.degree()?;
        self.is_homogeneous_of_degree(d).then_some(d)
    }

    /// The constant value, if the polynomial has no non-constant term.
    pub fn as_constant(&self) -> Option<F> {
        match self.degree() {
            None => Some(F::zero()),
            Some(0) => Some(self.coeff(&Monomial::ONE)),
            _ => None,
        }
    }

    /// Whether `x_i` occurs in some term.
    pub fn involves(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.0[i] > 0)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (*m, a.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.checked_mul(m2).ok_or(PolyError::ExponentOverflow)?;
                out.add_term(m, c1.clone() * c2.clone());
            }
        }
        Ok(out)
    }

    pub fn checked_pow(&self, exp: u32) -> Result<Self, PolyError> {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc.checked_mul(self)?;
        }
        Ok(acc)
    }

    pub fn pow(&self, exp: u32) -> Self {
        self.checked_pow(exp).expect("exponent overflow")
    }

    /// Value at a point given by its six coordinates.
    pub fn evaluate(&self, point: &[F; NVARS]) -> F {
        let mut powers: Vec<Vec<F>> = point.iter().map(|x| vec![F::one(), x.clone()]).collect();
        let mut total = F::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap().clone() * point[i].clone();
                    powers[i].push(next);
                }
                if e > 0 {
                    term = term * powers[i][e].clone();
                }
            }
            total = total + term;
        }
        total
    }

    pub fn partial_derivative(&self, i: usize) -> Result<Self, PolyError> {
        if i >= NVARS {
            return Err(PolyError::VariableOutOfRange(i));
        }
        Ok(Self::from_terms(self.terms.iter().filter_map(|(m, c)| {
            let e = m.0[i];
            (e > 0).then(|| {
                let mut d = *m;
                d.0[i] -= 1;
                (c.clone() * F::from_i64(e as i64), d)
            })
        })))
    }

    pub fn gradient(&self) -> [Self; NVARS] {
        std::array::from_fn(|i| self.partial_derivative(i).expect("index in range"))
    }

    /// Simultaneously replaces `x_i` by `assignments[i]` for every assigned
    /// variable. Replacements must have degree at most one.
    pub fn substitute_linear(
        &self,
        assignments: &BTreeMap<usize, Self>,
    ) -> Result<Self, PolyError> {
        for (&i, q) in assignments {
            if i >= NVARS {
                return Err(PolyError::VariableOutOfRange(i));
            }
            if q.degree().unwrap_or(0) > 1 {
                return Err(PolyError::NonLinearSubstitution(i));
            }
        }
        let images: [Self; NVARS] =
            std::array::from_fn(|i| assignments.get(&i).cloned().unwrap_or_else(|| Self::var(i)));
        self.compose_with(&images)
    }

    /// Replaces every `x_i` by `images[i]`.
    fn compose_with(&self, images: &[Self; NVARS]) -> Result<Self, PolyError> {
        let mut cache: Vec<Vec<Self>> = images
            .iter()
            .map(|q| vec![Self::one(), q.clone()])
            .collect();
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut term = Self::constant(c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                let e = e as usize;
                while cache[i].len() <= e {
                    let next = cache[i].last().unwrap().checked_mul(&images[i])?;
                    cache[i].push(next);
                }
                if e > 0 {
                    term = term.checked_mul(&cache[i][e])?;
                }
            }
            out = out + term;
        }
        Ok(out)
    }

    /// Pushforward under a permutation of the variable indices: every
    /// `x_j` becomes `x_{g(j)}`, so `(g.P)(g.p) = P(p)` for the point action
    /// `(g.p)_j = p_{g^-1(j)}`.
    pub fn apply_permutation(&self, g: &Permutation) -> Result<Self, PolyError> {
        if g.degree() != NVARS {
            return Err(PolyError::NotBijective(g.images().to_vec()));
        }
        Ok(self.rename_unchecked(g.images()))
    }

    /// Like [`Polynomial::apply_permutation`] for a raw index map.
    pub fn rename_variables(&self, map: &[usize]) -> Result<Self, PolyError> {
        let ok = map.len() == NVARS && {
            let mut seen = [false; NVARS];
            map.iter()
                .all(|&j| j < NVARS && !std::mem::replace(&mut seen[j], true))
        };
        if !ok {
            return Err(PolyError::NotBijective(map.to_vec()));
        }
        Ok(self.rename_unchecked(map))
    }

    fn rename_unchecked(&self, map: &[usize]) -> Self {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = [0; NVARS];
                    for (j, &k) in m.0.iter().enumerate() {
                        e[map[j]] = k;
                    }
                    (Monomial(e), c.clone())
                })
                .collect(),
        }
    }

    /// Exact quotient `self / divisor`, or `Ok(None)` when the division
    /// leaves a remainder. Uses the lex leading terms.
    pub fn divide_exact(&self, divisor: &Self) -> Result<Option<Self>, PolyError> {
        let (lm, lc) = divisor.leading_term().ok_or(PolyError::DivisionByZero)?;
        let lc_inv = lc.checked_inv().expect("nonzero leading coefficient");
        let mut rest = self.clone();
        let mut quotient = Self::zero();
        while let Some((m, c)) = rest.leading_term() {
            let Some(q) = m.checked_div(lm) else {
                return Ok(None);
            };
            let step = Self::monomial(c.clone() * lc_inv.clone(), q);
            rest = rest - step.checked_mul(divisor)?;
            quotient = quotient + step;
        }
        Ok(Some(quotient))
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            Some((_, c)) => self.scale(&c.checked_inv().expect("nonzero")),
            None => Self::zero(),
        }
    }

    /// Coefficient of `x_i` in a polynomial of degree at most one.
    pub fn linear_coeff(&self, i: usize) -> F {
        self.coeff(&Monomial::var(i))
    }
}

/// The quartic family `L = sum x_i`, `F_t = t sum x_i^4 - (sum x_i^2)^2`.
pub fn quartic_family<F: Field>(t: &Rational) -> (Polynomial<F>, Polynomial<F>) {
    let l = power_sum::<F>(1);
    let f = power_sum::<F>(4).scale(&F::from_rational(t)) - power_sum::<F>(2).pow(2);
    (l, f)
}

/// `sum_i x_i^k`.
pub fn power_sum<F: Field>(k: u16) -> Polynomial<F> {
    Polynomial::from_terms((0..NVARS).map(|i| {
        let mut e = [0; NVARS];
        e[i] = k;
        (F::one(), Monomial(e))
    }))
}

impl<F: Field> Add for Polynomial<F> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl<F: Field> Sub for Polynomial<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<F: Field> Neg for Polynomial<F> {
    type Output = Self;
    fn neg(self) -> Self {
        Polynomial {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<F: Field> Mul for Polynomial<F> {
    type Output = Self;
    /// Panics if an exponent exceeds `u16::MAX`; see [`Polynomial::checked_mul`].
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(&rhs).expect("exponent overflow")
    }
}

impl<F: Field> Zero for Polynomial<F> {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<F: Field> One for Polynomial<F> {
    fn one() -> Self {
        Polynomial::one()
    }
}

/// Terms from the leading one down, in the parser's syntax.
impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let term = format_term(c, m);
            match (k, term.strip_prefix('-')) {
                (0, _) => write!(f, "{term}")?,
                (_, Some(rest)) => write!(f, " - {rest}")?,
                (_, None) => write!(f, " + {term}")?,
            }
        }
        Ok(())
    }
}

fn format_term<F: Field>(c: &F, m: &Monomial) -> String {
    if *m == Monomial::ONE {
        return c.to_string();
    }
    if c.is_one() {
        return m.to_string();
    }
    if (-c.clone()).is_one() {
        return format!("-{m}");
    }
    if c.is_compound() {
        format!("({c})*{m}")
    } else {
        format!("{c}*{m}")
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl<T: Field> Polynomial<Eisenstein<T>> {
    /// The polynomial with every coefficient conjugated (`w -> w^2`).
    pub fn conj(&self) -> Self {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, c.conj())).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational;

    type E = Eisenstein<Rational>;
    type P = Polynomial<E>;

    fn x(i: usize) -> P {
        P::var(i)
    }

    fn c(n: i64) -> P {
        P::constant(E::from_int(n))
    }

    fn w() -> E {
        E::omega()
    }

    fn o() -> [E; 6] {
        [
            E::one(),
            E::one(),
            w(),
            w(),
            E::omega_squared(),
            E::omega_squared(),
        ]
    }

    fn o_prime() -> [E; 6] {
        [-1, -1, -1, 1, 1, 1].map(E::from_int)
    }

    fn q1() -> P {
        parse("x0^2 + x0*x2 + x2^2 + w*(x1^2 + x1*x3 + x3^2)").unwrap()
    }

    fn q2() -> P {
        parse("x0^2 + x0*x2 + x2^2 - (w+1)*(x1^2 + x1*x3 + x3^2)").unwrap()
    }

    #[test]
    fn q1_parses_to_its_terms() {
        let q = q1();
        assert_eq!(q.num_terms(), 6);
        assert_eq!(q.coeff(&Monomial::new([2, 0, 0, 0, 0, 0])), E::one());
        assert_eq!(q.coeff(&Monomial::new([0, 1, 0, 1, 0, 0])), w());
        assert_eq!(q.homogeneous_degree(), Some(2));
    }

    #[test]
    fn cancellation_prunes() {
        assert!(parse::<Rational>("0").unwrap().is_zero());
        assert!(parse::<Rational>("x0 - x0").unwrap().is_zero());
        assert!((q1() * P::zero()).is_zero());
    }

    #[test]
    fn square_of_sum_of_squares_has_21_terms() {
        let s = power_sum::<E>(2);
        assert_eq!((s.clone() * s).num_terms(), 21);
    }

    #[test]
    fn q1_times_q2_golden() {
        // (A + wB)(A + w^2 B) = A^2 - AB + B^2 with A = x0^2+x0x2+x2^2,
        // B = x1^2+x1x3+x3^2
        let a = parse::<Rational>("x0^2 + x0*x2 + x2^2").unwrap();
        let b = parse::<Rational>("x1^2 + x1*x3 + x3^2").unwrap();
        let expected = a.clone() * a.clone() - a.clone() * b.clone() + b.clone() * b;
        let golden = parse::<Rational>(
            "x0^4 + 2*x0^3*x2 + 3*x0^2*x2^2 + 2*x0*x2^3 + x2^4 \
             - x0^2*x1^2 - x0^2*x1*x3 - x0^2*x3^2 - x0*x2*x1^2 - x0*x2*x1*x3 - x0*x2*x3^2 \
             - x2^2*x1^2 - x2^2*x1*x3 - x2^2*x3^2 \
             + x1^4 + 2*x1^3*x3 + 3*x1^2*x3^2 + 2*x1*x3^3 + x3^4",
        )
        .unwrap();
        assert_eq!(expected, golden);
        assert_eq!(q1() * q2(), embed(&golden));
        assert_eq!((q1() * q2()).num_terms(), 19);
    }

    fn embed(p: &Polynomial<Rational>) -> P {
        P::from_terms(p.terms().map(|(m, c)| (E::from_base(c.clone()), *m)))
    }

    #[test]
    fn family_members() {
        let (l, f6) = quartic_family::<E>(&rational(6, 1));
        assert_eq!(l.homogeneous_degree(), Some(1));
        assert_eq!(f6.homogeneous_degree(), Some(4));
        assert!(f6.evaluate(&o()).is_zero());
        assert!(l.evaluate(&o()).is_zero());

        let (_, f2) = quartic_family::<Rational>(&rational(2, 1));
        let burkhardt = parse::<Rational>(
            "2*(x0^4+x1^4+x2^4+x3^4+x4^4+x5^4) - (x0^2+x1^2+x2^2+x3^2+x4^2+x5^2)^2",
        )
        .unwrap();
        assert_eq!(f2, burkhardt);

        let (_, f0) = quartic_family::<Rational>(&rational(0, 1));
        assert_eq!(f0, -(power_sum::<Rational>(2).pow(2)));
    }

    #[test]
    fn evaluations() {
        assert!(q1().evaluate(&o()).is_zero());
        assert!(power_sum::<E>(1).evaluate(&o()).is_zero());
        assert_eq!(power_sum::<E>(2).evaluate(&o_prime()), E::from_int(6));
    }

    #[test]
    fn derivatives() {
        let s4 = power_sum::<E>(4);
        assert_eq!(s4.partial_derivative(0).unwrap(), c(4) * x(0).pow(3));
        assert_eq!(
            s4.partial_derivative(6),
            Err(PolyError::VariableOutOfRange(6))
        );
    }

    #[test]
    fn family_gradient_at_o_and_o_prime() {
        // oracle: dF_t/dx_i = 4t x_i^3 - 4 (sum x^2) x_i; at o, sum x^2 = 0
        // and x_i^3 = 1; at o', sum x^2 = 6 and x_i^3 = x_i
        for t in [rational(6, 1), rational(7, 1), rational(10, 7)] {
            let (_, f) = quartic_family::<E>(&t);
            let four_t = E::from_rational(&t) * E::from_int(4);
            for (i, g) in f.gradient().iter().enumerate() {
                assert_eq!(g.evaluate(&o()), four_t, "o, i = {i}");
                let expected = (four_t.clone() - E::from_int(24)) * o_prime()[i].clone();
                assert_eq!(g.evaluate(&o_prime()), expected, "o', i = {i}");
            }
        }
    }

    #[test]
    fn euler_identity_on_paper_polynomials() {
        let (_, f) = quartic_family::<E>(&rational(10, 7));
        for (p, d) in [(f, 4), (q1(), 2), (q2(), 2)] {
            let lhs = (0..NVARS).fold(P::zero(), |acc, i| {
                acc + x(i) * p.partial_derivative(i).unwrap()
            });
            assert_eq!(lhs, p.scale(&E::from_int(d)));
        }
    }

    #[test]
    fn linear_substitution() {
        let (_, f6) = quartic_family::<E>(&rational(6, 1));
        let sub = BTreeMap::from([(5, -(x(0) + x(2))), (4, -(x(1) + x(3)))]);
        let r = f6.substitute_linear(&sub).unwrap();
        assert!(!r.involves(4) && !r.involves(5));
        // oracle: restriction = 8(A^2 - AB + B^2) = 8 q1 q2
        assert_eq!(r, (q1() * q2()).scale(&E::from_int(8)));

        let ident: BTreeMap<usize, P> = (0..NVARS).map(|i| (i, x(i))).collect();
        assert_eq!(q1().substitute_linear(&ident).unwrap(), q1());
        assert!(x(5)
            .substitute_linear(&BTreeMap::from([(5, P::zero())]))
            .unwrap()
            .is_zero());
        assert_eq!(
            x(0).substitute_linear(&BTreeMap::from([(0, x(1) * x(1))])),
            Err(PolyError::NonLinearSubstitution(0))
        );
    }

    #[test]
    fn permutation_action() {
        let id = Permutation::identity(6);
        assert_eq!(q1().apply_permutation(&id).unwrap(), q1());
        // tau^2 on variables: x0 <-> x1, x3 <-> x4
        let tau_sq = Permutation::from_images(vec![1, 0, 2, 4, 3, 5]).unwrap();
        assert!(q1()
            .apply_permutation(&tau_sq)
            .unwrap()
            .evaluate(&o())
            .is_zero());
        // tau: x0 -> x4, x1 -> x3, x3 -> x0, x4 -> x1
        let tau = Permutation::from_images(vec![4, 3, 2, 0, 1, 5]).unwrap();
        let lin = parse::<Rational>("x0 + x2 + x5").unwrap();
        let moved = embed(&lin).apply_permutation(&tau).unwrap();
        assert_eq!(moved, parse("x4 + x2 + x5").unwrap());
        assert_eq!(moved.evaluate(&o()), E::from_int(-1) + E::omega_squared());
        assert!(q1().rename_variables(&[0, 0, 1, 2, 3, 4]).is_err());
        assert!(q1().apply_permutation(&Permutation::identity(5)).is_err());
    }

    #[test]
    fn exact_division() {
        let prod = q1() * q2();
        assert_eq!(prod.divide_exact(&q1()).unwrap(), Some(q2()));
        let x0sq_plus_x1sq = parse::<Rational>("x0^2 + x1^2").unwrap();
        assert_eq!(
            x0sq_plus_x1sq.divide_exact(&Polynomial::var(0)).unwrap(),
            None
        );
        assert_eq!(
            q1().divide_exact(&P::zero()),
            Err(PolyError::DivisionByZero)
        );
    }

    #[test]
    fn format_is_leading_term_first() {
        assert_eq!(
            q1().to_string(),
            "x0^2 + x0*x2 + w*x1^2 + w*x1*x3 + x2^2 + w*x3^2"
        );
        assert_eq!(P::zero().to_string(), "0");
        let p = parse::<Rational>("-x1 + 3/4*x0*x5 - 2").unwrap();
        assert_eq!(p.to_string(), "3/4*x0*x5 - x1 - 2");
        let q: P = parse("(1 - w)*x3 - w^2").unwrap();
        assert_eq!(q.to_string(), "(1 - w)*x3 + 1 + w");
    }
}
