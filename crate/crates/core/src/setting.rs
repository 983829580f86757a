//! The concrete objects of the `S6`-quartic setting: the label
//! permutations `tau`, `h`, `s`, the points `o` and `o'`, the two quadrics
//! in the 3-plane `x0 + x2 + x5 = x1 + x3 + x4 = 0`, and the family `X_t`.

use std::collections::BTreeMap;

use num_traits::One;

use crate::exactnum::Rational;
use crate::multipoly::{parse, quartic_family};
use crate::permgrp::{LabelDictionary, PermGroup, Permutation};
use crate::varieties::{factor_by_quadrics, FactorizationReport, VarietyError};
use crate::{Eis, Point, Poly, Variety};

pub const Q1_TEXT: &str = "x0^2 + x0*x2 + x2^2 + w*(x1^2 + x1*x3 + x3^2)";
pub const Q2_TEXT: &str = "x0^2 + x0*x2 + x2^2 - (w + 1)*(x1^2 + x1*x3 + x3^2)";

fn oneline(images: [usize; 5]) -> Permutation {
    Permutation::from_oneline(&images).expect("valid one-line permutation")
}

/// `[1,3,5,2,4]`: fixes 1 and cycles `2 -> 3 -> 5 -> 4 -> 2`.
pub fn tau() -> Permutation {
    oneline([1, 3, 5, 2, 4])
}

/// `[2,3,4,5,1]`.
pub fn h() -> Permutation {
    oneline([2, 3, 4, 5, 1])
}

/// `[2,1,3,4,5]`, the transposition of labels 1 and 2.
pub fn s() -> Permutation {
    oneline([2, 1, 3, 4, 5])
}

/// `h^a tau^b`.
pub fn h_tau(a: u32, b: u32) -> Permutation {
    h().pow(a).compose(&tau().pow(b)).expect("degree 5")
}

/// `<tau, h>`, of order 20.
pub fn group_g() -> PermGroup {
    PermGroup::generate(5, &[tau(), h()], 120).expect("order 20")
}

/// Induced permutation of `x0..x5` under the standard dictionary.
pub fn variable_permutation(sigma: &Permutation) -> Permutation {
    LabelDictionary::default()
        .induced_variable_permutation(sigma)
        .expect("degree-5 label permutation")
}

/// `o = [1:1:w:w:w^2:w^2]`.
pub fn point_o() -> Point {
    Point::new([
        Eis::one(),
        Eis::one(),
        Eis::omega(),
        Eis::omega(),
        Eis::omega_squared(),
        Eis::omega_squared(),
    ])
    .expect("nonzero")
}

/// `o' = [-1:-1:-1:1:1:1]`.
pub fn point_o_prime() -> Point {
    Point::from_ints([-1, -1, -1, 1, 1, 1]).expect("nonzero")
}

pub fn p3_linear_forms() -> Vec<Poly> {
    vec![
        parse("x0 + x2 + x5").expect("valid"),
        parse("x1 + x3 + x4").expect("valid"),
    ]
}

/// The quadric of `Q1` in the coordinates `x0..x3` of the 3-plane.
pub fn quadric_q1() -> Poly {
    parse(Q1_TEXT).expect("valid")
}

pub fn quadric_q2() -> Poly {
    parse(Q2_TEXT).expect("valid")
}

pub fn q1() -> Variety {
    Variety::new(p3_linear_forms(), vec![quadric_q1()]).expect("well-formed")
}

pub fn q2() -> Variety {
    Variety::new(p3_linear_forms(), vec![quadric_q2()]).expect("well-formed")
}

/// `Q_i` for `i` in `{1, 2}`.
pub fn quadric_variety(i: usize) -> Variety {
    match i {
        1 => q1(),
        2 => q2(),
        _ => panic!("only Q1 and Q2 exist"),
    }
}

/// `X_t = {L = F_t = 0}`.
pub fn family_variety(t: &Rational) -> Variety {
    let (l, f) = quartic_family::<Eis>(t);
    Variety::new(vec![l], vec![f]).expect("well-formed")
}

/// Restricts a polynomial to the 3-plane by `x5 -> -x0 - x2`,
/// `x4 -> -x1 - x3`.
pub fn restrict_to_p3(f: &Poly) -> Result<Poly, VarietyError> {
    let x = Poly::var;
    let sub = BTreeMap::from([(5, -(x(0) + x(2))), (4, -(x(1) + x(3)))]);
    Ok(f.substitute_linear(&sub)?)
}

/// Whether `F_t` restricted to the 3-plane is a constant multiple of
/// `q1 q2`.
pub fn restriction_factorization_check(
    t: &Rational,
) -> Result<FactorizationReport<Eis>, VarietyError> {
    let (_, f) = quartic_family::<Eis>(t);
    factor_by_quadrics(&restrict_to_p3(&f)?, &quadric_q1(), &quadric_q2())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational;

    #[test]
    fn factorization_at_six() {
        // oracle: on the plane sum x^2 = 2(A + B), sum x^4 = 2(A^2 + B^2),
        // so F_6 = 8(A^2 - AB + B^2) = 8 (A + wB)(A + w^2 B)
        let r = restriction_factorization_check(&rational(6, 1)).unwrap();
        assert!(r.factors);
        assert_eq!(r.scalar, Some(Eis::from_int(8)));
    }

    #[test]
    fn factorization_fails_at_two() {
        // F_2 restricts to -8AB
        let r = restriction_factorization_check(&rational(2, 1)).unwrap();
        assert!(!r.factors);
        assert_eq!(r.scalar, None);
    }

    #[test]
    fn product_of_quadrics_factors_with_unit_scalar() {
        let r = factor_by_quadrics(&(quadric_q1() * quadric_q2()), &quadric_q1(), &quadric_q2())
            .unwrap();
        assert_eq!(r.scalar, Some(Eis::one()));
    }

    #[test]
    fn quadrics_pass_through_o() {
        assert!(q1().contains(&point_o()));
        assert!(q2().contains(&point_o()));
        assert!(!q1().contains(&point_o_prime()));
    }

    #[test]
    fn group_elements_are_h_tau_words() {
        let g = group_g();
        let mut words: Vec<Permutation> = (0..5)
            .flat_map(|a| (0..4).map(move |b| h_tau(a, b)))
            .collect();
        words.sort();
        words.dedup();
        assert_eq!(words.as_slice(), g.elements());
    }
}
