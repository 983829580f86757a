//! Small dense matrices over an exact field: rank, reduced row echelon
//! form, Gram matrices of quadrics and the one-parameter proportionality
//! solver used for the singular members of the quartic family.

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::exactnum::{Field, Rational};
use crate::multipoly::{Monomial, Polynomial, NVARS};

/// Largest supported row or column count.
pub const MAX_DIM: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("{rows}x{cols} exceeds the {MAX_DIM}x{MAX_DIM} cap")]
    TooLarge { rows: usize, cols: usize },
    #[error("expected {expected} entries, got {got}")]
    ShapeMismatch { expected: usize, got: usize },
    #[error("form `{0}` is not homogeneous linear")]
    NotLinear(String),
    #[error("form `{0}` is not a homogeneous quadric")]
    NotQuadratic(String),
    #[error("x{0} occurs but is not among the listed variables")]
    ForeignVariable(usize),
    #[error("the reference vector is zero")]
    ZeroVector,
    #[error("a minor forces the non-rational parameter {0}")]
    NonRational(String),
}

#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix<F> {
    rows: usize,
    cols: usize,
    entries: Vec<F>,
}

impl<F: Field> ExactMatrix<F> {
    /// Row-major construction.
    pub fn new(rows: usize, cols: usize, entries: Vec<F>) -> Result<Self, LinalgError> {
        if rows > MAX_DIM || cols > MAX_DIM {
            return Err(LinalgError::TooLarge { rows, cols });
        }
        if entries.len() != rows * cols {
            return Err(LinalgError::ShapeMismatch {
                expected: rows * cols,
                got: entries.len(),
            });
        }
        Ok(ExactMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(LinalgError::ShapeMismatch {
                expected: c,
                got: bad.len(),
            });
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self, LinalgError> {
        Self::new(rows, cols, vec![F::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Result<Self, LinalgError> {
        let mut m = Self::zeros(n, n)?;
        for i in 0..n {
            m.set(i, i, F::one());
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.get(r, c).clone());
            }
        }
        ExactMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::ShapeMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols)?;
        for r in 0..self.rows {
            for c in 0..other.cols {
                let v = (0..self.cols).fold(F::zero(), |acc, k| {
                    acc + self.get(r, k).clone() * other.get(k, c).clone()
                });
                out.set(r, c, v);
            }
        }
        Ok(out)
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| (0..r).all(|c| self.get(r, c) == self.get(c, r)))
    }

    /// Reduced row echelon form and the pivot columns.
    ///
    /// Columns are scanned left to right; in each, the first row at or
    /// below the current one with a nonzero entry becomes the pivot row.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).checked_inv().expect("nonzero pivot");
            for k in 0..m.cols {
                let v = m.get(r, k).clone() * inv.clone();
                m.set(r, k, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for k in 0..m.cols {
                    let v = m.get(i, k).clone() - factor.clone() * m.get(r, k).clone();
                    m.set(i, k, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for k in 0..self.cols {
                self.entries.swap(a * self.cols + k, b * self.cols + k);
            }
        }
    }
}

impl<F: Field> fmt::Debug for ExactMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|r| {
                let cells: Vec<String> = self.row(r).iter().map(|v| v.to_string()).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// Coefficient rows of homogeneous linear forms.
pub fn coefficient_matrix<F: Field>(
    forms: &[Polynomial<F>],
) -> Result<ExactMatrix<F>, LinalgError> {
    let mut rows: Vec<Vec<F>> = Vec::with_capacity(forms.len());
    for f in forms {
        if !f.is_homogeneous_of_degree(1) {
            return Err(LinalgError::NotLinear(f.to_string()));
        }
        rows.push((0..NVARS).map(|i| f.linear_coeff(i)).collect());
    }
    ExactMatrix::new(forms.len(), NVARS, rows.into_iter().flatten().collect())
}

/// Reduced echelon basis of the span of homogeneous linear forms, with
/// pivots scaled to one and zero rows dropped.
pub fn rref_forms<F: Field>(forms: &[Polynomial<F>]) -> Result<Vec<Polynomial<F>>, LinalgError> {
    let (m, pivots) = coefficient_matrix(forms)?.rref();
    Ok((0..pivots.len())
        .map(|r| {
            Polynomial::from_terms(
                m.row(r)
                    .iter()
                    .enumerate()
                    .map(|(i, c)| (c.clone(), Monomial::var(i))),
            )
        })
        .collect())
}

/// Symmetric `M` with `q = x^T M x` over the listed variables.
pub fn gram_matrix<F: Field>(
    q: &Polynomial<F>,
    vars: &[usize],
) -> Result<ExactMatrix<F>, LinalgError> {
    if !q.is_homogeneous_of_degree(2) {
        return Err(LinalgError::NotQuadratic(q.to_string()));
    }
    if let Some(i) = (0..NVARS).find(|&i| q.involves(i) && !vars.contains(&i)) {
        return Err(LinalgError::ForeignVariable(i));
    }
    let n = vars.len();
    let half = F::from_rational(&Rational::new(1.into(), 2.into()));
    let mut m = ExactMatrix::zeros(n, n)?;
    for (a, &i) in vars.iter().enumerate() {
        for (b, &j) in vars.iter().enumerate() {
            let v = if i == j {
                let mut e = [0; NVARS];
                e[i] = 2;
                q.coeff(&Monomial::new(e))
            } else {
                let mut e = [0; NVARS];
                e[i] = 1;
                e[j] = 1;
                q.coeff(&Monomial::new(e)) * half.clone()
            };
            m.set(a, b, v);
        }
    }
    Ok(m)
}

/// Solution set of a one-parameter condition on `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamSolution {
    AllT,
    /// Sorted, without repeats.
    Finite(Vec<Rational>),
    Empty,
}

impl ParamSolution {
    pub fn intersect(&self, other: &ParamSolution) -> ParamSolution {
        match (self, other) {
            (ParamSolution::Empty, _) | (_, ParamSolution::Empty) => ParamSolution::Empty,
            (ParamSolution::AllT, x) | (x, ParamSolution::AllT) => x.clone(),
            (ParamSolution::Finite(a), ParamSolution::Finite(b)) => {
                let common: Vec<Rational> = a.iter().filter(|t| b.contains(t)).cloned().collect();
                ParamSolution::from_roots(common)
            }
        }
    }

    pub fn contains(&self, t: &Rational) -> bool {
        match self {
            ParamSolution::AllT => true,
            ParamSolution::Finite(v) => v.contains(t),
            ParamSolution::Empty => false,
        }
    }

    fn from_roots(mut roots: Vec<Rational>) -> ParamSolution {
        roots.sort();
        roots.dedup();
        if roots.is_empty() {
            ParamSolution::Empty
        } else {
            ParamSolution::Finite(roots)
        }
    }
}

impl fmt::Display for ParamSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamSolution::AllT => write!(f, "all t"),
            ParamSolution::Empty => write!(f, "{{}}"),
            ParamSolution::Finite(v) => {
                let parts: Vec<String> = v.iter().map(|t| t.to_string()).collect();
                write!(f, "{{{}}}", parts.join(", "))
            }
        }
    }
}

/// Common zero set of conditions `a_k + b_k t = 0`.
///
/// A condition with `b_k = 0` holds for all `t` or none. The remaining
/// conditions each have one root; if the roots disagree the set is empty,
/// and a single common root must be rational.
pub fn solve_linear_conditions<F: Field>(
    conditions: &[(F, F)],
) -> Result<ParamSolution, LinalgError> {
    let mut root: Option<F> = None;
    let mut disagree = false;
    for (a, b) in conditions {
        if b.is_zero() {
            if !a.is_zero() {
                return Ok(ParamSolution::Empty);
            }
            continue;
        }
        let r = -a.checked_div(b).expect("nonzero");
        match &root {
            None => root = Some(r),
            Some(prev) if *prev != r => disagree = true,
            Some(_) => {}
        }
    }
    if disagree {
        return Ok(ParamSolution::Empty);
    }
    match root {
        None => Ok(ParamSolution::AllT),
        Some(r) => r
            .to_rational()
            .map(|q| ParamSolution::Finite(vec![q]))
            .ok_or_else(|| LinalgError::NonRational(r.to_string())),
    }
}

/// All `t` for which `v0 + t v1` is proportional to `w`, i.e. the 2x6
/// matrix `[v0 + t v1; w]` has rank at most one.
///
/// Each 2x2 minor `(v0_i + t v1_i) w_j - (v0_j + t v1_j) w_i` is linear
/// in `t`; their common zeros are the answer.
pub fn solve_parametric_proportionality<F: Field>(
    v0: &[F; NVARS],
    v1: &[F; NVARS],
    w: &[F; NVARS],
) -> Result<ParamSolution, LinalgError> {
    if w.iter().all(Zero::is_zero) {
        return Err(LinalgError::ZeroVector);
    }
    let mut conditions = Vec::new();
    for i in 0..NVARS {
        for j in i + 1..NVARS {
            let a = v0[i].clone() * w[j].clone() - v0[j].clone() * w[i].clone();
            let b = v1[i].clone() * w[j].clone() - v1[j].clone() * w[i].clone();
            conditions.push((a, b));
        }
    }
    solve_linear_conditions(&conditions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rational, Eisenstein};
    use crate::multipoly::parse;
    use num_traits::One;

    type E = Eisenstein<Rational>;

    fn e(n: i64) -> E {
        E::from_int(n)
    }

    fn q1() -> Polynomial<E> {
        parse("x0^2 + x0*x2 + x2^2 + w*(x1^2 + x1*x3 + x3^2)").unwrap()
    }

    #[test]
    fn ranks() {
        assert_eq!(ExactMatrix::<E>::identity(4).unwrap().rank(), 4);
        assert_eq!(ExactMatrix::<E>::zeros(3, 5).unwrap().rank(), 0);
        let m = ExactMatrix::from_rows(vec![
            vec![e(1), e(2), e(3)],
            vec![e(2), e(4), e(6)],
            vec![e(0), e(1), E::omega()],
        ])
        .unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.transpose().rank(), 2);
    }

    #[test]
    fn size_cap() {
        assert_eq!(
            ExactMatrix::<E>::zeros(17, 2),
            Err(LinalgError::TooLarge { rows: 17, cols: 2 })
        );
        assert!(ExactMatrix::<E>::new(2, 2, vec![e(1)]).is_err());
    }

    #[test]
    fn q1_gram_matrix() {
        let g = gram_matrix(&q1(), &[0, 1, 2, 3]).unwrap();
        let half = E::from_rational(&rational(1, 2));
        let w = E::omega();
        assert!(g.is_symmetric());
        for (i, d) in [e(1), w.clone(), e(1), w.clone()].into_iter().enumerate() {
            assert_eq!(*g.get(i, i), d);
        }
        assert_eq!(*g.get(0, 2), half);
        assert_eq!(*g.get(1, 3), w * half);
        assert_eq!(*g.get(0, 1), E::zero());
        assert_eq!(g.rank(), 4);
    }

    #[test]
    fn q1_gram_determinant_oracle() {
        // block-diagonal: det [[1, 1/2], [1/2, 1]] * det [[w, w/2], [w/2, w]]
        // = (3/4) * (3 w^2 / 4)
        let det = E::from_rational(&rational(3, 4))
            * E::from_rational(&rational(3, 4))
            * E::omega_squared();
        assert!(!det.is_zero());
    }

    #[test]
    fn small_gram_matrices() {
        let q: Polynomial<Rational> = parse("x0^2 + x0*x2").unwrap();
        let g = gram_matrix(&q, &[0, 2]).unwrap();
        let expected = ExactMatrix::from_rows(vec![
            vec![rational(1, 1), rational(1, 2)],
            vec![rational(1, 2), rational(0, 1)],
        ])
        .unwrap();
        assert_eq!(g, expected);
        let z = gram_matrix(&Polynomial::<Rational>::zero(), &[0, 1]).unwrap();
        assert_eq!(z.rank(), 0);
        assert_eq!(gram_matrix(&q, &[0]), Err(LinalgError::ForeignVariable(2)));
        let cubic: Polynomial<Rational> = parse("x0^3").unwrap();
        assert!(matches!(
            gram_matrix(&cubic, &[0]),
            Err(LinalgError::NotQuadratic(_))
        ));
    }

    #[test]
    fn echelon_forms() {
        let a: Polynomial<E> = parse("x0 + x2 + x5").unwrap();
        let b: Polynomial<E> = parse("x1 + x3 + x4").unwrap();
        assert_eq!(
            rref_forms(&[a.clone(), b.clone()]).unwrap(),
            vec![a.clone(), b]
        );
        let a2: Polynomial<E> = parse("2*x0 + 2*x2 + 2*x5").unwrap();
        assert_eq!(rref_forms(&[a.clone(), a2]).unwrap(), vec![a]);

        let t1: Polynomial<E> = parse("x4 + x2 + x5").unwrap();
        let t2: Polynomial<E> = parse("x3 + x0 + x1").unwrap();
        let (_, pivots) = coefficient_matrix(&[t1.clone(), t2.clone()])
            .unwrap()
            .rref();
        assert_eq!(pivots, vec![0, 2]);
        assert_eq!(rref_forms(&[t1, t2.clone()]).unwrap()[0], t2);

        let affine: Polynomial<E> = parse("x0 + 1").unwrap();
        assert!(rref_forms(&[affine]).is_err());
    }

    #[test]
    fn proportionality() {
        let zero: [E; 6] = std::array::from_fn(|_| E::zero());
        let ones: [E; 6] = std::array::from_fn(|_| E::one());
        assert_eq!(
            solve_parametric_proportionality(&zero, &ones, &ones).unwrap(),
            ParamSolution::AllT
        );

        // at o' = (-1,-1,-1,1,1,1): grad of -(sum x^2)^2 is -24 x, grad of
        // sum x^4 is 4 x^3 = 4 x; minors are 4 (t - 6)(x_i - x_j)
        let o_prime = [-1, -1, -1, 1, 1, 1].map(e);
        let v0 = o_prime.clone().map(|x| x * e(-24));
        let v1 = o_prime.map(|x| x * e(4));
        assert_eq!(
            solve_parametric_proportionality(&v0, &v1, &ones).unwrap(),
            ParamSolution::Finite(vec![rational(6, 1)])
        );

        let mut a = zero.clone();
        a[0] = e(1);
        let mut b = zero.clone();
        b[1] = e(1);
        assert_eq!(
            solve_parametric_proportionality(&a, &zero, &b).unwrap(),
            ParamSolution::Empty
        );
        assert_eq!(
            solve_parametric_proportionality(&a, &zero, &zero),
            Err(LinalgError::ZeroVector)
        );
    }

    #[test]
    fn non_rational_common_root_is_an_error() {
        // [(t - w, 0, ...); (0, 1, ...)] drops rank only at t = w
        let mut v0: [E; 6] = std::array::from_fn(|_| E::zero());
        let mut v1 = v0.clone();
        let mut w = v0.clone();
        v0[0] = -E::omega();
        v1[0] = e(1);
        w[1] = e(1);
        assert!(matches!(
            solve_parametric_proportionality(&v0, &v1, &w),
            Err(LinalgError::NonRational(_))
        ));
    }

    #[test]
    fn intersections() {
        let six = ParamSolution::Finite(vec![rational(6, 1)]);
        assert_eq!(ParamSolution::AllT.intersect(&six), six);
        assert_eq!(six.intersect(&ParamSolution::Empty), ParamSolution::Empty);
        let other = ParamSolution::Finite(vec![rational(2, 1)]);
        assert_eq!(six.intersect(&other), ParamSolution::Empty);
        assert_eq!(six.to_string(), "{6}");
    }
}
