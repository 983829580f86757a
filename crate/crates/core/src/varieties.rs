//! Projective points and linear slices of `P^5`, the group actions on them,
//! incidence bookkeeping, and singularity tests along the quartic family.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::exactnum::{Field, Rational};
use crate::linalg::{
    rref_forms, solve_linear_conditions, solve_parametric_proportionality, ExactMatrix,
    LinalgError, ParamSolution,
};
use crate::multipoly::{
    parse_element, power_sum, quartic_family, ParseError, PolyError, Polynomial, NVARS,
};
use crate::permgrp::{GroupError, LabelDictionary, PermGroup, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VarietyError {
    #[error("the zero vector is not a projective point")]
    ZeroPoint,
    #[error("`{0}` is not homogeneous of the required degree")]
    NotHomogeneous(String),
    #[error("degenerate variety: {0}")]
    Degenerate(String),
    #[error("{0} is a smooth point")]
    SmoothPoint(String),
    #[error("{0} does not lie on the hyperplane")]
    NotOnHyperplane(String),
    #[error("no variable can be eliminated in the chart of {0}")]
    NoEliminableVariable(String),
    #[error("enumeration of {needed} tuples exceeds the cap of {cap}")]
    CapExceeded { needed: u128, cap: u64 },
    #[error("point syntax: {0}")]
    PointSyntax(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A point of `P^5`, scaled so that its first nonzero coordinate is one.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjectivePoint<F> {
    coords: [F; NVARS],
}

impl<F: Field> ProjectivePoint<F> {
    pub fn new(coords: [F; NVARS]) -> Result<Self, VarietyError> {
        let lead = coords
            .iter()
            .find(|c| !c.is_zero())
            .ok_or(VarietyError::ZeroPoint)?;
        let inv = lead.checked_inv().expect("nonzero");
        Ok(ProjectivePoint {
            coords: coords.map(|c| c * inv.clone()),
        })
    }

    pub fn from_ints(coords: [i64; NVARS]) -> Result<Self, VarietyError> {
        Self::new(coords.map(F::from_i64))
    }

    pub fn coords(&self) -> &[F; NVARS] {
        &self.coords
    }

    /// Index of the first nonzero coordinate (which equals one).
    pub fn chart(&self) -> usize {
        self.coords
            .iter()
            .position(|c| !c.is_zero())
            .expect("nonzero point")
    }

    /// `(g.p)_j = p_{g^-1(j)}`: the coordinate at `i` moves to `g(i)`.
    pub fn act(&self, g: &Permutation) -> Result<Self, VarietyError> {
        if g.degree() != NVARS {
            return Err(GroupError::DegreeMismatch(NVARS, g.degree()).into());
        }
        let mut coords: [F; NVARS] = std::array::from_fn(|_| F::zero());
        for (i, c) in self.coords.iter().enumerate() {
            coords[g.apply(i)] = c.clone();
        }
        Self::new(coords)
    }

    pub fn vanishes(&self, f: &Polynomial<F>) -> bool {
        f.evaluate(&self.coords).is_zero()
    }

    /// Parses `[c0, c1, c2, c3, c4, c5]` with entries in the element syntax.
    pub fn parse(text: &str) -> Result<Self, VarietyError> {
        let inner = text
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| VarietyError::PointSyntax(format!("expected `[...]`, got `{text}`")))?;
        let entries = inner
            .split(',')
            .map(parse_element::<F>)
            .collect::<Result<Vec<F>, _>>()?;
        let coords: [F; NVARS] = entries.try_into().map_err(|v: Vec<F>| {
            VarietyError::PointSyntax(format!("expected 6 coordinates, got {}", v.len()))
        })?;
        Self::new(coords)
    }
}

impl<F: Field> fmt::Display for ProjectivePoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl<F: Field> fmt::Debug for ProjectivePoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The subvariety of `P^5` cut out by some linear forms and some forms of
/// higher degree. Linear forms are kept in reduced echelon form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LinearSliceVariety<F> {
    linear_forms: Vec<Polynomial<F>>,
    forms: Vec<Polynomial<F>>,
}

/// Normal form of a [`LinearSliceVariety`].
///
/// Each higher-degree form has the pivot variables of the linear part
/// eliminated and is scaled to a monic lex-leading term. For one linear
/// subspace and one hypersurface this determines the variety; with several
/// forms, equal normal forms still imply equal varieties.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CanonicalVariety<F> {
    pub linear_forms: Vec<Polynomial<F>>,
    pub forms: Vec<Polynomial<F>>,
}

impl<F: Field> fmt::Display for CanonicalVariety<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let all: Vec<String> = self
            .linear_forms
            .iter()
            .chain(&self.forms)
            .map(|p| p.to_string())
            .collect();
        write!(f, "{{{}}}", all.join("; "))
    }
}

impl<F: Field> fmt::Debug for CanonicalVariety<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<F: Field> LinearSliceVariety<F> {
    pub fn new(
        linear_forms: Vec<Polynomial<F>>,
        forms: Vec<Polynomial<F>>,
    ) -> Result<Self, VarietyError> {
        if let Some(bad) = linear_forms.iter().find(|l| !l.is_homogeneous_of_degree(1)) {
            return Err(VarietyError::NotHomogeneous(bad.to_string()));
        }
        if let Some(bad) = forms
            .iter()
            .find(|f| f.homogeneous_degree().is_none_or(|d| d < 2))
        {
            return Err(VarietyError::NotHomogeneous(bad.to_string()));
        }
        Ok(LinearSliceVariety {
            linear_forms: rref_forms(&linear_forms)?,
            forms,
        })
    }

    pub fn linear_forms(&self) -> &[Polynomial<F>] {
        &self.linear_forms
    }

    pub fn forms(&self) -> &[Polynomial<F>] {
        &self.forms
    }

    pub fn contains(&self, p: &ProjectivePoint<F>) -> bool {
        self.linear_forms
            .iter()
            .chain(&self.forms)
            .all(|f| p.vanishes(f))
    }

    /// Image under a permutation of the variables (pushforward).
    pub fn act(&self, g: &Permutation) -> Result<Self, VarietyError> {
        let push = |v: &[Polynomial<F>]| {
            v.iter()
                .map(|f| f.apply_permutation(g))
                .collect::<Result<Vec<_>, _>>()
        };
        Self::new(push(&self.linear_forms)?, push(&self.forms)?)
    }

    pub fn canonicalize(&self) -> Result<CanonicalVariety<F>, VarietyError> {
        let mut assignments = BTreeMap::new();
        for l in &self.linear_forms {
            let (pivot_mono, _) = l.leading_term().expect("nonzero echelon row");
            let pivot = (0..NVARS)
                .find(|&i| pivot_mono.exponents()[i] == 1)
                .expect("linear monomial");
            // pivot coefficient is one: x_p = x_p - l
            assignments.insert(pivot, Polynomial::var(pivot) - l.clone());
        }
        let mut forms = Vec::with_capacity(self.forms.len());
        for f in &self.forms {
            let reduced = f.substitute_linear(&assignments)?;
            if reduced.is_zero() {
                return Err(VarietyError::Degenerate(format!(
                    "`{f}` vanishes on the linear subspace"
                )));
            }
            forms.push(reduced.monic());
        }
        forms.sort();
        forms.dedup();
        Ok(CanonicalVariety {
            linear_forms: self.linear_forms.clone(),
            forms,
        })
    }

    pub fn variety_eq(&self, other: &Self) -> Result<bool, VarietyError> {
        Ok(self.canonicalize()? == other.canonicalize()?)
    }
}

impl<F: Field> fmt::Display for LinearSliceVariety<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let all: Vec<String> = self
            .linear_forms
            .iter()
            .chain(&self.forms)
            .map(|p| p.to_string())
            .collect();
        write!(f, "{{{}}}", all.join("; "))
    }
}

impl<F: Field> fmt::Debug for LinearSliceVariety<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Clone)]
pub struct IncidenceEntry<F> {
    /// The group element in its original (label) form.
    pub element: Permutation,
    pub variety: LinearSliceVariety<F>,
    pub contains_point: bool,
}

/// Which translates `g(V)` pass through a point, grouped by variety.
#[derive(Clone)]
pub struct IncidenceMultiset<F> {
    pub entries: Vec<IncidenceEntry<F>>,
    /// In first-hit order over the group's sorted elements.
    pub distinct_through_point: Vec<CanonicalVariety<F>>,
    pub multiplicity: BTreeMap<CanonicalVariety<F>, usize>,
}

impl<F> IncidenceMultiset<F> {
    pub fn hits(&self) -> usize {
        self.entries.iter().filter(|e| e.contains_point).count()
    }
}

/// Tabulates `g(V) ∋ p` for every `g` of a label group acting on the
/// variables through `dict`.
pub fn incidence_table<F: Field>(
    g: &PermGroup,
    dict: &LabelDictionary,
    v: &LinearSliceVariety<F>,
    p: &ProjectivePoint<F>,
) -> Result<IncidenceMultiset<F>, VarietyError> {
    let mut entries = Vec::with_capacity(g.order());
    let mut distinct = Vec::new();
    let mut multiplicity = BTreeMap::new();
    for sigma in g.elements() {
        let image = v.act(&dict.induced_variable_permutation(sigma)?)?;
        let hit = image.contains(p);
        if hit {
            let canon = image.canonicalize()?;
            let count = multiplicity.entry(canon.clone()).or_insert(0);
            if *count == 0 {
                distinct.push(canon);
            }
            *count += 1;
        }
        entries.push(IncidenceEntry {
            element: sigma.clone(),
            variety: image,
            contains_point: hit,
        });
    }
    Ok(IncidenceMultiset {
        entries,
        distinct_through_point: distinct,
        multiplicity,
    })
}

/// Orbit of `p` under a group of coordinate permutations, sorted.
pub fn projective_orbit<F: Field>(
    g: &PermGroup,
    p: &ProjectivePoint<F>,
) -> Result<Vec<ProjectivePoint<F>>, VarietyError> {
    let mut orbit = g
        .elements()
        .iter()
        .map(|s| p.act(s))
        .collect::<Result<Vec<_>, _>>()?;
    orbit.sort();
    orbit.dedup();
    Ok(orbit)
}

fn eval_gradient<F: Field>(f: &Polynomial<F>, p: &ProjectivePoint<F>) -> [F; NVARS] {
    f.gradient().map(|g| g.evaluate(p.coords()))
}

/// Jacobian criterion for the complete intersection `L = F = 0` in `P^5`.
pub fn is_singular_point<F: Field>(
    l: &Polynomial<F>,
    f: &Polynomial<F>,
    p: &ProjectivePoint<F>,
) -> bool {
    if !p.vanishes(l) || !p.vanishes(f) {
        return false;
    }
    let rows = [eval_gradient(l, p), eval_gradient(f, p)];
    let jac =
        ExactMatrix::new(2, NVARS, rows.into_iter().flatten().collect()).expect("2x6 within cap");
    jac.rank() <= 1
}

pub fn is_singular_on_family<F: Field>(t: &Rational, p: &ProjectivePoint<F>) -> bool {
    let (l, f) = quartic_family::<F>(t);
    is_singular_point(&l, &f, p)
}

/// Rank of the Hessian of the local equation of `L = F = 0` at a singular
/// point `p`.
///
/// The chart is `x_k = 1` for the first nonzero coordinate `k` of `p`; then
/// the lowest-index other variable with a nonzero coefficient in `L` is
/// solved for, leaving a polynomial in four affine coordinates.
pub fn local_hessian_rank<F: Field>(
    l: &Polynomial<F>,
    f: &Polynomial<F>,
    p: &ProjectivePoint<F>,
) -> Result<usize, VarietyError> {
    if !is_singular_point(l, f, p) {
        return Err(VarietyError::SmoothPoint(p.to_string()));
    }
    let k = p.chart();
    let mut assignments = BTreeMap::from([(k, Polynomial::one())]);
    let l_aff = l.substitute_linear(&assignments)?;
    let m = (0..NVARS)
        .find(|&i| i != k && !l.linear_coeff(i).is_zero())
        .ok_or_else(|| VarietyError::NoEliminableVariable(p.to_string()))?;
    let cm_inv = l.linear_coeff(m).checked_inv().expect("nonzero");
    // x_m = x_m - L_aff / c_m
    let solved = Polynomial::var(m) - l_aff.scale(&cm_inv);
    assignments.insert(m, solved);
    let local = f.substitute_linear(&assignments)?;
    let free: Vec<usize> = (0..NVARS).filter(|&i| i != k && i != m).collect();
    let mut hess = ExactMatrix::zeros(free.len(), free.len())?;
    for (a, &i) in free.iter().enumerate() {
        let di = local.partial_derivative(i)?;
        for (b, &j) in free.iter().enumerate() {
            hess.set(a, b, di.partial_derivative(j)?.evaluate(p.coords()));
        }
    }
    Ok(hess.rank())
}

/// Whether `p` is an ordinary double point of `X_t`: a singular point whose
/// local Hessian has full rank four.
pub fn is_node<F: Field>(t: &Rational, p: &ProjectivePoint<F>) -> Result<bool, VarietyError> {
    let (l, f) = quartic_family::<F>(t);
    Ok(local_hessian_rank(&l, &f, p)? == 4)
}

/// The set of `t` for which `p` is a singular point of `X_t`.
///
/// With `F_t = t S4 - S2^2`, the Jacobian condition says
/// `grad(-S2^2)(p) + t grad(S4)(p)` is proportional to `grad L = (1,...,1)`;
/// this is intersected with the zeros of `F_t(p) = t S4(p) - S2(p)^2`.
pub fn singular_t_values<F: Field>(p: &ProjectivePoint<F>) -> Result<ParamSolution, VarietyError> {
    let l = power_sum::<F>(1);
    if !p.vanishes(&l) {
        return Err(VarietyError::NotOnHyperplane(p.to_string()));
    }
    let s2 = power_sum::<F>(2);
    let s4 = power_sum::<F>(4);
    let base = -(s2.clone() * s2.clone());
    let v0 = eval_gradient(&base, p);
    let v1 = eval_gradient(&s4, p);
    let ones: [F; NVARS] = std::array::from_fn(|_| F::one());
    let proportional = solve_parametric_proportionality(&v0, &v1, &ones)?;
    // F_t(p) = base(p) + t S4(p)
    let (b0, b1) = (base.evaluate(p.coords()), s4.evaluate(p.coords()));
    match proportional {
        ParamSolution::Empty => Ok(ParamSolution::Empty),
        ParamSolution::AllT => Ok(solve_linear_conditions(&[(b0, b1)])?),
        ParamSolution::Finite(ts) => {
            let on_quartic: Vec<Rational> = ts
                .into_iter()
                .filter(|t| (b0.clone() + F::from_rational(t) * b1.clone()).is_zero())
                .collect();
            Ok(if on_quartic.is_empty() {
                ParamSolution::Empty
            } else {
                ParamSolution::Finite(on_quartic)
            })
        }
    }
}

/// Default bound on `|alphabet|^6` for [`scan_alphabet`].
pub const DEFAULT_SCAN_CAP: u64 = 10_000_000;

/// All singular points of `X_t` whose coordinates, up to scaling, lie in
/// `alphabet`, sorted.
pub fn scan_alphabet<F: Field>(
    t: &Rational,
    alphabet: &[F],
    cap: u64,
) -> Result<Vec<ProjectivePoint<F>>, VarietyError> {
    let needed = (alphabet.len() as u128).pow(NVARS as u32);
    if needed > cap as u128 {
        return Err(VarietyError::CapExceeded { needed, cap });
    }
    let (l, f) = quartic_family::<F>(t);
    let mut found = std::collections::BTreeSet::new();
    let mut digits = [0usize; NVARS];
    if alphabet.is_empty() {
        return Ok(Vec::new());
    }
    loop {
        let coords: [F; NVARS] = std::array::from_fn(|i| alphabet[digits[i]].clone());
        if l.evaluate(&coords).is_zero() {
            if let Ok(p) = ProjectivePoint::new(coords) {
                if !found.contains(&p) && is_singular_point(&l, &f, &p) {
                    found.insert(p);
                }
            }
        }
        // odometer
        let mut k = NVARS;
        loop {
            if k == 0 {
                return Ok(found.into_iter().collect());
            }
            k -= 1;
            digits[k] += 1;
            if digits[k] < alphabet.len() {
                break;
            }
            digits[k] = 0;
        }
    }
}

/// Outcome of dividing a restricted quartic by the two quadrics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationReport<F> {
    pub factors: bool,
    /// The constant `c` with `quartic = c q1 q2`, when it exists.
    pub scalar: Option<F>,
}

/// Divides `quartic` exactly by `q1` and then `q2` and reports whether the
/// quotient is a nonzero constant.
pub fn factor_by_quadrics<F: Field>(
    quartic: &Polynomial<F>,
    q1: &Polynomial<F>,
    q2: &Polynomial<F>,
) -> Result<FactorizationReport<F>, VarietyError> {
    let scalar = match quartic.divide_exact(q1)? {
        Some(rest) => rest.divide_exact(q2)?.and_then(|c| c.as_constant()),
        None => None,
    }
    .filter(|c| !c.is_zero());
    Ok(FactorizationReport {
        factors: scalar.is_some(),
        scalar,
    })
}
