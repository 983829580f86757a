//! Permutations in one-line notation and small permutation groups enumerated
//! element by element.
//!
//! One-line notation `[i1, i2, ..., in]` means `1 -> i1, 2 -> i2, ...`.
//! Cycle notation is deliberately not accepted anywhere. Internally points
//! are 0-based, so a permutation of degree 6 acts directly on the variable
//! indices `0..6`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("entry {0} of a degree-{1} one-line permutation is out of range")]
    OutOfRange(usize, usize),
    #[error("entry {0} occurs more than once")]
    Duplicate(usize),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("group order exceeds the cap of {0}")]
    CapExceeded(usize),
    #[error("action is inconsistent: {0}")]
    ActionInconsistent(String),
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("irreducible degrees are not determined: {0}")]
    DegreesUndetermined(String),
    #[error("cannot parse permutation `{0}`: use one-line notation such as [1,3,5,2,4]")]
    Syntax(String),
}

/// A bijection of `{1..n}` stored 0-based.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from 1-based one-line notation.
    pub fn from_oneline(images: &[usize]) -> Result<Self, GroupError> {
        let n = images.len();
        let zero_based = images
            .iter()
            .map(|&i| {
                if i == 0 || i > n {
                    Err(GroupError::OutOfRange(i, n))
                } else {
                    Ok(i - 1)
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_images(zero_based)
    }

    /// Builds a permutation from 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n {
                return Err(GroupError::OutOfRange(i, n));
            }
            if std::mem::replace(&mut seen[i], true) {
                return Err(GroupError::Duplicate(i));
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// 1-based one-line notation.
    pub fn oneline(&self) -> Vec<usize> {
        self.images.iter().map(|i| i + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ other`, i.e. `other` is applied first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, GroupError> {
        if self.degree() != other.degree() {
            return Err(GroupError::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    pub fn pow(&self, exp: u32) -> Permutation {
        (0..exp).fold(Permutation::identity(self.degree()), |acc, _| {
            self.compose_unchecked(&acc)
        })
    }

    /// Smallest `k >= 1` with `self^k = id`.
    pub fn order(&self) -> u64 {
        let mut k = 1;
        let mut p = self.clone();
        while !p.is_identity() {
            p = self.compose_unchecked(&p);
            k += 1;
        }
        k
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.oneline().iter().map(|i| i.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses bracketed one-line notation, e.g. `[1,3,5,2,4]`.
impl FromStr for Permutation {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| GroupError::Syntax(s.to_string()))?;
        if inner.trim().is_empty() {
            return Ok(Permutation::identity(0));
        }
        let images = inner
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| GroupError::Syntax(s.to_string()))?;
        Permutation::from_oneline(&images)
    }
}

/// A finite permutation group with all of its elements listed.
///
/// Equality compares element sets; generators are informational.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    /// Sorted, so two groups with the same elements compare equal.
    elements: Vec<Permutation>,
    generators: Vec<Permutation>,
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermGroup {}

pub const DEFAULT_GROUP_CAP: usize = 720;

impl PermGroup {
    /// Breadth-first closure of `gens` under composition.
    pub fn generate(
        degree: usize,
        gens: &[Permutation],
        cap: usize,
    ) -> Result<PermGroup, GroupError> {
        for g in gens {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch(degree, g.degree()));
            }
        }
        let id = Permutation::identity(degree);
        let mut seen = BTreeSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = g.compose_unchecked(&x);
                if !seen.contains(&y) {
                    if seen.len() >= cap {
                        return Err(GroupError::CapExceeded(cap));
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        Ok(PermGroup {
            degree,
            elements: seen.into_iter().collect(),
            generators: gens.to_vec(),
        })
    }

    /// The full symmetric group on `n` points.
    pub fn symmetric(n: usize) -> PermGroup {
        let mut gens = Vec::new();
        if n >= 2 {
            let mut swap: Vec<usize> = (0..n).collect();
            swap.swap(0, 1);
            gens.push(Permutation { images: swap });
            let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
            gens.push(Permutation { images: cycle });
        }
        let order = (1..=n).product::<usize>();
        Self::generate(n, &gens, order).expect("symmetric group within its own order")
    }

    /// Builds a group from an explicit element list, verifying closure.
    pub fn from_elements(
        degree: usize,
        elements: impl IntoIterator<Item = Permutation>,
    ) -> Result<PermGroup, GroupError> {
        let set: BTreeSet<Permutation> = elements.into_iter().collect();
        if let Some(p) = set.iter().find(|p| p.degree() != degree) {
            return Err(GroupError::DegreeMismatch(degree, p.degree()));
        }
        if !set.contains(&Permutation::identity(degree)) {
            return Err(GroupError::NotSubgroup("identity missing".into()));
        }
        for a in &set {
            for b in &set {
                if !set.contains(&a.compose_unchecked(b)) {
                    return Err(GroupError::NotSubgroup(format!(
                        "{a} * {b} is not in the set"
                    )));
                }
            }
        }
        let elements: Vec<Permutation> = set.into_iter().collect();
        Ok(PermGroup {
            degree,
            generators: elements.clone(),
            elements,
        })
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup {
            degree,
            elements: vec![Permutation::identity(degree)],
            generators: Vec::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|p| other.contains(p))
    }

    pub fn is_abelian(&self) -> bool {
        self.elements.iter().all(|a| {
            self.elements
                .iter()
                .all(|b| a.compose_unchecked(b) == b.compose_unchecked(a))
        })
    }

    /// Whether `self` is a normal subgroup of `g`.
    pub fn is_normal_in(&self, g: &PermGroup) -> bool {
        self.is_subgroup_of(g)
            && g.elements.iter().all(|x| {
                let xi = x.inverse();
                self.elements
                    .iter()
                    .all(|n| self.contains(&x.compose_unchecked(n).compose_unchecked(&xi)))
            })
    }

    /// Orbit of `x` together with its stabilizer.
    ///
    /// `act(g, x)` must be a left action up to `eq`. The orbit is returned
    /// without `eq`-duplicates, in first-seen order over the sorted element
    /// list.
    pub fn orbit_and_stabilizer<T, A, E>(
        &self,
        x: &T,
        act: A,
        eq: E,
    ) -> Result<(Vec<T>, PermGroup), GroupError>
    where
        A: Fn(&Permutation, &T) -> T,
        E: Fn(&T, &T) -> bool,
    {
        if !eq(&act(&Permutation::identity(self.degree), x), x) {
            return Err(GroupError::ActionInconsistent(
                "the identity moves the base element".into(),
            ));
        }
        let mut orbit: Vec<T> = Vec::new();
        let mut stabilizer = Vec::new();
        for g in &self.elements {
            let y = act(g, x);
            if eq(&y, x) {
                stabilizer.push(g.clone());
            }
            if !orbit.iter().any(|z| eq(z, &y)) {
                orbit.push(y);
            }
        }
        let stabilizer = PermGroup::from_elements(self.degree, stabilizer)
            .map_err(|e| GroupError::ActionInconsistent(format!("stabilizer: {e}")))?;
        if orbit.len() * stabilizer.order() != self.order() {
            return Err(GroupError::ActionInconsistent(format!(
                "|orbit| * |stabilizer| = {} * {} != {}",
                orbit.len(),
                stabilizer.order(),
                self.order()
            )));
        }
        Ok((orbit, stabilizer))
    }

    /// Conjugacy classes, each sorted, listed by their smallest element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<Permutation>> {
        let mut assigned = BTreeSet::new();
        let mut classes = Vec::new();
        for a in &self.elements {
            if assigned.contains(a) {
                continue;
            }
            let class: BTreeSet<Permutation> = self
                .elements
                .iter()
                .map(|g| g.compose_unchecked(a).compose_unchecked(&g.inverse()))
                .collect();
            assigned.extend(class.iter().cloned());
            classes.push(class.into_iter().collect());
        }
        classes
    }

    /// Subgroup generated by all commutators `a b a^-1 b^-1`.
    pub fn commutator_subgroup(&self) -> PermGroup {
        let comms: BTreeSet<Permutation> = self
            .elements
            .iter()
            .flat_map(|a| {
                self.elements.iter().map(move |b| {
                    a.compose_unchecked(b)
                        .compose_unchecked(&a.inverse())
                        .compose_unchecked(&b.inverse())
                })
            })
            .filter(|c| !c.is_identity())
            .collect();
        let gens: Vec<Permutation> = comms.into_iter().collect();
        Self::generate(self.degree, &gens, self.order()).expect("subgroup of a finite group")
    }

    /// All normal subgroups, sorted by order and then by element list.
    ///
    /// A normal subgroup is a union of conjugacy classes containing the
    /// identity, so every such union is tested for closure.
    pub fn normal_subgroups(&self, cap: usize) -> Result<Vec<PermGroup>, GroupError> {
        if self.order() > cap {
            return Err(GroupError::CapExceeded(cap));
        }
        let classes: Vec<Vec<Permutation>> = self
            .conjugacy_classes()
            .into_iter()
            .filter(|c| !c[0].is_identity())
            .collect();
        let mut found = Vec::new();
        for mask in 0u64..(1u64 << classes.len()) {
            let mut set = vec![Permutation::identity(self.degree)];
            for (k, class) in classes.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    set.extend(class.iter().cloned());
                }
            }
            if !self.order().is_multiple_of(set.len()) {
                continue;
            }
            if let Ok(sub) = PermGroup::from_elements(self.degree, set) {
                found.push(sub);
            }
        }
        found.sort_by(|a, b| {
            a.order()
                .cmp(&b.order())
                .then_with(|| a.elements.cmp(&b.elements))
        });
        Ok(found)
    }

    /// Whether `self` is the internal semidirect product `n ⋊ h`: `n` normal,
    /// `n ∩ h` trivial and `|n| |h| = |self|`.
    pub fn is_semidirect_product(&self, n: &PermGroup, h: &PermGroup) -> Result<bool, GroupError> {
        for (name, sub) in [("N", n), ("H", h)] {
            if !sub.is_subgroup_of(self) {
                return Err(GroupError::NotSubgroup(format!(
                    "{name} is not contained in G"
                )));
            }
        }
        let meet = n.elements.iter().filter(|p| h.contains(p)).count();
        Ok(n.is_normal_in(self) && meet == 1 && n.order() * h.order() == self.order())
    }

    /// Degrees of the complex irreducible representations, recovered from
    /// the class count `r`, the abelianization order `a`, divisibility of
    /// `|G|` and `sum d^2 = |G|`. Fails unless exactly one multiset fits.
    pub fn irreducible_degrees(&self, cap: usize) -> Result<Vec<u64>, GroupError> {
        if self.order() > cap {
            return Err(GroupError::CapExceeded(cap));
        }
        let order = self.order() as u64;
        let r = self.conjugacy_classes().len();
        let a = order / self.commutator_subgroup().order() as u64;
        if a as usize > r {
            return Err(GroupError::DegreesUndetermined(format!(
                "{a} linear characters but only {r} classes"
            )));
        }
        let candidates: Vec<u64> = (2..)
            .take_while(|d| d * d <= order)
            .filter(|d| order.is_multiple_of(*d))
            .collect();
        let mut solutions = Vec::new();
        let mut current = Vec::new();
        search_degrees(
            &candidates,
            0,
            r - a as usize,
            order - a,
            &mut current,
            &mut solutions,
        );
        match solutions.len() {
            1 => {
                let mut degrees = vec![1; a as usize];
                degrees.extend(solutions.pop().unwrap());
                Ok(degrees)
            }
            0 => Err(GroupError::DegreesUndetermined(format!(
                "no multiset of {r} degrees with {a} ones and sum of squares {order}"
            ))),
            k => Err(GroupError::DegreesUndetermined(format!(
                "{k} multisets of {r} degrees with {a} ones and sum of squares {order}"
            ))),
        }
    }
}

// Non-decreasing sequences of `slots` candidates whose squares sum to `rest`.
fn search_degrees(
    candidates: &[u64],
    start: usize,
    slots: usize,
    rest: u64,
    current: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
) {
    if slots == 0 {
        if rest == 0 {
            out.push(current.clone());
        }
        return;
    }
    for (k, &d) in candidates.iter().enumerate().skip(start) {
        if d * d * slots as u64 > rest {
            break;
        }
        current.push(d);
        search_degrees(candidates, k, slots - 1, rest - d * d, current, out);
        current.pop();
    }
}

/// The correspondence between the labels `1..5` and the variables
/// `x0..x4`; `x5` is fixed by every label permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelDictionary {
    label_to_var: [usize; 5],
}

impl Default for LabelDictionary {
    /// Labels `1..5` are `x2, x0, x4, x3, x1`.
    fn default() -> Self {
        LabelDictionary {
            label_to_var: [2, 0, 4, 3, 1],
        }
    }
}

impl LabelDictionary {
    pub fn new(label_to_var: [usize; 5]) -> Result<Self, GroupError> {
        Permutation::from_images(label_to_var.to_vec())?;
        Ok(LabelDictionary { label_to_var })
    }

    /// Variable index of the 1-based label.
    pub fn var(&self, label: usize) -> usize {
        self.label_to_var[label - 1]
    }

    /// The permutation `g` of `0..6` with `g(var(i)) = var(s(i))` and
    /// `g(5) = 5`.
    pub fn induced_variable_permutation(
        &self,
        sigma: &Permutation,
    ) -> Result<Permutation, GroupError> {
        if sigma.degree() != 5 {
            return Err(GroupError::DegreeMismatch(5, sigma.degree()));
        }
        let mut images = vec![0; 6];
        for label in 0..5 {
            images[self.label_to_var[label]] = self.label_to_var[sigma.apply(label)];
        }
        images[5] = 5;
        Ok(Permutation { images })
    }

    /// The image of a label group as a group of variable permutations.
    pub fn lift_group(&self, g: &PermGroup) -> Result<PermGroup, GroupError> {
        let elements = g
            .elements()
            .iter()
            .map(|s| self.induced_variable_permutation(s))
            .collect::<Result<Vec<_>, _>>()?;
        PermGroup::from_elements(6, elements)
    }
}

/// Sizes of the conjugacy classes, sorted.
pub fn class_sizes(g: &PermGroup) -> Vec<usize> {
    let mut sizes: Vec<usize> = g.conjugacy_classes().iter().map(Vec::len).collect();
    sizes.sort_unstable();
    sizes
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::from_oneline(v).unwrap()
    }

    fn tau() -> Permutation {
        perm(&[1, 3, 5, 2, 4])
    }

    fn h() -> Permutation {
        perm(&[2, 3, 4, 5, 1])
    }

    fn ga15() -> PermGroup {
        PermGroup::generate(5, &[tau(), h()], 120).unwrap()
    }

    #[test]
    fn oneline_reading() {
        let t = tau();
        // fixes 1, 2 -> 3 -> 5 -> 4 -> 2
        assert_eq!(t.oneline(), vec![1, 3, 5, 2, 4]);
        assert_eq!(t.apply(0), 0);
        assert_eq!(t.apply(1), 2);
        assert_eq!(t.apply(2), 4);
        assert_eq!(t.apply(4), 3);
        assert_eq!(t.apply(3), 1);
        let s = perm(&[2, 1, 3, 4, 5]);
        assert_eq!(s.order(), 2);
    }

    #[test]
    fn malformed_oneline_is_rejected() {
        assert_eq!(
            Permutation::from_oneline(&[1, 1, 2]),
            Err(GroupError::Duplicate(0))
        );
        assert_eq!(
            Permutation::from_oneline(&[1, 4, 2]),
            Err(GroupError::OutOfRange(4, 3))
        );
        assert!("(13524)".parse::<Permutation>().is_err());
        assert_eq!("[1, 3,5,2,4]".parse::<Permutation>().unwrap(), tau());
    }

    #[test]
    fn orders_by_repeated_composition() {
        assert_eq!(tau().order(), 4);
        assert_eq!(h().order(), 5);
        assert!(h().compose(&h().inverse()).unwrap().is_identity());
        assert_eq!(
            h().compose(&Permutation::identity(4)),
            Err(GroupError::DegreeMismatch(5, 4))
        );
    }

    #[test]
    fn composition_applies_right_factor_first() {
        let a = perm(&[2, 1, 3]);
        let b = perm(&[1, 3, 2]);
        let ab = a.compose(&b).unwrap();
        for i in 0..3 {
            assert_eq!(ab.apply(i), a.apply(b.apply(i)));
        }
    }

    #[test]
    fn generated_groups() {
        assert_eq!(ga15().order(), 20);
        assert_eq!(PermGroup::generate(5, &[h()], 120).unwrap().order(), 5);
        assert_eq!(PermGroup::generate(5, &[], 120).unwrap().order(), 1);
        assert_eq!(PermGroup::symmetric(6).order(), 720);
        assert_eq!(
            PermGroup::generate(5, &[tau(), h()], 10),
            Err(GroupError::CapExceeded(10))
        );
    }

    #[test]
    fn generate_is_idempotent() {
        let g = ga15();
        let again = PermGroup::generate(5, g.elements(), 120).unwrap();
        assert_eq!(again.elements(), g.elements());
    }

    #[test]
    fn class_structure() {
        assert_eq!(class_sizes(&ga15()), vec![1, 4, 5, 5, 5]);
        assert_eq!(class_sizes(&PermGroup::trivial(5)), vec![1]);
        assert_eq!(class_sizes(&PermGroup::symmetric(3)), vec![1, 2, 3]);
    }

    #[test]
    fn normal_subgroups_of_ga15() {
        let g = ga15();
        let normals = g.normal_subgroups(120).unwrap();
        let orders: Vec<usize> = normals.iter().map(PermGroup::order).collect();
        assert_eq!(orders, vec![1, 5, 10, 20]);
        let c5 = PermGroup::generate(5, &[h()], 120).unwrap();
        assert!(normals.iter().any(|n| n.elements() == c5.elements()));
        assert!(c5.is_normal_in(&g));
        assert_eq!(
            c5.normal_subgroups(120)
                .unwrap()
                .iter()
                .map(PermGroup::order)
                .collect::<Vec<_>>(),
            vec![1, 5]
        );
        assert_eq!(g.normal_subgroups(10), Err(GroupError::CapExceeded(10)));
    }

    #[test]
    fn semidirect_checks() {
        let g = ga15();
        let n = PermGroup::generate(5, &[h()], 120).unwrap();
        let k = PermGroup::generate(5, &[tau()], 120).unwrap();
        assert!(g.is_semidirect_product(&n, &k).unwrap());
        assert!(!g.is_semidirect_product(&k, &n).unwrap());
        assert!(g.is_semidirect_product(&PermGroup::trivial(5), &g).unwrap());
        let outside = PermGroup::generate(5, &[perm(&[2, 1, 3, 4, 5])], 120).unwrap();
        assert!(g.is_semidirect_product(&n, &outside).is_err());
    }

    #[test]
    fn degrees_from_class_data() {
        assert_eq!(
            ga15().irreducible_degrees(120).unwrap(),
            vec![1, 1, 1, 1, 4]
        );
        assert_eq!(
            PermGroup::symmetric(3).irreducible_degrees(120).unwrap(),
            vec![1, 1, 2]
        );
        let c4 = PermGroup::generate(4, &[perm(&[2, 3, 4, 1])], 120).unwrap();
        assert_eq!(c4.irreducible_degrees(120).unwrap(), vec![1, 1, 1, 1]);
        assert_eq!(
            PermGroup::symmetric(4).irreducible_degrees(120).unwrap(),
            vec![1, 1, 2, 3, 3]
        );
    }

    #[test]
    fn commutator_subgroup_of_ga15_is_translations() {
        let g = ga15();
        let c5 = PermGroup::generate(5, &[h()], 120).unwrap();
        assert_eq!(g.commutator_subgroup().elements(), c5.elements());
    }

    #[test]
    fn dictionary_lifts() {
        let d = LabelDictionary::default();
        let t = d.induced_variable_permutation(&tau()).unwrap();
        // x2 -> x2, x0 -> x4, x4 -> x1, x3 -> x0, x1 -> x3, x5 -> x5
        assert_eq!(t.images(), &[4, 3, 2, 0, 1, 5]);
        assert!(d
            .induced_variable_permutation(&Permutation::identity(5))
            .unwrap()
            .is_identity());
        let s = d
            .induced_variable_permutation(&perm(&[2, 1, 3, 4, 5]))
            .unwrap();
        assert_eq!(s.images(), &[2, 1, 0, 3, 4, 5]);
        assert!(LabelDictionary::new([0, 0, 1, 2, 3]).is_err());
    }

    #[test]
    fn lifting_is_a_homomorphism() {
        let d = LabelDictionary::default();
        let g = ga15();
        for a in g.elements() {
            for b in g.elements() {
                let lhs = d
                    .induced_variable_permutation(&a.compose_unchecked(b))
                    .unwrap();
                let rhs = d
                    .induced_variable_permutation(a)
                    .unwrap()
                    .compose_unchecked(&d.induced_variable_permutation(b).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
        assert_eq!(d.lift_group(&g).unwrap().order(), 20);
    }

    #[test]
    fn orbit_stabilizer_on_points() {
        let g = ga15();
        let (orbit, stab) = g
            .orbit_and_stabilizer(&0usize, |p, &i| p.apply(i), |a, b| a == b)
            .unwrap();
        assert_eq!(orbit.len(), 5);
        assert_eq!(stab.order(), 4);
        let (orbit, stab) = g.orbit_and_stabilizer(&(), |_, _| (), |_, _| true).unwrap();
        assert_eq!(orbit.len(), 1);
        assert_eq!(stab.order(), 20);
        let bad = g.orbit_and_stabilizer(&0usize, |_, &i| i + 1, |a, b| a == b);
        assert!(matches!(bad, Err(GroupError::ActionInconsistent(_))));
    }
}
