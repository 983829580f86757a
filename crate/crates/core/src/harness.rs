//! Check registry, run configuration and report rendering.
//!
//! Every check is a pure function of the [`RunConfig`] returning a
//! [`CheckRecord`]. Records come back in registry order regardless of how
//! checks were selected.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::exactnum::{rational, Rational};
use crate::linalg::{gram_matrix, ParamSolution};
use crate::multipoly::parse_element;
use crate::permgrp::{class_sizes, LabelDictionary, PermGroup, Permutation};
use crate::setting::{self, h_tau};
use crate::varieties::{
    incidence_table, is_node, is_singular_on_family, projective_orbit, scan_alphabet,
    singular_t_values, DEFAULT_SCAN_CAP,
};
use crate::{Eis, Point, Variety};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HarnessError {
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("config line {line}: {msg}")]
    Config { line: usize, msg: String },
    #[error("invalid configuration: {0}")]
    Invalid(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckRecord {
    pub check_id: String,
    pub paper_anchor: String,
    pub status: Status,
    pub details: Value,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

impl std::str::FromStr for OutputFormat {
    type Err = HarnessError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "text" => Ok(OutputFormat::Text),
            "json" | "structured" => Ok(OutputFormat::Json),
            other => Err(HarnessError::Invalid(format!("unknown format `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Caps {
    /// Bound on `|alphabet|^6` for alphabet scans.
    pub enumeration: u64,
    /// Bound on group orders for subgroup and degree computations.
    pub group_order: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            enumeration: DEFAULT_SCAN_CAP,
            group_order: 120,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Selection {
    /// Every acceptance check; exploratory checks are excluded.
    All,
    Only(Vec<String>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    /// Family members visited by the exploratory scan.
    pub t_values: Vec<Rational>,
    pub alphabets: BTreeMap<String, Vec<Eis>>,
    pub caps: Caps,
    pub output: OutputFormat,
    pub selected: Selection,
}

/// Alphabet used by `scan-todd` unless the configuration overrides it.
pub const TODD_ALPHABET: &str = "todd";

impl Default for RunConfig {
    fn default() -> Self {
        let e = |s: &str| parse_element::<Eis>(s).expect("valid element");
        let alphabets = BTreeMap::from([
            ("signs".to_string(), vec![e("1"), e("-1")]),
            ("cube-roots".to_string(), vec![e("1"), e("w"), e("w^2")]),
            (
                TODD_ALPHABET.to_string(),
                vec![e("1"), e("w"), e("w^2"), e("-5")],
            ),
        ]);
        RunConfig {
            t_values: vec![rational(10, 7)],
            alphabets,
            caps: Caps::default(),
            output: OutputFormat::Text,
            selected: Selection::All,
        }
    }
}

impl RunConfig {
    /// Parses the key-value config format:
    ///
    /// ```text
    /// # comment
    /// [run]
    /// checks = lemma-2-1, lemma-2-2    # or `all`
    /// t_values = 10/7, 6
    /// format = json
    /// [caps]
    /// enumeration = 10000000
    /// group_order = 120
    /// [alphabets]
    /// mine = 1, -1, w
    /// ```
    ///
    /// Keys absent from the file keep their defaults; alphabets are added
    /// to (or replace) the built-in ones.
    pub fn from_config_text(text: &str) -> Result<Self, HarnessError> {
        let mut cfg = RunConfig::default();
        let mut section = String::new();
        for (k, raw) in text.lines().enumerate() {
            let line_no = k + 1;
            let err = |msg: String| HarnessError::Config { line: line_no, msg };
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(name) = line.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
                section = name.trim().to_string();
                if !matches!(section.as_str(), "run" | "caps" | "alphabets") {
                    return Err(err(format!("unknown section `{section}`")));
                }
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| err("expected `key = value`".into()))?;
            let (key, value) = (key.trim(), value.trim());
            match (section.as_str(), key) {
                ("run", "checks") => {
                    cfg.selected = if value == "all" {
                        Selection::All
                    } else {
                        Selection::Only(split_list(value).map(str::to_string).collect())
                    }
                }
                ("run", "t_values") => {
                    cfg.t_values = split_list(value)
                        .map(|s| parse_rational(s).map_err(&err))
                        .collect::<Result<_, _>>()?
                }
                ("run", "format") => {
                    cfg.output = value
                        .parse()
                        .map_err(|e: HarnessError| err(e.to_string()))?
                }
                ("caps", "enumeration") => {
                    cfg.caps.enumeration = value
                        .parse()
                        .map_err(|_| err(format!("bad cap `{value}`")))?
                }
                ("caps", "group_order") => {
                    cfg.caps.group_order = value
                        .parse()
                        .map_err(|_| err(format!("bad cap `{value}`")))?
                }
                ("alphabets", name) => {
                    let letters = parse_alphabet(value).map_err(&err)?;
                    cfg.alphabets.insert(name.to_string(), letters);
                }
                ("", _) => return Err(err(format!("key `{key}` outside a section"))),
                (s, _) => return Err(err(format!("unknown key `{key}` in [{s}]"))),
            }
        }
        Ok(cfg)
    }

    /// Checks the invariants and resolves the selection to registry order.
    pub fn selected_checks(&self) -> Result<Vec<&'static CheckSpec>, HarnessError> {
        if self.caps.enumeration == 0 || self.caps.group_order == 0 {
            return Err(HarnessError::Invalid("caps must be positive".into()));
        }
        let chosen: Vec<&'static CheckSpec> = match &self.selected {
            Selection::All => REGISTRY.iter().filter(|c| !c.exploratory).collect(),
            Selection::Only(ids) => {
                let wanted: BTreeSet<&str> = ids.iter().map(String::as_str).collect();
                if let Some(bad) = wanted
                    .iter()
                    .find(|id| !REGISTRY.iter().any(|c| c.id == **id))
                {
                    return Err(HarnessError::UnknownCheck(bad.to_string()));
                }
                REGISTRY.iter().filter(|c| wanted.contains(c.id)).collect()
            }
        };
        if chosen.iter().any(|c| c.uses_t_values) && self.t_values.is_empty() {
            return Err(HarnessError::Invalid(
                "t_values must be nonempty for family scans".into(),
            ));
        }
        Ok(chosen)
    }
}

fn split_list(s: &str) -> impl Iterator<Item = &str> {
    s.split(',').map(str::trim).filter(|x| !x.is_empty())
}

pub fn parse_rational(s: &str) -> Result<Rational, String> {
    parse_element::<Rational>(s).map_err(|e| format!("bad rational `{s}`: {e}"))
}

/// A comma-separated list of field elements, optionally bracketed.
pub fn parse_alphabet(s: &str) -> Result<Vec<Eis>, String> {
    let s = s.trim();
    let inner = s
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .unwrap_or(s);
    split_list(inner)
        .map(|x| parse_element::<Eis>(x).map_err(|e| format!("bad element `{x}`: {e}")))
        .collect()
}

type CheckFn = fn(&RunConfig) -> Result<Outcome, String>;

pub struct CheckSpec {
    pub id: &'static str,
    pub anchor: &'static str,
    pub exploratory: bool,
    pub uses_t_values: bool,
    run: CheckFn,
}

macro_rules! check {
    ($id:literal, $anchor:literal, $f:ident) => {
        CheckSpec {
            id: $id,
            anchor: $anchor,
            exploratory: false,
            uses_t_values: false,
            run: $f,
        }
    };
}

pub static REGISTRY: &[CheckSpec] = &[
    check!(
        "group-structure",
        "G = <tau, h> is F5 ⋊ F5^*, of order 20",
        group_structure
    ),
    check!(
        "lemma-2-1",
        "tau^c(Q_i) contains o iff c = 0 or 2",
        lemma_2_1
    ),
    check!(
        "lemma-2-2",
        "h^a tau^b(Q_i) contains o for exactly eight (a, b)",
        lemma_2_2
    ),
    check!(
        "divisor-incidence",
        "2h^4(Q_1) + 2h^3(Q_1) + 2Q_1 + 2h tau(Q_1)",
        divisor_incidence
    ),
    check!(
        "smooth-quadrics",
        "Q_i is projectively x0^2 + x1^2 + x2^2 + x3^2",
        smooth_quadrics
    ),
    check!(
        "factorization",
        "X meets the 3-plane in Q_1 + Q_2",
        factorization
    ),
    check!(
        "sing-orbits",
        "Sing X is two S6-orbits, of lengths 30 and 10",
        sing_orbits
    ),
    check!(
        "node-types",
        "every singular point of X_6 is a node",
        node_types
    ),
    check!(
        "s-fixes-q1",
        "s = [2,1,3,4,5] fixes Q_1 and moves o",
        s_fixes_q1
    ),
    check!(
        "irrep-degrees",
        "G has one 4-dimensional and four 1-dimensional irreducibles",
        irrep_degrees
    ),
    check!(
        "h-invariant-p3",
        "the <h>-invariant 3-plane misses Sing X",
        h_invariant_p3
    ),
    check!(
        "special-t",
        "o is singular on every X_t, o' only on X_6",
        special_t
    ),
    check!(
        "scan-smoke",
        "sign vectors singular on X_6 form the orbit of o'",
        scan_smoke
    ),
    CheckSpec {
        id: "scan-todd",
        anchor: "nodes of X_10/7 reachable from a small alphabet (exploratory)",
        exploratory: true,
        uses_t_values: true,
        run: scan_todd,
    },
];

/// Named boolean assertions plus free-form data.
#[derive(Default)]
struct Outcome {
    assertions: Map<String, Value>,
    data: Map<String, Value>,
}

impl Outcome {
    fn assert(&mut self, name: &str, ok: bool) -> &mut Self {
        self.assertions.insert(name.to_string(), Value::Bool(ok));
        self
    }

    fn data(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.data.insert(key.to_string(), v.into());
        self
    }

    fn passed(&self) -> bool {
        self.assertions.values().all(|v| v == &Value::Bool(true))
    }

    fn into_details(self) -> Value {
        let mut m = self.data;
        m.insert("assertions".into(), Value::Object(self.assertions));
        Value::Object(m)
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn var_perm(sigma: &Permutation) -> Permutation {
    setting::variable_permutation(sigma)
}

fn cyclic(g: Permutation, cap: usize) -> Result<PermGroup, String> {
    PermGroup::generate(g.degree(), &[g], cap).map_err(err)
}

fn group_structure(cfg: &RunConfig) -> Result<Outcome, String> {
    let cap = cfg.caps.group_order;
    let g = PermGroup::generate(5, &[setting::tau(), setting::h()], cap).map_err(err)?;
    let n = cyclic(setting::h(), cap)?;
    let k = cyclic(setting::tau(), cap)?;
    let normals = g.normal_subgroups(cap).map_err(err)?;
    let order5: Vec<&PermGroup> = normals.iter().filter(|x| x.order() == 5).collect();
    let minimal: Vec<&PermGroup> = normals
        .iter()
        .filter(|x| x.order() > 1)
        .filter(|x| {
            !normals
                .iter()
                .any(|y| y.order() > 1 && y.order() < x.order() && y.is_subgroup_of(x))
        })
        .collect();
    let mut o = Outcome::default();
    o.assert("order is 20", g.order() == 20)
        .assert("<h> has order 5", n.order() == 5)
        .assert("<h> is normal", n.is_normal_in(&g))
        .assert(
            "<h> is the only normal subgroup of order 5",
            order5.len() == 1 && *order5[0] == n,
        )
        .assert(
            "<h> is the only minimal normal subgroup",
            minimal.len() == 1 && *minimal[0] == n,
        )
        .assert(
            "G = <h> ⋊ <tau>",
            g.is_semidirect_product(&n, &k).map_err(err)?,
        );
    o.data("order", g.order())
        .data("class_sizes", class_sizes(&g))
        .data(
            "normal_subgroup_orders",
            normals.iter().map(PermGroup::order).collect::<Vec<_>>(),
        );
    Ok(o)
}

fn lemma_2_1(_: &RunConfig) -> Result<Outcome, String> {
    let o_pt = setting::point_o();
    let mut o = Outcome::default();
    let mut table = Map::new();
    let mut mismatches = 0;
    for i in [1, 2] {
        let q = setting::quadric_variety(i);
        let mut row = Vec::new();
        for c in 0..4 {
            let hit = q
                .act(&var_perm(&setting::tau().pow(c)))
                .map_err(err)?
                .contains(&o_pt);
            if hit != (c == 0 || c == 2) {
                mismatches += 1;
            }
            row.push(hit);
        }
        table.insert(format!("Q{i}"), json!(row));
    }
    o.assert("table matches c in {0, 2}", mismatches == 0);
    o.data("table", Value::Object(table))
        .data("mismatches", mismatches);
    Ok(o)
}

const LEMMA_2_2_HITS: [(u32, u32); 8] = [
    (0, 0),
    (3, 0),
    (4, 0),
    (0, 2),
    (3, 3),
    (1, 2),
    (4, 2),
    (1, 1),
];

fn lemma_2_2(_: &RunConfig) -> Result<Outcome, String> {
    let o_pt = setting::point_o();
    let mut o = Outcome::default();
    let expected: BTreeSet<(u32, u32)> = LEMMA_2_2_HITS.into_iter().collect();
    for i in [1, 2] {
        let q = setting::quadric_variety(i);
        let img = |a: u32, b: u32| q.act(&var_perm(&h_tau(a, b))).map_err(err);
        let eq = |x: &Variety, y: &Variety| x.variety_eq(y).map_err(err);
        let mut hits = BTreeSet::new();
        for a in 0..5 {
            for b in 0..4 {
                if img(a, b)?.contains(&o_pt) {
                    hits.insert((a, b));
                }
            }
        }
        let (q0, t2, h4, h4t2, h3, ht2, h3t3, ht) = (
            img(0, 0)?,
            img(0, 2)?,
            img(4, 0)?,
            img(4, 2)?,
            img(3, 0)?,
            img(1, 2)?,
            img(3, 3)?,
            img(1, 1)?,
        );
        let p = format!("Q{i}: ");
        o.assert(&format!("{p}hit set"), hits == expected)
            .assert(
                &format!("{p}tau^2(Q) = h^4(Q) contains o, tau^2(Q) != Q"),
                eq(&t2, &h4)? && t2.contains(&o_pt) && !eq(&t2, &q0)?,
            )
            .assert(
                &format!("{p}h^4 tau^2(Q) = h^3(Q) contains o, differs from Q and tau^2(Q)"),
                eq(&h4t2, &h3)? && h4t2.contains(&o_pt) && !eq(&h4t2, &q0)? && !eq(&h4t2, &t2)?,
            )
            .assert(&format!("{p}h tau^2(Q) = Q"), eq(&ht2, &q0)?)
            .assert(
                &format!(
                    "{p}h^3 tau^3(Q) = h tau(Q) contains o, differs from Q, tau^2(Q), h^4 tau^2(Q)"
                ),
                eq(&h3t3, &ht)?
                    && h3t3.contains(&o_pt)
                    && !eq(&h3t3, &q0)?
                    && !eq(&h3t3, &t2)?
                    && !eq(&h3t3, &h4t2)?,
            );
        o.data(
            &format!("Q{i}_hits"),
            hits.iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>(),
        );
    }
    Ok(o)
}

fn divisor_incidence(cfg: &RunConfig) -> Result<Outcome, String> {
    let g = PermGroup::generate(5, &[setting::tau(), setting::h()], cfg.caps.group_order)
        .map_err(err)?;
    let q1 = setting::q1();
    let act = |s: &Permutation, v: &Variety| v.act(&var_perm(s)).expect("permutation of degree 6");
    let eq = |a: &Variety, b: &Variety| a.variety_eq(b).expect("nondegenerate quadric slices");
    let (orbit, stab) = g.orbit_and_stabilizer(&q1, act, eq).map_err(err)?;
    let table =
        incidence_table(&g, &LabelDictionary::default(), &q1, &setting::point_o()).map_err(err)?;
    let named: Vec<_> = [(4, 0), (3, 0), (0, 0), (1, 1)]
        .iter()
        .map(|&(a, b)| {
            q1.act(&var_perm(&h_tau(a, b)))
                .and_then(|v| v.canonicalize())
        })
        .collect::<Result<_, _>>()
        .map_err(err)?;
    let named_set: BTreeSet<_> = named.iter().cloned().collect();
    let found_set: BTreeSet<_> = table.distinct_through_point.iter().cloned().collect();
    let mults: Vec<usize> = table.multiplicity.values().copied().collect();
    let mut o = Outcome::default();
    o.assert("orbit of Q1 has 10 members", orbit.len() == 10)
        .assert("stabilizer has order 2", stab.order() == 2)
        .assert("stabilizer contains h tau^2", stab.contains(&h_tau(1, 2)))
        .assert("8 of 20 translates contain o", table.hits() == 8)
        .assert(
            "4 distinct translates contain o",
            table.distinct_through_point.len() == 4,
        )
        .assert("each with multiplicity 2", mults.iter().all(|&m| m == 2))
        .assert(
            "they are h^4(Q1), h^3(Q1), Q1, h tau(Q1)",
            named_set == found_set,
        );
    o.data("orbit_size", orbit.len())
        .data(
            "stabilizer",
            stab.elements()
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>(),
        )
        .data(
            "through_o",
            table
                .distinct_through_point
                .iter()
                .map(|c| json!({"variety": c.to_string(), "multiplicity": table.multiplicity[c]}))
                .collect::<Vec<_>>(),
        );
    Ok(o)
}

fn smooth_quadrics(_: &RunConfig) -> Result<Outcome, String> {
    let mut o = Outcome::default();
    for (name, q) in [("Q1", setting::quadric_q1()), ("Q2", setting::quadric_q2())] {
        let rank = gram_matrix(&q, &[0, 1, 2, 3]).map_err(err)?.rank();
        o.assert(&format!("{name} Gram rank is 4"), rank == 4);
        o.data(&format!("{name}_rank"), rank);
    }
    Ok(o)
}

fn factorization(_: &RunConfig) -> Result<Outcome, String> {
    let r = setting::restriction_factorization_check(&rational(6, 1)).map_err(err)?;
    let mut o = Outcome::default();
    o.assert("F_6 on the 3-plane is c q1 q2 with c constant", r.factors);
    o.data("scalar", r.scalar.map(|c| c.to_string()));
    Ok(o)
}

fn singular_orbits() -> Result<(Vec<Point>, Vec<Point>), String> {
    let s6 = PermGroup::symmetric(6);
    Ok((
        projective_orbit(&s6, &setting::point_o()).map_err(err)?,
        projective_orbit(&s6, &setting::point_o_prime()).map_err(err)?,
    ))
}

fn sing_orbits(_: &RunConfig) -> Result<Outcome, String> {
    let (a, b) = singular_orbits()?;
    let six = rational(6, 1);
    let disjoint = a.iter().all(|p| !b.contains(p));
    let mut o = Outcome::default();
    o.assert("orbit of o has 30 points", a.len() == 30)
        .assert("orbit of o' has 10 points", b.len() == 10)
        .assert(
            "all 40 are singular on X_6",
            a.iter().chain(&b).all(|p| is_singular_on_family(&six, p)),
        )
        .assert("orbits are disjoint", disjoint);
    o.data("orbit_sizes", vec![a.len(), b.len()]);
    Ok(o)
}

fn node_types(_: &RunConfig) -> Result<Outcome, String> {
    let (a, b) = singular_orbits()?;
    let six = rational(6, 1);
    let mut nodes = 0;
    for p in a.iter().chain(&b) {
        if is_node(&six, p).map_err(err)? {
            nodes += 1;
        }
    }
    let mut o = Outcome::default();
    o.assert(
        "all 40 points have Hessian rank 4",
        nodes == 40 && a.len() + b.len() == 40,
    );
    o.data("nodes", nodes);
    Ok(o)
}

fn s_fixes_q1(_: &RunConfig) -> Result<Outcome, String> {
    let s = var_perm(&setting::s());
    let q1 = setting::q1();
    let o_pt = setting::point_o();
    let so = o_pt.act(&s).map_err(err)?;
    let mut o = Outcome::default();
    o.assert(
        "s(Q1) = Q1",
        q1.act(&s).map_err(err)?.variety_eq(&q1).map_err(err)?,
    )
    .assert("s(o) != o", so != o_pt);
    o.data("s_of_o", so.to_string());
    Ok(o)
}

fn irrep_degrees(cfg: &RunConfig) -> Result<Outcome, String> {
    let g = PermGroup::generate(5, &[setting::tau(), setting::h()], cfg.caps.group_order)
        .map_err(err)?;
    let degrees = g.irreducible_degrees(cfg.caps.group_order).map_err(err)?;
    let mut o = Outcome::default();
    o.assert("degrees are {1, 1, 1, 1, 4}", degrees == [1, 1, 1, 1, 4]);
    o.data("degrees", degrees);
    Ok(o)
}

fn h_invariant_p3(_: &RunConfig) -> Result<Outcome, String> {
    let (a, b) = singular_orbits()?;
    let on_plane = a
        .iter()
        .chain(&b)
        .filter(|p| {
            let c = p.coords();
            c[5] == Eis::from_int(0)
                && c[..5].iter().cloned().fold(Eis::from_int(0), |s, x| s + x) == Eis::from_int(0)
        })
        .count();
    let mut o = Outcome::default();
    o.assert(
        "no singular point has x5 = 0 and x0 + ... + x4 = 0",
        on_plane == 0,
    );
    o.data("points_checked", a.len() + b.len())
        .data("on_plane", on_plane);
    Ok(o)
}

fn special_t(_: &RunConfig) -> Result<Outcome, String> {
    let at_o = singular_t_values(&setting::point_o()).map_err(err)?;
    let at_o2 = singular_t_values(&setting::point_o_prime()).map_err(err)?;
    let mut o = Outcome::default();
    o.assert("o: all t", at_o == ParamSolution::AllT).assert(
        "o': {6}",
        at_o2 == ParamSolution::Finite(vec![rational(6, 1)]),
    );
    o.data("o", at_o.to_string())
        .data("o_prime", at_o2.to_string());
    Ok(o)
}

fn scan_smoke(cfg: &RunConfig) -> Result<Outcome, String> {
    let signs = [Eis::from_int(1), Eis::from_int(-1)];
    let cap = cfg.caps.enumeration;
    let at6 = scan_alphabet(&rational(6, 1), &signs, cap).map_err(err)?;
    let at7 = scan_alphabet(&rational(7, 1), &signs, cap).map_err(err)?;
    let (_, orbit) = singular_orbits()?;
    let mut o = Outcome::default();
    o.assert("t = 6 finds exactly the orbit of o'", at6 == orbit)
        .assert("t = 7 finds nothing", at7.is_empty());
    o.data("found_at_6", at6.len())
        .data("found_at_7", at7.len());
    Ok(o)
}

fn scan_todd(cfg: &RunConfig) -> Result<Outcome, String> {
    let alphabet = cfg
        .alphabets
        .get(TODD_ALPHABET)
        .ok_or_else(|| format!("alphabet `{TODD_ALPHABET}` is not configured"))?;
    let mut o = Outcome::default();
    let mut per_t = Vec::new();
    for t in &cfg.t_values {
        let found = scan_alphabet(t, alphabet, cfg.caps.enumeration).map_err(err)?;
        let mut nodes = 0;
        for p in &found {
            if is_node(t, p).map_err(err)? {
                nodes += 1;
            }
        }
        o.assert(
            &format!("t = {t}: every point found is a node"),
            nodes == found.len(),
        );
        per_t.push(json!({"t": t.to_string(), "found": found.len(), "nodes": nodes}));
    }
    o.data(
        "alphabet",
        alphabet.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
    )
    .data("scans", per_t);
    Ok(o)
}

fn run_one(spec: &CheckSpec, cfg: &RunConfig) -> CheckRecord {
    let start = Instant::now();
    let result = catch_unwind(AssertUnwindSafe(|| (spec.run)(cfg)));
    let (status, details) = match result {
        Ok(Ok(outcome)) => {
            let status = if outcome.passed() {
                Status::Pass
            } else {
                Status::Fail
            };
            (status, outcome.into_details())
        }
        Ok(Err(msg)) => (Status::Error, json!({ "error": msg })),
        Err(panic) => {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            (Status::Error, json!({ "error": format!("panic: {msg}") }))
        }
    };
    CheckRecord {
        check_id: spec.id.to_string(),
        paper_anchor: spec.anchor.to_string(),
        status,
        details,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

/// Runs the selected checks in registry order.
pub fn run_checks(cfg: &RunConfig) -> Result<Vec<CheckRecord>, HarnessError> {
    Ok(cfg
        .selected_checks()?
        .into_iter()
        .map(|spec| run_one(spec, cfg))
        .collect())
}

/// Process exit status for a finished run: 0 when every record passed.
pub fn exit_code(records: &[CheckRecord]) -> i32 {
    if records.iter().all(|r| r.status == Status::Pass) {
        0
    } else {
        1
    }
}

/// Exit status for configuration and usage errors.
pub const USAGE_EXIT_CODE: i32 = 2;

pub fn emit_report(records: &[CheckRecord], mode: OutputFormat) -> String {
    let mut out = String::new();
    match mode {
        OutputFormat::Json => {
            for r in records {
                let line = json!({
                    "check_id": r.check_id,
                    "paper_anchor": r.paper_anchor,
                    "status": r.status.as_str(),
                    "details": r.details,
                    "elapsed": r.elapsed_ms,
                });
                out.push_str(&serde_json::to_string(&line).expect("serializable"));
                out.push('\n');
            }
        }
        OutputFormat::Text => {
            let _ = writeln!(out, "{:<18} {:<6} {:>8}  claim", "check", "status", "ms");
            for r in records {
                let _ = writeln!(
                    out,
                    "{:<18} {:<6} {:>8}  {}",
                    r.check_id,
                    r.status.as_str(),
                    r.elapsed_ms,
                    r.paper_anchor
                );
                if r.status != Status::Pass {
                    let _ = writeln!(out, "    {}", r.details);
                }
            }
            let passed = records.iter().filter(|r| r.status == Status::Pass).count();
            if !records.is_empty() {
                let _ = writeln!(out, "{passed}/{} passed", records.len());
            }
        }
    }
    out
}
