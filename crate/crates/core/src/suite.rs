//! Named batteries of checks: agreement with the brute-force oracle,
//! agreement with the closed-form values, and structural invariants.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::gfq::{Elem, Field};
use crate::linalg::Matrix;
use crate::lindim::{
    bound_affine, bounds_intransitive, exact_direct_product, formula_2transitive_table,
    formula_sn_family, formula_wreath_imprimitive, formula_wreath_product, lindim_2transitive,
    lindim_auto, lindim_general, lindim_oracle, lindim_primitive, witness_verify, LinDimError,
    LinDimResult, LinDimValue, SnCase, TwoTransitive, WitnessCertificate,
};
use crate::perm::{catalog, GroupAction, PermGroup, Permutation};
use crate::permmod::{submodule_lattice, FGModule, DEFAULT_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteName {
    Oracle,
    Theorems,
    Invariants,
}

impl FromStr for SuiteName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "oracle" => Ok(SuiteName::Oracle),
            "theorems" => Ok(SuiteName::Theorems),
            "invariants" => Ok(SuiteName::Invariants),
            _ => Err(format!("unknown suite {s:?}, expected oracle, theorems or invariants")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteRow {
    pub case: String,
    pub field: String,
    pub computed: String,
    pub expected: String,
    pub theorem: String,
    pub pass: bool,
}

impl SuiteRow {
    pub fn status(&self) -> &'static str {
        if self.pass {
            "PASS"
        } else {
            "FAIL"
        }
    }
}

impl fmt::Display for SuiteRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} computed={} expected={} [{}] {}",
            self.case,
            self.field,
            self.computed,
            self.expected,
            self.theorem,
            self.status()
        )
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    pub cap: usize,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            cap: DEFAULT_CAP,
            seed: 0,
        }
    }
}

pub fn run_suite(name: SuiteName, cfg: &SuiteConfig) -> Vec<SuiteRow> {
    match name {
        SuiteName::Oracle => oracle_suite(cfg),
        SuiteName::Theorems => theorems_suite(cfg),
        SuiteName::Invariants => invariants_suite(cfg),
    }
}

fn gf(q: u64) -> Field {
    Field::with_order(q).expect("valid field order")
}

fn field_name(f: &Field) -> String {
    format!("GF({})", f.q())
}

fn row(case: &str, field: &str, computed: String, expected: String, theorem: &str, pass: bool) -> SuiteRow {
    SuiteRow {
        case: case.to_string(),
        field: field.to_string(),
        computed,
        expected,
        theorem: theorem.to_string(),
        pass,
    }
}

fn error_row(case: &str, field: &str, expected: String, theorem: &str, e: &LinDimError) -> SuiteRow {
    row(case, field, format!("error:{}", e.name()), expected, theorem, false)
}

fn witness_ok(r: &LinDimResult, a: &GroupAction) -> bool {
    r.witness.as_ref().is_some_and(|w| witness_verify(w, a).is_ok())
}

/// `lindim_general` against `lindim_oracle` on every transitive group of
/// degree at most 6 in the catalogue, over GF(2) and GF(3).
pub fn oracle_suite(cfg: &SuiteConfig) -> Vec<SuiteRow> {
    let mut rows = Vec::new();
    for n in 1..=6 {
        for (name, g) in catalog::transitive(n) {
            let a = GroupAction::natural(&g);
            for q in [2, 3] {
                let f = gf(q);
                let fname = field_name(&f);
                let oracle = match lindim_oracle(&a, &f) {
                    Ok(r) => r,
                    Err(e) => {
                        rows.push(error_row(name, &fname, "?".into(), "oracle", &e));
                        continue;
                    }
                };
                let expected = oracle.value.to_string();
                match lindim_general(&a, &f, cfg.cap, cfg.seed) {
                    Ok(r) => {
                        let pass = r.complete
                            && r.value == oracle.value
                            && witness_ok(&r, &a)
                            && witness_ok(&oracle, &a);
                        rows.push(row(name, &fname, r.value.to_string(), expected, "oracle", pass));
                    }
                    Err(e) => rows.push(error_row(name, &fname, expected, "oracle", &e)),
                }
            }
        }
    }
    rows
}

fn natural(name: &str) -> GroupAction {
    GroupAction::natural(&catalog::get(name).expect("catalogue group"))
}

fn perm(n: usize, images: impl Fn(usize) -> usize) -> Permutation {
    Permutation::from_images((0..n).map(images).collect()).expect("bijection")
}

/// `AGL(d, p)` on the `p^d` vectors of `GF(p)^d`, vectors indexed in base `p`.
pub fn affine_group(d: usize, p: usize) -> PermGroup {
    let n = p.pow(d as u32);
    let digits = |x: usize| -> Vec<usize> { (0..d).map(|i| (x / p.pow(i as u32)) % p).collect() };
    let index = |v: &[usize]| -> usize { v.iter().enumerate().map(|(i, c)| c * p.pow(i as u32)).sum() };
    let mut gens = vec![perm(n, |x| {
        let mut v = digits(x);
        v[0] = (v[0] + 1) % p;
        index(&v)
    })];
    let root = (1..p.max(2))
        .find(|&r| (1..p - 1).all(|e| r.pow(e as u32) % p != 1))
        .unwrap_or(1);
    if root != 1 {
        gens.push(perm(n, |x| {
            let mut v = digits(x);
            v[0] = v[0] * root % p;
            index(&v)
        }));
    }
    for i in 0..d {
        for j in 0..d {
            if i != j {
                gens.push(perm(n, |x| {
                    let mut v = digits(x);
                    v[i] = (v[i] + v[j]) % p;
                    index(&v)
                }));
            }
        }
    }
    PermGroup::new(n, gens).expect("affine generators")
}

enum Expect {
    Exact(u64),
    AtMost(u64),
}

struct TheoremCase {
    case: String,
    field: Field,
    action: GroupAction,
    expected: Result<Expect, LinDimError>,
    theorem: &'static str,
    general: bool,
}

fn theorem_cases(cfg: &SuiteConfig) -> Vec<TheoremCase> {
    let mut cases = Vec::new();
    let mut push = |case: String, q: u64, action: GroupAction, expected: Result<Expect, LinDimError>, theorem, general| {
        cases.push(TheoremCase {
            case,
            field: gf(q),
            action,
            expected,
            theorem,
            general,
        })
    };
    let exact = |r: Result<u64, LinDimError>| r.map(Expect::Exact);

    let c6 = GroupAction::regular(&PermGroup::cyclic(6)).expect("regular C6");
    push("C6-regular".into(), 2, c6, Ok(Expect::Exact(4)), "worked-example", true);
    let s4 = PermGroup::symmetric(4);
    let c4 = Permutation::from_cycles(4, &[vec![0, 1, 2, 3]]).expect("4-cycle");
    let cosets = GroupAction::cosets(&s4, &[c4]).expect("cosets of C4");
    push("S4-cosets-C4".into(), 3, cosets.clone(), Ok(Expect::Exact(3)), "worked-example", true);
    push("S4-cosets-C4".into(), 2, cosets, Ok(Expect::Exact(4)), "worked-example", true);

    for n in 3..=8u64 {
        for q in [2u64, 3, 4, 5] {
            let a = GroupAction::natural(&PermGroup::symmetric(n as usize));
            let p = gf(q).p() as u64;
            let e = exact(formula_sn_family(SnCase::Natural { n }, p));
            push(format!("S{n}-natural"), q, a, e, "symmetric-natural", true);
        }
    }

    let c15 = GroupAction::regular(&PermGroup::cyclic(15)).expect("regular C15");
    push("C15-regular".into(), 2, c15, Ok(Expect::Exact(4)), "worked-example", true);

    for (label, k, l, q) in [
        ("S3wrS2-imprimitive", PermGroup::symmetric(3), PermGroup::symmetric(2), 2u64),
        ("C2wrS3-imprimitive", PermGroup::symmetric(2), PermGroup::symmetric(3), 2),
        ("C3wrS2-imprimitive", PermGroup::cyclic(3), PermGroup::symmetric(2), 3),
    ] {
        let ka = GroupAction::natural(&k);
        let f = gf(q);
        let a = GroupAction::wreath_imprimitive(&k, &l).expect("wreath product");
        let e = lindim_general(&ka, &f, cfg.cap, cfg.seed).and_then(|rk| {
            let lk = rk.value.exact().ok_or_else(|| LinDimError::BadParameter("inexact lindim_K".into()))?;
            exact(formula_wreath_imprimitive(
                k.degree() as u64,
                l.degree() as u64,
                ka.is_regular(),
                lk as u64,
                f.p() as u64,
            ))
        });
        push(label.into(), q, a, e, "imprimitive-wreath", true);
    }

    let s3 = PermGroup::symmetric(3);
    let s2 = PermGroup::symmetric(2);
    let prod = GroupAction::wreath_product(&s3, &s2).expect("product action");
    for q in [3u64, 2] {
        push("S3wrS2-product".into(), q, prod.clone(), exact(formula_wreath_product(3, 2, q)), "product-wreath", true);
    }

    let s10 = GroupAction::ksubsets(&PermGroup::symmetric(10), 2).expect("2-sets");
    for q in [2u64, 3, 5] {
        let e = exact(formula_sn_family(SnCase::KSets { n: 10, k: 2 }, q));
        push("S10-2sets".into(), q, s10.clone(), e, "symmetric-ksets", false);
    }

    let table = |c: TwoTransitive, q: u64| {
        let f = gf(q);
        exact(formula_2transitive_table(c, f.p() as u64, f.t()))
    };
    let fallback = |c: TwoTransitive, q: u64| {
        let f = gf(q);
        exact(lindim_2transitive(c, f.p() as u64, f.t()))
    };
    push("PSL32-7".into(), 2, natural("PSL32"), table(TwoTransitive::ProjectiveSpace { d: 3, q: 2 }, 2), "2-transitive", false);
    let line7 = TwoTransitive::ProjectiveLine { q: 7, in_psigmal: true };
    push("PSL27-8".into(), 2, natural("PSL27_8"), table(line7, 2), "2-transitive", false);
    push("A7-15".into(), 2, natural("A7_15"), table(TwoTransitive::Alternating7On15, 2), "2-transitive", false);
    push("M11-12".into(), 3, natural("M11_12"), table(TwoTransitive::Mathieu11On12, 3), "2-transitive", false);
    push("PSL211-11".into(), 3, natural("PSL211_11"), table(TwoTransitive::Psl2Of11On11, 3), "2-transitive", false);
    push("PSL32-7".into(), 3, natural("PSL32"), fallback(TwoTransitive::ProjectiveSpace { d: 3, q: 2 }, 3), "2-transitive", false);
    push("PSL27-8".into(), 3, natural("PSL27_8"), fallback(line7, 3), "2-transitive", false);
    push("M11-12".into(), 2, natural("M11_12"), fallback(TwoTransitive::Mathieu11On12, 2), "2-transitive", false);
    push("PSL211-11".into(), 2, natural("PSL211_11"), fallback(TwoTransitive::Psl2Of11On11, 2), "2-transitive", false);

    for (d, p, t) in [(1usize, 5usize, 1u64), (1, 7, 1), (2, 2, 1), (2, 3, 1), (3, 2, 1), (1, 3, 2), (2, 2, 2)] {
        let g = affine_group(d, p);
        let b = bound_affine(d as u64, 1, t);
        let e = if b.exact { Expect::Exact(b.value) } else { Expect::AtMost(b.value) };
        push(format!("AGL{d}_{p}"), (p as u64).pow(t as u32), GroupAction::natural(&g), Ok(e), "affine", true);
    }
    cases
}

/// Computed values against the closed forms, on the desk-scale instances.
pub fn theorems_suite(cfg: &SuiteConfig) -> Vec<SuiteRow> {
    let mut rows = Vec::new();
    for c in theorem_cases(cfg) {
        let fname = field_name(&c.field);
        let expected = match c.expected {
            Ok(e) => e,
            Err(e) => {
                rows.push(error_row(&c.case, &fname, format!("error:{}", e.name()), c.theorem, &e));
                continue;
            }
        };
        let expected_text = match expected {
            Expect::Exact(v) => v.to_string(),
            Expect::AtMost(v) => format!("<={v}"),
        };
        let result = if c.general {
            lindim_general(&c.action, &c.field, cfg.cap, cfg.seed)
        } else {
            lindim_auto(&c.action, &c.field, cfg.cap, cfg.seed)
        };
        match result {
            Ok(r) => {
                let pass = witness_ok(&r, &c.action)
                    && match (expected, r.value) {
                        (Expect::Exact(v), LinDimValue::Exact(got)) => got as u64 == v,
                        (Expect::AtMost(v), LinDimValue::Exact(got)) => got as u64 <= v,
                        _ => false,
                    };
                rows.push(row(&c.case, &fname, r.value.to_string(), expected_text, c.theorem, pass));
            }
            Err(e) => rows.push(error_row(&c.case, &fname, expected_text, c.theorem, &e)),
        }
    }
    rows
}

/// Memoised `lindim_general` results, each checked once for a valid witness.
struct Pool {
    cfg: SuiteConfig,
    results: HashMap<(String, u32), Result<LinDimResult, LinDimError>>,
    seen: Vec<(String, Field, GroupAction)>,
    rows: Vec<SuiteRow>,
}

impl Pool {
    fn new(cfg: &SuiteConfig) -> Pool {
        Pool {
            cfg: *cfg,
            results: HashMap::new(),
            seen: Vec::new(),
            rows: Vec::new(),
        }
    }

    fn get(&mut self, name: &str, a: &GroupAction, f: &Field) -> Option<LinDimResult> {
        let key = (name.to_string(), f.q());
        if !self.results.contains_key(&key) {
            let r = lindim_general(a, f, self.cfg.cap, self.cfg.seed);
            let fname = field_name(f);
            match &r {
                Ok(res) => {
                    let verdict = match &res.witness {
                        Some(w) => witness_verify(w, a).map_err(|e| e.to_string()),
                        None => Err("no witness".into()),
                    };
                    let pass = verdict.is_ok() && res.complete;
                    let computed = verdict.err().unwrap_or_else(|| "valid".into());
                    self.rows.push(row(name, &fname, computed, "valid".into(), "witness-verifies", pass));
                    self.seen.push((name.to_string(), f.clone(), a.clone()));
                }
                Err(e) => self.rows.push(error_row(name, &fname, "valid".into(), "witness-verifies", e)),
            }
            self.results.insert(key.clone(), r);
        }
        self.results[&key].as_ref().ok().cloned()
    }

    fn value(&mut self, name: &str, a: &GroupAction, f: &Field) -> Option<usize> {
        self.get(name, a, f).and_then(|r| r.value.exact())
    }
}

fn module_of(w: &WitnessCertificate) -> FGModule {
    FGModule::new(&w.field, w.dim, w.rho.clone()).expect("witness matrices are invertible")
}

/// Normalised line through a nonzero vector.
fn line_key(f: &Field, v: &[Elem]) -> Option<Vec<Elem>> {
    let lead = v.iter().find(|x| !x.is_zero())?;
    let inv = f.inv(*lead).expect("nonzero");
    Some(v.iter().map(|&x| f.mul(x, inv)).collect())
}

fn is_block_system(a: &GroupAction, parts: &[Vec<usize>]) -> bool {
    let mut part_of = vec![0; a.size()];
    for (i, p) in parts.iter().enumerate() {
        for &x in p {
            part_of[x] = i;
        }
    }
    a.induced_gens().iter().all(|g| {
        parts.iter().all(|p| {
            let target = part_of[g.apply(p[0])];
            p.iter().all(|&x| part_of[g.apply(x)] == target)
        })
    })
}

/// Fixed-space dimension of `y` on the witness of `a`, with `y` transported
/// through the witness quotient.
pub fn transported_fixed_dim(a: &GroupAction, w: &WitnessCertificate, y: &Permutation) -> usize {
    let m = FGModule::permutation(a, &w.field);
    let (_, proj) = m.quotient(&w.kernel).expect("witness kernel is invariant");
    let my = FGModule::quotient_matrix(&proj, &Matrix::permutation(&w.field, &y.images()));
    if w.dim == 0 {
        return 0;
    }
    my.sub(&Matrix::identity(&w.field, w.dim)).left_kernel().dim()
}

/// The 6-cycles `c` on `S_2 wr S_3` and `S_3 wr S_2` (block-major indexing)
/// whose squares are compared.
pub fn c6_two_witness_cycles() -> (Permutation, Permutation) {
    let c = perm(6, |x| {
        let (i, d) = (x / 2, x % 2);
        let d2 = (d + usize::from(i == 2)) % 2;
        ((i + 1) % 3) * 2 + d2
    });
    let c2 = perm(6, |x| {
        let (i, d) = (x / 3, x % 3);
        ((i + 1) % 2) * 3 + (d + 1) % 3
    });
    (c, c2)
}

fn shifted_product(gs: &[PermGroup]) -> PermGroup {
    let n: usize = gs.iter().map(PermGroup::degree).sum();
    let mut gens = Vec::new();
    let mut shift = 0;
    for g in gs {
        gens.extend(g.gens().iter().map(|p| p.shifted(shift, n)));
        shift += g.degree();
    }
    PermGroup::new(n, gens).expect("direct product")
}

/// Structural properties on a pool of small instances.
pub fn invariants_suite(cfg: &SuiteConfig) -> Vec<SuiteRow> {
    let mut pool = Pool::new(cfg);
    let mut rows = Vec::new();
    let (f2, f3, f4) = (gf(2), gf(3), gf(4));
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);

    let mut transitive: Vec<(String, GroupAction)> = Vec::new();
    for n in 2..=6 {
        for (name, g) in catalog::transitive(n) {
            transitive.push((name.to_string(), GroupAction::natural(&g)));
        }
    }

    // monotonicity under subgroups
    for (name, a) in transitive.iter().filter(|(_, a)| a.size() >= 4) {
        let g = a.group();
        for (j, count) in [1usize, 2].into_iter().enumerate() {
            let gens: Vec<Permutation> = (0..count).map(|_| g.random_element(&mut rng)).collect();
            let h = g.subgroup(gens).expect("random elements lie in the group");
            let b = a.restrict(&h).expect("restriction");
            let hname = format!("{name}>H{}", j + 1);
            let (lg, lh) = (pool.value(name, a, &f2), pool.value(&hname, &b, &f2));
            let (computed, pass) = match (lh, lg) {
                (Some(x), Some(y)) => (format!("{x}<={y}"), x <= y),
                _ => ("error".into(), false),
            };
            rows.push(row(&hname, "GF(2)", computed, "H<=G".into(), "subgroup-monotone", pass));
        }
    }

    // field extension GF(2) < GF(4)
    for (name, a) in transitive.iter().filter(|(_, a)| a.size() >= 3) {
        let (l2, l4) = (pool.value(name, a, &f2), pool.value(name, a, &f4));
        let (computed, pass) = match (l2, l4) {
            (Some(x), Some(y)) => (format!("{y}<={x}<={}", 2 * y), y <= x && x <= 2 * y),
            _ => ("error".into(), false),
        };
        rows.push(row(name, "GF(2)/GF(4)", computed, "l4<=l2<=2*l4".into(), "field-extension", pass));
    }

    // intransitive sandwich between orbit values
    let mut intransitive: Vec<(String, GroupAction)> = Vec::new();
    for (label, gs) in [
        ("S2xS3", vec![PermGroup::symmetric(2), PermGroup::symmetric(3)]),
        ("S3xS3", vec![PermGroup::symmetric(3), PermGroup::symmetric(3)]),
        ("C2xC2", vec![PermGroup::cyclic(2), PermGroup::cyclic(2)]),
        ("C3xS3", vec![PermGroup::cyclic(3), PermGroup::symmetric(3)]),
        ("A4xC2", vec![PermGroup::alternating(4), PermGroup::cyclic(2)]),
        ("S4xC3", vec![PermGroup::symmetric(4), PermGroup::cyclic(3)]),
        ("D4xC2xC3", vec![PermGroup::dihedral(4), PermGroup::cyclic(2), PermGroup::cyclic(3)]),
    ] {
        intransitive.push((label.to_string(), GroupAction::natural(&shifted_product(&gs))));
    }
    for (label, g) in [
        ("S4", PermGroup::symmetric(4)),
        ("A4", PermGroup::alternating(4)),
        ("D4", PermGroup::dihedral(4)),
    ] {
        let u = GroupAction::disjoint_union(
            &GroupAction::natural(&g),
            &GroupAction::ksubsets(&g, 2).expect("2-sets"),
        )
        .expect("same group");
        intransitive.push((format!("{label}-points+2sets"), u));
    }
    for (label, g) in [("S3", PermGroup::symmetric(3)), ("C4", PermGroup::cyclic(4))] {
        let nat = GroupAction::natural(&g);
        let reg = GroupAction::regular(&g).expect("regular");
        intransitive.push((format!("{label}-points+regular"), GroupAction::disjoint_union(&nat, &reg).expect("same group")));
        intransitive.push((format!("{label}-points+points"), GroupAction::disjoint_union(&nat, &nat).expect("same group")));
    }
    for (name, a) in &intransitive {
        for f in [&f2, &f3] {
            let whole = pool.value(name, a, f);
            let mut parts = Vec::new();
            for (i, orbit) in a.induced_group().orbits().iter().enumerate() {
                let oa = a.on_orbit(orbit).expect("orbit action");
                let oname = format!("{name}/orbit{}", i + 1);
                parts.push(pool.value(&oname, &oa, f));

                // the orbit action is unfaithful; compare with its induced group
                let faithful = GroupAction::natural(oa.induced_group());
                let fname = format!("{oname}-faithful");
                let (x, y) = (pool.value(&oname, &oa, f), pool.value(&fname, &faithful, f));
                let (computed, pass) = match (x, y) {
                    (Some(x), Some(y)) => (format!("{x}"), x == y),
                    _ => ("error".into(), false),
                };
                let expected = y.map_or("?".into(), |y| y.to_string());
                rows.push(row(&oname, &field_name(f), computed, expected, "kernel-quotient", pass));
            }
            let parts: Option<Vec<u64>> = parts.into_iter().map(|v| v.map(|x| x as u64)).collect();
            let (computed, expected, pass) = match (whole, parts) {
                (Some(w), Some(p)) => {
                    let (lo, hi) = bounds_intransitive(&p);
                    (w.to_string(), format!("[{lo},{hi}]"), lo <= w as u64 && w as u64 <= hi)
                }
                _ => ("error".into(), "?".into(), false),
            };
            rows.push(row(name, &field_name(f), computed, expected, "intransitive-sandwich", pass));
        }
    }

    // Sym(O1) x Sym(O2) with |O_i| = 4: the sum is attained
    let s4s4 = GroupAction::natural(&shifted_product(&[PermGroup::symmetric(4), PermGroup::symmetric(4)]));
    let expected = exact_direct_product(&[3, 3], true).expect("hypothesis asserted");
    let got = pool.value("S4xS4", &s4s4, &f2);
    rows.push(row(
        "S4xS4",
        "GF(2)",
        got.map_or("error".into(), |v| v.to_string()),
        expected.to_string(),
        "intransitive-exact",
        got == Some(expected as usize),
    ));

    // cyclic actions embedding in the multiplicative group
    for (name, n, q) in [("C4", 4usize, 5u64), ("C6", 6, 7), ("C3", 3, 4), ("C2", 2, 3)] {
        let a = GroupAction::natural(&PermGroup::cyclic(n));
        pool.value(name, &a, &gf(q));
    }

    // primitive instances for the fast path and witness structure
    let mut primitive: Vec<(String, GroupAction)> = transitive
        .iter()
        .filter(|(_, a)| a.is_primitive() && a.size() >= 3)
        .cloned()
        .collect();
    primitive.push(("PSL32".into(), natural("PSL32")));
    primitive.push(("PSL27_8".into(), natural("PSL27_8")));
    primitive.push((
        "S5-2sets".into(),
        GroupAction::ksubsets(&PermGroup::symmetric(5), 2).expect("2-sets"),
    ));
    primitive.push(("AGL2_3".into(), GroupAction::natural(&affine_group(2, 3))));
    for (name, a) in &primitive {
        for f in [&f2, &f3] {
            let general = pool.value(name, a, f);
            if a.induced_group().is_cyclic() {
                continue;
            }
            let fast = lindim_primitive(a, f, cfg.seed);
            let (computed, pass) = match (&fast, general) {
                (Ok(r), Some(g)) => (r.value.to_string(), r.value == LinDimValue::Exact(g) && witness_ok(r, a)),
                (Err(e), _) => (format!("error:{}", e.name()), false),
                _ => ("?".into(), false),
            };
            let expected = general.map_or("?".into(), |g| g.to_string());
            rows.push(row(name, &field_name(f), computed, expected, "fastpath-agreement", pass));
        }
    }

    // lattice-level checks on the permutation modules
    for (name, a) in transitive.iter().filter(|(_, a)| a.size() >= 3).take(14) {
        let m = FGModule::permutation(a, &f2);
        let Ok(lat) = submodule_lattice(&m, cfg.cap, cfg.seed) else {
            rows.push(row(name, "GF(2)", "error".into(), "closed".into(), "lattice-self-dual", false));
            continue;
        };
        let dual = lat.nodes.iter().all(|u| lat.index_of(&u.perp()).is_some());
        rows.push(row(
            name,
            "GF(2)",
            format!("{} nodes", lat.nodes.len()),
            "closed under perp".into(),
            "lattice-self-dual",
            dual && lat.complete,
        ));
        let blocks = lat
            .nodes
            .iter()
            .all(|u| is_block_system(a, &m.submodule_congruence(u).expect("invariant")));
        rows.push(row(name, "GF(2)", format!("{}", blocks), "true".into(), "congruence-blocks", blocks));
    }

    // properties of every computed witness
    let seen = pool.seen.clone();
    for (name, f, a) in &seen {
        let Some(r) = pool.get(name, a, f) else { continue };
        let Some(w) = r.witness.as_ref() else { continue };
        let fname = field_name(f);
        if r.value == LinDimValue::Exact(1) {
            let cyclic = a.induced_group().is_cyclic();
            rows.push(row(name, &fname, "1".into(), "cyclic".into(), "cyclic-criterion", cyclic));
        }
        let primitive = a.size() >= 2 && a.is_transitive() && a.is_primitive();
        if primitive && !a.is_regular() {
            let fixed = module_of(w).fixed_space().dim();
            rows.push(row(name, &fname, fixed.to_string(), "0".into(), "fixed-space-zero", fixed == 0));
        }
        if primitive && w.dim >= 2 {
            let f = &w.field;
            let mut lines = std::collections::HashSet::new();
            let distinct = w
                .phi
                .iter()
                .filter_map(|v| line_key(f, v))
                .all(|k| lines.insert(k));
            rows.push(row(name, &fname, distinct.to_string(), "true".into(), "scalar-separation", distinct));
        }
        if primitive && !a.induced_group().is_abelian() && w.dim >= 1 {
            let wm = module_of(w);
            if let Ok(lat) = submodule_lattice(&wm, cfg.cap, cfg.seed) {
                if lat.nodes.len() > 2 {
                    let ok = lat.complete
                        && lat.nodes.len() == 3
                        && lat.nodes[1].codim() == 1
                        && wm
                            .quotient(&lat.nodes[1])
                            .map(|(q, _)| q.gens().iter().all(Matrix::is_identity))
                            .unwrap_or(false);
                    rows.push(row(
                        name,
                        &fname,
                        format!("{} submodules", lat.nodes.len()),
                        "3, top factor trivial".into(),
                        "reducible-witness",
                        ok,
                    ));
                }
            }
        }
    }

    // the two C6 witnesses
    let (c, c2) = c6_two_witness_cycles();
    for (label, k, l, cyc, want) in [
        ("C6-via-S2wrS3", PermGroup::symmetric(2), PermGroup::symmetric(3), &c, 2usize),
        ("C6-via-S3wrS2", PermGroup::symmetric(3), PermGroup::symmetric(2), &c2, 0),
    ] {
        let a = GroupAction::wreath_imprimitive(&k, &l).expect("wreath product");
        let y = cyc.mul(cyc);
        let in_group = a.group().contains(cyc);
        let computed = match pool.get(label, &a, &f2) {
            Some(r) if in_group => r
                .witness
                .as_ref()
                .map(|w| transported_fixed_dim(&a, w, &y).to_string())
                .unwrap_or_else(|| "no witness".into()),
            Some(_) => "c outside group".into(),
            None => "error".into(),
        };
        let pass = computed == want.to_string();
        rows.push(row(label, "GF(2)", computed, want.to_string(), "two-witnesses", pass));
    }

    let mut out = pool.rows;
    out.extend(rows);
    out
}

/// Number of rows carrying the given tag, and how many of them pass.
pub fn tally(rows: &[SuiteRow], theorem: &str) -> (usize, usize) {
    let tagged: Vec<&SuiteRow> = rows.iter().filter(|r| r.theorem == theorem).collect();
    (tagged.len(), tagged.iter().filter(|r| r.pass).count())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn affine_groups_have_the_right_order() {
        assert_eq!(affine_group(1, 5).order(), 20);
        assert_eq!(affine_group(2, 2).order(), 24);
        assert_eq!(affine_group(2, 3).order(), 432);
        assert_eq!(affine_group(3, 2).order(), 1344);
    }

    #[test]
    fn two_witness_cycles_have_order_six() {
        let (c, c2) = c6_two_witness_cycles();
        assert_eq!(c.order(), 6);
        assert_eq!(c2.order(), 6);
    }

    #[test]
    fn row_text() {
        let r = row("S3wrS2-product", "GF(3)", "3".into(), "3".into(), "product-wreath", true);
        assert_eq!(r.to_string(), "S3wrS2-product GF(3) computed=3 expected=3 [product-wreath] PASS");
        assert_eq!("oracle".parse::<SuiteName>(), Ok(SuiteName::Oracle));
    }

    #[test]
    fn subspace_line_keys() {
        let f = gf(3);
        let a = vec![Elem::from_code(2), Elem::ONE];
        let b = vec![Elem::ONE, Elem::from_code(2)];
        assert_eq!(line_key(&f, &a), line_key(&f, &b));
        assert_eq!(line_key(&f, &[Elem::ZERO; 2]), None);
    }
}
