//! Named verification suites. Each suite walks every block or element at
//! the configured scale, counts the identities it checked and stops at
//! the first counterexample.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::rngs::StdRng;
use rand::SeedableRng;
use serde::Serialize;
use serde_json::json;

use crate::canonical::{
    balanced_split, bar_matrix, global_upper_from, multiplicity_adjoint, multiplicity_direct, random_a_vector,
    solve_lower, Block, SolveOrder, TransitionMatrix,
};
use crate::config::{JobConfig, Mode};
use crate::error::{Error, Result};
use crate::freealg::{is_zero_in_uq, mod_etilde, mod_ftilde, pbw_coords, pbw_element, ublock, WordVector};
use crate::mseg::{crystal_triple, enumerate_multisegments, pairing, signature_ops, Multisegment, Window};
use crate::qcoeff::{qint, RatFunc};
use crate::theta::{
    enumerate_theta, theta_block, theta_formula_ops, theta_ops, theta_signature_ops, ThetaMultisegment,
};
use crate::thetamod::{
    e_op, e_op_pushed, f_op, ptheta_vector, t_op, theta_block_data, theta_coords, theta_mod_ops,
    ThetaClassVector,
};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Suite {
    CrystalAxioms,
    OracleCrossCheck,
    Serre,
    Gram,
    PbwCrystalCompat,
    BarTriangular,
    GlobalBasis,
    ThetaDims,
    QbosonRelations,
    MultiplicityConsistency,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::CrystalAxioms,
        Suite::OracleCrossCheck,
        Suite::Serre,
        Suite::Gram,
        Suite::PbwCrystalCompat,
        Suite::BarTriangular,
        Suite::GlobalBasis,
        Suite::ThetaDims,
        Suite::QbosonRelations,
        Suite::MultiplicityConsistency,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::CrystalAxioms => "crystal-axioms",
            Suite::OracleCrossCheck => "oracle-cross-check",
            Suite::Serre => "serre",
            Suite::Gram => "gram",
            Suite::PbwCrystalCompat => "pbw-crystal-compat",
            Suite::BarTriangular => "bar-triangular",
            Suite::GlobalBasis => "global-basis",
            Suite::ThetaDims => "theta-dims",
            Suite::QbosonRelations => "qboson-relations",
            Suite::MultiplicityConsistency => "multiplicity-consistency",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
            Error::Config(format!("unknown suite '{s}' (expected one of {})", names.join(", ")))
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for Suite {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct CheckCount {
    pub name: String,
    pub count: usize,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Counterexample {
    pub check: String,
    pub detail: serde_json::Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub config: JobConfig,
    pub checks: Vec<CheckCount>,
    pub warnings: Vec<String>,
    pub counterexample: Option<Counterexample>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    pub fn total(&self) -> usize {
        self.checks.iter().map(|c| c.count).sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("serializable");
        v["passed"] = json!(self.passed());
        v
    }

    pub fn to_text(&self) -> String {
        let c = &self.config;
        let mut out = format!(
            "suite {} ({}, window {}, degree <= {}): {}\n",
            self.suite,
            c.mode,
            c.window,
            c.max_degree,
            if self.passed() { "PASS" } else { "FAIL" }
        );
        for check in &self.checks {
            out.push_str(&format!("  {}: {}\n", check.name, check.count));
        }
        for w in &self.warnings {
            out.push_str(&format!("  warning: {w}\n"));
        }
        if let Some(ce) = &self.counterexample {
            out.push_str(&format!("  counterexample [{}]: {}\n", ce.check, ce.detail));
        }
        out
    }
}

enum Halt {
    Found,
    Failed(Error),
}

impl From<Error> for Halt {
    fn from(e: Error) -> Self {
        Halt::Failed(e)
    }
}

type Step = std::result::Result<(), Halt>;

#[derive(Default)]
struct Checker {
    checks: Vec<CheckCount>,
    warnings: Vec<String>,
    counterexample: Option<Counterexample>,
}

impl Checker {
    fn check(&mut self, name: &str, ok: bool, detail: impl FnOnce() -> serde_json::Value) -> Step {
        let slot = match self.checks.iter().position(|c| c.name == name) {
            Some(k) => k,
            None => {
                self.checks.push(CheckCount { name: name.to_string(), count: 0 });
                self.checks.len() - 1
            }
        };
        if ok {
            self.checks[slot].count += 1;
            Ok(())
        } else {
            self.counterexample = Some(Counterexample { check: name.to_string(), detail: detail() });
            Err(Halt::Found)
        }
    }

    /// Runs `f`, turning a library error into a counterexample of `name`.
    fn attempt<T>(&mut self, name: &str, r: Result<T>) -> std::result::Result<T, Halt> {
        r.or_else(|e| {
            self.check(name, false, || json!(e.to_string()))?;
            unreachable!()
        })
    }
}

/// Runs one suite. Invalid configurations are errors; failed identities
/// come back as a report with a counterexample.
pub fn run_suite(suite: Suite, config: &JobConfig) -> Result<SuiteReport> {
    config.validate()?;
    if suite == Suite::ThetaDims && !config.window.is_symmetric() {
        return Err(Error::Config(format!("theta-dims needs a symmetric window, got {}", config.window)));
    }
    let mut ck = Checker::default();
    let outcome = match suite {
        Suite::CrystalAxioms => crystal_axioms(&mut ck, config),
        Suite::OracleCrossCheck => oracle_cross_check(&mut ck, config),
        Suite::Serre => serre(&mut ck, &config.window),
        Suite::Gram => gram(&mut ck, config),
        Suite::PbwCrystalCompat => pbw_crystal_compat(&mut ck, config),
        Suite::BarTriangular => bar_triangular(&mut ck, config),
        Suite::GlobalBasis => global_basis(&mut ck, config),
        Suite::ThetaDims => theta_dims(&mut ck, config),
        Suite::QbosonRelations => qboson_relations(&mut ck, config),
        Suite::MultiplicityConsistency => multiplicity_consistency(&mut ck, config),
    };
    if let Err(Halt::Failed(e)) = outcome {
        ck.counterexample = Some(Counterexample { check: "error".into(), detail: json!(e.to_string()) });
    }
    Ok(SuiteReport {
        suite,
        config: config.clone(),
        checks: ck.checks,
        warnings: ck.warnings,
        counterexample: ck.counterexample,
    })
}

type Triple = (u32, Option<Multisegment>, Multisegment);

fn type_a_ops(i: i32, m: &Multisegment) -> Triple {
    let t = crystal_triple(i, m);
    (t.epsilon, t.etilde, t.ftilde)
}

fn theta_ops_plain(i: i32, m: &Multisegment) -> Triple {
    let t = theta_ops(i, &ThetaMultisegment::wrap(m.clone()));
    (t.epsilon, t.etilde.map(ThetaMultisegment::into_inner), t.ftilde.into_inner())
}

fn elements(config: &JobConfig) -> Result<Vec<Multisegment>> {
    Ok(match config.mode {
        Mode::TypeA => enumerate_multisegments(&config.window, config.max_degree),
        Mode::Theta => enumerate_theta(&config.window, config.max_degree)?.into_iter().map(Into::into).collect(),
    })
}

fn blocks(config: &JobConfig) -> Result<Vec<Block>> {
    Block::all_up_to(config.mode.into(), &config.window, config.max_degree)
}

/// Window indices plus the neighbours whose operators still see the
/// window: `min − 2` in type A, `±(max + 2)` for θ. Beyond these the
/// operators only add a singleton.
fn acting_indices(config: &JobConfig) -> Vec<i32> {
    let w = config.window.indices();
    let mut out = w.to_vec();
    match config.mode {
        Mode::TypeA => out.push(w[0] - 2),
        Mode::Theta => {
            let top = w[w.len() - 1] + 2;
            out.extend([-top, top]);
        }
    }
    out.sort_unstable();
    out
}

fn crystal_axioms(ck: &mut Checker, config: &JobConfig) -> Step {
    let ops = match config.mode {
        Mode::TypeA => type_a_ops,
        Mode::Theta => theta_ops_plain,
    };
    let indices = acting_indices(config);
    for m in elements(config)? {
        for &i in &indices {
            let (eps, e, f) = ops(i, &m);
            let detail = || json!({ "i": i, "m": m });
            ck.check("E(F(m)) = m", ops(i, &f).1.as_ref() == Some(&m), detail)?;
            if let Some(n) = &e {
                ck.check("F(E(m)) = m", ops(i, n).2 == m, detail)?;
            }
            ck.check("epsilon(F(m)) = epsilon(m) + 1", ops(i, &f).0 == eps + 1, detail)?;
            let mut steps = 0;
            let mut cur = m.clone();
            while let Some(n) = ops(i, &cur).1 {
                cur = n;
                steps += 1;
            }
            ck.check("epsilon = E-nilpotency degree", steps == eps, detail)?;
        }
    }
    Ok(())
}

fn oracle_cross_check(ck: &mut Checker, config: &JobConfig) -> Step {
    let indices = acting_indices(config);
    for m in elements(config)? {
        for &i in &indices {
            let detail = || json!({ "i": i, "m": m });
            if config.mode == Mode::Theta && i < 0 {
                let tm = ThetaMultisegment::wrap(m.clone());
                let ok = theta_formula_ops(-i, &tm) == theta_signature_ops(-i, &tm);
                ck.check("theta formulas = theta signature rule", ok, detail)?;
            } else {
                ck.check("formulas = signature rule", crystal_triple(i, &m) == signature_ops(i, &m), detail)?;
            }
        }
    }
    Ok(())
}

fn serre(ck: &mut Checker, window: &Window) -> Step {
    let w = |letters: &[i32]| WordVector::word(window, letters);
    let two = RatFunc::from(qint(2));
    for &i in window.indices() {
        for &j in window.indices() {
            if i == j {
                continue;
            }
            let detail = || json!({ "i": i, "j": j });
            if (i - j).abs() == 2 {
                let x = &(&w(&[i, i, j])? - &w(&[i, j, i])?.scale(&two)) + &w(&[j, i, i])?;
                ck.check("f_i^2 f_j - [2] f_i f_j f_i + f_j f_i^2 = 0", is_zero_in_uq(&x), detail)?;
                let c = &w(&[i, j])? - &w(&[j, i])?;
                ck.check("adjacent f_i, f_j do not commute", !is_zero_in_uq(&c), detail)?;
            } else {
                let c = &w(&[i, j])? - &w(&[j, i])?;
                ck.check("f_i f_j = f_j f_i for distant i, j", is_zero_in_uq(&c), detail)?;
            }
        }
    }
    Ok(())
}

fn gram(ck: &mut Checker, config: &JobConfig) -> Step {
    for block in blocks(config)? {
        let g = ck.attempt("Gram matrix available", block.gram())?;
        let detail = || json!({ "block": block.to_string() });
        ck.check("Gram matrix nonsingular", g.rank() == g.rows(), detail)?;
        ck.check("Gram matrix symmetric", g.transpose() == *g, detail)?;
    }
    Ok(())
}

/// Coordinates agree with the indicator of `expected` modulo `q𝐀₀`.
fn congruent<M: Ord>(coords: &BTreeMap<M, RatFunc>, expected: Option<&M>) -> bool {
    let hits = coords.iter().all(|(n, x)| {
        let d = if Some(n) == expected { x - &RatFunc::one() } else { x.clone() };
        d.in_q_a0()
    });
    hits && expected.is_none_or(|e| coords.contains_key(e))
}

fn pbw_crystal_compat(ck: &mut Checker, config: &JobConfig) -> Step {
    let window = &config.window;
    match config.mode {
        Mode::TypeA => {
            for m in enumerate_multisegments(window, config.max_degree) {
                let p = pbw_element(window, &m)?;
                for &i in window.indices() {
                    let t = crystal_triple(i, &m);
                    let detail = || json!({ "i": i, "m": m });
                    if m.degree() < config.max_degree {
                        let c = pbw_coords(&mod_ftilde(i, &p)?)?;
                        ck.check("f~ P(m) = P(f~ m) mod qL", congruent(&c, Some(&t.ftilde)), detail)?;
                    }
                    let mut v = p.clone();
                    let mut cur = Some(m.clone());
                    for n in 1..=t.epsilon + 1 {
                        v = mod_etilde(i, &v)?;
                        cur = cur.and_then(|x| crystal_triple(i, &x).etilde);
                        let c = pbw_coords(&v)?;
                        let name = if n == t.epsilon + 1 {
                            "e~^(eps+1) P(m) in qL"
                        } else {
                            "e~^n P(m) = P(e~^n m) mod qL"
                        };
                        ck.check(name, congruent(&c, cur.as_ref()), || json!({ "i": i, "m": m, "n": n }))?;
                    }
                }
            }
        }
        Mode::Theta => {
            for m in enumerate_theta(window, config.max_degree)? {
                let p = ptheta_vector(window, &m)?;
                for &i in window.indices() {
                    let t = theta_ops(i, &m);
                    let detail = || json!({ "i": i, "m": m });
                    let (_, f) = theta_mod_ops(i, &p)?;
                    if m.degree() < config.max_degree {
                        let c = theta_coords(&f)?;
                        ck.check("F~ P(m) = P(F~ m) mod qL", congruent(&c, Some(&t.ftilde)), detail)?;
                    }
                    let mut v = p.clone();
                    let mut cur = Some(m.clone());
                    for n in 1..=t.epsilon + 1 {
                        v = theta_mod_ops(i, &v)?.0;
                        cur = cur.and_then(|x| theta_ops(i, &x).etilde);
                        let c = theta_coords(&v)?;
                        let name = if n == t.epsilon + 1 {
                            "E~^(eps+1) P(m) in qL"
                        } else {
                            "E~^n P(m) = P(E~^n m) mod qL"
                        };
                        ck.check(name, congruent(&c, cur.as_ref()), || json!({ "i": i, "m": m, "n": n }))?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn bar_triangular(ck: &mut Checker, config: &JobConfig) -> Step {
    for block in blocks(config)? {
        let b = ck.attempt("bar matrix unitriangular with A entries", bar_matrix(&block))?;
        ck.check("bar matrix unitriangular with A entries", true, || json!(null))?;
        let inv = &b.entries * &b.entries.bar();
        ck.check("B bar(B) = 1", inv.is_identity(), || json!({ "block": block.to_string() }))?;
    }
    Ok(())
}

const BALANCED_SAMPLES: usize = 3;
const BALANCED_SEED: u64 = 0x5eed;

fn global_basis(ck: &mut Checker, config: &JobConfig) -> Step {
    let mut rng = StdRng::seed_from_u64(BALANCED_SEED);
    for block in blocks(config)? {
        let detail = || json!({ "block": block.to_string() });
        let bar = ck.attempt("bar matrix unitriangular with A entries", bar_matrix(&block))?;
        let c = ck.attempt("lower global basis solvable", solve_lower(&bar, SolveOrder::ColumnMajor))?;
        ck.check("B bar(C) = C", &bar.entries * &c.bar() == c, detail)?;
        let off_ok = c.entries().all(|((r, k), x)| r == k || x.in_q_zq());
        ck.check("C unitriangular, off-diagonal in qQ[q]", c.is_unitriangular(false) && off_ok, detail)?;
        let c_row = ck.attempt("lower global basis solvable", solve_lower(&bar, SolveOrder::RowMajor))?;
        ck.check("C independent of elimination order", c_row == c, detail)?;
        let lower = TransitionMatrix { block: block.clone(), index: bar.index.clone(), entries: c };
        let up = ck.attempt("upper global basis dual", global_upper_from(&lower))?;
        let gram = block.gram()?;
        let dual = &(&up.entries.transpose() * &gram) * &lower.entries;
        ck.check("(G^up, G^low) = identity", dual.is_identity(), detail)?;
        for _ in 0..BALANCED_SAMPLES {
            let x = random_a_vector(&mut rng, lower.dim(), 3);
            let split = balanced_split(&block, &x);
            let ok = split
                .as_ref()
                .is_ok_and(|s| s.low.iter().zip(&s.high).zip(&x).all(|((a, b), v)| &(a + b) == v));
            ck.check("A-vector splits along L0 + q^-1 L_inf", ok, || {
                json!({ "block": block.to_string(), "x": x, "error": split.as_ref().err().map(|e| e.to_string()) })
            })?;
        }
    }
    Ok(())
}

fn theta_dims(ck: &mut Checker, config: &JobConfig) -> Step {
    let window = &config.window;
    for block in Block::all_up_to(crate::canonical::BasisKind::Theta, window, config.max_degree)? {
        let Block::Theta(sym) = &block else { unreachable!() };
        let data = ck.attempt("quotient dimension = theta-restricted count", theta_block_data(sym))?;
        let expected = theta_block(sym).len();
        ck.check(
            "quotient dimension = theta-restricted count",
            data.ambient_dim - data.ideal_rank == expected && data.dim() == expected,
            || json!({ "block": sym.to_string(), "ambient": data.ambient_dim, "ideal": data.ideal_rank, "expected": expected }),
        )?;
    }
    Ok(())
}

fn qboson_relations(ck: &mut Checker, config: &JobConfig) -> Step {
    match config.mode {
        Mode::TypeA => qboson_type_a(ck, config),
        Mode::Theta => qboson_theta(ck, config),
    }
}

fn qboson_type_a(ck: &mut Checker, config: &JobConfig) -> Step {
    let window = &config.window;
    for block in blocks(config)? {
        let Block::TypeA(content) = &block else { unreachable!() };
        let b = ublock(content)?;
        for m in &b.mults {
            let u = pbw_element(window, m)?;
            for &i in window.indices() {
                for &j in window.indices() {
                    let detail = || json!({ "i": i, "j": j, "m": m });
                    let fu = u.left_mul_letter(j)?;
                    let mut x = &fu.eprime(i) - &u.eprime(i).left_mul_letter(j)?.scale(&RatFunc::q_pow(-pairing(i, j)));
                    if i == j {
                        x -= &u;
                    }
                    ck.check("e'_i f_j = q^-(i,j) f_j e'_i + delta_ij", is_zero_in_uq(&x), detail)?;
                    let mut y = &fu.estar(i) - &u.estar(i).left_mul_letter(j)?;
                    if i == j {
                        y -= &u.ad_t(i);
                    }
                    ck.check("e*_i f_j = f_j e*_i + delta_ij Ad(t_i)", is_zero_in_uq(&y), detail)?;
                    let z = &u.estar(j).eprime(i) - &u.eprime(i).estar(j);
                    ck.check("e'_i e*_j = e*_j e'_i", is_zero_in_uq(&z), detail)?;
                }
            }
        }
    }
    Ok(())
}

type Op<'a> = &'a dyn Fn(i32, &ThetaClassVector) -> Result<ThetaClassVector>;

fn serre_element(x: Op, i: i32, j: i32, u: &ThetaClassVector) -> Result<ThetaClassVector> {
    if (i - j).abs() == 2 {
        let a = x(i, &x(i, &x(j, u)?)?)?;
        let b = x(i, &x(j, &x(i, u)?)?)?.scale(&RatFunc::from(qint(2)));
        let c = x(j, &x(i, &x(i, u)?)?)?;
        a.sub(&b)?.add(&c)
    } else {
        x(i, &x(j, u)?)?.sub(&x(j, &x(i, u)?)?)
    }
}

fn theta_pairing_sum(i: i32, j: i32) -> i32 {
    pairing(i, j) + pairing(-i, j)
}

/// Identities are checked on every basis vector whose image stays within
/// `max_degree`.
fn qboson_theta(ck: &mut Checker, config: &JobConfig) -> Step {
    let window = &config.window;
    for m in enumerate_theta(window, config.max_degree)? {
        let u = ptheta_vector(window, &m)?;
        for &i in window.indices() {
            ck.check("E_i via the twisted derivation = E_i pushed through F", e_op(i, &u)?.class_eq(&e_op_pushed(i, &u)?)?, || {
                json!({ "i": i, "m": m })
            })?;
            ck.check("T_i = T_-i", t_op(i, &u)?.class_eq(&t_op(-i, &u)?)?, || json!({ "i": i, "m": m }))?;
            for &j in window.indices() {
                let detail = || json!({ "i": i, "j": j, "m": m });
                let tt = t_op(i, &t_op(j, &u)?)?.class_eq(&t_op(j, &t_op(i, &u)?)?)?;
                ck.check("T_i T_j = T_j T_i", tt, detail)?;

                let s = theta_pairing_sum(i, j);
                let lhs = t_op(i, &e_op(j, &u)?)?;
                let rhs = e_op(j, &t_op(i, &u)?)?.scale(&RatFunc::q_pow(s));
                ck.check("T_i E_j = q^(a_i + a_-i, a_j) E_j T_i", lhs.class_eq(&rhs)?, detail)?;
                if m.degree() < config.max_degree {
                    let lhs = t_op(i, &f_op(j, &u)?)?;
                    let rhs = f_op(j, &t_op(i, &u)?)?.scale(&RatFunc::q_pow(-s));
                    ck.check("T_i F_j = q^-(a_i + a_-i, a_j) F_j T_i", lhs.class_eq(&rhs)?, detail)?;
                }

                let mut rhs = f_op(j, &e_op(i, &u)?)?.scale(&RatFunc::q_pow(-pairing(i, j)));
                if i == j {
                    rhs = rhs.add(&u)?;
                }
                if j == -i {
                    rhs = rhs.add(&t_op(i, &u)?)?;
                }
                let lhs = e_op(i, &f_op(j, &u)?)?;
                ck.check("E_i F_j = q^-(a_i,a_j) F_j E_i + delta_ij + delta_-i,j T_i", lhs.class_eq(&rhs)?, detail)?;

                if i != j {
                    let fe = serre_element(&e_op, i, j, &u)?.is_zero_class()?;
                    ck.check("Serre relation for E", fe, detail)?;
                    let lift = if (i - j).abs() == 2 { 3 } else { 2 };
                    if m.degree() + lift <= config.max_degree {
                        let ff = serre_element(&f_op, i, j, &u)?.is_zero_class()?;
                        ck.check("Serre relation for F", ff, detail)?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn multiplicity_consistency(ck: &mut Checker, config: &JobConfig) -> Step {
    use crate::canonical::Side;
    for block in blocks(config)? {
        for &i in config.window.indices() {
            for side in [Side::E, Side::F] {
                if side == Side::F && block.degree() >= config.max_degree {
                    continue;
                }
                let detail = || json!({ "block": block.to_string(), "i": i, "side": side });
                let d = ck.attempt("direct route", multiplicity_direct(&block, i, side))?;
                let a = ck.attempt("adjoint route", multiplicity_adjoint(&block, i, side))?;
                let (Some(d), Some(a)) = (d, a) else { continue };
                ck.check("direct = adjoint", d == a, detail)?;
                let at_one: Vec<_> = d.entries().map(|(_, x)| x.eval_at_one()).collect();
                ck.check("integer at q = 1", at_one.iter().all(|v| v.as_ref().is_some_and(|v| v.is_integer())), detail)?;
                if at_one.iter().flatten().any(|v| v < &num_traits::Zero::zero()) {
                    ck.warnings.push(format!("negative value at q = 1: block {block}, i = {i}, side {side:?}"));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(mode: Mode) -> JobConfig {
        JobConfig::new(Window::symmetric(3).unwrap(), 2, mode).unwrap()
    }

    #[test]
    fn suites_pass_at_small_scale() {
        for mode in [Mode::TypeA, Mode::Theta] {
            for suite in Suite::ALL {
                let r = run_suite(suite, &small(mode)).unwrap();
                assert!(r.passed(), "{}", r.to_text());
                assert!(r.total() > 0, "{suite} checked nothing");
            }
        }
    }

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn theta_dims_rejects_asymmetric_window() {
        let c = JobConfig::new("1,3".parse().unwrap(), 2, Mode::TypeA).unwrap();
        assert!(run_suite(Suite::ThetaDims, &c).is_err());
    }
}
