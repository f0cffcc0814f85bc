//! The acceptance checks, one runner per criterion.
//!
//! Every runner returns a [`CriterionResult`] with a one-line summary and a
//! JSON payload of the underlying counts. Randomized criteria draw from a
//! ChaCha8 generator seeded from [`SuiteConfig::seed`], so their verdicts
//! and payloads repeat exactly for a fixed seed. The oracle criterion is
//! bounded by wall-clock time, so its counts depend on machine speed.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Result;
use crate::finite_topology::{enumerate_topologies, separation_profile, KBound, PointSet, PointTopology};
use crate::hf_universe::hyperuniverse::search_hyperuniverses;
use crate::hf_universe::innermodel::{build_w3, check_interpretation_conditions};
use crate::hf_universe::object::{cumulative_level, HfObject};
use crate::hf_universe::ordinals::{audit_ordinals, order_isomorphic, ordinals_by_filter};
use crate::hf_universe::zero::Zero;
use crate::hyperspace::{exp_space, kuratowski_report};
use crate::positive_core::enumerate::{check_oracle_equivalence, random_formula, OracleConfig};
use crate::positive_core::specification::{check_distributivity, specification_set};
use crate::wellorder::{wellorder_from_choice, ChoiceFunction};

/// Number of acceptance criteria.
pub const CRITERIA: usize = 9;

/// Wall-clock allowance for the compiler-oracle criterion.
pub const ORACLE_BUDGET: Duration = Duration::from_secs(300);

/// Wall-clock allowance for the separation-transfer criterion.
pub const SEPARATION_BUDGET: Duration = Duration::from_secs(120);

/// Randomized instances drawn for the distributivity criterion.
pub const DISTRIBUTIVITY_INSTANCES: usize = 1000;

/// Randomized instances drawn for the specification criterion.
pub const SPECIFICATION_INSTANCES: usize = 1000;

/// Choice functions drawn per carrier size for the well-order criterion.
pub const CHOICE_FUNCTIONS_PER_SIZE: usize = 100;

/// Out-of-bound instance counts per inner-model condition, frozen for
/// `Z = B = ∅` at rank 4.
pub const FROZEN_OUT_OF_BOUND_EMPTY: [usize; 8] = [0, 0, 12, 0, 0, 0, 0, 147];

/// Out-of-bound instance counts per inner-model condition, frozen for
/// `Z = B = {{#x},{#y}}` at rank 3.
pub const FROZEN_OUT_OF_BOUND_TWO_ATOMS: [usize; 8] = [0, 0, 1, 0, 0, 0, 0, 1];

/// Settings shared by the runners.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub seed: u64,
    pub oracle_budget: Duration,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { seed: 0, oracle_budget: ORACLE_BUDGET }
    }
}

/// Verdict of one criterion.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CriterionResult {
    pub id: usize,
    pub title: &'static str,
    pub pass: bool,
    pub summary: String,
    pub details: Value,
}

impl CriterionResult {
    /// `criterion N: PASS|FAIL title: summary`.
    pub fn line(&self) -> String {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        format!("criterion {}: {verdict} {}: {}", self.id, self.title, self.summary)
    }
}

fn result(id: usize, title: &'static str, pass: bool, summary: String, details: Value) -> CriterionResult {
    CriterionResult { id, title, pass, summary, details }
}

fn to_json(x: &impl Serialize) -> Value {
    serde_json::to_value(x).unwrap_or_else(|e| json!({ "serialization_error": e.to_string() }))
}

/// Runs criterion `id` (1 to 9). Internal errors are reported as failures.
pub fn run_criterion(id: usize, cfg: &SuiteConfig) -> CriterionResult {
    let outcome = match id {
        1 => oracle_equivalence(cfg),
        2 => separation_transfer(),
        3 => distributivity(cfg),
        4 => ordinal_structure(),
        5 => inner_model_audit(),
        6 => hyperuniverse_search(),
        7 => wellorder_from_choices(cfg),
        8 => specification_agreement(cfg),
        9 => kuratowski_containment(),
        _ => return result(id, "unknown", false, format!("there is no criterion {id}"), Value::Null),
    };
    outcome.unwrap_or_else(|e| result(id, "error", false, e.to_string(), Value::Null))
}

/// Every criterion in order.
pub fn run_acceptance(cfg: &SuiteConfig) -> Vec<CriterionResult> {
    (1..=CRITERIA).map(|id| run_criterion(id, cfg)).collect()
}

/// Compiler-oracle equivalence over every formula of size at most 7 in one
/// or two free variables and at most one class parameter of size at most
/// 2, with set parameters from `U_3`, inside the time budget.
pub fn oracle_equivalence(cfg: &SuiteConfig) -> Result<CriterionResult> {
    let oc = OracleConfig {
        max_size: 7,
        max_arity: 2,
        universe_rank: 3,
        max_class_size: 2,
        budget: Some(cfg.oracle_budget),
    };
    let r = check_oracle_equivalence(&oc)?;
    let within_budget = r.elapsed_ms <= cfg.oracle_budget.as_millis();
    let pass = r.passes() && within_budget;
    let summary = if r.complete {
        format!(
            "{} formulas, {} instances, {} mismatches, {:.1} s",
            r.formulas_checked,
            r.instances_checked,
            r.mismatches,
            r.elapsed_ms as f64 / 1000.0
        )
    } else {
        format!(
            "budget of {} s exhausted after {} of {} formulas ({} instances, complete through size {}), {} mismatches",
            cfg.oracle_budget.as_secs(),
            r.formulas_checked,
            r.formulas_total,
            r.instances_checked,
            r.complete_through_size,
            r.mismatches
        )
    };
    Ok(result(1, "compiler-oracle equivalence", pass, summary, to_json(&r)))
}

#[derive(Default, Serialize)]
struct TransferCounts {
    spaces: usize,
    t1_to_t1_exceptions: usize,
    t3_iff_t2_exceptions: usize,
    t4_iff_t3_exceptions: usize,
    first_exception: Option<String>,
}

impl TransferCounts {
    fn exceptions(&self) -> usize {
        self.t1_to_t1_exceptions + self.t3_iff_t2_exceptions + self.t4_iff_t3_exceptions
    }
}

/// Separation transfer between a space and its exponential over every
/// topology on at most 4 points; the count restricted to T0 spaces is
/// reported alongside.
pub fn separation_transfer() -> Result<CriterionResult> {
    let start = Instant::now();
    let mut all = TransferCounts::default();
    let mut t0 = TransferCounts::default();
    for n in 1..=4 {
        for t in enumerate_topologies(n)? {
            let base = separation_profile(&t);
            let exp = separation_profile(&exp_space(&t, KBound::Unbounded)?.topology);
            let checks = [!base.t1 || exp.t1, base.t3 == exp.t2, base.t4 == exp.t3];
            let targets: &mut [&mut TransferCounts] = if base.t0 { &mut [&mut all, &mut t0] } else { &mut [&mut all] };
            for c in targets.iter_mut() {
                c.spaces += 1;
                c.t1_to_t1_exceptions += usize::from(!checks[0]);
                c.t3_iff_t2_exceptions += usize::from(!checks[1]);
                c.t4_iff_t3_exceptions += usize::from(!checks[2]);
                if checks.contains(&false) && c.first_exception.is_none() {
                    c.first_exception = Some(format!("{:?}", t.to_space_file().closed));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    let pass = all.exceptions() == 0 && elapsed <= SEPARATION_BUDGET;
    let summary = format!(
        "{} spaces: {} exceptions (t1 {}, t3/t2 {}, t4/t3 {}); restricted to the {} T0 spaces: {} exceptions; {:.1} s",
        all.spaces,
        all.exceptions(),
        all.t1_to_t1_exceptions,
        all.t3_iff_t2_exceptions,
        all.t4_iff_t3_exceptions,
        t0.spaces,
        t0.exceptions(),
        elapsed.as_secs_f64()
    );
    Ok(result(2, "separation transfer", pass, summary, json!({ "all": all, "t0": t0 })))
}

fn sample_distinct<R: Rng>(rng: &mut R, pool: &[HfObject], k: usize) -> Vec<HfObject> {
    rand::seq::index::sample(rng, pool.len(), k).into_iter().map(|i| pool[i].clone()).collect()
}

/// Distributivity on random families of at most 3 nonempty collections of
/// at most 3 elements of `U_3`.
pub fn distributivity(cfg: &SuiteConfig) -> Result<CriterionResult> {
    let pool = cumulative_level(3);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut equal = 0;
    let mut first_failure = None;
    for _ in 0..DISTRIBUTIVITY_INSTANCES {
        let d = rng.gen_range(1..=3);
        let families: Vec<Vec<HfObject>> = (0..d)
            .map(|_| {
                let k = rng.gen_range(1..=3);
                sample_distinct(&mut rng, &pool, k)
            })
            .collect();
        let r = check_distributivity(&families)?;
        if r.equal {
            equal += 1;
        } else if first_failure.is_none() {
            first_failure = Some(json!({ "lhs": r.lhs, "rhs": r.rhs }));
        }
    }
    let pass = equal == DISTRIBUTIVITY_INSTANCES;
    let summary = format!("{equal}/{DISTRIBUTIVITY_INSTANCES} instances equal (seed {})", cfg.seed);
    Ok(result(3, "distributivity", pass, summary, json!({ "equal": equal, "first_failure": first_failure })))
}

/// The ordinal audit on the first 6 ordinals for both zeros, the
/// order-isomorphism between the sequences, the element counts over the
/// two-atom zero, and a cross-check against filtering a pool of objects.
pub fn ordinal_structure() -> Result<CriterionResult> {
    let (z1, z2) = (Zero::empty(), Zero::two_atoms());
    let a1 = audit_ordinals(&z1, 6)?;
    let a2 = audit_ordinals(&z2, 6)?;
    let s1 = z1.ordinals(7)?;
    let s2 = z2.ordinals(7)?;
    let isomorphic = order_isomorphic(&z1, &s1, &z2, &s2);
    let sizes: Vec<usize> = s2.iter().map(HfObject::len).collect();
    let sizes_ok = sizes.iter().enumerate().all(|(n, &k)| k == n + 2);
    let (f1, pool1) = ordinals_by_filter(&z1, 5)?;
    let (f2, pool2) = ordinals_by_filter(&z2, 3)?;
    let filter_ok = f1 == s1[..f1.len()] && f1.len() == 5 && f2 == s2[..f2.len()] && f2.len() == 2;
    let pass = a1.passes() && a2.passes() && isomorphic && sizes_ok && filter_ok;
    let summary = format!(
        "audit {} and {}, isomorphic {isomorphic}, sizes {sizes:?}, filter found {} of rank ≤ 5 in {pool1} objects and {} of rank ≤ 3 in {pool2}",
        if a1.passes() { "passes for ∅" } else { "fails for ∅" },
        if a2.passes() { "passes for {{#x},{#y}}" } else { "fails for {{#x},{#y}}" },
        f1.len(),
        f2.len()
    );
    let details = json!({ "empty": a1, "two_atoms": a2, "isomorphic": isomorphic, "sizes": sizes });
    Ok(result(4, "ordinal structure", pass, summary, details))
}

/// The inner-model conditions for both frozen configurations.
pub fn inner_model_audit() -> Result<CriterionResult> {
    let runs = [(Zero::empty(), 4, FROZEN_OUT_OF_BOUND_EMPTY), (Zero::two_atoms(), 3, FROZEN_OUT_OF_BOUND_TWO_ATOMS)];
    let mut pass = true;
    let mut parts = Vec::new();
    let mut details = Vec::new();
    for (zero, rank, frozen) in runs {
        let ctx = build_w3(&zero, zero.value(), rank)?;
        let r = check_interpretation_conditions(&ctx, KBound::Unbounded)?;
        let failures: usize = r.conditions.iter().map(|c| c.fail).sum();
        let oob = r.out_of_bound_counts();
        let ok = r.passes() && oob == frozen;
        pass &= ok;
        parts.push(format!(
            "Z={} rank {rank}: {failures} in-bound failures, out-of-bound {oob:?} (frozen {frozen:?})",
            zero.value()
        ));
        details.push(to_json(&r));
    }
    Ok(result(5, "inner-model audit", pass, parts.join("; "), Value::Array(details)))
}

/// Exhaustive hyperuniverse search to 4 points, run twice.
pub fn hyperuniverse_search() -> Result<CriterionResult> {
    let first = search_hyperuniverses(4, KBound::Unbounded)?;
    let second = search_hyperuniverses(4, KBound::Unbounded)?;
    let deterministic = first == second;
    let one_point = first.witnesses.len() == 1 && first.witnesses[0].points == 1;
    let summary = format!(
        "{} witnesses among {} admissible of {} spaces ({} maps), deterministic {deterministic}",
        first.witnesses.len(),
        first.spaces_admissible,
        first.spaces_considered,
        first.maps_checked
    );
    Ok(result(6, "hyperuniverse search", one_point && deterministic, summary, to_json(&first)))
}

/// Well-orders from 100 random choice functions on each carrier of size
/// 1 to 5.
pub fn wellorder_from_choices(cfg: &SuiteConfig) -> Result<CriterionResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut ok = 0;
    let mut total = 0;
    let mut first_failure = None;
    for n in 1..=5 {
        for _ in 0..CHOICE_FUNCTIONS_PER_SIZE {
            total += 1;
            let f = ChoiceFunction::random(n, &mut rng)?;
            let verdict = wellorder_from_choice(&f).and_then(|w| {
                w.chain.check(&f)?;
                w.order.check_invariants()?;
                Ok(w.bijective && w.order.len() == n)
            });
            match verdict {
                Ok(true) => ok += 1,
                Ok(false) => {
                    first_failure.get_or_insert_with(|| format!("carrier {n}: not a bijection"));
                }
                Err(e) => {
                    first_failure.get_or_insert_with(|| format!("carrier {n}: {e}"));
                }
            }
        }
    }
    let summary = format!("{ok}/{total} choice functions give a bijective chain and a valid order (seed {})", cfg.seed);
    Ok(result(
        7,
        "well-order from choice",
        ok == total,
        summary,
        json!({ "ok": ok, "total": total, "first_failure": first_failure }),
    ))
}

/// `specification_set` on random formulas, sets and class parameters.
/// Each instance compares brute force with the compiled path.
pub fn specification_agreement(cfg: &SuiteConfig) -> Result<CriterionResult> {
    let u3 = cumulative_level(3);
    let u4 = cumulative_level(4);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut agree = 0;
    let mut first_failure = None;
    for _ in 0..SPECIFICATION_INSTANCES {
        let m = rng.gen_range(1..=2);
        let size = rng.gen_range(1..=7);
        let phi = random_formula(&mut rng, size, m, 1);
        let c = u4[rng.gen_range(0..u4.len())].clone();
        let sets: Vec<HfObject> = (1..m).map(|_| u3[rng.gen_range(0..u3.len())].clone()).collect();
        let k = rng.gen_range(1..=2);
        let class = sample_distinct(&mut rng, &u3, k);
        match specification_set(&phi, &c, &sets, &[class]) {
            Ok(_) => agree += 1,
            Err(e) => {
                first_failure.get_or_insert_with(|| e.to_string());
            }
        }
    }
    let pass = agree == SPECIFICATION_INSTANCES;
    let summary = format!("{agree}/{SPECIFICATION_INSTANCES} instances agree (seed {})", cfg.seed);
    Ok(result(8, "specification agreement", pass, summary, json!({ "agree": agree, "first_failure": first_failure })))
}

/// The Kuratowski square for every closed set of the discrete spaces on 2
/// and 3 points.
pub fn kuratowski_containment() -> Result<CriterionResult> {
    let mut holds = 0;
    let mut total = 0;
    let mut reports = Vec::new();
    for n in [2, 3] {
        let base = PointTopology::discrete(n)?;
        for bits in 0u128..1 << n {
            let a = PointSet::from_bits(n, bits)?;
            if !base.is_closed(&a) {
                continue;
            }
            total += 1;
            let r = kuratowski_report(&base, &a)?;
            if r.holds() {
                holds += 1;
            }
            reports.push(json!({ "points": n, "a": a.to_indices(), "report": r }));
        }
    }
    let summary = format!("{holds}/{total} closed sets have a closed square inside s");
    Ok(result(9, "Kuratowski containment", holds == total, summary, Value::Array(reports)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fast_criteria_pass() {
        let cfg = SuiteConfig::default();
        for id in [3, 4, 5, 6, 7, 8, 9] {
            let r = run_criterion(id, &cfg);
            assert!(r.pass, "{}", r.line());
        }
    }

    #[test]
    fn unknown_criterion_fails() {
        assert!(!run_criterion(10, &SuiteConfig::default()).pass);
    }

    #[test]
    fn seeded_criteria_repeat() {
        let cfg = SuiteConfig { seed: 11, ..Default::default() };
        assert_eq!(distributivity(&cfg).unwrap(), distributivity(&cfg).unwrap());
        assert_eq!(specification_agreement(&cfg).unwrap(), specification_agreement(&cfg).unwrap());
    }
}
