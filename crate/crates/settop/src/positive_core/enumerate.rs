//! Exhaustive enumeration of positive formulas and the compiler-oracle
//! equivalence check over them.
//!
//! Bound variables are named canonically by nesting depth (`z1` for the
//! outermost binder, `z2` inside it, and so on), so each formula is
//! produced once up to renaming of bound variables. Atomic formulas range
//! over ordered pairs of variables in scope.

use std::time::{Duration, Instant};

use rand::Rng;
use serde::Serialize;

use crate::error::Result;
use crate::hf_universe::object::{cumulative_level, HfObject};
use crate::positive_core::compile::compile_formula;
use crate::positive_core::formula::{brute_force_extension, Formula, Universe, Var};
use crate::positive_core::term::eval_term;

/// Calls `visit` on every formula of AST size at most `max_size` whose free
/// variables are among `x1..xm` and whose class quantifiers range over
/// `B1..B(classes)`, in a fixed order. Stops early when `visit` returns
/// `false`; the return value says whether enumeration ran to completion.
pub fn for_each_formula(max_size: usize, m: usize, classes: usize, visit: &mut dyn FnMut(Formula) -> bool) -> bool {
    (1..=max_size).all(|s| generate(s, 0, m, classes, visit))
}

/// Number of formulas [`for_each_formula`] visits, by the counting
/// recurrence of the generator.
pub fn count_formulas(max_size: usize, m: usize, classes: usize) -> u128 {
    fn count(s: usize, depth: usize, m: usize, c: usize, memo: &mut Vec<Vec<Option<u128>>>) -> u128 {
        if let Some(v) = memo[s][depth] {
            return v;
        }
        let v = (m + depth) as u128;
        let total = if s == 1 {
            2 * v * v
        } else {
            let mut t = 0;
            for k in 1..s - 1 {
                t += 2 * count(k, depth, m, c, memo) * count(s - 1 - k, depth, m, c, memo);
            }
            t + (2 * v + c as u128) * count(s - 1, depth + 1, m, c, memo)
        };
        memo[s][depth] = Some(total);
        total
    }
    let mut memo = vec![vec![None; max_size + 1]; max_size + 1];
    (1..=max_size).map(|s| count(s, 0, m, classes, &mut memo)).sum()
}

fn scope(depth: usize, m: usize) -> Vec<Var> {
    (1..=m).map(Var::Free).chain((1..=depth).map(|d| Var::Bound(format!("z{d}")))).collect()
}

fn generate(size: usize, depth: usize, m: usize, classes: usize, visit: &mut dyn FnMut(Formula) -> bool) -> bool {
    let vars = scope(depth, m);
    if size == 1 {
        for x in &vars {
            for y in &vars {
                if !visit(Formula::Member(x.clone(), y.clone())) || !visit(Formula::Equal(x.clone(), y.clone())) {
                    return false;
                }
            }
        }
        return true;
    }
    for k in 1..size - 1 {
        let ok = generate(k, depth, m, classes, &mut |a| {
            generate(size - 1 - k, depth, m, classes, &mut |b| {
                visit(Formula::and(a.clone(), b.clone())) && visit(Formula::or(a.clone(), b))
            })
        });
        if !ok {
            return false;
        }
    }
    let z = format!("z{}", depth + 1);
    for v in &vars {
        let ok = generate(size - 1, depth + 1, m, classes, &mut |body| {
            visit(Formula::ExistsIn(z.clone(), v.clone(), Box::new(body.clone())))
                && visit(Formula::ForallIn(z.clone(), v.clone(), Box::new(body)))
        });
        if !ok {
            return false;
        }
    }
    for p in 1..=classes {
        let ok = generate(size - 1, depth + 1, m, classes, &mut |body| {
            visit(Formula::ForallParam(z.clone(), p, Box::new(body)))
        });
        if !ok {
            return false;
        }
    }
    true
}

/// A random formula of AST size exactly `size` in the scope `x1..xm`,
/// quantifying over `B1..B(classes)`, with canonical bound names.
pub fn random_formula(rng: &mut impl Rng, size: usize, m: usize, classes: usize) -> Formula {
    random_at(rng, size.max(1), 0, m, classes)
}

fn random_at(rng: &mut impl Rng, size: usize, depth: usize, m: usize, classes: usize) -> Formula {
    let vars = scope(depth, m);
    let pick = |rng: &mut dyn rand::RngCore| vars[rng.gen_range(0..vars.len())].clone();
    if size == 1 {
        let (x, y) = (pick(rng), pick(rng));
        return if rng.gen_bool(0.5) { Formula::Member(x, y) } else { Formula::Equal(x, y) };
    }
    let binary = size >= 3 && rng.gen_bool(0.5);
    if binary {
        let k = rng.gen_range(1..size - 1);
        let a = random_at(rng, k, depth, m, classes);
        let b = random_at(rng, size - 1 - k, depth, m, classes);
        return if rng.gen_bool(0.5) { Formula::and(a, b) } else { Formula::or(a, b) };
    }
    let z = format!("z{}", depth + 1);
    let body = Box::new(random_at(rng, size - 1, depth + 1, m, classes));
    let choice = rng.gen_range(0..2 * vars.len() + classes);
    if choice < vars.len() {
        Formula::ExistsIn(z, vars[choice].clone(), body)
    } else if choice < 2 * vars.len() {
        Formula::ForallIn(z, vars[choice - vars.len()].clone(), body)
    } else {
        Formula::ForallParam(z, choice - 2 * vars.len() + 1, body)
    }
}

/// Parameters of an oracle-equivalence run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleConfig {
    pub max_size: usize,
    /// Arities `1..=max_arity` are checked, each over formulas in exactly
    /// that many free variables.
    pub max_arity: usize,
    /// Rank of the cumulative level the set parameters are drawn from.
    pub universe_rank: usize,
    /// Class parameters are every subset of the universe level with
    /// between 1 and this many elements.
    pub max_class_size: usize,
    /// Wall-clock budget; `None` runs to completion.
    pub budget: Option<Duration>,
}

/// Outcome of an oracle-equivalence run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub formulas_total: u128,
    pub formulas_checked: u64,
    pub instances_checked: u64,
    pub mismatches: u64,
    pub first_mismatch: Option<String>,
    /// Largest compiled term over all instances checked.
    pub max_term_size: usize,
    /// Largest size for which every formula of every arity was checked.
    pub complete_through_size: usize,
    pub complete: bool,
    pub elapsed_ms: u128,
}

impl OracleReport {
    pub fn passes(&self) -> bool {
        self.complete && self.mismatches == 0
    }
}

fn class_choices(level: &[HfObject], max_class_size: usize) -> Vec<Vec<HfObject>> {
    let n = level.len();
    let mut out: Vec<Vec<HfObject>> = (1u32..1 << n)
        .filter(|mask| (mask.count_ones() as usize) <= max_class_size)
        .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).map(|i| level[i].clone()).collect())
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    out
}

/// Compares compiled-term evaluation with brute-force satisfaction for
/// every formula in the configured space and every assignment of set
/// parameters (and of the class parameter, when one is quantified over).
pub fn check_oracle_equivalence(cfg: &OracleConfig) -> Result<OracleReport> {
    let start = Instant::now();
    let level = cumulative_level(cfg.universe_rank);
    let classes = class_choices(&level, cfg.max_class_size);
    let mut report = OracleReport {
        formulas_total: (1..=cfg.max_arity).map(|m| count_formulas(cfg.max_size, m, 1)).sum(),
        formulas_checked: 0,
        instances_checked: 0,
        mismatches: 0,
        first_mismatch: None,
        max_term_size: 0,
        complete_through_size: 0,
        complete: true,
        elapsed_ms: 0,
    };
    let mut error = None;
    let assignments: Vec<Vec<Vec<HfObject>>> = (1..=cfg.max_arity).map(|m| assignments(&level, m)).collect();
    'sizes: for size in 1..=cfg.max_size {
        for m in 1..=cfg.max_arity {
            let complete = generate(size, 0, m, 1, &mut |phi| {
                if cfg.budget.is_some_and(|b| report.formulas_checked.is_multiple_of(256) && start.elapsed() > b) {
                    return false;
                }
                match check_one(&phi, m, &assignments[m - 1], &classes, &mut report) {
                    Ok(()) => true,
                    Err(e) => {
                        error = Some(e);
                        false
                    }
                }
            });
            if let Some(e) = error.take() {
                return Err(e);
            }
            if !complete {
                report.complete = false;
                break 'sizes;
            }
        }
        report.complete_through_size = size;
    }
    report.elapsed_ms = start.elapsed().as_millis();
    Ok(report)
}

fn check_one(
    phi: &Formula,
    m: usize,
    assignments: &[Vec<HfObject>],
    classes: &[Vec<HfObject>],
    report: &mut OracleReport,
) -> Result<()> {
    let compiled = compile_formula(phi, m)?;
    let class_sets: Vec<Vec<Vec<HfObject>>> =
        if phi.max_class() > 0 { classes.iter().map(|c| vec![c.clone()]).collect() } else { vec![vec![]] };
    for cls in &class_sets {
        for sets in assignments {
            let u = Universe::new(sets.clone(), cls.clone());
            let t = compiled.instantiate(&u)?;
            report.max_term_size = report.max_term_size.max(t.size());
            let got = eval_term(&t);
            let want = brute_force_extension(phi, &u)?;
            report.instances_checked += 1;
            if got != want {
                report.mismatches += 1;
                if report.first_mismatch.is_none() {
                    let sets: Vec<String> = sets.iter().map(|s| s.to_string()).collect();
                    report.first_mismatch =
                        Some(format!("{phi} with sets [{}]: compiled {got}, brute force {want}", sets.join(", ")));
                }
            }
        }
    }
    report.formulas_checked += 1;
    Ok(())
}

fn assignments(level: &[HfObject], m: usize) -> Vec<Vec<HfObject>> {
    let mut out: Vec<Vec<HfObject>> = vec![vec![]];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                level.iter().map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x.clone());
                    v
                })
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_the_generator() {
        for (size, m, c) in [(1, 1, 0), (3, 1, 1), (4, 2, 0), (3, 2, 1)] {
            let mut n = 0u128;
            assert!(for_each_formula(size, m, c, &mut |_| {
                n += 1;
                true
            }));
            assert_eq!(n, count_formulas(size, m, c));
        }
        assert_eq!(count_formulas(7, 2, 1), 310_682_522);
        assert_eq!(count_formulas(7, 1, 1), 35_660_232);
    }

    #[test]
    fn enumeration_is_duplicate_free_and_valid() {
        let mut seen = std::collections::HashSet::new();
        for_each_formula(4, 2, 1, &mut |phi| {
            assert!(phi.validate().is_ok(), "{phi}");
            assert!(phi.max_free() <= 2 && phi.size() <= 4);
            assert!(seen.insert(phi.to_string()));
            true
        });
    }

    #[test]
    fn early_stop_is_reported() {
        let mut n = 0;
        assert!(!for_each_formula(3, 1, 0, &mut |_| {
            n += 1;
            n < 5
        }));
        assert_eq!(n, 5);
    }

    #[test]
    fn random_formulas_are_valid_and_sized() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for size in 1..=7 {
            for _ in 0..50 {
                let phi = random_formula(&mut rng, size, 2, 1);
                assert_eq!(phi.size(), size);
                assert!(phi.validate().is_ok() && phi.max_free() <= 2 && phi.max_class() <= 1, "{phi}");
            }
        }
    }

    #[test]
    fn small_oracle_run_passes() {
        let cfg = OracleConfig { max_size: 3, max_arity: 2, universe_rank: 3, max_class_size: 2, budget: None };
        let r = check_oracle_equivalence(&cfg).unwrap();
        assert!(r.passes(), "{r:?}");
        assert_eq!(r.formulas_checked as u128, r.formulas_total);
    }
}
