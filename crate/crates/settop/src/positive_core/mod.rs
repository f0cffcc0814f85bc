//! Positive formulas, their brute-force semantics and their compilation
//! into the primitive operation algebra.

pub mod compile;
pub mod enumerate;
pub mod formula;
pub mod specification;
pub mod term;

pub use compile::{compile_and_eval, compile_formula, CompiledFormula};
pub use enumerate::{
    check_oracle_equivalence, count_formulas, for_each_formula, random_formula, OracleConfig, OracleReport,
};
pub use formula::{brute_force_extension, eval_formula, parse_formula, parse_formula_file, Formula, Universe, Var};
pub use specification::{check_distributivity, specification_set, DistributivityReport};
pub use term::{eval_term, lower_to_primitives, CombinatorTerm};
