//! Hereditarily finite sets, generalized zeros, pristine inner models and
//! audits of finite membership structures.

pub mod hyperuniverse;
pub mod innermodel;
pub mod object;
pub mod ordinals;
pub mod structure;
pub mod zero;

pub use hyperuniverse::{search_hyperuniverses, HyperuniverseSearch, HyperuniverseWitness};
pub use innermodel::{build_w3, check_interpretation_conditions, ConditionReport, InterpretationContext};
pub use object::{canonicalize, cumulative_level, parse_hf, HfObject, RawNode};
pub use structure::{audit_axioms, AxiomReport, AxiomVerdict, MembershipStructure, StructureFile};
pub use zero::{is_zero, Zero};
