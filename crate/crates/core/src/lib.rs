//! Hall's marriage condition, shellable set families, and configurations of
//! transversals with the surjective words that satisfy them.
//!
//! A family of subsets of `[n]` is *shellable* when its members can be ordered so
//! that the `k`-th prefix union has exactly `k` elements; equivalently, it has a
//! unique transversal. For a family with `|F| = n` and transversal `t`, a
//! *configuration* demands a rank for each member, and a surjection `w: [n] -> [m]`
//! satisfies it when `w(t(F))` has that rank in `w(F)`. Shellable families are
//! exactly those where every configuration is satisfiable for every admissible `m`,
//! which makes the average number of satisfying words `m! S(n, m) / ∏|F|`.
//!
//! Hook families of skew shapes are the motivating example: standard and balanced
//! tableaux are the permutations satisfying two particular configurations.
//!
//! Modules:
//! - [`family`]: set families, the marriage condition, transversals
//! - [`shelling`]: shelling orders and the unique-element set
//! - [`config`]: configurations, satisfaction, counting and the constructive solver
//! - [`shapes`]: skew shapes, hooks, tableaux
//! - [`counting`]: Stirling numbers and the average formulas
//! - [`random`], [`verify`]: seeded generators and the property suites

pub mod config;
pub mod counting;
pub mod error;
pub mod family;
mod perm;
pub mod random;
pub mod shapes;
pub mod shelling;
pub mod verify;

pub use config::{
    configuration_of, count_satisfying, enumerate_configurations, m_range, satisfies, solve,
    Configuration, SurjectiveWord,
};
pub use counting::{
    average_bruteforce, average_closed_form, average_formula, stirling2, surjection_count,
    ExactRational,
};
pub use error::{Error, Result};
pub use family::{
    all_transversals, find_transversal, satisfies_marriage_condition, SetFamily, Transversal,
};
pub use perm::next_permutation;
pub use shapes::{hook_family, Cell, SkewShape, Tableau};
pub use shelling::{
    is_shellable, shelling_order, shelling_order_from_witness, unique_element_set,
    verify_shelling_order, ShellingOrder,
};
