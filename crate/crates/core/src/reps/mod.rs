//! Token sets, the three pick functions, condensed automata and the finite
//! core.

mod condensed;
mod core;
mod index_set;
mod pick;
mod reduce;
mod rep_function;
mod token_sets;

pub use self::core::{
    finite_core, search_core, CoreEntry, Decoded, FiniteCore, Instance, Interpretation, SearchOptions, SearchStats,
    Visit,
};
pub use condensed::{
    build_condensed, core_length_bound, core_length_bound_usize, core_length_formula, edge_factors,
    CondensedAutomaton,
};
pub use index_set::IndexSet;
pub use pick::{pick_merge, pick_merge_stems, pick_separate, pick_threshold, MergeScope};
pub use reduce::{reduce_by_deletion, reduce_by_deletion_runs};
pub use rep_function::RepFunction;
pub use token_sets::{k_nfa, v_nfa, vg_nfa, TokenSets};
