//! Finite automata over the five-letter encoding alphabet.
//!
//! Everything here works on epsilon-free NFAs with dense state ids. The regex
//! compiler is the only place where epsilon moves exist, and they are
//! eliminated before the automaton is handed out.

mod nfa;
mod regex;
mod shortlex;
mod symbol;
mod unary;

pub use nfa::{Nfa, NfaJson, StateId, StateSet, DEFAULT_DETERMINIZATION_BOUND};
pub use regex::compile_regex;
pub use shortlex::ShortlexIter;
pub use symbol::{RunWord, Symbol, Word};
pub use unary::{first_accepted_at_least, UnaryOrbit};
