//! The graph encoding `Enc = >1*$(>a*#>a*$)*`, its tokens, decoding, and the
//! token-level view of automata over `Enc`.

mod classify;
mod decode;
mod token;

pub use classify::{characteristic_factorization, characteristic_factorization_runs, classify_states, sigma_w, Factorization, StateClass, StateClasses};
pub use decode::{decode, decode_red_blue, decode_runs, decode_red_blue_runs, GraphInstance, RedBlueInstance};
pub use token::{enc_nfa, serialize_tokens, tokenize, tokenize_runs, Token, TokenKind};
