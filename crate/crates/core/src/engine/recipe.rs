use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::automata::Nfa;
use crate::error::Result;
use crate::problems::{Case, Leaf, ParamRole, ProblemKind, ProblemSpec};
use crate::reps::{pick_merge, pick_separate, pick_threshold, MergeScope, RepFunction, TokenSets};

/// How vertex tokens are chosen.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VertexPick {
    Merge,
    /// Separate merges of left (red) and right (blue) tokens.
    MergeRedBlue,
    Separate { s: usize, t: usize },
}

/// Threshold cutoff and vertex pick for one problem at a given state count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recipe {
    pub threshold: BigUint,
    pub vertices: VertexPick,
}

fn pow2(e: usize) -> BigUint {
    BigUint::one() << e
}

/// The recipe for `spec` on an automaton with `q` states.
pub fn recipe(spec: &ProblemSpec, q: usize) -> Result<Recipe> {
    let case = spec.require_supported()?;
    let q2 = q * q;
    let big = BigUint::from(q);
    let (threshold, vertices) = match (case, spec.role, spec.kind) {
        (Case::A, _, ProblemKind::VertexCover) => (pow2(q2), VertexPick::Merge),
        (Case::A, ParamRole::UpperBound, _) | (Case::SpecialConnectedA, _, _) => {
            (pow2(2 * q2) + pow2(q2), VertexPick::Merge)
        }
        (Case::A, _, _) => (BigUint::zero(), VertexPick::Merge),
        (Case::B, _, ProblemKind::IndependentSet) => (BigUint::zero(), VertexPick::Separate { s: q + 1, t: q }),
        (Case::B, _, _) => {
            let f = spec.leaf.unwrap_or(Leaf::Identity).apply(q);
            (BigUint::zero(), VertexPick::Separate { s: f + 1, t: q })
        }
        (Case::C, ParamRole::UpperBound, _) => {
            (4u32 * big.pow(6) + 2u32 * big.pow(3), VertexPick::Separate { s: 2 * q, t: q })
        }
        (Case::C, _, _) => (BigUint::zero(), VertexPick::Separate { s: 2 * q, t: q }),
        (Case::SpecialMinCut, _, _) => {
            let c = spec.leaf.unwrap_or(Leaf::Constant(1)).apply(q);
            let base = (big.clone() + c) * big.pow(2);
            (base.pow(2), VertexPick::Separate { s: c, t: q })
        }
        (Case::RedBlueA, _, _) => (pow2(q2), VertexPick::MergeRedBlue),
    };
    Ok(Recipe { threshold, vertices })
}

/// Applies a recipe to the token sets of a trimmed automaton.
pub fn build_rep(ts: &TokenSets, r: &Recipe) -> RepFunction {
    let thr = pick_threshold(ts, &r.threshold);
    let vertices = match r.vertices {
        VertexPick::Merge => pick_merge(ts, MergeScope::Both),
        VertexPick::MergeRedBlue => pick_merge(ts, MergeScope::Left).union(&pick_merge(ts, MergeScope::Right)),
        VertexPick::Separate { s, t } => pick_separate(ts, s, t),
    };
    thr.union(&vertices)
}

/// The representative function for `spec` on `m`, which must be trimmed and
/// accept only words of Enc.
pub fn choose_rep(m: &Nfa, spec: &ProblemSpec) -> Result<RepFunction> {
    let r = recipe(spec, m.num_states())?;
    Ok(build_rep(&TokenSets::new(m), &r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problems::lookup;

    #[test]
    fn cutoffs() {
        let vc = recipe(lookup("vertex-cover").unwrap(), 2).unwrap();
        assert_eq!(vc.threshold, BigUint::from(16u32));
        let fvs = recipe(lookup("feedback-vertex-set").unwrap(), 2).unwrap();
        assert_eq!(fvs.threshold, BigUint::from(272u32));
        assert_eq!(fvs.vertices, VertexPick::Separate { s: 4, t: 2 });
        let is = recipe(lookup("independent-set").unwrap(), 3).unwrap();
        assert_eq!(is.vertices, VertexPick::Separate { s: 4, t: 3 });
        let ds = recipe(lookup("dominating-set").unwrap(), 2).unwrap();
        assert_eq!(ds.threshold, BigUint::from(256u32 + 16));
        let mc = recipe(lookup("mincut").unwrap(), 2).unwrap();
        assert_eq!(mc.threshold, BigUint::from(144u32));
        assert_eq!(mc.vertices, VertexPick::Separate { s: 1, t: 2 });
        let bip = recipe(lookup("bipartiteness").unwrap(), 5).unwrap();
        assert_eq!(bip.threshold, BigUint::zero());
        assert!(recipe(lookup("tree").unwrap(), 2).is_err());
    }

    #[test]
    fn large_cutoffs_do_not_overflow() {
        let ds = recipe(lookup("dominating-set").unwrap(), 9).unwrap();
        assert_eq!(ds.threshold.bits(), 163);
    }
}
