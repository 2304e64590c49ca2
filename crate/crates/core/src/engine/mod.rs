//! The decision procedure: restrict the automaton to Enc, pick
//! representatives for the problem, search the finite core for a positive
//! instance and certify the witness.

mod recipe;

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::automata::{compile_regex, Nfa, RunWord, Word};
use crate::encoding::{decode_red_blue_runs, decode_runs, enc_nfa};
use crate::error::{Error, Result};
use crate::json::big_number;
use crate::problems::{lookup, solve_instance, Case, Certificate, ProblemKind, ProblemSpec, DEFAULT_SOLVER_BUDGET};
use crate::reps::{core_length_bound, search_core, Instance, Interpretation, RepFunction, SearchOptions, Visit};

pub use recipe::{build_rep, choose_rep, recipe, Recipe, VertexPick};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Answer {
    NonEmpty,
    Empty,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub word: RunWord,
    pub instance: Instance,
    pub certificate: Option<Certificate>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DecisionStats {
    /// Distinct core instances examined.
    pub core_size: u64,
    /// Search configurations expanded.
    pub nodes: u64,
    /// Length bound of the core words.
    pub ell: BigUint,
    pub rep_tokens: usize,
    /// States of the automaton after restriction to Enc.
    pub states: usize,
    pub elapsed: Duration,
}

#[derive(Clone, Debug)]
pub struct Decision {
    pub answer: Answer,
    pub witness: Option<Witness>,
    pub stats: DecisionStats,
    /// The representative functions used, one per searched sub-language.
    pub reps: Vec<RepFunction>,
}

#[derive(Clone, Debug)]
pub struct DecideOptions {
    /// Limit on configurations expanded by the core search.
    pub max_nodes: u64,
    /// Limit on search steps per solver call.
    pub solver_budget: u64,
    /// Skip stems that are interchangeable with an unused smaller one.
    pub symmetry: bool,
}

impl Default for DecideOptions {
    fn default() -> Self {
        DecideOptions { max_nodes: 5_000_000, solver_budget: DEFAULT_SOLVER_BUDGET, symmetry: true }
    }
}

impl Decision {
    pub fn is_nonempty(&self) -> bool {
        self.answer == Answer::NonEmpty
    }

    pub fn to_json(&self) -> Value {
        let witness = self.witness.as_ref().map(|w| {
            let inst = w.instance.to_json_value();
            let graph = match &inst {
                Value::Object(map) => {
                    Value::Object(map.iter().filter(|(k, _)| *k != "k").map(|(k, v)| (k.clone(), v.clone())).collect())
                }
                other => other.clone(),
            };
            json!({
                "word": w.word.to_string(),
                "graph": graph,
                "k": inst["k"],
                "certificate": w.certificate.as_ref().map(Certificate::to_json),
            })
        });
        let ell = big_number::serialize(&self.stats.ell, serde_json::value::Serializer).expect("serializable");
        json!({
            "answer": match self.answer { Answer::NonEmpty => "nonempty", Answer::Empty => "empty" },
            "witness": witness,
            "stats": {
                "core_size": self.stats.core_size,
                "ell": ell,
                "rep_tokens": self.stats.rep_tokens,
                "nodes": self.stats.nodes,
                "states": self.stats.states,
                "millis": self.stats.elapsed.as_millis() as u64,
            },
        })
    }
}

/// One searched sub-language: the words of `restrict` (a sublanguage of
/// Enc), handled with the recipe of `recipe_spec`.
struct Part {
    restrict: Option<&'static str>,
    recipe_spec: &'static ProblemSpec,
}

fn parts(spec: &'static ProblemSpec) -> Result<Vec<Part>> {
    spec.require_supported()?;
    if spec.kind != ProblemKind::Coloring {
        return Ok(vec![Part { restrict: None, recipe_spec: spec }]);
    }
    // With one color, adding a leaf destroys colorability, so small k are
    // handled separately: k = 0 accepts only the vertexless graph, k = 1
    // exactly the edgeless graphs.
    let emptiness = lookup("emptiness")?;
    Ok(vec![
        Part { restrict: Some(">$"), recipe_spec: emptiness },
        Part { restrict: Some(">1$(>a*#>a*$)*"), recipe_spec: emptiness },
        Part { restrict: Some(">111*$(>a*#>a*$)*"), recipe_spec: spec },
    ])
}

/// `L(m) ∩ Enc`, trimmed.
pub fn restrict_to_enc(m: &Nfa) -> Nfa {
    m.intersect(&enc_nfa()).trim()
}

/// Decides whether `L(m_raw)` contains an encoding of a positive instance
/// of `spec`.
pub fn decide(m_raw: &Nfa, spec: &'static ProblemSpec, opts: &DecideOptions) -> Result<Decision> {
    let started = Instant::now();
    let interp = spec.interpretation();
    let mut stats = DecisionStats::default();
    let mut reps = Vec::new();
    let mut found: Option<(Witness, Case)> = None;
    for part in parts(spec)? {
        let mut m = restrict_to_enc(m_raw);
        if let Some(pattern) = part.restrict {
            m = m.intersect(&compile_regex(pattern)?).trim();
        }
        stats.states = stats.states.max(m.num_states());
        if m.is_empty() {
            continue;
        }
        let case = part.recipe_spec.require_supported()?;
        let rep = choose_rep(&m, part.recipe_spec)?;
        stats.rep_tokens += rep.num_tokens();
        stats.ell = stats.ell.max(core_length_bound(m.num_states(), &rep));
        let search = SearchOptions {
            interpretation: interp,
            distinct_left_boundaries: case == Case::C,
            symmetry: opts.symmetry,
            max_nodes: opts.max_nodes,
        };
        let mut solved = None;
        let s = search_core(&m, &rep, &search, |entry| {
            let verdict = solve_instance(spec, &entry.instance, opts.solver_budget)?;
            if verdict.positive {
                solved = Some(Witness {
                    word: entry.witness(),
                    instance: entry.instance.clone(),
                    certificate: verdict.certificate,
                });
                return Ok(Visit::Stop);
            }
            Ok(Visit::Continue)
        })?;
        stats.core_size += s.instances;
        stats.nodes += s.nodes;
        reps.push(rep);
        if let Some(w) = solved {
            found = Some((w, case));
            break;
        }
    }
    if let Some((w, _)) = &found {
        certify(m_raw, spec, w, opts)?;
    }
    stats.elapsed = started.elapsed();
    Ok(Decision {
        answer: if found.is_some() { Answer::NonEmpty } else { Answer::Empty },
        witness: found.map(|(w, _)| w),
        stats,
        reps,
    })
}

fn certify(m_raw: &Nfa, spec: &ProblemSpec, w: &Witness, opts: &DecideOptions) -> Result<()> {
    let decoded = decode_instance(spec, &w.word)?;
    if !m_raw.accepts_runs(&w.word) || decoded != w.instance {
        return Err(Error::Invariant(format!("witness {} does not re-verify", w.word)));
    }
    if !solve_instance(spec, &decoded, opts.solver_budget)?.positive {
        return Err(Error::Invariant(format!("witness {} decodes to a negative instance", w.word)));
    }
    Ok(())
}

fn decode_instance(spec: &ProblemSpec, w: &RunWord) -> Result<Instance> {
    Ok(match spec.interpretation() {
        Interpretation::Simple => Instance::Simple(decode_runs(w)?),
        Interpretation::RedBlue => Instance::RedBlue(decode_red_blue_runs(w)?),
    })
}

/// Checks a candidate witness using only membership, decoding and the
/// solver.
pub fn verify_witness(m_raw: &Nfa, spec: &ProblemSpec, w: &Word) -> bool {
    verify_witness_runs(m_raw, spec, &w.to_runs())
}

pub fn verify_witness_runs(m_raw: &Nfa, spec: &ProblemSpec, w: &RunWord) -> bool {
    if !m_raw.accepts_runs(w) || !enc_nfa().accepts_runs(w) {
        return false;
    }
    match decode_instance(spec, w) {
        Ok(inst) => solve_instance(spec, &inst, DEFAULT_SOLVER_BUDGET).is_ok_and(|v| v.positive),
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(pattern: &str, problem: &str) -> Decision {
        let m = compile_regex(pattern).unwrap();
        let spec = lookup(problem).unwrap();
        let d = decide(&m, spec, &DecideOptions::default()).unwrap();
        if let Some(w) = &d.witness {
            assert!(verify_witness_runs(&m, spec, &w.word));
        }
        d
    }

    #[test]
    fn vertex_cover_examples() {
        assert_eq!(run(">$(>a#>aa$)+", "vertex-cover").answer, Answer::Empty);
        let d = run(">1$>a#>aa$", "vertex-cover");
        assert_eq!(d.answer, Answer::NonEmpty);
        let w = d.witness.unwrap();
        assert_eq!(w.word.to_string(), ">1$>a#>aa$");
        assert_eq!(w.certificate, Some(Certificate::Vertices(vec![1])));
    }

    #[test]
    fn bipartite_family() {
        let d = run(">1*$(>(aa)*#>a(aa)*$)*", "bipartiteness");
        assert!(d.is_nonempty());
    }

    #[test]
    fn non_enc_words_are_ignored() {
        assert_eq!(run(">$>a#", "emptiness").answer, Answer::Empty);
        assert_eq!(run("(>$|a)", "emptiness").answer, Answer::NonEmpty);
    }

    #[test]
    fn coloring_split() {
        assert!(run(">$", "coloring").is_nonempty());
        assert!(!run(">$>a#>a$", "coloring").is_nonempty());
        assert!(run(">1$>a#>a$", "coloring").is_nonempty());
        assert!(!run(">1$>a#>aa$", "coloring").is_nonempty());
        assert!(run(">1*$>a#>aa$", "coloring").is_nonempty());
    }

    #[test]
    fn witness_verification_rejects() {
        let m = compile_regex(">1*$>a#>aa$").unwrap();
        let vc = lookup("vertex-cover").unwrap();
        assert!(verify_witness(&m, vc, &">1$>a#>aa$".parse().unwrap()));
        assert!(!verify_witness(&m, vc, &">$>a#>aa$".parse().unwrap()));
        assert!(!verify_witness(&m, vc, &">1$>a#>a$>a#>aa$".parse().unwrap()));
    }

    #[test]
    fn decisions_are_deterministic() {
        let a = run(">1*$(>a*#>a*$)*", "dominating-set");
        let b = run(">1*$(>a*#>a*$)*", "dominating-set");
        assert_eq!(a.witness, b.witness);
        assert_eq!(a.stats.core_size, b.stats.core_size);
    }

    const TRIANGLE: &str = ">1*$(>a*#>a*$)*>a#>aa$>aa#>aaa$>a#>aaa$";

    #[test]
    fn triangle_suffix() {
        assert_eq!(run(TRIANGLE, "2-coloring").answer, Answer::Empty);
        assert!(run(TRIANGLE, "3-coloring").is_nonempty());
        let d = run(&TRIANGLE.replacen(">1*$", ">11*$", 1), "independent-set");
        let w = d.witness.unwrap();
        assert!(*w.instance.k() >= BigUint::from(1u32));
    }
}
