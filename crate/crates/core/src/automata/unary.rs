use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::nfa::{Nfa, StateSet};
use super::symbol::Symbol;

/// The eventually periodic sequence `S_j = δ(S_0, s^j)` of state sets
/// obtained by reading one symbol over and over.
#[derive(Clone, Debug)]
pub struct UnaryOrbit {
    sets: Vec<StateSet>,
    preperiod: usize,
    period: usize,
}

impl UnaryOrbit {
    pub fn new(nfa: &Nfa, start: StateSet, sym: Symbol) -> Self {
        let mut sets = vec![start.clone()];
        let mut seen = HashMap::from([(start, 0usize)]);
        loop {
            let next = nfa.step(sets.last().expect("nonempty"), sym);
            if let Some(&first) = seen.get(&next) {
                let period = sets.len() - first;
                return UnaryOrbit { sets, preperiod: first, period };
            }
            seen.insert(next.clone(), sets.len());
            sets.push(next);
        }
    }

    pub fn preperiod(&self) -> usize {
        self.preperiod
    }

    pub fn period(&self) -> usize {
        self.period
    }

    /// Distinct sets in order; index `j` is `S_j` for `j < preperiod + period`.
    pub fn sets(&self) -> &[StateSet] {
        &self.sets
    }

    fn fold_index(&self, j: &BigUint) -> usize {
        if let Some(small) = j.to_usize().filter(|v| *v < self.sets.len()) {
            return small;
        }
        let offset = (j - BigUint::from(self.preperiod)) % BigUint::from(self.period);
        self.preperiod + offset.to_usize().expect("offset below period")
    }

    pub fn at(&self, j: &BigUint) -> &StateSet {
        &self.sets[self.fold_index(j)]
    }
}

/// Smallest `j >= min` such that `accept(S_j)` holds, jumping over the
/// periodic tail with arbitrary-precision arithmetic. `None` when no such `j`
/// exists.
pub fn first_accepted_at_least(
    orbit: &UnaryOrbit,
    min: &BigUint,
    accept: impl Fn(&StateSet) -> bool,
) -> Option<BigUint> {
    let flags: Vec<bool> = orbit.sets.iter().map(&accept).collect();
    let total = flags.len();
    if let Some(m) = min.to_usize().filter(|m| *m < total) {
        if let Some(i) = (m..total).find(|&i| flags[i]) {
            return Some(BigUint::from(i));
        }
        // Past the table: continue in the cycle from its start.
        let start = BigUint::from(total);
        return first_in_cycle(orbit, &flags, &start);
    }
    first_in_cycle(orbit, &flags, min)
}

fn first_in_cycle(orbit: &UnaryOrbit, flags: &[bool], from: &BigUint) -> Option<BigUint> {
    let base = orbit.fold_index(from);
    (0..orbit.period).find_map(|d| {
        let idx = orbit.preperiod + (base - orbit.preperiod + d) % orbit.period;
        flags[idx].then(|| from + BigUint::from(d))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::compile_regex;

    #[test]
    fn orbit_of_modular_counter() {
        let m = compile_regex("(111)*").unwrap();
        let orbit = UnaryOrbit::new(&m, m.initial_set(), Symbol::One);
        assert_eq!(orbit.period(), 3);
        let finals = m.final_set();
        let hit = |j: u64| {
            first_accepted_at_least(&orbit, &BigUint::from(j), |s| s.intersects(&finals)).unwrap()
        };
        assert_eq!(hit(0), BigUint::from(0u32));
        assert_eq!(hit(1), BigUint::from(3u32));
        assert_eq!(hit(1000), BigUint::from(1002u32));
        let big = BigUint::from(2u32).pow(100);
        let got = first_accepted_at_least(&orbit, &big, |s| s.intersects(&finals)).unwrap();
        assert!(got >= big && &got - &big < BigUint::from(3u32));
        assert_eq!(&got % 3u32, BigUint::from(0u32));
    }

    #[test]
    fn orbit_without_acceptance() {
        let m = compile_regex("11").unwrap();
        let orbit = UnaryOrbit::new(&m, m.initial_set(), Symbol::One);
        let finals = m.final_set();
        assert_eq!(first_accepted_at_least(&orbit, &BigUint::from(3u32), |s| s.intersects(&finals)), None);
        assert_eq!(
            first_accepted_at_least(&orbit, &BigUint::from(0u32), |s| s.intersects(&finals)),
            Some(BigUint::from(2u32))
        );
    }
}
