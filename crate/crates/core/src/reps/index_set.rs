use num_bigint::BigUint;
use num_traits::ToPrimitive;

/// An eventually periodic set of natural numbers: `i` is a member iff
/// `flags[fold(i)]`, where indices past `preperiod` wrap with `period`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexSet {
    flags: Vec<bool>,
    preperiod: usize,
    period: usize,
}

impl IndexSet {
    pub fn new(flags: Vec<bool>, preperiod: usize, period: usize) -> Self {
        assert!(period >= 1 && flags.len() == preperiod + period, "malformed periodic set");
        IndexSet { flags, preperiod, period }
    }

    pub fn empty() -> Self {
        IndexSet::new(vec![false], 0, 1)
    }

    pub fn finite(members: &[usize]) -> Self {
        let len = members.iter().max().map_or(0, |m| m + 1);
        let mut flags = vec![false; len + 1];
        for &m in members {
            flags[m] = true;
        }
        IndexSet::new(flags, len, 1)
    }

    fn fold(&self, i: usize) -> usize {
        if i < self.flags.len() {
            i
        } else {
            self.preperiod + (i - self.preperiod) % self.period
        }
    }

    pub fn contains(&self, i: usize) -> bool {
        self.flags[self.fold(i)]
    }

    pub fn contains_big(&self, i: &BigUint) -> bool {
        match i.to_usize() {
            Some(small) => self.contains(small),
            None => {
                let off = (i - BigUint::from(self.preperiod)) % BigUint::from(self.period);
                self.flags[self.preperiod + off.to_usize().expect("below period")]
            }
        }
    }

    pub fn is_empty(&self) -> bool {
        !self.flags.iter().any(|f| *f)
    }

    pub fn is_finite(&self) -> bool {
        !self.flags[self.preperiod..].iter().any(|f| *f)
    }

    pub fn preperiod(&self) -> usize {
        self.preperiod
    }

    pub fn period(&self) -> usize {
        self.period
    }

    /// Length of the table after which membership repeats.
    pub fn horizon(&self) -> usize {
        self.flags.len()
    }

    /// Members in increasing order; unbounded for infinite sets.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let bound = if self.is_finite() { self.preperiod } else { usize::MAX };
        (0..bound).filter(move |&i| self.contains(i))
    }

    /// Members of a finite set; `None` for infinite sets.
    pub fn members(&self) -> Option<Vec<usize>> {
        self.is_finite().then(|| self.iter().collect())
    }

    /// Smallest member `>= min`.
    pub fn first_at_least(&self, min: &BigUint) -> Option<BigUint> {
        if let Some(m) = min.to_usize().filter(|m| *m < self.flags.len()) {
            if let Some(i) = (m..self.flags.len()).find(|&i| self.flags[i]) {
                return Some(BigUint::from(i));
            }
            return self.first_in_cycle(&BigUint::from(self.flags.len()));
        }
        self.first_in_cycle(min)
    }

    fn first_in_cycle(&self, from: &BigUint) -> Option<BigUint> {
        let base = (from - BigUint::from(self.preperiod)) % BigUint::from(self.period);
        let base = base.to_usize().expect("below period");
        (0..self.period).find_map(|d| {
            let idx = self.preperiod + (base + d) % self.period;
            self.flags[idx].then(|| from + BigUint::from(d))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn periodic_membership() {
        // {1} ∪ {3, 5, 7, ...}
        let s = IndexSet::new(vec![false, true, false, true, false], 3, 2);
        assert!(s.contains(1) && s.contains(3) && s.contains(101));
        assert!(!s.contains(0) && !s.contains(2) && !s.contains(100));
        assert!(!s.is_finite());
        assert_eq!(s.iter().take(4).collect::<Vec<_>>(), vec![1, 3, 5, 7]);
        assert_eq!(s.first_at_least(&BigUint::from(4u32)), Some(BigUint::from(5u32)));
        let big = BigUint::from(2u32).pow(90);
        assert_eq!(s.first_at_least(&big), Some(&big + 1u32));
        assert!(s.contains_big(&(&big + 1u32)));
    }

    #[test]
    fn finite_sets() {
        let s = IndexSet::finite(&[0, 4]);
        assert!(s.is_finite());
        assert_eq!(s.members(), Some(vec![0, 4]));
        assert_eq!(s.first_at_least(&BigUint::from(5u32)), None);
        assert!(IndexSet::empty().is_empty());
        assert_eq!(IndexSet::empty().members(), Some(vec![]));
    }
}
