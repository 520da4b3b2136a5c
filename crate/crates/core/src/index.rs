//! Suffix automaton over the whole text, augmented with the earliest
//! occurrence end per state. Answers, in O(1) per extension step, whether a
//! prefix of the remaining text occurs before the current position, and where
//! its leftmost occurrence is.

pub(crate) const ROOT: u32 = 0;

#[derive(Debug, Clone)]
struct State {
    len: u32,
    link: i32,
    /// 1-based end position of the earliest occurrence of the strings in
    /// this state.
    min_end: u32,
    trans: Vec<(u32, u32)>,
}

#[derive(Debug)]
pub(crate) struct OccurrenceIndex {
    states: Vec<State>,
}

impl OccurrenceIndex {
    pub fn build(symbols: &[u32]) -> Self {
        let mut index = OccurrenceIndex {
            states: vec![State {
                len: 0,
                link: -1,
                min_end: 0,
                trans: Vec::new(),
            }],
        };
        let mut last = ROOT;
        for (i, &c) in symbols.iter().enumerate() {
            last = index.extend(last, c, (i + 1) as u32);
        }
        index
    }

    pub fn step(&self, state: u32, symbol: u32) -> Option<u32> {
        self.states[state as usize]
            .trans
            .iter()
            .find(|&&(c, _)| c == symbol)
            .map(|&(_, next)| next)
    }

    /// Earliest occurrence end (1-based) of the strings in `state`.
    pub fn min_end(&self, state: u32) -> usize {
        self.states[state as usize].min_end as usize
    }

    /// Earliest occurrence end of `needle`, or `None` if it is not a
    /// substring of the indexed text.
    pub fn min_end_of(&self, needle: &[u32]) -> Option<usize> {
        let mut state = ROOT;
        for &c in needle {
            state = self.step(state, c)?;
        }
        Some(self.min_end(state))
    }

    fn set_trans(&mut self, state: u32, symbol: u32, target: u32) {
        let entry = self.states[state as usize]
            .trans
            .iter_mut()
            .find(|(c, _)| *c == symbol)
            .expect("transition must exist");
        entry.1 = target;
    }

    fn extend(&mut self, last: u32, c: u32, end: u32) -> u32 {
        let cur = self.states.len() as u32;
        self.states.push(State {
            len: self.states[last as usize].len + 1,
            link: -1,
            min_end: end,
            trans: Vec::new(),
        });
        let mut p = last as i64;
        while p >= 0 && self.step(p as u32, c).is_none() {
            self.states[p as usize].trans.push((c, cur));
            p = self.states[p as usize].link as i64;
        }
        if p < 0 {
            self.states[cur as usize].link = ROOT as i32;
            return cur;
        }
        let q = self.step(p as u32, c).expect("loop exited on a transition");
        if self.states[p as usize].len + 1 == self.states[q as usize].len {
            self.states[cur as usize].link = q as i32;
            return cur;
        }
        // Split q: the clone keeps q's transitions and earliest end, since
        // its strings first occurred wherever q's did.
        let clone = self.states.len() as u32;
        let mut cloned = self.states[q as usize].clone();
        cloned.len = self.states[p as usize].len + 1;
        self.states.push(cloned);
        while p >= 0 && self.step(p as u32, c) == Some(q) {
            self.set_trans(p as u32, c, clone);
            p = self.states[p as usize].link as i64;
        }
        self.states[q as usize].link = clone as i32;
        self.states[cur as usize].link = clone as i32;
        cur
    }

    #[cfg(test)]
    fn state_count(&self) -> usize {
        self.states.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_min_end(text: &[u32], needle: &[u32]) -> Option<usize> {
        (0..text.len())
            .filter(|&i| text[i..].starts_with(needle))
            .map(|i| i + needle.len())
            .min()
    }

    fn check_all_substrings(text: &[u32]) {
        let index = OccurrenceIndex::build(text);
        for b in 0..text.len() {
            for e in b + 1..=text.len() {
                let needle = &text[b..e];
                assert_eq!(
                    index.min_end_of(needle),
                    naive_min_end(text, needle),
                    "min_end mismatch for {:?} in {:?}",
                    needle,
                    text
                );
            }
        }
    }

    #[test]
    fn min_end_matches_naive_on_small_strings() {
        check_all_substrings(&[0, 1, 0, 1, 0, 1, 2]);
        check_all_substrings(&[0, 0, 0, 0]);
        check_all_substrings(&[0, 1, 1, 0, 1, 0, 0, 1]);
    }

    #[test]
    fn min_end_matches_naive_exhaustively_on_binary() {
        for n in 0..=9usize {
            for mask in 0..(1u32 << n) {
                let text: Vec<u32> = (0..n).map(|i| (mask >> i) & 1).collect();
                check_all_substrings(&text);
            }
        }
    }

    #[test]
    fn absent_needle_is_none() {
        let index = OccurrenceIndex::build(&[0, 1, 0]);
        assert_eq!(index.min_end_of(&[1, 1]), None);
        assert_eq!(index.min_end_of(&[2]), None);
    }

    #[test]
    fn state_count_is_linear() {
        let text: Vec<u32> = (0..200).map(|i| (i * 7 % 3) as u32).collect();
        let index = OccurrenceIndex::build(&text);
        assert!(index.state_count() <= 2 * text.len());
    }
}
