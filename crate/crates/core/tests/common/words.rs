//! Boundary words of discs, and their types read off by hand.

use sutcomb::sutured::{DiscType, Letter};

/// Every word of length at most `len`.
pub fn words_up_to(len: usize, alphabet: &[Letter]) -> Vec<Vec<Letter>> {
    let mut all = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &frontier {
            for &l in alphabet {
                let mut v: Vec<Letter> = w.clone();
                v.push(l);
                next.push(v);
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all
}

/// A disc bounded by a word of suture crossings and spanning arcs has index
/// `-2 + length`.
pub fn disc_index(word: &[Letter]) -> i64 {
    word.len() as i64 - 2
}

/// The zero-index disc types: two letters, classified by what they are.
pub fn expected_type(word: &[Letter]) -> DiscType {
    use Letter::{Arc, Suture};
    match word {
        [Suture(_), Arc(_)] | [Arc(_), Suture(_)] => DiscType::Cancelling,
        [Suture(_), Suture(_)] => DiscType::Product,
        [Arc(a), Arc(b)] if a == b => DiscType::SelfAmalgamating,
        [Arc(_), Arc(_)] => DiscType::NonSelfAmalgamating,
        _ => DiscType::None,
    }
}
