use std::fmt;

use crate::mseg::Content;

/// A monomial `f_{i₁} ⋯ f_{iₙ}` in the generators of `U_q^-`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<i32>);

impl Word {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn new(letters: Vec<i32>) -> Self {
        Self(letters)
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn content(&self) -> Content {
        Content::from_indices(self.0.iter().copied())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn prepend(&self, i: i32) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(i);
        v.extend_from_slice(&self.0);
        Word(v)
    }

    pub fn append(&self, i: i32) -> Word {
        let mut v = self.0.clone();
        v.push(i);
        Word(v)
    }

    pub fn without(&self, pos: usize) -> Word {
        let mut v = self.0.clone();
        v.remove(pos);
        Word(v)
    }

    /// All distinct words with the given content, in lexicographic order.
    pub fn all_with_content(content: &Content) -> Vec<Word> {
        let mut letters: Vec<i32> = content.iter().flat_map(|(i, n)| std::iter::repeat_n(i, n as usize)).collect();
        letters.sort_unstable();
        let mut out = vec![Word(letters.clone())];
        // Lexicographic successor (next permutation) handles repeats.
        loop {
            let n = letters.len();
            let Some(k) = (1..n).rev().find(|&k| letters[k - 1] < letters[k]).map(|k| k - 1) else {
                break;
            };
            let l = (k + 1..n).rev().find(|&l| letters[k] < letters[l]).unwrap();
            letters.swap(k, l);
            letters[k + 1..].reverse();
            out.push(Word(letters.clone()));
        }
        out
    }
}

impl fmt::Display for Word {
    /// `f[1]·f[3]`; the empty word prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.0.iter().map(|i| format!("f[{i}]")).collect();
        f.write_str(&parts.join("·"))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distinct_permutations() {
        let c = Content::from_indices([1, 1, 3]);
        let words = Word::all_with_content(&c);
        assert_eq!(words.len(), 3);
        assert_eq!(words[0].letters(), &[1, 1, 3]);
        assert_eq!(words[2].letters(), &[3, 1, 1]);
        assert_eq!(Word::all_with_content(&Content::new()), vec![Word::empty()]);
        assert_eq!(Word::all_with_content(&Content::from_indices([-1, 1, 3, 5])).len(), 24);
    }
}
