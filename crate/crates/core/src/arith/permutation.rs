use std::fmt;

use super::partition::next_permutation;
use super::ArithError;

/// Bijection of `{0, .., N-1}` stored as its image vector.
///
/// Acts on polynomials by `x_i -> x_{w(i)}`, so that `(v ∘ w)·f = v·(w·f)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// Simple transposition swapping `j` and `j + 1` (0-based).
    pub fn simple(n: usize, j: usize) -> Self {
        Self::transposition(n, j, j + 1)
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(i, j);
        Permutation(v)
    }

    /// Longest element `i -> N-1-i`.
    pub fn longest(n: usize) -> Self {
        Permutation((0..n).rev().collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, ArithError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(ArithError::InvalidPermutation(format!(
                    "{images:?} is not a bijection of 0..{n}"
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation(images))
    }

    /// Parses 1-based one-line notation, e.g. `"2,1,3"` or `"213"`.
    pub fn parse(s: &str) -> Result<Self, ArithError> {
        let s = s.trim();
        let toks: Vec<&str> = if s.contains(',') {
            s.split(',').map(str::trim).collect()
        } else {
            s.split_terminator("").filter(|t| !t.is_empty()).collect()
        };
        let mut images = Vec::with_capacity(toks.len());
        for (pos, t) in toks.iter().enumerate() {
            let v: usize = t.parse().map_err(|_| ArithError::Parse {
                pos,
                msg: format!("expected a positive integer, found {t:?}"),
            })?;
            if v == 0 {
                return Err(ArithError::InvalidPermutation("entries are 1-based".into()));
            }
            images.push(v - 1);
        }
        Self::from_images(images)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &w)| i == w)
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len(), "permutation size");
        Permutation(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut v = vec![0; self.len()];
        for (i, &w) in self.0.iter().enumerate() {
            v[w] = i;
        }
        Permutation(v)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let n = self.len();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.0[i] > self.0[j])
            .count()
    }

    pub fn sign(&self) -> i32 {
        if self.length().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// A reduced word `[a_1, .., a_k]` with `self = s_{a_1} ∘ .. ∘ s_{a_k}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::new();
        while let Some(j) = (0..w.len().saturating_sub(1)).find(|&j| w.0[j] > w.0[j + 1]) {
            w.0.swap(j, j + 1);
            word.push(j);
        }
        word.reverse();
        word
    }

    /// Every reduced word of `self`.
    pub fn all_reduced_words(&self) -> Vec<Vec<usize>> {
        if self.is_identity() {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for j in 0..self.len() - 1 {
            if self.0[j] > self.0[j + 1] {
                let mut w = self.clone();
                w.0.swap(j, j + 1);
                for mut word in w.all_reduced_words() {
                    word.push(j);
                    out.push(word);
                }
            }
        }
        out
    }

    pub fn from_word(n: usize, word: &[usize]) -> Permutation {
        word.iter().fold(Self::identity(n), |acc, &j| {
            acc.compose(&Self::simple(n, j))
        })
    }

    /// All of `S_N` in lexicographic order of image vectors.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut v: Vec<usize> = (0..n).collect();
        let mut out = vec![Permutation(v.clone())];
        while next_permutation(&mut v) {
            out.push(Permutation(v.clone()));
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|i| (i + 1).to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_and_inverse() {
        for w in Permutation::all(4) {
            assert!(w.inverse().compose(&w).is_identity());
            assert_eq!(w.inverse().length(), w.length());
        }
        assert_eq!(Permutation::longest(4).length(), 6);
    }

    #[test]
    fn reduced_words_rebuild_the_permutation() {
        for w in Permutation::all(4) {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.length());
            assert_eq!(Permutation::from_word(4, &word), w);
            for other in w.all_reduced_words() {
                assert_eq!(Permutation::from_word(4, &other), w);
            }
        }
        let mut w0 = Permutation::longest(3).all_reduced_words();
        w0.sort();
        assert_eq!(w0, vec![vec![0, 1, 0], vec![1, 0, 1]]);
    }

    #[test]
    fn parse_one_line() {
        let w = Permutation::parse("2,1,3").unwrap();
        assert_eq!(w, Permutation::simple(3, 0));
        assert_eq!(Permutation::parse("312").unwrap().to_string(), "3,1,2");
        assert!(Permutation::parse("1,1").is_err());
        assert!(Permutation::parse("0,1").is_err());
    }
}
