use std::fmt;

use num_bigint::BigInt;

use super::{factorial, ArithError};

/// Weakly decreasing sequence of non-negative parts, padded with zeros to a
/// fixed length `N`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Panics if `parts` is not weakly decreasing.
    pub fn new(parts: Vec<u32>) -> Self {
        Self::try_new(parts).expect("invalid partition")
    }

    pub fn try_new(parts: Vec<u32>) -> Result<Self, ArithError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(ArithError::InvalidPartition(format!(
                "parts not weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn empty(n: usize) -> Self {
        Partition(vec![0; n])
    }

    /// Parses a comma list such as `"2,1,0"`, padding with zeros to `n`.
    /// The empty string is the zero partition.
    pub fn parse(s: &str, n: usize) -> Result<Self, ArithError> {
        let s = s.trim();
        let mut parts = Vec::new();
        if !s.is_empty() {
            let mut pos = 0;
            for tok in s.split(',') {
                let v: u32 = tok.trim().parse().map_err(|_| ArithError::Parse {
                    pos,
                    msg: format!("expected a non-negative integer, found {:?}", tok.trim()),
                })?;
                parts.push(v);
                pos += tok.len() + 1;
            }
        }
        while parts.len() > n && parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.len() > n {
            return Err(ArithError::InvalidPartition(format!(
                "{} nonzero parts exceed N = {n}",
                parts.len()
            )));
        }
        parts.resize(n, 0);
        Self::try_new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based); zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&p| p == 0)
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.0.iter().take_while(|&&p| p > 0).count()
    }

    pub fn padded(&self, n: usize) -> Partition {
        let mut v = self.trimmed().0;
        assert!(v.len() <= n, "partition {self} has more than {n} parts");
        v.resize(n, 0);
        Partition(v)
    }

    pub fn trimmed(&self) -> Partition {
        Partition(self.0[..self.length()].to_vec())
    }

    /// Conjugate partition, with exactly `λ_1` parts.
    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        Partition((1..=first).map(|j| self.conj_part(j)).collect())
    }

    /// `λ'_j = #{i : λ_i ≥ j}` for 1-based column `j`.
    pub fn conj_part(&self, j: u32) -> u32 {
        self.0.iter().filter(|&&p| p >= j).count() as u32
    }

    /// Boxes `(i, j)` of the diagram, both 1-based.
    pub fn boxes(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i as u32 + 1, j)))
    }

    /// `λ + δ` with `δ = (N-1, ..., 0)`.
    pub fn plus_delta(&self) -> Partition {
        let n = self.len();
        Partition(
            self.0
                .iter()
                .enumerate()
                .map(|(i, &p)| p + (n - 1 - i) as u32)
                .collect(),
        )
    }

    /// Adds one box to each of the first `m` rows.
    pub fn add_first(&self, m: usize) -> Partition {
        let mut v = self.0.clone();
        for p in v.iter_mut().take(m) {
            *p += 1;
        }
        Partition(v)
    }

    /// Order of the stabilizer of `λ` in `S_N`: product of multiplicity factorials.
    pub fn stabilizer_order(&self) -> BigInt {
        let mut acc = BigInt::from(1);
        let mut i = 0;
        while i < self.0.len() {
            let mut j = i;
            while j < self.0.len() && self.0[j] == self.0[i] {
                j += 1;
            }
            acc *= factorial((j - i) as u64);
            i = j;
        }
        acc
    }

    /// All partitions of `weight` with at most `n` parts, padded to `n`,
    /// in reverse lexicographic order (largest first).
    pub fn all_of_weight(weight: u32, n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        fill(weight, weight, n, &mut cur, &mut out);
        out
    }

    /// All partitions with weight at most `max_weight`, by increasing weight.
    pub fn all_up_to(max_weight: u32, n: usize) -> Vec<Partition> {
        (0..=max_weight)
            .flat_map(|w| Self::all_of_weight(w, n))
            .collect()
    }

    /// Distinct rearrangements of the parts (compositions with this sorting).
    pub fn rearrangements(&self) -> Vec<Vec<u32>> {
        let mut v: Vec<u32> = self.0.clone();
        v.sort_unstable();
        let mut out = vec![v.clone()];
        while next_permutation(&mut v) {
            out.push(v.clone());
        }
        out
    }

    /// Sorts a composition into a partition.
    pub fn from_composition(eta: &[u32]) -> Partition {
        let mut v = eta.to_vec();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }
}

fn fill(rest: u32, max: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if slots == 0 {
        if rest == 0 {
            out.push(Partition(cur.clone()));
        }
        return;
    }
    if rest > max.saturating_mul(slots as u32) {
        return;
    }
    for p in (0..=rest.min(max)).rev() {
        cur.push(p);
        fill(rest - p, p, slots - 1, cur, out);
        cur.pop();
    }
}

pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_pads_and_rejects() {
        assert_eq!(Partition::parse("2,1", 3).unwrap().parts(), &[2, 1, 0]);
        assert_eq!(Partition::parse("", 2).unwrap().parts(), &[0, 0]);
        assert_eq!(Partition::parse("1,0,0,0", 2).unwrap().parts(), &[1, 0]);
        assert!(Partition::parse("1,2", 2).is_err());
        assert!(Partition::parse("1,x", 2).is_err());
        assert!(Partition::parse("1,1,1", 2).is_err());
    }

    #[test]
    fn counts_match_partition_numbers() {
        // p(n) restricted to at most 3 parts: 1, 1, 2, 3, 4, 5, 7
        let counts: Vec<usize> = (0..7)
            .map(|w| Partition::all_of_weight(w, 3).len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 4, 5, 7]);
        let p4: Vec<String> = Partition::all_of_weight(4, 4)
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(p4, ["4,0,0,0", "3,1,0,0", "2,2,0,0", "2,1,1,0", "1,1,1,1"]);
    }

    #[test]
    fn conjugate_is_involution() {
        for w in 0..=8 {
            for p in Partition::all_of_weight(w, 8) {
                let c = p.conjugate();
                assert_eq!(c.weight(), w);
                assert_eq!(c.conjugate(), p.trimmed());
            }
        }
        assert_eq!(
            Partition::new(vec![3, 1, 0]).conjugate().parts(),
            &[2, 1, 1]
        );
    }

    #[test]
    fn delta_and_increment() {
        let l = Partition::new(vec![2, 1, 1]);
        assert_eq!(l.plus_delta().parts(), &[4, 2, 1]);
        assert_eq!(l.add_first(2).parts(), &[3, 2, 1]);
        assert_eq!(l.stabilizer_order(), BigInt::from(2));
        assert_eq!(l.rearrangements().len(), 3);
    }
}
