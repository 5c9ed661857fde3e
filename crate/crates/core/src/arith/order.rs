use super::{ArithError, Partition, Permutation};

/// `μ ≤ λ` in dominance order. Partitions of different weight are
/// incomparable.
pub fn dominance_leq(mu: &Partition, lambda: &Partition) -> Result<bool, ArithError> {
    if mu.len() != lambda.len() {
        return Err(ArithError::SizeMismatch(mu.len(), lambda.len()));
    }
    if mu.weight() != lambda.weight() {
        return Ok(false);
    }
    let (mut a, mut b) = (0u32, 0u32);
    for (m, l) in mu.parts().iter().zip(lambda.parts()) {
        a += m;
        b += l;
        if a > b {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `w' ≤ w` in Bruhat order, by the tableau criterion: for every `k`, the
/// sorted set `{w'(1..k)}` is entrywise below the sorted set `{w(1..k)}`.
pub fn bruhat_leq(w_prime: &Permutation, w: &Permutation) -> Result<bool, ArithError> {
    if w_prime.len() != w.len() {
        return Err(ArithError::SizeMismatch(w_prime.len(), w.len()));
    }
    let n = w.len();
    for k in 1..n {
        let mut a: Vec<usize> = w_prime.images()[..k].to_vec();
        let mut b: Vec<usize> = w.images()[..k].to_vec();
        a.sort_unstable();
        b.sort_unstable();
        if a.iter().zip(&b).any(|(x, y)| x > y) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Strict order on labels: `(μ, v) ≺ (λ, w)` iff `μ <_D λ`, or `μ = λ` and
/// `v <_B w`.
pub fn precedes(
    lhs: (&Partition, &Permutation),
    rhs: (&Partition, &Permutation),
) -> Result<bool, ArithError> {
    let (mu, v) = lhs;
    let (lambda, w) = rhs;
    if mu == lambda {
        Ok(v != w && bruhat_leq(v, w)?)
    } else {
        dominance_leq(mu, lambda)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&p(&[1, 1]), &p(&[2, 0])).unwrap());
        assert!(dominance_leq(&p(&[2, 0]), &p(&[2, 0])).unwrap());
        assert!(!dominance_leq(&p(&[2, 0]), &p(&[1, 1])).unwrap());
        assert!(!dominance_leq(&p(&[1, 0]), &p(&[2, 0])).unwrap());
        assert!(matches!(
            dominance_leq(&p(&[1, 0]), &p(&[1, 0, 0])),
            Err(ArithError::SizeMismatch(2, 3))
        ));
        // first incomparable pair: (3,1,1,1) and (2,2,2)
        let a = p(&[3, 1, 1, 1, 0, 0]);
        let b = p(&[2, 2, 2, 0, 0, 0]);
        assert!(!dominance_leq(&a, &b).unwrap() && !dominance_leq(&b, &a).unwrap());
    }

    /// Dominance oracle: `μ ≤ λ` iff `μ` is reachable from `λ` by moving
    /// single boxes down to lower rows while staying a partition.
    fn reachable_by_box_moves(lambda: &Partition) -> Vec<Partition> {
        let mut seen = vec![lambda.clone()];
        let mut stack = vec![lambda.clone()];
        while let Some(cur) = stack.pop() {
            let n = cur.len();
            for i in 0..n {
                for j in i + 1..n {
                    let mut v = cur.parts().to_vec();
                    if v[i] == 0 {
                        continue;
                    }
                    v[i] -= 1;
                    v[j] += 1;
                    if let Ok(q) = Partition::try_new(v) {
                        if !seen.contains(&q) {
                            seen.push(q.clone());
                            stack.push(q);
                        }
                    }
                }
            }
        }
        seen
    }

    #[test]
    fn dominance_matches_box_move_oracle() {
        for w in 0..=6 {
            let all = Partition::all_of_weight(w, 4);
            for l in &all {
                let below = reachable_by_box_moves(l);
                for m in &all {
                    assert_eq!(
                        dominance_leq(m, l).unwrap(),
                        below.contains(m),
                        "{m} vs {l}"
                    );
                }
            }
        }
    }

    #[test]
    fn dominance_is_partial_order() {
        for w in 0..=6 {
            let all = Partition::all_of_weight(w, 4);
            for a in &all {
                assert!(dominance_leq(a, a).unwrap());
                for b in &all {
                    if a != b {
                        assert!(!(dominance_leq(a, b).unwrap() && dominance_leq(b, a).unwrap()));
                    }
                    for c in &all {
                        if dominance_leq(a, b).unwrap() && dominance_leq(b, c).unwrap() {
                            assert!(dominance_leq(a, c).unwrap());
                        }
                    }
                }
            }
        }
    }

    /// Bruhat oracle: transitive closure of `w < w t` for transpositions `t`
    /// with `l(w t) = l(w) + 1`.
    fn bruhat_closure(n: usize) -> Vec<(Permutation, Permutation)> {
        let all = Permutation::all(n);
        let mut rel: Vec<(Permutation, Permutation)> =
            all.iter().map(|w| (w.clone(), w.clone())).collect();
        for w in &all {
            for i in 0..n {
                for j in i + 1..n {
                    let wt = w.compose(&Permutation::transposition(n, i, j));
                    if wt.length() == w.length() + 1 {
                        rel.push((w.clone(), wt));
                    }
                }
            }
        }
        loop {
            let mut added = false;
            let snapshot = rel.clone();
            for (a, b) in &snapshot {
                for (c, d) in &snapshot {
                    if b == c && !rel.contains(&(a.clone(), d.clone())) {
                        rel.push((a.clone(), d.clone()));
                        added = true;
                    }
                }
            }
            if !added {
                return rel;
            }
        }
    }

    fn is_subword(sub: &[usize], word: &[usize]) -> bool {
        let mut it = word.iter();
        sub.iter().all(|s| it.any(|w| w == s))
    }

    #[test]
    fn bruhat_matches_covering_closure_and_subwords() {
        for n in 1..=4 {
            let all = Permutation::all(n);
            let closure = if n <= 3 {
                Some(bruhat_closure(n))
            } else {
                None
            };
            for v in &all {
                for w in &all {
                    let got = bruhat_leq(v, w).unwrap();
                    if let Some(rel) = &closure {
                        assert_eq!(got, rel.contains(&(v.clone(), w.clone())), "{v} vs {w}");
                    }
                    let word = w.reduced_word();
                    let by_subword = v.all_reduced_words().iter().any(|s| is_subword(s, &word));
                    assert_eq!(got, by_subword, "{v} vs {w}");
                }
            }
        }
        let w0 = Permutation::longest(3);
        for w in Permutation::all(3) {
            assert!(bruhat_leq(&Permutation::identity(3), &w).unwrap());
            assert!(bruhat_leq(&w, &w0).unwrap());
        }
    }

    #[test]
    fn precedes_is_strict_partial_order() {
        let id = Permutation::identity(2);
        let s1 = Permutation::simple(2, 0);
        assert!(precedes((&p(&[1, 1]), &id), (&p(&[2, 0]), &id)).unwrap());
        assert!(precedes((&p(&[2, 0]), &id), (&p(&[2, 0]), &s1)).unwrap());
        assert!(!precedes((&p(&[2, 0]), &s1), (&p(&[2, 0]), &s1)).unwrap());

        let mut labels = Vec::new();
        for l in Partition::all_of_weight(3, 3) {
            for w in Permutation::all(3) {
                labels.push((l.clone(), w));
            }
        }
        let lt = |a: &(Partition, Permutation), b: &(Partition, Permutation)| {
            precedes((&a.0, &a.1), (&b.0, &b.1)).unwrap()
        };
        for a in &labels {
            assert!(!lt(a, a));
            for b in &labels {
                for c in &labels {
                    if lt(a, b) && lt(b, c) {
                        assert!(lt(a, c));
                    }
                }
            }
        }
    }
}
