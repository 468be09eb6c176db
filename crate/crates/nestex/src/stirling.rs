//! Stirling permutations, second Eulerian polynomials, and the
//! descent-preserving bijection between maximal nested sets of partition
//! lattices with the minimal building set and Stirling permutations.
//!
//! Blocks of nested sets are handled as plain sorted integer sets so the
//! recursion can relabel ground sets freely (including the `*` element, an
//! integer below the current minimum).

use crate::vectors::{Int, IntPoly};

/// Each value appears exactly twice and everything between the two copies of
/// a value is strictly larger.
pub fn is_stirling(word: &[i64]) -> bool {
    if !word.len().is_multiple_of(2) {
        return false;
    }
    let mut values: Vec<i64> = word.to_vec();
    values.sort_unstable();
    values.dedup();
    if values.len() * 2 != word.len() {
        return false;
    }
    for &v in &values {
        let first = word.iter().position(|&x| x == v).unwrap();
        let last = word.iter().rposition(|&x| x == v).unwrap();
        if word.iter().filter(|&&x| x == v).count() != 2 {
            return false;
        }
        if word[first + 1..last].iter().any(|&x| x <= v) {
            return false;
        }
    }
    true
}

/// Insert pairs in increasing value order; every gap insertion preserves the
/// Stirling property, and each permutation arises exactly once. Output is
/// sorted lexicographically.
pub fn stirling_permutations(values: &[i64]) -> Vec<Vec<i64>> {
    let mut values = values.to_vec();
    values.sort_unstable();
    values.dedup();
    let mut out: Vec<Vec<i64>> = vec![Vec::new()];
    for &v in &values {
        let mut next = Vec::with_capacity(out.len() * (out[0].len() + 1));
        for w in &out {
            for gap in 0..=w.len() {
                let mut nw = Vec::with_capacity(w.len() + 2);
                nw.extend_from_slice(&w[..gap]);
                nw.push(v);
                nw.push(v);
                nw.extend_from_slice(&w[gap..]);
                next.push(nw);
            }
        }
        out = next;
    }
    out.sort();
    out
}

/// Number of indices `i < len` with `word[i] > word[i+1]` (no descent at the
/// final position).
pub fn descents(word: &[i64]) -> usize {
    word.windows(2).filter(|w| w[0] > w[1]).count()
}

/// Second Eulerian numbers by the two-term recurrence
/// `E(n,k) = (k+1) E(n−1,k) + (2n−1−k) E(n−1,k−1)`.
pub fn second_eulerian(n: usize) -> IntPoly {
    assert!(n >= 1);
    let mut row: Vec<Int> = vec![1];
    for m in 2..=n {
        let mut next = vec![0; m];
        for (k, item) in next.iter_mut().enumerate() {
            let a = if k < row.len() {
                (k as Int + 1) * row[k]
            } else {
                0
            };
            let b = if k >= 1 && k - 1 < row.len() {
                (2 * m as Int - 1 - k as Int) * row[k - 1]
            } else {
                0
            };
            *item = a + b;
        }
        row = next;
    }
    IntPoly::new(row)
}

/// Second Eulerian polynomial computed by exhaustive in-place enumeration of
/// the insertion tree, counting descents at the leaves.
pub fn second_eulerian_by_enumeration(n: usize) -> IntPoly {
    assert!(n >= 1);
    let mut counts = vec![0 as Int; n];
    let mut word: Vec<i64> = Vec::with_capacity(2 * n);
    fn rec(word: &mut Vec<i64>, v: i64, n: i64, counts: &mut [Int]) {
        if v > n {
            counts[descents(word)] += 1;
            return;
        }
        for gap in 0..=word.len() {
            word.insert(gap, v);
            word.insert(gap, v);
            rec(word, v + 1, n, counts);
            word.remove(gap);
            word.remove(gap);
        }
    }
    rec(&mut word, 1, n as i64, &mut counts);
    IntPoly::new(counts)
}

/// `|Q_{n,k}|` for `k = 0..n-1`.
pub fn count_by_descents(n: usize) -> Vec<Int> {
    second_eulerian(n).coeffs().to_vec()
}

/// Both inequality families for the descent counts: a weakly increasing
/// lower half and top-heaviness (the strongly flawless inequalities of the
/// corresponding h-vector).
pub fn check_top_heavy(n: usize) -> bool {
    crate::vectors::is_strongly_flawless(&count_by_descents(n)).unwrap_or(false)
}

/// A block: a sorted set of ground values.
pub type Block = Vec<i64>;

fn sorted(mut v: Vec<i64>) -> Vec<i64> {
    v.sort_unstable();
    v.dedup();
    v
}

/// Ψ: maximal nested sets of `(Π_I, G_min)` → Stirling permutations on
/// `I ∖ min I`. Members are the nonsingleton blocks (a laminar family of
/// proper subsets of `I`, each of size ≥ 2, with `|S| = |I| − 2`).
pub fn psi(ground: &[i64], members: &[Block]) -> Vec<i64> {
    let ground = sorted(ground.to_vec());
    assert!(ground.len() >= 2, "need at least two ground values");
    let m0 = ground[0];
    // G_0: the smallest block (member or the full set) containing min I
    let mut candidates: Vec<&Block> = members.iter().filter(|b| b.contains(&m0)).collect();
    candidates.sort_by_key(|b| b.len());
    let g0: Block = match candidates.first() {
        Some(b) => (*b).clone(),
        None => ground.clone(),
    };
    let g0_tilde: Block = g0.iter().copied().filter(|&x| x != m0).collect();
    let alpha = g0_tilde[0];
    // left part: members strictly inside G̃_0
    let left: Vec<i64> = if g0.len() == 2 {
        Vec::new() // G_0 is an atom: empty permutation
    } else {
        let inner: Vec<Block> = members
            .iter()
            .filter(|b| is_strict_subset(b, &g0_tilde))
            .cloned()
            .collect();
        psi(&g0_tilde, &inner)
    };
    // right part: the contraction (G_0 ∨ S) ∖ G_0 on {*} ∪ I ∖ G_0
    let right: Vec<i64> = if g0 == ground {
        Vec::new() // G_0 = 1̂: empty permutation
    } else {
        let star = m0 - 1;
        let mut new_ground: Vec<i64> = ground.iter().copied().filter(|x| !g0.contains(x)).collect();
        new_ground.push(star);
        let mut contracted: Vec<Block> = Vec::new();
        for b in members {
            if b == &g0 || is_strict_subset(b, &g0) {
                continue;
            }
            if b.iter().any(|x| g0.contains(x)) {
                // b ⊋ g0 in a laminar family: merge into the * point
                let mut nb: Vec<i64> = b.iter().copied().filter(|x| !g0.contains(x)).collect();
                nb.push(star);
                contracted.push(sorted(nb));
            } else {
                contracted.push(b.clone());
            }
        }
        psi(&sorted(new_ground), &contracted)
    };
    let mut word = Vec::with_capacity(2 * (ground.len() - 1));
    word.push(alpha);
    word.extend(left);
    word.push(alpha);
    word.extend(right);
    word
}

fn is_strict_subset(a: &[i64], b: &[i64]) -> bool {
    a.len() < b.len() && a.iter().all(|x| b.contains(x))
}

/// Φ: Stirling permutations on `I ∖ min I` → maximal nested sets of
/// `(Π_I, G_min)`, inverse to Ψ.
pub fn phi(ground: &[i64], word: &[i64]) -> Vec<Block> {
    let ground = sorted(ground.to_vec());
    assert!(ground.len() >= 2);
    let m0 = ground[0];
    if word.is_empty() {
        assert_eq!(
            ground.len(),
            2,
            "only a two-element ground has the empty word"
        );
        return Vec::new();
    }
    let alpha = word[0];
    let second = word.iter().skip(1).position(|&x| x == alpha).unwrap() + 1;
    let sigma1 = &word[1..second];
    let sigma2 = &word[second + 1..];
    let i1: Vec<i64> = sorted(sigma1.to_vec());
    let g0_tilde: Block = sorted([i1.clone(), vec![alpha]].concat());
    let g0: Block = sorted([g0_tilde.clone(), vec![m0]].concat());
    let mut members: Vec<Block> = Vec::new();
    if !i1.is_empty() {
        // G̃_0 itself is a member, plus the left recursion inside it
        members.push(g0_tilde.clone());
        members.extend(phi(&g0_tilde, sigma1));
    }
    if g0.len() < ground.len() {
        // G_0 is a member, plus the lifted right recursion
        members.push(g0.clone());
        let star = m0 - 1;
        let mut rest: Vec<i64> = ground.iter().copied().filter(|x| !g0.contains(x)).collect();
        rest.push(star);
        for b in phi(&sorted(rest), sigma2) {
            if b.contains(&star) {
                let mut nb: Vec<i64> = b.into_iter().filter(|&x| x != star).collect();
                nb.extend(g0.iter().copied());
                members.push(sorted(nb));
            } else {
                members.push(b);
            }
        }
    } else if !i1.is_empty() {
        // g0 is the full ground set; only G̃_0 and the left part count
    }
    members.sort();
    members
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q2_is_the_three_words() {
        let q2 = stirling_permutations(&[1, 2]);
        assert_eq!(
            q2,
            vec![vec![1, 1, 2, 2], vec![1, 2, 2, 1], vec![2, 2, 1, 1]]
        );
        assert!(q2.iter().all(|w| is_stirling(w)));
    }

    #[test]
    fn q3_has_15_elements() {
        assert_eq!(stirling_permutations(&[1, 2, 3]).len(), 15);
    }

    #[test]
    fn stirling_property() {
        assert!(is_stirling(&[1, 2, 2, 1]));
        assert!(!is_stirling(&[2, 1, 2, 1]));
        assert!(!is_stirling(&[1, 1, 1, 2]));
        assert!(is_stirling(&[]));
    }

    #[test]
    fn descent_counts() {
        assert_eq!(descents(&[1, 1, 2, 2]), 0);
        assert_eq!(descents(&[2, 2, 1, 1]), 1);
        assert_eq!(descents(&[1, 2, 2, 1]), 1);
        assert_eq!(descents(&[3, 3, 2, 2, 1, 1]), 2);
    }

    #[test]
    fn paper_table_of_polynomials() {
        assert_eq!(second_eulerian(1).coeffs(), &[1]);
        assert_eq!(second_eulerian(2).coeffs(), &[1, 2]);
        assert_eq!(second_eulerian(3).coeffs(), &[1, 8, 6]);
        assert_eq!(second_eulerian(4).coeffs(), &[1, 22, 58, 24]);
        assert_eq!(second_eulerian(5).coeffs(), &[1, 52, 328, 444, 120]);
    }

    #[test]
    fn recurrence_matches_enumeration() {
        for n in 1..=6 {
            assert_eq!(
                second_eulerian(n),
                second_eulerian_by_enumeration(n),
                "mismatch at n = {n}"
            );
        }
    }

    #[test]
    fn double_factorial_counts() {
        let mut expected: Int = 1;
        for n in 1..=7usize {
            expected = if n == 1 {
                1
            } else {
                expected * (2 * n as Int - 1)
            };
            let total: Int = second_eulerian(n).coeffs().iter().sum();
            assert_eq!(total, expected, "|Q_{n}| should be (2n-1)!!");
        }
    }

    #[test]
    fn top_heavy_up_to_9() {
        for n in 1..=9 {
            assert!(check_top_heavy(n), "fails at n = {n}");
        }
    }

    #[test]
    fn psi_on_pi3() {
        // the three maximal nested sets of (Π_{0,1,2}, G_min) are the three
        // proper blocks of size 2
        let i = [0i64, 1, 2];
        assert_eq!(psi(&i, &[vec![0, 1]]), vec![1, 1, 2, 2]);
        assert_eq!(psi(&i, &[vec![1, 2]]), vec![1, 2, 2, 1]);
        assert_eq!(psi(&i, &[vec![0, 2]]), vec![2, 2, 1, 1]);
    }

    #[test]
    fn phi_inverts_psi_on_pi3() {
        let i = [0i64, 1, 2];
        for blocks in [vec![vec![0, 1]], vec![vec![1, 2]], vec![vec![0, 2]]] {
            let word = psi(&i, &blocks);
            assert_eq!(phi(&i, &word), blocks);
        }
    }

    #[test]
    fn phi_base_case() {
        assert_eq!(phi(&[0, 1], &[]), Vec::<Block>::new());
        assert_eq!(phi(&[0, 1], &[1, 1]), Vec::<Block>::new());
    }
}
