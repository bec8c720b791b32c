//! Size-then-lex enumeration of index subsets.

use rayon::prelude::*;

/// C(n, k), saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(x) => x / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// The lexicographically first `k`-subset of `0..n` accepted by `f`.
/// With `parallel`, work is split on the first element; the leftmost hit wins,
/// so the result is the same as the serial one.
pub fn first_combination<F>(n: usize, k: usize, parallel: bool, f: F) -> Option<Vec<usize>>
where
    F: Fn(&[usize]) -> bool + Sync,
{
    if k > n {
        return None;
    }
    if k == 0 {
        return f(&[]).then(Vec::new);
    }
    let from = |first: usize| {
        let mut cur = Vec::with_capacity(k);
        cur.push(first);
        search(n, k, &mut cur, &f).then_some(cur)
    };
    if parallel {
        (0..=n - k).into_par_iter().find_map_first(from)
    } else {
        (0..=n - k).find_map(from)
    }
}

fn search<F: Fn(&[usize]) -> bool>(n: usize, k: usize, cur: &mut Vec<usize>, f: &F) -> bool {
    if cur.len() == k {
        return f(cur);
    }
    let start = cur.last().map_or(0, |&x| x + 1);
    let remaining = k - cur.len();
    for x in start..=n - remaining {
        cur.push(x);
        if search(n, k, cur, f) {
            return true;
        }
        cur.pop();
    }
    false
}

/// Calls `f` on every subset of `0..n` with size at most `max`, size-then-lex.
pub fn for_each_subset_upto(n: usize, max: usize, mut f: impl FnMut(&[usize])) {
    for k in 0..=max.min(n) {
        let mut cur = Vec::with_capacity(k);
        walk(n, k, &mut cur, &mut f);
    }
}

fn walk(n: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if cur.len() == k {
        f(cur);
        return;
    }
    let start = cur.last().map_or(0, |&x| x + 1);
    for x in start..=n - (k - cur.len()) {
        cur.push(x);
        walk(n, k, cur, f);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(5, 6), 0);
        assert_eq!(binomial(60, 30), 118264581564861424);
        assert_eq!(binomial(1000, 500), u128::MAX);
    }

    #[test]
    fn lex_order_and_parallel_agree() {
        let mut all = Vec::new();
        for_each_subset_upto(4, 2, |s| all.push(s.to_vec()));
        assert_eq!(all.len(), 1 + 4 + 6);
        assert_eq!(all[5], vec![0, 1]);
        assert_eq!(all[10], vec![2, 3]);
        let pred = |s: &[usize]| s.iter().sum::<usize>() >= 7;
        let serial = first_combination(6, 3, false, pred);
        assert_eq!(serial, Some(vec![0, 2, 5]));
        assert_eq!(first_combination(6, 3, true, pred), serial);
        assert_eq!(first_combination(3, 0, false, |_| true), Some(vec![]));
        assert_eq!(first_combination(3, 4, false, |_| true), None);
    }
}
