//! λ-matchings between two tuples of class sizes, with their value and
//! sorted merge.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A tuple of colour-class sizes, kept in ascending order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ColourProfile(Vec<usize>);

impl ColourProfile {
    pub fn ascending(mut entries: Vec<usize>) -> Self {
        entries.sort_unstable();
        ColourProfile(entries)
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Index pairs `(i, j)` into two tuples; lefts distinct, rights distinct.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LambdaMatching {
    pairs: Vec<(usize, usize)>,
}

impl LambdaMatching {
    /// Validates the pairs against tuples of lengths `len_a` and `len_b` (0-based indices).
    pub fn new(pairs: Vec<(usize, usize)>, len_a: usize, len_b: usize) -> Result<Self> {
        let mut left = vec![false; len_a];
        let mut right = vec![false; len_b];
        for &(i, j) in &pairs {
            if i >= len_a || j >= len_b {
                return Err(Error::precondition(format!(
                    "matching pair ({i}, {j}) out of range"
                )));
            }
            if std::mem::replace(&mut left[i], true) || std::mem::replace(&mut right[j], true) {
                return Err(Error::precondition(format!(
                    "matching reuses an index in ({i}, {j})"
                )));
            }
        }
        Ok(LambdaMatching { pairs })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn lambda(&self) -> usize {
        self.pairs.len()
    }

    pub fn transposed(&self) -> Self {
        LambdaMatching {
            pairs: self.pairs.iter().map(|&(i, j)| (j, i)).collect(),
        }
    }

    /// Sum of the products of matched entries.
    pub fn val(&self, a: &[usize], b: &[usize]) -> usize {
        self.pairs.iter().map(|&(i, j)| a[i] * b[j]).sum()
    }

    /// Matched sums plus all unmatched entries, sorted ascending.
    pub fn merge(&self, a: &[usize], b: &[usize]) -> Vec<usize> {
        let mut out = Vec::with_capacity(a.len() + b.len() - self.pairs.len());
        merge_into(&self.pairs, a, b, &mut out);
        out
    }
}

pub(crate) fn merge_into(pairs: &[(usize, usize)], a: &[usize], b: &[usize], out: &mut Vec<usize>) {
    out.clear();
    let mut used_a = 0u64;
    let mut used_b = 0u64;
    for &(i, j) in pairs {
        out.push(a[i] + b[j]);
        used_a |= 1 << i;
        used_b |= 1 << j;
    }
    out.extend(
        a.iter()
            .enumerate()
            .filter(|(i, _)| used_a >> i & 1 == 0)
            .map(|(_, &x)| x),
    );
    out.extend(
        b.iter()
            .enumerate()
            .filter(|(j, _)| used_b >> j & 1 == 0)
            .map(|(_, &x)| x),
    );
    out.sort_unstable();
}

pub fn lambda_val(mu: &LambdaMatching, a: &ColourProfile, b: &ColourProfile) -> usize {
    mu.val(a.entries(), b.entries())
}

pub fn lambda_merge(mu: &LambdaMatching, a: &ColourProfile, b: &ColourProfile) -> ColourProfile {
    ColourProfile(mu.merge(a.entries(), b.entries()))
}

/// Every λ-matching between tuples of lengths `len_a` and `len_b`, as pair lists.
pub fn all_matchings(len_a: usize, len_b: usize, lambda: usize) -> Vec<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    if lambda <= len_a.min(len_b) {
        let mut cur = Vec::with_capacity(lambda);
        rec(len_a, len_b, lambda, 0, 0, &mut cur, &mut out);
    }
    out
}

// Left indices increase along the pair list, so each matching appears once.
fn rec(
    len_a: usize,
    len_b: usize,
    lambda: usize,
    next_left: usize,
    used_right: u64,
    cur: &mut Vec<(usize, usize)>,
    out: &mut Vec<Vec<(usize, usize)>>,
) {
    if cur.len() == lambda {
        out.push(cur.clone());
        return;
    }
    let remaining = lambda - cur.len();
    for i in next_left..=len_a - remaining {
        for j in 0..len_b {
            if used_right >> j & 1 == 0 {
                cur.push((i, j));
                rec(len_a, len_b, lambda, i + 1, used_right | 1 << j, cur, out);
                cur.pop();
            }
        }
    }
}
