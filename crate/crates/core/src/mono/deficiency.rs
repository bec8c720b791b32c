//! Palette of χ − d colours for fixed d.
//!
//! A state is `(node p, k, L)`: colourings of T_p using exactly `k` non-empty
//! colours, with `χ(T_p) − k ≤ d`. Its table maps the sizes of the `L`
//! smallest classes (ascending) to the fewest monochromatic edges achieving
//! them. Only the smallest classes matter to ancestors: at a 0-node the
//! children's classes are aligned from the largest down, and at a 1-node the
//! shared colours can always be taken among the smallest classes on each side.

use std::collections::HashMap;
use std::rc::Rc;

use super::matching::{all_matchings, merge_into};
use super::Colouring;
use crate::cotree::{Cotree, Node, NodeStats, Op};
use crate::error::{Error, Result};

type Profile = Vec<usize>;

#[derive(Clone)]
enum Choice {
    Leaf,
    /// Children `(k, L, profile)` for left and right.
    Union {
        left: (usize, usize, Profile),
        right: (usize, usize, Profile),
    },
    Join {
        left: (usize, usize, Profile),
        right: (usize, usize, Profile),
        pairs: Vec<(usize, usize)>,
    },
}

struct Entry {
    cost: u64,
    choice: Choice,
}

type Table = HashMap<Profile, Entry>;

struct Dp<'a> {
    t: &'a Cotree,
    stats: NodeStats,
    d: usize,
    memo: HashMap<(usize, usize, usize), Rc<Table>>,
}

fn offer(out: &mut Table, key: Profile, cost: u64, choice: impl FnOnce() -> Choice) {
    match out.get(&key) {
        Some(e) if e.cost <= cost => {}
        _ => {
            out.insert(
                key,
                Entry {
                    cost,
                    choice: choice(),
                },
            );
        }
    }
}

fn sorted_entries(t: &Table) -> Vec<(&Profile, &Entry)> {
    let mut v: Vec<_> = t.iter().collect();
    v.sort_unstable_by(|a, b| a.0.cmp(b.0));
    v
}

impl<'a> Dp<'a> {
    fn k_range(&self, p: usize) -> std::ops::RangeInclusive<usize> {
        let chi = self.stats.chi[p];
        chi.saturating_sub(self.d).max(1)..=chi
    }

    fn table(&mut self, p: usize, k: usize, l: usize) -> Rc<Table> {
        debug_assert!(l <= k && self.k_range(p).contains(&k));
        if let Some(t) = self.memo.get(&(p, k, l)) {
            return t.clone();
        }
        let table = match self.t.node(p) {
            Node::Leaf(_) => {
                let mut t = Table::new();
                t.insert(
                    vec![1; l],
                    Entry {
                        cost: 0,
                        choice: Choice::Leaf,
                    },
                );
                t
            }
            Node::Inner {
                op: Op::Union,
                left,
                right,
            } => self.union(left, right, k, l),
            Node::Inner {
                op: Op::Join,
                left,
                right,
            } => self.join(left, right, k, l),
        };
        let rc = Rc::new(table);
        self.memo.insert((p, k, l), rc.clone());
        rc
    }

    fn union(&mut self, a: usize, b: usize, k: usize, l: usize) -> Table {
        let mut out = Table::new();
        let (ra, rb) = (self.k_range(a), self.k_range(b));
        for ka in ra {
            for kb in rb.clone() {
                if ka.max(kb) != k {
                    continue;
                }
                // Classes are aligned from the largest; the child with fewer
                // colours lines up with the top of the other one.
                let (oa, ob) = (k - ka, k - kb);
                let (la, lb) = (l.saturating_sub(oa), l.saturating_sub(ob));
                let ta = self.table(a, ka, la);
                let tb = self.table(b, kb, lb);
                for (pa, ea) in sorted_entries(&ta) {
                    for (pb, eb) in sorted_entries(&tb) {
                        let key: Profile = (0..l)
                            .map(|j| {
                                let x = if j >= oa { pa[j - oa] } else { 0 };
                                let y = if j >= ob { pb[j - ob] } else { 0 };
                                x + y
                            })
                            .collect();
                        offer(&mut out, key, ea.cost + eb.cost, || Choice::Union {
                            left: (ka, la, pa.clone()),
                            right: (kb, lb, pb.clone()),
                        });
                    }
                }
            }
        }
        out
    }

    fn join(&mut self, a: usize, b: usize, k: usize, l: usize) -> Table {
        let mut out = Table::new();
        let (ra, rb) = (self.k_range(a), self.k_range(b));
        let mut merged = Vec::new();
        for ka in ra {
            for kb in rb.clone() {
                // λ colours appear on both sides.
                let Some(lambda) = (ka + kb).checked_sub(k) else {
                    continue;
                };
                if lambda > ka.min(kb) {
                    continue;
                }
                let (la, lb) = ((l + lambda).min(ka), (l + lambda).min(kb));
                let matchings = all_matchings(la, lb, lambda);
                let ta = self.table(a, ka, la);
                let tb = self.table(b, kb, lb);
                for (pa, ea) in sorted_entries(&ta) {
                    for (pb, eb) in sorted_entries(&tb) {
                        for mu in &matchings {
                            let val: usize = mu.iter().map(|&(i, j)| pa[i] * pb[j]).sum();
                            merge_into(mu, pa, pb, &mut merged);
                            let key: Profile = merged[..l].to_vec();
                            offer(&mut out, key, ea.cost + eb.cost + val as u64, || {
                                Choice::Join {
                                    left: (ka, la, pa.clone()),
                                    right: (kb, lb, pb.clone()),
                                    pairs: mu.clone(),
                                }
                            });
                        }
                    }
                }
            }
        }
        out
    }

    /// Colour classes of the stored optimum, sorted by size ascending.
    fn classes(&self, p: usize, k: usize, l: usize, key: &Profile) -> Vec<Vec<usize>> {
        let entry = &self.memo[&(p, k, l)][key];
        let out = match (&entry.choice, self.t.node(p)) {
            (Choice::Leaf, Node::Leaf(v)) => vec![vec![v]],
            (
                Choice::Union { left, right },
                Node::Inner {
                    left: a, right: b, ..
                },
            ) => {
                let ca = self.classes(a, left.0, left.1, &left.2);
                let cb = self.classes(b, right.0, right.1, &right.2);
                let (oa, ob) = (k - left.0, k - right.0);
                (0..k)
                    .map(|j| {
                        let mut c = Vec::new();
                        if j >= oa {
                            c.extend_from_slice(&ca[j - oa]);
                        }
                        if j >= ob {
                            c.extend_from_slice(&cb[j - ob]);
                        }
                        c
                    })
                    .collect()
            }
            (
                Choice::Join { left, right, pairs },
                Node::Inner {
                    left: a, right: b, ..
                },
            ) => {
                let mut ca: Vec<Option<Vec<usize>>> = self
                    .classes(a, left.0, left.1, &left.2)
                    .into_iter()
                    .map(Some)
                    .collect();
                let mut cb: Vec<Option<Vec<usize>>> = self
                    .classes(b, right.0, right.1, &right.2)
                    .into_iter()
                    .map(Some)
                    .collect();
                let mut out: Vec<Vec<usize>> = pairs
                    .iter()
                    .map(|&(i, j)| {
                        let mut c = ca[i].take().expect("matched once");
                        c.extend(cb[j].take().expect("matched once"));
                        c
                    })
                    .collect();
                out.extend(ca.into_iter().flatten());
                out.extend(cb.into_iter().flatten());
                out.sort_by_key(|c| c.len());
                out
            }
            _ => unreachable!("choice does not fit node kind"),
        };
        debug_assert_eq!(out.len(), k);
        debug_assert!(out.iter().take(l).map(|c| c.len()).eq(key.iter().copied()));
        out
    }
}

/// Minimum number of monochromatic edges over all (χ − d)-colourings of the
/// cograph denoted by `t`, with a colouring attaining it.
pub fn min_mono_edges_deficiency(t: &Cotree, d: usize) -> Result<(usize, Colouring)> {
    let stats = t.stats();
    let root = t.root();
    let chi = stats.chi[root];
    if d >= chi {
        return Err(Error::precondition(format!(
            "deficiency {d} must be below χ = {chi}"
        )));
    }
    let mut dp = Dp {
        t,
        stats,
        d,
        memo: HashMap::new(),
    };
    let k = chi - d;
    let table = dp.table(root, k, 0);
    let cost = table[&Vec::new()].cost as usize;
    let classes = dp.classes(root, k, 0, &Vec::new());
    let mut colours = vec![usize::MAX; t.vertex_count()];
    for (c, class) in classes.iter().enumerate() {
        for &v in class {
            colours[v] = c;
        }
    }
    Ok((cost, Colouring::new(colours, k)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cotree::build_cotree;
    use crate::graph::named::*;
    use crate::graph::Graph;
    use crate::mono::{count_monochromatic_edges, min_mono_edges_fixed_h};

    fn run(g: &Graph, d: usize) -> usize {
        let t = build_cotree(g).unwrap();
        let (m, c) = min_mono_edges_deficiency(&t, d).unwrap();
        assert_eq!(count_monochromatic_edges(g, &c).unwrap(), m);
        assert!(c.used() <= t.stats().chi[t.root()] - d);
        m
    }

    #[test]
    fn examples() {
        assert_eq!(run(&complete(4), 1), 1);
        assert_eq!(run(&complete(4), 2), 2);
        assert_eq!(run(&complete(4), 3), 6);
        assert_eq!(run(&cycle(4), 0), 0);
        assert_eq!(run(&cycle(4), 1), 4);
    }

    #[test]
    fn wheel_matches_fixed_palette() {
        let w = cycle(4).join(&empty(1));
        let t = build_cotree(&w).unwrap();
        let chi = t.stats().chi[t.root()];
        assert_eq!(chi, 3);
        let (fixed, _) = min_mono_edges_fixed_h(&t, chi - 1).unwrap();
        assert_eq!(run(&w, 1), fixed);
    }

    #[test]
    fn deficiency_out_of_range() {
        let t = build_cotree(&complete(3)).unwrap();
        assert!(min_mono_edges_deficiency(&t, 3).is_err());
    }
}
