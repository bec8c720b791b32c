//! Fixed palette size h: one table per cotree node, keyed by the vector of
//! class sizes per colour (entries sum to the node's vertex count).

use std::collections::HashMap;

use super::Colouring;
use crate::cotree::{Cotree, Node, Op};
use crate::error::{Error, Result};

/// Table entries a single node may hold before we refuse to run.
const MAX_CELLS: u128 = 4_000_000;

type Tuple = Vec<u16>;

struct Cell {
    cost: u64,
    /// Child tuples realising the cost (absent at leaves).
    from: Option<(Tuple, Tuple)>,
}

fn compositions(total: usize, parts: usize) -> u128 {
    // C(total + parts - 1, parts - 1)
    let (n, k) = ((total + parts - 1) as u128, (parts - 1) as u128);
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// Minimum number of monochromatic edges over all h-colourings of the cograph
/// denoted by `t`, with a colouring attaining it.
pub fn min_mono_edges_fixed_h(t: &Cotree, h: usize) -> Result<(usize, Colouring)> {
    if h == 0 {
        return Err(Error::precondition("palette size h must be at least 1"));
    }
    let n = t.vertex_count();
    let cells = compositions(n, h);
    if cells > MAX_CELLS {
        return Err(Error::CapacityExceeded {
            what: "fixed-h table",
            needed: cells,
            limit: MAX_CELLS,
        });
    }
    let mut tables: Vec<HashMap<Tuple, Cell>> = Vec::with_capacity(t.nodes().len());
    for nd in t.nodes() {
        let table = match *nd {
            Node::Leaf(_) => (0..h)
                .map(|c| {
                    let mut a = vec![0u16; h];
                    a[c] = 1;
                    (
                        a,
                        Cell {
                            cost: 0,
                            from: None,
                        },
                    )
                })
                .collect(),
            Node::Inner { op, left, right } => combine(&tables[left], &tables[right], op),
        };
        tables.push(table);
    }
    let root = tables.last().expect("non-empty cotree");
    let (best, cell) = root
        .iter()
        .min_by(|a, b| a.1.cost.cmp(&b.1.cost).then_with(|| a.0.cmp(b.0)))
        .expect("root table is non-empty");
    let mut colours = vec![usize::MAX; n];
    assign(t, &tables, t.root(), best, &mut colours);
    let cost = cell.cost as usize;
    Ok((cost, Colouring::new(colours, h)?))
}

fn combine(q: &HashMap<Tuple, Cell>, r: &HashMap<Tuple, Cell>, op: Op) -> HashMap<Tuple, Cell> {
    let mut out: HashMap<Tuple, Cell> = HashMap::new();
    // Deterministic argmins regardless of hash iteration order.
    let mut qs: Vec<(&Tuple, &Cell)> = q.iter().collect();
    let mut rs: Vec<(&Tuple, &Cell)> = r.iter().collect();
    qs.sort_unstable_by(|a, b| a.0.cmp(b.0));
    rs.sort_unstable_by(|a, b| a.0.cmp(b.0));
    for &(aq, cq) in &qs {
        for &(ar, cr) in &rs {
            let cross: u64 = match op {
                Op::Union => 0,
                Op::Join => aq.iter().zip(ar).map(|(&x, &y)| x as u64 * y as u64).sum(),
            };
            let cost = cq.cost + cr.cost + cross;
            let ap: Tuple = aq.iter().zip(ar).map(|(&x, &y)| x + y).collect();
            match out.get(&ap) {
                Some(c) if c.cost <= cost => {}
                _ => {
                    out.insert(
                        ap,
                        Cell {
                            cost,
                            from: Some((aq.clone(), ar.clone())),
                        },
                    );
                }
            }
        }
    }
    out
}

fn assign(t: &Cotree, tables: &[HashMap<Tuple, Cell>], p: usize, a: &Tuple, colours: &mut [usize]) {
    match t.node(p) {
        Node::Leaf(v) => {
            colours[v] = a
                .iter()
                .position(|&x| x == 1)
                .expect("leaf tuple is a unit vector");
        }
        Node::Inner { left, right, .. } => {
            let (aq, ar) = tables[p][a]
                .from
                .as_ref()
                .expect("inner cell records its children");
            assign(t, tables, left, aq, colours);
            assign(t, tables, right, ar, colours);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cotree::build_cotree;
    use crate::graph::named::*;
    use crate::mono::count_monochromatic_edges;

    fn run(g: &crate::graph::Graph, h: usize) -> usize {
        let t = build_cotree(g).unwrap();
        let (m, c) = min_mono_edges_fixed_h(&t, h).unwrap();
        assert_eq!(count_monochromatic_edges(g, &c).unwrap(), m);
        assert!(c.used() <= h);
        m
    }

    #[test]
    fn examples() {
        assert_eq!(run(&complete(4), 2), 2);
        assert_eq!(run(&cycle(4), 1), 4);
        assert_eq!(run(&cycle(4), 2), 0);
        assert_eq!(run(&complete(4), 4), 0);
        assert_eq!(run(&complete(4), 6), 0);
        assert_eq!(run(&complete(5), 2), 4);
        assert_eq!(run(&empty(1), 3), 0);
    }

    #[test]
    fn h_zero_is_rejected() {
        let t = build_cotree(&complete(2)).unwrap();
        assert!(min_mono_edges_fixed_h(&t, 0).is_err());
    }
}
