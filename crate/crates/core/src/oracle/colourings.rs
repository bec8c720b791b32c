use super::SearchOptions;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::mono::Colouring;
use crate::reductions::MssInstance;

/// Calls `f` on every colouring of `0..n` with at most `h` colours, up to
/// renaming: colours appear in order of first use, so vertex 0 has colour 0.
pub fn for_each_colouring(n: usize, h: usize, mut f: impl FnMut(&[usize])) {
    if n == 0 {
        f(&[]);
        return;
    }
    if h == 0 {
        return;
    }
    let mut c = vec![0usize; n];
    rg(&mut c, 1, 1, h, &mut f);
}

fn rg(c: &mut [usize], pos: usize, used: usize, h: usize, f: &mut impl FnMut(&[usize])) {
    if pos == c.len() {
        f(c);
        return;
    }
    for col in 0..(used + 1).min(h) {
        c[pos] = col;
        rg(c, pos + 1, used.max(col + 1), h, f);
    }
}

fn check_budget(what: &'static str, h: usize, n: usize, opts: SearchOptions) -> Result<()> {
    let needed = (h.min(n).max(1) as u128).saturating_pow(n as u32);
    if needed > opts.budget as u128 {
        return Err(Error::CapacityExceeded {
            what,
            needed,
            limit: opts.budget as u128,
        });
    }
    Ok(())
}

/// Fewest monochromatic edges over all h-colourings, by exhaustive search
/// with branch and bound. The witness is the first optimum in
/// first-use order.
pub fn brute_min_mono(g: &Graph, h: usize, opts: SearchOptions) -> Result<(usize, Colouring)> {
    let n = g.n();
    if h == 0 {
        return Err(Error::precondition("palette size h must be at least 1"));
    }
    check_budget("brute-force colouring search", h, n, opts)?;
    let masks = g.masks().ok_or(Error::CapacityExceeded {
        what: "brute-force colouring search vertices",
        needed: n as u128,
        limit: 64,
    })?;
    let mut st = Mono {
        masks: &masks,
        h,
        class: vec![0u64; h],
        cur: vec![0; n],
        best: usize::MAX,
        best_c: vec![0; n],
    };
    st.go(0, 0, 0);
    Ok((st.best, Colouring::new(st.best_c, h)?))
}

struct Mono<'a> {
    masks: &'a [u64],
    h: usize,
    class: Vec<u64>,
    cur: Vec<usize>,
    best: usize,
    best_c: Vec<usize>,
}

impl Mono<'_> {
    fn go(&mut self, v: usize, used: usize, cost: usize) {
        if cost >= self.best {
            return;
        }
        if v == self.masks.len() {
            self.best = cost;
            self.best_c.clone_from(&self.cur);
            return;
        }
        for col in 0..(used + 1).min(self.h) {
            let extra = (self.masks[v] & self.class[col]).count_ones() as usize;
            self.cur[v] = col;
            self.class[col] |= 1 << v;
            self.go(v + 1, used.max(col + 1), cost + extra);
            self.class[col] &= !(1 << v);
        }
    }
}

/// Smallest sum of squared part sums over all ways to split `a` into `h`
/// (possibly empty) parts. Parts are returned as 0-based index lists.
pub fn brute_mss(mss: &MssInstance, opts: SearchOptions) -> Result<(u64, Vec<Vec<usize>>)> {
    let a = mss.a();
    let h = mss.h();
    check_budget("brute-force partition search", h, a.len(), opts)?;
    let mut best = (u64::MAX, Vec::new());
    for_each_colouring(a.len(), h, |c| {
        let mut sums = vec![0u64; h];
        for (j, &col) in c.iter().enumerate() {
            sums[col] += a[j];
        }
        let value = sums.iter().map(|s| s * s).sum::<u64>();
        if value < best.0 {
            best = (value, c.to_vec());
        }
    });
    let mut parts = vec![Vec::new(); h];
    for (j, &col) in best.1.iter().enumerate() {
        parts[col].push(j);
    }
    Ok((best.0, parts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::mono::count_monochromatic_edges;

    #[test]
    fn colouring_counts() {
        // Stirling numbers of the second kind, summed
        let mut count = 0;
        for_each_colouring(4, 2, |_| count += 1);
        assert_eq!(count, 8);
        count = 0;
        for_each_colouring(4, 4, |_| count += 1);
        assert_eq!(count, 15);
        count = 0;
        for_each_colouring(0, 3, |_| count += 1);
        assert_eq!(count, 1);
    }

    #[test]
    fn min_mono_examples() {
        let o = SearchOptions::default();
        let (m, c) = brute_min_mono(&complete(4), 2, o).unwrap();
        assert_eq!(m, 2);
        assert_eq!(count_monochromatic_edges(&complete(4), &c).unwrap(), 2);
        assert_eq!(brute_min_mono(&cycle(4), 2, o).unwrap().0, 0);
        assert_eq!(brute_min_mono(&complete(4), 1, o).unwrap().0, 6);
        assert_eq!(brute_min_mono(&empty(0), 2, o).unwrap().0, 0);
        assert!(
            brute_min_mono(&complete(12), 3, SearchOptions::with_budget(1000))
                .unwrap_err()
                .is_capacity()
        );
    }

    #[test]
    fn mss_examples() {
        let o = SearchOptions::default();
        let run = |a: Vec<u64>, h| brute_mss(&MssInstance::new(a, h, 0).unwrap(), o).unwrap().0;
        assert_eq!(run(vec![1, 1], 2), 2);
        assert_eq!(run(vec![1, 1], 1), 4);
        assert_eq!(run(vec![1, 2, 3], 2), 18);
        let (v, parts) = brute_mss(&MssInstance::new(vec![1, 2, 3], 2, 0).unwrap(), o).unwrap();
        assert_eq!(v, 18);
        assert_eq!(parts, vec![vec![0, 1], vec![2]]);
    }
}
