use std::collections::HashSet;

use crate::error::{Error, Result};

use super::QuandleTable;

/// Default limit on the number of subquandles [`QuandleTable::subquandles`] will produce.
pub const DEFAULT_SUBQUANDLE_CAP: usize = 100_000;

impl QuandleTable {
    /// True when `set` is nonempty and closed under `▷` and `▷⁻¹`.
    pub fn is_subquandle(&self, set: &[usize]) -> bool {
        if set.is_empty() || set.iter().any(|&x| x >= self.order()) {
            return false;
        }
        let dual = self.dual();
        let mut member = vec![false; self.order()];
        for &x in set {
            member[x] = true;
        }
        set.iter().all(|&a| {
            set.iter()
                .all(|&b| member[self.op(a, b)] && member[dual.op(a, b)])
        })
    }

    /// All subquandles, sorted by size then lexicographically.
    pub fn subquandles(&self) -> Result<Vec<Vec<usize>>> {
        self.subquandles_capped(DEFAULT_SUBQUANDLE_CAP)
    }

    /// Enumerates subquandles by saturating closures: start from the singletons
    /// and repeatedly close `S ∪ {x}` for every known `S` and `x ∉ S`.
    pub fn subquandles_capped(&self, cap: usize) -> Result<Vec<Vec<usize>>> {
        let n = self.order();
        let dual = self.dual();
        let mut seen: HashSet<Vec<u64>> = HashSet::new();
        let mut found: Vec<Vec<u64>> = Vec::new();
        let words = n.div_ceil(64);
        let push = |set: Vec<u64>,
                    seen: &mut HashSet<Vec<u64>>,
                    found: &mut Vec<Vec<u64>>|
         -> Result<()> {
            if seen.insert(set.clone()) {
                if found.len() >= cap {
                    return Err(Error::CapExceeded {
                        what: "subquandle count",
                        size: found.len() as u128 + 1,
                        cap: cap as u128,
                    });
                }
                found.push(set);
            }
            Ok(())
        };
        for x in 0..n {
            let mut s = vec![0u64; words];
            s[x / 64] |= 1 << (x % 64);
            push(s, &mut seen, &mut found)?;
        }
        let mut k = 0;
        while k < found.len() {
            let base = found[k].clone();
            for x in 0..n {
                if base[x / 64] >> (x % 64) & 1 == 1 {
                    continue;
                }
                let closed = close_with(self, &dual, &base, x);
                push(closed, &mut seen, &mut found)?;
            }
            k += 1;
        }
        let mut out: Vec<Vec<usize>> = found
            .iter()
            .map(|s| (0..n).filter(|&x| s[x / 64] >> (x % 64) & 1 == 1).collect())
            .collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(out)
    }

    /// The table of the subquandle `set`, with element `set[k]` renumbered `k`.
    pub fn restrict(&self, set: &[usize]) -> Result<QuandleTable> {
        if !self.is_subquandle(set) {
            return Err(Error::NotSubquandle);
        }
        let mut local = vec![usize::MAX; self.order()];
        for (k, &x) in set.iter().enumerate() {
            local[x] = k;
        }
        Ok(QuandleTable::from_fn(set.len(), |i, j| {
            local[self.op(set[i], set[j])]
        }))
    }
}

/// Closure of the closed set `base` together with `x`.
fn close_with(t: &QuandleTable, dual: &QuandleTable, base: &[u64], x: usize) -> Vec<u64> {
    let mut set = base.to_vec();
    let mut members: Vec<usize> = (0..t.order())
        .filter(|&y| base[y / 64] >> (y % 64) & 1 == 1)
        .collect();
    let mut queue = vec![x];
    set[x / 64] |= 1 << (x % 64);
    members.push(x);
    while let Some(a) = queue.pop() {
        let mut k = 0;
        while k < members.len() {
            let b = members[k];
            for c in [t.op(a, b), t.op(b, a), dual.op(a, b), dual.op(b, a)] {
                if set[c / 64] >> (c % 64) & 1 == 0 {
                    set[c / 64] |= 1 << (c % 64);
                    members.push(c);
                    queue.push(c);
                }
            }
            k += 1;
        }
    }
    set
}
