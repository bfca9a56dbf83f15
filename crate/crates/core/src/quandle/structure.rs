use crate::poly::InvariantPolynomial;

use super::QuandleTable;

impl QuandleTable {
    /// Orbits under right translations and their inverses: connected components
    /// of the graph with edges `{i, i ▷ j}`. Each orbit is sorted; orbits are
    /// ordered by least element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for i in 0..n {
            for j in 0..n {
                let (a, b) = (find(&mut parent, i), find(&mut parent, self.op(i, j)));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut groups: Vec<Vec<usize>> = vec![Vec::new(); n];
        for i in 0..n {
            let r = find(&mut parent, i);
            groups[r].push(i);
        }
        groups.into_iter().filter(|g| !g.is_empty()).collect()
    }

    /// Elements `x` with `x ▷ y = x` and `y ▷ x = y` for every `y`.
    pub fn maximal_trivial_component(&self) -> Vec<usize> {
        let n = self.order();
        (0..n)
            .filter(|&i| (0..n).all(|j| self.op(i, j) == i && self.op(j, i) == j))
            .collect()
    }

    /// True when the quandle is its maximal trivial component plus at most one
    /// further orbit.
    pub fn is_almost_connected(&self) -> bool {
        let trivial = self.maximal_trivial_component();
        let mut in_d = vec![false; self.order()];
        for &d in &trivial {
            in_d[d] = true;
        }
        let rest: Vec<usize> = (0..self.order()).filter(|&i| !in_d[i]).collect();
        if rest.is_empty() {
            return true;
        }
        self.orbits().contains(&rest)
    }

    pub fn is_connected(&self) -> bool {
        self.orbits().len() == 1
    }

    /// Disjoint union: `self` on `0..n`, `other` on `n..n+m`, and `x ▷ y = x`
    /// across the two blocks.
    pub fn disjoint_union(&self, other: &QuandleTable) -> QuandleTable {
        let (n, m) = (self.order(), other.order());
        QuandleTable::from_fn(n + m, |i, j| match (i < n, j < n) {
            (true, true) => self.op(i, j),
            (false, false) => other.op(i - n, j - n) + n,
            _ => i,
        })
    }

    /// `(c(i), r(i))` with `c(i) = |{j : j ▷ i = j}|` and `r(i) = |{j : i ▷ j = i}|`.
    pub fn fixed_counts(&self, i: usize) -> (usize, usize) {
        let n = self.order();
        let c = (0..n).filter(|&j| self.op(j, i) == j).count();
        let r = (0..n).filter(|&j| self.op(i, j) == i).count();
        (c, r)
    }

    /// `qp(s,t) = Σ_i s^{c(i)} t^{r(i)}`.
    pub fn quandle_polynomial(&self) -> InvariantPolynomial {
        let mut p = InvariantPolynomial::new(&["s", "t"]);
        for i in 0..self.order() {
            let (c, r) = self.fixed_counts(i);
            p.add_term(&[c as u32, r as u32], 1);
        }
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn five_element_table() -> QuandleTable {
        QuandleTable::from_rows(vec![
            vec![1, 1, 1, 2, 1],
            vec![2, 2, 2, 3, 2],
            vec![3, 3, 3, 1, 3],
            vec![4, 4, 4, 4, 4],
            vec![5, 5, 5, 5, 5],
        ])
        .unwrap()
    }

    #[test]
    fn five_element_example() {
        let t = five_element_table();
        assert!(t.is_quandle());
        assert_eq!(t.maximal_trivial_component(), vec![4]);
        assert_eq!(t.orbits(), vec![vec![0, 1, 2], vec![3], vec![4]]);
        assert!(!t.is_almost_connected());
    }

    #[test]
    fn trivial_quandles() {
        for n in 1..6 {
            let t = QuandleTable::trivial(n);
            assert_eq!(t.orbits().len(), n);
            assert_eq!(t.maximal_trivial_component(), (0..n).collect::<Vec<_>>());
            assert!(t.is_almost_connected());
            let mut qp = InvariantPolynomial::new(&["s", "t"]);
            qp.add_term(&[n as u32, n as u32], n as i64);
            assert_eq!(t.quandle_polynomial(), qp);
        }
    }

    #[test]
    fn cyclic_quandles() {
        let c3 = QuandleTable::cyclic(3);
        assert!(c3.is_connected());
        assert!(c3.is_almost_connected());
        assert_eq!(c3.quandle_polynomial().to_string(), "3st");
        // Z_4 splits into even and odd residues
        let c4 = QuandleTable::cyclic(4);
        assert_eq!(c4.orbits(), vec![vec![0, 2], vec![1, 3]]);
        assert!(!c4.is_almost_connected());
    }

    #[test]
    fn unions() {
        let t = QuandleTable::trivial(1).disjoint_union(&QuandleTable::trivial(1));
        assert_eq!(t, QuandleTable::trivial(2));
        let u = QuandleTable::cyclic(3).disjoint_union(&QuandleTable::alexander(5, 2));
        assert!(u.is_quandle());
        assert_eq!(u.order(), 8);
        for i in 0..8 {
            for j in 0..8 {
                if (i < 3) != (j < 3) {
                    assert_eq!(u.op(i, j), i);
                }
            }
        }
        assert_eq!(u.orbits().len(), 2);
        for (e, _) in u.quandle_polynomial().terms() {
            assert!(e.iter().all(|&x| x <= 8));
        }
    }
}
