//! D-tableaux, P-tableaux and the popping classes of a 3-free poset.

use std::collections::{BTreeMap, HashMap};

use super::graph::bit;
use super::{Digraph, Poset};
use crate::combinatorics::IntegerPartition;
use crate::error::{Error, Result};

/// A filling of a Young diagram by vertices, row by row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    pub rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn shape(&self) -> IntegerPartition {
        IntegerPartition::from_parts(self.rows.iter().map(|r| r.len() as u32))
    }
}

/// All D-tableaux of the given shape: consecutive row entries form edges
/// `(v_{i,j}, v_{i,j+1})`, and `(v_{i+1,j}, v_{i,j})` is never an edge.
pub fn enumerate_d_tableaux(d: &Digraph, shape: &IntegerPartition) -> Result<Vec<Tableau>> {
    if shape.weight() != d.d() {
        return Err(Error::WeightMismatch(shape.to_string(), format!("{} vertices", d.d())));
    }
    let lens: Vec<usize> = shape.parts().iter().map(|&p| p as usize).collect();
    let mut rows: Vec<Vec<usize>> = lens.iter().map(|&l| Vec::with_capacity(l)).collect();
    let mut out = Vec::new();
    fill(d, &lens, 0, 0, 0, &mut rows, &mut out);
    Ok(out)
}

fn fill(
    d: &Digraph,
    lens: &[usize],
    i: usize,
    j: usize,
    used: u64,
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<Tableau>,
) {
    if i == lens.len() {
        out.push(Tableau { rows: rows.clone() });
        return;
    }
    let (ni, nj) = if j + 1 == lens[i] { (i + 1, 0) } else { (i, j + 1) };
    for v in 0..d.d() {
        if used & bit(v) != 0 {
            continue;
        }
        if j > 0 && !d.has_edge(rows[i][j - 1], v) {
            continue;
        }
        if i > 0 && d.has_edge(v, rows[i - 1][j]) {
            continue;
        }
        rows[i].push(v);
        fill(d, lens, ni, nj, used | bit(v), rows, out);
        rows[i].pop();
    }
}

/// P-tableaux are the D-tableaux of the digraph `D(P)`.
pub fn enumerate_p_tableaux(p: &Poset, shape: &IntegerPartition) -> Result<Vec<Tableau>> {
    enumerate_d_tableaux(&p.digraph(), shape)
}

/// Counts of D-tableaux by shape, over every shape of weight `d`.
pub fn d_tableau_counts(d: &Digraph) -> BTreeMap<IntegerPartition, u64> {
    crate::combinatorics::integer_partitions(d.d())
        .into_iter()
        .filter_map(|lam| {
            let n = enumerate_d_tableaux(d, &lam).expect("weights agree").len() as u64;
            (n > 0).then_some((lam, n))
        })
        .collect()
}

/// Two top-justified columns with the right no taller than the left.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PDiagram {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl PDiagram {
    pub fn from_tableau(t: &Tableau) -> Result<Self> {
        let mut left = Vec::new();
        let mut right = Vec::new();
        for row in &t.rows {
            match row.as_slice() {
                [a] => left.push(*a),
                [a, b] => {
                    left.push(*a);
                    right.push(*b);
                }
                _ => return Err(Error::Precondition("a P-diagram has at most two columns".into())),
            }
        }
        Ok(PDiagram { left, right })
    }

    pub fn to_tableau(&self) -> Tableau {
        let rows = self
            .left
            .iter()
            .enumerate()
            .map(|(k, &a)| match self.right.get(k) {
                Some(&b) => vec![a, b],
                None => vec![a],
            })
            .collect();
        Tableau { rows }
    }

    /// Moves the bottom of the right column to the bottom of the left one.
    pub fn pop(&self) -> Option<PDiagram> {
        let mut next = self.clone();
        let x = next.right.pop()?;
        next.left.push(x);
        Some(next)
    }

    pub fn is_p_tableau(&self, p: &Poset) -> bool {
        let rows_ok = self.right.iter().zip(&self.left).all(|(&b, &a)| p.lt(a, b));
        let col_ok = |c: &[usize]| c.windows(2).all(|w| !p.lt(w[1], w[0]));
        rows_ok && col_ok(&self.left) && col_ok(&self.right)
    }
}

/// A popping class: its tableaux and the conjugate `(|L|, |R|)` of the shape
/// of the member with the highest right-hand column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoppingClass {
    pub tableaux: Vec<Tableau>,
    pub lambda: IntegerPartition,
}

/// Partitions all P-tableaux of a 3-free poset into pop-equivalence classes.
pub fn popping_classes(p: &Poset) -> Result<Vec<PoppingClass>> {
    if !p.is_3_free() {
        return Err(Error::Precondition("popping needs a 3-free poset".into()));
    }
    let n = p.n();
    let mut all: Vec<PDiagram> = Vec::new();
    for lam in crate::combinatorics::integer_partitions(n) {
        if lam.parts().first().map_or(false, |&a| a > 2) {
            continue;
        }
        for t in enumerate_p_tableaux(p, &lam)? {
            all.push(PDiagram::from_tableau(&t)?);
        }
    }
    let index: HashMap<PDiagram, usize> = all.iter().cloned().enumerate().map(|(k, t)| (t, k)).collect();
    let mut parent: Vec<usize> = (0..all.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (k, t) in all.iter().enumerate() {
        let mut cur = t.clone();
        while let Some(next) = cur.pop() {
            if let Some(&m) = index.get(&next) {
                let (a, b) = (find(&mut parent, k), find(&mut parent, m));
                parent[a] = b;
            }
            cur = next;
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for k in 0..all.len() {
        let r = find(&mut parent, k);
        groups.entry(r).or_default().push(k);
    }
    let mut classes: Vec<PoppingClass> = groups
        .into_values()
        .map(|members| {
            let top = members.iter().max_by_key(|&&k| all[k].right.len()).copied().unwrap();
            let lambda = IntegerPartition::from_parts([all[top].left.len() as u32, all[top].right.len() as u32]);
            let mut tableaux: Vec<Tableau> = members.iter().map(|&k| all[k].to_tableau()).collect();
            tableaux.sort();
            PoppingClass { tableaux, lambda }
        })
        .collect();
    classes.sort_by(|a, b| a.tableaux.cmp(&b.tableaux));
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{factorial, integer_partitions, kostka};
    use crate::structures::poset::natural_3_free_posets;
    use num::ToPrimitive;

    fn ip(parts: &[u32]) -> IntegerPartition {
        IntegerPartition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn d_tableau_examples() {
        for d in 1..=4 {
            let col = IntegerPartition::from_parts(vec![1; d]);
            let n = enumerate_d_tableaux(&Digraph::empty(d), &col).unwrap().len() as u64;
            assert_eq!(n, factorial(d).to_u64().unwrap());
            let row = enumerate_d_tableaux(&Digraph::path(d), &ip(&[d as u32])).unwrap();
            assert_eq!(row, vec![Tableau { rows: vec![(0..d).collect()] }]);
        }
        assert!(enumerate_d_tableaux(&Digraph::empty(2), &ip(&[3])).is_err());
    }

    #[test]
    fn p_tableau_examples() {
        assert_eq!(enumerate_p_tableaux(&Poset::antichain(3), &ip(&[1, 1, 1])).unwrap().len(), 6);
        assert_eq!(enumerate_p_tableaux(&Poset::chain(3), &ip(&[3])).unwrap().len(), 1);
        assert_eq!(enumerate_p_tableaux(&Poset::antichain(2), &ip(&[1, 1])).unwrap().len(), 2);
    }

    #[test]
    fn popping_requires_3_free() {
        assert!(popping_classes(&Poset::chain(3)).is_err());
    }

    #[test]
    fn popping_classes_have_kostka_counts() {
        for n in 1..=5 {
            for p in natural_3_free_posets(n) {
                for class in popping_classes(&p).unwrap() {
                    let top = class.tableaux.iter().map(|t| PDiagram::from_tableau(t).unwrap());
                    for d in top {
                        assert!(d.is_p_tableau(&p));
                    }
                    for mu in integer_partitions(n) {
                        let count = class.tableaux.iter().filter(|t| t.shape() == mu).count() as u64;
                        let k = kostka(&mu.conjugate(), &class.lambda).unwrap();
                        assert_eq!(count, k.to_u64().unwrap(), "{p:?} {mu}");
                    }
                }
            }
        }
    }
}
