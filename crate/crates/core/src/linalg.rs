//! Exact sparse Gaussian elimination over the rationals.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::kernel::{LinComb, Rational};

/// Incrementally built row-echelon basis of a subspace of `span(K)`.
///
/// Each stored row has coefficient one on its pivot, and the pivot is the
/// smallest key in the row.
#[derive(Clone)]
pub struct Echelon<K: Ord> {
    rows: BTreeMap<K, LinComb<K>>,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Echelon { rows: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_vectors<'a>(vectors: impl IntoIterator<Item = &'a LinComb<K>>) -> Self
    where
        K: 'a,
    {
        let mut e = Self::new();
        for v in vectors {
            e.insert(v);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Remainder of `v` after eliminating every pivot key.
    pub fn reduce(&self, v: &LinComb<K>) -> LinComb<K> {
        let mut v = v.clone();
        let mut cursor: Option<K> = None;
        loop {
            let next = v
                .keys()
                .filter(|k| cursor.as_ref().is_none_or(|c| *k > c))
                .find(|k| self.rows.contains_key(*k))
                .cloned();
            let Some(k) = next else { break };
            let c = v.coeff(&k);
            v.add_scaled(&self.rows[&k], &-c);
            cursor = Some(k);
        }
        v
    }

    pub fn contains(&self, v: &LinComb<K>) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the spanning set; returns whether the rank grew.
    pub fn insert(&mut self, v: &LinComb<K>) -> bool {
        let r = self.reduce(v);
        let Some((pivot, lead)) = r.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        self.rows.insert(pivot, r.scale(&lead.recip()));
        true
    }
}

pub fn rank<K: Ord + Clone>(vectors: &[LinComb<K>]) -> usize {
    Echelon::from_vectors(vectors).rank()
}

/// Basis of the kernel of the linear map sending the `i`-th standard basis
/// vector to `columns[i]`.
pub fn nullspace<K: Ord + Clone>(columns: &[LinComb<K>]) -> Vec<LinComb<usize>> {
    // rows keyed by pivot: (image, combination of source basis vectors)
    let mut rows: BTreeMap<K, (LinComb<K>, LinComb<usize>)> = BTreeMap::new();
    let mut kernel = Vec::new();
    for (i, col) in columns.iter().enumerate() {
        let mut image = col.clone();
        let mut combo = LinComb::basis(i);
        let mut cursor: Option<K> = None;
        loop {
            let next = image
                .keys()
                .filter(|k| cursor.as_ref().is_none_or(|c| *k > c))
                .find(|k| rows.contains_key(*k))
                .cloned();
            let Some(k) = next else { break };
            let c = -image.coeff(&k);
            let (ri, rc) = &rows[&k];
            image.add_scaled(ri, &c);
            combo.add_scaled(rc, &c);
            cursor = Some(k);
        }
        match image.iter().next().map(|(k, c)| (k.clone(), c.clone())) {
            None => kernel.push(combo),
            Some((pivot, lead)) => {
                let inv = lead.recip();
                rows.insert(pivot, (image.scale(&inv), combo.scale(&inv)));
            }
        }
    }
    kernel
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Column {
    Var(usize),
    Rhs,
}

/// Outcome of solving a linear system exactly.
#[derive(Clone, Debug, PartialEq)]
pub enum Solution {
    Unique(Vec<Rational>),
    /// Consistent with free variables; the particular solution sets them to zero.
    Underdetermined(Vec<Rational>),
    Inconsistent,
}

/// Solves `Σ_j a_ij x_j = b_i` for `x ∈ Q^unknowns`.
pub fn solve(equations: &[(LinComb<usize>, Rational)], unknowns: usize) -> Solution {
    let mut ech: Echelon<Column> = Echelon::new();
    for (lhs, rhs) in equations {
        let mut row: LinComb<Column> = lhs.map_keys(|&j| Column::Var(j));
        row.add_term(Column::Rhs, -rhs.clone());
        ech.insert(&row);
    }
    if ech.rows.contains_key(&Column::Rhs) {
        return Solution::Inconsistent;
    }
    // back substitution: clear every pivot column above its row
    let pivots: Vec<Column> = ech.rows.keys().rev().cloned().collect();
    for p in &pivots {
        let prow = ech.rows[p].clone();
        for (q, row) in ech.rows.iter_mut() {
            if q != p {
                let c = row.coeff(p);
                if !c.is_zero() {
                    row.add_scaled(&prow, &-c);
                }
            }
        }
    }
    let mut x = vec![Rational::zero(); unknowns];
    for (p, row) in &ech.rows {
        if let Column::Var(j) = p {
            x[*j] = -row.coeff(&Column::Rhs);
        }
    }
    if ech.rank() == unknowns {
        Solution::Unique(x)
    } else {
        Solution::Underdetermined(x)
    }
}

/// Exact determinant-free invertibility test for a square matrix given by columns.
pub fn is_invertible<K: Ord + Clone>(columns: &[LinComb<K>]) -> bool {
    rank(columns) == columns.len()
}

/// `v` expressed in the basis `basis`, if it lies in the span.
pub fn coordinates<K: Ord + Clone>(basis: &[LinComb<K>], v: &LinComb<K>) -> Option<Vec<Rational>> {
    // columns of the system are the basis vectors; rows are keys
    let mut eqs: BTreeMap<K, LinComb<usize>> = BTreeMap::new();
    for (j, b) in basis.iter().enumerate() {
        for (k, c) in b.iter() {
            eqs.entry(k.clone()).or_default().add_term(j, c.clone());
        }
    }
    let mut system: Vec<(LinComb<usize>, Rational)> = eqs
        .into_iter()
        .map(|(k, lhs)| {
            let rhs = v.coeff(&k);
            (lhs, rhs)
        })
        .collect();
    for (k, c) in v.iter() {
        if !basis.iter().any(|b| !b.coeff(k).is_zero()) {
            system.push((LinComb::zero(), c.clone()));
        }
    }
    match solve(&system, basis.len()) {
        Solution::Unique(x) | Solution::Underdetermined(x) => Some(x),
        Solution::Inconsistent => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{int, rat};

    fn v(entries: &[(usize, i64)]) -> LinComb<usize> {
        entries.iter().map(|&(k, c)| (k, int(c))).collect()
    }

    #[test]
    fn rank_of_dependent_set() {
        let a = v(&[(0, 1), (1, 2)]);
        let b = v(&[(1, 1), (2, 1)]);
        let c = &a + &b.scale(&int(3));
        assert_eq!(rank(&[a.clone(), b.clone(), c]), 2);
        assert_eq!(rank(&[a, b, v(&[(2, 5)])]), 3);
    }

    #[test]
    fn nullspace_of_projection() {
        // e0 -> e0, e1 -> 0, e2 -> e0
        let cols = vec![v(&[(0, 1)]), v(&[]), v(&[(0, 1)])];
        let ker = nullspace(&cols);
        assert_eq!(ker.len(), 2);
        for k in &ker {
            let image: LinComb<usize> = k.extend_linear(|&i| cols[i].clone());
            assert!(image.is_zero());
        }
    }

    #[test]
    fn solve_unique_and_inconsistent() {
        // x + y = 3, x - y = 1
        let eqs = vec![(v(&[(0, 1), (1, 1)]), int(3)), (v(&[(0, 1), (1, -1)]), int(1))];
        assert_eq!(solve(&eqs, 2), Solution::Unique(vec![int(2), int(1)]));
        let bad = vec![(v(&[(0, 1)]), int(1)), (v(&[(0, 2)]), int(3))];
        assert_eq!(solve(&bad, 1), Solution::Inconsistent);
        let under = vec![(v(&[(0, 2), (1, 2)]), int(1))];
        assert!(matches!(solve(&under, 2), Solution::Underdetermined(_)));
    }

    #[test]
    fn coordinates_in_basis() {
        let basis = vec![v(&[(0, 2)]), v(&[(0, 1), (1, 1)])];
        let target = v(&[(0, 3), (1, 1)]);
        assert_eq!(coordinates(&basis, &target), Some(vec![int(1), int(1)]));
        assert_eq!(coordinates(&basis, &v(&[(2, 1)])), None);
        let half = coordinates(&basis, &v(&[(0, 1)])).unwrap();
        assert_eq!(half, vec![rat(1, 2), int(0)]);
    }
}
