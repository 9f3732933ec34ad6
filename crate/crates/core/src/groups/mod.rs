//! Finite matrix groups acting on torus variables.
//!
//! A group element is a rational substitution matrix: row i is the image of
//! the variable x_i as a linear form (see
//! [`Polynomial::substitute_linear`](crate::algebra::Polynomial::substitute_linear)).

mod dihedral;
mod weyl;

use std::collections::{HashMap, HashSet};

pub use dihedral::{dihedral_parameters, DihedralData};
pub use weyl::{weyl_standard, WeylType};

use crate::algebra::Matrix;
use crate::error::GroupError;

pub const DEFAULT_CAP: usize = 20_000;

/// A fully enumerated finite group of invertible rational matrices.
#[derive(Clone, Debug)]
pub struct MatrixGroup {
    rank: usize,
    generators: Vec<Matrix>,
    /// Identity first, then breadth-first discovery order.
    elements: Vec<Matrix>,
    index: HashMap<Matrix, usize>,
}

impl PartialEq for MatrixGroup {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank
            && self.elements.len() == other.elements.len()
            && self.elements.iter().all(|g| other.contains(g))
    }
}

impl MatrixGroup {
    pub fn trivial(rank: usize) -> Self {
        close_group(rank, &[], DEFAULT_CAP).expect("trivial group")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    pub fn contains(&self, g: &Matrix) -> bool {
        self.index.contains_key(g)
    }

    pub fn is_subgroup_of(&self, other: &MatrixGroup) -> bool {
        self.rank == other.rank && self.elements.iter().all(|g| other.contains(g))
    }

    /// Conjugate every element: `m⁻¹ g m`. Used to move a Weyl group acting on
    /// one torus onto another through an invertible embedding.
    pub fn conjugate_by(&self, m: &Matrix) -> Result<MatrixGroup, GroupError> {
        let inv = m.inverse().ok_or(GroupError::Singular { index: 0 })?;
        let gens: Vec<Matrix> = self
            .generators
            .iter()
            .map(|g| inv.mul(g).and_then(|x| x.mul(m)).expect("square"))
            .collect();
        close_group(self.rank, &gens, self.order().max(1))
    }
}

/// Enumerate the group generated by `generators` (rank x rank invertible
/// rational matrices).
pub fn close_group(rank: usize, generators: &[Matrix], cap: usize) -> Result<MatrixGroup, GroupError> {
    for (i, g) in generators.iter().enumerate() {
        if g.nrows() != rank || g.ncols() != rank {
            return Err(GroupError::BadGenerator { index: i, rank });
        }
        if !g.is_invertible() {
            return Err(GroupError::Singular { index: i });
        }
    }
    let id = Matrix::identity(rank);
    let mut elements = vec![id.clone()];
    let mut index = HashMap::from([(id, 0usize)]);
    let mut frontier = 0;
    while frontier < elements.len() {
        let g = elements[frontier].clone();
        frontier += 1;
        for s in generators {
            let h = g.mul(s).expect("square");
            if !index.contains_key(&h) {
                if elements.len() >= cap {
                    return Err(GroupError::CapExceeded { cap });
                }
                index.insert(h.clone(), elements.len());
                elements.push(h);
            }
        }
    }
    Ok(MatrixGroup {
        rank,
        generators: generators.to_vec(),
        elements,
        index,
    })
}

/// Multiplicative order of a group element (bounded by `cap`).
pub fn element_order(g: &Matrix, cap: usize) -> Option<usize> {
    let id = Matrix::identity(g.nrows());
    let mut acc = g.clone();
    for k in 1..=cap {
        if acc == id {
            return Some(k);
        }
        acc = acc.mul(g).ok()?;
    }
    None
}

/// Check `[wk : wh] = 2` with `wh` normal in `wk`, and return a coset
/// representative of the nontrivial coset (the first such element of `wk`).
pub fn index_two_check(wh: &MatrixGroup, wk: &MatrixGroup) -> Result<Matrix, GroupError> {
    if wh.rank != wk.rank {
        return Err(GroupError::RankMismatch(wh.rank, wk.rank));
    }
    if let Some(g) = wh.elements.iter().find(|g| !wk.contains(g)) {
        return Err(GroupError::NotSubgroup(g.to_string()));
    }
    if wk.order() != 2 * wh.order() {
        let index = if wk.order().is_multiple_of(wh.order()) {
            (wk.order() / wh.order()).to_string()
        } else {
            format!("{}/{}", wk.order(), wh.order())
        };
        return Err(GroupError::IndexNotTwo { index });
    }
    let w = wk
        .elements
        .iter()
        .find(|g| !wh.contains(g))
        .expect("index two")
        .clone();
    for g in &wk.elements {
        let gi = g.inverse().expect("invertible");
        for h in &wh.elements {
            let c = g.mul(h).and_then(|x| x.mul(&gi)).expect("square");
            if !wh.contains(&c) {
                return Err(GroupError::NotNormal);
            }
        }
    }
    Ok(w)
}

/// Whether `m W m⁻¹ = W` as sets.
pub fn aut_normalizes(m: &Matrix, w: &MatrixGroup) -> bool {
    if m.nrows() != w.rank || !m.is_square() {
        return false;
    }
    let Some(mi) = m.inverse() else {
        return false;
    };
    let conj: HashSet<Matrix> = w
        .elements
        .iter()
        .map(|g| m.mul(g).and_then(|x| x.mul(&mi)).expect("square"))
        .collect();
    conj.len() == w.order() && conj.iter().all(|g| w.contains(g))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minus_one_rank_one() {
        let g = close_group(1, &[Matrix::from_ints(&[&[-1]])], DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.elements()[0], Matrix::identity(1));
    }

    #[test]
    fn reflections_of_a2() {
        // transpositions (1 2) and (2 3) on the sum-zero plane
        let s1 = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
        let s2 = Matrix::from_ints(&[&[1, 0], &[-1, -1]]);
        let g = close_group(2, &[s1, s2], DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 6);
    }

    #[test]
    fn signed_permutations_b2() {
        let swap = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
        let flip = Matrix::diagonal(&[1, -1]);
        assert_eq!(close_group(2, &[swap, flip], DEFAULT_CAP).unwrap().order(), 8);
    }

    #[test]
    fn infinite_group_hits_cap() {
        let shear = Matrix::from_ints(&[&[1, 1], &[0, 1]]);
        assert_eq!(close_group(2, &[shear], 100).unwrap_err(), GroupError::CapExceeded { cap: 100 });
    }

    #[test]
    fn bad_generators() {
        assert!(matches!(
            close_group(2, &[Matrix::from_ints(&[&[1, 0]])], 10),
            Err(GroupError::BadGenerator { .. })
        ));
        assert!(matches!(
            close_group(2, &[Matrix::from_ints(&[&[1, 1], &[1, 1]])], 10),
            Err(GroupError::Singular { .. })
        ));
    }

    #[test]
    fn index_two_examples() {
        let pm = close_group(1, &[Matrix::from_ints(&[&[-1]])], 10).unwrap();
        assert_eq!(index_two_check(&MatrixGroup::trivial(1), &pm).unwrap(), Matrix::from_ints(&[&[-1]]));

        let swap = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
        let s2 = close_group(2, std::slice::from_ref(&swap), 10).unwrap();
        assert_eq!(index_two_check(&MatrixGroup::trivial(2), &s2).unwrap(), swap);

        assert!(matches!(index_two_check(&pm, &pm), Err(GroupError::IndexNotTwo { .. })));
        let other = close_group(2, &[Matrix::diagonal(&[-1, 1])], 10).unwrap();
        assert!(matches!(index_two_check(&other, &s2), Err(GroupError::NotSubgroup(_))));
    }

    #[test]
    fn normalizing_automorphisms() {
        let pm = close_group(1, &[Matrix::from_ints(&[&[-1]])], 10).unwrap();
        assert!(aut_normalizes(&Matrix::identity(1), &pm));
        assert!(aut_normalizes(&Matrix::from_ints(&[&[-1]]), &pm));
        let w = close_group(2, &[Matrix::diagonal(&[-1, 1])], 10).unwrap();
        assert!(!aut_normalizes(&Matrix::from_ints(&[&[0, 1], &[1, 0]]), &w));
        assert!(aut_normalizes(&Matrix::identity(2), &w));
    }

    #[test]
    fn element_orders_divide_group_order() {
        let g = weyl_standard(WeylType::B, 3).unwrap();
        for e in g.elements() {
            let k = element_order(e, g.order()).unwrap();
            assert_eq!(g.order() % k, 0);
        }
    }
}
