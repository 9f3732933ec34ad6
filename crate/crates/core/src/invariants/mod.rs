//! Invariant theory of a finite matrix group acting on the polynomial ring
//! of the torus: Reynolds averaging, Molien series, degreewise bases and
//! minimal generators.

mod molien;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

pub use molien::molien;

use crate::algebra::linalg::{self, Echelon};
use crate::algebra::{homogeneous_monomials, rat, Exponents, GradedPolynomial, Matrix, Rational};
use crate::error::AlgebraError;
use crate::groups::{DihedralData, MatrixGroup};

/// Images of monomials under one substitution matrix, with cached powers of
/// the variable images.
struct MonomialImager<'a> {
    matrix: &'a Matrix,
    powers: Vec<Vec<GradedPolynomial>>,
}

impl<'a> MonomialImager<'a> {
    fn new(matrix: &'a Matrix) -> Self {
        let r = matrix.nrows();
        let one = GradedPolynomial::constant(matrix.ncols(), rat(1));
        MonomialImager {
            matrix,
            powers: vec![vec![one]; r],
        }
    }

    fn image(&mut self, e: &[u32]) -> GradedPolynomial {
        let r = self.matrix.ncols();
        let mut out = GradedPolynomial::constant(r, rat(1));
        for (i, &k) in e.iter().enumerate() {
            while self.powers[i].len() <= k as usize {
                let form = GradedPolynomial::from_terms(
                    r,
                    (0..r).map(|j| {
                        let mut ex = vec![0; r];
                        ex[j] = 1;
                        (ex, self.matrix.get(i, j).clone())
                    }),
                );
                let next = self.powers[i].last().unwrap().mul(&form);
                self.powers[i].push(next);
            }
            if k > 0 {
                out = out.mul(&self.powers[i][k as usize]);
            }
        }
        out
    }
}

/// Action of a group element on a polynomial by linear substitution.
pub fn act(g: &Matrix, p: &GradedPolynomial) -> GradedPolynomial {
    p.substitute_linear(g, g.ncols()).expect("group element matches polynomial rank")
}

/// Pull back a polynomial on the larger torus along an embedding.
///
/// `embedding` has one row per coordinate of the smaller torus, giving its
/// image in the larger torus's coordinates (shape r_small x r_large).
pub fn restrict(embedding: &Matrix, p: &GradedPolynomial) -> Result<GradedPolynomial, AlgebraError> {
    if p.nvars() != embedding.ncols() {
        return Err(AlgebraError::ShapeMismatch {
            expected: format!("polynomial in {} variables", embedding.ncols()),
            found: format!("{} variables", p.nvars()),
        });
    }
    p.substitute_linear(&embedding.transpose(), embedding.nrows())
}

/// The invariant subring of a finite group, with per-degree basis caching.
#[derive(Debug)]
pub struct InvariantRing {
    group: MatrixGroup,
    cache: Mutex<HashMap<usize, Arc<Vec<GradedPolynomial>>>>,
}

impl Clone for InvariantRing {
    fn clone(&self) -> Self {
        InvariantRing {
            group: self.group.clone(),
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

impl InvariantRing {
    pub fn new(group: MatrixGroup) -> Self {
        InvariantRing {
            group,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn group(&self) -> &MatrixGroup {
        &self.group
    }

    pub fn nvars(&self) -> usize {
        self.group.rank()
    }

    /// Average of `p` over the group.
    pub fn reynolds(&self, p: &GradedPolynomial) -> GradedPolynomial {
        let mut sum = GradedPolynomial::zero(self.nvars());
        for g in self.group.elements() {
            sum = sum.add(&act(g, p));
        }
        sum.scale(&Rational::new(1.into(), (self.group.order() as i64).into()))
    }

    pub fn is_invariant(&self, p: &GradedPolynomial) -> bool {
        self.group.generators().iter().all(|g| act(g, p) == *p)
    }

    /// Basis of the degree-`d` invariants, in reduced echelon form with
    /// respect to descending lex order on monomials (each element has
    /// lex-leading coefficient 1).
    pub fn invariant_basis(&self, d: usize) -> Arc<Vec<GradedPolynomial>> {
        if let Some(b) = self.cache.lock().unwrap().get(&d) {
            return b.clone();
        }
        let basis = Arc::new(self.compute_basis(d));
        self.cache.lock().unwrap().entry(d).or_insert(basis).clone()
    }

    pub fn dim(&self, d: usize) -> usize {
        self.invariant_basis(d).len()
    }

    fn compute_basis(&self, d: usize) -> Vec<GradedPolynomial> {
        let r = self.nvars();
        let monos = homogeneous_monomials(r, d);
        if monos.is_empty() {
            return Vec::new();
        }
        let mut sums = vec![GradedPolynomial::zero(r); monos.len()];
        for g in self.group.elements() {
            let mut imager = MonomialImager::new(g);
            for (m, sum) in monos.iter().zip(sums.iter_mut()) {
                *sum = sum.add(&imager.image(m));
            }
        }
        let zero = rat(0);
        let rows: Vec<Vec<Rational>> = sums.iter().map(|p| p.to_vector(&monos, &zero)).collect();
        linalg::rref(&rows, monos.len())
            .rows
            .iter()
            .map(|v| GradedPolynomial::from_vector(r, &monos, v))
            .collect()
    }

    /// Greedy degreewise minimal generating set up to degree `n`: in each
    /// degree, reduced-echelon representatives of the invariants modulo
    /// products of lower-degree generators.
    pub fn minimal_generators(&self, n: usize) -> Vec<(usize, GradedPolynomial)> {
        let r = self.nvars();
        let zero = rat(0);
        let mut gens: Vec<(usize, GradedPolynomial)> = Vec::new();
        for d in (2..=n).step_by(2) {
            let monos = homogeneous_monomials(r, d);
            let mut decomposable = Echelon::empty(monos.len());
            for (e, g) in &gens {
                for b in self.invariant_basis(d - e).iter() {
                    decomposable.insert(&g.mul(b).to_vector(&monos, &zero));
                }
            }
            let remainders: Vec<Vec<Rational>> = self
                .invariant_basis(d)
                .iter()
                .map(|b| decomposable.reduce(&b.to_vector(&monos, &zero)))
                .collect();
            for row in linalg::rref(&remainders, monos.len()).rows {
                gens.push((d, GradedPolynomial::from_vector(r, &monos, &row)));
            }
        }
        gens
    }
}

/// The invariant ring of Ξ (which contains W(H)), as a subring of the
/// invariants of H.
pub fn xi_ring(dd: &DihedralData) -> InvariantRing {
    InvariantRing::new(dd.xi.clone())
}

/// Degree-`d` basis of the Ξ-invariants inside the invariants of H.
pub fn xi_invariants(dd: &DihedralData, ring_h: &InvariantRing, d: usize) -> Result<Vec<GradedPolynomial>, AlgebraError> {
    if dd.xi.rank() != ring_h.nvars() {
        return Err(AlgebraError::ShapeMismatch {
            expected: format!("rank {}", ring_h.nvars()),
            found: format!("rank {}", dd.xi.rank()),
        });
    }
    Ok(xi_ring(dd).invariant_basis(d).to_vec())
}

/// Exponent vectors of the monomial basis in degree `d`.
pub fn monomial_basis(nvars: usize, d: usize) -> Vec<Exponents> {
    homogeneous_monomials(nvars, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{close_group, weyl_standard, WeylType, DEFAULT_CAP};

    fn x(n: usize, i: usize) -> GradedPolynomial {
        GradedPolynomial::var(n, i, rat(1))
    }

    fn pm1() -> InvariantRing {
        InvariantRing::new(weyl_standard(WeylType::A, 2).unwrap())
    }

    #[test]
    fn sign_group_basis() {
        let ring = pm1();
        assert_eq!(*ring.invariant_basis(4), vec![x(1, 0).pow(2)]);
        assert!(ring.invariant_basis(2).is_empty());
        assert!(ring.invariant_basis(3).is_empty());
    }

    #[test]
    fn trivial_group_rank_two() {
        let ring = InvariantRing::new(MatrixGroup::trivial(2));
        assert_eq!(*ring.invariant_basis(2), vec![x(2, 0), x(2, 1)]);
    }

    #[test]
    fn a2_low_degrees() {
        let ring = InvariantRing::new(weyl_standard(WeylType::A, 3).unwrap());
        assert_eq!(ring.dim(2), 0);
        assert_eq!(ring.dim(4), 1);
        assert_eq!(ring.dim(6), 1);
        for p in ring.invariant_basis(12).iter() {
            assert!(ring.is_invariant(p));
        }
    }

    #[test]
    fn generators_of_small_groups() {
        let gens = pm1().minimal_generators(8);
        assert_eq!(gens, vec![(4, x(1, 0).pow(2))]);

        let signs = close_group(2, &[Matrix::diagonal(&[-1, 1]), Matrix::diagonal(&[1, -1])], DEFAULT_CAP).unwrap();
        let gens = InvariantRing::new(signs).minimal_generators(8);
        assert_eq!(gens, vec![(4, x(2, 0).pow(2)), (4, x(2, 1).pow(2))]);

        let gens = InvariantRing::new(MatrixGroup::trivial(1)).minimal_generators(8);
        assert_eq!(gens, vec![(2, x(1, 0))]);

        let a2 = InvariantRing::new(weyl_standard(WeylType::A, 3).unwrap());
        let degrees: Vec<usize> = a2.minimal_generators(20).iter().map(|(d, _)| *d).collect();
        assert_eq!(degrees, vec![4, 6]);
    }

    #[test]
    fn restriction_examples() {
        // U(2) ⊃ 1 × U(1): x ↦ (0, x)
        let emb = Matrix::from_ints(&[&[0, 1]]);
        let c1 = x(2, 0).add(&x(2, 1));
        let c2 = x(2, 0).mul(&x(2, 1));
        assert_eq!(restrict(&emb, &c1).unwrap(), x(1, 0));
        assert!(restrict(&emb, &c2).unwrap().is_zero());
        assert_eq!(restrict(&Matrix::identity(2), &c2).unwrap(), c2);
        let to_point = Matrix::from_vec(0, 1, vec![]);
        assert!(restrict(&to_point, &x(1, 0).pow(2)).unwrap().is_zero());
        assert!(restrict(&emb, &x(1, 0)).is_err());
    }

    #[test]
    fn reynolds_projects() {
        let ring = pm1();
        let p = x(1, 0).pow(2).add(&x(1, 0));
        assert_eq!(ring.reynolds(&p), x(1, 0).pow(2));
    }
}
