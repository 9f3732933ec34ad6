use crate::algebra::linalg;
use crate::algebra::{homogeneous_monomials, rat, GradedPolynomial, Matrix, Rational};
use crate::error::CohomologyError;
use crate::invariants::{restrict, InvariantRing};

/// Generator of ker(H*_K → H*_H) when K/H is an odd homology sphere.
#[derive(Clone, Debug, PartialEq)]
pub struct EulerClass {
    pub degree: usize,
    /// Polynomial on K's torus with lex-leading coefficient 1.
    pub e: GradedPolynomial,
}

/// Basis of the kernel of restriction on the degree-`d` invariants of K.
fn kernel(k: &InvariantRing, h_rank: usize, embedding: &Matrix, d: usize) -> Vec<GradedPolynomial> {
    let monos = homogeneous_monomials(h_rank, d);
    let zero = rat(0);
    let basis = k.invariant_basis(d);
    let vectors: Vec<Vec<Rational>> = basis
        .iter()
        .map(|p| restrict(embedding, p).expect("shape checked").to_vector(&monos, &zero))
        .collect();
    linalg::left_kernel(&vectors, monos.len(), &zero)
        .iter()
        .map(|c| {
            basis
                .iter()
                .zip(c)
                .fold(GradedPolynomial::zero(k.nvars()), |acc, (p, ci)| acc.add(&p.scale(ci)))
        })
        .collect()
}

/// The Euler class of an odd leg: the lowest-degree kernel element of
/// restriction, which must sit in degree n+1 and span a line there. Checked
/// degreewise to `max_degree`: dim ker_d = dim (H*_K)_{d-n-1}.
pub fn euler_generator(
    k: &InvariantRing,
    h_rank: usize,
    embedding: &Matrix,
    n: usize,
    max_degree: usize,
) -> Result<EulerClass, CohomologyError> {
    if n.is_multiple_of(2) {
        return Err(CohomologyError::InvalidSpec(format!(
            "Euler class needs an odd sphere, got dimension {n}"
        )));
    }
    if embedding.nrows() != h_rank || embedding.ncols() != k.nvars() {
        return Err(CohomologyError::InvalidSpec(format!(
            "embedding is {}x{}, expected {}x{}",
            embedding.nrows(),
            embedding.ncols(),
            h_rank,
            k.nvars()
        )));
    }
    let deg = n + 1;
    let mut found: Option<EulerClass> = None;
    for d in (2..=max_degree.max(deg)).step_by(2) {
        let ker = kernel(k, h_rank, embedding, d);
        let expected = if d >= deg { k.dim(d - deg) } else { 0 };
        if ker.len() != expected {
            return Err(CohomologyError::NotPrincipal(format!(
                "kernel has dimension {} in degree {d}, expected {expected} for a generator of degree {deg}",
                ker.len()
            )));
        }
        if d == deg {
            found = Some(EulerClass {
                degree: deg,
                e: ker[0].monic(),
            });
        }
    }
    found.ok_or_else(|| CohomologyError::NotPrincipal(format!("no kernel in degree {deg}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{weyl_standard, MatrixGroup, WeylType};

    fn x(n: usize, i: usize) -> GradedPolynomial {
        GradedPolynomial::var(n, i, rat(1))
    }

    #[test]
    fn su2_over_point() {
        let k = InvariantRing::new(weyl_standard(WeylType::A, 2).unwrap());
        let e = euler_generator(&k, 0, &Matrix::zeros(0, 1), 3, 40).unwrap();
        assert_eq!(e, EulerClass { degree: 4, e: x(1, 0).pow(2) });
    }

    #[test]
    fn circle_over_point() {
        let k = InvariantRing::new(MatrixGroup::trivial(1));
        let e = euler_generator(&k, 0, &Matrix::zeros(0, 1), 1, 20).unwrap();
        assert_eq!(e, EulerClass { degree: 2, e: x(1, 0) });
    }

    #[test]
    fn u2_over_u1() {
        let k = InvariantRing::new(weyl_standard(WeylType::U, 2).unwrap());
        let emb = Matrix::from_ints(&[&[0, 1]]);
        let e = euler_generator(&k, 1, &emb, 3, 40).unwrap();
        assert_eq!(e, EulerClass { degree: 4, e: x(2, 0).mul(&x(2, 1)) });
    }

    #[test]
    fn wrong_dimension_is_not_principal() {
        let k = InvariantRing::new(weyl_standard(WeylType::A, 2).unwrap());
        assert!(matches!(
            euler_generator(&k, 0, &Matrix::zeros(0, 1), 1, 20),
            Err(CohomologyError::NotPrincipal(_))
        ));
        assert!(matches!(
            euler_generator(&k, 0, &Matrix::zeros(0, 1), 2, 20),
            Err(CohomologyError::InvalidSpec(_))
        ));
    }
}
