use std::collections::HashMap;

use num_traits::Zero;

use crate::algebra::{rat, PoincareSeries, Rational};
use crate::groups::MatrixGroup;

/// Molien series (1/|G|) Σ_g 1/det(I - t² g), truncated at degree `n`.
/// Variables sit in cohomological degree 2, hence t².
pub fn molien(group: &MatrixGroup, n: usize) -> PoincareSeries {
    let half = n / 2;
    let r = group.rank();
    // Elements with equal characteristic polynomials contribute equally.
    let mut classes: HashMap<Vec<Rational>, usize> = HashMap::new();
    for g in group.elements() {
        *classes.entry(g.char_poly()).or_default() += 1;
    }
    let mut keys: Vec<&Vec<Rational>> = classes.keys().collect();
    keys.sort();
    let mut total = PoincareSeries::zero(half);
    for cp in keys {
        // det(I - s g) = Σ_j c_{r-j} s^j where det(x I - g) = Σ_i c_i x^i
        let det: Vec<Rational> = (0..=r).map(|j| cp[r - j].clone()).collect();
        let inv = PoincareSeries::from_coeffs(half, det)
            .inverse()
            .expect("det(I - s g) has constant term 1");
        total = total.add(&inv.scale(&rat(classes[cp] as i64)));
    }
    let total = total.scale(&Rational::new(1.into(), (group.order() as i64).into()));
    let mut coeffs = vec![Rational::zero(); n + 1];
    for (j, c) in total.coeffs().iter().enumerate() {
        coeffs[2 * j] = c.clone();
    }
    PoincareSeries::from_coeffs(n, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{weyl_standard, WeylType};

    #[test]
    fn trivial_rank_one() {
        let s = molien(&MatrixGroup::trivial(1), 10);
        assert_eq!(s, PoincareSeries::geometric(10, 2));
    }

    #[test]
    fn sign_group() {
        // ½(1/(1-t²) + 1/(1+t²)) = 1/(1-t⁴)
        let s = molien(&weyl_standard(WeylType::A, 2).unwrap(), 12);
        assert_eq!(s, PoincareSeries::geometric(12, 4));
    }

    #[test]
    fn a2_sum_zero_model() {
        let s = molien(&weyl_standard(WeylType::A, 3).unwrap(), 30);
        let expected = PoincareSeries::geometric(30, 4).mul(&PoincareSeries::geometric(30, 6));
        assert_eq!(s, expected);
    }

    #[test]
    fn rank_zero() {
        assert_eq!(molien(&MatrixGroup::trivial(0), 6), PoincareSeries::one(6));
    }
}
