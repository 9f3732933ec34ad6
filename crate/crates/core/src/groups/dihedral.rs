use super::{close_group, index_two_check, MatrixGroup};
use crate::algebra::Matrix;
use crate::error::GroupError;

/// The dihedral quotient Ξ/W(H) generated by the two involutions w₋, w₊.
#[derive(Clone, Debug)]
pub struct DihedralData {
    /// Order of w₊w₋ modulo W(H).
    pub k: usize,
    pub w_minus: Matrix,
    pub w_plus: Matrix,
    /// The group generated by W(H), W(K₋) and W(K₊).
    pub xi: MatrixGroup,
}

impl DihedralData {
    /// r = w₊ w₋ as a matrix product.
    pub fn rotation(&self) -> Matrix {
        self.w_plus.mul(&self.w_minus).expect("square")
    }
}

/// Coset representatives, the order k of w₊w₋ in Ξ/W(H), and Ξ itself.
/// All three groups must act on the same torus.
pub fn dihedral_parameters(
    wh: &MatrixGroup,
    wk_minus: &MatrixGroup,
    wk_plus: &MatrixGroup,
    cap: usize,
) -> Result<DihedralData, GroupError> {
    let w_minus = index_two_check(wh, wk_minus)?;
    let w_plus = index_two_check(wh, wk_plus)?;
    let mut gens: Vec<Matrix> = wh.generators().to_vec();
    gens.extend_from_slice(wk_minus.generators());
    gens.extend_from_slice(wk_plus.generators());
    let xi = close_group(wh.rank(), &gens, cap)?;

    let r = w_plus.mul(&w_minus).expect("square");
    let mut power = r.clone();
    let mut k = 1;
    while !wh.contains(&power) {
        k += 1;
        if k > xi.order() {
            return Err(GroupError::CapExceeded { cap: xi.order() });
        }
        power = power.mul(&r).expect("square");
    }
    Ok(DihedralData { k, w_minus, w_plus, xi })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{weyl_standard, WeylType, DEFAULT_CAP};

    fn group(rank: usize, gens: &[Matrix]) -> MatrixGroup {
        close_group(rank, gens, DEFAULT_CAP).unwrap()
    }

    #[test]
    fn su3_on_s7_has_k3() {
        let s1 = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
        let s2 = Matrix::from_ints(&[&[1, 0], &[-1, -1]]);
        let dd = dihedral_parameters(&MatrixGroup::trivial(2), &group(2, &[s1]), &group(2, &[s2]), DEFAULT_CAP).unwrap();
        assert_eq!(dd.k, 3);
        assert_eq!(dd.xi.order(), 6);
    }

    #[test]
    fn su3_on_su3_has_k1() {
        let pm = weyl_standard(WeylType::A, 2).unwrap();
        let dd = dihedral_parameters(&MatrixGroup::trivial(1), &pm, &pm, DEFAULT_CAP).unwrap();
        assert_eq!(dd.k, 1);
        assert_eq!(dd.xi.order(), 2);
    }

    #[test]
    fn equal_legs_give_k1() {
        let wh = group(2, &[Matrix::diagonal(&[-1, 1])]);
        let wk = group(2, &[Matrix::diagonal(&[-1, 1]), Matrix::diagonal(&[1, -1])]);
        let dd = dihedral_parameters(&wh, &wk, &wk, DEFAULT_CAP).unwrap();
        assert_eq!(dd.k, 1);
    }

    #[test]
    fn quotient_relations() {
        let wm = group(2, &[Matrix::diagonal(&[1, -1])]);
        let wp = group(2, &[Matrix::diagonal(&[-1, 1])]);
        let wh = MatrixGroup::trivial(2);
        let dd = dihedral_parameters(&wh, &wm, &wp, DEFAULT_CAP).unwrap();
        assert_eq!(dd.k, 2);
        assert!(wh.contains(&dd.w_minus.pow(2)));
        assert!(wh.contains(&dd.w_plus.pow(2)));
        assert!(wh.contains(&dd.rotation().pow(dd.k as u32)));
        let ratio = dd.xi.order() / wh.order();
        assert!(ratio == dd.k || ratio == 2 * dd.k);
    }
}
