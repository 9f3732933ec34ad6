//! Arithmetic in the cyclotomic fields Q(zeta_k).
//!
//! Elements are coefficient vectors in the power basis 1, zeta, ...,
//! zeta^(phi(k)-1), always reduced modulo the k-th cyclotomic polynomial.

use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use num_traits::{One, Zero};

use super::linalg;
use super::scalar::{is_negative_rational, rat, Coeff, Rational};

/// The field Q(zeta_k) together with its defining polynomial.
#[derive(Debug, PartialEq, Eq)]
pub struct CyclotomicField {
    conductor: u32,
    /// Coefficients of Phi_k, lowest degree first; monic.
    modulus: Vec<i64>,
}

pub fn euler_phi(k: u32) -> u32 {
    (1..=k).filter(|j| j.gcd(&k) == 1).count() as u32
}

/// Integer coefficients of the k-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_polynomial(k: u32) -> Vec<i64> {
    assert!(k >= 1, "cyclotomic polynomial needs k >= 1");
    // x^k - 1 divided by Phi_d for every proper divisor d.
    let mut num = vec![0i64; k as usize + 1];
    num[0] = -1;
    num[k as usize] = 1;
    for d in (1..k).filter(|d| k.is_multiple_of(*d)) {
        num = exact_div_monic(&num, &cyclotomic_polynomial(d));
    }
    num
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut quot = vec![0i64; qd + 1];
    for i in (0..=qd).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        for (j, dc) in den.iter().enumerate() {
            rem[i + j] -= c * dc;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

impl CyclotomicField {
    pub fn new(conductor: u32) -> Arc<Self> {
        Arc::new(CyclotomicField {
            conductor,
            modulus: cyclotomic_polynomial(conductor),
        })
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Extension degree phi(k).
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[i64] {
        &self.modulus
    }

    pub fn zero(self: &Arc<Self>) -> Cyclotomic {
        Cyclotomic {
            field: self.clone(),
            coeffs: vec![Rational::zero(); self.degree()],
        }
    }

    pub fn one(self: &Arc<Self>) -> Cyclotomic {
        self.from_rational(&Rational::one())
    }

    pub fn from_rational(self: &Arc<Self>, q: &Rational) -> Cyclotomic {
        let mut z = self.zero();
        z.coeffs[0] = q.clone();
        z
    }

    /// Build an element from power-basis coefficients of any length; the
    /// polynomial is reduced modulo Phi_k.
    pub fn from_coeffs(self: &Arc<Self>, coeffs: Vec<Rational>) -> Cyclotomic {
        Cyclotomic {
            field: self.clone(),
            coeffs: self.reduce(coeffs),
        }
    }

    /// The primitive root zeta_k = exp(2 pi i / k).
    pub fn zeta(self: &Arc<Self>) -> Cyclotomic {
        self.zeta_pow(1)
    }

    /// zeta_k^e for any integer e.
    pub fn zeta_pow(self: &Arc<Self>, e: i64) -> Cyclotomic {
        let e = e.rem_euclid(self.conductor as i64) as usize;
        let mut c = vec![Rational::zero(); e + 1];
        c[e] = Rational::one();
        self.from_coeffs(c)
    }

    fn reduce(&self, mut c: Vec<Rational>) -> Vec<Rational> {
        let d = self.degree();
        while c.len() > d {
            let top = c.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = c.len() - d;
            // x^d = -(m_0 + ... + m_{d-1} x^{d-1})
            for (j, m) in self.modulus[..d].iter().enumerate() {
                if *m != 0 {
                    c[shift + j] -= &top * rat(*m);
                }
            }
        }
        c.resize(d, Rational::zero());
        c
    }
}

/// An element of Q(zeta_k).
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    field: Arc<CyclotomicField>,
    coeffs: Vec<Rational>,
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.field.conductor == other.field.conductor && self.coeffs == other.coeffs
    }
}

impl Eq for Cyclotomic {}

impl Cyclotomic {
    pub fn conductor(&self) -> u32 {
        self.field.conductor
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational value if the element lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn pow(&self, mut e: u32) -> Cyclotomic {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            base = base.mul_ref(&base);
            e >>= 1;
        }
        acc
    }

    fn check(&self, other: &Self) {
        assert_eq!(
            self.field.conductor, other.field.conductor,
            "cyclotomic elements from different fields"
        );
    }

    /// Matrix of multiplication by `self` on the power basis (columns are
    /// images of basis vectors).
    fn mult_matrix(&self) -> Vec<Vec<Rational>> {
        let d = self.field.degree();
        let mut cols = Vec::with_capacity(d);
        for i in 0..d {
            let basis = self.field.zeta_pow(i as i64);
            cols.push(self.mul_ref(&basis).coeffs);
        }
        // transpose into rows
        (0..d).map(|r| (0..d).map(|c| cols[c][r].clone()).collect()).collect()
    }
}

impl Coeff for Cyclotomic {
    fn zero_like(&self) -> Self {
        self.field.zero()
    }

    fn one_like(&self) -> Self {
        self.field.one()
    }

    fn is_zero_elem(&self) -> bool {
        Cyclotomic::is_zero(self)
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self.check(rhs);
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self.check(rhs);
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self.check(rhs);
        let d = self.field.degree();
        let mut prod = vec![Rational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        self.field.from_coeffs(prod)
    }

    fn neg_ref(&self) -> Self {
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // Solve M v = e_0 where M is multiplication by self.
        let d = self.field.degree();
        let mut rhs = vec![Rational::zero(); d];
        rhs[0] = Rational::one();
        let sol = linalg::solve(&self.mult_matrix(), &rhs)?;
        Some(Cyclotomic {
            field: self.field.clone(),
            coeffs: sol,
        })
    }

    fn embed_rational(&self, q: &Rational) -> Self {
        self.field.from_rational(q)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.field.conductor;
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = is_negative_rational(c);
            let abs = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match i {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    if i == 1 {
                        write!(f, "z{k}")?;
                    } else {
                        write!(f, "z{k}^{i}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn coefficient_vector_length_is_totient() {
        for k in 1..=30 {
            let f = CyclotomicField::new(k);
            assert_eq!(f.degree() as u32, euler_phi(k), "k = {k}");
            assert_eq!(f.zeta().coeffs().len() as u32, euler_phi(k));
        }
    }

    #[test]
    fn zeta_has_order_k() {
        for k in 1..=24 {
            let f = CyclotomicField::new(k);
            let z = f.zeta();
            assert_eq!(z.pow(k), f.one(), "k = {k}");
            for j in 1..k {
                assert_ne!(z.pow(j), f.one(), "k = {k}, j = {j}");
            }
        }
    }

    #[test]
    fn character_orthogonality() {
        for k in 1..=12u32 {
            let f = CyclotomicField::new(k);
            for m in 0..(2 * k as i64) {
                let mut sum = f.zero();
                for j in 0..k as i64 {
                    sum = sum.add_ref(&f.zeta_pow(j * m));
                }
                let expected = if m % k as i64 == 0 { rat(k as i64) } else { rat(0) };
                assert_eq!(sum, f.from_rational(&expected), "k = {k}, m = {m}");
            }
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let f = CyclotomicField::new(5);
        let a = f.from_coeffs(vec![rat(2), rat(-1), rat(0), rat(3)]);
        let inv = a.inv().unwrap();
        assert_eq!(a.mul_ref(&inv), f.one());
        assert!(f.zero().inv().is_none());
    }

    #[test]
    fn display() {
        let f = CyclotomicField::new(3);
        let z = f.zeta();
        assert_eq!(z.mul_ref(&z).to_string(), "-1 - z3");
        assert_eq!(f.zero().to_string(), "0");
    }
}
