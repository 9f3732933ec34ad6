//! Multivariate polynomials in torus variables x1..xr, each of
//! cohomological degree 2.

use std::collections::BTreeMap;
use std::fmt;

use super::matrix::Matrix;
use super::scalar::{display_coeff, Coeff, Rational};
use crate::error::AlgebraError;

/// Exponent vector of a monomial.
pub type Exponents = Vec<u32>;

/// All exponent vectors of `nvars` variables with cohomological degree `d`,
/// in descending lexicographic order (x1^m first). Odd `d` gives nothing.
pub fn homogeneous_monomials(nvars: usize, d: usize) -> Vec<Exponents> {
    if d % 2 == 1 {
        return Vec::new();
    }
    let m = (d / 2) as u32;
    let mut out = Vec::new();
    if nvars == 0 {
        if m == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut cur = vec![0u32; nvars];
    fill(&mut cur, 0, m, &mut out);
    out
}

fn fill(cur: &mut Vec<u32>, i: usize, left: u32, out: &mut Vec<Exponents>) {
    if i + 1 == cur.len() {
        cur[i] = left;
        out.push(cur.clone());
        return;
    }
    for e in (0..=left).rev() {
        cur[i] = e;
        fill(cur, i + 1, left - e, out);
    }
    cur[i] = 0;
}

/// A polynomial with no stored zero coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<F = Rational> {
    nvars: usize,
    terms: BTreeMap<Exponents, F>,
}

/// The rational polynomials used throughout.
pub type GradedPolynomial = Polynomial<Rational>;

impl<F: Coeff> Polynomial<F> {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    pub fn monomial(nvars: usize, exps: Exponents, c: F) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut terms = BTreeMap::new();
        if !c.is_zero_elem() {
            terms.insert(exps, c);
        }
        Polynomial { nvars, terms }
    }

    /// The variable x_{i+1}, with coefficient taken from `one`.
    pub fn var(nvars: usize, i: usize, one: F) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, e, one)
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponents, F)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars);
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &F)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: &[u32]) -> Option<&F> {
        self.terms.get(e)
    }

    /// Any coefficient, for field context.
    pub fn sample_coeff(&self) -> Option<&F> {
        self.terms.values().next()
    }

    fn add_term(&mut self, e: Exponents, c: F) {
        if c.is_zero_elem() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(old) => {
                let s = old.add_ref(&c);
                if s.is_zero_elem() {
                    self.terms.remove(&e);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    /// Cohomological degree of a monomial: twice its total degree.
    pub fn monomial_degree(e: &[u32]) -> usize {
        2 * e.iter().map(|&x| x as usize).sum::<usize>()
    }

    /// Highest cohomological degree among terms; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|e| Self::monomial_degree(e)).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| Self::monomial_degree(e));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub fn homogeneous_component(&self, d: usize) -> Self {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| Self::monomial_degree(e) == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Lex-leading term: the greatest exponent vector.
    pub fn leading_term(&self) -> Option<(&Exponents, &F)> {
        self.terms.iter().next_back()
    }

    /// Rescale so the lex-leading coefficient is 1.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg_ref())).collect(),
        }
    }

    pub fn scale(&self, s: &F) -> Self {
        if s.is_zero_elem() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.mul_ref(s))).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca.mul_ref(cb));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = match self.sample_coeff() {
            Some(c) => Self::constant(self.nvars, c.one_like()),
            None if e == 0 => panic!("0^0 needs a field context"),
            None => return self.clone(),
        };
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Replace each variable x_i by the linear form given by row i of `m`
    /// in `target_vars` new variables.
    pub fn substitute_linear(&self, m: &Matrix, target_vars: usize) -> Result<Self, AlgebraError> {
        if m.nrows() != self.nvars || m.ncols() != target_vars {
            return Err(AlgebraError::ShapeMismatch {
                expected: format!("{}x{}", self.nvars, target_vars),
                found: format!("{}x{}", m.nrows(), m.ncols()),
            });
        }
        let Some(sample) = self.sample_coeff() else {
            return Ok(Self::zero(target_vars));
        };
        let forms: Vec<Self> = (0..self.nvars)
            .map(|i| {
                Self::from_terms(
                    target_vars,
                    (0..target_vars).map(|j| {
                        let mut e = vec![0; target_vars];
                        e[j] = 1;
                        (e, sample.embed_rational(m.get(i, j)))
                    }),
                )
            })
            .collect();
        // powers[i][k] = forms[i]^k, built on demand
        let mut powers: Vec<Vec<Self>> = vec![vec![Self::constant(target_vars, sample.one_like())]; self.nvars];
        let mut out = Self::zero(target_vars);
        for (e, c) in &self.terms {
            let mut term = Self::constant(target_vars, c.clone());
            for (i, &k) in e.iter().enumerate() {
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().unwrap().mul(&forms[i]);
                    powers[i].push(next);
                }
                if k > 0 {
                    term = term.mul(&powers[i][k as usize]);
                }
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Coordinates in the given monomial basis; terms outside it are an error.
    pub fn to_vector(&self, basis: &[Exponents], zero: &F) -> Vec<F> {
        let mut v = vec![zero.clone(); basis.len()];
        let mut hit = 0;
        for (i, e) in basis.iter().enumerate() {
            if let Some(c) = self.terms.get(e) {
                v[i] = c.clone();
                hit += 1;
            }
        }
        assert_eq!(hit, self.terms.len(), "polynomial has terms outside the basis");
        v
    }

    pub fn from_vector(nvars: usize, basis: &[Exponents], v: &[F]) -> Self {
        Self::from_terms(nvars, basis.iter().cloned().zip(v.iter().cloned()))
    }

    pub fn map_coeffs<G: Coeff>(&self, f: impl Fn(&F) -> G) -> Polynomial<G> {
        Polynomial::from_terms(self.nvars, self.terms.iter().map(|(e, c)| (e.clone(), f(c))))
    }
}

impl<F: Coeff> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, k) })
                .collect();
            let cs = display_coeff(c);
            let (neg, cs) = match cs.strip_prefix('-') {
                Some(rest) if !cs.starts_with('(') => (true, rest.to_string()),
                _ => (false, cs),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            if mono.is_empty() {
                write!(f, "{cs}")?;
            } else if cs == "1" {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{cs}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::rat;

    fn x(n: usize, i: usize) -> GradedPolynomial {
        Polynomial::var(n, i, rat(1))
    }

    #[test]
    fn monomials_in_lex_order() {
        assert_eq!(homogeneous_monomials(2, 4), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(
            homogeneous_monomials(3, 2),
            vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]
        );
        assert!(homogeneous_monomials(1, 3).is_empty());
        assert_eq!(homogeneous_monomials(0, 0), vec![Vec::<u32>::new()]);
        assert!(homogeneous_monomials(0, 2).is_empty());
    }

    #[test]
    fn substitution_examples() {
        // x1 -> 0, x2 -> x
        let m = Matrix::from_ints(&[&[0], &[1]]);
        let c1 = x(2, 0).add(&x(2, 1));
        assert_eq!(c1.substitute_linear(&m, 1).unwrap(), x(1, 0));
        let c2 = x(2, 0).mul(&x(2, 1));
        assert!(c2.substitute_linear(&m, 1).unwrap().is_zero());
        assert_eq!(c2.substitute_linear(&Matrix::identity(2), 2).unwrap(), c2);
        assert!(c2.substitute_linear(&Matrix::identity(3), 3).is_err());
    }

    #[test]
    fn homogeneous_parts() {
        let p = x(2, 0).add(&x(2, 0).mul(&x(2, 1)));
        assert!(!p.is_homogeneous());
        assert_eq!(p.homogeneous_component(2), x(2, 0));
        assert_eq!(p.homogeneous_component(4), x(2, 0).mul(&x(2, 1)));
        assert_eq!(p.degree(), Some(4));
    }

    #[test]
    fn display_format() {
        let p = x(2, 0).pow(2).sub(&x(2, 1).scale(&rat(3)));
        assert_eq!(p.to_string(), "x1^2 - 3*x2");
        assert_eq!(GradedPolynomial::zero(1).to_string(), "0");
    }

    #[test]
    fn vector_roundtrip() {
        let basis = homogeneous_monomials(2, 4);
        let p = x(2, 0).mul(&x(2, 1)).scale(&rat(5));
        let v = p.to_vector(&basis, &rat(0));
        assert_eq!(v, vec![rat(0), rat(5), rat(0)]);
        assert_eq!(Polynomial::from_vector(2, &basis, &v), p);
    }
}
