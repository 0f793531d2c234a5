//! Sparse multivariate polynomials over Q.
//!
//! Variables are the coordinates `x_1, …, x_n` on `Λ_T ⊗ Q`; a covector `γ`
//! gives the linear form `t_γ = Σ γ_i x_i`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::linalg::IntMatrix;
use crate::{rat, Rat};

pub type Exponent = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Exponent, Rat>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rat::one())
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    pub fn monomial(nvars: usize, exp: Exponent, c: Rat) -> Self {
        assert_eq!(exp.len(), nvars);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Poly { nvars, terms }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, e, Rat::one())
    }

    /// The linear form `t_γ` of an integer covector.
    pub fn linear(cov: &[i64]) -> Self {
        Self::linear_q(&cov.iter().map(|&c| rat(c)).collect::<Vec<_>>())
    }

    pub fn linear_q(cov: &[Rat]) -> Self {
        let n = cov.len();
        let mut p = Self::zero(n);
        for (i, c) in cov.iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0; n];
                e[i] = 1;
                p.terms.insert(e, c.clone());
            }
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponent, Rat)>) -> Self {
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

    pub fn terms(&self) -> &BTreeMap<Exponent, Rat> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[u32]) -> Rat {
        self.terms.get(e).cloned().unwrap_or_else(Rat::zero)
    }

    fn add_term(&mut self, e: Exponent, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// `Some(d)` iff the polynomial is nonzero and homogeneous of degree `d`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let d = degs.next()?;
        degs.all(|x| x == d).then_some(d)
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect() }
    }

    pub fn mul_linear(&self, cov: &[i64]) -> Poly {
        self * &Poly::linear(cov)
    }

    /// Substitute `x ↦ M x`, i.e. return `p(M x)`.
    pub fn substitute(&self, m: &IntMatrix) -> Poly {
        let n = self.nvars;
        assert_eq!(m.n(), n);
        let forms: Vec<Poly> = (0..n).map(|i| Poly::linear(&m.rows()[i])).collect();
        let mut powers: Vec<Vec<Poly>> = forms.iter().map(|f| vec![Poly::one(n), f.clone()]).collect();
        let mut out = Poly::zero(n);
        for (e, c) in &self.terms {
            let mut t = Poly::constant(n, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().unwrap() * &forms[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][k as usize];
            }
            out = out + t;
        }
        out
    }

    /// Exact division by the linear form `t_cov`. Returns `None` on a nonzero remainder.
    pub fn div_linear(&self, cov: &[i64]) -> Option<Poly> {
        let j = cov.iter().position(|&c| c != 0).expect("division by the zero form");
        let lead = rat(cov[j]);
        let mut rest = cov.to_vec();
        rest[j] = 0;
        let rest = Poly::linear(&rest);
        let mut p = self.clone();
        let mut quotient = Poly::zero(self.nvars);
        loop {
            let top = p.terms.keys().map(|e| e[j]).max().unwrap_or(0);
            if top == 0 {
                break;
            }
            let mut q_part = Poly::zero(self.nvars);
            for (e, c) in p.terms.iter().filter(|(e, _)| e[j] == top) {
                let mut e2 = e.clone();
                e2[j] -= 1;
                q_part.add_term(e2, c / &lead);
            }
            // p -= q_part * (lead x_j + rest)
            let mut xj = vec![0; self.nvars];
            xj[j] = 1;
            let lin = &Poly::monomial(self.nvars, xj, lead.clone()) + &rest;
            p = &p - &(&q_part * &lin);
            quotient = quotient + q_part;
        }
        p.is_zero().then_some(quotient)
    }

    /// All monomials of total degree `d` in `n` variables, in lexicographic order.
    pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Exponent> {
        fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Exponent>) {
            if prefix.len() + 1 == n {
                prefix.push(d);
                out.push(prefix.clone());
                prefix.pop();
                return;
            }
            for k in (0..=d).rev() {
                prefix.push(k);
                rec(n, d - k, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if n == 0 {
            if d == 0 {
                out.push(vec![]);
            }
            return out;
        }
        rec(n, d, &mut Vec::new(), &mut out);
        out
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        self.terms.iter().fold(Rat::zero(), |acc, (e, c)| {
            let m = e.iter().zip(point).fold(Rat::one(), |m, (&k, x)| m * num_traits::pow(x.clone(), k as usize));
            acc + c * m
        })
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.clone() + rhs.clone()
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.clone() + (-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect() }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (v, k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, "*x{}", v + 1)?,
                    _ => write!(f, "*x{}^{k}", v + 1)?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::IntMatrix;

    #[test]
    fn exact_linear_division() {
        // (x1 - x2)(x1 + 2 x2) / (x1 - x2)
        let a = Poly::linear(&[1, -1]);
        let b = Poly::linear(&[1, 2]);
        let p = &a * &b;
        assert_eq!(p.div_linear(&[1, -1]).unwrap(), b);
        assert_eq!(p.div_linear(&[0, 3]), None);
        // Division by a form whose first coordinate vanishes.
        let c = Poly::linear(&[0, 2]);
        assert_eq!((&p * &c).div_linear(&[0, 2]).unwrap(), p);
    }

    #[test]
    fn substitution_is_a_ring_map() {
        let swap = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        let p = &Poly::linear(&[1, 0]) * &Poly::linear(&[1, 3]);
        let q = p.substitute(&swap);
        assert_eq!(q, &Poly::linear(&[0, 1]) * &Poly::linear(&[3, 1]));
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(Poly::monomials_of_degree(3, 2).len(), 6);
        assert_eq!(Poly::monomials_of_degree(1, 7).len(), 1);
        assert_eq!(Poly::monomials_of_degree(0, 0).len(), 1);
        assert!(Poly::monomials_of_degree(0, 1).is_empty());
    }
}
