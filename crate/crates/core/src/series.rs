//! Truncated Laurent series and `N^m`-graded generating series.
//!
//! [`Laurent`] is a series in one variable `s` (read `s = q^{1/2}`, or the
//! topologist's `t`). Coefficients are known for exponents strictly below
//! `prec`; `prec = None` means the series is exact (a Laurent polynomial).
//!
//! The plethystic exponential uses the Adams operations
//! `ψ_n(s) = -(-s)^n`, `ψ_n(x^γ) = x^{nγ}`, so that odd powers of `s` are
//! fermionic: `Exp(s x) = 1 + s x` and `Exp(s^2 x) = 1/(1 - s^2 x)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::{rat, Error, Rat, Result};

fn min_opt(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

fn add_opt(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    Some(a? + b?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Laurent {
    terms: BTreeMap<i64, Rat>,
    prec: Option<i64>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent { terms: BTreeMap::new(), prec: None }
    }

    /// `O(s^prec)`.
    pub fn big_o(prec: i64) -> Self {
        Laurent { terms: BTreeMap::new(), prec: Some(prec) }
    }

    pub fn one() -> Self {
        Self::monomial(0, Rat::one())
    }

    pub fn monomial(k: i64, c: Rat) -> Self {
        Self::from_terms([(k, c)], None)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, Rat)>, prec: Option<i64>) -> Self {
        let mut l = Laurent { terms: BTreeMap::new(), prec };
        for (k, c) in terms {
            l.add_term(k, c);
        }
        l
    }

    /// Integer coefficients starting at exponent `low`.
    pub fn from_coeffs(low: i64, coeffs: &[i64], prec: Option<i64>) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(i, &c)| (low + i as i64, rat(c))), prec)
    }

    /// `1/(1 - s^step) + O(s^prec)`, for `step > 0`.
    pub fn geometric(step: i64, prec: i64) -> Self {
        assert!(step > 0);
        let mut k = 0;
        let mut terms = Vec::new();
        while k < prec {
            terms.push((k, Rat::one()));
            k += step;
        }
        Self::from_terms(terms, Some(prec))
    }

    fn add_term(&mut self, k: i64, c: Rat) {
        if c.is_zero() || self.prec.is_some_and(|p| k >= p) {
            return;
        }
        let e = self.terms.entry(k).or_insert_with(Rat::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn prec(&self) -> Option<i64> {
        self.prec
    }

    pub fn is_exact(&self) -> bool {
        self.prec.is_none()
    }

    pub fn coeff(&self, k: i64) -> Rat {
        self.terms.get(&k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rat)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    /// True when every known coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn valuation(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Smallest exponent that may carry a nonzero coefficient.
    fn effective_valuation(&self) -> Option<i64> {
        min_opt(self.valuation(), self.prec)
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn truncate(&self, prec: i64) -> Self {
        let p = min_opt(self.prec, Some(prec));
        Self::from_terms(self.terms.iter().map(|(k, c)| (*k, c.clone())), p)
    }

    /// Forget the precision: treat the known part as exact.
    pub fn known_part(&self) -> Self {
        Laurent { terms: self.terms.clone(), prec: None }
    }

    pub fn with_prec(&self, prec: Option<i64>) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, c)| (*k, c.clone())), prec)
    }

    /// Multiply by `s^k`.
    pub fn shift(&self, k: i64) -> Self {
        Laurent { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(), prec: self.prec.map(|p| p + k) }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Laurent { terms: BTreeMap::new(), prec: self.prec };
        }
        Laurent { terms: self.terms.iter().map(|(k, x)| (*k, x * c)).collect(), prec: self.prec }
    }

    /// Substitute `s ↦ -s`.
    pub fn negate_variable(&self) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(k, c)| (*k, if k % 2 == 0 { c.clone() } else { -c.clone() })).collect(),
            prec: self.prec,
        }
    }

    /// Substitute `s ↦ s^{-1}`; only defined for exact series.
    pub fn invert_variable(&self) -> Option<Self> {
        self.is_exact()
            .then(|| Laurent { terms: self.terms.iter().map(|(k, c)| (-k, c.clone())).collect(), prec: None })
    }

    /// Adams operation `s ↦ -(-s)^n`.
    pub(crate) fn psi(&self, n: i64) -> Self {
        assert!(n >= 1);
        let flip = n % 2 == 0;
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (n * k, if flip && k % 2 != 0 { -c.clone() } else { c.clone() }))
                .collect(),
            prec: self.prec.map(|p| n * p),
        }
    }

    /// Multiplicative inverse; exact inputs are expanded below `cap`.
    pub fn inverse(&self, cap: i64) -> Result<Self> {
        let v = self
            .valuation()
            .ok_or_else(|| Error::WindowTooSmall("cannot invert a series with no known nonzero term".into()))?;
        let lead = self.coeff(v);
        let prec = min_opt(self.prec.map(|p| p - 2 * v), Some(cap)).unwrap();
        let n = prec + v; // number of coefficients of s^v · inverse to produce
        let mut b: Vec<Rat> = Vec::new();
        let inv_lead = Rat::one() / &lead;
        for j in 0..n.max(0) {
            if j == 0 {
                b.push(inv_lead.clone());
                continue;
            }
            let mut acc = Rat::zero();
            for i in 1..=j {
                let a = self.coeff(v + i);
                if !a.is_zero() {
                    acc += a * &b[(j - i) as usize];
                }
            }
            b.push(-acc * &inv_lead);
        }
        Ok(Self::from_terms(b.into_iter().enumerate().map(|(j, c)| (j as i64 - v, c)), Some(prec)))
    }

    pub fn is_palindromic(&self) -> bool {
        match (self.valuation(), self.max_exponent()) {
            (Some(lo), Some(hi)) => self.terms.iter().all(|(k, c)| self.coeff(lo + hi - k) == *c),
            _ => true,
        }
    }
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        let mut out = self.with_prec(min_opt(self.prec, rhs.prec));
        for (k, c) in &rhs.terms {
            out.add_term(*k, c.clone());
        }
        out
    }
}

impl Sub for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        self + &(-rhs)
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        self.scale(&rat(-1))
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        let prec = match (self.effective_valuation(), rhs.effective_valuation()) {
            // An exact zero annihilates anything.
            (None, _) | (_, None) => None,
            (va, vb) => min_opt(add_opt(self.prec, vb), add_opt(va, rhs.prec)),
        };
        let mut out = Laurent { terms: BTreeMap::new(), prec };
        for (i, a) in &self.terms {
            for (j, b) in &rhs.terms {
                out.add_term(i + j, a * b);
            }
        }
        out
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() && self.prec.is_none() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                _ => write!(f, "{c}*s^{k}")?,
            }
        }
        if let Some(p) = self.prec {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "O(s^{p})")?;
        }
        Ok(())
    }
}

/// A series `Σ_γ A_γ(s) x^γ` over the box `0 ≤ γ ≤ gamma_max` of `N^m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedSeries {
    gamma_max: Vec<u32>,
    comps: BTreeMap<Vec<u32>, Laurent>,
}

/// All points of the box `0 ≤ γ ≤ max`, in lexicographic order.
pub fn box_points(max: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for &m in max {
        out = out
            .into_iter()
            .flat_map(|p: Vec<u32>| {
                (0..=m).map(move |k| {
                    let mut q = p.clone();
                    q.push(k);
                    q
                })
            })
            .collect();
    }
    out
}

fn degree(g: &[u32]) -> u32 {
    g.iter().sum()
}

fn le(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn minus(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn gcd_all(g: &[u32]) -> u32 {
    g.iter().fold(0, |a, &b| num_integer::gcd(a, b))
}

pub fn mobius(n: u32) -> i64 {
    let mut n = n;
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

impl GradedSeries {
    /// Every component set to `fill`.
    pub fn filled(gamma_max: Vec<u32>, fill: Laurent) -> Self {
        let comps = box_points(&gamma_max).into_iter().map(|g| (g, fill.clone())).collect();
        GradedSeries { gamma_max, comps }
    }

    /// The exact zero series.
    pub fn zero(gamma_max: Vec<u32>) -> Self {
        Self::filled(gamma_max, Laurent::zero())
    }

    pub fn one(gamma_max: Vec<u32>) -> Self {
        let mut s = Self::zero(gamma_max);
        let origin = vec![0; s.gamma_max.len()];
        s.set(&origin, Laurent::one());
        s
    }

    /// `c · x^γ`.
    pub fn monomial(gamma_max: Vec<u32>, gamma: &[u32], c: Laurent) -> Self {
        let mut s = Self::zero(gamma_max);
        s.set(gamma, c);
        s
    }

    pub fn gamma_max(&self) -> &[u32] {
        &self.gamma_max
    }

    pub fn generators(&self) -> usize {
        self.gamma_max.len()
    }

    pub fn get(&self, gamma: &[u32]) -> &Laurent {
        self.comps.get(gamma).expect("γ outside the series box")
    }

    pub fn set(&mut self, gamma: &[u32], c: Laurent) {
        assert!(le(gamma, &self.gamma_max) && gamma.len() == self.gamma_max.len(), "γ outside the series box");
        self.comps.insert(gamma.to_vec(), c);
    }

    pub fn components(&self) -> impl Iterator<Item = (&Vec<u32>, &Laurent)> {
        self.comps.iter()
    }

    pub fn is_integral(&self) -> bool {
        self.comps.values().all(|c| c.is_integral())
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.gamma_max != other.gamma_max {
            return Err(Error::WindowMismatch(format!("Γ boxes {:?} and {:?}", self.gamma_max, other.gamma_max)));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let comps = self.comps.iter().map(|(g, a)| (g.clone(), a + other.get(g))).collect();
        Ok(GradedSeries { gamma_max: self.gamma_max.clone(), comps })
    }

    pub fn scalar(&self, c: &Laurent) -> Self {
        let comps = self.comps.iter().map(|(g, a)| (g.clone(), a * c)).collect();
        GradedSeries { gamma_max: self.gamma_max.clone(), comps }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.gamma_max.clone());
        for g in box_points(&self.gamma_max) {
            let mut acc = Laurent::zero();
            for (g1, a) in &self.comps {
                if le(g1, &g) {
                    acc = &acc + &(a * other.get(&minus(&g, g1)));
                }
            }
            out.set(&g, acc);
        }
        Ok(out)
    }

    /// Same series restricted to a smaller box.
    pub fn restrict(&self, gamma_max: &[u32]) -> Self {
        let comps = box_points(gamma_max).into_iter().map(|g| {
            let c = self.get(&g).clone();
            (g, c)
        });
        GradedSeries { gamma_max: gamma_max.to_vec(), comps: comps.collect() }
    }
}

fn adams_sum(f: &GradedSeries, gamma: &[u32], weight: impl Fn(u32) -> Rat) -> Laurent {
    let d = gcd_all(gamma);
    let mut acc = Laurent::zero();
    for n in 1..=d {
        if d % n != 0 {
            continue;
        }
        let w = weight(n);
        if w.is_zero() {
            continue;
        }
        let base: Vec<u32> = gamma.iter().map(|x| x / n).collect();
        acc = &acc + &f.get(&base).psi(n as i64).scale(&w);
    }
    acc
}

/// Signed plethystic exponential of a series with vanishing `γ = 0` part.
pub fn pexp(f: &GradedSeries) -> Result<GradedSeries> {
    let origin = vec![0; f.generators()];
    if !f.get(&origin).is_zero() {
        return Err(Error::NonZeroConstant);
    }
    let points = box_points(f.gamma_max());
    let mut log = GradedSeries::zero(f.gamma_max.clone());
    for g in points.iter().filter(|g| degree(g) > 0) {
        log.set(g, adams_sum(f, g, |n| Rat::new(1.into(), (n as i64).into())));
    }
    let mut e = GradedSeries::one(f.gamma_max.clone());
    for g in points.iter().filter(|g| degree(g) > 0) {
        let mut acc = Laurent::zero();
        for g1 in points.iter().filter(|g1| degree(g1) > 0 && le(g1, g)) {
            let term = log.get(g1) * e.get(&minus(g, g1));
            acc = &acc + &term.scale(&rat(degree(g1) as i64));
        }
        e.set(g, acc.scale(&Rat::new(1.into(), (degree(g) as i64).into())));
    }
    Ok(e)
}

/// Inverse of [`pexp`] on series whose `γ = 0` part is `1`.
pub fn plog(a: &GradedSeries) -> Result<GradedSeries> {
    let origin = vec![0; a.generators()];
    let a0 = a.get(&origin);
    if !(a0 - &Laurent::one()).is_zero() {
        return Err(Error::NonUnitConstant);
    }
    let points = box_points(a.gamma_max());
    let mut log = GradedSeries::zero(a.gamma_max.clone());
    for g in points.iter().filter(|g| degree(g) > 0) {
        let mut acc = a.get(g).scale(&rat(degree(g) as i64));
        for g1 in points.iter().filter(|g1| degree(g1) > 0 && le(g1, g) && *g1 != g) {
            let term = log.get(g1) * a.get(&minus(g, g1));
            acc = &acc - &term.scale(&rat(degree(g1) as i64));
        }
        log.set(g, acc.scale(&Rat::new(1.into(), (degree(g) as i64).into())));
    }
    let mut f = GradedSeries::zero(a.gamma_max.clone());
    for g in points.iter().filter(|g| degree(g) > 0) {
        f.set(g, adams_sum(&log, g, |n| Rat::new(mobius(n).into(), (n as i64).into())));
    }
    Ok(f)
}

/// `∏ 1/(1 - q^{d_i})` as a series in `q` below `q^prec`.
pub fn molien_bg(degrees: &[u32], prec: i64) -> Laurent {
    degrees.iter().fold(Laurent::one().truncate(prec), |acc, &d| &acc * &Laurent::geometric(d as i64, prec))
}

/// `∏_{k=1}^n 1/(1 - s^{2k})` below `s^prec`.
pub fn inverse_q_pochhammer(n: u32, prec: i64) -> Laurent {
    (1..=n as i64).fold(Laurent::one().truncate(prec), |acc, k| &acc * &Laurent::geometric(2 * k, prec))
}
