//! BPS series of quivers without potential.
//!
//! The normalized stack series is
//! `Stack_γ = q^{χ(γ,γ)/2} ∏_i ∏_{k=1}^{γ_i} (1 - q^k)^{-1}` and the BPS series
//! are defined by `Σ_γ Stack_γ x^γ = Exp(Σ_{γ≠0} Ω_γ · q^{1/2}/(1-q) · x^γ)`.
//! Series are in `s = q^{1/2}`; a window of `W` means `q`-powers below `q^W`.

use std::collections::BTreeMap;

use crate::series::{box_points, inverse_q_pochhammer, pexp, plog, GradedSeries, Laurent};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverSpec {
    vertices: usize,
    /// `arrows[i][j]` arrows from `i` to `j`.
    arrows: Vec<Vec<u32>>,
}

impl QuiverSpec {
    pub fn new(arrows: Vec<Vec<u32>>) -> Result<Self> {
        let n = arrows.len();
        if arrows.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidInput("arrow table must be square".into()));
        }
        Ok(QuiverSpec { vertices: n, arrows })
    }

    /// From a list of arrows `(tail, head)`.
    pub fn from_arrows(vertices: usize, list: &[(usize, usize)]) -> Result<Self> {
        let mut a = vec![vec![0u32; vertices]; vertices];
        for &(i, j) in list {
            if i >= vertices || j >= vertices {
                return Err(Error::InvalidInput(format!("arrow ({i}, {j}) leaves the vertex set")));
            }
            a[i][j] += 1;
        }
        Self::new(a)
    }

    /// One vertex with `g` loops.
    pub fn loops(g: u32) -> Self {
        QuiverSpec { vertices: 1, arrows: vec![vec![g]] }
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn arrows(&self) -> &[Vec<u32>] {
        &self.arrows
    }

    /// `χ(γ, δ) = Σ γ_i δ_i - Σ a_ij γ_i δ_j`.
    pub fn euler(&self, gamma: &[u32], delta: &[u32]) -> i64 {
        let mut chi: i64 = gamma.iter().zip(delta).map(|(a, b)| (*a as i64) * (*b as i64)).sum();
        for i in 0..self.vertices {
            for j in 0..self.vertices {
                chi -= self.arrows[i][j] as i64 * gamma[i] as i64 * delta[j] as i64;
            }
        }
        chi
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.vertices).all(|i| (0..self.vertices).all(|j| self.arrows[i][j] == self.arrows[j][i]))
    }
}

/// Precision in half-powers for a window of `q`-powers.
pub fn half_power_prec(window: u32) -> i64 {
    2 * window as i64 + 1
}

/// `Stack_γ` below `q^window`.
pub fn stack_series(q: &QuiverSpec, gamma: &[u32], window: u32) -> Laurent {
    let chi = q.euler(gamma, gamma);
    let prec = half_power_prec(window);
    // The shift must not eat the window: expand the Pochhammer part further.
    let base_prec = prec - chi.min(0);
    let mut out = Laurent::one().truncate(base_prec);
    for &g in gamma {
        out = &out * &inverse_q_pochhammer(g, base_prec);
    }
    out.shift(chi).truncate(prec)
}

pub fn stack_generating_series(q: &QuiverSpec, gamma_max: &[u32], window: u32) -> GradedSeries {
    let mut s = GradedSeries::one(gamma_max.to_vec());
    for g in box_points(gamma_max) {
        if g.iter().any(|&x| x > 0) {
            s.set(&g, stack_series(q, &g, window));
        }
    }
    s
}

/// `q^{1/2}/(1-q)` below `s^prec`.
fn virtual_bgm(prec: i64) -> Laurent {
    Laurent::geometric(2, prec - 1).shift(1)
}

#[derive(Debug, Clone)]
pub struct BpsSeries {
    pub omega: BTreeMap<Vec<u32>, Laurent>,
    pub symmetric: bool,
    pub warning: Option<String>,
    pub window: u32,
}

pub fn bps_series(q: &QuiverSpec, gamma_max: &[u32], window: u32) -> Result<BpsSeries> {
    if gamma_max.len() != q.vertices() {
        return Err(Error::InvalidInput("γ bound has the wrong number of entries".into()));
    }
    if window == 0 {
        return Err(Error::WindowTooSmall("window must contain at least q^0".into()));
    }
    let stack = stack_generating_series(q, gamma_max, window);
    let log = plog(&stack)?;
    let one_minus_q = Laurent::from_coeffs(0, &[1, 0, -1], None);
    let mut omega = BTreeMap::new();
    for (g, l) in log.components() {
        if g.iter().all(|&x| x == 0) {
            continue;
        }
        let o = (l * &one_minus_q).shift(-1);
        if o.prec().is_some_and(|p| p <= lowest_exponent(q, g)) {
            return Err(Error::WindowTooSmall(format!("no coefficients of Ω_{g:?} survive the window")));
        }
        omega.insert(g.clone(), o);
    }
    let symmetric = q.is_symmetric();
    let warning = (!symmetric).then(|| "quiver is not symmetric: integrality is not expected".to_string());
    Ok(BpsSeries { omega, symmetric, warning, window })
}

/// Expected bottom of the support of `Ω_γ`, used to size the known range.
fn lowest_exponent(q: &QuiverSpec, gamma: &[u32]) -> i64 {
    q.euler(gamma, gamma).min(0) - 1
}

/// `Exp(Σ Ω_γ q^{1/2}/(1-q) x^γ)`, for the round-trip check.
pub fn reconstruct_stack(bps: &BpsSeries, gamma_max: &[u32]) -> Result<GradedSeries> {
    let prec = half_power_prec(bps.window);
    let mut f = GradedSeries::zero(gamma_max.to_vec());
    for (g, o) in &bps.omega {
        f.set(g, o * &virtual_bgm(prec));
    }
    pexp(&f)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyVerdict {
    /// The known support ends well before the window edge.
    Polynomial,
    /// Nonzero coefficients run up to the window edge.
    NotPolynomial,
    /// The known range is too short to judge.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub gamma: Vec<u32>,
    pub polynomial: PolyVerdict,
    pub integer_coefficients: bool,
    /// Lowest and highest half-power with a nonzero coefficient.
    pub support: Option<(i64, i64)>,
    /// Half-power precision of the component.
    pub prec: Option<i64>,
}

impl Verdict {
    pub fn passes(&self) -> bool {
        self.polynomial == PolyVerdict::Polynomial && self.integer_coefficients
    }
}

/// Minimum number of known half-powers needed to judge polynomiality.
pub const MIN_KNOWN_SPAN: i64 = 16;

/// Window-relative polynomiality test: the last nonzero coefficient must sit at
/// least `max(8, span/4)` half-powers below the precision edge.
pub fn polynomial_verdict(l: &Laurent, low: i64) -> PolyVerdict {
    let Some(prec) = l.prec() else {
        return PolyVerdict::Polynomial;
    };
    let span = prec - low;
    if span < MIN_KNOWN_SPAN {
        return PolyVerdict::Inconclusive;
    }
    let guard = (span / 4).max(8);
    match l.max_exponent() {
        None => PolyVerdict::Polynomial,
        Some(hi) if prec - 1 - hi >= guard => PolyVerdict::Polynomial,
        Some(_) => PolyVerdict::NotPolynomial,
    }
}

pub fn integrality_report(q: &QuiverSpec, gamma_max: &[u32], window: u32) -> Result<Vec<Verdict>> {
    let bps = bps_series(q, gamma_max, window)?;
    Ok(bps
        .omega
        .iter()
        .map(|(g, o)| {
            let low = o.valuation().map_or(lowest_exponent(q, g), |v| v.min(lowest_exponent(q, g)));
            Verdict {
                gamma: g.clone(),
                polynomial: polynomial_verdict(o, low),
                integer_coefficients: o.is_integral(),
                support: o.valuation().zip(o.max_exponent()),
                prec: o.prec(),
            }
        })
        .collect())
}

/// `Ω_γ` has only half-powers of parity `χ(γ,γ) + 1`.
pub fn parity_consistent(q: &QuiverSpec, gamma: &[u32], omega: &Laurent) -> bool {
    let parity = (q.euler(gamma, gamma) + 1).rem_euclid(2);
    omega.terms().all(|(k, _)| k.rem_euclid(2) == parity)
}

/// Diagnostic only: `Ω(s) = Ω(s^{-1})` on the known part.
pub fn is_self_dual(omega: &Laurent) -> bool {
    omega.known_part().invert_variable().is_some_and(|m| m == omega.known_part())
}

/// Integer coefficients `(half_power, coeff)` of the known part.
pub fn omega_coefficients(o: &Laurent) -> Option<Vec<(i64, i64)>> {
    o.terms().map(|(k, c)| c.is_integer().then(|| i64::try_from(c.to_integer()).ok().map(|c| (k, c)))?).collect()
}
