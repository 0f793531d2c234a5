//! Symmetric and orthogonal representations given by their weights.
//!
//! A representation is a [`WeightMultiset`]: covectors on `Λ_T` with integer
//! multiplicities. Negative multiplicities encode virtual characters.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;

use crate::linalg::pair_int;
use crate::rootdata::RootDatum;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightMultiset {
    rank: usize,
    mults: BTreeMap<Vec<i64>, i64>,
}

impl WeightMultiset {
    pub fn new(rank: usize) -> Self {
        WeightMultiset { rank, mults: BTreeMap::new() }
    }

    pub fn from_pairs(rank: usize, pairs: impl IntoIterator<Item = (Vec<i64>, i64)>) -> Self {
        let mut v = Self::new(rank);
        for (w, m) in pairs {
            v.add(w, m);
        }
        v
    }

    /// Every weight with multiplicity one.
    pub fn from_weights(rank: usize, weights: impl IntoIterator<Item = Vec<i64>>) -> Self {
        Self::from_pairs(rank, weights.into_iter().map(|w| (w, 1)))
    }

    /// The adjoint representation: every root once and the zero weight `rank` times.
    pub fn adjoint(rd: &RootDatum) -> Self {
        let mut v = Self::from_weights(rd.rank(), rd.roots().iter().cloned());
        v.add(vec![0; rd.rank()], rd.rank() as i64);
        v
    }

    pub fn add(&mut self, weight: Vec<i64>, mult: i64) {
        assert_eq!(weight.len(), self.rank, "weight of the wrong rank");
        if mult == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.mults.entry(weight) {
            Entry::Vacant(e) => {
                e.insert(mult);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += mult;
                if *e.get() == 0 {
                    e.remove();
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn mult(&self, weight: &[i64]) -> i64 {
        self.mults.get(weight).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<i64>, i64)> {
        self.mults.iter().map(|(w, m)| (w, *m))
    }

    /// Weights repeated by multiplicity; panics on virtual input.
    pub fn expanded(&self) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        for (w, m) in self.iter() {
            assert!(m >= 0, "expanded() on a virtual character");
            out.extend(std::iter::repeat(w.clone()).take(m as usize));
        }
        out
    }

    pub fn is_empty(&self) -> bool {
        self.mults.is_empty()
    }

    /// Signed total dimension.
    pub fn dim(&self) -> i64 {
        self.mults.values().sum()
    }

    pub fn is_genuine(&self) -> bool {
        self.mults.values().all(|&m| m > 0)
    }

    pub fn dual(&self) -> Self {
        Self::from_pairs(self.rank, self.iter().map(|(w, m)| (w.iter().map(|x| -x).collect(), m)))
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut v = self.clone();
        for (w, m) in other.iter() {
            v.add(w.clone(), m);
        }
        v
    }

    pub fn scaled(&self, k: i64) -> Self {
        Self::from_pairs(self.rank, self.iter().map(|(w, m)| (w.clone(), k * m)))
    }

    /// Numerical symmetry `dim V_γ = dim V_{-γ}`, without any invariance check.
    pub fn is_numerically_symmetric(&self) -> bool {
        self.iter().all(|(w, m)| {
            let neg: Vec<i64> = w.iter().map(|x| -x).collect();
            self.mult(&neg) == m
        })
    }
}

impl fmt::Display for WeightMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (w, m)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{w:?}:{m}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrrepLabel {
    pub highest_weight: Vec<i64>,
    pub multiplicity: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SelfDuality {
    Orthogonal,
    Symplectic,
    NotSelfDual,
}

impl fmt::Display for SelfDuality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SelfDuality::Orthogonal => "orthogonal",
            SelfDuality::Symplectic => "symplectic",
            SelfDuality::NotSelfDual => "not-self-dual",
        })
    }
}

/// Checks stability under the simple reflections, which generate `W`.
pub fn is_weyl_invariant(rd: &RootDatum, v: &WeightMultiset) -> bool {
    (0..rd.semisimple_rank()).all(|i| v.iter().all(|(w, m)| v.mult(&rd.reflect_covector(i, w)) == m))
}

pub fn is_symmetric(rd: &RootDatum, v: &WeightMultiset) -> Result<bool> {
    if !is_weyl_invariant(rd, v) {
        return Err(Error::NotWeylInvariant);
    }
    Ok(v.is_numerically_symmetric())
}

/// The W-orbit of a covector.
pub fn weyl_orbit(rd: &RootDatum, weight: &[i64]) -> Vec<Vec<i64>> {
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue = VecDeque::from([weight.to_vec()]);
    seen.insert(weight.to_vec());
    let mut out = vec![weight.to_vec()];
    while let Some(w) = queue.pop_front() {
        for i in 0..rd.semisimple_rank() {
            let r = rd.reflect_covector(i, &w);
            if seen.insert(r.clone()) {
                out.push(r.clone());
                queue.push_back(r);
            }
        }
    }
    out.sort();
    out
}

/// W-invariant form on covectors, `B(x, y) = Σ_{α∈Φ} <x, α^∨><y, α^∨>`.
fn form(rd: &RootDatum, x: &[i64], y: &[i64]) -> i64 {
    rd.coroots().iter().map(|c| pair_int(x, c) * pair_int(y, c)).sum()
}

/// Dominant weights of the irreducible representation with highest weight `λ`
/// and their multiplicities (Freudenthal's recursion).
pub fn dominant_character(rd: &RootDatum, lambda: &[i64]) -> BTreeMap<Vec<i64>, i64> {
    assert!(rd.is_dominant(lambda), "highest weight must be dominant");
    let pos: Vec<(Vec<i64>, Vec<i64>)> = rd
        .roots()
        .iter()
        .zip(rd.coroots())
        .enumerate()
        .filter(|(i, _)| rd.is_positive(*i))
        .map(|(_, (a, c))| (a.clone(), c.clone()))
        .collect();

    // Saturation restricted to dominant weights.
    let mut dom: HashSet<Vec<i64>> = HashSet::from([lambda.to_vec()]);
    let mut queue = VecDeque::from([lambda.to_vec()]);
    while let Some(mu) = queue.pop_front() {
        for (a, c) in &pos {
            let k = pair_int(&mu, c);
            for j in 1..=k {
                let nu: Vec<i64> = mu.iter().zip(a).map(|(x, y)| x - j * y).collect();
                let d = rd.dominant(&nu);
                if dom.insert(d.clone()) {
                    queue.push_back(d);
                }
            }
        }
    }

    let two_rho = rd.two_rho();
    let two_rho_check = rd.two_rho_check();
    let mut order: Vec<Vec<i64>> = dom.into_iter().collect();
    order.sort_by_key(|mu| (-pair_int(mu, &two_rho_check), mu.clone()));

    let shifted = |mu: &[i64]| -> Vec<i64> { mu.iter().zip(&two_rho).map(|(x, r)| 2 * x + r).collect() };
    let top = {
        let s = shifted(lambda);
        form(rd, &s, &s)
    };
    let mut mult: HashMap<Vec<i64>, i64> = HashMap::new();
    for mu in &order {
        if mu.as_slice() == lambda {
            mult.insert(mu.clone(), 1);
            continue;
        }
        let s = shifted(mu);
        let denom = top - form(rd, &s, &s);
        let mut num = 0i64;
        for (a, _) in &pos {
            let mut k = 1;
            loop {
                let nu: Vec<i64> = mu.iter().zip(a).map(|(x, y)| x + k * y).collect();
                let Some(m) = mult.get(&rd.dominant(&nu)) else { break };
                num += m * form(rd, &nu, a);
                k += 1;
            }
        }
        // Everything was scaled by 4: (2μ+2ρ) on the left, factor 2·4 on the right.
        let num = 8 * num;
        assert!(denom > 0 && num % denom == 0, "Freudenthal recursion is not integral at {mu:?}");
        mult.insert(mu.clone(), num / denom);
    }
    mult.into_iter().filter(|(_, m)| *m != 0).collect()
}

/// Full character of the irreducible representation with highest weight `λ`.
pub fn irreducible_character(rd: &RootDatum, lambda: &[i64]) -> WeightMultiset {
    let mut v = WeightMultiset::new(rd.rank());
    for (mu, m) in dominant_character(rd, lambda) {
        for w in weyl_orbit(rd, &mu) {
            v.add(w, m);
        }
    }
    v
}

fn decompose(rd: &RootDatum, v: &WeightMultiset, allow_virtual: bool) -> Result<Vec<IrrepLabel>> {
    if !is_weyl_invariant(rd, v) {
        return Err(Error::NotWeylInvariant);
    }
    let two_rho_check = rd.two_rho_check();
    let mut rest = v.clone();
    let mut out = Vec::new();
    while !rest.is_empty() {
        let lambda = rest
            .iter()
            .map(|(w, _)| w)
            .filter(|w| rd.is_dominant(w))
            .max_by_key(|w| (pair_int(w, &two_rho_check), (*w).clone()))
            .cloned()
            .ok_or_else(|| Error::Invariant("W-invariant multiset without dominant weights".into()))?;
        let c = rest.mult(&lambda);
        if c < 0 && !allow_virtual {
            return Err(Error::VirtualCharacter { weight: lambda });
        }
        rest = rest.direct_sum(&irreducible_character(rd, &lambda).scaled(-c));
        out.push(IrrepLabel { highest_weight: lambda, multiplicity: c });
    }
    out.sort();
    Ok(out)
}

/// Highest-weight decomposition of a genuine W-invariant character.
pub fn decompose_irreducibles(rd: &RootDatum, v: &WeightMultiset) -> Result<Vec<IrrepLabel>> {
    decompose(rd, v, false)
}

/// Signed decomposition of a virtual character.
pub fn decompose_virtual(rd: &RootDatum, v: &WeightMultiset) -> Result<Vec<IrrepLabel>> {
    decompose(rd, v, true)
}

/// Re-expand a decomposition into weights.
pub fn recompose(rd: &RootDatum, parts: &[IrrepLabel]) -> WeightMultiset {
    parts.iter().fold(WeightMultiset::new(rd.rank()), |acc, p| {
        acc.direct_sum(&irreducible_character(rd, &p.highest_weight).scaled(p.multiplicity))
    })
}

/// Dual test by `-w_0 λ = λ`, then the parity of `<λ, 2ρ^∨>` decides the form.
pub fn self_dual_indicator(rd: &RootDatum, lambda: &[i64]) -> SelfDuality {
    let neg: Vec<i64> = lambda.iter().map(|x| -x).collect();
    if rd.dominant(&neg) != lambda {
        return SelfDuality::NotSelfDual;
    }
    if pair_int(lambda, &rd.two_rho_check()) % 2 == 0 {
        SelfDuality::Orthogonal
    } else {
        SelfDuality::Symplectic
    }
}

fn even_symplectic(rd: &RootDatum, parts: &[IrrepLabel]) -> bool {
    parts
        .iter()
        .filter(|p| self_dual_indicator(rd, &p.highest_weight) == SelfDuality::Symplectic)
        .all(|p| p.multiplicity % 2 == 0)
}

pub fn is_orthogonal(rd: &RootDatum, v: &WeightMultiset) -> Result<bool> {
    if !is_symmetric(rd, v)? {
        return Err(Error::NotSymmetric(v.to_string()));
    }
    Ok(even_symplectic(rd, &decompose_irreducibles(rd, v)?))
}

/// Orthogonality of a virtual class: the even-multiplicity rule on the signed decomposition.
pub fn is_orthogonal_virtual(rd: &RootDatum, v: &WeightMultiset) -> Result<bool> {
    if !is_symmetric(rd, v)? {
        return Err(Error::NotSymmetric(v.to_string()));
    }
    Ok(even_symplectic(rd, &decompose_virtual(rd, v)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{CartanType, GroupSpec, Isogeny};

    fn sl2() -> RootDatum {
        RootDatum::new(&GroupSpec::simple(CartanType::A, 1, Isogeny::SimplyConnected)).unwrap()
    }

    fn gm() -> RootDatum {
        RootDatum::new(&GroupSpec::torus(1)).unwrap()
    }

    fn ws(rank: usize, pairs: &[(&[i64], i64)]) -> WeightMultiset {
        WeightMultiset::from_pairs(rank, pairs.iter().map(|(w, m)| (w.to_vec(), *m)))
    }

    // In simply-connected A1 coordinates the fundamental weight is 1 and α = 2.
    #[test]
    fn weyl_invariance() {
        let g = sl2();
        assert!(is_weyl_invariant(&g, &ws(1, &[(&[2], 1), (&[0], 1), (&[-2], 1)])));
        assert!(!is_weyl_invariant(&g, &ws(1, &[(&[2], 1)])));
        let gl2 = RootDatum::new(&GroupSpec::gl(2)).unwrap();
        assert!(is_weyl_invariant(&gl2, &ws(2, &[(&[1, 0], 1), (&[0, 1], 1)])));
    }

    #[test]
    fn symmetry() {
        assert!(is_symmetric(&sl2(), &WeightMultiset::adjoint(&sl2())).unwrap());
        assert!(!is_symmetric(&gm(), &ws(1, &[(&[1], 1)])).unwrap());
        assert!(is_symmetric(&gm(), &ws(1, &[(&[1], 2), (&[-1], 2)])).unwrap());
        assert_eq!(is_symmetric(&sl2(), &ws(1, &[(&[2], 1)])), Err(Error::NotWeylInvariant));
    }

    #[test]
    fn decompositions() {
        let g = sl2();
        let adj = decompose_irreducibles(&g, &ws(1, &[(&[2], 1), (&[0], 1), (&[-2], 1)])).unwrap();
        assert_eq!(adj, vec![IrrepLabel { highest_weight: vec![2], multiplicity: 1 }]);
        let std2 = decompose_irreducibles(&g, &ws(1, &[(&[1], 2), (&[-1], 2)])).unwrap();
        assert_eq!(std2, vec![IrrepLabel { highest_weight: vec![1], multiplicity: 2 }]);

        let gl3 = RootDatum::new(&GroupSpec::gl(3)).unwrap();
        let parts = decompose_irreducibles(&gl3, &WeightMultiset::adjoint(&gl3)).unwrap();
        assert_eq!(
            parts,
            vec![
                IrrepLabel { highest_weight: vec![0, 0, 0], multiplicity: 1 },
                IrrepLabel { highest_weight: vec![1, 0, -1], multiplicity: 1 },
            ]
        );
    }

    #[test]
    fn virtual_input_is_rejected() {
        let g = sl2();
        // V(2) - V(0): the zero weight cancels, leaving ±2 with a deficit at 0.
        let v = ws(1, &[(&[2], 1), (&[-2], 1)]);
        assert_eq!(decompose_irreducibles(&g, &v), Err(Error::VirtualCharacter { weight: vec![0] }));
        let signed = decompose_virtual(&g, &v).unwrap();
        assert_eq!(recompose(&g, &signed), v);
    }

    #[test]
    fn self_duality() {
        let g = sl2();
        assert_eq!(self_dual_indicator(&g, &[1]), SelfDuality::Symplectic);
        assert_eq!(self_dual_indicator(&g, &[2]), SelfDuality::Orthogonal);
        let sl3 = RootDatum::new(&GroupSpec::simple(CartanType::A, 2, Isogeny::SimplyConnected)).unwrap();
        assert_eq!(self_dual_indicator(&sl3, &[1, 0]), SelfDuality::NotSelfDual);
    }

    #[test]
    fn orthogonality() {
        let g = sl2();
        assert!(is_orthogonal(&g, &WeightMultiset::adjoint(&g)).unwrap());
        assert!(is_orthogonal(&g, &ws(1, &[(&[1], 2), (&[-1], 2)])).unwrap());
        assert!(!is_orthogonal(&g, &ws(1, &[(&[1], 1), (&[-1], 1)])).unwrap());
        let gl2 = RootDatum::new(&GroupSpec::gl(2)).unwrap();
        assert!(matches!(is_orthogonal(&gl2, &ws(2, &[(&[1, 0], 1), (&[0, 1], 1)])), Err(Error::NotSymmetric(_))));
    }

    #[test]
    fn freudenthal_dimensions() {
        let g2 = RootDatum::new(&GroupSpec::simple(CartanType::G, 2, Isogeny::SimplyConnected)).unwrap();
        // Fundamental representations of G2 have dimensions 7 and 14.
        assert_eq!(irreducible_character(&g2, &[1, 0]).dim() + irreducible_character(&g2, &[0, 1]).dim(), 21);
        let b2 = RootDatum::new(&GroupSpec::simple(CartanType::B, 2, Isogeny::SimplyConnected)).unwrap();
        let dims: Vec<i64> =
            [[1, 0], [0, 1], [1, 1], [0, 2]].iter().map(|l| irreducible_character(&b2, l).dim()).collect();
        let mut sorted = dims.clone();
        sorted.sort();
        assert_eq!(sorted, vec![4, 5, 10, 16]);
    }
}
