//! The component lattice of a quotient `V/G` in combinatorial form.
//!
//! Faces are rational subspaces of `Λ_T ⊗ Q` cut out by the hyperplanes dual to
//! the nonzero weights of `V` and to the roots. Each face carries its cotangent
//! arrangement, whose regions are the chambers. All geometry is exact.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_traits::{One, Signed, Zero};

use crate::linalg::{kernel, normalize_hyperplane, pair, to_qvec, QVec, Subspace};
use crate::repsym::WeightMultiset;
use crate::rootdata::{relative_weyl, RelativeWeyl, RootDatum, WeylGroup};
use crate::{Error, Rat, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Provenance {
    Weight,
    Root,
    /// Dual to both a weight of `V` and a root.
    Both,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hyperplane {
    /// Primitive integer covector, first nonzero entry positive.
    pub covector: Vec<i64>,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    rank: usize,
    hyperplanes: Vec<Hyperplane>,
}

impl Arrangement {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn covectors(&self) -> Vec<Vec<i64>> {
        self.hyperplanes.iter().map(|h| h.covector.clone()).collect()
    }
}

pub fn arrangement(rd: &RootDatum, v: &WeightMultiset) -> Arrangement {
    let mut map: BTreeMap<Vec<i64>, Provenance> = BTreeMap::new();
    let mut insert = |cov: &[i64], p: Provenance| {
        if cov.iter().all(|&x| x == 0) {
            return;
        }
        let key = normalize_hyperplane(&to_qvec(cov));
        map.entry(key)
            .and_modify(|old| {
                if *old != p {
                    *old = Provenance::Both;
                }
            })
            .or_insert(p);
    };
    for (w, _) in v.iter() {
        insert(w, Provenance::Weight);
    }
    for r in rd.roots() {
        insert(r, Provenance::Root);
    }
    Arrangement {
        rank: rd.rank(),
        hyperplanes: map.into_iter().map(|(covector, provenance)| Hyperplane { covector, provenance }).collect(),
    }
}

/// Signed cotangent weights of `V/G`: weights of `V^∨` with `+1`, roots with `-1`,
/// and the zero weights of `g` with `-rank`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CotangentClass {
    pub terms: BTreeMap<Vec<i64>, i64>,
}

impl CotangentClass {
    pub fn new(rd: &RootDatum, v: &WeightMultiset) -> Self {
        let mut terms: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
        let mut add = |w: Vec<i64>, c: i64| {
            *terms.entry(w).or_insert(0) += c;
        };
        for (w, m) in v.dual().iter() {
            add(w.clone(), m);
        }
        for r in rd.roots() {
            add(r.clone(), -1);
        }
        add(vec![0; rd.rank()], -(rd.rank() as i64));
        terms.retain(|_, c| *c != 0);
        CotangentClass { terms }
    }

    /// `dim V - dim G`.
    pub fn signed_rank(&self) -> i64 {
        self.terms.values().sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    subspace: Subspace,
    /// Indices of arrangement hyperplanes containing the face.
    hyperplanes: Vec<usize>,
    /// Distinct nonzero restrictions of cotangent covectors, in echelon coordinates
    /// of the face, normalized as primitive integer covectors.
    cotangent: Vec<Vec<i64>>,
}

impl Face {
    pub fn new(rd: &RootDatum, v: &WeightMultiset, subspace: Subspace) -> Self {
        let arr = arrangement(rd, v);
        let hyperplanes = (0..arr.len()).filter(|&i| subspace.annihilated_by(&arr.hyperplanes[i].covector)).collect();
        let mut set = BTreeSet::new();
        for (w, _) in v.iter().map(|(w, m)| (w.clone(), m)).chain(rd.roots().iter().map(|r| (r.clone(), 1))) {
            let r = subspace.restrict(&w);
            if r.iter().any(|x| !x.is_zero()) {
                set.insert(normalize_hyperplane(&r));
            }
        }
        Face { subspace, hyperplanes, cotangent: set.into_iter().collect() }
    }

    pub fn full(rd: &RootDatum, v: &WeightMultiset) -> Self {
        Self::new(rd, v, Subspace::full(rd.rank()))
    }

    pub fn subspace(&self) -> &Subspace {
        &self.subspace
    }

    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }

    pub fn hyperplanes(&self) -> &[usize] {
        &self.hyperplanes
    }

    pub fn cotangent_arrangement(&self) -> &[Vec<i64>] {
        &self.cotangent
    }

    /// Multiset of nonzero-or-zero restrictions `γ|_F` of the weights of `V`.
    pub fn restricted_weights(&self, v: &WeightMultiset) -> BTreeMap<QVec, i64> {
        let mut out = BTreeMap::new();
        for (w, m) in v.iter() {
            *out.entry(self.subspace.restrict(w)).or_insert(0) += m;
        }
        out
    }

    /// `dim V_γ = dim V_{-γ}` after restriction to the face.
    pub fn is_numerically_symmetric(&self, v: &WeightMultiset) -> bool {
        let r = self.restricted_weights(v);
        r.iter().all(|(w, m)| {
            let neg: QVec = w.iter().map(|x| -x).collect();
            r.get(&neg) == Some(m)
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chamber {
    face: Subspace,
    /// Interior point in ambient coordinates.
    point: QVec,
    /// Signs of the face's cotangent covectors at the point.
    signs: Vec<i8>,
}

impl Chamber {
    pub fn face(&self) -> &Subspace {
        &self.face
    }

    pub fn point(&self) -> &[Rat] {
        &self.point
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// The chamber containing `point`, which must be generic in the face.
    pub fn at_point(face: &Face, point: QVec) -> Result<Self> {
        let c = face.subspace.coords(&point).ok_or_else(|| Error::InvalidInput("point is not in the face".into()))?;
        let signs = sign_vector(&face.cotangent, &c);
        if signs.contains(&0) {
            return Err(Error::InvalidInput("point lies on a wall of the cotangent arrangement".into()));
        }
        Ok(Chamber { face: face.subspace.clone(), point, signs })
    }

    /// The opposite chamber `-σ`.
    pub fn opposite(&self) -> Chamber {
        Chamber {
            face: self.face.clone(),
            point: self.point.iter().map(|x| -x).collect(),
            signs: self.signs.iter().map(|s| -s).collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub max_dim: usize,
    pub max_hyperplanes: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { max_dim: 4, max_hyperplanes: 64 }
    }
}

fn sign_of(x: &Rat) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

fn sign_vector(hs: &[Vec<i64>], p: &[Rat]) -> Vec<i8> {
    hs.iter().map(|h| sign_of(&pair(h, p))).collect()
}

/// One interior point per region of a central arrangement of distinct,
/// normalized, nonzero covectors on `Q^k` (deletion-restriction).
pub fn region_points(k: usize, hs: &[Vec<i64>]) -> Vec<QVec> {
    let Some((h, rest)) = hs.split_last() else {
        return vec![vec![Rat::zero(); k]];
    };
    let outside = region_points(k, rest);

    // Regions of `rest` restricted to H = ker h.
    let basis = kernel(vec![to_qvec(h)], k);
    let mut restricted: BTreeSet<Vec<i64>> = BTreeSet::new();
    for g in rest {
        let r: QVec = basis.iter().map(|b| pair(g, b)).collect();
        if r.iter().any(|x| !x.is_zero()) {
            restricted.insert(normalize_hyperplane(&r));
        }
    }
    let restricted: Vec<Vec<i64>> = restricted.into_iter().collect();
    let on_h = region_points(k - 1, &restricted);

    let j = h.iter().position(|&x| x != 0).expect("zero covector in arrangement");
    let mut normal = vec![Rat::zero(); k];
    normal[j] = Rat::one();

    let mut seen: HashSet<Vec<i8>> = HashSet::new();
    let mut out = Vec::new();
    let mut push = |p: QVec, out: &mut Vec<QVec>| {
        let s = sign_vector(hs, &p);
        debug_assert!(!s.contains(&0));
        if seen.insert(s) {
            out.push(p);
        }
    };
    for p in outside {
        if !pair(h, &p).is_zero() {
            push(p, &mut out);
        }
    }
    for c in on_h {
        let q: QVec = (0..k).map(|i| basis.iter().zip(&c).fold(Rat::zero(), |acc, (b, x)| acc + &b[i] * x)).collect();
        // Stay inside the region of `rest` containing q.
        let mut eps = Rat::one();
        for g in rest {
            let gn = pair(g, &normal);
            if !gn.is_zero() {
                let bound = pair(g, &q).abs() / gn.abs();
                if bound < eps {
                    eps = bound;
                }
            }
        }
        eps /= Rat::from_integer(2.into());
        for s in [1, -1] {
            let p: QVec = q.iter().zip(&normal).map(|(x, n)| x + &eps * n * Rat::from_integer(s.into())).collect();
            push(p, &mut out);
        }
    }
    out
}

pub fn chambers_in_face(face: &Face, bounds: Bounds) -> Result<Vec<Chamber>> {
    if face.dim() > bounds.max_dim {
        return Err(Error::BoundExceeded(format!("face dimension {} > {}", face.dim(), bounds.max_dim)));
    }
    if face.cotangent.len() > bounds.max_hyperplanes {
        return Err(Error::BoundExceeded(format!(
            "{} restricted hyperplanes > {}",
            face.cotangent.len(),
            bounds.max_hyperplanes
        )));
    }
    let mut chambers: Vec<Chamber> = region_points(face.dim(), &face.cotangent)
        .into_iter()
        .map(|c| Chamber {
            face: face.subspace.clone(),
            signs: sign_vector(&face.cotangent, &c),
            point: face.subspace.from_coords(&c),
        })
        .collect();
    chambers.sort_by(|a, b| b.signs.cmp(&a.signs));
    Ok(chambers)
}

/// Cotangent distance `d(σ, σ') ∈ Z/2`, with a warning when `V` is not
/// numerically symmetric on the face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Distance {
    pub value: u8,
    pub warning: Option<String>,
}

pub fn cotangent_distance(
    rd: &RootDatum,
    v: &WeightMultiset,
    face: &Face,
    a: &Chamber,
    b: &Chamber,
) -> Result<Distance> {
    if a.face != face.subspace || b.face != face.subspace {
        return Err(Error::ChamberMismatch);
    }
    let warning = (!face.is_numerically_symmetric(v)).then(|| "V is not numerically symmetric on the face".to_string());
    Ok(Distance { value: distance_at(&CotangentClass::new(rd, v), &a.point, &b.point), warning })
}

/// `#{+ on p, - on p'}` over the signed cotangent class, mod 2.
pub fn distance_at(class: &CotangentClass, p: &[Rat], p2: &[Rat]) -> u8 {
    let mut n = 0i64;
    for (w, c) in &class.terms {
        if pair(w, p).is_positive() && pair(w, p2).is_negative() {
            n += c;
        }
    }
    n.rem_euclid(2) as u8
}

/// A character of `Aut(α)` with values `±1`, indexed like `RelativeWeyl::elements`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignCharacter {
    pub values: Vec<i8>,
    pub warning: Option<String>,
}

impl SignCharacter {
    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|&s| s == 1)
    }

    /// The character raised to an integer power.
    pub fn pow(&self, e: i64) -> SignCharacter {
        let values = self.values.iter().map(|&s| if e.rem_euclid(2) == 0 { 1 } else { s }).collect();
        SignCharacter { values, warning: self.warning.clone() }
    }
}

/// `g ↦ (-1)^{d(σ_0, g σ_0)}`, checked against every other base chamber and
/// for multiplicativity.
pub fn sign_representation(
    rd: &RootDatum,
    v: &WeightMultiset,
    face: &Face,
    aut: &RelativeWeyl,
    bounds: Bounds,
) -> Result<SignCharacter> {
    let chambers = chambers_in_face(face, bounds)?;
    let class = CotangentClass::new(rd, v);
    let character = |base: &Chamber| -> Vec<i8> {
        aut.elements
            .iter()
            .map(|g| {
                let moved = g.representative.act_vector_q(&base.point);
                if distance_at(&class, &base.point, &moved) == 0 {
                    1
                } else {
                    -1
                }
            })
            .collect()
    };
    let values = character(&chambers[0]);
    for c in &chambers[1..] {
        if character(c) != values {
            return Err(Error::ChamberDependence(format!(
                "sign character changes between base chambers {:?} and {:?}",
                chambers[0].signs, c.signs
            )));
        }
    }
    for a in 0..aut.order() {
        for b in 0..aut.order() {
            if values[aut.compose(a, b)] != values[a] * values[b] {
                return Err(Error::Invariant("sign character is not multiplicative".into()));
            }
        }
    }
    let warning = (!face.is_numerically_symmetric(v)).then(|| "V is not numerically symmetric on the face".to_string());
    Ok(SignCharacter { values, warning })
}

#[derive(Debug, Clone)]
pub struct SpecialFace {
    pub face: Face,
    pub aut: RelativeWeyl,
}

/// All intersections of arrangement hyperplanes (the full space included).
pub fn intersection_lattice(arr: &Arrangement) -> Vec<Subspace> {
    let mut seen: BTreeSet<Subspace> = BTreeSet::new();
    let full = Subspace::full(arr.rank());
    seen.insert(full.clone());
    let mut frontier = vec![full];
    while let Some(f) = frontier.pop() {
        for h in arr.hyperplanes() {
            if f.annihilated_by(&h.covector) {
                continue;
            }
            let g = f.intersect_kernel(&h.covector);
            if seen.insert(g.clone()) {
                frontier.push(g);
            }
        }
    }
    seen.into_iter().collect()
}

/// Lexicographically minimal echelon form over the W-orbit.
pub fn canonical_under(w: &WeylGroup, s: &Subspace) -> Subspace {
    w.iter().map(|g| s.image(&g.matrix)).min().expect("Weyl group contains the identity")
}

/// Special faces up to W-conjugacy, largest first.
pub fn special_faces(rd: &RootDatum, v: &WeightMultiset) -> Result<Vec<SpecialFace>> {
    let w = WeylGroup::new(rd)?;
    Ok(special_faces_with(rd, v, &w))
}

pub fn special_faces_with(rd: &RootDatum, v: &WeightMultiset, w: &WeylGroup) -> Vec<SpecialFace> {
    let arr = arrangement(rd, v);
    let classes: BTreeSet<Subspace> = intersection_lattice(&arr).iter().map(|s| canonical_under(w, s)).collect();
    let mut out: Vec<SpecialFace> =
        classes.into_iter().map(|s| SpecialFace { aut: relative_weyl(w, &s), face: Face::new(rd, v, s) }).collect();
    out.sort_by(|a, b| b.face.dim().cmp(&a.face.dim()).then_with(|| a.face.subspace.cmp(&b.face.subspace)));
    out
}

/// Dimension of the intersection of all arrangement hyperplanes.
pub fn central_rank(rd: &RootDatum, v: &WeightMultiset) -> usize {
    arrangement(rd, v)
        .hyperplanes()
        .iter()
        .fold(Subspace::full(rd.rank()), |s, h| s.intersect_kernel(&h.covector))
        .dim()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Smallness {
    pub margin: i64,
    /// Set when the inequality is an equality.
    pub equality: bool,
}

/// `dim V/T - 2 dim p^{-1}(0)` for a symmetric torus representation.
pub fn smallness_margin(weights: &WeightMultiset, bounds: Bounds) -> Result<Smallness> {
    let r = weights.rank();
    if !weights.is_numerically_symmetric() {
        return Err(Error::NotSymmetric(weights.to_string()));
    }
    if !weights.is_genuine() {
        return Err(Error::InvalidInput("negative multiplicity in a torus representation".into()));
    }
    if r > bounds.max_dim {
        return Err(Error::BoundExceeded(format!("torus rank {r} > {}", bounds.max_dim)));
    }
    let hs: BTreeSet<Vec<i64>> = weights
        .iter()
        .filter(|(w, _)| w.iter().any(|&x| x != 0))
        .map(|(w, _)| normalize_hyperplane(&to_qvec(w)))
        .collect();
    if hs.len() > bounds.max_hyperplanes {
        return Err(Error::BoundExceeded(format!("{} hyperplanes > {}", hs.len(), bounds.max_hyperplanes)));
    }
    let hs: Vec<Vec<i64>> = hs.into_iter().collect();
    let max_positive = region_points(r, &hs)
        .iter()
        .map(|p| weights.iter().filter(|(w, _)| pair(w, p).is_positive()).map(|(_, m)| m).sum::<i64>())
        .max()
        .unwrap_or(0);
    let margin = weights.dim() + r as i64 - 2 * max_positive;
    Ok(Smallness { margin, equality: margin == 0 })
}
