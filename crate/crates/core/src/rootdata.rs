//! Root data, Weyl groups and Levi subgroups.
//!
//! A root datum lives on the cocharacter lattice `Λ_T = Z^rank`. Roots are
//! integer covectors, coroots integer vectors, and the Weyl group is realised
//! as the finite group of integer matrices generated by the simple reflections
//! `s_α(v) = v - <α, v> α^∨`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::linalg::{pair_int, IntMatrix, QVec, Subspace};
use crate::{Error, Result};

/// Enough for every supported type (|W(E6)| = 51840).
pub const DEFAULT_WEYL_BOUND: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl FromStr for CartanType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "A" => CartanType::A,
            "B" => CartanType::B,
            "C" => CartanType::C,
            "D" => CartanType::D,
            "E" => CartanType::E,
            "F" => CartanType::F,
            "G" => CartanType::G,
            other => return Err(Error::UnknownType(other.to_string())),
        })
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Isogeny {
    SimplyConnected,
    Adjoint,
    /// `GL_{n+1}` for type `A_n`: lattice `Z^{n+1}`, roots `e_i - e_j`.
    GeneralLinear,
}

impl FromStr for Isogeny {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "sc" | "simply-connected" | "simply_connected" => Isogeny::SimplyConnected,
            "ad" | "adjoint" => Isogeny::Adjoint,
            "gl" => Isogeny::GeneralLinear,
            other => return Err(Error::InvalidInput(format!("unknown isogeny `{other}`"))),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FactorSpec {
    pub kind: CartanType,
    pub rank: usize,
    pub isogeny: Isogeny,
}

impl FactorSpec {
    pub fn new(kind: CartanType, rank: usize, isogeny: Isogeny) -> Self {
        FactorSpec { kind, rank, isogeny }
    }

    /// Parse labels like `"A2"`, `"G2"`.
    pub fn parse(label: &str, isogeny: Isogeny) -> Result<Self> {
        let (head, tail) = label.split_at(label.chars().next().map_or(0, |c| c.len_utf8()));
        let kind = CartanType::from_str(head)?;
        let rank = tail.parse::<usize>().map_err(|_| Error::UnknownType(label.to_string()))?;
        Ok(FactorSpec { kind, rank, isogeny })
    }

    fn validate(&self) -> Result<()> {
        use CartanType::*;
        let ok = match self.kind {
            A => self.rank >= 1,
            B => self.rank >= 2,
            C => self.rank >= 3,
            D => self.rank >= 4,
            E => self.rank == 6,
            F => self.rank == 4,
            G => self.rank == 2,
        };
        if !ok {
            return Err(match (self.kind, self.rank) {
                (E, 7 | 8) => Error::Unsupported(format!(
                    "E{} is excluded: its Weyl group is too large for full enumeration",
                    self.rank
                )),
                _ => Error::Unsupported(format!("{}{} is not in the supported table", self.kind, self.rank)),
            });
        }
        if self.isogeny == Isogeny::GeneralLinear && self.kind != A {
            return Err(Error::Unsupported(format!("GL-form requested for type {}", self.kind)));
        }
        Ok(())
    }

    /// Cartan matrix `a_ij = <α_i^∨, α_j>`.
    fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        use CartanType::*;
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
            a[i][j] = aij;
            a[j][i] = aji;
        };
        match self.kind {
            A => (0..n - 1).for_each(|i| link(i, i + 1, -1, -1)),
            B => {
                (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
                link(n - 2, n - 1, -1, -2);
            }
            C => {
                (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
                link(n - 2, n - 1, -2, -1);
            }
            D => {
                (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
                link(n - 3, n - 1, -1, -1);
            }
            E => {
                for (i, j) in [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)] {
                    link(i, j, -1, -1);
                }
            }
            F => {
                link(0, 1, -1, -1);
                link(1, 2, -2, -1);
                link(2, 3, -1, -1);
            }
            G => link(0, 1, -1, -3),
        }
        a
    }

    fn degrees(&self) -> Vec<u32> {
        use CartanType::*;
        let n = self.rank as u32;
        match (self.kind, self.isogeny) {
            (A, Isogeny::GeneralLinear) => (1..=n + 1).collect(),
            (A, _) => (2..=n + 1).collect(),
            (B | C, _) => (1..=n).map(|k| 2 * k).collect(),
            (D, _) => {
                let mut d: Vec<u32> = (1..n).map(|k| 2 * k).collect();
                d.push(n);
                d.sort_unstable();
                d
            }
            (E, _) => vec![2, 5, 6, 8, 9, 12],
            (F, _) => vec![2, 6, 8, 12],
            (G, _) => vec![2, 6],
        }
    }

    fn lattice_rank(&self) -> usize {
        match self.isogeny {
            Isogeny::GeneralLinear => self.rank + 1,
            _ => self.rank,
        }
    }

    fn label(&self) -> String {
        match self.isogeny {
            Isogeny::GeneralLinear => format!("gl_{}", self.rank + 1),
            Isogeny::SimplyConnected => format!("{}{}(sc)", self.kind, self.rank),
            Isogeny::Adjoint => format!("{}{}(ad)", self.kind, self.rank),
        }
    }

    /// Simple roots (covectors) and simple coroots (vectors) in the factor's own lattice.
    fn simple_system(&self) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
        let n = self.rank;
        let a = self.cartan_matrix();
        match self.isogeny {
            Isogeny::SimplyConnected => {
                let roots = (0..n).map(|j| (0..n).map(|i| a[i][j]).collect()).collect();
                let coroots = (0..n).map(|i| unit(n, i)).collect();
                (roots, coroots)
            }
            Isogeny::Adjoint => {
                let roots = (0..n).map(|j| unit(n, j)).collect();
                let coroots = a.clone();
                (roots, coroots)
            }
            Isogeny::GeneralLinear => {
                let m = n + 1;
                let v: Vec<Vec<i64>> = (0..n)
                    .map(|i| {
                        let mut e = vec![0; m];
                        e[i] = 1;
                        e[i + 1] = -1;
                        e
                    })
                    .collect();
                (v.clone(), v)
            }
        }
    }
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut e = vec![0; n];
    e[i] = 1;
    e
}

/// Declarative description of a connected reductive group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GroupSpec {
    pub factors: Vec<FactorSpec>,
    pub central_torus: usize,
}

impl GroupSpec {
    pub fn torus(rank: usize) -> Self {
        GroupSpec { factors: vec![], central_torus: rank }
    }

    pub fn simple(kind: CartanType, rank: usize, isogeny: Isogeny) -> Self {
        GroupSpec { factors: vec![FactorSpec::new(kind, rank, isogeny)], central_torus: 0 }
    }

    pub fn gl(n: usize) -> Self {
        if n == 1 {
            return Self::torus(1);
        }
        Self::simple(CartanType::A, n - 1, Isogeny::GeneralLinear)
    }
}

/// Root datum of a connected reductive group on `Λ_T = Z^rank`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDatum {
    rank: usize,
    roots: Vec<Vec<i64>>,
    coroots: Vec<Vec<i64>>,
    positive: Vec<bool>,
    /// Coefficients of each root in the basis of simple roots.
    simple_coeffs: Vec<Vec<i64>>,
    simple: Vec<usize>,
    degrees: Vec<u32>,
    label: String,
    spec: GroupSpec,
}

pub fn build_root_datum(spec: &GroupSpec) -> Result<RootDatum> {
    RootDatum::new(spec)
}

impl RootDatum {
    pub fn new(spec: &GroupSpec) -> Result<Self> {
        for f in &spec.factors {
            f.validate()?;
        }
        let rank: usize = spec.factors.iter().map(|f| f.lattice_rank()).sum::<usize>() + spec.central_torus;
        let mut simple_roots = Vec::new();
        let mut simple_coroots = Vec::new();
        let mut degrees = Vec::new();
        let mut offset = 0;
        for f in &spec.factors {
            let (r, c) = f.simple_system();
            let m = f.lattice_rank();
            let embed = |v: &Vec<i64>| {
                let mut e = vec![0; rank];
                e[offset..offset + m].copy_from_slice(v);
                e
            };
            simple_roots.extend(r.iter().map(embed));
            simple_coroots.extend(c.iter().map(embed));
            degrees.extend(f.degrees());
            offset += m;
        }
        degrees.extend(std::iter::repeat(1).take(spec.central_torus));
        degrees.sort_unstable();

        let mut labels: Vec<String> = spec.factors.iter().map(|f| f.label()).collect();
        if spec.central_torus > 0 {
            labels.push(format!("T^{}", spec.central_torus));
        }
        let label = if labels.is_empty() { "trivial".to_string() } else { labels.join(" x ") };

        let (roots, coroots, simple_coeffs) = close_roots(&simple_roots, &simple_coroots);
        let positive = simple_coeffs.iter().map(|c| c.iter().all(|&x| x >= 0)).collect();
        let simple = (0..simple_roots.len()).collect();
        let rd =
            RootDatum { rank, roots, coroots, positive, simple_coeffs, simple, degrees, label, spec: spec.clone() };
        rd.check_axioms()?;
        Ok(rd)
    }

    fn check_axioms(&self) -> Result<()> {
        let set: HashSet<&Vec<i64>> = self.roots.iter().collect();
        for (a, c) in self.roots.iter().zip(&self.coroots) {
            if pair_int(a, c) != 2 {
                return Err(Error::Invariant(format!("<α, α^∨> != 2 for {a:?}")));
            }
            let neg: Vec<i64> = a.iter().map(|x| -x).collect();
            if !set.contains(&neg) {
                return Err(Error::Invariant(format!("root set not closed under negation at {a:?}")));
            }
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn coroots(&self) -> &[Vec<i64>] {
        &self.coroots
    }

    pub fn is_positive(&self, i: usize) -> bool {
        self.positive[i]
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = &Vec<i64>> {
        self.roots.iter().zip(&self.positive).filter(|(_, p)| **p).map(|(r, _)| r)
    }

    pub fn positive_coroots(&self) -> impl Iterator<Item = &Vec<i64>> {
        self.coroots.iter().zip(&self.positive).filter(|(_, p)| **p).map(|(r, _)| r)
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive.iter().filter(|p| **p).count()
    }

    /// Indices (into [`roots`](Self::roots)) of the simple roots.
    pub fn simple_roots(&self) -> &[usize] {
        &self.simple
    }

    pub fn simple_root(&self, i: usize) -> &[i64] {
        &self.roots[self.simple[i]]
    }

    pub fn simple_coroot(&self, i: usize) -> &[i64] {
        &self.coroots[self.simple[i]]
    }

    pub fn semisimple_rank(&self) -> usize {
        self.simple.len()
    }

    pub fn root_coefficients(&self, i: usize) -> &[i64] {
        &self.simple_coeffs[i]
    }

    /// The pairing table `<α_i, α_j^∨>` over all roots.
    pub fn pairing(&self, i: usize, j: usize) -> i64 {
        pair_int(&self.roots[i], &self.coroots[j])
    }

    pub fn root_index(&self, root: &[i64]) -> Option<usize> {
        self.roots.iter().position(|r| r.as_slice() == root)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn simple_reflection(&self, i: usize) -> IntMatrix {
        IntMatrix::reflection(self.simple_root(i), self.simple_coroot(i))
    }

    pub fn reflection(&self, root_index: usize) -> IntMatrix {
        IntMatrix::reflection(&self.roots[root_index], &self.coroots[root_index])
    }

    /// `2ρ^∨`, the sum of the positive coroots.
    pub fn two_rho_check(&self) -> Vec<i64> {
        let mut v = vec![0; self.rank];
        for c in self.positive_coroots() {
            for (x, y) in v.iter_mut().zip(c) {
                *x += y;
            }
        }
        v
    }

    /// `2ρ`, the sum of the positive roots.
    pub fn two_rho(&self) -> Vec<i64> {
        let mut v = vec![0; self.rank];
        for c in self.positive_roots() {
            for (x, y) in v.iter_mut().zip(c) {
                *x += y;
            }
        }
        v
    }

    pub fn is_dominant(&self, weight: &[i64]) -> bool {
        (0..self.semisimple_rank()).all(|i| pair_int(weight, self.simple_coroot(i)) >= 0)
    }

    /// The dominant representative of the W-orbit of a covector.
    pub fn dominant(&self, weight: &[i64]) -> Vec<i64> {
        let mut w = weight.to_vec();
        'outer: loop {
            for i in 0..self.semisimple_rank() {
                let k = pair_int(&w, self.simple_coroot(i));
                if k < 0 {
                    for (x, a) in w.iter_mut().zip(self.simple_root(i)) {
                        *x -= k * a;
                    }
                    continue 'outer;
                }
            }
            return w;
        }
    }

    /// Reflect a covector by the simple reflection `s_i`.
    pub fn reflect_covector(&self, i: usize, weight: &[i64]) -> Vec<i64> {
        let k = pair_int(weight, self.simple_coroot(i));
        weight.iter().zip(self.simple_root(i)).map(|(x, a)| x - k * a).collect()
    }

    /// Vectors spanning the central subspace `{v : α(v) = 0 for all roots}`.
    pub fn center(&self) -> Subspace {
        let mut s = Subspace::full(self.rank);
        for r in &self.roots {
            s = s.intersect_kernel(r);
        }
        s
    }
}

impl fmt::Display for RootDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (rank {}, {} roots)", self.label, self.rank, self.roots.len())
    }
}

/// Close the simple system under simple reflections.
/// Returns (roots, coroots, coefficients in simple roots), simple ones first,
/// then remaining positive roots by height, then negatives.
fn close_roots(sr: &[Vec<i64>], sc: &[Vec<i64>]) -> (Vec<Vec<i64>>, Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let l = sr.len();
    let mut seen: HashMap<Vec<i64>, (Vec<i64>, Vec<i64>)> = HashMap::new();
    let mut queue = VecDeque::new();
    for i in 0..l {
        let coeff = unit(l, i);
        seen.insert(sr[i].clone(), (sc[i].clone(), coeff.clone()));
        queue.push_back((sr[i].clone(), sc[i].clone(), coeff));
    }
    while let Some((r, c, k)) = queue.pop_front() {
        for i in 0..l {
            let m = pair_int(&r, &sc[i]);
            let n = pair_int(&sr[i], &c);
            let r2: Vec<i64> = r.iter().zip(&sr[i]).map(|(x, a)| x - m * a).collect();
            let c2: Vec<i64> = c.iter().zip(&sc[i]).map(|(x, a)| x - n * a).collect();
            let mut k2 = k.clone();
            k2[i] -= m;
            if !seen.contains_key(&r2) {
                seen.insert(r2.clone(), (c2.clone(), k2.clone()));
                queue.push_back((r2, c2, k2));
            }
        }
    }
    let mut all: Vec<(Vec<i64>, Vec<i64>, Vec<i64>)> = seen.into_iter().map(|(r, (c, k))| (r, c, k)).collect();
    all.sort_by(|a, b| {
        let key = |k: &Vec<i64>| {
            let h: i64 = k.iter().sum();
            let simple = h == 1 && k.iter().all(|&x| x >= 0);
            let simple_idx = k.iter().position(|&x| x == 1).unwrap_or(0);
            (h < 0, !simple, if simple { simple_idx as i64 } else { h.abs() }, k.clone())
        };
        key(&a.2).cmp(&key(&b.2))
    });
    let roots = all.iter().map(|x| x.0.clone()).collect();
    let coroots = all.iter().map(|x| x.1.clone()).collect();
    let coeffs = all.iter().map(|x| x.2.clone()).collect();
    (roots, coroots, coeffs)
}

/// An element of the Weyl group acting on `Λ_T` by `v ↦ M v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    pub matrix: IntMatrix,
    pub inverse: IntMatrix,
    /// Word in the generators used to build the group (reduced for `W`).
    pub word: Vec<usize>,
}

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        WeylElement { matrix: IntMatrix::identity(n), inverse: IntMatrix::identity(n), word: vec![] }
    }

    pub fn act_vector(&self, v: &[i64]) -> Vec<i64> {
        self.matrix.apply(v)
    }

    pub fn act_vector_q(&self, v: &[crate::Rat]) -> QVec {
        self.matrix.apply_q(v)
    }

    /// Contragredient action on covectors, `γ ↦ γ ∘ w^{-1}`.
    pub fn act_covector(&self, cov: &[i64]) -> Vec<i64> {
        self.inverse.covector_times(cov)
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }
}

/// Breadth-first closure of a set of involutive generators.
fn closure(n: usize, gens: &[IntMatrix], bound: usize) -> Result<Vec<WeylElement>> {
    let mut seen: HashSet<IntMatrix> = HashSet::new();
    let id = WeylElement::identity(n);
    seen.insert(id.matrix.clone());
    let mut out = vec![id];
    let mut head = 0;
    while head < out.len() {
        let w = out[head].clone();
        head += 1;
        for (i, g) in gens.iter().enumerate() {
            let m = g.mul(&w.matrix);
            if seen.insert(m.clone()) {
                if out.len() >= bound {
                    return Err(Error::WeylBoundExceeded { bound });
                }
                let mut word = vec![i];
                word.extend(&w.word);
                out.push(WeylElement { matrix: m, inverse: w.inverse.mul(g), word });
            }
        }
    }
    Ok(out)
}

/// The Weyl group, enumerated once.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    elements: Vec<WeylElement>,
}

impl WeylGroup {
    pub fn new(rd: &RootDatum) -> Result<Self> {
        Ok(WeylGroup { elements: weyl_elements(rd, DEFAULT_WEYL_BOUND)? })
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, WeylElement> {
        self.elements.iter()
    }
}

/// All elements of `W`, by breadth-first closure under simple reflections.
pub fn weyl_elements(rd: &RootDatum, bound: usize) -> Result<Vec<WeylElement>> {
    let gens: Vec<IntMatrix> = (0..rd.semisimple_rank()).map(|i| rd.simple_reflection(i)).collect();
    closure(rd.rank(), &gens, bound)
}

/// Like [`weyl_elements`] but returns the first `bound` elements instead of failing.
pub fn weyl_elements_truncated(rd: &RootDatum, bound: usize) -> Vec<WeylElement> {
    let gens: Vec<IntMatrix> = (0..rd.semisimple_rank()).map(|i| rd.simple_reflection(i)).collect();
    match closure(rd.rank(), &gens, bound) {
        Ok(all) => all,
        Err(_) => {
            // Re-run and cut: the closure order is deterministic.
            let mut seen = HashSet::new();
            let mut out = vec![WeylElement::identity(rd.rank())];
            seen.insert(out[0].matrix.clone());
            let mut head = 0;
            while head < out.len() && out.len() < bound {
                let w = out[head].clone();
                head += 1;
                for (i, g) in gens.iter().enumerate() {
                    let m = g.mul(&w.matrix);
                    if out.len() < bound && seen.insert(m.clone()) {
                        let mut word = vec![i];
                        word.extend(&w.word);
                        out.push(WeylElement { matrix: m, inverse: w.inverse.mul(g), word });
                    }
                }
            }
            out
        }
    }
}

pub fn fundamental_degrees(rd: &RootDatum) -> Vec<u32> {
    rd.degrees.clone()
}

/// The Levi subgroup attached to a rational subspace `F ⊂ Λ_T ⊗ Q`.
#[derive(Debug, Clone)]
pub struct LeviDatum {
    pub face: Subspace,
    /// Indices of the roots vanishing on `F`.
    pub roots: Vec<usize>,
    /// `W_L`, generated by the reflections in those roots.
    pub weyl: Vec<WeylElement>,
}

impl LeviDatum {
    pub fn weyl_order(&self) -> usize {
        self.weyl.len()
    }

    pub fn coroots<'a>(&'a self, rd: &'a RootDatum) -> impl Iterator<Item = &'a Vec<i64>> + 'a {
        self.roots.iter().map(move |&i| &rd.coroots()[i])
    }
}

pub fn levi_of_subspace(rd: &RootDatum, face: &Subspace) -> Result<LeviDatum> {
    let roots: Vec<usize> = (0..rd.roots().len()).filter(|&i| face.annihilated_by(&rd.roots()[i])).collect();
    let gens: Vec<IntMatrix> = roots.iter().filter(|&&i| rd.is_positive(i)).map(|&i| rd.reflection(i)).collect();
    let weyl = closure(rd.rank(), &gens, DEFAULT_WEYL_BOUND)?;
    Ok(LeviDatum { face: face.clone(), roots, weyl })
}

/// An element of `W_stab(F) / W_fix(F)`, acting on `F`.
#[derive(Debug, Clone)]
pub struct AutElement {
    /// Matrix of the action on `F` in echelon coordinates: column `j` holds the
    /// coordinates of `w b_j`.
    pub on_face: Vec<QVec>,
    /// A Weyl element inducing it.
    pub representative: WeylElement,
}

impl AutElement {
    pub fn is_identity(&self) -> bool {
        self.on_face
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, x)| if i == j { *x == crate::rat(1) } else { x.is_zero() }))
    }
}

#[derive(Debug, Clone)]
pub struct RelativeWeyl {
    pub elements: Vec<AutElement>,
    pub stabilizer_order: usize,
    pub fixer_order: usize,
}

impl RelativeWeyl {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Index of the element whose action on `F` equals `m`.
    pub fn index_of(&self, m: &[QVec]) -> Option<usize> {
        self.elements.iter().position(|e| e.on_face == m)
    }

    /// Index of the product `a · b` (apply `b` first).
    pub fn compose(&self, a: usize, b: usize) -> usize {
        let prod = mat_mul(&self.elements[a].on_face, &self.elements[b].on_face);
        self.index_of(&prod).expect("relative Weyl group not closed under composition")
    }
}

pub(crate) fn mat_mul(a: &[QVec], b: &[QVec]) -> Vec<QVec> {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).fold(crate::Rat::zero(), |acc, k| acc + &a[i][k] * &b[k][j])).collect())
        .collect()
}

/// `W_stab(F) / W_fix(F)` realised as its image in `GL(F)`.
pub fn relative_weyl(w: &WeylGroup, face: &Subspace) -> RelativeWeyl {
    let mut elements: Vec<AutElement> = Vec::new();
    let mut stab = 0;
    let mut fix = 0;
    for g in w.iter() {
        if face.image(&g.matrix) != *face {
            continue;
        }
        stab += 1;
        let cols: Vec<QVec> =
            face.basis().iter().map(|b| face.coords(&g.act_vector_q(b)).expect("stabilizer maps F into F")).collect();
        let k = face.dim();
        let on_face: Vec<QVec> = (0..k).map(|i| (0..k).map(|j| cols[j][i].clone()).collect()).collect();
        let e = AutElement { on_face, representative: g.clone() };
        if e.is_identity() {
            fix += 1;
        }
        if !elements.iter().any(|x| x.on_face == e.on_face) {
            elements.push(e);
        }
    }
    RelativeWeyl { elements, stabilizer_order: stab, fixer_order: fix }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rd(kind: CartanType, rank: usize, iso: Isogeny) -> RootDatum {
        RootDatum::new(&GroupSpec::simple(kind, rank, iso)).unwrap()
    }

    #[test]
    fn a1_simply_connected() {
        let a1 = rd(CartanType::A, 1, Isogeny::SimplyConnected);
        assert_eq!(a1.num_positive_roots(), 1);
        assert_eq!(WeylGroup::new(&a1).unwrap().order(), 2);
        assert_eq!(fundamental_degrees(&a1), vec![2]);
        assert_eq!(a1.roots()[0], vec![2]);
    }

    #[test]
    fn gl3() {
        let g = RootDatum::new(&GroupSpec::gl(3)).unwrap();
        assert_eq!(g.rank(), 3);
        assert_eq!(g.num_positive_roots(), 3);
        assert_eq!(WeylGroup::new(&g).unwrap().order(), 6);
        assert_eq!(fundamental_degrees(&g), vec![1, 2, 3]);
        assert!(g.roots().contains(&vec![1, 0, -1]));
    }

    #[test]
    fn b2_adjoint_closure() {
        let b2 = rd(CartanType::B, 2, Isogeny::Adjoint);
        assert_eq!(b2.num_positive_roots(), 4);
        assert_eq!(WeylGroup::new(&b2).unwrap().order(), 8);
        assert_eq!(fundamental_degrees(&b2), vec![2, 4]);
    }

    #[test]
    fn weyl_orders() {
        let gl4 = RootDatum::new(&GroupSpec::gl(4)).unwrap();
        assert_eq!(WeylGroup::new(&gl4).unwrap().order(), 24);
        let g2 = rd(CartanType::G, 2, Isogeny::SimplyConnected);
        assert_eq!(WeylGroup::new(&g2).unwrap().order(), 12);
        assert_eq!(g2.roots().len(), 12);
    }

    #[test]
    fn rejects_unsupported() {
        let e8 = RootDatum::new(&GroupSpec::simple(CartanType::E, 8, Isogeny::SimplyConnected));
        assert!(matches!(e8, Err(Error::Unsupported(msg)) if msg.contains("E8")));
        assert!(matches!(FactorSpec::parse("X3", Isogeny::Adjoint), Err(Error::UnknownType(_))));
        assert!(RootDatum::new(&GroupSpec::simple(CartanType::C, 2, Isogeny::Adjoint)).is_err());
        assert!(RootDatum::new(&GroupSpec::simple(CartanType::B, 3, Isogeny::GeneralLinear)).is_err());
    }

    #[test]
    fn weyl_bound_is_enforced() {
        let a3 = rd(CartanType::A, 3, Isogeny::SimplyConnected);
        assert_eq!(weyl_elements(&a3, 10), Err(Error::WeylBoundExceeded { bound: 10 }));
        assert_eq!(weyl_elements_truncated(&a3, 10).len(), 10);
    }

    #[test]
    fn levi_examples() {
        let gl3 = RootDatum::new(&GroupSpec::gl(3)).unwrap();
        let l = levi_of_subspace(&gl3, &Subspace::span_int(3, &[vec![1, 1, 0]])).unwrap();
        let mut roots: Vec<Vec<i64>> = l.roots.iter().map(|&i| gl3.roots()[i].clone()).collect();
        roots.sort();
        assert_eq!(roots, vec![vec![-1, 1, 0], vec![1, -1, 0]]);
        assert_eq!(l.weyl_order(), 2);

        let center = levi_of_subspace(&gl3, &Subspace::span_int(3, &[vec![1, 1, 1]])).unwrap();
        assert_eq!(center.roots.len(), 6);
        assert_eq!(center.weyl_order(), 6);

        let sl2 = rd(CartanType::A, 1, Isogeny::SimplyConnected);
        let t = levi_of_subspace(&sl2, &Subspace::span_int(1, &[sl2.coroots()[0].clone()])).unwrap();
        assert!(t.roots.is_empty());
        assert_eq!(t.weyl_order(), 1);
    }

    #[test]
    fn relative_weyl_examples() {
        let gl4 = RootDatum::new(&GroupSpec::gl(4)).unwrap();
        let w = WeylGroup::new(&gl4).unwrap();
        let f = Subspace::span_int(4, &[vec![1, 1, 0, 0], vec![0, 0, 1, 1]]);
        let rel = relative_weyl(&w, &f);
        assert_eq!(rel.order(), 2);
        assert_eq!((rel.stabilizer_order, rel.fixer_order), (8, 4));

        let gl2 = RootDatum::new(&GroupSpec::gl(2)).unwrap();
        let w2 = WeylGroup::new(&gl2).unwrap();
        assert_eq!(relative_weyl(&w2, &Subspace::span_int(2, &[vec![1, 1]])).order(), 1);
        assert_eq!(relative_weyl(&w2, &Subspace::full(2)).order(), 2);
    }

    #[test]
    fn dominant_representative() {
        let gl3 = RootDatum::new(&GroupSpec::gl(3)).unwrap();
        assert_eq!(gl3.dominant(&[0, 0, 1]), vec![1, 0, 0]);
        assert_eq!(gl3.dominant(&[-1, 0, 0]), vec![0, 0, -1]);
    }
}
