//! Cohomological Hall induction for `V/G` as an explicit Weyl sum.
//!
//! For a face `F` with Levi `L`, a chamber `σ ⊂ F` and an `W_L`-invariant
//! polynomial `f`,
//!
//! ```text
//! *_σ(f) = 1/|W_L| · Σ_{w ∈ W} w( f · ∏_{γ ∈ S⁻} t_γ / ∏_{β ∈ Φ⁻} t_β )
//! ```
//!
//! where `S⁻` and `Φ⁻` are the weights of `V` and the roots that are negative at
//! an interior point of `σ`. The sum is put over the denominator `∏_{β>0} t_β`
//! and divided out exactly.

use num_traits::{Signed, Zero};

use crate::facelat::{chambers_in_face, cotangent_distance, sign_representation, Bounds, Chamber, Face};
use crate::linalg::{pair, rank, IntMatrix, Subspace};
use crate::poly::Poly;
use crate::repsym::WeightMultiset;
use crate::rootdata::{levi_of_subspace, relative_weyl, RootDatum, WeylGroup};
use crate::series::molien_bg;
use crate::{rat, Error, Rat, Result};

/// Largest cohomological degree accepted by [`check_integrality_bg`].
pub const DEGREE_CAP: u32 = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InductionResult {
    pub output: Poly,
    /// `d_σ = #Φ⁻ - #S⁻`; cohomological degree drops by `2 d_σ`.
    pub shift: i64,
    pub face: Subspace,
    pub chamber: Chamber,
}

/// `w · p = p ∘ w^{-1}`.
pub fn act(w_inverse: &IntMatrix, p: &Poly) -> Poly {
    p.substitute(w_inverse)
}

fn invariant_under(p: &Poly, reflections: &[IntMatrix]) -> bool {
    reflections.iter().all(|s| p.substitute(s) == *p)
}

/// Checks invariance under the simple reflections, which generate `W`.
pub fn is_weyl_invariant_poly(rd: &RootDatum, p: &Poly) -> bool {
    let gens: Vec<IntMatrix> = (0..rd.semisimple_rank()).map(|i| rd.simple_reflection(i)).collect();
    invariant_under(p, &gens)
}

fn negative_at(point: &[Rat], covectors: impl IntoIterator<Item = Vec<i64>>) -> Vec<Vec<i64>> {
    covectors.into_iter().filter(|c| pair(c, point).is_negative()).collect()
}

/// `dim X_σ^+ - dim X` from the attractor: weights and roots that are
/// nonnegative at the point, against all of `V` and `g`.
pub fn attractor_shift(rd: &RootDatum, v: &WeightMultiset, point: &[Rat]) -> i64 {
    let v_plus: i64 = v.iter().filter(|(w, _)| !pair(w, point).is_negative()).map(|(_, m)| m).sum();
    let p_dim = rd.rank() as i64 + rd.roots().iter().filter(|r| !pair(r, point).is_negative()).count() as i64;
    let g_dim = rd.rank() as i64 + rd.roots().len() as i64;
    (v_plus - p_dim) - (v.dim() - g_dim)
}

pub fn induction(
    rd: &RootDatum,
    v: &WeightMultiset,
    face: &Face,
    chamber: &Chamber,
    f: &Poly,
    w: &WeylGroup,
) -> Result<InductionResult> {
    if chamber.face() != face.subspace() {
        return Err(Error::ChamberMismatch);
    }
    if f.nvars() != rd.rank() {
        return Err(Error::InvalidInput(format!("polynomial has {} variables, expected {}", f.nvars(), rd.rank())));
    }
    let levi = levi_of_subspace(rd, face.subspace())?;
    let levi_reflections: Vec<IntMatrix> = levi.roots.iter().map(|&i| rd.reflection(i)).collect();
    if !invariant_under(f, &levi_reflections) {
        return Err(Error::InvalidInput("polynomial is not invariant under the Levi Weyl group".into()));
    }

    let point = chamber.point();
    let s_minus = negative_at(point, v.expanded());
    let phi_minus = negative_at(point, rd.roots().iter().cloned());
    let shift = phi_minus.len() as i64 - s_minus.len() as i64;
    debug_assert_eq!(shift, attractor_shift(rd, v, point));

    let positive: Vec<Vec<i64>> = rd.positive_roots().cloned().collect();
    let mut numerator = Poly::zero(rd.rank());
    for g in w.iter() {
        let mut term = act(&g.inverse, f);
        for gamma in &s_minus {
            term = term.mul_linear(&g.act_covector(gamma));
        }
        // ∏_{β∈Φ⁻} t_{wβ} = ε · ∏_{δ ∈ H} t_δ with H ⊂ Φ⁺.
        let mut hit = vec![false; positive.len()];
        let mut sign = 1i64;
        for beta in &phi_minus {
            let wb = g.act_covector(beta);
            let idx = match positive.iter().position(|p| *p == wb) {
                Some(i) => i,
                None => {
                    sign = -sign;
                    let neg: Vec<i64> = wb.iter().map(|x| -x).collect();
                    positive.iter().position(|p| *p == neg).expect("W permutes the roots")
                }
            };
            hit[idx] = true;
        }
        for (i, delta) in positive.iter().enumerate() {
            if !hit[i] {
                term = term.mul_linear(delta);
            }
        }
        numerator = numerator + term.scale(&rat(sign));
    }
    let mut out = numerator;
    for beta in &positive {
        out = out.div_linear(beta).ok_or_else(|| Error::DivisionRemainder { divisor: format!("t_{beta:?}") })?;
    }
    let output = out.scale(&Rat::new(1.into(), (levi.weyl_order() as i64).into()));
    Ok(InductionResult { output, shift, face: face.subspace().clone(), chamber: chamber.clone() })
}

/// Induction along the first chamber, checked against every other chamber
/// with the sign `(-1)^{d(σ_0, σ)}`.
pub fn symmetric_induction(
    rd: &RootDatum,
    v: &WeightMultiset,
    face: &Face,
    f: &Poly,
    w: &WeylGroup,
    bounds: Bounds,
) -> Result<InductionResult> {
    let aut = relative_weyl(w, face.subspace());
    let sign = sign_representation(rd, v, face, &aut, bounds)?;
    for (g, &s) in aut.elements.iter().zip(&sign.values) {
        if act(&g.representative.inverse, f) != f.scale(&rat(s as i64)) {
            return Err(Error::NotIsotypic(format!(
                "g·f != {s}·f for the element with word {:?}",
                g.representative.word
            )));
        }
    }
    let chambers = chambers_in_face(face, bounds)?;
    let base = induction(rd, v, face, &chambers[0], f, w)?;
    for c in &chambers[1..] {
        let d = cotangent_distance(rd, v, face, &chambers[0], c)?.value;
        let other = induction(rd, v, face, c, f, w)?;
        let signed = if d == 0 { other.output } else { -&other.output };
        if signed != base.output {
            return Err(Error::ChamberDependence(format!(
                "chambers {:?} and {:?} disagree: {} vs {}",
                chambers[0].signs(),
                c.signs(),
                base.output,
                signed
            )));
        }
    }
    Ok(base)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeReport {
    /// Cohomological degree of the source.
    pub degree: u32,
    pub source_dim: usize,
    pub image_dim: usize,
    /// Coefficient of the Molien product over the fundamental degrees.
    pub target_dim: usize,
    pub image_invariant: bool,
}

impl DegreeReport {
    pub fn passes(&self) -> bool {
        self.image_invariant && self.source_dim == self.image_dim && self.image_dim == self.target_dim
    }
}

fn coefficient_rank(polys: &[Poly], n: usize, degree: u32) -> usize {
    let monos = Poly::monomials_of_degree(n, degree);
    let rows = polys.iter().map(|p| monos.iter().map(|m| p.coeff(m)).collect()).collect();
    rank(rows)
}

/// Degree-by-degree check that induction from the maximal face of `g/G`
/// maps the sign-isotypic part of `Q[h]` onto `H*(BG)`.
pub fn check_integrality_bg(rd: &RootDatum, degree_bound: u32) -> Result<Vec<DegreeReport>> {
    if degree_bound % 2 != 0 || degree_bound > DEGREE_CAP {
        return Err(Error::InvalidInput(format!("degree bound must be even and at most {DEGREE_CAP}")));
    }
    let w = WeylGroup::new(rd)?;
    let v = WeightMultiset::adjoint(rd);
    let face = Face::full(rd, &v);
    let aut = relative_weyl(&w, face.subspace());
    let sign = sign_representation(rd, &v, &face, &aut, Bounds::default())?;
    let chamber = chambers_in_face(&face, Bounds::default())?.remove(0);
    let n = rd.rank();
    let max_p = degree_bound / 2;
    let molien = molien_bg(&crate::rootdata::fundamental_degrees(rd), max_p as i64 + 1);

    let mut out = Vec::new();
    for p in 0..=max_p {
        let mut source = Vec::new();
        for m in Poly::monomials_of_degree(n, p) {
            let mono = Poly::monomial(n, m, rat(1));
            let mut proj = Poly::zero(n);
            for (g, &s) in aut.elements.iter().zip(&sign.values) {
                proj = proj + act(&g.representative.inverse, &mono).scale(&rat(s as i64));
            }
            if !proj.is_zero() {
                source.push(proj);
            }
        }
        let source_dim = coefficient_rank(&source, n, p);
        let mut images = Vec::new();
        let mut shift = 0;
        for f in &source {
            let r = induction(rd, &v, &face, &chamber, f, &w)?;
            shift = r.shift;
            images.push(r.output);
        }
        let image_invariant = images.iter().all(|q| is_weyl_invariant_poly(rd, q));
        let out_degree = p as i64 - shift;
        let image_dim = if out_degree < 0 { 0 } else { coefficient_rank(&images, n, out_degree as u32) };
        let target = molien.coeff(out_degree.max(0));
        let target_dim = if out_degree < 0 || target.is_zero() {
            0
        } else {
            target.to_integer().try_into().map_err(|_| Error::Invariant("Molien coefficient overflow".into()))?
        };
        out.push(DegreeReport { degree: 2 * p, source_dim, image_dim, target_dim, image_invariant });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{CartanType, GroupSpec, Isogeny};

    fn sl2_adjoint_coords() -> RootDatum {
        RootDatum::new(&GroupSpec::simple(CartanType::A, 1, Isogeny::Adjoint)).unwrap()
    }

    fn x(n: usize, i: usize) -> Poly {
        Poly::var(n, i)
    }

    #[test]
    fn sl2_examples() {
        let rd = sl2_adjoint_coords();
        let w = WeylGroup::new(&rd).unwrap();
        let v = WeightMultiset::new(1);
        let face = Face::full(&rd, &v);
        let positive = Chamber::at_point(&face, vec![rat(1)]).unwrap();
        let r = induction(&rd, &v, &face, &positive, &x(1, 0), &w).unwrap();
        assert_eq!(r.output, Poly::constant(1, rat(-2)));
        assert_eq!(r.shift, 1);
        let r = induction(&rd, &v, &face, &positive, &Poly::one(1), &w).unwrap();
        assert!(r.output.is_zero());
    }

    #[test]
    fn simply_connected_sl2_halves_the_value() {
        let rd = RootDatum::new(&GroupSpec::simple(CartanType::A, 1, Isogeny::SimplyConnected)).unwrap();
        let w = WeylGroup::new(&rd).unwrap();
        let v = WeightMultiset::new(1);
        let face = Face::full(&rd, &v);
        let positive = Chamber::at_point(&face, vec![rat(1)]).unwrap();
        let r = induction(&rd, &v, &face, &positive, &x(1, 0), &w).unwrap();
        assert_eq!(r.output, Poly::constant(1, rat(-1)));
    }

    #[test]
    fn gl2_torus_face() {
        let rd = RootDatum::new(&GroupSpec::gl(2)).unwrap();
        let w = WeylGroup::new(&rd).unwrap();
        let v = WeightMultiset::new(2);
        let face = Face::full(&rd, &v);
        let dominant = Chamber::at_point(&face, vec![rat(1), rat(0)]).unwrap();
        let r = induction(&rd, &v, &face, &dominant, &x(2, 0), &w).unwrap();
        assert_eq!(r.output, Poly::constant(2, rat(-1)));
        assert_eq!(r.shift, 1);
    }

    #[test]
    fn symmetric_examples() {
        let rd = sl2_adjoint_coords();
        let w = WeylGroup::new(&rd).unwrap();
        let v = WeightMultiset::new(1);
        let face = Face::full(&rd, &v);
        let r = symmetric_induction(&rd, &v, &face, &x(1, 0), &w, Bounds::default()).unwrap();
        assert_eq!(r.output, Poly::constant(1, rat(-2)));
        let r = symmetric_induction(&rd, &v, &face, &Poly::zero(1), &w, Bounds::default()).unwrap();
        assert!(r.output.is_zero());
        assert!(matches!(
            symmetric_induction(&rd, &v, &face, &Poly::one(1), &w, Bounds::default()),
            Err(Error::NotIsotypic(_))
        ));

        let gl2 = RootDatum::new(&GroupSpec::gl(2)).unwrap();
        let w2 = WeylGroup::new(&gl2).unwrap();
        let adj = WeightMultiset::adjoint(&gl2);
        let face = Face::full(&gl2, &adj);
        let r = symmetric_induction(&gl2, &adj, &face, &Poly::one(2), &w2, Bounds::default()).unwrap();
        assert_eq!(r.output, Poly::constant(2, rat(2)));
        assert_eq!(r.shift, 0);
    }

    #[test]
    fn non_invariant_input_is_rejected() {
        let rd = RootDatum::new(&GroupSpec::gl(2)).unwrap();
        let w = WeylGroup::new(&rd).unwrap();
        let v = WeightMultiset::new(2);
        let center = Face::new(&rd, &v, Subspace::span_int(2, &[vec![1, 1]]));
        let c = chambers_in_face(&center, Bounds::default()).unwrap().remove(0);
        assert!(matches!(induction(&rd, &v, &center, &c, &x(2, 0), &w), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn central_face_is_identity_and_composes() {
        let rd = RootDatum::new(&GroupSpec::gl(2)).unwrap();
        let w = WeylGroup::new(&rd).unwrap();
        let v = WeightMultiset::new(2);
        let full = Face::full(&rd, &v);
        let center = Face::new(&rd, &v, Subspace::span_int(2, &[vec![1, 1]]));
        let c0 = chambers_in_face(&center, Bounds::default()).unwrap().remove(0);
        let sigma = Chamber::at_point(&full, vec![rat(1), rat(0)]).unwrap();
        let f = &x(2, 0) * &(&x(2, 0) + &x(2, 1));
        let direct = induction(&rd, &v, &full, &sigma, &f, &w).unwrap().output;
        let through = induction(&rd, &v, &center, &c0, &direct, &w).unwrap().output;
        assert_eq!(direct, through);
    }

    #[test]
    fn bg_check_small() {
        let torus = RootDatum::new(&GroupSpec::torus(1)).unwrap();
        let rep = check_integrality_bg(&torus, 10).unwrap();
        assert!(rep.iter().all(|r| r.passes() && r.target_dim == 1));
        let a1 = RootDatum::new(&GroupSpec::simple(CartanType::A, 1, Isogeny::SimplyConnected)).unwrap();
        let rep = check_integrality_bg(&a1, 12).unwrap();
        assert!(rep.iter().all(|r| r.passes()));
        assert_eq!(rep.iter().map(|r| r.target_dim).collect::<Vec<_>>(), vec![1, 0, 1, 0, 1, 0, 1]);
        assert!(check_integrality_bg(&a1, 7).is_err());
    }

    #[test]
    fn attractor_matches_shift() {
        let rd = RootDatum::new(&GroupSpec::gl(3)).unwrap();
        let v = WeightMultiset::from_weights(3, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        let p = vec![rat(3), rat(-1), rat(-5)];
        let s_minus = negative_at(&p, v.expanded()).len() as i64;
        let phi_minus = negative_at(&p, rd.roots().iter().cloned()).len() as i64;
        assert_eq!(attractor_shift(&rd, &v, &p), phi_minus - s_minus);
    }
}
