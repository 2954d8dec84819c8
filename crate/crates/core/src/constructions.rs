//! Concrete biquotients built from representation data: free torus and
//! SU(2)-type actions on products of a group with spheres, and the
//! cohomology rings they produce.

use crate::cohomology::{biquotient_ring, bundle_quotient_ring, classifying_ring, GradedQuotient, IntPoly};
use crate::error::{Error, Result};
use crate::freeness::{group_factor, sphere_factor, Factor, TwoSidedAction};
use crate::groups_catalog::{profile, SimpleGroupId};
use crate::weights_reps::{chern_pullback, euler_class, su2_rep_from_parts, SourceFactor, WeightRep};

/// Complex weights of the standard rep of SU(2) factor `i` of a rank-`r` torus.
fn v(i: usize, r: usize) -> Result<WeightRep> {
    su2_rep_from_parts(&[1]).embed(i, r)
}

fn circle_weights(r: usize, ws: &[Vec<i64>]) -> Result<WeightRep> {
    WeightRep::complex(r, ws.to_vec())
}

/// T^2 acting on S^3 x S^{2n-1} by `(x,y) -> ((x,y), (xy^-1, xy, ..., xy))`.
pub fn cp_sum_cp(n: usize) -> Result<(WeightRep, WeightRep)> {
    if n < 2 {
        return Err(Error::InvalidAction("n must be at least 2".into()));
    }
    let s3 = circle_weights(2, &[vec![1, 0], vec![0, 1]])?;
    let mut w = vec![vec![1, -1]];
    w.extend(std::iter::repeat(vec![1, 1]).take(n - 1));
    Ok((s3, circle_weights(2, &w)?))
}

pub fn cp_sum_cp_action(n: usize) -> Result<TwoSidedAction> {
    let (a, b) = cp_sum_cp(n)?;
    Ok(TwoSidedAction::new(2, vec![Factor::Sphere(sphere_factor(&a)?), Factor::Sphere(sphere_factor(&b)?)]))
}

pub fn cp_sum_cp_ring(n: usize) -> Result<GradedQuotient> {
    let (a, b) = cp_sum_cp(n)?;
    let h = [SourceFactor::Circle; 2];
    sphere_bundle_ring(&h, &[a, b])
}

/// S^1 x SU(2) acting on S^5 = S(V + L) and S^{8e+3} = S((V (x) L)^{2e+1}),
/// torus coordinates `[x, t]`.
pub fn cp_sum_hp(e: usize) -> Result<(WeightRep, WeightRep)> {
    if e < 1 {
        return Err(Error::InvalidAction("e must be at least 1".into()));
    }
    let l = circle_weights(2, &[vec![1, 0]])?;
    let vv = v(1, 2)?;
    let s5 = vv.sum(&l)?;
    let big = vv.tensor(&l)?.copies(2 * e + 1)?;
    Ok((s5, big))
}

pub fn cp_sum_hp_action(e: usize) -> Result<TwoSidedAction> {
    let (a, b) = cp_sum_hp(e)?;
    Ok(TwoSidedAction::new(2, vec![Factor::Sphere(sphere_factor(&a)?), Factor::Sphere(sphere_factor(&b)?)]))
}

pub fn cp_sum_hp_ring(e: usize) -> Result<GradedQuotient> {
    let (a, b) = cp_sum_hp(e)?;
    sphere_bundle_ring(&[SourceFactor::Circle, SourceFactor::Su2], &[a, b])
}

/// SU(2)^3 acting on Sp(4) by `(V1 + V2, V3 + C^2)` and on S^{4n-1} by
/// `(V3)_R^{n-1} + W12`.
pub fn hp_sum_hp(n: usize) -> Result<(WeightRep, WeightRep, WeightRep)> {
    if n < 2 {
        return Err(Error::InvalidAction("n must be at least 2".into()));
    }
    let left = v(0, 3)?.sum(&v(1, 3)?)?;
    let right = v(2, 3)?.sum(&WeightRep::trivial(3, 2))?;
    let v3r = v(2, 3)?.realify()?;
    let w12 = v(0, 3)?.tensor(&v(1, 3)?)?.as_real()?;
    let sphere = v3r.copies(n - 1)?.sum(&w12)?;
    Ok((left, right, sphere))
}

pub fn hp_sum_hp_action(n: usize) -> Result<TwoSidedAction> {
    let (l, r, s) = hp_sum_hp(n)?;
    Ok(TwoSidedAction::new(3, vec![Factor::Group(group_factor(&l, &r)?), Factor::Sphere(sphere_factor(&s)?)])
        .with_group(SimpleGroupId::sp(4)?))
}

/// The homotopy quotient Sp(4)//SU(2)^3 for the action above.
pub fn sp4_su2_cubed_ring() -> Result<GradedQuotient> {
    let (l, r, _) = hp_sum_hp(2)?;
    let h = [SourceFactor::Su2; 3];
    two_sided_ring(SimpleGroupId::sp(4)?, &h, &l, &r)
}

pub fn hp_sum_hp_ring(n: usize) -> Result<GradedQuotient> {
    let (l, r, s) = hp_sum_hp(n)?;
    let h = [SourceFactor::Su2; 3];
    let base = two_sided_ring(SimpleGroupId::sp(4)?, &h, &l, &r)?;
    let (e, _) = euler_class(&s, &h)?;
    bundle_quotient_ring(&base, &[e])
}

/// `H*(BH)` modulo the Euler classes of the given sphere reps.
pub fn sphere_bundle_ring(h: &[SourceFactor], spheres: &[WeightRep]) -> Result<GradedQuotient> {
    let ring = classifying_ring(h);
    let base = GradedQuotient::new(ring, vec![])?;
    let euler: Vec<IntPoly> = spheres.iter().map(|s| euler_class(s, h).map(|e| e.0)).collect::<Result<_>>()?;
    bundle_quotient_ring(&base, &euler)
}

/// Cohomology of G//H for a two-sided action through the defining rep of
/// G = SU(n) or Sp(2n); the basic invariant of degree d is `c_d` of that rep.
pub fn two_sided_ring(g: SimpleGroupId, h: &[SourceFactor], left: &WeightRep, right: &WeightRep) -> Result<GradedQuotient> {
    let p = profile(g);
    let sympl = g.name().starts_with("Sp");
    if !sympl && !g.name().starts_with("SU") {
        return Err(Error::Unsupported(format!("Chern-class invariants only cover SU and Sp, not {g}")));
    }
    let mut pairs = Vec::new();
    for d in &p.degrees {
        let k = *d as usize;
        pairs.push((chern_pullback(left, k, h)?, chern_pullback(right, k, h)?));
    }
    biquotient_ring(classifying_ring(h), &p, &pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freeness::is_free;

    #[test]
    fn cp_ring_relations_match_the_euler_classes() {
        let q = cp_sum_cp_ring(3).unwrap();
        let names = q.display_relations();
        assert_eq!(names[0], "u*v");
        assert_eq!(q.betti(6), vec![1, 0, 2, 0, 2, 0, 1]);
    }

    #[test]
    fn hp_action_is_free() {
        assert!(is_free(&hp_sum_hp_action(2).unwrap()).unwrap().is_free());
    }

    #[test]
    fn sp4_pullbacks() {
        let q = sp4_su2_cubed_ring().unwrap();
        let r = q.ring();
        let z = r.vars();
        assert!(q.is_zero(&(&(&z[0] + &z[1]) - &z[2])));
        assert!(q.is_zero(&(&z[0] * &z[1])));
        assert!(!q.is_zero(&z[0]));
    }
}
