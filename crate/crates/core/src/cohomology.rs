//! Graded polynomial rings and their quotients: the rational cohomology
//! models of classifying spaces, homotopy quotients and sphere bundles.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::groups_catalog::GroupProfile;
use crate::lattice::{FiniteAbelianGroup, Matrix};
use crate::poly::{self, monomial_degree, Monomial, Poly};
use crate::scalar::{fraction_string, parse_fraction};
use crate::weights_reps::SourceFactor;

pub use crate::{IntPoly, RatPoly};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
}

/// Polynomial ring on named generators of positive even degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Generator>", into = "Vec<Generator>")]
pub struct GradedPolyRing {
    generators: Vec<Generator>,
}

impl TryFrom<Vec<Generator>> for GradedPolyRing {
    type Error = Error;
    fn try_from(g: Vec<Generator>) -> Result<Self> {
        Self::new(g.into_iter().map(|g| (g.name, g.degree)).collect())
    }
}

impl From<GradedPolyRing> for Vec<Generator> {
    fn from(r: GradedPolyRing) -> Self {
        r.generators
    }
}

impl GradedPolyRing {
    pub fn new(gens: Vec<(String, u32)>) -> Result<Self> {
        let mut seen = HashSet::new();
        for (i, (name, d)) in gens.iter().enumerate() {
            if *d == 0 || d % 2 == 1 {
                return Err(Error::Inhomogeneous(format!("generators[{i}] ({name}) has degree {d}; degrees must be positive and even")));
            }
            if name.is_empty() || !seen.insert(name.clone()) {
                return Err(Error::Inhomogeneous(format!("generators[{i}]: name {name:?} is empty or repeated")));
            }
        }
        Ok(GradedPolyRing { generators: gens.into_iter().map(|(name, degree)| Generator { name, degree }).collect() })
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.generators.iter().map(|g| g.degree).collect()
    }

    pub fn names(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.name.clone()).collect()
    }

    pub fn arity(&self) -> usize {
        self.generators.len()
    }

    pub fn var(&self, name: &str) -> Result<IntPoly> {
        let i = self
            .generators
            .iter()
            .position(|g| g.name == name)
            .ok_or_else(|| Error::Dimension(format!("no generator named {name}")))?;
        Ok(Poly::var(&self.degrees(), i))
    }

    pub fn vars(&self) -> Vec<IntPoly> {
        (0..self.arity()).map(|i| Poly::var(&self.degrees(), i)).collect()
    }

    pub fn display(&self, p: &IntPoly) -> String {
        p.display_with(&self.names())
    }

    /// Monomials of exactly this degree, in increasing order.
    pub fn monomials_of_degree(&self, d: u32) -> Vec<Monomial> {
        let degs = self.degrees();
        let mut out = Vec::new();
        let mut cur = vec![0u32; degs.len()];
        fn rec(i: usize, left: u32, degs: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i == degs.len() {
                if left == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            for e in 0..=left / degs[i] {
                cur[i] = e;
                rec(i + 1, left - e * degs[i], degs, cur, out);
            }
            cur[i] = 0;
        }
        rec(0, d, &degs, &mut cur, &mut out);
        out.sort_by(|a, b| poly::cmp_monomials(a, b, &degs));
        out
    }
}

fn default_names(prefix: &str, n: usize) -> Vec<String> {
    match (prefix, n) {
        (_, 1) => vec![prefix.to_string()],
        ("x", 2) => vec!["u".into(), "v".into()],
        _ => (1..=n).map(|i| format!("{prefix}{i}")).collect(),
    }
}

/// `H*(BH)` for H a product of circles and SU(2)s: `x = c_1 L` per circle
/// (named u, v when there are exactly two), `z = -c_2 V` per SU(2).
pub fn classifying_ring(h: &[SourceFactor]) -> GradedPolyRing {
    let nc = h.iter().filter(|f| **f == SourceFactor::Circle).count();
    let ns = h.len() - nc;
    let mut cn = default_names("x", nc).into_iter();
    let mut sn = default_names("z", ns).into_iter();
    let gens = h
        .iter()
        .map(|f| match f {
            SourceFactor::Circle => (cn.next().unwrap(), 2),
            SourceFactor::Su2 => (sn.next().unwrap(), 4),
        })
        .collect();
    GradedPolyRing::new(gens).expect("generated names are distinct")
}

/// A graded ring modulo homogeneous relations, with a Groebner basis over Q.
#[derive(Clone, Debug)]
pub struct GradedQuotient {
    ring: GradedPolyRing,
    relations: Vec<IntPoly>,
    gb: GroebnerBasis<BigRational>,
}

impl GradedQuotient {
    pub fn new(ring: GradedPolyRing, relations: Vec<IntPoly>) -> Result<Self> {
        let degs = ring.degrees();
        for (i, r) in relations.iter().enumerate() {
            if r.degrees() != degs.as_slice() {
                return Err(Error::Dimension(format!("relations[{i}] lives in a different ring")));
            }
            if !r.is_homogeneous() {
                return Err(Error::Inhomogeneous(format!("relations[{i}] = {} is not homogeneous", ring.display(r))));
            }
        }
        let relations: Vec<IntPoly> = relations.into_iter().filter(|r| !r.is_zero()).collect();
        let rat: Vec<RatPoly> = relations.iter().map(poly::to_rational).collect();
        let gb = GroebnerBasis::new(&degs, &rat)?;
        Ok(GradedQuotient { ring, relations, gb })
    }

    pub fn ring(&self) -> &GradedPolyRing {
        &self.ring
    }

    pub fn relations(&self) -> &[IntPoly] {
        &self.relations
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis<BigRational> {
        &self.gb
    }

    pub fn normal_form(&self, p: &IntPoly) -> RatPoly {
        self.gb.normal_form(&poly::to_rational(p))
    }

    pub fn is_zero(&self, p: &IntPoly) -> bool {
        self.normal_form(p).is_zero()
    }

    /// Standard monomials of degree d: a basis of that graded piece over Q.
    pub fn monomial_basis(&self, d: u32) -> Vec<Monomial> {
        self.ring.monomials_of_degree(d).into_iter().filter(|m| self.gb.is_standard(m)).collect()
    }

    pub fn rank(&self, d: u32) -> usize {
        if self.gb.is_unit_ideal() {
            return 0;
        }
        self.monomial_basis(d).len()
    }

    pub fn is_finite_dimensional(&self) -> bool {
        self.gb.is_unit_ideal() || self.gb.is_zero_dimensional()
    }

    /// Highest degree with a nonzero piece, for finite-dimensional quotients.
    pub fn top_degree(&self) -> Option<u32> {
        if !self.is_finite_dimensional() || self.gb.is_unit_ideal() {
            return None;
        }
        // every standard monomial divides a product of pure powers below the leads
        let degs = self.ring.degrees();
        let leads = self.gb.leading_monomials();
        let bound: u32 = (0..degs.len())
            .map(|i| {
                let p = leads
                    .iter()
                    .filter(|m| m.iter().enumerate().all(|(j, e)| j == i || *e == 0))
                    .map(|m| m[i])
                    .min()
                    .unwrap_or(0);
                p.saturating_sub(1) * degs[i]
            })
            .sum();
        (0..=bound).rev().find(|d| self.rank(*d) > 0)
    }

    pub fn total_rank(&self) -> Option<usize> {
        let top = self.top_degree()?;
        Some((0..=top).map(|d| self.rank(d)).sum())
    }

    /// When the relations are as many as the generators and cut out a
    /// finite quotient, they form a regular sequence and the Poincare
    /// series is `prod (1 - t^r_i) / prod (1 - t^g_j)`: this returns the
    /// predicted (total rank, top degree).
    pub fn regular_sequence_prediction(&self) -> Option<(u64, u32)> {
        if self.relations.len() != self.ring.arity() || !self.gb.is_zero_dimensional() {
            return None;
        }
        let rd: Vec<u32> = self.relations.iter().map(|r| r.homogeneous_degree().unwrap()).collect();
        let gd = self.ring.degrees();
        let num: u64 = rd.iter().map(|d| *d as u64).product();
        let den: u64 = gd.iter().map(|d| *d as u64).product();
        let top = rd.iter().sum::<u32>().checked_sub(gd.iter().sum::<u32>())?;
        Some((num / den, top))
    }

    pub fn is_poincare_symmetric(&self) -> bool {
        match self.top_degree() {
            None => false,
            Some(top) => (0..=top).all(|d| self.rank(d) == self.rank(top - d)),
        }
    }

    /// Same ideal as another quotient of the same ring?
    pub fn same_ideal(&self, other: &GradedQuotient) -> bool {
        self.ring.degrees() == other.ring.degrees()
            && self.relations.iter().all(|r| other.is_zero(r))
            && other.relations.iter().all(|r| self.is_zero(r))
    }

    /// Drops generator `name` using a basis element of the form
    /// `name - f(other generators)`, returning the quotient of the smaller ring.
    pub fn eliminate(&self, name: &str) -> Result<GradedQuotient> {
        let degs = self.ring.degrees();
        let k = self
            .ring
            .generators
            .iter()
            .position(|g| g.name == name)
            .ok_or_else(|| Error::Dimension(format!("no generator named {name}")))?;
        let var = Poly::<BigRational>::var(&degs, k);
        let image = self.gb.normal_form(&var);
        if image.terms().any(|(m, _)| m[k] > 0) {
            return Err(Error::Unsupported(format!("{name} is not determined by the other generators")));
        }
        let keep: Vec<usize> = (0..degs.len()).filter(|i| *i != k).collect();
        let small = GradedPolyRing::new(keep.iter().map(|i| (self.ring.generators[*i].name.clone(), degs[*i])).collect())?;
        let sdegs = small.degrees();
        let project = |p: &RatPoly| -> RatPoly {
            let mut out = Poly::zero(&sdegs);
            for (m, c) in p.terms() {
                out.add_term(keep.iter().map(|i| m[*i]).collect(), c.clone());
            }
            out
        };
        let mut images: Vec<RatPoly> = keep.iter().map(|i| Poly::var(&sdegs, keep.iter().position(|j| j == i).unwrap())).collect();
        images.insert(k, project(&image));
        let mut rels = Vec::new();
        for r in &self.relations {
            let sub = poly::to_rational(r).substitute(&images)?;
            let z = poly::to_integer(&sub).ok_or_else(|| Error::Unsupported("elimination left fractional coefficients".into()))?;
            rels.push(z);
        }
        GradedQuotient::new(small, rels)
    }

    /// Ranks in every degree 0..=max_degree (odd degrees included).
    pub fn betti(&self, max_degree: u32) -> Vec<usize> {
        (0..=max_degree).map(|d| self.rank(d)).collect()
    }

    pub fn display_relations(&self) -> Vec<String> {
        self.relations.iter().map(|r| self.ring.display(r)).collect()
    }
}

pub fn betti(q: &GradedQuotient, max_degree: u32) -> Vec<usize> {
    q.betti(max_degree)
}

/// The cohomology ring of a biquotient G//H: `H*(BH)` modulo
/// `left - right` for each pair of pulled-back generators of `H*(BG)`.
pub fn biquotient_ring(ring: GradedPolyRing, g: &GroupProfile, pullbacks: &[(IntPoly, IntPoly)]) -> Result<GradedQuotient> {
    if pullbacks.len() != g.degrees.len() {
        return Err(Error::Dimension(format!(
            "{} has {} basic invariants, got {} pullback pairs",
            g.id,
            g.degrees.len(),
            pullbacks.len()
        )));
    }
    let mut rels = Vec::new();
    for (i, ((l, r), d)) in pullbacks.iter().zip(&g.degrees).enumerate() {
        let rel = l - r;
        match rel.homogeneous_degree() {
            Some(k) if rel.is_zero() || k == 2 * d => rels.push(rel),
            _ => {
                return Err(Error::Inhomogeneous(format!(
                    "pullbacks[{i}]: {} - ({}) is not homogeneous of degree {}",
                    ring.display(l),
                    ring.display(r),
                    2 * d
                )))
            }
        }
    }
    GradedQuotient::new(ring, rels)
}

/// Adds the vanishing of sphere-bundle Euler classes.
pub fn bundle_quotient_ring(base: &GradedQuotient, euler: &[IntPoly]) -> Result<GradedQuotient> {
    let mut rels = base.relations.clone();
    rels.extend(euler.iter().cloned());
    GradedQuotient::new(base.ring.clone(), rels)
}

/// `lhs - rhs = sum cofactors[i] * relations[i]`, checked by expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealCertificate {
    pub holds: bool,
    /// Whether the cofactors found have integer coefficients.
    pub integral: bool,
    pub cofactors: Vec<RatPoly>,
    pub remainder: RatPoly,
}

pub fn ideal_identities(q: &GradedQuotient, lhs: &IntPoly, rhs: &IntPoly) -> Result<IdealCertificate> {
    let (dl, dr) = (lhs.homogeneous_degree(), rhs.homogeneous_degree());
    match (dl, dr) {
        (Some(a), Some(b)) if a == b || lhs.is_zero() || rhs.is_zero() => {}
        _ => return Err(Error::Inhomogeneous("both sides must be homogeneous of the same degree".into())),
    }
    let diff = poly::to_rational(&(lhs - rhs));
    let (remainder, cofactors) = q.gb.reduce_with_cofactors(&diff);
    let holds = remainder.is_zero();
    if holds {
        let mut back = Poly::zero(&q.ring.degrees());
        for (c, r) in cofactors.iter().zip(&q.relations) {
            back = &back + &(c * &poly::to_rational(r));
        }
        if back != diff {
            return Err(Error::Inconsistent("cofactor certificate does not expand back".into()));
        }
    }
    let integral = holds && cofactors.iter().all(|c| c.terms().all(|(_, x)| x.is_integer()));
    Ok(IdealCertificate { holds, integral, cofactors, remainder })
}

/// `pi_3` of the biquotient: rows are simple factors of H, columns simple
/// factors of G, entries the net Dynkin index (left minus right).
pub fn pi3_cokernel(index_matrix: &Matrix<i64>) -> FiniteAbelianGroup {
    FiniteAbelianGroup::cokernel(index_matrix)
}

/// `dim pi_even - dim pi_odd` of a rational homotopy profile.
pub fn chi_pi(even: &[u32], odd: &[u32]) -> i64 {
    even.len() as i64 - odd.len() as i64
}

/// One term of a serialized polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exponents: Vec<u32>,
    pub coefficient: String,
}

pub fn poly_to_json(p: &IntPoly) -> Vec<TermJson> {
    let degs = p.degrees().to_vec();
    let mut terms: Vec<(&Monomial, &BigInt)> = p.terms().collect();
    terms.sort_by(|a, b| poly::cmp_monomials(b.0, a.0, &degs));
    terms.into_iter().map(|(m, c)| TermJson { exponents: m.clone(), coefficient: c.to_string() }).collect()
}

pub fn rat_poly_to_json(p: &RatPoly) -> Vec<TermJson> {
    let degs = p.degrees().to_vec();
    let mut terms: Vec<(&Monomial, &BigRational)> = p.terms().collect();
    terms.sort_by(|a, b| poly::cmp_monomials(b.0, a.0, &degs));
    terms.into_iter().map(|(m, c)| TermJson { exponents: m.clone(), coefficient: fraction_string(c) }).collect()
}

pub fn poly_from_json(ring: &GradedPolyRing, terms: &[TermJson]) -> Result<IntPoly> {
    let degs = ring.degrees();
    let mut out = Poly::zero(&degs);
    for (i, t) in terms.iter().enumerate() {
        if t.exponents.len() != degs.len() {
            return Err(Error::Dimension(format!(
                "terms[{i}].exponents has length {}, ring has {} generators",
                t.exponents.len(),
                degs.len()
            )));
        }
        let c = parse_fraction::<BigInt>(&t.coefficient)
            .filter(|c| c.is_integer())
            .ok_or_else(|| Error::InvalidRep(format!("terms[{i}].coefficient {:?} is not an integer", t.coefficient)))?;
        out.add_term(t.exponents.clone(), c.to_integer());
    }
    Ok(out)
}

/// A ring presentation as plain data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientJson {
    pub generators: GradedPolyRing,
    pub relations: Vec<Vec<TermJson>>,
}

impl QuotientJson {
    pub fn from_quotient(q: &GradedQuotient) -> Self {
        QuotientJson { generators: q.ring.clone(), relations: q.relations.iter().map(poly_to_json).collect() }
    }

    pub fn build(&self) -> Result<GradedQuotient> {
        let rels = self
            .relations
            .iter()
            .enumerate()
            .map(|(i, r)| poly_from_json(&self.generators, r).map_err(|e| Error::InvalidRep(format!("relations[{i}]: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        GradedQuotient::new(self.generators.clone(), rels)
    }
}

/// The two orientation branches for a class known only up to sign, and
/// whether a relation vanishes under each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignBranch {
    pub sign: i64,
    pub image: IntPoly,
    pub relation_holds: bool,
}

/// Evaluates `relation` after substituting `images` for every generator,
/// where the image at `signed` is only known up to sign.
pub fn sign_branches(relation: &IntPoly, images: &[IntPoly], signed: usize) -> Result<Vec<SignBranch>> {
    let mut out = Vec::new();
    for sign in [1i64, -1] {
        let mut im = images.to_vec();
        im[signed] = im[signed].scale(&BigInt::from(sign));
        let v = relation.substitute(&im)?;
        out.push(SignBranch { sign, image: im[signed].clone(), relation_holds: v.is_zero() });
    }
    Ok(out)
}

pub fn is_zero_int(p: &IntPoly) -> bool {
    p.terms().all(|(_, c)| c.is_zero())
}

pub fn monomial_weight(m: &[u32], degrees: &[u32]) -> u32 {
    monomial_degree(m, degrees)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups_catalog::{profile, SimpleGroupId};

    fn int(degs: &[u32], terms: &[(&[u32], i64)]) -> IntPoly {
        Poly::from_terms(degs, terms.iter().map(|(m, c)| (m.to_vec(), BigInt::from(*c)))).unwrap()
    }

    #[test]
    fn classifying_ring_names() {
        let r = classifying_ring(&[SourceFactor::Circle, SourceFactor::Circle]);
        assert_eq!(r.names(), vec!["u", "v"]);
        assert_eq!(r.degrees(), vec![2, 2]);
        let r = classifying_ring(&[SourceFactor::Su2; 3]);
        assert_eq!(r.names(), vec!["z1", "z2", "z3"]);
        assert_eq!(r.degrees(), vec![4, 4, 4]);
        let r = classifying_ring(&[SourceFactor::Circle, SourceFactor::Su2]);
        assert_eq!(r.names(), vec!["x", "z"]);
        assert_eq!(classifying_ring(&[]).arity(), 0);
    }

    #[test]
    fn ring_validation() {
        assert!(GradedPolyRing::new(vec![("a".into(), 3)]).is_err());
        assert!(GradedPolyRing::new(vec![("a".into(), 2), ("a".into(), 4)]).is_err());
    }

    #[test]
    fn trivial_quotient() {
        let r = classifying_ring(&[SourceFactor::Circle, SourceFactor::Circle]);
        let d = r.degrees();
        let q = GradedQuotient::new(r, vec![int(&d, &[(&[1, 0], 1)]), int(&d, &[(&[0, 1], 1)])]).unwrap();
        assert_eq!(q.betti(6), vec![1, 0, 0, 0, 0, 0, 0]);
        assert_eq!(q.top_degree(), Some(0));
    }

    #[test]
    fn sp4_su2_cubed_presentation() {
        let ring = classifying_ring(&[SourceFactor::Su2; 3]);
        let d = ring.degrees();
        let left = (int(&d, &[(&[1, 0, 0], -1), (&[0, 1, 0], -1)]), int(&d, &[(&[1, 1, 0], 1)]));
        let right = (int(&d, &[(&[0, 0, 1], -1)]), IntPoly::zero(&d));
        let g = profile(SimpleGroupId::sp(4).unwrap());
        let q = biquotient_ring(ring, &g, &[(left.0, right.0), (left.1, right.1)]).unwrap();
        // z3 = z1 + z2
        assert!(q.is_zero(&int(&d, &[(&[0, 0, 1], 1), (&[1, 0, 0], -1), (&[0, 1, 0], -1)])));
        assert!(q.is_zero(&int(&d, &[(&[1, 1, 0], 1)])));
        assert!(!q.is_finite_dimensional());
    }

    #[test]
    fn inhomogeneous_relation_is_rejected() {
        let r = classifying_ring(&[SourceFactor::Circle, SourceFactor::Su2]);
        let d = r.degrees();
        let e = GradedQuotient::new(r, vec![int(&d, &[(&[1, 0], 1), (&[0, 1], 1)])]).unwrap_err();
        assert!(matches!(e, Error::Inhomogeneous(_)));
    }

    #[test]
    fn euler_zero_leaves_ring_unchanged() {
        let r = classifying_ring(&[SourceFactor::Circle, SourceFactor::Circle]);
        let d = r.degrees();
        let q = GradedQuotient::new(r, vec![int(&d, &[(&[1, 1], 1)])]).unwrap();
        let q2 = bundle_quotient_ring(&q, &[IntPoly::zero(&d)]).unwrap();
        assert!(q.same_ideal(&q2));
        assert_eq!(q2.relations().len(), 1);
    }

    #[test]
    fn u_is_not_v_mod_uv() {
        let r = classifying_ring(&[SourceFactor::Circle, SourceFactor::Circle]);
        let d = r.degrees();
        let q = GradedQuotient::new(r, vec![int(&d, &[(&[1, 1], 1)])]).unwrap();
        let c = ideal_identities(&q, &int(&d, &[(&[1, 0], 1)]), &int(&d, &[(&[0, 1], 1)])).unwrap();
        assert!(!c.holds);
    }

    #[test]
    fn pi3_and_chi() {
        let m = Matrix::from_i64_rows(1, &[vec![10]]).unwrap();
        assert_eq!(pi3_cokernel(&m).to_string(), "Z/10");
        let m = Matrix::from_i64_rows(1, &[vec![-1]]).unwrap();
        assert!(pi3_cokernel(&m).is_trivial());
        assert_eq!(chi_pi(&[4], &[7]), 0);
        assert_eq!(chi_pi(&[], &[5]), -1);
    }

    #[test]
    fn json_round_trip() {
        let r = classifying_ring(&[SourceFactor::Circle, SourceFactor::Su2]);
        let d = r.degrees();
        let q = GradedQuotient::new(r, vec![int(&d, &[(&[1, 1], -1)]), int(&d, &[(&[6, 0], 1), (&[0, 3], -1)])]).unwrap();
        let j = QuotientJson::from_quotient(&q);
        let s = serde_json::to_string(&j).unwrap();
        let back: QuotientJson = serde_json::from_str(&s).unwrap();
        assert!(back.build().unwrap().same_ideal(&q));
    }

    #[test]
    fn s8_mod_su2_sign_branches() {
        // y = c2 V, chi = Euler class of S^-; restricted to the circle
        let r = GradedPolyRing::new(vec![("y".into(), 4), ("chi".into(), 8)]).unwrap();
        let d = r.degrees();
        let rel = int(&d, &[(&[0, 1], 1), (&[2, 0], 1)]).pow(2);
        let x = [2u32];
        let images = vec![int(&x, &[(&[2], -1)]), int(&x, &[(&[4], 1)])];
        let b = sign_branches(&rel, &images, 1).unwrap();
        assert!(!b[0].relation_holds);
        assert!(b[1].relation_holds);
    }
}
