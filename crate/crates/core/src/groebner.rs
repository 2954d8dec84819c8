//! Buchberger's algorithm over a field, tracking how each basis element is
//! built from the input generators so that ideal membership can be
//! certified.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::poly::{cmp_monomials, monomial_degree, monomial_divides, monomial_lcm, Monomial, Poly};
use crate::scalar::FieldCoefficient;

#[derive(Clone, Debug)]
struct Tracked<F> {
    p: Poly<F>,
    cof: Vec<Poly<F>>,
}

impl<F: FieldCoefficient> Tracked<F> {
    fn sub_scaled(&mut self, m: &[u32], c: &F, other: &Tracked<F>) {
        self.p = &self.p - &other.p.mul_term(m, c);
        for (a, b) in self.cof.iter_mut().zip(&other.cof) {
            *a = &*a - &b.mul_term(m, c);
        }
    }

    fn scale(&mut self, c: &F) {
        self.p = self.p.scale(c);
        for a in &mut self.cof {
            *a = a.scale(c);
        }
    }
}

/// Reduced Groebner basis of a polynomial ideal, with each element written
/// in terms of the original generators.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F> {
    degrees: Vec<u32>,
    generators: Vec<Poly<F>>,
    basis: Vec<Tracked<F>>,
}

fn sub_monomial(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

impl<F: FieldCoefficient> GroebnerBasis<F> {
    pub fn new(degrees: &[u32], generators: &[Poly<F>]) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.degrees() != degrees) {
            return Err(Error::Dimension(format!(
                "generator lives in a ring with degrees {:?}, expected {:?}",
                g.degrees(),
                degrees
            )));
        }
        let n = generators.len();
        let unit = |i: usize| -> Vec<Poly<F>> {
            (0..n).map(|j| if i == j { Poly::one(degrees) } else { Poly::zero(degrees) }).collect()
        };
        let mut basis: Vec<Tracked<F>> = Vec::new();
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for (i, g) in generators.iter().enumerate() {
            let t = reduce_tracked(Tracked { p: g.clone(), cof: unit(i) }, &basis);
            if !t.p.is_zero() {
                basis.push(t);
                let k = basis.len() - 1;
                pairs.extend((0..k).map(|j| (j, k)));
            }
        }
        while let Some(idx) = next_pair(&pairs, &basis, degrees) {
            let (i, j) = pairs.swap_remove(idx);
            let (li, ci) = lead(&basis[i].p);
            let (lj, cj) = lead(&basis[j].p);
            let l = monomial_lcm(&li, &lj);
            // coprime leading monomials reduce to zero
            if li.iter().zip(&lj).all(|(a, b)| *a == 0 || *b == 0) {
                continue;
            }
            let mut s = basis[i].clone();
            let fi = sub_monomial(&l, &li);
            s.p = s.p.mul_term(&fi, &ci.inv());
            for a in &mut s.cof {
                *a = a.mul_term(&fi, &ci.inv());
            }
            let fj = sub_monomial(&l, &lj);
            s.sub_scaled(&fj, &cj.inv(), &basis[j]);
            let r = reduce_tracked(s, &basis);
            if !r.p.is_zero() {
                basis.push(r);
                let k = basis.len() - 1;
                pairs.extend((0..k).map(|j| (j, k)));
            }
        }
        let basis = interreduce(basis);
        Ok(GroebnerBasis { degrees: degrees.to_vec(), generators: generators.to_vec(), basis })
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn generators(&self) -> &[Poly<F>] {
        &self.generators
    }

    /// Monic reduced basis, sorted by leading monomial.
    pub fn elements(&self) -> Vec<Poly<F>> {
        self.basis.iter().map(|t| t.p.clone()).collect()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis.iter().map(|t| lead(&t.p).0).collect()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.basis.iter().any(|t| t.p.homogeneous_degree() == Some(0) && !t.p.is_zero())
    }

    pub fn normal_form(&self, p: &Poly<F>) -> Poly<F> {
        let n = self.generators.len();
        let t = Tracked { p: p.clone(), cof: vec![Poly::zero(&self.degrees); n] };
        reduce_tracked(t, &self.basis).p
    }

    /// `(remainder, cofactors)` with `p = remainder + sum cofactors[i] * generators[i]`.
    pub fn reduce_with_cofactors(&self, p: &Poly<F>) -> (Poly<F>, Vec<Poly<F>>) {
        let n = self.generators.len();
        let t = Tracked { p: p.clone(), cof: vec![Poly::zero(&self.degrees); n] };
        let r = reduce_tracked(t, &self.basis);
        // reduce_tracked subtracts, so the cofactors of p come out negated
        (r.p, r.cof.into_iter().map(|c| -c).collect())
    }

    pub fn contains(&self, p: &Poly<F>) -> bool {
        self.normal_form(p).is_zero()
    }

    /// Whether a monomial is standard (not divisible by any leading monomial).
    pub fn is_standard(&self, m: &[u32]) -> bool {
        self.basis.iter().all(|t| !monomial_divides(&lead(&t.p).0, m))
    }

    /// The quotient is finite dimensional iff every generator has a pure
    /// power among the leading monomials.
    pub fn is_zero_dimensional(&self) -> bool {
        let leads = self.leading_monomials();
        (0..self.degrees.len()).all(|i| {
            leads.iter().any(|m| m[i] > 0 && m.iter().enumerate().all(|(j, e)| j == i || *e == 0))
        })
    }
}

fn lead<F: FieldCoefficient>(p: &Poly<F>) -> (Monomial, F) {
    let (m, c) = p.leading().expect("nonzero polynomial");
    (m.clone(), c.clone())
}

/// Picks the pair with the smallest lcm degree (the normal strategy).
fn next_pair<F: FieldCoefficient>(pairs: &[(usize, usize)], basis: &[Tracked<F>], degrees: &[u32]) -> Option<usize> {
    pairs
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| {
            let la = monomial_lcm(&lead(&basis[a.0].p).0, &lead(&basis[a.1].p).0);
            let lb = monomial_lcm(&lead(&basis[b.0].p).0, &lead(&basis[b.1].p).0);
            monomial_degree(&la, degrees)
                .cmp(&monomial_degree(&lb, degrees))
                .then_with(|| cmp_monomials(&la, &lb, degrees))
        })
        .map(|(i, _)| i)
}

/// Full reduction: every term of the result is standard.
fn reduce_tracked<F: FieldCoefficient>(mut t: Tracked<F>, basis: &[Tracked<F>]) -> Tracked<F> {
    let degrees = t.p.degrees().to_vec();
    let mut rem = Tracked { p: Poly::zero(&degrees), cof: t.cof.clone() };
    while let Some((m, c)) = t.p.leading().map(|(m, c)| (m.clone(), c.clone())) {
        let hit = basis.iter().find(|b| monomial_divides(&lead(&b.p).0, &m));
        match hit {
            Some(b) => {
                let (bl, bc) = lead(&b.p);
                let q = c * bc.inv();
                let f = sub_monomial(&m, &bl);
                t.sub_scaled(&f, &q, b);
            }
            None => {
                let mono = Poly::monomial(&degrees, m.clone(), c.clone());
                t.p = &t.p - &mono;
                rem.p = &rem.p + &mono;
            }
        }
    }
    rem.cof = t.cof;
    rem
}

fn interreduce<F: FieldCoefficient>(basis: Vec<Tracked<F>>) -> Vec<Tracked<F>> {
    // drop elements whose leading monomial is divisible by another's
    let leads: Vec<Monomial> = basis.iter().map(|t| lead(&t.p).0).collect();
    let mut keep: Vec<Tracked<F>> = Vec::new();
    for (i, t) in basis.iter().enumerate() {
        let redundant = leads.iter().enumerate().any(|(j, l)| {
            j != i && monomial_divides(l, &leads[i]) && (l != &leads[i] || j < i)
        });
        if !redundant {
            keep.push(t.clone());
        }
    }
    let mut out = Vec::new();
    for i in 0..keep.len() {
        let others: Vec<Tracked<F>> = keep.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, t)| t.clone()).collect();
        let (lm, lc) = lead(&keep[i].p);
        // reduce the tail only: the leading term stays
        let mut head = keep[i].clone();
        let lead_poly = Poly::monomial(keep[i].p.degrees(), lm, lc.clone());
        head.p = &head.p - &lead_poly;
        let mut r = reduce_tracked(head, &others);
        r.p = &r.p + &lead_poly;
        r.scale(&lc.inv());
        out.push(r);
    }
    out.sort_by(|a, b| {
        let (la, lb) = (lead(&a.p).0, lead(&b.p).0);
        cmp_monomials(&la, &lb, a.p.degrees()).then(Ordering::Equal)
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn p(degs: &[u32], terms: &[(&[u32], i64)]) -> Poly<BigRational> {
        Poly::from_terms(degs, terms.iter().map(|(m, c)| (m.to_vec(), q(*c)))).unwrap()
    }

    #[test]
    fn linear_relation_eliminates_the_largest_variable() {
        let d = [4, 4, 4];
        let g = GroebnerBasis::new(&d, &[p(&d, &[(&[1, 0, 0], 1), (&[0, 1, 0], 1), (&[0, 0, 1], -1)])]).unwrap();
        assert_eq!(g.leading_monomials(), vec![vec![0, 0, 1]]);
        let z3 = p(&d, &[(&[0, 0, 1], 1)]);
        assert_eq!(g.normal_form(&z3), p(&d, &[(&[1, 0, 0], 1), (&[0, 1, 0], 1)]));
    }

    #[test]
    fn cofactors_reconstruct_the_input() {
        let d = [2, 2];
        let gens = vec![p(&d, &[(&[1, 1], 1)]), p(&d, &[(&[2, 0], 1), (&[0, 2], -1)])];
        let g = GroebnerBasis::new(&d, &gens).unwrap();
        assert!(g.is_zero_dimensional());
        let target = p(&d, &[(&[3, 0], 1)]);
        let (r, cof) = g.reduce_with_cofactors(&target);
        let mut back = r.clone();
        for (c, gen) in cof.iter().zip(&gens) {
            back = &back + &(c * gen);
        }
        assert_eq!(back, target);
        assert!(g.contains(&target));
        // v^2 reduces to u^2, which is standard
        assert_eq!(g.normal_form(&p(&d, &[(&[0, 2], 1)])), p(&d, &[(&[2, 0], 1)]));
    }

    #[test]
    fn normal_form_is_idempotent() {
        let d = [2, 4];
        let gens = vec![p(&d, &[(&[1, 1], 1)]), p(&d, &[(&[6, 0], 1), (&[0, 3], -1)])];
        let g = GroebnerBasis::new(&d, &gens).unwrap();
        let f = p(&d, &[(&[7, 0], 3), (&[0, 4], 2), (&[2, 1], 5)]);
        let n = g.normal_form(&f);
        assert_eq!(g.normal_form(&n), n);
        for gen in &gens {
            assert!(g.normal_form(gen).is_zero());
        }
    }

    #[test]
    fn unit_ideal() {
        let d = [2];
        let g = GroebnerBasis::new(&d, &[p(&d, &[(&[0], 3)])]).unwrap();
        assert!(g.is_unit_ideal());
    }
}
