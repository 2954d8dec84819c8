//! Sparse graded polynomials over an exact coefficient ring.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::scalar::Coefficient;

pub type Monomial = Vec<u32>;

/// Weighted-degree order; ties go to the exponent of the last generator,
/// then the one before it, so later generators are larger.
pub fn cmp_monomials(a: &[u32], b: &[u32], degrees: &[u32]) -> Ordering {
    let wa: u64 = a.iter().zip(degrees).map(|(e, d)| (*e as u64) * (*d as u64)).sum();
    let wb: u64 = b.iter().zip(degrees).map(|(e, d)| (*e as u64) * (*d as u64)).sum();
    wa.cmp(&wb).then_with(|| {
        for i in (0..a.len()).rev() {
            match a[i].cmp(&b[i]) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    })
}

pub fn monomial_degree(m: &[u32], degrees: &[u32]) -> u32 {
    m.iter().zip(degrees).map(|(e, d)| e * d).sum()
}

pub fn monomial_divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn monomial_lcm(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<C> {
    degrees: Vec<u32>,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coefficient> Poly<C> {
    pub fn zero(degrees: &[u32]) -> Self {
        Poly { degrees: degrees.to_vec(), terms: BTreeMap::new() }
    }

    pub fn constant(degrees: &[u32], c: C) -> Self {
        let mut p = Self::zero(degrees);
        p.add_term(vec![0; degrees.len()], c);
        p
    }

    pub fn one(degrees: &[u32]) -> Self {
        Self::constant(degrees, C::one())
    }

    pub fn var(degrees: &[u32], i: usize) -> Self {
        let mut e = vec![0; degrees.len()];
        e[i] = 1;
        Self::monomial(degrees, e, C::one())
    }

    pub fn monomial(degrees: &[u32], exps: Monomial, c: C) -> Self {
        let mut p = Self::zero(degrees);
        p.add_term(exps, c);
        p
    }

    pub fn from_terms(degrees: &[u32], terms: impl IntoIterator<Item = (Monomial, C)>) -> Result<Self> {
        let mut p = Self::zero(degrees);
        for (e, c) in terms {
            if e.len() != degrees.len() {
                return Err(Error::Dimension(format!(
                    "exponent vector of length {} in a ring with {} generators",
                    e.len(),
                    degrees.len()
                )));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn arity(&self) -> usize {
        self.degrees.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &[u32]) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exps: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// The degree if homogeneous; `Some(0)` for zero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|m| monomial_degree(m, &self.degrees));
        let first = match it.next() {
            Some(d) => d,
            None => return Some(0),
        };
        it.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_degree().is_some()
    }

    /// Leading monomial and coefficient for [`cmp_monomials`].
    pub fn leading(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().max_by(|a, b| cmp_monomials(a.0, b.0, &self.degrees))
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.degrees);
        }
        let terms = self.terms.iter().map(|(m, x)| (m.clone(), x.clone() * c.clone())).collect();
        Poly { degrees: self.degrees.clone(), terms }
    }

    /// Multiplies by a monomial and a coefficient.
    pub fn mul_term(&self, m: &[u32], c: &C) -> Self {
        let mut out = Self::zero(&self.degrees);
        for (e, x) in &self.terms {
            let ne: Monomial = e.iter().zip(m).map(|(a, b)| a + b).collect();
            out.add_term(ne, x.clone() * c.clone());
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.degrees);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        let mut out = Poly::zero(&self.degrees);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Replaces generator i by `images[i]`, all living in one target ring.
    pub fn substitute(&self, images: &[Poly<C>]) -> Result<Poly<C>> {
        if images.len() != self.arity() {
            return Err(Error::Dimension(format!("{} images for {} generators", images.len(), self.arity())));
        }
        let target = match images.first() {
            Some(p) => p.degrees.clone(),
            None => return Ok(Poly { degrees: vec![], terms: self.terms.clone() }),
        };
        if images.iter().any(|p| p.degrees != target) {
            return Err(Error::Dimension("substitution images live in different rings".into()));
        }
        let mut out = Poly::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(&target, c.clone());
            for (i, e) in m.iter().enumerate() {
                if *e > 0 {
                    t = &t * &images[i].pow(*e);
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Formats with generator names, highest terms first.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut keys: Vec<&Monomial> = self.terms.keys().collect();
        keys.sort_by(|a, b| cmp_monomials(b, a, &self.degrees));
        let mut s = String::new();
        for (k, m) in keys.iter().enumerate() {
            let c = &self.terms[*m];
            let mut cs = c.to_string();
            let neg = cs.starts_with('-');
            if neg {
                cs.remove(0);
            }
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let is_const = m.iter().all(|e| *e == 0);
            let unit = cs == "1";
            if is_const {
                s.push_str(&cs);
                continue;
            }
            if !unit {
                let _ = write!(s, "{cs}*");
            }
            let factors: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, e)| **e > 0)
                .map(|(i, e)| {
                    let name = names.get(i).cloned().unwrap_or_else(|| format!("x{i}"));
                    if *e == 1 {
                        name
                    } else {
                        format!("{name}^{e}")
                    }
                })
                .collect();
            s.push_str(&factors.join("*"));
        }
        s
    }
}

impl<'a, C: Coefficient> Add<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a, C: Coefficient> Sub<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a, C: Coefficient> Mul<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        let mut out = Poly::zero(&self.degrees);
        for (m, c) in &rhs.terms {
            for (e, x) in &self.terms {
                let ne: Monomial = e.iter().zip(m).map(|(a, b)| a + b).collect();
                out.add_term(ne, x.clone() * c.clone());
            }
        }
        out
    }
}

impl<C: Coefficient> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        self.scale(&-C::one())
    }
}

macro_rules! owned_ops {
    ($tr:ident, $f:ident) => {
        impl<C: Coefficient> $tr<Poly<C>> for Poly<C> {
            type Output = Poly<C>;
            fn $f(self, rhs: Poly<C>) -> Poly<C> {
                (&self).$f(&rhs)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl<C: Coefficient> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        -(&self)
    }
}

/// Integer to rational coefficients.
pub fn to_rational(p: &Poly<BigInt>) -> Poly<BigRational> {
    p.map_coeffs(|c| BigRational::from_integer(c.clone()))
}

/// Rational to integer coefficients, when every coefficient is integral.
pub fn to_integer(p: &Poly<BigRational>) -> Option<Poly<BigInt>> {
    if p.terms().any(|(_, c)| !c.is_integer()) {
        return None;
    }
    Some(p.map_coeffs(|c| c.to_integer()))
}

impl<C: Coefficient> Poly<C> {
    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(&vec![0; self.arity()]).is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn order_puts_later_generators_first() {
        let d = [2, 2];
        // v^2 > u*v > u^2
        assert_eq!(cmp_monomials(&[0, 2], &[2, 0], &d), Ordering::Greater);
        assert_eq!(cmp_monomials(&[1, 1], &[2, 0], &d), Ordering::Greater);
        assert_eq!(cmp_monomials(&[0, 2], &[1, 1], &d), Ordering::Greater);
        // weighted degree dominates
        assert_eq!(cmp_monomials(&[3, 0], &[0, 1], &[2, 4]), Ordering::Greater);
    }

    #[test]
    fn arithmetic_and_display() {
        let d = [2u32, 2];
        let u = Poly::<BigInt>::var(&d, 0);
        let v = Poly::<BigInt>::var(&d, 1);
        let p = &(&u - &v) * &(&u + &v);
        assert_eq!(p.display_with(&names(&["u", "v"])), "-v^2 + u^2");
        assert_eq!(p.homogeneous_degree(), Some(4));
        assert!(!(&u + &Poly::one(&d)).is_homogeneous());
        assert!((&p - &p).is_zero());
        let lead = p.leading().unwrap();
        assert_eq!(lead.0, &vec![0, 2]);
    }

    #[test]
    fn substitution() {
        let src = [4u32, 8];
        let tgt = [2u32];
        let x = Poly::<BigInt>::var(&tgt, 0);
        let y_img = -x.pow(2);
        let chi_img = -x.pow(4);
        let y = Poly::<BigInt>::var(&src, 0);
        let chi = Poly::<BigInt>::var(&src, 1);
        let rel = (&chi + &y.pow(2)).pow(2);
        assert!(rel.substitute(&[y_img, chi_img]).unwrap().is_zero());
    }
}
