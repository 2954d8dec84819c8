//! Integer matrices, Hermite and Smith normal forms, subgroups of Z^r and
//! their annihilators in the torus R^r/Z^r.

use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{fraction_string, IntScalar};

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: IntScalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    /// Builds from rows; every row must have length `cols`.
    pub fn from_rows(cols: usize, rows: &[Vec<T>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::Dimension(format!("row {i} has length {}, expected {cols}", r.len())));
            }
            data.extend(r.iter().cloned());
        }
        Ok(Matrix { rows: rows.len(), cols, data })
    }

    pub fn from_i64_rows(cols: usize, rows: &[Vec<i64>]) -> Result<Self> {
        let conv: Vec<Vec<T>> = rows.iter().map(|r| r.iter().map(|&x| T::from_i64(x)).collect()).collect();
        Self::from_rows(cols, &conv)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out[(i, j)].clone() + a.clone() * other[(k, j)].clone();
                    out[(i, j)] = v;
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += q * row[src]
    fn add_row(&mut self, dst: usize, src: usize, q: &T) {
        for j in 0..self.cols {
            let v = self[(dst, j)].clone() + q.clone() * self[(src, j)].clone();
            self[(dst, j)] = v;
        }
    }

    /// col[dst] += q * col[src]
    fn add_col(&mut self, dst: usize, src: usize, q: &T) {
        for i in 0..self.rows {
            let v = self[(i, dst)].clone() + q.clone() * self[(i, src)].clone();
            self[(i, dst)] = v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -self[(r, j)].clone();
            self[(r, j)] = v;
        }
    }

    fn negate_col(&mut self, c: usize) {
        for i in 0..self.rows {
            let v = -self[(i, c)].clone();
            self[(i, c)] = v;
        }
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Row-style Hermite normal form: the nonzero rows of an echelon basis of
/// the row lattice, pivots positive, entries above a pivot reduced into
/// `[0, pivot)`.
pub fn hnf<T: IntScalar>(m: &Matrix<T>) -> Matrix<T> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut p = 0;
    for col in 0..cols {
        if p == rows {
            break;
        }
        loop {
            let pivot = (p..rows)
                .filter(|&r| !a[(r, col)].is_zero())
                .min_by(|&x, &y| a[(x, col)].abs().cmp(&a[(y, col)].abs()));
            let Some(r0) = pivot else { break };
            a.swap_rows(p, r0);
            let mut clean = true;
            for r in p + 1..rows {
                if a[(r, col)].is_zero() {
                    continue;
                }
                let q = a[(r, col)].div_floor(&a[(p, col)]);
                a.add_row(r, p, &-q);
                if !a[(r, col)].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if a[(p, col)].is_zero() {
            continue;
        }
        if a[(p, col)].is_negative() {
            a.negate_row(p);
        }
        for r in 0..p {
            let q = a[(r, col)].div_floor(&a[(p, col)]);
            if !q.is_zero() {
                a.add_row(r, p, &-q);
            }
        }
        p += 1;
    }
    let kept: Vec<Vec<T>> = (0..p).map(|i| a.row(i).to_vec()).collect();
    Matrix::from_rows(cols, &kept).expect("rows share the column count")
}

/// `u * a * v = d` with `d` diagonal, `d[i] | d[i+1]`, entries nonnegative.
#[derive(Clone, Debug)]
pub struct SmithForm<T> {
    /// Diagonal of length `min(rows, cols)`, zeros included.
    pub diagonal: Vec<T>,
    pub u: Matrix<T>,
    pub u_inv: Matrix<T>,
    pub v: Matrix<T>,
    pub v_inv: Matrix<T>,
}

impl<T: IntScalar> SmithForm<T> {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }
}

pub fn smith_normal_form<T: IntScalar>(m: &Matrix<T>) -> SmithForm<T> {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut u = Matrix::identity(rows);
    let mut u_inv = Matrix::identity(rows);
    let mut v = Matrix::identity(cols);
    let mut v_inv = Matrix::identity(cols);

    // Each elementary op is mirrored on the transforms so that u*m*v = a
    // and the inverses stay exact.
    let row_add = |a: &mut Matrix<T>, u: &mut Matrix<T>, u_inv: &mut Matrix<T>, dst: usize, src: usize, q: &T| {
        a.add_row(dst, src, q);
        u.add_row(dst, src, q);
        u_inv.add_col(src, dst, &-q.clone());
    };
    let col_add = |a: &mut Matrix<T>, v: &mut Matrix<T>, v_inv: &mut Matrix<T>, dst: usize, src: usize, q: &T| {
        a.add_col(dst, src, q);
        v.add_col(dst, src, q);
        v_inv.add_row(src, dst, &-q.clone());
    };

    let n = rows.min(cols);
    for t in 0..n {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if a[(i, j)].is_zero() {
                        continue;
                    }
                    match best {
                        Some((bi, bj)) if a[(bi, bj)].abs() <= a[(i, j)].abs() => {}
                        _ => best = Some((i, j)),
                    }
                }
            }
            let Some((bi, bj)) = best else {
                return finish(a, u, u_inv, v, v_inv, n);
            };
            a.swap_rows(t, bi);
            u.swap_rows(t, bi);
            u_inv.swap_cols(t, bi);
            a.swap_cols(t, bj);
            v.swap_cols(t, bj);
            v_inv.swap_rows(t, bj);

            let mut clean = true;
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = a[(i, t)].div_floor(&a[(t, t)]);
                row_add(&mut a, &mut u, &mut u_inv, i, t, &-q);
                if !a[(i, t)].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = a[(t, j)].div_floor(&a[(t, t)]);
                col_add(&mut a, &mut v, &mut v_inv, j, t, &-q);
                if !a[(t, j)].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            let pivot = a[(t, t)].clone();
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => row_add(&mut a, &mut u, &mut u_inv, t, i, &T::one()),
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            u.negate_row(t);
            u_inv.negate_col(t);
        }
    }
    finish(a, u, u_inv, v, v_inv, n)
}

fn finish<T: IntScalar>(
    a: Matrix<T>,
    u: Matrix<T>,
    u_inv: Matrix<T>,
    v: Matrix<T>,
    v_inv: Matrix<T>,
    n: usize,
) -> SmithForm<T> {
    let diagonal = (0..n).map(|i| a[(i, i)].clone()).collect();
    SmithForm { diagonal, u, u_inv, v, v_inv }
}

/// A subgroup of Z^r, stored by its Hermite basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeSubgroup<T> {
    ambient_rank: usize,
    basis: Matrix<T>,
}

impl<T: IntScalar> LatticeSubgroup<T> {
    pub fn new(ambient_rank: usize, generators: &[Vec<T>]) -> Result<Self> {
        let m = Matrix::from_rows(ambient_rank, generators)?;
        Ok(LatticeSubgroup { ambient_rank, basis: hnf(&m) })
    }

    pub fn from_i64(ambient_rank: usize, generators: &[Vec<i64>]) -> Result<Self> {
        let m = Matrix::from_i64_rows(ambient_rank, generators)?;
        Ok(LatticeSubgroup { ambient_rank, basis: hnf(&m) })
    }

    pub fn zero(ambient_rank: usize) -> Self {
        LatticeSubgroup { ambient_rank, basis: Matrix::zeros(0, ambient_rank) }
    }

    pub fn full(ambient_rank: usize) -> Self {
        LatticeSubgroup { ambient_rank, basis: Matrix::identity(ambient_rank) }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn rank(&self) -> usize {
        self.basis.rows
    }

    /// Hermite basis rows.
    pub fn basis(&self) -> Vec<Vec<T>> {
        self.basis.to_rows()
    }

    pub fn is_full(&self) -> bool {
        self.rank() == self.ambient_rank && (0..self.rank()).all(|i| self.basis[(i, pivot_col(&self.basis, i))].is_one())
    }

    /// Index in Z^r, `None` when the rank is deficient.
    pub fn index(&self) -> Option<T> {
        if self.rank() < self.ambient_rank {
            return None;
        }
        let mut prod = T::one();
        for i in 0..self.rank() {
            prod = prod * self.basis[(i, i)].clone();
        }
        Some(prod)
    }

    pub fn contains_vector(&self, v: &[T]) -> bool {
        if v.len() != self.ambient_rank {
            return false;
        }
        let mut rest = v.to_vec();
        for i in 0..self.rank() {
            let pc = pivot_col(&self.basis, i);
            if rest[..pc].iter().any(|x| !x.is_zero()) {
                return false;
            }
            let p = &self.basis[(i, pc)];
            if !rest[pc].is_multiple_of(p) {
                return false;
            }
            let q = rest[pc].clone() / p.clone();
            if q.is_zero() {
                continue;
            }
            for (j, r) in rest.iter_mut().enumerate().skip(pc) {
                *r = r.clone() - q.clone() * self.basis[(i, j)].clone();
            }
        }
        rest.iter().all(|x| x.is_zero())
    }

    /// Whether `inner` is a subgroup of `self`.
    pub fn contains(&self, inner: &LatticeSubgroup<T>) -> Result<bool> {
        if self.ambient_rank != inner.ambient_rank {
            return Err(Error::Dimension(format!(
                "lattices live in Z^{} and Z^{}",
                self.ambient_rank, inner.ambient_rank
            )));
        }
        Ok((0..inner.rank()).all(|i| self.contains_vector(inner.basis.row(i))))
    }

    pub fn sum(&self, other: &LatticeSubgroup<T>) -> Result<Self> {
        if self.ambient_rank != other.ambient_rank {
            return Err(Error::Dimension("lattice sum across ambient ranks".into()));
        }
        let mut rows = self.basis();
        rows.extend(other.basis());
        Self::new(self.ambient_rank, &rows)
    }

    pub fn with_vector(&self, v: &[T]) -> Result<Self> {
        let mut rows = self.basis();
        rows.push(v.to_vec());
        Self::new(self.ambient_rank, &rows)
    }

    /// The subgroup of R^r/Z^r killed by every character in the lattice.
    pub fn annihilator(&self) -> Annihilator<T> {
        let r = self.ambient_rank;
        let snf = smith_normal_form(&self.basis);
        let k = snf.rank();
        let torsion = snf.diagonal[..k].to_vec();
        Annihilator { ambient_rank: r, torsion, v: snf.v, v_inv: snf.v_inv, characters: self.clone() }
    }
}

fn pivot_col<T: IntScalar>(m: &Matrix<T>, row: usize) -> usize {
    (0..m.cols).find(|&j| !m[(row, j)].is_zero()).unwrap_or(m.cols)
}

impl<T: IntScalar> fmt::Display for LatticeSubgroup<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for i in 0..self.rank() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let row: Vec<String> = self.basis.row(i).iter().map(|x| x.to_string()).collect();
            write!(f, "({})", row.join(","))?;
        }
        write!(f, "> in Z^{}", self.ambient_rank)
    }
}

/// A closed subgroup of the torus R^r/Z^r, presented as
/// `v * (Z/d_1 x ... x Z/d_k x T^{r-k})` in SNF coordinates.
#[derive(Clone, Debug)]
pub struct Annihilator<T> {
    ambient_rank: usize,
    torsion: Vec<T>,
    v: Matrix<T>,
    v_inv: Matrix<T>,
    characters: LatticeSubgroup<T>,
}

impl<T: IntScalar> Annihilator<T> {
    pub fn dimension(&self) -> usize {
        self.ambient_rank - self.torsion.len()
    }

    /// Number of connected components.
    pub fn component_count(&self) -> T {
        self.torsion.iter().fold(T::one(), |acc, d| acc * d.clone())
    }

    pub fn contains(&self, t: &TorusElement<T>) -> bool {
        self.characters.basis().iter().all(|row| t.pair(row).is_integer())
    }

    /// Character lattice of this subgroup, i.e. the double annihilator.
    pub fn character_lattice(&self) -> LatticeSubgroup<T> {
        // Ann(Ann L) = v^{-T} (d_1 Z + ... + d_k Z + 0)
        let r = self.ambient_rank;
        let vt_inv = self.v_inv.transpose();
        let mut gens = Vec::new();
        for (i, d) in self.torsion.iter().enumerate() {
            gens.push((0..r).map(|row| vt_inv[(row, i)].clone() * d.clone()).collect());
        }
        LatticeSubgroup::new(r, &gens).expect("columns have ambient length")
    }

    /// Every element whose order divides `m`, coordinates reduced to [0,1).
    pub fn elements_of_order_dividing(&self, m: &T) -> Vec<TorusElement<T>> {
        let r = self.ambient_rank;
        let steps: Vec<T> = (0..r)
            .map(|i| if i < self.torsion.len() { self.torsion[i].gcd(m) } else { m.clone() })
            .collect();
        let mut out = Vec::new();
        let mut idx = vec![T::zero(); r];
        loop {
            let s: Vec<Ratio<T>> = (0..r).map(|i| Ratio::new(idx[i].clone(), steps[i].clone())).collect();
            let coords = (0..r)
                .map(|row| {
                    let mut acc = Ratio::zero();
                    for (j, sj) in s.iter().enumerate() {
                        acc = acc + Ratio::from_integer(self.v[(row, j)].clone()) * sj.clone();
                    }
                    acc
                })
                .collect();
            out.push(TorusElement::new(coords));
            let mut pos = 0;
            loop {
                if pos == r {
                    return out;
                }
                idx[pos] = idx[pos].clone() + T::one();
                if idx[pos] < steps[pos] {
                    break;
                }
                idx[pos] = T::zero();
                pos += 1;
            }
        }
    }
}

/// A point of R^r/Z^r with rational coordinates in [0,1).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusElement<T: Clone + Integer> {
    coords: Vec<Ratio<T>>,
}

impl<T: IntScalar> TorusElement<T> {
    pub fn new(coords: Vec<Ratio<T>>) -> Self {
        let coords = coords.into_iter().map(|c| c.clone() - c.floor()).collect();
        TorusElement { coords }
    }

    pub fn identity(rank: usize) -> Self {
        TorusElement { coords: vec![Ratio::zero(); rank] }
    }

    pub fn coords(&self) -> &[Ratio<T>] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_identity(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// lcm of the coordinate denominators.
    pub fn order(&self) -> T {
        self.coords.iter().fold(T::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// `<w, t>` as an element of Q (not reduced mod 1).
    pub fn pair(&self, w: &[T]) -> Ratio<T> {
        let mut acc = Ratio::zero();
        for (c, wi) in self.coords.iter().zip(w) {
            acc = acc + c.clone() * Ratio::from_integer(wi.clone());
        }
        acc
    }

    /// `<w, t> mod 1` in [0,1).
    pub fn pair_mod1(&self, w: &[T]) -> Ratio<T> {
        let p = self.pair(w);
        p.clone() - p.floor()
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coords.iter().map(fraction_string).collect()
    }
}

impl<T: IntScalar> Serialize for TorusElement<T> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de, T: IntScalar + std::str::FromStr> Deserialize<'de> for TorusElement<T> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<String> = Vec::deserialize(d)?;
        let coords = raw
            .iter()
            .map(|c| {
                crate::scalar::parse_fraction::<T>(c)
                    .ok_or_else(|| serde::de::Error::custom(format!("bad fraction {c:?}")))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(TorusElement::new(coords))
    }
}

impl<T: IntScalar> fmt::Display for TorusElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}

/// A finitely generated abelian group by invariant factors; 0 marks a Z.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiniteAbelianGroup {
    pub invariant_factors: Vec<i64>,
}

impl FiniteAbelianGroup {
    /// Cokernel of the integer map Z^rows -> Z^cols given by row vectors.
    pub fn cokernel(m: &Matrix<i64>) -> Self {
        let snf = smith_normal_form(m);
        let mut factors: Vec<i64> = snf.diagonal.iter().copied().filter(|&d| d != 1).collect();
        factors.extend(std::iter::repeat(0).take(m.cols() - snf.diagonal.len()));
        // divisibility chain puts free summands last
        factors.sort_by_key(|&d| if d == 0 { i64::MAX } else { d });
        FiniteAbelianGroup { invariant_factors: factors }
    }

    pub fn trivial() -> Self {
        FiniteAbelianGroup { invariant_factors: vec![] }
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn free_rank(&self) -> usize {
        self.invariant_factors.iter().filter(|&&d| d == 0).count()
    }

    pub fn torsion_order(&self) -> i64 {
        self.invariant_factors.iter().filter(|&&d| d != 0).product()
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.invariant_factors.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.invariant_factors.iter().map(|&d| if d == 0 { "Z".to_string() } else { format!("Z/{d}") }).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>], cols: usize) -> Matrix<i64> {
        Matrix::from_rows(cols, rows).unwrap()
    }

    fn check_snf(a: &Matrix<i64>) -> SmithForm<i64> {
        let s = smith_normal_form(a);
        let d = s.u.mul(a).unwrap().mul(&s.v).unwrap();
        for i in 0..a.rows() {
            for j in 0..a.cols() {
                let expect = if i == j { s.diagonal[i] } else { 0 };
                assert_eq!(d[(i, j)], expect, "u*a*v at ({i},{j}) for {a}");
            }
        }
        assert_eq!(s.u.mul(&s.u_inv).unwrap(), Matrix::identity(a.rows()));
        assert_eq!(s.v.mul(&s.v_inv).unwrap(), Matrix::identity(a.cols()));
        for w in s.diagonal.windows(2) {
            if w[1] != 0 {
                assert_eq!(w[1] % w[0], 0);
            }
        }
        s
    }

    #[test]
    fn snf_small_cases() {
        assert_eq!(check_snf(&m(&[vec![1, -2]], 2)).diagonal, vec![1]);
        assert_eq!(check_snf(&m(&[vec![10]], 1)).diagonal, vec![10]);
        assert_eq!(check_snf(&m(&[vec![2, 0], vec![0, 3]], 2)).diagonal, vec![1, 6]);
        assert_eq!(check_snf(&m(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]], 3)).diagonal, vec![2, 6, 12]);
        assert_eq!(check_snf(&m(&[vec![0, 0], vec![0, 0]], 2)).diagonal, vec![0, 0]);
    }

    #[test]
    fn hnf_is_idempotent_and_canonical() {
        let a = m(&[vec![4, 6], vec![2, 3], vec![0, 5]], 2);
        let h = hnf(&a);
        assert_eq!(hnf(&h), h);
        assert_eq!(h.to_rows(), vec![vec![2, 3], vec![0, 5]]);
    }

    #[test]
    fn containment_examples() {
        let outer = LatticeSubgroup::<i64>::from_i64(2, &[vec![2, 0], vec![0, 2]]).unwrap();
        assert!(outer.contains(&LatticeSubgroup::<i64>::from_i64(2, &[vec![2, 2]]).unwrap()).unwrap());
        assert!(!outer.contains(&LatticeSubgroup::<i64>::from_i64(2, &[vec![1, 1]]).unwrap()).unwrap());
        let line = LatticeSubgroup::<i64>::from_i64(2, &[vec![1, -2]]).unwrap();
        assert!(line.contains(&LatticeSubgroup::<i64>::from_i64(2, &[vec![3, -6]]).unwrap()).unwrap());
        assert!(outer.contains(&LatticeSubgroup::<i64>::from_i64(3, &[vec![1, 1, 1]]).unwrap()).is_err());
    }

    #[test]
    fn annihilator_of_2z() {
        let l = LatticeSubgroup::<i64>::from_i64(1, &[vec![2]]).unwrap();
        let ann = l.annihilator();
        let elems = ann.elements_of_order_dividing(&4i64);
        let strs: Vec<Vec<String>> = elems.iter().map(|e| e.to_strings()).collect();
        assert_eq!(strs, vec![vec!["0".to_string()], vec!["1/2".to_string()]]);
        assert_eq!(ann.character_lattice(), l);
    }

    #[test]
    fn cokernel_formatting() {
        assert_eq!(FiniteAbelianGroup::cokernel(&m(&[vec![10]], 1)).to_string(), "Z/10");
        assert_eq!(FiniteAbelianGroup::cokernel(&m(&[vec![-1]], 1)).to_string(), "0");
        assert_eq!(FiniteAbelianGroup::cokernel(&Matrix::zeros(0, 1)).to_string(), "Z");
        assert_eq!(FiniteAbelianGroup::cokernel(&m(&[vec![2, 0], vec![0, 3]], 2)).to_string(), "Z/6");
    }
}
