//! Weight multisets of torus representations, Dynkin indices, SU(2)
//! homomorphisms and characteristic classes in terms of the invariant
//! generators of circles and SU(2)s.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups_catalog::{profile, CatalogEntry, Family, HomWitness, RepPiece, SimpleGroupId, TorusModel};
use crate::poly::{self, Poly};

/// Weights are integer vectors read as `w / scale`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TorusLattice {
    pub rank: usize,
    pub scale: i64,
}

impl TorusLattice {
    pub fn new(rank: usize, scale: i64) -> Result<Self> {
        if scale != 1 && scale != 2 {
            return Err(Error::InvalidRep(format!("scale must be 1 or 2, got {scale}")));
        }
        Ok(TorusLattice { rank, scale })
    }

    pub fn integral(rank: usize) -> Self {
        TorusLattice { rank, scale: 1 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Reality {
    Complex,
    /// Real, stored as `roots ++ negated roots` with the roots fixing the
    /// orientation.
    RealWithOrientation,
    /// Real with an unspecified orientation.
    Real,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Chirality {
    Plus,
    Minus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Combinator {
    Sum,
    Tensor,
    Dual,
    Realify,
    Complexify,
}

/// One factor of a source group whose classifying ring is polynomial:
/// a circle contributes `x = c_1 L` in degree 2, an SU(2) contributes
/// `z = -c_2 V` in degree 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SourceFactor {
    Circle,
    Su2,
}

impl SourceFactor {
    pub fn degree(self) -> u32 {
        match self {
            SourceFactor::Circle => 2,
            SourceFactor::Su2 => 4,
        }
    }
}

/// A representation of a torus as a multiset of weights. Real reps store
/// the weights of their complexification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightRep {
    pub lattice: TorusLattice,
    pub weights: Vec<Vec<i64>>,
    pub reality: Reality,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl WeightRep {
    pub fn new(lattice: TorusLattice, weights: Vec<Vec<i64>>, reality: Reality) -> Result<Self> {
        TorusLattice::new(lattice.rank, lattice.scale)?;
        if let Some(w) = weights.iter().find(|w| w.len() != lattice.rank) {
            return Err(Error::InvalidRep(format!("weight {w:?} does not have length {}", lattice.rank)));
        }
        let rep = WeightRep { lattice, weights, reality, label: None };
        if reality != Reality::Complex {
            rep.check_self_conjugate()?;
        }
        if reality == Reality::RealWithOrientation {
            let h = rep.weights.len() / 2;
            let ok = rep.weights.len() % 2 == 0
                && (0..h).all(|i| rep.weights[i + h].iter().zip(&rep.weights[i]).all(|(a, b)| *a == -*b));
            if !ok {
                return Err(Error::InvalidRep("oriented real rep must be stored as roots ++ negated roots".into()));
            }
        }
        Ok(rep)
    }

    pub fn complex(rank: usize, weights: Vec<Vec<i64>>) -> Result<Self> {
        Self::new(TorusLattice::integral(rank), weights, Reality::Complex)
    }

    /// Rank-1 rep with the given integer weights.
    pub fn circle(weights: &[i64]) -> Self {
        WeightRep {
            lattice: TorusLattice::integral(1),
            weights: weights.iter().map(|w| vec![*w]).collect(),
            reality: Reality::Complex,
            label: None,
        }
    }

    pub fn trivial(rank: usize, dim: usize) -> Self {
        WeightRep {
            lattice: TorusLattice::integral(rank),
            weights: vec![vec![0; rank]; dim],
            reality: Reality::Complex,
            label: None,
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn rank(&self) -> usize {
        self.lattice.rank
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    fn check_self_conjugate(&self) -> Result<()> {
        let mut a = self.weights.clone();
        let mut b: Vec<Vec<i64>> = self.weights.iter().map(|w| w.iter().map(|x| -x).collect()).collect();
        a.sort();
        b.sort();
        if a != b {
            return Err(Error::InvalidRep("real rep needs weights closed under negation".into()));
        }
        Ok(())
    }

    /// Sorted weights, for multiset comparison.
    pub fn sorted_weights(&self) -> Vec<Vec<i64>> {
        let mut w = self.weights.clone();
        w.sort();
        w
    }

    /// Same weights after bringing both to a common scale.
    pub fn same_weights(&self, other: &WeightRep) -> bool {
        if self.rank() != other.rank() {
            return false;
        }
        let s = self.lattice.scale.max(other.lattice.scale);
        self.rescaled(s).sorted_weights() == other.rescaled(s).sorted_weights()
    }

    /// Expresses the weights on scale `s`, a multiple of the current one.
    pub fn rescaled(&self, s: i64) -> WeightRep {
        let f = s / self.lattice.scale;
        let mut out = self.clone();
        out.lattice.scale = s;
        for w in &mut out.weights {
            for x in w.iter_mut() {
                *x *= f;
            }
        }
        out
    }

    /// Drops to scale 1 when every weight is integral.
    pub fn normalized(mut self) -> WeightRep {
        if self.lattice.scale == 2 && self.weights.iter().flatten().all(|x| x % 2 == 0) {
            for w in &mut self.weights {
                for x in w.iter_mut() {
                    *x /= 2;
                }
            }
            self.lattice.scale = 1;
        }
        self
    }

    /// The weights as rational vectors.
    pub fn rational_weights(&self) -> Vec<Vec<BigRational>> {
        let s = BigInt::from(self.lattice.scale);
        self.weights
            .iter()
            .map(|w| w.iter().map(|x| BigRational::new(BigInt::from(*x), s.clone())).collect())
            .collect()
    }

    pub fn sum(&self, other: &WeightRep) -> Result<WeightRep> {
        if self.rank() != other.rank() {
            return Err(Error::Dimension(format!("sum of reps of rank {} and {}", self.rank(), other.rank())));
        }
        let s = self.lattice.scale.max(other.lattice.scale);
        let (a, b) = (self.rescaled(s), other.rescaled(s));
        let reality = match (a.reality, b.reality) {
            (Reality::Complex, Reality::Complex) => Reality::Complex,
            (Reality::RealWithOrientation, Reality::RealWithOrientation) => Reality::RealWithOrientation,
            (Reality::Complex, _) | (_, Reality::Complex) => {
                return Err(Error::InvalidRep("cannot add a complex and a real rep; realify first".into()))
            }
            _ => Reality::Real,
        };
        let weights = if reality == Reality::RealWithOrientation {
            let (ha, hb) = (a.dim() / 2, b.dim() / 2);
            let mut w = Vec::with_capacity(a.dim() + b.dim());
            w.extend_from_slice(&a.weights[..ha]);
            w.extend_from_slice(&b.weights[..hb]);
            w.extend_from_slice(&a.weights[ha..]);
            w.extend_from_slice(&b.weights[hb..]);
            w
        } else {
            a.weights.iter().chain(&b.weights).cloned().collect()
        };
        Ok(WeightRep { lattice: a.lattice, weights, reality, label: None })
    }

    /// Sum of `k >= 1` copies.
    pub fn copies(&self, k: usize) -> Result<WeightRep> {
        if k == 0 {
            return Err(Error::InvalidRep("zero copies".into()));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.sum(self)?;
        }
        Ok(acc)
    }

    pub fn tensor(&self, other: &WeightRep) -> Result<WeightRep> {
        if self.rank() != other.rank() {
            return Err(Error::Dimension(format!("tensor of reps of rank {} and {}", self.rank(), other.rank())));
        }
        let s = self.lattice.scale.max(other.lattice.scale);
        let (a, b) = (self.rescaled(s), other.rescaled(s));
        let mut weights = Vec::with_capacity(a.dim() * b.dim());
        for x in &a.weights {
            for y in &b.weights {
                weights.push(x.iter().zip(y).map(|(p, q)| p + q).collect());
            }
        }
        let reality = match (a.reality, b.reality) {
            (Reality::Complex, Reality::Complex) => Reality::Complex,
            _ => Reality::Real,
        };
        if reality == Reality::Real && (a.reality == Reality::Complex || b.reality == Reality::Complex) {
            return Err(Error::InvalidRep("tensor of a complex and a real rep".into()));
        }
        Ok(WeightRep { lattice: a.lattice, weights, reality, label: None }.normalized())
    }

    pub fn dual(&self) -> WeightRep {
        let mut out = self.clone();
        for w in &mut out.weights {
            for x in w.iter_mut() {
                *x = -*x;
            }
        }
        out.label = None;
        out
    }

    /// Underlying real rep of a complex rep, stored as `V ++ dual(V)`.
    pub fn realify(&self) -> Result<WeightRep> {
        if self.reality != Reality::Complex {
            return Err(Error::InvalidRep("realify expects a complex rep".into()));
        }
        let mut weights = self.weights.clone();
        weights.extend(self.dual().weights);
        Ok(WeightRep { lattice: self.lattice, weights, reality: Reality::Real, label: None })
    }

    /// Same weights read as a complex rep.
    pub fn complexify(&self) -> WeightRep {
        let mut out = self.clone();
        out.reality = Reality::Complex;
        out.label = None;
        out
    }

    /// Declares a self-conjugate weight multiset to be a real rep.
    pub fn as_real(&self) -> Result<WeightRep> {
        let mut out = self.clone();
        out.reality = Reality::Real;
        out.check_self_conjugate()?;
        Ok(out)
    }

    /// Fixes the orientation given by the current layout, which must be
    /// `roots ++ negated roots` (as produced by [`WeightRep::realify`]).
    pub fn oriented(&self) -> Result<WeightRep> {
        WeightRep::new(self.lattice, self.weights.clone(), Reality::RealWithOrientation)
    }

    /// Pulls back along cocharacters: row j of `cochars` is a vector in the
    /// source lattice, and the new weight j is its pairing with w.
    pub fn restrict(&self, cochars: &[Vec<i64>]) -> Result<WeightRep> {
        if let Some(c) = cochars.iter().find(|c| c.len() != self.rank()) {
            return Err(Error::Dimension(format!("cocharacter {c:?} does not have length {}", self.rank())));
        }
        let weights = self
            .weights
            .iter()
            .map(|w| cochars.iter().map(|c| c.iter().zip(w).map(|(a, b)| a * b).sum()).collect())
            .collect();
        let out = WeightRep {
            lattice: TorusLattice { rank: cochars.len(), scale: self.lattice.scale },
            weights,
            reality: self.reality,
            label: None,
        };
        Ok(out.normalized())
    }

    /// Places this rep on coordinates `offset..offset+rank` of a torus of
    /// rank `total`.
    pub fn embed(&self, offset: usize, total: usize) -> Result<WeightRep> {
        if offset + self.rank() > total {
            return Err(Error::Dimension("embedding exceeds the target rank".into()));
        }
        let weights = self
            .weights
            .iter()
            .map(|w| {
                let mut v = vec![0; total];
                v[offset..offset + w.len()].copy_from_slice(w);
                v
            })
            .collect();
        Ok(WeightRep { lattice: TorusLattice { rank: total, scale: self.lattice.scale }, weights, ..self.clone() })
    }
}

impl fmt::Display for WeightRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(l) = &self.label {
            write!(f, "{l} ")?;
        }
        let ws: Vec<String> = self
            .sorted_weights()
            .iter()
            .map(|w| {
                let parts: Vec<String> = w
                    .iter()
                    .map(|x| if self.lattice.scale == 1 { x.to_string() } else { format!("{x}/{}", self.lattice.scale) })
                    .collect();
                if parts.len() == 1 {
                    parts[0].clone()
                } else {
                    format!("({})", parts.join(","))
                }
            })
            .collect();
        write!(f, "{{{}}}", ws.join(", "))
    }
}

/// Applies a combinator; unary modes ignore `b`.
pub fn rep_combinators(a: &WeightRep, b: Option<&WeightRep>, mode: Combinator) -> Result<WeightRep> {
    let need_b = || b.ok_or_else(|| Error::InvalidRep(format!("{mode:?} needs two reps")));
    match mode {
        Combinator::Sum => a.sum(need_b()?),
        Combinator::Tensor => a.tensor(need_b()?),
        Combinator::Dual => Ok(a.dual()),
        Combinator::Realify => a.realify(),
        Combinator::Complexify => Ok(a.complexify()),
    }
}

/// Sym^k of the standard rep of SU(2): weights k, k-2, ..., -k.
pub fn sym_power(k: u32) -> WeightRep {
    let k = k as i64;
    let w: Vec<i64> = (0..=k).map(|i| k - 2 * i).collect();
    let label = match k {
        0 => "C".to_string(),
        1 => "V".to_string(),
        _ => format!("S^{k}V"),
    };
    WeightRep::circle(&w).with_label(label)
}

/// Sym^a (x) Sym^b as a list of Sym exponents, largest first.
pub fn clebsch_gordan(a: u32, b: u32) -> Vec<u32> {
    (0..=a.min(b)).map(|i| a + b - 2 * i).collect()
}

/// Direct sum of Sym^{k_i}.
pub fn su2_rep_from_parts(parts: &[u32]) -> WeightRep {
    let mut w = Vec::new();
    for &k in parts {
        w.extend(sym_power(k).weights.into_iter().map(|v| v[0]));
    }
    WeightRep::circle(&w)
}

/// Sign vectors on scale 2; even `n` needs a chirality.
pub fn spin_rep(n: u32, chirality: Option<Chirality>) -> Result<WeightRep> {
    if n < 3 {
        return Err(Error::InvalidRep(format!("spin rep of Spin({n}) needs n >= 3")));
    }
    let r = (n / 2) as usize;
    let odd = n % 2 == 1;
    if odd && chirality.is_some() {
        return Err(Error::InvalidRep(format!("Spin({n}) has a single spin rep")));
    }
    if !odd && chirality.is_none() {
        return Err(Error::InvalidRep(format!("Spin({n}) needs a chirality")));
    }
    let mut weights = Vec::new();
    for mask in 0u32..(1 << r) {
        let minus = mask.count_ones();
        let keep = match chirality {
            None => true,
            Some(Chirality::Plus) => minus % 2 == 0,
            Some(Chirality::Minus) => minus % 2 == 1,
        };
        if keep {
            weights.push((0..r).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect());
        }
    }
    let label = match chirality {
        None => format!("spin rep of Spin({n})"),
        Some(Chirality::Plus) => format!("S+ of Spin({n})"),
        Some(Chirality::Minus) => format!("S- of Spin({n})"),
    };
    Ok(WeightRep { lattice: TorusLattice { rank: r, scale: 2 }, weights, reality: Reality::Complex, label: Some(label) })
}

fn unit(r: usize, i: usize, s: i64) -> Vec<i64> {
    let mut v = vec![0; r];
    v[i] = s;
    v
}

fn model_rank(model: TorusModel) -> usize {
    match model {
        TorusModel::Su(n) => n as usize - 1,
        TorusModel::Sp(two_n) => two_n as usize / 2,
        TorusModel::Spin(m) => m as usize / 2,
        TorusModel::G2 => 2,
    }
}

/// The index-one circle (long-root coroot) in the model's coordinates.
pub fn long_coroot(model: TorusModel) -> Vec<i64> {
    let r = model_rank(model);
    match model {
        TorusModel::Su(2) => vec![1],
        TorusModel::Su(_) => {
            let mut v = vec![0; r];
            v[0] = 1;
            v[1] = -1;
            v
        }
        TorusModel::Sp(_) => unit(r, 0, 1),
        TorusModel::Spin(3) => vec![2],
        TorusModel::Spin(_) => {
            let mut v = vec![0; r];
            v[0] = 1;
            v[1] = 1;
            v
        }
        TorusModel::G2 => vec![1, -1],
    }
}

fn g2_seven() -> Vec<Vec<i64>> {
    vec![vec![1, 0], vec![0, 1], vec![-1, -1], vec![-1, 0], vec![0, -1], vec![1, 1], vec![0, 0]]
}

fn piece_rep(model: TorusModel, piece: RepPiece) -> Result<WeightRep> {
    let r = model_rank(model);
    let bad = || Error::InvalidRep(format!("{piece:?} is not defined on {model:?}"));
    let rep = match (model, piece) {
        (_, RepPiece::Trivial(k)) => WeightRep::trivial(r, k as usize),
        (TorusModel::Su(n), RepPiece::Defining) => {
            let mut w: Vec<Vec<i64>> = (0..r).map(|i| unit(r, i, 1)).collect();
            w.push(vec![-1; r]);
            debug_assert_eq!(w.len(), n as usize);
            WeightRep::complex(r, w)?
        }
        (TorusModel::Su(_), RepPiece::Dual) => piece_rep(model, RepPiece::Defining)?.dual(),
        (TorusModel::Su(2), RepPiece::Sym(k)) => sym_power(k),
        (TorusModel::Sp(_), RepPiece::Defining) => {
            WeightRep::complex(r, (0..r).flat_map(|i| [unit(r, i, 1), unit(r, i, -1)]).collect())?
        }
        (TorusModel::Spin(m), RepPiece::Vector | RepPiece::Defining) => {
            let mut w: Vec<Vec<i64>> = (0..r).flat_map(|i| [unit(r, i, 1), unit(r, i, -1)]).collect();
            if m % 2 == 1 {
                w.push(vec![0; r]);
            }
            WeightRep::complex(r, w)?
        }
        (TorusModel::Spin(m), RepPiece::Spin) if m % 2 == 1 => spin_rep(m, None)?,
        (TorusModel::G2, RepPiece::Seven | RepPiece::Defining) => WeightRep::complex(2, g2_seven())?,
        _ => return Err(bad()),
    };
    Ok(rep)
}

/// The defining rep of G restricted to H, in H's model coordinates.
pub fn witness_rep(w: &HomWitness) -> Result<WeightRep> {
    let mut acc: Option<WeightRep> = None;
    for p in &w.pieces {
        let rep = piece_rep(w.model, *p)?;
        acc = Some(match acc {
            None => rep,
            Some(a) => a.sum(&rep)?,
        });
    }
    acc.ok_or_else(|| Error::InvalidRep("empty witness".into()))
}

/// The witness restricted to the index-one circle of H.
pub fn witness_circle_rep(w: &HomWitness) -> Result<WeightRep> {
    witness_rep(w)?.restrict(&[long_coroot(w.model)])
}

/// Dynkin index of a catalog homomorphism, from its witness weights.
pub fn catalog_dynkin_index(e: &CatalogEntry) -> Result<i64> {
    let circle = witness_circle_rep(&e.witness)?;
    dynkin_index(&circle, profile(e.g).vector_index_norm as i64)
}

/// Defining rep of a classical group or G2 on its maximal torus.
pub fn standard_rep(id: SimpleGroupId) -> Result<WeightRep> {
    let l = id.rank();
    let (model, piece) = match id.family() {
        Family::A => (TorusModel::Su(l + 1), RepPiece::Defining),
        Family::B => (TorusModel::Spin(2 * l + 1), RepPiece::Vector),
        Family::C => (TorusModel::Sp(2 * l), RepPiece::Defining),
        Family::D => (TorusModel::Spin(2 * l), RepPiece::Vector),
        Family::G2 => (TorusModel::G2, RepPiece::Seven),
        _ => return Err(Error::UnsupportedGroup(format!("{id} has no weight data here"))),
    };
    Ok(piece_rep(model, piece)?.with_label(format!("defining rep of {id}")))
}

/// The index-one circle of a classical group or G2.
pub fn index_one_circle(id: SimpleGroupId) -> Result<Vec<i64>> {
    let l = id.rank();
    match id.family() {
        Family::A => Ok(long_coroot(TorusModel::Su(l + 1))),
        Family::B => Ok(long_coroot(TorusModel::Spin(2 * l + 1))),
        Family::C => Ok(long_coroot(TorusModel::Sp(2 * l))),
        Family::D => Ok(long_coroot(TorusModel::Spin(2 * l))),
        Family::G2 => Ok(long_coroot(TorusModel::G2)),
        _ => Err(Error::UnsupportedGroup(format!("{id} has no weight data here"))),
    }
}

/// `(1/2) sum (w/scale)^2 / norm` for a rep of a circle.
pub fn dynkin_index(rep: &WeightRep, norm: i64) -> Result<i64> {
    if rep.rank() != 1 {
        return Err(Error::InvalidRep(format!("Dynkin index needs a rank-1 rep, got rank {}", rep.rank())));
    }
    if norm <= 0 {
        return Err(Error::InvalidRep("norm must be positive".into()));
    }
    let s = rep.lattice.scale;
    let num: i64 = rep.weights.iter().map(|w| w[0] * w[0]).sum();
    let den = 2 * s * s * norm;
    if num % den != 0 {
        return Err(Error::InvalidRep(format!("index {num}/{den} is not integral; wrong normalization?")));
    }
    Ok(num / den)
}

fn partitions(n: u32, max: u32, out: &mut Vec<Vec<u32>>, cur: &mut Vec<u32>) {
    if n == 0 {
        out.push(cur.clone());
        return;
    }
    for p in (1..=max.min(n)).rev() {
        cur.push(p);
        partitions(n - p, p, out, cur);
        cur.pop();
    }
}

fn parts_label(dims: &[u32]) -> String {
    let mut pieces = Vec::new();
    let trivial = dims.iter().filter(|&&d| d == 1).count();
    for &d in dims.iter().filter(|&&d| d > 1) {
        pieces.push(match d {
            2 => "V".to_string(),
            d => format!("S^{}V", d - 1),
        });
    }
    match trivial {
        0 => {}
        1 => pieces.push("C".into()),
        t => pieces.push(format!("C^{t}")),
    }
    pieces.join("+")
}

/// Conjugacy classes of nontrivial homomorphisms SU(2) -> target, as
/// circle reps of the defining rep, ordered by Dynkin index.
pub fn su2_homs(target: SimpleGroupId) -> Result<Vec<WeightRep>> {
    if target.family() == Family::G2 {
        let rows: [(&str, &[u32]); 4] =
            [("W1", &[1, 1, 0, 0, 0]), ("W3", &[2, 1, 1]), ("W4", &[2, 2, 0]), ("W28", &[6])];
        return Ok(rows.iter().map(|(l, p)| su2_rep_from_parts(p).with_label(*l)).collect());
    }
    let dim = match profile(target).faithful_rep {
        crate::groups_catalog::FaithfulRep::Standard { dim } => dim,
        _ => return Err(Error::UnsupportedGroup(format!("{target} has no weight data here"))),
    };
    let mut all = Vec::new();
    partitions(dim, dim, &mut all, &mut Vec::new());
    let count = |p: &[u32], d: u32| p.iter().filter(|&&x| x == d).count();
    let allowed = |p: &[u32]| -> bool {
        match target.family() {
            Family::A => true,
            // odd-dimensional irreps are orthogonal and pair up
            Family::C => p.iter().all(|&d| d % 2 == 0 || count(p, d) % 2 == 0),
            // even-dimensional irreps are symplectic and pair up
            Family::B | Family::D => p.iter().all(|&d| d % 2 == 1 || count(p, d) % 2 == 0),
            _ => false,
        }
    };
    let norm = profile(target).vector_index_norm as i64;
    let mut out: Vec<(i64, WeightRep)> = Vec::new();
    for p in all.iter().filter(|p| p.iter().any(|&d| d > 1)).filter(|p| allowed(p)) {
        let exps: Vec<u32> = p.iter().map(|d| d - 1).collect();
        let rep = su2_rep_from_parts(&exps).with_label(parts_label(p));
        let idx = dynkin_index(&rep, norm)?;
        out.push((idx, rep));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.label.cmp(&b.1.label)));
    Ok(out.into_iter().map(|(_, r)| r).collect())
}

fn check_factors(rep: &WeightRep, factors: &[SourceFactor]) -> Result<()> {
    if rep.rank() != factors.len() {
        return Err(Error::Dimension(format!(
            "rep has rank {} but {} source factors were given",
            rep.rank(),
            factors.len()
        )));
    }
    Ok(())
}

/// Linear forms `w/scale` in formal variables t_i of degree 2.
fn linear_forms(rep: &WeightRep) -> Vec<Poly<BigRational>> {
    let r = rep.rank();
    let degs = vec![2u32; r];
    rep.rational_weights()
        .into_iter()
        .map(|w| {
            let mut p = Poly::zero(&degs);
            for (i, c) in w.into_iter().enumerate() {
                p = &p + &Poly::var(&degs, i).scale(&c);
            }
            p
        })
        .collect()
}

/// Rewrites a polynomial in the t_i into the invariant generators.
fn to_invariants(p: &Poly<BigRational>, factors: &[SourceFactor]) -> Result<Poly<BigInt>> {
    let degs: Vec<u32> = factors.iter().map(|f| f.degree()).collect();
    let mut out = Poly::<BigRational>::zero(&degs);
    for (m, c) in p.terms() {
        let mut e = Vec::with_capacity(m.len());
        for (i, f) in factors.iter().enumerate() {
            match f {
                SourceFactor::Circle => e.push(m[i]),
                SourceFactor::Su2 => {
                    if m[i] % 2 == 1 {
                        return Err(Error::NotInvariant(format!("odd power of the SU(2) root in coordinate {i}")));
                    }
                    e.push(m[i] / 2);
                }
            }
        }
        out.add_term(e, c.clone());
    }
    poly::to_integer(&out).ok_or_else(|| Error::NotInvariant("non-integral coefficient".into()))
}

/// k-th Chern class of the rep in `Z[x_i, z_j]`, with `x = c_1 L` for
/// circles and `z = -c_2 V` for SU(2)s.
pub fn chern_pullback(rep: &WeightRep, k: usize, factors: &[SourceFactor]) -> Result<Poly<BigInt>> {
    check_factors(rep, factors)?;
    let r = rep.rank();
    let degs = vec![2u32; r];
    // e_k by the recurrence over the roots
    let mut e: Vec<Poly<BigRational>> = vec![Poly::one(&degs)];
    for l in linear_forms(rep) {
        e.push(Poly::zero(&degs));
        for j in (1..e.len()).rev() {
            e[j] = &e[j] + &(&e[j - 1] * &l);
        }
    }
    let ek = e.get(k).cloned().unwrap_or_else(|| Poly::zero(&degs));
    to_invariants(&ek, factors)
}

/// Euler class and whether its sign is pinned down by the data.
pub fn euler_class(rep: &WeightRep, factors: &[SourceFactor]) -> Result<(Poly<BigInt>, bool)> {
    check_factors(rep, factors)?;
    let forms = linear_forms(rep);
    let degs = vec![2u32; rep.rank()];
    let prod = |idx: &[usize]| idx.iter().fold(Poly::one(&degs), |acc, &i| &acc * &forms[i]);
    match rep.reality {
        Reality::Complex => {
            let all: Vec<usize> = (0..forms.len()).collect();
            Ok((to_invariants(&prod(&all), factors)?, true))
        }
        Reality::RealWithOrientation => {
            let half: Vec<usize> = (0..forms.len() / 2).collect();
            Ok((to_invariants(&prod(&half), factors)?, true))
        }
        Reality::Real => {
            if rep.dim() % 2 == 1 {
                return Err(Error::InvalidRep(format!(
                    "real rep of odd rank {} has zero Euler class",
                    rep.dim()
                )));
            }
            let mut used = vec![false; rep.dim()];
            let mut roots = Vec::new();
            for i in 0..rep.dim() {
                if used[i] {
                    continue;
                }
                used[i] = true;
                let neg: Vec<i64> = rep.weights[i].iter().map(|x| -x).collect();
                let j = (0..rep.dim())
                    .find(|&j| !used[j] && rep.weights[j] == neg)
                    .ok_or_else(|| Error::InvalidRep("weights do not pair under negation".into()))?;
                used[j] = true;
                // canonical representative: first nonzero coordinate positive
                let pos = rep.weights[i].iter().find(|x| **x != 0).map(|x| *x > 0).unwrap_or(true);
                roots.push(if pos { i } else { j });
            }
            Ok((to_invariants(&prod(&roots), factors)?, false))
        }
    }
}

/// Is `a` equal to `b` or `-b`?
pub fn equal_up_to_sign<C: crate::scalar::Coefficient>(a: &Poly<C>, b: &Poly<C>) -> bool {
    a == b || *a == -b
}

/// Number of weights equal to zero.
pub fn zero_weight_count(rep: &WeightRep) -> usize {
    rep.weights.iter().filter(|w| w.iter().all(|x| *x == 0)).count()
}

/// Whether the center element -1 of SU(2) acts trivially (all weights even).
pub fn kills_minus_one(rep: &WeightRep) -> bool {
    rep.rank() == 1 && rep.weights.iter().all(|w| w[0] % 2 == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zpoly(degs: &[u32], terms: &[(&[u32], i64)]) -> Poly<BigInt> {
        Poly::from_terms(degs, terms.iter().map(|(m, c)| (m.to_vec(), BigInt::from(*c)))).unwrap()
    }

    #[test]
    fn standard_reps() {
        let su2 = standard_rep(SimpleGroupId::su(2).unwrap()).unwrap();
        assert_eq!(su2.sorted_weights(), vec![vec![-1], vec![1]]);
        let sp4 = standard_rep(SimpleGroupId::sp(4).unwrap()).unwrap();
        assert_eq!(sp4.dim(), 4);
        let g2 = standard_rep(SimpleGroupId::g2()).unwrap();
        let circle = g2.restrict(&[vec![2, 4]]).unwrap();
        assert_eq!(circle.sorted_weights(), vec![vec![-6], vec![-4], vec![-2], vec![0], vec![2], vec![4], vec![6]]);
        assert!(standard_rep(SimpleGroupId::f4()).is_err());
    }

    #[test]
    fn spin_reps() {
        let s = spin_rep(8, Some(Chirality::Minus)).unwrap();
        assert_eq!(s.dim(), 8);
        assert!(s.weights.iter().all(|w| w.iter().filter(|x| **x < 0).count() % 2 == 1));
        let s9 = spin_rep(9, None).unwrap();
        let sum = spin_rep(8, Some(Chirality::Minus)).unwrap().sum(&spin_rep(8, Some(Chirality::Plus)).unwrap()).unwrap();
        assert!(s9.same_weights(&sum));
        let circle = s.restrict(&[vec![2, 0, 0, 0]]).unwrap();
        assert_eq!(circle.lattice.scale, 1);
        assert_eq!(circle.sorted_weights(), [vec![vec![-1]; 4], vec![vec![1]; 4]].concat());
        assert!(spin_rep(2, None).is_err());
        assert!(spin_rep(8, None).is_err());
    }

    #[test]
    fn combinators() {
        let v = WeightRep::complex(2, vec![vec![0, 1], vec![0, -1]]).unwrap();
        let l = WeightRep::complex(2, vec![vec![1, 0]]).unwrap();
        let t = rep_combinators(&v, Some(&l), Combinator::Tensor).unwrap();
        assert_eq!(t.sorted_weights(), vec![vec![1, -1], vec![1, 1]]);
        let v1 = WeightRep::complex(2, vec![vec![1, 0], vec![-1, 0]]).unwrap();
        let v2 = WeightRep::complex(2, vec![vec![0, 1], vec![0, -1]]).unwrap();
        let w12 = v1.tensor(&v2).unwrap();
        assert_eq!(w12.sorted_weights(), vec![vec![-1, -1], vec![-1, 1], vec![1, -1], vec![1, 1]]);
        let vr = rep_combinators(&sym_power(1), None, Combinator::Realify).unwrap();
        assert!(vr.same_weights(&sym_power(1).copies(2).unwrap()));
        assert!(rep_combinators(&v, None, Combinator::Sum).is_err());
        assert!(v.sum(&WeightRep::circle(&[1])).is_err());
    }

    #[test]
    fn clebsch_gordan_small() {
        assert_eq!(clebsch_gordan(1, 1), vec![2, 0]);
        assert_eq!(clebsch_gordan(1, 0), vec![1]);
        assert_eq!(clebsch_gordan(2, 1), vec![3, 1]);
        let lhs = sym_power(2).tensor(&sym_power(1)).unwrap();
        assert!(lhs.same_weights(&su2_rep_from_parts(&[3, 1])));
    }

    #[test]
    fn indices() {
        assert_eq!(dynkin_index(&sym_power(3), 1).unwrap(), 10);
        assert_eq!(dynkin_index(&su2_rep_from_parts(&[1, 1]), 1).unwrap(), 2);
        assert_eq!(dynkin_index(&su2_rep_from_parts(&[1, 0, 0]), 1).unwrap(), 1);
        assert_eq!(dynkin_index(&sym_power(6), 2).unwrap(), 28);
        assert!(dynkin_index(&sym_power(1), 2).is_err());
    }

    #[test]
    fn su2_hom_lists() {
        let labels = |g| su2_homs(g).unwrap().into_iter().map(|r| r.label.unwrap()).collect::<Vec<_>>();
        assert_eq!(labels(SimpleGroupId::sp(4).unwrap()), vec!["V+C^2", "V+V", "S^3V"]);
        assert_eq!(labels(SimpleGroupId::su(3).unwrap()), vec!["V+C", "S^2V"]);
        assert_eq!(labels(SimpleGroupId::g2()), vec!["W1", "W3", "W4", "W28"]);
        // partitions of 7 whose even parts repeat an even number of times
        assert_eq!(labels(SimpleGroupId::spin(7).unwrap()).len(), 6);
    }

    #[test]
    fn chern_classes() {
        let f = [SourceFactor::Su2, SourceFactor::Su2];
        let v12 = WeightRep::complex(2, vec![vec![1, 0], vec![-1, 0], vec![0, 1], vec![0, -1]]).unwrap();
        assert_eq!(chern_pullback(&v12, 2, &f).unwrap(), zpoly(&[4, 4], &[(&[1, 0], -1), (&[0, 1], -1)]));
        assert_eq!(chern_pullback(&v12, 4, &f).unwrap(), zpoly(&[4, 4], &[(&[1, 1], 1)]));
        let c2 = chern_pullback(&sym_power(3), 2, &[SourceFactor::Su2]).unwrap();
        assert_eq!(c2, zpoly(&[4], &[(&[1], -10)]));
        let odd = WeightRep::circle(&[1]);
        assert!(chern_pullback(&odd, 1, &[SourceFactor::Su2]).is_err());
    }

    #[test]
    fn euler_classes() {
        let f = [SourceFactor::Circle, SourceFactor::Su2];
        let v = WeightRep::complex(2, vec![vec![0, 1], vec![0, -1]]).unwrap();
        let l = WeightRep::complex(2, vec![vec![1, 0]]).unwrap();
        let (e, det) = euler_class(&v.tensor(&l).unwrap(), &f).unwrap();
        assert!(det);
        assert_eq!(e, zpoly(&[2, 4], &[(&[2, 0], 1), (&[0, 1], -1)]));
        let (e, _) = euler_class(&v.sum(&l).unwrap(), &f).unwrap();
        assert_eq!(e, zpoly(&[2, 4], &[(&[1, 1], -1)]));
        let odd = WeightRep::circle(&[1, -1, 0]).as_real().unwrap();
        assert!(euler_class(&odd, &[SourceFactor::Circle]).is_err());
    }

    #[test]
    fn oriented_sums_keep_roots_first() {
        let a = WeightRep::circle(&[1]).realify().unwrap().oriented().unwrap();
        let b = WeightRep::circle(&[2]).realify().unwrap().oriented().unwrap();
        let s = a.sum(&b).unwrap();
        assert_eq!(s.weights, vec![vec![1], vec![2], vec![-1], vec![-2]]);
        let (e, det) = euler_class(&s, &[SourceFactor::Circle]).unwrap();
        assert!(det);
        assert_eq!(e, zpoly(&[2], &[(&[2], 2)]));
    }
}
