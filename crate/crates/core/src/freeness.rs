//! Freeness of two-sided torus-reduced actions.
//!
//! A torus element t fixes a point of a group factor exactly when the
//! eigenvalue multisets of its left and right images agree, i.e. when t lies
//! in the annihilator of `<w_i - w'_sigma(i)>` for some matching sigma. On a
//! linear sphere it fixes a point when some weight vanishes on t. The action
//! is free iff every combined choice lattice contains the lattice of
//! characters that cut out the ineffective kernel.

use std::collections::{BTreeMap, HashSet};

use num_integer::Integer;
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups_catalog::{Family, SimpleGroupId};
use crate::lattice::TorusElement;
use crate::weights_reps::WeightRep;

pub use crate::{Lattice, TorusPoint};

/// Hard ceiling for the witness order search; a violating choice always
/// has a witness well below this for the weight sizes handled here.
const MAX_WITNESS_ORDER: i64 = 10_000;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConjugacyMode {
    #[default]
    UnitaryEigenvalues,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFactor {
    pub left: Vec<Vec<i64>>,
    pub right: Vec<Vec<i64>>,
    #[serde(default)]
    pub conjugacy_mode: ConjugacyMode,
    /// The group acted on, when known; only used for caveats.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<SimpleGroupId>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SphereFactor {
    pub weights: Vec<Vec<i64>>,
    #[serde(default)]
    pub has_trivial_summand: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Factor {
    Group(GroupFactor),
    Sphere(SphereFactor),
}

/// Which torus elements are declared to act trivially.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TrivialSubgroup {
    /// Whatever maps into the diagonal center and kills every sphere.
    #[default]
    AutoCenter,
    /// The annihilator of these characters.
    Explicit(Vec<Vec<i64>>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoSidedAction {
    pub torus_rank: usize,
    pub factors: Vec<Factor>,
    #[serde(default)]
    pub trivial_subgroup: TrivialSubgroup,
}

impl TwoSidedAction {
    pub fn new(torus_rank: usize, factors: Vec<Factor>) -> Self {
        TwoSidedAction { torus_rank, factors, trivial_subgroup: TrivialSubgroup::AutoCenter }
    }

    /// One group factor acted on by two reps of the same torus.
    pub fn from_reps(left: &WeightRep, right: &WeightRep) -> Result<Self> {
        let f = group_factor(left, right)?;
        Ok(Self::new(left.rank(), vec![Factor::Group(f)]))
    }

    pub fn with_group(mut self, g: SimpleGroupId) -> Self {
        for f in &mut self.factors {
            if let Factor::Group(gf) = f {
                gf.group = Some(g);
            }
        }
        self
    }

    pub fn with_trivial_subgroup(mut self, t: TrivialSubgroup) -> Self {
        self.trivial_subgroup = t;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let r = self.torus_rank;
        let check = |ws: &[Vec<i64>], what: &str, i: usize| -> Result<()> {
            match ws.iter().position(|w| w.len() != r) {
                Some(j) => Err(Error::InvalidAction(format!(
                    "factors[{i}].{what}[{j}] has length {}, torus rank is {r}",
                    ws[j].len()
                ))),
                None => Ok(()),
            }
        };
        for (i, f) in self.factors.iter().enumerate() {
            match f {
                Factor::Group(g) => {
                    check(&g.left, "left", i)?;
                    check(&g.right, "right", i)?;
                    if g.left.len() != g.right.len() {
                        return Err(Error::InvalidAction(format!(
                            "factors[{i}]: left has {} weights, right has {}",
                            g.left.len(),
                            g.right.len()
                        )));
                    }
                    if g.left.is_empty() {
                        return Err(Error::InvalidAction(format!("factors[{i}] has no weights")));
                    }
                }
                Factor::Sphere(s) => {
                    check(&s.weights, "weights", i)?;
                    if s.weights.is_empty() && !s.has_trivial_summand {
                        return Err(Error::InvalidAction(format!("factors[{i}] is an empty sphere")));
                    }
                }
            }
        }
        if let TrivialSubgroup::Explicit(chars) = &self.trivial_subgroup {
            check(chars, "trivial_subgroup.explicit", 0)
                .map_err(|e| Error::InvalidAction(e.to_string().replace("factors[0].", "")))?;
        }
        Ok(())
    }

    fn has_d_family(&self) -> bool {
        self.factors.iter().any(|f| matches!(f, Factor::Group(GroupFactor { group: Some(g), .. }) if g.family() == Family::D))
    }
}

pub fn group_factor(left: &WeightRep, right: &WeightRep) -> Result<GroupFactor> {
    if left.lattice.scale != 1 || right.lattice.scale != 1 {
        return Err(Error::InvalidAction("action weights must be integral; restrict or rescale the torus".into()));
    }
    if left.rank() != right.rank() {
        return Err(Error::InvalidAction("left and right reps live on different tori".into()));
    }
    Ok(GroupFactor {
        left: left.weights.clone(),
        right: right.weights.clone(),
        conjugacy_mode: ConjugacyMode::UnitaryEigenvalues,
        group: None,
    })
}

pub fn sphere_factor(rep: &WeightRep) -> Result<SphereFactor> {
    if rep.lattice.scale != 1 {
        return Err(Error::InvalidAction("sphere weights must be integral".into()));
    }
    let zero = rep.weights.iter().any(|w| w.iter().all(|x| *x == 0));
    Ok(SphereFactor { weights: rep.weights.clone(), has_trivial_summand: zero })
}

fn diff(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Characters whose common kernel is the automatically ineffective part.
pub fn auto_kernel_lattice(a: &TwoSidedAction) -> Result<Lattice> {
    a.validate()?;
    let r = a.torus_rank;
    let mut gens = Vec::new();
    for f in &a.factors {
        match f {
            Factor::Group(g) => {
                let (l1, r1) = (&g.left[0], &g.right[0]);
                gens.extend(g.left.iter().skip(1).map(|w| diff(w, l1)));
                gens.extend(g.right.iter().skip(1).map(|w| diff(w, r1)));
                gens.push(diff(l1, r1));
            }
            Factor::Sphere(s) => gens.extend(s.weights.iter().cloned()),
        }
    }
    Lattice::new(r, &gens)
}

/// Character lattice of the subgroup acting trivially.
pub fn kernel_lattice(a: &TwoSidedAction) -> Result<Lattice> {
    let auto = auto_kernel_lattice(a)?;
    match &a.trivial_subgroup {
        TrivialSubgroup::AutoCenter => Ok(auto),
        TrivialSubgroup::Explicit(chars) => {
            let explicit = Lattice::new(a.torus_rank, chars)?;
            if !explicit.contains(&auto)? {
                return Err(Error::InvalidAction(
                    "declared trivial subgroup contains elements that act nontrivially".into(),
                ));
            }
            Ok(explicit)
        }
    }
}

pub fn lattice_contains(outer: &Lattice, inner: &Lattice) -> Result<bool> {
    outer.contains(inner)
}

/// One pair of a matching between equal-valued weight classes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MatchedPair {
    pub left: Vec<i64>,
    pub right: Vec<i64>,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FactorChoice {
    /// A bijection left <-> right, grouped by weight values.
    Matching(Vec<MatchedPair>),
    /// The sphere point lies in this weight space.
    Weight(Vec<i64>),
    TrivialSummand,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub witness: TorusPoint,
    pub order: i64,
    pub choice: Vec<FactorChoice>,
    /// Set when a Spin(2n) factor is present: eigenvalue agreement there
    /// only shows conjugacy in SO(2n).
    pub d_family_caveat: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Free,
    NotFree(Certificate),
}

impl Verdict {
    pub fn is_free(&self) -> bool {
        matches!(self, Verdict::Free)
    }

    pub fn witness_order(&self) -> Option<i64> {
        match self {
            Verdict::Free => None,
            Verdict::NotFree(c) => Some(c.order),
        }
    }
}

/// Distinct values of a multiset with their counts, in first-seen order.
fn grouped(ws: &[Vec<i64>]) -> Vec<(Vec<i64>, usize)> {
    let mut out: Vec<(Vec<i64>, usize)> = Vec::new();
    for w in ws {
        match out.iter_mut().find(|(v, _)| v == w) {
            Some((_, c)) => *c += 1,
            None => out.push((w.clone(), 1)),
        }
    }
    out
}

/// Keeps only lattices not containing another one from the list; those
/// carry every fixed element the larger ones do.
fn minimal_choices(mut v: Vec<(Lattice, FactorChoice)>) -> Result<Vec<(Lattice, FactorChoice)>> {
    let mut seen = HashSet::new();
    v.retain(|(l, _)| seen.insert(l.clone()));
    let mut keep = Vec::new();
    for i in 0..v.len() {
        let mut dominated = false;
        for j in 0..v.len() {
            if i != j && v[i].0.contains(&v[j].0)? && !(v[j].0.contains(&v[i].0)? && j > i) {
                dominated = true;
                break;
            }
        }
        if !dominated {
            keep.push(v[i].clone());
        }
    }
    Ok(keep)
}

struct TableSearch<'a> {
    left: Vec<(Vec<i64>, usize)>,
    right: Vec<(Vec<i64>, usize)>,
    kernel: &'a Lattice,
    r: usize,
    found: Vec<(Lattice, FactorChoice)>,
    seen_support: HashSet<Vec<(usize, usize)>>,
}

impl TableSearch<'_> {
    fn run(&mut self) -> Result<()> {
        let rows: Vec<usize> = self.left.iter().map(|x| x.1).collect();
        let cols: Vec<usize> = self.right.iter().map(|x| x.1).collect();
        let mut table = vec![vec![0usize; cols.len()]; rows.len()];
        self.fill(0, 0, rows, cols, &mut table, Lattice::zero(self.r))
    }

    fn fill(
        &mut self,
        i: usize,
        j: usize,
        mut row_rem: Vec<usize>,
        mut col_rem: Vec<usize>,
        table: &mut Vec<Vec<usize>>,
        partial: Lattice,
    ) -> Result<()> {
        // once the partial lattice contains the kernel every completion is safe
        if partial.contains(self.kernel)? {
            return Ok(());
        }
        let (nr, nc) = (self.left.len(), self.right.len());
        if i == nr {
            let support: Vec<(usize, usize)> = (0..nr)
                .flat_map(|a| (0..nc).map(move |b| (a, b)))
                .filter(|&(a, b)| table[a][b] > 0)
                .collect();
            if self.seen_support.insert(support) {
                let pairs = (0..nr)
                    .flat_map(|a| (0..nc).map(move |b| (a, b)))
                    .filter(|&(a, b)| table[a][b] > 0)
                    .map(|(a, b)| MatchedPair {
                        left: self.left[a].0.clone(),
                        right: self.right[b].0.clone(),
                        multiplicity: table[a][b],
                    })
                    .collect();
                self.found.push((partial, FactorChoice::Matching(pairs)));
            }
            return Ok(());
        }
        let (ni, nj) = if j + 1 == nc { (i + 1, 0) } else { (i, j + 1) };
        let later_cap: usize = col_rem[j + 1..].iter().sum();
        let lo = row_rem[i].saturating_sub(later_cap);
        let hi = row_rem[i].min(col_rem[j]);
        for n in (lo..=hi).rev() {
            table[i][j] = n;
            row_rem[i] -= n;
            col_rem[j] -= n;
            let next = if n > 0 {
                partial.with_vector(&diff(&self.left[i].0, &self.right[j].0))?
            } else {
                partial.clone()
            };
            self.fill(ni, nj, row_rem.clone(), col_rem.clone(), table, next)?;
            row_rem[i] += n;
            col_rem[j] += n;
        }
        table[i][j] = 0;
        Ok(())
    }
}

fn factor_choices(f: &Factor, kernel: &Lattice, r: usize) -> Result<Vec<(Lattice, FactorChoice)>> {
    match f {
        Factor::Group(g) => {
            let mut s = TableSearch {
                left: grouped(&g.left),
                right: grouped(&g.right),
                kernel,
                r,
                found: Vec::new(),
                seen_support: HashSet::new(),
            };
            s.run()?;
            minimal_choices(s.found)
        }
        Factor::Sphere(sp) => {
            if sp.has_trivial_summand {
                return Ok(vec![(Lattice::zero(r), FactorChoice::TrivialSummand)]);
            }
            let mut v = Vec::new();
            for (w, _) in grouped(&sp.weights) {
                let l = Lattice::new(r, &[w.clone()])?;
                if !l.contains(kernel)? {
                    v.push((l, FactorChoice::Weight(w)));
                }
            }
            minimal_choices(v)
        }
    }
}

/// Smallest-order element of `Ann(choice) \ Ann(kernel)`, lexicographically
/// least among those, searching orders up to `limit`.
fn min_witness(choice: &Lattice, kernel: &Lattice, limit: i64) -> Option<(i64, TorusPoint)> {
    let ann = choice.annihilator();
    let kb = kernel.basis();
    for m in 2..=limit {
        let best = ann
            .elements_of_order_dividing(&m)
            .into_iter()
            .filter(|t| kb.iter().any(|k| !t.pair(k).is_integer()))
            .min();
        if let Some(t) = best {
            return Some((m, t));
        }
    }
    None
}

/// Decides freeness and returns a witness when the action is not free.
pub fn is_free(a: &TwoSidedAction) -> Result<Verdict> {
    let kernel = kernel_lattice(a)?;
    let r = a.torus_rank;
    let per_factor: Vec<Vec<(Lattice, FactorChoice)>> =
        a.factors.iter().map(|f| factor_choices(f, &kernel, r)).collect::<Result<_>>()?;

    let mut best: Option<(i64, TorusPoint, Vec<FactorChoice>)> = None;
    let mut stack: Vec<FactorChoice> = Vec::new();
    search_product(&per_factor, 0, Lattice::zero(r), &kernel, &mut stack, &mut best)?;

    Ok(match best {
        None => Verdict::Free,
        Some((order, witness, choice)) => {
            Verdict::NotFree(Certificate { witness, order, choice, d_family_caveat: a.has_d_family() })
        }
    })
}

type Best = Option<(i64, TorusPoint, Vec<FactorChoice>)>;

fn search_product(
    per_factor: &[Vec<(Lattice, FactorChoice)>],
    k: usize,
    acc: Lattice,
    kernel: &Lattice,
    stack: &mut Vec<FactorChoice>,
    best: &mut Best,
) -> Result<()> {
    if acc.contains(kernel)? {
        return Ok(());
    }
    if k == per_factor.len() {
        let limit = best.as_ref().map(|b| b.0).unwrap_or(MAX_WITNESS_ORDER);
        let found = match min_witness(&acc, kernel, limit) {
            Some(f) => f,
            // nothing here beats the witness already found
            None if best.is_some() => return Ok(()),
            None => return Err(Error::Unsupported(format!("no witness of order <= {limit} for a violating choice"))),
        };
        let better = match best {
            None => true,
            Some((m, t, _)) => (found.0, &found.1) < (*m, t),
        };
        if better {
            *best = Some((found.0, found.1, stack.clone()));
        }
        return Ok(());
    }
    for (l, c) in &per_factor[k] {
        let next = acc.sum(l)?;
        stack.push(c.clone());
        search_product(per_factor, k + 1, next, kernel, stack, best)?;
        stack.pop();
    }
    Ok(())
}

/// Direct evaluation: does t have a fixed point on every factor, and does
/// it act nontrivially? Works with residues `<w, k> mod m` for t = k/m.
struct Evaluator<'a> {
    a: &'a TwoSidedAction,
}

impl Evaluator<'_> {
    fn residues(ws: &[Vec<i64>], k: &[i64], m: i64) -> Vec<i64> {
        ws.iter().map(|w| w.iter().zip(k).map(|(x, y)| x * y).sum::<i64>().rem_euclid(m)).collect()
    }

    fn has_fixed_point(&self, k: &[i64], m: i64) -> bool {
        self.a.factors.iter().all(|f| match f {
            Factor::Group(g) => {
                let mut l = Self::residues(&g.left, k, m);
                let mut r = Self::residues(&g.right, k, m);
                l.sort_unstable();
                r.sort_unstable();
                l == r
            }
            Factor::Sphere(s) => s.has_trivial_summand || Self::residues(&s.weights, k, m).contains(&0),
        })
    }

    fn acts_trivially(&self, k: &[i64], m: i64) -> bool {
        match &self.a.trivial_subgroup {
            TrivialSubgroup::Explicit(chars) => Self::residues(chars, k, m).iter().all(|x| *x == 0),
            TrivialSubgroup::AutoCenter => self.a.factors.iter().all(|f| match f {
                Factor::Group(g) => {
                    let l = Self::residues(&g.left, k, m);
                    let r = Self::residues(&g.right, k, m);
                    l.iter().chain(&r).all(|x| *x == l[0])
                }
                Factor::Sphere(s) => Self::residues(&s.weights, k, m).iter().all(|x| *x == 0),
            }),
        }
    }

    fn is_witness(&self, k: &[i64], m: i64) -> bool {
        self.has_fixed_point(k, m) && !self.acts_trivially(k, m)
    }
}

/// Result of the direct-evaluation oracle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum BruteVerdict {
    NotFree { witness: TorusPoint, order: i64 },
    /// Not a proof of freeness.
    NoWitnessUpTo { max_order: i64, exhaustive: bool },
}

impl BruteVerdict {
    pub fn witness_order(&self) -> Option<i64> {
        match self {
            BruteVerdict::NotFree { order, .. } => Some(*order),
            BruteVerdict::NoWitnessUpTo { .. } => None,
        }
    }
}

/// Points checked exhaustively before switching to sampling.
pub const BRUTE_FORCE_POINT_BUDGET: u64 = 2_000_000;
/// Random points checked when the search is not exhaustive.
pub const BRUTE_FORCE_SAMPLES: u64 = 200_000;
pub const BRUTE_FORCE_SEED: u64 = 0x5eed_b1c0;

/// Evaluates eigenvalue multisets at every element of order <= max_order
/// in increasing order (then lexicographically), so the first hit is the
/// minimal witness. Ranks whose point count exceeds the budget fall back
/// to seeded random sampling.
pub fn brute_force_free(a: &TwoSidedAction, max_order: i64) -> Result<BruteVerdict> {
    a.validate()?;
    if let TrivialSubgroup::Explicit(_) = a.trivial_subgroup {
        kernel_lattice(a)?;
    }
    let r = a.torus_rank;
    let ev = Evaluator { a };
    if r == 0 {
        return Ok(BruteVerdict::NoWitnessUpTo { max_order, exhaustive: true });
    }
    let points: u64 = (2..=max_order.max(1)).map(|m| (m as u64).saturating_pow(r as u32)).fold(0u64, |a, b| a.saturating_add(b));
    if r <= 2 || points <= BRUTE_FORCE_POINT_BUDGET {
        for m in 2..=max_order {
            let mut k = vec![0i64; r];
            loop {
                let g = k.iter().fold(m, |acc, x| acc.gcd(x));
                if g == 1 && ev.is_witness(&k, m) {
                    let coords = k.iter().map(|x| Ratio::new(*x, m)).collect();
                    return Ok(BruteVerdict::NotFree { witness: TorusElement::new(coords), order: m });
                }
                let mut pos = r;
                loop {
                    if pos == 0 {
                        break;
                    }
                    pos -= 1;
                    k[pos] += 1;
                    if k[pos] < m {
                        break;
                    }
                    k[pos] = 0;
                    if pos == 0 {
                        pos = usize::MAX;
                        break;
                    }
                }
                if pos == usize::MAX {
                    break;
                }
            }
        }
        return Ok(BruteVerdict::NoWitnessUpTo { max_order, exhaustive: true });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(BRUTE_FORCE_SEED);
    let mut best: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
    for _ in 0..BRUTE_FORCE_SAMPLES {
        let m = rng.gen_range(2..=max_order);
        let k: Vec<i64> = (0..r).map(|_| rng.gen_range(0..m)).collect();
        let g = k.iter().fold(m, |acc, x| acc.gcd(x));
        if g != 1 || !ev.is_witness(&k, m) {
            continue;
        }
        let e = best.entry(m).or_insert_with(|| k.clone());
        if k < *e {
            *e = k;
        }
    }
    Ok(match best.into_iter().next() {
        Some((m, k)) => BruteVerdict::NotFree {
            witness: TorusElement::new(k.iter().map(|x| Ratio::new(*x, m)).collect()),
            order: m,
        },
        None => BruteVerdict::NoWitnessUpTo { max_order, exhaustive: false },
    })
}

/// Checks a claimed witness directly: equal eigenvalue multisets on every
/// factor and a nontrivial action.
pub fn verify_witness(a: &TwoSidedAction, t: &TorusPoint) -> bool {
    let m = t.order();
    let k: Vec<i64> = t.coords().iter().map(|c| c.numer() * (m / c.denom())).collect();
    m > 1 && Evaluator { a }.is_witness(&k, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights_reps::{su2_rep_from_parts, WeightRep};

    fn rank1(l: &[u32], r: &[u32]) -> TwoSidedAction {
        TwoSidedAction::from_reps(&su2_rep_from_parts(l), &su2_rep_from_parts(r)).unwrap()
    }

    #[test]
    fn gromoll_meyer_kernel_is_everything() {
        let a = rank1(&[1, 0, 0], &[1, 1]);
        assert_eq!(kernel_lattice(&a).unwrap(), Lattice::full(1));
        assert!(is_free(&a).unwrap().is_free());
    }

    #[test]
    fn one_sided_kernel() {
        let a = TwoSidedAction::from_reps(&WeightRep::circle(&[2, -2, 0]), &WeightRep::circle(&[0, 0, 0])).unwrap();
        assert_eq!(kernel_lattice(&a).unwrap(), Lattice::from_i64(1, &[vec![2]]).unwrap());
    }

    #[test]
    fn berger_pairings() {
        let v = is_free(&rank1(&[3], &[1, 0, 0])).unwrap();
        assert_eq!(v.witness_order(), Some(3));
        let v = is_free(&rank1(&[3], &[1, 1])).unwrap();
        assert_eq!(v.witness_order(), Some(4));
        if let Verdict::NotFree(c) = &v {
            assert!(verify_witness(&rank1(&[3], &[1, 1]), &c.witness));
            assert!(!c.d_family_caveat);
        }
    }

    #[test]
    fn explicit_kernel_must_cover_auto_kernel() {
        let a = rank1(&[2], &[0, 0, 0]).with_trivial_subgroup(TrivialSubgroup::Explicit(vec![vec![4]]));
        assert!(kernel_lattice(&a).is_err());
        let b = rank1(&[2], &[0, 0, 0]).with_trivial_subgroup(TrivialSubgroup::Explicit(vec![vec![1]]));
        assert_eq!(is_free(&b).unwrap().witness_order(), Some(2));
    }

    #[test]
    fn invalid_actions_point_at_the_field() {
        let a = TwoSidedAction::new(
            1,
            vec![Factor::Group(GroupFactor {
                left: vec![vec![1], vec![-1]],
                right: vec![vec![1]],
                conjugacy_mode: ConjugacyMode::UnitaryEigenvalues,
                group: None,
            })],
        );
        let e = is_free(&a).unwrap_err().to_string();
        assert!(e.contains("factors[0]"), "{e}");
    }

    #[test]
    fn identity_action_is_never_free() {
        let a = rank1(&[1, 1], &[1, 1]);
        let v = is_free(&a).unwrap();
        // -1 acts trivially, so the first witness has order 3
        assert_eq!(v.witness_order(), Some(3));
        assert_eq!(brute_force_free(&a, 6).unwrap().witness_order(), Some(3));
    }

    #[test]
    fn certificate_json_shape() {
        let v = is_free(&rank1(&[3], &[1, 0, 0])).unwrap();
        let s = serde_json::to_value(&v).unwrap();
        assert_eq!(s["verdict"], "not_free");
        assert_eq!(s["witness"][0], "1/3");
        assert_eq!(s["order"], 3);
        let back: Verdict = serde_json::from_value(s).unwrap();
        assert_eq!(back, v);
    }
}
