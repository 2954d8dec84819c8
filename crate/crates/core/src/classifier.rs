//! Degree bookkeeping for biquotients and the searches built on it.
//!
//! A simple factor of G of degree d either survives to `pi_{2d-1}` of the
//! quotient ("contributed") or is hit by a degree-d generator of H; a
//! degree-k generator of H that hits nothing survives to `pi_{2k}`
//! ("absorbed"). Circle factors of H count as degree 1. Ranks in degree 2
//! come from the Dynkin index matrix; in higher degrees they come from the
//! catalog's added/removed columns.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::freeness::{is_free, FactorChoice, GroupFactor, TrivialSubgroup, TwoSidedAction, Verdict};
use crate::groups_catalog::{
    degrees_of, group_dimension, groups_with_max_degree_at_most, instantiate_catalog, profile, rule, CatalogEntry,
    CatalogTable, SimpleGroupId,
};
use crate::lattice::{FiniteAbelianGroup, Matrix, SmithForm};
use crate::weights_reps::{dynkin_index, kills_minus_one, su2_homs, su2_rep_from_parts, WeightRep};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HFactor {
    Simple(SimpleGroupId),
    Circle,
}

impl HFactor {
    pub fn degrees(&self) -> Vec<u32> {
        match self {
            HFactor::Simple(g) => degrees_of(*g),
            HFactor::Circle => vec![1],
        }
    }

    pub fn dimension(&self) -> u32 {
        match self {
            HFactor::Simple(g) => group_dimension(*g),
            HFactor::Circle => 1,
        }
    }
}

impl fmt::Display for HFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HFactor::Simple(g) => write!(f, "{}", g.name()),
            HFactor::Circle => write!(f, "S^1"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// How one factor of H maps into one factor of G on one side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HomData {
    Trivial,
    /// H factor equal to the G factor, mapped by the identity.
    Identity,
    /// The identity followed by the transpose-inverse outer automorphism.
    OuterTranspose,
    /// A catalog row `G/H`.
    Catalog {
        rule: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        param: Option<u32>,
    },
    /// The defining rep of G restricted to the torus of the H factor.
    Weights { rep: WeightRep },
}

impl HomData {
    pub fn is_trivial(&self) -> bool {
        matches!(self, HomData::Trivial)
    }

    fn is_isomorphism(&self) -> bool {
        matches!(self, HomData::Identity | HomData::OuterTranspose)
    }

    pub fn catalog_entry(&self) -> Option<Result<CatalogEntry>> {
        match self {
            HomData::Catalog { rule: key, param } => Some(
                rule(key).ok_or_else(|| Error::Catalog(format!("unknown catalog rule {key}"))).and_then(|r| r.instantiate(*param)),
            ),
            _ => None,
        }
    }

    fn describe(&self) -> String {
        match self {
            HomData::Trivial => "trivial".into(),
            HomData::Identity => "identity".into(),
            HomData::OuterTranspose => "outer transpose".into(),
            HomData::Catalog { .. } => match self.catalog_entry() {
                Some(Ok(e)) => e.hom_descriptor,
                _ => "unresolved catalog row".into(),
            },
            HomData::Weights { rep } => rep.label.clone().unwrap_or_else(|| "weights".into()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomLink {
    pub h: usize,
    pub g: usize,
    pub side: Side,
    pub hom: HomData,
}

/// A biquotient `G/H` given factor by factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationSketch {
    pub g_factors: Vec<SimpleGroupId>,
    pub h_factors: Vec<HFactor>,
    #[serde(default)]
    pub homs: Vec<HomLink>,
}

impl PresentationSketch {
    /// Homogeneous space from a catalog row.
    pub fn homogeneous(e: &CatalogEntry) -> Self {
        PresentationSketch {
            g_factors: vec![e.g],
            h_factors: vec![HFactor::Simple(e.h)],
            homs: vec![HomLink {
                h: 0,
                g: 0,
                side: Side::Left,
                hom: HomData::Catalog { rule: e.rule.clone(), param: e.param },
            }],
        }
    }

    pub fn dimension(&self) -> i64 {
        let g: u32 = self.g_factors.iter().map(|g| group_dimension(*g)).sum();
        let h: u32 = self.h_factors.iter().map(|h| h.dimension()).sum();
        g as i64 - h as i64
    }

    pub fn link(&self, h: usize, g: usize, side: Side) -> &HomData {
        const TRIVIAL: HomData = HomData::Trivial;
        self.homs
            .iter()
            .find(|l| l.h == h && l.g == g && l.side == side)
            .map(|l| &l.hom)
            .unwrap_or(&TRIVIAL)
    }

    pub fn validate(&self) -> Result<()> {
        let mut seen = std::collections::HashSet::new();
        for (i, l) in self.homs.iter().enumerate() {
            let at = |m: String| Error::InvalidAction(format!("homs[{i}]: {m}"));
            if l.h >= self.h_factors.len() || l.g >= self.g_factors.len() {
                return Err(at(format!("factor index out of range (h = {}, g = {})", l.h, l.g)));
            }
            if !seen.insert((l.h, l.g, l.side)) {
                return Err(at("duplicate link".into()));
            }
            let (h, g) = (self.h_factors[l.h], self.g_factors[l.g]);
            match &l.hom {
                HomData::Trivial => {}
                HomData::Identity | HomData::OuterTranspose => {
                    if h != HFactor::Simple(g) {
                        return Err(at(format!("{h} is not {}", g.name())));
                    }
                }
                HomData::Catalog { .. } => {
                    let e = l.hom.catalog_entry().unwrap().map_err(|e| at(e.to_string()))?;
                    if e.g != g || HFactor::Simple(e.h) != h {
                        return Err(at(format!("catalog row is {}/{}, link is {}/{h}", e.g.name(), e.h.name(), g.name())));
                    }
                }
                HomData::Weights { rep } => {
                    let want: usize = match h {
                        HFactor::Circle => 1,
                        HFactor::Simple(x) => x.rank() as usize,
                    };
                    if rep.rank() != want {
                        return Err(at(format!("weights have rank {}, {h} has rank {want}", rep.rank())));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn display(&self) -> String {
        let g: Vec<String> = self.g_factors.iter().map(|g| g.name()).collect();
        let h: Vec<String> = self.h_factors.iter().map(|h| h.to_string()).collect();
        let mut homs = Vec::new();
        for l in &self.homs {
            if !l.hom.is_trivial() {
                let side = if l.side == Side::Left { "L" } else { "R" };
                homs.push(format!("{}->{}{}:{}", l.h, side, l.g, l.hom.describe()));
            }
        }
        format!("{}/{} [{}]", g.join("x"), if h.is_empty() { "1".into() } else { h.join("x") }, homs.join(", "))
    }
}

/// Dynkin index of one link; circles and trivial maps have index 0.
fn link_index(p: &PresentationSketch, l: &HomLink) -> Result<i64> {
    if p.h_factors[l.h] == HFactor::Circle {
        return Ok(0);
    }
    match &l.hom {
        HomData::Trivial => Ok(0),
        HomData::Identity | HomData::OuterTranspose => Ok(1),
        HomData::Catalog { .. } => Ok(l.hom.catalog_entry().unwrap()?.dynkin_index),
        HomData::Weights { rep } => dynkin_index(rep, profile(p.g_factors[l.g]).vector_index_norm as i64),
    }
}

/// Rows: simple factors of H; columns: factors of G; entries left minus
/// right index.
pub fn index_matrix(p: &PresentationSketch) -> Result<Vec<Vec<i64>>> {
    p.validate()?;
    let rows: Vec<usize> = (0..p.h_factors.len()).filter(|h| p.h_factors[*h] != HFactor::Circle).collect();
    let mut m = vec![vec![0i64; p.g_factors.len()]; rows.len()];
    for l in &p.homs {
        if let Some(r) = rows.iter().position(|h| *h == l.h) {
            let s = if l.side == Side::Left { 1 } else { -1 };
            m[r][l.g] += s * link_index(p, l)?;
        }
    }
    Ok(m)
}

fn count(ds: &[u32], d: u32) -> u32 {
    ds.iter().filter(|x| **x == d).count() as u32
}

/// Rank of one side's map in degree d > 2, from catalog columns.
fn side_rank(p: &PresentationSketch, h: usize, hom: &HomData, d: u32, warnings: &mut Vec<String>) -> Result<u32> {
    let hd = count(&p.h_factors[h].degrees(), d);
    Ok(match hom {
        HomData::Trivial => 0,
        HomData::Identity | HomData::OuterTranspose => hd,
        HomData::Catalog { .. } => {
            let e = hom.catalog_entry().unwrap()?;
            hd.saturating_sub(count(&e.degrees_removed, d))
        }
        HomData::Weights { .. } => {
            if hd > 0 {
                warnings.push(format!("degree {d} map of H factor {h} is not determined by weight data; taken as zero"));
            }
            0
        }
    })
}

fn pair_rank(p: &PresentationSketch, h: usize, g: usize, d: u32, warnings: &mut Vec<String>) -> Result<u32> {
    let (a, b) = (p.link(h, g, Side::Left), p.link(h, g, Side::Right));
    let (ra, rb) = (side_rank(p, h, a, d, warnings)?, side_rank(p, h, b, d, warnings)?);
    Ok(match (a.is_trivial(), b.is_trivial()) {
        (true, true) => 0,
        (false, true) => ra,
        (true, false) => rb,
        (false, false) => {
            if a == b {
                0
            } else if a.is_isomorphism() && b.is_isomorphism() {
                // id - sigma vanishes on even degrees and doubles odd ones
                if d % 2 == 1 {
                    count(&p.h_factors[h].degrees(), d)
                } else {
                    0
                }
            } else {
                warnings.push(format!("degree {d}: two-sided map of H factor {h} on G factor {g} assumed of generic rank"));
                ra.max(rb)
            }
        }
    })
}

/// Maximum bipartite flow from H factors to G factors.
fn max_flow(h_cap: &[u32], g_cap: &[u32], edge: &[Vec<u32>]) -> u32 {
    // nodes: 0 source, 1..=nh H, then G, then sink
    let nh = h_cap.len();
    let ng = g_cap.len();
    let n = nh + ng + 2;
    let (s, t) = (0, n - 1);
    let mut cap = vec![vec![0i64; n]; n];
    for (i, c) in h_cap.iter().enumerate() {
        cap[s][1 + i] = *c as i64;
        for (j, e) in edge[i].iter().enumerate() {
            cap[1 + i][1 + nh + j] = *e as i64;
        }
    }
    for (j, c) in g_cap.iter().enumerate() {
        cap[1 + nh + j][t] = *c as i64;
    }
    let mut flow = 0;
    loop {
        let mut prev = vec![usize::MAX; n];
        prev[s] = s;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for v in 0..n {
                if prev[v] == usize::MAX && cap[u][v] > 0 {
                    prev[v] = u;
                    stack.push(v);
                }
            }
        }
        if prev[t] == usize::MAX {
            return flow as u32;
        }
        let mut v = t;
        let mut push = i64::MAX;
        while v != s {
            push = push.min(cap[prev[v]][v]);
            v = prev[v];
        }
        let mut v = t;
        while v != s {
            cap[prev[v]][v] -= push;
            cap[v][prev[v]] += push;
            v = prev[v];
        }
        flow += push;
    }
}

fn rational_rank(m: &[Vec<i64>], cols: usize) -> Result<usize> {
    if m.is_empty() || cols == 0 {
        return Ok(0);
    }
    let mat = Matrix::from_i64_rows(cols, m)?;
    let s: SmithForm<i64> = crate::lattice::smith_normal_form(&mat);
    Ok(s.rank())
}

/// Which degrees of G survive and which degrees of H are left over.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeLedger {
    pub contributed: BTreeMap<u32, u32>,
    pub absorbed: BTreeMap<u32, u32>,
    pub index_matrix: Vec<Vec<i64>>,
    pub pi3: FiniteAbelianGroup,
    pub dimension: i64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

impl DegreeLedger {
    /// `d -> contributed(d) - absorbed(d)`, zeros dropped.
    pub fn net(&self) -> BTreeMap<u32, i64> {
        let mut out: BTreeMap<u32, i64> = BTreeMap::new();
        for (d, c) in &self.contributed {
            *out.entry(*d).or_default() += *c as i64;
        }
        for (d, a) in &self.absorbed {
            *out.entry(*d).or_default() -= *a as i64;
        }
        out.retain(|_, v| *v != 0);
        out
    }

    /// Dimensions of the odd rational homotopy groups, with multiplicity.
    pub fn pi_odd(&self) -> Vec<u32> {
        self.contributed.iter().flat_map(|(d, c)| std::iter::repeat(2 * d - 1).take(*c as usize)).collect()
    }

    pub fn pi_even(&self) -> Vec<u32> {
        self.absorbed.iter().flat_map(|(d, c)| std::iter::repeat(2 * d).take(*c as usize)).collect()
    }

    pub fn chi_pi(&self) -> i64 {
        crate::cohomology::chi_pi(&self.pi_even(), &self.pi_odd())
    }

    fn flat(m: &BTreeMap<u32, u32>) -> Vec<u32> {
        m.iter().flat_map(|(d, c)| std::iter::repeat(*d).take(*c as usize)).collect()
    }

    /// The sphere dimension if the profile is that of a rational homology
    /// sphere: one contributed d, and nothing absorbed except possibly d/2.
    pub fn rational_sphere_dimension(&self) -> Option<u32> {
        let c = Self::flat(&self.contributed);
        let a = Self::flat(&self.absorbed);
        match (c.as_slice(), a.as_slice()) {
            ([d], []) => Some(2 * d - 1),
            ([d], [k]) if 2 * k == *d => Some(*d),
            _ => None,
        }
    }
}

/// Degree ledger of a (normalized) presentation.
pub fn ledger(p: &PresentationSketch) -> Result<DegreeLedger> {
    let idx = index_matrix(p)?;
    let mut warnings = Vec::new();
    let g_deg: Vec<Vec<u32>> = p.g_factors.iter().map(|g| degrees_of(*g)).collect();
    let h_deg: Vec<Vec<u32>> = p.h_factors.iter().map(|h| h.degrees()).collect();
    let mut all: Vec<u32> = g_deg.iter().chain(&h_deg).flatten().copied().collect();
    all.sort_unstable();
    all.dedup();
    let mut contributed = BTreeMap::new();
    let mut absorbed = BTreeMap::new();
    for d in all {
        let gc: Vec<u32> = g_deg.iter().map(|ds| count(ds, d)).collect();
        let hc: Vec<u32> = h_deg.iter().map(|ds| count(ds, d)).collect();
        let rank = match d {
            1 => 0,
            2 => rational_rank(&idx, p.g_factors.len())? as u32,
            _ => {
                let mut edge = vec![vec![0u32; gc.len()]; hc.len()];
                for (h, row) in edge.iter_mut().enumerate() {
                    for (g, e) in row.iter_mut().enumerate() {
                        *e = pair_rank(p, h, g, d, &mut warnings)?;
                    }
                }
                max_flow(&hc, &gc, &edge)
            }
        };
        let (gs, hs) = (gc.iter().sum::<u32>(), hc.iter().sum::<u32>());
        if rank > gs || rank > hs {
            return Err(Error::Inconsistent(format!("inconsistent presentation: degree {d} rank {rank} exceeds {gs}/{hs}")));
        }
        if gs > rank {
            contributed.insert(d, gs - rank);
        }
        if hs > rank {
            absorbed.insert(d, hs - rank);
        }
    }
    let pi3 = if idx.is_empty() {
        FiniteAbelianGroup { invariant_factors: vec![0; p.g_factors.len()] }
    } else {
        FiniteAbelianGroup::cokernel(&Matrix::from_i64_rows(p.g_factors.len(), &idx)?)
    };
    warnings.sort();
    warnings.dedup();
    Ok(DegreeLedger { contributed, absorbed, index_matrix: idx, pi3, dimension: p.dimension(), warnings })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RewriteKind {
    RemovedFactor,
    TransitiveFlag,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RewriteStep {
    pub kind: RewriteKind,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Normalized {
    pub presentation: PresentationSketch,
    pub trace: Vec<RewriteStep>,
}

/// `d` applied after an H-factor hom `e` into the removed G factor.
fn compose(d: &HomData, e: &HomData) -> Option<HomData> {
    use HomData::*;
    match (d, e) {
        (Trivial, _) | (_, Trivial) => Some(Trivial),
        (Identity, x) | (x, Identity) => Some(x.clone()),
        (OuterTranspose, OuterTranspose) => Some(Identity),
        _ => None,
    }
}

/// Groups acting transitively on `S^k`, with their stabilizers.
pub fn transitive_sphere_stabilizer(g: SimpleGroupId, k: u32) -> Option<String> {
    use crate::groups_catalog::Family;
    let l = g.rank();
    let mut hits = Vec::new();
    if g.family() == Family::A && k == 2 * (l + 1) - 1 {
        hits.push(if l == 1 { "1".to_string() } else { format!("SU({})", l) });
    }
    if g.family() == Family::C && k == 4 * l - 1 {
        hits.push(if l == 1 { "1".to_string() } else { format!("Sp({})", 2 * l - 2) });
    }
    if k >= 4 && SimpleGroupId::spin(k + 1).ok() == Some(g) {
        hits.push(format!("Spin({k})"));
    }
    match (g.name().as_str(), k) {
        ("G2", 6) => hits.push("SU(3)".into()),
        ("Spin(7)", 7) => hits.push("G2".into()),
        ("Spin(9)", 15) => hits.push("Spin(7)".into()),
        _ => {}
    }
    hits.into_iter().next()
}

fn sphere_dim(name: &str) -> Option<u32> {
    name.strip_prefix("S^").and_then(|s| s.parse().ok())
}

/// One pass of the rewrite rules; `None` when nothing applies.
fn rewrite_once(p: &PresentationSketch, trace: &mut Vec<RewriteStep>, flagged: &mut Vec<(usize, usize, usize)>) -> Option<PresentationSketch> {
    for (i, gi) in p.g_factors.iter().enumerate() {
        for (j, hj) in p.h_factors.iter().enumerate() {
            if *hj != HFactor::Simple(*gi) {
                continue;
            }
            let (l, r) = (p.link(j, i, Side::Left), p.link(j, i, Side::Right));
            let (s, iso) = match (l.is_isomorphism(), r.is_isomorphism(), l.is_trivial(), r.is_trivial()) {
                (true, _, _, true) => (Side::Left, l.clone()),
                (_, true, true, _) => (Side::Right, r.clone()),
                _ => continue,
            };
            let same_side: Vec<&HomLink> =
                p.homs.iter().filter(|x| x.g == i && x.h != j && x.side == s && !x.hom.is_trivial()).collect();
            if !same_side.is_empty() {
                trace.push(RewriteStep {
                    kind: RewriteKind::Skipped,
                    message: format!(
                        "{} acts transitively on {} but shares that side with other factors; left as is",
                        hj,
                        gi.name()
                    ),
                });
                continue;
            }
            let opposite: Vec<&HomLink> =
                p.homs.iter().filter(|x| x.g == i && x.h != j && x.side == s.other() && !x.hom.is_trivial()).collect();
            let elsewhere: Vec<&HomLink> = p.homs.iter().filter(|x| x.h == j && x.g != i && !x.hom.is_trivial()).collect();
            let mut new_links: Vec<HomLink> = p
                .homs
                .iter()
                .filter(|x| x.g != i && x.h != j && !x.hom.is_trivial())
                .cloned()
                .collect();
            let mut ok = true;
            for b in &opposite {
                let e = match compose(&iso, &b.hom) {
                    Some(e) => e,
                    None => {
                        ok = false;
                        break;
                    }
                };
                for d in &elsewhere {
                    match compose(&d.hom, &e) {
                        Some(c) if !c.is_trivial() => {
                            if new_links.iter().any(|x| x.h == b.h && x.g == d.g && x.side == d.side) {
                                ok = false;
                            }
                            new_links.push(HomLink { h: b.h, g: d.g, side: d.side, hom: c });
                        }
                        Some(_) => {}
                        None => ok = false,
                    }
                }
            }
            if !ok {
                trace.push(RewriteStep {
                    kind: RewriteKind::Skipped,
                    message: format!("{} acts transitively on {} but the induced maps cannot be composed; left as is", hj, gi.name()),
                });
                continue;
            }
            let mut out = PresentationSketch {
                g_factors: p.g_factors.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, g)| *g).collect(),
                h_factors: p.h_factors.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, h)| *h).collect(),
                homs: Vec::new(),
            };
            for mut l in new_links {
                l.g -= (l.g > i) as usize;
                l.h -= (l.h > j) as usize;
                out.homs.push(l);
            }
            out.homs.sort_by(|a, b| (a.h, a.g, a.side).cmp(&(b.h, b.g, b.side)));
            trace.push(RewriteStep {
                kind: RewriteKind::RemovedFactor,
                message: format!(
                    "removed {} (factor {i} of G) and H factor {j}: it acts on the {} by {}; {} action(s) moved across",
                    gi.name(),
                    if s == Side::Left { "left" } else { "right" },
                    iso.describe(),
                    opposite.len() * elsewhere.len()
                ),
            });
            return Some(out);
        }
    }
    // a second factor acting transitively on a catalog sphere
    for (i, gi) in p.g_factors.iter().enumerate() {
        for a in p.homs.iter().filter(|x| x.g == i) {
            let k = match a.hom.catalog_entry() {
                Some(Ok(e)) => match e.quotient_name.as_deref().and_then(sphere_dim) {
                    Some(k) => k,
                    None => continue,
                },
                _ => continue,
            };
            for b in p.homs.iter().filter(|x| x.g == i && x.side == a.side.other() && x.h != a.h && !x.hom.is_trivial()) {
                if flagged.contains(&(i, a.h, b.h)) {
                    continue;
                }
                if let HFactor::Simple(hb) = p.h_factors[b.h] {
                    if let Some(stab) = transitive_sphere_stabilizer(hb, k) {
                        flagged.push((i, a.h, b.h));
                        trace.push(RewriteStep {
                            kind: RewriteKind::TransitiveFlag,
                            message: format!(
                                "{} acts on {}/{} = S^{k}, transitively for its standard action (stabilizer {stab})",
                                hb.name(),
                                gi.name(),
                                p.h_factors[a.h]
                            ),
                        });
                    }
                }
            }
        }
    }
    None
}

/// Repeatedly removes G factors on which an H factor acts transitively,
/// recording each rewrite; transitive actions on spheres that cannot be
/// rewritten are flagged.
pub fn normalize_presentation(p: &PresentationSketch) -> Result<Normalized> {
    p.validate()?;
    let mut cur = p.clone();
    let mut trace = Vec::new();
    let mut flagged = Vec::new();
    while let Some(next) = rewrite_once(&cur, &mut trace, &mut flagged) {
        cur = next;
        flagged.clear();
    }
    Ok(Normalized { presentation: cur, trace })
}

/// Bounds for 2-connected biquotients of dimension at most n... of
/// rational `pi_odd` total dimension at most n.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinitenessBounds {
    pub max_factors: u32,
    pub max_degree: u32,
    pub max_pi_odd: u32,
    pub candidate_groups: Vec<SimpleGroupId>,
}

pub fn finiteness_bounds(n: u32) -> Result<FinitenessBounds> {
    if n < 2 {
        return Err(Error::Dimension(format!("bounds need n >= 2, got {n}")));
    }
    Ok(FinitenessBounds {
        max_factors: n,
        max_degree: 2 * n,
        max_pi_odd: n,
        candidate_groups: groups_with_max_degree_at_most(2 * n),
    })
}

/// Kernel convention used for a rank-1 two-sided action.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KernelMode {
    Su2,
    So3,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairVerdict {
    pub left: String,
    pub right: String,
    pub left_index: i64,
    pub right_index: i64,
    pub mode: KernelMode,
    pub verdict: Verdict,
}

impl PairVerdict {
    pub fn is_free(&self) -> bool {
        self.verdict.is_free()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rank1Report {
    pub group: SimpleGroupId,
    pub pairs: Vec<PairVerdict>,
}

impl Rank1Report {
    pub fn free_pairs(&self) -> Vec<&PairVerdict> {
        self.pairs.iter().filter(|p| p.is_free()).collect()
    }
}

/// All unordered pairs of distinct SU(2) -> G classes for a rank-2 G,
/// decided for SU(2) and, when both kill -1, for SO(3).
pub fn rank1_two_sided_search(g: SimpleGroupId) -> Result<Rank1Report> {
    if g.rank() != 2 {
        return Err(Error::UnsupportedGroup(format!("{} does not have rank 2", g.name())));
    }
    let homs = su2_homs(g)?;
    let norm = profile(g).vector_index_norm as i64;
    let mut pairs = Vec::new();
    for a in 0..homs.len() {
        for b in a + 1..homs.len() {
            let (l, r) = (&homs[a], &homs[b]);
            let base = TwoSidedAction::from_reps(l, r)?.with_group(g);
            let mut modes = vec![];
            if kills_minus_one(l) && kills_minus_one(r) {
                modes.push((KernelMode::So3, base.clone()));
                modes.push((KernelMode::Su2, base.clone().with_trivial_subgroup(TrivialSubgroup::Explicit(vec![vec![1]]))));
            } else {
                modes.push((KernelMode::Su2, base.clone()));
            }
            for (mode, action) in modes {
                pairs.push(PairVerdict {
                    left: l.label.clone().unwrap_or_default(),
                    right: r.label.clone().unwrap_or_default(),
                    left_index: dynkin_index(l, norm)?,
                    right_index: dynkin_index(r, norm)?,
                    mode,
                    verdict: is_free(&action)?,
                });
            }
        }
    }
    Ok(Rank1Report { group: g, pairs })
}

/// The eight SU(2)^2 -> Sp(4) classes, as weights on the rank-2 torus.
pub fn sp4_su2squared_homs() -> Vec<WeightRep> {
    let c = |n: usize| WeightRep::trivial(2, n);
    let v = |i: usize| su2_rep_from_parts(&[1]).embed(i, 2).unwrap();
    let s3 = |i: usize| su2_rep_from_parts(&[3]).embed(i, 2).unwrap();
    let sum = |a: WeightRep, b: WeightRep| a.sum(&b).unwrap();
    vec![
        c(4).with_label("C^4"),
        sum(v(0), c(2)).with_label("V1+C^2"),
        sum(v(1), c(2)).with_label("V2+C^2"),
        sum(v(0), v(0)).with_label("V1+V1"),
        sum(v(1), v(1)).with_label("V2+V2"),
        sum(v(0), v(1)).with_label("V1+V2"),
        s3(0).with_label("S^3V1"),
        s3(1).with_label("S^3V2"),
    ]
}

fn swap_factors(label: &str) -> String {
    label.replace('1', "#").replace('2', "1").replace('#', "2").replace("C^1", "C^2").replace("C^4", "C^4")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sp4PairVerdict {
    pub left: String,
    pub right: String,
    /// Representative of the pair up to swapping factors and sides.
    pub class: (String, String),
    /// Whether only a finite subgroup of SU(2)^2 acts trivially.
    pub almost_effective: bool,
    pub verdict: Verdict,
}

impl Sp4PairVerdict {
    pub fn is_free(&self) -> bool {
        self.almost_effective && self.verdict.is_free()
    }
}

/// Every pair of SU(2)^2 -> Sp(4) classes, with freeness decided.
pub fn sp4_su2squared_search() -> Result<Vec<Sp4PairVerdict>> {
    let homs = sp4_su2squared_homs();
    let sp4 = SimpleGroupId::sp(4)?;
    let mut out = Vec::new();
    for a in 0..homs.len() {
        for b in a..homs.len() {
            let (l, r) = (&homs[a], &homs[b]);
            let action = TwoSidedAction::from_reps(l, r)?.with_group(sp4);
            let (ll, rl) = (l.label.clone().unwrap(), r.label.clone().unwrap());
            let mut variants = vec![
                (ll.clone(), rl.clone()),
                (rl.clone(), ll.clone()),
                (swap_factors(&ll), swap_factors(&rl)),
                (swap_factors(&rl), swap_factors(&ll)),
            ];
            variants.sort();
            let almost_effective = crate::freeness::auto_kernel_lattice(&action)?.rank() == 2;
            out.push(Sp4PairVerdict {
                left: ll,
                right: rl,
                class: variants[0].clone(),
                almost_effective,
                verdict: is_free(&action)?,
            });
        }
    }
    Ok(out)
}

/// Distinct classes among the free SU(2)^2 actions on Sp(4).
pub fn sp4_su2squared_free_classes() -> Result<Vec<(String, String)>> {
    let mut c: Vec<(String, String)> =
        sp4_su2squared_search()?.into_iter().filter(|p| p.is_free()).map(|p| p.class).collect();
    c.sort();
    c.dedup();
    Ok(c)
}

/// One rational homology sphere found by [`rhs_search`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RhsEntry {
    pub label: String,
    pub presentation: String,
    pub dimension: u32,
    /// Which structural case admitted the candidate.
    pub case: String,
    pub pi_odd: Vec<u32>,
    pub pi_even: Vec<u32>,
    pub chi_pi: i64,
    pub pi3: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Verdict>,
}

fn rhs_entry(label: String, p: &PresentationSketch, case: &str, cert: Option<Verdict>) -> Result<Option<RhsEntry>> {
    let l = ledger(p)?;
    let dim = match l.rational_sphere_dimension() {
        Some(d) => d,
        None => return Ok(None),
    };
    if dim as i64 != l.dimension {
        return Err(Error::Inconsistent(format!("{}: sphere profile of dimension {dim}, manifold dimension {}", p.display(), l.dimension)));
    }
    Ok(Some(RhsEntry {
        label,
        presentation: p.display(),
        dimension: dim,
        case: case.into(),
        pi_odd: l.pi_odd(),
        pi_even: l.pi_even(),
        chi_pi: l.chi_pi(),
        pi3: l.pi3.to_string(),
        certificate: cert,
    }))
}

fn case_tag(e: &CatalogEntry) -> &'static str {
    match (e.table, e.rule.as_str()) {
        (_, "spin_even_over_spin_odd") => "class(3)",
        (CatalogTable::EqualMaxDegree, _) => "class(2)",
        _ => "top(3)",
    }
}

fn rank1_presentation(g: SimpleGroupId, l: &WeightRep, r: &WeightRep) -> PresentationSketch {
    PresentationSketch {
        g_factors: vec![g],
        h_factors: vec![HFactor::Simple(SimpleGroupId::su(2).unwrap())],
        homs: vec![
            HomLink { h: 0, g: 0, side: Side::Left, hom: HomData::Weights { rep: l.clone() } },
            HomLink { h: 0, g: 0, side: Side::Right, hom: HomData::Weights { rep: r.clone() } },
        ],
    }
}

/// Simply connected biquotients of dimension at most `max_dim` with the
/// rational homology of a sphere, sorted by dimension and label.
pub fn rhs_search(max_dim: u32) -> Result<Vec<RhsEntry>> {
    let mut out = Vec::new();
    let su2 = SimpleGroupId::su(2)?;
    // G = SU(2) alone, and SU(2)/S^1
    let bare = PresentationSketch { g_factors: vec![su2], h_factors: vec![], homs: vec![] };
    out.extend(rhs_entry("S^3".into(), &bare, "top(1)", None)?);
    let circle = PresentationSketch {
        g_factors: vec![su2],
        h_factors: vec![HFactor::Circle],
        homs: vec![HomLink { h: 0, g: 0, side: Side::Left, hom: HomData::Weights { rep: WeightRep::circle(&[1, -1]) } }],
    };
    out.extend(rhs_entry("S^2".into(), &circle, "dim<=4", None)?);
    // homogeneous rows
    for e in instantiate_catalog(max_dim.max(4)) {
        if e.dimension() > max_dim {
            continue;
        }
        out.extend(rhs_entry(e.label(), &PresentationSketch::homogeneous(&e), case_tag(&e), None)?);
    }
    // two-sided SU(2) actions on rank-2 groups
    for g in [SimpleGroupId::su(3)?, SimpleGroupId::sp(4)?, SimpleGroupId::g2()] {
        if group_dimension(g) - 3 > max_dim {
            continue;
        }
        let homs = su2_homs(g)?;
        for pv in rank1_two_sided_search(g)?.free_pairs() {
            let l = homs.iter().find(|h| h.label.as_deref() == Some(&pv.left)).unwrap();
            let r = homs.iter().find(|h| h.label.as_deref() == Some(&pv.right)).unwrap();
            let p = rank1_presentation(g, l, r);
            let img = if pv.mode == KernelMode::So3 { "SO(3)" } else { "SU(2)" };
            let label = format!("{}/{} [({}, {})]", g.name(), img, pv.left, pv.right);
            out.extend(rhs_entry(label, &p, "top(2)", Some(pv.verdict.clone()))?);
        }
    }
    // SU(2)^2 acting on Sp(4)
    let sp4 = SimpleGroupId::sp(4)?;
    if group_dimension(sp4) - 6 <= max_dim {
        let homs = sp4_su2squared_homs();
        let mut seen = Vec::new();
        for pv in sp4_su2squared_search()?.into_iter().filter(|p| p.is_free()) {
            if seen.contains(&pv.class) {
                continue;
            }
            seen.push(pv.class.clone());
            let find = |s: &str| homs.iter().find(|h| h.label.as_deref() == Some(s)).unwrap();
            let (l, r) = (find(&pv.left), find(&pv.right));
            let mut homs_p = Vec::new();
            for (h, axis) in [(0usize, vec![1i64, 0]), (1, vec![0, 1])] {
                for (side, rep) in [(Side::Left, l), (Side::Right, r)] {
                    let res = rep.restrict(&[axis.clone()])?;
                    if res.weights.iter().any(|w| w[0] != 0) {
                        homs_p.push(HomLink { h, g: 0, side, hom: HomData::Weights { rep: res } });
                    }
                }
            }
            let p = PresentationSketch {
                g_factors: vec![sp4],
                h_factors: vec![HFactor::Simple(SimpleGroupId::su(2)?); 2],
                homs: homs_p,
            };
            out.extend(rhs_entry("S^4".into(), &p, "dim<=4", Some(pv.verdict))?);
        }
    }
    out.sort_by(|a, b| (a.dimension, &a.label, &a.presentation).cmp(&(b.dimension, &b.label, &b.presentation)));
    Ok(out)
}

/// Distinct labels in a search result.
pub fn rhs_labels(entries: &[RhsEntry]) -> Vec<String> {
    let mut l: Vec<String> = entries.iter().map(|e| e.label.clone()).collect();
    l.sort();
    l.dedup();
    l
}

/// The matching recorded in a certificate, as text.
pub fn describe_choice(c: &[FactorChoice]) -> String {
    c.iter()
        .map(|f| match f {
            FactorChoice::Matching(m) => m
                .iter()
                .map(|p| format!("{:?}->{:?}x{}", p.left, p.right, p.multiplicity))
                .collect::<Vec<_>>()
                .join(" "),
            FactorChoice::Weight(w) => format!("weight {w:?}"),
            FactorChoice::TrivialSummand => "trivial summand".into(),
        })
        .collect::<Vec<_>>()
        .join("; ")
}

/// Group factor of an action, for callers assembling actions by hand.
pub fn group_factor_of(l: &WeightRep, r: &WeightRep) -> Result<GroupFactor> {
    crate::freeness::group_factor(l, r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entry(key: &str, n: Option<u32>) -> CatalogEntry {
        rule(key).unwrap().instantiate(n).unwrap()
    }

    #[test]
    fn berger_ledger() {
        let l = ledger(&PresentationSketch::homogeneous(&entry("sp4_over_su2_berger", None))).unwrap();
        assert_eq!(l.net(), BTreeMap::from([(4, 1)]));
        assert_eq!(l.pi3.to_string(), "Z/10");
        assert_eq!(l.rational_sphere_dimension(), Some(7));
    }

    #[test]
    fn cayley_plane_ledger() {
        let l = ledger(&PresentationSketch::homogeneous(&entry("f4_over_spin9", None))).unwrap();
        assert_eq!(l.net(), BTreeMap::from([(4, -1), (12, 1)]));
        assert_eq!(l.pi_even(), vec![8]);
        assert_eq!(l.pi_odd(), vec![23]);
    }

    #[test]
    fn outer_transpose_keeps_even_degrees() {
        for n in 1..=4u32 {
            let g = SimpleGroupId::su(2 * n + 1).unwrap();
            let p = PresentationSketch {
                g_factors: vec![g],
                h_factors: vec![HFactor::Simple(g)],
                homs: vec![
                    HomLink { h: 0, g: 0, side: Side::Left, hom: HomData::Identity },
                    HomLink { h: 0, g: 0, side: Side::Right, hom: HomData::OuterTranspose },
                ],
            };
            let l = ledger(&p).unwrap();
            let even: Vec<u32> = (1..=n).map(|k| 2 * k).collect();
            assert_eq!(l.contributed.keys().copied().collect::<Vec<_>>(), even);
        }
    }

    #[test]
    fn identity_factor_is_removed() {
        let g = SimpleGroupId::su(4).unwrap();
        let p = PresentationSketch {
            g_factors: vec![g, SimpleGroupId::sp(4).unwrap()],
            h_factors: vec![HFactor::Simple(g)],
            homs: vec![HomLink { h: 0, g: 0, side: Side::Left, hom: HomData::Identity }],
        };
        let n = normalize_presentation(&p).unwrap();
        assert_eq!(n.presentation.g_factors, vec![SimpleGroupId::sp(4).unwrap()]);
        assert!(n.presentation.h_factors.is_empty());
        assert_eq!(n.trace[0].kind, RewriteKind::RemovedFactor);
        assert_eq!(normalize_presentation(&n.presentation).unwrap().presentation, n.presentation);
    }

    #[test]
    fn doubled_group_collapses() {
        // (G/Z) \ (G x G)/Z / H with H acting by phi1, phi2 on the right
        let g = SimpleGroupId::sp(4).unwrap();
        let h = SimpleGroupId::su(2).unwrap();
        let phi1 = HomData::Catalog { rule: "sp_over_sp".into(), param: Some(2) };
        let phi2 = HomData::Catalog { rule: "sp4_over_su2_index2".into(), param: None };
        let p = PresentationSketch {
            g_factors: vec![g, g],
            h_factors: vec![HFactor::Simple(g), HFactor::Simple(h)],
            homs: vec![
                HomLink { h: 0, g: 0, side: Side::Left, hom: HomData::Identity },
                HomLink { h: 0, g: 1, side: Side::Left, hom: HomData::Identity },
                HomLink { h: 1, g: 0, side: Side::Right, hom: phi1.clone() },
                HomLink { h: 1, g: 1, side: Side::Right, hom: phi2.clone() },
            ],
        };
        let n = normalize_presentation(&p).unwrap().presentation;
        assert_eq!(n.g_factors, vec![g]);
        assert_eq!(n.h_factors, vec![HFactor::Simple(h)]);
        assert_eq!(n.link(0, 0, Side::Left), &phi1);
        assert_eq!(n.link(0, 0, Side::Right), &phi2);
        assert_eq!(ledger(&n).unwrap().pi3.to_string(), "0");
    }

    #[test]
    fn su3_on_five_sphere_is_flagged() {
        let g = SimpleGroupId::spin(6).unwrap();
        let p = PresentationSketch {
            g_factors: vec![g],
            h_factors: vec![HFactor::Simple(SimpleGroupId::spin(5).unwrap()), HFactor::Simple(SimpleGroupId::su(3).unwrap())],
            homs: vec![
                HomLink { h: 0, g: 0, side: Side::Left, hom: HomData::Catalog { rule: "su_even_over_sp".into(), param: Some(2) } },
                HomLink { h: 1, g: 0, side: Side::Right, hom: HomData::Catalog { rule: "su_over_su".into(), param: Some(4) } },
            ],
        };
        let n = normalize_presentation(&p).unwrap();
        assert!(n.trace.iter().any(|s| s.kind == RewriteKind::TransitiveFlag && s.message.contains("S^5")));
    }

    #[test]
    fn bounds() {
        assert_eq!(finiteness_bounds(7).unwrap().max_degree, 14);
        assert_eq!(finiteness_bounds(2).unwrap().max_factors, 2);
        assert!(finiteness_bounds(1).is_err());
        let b = finiteness_bounds(8).unwrap();
        assert!(b.candidate_groups.iter().all(|g| crate::groups_catalog::max_degree(*g) <= 16));
        assert!(b.candidate_groups.contains(&SimpleGroupId::e6()));
        assert!(!b.candidate_groups.contains(&SimpleGroupId::e7()));
    }

    #[test]
    fn validation_points_at_links() {
        let p = PresentationSketch {
            g_factors: vec![SimpleGroupId::g2()],
            h_factors: vec![HFactor::Simple(SimpleGroupId::su(2).unwrap())],
            homs: vec![HomLink { h: 0, g: 0, side: Side::Left, hom: HomData::Catalog { rule: "su3_over_so3".into(), param: None } }],
        };
        let e = p.validate().unwrap_err().to_string();
        assert!(e.contains("homs[0]"), "{e}");
    }
}
