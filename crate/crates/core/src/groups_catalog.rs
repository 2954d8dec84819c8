//! Degrees, dimensions and centers of the simply connected simple compact
//! groups, and the catalog of homogeneous spaces with few rational homotopy
//! groups used by the classification filters.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl Family {
    pub const ALL: [Family; 9] =
        [Family::A, Family::B, Family::C, Family::D, Family::G2, Family::F4, Family::E6, Family::E7, Family::E8];

    fn fixed_rank(self) -> Option<u32> {
        match self {
            Family::G2 => Some(2),
            Family::F4 => Some(4),
            Family::E6 => Some(6),
            Family::E7 => Some(7),
            Family::E8 => Some(8),
            _ => None,
        }
    }

    fn min_rank(self) -> u32 {
        match self {
            Family::A => 1,
            Family::B => 3,
            Family::C => 2,
            Family::D => 4,
            f => f.fixed_rank().unwrap(),
        }
    }
}

/// A simply connected simple compact group. Low-rank coincidences are
/// folded into one family, so Spin(5) is `C2` and Spin(6) is `A3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawGroupId", into = "RawGroupId")]
pub struct SimpleGroupId {
    family: Family,
    rank: u32,
}

#[derive(Serialize, Deserialize)]
struct RawGroupId {
    family: Family,
    rank: u32,
}

impl TryFrom<RawGroupId> for SimpleGroupId {
    type Error = Error;
    fn try_from(r: RawGroupId) -> Result<Self> {
        SimpleGroupId::new(r.family, r.rank)
    }
}

impl From<SimpleGroupId> for RawGroupId {
    fn from(g: SimpleGroupId) -> Self {
        RawGroupId { family: g.family, rank: g.rank }
    }
}

impl SimpleGroupId {
    pub fn new(family: Family, rank: u32) -> Result<Self> {
        let ok = match family.fixed_rank() {
            Some(r) => rank == r,
            None => rank >= family.min_rank(),
        };
        if !ok {
            return Err(Error::InvalidGroup(format!("{family:?} does not admit rank {rank}")));
        }
        Ok(SimpleGroupId { family, rank })
    }

    /// SU(n), n >= 2.
    pub fn su(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidGroup(format!("SU({n}) is not simple")));
        }
        Self::new(Family::A, n - 1)
    }

    /// Sp(2n) with quaternionic rank n >= 1.
    pub fn sp(two_n: u32) -> Result<Self> {
        if two_n < 2 || two_n % 2 != 0 {
            return Err(Error::InvalidGroup(format!("Sp({two_n}) needs an even positive argument")));
        }
        match two_n / 2 {
            1 => Self::new(Family::A, 1),
            n => Self::new(Family::C, n),
        }
    }

    /// Spin(m), m = 3 or m >= 5.
    pub fn spin(m: u32) -> Result<Self> {
        match m {
            3 => Self::new(Family::A, 1),
            5 => Self::new(Family::C, 2),
            6 => Self::new(Family::A, 3),
            m if m >= 7 && m % 2 == 1 => Self::new(Family::B, (m - 1) / 2),
            m if m >= 8 => Self::new(Family::D, m / 2),
            _ => Err(Error::InvalidGroup(format!("Spin({m}) is not simple"))),
        }
    }

    pub fn g2() -> Self {
        SimpleGroupId { family: Family::G2, rank: 2 }
    }
    pub fn f4() -> Self {
        SimpleGroupId { family: Family::F4, rank: 4 }
    }
    pub fn e6() -> Self {
        SimpleGroupId { family: Family::E6, rank: 6 }
    }
    pub fn e7() -> Self {
        SimpleGroupId { family: Family::E7, rank: 7 }
    }
    pub fn e8() -> Self {
        SimpleGroupId { family: Family::E8, rank: 8 }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn is_classical(&self) -> bool {
        matches!(self.family, Family::A | Family::B | Family::C | Family::D)
    }

    /// Conventional matrix-group name.
    pub fn name(&self) -> String {
        let l = self.rank;
        match self.family {
            Family::A => format!("SU({})", l + 1),
            Family::B => format!("Spin({})", 2 * l + 1),
            Family::C => format!("Sp({})", 2 * l),
            Family::D => format!("Spin({})", 2 * l),
            Family::G2 => "G2".into(),
            Family::F4 => "F4".into(),
            Family::E6 => "E6".into(),
            Family::E7 => "E7".into(),
            Family::E8 => "E8".into(),
        }
    }

    /// Cartan label such as `B4`.
    pub fn cartan_label(&self) -> String {
        match self.family {
            Family::A | Family::B | Family::C | Family::D => format!("{:?}{}", self.family, self.rank),
            f => format!("{f:?}"),
        }
    }
}

impl fmt::Display for SimpleGroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl FromStr for SimpleGroupId {
    type Err = Error;

    /// Accepts `SU(4)`, `Sp(4)`, `Spin(9)` and Cartan labels like `A3`, `E8`.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::InvalidGroup(format!("cannot parse group name {s:?}"));
        let arg = |prefix: &str| -> Option<u32> {
            t.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')?.parse().ok()
        };
        if let Some(n) = arg("SU") {
            return Self::su(n);
        }
        if let Some(n) = arg("Sp") {
            return Self::sp(n);
        }
        if let Some(n) = arg("Spin") {
            return Self::spin(n);
        }
        match t.as_str() {
            "G2" => return Ok(Self::g2()),
            "F4" => return Ok(Self::f4()),
            "E6" => return Ok(Self::e6()),
            "E7" => return Ok(Self::e7()),
            "E8" => return Ok(Self::e8()),
            _ => {}
        }
        let mut chars = t.chars();
        let fam = match chars.next().ok_or_else(bad)? {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            _ => return Err(bad()),
        };
        let rank: u32 = chars.as_str().parse().map_err(|_| bad())?;
        Self::new(fam, rank)
    }
}

/// The defining representation used for weight computations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FaithfulRep {
    /// Standard complex rep of SU/Sp, vector rep of Spin.
    Standard { dim: u32 },
    /// The 7-dimensional rep of G2.
    Seven,
    Unavailable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupProfile {
    pub id: SimpleGroupId,
    pub degrees: Vec<u32>,
    pub max_degree: u32,
    pub dimension: u32,
    pub center_order: u32,
    pub faithful_rep: FaithfulRep,
    pub vector_index_norm: u32,
}

/// Degrees of the basic invariant polynomials, sorted ascending.
pub fn degrees_of(id: SimpleGroupId) -> Vec<u32> {
    let l = id.rank;
    let mut d: Vec<u32> = match id.family {
        Family::A => (2..=l + 1).collect(),
        Family::B | Family::C => (1..=l).map(|i| 2 * i).collect(),
        Family::D => (1..l).map(|i| 2 * i).chain(std::iter::once(l)).collect(),
        Family::G2 => vec![2, 6],
        Family::F4 => vec![2, 6, 8, 12],
        Family::E6 => vec![2, 5, 6, 8, 9, 12],
        Family::E7 => vec![2, 6, 8, 10, 12, 14, 18],
        Family::E8 => vec![2, 8, 12, 14, 18, 20, 24, 30],
    };
    d.sort_unstable();
    d
}

pub fn group_dimension(id: SimpleGroupId) -> u32 {
    degrees_of(id).iter().map(|d| 2 * d - 1).sum()
}

pub fn max_degree(id: SimpleGroupId) -> u32 {
    *degrees_of(id).iter().max().expect("every simple group has a degree")
}

pub fn profile(id: SimpleGroupId) -> GroupProfile {
    let l = id.rank;
    let degrees = degrees_of(id);
    let (center_order, faithful_rep, vector_index_norm) = match id.family {
        Family::A => (l + 1, FaithfulRep::Standard { dim: l + 1 }, 1),
        Family::B => (2, FaithfulRep::Standard { dim: 2 * l + 1 }, 2),
        Family::C => (2, FaithfulRep::Standard { dim: 2 * l }, 1),
        Family::D => (4, FaithfulRep::Standard { dim: 2 * l }, 2),
        Family::G2 => (1, FaithfulRep::Seven, 2),
        Family::F4 => (1, FaithfulRep::Unavailable, 6),
        Family::E6 => (3, FaithfulRep::Unavailable, 6),
        Family::E7 => (2, FaithfulRep::Unavailable, 12),
        Family::E8 => (1, FaithfulRep::Unavailable, 60),
    };
    GroupProfile {
        id,
        max_degree: *degrees.iter().max().unwrap(),
        dimension: degrees.iter().map(|d| 2 * d - 1).sum(),
        degrees,
        center_order,
        faithful_rep,
        vector_index_norm,
    }
}

/// Signed multiset difference `a - b` as (only in a, only in b).
pub fn multiset_difference(a: &[u32], b: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let mut only_a = Vec::new();
    let mut rest_b = b.to_vec();
    for x in a {
        if let Some(pos) = rest_b.iter().position(|y| y == x) {
            rest_b.remove(pos);
        } else {
            only_a.push(*x);
        }
    }
    only_a.sort_unstable();
    rest_b.sort_unstable();
    (only_a, rest_b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Centralizer {
    Finite,
    FiniteByCircle,
    FiniteByA1,
}

/// Which list a catalog row belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CatalogTable {
    /// Pairs with equal maximal degree.
    EqualMaxDegree,
    /// Pairs where H kills all but one degree of G.
    OneSurvivor,
    /// Pairs where H kills all but two or three degrees of G.
    FewSurvivors,
}

/// Torus coordinates in which a catalog homomorphism is written down.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TorusModel {
    /// SU(n): coordinates e_1..e_{n-1}, e_n = -(e_1+...+e_{n-1}).
    Su(u32),
    /// Sp(2n): coordinates e_1..e_n.
    Sp(u32),
    /// Spin(m): coordinates e_1..e_{floor(m/2)}, spin weights on scale 2.
    Spin(u32),
    G2,
}

/// Irreducible pieces of the restriction of G's defining rep to H.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RepPiece {
    Defining,
    Dual,
    /// Vector rep of Spin(m).
    Vector,
    /// Spin rep of Spin(m), m odd.
    Spin,
    /// The 7-dimensional rep of G2.
    Seven,
    /// Sym^k of the standard rep of SU(2).
    Sym(u32),
    Trivial(u32),
}

/// How H sits in G, as data: the defining rep of G restricted to H.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HomWitness {
    pub model: TorusModel,
    pub pieces: Vec<RepPiece>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub rule: String,
    pub param: Option<u32>,
    pub table: CatalogTable,
    pub g: SimpleGroupId,
    pub h: SimpleGroupId,
    /// How the image of H is usually written, e.g. `SO(3)`.
    pub h_image: String,
    pub hom_descriptor: String,
    pub dynkin_index: i64,
    pub degrees_added: Vec<u32>,
    pub degrees_removed: Vec<u32>,
    pub centralizer: Centralizer,
    pub quotient_name: Option<String>,
    pub witness: HomWitness,
}

impl CatalogEntry {
    pub fn dimension(&self) -> u32 {
        group_dimension(self.g) - group_dimension(self.h)
    }

    /// `G/H` as written with the image group.
    pub fn display(&self) -> String {
        format!("{}/{}", self.g.name(), self.h_image)
    }

    /// Human label: the named quotient if there is one.
    pub fn label(&self) -> String {
        match &self.quotient_name {
            Some(q) => q.clone(),
            None => format!("{} [{}]", self.display(), self.hom_descriptor),
        }
    }

    /// Checks degrees(G) - degrees(H) = added - removed.
    pub fn degree_identity_holds(&self) -> bool {
        let (a, r) = multiset_difference(&degrees_of(self.g), &degrees_of(self.h));
        let mut added = self.degrees_added.clone();
        let mut removed = self.degrees_removed.clone();
        added.sort_unstable();
        removed.sort_unstable();
        a == added && r == removed
    }
}

/// A catalog row, possibly depending on an integer parameter n.
pub struct CatalogRule {
    pub key: &'static str,
    pub table: CatalogTable,
    /// Smallest admissible n; `None` for rows without a parameter.
    pub min_param: Option<u32>,
    build: fn(u32) -> Result<CatalogEntry>,
}

impl CatalogRule {
    pub fn instantiate(&self, n: Option<u32>) -> Result<CatalogEntry> {
        match (self.min_param, n) {
            (None, None) => (self.build)(0),
            (None, Some(_)) => Err(Error::Catalog(format!("{} takes no parameter", self.key))),
            (Some(_), None) => Err(Error::Catalog(format!("{} needs a parameter", self.key))),
            (Some(lo), Some(n)) if n < lo => {
                Err(Error::Catalog(format!("{} needs n >= {lo}, got {n}", self.key)))
            }
            (Some(_), Some(n)) => (self.build)(n),
        }
    }
}

impl fmt::Debug for CatalogRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CatalogRule").field("key", &self.key).field("min_param", &self.min_param).finish()
    }
}

#[allow(clippy::too_many_arguments)]
fn row(
    rule: &str,
    param: Option<u32>,
    table: CatalogTable,
    g: SimpleGroupId,
    h: SimpleGroupId,
    h_image: &str,
    descriptor: &str,
    index: i64,
    added: Vec<u32>,
    removed: Vec<u32>,
    centralizer: Centralizer,
    name: Option<String>,
    model: TorusModel,
    pieces: Vec<RepPiece>,
) -> CatalogEntry {
    CatalogEntry {
        rule: rule.into(),
        param,
        table,
        g,
        h,
        h_image: h_image.into(),
        hom_descriptor: descriptor.into(),
        dynkin_index: index,
        degrees_added: added,
        degrees_removed: removed,
        centralizer,
        quotient_name: name,
        witness: HomWitness { model, pieces },
    }
}

use CatalogTable::*;
use Centralizer::*;
use RepPiece::*;

fn odd_range(lo: u32, hi: u32) -> Vec<u32> {
    (lo..=hi).filter(|d| d % 2 == 1).collect()
}

static RULES: &[CatalogRule] = &[
    CatalogRule {
        key: "spin_even_over_spin_odd",
        table: EqualMaxDegree,
        min_param: Some(4),
        build: |n| {
            Ok(row(
                "spin_even_over_spin_odd", Some(n), EqualMaxDegree,
                SimpleGroupId::spin(2 * n)?, SimpleGroupId::spin(2 * n - 1)?, &format!("Spin({})", 2 * n - 1),
                "standard inclusion", 1, vec![n], vec![], Finite, Some(format!("S^{}", 2 * n - 1)),
                TorusModel::Spin(2 * n - 1), vec![Vector, Trivial(1)],
            ))
        },
    },
    CatalogRule {
        key: "su_even_over_sp",
        table: EqualMaxDegree,
        min_param: Some(2),
        build: |n| {
            Ok(row(
                "su_even_over_sp", Some(n), EqualMaxDegree,
                SimpleGroupId::su(2 * n)?, SimpleGroupId::sp(2 * n)?, &format!("Sp({})", 2 * n),
                "standard inclusion", 1, odd_range(3, 2 * n - 1), vec![], Finite,
                (n == 2).then(|| "S^5".to_string()),
                TorusModel::Sp(2 * n), vec![Defining],
            ))
        },
    },
    CatalogRule {
        key: "spin7_over_g2",
        table: EqualMaxDegree,
        min_param: None,
        build: |_| {
            Ok(row(
                "spin7_over_g2", None, EqualMaxDegree, SimpleGroupId::spin(7)?, SimpleGroupId::g2(), "G2",
                "7-dimensional rep", 1, vec![4], vec![], Finite, Some("S^7".into()),
                TorusModel::G2, vec![Seven],
            ))
        },
    },
    CatalogRule {
        key: "spin8_over_g2",
        table: EqualMaxDegree,
        min_param: None,
        build: |_| {
            Ok(row(
                "spin8_over_g2", None, EqualMaxDegree, SimpleGroupId::spin(8)?, SimpleGroupId::g2(), "G2",
                "7-dimensional rep", 1, vec![4, 4], vec![], Finite, Some("S^7xS^7".into()),
                TorusModel::G2, vec![Seven, Trivial(1)],
            ))
        },
    },
    CatalogRule {
        key: "e6_over_f4",
        table: EqualMaxDegree,
        min_param: None,
        build: |_| {
            // 27 = 26 + 1 restricted further to Spin(9) as 1 + 9 + 16
            Ok(row(
                "e6_over_f4", None, EqualMaxDegree, SimpleGroupId::e6(), SimpleGroupId::f4(), "F4",
                "standard inclusion", 1, vec![5, 9], vec![], Finite, None,
                TorusModel::Spin(9), vec![Trivial(2), Vector, Spin],
            ))
        },
    },
    CatalogRule {
        key: "su_over_su",
        table: OneSurvivor,
        min_param: Some(3),
        build: |n| {
            Ok(row(
                "su_over_su", Some(n), OneSurvivor, SimpleGroupId::su(n)?, SimpleGroupId::su(n - 1)?,
                &format!("SU({})", n - 1), "standard inclusion", 1, vec![n], vec![], FiniteByCircle,
                Some(format!("S^{}", 2 * n - 1)), TorusModel::Su(n - 1), vec![Defining, Trivial(1)],
            ))
        },
    },
    CatalogRule {
        key: "sp_over_sp",
        table: OneSurvivor,
        min_param: Some(2),
        build: |n| {
            Ok(row(
                "sp_over_sp", Some(n), OneSurvivor, SimpleGroupId::sp(2 * n)?, SimpleGroupId::sp(2 * n - 2)?,
                &format!("Sp({})", 2 * n - 2), "standard inclusion", 1, vec![2 * n], vec![], FiniteByA1,
                Some(format!("S^{}", 4 * n - 1)), TorusModel::Sp(2 * n - 2), vec![Defining, Trivial(2)],
            ))
        },
    },
    CatalogRule {
        key: "spin_odd_over_spin_even",
        table: OneSurvivor,
        min_param: Some(3),
        build: |n| {
            Ok(row(
                "spin_odd_over_spin_even", Some(n), OneSurvivor, SimpleGroupId::spin(2 * n + 1)?,
                SimpleGroupId::spin(2 * n)?, &format!("Spin({})", 2 * n), "standard inclusion", 1, vec![2 * n],
                vec![n], Finite, Some(format!("S^{}", 2 * n)), TorusModel::Spin(2 * n), vec![Vector, Trivial(1)],
            ))
        },
    },
    CatalogRule {
        key: "spin_odd_over_spin_odd",
        table: OneSurvivor,
        min_param: Some(3),
        build: |n| {
            Ok(row(
                "spin_odd_over_spin_odd", Some(n), OneSurvivor, SimpleGroupId::spin(2 * n + 1)?,
                SimpleGroupId::spin(2 * n - 1)?, &format!("Spin({})", 2 * n - 1), "standard inclusion", 1,
                vec![2 * n], vec![], FiniteByCircle, Some(format!("UT(S^{})", 2 * n)),
                TorusModel::Spin(2 * n - 1), vec![Vector, Trivial(2)],
            ))
        },
    },
    CatalogRule {
        key: "sp4_over_su2_index2",
        table: OneSurvivor,
        min_param: None,
        build: |_| {
            Ok(row(
                "sp4_over_su2_index2", None, OneSurvivor, SimpleGroupId::sp(4)?, SimpleGroupId::su(2)?, "SU(2)",
                "V+V", 2, vec![4], vec![], FiniteByCircle, Some("UT(S^4)".into()),
                TorusModel::Su(2), vec![Sym(1), Sym(1)],
            ))
        },
    },
    CatalogRule {
        key: "sp4_over_su2_berger",
        table: OneSurvivor,
        min_param: None,
        build: |_| {
            Ok(row(
                "sp4_over_su2_berger", None, OneSurvivor, SimpleGroupId::sp(4)?, SimpleGroupId::su(2)?, "SU(2)",
                "S^3V", 10, vec![4], vec![], Finite, None, TorusModel::Su(2), vec![Sym(3)],
            ))
        },
    },
    CatalogRule {
        key: "su3_over_so3",
        table: OneSurvivor,
        min_param: None,
        build: |_| {
            Ok(row(
                "su3_over_so3", None, OneSurvivor, SimpleGroupId::su(3)?, SimpleGroupId::su(2)?, "SO(3)",
                "S^2V", 4, vec![3], vec![], Finite, None, TorusModel::Su(2), vec![Sym(2)],
            ))
        },
    },
    CatalogRule {
        key: "spin9_over_spin7",
        table: OneSurvivor,
        min_param: None,
        build: |_| {
            Ok(row(
                "spin9_over_spin7", None, OneSurvivor, SimpleGroupId::spin(9)?, SimpleGroupId::spin(7)?,
                "Spin(7)", "spin rep", 1, vec![8], vec![], Finite, Some("S^15".into()),
                TorusModel::Spin(7), vec![Spin, Trivial(1)],
            ))
        },
    },
    CatalogRule {
        key: "g2_over_su3",
        table: OneSurvivor,
        min_param: None,
        build: |_| {
            Ok(row(
                "g2_over_su3", None, OneSurvivor, SimpleGroupId::g2(), SimpleGroupId::su(3)?, "SU(3)",
                "standard inclusion", 1, vec![6], vec![3], Finite, Some("S^6".into()),
                TorusModel::Su(3), vec![Defining, Dual, Trivial(1)],
            ))
        },
    },
    CatalogRule {
        key: "g2_over_su2_w1",
        table: OneSurvivor,
        min_param: None,
        build: |_| {
            Ok(row(
                "g2_over_su2_w1", None, OneSurvivor, SimpleGroupId::g2(), SimpleGroupId::su(2)?, "SU(2)", "W1", 1,
                vec![6], vec![], FiniteByA1, Some("UT(S^6)".into()), TorusModel::Su(2),
                vec![Sym(1), Sym(1), Trivial(3)],
            ))
        },
    },
    CatalogRule {
        key: "g2_over_su2_w3",
        table: OneSurvivor,
        min_param: None,
        build: |_| {
            Ok(row(
                "g2_over_su2_w3", None, OneSurvivor, SimpleGroupId::g2(), SimpleGroupId::su(2)?, "SU(2)", "W3", 3,
                vec![6], vec![], FiniteByA1, None, TorusModel::Su(2), vec![Sym(2), Sym(1), Sym(1)],
            ))
        },
    },
    CatalogRule {
        key: "g2_over_so3_w4",
        table: OneSurvivor,
        min_param: None,
        build: |_| {
            Ok(row(
                "g2_over_so3_w4", None, OneSurvivor, SimpleGroupId::g2(), SimpleGroupId::su(2)?, "SO(3)", "W4", 4,
                vec![6], vec![], Finite, None, TorusModel::Su(2), vec![Sym(2), Sym(2), Trivial(1)],
            ))
        },
    },
    CatalogRule {
        key: "g2_over_so3_w28",
        table: OneSurvivor,
        min_param: None,
        build: |_| {
            Ok(row(
                "g2_over_so3_w28", None, OneSurvivor, SimpleGroupId::g2(), SimpleGroupId::su(2)?, "SO(3)", "W28",
                28, vec![6], vec![], Finite, None, TorusModel::Su(2), vec![Sym(6)],
            ))
        },
    },
    CatalogRule {
        key: "f4_over_spin9",
        table: OneSurvivor,
        min_param: None,
        build: |_| {
            Ok(row(
                "f4_over_spin9", None, OneSurvivor, SimpleGroupId::f4(), SimpleGroupId::spin(9)?, "Spin(9)",
                "standard inclusion", 1, vec![12], vec![4], Finite, Some("CaP^2".into()),
                TorusModel::Spin(9), vec![Trivial(1), Vector, Spin],
            ))
        },
    },
    CatalogRule {
        key: "spin_even_over_spin_even",
        table: FewSurvivors,
        min_param: Some(4),
        build: |n| {
            Ok(row(
                "spin_even_over_spin_even", Some(n), FewSurvivors, SimpleGroupId::spin(2 * n)?,
                SimpleGroupId::spin(2 * n - 2)?, &format!("Spin({})", 2 * n - 2), "standard inclusion", 1,
                vec![n, 2 * n - 2], vec![n - 1], FiniteByCircle, Some(format!("UT(S^{})", 2 * n - 1)),
                TorusModel::Spin(2 * n - 2), vec![Vector, Trivial(2)],
            ))
        },
    },
    CatalogRule {
        key: "spin_even_over_spin_odd_minus3",
        table: FewSurvivors,
        min_param: Some(4),
        build: |n| {
            Ok(row(
                "spin_even_over_spin_odd_minus3", Some(n), FewSurvivors, SimpleGroupId::spin(2 * n)?,
                SimpleGroupId::spin(2 * n - 3)?, &format!("Spin({})", 2 * n - 3), "standard inclusion", 1,
                vec![n, 2 * n - 2], vec![], FiniteByA1, None, TorusModel::Spin(2 * n - 3),
                vec![Vector, Trivial(3)],
            ))
        },
    },
    CatalogRule {
        key: "su_odd_over_sp",
        table: FewSurvivors,
        min_param: Some(2),
        build: |n| {
            Ok(row(
                "su_odd_over_sp", Some(n), FewSurvivors, SimpleGroupId::su(2 * n + 1)?, SimpleGroupId::sp(2 * n)?,
                &format!("Sp({})", 2 * n), "standard inclusion", 1, odd_range(3, 2 * n + 1), vec![],
                FiniteByCircle, None, TorusModel::Sp(2 * n), vec![Defining, Trivial(1)],
            ))
        },
    },
    CatalogRule {
        key: "su_odd_over_so_odd",
        table: FewSurvivors,
        min_param: Some(2),
        build: |n| {
            Ok(row(
                "su_odd_over_so_odd", Some(n), FewSurvivors, SimpleGroupId::su(2 * n + 1)?,
                SimpleGroupId::spin(2 * n + 1)?, &format!("SO({})", 2 * n + 1), "vector rep", 2,
                odd_range(3, 2 * n + 1), vec![], Finite, None, TorusModel::Spin(2 * n + 1), vec![Vector],
            ))
        },
    },
    CatalogRule {
        key: "spin10_over_spin7",
        table: FewSurvivors,
        min_param: None,
        build: |_| {
            Ok(row(
                "spin10_over_spin7", None, FewSurvivors, SimpleGroupId::spin(10)?, SimpleGroupId::spin(7)?,
                "Spin(7)", "spin rep", 1, vec![5, 8], vec![], FiniteByCircle, None, TorusModel::Spin(7),
                vec![Spin, Trivial(2)],
            ))
        },
    },
    CatalogRule {
        key: "su7_over_g2",
        table: FewSurvivors,
        min_param: None,
        build: |_| {
            Ok(row(
                "su7_over_g2", None, FewSurvivors, SimpleGroupId::su(7)?, SimpleGroupId::g2(), "G2",
                "7-dimensional rep", 2, vec![3, 4, 5, 7], vec![], Finite, None, TorusModel::G2, vec![Seven],
            ))
        },
    },
    CatalogRule {
        key: "spin9_over_g2",
        table: FewSurvivors,
        min_param: None,
        build: |_| {
            Ok(row(
                "spin9_over_g2", None, FewSurvivors, SimpleGroupId::spin(9)?, SimpleGroupId::g2(), "G2",
                "7-dimensional rep", 1, vec![4, 8], vec![], FiniteByCircle, None, TorusModel::G2,
                vec![Seven, Trivial(2)],
            ))
        },
    },
    CatalogRule {
        key: "spin10_over_g2",
        table: FewSurvivors,
        min_param: None,
        build: |_| {
            Ok(row(
                "spin10_over_g2", None, FewSurvivors, SimpleGroupId::spin(10)?, SimpleGroupId::g2(), "G2",
                "7-dimensional rep", 1, vec![4, 5, 8], vec![], FiniteByA1, None, TorusModel::G2,
                vec![Seven, Trivial(3)],
            ))
        },
    },
];

/// All catalog rules; parameterized rows are closed-form in n.
pub fn homogeneous_catalog() -> &'static [CatalogRule] {
    RULES
}

pub fn rule(key: &str) -> Option<&'static CatalogRule> {
    RULES.iter().find(|r| r.key == key)
}

/// Every row instantiated for parameters `min..=max_param`.
pub fn instantiate_catalog(max_param: u32) -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    for r in RULES {
        match r.min_param {
            None => out.push(r.instantiate(None).expect("fixed rows are valid")),
            Some(lo) => {
                for n in lo..=max_param {
                    out.push(r.instantiate(Some(n)).expect("parameter within range"));
                }
            }
        }
    }
    out
}

/// Finds the catalog entry for `(g, h)`; a descriptor disambiguates rows
/// sharing the same pair, matched against the descriptor or the index.
pub fn lookup(g: SimpleGroupId, h: SimpleGroupId, descriptor: Option<&str>) -> Result<CatalogEntry> {
    let bound = g.rank().max(h.rank()) + 2;
    let hits: Vec<CatalogEntry> = instantiate_catalog(bound.max(4))
        .into_iter()
        .filter(|e| e.g == g && e.h == h)
        .filter(|e| match descriptor {
            None => true,
            Some(d) => {
                e.hom_descriptor.eq_ignore_ascii_case(d)
                    || e.dynkin_index.to_string() == d
                    || format!("index {}", e.dynkin_index) == d
            }
        })
        .collect();
    match hits.len() {
        0 => Err(Error::Catalog(format!("no catalog row for {g}/{h} with {descriptor:?}"))),
        1 => Ok(hits.into_iter().next().unwrap()),
        _ => {
            let options: Vec<String> = hits.iter().map(|e| format!("{} (index {})", e.hom_descriptor, e.dynkin_index)).collect();
            Err(Error::Catalog(format!("{g}/{h} is ambiguous, pick one of: {}", options.join(", "))))
        }
    }
}

/// Simple groups whose maximal degree is at most `d`.
pub fn groups_with_max_degree_at_most(d: u32) -> Vec<SimpleGroupId> {
    let mut out = Vec::new();
    for fam in Family::ALL {
        match fam.fixed_rank() {
            Some(r) => {
                let id = SimpleGroupId::new(fam, r).unwrap();
                if max_degree(id) <= d {
                    out.push(id);
                }
            }
            None => {
                let mut r = fam.min_rank();
                loop {
                    let id = SimpleGroupId::new(fam, r).unwrap();
                    if max_degree(id) > d {
                        break;
                    }
                    out.push(id);
                    r += 1;
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_rows() {
        assert_eq!(degrees_of(SimpleGroupId::su(4).unwrap()), vec![2, 3, 4]);
        assert_eq!(degrees_of(SimpleGroupId::su(2).unwrap()), vec![2]);
        assert_eq!(degrees_of(SimpleGroupId::spin(8).unwrap()), vec![2, 4, 4, 6]);
        assert_eq!(group_dimension(SimpleGroupId::su(2).unwrap()), 3);
        assert_eq!(group_dimension(SimpleGroupId::g2()), 14);
        assert_eq!(group_dimension(SimpleGroupId::spin(9).unwrap()), 36);
    }

    #[test]
    fn rank_bounds() {
        assert!(SimpleGroupId::new(Family::B, 2).is_err());
        assert!(SimpleGroupId::new(Family::D, 3).is_err());
        assert!(SimpleGroupId::new(Family::C, 1).is_err());
        assert!(SimpleGroupId::new(Family::G2, 3).is_err());
        assert!(SimpleGroupId::spin(4).is_err());
        assert_eq!(SimpleGroupId::spin(5).unwrap(), SimpleGroupId::sp(4).unwrap());
        assert_eq!(SimpleGroupId::spin(6).unwrap(), SimpleGroupId::su(4).unwrap());
        assert_eq!(SimpleGroupId::spin(3).unwrap(), SimpleGroupId::sp(2).unwrap());
    }

    #[test]
    fn parse_names() {
        assert_eq!("Sp(4)".parse::<SimpleGroupId>().unwrap(), SimpleGroupId::sp(4).unwrap());
        assert_eq!("B4".parse::<SimpleGroupId>().unwrap(), SimpleGroupId::spin(9).unwrap());
        assert_eq!("G2".parse::<SimpleGroupId>().unwrap(), SimpleGroupId::g2());
        assert!("B2".parse::<SimpleGroupId>().is_err());
        assert!("Q7".parse::<SimpleGroupId>().is_err());
    }

    #[test]
    fn b_and_c_share_degrees_but_not_ids() {
        let b = SimpleGroupId::spin(9).unwrap();
        let c = SimpleGroupId::sp(8).unwrap();
        assert_eq!(degrees_of(b), degrees_of(c));
        assert_ne!(b, c);
        assert_ne!(profile(b).vector_index_norm, profile(c).vector_index_norm);
    }

    #[test]
    fn lookups() {
        let e = lookup(SimpleGroupId::sp(4).unwrap(), SimpleGroupId::su(2).unwrap(), Some("S^3V")).unwrap();
        assert_eq!((e.dynkin_index, e.degrees_added.clone(), e.centralizer), (10, vec![4], Finite));
        let e = lookup(SimpleGroupId::g2(), SimpleGroupId::su(2).unwrap(), Some("28")).unwrap();
        assert_eq!((e.degrees_added.clone(), e.centralizer), (vec![6], Finite));
        let e = lookup(SimpleGroupId::f4(), SimpleGroupId::spin(9).unwrap(), None).unwrap();
        assert_eq!(e.degrees_removed, vec![4]);
        assert_eq!(e.quotient_name.as_deref(), Some("CaP^2"));
        assert!(lookup(SimpleGroupId::g2(), SimpleGroupId::su(2).unwrap(), None).is_err());
    }

    #[test]
    fn parameter_validation() {
        let r = rule("spin_even_over_spin_odd").unwrap();
        assert!(r.instantiate(Some(3)).is_err());
        assert!(r.instantiate(None).is_err());
        assert_eq!(r.instantiate(Some(4)).unwrap().quotient_name.as_deref(), Some("S^7"));
        assert!(rule("g2_over_su3").unwrap().instantiate(Some(1)).is_err());
    }

    #[test]
    fn every_row_satisfies_degree_identity() {
        for e in instantiate_catalog(10) {
            assert!(e.degree_identity_holds(), "{} fails the degree identity", e.rule);
        }
    }

    #[test]
    fn spin10_spin7_row_keeps_spin_descriptor() {
        let e = lookup(SimpleGroupId::spin(10).unwrap(), SimpleGroupId::spin(7).unwrap(), Some("spin rep")).unwrap();
        assert_eq!(e.hom_descriptor, "spin rep");
        assert_eq!(e.degrees_added, vec![5, 8]);
    }
}
