//! The `biquo` command line: argument parsing, input schemas and dispatch.

use std::fmt::Write as _;
use std::path::Path;

use biquotient::classifier::{self, PresentationSketch};
use biquotient::cohomology::{self, ideal_identities, poly_from_json, GradedPolyRing, GradedQuotient, QuotientJson, TermJson};
use biquotient::constructions;
use biquotient::freeness::{brute_force_free, is_free, BruteVerdict, TwoSidedAction, Verdict};
use biquotient::groups_catalog::{self, instantiate_catalog, profile, rule, CatalogEntry, SimpleGroupId};
use biquotient::weights_reps::{dynkin_index, su2_homs, su2_rep_from_parts, WeightRep};
use biquotient::IntMatrix;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

pub mod verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_SCHEMA: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "biquo", version, about = "Biquotients of compact Lie groups: freeness, cohomology and rational homotopy")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List homogeneous catalog rows, or look one up.
    Catalog(CatalogArgs),
    /// Dynkin index of a homomorphism into a simple group.
    Index(InputArgs),
    /// Decide whether a two-sided torus action is free.
    FreeCheck(FreeCheckArgs),
    /// Betti numbers and identities in a graded quotient ring.
    Cohomology(CohomologyArgs),
    /// pi_3 from an index matrix or a presentation.
    Pi3(InputArgs),
    /// Biquotients with the rational homology of a sphere.
    SearchRhs(SearchRhsArgs),
    /// Two-sided SU(2) actions on a rank-2 group.
    SearchRank1(SearchRank1Args),
    /// Re-run every computation the paper's results rest on.
    VerifyPaper,
}

#[derive(Args, Debug)]
pub struct InputArgs {
    /// JSON file, or inline JSON text.
    #[arg(long)]
    pub input: String,
}

#[derive(Args, Debug)]
pub struct CatalogArgs {
    /// Largest family parameter to instantiate.
    #[arg(long, default_value_t = 6)]
    pub max_param: u32,
    /// Only this rule.
    #[arg(long)]
    pub rule: Option<String>,
    /// Look up G/H (with --h).
    #[arg(long, requires = "h")]
    pub g: Option<String>,
    #[arg(long, requires = "g")]
    pub h: Option<String>,
    /// Descriptor or index to pick between rows with the same G and H.
    #[arg(long)]
    pub descriptor: Option<String>,
}

#[derive(Args, Debug)]
pub struct FreeCheckArgs {
    #[arg(long)]
    pub input: String,
    /// Cross-check against direct evaluation up to this order (0 skips).
    #[arg(long, default_value_t = 24)]
    pub oracle_order: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    CpSumCp,
    CpSumHp,
    HpSumHp,
    Sp4Su2Cubed,
}

#[derive(Args, Debug)]
pub struct CohomologyArgs {
    /// Ring file or inline JSON; see the README for the schema.
    #[arg(long, conflicts_with = "preset", required_unless_present = "preset")]
    pub input: Option<String>,
    /// A built-in ring instead of --input.
    #[arg(long, value_enum)]
    pub preset: Option<Preset>,
    /// Parameter of the preset (n or e).
    #[arg(long, default_value_t = 2)]
    pub n: usize,
}

#[derive(Args, Debug)]
pub struct SearchRhsArgs {
    #[arg(long, default_value_t = 16)]
    pub max_dim: u32,
}

#[derive(Args, Debug)]
pub struct SearchRank1Args {
    /// SU(3), Sp(4) or G2; all three when omitted.
    #[arg(long)]
    pub group: Option<String>,
}

/// What a command produced.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub table: String,
    pub json: Value,
}

impl Outcome {
    fn ok(table: String, json: Value) -> Self {
        Outcome { code: EXIT_OK, table, json }
    }

    fn fail(code: i32, message: String) -> Self {
        let kind = match code {
            EXIT_SCHEMA => "schema",
            EXIT_INCONSISTENT => "inconsistent",
            _ => "error",
        };
        Outcome { code, table: format!("error: {message}\n"), json: json!({ "error": kind, "message": message }) }
    }

    pub fn render(&self, f: Format) -> String {
        match f {
            Format::Table => self.table.clone(),
            Format::Json => serde_json::to_string_pretty(&self.json).unwrap() + "\n",
        }
    }
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn schema(m: impl Into<String>) -> Self {
        Failure { code: EXIT_SCHEMA, message: m.into() }
    }
}

impl From<biquotient::Error> for Failure {
    fn from(e: biquotient::Error) -> Self {
        let code = match e {
            biquotient::Error::Inconsistent(_) => EXIT_INCONSISTENT,
            biquotient::Error::InvalidAction(_)
            | biquotient::Error::InvalidRep(_)
            | biquotient::Error::InvalidGroup(_)
            | biquotient::Error::Dimension(_)
            | biquotient::Error::Inhomogeneous(_) => EXIT_SCHEMA,
            _ => EXIT_ERROR,
        };
        Failure { code, message: e.to_string() }
    }
}

type Res<T> = std::result::Result<T, Failure>;

/// Reads `--input`: inline JSON when it starts with `{` or `[`, else a path.
pub fn read_input(arg: &str) -> Res<String> {
    let t = arg.trim_start();
    if t.starts_with('{') || t.starts_with('[') {
        return Ok(arg.to_string());
    }
    std::fs::read_to_string(Path::new(arg)).map_err(|e| Failure { code: EXIT_ERROR, message: format!("cannot read {arg}: {e}") })
}

/// Parses JSON, reporting the path of the offending field.
pub fn parse<T: DeserializeOwned>(text: &str) -> Res<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let at = if path == "." { "input".to_string() } else { path };
        Failure::schema(format!("{at}: {}", e.into_inner()))
    })
}

/// A group given by name (`"Sp(4)"`) or as `{"family": "C", "rank": 2}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Name(String),
    Id(SimpleGroupId),
}

impl GroupSpec {
    pub fn resolve(&self) -> Res<SimpleGroupId> {
        match self {
            GroupSpec::Name(s) => s.parse().map_err(|e: biquotient::Error| Failure::schema(format!("target: {e}"))),
            GroupSpec::Id(g) => Ok(*g),
        }
    }
}

fn group_arg(s: &str, field: &str) -> Res<SimpleGroupId> {
    s.parse().map_err(|e: biquotient::Error| Failure::schema(format!("{field}: {e}")))
}

pub fn run(cli: &Cli) -> Outcome {
    let r = match &cli.command {
        Command::Catalog(a) => catalog(a),
        Command::Index(a) => index(a),
        Command::FreeCheck(a) => free_check(a),
        Command::Cohomology(a) => cohomology_cmd(a),
        Command::Pi3(a) => pi3(a),
        Command::SearchRhs(a) => search_rhs(a),
        Command::SearchRank1(a) => search_rank1(a),
        Command::VerifyPaper => Ok(verify_paper()),
    };
    r.unwrap_or_else(|f| Outcome::fail(f.code, f.message))
}

fn catalog_row(e: &CatalogEntry) -> String {
    format!(
        "{:<34} {:>5}  +{:<14} -{:<8} {}\n",
        e.label(),
        e.dynkin_index,
        format!("{:?}", e.degrees_added),
        format!("{:?}", e.degrees_removed),
        e.rule
    )
}

fn catalog(a: &CatalogArgs) -> Res<Outcome> {
    let rows: Vec<CatalogEntry> = if let (Some(g), Some(h)) = (&a.g, &a.h) {
        vec![groups_catalog::lookup(group_arg(g, "g")?, group_arg(h, "h")?, a.descriptor.as_deref())?]
    } else {
        let all = instantiate_catalog(a.max_param);
        match &a.rule {
            Some(r) => {
                if rule(r).is_none() {
                    return Err(Failure::schema(format!("rule: unknown catalog rule {r:?}")));
                }
                all.into_iter().filter(|e| &e.rule == r).collect()
            }
            None => all,
        }
    };
    let mut t = format!("{:<34} {:>5}  {:<15} {:<9} {}\n", "space", "index", "added", "removed", "rule");
    for e in &rows {
        t.push_str(&catalog_row(e));
    }
    Ok(Outcome::ok(t, serde_json::to_value(&rows).unwrap()))
}

/// Input of `index`.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IndexRequest {
    pub target: GroupSpec,
    /// Weights of the composed rep on the source torus.
    #[serde(default)]
    pub rep: Option<WeightRep>,
    /// An SU(2) rep as a list of Sym exponents, e.g. `[3]` for S^3V.
    #[serde(default)]
    pub su2_parts: Option<Vec<u32>>,
}

fn index(a: &InputArgs) -> Res<Outcome> {
    let req: IndexRequest = parse(&read_input(&a.input)?)?;
    let g = req.target.resolve()?;
    let norm = profile(g).vector_index_norm as i64;
    let rep = match (req.rep, req.su2_parts) {
        (Some(_), Some(_)) => return Err(Failure::schema("input: give rep or su2_parts, not both")),
        (Some(r), None) => Some(r),
        (None, Some(p)) => Some(su2_rep_from_parts(&p)),
        (None, None) => None,
    };
    match rep {
        Some(rep) => {
            let i = dynkin_index(&rep, norm)?;
            Ok(Outcome::ok(format!("{i}\n"), json!({ "target": g.name(), "dynkin_index": i })))
        }
        None => {
            // every SU(2) class
            let homs = su2_homs(g)?;
            let mut t = String::new();
            let mut js = Vec::new();
            for h in &homs {
                let i = dynkin_index(h, norm)?;
                let label = h.label.clone().unwrap_or_default();
                writeln!(t, "{label:<12} {i}").unwrap();
                js.push(json!({ "label": label, "dynkin_index": i, "weights": h.weights }));
            }
            Ok(Outcome::ok(t, json!({ "target": g.name(), "su2_homs": js })))
        }
    }
}

/// Does the oracle contradict the lattice verdict?
pub fn oracle_disagrees(v: &Verdict, b: &BruteVerdict) -> Option<String> {
    match (v, b) {
        (Verdict::NotFree(c), BruteVerdict::NotFree { witness, order }) => {
            (c.order != *order || c.witness != *witness)
                .then(|| format!("lattice witness {} of order {}, direct witness {} of order {}", c.witness, c.order, witness, order))
        }
        (Verdict::Free, BruteVerdict::NotFree { witness, order }) => {
            Some(format!("lattice method says free, direct evaluation found {witness} of order {order}"))
        }
        (Verdict::NotFree(c), BruteVerdict::NoWitnessUpTo { max_order, exhaustive: true }) if c.order <= *max_order => {
            Some(format!("lattice witness of order {} not confirmed by exhaustive search", c.order))
        }
        _ => None,
    }
}

fn verdict_text(v: &Verdict) -> String {
    match v {
        Verdict::Free => "Free\n".into(),
        Verdict::NotFree(c) => {
            let mut s = format!("NotFree\nwitness  {}\norder    {}\nchoice   {}\n", c.witness, c.order, classifier::describe_choice(&c.choice));
            if c.d_family_caveat {
                s.push_str("note     a Spin(2n) factor is present: matching eigenvalues only give conjugacy in SO(2n)\n");
            }
            s
        }
    }
}

fn free_check(a: &FreeCheckArgs) -> Res<Outcome> {
    let action: TwoSidedAction = parse(&read_input(&a.input)?)?;
    action.validate().map_err(|e| Failure::schema(e.to_string()))?;
    let v = is_free(&action)?;
    let mut t = verdict_text(&v);
    let mut js = json!({ "verdict": v, "action": action });
    if a.oracle_order > 0 {
        let b = brute_force_free(&action, a.oracle_order)?;
        if let Some(msg) = oracle_disagrees(&v, &b) {
            return Err(Failure { code: EXIT_INCONSISTENT, message: msg });
        }
        writeln!(t, "oracle   agrees up to order {}", a.oracle_order).unwrap();
        js["oracle"] = serde_json::to_value(&b).unwrap();
    }
    Ok(Outcome::ok(t, js))
}

/// An identity `lhs = rhs` to certify in the quotient.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdentityJson {
    pub lhs: Vec<TermJson>,
    pub rhs: Vec<TermJson>,
}

/// Input of `cohomology`.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CohomologyRequest {
    pub generators: GradedPolyRing,
    pub relations: Vec<Vec<TermJson>>,
    #[serde(default)]
    pub max_degree: Option<u32>,
    #[serde(default)]
    pub identities: Vec<IdentityJson>,
    /// Generators to eliminate before reporting.
    #[serde(default)]
    pub eliminate: Vec<String>,
}

fn preset_ring(p: Preset, n: usize) -> Res<GradedQuotient> {
    Ok(match p {
        Preset::CpSumCp => constructions::cp_sum_cp_ring(n)?,
        Preset::CpSumHp => constructions::cp_sum_hp_ring(n)?,
        Preset::HpSumHp => constructions::hp_sum_hp_ring(n)?,
        Preset::Sp4Su2Cubed => constructions::sp4_su2_cubed_ring()?,
    })
}

fn cohomology_cmd(a: &CohomologyArgs) -> Res<Outcome> {
    let (mut q, max, ids, elim) = match (&a.input, a.preset) {
        (Some(i), _) => {
            let req: CohomologyRequest = parse(&read_input(i)?)?;
            let q = QuotientJson { generators: req.generators.clone(), relations: req.relations.clone() }.build().map_err(|e| Failure::schema(e.to_string()))?;
            (q, req.max_degree, req.identities, req.eliminate)
        }
        (None, Some(p)) => (preset_ring(p, a.n)?, None, Vec::new(), Vec::new()),
        (None, None) => return Err(Failure::schema("give --input or --preset")),
    };
    for name in &elim {
        q = q.eliminate(name)?;
    }
    let top = q.top_degree();
    let max = max.or(top).unwrap_or(16);
    let betti = q.betti(max);
    let ring = q.ring().clone();
    let mut t = String::new();
    let gens: Vec<String> = ring.names().iter().zip(ring.degrees()).map(|(n, d)| format!("{n} ({d})")).collect();
    writeln!(t, "ring      Z[{}]", gens.join(", ")).unwrap();
    writeln!(t, "relations {}", q.display_relations().join(", ")).unwrap();
    let nonzero: Vec<String> = betti.iter().enumerate().filter(|(_, b)| **b > 0).map(|(d, b)| format!("b{d}={b}")).collect();
    writeln!(t, "betti     {}", nonzero.join(" ")).unwrap();
    match top {
        Some(d) => writeln!(t, "top       {d} (Poincare symmetric: {})", q.is_poincare_symmetric()).unwrap(),
        None => writeln!(t, "top       none: the quotient is infinite dimensional").unwrap(),
    }
    let mut certs = Vec::new();
    for (i, id) in ids.iter().enumerate() {
        let at = |e: biquotient::Error| Failure::schema(format!("identities[{i}]: {e}"));
        let lhs = poly_from_json(&ring, &id.lhs).map_err(at)?;
        let rhs = poly_from_json(&ring, &id.rhs).map_err(at)?;
        let c = ideal_identities(&q, &lhs, &rhs)?;
        writeln!(t, "identity  {} = {}: {}", ring.display(&lhs), ring.display(&rhs), if c.holds { "holds" } else { "fails" }).unwrap();
        certs.push(json!({
            "holds": c.holds,
            "integral": c.integral,
            "cofactors": c.cofactors.iter().map(cohomology::rat_poly_to_json).collect::<Vec<_>>(),
            "remainder": cohomology::rat_poly_to_json(&c.remainder),
        }));
    }
    let js = json!({
        "generators": QuotientJson::from_quotient(&q).generators,
        "relations": QuotientJson::from_quotient(&q).relations,
        "betti": betti,
        "top_degree": top,
        "poincare_symmetric": q.is_poincare_symmetric(),
        "regular_sequence_prediction": q.regular_sequence_prediction(),
        "identities": certs,
    });
    Ok(Outcome::ok(t, js))
}

/// Input of `pi3`: an index matrix, or a presentation to build one from.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum Pi3Request {
    Matrix(Vec<Vec<i64>>),
    Wrapped { index_matrix: Vec<Vec<i64>> },
    Presentation { presentation: PresentationSketch },
}

fn pi3(a: &InputArgs) -> Res<Outcome> {
    let text = read_input(&a.input)?;
    let req: Pi3Request = serde_json::from_str(&text).map_err(|_| {
        // retry as a presentation to get a field pointer
        match parse::<PresentationWrapper>(&text) {
            Err(f) => f,
            Ok(_) => Failure::schema("input: expected an index matrix or {\"presentation\": ...}"),
        }
    })?;
    let m = match req {
        Pi3Request::Matrix(m) | Pi3Request::Wrapped { index_matrix: m } => m,
        Pi3Request::Presentation { presentation } => classifier::index_matrix(&presentation)?,
    };
    let cols = m.first().map(|r| r.len()).unwrap_or(0);
    if let Some(i) = m.iter().position(|r| r.len() != cols) {
        return Err(Failure::schema(format!("index_matrix[{i}]: rows must all have length {cols}")));
    }
    let g = cohomology::pi3_cokernel(&IntMatrix::from_i64_rows(cols, &m)?);
    Ok(Outcome::ok(format!("{g}\n"), json!({ "pi3": g.to_string(), "invariant_factors": g.invariant_factors, "index_matrix": m })))
}

#[derive(Deserialize)]
#[allow(dead_code)]
struct PresentationWrapper {
    presentation: PresentationSketch,
}

fn search_rhs(a: &SearchRhsArgs) -> Res<Outcome> {
    let entries = classifier::rhs_search(a.max_dim)?;
    let mut t = format!("{:>3}  {:<30} {:<9} {:<6} {:<6} {}\n", "dim", "space", "case", "pi3", "chi_pi", "presentation");
    for e in &entries {
        let shown = &e.presentation;
        writeln!(t, "{:>3}  {:<30} {:<9} {:<6} {:<6} {shown}", e.dimension, e.label, e.case, e.pi3, e.chi_pi).unwrap();
    }
    let labels = classifier::rhs_labels(&entries);
    writeln!(t, "{} presentations, {} distinct spaces", entries.len(), labels.len()).unwrap();
    Ok(Outcome::ok(t, json!({ "entries": entries, "labels": labels })))
}

fn search_rank1(a: &SearchRank1Args) -> Res<Outcome> {
    let groups = match &a.group {
        Some(g) => vec![group_arg(g, "group")?],
        None => vec![SimpleGroupId::su(3)?, SimpleGroupId::sp(4)?, SimpleGroupId::g2()],
    };
    let mut t = String::new();
    let mut js = Vec::new();
    for g in groups {
        let r = classifier::rank1_two_sided_search(g)?;
        writeln!(t, "{}", g.name()).unwrap();
        for p in &r.pairs {
            let v = match &p.verdict {
                Verdict::Free => "Free".to_string(),
                Verdict::NotFree(c) => format!("order {} at {}", c.order, c.witness),
            };
            let mode = if p.mode == classifier::KernelMode::So3 { "SO(3)" } else { "SU(2)" };
            let pair = format!("({}, {})", p.left, p.right);
            writeln!(t, "  {pair:<16} {mode}  {v}").unwrap();
        }
        js.push(serde_json::to_value(&r).unwrap());
    }
    Ok(Outcome::ok(t, Value::Array(js)))
}

fn verify_paper() -> Outcome {
    let results = verify::run_all();
    let mut t = String::new();
    let mut failed = 0;
    for r in &results {
        let mark = if r.passed { "PASS" } else { "FAIL" };
        writeln!(t, "[{mark}] {:<28} {}", r.id, r.claim).unwrap();
        if let Some(d) = &r.detail {
            writeln!(t, "       {d}").unwrap();
        }
        failed += (!r.passed) as usize;
    }
    writeln!(t, "{} of {} checks passed", results.len() - failed, results.len()).unwrap();
    let js = json!({ "checks": results, "passed": results.len() - failed, "failed": failed });
    Outcome { code: if failed == 0 { EXIT_OK } else { EXIT_INCONSISTENT }, table: t, json: js }
}

#[cfg(test)]
mod tests {
    use super::*;
    use biquotient::freeness::Certificate;
    use biquotient::TorusPoint;

    fn point(num: i64, den: i64) -> TorusPoint {
        serde_json::from_value(json!([format!("{num}/{den}")])).unwrap()
    }

    #[test]
    fn oracle_agreement() {
        let c = Certificate { witness: point(1, 3), order: 3, choice: vec![], d_family_caveat: false };
        let same = BruteVerdict::NotFree { witness: point(1, 3), order: 3 };
        assert!(oracle_disagrees(&Verdict::NotFree(c.clone()), &same).is_none());
        assert!(oracle_disagrees(&Verdict::Free, &same).is_some());
        let none = BruteVerdict::NoWitnessUpTo { max_order: 6, exhaustive: true };
        assert!(oracle_disagrees(&Verdict::NotFree(c.clone()), &none).is_some());
        let short = BruteVerdict::NoWitnessUpTo { max_order: 2, exhaustive: true };
        assert!(oracle_disagrees(&Verdict::NotFree(c), &short).is_none());
        assert!(oracle_disagrees(&Verdict::Free, &none).is_none());
    }

    #[test]
    fn inline_input_is_sniffed() {
        assert_eq!(read_input(" [[1]]").unwrap(), " [[1]]");
        assert!(read_input("no/such/file").is_err());
    }
}
