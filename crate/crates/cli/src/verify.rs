//! Registry of the computations behind the paper's statements. Every check
//! recomputes its value from scratch, so the order they run in is irrelevant.

use std::collections::BTreeMap;

use anyhow::{bail, ensure, Context, Result};
use biquotient::classifier::{
    finiteness_bounds, ledger, normalize_presentation, rank1_two_sided_search, rhs_search, sp4_su2squared_homs, HFactor,
    HomData, HomLink, PresentationSketch, RewriteKind, Side,
};
use biquotient::cohomology::{self, chi_pi, classifying_ring, sign_branches, GradedPolyRing, GradedQuotient};
use biquotient::constructions;
use biquotient::freeness::{brute_force_free, is_free, kernel_lattice, TwoSidedAction};
use biquotient::groups_catalog::{degrees_of, group_dimension, lookup, profile, rule, Centralizer, SimpleGroupId};
use biquotient::weights_reps::{
    chern_pullback, dynkin_index, euler_class, spin_rep, su2_homs, su2_rep_from_parts, Chirality, SourceFactor, WeightRep,
};
use biquotient::{IntMatrix, IntPoly};
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub id: &'static str,
    pub claim: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

struct Check {
    id: &'static str,
    claim: &'static str,
    run: fn() -> Result<()>,
}

macro_rules! checks {
    ($($id:literal, $claim:literal => $f:expr;)*) => {
        vec![$(Check { id: $id, claim: $claim, run: $f }),*]
    };
}

pub fn run_all() -> Vec<CheckResult> {
    registry()
        .into_iter()
        .map(|c| {
            let r = std::panic::catch_unwind(c.run).unwrap_or_else(|_| Err(anyhow::anyhow!("check panicked")));
            CheckResult { id: c.id, claim: c.claim, passed: r.is_ok(), detail: r.err().map(|e| format!("{e:#}")) }
        })
        .collect()
}

pub fn check_count() -> usize {
    registry().len()
}

fn su(n: u32) -> SimpleGroupId {
    SimpleGroupId::su(n).unwrap()
}
fn sp(n: u32) -> SimpleGroupId {
    SimpleGroupId::sp(n).unwrap()
}
fn spin(n: u32) -> SimpleGroupId {
    SimpleGroupId::spin(n).unwrap()
}
fn g2() -> SimpleGroupId {
    SimpleGroupId::g2()
}

fn hom(g: SimpleGroupId, label: &str) -> Result<WeightRep> {
    su2_homs(g)?.into_iter().find(|h| h.label.as_deref() == Some(label)).with_context(|| format!("no class {label} into {g}"))
}

fn pair(g: SimpleGroupId, l: &str, r: &str) -> Result<TwoSidedAction> {
    Ok(TwoSidedAction::from_reps(&hom(g, l)?, &hom(g, r)?)?.with_group(g))
}

fn sp4_pair(l: &str, r: &str) -> Result<TwoSidedAction> {
    let homs = sp4_su2squared_homs();
    let f = |s: &str| homs.iter().find(|h| h.label.as_deref() == Some(s)).cloned().context("unknown class");
    Ok(TwoSidedAction::from_reps(&f(l)?, &f(r)?)?.with_group(sp(4)))
}

fn sorted_degrees(g: SimpleGroupId) -> Vec<u32> {
    let mut d = degrees_of(g);
    d.sort();
    d
}

fn sorted_weights(r: &WeightRep) -> Vec<Vec<i64>> {
    r.sorted_weights()
}

fn expect_order(a: &TwoSidedAction, want: Option<i64>) -> Result<()> {
    let v = is_free(a)?;
    ensure!(v.witness_order() == want, "witness order {:?}, expected {want:?}", v.witness_order());
    Ok(())
}

fn ring(gens: &[(&str, u32)]) -> GradedPolyRing {
    GradedPolyRing::new(gens.iter().map(|(n, d)| (n.to_string(), *d)).collect()).unwrap()
}

fn vars(r: &GradedPolyRing) -> Vec<IntPoly> {
    r.vars()
}

fn pi3_of(m: &[Vec<i64>]) -> String {
    cohomology::pi3_cokernel(&IntMatrix::from_i64_rows(m[0].len(), m).unwrap()).to_string()
}

fn homogeneous(key: &str, param: Option<u32>) -> Result<PresentationSketch> {
    Ok(PresentationSketch::homogeneous(&rule(key).context("rule")?.instantiate(param)?))
}

fn free_pairs(g: SimpleGroupId) -> Result<Vec<(String, String)>> {
    let mut v: Vec<(String, String)> =
        rank1_two_sided_search(g)?.free_pairs().iter().map(|p| (p.left.clone(), p.right.clone())).collect();
    v.sort();
    v.dedup();
    Ok(v)
}

fn registry() -> Vec<Check> {
    checks! {
        "degrees-A3", "A_l : 2,3,...,l+1" => || {
            ensure!(sorted_degrees(su(4)) == vec![2, 3, 4]);
            Ok(())
        };
        "degrees-D4", "Spin(8), which has degrees 2,4,4,6" => || {
            ensure!(sorted_degrees(spin(8)) == vec![2, 4, 4, 6]);
            Ok(())
        };
        "catalog-berger", "10 | Sp(4)/SU(2) | 4" => || {
            let e = lookup(sp(4), su(2), Some("S^3V"))?;
            ensure!(e.dynkin_index == 10 && e.degrees_added == vec![4] && e.centralizer == Centralizer::Finite, "{e:?}");
            Ok(())
        };
        "catalog-g2-so3-28", "28 | G_2/SO(3) | 6" => || {
            let e = lookup(g2(), su(2), Some("28"))?;
            ensure!(e.degrees_added == vec![6] && e.centralizer == Centralizer::Finite, "{e:?}");
            Ok(())
        };
        "catalog-cayley-plane", "1 | F_4/Spin(9)=CaP^2 | 12 | 4" => || {
            let e = lookup(SimpleGroupId::f4(), spin(9), None)?;
            ensure!(e.degrees_added == vec![12] && e.degrees_removed == vec![4], "{e:?}");
            ensure!(e.quotient_name.as_deref() == Some("CaP^2"));
            Ok(())
        };
        "weights-w28", "W_28 : (x^-6,x^-4,x^-2,1,x^2,x^4,x^6)" => || {
            let w: Vec<i64> = sorted_weights(&hom(g2(), "W28")?).into_iter().map(|w| w[0]).collect();
            ensure!(w == vec![-6, -4, -2, 0, 2, 4, 6], "{w:?}");
            Ok(())
        };
        "spin9-restricted", "is a sum of spin representations of Spin(n-1)" => || {
            let mut both = spin_rep(8, Some(Chirality::Minus))?.weights;
            both.extend(spin_rep(8, Some(Chirality::Plus))?.weights);
            both.sort();
            let mut nine = spin_rep(9, None)?.weights;
            nine.sort();
            ensure!(nine == both);
            Ok(())
        };
        "spin8-on-circle", "the direct sum of 4 copies of the standard 2-dimensional real representation" => || {
            let r = spin_rep(8, Some(Chirality::Minus))?.restrict(&[vec![2, 0, 0, 0]])?;
            let w: Vec<i64> = r.sorted_weights().into_iter().map(|w| w[0]).collect();
            ensure!(r.lattice.scale == 1 && w == vec![-1, -1, -1, -1, 1, 1, 1, 1], "{r}");
            Ok(())
        };
        "realify-v3", "(V_3)_R : SU(2) -> SO(4) ... natural real faithful representation" => || {
            let v = su2_rep_from_parts(&[1]);
            ensure!(v.realify()?.sorted_weights() == v.sum(&v)?.sorted_weights());
            Ok(())
        };
        "tensor-w12", "W_12 : SU(2)^2 -> SO(4) be the natural double covering" => || {
            let v = su2_rep_from_parts(&[1]);
            let w = v.embed(0, 2)?.tensor(&v.embed(1, 2)?)?;
            ensure!(w.sorted_weights() == vec![vec![-1, -1], vec![-1, 1], vec![1, -1], vec![1, 1]]);
            Ok(())
        };
        "index-s3v", "S^3V, which has Dynkin index 10" => || {
            ensure!(dynkin_index(&hom(sp(4), "S^3V")?, profile(sp(4)).vector_index_norm as i64)? == 10);
            Ok(())
        };
        "index-sp4-small", "V+V ... has Dynkin index 2" => || {
            let n = profile(sp(4)).vector_index_norm as i64;
            ensure!(dynkin_index(&hom(sp(4), "V+V")?, n)? == 2 && dynkin_index(&hom(sp(4), "V+C^2")?, n)? == 1);
            Ok(())
        };
        "index-w28", "which we identify by their Dynkin index, 1, 3, 4, or 28" => || {
            let n = profile(g2()).vector_index_norm as i64;
            let got: Vec<i64> = su2_homs(g2())?.iter().map(|h| dynkin_index(h, n)).collect::<biquotient::Result<_>>()?;
            ensure!(got == vec![1, 3, 4, 28], "{got:?}");
            Ok(())
        };
        "su2-into-sp4", "V+C^2, V^2, and S^3V" => || {
            let l: Vec<String> = su2_homs(sp(4))?.into_iter().filter_map(|h| h.label).collect();
            ensure!(l == vec!["V+C^2", "V+V", "S^3V"], "{l:?}");
            Ok(())
        };
        "su2-into-su3", "two conjugacy classes of nontrivial homomorphisms SU(2)->SU(3), V+C and S^2V" => || {
            let l: Vec<String> = su2_homs(su(3))?.into_iter().filter_map(|h| h.label).collect();
            ensure!(l == vec!["V+C", "S^2V"], "{l:?}");
            Ok(())
        };
        "su2-into-g2", "composed representation SU(2)->G_2->U(7) must be" => || {
            let want: BTreeMap<&str, Vec<u32>> =
                BTreeMap::from([("W1", vec![1, 1, 0, 0, 0]), ("W3", vec![2, 1, 1]), ("W4", vec![2, 2, 0]), ("W28", vec![6])]);
            for (label, parts) in want {
                let w = hom(g2(), label)?;
                ensure!(w.sorted_weights() == su2_rep_from_parts(&parts).sorted_weights(), "{label}: {w}");
            }
            Ok(())
        };
        "chern-c2", "to -z_1-z_2 and z_1z_2" => || {
            let h = [SourceFactor::Su2; 2];
            let rep = su2_rep_from_parts(&[1]).embed(0, 2)?.sum(&su2_rep_from_parts(&[1]).embed(1, 2)?)?;
            let r = classifying_ring(&h);
            let z = vars(&r);
            ensure!(chern_pullback(&rep, 2, &h)? == -(&z[0] + &z[1]));
            ensure!(chern_pullback(&rep, 4, &h)? == &z[0] * &z[1]);
            Ok(())
        };
        "chern-s3v", "c_2(S^3V_3)=10c_2V_3" => || {
            let h = [SourceFactor::Su2];
            let s3 = chern_pullback(&su2_rep_from_parts(&[3]), 2, &h)?;
            let v = chern_pullback(&su2_rep_from_parts(&[1]), 2, &h)?;
            ensure!(s3 == v.scale(&10.into()), "{s3:?}");
            Ok(())
        };
        "euler-cp-hp", "have Euler classes (-z)x and (x^2-z)^{2e+1}" => || {
            let h = [SourceFactor::Circle, SourceFactor::Su2];
            let (s5, big) = constructions::cp_sum_hp(1)?;
            let r = classifying_ring(&h);
            let (x, z) = (r.var("x")?, r.var("z")?);
            ensure!(euler_class(&s5, &h)?.0 == -(&z * &x));
            ensure!(euler_class(&big, &h)?.0 == (&(&x * &x) - &z).pow(3));
            Ok(())
        };
        "euler-hp-hp", "is +-(-z_3)^{n-1}(-z_1+z_2)" => || {
            let h = [SourceFactor::Su2; 3];
            let r = classifying_ring(&h);
            let z = vars(&r);
            for n in 2..=4u32 {
                let (_, _, s) = constructions::hp_sum_hp(n as usize)?;
                let (e, determined) = euler_class(&s, &h)?;
                let want = &(-&z[2]).pow(n - 1) * &(&z[1] - &z[0]);
                ensure!(!determined && (e == want || e == -&want), "n = {n}: {}", r.display(&e));
            }
            Ok(())
        };
        "kernel-t2", "this action of (S^1)^2 on S^3 x S^{2n-1} is free" => || {
            for n in 2..=6 {
                let k = kernel_lattice(&constructions::cp_sum_cp_action(n)?)?;
                ensure!(k.index() == Some(1), "n = {n}: kernel lattice {k}");
            }
            Ok(())
        };
        "free-gromoll-meyer", "Gromoll and Meyer showed that SU(2) acts freely on Sp(4)" => || {
            expect_order(&pair(sp(4), "V+C^2", "V+V")?, None)
        };
        "witness-s3v-vc2", "the images of the diagonal matrix (zeta_3, zeta_3^-1) in SU(2) under S^3V and V+C^2 are conjugate" => || {
            expect_order(&pair(sp(4), "S^3V", "V+C^2")?, Some(3))
        };
        "free-g2-w3-w4", "So this is a free action of SU(2) on G_2" => || {
            expect_order(&pair(g2(), "W3", "W4")?, None)
        };
        "witness-g2-w3-w28", "(W_3,W_28) : x=zeta_5" => || {
            expect_order(&pair(g2(), "W3", "W28")?, Some(5))
        };
        "free-cp-hp", "S^1 x SU(2) acts freely on S^5 x S^{8e+3}" => || {
            for e in 1..=3 {
                expect_order(&constructions::cp_sum_hp_action(e)?, None).with_context(|| format!("e = {e}"))?;
            }
            Ok(())
        };
        "brute-s3v-vv", "images ... under S^3V and V^2 are conjugate" => || {
            let b = brute_force_free(&pair(sp(4), "S^3V", "V+V")?, 12)?;
            ensure!(b.witness_order() == Some(4), "{b:?}");
            Ok(())
        };
        "brute-su3", "conjugate to (zeta_3,1,zeta_3^-1)" => || {
            let b = brute_force_free(&pair(su(3), "V+C", "S^2V")?, 6)?;
            ensure!(b.witness_order() == Some(3), "{b:?}");
            Ok(())
        };
        "ring-bt2", "cohomology ring Z[u,v] with u and v in H^2" => || {
            let r = classifying_ring(&[SourceFactor::Circle; 2]);
            ensure!(r.names() == vec!["u", "v"] && r.degrees() == vec![2, 2]);
            Ok(())
        };
        "ring-bsu2-cubed", "generators in H^4 of the polynomial ring H*(BSU(2)^3,Z)" => || {
            let r = classifying_ring(&[SourceFactor::Su2; 3]);
            ensure!(r.names() == vec!["z1", "z2", "z3"] && r.degrees() == vec![4, 4, 4]);
            Ok(())
        };
        "ring-sp4-su2-cubed", "Z[z_1,z_2,z_3]/(z_1+z_2=z_3, z_1z_2=0)" => || {
            let q = constructions::sp4_su2_cubed_ring()?;
            let r = q.ring().clone();
            let z = vars(&r);
            let want = GradedQuotient::new(r, vec![&(&z[0] + &z[1]) - &z[2], &z[0] * &z[1]])?;
            ensure!(q.same_ideal(&want), "{:?}", q.display_relations());
            Ok(())
        };
        "s8-sign", "takes y=c_2V to -x^2 and chi(S^-) to +-x^4" => || {
            // Z[chi, y] -> Z[x]: (chi + y^2)^2 vanishes for one sign only
            let r = ring(&[("chi", 8), ("y", 4)]);
            let v = vars(&r);
            let rel = (&v[0] + &(&v[1] * &v[1])).pow(2);
            let x = ring(&[("x", 2)]).vars().remove(0);
            let lift = |p: &IntPoly| p.clone();
            let b = sign_branches(&rel, &[lift(&x.pow(4)), -x.pow(2)], 0)?;
            let holds: Vec<i64> = b.iter().filter(|b| b.relation_holds).map(|b| b.sign).collect();
            ensure!(holds == vec![-1], "relation holds for signs {holds:?}");
            Ok(())
        };
        "ring-cp-cp", "are uv and (u-v)(u+v)^{n-1}" => || {
            for n in 2..=6usize {
                let q = constructions::cp_sum_cp_ring(n)?;
                let r = q.ring().clone();
                let (u, v) = (r.var("u")?, r.var("v")?);
                let want = GradedQuotient::new(r, vec![&u * &v, &(&u - &v) * &(&u + &v).pow(n as u32 - 1)])?;
                ensure!(q.same_ideal(&want), "n = {n}");
                let betti: Vec<usize> = (0..=2 * n).map(|d| if d == 0 || d == 2 * n { 1 } else if d % 2 == 0 { 2 } else { 0 }).collect();
                ensure!(q.betti(2 * n as u32) == betti, "n = {n}: {:?}", q.betti(2 * n as u32));
            }
            Ok(())
        };
        "ring-cp-hp", "Z[x,z]/(xz=0,x^{4e+2}=z^{2e+1})" => || {
            for e in 1..=3u32 {
                let q = constructions::cp_sum_hp_ring(e as usize)?;
                let r = q.ring().clone();
                let (x, z) = (r.var("x")?, r.var("z")?);
                let want = GradedQuotient::new(r, vec![&x * &z, &x.pow(4 * e + 2) - &z.pow(2 * e + 1)])?;
                ensure!(q.same_ideal(&want), "e = {e}: {:?}", q.display_relations());
            }
            Ok(())
        };
        "pi3-berger", "isomorphic to Z/10" => || {
            ensure!(pi3_of(&[vec![10]]) == "Z/10");
            Ok(())
        };
        "pi3-g2-w3-w4", "has pi_3M=0" => || {
            ensure!(pi3_of(&[vec![3 - 4]]) == "0");
            Ok(())
        };
        "pi3-g2-so3", "isomorphic to Z/4 or Z/28" => || {
            ensure!(pi3_of(&[vec![4]]) == "Z/4" && pi3_of(&[vec![28]]) == "Z/28");
            Ok(())
        };
        "chi-pi-rank-excess", "has rank 1 greater than the second factor" => || {
            // H_2 x H_3 = SU(7) x Sp(4) acting on G_2 = SU(8)
            let h: Vec<u32> = [su(7), sp(4)].iter().flat_map(|g| degrees_of(*g)).map(|d| 2 * d).collect();
            let g: Vec<u32> = degrees_of(su(8)).iter().map(|d| 2 * d - 1).collect();
            let c = chi_pi(&h, &g);
            ensure!(c > 0, "chi_pi = {c}");
            Ok(())
        };
        "collapse-doubled-group", "M = (G/Z(G))\\((G x G)/Z(G))/H" => || {
            let g = sp(4);
            let phi1 = HomData::Catalog { rule: "sp_over_sp".into(), param: Some(2) };
            let phi2 = HomData::Catalog { rule: "sp4_over_su2_index2".into(), param: None };
            let p = PresentationSketch {
                g_factors: vec![g, g],
                h_factors: vec![HFactor::Simple(g), HFactor::Simple(su(2))],
                homs: vec![
                    HomLink { h: 0, g: 0, side: Side::Left, hom: HomData::Identity },
                    HomLink { h: 0, g: 1, side: Side::Left, hom: HomData::Identity },
                    HomLink { h: 1, g: 0, side: Side::Right, hom: phi1.clone() },
                    HomLink { h: 1, g: 1, side: Side::Right, hom: phi2.clone() },
                ],
            };
            let n = normalize_presentation(&p)?.presentation;
            ensure!(n.g_factors == vec![g] && n.h_factors == vec![HFactor::Simple(su(2))], "{}", n.display());
            ensure!(n.link(0, 0, Side::Left) == &phi1 && n.link(0, 0, Side::Right) == &phi2, "{}", n.display());
            Ok(())
        };
        "transitive-su3-s5", "any nontrivial action of SU(3) on S^5 ... is transitive" => || {
            let p = PresentationSketch {
                g_factors: vec![spin(6)],
                h_factors: vec![HFactor::Simple(spin(5)), HFactor::Simple(su(3))],
                homs: vec![
                    HomLink { h: 0, g: 0, side: Side::Left, hom: HomData::Catalog { rule: "su_even_over_sp".into(), param: Some(2) } },
                    HomLink { h: 1, g: 0, side: Side::Right, hom: HomData::Catalog { rule: "su_over_su".into(), param: Some(4) } },
                ],
            };
            let n = normalize_presentation(&p)?;
            ensure!(n.trace.iter().any(|s| s.kind == RewriteKind::TransitiveFlag), "{:?}", n.trace);
            Ok(())
        };
        "ledger-berger", "10 | Sp(4)/SU(2) | 4" => || {
            let l = ledger(&homogeneous("sp4_over_su2_berger", None)?)?;
            ensure!(l.net() == BTreeMap::from([(4, 1)]) && l.pi3.to_string() == "Z/10", "{l:?}");
            Ok(())
        };
        "ledger-cayley-plane", "1 | F_4/Spin(9)=CaP^2 | 12 | 4" => || {
            let l = ledger(&homogeneous("f4_over_spin9", None)?)?;
            ensure!(l.net() == BTreeMap::from([(4, -1), (12, 1)]), "{:?}", l.net());
            Ok(())
        };
        "ledger-transpose", "contributes degrees 2,4,6,...,2n" => || {
            for n in 1..=4u32 {
                let g = su(2 * n + 1);
                let p = PresentationSketch {
                    g_factors: vec![g],
                    h_factors: vec![HFactor::Simple(g)],
                    homs: vec![
                        HomLink { h: 0, g: 0, side: Side::Left, hom: HomData::Identity },
                        HomLink { h: 0, g: 0, side: Side::Right, hom: HomData::OuterTranspose },
                    ],
                };
                let l = ledger(&p)?;
                let want: BTreeMap<u32, u32> = (1..=n).map(|k| (2 * k, 1)).collect();
                ensure!(l.contributed == want, "n = {n}: {:?}", l.contributed);
            }
            Ok(())
        };
        "rhs-gromoll-meyer", "the Gromoll-Meyer exotic 7-sphere which is a biquotient Sp(4)/SU(2)" => || {
            let e = rhs_search(16)?;
            ensure!(e.iter().any(|e| e.label == "Sp(4)/SU(2) [(V+C^2, V+V)]" && e.dimension == 7 && e.pi3 == "0"));
            Ok(())
        };
        "rhs-g2-su2", "a certain 4-connected 11-manifold" => || {
            let e = rhs_search(16)?;
            ensure!(e.iter().any(|e| e.label == "G2/SU(2) [(W3, W4)]" && e.dimension == 11 && e.pi3 == "0"));
            Ok(())
        };
        "rhs-homogeneous", "the Wu 5-manifold SU(3)/SO(3)" => || {
            let e = rhs_search(16)?;
            let has = |label: &str, pi3: &str| e.iter().any(|e| e.label == label && e.pi3 == pi3);
            ensure!(has("SU(3)/SO(3) [S^2V]", "Z/4"), "Wu manifold missing");
            ensure!(has("Sp(4)/SU(2) [S^3V]", "Z/10"), "Berger manifold missing");
            ensure!(has("G2/SU(2) [W3]", "Z/3") && has("G2/SO(3) [W4]", "Z/4") && has("G2/SO(3) [W28]", "Z/28"));
            for n in 2..=16 {
                ensure!(e.iter().any(|e| e.label == format!("S^{n}")), "S^{n} missing");
            }
            for n in [4, 6, 8] {
                ensure!(e.iter().any(|e| e.label == format!("UT(S^{n})")), "UT(S^{n}) missing");
            }
            Ok(())
        };
        "rank1-su3", "the case G=SU(3) does not occur" => || {
            ensure!(free_pairs(su(3))?.is_empty());
            Ok(())
        };
        "rank1-sp4", "given by the homomorphisms (V+C^2, V^2)" => || {
            ensure!(free_pairs(sp(4))? == vec![("V+C^2".to_string(), "V+V".to_string())]);
            Ok(())
        };
        "rank1-g2", "(W_1,W_3): x=-1 ... (W_4,W_28): x=zeta_3" => || {
            ensure!(free_pairs(g2())? == vec![("W3".to_string(), "W4".to_string())]);
            let want = BTreeMap::from([("W1W3", 2), ("W1W4", 3), ("W1W28", 3), ("W3W28", 5), ("W4W28", 3)]);
            for (k, order) in want {
                let (l, r) = k.split_at(2);
                let v = is_free(&pair(g2(), l, r)?)?;
                ensure!(v.witness_order() == Some(order), "({l}, {r}): {:?}", v.witness_order());
            }
            Ok(())
        };
        "finite-degree-bound", "at most 2n" => || {
            ensure!(finiteness_bounds(7)?.max_degree == 14);
            Ok(())
        };
        "sp4-su2sq-first", "(V_1+V_2, C^4)" => || {
            expect_order(&sp4_pair("V1+V2", "C^4")?, None)
        };
        "sp4-su2sq-second", "(V_1+C^2, V_2^2)" => || {
            expect_order(&sp4_pair("V1+C^2", "V2+V2")?, None)
        };
        "cli-free-check", "the quotient manifold is an exotic 7-sphere" => || {
            let a = pair(sp(4), "V+C^2", "V+V")?;
            let text = serde_json::to_string(&a)?;
            let cli = crate::Cli {
                format: crate::Format::Json,
                command: crate::Command::FreeCheck(crate::FreeCheckArgs { input: text, oracle_order: 12 }),
            };
            let out = crate::run(&cli);
            ensure!(out.code == 0 && out.json["verdict"]["verdict"] == "free", "{}", out.table);
            Ok(())
        };
        "cli-pi3", "isomorphic to Z/10" => || {
            let cli = crate::Cli {
                format: crate::Format::Table,
                command: crate::Command::Pi3(crate::InputArgs { input: "[[10]]".into() }),
            };
            let out = crate::run(&cli);
            ensure!(out.code == 0 && out.table.trim() == "Z/10", "{}", out.table);
            Ok(())
        };
        "dimension-identity", "A_l : 2,3,...,l+1" => || {
            for g in [su(5), sp(6), spin(9), spin(10), g2(), SimpleGroupId::f4(), SimpleGroupId::e8()] {
                let s: u32 = degrees_of(g).iter().map(|d| 2 * d - 1).sum();
                if s != group_dimension(g) {
                    bail!("{g}: {s} != {}", group_dimension(g));
                }
            }
            Ok(())
        };
    }
}
