//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion with
//! its wall time and exits nonzero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{brute_enhanced_power_graph, brute_power_graph, cofactor_char_poly};
use num_bigint::BigInt;
use num_traits::Signed;
use powerspec::graph::verify_join_form;
use powerspec::theorem::{
    build_t1_t2, cf_elab_distance, cf_elab_product, cf_elab_times_cyclic_distance, cf_epg_dicyclic_distance,
    cf_epg_dihedral_distance, cf_epg_gpq_determinant, cf_epg_gpq_distance, cf_pg_dihedral_distance_rhs,
    check_structured_eigenvectors, join_form, middle_factor, proper_cyclic_join_form, ElabParams,
};
use powerspec::{
    char_poly, coarsest_equitable_partition, determinant, distance_matrix, distance_quotient_matrix,
    enhanced_power_graph, family_partition, make_group, power_graph, proper_power_graph, quotient_matrix,
    FamilyPartition, FiniteGroup, Graph, GraphKind, GroupFamilySpec, IntMatrix, IntPolynomial, MatrixKind,
    Partition,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const GPQ: [(u64, u64); 7] = [(2, 3), (2, 5), (2, 7), (2, 11), (3, 7), (2, 13), (3, 13)];
const ELAB_PRODUCTS: [(u64, u32, u64, u32); 6] =
    [(2, 2, 3, 1), (2, 1, 3, 2), (2, 2, 3, 2), (2, 3, 3, 1), (3, 1, 2, 2), (3, 2, 2, 1)];
const ELAB_CYCLIC: [(u64, u32, u64); 5] = [(2, 2, 3), (2, 2, 5), (2, 3, 3), (3, 2, 2), (2, 2, 7)];
const ELAB: [(u64, u32); 6] = [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)];

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn group(spec: &GroupFamilySpec) -> FiniteGroup {
    make_group(spec).expect("valid family parameters")
}

fn phi_d(g: &Graph) -> IntPolynomial {
    char_poly(&distance_matrix(g).expect("connected")).expect("square")
}

/// Brute-force graph, checked against the definitional oracle first.
fn epg(g: &FiniteGroup) -> Result<Graph, String> {
    let graph = enhanced_power_graph(g);
    ensure(graph == brute_enhanced_power_graph(g), || "enhanced power graph disagrees with oracle".into())?;
    Ok(graph)
}

fn pg(g: &FiniteGroup) -> Result<Graph, String> {
    let graph = power_graph(g);
    ensure(graph == brute_power_graph(g), || "power graph disagrees with oracle".into())?;
    Ok(graph)
}

/// Graph/partition pairs seen by criteria 1-9, for the divisibility check.
#[derive(Default)]
struct Seen {
    pairs: Vec<(String, Graph, Partition)>,
}

impl Seen {
    fn add(&mut self, what: String, graph: &Graph, part: Partition) {
        self.pairs.push((what, graph.clone(), part));
    }

    /// Records the family partition and the coarsest equitable partition.
    fn add_with_coarsest(&mut self, what: String, graph: &Graph, part: Option<Partition>) {
        if let Some(p) = part {
            self.add(format!("{what} family partition"), graph, p);
        }
        self.add(format!("{what} coarsest partition"), graph, coarsest_equitable_partition(graph));
    }
}

fn criterion_1(seen: &mut Seen) -> Check {
    for (p, q) in GPQ {
        let g = group(&GroupFamilySpec::Gpq { p, q });
        let graph = epg(&g)?;
        let brute = phi_d(&graph);
        let cf = cf_epg_gpq_distance(p, q).map_err(|e| e.to_string())?.expand();
        ensure(cf == brute, || format!("G_{p}{q}: closed form {cf} vs brute {brute}"))?;
        let part = family_partition(&g, FamilyPartition::GpqSylow).map_err(|e| e.to_string())?;
        seen.add_with_coarsest(format!("EPG(G_{p},{q})"), &graph, Some(part));
    }
    Ok(())
}

fn criterion_2(signs: &mut Vec<String>) -> Check {
    for (p, q) in GPQ {
        let g = group(&GroupFamilySpec::Gpq { p, q });
        let det = determinant(&distance_matrix(&epg(&g)?).unwrap()).unwrap();
        let cf = cf_epg_gpq_determinant(p, q).map_err(|e| e.to_string())?;
        ensure(det != BigInt::from(0), || format!("({p},{q}): singular"))?;
        ensure(det.abs() == cf, || format!("({p},{q}): |det| = {} vs {cf}", det.abs()))?;
        signs.push(format!("({p},{q}):{}", if det.is_negative() { "-" } else { "+" }));
    }
    Ok(())
}

fn criterion_3(seen: &mut Seen) -> Check {
    for n in 3..=16 {
        let g = group(&GroupFamilySpec::Dihedral { n });
        let graph = epg(&g)?;
        let cf = cf_epg_dihedral_distance(n).map_err(|e| e.to_string())?.expand();
        ensure(cf == phi_d(&graph), || format!("D_{}: mismatch", 2 * n))?;
        let part = family_partition(&g, FamilyPartition::Dihedral).map_err(|e| e.to_string())?;
        seen.add_with_coarsest(format!("EPG(D_{})", 2 * n), &graph, Some(part));
    }
    Ok(())
}

fn criterion_4(seen: &mut Seen) -> Check {
    for n in 3..=16 {
        let zn = group(&GroupFamilySpec::Cyclic { n });
        let pz_graph = pg(&zn)?;
        let star = proper_power_graph(&zn);
        let rhs = cf_pg_dihedral_distance_rhs(n, &phi_d(&pz_graph), &phi_d(&star));
        let g = group(&GroupFamilySpec::Dihedral { n });
        let graph = pg(&g)?;
        ensure(rhs == phi_d(&graph), || format!("P(D_{}): mismatch", 2 * n))?;
        let part = family_partition(&g, FamilyPartition::DihedralPower).map_err(|e| e.to_string())?;
        seen.add_with_coarsest(format!("P(D_{})", 2 * n), &graph, Some(part));
        let zpart = family_partition(&zn, FamilyPartition::CyclicDivisor).map_err(|e| e.to_string())?;
        seen.add_with_coarsest(format!("P(Z_{n})"), &pz_graph, Some(zpart));
        let spart = powerspec::partition::proper_cyclic_divisor_partition(n).map_err(|e| e.to_string())?;
        seen.add_with_coarsest(format!("P*(Z_{n})"), &star, Some(spart));
    }
    Ok(())
}

fn criterion_5(seen: &mut Seen) -> Check {
    for n in 3..=10 {
        let g = group(&GroupFamilySpec::Dicyclic { n });
        let graph = epg(&g)?;
        let cf = cf_epg_dicyclic_distance(n).map_err(|e| e.to_string())?.expand();
        ensure(cf == phi_d(&graph), || format!("EPG(Dic_{}): mismatch", 4 * n))?;
        let part = family_partition(&g, FamilyPartition::Dicyclic).map_err(|e| e.to_string())?;
        seen.add_with_coarsest(format!("EPG(Dic_{})", 4 * n), &graph, Some(part.clone()));
        if n == 4 || n == 8 {
            let power = pg(&g)?;
            ensure(cf == phi_d(&power), || format!("P(Dic_{}): mismatch", 4 * n))?;
            seen.add_with_coarsest(format!("P(Dic_{})", 4 * n), &power, Some(part));
        }
    }
    Ok(())
}

const KINDS: [(GraphKind, MatrixKind); 4] = [
    (GraphKind::Power, MatrixKind::Adjacency),
    (GraphKind::Power, MatrixKind::Distance),
    (GraphKind::Enhanced, MatrixKind::Adjacency),
    (GraphKind::Enhanced, MatrixKind::Distance),
];

fn product_graph(g: &FiniteGroup, kind: GraphKind) -> Result<Graph, String> {
    if kind == GraphKind::Power {
        pg(g)
    } else {
        epg(g)
    }
}

fn criterion_6(seen: &mut Seen) -> Check {
    for (p, n, q, m) in ELAB_PRODUCTS {
        let g = group(&GroupFamilySpec::elab_product(p, n, q, m));
        for (kind, matrix) in KINDS {
            let graph = product_graph(&g, kind)?;
            let mat = match matrix {
                MatrixKind::Adjacency => graph.adjacency_matrix(),
                MatrixKind::Distance => distance_matrix(&graph).unwrap(),
            };
            let brute = char_poly(&mat).unwrap();
            let cf = cf_elab_product(p, n, q, m, kind, matrix).map_err(|e| e.to_string())?.expand();
            ensure(cf == brute, || format!("({p},{n},{q},{m}) {kind:?} {matrix:?}: mismatch"))?;
            if matrix == MatrixKind::Distance {
                let what = format!("{}(El({p}^{n})xEl({q}^{m}))", kind.name());
                for which in [FamilyPartition::ElabProductCoarse, FamilyPartition::ElabProductFine] {
                    let part = family_partition(&g, which).map_err(|e| e.to_string())?;
                    seen.add(format!("{what} {}", which.name()), &graph, part);
                }
                seen.add_with_coarsest(what, &graph, None);
            }
        }
    }
    Ok(())
}

fn criterion_7() -> Check {
    for (p, n, q, m) in ELAB_PRODUCTS {
        let g = group(&GroupFamilySpec::elab_product(p, n, q, m));
        let coarse = family_partition(&g, FamilyPartition::ElabProductCoarse).unwrap();
        let fine = family_partition(&g, FamilyPartition::ElabProductFine).unwrap();
        let e = ElabParams::new(p, n, q, m).map_err(|e| e.to_string())?;
        for (kind, matrix) in KINDS {
            let graph = product_graph(&g, kind)?;
            let (t1, t2) = build_t1_t2(p, n, q, m, kind, matrix).map_err(|e| e.to_string())?;
            let quotient = |part: &Partition| match matrix {
                MatrixKind::Adjacency => quotient_matrix(&graph, part),
                MatrixKind::Distance => distance_quotient_matrix(&graph, part),
            };
            let tag = format!("({p},{n},{q},{m}) {kind:?} {matrix:?}");
            ensure(t1 == quotient(&coarse).map_err(|e| e.to_string())?, || format!("{tag}: T1 differs"))?;
            ensure(t2 == quotient(&fine).map_err(|e| e.to_string())?, || format!("{tag}: T2 differs"))?;
            let (b, c) = e.b_c(matrix);
            let rhs = [
                (char_poly(&t1).unwrap(), 1),
                (middle_factor(&e, matrix), (e.alpha - 1) * (e.beta - 1)),
                (char_poly(&b).unwrap(), e.alpha - 1),
                (char_poly(&c).unwrap(), e.beta - 1),
            ]
            .iter()
            .fold(IntPolynomial::one(), |acc, (f, k)| &acc * &f.pow(*k));
            ensure(char_poly(&t2).unwrap() == rhs, || format!("{tag}: factorization fails"))?;
        }
    }
    Ok(())
}

fn criterion_8() -> Check {
    let mut count = 0;
    for (p, n, q, m) in ELAB_PRODUCTS {
        let e = ElabParams::new(p, n, q, m).map_err(|e| e.to_string())?;
        for (kind, matrix) in KINDS {
            let check = check_structured_eigenvectors(&e, kind, matrix).map_err(|e| e.to_string())?;
            ensure(check.passed(), || format!("({p},{n},{q},{m}) {kind:?} {matrix:?}: {:?}", check.failures))?;
            count += check.checked;
        }
    }
    ensure(count > 0, || "no vectors checked".into())
}

fn criterion_9(seen: &mut Seen) -> Check {
    for (p, n, m) in ELAB_CYCLIC {
        let g = group(&GroupFamilySpec::elab_times_cyclic(p, n, m));
        let graph = epg(&g)?;
        let cf = cf_elab_times_cyclic_distance(p, n, m).map_err(|e| e.to_string())?.expand();
        ensure(cf == phi_d(&graph), || format!("El({p}^{n})xZ_{m}: mismatch"))?;
        let part = family_partition(&g, FamilyPartition::ElabTimesCyclic).map_err(|e| e.to_string())?;
        seen.add_with_coarsest(format!("EPG(El({p}^{n})xZ_{m})"), &graph, Some(part));
    }
    for (p, n) in ELAB {
        let g = group(&GroupFamilySpec::ElementaryAbelian { p, n });
        let graph = pg(&g)?;
        let cf = cf_elab_distance(p, n).map_err(|e| e.to_string())?.expand();
        ensure(cf == phi_d(&graph), || format!("El({p}^{n}): mismatch"))?;
        seen.add_with_coarsest(format!("P(El({p}^{n}))"), &graph, None);
    }
    Ok(())
}

fn criterion_10(seen: &Seen) -> Check {
    for (what, graph, part) in &seen.pairs {
        let td = distance_quotient_matrix(graph, part).map_err(|e| format!("{what}: {e}"))?;
        let full = phi_d(graph);
        full.exact_div(&char_poly(&td).unwrap()).map_err(|e| format!("{what}: {e}"))?;
    }
    ensure(!seen.pairs.is_empty(), || "no pairs recorded".into())
}

fn check_join(g: &FiniteGroup, graph: &Graph, kind: GraphKind, what: &str) -> Check {
    let (spec, part) = join_form(g, kind).map_err(|e| format!("{what}: {e}"))?;
    let ok = verify_join_form(graph, &spec, &part.flatten()).map_err(|e| format!("{what}: {e}"))?;
    ensure(ok, || format!("{what}: join form does not match"))
}

fn criterion_11() -> Check {
    for (p, q) in GPQ {
        let g = group(&GroupFamilySpec::Gpq { p, q });
        check_join(&g, &epg(&g)?, GraphKind::Enhanced, &format!("G_{p},{q}"))?;
    }
    for n in 3..=16 {
        let g = group(&GroupFamilySpec::Dihedral { n });
        check_join(&g, &epg(&g)?, GraphKind::Enhanced, &format!("D_{}", 2 * n))?;
    }
    for n in 3..=10 {
        let g = group(&GroupFamilySpec::Dicyclic { n });
        check_join(&g, &epg(&g)?, GraphKind::Enhanced, &format!("Dic_{}", 4 * n))?;
    }
    for (p, n, m) in ELAB_CYCLIC {
        let g = group(&GroupFamilySpec::elab_times_cyclic(p, n, m));
        check_join(&g, &epg(&g)?, GraphKind::Enhanced, &format!("El({p}^{n})xZ_{m}"))?;
    }
    for n in [6, 8, 12, 30] {
        let zn = group(&GroupFamilySpec::Cyclic { n });
        let (spec, part) = proper_cyclic_join_form(n).map_err(|e| e.to_string())?;
        let ok = verify_join_form(&proper_power_graph(&zn), &spec, &part.flatten()).map_err(|e| e.to_string())?;
        ensure(ok, || format!("P*(Z_{n}): join form does not match"))?;
    }
    let g = group(&GroupFamilySpec::elab_product(2, 2, 3, 2));
    check_join(&g, &pg(&g)?, GraphKind::Power, "P(El(4)xEl(9))")?;
    check_join(&g, &epg(&g)?, GraphKind::Enhanced, "EPG(El(4)xEl(9))")
}

fn criterion_12() -> Check {
    let mut rng = StdRng::seed_from_u64(12);
    for k in 0..100 {
        let n = rng.gen_range(1..=6);
        let m = IntMatrix::from_fn(n, n, |_, _| BigInt::from(rng.gen_range(-12..=12)));
        let cp = char_poly(&m).unwrap();
        ensure(cp == cofactor_char_poly(&m), || format!("matrix {k}: char_poly disagrees with cofactor oracle"))?;
        let sign = if n % 2 == 0 { 1 } else { -1 };
        ensure(determinant(&m).unwrap() == cp.coeff(0) * sign, || format!("matrix {k}: determinant mismatch"))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let mut seen = Seen::default();
    let mut signs = Vec::new();
    let mut failed = 0;
    let mut report = |id: u32, name: &str, bound: Option<Duration>, run: &mut dyn FnMut() -> Check| {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let result = result.and_then(|()| match bound {
            Some(b) if elapsed > b => Err(format!("took {elapsed:.2?}, bound {b:?}")),
            _ => Ok(()),
        });
        match &result {
            Ok(()) => println!("criterion {id:>2} PASS  {name} ({elapsed:.2?})"),
            Err(e) => {
                failed += 1;
                println!("criterion {id:>2} FAIL  {name} ({elapsed:.2?}): {e}");
            }
        }
    };
    let secs = |s| Some(Duration::from_secs(s));
    report(1, "G_pq enhanced power graph distance spectrum", secs(5), &mut || criterion_1(&mut seen));
    report(2, "G_pq distance determinant magnitude", None, &mut || criterion_2(&mut signs));
    report(3, "dihedral enhanced power graph distance spectrum", secs(10), &mut || criterion_3(&mut seen));
    report(4, "dihedral power graph distance recursion", secs(10), &mut || criterion_4(&mut seen));
    report(5, "dicyclic enhanced power graph distance spectrum", secs(20), &mut || criterion_5(&mut seen));
    report(6, "El(p^n) x El(q^m) adjacency and distance spectra", secs(60), &mut || criterion_6(&mut seen));
    report(7, "quotient matrices and factorization identity", None, &mut criterion_7);
    report(8, "structured eigenvectors", None, &mut criterion_8);
    report(9, "El(p^n) x Z_m and El(p^n) distance spectra", secs(30), &mut || criterion_9(&mut seen));
    report(10, "distance quotient polynomial divides distance polynomial", None, &mut || criterion_10(&seen));
    report(11, "join form structure", None, &mut criterion_11);
    report(12, "char_poly and determinant against cofactor oracle", None, &mut criterion_12);
    println!("determinant signs: {}", signs.join(" "));
    println!("graph/partition pairs checked for divisibility: {}", seen.pairs.len());
    if failed == 0 {
        println!("acceptance: all 12 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
