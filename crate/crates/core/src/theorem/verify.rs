//! Theorem cases, brute-force comparison, and parameter sweeps.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::closed::{
    cf_elab_distance, cf_elab_product, cf_elab_times_cyclic_distance, cf_epg_dicyclic_distance,
    cf_epg_dihedral_distance, cf_epg_gpq_determinant, cf_epg_gpq_distance, cf_pg_dihedral_distance_rhs, check_elab,
    check_gpq, check_n3, require,
};
use super::elab::ElabParams;
use super::{GraphKind, MatrixKind, TheoremError};
use crate::graph::distance_matrix;
use crate::group::{gcd, is_prime, make_group, GroupFamilySpec};
use crate::linalg::{char_poly_with_limit, determinant, FactoredPoly, IntMatrix, IntPolynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    EpgGpqDistance,
    EpgGpqDeterminant,
    EpgDihedralDistance,
    PgDihedralDistance,
    EpgDicyclicDistance,
    PgDicyclicDistance,
    PgElabProductAdjacency,
    PgElabProductDistance,
    EpgElabProductAdjacency,
    EpgElabProductDistance,
    EpgElabTimesCyclicDistance,
    EpgElabDistance,
}

impl TheoremId {
    pub const ALL: [TheoremId; 12] = [
        TheoremId::EpgGpqDistance,
        TheoremId::EpgGpqDeterminant,
        TheoremId::EpgDihedralDistance,
        TheoremId::PgDihedralDistance,
        TheoremId::EpgDicyclicDistance,
        TheoremId::PgDicyclicDistance,
        TheoremId::PgElabProductAdjacency,
        TheoremId::PgElabProductDistance,
        TheoremId::EpgElabProductAdjacency,
        TheoremId::EpgElabProductDistance,
        TheoremId::EpgElabTimesCyclicDistance,
        TheoremId::EpgElabDistance,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::EpgGpqDistance => "epg-gpq-distance",
            TheoremId::EpgGpqDeterminant => "epg-gpq-determinant",
            TheoremId::EpgDihedralDistance => "epg-dihedral-distance",
            TheoremId::PgDihedralDistance => "pg-dihedral-distance",
            TheoremId::EpgDicyclicDistance => "epg-dicyclic-distance",
            TheoremId::PgDicyclicDistance => "pg-dicyclic-distance",
            TheoremId::PgElabProductAdjacency => "pg-elab-product-adjacency",
            TheoremId::PgElabProductDistance => "pg-elab-product-distance",
            TheoremId::EpgElabProductAdjacency => "epg-elab-product-adjacency",
            TheoremId::EpgElabProductDistance => "epg-elab-product-distance",
            TheoremId::EpgElabTimesCyclicDistance => "epg-elab-times-cyclic-distance",
            TheoremId::EpgElabDistance => "epg-elab-distance",
        }
    }

    /// Parameter names, in the order [`TheoremCase::values`] stores them.
    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            TheoremId::EpgGpqDistance | TheoremId::EpgGpqDeterminant => &["p", "q"],
            TheoremId::EpgDihedralDistance
            | TheoremId::PgDihedralDistance
            | TheoremId::EpgDicyclicDistance
            | TheoremId::PgDicyclicDistance => &["n"],
            TheoremId::PgElabProductAdjacency
            | TheoremId::PgElabProductDistance
            | TheoremId::EpgElabProductAdjacency
            | TheoremId::EpgElabProductDistance => &["p", "n", "q", "m"],
            TheoremId::EpgElabTimesCyclicDistance => &["p", "n", "m"],
            TheoremId::EpgElabDistance => &["p", "n"],
        }
    }

    pub fn graph_kind(self) -> GraphKind {
        match self {
            TheoremId::PgDihedralDistance
            | TheoremId::PgDicyclicDistance
            | TheoremId::PgElabProductAdjacency
            | TheoremId::PgElabProductDistance => GraphKind::Power,
            _ => GraphKind::Enhanced,
        }
    }

    pub fn matrix_kind(self) -> MatrixKind {
        match self {
            TheoremId::PgElabProductAdjacency | TheoremId::EpgElabProductAdjacency => MatrixKind::Adjacency,
            _ => MatrixKind::Distance,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = TheoremError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| TheoremError::HypothesisViolated(format!("unknown theorem id {s:?}")))
    }
}

/// One theorem instantiated at concrete parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TheoremCase {
    id: TheoremId,
    values: Vec<u64>,
}

impl TheoremCase {
    /// Builds a case from named parameters and checks the hypotheses.
    pub fn new(id: TheoremId, params: &BTreeMap<String, u64>) -> Result<Self, TheoremError> {
        let names = id.param_names();
        if let Some(extra) = params.keys().find(|k| !names.contains(&k.as_str())) {
            return Err(TheoremError::HypothesisViolated(format!("{id} takes no parameter {extra:?}")));
        }
        let values = names
            .iter()
            .map(|&k| {
                params
                    .get(k)
                    .copied()
                    .ok_or_else(|| TheoremError::HypothesisViolated(format!("{id} needs parameter {k}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let case = TheoremCase { id, values };
        case.validate()?;
        Ok(case)
    }

    /// Positional form of [`TheoremCase::new`], values in
    /// [`TheoremId::param_names`] order.
    pub fn from_values(id: TheoremId, values: &[u64]) -> Result<Self, TheoremError> {
        let names = id.param_names();
        require(values.len() == names.len(), || format!("{id} takes {} parameters", names.len()))?;
        let case = TheoremCase { id, values: values.to_vec() };
        case.validate()?;
        Ok(case)
    }

    /// The case, if any, whose closed form describes `matrix` of the `graph`
    /// of the group `spec`.
    pub fn matching(spec: &GroupFamilySpec, graph: GraphKind, matrix: MatrixKind) -> Option<Self> {
        use GroupFamilySpec as S;
        let (id, values) = match (spec, graph, matrix) {
            (S::Gpq { p, q }, GraphKind::Power | GraphKind::Enhanced, MatrixKind::Distance) => {
                (TheoremId::EpgGpqDistance, vec![*p, *q])
            }
            (S::Dihedral { n }, GraphKind::Enhanced, MatrixKind::Distance) => (TheoremId::EpgDihedralDistance, vec![*n]),
            (S::Dihedral { n }, GraphKind::Power, MatrixKind::Distance) => (TheoremId::PgDihedralDistance, vec![*n]),
            (S::Dicyclic { n }, GraphKind::Enhanced, MatrixKind::Distance) => (TheoremId::EpgDicyclicDistance, vec![*n]),
            (S::Dicyclic { n }, GraphKind::Power, MatrixKind::Distance) => (TheoremId::PgDicyclicDistance, vec![*n]),
            (S::ElementaryAbelian { p, n }, GraphKind::Power | GraphKind::Enhanced, MatrixKind::Distance) => {
                (TheoremId::EpgElabDistance, vec![*p, *n as u64])
            }
            (S::DirectProduct { left, right }, GraphKind::Power | GraphKind::Enhanced, _) => {
                match (left.as_ref(), right.as_ref()) {
                    (S::ElementaryAbelian { p, n }, S::ElementaryAbelian { p: q, n: m }) => {
                        let id = match (graph, matrix) {
                            (GraphKind::Power, MatrixKind::Adjacency) => TheoremId::PgElabProductAdjacency,
                            (GraphKind::Power, MatrixKind::Distance) => TheoremId::PgElabProductDistance,
                            (_, MatrixKind::Adjacency) => TheoremId::EpgElabProductAdjacency,
                            (_, MatrixKind::Distance) => TheoremId::EpgElabProductDistance,
                        };
                        (id, vec![*p, *n as u64, *q, *m as u64])
                    }
                    (S::ElementaryAbelian { p, n }, S::Cyclic { n: m })
                        if graph == GraphKind::Enhanced && matrix == MatrixKind::Distance =>
                    {
                        (TheoremId::EpgElabTimesCyclicDistance, vec![*p, *n as u64, *m])
                    }
                    _ => return None,
                }
            }
            _ => return None,
        };
        TheoremCase::from_values(id, &values).ok()
    }

    pub fn id(&self) -> TheoremId {
        self.id
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn params(&self) -> BTreeMap<&'static str, u64> {
        self.id.param_names().iter().copied().zip(self.values.iter().copied()).collect()
    }

    pub fn graph_kind(&self) -> GraphKind {
        self.id.graph_kind()
    }

    pub fn matrix_kind(&self) -> MatrixKind {
        self.id.matrix_kind()
    }

    fn v(&self, k: usize) -> u64 {
        self.values[k]
    }

    fn exponent(&self, k: usize) -> Result<u32, TheoremError> {
        u32::try_from(self.v(k)).map_err(|_| TheoremError::HypothesisViolated("exponent too large".into()))
    }

    fn validate(&self) -> Result<(), TheoremError> {
        match self.id {
            TheoremId::EpgGpqDistance | TheoremId::EpgGpqDeterminant => check_gpq(self.v(0), self.v(1)),
            TheoremId::EpgDihedralDistance | TheoremId::PgDihedralDistance | TheoremId::EpgDicyclicDistance => {
                check_n3(self.v(0))
            }
            TheoremId::PgDicyclicDistance => {
                check_n3(self.v(0))?;
                require(self.v(0).is_power_of_two(), || format!("need n a power of 2, got n = {}", self.v(0)))
            }
            TheoremId::PgElabProductAdjacency
            | TheoremId::PgElabProductDistance
            | TheoremId::EpgElabProductAdjacency
            | TheoremId::EpgElabProductDistance => {
                ElabParams::new(self.v(0), self.exponent(1)?, self.v(2), self.exponent(3)?).map(|_| ())
            }
            TheoremId::EpgElabTimesCyclicDistance => {
                let (p, n, m) = (self.v(0), self.exponent(1)?, self.v(2));
                check_elab(p, n)?;
                require(n >= 2, || format!("need n >= 2, got n = {n}"))?;
                require(m >= 1 && gcd(m, p) == 1, || format!("need gcd(m, p) = 1, got m = {m}, p = {p}"))
            }
            TheoremId::EpgElabDistance => check_elab(self.v(0), self.exponent(1)?),
        }
    }

    pub fn group_spec(&self) -> GroupFamilySpec {
        let exp = |k: usize| self.v(k) as u32;
        match self.id {
            TheoremId::EpgGpqDistance | TheoremId::EpgGpqDeterminant => {
                GroupFamilySpec::Gpq { p: self.v(0), q: self.v(1) }
            }
            TheoremId::EpgDihedralDistance | TheoremId::PgDihedralDistance => GroupFamilySpec::Dihedral { n: self.v(0) },
            TheoremId::EpgDicyclicDistance | TheoremId::PgDicyclicDistance => GroupFamilySpec::Dicyclic { n: self.v(0) },
            TheoremId::PgElabProductAdjacency
            | TheoremId::PgElabProductDistance
            | TheoremId::EpgElabProductAdjacency
            | TheoremId::EpgElabProductDistance => GroupFamilySpec::elab_product(self.v(0), exp(1), self.v(2), exp(3)),
            TheoremId::EpgElabTimesCyclicDistance => GroupFamilySpec::elab_times_cyclic(self.v(0), exp(1), self.v(2)),
            TheoremId::EpgElabDistance => GroupFamilySpec::ElementaryAbelian { p: self.v(0), n: exp(1) },
        }
    }

    pub fn group_order(&self) -> u64 {
        self.group_spec().order()
    }

    /// The closed form, as a factor list. For the dihedral power graph the
    /// formula refers to the cyclic subgraphs, whose distance polynomials
    /// are computed directly.
    pub fn closed_form(&self) -> Result<FactoredPoly, TheoremError> {
        self.closed_form_with_limit(None)
    }

    fn closed_form_with_limit(&self, max_bits: Option<u64>) -> Result<FactoredPoly, TheoremError> {
        let exp = |k: usize| self.v(k) as u32;
        Ok(match self.id {
            TheoremId::EpgGpqDistance => cf_epg_gpq_distance(self.v(0), self.v(1))?,
            TheoremId::EpgGpqDeterminant => FactoredPoly::new()
                .with(IntPolynomial::constant(cf_epg_gpq_determinant(self.v(0), self.v(1))?), 1),
            TheoremId::EpgDihedralDistance => cf_epg_dihedral_distance(self.v(0))?,
            TheoremId::PgDihedralDistance => {
                let n = self.v(0);
                check_n3(n)?;
                let zn = make_group(&GroupFamilySpec::Cyclic { n })?;
                let pz = distance_poly(&GraphKind::Power.build(&zn), max_bits)?;
                let pzstar = distance_poly(&GraphKind::ProperPower.build(&zn), max_bits)?;
                // the (x+2)^{n−1} prefix is kept as its own factor
                let rhs = cf_pg_dihedral_distance_rhs(n, &pz, &pzstar);
                let prefix = IntPolynomial::x_plus(2).pow(n - 1);
                FactoredPoly::new().with(IntPolynomial::x_plus(2), n - 1).with(rhs.exact_div(&prefix)?, 1)
            }
            TheoremId::EpgDicyclicDistance | TheoremId::PgDicyclicDistance => cf_epg_dicyclic_distance(self.v(0))?,
            TheoremId::PgElabProductAdjacency
            | TheoremId::PgElabProductDistance
            | TheoremId::EpgElabProductAdjacency
            | TheoremId::EpgElabProductDistance => {
                cf_elab_product(self.v(0), exp(1), self.v(2), exp(3), self.graph_kind(), self.matrix_kind())?
            }
            TheoremId::EpgElabTimesCyclicDistance => cf_elab_times_cyclic_distance(self.v(0), exp(1), self.v(2))?,
            TheoremId::EpgElabDistance => cf_elab_distance(self.v(0), exp(1))?,
        })
    }
}

impl fmt::Display for TheoremCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.id)?;
        for (k, v) in self.id.param_names().iter().zip(&self.values) {
            write!(f, " {k}={v}")?;
        }
        Ok(())
    }
}

fn distance_poly(g: &crate::graph::Graph, max_bits: Option<u64>) -> Result<IntPolynomial, TheoremError> {
    Ok(char_poly_with_limit(&distance_matrix(g)?, max_bits)?)
}

/// Brute-force side of a case: the characteristic polynomial of the
/// actual matrix, or `|det D|` as a constant for the determinant case.
/// Also returns informational notes.
pub fn brute_force_poly(case: &TheoremCase, max_bits: Option<u64>) -> Result<(IntPolynomial, Vec<String>), TheoremError> {
    let group = make_group(&case.group_spec())?;
    let graph = case.graph_kind().build(&group);
    let matrix: IntMatrix = match case.matrix_kind() {
        MatrixKind::Adjacency => graph.adjacency_matrix(),
        MatrixKind::Distance => distance_matrix(&graph)?,
    };
    let mut notes = Vec::new();
    if case.id == TheoremId::EpgGpqDeterminant {
        let det: BigInt = determinant(&matrix)?;
        notes.push(format!("signed determinant {det}"));
        return Ok((IntPolynomial::constant(det.abs()), notes));
    }
    if case.id == TheoremId::EpgElabDistance {
        let (p, n) = (case.v(0), case.v(1));
        let alpha = (p.pow(n as u32) - 1) / (p - 1);
        notes.push(format!(
            "eigenvalue -1 has multiplicity (p-2)*alpha = {}; reading it as (n-2)*alpha = {} breaks the degree count",
            (p - 2) * alpha,
            (n as i64 - 2) * alpha as i64
        ));
    }
    Ok((char_poly_with_limit(&matrix, max_bits)?, notes))
}

/// Outcome of one comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub case: TheoremCase,
    pub closed_form: FactoredPoly,
    pub brute_force: IntPolynomial,
    pub equal: bool,
    pub group_order: u64,
    pub elapsed: Duration,
    pub notes: Vec<String>,
    /// Set when the case could not be evaluated; `equal` is then false.
    pub error: Option<String>,
}

impl VerificationReport {
    /// One JSON object. Elapsed time is included only when asked for, so
    /// repeated runs stay byte-identical by default.
    pub fn to_json(&self, with_timing: bool) -> Value {
        let mut v = json!({
            "theorem": self.case.id.name(),
            "params": self.case.params(),
            "equal": self.equal,
            "group_order": self.group_order,
            "closed_form": self.closed_form,
            "closed_form_expanded": self.closed_form.expand(),
            "brute_force": self.brute_force,
        });
        if !self.notes.is_empty() {
            v["notes"] = json!(self.notes);
        }
        if let Some(e) = &self.error {
            v["error"] = json!(e);
        }
        if with_timing {
            v["elapsed_ms"] = json!(self.elapsed.as_millis() as u64);
        }
        v
    }
}

pub fn verify(case: &TheoremCase) -> VerificationReport {
    verify_with_limit(case, None)
}

/// [`verify`] with an optional cap on intermediate bit lengths. Failures
/// become a report with `error` set rather than a panic or an `Err`.
pub fn verify_with_limit(case: &TheoremCase, max_bits: Option<u64>) -> VerificationReport {
    let start = Instant::now();
    let outcome = case
        .closed_form_with_limit(max_bits)
        .and_then(|cf| brute_force_poly(case, max_bits).map(|(bf, notes)| (cf, bf, notes)));
    let (closed_form, brute_force, notes, error) = match outcome {
        Ok((cf, bf, notes)) => (cf, bf, notes, None),
        Err(e) => (FactoredPoly::new(), IntPolynomial::zero(), Vec::new(), Some(e.to_string())),
    };
    VerificationReport {
        equal: error.is_none() && closed_form.expand() == brute_force,
        group_order: case.group_order(),
        case: case.clone(),
        closed_form,
        brute_force,
        elapsed: start.elapsed(),
        notes,
        error,
    }
}

/// Which cases a sweep covers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepFilter {
    pub max_order: u64,
    /// Empty means every theorem.
    pub theorems: Vec<TheoremId>,
    pub max_bits: Option<u64>,
}

impl Default for SweepFilter {
    fn default() -> Self {
        SweepFilter { max_order: 64, theorems: Vec::new(), max_bits: None }
    }
}

fn primes_up_to(n: u64) -> Vec<u64> {
    (2..=n).filter(|&k| is_prime(k)).collect()
}

/// Every parameter tuple of `id` satisfying its hypotheses with group
/// order at most `max_order`, in sorted order.
pub fn enumerate_cases(id: TheoremId, max_order: u64) -> Vec<TheoremCase> {
    let primes = primes_up_to(max_order);
    let mut tuples: Vec<Vec<u64>> = Vec::new();
    let powers = |p: u64| (1u64..).take_while(move |&k| p.pow(k as u32) <= max_order);
    match id {
        TheoremId::EpgGpqDistance | TheoremId::EpgGpqDeterminant => {
            for &p in &primes {
                for &q in &primes {
                    if p < q && p * q <= max_order {
                        tuples.push(vec![p, q]);
                    }
                }
            }
        }
        TheoremId::EpgDihedralDistance | TheoremId::PgDihedralDistance => {
            tuples.extend((3..=max_order / 2).map(|n| vec![n]));
        }
        TheoremId::EpgDicyclicDistance => tuples.extend((3..=max_order / 4).map(|n| vec![n])),
        TheoremId::PgDicyclicDistance => tuples.extend((3..=max_order / 4).map(|n| vec![n])),
        TheoremId::PgElabProductAdjacency
        | TheoremId::PgElabProductDistance
        | TheoremId::EpgElabProductAdjacency
        | TheoremId::EpgElabProductDistance => {
            for &p in &primes {
                for n in powers(p) {
                    for &q in &primes {
                        for m in powers(q) {
                            if p != q && p.pow(n as u32) * q.pow(m as u32) <= max_order {
                                tuples.push(vec![p, n, q, m]);
                            }
                        }
                    }
                }
            }
        }
        TheoremId::EpgElabTimesCyclicDistance => {
            for &p in &primes {
                for n in powers(p) {
                    for m in 1..=max_order / p.pow(n as u32) {
                        tuples.push(vec![p, n, m]);
                    }
                }
            }
        }
        TheoremId::EpgElabDistance => {
            for &p in &primes {
                tuples.extend(powers(p).map(|n| vec![p, n]));
            }
        }
    }
    let mut cases: Vec<TheoremCase> =
        tuples.into_iter().filter_map(|t| TheoremCase::from_values(id, &t).ok()).collect();
    cases.sort();
    cases
}

/// Runs every case the filter selects, in parallel. Reports come back in
/// sorted case order regardless of scheduling.
pub fn verify_sweep(filter: &SweepFilter) -> Vec<VerificationReport> {
    let ids: Vec<TheoremId> =
        if filter.theorems.is_empty() { TheoremId::ALL.to_vec() } else { filter.theorems.clone() };
    let mut cases: Vec<TheoremCase> = ids.into_iter().flat_map(|id| enumerate_cases(id, filter.max_order)).collect();
    cases.sort();
    cases.dedup();
    cases.par_iter().map(|c| verify_with_limit(c, filter.max_bits)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn case(id: TheoremId, values: &[u64]) -> TheoremCase {
        TheoremCase::from_values(id, values).unwrap()
    }

    #[test]
    fn matching_cases() {
        let m = TheoremCase::matching(&GroupFamilySpec::Gpq { p: 2, q: 3 }, GraphKind::Enhanced, MatrixKind::Distance);
        assert_eq!(m.unwrap().id(), TheoremId::EpgGpqDistance);
        let spec = GroupFamilySpec::elab_product(2, 1, 3, 1);
        let m = TheoremCase::matching(&spec, GraphKind::Power, MatrixKind::Adjacency).unwrap();
        assert_eq!(m.id(), TheoremId::PgElabProductAdjacency);
        assert!(TheoremCase::matching(&GroupFamilySpec::Dicyclic { n: 3 }, GraphKind::Power, MatrixKind::Distance).is_none());
        assert!(TheoremCase::matching(&GroupFamilySpec::Cyclic { n: 6 }, GraphKind::Power, MatrixKind::Distance).is_none());
        // P(El(p^n)) is also its enhanced power graph
        let m = TheoremCase::matching(&GroupFamilySpec::ElementaryAbelian { p: 3, n: 2 }, GraphKind::Power, MatrixKind::Distance);
        assert!(verify(&m.unwrap()).equal);
    }

    #[test]
    fn ids_round_trip() {
        for id in TheoremId::ALL {
            assert_eq!(id.name().parse::<TheoremId>().unwrap(), id);
        }
        assert!("nope".parse::<TheoremId>().is_err());
    }

    #[test]
    fn hypotheses_enforced() {
        assert!(TheoremCase::from_values(TheoremId::EpgGpqDistance, &[3, 5]).is_err());
        assert!(TheoremCase::from_values(TheoremId::EpgDihedralDistance, &[2]).is_err());
        assert!(TheoremCase::from_values(TheoremId::PgDicyclicDistance, &[6]).is_err());
        assert!(TheoremCase::from_values(TheoremId::EpgElabTimesCyclicDistance, &[2, 2, 2]).is_err());
        let mut params = BTreeMap::new();
        params.insert("n".to_string(), 5);
        assert!(TheoremCase::new(TheoremId::EpgDihedralDistance, &params).is_ok());
        params.insert("p".to_string(), 2);
        assert!(TheoremCase::new(TheoremId::EpgDihedralDistance, &params).is_err());
    }

    #[test]
    fn small_cases_verify() {
        for c in [
            case(TheoremId::EpgGpqDistance, &[2, 3]),
            case(TheoremId::EpgGpqDistance, &[3, 7]),
            case(TheoremId::EpgGpqDeterminant, &[2, 3]),
            case(TheoremId::EpgDihedralDistance, &[5]),
            case(TheoremId::PgDihedralDistance, &[6]),
            case(TheoremId::EpgDicyclicDistance, &[3]),
            case(TheoremId::PgDicyclicDistance, &[4]),
            case(TheoremId::PgElabProductAdjacency, &[2, 2, 3, 1]),
            case(TheoremId::EpgElabProductDistance, &[3, 1, 2, 2]),
            case(TheoremId::EpgElabTimesCyclicDistance, &[2, 2, 3]),
            case(TheoremId::EpgElabDistance, &[3, 2]),
        ] {
            let r = verify(&c);
            assert!(r.equal, "{c}: {:?}", r.error);
            assert_eq!(r.brute_force.degree(), Some(if c.id == TheoremId::EpgGpqDeterminant { 0 } else { r.group_order as usize }));
        }
    }

    #[test]
    fn determinant_sign_is_noted() {
        let r = verify(&case(TheoremId::EpgGpqDeterminant, &[2, 3]));
        assert_eq!(r.brute_force, IntPolynomial::constant(BigInt::from(52)));
        assert_eq!(r.notes, vec!["signed determinant -52".to_string()]);
    }

    #[test]
    fn errors_become_failed_reports() {
        let c = case(TheoremId::EpgDihedralDistance, &[8]);
        let r = verify_with_limit(&c, Some(4));
        assert!(!r.equal);
        assert!(r.error.unwrap().starts_with("BitLimitExceeded"));
    }

    #[test]
    fn enumeration_respects_bounds() {
        let cases = enumerate_cases(TheoremId::EpgGpqDistance, 40);
        let got: Vec<_> = cases.iter().map(|c| c.values().to_vec()).collect();
        assert_eq!(got, vec![vec![2, 3], vec![2, 5], vec![2, 7], vec![2, 11], vec![2, 13], vec![2, 17], vec![2, 19], vec![3, 7], vec![3, 13]]);
        // n = 4, 8, 16
        assert_eq!(enumerate_cases(TheoremId::PgDicyclicDistance, 64).len(), 3);
        assert!(enumerate_cases(TheoremId::EpgElabDistance, 64).iter().all(|c| c.group_order() <= 64));
        for id in TheoremId::ALL {
            assert!(!enumerate_cases(id, 64).is_empty(), "{id}");
        }
    }

    #[test]
    fn report_json_is_stable() {
        let r = verify(&case(TheoremId::EpgElabDistance, &[2, 2]));
        let v = r.to_json(false);
        assert_eq!(v["theorem"], "epg-elab-distance");
        assert_eq!(v["params"]["p"], 2);
        assert_eq!(v["equal"], true);
        assert_eq!(v["brute_force"]["coeffs"], json!(["-12", "-28", "-15", "0", "1"]));
        assert!(v.get("elapsed_ms").is_none());
        assert!(r.to_json(true).get("elapsed_ms").is_some());
    }
}
