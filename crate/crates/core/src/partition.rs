//! Vertex partitions, equitability, colour refinement, and quotient
//! matrices. Also the named partitions for each supported group family.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{diameter, Graph, GraphError};
use crate::group::{gcd, make_group, totient_and_divisors, FiniteGroup, GroupFamilySpec};
use crate::linalg::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("NotAPartition: {0}")]
    NotAPartition(String),
    #[error("NotEquitable: vertex {vertex} disagrees with its cell on neighbours in cell {target}")]
    NotEquitable { vertex: usize, target: usize },
    #[error("DiameterExceedsTwo: diameter is {0}")]
    DiameterExceedsTwo(usize),
    #[error("FamilyMismatch: {0}")]
    FamilyMismatch(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Ordered list of disjoint, ascending, nonempty vertex cells covering
/// `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Partition {
    cells: Vec<Vec<usize>>,
}

impl Partition {
    /// Validates `cells` as a partition of `0..n`. Cells are sorted
    /// internally; their order is kept.
    pub fn new(mut cells: Vec<Vec<usize>>, n: usize) -> Result<Self, PartitionError> {
        let mut seen = vec![false; n];
        for cell in &mut cells {
            if cell.is_empty() {
                return Err(PartitionError::NotAPartition("empty cell".into()));
            }
            cell.sort_unstable();
            for &v in cell.iter() {
                if v >= n {
                    return Err(PartitionError::NotAPartition(format!("vertex {v} out of range 0..{n}")));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(PartitionError::NotAPartition(format!("vertex {v} appears twice")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(PartitionError::NotAPartition(format!("vertex {v} is not covered")));
        }
        Ok(Partition { cells })
    }

    pub fn trivial(n: usize) -> Self {
        Partition { cells: if n == 0 { vec![] } else { vec![(0..n).collect()] } }
    }

    pub fn discrete(n: usize) -> Self {
        Partition { cells: (0..n).map(|v| vec![v]).collect() }
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.cells.iter().map(Vec::len).sum()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    /// `cell_of[v]` is the index of the cell holding `v`.
    pub fn cell_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.vertex_count()];
        for (i, cell) in self.cells.iter().enumerate() {
            for &v in cell {
                out[v] = i;
            }
        }
        out
    }

    /// Cells concatenated in order. Read as a map from join-block position
    /// to vertex, this is the natural bijection for a join whose parts are
    /// the cells.
    pub fn flatten(&self) -> Vec<usize> {
        self.cells.iter().flatten().copied().collect()
    }

    /// True if every cell of `self` lies inside a single cell of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        let owner = coarser.cell_of();
        self.vertex_count() == coarser.vertex_count()
            && self.cells.iter().all(|cell| cell.iter().all(|&v| owner[v] == owner[cell[0]]))
    }

    fn check_covers(&self, g: &Graph) -> Result<(), PartitionError> {
        if self.vertex_count() != g.vertex_count() {
            return Err(PartitionError::NotAPartition(format!(
                "partition covers {} vertices, graph has {}",
                self.vertex_count(),
                g.vertex_count()
            )));
        }
        Ok(())
    }
}

/// Row `v` holds `|N(v) ∩ V_j|` for every cell `j`.
fn neighbor_counts(g: &Graph, cell_of: &[usize], cells: usize) -> Vec<Vec<usize>> {
    (0..g.vertex_count())
        .map(|v| {
            let mut counts = vec![0; cells];
            for &u in g.neighbors(v) {
                counts[cell_of[u]] += 1;
            }
            counts
        })
        .collect()
}

/// First violation of equitability, if any.
fn equitable_violation(g: &Graph, p: &Partition) -> Result<Option<(usize, usize)>, PartitionError> {
    p.check_covers(g)?;
    let counts = neighbor_counts(g, &p.cell_of(), p.len());
    for cell in p.cells() {
        let reference = &counts[cell[0]];
        for &v in &cell[1..] {
            if let Some(j) = (0..p.len()).find(|&j| counts[v][j] != reference[j]) {
                return Ok(Some((v, j)));
            }
        }
    }
    Ok(None)
}

pub fn is_equitable(g: &Graph, p: &Partition) -> Result<bool, PartitionError> {
    Ok(equitable_violation(g, p)?.is_none())
}

/// Colour refinement from the one-cell partition until stable. The result
/// is the coarsest equitable partition; cells are ordered by their
/// smallest vertex.
pub fn coarsest_equitable_partition(g: &Graph) -> Partition {
    let n = g.vertex_count();
    if n == 0 {
        return Partition::trivial(0);
    }
    let mut colour = vec![0usize; n];
    let mut colours = 1;
    loop {
        let counts = neighbor_counts(g, &colour, colours);
        // Split each colour class by signature; new ids follow (old colour,
        // signature) in lexicographic order.
        let mut ids: BTreeMap<(usize, &[usize]), usize> = BTreeMap::new();
        for v in 0..n {
            ids.entry((colour[v], counts[v].as_slice())).or_insert(0);
        }
        for (next, id) in ids.values_mut().enumerate() {
            *id = next;
        }
        let refined: Vec<usize> = (0..n).map(|v| ids[&(colour[v], counts[v].as_slice())]).collect();
        let new_colours = ids.len();
        colour = refined;
        if new_colours == colours {
            break;
        }
        colours = new_colours;
    }
    let mut cells: Vec<Vec<usize>> = vec![Vec::new(); colours];
    for (v, &c) in colour.iter().enumerate() {
        cells[c].push(v);
    }
    cells.sort_by_key(|c| c[0]);
    Partition { cells }
}

/// `t_ij = |N(u) ∩ V_j|` for any `u ∈ V_i`.
pub fn quotient_matrix(g: &Graph, p: &Partition) -> Result<IntMatrix, PartitionError> {
    if let Some((vertex, target)) = equitable_violation(g, p)? {
        return Err(PartitionError::NotEquitable { vertex, target });
    }
    let counts = neighbor_counts(g, &p.cell_of(), p.len());
    Ok(IntMatrix::from_fn(p.len(), p.len(), |i, j| BigInt::from(counts[p.cells[i][0]][j])))
}

/// Distance quotient for a graph of diameter at most two:
/// `t_ii = 2|V_i| − 2 − t^A_ii` and `t_ij = 2|V_j| − t^A_ij`.
pub fn distance_quotient_matrix(g: &Graph, p: &Partition) -> Result<IntMatrix, PartitionError> {
    let adj = quotient_matrix(g, p)?;
    let d = diameter(g)?;
    if d > 2 {
        return Err(PartitionError::DiameterExceedsTwo(d));
    }
    let sizes = p.sizes();
    Ok(IntMatrix::from_fn(p.len(), p.len(), |i, j| {
        let base = BigInt::from(2 * sizes[j]) - &adj[(i, j)];
        if i == j {
            base - 2
        } else {
            base
        }
    }))
}

/// Quotient of an arbitrary square matrix: `t_ij` is the row sum of block
/// `(i, j)`, required to be the same for every row of `V_i`.
pub fn block_quotient(m: &IntMatrix, p: &Partition) -> Result<IntMatrix, PartitionError> {
    if !m.is_square() || m.rows() != p.vertex_count() {
        return Err(PartitionError::NotAPartition(format!(
            "partition of {} vertices against a {}x{} matrix",
            p.vertex_count(),
            m.rows(),
            m.cols()
        )));
    }
    let k = p.len();
    let mut out = IntMatrix::zeros(k, k);
    for (i, cell) in p.cells.iter().enumerate() {
        for (j, target) in p.cells.iter().enumerate() {
            let sum_for = |v: usize| target.iter().map(|&u| &m[(v, u)]).fold(BigInt::zero(), |a, b| a + b);
            let first = sum_for(cell[0]);
            if let Some(&v) = cell[1..].iter().find(|&&v| sum_for(v) != first) {
                return Err(PartitionError::NotEquitable { vertex: v, target: j });
            }
            out[(i, j)] = first;
        }
    }
    Ok(out)
}

/// The named partitions the closed forms are stated for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyPartition {
    /// `G_pq`: identity, the Sylow `q`-subgroup, then the `q` Sylow
    /// `p`-subgroups (each without identity).
    GpqSylow,
    /// `D_{2n}` enhanced power graph: identity, rotations, then each
    /// reflection alone.
    Dihedral,
    /// `Dic_{4n}` enhanced power graph: `{e, aⁿ}`, the rest of `⟨a⟩`, then
    /// `{aⁱx, aⁱ⁺ⁿx}` for `0 ≤ i < n`.
    Dicyclic,
    /// `El(pⁿ)×El(qᵐ)`: `V₁..V₄` by which coordinates are trivial.
    ElabProductCoarse,
    /// `El(pⁿ)×El(qᵐ)`: `U₁`, `V_i`, `W_{i,j}` (row-major), `X_j`.
    ElabProductFine,
    /// `El(pⁿ)×Z_m`: the `Z_m` factor, then each order-`p` line times `Z_m`.
    ElabTimesCyclic,
    /// `Z_n` power graph: identity with the generators, then the elements of
    /// each order `d`, `1 < d < n` ascending.
    CyclicDivisor,
    /// `D_{2n}` power graph: identity, each reflection alone, then the
    /// rotation generators and each proper-divisor order class.
    DihedralPower,
}

impl FamilyPartition {
    pub const ALL: [FamilyPartition; 8] = [
        FamilyPartition::GpqSylow,
        FamilyPartition::Dihedral,
        FamilyPartition::Dicyclic,
        FamilyPartition::ElabProductCoarse,
        FamilyPartition::ElabProductFine,
        FamilyPartition::ElabTimesCyclic,
        FamilyPartition::CyclicDivisor,
        FamilyPartition::DihedralPower,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyPartition::GpqSylow => "gpq-sylow",
            FamilyPartition::Dihedral => "dihedral",
            FamilyPartition::Dicyclic => "dicyclic",
            FamilyPartition::ElabProductCoarse => "elab-product-coarse",
            FamilyPartition::ElabProductFine => "elab-product-fine",
            FamilyPartition::ElabTimesCyclic => "elab-times-cyclic",
            FamilyPartition::CyclicDivisor => "cyclic-divisor",
            FamilyPartition::DihedralPower => "dihedral-power",
        }
    }
}

impl std::str::FromStr for FamilyPartition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FamilyPartition::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| PartitionError::FamilyMismatch(format!("unknown partition {s:?}")))
    }
}

/// The order-`p` subgroups of `El(pⁿ)` minus the identity, ordered by
/// smallest element.
fn prime_lines(p: u64, n: u32) -> Vec<Vec<usize>> {
    let g = make_group(&GroupFamilySpec::ElementaryAbelian { p, n }).expect("validated by caller");
    let mut lines: Vec<Vec<usize>> = g
        .cyclic_subgroups()
        .into_iter()
        .filter(|s| s.len() == p as usize)
        .map(|s| s.into_iter().filter(|&x| x != 0).collect())
        .collect();
    lines.sort_by_key(|l| l[0]);
    lines
}

/// Elements of `Z_n` grouped by order: generators first, then each
/// proper divisor `d` ascending.
fn cyclic_order_classes(n: u64) -> Vec<Vec<usize>> {
    let order_of = |k: u64| n / gcd(k, n);
    let (_, divisors) = totient_and_divisors(n);
    let mut classes = vec![(1..n).filter(|&k| order_of(k) == n).map(|k| k as usize).collect::<Vec<_>>()];
    for d in divisors {
        classes.push((1..n).filter(|&k| order_of(k) == d).map(|k| k as usize).collect());
    }
    classes.retain(|c| !c.is_empty());
    classes
}

/// Builds the named partition for `g`, which must have been constructed
/// from the matching family.
pub fn family_partition(g: &FiniteGroup, which: FamilyPartition) -> Result<Partition, PartitionError> {
    let mismatch = || {
        PartitionError::FamilyMismatch(format!(
            "partition {} does not apply to {}",
            which.name(),
            g.family().map_or("an unnamed group".to_string(), ToString::to_string)
        ))
    };
    let family = g.family().ok_or_else(mismatch)?;
    let n_el = g.order();
    let cells: Vec<Vec<usize>> = match (which, family) {
        (FamilyPartition::GpqSylow, &GroupFamilySpec::Gpq { p, q }) => {
            let q = q as usize;
            let mut cells = vec![vec![0], (1..q).collect()];
            let mut sylow_p: Vec<Vec<usize>> = g
                .cyclic_subgroups()
                .into_iter()
                .filter(|s| s.len() == p as usize)
                .map(|s| s.into_iter().filter(|&x| x != 0).collect())
                .collect();
            sylow_p.sort_by_key(|c: &Vec<usize>| c[0]);
            cells.extend(sylow_p);
            cells
        }
        (FamilyPartition::Dihedral, &GroupFamilySpec::Dihedral { n }) => {
            let n = n as usize;
            let mut cells = vec![vec![0], (1..n).collect()];
            cells.extend((n..2 * n).map(|r| vec![r]));
            cells
        }
        (FamilyPartition::Dicyclic, &GroupFamilySpec::Dicyclic { n }) => {
            let n = n as usize;
            let m = 2 * n;
            let mut cells = vec![vec![0, n], (1..m).filter(|&i| i != n).collect()];
            cells.extend((0..n).map(|i| vec![m + i, m + i + n]));
            cells
        }
        (FamilyPartition::ElabProductCoarse | FamilyPartition::ElabProductFine, GroupFamilySpec::DirectProduct { left, right }) => {
            let (&GroupFamilySpec::ElementaryAbelian { p, n }, &GroupFamilySpec::ElementaryAbelian { p: q, n: m }) =
                (left.as_ref(), right.as_ref())
            else {
                return Err(mismatch());
            };
            if p == q {
                return Err(mismatch());
            }
            let nh = q.pow(m) as usize;
            let nl = p.pow(n) as usize;
            if which == FamilyPartition::ElabProductCoarse {
                vec![
                    vec![0],
                    (1..nl).map(|a| a * nh).collect(),
                    (1..nl).flat_map(|a| (1..nh).map(move |b| a * nh + b)).collect(),
                    (1..nh).collect(),
                ]
            } else {
                let lines_p = prime_lines(p, n);
                let lines_q = prime_lines(q, m);
                let mut cells = vec![vec![0]];
                cells.extend(lines_p.iter().map(|l| l.iter().map(|&a| a * nh).collect()));
                for lp in &lines_p {
                    for lq in &lines_q {
                        cells.push(lp.iter().flat_map(|&a| lq.iter().map(move |&b| a * nh + b)).collect());
                    }
                }
                cells.extend(lines_q.iter().cloned());
                cells
            }
        }
        (FamilyPartition::ElabTimesCyclic, GroupFamilySpec::DirectProduct { left, right }) => {
            let (&GroupFamilySpec::ElementaryAbelian { p, n }, &GroupFamilySpec::Cyclic { n: m }) =
                (left.as_ref(), right.as_ref())
            else {
                return Err(mismatch());
            };
            if gcd(m, p) != 1 {
                return Err(mismatch());
            }
            let m = m as usize;
            let mut cells = vec![(0..m).collect::<Vec<_>>()];
            for line in prime_lines(p, n) {
                cells.push(line.iter().flat_map(|&a| (0..m).map(move |c| a * m + c)).collect());
            }
            cells
        }
        (FamilyPartition::CyclicDivisor, &GroupFamilySpec::Cyclic { n }) => {
            let mut classes = cyclic_order_classes(n);
            if classes.is_empty() {
                vec![vec![0]]
            } else {
                classes[0].insert(0, 0);
                classes
            }
        }
        (FamilyPartition::DihedralPower, &GroupFamilySpec::Dihedral { n }) => {
            let mut cells = vec![vec![0]];
            cells.extend((n as usize..2 * n as usize).map(|r| vec![r]));
            cells.extend(cyclic_order_classes(n));
            cells
        }
        _ => return Err(mismatch()),
    };
    Partition::new(cells, n_el)
}

/// Partition of the proper power graph of `Z_n` (vertex `k − 1` is element
/// `k`): the generators, then the elements of each order `d`, `1 < d < n`.
pub fn proper_cyclic_divisor_partition(n: u64) -> Result<Partition, PartitionError> {
    if n < 2 {
        return Err(PartitionError::NotAPartition("Z_1 has no non-identity elements".into()));
    }
    let cells = cyclic_order_classes(n)
        .into_iter()
        .map(|c| c.into_iter().map(|k| k - 1).collect())
        .collect();
    Partition::new(cells, n as usize - 1)
}
