//! Explicit join decompositions `Γ[K_{n₁}, …, K_{n_k}]` of the graphs in
//! each family. The outer graph is built from the group structure, not
//! read off the graph, so `verify_join_form` is a genuine check.

use super::closed::require;
use super::{GraphKind, TheoremError};
use crate::graph::{figure1_gamma, figure1_gamma_prime, Graph, JoinSpec};
use crate::group::{totient_and_divisors, FiniteGroup, GroupFamilySpec};
use crate::partition::{family_partition, proper_cyclic_divisor_partition, FamilyPartition, Partition};

/// Graph on the divisors `d` of `n` with `1 < d < n` (ascending), with
/// `dᵢ ~ dⱼ` when one divides the other.
pub fn divisor_graph(n: u64) -> Graph {
    let (_, divisors) = totient_and_divisors(n);
    let edges = (0..divisors.len())
        .flat_map(|i| (i + 1..divisors.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| divisors[j] % divisors[i] == 0)
        .collect::<Vec<_>>();
    Graph::from_edges(divisors.len(), edges).expect("edges in range")
}

fn complete_join(outer: Graph, partition: Partition) -> Result<(JoinSpec, Partition), TheoremError> {
    let spec = JoinSpec::complete_parts(outer, &partition.sizes())?;
    Ok((spec, partition))
}

/// `(K₁ + Δ_n)[K_{φ(n)}, K_{φ(d₁)}, …]` for the proper power graph of
/// `Z_n`, with the partition whose flattening is the natural bijection.
pub fn proper_cyclic_join_form(n: u64) -> Result<(JoinSpec, Partition), TheoremError> {
    require(n >= 2, || format!("need n >= 2, got n = {n}"))?;
    complete_join(divisor_graph(n).cone(), proper_cyclic_divisor_partition(n)?)
}

/// Join form of the power graph (`GraphKind::Power`), enhanced power graph
/// (`GraphKind::Enhanced`) or proper power graph (`GraphKind::ProperPower`,
/// cyclic groups only) of a family group. Reading the partition's cells in
/// order gives the vertex of `g` for each join vertex.
pub fn join_form(g: &FiniteGroup, kind: GraphKind) -> Result<(JoinSpec, Partition), TheoremError> {
    let unsupported = || TheoremError::HypothesisViolated(format!("no join form for this group and graph kind {kind:?}"));
    let family = g.family().ok_or_else(unsupported)?;
    let part = |which| family_partition(g, which);
    match (family, kind) {
        (GroupFamilySpec::Gpq { q, .. }, GraphKind::Power | GraphKind::Enhanced) => {
            complete_join(Graph::star(*q as usize + 1), part(FamilyPartition::GpqSylow)?)
        }
        (GroupFamilySpec::Dihedral { n }, GraphKind::Enhanced) => {
            complete_join(Graph::star(*n as usize + 1), part(FamilyPartition::Dihedral)?)
        }
        (GroupFamilySpec::Dihedral { n }, GraphKind::Power) => {
            // identity hub, n isolated reflections, then the rotation classes
            // joined as in the cyclic case
            let n = *n as usize;
            let rot = divisor_graph(n as u64).cone();
            let k = rot.vertex_count();
            let mut edges: Vec<(usize, usize)> = (1..=n + k).map(|v| (0, v)).collect();
            edges.extend(rot.edges().into_iter().map(|(u, v)| (n + 1 + u, n + 1 + v)));
            complete_join(Graph::from_edges(n + k + 1, edges)?, part(FamilyPartition::DihedralPower)?)
        }
        (GroupFamilySpec::Dicyclic { n }, GraphKind::Enhanced) => {
            complete_join(Graph::star(*n as usize + 1), part(FamilyPartition::Dicyclic)?)
        }
        (GroupFamilySpec::Dicyclic { n }, GraphKind::Power) if n.is_power_of_two() => {
            complete_join(Graph::star(*n as usize + 1), part(FamilyPartition::Dicyclic)?)
        }
        (GroupFamilySpec::Cyclic { n }, GraphKind::Power) => {
            let partition = part(FamilyPartition::CyclicDivisor)?;
            let outer = if partition.len() == 1 { Graph::complete(1) } else { divisor_graph(*n).cone() };
            complete_join(outer, partition)
        }
        (GroupFamilySpec::Cyclic { n }, GraphKind::ProperPower) => proper_cyclic_join_form(*n),
        (GroupFamilySpec::DirectProduct { left, right }, GraphKind::Power | GraphKind::Enhanced) => {
            match (left.as_ref(), right.as_ref()) {
                (GroupFamilySpec::ElementaryAbelian { p, n }, GroupFamilySpec::ElementaryAbelian { p: q, n: m }) => {
                    let alpha = ((p.pow(*n) - 1) / (p - 1)) as usize;
                    let beta = ((q.pow(*m) - 1) / (q - 1)) as usize;
                    let gamma = if kind == GraphKind::Power {
                        figure1_gamma(alpha, beta)
                    } else {
                        figure1_gamma_prime(alpha, beta)
                    };
                    complete_join(gamma.cone(), part(FamilyPartition::ElabProductFine)?)
                }
                (GroupFamilySpec::ElementaryAbelian { p, n }, GroupFamilySpec::Cyclic { .. }) if kind == GraphKind::Enhanced => {
                    let alpha = ((p.pow(*n) - 1) / (p - 1)) as usize;
                    complete_join(Graph::star(alpha), part(FamilyPartition::ElabTimesCyclic)?)
                }
                _ => Err(unsupported()),
            }
        }
        _ => Err(unsupported()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{enhanced_power_graph, power_graph, proper_power_graph, verify_join_form};
    use crate::group::make_group;

    fn holds(spec: GroupFamilySpec, kind: GraphKind) -> bool {
        let g = make_group(&spec).unwrap();
        let graph = match kind {
            GraphKind::Power => power_graph(&g),
            GraphKind::Enhanced => enhanced_power_graph(&g),
            GraphKind::ProperPower => proper_power_graph(&g),
        };
        let (join, part) = join_form(&g, kind).unwrap();
        verify_join_form(&graph, &join, &part.flatten()).unwrap()
    }

    #[test]
    fn divisor_graph_of_12() {
        // divisors 2, 3, 4, 6
        let d = divisor_graph(12);
        assert_eq!(d.edges(), vec![(0, 2), (0, 3), (1, 3)]);
        assert_eq!(divisor_graph(7).vertex_count(), 0);
    }

    #[test]
    fn join_forms_hold() {
        assert!(holds(GroupFamilySpec::Gpq { p: 2, q: 3 }, GraphKind::Enhanced));
        assert!(holds(GroupFamilySpec::Gpq { p: 3, q: 7 }, GraphKind::Power));
        assert!(holds(GroupFamilySpec::Dihedral { n: 6 }, GraphKind::Enhanced));
        assert!(holds(GroupFamilySpec::Dihedral { n: 12 }, GraphKind::Power));
        assert!(holds(GroupFamilySpec::Dicyclic { n: 3 }, GraphKind::Enhanced));
        assert!(holds(GroupFamilySpec::Dicyclic { n: 4 }, GraphKind::Power));
        assert!(holds(GroupFamilySpec::Cyclic { n: 12 }, GraphKind::Power));
        assert!(holds(GroupFamilySpec::Cyclic { n: 7 }, GraphKind::Power));
        assert!(holds(GroupFamilySpec::Cyclic { n: 30 }, GraphKind::ProperPower));
        assert!(holds(GroupFamilySpec::elab_times_cyclic(2, 2, 3), GraphKind::Enhanced));
        assert!(holds(GroupFamilySpec::elab_product(2, 2, 3, 2), GraphKind::Power));
        assert!(holds(GroupFamilySpec::elab_product(2, 2, 3, 2), GraphKind::Enhanced));
    }

    #[test]
    fn wrong_kind_is_not_a_join_form() {
        // the power graph of El(4)×El(9) lacks the edges the enhanced form adds
        let g = make_group(&GroupFamilySpec::elab_product(2, 2, 3, 2)).unwrap();
        let (join, part) = join_form(&g, GraphKind::Enhanced).unwrap();
        assert!(!verify_join_form(&power_graph(&g), &join, &part.flatten()).unwrap());
        assert!(join_form(&g, GraphKind::ProperPower).is_err());
        let d = make_group(&GroupFamilySpec::Dicyclic { n: 3 }).unwrap();
        assert!(join_form(&d, GraphKind::Power).is_err());
    }
}
