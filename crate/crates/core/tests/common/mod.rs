//! Independent oracles shared by the integration tests. None of these call
//! into the library's algorithms beyond reading group tables.

#![allow(dead_code)]

use num_bigint::BigInt;
use powerspec::{FiniteGroup, Graph, IntMatrix, IntPolynomial};

/// `det(xI − m)` by cofactor expansion along the first row, with
/// polynomial entries. Exponential; only for small matrices.
pub fn cofactor_char_poly(m: &IntMatrix) -> IntPolynomial {
    let n = m.rows();
    let entries: Vec<Vec<IntPolynomial>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = IntPolynomial::constant(-m[(i, j)].clone());
                    if i == j {
                        &c + &IntPolynomial::x()
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect();
    cofactor_det(&entries)
}

fn cofactor_det(a: &[Vec<IntPolynomial>]) -> IntPolynomial {
    let n = a.len();
    if n == 0 {
        return IntPolynomial::one();
    }
    let mut total = IntPolynomial::zero();
    for col in 0..n {
        let minor: Vec<Vec<IntPolynomial>> = a[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(j, _)| j != col).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = &a[0][col] * &cofactor_det(&minor);
        total = if col % 2 == 0 { &total + &term } else { &total - &term };
    }
    total
}

/// Elements `a, a², …` until the identity comes round.
pub fn powers_of(g: &FiniteGroup, a: usize) -> Vec<usize> {
    let mut out = vec![0];
    let mut x = a;
    while x != 0 {
        out.push(x);
        x = g.mul(x, a);
    }
    out
}

/// Power graph straight from the definition.
pub fn brute_power_graph(g: &FiniteGroup) -> Graph {
    let n = g.order();
    let pw: Vec<Vec<usize>> = (0..n).map(|a| powers_of(g, a)).collect();
    let edges = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| pw[i].contains(&j) || pw[j].contains(&i));
    Graph::from_edges(n, edges.collect::<Vec<_>>()).unwrap()
}

/// Enhanced power graph by scanning every element as a possible common
/// generator.
pub fn brute_enhanced_power_graph(g: &FiniteGroup) -> Graph {
    let n = g.order();
    let pw: Vec<Vec<bool>> = (0..n)
        .map(|z| {
            let mut inside = vec![false; n];
            for x in powers_of(g, z) {
                inside[x] = true;
            }
            inside
        })
        .collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if pw.iter().any(|s| s[i] && s[j]) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// All-pairs distances by Floyd–Warshall, as a matrix.
pub fn floyd_distance_matrix(g: &Graph) -> IntMatrix {
    let n = g.vertex_count();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for i in 0..n {
        d[i][i] = 0;
        for &j in g.neighbors(i) {
            d[i][j] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    IntMatrix::from_fn(n, n, |i, j| BigInt::from(d[i][j]))
}

/// Every set partition of `0..n` (restricted growth strings).
pub fn all_set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    fn go(i: usize, n: usize, labels: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<Vec<usize>>>) {
        if i == n {
            let k = labels.iter().max().map_or(0, |m| m + 1);
            let mut cells = vec![Vec::new(); k];
            for (v, &l) in labels.iter().enumerate() {
                cells[l].push(v);
            }
            out.push(cells);
            return;
        }
        for l in 0..=max {
            labels.push(l);
            go(i + 1, n, labels, max.max(l + 1), out);
            labels.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(0, n, &mut Vec::new(), 0, &mut out);
    }
    out
}

/// Random 0/1 symmetric adjacency from a bit pattern.
pub fn graph_from_bits(n: usize, bits: u64) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if bits >> k & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}
