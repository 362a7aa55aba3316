//! Quotient matrices and eigenvector families for `El(pⁿ)×El(qᵐ)`.
//!
//! The coarse partition has cells `V₁ = {e}`, `V₂` (first coordinate
//! nontrivial only), `V₃` (both nontrivial), `V₄` (second only); `T₁` is its
//! 4×4 quotient. The fine partition splits `V₂`, `V₃`, `V₄` along the
//! `α = (pⁿ−1)/(p−1)` order-`p` and `β = (qᵐ−1)/(q−1)` order-`q`
//! subgroups, giving the `(1+α+αβ+β)`-dimensional quotient `T₂`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::closed::{check_elab, require};
use super::{GraphKind, MatrixKind, TheoremError};
use crate::linalg::{IntMatrix, IntPolynomial};

/// Validated parameters with the derived counts `α`, `β`, `γ = αβ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ElabParams {
    pub p: u64,
    pub n: u32,
    pub q: u64,
    pub m: u32,
    pub alpha: u64,
    pub beta: u64,
    pub gamma: u64,
    pub order: u64,
}

impl ElabParams {
    pub fn new(p: u64, n: u32, q: u64, m: u32) -> Result<Self, TheoremError> {
        check_elab(p, n)?;
        check_elab(q, m)?;
        require(p != q, || format!("need distinct primes, got p = q = {p}"))?;
        let alpha = (p.pow(n) - 1) / (p - 1);
        let beta = (q.pow(m) - 1) / (q - 1);
        Ok(ElabParams { p, n, q, m, alpha, beta, gamma: alpha * beta, order: p.pow(n) * q.pow(m) })
    }

    /// `B` and `C`, the 2×2 matrices whose characteristic polynomials carry
    /// multiplicities `α−1` and `β−1`.
    pub fn b_c(&self, matrix: MatrixKind) -> (IntMatrix, IntMatrix) {
        let (p, q) = (self.p as i128, self.q as i128);
        let pn = self.p.pow(self.n) as i128;
        let qm = self.q.pow(self.m) as i128;
        match matrix {
            MatrixKind::Adjacency => (
                IntMatrix::from_rows(&[vec![p - 2, (p - 1) * (qm - 1)], vec![p - 1, (p - 1) * (q - 1) - 1]]),
                IntMatrix::from_rows(&[vec![(p - 1) * (q - 1) - 1, q - 1], vec![(pn - 1) * (q - 1), q - 2]]),
            ),
            MatrixKind::Distance => (
                IntMatrix::from_rows(&[vec![-p, (1 - p) * (qm - 1)], vec![1 - p, (1 - p) * (q - 1) - 1]]),
                IntMatrix::from_rows(&[vec![(p - 1) * (1 - q) - 1, 1 - q], vec![(pn - 1) * (1 - q), -q]]),
            ),
        }
    }

    /// Eigenvalue of the structured eigenvectors `y_{i,j}`.
    pub fn structured_eigenvalue(&self, matrix: MatrixKind) -> BigInt {
        let (p, q) = (self.p as i128, self.q as i128);
        BigInt::from(match matrix {
            MatrixKind::Adjacency => p * q - p - q,
            MatrixKind::Distance => -((p - 1) * (q - 1) + 1),
        })
    }

    /// Dimension of `T₂`.
    pub fn t2_dim(&self) -> usize {
        (1 + self.alpha + self.gamma + self.beta) as usize
    }
}

/// The linear factor raised to `(α−1)(β−1)`.
pub fn middle_factor(e: &ElabParams, matrix: MatrixKind) -> IntPolynomial {
    let (p, q) = (e.p as i128, e.q as i128);
    IntPolynomial::x_plus(match matrix {
        MatrixKind::Adjacency => -p * q + p + q,
        MatrixKind::Distance => (p - 1) * (q - 1) + 1,
    })
}

fn check_graph(graph: GraphKind) -> Result<(), TheoremError> {
    require(graph != GraphKind::ProperPower, || "proper power graphs are not covered here".into())
}

pub fn build_t1(e: &ElabParams, graph: GraphKind, matrix: MatrixKind) -> Result<IntMatrix, TheoremError> {
    check_graph(graph)?;
    let (p, q) = (e.p as i128, e.q as i128);
    let pn = e.p.pow(e.n) as i128;
    let qm = e.q.pow(e.m) as i128;
    let gamma = e.gamma as i128;
    let epg = graph == GraphKind::Enhanced;
    let first = vec![0, pn - 1, (pn - 1) * (qm - 1), qm - 1];
    let rows = match matrix {
        MatrixKind::Adjacency => vec![
            first,
            vec![1, p - 2, (p - 1) * (qm - 1), if epg { qm - 1 } else { 0 }],
            vec![1, p - 1, (p - 1) * (q - 1) - 1, q - 1],
            vec![1, if epg { pn - 1 } else { 0 }, (pn - 1) * (q - 1), q - 2],
        ],
        MatrixKind::Distance if !epg => vec![
            first,
            vec![1, 2 * pn - p - 2, (2 * pn - p - 1) * (qm - 1), 2 * (qm - 1)],
            vec![1, 2 * pn - p - 1, 2 * (pn - 1) * (qm - 1) - (p - 1) * (q - 1) - 1, 2 * qm - q - 1],
            vec![1, 2 * (pn - 1), (pn - 1) * (2 * qm - q - 1), 2 * qm - q - 2],
        ],
        MatrixKind::Distance => vec![
            first,
            vec![1, 2 * pn - p - 2, (2 * pn - p - 1) * (qm - 1), qm - 1],
            vec![1, 2 * pn - p - 1, (p - 1) * (q - 1) * (2 * gamma - 1) - 1, 2 * qm - q - 1],
            vec![1, pn - 1, (pn - 1) * (2 * qm - q - 1), 2 * qm - q - 2],
        ],
    };
    Ok(IntMatrix::from_rows(&rows))
}

fn s(k: i128) -> BigInt {
    BigInt::from(k)
}

/// `2J − I`.
fn two_j_minus_i(k: usize) -> IntMatrix {
    IntMatrix::from_fn(k, k, |i, j| s(if i == j { 1 } else { 2 }))
}

/// `a·X − b·J` for square `X`.
fn comb(a: i128, x: &IntMatrix, b: i128) -> IntMatrix {
    let k = x.rows();
    x.scale(&s(a)).sub(&IntMatrix::ones(k, k).scale(&s(b))).expect("same shape")
}

pub fn build_t2(e: &ElabParams, graph: GraphKind, matrix: MatrixKind) -> Result<IntMatrix, TheoremError> {
    check_graph(graph)?;
    let (p, q) = (e.p as i128, e.q as i128);
    let (a, b, g) = (e.alpha as usize, e.beta as usize, e.gamma as usize);
    let epg = graph == GraphKind::Enhanced;
    let pq1 = (p - 1) * (q - 1);
    let ones = IntMatrix::ones;
    let id = IntMatrix::identity;
    let zeros = IntMatrix::zeros;
    let ia_1b = id(a).kron(&ones(b, 1));
    let ia_1bt = id(a).kron(&ones(1, b));
    let top = vec![
        zeros(1, 1),
        ones(1, a).scale(&s(p - 1)),
        ones(1, g).scale(&s(pq1)),
        ones(1, b).scale(&s(q - 1)),
    ];
    let (vx, xv) = if epg {
        (ones(a, b).scale(&s(q - 1)), ones(b, a).scale(&s(p - 1)))
    } else {
        match matrix {
            MatrixKind::Adjacency => (zeros(a, b), zeros(b, a)),
            MatrixKind::Distance => (ones(a, b).scale(&s(2 * (q - 1))), ones(b, a).scale(&s(2 * (p - 1)))),
        }
    };
    let grid = match matrix {
        MatrixKind::Adjacency => vec![
            top,
            vec![ones(a, 1), id(a).scale(&s(p - 2)), ia_1bt.scale(&s(pq1)), vx],
            vec![ones(g, 1), ia_1b.scale(&s(p - 1)), id(g).scale(&s(pq1 - 1)), ones(a, 1).kron(&id(b)).scale(&s(q - 1))],
            vec![ones(b, 1), xv, ones(1, a).kron(&id(b)).scale(&s(pq1)), id(b).scale(&s(q - 2))],
        ],
        MatrixKind::Distance => {
            let ja = two_j_minus_i(a);
            let jb = two_j_minus_i(b);
            let jg = two_j_minus_i(g);
            vec![
                top,
                vec![ones(a, 1), comb(p, &ja, 2), ja.kron(&ones(1, b)).scale(&s(pq1)), vx],
                vec![
                    ones(g, 1),
                    ja.kron(&ones(b, 1)).scale(&s(p - 1)),
                    jg.scale(&s(pq1)).sub(&id(g)).expect("same shape"),
                    ones(a, 1).kron(&jb).scale(&s(q - 1)),
                ],
                vec![ones(b, 1), xv, ones(1, a).kron(&jb).scale(&s(pq1)), comb(q, &jb, 2)],
            ]
        }
    };
    Ok(IntMatrix::block(&grid)?)
}

pub fn build_t1_t2(
    p: u64,
    n: u32,
    q: u64,
    m: u32,
    graph: GraphKind,
    matrix: MatrixKind,
) -> Result<(IntMatrix, IntMatrix), TheoremError> {
    let e = ElabParams::new(p, n, q, m)?;
    Ok((build_t1(&e, graph, matrix)?, build_t2(&e, graph, matrix)?))
}

/// Outcome of checking the eigenvector families against `T₂`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EigenCheck {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl EigenCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

/// `e_i − e_last` in dimension `k`.
fn diff_vec(k: usize, i: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); k];
    v[i] += 1;
    v[k - 1] -= 1;
    v
}

fn kron_vec(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    a.iter().flat_map(|x| b.iter().map(move |y| x * y)).collect()
}

fn scaled(v: &[BigInt], k: &BigInt) -> Vec<BigInt> {
    v.iter().map(|x| x * k).collect()
}

fn ones_vec(k: usize) -> Vec<BigInt> {
    vec![BigInt::from(1); k]
}

/// Concatenates the four block components of a `T₂` vector.
fn stack(u: BigInt, v: Vec<BigInt>, w: Vec<BigInt>, x: Vec<BigInt>) -> Vec<BigInt> {
    let mut out = vec![u];
    out.extend(v);
    out.extend(w);
    out.extend(x);
    out
}

/// Checks, exactly, against `t2`:
/// - `T₂·y_{i,j} = λ·y_{i,j}` for `y_{i,j} = (0, 0, vⁱ⊗wʲ, 0)`, all
///   `i < α−1`, `j < β−1`, where `vⁱ = e_i − e_α` and `wʲ = e_j − e_β`;
/// - `T₂·(0, x₁vⁱ, x₂vⁱ⊗1_β, 0) = (0, y₁vⁱ, y₂vⁱ⊗1_β, 0)` with `y = Bx`;
/// - `T₂·(0, 0, x₁1_α⊗wʲ, x₂wʲ) = (0, 0, y₁1_α⊗wʲ, y₂wʲ)` with `y = Cx`;
/// - `T₂` maps vectors constant on the coarse cells as `T₁` does.
pub fn check_structured_eigenvectors(
    e: &ElabParams,
    graph: GraphKind,
    matrix: MatrixKind,
) -> Result<EigenCheck, TheoremError> {
    let t1 = build_t1(e, graph, matrix)?;
    let t2 = build_t2(e, graph, matrix)?;
    let (b, c) = e.b_c(matrix);
    let (a, bb, g) = (e.alpha as usize, e.beta as usize, e.gamma as usize);
    let lambda = e.structured_eigenvalue(matrix);
    let zero = BigInt::zero;
    let mut out = EigenCheck::default();

    for i in 0..a.saturating_sub(1) {
        let v = diff_vec(a, i);
        for j in 0..bb.saturating_sub(1) {
            let w = diff_vec(bb, j);
            let y = stack(zero(), vec![zero(); a], kron_vec(&v, &w), vec![zero(); bb]);
            let ty = t2.mul_vec(&y)?;
            out.record(ty == scaled(&y, &lambda), || format!("y_({i},{j}) is not an eigenvector"));
        }
    }

    let basis = [[1, 0], [0, 1]].map(|r| r.map(BigInt::from));
    for x in &basis {
        let bx = b.mul_vec(x)?;
        for i in 0..a.saturating_sub(1) {
            let v = diff_vec(a, i);
            let z = |x: &[BigInt]| {
                stack(zero(), scaled(&v, &x[0]), kron_vec(&scaled(&v, &x[1]), &ones_vec(bb)), vec![zero(); bb])
            };
            out.record(t2.mul_vec(&z(x))? == z(&bx), || format!("B-family vector {i} is not mapped by B"));
        }
        let cx = c.mul_vec(x)?;
        for j in 0..bb.saturating_sub(1) {
            let w = diff_vec(bb, j);
            let z = |x: &[BigInt]| {
                stack(zero(), vec![zero(); a], kron_vec(&ones_vec(a), &scaled(&w, &x[0])), scaled(&w, &x[1]))
            };
            out.record(t2.mul_vec(&z(x))? == z(&cx), || format!("C-family vector {j} is not mapped by C"));
        }
    }

    let lift = |x: &[BigInt]| stack(x[0].clone(), vec![x[1].clone(); a], vec![x[2].clone(); g], vec![x[3].clone(); bb]);
    for k in 0..4 {
        let mut x = vec![zero(); 4];
        x[k] = BigInt::from(1);
        let t1x = t1.mul_vec(&x)?;
        out.record(t2.mul_vec(&lift(&x))? == lift(&t1x), || format!("lift of coarse basis vector {k} disagrees with T1"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_counts() {
        let e = ElabParams::new(2, 2, 3, 2).unwrap();
        assert_eq!((e.alpha, e.beta, e.gamma, e.order), (3, 4, 12, 36));
        assert_eq!(e.t2_dim(), 20);
        assert!(ElabParams::new(2, 2, 2, 1).is_err());
        assert!(ElabParams::new(4, 1, 3, 1).is_err());
    }

    #[test]
    fn t1_pg_adjacency_for_4_by_9() {
        let e = ElabParams::new(2, 2, 3, 2).unwrap();
        let t1 = build_t1(&e, GraphKind::Power, MatrixKind::Adjacency).unwrap();
        assert_eq!(
            t1,
            IntMatrix::from_rows(&[vec![0, 3, 24, 8], vec![1, 0, 8, 0], vec![1, 1, 1, 2], vec![1, 0, 6, 1]])
        );
    }

    #[test]
    fn t2_shapes_and_row_sums() {
        let e = ElabParams::new(2, 2, 3, 2).unwrap();
        for graph in [GraphKind::Power, GraphKind::Enhanced] {
            let t2 = build_t2(&e, graph, MatrixKind::Adjacency).unwrap();
            assert_eq!(t2.rows(), 20);
            // row sums are vertex degrees; the identity row sums to |G| − 1
            let total: BigInt = t2.row(0).iter().sum();
            assert_eq!(total, BigInt::from(35));
        }
    }

    #[test]
    fn eigen_families_hold() {
        for (p, n, q, m) in [(2, 2, 3, 2), (3, 1, 2, 2), (2, 3, 3, 1)] {
            let e = ElabParams::new(p, n, q, m).unwrap();
            for graph in [GraphKind::Power, GraphKind::Enhanced] {
                for matrix in [MatrixKind::Adjacency, MatrixKind::Distance] {
                    let check = check_structured_eigenvectors(&e, graph, matrix).unwrap();
                    assert!(check.passed(), "{:?}", check.failures);
                    assert!(check.checked >= 4);
                }
            }
        }
    }

    #[test]
    fn proper_power_rejected() {
        let e = ElabParams::new(2, 1, 3, 1).unwrap();
        assert!(build_t1(&e, GraphKind::ProperPower, MatrixKind::Adjacency).is_err());
    }
}
