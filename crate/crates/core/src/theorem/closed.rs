//! Closed-form characteristic polynomials, assembled as factor lists.

use num_bigint::BigInt;

use super::elab::{build_t1, middle_factor, ElabParams};
use super::{GraphKind, MatrixKind, TheoremError};
use crate::graph::{diameter, JoinSpec};
use crate::group::{gcd, is_prime};
use crate::linalg::{char_poly, FactoredPoly, IntMatrix, IntPolynomial};

/// Polynomial from ascending `i128` coefficients.
pub(crate) fn poly(coeffs: &[i128]) -> IntPolynomial {
    IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
}

pub(crate) fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<(), TheoremError> {
    if cond {
        Ok(())
    } else {
        Err(TheoremError::HypothesisViolated(msg()))
    }
}

pub(crate) fn check_gpq(p: u64, q: u64) -> Result<(), TheoremError> {
    require(is_prime(p), || format!("p = {p} is not prime"))?;
    require(is_prime(q), || format!("q = {q} is not prime"))?;
    require(p < q, || format!("need p < q, got p = {p}, q = {q}"))?;
    require((q - 1).is_multiple_of(p), || format!("p = {p} does not divide q - 1 = {}", q - 1))
}

pub(crate) fn check_n3(n: u64) -> Result<(), TheoremError> {
    require(n >= 3, || format!("need n >= 3, got n = {n}"))
}

/// Distance spectrum of the enhanced power graph of the non-abelian group
/// of order `pq`.
pub fn cf_epg_gpq_distance(p: u64, q: u64) -> Result<FactoredPoly, TheoremError> {
    check_gpq(p, q)?;
    let (p, q) = (p as i128, q as i128);
    let cubic = poly(&[
        -(p * q * q + p * q - p - q * q),
        -2 * p * q * q - 2 * p * q + 2 * q * q + 2 * p + 1,
        -2 * p * q + p + q + 2,
        1,
    ]);
    Ok(FactoredPoly::new()
        .with(IntPolynomial::x_plus(1), (p * q - q - 2) as u64)
        .with(IntPolynomial::x_plus(p), (q - 1) as u64)
        .with(cubic, 1))
}

/// `p^{q−1}·[p(q²+q−1) − q²]`, the absolute value of the distance
/// determinant of the same graph.
pub fn cf_epg_gpq_determinant(p: u64, q: u64) -> Result<BigInt, TheoremError> {
    check_gpq(p, q)?;
    let tail = BigInt::from(p * (q * q + q - 1) - q * q);
    Ok(num_traits::pow(BigInt::from(p), (q - 1) as usize) * tail)
}

pub fn cf_epg_dihedral_distance(n: u64) -> Result<FactoredPoly, TheoremError> {
    check_n3(n)?;
    let k = n as i128;
    let cubic = poly(&[-k * k - 2 * k + 2, -(2 * k * k + 4 * k - 5), -(3 * k - 4), 1]);
    Ok(FactoredPoly::new()
        .with(IntPolynomial::x_plus(2), n - 1)
        .with(IntPolynomial::x_plus(1), n - 2)
        .with(cubic, 1))
}

/// `(x+2)^{n−1}·[((4n+1)x + 2(n+1))·pz − n(2x+1)²·pzstar]` where `pz` and
/// `pzstar` are the distance characteristic polynomials of the power graph
/// of `Z_n` and of its proper power graph.
pub fn cf_pg_dihedral_distance_rhs(n: u64, pz: &IntPolynomial, pzstar: &IntPolynomial) -> IntPolynomial {
    let k = n as i128;
    let bracket = &(&poly(&[2 * (k + 1), 4 * k + 1]) * pz) - &(&poly(&[k, 4 * k, 4 * k]) * pzstar);
    &IntPolynomial::x_plus(2).pow(n - 1) * &bracket
}

pub fn cf_epg_dicyclic_distance(n: u64) -> Result<FactoredPoly, TheoremError> {
    check_n3(n)?;
    let k = n as i128;
    let cubic = poly(&[-(6 * k - 3), -(8 * k * k + 4 * k - 7), -(6 * k - 5), 1]);
    Ok(FactoredPoly::new()
        .with(IntPolynomial::x_plus(1), 3 * n - 2)
        .with(IntPolynomial::x_plus(3), n - 1)
        .with(cubic, 1))
}

/// Adjacency or distance spectrum of the power graph or enhanced power
/// graph of `El(pⁿ)×El(qᵐ)`.
pub fn cf_elab_product(
    p: u64,
    n: u32,
    q: u64,
    m: u32,
    graph: GraphKind,
    matrix: MatrixKind,
) -> Result<FactoredPoly, TheoremError> {
    let e = ElabParams::new(p, n, q, m)?;
    let t1 = build_t1(&e, graph, matrix)?;
    let (b, c) = e.b_c(matrix);
    let outer = (e.alpha + 1) * (e.beta + 1);
    Ok(FactoredPoly::new()
        .with(char_poly(&t1)?, 1)
        .with(IntPolynomial::x_plus(1), e.order - outer)
        .with(middle_factor(&e, matrix), (e.alpha - 1) * (e.beta - 1))
        .with(char_poly(&b)?, e.alpha - 1)
        .with(char_poly(&c)?, e.beta - 1))
}

pub(crate) fn check_elab(p: u64, n: u32) -> Result<(), TheoremError> {
    require(is_prime(p), || format!("p = {p} is not prime"))?;
    require(n >= 1, || "need n >= 1".into())
}

/// Distance spectrum of the enhanced power graph of `El(pⁿ)×Z_m`.
pub fn cf_elab_times_cyclic_distance(p: u64, n: u32, m: u64) -> Result<FactoredPoly, TheoremError> {
    check_elab(p, n)?;
    require(n >= 2, || format!("need n >= 2, got n = {n}"))?;
    require(m >= 1 && gcd(m, p) == 1, || format!("need gcd(m, p) = 1, got m = {m}, p = {p}"))?;
    let alpha = (p.pow(n) - 1) / (p - 1);
    let (pi, mi, pn) = (p as i128, m as i128, p.pow(n) as i128);
    let quad = poly(&[mi * mi * (pn - pi) - 2 * mi * pn + mi * pi + 1, mi * pi + 2 - 2 * mi * pn, 1]);
    Ok(FactoredPoly::new()
        .with(IntPolynomial::x_plus(mi * pi - mi + 1), alpha - 1)
        .with(IntPolynomial::x_plus(1), (m * p - m - 1) * alpha + m - 1)
        .with(quad, 1))
}

/// Distance spectrum of the power graph of `El(pⁿ)` (which is also its
/// enhanced power graph).
pub fn cf_elab_distance(p: u64, n: u32) -> Result<FactoredPoly, TheoremError> {
    check_elab(p, n)?;
    let alpha = (p.pow(n) - 1) / (p - 1);
    let (pi, pn) = (p as i128, p.pow(n) as i128);
    let quad = poly(&[-(pn - 1), -(2 * pn - pi - 2), 1]);
    Ok(FactoredPoly::new()
        .with(IntPolynomial::x_plus(pi), alpha - 1)
        .with(IntPolynomial::x_plus(1), (p - 2) * alpha)
        .with(quad, 1))
}

/// Distance characteristic polynomial of a join whose parts are all
/// complete: `φ(td)·Π(x+1)^{nᵢ−1}`, where `td` is the distance quotient
/// for the partition into parts.
pub fn cf_join_distance(spec: &JoinSpec, td: &IntMatrix) -> Result<IntPolynomial, TheoremError> {
    if let Some(i) = spec.parts().iter().position(|g| !g.is_complete()) {
        return Err(TheoremError::PartNotComplete(i));
    }
    let d = diameter(spec.outer())?;
    require(d <= 2, || format!("outer graph has diameter {d}"))?;
    require(td.rows() == spec.parts().len(), || {
        format!("quotient is {}x{} for {} parts", td.rows(), td.cols(), spec.parts().len())
    })?;
    let ones: usize = spec.part_sizes().iter().map(|s| s - 1).sum();
    Ok(&char_poly(td)? * &IntPolynomial::x_plus(1).pow(ones as u64))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gpq_examples() {
        let f = cf_epg_gpq_distance(2, 3).unwrap();
        assert_eq!(f.degree(), Some(6));
        assert_eq!(f.to_string(), "(x + 1)(x + 2)^2(x^3 - 5x^2 - 25x - 13)");
        let f = cf_epg_gpq_distance(3, 7).unwrap();
        assert_eq!(f.to_string(), "(x + 1)^12(x + 3)^6(x^3 - 30x^2 - 231x - 116)");
        assert_eq!(cf_epg_gpq_determinant(2, 3).unwrap(), BigInt::from(52));
        assert_eq!(cf_epg_gpq_determinant(3, 7).unwrap(), BigInt::from(84564));
        assert!(cf_epg_gpq_distance(3, 5).is_err());
        assert!(cf_epg_gpq_distance(3, 2).is_err());
        assert!(cf_epg_gpq_distance(4, 5).is_err());
    }

    #[test]
    fn dihedral_and_dicyclic_examples() {
        assert_eq!(cf_epg_dihedral_distance(3).unwrap().expand(), cf_epg_gpq_distance(2, 3).unwrap().expand());
        assert_eq!(
            cf_epg_dihedral_distance(4).unwrap().to_string(),
            "(x + 2)^3(x + 1)^2(x^3 - 8x^2 - 43x - 22)"
        );
        assert_eq!(
            cf_epg_dicyclic_distance(3).unwrap().to_string(),
            "(x + 1)^7(x + 3)^2(x^3 - 13x^2 - 77x - 15)"
        );
        assert!(cf_epg_dihedral_distance(2).is_err());
        assert!(cf_epg_dicyclic_distance(1).is_err());
    }

    #[test]
    fn elab_examples() {
        assert_eq!(cf_elab_distance(2, 2).unwrap().to_string(), "(x + 2)^2(x^2 - 4x - 3)");
        assert_eq!(cf_elab_distance(3, 2).unwrap().to_string(), "(x + 3)^3(x + 1)^4(x^2 - 13x - 8)");
        assert_eq!(cf_elab_times_cyclic_distance(2, 2, 3).unwrap().to_string(), "(x + 4)^2(x + 1)^8(x^2 - 16x + 1)");
        for (p, n) in [(2, 2), (2, 3), (3, 2), (5, 2)] {
            assert_eq!(
                cf_elab_times_cyclic_distance(p, n, 1).unwrap().expand(),
                cf_elab_distance(p, n).unwrap().expand()
            );
        }
        assert!(cf_elab_times_cyclic_distance(2, 2, 4).is_err());
        assert!(cf_elab_times_cyclic_distance(2, 1, 3).is_err());
    }

    #[test]
    fn elab_product_degree() {
        for graph in [GraphKind::Power, GraphKind::Enhanced] {
            for matrix in [MatrixKind::Adjacency, MatrixKind::Distance] {
                let f = cf_elab_product(2, 2, 3, 1, graph, matrix).unwrap();
                assert_eq!(f.degree(), Some(12));
                let x_plus_1 = f.factors().iter().find(|(g, _)| *g == IntPolynomial::x_plus(1));
                assert_eq!(x_plus_1.map(|(_, k)| *k), Some(4));
            }
        }
        assert!(cf_elab_product(2, 1, 2, 1, GraphKind::Power, MatrixKind::Adjacency).is_err());
    }

    #[test]
    fn pg_dihedral_rhs_n3() {
        // P(Z_3) = K_3 and P*(Z_3) = K_2
        let pz = poly(&[-2, 1]) * poly(&[1, 1]).pow(2);
        let pzstar = poly(&[-1, 1]) * poly(&[1, 1]);
        let rhs = cf_pg_dihedral_distance_rhs(3, &pz, &pzstar);
        assert_eq!(rhs.degree(), Some(6));
        assert!(rhs.is_monic());
    }
}
