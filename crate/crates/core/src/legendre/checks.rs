use crate::algebra::{divides, hessian_det, Polynomial};
use crate::error::{Error, Result};

/// Whether the degree `k` of `F` divides `2(n+1)`, `n+1` the number of
/// variables. Only meaningful for `k > 2`.
pub fn degree_divisibility_check(f: &Polynomial) -> Result<bool> {
    let k = f.degree().ok_or(Error::ZeroPolynomial)?;
    if k <= 2 {
        return Err(Error::DegreePrecondition(format!(
            "degree must exceed 2, got {k}"
        )));
    }
    Ok((2 * f.nvars() as u32) % k == 0)
}

/// Whether `F` divides its Hessian determinant.
pub fn hessian_divisibility_check(f: &Polynomial) -> Result<bool> {
    let k = f.degree().ok_or(Error::ZeroPolynomial)?;
    if k <= 2 {
        return Err(Error::DegreePrecondition(format!(
            "degree must exceed 2, got {k}"
        )));
    }
    divides(f, &hessian_det(f))
}

type Matrix = Vec<Vec<Polynomial>>;

fn adjugate(m: &Matrix) -> Matrix {
    let cofactor = |i: usize, j: usize| {
        let r: Vec<usize> = (0..3).filter(|&x| x != i).collect();
        let c: Vec<usize> = (0..3).filter(|&x| x != j).collect();
        let minor = &(&m[r[0]][c[0]] * &m[r[1]][c[1]]) - &(&m[r[0]][c[1]] * &m[r[1]][c[0]]);
        if (i + j) % 2 == 0 {
            minor
        } else {
            -minor
        }
    };
    (0..3).map(|i| (0..3).map(|j| cofactor(j, i)).collect()).collect()
}

/// Symbolic check, over the nine entries of a generic 3x3 matrix `A`, that
/// the gradient of `det` is the transposed adjugate and that
/// `adj(adj(A)) = det(A) A`.
pub fn adjugate_involution_check() -> bool {
    let a: Matrix = (0..3)
        .map(|i| (0..3).map(|j| Polynomial::var(3 * i + j, 9)).collect())
        .collect();
    let det = super::det3();
    let adj = adjugate(&a);
    let grad = det.gradient();
    let gradient_is_cofactor = (0..3).all(|i| (0..3).all(|j| grad[3 * i + j] == adj[j][i]));
    let twice = adjugate(&adj);
    let involution = (0..3).all(|i| (0..3).all(|j| twice[i][j] == &det * &a[i][j]));
    gradient_is_cofactor && involution
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;
    use crate::parse::parse_poly_in;

    fn p(s: &str) -> Polynomial {
        parse_poly_in(s, 3).unwrap().poly
    }

    #[test]
    fn degree_divisibility() {
        assert_eq!(degree_divisibility_check(&p("x0*x1*x2")), Ok(true));
        assert_eq!(degree_divisibility_check(&super::super::det3()), Ok(true));
        assert_eq!(degree_divisibility_check(&p("x0^4 + x1^4 + x2^4")), Ok(false));
        assert!(degree_divisibility_check(&p("x0^2 + x1*x2")).is_err());
    }

    #[test]
    fn hessian_divisibility() {
        assert_eq!(hessian_divisibility_check(&p("x0*x1*x2")), Ok(true));
        assert_eq!(hessian_divisibility_check(&p("x0*(x0*x2 + x1^2)")), Ok(false));
        assert!(hessian_divisibility_check(&p("x0^2 + x1^2 + x2^2")).is_err());
    }

    #[test]
    fn adjugate_samples() {
        let c = |v: i64| Polynomial::from_int(v, 1);
        let diag = |a: i64, b: i64, d: i64| -> Matrix {
            vec![vec![c(a), c(0), c(0)], vec![c(0), c(b), c(0)], vec![c(0), c(0), c(d)]]
        };
        assert_eq!(adjugate(&diag(1, 1, 1)), diag(1, 1, 1));
        assert_eq!(adjugate(&diag(1, 2, 3)), diag(6, 3, 2));
        assert_eq!(adjugate(&adjugate(&diag(1, 2, 3))), diag(6, 12, 18));
        assert_eq!(c(6).eval(&[int(0)]), int(6));
    }

    #[test]
    fn symbolic_involution() {
        assert!(adjugate_involution_check());
    }
}
