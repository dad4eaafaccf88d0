use serde::Serialize;

use crate::algebra::{int, ratio, Polynomial, Scalar};

/// A homaloidal polynomial together with a candidate transform `F*`,
/// stored as a quotient of polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub name: String,
    #[serde(serialize_with = "crate::report::polynomial")]
    pub f: Polynomial,
    pub nvars: usize,
    pub degree: u32,
    #[serde(serialize_with = "crate::report::polynomial")]
    pub fstar_numerator: Polynomial,
    #[serde(serialize_with = "crate::report::polynomial")]
    pub fstar_denominator: Polynomial,
    #[serde(serialize_with = "optional_scalar")]
    pub scale_hint: Option<Scalar>,
}

fn optional_scalar<S: serde::Serializer>(c: &Option<Scalar>, s: S) -> Result<S::Ok, S::Error> {
    match c {
        Some(c) => crate::report::scalar(c, s),
        None => s.serialize_none(),
    }
}

impl CatalogEntry {
    /// Entry with `F* = F`.
    pub fn self_dual(name: impl Into<String>, f: Polynomial, scale_hint: Option<Scalar>) -> Self {
        let n = f.nvars();
        CatalogEntry {
            name: name.into(),
            nvars: n,
            degree: f.degree().unwrap_or(0),
            fstar_numerator: f.clone(),
            fstar_denominator: Polynomial::one(n),
            f,
            scale_hint,
        }
    }

    pub fn has_polynomial_transform(&self) -> bool {
        self.fstar_denominator.is_constant()
    }
}

/// `x0^2 + ... + x_n^2`.
pub fn quadric(n: usize) -> Polynomial {
    (0..=n).fold(Polynomial::zero(n + 1), |acc, i| acc + Polynomial::var(i, n + 1).pow(2))
}

/// Determinant of the 3x3 matrix with entries `x_{3i+j}`.
pub fn det3() -> Polynomial {
    let a = |i: usize, j: usize| Polynomial::var(3 * i + j, 9);
    let minor = |r: usize, c0: usize, c1: usize| &(&a(r, c0) * &a(r + 1, c1)) - &(&a(r, c1) * &a(r + 1, c0));
    &(&(&a(0, 0) * &minor(1, 1, 2)) - &(&a(0, 1) * &minor(1, 0, 2))) + &(&a(0, 2) * &minor(1, 0, 1))
}

/// Index of the variable `a_ij` (`i < j`) of a `2m x 2m` skew matrix, ordered
/// `a_01, a_02, ..., a_12, ...`.
pub fn skew_index(size: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < size);
    i * size - i * (i + 1) / 2 + (j - i - 1)
}

/// Pfaffian of the generic `size x size` skew matrix, normalized so the
/// block-diagonal sum of `[[0, 1], [-1, 0]]` has Pfaffian one.
pub fn pfaffian(size: usize) -> Polynomial {
    assert!(size % 2 == 0 && size > 0, "pfaffian needs an even size");
    let nvars = size * (size - 1) / 2;
    let rows: Vec<usize> = (0..size).collect();
    pfaffian_of(&rows, size, nvars)
}

fn pfaffian_of(rows: &[usize], size: usize, nvars: usize) -> Polynomial {
    if rows.is_empty() {
        return Polynomial::one(nvars);
    }
    let first = rows[0];
    let mut out = Polynomial::zero(nvars);
    for (pos, &j) in rows.iter().enumerate().skip(1) {
        let rest: Vec<usize> = rows.iter().copied().filter(|&r| r != first && r != j).collect();
        let term = &Polynomial::var(skew_index(size, first, j), nvars) * &pfaffian_of(&rest, size, nvars);
        out = if pos % 2 == 1 { out + term } else { out - term };
    }
    out
}

/// The built-in entries: quadrics in 2 to 6 variables, the product of
/// coordinates, the 3x3 determinant, the 6x6 Pfaffian, and a conic with a
/// tangent line, whose transform is rational.
pub fn catalog() -> Vec<CatalogEntry> {
    let mut out: Vec<CatalogEntry> = (1..=5)
        .map(|n| CatalogEntry::self_dual(format!("quadric-{n}"), quadric(n), Some(ratio(1, 4))))
        .collect();
    let x = |i| Polynomial::var(i, 3);
    out.push(CatalogEntry::self_dual("triple-product", &(&x(0) * &x(1)) * &x(2), None));
    out.push(CatalogEntry::self_dual("det3", det3(), None));
    out.push(CatalogEntry::self_dual("pfaffian6", pfaffian(6), None));
    let conic = &(&x(0) * &x(2)) + &x(1).pow(2);
    let dual_conic = &(&x(0) * &x(2)).scale(&int(4)) + &x(1).pow(2);
    out.push(CatalogEntry {
        name: "conic-plus-tangent".into(),
        f: &x(0) * &conic,
        nvars: 3,
        degree: 3,
        fstar_numerator: dual_conic.pow(2),
        fstar_denominator: x(2),
        scale_hint: None,
    });
    out
}

pub fn catalog_entry(name: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.name == name)
}
