//! Determinants of polynomial matrices (fraction-free elimination).

use crate::algebra::fp::PrimeField;
use crate::algebra::poly::Poly;

/// Bareiss elimination; every intermediate division is exact.
pub fn det<F: PrimeField>(m: &[Vec<Poly<F>>], nvars: usize) -> Poly<F> {
    let n = m.len();
    if n == 0 {
        return Poly::one(nvars);
    }
    let mut a: Vec<Vec<Poly<F>>> = m.to_vec();
    let mut sign = F::one();
    let mut prev = Poly::one(nvars);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Poly::zero(nvars),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = t.exact_divide(&prev).expect("Bareiss step divides exactly");
            }
            a[i][k] = Poly::zero(nvars);
        }
        prev = a[k][k].clone();
    }
    a[n - 1][n - 1].scale(sign)
}

/// Determinant with row `row` replaced by `replacement` (Cramer numerators).
pub fn det_row_replaced<F: PrimeField>(m: &[Vec<Poly<F>>], row: usize, replacement: &[Poly<F>], nvars: usize) -> Poly<F> {
    let mut a = m.to_vec();
    a[row] = replacement.to_vec();
    det(&a, nvars)
}

/// Laplace expansion along the first row. Exponential; kept as an
/// independent reference for [`det`] on small matrices.
pub fn det_cofactor<F: PrimeField>(m: &[Vec<Poly<F>>], nvars: usize) -> Poly<F> {
    let n = m.len();
    if n == 0 {
        return Poly::one(nvars);
    }
    let mut acc = Poly::zero(nvars);
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly<F>>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = m[0][j].mul(&det_cofactor(&minor, nvars));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// Upper or lower triangular (all off-diagonal entries on one side zero).
pub fn is_triangular<F: PrimeField>(m: &[Vec<Poly<F>>]) -> bool {
    let n = m.len();
    let upper = (0..n).all(|i| (0..i).all(|j| m[i][j].is_zero()));
    let lower = (0..n).all(|i| (i + 1..n).all(|j| m[i][j].is_zero()));
    upper || lower
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fp::Fp;
    use crate::algebra::parse::parse_poly;

    type F5 = Fp<5>;

    fn p(s: &str) -> Poly<F5> {
        parse_poly(s, &["x".to_string(), "y".to_string()]).unwrap()
    }

    #[test]
    fn small_determinants() {
        let m = vec![vec![p("x"), p("y")], vec![p("1"), p("x")]];
        assert_eq!(det(&m, 2), p("x^2 - y"));
        let pivot = vec![vec![p("0"), p("1")], vec![p("1"), p("0")]];
        assert_eq!(det(&pivot, 2), p("-1"));
        let m3 = vec![
            vec![p("x"), p("1"), p("0")],
            vec![p("0"), p("x"), p("y")],
            vec![p("y"), p("0"), p("x")],
        ];
        // x*(x^2) - 1*(0 - y^2) = x^3 + y^2
        assert_eq!(det(&m3, 2), p("x^3 + y^2"));
        let sing = vec![vec![p("x"), p("y")], vec![p("2*x"), p("2*y")]];
        assert!(det(&sing, 2).is_zero());
        for m in [&m, &pivot, &m3, &sing] {
            assert_eq!(det(m, 2), det_cofactor(m, 2));
        }
    }
}
