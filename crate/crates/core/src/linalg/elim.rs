//! Gaussian elimination and the derived subspace operations.

use super::field::Fp;
use super::matrix::Matrix;

/// Reduced row-echelon form together with the pivot columns.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols() {
        if row == a.rows() {
            break;
        }
        let Some(p) = (row..a.rows()).find(|&r| !a[(r, col)].is_zero()) else {
            continue;
        };
        a.swap_rows(row, p);
        let inv = a[(row, col)].inv().unwrap();
        for c in col..a.cols() {
            a[(row, c)] *= inv;
        }
        for r in 0..a.rows() {
            if r == row {
                continue;
            }
            let f = a[(r, col)];
            if f.is_zero() {
                continue;
            }
            for c in col..a.cols() {
                let v = a[(row, c)];
                a[(r, c)] -= f * v;
            }
        }
        pivots.push(col);
        row += 1;
    }
    (a, pivots)
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).1.len()
}

/// Columns form a basis of the right null space `{x : m·x = 0}`.
pub fn kernel_basis(m: &Matrix) -> Matrix {
    let (r, pivots) = rref(m);
    let n = m.cols();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
    let mut k = Matrix::zeros(n, free.len());
    for (j, &f) in free.iter().enumerate() {
        k[(f, j)] = Fp::ONE;
        for (i, &p) in pivots.iter().enumerate() {
            k[(p, j)] = -r[(i, f)];
        }
    }
    k
}

/// Rows form a basis of the left null space `{y : y·m = 0}`.
pub fn cokernel_basis(m: &Matrix) -> Matrix {
    kernel_basis(&m.transpose()).transpose()
}

/// Some `x` with `m·x = b`, or `None` when the system is inconsistent.
pub fn solve(m: &Matrix, b: &Matrix) -> Option<Matrix> {
    assert_eq!(m.rows(), b.rows(), "right-hand side has wrong height");
    let n = m.cols();
    let aug = Matrix::hstack(&[m, b], m.rows());
    let (r, pivots) = rref(&aug);
    if pivots.iter().any(|&p| p >= n) {
        return None;
    }
    let mut x = Matrix::zeros(n, b.cols());
    for (i, &p) in pivots.iter().enumerate() {
        for k in 0..b.cols() {
            x[(p, k)] = r[(i, n + k)];
        }
    }
    Some(x)
}

pub fn inverse(m: &Matrix) -> Option<Matrix> {
    if !m.is_square() {
        return None;
    }
    let n = m.rows();
    if rank(m) != n {
        return None;
    }
    solve(m, &Matrix::identity(n))
}

pub fn is_invertible(m: &Matrix) -> bool {
    m.is_square() && rank(m) == m.rows()
}

/// A basis (as columns) of the column space, taken from the pivot columns.
pub fn column_space(m: &Matrix) -> Matrix {
    let (_, pivots) = rref(m);
    m.select_columns(&pivots)
}

/// Intersection of the column spans of `a` and `b`, as columns.
pub fn intersect(a: &Matrix, b: &Matrix) -> Matrix {
    assert_eq!(a.rows(), b.rows());
    let stacked = Matrix::hstack(&[a, b], a.rows());
    let k = kernel_basis(&stacked);
    let coeffs = k.block(0, 0, a.cols(), k.cols());
    column_space(&(a * &coeffs))
}

/// Incremental row-echelon basis of a growing subspace of `𝔽_p^n`.
///
/// Each stored row has a distinct pivot, and the pivot entry is 1. Rows are
/// kept fully reduced against each other's pivots.
#[derive(Clone, Debug)]
pub struct Echelon {
    width: usize,
    rows: Vec<(usize, Vec<Fp>)>,
}

impl Echelon {
    pub fn new(width: usize) -> Echelon {
        Echelon { width, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Reduces `v` modulo the stored rows in place.
    pub fn reduce(&self, v: &mut [Fp]) {
        for (p, row) in &self.rows {
            let f = v[*p];
            if f.is_zero() {
                continue;
            }
            for (x, &r) in v.iter_mut().zip(row) {
                *x -= f * r;
            }
        }
    }

    pub fn contains(&self, v: &[Fp]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| x.is_zero())
    }

    /// Adds `v` to the span. Returns `false` when it was already there.
    pub fn insert(&mut self, v: &[Fp]) -> bool {
        assert_eq!(v.len(), self.width);
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].inv().unwrap();
        for x in w.iter_mut() {
            *x *= inv;
        }
        for (_, row) in self.rows.iter_mut() {
            let f = row[p];
            if f.is_zero() {
                continue;
            }
            for (x, &r) in row.iter_mut().zip(&w) {
                *x -= f * r;
            }
        }
        self.rows.push((p, w));
        true
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|(p, _)| *p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_identity_and_zero() {
        let (r, p) = rref(&Matrix::identity(3));
        assert_eq!(r, Matrix::identity(3));
        assert_eq!(p, vec![0, 1, 2]);
        let (r, p) = rref(&Matrix::zeros(2, 2));
        assert_eq!(r, Matrix::zeros(2, 2));
        assert!(p.is_empty());
    }

    #[test]
    fn rref_rank_one() {
        // second row is twice the first
        let (r, p) = rref(&Matrix::from_rows(&[vec![1, 2], vec![2, 4]]));
        assert_eq!(p, vec![0]);
        assert_eq!(r, Matrix::from_rows(&[vec![1, 2], vec![0, 0]]));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&Matrix::identity(2)).cols(), 0);
        let k = kernel_basis(&Matrix::zeros(1, 3));
        assert_eq!(k.cols(), 3);
        assert_eq!(rank(&k), 3);
        let k = kernel_basis(&Matrix::from_rows(&[vec![1, 1]]));
        assert_eq!(k.cols(), 1);
        assert_eq!(k.column(0), vec![Fp::new(-1), Fp::ONE]);
    }

    #[test]
    fn solve_examples() {
        let b = Matrix::from_rows(&[vec![3, 4], vec![5, 6]]);
        assert_eq!(solve(&Matrix::identity(2), &b), Some(b.clone()));
        assert_eq!(solve(&Matrix::from_rows(&[vec![0]]), &Matrix::from_rows(&[vec![1]])), None);
        let m = Matrix::from_rows(&[vec![1, 1]]);
        let x = solve(&m, &Matrix::zeros(1, 1)).unwrap();
        assert_eq!(&m * &x, Matrix::zeros(1, 1));
    }

    #[test]
    fn echelon_tracks_span() {
        let mut e = Echelon::new(3);
        assert!(e.insert(&[Fp::ONE, Fp::ONE, Fp::ZERO]));
        assert!(e.insert(&[Fp::ZERO, Fp::ONE, Fp::ONE]));
        assert!(!e.insert(&[Fp::ONE, Fp::new(2), Fp::ONE]));
        assert!(e.contains(&[Fp::ONE, Fp::ZERO, Fp::new(-1)]));
        assert!(!e.contains(&[Fp::ZERO, Fp::ZERO, Fp::ONE]));
    }

    #[test]
    fn intersection_of_planes() {
        let a = Matrix::from_rows(&[vec![1, 0], vec![0, 1], vec![0, 0]]);
        let b = Matrix::from_rows(&[vec![0, 0], vec![1, 0], vec![0, 1]]);
        let i = intersect(&a, &b);
        assert_eq!(i.cols(), 1);
        assert_eq!(i.column(0)[0], Fp::ZERO);
        assert_eq!(i.column(0)[2], Fp::ZERO);
    }
}
