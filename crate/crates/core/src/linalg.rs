//! Exact dense linear algebra over the scalar field: row reduction, rank,
//! and nullspace bases. Small systems only — the graded slices handled
//! here have at most a few dozen dimensions.

use crate::scalar::Scalar;

/// Reduces the matrix in place to row echelon form and returns the pivot
/// column of every nonzero row.
pub fn row_reduce(matrix: &mut Vec<Vec<Scalar>>) -> Vec<usize> {
    let rows = matrix.len();
    let cols = matrix.first().map(|r| r.len()).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut row = 0usize;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| !matrix[r][col].is_zero()) else {
            continue;
        };
        matrix.swap(row, p);
        let inv = matrix[row][col].inv().expect("pivot is nonzero");
        for c in col..cols {
            matrix[row][c] = matrix[row][c].mul(&inv);
        }
        for r in 0..rows {
            if r != row && !matrix[r][col].is_zero() {
                let factor = matrix[r][col].clone();
                for c in col..cols {
                    let delta = factor.mul(&matrix[row][c]);
                    matrix[r][c] = matrix[r][c].sub(&delta);
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    pivots
}

pub fn rank(matrix: &[Vec<Scalar>]) -> usize {
    let mut m = matrix.to_vec();
    row_reduce(&mut m).len()
}

/// A basis of {x : Mx = 0}, one vector per free column.
pub fn nullspace(matrix: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let cols = matrix.first().map(|r| r.len()).unwrap_or(0);
    let mut m = matrix.to_vec();
    let pivots = row_reduce(&mut m);
    let mut out = Vec::new();
    let is_pivot = |c: usize| pivots.contains(&c);
    for free in 0..cols {
        if is_pivot(free) {
            continue;
        }
        let mut v = vec![Scalar::zero(); cols];
        v[free] = Scalar::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = m[r][free].neg();
        }
        out.push(v);
    }
    out
}

/// True when the given vectors are linearly independent.
pub fn independent(vectors: &[Vec<Scalar>]) -> bool {
    rank(vectors) == vectors.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::int(n)
    }

    #[test]
    fn rank_and_nullspace() {
        let m = vec![
            vec![s(1), s(2), s(3)],
            vec![s(2), s(4), s(6)],
            vec![s(0), s(1), s(1)],
        ];
        assert_eq!(rank(&m), 2);
        let ns = nullspace(&m);
        assert_eq!(ns.len(), 1);
        // verify Mx = 0
        for row in &m {
            let mut acc = Scalar::zero();
            for (a, b) in row.iter().zip(&ns[0]) {
                acc = acc.add(&a.mul(b));
            }
            assert!(acc.is_zero());
        }
    }

    #[test]
    fn independence_over_cyclotomics() {
        let z = Scalar::zeta(5);
        let rows = vec![
            vec![Scalar::one(), z.clone()],
            vec![z.clone(), z.pow(2)],
        ];
        // second row = z · first row
        assert!(!independent(&rows));
        let rows = vec![
            vec![Scalar::one(), z.clone()],
            vec![Scalar::one(), z.pow(2)],
        ];
        assert!(independent(&rows));
    }
}
