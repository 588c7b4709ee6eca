use super::Gauss;
use alloc::vec::Vec;

/// Rank of a matrix over ℚ(i) by exact Gaussian elimination. Rows must
/// all have the same length; the empty matrix has rank 0.
pub fn rank_of_matrix(rows: &[Vec<Gauss>]) -> usize {
    let mut m: Vec<Vec<Gauss>> = rows.to_vec();
    if m.is_empty() {
        return 0;
    }
    let ncols = m[0].len();
    debug_assert!(m.iter().all(|r| r.len() == ncols));
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = m[rank][col].inv();
        for r in rank + 1..m.len() {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] * &inv;
            for c in col..ncols {
                let sub = &factor * &m[rank][c];
                m[r][c] -= &sub;
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn g(re: i64, im: i64) -> Gauss {
        Gauss::new(crate::exact::rat_int(re), crate::exact::rat_int(im))
    }

    #[test]
    fn empty_matrix_has_rank_zero() {
        assert_eq!(rank_of_matrix(&[]), 0);
    }

    #[test]
    fn rank_bounded_by_dimension() {
        let rows = vec![
            vec![g(1, 0), g(0, 0)],
            vec![g(0, 0), g(1, 0)],
            vec![g(1, 0), g(1, 0)],
        ];
        assert_eq!(rank_of_matrix(&rows), 2);
    }

    #[test]
    fn complex_dependent_rows() {
        // second row is i times the first
        let rows = vec![vec![g(1, 0), g(0, 1)], vec![g(0, 1), g(-1, 0)]];
        assert_eq!(rank_of_matrix(&rows), 1);
    }
}
