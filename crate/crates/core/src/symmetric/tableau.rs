//! Column-strict fillings of a Young diagram.

/// Filling of a left-justified diagram with entries in `1..=num_vars`:
/// rows weakly increase left to right, columns strictly increase top
/// to bottom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// How many times each value appears: `content[i]` counts entry
    /// `i+1`, i.e. the exponent of variable `i` in the weight monomial.
    pub fn content(&self, num_vars: usize) -> Vec<u32> {
        let mut counts = vec![0u32; num_vars];
        for row in &self.rows {
            for &v in row {
                counts[(v - 1) as usize] += 1;
            }
        }
        counts
    }
}

/// All column-strict fillings of `shape` (weakly decreasing; trailing
/// zeros ignored) with entries at most `num_vars`.
pub fn enumerate_ssyt(shape: &[u32], num_vars: usize) -> Vec<Tableau> {
    assert!(
        shape.windows(2).all(|w| w[0] >= w[1]),
        "shape must be weakly decreasing"
    );
    let rows: Vec<usize> = shape
        .iter()
        .take_while(|&&r| r > 0)
        .map(|&r| r as usize)
        .collect();
    if rows.is_empty() {
        return vec![Tableau { rows: Vec::new() }];
    }
    if rows.len() > num_vars {
        // the first column alone needs that many distinct values
        return Vec::new();
    }
    let mut grid: Vec<Vec<u32>> = rows.iter().map(|&w| vec![0; w]).collect();
    let mut out = Vec::new();
    fill(&mut grid, &rows, 0, 0, num_vars as u32, &mut out);
    out
}

fn fill(
    grid: &mut Vec<Vec<u32>>,
    rows: &[usize],
    r: usize,
    c: usize,
    max_entry: u32,
    out: &mut Vec<Tableau>,
) {
    if r == rows.len() {
        out.push(Tableau { rows: grid.clone() });
        return;
    }
    let (next_r, next_c) = if c + 1 < rows[r] { (r, c + 1) } else { (r + 1, 0) };
    let mut lo = 1;
    if c > 0 {
        lo = lo.max(grid[r][c - 1]);
    }
    if r > 0 {
        lo = lo.max(grid[r - 1][c] + 1);
    }
    for v in lo..=max_entry {
        grid[r][c] = v;
        fill(grid, rows, next_r, next_c, max_entry, out);
    }
    grid[r][c] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_box() {
        let ts = enumerate_ssyt(&[1], 2);
        assert_eq!(ts.len(), 2);
        assert_eq!(ts[0].rows(), &[vec![1]]);
        assert_eq!(ts[1].rows(), &[vec![2]]);
        assert_eq!(ts[0].content(2), vec![1, 0]);
    }

    #[test]
    fn row_and_column_shapes() {
        // row of two, entries <= 2: 11, 12, 22
        assert_eq!(enumerate_ssyt(&[2], 2).len(), 3);
        // column of two, entries <= 2: only (1,2)
        let col = enumerate_ssyt(&[1, 1], 2);
        assert_eq!(col.len(), 1);
        assert_eq!(col[0].rows(), &[vec![1], vec![2]]);
        // column of three cannot fit in two values
        assert!(enumerate_ssyt(&[1, 1, 1], 2).is_empty());
        // empty shape: the single empty filling
        assert_eq!(enumerate_ssyt(&[0, 0], 3).len(), 1);
    }

    #[test]
    fn hook_shape_count() {
        // shape (2,1) with 3 values has 8 fillings
        assert_eq!(enumerate_ssyt(&[2, 1], 3).len(), 8);
    }

    #[test]
    fn constraints_hold_everywhere() {
        for t in enumerate_ssyt(&[3, 2, 1], 4) {
            let rows = t.rows();
            for row in rows {
                assert!(row.windows(2).all(|w| w[0] <= w[1]));
            }
            for r in 1..rows.len() {
                for c in 0..rows[r].len() {
                    assert!(rows[r][c] > rows[r - 1][c]);
                }
            }
        }
    }
}
