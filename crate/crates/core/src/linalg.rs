//! Row reduction over `F_q` on raw canonical values.

use crate::finite_field::FieldSpec;

/// A matrix in reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Echelon {
    pub rows: Vec<Vec<u32>>,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(spec: FieldSpec, mut rows: Vec<Vec<u32>>, ncols: usize) -> Echelon {
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..ncols {
            let Some(found) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
                continue;
            };
            rows.swap(r, found);
            let inv = spec.inv_raw(rows[r][col]).expect("pivot is nonzero");
            for x in rows[r].iter_mut() {
                *x = spec.mul_raw(*x, inv);
            }
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && row[col] != 0 {
                    let factor = row[col];
                    axpy(spec, row, factor, &pivot_row);
                }
            }
            pivots.push(col);
            r += 1;
        }
        rows.truncate(r);
        Echelon { rows, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Membership of `v` in the row space.
    pub fn contains(&self, spec: FieldSpec, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        for (row, &col) in self.rows.iter().zip(&self.pivots) {
            if w[col] != 0 {
                let factor = w[col];
                axpy(spec, &mut w, factor, row);
            }
        }
        w.iter().all(|&x| x == 0)
    }

    /// Basis of `{y : row . y = 0 for every row}`.
    pub fn null_space(&self, spec: FieldSpec, ncols: usize) -> Vec<Vec<u32>> {
        let mut is_pivot = vec![false; ncols];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..ncols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut y = vec![0; ncols];
                y[f] = 1;
                for (row, &col) in self.rows.iter().zip(&self.pivots) {
                    y[col] = spec.neg_raw(row[f]);
                }
                y
            })
            .collect()
    }
}

/// `row -= factor * other`.
pub(crate) fn axpy(spec: FieldSpec, row: &mut [u32], factor: u32, other: &[u32]) {
    for (x, &o) in row.iter_mut().zip(other) {
        if o != 0 {
            *x = spec.sub_raw(*x, spec.mul_raw(factor, o));
        }
    }
}

#[cfg(test)]
pub(crate) fn dot(spec: FieldSpec, a: &[u32], b: &[u32]) -> u32 {
    a.iter()
        .zip(b)
        .fold(0, |acc, (&x, &y)| spec.add_raw(acc, spec.mul_raw(x, y)))
}
