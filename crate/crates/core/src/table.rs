use std::fmt::Write;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::counting::{Counts, Stat};
use crate::error::{precondition, Result};

/// Values of one statistic for `k` in `k_min..=k_max` and `n` in `1..=n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    pub stat: Stat,
    pub k_min: usize,
    pub k_max: usize,
    pub n_max: usize,
    /// `rows[i][j]` is the value at `k = k_min + i`, `n = j + 1`.
    pub rows: Vec<Vec<BigInt>>,
}

impl CountTable {
    pub fn compute(stat: Stat, k_max: usize, n_max: usize) -> Result<Self> {
        if k_max < 1 || n_max < 1 {
            return Err(precondition("table bounds must be at least 1"));
        }
        let counts = Counts::new(k_max, n_max)?;
        let k_min = stat.k_min();
        let rows = (k_min..=k_max).map(|k| (1..=n_max).map(|n| counts.stat(stat, k, n)).collect()).collect();
        Ok(CountTable { stat, k_min, k_max, n_max, rows })
    }

    pub fn get(&self, k: usize, n: usize) -> &BigInt {
        &self.rows[k - self.k_min][n - 1]
    }

    fn grid(&self) -> Vec<Vec<String>> {
        let mut grid =
            vec![std::iter::once("k\\n".to_string()).chain((1..=self.n_max).map(|n| n.to_string())).collect()];
        for (i, row) in self.rows.iter().enumerate() {
            grid.push(std::iter::once((self.k_min + i).to_string()).chain(row.iter().map(BigInt::to_string)).collect());
        }
        grid
    }

    /// Right-aligned columns, one row per `k`.
    pub fn to_markdown(&self) -> String {
        let grid = self.grid();
        let widths: Vec<usize> =
            (0..grid[0].len()).map(|c| grid.iter().map(|r| r[c].len()).max().unwrap_or(0)).collect();
        let mut out = String::new();
        for (r, row) in grid.iter().enumerate() {
            out.push('|');
            for (cell, w) in row.iter().zip(&widths) {
                write!(out, " {cell:>w$} |").expect("writing to a String");
            }
            out.push('\n');
            if r == 0 {
                out.push('|');
                for w in &widths {
                    write!(out, "{}:|", "-".repeat(w + 1)).expect("writing to a String");
                }
                out.push('\n');
            }
        }
        out
    }

    pub fn to_csv(&self) -> String {
        self.grid().iter().map(|r| r.join(",") + "\n").collect()
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(BigInt::to_string).collect()).collect();
        json!({
            "stat": self.stat.name(),
            "kRange": [self.k_min, self.k_max],
            "nRange": [1, self.n_max],
            "rows": rows,
        })
    }
}
