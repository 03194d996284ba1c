//! Large Schröder numbers.

use crate::error::{Error, Result};

/// Memoized `S_0 = 1`, `S_1 = 2`, `S_n = 3 S_{n-1} + Σ_{k=1}^{n-2} S_k S_{n-k-1}`.
#[derive(Debug, Clone)]
pub struct SchroederTable {
    values: Vec<u128>,
}

impl Default for SchroederTable {
    fn default() -> SchroederTable {
        SchroederTable { values: vec![1, 2] }
    }
}

impl SchroederTable {
    pub fn new() -> SchroederTable {
        SchroederTable::default()
    }

    pub fn get(&mut self, n: usize) -> Result<u128> {
        while self.values.len() <= n {
            let m = self.values.len();
            let overflow = || Error::Overflow(format!("S_{m}"));
            let mut s = self.values[m - 1].checked_mul(3).ok_or_else(overflow)?;
            for k in 1..=m - 2 {
                let term = self.values[k].checked_mul(self.values[m - k - 1]).ok_or_else(overflow)?;
                s = s.checked_add(term).ok_or_else(overflow)?;
            }
            self.values.push(s);
        }
        Ok(self.values[n])
    }

    pub fn values(&self) -> &[u128] {
        &self.values
    }
}

pub fn schroeder(n: usize) -> Result<u128> {
    SchroederTable::new().get(n)
}
