//! Shared oracles for the integration suites. These stay independent of
//! the library's computation paths: the dimension oracle is the closed
//! product formula, evaluated exactly.

use degflag::exactlin::Rational;
use degflag::roots::{MultDegree, RootIndex};
use num_traits::One;

pub fn md(n: usize, entries: &[(usize, usize, u64)]) -> MultDegree {
    MultDegree::from_entries(
        n,
        entries.iter().map(|&(i, j, m)| (RootIndex::new(i, j), m)),
    )
    .unwrap()
}

/// Weyl dimension formula for sl_n and a dominant weight given by the
/// diagonal multiplicities (m_1, ..., m_{n-1}):
///
///   dim = prod over 1 <= a <= b <= n-1 of
///         (m_a + ... + m_b + b - a + 1) / (b - a + 1)
#[allow(dead_code)]
pub fn weyl_dim(n: usize, diag: &[u64]) -> u64 {
    assert_eq!(diag.len(), n - 1);
    let mut dim = Rational::one();
    for a in 1..n {
        for b in a..n {
            let level: u64 = diag[a - 1..b].iter().sum();
            let height = (b - a + 1) as u64;
            dim *= Rational::new((level + height).into(), height.into());
        }
    }
    assert!(dim.is_integer());
    let value = dim.to_integer();
    u64::try_from(value).expect("dimension fits in u64")
}

#[allow(dead_code)]
pub fn catalan(n: u64) -> u64 {
    // C_n = binom(2n, n) / (n + 1)
    let mut c: u128 = 1;
    for t in 0..n as u128 {
        c = c * (2 * n as u128 - t) / (t + 1);
    }
    (c / (n as u128 + 1)) as u64
}
