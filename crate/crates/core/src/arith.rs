//! Small number-theoretic helpers.

use num_bigint::BigInt;
use num_traits::One;

/// The number-theoretic Moebius function.
pub fn mobius(n: usize) -> i32 {
    assert!(n >= 1, "mobius is defined for n >= 1");
    let mut n = n;
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Set partitions of `{1, ..., n}`: blocks sorted internally and ordered by
/// their smallest element.
pub fn set_partitions(n: usize) -> Vec<Vec<Vec<u8>>> {
    let mut out = Vec::new();
    let mut current: Vec<Vec<u8>> = Vec::new();
    extend_partitions(1, n as u8, &mut current, &mut out);
    out
}

fn extend_partitions(next: u8, n: u8, current: &mut Vec<Vec<u8>>, out: &mut Vec<Vec<Vec<u8>>>) {
    if next > n {
        out.push(current.clone());
        return;
    }
    for i in 0..current.len() {
        current[i].push(next);
        extend_partitions(next + 1, n, current, out);
        current[i].pop();
    }
    current.push(vec![next]);
    extend_partitions(next + 1, n, current, out);
    current.pop();
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_numbers() {
        let counts: Vec<usize> = (0..=6).map(|n| set_partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 15, 52, 203]);
        assert_eq!(set_partitions(2), vec![vec![vec![1, 2]], vec![vec![1], vec![2]]]);
    }

    #[test]
    fn mobius_small_values() {
        let expected = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0];
        for (i, &m) in expected.iter().enumerate() {
            assert_eq!(mobius(i + 1), m, "mu({})", i + 1);
        }
    }

    #[test]
    fn mobius_sums_vanish_over_divisors() {
        for n in 2..60 {
            let s: i32 = divisors(n).into_iter().map(mobius).sum();
            assert_eq!(s, 0);
        }
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(7), BigInt::from(5040));
    }
}
