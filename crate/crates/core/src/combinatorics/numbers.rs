use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Stirling number of the second kind `S(k, j)`, via
/// `S(k+1, j) = j·S(k, j) + S(k, j-1)`.
pub fn stirling2(k: u32, j: u32) -> BigUint {
    if j > k {
        return BigUint::zero();
    }
    // row[j] holds S(r, j) for the current r
    let mut row = vec![BigUint::zero(); j as usize + 1];
    row[0] = BigUint::one();
    for r in 0..k {
        let top = (r + 1).min(j) as usize;
        for jj in (1..=top).rev() {
            let next = &row[jj] * BigUint::from(jj) + &row[jj - 1];
            row[jj] = next;
        }
        row[0] = BigUint::zero();
    }
    row[j as usize].clone()
}

pub fn factorial(m: u32) -> BigUint {
    (1..=m).fold(BigUint::one(), |acc, x| acc * BigUint::from(x))
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u32, k: u32) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}
