//! Closed-form counts used to cross-check enumerations.

pub fn factorial(n: u32) -> u128 {
    (1..=n as u128).product()
}

pub fn binomial(n: u32, k: u32) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k) as u128;
    let n = n as u128;
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

pub fn catalan(n: u32) -> u128 {
    binomial(2 * n, n) / (n as u128 + 1)
}

/// Bell numbers via the Bell triangle.
pub fn bell(n: u32) -> u128 {
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().unwrap());
        for x in &row {
            let last = *next.last().unwrap();
            next.push(last + x);
        }
        row = next;
    }
    row[0]
}

pub fn power(base: u32, exp: u32) -> u128 {
    (base as u128).pow(exp)
}

/// Order-preserving self-maps of an n-chain.
pub fn order_preserving_maps(n: u32) -> u128 {
    if n == 0 {
        1
    } else {
        binomial(2 * n - 1, n - 1)
    }
}
