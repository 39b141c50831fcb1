//! Foundational exact types and elementary counting functions: integer
//! partitions, permutations, big rationals, polynomials with rational
//! coefficients, truncated series in an auxiliary variable, conjugacy
//! class sizes, Stirling numbers, and binomial polynomials.

mod partition;
mod permutation;
mod ratpoly;
mod rational;
mod yseries;

pub use partition::Partition;
pub use permutation::Permutation;
pub use ratpoly::RatPoly;
pub use rational::{binom_int, binom_uint, factorial, is_integer, rat, sign_of, Rational};
pub use yseries::YSeries;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// All partitions of `n` in reverse-lexicographic order starting from `[n]`.
/// `n = 0` yields the single empty partition.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    descend(n, n, &mut stack, &mut out);
    out
}

fn descend(remaining: usize, max_part: usize, stack: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::new(stack.clone()));
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        stack.push(part);
        descend(remaining - part, part, stack, out);
        stack.pop();
    }
}

/// z_lambda = prod_i i^{m_i} m_i!, the centralizer order of a permutation of
/// cycle-type lambda.
pub fn z_of(lambda: &Partition) -> BigInt {
    let mut z = BigInt::one();
    for (part, mult) in lambda.multiplicities() {
        for _ in 0..mult {
            z *= part;
        }
        z *= factorial(mult);
    }
    z
}

/// |C_lambda| = n!/z_lambda, the number of permutations of cycle-type lambda.
pub fn class_size(lambda: &Partition) -> BigInt {
    let (q, r) = num_integer::div_rem(factorial(lambda.n()), z_of(lambda));
    debug_assert!(r.is_zero());
    q
}

/// Signless Stirling number of the first kind: the number of permutations of
/// `[n]` with exactly `k` cycles. Zero for `k > n` and for `k = 0 < n`.
pub fn stirling_first_unsigned(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    if n == 0 {
        return BigInt::one(); // k == 0 here
    }
    if k == 0 {
        return BigInt::zero();
    }
    // c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k), built row by row.
    let mut row = vec![BigInt::zero(); n + 1];
    row[0] = BigInt::one();
    for m in 1..=n {
        let mut next = vec![BigInt::zero(); n + 1];
        for j in 1..=m {
            next[j] = &row[j - 1] + (m - 1) * &row[j];
        }
        row = next;
    }
    row[k].clone()
}

/// The binomial polynomial C(x+shift, p) in x, defined via the falling
/// factorial: (x+shift)(x+shift-1)...(x+shift-p+1)/p!. For p = 0 this is the
/// constant 1.
pub fn binomial_poly(shift: i64, p: usize) -> RatPoly {
    let mut poly = RatPoly::one();
    for t in 0..p {
        // multiply by (x + shift - t)
        let linear = RatPoly::from_coeffs(vec![
            (1, Rational::one()),
            (0, Rational::from(BigInt::from(shift - t as i64))),
        ]);
        poly = poly.mul(&linear);
    }
    poly.scale(&Rational::new(BigInt::one(), factorial(p)))
}

/// The series (1+y)^{x+shift} truncated at y-degree `trunc`: the coefficient
/// of y^k is the binomial polynomial C(x+shift, k).
pub fn one_plus_y_power(shift: i64, trunc: usize) -> YSeries {
    let coeffs = (0..=trunc).map(|k| binomial_poly(shift, k)).collect();
    YSeries::from_coeffs(coeffs)
}

/// The series (1+y)^{exponent} with a fixed integer exponent (possibly
/// negative), truncated at y-degree `trunc`; coefficients are the constants
/// C(exponent, k).
pub fn one_plus_y_const(exponent: i64, trunc: usize) -> YSeries {
    let coeffs = (0..=trunc)
        .map(|k| RatPoly::constant(Rational::from(binom_int(exponent, k))))
        .collect();
    YSeries::from_coeffs(coeffs)
}

#[cfg(test)]
mod tests;
