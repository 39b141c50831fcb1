use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exact arbitrary-precision fraction. Backed by `num_rational`, which keeps
/// fractions in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for num/den rationals, mostly in tests and small formulas.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn factorial(n: usize) -> BigInt {
    let mut f = BigInt::one();
    for i in 2..=n {
        f *= i;
    }
    f
}

/// C(n, k) for nonnegative n.
pub fn binom_uint(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    for t in 0..k {
        num *= n - t;
    }
    exact_div(num, factorial(k))
}

/// Generalized binomial C(a, k) = a(a-1)...(a-k+1)/k! for any integer a,
/// including negative a. Always an integer.
pub fn binom_int(a: i64, k: usize) -> BigInt {
    let mut num = BigInt::one();
    for t in 0..k {
        num *= a - t as i64;
    }
    exact_div(num, factorial(k))
}

fn exact_div(num: BigInt, den: BigInt) -> BigInt {
    let (q, r) = num_integer::div_rem(num, den);
    debug_assert!(r.is_zero());
    q
}

/// True if the rational is an integer; then `to_integer` is exact.
pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Sign of a rational as -1, 0, or +1.
pub fn sign_of(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}
