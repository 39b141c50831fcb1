//! The general enumeration engine for products of conjugacy classes: the
//! m/c hook-content factors, the W-number character sums, the xi tuple
//! counts they reconstruct, and the resulting cycle distribution polynomial
//! for any list of classes. A closed-form character fast path kicks in for
//! two-part face-types when the WDD has large enough minimum part; the
//! Murnaghan-Nakayama path keeps the engine total for every input.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::charlib::{
    chi_wdd_closed, dimension, face_family_table, mn_character, CellStats, WddCase,
};
use crate::combinat::{
    binom_int, binom_uint, class_size, factorial, is_integer, partitions_of,
    stirling_first_unsigned, Partition, RatPoly, Rational,
};
use crate::error::{Error, Result};

/// An ordered list of conjugacy classes of the same symmetric group.
#[derive(Debug, Clone)]
pub struct ClassList {
    n: usize,
    classes: Vec<Partition>,
}

impl ClassList {
    pub fn new(classes: Vec<Partition>) -> Result<Self> {
        let n = match classes.first() {
            Some(c) => c.n(),
            None => return Err(Error::InvalidInput("class list must be nonempty".into())),
        };
        if let Some(bad) = classes.iter().find(|c| c.n() != n) {
            return Err(Error::InvalidInput(format!(
                "classes partition different n: {n} vs {}",
                bad.n()
            )));
        }
        Ok(ClassList { n, classes })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[Partition] {
        &self.classes
    }
}

/// m-factor: prod over cells of (m + c(u))/h(u). Zero whenever some cell has
/// m + c(u) = 0; in particular zero at m = 0 for n >= 1.
pub fn m_factor(lambda: &Partition, m: usize) -> Rational {
    let stats = CellStats::of(lambda);
    let mut num = BigInt::one();
    for &c in &stats.contents {
        num *= m as i64 + c;
        if num.is_zero() {
            return Rational::zero();
        }
    }
    Rational::new(num, stats.hook_product())
}

/// c-factor: the inclusion-exclusion transform of the m-factor,
/// sum_{d=0}^m (-1)^d C(m,d) m_factor(lambda, m-d). Memoized process-wide;
/// the W-number sums revisit the same (lambda, m) pairs across class lists.
pub fn c_factor(lambda: &Partition, m: usize) -> Rational {
    let key = (lambda.parts().to_vec(), m);
    if let Some(v) = c_factor_memo().lock().unwrap().get(&key) {
        return v.clone();
    }
    let mut total = Rational::zero();
    for d in 0..=m {
        let term = m_factor(lambda, m - d) * Rational::from(binom_uint(m, d));
        if d % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    c_factor_memo().lock().unwrap().insert(key, total.clone());
    total
}

type CfKey = (Vec<usize>, usize);

fn c_factor_memo() -> &'static Mutex<HashMap<CfKey, Rational>> {
    static MEMO: OnceLock<Mutex<HashMap<CfKey, Rational>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The ratio c_factor(lambda, r)/dimension(lambda), evaluated directly as
/// sum_d (-1)^d/n! C(r,d) prod_u (r-d+c(u)).
pub fn cf_ratio(lambda: &Partition, r: usize) -> Rational {
    let stats = CellStats::of(lambda);
    let n = lambda.n();
    let mut total = BigInt::zero();
    for d in 0..=r {
        let mut prod = binom_uint(r, d);
        for &c in &stats.contents {
            prod *= (r - d) as i64 + c;
            if prod.is_zero() {
                break;
            }
        }
        if d % 2 == 0 {
            total += prod;
        } else {
            total -= prod;
        }
    }
    Rational::new(total, factorial(n))
}

/// cf_ratio specialized to hooks lambda = [1^j, n-j]:
/// sum_d (-1)^d C(r,d) C(r-d+n-j-1, n).
pub fn cf_ratio_hook(j: usize, n: usize, r: usize) -> Rational {
    assert!(j < n, "hook needs 0 <= j <= n-1");
    let mut total = BigInt::zero();
    for d in 0..=r {
        let term = binom_uint(r, d) * binom_int((r - d + n - j) as i64 - 1, n);
        if d % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Rational::from(total)
}

/// cf_ratio specialized to lambda = [1^j, 2^k, p-k+1, n-j-k-p-1]:
/// (p!(n-p)!/n!) sum_d (-1)^d C(r,d) C(r-d+p-k-1, p) C(r-d+n-j-k-p-2, n-p).
pub fn cf_ratio_family2(j: usize, k: usize, p: usize, n: usize, r: usize) -> Result<Rational> {
    if k + 1 > p || n < 2 * p + 2 || j > n - 2 * p - 2 {
        return Err(Error::InvalidInput(format!(
            "family-2 parameters out of range: j={j}, k={k}, p={p}, n={n}"
        )));
    }
    let mut total = BigInt::zero();
    for d in 0..=r {
        let a = (r - d) as i64 + p as i64 - k as i64 - 1;
        let b = (r - d) as i64 + n as i64 - (j + k + p) as i64 - 2;
        let term = binom_uint(r, d) * binom_int(a, p) * binom_int(b, n - p);
        if d % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    let scale = Rational::new(factorial(p) * factorial(n - p), factorial(n));
    Ok(scale * Rational::from(total))
}

/// The W-number: sum over lambda of c_{lambda,r}/(f^lambda)^{t-1} times the
/// product of characters, skipping lambda as soon as one character vanishes.
pub fn w_number(cl: &ClassList, r: usize) -> Rational {
    let t = cl.t();
    let mut total = Rational::zero();
    'lambda: for lambda in partitions_of(cl.n()) {
        let mut chars = BigInt::one();
        for class in cl.classes() {
            let chi = mn_character(&lambda, class).expect("class list sizes agree");
            if chi == 0 {
                continue 'lambda;
            }
            chars *= chi;
        }
        let denom = if t >= 2 {
            dimension(&lambda).pow((t - 1) as u32)
        } else {
            BigInt::one()
        };
        total += c_factor(&lambda, r) * Rational::new(chars, denom);
    }
    total
}

/// xi_{n,m}: the number of tuples (sigma_1, .., sigma_t) with sigma_i in C_i
/// whose product has m cycles, reconstructed from W-numbers through signless
/// Stirling numbers. The rational sum must clear to a nonnegative integer.
pub fn xi(cl: &ClassList, m: usize) -> Result<BigInt> {
    let n = cl.n();
    if m < 1 || m > n {
        return Err(Error::InvalidInput(format!(
            "cycle count m={m} outside 1..={n}"
        )));
    }
    let mut sum = Rational::zero();
    for k in 0..=n - m {
        let r = m + k;
        let coeff = Rational::new(stirling_first_unsigned(r, m), factorial(r));
        let term = coeff * w_number(cl, r);
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let mut product = Rational::one();
    for class in cl.classes() {
        product *= Rational::from(class_size(class));
    }
    let value = sum * product;
    if !is_integer(&value) {
        return Err(Error::Internal(format!(
            "xi did not clear to an integer: {value} for m={m}"
        )));
    }
    let value = value.to_integer();
    if value.is_negative() {
        return Err(Error::Internal(format!(
            "xi came out negative: {value} for m={m}"
        )));
    }
    Ok(value)
}

/// The cycle distribution polynomial for a product of two classes,
/// P(x) = sum_m xi_{n,m}(C_mu, C_face)/(|C_mu| |C_face|) x^m, computed
/// without the class-size products (they cancel). Character values go
/// through the closed forms when the face-type is a two-part class in
/// regime and min(mu) >= p+1; otherwise everything goes through the
/// Murnaghan-Nakayama recursion.
pub fn poly_charsum(n: usize, face_type: &Partition, mu: &Partition) -> Result<RatPoly> {
    if face_type.n() != n || mu.n() != n {
        return Err(Error::InvalidInput(format!(
            "face_type sums to {}, mu sums to {}, expected {n}",
            face_type.n(),
            mu.n()
        )));
    }
    let cl = ClassList::new(vec![mu.clone(), face_type.clone()])?;
    let use_closed = face_type.len() == 2
        && n >= 2 * face_type.min_part() + 2
        && mu.min_part() >= face_type.min_part() + 1;

    // cache W(r) for r = 1..=n
    let w: Vec<Rational> = (1..=n)
        .map(|r| {
            if use_closed {
                w_number_closed_chars(n, face_type.min_part(), mu, r)
            } else {
                w_number(&cl, r)
            }
        })
        .collect();

    let mut coeffs = Vec::new();
    for m in 1..=n {
        let mut sum = Rational::zero();
        for k in 0..=n - m {
            let r = m + k;
            let coeff = Rational::new(stirling_first_unsigned(r, m), factorial(r));
            let term = coeff * &w[r - 1];
            if k % 2 == 0 {
                sum += term;
            } else {
                sum -= term;
            }
        }
        coeffs.push((m, sum));
    }
    Ok(RatPoly::from_coeffs(coeffs))
}

/// W-number for the classes (C_mu, C_{[p, n-p]}) via the closed-form
/// characters: only hooks and the block-pair family contribute, and their
/// c/f ratios go through the specialized hook and family-2 formulas.
fn w_number_closed_chars(n: usize, p: usize, mu: &Partition, r: usize) -> Rational {
    let table = face_family_table(n, p).expect("caller checked the regime");
    let mut total = Rational::zero();
    for (parts, entry) in table.iter() {
        let lambda = Partition::new(parts.clone());
        let wdd = chi_wdd_closed(&lambda, mu, p).expect("caller checked min(mu)");
        if wdd == 0 {
            continue;
        }
        let route = entry
            .cases
            .iter()
            .find(|c| !matches!(c, WddCase::Vanishing))
            .expect("nonzero character requires a structured case");
        let cf = match *route {
            WddCase::HookLow { ones } | WddCase::HookHigh { ones } => cf_ratio_hook(ones, n, r),
            WddCase::BlockPair { ones, twos } => {
                cf_ratio_family2(ones, twos, p, n, r).expect("table parameters are in range")
            }
            WddCase::Vanishing => unreachable!(),
        };
        total += cf * Rational::from(BigInt::from(entry.face_chi * wdd));
    }
    total
}
