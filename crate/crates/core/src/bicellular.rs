//! The closed forms for two-face maps: the V series, the coefficient-
//! extraction evaluation of the genus distribution polynomial, its W-number
//! sibling, the regular-WDD double-sum corollary, and conversion of the
//! polynomial into genus counts.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::combinat::{
    binom_int, binom_uint, binomial_poly, class_size, factorial, is_integer, one_plus_y_const,
    one_plus_y_power, partitions_of, Partition, RatPoly, Rational, YSeries,
};
use crate::error::{Error, Result};

/// One two-face enumeration problem: n edges, face lengths p and n-p with
/// p <= n-p (canonicalized on input), and white vertex degree distribution
/// mu. The closed forms apply exactly when min(mu) >= p+1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BicellularInstance {
    n: usize,
    p: usize,
    mu: Partition,
}

impl BicellularInstance {
    pub fn new(n: usize, p: usize, mu: Partition) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidInput(format!("need n >= 2, got {n}")));
        }
        if p < 1 || p > n - 1 {
            return Err(Error::InvalidInput(format!(
                "face length p={p} outside 1..={}",
                n - 1
            )));
        }
        if mu.n() != n {
            return Err(Error::InvalidInput(format!(
                "mu sums to {}, expected {n}",
                mu.n()
            )));
        }
        // the face-type [p, n-p] is an unordered pair
        let p = p.min(n - p);
        Ok(BicellularInstance { n, p, mu })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn face_type(&self) -> Partition {
        Partition::new(vec![self.p, self.n - self.p])
    }

    /// True when the closed forms apply: min(mu) >= p+1 (for n-p equal to p
    /// or p+1 this forces mu = [n], and the same formula covers those two
    /// cases).
    pub fn closed_form_valid(&self) -> bool {
        self.mu.min_part() >= self.p + 1
    }

    fn require_valid(&self) -> Result<()> {
        if self.closed_form_valid() {
            Ok(())
        } else {
            Err(Error::OutOfRegime {
                min_mu: self.mu.min_part(),
                p: self.p,
            })
        }
    }

    /// Every closed-form-valid instance with 2 <= n <= max_n, ordered by n,
    /// then p, then mu in reverse-lexicographic order.
    pub fn enumerate_valid(max_n: usize) -> Vec<BicellularInstance> {
        let mut out = Vec::new();
        for n in 2..=max_n.max(1) {
            for p in 1..=n / 2 {
                for mu in partitions_of(n) {
                    if mu.min_part() >= p + 1 {
                        out.push(BicellularInstance { n, p, mu });
                    }
                }
            }
        }
        out
    }
}

impl std::fmt::Display for BicellularInstance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "n={} p={} mu=[{}]", self.n, self.p, self.mu)
    }
}

/// V_mu(y) = prod_i ((1+y)^{mu_i} - 1), truncated at y-degree `trunc`. The
/// coefficients are constants; the lowest nonzero y-degree is l(mu).
pub fn v_mu(mu: &Partition, trunc: usize) -> YSeries {
    let one = YSeries::one(trunc);
    let mut product = one.clone();
    for &part in mu.parts() {
        let factor = one_plus_y_const(part as i64, trunc).sub(&one);
        product = product.mul(&factor);
    }
    product
}

fn closed_scale(n: usize, p: usize) -> Rational {
    Rational::new(factorial(p) * factorial(n - p), factorial(n))
}

/// The W-number via the coefficient-extraction closed form:
/// W_{n,r} = [y^{n-p}] (p!(n-p)!/n!) V_mu(y)
///   sum_{k=0}^{p-1} sum_{d=0}^{r} (1+y)^{r-d-k-1} (-1)^d C(r,d) C(r-d+p-k-1, p).
/// Must equal the character-sum W-number for the classes (mu, [p, n-p]).
pub fn w_number_bicellular(inst: &BicellularInstance, r: usize) -> Result<Rational> {
    inst.require_valid()?;
    let (n, p) = (inst.n, inst.p);
    let trunc = n - p;
    let mut inner = YSeries::zero(trunc);
    for k in 0..p {
        for d in 0..=r {
            let mut coeff = binom_uint(r, d) * binom_int((r - d + p - k) as i64 - 1, p);
            if coeff.is_zero() {
                continue;
            }
            if d % 2 == 1 {
                coeff = -coeff;
            }
            let exponent = r as i64 - d as i64 - k as i64 - 1;
            let series = one_plus_y_const(exponent, trunc).scale(&Rational::from(coeff));
            inner = inner.add(&series);
        }
    }
    let series = v_mu(&inst.mu, trunc).mul(&inner);
    let extracted = series
        .coeff(trunc)
        .as_constant()
        .expect("series of constants");
    Ok(extracted * closed_scale(n, p))
}

/// The genus distribution polynomial by the closed formula:
/// P(x) = (p!(n-p)!/n!) [y^{n-p}] V_mu(y) sum_{i=0}^{p-1} C(x+i,p) (1+y)^{x+i-p}.
pub fn poly_closed(inst: &BicellularInstance) -> Result<RatPoly> {
    inst.require_valid()?;
    let (n, p) = (inst.n, inst.p);
    let trunc = n - p;
    let mut inner = YSeries::zero(trunc);
    for i in 0..p {
        let series = one_plus_y_power(i as i64 - p as i64, trunc)
            .scale_poly(&binomial_poly(i as i64, p));
        inner = inner.add(&series);
    }
    let series = v_mu(&inst.mu, trunc).mul(&inner);
    Ok(series.coeff(trunc).scale(&closed_scale(n, p)))
}

/// The same polynomial restricted to connected maps: identical to
/// `poly_closed`, because every pair in the closed-form regime is connected
/// (checked exhaustively by the oracle suite at small n).
pub fn poly_connected(inst: &BicellularInstance) -> Result<RatPoly> {
    poly_closed(inst)
}

/// The regular-WDD double sum: for mu = [k^d] with k > p,
/// C(dk,p) P(x) = sum_{i=0}^{p-1} sum_{j=0}^{d} (-1)^{d-j} C(d,j) C(x+i,p) C(x+i-p+jk, dk-p).
pub fn poly_regular(p: usize, k: usize, d: usize) -> Result<RatPoly> {
    if k <= p || p < 1 || d < 1 {
        return Err(Error::InvalidInput(format!(
            "regular WDD needs k > p >= 1 and d >= 1, got p={p}, k={k}, d={d}"
        )));
    }
    let n = d * k;
    let mut sum = RatPoly::zero();
    for i in 0..p {
        let left = binomial_poly(i as i64, p);
        for j in 0..=d {
            let right = binomial_poly(i as i64 - p as i64 + (j * k) as i64, n - p);
            let mut coeff = Rational::from(binom_uint(d, j));
            if (d - j) % 2 == 1 {
                coeff = -coeff;
            }
            sum = sum.add(&left.mul(&right).scale(&coeff));
        }
    }
    Ok(sum.scale(&(Rational::one() / Rational::from(binom_uint(n, p)))))
}

/// Genus counts of one instance relative to a fixed face permutation: the
/// polynomial coefficient at degree m carries |C_mu| maps of genus
/// g = (n - l(mu) - m)/2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenusDistribution {
    pub counts: BTreeMap<usize, BigInt>,
    pub class_size: BigInt,
}

pub fn genus_distribution(inst: &BicellularInstance, poly: &RatPoly) -> Result<GenusDistribution> {
    let total = class_size(&inst.mu);
    let l = inst.mu.len();
    let mut counts = BTreeMap::new();
    let mut mass = BigInt::zero();
    for (m, coeff) in poly.terms() {
        if m > inst.n - l || (inst.n - l - m) % 2 != 0 {
            return Err(Error::Internal(format!(
                "degree {m} breaks the genus relation for {inst}"
            )));
        }
        let g = (inst.n - l - m) / 2;
        let count = coeff * Rational::from(total.clone());
        if !is_integer(&count) || count.is_negative() {
            return Err(Error::Internal(format!(
                "coefficient at degree {m} does not scale to a count for {inst}"
            )));
        }
        let count = count.to_integer();
        mass += &count;
        counts.insert(g, count);
    }
    if mass != total {
        return Err(Error::Internal(format!(
            "genus counts sum to {mass}, class size is {total} for {inst}"
        )));
    }
    Ok(GenusDistribution { counts, class_size: total })
}
