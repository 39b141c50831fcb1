//! Symmetric-group character evaluation: hook lengths and dimensions, the
//! general Murnaghan-Nakayama recursion, and closed-form evaluations for the
//! conjugacy classes with two cycle lengths that drive the bicellular sums.
//!
//! The closed forms are organized as a per-(n, p) lookup table generated from
//! the explicit partition families; the Murnaghan-Nakayama path is the
//! arbiter the tables are checked against.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::combinat::{binom_uint, factorial, Partition};
use crate::error::{Error, Result};

/// Per-cell hook lengths and contents of a Young diagram, flattened in row
/// order.
#[derive(Debug, Clone)]
pub struct CellStats {
    pub hooks: Vec<u64>,
    pub contents: Vec<i64>,
}

impl CellStats {
    pub fn of(lambda: &Partition) -> Self {
        let parts = lambda.parts();
        let conj = lambda.conjugate();
        let cols = conj.parts();
        let mut hooks = Vec::with_capacity(lambda.n());
        let mut contents = Vec::with_capacity(lambda.n());
        for (i, &row_len) in parts.iter().enumerate() {
            for j in 0..row_len {
                let arm = row_len - 1 - j;
                let leg = cols[j] - 1 - i;
                hooks.push((arm + leg + 1) as u64);
                contents.push(j as i64 - i as i64);
            }
        }
        CellStats { hooks, contents }
    }

    pub fn hook_product(&self) -> BigInt {
        let mut prod = BigInt::from(1);
        for &h in &self.hooks {
            prod *= h;
        }
        prod
    }
}

/// Dimension of the irreducible representation indexed by lambda, via the
/// hook length formula f^lambda = n!/prod h(u).
pub fn dimension(lambda: &Partition) -> BigInt {
    let stats = CellStats::of(lambda);
    let (q, r) = num_integer::div_rem(factorial(lambda.n()), stats.hook_product());
    assert!(r.is_zero(), "hook product must divide n!");
    q
}

/// Sign of the conjugacy class: (-1)^{n - l(lambda)}, the sign character.
pub fn class_sign(lambda: &Partition) -> i64 {
    if (lambda.n() - lambda.len()) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The irreducible character chi^lambda(mu), by the Murnaghan-Nakayama rule:
/// a signed sum over removable rim hooks of length mu_1 (the largest part),
/// recursing on the remainder. Memoized process-wide.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.n() != mu.n() {
        return Err(Error::SizeMismatch { lambda_n: lambda.n(), mu_n: mu.n() });
    }
    Ok(mn_recurse(lambda.parts(), mu.parts()))
}

type MnKey = (Vec<usize>, Vec<usize>);

fn mn_memo() -> &'static Mutex<HashMap<MnKey, i64>> {
    static MEMO: OnceLock<Mutex<HashMap<MnKey, i64>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

fn mn_recurse(lambda: &[usize], mu: &[usize]) -> i64 {
    if mu.is_empty() {
        return 1; // lambda is empty too when the sizes matched
    }
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = mn_memo().lock().unwrap().get(&key) {
        return v;
    }
    let strip = mu[0];
    let rest = &mu[1..];
    // beta-set of lambda: strictly decreasing first-column hook lengths
    let slots = lambda.len();
    let beta: Vec<i64> = lambda
        .iter()
        .enumerate()
        .map(|(i, &part)| part as i64 + (slots - 1 - i) as i64)
        .collect();
    let mut total = 0i64;
    for i in 0..slots {
        let b = beta[i] - strip as i64;
        if b < 0 || beta.contains(&b) {
            continue;
        }
        // strip height - 1 = number of beta values jumped over
        let jumped = beta.iter().filter(|&&x| b < x && x < beta[i]).count();
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        let mut new_beta = beta.clone();
        new_beta[i] = b;
        new_beta.sort_unstable_by(|a, b| b.cmp(a));
        let child: Vec<usize> = new_beta
            .iter()
            .enumerate()
            .map(|(t, &v)| (v - (slots - 1 - t) as i64) as usize)
            .filter(|&part| part > 0)
            .collect();
        total = total
            .checked_add(sign * mn_recurse(&child, rest))
            .expect("character value exceeds i64");
    }
    mn_memo().lock().unwrap().insert(key, total);
    total
}

/// How chi^lambda(mu) is evaluated for lambda inside one of the closed-form
/// families, carrying the family parameters (the `ones`/`twos` of the
/// parametrization, which can differ from lambda's own multiplicities when
/// small parts merge).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WddCase {
    /// lambda = [1^j, n-j] with 0 <= j <= p-1
    HookLow { ones: usize },
    /// lambda = [1^j, n-j] with n-p <= j <= n-1
    HookHigh { ones: usize },
    /// lambda = [1^j, 2^k, p-k+1, n-j-k-p-1]
    BlockPair { ones: usize, twos: usize },
    /// the remaining families: chi^lambda(mu) = 0 whenever min(mu) >= p+1
    Vanishing,
}

#[derive(Debug, Clone)]
pub struct FamilyEntry {
    pub face_chi: i64,
    pub cases: Vec<WddCase>,
}

type FamilyTable = HashMap<Vec<usize>, FamilyEntry>;

fn family_tables() -> &'static Mutex<HashMap<(usize, usize), &'static FamilyTable>> {
    static TABLES: OnceLock<Mutex<HashMap<(usize, usize), &'static FamilyTable>>> =
        OnceLock::new();
    TABLES.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The family classification table for face-type [p, n-p], built once per
/// (n, p) and leaked for shared lookup.
pub fn face_family_table(n: usize, p: usize) -> Result<&'static FamilyTable> {
    if p < 1 || n < 2 * p + 2 {
        return Err(Error::FaceTypeRegime { n, p });
    }
    let mut tables = family_tables().lock().unwrap();
    if let Some(&t) = tables.get(&(n, p)) {
        return Ok(t);
    }
    let table: &'static FamilyTable = Box::leak(Box::new(build_family_table(n, p)));
    tables.insert((n, p), table);
    Ok(table)
}

fn insert_family(table: &mut FamilyTable, parts: Vec<usize>, face_chi: i64, case: WddCase) {
    let mut key = parts;
    key.sort_unstable_by(|a, b| b.cmp(a));
    let entry = table.entry(key).or_insert_with(|| FamilyEntry {
        face_chi,
        cases: Vec::new(),
    });
    assert_eq!(
        entry.face_chi, face_chi,
        "overlapping families claim different character values"
    );
    entry.cases.push(case);
}

fn sign_pow(j: usize) -> i64 {
    if j % 2 == 0 {
        1
    } else {
        -1
    }
}

fn build_family_table(n: usize, p: usize) -> FamilyTable {
    let mut table = FamilyTable::new();
    let hook = |j: usize| -> Vec<usize> {
        let mut v = vec![n - j];
        v.extend(std::iter::repeat(1).take(j));
        v
    };
    // hooks with few short rows
    for j in 0..=p - 1 {
        insert_family(&mut table, hook(j), sign_pow(j), WddCase::HookLow { ones: j });
    }
    // hooks with a long first column
    for j in n - p..=n - 1 {
        insert_family(&mut table, hook(j), -sign_pow(j), WddCase::HookHigh { ones: j });
    }
    // [1^j, 2^k, p-k+1, n-j-k-p-1]: both explicit parts are >= 2 throughout
    for k in 0..=p - 1 {
        for j in 0..=n - 2 * p - 2 {
            let mut v = vec![p - k + 1, n - j - k - p - 1];
            v.extend(std::iter::repeat(2).take(k));
            v.extend(std::iter::repeat(1).take(j));
            insert_family(
                &mut table,
                v,
                -sign_pow(j),
                WddCase::BlockPair { ones: j, twos: k },
            );
        }
    }
    // [1^j, 2^k, p-k-j, n-k-p] with k+j <= p-2, and its conjugate family
    // [1^j, 2^k, p-k, n-p-k-j] with j >= n-2p: the sign is (-1)^j for both,
    // and chi^lambda(mu) = 0 on both whenever min(mu) >= p+1. Every explicit
    // part here is >= 2; shorter patterns do not name removable shapes.
    if p >= 2 {
        for k in 0..=p - 2 {
            for j in 0..=p - 2 - k {
                let mut v = vec![p - k - j, n - k - p];
                v.extend(std::iter::repeat(2).take(k));
                v.extend(std::iter::repeat(1).take(j));
                insert_family(&mut table, v, sign_pow(j), WddCase::Vanishing);
            }
            for j in n - 2 * p..=n - p - k - 2 {
                let mut v = vec![p - k, n - p - k - j];
                v.extend(std::iter::repeat(2).take(k));
                v.extend(std::iter::repeat(1).take(j));
                insert_family(&mut table, v, sign_pow(j), WddCase::Vanishing);
            }
        }
    }
    table
}

/// Closed-form chi^lambda([p, n-p]) in the regime n >= 2p+2: the stated sign
/// when lambda lies in one of the explicit families, else 0. Agrees with
/// `mn_character(lambda, [p, n-p])` everywhere in regime.
pub fn chi_face_type(lambda: &Partition, p: usize, n: usize) -> Result<i64> {
    if lambda.n() != n {
        return Err(Error::InvalidInput(format!(
            "lambda sums to {}, expected {n}",
            lambda.n()
        )));
    }
    let table = face_family_table(n, p)?;
    Ok(table.get(lambda.parts()).map_or(0, |e| e.face_chi))
}

/// Closed-form chi^lambda(mu) for min(mu) >= p+1 and lambda inside one of
/// the face-type families: a sign for hooks, a delta-constrained binomial
/// sum for the [1^j, 2^k, p-k+1, ...] family, and 0 for the rest. Agrees
/// with `mn_character(lambda, mu)`.
pub fn chi_wdd_closed(lambda: &Partition, mu: &Partition, p: usize) -> Result<i64> {
    if lambda.n() != mu.n() {
        return Err(Error::SizeMismatch { lambda_n: lambda.n(), mu_n: mu.n() });
    }
    if mu.min_part() < p + 1 {
        return Err(Error::WddHypothesis { min_mu: mu.min_part(), p });
    }
    let n = lambda.n();
    let table = face_family_table(n, p)?;
    let entry = table
        .get(lambda.parts())
        .ok_or(Error::NotInFamily { p })?;
    let mut value: Option<i64> = None;
    for case in &entry.cases {
        let v = match *case {
            WddCase::HookLow { ones } => sign_pow(ones),
            WddCase::HookHigh { ones } => -sign_pow(ones + mu.len()),
            WddCase::BlockPair { ones, .. } => block_pair_chi(mu, p, ones),
            WddCase::Vanishing => 0,
        };
        match value {
            None => value = Some(v),
            Some(prev) => assert_eq!(
                prev, v,
                "overlapping family cases disagree for lambda={lambda}, mu={mu}, p={p}"
            ),
        }
    }
    Ok(value.expect("family entry with no cases"))
}

/// The delta-constrained sum over rim-hook splittings for
/// lambda = [1^j, 2^k, p-k+1, n-j-k-p-1]: iterate over how many mu-parts of
/// each size land in the lower-left piece.
fn block_pair_chi(mu: &Partition, p: usize, j: usize) -> i64 {
    let mut sizes: Vec<(usize, usize)> = mu.multiplicities();
    sizes.reverse(); // ascending part order; sizes[0] holds the minimum l
    let l = sizes[0].0 as i64;
    let target_low = (j + p + 1) as i64 - l; // may be negative: never fires
    let target_all = (j + p + 1) as i64;
    let mut total = 0i64;
    walk_splits(&sizes, 0, 1, 0, 0, (target_low, target_all), j, &mut total);
    total
}

#[allow(clippy::too_many_arguments)]
fn walk_splits(
    sizes: &[(usize, usize)],
    idx: usize,
    weight: i64,
    size_sum: i64,
    count_sum: usize,
    targets: (i64, i64),
    j: usize,
    total: &mut i64,
) {
    if size_sum > targets.1 {
        return; // remaining choices only grow the weighted sum
    }
    if idx == sizes.len() {
        let parity = sign_pow(j + count_sum);
        if size_sum == targets.0 {
            *total += weight * parity;
        }
        if size_sum == targets.1 {
            *total -= weight * parity;
        }
        return;
    }
    let (part, mult) = sizes[idx];
    let limit = if idx == 0 { mult - 1 } else { mult };
    for pick in 0..=limit {
        let w = weight
            .checked_mul(big_to_i64(binom_uint(limit, pick)))
            .expect("character term exceeds i64");
        walk_splits(
            sizes,
            idx + 1,
            w,
            size_sum + (part * pick) as i64,
            count_sum + pick,
            targets,
            j,
            total,
        );
    }
}

fn big_to_i64(b: BigInt) -> i64 {
    use num_traits::ToPrimitive;
    b.to_i64().expect("binomial out of i64 range at desk scale")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{class_size, partitions_of};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(dimension(&p(&[2, 1])), BigInt::from(2));
        assert_eq!(dimension(&p(&[2, 2])), BigInt::from(2));
        for n in 1..=9 {
            assert_eq!(dimension(&Partition::row(n)), BigInt::from(1));
            assert_eq!(dimension(&p(&vec![1; n])), BigInt::from(1));
        }
    }

    #[test]
    fn hook_products_divide_factorial() {
        for n in 1..=10 {
            for lambda in partitions_of(n) {
                let _ = dimension(&lambda); // asserts exact division internally
            }
        }
    }

    #[test]
    fn cell_stats_corner_content() {
        for lambda in partitions_of(6) {
            let stats = CellStats::of(&lambda);
            assert_eq!(stats.contents[0], 0, "cell (1,1) has content 0");
        }
    }

    #[test]
    fn dimension_squares_sum_to_factorial() {
        for n in 1..=10 {
            let total: BigInt = partitions_of(n)
                .iter()
                .map(|l| {
                    let d = dimension(l);
                    &d * &d
                })
                .sum();
            assert_eq!(total, factorial(n), "n = {n}");
        }
    }

    #[test]
    fn mn_character_examples() {
        for n in 1..=7 {
            for mu in partitions_of(n) {
                assert_eq!(mn_character(&Partition::row(n), &mu).unwrap(), 1);
                assert_eq!(
                    mn_character(&p(&vec![1; n]), &mu).unwrap(),
                    class_sign(&mu)
                );
            }
            assert_eq!(
                mn_character(&p(&vec![1; n]), &Partition::row(n)).unwrap(),
                if n % 2 == 1 { 1 } else { -1 }
            );
        }
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[3])).unwrap(), -1);
        assert_eq!(mn_character(&p(&[3, 2]), &p(&[5])).unwrap(), 0);
        assert!(mn_character(&p(&[2, 1]), &p(&[4])).is_err());
    }

    #[test]
    fn mn_character_matches_dimension_on_identity() {
        for n in 1..=8 {
            let id = p(&vec![1; n]);
            for lambda in partitions_of(n) {
                assert_eq!(
                    BigInt::from(mn_character(&lambda, &id).unwrap()),
                    dimension(&lambda)
                );
            }
        }
    }

    #[test]
    fn column_orthogonality() {
        for n in 1..=8 {
            let parts = partitions_of(n);
            let classes: Vec<(Partition, BigInt)> =
                parts.iter().map(|mu| (mu.clone(), class_size(mu))).collect();
            for a in &parts {
                for b in &parts {
                    let mut sum = BigInt::zero();
                    for (mu, size) in &classes {
                        let xa = mn_character(a, mu).unwrap();
                        let xb = mn_character(b, mu).unwrap();
                        sum += size * BigInt::from(xa * xb);
                    }
                    let expect = if a == b { factorial(n) } else { BigInt::zero() };
                    assert_eq!(sum, expect, "n={n} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn conjugate_symmetry() {
        for n in 1..=8 {
            for lambda in partitions_of(n) {
                let conj = lambda.conjugate();
                for mu in partitions_of(n) {
                    assert_eq!(
                        mn_character(&conj, &mu).unwrap(),
                        class_sign(&mu) * mn_character(&lambda, &mu).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn chi_face_type_matches_mn() {
        for n in 2usize..=12 {
            for pp in 1..=n.saturating_sub(2) / 2 {
                let face = p(&[pp, n - pp]);
                for lambda in partitions_of(n) {
                    let closed = chi_face_type(&lambda, pp, n).unwrap();
                    let direct = mn_character(&lambda, &face).unwrap();
                    assert_eq!(closed, direct, "n={n} p={pp} lambda={lambda}");
                }
            }
        }
    }

    #[test]
    fn chi_face_type_examples() {
        // lambda = [n] is the j = 0 hook
        assert_eq!(chi_face_type(&Partition::row(8), 3, 8).unwrap(), 1);
        // lambda = [p+1, n-p-1] is the (j,k) = (0,0) block pair
        assert_eq!(chi_face_type(&p(&[4, 4]), 3, 8).unwrap(), -1);
        // not in any family
        assert_eq!(chi_face_type(&p(&[3, 2, 2, 1]), 3, 8).unwrap(), 0);
        // out of regime
        assert!(chi_face_type(&p(&[3, 2]), 2, 5).is_err());
    }

    #[test]
    fn chi_wdd_closed_matches_mn() {
        for n in 2usize..=12 {
            for pp in 1..=n.saturating_sub(2) / 2 {
                let table = face_family_table(n, pp).unwrap();
                let mus: Vec<Partition> = partitions_of(n)
                    .into_iter()
                    .filter(|mu| mu.min_part() >= pp + 1)
                    .collect();
                for parts in table.keys() {
                    let lambda = Partition::new(parts.clone());
                    for mu in &mus {
                        let closed = chi_wdd_closed(&lambda, mu, pp).unwrap();
                        let direct = mn_character(&lambda, mu).unwrap();
                        assert_eq!(closed, direct, "n={n} p={pp} lambda={lambda} mu={mu}");
                    }
                }
            }
        }
    }

    #[test]
    fn chi_wdd_closed_examples() {
        // trivial representation
        assert_eq!(chi_wdd_closed(&Partition::row(9), &p(&[9]), 2).unwrap(), 1);
        // sign character: (-1)^{n - l(mu)}
        assert_eq!(
            chi_wdd_closed(&p(&[1; 9]), &p(&[5, 4]), 2).unwrap(),
            class_sign(&p(&[5, 4]))
        );
        // worked block-pair value
        assert_eq!(chi_wdd_closed(&p(&[4, 3]), &p(&[4, 3]), 2).unwrap(), 1);
        // hypothesis violation
        assert!(matches!(
            chi_wdd_closed(&p(&[6, 1]), &p(&[4, 2, 1]), 2),
            Err(Error::WddHypothesis { .. })
        ));
        // lambda outside every family
        assert!(matches!(
            chi_wdd_closed(&p(&[3, 3, 3]), &p(&[9]), 2),
            Err(Error::NotInFamily { .. })
        ));
    }
}
