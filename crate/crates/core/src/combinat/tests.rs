use super::*;
use num_bigint::BigInt;
use num_traits::One;
use proptest::prelude::*;

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec())
}

/// Independent partition counter: p(n, k) = partitions of n into parts >= k,
/// via p(n,k) = p(n-k,k) + p(n,k+1).
fn partition_count(n: usize, k: usize) -> u64 {
    if n == 0 {
        return 1;
    }
    if k > n {
        return 0;
    }
    partition_count(n - k, k) + partition_count(n, k + 1)
}

/// Independent cycle counter: enumerates all of S_n directly.
fn cycle_count_census(n: usize) -> Vec<u64> {
    fn go(images: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<u64>) {
        let n = used.len();
        if images.len() == n {
            let perm = Permutation::from_images(images.clone());
            out[perm.num_cycles()] += 1;
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                images.push(v);
                go(images, used, out);
                images.pop();
                used[v] = false;
            }
        }
    }
    let mut out = vec![0; n + 1];
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

#[test]
fn partitions_of_small() {
    let four: Vec<Vec<usize>> = partitions_of(4)
        .iter()
        .map(|p| p.parts().to_vec())
        .collect();
    assert_eq!(
        four,
        vec![
            vec![4],
            vec![3, 1],
            vec![2, 2],
            vec![2, 1, 1],
            vec![1, 1, 1, 1]
        ]
    );
    assert_eq!(partitions_of(1), vec![p(&[1])]);
    assert_eq!(partitions_of(0), vec![Partition::empty()]);
}

#[test]
fn partitions_of_counts_match_recurrence() {
    for n in 0..=12 {
        assert_eq!(
            partitions_of(n).len() as u64,
            partition_count(n, 1),
            "p({n})"
        );
    }
    assert_eq!(partitions_of(6).len(), 11);
}

#[test]
fn partitions_of_reverse_lex_and_unique() {
    for n in 0..=10 {
        let all = partitions_of(n);
        for w in all.windows(2) {
            assert!(w[0].parts() > w[1].parts(), "reverse-lex order violated");
        }
    }
}

#[test]
fn z_of_examples() {
    assert_eq!(z_of(&p(&[2, 1, 1])), BigInt::from(4));
    for n in 1..=8 {
        assert_eq!(z_of(&Partition::row(n)), BigInt::from(n));
        assert_eq!(z_of(&p(&vec![1; n])), factorial(n));
    }
}

#[test]
fn class_size_examples() {
    assert_eq!(class_size(&p(&[2, 1, 1])), BigInt::from(6));
    assert_eq!(class_size(&p(&[3])), BigInt::from(2));
    assert_eq!(class_size(&p(&[2, 2])), BigInt::from(3));
}

#[test]
fn class_sizes_sum_to_factorial() {
    for n in 1..=12 {
        let total: BigInt = partitions_of(n).iter().map(class_size).sum();
        assert_eq!(total, factorial(n), "n = {n}");
        for lambda in partitions_of(n) {
            assert_eq!(z_of(&lambda) * class_size(&lambda), factorial(n));
        }
    }
}

#[test]
fn stirling_examples() {
    assert_eq!(stirling_first_unsigned(3, 1), BigInt::from(2));
    assert_eq!(stirling_first_unsigned(3, 2), BigInt::from(3));
    assert_eq!(stirling_first_unsigned(3, 3), BigInt::one());
    assert_eq!(stirling_first_unsigned(4, 2), BigInt::from(11));
    for n in 1..=9 {
        assert_eq!(stirling_first_unsigned(n, n), BigInt::one());
        assert_eq!(stirling_first_unsigned(n, 0), BigInt::from(0));
        assert_eq!(stirling_first_unsigned(n, n + 1), BigInt::from(0));
    }
}

#[test]
fn stirling_counts_cycles() {
    for n in 1..=6 {
        let census = cycle_count_census(n);
        for k in 1..=n {
            assert_eq!(
                stirling_first_unsigned(n, k),
                BigInt::from(census[k]),
                "c({n},{k})"
            );
        }
    }
}

#[test]
fn stirling_row_sums() {
    for n in 1..=12 {
        let total: BigInt = (1..=n).map(|k| stirling_first_unsigned(n, k)).sum();
        assert_eq!(total, factorial(n));
    }
}

#[test]
fn binomial_poly_examples() {
    assert_eq!(binomial_poly(0, 1), RatPoly::monomial(1, Rational::one()));
    // C(x+1, 2) = (x^2 + x)/2
    assert_eq!(
        binomial_poly(1, 2),
        RatPoly::from_coeffs(vec![(2, rat(1, 2)), (1, rat(1, 2))])
    );
    // C(x-1, 3) = (x-1)(x-2)(x-3)/6
    let expect = RatPoly::from_coeffs(vec![
        (3, rat(1, 6)),
        (2, rat(-1, 1)),
        (1, rat(11, 6)),
        (0, rat(-1, 1)),
    ]);
    assert_eq!(binomial_poly(-1, 3), expect);
    assert_eq!(binomial_poly(5, 0), RatPoly::one());
}

#[test]
fn one_plus_y_power_examples() {
    let s = one_plus_y_power(0, 2);
    assert_eq!(s.coeff(0), &RatPoly::one());
    assert_eq!(s.coeff(1), &binomial_poly(0, 1));
    assert_eq!(s.coeff(2), &binomial_poly(0, 2));

    let s = one_plus_y_power(-1, 1);
    assert_eq!(
        s.coeff(1),
        &RatPoly::from_coeffs(vec![(1, rat(1, 1)), (0, rat(-1, 1))])
    );

    // Evaluated at x = 3 with shift 0 this is (1+y)^3.
    let s = one_plus_y_power(0, 3);
    let at3: Vec<Rational> = (0..=3).map(|k| s.coeff(k).eval(&rat(3, 1))).collect();
    assert_eq!(at3, vec![rat(1, 1), rat(3, 1), rat(3, 1), rat(1, 1)]);
}

#[test]
fn one_plus_y_const_negative_exponent() {
    // (1+y)^{-1} = 1 - y + y^2 - y^3 + ...
    let s = one_plus_y_const(-1, 3);
    let got: Vec<Rational> = (0..=3)
        .map(|k| s.coeff(k).as_constant().unwrap())
        .collect();
    assert_eq!(got, vec![rat(1, 1), rat(-1, 1), rat(1, 1), rat(-1, 1)]);
}

#[test]
fn permutation_basics() {
    let gamma = Permutation::from_cycles(5, &[vec![0, 1], vec![2, 3, 4]]);
    assert_eq!(gamma.cycle_type(), p(&[3, 2]));
    assert_eq!(gamma.num_cycles(), 2);
    assert_eq!(gamma.to_string(), "(1 2)(3 4 5)");
    let id = gamma.compose(&gamma.inverse());
    assert_eq!(id, Permutation::identity(5));

    // compose applies the right factor first
    let a = Permutation::from_cycles(3, &[vec![0, 1]]);
    let b = Permutation::from_cycles(3, &[vec![1, 2]]);
    let ab = a.compose(&b);
    assert_eq!(ab.image(1), 2); // b: 1 -> 2, a: 2 -> 2
    assert_eq!(ab.image(2), 0); // b: 2 -> 1, a: 1 -> 0
}

#[test]
fn partition_parse_and_display() {
    let mu: Partition = "3,5,3".parse().unwrap();
    assert_eq!(mu.parts(), &[5, 3, 3]);
    assert_eq!(mu.to_string(), "5,3,3");
    let nu: Partition = "2^3,1".parse().unwrap();
    assert_eq!(nu.parts(), &[2, 2, 2, 1]);
    assert!("0,2".parse::<Partition>().is_err());
    assert!("".parse::<Partition>().is_err());
    assert!("2^x".parse::<Partition>().is_err());
}

#[test]
fn partition_conjugate() {
    assert_eq!(p(&[4, 2, 1]).conjugate(), p(&[3, 2, 1, 1]));
    assert_eq!(p(&[3, 3]).conjugate(), p(&[2, 2, 2]));
    for lambda in partitions_of(8) {
        assert_eq!(lambda.conjugate().conjugate(), lambda);
    }
}

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-1000i64..1000, 1i64..60).prop_map(|(n, d)| rat(n, d))
}

fn arb_poly() -> impl Strategy<Value = RatPoly> {
    proptest::collection::vec((0usize..8, arb_rational()), 0..6)
        .prop_map(RatPoly::from_coeffs)
}

proptest! {
    #[test]
    fn rational_arithmetic_exact(a in arb_rational(), b in arb_rational()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        if !num_traits::Zero::is_zero(&b) {
            prop_assert_eq!((&a * &b) / &b, a);
        }
    }

    #[test]
    fn poly_arithmetic_exact(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(a.add(&b).sub(&b), a.clone());
        if !b.is_zero() {
            let (q, r) = a.mul(&b).div_rem(&b);
            prop_assert_eq!(q, a);
            prop_assert!(r.is_zero());
        }
    }

    #[test]
    fn poly_eval_is_ring_hom(a in arb_poly(), b in arb_poly(), x in arb_rational()) {
        prop_assert_eq!(a.mul(&b).eval(&x), a.eval(&x) * b.eval(&x));
        prop_assert_eq!(a.add(&b).eval(&x), a.eval(&x) + b.eval(&x));
    }

    #[test]
    fn yseries_mul_matches_truncated_poly_mul(
        a in proptest::collection::vec(arb_poly(), 1..5),
        b in proptest::collection::vec(arb_poly(), 1..5),
    ) {
        let trunc = a.len().max(b.len()) - 1;
        let pad = |v: &[RatPoly]| {
            let mut v = v.to_vec();
            v.resize(trunc + 1, RatPoly::zero());
            v
        };
        let (a, b) = (pad(&a), pad(&b));
        let sa = YSeries::from_coeffs(a.clone());
        let sb = YSeries::from_coeffs(b.clone());
        let prod = sa.mul(&sb);
        // oracle: full convolution, then truncate
        for k in 0..=trunc {
            let mut expect = RatPoly::zero();
            for i in 0..=k {
                expect = expect.add(&a[i].mul(&b[k - i]));
            }
            prop_assert_eq!(prod.coeff(k), &expect);
        }
    }
}
