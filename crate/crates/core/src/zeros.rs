//! Exact verification of the analytic claims about the genus distribution
//! polynomial: every zero lies on the imaginary axis, and the nonzero
//! coefficient sequence is log-concave. The root-location decision runs
//! entirely over rationals: parity decomposition P(x) = x^e Q(x^2), then a
//! Sturm-sequence count of the real roots of the squarefree part of Q in
//! (-B, 0) with a Cauchy bound B.

use num_traits::{One, Signed, Zero};

use crate::combinat::{sign_of, RatPoly, Rational};
use crate::error::{Error, Result};

/// P(x) = x^e Q(x^2) with Q(0) != 0. Exists iff all occupied degrees of P
/// share one parity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityDecomposition {
    pub e: usize,
    pub q: RatPoly,
}

/// Structured refutation: two occupied degrees of different parity. A
/// polynomial with mixed-parity support cannot have all zeros on the
/// imaginary axis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedParity {
    pub even_degree: usize,
    pub odd_degree: usize,
}

/// Splits P as x^e Q(x^2), or reports the parity counterexample.
pub fn parity_decompose(poly: &RatPoly) -> std::result::Result<ParityDecomposition, MixedParity> {
    assert!(!poly.is_zero(), "parity decomposition needs a nonzero polynomial");
    let degrees: Vec<usize> = poly.terms().map(|(d, _)| d).collect();
    let mut even = None;
    let mut odd = None;
    for &d in &degrees {
        if d % 2 == 0 {
            even.get_or_insert(d);
        } else {
            odd.get_or_insert(d);
        }
    }
    if let (Some(e), Some(o)) = (even, odd) {
        return Err(MixedParity { even_degree: e, odd_degree: o });
    }
    let e = degrees[0]; // minimum occupied degree
    let q = RatPoly::from_coeffs(
        poly.terms()
            .map(|(d, c)| ((d - e) / 2, c.clone()))
            .collect(),
    );
    Ok(ParityDecomposition { e, q })
}

/// The squarefree part Q/gcd(Q, Q'), with the division checked exact.
fn squarefree_part(q: &RatPoly) -> RatPoly {
    let g = q.gcd(&q.derivative());
    let (quot, rem) = q.div_rem(&g);
    assert!(rem.is_zero(), "gcd must divide its argument");
    quot
}

/// Repeated-gcd multiplicity accounting: the degrees of the squarefree
/// layers must sum back to deg Q. Exercises the gcd/division path end to
/// end; a mismatch means broken polynomial arithmetic, not a bad input.
fn multiplicities_account(q: &RatPoly) -> bool {
    let deg = match q.degree() {
        Some(d) => d,
        None => return false,
    };
    let mut layer = q.clone();
    let mut total = 0usize;
    while layer.degree().is_some_and(|d| d > 0) {
        let g = layer.gcd(&layer.derivative());
        let (sf, rem) = layer.div_rem(&g);
        assert!(rem.is_zero());
        total += sf.degree().unwrap_or(0);
        layer = g;
    }
    total == deg
}

/// Sturm chain of a squarefree polynomial: negated-remainder sequence.
fn sturm_chain(q: &RatPoly) -> Vec<RatPoly> {
    let mut chain = vec![q.clone(), q.derivative()];
    loop {
        let len = chain.len();
        if chain[len - 1].is_zero() {
            chain.pop();
            break;
        }
        let (_, rem) = chain[len - 2].div_rem(&chain[len - 1]);
        chain.push(rem.neg());
    }
    chain
}

fn sign_changes(chain: &[RatPoly], at: &Rational) -> usize {
    let signs: Vec<i32> = chain
        .iter()
        .map(|p| sign_of(&p.eval(at)))
        .filter(|&s| s != 0)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots of the squarefree `q` in the half-open
/// interval (a, b].
pub fn sturm_count(q: &RatPoly, a: &Rational, b: &Rational) -> usize {
    let chain = sturm_chain(q);
    sign_changes(&chain, a) - sign_changes(&chain, b)
}

/// Cauchy root bound: every root z satisfies |z| < 1 + max|a_i|/|a_deg|.
fn cauchy_bound(q: &RatPoly) -> Rational {
    let deg = q.degree().expect("bound of a nonzero polynomial");
    let lead = q.coeff(deg);
    let mut max = Rational::zero();
    for (d, c) in q.terms() {
        if d == deg {
            continue;
        }
        let ratio = (c / &lead).abs();
        if ratio > max {
            max = ratio;
        }
    }
    Rational::one() + max
}

/// Decides exactly whether every complex root of Q is real and negative:
/// squarefree part, Cauchy bound, then a Sturm count over (-B, 0) which must
/// reach the full squarefree degree; a root at 0 refutes immediately.
pub fn all_roots_real_nonpositive(q: &RatPoly) -> bool {
    assert!(!q.is_zero(), "root location needs a nonzero polynomial");
    let deg = q.degree().unwrap();
    if deg == 0 {
        return true;
    }
    if q.coeff(0).is_zero() {
        return false; // root at 0
    }
    if !multiplicities_account(q) {
        return false;
    }
    let reduced = squarefree_part(q);
    let reduced_deg = reduced.degree().unwrap();
    let bound = cauchy_bound(&reduced);
    // reduced(0) != 0, so (-B, 0] counts exactly the negative roots
    sturm_count(&reduced, &-bound, &Rational::zero()) == reduced_deg
}

/// True iff every complex zero of P has real part exactly 0: single-parity
/// support and the folded polynomial Q has only negative real roots.
pub fn imaginary_axis_check(poly: &RatPoly) -> bool {
    match parity_decompose(poly) {
        Ok(decomp) => {
            if decomp.q.degree() == Some(0) {
                true
            } else {
                all_roots_real_nonpositive(&decomp.q)
            }
        }
        Err(_) => false,
    }
}

/// Log-concavity of the nonzero coefficients in increasing degree order:
/// a_j^2 >= a_{j-1} a_{j+1} for every interior j, exact comparison. Fewer
/// than three nonzero coefficients passes vacuously. Negative coefficients
/// are outside the claim and rejected.
pub fn log_concavity_check(poly: &RatPoly) -> Result<bool> {
    let coeffs: Vec<Rational> = poly.terms().map(|(_, c)| c.clone()).collect();
    if coeffs.iter().any(|c| c.is_negative()) {
        return Err(Error::InvalidInput(
            "log-concavity check expects nonnegative coefficients".into(),
        ));
    }
    for w in coeffs.windows(3) {
        if &w[1] * &w[1] < &w[0] * &w[2] {
            return Ok(false);
        }
    }
    Ok(true)
}
