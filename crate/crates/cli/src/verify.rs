use rayon::prelude::*;

use bicellular::bicellular::{poly_closed, w_number_bicellular, BicellularInstance};
use bicellular::charsum::{poly_charsum, w_number, ClassList};
use bicellular::combinat::class_size;
use bicellular::oracle::{canonical_gamma, is_transitive, oracle_poly, permutations_of_type};
use bicellular::zeros::{imaginary_axis_check, log_concavity_check};
use num_bigint::BigInt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Closed,
    W,
    Connectivity,
    Zeros,
    All,
}

/// One verified instance: either a pass or a counterexample record naming
/// the failing sub-check.
pub struct Outcome {
    pub suite: &'static str,
    pub instance: String,
    pub failure: Option<String>,
}

fn check_closed(inst: &BicellularInstance) -> Option<String> {
    let closed = poly_closed(inst).unwrap();
    let engine = poly_charsum(inst.n(), &inst.face_type(), inst.mu()).unwrap();
    if closed != engine {
        return Some(format!(
            "closed form {closed} != character sum {engine}"
        ));
    }
    match oracle_poly(inst.n(), &inst.face_type(), inst.mu(), false) {
        Ok(brute) if brute != closed => {
            Some(format!("closed form {closed} != oracle {brute}"))
        }
        Ok(_) => None,
        Err(e) => Some(format!("oracle failed: {e}")),
    }
}

fn check_w(inst: &BicellularInstance) -> Option<String> {
    let cl = ClassList::new(vec![inst.mu().clone(), inst.face_type()]).unwrap();
    for r in 1..=inst.n() {
        let a = w_number_bicellular(inst, r).unwrap();
        let b = w_number(&cl, r);
        if a != b {
            return Some(format!("W({r}): extraction {a} != character sum {b}"));
        }
    }
    None
}

fn check_connectivity(inst: &BicellularInstance) -> Option<String> {
    let gamma = canonical_gamma(inst.p(), inst.n());
    let mut total = 0u64;
    let mut connected = 0u64;
    for alpha in permutations_of_type(inst.n(), inst.mu()) {
        total += 1;
        if is_transitive(&alpha, &gamma) {
            connected += 1;
        }
    }
    if BigInt::from(total) != class_size(inst.mu()) {
        return Some(format!("enumerated {total} permutations"));
    }
    if total != connected {
        return Some(format!("{connected} of {total} pairs transitive"));
    }
    None
}

fn check_zeros(inst: &BicellularInstance) -> Option<String> {
    let poly = poly_closed(inst).unwrap();
    if !imaginary_axis_check(&poly) {
        return Some(format!("zero off the imaginary axis in {poly}"));
    }
    match log_concavity_check(&poly) {
        Ok(true) => None,
        Ok(false) => Some(format!("coefficients not log-concave in {poly}")),
        Err(e) => Some(format!("log-concavity check errored: {e}")),
    }
}

type Check = fn(&BicellularInstance) -> Option<String>;

/// Runs the selected suites over every valid instance with n <= max_n.
/// Instances are processed in parallel; results come back in deterministic
/// order.
pub fn run(max_n: usize, suite: Suite) -> Vec<Outcome> {
    let instances = BicellularInstance::enumerate_valid(max_n);
    let suites: Vec<(&'static str, Check)> = match suite {
        Suite::Closed => vec![("closed", check_closed)],
        Suite::W => vec![("w", check_w)],
        Suite::Connectivity => vec![("connectivity", check_connectivity)],
        Suite::Zeros => vec![("zeros", check_zeros)],
        Suite::All => vec![
            ("closed", check_closed),
            ("w", check_w),
            ("connectivity", check_connectivity),
            ("zeros", check_zeros),
        ],
    };
    let mut jobs = Vec::new();
    for (name, f) in &suites {
        for inst in &instances {
            jobs.push((*name, *f, inst.clone()));
        }
    }
    jobs.into_par_iter()
        .map(|(suite, f, inst)| Outcome {
            suite,
            instance: inst.to_string(),
            failure: f(&inst),
        })
        .collect()
}
