use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use bicellular::combinat::{class_size, is_integer, Partition, RatPoly, Rational};
use bicellular::zeros::{imaginary_axis_check, log_concavity_check};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Closed,
    Charsum,
    Oracle,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Method::Closed => "closed",
            Method::Charsum => "charsum",
            Method::Oracle => "oracle",
        };
        write!(f, "{s}")
    }
}

/// One computed polynomial with its exact serialization: rationals travel as
/// decimal numerator/denominator strings, never floats.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolyReport {
    pub n: usize,
    pub p: usize,
    pub mu: Vec<usize>,
    pub method: Method,
    pub coeffs: Vec<CoeffEntry>,
    pub genus: Option<BTreeMap<usize, String>>,
    pub checks: Checks,
    pub ms: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CoeffEntry {
    pub deg: usize,
    pub num: String,
    pub den: String,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Checks {
    pub imag_axis: bool,
    pub log_concave: bool,
}

impl PolyReport {
    pub fn build(
        n: usize,
        p: usize,
        mu: &Partition,
        method: Method,
        poly: &RatPoly,
        ms: u64,
    ) -> Self {
        let coeffs = poly
            .terms()
            .map(|(deg, c)| CoeffEntry {
                deg,
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })
            .collect();
        let checks = Checks {
            imag_axis: imaginary_axis_check(poly),
            log_concave: log_concavity_check(poly).unwrap_or(false),
        };
        PolyReport {
            n,
            p,
            mu: mu.parts().to_vec(),
            method,
            coeffs,
            genus: genus_table(n, mu, poly).map(|t| {
                t.into_iter().map(|(g, c)| (g, c.to_string())).collect()
            }),
            checks,
            ms,
        }
    }

    /// Reconstructs the exact polynomial from the serialized coefficients.
    pub fn to_poly(&self) -> RatPoly {
        RatPoly::from_coeffs(
            self.coeffs
                .iter()
                .map(|e| {
                    let num: BigInt = e.num.parse().expect("decimal numerator");
                    let den: BigInt = e.den.parse().expect("decimal denominator");
                    (e.deg, Rational::new(num, den))
                })
                .collect(),
        )
    }
}

/// The genus reading of a cycle-count polynomial: degree m carries
/// |C_mu| * coeff maps of genus (n - l(mu) - m)/2. None when some occupied
/// degree breaks the relation (possible only when disconnected pairs are
/// counted, outside the closed-form regime).
pub fn genus_table(n: usize, mu: &Partition, poly: &RatPoly) -> Option<BTreeMap<usize, BigInt>> {
    let total = Rational::from(class_size(mu));
    let l = mu.len();
    let mut table = BTreeMap::new();
    for (m, coeff) in poly.terms() {
        if m > n - l || (n - l - m) % 2 != 0 {
            return None;
        }
        let count = coeff * &total;
        if !is_integer(&count) || count.is_negative() {
            return None;
        }
        table.insert((n - l - m) / 2, count.to_integer());
    }
    Some(table)
}

pub fn format_genus(table: &Option<BTreeMap<usize, BigInt>>) -> String {
    match table {
        None => String::new(),
        Some(t) => t
            .iter()
            .map(|(g, c)| format!("{g}:{c}"))
            .collect::<Vec<_>>()
            .join(";"),
    }
}

/// One CSV line in the shared column layout
/// n,p,mu,poly,genus_counts,imag_axis,log_concave,method,ms.
/// The mu field is always quoted (it contains commas); `ms` is the caller's
/// string so deterministic outputs can leave it empty.
#[allow(clippy::too_many_arguments)]
pub fn csv_line(
    n: usize,
    p: usize,
    mu: &Partition,
    poly: &RatPoly,
    genus: &Option<BTreeMap<usize, BigInt>>,
    checks: Checks,
    method: Method,
    ms: &str,
) -> String {
    format!(
        "{n},{p},\"{mu}\",{poly},{genus},{imag},{logc},{method},{ms}",
        genus = format_genus(genus),
        imag = checks.imag_axis,
        logc = checks.log_concave,
    )
}

pub const CSV_HEADER: &str = "n,p,mu,poly,genus_counts,imag_axis,log_concave,method,ms";

pub fn render_text(report: &PolyReport, poly: &RatPoly) -> String {
    let mut out = String::new();
    let face_rest = report.n - report.p;
    out.push_str(&format!(
        "P_[{},{}],mu=[{}](x) = {poly}\n",
        report.p,
        face_rest,
        report.mu.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
    ));
    match &report.genus {
        Some(t) => {
            let rows: Vec<String> = t.iter().map(|(g, c)| format!("{g}: {c}")).collect();
            out.push_str(&format!("genus: {{{}}}\n", rows.join(", ")));
        }
        None => out.push_str("genus: undefined (disconnected pairs counted)\n"),
    }
    out.push_str(&format!(
        "checks: imag_axis={}, log_concave={}\n",
        report.checks.imag_axis, report.checks.log_concave
    ));
    out.push_str(&format!("method: {} ({} ms)\n", report.method, report.ms));
    out
}
