use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::Rational;

/// A univariate polynomial with exact rational coefficients, stored sparsely
/// as degree -> coefficient with no zero entries.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RatPoly {
    coeffs: BTreeMap<usize, Rational>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        RatPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(0, c);
        }
        RatPoly { coeffs }
    }

    /// The monomial c x^deg.
    pub fn monomial(deg: usize, c: Rational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(deg, c);
        }
        RatPoly { coeffs }
    }

    pub fn from_coeffs(pairs: Vec<(usize, Rational)>) -> Self {
        let mut coeffs: BTreeMap<usize, Rational> = BTreeMap::new();
        for (deg, c) in pairs {
            let entry = coeffs.entry(deg).or_insert_with(Rational::zero);
            *entry += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        RatPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, deg: usize) -> Rational {
        self.coeffs.get(&deg).cloned().unwrap_or_else(Rational::zero)
    }

    /// (degree, coefficient) pairs in increasing degree order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coeffs.iter().map(|(d, c)| (*d, c))
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.values().next_back()
    }

    pub fn add(&self, other: &RatPoly) -> RatPoly {
        let mut coeffs = self.coeffs.clone();
        for (deg, c) in &other.coeffs {
            let entry = coeffs.entry(*deg).or_insert_with(Rational::zero);
            *entry += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        RatPoly { coeffs }
    }

    pub fn neg(&self) -> RatPoly {
        RatPoly {
            coeffs: self.coeffs.iter().map(|(d, c)| (*d, -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &RatPoly) -> RatPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        let mut coeffs: BTreeMap<usize, Rational> = BTreeMap::new();
        for (d1, c1) in &self.coeffs {
            for (d2, c2) in &other.coeffs {
                let entry = coeffs.entry(d1 + d2).or_insert_with(Rational::zero);
                *entry += c1 * c2;
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        RatPoly { coeffs }
    }

    pub fn scale(&self, factor: &Rational) -> RatPoly {
        if factor.is_zero() {
            return RatPoly::zero();
        }
        RatPoly {
            coeffs: self.coeffs.iter().map(|(d, c)| (*d, c * factor)).collect(),
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        // Horner over the sparse representation, highest degree first.
        let mut acc = Rational::zero();
        let mut prev_deg: Option<usize> = None;
        for (deg, c) in self.coeffs.iter().rev() {
            if let Some(p) = prev_deg {
                for _ in 0..(p - deg) {
                    acc *= x;
                }
            }
            acc += c;
            prev_deg = Some(*deg);
        }
        if let Some(p) = prev_deg {
            for _ in 0..p {
                acc *= x;
            }
        }
        acc
    }

    pub fn derivative(&self) -> RatPoly {
        let coeffs = self
            .coeffs
            .iter()
            .filter(|(d, _)| **d > 0)
            .map(|(d, c)| (d - 1, c * Rational::from(num_bigint::BigInt::from(*d))))
            .collect();
        RatPoly { coeffs }
    }

    /// Euclidean division: self = q * divisor + r with deg r < deg divisor.
    /// Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &RatPoly) -> (RatPoly, RatPoly) {
        let d_deg = divisor.degree().expect("division by the zero polynomial");
        let d_lead = divisor.leading_coeff().unwrap().clone();
        let mut quotient = RatPoly::zero();
        let mut rem = self.clone();
        while let Some(r_deg) = rem.degree() {
            if r_deg < d_deg {
                break;
            }
            let factor = rem.coeff(r_deg) / &d_lead;
            let step = RatPoly::monomial(r_deg - d_deg, factor);
            rem = rem.sub(&step.mul(divisor));
            quotient = quotient.add(&step);
        }
        (quotient, rem)
    }

    /// Monic greatest common divisor; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        match a.leading_coeff() {
            Some(lead) => {
                let inv = Rational::one() / lead;
                a.scale(&inv)
            }
            None => a,
        }
    }

    /// Some(c) if the polynomial is a constant (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.degree() {
            None => Some(Rational::zero()),
            Some(0) => Some(self.coeff(0)),
            Some(_) => None,
        }
    }
}

/// Compact form with terms in decreasing degree, e.g. "(1/4)x^4+(3/4)x^2".
impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().rev() {
            if !first {
                write!(f, "+")?;
            }
            if c.denom().is_one() {
                write!(f, "({})", c.numer())?;
            } else {
                write!(f, "({}/{})", c.numer(), c.denom())?;
            }
            match deg {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{deg}")?,
            }
            first = false;
        }
        Ok(())
    }
}
