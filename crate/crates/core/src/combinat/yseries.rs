use super::{RatPoly, Rational};

/// A series in an auxiliary variable y truncated at a fixed degree; the
/// coefficient of y^k is a polynomial in x. All arithmetic discards terms of
/// y-degree above the truncation degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YSeries {
    coeffs: Vec<RatPoly>, // index k holds the coefficient of y^k
}

impl YSeries {
    /// The zero series truncated at y-degree `trunc`.
    pub fn zero(trunc: usize) -> Self {
        YSeries { coeffs: vec![RatPoly::zero(); trunc + 1] }
    }

    /// The constant series 1, truncated at y-degree `trunc`.
    pub fn one(trunc: usize) -> Self {
        let mut s = YSeries::zero(trunc);
        s.coeffs[0] = RatPoly::one();
        s
    }

    /// Builds from coefficients of y^0, y^1, ...; the truncation degree is
    /// `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<RatPoly>) -> Self {
        assert!(!coeffs.is_empty());
        YSeries { coeffs }
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &RatPoly {
        &self.coeffs[k]
    }

    pub fn add(&self, other: &YSeries) -> YSeries {
        assert_eq!(self.truncation(), other.truncation());
        YSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &YSeries) -> YSeries {
        assert_eq!(self.truncation(), other.truncation());
        YSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    /// Truncated product: terms of y-degree above the truncation are dropped.
    pub fn mul(&self, other: &YSeries) -> YSeries {
        assert_eq!(self.truncation(), other.truncation());
        let trunc = self.truncation();
        let mut coeffs = vec![RatPoly::zero(); trunc + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > trunc {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        YSeries { coeffs }
    }

    /// Multiplies every y-coefficient by a fixed polynomial in x.
    pub fn scale_poly(&self, factor: &RatPoly) -> YSeries {
        YSeries {
            coeffs: self.coeffs.iter().map(|c| c.mul(factor)).collect(),
        }
    }

    pub fn scale(&self, factor: &Rational) -> YSeries {
        YSeries {
            coeffs: self.coeffs.iter().map(|c| c.scale(factor)).collect(),
        }
    }
}
