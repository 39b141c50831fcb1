use std::fmt;
use std::str::FromStr;

/// An integer partition: a non-increasing sequence of positive parts.
/// Doubles as a cycle-type and as a Young diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
    n: usize,
}

impl Partition {
    /// Builds a partition from parts in any order. Panics on a zero part.
    pub fn new(mut parts: Vec<usize>) -> Self {
        assert!(parts.iter().all(|&p| p >= 1), "partition parts must be >= 1");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let n = parts.iter().sum();
        Partition { parts, n }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new(), n: 0 }
    }

    /// The single-row partition (n).
    pub fn row(n: usize) -> Self {
        Partition::new(vec![n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The number being partitioned.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of parts, written l(lambda).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn min_part(&self) -> usize {
        self.parts.last().copied().unwrap_or(0)
    }

    pub fn max_part(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// The multiplicity view [1^{m_1}, 2^{m_2}, ...] as (part, multiplicity)
    /// pairs in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Multiplicity of `part` in the partition.
    pub fn multiplicity(&self, part: usize) -> usize {
        self.parts.iter().filter(|&&p| p == part).count()
    }

    /// Builds the partition from (part, multiplicity) pairs.
    pub fn from_multiplicities(pairs: &[(usize, usize)]) -> Self {
        let mut parts = Vec::new();
        for &(p, m) in pairs {
            if m > 0 {
                assert!(p >= 1, "partition parts must be >= 1");
                parts.extend(std::iter::repeat(p).take(m));
            }
        }
        Partition::new(parts)
    }

    /// The conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0];
        let parts = (0..cols)
            .map(|j| self.parts.iter().filter(|&&p| p > j).count())
            .collect();
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

/// Parses "5,3,3" (parts, any order) or the multiplicity syntax "3^2,5".
impl FromStr for Partition {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            if tok.is_empty() {
                return Err(format!("empty component in partition '{s}'"));
            }
            let (base, mult) = match tok.split_once('^') {
                Some((b, m)) => {
                    let mult: usize = m
                        .trim()
                        .parse()
                        .map_err(|_| format!("bad multiplicity '{m}' in '{s}'"))?;
                    (b.trim(), mult)
                }
                None => (tok, 1),
            };
            let part: usize = base
                .parse()
                .map_err(|_| format!("bad part '{base}' in '{s}'"))?;
            if part == 0 {
                return Err(format!("partition parts must be positive in '{s}'"));
            }
            parts.extend(std::iter::repeat(part).take(mult));
        }
        if parts.is_empty() {
            return Err("empty partition".to_string());
        }
        Ok(Partition::new(parts))
    }
}
