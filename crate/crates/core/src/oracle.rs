//! Ground truth by brute force: conjugacy classes as explicit permutation
//! streams, product cycle-count histograms, and transitivity checks. Nothing
//! here touches character theory, so these results are an independent check
//! on the closed forms and the character-sum engine.

use num_bigint::BigInt;

use crate::combinat::{class_size, Partition, Permutation, RatPoly, Rational};
use crate::error::{Error, Result};

/// Default cap on the number of permutations streamed out of one class.
pub const DEFAULT_MAX_CLASS_SIZE: u64 = 50_000_000;

/// Streams every permutation of `[n]` with cycle-type `lambda`, each exactly
/// once, in a deterministic order: the cycle holding the smallest unplaced
/// element is chosen first, its length running over the distinct remaining
/// lengths in decreasing order, and its remaining elements in lexicographic
/// order.
pub struct ClassIterator {
    n: usize,
    frames: Vec<Frame>,
    used: Vec<bool>,
    /// remaining_lens[c] = how many cycles of length c still to place
    remaining_lens: Vec<usize>,
    started: bool,
    done: bool,
}

struct Frame {
    /// smallest element not placed by outer frames
    anchor: usize,
    /// distinct cycle lengths available when the frame was pushed, decreasing
    lens: Vec<usize>,
    /// index into `lens` of the length currently tried
    len_idx: usize,
    /// the ordered companions (cycle is anchor -> comp[0] -> ... -> anchor)
    comp: Vec<usize>,
}

impl ClassIterator {
    pub fn new(n: usize, lambda: &Partition) -> Self {
        assert_eq!(lambda.n(), n, "cycle-type must partition n");
        let mut remaining_lens = vec![0usize; n + 1];
        for &part in lambda.parts() {
            remaining_lens[part] += 1;
        }
        ClassIterator {
            n,
            frames: Vec::new(),
            used: vec![false; n],
            remaining_lens,
            started: false,
            done: false,
        }
    }

    fn smallest_free(&self) -> Option<usize> {
        self.used.iter().position(|&u| !u)
    }

    fn distinct_lens(&self) -> Vec<usize> {
        (1..self.remaining_lens.len())
            .rev()
            .filter(|&c| self.remaining_lens[c] > 0)
            .collect()
    }

    /// Smallest unused element strictly greater than `floor` (or any if None).
    fn next_free_above(&self, floor: Option<usize>) -> Option<usize> {
        let start = floor.map_or(0, |f| f + 1);
        (start..self.n).find(|&v| !self.used[v])
    }

    /// Pushes frames greedily (always taking the first choice at each level)
    /// until every element is placed.
    fn descend(&mut self) {
        while let Some(anchor) = self.smallest_free() {
            let lens = self.distinct_lens();
            debug_assert!(!lens.is_empty());
            self.used[anchor] = true;
            let mut frame = Frame { anchor, lens, len_idx: 0, comp: Vec::new() };
            let c = frame.lens[0];
            self.remaining_lens[c] -= 1;
            self.fill_smallest(&mut frame.comp, c - 1);
            self.frames.push(frame);
        }
    }

    fn fill_smallest(&mut self, comp: &mut Vec<usize>, upto: usize) {
        while comp.len() < upto {
            let v = self.next_free_above(None).expect("pool exhausted early");
            self.used[v] = true;
            comp.push(v);
        }
    }

    /// Advances the deepest frame to its next configuration, popping frames
    /// once exhausted. Returns false when the whole tree is exhausted.
    fn advance(&mut self) -> bool {
        while let Some(mut frame) = self.frames.pop() {
            if self.advance_frame(&mut frame) {
                self.frames.push(frame);
                self.descend();
                return true;
            }
            // frame fully exhausted: release its anchor and try the parent
            self.used[frame.anchor] = false;
        }
        false
    }

    /// Next configuration of a single frame: first advance the companion
    /// tuple in lexicographic order, then fall back to the next length.
    fn advance_frame(&mut self, frame: &mut Frame) -> bool {
        // try to advance the companion tuple from the tail
        let k = frame.comp.len();
        for pos in (0..k).rev() {
            let cur = frame.comp[pos];
            self.used[cur] = false;
            frame.comp.truncate(pos);
            if let Some(v) = self.next_free_above(Some(cur)) {
                self.used[v] = true;
                frame.comp.push(v);
                self.fill_smallest(&mut frame.comp, k);
                return true;
            }
        }
        // companion tuples for this length exhausted: next distinct length
        let old = frame.lens[frame.len_idx];
        self.remaining_lens[old] += 1;
        frame.len_idx += 1;
        if frame.len_idx >= frame.lens.len() {
            return false;
        }
        let c = frame.lens[frame.len_idx];
        self.remaining_lens[c] -= 1;
        frame.comp.clear();
        self.fill_smallest(&mut frame.comp, c - 1);
        true
    }

    fn current(&self) -> Permutation {
        let cycles: Vec<Vec<usize>> = self
            .frames
            .iter()
            .map(|f| {
                let mut c = Vec::with_capacity(f.comp.len() + 1);
                c.push(f.anchor);
                c.extend_from_slice(&f.comp);
                c
            })
            .collect();
        Permutation::from_cycles(self.n, &cycles)
    }
}

impl Iterator for ClassIterator {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.descend();
            return Some(self.current());
        }
        if self.advance() {
            Some(self.current())
        } else {
            self.done = true;
            None
        }
    }
}

/// Streams the conjugacy class C_lambda inside S_n.
pub fn permutations_of_type(n: usize, lambda: &Partition) -> ClassIterator {
    ClassIterator::new(n, lambda)
}

/// The fixed face permutation (1 2 .. p)(p+1 .. n); for p = n, the n-cycle.
pub fn canonical_gamma(p: usize, n: usize) -> Permutation {
    assert!(p >= 1 && p <= n, "need 1 <= p <= n");
    if p == n {
        return Permutation::from_cycles(n, &[(0..n).collect()]);
    }
    Permutation::from_cycles(n, &[(0..p).collect(), (p..n).collect()])
}

/// A deterministic representative of a cycle-type: consecutive blocks, parts
/// taken in decreasing order.
pub fn representative_of_type(lambda: &Partition) -> Permutation {
    let mut cycles = Vec::new();
    let mut next = 0;
    for &part in lambda.parts() {
        cycles.push((next..next + part).collect());
        next += part;
    }
    Permutation::from_cycles(lambda.n(), &cycles)
}

/// True iff the group generated by alpha and gamma is transitive on [n],
/// decided by union-find over the two permutations' cycles.
pub fn is_transitive(alpha: &Permutation, gamma: &Permutation) -> bool {
    assert_eq!(alpha.n(), gamma.n());
    let n = alpha.n();
    if n <= 1 {
        return true;
    }
    let mut uf = UnionFind::new(n);
    for i in 0..n {
        uf.union(i, alpha.image(i));
        uf.union(i, gamma.image(i));
    }
    uf.components() == 1
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }

    fn components(&mut self) -> usize {
        (0..self.parent.len()).filter(|&i| self.find(i) == i).count()
    }
}

fn check_guard(lambda: &Partition, limit: u64) -> Result<()> {
    let size = class_size(lambda);
    if size > BigInt::from(limit) {
        return Err(Error::GuardExceeded { size, limit });
    }
    Ok(())
}

/// Cycle-count histogram of alpha * gamma over alpha in C_mu, as the exact
/// class-average polynomial (1/|C_mu|) sum x^{kappa(alpha gamma)}; gamma is a
/// fixed representative of `face_type` (the result does not depend on the
/// choice). `connected_only` restricts to alpha acting transitively with
/// gamma while keeping the same 1/|C_mu| normalization.
pub fn oracle_poly(
    n: usize,
    face_type: &Partition,
    mu: &Partition,
    connected_only: bool,
) -> Result<RatPoly> {
    oracle_poly_with_limit(n, face_type, mu, connected_only, DEFAULT_MAX_CLASS_SIZE)
}

pub fn oracle_poly_with_limit(
    n: usize,
    face_type: &Partition,
    mu: &Partition,
    connected_only: bool,
    limit: u64,
) -> Result<RatPoly> {
    if face_type.n() != n || mu.n() != n {
        return Err(Error::InvalidInput(format!(
            "face_type sums to {}, mu sums to {}, expected {n}",
            face_type.n(),
            mu.n()
        )));
    }
    check_guard(mu, limit)?;
    let gamma = representative_of_type(face_type);
    let counts = product_histogram(n, mu, &gamma, connected_only);
    let total = class_size(mu);
    let poly = RatPoly::from_coeffs(
        counts
            .into_iter()
            .enumerate()
            .filter(|(_, c)| *c > 0)
            .map(|(m, c)| (m, Rational::new(BigInt::from(c), total.clone())))
            .collect(),
    );
    Ok(poly)
}

/// counts[m] = #{alpha in C_mu : kappa(alpha gamma) = m}, optionally
/// restricted to transitive pairs.
pub(crate) fn product_histogram(
    n: usize,
    mu: &Partition,
    gamma: &Permutation,
    connected_only: bool,
) -> Vec<u64> {
    let mut counts = vec![0u64; n + 1];
    for alpha in permutations_of_type(n, mu) {
        if connected_only && !is_transitive(&alpha, gamma) {
            continue;
        }
        counts[alpha.compose(gamma).num_cycles()] += 1;
    }
    counts
}

/// Counts pairs (sigma_1, sigma_2) in C_1 x C_2 whose product has `m` cycles,
/// by fixing a representative of C_2 and scaling by |C_2| (conjugation
/// symmetry makes the count independent of the representative).
pub fn oracle_xi(n: usize, class1: &Partition, class2: &Partition, m: usize) -> Result<BigInt> {
    oracle_xi_with_limit(n, class1, class2, m, DEFAULT_MAX_CLASS_SIZE)
}

pub fn oracle_xi_with_limit(
    n: usize,
    class1: &Partition,
    class2: &Partition,
    m: usize,
    limit: u64,
) -> Result<BigInt> {
    if class1.n() != n || class2.n() != n {
        return Err(Error::InvalidInput(format!(
            "classes sum to {} and {}, expected {n}",
            class1.n(),
            class2.n()
        )));
    }
    check_guard(class1, limit)?;
    let gamma = representative_of_type(class2);
    let counts = product_histogram(n, class1, &gamma, false);
    let hits = counts.get(m).copied().unwrap_or(0);
    Ok(class_size(class2) * BigInt::from(hits))
}
