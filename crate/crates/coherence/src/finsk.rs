//! Skeletal finite sets and the corner bijections of iterated coproducts.
//!
//! Objects are natural numbers; a morphism is a total function between
//! initial segments, stored as its lookup table.  The rest of the crate
//! identifies an m-fold coproduct of n with the number `m * n` under a fixed
//! flattening: copy `i` of `[n]` occupies the index block `i*n .. (i+1)*n`.
//! Everything downstream (term reindexings, strand layouts, interchange
//! squares) inherits this convention, so it lives here and nowhere else.
//!
//! Three families of bijections relate the two ways of flattening a double
//! coproduct:
//!
//! * `sigma(m, n)` transposes the m-by-n grid: index `i*n + j` goes to
//!   `j*m + i`.
//! * `mu(m, n, p)` merges an m-fold and an n-fold coproduct of `p` into an
//!   (m+n)-fold one.  Under the flattening above it is the identity table.
//! * `nu(p, m, n)` distributes a p-fold coproduct over a sum `m + n`.  It
//!   interleaves blocks: copy `i` of `[m]` lands at offset `i*(m+n)`, copy
//!   `i` of `[n]` at offset `i*(m+n) + m`.
//!
//! `verify_coprod_square` checks the compatibility square tying the three
//! together: transposing after merging equals interleaving after transposing
//! blockwise.

use crate::error::{Error, Result};

/// A function `[source] -> [target]` between initial segments of the
/// naturals, given by its table: `table[i]` is the image of `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinMap {
    pub source: usize,
    pub target: usize,
    pub table: Vec<usize>,
}

impl FinMap {
    pub fn new(target: usize, table: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = table.iter().find(|&&v| v >= target) {
            return Err(Error::invalid(format!(
                "table entry {bad} out of range for target {target}"
            )));
        }
        Ok(FinMap { source: table.len(), target, table })
    }

    pub fn identity(n: usize) -> Self {
        FinMap { source: n, target: n, table: (0..n).collect() }
    }

    pub fn apply(&self, i: usize) -> usize {
        self.table[i]
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.table.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn is_bijective(&self) -> bool {
        if self.source != self.target {
            return false;
        }
        let mut seen = vec![false; self.target];
        for &v in &self.table {
            if seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    }

    /// Inverse of a bijective map.
    pub fn inverse(&self) -> Result<FinMap> {
        if !self.is_bijective() {
            return Err(Error::invalid("cannot invert a non-bijective map"));
        }
        let mut table = vec![0; self.source];
        for (i, &v) in self.table.iter().enumerate() {
            table[v] = i;
        }
        Ok(FinMap { source: self.source, target: self.target, table })
    }
}

/// Composition `g . f` (apply `f` first).  Requires `f.target == g.source`.
pub fn fin_compose(g: &FinMap, f: &FinMap) -> Result<FinMap> {
    if f.target != g.source {
        return Err(Error::arity(format!(
            "compose: inner target {} != outer source {}",
            f.target, g.source
        )));
    }
    let table = f.table.iter().map(|&i| g.table[i]).collect();
    Ok(FinMap { source: f.source, target: g.target, table })
}

/// Block sum `f + g`: acts as `f` on the first block and as a shifted `g` on
/// the second.
pub fn fin_coproduct(f: &FinMap, g: &FinMap) -> FinMap {
    let mut table = Vec::with_capacity(f.source + g.source);
    table.extend(f.table.iter().copied());
    table.extend(g.table.iter().map(|&v| v + f.target));
    FinMap { source: f.source + g.source, target: f.target + g.target, table }
}

/// Which corner bijection to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CornerKind {
    /// Grid transpose on `m * n` elements; only `m`, `n` are used.
    Sigma,
    /// Merge of an m-fold and n-fold coproduct of `p`.
    Mu,
    /// Block interleaving of a p-fold coproduct over `m + n`; here the first
    /// argument plays the role of `p`.
    Nu,
}

/// Grid transpose: `i*n + j  |->  j*m + i`.
pub fn corner_sigma(m: usize, n: usize) -> FinMap {
    let mut table = vec![0; m * n];
    for i in 0..m {
        for j in 0..n {
            table[i * n + j] = j * m + i;
        }
    }
    FinMap { source: m * n, target: n * m, table }
}

/// Merge bijection; the identity table under left-nested flattening.
pub fn corner_mu(m: usize, n: usize, p: usize) -> FinMap {
    FinMap::identity((m + n) * p)
}

/// Block interleaving for a p-fold coproduct of `m + n`.
pub fn corner_nu(p: usize, m: usize, n: usize) -> FinMap {
    let mut table = vec![0; p * (m + n)];
    for i in 0..p {
        for j in 0..m {
            table[i * m + j] = i * (m + n) + j;
        }
    }
    for i in 0..p {
        for j in 0..n {
            table[p * m + i * n + j] = i * (m + n) + m + j;
        }
    }
    FinMap { source: p * (m + n), target: p * (m + n), table }
}

pub fn corner_iso(kind: CornerKind, m: usize, n: usize, p: usize) -> FinMap {
    match kind {
        CornerKind::Sigma => corner_sigma(m, n),
        CornerKind::Mu => corner_mu(m, n, p),
        CornerKind::Nu => corner_nu(p, m, n),
    }
}

/// Check the square relating the merge and interleave bijections through the
/// grid transpose:
///
/// ```text
///   m copies of p  +  n copies of p  --mu-->  (m+n) copies of p
///        |  sigma + sigma                          |  sigma
///        v                                         v
///   p copies of m  +  p copies of n  --nu-->   p copies of (m+n)
/// ```
///
/// Returns true when the two composite tables agree.
pub fn verify_coprod_square(m: usize, n: usize, p: usize) -> bool {
    let mu = corner_mu(m, n, p);
    let sigma_total = corner_sigma(m + n, p);
    let via_top = fin_compose(&sigma_total, &mu).expect("square arities");

    let side = fin_coproduct(&corner_sigma(m, p), &corner_sigma(n, p));
    let nu = corner_nu(p, m, n);
    let via_side = fin_compose(&nu, &side).expect("square arities");

    via_top == via_side
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_table_lookup() {
        // [0,0] : [2] -> [1] then [1] : [1] -> [2] gives [1,1].
        let f = FinMap::new(1, vec![0, 0]).unwrap();
        let g = FinMap::new(2, vec![1]).unwrap();
        let gf = fin_compose(&g, &f).unwrap();
        assert_eq!(gf.table, vec![1, 1]);
        assert_eq!(gf.source, 2);
        assert_eq!(gf.target, 2);
    }

    #[test]
    fn compose_identity_laws() {
        let f = FinMap::new(3, vec![2, 0, 2, 1]).unwrap();
        let left = fin_compose(&FinMap::identity(3), &f).unwrap();
        let right = fin_compose(&f, &FinMap::identity(4)).unwrap();
        assert_eq!(left, f);
        assert_eq!(right, f);
    }

    #[test]
    fn compose_arity_mismatch_rejected() {
        let f = FinMap::new(2, vec![0]).unwrap();
        let g = FinMap::new(1, vec![0, 0, 0]).unwrap();
        assert!(fin_compose(&g, &f).is_err());
    }

    #[test]
    fn coproduct_blocks() {
        let f = FinMap::identity(2);
        let g = FinMap::new(1, vec![0, 0]).unwrap();
        let s = fin_coproduct(&f, &g);
        assert_eq!(s.source, 4);
        assert_eq!(s.target, 3);
        assert_eq!(s.table, vec![0, 1, 2, 2]);
    }

    #[test]
    fn coproduct_associative() {
        let a = FinMap::new(2, vec![1, 0]).unwrap();
        let b = FinMap::new(1, vec![0]).unwrap();
        let c = FinMap::new(3, vec![2, 2]).unwrap();
        let left = fin_coproduct(&fin_coproduct(&a, &b), &c);
        let right = fin_coproduct(&a, &fin_coproduct(&b, &c));
        assert_eq!(left, right);
    }

    #[test]
    fn sigma_is_a_bijection_and_involutive_up_to_swap() {
        for m in 0..=5 {
            for n in 0..=5 {
                let s = corner_sigma(m, n);
                assert!(s.is_bijective(), "sigma({m},{n}) not bijective");
                let back = fin_compose(&corner_sigma(n, m), &s).unwrap();
                assert!(back.is_identity(), "sigma({n},{m}).sigma({m},{n}) != id");
            }
        }
    }

    #[test]
    fn sigma_2_3_explicit() {
        // 2x3 grid: (i,j) |-> (j,i).
        let s = corner_sigma(2, 3);
        assert_eq!(s.table, vec![0, 2, 4, 1, 3, 5]);
    }

    #[test]
    fn mu_is_identity_table() {
        let mu = corner_mu(2, 1, 3);
        assert!(mu.is_identity());
        assert_eq!(mu.source, 9);
    }

    #[test]
    fn nu_interleaves_blocks() {
        // p=2, m=1, n=2: blocks of sizes 1 and 2 interleave per copy.
        let nu = corner_nu(2, 1, 2);
        assert!(nu.is_bijective());
        assert_eq!(nu.table, vec![0, 3, 1, 2, 4, 5]);
    }

    #[test]
    fn square_commutes_small() {
        for m in 0..=4 {
            for n in 0..=4 {
                for p in 0..=4 {
                    assert!(verify_coprod_square(m, n, p), "square failed at ({m},{n},{p})");
                }
            }
        }
    }
}
