//! Words in the Artin braid group and a Garside-style solution to its word
//! problem.
//!
//! A word stores signed generator indices: letter `k > 0` is the positive
//! crossing of strands `k-1` and `k` (0-indexed positions, left strand over
//! right), `-k` its inverse.  Words compose top to bottom, so `a.then(b)`
//! stacks `b` below `a`.
//!
//! Equality goes through the left-greedy normal form `D^p f1 ... fl`: a
//! power of the half twist followed by a left-weighted sequence of simple
//! factors (permutation braids).  Two words are equal exactly when their
//! normal forms coincide, which also gives the canonical token sequence
//! printed by the CLI.

use std::fmt;

use crate::error::{Error, Result};

use super::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GarsideNormalForm {
    pub strands: usize,
    pub power: i64,
    pub factors: Vec<Permutation>,
}

fn free_reduce(letters: &[i32]) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(letters.len());
    for &l in letters {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

impl BraidWord {
    pub fn identity(strands: usize) -> Self {
        BraidWord { strands, letters: Vec::new() }
    }

    pub fn from_letters(strands: usize, letters: Vec<i32>) -> Result<Self> {
        for &l in &letters {
            let k = l.unsigned_abs() as usize;
            if l == 0 || k >= strands {
                return Err(Error::Strands(format!(
                    "letter {l} out of range for {strands} strands"
                )));
            }
        }
        Ok(BraidWord { strands, letters: free_reduce(&letters) })
    }

    pub fn sigma(strands: usize, k: usize) -> Result<Self> {
        BraidWord::from_letters(strands, vec![k as i32])
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    pub fn then(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::Strands(format!(
                "strand mismatch: {} vs {}",
                self.strands, other.strands
            )));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters: free_reduce(&letters) })
    }

    pub fn inverse(&self) -> BraidWord {
        let letters = self.letters.iter().rev().map(|&l| -l).collect();
        BraidWord { strands: self.strands, letters }
    }

    pub fn block_sum(&self, other: &BraidWord) -> BraidWord {
        let shift = self.strands as i32;
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().map(|&l| l + shift * l.signum()));
        BraidWord { strands: self.strands + other.strands, letters }
    }

    /// Embeds the word into a group on `strands` strands, displacing every
    /// index by `offset`.
    pub fn shifted(&self, offset: usize, strands: usize) -> Result<BraidWord> {
        if offset + self.strands > strands {
            return Err(Error::Strands(format!(
                "cannot place {} strands at offset {offset} within {strands}",
                self.strands
            )));
        }
        let shift = offset as i32;
        let letters = self.letters.iter().map(|&l| l + shift * l.signum()).collect();
        Ok(BraidWord { strands, letters })
    }

    /// The positive braid taking the first `a` strands over the next `b`,
    /// preserving order inside each block.
    pub fn block_crossing(a: usize, b: usize) -> BraidWord {
        let mut letters = Vec::with_capacity(a * b);
        for i in 0..a {
            for j in 0..b {
                letters.push((a - i + j) as i32);
            }
        }
        BraidWord { strands: a + b, letters }
    }

    pub fn half_twist(strands: usize) -> BraidWord {
        let mut letters = Vec::new();
        for len in (1..strands).rev() {
            for k in 1..=len {
                letters.push(k as i32);
            }
        }
        BraidWord { strands, letters }
    }

    pub fn full_twist(strands: usize) -> BraidWord {
        let half = BraidWord::half_twist(strands);
        half.then(&half).unwrap()
    }

    pub fn perm_of(&self) -> Permutation {
        let mut table: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let k = l.unsigned_abs() as usize;
            for v in table.iter_mut() {
                if *v == k - 1 {
                    *v = k;
                } else if *v == k {
                    *v = k - 1;
                }
            }
        }
        Permutation::from_table(table).expect("strand tracking stays bijective")
    }

    pub fn normal_form(&self) -> GarsideNormalForm {
        garside(self.strands, &self.letters)
    }

    pub fn equal(&self, other: &BraidWord) -> Result<bool> {
        if self.strands != other.strands {
            return Err(Error::Strands(format!(
                "strand mismatch: {} vs {}",
                self.strands, other.strands
            )));
        }
        Ok(self.normal_form() == other.normal_form())
    }

    pub fn is_trivial(&self) -> bool {
        let nf = self.normal_form();
        nf.power == 0 && nf.factors.is_empty()
    }

    /// Canonical token sequence of the normal form: a half-twist power
    /// token, then the factor words separated by `.` tokens.  The identity
    /// braid yields no tokens.
    pub fn normal_form_tokens(&self) -> Vec<String> {
        let nf = self.normal_form();
        let mut tokens = Vec::new();
        match nf.power {
            0 => {}
            1 => tokens.push("D".to_string()),
            -1 => tokens.push("D^-1".to_string()),
            p => tokens.push(format!("D^{p}")),
        }
        for factor in &nf.factors {
            if !tokens.is_empty() {
                tokens.push(".".to_string());
            }
            for k in factor_word(factor) {
                tokens.push(format!("s{k}"));
            }
        }
        tokens
    }

    pub fn normal_form_string(&self) -> String {
        self.normal_form_tokens().join(" ")
    }

    /// Parses whitespace-separated letters like `"s1 s2 s1^-1"`; the empty
    /// word is the identity.
    pub fn parse(strands: usize, text: &str) -> Result<BraidWord> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            let (body, sign) = match token.strip_suffix("^-1") {
                Some(body) => (body, -1),
                None => (token, 1),
            };
            let index = body
                .strip_prefix('s')
                .and_then(|d| d.parse::<i32>().ok())
                .filter(|&k| k > 0)
                .ok_or_else(|| {
                    Error::Strands(format!("bad braid letter {token:?}; expected sN or sN^-1"))
                })?;
            letters.push(sign * index);
        }
        BraidWord::from_letters(strands, letters)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if l > 0 {
                write!(f, "s{l}")?;
            } else {
                write!(f, "s{}^-1", -l)?;
            }
        }
        Ok(())
    }
}

fn w0(n: usize) -> Permutation {
    Permutation::from_table((0..n).rev().collect()).unwrap()
}

/// Positions `k` where writing `sigma_k` first shortens the factor.
fn starting_set(p: &Permutation) -> Vec<usize> {
    (1..p.degree()).filter(|&k| p.apply(k - 1) > p.apply(k)).collect()
}

fn finishing_set(p: &Permutation) -> Vec<usize> {
    starting_set(&p.inverse())
}

/// The factor `p . sigma_k`; lengthening exactly when `k` is outside the
/// finishing set.
fn append_letter(p: &Permutation, k: usize) -> Permutation {
    let table = p
        .table()
        .iter()
        .map(|&v| {
            if v == k - 1 {
                k
            } else if v == k {
                k - 1
            } else {
                v
            }
        })
        .collect();
    Permutation::from_table(table).unwrap()
}

/// The factor `sigma_k . p`.
fn prepend_letter(k: usize, p: &Permutation) -> Permutation {
    let mut table = p.table().to_vec();
    table.swap(k - 1, k);
    Permutation::from_table(table).unwrap()
}

/// Conjugation by the half twist, `D^-1 p D`.
fn tau(p: &Permutation) -> Permutation {
    let n = p.degree();
    let table = (0..n).map(|i| n - 1 - p.apply(n - 1 - i)).collect();
    Permutation::from_table(table).unwrap()
}

/// Transfers crossings from `b` to `a` until the pair is left-weighted,
/// meaning every starting letter of `b` already finishes `a`.
fn make_left_weighted(a: &mut Permutation, b: &mut Permutation) -> bool {
    let mut changed = false;
    loop {
        let finishing = finishing_set(a);
        let Some(k) = starting_set(b).into_iter().find(|k| !finishing.contains(k)) else {
            break;
        };
        *a = append_letter(a, k);
        *b = prepend_letter(k, b);
        changed = true;
    }
    changed
}

fn garside(strands: usize, letters: &[i32]) -> GarsideNormalForm {
    let full = w0(strands);
    let mut power: i64 = 0;
    let mut factors: Vec<Permutation> = Vec::new();
    for &l in letters {
        let k = l.unsigned_abs() as usize;
        if l > 0 {
            factors.push(Permutation::transposition(strands, k).unwrap());
        } else {
            // sigma_k^-1 = D^-1 (D sigma_k^-1); the parenthesized part is
            // simple, and pulling D^-1 to the front twists what came before.
            power -= 1;
            for f in factors.iter_mut() {
                *f = tau(f);
            }
            factors.push(append_letter(&full, k));
        }
    }
    let mut transfers = 0usize;
    loop {
        factors.retain(|f| !f.is_identity());
        while factors.first() == Some(&full) {
            power += 1;
            factors.remove(0);
        }
        let mut changed = false;
        for i in 0..factors.len().saturating_sub(1) {
            let (left, right) = factors.split_at_mut(i + 1);
            if make_left_weighted(&mut left[i], &mut right[0]) {
                changed = true;
            }
        }
        if !changed {
            break;
        }
        transfers += 1;
        assert!(
            transfers <= 4 * (letters.len() + 1) * strands * strands,
            "normal form failed to converge"
        );
    }
    GarsideNormalForm { strands, power, factors }
}

/// Deterministic positive word for a simple factor, smallest starting
/// letter first.
fn factor_word(p: &Permutation) -> Vec<usize> {
    let mut rest = p.clone();
    let mut word = Vec::new();
    loop {
        let starts = starting_set(&rest);
        let Some(&k) = starts.first() else { break };
        word.push(k);
        rest = prepend_letter(k, &rest);
    }
    word
}

/// The permutation braid realizing a block bijection with all-positive
/// crossings; the canonical lift used for interchange generators.
pub fn positive_lift(p: &Permutation) -> BraidWord {
    let letters = factor_word(p).into_iter().map(|k| k as i32).collect();
    BraidWord { strands: p.degree(), letters }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(strands: usize, letters: &[i32]) -> BraidWord {
        BraidWord::from_letters(strands, letters.to_vec()).unwrap()
    }

    #[test]
    fn braid_relation_holds() {
        assert!(word(3, &[1, 2, 1]).equal(&word(3, &[2, 1, 2])).unwrap());
        assert_eq!(
            word(3, &[1, 2, 1]).normal_form_string(),
            word(3, &[2, 1, 2]).normal_form_string()
        );
    }

    #[test]
    fn distinct_words_stay_distinct() {
        assert!(!word(3, &[1, 2]).equal(&word(3, &[2, 1])).unwrap());
        assert!(!word(3, &[1, 1]).equal(&BraidWord::identity(3)).unwrap());
    }

    #[test]
    fn free_cancellation_is_immediate() {
        assert!(word(3, &[1, -1]).letters().is_empty());
        assert_eq!(word(3, &[1, -1]).normal_form_string(), "");
        assert_eq!(BraidWord::identity(4).normal_form_string(), "");
    }

    #[test]
    fn half_twist_is_the_braid_relation_word() {
        let delta = BraidWord::half_twist(3);
        assert!(delta.equal(&word(3, &[1, 2, 1])).unwrap());
        assert_eq!(delta.normal_form_string(), "D");
        assert_eq!(word(3, &[-1]).normal_form_string(), "D^-1 . s1 s2");
    }

    #[test]
    fn full_twist_is_central() {
        let twist = BraidWord::full_twist(3);
        for k in 1..3 {
            let s = BraidWord::sigma(3, k).unwrap();
            assert!(twist.then(&s).unwrap().equal(&s.then(&twist).unwrap()).unwrap());
        }
    }

    #[test]
    fn underlying_permutation_is_a_homomorphism() {
        let a = word(4, &[1, -3, 2]);
        let b = word(4, &[2, 2, -1]);
        let lhs = a.then(&b).unwrap().perm_of();
        let rhs = a.perm_of().then(&b.perm_of()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn block_crossing_matches_block_transposition() {
        for a in 0..4 {
            for b in 0..4 {
                let braid = BraidWord::block_crossing(a, b);
                assert_eq!(braid.perm_of(), Permutation::block_transposition(a, b));
                assert_eq!(braid.letters().len(), a * b);
            }
        }
    }

    #[test]
    fn positive_lift_realizes_its_permutation() {
        let p = Permutation::from_table(vec![2, 0, 3, 1]).unwrap();
        let braid = positive_lift(&p);
        assert_eq!(braid.perm_of(), p);
        assert_eq!(braid.letters().len(), p.inversions());
    }

    #[test]
    fn words_round_trip_through_text() {
        let w = word(4, &[1, 3, -2]);
        assert_eq!(w.to_string(), "s1 s3 s2^-1");
        assert_eq!(BraidWord::parse(4, "s1 s3 s2^-1").unwrap(), w);
        assert_eq!(BraidWord::parse(4, "").unwrap(), BraidWord::identity(4));
        assert!(BraidWord::parse(2, "s9").is_err());
        assert!(BraidWord::parse(2, "x1").is_err());
    }

    #[test]
    fn inverse_cancels() {
        let w = word(4, &[1, -3, 2, 2]);
        assert!(w.then(&w.inverse()).unwrap().is_trivial());
        assert!(w.inverse().then(&w).unwrap().is_trivial());
    }
}
