//! Ribbon braids: an integer twist per strand together with a braid.
//!
//! Composition is the semidirect product.  Stacking `(v, b)` above `(w, c)`
//! adds to each strand the twist it picks up in the lower half, routed
//! through `b`'s permutation: strand `i` exits `b` at position `b(i)` and
//! collects `w[b(i)]` there.

use std::fmt;

use crate::error::{Error, Result};

use super::braid::BraidWord;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RibbonBraid {
    pub twists: Vec<i64>,
    pub braid: BraidWord,
}

impl RibbonBraid {
    pub fn new(twists: Vec<i64>, braid: BraidWord) -> Result<Self> {
        if twists.len() != braid.strands() {
            return Err(Error::Strands(format!(
                "{} twists on {} strands",
                twists.len(),
                braid.strands()
            )));
        }
        Ok(RibbonBraid { twists, braid })
    }

    pub fn identity(strands: usize) -> Self {
        RibbonBraid { twists: vec![0; strands], braid: BraidWord::identity(strands) }
    }

    pub fn strands(&self) -> usize {
        self.braid.strands()
    }

    pub fn then(&self, other: &RibbonBraid) -> Result<RibbonBraid> {
        if self.strands() != other.strands() {
            return Err(Error::Strands(format!(
                "strand mismatch: {} vs {}",
                self.strands(),
                other.strands()
            )));
        }
        let perm = self.braid.perm_of();
        let twists = self
            .twists
            .iter()
            .enumerate()
            .map(|(i, &t)| t + other.twists[perm.apply(i)])
            .collect();
        Ok(RibbonBraid { twists, braid: self.braid.then(&other.braid)? })
    }

    pub fn inverse(&self) -> RibbonBraid {
        let braid = self.braid.inverse();
        let entry = braid.perm_of();
        let twists = (0..self.strands()).map(|i| -self.twists[entry.apply(i)]).collect();
        RibbonBraid { twists, braid }
    }

    pub fn block_sum(&self, other: &RibbonBraid) -> RibbonBraid {
        let mut twists = self.twists.clone();
        twists.extend_from_slice(&other.twists);
        RibbonBraid { twists, braid: self.braid.block_sum(&other.braid) }
    }

    pub fn equal(&self, other: &RibbonBraid) -> Result<bool> {
        Ok(self.twists == other.twists && self.braid.equal(&other.braid)?)
    }

    pub fn is_identity(&self) -> bool {
        self.twists.iter().all(|&t| t == 0) && self.braid.is_trivial()
    }
}

impl fmt::Display for RibbonBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "twists(")?;
        for (i, t) in self.twists.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, ") braid[{}]", self.braid.normal_form_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ribbon(twists: &[i64], strands: usize, letters: &[i32]) -> RibbonBraid {
        RibbonBraid::new(
            twists.to_vec(),
            BraidWord::from_letters(strands, letters.to_vec()).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn twists_ride_their_strand_through_the_crossing() {
        // a twist above the crossing lands on the other side of one below it
        let lhs = ribbon(&[1, 0], 2, &[]).then(&ribbon(&[0, 0], 2, &[1])).unwrap();
        let rhs = ribbon(&[0, 0], 2, &[1]).then(&ribbon(&[0, 1], 2, &[])).unwrap();
        assert!(lhs.equal(&rhs).unwrap());
        assert_eq!(lhs.twists, vec![1, 0]);
    }

    #[test]
    fn twist_count_distinguishes() {
        let a = ribbon(&[1, 1], 2, &[1]);
        let b = ribbon(&[1, 1], 2, &[1, 1, 1]);
        assert!(!a.equal(&b).unwrap());
        assert!(a.equal(&a.clone()).unwrap());
    }

    #[test]
    fn inverse_cancels() {
        let r = ribbon(&[2, -1, 0], 3, &[1, 2, 1]);
        assert!(r.then(&r.inverse()).unwrap().is_identity());
        assert!(r.inverse().then(&r).unwrap().is_identity());
    }

    #[test]
    fn full_twist_on_one_strand_is_a_bare_twist() {
        let theta = RibbonBraid::new(vec![1], BraidWord::full_twist(1)).unwrap();
        assert_eq!(theta.twists, vec![1]);
        assert!(theta.braid.is_trivial());
    }
}
