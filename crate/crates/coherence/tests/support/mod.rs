//! Brute-force word-problem oracle, independent of the production braid
//! code.
//!
//! It materializes every word up to a length bound and glues words related
//! by one local move: deleting an adjacent cancelling pair, the braid
//! relation on a same-sign triple, and far commutation.  Insertions are the
//! deletions seen from the longer word, so sweeping all words once covers
//! them.  Two words compare equal when they share a class.  The answer is
//! sound by construction; completeness comes from padding the bound past
//! the longest words under test.

pub struct BraidBall {
    letters: usize,
    bound: usize,
    offsets: Vec<usize>,
    parent: Vec<u32>,
}

impl BraidBall {
    pub fn new(strands: usize, bound: usize) -> Self {
        assert!(strands >= 2);
        let letters = 2 * (strands - 1);
        let mut offsets = vec![0usize; bound + 2];
        for n in 0..=bound {
            offsets[n + 1] = offsets[n] + letters.pow(n as u32);
        }
        let mut ball = BraidBall {
            letters,
            bound,
            parent: (0..offsets[bound + 1] as u32).collect(),
            offsets,
        };
        ball.sweep();
        ball
    }

    fn rank(&self, word: &[u8]) -> usize {
        let mut value = 0usize;
        for &d in word {
            value = value * self.letters + d as usize;
        }
        self.offsets[word.len()] + value
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let up = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = up;
            x = up;
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a as u32), self.find(b as u32));
        if a != b {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            self.parent[hi as usize] = lo;
        }
    }

    fn sweep(&mut self) {
        let mut scratch = Vec::new();
        for len in 1..=self.bound {
            let mut word = vec![0u8; len];
            'words: loop {
                self.moves(&word, &mut scratch);
                let mut i = len;
                loop {
                    if i == 0 {
                        break 'words;
                    }
                    i -= 1;
                    word[i] += 1;
                    if (word[i] as usize) < self.letters {
                        break;
                    }
                    word[i] = 0;
                }
            }
        }
    }

    fn moves(&mut self, word: &[u8], scratch: &mut Vec<u8>) {
        let here = self.rank(word);
        let gen = |d: u8| d / 2;
        for i in 0..word.len().saturating_sub(1) {
            let (a, b) = (word[i], word[i + 1]);
            if a ^ 1 == b {
                scratch.clear();
                scratch.extend_from_slice(&word[..i]);
                scratch.extend_from_slice(&word[i + 2..]);
                let other = self.rank(scratch);
                self.union(here, other);
            }
            if gen(a).abs_diff(gen(b)) >= 2 {
                scratch.clear();
                scratch.extend_from_slice(word);
                scratch.swap(i, i + 1);
                let other = self.rank(scratch);
                self.union(here, other);
            }
        }
        for i in 0..word.len().saturating_sub(2) {
            let (a, b, c) = (word[i], word[i + 1], word[i + 2]);
            if a == c && a % 2 == b % 2 && gen(a).abs_diff(gen(b)) == 1 {
                scratch.clear();
                scratch.extend_from_slice(word);
                scratch[i] = b;
                scratch[i + 1] = a;
                scratch[i + 2] = b;
                let other = self.rank(scratch);
                self.union(here, other);
            }
        }
    }

    fn digits(&self, word: &[i32]) -> Vec<u8> {
        assert!(word.len() <= self.bound, "word longer than the ball");
        word.iter()
            .map(|&l| {
                let g = l.unsigned_abs() as usize;
                assert!(l != 0 && 2 * g <= self.letters, "letter {l} out of range");
                (2 * (g - 1) + usize::from(l < 0)) as u8
            })
            .collect()
    }

    pub fn equal(&mut self, a: &[i32], b: &[i32]) -> bool {
        let (a, b) = (self.digits(a), self.digits(b));
        let (a, b) = (self.rank(&a), self.rank(&b));
        self.find(a as u32) == self.find(b as u32)
    }

    pub fn trivial(&mut self, word: &[i32]) -> bool {
        self.equal(word, &[])
    }
}

/// All words over the generators of the given braid group, up to the given
/// length, as signed letter sequences.
pub fn all_words(strands: usize, max_len: usize) -> Vec<Vec<i32>> {
    let mut alphabet = Vec::new();
    for g in 1..strands as i32 {
        alphabet.push(g);
        alphabet.push(-g);
    }
    let mut words: Vec<Vec<i32>> = vec![Vec::new()];
    let mut layer: Vec<Vec<i32>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for &l in &alphabet {
                let mut w = w.clone();
                w.push(l);
                next.push(w);
            }
        }
        words.extend(next.iter().cloned());
        layer = next;
    }
    words
}
