//! Set partitions as restricted growth strings.
//!
//! A restricted growth string `a` of length `n` has `a[0] = 0` and
//! `a[i] <= 1 + max(a[..i])`; it encodes the partition whose blocks are the
//! level sets of `a`. Iterating them in lexicographic order visits every set
//! partition of `0..n` exactly once (Bell(n) of them).

/// Iterator over the set partitions of `0..n`, yielded as block bitmasks.
pub struct SetPartitions {
    n: usize,
    rgs: Vec<usize>,
    maxes: Vec<usize>,
    done: bool,
}

impl SetPartitions {
    pub fn new(n: usize) -> Self {
        SetPartitions {
            n,
            rgs: vec![0; n],
            maxes: vec![0; n],
            done: false,
        }
    }

    fn blocks(&self) -> Vec<u32> {
        let k = if self.n == 0 { 0 } else { self.maxes[self.n - 1] + 1 };
        let mut blocks = vec![0u32; k];
        for (v, &b) in self.rgs.iter().enumerate() {
            blocks[b] |= 1 << v;
        }
        blocks
    }

    fn advance(&mut self) -> bool {
        // rightmost position that can still grow
        for i in (1..self.n).rev() {
            if self.rgs[i] <= self.maxes[i - 1] {
                self.rgs[i] += 1;
                self.maxes[i] = self.maxes[i - 1].max(self.rgs[i]);
                for j in i + 1..self.n {
                    self.rgs[j] = 0;
                    self.maxes[j] = self.maxes[i];
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for SetPartitions {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if self.done {
            return None;
        }
        let out = self.blocks();
        if !self.advance() {
            self.done = true;
        }
        Some(out)
    }
}
