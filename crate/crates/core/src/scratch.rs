//! Epoch-stamped scratch arrays, reset in O(1) between uses.

/// A vertex-indexed boolean set whose `clear` is O(1).
#[derive(Clone, Debug)]
pub(crate) struct Marks {
    stamp: Vec<u32>,
    epoch: u32,
}

impl Marks {
    pub fn new(n: usize) -> Self {
        Marks {
            stamp: vec![0; n],
            epoch: 1,
        }
    }

    pub fn clear(&mut self) {
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.epoch = 1;
        }
    }

    #[inline]
    pub fn get(&self, v: usize) -> bool {
        self.stamp[v] == self.epoch
    }

    #[inline]
    pub fn set(&mut self, v: usize) {
        self.stamp[v] = self.epoch;
    }

    /// Marks `v`, returning whether it was unmarked before.
    #[inline]
    pub fn insert(&mut self, v: usize) -> bool {
        let fresh = self.stamp[v] != self.epoch;
        self.stamp[v] = self.epoch;
        fresh
    }
}

/// A vertex-indexed map to `u32` values with a default for stale entries.
#[derive(Clone, Debug)]
pub(crate) struct Labels {
    value: Vec<u32>,
    marks: Marks,
    default: u32,
}

impl Labels {
    pub fn new(n: usize, default: u32) -> Self {
        Labels {
            value: vec![default; n],
            marks: Marks::new(n),
            default,
        }
    }

    pub fn clear(&mut self) {
        self.marks.clear();
    }

    #[inline]
    pub fn get(&self, v: usize) -> u32 {
        if self.marks.get(v) {
            self.value[v]
        } else {
            self.default
        }
    }

    #[inline]
    pub fn set(&mut self, v: usize, x: u32) {
        self.marks.set(v);
        self.value[v] = x;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn marks_reset() {
        let mut m = Marks::new(4);
        assert!(m.insert(2));
        assert!(!m.insert(2));
        m.clear();
        assert!(!m.get(2));
        let mut l = Labels::new(3, 7);
        l.set(1, 3);
        assert_eq!((l.get(0), l.get(1)), (7, 3));
        l.clear();
        assert_eq!(l.get(1), 7);
    }
}
