//! Disjoint-set forest (union-find) with path halving and union by size.

/// Union-find over dense indices `0..n`.
///
/// `find` uses path halving, `union` links by size, so a full pass over `m`
/// unions on `n` elements costs effectively O(n + m).
#[derive(Debug, Clone)]
pub struct DisjointSets {
    parent: Vec<u32>,
    size: Vec<u32>,
    sets: usize,
}

impl DisjointSets {
    pub fn new(n: usize) -> Self {
        assert!(n <= u32::MAX as usize, "disjoint-set forest index overflow");
        DisjointSets {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
            sets: n,
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    /// Number of disjoint sets currently represented.
    pub fn set_count(&self) -> usize {
        self.sets
    }

    pub fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let grand = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = grand;
            x = grand;
        }
        x
    }

    /// Merge the sets containing `a` and `b`; returns false if already joined.
    pub fn union(&mut self, a: u32, b: u32) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (big, small) = if self.size[ra as usize] >= self.size[rb as usize] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[small as usize] = big;
        self.size[big as usize] += self.size[small as usize];
        self.sets -= 1;
        true
    }

    /// Canonical labels: components numbered by first occurrence in index
    /// order, so the labeling is deterministic for a fixed element order.
    pub fn canonical_labels(&mut self) -> Vec<u32> {
        let n = self.len();
        let mut label_of_root = vec![u32::MAX; n];
        let mut labels = Vec::with_capacity(n);
        let mut next = 0u32;
        for i in 0..n as u32 {
            let r = self.find(i) as usize;
            if label_of_root[r] == u32::MAX {
                label_of_root[r] = next;
                next += 1;
            }
            labels.push(label_of_root[r]);
        }
        labels
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singletons_and_unions() {
        let mut d = DisjointSets::new(5);
        assert_eq!(d.set_count(), 5);
        assert!(d.union(0, 3));
        assert!(!d.union(3, 0));
        assert!(d.union(1, 2));
        assert_eq!(d.set_count(), 3);
        assert_eq!(d.find(0), d.find(3));
        assert_ne!(d.find(0), d.find(1));
    }

    #[test]
    fn canonical_labels_follow_first_occurrence() {
        let mut d = DisjointSets::new(6);
        d.union(4, 5);
        d.union(1, 3);
        // components by first occurrence: {0}=0, {1,3}=1, {2}=2, {4,5}=3
        assert_eq!(d.canonical_labels(), vec![0, 1, 2, 1, 3, 3]);
    }

    #[test]
    fn long_chain_flattens() {
        let mut d = DisjointSets::new(1000);
        for i in 0..999 {
            d.union(i, i + 1);
        }
        assert_eq!(d.set_count(), 1);
        let root = d.find(0);
        assert_eq!(d.find(999), root);
    }
}
