use std::fmt;

/// Fixed-capacity set of vertex ids backed by a flag array.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Vec<u64>,
    capacity: usize,
}

impl VertexSet {
    pub fn empty(capacity: usize) -> Self {
        VertexSet {
            words: vec![0; capacity.div_ceil(64)],
            capacity,
        }
    }

    pub fn full(capacity: usize) -> Self {
        let mut set = VertexSet {
            words: vec![!0; capacity.div_ceil(64)],
            capacity,
        };
        set.trim();
        set
    }

    pub fn singleton(capacity: usize, v: usize) -> Self {
        let mut set = VertexSet::empty(capacity);
        set.insert(v);
        set
    }

    fn trim(&mut self) {
        let tail = self.capacity % 64;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v < self.capacity);
        self.words[v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < self.capacity);
        self.words[v / 64] |= 1 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < self.capacity);
        self.words[v / 64] &= !(1 << (v % 64));
    }

    pub fn clear(&mut self) {
        self.words.fill(0);
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.capacity, other.capacity);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * 64 + bit)
            })
        })
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    #[test]
    fn full_respects_capacity() {
        for cap in [0, 1, 63, 64, 65, 130] {
            let s = VertexSet::full(cap);
            assert_eq!(s.len(), cap);
            assert_eq!(s.iter().collect::<Vec<_>>(), (0..cap).collect::<Vec<_>>());
        }
        assert_eq!(VertexSet::empty(10).first(), None);
        assert_eq!(VertexSet::singleton(100, 77).first(), Some(77));
    }

    proptest! {
        #[test]
        fn behaves_like_btreeset(
            a in prop::collection::btree_set(0usize..150, 0..40),
            b in prop::collection::btree_set(0usize..150, 0..40),
        ) {
            let mut sa = VertexSet::empty(150);
            a.iter().for_each(|&v| sa.insert(v));
            let mut sb = VertexSet::empty(150);
            b.iter().for_each(|&v| sb.insert(v));
            prop_assert_eq!(sa.iter().collect::<BTreeSet<_>>(), a.clone());
            prop_assert_eq!(sa.is_subset(&sb), a.is_subset(&b));
            sa.intersect_with(&sb);
            let meet: BTreeSet<_> = a.intersection(&b).copied().collect();
            prop_assert_eq!(sa.iter().collect::<BTreeSet<_>>(), meet.clone());
            prop_assert_eq!(sa.len(), meet.len());
            prop_assert_eq!(sa.first(), meet.first().copied());
        }
    }
}
