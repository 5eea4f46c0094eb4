use std::cmp::Ordering;
use std::fmt;

/// A finite set of positive indices, kept sorted and duplicate-free.
///
/// Ordering is lexicographic on the sorted index lists, so the empty set
/// sorts first.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexSet(Vec<u32>);

/// The radicals `√p_i` multiplied together in one field monomial.
pub type RadicalMask = IndexSet;

/// Indices at which a group word has odd exponent; selects the automorphism
/// `Φ_x = ∏ f_i` acting on coefficients.
pub type Parity = IndexSet;

impl IndexSet {
    pub fn empty() -> Self {
        IndexSet(Vec::new())
    }

    pub fn singleton(i: u32) -> Self {
        assert!(i >= 1, "indices start at 1");
        IndexSet(vec![i])
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, i: u32) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn max(&self) -> Option<u32> {
        self.0.last().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn without(&self, i: u32) -> Self {
        IndexSet(self.0.iter().copied().filter(|&j| j != i).collect())
    }

    pub fn symmetric_difference(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        self.merge(other, |i, in_self, in_other| {
            if in_self != in_other {
                out.push(i);
            }
        });
        IndexSet(out)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut out = Vec::new();
        self.merge(other, |i, in_self, in_other| {
            if in_self && in_other {
                out.push(i);
            }
        });
        IndexSet(out)
    }

    pub fn intersection_len(&self, other: &Self) -> usize {
        let mut n = 0;
        self.merge(other, |_, a, b| n += usize::from(a && b));
        n
    }

    fn merge(&self, other: &Self, mut visit: impl FnMut(u32, bool, bool)) {
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(&&i), None) => {
                    visit(i, true, false);
                    a.next();
                }
                (None, Some(&&j)) => {
                    visit(j, false, true);
                    b.next();
                }
                (Some(&&i), Some(&&j)) => match i.cmp(&j) {
                    Ordering::Less => {
                        visit(i, true, false);
                        a.next();
                    }
                    Ordering::Greater => {
                        visit(j, false, true);
                        b.next();
                    }
                    Ordering::Equal => {
                        visit(i, true, true);
                        a.next();
                        b.next();
                    }
                },
            }
        }
    }
}

impl FromIterator<u32> for IndexSet {
    fn from_iter<T: IntoIterator<Item = u32>>(iter: T) -> Self {
        let mut v: Vec<u32> = iter.into_iter().collect();
        assert!(v.iter().all(|&i| i >= 1), "indices start at 1");
        v.sort_unstable();
        v.dedup();
        IndexSet(v)
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[u32]) -> IndexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn set_semantics() {
        assert_eq!(set(&[3, 1, 3]), set(&[1, 3]));
        assert!(set(&[]) < set(&[1]));
        assert!(set(&[1, 2]) < set(&[2]));
    }

    #[test]
    fn set_algebra() {
        let a = set(&[1, 2, 5]);
        let b = set(&[2, 3]);
        assert_eq!(a.symmetric_difference(&b), set(&[1, 3, 5]));
        assert_eq!(a.intersection(&b), set(&[2]));
        assert_eq!(a.intersection_len(&b), 1);
        assert_eq!(a.without(2), set(&[1, 5]));
    }
}
