use std::fmt;

use smallvec::SmallVec;

use super::ComplexError;

/// Vertex label. Labels are positive integers; `0` is never used.
pub type Vertex = u32;

/// A simplex stored as its strictly increasing vertex sequence.
///
/// The empty simplex is allowed: it is the link of a facet and the `A` of a
/// 0-move's complement.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Simplex(SmallVec<[Vertex; 5]>);

impl Simplex {
    /// Builds a simplex from arbitrary vertices, sorting them. Repeated
    /// vertices are rejected.
    pub fn new<I: IntoIterator<Item = Vertex>>(vertices: I) -> Result<Self, ComplexError> {
        let mut v: SmallVec<[Vertex; 5]> = vertices.into_iter().collect();
        v.sort_unstable();
        if v.windows(2).any(|w| w[0] == w[1]) {
            return Err(ComplexError::RepeatedVertex(v.to_vec()));
        }
        if v.first() == Some(&0) {
            return Err(ComplexError::ZeroLabel);
        }
        Ok(Simplex(v))
    }

    /// Builds a simplex from a slice that is already strictly increasing.
    pub(crate) fn from_sorted(v: &[Vertex]) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]), "unsorted simplex {v:?}");
        Simplex(SmallVec::from_slice(v))
    }

    pub fn empty() -> Self {
        Simplex(SmallVec::new())
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Dimension; the empty simplex has dimension -1.
    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// True if every vertex of `self` is a vertex of `other`.
    pub fn is_face_of(&self, other: &Simplex) -> bool {
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.0, &other.0);
        while i < a.len() {
            if j == b.len() {
                return false;
            }
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Less => return false,
            }
        }
        true
    }

    pub fn is_disjoint(&self, other: &Simplex) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Equal => return false,
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
            }
        }
        true
    }

    /// Vertex union (the join when the simplices are disjoint).
    pub fn union(&self, other: &Simplex) -> Simplex {
        let mut out = SmallVec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.0, &other.0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i] < b[j]) {
                out.push(a[i]);
                i += 1;
            } else if i == a.len() || b[j] < a[i] {
                out.push(b[j]);
                j += 1;
            } else {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
        Simplex(out)
    }

    /// Vertices of `self` that are not in `other`.
    pub fn difference(&self, other: &Simplex) -> Simplex {
        Simplex(self.0.iter().copied().filter(|v| !other.contains(*v)).collect())
    }

    pub fn with(&self, v: Vertex) -> Simplex {
        let mut out = self.0.clone();
        match out.binary_search(&v) {
            Ok(_) => {}
            Err(pos) => out.insert(pos, v),
        }
        Simplex(out)
    }

    pub fn without(&self, v: Vertex) -> Simplex {
        Simplex(self.0.iter().copied().filter(|&w| w != v).collect())
    }

    /// The faces of codimension one, in order of the removed position
    /// (position `k` carries the boundary sign `(-1)^k`).
    pub fn facets(&self) -> impl Iterator<Item = Simplex> + '_ {
        (0..self.0.len()).map(move |k| {
            let mut v = self.0.clone();
            v.remove(k);
            Simplex(v)
        })
    }

    /// All nonempty faces, including the simplex itself.
    pub fn faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        let n = self.0.len();
        (1u32..(1u32 << n)).map(move |mask| {
            Simplex(
                (0..n)
                    .filter(|k| mask & (1 << k) != 0)
                    .map(|k| self.0[k])
                    .collect(),
            )
        })
    }

    /// Faces with exactly `k` vertices.
    pub fn faces_of_size(&self, k: usize) -> impl Iterator<Item = Simplex> + '_ {
        self.faces().filter(move |f| f.len() == k)
    }

    /// Applies a vertex map, returning `None` if two vertices collide.
    pub fn map<F: Fn(Vertex) -> Vertex>(&self, f: F) -> Option<Simplex> {
        let mut v: SmallVec<[Vertex; 5]> = self.0.iter().map(|&x| f(x)).collect();
        v.sort_unstable();
        if v.windows(2).any(|w| w[0] == w[1]) {
            None
        } else {
            Some(Simplex(v))
        }
    }

    /// Position of `v` inside the sorted vertex list.
    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.0.binary_search(&v).ok()
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ">")
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Shorthand used all over the tests and fixtures.
pub fn simplex(v: &[Vertex]) -> Simplex {
    Simplex::new(v.iter().copied()).expect("valid simplex literal")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_sorts_and_rejects_repeats() {
        assert_eq!(simplex(&[3, 1, 2]).vertices(), &[1, 2, 3]);
        assert!(Simplex::new([1, 2, 2]).is_err());
        assert!(Simplex::new([0, 2]).is_err());
    }

    #[test]
    fn set_operations() {
        let a = simplex(&[1, 3, 5]);
        let b = simplex(&[2, 3]);
        assert_eq!(a.union(&b), simplex(&[1, 2, 3, 5]));
        assert_eq!(a.difference(&b), simplex(&[1, 5]));
        assert!(simplex(&[1, 5]).is_face_of(&a));
        assert!(!b.is_face_of(&a));
        assert!(simplex(&[2, 4]).is_disjoint(&a));
        assert_eq!(a.faces().count(), 7);
        assert_eq!(a.facets().collect::<Vec<_>>(), vec![simplex(&[3, 5]), simplex(&[1, 5]), simplex(&[1, 3])]);
        assert_eq!(Simplex::empty().dim(), -1);
    }
}
