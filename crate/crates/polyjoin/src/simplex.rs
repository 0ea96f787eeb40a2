use std::fmt;

use crate::error::{Error, Result};

/// Label of a vertex. Labels are opaque non-negative integers; a complex
/// never contains two vertices with the same label.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct VertexId(pub u64);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u64> for VertexId {
    fn from(v: u64) -> Self {
        VertexId(v)
    }
}

/// An abstract simplex: a strictly increasing list of vertex labels.
/// The empty simplex (no vertices) is a valid value and is a face of
/// every complex.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Simplex {
    verts: Vec<VertexId>,
}

impl Simplex {
    /// Builds a simplex from labels in any order. Fails on duplicates.
    pub fn new(labels: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut verts: Vec<VertexId> = labels.into_iter().map(VertexId).collect();
        verts.sort_unstable();
        for w in verts.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateVertex(w[0]));
            }
        }
        Ok(Simplex { verts })
    }

    /// The empty simplex.
    pub fn empty() -> Self {
        Simplex { verts: Vec::new() }
    }

    pub(crate) fn from_sorted(verts: Vec<VertexId>) -> Self {
        debug_assert!(verts.windows(2).all(|w| w[0] < w[1]));
        Simplex { verts }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.verts
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    /// Dimension: one less than the number of vertices; the empty simplex
    /// has dimension -1.
    pub fn dim(&self) -> i64 {
        self.verts.len() as i64 - 1
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.verts.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &Simplex) -> bool {
        // both sorted; merge walk
        let mut it = other.verts.iter();
        'outer: for v in &self.verts {
            for w in it.by_ref() {
                if w == v {
                    continue 'outer;
                }
                if w > v {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn union(&self, other: &Simplex) -> Result<Simplex> {
        let mut verts = Vec::with_capacity(self.verts.len() + other.verts.len());
        let (mut i, mut j) = (0, 0);
        while i < self.verts.len() && j < other.verts.len() {
            match self.verts[i].cmp(&other.verts[j]) {
                std::cmp::Ordering::Less => {
                    verts.push(self.verts[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    verts.push(other.verts[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => return Err(Error::DuplicateVertex(self.verts[i])),
            }
        }
        verts.extend_from_slice(&self.verts[i..]);
        verts.extend_from_slice(&other.verts[j..]);
        Ok(Simplex { verts })
    }

    pub fn intersect(&self, other: &Simplex) -> Simplex {
        let verts = self
            .verts
            .iter()
            .filter(|v| other.contains_vertex(**v))
            .copied()
            .collect();
        Simplex { verts }
    }

    /// The simplex with `v` removed (unchanged if absent).
    pub fn without(&self, v: VertexId) -> Simplex {
        Simplex {
            verts: self.verts.iter().filter(|w| **w != v).copied().collect(),
        }
    }

    /// Applies a label map to every vertex. Fails if the map collapses
    /// two vertices.
    pub fn relabel(&self, map: impl Fn(VertexId) -> VertexId) -> Result<Simplex> {
        Simplex::new(self.verts.iter().map(|v| map(*v).0))
    }

    pub fn labels(&self) -> Vec<u64> {
        self.verts.iter().map(|v| v.0).collect()
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.verts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
