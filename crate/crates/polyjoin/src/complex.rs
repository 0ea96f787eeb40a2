//! Finite abstract simplicial complexes stored by inclusion-maximal facets.
//!
//! A complex carries an explicit vertex set, which may include *ghost
//! vertices*: declared vertices lying in no face. The empty complex on a
//! vertex set `V` is represented by the single facet `{}` (so every vertex
//! of `V` is a ghost). The void complex (no faces at all) is not
//! representable; membership of the empty simplex is an invariant.
//!
//! Equality of complexes compares vertex sets *and* facet sets; both are
//! kept in canonical order (sorted vertices, lexicographically sorted
//! facets), so derived equality and serialized output are deterministic.

use std::collections::BTreeSet;

use crate::bits::{maximalize, Mask};
use crate::error::{Error, Result};
use crate::simplex::{Simplex, VertexId};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertices: Vec<VertexId>,
    facets: Vec<Simplex>,
}

impl SimplicialComplex {
    /// Builds a complex on an explicit vertex set from a list of generating
    /// faces. Faces are re-maximalized and sorted; an empty face list yields
    /// the empty complex (facets = `[{}]`).
    pub fn new(
        vertices: impl IntoIterator<Item = u64>,
        faces: impl IntoIterator<Item = Simplex>,
    ) -> Result<Self> {
        let mut vertices: Vec<VertexId> = vertices.into_iter().map(VertexId).collect();
        vertices.sort_unstable();
        vertices.dedup();
        let faces: Vec<Simplex> = faces.into_iter().collect();
        for f in &faces {
            for v in f.vertices() {
                if vertices.binary_search(v).is_err() {
                    return Err(Error::FaceOutsideVertexSet(f.to_string()));
                }
            }
        }
        let n = vertices.len();
        let masks: Vec<Mask> = faces
            .iter()
            .map(|f| {
                Mask::from_indices(
                    n,
                    f.vertices()
                        .iter()
                        .map(|v| vertices.binary_search(v).unwrap()),
                )
            })
            .collect();
        let kept = maximalize(masks);
        let mut facets: Vec<Simplex> = kept
            .into_iter()
            .map(|m| Simplex::from_sorted(m.iter_ones().map(|i| vertices[i]).collect()))
            .collect();
        if facets.is_empty() {
            facets.push(Simplex::empty());
        }
        facets.sort_unstable();
        Ok(SimplicialComplex { vertices, facets })
    }

    /// Builds a complex whose vertex set is exactly the union of the given
    /// faces' vertices (no ghosts).
    pub fn from_facets(faces: impl IntoIterator<Item = Simplex>) -> Result<Self> {
        let faces: Vec<Simplex> = faces.into_iter().collect();
        let vertices: BTreeSet<u64> = faces
            .iter()
            .flat_map(|f| f.vertices().iter().map(|v| v.0))
            .collect();
        SimplicialComplex::new(vertices, faces)
    }

    /// Convenience constructor from label lists.
    pub fn from_labels<I, J>(vertices: I, facets: J) -> Result<Self>
    where
        I: IntoIterator<Item = u64>,
        J: IntoIterator,
        J::Item: IntoIterator<Item = u64>,
    {
        let faces = facets
            .into_iter()
            .map(Simplex::new)
            .collect::<Result<Vec<_>>>()?;
        SimplicialComplex::new(vertices, faces)
    }

    /// The empty complex on the given vertex set; every vertex is a ghost.
    pub fn empty_on(vertices: impl IntoIterator<Item = u64>) -> Self {
        SimplicialComplex::new(vertices, [Simplex::empty()]).unwrap()
    }

    /// The full simplex `Δ^{n-1}` on vertices `{1, .., n}`.
    pub fn simplex(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("simplex requires n >= 1".into()));
        }
        let all = Simplex::new(1..=n as u64)?;
        SimplicialComplex::new(1..=n as u64, [all])
    }

    /// The boundary `∂Δ^{n-1}` on vertices `{1, .., n}`: all proper subsets
    /// of the full vertex set. For `n = 1` this is the empty complex on one
    /// (ghost) vertex.
    pub fn boundary_simplex(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument(
                "boundary_simplex requires n >= 1".into(),
            ));
        }
        let mut faces = Vec::new();
        for drop in 1..=n as u64 {
            faces.push(Simplex::new((1..=n as u64).filter(|v| *v != drop))?);
        }
        SimplicialComplex::new(1..=n as u64, faces)
    }

    /// The polygon boundary `P_n`: the cycle `1-2-…-n-1` on `{1, .., n}`.
    pub fn polygon(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument("polygon requires n >= 3".into()));
        }
        let mut faces = Vec::new();
        for i in 1..=n as u64 {
            let j = if i == n as u64 { 1 } else { i + 1 };
            faces.push(Simplex::new([i, j])?);
        }
        SimplicialComplex::new(1..=n as u64, faces)
    }

    /// `n` isolated points on `{1, .., n}`.
    pub fn points(n: usize) -> Result<Self> {
        let faces = (1..=n as u64)
            .map(|i| Simplex::new([i]))
            .collect::<Result<Vec<_>>>()?;
        SimplicialComplex::new(1..=n as u64, faces)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    /// Dimension of the complex: max facet dimension; -1 for the empty
    /// complex.
    pub fn dim(&self) -> i64 {
        self.facets.iter().map(|f| f.dim()).max().unwrap_or(-1)
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Vertices in the declared vertex set that lie in no face.
    pub fn ghost_vertices(&self) -> Vec<VertexId> {
        self.vertices
            .iter()
            .copied()
            .filter(|v| !self.facets.iter().any(|f| f.contains_vertex(*v)))
            .collect()
    }

    pub fn has_ghosts(&self) -> bool {
        !self.ghost_vertices().is_empty()
    }

    /// True iff the complex is the full simplex on its vertex set (the
    /// empty complex on no vertices counts, being `Δ^{-1}`).
    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].len() == self.vertices.len()
    }

    fn vertex_index(&self, v: VertexId) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    pub(crate) fn mask_of(&self, s: &Simplex) -> Option<Mask> {
        let n = self.vertices.len();
        let mut m = Mask::empty(n);
        for v in s.vertices() {
            m.set(self.vertex_index(*v)?);
        }
        Some(m)
    }

    pub(crate) fn simplex_of_mask(&self, m: &Mask) -> Simplex {
        Simplex::from_sorted(m.iter_ones().map(|i| self.vertices[i]).collect())
    }

    pub(crate) fn facet_masks(&self) -> Vec<Mask> {
        self.facets
            .iter()
            .map(|f| self.mask_of(f).expect("facet within vertex set"))
            .collect()
    }

    pub(crate) fn from_masks(vertices: Vec<VertexId>, masks: Vec<Mask>) -> Self {
        let kept = maximalize(masks);
        let mut facets: Vec<Simplex> = kept
            .into_iter()
            .map(|m| Simplex::from_sorted(m.iter_ones().map(|i| vertices[i]).collect()))
            .collect();
        if facets.is_empty() {
            facets.push(Simplex::empty());
        }
        facets.sort_unstable();
        SimplicialComplex { vertices, facets }
    }

    /// Membership test: `s` is a face iff it is contained in some facet.
    /// Vertices outside the vertex set make this false, never an error.
    pub fn contains(&self, s: &Simplex) -> bool {
        match self.mask_of(s) {
            Some(m) => self.facet_masks().iter().any(|f| m.is_subset(f)),
            None => false,
        }
    }

    /// All faces of the given dimension, each exactly once, in
    /// lexicographic order of vertex lists. Dimension -1 yields `[{}]`.
    pub fn faces_of_dim(&self, d: i64) -> Vec<Simplex> {
        if d < -1 {
            return Vec::new();
        }
        if d == -1 {
            return vec![Simplex::empty()];
        }
        let k = (d + 1) as usize;
        let mut out: BTreeSet<Simplex> = BTreeSet::new();
        for f in &self.facets {
            if f.len() < k {
                continue;
            }
            for combo in combinations(f.vertices(), k) {
                out.insert(Simplex::from_sorted(combo));
            }
        }
        out.into_iter().collect()
    }

    /// All faces including the empty simplex, in lexicographic order.
    pub fn all_faces(&self) -> Vec<Simplex> {
        let mut out: BTreeSet<Simplex> = BTreeSet::new();
        out.insert(Simplex::empty());
        for f in &self.facets {
            for k in 1..=f.len() {
                for combo in combinations(f.vertices(), k) {
                    out.insert(Simplex::from_sorted(combo));
                }
            }
        }
        out.into_iter().collect()
    }

    /// Number of faces in each dimension `0..=dim` (empty simplex not
    /// counted).
    pub fn f_vector(&self) -> Vec<usize> {
        let d = self.dim();
        (0..=d).map(|k| self.faces_of_dim(k).len()).collect()
    }

    /// Alternating sum Σ (-1)^d f_d over nonempty faces (unreduced).
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(d, f)| if d % 2 == 0 { *f as i64 } else { -(*f as i64) })
            .sum()
    }

    /// Join of two complexes on disjoint vertex sets: faces are unions of a
    /// face from each side. Joining with an empty complex adjoins its
    /// vertices as ghosts.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        for v in &self.vertices {
            if other.has_vertex(*v) {
                return Err(Error::NonDisjointJoin(*v));
            }
        }
        let vertices = self
            .vertices
            .iter()
            .chain(other.vertices.iter())
            .map(|v| v.0);
        let mut faces = Vec::with_capacity(self.facets.len() * other.facets.len());
        for a in &self.facets {
            for b in &other.facets {
                faces.push(a.union(b)?);
            }
        }
        SimplicialComplex::new(vertices, faces)
    }

    fn require_real_vertex(&self, v: VertexId) -> Result<()> {
        if !self.has_vertex(v) {
            return Err(Error::UnknownVertex(v));
        }
        if !self.facets.iter().any(|f| f.contains_vertex(v)) {
            return Err(Error::GhostVertex(v));
        }
        Ok(())
    }

    /// Link of `v`: faces disjoint from `v` whose union with `v` is a face.
    /// Returned on the vertex set minus `v` (ghosts may appear).
    pub fn link(&self, v: VertexId) -> Result<SimplicialComplex> {
        self.require_real_vertex(v)?;
        let faces: Vec<Simplex> = self
            .facets
            .iter()
            .filter(|f| f.contains_vertex(v))
            .map(|f| f.without(v))
            .collect();
        SimplicialComplex::new(
            self.vertices.iter().filter(|w| **w != v).map(|w| w.0),
            faces,
        )
    }

    /// Star of `v`: faces whose union with `v` is a face. Returned on the
    /// full vertex set.
    pub fn star(&self, v: VertexId) -> Result<SimplicialComplex> {
        self.require_real_vertex(v)?;
        let faces: Vec<Simplex> = self
            .facets
            .iter()
            .filter(|f| f.contains_vertex(v))
            .cloned()
            .collect();
        SimplicialComplex::new(self.vertices.iter().map(|w| w.0), faces)
    }

    /// Deletion (restriction) `K \ v`: faces not containing `v`, on the
    /// vertex set minus `v`.
    pub fn delete(&self, v: VertexId) -> Result<SimplicialComplex> {
        if !self.has_vertex(v) {
            return Err(Error::UnknownVertex(v));
        }
        let faces: Vec<Simplex> = self.facets.iter().map(|f| f.without(v)).collect();
        SimplicialComplex::new(
            self.vertices.iter().filter(|w| **w != v).map(|w| w.0),
            faces,
        )
    }

    /// Full subcomplex on `I`: all faces of the complex contained in `I`,
    /// as a complex on vertex set `I`.
    pub fn full_subcomplex(&self, subset: impl IntoIterator<Item = u64>) -> Result<SimplicialComplex> {
        let wanted: BTreeSet<VertexId> = subset.into_iter().map(VertexId).collect();
        for v in &wanted {
            if !self.has_vertex(*v) {
                return Err(Error::UnknownVertex(*v));
            }
        }
        let n = self.vertices.len();
        let sel = Mask::from_indices(
            n,
            wanted.iter().map(|v| self.vertex_index(*v).unwrap()),
        );
        let masks: Vec<Mask> = self
            .facet_masks()
            .into_iter()
            .map(|f| f.intersect(&sel))
            .collect();
        let restricted = SimplicialComplex::from_masks(self.vertices.clone(), masks);
        SimplicialComplex::new(
            wanted.iter().map(|v| v.0),
            restricted.facets.iter().cloned(),
        )
    }

    /// The k-skeleton: all faces of dimension at most `k`, on the same
    /// vertex set. `k = -1` yields the empty complex on the vertex set.
    pub fn skeleton(&self, k: i64) -> Result<SimplicialComplex> {
        if k < -1 {
            return Err(Error::InvalidArgument("skeleton requires k >= -1".into()));
        }
        let mut faces: Vec<Simplex> = self
            .facets
            .iter()
            .filter(|f| f.dim() <= k)
            .cloned()
            .collect();
        if k >= 0 {
            faces.extend(self.faces_of_dim(k));
        }
        SimplicialComplex::new(self.vertices.iter().map(|v| v.0), faces)
    }

    fn require_same_vertices(&self, other: &SimplicialComplex) -> Result<()> {
        if self.vertices != other.vertices {
            return Err(Error::MismatchedVertexSets);
        }
        Ok(())
    }

    /// Facet-wise union of two complexes on an identical vertex set.
    pub fn union_same_vertexset(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        self.require_same_vertices(other)?;
        SimplicialComplex::new(
            self.vertices.iter().map(|v| v.0),
            self.facets.iter().chain(other.facets.iter()).cloned(),
        )
    }

    /// Face-wise intersection of two complexes on an identical vertex set:
    /// faces lying in both.
    pub fn intersection_same_vertexset(
        &self,
        other: &SimplicialComplex,
    ) -> Result<SimplicialComplex> {
        self.require_same_vertices(other)?;
        let theirs = other.facet_masks();
        let mut masks = Vec::new();
        for a in self.facet_masks() {
            for b in &theirs {
                masks.push(a.intersect(b));
            }
        }
        Ok(SimplicialComplex::from_masks(self.vertices.clone(), masks))
    }

    /// True iff every face of `self` is a face of `other` (vertex sets need
    /// not match; membership is by labels).
    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.facets.iter().all(|f| other.contains(f))
    }

    /// Same complex on an enlarged vertex set (extra labels become ghosts).
    pub fn with_extra_vertices(
        &self,
        extra: impl IntoIterator<Item = u64>,
    ) -> Result<SimplicialComplex> {
        SimplicialComplex::new(
            self.vertices.iter().map(|v| v.0).chain(extra),
            self.facets.iter().cloned(),
        )
    }

    /// Same faces on a restricted vertex set; fails if a dropped vertex is
    /// not a ghost.
    pub fn without_vertex(&self, v: VertexId) -> Result<SimplicialComplex> {
        if !self.has_vertex(v) {
            return Err(Error::UnknownVertex(v));
        }
        if self.facets.iter().any(|f| f.contains_vertex(v)) {
            return Err(Error::InvalidArgument(format!(
                "vertex {v} lies in a face and cannot be dropped"
            )));
        }
        SimplicialComplex::new(
            self.vertices.iter().filter(|w| **w != v).map(|w| w.0),
            self.facets.iter().cloned(),
        )
    }

    /// Applies an injective label map to vertices and faces.
    pub fn relabel(&self, map: impl Fn(VertexId) -> VertexId) -> Result<SimplicialComplex> {
        let vertices: Vec<u64> = self.vertices.iter().map(|v| map(*v).0).collect();
        let mut sorted = vertices.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != vertices.len() {
            return Err(Error::InvalidArgument(
                "relabel map is not injective".into(),
            ));
        }
        let faces = self
            .facets
            .iter()
            .map(|f| f.relabel(&map))
            .collect::<Result<Vec<_>>>()?;
        SimplicialComplex::new(vertices, faces)
    }

    /// All minimal missing faces: subsets `ω` of the vertex set that are
    /// not faces while every proper subset is. Lexicographically ordered.
    ///
    /// Candidates of size k are generated as (k-1)-faces extended by one
    /// vertex, so the search is bounded by the face count rather than by
    /// 2^n.
    pub fn minimal_missing_faces(&self) -> Vec<Simplex> {
        let n = self.vertices.len();
        let facet_masks = self.facet_masks();
        let contains_mask =
            |m: &Mask| -> bool { facet_masks.iter().any(|f| m.is_subset(f)) };
        let mut out: BTreeSet<Simplex> = BTreeSet::new();
        // A candidate of size k+1 is a k-face plus one vertex; all proper
        // subsets must themselves be faces. Size-1 candidates (ghosts) fall
        // out of extending the empty face.
        let max_size = (self.dim() + 2).max(0) as usize;
        let mut faces_k: Vec<Mask> = vec![Mask::empty(n)]; // size 0
        for _size in 1..=max_size {
            let mut next: BTreeSet<Mask> = BTreeSet::new();
            let mut candidates: BTreeSet<Mask> = BTreeSet::new();
            for f in &faces_k {
                for i in 0..n {
                    if f.get(i) {
                        continue;
                    }
                    let mut ext = f.clone();
                    ext.set(i);
                    if contains_mask(&ext) {
                        next.insert(ext);
                    } else {
                        candidates.insert(ext);
                    }
                }
            }
            'cand: for c in candidates {
                for i in c.iter_ones() {
                    let sub = Mask::from_indices(n, c.iter_ones().filter(|j| *j != i));
                    if !contains_mask(&sub) {
                        continue 'cand;
                    }
                }
                out.insert(self.simplex_of_mask(&c));
            }
            faces_k = next.into_iter().collect();
        }
        out.into_iter().collect()
    }

    /// True iff the complex is flag: every minimal missing face has exactly
    /// two vertices (or there are none).
    pub fn is_flag(&self) -> bool {
        self.minimal_missing_faces().iter().all(|m| m.len() == 2)
    }

    /// Number of vertex pairs not spanning an edge.
    pub fn non_edge_count(&self) -> usize {
        let n = self.vertices.len();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                let e = Simplex::from_sorted(vec![self.vertices[i], self.vertices[j]]);
                if !self.contains(&e) {
                    count += 1;
                }
            }
        }
        count
    }

    /// The clique complex of the 1-skeleton: facets are the maximal sets of
    /// pairwise adjacent vertices (isolated vertices included; ghosts stay
    /// ghosts).
    pub fn clique_complex(&self) -> SimplicialComplex {
        let n = self.vertices.len();
        // adjacency masks
        let mut adj: Vec<Mask> = vec![Mask::empty(n); n];
        for e in self.faces_of_dim(1) {
            let i = self.vertex_index(e.vertices()[0]).unwrap();
            let j = self.vertex_index(e.vertices()[1]).unwrap();
            adj[i].set(j);
            adj[j].set(i);
        }
        let real: Vec<usize> = (0..n)
            .filter(|i| {
                self.facets
                    .iter()
                    .any(|f| f.contains_vertex(self.vertices[*i]))
            })
            .collect();
        let mut cliques: Vec<Mask> = Vec::new();
        // Bron–Kerbosch without pivoting; universes here are desk-scale.
        fn expand(
            r: &Mask,
            p: Vec<usize>,
            x: Vec<usize>,
            adj: &[Mask],
            n: usize,
            out: &mut Vec<Mask>,
        ) {
            if p.is_empty() && x.is_empty() {
                out.push(r.clone());
                return;
            }
            let mut p = p;
            let mut x = x;
            while let Some(v) = p.pop() {
                let mut r2 = r.clone();
                r2.set(v);
                let p2: Vec<usize> = p.iter().copied().filter(|u| adj[v].get(*u)).collect();
                let x2: Vec<usize> = x.iter().copied().filter(|u| adj[v].get(*u)).collect();
                expand(&r2, p2, x2, adj, n, out);
                x.push(v);
            }
        }
        expand(
            &Mask::empty(n),
            real,
            Vec::new(),
            &adj,
            n,
            &mut cliques,
        );
        SimplicialComplex::from_masks(self.vertices.clone(), cliques)
    }

    /// Decides whether the complex is the k-skeleton of a flag complex.
    /// Returns `Some(k)` (with `k = dim`) on success, `None` otherwise.
    ///
    /// Any flag complex with the same k-skeleton shares the 1-skeleton, so
    /// the clique complex of the complex's own 1-skeleton is the unique
    /// minimal candidate; it suffices to compare against its k-skeleton.
    pub fn is_k_skeleton_of_flag(&self) -> Result<Option<i64>> {
        if self.has_ghosts() {
            return Err(Error::GhostVertices);
        }
        let d = self.dim();
        let flag = self.clique_complex();
        let skel = flag.skeleton(d)?;
        Ok(if *self == skel { Some(d) } else { None })
    }
}

impl std::fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Complex(V={:?}, facets={:?})",
            self.vertices.iter().map(|v| v.0).collect::<Vec<_>>(),
            self.facets
        )
    }
}

/// All k-element sorted sub-lists of a sorted slice.
fn combinations(items: &[VertexId], k: usize) -> Vec<Vec<VertexId>> {
    let mut out = Vec::new();
    let n = items.len();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|i| items[*i]).collect());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sx(labels: impl IntoIterator<Item = u64>) -> Simplex {
        Simplex::new(labels).unwrap()
    }

    fn p4() -> SimplicialComplex {
        SimplicialComplex::polygon(4).unwrap()
    }

    #[test]
    fn membership() {
        let k = p4();
        assert!(k.contains(&sx([1, 2])));
        assert!(!k.contains(&sx([1, 3])));
        assert!(k.contains(&Simplex::empty()));
        assert!(!k.contains(&sx([9])));
    }

    #[test]
    fn face_enumeration() {
        let bd = SimplicialComplex::boundary_simplex(3).unwrap();
        let edges = bd.faces_of_dim(1);
        assert_eq!(edges, vec![sx([1, 2]), sx([1, 3]), sx([2, 3])]);
        let full = SimplicialComplex::simplex(3).unwrap();
        assert_eq!(full.all_faces().len(), 8);
        let empty = SimplicialComplex::empty_on([1, 2]);
        assert_eq!(empty.all_faces(), vec![Simplex::empty()]);
        assert_eq!(empty.dim(), -1);
        assert_eq!(empty.ghost_vertices().len(), 2);
    }

    #[test]
    fn join_basics() {
        let a = SimplicialComplex::from_labels([1], [[1]]).unwrap();
        let b = SimplicialComplex::from_labels([2], [[2]]).unwrap();
        let e = a.join(&b).unwrap();
        assert_eq!(e.facets(), &[sx([1, 2])]);

        // S⁰ * S⁰ = S¹ (a 4-cycle)
        let s0a = SimplicialComplex::from_labels([1, 2], [[1], [2]]).unwrap();
        let s0b = SimplicialComplex::from_labels([3, 4], [[3], [4]]).unwrap();
        let circ = s0a.join(&s0b).unwrap();
        assert_eq!(
            circ.facets(),
            &[sx([1, 3]), sx([1, 4]), sx([2, 3]), sx([2, 4])]
        );

        // join with an empty complex only adds a ghost
        let k = p4();
        let g = k.join(&SimplicialComplex::empty_on([9])).unwrap();
        assert_eq!(g.facets(), k.facets());
        assert_eq!(g.ghost_vertices(), vec![VertexId(9)]);

        assert!(k.join(&k).is_err());
    }

    #[test]
    fn link_star_delete() {
        let k = p4();
        let lk = k.link(VertexId(1)).unwrap();
        assert_eq!(lk.facets(), &[sx([2]), sx([4])]);
        assert_eq!(lk.ghost_vertices(), vec![VertexId(3)]);

        let st = k.star(VertexId(1)).unwrap();
        assert_eq!(st.facets(), &[sx([1, 2]), sx([1, 4])]);
        assert_eq!(st.vertices().len(), 4);

        let del = k.delete(VertexId(1)).unwrap();
        assert_eq!(del.facets(), &[sx([2, 3]), sx([3, 4])]);

        assert!(matches!(
            k.link(VertexId(7)),
            Err(Error::UnknownVertex(VertexId(7)))
        ));
        let g = k.join(&SimplicialComplex::empty_on([9])).unwrap();
        assert!(matches!(
            g.link(VertexId(9)),
            Err(Error::GhostVertex(VertexId(9)))
        ));
    }

    #[test]
    fn star_is_link_join_vertex() {
        let k = p4();
        for v in k.vertices().to_vec() {
            let lk = k.link(v).unwrap();
            let pt = SimplicialComplex::from_labels([v.0], [[v.0]]).unwrap();
            let joined = lk.join(&pt).unwrap();
            assert_eq!(joined, k.star(v).unwrap());
        }
    }

    #[test]
    fn pushout_of_star_and_deletion() {
        let k = p4();
        let v = VertexId(1);
        let st = k.star(v).unwrap();
        let del_bar = k.delete(v).unwrap().with_extra_vertices([v.0]).unwrap();
        assert_eq!(st.union_same_vertexset(&del_bar).unwrap(), k);
        let inter = st.intersection_same_vertexset(&del_bar).unwrap();
        let lk_bar = k.link(v).unwrap().with_extra_vertices([v.0]).unwrap();
        assert_eq!(inter, lk_bar);
    }

    #[test]
    fn full_subcomplexes() {
        let k = p4();
        let f = k.full_subcomplex([1, 3]).unwrap();
        assert_eq!(f.facets(), &[sx([1]), sx([3])]);
        let d3 = SimplicialComplex::simplex(4).unwrap();
        let e = d3.full_subcomplex([1, 2]).unwrap();
        assert_eq!(e.facets(), &[sx([1, 2])]);
        // nesting
        let outer = d3.full_subcomplex([1, 2, 3]).unwrap();
        assert_eq!(
            outer.full_subcomplex([1, 2]).unwrap(),
            d3.full_subcomplex([1, 2]).unwrap()
        );
        assert!(k.full_subcomplex([1, 9]).is_err());
    }

    #[test]
    fn skeleton_constructions() {
        let d2 = SimplicialComplex::simplex(3).unwrap();
        assert_eq!(
            d2.skeleton(1).unwrap(),
            SimplicialComplex::boundary_simplex(3).unwrap()
        );
        assert_eq!(
            d2.skeleton(-1).unwrap(),
            SimplicialComplex::empty_on([1, 2, 3])
        );
        assert!(SimplicialComplex::polygon(2).is_err());
    }

    #[test]
    fn union_intersection() {
        let k = p4();
        assert_eq!(k.union_same_vertexset(&k).unwrap(), k);
        assert_eq!(k.intersection_same_vertexset(&k).unwrap(), k);
        let other = SimplicialComplex::polygon(5).unwrap();
        assert!(k.union_same_vertexset(&other).is_err());
    }

    #[test]
    fn minimal_missing_faces_small() {
        let bd = SimplicialComplex::boundary_simplex(3).unwrap();
        assert_eq!(bd.minimal_missing_faces(), vec![sx([1, 2, 3])]);
        assert_eq!(p4().minimal_missing_faces(), vec![sx([1, 3]), sx([2, 4])]);
        let d3 = SimplicialComplex::simplex(4).unwrap();
        assert!(d3.minimal_missing_faces().is_empty());
        // ghost vertices are size-1 missing faces
        let g = SimplicialComplex::empty_on([1, 2]);
        assert_eq!(g.minimal_missing_faces(), vec![sx([1]), sx([2])]);
    }

    #[test]
    fn mmf_matches_exhaustive_enumeration() {
        // brute force over all subsets for a few complexes
        let samples = [
            p4(),
            SimplicialComplex::boundary_simplex(4).unwrap(),
            SimplicialComplex::from_labels(
                1..=5,
                vec![vec![1u64, 2, 3], vec![3, 4], vec![4, 5], vec![1, 5]],
            )
            .unwrap(),
        ];
        for k in samples {
            let n = k.vertices().len();
            let mut brute = Vec::new();
            for bits in 1u64..(1 << n) {
                let labels: Vec<u64> = (0..n)
                    .filter(|i| bits >> i & 1 == 1)
                    .map(|i| k.vertices()[i].0)
                    .collect();
                let s = sx(labels.clone());
                if k.contains(&s) {
                    continue;
                }
                let all_proper_in = (0..labels.len()).all(|drop| {
                    let sub = sx(labels
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| *i != drop)
                        .map(|(_, l)| *l));
                    k.contains(&sub)
                });
                if all_proper_in {
                    brute.push(s);
                }
            }
            brute.sort_unstable();
            assert_eq!(k.minimal_missing_faces(), brute);
        }
    }

    #[test]
    fn flag_tests() {
        assert!(p4().is_flag());
        assert!(!SimplicialComplex::boundary_simplex(3).unwrap().is_flag());
        assert!(SimplicialComplex::simplex(4).unwrap().is_flag());
    }

    #[test]
    fn k_skeleton_of_flag() {
        let bd = SimplicialComplex::boundary_simplex(3).unwrap();
        assert_eq!(bd.is_k_skeleton_of_flag().unwrap(), Some(1));
        let p5 = SimplicialComplex::polygon(5).unwrap();
        assert_eq!(p5.is_k_skeleton_of_flag().unwrap(), Some(1));
        let pts = SimplicialComplex::points(3).unwrap();
        assert_eq!(pts.is_k_skeleton_of_flag().unwrap(), Some(0));
        let d3 = SimplicialComplex::simplex(4).unwrap();
        assert_eq!(d3.is_k_skeleton_of_flag().unwrap(), Some(3));
        // 2-skeleton of Δ⁴
        let skel = SimplicialComplex::simplex(5).unwrap().skeleton(2).unwrap();
        assert_eq!(skel.is_k_skeleton_of_flag().unwrap(), Some(2));
        // ∂Δ³ is not a skeleton of any flag complex: its clique complex is
        // Δ³ and the 2-skeleton of Δ³ is ∂Δ³... which is the complex itself.
        let bd4 = SimplicialComplex::boundary_simplex(4).unwrap();
        assert_eq!(bd4.is_k_skeleton_of_flag().unwrap(), Some(2));
        assert!(SimplicialComplex::empty_on([1])
            .is_k_skeleton_of_flag()
            .is_err());
    }

    #[test]
    fn euler_characteristic_values() {
        assert_eq!(SimplicialComplex::simplex(4).unwrap().euler_characteristic(), 1);
        assert_eq!(
            SimplicialComplex::boundary_simplex(3).unwrap().euler_characteristic(),
            0
        );
        assert_eq!(p4().euler_characteristic(), 0);
        assert_eq!(SimplicialComplex::polygon(7).unwrap().euler_characteristic(), 0);
    }

    #[test]
    fn canonical_reader() {
        // generating faces out of order and dominated produce the canonical form
        let a = SimplicialComplex::from_labels(
            [4, 1, 2, 3],
            vec![vec![2u64, 1], vec![1], vec![4, 3], vec![2, 3], vec![1, 4]],
        )
        .unwrap();
        assert_eq!(a, p4());
    }

    #[test]
    fn non_edges() {
        assert_eq!(p4().non_edge_count(), 2);
        assert_eq!(SimplicialComplex::simplex(4).unwrap().non_edge_count(), 0);
        assert_eq!(SimplicialComplex::points(3).unwrap().non_edge_count(), 3);
    }
}
