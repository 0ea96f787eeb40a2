//! Simplicial isomorphism testing for small complexes.

use std::collections::BTreeMap;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::simplex::VertexId;

/// Hard cap on vertex counts for the backtracking search.
pub const ISO_VERTEX_LIMIT: usize = 16;

/// Searches for a vertex bijection carrying faces of `a` onto faces of `b`.
/// Returns a witness map on success.
///
/// Candidates are pruned by a per-vertex signature (ghost status, degree in
/// the 1-skeleton, multiset of containing-facet sizes) before backtracking.
pub fn is_isomorphic(
    a: &SimplicialComplex,
    b: &SimplicialComplex,
) -> Result<Option<BTreeMap<VertexId, VertexId>>> {
    let n = a.vertices().len();
    if n > ISO_VERTEX_LIMIT || b.vertices().len() > ISO_VERTEX_LIMIT {
        return Err(Error::IsomorphismBound {
            got: n.max(b.vertices().len()),
            limit: ISO_VERTEX_LIMIT,
        });
    }
    if n != b.vertices().len() || a.facets().len() != b.facets().len() || a.dim() != b.dim() {
        return Ok(None);
    }
    let sig_a: Vec<Signature> = a.vertices().iter().map(|v| signature(a, *v)).collect();
    let sig_b: Vec<Signature> = b.vertices().iter().map(|v| signature(b, *v)).collect();
    {
        let mut sa = sig_a.clone();
        let mut sb = sig_b.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return Ok(None);
        }
    }

    let mut assigned: Vec<Option<usize>> = vec![None; n]; // a-index -> b-index
    let mut used = vec![false; n];
    if backtrack(a, b, &sig_a, &sig_b, 0, &mut assigned, &mut used) {
        let map = assigned
            .iter()
            .enumerate()
            .map(|(i, j)| (a.vertices()[i], b.vertices()[j.unwrap()]))
            .collect();
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

type Signature = (bool, usize, Vec<usize>);

fn signature(k: &SimplicialComplex, v: VertexId) -> Signature {
    let mut facet_sizes: Vec<usize> = k
        .facets()
        .iter()
        .filter(|f| f.contains_vertex(v))
        .map(|f| f.len())
        .collect();
    facet_sizes.sort_unstable();
    let ghost = facet_sizes.is_empty();
    let degree = k
        .faces_of_dim(1)
        .iter()
        .filter(|e| e.contains_vertex(v))
        .count();
    (ghost, degree, facet_sizes)
}

fn backtrack(
    a: &SimplicialComplex,
    b: &SimplicialComplex,
    sig_a: &[Signature],
    sig_b: &[Signature],
    pos: usize,
    assigned: &mut Vec<Option<usize>>,
    used: &mut Vec<bool>,
) -> bool {
    let n = a.vertices().len();
    if pos == n {
        return check_full(a, b, assigned);
    }
    for j in 0..n {
        if used[j] || sig_a[pos] != sig_b[j] {
            continue;
        }
        assigned[pos] = Some(j);
        used[j] = true;
        if partial_ok(a, b, pos, assigned) && backtrack(a, b, sig_a, sig_b, pos + 1, assigned, used)
        {
            return true;
        }
        assigned[pos] = None;
        used[j] = false;
    }
    false
}

/// Edges between already-assigned vertices must map to edges and
/// non-edges to non-edges.
fn partial_ok(
    a: &SimplicialComplex,
    b: &SimplicialComplex,
    pos: usize,
    assigned: &[Option<usize>],
) -> bool {
    let va = a.vertices()[pos];
    let wb = b.vertices()[assigned[pos].unwrap()];
    for (i, slot) in assigned.iter().enumerate().take(pos) {
        let ua = a.vertices()[i];
        let ub = b.vertices()[slot.unwrap()];
        let ea = edge(a, ua, va);
        let eb = edge(b, ub, wb);
        if ea != eb {
            return false;
        }
    }
    true
}

fn edge(k: &SimplicialComplex, u: VertexId, v: VertexId) -> bool {
    let s = crate::simplex::Simplex::new([u.0.min(v.0), u.0.max(v.0)]);
    match s {
        Ok(s) => k.contains(&s),
        Err(_) => false,
    }
}

fn check_full(a: &SimplicialComplex, b: &SimplicialComplex, assigned: &[Option<usize>]) -> bool {
    let map: BTreeMap<VertexId, VertexId> = assigned
        .iter()
        .enumerate()
        .map(|(i, j)| (a.vertices()[i], b.vertices()[j.unwrap()]))
        .collect();
    match a.relabel(|v| map[&v]) {
        Ok(relabeled) => relabeled == *b,
        Err(_) => false,
    }
}
