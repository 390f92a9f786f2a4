//! Simplicial complexes as explicit hereditary face collections, the
//! exchange property, and the graph matroid criterion (complement is a
//! disjoint union of complete graphs).

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Explicit hereditary face collection over vertices 0..vertex_count.
/// Faces are stored canonically sorted; the empty face is always present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    faces: BTreeSet<Vec<usize>>,
}

impl SimplicialComplex {
    /// Builds from an explicit face list, closing downward and adding the
    /// empty face.
    pub fn from_faces(vertex_count: usize, faces: &[Vec<usize>]) -> Result<Self> {
        let mut set: BTreeSet<Vec<usize>> = BTreeSet::new();
        set.insert(Vec::new());
        let mut work: Vec<Vec<usize>> = Vec::new();
        for f in faces {
            let mut f = f.clone();
            f.sort_unstable();
            f.dedup();
            for &v in &f {
                if v >= vertex_count {
                    return Err(Error::OutOfRange {
                        index: v,
                        order: vertex_count,
                    });
                }
            }
            if set.insert(f.clone()) {
                work.push(f);
            }
        }
        while let Some(f) = work.pop() {
            for skip in 0..f.len() {
                let sub: Vec<usize> = f
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != skip)
                    .map(|(_, &v)| v)
                    .collect();
                if set.insert(sub.clone()) {
                    work.push(sub);
                }
            }
        }
        Ok(SimplicialComplex {
            vertex_count,
            faces: set,
        })
    }

    /// Views a graph as a trim complex of dimension <= 1: the empty face,
    /// all singletons, and all edges.
    pub fn from_graph(g: &SimpleGraph) -> Self {
        let mut faces: BTreeSet<Vec<usize>> = BTreeSet::new();
        faces.insert(Vec::new());
        for v in 0..g.vertex_count() {
            faces.insert(vec![v]);
        }
        for (u, v) in g.edges() {
            faces.insert(vec![u, v]);
        }
        SimplicialComplex {
            vertex_count: g.vertex_count(),
            faces,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn contains(&self, face: &[usize]) -> bool {
        let mut f = face.to_vec();
        f.sort_unstable();
        f.dedup();
        self.faces.contains(&f)
    }

    pub fn dimension(&self) -> isize {
        self.faces
            .iter()
            .map(|f| f.len() as isize - 1)
            .max()
            .unwrap_or(-1)
    }

    pub fn is_trim(&self) -> bool {
        (0..self.vertex_count).all(|v| self.faces.contains(&vec![v]))
    }

    pub fn faces(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.faces.iter()
    }

    /// Standard matroid exchange: for all faces I, J with |I| = |J| + 1,
    /// some i in I \ J has J + {i} a face. On failure returns the first
    /// violating (I, J) in canonical order.
    pub fn has_exchange_property(&self) -> (bool, Option<(Vec<usize>, Vec<usize>)>) {
        for i_face in &self.faces {
            for j_face in &self.faces {
                if i_face.len() != j_face.len() + 1 {
                    continue;
                }
                let ok = i_face.iter().any(|&i| {
                    if j_face.binary_search(&i).is_ok() {
                        return false;
                    }
                    let mut extended = j_face.clone();
                    let at = extended.binary_search(&i).unwrap_err();
                    extended.insert(at, i);
                    self.faces.contains(&extended)
                });
                if !ok {
                    return (false, Some((i_face.clone(), j_face.clone())));
                }
            }
        }
        (true, None)
    }
}

/// Induced-P3 witness in the complement: (a, b, c) with a-b and b-c
/// complement edges and a-c a complement non-edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct P3Witness {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

/// Graph matroid criterion: true iff every connected component of the
/// complement is a complete graph.
pub fn is_matroid_graph(g: &SimpleGraph) -> (bool, Option<P3Witness>) {
    let comp = g.complement();
    for b in 0..comp.vertex_count() {
        let nb: Vec<usize> = comp.neighbors(b).iter_ones().collect();
        for (k, &a) in nb.iter().enumerate() {
            for &c in &nb[k + 1..] {
                if !comp.has_edge(a, c) {
                    return (false, Some(P3Witness { a, b, c }));
                }
            }
        }
    }
    (true, None)
}

/// Asserts the two matroid routes agree (they must, for every graph) and
/// returns the shared verdict.
pub fn cross_validate_matroid(g: &SimpleGraph) -> Result<bool> {
    if g.vertex_count() > 64 {
        return Err(Error::TooLarge {
            vertices: g.vertex_count(),
            max: 64,
        });
    }
    let by_components = is_matroid_graph(g).0;
    let by_exchange = SimplicialComplex::from_graph(g).has_exchange_property().0;
    if by_components != by_exchange {
        return Err(Error::Inconsistent);
    }
    Ok(by_components)
}

/// Extends a seed clique of a matroid graph to a maximum clique by taking
/// the lowest-index vertex from each complement component missed by the
/// seed.
pub fn extend_clique(g: &SimpleGraph, seed: &[usize]) -> Result<Vec<usize>> {
    for (i, &u) in seed.iter().enumerate() {
        for &v in &seed[i + 1..] {
            if !g.has_edge(u, v) {
                return Err(Error::NotAClique(u, v));
            }
        }
    }
    if !is_matroid_graph(g).0 {
        return Err(Error::NotAMatroid);
    }
    let mut clique: Vec<usize> = seed.to_vec();
    for comp in g.complement().components() {
        if !comp.iter().any(|v| seed.contains(v)) {
            clique.push(comp[0]); // components are sorted
        }
    }
    clique.sort_unstable();
    Ok(clique)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> SimpleGraph {
        let mut g = SimpleGraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    #[test]
    fn from_graph_face_counts() {
        assert_eq!(SimplicialComplex::from_graph(&SimpleGraph::new(3)).face_count(), 4);
        assert_eq!(SimplicialComplex::from_graph(&complete(3)).face_count(), 7);
        let g = SimpleGraph::from_edges(3, &[(0, 1)]);
        let c = SimplicialComplex::from_graph(&g);
        assert_eq!(c.face_count(), 5);
        assert_eq!(c.dimension(), 1);
        assert!(c.is_trim());
    }

    #[test]
    fn trim_checks() {
        let c = SimplicialComplex::from_faces(2, &[vec![0]]).unwrap();
        assert!(!c.is_trim());
        let c = SimplicialComplex::from_faces(0, &[]).unwrap();
        assert!(c.is_trim());
        assert_eq!(c.dimension(), -1);
    }

    #[test]
    fn downward_closure() {
        let c = SimplicialComplex::from_faces(4, &[vec![0, 1, 2]]).unwrap();
        assert!(c.contains(&[0, 1]));
        assert!(c.contains(&[2]));
        assert!(c.contains(&[]));
        assert!(!c.contains(&[3]));
        assert_eq!(c.face_count(), 8);
    }

    #[test]
    fn exchange_property_examples() {
        // K_3 as a complex: the uniform rank-2 structure satisfies EP.
        let (ok, _) = SimplicialComplex::from_graph(&complete(3)).has_exchange_property();
        assert!(ok);
        // Edge {0,1} plus isolated vertex 2: I = {0,1}, J = {2} violates.
        let g = SimpleGraph::from_edges(3, &[(0, 1)]);
        let (ok, witness) = SimplicialComplex::from_graph(&g).has_exchange_property();
        assert!(!ok);
        assert_eq!(witness, Some((vec![0, 1], vec![2])));
        // K_{2,2} is a matroid graph.
        let k22 = SimpleGraph::from_edges(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]);
        assert!(SimplicialComplex::from_graph(&k22).has_exchange_property().0);
    }

    #[test]
    fn matroid_graph_examples() {
        assert!(is_matroid_graph(&complete(5)).0);
        let g = SimpleGraph::from_edges(3, &[(0, 1)]);
        let (ok, w) = is_matroid_graph(&g);
        assert!(!ok);
        let w = w.unwrap();
        // Witness is an induced P3 of the complement.
        let comp = g.complement();
        assert!(comp.has_edge(w.a, w.b) && comp.has_edge(w.b, w.c) && !comp.has_edge(w.a, w.c));
    }

    #[test]
    fn cross_validation_agrees() {
        for (n, edges) in [
            (3, vec![(0, 1)]),
            (4, vec![(0, 2), (0, 3), (1, 2), (1, 3)]),
            (5, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]),
            (1, vec![]),
            (0, vec![]),
        ] {
            let g = SimpleGraph::from_edges(n, &edges);
            let v = cross_validate_matroid(&g).unwrap();
            assert_eq!(v, is_matroid_graph(&g).0);
        }
    }

    #[test]
    fn extend_clique_basics() {
        // Complement of two disjoint triangles = K_{3,3}: matroid with omega 2.
        let mut comp = SimpleGraph::new(6);
        for u in 0..3 {
            for v in u + 1..3 {
                comp.add_edge(u, v);
                comp.add_edge(u + 3, v + 3);
            }
        }
        let g = comp.complement();
        assert!(is_matroid_graph(&g).0);
        let c = extend_clique(&g, &[]).unwrap();
        assert_eq!(c, vec![0, 3]);
        let c = extend_clique(&g, &[4]).unwrap();
        assert_eq!(c, vec![0, 4]);
        // Seeding with a maximum clique returns it unchanged.
        let c = extend_clique(&g, &[1, 5]).unwrap();
        assert_eq!(c, vec![1, 5]);
        // Non-clique seed rejected.
        assert!(matches!(extend_clique(&g, &[0, 1]), Err(Error::NotAClique(0, 1))));
        // Non-matroid graph rejected.
        let p3 = SimpleGraph::from_edges(3, &[(0, 1)]);
        assert!(matches!(extend_clique(&p3, &[0]), Err(Error::NotAMatroid)));
    }
}
