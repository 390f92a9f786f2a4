//! Simple undirected graphs with packed-bit adjacency rows, exact maximum
//! clique via branch-and-bound with greedy-coloring bounds, and an
//! exhaustive small-instance oracle.

use std::fmt::Write as _;

use crate::bitset::Bitset;
use crate::error::{Error, Result};

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;
pub const ORACLE_MAX_VERTICES: usize = 24;

#[derive(Clone, Debug)]
pub struct SimpleGraph {
    vertex_count: usize,
    adjacency: Vec<Bitset>,
    /// Optional mapping vertex -> group-element index.
    vertex_tags: Option<Vec<usize>>,
    /// Optional display labels (group-element labels).
    vertex_labels: Option<Vec<String>>,
}

impl SimpleGraph {
    pub fn new(vertex_count: usize) -> Self {
        SimpleGraph {
            vertex_count,
            adjacency: vec![Bitset::new(vertex_count); vertex_count],
            vertex_tags: None,
            vertex_labels: None,
        }
    }

    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = SimpleGraph::new(vertex_count);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.vertex_count && v < self.vertex_count);
        if u == v {
            return; // irreflexive by construction
        }
        self.adjacency[u].set(v);
        self.adjacency[v].set(u);
    }

    pub fn set_vertex_tags(&mut self, tags: Vec<usize>) {
        assert_eq!(tags.len(), self.vertex_count);
        self.vertex_tags = Some(tags);
    }

    pub fn set_vertex_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.vertex_count);
        self.vertex_labels = Some(labels);
    }

    pub fn vertex_tags(&self) -> Option<&[usize]> {
        self.vertex_tags.as_deref()
    }

    pub fn vertex_labels(&self) -> Option<&[String]> {
        self.vertex_labels.as_deref()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adjacency[u].get(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|r| r.count()).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.vertex_count {
            for v in self.adjacency[u].iter_ones() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn neighbors(&self, v: usize) -> &Bitset {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        if v >= self.vertex_count {
            return Err(Error::OutOfRange {
                index: v,
                order: self.vertex_count,
            });
        }
        Ok(self.adjacency[v].count())
    }

    /// Edge (u,v) present iff absent here; involutive. Tags and labels carry
    /// over.
    pub fn complement(&self) -> SimpleGraph {
        let n = self.vertex_count;
        let mut g = SimpleGraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g.vertex_tags = self.vertex_tags.clone();
        g.vertex_labels = self.vertex_labels.clone();
        g
    }

    /// Partition into maximal connected vertex sets, each sorted, ordered by
    /// smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count;
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for w in self.adjacency[v].iter_ones() {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_clique(&self, vs: &[usize]) -> Result<bool> {
        for &v in vs {
            if v >= self.vertex_count {
                return Err(Error::OutOfRange {
                    index: v,
                    order: self.vertex_count,
                });
            }
        }
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                if u == v {
                    continue;
                }
                if !self.has_edge(u, v) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Exact maximum clique with a deterministic witness, via
    /// branch-and-bound with greedy-coloring upper bounds.
    pub fn clique_number(&self) -> Result<(usize, Vec<usize>)> {
        self.clique_number_with_budget(DEFAULT_NODE_BUDGET)
    }

    pub fn clique_number_with_budget(&self, budget: u64) -> Result<(usize, Vec<usize>)> {
        if self.vertex_count == 0 {
            return Ok((0, Vec::new()));
        }
        let mut cand = Bitset::new(self.vertex_count);
        for v in 0..self.vertex_count {
            cand.set(v);
        }
        let mut best = Vec::new();
        let mut cur = Vec::new();
        let mut nodes: u64 = 0;
        self.expand(&mut cur, cand, &mut best, &mut nodes, budget)?;
        let mut witness = best;
        witness.sort_unstable();
        Ok((witness.len(), witness))
    }

    fn expand(
        &self,
        cur: &mut Vec<usize>,
        cand: Bitset,
        best: &mut Vec<usize>,
        nodes: &mut u64,
        budget: u64,
    ) -> Result<()> {
        *nodes += 1;
        if *nodes > budget {
            return Err(Error::Timeout { budget });
        }
        // Greedy coloring of the candidate set in ascending vertex order;
        // color class count bounds any clique inside it.
        let verts: Vec<usize> = cand.iter_ones().collect();
        if verts.is_empty() {
            if cur.len() > best.len() {
                *best = cur.clone();
            }
            return Ok(());
        }
        let mut color = vec![0usize; verts.len()];
        let mut classes: Vec<Bitset> = Vec::new();
        for (k, &v) in verts.iter().enumerate() {
            let mut c = 0;
            loop {
                if c == classes.len() {
                    classes.push(Bitset::new(self.vertex_count));
                }
                if classes[c].intersection(&self.adjacency[v]).is_empty() {
                    classes[c].set(v);
                    color[k] = c + 1;
                    break;
                }
                c += 1;
            }
        }
        // Branch in descending color order (stable within a color by index).
        let mut order: Vec<usize> = (0..verts.len()).collect();
        order.sort_by_key(|&k| (color[k], verts[k]));
        let mut cand = cand;
        for &k in order.iter().rev() {
            if cur.len() + color[k] <= best.len() {
                break;
            }
            let v = verts[k];
            cur.push(v);
            let next = cand.intersection(&self.adjacency[v]);
            if next.is_empty() {
                if cur.len() > best.len() {
                    *best = cur.clone();
                }
            } else {
                self.expand(cur, next, best, nodes, budget)?;
            }
            cur.pop();
            cand.clear(v);
        }
        Ok(())
    }

    /// alpha(G) = omega(complement(G)).
    pub fn independence_number(&self) -> Result<usize> {
        Ok(self.complement().clique_number()?.0)
    }

    pub fn independence_number_with_budget(&self, budget: u64) -> Result<usize> {
        Ok(self.complement().clique_number_with_budget(budget)?.0)
    }

    /// Exhaustive subset-DP oracle; test and cross-validation use only.
    pub fn oracle_clique_number(&self) -> Result<usize> {
        let n = self.vertex_count;
        if n > ORACLE_MAX_VERTICES {
            return Err(Error::TooLarge {
                vertices: n,
                max: ORACLE_MAX_VERTICES,
            });
        }
        if n == 0 {
            return Ok(0);
        }
        let adj: Vec<u32> = (0..n)
            .map(|v| {
                self.adjacency[v]
                    .iter_ones()
                    .fold(0u32, |m, w| m | 1 << w)
            })
            .collect();
        // is_clique[s] = is_clique[s minus lowest bit] && lowest adjacent to rest.
        let mut best = 0usize;
        let mut clique = vec![false; 1usize << n];
        clique[0] = true;
        for s in 1usize..1 << n {
            let low = s.trailing_zeros() as usize;
            let rest = s & (s - 1);
            if clique[rest] && (adj[low] as usize & rest) == rest {
                clique[s] = true;
                best = best.max(s.count_ones() as usize);
            }
        }
        Ok(best)
    }

    /// DOT export with deterministic vertex emission order.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph {name} {{");
        for v in 0..self.vertex_count {
            let label = self
                .vertex_labels
                .as_ref()
                .map(|l| l[v].clone())
                .unwrap_or_else(|| v.to_string());
            let _ = writeln!(out, "  v{v} [label=\"{}\"];", label.replace('"', "\\\""));
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  v{u} -- v{v};");
        }
        out.push_str("}\n");
        out
    }

    /// Edge-list CSV: header "u,v", one undirected edge per line, u < v.
    pub fn to_edge_csv(&self) -> String {
        let mut out = String::from("u,v\n");
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u},{v}");
        }
        out
    }
}
