//! Non-commuting graph construction and the group-theoretic machinery on
//! top of it: AC/CC tests, commutativity transitivity, the centralizer
//! partition and clique-number fast path, the counting identity, the
//! covering lemma, exchange extension, and the chi-graph generalization.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::families::{Family, GroupSpec};
use crate::graph::SimpleGraph;
use crate::group::{ElementSet, FiniteGroup, LazyPermGroup};
use crate::perm::Perm;

/// A group together with its non-commuting graph. Vertices are the
/// non-central elements in ascending index order; edge iff the elements do
/// not commute.
pub struct NcgContext {
    group: FiniteGroup,
    center: ElementSet,
    non_central: Vec<usize>,
    graph: SimpleGraph,
    /// vertex_of[element] = vertex index, or usize::MAX for central elements.
    vertex_of: Vec<usize>,
}

pub fn build_ncg(group: FiniteGroup) -> NcgContext {
    let center = group.center().clone();
    let non_central: Vec<usize> = (0..group.order()).filter(|&i| !center.contains(i)).collect();
    let mut vertex_of = vec![usize::MAX; group.order()];
    for (v, &e) in non_central.iter().enumerate() {
        vertex_of[e] = v;
    }
    let n = non_central.len();
    let mut graph = SimpleGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if group.commutator(non_central[u], non_central[v]).unwrap() != 0 {
                graph.add_edge(u, v);
            }
        }
    }
    graph.set_vertex_tags(non_central.clone());
    graph.set_vertex_labels(
        non_central
            .iter()
            .map(|&e| group.label(e).to_string())
            .collect(),
    );
    NcgContext {
        group,
        center,
        non_central,
        graph,
        vertex_of,
    }
}

/// Failure witness for the AC test: x, y in C_G(a) with [x, y] != 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AcWitness {
    pub a: usize,
    pub x: usize,
    pub y: usize,
}

impl NcgContext {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn center(&self) -> &ElementSet {
        &self.center
    }

    pub fn non_central(&self) -> &[usize] {
        &self.non_central
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn vertex_of(&self, element: usize) -> Option<usize> {
        match self.vertex_of.get(element) {
            Some(&v) if v != usize::MAX => Some(v),
            _ => None,
        }
    }

    pub fn is_abelian(&self) -> bool {
        self.non_central.is_empty()
    }

    /// AC test: every non-central element has an abelian centralizer.
    pub fn is_ac(&self) -> (bool, Option<AcWitness>) {
        for &a in &self.non_central {
            let c = self.group.centralizer(a).unwrap();
            let members = c.as_slice();
            for (k, &x) in members.iter().enumerate() {
                for &y in &members[k + 1..] {
                    if !self.commutes(x, y) {
                        return (false, Some(AcWitness { a, x, y }));
                    }
                }
            }
        }
        (true, None)
    }

    /// CC test: every non-central element has a cyclic centralizer.
    pub fn is_cc(&self) -> bool {
        self.non_central
            .iter()
            .all(|&a| self.group.is_cyclic_subset(self.group.centralizer(a).unwrap()))
    }

    fn commutes(&self, x: usize, y: usize) -> bool {
        self.group.multiply(x, y).unwrap() == self.group.multiply(y, x).unwrap()
    }

    /// Independent transitivity route: no non-central x, y, z with
    /// [x,y] = 1, [y,z] = 1 and [x,z] != 1. Scans commutators directly
    /// rather than consulting the graph.
    pub fn commutativity_transitive(&self) -> (bool, Option<(usize, usize, usize)>) {
        let g = &self.group;
        for &x in &self.non_central {
            for &y in &self.non_central {
                if y == x || g.commutator(x, y).unwrap() != 0 {
                    continue;
                }
                for &z in &self.non_central {
                    if z == x || z == y {
                        continue;
                    }
                    if g.commutator(y, z).unwrap() == 0 && g.commutator(x, z).unwrap() != 0 {
                        return (false, Some((x, y, z)));
                    }
                }
            }
        }
        (true, None)
    }

    /// The distinct blocks C_G(a) \ Z(G) over non-central a. For AC groups
    /// these partition the vertex set into the complement's components.
    pub fn centralizer_partition(&self) -> Result<Vec<ElementSet>> {
        if !self.is_ac().0 {
            return Err(Error::NotAcGroup);
        }
        let mut blocks: BTreeSet<Vec<usize>> = BTreeSet::new();
        for &a in &self.non_central {
            let block: Vec<usize> = self
                .group
                .centralizer(a)
                .unwrap()
                .iter()
                .filter(|&x| !self.center.contains(x))
                .collect();
            blocks.insert(block);
        }
        Ok(blocks.into_iter().map(ElementSet::from_vec).collect())
    }

    /// Clique-number fast path: the number of distinct non-central
    /// centralizers.
    pub fn omega_fast(&self) -> Result<usize> {
        if !self.is_ac().0 {
            return Err(Error::NotAcGroup);
        }
        let mut distinct: BTreeSet<&[usize]> = BTreeSet::new();
        for &a in &self.non_central {
            distinct.insert(self.group.centralizer(a).unwrap().as_slice());
        }
        Ok(distinct.len())
    }

    /// Counting identity: |G| = (1 - omega)|Z| + sum of |C_G(a_i)| over one
    /// representative per partition block. Returns (holds, lhs, rhs).
    pub fn eq1_verify(&self) -> Result<(bool, usize, usize)> {
        let blocks = self.centralizer_partition()?;
        let omega = blocks.len();
        let z = self.center.len();
        let mut sum = 0usize;
        for block in &blocks {
            let rep = block.iter().next().expect("non-empty block");
            sum += self.group.centralizer(rep).unwrap().len();
        }
        let lhs = self.group.order();
        // (1 - omega) * z + sum, computed without underflow.
        let rhs_signed = z as i64 * (1 - omega as i64) + sum as i64;
        Ok((lhs as i64 == rhs_signed, lhs, rhs_signed.max(0) as usize))
    }

    /// Greedy (lowest index first) maximal set of pairwise non-commuting
    /// non-central elements, post-verified maximal.
    pub fn maximal_noncommuting_set(&self) -> Result<ElementSet> {
        if self.is_abelian() {
            return Err(Error::AbelianGroup);
        }
        let mut chosen: Vec<usize> = Vec::new();
        for &a in &self.non_central {
            if chosen.iter().all(|&b| !self.commutes(a, b)) {
                chosen.push(a);
            }
        }
        debug_assert!(self
            .non_central
            .iter()
            .all(|&g| chosen.contains(&g) || chosen.iter().any(|&b| self.commutes(g, b))));
        Ok(ElementSet::from_vec(chosen))
    }

    fn is_pairwise_noncommuting(&self, s: &ElementSet) -> bool {
        let v = s.as_slice();
        for (k, &x) in v.iter().enumerate() {
            for &y in &v[k + 1..] {
                if self.commutes(x, y) {
                    return false;
                }
            }
        }
        true
    }

    /// Covering lemma check: the centralizers of a maximal pairwise
    /// non-commuting set cover G, and dropping any one breaks coverage.
    pub fn verify_centralizer_cover(&self, s: &ElementSet) -> Result<bool> {
        if !self.is_pairwise_noncommuting(s) {
            return Err(Error::NotMaximal("set is not pairwise non-commuting".into()));
        }
        let extendable = self
            .non_central
            .iter()
            .any(|&g| !s.contains(g) && s.iter().all(|b| !self.commutes(g, b)));
        if extendable || s.is_empty() {
            return Err(Error::NotMaximal(
                "some non-central element extends the set".into(),
            ));
        }
        let n = self.group.order();
        let mut cover_count = vec![0usize; n];
        for a in s.iter() {
            for x in self.group.centralizer(a).unwrap().iter() {
                cover_count[x] += 1;
            }
        }
        if cover_count.iter().any(|&c| c == 0) {
            return Ok(false);
        }
        // Minimality: removing C_G(a) uncovers something iff some element is
        // covered only by C_G(a).
        for a in s.iter() {
            let uniquely_covered = self
                .group
                .centralizer(a)
                .unwrap()
                .iter()
                .any(|x| cover_count[x] == 1);
            if !uniquely_covered {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Exchange step on pairwise non-commuting sets: returns N + {g} when
    /// still pairwise non-commuting, otherwise swaps out the lowest-index
    /// x in N commuting with g.
    pub fn exchange_extend(&self, n: &ElementSet, g: usize) -> Result<ElementSet> {
        if !self.is_ac().0 {
            return Err(Error::NotAcGroup);
        }
        if self.center.contains(g) || g >= self.group.order() {
            return Err(Error::BadInput(format!("element {g} is central or out of range")));
        }
        if !self.is_pairwise_noncommuting(n) {
            return Err(Error::BadInput("set is not pairwise non-commuting".into()));
        }
        if n.contains(g) {
            return Ok(n.clone());
        }
        if n.iter().all(|x| !self.commutes(x, g)) {
            let mut v: Vec<usize> = n.iter().collect();
            v.push(g);
            return Ok(ElementSet::from_vec(v));
        }
        for x in n.iter() {
            if !self.commutes(x, g) {
                continue;
            }
            let mut v: Vec<usize> = n.iter().filter(|&e| e != x).collect();
            v.push(g);
            let candidate = ElementSet::from_vec(v);
            if self.is_pairwise_noncommuting(&candidate) {
                return Ok(candidate);
            }
        }
        // The corollary guarantees a swap exists for AC groups.
        Err(Error::Inconsistent)
    }

    /// Bound check from the matroid degree lemma:
    /// |C_G(x)| <= |G| - omega + 1 for every non-central x.
    pub fn degree_bound_check(&self) -> Result<bool> {
        let omega = self.omega_fast()?;
        Ok(self.non_central.iter().all(|&x| {
            self.group.centralizer(x).unwrap().len() <= self.group.order() - omega + 1
        }))
    }

    /// k-regular formula: when all non-central centralizers share one size
    /// k, omega = (|G| - |Z|) / (k - |Z|); None when sizes differ.
    pub fn kregular_omega(&self) -> Result<Option<usize>> {
        if !self.is_ac().0 {
            return Err(Error::NotAcGroup);
        }
        let mut sizes = self
            .non_central
            .iter()
            .map(|&a| self.group.centralizer(a).unwrap().len());
        let k = match sizes.next() {
            Some(k) => k,
            None => return Ok(None), // abelian: no non-central elements
        };
        if !sizes.all(|s| s == k) {
            return Ok(None);
        }
        let z = self.center.len();
        Ok(Some((self.group.order() - z) / (k - z)))
    }

    /// Sizes of the distinct non-central centralizers, sorted.
    pub fn distinct_centralizer_orders(&self) -> Vec<usize> {
        let mut distinct: BTreeSet<&[usize]> = BTreeSet::new();
        for &a in &self.non_central {
            distinct.insert(self.group.centralizer(a).unwrap().as_slice());
        }
        let mut sizes: Vec<usize> = distinct.iter().map(|s| s.len()).collect();
        sizes.sort_unstable();
        sizes
    }
}

/// Pair predicates for the chi-graph generalization.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ChiPredicate {
    Abelian,
    Cyclic,
}

impl ChiPredicate {
    pub fn name(self) -> &'static str {
        match self {
            ChiPredicate::Abelian => "abelian",
            ChiPredicate::Cyclic => "cyclic",
        }
    }

    fn holds_on(self, g: &FiniteGroup, members: &ElementSet) -> bool {
        match self {
            ChiPredicate::Abelian => g.is_abelian_subset(members),
            ChiPredicate::Cyclic => g.is_cyclic_subset(members),
        }
    }
}

/// Graph over non-central elements with an edge x ~ y iff the subgroup
/// <x, y> FAILS the predicate; the abelian predicate reproduces the
/// non-commuting graph exactly.
pub fn chi_graph(g: &FiniteGroup, predicate: ChiPredicate) -> SimpleGraph {
    let center = g.center();
    let non_central: Vec<usize> = (0..g.order()).filter(|&i| !center.contains(i)).collect();
    let n = non_central.len();
    let mut graph = SimpleGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            let gens = ElementSet::from_vec(vec![non_central[u], non_central[v]]);
            let subgroup = g.closure(&gens).unwrap();
            if !predicate.holds_on(g, &subgroup) {
                graph.add_edge(u, v);
            }
        }
    }
    graph.set_vertex_tags(non_central.clone());
    graph.set_vertex_labels(non_central.iter().map(|&e| g.label(e).to_string()).collect());
    graph
}

/// Records (all non-central centralizers satisfy chi, chi-graph is a
/// matroid) without asserting their agreement.
pub fn chi_group_check(g: &FiniteGroup, predicate: ChiPredicate) -> (bool, bool) {
    let center = g.center();
    let centralizers_ok = (0..g.order())
        .filter(|&a| !center.contains(a))
        .all(|a| predicate.holds_on(g, g.centralizer(a).unwrap()));
    let graph_matroid = crate::matroid::is_matroid_graph(&chi_graph(g, predicate)).0;
    (centralizers_ok, graph_matroid)
}

/// Verifies a transitivity-violation witness on a lazy permutation group:
/// [a, b] = 1, [b, c] = 1, [a, c] != 1, checked element-wise.
pub fn lazy_transitivity_violation(
    g: &LazyPermGroup,
    a: &Perm,
    b: &Perm,
    c: &Perm,
) -> Result<bool> {
    Ok(g.perm_commutes(a, b)? && g.perm_commutes(b, c)? && !g.perm_commutes(a, c)?)
}

/// Theorem check for the classified CC-groups: a group built as
/// Q:2^n (x C:m) must have omega = 2^(n-2) + 1, matching omega of the
/// quaternion factor alone.
pub fn cc_quotient_omega_check(spec: &GroupSpec, ctx: &NcgContext) -> Result<bool> {
    let q_order = match spec.terms.as_slice() {
        [q] if q.family == Family::Quaternion => q.param,
        [q, c] if q.family == Family::Quaternion && c.family == Family::Cyclic => q.param,
        _ => return Err(Error::SpecMismatch(spec.render())),
    };
    if !q_order.is_power_of_two() {
        return Err(Error::SpecMismatch(format!(
            "{} is not a power of two",
            q_order
        )));
    }
    let n = q_order.trailing_zeros(); // q_order = 2^n
    let expected = (1usize << (n - 2)) + 1;
    let omega = ctx.omega_fast()?;
    // omega of the quaternion factor alone.
    let q_spec = crate::families::parse_spec(&format!("Q:{q_order}"))?;
    let q_group = match crate::families::build(&q_spec, q_order)? {
        crate::families::BuiltGroup::Table(g) => g,
        _ => unreachable!(),
    };
    let q_omega = build_ncg(q_group).omega_fast()?;
    Ok(omega == expected && omega == q_omega)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build, parse_spec, BuiltGroup};
    use crate::group::PermKind;
    use crate::matroid;

    fn ctx(spec: &str) -> NcgContext {
        match build(&parse_spec(spec).unwrap(), 5000).unwrap() {
            BuiltGroup::Table(g) => build_ncg(g),
            _ => panic!("expected table"),
        }
    }

    #[test]
    fn build_ncg_basics() {
        assert_eq!(ctx("C:9").graph().vertex_count(), 0);
        let q8 = ctx("Q:8");
        assert_eq!(q8.graph().vertex_count(), 6);
        for v in 0..6 {
            assert_eq!(q8.graph().degree(v).unwrap(), 4);
        }
        assert_eq!(ctx("D:3").graph().vertex_count(), 5);
    }

    #[test]
    fn ac_verdicts() {
        assert!(ctx("Q:16").is_ac().0);
        assert!(ctx("H:3").is_ac().0);
        let (ac, witness) = ctx("S:4").is_ac();
        assert!(!ac);
        let w = witness.unwrap();
        let s4 = ctx("S:4");
        let g = s4.group();
        assert_eq!(g.commutator(w.a, w.x).unwrap(), 0);
        assert_eq!(g.commutator(w.a, w.y).unwrap(), 0);
        assert_ne!(g.commutator(w.x, w.y).unwrap(), 0);
    }

    #[test]
    fn cc_verdicts() {
        assert!(ctx("Q:8").is_cc());
        assert!(!ctx("D:4").is_cc()); // Klein-type centralizer in D_8
        for spec in ["Q:8", "Q:16", "Q:32", "D:4", "D:8", "H:3", "S:4"] {
            let c = ctx(spec);
            if c.is_cc() {
                assert!(c.is_ac().0, "{spec}: cyclic implies abelian");
            }
        }
    }

    #[test]
    fn transitivity_witness_in_s4() {
        let s4 = ctx("S:4");
        let (ok, triple) = s4.commutativity_transitive();
        assert!(!ok);
        let (x, y, z) = triple.unwrap();
        let g = s4.group();
        assert_eq!(g.commutator(x, y).unwrap(), 0);
        assert_eq!(g.commutator(y, z).unwrap(), 0);
        assert_ne!(g.commutator(x, z).unwrap(), 0);
        // This classic triple is itself a violation.
        let find = |label: &str| (0..24).find(|&i| g.label(i) == label).unwrap();
        let a = find("(3 4)");
        let b = find("(1 2)(3 4)");
        let c = find("(1 3)(2 4)");
        assert_eq!(g.commutator(a, b).unwrap(), 0);
        assert_eq!(g.commutator(b, c).unwrap(), 0);
        assert_ne!(g.commutator(a, c).unwrap(), 0);
        // Transitive on D_16, matching the matroid verdict everywhere.
        for spec in ["D:8", "Q:8", "S:4", "D:3", "H:2"] {
            let c = ctx(spec);
            assert_eq!(
                c.commutativity_transitive().0,
                matroid::is_matroid_graph(c.graph()).0,
                "{spec}"
            );
        }
    }

    #[test]
    fn centralizer_partition_blocks() {
        let q8 = ctx("Q:8");
        let blocks = q8.centralizer_partition().unwrap();
        assert_eq!(blocks.len(), 3);
        assert!(blocks.iter().all(|b| b.len() == 2));

        let q20 = ctx("Q:20");
        assert_eq!(q20.centralizer_partition().unwrap().len(), 6);

        let d8 = ctx("D:4");
        let blocks = d8.centralizer_partition().unwrap();
        let g = d8.group();
        let labelled: Vec<Vec<&str>> = blocks
            .iter()
            .map(|b| b.iter().map(|e| g.label(e)).collect())
            .collect();
        assert_eq!(blocks.len(), 3);
        assert!(labelled.contains(&vec!["b", "b^3"]));
        assert!(labelled.contains(&vec!["a", "b^2a"]));
        assert!(labelled.contains(&vec!["ba", "b^3a"]));

        assert!(matches!(
            ctx("S:4").centralizer_partition(),
            Err(Error::NotAcGroup)
        ));
    }

    #[test]
    fn partition_covers_vertices_disjointly() {
        for spec in ["Q:8", "Q:20", "D:4", "D:7", "H:3", "Q:8xC:3"] {
            let c = ctx(spec);
            let blocks = c.centralizer_partition().unwrap();
            let mut seen = vec![0usize; c.group().order()];
            for b in &blocks {
                for e in b.iter() {
                    seen[e] += 1;
                }
            }
            for &e in c.non_central() {
                assert_eq!(seen[e], 1, "{spec}: element {e}");
            }
        }
    }

    #[test]
    fn omega_fast_values() {
        for l in 2..=10 {
            assert_eq!(ctx(&format!("Q:{}", 4 * l)).omega_fast().unwrap(), l + 1);
        }
        for p in [2usize, 3, 5] {
            assert_eq!(ctx(&format!("H:{p}")).omega_fast().unwrap(), p + 1);
        }
        assert_eq!(ctx("D:8").omega_fast().unwrap(), 5);
    }

    #[test]
    fn eq1_instances() {
        let (holds, lhs, rhs) = ctx("Q:8").eq1_verify().unwrap();
        assert!(holds);
        assert_eq!((lhs, rhs), (8, 8)); // 8 = (1-3)*2 + 12
        let (holds, lhs, rhs) = ctx("D:3").eq1_verify().unwrap();
        assert!(holds);
        assert_eq!((lhs, rhs), (6, 6)); // 6 = (1-4)*1 + (2+2+2+3)
        let (holds, lhs, rhs) = ctx("H:3").eq1_verify().unwrap();
        assert!(holds);
        assert_eq!((lhs, rhs), (27, 27)); // 27 = (1-4)*3 + 4*9
    }

    #[test]
    fn maximal_noncommuting_sets() {
        assert_eq!(ctx("Q:8").maximal_noncommuting_set().unwrap().len(), 3);
        assert_eq!(ctx("D:6").maximal_noncommuting_set().unwrap().len(), 4);
        assert!(matches!(
            ctx("C:6").maximal_noncommuting_set(),
            Err(Error::AbelianGroup)
        ));
        // For a non-AC group the greedy size may fall short of omega.
        let s4 = ctx("S:4");
        let m = s4.maximal_noncommuting_set().unwrap();
        let omega = s4.graph().clique_number().unwrap().0;
        assert!(m.len() <= omega);
    }

    #[test]
    fn centralizer_cover() {
        for spec in ["Q:8", "D:3", "D:4", "H:3", "Q:16"] {
            let c = ctx(spec);
            let m = c.maximal_noncommuting_set().unwrap();
            assert!(c.verify_centralizer_cover(&m).unwrap(), "{spec}");
        }
        // A strict subset is rejected as non-maximal.
        let q8 = ctx("Q:8");
        let m = q8.maximal_noncommuting_set().unwrap();
        let sub = ElementSet::from_vec(m.iter().take(2).collect());
        assert!(matches!(
            q8.verify_centralizer_cover(&sub),
            Err(Error::NotMaximal(_))
        ));
    }

    #[test]
    fn exchange_extend_cases() {
        let q8 = ctx("Q:8");
        let x = 1;
        let y = 4;
        let xy = q8.group().multiply(x, y).unwrap();
        let x3 = q8.group().inverse(x).unwrap();

        let n = ElementSet::from_vec(vec![x, y]);
        let grown = q8.exchange_extend(&n, xy).unwrap();
        assert_eq!(grown, ElementSet::from_vec(vec![x, y, xy]));

        // g already in N: unchanged.
        assert_eq!(q8.exchange_extend(&grown, x).unwrap(), grown);

        // x^3 commutes with x only; swap x out.
        let swapped = q8.exchange_extend(&grown, x3).unwrap();
        assert_eq!(swapped, ElementSet::from_vec(vec![y, xy, x3]));

        // Central g rejected.
        assert!(matches!(
            q8.exchange_extend(&n, 2),
            Err(Error::BadInput(_))
        ));
        // Non-pairwise-non-commuting N rejected.
        let bad = ElementSet::from_vec(vec![x, x3]);
        assert!(matches!(q8.exchange_extend(&bad, y), Err(Error::BadInput(_))));
    }

    #[test]
    fn degree_bounds() {
        for (spec, c_max, bound) in [("Q:8", 4, 6), ("H:3", 9, 24), ("D:8", 8, 12)] {
            let c = ctx(spec);
            assert!(c.degree_bound_check().unwrap(), "{spec}");
            let max_c = c
                .non_central()
                .iter()
                .map(|&a| c.group().centralizer(a).unwrap().len())
                .max()
                .unwrap();
            assert_eq!(max_c, c_max, "{spec}");
            assert_eq!(
                c.group().order() - c.omega_fast().unwrap() + 1,
                bound,
                "{spec}"
            );
        }
    }

    #[test]
    fn kregular_cases() {
        assert_eq!(ctx("Q:8").kregular_omega().unwrap(), Some(3));
        assert_eq!(ctx("H:3").kregular_omega().unwrap(), Some(4));
        assert_eq!(ctx("Q:16").kregular_omega().unwrap(), None);
    }

    #[test]
    fn cc_quotient_checks() {
        for (spec, _expected) in [("Q:16xC:3", 5), ("Q:8xC:5", 3), ("Q:32", 9)] {
            let parsed = parse_spec(spec).unwrap();
            let c = ctx(spec);
            assert!(cc_quotient_omega_check(&parsed, &c).unwrap(), "{spec}");
        }
        assert!(matches!(
            cc_quotient_omega_check(&parse_spec("D:4").unwrap(), &ctx("D:4")),
            Err(Error::SpecMismatch(_))
        ));
        assert!(matches!(
            cc_quotient_omega_check(&parse_spec("Q:12").unwrap(), &ctx("Q:12")),
            Err(Error::SpecMismatch(_))
        ));
    }

    #[test]
    fn chi_graphs() {
        let q8 = ctx("Q:8");
        let chi = chi_graph(q8.group(), ChiPredicate::Abelian);
        assert_eq!(chi.edges(), q8.graph().edges());

        // Cyclic chi-graph contains every non-commuting edge.
        let cyc = chi_graph(q8.group(), ChiPredicate::Cyclic);
        for (u, v) in q8.graph().edges() {
            assert!(cyc.has_edge(u, v));
        }

        let (cent_ok, graph_ok) = chi_group_check(q8.group(), ChiPredicate::Abelian);
        assert!(cent_ok && graph_ok);
        let s4 = ctx("S:4");
        let (cent_ok, graph_ok) = chi_group_check(s4.group(), ChiPredicate::Abelian);
        assert!(!cent_ok && !graph_ok);
    }

    #[test]
    fn lazy_witnesses() {
        let a10 = LazyPermGroup::new(10, PermKind::Alternating);
        let a = Perm::from_cycles(10, &[&[1, 2], &[3, 4]]).unwrap();
        let b = Perm::from_cycles(10, &[&[5, 6], &[7, 8]]).unwrap();
        let c = Perm::from_cycles(10, &[&[2, 3], &[9, 10]]).unwrap();
        assert!(lazy_transitivity_violation(&a10, &a, &b, &c).unwrap());

        let s4 = LazyPermGroup::new(4, PermKind::Symmetric);
        let a = Perm::from_cycles(4, &[&[3, 4]]).unwrap();
        let b = Perm::from_cycles(4, &[&[1, 2], &[3, 4]]).unwrap();
        let c = Perm::from_cycles(4, &[&[1, 3], &[2, 4]]).unwrap();
        assert!(lazy_transitivity_violation(&s4, &a, &b, &c).unwrap());
    }
}
