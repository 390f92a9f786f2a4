//! Per-group analysis reports with a stable JSON schema. Analyses that do
//! not apply are serialized as explicit "skipped" markers, never omitted.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::analysis::{build_ncg, chi_group_check, ChiPredicate, NcgContext};
use crate::error::Error;
use crate::families::BuiltGroup;
use crate::graph::DEFAULT_NODE_BUDGET;
use crate::group::{LazyPermGroup, PermKind};
use crate::matroid;
use crate::perm::Perm;

/// A value that is either computed or explicitly skipped with a reason.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Computed<T> {
    Computed { value: T },
    Skipped { reason: String },
}

impl<T> Computed<T> {
    pub fn value(&self) -> Option<&T> {
        match self {
            Computed::Computed { value } => Some(value),
            Computed::Skipped { .. } => None,
        }
    }

    pub fn skipped(reason: impl Into<String>) -> Self {
        Computed::Skipped {
            reason: reason.into(),
        }
    }
}

fn computed<T>(value: T) -> Computed<T> {
    Computed::Computed { value }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct OmegaResult {
    pub value: usize,
    /// "fast-path" | "search" | "oracle"
    pub method: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct MatroidResult {
    pub value: bool,
    /// Methods that produced (and agreed on) the verdict.
    pub methods: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq, Default)]
pub struct Witnesses {
    /// Transitivity violation (x, y, z) as element labels, when not a matroid.
    pub non_matroid_triple: Option<[String; 3]>,
    /// Greedy maximal pairwise non-commuting set, as element labels.
    pub maximal_noncommuting_set: Option<Vec<String>>,
    /// AC failure (a, x, y): x, y commute with a but not with each other.
    pub ac_failure: Option<[String; 3]>,
    /// Lazy-group witness description, when applicable.
    pub lazy_witness: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ChiRecord {
    pub predicate: String,
    pub centralizers_satisfy: bool,
    pub graph_is_matroid: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct AnalysisReport {
    pub spec: String,
    pub order: Computed<u64>,
    pub center_order: Computed<usize>,
    pub is_abelian: Computed<bool>,
    pub is_ac: Computed<bool>,
    pub is_cc: Computed<bool>,
    pub is_matroid: Computed<MatroidResult>,
    pub omega: Computed<OmegaResult>,
    pub alpha: Computed<usize>,
    pub complement_component_sizes: Computed<Vec<usize>>,
    pub distinct_centralizer_orders: Computed<Vec<usize>>,
    pub eq1_holds: Computed<bool>,
    pub degree_bound_holds: Computed<bool>,
    pub witnesses: Witnesses,
    pub chi: Vec<ChiRecord>,
    /// Wall-clock phase timings. Excluded from the byte-identity guarantee;
    /// strip before diffing.
    pub timing_us: BTreeMap<String, u128>,
    /// Set when the import path skipped the exhaustive associativity check.
    pub skipped_associativity_check: bool,
}

#[derive(Clone, Copy, Debug)]
pub struct AnalyzeOptions {
    pub node_budget: u64,
    /// Largest vertex count for which omega of a non-AC graph is searched.
    pub search_vertex_limit: usize,
    pub run_chi: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            node_budget: DEFAULT_NODE_BUDGET,
            search_vertex_limit: 2000,
            run_chi: true,
        }
    }
}

pub fn analyze(built: BuiltGroup, opts: &AnalyzeOptions) -> AnalysisReport {
    match built {
        BuiltGroup::Lazy(l) => analyze_lazy(&l),
        BuiltGroup::Table(g) => analyze_materialized(build_ncg(g), opts, false),
    }
}

pub fn analyze_materialized(
    ctx: NcgContext,
    opts: &AnalyzeOptions,
    skipped_associativity_check: bool,
) -> AnalysisReport {
    let mut timing = BTreeMap::new();
    let g = ctx.group();
    let spec = g.spec_text().to_string();
    let order = g.order();
    let abelian = ctx.is_abelian();

    let t = Instant::now();
    let (ac, ac_witness) = ctx.is_ac();
    let cc = ctx.is_cc();
    timing.insert("ac_cc".into(), t.elapsed().as_micros());

    let t = Instant::now();
    let (matroid_verdict, _) = matroid::is_matroid_graph(ctx.graph());
    let (transitive, triple) = ctx.commutativity_transitive();
    let mut methods = vec!["complement-components".to_string(), "transitivity".to_string()];
    debug_assert_eq!(matroid_verdict, transitive);
    if ctx.graph().vertex_count() <= 64 {
        if matroid::cross_validate_matroid(ctx.graph()).is_ok() {
            methods.push("exchange-property".to_string());
        }
    }
    timing.insert("matroid".into(), t.elapsed().as_micros());

    let t = Instant::now();
    let omega: Computed<OmegaResult> = if ac {
        computed(OmegaResult {
            value: ctx.omega_fast().unwrap(),
            method: "fast-path".into(),
        })
    } else if ctx.graph().vertex_count() <= opts.search_vertex_limit {
        match ctx.graph().clique_number_with_budget(opts.node_budget) {
            Ok((w, _)) => computed(OmegaResult {
                value: w,
                method: "search".into(),
            }),
            Err(Error::Timeout { budget }) => {
                Computed::skipped(format!("clique search exceeded node budget {budget}"))
            }
            Err(e) => Computed::skipped(e.to_string()),
        }
    } else {
        Computed::skipped("non-AC group with more than the search vertex limit")
    };
    timing.insert("omega".into(), t.elapsed().as_micros());

    let t = Instant::now();
    let comp = ctx.graph().complement();
    let comp_sizes: Vec<usize> = {
        let mut s: Vec<usize> = comp.components().iter().map(|c| c.len()).collect();
        s.sort_unstable();
        s
    };
    let alpha: Computed<usize> = if ac {
        // Complement is a disjoint union of cliques; alpha is the largest.
        computed(comp_sizes.last().copied().unwrap_or(0))
    } else if ctx.graph().vertex_count() <= opts.search_vertex_limit {
        match comp.clique_number_with_budget(opts.node_budget) {
            Ok((w, _)) => computed(w),
            Err(e) => Computed::skipped(e.to_string()),
        }
    } else {
        Computed::skipped("non-AC group with more than the search vertex limit")
    };
    timing.insert("alpha".into(), t.elapsed().as_micros());

    let t = Instant::now();
    let eq1 = if ac {
        computed(ctx.eq1_verify().unwrap().0)
    } else {
        Computed::skipped("counting identity applies to AC groups only")
    };
    let degree_bound = if ac {
        computed(ctx.degree_bound_check().unwrap())
    } else {
        Computed::skipped("degree bound applies to AC groups only")
    };
    timing.insert("identities".into(), t.elapsed().as_micros());

    let mut witnesses = Witnesses::default();
    if let Some((x, y, z)) = triple {
        witnesses.non_matroid_triple = Some([
            g.label(x).to_string(),
            g.label(y).to_string(),
            g.label(z).to_string(),
        ]);
    }
    if let Some(w) = ac_witness {
        witnesses.ac_failure = Some([
            g.label(w.a).to_string(),
            g.label(w.x).to_string(),
            g.label(w.y).to_string(),
        ]);
    }
    if !abelian {
        let m = ctx.maximal_noncommuting_set().unwrap();
        witnesses.maximal_noncommuting_set =
            Some(m.iter().map(|e| g.label(e).to_string()).collect());
    }

    let t = Instant::now();
    let chi = if opts.run_chi {
        [ChiPredicate::Abelian, ChiPredicate::Cyclic]
            .iter()
            .map(|&p| {
                let (cent, mat) = chi_group_check(g, p);
                ChiRecord {
                    predicate: p.name().to_string(),
                    centralizers_satisfy: cent,
                    graph_is_matroid: mat,
                }
            })
            .collect()
    } else {
        Vec::new()
    };
    timing.insert("chi".into(), t.elapsed().as_micros());

    AnalysisReport {
        spec,
        order: computed(order as u64),
        center_order: computed(ctx.center().len()),
        is_abelian: computed(abelian),
        is_ac: computed(ac),
        is_cc: computed(cc),
        is_matroid: computed(MatroidResult {
            value: matroid_verdict,
            methods,
        }),
        omega,
        alpha,
        complement_component_sizes: computed(comp_sizes),
        distinct_centralizer_orders: computed(ctx.distinct_centralizer_orders()),
        eq1_holds: eq1,
        degree_bound_holds: degree_bound,
        witnesses,
        chi,
        timing_us: timing,
        skipped_associativity_check,
    }
}

/// Lazy groups support witness checks only; every other field is an
/// explicit "skipped".
pub fn analyze_lazy(l: &LazyPermGroup) -> AnalysisReport {
    fn not_computed<T>() -> Computed<T> {
        Computed::skipped("not computed: group is represented lazily (above the cap)")
    }
    let (spec, witness, matroid) = match l.kind() {
        PermKind::Symmetric => {
            let spec = format!("S:{}", l.degree());
            if l.degree() >= 4 {
                let a = Perm::from_cycles(l.degree(), &[&[3, 4]]).unwrap();
                let b = Perm::from_cycles(l.degree(), &[&[1, 2], &[3, 4]]).unwrap();
                let c = Perm::from_cycles(l.degree(), &[&[1, 3], &[2, 4]]).unwrap();
                let violated =
                    crate::analysis::lazy_transitivity_violation(l, &a, &b, &c).unwrap();
                (
                    spec,
                    Some(format!(
                        "transitivity violation ((3 4), (1 2)(3 4), (1 3)(2 4)): {violated}"
                    )),
                    Some(!violated),
                )
            } else {
                (spec, None, None)
            }
        }
        PermKind::Alternating => {
            let spec = format!("A:{}", l.degree());
            if l.degree() >= 10 {
                let a = Perm::from_cycles(l.degree(), &[&[1, 2], &[3, 4]]).unwrap();
                let b = Perm::from_cycles(l.degree(), &[&[5, 6], &[7, 8]]).unwrap();
                let c = Perm::from_cycles(l.degree(), &[&[2, 3], &[9, 10]]).unwrap();
                let violated =
                    crate::analysis::lazy_transitivity_violation(l, &a, &b, &c).unwrap();
                (
                    spec,
                    Some(format!(
                        "transitivity violation ((1 2)(3 4), (5 6)(7 8), (2 3)(9 10)): {violated}"
                    )),
                    Some(!violated),
                )
            } else {
                (spec, None, None)
            }
        }
    };
    AnalysisReport {
        spec,
        order: match l.order_u64() {
            Some(o) => computed(o),
            None => Computed::skipped("order exceeds u64"),
        },
        center_order: not_computed(),
        is_abelian: not_computed(),
        is_ac: not_computed(),
        is_cc: not_computed(),
        is_matroid: match matroid {
            Some(value) => computed(MatroidResult {
                value,
                methods: vec!["lazy-witness".to_string()],
            }),
            None => not_computed(),
        },
        omega: not_computed(),
        alpha: not_computed(),
        complement_component_sizes: not_computed(),
        distinct_centralizer_orders: not_computed(),
        eq1_holds: not_computed(),
        degree_bound_holds: not_computed(),
        witnesses: Witnesses {
            lazy_witness: witness,
            ..Witnesses::default()
        },
        chi: Vec::new(),
        timing_us: BTreeMap::new(),
        skipped_associativity_check: false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build, parse_spec};

    fn report(spec: &str) -> AnalysisReport {
        let built = build(&parse_spec(spec).unwrap(), 5000).unwrap();
        analyze(built, &AnalyzeOptions::default())
    }

    #[test]
    fn q8_report() {
        let r = report("Q:8");
        assert_eq!(r.is_ac.value(), Some(&true));
        assert_eq!(r.is_matroid.value().unwrap().value, true);
        assert_eq!(r.omega.value().unwrap().value, 3);
        assert_eq!(r.omega.value().unwrap().method, "fast-path");
        assert_eq!(r.alpha.value(), Some(&2));
        assert_eq!(r.complement_component_sizes.value(), Some(&vec![2, 2, 2]));
        assert_eq!(r.eq1_holds.value(), Some(&true));
    }

    #[test]
    fn s4_report_has_witnesses() {
        let r = report("S:4");
        assert_eq!(r.is_ac.value(), Some(&false));
        assert!(!r.is_matroid.value().unwrap().value);
        assert!(r.witnesses.non_matroid_triple.is_some());
        assert!(r.witnesses.ac_failure.is_some());
        assert_eq!(r.omega.value().unwrap().method, "search");
        assert!(matches!(r.eq1_holds, Computed::Skipped { .. }));
    }

    #[test]
    fn abelian_report() {
        let r = report("C:7");
        assert_eq!(r.is_abelian.value(), Some(&true));
        assert_eq!(r.omega.value().unwrap().value, 0);
        assert_eq!(r.alpha.value(), Some(&0));
        assert!(r.witnesses.maximal_noncommuting_set.is_none());
    }

    #[test]
    fn lazy_report() {
        let built = build(&parse_spec("A:10").unwrap(), 5000).unwrap();
        let r = analyze(built, &AnalyzeOptions::default());
        assert_eq!(r.order.value(), Some(&1_814_400));
        assert!(matches!(r.is_ac, Computed::Skipped { .. }));
        assert_eq!(r.is_matroid.value().unwrap().value, false);
        assert!(r.witnesses.lazy_witness.as_deref().unwrap().contains("true"));
    }

    #[test]
    fn json_stable_modulo_timing() {
        let mut a = report("D:5");
        let mut b = report("D:5");
        a.timing_us.clear();
        b.timing_us.clear();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }
}
