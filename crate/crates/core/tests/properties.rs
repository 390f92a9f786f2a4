//! Property-based and randomized integration tests.

use proptest::prelude::*;

use ncg_core::analysis::build_ncg;
use ncg_core::families::{build, parse_spec, BuiltGroup};
use ncg_core::graph::SimpleGraph;
use ncg_core::group::ElementSet;
use ncg_core::matroid::{self, SimplicialComplex};
use ncg_core::sweep::sweep_groups;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn graph_strategy(max_vertices: usize) -> impl Strategy<Value = SimpleGraph> {
    (0..=max_vertices).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = SimpleGraph::new(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

proptest! {
    #[test]
    fn complement_is_an_involution(g in graph_strategy(40)) {
        let cc = g.complement().complement();
        prop_assert_eq!(g.edges(), cc.edges());
        prop_assert_eq!(g.vertex_count(), cc.vertex_count());
    }

    #[test]
    fn matroid_criterion_matches_exchange_property(g in graph_strategy(10)) {
        let by_components = matroid::is_matroid_graph(&g).0;
        let by_exchange = SimplicialComplex::from_graph(&g).has_exchange_property().0;
        prop_assert_eq!(by_components, by_exchange);
    }

    #[test]
    fn clique_search_matches_oracle(g in graph_strategy(16)) {
        let (searched, witness) = g.clique_number().unwrap();
        prop_assert_eq!(searched, g.oracle_clique_number().unwrap());
        prop_assert!(g.is_clique(&witness).unwrap());
        prop_assert_eq!(witness.len(), searched);
    }
}

fn term_strategy() -> impl Strategy<Value = String> {
    prop_oneof![
        (1u64..=30).prop_map(|m| format!("C:{m}")),
        (1u64..=20).prop_map(|n| format!("D:{n}")),
        (2u64..=12).prop_map(|k| format!("Q:{}", 4 * k)),
        proptest::sample::select(vec![2u64, 3, 5, 7, 11]).prop_map(|p| format!("H:{p}")),
        (2u64..=6).prop_map(|n| format!("S:{n}")),
        (3u64..=6).prop_map(|n| format!("A:{n}")),
    ]
}

proptest! {
    #[test]
    fn spec_grammar_roundtrip(
        terms in proptest::collection::vec(term_strategy(), 1..=3),
        lowercase in any::<bool>(),
        spaces in any::<bool>(),
    ) {
        let canonical = terms.join("x");
        let mut noisy = canonical.clone();
        if lowercase {
            noisy = noisy.to_lowercase();
        }
        if spaces {
            noisy = noisy.replace(':', " : ").replace('x', " x ");
        }
        // "x" doubles as the product separator; the space mangling above
        // is safe because family tags never contain 'x'.
        let parsed = parse_spec(&noisy).unwrap();
        prop_assert_eq!(parsed.render(), canonical.clone());
        let reparsed = parse_spec(&parsed.render()).unwrap();
        prop_assert_eq!(reparsed.render(), canonical);
    }
}

/// Subgroups of AC-groups are AC-groups (heredity of abelian centralizers).
#[test]
fn ac_is_hereditary_on_random_subgroups() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (spec, g) in sweep_groups(100) {
        let ctx = build_ncg(g);
        if !ctx.is_ac().0 {
            continue;
        }
        let parent = ctx.group();
        for _ in 0..5 {
            let gens: Vec<usize> = (0..rng.gen_range(1..=2))
                .map(|_| rng.gen_range(0..parent.order()))
                .collect();
            let sub = parent
                .generated_subgroup(&ElementSet::from_vec(gens))
                .unwrap();
            assert_eq!(parent.order() % sub.group.order(), 0, "{}", spec.render());
            let sub_ctx = build_ncg(sub.group);
            assert!(
                sub_ctx.is_abelian() || sub_ctx.is_ac().0,
                "subgroup of AC group {} is not AC",
                spec.render()
            );
        }
    }
}

/// Exchange on maximal non-commuting sets: for any vertex g there is a
/// maximal set containing it, obtained by a single swap or extension.
#[test]
fn exchange_extend_random_trials() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (spec, g) in sweep_groups(100) {
        let ctx = build_ncg(g);
        if ctx.is_abelian() || !ctx.is_ac().0 {
            continue;
        }
        let omega = ctx.omega_fast().unwrap();
        let maximal = ctx.maximal_noncommuting_set().unwrap();
        for _ in 0..10 {
            let g_elt = ctx.non_central()[rng.gen_range(0..ctx.non_central().len())];
            let swapped = ctx.exchange_extend(&maximal, g_elt).unwrap();
            assert!(swapped.contains(g_elt), "{}", spec.render());
            assert_eq!(swapped.len(), omega, "{}", spec.render());
            let verts: Vec<usize> = swapped
                .iter()
                .map(|e| ctx.vertex_of(e).unwrap())
                .collect();
            assert!(ctx.graph().is_clique(&verts).unwrap(), "{}", spec.render());
        }
    }
}

/// Exporting a group and re-importing it yields an element-wise identical
/// group, and the analysis of the round-tripped group matches.
#[test]
fn import_export_roundtrip_over_sweep_sample() {
    for spec in ["C:9", "D:7", "Q:12", "H:3", "S:4", "Q:8xC:3"] {
        let g = match build(&parse_spec(spec).unwrap(), 5000).unwrap() {
            BuiltGroup::Table(g) => g,
            BuiltGroup::Lazy(_) => unreachable!(),
        };
        let json = ncg_core::cayley::export_json(&g);
        let (h, _) = ncg_core::cayley::import_json(&json, spec.to_string()).unwrap();
        for i in 0..g.order() {
            for j in 0..g.order() {
                assert_eq!(g.multiply(i, j).unwrap(), h.multiply(i, j).unwrap());
            }
        }
        let a = build_ncg(g);
        let b = build_ncg(h);
        assert_eq!(a.is_ac().0, b.is_ac().0);
        assert_eq!(a.graph().edges(), b.graph().edges());
    }
}
