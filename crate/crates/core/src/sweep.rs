//! The built-in verification sweep: every built-in family instance from a
//! fixed parameter grid plus pairwise direct products, capped by order.

use crate::families::{build, parse_spec, BuiltGroup, GroupSpec};
use crate::group::FiniteGroup;

/// Group specs for the sweep: all singles from the family grid and all
/// pairwise products from a representative factor list, with order at most
/// `max_order`. Deduplicated by canonical rendering, deterministic order.
pub fn sweep_specs(max_order: u64) -> Vec<GroupSpec> {
    let mut texts: Vec<String> = Vec::new();
    for m in 1..=12u64 {
        texts.push(format!("C:{m}"));
    }
    for n in 1..=16u64 {
        texts.push(format!("D:{n}"));
    }
    for m in [8u64, 12, 16, 20, 24, 28, 32, 40, 48] {
        texts.push(format!("Q:{m}"));
    }
    for p in [2u64, 3, 5] {
        texts.push(format!("H:{p}"));
    }
    for n in 2..=5u64 {
        texts.push(format!("S:{n}"));
    }
    for n in 3..=5u64 {
        texts.push(format!("A:{n}"));
    }
    let left = [
        "Q:8", "Q:16", "D:3", "D:4", "H:2", "S:3", "A:4", "C:2", "C:3",
    ];
    let right = ["C:2", "C:3", "C:5", "D:3", "Q:8", "S:3"];
    for l in left {
        for r in right {
            texts.push(format!("{l}x{r}"));
        }
    }
    let mut specs = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for t in texts {
        let spec = parse_spec(&t).expect("sweep grid specs are well-formed");
        if spec.order().map_or(false, |o| o <= max_order) && seen.insert(spec.render()) {
            specs.push(spec);
        }
    }
    specs
}

/// Materializes the sweep. All sweep groups fit under the order cap.
pub fn sweep_groups(max_order: u64) -> Vec<(GroupSpec, FiniteGroup)> {
    sweep_specs(max_order)
        .into_iter()
        .map(|s| {
            let g = match build(&s, max_order).expect("sweep orders are under the cap") {
                BuiltGroup::Table(g) => g,
                BuiltGroup::Lazy(_) => unreachable!("sweep contains no lazy groups"),
            };
            (s, g)
        })
        .collect()
}
