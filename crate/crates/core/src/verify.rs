//! The built-in verification suite: one claim per headline result, run over
//! the family sweep and seeded random instances. Used by both the CLI
//! `verify` command and the acceptance test target.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analysis::{
    build_ncg, cc_quotient_omega_check, chi_graph, chi_group_check, lazy_transitivity_violation,
    ChiPredicate, NcgContext,
};
use crate::error::Error;
use crate::families::{build, parse_spec, BuiltGroup};
use crate::graph::SimpleGraph;
use crate::group::{FiniteGroup, LazyPermGroup, PermKind};
use crate::matroid::{self, SimplicialComplex};
use crate::perm::Perm;
use crate::sweep::sweep_groups;

pub const SWEEP_ORDER_CAP: u64 = 200;

pub struct VerifyConfig {
    pub max_order: u64,
    pub node_budget: u64,
    pub seed: u64,
    /// Extra Cayley tables to push through the sweep claims (fault
    /// injection / external groups).
    pub injected: Vec<FiniteGroup>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_order: 5000,
            node_budget: crate::graph::DEFAULT_NODE_BUDGET,
            seed: 0,
            injected: Vec::new(),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ClaimStatus {
    Pass,
    Fail,
    Skipped,
}

impl std::fmt::Display for ClaimStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ClaimStatus::Pass => "PASS",
            ClaimStatus::Fail => "FAIL",
            ClaimStatus::Skipped => "SKIP",
        })
    }
}

#[derive(Clone, Debug)]
pub struct ClaimResult {
    pub id: usize,
    pub name: &'static str,
    pub status: ClaimStatus,
    pub detail: String,
    pub elapsed: Duration,
}

pub fn all_passed(results: &[ClaimResult]) -> bool {
    results.iter().all(|r| r.status != ClaimStatus::Fail)
}

struct Claim {
    failures: Vec<String>,
    skips: Vec<String>,
    notes: Vec<String>,
}

impl Claim {
    fn new() -> Self {
        Claim {
            failures: Vec::new(),
            skips: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn finish(
        self,
        id: usize,
        name: &'static str,
        elapsed: Duration,
        deadline: Option<Duration>,
    ) -> ClaimResult {
        let mut failures = self.failures;
        if let Some(limit) = deadline {
            if elapsed > limit && failures.is_empty() {
                failures.push(format!("runtime {elapsed:.2?} exceeds limit {limit:?}"));
            }
        }
        let (status, mut detail) = if !failures.is_empty() {
            (ClaimStatus::Fail, failures.join("; "))
        } else if !self.skips.is_empty() {
            (ClaimStatus::Skipped, self.skips.join("; "))
        } else {
            (ClaimStatus::Pass, String::new())
        };
        if !self.notes.is_empty() {
            if !detail.is_empty() {
                detail.push_str("; ");
            }
            detail.push_str(&self.notes.join("; "));
        }
        ClaimResult {
            id,
            name,
            status,
            detail,
            elapsed,
        }
    }
}

/// Builds a materialized group under the config cap; Err(None) means the
/// cap excludes it (claim skips), Err(Some) is a real failure.
fn build_table(spec: &str, cfg: &VerifyConfig) -> Result<FiniteGroup, Option<String>> {
    let parsed = parse_spec(spec).map_err(|e| Some(format!("{spec}: {e}")))?;
    match build(&parsed, cfg.max_order) {
        Ok(BuiltGroup::Table(g)) => Ok(g),
        Ok(BuiltGroup::Lazy(_)) => Err(None),
        Err(Error::CapExceeded { .. }) | Err(Error::ProductOfLazy) => Err(None),
        Err(e) => Err(Some(format!("{spec}: {e}"))),
    }
}

fn ctx_for(spec: &str, cfg: &VerifyConfig) -> Result<NcgContext, Option<String>> {
    build_table(spec, cfg).map(build_ncg)
}

pub fn run_verification(cfg: &VerifyConfig) -> Vec<ClaimResult> {
    let sweep_cap = cfg.max_order.min(SWEEP_ORDER_CAP);
    let sweep: Vec<(String, NcgContext)> = sweep_groups(sweep_cap)
        .into_iter()
        .map(|(s, g)| (s.render(), build_ncg(g)))
        .collect();
    let full_sweep = sweep_cap == SWEEP_ORDER_CAP;

    vec![
        claim_quaternion_omegas(cfg),
        claim_cc_theorem(cfg),
        claim_p_group_omegas(cfg),
        claim_equivalence_sweep(cfg, &sweep, full_sweep),
        claim_counting_identity(cfg, &sweep),
        claim_non_matroid_witnesses(cfg),
        claim_dihedral_matroids(cfg),
        claim_kregular_formula(cfg),
        claim_structural_lemmas(cfg),
        claim_covering_lemma(&sweep),
        claim_clique_oracle(cfg, &sweep),
        claim_chi_framework(&sweep),
    ]
}

/// 1. omega(Gamma_{Q_4l}) = l + 1 for l = 2..10, cross-checked by search
/// and by the exhaustive oracle on the smaller instances.
fn claim_quaternion_omegas(cfg: &VerifyConfig) -> ClaimResult {
    let start = Instant::now();
    let mut c = Claim::new();
    for l in 2usize..=10 {
        let spec = format!("Q:{}", 4 * l);
        let ctx = match ctx_for(&spec, cfg) {
            Ok(ctx) => ctx,
            Err(Some(e)) => {
                c.failures.push(e);
                continue;
            }
            Err(None) => {
                c.skips.push(format!("{spec} above cap {}", cfg.max_order));
                continue;
            }
        };
        let expected = l + 1;
        match ctx.omega_fast() {
            Ok(w) => c.check(w == expected, || format!("{spec}: fast-path omega {w} != {expected}")),
            Err(e) => c.failures.push(format!("{spec}: {e}")),
        }
        if l <= 6 {
            match ctx.graph().clique_number_with_budget(cfg.node_budget) {
                Ok((w, _)) => {
                    c.check(w == expected, || format!("{spec}: search omega {w} != {expected}"))
                }
                Err(e) => c.failures.push(format!("{spec}: {e}")),
            }
        }
        if l <= 4 {
            match ctx.graph().oracle_clique_number() {
                Ok(w) => {
                    c.check(w == expected, || format!("{spec}: oracle omega {w} != {expected}"))
                }
                Err(e) => c.failures.push(format!("{spec}: {e}")),
            }
        }
    }
    c.finish(
        1,
        "quaternion clique numbers omega(Q_4l) = l+1",
        start.elapsed(),
        Some(Duration::from_secs(5)),
    )
}

/// 2. omega(Q_{2^n} x C_m) = 2^(n-2) + 1 and Q_{2^n} is a CC-group.
fn claim_cc_theorem(cfg: &VerifyConfig) -> ClaimResult {
    let start = Instant::now();
    let mut c = Claim::new();
    for (n, m) in [(3u32, 1u64), (3, 5), (4, 1), (4, 3), (5, 1), (5, 3)] {
        let spec = format!("Q:{}xC:{}", 1u64 << n, m);
        let parsed = parse_spec(&spec).unwrap();
        match ctx_for(&spec, cfg) {
            Ok(ctx) => {
                let expected = (1usize << (n - 2)) + 1;
                match ctx.omega_fast() {
                    Ok(w) => c.check(w == expected, || format!("{spec}: omega {w} != {expected}")),
                    Err(e) => c.failures.push(format!("{spec}: {e}")),
                }
                match cc_quotient_omega_check(&parsed, &ctx) {
                    Ok(ok) => c.check(ok, || format!("{spec}: quotient omega check failed")),
                    Err(e) => c.failures.push(format!("{spec}: {e}")),
                }
            }
            Err(Some(e)) => c.failures.push(e),
            Err(None) => c.skips.push(format!("{spec} above cap")),
        }
    }
    for n in [3u32, 4, 5] {
        let spec = format!("Q:{}", 1u64 << n);
        match ctx_for(&spec, cfg) {
            Ok(ctx) => c.check(ctx.is_cc(), || format!("{spec} is not CC")),
            Err(Some(e)) => c.failures.push(e),
            Err(None) => c.skips.push(format!("{spec} above cap")),
        }
    }
    c.finish(
        2,
        "CC theorem omega(Q_2^n x C_m) = 2^(n-2)+1",
        start.elapsed(),
        None,
    )
}

/// 3. p-group clique numbers: omega(H:p) = p+1 and the two order-16 groups
/// with central quotient of order 8 and an abelian maximal subgroup.
fn claim_p_group_omegas(cfg: &VerifyConfig) -> ClaimResult {
    let start = Instant::now();
    let mut c = Claim::new();
    for p in [2usize, 3, 5] {
        let spec = format!("H:{p}");
        match ctx_for(&spec, cfg) {
            Ok(ctx) => match ctx.omega_fast() {
                Ok(w) => c.check(w == p + 1, || format!("{spec}: omega {w} != {}", p + 1)),
                Err(e) => c.failures.push(format!("{spec}: {e}")),
            },
            Err(Some(e)) => c.failures.push(e),
            Err(None) => c.skips.push(format!("{spec} above cap")),
        }
    }
    for spec in ["D:8", "Q:16"] {
        match ctx_for(spec, cfg) {
            Ok(ctx) => match ctx.omega_fast() {
                Ok(w) => c.check(w == 5, || format!("{spec}: omega {w} != 5")),
                Err(e) => c.failures.push(format!("{spec}: {e}")),
            },
            Err(Some(e)) => c.failures.push(e),
            Err(None) => c.skips.push(format!("{spec} above cap")),
        }
    }
    c.notes
        .push("case (ii) (central quotient p^3, no abelian maximal subgroup) not exercised by built-ins".into());
    c.finish(3, "p-group clique numbers", start.elapsed(), None)
}

/// 4. Equivalence sweep: is_ac = is_matroid_graph = commutativity
/// transitivity for every sweep group, cross-validated against the
/// exchange property where the complex is small enough.
fn claim_equivalence_sweep(
    cfg: &VerifyConfig,
    sweep: &[(String, NcgContext)],
    full_sweep: bool,
) -> ClaimResult {
    let start = Instant::now();
    let mut c = Claim::new();
    if !full_sweep {
        c.skips.push(format!(
            "order cap {} below the sweep cap {SWEEP_ORDER_CAP}; {} groups checked",
            cfg.max_order,
            sweep.len()
        ));
    } else if sweep.len() < 60 {
        c.failures
            .push(format!("sweep has only {} groups, need >= 60", sweep.len()));
    }
    for (spec, ctx) in sweep {
        check_equivalence(&mut c, spec, ctx);
    }
    for g in &cfg.injected {
        check_injected(&mut c, g, cfg);
    }
    c.notes.push(format!("{} groups in sweep", sweep.len()));
    c.finish(
        4,
        "AC = matroid = transitive over the sweep",
        start.elapsed(),
        Some(Duration::from_secs(60)),
    )
}

fn check_equivalence(c: &mut Claim, spec: &str, ctx: &NcgContext) {
    let ac = ctx.is_ac().0;
    let (matroid_ok, _) = matroid::is_matroid_graph(ctx.graph());
    let (transitive, _) = ctx.commutativity_transitive();
    c.check(ac == matroid_ok && matroid_ok == transitive, || {
        format!("{spec}: ac={ac} matroid={matroid_ok} transitive={transitive}")
    });
    if ctx.graph().vertex_count() <= 64 {
        match matroid::cross_validate_matroid(ctx.graph()) {
            Ok(v) => c.check(v == matroid_ok, || {
                format!("{spec}: cross-validated verdict {v} != {matroid_ok}")
            }),
            Err(e) => c.failures.push(format!("{spec}: {e}")),
        }
    }
}

/// Extra scrutiny for injected tables: full group-law validation, the
/// fast path against real search, and the chi identity. A corrupted table
/// must trip at least one of these.
fn check_injected(c: &mut Claim, g: &FiniteGroup, cfg: &VerifyConfig) {
    let spec = g.spec_text().to_string();
    let n = g.order();
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).map(|j| g.multiply(i, j).unwrap()).collect())
        .collect();
    let valid = match FiniteGroup::from_table(n, rows, Some(g.labels().to_vec()), spec.clone()) {
        Ok((valid, _)) => valid,
        Err(e) => {
            c.failures.push(format!("injected {spec}: {e}"));
            return;
        }
    };
    let ctx = build_ncg(valid);
    check_equivalence(c, &spec, &ctx);
    if !ctx.is_abelian() && ctx.is_ac().0 {
        let fast = ctx.omega_fast().unwrap();
        match ctx.graph().clique_number_with_budget(cfg.node_budget) {
            Ok((w, _)) => c.check(w == fast, || {
                format!("{spec}: fast-path omega {fast} != searched {w}")
            }),
            Err(e) => c.failures.push(format!("{spec}: {e}")),
        }
    }
    let chi = chi_graph(ctx.group(), ChiPredicate::Abelian);
    c.check(chi.edges() == ctx.graph().edges(), || {
        format!("{spec}: chi(abelian) differs from the non-commuting graph")
    });
}

/// 5. Counting identity for every AC group in the sweep, plus the concrete
/// Q_8 instance 8 = (1-3)*2 + 12.
fn claim_counting_identity(cfg: &VerifyConfig, sweep: &[(String, NcgContext)]) -> ClaimResult {
    let start = Instant::now();
    let mut c = Claim::new();
    for (spec, ctx) in sweep {
        if !ctx.is_ac().0 {
            continue;
        }
        match ctx.eq1_verify() {
            Ok((holds, lhs, rhs)) => c.check(holds, || format!("{spec}: {lhs} != {rhs}")),
            Err(e) => c.failures.push(format!("{spec}: {e}")),
        }
    }
    match ctx_for("Q:8", cfg) {
        Ok(q8) => {
            let (holds, lhs, rhs) = q8.eq1_verify().unwrap();
            c.check(holds && lhs == 8 && rhs == 8, || {
                format!("Q:8 instance: lhs {lhs}, rhs {rhs}")
            });
            let blocks = q8.centralizer_partition().unwrap();
            let sum: usize = blocks
                .iter()
                .map(|b| {
                    q8.group()
                        .centralizer(b.iter().next().unwrap())
                        .unwrap()
                        .len()
                })
                .sum();
            c.check(
                blocks.len() == 3 && q8.center().len() == 2 && sum == 12,
                || format!("Q:8 parts: omega {}, |Z| {}, sum {sum}", blocks.len(), q8.center().len()),
            );
        }
        Err(Some(e)) => c.failures.push(e),
        Err(None) => c.skips.push("Q:8 above cap".into()),
    }
    c.finish(5, "centralizer counting identity", start.elapsed(), None)
}

/// 6. Non-matroid witnesses for S_4/S_5 and the lazy A_10 triple.
fn claim_non_matroid_witnesses(cfg: &VerifyConfig) -> ClaimResult {
    let start = Instant::now();
    let mut c = Claim::new();
    for spec in ["S:4", "S:5"] {
        match ctx_for(spec, cfg) {
            Ok(ctx) => {
                c.check(!matroid::is_matroid_graph(ctx.graph()).0, || {
                    format!("{spec}: matroid criterion unexpectedly holds")
                });
                c.check(!ctx.commutativity_transitive().0, || {
                    format!("{spec}: transitivity unexpectedly holds")
                });
                c.check(!ctx.is_ac().0, || format!("{spec}: unexpectedly AC"));
                if ctx.graph().vertex_count() <= 64 {
                    let (ep, _) =
                        SimplicialComplex::from_graph(ctx.graph()).has_exchange_property();
                    c.check(!ep, || format!("{spec}: exchange property unexpectedly holds"));
                }
            }
            Err(Some(e)) => c.failures.push(e),
            Err(None) => c.skips.push(format!("{spec} above cap")),
        }
    }
    // The S_4 triple ((3 4), (1 2)(3 4), (1 3)(2 4)) violates transitivity.
    match ctx_for("S:4", cfg) {
        Ok(ctx) => {
            let g = ctx.group();
            let find = |label: &str| (0..g.order()).find(|&i| g.label(i) == label);
            match (find("(3 4)"), find("(1 2)(3 4)"), find("(1 3)(2 4)")) {
                (Some(a), Some(b), Some(cc)) => {
                    let ok = g.commutator(a, b).unwrap() == 0
                        && g.commutator(b, cc).unwrap() == 0
                        && g.commutator(a, cc).unwrap() != 0;
                    c.check(ok, || "S:4 triple is not a transitivity violation".into());
                }
                _ => c.failures.push("S:4 witness elements not found".into()),
            }
        }
        Err(Some(e)) => c.failures.push(e),
        Err(None) => c.skips.push("S:4 above cap".into()),
    }
    // A_10 via the lazy path.
    let a10 = LazyPermGroup::new(10, PermKind::Alternating);
    let a = Perm::from_cycles(10, &[&[1, 2], &[3, 4]]).unwrap();
    let b = Perm::from_cycles(10, &[&[5, 6], &[7, 8]]).unwrap();
    let x = Perm::from_cycles(10, &[&[2, 3], &[9, 10]]).unwrap();
    match lazy_transitivity_violation(&a10, &a, &b, &x) {
        Ok(v) => c.check(v, || "A:10 triple is not a transitivity violation".into()),
        Err(e) => c.failures.push(format!("A:10: {e}")),
    }
    c.finish(
        6,
        "non-matroid witnesses (S_4, S_5, A_10)",
        start.elapsed(),
        Some(Duration::from_secs(1)),
    )
}

/// 7. Gamma_{D_2n} is a matroid for n = 3..16, with complement components
/// equal to the centralizer blocks.
fn claim_dihedral_matroids(cfg: &VerifyConfig) -> ClaimResult {
    let start = Instant::now();
    let mut c = Claim::new();
    for n in 3usize..=16 {
        let spec = format!("D:{n}");
        let ctx = match ctx_for(&spec, cfg) {
            Ok(ctx) => ctx,
            Err(Some(e)) => {
                c.failures.push(e);
                continue;
            }
            Err(None) => {
                c.skips.push(format!("{spec} above cap"));
                continue;
            }
        };
        c.check(matroid::is_matroid_graph(ctx.graph()).0, || {
            format!("{spec}: not a matroid")
        });
        c.check(ctx.is_ac().0, || format!("{spec}: not AC"));
        // Complement components (as element sets) = centralizer blocks.
        let tags = ctx.graph().vertex_tags().unwrap().to_vec();
        let mut comps: Vec<Vec<usize>> = ctx
            .graph()
            .complement()
            .components()
            .into_iter()
            .map(|comp| comp.into_iter().map(|v| tags[v]).collect())
            .collect();
        comps.sort();
        let blocks: Vec<Vec<usize>> = ctx
            .centralizer_partition()
            .unwrap()
            .into_iter()
            .map(|b| b.iter().collect())
            .collect();
        c.check(comps == blocks, || {
            format!("{spec}: components differ from centralizer blocks")
        });
        // One rotation block <b> \ Z plus the reflection blocks.
        let expected = if n % 2 == 0 { n / 2 + 1 } else { n + 1 };
        c.check(blocks.len() == expected, || {
            format!("{spec}: {} blocks != {expected}", blocks.len())
        });
        let rotation_block: Vec<usize> = (0..n)
            .filter(|&i| !ctx.center().contains(i))
            .collect();
        c.check(blocks.contains(&rotation_block), || {
            format!("{spec}: rotation block <b> \\ Z missing")
        });
        let reflection_size = if n % 2 == 0 { 2 } else { 1 };
        c.check(
            blocks
                .iter()
                .filter(|b| **b != rotation_block)
                .all(|b| b.len() == reflection_size && b.iter().all(|&e| e >= n)),
            || format!("{spec}: reflection blocks malformed"),
        );
    }
    c.finish(7, "dihedral matroids D_2n, n = 3..16", start.elapsed(), None)
}

/// 8. k-regular formula on Q_8 and H:3.
fn claim_kregular_formula(cfg: &VerifyConfig) -> ClaimResult {
    let start = Instant::now();
    let mut c = Claim::new();
    for (spec, expected) in [("Q:8", 3usize), ("H:3", 4)] {
        match ctx_for(spec, cfg) {
            Ok(ctx) => match ctx.kregular_omega() {
                Ok(Some(w)) => {
                    c.check(w == expected, || format!("{spec}: formula gives {w} != {expected}"));
                    c.check(w == ctx.omega_fast().unwrap(), || {
                        format!("{spec}: formula disagrees with fast path")
                    });
                }
                Ok(None) => c.failures.push(format!("{spec}: not k-regular")),
                Err(e) => c.failures.push(format!("{spec}: {e}")),
            },
            Err(Some(e)) => c.failures.push(e),
            Err(None) => c.skips.push(format!("{spec} above cap")),
        }
    }
    c.finish(8, "k-regular clique-number formula", start.elapsed(), None)
}

/// Random complete multipartite graph (a matroid graph by construction),
/// at most `max_vertices` vertices.
fn random_matroid_graph(rng: &mut ChaCha8Rng, max_vertices: usize) -> SimpleGraph {
    let parts = rng.gen_range(2..=8usize);
    let mut sizes = Vec::new();
    let mut total = 0usize;
    for _ in 0..parts {
        let s = rng.gen_range(1..=6usize);
        if total + s > max_vertices {
            break;
        }
        sizes.push(s);
        total += s;
    }
    while sizes.len() < 2 {
        sizes.push(1);
        total += 1;
    }
    let mut g = SimpleGraph::new(total);
    let mut part_of = Vec::with_capacity(total);
    for (p, &s) in sizes.iter().enumerate() {
        part_of.extend(std::iter::repeat(p).take(s));
    }
    for u in 0..total {
        for v in u + 1..total {
            if part_of[u] != part_of[v] {
                g.add_edge(u, v);
            }
        }
    }
    g
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> SimpleGraph {
    let mut g = SimpleGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.5) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// 9. Structural lemmas, property-based: clique extension and the degree
/// bound on random matroid graphs; exchange property = matroid criterion
/// on random graphs.
fn claim_structural_lemmas(cfg: &VerifyConfig) -> ClaimResult {
    let start = Instant::now();
    let mut c = Claim::new();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for trial in 0..200 {
        let g = random_matroid_graph(&mut rng, 40);
        if !matroid::is_matroid_graph(&g).0 {
            c.failures
                .push(format!("trial {trial}: constructed graph is not a matroid"));
            continue;
        }
        let omega = match g.clique_number_with_budget(cfg.node_budget) {
            Ok((w, _)) => w,
            Err(e) => {
                c.failures.push(format!("trial {trial}: {e}"));
                continue;
            }
        };
        for v in 0..g.vertex_count() {
            match matroid::extend_clique(&g, &[v]) {
                Ok(cl) => c.check(cl.len() == omega && cl.contains(&v), || {
                    format!("trial {trial}: extension from {v} has size {}", cl.len())
                }),
                Err(e) => c.failures.push(format!("trial {trial}: {e}")),
            }
            c.check(g.degree(v).unwrap() + 1 >= omega, || {
                format!("trial {trial}: degree bound fails at {v}")
            });
        }
    }
    for trial in 0..500 {
        let n = rng.gen_range(0..=12usize);
        let g = random_graph(&mut rng, n);
        let by_components = matroid::is_matroid_graph(&g).0;
        let by_exchange = SimplicialComplex::from_graph(&g).has_exchange_property().0;
        c.check(by_components == by_exchange, || {
            format!("trial {trial}: criterion {by_components} != exchange {by_exchange}")
        });
    }
    c.finish(
        9,
        "structural lemmas on random graphs (seeded)",
        start.elapsed(),
        Some(Duration::from_secs(30)),
    )
}

/// 10. Covering lemma: cover plus minimality for the greedy maximal set on
/// every AC group in the sweep.
fn claim_covering_lemma(sweep: &[(String, NcgContext)]) -> ClaimResult {
    let start = Instant::now();
    let mut c = Claim::new();
    for (spec, ctx) in sweep {
        if ctx.is_abelian() || !ctx.is_ac().0 {
            continue;
        }
        let m = match ctx.maximal_noncommuting_set() {
            Ok(m) => m,
            Err(e) => {
                c.failures.push(format!("{spec}: {e}"));
                continue;
            }
        };
        match ctx.verify_centralizer_cover(&m) {
            Ok(ok) => c.check(ok, || format!("{spec}: cover or minimality fails")),
            Err(e) => c.failures.push(format!("{spec}: {e}")),
        }
        // For AC groups the maximal set size is omega (extension lemma).
        c.check(m.len() == ctx.omega_fast().unwrap(), || {
            format!("{spec}: maximal set size {} != omega", m.len())
        });
    }
    c.finish(10, "covering lemma on AC sweep groups", start.elapsed(), None)
}

/// 11. Branch-and-bound equals the exhaustive oracle on every suite graph
/// with at most 24 vertices.
fn claim_clique_oracle(cfg: &VerifyConfig, sweep: &[(String, NcgContext)]) -> ClaimResult {
    let start = Instant::now();
    let mut c = Claim::new();
    let mut checked = 0usize;
    for (spec, ctx) in sweep {
        if ctx.graph().vertex_count() > crate::graph::ORACLE_MAX_VERTICES {
            continue;
        }
        let searched = ctx
            .graph()
            .clique_number_with_budget(cfg.node_budget)
            .map(|(w, _)| w);
        let oracle = ctx.graph().oracle_clique_number();
        match (searched, oracle) {
            (Ok(a), Ok(b)) => {
                checked += 1;
                c.check(a == b, || format!("{spec}: search {a} != oracle {b}"));
            }
            (a, b) => c.failures.push(format!("{spec}: {a:?} vs {b:?}")),
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(11));
    for trial in 0..50 {
        let n = rng.gen_range(1..=20usize);
        let g = random_graph(&mut rng, n);
        let a = g.clique_number_with_budget(cfg.node_budget).unwrap().0;
        let b = g.oracle_clique_number().unwrap();
        checked += 1;
        c.check(a == b, || format!("random trial {trial}: search {a} != oracle {b}"));
    }
    c.notes.push(format!("{checked} graphs cross-checked"));
    c.finish(11, "clique search equals exhaustive oracle", start.elapsed(), None)
}

/// 12. chi framework: the abelian predicate reproduces the non-commuting
/// graph edge-for-edge; the cyclic predicate's verdicts are recorded.
fn claim_chi_framework(sweep: &[(String, NcgContext)]) -> ClaimResult {
    let start = Instant::now();
    let mut c = Claim::new();
    let mut agree = 0usize;
    let mut disagree = Vec::new();
    for (spec, ctx) in sweep {
        let chi = chi_graph(ctx.group(), ChiPredicate::Abelian);
        c.check(chi.edges() == ctx.graph().edges(), || {
            format!("{spec}: chi(abelian) differs from the non-commuting graph")
        });
        let (cent, mat) = chi_group_check(ctx.group(), ChiPredicate::Cyclic);
        if cent == mat {
            agree += 1;
        } else {
            disagree.push(format!("{spec} (centralizers {cent}, matroid {mat})"));
        }
    }
    c.notes.push(format!(
        "chi=cyclic recorded: {agree} agreements, {} disagreements{}{}",
        disagree.len(),
        if disagree.is_empty() { "" } else { ": " },
        disagree.join(", ")
    ));
    c.finish(12, "chi-graph framework sanity", start.elapsed(), None)
}
