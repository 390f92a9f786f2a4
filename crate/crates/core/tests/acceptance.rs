//! The acceptance suite: runs every verification claim at the default
//! configuration and requires all of them to pass outright (no skips).

use ncg_core::verify::{run_verification, ClaimStatus, VerifyConfig};

#[test]
fn acceptance() {
    let results = run_verification(&VerifyConfig::default());
    for r in &results {
        println!(
            "{} {:2}. {} [{:.1?}]{}{}",
            r.status,
            r.id,
            r.name,
            r.elapsed,
            if r.detail.is_empty() { "" } else { " — " },
            r.detail
        );
    }
    assert_eq!(results.len(), 12);
    for r in &results {
        assert_eq!(
            r.status,
            ClaimStatus::Pass,
            "claim {} ({}) did not pass: {}",
            r.id,
            r.name,
            r.detail
        );
    }
}
