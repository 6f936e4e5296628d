//! Runs every acceptance criterion, printing one PASS/FAIL line each.
//! Criterion 8 is known to fail on its integral part; see README.

use std::io::Write;

use eislat::verify::{Suite, CRITERIA};

/// Criteria whose failure is documented and expected.
const KNOWN_FAILURES: &[u8] = &[8];

#[test]
fn acceptance_criteria() {
    let suite = Suite::new();
    // written to the process stdout directly so the report survives output capture
    let mut out = std::io::stdout().lock();
    writeln!(out).unwrap();
    let mut unexpected = Vec::new();
    for n in 1..=CRITERIA {
        let c = suite.run(n);
        let verdict = if c.passed { "PASS" } else { "FAIL" };
        writeln!(out, "{verdict} {} {} ({} ms)", c.id, c.claim, c.millis).unwrap();
        if !c.passed {
            writeln!(out, "     witness: {}", c.witness).unwrap();
        }
        if c.passed == KNOWN_FAILURES.contains(&n) {
            unexpected.push((n, c.passed));
        }
    }
    assert!(unexpected.is_empty(), "unexpected outcomes: {unexpected:?}");
}

#[test]
fn criterion_8_fails_only_on_integral_order() {
    let c = Suite::new().run(8);
    let a_o = &c.witness["a_o"];
    for key in ["preserves_form", "order_three", "conjugation", "table", "braid", "commute", "r_is_tau_eta", "r_star_is_eta_inv", "product_is_omega"] {
        assert_eq!(a_o[key], true, "{key}");
    }
    let integral = &c.witness["integral"];
    assert_eq!(integral["rank"], 50);
    assert_eq!(integral["cube_is_identity"], false);
    assert_eq!(integral["sixth_power_is_identity"], false);
    assert_eq!(integral["sixth_power_defect_rank"], 1);
    assert_eq!(integral["order_six_off_hyperelliptic"], true);
}
