//! Interplay between the rank-equality certificate and the core contact
//! criterion across the staircase corpus.

use openbook_core::cfk::{BifilteredComplex, Hand};
use openbook_core::contact::{core_contact_nonzero, Status};
use openbook_core::surgery::lspace_certificate;

#[test]
fn certificate_implies_nonvanishing_above_the_gate() {
    // For n strictly above 2*genus every Spin^c slot, including the one
    // holding the bottom group, is presented by its windowed hook, so a
    // true certificate forces the two-step filtration to degenerate and
    // the core invariant to survive.
    for k in 1..=5 {
        for hand in [Hand::Right, Hand::Left] {
            let c = BifilteredComplex::staircase(k, hand);
            let gate = 2 * c.genus().unwrap();
            for n in gate + 1..gate + 5 {
                if lspace_certificate(&c, n).unwrap() {
                    assert_eq!(
                        core_contact_nonzero(&c, n).unwrap().status,
                        Status::Nonvanishing,
                        "k = {k}, hand = {hand}, n = {n}"
                    );
                }
            }
        }
    }
    // Right-handed staircases satisfy the implication at the gate too.
    for k in 1..=5 {
        let c = BifilteredComplex::staircase(k, Hand::Right);
        let n = 2 * c.genus().unwrap();
        assert!(lspace_certificate(&c, n).unwrap());
        assert_eq!(
            core_contact_nonzero(&c, n).unwrap().status,
            Status::Nonvanishing
        );
    }
}

#[test]
fn left_staircase_at_the_gate_is_the_boundary_case() {
    // At n = 2*genus exactly, the slot n/2 and its negative describe the
    // same Spin^c structure through different hooks. The windowed strata
    // of a left-handed staircase then satisfy the formal rank equality
    // even though the bottom-slot filtration does not degenerate, so the
    // certificate does not transfer to the contact criterion there.
    for k in 1..=4 {
        let c = BifilteredComplex::staircase(k, Hand::Left);
        let n = 2 * c.genus().unwrap();
        assert!(lspace_certificate(&c, n).unwrap());
        assert_eq!(
            core_contact_nonzero(&c, n).unwrap().status,
            Status::Vanishing
        );
        assert!(!lspace_certificate(&c, n + 1).unwrap());
    }
}
