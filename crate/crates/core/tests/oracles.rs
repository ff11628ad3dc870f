use dtjones_core::cjp::*;
use dtjones_core::knots::{two_bridge_params, TwistFamily};
use dtjones_core::qalgebra::lp_invert_q;
use dtjones_core::takata::takata_colored_jones;

#[test]
fn thm1_matches_two_bridge_formula() {
    for m in 1..=2 {
        for p in 1..=2 {
            let tb = two_bridge_params(m as u32, p as u32, TwistFamily::MinusMinus).unwrap();
            for n in 1..=5 {
                assert_eq!(jones_thm1(m, p, n).unwrap(), takata_colored_jones(&tb, n).unwrap(), "m={m} p={p} N={n}");
            }
        }
    }
}

#[test]
fn thm2_matches_two_bridge_formula() {
    for m in 1..=2 {
        for p in 1..=2 {
            let tb = two_bridge_params(m as u32, p as u32, TwistFamily::MinusPlus).unwrap();
            for n in 1..=5 {
                assert_eq!(jones_thm2(m, p, n).unwrap(), takata_colored_jones(&tb, n).unwrap(), "m={m} p={p} N={n}");
            }
        }
    }
}

#[test]
fn thm3_matches_walsh() {
    for m in 1..=3 {
        for p in 1..=3 {
            for n in 1..=6 {
                assert_eq!(jones_thm3_pos(m, p, n).unwrap(), walsh_colored_jones(m, p, n).unwrap(), "+ m={m} p={p} N={n}");
                assert_eq!(jones_thm3_neg(m, p, n).unwrap(), walsh_colored_jones(m, -p, n).unwrap(), "- m={m} p={p} N={n}");
            }
        }
    }
}

#[test]
fn mirror_closure() {
    for m in 0..=2 {
        for p in 1..=2 {
            for n in 1..=5 {
                if m >= 1 {
                    assert_eq!(lp_invert_q(&jones_thm3_pos(m + 1, p, n).unwrap()), jones_thm1(m, p, n).unwrap(), "pos m={m} p={p} N={n}");
                }
                assert_eq!(lp_invert_q(&jones_thm3_neg(m + 1, p, n).unwrap()), jones_thm2(m, p, n).unwrap(), "neg m={m} p={p} N={n}");
            }
        }
    }
}

#[test]
fn habiro_left_torus() {
    for p in 1..=3 {
        for n in 1..=6 {
            assert_eq!(habiro_left_torus_check(p, n).unwrap(), jones_thm3_neg(1, p, n).unwrap(), "p={p} N={n}");
        }
    }
}
