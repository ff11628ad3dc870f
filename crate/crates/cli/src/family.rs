//! Evaluator families and the knot each one computes at a grid point.

use std::fmt;
use std::str::FromStr;

use dtjones_core::cjp::{
    jones_thm1_with, jones_thm2_with, jones_thm3_neg_with, jones_thm3_pos_with, jones_torus_with,
    walsh_colored_jones,
};
use dtjones_core::knots::{two_bridge_params, KnotSpec, TwistFamily};
use dtjones_core::qalgebra::{lp_invert_q, LaurentPoly};
use dtjones_core::takata::takata_colored_jones_with;
use dtjones_core::{Error, Exec, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Family {
    Thm1,
    Thm2,
    Thm3pos,
    Thm3neg,
    Torus,
    Walsh,
    /// Any double twist knot through its 2-bridge form; `K(-m,-p)` on a grid.
    Takata,
    #[value(name = "takata-mm")]
    TakataMm,
    #[value(name = "takata-mp")]
    TakataMp,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Thm1 => "thm1",
            Family::Thm2 => "thm2",
            Family::Thm3pos => "thm3pos",
            Family::Thm3neg => "thm3neg",
            Family::Torus => "torus",
            Family::Walsh => "walsh",
            Family::Takata => "takata",
            Family::TakataMm => "takata-mm",
            Family::TakataMp => "takata-mp",
        }
    }

    fn all() -> [Family; 9] {
        use Family::*;
        [Thm1, Thm2, Thm3pos, Thm3neg, Torus, Walsh, Takata, TakataMm, TakataMp]
    }

    /// The smallest `m` the family is parametrized by; torus only uses `m = 0`.
    pub fn m_range(self, m_max: i64) -> std::ops::RangeInclusive<i64> {
        match self {
            Family::Thm2 => 0..=m_max,
            Family::Torus => 0..=0,
            _ => 1..=m_max,
        }
    }

    /// The knot computed at the parameters `(m, p)`.
    pub fn knot_at(self, m: i64, p: i64) -> Result<KnotSpec> {
        match self {
            Family::Thm1 | Family::Takata | Family::TakataMm => KnotSpec::new(-m, -p),
            Family::Thm2 | Family::TakataMp => KnotSpec::new(-m, p),
            Family::Thm3pos | Family::Walsh => KnotSpec::new(m, p),
            Family::Thm3neg => KnotSpec::new(m, -p),
            Family::Torus => KnotSpec::new(0, p),
        }
    }

    /// `J_N(k)` if this family can compute the knot `k`.
    pub fn eval_knot(self, k: KnotSpec, big_n: usize, exec: Exec) -> Option<Result<LaurentPoly>> {
        let (m, p) = (k.m, k.p);
        Some(match self {
            Family::Thm1 if m <= -1 && p <= -1 => jones_thm1_with(-m, -p, big_n, exec),
            Family::Thm2 if m <= 0 && p >= 1 => jones_thm2_with(-m, p, big_n, exec),
            Family::Thm3pos if m >= 1 && p >= 1 => jones_thm3_pos_with(m, p, big_n, exec),
            Family::Thm3neg if m >= 1 && p <= -1 => jones_thm3_neg_with(m, -p, big_n, exec),
            Family::Torus if m == 0 && p >= 1 => jones_torus_with(p, big_n, exec),
            Family::Walsh if m >= 1 => walsh_colored_jones(m, p, big_n),
            Family::Takata => {
                let (tb, mirrored) = k.two_bridge_form()?;
                // The 2-bridge formula computes the mirror b(l,t)*.
                takata_colored_jones_with(&tb, big_n, exec).map(|v| if mirrored { v } else { lp_invert_q(&v) })
            }
            Family::TakataMm if m <= -1 && p <= -1 => two_bridge_params(-m as u32, -p as u32, TwistFamily::MinusMinus)
                .and_then(|tb| takata_colored_jones_with(&tb, big_n, exec)),
            Family::TakataMp if m <= -1 && p >= 1 => two_bridge_params(-m as u32, p as u32, TwistFamily::MinusPlus)
                .and_then(|tb| takata_colored_jones_with(&tb, big_n, exec)),
            _ => return None,
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A family optionally composed with `q -> 1/q`, written `name:invert` or
/// `name∘invert`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub invert: bool,
}

impl FamilySpec {
    pub fn knot_at(self, m: i64, p: i64) -> Result<KnotSpec> {
        let k = self.family.knot_at(m, p)?;
        Ok(if self.invert { k.mirror() } else { k })
    }

    pub fn eval_knot(self, k: KnotSpec, big_n: usize, exec: Exec) -> Option<Result<LaurentPoly>> {
        if self.invert {
            Some(self.family.eval_knot(k.mirror(), big_n, exec)?.map(|v| lp_invert_q(&v)))
        } else {
            self.family.eval_knot(k, big_n, exec)
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, if self.invert { ":invert" } else { "" })
    }
}

impl FromStr for FamilySpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (name, invert) = match s.strip_suffix(":invert").or_else(|| s.strip_suffix("∘invert")) {
            Some(rest) => (rest, true),
            None => (s, false),
        };
        let family = Family::all()
            .into_iter()
            .find(|f| f.name() == name)
            .ok_or_else(|| Error::parse(format!("unknown family {name:?}")))?;
        Ok(FamilySpec { family, invert })
    }
}
