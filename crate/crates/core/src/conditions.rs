//! The coefficient conditions, stored once as homogeneous linear forms in
//! `(s, a, y_0..y_{d+1}, b_1..b_{d+1})`.
//!
//! Each condition reads `form >= 0` (or `form > 0` when strict). For the
//! `... >= s` rows the form is `LHS - s`, so its value is the slack.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::rational::{frac, int, serde_fraction, Rational};
use crate::weights::CoefficientSet;

/// Number of labelled condition families, `(1)` through `(41)`.
pub const FAMILY_COUNT: u8 = 41;

/// A variable of the coefficient system. `b_0` is identically zero and has
/// no variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    S,
    A,
    Y(usize),
    B(usize),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::S => write!(f, "s"),
            Var::A => write!(f, "a"),
            Var::Y(i) => write!(f, "y_{i}"),
            Var::B(i) => write!(f, "b_{i}"),
        }
    }
}

/// Homogeneous linear form with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm {
    terms: Vec<(Var, Rational)>,
}

impl LinearForm {
    fn var(v: Var) -> Self {
        Self {
            terms: vec![(v, int(1))],
        }
    }

    pub fn terms(&self) -> &[(Var, Rational)] {
        &self.terms
    }

    pub fn coefficient(&self, var: Var) -> Rational {
        self.terms
            .iter()
            .find(|(v, _)| *v == var)
            .map_or_else(Rational::zero, |(_, c)| c.clone())
    }

    fn normalize(mut self) -> Self {
        self.terms.sort_by_key(|(v, _)| *v);
        let mut merged: Vec<(Var, Rational)> = Vec::with_capacity(self.terms.len());
        for (v, c) in self.terms {
            match merged.last_mut() {
                Some((last, acc)) if *last == v => *acc += c,
                _ => merged.push((v, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        Self { terms: merged }
    }

    pub fn evaluate(&self, c: &CoefficientSet) -> Rational {
        self.terms
            .iter()
            .map(|(v, k)| {
                k * match v {
                    Var::S => c.s(),
                    Var::A => c.a(),
                    Var::Y(i) => c.y(*i),
                    Var::B(i) => c.b(*i),
                }
            })
            .sum()
    }
}

impl Add for LinearForm {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self.terms.extend(rhs.terms);
        self.normalize()
    }
}

impl Sub for LinearForm {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + rhs * -1
    }
}

impl Mul<Rational> for LinearForm {
    type Output = Self;
    fn mul(self, k: Rational) -> Self {
        Self {
            terms: self.terms.into_iter().map(|(v, c)| (v, c * &k)).collect(),
        }
        .normalize()
    }
}

impl Mul<i64> for LinearForm {
    type Output = Self;
    fn mul(self, k: i64) -> Self {
        self * int(k)
    }
}

fn s() -> LinearForm {
    LinearForm::var(Var::S)
}
fn a() -> LinearForm {
    LinearForm::var(Var::A)
}
fn y(i: usize) -> LinearForm {
    LinearForm::var(Var::Y(i))
}
fn b(i: usize) -> LinearForm {
    if i == 0 {
        LinearForm { terms: Vec::new() }
    } else {
        LinearForm::var(Var::B(i))
    }
}
fn zero() -> LinearForm {
    b(0)
}
fn half() -> Rational {
    frac(1, 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    /// Condition `number`; chain conditions (1)-(3) carry the position of
    /// the elementary comparison.
    Fixed { number: u8, part: Option<usize> },
    /// Per-index conditions (36)-(41).
    Family { number: u8, i: usize },
}

impl Label {
    pub fn number(&self) -> u8 {
        match *self {
            Label::Fixed { number, .. } | Label::Family { number, .. } => number,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Fixed { number, part: None } => write!(f, "({number})"),
            Label::Fixed {
                number,
                part: Some(k),
            } => write!(f, "({number}).{k}"),
            Label::Family { number, i } => write!(f, "({number}, i={i})"),
        }
    }
}

impl Serialize for Label {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Debug)]
pub struct Condition {
    pub label: Label,
    pub text: String,
    pub form: LinearForm,
    pub strict: bool,
}

fn fixed(number: u8, text: &str, form: LinearForm) -> Condition {
    Condition {
        label: Label::Fixed { number, part: None },
        text: text.to_string(),
        form,
        strict: false,
    }
}

/// Chain `first >= second >= ...` expanded into elementary comparisons.
fn chain(number: u8, links: Vec<(String, LinearForm)>, out: &mut Vec<Condition>) {
    for (k, pair) in links.windows(2).enumerate() {
        out.push(Condition {
            label: Label::Fixed {
                number,
                part: Some(k + 1),
            },
            text: format!("{} >= {}", pair[0].0, pair[1].0),
            form: pair[0].1.clone() - pair[1].1.clone(),
            strict: false,
        });
    }
}

/// Every condition for the given `d`: the chains (1)-(3), the caps (4)-(8),
/// the fixed rows (9)-(35) and the families (36)-(41) for `2 <= i <= d-2`.
///
/// Requires `d >= 4`.
pub fn conditions(d: usize) -> Vec<Condition> {
    assert!(d >= 4, "conditions need d >= 4");
    let di = d as i64;
    let dr = |k: i64| int(di + k);
    let mut out = Vec::new();

    // (1): s > a >= y_{d+1} >= ... >= y_0 >= b_0 = 0
    out.push(Condition {
        label: Label::Fixed {
            number: 1,
            part: Some(0),
        },
        text: "s > a".into(),
        form: s() - a(),
        strict: true,
    });
    let mut links = vec![("a".to_string(), a())];
    links.extend((0..=d + 1).rev().map(|i| (format!("y_{i}"), y(i))));
    links.push(("b_0".into(), zero()));
    chain(1, links, &mut out);

    // (2): 0 <= b_{d+1}-b_d <= b_d-b_{d-1} <= ... <= b_2-b_1 <= b_1
    let mut links: Vec<(String, LinearForm)> = (1..=d + 1)
        .map(|i| (format!("b_{i}-b_{}", i - 1), b(i) - b(i - 1)))
        .collect();
    links.push(("0".into(), zero()));
    chain(2, links, &mut out);

    // (3): 0 <= y_{d+1}-b_{d+1} <= ... <= y_1-b_1 <= y_0
    let mut links: Vec<(String, LinearForm)> = (0..=d + 1)
        .map(|i| (format!("y_{i}-b_{i}"), y(i) - b(i)))
        .collect();
    links.push(("0".into(), zero()));
    chain(3, links, &mut out);

    // (4)-(8): caps tying Type 2 weights to the Type 1 table
    let gap = || s() - a();
    let share = |k: i64| gap() * frac(1, di + k);
    out.push(fixed(
        4,
        "y_{d+1} <= a-(s-a)/(d+2)",
        a() - share(2) - y(d + 1),
    ));
    out.push(fixed(5, "y_d <= a-(s-a)/(d+1)", a() - share(1) - y(d)));
    out.push(fixed(
        6,
        "b_{d+1} <= a-(s-a)/(d+3)-(s-a)/(d+1)",
        a() - share(3) - share(1) - b(d + 1),
    ));
    out.push(fixed(
        7,
        "b_d <= a-(s-a)/(d+2)-(s-a)/(d+1)",
        a() - share(2) - share(1) - b(d),
    ));
    out.push(fixed(
        8,
        "b_{d-1} <= a-2(s-a)/(d+1)",
        a() - share(1) * 2 - b(d - 1),
    ));

    let ge_s = |number: u8, text: &str, lhs: LinearForm, out: &mut Vec<Condition>| {
        out.push(fixed(number, &format!("{text} >= s"), lhs - s()));
    };
    let b32 = || b(3) - b(2);
    let b21 = || b(2) - b(1);
    ge_s(9, "a+d(a-y_{d-1})", a() + (a() - y(d - 1)) * di, &mut out);
    ge_s(
        10,
        "a+d(y_{d+1}-b_d)",
        a() + (y(d + 1) - b(d)) * di,
        &mut out,
    );
    ge_s(
        11,
        "y_{d+1}+(d+1)(a-y_{d-2})",
        y(d + 1) + (a() - y(d - 2)) * dr(1),
        &mut out,
    );
    ge_s(
        12,
        "y_{d+1}+(d+1)(y_{d+1}-b_d)",
        y(d + 1) + (y(d + 1) - b(d)) * dr(1),
        &mut out,
    );
    ge_s(
        13,
        "a+(d-1)(a-y_{d-2})",
        a() + (a() - y(d - 2)) * dr(-1),
        &mut out,
    );
    ge_s(
        14,
        "a+(d-1)(y_d-b_{d-1})",
        a() + (y(d) - b(d - 1)) * dr(-1),
        &mut out,
    );
    ge_s(
        15,
        "y_d+d(a-y_{d-3})",
        y(d) + (a() - y(d - 3)) * di,
        &mut out,
    );
    ge_s(
        16,
        "y_d+d(y_d-b_{d-1})",
        y(d) + (y(d) - b(d - 1)) * di,
        &mut out,
    );
    ge_s(
        17,
        "b_{d+1}+(d+1)(a-y_{d-2})",
        b(d + 1) + (a() - y(d - 2)) * dr(1),
        &mut out,
    );
    ge_s(
        18,
        "b_{d+1}+(d+1)(y_{d-1}-b_{d-1})",
        b(d + 1) + (y(d - 1) - b(d - 1)) * dr(1),
        &mut out,
    );
    ge_s(
        19,
        "a+(d-1)(b_3-b_2)+(y_2-b_1)+(d-3)(b_3-b_2)",
        a() + b32() * dr(-1) + (y(2) - b(1)) + b32() * dr(-3),
        &mut out,
    );
    ge_s(
        20,
        "y_2+(d-3)(b_3-b_2)+2(y_2-b_1+(d-3)(b_3-b_2))",
        y(2) + b32() * dr(-3) + (y(2) - b(1) + b32() * dr(-3)) * 2,
        &mut out,
    );
    let d_minus_3_2 = dr(0) - frac(3, 2);
    ge_s(
        21,
        "a+1/2 b_3+(d-3/2)(b_3-b_2)+(a-y_1)",
        a() + b(3) * half() + b32() * d_minus_3_2.clone() + (a() - y(1)),
        &mut out,
    );
    ge_s(
        22,
        "a+1/2 b_3+(d-3/2)(b_3-b_2)+(y_1-b_1+(d-3)(b_3-b_2))",
        a() + b(3) * half() + b32() * d_minus_3_2.clone() + (y(1) - b(1) + b32() * dr(-3)),
        &mut out,
    );
    ge_s(
        23,
        "3/2 a+1/2 b_3-1/2 y_0+(d-2)(b_2-b_1)",
        a() * frac(3, 2) + b(3) * half() - y(0) * half() + b21() * dr(-2),
        &mut out,
    );
    ge_s(
        24,
        "a+1/2 b_3+1/2 y_1-1/2 b_1+(d-2)(b_2-b_1)+1/2(d-3)(b_3-b_2)",
        a() + b(3) * half() + y(1) * half() - b(1) * half()
            + b21() * dr(-2)
            + b32() * (dr(-3) * half()),
        &mut out,
    );
    ge_s(
        25,
        "3/2 a+b_3+1/2(d-3)(b_3-b_1)+1/2(d-2)(b_3-b_2)",
        a() * frac(3, 2) + b(3) + (b(3) - b(1)) * (dr(-3) * half()) + b32() * (dr(-2) * half()),
        &mut out,
    );
    ge_s(
        26,
        "a+b_3+1/2 y_1-1/2 b_1+1/2(d-3)(b_3-b_1)+1/2(d-4)(b_3-b_2)",
        a() + b(3) + y(1) * half() - b(1) * half()
            + (b(3) - b(1)) * (dr(-3) * half())
            + b32() * (dr(-4) * half()),
        &mut out,
    );
    ge_s(27, "b_3+3(a-y_0)", b(3) + (a() - y(0)) * 3, &mut out);
    ge_s(
        28,
        "b_3+3(y_1-b_1+(d-3)(b_3-b_2))",
        b(3) + (y(1) - b(1) + b32() * dr(-3)) * 3,
        &mut out,
    );
    ge_s(
        29,
        "2y_1+2(d-2)(b_2-b_1)",
        y(1) * 2 + b21() * (dr(-2) * int(2)),
        &mut out,
    );
    ge_s(
        30,
        "a+1/2 b_2+(d-3/2)(b_2-b_1)+1/2(a-y_1)",
        a() + b(2) * half() + b21() * d_minus_3_2.clone() + (a() - y(1)) * half(),
        &mut out,
    );
    ge_s(
        31,
        "a+1/2 b_2+(d-3/2)(b_2-b_1)+1/2(y_1-b_1+(d-3)(b_2-b_1))",
        a() + b(2) * half() + b21() * d_minus_3_2 + (y(1) - b(1) + b21() * dr(-3)) * half(),
        &mut out,
    );
    ge_s(
        32,
        "a+1/2(d-1)b_2",
        a() + b(2) * (dr(-1) * half()),
        &mut out,
    );
    ge_s(
        33,
        "b_2+2y_0+2(d-2)(b_2-b_1)",
        b(2) + y(0) * 2 + b21() * (dr(-2) * int(2)),
        &mut out,
    );
    ge_s(
        34,
        "b_2+y_0+(d-2)(b_2-b_1)+(a-y_0)",
        b(2) + y(0) + b21() * dr(-2) + (a() - y(0)),
        &mut out,
    );
    ge_s(35, "y_0+(d-1)b_1", y(0) + b(1) * dr(-1), &mut out);

    for i in 2..=d - 2 {
        let ii = i as i64;
        let step = || b(i + 2) - b(i + 1);
        let rest = int(di - ii - 2);
        let family = |number: u8, text: &str, lhs: LinearForm| Condition {
            label: Label::Family { number, i },
            text: format!("{text} >= s"),
            form: lhs - s(),
            strict: false,
        };
        out.push(family(
            36,
            "a+(d-i)(b_{i+2}-b_{i+1})+i(a-y_{i-1})",
            a() + step() * (di - ii) + (a() - y(i - 1)) * ii,
        ));
        out.push(family(
            37,
            "a+(d-i)(b_{i+2}-b_{i+1})+i(y_{i+1}-b_i+(d-i-2)(b_{i+2}-b_{i+1}))",
            a() + step() * (di - ii) + (y(i + 1) - b(i) + step() * rest.clone()) * ii,
        ));
        out.push(family(
            38,
            "y_{i+1}+(d-i-2)(b_{i+2}-b_{i+1})+(i+1)(a-y_{i-2})",
            y(i + 1) + step() * rest.clone() + (a() - y(i - 2)) * (ii + 1),
        ));
        out.push(family(
            39,
            "y_{i+1}+(d-i-2)(b_{i+2}-b_{i+1})+(i+1)(y_{i+1}-b_i+(d-i-2)(b_{i+2}-b_{i+1}))",
            y(i + 1) + step() * rest.clone() + (y(i + 1) - b(i) + step() * rest.clone()) * (ii + 1),
        ));
        out.push(family(
            40,
            "b_{i+2}+(i+2)(a-y_{i-1})",
            b(i + 2) + (a() - y(i - 1)) * (ii + 2),
        ));
        out.push(family(
            41,
            "b_{i+2}+(i+2)(y_i-b_i+(d-i-2)(b_{i+2}-b_{i+1}))",
            b(i + 2) + (y(i) - b(i) + step() * rest.clone()) * (ii + 2),
        ));
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub label: Label,
    pub text: String,
    pub satisfied: bool,
    #[serde(with = "serde_fraction")]
    pub slack: Rational,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConditionReport {
    pub version: u32,
    pub d: usize,
    pub overall: bool,
    pub verdicts: Vec<Verdict>,
}

impl ConditionReport {
    pub fn failures(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| !v.satisfied)
    }

    pub fn get(&self, label: Label) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.label == label)
    }

    /// Verdicts of one numbered family.
    pub fn family(&self, number: u8) -> impl Iterator<Item = &Verdict> {
        self.verdicts
            .iter()
            .filter(move |v| v.label.number() == number)
    }

    /// Numbered families with at least one failing member.
    pub fn failing_families(&self) -> Vec<u8> {
        let mut out: Vec<u8> = self.failures().map(|v| v.label.number()).collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Exact evaluation of every condition for `c`.
pub fn check_conditions(c: &CoefficientSet) -> ConditionReport {
    let verdicts: Vec<Verdict> = conditions(c.d())
        .into_iter()
        .map(|cond| {
            let slack = cond.form.evaluate(c);
            let satisfied = if cond.strict {
                slack.is_positive()
            } else {
                !slack.is_negative()
            };
            Verdict {
                label: cond.label,
                text: cond.text,
                satisfied,
                slack,
            }
        })
        .collect();
    ConditionReport {
        version: 1,
        d: c.d(),
        overall: verdicts.iter().all(|v| v.satisfied),
        verdicts,
    }
}

/// The chain `0 <= y_{d+1}-b_d <= y_d-b_{d-1} <= ... <= y_2-b_1 <= y_1`.
pub fn derived_chain_holds(c: &CoefficientSet) -> bool {
    let d = c.d();
    let mut seq: Vec<Rational> = vec![Rational::zero()];
    seq.extend((2..=d + 1).rev().map(|i| c.y(i) - c.b(i - 1)));
    seq.push(c.y(1).clone());
    seq.windows(2).all(|w| w[0] <= w[1])
}
