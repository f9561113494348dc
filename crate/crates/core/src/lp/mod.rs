//! The bound LP: minimise `a` (with `s = 1`) over all coefficient sets that
//! satisfy the conditions, solved exactly over the rationals.

mod reference;
mod simplex;

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Map, Value};

use crate::conditions::{check_conditions, conditions, Var};
use crate::error::{Error, Result};
use crate::par::{map_collect, Execution};
use crate::rational::{int, to_decimal, to_f64, to_fraction_string, Rational};
use crate::weights::CoefficientSet;

pub use reference::{
    corollary_fractions, reference_bound, verify_corollary, CorollaryCheck, ReferenceBound,
};
pub use simplex::{minimize, Outcome};

/// Smallest `d` the LP is built for.
pub const MIN_LP_D: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Ge,
    Le,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Ge => ">=",
            Relation::Le => "<=",
        })
    }
}

/// One LP row over `(a, y_0..y_{d+1}, b_1..b_{d+1})`, scaled to integer
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearConstraint {
    pub coeffs: Vec<(Var, Rational)>,
    pub relation: Relation,
    pub rhs: Rational,
    pub label: String,
}

impl LinearConstraint {
    pub fn coefficient(&self, var: Var) -> Rational {
        self.coeffs
            .iter()
            .find(|(v, _)| *v == var)
            .map_or_else(Rational::zero, |(_, c)| c.clone())
    }

    pub fn lhs(&self, x: &[(Var, Rational)]) -> Rational {
        self.coeffs
            .iter()
            .map(|(v, c)| {
                let value = x
                    .iter()
                    .find(|(w, _)| w == v)
                    .map_or_else(Rational::zero, |(_, r)| r.clone());
                c * value
            })
            .sum()
    }

    pub fn holds(&self, x: &[(Var, Rational)]) -> bool {
        let lhs = self.lhs(x);
        match self.relation {
            Relation::Ge => lhs >= self.rhs,
            Relation::Le => lhs <= self.rhs,
        }
    }

    /// The row as `G x >= h`.
    fn as_ge(&self) -> (Vec<(Var, Rational)>, Rational) {
        match self.relation {
            Relation::Ge => (self.coeffs.clone(), self.rhs.clone()),
            Relation::Le => (
                self.coeffs.iter().map(|(v, c)| (*v, -c)).collect(),
                -self.rhs.clone(),
            ),
        }
    }
}

impl fmt::Display for LinearConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.label)?;
        for (k, (v, c)) in self.coeffs.iter().enumerate() {
            let sign = if c.is_negative() {
                "-"
            } else if k > 0 {
                "+"
            } else {
                ""
            };
            let mag = c.abs();
            if k > 0 {
                write!(f, " {sign} ")?;
            } else {
                write!(f, "{sign}")?;
            }
            if mag.is_one() {
                write!(f, "{v}")?;
            } else {
                write!(f, "{}{v}", to_fraction_string(&mag).trim_end_matches("/1"))?;
            }
        }
        write!(
            f,
            " {} {}",
            self.relation,
            to_fraction_string(&self.rhs).trim_end_matches("/1")
        )
    }
}

/// LP variables in column order.
pub fn variables(d: usize) -> Vec<Var> {
    let mut vars = vec![Var::A];
    vars.extend((0..=d + 1).map(Var::Y));
    vars.extend((1..=d + 1).map(Var::B));
    vars
}

fn scale_to_integers(coeffs: &mut [(Var, Rational)], rhs: &mut Rational) {
    let mut l = rhs.denom().clone();
    for (_, c) in coeffs.iter() {
        l = l.lcm(c.denom());
    }
    let k = Rational::from_integer(l);
    for (_, c) in coeffs.iter_mut() {
        *c *= &k;
    }
    *rhs *= &k;
}

/// The LP rows for `d`: every condition with `s = 1`, followed by one
/// non-negativity row per variable. The strict `s > a` becomes `a <= 1`.
pub fn build_constraints(d: usize) -> Result<Vec<LinearConstraint>> {
    if d < MIN_LP_D {
        return Err(Error::InvalidParameters(format!(
            "LP needs d >= {MIN_LP_D}, got {d}"
        )));
    }
    let mut rows = Vec::new();
    for cond in conditions(d) {
        let mut coeffs: Vec<(Var, Rational)> = cond
            .form
            .terms()
            .iter()
            .filter(|(v, _)| *v != Var::S)
            .cloned()
            .collect();
        let mut rhs = -cond.form.coefficient(Var::S);
        let mut relation = Relation::Ge;
        if cond.strict {
            for (_, c) in coeffs.iter_mut() {
                *c = -c.clone();
            }
            rhs = -rhs;
            relation = Relation::Le;
        }
        scale_to_integers(&mut coeffs, &mut rhs);
        rows.push(LinearConstraint {
            coeffs,
            relation,
            rhs,
            label: cond.label.to_string(),
        });
    }
    for v in variables(d) {
        rows.push(LinearConstraint {
            coeffs: vec![(v, int(1))],
            relation: Relation::Ge,
            rhs: Rational::zero(),
            label: format!("{v} >= 0"),
        });
    }
    Ok(rows)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
}

#[derive(Clone, Debug)]
pub struct LpSolution {
    pub d: usize,
    pub status: LpStatus,
    /// Optimal `a` with `s = 1`.
    pub objective: Rational,
    pub assignment: Vec<(Var, Rational)>,
    /// Every row holds exactly, `a < 1`, and primal and dual values agree.
    pub verified: bool,
    pub pivots: usize,
}

impl LpSolution {
    pub fn value(&self, var: Var) -> Rational {
        self.assignment
            .iter()
            .find(|(v, _)| *v == var)
            .map_or_else(Rational::zero, |(_, r)| r.clone())
    }

    /// The optimum as a coefficient set with `s = 1`.
    pub fn coefficients(&self) -> Result<CoefficientSet> {
        let d = self.d;
        let y = (0..=d + 1).map(|i| self.value(Var::Y(i))).collect();
        let mut b = vec![Rational::zero()];
        b.extend((1..=d + 1).map(|i| self.value(Var::B(i))));
        CoefficientSet::new(d, int(1), self.value(Var::A), y, b)
    }

    pub fn to_json(&self) -> Value {
        let mut assignment = Map::new();
        for (v, r) in &self.assignment {
            assignment.insert(v.to_string(), Value::String(to_fraction_string(r)));
        }
        json!({
            "version": 1,
            "d": self.d,
            "a_star": to_fraction_string(&self.objective),
            "a_star_decimal": to_decimal(&self.objective, 5),
            "assignment": assignment,
            "verified": self.verified,
        })
    }
}

/// Minimises `a` subject to [`build_constraints`] and checks the result
/// row by row.
pub fn solve_min_a(d: usize) -> Result<LpSolution> {
    let constraints = build_constraints(d)?;
    let vars = variables(d);
    let column = |v: Var| vars.iter().position(|&w| w == v).expect("known variable");

    // non-negativity is implicit in the solver
    let dense: Vec<(Vec<Rational>, Rational)> = constraints
        .iter()
        .filter(|c| c.coeffs.len() > 1 || !c.rhs.is_zero() || c.relation != Relation::Ge)
        .map(|c| {
            let (coeffs, rhs) = c.as_ge();
            let mut row = vec![Rational::zero(); vars.len()];
            for (v, k) in coeffs {
                row[column(v)] += k;
            }
            (row, rhs)
        })
        .collect();
    let mut cost = vec![Rational::zero(); vars.len()];
    cost[column(Var::A)] = int(1);

    match minimize(&cost, &dense) {
        Outcome::Infeasible => Ok(LpSolution {
            d,
            status: LpStatus::Infeasible,
            objective: Rational::zero(),
            assignment: Vec::new(),
            verified: false,
            pivots: 0,
        }),
        Outcome::Optimal { x, value, pivots } => {
            let assignment: Vec<(Var, Rational)> = vars.iter().copied().zip(x).collect();
            let objective = assignment[column(Var::A)].1.clone();
            let verified = objective == value
                && objective < Rational::one()
                && constraints.iter().all(|c| c.holds(&assignment));
            Ok(LpSolution {
                d,
                status: LpStatus::Optimal,
                objective,
                assignment,
                verified,
                pivots,
            })
        }
    }
}

/// Exact check that `solution` transported back to coefficients satisfies
/// every condition, the strict one included.
pub fn solution_satisfies_conditions(solution: &LpSolution) -> bool {
    solution
        .coefficients()
        .map(|c| check_conditions(&c).overall)
        .unwrap_or(false)
}

/// Whether every coefficient and the right-hand side are integers.
pub fn is_integral(c: &LinearConstraint) -> bool {
    c.rhs.is_integer() && c.coeffs.iter().all(|(_, k)| k.is_integer())
}

/// Degrees shown by default in the comparison table.
pub const DEFAULT_TABLE_DEGREES: [usize; 13] = [6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 20, 30, 40];

#[derive(Clone, Debug)]
pub struct TableColumn {
    pub delta: usize,
    pub a_star: Rational,
    pub verified: bool,
    pub reference: ReferenceBound,
}

/// LP optimum next to the reference bound for each degree; degrees are
/// solved independently under `exec`.
pub fn comparison_table(deltas: &[usize], exec: Execution) -> Result<Vec<TableColumn>> {
    map_collect(exec, deltas, |&delta| {
        let sol = solve_min_a(delta)?;
        Ok(TableColumn {
            delta,
            verified: sol.verified,
            a_star: sol.objective,
            reference: reference_bound(delta),
        })
    })
    .into_iter()
    .collect()
}

/// Plain-text table: a header of degrees, then the LP row and the capped
/// reference row, five decimals each.
pub fn format_table(cols: &[TableColumn]) -> String {
    let mut header = format!("{:<12}", "delta");
    let mut ours = format!("{:<12}", "LP optimum");
    let mut reference = format!("{:<12}", "reference");
    for c in cols {
        header.push_str(&format!(" {:>8}", c.delta));
        ours.push_str(&format!(" {:>8}", to_decimal(&c.a_star, 5)));
        reference.push_str(&format!(" {:>8.5}", c.reference.capped));
    }
    format!("{header}\n{ours}\n{reference}\n")
}

impl TableColumn {
    pub fn a_star_f64(&self) -> f64 {
        to_f64(&self.a_star)
    }
}
