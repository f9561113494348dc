//! Coefficient sets and the two vertex-weight tables.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rational::{int, parse_rational, to_fraction_string, Rational};
use crate::state::{Color, ColoredState, StateType, Transition};

/// `(s, a, y_0..y_{d+1}, b_0..b_{d+1})` for a fixed `d`, with `b_0 = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientSet {
    d: usize,
    s: Rational,
    a: Rational,
    y: Vec<Rational>,
    b: Vec<Rational>,
}

impl CoefficientSet {
    pub fn new(
        d: usize,
        s: Rational,
        a: Rational,
        y: Vec<Rational>,
        b: Vec<Rational>,
    ) -> Result<Self> {
        let bad = |msg: String| Err(Error::Coefficients(msg));
        if d < 4 {
            return bad(format!("d = {d}, need d >= 4"));
        }
        if y.len() != d + 2 || b.len() != d + 2 {
            return bad(format!(
                "expected {} entries in y and b, got {} and {}",
                d + 2,
                y.len(),
                b.len()
            ));
        }
        if !b[0].is_zero() {
            return bad("b_0 must be 0".into());
        }
        if !s.is_positive() {
            return bad("s must be positive".into());
        }
        if a.is_negative() || y.iter().chain(&b).any(Signed::is_negative) {
            return bad("coefficients must be non-negative".into());
        }
        Ok(Self { d, s, a, y, b })
    }

    pub fn d(&self) -> usize {
        self.d
    }
    pub fn s(&self) -> &Rational {
        &self.s
    }
    pub fn a(&self) -> &Rational {
        &self.a
    }
    pub fn y(&self, i: usize) -> &Rational {
        &self.y[i]
    }
    pub fn b(&self, i: usize) -> &Rational {
        &self.b[i]
    }
    pub fn ys(&self) -> &[Rational] {
        &self.y
    }
    pub fn bs(&self) -> &[Rational] {
        &self.b
    }

    /// `a / s`, the constant in the bound `|D| <= (a/s) n`.
    pub fn ratio(&self) -> Rational {
        &self.a / &self.s
    }

    /// Same set scaled so that `s = 1`.
    pub fn normalized(&self) -> Self {
        let scale = |r: &Rational| r / &self.s;
        Self {
            d: self.d,
            s: Rational::one(),
            a: scale(&self.a),
            y: self.y.iter().map(scale).collect(),
            b: self.b.iter().map(scale).collect(),
        }
    }

    pub fn with_b(mut self, i: usize, value: Rational) -> Self {
        self.b[i] = value;
        self
    }

    pub fn with_y(mut self, i: usize, value: Rational) -> Self {
        self.y[i] = value;
        self
    }

    pub fn with_a(mut self, value: Rational) -> Self {
        self.a = value;
        self
    }

    /// Integer column of the published weight table for `delta` in 6..=9.
    pub fn builtin_table2(delta: usize) -> Result<Self> {
        let (a, s, y, b): (i64, i64, &[i64], &[i64]) = match delta {
            6 => (502_562_162_340, 1_010_109_434_040, &BUILTIN_Y6, &BUILTIN_B6),
            7 => (9_858_456_650, 21_118_330_730, &BUILTIN_Y7, &BUILTIN_B7),
            8 => (215_321_625_855, 489_195_209_055, &BUILTIN_Y8, &BUILTIN_B8),
            9 => (
                93_641_183_816_180,
                224_551_068_595_700,
                &BUILTIN_Y9,
                &BUILTIN_B9,
            ),
            _ => {
                return Err(Error::InvalidParameters(format!(
                    "no built-in coefficients for delta = {delta} (available: 6..=9)"
                )))
            }
        };
        let mut bs = vec![int(0)];
        bs.extend(b.iter().map(|&v| int(v)));
        Self::new(
            delta,
            int(s),
            int(a),
            y.iter().map(|&v| int(v)).collect(),
            bs,
        )
    }

    /// Reads `{d, s, a, y: [...], b: [...]}`; numbers may be JSON integers or
    /// `"num/den"` strings. `b` may include `b_0` or start at `b_1`.
    pub fn from_json(text: &str) -> Result<Self> {
        let v: Value =
            serde_json::from_str(text).map_err(|e| Error::Coefficients(e.to_string()))?;
        let field = |name: &str| {
            v.get(name)
                .ok_or_else(|| Error::Coefficients(format!("missing `{name}`")))
        };
        let d = field("d")?
            .as_u64()
            .ok_or_else(|| Error::Coefficients("`d` must be a non-negative integer".into()))?
            as usize;
        let list = |name: &str| -> Result<Vec<Rational>> {
            field(name)?
                .as_array()
                .ok_or_else(|| Error::Coefficients(format!("`{name}` must be an array")))?
                .iter()
                .map(json_rational)
                .collect()
        };
        let y = list("y")?;
        let mut b = list("b")?;
        if b.len() == d + 1 {
            b.insert(0, int(0));
        }
        Self::new(
            d,
            json_rational(field("s")?)?,
            json_rational(field("a")?)?,
            y,
            b,
        )
    }

    pub fn to_json(&self) -> Value {
        let texts = |v: &[Rational]| v.iter().map(to_fraction_string).collect::<Vec<_>>();
        json!({
            "d": self.d,
            "s": to_fraction_string(&self.s),
            "a": to_fraction_string(&self.a),
            "y": texts(&self.y),
            "b": texts(&self.b),
        })
    }
}

fn json_rational(v: &Value) -> Result<Rational> {
    let parsed = match v {
        Value::Number(n) if n.is_i64() => n.as_i64().map(int),
        Value::Number(n) if n.is_u64() => {
            n.as_u64().map(|u| Rational::from_integer(BigInt::from(u)))
        }
        Value::String(s) => parse_rational(s),
        _ => None,
    };
    parsed.ok_or_else(|| Error::Coefficients(format!("`{v}` is not an integer or num/den string")))
}

const BUILTIN_Y6: [i64; 8] = [
    254_021_681_340,
    296_456_709_780,
    357_968_691_360,
    387_969_820_875,
    401_052_708_000,
    409_645_123_200,
    422_846_061_750,
    422_846_061_750,
];
const BUILTIN_B6: [i64; 7] = [
    151_217_550_540,
    226_888_474_680,
    264_487_991_040,
    289_076_943_960,
    313_665_896_880,
    338_254_849_800,
    338_254_849_800,
];
const BUILTIN_Y7: [i64; 9] = [
    4_492_799_990,
    5_196_793_700,
    6_598_921_770,
    7_321_226_150,
    7_754_608_778,
    7_981_810_970,
    8_093_880_725,
    8_265_018_290,
    8_265_018_290,
];
const BUILTIN_B7: [i64; 8] = [
    2_770_921_790,
    4_278_173_340,
    5_021_360_750,
    5_545_512_770,
    5_915_830_130,
    6_286_147_490,
    6_656_464_850,
    6_656_464_850,
];
const BUILTIN_Y8: [i64; 10] = [
    87_943_795_415,
    105_895_928_425,
    138_571_857_655,
    153_359_038_875,
    164_408_232_975,
    170_236_790_715,
    176_196_828_255,
    180_637_395_519,
    180_637_395_519,
    180_637_395_519,
];
const BUILTIN_B8: [i64; 9] = [
    57_321_630_520,
    89_997_559_750,
    107_061_717_735,
    118_110_911_835,
    126_835_767_555,
    133_341_576_375,
    139_847_385_195,
    146_353_194_015,
    146_353_194_015,
];
const BUILTIN_Y9: [i64; 11] = [
    33_987_088_151_324,
    43_483_590_947_181,
    57_524_154_844_772,
    64_634_747_985_500,
    69_343_125_357_044,
    73_000_318_746_740,
    75_612_599_739_380,
    77_277_448_218_740,
    78_747_157_548_500,
    78_747_157_548_500,
    78_747_157_548_500,
];
const BUILTIN_B9: [i64; 10] = [
    23_820_497_555_547,
    37_861_061_453_138,
    45_588_781_601_132,
    50_365_444_145_324,
    54_125_243_789_540,
    57_102_072_080_900,
    59_456_970_201_860,
    61_811_868_322_820,
    64_166_766_443_780,
    64_166_766_443_780,
];

/// Weight of a vertex of the given class in a state of the given type.
pub fn class_weight(ty: StateType, color: Color, i: usize, c: &CoefficientSet) -> Rational {
    let d = c.d;
    let gap = &c.s - &c.a;
    let share = |den: usize| &gap / int(den as i64);
    match (ty, color) {
        (_, Color::Red) => Rational::zero(),
        (_, Color::White) => c.a.clone(),
        (StateType::Type2, Color::Yellow) => c.y[i.min(d + 1)].clone(),
        (StateType::Type2, Color::Blue) => c.b[i.min(d + 1)].clone(),
        (StateType::Type1, Color::Yellow) if i >= d => &c.a - share(i + 1),
        (StateType::Type1, Color::Yellow) => &c.a - share(d + 1),
        (StateType::Type1, Color::Blue) if i > d => &c.a - share(i + 2) - share(i),
        (StateType::Type1, Color::Blue) if i == d => &c.a - share(d + 2) - share(d + 1),
        (StateType::Type1, Color::Blue) => &c.a - share(d + 1) * int(2),
    }
}

pub fn vertex_weight(state: &ColoredState<'_>, v: usize, c: &CoefficientSet) -> Rational {
    class_weight(
        state.classify_type(c.d),
        state.color(v),
        state.wy_degree(v),
        c,
    )
}

pub fn total_weight(state: &ColoredState<'_>, c: &CoefficientSet) -> Rational {
    let ty = state.classify_type(c.d);
    (0..state.graph().n())
        .map(|v| class_weight(ty, state.color(v), state.wy_degree(v), c))
        .sum()
}

/// Both weight tables over a common positive denominator, for fast exact
/// evaluation of many prospective selections.
#[derive(Clone, Debug)]
pub struct WeightTable {
    d: usize,
    denom: BigInt,
    s: BigInt,
    // [type][color slot W/Y/B][wy degree]
    entries: [[Vec<BigInt>; 3]; 2],
}

/// Per-state data shared by all drop evaluations from that state.
#[derive(Clone, Debug)]
pub struct DropContext {
    ty: StateType,
    witnesses: usize,
    total: [BigInt; 2],
}

impl WeightTable {
    /// Covers WY-degrees `0..=max_wy`.
    pub fn new(c: &CoefficientSet, max_wy: usize) -> Self {
        let colors = [Color::White, Color::Yellow, Color::Blue];
        let types = [StateType::Type1, StateType::Type2];
        let raw: Vec<Vec<Vec<Rational>>> = types
            .iter()
            .map(|&t| {
                colors
                    .iter()
                    .map(|&col| (0..=max_wy).map(|i| class_weight(t, col, i, c)).collect())
                    .collect()
            })
            .collect();
        let denom = raw
            .iter()
            .flatten()
            .flatten()
            .chain(std::iter::once(&c.s))
            .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
        let scale = |r: &Rational| (r * Rational::from_integer(denom.clone())).to_integer();
        let entries = std::array::from_fn(|t| {
            std::array::from_fn(|col| raw[t][col].iter().map(scale).collect())
        });
        Self {
            d: c.d,
            s: scale(&c.s),
            denom,
            entries,
        }
    }

    pub fn for_state(c: &CoefficientSet, state: &ColoredState<'_>) -> Self {
        Self::new(c, state.graph().max_degree())
    }

    pub fn denom(&self) -> &BigInt {
        &self.denom
    }

    /// `s` scaled by the common denominator.
    pub fn s_scaled(&self) -> &BigInt {
        &self.s
    }

    pub fn to_rational(&self, scaled: &BigInt) -> Rational {
        Rational::new(scaled.clone(), self.denom.clone())
    }

    fn entry(&self, ty: StateType, (color, i): (Color, usize)) -> BigInt {
        let t = match ty {
            StateType::Type1 => 0,
            StateType::Type2 => 1,
        };
        let slot = match color {
            Color::White => 0,
            Color::Yellow => 1,
            Color::Blue => 2,
            Color::Red => return BigInt::zero(),
        };
        self.entries[t][slot][i].clone()
    }

    fn is_witness(&self, (color, i): (Color, usize)) -> bool {
        match color {
            Color::White => i > self.d,
            Color::Yellow => i > self.d + 1,
            _ => false,
        }
    }

    pub fn total_scaled(&self, state: &ColoredState<'_>, ty: StateType) -> BigInt {
        (0..state.graph().n())
            .map(|v| self.entry(ty, (state.color(v), state.wy_degree(v))))
            .sum()
    }

    pub fn context(&self, state: &ColoredState<'_>) -> DropContext {
        let ty = state.classify_type(self.d);
        let witnesses = (0..state.graph().n())
            .filter(|&v| self.is_witness((state.color(v), state.wy_degree(v))))
            .count();
        let total = if ty == StateType::Type1 {
            [
                self.total_scaled(state, StateType::Type1),
                self.total_scaled(state, StateType::Type2),
            ]
        } else {
            // Type 2 is absorbing, the Type 1 total is never consulted
            [BigInt::zero(), self.total_scaled(state, StateType::Type2)]
        };
        DropContext {
            ty,
            witnesses,
            total,
        }
    }

    /// Scaled weight decrease caused by the given transitions.
    pub fn drop_scaled(&self, ctx: &DropContext, transitions: &[Transition]) -> BigInt {
        let delta = |ty: StateType| -> BigInt {
            transitions
                .iter()
                .map(|t| self.entry(ty, t.from) - self.entry(ty, t.to))
                .sum()
        };
        match ctx.ty {
            StateType::Type2 => delta(StateType::Type2),
            StateType::Type1 => {
                let lost = transitions
                    .iter()
                    .filter(|t| self.is_witness(t.from))
                    .count();
                let gained = transitions.iter().filter(|t| self.is_witness(t.to)).count();
                if ctx.witnesses + gained > lost {
                    delta(StateType::Type1)
                } else {
                    &ctx.total[0] - (&ctx.total[1] - delta(StateType::Type2))
                }
            }
        }
    }

    pub fn drop_of(&self, state: &ColoredState<'_>, ctx: &DropContext, v: usize) -> BigInt {
        self.drop_scaled(ctx, &state.transitions(v))
    }
}
