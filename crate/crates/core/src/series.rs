//! Truncated formal power series in `q` whose coefficients are integer
//! polynomials in `a`, `b`, `d`, with an optional bounded Laurent variable `z`.
//!
//! A [`Series`] carries its own truncation bounds. Every stored term lies
//! inside those bounds and has a nonzero coefficient, so two series with the
//! same bounds are equal exactly when their term maps are equal.
//!
//! Coefficients are arbitrary precision. Products take an `i128` fast path and
//! fall back to [`BigInt`] arithmetic when a coefficient does not fit.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// `T(m) = m(m+1)/2`.
pub fn tri(m: i64) -> i64 {
    m * (m + 1) / 2
}

/// Largest `m >= 0` with `T(m) <= n`.
pub fn tri_root(n: i64) -> i64 {
    let mut m = 0;
    while tri(m + 1) <= n {
        m += 1;
    }
    m
}

/// `q^q a^a b^b d^d z^z`.
///
/// The derived ordering is lexicographic on `(q, a, b, d, z)`, which is the
/// canonical term order used for serialization and for reporting the first
/// differing monomial.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub struct Monomial {
    pub q: i64,
    pub a: u32,
    pub b: u32,
    pub d: u32,
    pub z: i64,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { q: 0, a: 0, b: 0, d: 0, z: 0 };

    pub const fn q(n: i64) -> Self {
        Monomial { q: n, a: 0, b: 0, d: 0, z: 0 }
    }

    pub const fn with_q(mut self, n: i64) -> Self {
        self.q = n;
        self
    }

    pub const fn with_a(mut self, i: u32) -> Self {
        self.a = i;
        self
    }

    pub const fn with_b(mut self, j: u32) -> Self {
        self.b = j;
        self
    }

    pub const fn with_d(mut self, k: u32) -> Self {
        self.d = k;
        self
    }

    pub const fn with_z(mut self, m: i64) -> Self {
        self.z = m;
        self
    }

    pub fn times(&self, other: &Monomial) -> Monomial {
        Monomial {
            q: self.q + other.q,
            a: self.a + other.a,
            b: self.b + other.b,
            d: self.d + other.d,
            z: self.z + other.z,
        }
    }

    pub fn pow(&self, e: u32) -> Monomial {
        let e64 = i64::from(e);
        Monomial {
            q: self.q * e64,
            a: self.a * e,
            b: self.b * e,
            d: self.d * e,
            z: self.z * e64,
        }
    }

    pub fn is_one(&self) -> bool {
        *self == Monomial::ONE
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        let mut factor = |f: &mut fmt::Formatter<'_>, var: &str, e: i64| -> fmt::Result {
            if e == 0 {
                return Ok(());
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                f.write_str(var)
            } else {
                write!(f, "{var}^{e}")
            }
        };
        factor(f, "a", i64::from(self.a))?;
        factor(f, "b", i64::from(self.b))?;
        factor(f, "d", i64::from(self.d))?;
        factor(f, "z", self.z)?;
        factor(f, "q", self.q)
    }
}

/// Tracked range of `z` exponents for Laurent-mode series.
///
/// With `prune` set, a term `q^n z^m` with `m > 0` is also dropped when
/// `n + T(m)` exceeds the q bound: a surplus `z^m` can only be cancelled by
/// `m` factors of the `(-q/z)_inf` kind, which cost at least `q^T(m)`.
/// Negative powers are never pruned beyond the window itself, because they
/// can be cancelled by `z`-powers at no `q`-cost (for example from
/// `1/(z)_inf`). The window and the prune are exact for the `z^0`
/// coefficient of any product whose negative `z`-powers come from
/// `(-q/z)_inf` or from the Jacobi triple product sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZWindow {
    pub min: i64,
    pub max: i64,
    pub prune: bool,
}

impl ZWindow {
    /// Window `[-M, M]` with pruning, `M` the largest `m` with `T(m) <= q_bound`.
    pub fn for_constant_term(q_bound: i64) -> Self {
        let m = tri_root(q_bound.max(0));
        ZWindow { min: -m, max: m, prune: true }
    }

    pub fn without_prune(self) -> Self {
        ZWindow { prune: false, ..self }
    }

    fn meet(&self, other: &ZWindow) -> ZWindow {
        ZWindow {
            min: self.min.max(other.min),
            max: self.max.min(other.max),
            prune: self.prune || other.prune,
        }
    }
}

/// Truncation bounds: `n_q <= q`, `k_d <= d` (when set), `z` within the window
/// (when set; otherwise only `z^0` terms are allowed).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub q: i64,
    pub d: Option<u32>,
    pub z: Option<ZWindow>,
}

impl Bounds {
    pub fn new(q_bound: i64) -> Self {
        Bounds { q: q_bound, d: None, z: None }
    }

    pub fn with_d(self, d_bound: u32) -> Self {
        Bounds { d: Some(d_bound), ..self }
    }

    pub fn with_d_opt(self, d_bound: Option<u32>) -> Self {
        Bounds { d: d_bound, ..self }
    }

    pub fn with_z(self, window: ZWindow) -> Self {
        Bounds { z: Some(window), ..self }
    }

    pub fn with_q(self, q_bound: i64) -> Self {
        Bounds { q: q_bound, ..self }
    }

    pub fn standard(self) -> Self {
        Bounds { z: None, ..self }
    }

    /// Componentwise minimum.
    pub fn meet(&self, other: &Bounds) -> Bounds {
        let d = match (self.d, other.d) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (x, None) => x,
            (None, y) => y,
        };
        let z = match (&self.z, &other.z) {
            (Some(x), Some(y)) => Some(x.meet(y)),
            (Some(x), None) => Some(*x),
            (None, Some(y)) => Some(*y),
            (None, None) => None,
        };
        Bounds { q: self.q.min(other.q), d, z }
    }

    pub fn admits(&self, m: &Monomial) -> bool {
        if m.q > self.q {
            return false;
        }
        if let Some(k) = self.d {
            if m.d > k {
                return false;
            }
        }
        match &self.z {
            None => m.z == 0,
            Some(w) => {
                if m.z < w.min || m.z > w.max {
                    return false;
                }
                !(w.prune && m.z > 0 && m.q + tri(m.z) > self.q)
            }
        }
    }

    /// True when every term admitted by `self` within `(n, k)` is also
    /// admitted here, i.e. these bounds are at least as wide as `(n, k)`.
    fn covers(&self, n: i64, k: Option<u32>) -> bool {
        if self.q < n {
            return false;
        }
        match (self.d, k) {
            (Some(mine), Some(want)) => mine >= want,
            (Some(_), None) => false,
            (None, _) => true,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("coefficient of q^{requested} requested but the series is only known to q^{q_bound}")]
    OutOfBounds { requested: i64, q_bound: i64 },
    #[error("comparison to (q^{n}, d^{k:?}) needs bounds at least that wide; got (q^{q_bound}, d^{d_bound:?})")]
    InsufficientBounds {
        n: i64,
        k: Option<u32>,
        q_bound: i64,
        d_bound: Option<u32>,
    },
    #[error("dilation sends {monomial} to a negative q-exponent {exponent}")]
    NegativeDilation { monomial: Monomial, exponent: i64 },
    #[error("setting d = 1 needs an unbounded d-degree; this series is cut at d^{0}")]
    DTruncated(u32),
    #[error("dilation is only defined for standard (non-Laurent) series")]
    LaurentDilation,
    #[error("malformed series: {0}")]
    Malformed(String),
}

/// Polynomial in `a, b, d`: `(i, j, k) -> coefficient`.
pub type AbdPoly = BTreeMap<(u32, u32, u32), BigInt>;

/// Sparse exact truncated power series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    terms: BTreeMap<Monomial, BigInt>,
    bounds: Bounds,
}

impl Series {
    pub fn zero(bounds: Bounds) -> Self {
        Series { terms: BTreeMap::new(), bounds }
    }

    pub fn one(bounds: Bounds) -> Self {
        Self::monomial(Monomial::ONE, BigInt::one(), bounds)
    }

    pub fn monomial(m: Monomial, c: impl Into<BigInt>, bounds: Bounds) -> Self {
        Self::from_terms([(m, c.into())], bounds)
    }

    /// Builds a series from arbitrary terms: like monomials are summed, and
    /// zero or out-of-bounds terms are dropped.
    pub fn from_terms<I>(terms: I, bounds: Bounds) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigInt)>,
    {
        let mut map: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m, c) in terms {
            if bounds.admits(&m) {
                *map.entry(m).or_insert_with(BigInt::zero) += c;
            }
        }
        map.retain(|_, c| !c.is_zero());
        Series { terms: map, bounds }
    }

    pub fn bounds(&self) -> Bounds {
        self.bounds
    }

    pub fn q_bound(&self) -> i64 {
        self.bounds.q
    }

    pub fn d_bound(&self) -> Option<u32> {
        self.bounds.d
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Re-truncates to bounds no wider than the current ones.
    pub fn truncate(&self, bounds: Bounds) -> Series {
        let bounds = self.bounds.meet(&bounds);
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| bounds.admits(m))
            .map(|(m, c)| (*m, c.clone()))
            .collect();
        Series { terms, bounds }
    }

    pub fn add(&self, other: &Series) -> Series {
        let bounds = self.bounds.meet(&other.bounds);
        let mut terms: BTreeMap<Monomial, BigInt> = self
            .terms
            .iter()
            .filter(|(m, _)| bounds.admits(m))
            .map(|(m, c)| (*m, c.clone()))
            .collect();
        for (m, c) in other.terms.iter().filter(|(m, _)| bounds.admits(m)) {
            let slot = terms.entry(*m).or_insert_with(BigInt::zero);
            *slot += c;
            if slot.is_zero() {
                terms.remove(m);
            }
        }
        Series { terms, bounds }
    }

    pub fn neg(&self) -> Series {
        Series {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
            bounds: self.bounds,
        }
    }

    pub fn sub(&self, other: &Series) -> Series {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigInt) -> Series {
        if c.is_zero() {
            return Series::zero(self.bounds);
        }
        Series {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
            bounds: self.bounds,
        }
    }

    /// Multiplies by `c * m`, keeping the current bounds.
    pub fn shift(&self, m: &Monomial, c: &BigInt) -> Series {
        if c.is_zero() {
            return Series::zero(self.bounds);
        }
        let terms = self
            .terms
            .iter()
            .map(|(t, x)| (t.times(m), x * c))
            .filter(|(t, _)| self.bounds.admits(t))
            .collect();
        Series { terms, bounds: self.bounds }
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Series) -> Series {
        let bounds = self.bounds.meet(&other.bounds);
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        if small.is_empty() {
            return Series::zero(bounds);
        }
        let large_terms: Vec<(&Monomial, &BigInt)> = large.terms.iter().collect();
        if let Some(terms) = mul_fast(small, &large_terms, &bounds) {
            return Series { terms, bounds };
        }
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (m1, c1) in &small.terms {
            for (m2, c2) in &large_terms {
                if m1.q + m2.q > bounds.q {
                    break;
                }
                let m = m1.times(m2);
                if bounds.admits(&m) {
                    *acc.entry(m).or_insert_with(BigInt::zero) += c1 * *c2;
                }
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Series { terms, bounds }
    }

    pub fn product<'a, I: IntoIterator<Item = &'a Series>>(factors: I, bounds: Bounds) -> Series {
        factors.into_iter().fold(Series::one(bounds), |acc, f| acc.mul(f))
    }

    /// The full `a, b, d`-polynomial multiplying `q^n` (at `z^0`).
    pub fn coefficient(&self, n: i64) -> Result<AbdPoly, SeriesError> {
        if n > self.bounds.q {
            return Err(SeriesError::OutOfBounds { requested: n, q_bound: self.bounds.q });
        }
        let lo = Monomial { q: n, a: 0, b: 0, d: 0, z: i64::MIN };
        let hi = Monomial { q: n, a: u32::MAX, b: u32::MAX, d: u32::MAX, z: i64::MAX };
        Ok(self
            .terms
            .range(lo..=hi)
            .filter(|(m, _)| m.z == 0)
            .map(|(m, c)| ((m.a, m.b, m.d), c.clone()))
            .collect())
    }

    /// Sum of all coefficients of `q^n` (the refined counts added up).
    pub fn coefficient_total(&self, n: i64) -> Result<BigInt, SeriesError> {
        Ok(self.coefficient(n)?.values().sum())
    }

    /// The coefficient of `z^m`, as a standard series.
    pub fn z_coefficient(&self, m: i64) -> Series {
        let bounds = self.bounds.standard();
        let terms = self
            .terms
            .iter()
            .filter(|(t, _)| t.z == m)
            .map(|(t, c)| (t.with_z(0), c.clone()))
            .collect();
        Series { terms, bounds }
    }

    /// Specializes `d = 0`.
    pub fn at_d_zero(&self) -> Series {
        let bounds = Bounds { d: None, ..self.bounds };
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.d == 0)
            .map(|(m, c)| (*m, c.clone()))
            .collect();
        Series { terms, bounds }
    }

    /// Specializes `d = 1`. Only meaningful when no `d`-power was truncated.
    pub fn at_d_one(&self) -> Result<Series, SeriesError> {
        if let Some(k) = self.bounds.d {
            return Err(SeriesError::DTruncated(k));
        }
        Ok(Series::from_terms(
            self.terms.iter().map(|(m, c)| (m.with_d(0), c.clone())),
            self.bounds,
        ))
    }

    /// Exact comparison of every term with `n_q <= n` and `k_d <= k`.
    pub fn equal_up_to(
        &self,
        other: &Series,
        n: i64,
        k: Option<u32>,
    ) -> Result<Comparison, SeriesError> {
        for s in [self, other] {
            if !s.bounds.covers(n, k) {
                return Err(SeriesError::InsufficientBounds {
                    n,
                    k,
                    q_bound: s.bounds.q,
                    d_bound: s.bounds.d,
                });
            }
        }
        let within = |m: &Monomial| m.q <= n && k.is_none_or(|k| m.d <= k);
        let mut left = self.terms.iter().filter(|(m, _)| within(m)).peekable();
        let mut right = other.terms.iter().filter(|(m, _)| within(m)).peekable();
        loop {
            match (left.peek(), right.peek()) {
                (None, None) => return Ok(Comparison::Equal),
                (Some((m, c)), None) => return Ok(Comparison::differ(**m, (*c).clone(), BigInt::zero())),
                (None, Some((m, c))) => return Ok(Comparison::differ(**m, BigInt::zero(), (*c).clone())),
                (Some((ml, cl)), Some((mr, cr))) => match ml.cmp(mr) {
                    Ordering::Less => return Ok(Comparison::differ(**ml, (*cl).clone(), BigInt::zero())),
                    Ordering::Greater => {
                        return Ok(Comparison::differ(**mr, BigInt::zero(), (*cr).clone()))
                    }
                    Ordering::Equal => {
                        if cl != cr {
                            return Ok(Comparison::differ(**ml, (*cl).clone(), (*cr).clone()));
                        }
                        left.next();
                        right.next();
                    }
                },
            }
        }
    }

    /// Remaps `q`-exponents by an integer-linear rule.
    ///
    /// `floor` states a lower bound on the weight of every term of the
    /// *untruncated* series; it determines the horizon up to which the
    /// dilated series is complete, and the result is truncated there.
    pub fn dilate(&self, rule: &DilationRule, floor: &WeightFloor) -> Result<Series, SeriesError> {
        if self.bounds.z.is_some() {
            return Err(SeriesError::LaurentDilation);
        }
        let mut out = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let n = rule.apply(m);
            if n < 0 {
                return Err(SeriesError::NegativeDilation { monomial: *m, exponent: n });
            }
            out.push((m.with_q(n), c.clone()));
        }
        let horizon = rule.horizon(self.bounds.q, floor);
        Ok(Series::from_terms(out, Bounds { q: horizon, ..self.bounds }))
    }

    pub fn to_json(&self) -> SeriesJson {
        SeriesJson {
            q_bound: self.bounds.q,
            d_bound: self.bounds.d,
            z_window: self.bounds.z,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermJson { q: m.q, a: m.a, b: m.b, d: m.d, z: m.z, c: c.to_string() })
                .collect(),
        }
    }

    pub fn from_json(json: &SeriesJson) -> Result<Series, SeriesError> {
        let bounds = Bounds { q: json.q_bound, d: json.d_bound, z: json.z_window };
        let mut terms = BTreeMap::new();
        let mut prev: Option<Monomial> = None;
        for t in &json.terms {
            let m = Monomial { q: t.q, a: t.a, b: t.b, d: t.d, z: t.z };
            if prev.is_some_and(|p| p >= m) {
                return Err(SeriesError::Malformed(format!("terms not in canonical order at {m}")));
            }
            prev = Some(m);
            if !bounds.admits(&m) {
                return Err(SeriesError::Malformed(format!("term {m} outside the stated bounds")));
            }
            let c: BigInt = t
                .c
                .parse()
                .map_err(|_| SeriesError::Malformed(format!("bad coefficient {:?}", t.c)))?;
            if c.is_zero() {
                return Err(SeriesError::Malformed(format!("explicit zero coefficient at {m}")));
            }
            terms.insert(m, c);
        }
        Ok(Series { terms, bounds })
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            f.write_str("0")?;
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if idx == 0 {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        write!(f, " + O(q^{})", self.bounds.q + 1)
    }
}

/// Product of two series with small coefficients in `i128`; `None` when any
/// coefficient or partial sum leaves that range.
fn mul_fast(
    small: &Series,
    large: &[(&Monomial, &BigInt)],
    bounds: &Bounds,
) -> Option<BTreeMap<Monomial, BigInt>> {
    let lhs: Vec<(Monomial, i128)> = small
        .terms
        .iter()
        .map(|(m, c)| c.to_i64().map(|c| (*m, i128::from(c))))
        .collect::<Option<_>>()?;
    let rhs: Vec<(Monomial, i128)> = large
        .iter()
        .map(|(m, c)| c.to_i64().map(|c| (**m, i128::from(c))))
        .collect::<Option<_>>()?;
    let mut acc: HashMap<Monomial, i128> = HashMap::new();
    for (m1, c1) in &lhs {
        for (m2, c2) in &rhs {
            if m1.q + m2.q > bounds.q {
                break;
            }
            let m = m1.times(m2);
            if bounds.admits(&m) {
                let slot = acc.entry(m).or_insert(0);
                *slot = slot.checked_add(c1 * c2)?;
            }
        }
    }
    Some(acc.into_iter().filter(|(_, c)| *c != 0).map(|(m, c)| (m, BigInt::from(c))).collect())
}

/// Outcome of [`Series::equal_up_to`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Comparison {
    Equal,
    /// The lexicographically smallest monomial where the two sides differ.
    Differ { monomial: Monomial, left: BigInt, right: BigInt },
}

impl Comparison {
    fn differ(monomial: Monomial, left: BigInt, right: BigInt) -> Self {
        Comparison::Differ { monomial, left, right }
    }

    pub fn is_equal(&self) -> bool {
        matches!(self, Comparison::Equal)
    }
}

/// `n' = q_scale*n + a_shift*i + b_shift*j + d_shift*k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DilationRule {
    pub q_scale: i64,
    pub a_shift: i64,
    pub b_shift: i64,
    pub d_shift: i64,
}

impl DilationRule {
    /// `q -> q^3, a -> a q^-2, b -> b q^-4`.
    pub const MOD3: DilationRule = DilationRule { q_scale: 3, a_shift: -2, b_shift: -4, d_shift: 0 };
    /// `q -> q^4, a -> a q, b -> b q^-2`.
    pub const MOD4: DilationRule = DilationRule { q_scale: 4, a_shift: 1, b_shift: -2, d_shift: 0 };

    pub fn apply(&self, m: &Monomial) -> i64 {
        self.q_scale * m.q
            + self.a_shift * i64::from(m.a)
            + self.b_shift * i64::from(m.b)
            + self.d_shift * i64::from(m.d)
    }

    /// Largest `H` such that every term of the untruncated input with
    /// `n > q_bound` lands above `H`. Returns `-1` when nothing is certain.
    pub fn horizon(&self, q_bound: i64, floor: &WeightFloor) -> i64 {
        // n' >= n * f on the cone n >= per_a*i + per_b*j + per_d*k; the
        // minimum of the linear form over that cone sits at a vertex.
        let mut best = (self.q_scale, 1i64);
        for (shift, cost) in [
            (self.a_shift, floor.per_a),
            (self.b_shift, floor.per_b),
            (self.d_shift, floor.per_d),
        ] {
            if shift >= 0 {
                continue;
            }
            if cost <= 0 {
                return -1;
            }
            let cand = (self.q_scale * cost + shift, cost);
            if cand.0 * best.1 < best.0 * cand.1 {
                best = cand;
            }
        }
        let (num, den) = best;
        if num <= 0 {
            return -1;
        }
        ((q_bound + 1) * num + den - 1).div_euclid(den) - 1
    }
}

/// Every term `q^n a^i b^j d^k` of a series satisfies
/// `n >= per_a*i + per_b*j + per_d*k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct WeightFloor {
    pub per_a: i64,
    pub per_b: i64,
    pub per_d: i64,
}

/// Wire form: terms sorted in canonical monomial order, coefficients as
/// decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub q_bound: i64,
    pub d_bound: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z_window: Option<ZWindow>,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub q: i64,
    pub a: u32,
    pub b: u32,
    pub d: u32,
    pub z: i64,
    pub c: String,
}
