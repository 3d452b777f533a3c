//! Builders for the closed-form sides: q-Pochhammer products and their
//! inverses, the Jacobi triple product, the infinite products, the single and
//! double sums with a generalized staircase, the quadruple sums, and the
//! constant-term expression. Also a small suite of classical q-series lemmas
//! checked on concrete instances.
//!
//! Every summation is cut off by an explicit inequality on the smallest
//! `q`-exponent a summand can still contribute within the requested
//! `d`-degree, documented on each builder.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;
use thiserror::Error;

use crate::series::{tri, tri_root, Bounds, Monomial, Series, ZWindow};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FactoryError {
    #[error("cannot invert a product whose constant factor is not 1: prefactor {0}")]
    NonUnit(Monomial),
    #[error("inverse of (1 - {0}) does not terminate under the given bounds")]
    NotTruncatable(Monomial),
    #[error("unknown builder id {0:?}")]
    UnknownId(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PochLength {
    Finite(u32),
    Infinite,
}

/// `(c; q^step)_length` with `c = sign * prefactor`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PochSpec {
    pub sign: i8,
    pub prefactor: Monomial,
    pub step: u32,
    pub length: PochLength,
}

impl PochSpec {
    pub fn new(sign: i8, prefactor: Monomial, step: u32, length: PochLength) -> Self {
        assert!(sign == 1 || sign == -1, "sign must be +1 or -1");
        assert!(step >= 1, "step must be positive");
        PochSpec { sign, prefactor, step, length }
    }

    /// `(c; q^step)_inf`.
    pub fn infinite(sign: i8, prefactor: Monomial, step: u32) -> Self {
        Self::new(sign, prefactor, step, PochLength::Infinite)
    }

    /// `(c; q)_n`.
    pub fn finite(sign: i8, prefactor: Monomial, n: u32) -> Self {
        Self::new(sign, prefactor, 1, PochLength::Finite(n))
    }

    /// Factor monomials `c q^{step k}` (without the sign) that can still
    /// affect a series under `bounds`.
    fn factor_monomials(&self, bounds: &Bounds) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut k = 0u32;
        loop {
            if let PochLength::Finite(n) = self.length {
                if k >= n {
                    break;
                }
            }
            let m = self.prefactor.with_q(self.prefactor.q + i64::from(self.step) * i64::from(k));
            if m.q > bounds.q {
                // Exponents only grow from here; the remaining factors are 1.
                break;
            }
            out.push(m);
            k += 1;
        }
        out
    }
}

/// `s * (1 + c m)`.
fn mul_binomial(s: &Series, m: &Monomial, c: &BigInt) -> Series {
    s.add(&s.shift(m, c))
}

/// `s / (1 - c m)` by summing the geometric series until it leaves the bounds.
fn div_binomial(s: &Series, m: &Monomial, c: &BigInt) -> Series {
    let mut out = s.clone();
    let mut term = s.clone();
    loop {
        term = term.shift(m, c);
        if term.is_empty() {
            return out;
        }
        out = out.add(&term);
    }
}

fn terminates(m: &Monomial, bounds: &Bounds) -> bool {
    m.q > 0
        || (m.q == 0 && m.d > 0 && bounds.d.is_some())
        || (m.q == 0 && m.z != 0 && bounds.z.is_some())
}

pub fn poch(spec: &PochSpec, bounds: Bounds) -> Series {
    let minus_c = BigInt::from(-i32::from(spec.sign));
    spec.factor_monomials(&bounds)
        .iter()
        .fold(Series::one(bounds), |acc, m| mul_binomial(&acc, m, &minus_c))
}

pub fn inv_poch(spec: &PochSpec, bounds: Bounds) -> Result<Series, FactoryError> {
    let c = BigInt::from(spec.sign);
    let factors = spec.factor_monomials(&bounds);
    for m in &factors {
        if m.is_one() {
            return Err(FactoryError::NonUnit(spec.prefactor));
        }
        if !terminates(m, &bounds) {
            return Err(FactoryError::NotTruncatable(*m));
        }
    }
    Ok(factors.iter().fold(Series::one(bounds), |acc, m| div_binomial(&acc, m, &c)))
}

fn q_mono(n: i64) -> Monomial {
    Monomial::q(n)
}

/// Jacobi triple product, sum side: `sum_n z^{-n} q^{T(n)}`.
pub fn jtp(bounds: Bounds) -> Series {
    let reach = tri_root(bounds.q.max(0)) + 1;
    Series::from_terms(
        (-reach..=reach).map(|n| (Monomial::q(tri(n)).with_z(-n), BigInt::one())),
        bounds,
    )
}

/// Jacobi triple product, product side: `(-q/z)_inf (-z)_inf (q)_inf`.
pub fn jtp_product(bounds: Bounds) -> Series {
    let factors = [
        poch(&PochSpec::infinite(-1, Monomial::q(1).with_z(-1), 1), bounds),
        poch(&PochSpec::infinite(-1, Monomial::ONE.with_z(1), 1), bounds),
        poch(&PochSpec::infinite(1, Monomial::q(1), 1), bounds),
    ];
    Series::product(&factors, bounds)
}

macro_rules! id_enum {
    ($(#[$meta:meta])* $name:ident { $($variant:ident => $text:literal),+ $(,)? }) => {
        $(#[$meta])*
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum $name { $($variant),+ }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$variant),+];

            pub fn as_str(&self) -> &'static str {
                match self { $($name::$variant => $text),+ }
            }
        }

        impl FromStr for $name {
            type Err = FactoryError;
            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s {
                    $($text => Ok($name::$variant),)+
                    _ => Err(FactoryError::UnknownId(s.to_string())),
                }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.as_str())
            }
        }
    };
}

id_enum! {
    /// Infinite products.
    ProductId { Aag => "aag", Thm18 => "thm18", Thm19 => "thm19", Thm110 => "thm110" }
}

id_enum! {
    /// Sums with a generalized staircase factor.
    SumId { Thm15 => "thm15", Thm16 => "thm16", Thm17 => "thm17", Eq51 => "eq51", Eq52 => "eq52" }
}

id_enum! {
    /// Quadruple sums over `(r, s, t, v)`.
    QuadId { Contributions => "contributions", C1 => "c1", C2 => "c2", C3 => "c3" }
}

fn neg_q(step: u32, start: Monomial) -> PochSpec {
    PochSpec::infinite(-1, start, step)
}

/// The named infinite product.
pub fn product_rhs(id: ProductId, bounds: Bounds) -> Series {
    let minus_q = poch(&neg_q(1, Monomial::q(1)), bounds);
    let minus_aq = || poch(&neg_q(1, Monomial::q(1).with_a(1)), bounds);
    let minus_bq = || poch(&neg_q(1, Monomial::q(1).with_b(1)), bounds);
    let inv_abq2 = || {
        inv_poch(&PochSpec::infinite(1, Monomial::q(1).with_a(1).with_b(1), 2), bounds)
            .expect("q-exponent 1 prefactor is invertible")
    };
    match id {
        ProductId::Aag => Series::product(
            &[
                minus_q,
                poch(&neg_q(2, Monomial::q(2).with_a(1)), bounds),
                poch(&neg_q(2, Monomial::q(2).with_b(1)), bounds),
            ],
            bounds,
        ),
        ProductId::Thm18 => Series::product(
            &[
                minus_q,
                minus_aq(),
                minus_bq(),
                inv_poch(&PochSpec::infinite(1, Monomial::q(1), 1), bounds)
                    .expect("q-exponent 1 prefactor is invertible"),
                inv_abq2(),
            ],
            bounds,
        ),
        ProductId::Thm19 => Series::product(
            &[minus_q, minus_aq(), poch(&neg_q(2, Monomial::q(2).with_b(1)), bounds)],
            bounds,
        ),
        ProductId::Thm110 => {
            Series::product(&[minus_q, minus_aq(), minus_bq(), inv_abq2()], bounds)
        }
    }
}

/// Cached `q`/`d` building blocks, all truncated to one set of bounds.
struct Blocks {
    bounds: Bounds,
    /// `prod_{k=1}^{m} (d + q^k)`.
    stair: Vec<Series>,
    /// `1/(q;q)_m`.
    inv_q: Vec<Series>,
    /// `1/(q^2;q^2)_m`.
    inv_q2: Vec<Series>,
}

impl Blocks {
    fn new(bounds: Bounds) -> Self {
        let one = Series::one(bounds);
        Blocks { bounds, stair: vec![one.clone()], inv_q: vec![one.clone()], inv_q2: vec![one] }
    }

    fn stair(&mut self, m: usize) -> &Series {
        while self.stair.len() <= m {
            let k = self.stair.len() as i64;
            let prev = self.stair.last().expect("nonempty");
            let next = prev
                .shift(&Monomial::ONE.with_d(1), &BigInt::one())
                .add(&prev.shift(&q_mono(k), &BigInt::one()));
            self.stair.push(next);
        }
        &self.stair[m]
    }

    fn inv_q(&mut self, m: usize) -> &Series {
        while self.inv_q.len() <= m {
            let k = self.inv_q.len() as i64;
            let next = div_binomial(self.inv_q.last().expect("nonempty"), &q_mono(k), &BigInt::one());
            self.inv_q.push(next);
        }
        &self.inv_q[m]
    }

    fn inv_q2(&mut self, m: usize) -> &Series {
        while self.inv_q2.len() <= m {
            let k = self.inv_q2.len() as i64;
            let next =
                div_binomial(self.inv_q2.last().expect("nonempty"), &q_mono(2 * k), &BigInt::one());
            self.inv_q2.push(next);
        }
        &self.inv_q2[m]
    }

    /// Smallest `q`-exponent among terms of `stair(m)` with `d`-degree within bounds.
    fn stair_floor(&self, m: u32) -> i64 {
        let forced = self.bounds.d.map_or(0, |k| m.saturating_sub(k));
        tri(i64::from(forced))
    }
}

/// `q^e a^i b^j` times the product of `parts`, with the product itself
/// truncated at `q^{N-e}` first to keep intermediate sizes small.
fn placed(parts: &[&Series], e: i64, i: u32, j: u32, bounds: Bounds) -> Series {
    let local = bounds.with_q(bounds.q - e);
    let prod = parts.iter().fold(Series::one(local), |acc, p| acc.mul(&p.truncate(local)));
    let lifted = Series::from_terms(prod.terms().map(|(m, c)| (*m, c.clone())), bounds);
    lifted.shift(&Monomial::q(e).with_a(i).with_b(j), &BigInt::one())
}

/// Double sum `sum_{r,s} q^{((r-s)^2+r+s)/2} a^r b^s stair(r+s) / ((q^2;q^2)_r (q^2;q^2)_s)`.
///
/// Cutoff: `((r-s)^2+r+s)/2 + T(max(0, r+s-K)) <= N`.
fn double_stair_sum(bounds: Bounds) -> Series {
    let mut blocks = Blocks::new(bounds);
    let mut total = Series::zero(bounds);
    let n = bounds.q;
    // (r+s)/2 <= e <= N bounds r+s by 2N.
    let top = (2 * n).max(0) as u32;
    for r in 0..=top {
        for s in 0..=top - r {
            let diff = i64::from(r) - i64::from(s);
            let e = (diff * diff + i64::from(r + s)) / 2;
            if e + blocks.stair_floor(r + s) > n {
                continue;
            }
            let stair = blocks.stair(r as usize + s as usize).clone();
            let ir = blocks.inv_q2(r as usize).clone();
            let is = blocks.inv_q2(s as usize).clone();
            total = total.add(&placed(&[&stair, &ir, &is], e, r, s, bounds));
        }
    }
    total
}

/// Single sum `sum_r q^{T(r)} a^r stair(r) / (q^2;q^2)_r`.
///
/// Cutoff: `T(r) + T(max(0, r-K)) <= N`.
fn single_stair_sum(bounds: Bounds) -> Series {
    let mut blocks = Blocks::new(bounds);
    let mut total = Series::zero(bounds);
    let mut r = 0u32;
    while tri(i64::from(r)) <= bounds.q {
        let e = tri(i64::from(r));
        if e + blocks.stair_floor(r) <= bounds.q {
            let stair = blocks.stair(r as usize).clone();
            let inv = blocks.inv_q2(r as usize).clone();
            total = total.add(&placed(&[&stair, &inv], e, r, 0, bounds));
        }
        r += 1;
    }
    total
}

/// The named sum side. Requires no `d`-bound, though one keeps it finite
/// faster; without it the sums are cut only by their `q`-exponents.
pub fn sum_rhs(id: SumId, bounds: Bounds) -> Series {
    let minus_q = || poch(&neg_q(1, Monomial::q(1)), bounds);
    match id {
        SumId::Thm15 => {
            let inv_dq = inv_poch(&PochSpec::infinite(1, Monomial::q(1).with_d(1), 1), bounds)
                .expect("q-exponent 1 prefactor is invertible");
            Series::product(&[minus_q(), inv_dq, double_stair_sum(bounds)], bounds)
        }
        SumId::Thm16 => Series::product(
            &[minus_q(), poch(&neg_q(2, Monomial::q(2).with_b(1)), bounds), single_stair_sum(bounds)],
            bounds,
        ),
        SumId::Thm17 => minus_q().mul(&double_stair_sum(bounds)),
        SumId::Eq51 => single_stair_sum(bounds),
        SumId::Eq52 => double_stair_sum(bounds),
    }
}

/// One summand family of the quadruple sums: which staircase factor sits
/// on top of the base term `q^{T(r)+T(s)+v} a^{r+v} b^{s+v} / ((q)_r (q)_s (q)_t (q^2;q^2)_v)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum StairTerm {
    /// `q^{T(m)}`, no `d`.
    Full,
    /// `q^t stair(m)`.
    C1Shifted,
    /// `q^{m+1} stair(m)`.
    C1Inserted,
    /// `q^{T(m) - T(w)} stair(w)` with `w = r + v`.
    PartialA,
    /// `q^{T(m) - T(w)} stair(w)` with `w = r + s + 2v`.
    PartialAB,
}

fn quad_sum_terms(kinds: &[StairTerm], bounds: Bounds) -> Series {
    let mut blocks = Blocks::new(bounds);
    let mut total = Series::zero(bounds);
    let n = bounds.q;
    let tr = |x: u32| tri(i64::from(x));
    // Every summand has q-exponent at least T(r) + T(s) + v + (staircase part);
    // each staircase part is nonnegative, and for t we use the explicit floor.
    let mut r = 0u32;
    while tr(r) <= n {
        let mut s = 0u32;
        while tr(r) + tr(s) <= n {
            let mut v = 0u32;
            while tr(r) + tr(s) + i64::from(v) <= n {
                let base = tr(r) + tr(s) + i64::from(v);
                let mut t = 0u32;
                loop {
                    let m = r + s + t + 2 * v;
                    let mut any = false;
                    for kind in kinds {
                        let (extra, w) = match kind {
                            StairTerm::Full => (tr(m), None),
                            StairTerm::C1Shifted => (i64::from(t), Some(m)),
                            StairTerm::C1Inserted => (i64::from(m) + 1, Some(m)),
                            StairTerm::PartialA => (tr(m) - tr(r + v), Some(r + v)),
                            StairTerm::PartialAB => (tr(m) - tr(r + s + 2 * v), Some(r + s + 2 * v)),
                        };
                        let floor = w.map_or(0, |w| blocks.stair_floor(w));
                        let e = base + extra;
                        if e + floor > n {
                            continue;
                        }
                        any = true;
                        let ir = blocks.inv_q(r as usize).clone();
                        let is = blocks.inv_q(s as usize).clone();
                        let it = blocks.inv_q(t as usize).clone();
                        let iv = blocks.inv_q2(v as usize).clone();
                        let piece = match w {
                            Some(w) => {
                                let st = blocks.stair(w as usize).clone();
                                placed(&[&st, &ir, &is, &it, &iv], e, r + v, s + v, bounds)
                            }
                            None => placed(&[&ir, &is, &it, &iv], e, r + v, s + v, bounds),
                        };
                        total = total.add(&piece);
                    }
                    // Every exponent above is nondecreasing in t.
                    if !any {
                        break;
                    }
                    t += 1;
                }
                v += 1;
            }
            s += 1;
        }
        r += 1;
    }
    total
}

/// The named quadruple sum.
///
/// Cutoff per summand: base exponent plus the staircase exponent plus
/// `T(max(0, w-K))` for a generalized staircase over `w` parts must be `<= N`.
pub fn quad_sum(id: QuadId, bounds: Bounds) -> Series {
    let kinds: &[StairTerm] = match id {
        QuadId::Contributions => &[StairTerm::Full],
        QuadId::C1 => &[StairTerm::C1Shifted, StairTerm::C1Inserted],
        QuadId::C2 => &[StairTerm::PartialA],
        QuadId::C3 => &[StairTerm::PartialAB],
    };
    quad_sum_terms(kinds, bounds)
}

/// The two cases of the `c1` quadruple sum separately: `(q^t ..., q^{m+1} ...)`.
pub fn quad_sum_c1_cases(bounds: Bounds) -> (Series, Series) {
    (
        quad_sum_terms(&[StairTerm::C1Shifted], bounds),
        quad_sum_terms(&[StairTerm::C1Inserted], bounds),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ConstantTermRoute {
    /// `sum_n q^{T(n)} [z^n] F(z)`, with `F` the part free of negative `z`-powers.
    #[default]
    Taylor,
    /// Full Laurent product, then `[z^0]`.
    Laurent,
}

/// `(-azq)_inf (-bzq)_inf / ((z)_inf (abz^2q;q^2)_inf)` under `bounds`.
fn constant_term_kernel(bounds: Bounds) -> Series {
    let z = Monomial::ONE.with_z(1);
    let num = Series::product(
        &[
            poch(&neg_q(1, z.with_q(1).with_a(1)), bounds),
            poch(&neg_q(1, z.with_q(1).with_b(1)), bounds),
        ],
        bounds,
    );
    let den1 = inv_poch(&PochSpec::infinite(1, z, 1), bounds).expect("z is tracked by the window");
    let den2 = inv_poch(&PochSpec::infinite(1, Monomial::q(1).with_a(1).with_b(1).with_z(2), 2), bounds)
        .expect("q-exponent 1 prefactor is invertible");
    Series::product(&[num, den1, den2], bounds)
}

/// `[z^0] (-q/z)_inf (-z)_inf (q)_inf F(z)`.
pub fn constant_term_lhs(bounds: Bounds, route: ConstantTermRoute) -> Series {
    let out_bounds = bounds.standard();
    match route {
        ConstantTermRoute::Taylor => {
            let m = tri_root(bounds.q.max(0));
            let window = ZWindow { min: 0, max: m, prune: true };
            let f = constant_term_kernel(bounds.with_z(window));
            let mut total = Series::zero(out_bounds);
            for n in 0..=m {
                let coeff = f.z_coefficient(n);
                total = total.add(&coeff.shift(&Monomial::q(tri(n)), &BigInt::one()));
            }
            total
        }
        ConstantTermRoute::Laurent => {
            let lb = bounds.with_z(ZWindow::for_constant_term(bounds.q));
            jtp_product(lb).mul(&constant_term_kernel(lb)).z_coefficient(0).truncate(out_bounds)
        }
    }
}

/// Same as the Laurent route but with a plain window and no pruning.
pub fn constant_term_lhs_unpruned(bounds: Bounds) -> Series {
    let lb = bounds.with_z(ZWindow::for_constant_term(bounds.q).without_prune());
    jtp_product(lb).mul(&constant_term_kernel(lb)).z_coefficient(0).truncate(bounds.standard())
}

/// Instance sizes for [`lemma_suite`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LemmaBounds {
    /// `0 <= k <= n <= reversal_n` for the finite-product reversal.
    pub reversal_n: u32,
    /// `n <= chu_n` and the `q`-bound for the terminating summation.
    pub chu_n: u32,
    pub chu_q: i64,
    /// `q`- and `d`-bounds for the binomial-type expansions.
    pub binomial_q: i64,
    pub binomial_d: u32,
    /// `q`-bound for the triple product.
    pub jtp_q: i64,
}

impl Default for LemmaBounds {
    fn default() -> Self {
        LemmaBounds { reversal_n: 12, chu_n: 8, chu_q: 20, binomial_q: 30, binomial_d: 8, jtp_q: 40 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaResult {
    pub name: &'static str,
    pub instances: usize,
    pub passed: bool,
    /// First failing instance, if any.
    pub failure: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub results: Vec<LemmaResult>,
}

impl LemmaReport {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }
}

fn lemma<I: IntoIterator<Item = (String, bool)>>(name: &'static str, checks: I) -> LemmaResult {
    let mut instances = 0;
    let mut failure = None;
    for (label, ok) in checks {
        instances += 1;
        if !ok && failure.is_none() {
            failure = Some(label);
        }
    }
    LemmaResult { name, instances, passed: failure.is_none(), failure }
}

fn signed(m: Monomial, sign: i64, bounds: Bounds) -> Series {
    Series::monomial(m, BigInt::from(sign), bounds)
}

/// `(q)_{n-k} (q^{-n})_k = (q)_n (-1)^k q^{C(k,2) - nk}`, as Laurent polynomials.
fn check_reversal(n: u32, k: u32) -> bool {
    let bounds = Bounds::new(tri(i64::from(n)) + 1);
    let lhs = poch(&PochSpec::finite(1, Monomial::q(1), n - k), bounds)
        .mul(&poch(&PochSpec::finite(1, Monomial::q(-i64::from(n)), k), bounds));
    let (n64, k64) = (i64::from(n), i64::from(k));
    let rhs = poch(&PochSpec::finite(1, Monomial::q(1), n), bounds).mul(&signed(
        Monomial::q(k64 * (k64 - 1) / 2 - n64 * k64),
        if k.is_multiple_of(2) { 1 } else { -1 },
        bounds,
    ));
    lhs == rhs
}

/// `sum_{k<=n} (a)_k (q^{-n})_k q^k / ((q)_k (c)_k) = (c/a)_n a^n / (c)_n`
/// at `a = sign q^alpha`, `c = q^gamma`.
fn check_chu(n: u32, sign: i8, alpha: i64, gamma: i64, q_bound: i64) -> bool {
    let n64 = i64::from(n);
    // Every negative power comes from (q^{-n})_k or (c/a)_n; working to this
    // depth keeps everything at or below q_bound exact.
    let depth = q_bound + n64 * n64 + 4 * n64 + 4;
    let b = Bounds::new(depth);
    let mut lhs = Series::zero(b);
    for k in 0..=n {
        let terms = [
            poch(&PochSpec::finite(sign, Monomial::q(alpha), k), b),
            poch(&PochSpec::finite(1, Monomial::q(-n64), k), b),
            Series::monomial(Monomial::q(i64::from(k)), 1, b),
            inv_poch(&PochSpec::finite(1, Monomial::q(1), k), b).expect("invertible"),
            inv_poch(&PochSpec::finite(1, Monomial::q(gamma), k), b).expect("invertible"),
        ];
        lhs = lhs.add(&Series::product(&terms, b));
    }
    // c/a = sign q^{gamma-alpha}; a^n = sign^n q^{alpha n}.
    let a_pow_sign = if sign < 0 && n % 2 == 1 { -1 } else { 1 };
    let rhs = Series::product(
        &[
            poch(&PochSpec::finite(sign, Monomial::q(gamma - alpha), n), b),
            signed(Monomial::q(alpha * n64), a_pow_sign, b),
            inv_poch(&PochSpec::finite(1, Monomial::q(gamma), n), b).expect("invertible"),
        ],
        b,
    );
    lhs.equal_up_to(&rhs, q_bound, None).map(|c| c.is_equal()).unwrap_or(false)
}

/// `sum_n z^n (-x)_n / (q)_n = (-xz)_inf / (z)_inf` at `z = d q^beta`, `x = q^beta`.
fn check_qbin2(beta: i64, bounds: Bounds) -> bool {
    let z = Monomial::q(beta).with_d(1);
    let x = Monomial::q(beta);
    let top = bounds.d.expect("d-bounded");
    let mut lhs = Series::zero(bounds);
    for n in 0..=top {
        let term = Series::product(
            &[
                Series::monomial(z.pow(n), 1, bounds),
                poch(&PochSpec::finite(-1, x, n), bounds),
                inv_poch(&PochSpec::finite(1, Monomial::q(1), n), bounds).expect("invertible"),
            ],
            bounds,
        );
        lhs = lhs.add(&term);
    }
    let rhs = poch(&PochSpec::infinite(-1, x.times(&z), 1), bounds)
        .mul(&inv_poch(&PochSpec::infinite(1, z, 1), bounds).expect("d-bounded"));
    lhs == rhs
}

/// `sum_n z^n q^{T(n)} / (q)_n = (-zq)_inf` at `z = d q^beta`.
fn check_qbin1(beta: i64, bounds: Bounds) -> bool {
    let z = Monomial::q(beta).with_d(1);
    let top = bounds.d.expect("d-bounded");
    let mut lhs = Series::zero(bounds);
    for n in 0..=top {
        let nn = i64::from(n);
        let term = inv_poch(&PochSpec::finite(1, Monomial::q(1), n), bounds)
            .expect("invertible")
            .shift(&z.pow(n).times(&Monomial::q(tri(nn))), &BigInt::one());
        lhs = lhs.add(&term);
    }
    lhs == poch(&PochSpec::infinite(-1, z.with_q(beta + 1), 1), bounds)
}

/// Triple product, sum against product, on a window wide enough that no
/// factor loses a term below the `q`-bound.
pub fn check_jtp(q_bound: i64) -> bool {
    let m = tri_root(q_bound.max(0));
    let bounds = Bounds::new(q_bound).with_z(ZWindow { min: -m, max: m + 1, prune: false });
    jtp(bounds) == jtp_product(bounds)
}

/// Concrete-instance checks of the classical identities used in the
/// constant-term derivation.
pub fn lemma_suite(lb: &LemmaBounds) -> LemmaReport {
    let mut results = Vec::new();
    results.push(lemma(
        "finite-product-reversal",
        (0..=lb.reversal_n).flat_map(|n| {
            (0..=n).map(move |k| (format!("n={n} k={k}"), check_reversal(n, k)))
        }),
    ));
    let mut chu = Vec::new();
    for n in 0..=lb.chu_n {
        for sign in [1i8, -1] {
            for alpha in 1..=4 {
                for gamma in 1..=4 {
                    let label = format!("n={n} a={}q^{alpha} c=q^{gamma}", if sign < 0 { "-" } else { "" });
                    chu.push((label, check_chu(n, sign, alpha, gamma, lb.chu_q)));
                }
            }
        }
    }
    results.push(lemma("terminating-chu-vandermonde", chu));
    let bb = Bounds::new(lb.binomial_q).with_d(lb.binomial_d);
    results.push(lemma(
        "q-binomial-theorem",
        (0..=3).map(|beta| (format!("beta={beta}"), check_qbin2(beta, bb))),
    ));
    results.push(lemma(
        "euler-distinct-parts",
        (0..=3).map(|beta| (format!("beta={beta}"), check_qbin1(beta, bb))),
    ));
    results.push(lemma(
        "jacobi-triple-product",
        [(format!("q_bound={}", lb.jtp_q), check_jtp(lb.jtp_q))],
    ));
    LemmaReport { results }
}
