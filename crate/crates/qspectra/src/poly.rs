//! Exact univariate polynomial arithmetic over the integers and rationals:
//! gcd, Yun squarefree decomposition, Sturm chains, root counting with
//! multiplicity, and root isolation by rational bisection.
//!
//! Every question about eigenvalues elsewhere in the crate reduces to sign
//! evaluations of these polynomials at exact rationals; no floating point.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Integer polynomial, coefficients ascending by degree, no trailing zeros.
/// The empty vector is the zero polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rat(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Sign of the value at `x`: -1, 0 or 1.
    pub fn sign_at(&self, x: &BigRational) -> i8 {
        sign_of_rat(&self.eval_rat(x))
    }

    /// Sign of the value as x -> +inf.
    pub fn sign_at_pos_inf(&self) -> i8 {
        sign_of_int(&self.leading())
    }

    /// Gcd of the coefficients, positive; 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = num_integer::gcd(g, c.abs());
        }
        g
    }

    /// Divide out the content; the sign of the leading coefficient is kept.
    pub fn primitive(&self) -> IntPoly {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        IntPoly::new(self.coeffs.iter().map(|k| k / &c).collect())
    }

    /// Primitive with positive leading coefficient.
    pub fn primitive_positive(&self) -> IntPoly {
        let p = self.primitive();
        if p.leading().is_negative() {
            IntPoly::new(p.coeffs.iter().map(|c| -c).collect())
        } else {
            p
        }
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    /// Exact deflation by a simple rational root `r`; panics if `r` is not a
    /// root (callers test first).
    pub fn deflate_root(&self, r: &BigRational) -> IntPoly {
        let rat = RatPoly::from_int(self);
        let divisor = RatPoly {
            coeffs: vec![-r.clone(), BigRational::one()],
        };
        let (q, rem) = rat.div_rem(&divisor);
        assert!(rem.is_zero(), "deflate_root: not a root");
        q.to_primitive_int()
    }

    /// Cauchy bound: all real roots lie strictly inside (-B, B).
    pub fn root_bound(&self) -> BigRational {
        let lead = self.leading().abs();
        let mut max = BigInt::zero();
        for c in &self.coeffs {
            let a = c.abs();
            if a > max {
                max = a;
            }
        }
        BigRational::one() + BigRational::new(max, lead)
    }
}

fn sign_of_int(x: &BigInt) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_negative() {
        -1
    } else {
        1
    }
}

fn sign_of_rat(x: &BigRational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_negative() {
        -1
    } else {
        1
    }
}

/// Rational polynomial used internally for remainder sequences.
#[derive(Debug, Clone)]
struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    fn from_int(p: &IntPoly) -> Self {
        RatPoly {
            coeffs: p
                .coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        }
    }

    fn normalize(mut self) -> Self {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn leading(&self) -> &BigRational {
        self.coeffs.last().expect("leading of zero polynomial")
    }

    fn derivative(&self) -> RatPoly {
        if self.coeffs.len() <= 1 {
            return RatPoly { coeffs: vec![] };
        }
        RatPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        }
    }

    /// Standard long division.
    fn div_rem(&self, divisor: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let mut rem = self.clone().normalize();
        let dd = divisor.degree();
        let qlen = rem.coeffs.len().saturating_sub(dd);
        let mut q = vec![BigRational::zero(); qlen];
        while !rem.is_zero() && rem.degree() >= dd {
            let shift = rem.degree() - dd;
            let factor = rem.leading() / divisor.leading();
            for (i, c) in divisor.coeffs.iter().enumerate() {
                let v = &rem.coeffs[shift + i] - &factor * c;
                rem.coeffs[shift + i] = v;
            }
            q[shift] = factor;
            rem = rem.normalize();
        }
        (RatPoly { coeffs: q }.normalize(), rem)
    }

    /// Clear denominators and content; positive scaling only, so signs of
    /// values are preserved everywhere.
    fn to_primitive_int(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = num_integer::lcm(lcm, c.denom().abs());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        IntPoly::new(ints).primitive()
    }
}

/// Polynomial gcd, returned primitive with positive leading coefficient.
pub fn poly_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut f = RatPoly::from_int(a);
    let mut g = RatPoly::from_int(b);
    if f.is_zero() {
        return b.primitive_positive();
    }
    while !g.is_zero() {
        let (_, r) = f.div_rem(&g);
        f = g;
        g = r;
    }
    f.to_primitive_int().primitive_positive()
}

/// Yun's algorithm: returns pairs `(factor, multiplicity)` with each factor
/// squarefree, primitive, positive-leading, pairwise coprime, and
/// `p = c * prod factor^multiplicity` for a constant `c`.
pub fn squarefree_decomposition(p: &IntPoly) -> Vec<(IntPoly, usize)> {
    if p.is_zero() || p.degree() == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let fp = p.derivative();
    let c0 = poly_gcd(p, &fp);
    if c0.degree() == 0 {
        out.push((p.primitive_positive(), 1));
        return out;
    }
    let mut w = RatPoly::from_int(p).div_rem(&RatPoly::from_int(&c0)).0;
    let mut y = RatPoly::from_int(&fp).div_rem(&RatPoly::from_int(&c0)).0;
    let mut z = sub(&y, &w.derivative());
    let mut mult = 1usize;
    while w.degree() > 0 {
        let g = poly_gcd(&w.to_primitive_int(), &z.to_primitive_int());
        if g.degree() > 0 {
            out.push((g.clone(), mult));
        }
        let gr = RatPoly::from_int(&g);
        w = w.div_rem(&gr).0;
        y = z.div_rem(&gr).0;
        z = sub(&y, &w.derivative());
        mult += 1;
    }
    out
}

fn sub(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let len = a.coeffs.len().max(b.coeffs.len());
    let mut coeffs = Vec::with_capacity(len);
    for i in 0..len {
        let av = a.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero);
        let bv = b.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero);
        coeffs.push(av - bv);
    }
    RatPoly { coeffs }.normalize()
}

/// Sturm chain of a squarefree polynomial, each member primitive (positive
/// scaling only, preserving signs).
pub fn sturm_chain(p: &IntPoly) -> Vec<IntPoly> {
    let mut chain = vec![p.primitive(), p.derivative().primitive()];
    if chain[1].is_zero() {
        chain.pop();
        return chain;
    }
    while chain.last().unwrap().degree() > 0 {
        let k = chain.len();
        let (_, r) = RatPoly::from_int(&chain[k - 2]).div_rem(&RatPoly::from_int(&chain[k - 1]));
        if r.is_zero() {
            break;
        }
        let cleared = r.to_primitive_int();
        chain.push(IntPoly::new(cleared.coeffs.iter().map(|c| -c).collect()));
    }
    chain
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for s in signs {
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

fn variations_at(chain: &[IntPoly], x: &BigRational) -> usize {
    variations(chain.iter().map(|p| p.sign_at(x)))
}

fn variations_at_pos_inf(chain: &[IntPoly]) -> usize {
    variations(chain.iter().map(|p| p.sign_at_pos_inf()))
}

/// Number of distinct real roots of the squarefree `p` in the open interval
/// `(theta, +inf)`; `theta` must not itself be a root.
fn distinct_roots_above(p: &IntPoly, theta: &BigRational) -> usize {
    debug_assert!(p.sign_at(theta) != 0);
    let chain = sturm_chain(p);
    variations_at(&chain, theta) - variations_at_pos_inf(&chain)
}

/// Number of real roots of `p` that are `>= theta`, counted with
/// multiplicity.
pub fn count_roots_geq(p: &IntPoly, theta: &BigRational) -> usize {
    let mut total = 0;
    for (factor, mult) in squarefree_decomposition(p) {
        let mut f = factor;
        if f.sign_at(theta) == 0 {
            total += mult; // theta itself, simple in the squarefree factor
            f = f.deflate_root(theta);
        }
        if f.degree() > 0 {
            total += mult * distinct_roots_above(&f, theta);
        }
    }
    total
}

/// Total number of real roots counted with multiplicity.
pub fn count_real_roots(p: &IntPoly) -> usize {
    if p.is_zero() || p.degree() == 0 {
        return 0;
    }
    let below = p.root_bound();
    count_roots_geq(p, &-below)
}

/// One isolated real root: either pinned exactly to a rational, or bracketed
/// by an interval `(lo, hi]` containing exactly this root of its squarefree
/// factor. The factor rides along so the bracket can be refined later.
#[derive(Debug, Clone)]
pub struct RootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
    pub multiplicity: usize,
    pub exact: Option<BigRational>,
    factor: IntPoly,
}

impl RootInterval {
    fn pinned(r: BigRational, multiplicity: usize) -> Self {
        RootInterval {
            lo: r.clone(),
            hi: r.clone(),
            multiplicity,
            exact: Some(r),
            factor: IntPoly::zero(),
        }
    }

    /// Shrink the bracket by Sturm bisection until `hi - lo <= width`.
    pub fn refine(&mut self, width: &BigRational) {
        if self.exact.is_some() {
            return;
        }
        let chain = sturm_chain(&self.factor);
        let two = BigRational::from_integer(2.into());
        while &self.hi - &self.lo > *width {
            let mid = (&self.lo + &self.hi) / &two;
            if self.factor.sign_at(&mid) == 0 {
                *self = RootInterval::pinned(mid, self.multiplicity);
                return;
            }
            if variations_at(&chain, &self.lo) - variations_at(&chain, &mid) >= 1 {
                self.hi = mid;
            } else {
                self.lo = mid;
            }
        }
    }

    /// `self`'s root provably precedes `other`'s. Brackets only ever hold
    /// irrational roots here, so endpoint ties cannot hide an equal root.
    fn precedes(&self, other: &RootInterval) -> bool {
        if self.exact.is_some() && other.exact.is_some() {
            return self.lo < other.lo;
        }
        self.hi <= other.lo
    }
}

/// Isolate all real roots of `p` with multiplicities, returned strictly
/// ascending with pairwise-disjoint brackets. Rational roots (necessarily
/// integers for monic integer input) come out exact.
pub fn isolate_real_roots(p: &IntPoly) -> Vec<RootInterval> {
    let mut found: Vec<RootInterval> = Vec::new();
    for (factor, mult) in squarefree_decomposition(p) {
        let mut f = factor;
        // peel rational roots first so integral spectra print exactly
        for r in rational_root_candidates(&f) {
            if f.degree() > 0 && f.sign_at(&r) == 0 {
                found.push(RootInterval::pinned(r.clone(), mult));
                f = f.deflate_root(&r);
            }
        }
        if f.degree() == 0 {
            continue;
        }
        // the remaining factor has no rational roots: bisection midpoints
        // can never hit one
        let bound = f.root_bound();
        let chain = sturm_chain(&f);
        let mut stack = vec![(-bound.clone(), bound.clone())];
        let two = BigRational::from_integer(2.into());
        while let Some((lo, hi)) = stack.pop() {
            let k = variations_at(&chain, &lo) - variations_at(&chain, &hi);
            if k == 0 {
                continue;
            }
            if k == 1 {
                found.push(RootInterval {
                    lo,
                    hi,
                    multiplicity: mult,
                    exact: None,
                    factor: f.clone(),
                });
                continue;
            }
            let mid = (&lo + &hi) / &two;
            debug_assert!(f.sign_at(&mid) != 0);
            stack.push((lo, mid.clone()));
            stack.push((mid, hi));
        }
    }
    // refine until the brackets are pairwise disjoint, which makes the
    // ascending sort meaningful; distinct real roots separate eventually
    let mut width = BigRational::new(BigInt::one(), BigInt::from(1 << 16));
    loop {
        for r in found.iter_mut() {
            r.refine(&width);
        }
        found.sort_by_key(|a| &a.lo + &a.hi);
        if found.len() <= 1 || found.windows(2).all(|w| w[0].precedes(&w[1])) {
            break;
        }
        width /= BigRational::from_integer(BigInt::from(1 << 8));
    }
    found
}

/// Candidate rational roots of a primitive integer polynomial: divisors of
/// the lowest nonzero coefficient over divisors of the leading one.
fn rational_root_candidates(f: &IntPoly) -> Vec<BigRational> {
    let mut cands = vec![BigRational::zero()];
    let constant = f
        .coeffs()
        .iter()
        .find(|c| !c.is_zero())
        .cloned()
        .unwrap_or_else(BigInt::zero);
    for p in divisors(&constant.abs()) {
        for q in divisors(&f.leading().abs()) {
            cands.push(BigRational::new(p.clone(), q.clone()));
            cands.push(BigRational::new(-p.clone(), q));
        }
    }
    cands.sort();
    cands.dedup();
    cands
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    if n.is_zero() {
        return out;
    }
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            out.push(d.clone());
            out.push(n / &d);
        }
        d += 1;
    }
    out
}
