//! Polynomial arithmetic over Z_{p^a} and the quotient rings Z_{p^a}[x]/(x^n - 1).
//!
//! Coefficients are stored in ascending degree order with no trailing zeros;
//! the zero polynomial has an empty coefficient vector and degree None.
//! Division requires a unit leading coefficient (which covers every divisor of
//! x^n - 1 that appears in chain presentations). Factorization of x^n - 1 works
//! over the residue field Z_p by trial division and is lifted to Z_{p^a} by
//! quadratic Hensel iteration; the lifted factorization is memoized per
//! (p, a, n) and shared behind an Arc.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::ringcore::{mul_mod, ModInt, RingSpec};
use crate::{Error, Result};

/// Polynomial over Z_{p^a}, canonical form: entries in [0, p^a), no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    coeffs: Vec<u64>,
    spec: RingSpec,
}

impl Poly {
    pub fn from_coeffs(spec: RingSpec, coeffs: Vec<u64>) -> Poly {
        let mut c: Vec<u64> = coeffs.into_iter().map(|x| spec.reduce(x)).collect();
        while c.last() == Some(&0) {
            c.pop();
        }
        Poly { coeffs: c, spec }
    }

    pub fn zero(spec: RingSpec) -> Poly {
        Poly { coeffs: Vec::new(), spec }
    }

    pub fn one(spec: RingSpec) -> Poly {
        Poly::from_coeffs(spec, vec![1])
    }

    pub fn x(spec: RingSpec) -> Poly {
        Poly::from_coeffs(spec, vec![0, 1])
    }

    pub fn constant(spec: RingSpec, c: u64) -> Poly {
        Poly::from_coeffs(spec, vec![c])
    }

    pub fn monomial(spec: RingSpec, c: u64, deg: usize) -> Poly {
        let mut coeffs = vec![0; deg + 1];
        coeffs[deg] = c;
        Poly::from_coeffs(spec, coeffs)
    }

    /// x^n - 1 for n >= 1. For n = 0 this returns 1: the quotient by it is the
    /// zero ring, which is the right model for an empty block.
    pub fn xn_minus_1(spec: RingSpec, n: usize) -> Poly {
        if n == 0 {
            return Poly::one(spec);
        }
        let mut coeffs = vec![0; n + 1];
        coeffs[0] = spec.modulus() - 1;
        coeffs[n] = 1;
        Poly::from_coeffs(spec, coeffs)
    }

    /// theta_m = 1 + x + ... + x^{m-1}; theta_0 = 0.
    pub fn theta(spec: RingSpec, m: usize) -> Poly {
        Poly::from_coeffs(spec, vec![1; m])
    }

    pub fn spec(&self) -> RingSpec {
        self.spec
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Degree with the convention deg(0) = -1, convenient for degree bounds.
    pub fn degree_i64(&self) -> i64 {
        self.degree().map(|d| d as i64).unwrap_or(-1)
    }

    pub fn leading_coeff(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff() == 1
    }

    fn assert_same(&self, other: &Poly, op: &str) {
        assert!(
            self.spec == other.spec,
            "ring mismatch: polynomial {op} over Z_{}^{} vs Z_{}^{}",
            self.spec.p(),
            self.spec.exponent(),
            other.spec.p(),
            other.spec.exponent()
        );
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.assert_same(other, "add");
        let m = self.spec.modulus();
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| (self.coeff(i) + other.coeff(i)) % m)
            .collect();
        Poly::from_coeffs(self.spec, coeffs)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.assert_same(other, "sub");
        let m = self.spec.modulus();
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| (self.coeff(i) + m - other.coeff(i)) % m)
            .collect();
        Poly::from_coeffs(self.spec, coeffs)
    }

    pub fn neg(&self) -> Poly {
        let m = self.spec.modulus();
        let coeffs = self.coeffs.iter().map(|&c| (m - c) % m).collect();
        Poly::from_coeffs(self.spec, coeffs)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.assert_same(other, "mul");
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.spec);
        }
        let m = self.spec.modulus();
        let mut coeffs = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = (coeffs[i + j] + mul_mod(a, b, m)) % m;
            }
        }
        Poly::from_coeffs(self.spec, coeffs)
    }

    pub fn scale(&self, c: u64) -> Poly {
        let m = self.spec.modulus();
        let c = c % m;
        let coeffs = self.coeffs.iter().map(|&a| mul_mod(a, c, m)).collect();
        Poly::from_coeffs(self.spec, coeffs)
    }

    /// Multiplication by x^k (no reduction).
    pub fn mul_xk(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        Poly { coeffs, spec: self.spec }
    }

    pub fn eval(&self, at: u64) -> ModInt {
        let m = self.spec.modulus();
        let at = at % m;
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = (mul_mod(acc, at, m) + c) % m;
        }
        self.spec.element(acc)
    }

    /// Euclidean division f = q*g + r with deg r < deg g. Requires g nonzero
    /// with unit leading coefficient.
    pub fn divmod(&self, g: &Poly) -> Result<(Poly, Poly)> {
        self.assert_same(g, "divmod");
        let dg = g.degree().ok_or_else(|| {
            Error::NonUnitLeadingCoeff("division by the zero polynomial".into())
        })?;
        let lc = self.spec.element(g.leading_coeff());
        let lc_inv = lc.inv().map_err(|_| {
            Error::NonUnitLeadingCoeff(format!(
                "leading coefficient {} is not a unit mod {}",
                lc.value(),
                self.spec.modulus()
            ))
        })?;
        let m = self.spec.modulus();
        let df = match self.degree() {
            Some(d) if d >= dg => d,
            _ => return Ok((Poly::zero(self.spec), self.clone())),
        };
        let mut rem = self.coeffs.clone();
        let mut q = vec![0u64; df - dg + 1];
        for k in (dg..=df).rev() {
            let c = mul_mod(rem[k], lc_inv.value(), m);
            if c == 0 {
                continue;
            }
            q[k - dg] = c;
            for (i, &gc) in g.coeffs.iter().enumerate() {
                let idx = k - dg + i;
                rem[idx] = (rem[idx] + m - mul_mod(c, gc, m)) % m;
            }
        }
        Ok((Poly::from_coeffs(self.spec, q), Poly::from_coeffs(self.spec, rem)))
    }

    /// Quotient when g divides self exactly, None otherwise.
    pub fn exact_quotient(&self, g: &Poly) -> Option<Poly> {
        match self.divmod(g) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    pub fn is_divisible_by(&self, g: &Poly) -> bool {
        self.exact_quotient(g).is_some()
    }

    /// Coefficient reversal x^{deg f} * f(1/x); reciprocal of 0 is 0.
    pub fn reciprocal(&self) -> Poly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Poly::from_coeffs(self.spec, coeffs)
    }

    /// Coefficient-wise reduction into Z_{p^k} for k <= a.
    pub fn reduce_to(&self, target: RingSpec) -> Poly {
        assert_eq!(self.spec.p(), target.p(), "ring mismatch: reduce_to different prime");
        assert!(
            target.exponent() <= self.spec.exponent(),
            "reduce_to must not raise the exponent"
        );
        Poly::from_coeffs(target, self.coeffs.clone())
    }

    /// Coefficient-wise embedding into Z_{p^k} for k >= a (identity on
    /// representatives).
    pub fn lift_to(&self, target: RingSpec) -> Poly {
        assert_eq!(self.spec.p(), target.p(), "ring mismatch: lift_to different prime");
        assert!(
            target.exponent() >= self.spec.exponent(),
            "lift_to must not lower the exponent"
        );
        Poly::from_coeffs(target, self.coeffs.clone())
    }

    /// Minimum p-valuation over all coefficients; exponent a for the zero
    /// polynomial. This is the valuation of the element in any Galois-ring
    /// quotient Z_{p^a}[x]/(basic irreducible) once reduced.
    pub fn min_coeff_valuation(&self) -> u32 {
        self.coeffs
            .iter()
            .map(|&c| crate::ringcore::p_valuation_in(c, self.spec.p(), self.spec.exponent()))
            .min()
            .unwrap_or(self.spec.exponent())
    }
}

impl std::fmt::Display for Poly {
    /// Machine text format: ascending coefficients, space separated; "0" for
    /// the zero polynomial.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Parses the ascending space-separated coefficient format ("3 1 1 1 1" is
/// 3 + x + x^2 + x^3 + x^4; "0" is the zero polynomial).
pub fn parse_poly(spec: RingSpec, text: &str) -> Result<Poly> {
    let mut coeffs = Vec::new();
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(Error::Parse { line: 0, msg: "empty polynomial text".into() });
    }
    for tok in trimmed.split_whitespace() {
        let c: u64 = tok.parse().map_err(|_| Error::Parse {
            line: 0,
            msg: format!("invalid coefficient {tok:?} (expected a non-negative integer)"),
        })?;
        coeffs.push(c);
    }
    Ok(Poly::from_coeffs(spec, coeffs))
}

/// The quotient ring Z_{p^a}[x]/(x^n - 1). n = 0 is allowed and denotes the
/// zero ring (every polynomial reduces to 0), which models an empty block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuotientCtx {
    spec: RingSpec,
    n: usize,
}

impl QuotientCtx {
    pub fn new(spec: RingSpec, n: usize) -> Result<Self> {
        if n > 0 && (n as u64) % spec.p() == 0 {
            return Err(Error::NonCoprimeLength { n, p: spec.p() });
        }
        Ok(QuotientCtx { spec, n })
    }

    pub fn spec(&self) -> RingSpec {
        self.spec
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn modulus_poly(&self) -> Poly {
        Poly::xn_minus_1(self.spec, self.n)
    }

    /// Reduction mod x^n - 1: folds x^{i} onto x^{i mod n}.
    pub fn reduce(&self, f: &Poly) -> Poly {
        assert_eq!(f.spec(), self.spec, "ring mismatch: reduce in wrong quotient");
        if self.n == 0 {
            return Poly::zero(self.spec);
        }
        let m = self.spec.modulus();
        let mut coeffs = vec![0u64; self.n];
        for (i, &c) in f.coeffs().iter().enumerate() {
            let idx = i % self.n;
            coeffs[idx] = (coeffs[idx] + c) % m;
        }
        Poly::from_coeffs(self.spec, coeffs)
    }

    pub fn mul(&self, f: &Poly, g: &Poly) -> Poly {
        self.reduce(&f.mul(g))
    }

    /// Multiplication by x in the quotient (one cyclic shift of coefficients).
    pub fn shift(&self, f: &Poly) -> Poly {
        self.reduce(&f.mul_xk(1))
    }

    /// Length-n coefficient vector of a reduced polynomial.
    pub fn coeff_vec(&self, f: &Poly) -> Vec<u64> {
        let red = self.reduce(f);
        let mut out = vec![0u64; self.n];
        for (i, &c) in red.coeffs().iter().enumerate() {
            out[i] = c;
        }
        out
    }

    pub fn poly_from_vec(&self, v: &[u64]) -> Poly {
        assert_eq!(v.len(), self.n, "coefficient vector length must equal n");
        Poly::from_coeffs(self.spec, v.to_vec())
    }
}

/// Monic gcd over the field Z_p (requires exponent 1); gcd(0, 0) = 0.
pub fn gcd_zp(f: &Poly, g: &Poly) -> Result<Poly> {
    if f.spec().exponent() != 1 {
        return Err(Error::InvalidRing(
            "polynomial gcd is defined over the residue field Z_p (exponent 1)".into(),
        ));
    }
    let mut a = f.clone();
    let mut b = g.clone();
    while !b.is_zero() {
        let (_, r) = a.divmod(&b)?;
        a = b;
        b = r;
    }
    if a.is_zero() {
        return Ok(a);
    }
    let lc_inv = a.spec().element(a.leading_coeff()).inv()?;
    Ok(a.scale(lc_inv.value()))
}

/// Extended gcd over Z_p: returns (d, s, t) with s*f + t*g = d, d monic.
pub fn ext_gcd_zp(f: &Poly, g: &Poly) -> Result<(Poly, Poly, Poly)> {
    if f.spec().exponent() != 1 {
        return Err(Error::InvalidRing(
            "extended gcd is defined over the residue field Z_p (exponent 1)".into(),
        ));
    }
    let spec = f.spec();
    let (mut r0, mut r1) = (f.clone(), g.clone());
    let (mut s0, mut s1) = (Poly::one(spec), Poly::zero(spec));
    let (mut t0, mut t1) = (Poly::zero(spec), Poly::one(spec));
    while !r1.is_zero() {
        let (q, r) = r0.divmod(&r1)?;
        (r0, r1) = (r1, r);
        (s0, s1) = (s1.clone(), s0.sub(&q.mul(&s1)));
        (t0, t1) = (t1.clone(), t0.sub(&q.mul(&t1)));
    }
    if r0.is_zero() {
        return Ok((r0, s0, t0));
    }
    let lc_inv = spec.element(r0.leading_coeff()).inv()?.value();
    Ok((r0.scale(lc_inv), s0.scale(lc_inv), t0.scale(lc_inv)))
}

/// Factors x^n - 1 into monic irreducibles over Z_p by trial division with
/// monic polynomials of ascending degree. Requires gcd(n, p) = 1 (so the
/// factorization is squarefree). Factors are returned sorted by (degree,
/// ascending-coefficient lexicographic order); this fixed order is relied on
/// throughout for determinism.
pub fn factor_xn_minus_1(spec: RingSpec, n: usize) -> Result<Vec<Poly>> {
    if spec.exponent() != 1 {
        return Err(Error::InvalidRing(
            "factorization runs over the residue field Z_p (exponent 1)".into(),
        ));
    }
    if n == 0 || (n as u64) % spec.p() == 0 {
        return Err(Error::NonCoprimeLength { n, p: spec.p() });
    }
    let p = spec.p();
    let mut remaining = Poly::xn_minus_1(spec, n);
    let mut factors: Vec<Poly> = Vec::new();
    let mut d = 1usize;
    while remaining.degree().map_or(false, |deg| deg >= 2 * d) {
        // All monic candidates of degree d, low coefficients varying fastest.
        let count = crate::ringcore::pow_u128(p as u128, d as u128);
        let mut idx: u128 = 0;
        while idx < count {
            let mut coeffs = Vec::with_capacity(d + 1);
            let mut t = idx;
            for _ in 0..d {
                coeffs.push((t % p as u128) as u64);
                t /= p as u128;
            }
            coeffs.push(1);
            let cand = Poly::from_coeffs(spec, coeffs);
            while let Some(q) = remaining.exact_quotient(&cand) {
                factors.push(cand.clone());
                remaining = q;
                if remaining.degree() == Some(0) {
                    break;
                }
            }
            idx += 1;
        }
        d += 1;
    }
    if remaining.degree().map_or(false, |deg| deg >= 1) {
        factors.push(remaining);
    }
    factors.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.coeffs().cmp(b.coeffs()))
    });
    Ok(factors)
}

/// One quadratic Hensel step lifting a coprime pair: given f = g*h and
/// s*g + t*h = 1 modulo p^{2^k}, improves all four to hold modulo p^{2^{k+1}}.
/// All arithmetic happens in the fixed ring Z_{p^a}; once 2^k >= a the
/// identities hold exactly. h stays monic throughout.
fn hensel_step(f: &Poly, g: &mut Poly, h: &mut Poly, s: &mut Poly, t: &mut Poly) -> Result<()> {
    let one = Poly::one(f.spec());
    let e = f.sub(&g.mul(h));
    let (q, r) = s.mul(&e).divmod(h)?;
    let new_g = g.add(&t.mul(&e)).add(&q.mul(g));
    let new_h = h.add(&r);
    let b = s.mul(&new_g).add(&t.mul(&new_h)).sub(&one);
    let (c, d) = s.mul(&b).divmod(&new_h)?;
    let new_s = s.sub(&d);
    let new_t = t.sub(&t.mul(&b)).sub(&c.mul(&new_g));
    *g = new_g;
    *h = new_h;
    *s = new_s;
    *t = new_t;
    Ok(())
}

/// Lifts one monic factor g of x^n - 1 over Z_p (with monic cofactor h) to the
/// unique monic divisor of x^n - 1 over the target ring that reduces to g.
fn lift_factor(target: RingSpec, n: usize, g0: &Poly, h0: &Poly) -> Result<Poly> {
    let f = Poly::xn_minus_1(target, n);
    let (d, s0, t0) = ext_gcd_zp(g0, h0)?;
    assert_eq!(
        d,
        Poly::one(g0.spec()),
        "factor and cofactor of a squarefree polynomial must be coprime"
    );
    let mut g = g0.lift_to(target);
    let mut h = h0.lift_to(target);
    let mut s = s0.lift_to(target);
    let mut t = t0.lift_to(target);
    let one = Poly::one(target);
    for _ in 0..=target.exponent() {
        let ok = f.sub(&g.mul(&h)).is_zero() && s.mul(&g).add(&t.mul(&h)).sub(&one).is_zero();
        if ok {
            break;
        }
        hensel_step(&f, &mut g, &mut h, &mut s, &mut t)?;
    }
    assert!(f.sub(&g.mul(&h)).is_zero(), "Hensel iteration must converge at desk scale");
    assert!(g.is_monic(), "lifted factor of a monic polynomial is monic");
    Ok(g)
}

/// The factorization of x^n - 1 over Z_p together with its Hensel lift to
/// Z_{p^a}: lifted[i] is monic, reduces to base[i] mod p, and the product of
/// all lifted factors is exactly x^n - 1 over Z_{p^a}.
#[derive(Debug)]
pub struct LiftedFactorization {
    spec: RingSpec,
    n: usize,
    base: Vec<Poly>,
    lifted: Vec<Poly>,
}

impl LiftedFactorization {
    fn compute(spec: RingSpec, n: usize) -> Result<Self> {
        let field = spec.residue_field();
        let base = factor_xn_minus_1(field, n)?;
        let xn1 = Poly::xn_minus_1(field, n);
        let lifted = if spec.exponent() == 1 {
            base.iter().map(|g| g.lift_to(spec)).collect::<Vec<_>>()
        } else {
            base.iter()
                .map(|g| {
                    let h = xn1
                        .exact_quotient(g)
                        .expect("factor divides x^n - 1 by construction");
                    lift_factor(spec, n, g, &h)
                })
                .collect::<Result<Vec<_>>>()?
        };
        // The lifted factors are pairwise comaximal divisors of x^n - 1, so
        // their product is a monic divisor of full degree: exactly x^n - 1.
        let mut prod = Poly::one(spec);
        for f in &lifted {
            prod = prod.mul(f);
        }
        assert_eq!(prod, Poly::xn_minus_1(spec, n), "lifted factors multiply back");
        Ok(LiftedFactorization { spec, n, base, lifted })
    }

    pub fn spec(&self) -> RingSpec {
        self.spec
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Irreducible factors over Z_p, in canonical order.
    pub fn base_factors(&self) -> &[Poly] {
        &self.base
    }

    /// Hensel lifts over Z_{p^a}, aligned with `base_factors`.
    pub fn lifted_factors(&self) -> &[Poly] {
        &self.lifted
    }

    pub fn factor_count(&self) -> usize {
        self.lifted.len()
    }

    /// Product of the lifted factors selected by `levels[i] > k`; this is the
    /// k-th entry of the divisor chain encoded by a level assignment.
    fn chain_entry(&self, levels: &[u32], k: u32) -> Poly {
        let mut prod = Poly::one(self.spec);
        for (i, f) in self.lifted.iter().enumerate() {
            if levels[i] > k {
                prod = prod.mul(f);
            }
        }
        prod
    }
}

static FACTOR_CACHE: OnceLock<Mutex<HashMap<(u64, u32, usize), Arc<LiftedFactorization>>>> =
    OnceLock::new();

/// Memoized lifted factorization of x^n - 1 over Z_{p^a}.
pub fn lifted_factorization(spec: RingSpec, n: usize) -> Result<Arc<LiftedFactorization>> {
    let cache = FACTOR_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (spec.p(), spec.exponent(), n);
    if let Some(found) = cache.lock().unwrap().get(&key) {
        return Ok(Arc::clone(found));
    }
    let fresh = Arc::new(LiftedFactorization::compute(spec, n)?);
    let mut guard = cache.lock().unwrap();
    let entry = guard.entry(key).or_insert_with(|| Arc::clone(&fresh));
    Ok(Arc::clone(entry))
}

/// Lazy enumeration of all divisor chains f_{a-1} | ... | f_0 | x^n - 1 over
/// Z_{p^a}. Each monic divisor of x^n - 1 is a product of a subset of the
/// lifted irreducible factors, so a chain corresponds to a level assignment
/// t_i in 0..=a per factor (factor i appears in f_k exactly when t_i > k);
/// there are (a+1)^m chains for m factors. Chains appear in the order of the
/// base-(a+1) counter over levels, factor 0 varying fastest.
pub struct ChainIter {
    fac: Arc<LiftedFactorization>,
    depth: u32,
    levels: Vec<u32>,
    done: bool,
}

impl ChainIter {
    pub fn chain_count(&self) -> u128 {
        crate::ringcore::pow_u128((self.depth + 1) as u128, self.fac.factor_count() as u128)
    }
}

impl Iterator for ChainIter {
    type Item = Vec<Poly>;

    fn next(&mut self) -> Option<Vec<Poly>> {
        if self.done {
            return None;
        }
        let chain: Vec<Poly> = (0..self.depth)
            .map(|k| self.fac.chain_entry(&self.levels, k))
            .collect();
        // Increment the base-(depth+1) counter.
        let mut i = 0;
        loop {
            if i == self.levels.len() {
                self.done = true;
                break;
            }
            self.levels[i] += 1;
            if self.levels[i] <= self.depth {
                break;
            }
            self.levels[i] = 0;
            i += 1;
        }
        Some(chain)
    }
}

/// All divisor chains of length a = spec exponent in Z_{p^a}[x]/(x^n - 1).
pub fn divisor_chains(spec: RingSpec, n: usize) -> Result<ChainIter> {
    let fac = lifted_factorization(spec, n)?;
    let depth = spec.exponent();
    let m = fac.factor_count();
    Ok(ChainIter { fac, depth, levels: vec![0; m], done: false })
}

/// Derived data of a divisor chain: the hat quotients and the annihilator
/// cofactor F.
///
/// hats[0] = (x^n - 1)/f_0, hats[i] = f_{i-1}/f_i for 1 <= i <= a-1, and
/// hats[a] = f_{a-1}. F is the product of hats[0..a], i.e. (x^n - 1)/f_{a-1};
/// it annihilates the chain's single generator in the quotient ring.
#[derive(Debug, Clone)]
pub struct HatChain {
    pub hats: Vec<Poly>,
    pub big_f: Poly,
}

/// Validates the divisibility chain f_{a-1} | ... | f_0 | x^n - 1 (every entry
/// monic) and computes hats and F. The chain length must equal the ring
/// exponent a.
pub fn hat_chain(ctx: &QuotientCtx, chain: &[Poly]) -> Result<HatChain> {
    let a = ctx.spec().exponent() as usize;
    if chain.len() != a {
        return Err(Error::ChainViolation(format!(
            "chain length {} must equal the ring exponent {}",
            chain.len(),
            a
        )));
    }
    for (i, f) in chain.iter().enumerate() {
        if !f.is_monic() {
            return Err(Error::ChainViolation(format!(
                "chain entry f_{i} = {f} is not monic"
            )));
        }
        if f.spec() != ctx.spec() {
            return Err(Error::ChainViolation(format!(
                "chain entry f_{i} lives in the wrong ring"
            )));
        }
    }
    let mut hats = Vec::with_capacity(a + 1);
    let modulus = ctx.modulus_poly();
    let hat0 = modulus.exact_quotient(&chain[0]).ok_or_else(|| {
        Error::ChainViolation(format!(
            "f_0 = {} does not divide x^{} - 1",
            chain[0],
            ctx.n()
        ))
    })?;
    hats.push(hat0);
    for i in 1..a {
        let q = chain[i - 1].exact_quotient(&chain[i]).ok_or_else(|| {
            Error::ChainViolation(format!(
                "f_{i} = {} does not divide f_{} = {}",
                chain[i],
                i - 1,
                chain[i - 1]
            ))
        })?;
        hats.push(q);
    }
    hats.push(chain[a - 1].clone());
    let big_f = modulus
        .exact_quotient(&chain[a - 1])
        .expect("f_{a-1} divides x^n - 1 through the chain");
    Ok(HatChain { hats, big_f })
}
