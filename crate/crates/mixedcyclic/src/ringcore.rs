//! Base arithmetic for the chain rings Z_{p^a} and the mixed ambient alphabet.
//!
//! Everything downstream represents ring elements by their canonical
//! representatives in [0, p^a). The two maps connecting the component rings are
//! `phi_reduce` (Z_{p^s} -> Z_{p^r}, reduction mod p^r) and `eps_embed`
//! (Z_{p^r} -> Z_{p^s}, identity on representatives). The scalar action of
//! b in Z_{p^s} on a mixed word multiplies the first two blocks by phi(b) and
//! the last block by b.

use crate::{Error, Result};

/// Description of a chain ring Z_{p^a}: prime p, exponent a >= 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingSpec {
    p: u64,
    a: u32,
    modulus: u64,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl RingSpec {
    /// Validates that p is prime (trial division; moduli are small by design),
    /// a >= 1, and p^a fits comfortably in u64.
    pub fn new(p: u64, a: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidRing(format!("p = {p} is not prime")));
        }
        if a == 0 {
            return Err(Error::InvalidRing("exponent a must be >= 1".into()));
        }
        let mut modulus: u64 = 1;
        for _ in 0..a {
            modulus = modulus
                .checked_mul(p)
                .filter(|&m| m < (1 << 62))
                .ok_or_else(|| Error::InvalidRing(format!("p^a overflows: p = {p}, a = {a}")))?;
        }
        Ok(RingSpec { p, a, modulus })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn exponent(&self) -> u32 {
        self.a
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// The residue field ring Z_p of this chain ring.
    pub fn residue_field(&self) -> RingSpec {
        RingSpec { p: self.p, a: 1, modulus: self.p }
    }

    /// Z_{p^k} with the same prime. Panics if k = 0 or overflows; callers pass
    /// exponents bounded by an already-validated spec.
    pub fn with_exponent(&self, k: u32) -> RingSpec {
        RingSpec::new(self.p, k).expect("exponent change within validated range")
    }

    pub fn reduce(&self, value: u64) -> u64 {
        value % self.modulus
    }

    pub fn reduce_i128(&self, value: i128) -> u64 {
        let m = self.modulus as i128;
        (((value % m) + m) % m) as u64
    }

    pub fn element(&self, value: u64) -> ModInt {
        ModInt { value: self.reduce(value), spec: *self }
    }

    pub fn zero(&self) -> ModInt {
        self.element(0)
    }

    pub fn one(&self) -> ModInt {
        self.element(1)
    }

    /// All elements, in representative order 0, 1, ..., p^a - 1.
    pub fn elements(&self) -> impl Iterator<Item = ModInt> + '_ {
        (0..self.modulus).map(move |v| self.element(v))
    }
}

/// An element of Z_{p^a}, stored as its canonical representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModInt {
    value: u64,
    spec: RingSpec,
}

fn assert_same_ring(a: &RingSpec, b: &RingSpec, op: &str) {
    assert!(
        a == b,
        "ring mismatch: {op} over Z_{}^{} vs Z_{}^{}",
        a.p, a.a, b.p, b.a
    );
}

impl ModInt {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn spec(&self) -> RingSpec {
        self.spec
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    /// True when the element is invertible, i.e. not divisible by p.
    pub fn is_unit(&self) -> bool {
        self.value % self.spec.p != 0
    }

    /// Largest v with p^v dividing the representative; v(0) = a by convention,
    /// so the valuation of any element lies in 0..=a.
    pub fn p_valuation(&self) -> u32 {
        p_valuation_in(self.value, self.spec.p, self.spec.a)
    }

    /// Base-p digits d_0..d_{a-1} with value = sum d_i p^i, each in [0, p).
    pub fn p_adic_digits(&self) -> Vec<u64> {
        let mut digits = Vec::with_capacity(self.spec.a as usize);
        let mut v = self.value;
        for _ in 0..self.spec.a {
            digits.push(v % self.spec.p);
            v /= self.spec.p;
        }
        digits
    }

    /// Multiplicative inverse; error for non-units.
    pub fn inv(&self) -> Result<ModInt> {
        if !self.is_unit() {
            return Err(Error::InvalidRing(format!(
                "{} is not a unit mod {}",
                self.value,
                self.spec.modulus
            )));
        }
        // Extended Euclid on (value, modulus).
        let (mut r0, mut r1) = (self.spec.modulus as i128, self.value as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1, "unit must be coprime to modulus");
        Ok(self.spec.element(self.spec.reduce_i128(t0)))
    }

    pub fn pow(&self, mut e: u64) -> ModInt {
        let mut base = *self;
        let mut acc = self.spec.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

pub(crate) fn p_valuation_in(value: u64, p: u64, a: u32) -> u32 {
    if value == 0 {
        return a;
    }
    let mut v = 0;
    let mut x = value;
    while x % p == 0 {
        x /= p;
        v += 1;
    }
    v.min(a)
}

pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

impl std::ops::Add for ModInt {
    type Output = ModInt;
    fn add(self, rhs: ModInt) -> ModInt {
        assert_same_ring(&self.spec, &rhs.spec, "add");
        self.spec.element((self.value + rhs.value) % self.spec.modulus)
    }
}

impl std::ops::Sub for ModInt {
    type Output = ModInt;
    fn sub(self, rhs: ModInt) -> ModInt {
        assert_same_ring(&self.spec, &rhs.spec, "sub");
        self.spec
            .element((self.value + self.spec.modulus - rhs.value) % self.spec.modulus)
    }
}

impl std::ops::Mul for ModInt {
    type Output = ModInt;
    fn mul(self, rhs: ModInt) -> ModInt {
        assert_same_ring(&self.spec, &rhs.spec, "mul");
        self.spec.element(mul_mod(self.value, rhs.value, self.spec.modulus))
    }
}

impl std::ops::Neg for ModInt {
    type Output = ModInt;
    fn neg(self) -> ModInt {
        self.spec.element((self.spec.modulus - self.value) % self.spec.modulus)
    }
}

/// phi: Z_{p^s} -> Z_{p^r}, u mod p^r. Requires same prime and target exponent
/// <= source exponent. Surjective ring homomorphism; phi(p^i) = 0 for i >= r.
pub fn phi_reduce(x: ModInt, target: RingSpec) -> Result<ModInt> {
    if x.spec.p != target.p {
        return Err(Error::RingMismatch(format!(
            "phi between different primes {} and {}",
            x.spec.p, target.p
        )));
    }
    if target.a > x.spec.a {
        return Err(Error::RingMismatch(format!(
            "phi must not raise the exponent: {} -> {}",
            x.spec.a, target.a
        )));
    }
    Ok(target.element(x.value % target.modulus))
}

/// eps: Z_{p^r} -> Z_{p^s}, identity on canonical representatives. Additive
/// embedding only: it is not a ring homomorphism for r < s.
pub fn eps_embed(x: ModInt, target: RingSpec) -> Result<ModInt> {
    if x.spec.p != target.p {
        return Err(Error::RingMismatch(format!(
            "eps between different primes {} and {}",
            x.spec.p, target.p
        )));
    }
    if target.a < x.spec.a {
        return Err(Error::RingMismatch(format!(
            "eps must not lower the exponent: {} -> {}",
            x.spec.a, target.a
        )));
    }
    Ok(target.element(x.value))
}

/// Parameters of the mixed ambient space Z_{p^r}^alpha x Z_{p^r}^beta x Z_{p^s}^gamma.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MixedParams {
    p: u64,
    r: u32,
    s: u32,
    alpha: usize,
    beta: usize,
    gamma: usize,
}

impl MixedParams {
    /// Validates primality, 1 <= r <= s, and gcd(length, p) = 1 for every
    /// nonzero block length (cyclic theory over Z_{p^a} needs p coprime to n).
    pub fn new(p: u64, r: u32, s: u32, alpha: usize, beta: usize, gamma: usize) -> Result<Self> {
        if r == 0 || r > s {
            return Err(Error::InvalidParams(format!(
                "exponents must satisfy 1 <= r <= s, got r = {r}, s = {s}"
            )));
        }
        let _ = RingSpec::new(p, s)?;
        for (name, n) in [("alpha", alpha), ("beta", beta), ("gamma", gamma)] {
            if n > 0 && (n as u64) % p == 0 {
                return Err(Error::InvalidParams(format!(
                    "block length {name} = {n} must be coprime to p = {p}"
                )));
            }
        }
        Ok(MixedParams { p, r, s, alpha, beta, gamma })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn beta(&self) -> usize {
        self.beta
    }

    pub fn gamma(&self) -> usize {
        self.gamma
    }

    /// Ring of the first two blocks, Z_{p^r}.
    pub fn ring_r(&self) -> RingSpec {
        RingSpec::new(self.p, self.r).expect("validated at construction")
    }

    /// Ring of the third block and of the scalars, Z_{p^s}.
    pub fn ring_s(&self) -> RingSpec {
        RingSpec::new(self.p, self.s).expect("validated at construction")
    }

    /// Total coordinate count alpha + beta + gamma.
    pub fn len(&self) -> usize {
        self.alpha + self.beta + self.gamma
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Size of the full ambient module, p^{r(alpha+beta) + s*gamma}.
    pub fn ambient_size(&self) -> u128 {
        let e = self.r as u128 * (self.alpha + self.beta) as u128
            + self.s as u128 * self.gamma as u128;
        pow_u128(self.p as u128, e)
    }

    /// lcm of the nonzero block lengths (1 when all blocks are empty). This is
    /// the period of the simultaneous shift.
    pub fn shift_period(&self) -> usize {
        let mut l = 1usize;
        for n in [self.alpha, self.beta, self.gamma] {
            if n > 0 {
                l = lcm(l, n);
            }
        }
        l
    }

    /// Modulus of the ambient column at flat index j (first alpha+beta columns
    /// live mod p^r, the rest mod p^s).
    pub fn column_spec(&self, j: usize) -> RingSpec {
        debug_assert!(j < self.len());
        if j < self.alpha + self.beta {
            self.ring_r()
        } else {
            self.ring_s()
        }
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

pub(crate) fn pow_u128(base: u128, mut e: u128) -> u128 {
    let mut acc: u128 = 1;
    let mut b = base;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.checked_mul(b).expect("size fits in u128");
        }
        e >>= 1;
        if e > 0 {
            b = b.checked_mul(b).expect("size fits in u128");
        }
    }
    acc
}

/// A word of the mixed ambient space: blocks u (length alpha, mod p^r),
/// v (length beta, mod p^r), w (length gamma, mod p^s).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MixedWord {
    u: Vec<u64>,
    v: Vec<u64>,
    w: Vec<u64>,
}

impl MixedWord {
    /// Builds a word, reducing every entry into canonical range.
    pub fn new(params: &MixedParams, u: Vec<u64>, v: Vec<u64>, w: Vec<u64>) -> Result<Self> {
        if u.len() != params.alpha || v.len() != params.beta || w.len() != params.gamma {
            return Err(Error::InvalidParams(format!(
                "block lengths ({}, {}, {}) do not match parameters ({}, {}, {})",
                u.len(),
                v.len(),
                w.len(),
                params.alpha,
                params.beta,
                params.gamma
            )));
        }
        let mr = params.ring_r().modulus();
        let ms = params.ring_s().modulus();
        Ok(MixedWord {
            u: u.into_iter().map(|x| x % mr).collect(),
            v: v.into_iter().map(|x| x % mr).collect(),
            w: w.into_iter().map(|x| x % ms).collect(),
        })
    }

    pub fn zero(params: &MixedParams) -> Self {
        MixedWord {
            u: vec![0; params.alpha],
            v: vec![0; params.beta],
            w: vec![0; params.gamma],
        }
    }

    pub fn block_u(&self) -> &[u64] {
        &self.u
    }

    pub fn block_v(&self) -> &[u64] {
        &self.v
    }

    pub fn block_w(&self) -> &[u64] {
        &self.w
    }

    pub fn is_zero(&self) -> bool {
        self.u.iter().chain(&self.v).chain(&self.w).all(|&x| x == 0)
    }

    /// Count of nonzero coordinates across all three blocks.
    pub fn hamming_weight(&self) -> usize {
        self.u
            .iter()
            .chain(&self.v)
            .chain(&self.w)
            .filter(|&&x| x != 0)
            .count()
    }

    /// Flat coordinate vector (u | v | w), for matrix interop.
    pub fn to_flat(&self) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.u.len() + self.v.len() + self.w.len());
        out.extend_from_slice(&self.u);
        out.extend_from_slice(&self.v);
        out.extend_from_slice(&self.w);
        out
    }

    pub fn from_flat(params: &MixedParams, flat: &[u64]) -> Result<Self> {
        if flat.len() != params.len() {
            return Err(Error::InvalidParams(format!(
                "flat vector length {} does not match alpha+beta+gamma = {}",
                flat.len(),
                params.len()
            )));
        }
        let (u, rest) = flat.split_at(params.alpha);
        let (v, w) = rest.split_at(params.beta);
        MixedWord::new(params, u.to_vec(), v.to_vec(), w.to_vec())
    }

    pub fn add(&self, params: &MixedParams, rhs: &MixedWord) -> MixedWord {
        let mr = params.ring_r().modulus();
        let ms = params.ring_s().modulus();
        MixedWord {
            u: zip_mod(&self.u, &rhs.u, mr, |a, b| a + b),
            v: zip_mod(&self.v, &rhs.v, mr, |a, b| a + b),
            w: zip_mod(&self.w, &rhs.w, ms, |a, b| a + b),
        }
    }

    pub fn sub(&self, params: &MixedParams, rhs: &MixedWord) -> MixedWord {
        let mr = params.ring_r().modulus();
        let ms = params.ring_s().modulus();
        MixedWord {
            u: zip_mod(&self.u, &rhs.u, mr, |a, b| a + (mr - b)),
            v: zip_mod(&self.v, &rhs.v, mr, |a, b| a + (mr - b)),
            w: zip_mod(&self.w, &rhs.w, ms, |a, b| a + (ms - b)),
        }
    }

    /// Simultaneous cyclic shift by i: each block rotates right by i positions,
    /// so coordinate j of the result is coordinate j - i of the input.
    pub fn shift(&self, i: usize) -> MixedWord {
        MixedWord {
            u: rotate_right(&self.u, i),
            v: rotate_right(&self.v, i),
            w: rotate_right(&self.w, i),
        }
    }
}

fn zip_mod(a: &[u64], b: &[u64], m: u64, f: impl Fn(u64, u64) -> u64) -> Vec<u64> {
    a.iter().zip(b).map(|(&x, &y)| f(x, y) % m).collect()
}

fn rotate_right(block: &[u64], i: usize) -> Vec<u64> {
    let n = block.len();
    if n == 0 {
        return Vec::new();
    }
    let i = i % n;
    let mut out = vec![0; n];
    for (j, &x) in block.iter().enumerate() {
        out[(j + i) % n] = x;
    }
    out
}

/// Scalar action of b in Z_{p^s} on a mixed word: the first two blocks scale by
/// phi(b) = b mod p^r, the last block by b itself.
pub fn star_scalar(params: &MixedParams, b: u64, word: &MixedWord) -> MixedWord {
    let mr = params.ring_r().modulus();
    let ms = params.ring_s().modulus();
    let br = b % mr;
    let bs = b % ms;
    MixedWord {
        u: word.u.iter().map(|&x| mul_mod(x, br, mr)).collect(),
        v: word.v.iter().map(|&x| mul_mod(x, br, mr)).collect(),
        w: word.w.iter().map(|&x| mul_mod(x, bs, ms)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(p: u64, a: u32) -> RingSpec {
        RingSpec::new(p, a).unwrap()
    }

    #[test]
    fn ring_spec_validation() {
        assert!(RingSpec::new(4, 1).is_err(), "4 is not prime");
        assert!(RingSpec::new(1, 1).is_err());
        assert!(RingSpec::new(0, 2).is_err());
        assert!(RingSpec::new(2, 0).is_err(), "exponent must be positive");
        assert_eq!(z(2, 3).modulus(), 8);
        assert_eq!(z(3, 2).modulus(), 9);
        assert!(RingSpec::new(7, 1).is_ok());
    }

    #[test]
    fn arithmetic_canonical_representatives() {
        let r = z(3, 2);
        let a = r.element(7);
        let b = r.element(5);
        assert_eq!((a + b).value(), 3);
        assert_eq!((a - b).value(), 2);
        assert_eq!((b - a).value(), 7);
        assert_eq!((a * b).value(), 8);
        assert_eq!((-a).value(), 2);
        assert_eq!(r.element(9).value(), 0);
    }

    #[test]
    #[should_panic(expected = "ring mismatch")]
    fn mismatched_rings_panic() {
        let x = z(2, 2).element(1);
        let y = z(2, 3).element(1);
        let _ = x + y;
    }

    #[test]
    fn inverses() {
        let r = z(2, 3);
        assert_eq!(r.element(3).inv().unwrap().value(), 3, "3*3 = 9 = 1 mod 8");
        assert_eq!(r.element(5).inv().unwrap().value(), 5);
        assert!(r.element(2).inv().is_err(), "2 is not a unit mod 8");
        for v in 0..9 {
            let x = z(3, 2).element(v);
            if x.is_unit() {
                assert_eq!((x * x.inv().unwrap()).value(), 1);
            }
        }
    }

    #[test]
    fn valuation_convention() {
        let r = z(2, 3);
        assert_eq!(r.element(4).p_valuation(), 2);
        assert_eq!(r.element(6).p_valuation(), 1);
        assert_eq!(r.element(5).p_valuation(), 0);
        assert_eq!(r.element(0).p_valuation(), 3, "v(0) = a by convention");
    }

    #[test]
    fn p_adic_digits_roundtrip() {
        let r = z(3, 3);
        let x = r.element(11);
        assert_eq!(x.p_adic_digits(), vec![2, 0, 1], "11 = 2 + 0*3 + 1*9");
        for v in 0..27 {
            let digits = r.element(v).p_adic_digits();
            assert_eq!(digits.len(), 3);
            let back: u64 = digits
                .iter()
                .enumerate()
                .map(|(i, &d)| d * 3u64.pow(i as u32))
                .sum();
            assert_eq!(back, v);
            assert!(digits.iter().all(|&d| d < 3));
        }
    }

    #[test]
    fn phi_is_ring_hom_and_kills_high_powers() {
        let zs = z(2, 3);
        let zr = z(2, 1);
        assert_eq!(phi_reduce(zs.element(5), zr).unwrap().value(), 1);
        assert_eq!(phi_reduce(zs.element(4), zr).unwrap().value(), 0);
        // phi(p^i) = 0 whenever i >= r.
        let z4 = z(2, 2);
        assert_eq!(phi_reduce(zs.element(4), z4).unwrap().value(), 0);
        assert_eq!(phi_reduce(zs.element(2), z4).unwrap().value(), 2);
        // Homomorphism on all pairs mod 8 -> mod 4.
        for x in 0..8 {
            for y in 0..8 {
                let xs = zs.element(x);
                let ys = zs.element(y);
                let lhs = phi_reduce(xs * ys, z4).unwrap();
                let rhs = phi_reduce(xs, z4).unwrap() * phi_reduce(ys, z4).unwrap();
                assert_eq!(lhs, rhs);
                let lhs = phi_reduce(xs + ys, z4).unwrap();
                let rhs = phi_reduce(xs, z4).unwrap() + phi_reduce(ys, z4).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
        assert!(phi_reduce(z4.element(1), zs).is_err(), "phi must not raise exponent");
        assert!(phi_reduce(z4.element(1), z(3, 1)).is_err());
    }

    #[test]
    fn eps_is_identity_on_representatives() {
        let z2 = z(2, 1);
        let z8 = z(2, 3);
        assert_eq!(eps_embed(z2.element(1), z8).unwrap().value(), 1);
        assert!(eps_embed(z8.element(1), z2).is_err());
        // eps is additive only up to carries; but phi(eps(x)) = x always.
        for v in 0..2 {
            let e = eps_embed(z2.element(v), z8).unwrap();
            assert_eq!(phi_reduce(e, z2).unwrap().value(), v);
        }
    }

    #[test]
    fn mixed_params_validation() {
        assert!(MixedParams::new(2, 1, 2, 3, 3, 3).is_ok());
        assert!(MixedParams::new(2, 2, 1, 3, 3, 3).is_err(), "needs r <= s");
        assert!(MixedParams::new(2, 0, 1, 3, 3, 3).is_err());
        assert!(MixedParams::new(2, 1, 2, 4, 3, 3).is_err(), "alpha must be odd for p = 2");
        assert!(MixedParams::new(3, 1, 2, 3, 5, 2).is_err(), "beta = 5 fine but alpha = 3 divisible by 3");
        assert!(MixedParams::new(3, 1, 2, 5, 5, 2).is_ok());
        assert!(MixedParams::new(2, 1, 2, 0, 3, 5).is_ok(), "zero-length blocks are allowed");
        assert_eq!(MixedParams::new(2, 1, 2, 3, 3, 5).unwrap().shift_period(), 15);
        assert_eq!(MixedParams::new(2, 1, 2, 3, 3, 3).unwrap().ambient_size(), 1 << 12);
    }

    #[test]
    fn star_action_and_shift() {
        let params = MixedParams::new(2, 1, 2, 3, 1, 3).unwrap();
        let w = MixedWord::new(&params, vec![1, 0, 1], vec![1], vec![1, 2, 0]).unwrap();
        // b = 3: phi(3) = 1 mod 2, so the first blocks are unchanged.
        let b3 = star_scalar(&params, 3, &w);
        assert_eq!(b3.block_u(), &[1, 0, 1]);
        assert_eq!(b3.block_v(), &[1]);
        assert_eq!(b3.block_w(), &[3, 2, 0], "3*1 = 3, 3*2 = 6 = 2 mod 4");
        // b = 2: phi(2) = 0 kills the first two blocks.
        let b2 = star_scalar(&params, 2, &w);
        assert_eq!(b2.block_u(), &[0, 0, 0]);
        assert_eq!(b2.block_v(), &[0]);
        assert_eq!(b2.block_w(), &[2, 0, 0]);

        let shifted = w.shift(1);
        assert_eq!(shifted.block_u(), &[1, 1, 0]);
        assert_eq!(shifted.block_v(), &[1], "length-1 block is fixed by shifts");
        assert_eq!(shifted.block_w(), &[0, 1, 2]);
        assert_eq!(w.shift(params.shift_period()), w, "shift has period lcm of lengths");
    }

    #[test]
    fn word_arithmetic() {
        let params = MixedParams::new(2, 1, 2, 1, 1, 1).unwrap();
        let a = MixedWord::new(&params, vec![1], vec![1], vec![3]).unwrap();
        let b = MixedWord::new(&params, vec![1], vec![0], vec![2]).unwrap();
        assert_eq!(a.add(&params, &b).to_flat(), vec![0, 1, 1]);
        assert_eq!(a.sub(&params, &b).to_flat(), vec![0, 1, 1]);
        assert_eq!(a.hamming_weight(), 3);
        assert!(MixedWord::new(&params, vec![1, 1], vec![1], vec![3]).is_err());
        let flat = MixedWord::from_flat(&params, &[1, 1, 3]).unwrap();
        assert_eq!(flat.to_flat(), vec![1, 1, 3]);
    }
}
