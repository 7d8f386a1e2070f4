//! Cyclic codes of length n over a chain ring Z_{p^a}, gcd(n, p) = 1.
//!
//! Such a code is an ideal of Z_{p^a}[x]/(x^n - 1) and is determined by a
//! divisor chain f_{a-1} | f_{a-2} | ... | f_0 | x^n - 1 of monic polynomials:
//! the ideal is <f_0, p f_1, ..., p^{a-1} f_{a-1}>, equivalently the single
//! generator f = f_0 + p f_1 + ... + p^{a-1} f_{a-1}. The chain is unique, so
//! two codes are equal exactly when their chains are.
//!
//! The hat polynomials of the chain drive everything quantitative:
//! |C| = p^{sum over i < a of (a - i) deg hat_i}, and the sets
//! S_k = { x^m (prod_{t<k} hat_t) f : m < deg hat_k } form a minimal
//! generating set of the code as a Z_{p^a}-module.

use crate::chainlinalg::{echelonize, enumerate_span, span_eq, Echelon, GenMatrix};
use crate::polyring::{hat_chain, lifted_factorization, HatChain, Poly, QuotientCtx};
use crate::ringcore::{MixedParams, MixedWord, RingSpec};
use crate::{Error, Result};

/// A cyclic code over Z_{p^a}, stored by its canonical divisor chain.
#[derive(Debug, Clone)]
pub struct CyclicChain {
    spec: RingSpec,
    n: usize,
    ctx: QuotientCtx,
    /// f_0, ..., f_{a-1}; each divides the previous and f_0 divides x^n - 1.
    chain: Vec<Poly>,
    hats: HatChain,
    echelon: Echelon,
}

impl PartialEq for CyclicChain {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec && self.n == other.n && self.chain == other.chain
    }
}
impl Eq for CyclicChain {}

fn module_params(spec: RingSpec, n: usize) -> MixedParams {
    MixedParams::new(spec.p(), spec.exponent(), spec.exponent(), 0, 0, n)
        .expect("single-ring parameters are valid whenever the length is coprime to p")
}

impl CyclicChain {
    /// Builds the code from its divisor chain (length must equal the ring
    /// exponent a). Validates monicity, the divisibility chain, and that f_0
    /// divides x^n - 1.
    pub fn new(spec: RingSpec, n: usize, chain: Vec<Poly>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParams("cyclic code length must be positive".into()));
        }
        let ctx = QuotientCtx::new(spec, n)?;
        if chain.len() != spec.exponent() as usize {
            return Err(Error::ChainViolation(format!(
                "chain has {} entries, ring exponent needs {}",
                chain.len(),
                spec.exponent()
            )));
        }
        for f in &chain {
            if f.spec() != spec {
                return Err(Error::RingMismatch(format!(
                    "chain entry over Z_{} in a code over Z_{}",
                    f.spec().modulus(),
                    spec.modulus()
                )));
            }
        }
        let hats = hat_chain(&ctx, &chain)?;
        let params = module_params(spec, n);
        let echelon = echelonize(&GenMatrix::new(&params, ideal_rows(&ctx, &chain))?);
        Ok(CyclicChain { spec, n, ctx, chain, hats, echelon })
    }

    /// The zero code: every chain entry is x^n - 1.
    pub fn zero(spec: RingSpec, n: usize) -> Result<Self> {
        let f = Poly::xn_minus_1(spec, n);
        CyclicChain::new(spec, n, vec![f; spec.exponent() as usize])
    }

    /// The full ambient code: every chain entry is 1.
    pub fn full(spec: RingSpec, n: usize) -> Result<Self> {
        let one = Poly::one(spec);
        CyclicChain::new(spec, n, vec![one; spec.exponent() as usize])
    }

    /// Recovers the canonical chain of the ideal generated by the given
    /// polynomials (the smallest cyclic code containing them). The level of
    /// each lifted irreducible factor F of x^n - 1 is the minimum, over the
    /// generators g, of the coefficient valuation of g mod F; shifts do not
    /// change these local valuations because x is a unit in every local
    /// factor.
    pub fn from_generators(spec: RingSpec, n: usize, gens: &[Poly]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParams("cyclic code length must be positive".into()));
        }
        let fac = lifted_factorization(spec, n)?;
        let a = spec.exponent();
        let mut levels = vec![a; fac.factor_count()];
        for g in gens {
            if g.spec() != spec {
                return Err(Error::RingMismatch(format!(
                    "generator over Z_{} in a code over Z_{}",
                    g.spec().modulus(),
                    spec.modulus()
                )));
            }
            for (i, factor) in fac.lifted_factors().iter().enumerate() {
                let (_, rem) = g.divmod(factor)?;
                let v = rem.min_coeff_valuation();
                if v < levels[i] {
                    levels[i] = v;
                }
            }
        }
        let mut chain = Vec::with_capacity(a as usize);
        for t in 0..a {
            let mut f = Poly::one(spec);
            for (i, factor) in fac.lifted_factors().iter().enumerate() {
                if levels[i] > t {
                    f = f.mul(factor);
                }
            }
            chain.push(f);
        }
        CyclicChain::new(spec, n, chain)
    }

    pub fn spec(&self) -> RingSpec {
        self.spec
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ctx(&self) -> &QuotientCtx {
        &self.ctx
    }

    pub fn chain(&self) -> &[Poly] {
        &self.chain
    }

    pub fn hats(&self) -> &HatChain {
        &self.hats
    }

    /// The last chain entry f_{a-1} (smallest ideal layer).
    pub fn last_entry(&self) -> &Poly {
        self.chain.last().expect("chain has a >= 1 entries")
    }

    /// (x^n - 1) / f_{a-1}, the product of all hats below the top.
    pub fn modulus_complement(&self) -> &Poly {
        &self.hats.big_f
    }

    /// True when the code is {0} (every chain entry is the modulus).
    pub fn is_zero(&self) -> bool {
        let m = Poly::xn_minus_1(self.spec, self.n);
        self.chain.iter().all(|f| *f == m)
    }

    /// True when the code is the whole ambient ring.
    pub fn is_full(&self) -> bool {
        self.chain.iter().all(|f| f.degree_i64() == 0)
    }

    /// Number of codewords: p^{sum (a - i) deg hat_i for i < a}.
    pub fn size(&self) -> u128 {
        let a = self.spec.exponent() as u128;
        let mut exp: u128 = 0;
        for (i, hat) in self.hats.hats.iter().enumerate().take(self.spec.exponent() as usize) {
            exp += (a - i as u128) * hat.degree_i64().max(0) as u128;
        }
        crate::ringcore::pow_u128(self.spec.p() as u128, exp)
    }

    /// The single generator f = sum p^i f_i, reduced mod x^n - 1.
    pub fn single_generator(&self) -> Poly {
        self.ctx.reduce(&self.generator_rep())
    }

    /// The unreduced representative sum p^i f_i. Its degree is deg f_0 and
    /// its leading coefficient is a unit, so it always supports division with
    /// remainder (unlike the reduced generator, which can vanish or lose its
    /// unit lead when f_0 = x^n - 1).
    pub fn generator_rep(&self) -> Poly {
        let mut acc = Poly::zero(self.spec);
        let mut scale = 1u64;
        for f in &self.chain {
            acc = acc.add(&f.scale(scale));
            scale *= self.spec.p();
        }
        acc
    }

    /// Minimal generating set, grouped by layer: entry k holds
    /// { x^m (prod_{t<k} hat_t) f : m < deg hat_k } for k = 0, ..., a-1.
    /// The union generates the code as a Z_{p^a}-module and no element can be
    /// dropped; the total count is sum deg hat_k.
    pub fn min_genset(&self) -> Vec<Vec<Poly>> {
        let f = self.single_generator();
        let a = self.spec.exponent() as usize;
        let mut out = Vec::with_capacity(a);
        let mut prefix = Poly::one(self.spec);
        for k in 0..a {
            let base = self.ctx.mul(&prefix, &f);
            let dk = self.hats.hats[k].degree_i64().max(0) as usize;
            let mut layer = Vec::with_capacity(dk);
            let mut cur = base;
            for _ in 0..dk {
                layer.push(cur.clone());
                cur = self.ctx.shift(&cur);
            }
            out.push(layer);
            prefix = prefix.mul(&self.hats.hats[k]);
        }
        out
    }

    pub fn word_from_poly(&self, g: &Poly) -> MixedWord {
        let params = module_params(self.spec, self.n);
        MixedWord::from_flat(&params, &self.ctx.coeff_vec(g))
            .expect("coefficient vector has length n")
    }

    pub fn poly_from_word(&self, w: &MixedWord) -> Poly {
        self.ctx.poly_from_vec(w.block_w())
    }

    /// Generator matrix: all shifts of all layer generators p^t f_t.
    pub fn gen_matrix(&self) -> GenMatrix {
        let params = module_params(self.spec, self.n);
        GenMatrix::new(&params, ideal_rows(&self.ctx, &self.chain))
            .expect("ideal rows have length n")
    }

    pub fn echelon(&self) -> &Echelon {
        &self.echelon
    }

    /// Ideal membership of a polynomial (reduced mod x^n - 1 first).
    pub fn contains(&self, g: &Poly) -> bool {
        self.echelon.contains(&self.word_from_poly(g))
    }

    /// Streams every codeword as a polynomial; errors when the code has more
    /// than `cap` words.
    pub fn enumerate(&self, cap: u128) -> Result<impl Iterator<Item = Poly> + '_> {
        let iter = enumerate_span(&self.gen_matrix(), cap)?;
        Ok(iter.map(move |w| self.poly_from_word(&w)))
    }
}

/// Flat generator rows of the ideal <f_0, p f_1, ...>: every shift of every
/// scaled layer polynomial.
fn ideal_rows(ctx: &QuotientCtx, chain: &[Poly]) -> Vec<Vec<u64>> {
    let n = ctx.n();
    let mut rows = Vec::new();
    let mut scale = 1u64;
    for f in chain {
        let g = ctx.reduce(&f.scale(scale));
        if !g.is_zero() {
            let mut cur = g;
            for _ in 0..n {
                rows.push(ctx.coeff_vec(&cur));
                cur = ctx.shift(&cur);
            }
        }
        scale *= ctx.spec().p();
    }
    rows
}

/// True when the two polynomial sets generate the same module span after
/// closing both sides under shifts (ideal equality).
pub fn span_eq_polys(ctx: &QuotientCtx, lhs: &[Poly], rhs: &[Poly]) -> bool {
    let params = module_params(ctx.spec(), ctx.n());
    let close = |polys: &[Poly]| -> GenMatrix {
        let mut rows = Vec::new();
        for g in polys {
            let mut cur = ctx.reduce(g);
            for _ in 0..ctx.n() {
                rows.push(ctx.coeff_vec(&cur));
                cur = ctx.shift(&cur);
            }
        }
        GenMatrix::new(&params, rows).expect("rows have length n")
    };
    span_eq(&close(lhs), &close(rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{divisor_chains, parse_poly};
    use std::collections::BTreeSet;

    fn z(p: u64, a: u32) -> RingSpec {
        RingSpec::new(p, a).unwrap()
    }

    fn poly(spec: RingSpec, text: &str) -> Poly {
        parse_poly(spec, text).unwrap()
    }

    /// Additive-closure oracle: all words reachable by summing shifts of the
    /// layer generators.
    fn closure_size(code: &CyclicChain) -> u128 {
        let rows = super::ideal_rows(code.ctx(), code.chain());
        let mut set: BTreeSet<Vec<u64>> = BTreeSet::new();
        set.insert(vec![0; code.n()]);
        let m = code.spec().modulus();
        let mut work = vec![vec![0u64; code.n()]];
        while let Some(w) = work.pop() {
            for r in &rows {
                let s: Vec<u64> = w.iter().zip(r).map(|(a, b)| (a + b) % m).collect();
                if set.insert(s.clone()) {
                    work.push(s);
                }
            }
        }
        set.len() as u128
    }

    #[test]
    fn z4_example_chain() {
        let spec = z(2, 2);
        let code = CyclicChain::new(spec, 3, vec![poly(spec, "1 1 1"), poly(spec, "1")]).unwrap();
        assert_eq!(code.hats().hats[0], poly(spec, "3 1"), "hat_0 = (x^3-1)/f_0");
        assert_eq!(code.hats().hats[1], poly(spec, "1 1 1"), "hat_1 = f_0/f_1");
        assert_eq!(code.hats().hats[2], poly(spec, "1"), "hat_2 = f_1");
        assert_eq!(code.size(), 16, "2^(2*1 + 1*2)");
        assert_eq!(closure_size(&code), 16, "formula matches brute-force count");
        assert_eq!(code.single_generator(), poly(spec, "3 1 1"), "f = f_0 + 2 f_1");
    }

    #[test]
    fn size_formula_matches_closure_for_all_chains() {
        for (p, a, n) in [(2u64, 1u32, 3usize), (2, 2, 3), (2, 1, 7), (3, 2, 2), (3, 1, 5)] {
            let spec = z(p, a);
            for chain in divisor_chains(spec, n).unwrap() {
                let code = CyclicChain::new(spec, n, chain.clone()).unwrap();
                assert_eq!(
                    code.size(),
                    closure_size(&code),
                    "size formula vs closure at p={p} a={a} n={n} chain={chain:?}"
                );
            }
        }
    }

    #[test]
    fn chain_identities() {
        // p^{a-1-i} (prod_{k<i} hat_k) f  =  p^{a-1} f_{a-1} F / hat_i  (mod x^n - 1)
        // and F f = 0, for every chain.
        for (p, a, n) in [(2u64, 2u32, 3usize), (3, 2, 2), (2, 3, 3)] {
            let spec = z(p, a);
            let ctx = QuotientCtx::new(spec, n).unwrap();
            for chain in divisor_chains(spec, n).unwrap() {
                let code = CyclicChain::new(spec, n, chain.clone()).unwrap();
                let f = code.single_generator();
                let big_f = code.modulus_complement().clone();
                assert!(
                    ctx.mul(&big_f, &f).is_zero(),
                    "F annihilates the single generator for chain {chain:?}"
                );
                let last = code.last_entry().clone();
                let mut prefix = Poly::one(spec);
                for i in 0..a as usize {
                    let hat_i = &code.hats().hats[i];
                    let lhs_scale = spec.p().pow(a - 1 - i as u32);
                    let lhs = ctx.mul(&prefix.scale(lhs_scale), &f);
                    let quot = big_f.exact_quotient(hat_i).expect("hat_i divides F");
                    let rhs = ctx.reduce(&last.mul(&quot).scale(spec.p().pow(a - 1)));
                    assert_eq!(lhs, rhs, "layer identity i={i} for chain {chain:?}");
                    prefix = prefix.mul(hat_i);
                }
            }
        }
    }

    #[test]
    fn single_generator_spans_the_code() {
        for (p, a, n) in [(2u64, 2u32, 3usize), (3, 2, 2)] {
            let spec = z(p, a);
            let ctx = QuotientCtx::new(spec, n).unwrap();
            for chain in divisor_chains(spec, n).unwrap() {
                let code = CyclicChain::new(spec, n, chain.clone()).unwrap();
                let f = code.single_generator();
                let layers: Vec<Poly> = chain
                    .iter()
                    .enumerate()
                    .map(|(i, fi)| fi.scale(spec.p().pow(i as u32)))
                    .collect();
                assert!(
                    span_eq_polys(&ctx, &[f], &layers),
                    "single generator spans the layer ideal for {chain:?}"
                );
            }
        }
    }

    #[test]
    fn min_genset_spans_and_is_minimal() {
        let spec = z(2, 2);
        let code = CyclicChain::new(spec, 3, vec![poly(spec, "1 1 1"), poly(spec, "1")]).unwrap();
        let genset = code.min_genset();
        assert_eq!(genset[0].len(), 1, "deg hat_0 = 1");
        assert_eq!(genset[1].len(), 2, "deg hat_1 = 2");
        let flat: Vec<Poly> = genset.iter().flatten().cloned().collect();
        // Spans the code as a module (no shift closure on the genset side).
        let params = super::module_params(spec, 3);
        let rows: Vec<Vec<u64>> = flat.iter().map(|g| code.ctx().coeff_vec(g)).collect();
        let m = GenMatrix::new(&params, rows.clone()).unwrap();
        assert_eq!(crate::chainlinalg::span_size(&m), code.size(), "genset spans the code");
        // Minimality: dropping any element shrinks the span.
        for skip in 0..rows.len() {
            let sub: Vec<Vec<u64>> = rows
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != skip)
                .map(|(_, r)| r.clone())
                .collect();
            let msub = GenMatrix::new(&params, sub).unwrap();
            assert!(
                crate::chainlinalg::span_size(&msub) < code.size(),
                "dropping generator {skip} must shrink the span"
            );
        }
    }

    #[test]
    fn min_genset_spans_for_all_small_chains() {
        for (p, a, n) in [(2u64, 2u32, 3usize), (3, 2, 2), (2, 1, 7)] {
            let spec = z(p, a);
            let params = super::module_params(spec, n);
            for chain in divisor_chains(spec, n).unwrap() {
                let code = CyclicChain::new(spec, n, chain.clone()).unwrap();
                let rows: Vec<Vec<u64>> = code
                    .min_genset()
                    .iter()
                    .flatten()
                    .map(|g| code.ctx().coeff_vec(g))
                    .collect();
                let m = GenMatrix::new(&params, rows).unwrap();
                assert_eq!(
                    crate::chainlinalg::span_size(&m),
                    code.size(),
                    "genset span for chain {chain:?}"
                );
            }
        }
    }

    #[test]
    fn from_generators_roundtrip() {
        for (p, a, n) in [(2u64, 2u32, 3usize), (3, 2, 2), (2, 1, 7)] {
            let spec = z(p, a);
            for chain in divisor_chains(spec, n).unwrap() {
                let code = CyclicChain::new(spec, n, chain.clone()).unwrap();
                // From the single generator.
                let back =
                    CyclicChain::from_generators(spec, n, &[code.single_generator()]).unwrap();
                assert_eq!(back, code, "single-generator roundtrip for {chain:?}");
                // From the minimal generating set.
                let gens: Vec<Poly> = code.min_genset().into_iter().flatten().collect();
                let back2 = CyclicChain::from_generators(spec, n, &gens).unwrap();
                assert_eq!(back2, code, "genset roundtrip for {chain:?}");
            }
        }
    }

    #[test]
    fn membership_and_enumeration() {
        let spec = z(2, 2);
        let code = CyclicChain::new(spec, 3, vec![poly(spec, "1 1 1"), poly(spec, "1")]).unwrap();
        assert!(code.contains(&poly(spec, "1 1 1")));
        assert!(code.contains(&poly(spec, "2")), "2 = 2 * f_1 is in the ideal");
        assert!(!code.contains(&poly(spec, "1")), "1 is not in the ideal");
        let words: Vec<Poly> = code.enumerate(1 << 10).unwrap().collect();
        assert_eq!(words.len(), 16);
        let distinct: BTreeSet<String> = words.iter().map(|w| w.to_string()).collect();
        assert_eq!(distinct.len(), 16);
        assert!(matches!(code.enumerate(4), Err(Error::EnumerationTooLarge { .. })));
    }

    #[test]
    fn zero_and_full_codes() {
        let spec = z(2, 2);
        let zero = CyclicChain::zero(spec, 3).unwrap();
        assert!(zero.is_zero());
        assert_eq!(zero.size(), 1);
        let full = CyclicChain::full(spec, 3).unwrap();
        assert!(full.is_full());
        assert_eq!(full.size(), 64, "4^3 words");
        assert!(full.contains(&poly(spec, "1")));
    }

    #[test]
    fn constructor_errors() {
        let spec = z(2, 2);
        // Wrong chain length.
        assert!(matches!(
            CyclicChain::new(spec, 3, vec![poly(spec, "1 1 1")]),
            Err(Error::ChainViolation(_))
        ));
        // Broken divisibility: f_1 does not divide f_0.
        assert!(CyclicChain::new(spec, 3, vec![poly(spec, "1 1 1"), poly(spec, "3 1")]).is_err());
        // Length zero.
        assert!(CyclicChain::new(spec, 0, vec![]).is_err());
        // Length sharing a factor with p.
        assert!(CyclicChain::new(spec, 4, vec![poly(spec, "1"), poly(spec, "1")]).is_err());
    }
}
