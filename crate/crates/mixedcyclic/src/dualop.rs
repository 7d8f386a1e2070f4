//! Duality for mixed-alphabet additive cyclic codes.
//!
//! The ambient module carries the Z_{p^s}-valued inner product
//!
//!   <a, b> = p^{s-r} sum eps(u_i u'_i) + p^{s-r} sum eps(v_i v'_i) + sum w_i w'_i
//!
//! where the first two blocks multiply in Z_{p^r} and embed by eps (the
//! identity on representatives); the p^{s-r} weight makes that reading agree
//! with plain lifted arithmetic mod p^s. Duals are computed exactly: the
//! kernel of the generator matrix under this form, re-expressed in standard
//! form. The module also provides the chain-degree formula for |C^perp|, the
//! double-dual identity, self-orthogonality flags, and the bullet pairing
//! that encodes orthogonality against every simultaneous shift as a single
//! polynomial mod x^L - 1, L = lcm of the block lengths.

use crate::additivecode::TripleCode;
use crate::chainlinalg::{kernel_wrt_inner_product, span_eq, span_size};
use crate::polyring::{Poly, QuotientCtx};
use crate::ringcore::{MixedParams, MixedWord, RingSpec};
use crate::{Error, Result};

/// Weighted inner product of two mixed words, as an element of Z_{p^s}.
pub fn inner_product(params: &MixedParams, a: &MixedWord, b: &MixedWord) -> Result<u64> {
    for word in [a, b] {
        if word.block_u().len() != params.alpha()
            || word.block_v().len() != params.beta()
            || word.block_w().len() != params.gamma()
        {
            return Err(Error::InvalidParams(
                "inner product needs words with matching block lengths".into(),
            ));
        }
    }
    let mr = params.ring_r().modulus() as u128;
    let ms = params.ring_s().modulus() as u128;
    let weight = ms / mr;
    let mut acc: u128 = 0;
    for (x, y) in a.block_u().iter().zip(b.block_u()) {
        acc = (acc + weight * ((*x as u128 * *y as u128) % mr)) % ms;
    }
    for (x, y) in a.block_v().iter().zip(b.block_v()) {
        acc = (acc + weight * ((*x as u128 * *y as u128) % mr)) % ms;
    }
    for (x, y) in a.block_w().iter().zip(b.block_w()) {
        acc = (acc + (*x as u128 * *y as u128)) % ms;
    }
    Ok(acc as u64)
}

/// The dual code under the weighted inner product, in standard form.
///
/// The kernel of the generator matrix is computed exactly and fed through the
/// standard-form extractor. The dual of a shift-closed code is itself
/// shift-closed, and that is checked rather than assumed: the standard form
/// spans the shift closure of its input, so its size must equal the kernel's.
pub fn dual_code(c: &TripleCode) -> Result<TripleCode> {
    let kern = kernel_wrt_inner_product(&c.echelon().as_matrix());
    let dual = TripleCode::standard_form(c.params(), &kern.to_words())?;
    if dual.code_size() != span_size(&kern) {
        return Err(Error::VerificationFailed(
            "dual span is not closed under the simultaneous shift".into(),
        ));
    }
    Ok(dual)
}

/// |C^perp| from the chain degrees alone:
/// p^{sum_{i=1}^{r} i deg a^_i + sum_{j=1}^{r} j deg b^_j + sum_{k=1}^{s} k deg g^_k},
/// the complement of the code-size exponent inside r*alpha + r*beta + s*gamma.
pub fn dual_size(c: &TripleCode) -> u128 {
    let mut exp: u128 = 0;
    for chain in [c.a_chain(), c.b_chain(), c.g_chain()] {
        for (i, hat) in chain.hats().hats.iter().enumerate().skip(1) {
            let d = hat.degree().expect("hat polynomials divide x^n - 1 and are nonzero");
            exp += i as u128 * d as u128;
        }
    }
    (c.params().p() as u128).pow(exp as u32)
}

/// Span equality of a code and the dual of its dual.
pub fn double_dual_check(c: &TripleCode) -> Result<bool> {
    let dd = dual_code(&dual_code(c)?)?;
    Ok(span_eq(&dd.echelon().as_matrix(), &c.echelon().as_matrix()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DualityFlags {
    /// C is contained in its dual: every pair of codewords is orthogonal.
    pub self_orthogonal: bool,
    /// C equals its dual.
    pub self_dual: bool,
}

/// Self-orthogonality and self-duality, decided by membership of the code's
/// echelon rows in the computed dual.
pub fn self_dual_flags(c: &TripleCode) -> Result<DualityFlags> {
    let dual = dual_code(c)?;
    let inside = c
        .echelon()
        .as_matrix()
        .rows()
        .iter()
        .all(|row| dual.echelon().contains_flat(row));
    Ok(DualityFlags {
        self_orthogonal: inside,
        self_dual: inside && c.code_size() == dual.code_size(),
    })
}

/// Quotient ring Z_{p^s}[x]/(x^L - 1) shared by the bullet pairing, with
/// L = lcm of the nonzero block lengths (so each block length divides L).
pub struct BulletContext {
    params: MixedParams,
    period: usize,
    ctx: QuotientCtx,
}

impl BulletContext {
    pub fn new(params: &MixedParams) -> Result<BulletContext> {
        let period = params.shift_period();
        let ctx = QuotientCtx::new(params.ring_s(), period)?;
        Ok(BulletContext { params: *params, period, ctx })
    }

    pub fn params(&self) -> &MixedParams {
        &self.params
    }

    /// L = lcm of the nonzero block lengths.
    pub fn period(&self) -> usize {
        self.period
    }

    pub fn quotient(&self) -> &QuotientCtx {
        &self.ctx
    }
}

/// theta_{copies}(x^n) = 1 + x^n + x^{2n} + ... + x^{(copies-1) n}.
fn theta_at_xn(spec: RingSpec, copies: usize, n: usize) -> Poly {
    let mut coeffs = vec![0u64; (copies - 1) * n + 1];
    for m in 0..copies {
        coeffs[m * n] = 1;
    }
    Poly::from_coeffs(spec, coeffs)
}

/// The block's coefficients read as b(1/x) in Z_{p^s}[x]/(x^L - 1), i.e.
/// b_k lands on x^{(L - k) mod L}.
fn reversed_lift(spec: RingSpec, block: &[u64], period: usize) -> Poly {
    let mut coeffs = vec![0u64; period];
    for (k, &c) in block.iter().enumerate() {
        let e = if k == 0 { 0 } else { period - k };
        coeffs[e] = c;
    }
    Poly::from_coeffs(spec, coeffs)
}

/// One block's contribution to the bullet pairing:
/// scale * a(x) b*(x) theta_{L/n}(x^n) x^{L-1-deg b}, computed in the form
/// scale * a(x) b(1/x) theta_{L/n}(x^n) x^{L-1} — the reciprocal's degree
/// cancels against the exponent, which also totalizes the term at b = 0.
fn block_term(ctx: &QuotientCtx, period: usize, n: usize, scale: u64, a: &[u64], b: &[u64]) -> Poly {
    let spec = ctx.spec();
    if n == 0 {
        return Poly::zero(spec);
    }
    let lifted = Poly::from_coeffs(spec, a.to_vec());
    let rev = reversed_lift(spec, b, period);
    let theta = theta_at_xn(spec, period / n, n);
    let prod = ctx.mul(&ctx.mul(&lifted, &rev), &theta);
    ctx.reduce(&prod.mul_xk(period - 1)).scale(scale)
}

/// The bullet pairing of two mixed words: an element of Z_{p^s}[x]/(x^L - 1)
/// whose coefficient at x^{L-1-i} is the inner product of a with the
/// (L - i)-th shift of b. It vanishes exactly when a is orthogonal to every
/// simultaneous shift of b.
pub fn bullet(ctx: &BulletContext, a: &MixedWord, b: &MixedWord) -> Poly {
    let params = &ctx.params;
    let weight = params.ring_s().modulus() / params.ring_r().modulus();
    let t1 = block_term(&ctx.ctx, ctx.period, params.alpha(), weight, a.block_u(), b.block_u());
    let t2 = block_term(&ctx.ctx, ctx.period, params.beta(), weight, a.block_v(), b.block_v());
    let t3 = block_term(&ctx.ctx, ctx.period, params.gamma(), 1, a.block_w(), b.block_w());
    ctx.ctx.reduce(&t1.add(&t2).add(&t3))
}

/// Whether a is orthogonal to b and to all of b's simultaneous shifts.
///
/// Both sides are computed — the L direct inner products and the bullet
/// polynomial — and checked coefficient against coefficient (the inner
/// product with the i-th shift sits at x^{i-1}, the unshifted one at
/// x^{L-1}). A mismatch is reported as an error; it would mean the pairing
/// algebra itself is broken, never a property of the inputs.
pub fn orthogonal_all_shifts(params: &MixedParams, a: &MixedWord, b: &MixedWord) -> Result<bool> {
    let ctx = BulletContext::new(params)?;
    let bul = bullet(&ctx, a, b);
    let period = ctx.period();
    for i in 0..period {
        let direct = inner_product(params, a, &b.shift(i))?;
        let e = if i == 0 { period - 1 } else { i - 1 };
        if bul.coeff(e) != direct {
            return Err(Error::VerificationFailed("bullet identity violated".into()));
        }
    }
    Ok(bul.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::additivecode::{random_chain_code, random_code, word_from_polys};
    use crate::chainlinalg::{enumerate_span, GenMatrix};
    use crate::cycliccode::CyclicChain;
    use crate::polyring::parse_poly;
    use rand::{Rng, SeedableRng};

    fn p233() -> MixedParams {
        MixedParams::new(2, 1, 2, 3, 3, 3).unwrap()
    }

    /// The running example at (3,3,3) over Z_2/Z_4: a = 1+x+x^2, B zero,
    /// g = (1+x+x^2, 1), l = 0, l1 = 1, l2 = 1+x; 32 codewords.
    fn example_code(params: &MixedParams) -> TripleCode {
        let r2 = params.ring_r();
        let r4 = params.ring_s();
        TripleCode::build(
            params,
            vec![parse_poly(r2, "1 1 1").unwrap()],
            vec![Poly::xn_minus_1(r2, 3)],
            vec![parse_poly(r4, "1 1 1").unwrap(), Poly::one(r4)],
            Poly::zero(r2),
            Poly::one(r2),
            parse_poly(r2, "1 1").unwrap(),
        )
        .unwrap()
    }

    fn random_word(params: &MixedParams, rng: &mut impl Rng) -> MixedWord {
        let mr = params.ring_r().modulus();
        let ms = params.ring_s().modulus();
        let u = (0..params.alpha()).map(|_| rng.gen_range(0..mr)).collect();
        let v = (0..params.beta()).map(|_| rng.gen_range(0..mr)).collect();
        let w = (0..params.gamma()).map(|_| rng.gen_range(0..ms)).collect();
        MixedWord::new(params, u, v, w).unwrap()
    }

    fn ambient_words(params: &MixedParams) -> Vec<MixedWord> {
        let ident: Vec<Vec<u64>> = (0..params.len())
            .map(|i| {
                let mut row = vec![0u64; params.len()];
                row[i] = 1;
                row
            })
            .collect();
        let full = GenMatrix::new(params, ident).unwrap();
        enumerate_span(&full, 1 << 16).unwrap().collect()
    }

    #[test]
    fn inner_product_spot_values() {
        let params = p233();
        let zero = MixedWord::zero(&params);
        assert_eq!(inner_product(&params, &zero, &zero).unwrap(), 0);
        // A single first-block coordinate contributes with weight p^{s-r}.
        let e_u = MixedWord::new(&params, vec![1, 0, 0], vec![0; 3], vec![0; 3]).unwrap();
        assert_eq!(inner_product(&params, &e_u, &e_u).unwrap(), 2);
        // Third-block products are plain Z_4 products.
        let a = MixedWord::new(&params, vec![0; 3], vec![0; 3], vec![1, 0, 0]).unwrap();
        let b = MixedWord::new(&params, vec![0; 3], vec![0; 3], vec![3, 0, 0]).unwrap();
        assert_eq!(inner_product(&params, &a, &b).unwrap(), 3);
        // All-ones at (1,1,1): 2 + 2 + 1 = 1 in Z_4.
        let tiny = MixedParams::new(2, 1, 2, 1, 1, 1).unwrap();
        let ones = MixedWord::new(&tiny, vec![1], vec![1], vec![1]).unwrap();
        assert_eq!(inner_product(&tiny, &ones, &ones).unwrap(), 1);
        // Length mismatch is rejected.
        assert!(inner_product(&tiny, &ones, &MixedWord::zero(&params)).is_err());
    }

    #[test]
    fn dual_of_worked_example() {
        let params = p233();
        let code = example_code(&params);
        let dual = dual_code(&code).unwrap();
        assert_eq!(dual.code_size(), 128, "dual of the 32-word example has 2^7 words");
        assert_eq!(dual_size(&code), 128, "chain-degree formula agrees");
        assert_eq!(dual_size(&dual), 32, "formula applied to the dual gives |C|");
        assert_eq!(
            code.code_size() * dual.code_size(),
            params.ambient_size(),
            "|C||C_dual| covers the ambient module"
        );
        // Exhaustive oracle: the dual is exactly the orthogonal set.
        let members: Vec<MixedWord> = code.enumerate(1 << 10).unwrap().collect();
        for cand in ambient_words(&params) {
            let orth = members
                .iter()
                .all(|m| inner_product(&params, m, &cand).unwrap() == 0);
            assert_eq!(dual.contains(&cand), orth, "dual membership is orthogonality");
        }
        // Shift closure, checked on the dual's generators.
        for g in dual.generators() {
            assert!(dual.contains(&g.shift(1)), "dual generators shift inside the dual");
        }
    }

    #[test]
    fn dual_of_zero_and_full() {
        let params = p233();
        let r2 = params.ring_r();
        let r4 = params.ring_s();
        let zero = TripleCode::build(
            &params,
            vec![Poly::xn_minus_1(r2, 3)],
            vec![Poly::xn_minus_1(r2, 3)],
            vec![Poly::xn_minus_1(r4, 3), Poly::xn_minus_1(r4, 3)],
            Poly::zero(r2),
            Poly::zero(r2),
            Poly::zero(r2),
        )
        .unwrap();
        let full = TripleCode::build(
            &params,
            vec![Poly::one(r2)],
            vec![Poly::one(r2)],
            vec![Poly::one(r4), Poly::one(r4)],
            Poly::zero(r2),
            Poly::zero(r2),
            Poly::zero(r2),
        )
        .unwrap();
        assert_eq!(dual_size(&zero), params.ambient_size());
        let dzero = dual_code(&zero).unwrap();
        assert_eq!(dzero.code_size(), params.ambient_size(), "dual of zero is everything");
        let dfull = dual_code(&full).unwrap();
        assert_eq!(dfull.code_size(), 1, "dual of the ambient module is zero");
        assert!(double_dual_check(&zero).unwrap());
        assert!(double_dual_check(&full).unwrap());
    }

    #[test]
    fn double_dual_on_random_codes() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xC0DE);
        for params in [MixedParams::new(2, 1, 2, 1, 1, 7).unwrap(), p233()] {
            for _ in 0..10 {
                let code = random_code(&params, &mut rng);
                assert!(double_dual_check(&code).unwrap(), "double dual returns the code");
                assert_eq!(
                    dual_size(&code),
                    dual_code(&code).unwrap().code_size(),
                    "formula matches the computed dual"
                );
            }
        }
        assert!(double_dual_check(&example_code(&p233())).unwrap());
    }

    #[test]
    fn self_duality_flags() {
        let params = p233();
        let r2 = params.ring_r();
        let r4 = params.ring_s();
        let zero = TripleCode::build(
            &params,
            vec![Poly::xn_minus_1(r2, 3)],
            vec![Poly::xn_minus_1(r2, 3)],
            vec![Poly::xn_minus_1(r4, 3), Poly::xn_minus_1(r4, 3)],
            Poly::zero(r2),
            Poly::zero(r2),
            Poly::zero(r2),
        )
        .unwrap();
        let flags = self_dual_flags(&zero).unwrap();
        assert!(flags.self_orthogonal, "zero code is orthogonal to everything");
        assert!(!flags.self_dual, "zero code is smaller than its dual");
        let full = TripleCode::build(
            &params,
            vec![Poly::one(r2)],
            vec![Poly::one(r2)],
            vec![Poly::one(r4), Poly::one(r4)],
            Poly::zero(r2),
            Poly::zero(r2),
            Poly::zero(r2),
        )
        .unwrap();
        let flags = self_dual_flags(&full).unwrap();
        assert!(!flags.self_orthogonal, "the ambient module contains non-isotropic words");
        assert!(!flags.self_dual);

        // Brute-force oracle on a 16-element ambient module.
        let tiny = MixedParams::new(2, 1, 2, 1, 1, 1).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let code = random_code(&tiny, &mut rng);
            let members: Vec<MixedWord> = code.enumerate(16).unwrap().collect();
            let orth_all = members.iter().all(|a| {
                members
                    .iter()
                    .all(|b| inner_product(&tiny, a, b).unwrap() == 0)
            });
            let flags = self_dual_flags(&code).unwrap();
            assert_eq!(flags.self_orthogonal, orth_all, "flag matches pairwise oracle");
            assert_eq!(
                flags.self_dual,
                orth_all && code.code_size() * code.code_size() == tiny.ambient_size(),
                "self-duality is self-orthogonality at square-root size"
            );
        }
    }

    #[test]
    fn bullet_matches_shifted_inner_products() {
        // Deterministic direction check: u = x, w = 1 on a length-3 block.
        // bullet = 2 x^3 = 2, and the only nonzero inner product is with the
        // first shift of w, which the constant coefficient x^{1-1} reports.
        let line = MixedParams::new(2, 1, 2, 3, 1, 1).unwrap();
        let u = MixedWord::new(&line, vec![0, 1, 0], vec![0], vec![0]).unwrap();
        let w = MixedWord::new(&line, vec![1, 0, 0], vec![0], vec![0]).unwrap();
        let ctx = BulletContext::new(&line).unwrap();
        assert_eq!(bullet(&ctx, &u, &w), Poly::constant(line.ring_s(), 2));
        assert_eq!(inner_product(&line, &u, &w.shift(1)).unwrap(), 2);
        assert!(!orthogonal_all_shifts(&line, &u, &w).unwrap());

        // The identity holds coefficient-by-coefficient on random pairs; any
        // mismatch surfaces as the "bullet identity violated" error.
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for params in [
            p233(),
            MixedParams::new(2, 1, 1, 3, 1, 3).unwrap(),
            MixedParams::new(3, 1, 2, 2, 2, 2).unwrap(),
            MixedParams::new(2, 1, 2, 3, 3, 5).unwrap(),
        ] {
            for _ in 0..40 {
                let a = random_word(&params, &mut rng);
                let b = random_word(&params, &mut rng);
                let claim = orthogonal_all_shifts(&params, &a, &b).unwrap();
                let direct = (0..params.shift_period())
                    .all(|i| inner_product(&params, &a, &b.shift(i)).unwrap() == 0);
                assert_eq!(claim, direct, "bullet vanishing equals all-shift orthogonality");
            }
        }
    }

    #[test]
    fn bullet_is_bilinear() {
        let params = p233();
        let ctx = BulletContext::new(&params).unwrap();
        let q = ctx.quotient();
        let x = Poly::x(params.ring_s());
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for _ in 0..25 {
            let a = random_word(&params, &mut rng);
            let a2 = random_word(&params, &mut rng);
            let b = random_word(&params, &mut rng);
            assert_eq!(
                bullet(&ctx, &a.add(&params, &a2), &b),
                bullet(&ctx, &a, &b).add(&bullet(&ctx, &a2, &b)),
                "additive in the first argument"
            );
            assert_eq!(
                bullet(&ctx, &b, &a.add(&params, &a2)),
                bullet(&ctx, &b, &a).add(&bullet(&ctx, &b, &a2)),
                "additive in the second argument"
            );
            // Shifting the first argument multiplies by x, the second by x^{-1}.
            assert_eq!(
                bullet(&ctx, &a.shift(1), &b),
                q.mul(&x, &bullet(&ctx, &a, &b)),
                "first-argument shift acts as x"
            );
            assert_eq!(
                q.mul(&x, &bullet(&ctx, &a, &b.shift(1))),
                bullet(&ctx, &a, &b),
                "second-argument shift acts as 1/x"
            );
        }
    }

    #[test]
    fn generators_of_335_example_are_orthogonal() {
        let params = MixedParams::new(2, 1, 2, 3, 3, 5).unwrap();
        let r2 = params.ring_r();
        let r4 = params.ring_s();
        let one_x = parse_poly(r2, "1 1").unwrap();
        let w1 = word_from_polys(&params, &one_x, &one_x, &Poly::zero(r4));
        let w2 = word_from_polys(
            &params,
            &Poly::zero(r2),
            &Poly::zero(r2),
            &Poly::theta(r4, 5).add(&Poly::constant(r4, 2)),
        );
        // Blocks never overlap, so every shift pairing vanishes; the bullet
        // polynomial confirms it over the L = 15 quotient.
        assert!(orthogonal_all_shifts(&params, &w1, &w2).unwrap());
        assert!(orthogonal_all_shifts(&params, &w2, &w1).unwrap());
        let ctx = BulletContext::new(&params).unwrap();
        assert_eq!(ctx.period(), 15);
        assert!(bullet(&ctx, &w1, &w2).is_zero());
    }

    #[test]
    fn dual_members_orthogonal_to_all_generators() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        for params in [p233(), MixedParams::new(2, 1, 2, 1, 1, 7).unwrap()] {
            for _ in 0..5 {
                let code = random_code(&params, &mut rng);
                let dual = dual_code(&code).unwrap();
                let sample: Vec<MixedWord> =
                    dual.enumerate(1 << 16).unwrap().take(12).collect();
                for g in code.generators() {
                    for m in &sample {
                        assert!(
                            orthogonal_all_shifts(&params, &g, m).unwrap(),
                            "dual members are orthogonal to every generator shift"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn dual_of_separable_factors_blockwise() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        let chain_dual = |c: &CyclicChain| -> CyclicChain {
            let kern = kernel_wrt_inner_product(&c.gen_matrix());
            let ctx = QuotientCtx::new(c.spec(), c.n()).unwrap();
            let polys: Vec<Poly> = kern.rows().iter().map(|r| ctx.poly_from_vec(r)).collect();
            CyclicChain::from_generators(c.spec(), c.n(), &polys).unwrap()
        };
        for params in [p233(), MixedParams::new(3, 1, 2, 2, 2, 4).unwrap()] {
            for _ in 0..8 {
                let code = random_chain_code(&params, &mut rng);
                assert!(code.is_separable(), "chain codes are direct products");
                let dual = dual_code(&code).unwrap();
                assert!(dual.is_separable(), "dual of separable is separable");
                let (pa, pb, pg) = dual.projections().unwrap();
                assert_eq!(pa, chain_dual(code.a_chain()), "first block dualizes alone");
                assert_eq!(pb, chain_dual(code.b_chain()), "second block dualizes alone");
                assert_eq!(pg, chain_dual(code.g_chain()), "third block dualizes alone");
            }
        }
    }
}
