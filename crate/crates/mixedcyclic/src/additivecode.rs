//! Additive cyclic codes over the mixed alphabet
//! Z_{p^r}^alpha x Z_{p^r}^beta x Z_{p^s}^gamma (r <= s).
//!
//! A code is a subgroup closed under the simultaneous cyclic shift of the
//! three blocks and under the scalar action of Z_{p^s} (scalars act through
//! the reduction mod p^r on the first two blocks). Every such code has a
//! standard-form generating triple
//!
//!   (A | 0 | 0),  (l | B | 0),  (l1 | l2 | G)
//!
//! where A, B come from divisor chains over Z_{p^r} (lengths alpha and beta),
//! G from a divisor chain over Z_{p^s} (length gamma), and the mixing
//! polynomials satisfy degree bounds (deg l, deg l1 < deg a_0, deg l2 <
//! deg b_0) plus three compatibility conditions that make the triple close
//! under shifting. The code size is the product of the three chain sizes.

use crate::chainlinalg::{
    echelonize, enumerate_span, solve, span_eq, zero_block_submodule, Echelon, GenMatrix, SpanIter,
};
use crate::cycliccode::CyclicChain;
use crate::polyring::{Poly, QuotientCtx};
use crate::ringcore::{star_scalar, MixedParams, MixedWord};
use crate::{Error, Result};

/// An additive cyclic code in standard form.
#[derive(Debug, Clone)]
pub struct TripleCode {
    params: MixedParams,
    a_chain: CyclicChain,
    b_chain: CyclicChain,
    g_chain: CyclicChain,
    l: Poly,
    l1: Poly,
    l2: Poly,
    echelon: Echelon,
}

impl PartialEq for TripleCode {
    fn eq(&self, other: &Self) -> bool {
        self.params == other.params
            && self.a_chain == other.a_chain
            && self.b_chain == other.b_chain
            && self.g_chain == other.g_chain
            && self.l == other.l
            && self.l1 == other.l1
            && self.l2 == other.l2
    }
}
impl Eq for TripleCode {}

fn ctx_alpha(params: &MixedParams) -> QuotientCtx {
    QuotientCtx::new(params.ring_r(), params.alpha()).expect("alpha is coprime to p")
}
fn ctx_beta(params: &MixedParams) -> QuotientCtx {
    QuotientCtx::new(params.ring_r(), params.beta()).expect("beta is coprime to p")
}
fn ctx_gamma(params: &MixedParams) -> QuotientCtx {
    QuotientCtx::new(params.ring_s(), params.gamma()).expect("gamma is coprime to p")
}

/// Builds a word from its three block polynomials (reduced mod the block
/// moduli first).
pub fn word_from_polys(params: &MixedParams, u: &Poly, v: &Poly, w: &Poly) -> MixedWord {
    let ca = ctx_alpha(params);
    let cb = ctx_beta(params);
    let cg = ctx_gamma(params);
    MixedWord::new(params, ca.coeff_vec(u), cb.coeff_vec(v), cg.coeff_vec(w))
        .expect("block coefficient vectors match the parameters")
}

/// Applies a polynomial in Z_{p^s}[x] to a word: the first two blocks are
/// multiplied by the mod-p^r reduction of q, the third by q itself, each in
/// its own quotient ring. Shifting is q = x; scalars are constants.
pub fn star_poly(params: &MixedParams, q: &Poly, word: &MixedWord) -> MixedWord {
    assert_eq!(q.spec(), params.ring_s(), "star polynomials live over Z_{{p^s}}");
    let qr = q.reduce_to(params.ring_r());
    let ca = ctx_alpha(params);
    let cb = ctx_beta(params);
    let cg = ctx_gamma(params);
    let u = ca.mul(&ca.poly_from_vec(word.block_u()), &qr);
    let v = cb.mul(&cb.poly_from_vec(word.block_v()), &qr);
    let w = cg.mul(&cg.poly_from_vec(word.block_w()), q);
    MixedWord::new(params, ca.coeff_vec(&u), cb.coeff_vec(&v), cg.coeff_vec(&w))
        .expect("block products match the parameters")
}

/// All cyclic shifts of the given words, 0 through shift_period - 1 (the span
/// of these rows is the smallest shift-closed module containing the words).
fn shift_closed_rows(params: &MixedParams, words: &[MixedWord]) -> Vec<Vec<u64>> {
    let period = params.shift_period();
    let mut rows = Vec::with_capacity(words.len() * period);
    for w in words {
        let mut cur = w.clone();
        for _ in 0..period {
            rows.push(cur.to_flat());
            cur = cur.shift(1);
        }
    }
    rows
}

/// Minimal generating set of a code, grouped by source generator and layer.
#[derive(Debug, Clone)]
pub struct MinGenset {
    /// Layer i < r: shifts of (prod_{t<i} hat a_t) * (A|0|0).
    pub a_layers: Vec<Vec<MixedWord>>,
    /// Layer j < r: shifts of (prod_{t<j} hat b_t) * (l|B|0).
    pub b_layers: Vec<Vec<MixedWord>>,
    /// Layer k < s: shifts of (prod_{t<k} hat g_t) * (l1|l2|G).
    pub g_layers: Vec<Vec<MixedWord>>,
}

impl MinGenset {
    pub fn all(&self) -> Vec<MixedWord> {
        self.a_layers
            .iter()
            .chain(&self.b_layers)
            .chain(&self.g_layers)
            .flatten()
            .cloned()
            .collect()
    }

    pub fn total(&self) -> usize {
        self.a_layers.iter().chain(&self.b_layers).chain(&self.g_layers).map(Vec::len).sum()
    }
}

/// Separability diagnosis. The fields render the equivalent
/// characterizations of separability (the direct-product definition; mixing
/// polynomials inside the chain codes; projections equal to the chain codes;
/// unmixed generators spanning), plus the size identity and the canonical
/// form; all must always agree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeparabilityReport {
    /// |C| equals the product of the three projection sizes.
    pub size_product_match: bool,
    /// C equals the direct product of its projections as a span.
    pub direct_product_span: bool,
    /// The stored l and l1 lie in the first-block chain code and l2 in the
    /// second-block one.
    pub mixing_in_chains: bool,
    /// The three projections equal the stored chain codes.
    pub projections_match_chains: bool,
    /// Dropping the mixing polynomials leaves the span unchanged: the code is
    /// already generated by (A|0|0), (0|B|0), (0|0|G).
    pub unmixed_generators_span: bool,
    /// The canonical standard form has l = l1 = l2 = 0.
    pub canonical_mixing_zero: bool,
}

impl SeparabilityReport {
    pub fn is_separable(&self) -> bool {
        self.size_product_match
            && self.direct_product_span
            && self.mixing_in_chains
            && self.projections_match_chains
            && self.unmixed_generators_span
            && self.canonical_mixing_zero
    }

    pub fn consistent(&self) -> bool {
        let flags = [
            self.size_product_match,
            self.direct_product_span,
            self.mixing_in_chains,
            self.projections_match_chains,
            self.unmixed_generators_span,
            self.canonical_mixing_zero,
        ];
        flags.iter().all(|&f| f == flags[0])
    }
}

impl TripleCode {
    /// Builds a code from standard-form data, validating the degree bounds
    /// and the three compatibility conditions.
    pub fn build(
        params: &MixedParams,
        a_chain: Vec<Poly>,
        b_chain: Vec<Poly>,
        g_chain: Vec<Poly>,
        l: Poly,
        l1: Poly,
        l2: Poly,
    ) -> Result<TripleCode> {
        let rr = params.ring_r();
        let rs = params.ring_s();
        let a_chain = CyclicChain::new(rr, params.alpha(), a_chain)?;
        let b_chain = CyclicChain::new(rr, params.beta(), b_chain)?;
        let g_chain = CyclicChain::new(rs, params.gamma(), g_chain)?;
        for (name, poly) in [("l", &l), ("l1", &l1), ("l2", &l2)] {
            if poly.spec() != rr {
                return Err(Error::RingMismatch(format!(
                    "{name} must live over Z_{}",
                    rr.modulus()
                )));
            }
        }
        // Degree bounds: deg l, deg l1 < deg a_0 and deg l2 < deg b_0.
        let deg_a0 = a_chain.chain()[0].degree_i64();
        let deg_b0 = b_chain.chain()[0].degree_i64();
        for (name, poly, bound) in [("l", &l, deg_a0), ("l1", &l1, deg_a0), ("l2", &l2, deg_b0)] {
            if poly.degree_i64() >= bound {
                return Err(Error::DegreeViolation(format!(
                    "deg {name} = {} must be below {bound}",
                    poly.degree_i64()
                )));
            }
        }
        let ca = ctx_alpha(params);
        let cb = ctx_beta(params);
        // Condition (i): ((x^beta - 1)/b_{r-1}) l lies in the code of the
        // a-chain.
        let h_b = b_chain.modulus_complement();
        if !a_chain.contains(&ca.reduce(&h_b.mul(&l))) {
            return Err(Error::DivisibilityViolation(
                "((x^beta - 1)/b_{r-1}) l is outside the first-block code".into(),
            ));
        }
        // Condition (ii): phi((x^gamma - 1)/g_{s-1}) l2 lies in the code of
        // the b-chain.
        let h_g = g_chain.modulus_complement().reduce_to(rr);
        if !b_chain.contains(&cb.reduce(&h_g.mul(&l2))) {
            return Err(Error::DivisibilityViolation(
                "phi((x^gamma - 1)/g_{s-1}) l2 is outside the second-block code".into(),
            ));
        }
        // Condition (iii): some Q, lambda over Z_{p^r} satisfy
        //   Q l - lambda A = phi(h_g) l1  (mod x^alpha - 1)
        //   Q B           = phi(h_g) l2  (mod x^beta - 1).
        // With condition (i) already verified, Q can be restricted to degree
        // < beta: x^i and x^{i mod beta} differ by a multiple of (x^beta - 1) l,
        // which condition (i) places inside the first-block code.
        let poly_a = a_chain.single_generator();
        let poly_b = b_chain.single_generator();
        if !joint_condition_holds(params, &poly_a, &poly_b, &l, &l1, &l2, &h_g) {
            return Err(Error::DivisibilityViolation(
                "no multiplier pair matches phi(h_g) l1 and phi(h_g) l2 jointly".into(),
            ));
        }
        let code = TripleCode::assemble(params, a_chain, b_chain, g_chain, l, l1, l2);
        debug_assert_eq!(
            code.code_size(),
            code.echelon.span_size(),
            "chain size product must equal the span size"
        );
        Ok(code)
    }

    fn assemble(
        params: &MixedParams,
        a_chain: CyclicChain,
        b_chain: CyclicChain,
        g_chain: CyclicChain,
        l: Poly,
        l1: Poly,
        l2: Poly,
    ) -> TripleCode {
        let mut code = TripleCode {
            params: *params,
            a_chain,
            b_chain,
            g_chain,
            l,
            l1,
            l2,
            echelon: echelonize(&GenMatrix::new(params, vec![]).expect("empty matrix")),
        };
        let rows = shift_closed_rows(params, &code.generators());
        code.echelon = echelonize(&GenMatrix::new(params, rows).expect("rows match parameters"));
        code
    }

    /// Recovers the canonical standard form of the span of the given words
    /// (closed under shifts). The result is deterministic; running it on the
    /// rows of an existing code canonicalizes that code.
    pub fn standard_form(params: &MixedParams, words: &[MixedWord]) -> Result<TripleCode> {
        let rr = params.ring_r();
        let rs = params.ring_s();
        let (alpha, beta, gamma) = (params.alpha(), params.beta(), params.gamma());
        let ca = ctx_alpha(params);
        let cb = ctx_beta(params);
        let cg = ctx_gamma(params);
        let full = GenMatrix::new(params, shift_closed_rows(params, words))?;
        let ech = echelonize(&full);
        let span = ech.as_matrix();

        // Third-block projection and its chain.
        let g_polys: Vec<Poly> = span.rows().iter().map(|r| cg.poly_from_vec(&r[alpha + beta..])).collect();
        let g_chain = CyclicChain::from_generators(rs, gamma, &g_polys)?;
        let poly_g = g_chain.single_generator();
        // Preimage of G: a combination of span rows whose third block is G.
        let sub_params = MixedParams::new(params.p(), params.s(), params.s(), 0, 0, gamma)?;
        let sub_rows: Vec<Vec<u64>> = span.rows().iter().map(|r| r[alpha + beta..].to_vec()).collect();
        let sub = GenMatrix::new(&sub_params, sub_rows)?;
        let target = MixedWord::from_flat(&sub_params, &cg.coeff_vec(&poly_g))?;
        let coeffs = solve(&sub, &target).ok_or_else(|| {
            Error::VerificationFailed("third-block generator must lift into the span".into())
        })?;
        let third = combine(params, span.rows(), &coeffs);
        let mut l1 = ca.poly_from_vec(third.block_u());
        let mut l2 = cb.poly_from_vec(third.block_v());

        // Kernel of the third-block projection, then the second block.
        let kern = zero_block_submodule(&span, alpha + beta..alpha + beta + gamma);
        let b_polys: Vec<Poly> = kern.rows().iter().map(|r| cb.poly_from_vec(&r[alpha..alpha + beta])).collect();
        let b_chain = CyclicChain::from_generators(rr, beta, &b_polys)?;
        let poly_b = b_chain.single_generator();
        let subb_params = MixedParams::new(params.p(), params.r(), params.r(), 0, 0, beta)?;
        let subb_rows: Vec<Vec<u64>> = kern.rows().iter().map(|r| r[alpha..alpha + beta].to_vec()).collect();
        let subb = GenMatrix::new(&subb_params, subb_rows)?;
        let targetb = MixedWord::from_flat(&subb_params, &cb.coeff_vec(&poly_b))?;
        let coeffsb = solve(&subb, &targetb).ok_or_else(|| {
            Error::VerificationFailed("second-block generator must lift into the kernel".into())
        })?;
        let second = combine(params, kern.rows(), &coeffsb);
        let mut l = ca.poly_from_vec(second.block_u());

        // Kernel of both projections: the pure first-block part.
        let kern2 = zero_block_submodule(&kern, alpha..alpha + beta + gamma);
        let a_polys: Vec<Poly> = kern2.rows().iter().map(|r| ca.poly_from_vec(&r[..alpha])).collect();
        let a_chain = CyclicChain::from_generators(rr, alpha, &a_polys)?;

        // Canonicalize the mixing polynomials. Division uses the unreduced
        // generator representatives (degree deg a_0 resp. deg b_0, unit
        // leading coefficient), which enforces the degree bounds directly.
        let a_rep = a_chain.generator_rep();
        let b_rep = b_chain.generator_rep();
        // l: reduce mod A, then zero it when it already lies in the
        // first-block code (subtracting q(x) * (A|0|0) only touches block 1).
        let (_, lr) = ca.reduce(&l).divmod(&a_rep)?;
        l = if a_chain.contains(&lr) { Poly::zero(rr) } else { lr };
        // l2: reduce mod B; the quotient drags q2 * l out of l1.
        let (q2, l2r) = cb.reduce(&l2).divmod(&b_rep)?;
        l1 = ca.reduce(&l1.sub(&ca.mul(&q2, &l)));
        l2 = l2r;
        // If the remainder still lies in the second-block code, eliminate it
        // with a witness multiplier mu (l2 = mu B mod x^beta - 1) and adjust l1.
        if !l2.is_zero() && b_chain.contains(&l2) {
            let wit_rows: Vec<Vec<u64>> = {
                let mut rows = Vec::with_capacity(beta);
                let mut cur = cb.reduce(&poly_b);
                for _ in 0..beta {
                    rows.push(cb.coeff_vec(&cur));
                    cur = cb.shift(&cur);
                }
                rows
            };
            let wit = GenMatrix::new(&subb_params, wit_rows)?;
            let targ = MixedWord::from_flat(&subb_params, &cb.coeff_vec(&l2))?;
            if let Some(mu) = solve(&wit, &targ) {
                let mu_poly = Poly::from_coeffs(rr, mu);
                l1 = ca.reduce(&l1.sub(&ca.mul(&mu_poly, &l)));
                l2 = Poly::zero(rr);
            }
        }
        // l1: reduce mod A and zero when inside plain multiples of the
        // first-block generator.
        let (_, l1r) = ca.reduce(&l1).divmod(&a_rep)?;
        l1 = if a_chain.contains(&l1r) { Poly::zero(rr) } else { l1r };

        let code = TripleCode::build(
            params,
            a_chain.chain().to_vec(),
            b_chain.chain().to_vec(),
            g_chain.chain().to_vec(),
            l,
            l1,
            l2,
        )?;
        // Self-check: the rebuilt code must span exactly the input module.
        if !span_eq(&code.echelon.as_matrix(), &span) {
            return Err(Error::VerificationFailed(
                "standard form does not regenerate the input span".into(),
            ));
        }
        Ok(code)
    }

    pub fn params(&self) -> &MixedParams {
        &self.params
    }

    pub fn a_chain(&self) -> &CyclicChain {
        &self.a_chain
    }

    pub fn b_chain(&self) -> &CyclicChain {
        &self.b_chain
    }

    pub fn g_chain(&self) -> &CyclicChain {
        &self.g_chain
    }

    pub fn l(&self) -> &Poly {
        &self.l
    }

    pub fn l1(&self) -> &Poly {
        &self.l1
    }

    pub fn l2(&self) -> &Poly {
        &self.l2
    }

    pub fn poly_a(&self) -> Poly {
        self.a_chain.single_generator()
    }

    pub fn poly_b(&self) -> Poly {
        self.b_chain.single_generator()
    }

    pub fn poly_g(&self) -> Poly {
        self.g_chain.single_generator()
    }

    /// The standard generating triple (A|0|0), (l|B|0), (l1|l2|G).
    pub fn generators(&self) -> Vec<MixedWord> {
        let rr = self.params.ring_r();
        let zero_r = Poly::zero(rr);
        let zero_s = Poly::zero(self.params.ring_s());
        vec![
            word_from_polys(&self.params, &self.poly_a(), &zero_r, &zero_s),
            word_from_polys(&self.params, &self.l, &self.poly_b(), &zero_s),
            word_from_polys(&self.params, &self.l1, &self.l2, &self.poly_g()),
        ]
    }

    /// Shift-closed generator matrix of the code.
    pub fn gen_matrix(&self) -> GenMatrix {
        GenMatrix::new(&self.params, shift_closed_rows(&self.params, &self.generators()))
            .expect("rows match parameters")
    }

    pub fn echelon(&self) -> &Echelon {
        &self.echelon
    }

    /// |C| = product of the three chain sizes.
    pub fn code_size(&self) -> u128 {
        self.a_chain
            .size()
            .checked_mul(self.b_chain.size())
            .and_then(|x| x.checked_mul(self.g_chain.size()))
            .expect("code size fits in u128")
    }

    pub fn contains(&self, word: &MixedWord) -> bool {
        self.echelon.contains(word)
    }

    /// Streams every codeword; errors when |C| exceeds `cap`.
    pub fn enumerate(&self, cap: u128) -> Result<SpanIter> {
        enumerate_span(&self.echelon.as_matrix(), cap)
    }

    /// Minimal generating set: layer i of generator block X holds the shifts
    /// x^m (prod_{t<i} hat x_t) * gen for m < deg hat x_i. The union spans the
    /// code and has sum-of-degrees many elements, the minimum possible.
    pub fn min_genset(&self) -> MinGenset {
        let rs = self.params.ring_s();
        let gens = self.generators();
        let layered = |chain: &CyclicChain, gen: &MixedWord, depth: usize| -> Vec<Vec<MixedWord>> {
            let mut out = Vec::with_capacity(depth);
            let mut prefix = Poly::one(rs);
            for k in 0..depth {
                let hat = &chain.hats().hats[k];
                let base = star_poly(&self.params, &prefix, gen);
                let dk = hat.degree_i64().max(0) as usize;
                let mut layer = Vec::with_capacity(dk);
                let mut cur = base;
                for _ in 0..dk {
                    layer.push(cur.clone());
                    cur = cur.shift(1);
                }
                out.push(layer);
                prefix = prefix.mul(&hat.lift_to(rs));
            }
            out
        };
        MinGenset {
            a_layers: layered(&self.a_chain, &gens[0], self.params.r() as usize),
            b_layers: layered(&self.b_chain, &gens[1], self.params.r() as usize),
            g_layers: layered(&self.g_chain, &gens[2], self.params.s() as usize),
        }
    }

    /// The three block projections of the whole code, as cyclic codes:
    /// first block <A, l, l1>, second <B, l2>, third <G>.
    pub fn projections(&self) -> Result<(CyclicChain, CyclicChain, CyclicChain)> {
        let (alpha, beta) = (self.params.alpha(), self.params.beta());
        let ca = ctx_alpha(&self.params);
        let cb = ctx_beta(&self.params);
        let cg = ctx_gamma(&self.params);
        let rows = self.echelon.rows();
        let pa: Vec<Poly> = rows.iter().map(|r| ca.poly_from_vec(&r[..alpha])).collect();
        let pb: Vec<Poly> = rows.iter().map(|r| cb.poly_from_vec(&r[alpha..alpha + beta])).collect();
        let pg: Vec<Poly> = rows.iter().map(|r| cg.poly_from_vec(&r[alpha + beta..])).collect();
        Ok((
            CyclicChain::from_generators(self.params.ring_r(), alpha, &pa)?,
            CyclicChain::from_generators(self.params.ring_r(), beta, &pb)?,
            CyclicChain::from_generators(self.params.ring_s(), self.params.gamma(), &pg)?,
        ))
    }

    /// Canonical standard form of this code's span.
    pub fn canonical(&self) -> Result<TripleCode> {
        let words: Vec<MixedWord> = self
            .echelon
            .rows()
            .iter()
            .map(|r| MixedWord::from_flat(&self.params, r).expect("rows match parameters"))
            .collect();
        TripleCode::standard_form(&self.params, &words)
    }

    /// True when the code is the direct product of its three projections.
    pub fn is_separable(&self) -> bool {
        let report = self.separability_report().expect("separability analysis succeeds");
        report.is_separable()
    }

    /// Evaluates the three equivalent separability criteria independently.
    pub fn separability_report(&self) -> Result<SeparabilityReport> {
        let (pa, pb, pg) = self.projections()?;
        let prod_size = pa
            .size()
            .checked_mul(pb.size())
            .and_then(|x| x.checked_mul(pg.size()))
            .expect("product size fits in u128");
        let size_product_match = self.code_size() == prod_size;

        let product = self.block_diagonal_span(&pa, &pb, &pg)?;
        let direct_product_span = span_eq(&self.echelon.as_matrix(), &product);

        let mixing_in_chains = self.a_chain.contains(&self.l)
            && self.a_chain.contains(&self.l1)
            && self.b_chain.contains(&self.l2);

        let projections_match_chains =
            pa == self.a_chain && pb == self.b_chain && pg == self.g_chain;

        let unmixed = self.block_diagonal_span(&self.a_chain, &self.b_chain, &self.g_chain)?;
        let unmixed_generators_span = span_eq(&self.echelon.as_matrix(), &unmixed);

        let canon = self.canonical()?;
        let canonical_mixing_zero =
            canon.l.is_zero() && canon.l1.is_zero() && canon.l2.is_zero();

        Ok(SeparabilityReport {
            size_product_match,
            direct_product_span,
            mixing_in_chains,
            projections_match_chains,
            unmixed_generators_span,
            canonical_mixing_zero,
        })
    }

    /// Block-diagonal generator matrix of the product code ca x cb x cg.
    fn block_diagonal_span(
        &self,
        ca: &CyclicChain,
        cb: &CyclicChain,
        cg: &CyclicChain,
    ) -> Result<GenMatrix> {
        let (alpha, beta, gamma) = (self.params.alpha(), self.params.beta(), self.params.gamma());
        let n = self.params.len();
        let mut rows = Vec::new();
        for r in ca.echelon().rows() {
            let mut row = vec![0u64; n];
            row[..alpha].copy_from_slice(&r[..]);
            rows.push(row);
        }
        for r in cb.echelon().rows() {
            let mut row = vec![0u64; n];
            row[alpha..alpha + beta].copy_from_slice(&r[..]);
            rows.push(row);
        }
        for r in cg.echelon().rows() {
            let mut row = vec![0u64; n];
            row[alpha + beta..alpha + beta + gamma].copy_from_slice(&r[..]);
            rows.push(row);
        }
        GenMatrix::new(&self.params, rows)
    }

    /// Classifies the canonical form of the code into the fourteen families,
    /// keyed by which chains are nontrivial and which mixing polynomials
    /// vanish. The zero code belongs to no family and is rejected.
    pub fn classify(&self) -> Result<u8> {
        let c = self.canonical()?;
        let na = !c.a_chain.is_zero();
        let nb = !c.b_chain.is_zero();
        let ng = !c.g_chain.is_zero();
        let zl = c.l.is_zero();
        let zl1 = c.l1.is_zero();
        let zl2 = c.l2.is_zero();
        if !na && !nb && !ng {
            return Err(Error::VerificationFailed(
                "the zero code belongs to none of the fourteen families".into(),
            ));
        }
        let case = if na && !nb && !ng && zl && zl1 && zl2 {
            1
        } else if !na && nb && !ng && zl && zl1 && zl2 {
            2
        } else if !na && !nb && ng && zl && zl1 && zl2 {
            3
        } else if !na && nb && !ng && !zl && zl1 && zl2 {
            4
        } else if !na && !nb && ng && zl {
            5
        } else if na && nb && !ng && zl1 && zl2 {
            6
        } else if na && !nb && ng && zl {
            7
        } else if !na && nb && ng && zl && zl1 {
            9
        } else if !na && nb && ng {
            8
        } else if na && nb && ng && zl && zl1 && zl2 {
            11
        } else if na && nb && ng && zl {
            10
        } else if na && nb && ng && zl2 {
            12
        } else if na && nb && ng && zl1 {
            13
        } else if na && nb && ng {
            14
        } else {
            return Err(Error::VerificationFailed(format!(
                "no family matches: chains ({na},{nb},{ng}) mixing zero ({zl},{zl1},{zl2})"
            )));
        };
        Ok(case)
    }
}

/// Condition (iii) feasibility: a Q of degree < beta and some lambda with
/// Q l - lambda A = phi(h_g) l1 (mod x^alpha - 1) and Q B = phi(h_g) l2
/// (mod x^beta - 1). Encoded as solvability of a module system over Z_{p^r}
/// with rows (x^i l | x^i B) and (x^j A | 0).
fn joint_condition_holds(
    params: &MixedParams,
    poly_a: &Poly,
    poly_b: &Poly,
    l: &Poly,
    l1: &Poly,
    l2: &Poly,
    h_g_reduced: &Poly,
) -> bool {
    let (alpha, beta) = (params.alpha(), params.beta());
    let ca = ctx_alpha(params);
    let cb = ctx_beta(params);
    let sys_params = MixedParams::new(params.p(), params.r(), params.r(), alpha, beta, 0)
        .expect("alpha and beta are coprime to p");
    let mut rows = Vec::with_capacity(alpha + beta);
    let mut lw = ca.reduce(l);
    let mut bw = cb.reduce(poly_b);
    for _ in 0..beta {
        let mut row = ca.coeff_vec(&lw);
        row.extend(cb.coeff_vec(&bw));
        rows.push(row);
        lw = ca.shift(&lw);
        bw = cb.shift(&bw);
    }
    let mut aw = ca.reduce(poly_a);
    for _ in 0..alpha {
        let mut row = ca.coeff_vec(&aw);
        row.extend(std::iter::repeat(0).take(beta));
        rows.push(row);
        aw = ca.shift(&aw);
    }
    let m = GenMatrix::new(&sys_params, rows).expect("system rows match parameters");
    let mut target = ca.coeff_vec(&ca.mul(h_g_reduced, l1));
    target.extend(cb.coeff_vec(&cb.mul(h_g_reduced, l2)));
    let target = MixedWord::from_flat(&sys_params, &target).expect("target matches parameters");
    solve(&m, &target).is_some()
}

/// Star combination of flat rows with the given Z_{p^s} coefficients.
fn combine(params: &MixedParams, rows: &[Vec<u64>], coeffs: &[u64]) -> MixedWord {
    let mut acc = MixedWord::zero(params);
    for (c, row) in coeffs.iter().zip(rows) {
        let w = MixedWord::from_flat(params, row).expect("rows match parameters");
        acc = acc.add(params, &star_scalar(params, *c, &w));
    }
    acc
}

/// Random code: the standard form of the span of a few random words. Always
/// valid (standard_form succeeds on any word set).
pub fn random_code(params: &MixedParams, rng: &mut impl rand::Rng) -> TripleCode {
    let mr = params.ring_r().modulus();
    let ms = params.ring_s().modulus();
    loop {
        let k = rng.gen_range(1..=3usize);
        let words: Vec<MixedWord> = (0..k)
            .map(|_| {
                let u = (0..params.alpha()).map(|_| rng.gen_range(0..mr)).collect();
                let v = (0..params.beta()).map(|_| rng.gen_range(0..mr)).collect();
                let w = (0..params.gamma()).map(|_| rng.gen_range(0..ms)).collect();
                MixedWord::new(params, u, v, w).expect("random blocks match parameters")
            })
            .collect();
        match TripleCode::standard_form(params, &words) {
            Ok(code) => return code,
            Err(e) => panic!("standard form failed on random words: {e}"),
        }
    }
}

/// Random separable code: independent random chains with zero mixing
/// polynomials.
pub fn random_chain_code(params: &MixedParams, rng: &mut impl rand::Rng) -> TripleCode {
    let rr = params.ring_r();
    let rs = params.ring_s();
    let random_chain = |spec: crate::ringcore::RingSpec, n: usize, rng: &mut dyn rand::RngCore| {
        let fac = crate::polyring::lifted_factorization(spec, n).expect("valid factorization");
        let a = spec.exponent();
        let levels: Vec<u32> = (0..fac.factor_count())
            .map(|_| rand::Rng::gen_range(rng, 0..=a))
            .collect();
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
        chain
    };
    let a_chain = random_chain(rr, params.alpha(), rng);
    let b_chain = random_chain(rr, params.beta(), rng);
    let g_chain = random_chain(rs, params.gamma(), rng);
    TripleCode::build(
        params,
        a_chain,
        b_chain,
        g_chain,
        Poly::zero(rr),
        Poly::zero(rr),
        Poly::zero(rr),
    )
    .expect("zero mixing polynomials always satisfy the conditions")
}
