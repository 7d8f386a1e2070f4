//! Generator matrices and module linear algebra over the mixed alphabet.
//!
//! A `GenMatrix` holds rows of the ambient module Z_{p^r}^{alpha+beta} x
//! Z_{p^s}^gamma; its row span is taken under the scalar action of Z_{p^s}
//! (the star action). All computations run in a single ring by the rescaling
//! embedding: multiplying the first alpha+beta columns by p^{s-r} identifies
//! the ambient module with the submodule p^{s-r}Z_{p^s}^{alpha+beta} x
//! Z_{p^s}^gamma of Z_{p^s}^N, and the star action becomes plain scalar
//! multiplication. The embedding also matches the weighted inner product: the
//! paper form <c, w> equals the standard dot product of the embedded c with
//! any representative of w.
//!
//! The canonical form computed here is the Howell normal form over Z_{p^s}:
//! pivots are normalized to powers p^v, entries below a pivot are zero,
//! entries above are reduced mod p^v, and for every pivot with v > 0 the
//! "shadow" p^{s-v} times the row is inserted as well. The Howell property --
//! every span element whose leading columns vanish lies in the span of the
//! stored rows with the same leading zeros -- is what makes membership
//! testing, kernel extraction and canonical comparison exact.

use crate::ringcore::{p_valuation_in, pow_u128, MixedParams, MixedWord};
use crate::{Error, Result};

/// A generating set for a submodule of the mixed ambient space, one row per
/// generator, entries in canonical range per column modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenMatrix {
    params: MixedParams,
    rows: Vec<Vec<u64>>,
}

impl GenMatrix {
    pub fn new(params: &MixedParams, rows: Vec<Vec<u64>>) -> Result<Self> {
        let n = params.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidParams(format!(
                    "row {i} has {} entries, expected alpha+beta+gamma = {n}",
                    row.len()
                )));
            }
        }
        let rows = rows
            .into_iter()
            .map(|row| reduce_row_mixed(params, row))
            .collect();
        Ok(GenMatrix { params: *params, rows })
    }

    pub fn from_words(params: &MixedParams, words: &[MixedWord]) -> GenMatrix {
        let rows = words.iter().map(|w| w.to_flat()).collect();
        GenMatrix::new(params, rows).expect("words always match their parameters")
    }

    pub fn params(&self) -> &MixedParams {
        &self.params
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn to_words(&self) -> Vec<MixedWord> {
        self.rows
            .iter()
            .map(|r| MixedWord::from_flat(&self.params, r).expect("rows match parameters"))
            .collect()
    }
}

fn reduce_row_mixed(params: &MixedParams, mut row: Vec<u64>) -> Vec<u64> {
    let split = params.alpha() + params.beta();
    let mr = params.ring_r().modulus();
    let ms = params.ring_s().modulus();
    for (j, e) in row.iter_mut().enumerate() {
        *e %= if j < split { mr } else { ms };
    }
    row
}

fn embed_row(params: &MixedParams, row: &[u64]) -> Vec<u64> {
    let split = params.alpha() + params.beta();
    let scale = params.ring_s().modulus() / params.ring_r().modulus(); // p^{s-r}
    row.iter()
        .enumerate()
        .map(|(j, &e)| if j < split { e * scale } else { e })
        .collect()
}

fn deembed_row(params: &MixedParams, row: &[u64]) -> Vec<u64> {
    let split = params.alpha() + params.beta();
    let scale = params.ring_s().modulus() / params.ring_r().modulus();
    row.iter()
        .enumerate()
        .map(|(j, &e)| {
            if j < split {
                debug_assert_eq!(e % scale, 0, "embedded rows carry p^(s-r) multiples");
                e / scale
            } else {
                e
            }
        })
        .collect()
}

/// Reduce a plain Z_{p^s} vector into mixed coordinates (first alpha+beta
/// entries mod p^r). This is the projection used when reading kernel solutions
/// back into the ambient alphabet.
fn project_row_mixed(params: &MixedParams, row: &[u64]) -> Vec<u64> {
    let split = params.alpha() + params.beta();
    let mr = params.ring_r().modulus();
    row.iter()
        .enumerate()
        .map(|(j, &e)| if j < split { e % mr } else { e })
        .collect()
}

fn inv_mod(unit: u64, modulus: u64) -> u64 {
    let (mut r0, mut r1) = (modulus as i128, unit as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "pivot unit part must be invertible");
    let m = modulus as i128;
    (((t0 % m) + m) % m) as u64
}

/// Howell-form accumulator over Z_{p^s} for embedded rows, with optional
/// coefficient tracking (tags express every stored row as a combination of the
/// originally inserted rows).
struct Howell {
    p: u64,
    sexp: u32,
    modulus: u64,
    ncols: usize,
    // Sorted by pivot column; each entry is (pivot col, pivot valuation, row, tag).
    store: Vec<(usize, u32, Vec<u64>, Vec<u64>)>,
}

impl Howell {
    fn new(p: u64, sexp: u32, ncols: usize) -> Self {
        let modulus = pow_u128(p as u128, sexp as u128) as u64;
        Howell { p, sexp, modulus, ncols, store: Vec::new() }
    }

    fn pw(&self, v: u32) -> u64 {
        pow_u128(self.p as u128, v as u128) as u64
    }

    fn val(&self, e: u64) -> u32 {
        p_valuation_in(e, self.p, self.sexp)
    }

    fn scale_vec(&self, v: &mut [u64], c: u64) {
        for e in v.iter_mut() {
            *e = ((*e as u128 * c as u128) % self.modulus as u128) as u64;
        }
    }

    fn sub_scaled(&self, v: &mut [u64], rhs: &[u64], c: u64) {
        let m = self.modulus as u128;
        for (e, &x) in v.iter_mut().zip(rhs) {
            let sub = (x as u128 * c as u128) % m;
            *e = ((*e as u128 + m - sub) % m) as u64;
        }
    }

    fn position_for(&self, col: usize) -> std::result::Result<usize, usize> {
        self.store.binary_search_by_key(&col, |entry| entry.0)
    }

    fn insert(&mut self, row: Vec<u64>, tag: Vec<u64>) {
        debug_assert_eq!(row.len(), self.ncols);
        let mut work = vec![(row, tag)];
        while let Some((mut row, mut tag)) = work.pop() {
            let mut j = match row.iter().position(|&e| e != 0) {
                Some(j) => j,
                None => continue,
            };
            loop {
                match self.position_for(j) {
                    Err(pos) => {
                        // New pivot column: normalize so the pivot is p^v.
                        let v = self.val(row[j]);
                        let unit = row[j] / self.pw(v);
                        let uinv = inv_mod(unit, self.modulus);
                        self.scale_vec(&mut row, uinv);
                        self.scale_vec(&mut tag, uinv);
                        if v > 0 {
                            let mut srow = row.clone();
                            let mut stag = tag.clone();
                            let c = self.pw(self.sexp - v);
                            self.scale_vec(&mut srow, c);
                            self.scale_vec(&mut stag, c);
                            if srow.iter().any(|&e| e != 0) {
                                work.push((srow, stag));
                            }
                        }
                        self.store.insert(pos, (j, v, row, tag));
                        break;
                    }
                    Ok(pos) => {
                        let vp = self.store[pos].1;
                        let vr = self.val(row[j]);
                        if vr >= vp {
                            // Cancel against the stored pivot (pivot entry is p^vp).
                            let c = row[j] / self.pw(vp);
                            let (prow, ptag) = {
                                let entry = &self.store[pos];
                                (entry.2.clone(), entry.3.clone())
                            };
                            self.sub_scaled(&mut row, &prow, c);
                            self.sub_scaled(&mut tag, &ptag, c);
                            debug_assert_eq!(row[j], 0);
                            match row.iter().position(|&e| e != 0) {
                                Some(nj) => j = nj,
                                None => break,
                            }
                        } else {
                            // Strictly smaller valuation: the new row takes the
                            // pivot; normalize it, queue its shadow and requeue
                            // the displaced row.
                            let unit = row[j] / self.pw(vr);
                            let uinv = inv_mod(unit, self.modulus);
                            self.scale_vec(&mut row, uinv);
                            self.scale_vec(&mut tag, uinv);
                            if vr > 0 {
                                let mut srow = row.clone();
                                let mut stag = tag.clone();
                                let c = self.pw(self.sexp - vr);
                                self.scale_vec(&mut srow, c);
                                self.scale_vec(&mut stag, c);
                                if srow.iter().any(|&e| e != 0) {
                                    work.push((srow, stag));
                                }
                            }
                            let old = std::mem::replace(
                                &mut self.store[pos],
                                (j, vr, row, tag),
                            );
                            work.push((old.2, old.3));
                            break;
                        }
                    }
                }
            }
        }
    }

    /// Above-pivot reduction to the unique normal form: entries above the
    /// pivot of column j are reduced mod p^{v_j}. Processing columns left to
    /// right is stable because stored rows have zeros before their own pivot.
    fn normalize(&mut self) {
        for k in 0..self.store.len() {
            let (col, v, pivrow, pivtag) = {
                let e = &self.store[k];
                (e.0, e.1, e.2.clone(), e.3.clone())
            };
            let pj = self.pw(v);
            for i in 0..k {
                let c = self.store[i].2[col] / pj;
                if c != 0 {
                    let (row, tag) = {
                        let e = &mut self.store[i];
                        (&mut e.2, &mut e.3)
                    };
                    let m = self.modulus as u128;
                    for (x, &y) in row.iter_mut().zip(&pivrow) {
                        let sub = (y as u128 * c as u128) % m;
                        *x = ((*x as u128 + m - sub) % m) as u64;
                    }
                    for (x, &y) in tag.iter_mut().zip(&pivtag) {
                        let sub = (y as u128 * c as u128) % m;
                        *x = ((*x as u128 + m - sub) % m) as u64;
                    }
                }
            }
        }
    }
}

/// Canonical echelon (Howell) form of a generator matrix, together with the
/// pivot profile. Two matrices span the same module exactly when their
/// echelons are identical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Echelon {
    params: MixedParams,
    /// Canonical rows in mixed coordinates.
    rows: Vec<Vec<u64>>,
    /// (column, valuation) per row, in the embedded (Z_{p^s}) picture; the
    /// pivot entry of the embedded row is p^valuation.
    pivots: Vec<(usize, u32)>,
    /// Embedded rows, kept for fast membership reduction.
    emb_rows: Vec<Vec<u64>>,
    /// Combination tags over the original inserted rows (empty when the
    /// echelon was built without tracking).
    tags: Vec<Vec<u64>>,
}

impl Echelon {
    pub fn params(&self) -> &MixedParams {
        &self.params
    }

    /// Canonical rows, mixed coordinates, sorted by pivot column.
    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[(usize, u32)] {
        &self.pivots
    }

    pub fn as_matrix(&self) -> GenMatrix {
        GenMatrix::new(&self.params, self.rows.clone()).expect("echelon rows are reduced")
    }

    /// Number of module elements spanned: the product over pivot rows of
    /// p^{s - v}; each Howell pivot row contributes an independent cyclic
    /// factor of that order.
    pub fn span_size(&self) -> u128 {
        let p = self.params.p() as u128;
        let s = self.params.s();
        let mut size: u128 = 1;
        for &(_, v) in &self.pivots {
            size = size
                .checked_mul(pow_u128(p, (s - v) as u128))
                .expect("span size fits in u128");
        }
        size
    }

    /// Per-row scalar orders p^{s-v}: scalar c and c' produce the same
    /// multiple of row j exactly when c = c' mod order.
    pub fn row_orders(&self) -> Vec<u64> {
        let p = self.params.p() as u128;
        let s = self.params.s();
        self.pivots
            .iter()
            .map(|&(_, v)| pow_u128(p, (s - v) as u128) as u64)
            .collect()
    }

    fn reduce_embedded(&self, target: &[u64], acc: Option<&mut Vec<u64>>) -> Vec<u64> {
        let p = self.params.p();
        let s = self.params.s();
        let modulus = self.params.ring_s().modulus();
        let mut rem = target.to_vec();
        let mut acc = acc;
        for (idx, &(col, v)) in self.pivots.iter().enumerate() {
            let e = rem[col];
            if e == 0 {
                continue;
            }
            if p_valuation_in(e, p, s) < v {
                break; // irreducible at this pivot; remainder stays nonzero
            }
            let pv = pow_u128(p as u128, v as u128) as u64;
            let c = e / pv;
            let m = modulus as u128;
            for (x, &y) in rem.iter_mut().zip(&self.emb_rows[idx]) {
                let sub = (y as u128 * c as u128) % m;
                *x = ((*x as u128 + m - sub) % m) as u64;
            }
            if let Some(acc) = acc.as_deref_mut() {
                for (x, &y) in acc.iter_mut().zip(&self.tags[idx]) {
                    *x = ((*x as u128 + (y as u128 * c as u128)) % m) as u64;
                }
            }
        }
        rem
    }

    /// Membership test for a mixed word.
    pub fn contains(&self, word: &MixedWord) -> bool {
        self.contains_flat(&word.to_flat())
    }

    pub fn contains_flat(&self, flat: &[u64]) -> bool {
        assert_eq!(flat.len(), self.params.len(), "word length matches parameters");
        let emb = embed_row(&self.params, &reduce_row_mixed(&self.params, flat.to_vec()));
        let rem = self.reduce_embedded(&emb, None);
        rem.iter().all(|&e| e == 0)
    }
}

/// Computes the canonical echelon form without coefficient tracking.
pub fn echelonize(m: &GenMatrix) -> Echelon {
    echelonize_inner(m, false)
}

fn echelonize_inner(m: &GenMatrix, track: bool) -> Echelon {
    let params = *m.params();
    let ncols = params.len();
    let tag_len = if track { m.row_count() } else { 0 };
    let mut h = Howell::new(params.p(), params.s(), ncols);
    for (i, row) in m.rows().iter().enumerate() {
        let tag = if track {
            let mut t = vec![0; tag_len];
            t[i] = 1;
            t
        } else {
            Vec::new()
        };
        h.insert(embed_row(&params, row), tag);
    }
    h.normalize();
    let mut rows = Vec::with_capacity(h.store.len());
    let mut pivots = Vec::with_capacity(h.store.len());
    let mut emb_rows = Vec::with_capacity(h.store.len());
    let mut tags = Vec::with_capacity(h.store.len());
    for (col, v, row, tag) in h.store.drain(..) {
        pivots.push((col, v));
        rows.push(deembed_row(&params, &row));
        emb_rows.push(row);
        tags.push(tag);
    }
    Echelon { params, rows, pivots, emb_rows, tags }
}

/// Number of elements in the row span (star-scalar combinations of rows).
pub fn span_size(m: &GenMatrix) -> u128 {
    echelonize(m).span_size()
}

/// True when the word lies in the row span.
pub fn member(m: &GenMatrix, word: &MixedWord) -> bool {
    echelonize(m).contains(word)
}

/// Expresses the word as a star-scalar combination of the matrix's original
/// rows; returns the coefficient vector (one Z_{p^s} scalar per row) or None
/// when the word is outside the span.
pub fn solve(m: &GenMatrix, word: &MixedWord) -> Option<Vec<u64>> {
    let ech = echelonize_inner(m, true);
    let emb = embed_row(m.params(), &word.to_flat());
    let mut acc = vec![0u64; m.row_count()];
    let rem = ech.reduce_embedded(&emb, Some(&mut acc));
    if rem.iter().all(|&e| e == 0) {
        Some(acc)
    } else {
        None
    }
}

/// Generators of the annihilator submodule {w : <c, w> = 0 for every row c},
/// where <.,.> is the weighted inner product (p^{s-r} on the first two blocks).
/// In embedded coordinates the form becomes the standard dot product, so the
/// kernel is read off a Howell form of the transposed system augmented with an
/// identity block: rows of the span of [A^T | I] have the shape ((A y)^T | y),
/// and by the Howell property the rows with vanishing left block generate all
/// solutions of A y = 0. The y parts, reduced into mixed coordinates, generate
/// the kernel as a module.
pub fn kernel_wrt_inner_product(m: &GenMatrix) -> GenMatrix {
    let params = *m.params();
    let n = params.len();
    let k = m.row_count();
    let emb: Vec<Vec<u64>> = m.rows().iter().map(|r| embed_row(&params, r)).collect();
    let mut h = Howell::new(params.p(), params.s(), k + n);
    for i in 0..n {
        let mut row = Vec::with_capacity(k + n);
        for e in &emb {
            row.push(e[i]);
        }
        let mut unit = vec![0u64; n];
        unit[i] = 1;
        row.extend(unit);
        h.insert(row, Vec::new());
    }
    h.normalize();
    let mut out = Vec::new();
    for (_, _, row, _) in h.store.drain(..) {
        if row[..k].iter().all(|&e| e == 0) {
            out.push(project_row_mixed(&params, &row[k..]));
        }
    }
    GenMatrix::new(&params, out).expect("kernel rows have ambient width")
}

/// Generators of {v in span(m) : v vanishes on the given column range}.
/// Computed by rotating the block to the front, taking a Howell form there
/// (whose zero-prefix rows span exactly the span elements vanishing on the
/// block), and rotating back.
pub fn zero_block_submodule(m: &GenMatrix, block: std::ops::Range<usize>) -> GenMatrix {
    let params = *m.params();
    let n = params.len();
    assert!(block.end <= n, "block range within ambient width");
    let perm: Vec<usize> = block
        .clone()
        .chain((0..n).filter(|j| !block.contains(j)))
        .collect();
    let blen = block.len();
    let mut h = Howell::new(params.p(), params.s(), n);
    for row in m.rows() {
        let emb = embed_row(&params, row);
        let permuted: Vec<u64> = perm.iter().map(|&j| emb[j]).collect();
        h.insert(permuted, Vec::new());
    }
    h.normalize();
    let mut out = Vec::new();
    for (_, _, prow, _) in h.store.drain(..) {
        if prow[..blen].iter().all(|&e| e == 0) {
            let mut row = vec![0u64; n];
            for (pos, &j) in perm.iter().enumerate() {
                row[j] = prow[pos];
            }
            out.push(deembed_row(&params, &row));
        }
    }
    GenMatrix::new(&params, out).expect("rows have ambient width")
}

/// True when both matrices span the same module (canonical echelons agree).
pub fn span_eq(a: &GenMatrix, b: &GenMatrix) -> bool {
    assert_eq!(a.params(), b.params(), "span comparison needs equal parameters");
    let ea = echelonize(a);
    let eb = echelonize(b);
    ea.pivots == eb.pivots && ea.rows == eb.rows
}

/// Streams every element of the row span exactly once, in the mixed-radix
/// counter order over the canonical rows. Restartable by calling again.
pub struct SpanIter {
    params: MixedParams,
    rows: Vec<Vec<u64>>,
    orders: Vec<u64>,
    counter: Vec<u64>,
    done: bool,
}

impl Iterator for SpanIter {
    type Item = MixedWord;

    fn next(&mut self) -> Option<MixedWord> {
        if self.done {
            return None;
        }
        let split = self.params.alpha() + self.params.beta();
        let mr = self.params.ring_r().modulus();
        let ms = self.params.ring_s().modulus();
        let mut flat = vec![0u64; self.params.len()];
        for (c, row) in self.counter.iter().zip(&self.rows) {
            for (j, (x, &e)) in flat.iter_mut().zip(row).enumerate() {
                let m = if j < split { mr } else { ms };
                *x = ((*x as u128 + (*c % m) as u128 * (e as u128)) % m as u128) as u64;
            }
        }
        // Mixed-radix increment.
        let mut i = 0;
        loop {
            if i == self.counter.len() {
                self.done = true;
                break;
            }
            self.counter[i] += 1;
            if self.counter[i] < self.orders[i] {
                break;
            }
            self.counter[i] = 0;
            i += 1;
        }
        Some(MixedWord::from_flat(&self.params, &flat).expect("span rows have ambient width"))
    }
}

/// Enumerates the full span when its size does not exceed `cap`. Every element
/// appears exactly once: the canonical rows are independent in the sense that
/// distinct coefficient tuples (each taken mod the row order) give distinct
/// combinations.
pub fn enumerate_span(m: &GenMatrix, cap: u128) -> Result<SpanIter> {
    let ech = echelonize(m);
    let size = ech.span_size();
    if size > cap {
        return Err(Error::EnumerationTooLarge { size, cap });
    }
    Ok(SpanIter {
        params: *ech.params(),
        orders: ech.row_orders(),
        counter: vec![0; ech.rows().len()],
        rows: ech.rows,
        done: false,
    })
}
