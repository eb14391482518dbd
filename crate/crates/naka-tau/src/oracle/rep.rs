//! Exact quiver representations over F_p: the independent backend for Hom
//! dimensions, cokernels of module maps, and decomposition into uniserials.

use crate::algebra::{Algebra, IndModule, Window};
use crate::fp::FpMat;

/// Concrete representation of a (possibly decomposable) module: one
/// F_p-space per vertex of the algebra and one matrix per arrow.
///
/// Vertices are indexed globally: vertex `v` of component `c` gets index
/// `offset(c) + v`. The arrow out of a vertex is `v -> v-1` within its
/// component (cyclically for cyclic components); linear components have no
/// arrow out of vertex 0.
#[derive(Debug, Clone)]
pub struct QuiverRep {
    pub p: u64,
    pub dims: Vec<usize>,
    /// `arrows[g] : V_g -> V_down(g)`, one entry per global vertex that has
    /// an outgoing arrow.
    pub arrows: Vec<Option<FpMat>>,
}

pub fn vertex_offset(alg: &Algebra, component: usize) -> usize {
    alg.components[..component].iter().map(|c| c.rank()).sum()
}

pub fn global_vertex(alg: &Algebra, component: usize, v: usize) -> usize {
    vertex_offset(alg, component) + v
}

/// Global index of the arrow target `v -> v-1`, if the arrow exists.
pub fn global_down(alg: &Algebra, g: usize) -> Option<usize> {
    let mut offset = 0;
    for comp in &alg.components {
        let n = comp.rank();
        if g < offset + n {
            let v = g - offset;
            return match comp.kind {
                crate::algebra::QuiverKind::Cyclic => Some(offset + (v + n - 1) % n),
                crate::algebra::QuiverKind::Linear => v.checked_sub(1).map(|w| offset + w),
            };
        }
        offset += n;
    }
    unreachable!("global vertex out of range")
}

impl QuiverRep {
    pub fn zero(alg: &Algebra, p: u64) -> QuiverRep {
        let total = alg.rank();
        QuiverRep {
            p,
            dims: vec![0; total],
            arrows: (0..total).map(|_| None).collect(),
        }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    fn ensure_arrows(&mut self, alg: &Algebra) {
        for g in 0..self.dims.len() {
            if let Some(h) = global_down(alg, g) {
                if self.arrows[g].is_none() {
                    self.arrows[g] = Some(FpMat::zeros(self.p, self.dims[h], self.dims[g]));
                }
            }
        }
    }
}

/// Basis position bookkeeping for the representation of a direct sum of
/// indecomposables: basis vector `k` of summand `s` (counted from the top)
/// sits at a known coordinate of a known vertex space.
#[derive(Debug, Clone)]
pub struct SumRep {
    pub rep: QuiverRep,
    pub summands: Vec<IndModule>,
    /// `position[s][k]` = (global vertex, coordinate) of basis vector k of
    /// summand s.
    pub position: Vec<Vec<(usize, usize)>>,
}

/// Faithful representation of a direct sum of indecomposables.
pub fn sum_rep(alg: &Algebra, summands: &[IndModule], p: u64) -> SumRep {
    let mut rep = QuiverRep::zero(alg, p);
    let mut position = Vec::with_capacity(summands.len());
    for m in summands {
        let mut pos = Vec::with_capacity(m.len);
        for k in 0..m.len {
            let g = global_vertex(alg, m.component, m.factor_vertex(alg, k));
            pos.push((g, rep.dims[g]));
            rep.dims[g] += 1;
        }
        position.push(pos);
    }
    rep.ensure_arrows(alg);
    for (s, m) in summands.iter().enumerate() {
        for k in 0..m.len.saturating_sub(1) {
            let (g, row_from) = position[s][k];
            let (_h, row_to) = position[s][k + 1];
            let mat = rep.arrows[g].as_mut().expect("arrow exists along a module");
            mat[(row_to, row_from)] = 1;
        }
    }
    SumRep {
        rep,
        summands: summands.to_vec(),
        position,
    }
}

pub fn matrix_rep(alg: &Algebra, m: &IndModule, p: u64) -> QuiverRep {
    sum_rep(alg, &[*m], p).rep
}

/// `dim_K Hom(M, N)` by solving the intertwiner equations
/// `phi_(v-1) . M_a = N_a . phi_v` over F_p.
pub fn hom_dim_matrix(alg: &Algebra, m: &IndModule, n: &IndModule, p: u64) -> usize {
    let rm = matrix_rep(alg, m, p);
    let rn = matrix_rep(alg, n, p);
    let total = alg.rank();
    // unknowns: entries of phi_g (dims_n[g] x dims_m[g]) for all g
    let mut offsets = vec![0usize; total + 1];
    for g in 0..total {
        offsets[g + 1] = offsets[g] + rn.dims[g] * rm.dims[g];
    }
    let unknowns = offsets[total];
    if unknowns == 0 {
        return 0;
    }
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for g in 0..total {
        let Some(h) = global_down(alg, g) else { continue };
        let ma = rm.arrows[g].as_ref().unwrap();
        let na = rn.arrows[g].as_ref().unwrap();
        // constraint: phi_h * M_a - N_a * phi_g = 0, entrywise (r, c)
        for r in 0..rn.dims[h] {
            for c in 0..rm.dims[g] {
                let mut row = vec![0u64; unknowns];
                // (phi_h * M_a)[r][c] = sum_k phi_h[r][k] * M_a[k][c]
                for k in 0..rm.dims[h] {
                    let idx = offsets[h] + r * rm.dims[h] + k;
                    row[idx] = (row[idx] + ma[(k, c)]) % p;
                }
                // -(N_a * phi_g)[r][c] = -sum_k N_a[r][k] * phi_g[k][c]
                for k in 0..rn.dims[g] {
                    let idx = offsets[g] + k * rm.dims[g] + c;
                    row[idx] = (row[idx] + p - na[(r, k)] % p) % p;
                }
                if row.iter().any(|&x| x != 0) {
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        return unknowns;
    }
    let mat = FpMat::from_rows(p, rows);
    unknowns - mat.rank()
}

/// Concrete per-vertex matrices of a window, inside given sum
/// representations of its source and target.
pub fn window_matrices(
    _alg: &Algebra,
    src: &SumRep,
    s_idx: usize,
    tgt: &SumRep,
    t_idx: usize,
    w: &Window,
    coeff: u64,
    out: &mut [FpMat],
) {
    debug_assert_eq!(src.summands[s_idx], w.source);
    debug_assert_eq!(tgt.summands[t_idx], w.target);
    let depth = w.target_depth();
    for a in 0..w.image_len {
        let (g, col) = src.position[s_idx][a];
        let (g2, row) = tgt.position[t_idx][depth + a];
        debug_assert_eq!(g, g2);
        let m = &mut out[g];
        m[(row, col)] = (m[(row, col)] + coeff) % src.rep.p;
    }
}

/// Cokernel of a concrete map between sum representations, decomposed into
/// indecomposables. `maps[g]` is the matrix V_src(g) -> V_tgt(g).
pub fn cokernel_summands(
    alg: &Algebra,
    tgt: &SumRep,
    maps: &[FpMat],
    p: u64,
) -> Vec<IndModule> {
    let total = tgt.rep.dims.len();
    debug_assert_eq!(total, alg.rank());
    // quotient basis per vertex: rows not in the column span of maps[g]
    let mut proj: Vec<FpMat> = Vec::with_capacity(total); // projection V_tgt(g) -> coker(g)
    let mut dims = vec![0usize; total];
    for g in 0..total {
        let d_t = tgt.rep.dims[g];
        let img = &maps[g];
        // rows of `span` = image vectors (transposed columns)
        let mut span_rows: Vec<Vec<u64>> = Vec::new();
        for c in 0..img.cols {
            let mut v = vec![0u64; d_t];
            for r in 0..d_t {
                v[r] = img[(r, c)];
            }
            span_rows.push(v);
        }
        let mut span = FpMat::from_rows(p, span_rows);
        let pivots = span.row_reduce();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let free: Vec<usize> = (0..d_t).filter(|i| !pivot_set.contains(i)).collect();
        dims[g] = free.len();
        // projection: coordinates in the complement basis; for coordinate j
        // (free index), pi(e_i) = delta_{i,free[j]} - correction from pivots
        let mut pr = FpMat::zeros(p, free.len(), d_t);
        for (j, &fi) in free.iter().enumerate() {
            pr[(j, fi)] = 1;
        }
        // subtract the span contribution: e_{pivot} maps to combination
        for (ri, &pc) in pivots.iter().enumerate() {
            for (j, &fi) in free.iter().enumerate() {
                // reduced row ri: e_pc + sum_{free} span[ri][fi] e_fi ~ 0 in coker
                let coeff = span[(ri, fi)];
                if coeff != 0 {
                    pr[(j, pc)] = (p - coeff) % p;
                }
            }
        }
        proj.push(pr);
    }
    // induced arrows on the quotient
    let mut coker = QuiverRep {
        p,
        dims: dims.clone(),
        arrows: (0..total).map(|_| None).collect(),
    };
    for g in 0..total {
        let Some(h) = global_down(alg, g) else { continue };
        // coker arrow: proj_h . arrow . section_g; build section by solving
        // proj_g . s = id on coker coords: use free-basis embedding
        let d_t = tgt.rep.dims[g];
        let img = &maps[g];
        let mut span_rows: Vec<Vec<u64>> = Vec::new();
        for c in 0..img.cols {
            let mut v = vec![0u64; d_t];
            for r in 0..d_t {
                v[r] = img[(r, c)];
            }
            span_rows.push(v);
        }
        let mut span = FpMat::from_rows(p, span_rows);
        let pivots = span.row_reduce();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let free: Vec<usize> = (0..d_t).filter(|i| !pivot_set.contains(i)).collect();
        let mut section = FpMat::zeros(p, d_t, free.len());
        for (j, &fi) in free.iter().enumerate() {
            section[(fi, j)] = 1;
        }
        let arr = tgt.rep.arrows[g].as_ref().unwrap();
        coker.arrows[g] = Some(proj[h].mul(&arr.mul(&section)));
    }
    decompose(alg, &coker)
}

/// Decomposes a representation of a Nakayama algebra into its uniserial
/// direct summands. Greedy: split off a cyclic submodule of maximal Loewy
/// length, quotient, repeat.
pub fn decompose(alg: &Algebra, rep: &QuiverRep) -> Vec<IndModule> {
    let mut rep = rep.clone();
    let mut out = Vec::new();
    while rep.total_dim() > 0 {
        let (g, vec, len) = best_generator(alg, &rep);
        out.push(ind_from_global(alg, g, len));
        rep = quotient_by_cyclic(alg, &rep, g, &vec, len);
    }
    out.sort();
    out
}

fn ind_from_global(alg: &Algebra, g: usize, len: usize) -> IndModule {
    let mut offset = 0;
    for (c, comp) in alg.components.iter().enumerate() {
        if g < offset + comp.rank() {
            return IndModule {
                component: c,
                top: g - offset,
                len,
            };
        }
        offset += comp.rank();
    }
    unreachable!()
}

/// Finds a homogeneous vector generating a cyclic submodule of maximal
/// Loewy length. Vector spaces here are tiny, so we enumerate.
fn best_generator(alg: &Algebra, rep: &QuiverRep) -> (usize, Vec<u64>, usize) {
    let p = rep.p;
    let mut best: Option<(usize, Vec<u64>, usize)> = None;
    for g in 0..rep.dims.len() {
        let d = rep.dims[g];
        if d == 0 {
            continue;
        }
        let count = (p as usize).pow(d as u32);
        for code in 1..count {
            let mut v = vec![0u64; d];
            let mut c = code;
            for slot in v.iter_mut() {
                *slot = (c % p as usize) as u64;
                c /= p as usize;
            }
            let len = cyclic_length(alg, rep, g, &v);
            if best.as_ref().is_none_or(|(_, _, bl)| len > *bl) {
                best = Some((g, v, len));
            }
        }
    }
    best.expect("nonzero representation has a generator")
}

fn cyclic_length(alg: &Algebra, rep: &QuiverRep, g: usize, v: &[u64]) -> usize {
    let mut len = 1;
    let mut cur_g = g;
    let mut cur = v.to_vec();
    loop {
        let Some(h) = global_down(alg, cur_g) else { break };
        let Some(m) = rep.arrows[cur_g].as_ref() else { break };
        let mut next = vec![0u64; m.rows];
        for (r, slot) in next.iter_mut().enumerate() {
            for c in 0..m.cols {
                *slot = (*slot + m[(r, c)] * cur[c]) % rep.p;
            }
        }
        if next.iter().all(|&x| x == 0) {
            break;
        }
        len += 1;
        cur_g = h;
        cur = next;
    }
    len
}

/// Quotient of `rep` by the cyclic submodule generated by `v` at vertex `g`.
fn quotient_by_cyclic(
    alg: &Algebra,
    rep: &QuiverRep,
    g: usize,
    v: &[u64],
    len: usize,
) -> QuiverRep {
    let p = rep.p;
    let total = rep.dims.len();
    // collect the chain of vectors of the submodule per vertex
    let mut sub_vectors: Vec<Vec<Vec<u64>>> = vec![Vec::new(); total];
    let mut cur_g = g;
    let mut cur = v.to_vec();
    for step in 0..len {
        sub_vectors[cur_g].push(cur.clone());
        if step + 1 == len {
            break;
        }
        let h = global_down(alg, cur_g).unwrap();
        let m = rep.arrows[cur_g].as_ref().unwrap();
        let mut next = vec![0u64; m.rows];
        for (r, slot) in next.iter_mut().enumerate() {
            for c in 0..m.cols {
                *slot = (*slot + m[(r, c)] * cur[c]) % rep.p;
            }
        }
        cur_g = h;
        cur = next;
    }
    // per vertex: projection to the quotient by span(sub_vectors)
    let mut proj: Vec<FpMat> = Vec::with_capacity(total);
    let mut section: Vec<FpMat> = Vec::with_capacity(total);
    let mut dims = vec![0usize; total];
    for gg in 0..total {
        let d = rep.dims[gg];
        let mut span = FpMat::from_rows(
            p,
            sub_vectors[gg]
                .iter()
                .cloned()
                .chain(std::iter::once(vec![0u64; d]))
                .collect(),
        );
        let pivots = span.row_reduce();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let free: Vec<usize> = (0..d).filter(|i| !pivot_set.contains(i)).collect();
        dims[gg] = free.len();
        let mut pr = FpMat::zeros(p, free.len(), d);
        for (j, &fi) in free.iter().enumerate() {
            pr[(j, fi)] = 1;
        }
        for (ri, &pc) in pivots.iter().enumerate() {
            for (j, &fi) in free.iter().enumerate() {
                let coeff = span[(ri, fi)];
                if coeff != 0 {
                    pr[(j, pc)] = (p - coeff) % p;
                }
            }
        }
        let mut sec = FpMat::zeros(p, d, free.len());
        for (j, &fi) in free.iter().enumerate() {
            sec[(fi, j)] = 1;
        }
        proj.push(pr);
        section.push(sec);
    }
    let mut out = QuiverRep {
        p,
        dims,
        arrows: (0..total).map(|_| None).collect(),
    };
    for gg in 0..total {
        let Some(h) = global_down(alg, gg) else { continue };
        let arr = rep.arrows[gg].as_ref().unwrap();
        out.arrows[gg] = Some(proj[h].mul(&arr.mul(&section[gg])));
    }
    out
}
