//! Independent brute-force backends: exact matrix representations over a
//! prime field, minimal approximations, two-term complexes with the
//! cone-based V-map, torsion-class closure and Ext-projectives.
//!
//! Everything here exists to cross-check the combinatorial closed forms;
//! none of it consults them.

mod complexes;
mod rep;
mod torsion;

pub use complexes::{
    chain_map_space, hom_shift_dim, is_presilting, presentation, two_term_complex, v_map_oracle,
    HomElem, ModMap, TwoTermComplex, VOracleError,
};
pub use rep::{
    cokernel_summands, decompose, hom_dim_matrix, matrix_rep, sum_rep, window_matrices, QuiverRep,
    SumRep,
};
pub use torsion::{
    all_ext_projectives, ext_projectives, filt_gen_closure, is_torsion_class, TorsionClass,
};

use crate::algebra::{hom_windows, Algebra, IndModule, Window};
use crate::fp::FpMat;

/// Default oracle prime; override with NAKA_TAU_FIELD.
pub fn default_prime() -> u64 {
    std::env::var("NAKA_TAU_FIELD")
        .ok()
        .and_then(|s| s.parse().ok())
        .filter(|&p| (2..64).contains(&p) && (2..p).all(|d| p % d != 0))
        .unwrap_or(2)
}

/// A minimal left `add(U)`-approximation of `X` and its cokernel.
#[derive(Debug, Clone)]
pub struct LeftApproximation {
    /// kept components, each a single window X -> U_i
    pub map: Vec<(IndModule, Window)>,
    /// cokernel decomposed into indecomposables (empty when zero)
    pub cokernel: Vec<IndModule>,
    /// kernel `rad^c X` of the approximation, `None` when the map is mono
    /// or when the map is zero (then the "kernel" is all of X)
    pub kernel: Option<IndModule>,
    pub map_is_zero: bool,
}

/// Computes a minimal left `add(U)`-approximation of `X`.
///
/// Starts from the full window basis of `Hom(X, U_i)` over all `i` and
/// drops any component that factors through the remaining ones; what is
/// left is left minimal. The cokernel is computed on concrete
/// representations and decomposed into uniserials.
pub fn minimal_left_approx(
    alg: &Algebra,
    x: &IndModule,
    targets: &[IndModule],
    p: u64,
) -> LeftApproximation {
    let mut components: Vec<(IndModule, Window)> = Vec::new();
    for u in targets {
        for w in hom_windows(alg, x, u) {
            components.push((*u, w));
        }
    }
    // drop components factoring through the others
    let mut changed = true;
    while changed {
        changed = false;
        for idx in 0..components.len() {
            if factors_through_rest(alg, &components, idx, p) {
                components.remove(idx);
                changed = true;
                break;
            }
        }
    }
    let map_is_zero = components.is_empty();
    // cokernel and kernel
    let (cokernel, kernel) = if map_is_zero {
        (Vec::new(), None)
    } else {
        let tgt_modules: Vec<IndModule> = components.iter().map(|(u, _)| *u).collect();
        let src = sum_rep(alg, &[*x], p);
        let tgt = sum_rep(alg, &tgt_modules, p);
        let total = alg.rank();
        let mut mats: Vec<FpMat> = (0..total)
            .map(|g| FpMat::zeros(p, tgt.rep.dims[g], src.rep.dims[g]))
            .collect();
        for (t_idx, (_, w)) in components.iter().enumerate() {
            window_matrices(alg, &src, 0, &tgt, t_idx, w, 1, &mut mats);
        }
        let coker = cokernel_summands(alg, &tgt, &mats, p);
        // kernel = rad^c X with image length c = max window image length
        let c = components.iter().map(|(_, w)| w.image_len).max().unwrap();
        (coker, x.radical_power(alg, c))
    };
    LeftApproximation {
        map: components,
        cokernel,
        kernel,
        map_is_zero,
    }
}

/// Can component `idx` be written as a combination of the other components
/// post-composed with maps between the targets?
fn factors_through_rest(
    alg: &Algebra,
    components: &[(IndModule, Window)],
    idx: usize,
    p: u64,
) -> bool {
    let (u_i, alpha_i) = &components[idx];
    let basis_i = hom_windows(alg, &alpha_i.source, u_i);
    let target_dim = basis_i.len();
    let mut span: Vec<Vec<u64>> = Vec::new();
    for (j, (u_j, alpha_j)) in components.iter().enumerate() {
        if j == idx {
            continue;
        }
        for beta in hom_windows(alg, u_j, u_i) {
            // beta . alpha_j as a coefficient vector over basis_i
            if let Some(w) = crate::algebra::compose_windows(alpha_j, &beta).unwrap() {
                let mut v = vec![0u64; target_dim];
                let pos = basis_i.iter().position(|b| *b == w).unwrap();
                v[pos] = 1;
                span.push(v);
            }
        }
    }
    if span.is_empty() {
        return false;
    }
    let mut target = vec![0u64; target_dim];
    let pos = basis_i.iter().position(|b| b == alpha_i).unwrap();
    target[pos] = 1;
    FpMat::from_rows(p, span).solve_left(&target).is_some()
}
