//! Ordered tau-rigid pairs, TF-orders, the bijection with signed
//! tau-exceptional sequences, and the sign-flip / transposition operations
//! on ordered pairs.

use crate::algebra::{is_in_gen, is_tau_rigid_pair, Algebra, IndModule, Pair, SignedInd};
use crate::reduction::{self, ReductionError};
use itertools::Itertools;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("underlying pair is not tau-rigid or not basic")]
    NotRigid,
    #[error("entries must be unshifted modules")]
    NotModules,
    #[error("position {0} out of range")]
    OutOfRange(usize),
    #[error("entry is not relative projective at this position")]
    NotRelativeProjective,
    #[error("not a valid signed tau-exceptional sequence: {0}")]
    NotAValidSequence(String),
    #[error("orders have different underlying modules")]
    DifferentModules,
    #[error("input is not TF-ordered")]
    NotTFOrders,
    #[error(transparent)]
    Reduction(#[from] ReductionError),
}

/// An ordered basic tau-rigid pair: the entries carry the order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedRigid {
    pub entries: Vec<SignedInd>,
}

impl OrderedRigid {
    pub fn new(alg: &Algebra, entries: Vec<SignedInd>) -> Result<OrderedRigid, SequenceError> {
        let pair = Pair::from_signed(&entries);
        if pair.size() != entries.len() || !is_tau_rigid_pair(alg, &pair) {
            return Err(SequenceError::NotRigid);
        }
        Ok(OrderedRigid { entries })
    }

    pub fn from_modules(alg: &Algebra, modules: Vec<IndModule>) -> Result<OrderedRigid, SequenceError> {
        OrderedRigid::new(alg, modules.into_iter().map(SignedInd::module).collect())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries strictly after position `i` (1-indexed).
    pub fn tail_after(&self, i: usize) -> &[SignedInd] {
        &self.entries[i..]
    }

    pub fn pair(&self) -> Pair {
        Pair::from_signed(&self.entries)
    }

    pub fn modules(&self) -> Option<Vec<IndModule>> {
        self.entries
            .iter()
            .map(|e| (!e.is_shifted()).then_some(e.module))
            .collect()
    }

    pub fn text(&self, alg: &Algebra) -> String {
        self.entries
            .iter()
            .map(|e| e.text(alg))
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// A signed tau-exceptional sequence, stored in ambient coordinates:
/// entry i is an object of J(entries after i).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExcSeq {
    pub entries: Vec<SignedInd>,
}

impl ExcSeq {
    pub fn is_unsigned(&self) -> bool {
        self.entries.iter().all(|e| !e.is_shifted())
    }

    pub fn text(&self, alg: &Algebra) -> String {
        self.entries
            .iter()
            .map(|e| e.text(alg))
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// TF-order test: `M_i` not generated by the later entries, for every
/// `i < t`.
pub fn is_tf_order(alg: &Algebra, t: &OrderedRigid) -> Result<bool, SequenceError> {
    let modules: Vec<IndModule> = t.modules().ok_or(SequenceError::NotModules)?;
    Ok((0..modules.len().saturating_sub(1)).all(|i| {
        let later = &modules[i + 1..];
        !is_in_gen(alg, &modules[i], later)
    }))
}

fn is_tf_order_modules(alg: &Algebra, modules: &[IndModule]) -> bool {
    (0..modules.len().saturating_sub(1)).all(|i| !is_in_gen(alg, &modules[i], &modules[i + 1..]))
}

/// All TF-orders of a tau-rigid module, lexicographically by entry keys.
pub fn tf_orders(alg: &Algebra, modules: &[IndModule]) -> Result<Vec<OrderedRigid>, SequenceError> {
    let pair = Pair::from_modules(modules.to_vec());
    if pair.size() != modules.len() || !is_tau_rigid_pair(alg, &pair) {
        return Err(SequenceError::NotRigid);
    }
    let mut sorted = modules.to_vec();
    sorted.sort();
    let mut out = Vec::new();
    let k = sorted.len();
    for perm in sorted.into_iter().permutations(k) {
        if is_tf_order_modules(alg, &perm) {
            out.push(OrderedRigid {
                entries: perm.into_iter().map(SignedInd::module).collect(),
            });
        }
    }
    out.sort();
    Ok(out)
}

/// The bijection onto signed tau-exceptional sequences:
/// entry i of the image is `E_{T_{>i}}(T_i)`.
pub fn psi(alg: &Algebra, t: &OrderedRigid) -> Result<ExcSeq, SequenceError> {
    let n = t.len();
    let mut entries = Vec::with_capacity(n);
    for i in 0..n {
        let tail = &t.entries[i + 1..];
        let e = reduction::e_map_entries(alg, tail, &t.entries[i])?;
        entries.push(e);
    }
    Ok(ExcSeq { entries })
}

/// Inverse bijection: recover the ordered pair whose image is `seq`.
pub fn psi_inverse(alg: &Algebra, seq: &ExcSeq) -> Result<OrderedRigid, SequenceError> {
    let n = seq.entries.len();
    let mut entries: Vec<SignedInd> = Vec::with_capacity(n);
    // reconstruct from the right: entry i satisfies
    // E_{T_{>i}}(T_i) = seq[i] with T_{>i} already known
    for i in (0..n).rev() {
        let tail = entries.clone();
        let x = reduction::e_map_inverse_entries(alg, &tail, &seq.entries[i])
            .map_err(|e| SequenceError::NotAValidSequence(e.to_string()))?;
        entries.insert(0, x);
    }
    let t = OrderedRigid { entries };
    let pair = t.pair();
    if pair.size() != n || !is_tau_rigid_pair(alg, &pair) {
        return Err(SequenceError::NotAValidSequence(
            "recovered entries are not a basic tau-rigid pair".into(),
        ));
    }
    Ok(t)
}

/// Adjacent transposition (1-indexed position i swaps entries i, i+1).
pub fn swap_adjacent(t: &OrderedRigid, i: usize) -> Result<OrderedRigid, SequenceError> {
    if i == 0 || i >= t.len() {
        return Err(SequenceError::OutOfRange(i));
    }
    let mut entries = t.entries.clone();
    entries.swap(i - 1, i);
    Ok(OrderedRigid { entries })
}

/// Sign flip at position i (1-indexed): the i-th entry of the induced
/// sequence must be relative projective. Computed upstairs by the closed
/// forms where they apply (flipping the first entry of an unsigned
/// sequence inverts the V-map; flipping a projective last entry of a TF
/// pair reduces the head), with conjugation through the bijection as the
/// general route.
pub fn shift_toggle(
    alg: &Algebra,
    t: &OrderedRigid,
    i: usize,
) -> Result<OrderedRigid, SequenceError> {
    if i == 0 || i > t.len() {
        return Err(SequenceError::OutOfRange(i));
    }
    let seq = psi(alg, t)?;
    let entry = seq.entries[i - 1];
    let tail = &t.entries[i..];
    let wide = reduction::jasso_entries(alg, tail)?;
    let rel_proj = if entry.is_shifted() {
        true
    } else {
        wide.rel_projectives.contains(&entry.module)
    };
    if !rel_proj {
        return Err(SequenceError::NotRelativeProjective);
    }
    if i == 1 && seq.is_unsigned() {
        // first entry of an unsigned sequence: pull back through the
        // complement bijection of the tail
        let pair = Pair::from_signed(tail);
        let flipped = reduction::v_map_inverse(alg, &pair, &t.entries[0])?;
        let mut entries = t.entries.clone();
        entries[0] = flipped;
        return Ok(OrderedRigid { entries });
    }
    if i == 2
        && t.len() == 2
        && t.entries.iter().all(|e| !e.is_shifted())
        && t.entries[1].module.is_projective(alg)
        && is_tf_order(alg, t)?
    {
        // TF pair with projective second entry: reduce the head, shift
        // the tail
        let head = reduction::e_map_entries(alg, &t.entries[1..], &t.entries[0])?;
        let entries = vec![head, SignedInd::shifted(t.entries[1].module)];
        return Ok(OrderedRigid { entries });
    }
    shift_toggle_by_conjugation(alg, t, i, &seq, entry)
}

fn shift_toggle_by_conjugation(
    alg: &Algebra,
    _t: &OrderedRigid,
    i: usize,
    seq: &ExcSeq,
    entry: SignedInd,
) -> Result<OrderedRigid, SequenceError> {
    let flipped = SignedInd {
        module: entry.module,
        shift: 1 - entry.shift,
    };
    let mut entries = seq.entries.clone();
    entries[i - 1] = flipped;
    psi_inverse(alg, &ExcSeq { entries })
}

/// Agreeableness score: length of the longest common prefix.
fn agreeableness(a: &OrderedRigid, b: &OrderedRigid) -> usize {
    a.entries
        .iter()
        .zip(&b.entries)
        .take_while(|(x, y)| x == y)
        .count()
}

/// A sequence of adjacent transpositions carrying `b` to `a` with every
/// intermediate TF-ordered (1-indexed positions, applied left to right).
/// Greedy: repeatedly move the first disagreeing entry of `a` into place;
/// every intermediate stays TF-ordered.
pub fn tf_transposition_path(
    alg: &Algebra,
    a: &OrderedRigid,
    b: &OrderedRigid,
) -> Result<Vec<usize>, SequenceError> {
    let (ma, mb) = (a.modules(), b.modules());
    let (ma, mb) = match (ma, mb) {
        (Some(x), Some(y)) => (x, y),
        _ => return Err(SequenceError::NotModules),
    };
    {
        let mut sa = ma.clone();
        let mut sb = mb.clone();
        sa.sort();
        sb.sort();
        if sa != sb {
            return Err(SequenceError::DifferentModules);
        }
    }
    if !is_tf_order(alg, a)? || !is_tf_order(alg, b)? {
        return Err(SequenceError::NotTFOrders);
    }
    let mut current = b.clone();
    let mut path = Vec::new();
    while current != *a {
        let g = agreeableness(a, &current);
        // position (0-indexed) of a's next entry inside current
        let target = a.entries[g];
        let pos = current.entries[g..]
            .iter()
            .position(|e| *e == target)
            .expect("same underlying module")
            + g;
        // bubble it left to slot g: transpositions pos, pos-1, ..., g+1
        // in 1-indexed terms
        for j in (g + 1..=pos).rev() {
            current = swap_adjacent(&current, j)?;
            debug_assert!(is_tf_order(alg, &current).unwrap());
            path.push(j);
        }
    }
    Ok(path)
}
