//! tau-perpendicular (Jasso) reduction: the wide category J(M,P), its
//! presentation as the module category of a smaller Nakayama algebra, and
//! the E- and V-maps between ambient and reduced tau-rigid pairs.
//!
//! Everything is computed with ambient windows: membership in J(T) is a
//! pair of Hom-vanishing conditions, submodules of a J-object taken
//! inside J are the ambient radical powers that happen to lie in J, and a
//! map in J is epi exactly when it is an ambient epi (the subcategory is
//! closed under kernels and cokernels).

use crate::algebra::{
    hom_nonzero, is_in_gen, is_tau_rigid_pair, torsion_free_part, Algebra, IndModule, Pair,
    SignedInd,
};
use crate::tilting::{self, QuotientAlgebra};
use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("pair is not tau-rigid")]
    NotRigid,
    #[error("summand does not extend the pair to a tau-rigid pair")]
    NotComposable,
    #[error("object is not in the image of the reduction map")]
    NotInImage,
    #[error("{0} is not a summand of the co-Bongartz complement")]
    NotCoBongartzSummand(String),
}

/// The tau-perpendicular category J(T) of a tau-rigid pair, presented as
/// the module category of the Nakayama algebra `gamma`.
#[derive(Debug, Clone)]
pub struct WideCategory {
    pub defining: Vec<SignedInd>,
    pub gamma: Algebra,
    /// relative projectives in ambient coordinates, indexed consistently
    /// with `gamma`'s vertex numbering
    pub rel_projectives: Vec<IndModule>,
    /// all J(T)-indecomposables, ambient coordinates
    pub objects: Vec<IndModule>,
    to_gamma: BTreeMap<IndModule, IndModule>,
    from_gamma: BTreeMap<IndModule, IndModule>,
}

impl WideCategory {
    pub fn contains(&self, x: &IndModule) -> bool {
        self.to_gamma.contains_key(x)
    }

    pub fn to_gamma(&self, x: &IndModule) -> Option<IndModule> {
        self.to_gamma.get(x).copied()
    }

    pub fn from_gamma(&self, x: &IndModule) -> Option<IndModule> {
        self.from_gamma.get(x).copied()
    }

    pub fn to_gamma_signed(&self, x: &SignedInd) -> Option<SignedInd> {
        self.to_gamma(&x.module).map(|m| SignedInd {
            module: m,
            shift: x.shift,
        })
    }

    pub fn from_gamma_signed(&self, x: &SignedInd) -> Option<SignedInd> {
        self.from_gamma(&x.module).map(|m| SignedInd {
            module: m,
            shift: x.shift,
        })
    }
}

/// Does `x` satisfy the J(T) membership conditions
/// `Hom(M, x) = 0`, `Hom(x, tau M) = 0`, `Hom(P, x) = 0`?
pub fn in_perpendicular(alg: &Algebra, entries: &[SignedInd], x: &IndModule) -> bool {
    entries.iter().all(|e| {
        if e.is_shifted() {
            !hom_nonzero(alg, &e.module, x)
        } else {
            let m = &e.module;
            if hom_nonzero(alg, m, x) {
                return false;
            }
            match m.tau(alg) {
                Some(tau) => !hom_nonzero(alg, x, &tau),
                None => true,
            }
        }
    })
}

type JassoCache = HashMap<(Algebra, Vec<SignedInd>), Rc<WideCategory>>;
type EMapCache = HashMap<(Algebra, Vec<SignedInd>, SignedInd), Option<SignedInd>>;

thread_local! {
    static JASSO_CACHE: RefCell<JassoCache> = RefCell::new(HashMap::new());
    static EMAP_CACHE: RefCell<EMapCache> = RefCell::new(HashMap::new());
}

/// Jasso reduction of a pair (canonical summand order).
pub fn jasso(alg: &Algebra, pair: &Pair) -> Result<WideCategory, ReductionError> {
    if !is_tau_rigid_pair(alg, pair) {
        return Err(ReductionError::NotRigid);
    }
    jasso_entries(alg, &pair.summands())
}

/// Jasso reduction, peeling the last entry first.
pub fn jasso_entries(alg: &Algebra, entries: &[SignedInd]) -> Result<WideCategory, ReductionError> {
    jasso_rc(alg, entries).map(|rc| (*rc).clone())
}

fn jasso_rc(alg: &Algebra, entries: &[SignedInd]) -> Result<Rc<WideCategory>, ReductionError> {
    let key = (alg.clone(), entries.to_vec());
    if let Some(hit) = JASSO_CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return Ok(hit);
    }
    let wide = Rc::new(jasso_entries_uncached(alg, entries)?);
    JASSO_CACHE.with(|c| c.borrow_mut().insert(key, Rc::clone(&wide)));
    Ok(wide)
}

fn jasso_entries_uncached(
    alg: &Algebra,
    entries: &[SignedInd],
) -> Result<WideCategory, ReductionError> {
    if !is_tau_rigid_pair(alg, &Pair::from_signed(entries)) {
        return Err(ReductionError::NotRigid);
    }
    let Some((last, rest)) = entries.split_last() else {
        return Ok(identity_wide(alg));
    };
    if rest.is_empty() {
        return Ok(jasso_single(alg, last));
    }
    let outer = jasso_single_rc(alg, last);
    let mut inner_entries = Vec::with_capacity(rest.len());
    for e in rest {
        let reduced = e_map_single(alg, last, e)?;
        let local = outer
            .to_gamma_signed(&reduced)
            .expect("reduction lands in the perpendicular category");
        inner_entries.push(local);
    }
    let inner = jasso_rc(&outer.gamma, &inner_entries)?;
    // compose the two levels
    let rel_projectives = inner
        .rel_projectives
        .iter()
        .map(|r| outer.from_gamma(r).unwrap())
        .collect();
    let mut to_gamma = BTreeMap::new();
    let mut from_gamma = BTreeMap::new();
    let mut objects = Vec::new();
    for x in &outer.objects {
        let mid = outer.to_gamma(x).unwrap();
        if let Some(low) = inner.to_gamma(&mid) {
            to_gamma.insert(*x, low);
            from_gamma.insert(low, *x);
            objects.push(*x);
        }
    }
    objects.sort();
    Ok(WideCategory {
        defining: entries.to_vec(),
        gamma: inner.gamma.clone(),
        rel_projectives,
        objects,
        to_gamma,
        from_gamma,
    })
}

fn identity_wide(alg: &Algebra) -> WideCategory {
    let objects = alg.indecomposables();
    let to_gamma: BTreeMap<IndModule, IndModule> =
        objects.iter().map(|m| (*m, *m)).collect();
    WideCategory {
        defining: Vec::new(),
        gamma: alg.clone(),
        rel_projectives: alg.projectives(),
        objects: objects.clone(),
        from_gamma: to_gamma.clone(),
        to_gamma,
    }
}

fn jasso_single_rc(alg: &Algebra, entry: &SignedInd) -> Rc<WideCategory> {
    jasso_rc(alg, std::slice::from_ref(entry)).expect("a single summand is tau-rigid")
}

fn jasso_single(alg: &Algebra, entry: &SignedInd) -> WideCategory {
    if entry.is_shifted() || entry.module.is_projective(alg) {
        // J = P^perp: delete the top vertex of the projective
        let p = entry.module;
        let quotient = tilting::quotient_algebra(alg, &[(p.component, p.top)]);
        return wide_from_quotient(alg, vec![*entry], &quotient);
    }
    let m = entry.module;
    let membership: Vec<IndModule> = alg
        .indecomposables()
        .into_iter()
        .filter(|x| in_perpendicular(alg, std::slice::from_ref(entry), x))
        .collect();
    // relative projectives: torsion-free parts of the Bongartz complement
    let mut rel_projs = Vec::new();
    for x in bongartz_complement_indecomposable(alg, &m) {
        let f = torsion_free_part(alg, &[m], &x).expect("complement summands have nonzero f-part");
        debug_assert!(membership.contains(&f));
        if !rel_projs.contains(&f) {
            rel_projs.push(f);
        }
    }
    assemble_wide(alg, vec![*entry], membership, rel_projs)
}

/// Bongartz complement summand list of one non-projective indecomposable.
fn bongartz_complement_indecomposable(alg: &Algebra, m: &IndModule) -> Vec<IndModule> {
    let n = alg.local_rank(m.component);
    let mut out = Vec::new();
    for (c, comp) in alg.components.iter().enumerate() {
        if c != m.component {
            for v in 0..comp.rank() {
                out.push(alg.projective(c, v));
            }
        }
    }
    for i in 1..m.len {
        out.push(m.radical_power(alg, i).unwrap());
    }
    for i in 0..n - m.len {
        out.push(alg.projective(m.component, (m.top + i) % n));
    }
    out
}

fn wide_from_quotient(
    _alg: &Algebra,
    defining: Vec<SignedInd>,
    quotient: &QuotientAlgebra,
) -> WideCategory {
    let mut to_gamma = BTreeMap::new();
    let mut from_gamma = BTreeMap::new();
    let mut objects = Vec::new();
    for q in quotient.algebra.indecomposables() {
        let ambient = quotient.to_ambient(&q);
        to_gamma.insert(ambient, q);
        from_gamma.insert(q, ambient);
        objects.push(ambient);
    }
    objects.sort();
    let rel_projectives = quotient
        .algebra
        .projectives()
        .iter()
        .map(|p| quotient.to_ambient(p))
        .collect();
    WideCategory {
        defining,
        gamma: quotient.algebra.clone(),
        rel_projectives,
        objects,
        to_gamma,
        from_gamma,
    }
}

/// Builds the reduced algebra from the membership list and the relative
/// projectives, by walking relative radical series with ambient windows.
fn assemble_wide(
    alg: &Algebra,
    defining: Vec<SignedInd>,
    membership: Vec<IndModule>,
    rel_projs: Vec<IndModule>,
) -> WideCategory {
    let is_member = |x: &IndModule| membership.contains(x);
    // relative radical: first ambient radical power that stays in J
    let rad_w = |x: &IndModule| -> Option<IndModule> {
        (1..x.len)
            .filter_map(|k| x.radical_power(alg, k))
            .find(|s| is_member(s))
    };
    let w_length = |x: &IndModule| -> usize {
        let mut len = 1;
        let mut cur = *x;
        while let Some(next) = rad_w(&cur) {
            len += 1;
            cur = next;
        }
        len
    };
    // cover: the unique relative projective with an ambient epi onto x
    let cover_index = |x: &IndModule| -> usize {
        let hits: Vec<usize> = rel_projs
            .iter()
            .enumerate()
            .filter(|(_, r)| is_in_gen(alg, x, std::slice::from_ref(r)))
            .map(|(i, _)| i)
            .collect();
        assert_eq!(hits.len(), 1, "unique relative projective cover of {x:?}");
        hits[0]
    };
    let glens: Vec<usize> = rel_projs.iter().map(w_length).collect();
    let succ: Vec<Option<usize>> = rel_projs
        .iter()
        .map(|r| rad_w(r).map(|s| cover_index(&s)))
        .collect();
    // successor edges form disjoint chains and cycles
    let mut incoming = vec![0usize; rel_projs.len()];
    for s in succ.iter().flatten() {
        incoming[*s] += 1;
    }
    assert!(incoming.iter().all(|&c| c <= 1), "successor map is injective");
    let mut assigned = vec![false; rel_projs.len()];
    struct RawComponent {
        kind: crate::algebra::QuiverKind,
        /// relative-projective indices in gamma vertex order 0..n-1
        members: Vec<usize>,
    }
    let mut raw: Vec<RawComponent> = Vec::new();
    // chains: start from nodes with no incoming edge, follow successors
    for start in 0..rel_projs.len() {
        if assigned[start] || incoming[start] > 0 {
            continue;
        }
        let mut path = vec![start];
        let mut cur = start;
        while let Some(next) = succ[cur] {
            if next == start {
                break; // self-loops are handled as cycles below
            }
            path.push(next);
            cur = next;
        }
        if succ[cur].is_none() {
            for &i in &path {
                assigned[i] = true;
            }
            path.reverse(); // sink gets vertex 0
            raw.push(RawComponent {
                kind: crate::algebra::QuiverKind::Linear,
                members: path,
            });
        }
    }
    // cycles: whatever is left
    for start in 0..rel_projs.len() {
        if assigned[start] {
            continue;
        }
        let mut cycle = vec![start];
        assigned[start] = true;
        let mut cur = succ[start].expect("unassigned node lies on a cycle");
        while cur != start {
            cycle.push(cur);
            assigned[cur] = true;
            cur = succ[cur].expect("cycle is closed");
        }
        // cycle[k+1] = succ(cycle[k]) walks downward; vertex numbers run
        // upward, so reverse and rotate the smallest ambient key to 0
        cycle.reverse();
        let min_pos = (0..cycle.len())
            .min_by_key(|&i| {
                let r = rel_projs[cycle[i]];
                (r.component, r.top, r.len)
            })
            .unwrap();
        cycle.rotate_left(min_pos);
        raw.push(RawComponent {
            kind: crate::algebra::QuiverKind::Cyclic,
            members: cycle,
        });
    }
    raw.sort_by_key(|c| {
        let r = rel_projs[c.members[0]];
        (
            c.members
                .iter()
                .map(|&i| (rel_projs[i].component, rel_projs[i].top))
                .min()
                .unwrap(),
            r.len,
        )
    });
    let components: Vec<crate::algebra::Component> = raw
        .iter()
        .map(|c| crate::algebra::Component {
            kind: c.kind,
            kupisch: c.members.iter().map(|&i| glens[i]).collect(),
        })
        .collect();
    let gamma = if components.is_empty() {
        Algebra { components }
    } else {
        crate::algebra::validate_algebra(components)
            .expect("reduced Kupisch data is a valid Nakayama algebra")
    };
    // gamma coordinates of every member
    let gamma_vertex: BTreeMap<usize, (usize, usize)> = raw
        .iter()
        .enumerate()
        .flat_map(|(ci, c)| {
            c.members
                .iter()
                .enumerate()
                .map(move |(v, &ri)| (ri, (ci, v)))
        })
        .collect();
    let mut to_gamma = BTreeMap::new();
    let mut from_gamma = BTreeMap::new();
    for x in &membership {
        let (ci, v) = gamma_vertex[&cover_index(x)];
        let g = IndModule {
            component: ci,
            top: v,
            len: w_length(x),
        };
        to_gamma.insert(*x, g);
        let dup = from_gamma.insert(g, *x);
        assert!(dup.is_none(), "object map is a bijection");
    }
    assert_eq!(to_gamma.len(), gamma.indecomposables().len());
    // order the relative projectives by their gamma vertex
    let mut ordered: Vec<(IndModule, IndModule)> = rel_projs
        .iter()
        .map(|r| (to_gamma[r], *r))
        .collect();
    ordered.sort();
    WideCategory {
        defining,
        gamma,
        rel_projectives: ordered.into_iter().map(|(_, r)| r).collect(),
        objects: membership,
        to_gamma,
        from_gamma,
    }
}

/// The V-map over closed forms for a single unshifted non-projective or
/// projective summand; see `v_map` for the general entry point.
fn v_map_single(alg: &Algebra, t: &SignedInd, x: &SignedInd) -> Option<SignedInd> {
    if t.is_shifted() {
        // V_{Q[1]}(P[1]) = f_Q P
        if !x.is_shifted() {
            return None;
        }
        let f = torsion_free_part(alg, &[t.module], &x.module)?;
        return Some(SignedInd::module(f));
    }
    let m = t.module;
    if !x.is_shifted() {
        // X = M/rad^i M generated by M
        let x = x.module;
        if x.component != m.component || x.top != m.top || x.len >= m.len {
            return None;
        }
        let i = x.len;
        let rad = m.radical_power(alg, i).unwrap();
        return Some(SignedInd::module(if m.is_projective(alg) {
            rad.projective_cover(alg)
        } else {
            rad
        }));
    }
    // X = P(j)[1] with Hom(P(j), M) = 0
    let q = x.module;
    if hom_nonzero(alg, &q, &m) {
        return None;
    }
    if m.is_projective(alg) || q.component != m.component {
        return Some(SignedInd::module(q));
    }
    let n = alg.local_rank(m.component);
    let offset = (q.top + n - m.top) % n;
    if offset == n - m.len {
        // the last shifted slot maps to the projective cover of M
        Some(SignedInd::module(m.projective_cover(alg)))
    } else {
        Some(SignedInd::module(q))
    }
}

/// The V-map from the co-Bongartz complement of `pair` to its Bongartz
/// complement: closed form for a single summand; for larger pairs the
/// reduction map transports it, since a complement summand reduces to
/// the shift of the reduction of its V-image.
pub fn v_map(alg: &Algebra, pair: &Pair, x: &SignedInd) -> Result<SignedInd, ReductionError> {
    let composable = !pair.contains(x)
        && is_tau_rigid_pair(alg, &pair.with(*x))
        && (x.is_shifted() || is_in_gen(alg, &x.module, &pair.modules));
    if !composable {
        return Err(ReductionError::NotCoBongartzSummand(format!("{x:?}")));
    }
    let summands = pair.summands();
    if summands.is_empty() {
        // co-Bongartz complement of (0,0) is all shifted projectives
        return Ok(SignedInd::module(x.module));
    }
    if summands.len() == 1 {
        if let Some(v) = v_map_single(alg, &summands[0], x) {
            return Ok(v);
        }
        return Err(ReductionError::NotCoBongartzSummand(format!("{x:?}")));
    }
    let down = e_map_entries(alg, &summands, x)?;
    debug_assert!(down.is_shifted(), "complement summands reduce to shifts");
    e_map_inverse(alg, pair, &SignedInd::module(down.module))
}

/// Inverse of the V-map, by the same transport in the other direction.
pub fn v_map_inverse(
    alg: &Algebra,
    pair: &Pair,
    target: &SignedInd,
) -> Result<SignedInd, ReductionError> {
    if target.is_shifted() {
        return Err(ReductionError::NotInImage);
    }
    let summands = pair.summands();
    if summands.is_empty() {
        if !target.module.is_projective(alg) {
            return Err(ReductionError::NotInImage);
        }
        return Ok(SignedInd::shifted(target.module));
    }
    let down = e_map_entries(alg, &summands, target)?;
    if down.is_shifted() {
        return Err(ReductionError::NotInImage);
    }
    e_map_inverse(alg, pair, &SignedInd::shifted(down.module))
}

/// One reduction step `E_L(X)` for a single summand `L`.
fn e_map_single(
    alg: &Algebra,
    l: &SignedInd,
    x: &SignedInd,
) -> Result<SignedInd, ReductionError> {
    if l == x || !is_tau_rigid_pair(alg, &Pair::from_signed(&[*l, *x])) {
        return Err(ReductionError::NotComposable);
    }
    if l.is_shifted() {
        if x.is_shifted() {
            // (f_{L[-1]}(X[-1]))[1]
            let f = torsion_free_part(alg, &[l.module], &x.module)
                .expect("distinct projectives have nonzero torsion-free part");
            return Ok(SignedInd::shifted(f));
        }
        return Ok(*x);
    }
    let m = l.module;
    if !x.is_shifted() && !is_in_gen(alg, &x.module, &[m]) {
        let f = torsion_free_part(alg, &[m], &x.module)
            .expect("modules not generated by M have nonzero torsion-free part");
        return Ok(SignedInd::module(f));
    }
    // X in Gen M or X shifted: reduce through the V-map
    let v = v_map_single(alg, l, x).ok_or(ReductionError::NotComposable)?;
    let f = torsion_free_part(alg, &[m], &v.module).expect("V-image has nonzero torsion-free part");
    Ok(SignedInd::shifted(f))
}

/// The reduction map `E_T(X)` into J(T), peeling the last entry first.
/// The result is in ambient coordinates.
pub fn e_map_entries(
    alg: &Algebra,
    entries: &[SignedInd],
    x: &SignedInd,
) -> Result<SignedInd, ReductionError> {
    let key = (alg.clone(), entries.to_vec(), *x);
    if let Some(hit) = EMAP_CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return hit.ok_or(ReductionError::NotComposable);
    }
    let computed = e_map_entries_uncached(alg, entries, x);
    EMAP_CACHE.with(|c| c.borrow_mut().insert(key, computed.clone().ok()));
    computed
}

fn e_map_entries_uncached(
    alg: &Algebra,
    entries: &[SignedInd],
    x: &SignedInd,
) -> Result<SignedInd, ReductionError> {
    let union = Pair::from_signed(entries).with(*x);
    if union.size() != entries.len() + 1 || !is_tau_rigid_pair(alg, &union) {
        return Err(ReductionError::NotComposable);
    }
    let Some((last, rest)) = entries.split_last() else {
        return Ok(*x);
    };
    let x1 = e_map_single(alg, last, x)?;
    if rest.is_empty() {
        return Ok(x1);
    }
    let outer = jasso_single_rc(alg, last);
    let x1_local = outer
        .to_gamma_signed(&x1)
        .expect("reduced summand lies in the perpendicular category");
    let mut rest_local = Vec::with_capacity(rest.len());
    for e in rest {
        let r = e_map_single(alg, last, e)?;
        rest_local.push(outer.to_gamma_signed(&r).unwrap());
    }
    let inner = e_map_entries(&outer.gamma, &rest_local, &x1_local)?;
    Ok(outer.from_gamma_signed(&inner).unwrap())
}

pub fn e_map(alg: &Algebra, pair: &Pair, x: &SignedInd) -> Result<SignedInd, ReductionError> {
    e_map_entries(alg, &pair.summands(), x)
}

/// Inverse of the reduction map: the unique compatible `X` with
/// `E_T(X) = Y`.
pub fn e_map_inverse(
    alg: &Algebra,
    pair: &Pair,
    target: &SignedInd,
) -> Result<SignedInd, ReductionError> {
    let entries = pair.summands();
    let mut candidates: Vec<SignedInd> = alg
        .indecomposables()
        .into_iter()
        .map(SignedInd::module)
        .collect();
    candidates.extend(alg.projectives().into_iter().map(SignedInd::shifted));
    for cand in candidates {
        if pair.contains(&cand) {
            continue;
        }
        if let Ok(y) = e_map_entries(alg, &entries, &cand) {
            if y == *target {
                return Ok(cand);
            }
        }
    }
    Err(ReductionError::NotInImage)
}

pub fn e_map_inverse_entries(
    alg: &Algebra,
    entries: &[SignedInd],
    target: &SignedInd,
) -> Result<SignedInd, ReductionError> {
    e_map_inverse(alg, &Pair::from_signed(entries), target)
}
