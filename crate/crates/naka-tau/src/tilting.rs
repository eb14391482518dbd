//! tau-tilting pairs: enumeration, the exchange poset, Bongartz and
//! co-Bongartz completions, AIR left mutation, and vertex-deletion
//! quotient algebras.

use crate::algebra::{
    hom_nonzero, is_in_gen, is_tau_rigid_pair, Algebra, Component, IndModule, Pair, QuiverKind,
    SignedInd,
};
use crate::oracle;
use itertools::Itertools;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TiltingError {
    #[error("pair is not tau-rigid")]
    NotRigid,
    #[error("{0:?} is not a summand of the pair")]
    NotASummand(String),
    #[error("summand is generated by the rest; not left mutable")]
    NotLeftMutable,
}

/// All tau-rigid pairs (as `Pair`s) of the algebra.
pub fn enumerate_tau_rigid(alg: &Algebra) -> Vec<Pair> {
    let mut atoms: Vec<SignedInd> = alg
        .indecomposables()
        .into_iter()
        .filter(|m| crate::algebra::is_tau_rigid_module(alg, m))
        .map(SignedInd::module)
        .collect();
    atoms.extend(alg.projectives().into_iter().map(SignedInd::shifted));
    // backtracking over the canonically ordered atom list
    let compatible = |chosen: &[usize], next: usize| -> bool {
        chosen.iter().all(|&i| {
            let pair = Pair::from_signed(&[atoms[i], atoms[next]]);
            is_tau_rigid_pair(alg, &pair)
        })
    };
    let mut out = vec![Pair::empty()];
    let mut stack: Vec<Vec<usize>> = (0..atoms.len()).map(|i| vec![i]).collect();
    while let Some(chosen) = stack.pop() {
        let entries: Vec<SignedInd> = chosen.iter().map(|&i| atoms[i]).collect();
        out.push(Pair::from_signed(&entries));
        let last = *chosen.last().unwrap();
        for next in last + 1..atoms.len() {
            if compatible(&chosen, next) {
                let mut ext = chosen.clone();
                ext.push(next);
                stack.push(ext);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// The exchange poset of tau-tilting pairs: nodes, Gen-classes, and Hasse
/// cover edges labeled by the exchanged summand position.
#[derive(Debug, Clone)]
pub struct ExchangeGraph {
    pub nodes: Vec<Pair>,
    /// indecomposable modules in `Gen(module part)`, per node
    pub gen_classes: Vec<BTreeSet<IndModule>>,
    /// directed Hasse covers `from > to`, labeled by the summand of `from`
    /// that is exchanged
    pub edges: Vec<(usize, usize, SignedInd)>,
}

pub fn gen_class(alg: &Algebra, pair: &Pair) -> BTreeSet<IndModule> {
    alg.indecomposables()
        .into_iter()
        .filter(|x| is_in_gen(alg, x, &pair.modules))
        .collect()
}

/// Enumerates all tau-tilting pairs and assembles the exchange poset
/// ordered by Gen-class inclusion.
pub fn enumerate_stautilt(alg: &Algebra) -> ExchangeGraph {
    let rank = alg.rank();
    let nodes: Vec<Pair> = enumerate_tau_rigid(alg)
        .into_iter()
        .filter(|p| p.size() == rank)
        .collect();
    let gen_classes: Vec<BTreeSet<IndModule>> =
        nodes.iter().map(|p| gen_class(alg, p)).collect();
    let mut edges = Vec::new();
    let n = nodes.len();
    for a in 0..n {
        'b: for b in 0..n {
            if a == b || !gen_classes[b].is_subset(&gen_classes[a]) {
                continue;
            }
            // cover: no strictly intermediate node
            for c in 0..n {
                if c != a
                    && c != b
                    && gen_classes[c].is_subset(&gen_classes[a])
                    && gen_classes[b].is_subset(&gen_classes[c])
                    && gen_classes[c] != gen_classes[a]
                    && gen_classes[c] != gen_classes[b]
                {
                    continue 'b;
                }
            }
            // exchanged summand: the summand of `a` not in `b`
            let exchanged = nodes[a]
                .summands()
                .into_iter()
                .find(|x| !nodes[b].contains(x))
                .expect("covers differ in exactly one summand");
            edges.push((a, b, exchanged));
        }
    }
    ExchangeGraph {
        nodes,
        gen_classes,
        edges,
    }
}

/// Bongartz completion. Single non-projective module over a connected
/// piece: `M + rad M + ... + P(t) + P(t+1) + ...` per the closed form;
/// multi-summand input goes through Jasso reduction; pairs go through the
/// vertex-deletion quotient.
pub fn bongartz(alg: &Algebra, pair: &Pair) -> Result<Pair, TiltingError> {
    if !is_tau_rigid_pair(alg, pair) {
        return Err(TiltingError::NotRigid);
    }
    if !pair.shifted.is_empty() {
        // complete the module part over the quotient algebra, then carry
        // the shifted part along
        let vertices: Vec<(usize, usize)> = pair
            .shifted
            .iter()
            .map(|p| (p.component, p.top))
            .collect();
        let quotient = quotient_algebra(alg, &vertices);
        let local_modules: Vec<IndModule> = pair
            .modules
            .iter()
            .map(|m| quotient.to_quotient(m).expect("Hom(P,M)=0 so M survives"))
            .collect();
        let inner = bongartz(&quotient.algebra, &Pair::from_modules(local_modules))?;
        let modules = inner
            .modules
            .iter()
            .map(|m| quotient.to_ambient(m))
            .collect();
        return Ok(Pair::new(modules, pair.shifted.clone()));
    }
    match pair.modules.len() {
        0 => Ok(Pair::from_modules(alg.projectives())),
        1 => Ok(Pair::from_modules(bongartz_indecomposable(
            alg,
            &pair.modules[0],
        ))),
        _ => {
            // peel through the tau-perpendicular category
            let wide = crate::reduction::jasso(alg, pair).map_err(|_| TiltingError::NotRigid)?;
            let mut modules = pair.modules.clone();
            for rel in &wide.rel_projectives {
                let x = crate::reduction::e_map_inverse(alg, pair, &SignedInd::module(*rel))
                    .expect("relative projectives lift to the Bongartz complement");
                debug_assert!(!x.is_shifted());
                modules.push(x.module);
            }
            Ok(Pair::from_modules(modules))
        }
    }
}

/// Closed form for one indecomposable: the summand list of `B(M)`.
fn bongartz_indecomposable(alg: &Algebra, m: &IndModule) -> Vec<IndModule> {
    let mut out: Vec<IndModule> = Vec::new();
    // all projectives of the other components
    for (c, comp) in alg.components.iter().enumerate() {
        if c != m.component {
            for v in 0..comp.rank() {
                out.push(alg.projective(c, v));
            }
        }
    }
    if m.is_projective(alg) {
        let c = m.component;
        for v in 0..alg.local_rank(c) {
            out.push(alg.projective(c, v));
        }
        return out;
    }
    let n = alg.local_rank(m.component);
    out.push(*m);
    for i in 1..m.len {
        out.push(m.radical_power(alg, i).unwrap());
    }
    for i in 0..n - m.len {
        let v = (m.top + i) % n;
        out.push(alg.projective(m.component, v));
    }
    out
}

/// Co-Bongartz completion: quotient tower of each module summand plus the
/// projectives with no maps into the Gen-class, shifted.
pub fn cobongartz(alg: &Algebra, pair: &Pair) -> Result<Pair, TiltingError> {
    if !is_tau_rigid_pair(alg, pair) {
        return Err(TiltingError::NotRigid);
    }
    // module part: Ext-projectives of Gen(module part) = the distinct
    // quotients M/rad^i that stay Ext-projective; for uniserials the
    // quotient-closure of the summand set is exactly Gen, and its
    // Ext-projectives are computed directly.
    let gen: Vec<IndModule> = gen_class(alg, pair).into_iter().collect();
    let t = oracle::TorsionClass {
        members: gen.clone(),
    };
    let modules = oracle::all_ext_projectives(alg, &t);
    // shifted part: projectives with Hom(P, Gen-class) = 0
    let shifted: Vec<IndModule> = alg
        .projectives()
        .into_iter()
        .filter(|p| gen.iter().all(|x| !hom_nonzero(alg, p, x)))
        .collect();
    Ok(Pair::new(modules, shifted))
}

/// The exchange data returned by a left mutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeSequence {
    pub exchanged: IndModule,
    /// minimal left approximation components into the middle term
    pub middle: Vec<IndModule>,
    pub cokernel: Option<IndModule>,
}

/// AIR left mutation of a tau-tilting pair at an unshifted summand `x`:
/// replace `x` by the cokernel of a minimal left approximation into the
/// other module summands, or by a shifted projective when the cokernel
/// vanishes.
pub fn air_mutate(
    alg: &Algebra,
    pair: &Pair,
    x: &IndModule,
    p: u64,
) -> Result<(Pair, ExchangeSequence), TiltingError> {
    if !pair.modules.contains(x) {
        return Err(TiltingError::NotASummand(format!("{x:?}")));
    }
    let rest: Vec<IndModule> = pair.modules.iter().filter(|m| *m != x).copied().collect();
    if is_in_gen(alg, x, &rest) {
        return Err(TiltingError::NotLeftMutable);
    }
    let approx = oracle::minimal_left_approx(alg, x, &rest, p);
    assert!(
        approx.cokernel.len() <= 1,
        "exchange cokernel is indecomposable"
    );
    let seq = ExchangeSequence {
        exchanged: *x,
        middle: approx.map.iter().map(|(u, _)| *u).collect(),
        cokernel: approx.cokernel.first().copied(),
    };
    let mutated = match seq.cokernel {
        Some(y) => Pair::new(
            rest.iter().copied().chain([y]).collect(),
            pair.shifted.clone(),
        ),
        None => {
            // find the unique projective completing the pair
            let candidate = alg
                .projectives()
                .into_iter()
                .find(|q| {
                    let trial = Pair::new(
                        rest.clone(),
                        pair.shifted.iter().copied().chain([*q]).collect(),
                    );
                    trial.size() == pair.size() && is_tau_rigid_pair(alg, &trial)
                })
                .expect("a completing shifted projective exists");
            Pair::new(
                rest.clone(),
                pair.shifted.iter().copied().chain([candidate]).collect(),
            )
        }
    };
    Ok((mutated, seq))
}

/// Result of deleting a set of vertices: the quotient algebra together
/// with the two-way transport of indecomposables.
#[derive(Debug, Clone)]
pub struct QuotientAlgebra {
    pub algebra: Algebra,
    /// deleted (component, vertex) pairs
    pub deleted: Vec<(usize, usize)>,
    /// map (quotient component index, quotient vertex) -> ambient
    /// (component, vertex)
    pub vertex_map: Vec<Vec<(usize, usize)>>,
}

impl QuotientAlgebra {
    /// Transports a quotient-algebra module to the ambient algebra
    /// (the underlying module is unchanged).
    pub fn to_ambient(&self, m: &IndModule) -> IndModule {
        let (c, v) = self.vertex_map[m.component][m.top];
        IndModule {
            component: c,
            top: v,
            len: m.len,
        }
    }

    /// Expresses an ambient module as a quotient-algebra module; `None`
    /// when a deleted vertex appears among its composition factors.
    pub fn to_quotient(&self, m: &IndModule) -> Option<IndModule> {
        for (qc, verts) in self.vertex_map.iter().enumerate() {
            for (qv, &(c, v)) in verts.iter().enumerate() {
                if c == m.component && v == m.top {
                    if m.len <= self.algebra.kupisch(qc, qv) {
                        return Some(IndModule {
                            component: qc,
                            top: qv,
                            len: m.len,
                        });
                    }
                    return None;
                }
            }
        }
        None
    }
}

/// Deletes a set of vertices. Cyclic components cut at a deleted vertex
/// fall apart into linear segments; Kupisch entries truncate at the first
/// deleted composition factor.
pub fn quotient_algebra(alg: &Algebra, deleted: &[(usize, usize)]) -> QuotientAlgebra {
    let deleted: BTreeSet<(usize, usize)> = deleted.iter().copied().collect();
    let mut components = Vec::new();
    let mut vertex_map = Vec::new();
    for (c, comp) in alg.components.iter().enumerate() {
        let n = comp.rank();
        let alive: Vec<usize> = (0..n).filter(|v| !deleted.contains(&(c, *v))).collect();
        if alive.is_empty() {
            continue;
        }
        let is_deleted = |v: usize| deleted.contains(&(c, v));
        if comp.kind == QuiverKind::Cyclic && alive.len() == n {
            // untouched cyclic component: only truncation is impossible
            components.push(comp.clone());
            vertex_map.push((0..n).map(|v| (c, v)).collect());
            continue;
        }
        // remaining vertices form linear segments: walk maximal runs of
        // alive vertices in arrow order (descending index, cyclically for
        // cyclic components)
        let mut segments: Vec<Vec<usize>> = Vec::new();
        match comp.kind {
            QuiverKind::Linear => {
                let mut current: Vec<usize> = Vec::new();
                for v in 0..n {
                    if is_deleted(v) {
                        if !current.is_empty() {
                            segments.push(std::mem::take(&mut current));
                        }
                    } else {
                        current.push(v);
                    }
                }
                if !current.is_empty() {
                    segments.push(current);
                }
            }
            QuiverKind::Cyclic => {
                // start each segment just above a deleted vertex
                for start in 0..n {
                    let below = (start + n - 1) % n;
                    if is_deleted(start) || !is_deleted(below) {
                        continue;
                    }
                    let mut seg = vec![start];
                    let mut v = (start + 1) % n;
                    while !is_deleted(v) {
                        seg.push(v);
                        v = (v + 1) % n;
                    }
                    segments.push(seg);
                }
            }
        }
        for seg in segments {
            // seg lists vertices in ascending quiver order: seg[0] is the
            // sink of the segment
            let kupisch: Vec<usize> = seg
                .iter()
                .enumerate()
                .map(|(i, &v)| {
                    // ambient P(v) truncated at the first deleted factor
                    // and at the segment floor
                    alg.kupisch(c, v).min(i + 1)
                })
                .collect();
            components.push(Component {
                kind: QuiverKind::Linear,
                kupisch,
            });
            vertex_map.push(seg.iter().map(|&v| (c, v)).collect());
        }
    }
    let algebra = if components.is_empty() {
        // rank-zero quotient: keep a well-formed empty carrier; callers
        // treat it as the zero category
        Algebra { components }
    } else {
        crate::algebra::validate_algebra(components).expect("quotient Kupisch data is valid")
    };
    QuotientAlgebra {
        algebra,
        deleted: deleted.into_iter().collect(),
        vertex_map,
    }
}

/// Hasse covers restricted to pairs containing `t`, used to cross-check
/// that the closed-form completions are the extrema.
pub fn completions_of(graph: &ExchangeGraph, t: &Pair) -> Vec<usize> {
    graph
        .nodes
        .iter()
        .enumerate()
        .filter(|(_, node)| {
            t.modules.iter().all(|m| node.modules.contains(m))
                && t.shifted.iter().all(|p| node.shifted.contains(p))
        })
        .map(|(i, _)| i)
        .collect()
}

/// Count of TF-orders predicted by the multinomial formula
/// `|M|! / prod a_i!` with `a_i` the projective-cover multiplicities.
pub fn tf_order_count_formula(modules: &[IndModule]) -> usize {
    let tops: Vec<(usize, usize)> = modules.iter().map(|m| (m.component, m.top)).collect();
    let fact = |k: usize| -> usize { (1..=k).product::<usize>().max(1) };
    let mut count = fact(modules.len());
    for key in tops.iter().unique() {
        let a = tops.iter().filter(|t| *t == key).count();
        count /= fact(a);
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    fn m(c: usize, t: usize, l: usize) -> IndModule {
        IndModule { component: c, top: t, len: l }
    }

    #[test]
    fn stautilt_counts() {
        let a3 = named::a3();
        let graph = enumerate_stautilt(&a3);
        assert_eq!(graph.nodes.len(), 14);
        // rank-1 field: exactly (S(0),0) and (0,S(0))
        let field = crate::algebra::validate_algebra(vec![Component {
            kind: QuiverKind::Linear,
            kupisch: vec![1],
        }])
        .unwrap();
        assert_eq!(enumerate_stautilt(&field).nodes.len(), 2);
    }

    #[test]
    fn poset_extremes() {
        for alg in named::all() {
            let graph = enumerate_stautilt(&alg);
            let all: BTreeSet<IndModule> = alg.indecomposables().into_iter().collect();
            let top = graph.gen_classes.iter().position(|g| *g == all).unwrap();
            let bottom = graph.gen_classes.iter().position(|g| g.is_empty()).unwrap();
            assert_eq!(graph.nodes[top], Pair::from_modules(alg.projectives()));
            assert_eq!(
                graph.nodes[bottom],
                Pair::new(vec![], alg.projectives())
            );
        }
    }

    #[test]
    fn out_degree_counts_left_mutable_summands() {
        for alg in [named::a3(), named::d3()] {
            let graph = enumerate_stautilt(&alg);
            for (i, node) in graph.nodes.iter().enumerate() {
                let expected = node
                    .modules
                    .iter()
                    .filter(|x| {
                        let rest: Vec<IndModule> = node
                            .modules
                            .iter()
                            .filter(|y| y != x)
                            .copied()
                            .collect();
                        !is_in_gen(&alg, x, &rest)
                    })
                    .count();
                let out = graph.edges.iter().filter(|(a, _, _)| *a == i).count();
                assert_eq!(out, expected, "{node:?}");
            }
        }
    }

    #[test]
    fn bongartz_examples() {
        let a4 = named::a4();
        let b = bongartz(&a4, &Pair::from_modules(vec![m(0, 1, 2)])).unwrap();
        assert_eq!(
            b.modules,
            vec![m(0, 0, 1), m(0, 1, 2), m(0, 1, 3), m(0, 2, 3)]
        );
        // projective input: the whole algebra
        let b = bongartz(&a4, &Pair::from_modules(vec![a4.projective(0, 2)])).unwrap();
        assert_eq!(b, Pair::from_modules(a4.projectives()));
        // pair input through the quotient algebra
        let b = bongartz(
            &a4,
            &Pair::new(vec![a4.simple(0, 0)], vec![a4.projective(0, 1)]),
        )
        .unwrap();
        assert_eq!(
            b,
            Pair::new(
                vec![m(0, 0, 1), m(0, 2, 1), m(0, 0, 3)],
                vec![a4.projective(0, 1)]
            )
        );
        // not rigid
        assert_eq!(
            bongartz(&a4, &Pair::from_modules(vec![m(0, 1, 2), m(0, 0, 2)])),
            Err(TiltingError::NotRigid)
        );
    }

    #[test]
    fn cobongartz_examples() {
        let a4 = named::a4();
        let c = cobongartz(&a4, &Pair::from_modules(vec![m(0, 1, 2)])).unwrap();
        assert_eq!(
            c,
            Pair::new(
                vec![m(0, 1, 1), m(0, 1, 2)],
                vec![a4.projective(0, 2), a4.projective(0, 3)]
            )
        );
        let lam = Pair::from_modules(a4.projectives());
        assert_eq!(cobongartz(&a4, &lam).unwrap(), lam);
        let c = cobongartz(
            &a4,
            &Pair::new(vec![a4.simple(0, 0)], vec![a4.projective(0, 1)]),
        )
        .unwrap();
        assert_eq!(
            c,
            Pair::new(
                vec![a4.simple(0, 0)],
                vec![
                    a4.projective(0, 1),
                    a4.projective(0, 2),
                    a4.projective(0, 3)
                ]
            )
        );
    }

    #[test]
    fn completions_are_poset_extremes() {
        for alg in named::all() {
            let graph = enumerate_stautilt(&alg);
            for pair in enumerate_tau_rigid(&alg) {
                if pair.size() == 0 || pair.size() == alg.rank() {
                    continue;
                }
                let b = bongartz(&alg, &pair).unwrap();
                let c = cobongartz(&alg, &pair).unwrap();
                let completions = completions_of(&graph, &pair);
                assert!(!completions.is_empty());
                let b_idx = graph.nodes.iter().position(|n| *n == b).unwrap();
                let c_idx = graph.nodes.iter().position(|n| *n == c).unwrap();
                for &i in &completions {
                    assert!(
                        graph.gen_classes[i].is_subset(&graph.gen_classes[b_idx]),
                        "Bongartz of {pair:?} not maximal over {alg:?}"
                    );
                    assert!(
                        graph.gen_classes[c_idx].is_subset(&graph.gen_classes[i]),
                        "co-Bongartz of {pair:?} not minimal over {alg:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn cobongartz_summand_characterization() {
        // X is a co-Bongartz complement summand iff it is a shifted
        // projective or a module generated by the pair (and compatible)
        for alg in named::all() {
            for pair in enumerate_tau_rigid(&alg) {
                if pair.size() >= alg.rank() {
                    continue;
                }
                let c = cobongartz(&alg, &pair).unwrap();
                let mut candidates: Vec<SignedInd> = alg
                    .indecomposables()
                    .into_iter()
                    .map(SignedInd::module)
                    .collect();
                candidates.extend(alg.projectives().into_iter().map(SignedInd::shifted));
                for x in candidates {
                    if pair.contains(&x) {
                        continue;
                    }
                    let in_complement = c.contains(&x);
                    let characterized = is_tau_rigid_pair(&alg, &pair.with(x))
                        && (x.is_shifted() || is_in_gen(&alg, &x.module, &pair.modules));
                    assert_eq!(
                        in_complement, characterized,
                        "{x:?} vs C({pair:?}) over {alg:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn almost_complete_pairs_have_two_completions() {
        for alg in [named::a3(), named::d3(), named::n2()] {
            let graph = enumerate_stautilt(&alg);
            for pair in enumerate_tau_rigid(&alg) {
                if pair.size() + 1 != alg.rank() {
                    continue;
                }
                let completions = completions_of(&graph, &pair);
                assert_eq!(completions.len(), 2, "{pair:?} over {alg:?}");
                // when the bigger completion exchanges a module summand,
                // AIR mutation lands on the smaller one
                let (hi, lo) = {
                    let (a, b) = (completions[0], completions[1]);
                    if graph.gen_classes[b].is_subset(&graph.gen_classes[a]) {
                        (a, b)
                    } else {
                        (b, a)
                    }
                };
                let exchanged = graph.nodes[hi]
                    .summands()
                    .into_iter()
                    .find(|x| !pair.contains(x))
                    .unwrap();
                if !exchanged.is_shifted() {
                    let (mutated, _) =
                        air_mutate(&alg, &graph.nodes[hi], &exchanged.module, 2).unwrap();
                    assert_eq!(mutated, graph.nodes[lo], "{pair:?} over {alg:?}");
                }
            }
        }
    }

    #[test]
    fn cobongartz_matches_quotient_tower() {
        // for one indecomposable: C(M) = (quotient tower, completing
        // shifted projectives of the same component run)
        for alg in named::all() {
            for m in alg.indecomposables() {
                if !crate::algebra::is_tau_rigid_module(&alg, &m) {
                    continue;
                }
                let n = alg.local_rank(m.component);
                let mut modules = vec![m];
                for i in 1..m.len.min(n) {
                    modules.push(m.top_quotient(i).unwrap());
                }
                let mut shifted = Vec::new();
                if m.len < n {
                    for i in 1..=n - m.len {
                        shifted.push(alg.projective(m.component, (m.top + i) % n));
                    }
                }
                for (c, comp) in alg.components.iter().enumerate() {
                    if c != m.component {
                        for v in 0..comp.rank() {
                            shifted.push(alg.projective(c, v));
                        }
                    }
                }
                let expected = Pair::new(modules, shifted);
                let got = cobongartz(&alg, &Pair::from_modules(vec![m])).unwrap();
                assert_eq!(got, expected, "C({m:?}) over {alg:?}");
            }
        }
    }

    #[test]
    fn air_mutation_examples() {
        let a3 = named::a3();
        let lam = Pair::from_modules(a3.projectives());
        let (mutated, seq) = air_mutate(&a3, &lam, &a3.projective(0, 0), 2).unwrap();
        assert_eq!(
            mutated,
            Pair::from_modules(vec![m(0, 1, 1), m(0, 1, 2), m(0, 2, 2)])
        );
        assert_eq!(seq.cokernel, Some(a3.simple(0, 1)));
        let t = Pair::from_modules(vec![m(0, 1, 1), m(0, 1, 2), m(0, 2, 2)]);
        let (mutated, seq) = air_mutate(&a3, &t, &a3.projective(0, 1), 2).unwrap();
        // the approximation is P(1) ->> S(1) with vanishing cokernel; the
        // unique shifted completion of {S(1), P(2)} is P(0)[1], since
        // Hom(P(0), S(1)) = Hom(P(0), P(2)) = 0 while Hom(P(1), S(1)) != 0
        assert_eq!(seq.middle, vec![m(0, 1, 1)]);
        assert_eq!(seq.cokernel, None);
        assert_eq!(
            mutated,
            Pair::new(vec![m(0, 1, 1), m(0, 2, 2)], vec![a3.projective(0, 0)])
        );
        assert_eq!(
            air_mutate(&a3, &t, &a3.simple(0, 1), 2),
            Err(TiltingError::NotLeftMutable)
        );
    }

    #[test]
    fn quotient_examples() {
        let a4 = named::a4();
        let q = quotient_algebra(&a4, &[(0, 1)]);
        assert_eq!(q.algebra.components.len(), 1);
        assert_eq!(q.algebra.components[0].kind, QuiverKind::Linear);
        // segment is (2, 3, 0) with lengths 1, 2, 3
        assert_eq!(q.algebra.components[0].kupisch, vec![1, 2, 3]);
        assert_eq!(q.vertex_map[0], vec![(0, 2), (0, 3), (0, 0)]);
        let a3 = named::a3();
        let q = quotient_algebra(&a3, &[(0, 2)]);
        assert_eq!(q.algebra.components[0].kupisch, vec![1, 2]);
        let q = quotient_algebra(&a3, &[]);
        assert_eq!(q.algebra, a3);
    }

    #[test]
    fn exchange_sequence_structure() {
        // middle term has at most one projective summand, no summand
        // generates another, and the AIR edges agree with Hasse covers
        for alg in [named::a3(), named::d3(), named::a4()] {
            let graph = enumerate_stautilt(&alg);
            for (i, node) in graph.nodes.iter().enumerate() {
                if !node.shifted.is_empty() {
                    // the exchange-sequence lemmas concern mutations
                    // between tau-tilting modules
                    continue;
                }
                for x in node.modules.clone() {
                    let rest: Vec<IndModule> =
                        node.modules.iter().filter(|m| **m != x).copied().collect();
                    if is_in_gen(&alg, &x, &rest) {
                        continue;
                    }
                    let (mutated, seq) = air_mutate(&alg, node, &x, 2).unwrap();
                    // mutation target is a Hasse neighbor below
                    let j = graph.nodes.iter().position(|n| *n == mutated).unwrap();
                    assert!(graph
                        .edges
                        .iter()
                        .any(|(a, b, _)| (*a, *b) == (i, j)));
                    let projs: Vec<&IndModule> = seq
                        .middle
                        .iter()
                        .filter(|u| u.is_projective(&alg))
                        .collect();
                    assert!(projs.len() <= 1);
                    for u1 in &seq.middle {
                        for u2 in &seq.middle {
                            if u1 != u2 {
                                assert!(!is_in_gen(&alg, u1, std::slice::from_ref(u2)));
                            }
                        }
                    }
                    if let Some(y) = seq.cokernel {
                        // decompose middle per the exchange-sequence
                        // structure: one summand generates Y
                        let u1 = seq
                            .middle
                            .iter()
                            .find(|u| is_in_gen(&alg, &y, std::slice::from_ref(*u)))
                            .copied()
                            .expect("some middle summand generates the cokernel");
                        for u2 in seq.middle.iter().filter(|u| **u != u1) {
                            assert!(is_in_gen(&alg, u2, &[x]));
                        }
                        assert!(!is_in_gen(&alg, &u1, &[x]));
                        // X projective iff U1 projective; otherwise X is a
                        // radical power of U1
                        assert_eq!(
                            x.is_projective(&alg),
                            u1.is_projective(&alg),
                            "node={node:?} x={x:?} u1={u1:?} seq={seq:?}"
                        );
                        if !x.is_projective(&alg) {
                            let found = (1..u1.len)
                                .any(|k| u1.radical_power(&alg, k) == Some(x));
                            assert!(found, "{x:?} is not a radical power of {u1:?}");
                        }
                    }
                }
            }
        }
    }
}
