//! Torsion-class closure by fixpoint and Ext-projective detection.

use crate::algebra::{hom_nonzero, is_in_gen, Algebra, IndModule};

/// A set of indecomposables closed under quotients and extensions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionClass {
    pub members: Vec<IndModule>,
}

impl TorsionClass {
    pub fn contains(&self, m: &IndModule) -> bool {
        self.members.binary_search(m).is_ok()
    }
}

/// Least torsion class containing the given indecomposables: close under
/// quotients, then repeatedly glue: add Z whenever some `rad^k Z` and
/// `Z/rad^k Z` both already belong.
pub fn filt_gen_closure(alg: &Algebra, seeds: &[IndModule]) -> TorsionClass {
    let all = alg.indecomposables();
    let mut members: Vec<IndModule> = Vec::new();
    for z in &all {
        if is_in_gen(alg, z, seeds) {
            members.push(*z);
        }
    }
    loop {
        let mut added = false;
        for z in &all {
            if members.contains(z) {
                continue;
            }
            let glued = (1..z.len).any(|k| {
                let sub = z.radical_power(alg, k).unwrap();
                let quo = z.top_quotient(k).unwrap();
                members.contains(&sub) && members.contains(&quo)
            });
            if glued {
                members.push(*z);
                added = true;
            }
        }
        if !added {
            break;
        }
    }
    members.sort();
    TorsionClass { members }
}

/// Checks quotient closure and gluing closure.
pub fn is_torsion_class(alg: &Algebra, t: &TorsionClass) -> bool {
    for z in &t.members {
        for k in 1..=z.len {
            let quo = z.top_quotient(k).unwrap();
            if !t.contains(&quo) {
                return false;
            }
        }
    }
    for z in alg.indecomposables() {
        if t.contains(&z) {
            continue;
        }
        for k in 1..z.len {
            let sub = z.radical_power(alg, k).unwrap();
            let quo = z.top_quotient(k).unwrap();
            if t.contains(&sub) && t.contains(&quo) {
                return false;
            }
        }
    }
    true
}

/// Ext-projectives of a torsion class, split into split and non-split
/// ones. `X` is Ext-projective iff `Hom(Y, tau X) = 0` for all members
/// `Y`; it is non-split iff some other member surjects onto it.
pub fn ext_projectives(alg: &Algebra, t: &TorsionClass) -> (Vec<IndModule>, Vec<IndModule>) {
    let mut split = Vec::new();
    let mut nonsplit = Vec::new();
    for x in &t.members {
        let projective = match x.tau(alg) {
            None => true,
            Some(tau) => t.members.iter().all(|y| !hom_nonzero(alg, y, &tau)),
        };
        if !projective {
            continue;
        }
        let covered = t
            .members
            .iter()
            .any(|z| z != x && is_in_gen(alg, x, std::slice::from_ref(z)));
        if covered {
            nonsplit.push(*x);
        } else {
            split.push(*x);
        }
    }
    (split, nonsplit)
}

pub fn all_ext_projectives(alg: &Algebra, t: &TorsionClass) -> Vec<IndModule> {
    let (mut s, ns) = ext_projectives(alg, t);
    s.extend(ns);
    s.sort();
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    fn m(c: usize, t: usize, l: usize) -> IndModule {
        IndModule { component: c, top: t, len: l }
    }

    #[test]
    fn closure_examples() {
        let a4 = named::a4();
        // projectives generate everything
        let t = filt_gen_closure(&a4, &a4.projectives());
        assert_eq!(t.members.len(), a4.indecomposables().len());
        // empty
        assert!(filt_gen_closure(&a4, &[]).members.is_empty());
        // Gen(J((1,2) + S(0))) = {P(1), S(2)} quotient-closed part, closing
        // up to Gen(Bhat)
        let seeds = vec![a4.projective(0, 1), a4.simple(0, 2)];
        let t = filt_gen_closure(&a4, &seeds);
        let expect = vec![
            m(0, 1, 1),
            m(0, 1, 2),
            m(0, 1, 3),
            m(0, 2, 1),
            m(0, 2, 2),
            m(0, 2, 3),
        ];
        assert_eq!(t.members, expect);
        assert!(is_torsion_class(&a4, &t));
    }

    #[test]
    fn closure_idempotent() {
        for alg in named::all() {
            let ind = alg.indecomposables();
            for seed in ind.chunks(3) {
                let t = filt_gen_closure(&alg, seed);
                assert!(is_torsion_class(&alg, &t));
                let again = filt_gen_closure(&alg, &t.members);
                assert_eq!(t, again);
            }
        }
    }

    #[test]
    fn ext_projective_examples() {
        let a4 = named::a4();
        // whole module category: projectives, all split
        let t = filt_gen_closure(&a4, &a4.projectives());
        let (split, nonsplit) = ext_projectives(&a4, &t);
        assert_eq!(split, a4.projectives());
        assert!(nonsplit.is_empty());
        // Gen(Bhat) for B = (1,2), C = S(0)
        let t = filt_gen_closure(&a4, &[a4.projective(0, 1), a4.simple(0, 2)]);
        let all = all_ext_projectives(&a4, &t);
        assert_eq!(
            all,
            vec![m(0, 1, 1), m(0, 1, 2), m(0, 1, 3), m(0, 2, 3)]
        );
        let (_, nonsplit) = ext_projectives(&a4, &t);
        assert_eq!(nonsplit, vec![m(0, 1, 1), m(0, 1, 2)]);
        // Gen(S(0)): single split member
        let t = filt_gen_closure(&a4, &[a4.simple(0, 0)]);
        let (split, nonsplit) = ext_projectives(&a4, &t);
        assert_eq!(split, vec![a4.simple(0, 0)]);
        assert!(nonsplit.is_empty());
    }
}
