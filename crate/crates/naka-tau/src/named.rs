//! Built-in named algebras used by the CLI and the verification suites.

use crate::algebra::{validate_algebra, Algebra, Component, QuiverKind};

fn cyclic(kupisch: &[usize]) -> Algebra {
    validate_algebra(vec![Component {
        kind: QuiverKind::Cyclic,
        kupisch: kupisch.to_vec(),
    }])
    .expect("built-in algebra is valid")
}

fn linear(kupisch: &[usize]) -> Algebra {
    validate_algebra(vec![Component {
        kind: QuiverKind::Linear,
        kupisch: kupisch.to_vec(),
    }])
    .expect("built-in algebra is valid")
}

/// Radical square zero cyclic algebra on 3 vertices.
pub fn a3() -> Algebra {
    cyclic(&[2, 2, 2])
}

/// Radical cube zero cyclic algebra on 4 vertices.
pub fn a4() -> Algebra {
    cyclic(&[3, 3, 3, 3])
}

/// Cyclic on 3 vertices with Kupisch series `[2,2,3]`.
pub fn d3() -> Algebra {
    cyclic(&[2, 2, 3])
}

/// Linear on 5 vertices with Kupisch series `[1,2,2,3,3]`.
pub fn e5() -> Algebra {
    linear(&[1, 2, 2, 3, 3])
}

/// Self-injective cyclic algebra on 2 vertices with Loewy length 4.
pub fn n2() -> Algebra {
    cyclic(&[4, 4])
}

pub fn by_name(name: &str) -> Option<Algebra> {
    match name {
        "a3" => Some(a3()),
        "a4" => Some(a4()),
        "d3" => Some(d3()),
        "e5" => Some(e5()),
        "n2" => Some(n2()),
        _ => None,
    }
}

pub const NAMES: [&str; 5] = ["a3", "a4", "d3", "e5", "n2"];

pub fn all() -> Vec<Algebra> {
    NAMES.iter().map(|n| by_name(n).unwrap()).collect()
}

/// Every connected Nakayama algebra of rank <= `max_rank` whose Kupisch
/// entries are at most `rank + 2`.
pub fn sweep_connected(max_rank: usize) -> Vec<Algebra> {
    let mut out = Vec::new();
    for comp in sweep_components(max_rank) {
        out.push(Algebra {
            components: vec![comp],
        });
    }
    out
}

fn sweep_components(max_rank: usize) -> Vec<Component> {
    let mut out = Vec::new();
    for n in 1..=max_rank {
        let cap = n + 2;
        // linear: kupisch[0] = 1, kupisch[i] <= min(kupisch[i-1]+1, i+1)
        let mut stack = vec![vec![1usize]];
        while let Some(k) = stack.pop() {
            if k.len() == n {
                out.push(Component {
                    kind: QuiverKind::Linear,
                    kupisch: k,
                });
                continue;
            }
            let i = k.len();
            for v in 1..=(k[i - 1] + 1).min(i + 1).min(cap) {
                let mut next = k.clone();
                next.push(v);
                stack.push(next);
            }
        }
        // cyclic: entries in [2, cap] ([1, cap] when n = 1) with the
        // cyclic Kupisch condition.
        let lo = if n == 1 { 1 } else { 2 };
        let mut stack: Vec<Vec<usize>> = (lo..=cap).map(|v| vec![v]).collect();
        while let Some(k) = stack.pop() {
            if k.len() == n {
                if n == 1 || (k[0] <= k[n - 1] + 1) {
                    out.push(Component {
                        kind: QuiverKind::Cyclic,
                        kupisch: k,
                    });
                }
                continue;
            }
            let prev = *k.last().unwrap();
            for v in lo..=(prev + 1).min(cap) {
                let mut next = k.clone();
                next.push(v);
                stack.push(next);
            }
        }
    }
    out
}

/// The connected sweep together with all two-component products of total
/// rank <= `max_rank`.
pub fn sweep(max_rank: usize) -> Vec<Algebra> {
    let comps = sweep_components(max_rank);
    let mut out = sweep_connected(max_rank);
    for (i, a) in comps.iter().enumerate() {
        for b in comps.iter().skip(i) {
            if a.rank() + b.rank() <= max_rank {
                out.push(Algebra {
                    components: vec![a.clone(), b.clone()],
                });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_is_valid_and_nonempty() {
        let algs = sweep(4);
        assert!(algs.len() > 50);
        for alg in &algs {
            assert!(validate_algebra(alg.components.clone()).is_ok());
            assert!(alg.rank() <= 4);
        }
        // the named rank <= 4 algebras appear in the connected sweep
        let connected = sweep_connected(4);
        for name in ["a3", "a4", "d3"] {
            let alg = by_name(name).unwrap();
            assert!(connected.contains(&alg), "{name} missing from sweep");
        }
    }
}
