//! Verification suites behind `naka-tau verify <suite>`: machine-readable
//! pass/fail with counterexample dumps.

use itertools::Itertools;
use naka_tau::algebra::{hom_dim, is_tau_rigid_pair, Algebra, IndModule, Pair, SignedInd};
use naka_tau::mutation::{self, MutationCase, Route};
use naka_tau::oracle;
use naka_tau::reduction;
use naka_tau::sequences::{self, OrderedRigid};
use naka_tau::{disk, tilting};

pub struct Report {
    pub suite: String,
    pub passed: bool,
    pub lines: Vec<String>,
    pub failures: Vec<String>,
}

impl Report {
    fn new(suite: &str) -> Report {
        Report {
            suite: suite.to_string(),
            passed: true,
            lines: Vec::new(),
            failures: Vec::new(),
        }
    }

    fn ok(&mut self, line: String) {
        self.lines.push(line);
    }

    fn fail(&mut self, line: String) {
        self.passed = false;
        self.failures.push(line);
    }

    pub fn to_text(&self) -> String {
        let mut out = Vec::new();
        for l in &self.lines {
            out.push(l.clone());
        }
        for f in &self.failures {
            out.push(format!("FAIL: {f}"));
        }
        out.push(format!(
            "suite {}: {}",
            self.suite,
            if self.passed { "pass" } else { "fail" }
        ));
        out.join("\n")
    }

    pub fn to_json(&self) -> String {
        serde_json::json!({
            "suite": self.suite,
            "passed": self.passed,
            "lines": self.lines,
            "failures": self.failures,
        })
        .to_string()
    }
}

pub const SUITES: [&str; 11] = [
    "hom-models",
    "completions",
    "emap",
    "vmap",
    "psi",
    "mutation-cases",
    "irregular",
    "tf-counts",
    "transitivity",
    "braid",
    "disk",
];

pub fn run_suite(suite: &str, algebras: &[(String, Algebra)]) -> Result<Report, String> {
    match suite {
        "hom-models" => Ok(hom_models(algebras)),
        "completions" => Ok(completions(algebras)),
        "emap" => Ok(emap(algebras)),
        "vmap" => Ok(vmap(algebras)),
        "psi" => Ok(psi(algebras)),
        "mutation-cases" => Ok(mutation_cases(algebras)),
        "irregular" => Ok(irregular(algebras)),
        "tf-counts" => Ok(tf_counts(algebras)),
        "transitivity" => Ok(transitivity(algebras)),
        "braid" => Ok(braid(algebras)),
        "disk" => Ok(disk_suite(algebras)),
        other => Err(format!(
            "unknown suite {other:?}; valid suites: {}",
            SUITES.join(", ")
        )),
    }
}

fn all_signed(alg: &Algebra) -> Vec<SignedInd> {
    let mut out: Vec<SignedInd> = alg
        .indecomposables()
        .into_iter()
        .map(SignedInd::module)
        .collect();
    out.extend(alg.projectives().into_iter().map(SignedInd::shifted));
    out
}

fn hom_models(algebras: &[(String, Algebra)]) -> Report {
    let mut report = Report::new("hom-models");
    let p = oracle::default_prime();
    for (name, alg) in algebras {
        let ind = alg.indecomposables();
        let mut checks = 0usize;
        for x in &ind {
            for y in &ind {
                checks += 1;
                let w = hom_dim(alg, x, y);
                let mdim = oracle::hom_dim_matrix(alg, x, y, p);
                if w != mdim {
                    report.fail(format!(
                        "{name}: dim mismatch at ({}, {}): windows {w}, matrices {mdim}",
                        x.text(alg),
                        y.text(alg)
                    ));
                }
            }
        }
        report.ok(format!("{name}: {checks} Hom dimensions compared at p={p}"));
    }
    report
}

fn completions(algebras: &[(String, Algebra)]) -> Report {
    let mut report = Report::new("completions");
    for (name, alg) in algebras {
        let graph = tilting::enumerate_stautilt(alg);
        let mut checks = 0usize;
        for pair in tilting::enumerate_tau_rigid(alg) {
            if pair.size() == alg.rank() {
                continue;
            }
            checks += 1;
            let b = match tilting::bongartz(alg, &pair) {
                Ok(b) => b,
                Err(e) => {
                    report.fail(format!("{name}: bongartz({}) failed: {e}", pair.text(alg)));
                    continue;
                }
            };
            let c = tilting::cobongartz(alg, &pair).expect("rigid");
            let completions = tilting::completions_of(&graph, &pair);
            let b_idx = graph.nodes.iter().position(|n| *n == b);
            let c_idx = graph.nodes.iter().position(|n| *n == c);
            let (Some(bi), Some(ci)) = (b_idx, c_idx) else {
                report.fail(format!(
                    "{name}: completion of {} is not tau-tilting",
                    pair.text(alg)
                ));
                continue;
            };
            for &i in &completions {
                if !graph.gen_classes[i].is_subset(&graph.gen_classes[bi])
                    || !graph.gen_classes[ci].is_subset(&graph.gen_classes[i])
                {
                    report.fail(format!(
                        "{name}: completions of {} are not bracketed by B and C",
                        pair.text(alg)
                    ));
                }
            }
        }
        report.ok(format!("{name}: {checks} tau-rigid pairs bracketed"));
    }
    report
}

fn emap(algebras: &[(String, Algebra)]) -> Report {
    let mut report = Report::new("emap");
    for (name, alg) in algebras {
        let candidates = all_signed(alg);
        let mut checks = 0usize;
        for pair in tilting::enumerate_tau_rigid(alg) {
            if pair.size() == 0 || pair.size() > 3 {
                continue;
            }
            let summands = pair.summands();
            let k = summands.len();
            for x in &candidates {
                let mut results = std::collections::BTreeSet::new();
                let mut errors = 0usize;
                let mut total = 0usize;
                for perm in summands.clone().into_iter().permutations(k) {
                    total += 1;
                    match reduction::e_map_entries(alg, &perm, x) {
                        Ok(y) => {
                            results.insert(y);
                        }
                        Err(_) => errors += 1,
                    }
                }
                checks += 1;
                if results.len() > 1 || (errors > 0 && errors < total) {
                    report.fail(format!(
                        "{name}: E-map depends on the peeling order at T={}, X={}",
                        pair.text(alg),
                        x.text(alg)
                    ));
                }
                if results.len() == 1 {
                    let y = results.iter().next().unwrap();
                    match reduction::e_map_inverse(alg, &pair, y) {
                        Ok(back) if back == *x => {}
                        other => report.fail(format!(
                            "{name}: E-map inverse failed at T={}, X={}: {other:?}",
                            pair.text(alg),
                            x.text(alg)
                        )),
                    }
                }
            }
        }
        report.ok(format!(
            "{name}: {checks} (pair, summand) reductions, order-independent and invertible"
        ));
    }
    report
}

fn vmap(algebras: &[(String, Algebra)]) -> Report {
    let mut report = Report::new("vmap");
    let p = oracle::default_prime();
    for (name, alg) in algebras {
        let candidates = all_signed(alg);
        let mut agree = 0usize;
        for pair in tilting::enumerate_tau_rigid(alg) {
            if pair.size() == 0 || pair.size() > 2 {
                continue;
            }
            for x in &candidates {
                let closed = reduction::v_map(alg, &pair, x);
                let cone = oracle::v_map_oracle(alg, &pair, x, p);
                match (&closed, &cone) {
                    (Ok(a), Ok(b)) if a == b => agree += 1,
                    (Err(_), Err(_)) => {}
                    _ => report.fail(format!(
                        "{name}: V mismatch at T={}, X={}: {closed:?} vs {cone:?}",
                        pair.text(alg),
                        x.text(alg)
                    )),
                }
            }
        }
        report.ok(format!("{name}: {agree} V-map values agree with the cone oracle"));
    }
    report
}

fn psi(algebras: &[(String, Algebra)]) -> Report {
    let mut report = Report::new("psi");
    for (name, alg) in algebras {
        let mut images: std::collections::BTreeMap<Vec<SignedInd>, Vec<SignedInd>> =
            std::collections::BTreeMap::new();
        let mut checks = 0usize;
        for pair in tilting::enumerate_tau_rigid(alg) {
            if pair.size() == 0 || pair.size() > 3 {
                continue;
            }
            let summands = pair.summands();
            let k = summands.len();
            for perm in summands.into_iter().permutations(k) {
                let t = OrderedRigid { entries: perm };
                let seq = match sequences::psi(alg, &t) {
                    Ok(s) => s,
                    Err(e) => {
                        report.fail(format!("{name}: psi failed at {}: {e}", t.text(alg)));
                        continue;
                    }
                };
                checks += 1;
                if let Some(prev) = images.insert(seq.entries.clone(), t.entries.clone()) {
                    if prev != t.entries {
                        report.fail(format!("{name}: psi not injective at {}", t.text(alg)));
                    }
                }
                match sequences::psi_inverse(alg, &seq) {
                    Ok(back) if back == t => {}
                    other => {
                        report.fail(format!("{name}: psi round trip failed at {}: {other:?}", t.text(alg)))
                    }
                }
                let tf = t.modules().is_some()
                    && sequences::is_tf_order(alg, &t).unwrap_or(false);
                if tf != seq.is_unsigned() {
                    report.fail(format!(
                        "{name}: TF/unsigned mismatch at {}",
                        t.text(alg)
                    ));
                }
            }
        }
        report.ok(format!(
            "{name}: {checks} ordered pairs (up to 3 summands) round-tripped"
        ));
    }
    report
}

fn mutation_cases(algebras: &[(String, Algebra)]) -> Report {
    let mut report = Report::new("mutation-cases");
    for (name, alg) in algebras {
        let ind = alg.indecomposables();
        let mut counts: std::collections::BTreeMap<String, usize> = Default::default();
        for b in &ind {
            for c in &ind {
                if b == c {
                    continue;
                }
                let Ok(t) = OrderedRigid::from_modules(alg, vec![*b, *c]) else {
                    continue;
                };
                if !sequences::is_tf_order(alg, &t).unwrap_or(false) {
                    continue;
                }
                let case = match mutation::classify_pair(alg, b, c) {
                    Ok(c) => c,
                    Err(e) => {
                        report.fail(format!(
                            "{name}: classification failed at ({}, {}): {e}",
                            b.text(alg),
                            c.text(alg)
                        ));
                        continue;
                    }
                };
                *counts.entry(case.to_string()).or_default() += 1;
                let closed = mutation::mutate_pair(alg, &t, Route::ClosedForm);
                let generic = mutation::mutate_pair(alg, &t, Route::Generic);
                match (closed, generic) {
                    (Ok((a, _)), Ok((g, _))) if a == g => {}
                    other => report.fail(format!(
                        "{name}: routes disagree at ({}, {}): {other:?}",
                        b.text(alg),
                        c.text(alg)
                    )),
                }
            }
        }
        let summary: Vec<String> = counts.iter().map(|(k, v)| format!("{k}: {v}")).collect();
        report.ok(format!("{name}: {}", summary.join(", ")));
    }
    report
}

fn irregular(algebras: &[(String, Algebra)]) -> Report {
    let mut report = Report::new("irregular");
    for (name, alg) in algebras {
        let ind = alg.indecomposables();
        let mut checks = 0usize;
        for b in &ind {
            for c in &ind {
                if b == c || mutation::classify_pair(alg, b, c) != Ok(MutationCase::Tf4) {
                    continue;
                }
                checks += 1;
                let hull = match mutation::irregular_hull(alg, b, c) {
                    Ok(h) => h,
                    Err(e) => {
                        report.fail(format!(
                            "{name}: hull failed at ({}, {}): {e}",
                            b.text(alg),
                            c.text(alg)
                        ));
                        continue;
                    }
                };
                if !is_tau_rigid_pair(alg, &Pair::from_modules(hull.clone())) {
                    report.fail(format!(
                        "{name}: hull not tau-rigid at ({}, {})",
                        b.text(alg),
                        c.text(alg)
                    ));
                }
                let entries = [SignedInd::module(*b), SignedInd::module(*c)];
                let j_objects: Vec<IndModule> = alg
                    .indecomposables()
                    .into_iter()
                    .filter(|x| reduction::in_perpendicular(alg, &entries, x))
                    .collect();
                let filt = oracle::filt_gen_closure(alg, &j_objects);
                if hull != oracle::all_ext_projectives(alg, &filt) {
                    report.fail(format!(
                        "{name}: hull differs from the torsion closure at ({}, {})",
                        b.text(alg),
                        c.text(alg)
                    ));
                }
            }
        }
        report.ok(format!("{name}: {checks} irregular pairs checked"));
    }
    report
}

fn tf_counts(algebras: &[(String, Algebra)]) -> Report {
    let mut report = Report::new("tf-counts");
    for (name, alg) in algebras {
        let mut checks = 0usize;
        for pair in tilting::enumerate_tau_rigid(alg) {
            if !pair.shifted.is_empty() || pair.modules.is_empty() {
                continue;
            }
            checks += 1;
            let counted = sequences::tf_orders(alg, &pair.modules)
                .map(|o| o.len())
                .unwrap_or(0);
            let formula = tilting::tf_order_count_formula(&pair.modules);
            if counted != formula {
                report.fail(format!(
                    "{name}: {}: counted {counted} != multinomial {formula}",
                    pair.text(alg)
                ));
            }
        }
        report.ok(format!("{name}: {checks} tau-rigid modules counted"));
    }
    report
}

fn transitivity(algebras: &[(String, Algebra)]) -> Report {
    let mut report = Report::new("transitivity");
    for (name, alg) in algebras {
        let graph = mutation::mutation_graph(alg);
        let connected =
            mutation::strongly_connected(graph.nodes.len(), &graph.edges);
        if !connected {
            report.fail(format!("{name}: mutation graph not strongly connected"));
        }
        report.ok(format!(
            "{name}: connected: {connected}, nodes: {}",
            graph.nodes.len()
        ));
    }
    report
}

fn braid(algebras: &[(String, Algebra)]) -> Report {
    let mut report = Report::new("braid");
    for (name, alg) in algebras {
        if alg.rank() < 3 {
            report.ok(format!("{name}: rank < 3, braid words are vacuous"));
            continue;
        }
        let graph = mutation::mutation_graph(alg);
        let mut holds = 0usize;
        let mut fails = 0usize;
        let mut witness: Option<String> = None;
        for node in &graph.nodes {
            for i in 1..node.len() - 1 {
                match mutation::braid_relation_holds(alg, node, i) {
                    Ok(true) => holds += 1,
                    Ok(false) => {
                        fails += 1;
                        witness.get_or_insert_with(|| format!("{} at position {i}", node.text(alg)));
                    }
                    Err(e) => report.fail(format!("{name}: braid check errored: {e}")),
                }
            }
        }
        match witness {
            Some(w) => report.ok(format!(
                "{name}: braid holds {holds} / fails {fails}; witness: {w}"
            )),
            None => report.ok(format!("{name}: braid holds at all {holds} words")),
        }
    }
    report
}

fn disk_suite(algebras: &[(String, Algebra)]) -> Report {
    let mut report = Report::new("disk");
    for (name, alg) in algebras {
        let ind = alg.indecomposables();
        for x in &ind {
            for y in &ind {
                if x >= y {
                    continue;
                }
                let (Ok(ax), Ok(ay)) = (
                    disk::to_arc(alg, &SignedInd::module(*x), false),
                    disk::to_arc(alg, &SignedInd::module(*y), false),
                ) else {
                    continue;
                };
                let rigid = is_tau_rigid_pair(alg, &Pair::from_modules(vec![*x, *y]));
                if rigid == disk::arcs_cross(alg, &ax, &ay) {
                    report.fail(format!(
                        "{name}: rigidity/crossing mismatch at ({}, {})",
                        x.text(alg),
                        y.text(alg)
                    ));
                }
            }
        }
        let pairs = tilting::enumerate_tau_rigid(alg);
        let module_count = pairs
            .iter()
            .filter(|p| p.size() == alg.rank() && p.shifted.is_empty())
            .count();
        let tris = disk::triangulations(alg).len();
        if tris != module_count {
            report.fail(format!(
                "{name}: {tris} triangulations != {module_count} tau-tilting modules"
            ));
        }
        if disk::hypothesis_holds(alg) {
            let signed = disk::signed_triangulation_count(alg);
            let all_pairs = pairs.iter().filter(|p| p.size() == alg.rank()).count();
            if signed != all_pairs {
                report.fail(format!(
                    "{name}: {signed} signed triangulations != {all_pairs} pairs"
                ));
            }
            report.ok(format!(
                "{name}: {tris} triangulations, signed model verified"
            ));
        } else {
            report.ok(format!(
                "{name}: {tris} triangulations (signed hypothesis does not hold)"
            ));
        }
    }
    report
}
