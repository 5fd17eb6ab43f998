//! The acceptance checks, runnable from tests and from the CLI.
//!
//! Each check compares the fast algorithms against the brute-force oracle or
//! against a closed-form value over an exhaustive or seeded family of trees, and
//! reports one [`Outcome`].

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::SeedableRng;

use crate::construction::{
    chi_certificate, distinguishing_chromatic_number, distinguishing_number, properize,
    properize_tree, rank_distinguishing, unrank_distinguishing, Coloring,
};
use crate::count::{count_distinguishing, count_proper_distinguishing};
use crate::generate::{
    all_rooted_trees, all_trees_up_to, path, random_tree, random_uniform_lists, star,
};
use crate::list::{
    check_orbit_list_equality, construct_list_distinguishing_coloring, count_list_distinguishing,
    DEFAULT_CLASS_CAP,
};
use crate::oracle::{self, Bounds};
use crate::tree::{to_rooted, RootedTree, Tree};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    /// Summary on success, first failure otherwise.
    pub detail: String,
    pub elapsed: Duration,
}

impl Outcome {
    pub fn line(&self) -> String {
        format!(
            "criterion {} [{}] {}: {} ({:.2?})",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.detail,
            self.elapsed
        )
    }
}

/// Sizes for every check. [`Config::default`] is the full acceptance scale.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Config {
    pub count_max_n: usize,
    pub parameter_max_n: usize,
    pub certificate_max_n: usize,
    pub list_max_n: usize,
    pub list_trials: usize,
    pub family_max: usize,
    pub family_brute_max: usize,
    pub perf_large_n: usize,
    pub perf_small_n: usize,
    pub perf_budget: Duration,
    pub perf_ratio: f64,
    pub rank_max_n: usize,
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            count_max_n: 6,
            parameter_max_n: 9,
            certificate_max_n: 8,
            list_max_n: 6,
            list_trials: 200,
            family_max: 50,
            family_brute_max: 12,
            perf_large_n: 100_000,
            perf_small_n: 10_000,
            perf_budget: Duration::from_secs(5),
            perf_ratio: 15.0,
            rank_max_n: 6,
            seed: 0x5eed,
        }
    }
}

impl Config {
    /// Clamps every exhaustive sweep to trees of at most `max_n` vertices.
    pub fn with_max_n(self, max_n: usize) -> Config {
        Config {
            count_max_n: self.count_max_n.min(max_n),
            parameter_max_n: self.parameter_max_n.min(max_n),
            certificate_max_n: self.certificate_max_n.min(max_n),
            list_max_n: self.list_max_n.min(max_n),
            rank_max_n: self.rank_max_n.min(max_n),
            family_brute_max: self.family_brute_max.min(max_n.max(3)),
            ..self
        }
    }
}

type Check = Result<String, String>;

fn run(id: u32, name: &'static str, f: impl FnOnce() -> Check) -> Outcome {
    let start = Instant::now();
    let result = f();
    let elapsed = start.elapsed();
    let (passed, detail) = match result {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Outcome {
        id,
        name,
        passed,
        detail,
        elapsed,
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn oracle_err(e: oracle::OracleError) -> String {
    format!("oracle: {e}")
}

fn edges_of(t: &Tree) -> String {
    format!("{:?}", t.edges())
}

/// Rooted trees checked by the count and rank sweeps: every center
/// reduction of a tree on at most `max_n` vertices and every rooted tree on
/// at most `max_n` vertices.
fn rooted_family(max_n: usize) -> Vec<RootedTree> {
    let mut out: Vec<RootedTree> = all_trees_up_to(max_n).iter().map(to_rooted).collect();
    for n in 1..=max_n {
        out.extend(all_rooted_trees(n));
    }
    out
}

pub fn oracle_counts(cfg: &Config) -> Outcome {
    run(1, "class counts match brute force", || {
        let family = rooted_family(cfg.count_max_n);
        let mut checked = 0;
        for rt in &family {
            for k in 1..=3u64 {
                let fast = count_distinguishing(rt, k, None);
                let brute = oracle::brute_count_classes(rt, k, false, None, Bounds::default())
                    .map_err(oracle_err)?;
                ensure(fast == brute, || {
                    format!("D({};{k}) = {fast}, brute {brute}", rt.to_parens())
                })?;
                let fast = count_proper_distinguishing(rt, k, None).mul_u64(k, None);
                let brute = oracle::brute_count_classes(rt, k, true, None, Bounds::default())
                    .map_err(oracle_err)?;
                ensure(fast == brute, || {
                    format!("k*D_chi({};{k},1) = {fast}, brute {brute}", rt.to_parens())
                })?;
                checked += 1;
            }
        }
        Ok(format!(
            "{} rooted trees, {checked} (tree, k) pairs",
            family.len()
        ))
    })
}

pub fn parameters(cfg: &Config) -> Outcome {
    run(2, "D and chi_D match brute force", || {
        let trees = all_trees_up_to(cfg.parameter_max_n);
        for t in &trees {
            let d = distinguishing_number(t);
            let bd =
                oracle::brute_distinguishing_number(t, Bounds::default()).map_err(oracle_err)?;
            ensure(d == bd, || {
                format!("D = {d}, brute {bd} on {}", edges_of(t))
            })?;
            let c = distinguishing_chromatic_number(t);
            let bc = oracle::brute_chromatic_distinguishing_number(t, Bounds::default())
                .map_err(oracle_err)?;
            ensure(c == bc, || {
                format!("chi_D = {c}, brute {bc} on {}", edges_of(t))
            })?;
        }
        Ok(format!(
            "{} trees with n <= {}",
            trees.len(),
            cfg.parameter_max_n
        ))
    })
}

pub fn properization(cfg: &Config) -> Outcome {
    run(3, "chi_D <= D + 1 and properization", || {
        let trees = all_trees_up_to(cfg.parameter_max_n);
        for t in &trees {
            let rt = to_rooted(t);
            let d = distinguishing_number(t);
            let c = distinguishing_chromatic_number(t);
            ensure(c <= d + 1, || {
                format!("chi_D = {c} > D + 1 = {} on {}", d + 1, edges_of(t))
            })?;
            let phi = unrank_distinguishing(&rt, d, &BigUint::zero()).map_err(|e| e.to_string())?;
            let psi = properize(&rt, &phi).map_err(|e| e.to_string())?;
            ensure(oracle::is_proper(rt.base(), psi.as_slice()), || {
                format!("not proper on {}", edges_of(t))
            })?;
            let dist = oracle::is_distinguishing_rooted(&rt, psi.as_slice()).map_err(oracle_err)?;
            ensure(dist, || format!("not distinguishing on {}", edges_of(t)))?;
            // the same on T itself, from the restriction of phi
            let on_t =
                properize_tree(t, &phi.restrict_to_origin(&rt)).map_err(|e| e.to_string())?;
            let palette = on_t.as_slice().iter().all(|&c| u64::from(c) <= d);
            ensure(palette, || {
                format!("more than D + 1 colors on {}", edges_of(t))
            })?;
            ensure(oracle::is_proper(t, on_t.as_slice()), || {
                format!("not proper on T: {}", edges_of(t))
            })?;
            let dist = oracle::is_distinguishing(t, on_t.as_slice()).map_err(oracle_err)?;
            ensure(dist, || format!("not distinguishing on T: {}", edges_of(t)))?;
            for &v in rt.bfs_order() {
                let kids = rt.children(v);
                for (i, &a) in kids.iter().enumerate() {
                    for &b in &kids[i + 1..] {
                        ensure(psi.get(a) != psi.get(b) || phi.get(a) == phi.get(b), || {
                            format!("siblings {a}, {b} merged on {}", edges_of(t))
                        })?;
                    }
                }
            }
        }
        Ok(format!(
            "{} trees with n <= {}",
            trees.len(),
            cfg.parameter_max_n
        ))
    })
}

pub fn certificates(cfg: &Config) -> Outcome {
    run(4, "certificate present iff chi_D = D + 1", || {
        let trees = all_trees_up_to(cfg.certificate_max_n);
        let mut present = 0;
        for t in &trees {
            let bd =
                oracle::brute_distinguishing_number(t, Bounds::default()).map_err(oracle_err)?;
            let bc = oracle::brute_chromatic_distinguishing_number(t, Bounds::default())
                .map_err(oracle_err)?;
            let cert = chi_certificate(t);
            ensure(cert.is_some() == (bc == bd + 1), || {
                format!(
                    "certificate {:?} with D = {bd}, chi_D = {bc} on {}",
                    cert,
                    edges_of(t)
                )
            })?;
            let Some(cert) = cert else { continue };
            present += 1;
            ensure(cert.k == bd, || {
                format!("certificate k = {} but D = {bd}", cert.k)
            })?;
            if cert.degenerate {
                ensure(cert.k == 1 && t.len() >= 2, || {
                    "bad degenerate certificate".to_string()
                })?;
                continue;
            }
            let rt = to_rooted(t);
            let x = cert.x;
            ensure(rt.subdivision_vertex() != Some(x), || {
                "x is the subdivision vertex".to_string()
            })?;
            let kids = rt.children(x);
            let u = cert.members[0];
            let sub_u = rt.subtree(u);
            ensure(cert.members.iter().all(|m| kids.contains(m)), || {
                "S is not a set of children of x".to_string()
            })?;
            for &w in kids {
                let iso = oracle::is_isomorphic_rooted(&sub_u, &rt.subtree(w));
                ensure(iso == cert.members.contains(&w), || {
                    format!("S is not an isomorphism class at x = {x}")
                })?;
            }
            let exact = count_proper_distinguishing(&sub_u, cert.k, None);
            ensure(exact.value() == &cert.proper_count, || {
                "proper count mismatch".to_string()
            })?;
            let lhs = exact.into_value() * BigUint::from(cert.k - 1);
            ensure(lhs < BigUint::from(cert.members.len()), || {
                "inequality fails".to_string()
            })?;
        }
        Ok(format!(
            "{} trees with n <= {}, {present} certificates",
            trees.len(),
            cfg.certificate_max_n
        ))
    })
}

pub fn list_inequality(cfg: &Config) -> Outcome {
    run(5, "list counts bound and orbit equality", || {
        let mut rng = StdRng::seed_from_u64(cfg.seed);
        let trees = all_trees_up_to(cfg.list_max_n);
        let (mut strict, mut equal) = (0usize, 0usize);
        for t in &trees {
            let rt = to_rooted(t);
            for k in [2usize, 3] {
                let base = count_distinguishing(&rt, k as u64, None);
                for _ in 0..cfg.list_trials {
                    let lists = random_uniform_lists(rt.len(), k, 2 * k as u32, &mut rng);
                    let dl = count_list_distinguishing(&rt, &lists, DEFAULT_CLASS_CAP)
                        .map_err(|e| e.to_string())?;
                    ensure(dl.value() >= base.value(), || {
                        format!("D(T;L) = {dl} < D(T;{k}) = {base} on {}", rt.to_parens())
                    })?;
                    if dl.is_positive() {
                        let orbit =
                            check_orbit_list_equality(&rt, &lists, k).map_err(|e| e.to_string())?;
                        let eq = dl == base;
                        ensure(eq == orbit.equality_expected, || {
                            format!(
                                "equality {eq} but orbit check {:?} on {} with {:?}",
                                orbit,
                                rt.to_parens(),
                                lists
                            )
                        })?;
                        if eq {
                            equal += 1;
                        } else {
                            strict += 1;
                        }
                    }
                }
            }
        }
        Ok(format!(
            "{} trees, {equal} equalities, {strict} strict",
            trees.len()
        ))
    })
}

fn verify_list_coloring(
    t: &Tree,
    lists: &crate::list::ListAssignment,
    phi: &Coloring,
    proper: bool,
) -> Result<(), String> {
    ensure(
        (0..t.len()).all(|v| lists.list(v).contains(&phi.get(v))),
        || format!("color outside list on {}", edges_of(t)),
    )?;
    ensure(!proper || oracle::is_proper(t, phi.as_slice()), || {
        format!("not proper on {}", edges_of(t))
    })?;
    let dist = oracle::is_distinguishing(t, phi.as_slice()).map_err(oracle_err)?;
    ensure(dist, || format!("not distinguishing on {}", edges_of(t)))
}

pub fn list_witnesses(cfg: &Config) -> Outcome {
    run(6, "list witnesses at k = D and k = chi_D", || {
        let mut rng = StdRng::seed_from_u64(cfg.seed ^ 0x6);
        let trees = all_trees_up_to(cfg.list_max_n);
        let mut built = 0usize;
        for t in &trees {
            for proper in [false, true] {
                let k = if proper {
                    distinguishing_chromatic_number(t)
                } else {
                    distinguishing_number(t)
                } as usize;
                for _ in 0..cfg.list_trials {
                    let lists = random_uniform_lists(t.len(), k, 2 * k as u32, &mut rng);
                    let phi = construct_list_distinguishing_coloring(
                        t,
                        &lists,
                        proper,
                        DEFAULT_CLASS_CAP,
                    )
                    .map_err(|e| e.to_string())?
                    .ok_or_else(|| {
                        format!(
                            "no coloring (proper = {proper}) on {} with {:?}",
                            edges_of(t),
                            lists
                        )
                    })?;
                    verify_list_coloring(t, &lists, &phi, proper)?;
                    built += 1;
                }
            }
        }
        Ok(format!("{} trees, {built} verified colorings", trees.len()))
    })
}

pub fn families(cfg: &Config) -> Outcome {
    run(7, "stars and paths", || {
        for m in 2..=cfg.family_max {
            let t = star(m);
            let (d, c) = (
                distinguishing_number(&t),
                distinguishing_chromatic_number(&t),
            );
            ensure(d == m as u64 && c == m as u64 + 1, || {
                format!("K_1,{m}: D = {d}, chi_D = {c}")
            })?;
            let cert = chi_certificate(&t).ok_or_else(|| format!("K_1,{m}: no certificate"))?;
            let mut members = cert.members.clone();
            members.sort_unstable();
            ensure(
                cert.x == 0 && members == (1..=m).collect::<Vec<_>>(),
                || format!("K_1,{m}: certificate {:?}", cert),
            )?;
        }
        for n in 3..=cfg.family_max {
            let t = path(n);
            let (d, c) = (
                distinguishing_number(&t),
                distinguishing_chromatic_number(&t),
            );
            ensure(d == 2 && (c == 2 || c == 3), || {
                format!("P{n}: D = {d}, chi_D = {c}")
            })?;
            if n <= cfg.family_brute_max {
                let bc = oracle::brute_chromatic_distinguishing_number(&t, Bounds::default())
                    .map_err(oracle_err)?;
                let bd = oracle::brute_distinguishing_number(&t, Bounds::default())
                    .map_err(oracle_err)?;
                ensure(c == bc && d == bd, || {
                    format!("P{n}: chi_D = {c}, brute {bc}")
                })?;
            }
        }
        Ok(format!("stars and paths up to {}", cfg.family_max))
    })
}

/// Best-of-`reps` wall time for `D` on two trees, alternating between them
/// so that a slow spell on the machine hits both sides alike.
fn best_times(small: &Tree, large: &Tree, reps: usize) -> (Duration, Duration, u64) {
    let time = |t: &Tree| {
        let start = Instant::now();
        let d = distinguishing_number(t);
        (start.elapsed(), d)
    };
    let (mut ts, mut tl, mut d) = (Duration::MAX, Duration::MAX, 0);
    for _ in 0..reps {
        ts = ts.min(time(small).0);
        let (t, dl) = time(large);
        tl = tl.min(t);
        d = dl;
    }
    (ts, tl, d)
}

pub fn performance(cfg: &Config) -> Outcome {
    run(8, "distinguishing number scaling", || {
        let mut rng = StdRng::seed_from_u64(cfg.seed ^ 0x8);
        let small = random_tree(cfg.perf_small_n, &mut rng);
        let large = random_tree(cfg.perf_large_n, &mut rng);
        // warm up allocator and caches
        best_times(&small, &small, 1);
        let (ts, tl, d) = best_times(&small, &large, 7);
        let ratio = tl.as_secs_f64() / ts.as_secs_f64().max(1e-9);
        ensure(tl <= cfg.perf_budget, || {
            format!("n = {}: {:.2?} over budget", cfg.perf_large_n, tl)
        })?;
        ensure(ratio <= cfg.perf_ratio, || {
            format!("ratio {ratio:.2} > {}", cfg.perf_ratio)
        })?;
        Ok(format!(
            "n = {}: {:.2?} (D = {d}), n = {}: {:.2?}, ratio {ratio:.2}",
            cfg.perf_large_n, tl, cfg.perf_small_n, ts
        ))
    })
}

pub fn rank_unrank(cfg: &Config) -> Outcome {
    run(9, "rank and unrank are inverse", || {
        let family = rooted_family(cfg.rank_max_n);
        let mut total = 0usize;
        for rt in &family {
            let group = oracle::rooted_automorphisms(rt).map_err(oracle_err)?;
            for k in 1..=3u64 {
                let count = count_distinguishing(rt, k, None)
                    .to_u64()
                    .expect("small count");
                let mut forms = std::collections::HashSet::new();
                for i in 0..count {
                    let idx = BigUint::from(i);
                    let phi = unrank_distinguishing(rt, k, &idx).map_err(|e| e.to_string())?;
                    ensure(phi.within_palette(k), || {
                        format!("palette violated on {}", rt.to_parens())
                    })?;
                    ensure(group.is_distinguishing(phi.as_slice()), || {
                        format!("unrank({i}) not distinguishing on {}", rt.to_parens())
                    })?;
                    let r = rank_distinguishing(rt, k, &phi).map_err(|e| e.to_string())?;
                    ensure(r == idx, || {
                        format!("rank(unrank({i})) = {r} on {}, k = {k}", rt.to_parens())
                    })?;
                    ensure(forms.insert(group.canonical_form(phi.as_slice())), || {
                        format!("unrank({i}) repeats a class on {}, k = {k}", rt.to_parens())
                    })?;
                    total += 1;
                }
            }
        }
        Ok(format!("{} rooted trees, {total} indices", family.len()))
    })
}

/// Every check in order.
pub fn run_all(cfg: &Config) -> Vec<Outcome> {
    vec![
        oracle_counts(cfg),
        parameters(cfg),
        properization(cfg),
        certificates(cfg),
        list_inequality(cfg),
        list_witnesses(cfg),
        families(cfg),
        performance(cfg),
        rank_unrank(cfg),
    ]
}
