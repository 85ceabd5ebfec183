//! Acceptance criteria; one pass/fail line per criterion.

use num::Signed;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::{Duration, Instant};

use tiltc_core::coxeter::Side;
use tiltc_core::hecke::{Family, Flavor, KlEngine};
use tiltc_core::mincpx::block::{check_hw_axioms, verify, HwBlock};
use tiltc_core::mincpx::FormalComplex;
use tiltc_core::tilting::{
    cmin_simple_o, cmin_standard_o, Formulas, Kind, MultiplicityPoly, Query, Setting,
};
use tiltc_core::{CoxeterElement, CoxeterSystem, LaurentPoly};

fn sys(t: &str) -> Arc<CoxeterSystem> {
    CoxeterSystem::from_type(t).unwrap()
}

fn p(s: &str) -> LaurentPoly {
    LaurentPoly::parse(s).unwrap()
}

fn all(s: &CoxeterSystem, max_len: usize) -> Vec<CoxeterElement> {
    s.elements_up_to(max_len).elements
}

/// Subsets of the generators of size at most one.
fn small_subsets(s: &CoxeterSystem) -> Vec<Vec<u8>> {
    let mut out = vec![vec![]];
    out.extend(s.generators().into_iter().map(|g| vec![g]));
    out
}

fn kl_engine() -> usize {
    let mut checks = 0;
    let s = sys("A2");
    let eng = KlEngine::new(s.clone());
    let els = all(&s, 10);
    assert_eq!(els.len(), 6);
    for y in &els {
        eng.check_self_dual(&Family::H, y).unwrap();
        let cy = eng.kl_basis(y);
        for x in &els {
            let want = if s.bruhat_leq(x, y) {
                LaurentPoly::monomial(1, (y.len() - x.len()) as i32)
            } else {
                LaurentPoly::zero()
            };
            assert_eq!(eng.kl_poly(x, y), want);
            assert_eq!(cy.coeff(x), want);
            checks += 1;
        }
    }
    let s = sys("A3");
    let eng = KlEngine::new(s.clone());
    let (x, y) = (s.parse_word("2").unwrap(), s.parse_word("2 1 3 2").unwrap());
    eng.check_self_dual(&Family::H, &y).unwrap();
    assert_eq!(eng.kl_poly(&x, &y), p("v + v^3"));
    assert_eq!(eng.kl_basis(&y).coeff(&x), p("v + v^3"));
    checks + 1
}

fn inversion() -> usize {
    let mut checks = 0;
    let s = sys("A3");
    let eng = KlEngine::new(s.clone());
    for x in all(&s, 10) {
        eng.verify_inversion(&Family::H, &x).unwrap();
        checks += 1;
    }
    let s = sys("affA1");
    let eng = KlEngine::new(s.clone());
    for x in all(&s, 8) {
        eng.verify_inversion(&Family::H, &x).unwrap();
        checks += 1;
    }
    for t in ["affA1", "affA2"] {
        let s = sys(t);
        let eng = KlEngine::new(s.clone());
        for i in small_subsets(&s) {
            for flavor in [Flavor::Spherical, Flavor::Antispherical] {
                let fam = Family::parabolic(&i, flavor);
                for x in s.quotient_reps(&i, Side::Left, 6).elements {
                    eng.verify_inversion(&fam, &x).unwrap();
                    checks += 1;
                }
            }
        }
    }
    checks
}

fn w0_twist() -> usize {
    let mut checks = 0;
    for t in ["A2", "A3", "B2"] {
        let s = sys(t);
        let eng = KlEngine::new(s.clone());
        let w0 = s.longest().unwrap();
        let els = all(&s, 20);
        for x in &els {
            for y in &els {
                let lhs = eng.inverse_poly(&Family::H, x, y, x.len()).unwrap();
                let rhs = eng.kl_poly(&s.mul(&w0, x), &s.mul(&w0, y));
                assert_eq!(lhs, rhs, "{t} x={x:?} y={y:?}");
                checks += 1;
            }
        }
    }
    checks
}

fn cross_identities() -> usize {
    let mut checks = 0;
    for t in ["affA1", "affA2"] {
        let s = sys(t);
        let eng = KlEngine::new(s.clone());
        let fin = s.finite_generators();
        let n_s = Family::parabolic(&fin, Flavor::Antispherical);
        let reps = s.quotient_reps(&fin, Side::Left, 6).elements;
        for x in &reps {
            for y in &reps {
                let h = eng.inverse_poly(&Family::H, x, y, 6).unwrap();
                let n = eng.inverse_poly(&n_s, x, y, 6).unwrap();
                assert_eq!(h, n, "{t} x={x:?} y={y:?}");
                checks += 1;
            }
        }
    }
    let s = sys("A3");
    let eng = KlEngine::new(s.clone());
    for i in small_subsets(&s) {
        for j in small_subsets(&s) {
            let f = Formulas::new(&eng, &i, &j).unwrap();
            let reps = s.regular_double_coset_reps(&j, &i, 20).elements;
            for x in &reps {
                for y in &reps {
                    let a = f.neg_standard_rep(x, y).unwrap();
                    let b = f.neg_standard_rep_via_n(x, y).unwrap();
                    assert_eq!(a, b, "I={i:?} J={j:?} x={x:?} y={y:?}");
                    checks += 1;
                }
            }
        }
    }
    checks
}

fn parity_ok(t: &MultiplicityPoly) -> bool {
    t.entries.iter().all(|e| {
        e.poly
            .terms()
            .all(|(k, c)| (k - (t.x_len + e.y_len) as i32) % 2 == 0 && c.is_positive())
    })
}

fn parity_positivity() -> usize {
    let mut checks = 0;
    const MAX: usize = 6;
    for t in ["A2", "A3", "B2", "affA1", "affA2"] {
        let s = sys(t);
        let eng = KlEngine::new(s.clone());
        let settings: Vec<Setting> = if s.is_affine() {
            vec![Setting::KmNeg, Setting::KmPos, Setting::Quantum]
        } else {
            vec![Setting::O]
        };
        for setting in settings {
            for i in small_subsets(&s) {
                let js = if setting == Setting::Quantum {
                    vec![s.finite_generators()]
                } else {
                    small_subsets(&s)
                };
                for j in js {
                    for kind in [Kind::Standard, Kind::Simple] {
                        let f = Formulas::new(&eng, &i, &j).unwrap();
                        let q = Query::new(f, setting, kind, MAX);
                        for xr in s.regular_double_coset_reps(&j, &i, MAX).elements {
                            let x = q.unrep(&xr);
                            if x.len() > MAX {
                                continue;
                            }
                            let tab = q.table(&x).unwrap();
                            assert!(
                                parity_ok(&tab),
                                "{t} {setting:?} {kind:?} I={i:?} J={j:?}\n{tab}"
                            );
                            checks += tab.entries.len();
                        }
                    }
                }
            }
        }
    }
    checks
}

fn names(b: &HwBlock, c: &FormalComplex) -> Vec<(i32, Vec<String>)> {
    c.terms
        .iter()
        .enumerate()
        .map(|(k, t)| {
            (
                c.lo + k as i32,
                t.iter().map(|&a| b.tilt.labels[a].clone()).collect(),
            )
        })
        .collect()
}

fn terms(v: &[(i32, &str)]) -> Vec<(i32, Vec<String>)> {
    v.iter()
        .map(|(d, s)| (*d, s.split(',').map(str::to_string).collect()))
        .collect()
}

fn oracle_equivalence() -> usize {
    let b = HwBlock::builtin("sl2").unwrap();
    let (e, s_) = (b.weight("e").unwrap(), b.weight("s").unwrap());
    let cmin = |m: &str| b.cmin_module(b.module(m).unwrap()).unwrap().complex;
    assert_eq!(names(&b, &cmin("Delta_e")), terms(&[(0, "T_e")]));
    assert_eq!(
        names(&b, &cmin("Delta_s")),
        terms(&[(0, "T_s"), (1, "T_e")])
    );
    assert_eq!(
        names(&b, &cmin("L_s")),
        terms(&[(-1, "T_e"), (0, "T_s"), (1, "T_e")])
    );
    let rs = b.readout(&cmin("Delta_s"));
    assert_eq!((rs[&s_].clone(), rs[&e].clone()), (p("1"), p("v")));
    let rl = b.readout(&cmin("L_s"));
    assert_eq!((rl[&s_].clone(), rl[&e].clone()), (p("1"), p("v^-1 + v")));
    let w = sys("A1");
    let eng = KlEngine::new(w.clone());
    let word = |l: usize| w.parse_word(if l == e { "" } else { "1" }).unwrap();
    let mut checks = 5;
    for x in [e, s_] {
        let cs = b.readout(&cmin(&format!("Delta_{}", b.weights[x])));
        let cl = b.readout(&cmin(&format!("L_{}", b.weights[x])));
        for y in [e, s_] {
            let zero = LaurentPoly::zero();
            let want = cmin_standard_o(&eng, &[], &[], &word(x), &word(y)).unwrap();
            assert_eq!(cs.get(&y).unwrap_or(&zero), &want);
            let want = cmin_simple_o(&eng, &[], &[], &word(x), &word(y)).unwrap();
            assert_eq!(cl.get(&y).unwrap_or(&zero), &want);
            checks += 2;
        }
    }
    checks
}

fn lemma_suite() -> usize {
    let b = HwBlock::builtin("sl2").unwrap();
    let suites = verify(&b).unwrap();
    let mut checks = 0;
    for name in ["minimize", "triangle-bounds", "filtration-dimensions"] {
        let s = suites.iter().find(|s| s.name == name).unwrap();
        assert!(s.report.passed(), "{name}: {:?}", s.report.failures);
        checks += s.report.checks;
    }
    let ls = b.module("L_s").unwrap();
    let ds = b.module("Delta_s").unwrap();
    assert_eq!(b.nabla_dim(ls).unwrap(), Some(1));
    assert_eq!(b.delta_dim(ls).unwrap(), Some(1));
    assert_eq!(b.delta_dim(ds).unwrap(), Some(0));
    let le = b.cmin_module(b.module("L_e").unwrap()).unwrap().complex;
    let e = b.weight("e").unwrap();
    assert!(le.terms.iter().flatten().all(|&a| a == e));
    checks + 4
}

fn hw_axioms() -> usize {
    let b = HwBlock::builtin("sl2").unwrap();
    let r = check_hw_axioms(&b).unwrap();
    assert!(r.passed(), "{:?}", r.failures);
    let mut checks = r.checks;
    for l in 0..b.n() {
        for m in 0..b.n() {
            let ext = b.ext(b.standard(l), b.costandard(m)).unwrap();
            assert_eq!(ext.len(), 5);
            for (d, &x) in ext.iter().enumerate() {
                assert_eq!(x, usize::from(d == 0 && l == m));
                checks += 1;
            }
        }
    }
    checks
}

fn suite_commands() -> Vec<Vec<&'static str>> {
    vec![
        vec!["kl", "--type", "A3", "--x", "2", "--y", "2 1 3 2"],
        vec![
            "kl",
            "--type",
            "A3",
            "--x",
            "2 1 3 2",
            "--y",
            "2",
            "--inverse",
            "--format",
            "json",
        ],
        vec![
            "kl",
            "--type",
            "affA1",
            "--x",
            "",
            "--y",
            "0 1 0",
            "--parabolic",
            "1",
            "--flavor",
            "antispherical",
        ],
        vec![
            "kl",
            "--type",
            "affA2",
            "--x",
            "0 1 2 0",
            "--y",
            "0",
            "--inverse",
            "--format",
            "tsv",
        ],
        vec![
            "tilt", "O", "--type", "A1", "--x", "1", "--simple", "--format", "json",
        ],
        vec![
            "tilt", "O", "--type", "A3", "--x", "1 2 3 1", "--simple", "--I", "2",
        ],
        vec![
            "tilt",
            "O",
            "--type",
            "B2",
            "--x",
            "1 2 1",
            "--standard",
            "--J",
            "1",
            "--format",
            "tsv",
        ],
        vec![
            "tilt", "km", "--type", "affA1", "--x", "0 1 0", "--level", "neg", "--simple",
        ],
        vec![
            "tilt",
            "km",
            "--type",
            "affA2",
            "--x",
            "0 1",
            "--level",
            "pos",
            "--simple",
            "--max-length",
            "4",
        ],
        vec![
            "tilt", "quantum", "--type", "A1", "--ell", "5", "--lambda", "7", "--simple",
            "--format", "json",
        ],
        vec![
            "tilt",
            "quantum",
            "--type",
            "A2",
            "--ell",
            "4",
            "--lambda",
            "2,2",
            "--standard",
        ],
        vec!["oracle", "verify", "--block", "sl2"],
        vec![
            "oracle", "cmin", "--block", "sl2", "--module", "L_s", "--format", "json",
        ],
    ]
}

fn run_suite(extra: &[&str]) -> String {
    let mut out = String::new();
    for cmd in suite_commands() {
        let mut argv = vec!["tiltc"];
        argv.extend(cmd.iter().copied());
        argv.extend(extra.iter().copied());
        let o = tiltc_cli::run(argv.clone());
        assert_eq!(o.code, 0, "{argv:?}: {}", o.stderr);
        out.push_str(&o.stdout);
    }
    out
}

fn determinism() -> usize {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().to_str().unwrap().to_string();
    let base = run_suite(&["--no-cache"]);
    let again = run_suite(&["--no-cache", "--jobs", "1"]);
    let cold = run_suite(&["--cache-dir", &path]);
    let files = std::fs::read_dir(dir.path()).unwrap().count();
    assert!(files > 0, "cache was not written");
    let warm = run_suite(&["--cache-dir", &path]);
    let warm2 = run_suite(&["--cache-dir", &path, "--jobs", "3"]);
    for (name, out) in [
        ("repeat", &again),
        ("cold", &cold),
        ("warm", &warm),
        ("warm2", &warm2),
    ] {
        assert!(out.as_bytes() == base.as_bytes(), "{name} output differs");
    }
    5
}

type Criterion = (&'static str, Duration, fn() -> usize);

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("KL engine on S3 and S4", Duration::from_secs(5), kl_engine),
        ("inversion identities", Duration::from_secs(30), inversion),
        ("finite w0-twist", Duration::from_secs(10), w0_twist),
        (
            "cross-identities",
            Duration::from_secs(60),
            cross_identities,
        ),
        (
            "parity and positivity",
            Duration::from_secs(120),
            parity_positivity,
        ),
        (
            "oracle equivalence on sl2",
            Duration::from_secs(10),
            oracle_equivalence,
        ),
        (
            "minimal complex lemmas on sl2",
            Duration::from_secs(10),
            lemma_suite,
        ),
        (
            "highest weight axioms and Ext vanishing",
            Duration::from_secs(5),
            hw_axioms,
        ),
        (
            "determinism with and without cache",
            Duration::from_secs(120),
            determinism,
        ),
    ];
    let mut failed = 0;
    for (k, (name, budget, f)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let res = catch_unwind(AssertUnwindSafe(f));
        let took = start.elapsed();
        let line = match res {
            Ok(n) if took <= budget => format!("PASS  {n} checks"),
            Ok(n) => format!("FAIL  {n} checks but over the {:.0?} budget", budget),
            Err(_) => "FAIL  assertion failed".to_string(),
        };
        if !line.starts_with("PASS") {
            failed += 1;
        }
        println!("criterion {}: {name}: {line} ({:.2?})", k + 1, took);
    }
    if failed > 0 {
        println!("{failed} criterion(s) failed");
        std::process::exit(1);
    }
    println!("all 9 criteria pass");
}
