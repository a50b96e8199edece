//! Acceptance run: one PASS/FAIL line per criterion, with the individual
//! checks listed underneath. Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use minorfree::asymptotics::limit::{limit_law, Stat};
use minorfree::asymptotics::maximal::{branch_check, solve_maximal_singularity, MaximalSingularData};
use minorfree::asymptotics::tower::{solve_tower_singularity, Route, TowerSingularData};
use minorfree::asymptotics::{coefficient_ratio, DEFAULT_PRECISION};
use minorfree::class::{GraphClass, Markers};
use minorfree::maximal::{triangulation_counts, MaximalIdentities, MaximalPipeline};
use minorfree::oracle::count_all;
use minorfree::series::MarkerPoly;
use minorfree::tower::{b_derivative_residual, build_b, solve_d, MinorFreeTower};
use rug::{Float, Integer, Rational};

struct Criterion {
    id: u32,
    title: &'static str,
    lines: Vec<String>,
    ok: bool,
}

impl Criterion {
    fn new(id: u32, title: &'static str) -> Self {
        Criterion { id, title, lines: Vec::new(), ok: true }
    }

    fn check(&mut self, pass: bool, what: String) {
        self.ok &= pass;
        self.lines.push(format!("    {} {what}", if pass { "ok  " } else { "BAD " }));
    }

    fn info(&mut self, what: String) {
        self.lines.push(format!("    info {what}"));
    }

    /// `|got - want| <= tol |want|`.
    fn close(&mut self, name: &str, got: f64, want: f64, tol: f64) {
        let rel = ((got - want) / want).abs();
        self.check(rel <= tol, format!("{name}: got {got:.10e}, expected {want:e} (rel {rel:.2e}, tol {tol:e})"));
    }

    fn exact<T: PartialEq + std::fmt::Display>(&mut self, name: &str, got: T, want: T) {
        let pass = got == want;
        self.check(pass, format!("{name}: got {got}, expected {want}"));
    }

    fn finish(self, started: Instant) -> bool {
        let verdict = if self.ok { "PASS" } else { "FAIL" };
        println!("{verdict} [{}] {} ({:.1?})", self.id, self.title, started.elapsed());
        for l in &self.lines {
            println!("{l}");
        }
        self.ok
    }
}

fn f(x: &Float) -> f64 {
    x.to_f64()
}

fn one(p: u32) -> Float {
    Float::with_val(p, 1)
}

fn tower_data(class: GraphClass, q: i32, p: u32) -> TowerSingularData {
    solve_tower_singularity(class, &Float::with_val(p, q), &one(p), p, Route::Expansion).expect("tower singularity")
}

fn criterion_1() -> bool {
    let started = Instant::now();
    let mut c = Criterion::new(1, "oracle equivalence, 3 <= n <= 7");
    for class in [GraphClass::K33, GraphClass::K33Plus] {
        let tower = MinorFreeTower::<Rational>::build(class, Markers::unit(), 7).expect("tower");
        let (g, cc, b) =
            (tower.all_counts().unwrap(), tower.connected_counts().unwrap(), tower.biconnected_counts().unwrap());
        for n in 3..=7 {
            let o = count_all(n, class, false).expect("oracle");
            c.exact(&format!("{class} g_{n}"), g[n].clone(), Integer::from(o.g));
            c.exact(&format!("{class} c_{n}"), cc[n].clone(), Integer::from(o.c));
            c.exact(&format!("{class} b_{n}"), b[n].clone(), Integer::from(o.b));
            if let Some(m) = o.m {
                let maximal = MaximalPipeline::<Rational>::build(&Rational::from(1), 7).expect("maximal pipeline");
                c.exact(&format!("maximal m_{n}"), maximal.counts().unwrap()[n].clone(), Integer::from(m));
            }
        }
    }
    c.finish(started)
}

fn criterion_2() -> bool {
    let started = Instant::now();
    let mut c = Criterion::new(2, "trivial closed forms");
    for class in [GraphClass::K33, GraphClass::K33Plus] {
        let tower = MinorFreeTower::<Rational>::build(class, Markers::unit(), 5).expect("tower");
        let g = tower.all_counts().unwrap();
        for (n, gn) in g.iter().enumerate() {
            c.exact(
                &format!("{class} g_{n} = 2^C({n},2)"),
                gn.clone(),
                Integer::from(1) << (n * n.saturating_sub(1) / 2) as u32,
            );
        }
        c.exact(&format!("{class} b_3"), tower.biconnected_counts().unwrap()[3].clone(), Integer::from(1));
    }
    let tri = triangulation_counts(5).expect("triangulations");
    for (t, want) in tri.iter().zip([1, 1, 10]) {
        c.exact(&format!("T_{}", t.n), t.labelled.clone(), Integer::from(want));
    }
    c.finish(started)
}

fn criterion_3(m: &MaximalSingularData) -> bool {
    let started = Instant::now();
    let mut c = Criterion::new(3, "maximal class constants");
    c.close("t", f(&m.t), 1.0005216, 1e-5);
    c.close("rho", f(&m.rho), 0.10530385, 1e-5);
    c.close("gamma", f(&m.gamma), 9.49629, 1e-5);
    c.close("a", f(&m.a), 0.25354e-3, 1e-5);
    c.close("dPhi/dF(rho, t, 1/4)", f(&branch_check(m)), -0.9939, 1e-3);
    c.info(format!("A5 from the local expansion: {:.10e}", f(m.a_coeff(5))));
    c.info(format!("A5 from the printed closed form: -{:.10e}", f(&m.printed.a5_abs)));
    c.info(format!("15 |A5 printed| / (8 pi) = {:.6e}", f(&m.printed.a_over_pi)));
    c.info(format!("15 |A5 printed| / (8 sqrt pi) = {:.6e}", f(&m.printed.a_over_sqrt_pi)));
    c.finish(started)
}

fn criterion_4(m: &MaximalSingularData) -> bool {
    let started = Instant::now();
    let mut c = Criterion::new(4, "tower constants");
    let p = DEFAULT_PRECISION;
    let k33 = tower_data(GraphClass::K33, 1, p);
    let plus = tower_data(GraphClass::K33Plus, 1, p);
    let planar = tower_data(GraphClass::K33, 0, p);
    for (name, d, rho_inv, r_inv) in [
        ("K33", &k33, 27.22935, 26.18659),
        ("K33+", &plus, 27.22948, 26.18672),
        ("K33 q=0", &planar, 27.22688, 26.18486),
    ] {
        c.close(&format!("{name} 1/rho"), f(&d.rho_inv()), rho_inv, 1e-5);
        c.close(&format!("{name} 1/R"), f(&d.r_inv()), r_inv, 1e-5);
    }
    c.close("alpha_g", f(&k33.alpha_g()), 0.42643e-5, 1e-5);
    c.close("alpha_c", f(&k33.alpha_c()), 0.41076e-5, 1e-5);
    c.close("alpha_b", f(&k33.alpha_b()), 0.37074e-5, 1e-5);
    c.close("alpha_m", f(&m.a), 0.25354e-3, 1e-5);
    c.info(format!(
        "K33+ alpha_g = {:.6e}, alpha_c = {:.6e}, alpha_b = {:.6e} (no printed reference)",
        f(&plus.alpha_g()),
        f(&plus.alpha_c()),
        f(&plus.alpha_b())
    ));
    let closed =
        solve_tower_singularity(GraphClass::K33, &one(p), &one(p), p, Route::ClosedForm).expect("closed forms");
    let worst = (0..6).map(|k| f(&Float::with_val(p, &k33.b[k] - &closed.b[k]).abs())).fold(0.0, f64::max);
    c.info(format!("closed-form B_0..B_5 agree with the local expansion to {worst:.1e}"));
    c.finish(started)
}

fn criterion_5() -> bool {
    let started = Instant::now();
    let mut c = Criterion::new(5, "limit laws");
    let p = DEFAULT_PRECISION;
    let edges = limit_law(GraphClass::K33, Stat::Edges, p, Route::Expansion).expect("edge law");
    c.close("edges kappa", f(&edges.kappa), 2.21338, 1e-4);
    c.close("edges lambda", f(&edges.lambda), 0.43044, 1e-4);
    let k5 = limit_law(GraphClass::K33, Stat::K5Count, p, Route::Expansion).expect("K5 law");
    c.close("K5 kappa", f(&k5.kappa), 0.92391e-4, 1e-4);
    c.close("K5 lambda", f(&k5.lambda), 0.92440e-4, 1e-4);
    let closed = limit_law(GraphClass::K33, Stat::K5Count, p, Route::ClosedForm).expect("K5 law, closed forms");
    c.info(format!(
        "K5 law from the closed forms (B_i taken at q != 1): kappa = {:.6e}, lambda = {:.6e}",
        f(&closed.kappa),
        f(&closed.lambda)
    ));
    c.finish(started)
}

fn criterion_6(m: &MaximalSingularData) -> bool {
    let started = Instant::now();
    let mut c = Criterion::new(6, "coefficient ratios at n = 40, 60");
    let p = DEFAULT_PRECISION;
    let d = tower_data(GraphClass::K33, 1, p);
    let tower = MinorFreeTower::<Rational>::build(GraphClass::K33, Markers::unit(), 60).expect("tower");
    let maximal = MaximalPipeline::<Rational>::build(&Rational::from(1), 60).expect("maximal pipeline");
    let rows = [
        ("g", &tower.g, d.alpha_g(), d.rho.clone()),
        ("c", &tower.c, d.alpha_c(), d.rho.clone()),
        ("b", &tower.b, d.alpha_b(), d.r.clone()),
        ("m", &maximal.a, m.a.clone(), m.rho.clone()),
    ];
    for (name, series, alpha, rho) in rows {
        let r40 = f(&coefficient_ratio(&series.coeff(40), 40, &alpha, &rho));
        let r60 = f(&coefficient_ratio(&series.coeff(60), 60, &alpha, &rho));
        let inside = |r: f64| (0.8..=1.2).contains(&r);
        c.check(inside(r40), format!("{name}: ratio at n = 40 is {r40:.5}"));
        c.check(inside(r60), format!("{name}: ratio at n = 60 is {r60:.5}"));
        c.check((r60 - 1.0).abs() < (r40 - 1.0).abs(), format!("{name}: ratio moves toward 1"));
        // r_n = r + k/n + ... eliminates the 1/n term
        c.info(format!(
            "{name}: two-point extrapolation (60 r_60 - 40 r_40) / 20 = {:.5}",
            (60.0 * r60 - 40.0 * r40) / 20.0
        ));
    }
    c.finish(started)
}

/// `g_n = sum_k C(n-1, k-1) c_k g_{n-k}` on the integer counts.
fn exp_recurrence_holds(c: &[Integer], g: &[Integer]) -> bool {
    let n_max = c.len() - 1;
    let mut binom = vec![vec![Integer::new(); n_max + 1]; n_max + 1];
    for n in 0..=n_max {
        binom[n][0] = Integer::from(1);
        for k in 1..=n {
            binom[n][k] = Integer::from(&binom[n - 1][k - 1] + &binom[n - 1][k]);
        }
    }
    g[0] == 1
        && (1..=n_max).all(|n| {
            let s: Integer = (1..=n).map(|k| Integer::from(&binom[n - 1][k - 1] * &c[k]) * &g[n - k]).sum();
            s == g[n]
        })
}

fn criterion_7() -> bool {
    let started = Instant::now();
    let mut c = Criterion::new(7, "identity suite at bivariate order 30");
    let order = 30;
    let ids = MaximalIdentities::compute(order).expect("maximal identities");
    c.check(ids.rooting.is_zero(), "(2/x^2) y dA/dy = H + F".into());
    c.check(ids.h_is_t0.is_zero() && ids.t0_derivative.is_zero(), "H = T0(x, F) and the derivative of T0".into());
    c.check(ids.h_from_l.is_zero(), "H from L".into());
    c.check(ids.parametrization, "lambda (1 - lambda)^3 = x xi^3".into());
    c.check(ids.psi_inverse.is_zero(), "psi(F) = y".into());
    for class in [GraphClass::K33, GraphClass::K33Plus] {
        let markers = Markers::<MarkerPoly>::edges_only(&Rational::from(1));
        let net = solve_d(class, &markers, order).expect("networks");
        let b = build_b(class, &markers, &net).expect("B");
        c.check(
            b_derivative_residual(&markers, &net, &b).unwrap().is_zero(),
            format!("{class}: dB/dy = x^2 (1+D) / (2 (1+y))"),
        );
        let tower = MinorFreeTower::<Rational>::build(class, Markers::unit(), order).expect("tower");
        let holds = exp_recurrence_holds(&tower.connected_counts().unwrap(), &tower.all_counts().unwrap());
        c.check(holds, format!("{class}: G = exp(C) on integer counts"));
    }
    c.finish(started)
}

fn criterion_8() -> bool {
    let started = Instant::now();
    let mut c = Criterion::new(8, "precision doubling 256 -> 512 bits");
    let constants = |p: u32| -> Vec<(&'static str, Float)> {
        let m = solve_maximal_singularity(p).expect("maximal");
        let k33 = tower_data(GraphClass::K33, 1, p);
        let plus = tower_data(GraphClass::K33Plus, 1, p);
        let planar = tower_data(GraphClass::K33, 0, p);
        let edges = limit_law(GraphClass::K33, Stat::Edges, p, Route::Expansion).expect("edge law");
        let k5 = limit_law(GraphClass::K33, Stat::K5Count, p, Route::Expansion).expect("K5 law");
        vec![
            ("t", m.t.clone()),
            ("gamma", m.gamma.clone()),
            ("a", m.a.clone()),
            ("dPhi/dF", branch_check(&m)),
            ("K33 1/rho", k33.rho_inv()),
            ("K33 1/R", k33.r_inv()),
            ("alpha_g", k33.alpha_g()),
            ("alpha_c", k33.alpha_c()),
            ("alpha_b", k33.alpha_b()),
            ("K33+ 1/rho", plus.rho_inv()),
            ("K33+ 1/R", plus.r_inv()),
            ("q=0 1/rho", planar.rho_inv()),
            ("q=0 1/R", planar.r_inv()),
            ("edges kappa", edges.kappa),
            ("edges lambda", edges.lambda),
            ("K5 kappa", k5.kappa),
            ("K5 lambda", k5.lambda),
        ]
    };
    for ((name, lo), (_, hi)) in constants(256).into_iter().zip(constants(512)) {
        let a = lo.to_string_radix(10, Some(10));
        let b = Float::with_val(256, &hi).to_string_radix(10, Some(10));
        c.check(a == b, format!("{name}: {a} vs {b}"));
    }
    c.finish(started)
}

fn criterion_9() -> bool {
    let started = Instant::now();
    let mut c = Criterion::new(9, "mean edge count at n = 25");
    let n = 25;
    let tower = MinorFreeTower::<MarkerPoly>::build(GraphClass::K33, Markers::edges_only(&Rational::from(1)), n)
        .expect("tower");
    let at_one = |m: &MarkerPoly| m.evaluate(&Rational::from(1), &Rational::from(1)).expect("polynomial in y");
    let mean = at_one(&tower.g.d_dy().coeff(n)) / at_one(&tower.g.coeff(n));
    let mean = mean.to_f64();
    let kappa = limit_law(GraphClass::K33, Stat::Edges, DEFAULT_PRECISION, Route::Expansion).expect("edge law").kappa;
    let expected = f(&kappa) * n as f64;
    c.close("mean edges / (kappa n)", mean / expected, 1.0, 0.1);
    c.info(format!("mean = {mean:.4}, kappa n = {expected:.4}"));
    c.finish(started)
}

fn main() -> ExitCode {
    let m = solve_maximal_singularity(DEFAULT_PRECISION).expect("maximal singularity");
    let results = [
        criterion_1(),
        criterion_2(),
        criterion_3(&m),
        criterion_4(&m),
        criterion_5(),
        criterion_6(&m),
        criterion_7(),
        criterion_8(),
        criterion_9(),
    ];
    let failed = results.iter().filter(|&&ok| !ok).count();
    println!("{} of {} criteria pass", results.len() - failed, results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
