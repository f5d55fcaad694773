//! One pass/fail line per acceptance item. Exits nonzero if any item fails.

mod common;

use std::time::Instant;

use num::Signed;
use skein_core::diagram::braid_closure;
use skein_core::invariants::{default_orientation, homfly, kauffman};
use skein_core::jaeger::{bmw_relations, jaeger_kauffman, psi_generator, BmwGen};
use skein_core::ring::{delta, BiLaurent, LaurentQ, RatFun, SignConvention};
use skein_core::schur::{
    bmw_relation_suite, build_rep, divided_power_failures, hecke_block, hecke_generator, loop_composed_holds,
    loop_square_holds, presentation_failures, route_mismatches, theta_rank, theta_word, Route, Space,
};

type Outcome = Result<Vec<String>, String>;

/// `[m]` as an explicit sum of powers of `q`.
fn qint(m: i32) -> LaurentQ {
    let s = (0..m.abs()).fold(LaurentQ::zero(), |acc, j| &acc + &LaurentQ::q_pow(m.abs() - 1 - 2 * j));
    if m < 0 {
        -&s
    } else {
        s
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn jaeger_identity() -> Outcome {
    let mut fails = Vec::new();
    for (name, d) in common::corpus() {
        if kauffman(&d).value != jaeger_kauffman(&d) {
            fails.push(name.to_string());
        }
    }
    Ok(fails)
}

fn unknot_normalizations() -> Outcome {
    let mut fails = Vec::new();
    let u = braid_closure(1, &[]).map_err(err)?;
    let a = &BiLaurent::mono(1, 0) - &BiLaurent::mono(-1, 0);
    let z = &BiLaurent::mono(0, 1) - &BiLaurent::mono(0, -1);
    let bracket_a = RatFun::new(a, z).map_err(err)?;
    if homfly(&default_orientation(&u)).map_err(err)?.value != bracket_a {
        fails.push("homfly(unknot) = [a]".into());
    }
    if kauffman(&u).value != delta() {
        fails.push("kauffman(unknot) = delta".into());
    }
    for big_n in 2..=5 {
        if delta().specialize_a(big_n).map_err(err)? != &qint(2 * big_n - 1) + &LaurentQ::one() {
            fails.push(format!("delta at N={big_n}"));
        }
    }
    Ok(fails)
}

fn relation_suite() -> Outcome {
    let mut fails = Vec::new();
    for n in [2, 3] {
        if bmw_relations(n, SignConvention::Consistent).is_empty() {
            return Err(format!("no relations generated for n={n}"));
        }
        for big_n in [2, 3, 4] {
            for name in bmw_relation_suite(n, big_n, SignConvention::Consistent).map_err(err)? {
                fails.push(format!("n={n} N={big_n} {name}"));
            }
        }
    }
    Ok(fails)
}

fn loop_identity(notes: &mut Vec<String>) -> Outcome {
    let mut fails = Vec::new();
    for n in [2, 3] {
        for i in 1..n {
            for big_n in [2, 3, 4] {
                if !loop_composed_holds(n, i, big_n).map_err(err)? {
                    fails.push(format!("theta(e{i} e{i}) n={n} N={big_n}"));
                }
                let square = loop_square_holds(n, i, big_n, Space::Wedge(big_n)).map_err(err)?;
                if big_n == 2 {
                    notes.push(format!("N=2 n={n} theta(e{i})^2 = delta theta(e{i}) as operators: {square}"));
                } else if !square {
                    fails.push(format!("theta(e{i})^2 n={n} N={big_n}"));
                }
            }
        }
    }
    Ok(fails)
}

fn route_agreement() -> Outcome {
    let mut fails = Vec::new();
    for n in [2, 3] {
        for big_n in [2, 3, 4] {
            for (label, space) in [("wedge", Space::Wedge(big_n)), ("tensor", Space::Tensor)] {
                for g in route_mismatches(n, big_n, space).map_err(err)? {
                    fails.push(format!("{g} n={n} N={big_n} {label}"));
                }
            }
        }
    }
    Ok(fails)
}

fn injectivity(notes: &mut Vec<String>) -> Outcome {
    let mut fails = Vec::new();
    for (n, expect) in [(2, 3), (3, 15)] {
        for big_n in [3, 4] {
            let r = theta_rank(n, big_n).map_err(err)?;
            if r != expect {
                fails.push(format!("n={n} N={big_n} rank {r}, expected {expect}"));
            }
        }
        notes.push(format!("N=2 n={n} rank {}", theta_rank(n, 2).map_err(err)?));
    }
    Ok(fails)
}

fn self_validation() -> Outcome {
    let mut fails = Vec::new();
    for n in [2, 3] {
        for d in 1..=6 {
            let ctx = build_rep(n, d).map_err(err)?;
            let found = presentation_failures(&ctx).map_err(err)?.into_iter().chain(divided_power_failures(&ctx).map_err(err)?);
            fails.extend(found.map(|f| format!("n={n} d={d} {f}")));
        }
    }
    Ok(fails)
}

fn hecke_factoring() -> Outcome {
    let mut fails = Vec::new();
    let n = 3;
    let two = &LaurentQ::q_pow(1) + &LaurentQ::q_pow(-1);
    for big_n in [3, 4] {
        let block = |g: BmwGen| hecke_block(&theta_word(n, &[g], big_n, Route::Composed)?, n);
        let mut bs = Vec::new();
        for i in 1..n {
            let b = block(BmwGen::Rho(i)).map_err(err)?;
            if b != hecke_generator(n, i).map_err(err)? {
                fails.push(format!("N={big_n} hecke(rho{i}) != b{i}"));
            }
            if b.mul(&b) != b.scale(&two) {
                fails.push(format!("N={big_n} quadratic relation for b{i}"));
            }
            if !block(BmwGen::E(i)).map_err(err)?.is_zero() {
                fails.push(format!("N={big_n} hecke(e{i}) != 0"));
            }
            bs.push(b);
        }
        let lhs = bs[0].mul(&bs[1]).mul(&bs[0]).add(&bs[1]);
        let rhs = bs[1].mul(&bs[0]).mul(&bs[1]).add(&bs[0]);
        if lhs != rhs {
            fails.push(format!("N={big_n} braid relation"));
        }
    }
    Ok(fails)
}

fn invariance() -> Outcome {
    Ok(common::corpus_invariance_failures())
}

fn positivity() -> Outcome {
    let mut fails = Vec::new();
    for (label, g) in [("1", None), ("e", Some(BmwGen::E(1))), ("rho", Some(BmwGen::Rho(1)))] {
        let x = psi_generator(g);
        if x.is_empty() {
            fails.push(format!("psi({label}) is empty"));
        }
        for (_, c) in x.iter() {
            let ok = c.as_bilaurent().is_some_and(|p| p.terms().all(|(_, k)| k.is_integer() && !k.is_negative()));
            if !ok {
                fails.push(format!("psi({label}) coefficient {c}"));
            }
        }
    }
    Ok(fails)
}

fn main() {
    let mut notes = Vec::new();
    let mut failed = 0;
    let mut run = |id: u32, label: &str, notes: &mut Vec<String>, f: &mut dyn FnMut(&mut Vec<String>) -> Outcome| {
        let t = Instant::now();
        let mut local = Vec::new();
        let out = f(&mut local);
        let secs = t.elapsed().as_secs_f64();
        match out {
            Ok(fails) if fails.is_empty() => println!("[{id:>2}] PASS {label} ({secs:.2}s)"),
            Ok(fails) => {
                failed += 1;
                println!("[{id:>2}] FAIL {label} ({secs:.2}s): {}", fails.join("; "));
            }
            Err(e) => {
                failed += 1;
                println!("[{id:>2}] FAIL {label} ({secs:.2}s): error {e}");
            }
        }
        notes.extend(local.into_iter().map(|s| format!("[{id:>2}] note: {s}")));
    };
    run(1, "Kauffman equals the Jaeger expansion on 8 diagrams", &mut notes, &mut |_| jaeger_identity());
    run(2, "unknot normalizations, N = 2..5", &mut notes, &mut |_| unknot_normalizations());
    run(3, "BMW relations vanish in the Schur model, n in {2,3}, N in {2,3,4}", &mut notes, &mut |_| relation_suite());
    run(4, "loop identity for theta(e_i)", &mut notes, &mut loop_identity);
    run(5, "theta routes agree on generators, n <= 3, N <= 4", &mut notes, &mut |_| route_agreement());
    run(6, "rank of theta-images is (2n-1)!! at N in {3,4}", &mut notes, &mut injectivity);
    run(7, "Schur presentation and divided-power identities, n in {2,3}, d <= 6", &mut notes, &mut |_| self_validation());
    run(8, "Hecke block factoring, n = d = 3", &mut notes, &mut |_| hecke_factoring());
    run(9, "Reidemeister and mirror invariance on the corpus", &mut notes, &mut |_| invariance());
    run(10, "psi of the BMW generators has coefficients in N[a^{+-1}, q^{+-1}]", &mut notes, &mut |_| positivity());
    for n in &notes {
        println!("{n}");
    }
    if failed > 0 {
        println!("acceptance: {failed} item(s) failed");
        std::process::exit(1);
    }
    println!("acceptance: all 10 items passed");
}
