//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits nonzero
//! if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use common::*;
use symquandle::invariants::{
    counting_invariant, enumerate_colorings, phi_e, phi_e_decomposed, summarize,
};
use symquandle::symplectic::conjecture_scan;
use symquandle::{FiniteRing, InvariantPolynomial, QuandleTable, SymplecticSpace, TargetQuandle};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:.2?}, limit {limit:?}"))
}

fn build(space: &SymplecticSpace) -> Result<QuandleTable, String> {
    space.build_quandle().map_err(|e| e.to_string())
}

fn poly(text: &str, vars: &[&str]) -> InvariantPolynomial {
    InvariantPolynomial::parse(text, vars).unwrap()
}

fn table_reproduction() -> Outcome {
    let start = Instant::now();
    let v = build(&v_space())?;
    let vp = build(&v_prime_space())?;
    for (name, built, text) in [("M_V", &v, M_V), ("M_V'", &vp, M_V_PRIME)] {
        let printed = fixture_rows(text);
        let got = built.rows_one_based();
        let diffs = (0..16)
            .flat_map(|r| (0..16).map(move |c| (r, c)))
            .filter(|&(r, c)| printed[r][c] != got[r][c])
            .count();
        ensure(diffs == 0, || format!("{name}: {diffs} entries differ"))?;
    }
    within(start, Duration::from_secs(1))?;
    Ok(format!("512/512 entries match in {:.2?}", start.elapsed()))
}

fn erratum() -> Outcome {
    let built = build(&v_double_prime_space())?.rows_one_based();
    let printed = fixture_rows(M_V_DOUBLE_PRIME);
    let mut mismatches = Vec::new();
    for r in 0..16 {
        for c in 0..16 {
            if printed[r][c] != built[r][c] {
                mismatches.push((r + 1, c + 1, printed[r][c], built[r][c]));
            }
        }
    }
    let listed = errata_for("m_v_double_prime.txt");
    ensure(mismatches == listed, || {
        format!("mismatches {mismatches:?} differ from errata {listed:?}")
    })?;
    ensure(mismatches.contains(&(4, 16, 12, 10)), || {
        "entry (4,16) does not compute to 10".into()
    })?;
    ensure(mismatches.len() <= 2, || {
        format!("{} errata", mismatches.len())
    })?;
    Ok(format!("{} erratum: {:?}", mismatches.len(), mismatches))
}

fn qp_values() -> Outcome {
    let cases = [
        (v_space(), "s^16t^16 + 15s^8t^8"),
        (v_prime_space(), "s^16t^16 + 15s^4t^4"),
        (v_double_prime_space(), "4s^16t^16 + 12s^8t^8"),
    ];
    for (space, expected) in cases {
        let got = build(&space)?.quandle_polynomial();
        ensure(got == poly(expected, &["s", "t"]), || {
            format!("got {got}, expected {expected}")
        })?;
    }
    Ok("V, V', V'' match".into())
}

fn orbit_structure() -> Outcome {
    let t = build(&v_double_prime_space())?;
    let orbits: Vec<Vec<usize>> = t.orbits().iter().map(|o| one_based(o)).collect();
    let mut got = orbits.clone();
    got.sort();
    let mut expected = vec![
        vec![1],
        vec![3],
        vec![9],
        vec![11],
        vec![2, 4, 10, 12],
        vec![5, 7, 13, 15],
        vec![6, 8, 14, 16],
    ];
    expected.sort();
    ensure(got == expected, || format!("orbits {orbits:?}"))?;
    ensure(!t.is_almost_connected(), || {
        "reported almost connected".into()
    })?;
    let d = one_based(&t.maximal_trivial_component());
    ensure(d == vec![1, 3, 9, 11], || {
        format!("trivial component {d:?}")
    })?;
    Ok("7 orbits, D = {1,3,9,11}, not almost connected".into())
}

fn almost_connected() -> Outcome {
    let start = Instant::now();
    let suite = field_suite();
    for s in &suite {
        let t = build(s)?;
        let n = t.order();
        let expected = vec![vec![0], (1..n).collect::<Vec<_>>()];
        ensure(t.orbits() == expected, || {
            format!(
                "{} d={} gram {}: unexpected orbits",
                s.ring().spec(),
                s.dim(),
                s.gram()
            )
        })?;
        ensure(t.is_almost_connected(), || {
            format!(
                "{} d={} gram {}: not almost connected",
                s.ring().spec(),
                s.dim(),
                s.gram()
            )
        })?;
    }
    within(start, Duration::from_secs(30))?;
    Ok(format!("{} spaces in {:.2?}", suite.len(), start.elapsed()))
}

fn involutivity() -> Outcome {
    let mut checked = 0;
    for s in full_suite()
        .iter()
        .filter(|s| s.ring().characteristic() == 2)
    {
        let t = build(s)?;
        ensure(t == t.dual(), || {
            format!(
                "{} gram {}: table differs from dual",
                s.ring().spec(),
                s.gram()
            )
        })?;
        checked += 1;
    }
    Ok(format!("{checked} characteristic-2 spaces"))
}

fn radical_is_trivial_component() -> Outcome {
    let suite = full_suite();
    for s in &suite {
        let t = build(s)?;
        let mut radical: Vec<usize> = s
            .degenerate_submodule()
            .map_err(|e| e.to_string())?
            .iter()
            .map(|v| s.module().index_of(v))
            .collect();
        radical.sort_unstable();
        let d = one_based(&t.maximal_trivial_component());
        ensure(radical == d, || {
            format!(
                "{} gram {}: radical {radical:?} vs D {d:?}",
                s.ring().spec(),
                s.gram()
            )
        })?;
    }
    Ok(format!("{} spaces", suite.len()))
}

fn unknot_formula() -> Outcome {
    let start = Instant::now();
    let unknot = presentation("");
    for (p, m, n) in [(2u32, 1u32, 1u32), (3, 1, 1), (2, 2, 1)] {
        let ring = FiniteRing::galois(p, m).map_err(|e| e.to_string())?;
        let space = SymplecticSpace::planar(&ring, 1).map_err(|e| e.to_string())?;
        let target = TargetQuandle::symplectic(&space).map_err(|e| e.to_string())?;
        let got = summarize(&unknot, &target)
            .map_err(|e| e.to_string())?
            .phi_sqp
            .unwrap();
        let mut expected = InvariantPolynomial::new(&["q", "z"]);
        expected.add_term(&[1, 1], 1);
        expected.add_term(&[1, p.pow(m)], (p as i64).pow(2 * n * m) - 1);
        ensure(got == expected, || {
            format!("(p,m,n)=({p},{m},{n}): got {got}, expected {expected}")
        })?;
    }
    within(start, Duration::from_secs(5))?;
    Ok(format!("3 cases in {:.2?}", start.elapsed()))
}

fn non_isomorphism() -> Outcome {
    let v = build(&v_space())?;
    let vp = build(&v_prime_space())?;
    ensure(v.is_isomorphic(&vp).is_none(), || {
        "found an isomorphism".into()
    })?;
    let (a, b) = (v.quandle_polynomial(), vp.quandle_polynomial());
    ensure(a != b, || "qp polynomials agree".into())?;
    Ok(format!("no isomorphism; qp {a} vs {b}"))
}

fn decomposition() -> Outcome {
    let cases = [
        ("trefoil", TREFOIL, QuandleTable::cyclic(3)),
        ("trefoil", TREFOIL, build(&v_space())?),
        ("Hopf", HOPF, QuandleTable::cyclic(3)),
    ];
    for (name, code, t) in cases {
        let p = presentation(code);
        let direct = phi_e(&p, &t);
        let split = phi_e_decomposed(&p, &t).map_err(|e| e.to_string())?;
        ensure(direct == split, || {
            format!("{name}, |T|={}: {direct} vs {split}", t.order())
        })?;
    }
    Ok("3 cases agree".into())
}

fn links() -> Vec<(&'static str, &'static str)> {
    vec![
        ("unknot", ""),
        ("unlink", ","),
        ("trefoil", TREFOIL),
        ("mirror trefoil", "O1-U2-O3-U1-O2-U3-"),
        ("figure-eight", FIGURE_EIGHT),
        ("Hopf", HOPF),
        ("virtual trefoil", VIRTUAL_TREFOIL),
    ]
}

fn targets() -> Result<Vec<(String, TargetQuandle)>, String> {
    let mut out = vec![
        (
            "cyclic Z3".to_string(),
            TargetQuandle::plain(QuandleTable::cyclic(3)),
        ),
        (
            "trivial T3".to_string(),
            TargetQuandle::plain(QuandleTable::trivial(3)),
        ),
        (
            "Alexander Z5, t=2".to_string(),
            TargetQuandle::plain(QuandleTable::alexander(5, 2)),
        ),
    ];
    for (name, space) in [
        ("V", v_space()),
        ("V'", v_prime_space()),
        ("V''", v_double_prime_space()),
        (
            "(Z3)^2",
            SymplecticSpace::parse("Z3", 2, "0,1;2,0").unwrap(),
        ),
        (
            "Z2^3 degenerate",
            SymplecticSpace::parse("Z2", 3, "0,1,0;1,0,0;0,0,0").unwrap(),
        ),
        (
            "(Z3)^4",
            SymplecticSpace::parse("Z3", 4, Z3_4_GRAM).unwrap(),
        ),
    ] {
        let t = TargetQuandle::symplectic(&space).map_err(|e| e.to_string())?;
        out.push((name.to_string(), t));
    }
    Ok(out)
}

fn specializations() -> Outcome {
    let mut cases = 0;
    for (tname, target) in targets()? {
        for (lname, code) in links() {
            let p = presentation(code);
            let s = summarize(&p, &target).map_err(|e| e.to_string())?;
            let count = s.count as i64;
            ensure(s.phi_e.evaluate_all(1) == count, || {
                format!(
                    "{lname} / {tname}: phi_e(1) = {} vs count {count}",
                    s.phi_e.evaluate_all(1)
                )
            })?;
            if let Some(sqp) = &s.phi_sqp {
                ensure(sqp.evaluate_all(1) == count, || {
                    format!(
                        "{lname} / {tname}: phi_sqp(1,1) = {} vs count {count}",
                        sqp.evaluate_all(1)
                    )
                })?;
                let z1 = sqp.substitute("z", 1).map_err(|e| e.to_string())?;
                ensure(z1 == s.phi_e, || {
                    format!(
                        "{lname} / {tname}: phi_sqp(z=1) = {z1} vs phi_e {}",
                        s.phi_e
                    )
                })?;
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} link/target pairs"))
}

fn oracle_equivalence() -> Outcome {
    let mut compared = 0;
    let mut saw = (false, false);
    for (tname, target) in targets()? {
        for (lname, code) in links() {
            let p = presentation(code);
            let t = &target.table;
            if naive_size(&p, t) > 1_000_000 {
                continue;
            }
            let fast = enumerate_colorings(&p, t);
            let naive = naive_colorings(&p, t);
            ensure(fast == naive, || {
                format!(
                    "{lname} / {tname}: {} colorings vs naive {}",
                    fast.len(),
                    naive.len()
                )
            })?;
            ensure(counting_invariant(&p, t) == naive.len() as u64, || {
                format!("{lname} / {tname}: counting invariant disagrees")
            })?;
            if lname == "trefoil" {
                saw.0 |= tname == "(Z3)^2";
                saw.1 |= t.order() == 81;
            }
            compared += 1;
        }
    }
    ensure(saw == (true, true), || {
        "trefoil over (Z3)^2 or an 81-element target was skipped".into()
    })?;
    Ok(format!("{compared} cases with |T|^g <= 10^6"))
}

fn conjecture() -> Outcome {
    let start = Instant::now();
    let report = conjecture_scan(2..=9, 2).map_err(|e| e.to_string())?;
    for r in &report.results {
        ensure(r.coincide, || {
            format!(
                "Z{}: isomorphic but not isometric (or the reverse) for {:?}",
                r.n, r.counterexamples
            )
        })?;
    }
    within(start, Duration::from_secs(120))?;
    Ok(format!(
        "n = 2..9 partitions agree in {:.2?}",
        start.elapsed()
    ))
}

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("table reproduction (M_V, M_V')", table_reproduction),
        ("erratum handling (M_V'')", erratum),
        ("quandle polynomials", qp_values),
        ("orbit structure of M_V''", orbit_structure),
        ("almost-connectedness over fields", almost_connected),
        ("involutivity in characteristic 2", involutivity),
        (
            "radical equals maximal trivial component",
            radical_is_trivial_component,
        ),
        ("unknot Phi_sqp formula", unknot_formula),
        ("M_V and M_V' not isomorphic", non_isomorphism),
        ("Phi_E subquandle decomposition", decomposition),
        ("specialization identities", specializations),
        ("backtracking vs naive enumeration", oracle_equivalence),
        ("isomorphism vs isometry scan, Z_2..Z_9", conjecture),
    ];
    let mut passed = Vec::new();
    let mut failures = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => {
                println!("PASS [{:>2}] {name}: {detail}", k + 1);
                passed.push(k + 1);
            }
            Err(why) => {
                println!("FAIL [{:>2}] {name}: {why}", k + 1);
                failures += 1;
            }
        }
    }
    // The excluded example values are replaced by criteria 8 and 10-12.
    let substitutes = [8, 10, 11, 12];
    if substitutes.iter().all(|k| passed.contains(k)) {
        println!(
            "PASS [14] excluded virtual-link example values: not evaluated (source figures absent); \
             substitute criteria 8, 10, 11, 12 pass"
        );
    } else {
        println!("FAIL [14] excluded virtual-link example values: a substitute criterion failed");
        failures += 1;
    }
    if failures > 0 {
        println!("{failures} criteria failed");
        std::process::exit(1);
    }
    println!("all 14 criteria pass");
}
