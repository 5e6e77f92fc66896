//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
//! the test fails if any criterion fails.

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::Instant;

use normcross::divisor::{basis_commutes, DivisorGerm, Final, UndecidedReason, VectorField};
use normcross::gb;
use normcross::ideal::{Ideal, Radicality};
use normcross::logres::{self, LogOneForm, ResidueClass};
use normcross::poly::{Monomial, MonomialOrder, Polynomial, Ring, Q};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

fn ring(names: &[&str]) -> Arc<Ring> {
    Ring::new(names.iter().copied()).unwrap()
}

fn germ(r: &Arc<Ring>, h: &str, factors: Option<&[&str]>) -> DivisorGerm {
    DivisorGerm::parse(r, h, factors).unwrap()
}

fn ideal(r: &Arc<Ring>, gens: &[&str]) -> Ideal {
    Ideal::parse(r, gens).unwrap()
}

fn xs(n: usize) -> Arc<Ring> {
    Ring::new((1..=n).map(|i| format!("x{i}"))).unwrap()
}

fn monomial_germ(n: usize, m: usize, with_factors: bool) -> DivisorGerm {
    let r = xs(n);
    let h = (0..m).fold(Polynomial::one(n), |acc, i| acc * r.var(i));
    let factors = with_factors.then(|| (0..m).map(|i| r.var(i)).collect());
    DivisorGerm::new(&r, h, factors).unwrap()
}

/// Free fixtures used by the residue and closedness suites.
fn free_fixtures() -> Vec<DivisorGerm> {
    let r3 = ring(&["x", "y", "z"]);
    vec![
        germ(&ring(&["x", "y"]), "x*y", Some(&["x", "y"])),
        germ(&r3, "x*y*(x+y)*(x+y*z)", Some(&["x", "y", "x+y", "x+y*z"])),
        germ(&r3, "(x+y)*y*(x+2*y)*(x+y+y*z)", Some(&["x+y", "y", "x+2*y", "x+y+y*z"])),
        germ(&r3, "y^5 + z^3 + x*y^3*z", None),
        monomial_germ(3, 3, true),
        monomial_germ(4, 2, true),
    ]
}

fn all_fixtures() -> Vec<DivisorGerm> {
    let r3 = ring(&["x", "y", "z"]);
    let r5 = ring(&["x", "y", "z", "s", "t"]);
    let mut out = free_fixtures();
    out.push(germ(&r3, "z^2 - x*y", None));
    out.push(germ(&r3, "x*z*(x+z-y^2)", Some(&["x", "z", "x+z-y^2"])));
    out.push(germ(&r3, "x^2 - y^2*z", None));
    out.push(germ(&r5, "(x^2+y^2+z^2)*(s^2-t^2)", Some(&["x^2+y^2+z^2", "s-t", "s+t"])));
    out
}

/// The components of a fixture: its factors, or `h` itself.
fn components(d: &DivisorGerm) -> Vec<Polynomial> {
    d.local_factors().unwrap_or_else(|| vec![d.h().clone()])
}

// ---- independent oracles ----------------------------------------------

/// Monomials of total degree `d` in `n` variables.
fn monomials_of_degree(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 1 {
        return vec![vec![d]];
    }
    (0..=d)
        .flat_map(|e| {
            monomials_of_degree(n - 1, d - e).into_iter().map(move |mut rest| {
                rest.insert(0, e);
                rest
            })
        })
        .collect()
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Hilbert function of `K[x]/(gens)` for a monomial ideal, by counting.
fn hilbert_function(gens: &[Vec<u32>], n: usize, d: u32) -> i64 {
    monomials_of_degree(n, d)
        .iter()
        .filter(|m| !gens.iter().any(|g| divides(g, m)))
        .count() as i64
}

/// Krull dimension of a monomial quotient from the growth of its Hilbert function.
fn dimension_by_counting(gens: &[Vec<u32>], n: usize) -> i64 {
    if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
        return -1;
    }
    let mut values: Vec<i64> = (16..16 + n as u32 + 2).map(|d| hilbert_function(gens, n, d)).collect();
    if values.iter().all(|&v| v == 0) {
        return 0;
    }
    let mut degree = 0;
    loop {
        let next: Vec<i64> = values.windows(2).map(|w| w[1] - w[0]).collect();
        if next.iter().all(|&v| v == 0) {
            return degree + 1;
        }
        values = next;
        degree += 1;
    }
}

/// `∩_{i<j<m} (x_i, x_j)` by brute force: minimal squarefree monomials
/// meeting every pair.
fn pairwise_intersection_oracle(n: usize, m: usize) -> Vec<Vec<u32>> {
    let mut hits: Vec<Vec<u32>> = Vec::new();
    for set in 0u32..(1 << m) {
        let ok = (0..m).all(|i| (i + 1..m).all(|j| set & (1 << i) != 0 || set & (1 << j) != 0));
        if ok {
            hits.push((0..n).map(|i| u32::from(i < m && set & (1 << i) != 0)).collect());
        }
    }
    let all = hits.clone();
    hits.retain(|a| !all.iter().any(|b| b != a && divides(b, a)));
    hits
}

fn monomial_poly(e: &[u32]) -> Polynomial {
    Polynomial::monomial(e.len(), Q::from_integer(1.into()), Monomial::from_exponents(e))
}

// ---- criteria ---------------------------------------------------------

fn criterion_1() {
    let r = ring(&["x", "y", "z"]);
    let d = germ(&r, "z^2 - x*y", None);
    let j = d.jacobian_ideal();
    let m = Ideal::maximal(&r);
    assert_eq!(j.groebner().elements(), m.groebner().elements());
    assert!(d.is_radical_jacobian(None).unwrap().is_radical());
    assert!(!d.is_free_at_origin().unwrap().free);
    let v = d.decide_normal_crossing().unwrap();
    assert_eq!(v.final_verdict, Final::NotNormalCrossing);
    assert_eq!(v.failing_step, Some("free"));
}

fn criterion_2() {
    let r = ring(&["x", "y", "z"]);
    let d = germ(&r, "x*y*(x+y)*(x+y*z)", Some(&["x", "y", "x+y", "x+y*z"]));
    let free = d.is_free_at_origin().unwrap();
    assert!(free.free);
    let det = free.determinant.clone().unwrap();
    let u = free.unit.clone().unwrap();
    assert_eq!(det, &u * d.h());
    assert!(!u.vanishes_at_origin());

    let rad = d.is_radical_jacobian(Some(&free)).unwrap();
    assert_eq!(rad.verdict, Radicality::NotRadical);
    let c = rad.witness.clone().unwrap();
    let k = rad.exponent.unwrap();
    let sing = d.singular_locus_ideal();
    assert!(!sing.contains_locally(&c));
    assert!(sing.contains_locally(&c.pow(k)));

    let j = d.jacobian_ideal();
    let candidate = Ideal::intersect_all(&[
        ideal(&r, &["x+y", "z-1"]),
        ideal(&r, &["x", "z"]),
        ideal(&r, &["x", "y"]),
    ])
    .unwrap();
    for g in candidate.gens() {
        assert!(j.radical_member(g).unwrap(), "{}", r.format(g));
    }
    assert!(j.is_subset_of(&candidate));

    let v = d.decide_normal_crossing().unwrap();
    assert_eq!(v.final_verdict, Final::NotNormalCrossing);
    assert_eq!(v.failing_step, Some("radical-jacobian"));
}

fn criterion_3() {
    let r = ring(&["x", "y", "z"]);
    let d = germ(&r, "y^5 + z^3 + x*y^3*z", None);
    let free = d.is_free_at_origin().unwrap();
    assert!(free.free);
    assert_eq!(free.weights, Some(vec![1, 3, 5]));
    let rad = d.is_radical_jacobian(Some(&free)).unwrap();
    assert_eq!(rad.verdict, Radicality::NotRadical);
    let j = d.jacobian_ideal();
    for v in ["y", "z"] {
        assert!(j.radical_member(&r.parse(v).unwrap()).unwrap());
    }
    assert!(j.is_subset_of(&ideal(&r, &["y", "z"])));
    let v = d.decide_normal_crossing().unwrap();
    assert_eq!(v.final_verdict, Final::NotNormalCrossing);
    assert_eq!(v.failing_step, Some("radical-jacobian"));
}

fn criterion_4() {
    let r = ring(&["x", "y", "z"]);
    let d = germ(&r, "x*z*(x+z-y^2)", Some(&["x", "z", "x+z-y^2"]));
    let c = d.component_checks().unwrap();
    assert!(c.all_smooth());
    assert!(c.singular_loci_ok());
    assert!(c.pairs_transversal());
    assert!(c.triples_ok());
    assert_eq!(c.triples[0].intersection_dimension, 0);
    let free = d.is_free_at_origin().unwrap();
    assert!(!free.free);
    assert_eq!(free.weights, Some(vec![2, 1, 2]));
}

fn criterion_5() {
    for n in 2..=5 {
        for m in 2..=n {
            let d = monomial_germ(n, m, true);
            let r = d.ring().clone();
            let j = d.jacobian_ideal();
            let oracle: Vec<Polynomial> = pairwise_intersection_oracle(n, m).iter().map(|e| monomial_poly(e)).collect();
            let oracle = Ideal::new(&r, oracle).unwrap();
            assert!(j.equals(&oracle).unwrap(), "n={n} m={m}");
            let pairs: Vec<Ideal> = (0..m)
                .flat_map(|i| (i + 1..m).map(move |k| (i, k)))
                .map(|(i, k)| Ideal::new(&r, [r.var(i), r.var(k)]).unwrap())
                .collect();
            assert!(j.equals(&Ideal::intersect_all(&pairs).unwrap()).unwrap());
            let res = gb::free_resolution(j.gens()).unwrap();
            assert!(res.graded && res.minimal_at_origin);
            assert_eq!(res.projective_dimension(), 2, "n={n} m={m}");
            let v = d.decide_normal_crossing().unwrap();
            assert_eq!(v.final_verdict, Final::NormalCrossing, "n={n} m={m}");
            assert_eq!(v.multiplicity, Some(m));
        }
    }
}

fn criterion_6() {
    let r = ring(&["x", "y", "z", "w"]);
    let i = ideal(&r, &["x*z", "x*w", "y*z", "y*w"]);
    let res = gb::free_resolution(i.gens()).unwrap();
    assert!(res.is_complex() && res.graded && res.minimal_at_origin);
    assert_eq!(res.ranks, vec![1, 4, 4, 1]);
    assert_eq!(res.projective_dimension(), 3);
    assert_eq!(res.depth(), 1);
    assert_eq!(i.krull_dimension(), 2);

    // Graded shifts, then compare the alternating sum with the Hilbert series.
    let mut degrees: Vec<Vec<u32>> = vec![vec![0]];
    for map in &res.maps {
        let prev = degrees.last().unwrap().clone();
        let next = map
            .iter()
            .map(|col| {
                let (k, p) = col.components().iter().enumerate().find(|(_, p)| !p.is_zero()).unwrap();
                p.degree().unwrap() + prev[k]
            })
            .collect();
        degrees.push(next);
    }
    let mut numerator = [0i64; 8];
    for (i, ds) in degrees.iter().enumerate() {
        for &d in ds {
            numerator[d as usize] += if i % 2 == 0 { 1 } else { -1 };
        }
    }
    let gens: Vec<Vec<u32>> = vec![vec![1, 0, 1, 0], vec![1, 0, 0, 1], vec![0, 1, 1, 0], vec![0, 1, 0, 1]];
    let hf: Vec<i64> = (0..8).map(|d| hilbert_function(&gens, 4, d)).collect();
    let binom = [1i64, -4, 6, -4, 1];
    for d in 0..8 {
        let expected: i64 = (0..=d.min(4)).map(|k| binom[k] * hf[d - k]).sum();
        assert_eq!(numerator[d], expected, "degree {d}");
    }
}

fn criterion_7() {
    let r = ring(&["x", "y", "z", "s", "t"]);
    let d = germ(&r, "(x^2+y^2+z^2)*(s^2-t^2)", Some(&["x^2+y^2+z^2", "s-t", "s+t"]));
    let rad = d.is_radical_jacobian(None).unwrap();
    assert_eq!(rad.verdict, Radicality::Radical);
    assert!(!d.is_free_at_origin().unwrap().free);
    let j = d.jacobian_ideal();
    let g = "x^2+y^2+z^2";
    let primes = [
        ideal(&r, &["x", "y", "z"]),
        ideal(&r, &["s-t", g]),
        ideal(&r, &["s", "t"]),
        ideal(&r, &["s+t", g]),
    ];
    for p in &primes {
        assert!(j.is_subset_of(p));
    }
    // The generators of the intersection lie in √J, so √J is the intersection.
    let meet = Ideal::intersect_all(&primes).unwrap();
    for q in meet.gens() {
        assert!(j.radical_member(q).unwrap(), "{}", r.format(q));
    }
    // A single prime is not contained in √J.
    assert!(!j.radical_member(&r.parse("x").unwrap()).unwrap());
    let sp = normcross::divisor::splayed_factor_property(&r, &r.parse(g).unwrap(), &r.parse("s^2-t^2").unwrap()).unwrap();
    assert!(sp.holds && sp.first == Radicality::Radical && sp.second == Radicality::Radical);
}

fn criterion_8() {
    for d in all_fixtures() {
        let w = LogOneForm::dlog(d.h());
        for c in components(&d) {
            let rho = logres::residue(&w, &d, Some(&c)).unwrap();
            assert!(rho.is_one(), "{} on {}", d.format(d.h()), d.format(&c));
        }
    }

    let r = ring(&["x", "y", "z"]);
    let h = "(x+y)*y*(x+2*y)*(x+y+y*z)";
    let d = germ(&r, h, Some(&["x+y", "y", "x+2*y", "x+y+y*z"]));
    let w3 = LogOneForm::parse(&r, &["y*(x+y+y*z)", "-x*(x+y+y*z)", "0"], &format!("4*({h})")).unwrap();
    let d1 = r.parse("x+y").unwrap();
    let rho = logres::residue(&w3, &d, Some(&d1)).unwrap();
    let expected = ResidueClass::new(&r, r.parse("-1").unwrap(), r.parse("4*x").unwrap(), d1.clone()).unwrap();
    assert!(rho.equals(&expected));
    assert!(!rho.is_holomorphic().unwrap());
    assert!(!logres::residue_is_holomorphic_on_smooth_component(&w3, &d, &d1).unwrap());

    let d = germ(&r, "x^2 - y^2*z", None);
    let w = LogOneForm::parse(&r, &["y*z", "-x*z", "-1/2*x*y"], "x^2 - y^2*z").unwrap();
    let rho = logres::residue(&w, &d, None).unwrap();
    let expected = ResidueClass::new(&r, r.parse("y*z").unwrap(), r.parse("2*x").unwrap(), d.h().clone()).unwrap();
    assert!(rho.equals(&expected));
    let identity = r.parse("4*(y*z)^2 - z*(2*x)^2").unwrap();
    assert!(Ideal::new(&r, [d.h().clone()]).unwrap().contains(&identity));
    let quarter_z = ResidueClass::new(&r, r.parse("z").unwrap(), r.parse("4").unwrap(), d.h().clone()).unwrap();
    assert!(rho.product(&rho).equals(&quarter_z));
}

fn criterion_9() {
    for n in 2..=4 {
        for m in 1..=n {
            let d = monomial_germ(n, m, true);
            let r = d.ring().clone();
            let forms: Vec<LogOneForm> = (0..n)
                .map(|i| {
                    let mut a = vec![Polynomial::zero(n); n];
                    a[i] = Polynomial::one(n);
                    let den = if i < m { r.var(i) } else { Polynomial::one(n) };
                    LogOneForm::new(a, den).unwrap()
                })
                .collect();
            assert!(forms.iter().all(LogOneForm::is_closed));
            assert!(logres::verify_closed_basis_certificate(&d, &forms).unwrap().issued);
            let fields: Vec<VectorField> = (0..n)
                .map(|i| {
                    let mut a = vec![Polynomial::zero(n); n];
                    a[i] = if i < m { r.var(i) } else { Polynomial::one(n) };
                    VectorField::new(a)
                })
                .collect();
            assert!(basis_commutes(&fields));
            assert!(logres::verify_commuting_basis(&d, &fields).unwrap());
        }
    }

    let r = ring(&["x", "y"]);
    let xy = r.parse("x*y").unwrap();
    let w = LogOneForm::parse(&r, &["y", "x^2"], "x*y").unwrap();
    assert!(w.is_logarithmic(&r, &xy));
    assert!(!w.is_closed());

    // Closed duals iff commuting fields, over bases with both answers.
    let mut seen = (false, false);
    let mut check = |d: &DivisorGerm, m: &[Vec<Polynomial>]| {
        let forms = logres::dual_of_fields(d, m).unwrap();
        let fields: Vec<VectorField> = m.iter().map(|row| VectorField::new(row.clone())).collect();
        let closed = forms.iter().all(LogOneForm::is_closed);
        assert_eq!(closed, basis_commutes(&fields), "{}", d.format(d.h()));
        if closed {
            seen.0 = true;
        } else {
            seen.1 = true;
        }
    };
    for d in free_fixtures() {
        let free = d.is_free_at_origin().unwrap();
        check(&d, &free.matrix().unwrap());
    }
    let d = germ(&r, "x*y", None);
    let p = |s: &str| r.parse(s).unwrap();
    check(&d, &[vec![p("x"), p("0")], vec![p("0"), p("y*(1+x)")]]);
    check(&d, &[vec![p("x"), p("0")], vec![p("0"), p("y")]]);
    assert_eq!(seen, (true, true));
}

fn runner() -> TestRunner {
    TestRunner::new_with_rng(
        Config {
            cases: 256,
            failure_persistence: None,
            ..Config::default()
        },
        TestRng::deterministic_rng(RngAlgorithm::ChaCha),
    )
}

fn small_poly(n: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-3i64..=3, prop::collection::vec(0u32..=2, n)), 1..4).prop_map(move |ts| {
        Polynomial::from_terms(
            n,
            ts.into_iter()
                .map(|(c, e)| (Q::from_integer(c.into()), Monomial::from_exponents(&e))),
        )
    })
}

/// Reduced Gröbner bases do not depend on generator order.
fn prop_groebner_uniqueness() {
    let strat = (prop::collection::vec(small_poly(3), 2..4), any::<prop::sample::Index>());
    runner()
        .run(&strat, |(gens, rot)| {
            let mut shuffled = gens.clone();
            shuffled.reverse();
            let k = rot.index(shuffled.len());
            shuffled.rotate_left(k);
            for ord in [MonomialOrder::DegRevLex, MonomialOrder::Lex] {
                let a = gb::buchberger(&gens, ord).unwrap();
                let b = gb::buchberger(&shuffled, ord).unwrap();
                prop_assert_eq!(a.elements(), b.elements());
            }
            Ok(())
        })
        .unwrap();
}

/// Syzygies annihilate the generators.
fn prop_syzygy_exactness() {
    runner()
        .run(&prop::collection::vec(small_poly(3), 2..4), |gens| {
            for s in gb::syzygies(&gens, MonomialOrder::DegRevLex).unwrap() {
                prop_assert!(s.dot(&gens).is_zero());
            }
            Ok(())
        })
        .unwrap();
}

/// A radical Jacobian ideal contains `h`, on fixtures and random arrangements.
fn prop_radical_jacobian_contains_h() {
    for d in all_fixtures() {
        if d.is_radical_jacobian(None).unwrap().is_radical() {
            assert!(d.jacobian_ideal().contains_locally(d.h()));
        }
    }
    let r3 = ring(&["x", "y", "z"]);
    let linear = prop::collection::vec(-2i64..=2, 3);
    runner()
        .run(&prop::collection::vec(linear, 1..4), |forms| {
            let fs: Vec<Polynomial> = forms
                .iter()
                .filter(|c| c.iter().any(|&v| v != 0))
                .map(|c| {
                    (0..3).fold(Polynomial::zero(3), |acc, i| acc + r3.var(i).scale(&Q::from_integer(c[i].into())))
                })
                .collect();
            let Some(first) = fs.first() else { return Ok(()) };
            let h = fs[1..].iter().fold(first.clone(), |acc, f| acc * f);
            let d = DivisorGerm::new(&r3, h, None).unwrap();
            if !d.is_reduced_equation().unwrap() {
                return Ok(());
            }
            if d.is_radical_jacobian(None).unwrap().is_radical() {
                prop_assert!(d.jacobian_ideal().contains_locally(d.h()));
            }
            Ok(())
        })
        .unwrap();
}

/// Monomial dimension agrees with Hilbert-function counting.
fn prop_monomial_dimension() {
    let strat = (1usize..=4).prop_flat_map(|n| {
        (Just(n), prop::collection::vec(prop::collection::vec(0u32..=2, n), 1..5))
    });
    runner()
        .run(&strat, |(n, gens)| {
            let r = xs(n);
            let ideal = Ideal::new(&r, gens.iter().map(|e| monomial_poly(e))).unwrap();
            prop_assert_eq!(ideal.krull_dimension(), dimension_by_counting(&gens, n));
            Ok(())
        })
        .unwrap();
}

/// Residues do not depend on the admissible coordinate.
fn prop_residue_index_independence() {
    let fixtures = free_fixtures();
    let strat = (0..fixtures.len(), prop::collection::vec(-2i64..=2, 4), prop::collection::vec(0usize..3, 4));
    runner()
        .run(&strat, |(which, coeffs, vars)| {
            let d = &fixtures[which];
            let n = d.nvars();
            let free = d.is_free_at_origin().unwrap();
            let duals = logres::dual_basis(d, &free).unwrap();
            let mut a = vec![Polynomial::zero(n); n];
            for (k, w) in duals.iter().enumerate() {
                let c = Q::from_integer(coeffs[k % coeffs.len()].into());
                let mult = Polynomial::one(n).scale(&c) + d.ring().var(vars[k % vars.len()] % n);
                for (ai, wi) in a.iter_mut().zip(w.numerators()) {
                    *ai = &*ai + &(&mult * wi);
                }
            }
            let w = LogOneForm::new(a, duals[0].denominator().clone()).unwrap();
            for c in components(d) {
                let js = logres::admissible_indices(d, &c);
                let classes: Vec<ResidueClass> = js
                    .iter()
                    .map(|&j| logres::residue_with_index(&w, d, Some(&c), j).unwrap())
                    .collect();
                for pair in classes.windows(2) {
                    prop_assert!(pair[0].equals(&pair[1]));
                }
            }
            Ok(())
        })
        .unwrap();
}

fn criterion_10() {
    prop_groebner_uniqueness();
    prop_syzygy_exactness();
    prop_radical_jacobian_contains_h();
    prop_monomial_dimension();
    prop_residue_index_independence();
}

fn undecided_fixture() {
    let d = monomial_germ(3, 3, false);
    let v = d.decide_normal_crossing().unwrap();
    assert_eq!(v.final_verdict, Final::Undecided);
    assert_eq!(v.undecided_reason, Some(UndecidedReason::NeedsNormalization));
    let step = v.step("normalization").unwrap();
    assert!(step.witnesses.iter().any(|w| w.value == "smooth normalization"));
    assert!(v.step("free").unwrap().outcome == normcross::divisor::StepOutcome::Passed);
    assert!(v.step("radical-jacobian").unwrap().outcome == normcross::divisor::StepOutcome::Passed);
}

/// Writes past the test harness's output capture so the lines always show.
fn report(line: &str) {
    let mut err = std::io::stderr().lock();
    let _ = writeln!(err, "{line}");
}

#[test]
fn acceptance() {
    let criteria: Vec<(&str, fn())> = vec![
        ("1 cone", criterion_1),
        ("2 four lines", criterion_2),
        ("3 Hessian deformation", criterion_3),
        ("4 Tuelle", criterion_4),
        ("5 monomial normal crossings", criterion_5),
        ("6 non Cohen-Macaulay equidimensional ideal", criterion_6),
        ("7 splayed divisor", criterion_7),
        ("8 residues", criterion_8),
        ("9 closed forms and commuting fields", criterion_9),
        ("10 property suites", criterion_10),
        ("U undecided needs normalization", undecided_fixture),
    ];
    let start = Instant::now();
    let mut failed = Vec::new();
    for (name, f) in criteria {
        let t = Instant::now();
        let ok = catch_unwind(AssertUnwindSafe(f)).is_ok();
        report(&format!("criterion {name}: {} ({:.2?})", if ok { "PASS" } else { "FAIL" }, t.elapsed()));
        if !ok {
            failed.push(name);
        }
    }
    let total = start.elapsed();
    report(&format!("total {total:.2?}"));
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
    assert!(total.as_secs() <= 60, "acceptance suite took {total:?}");
}
