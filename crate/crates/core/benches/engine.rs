use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use normcross::divisor::DivisorGerm;
use normcross::gb;
use normcross::poly::{MonomialOrder, Ring};

struct Case {
    name: &'static str,
    vars: &'static [&'static str],
    h: &'static str,
}

const CASES: &[Case] = &[
    Case { name: "four-lines", vars: &["x", "y", "z"], h: "x*y*(x+y)*(x+y*z)" },
    Case { name: "hessian", vars: &["x", "y", "z"], h: "y^5+z^3+x*y^3*z" },
    Case { name: "tuelle", vars: &["x", "y", "z"], h: "x*z*(x+z-y^2)" },
];

fn modes() -> [(&'static str, bool); 2] {
    [("sequential", false), ("parallel", true)]
}

fn singular_locus_basis(c: &mut Criterion) {
    let mut group = c.benchmark_group("singular-locus-gb");
    for case in CASES {
        let ring = Ring::new(case.vars).unwrap();
        let d = DivisorGerm::parse(&ring, case.h, None).unwrap();
        let gens = d.singular_locus_ideal().gens().to_vec();
        for (label, on) in modes() {
            normcross::par::set_parallel(on);
            group.bench_with_input(BenchmarkId::new(label, case.name), &gens, |b, gens| {
                b.iter(|| gb::buchberger(black_box(gens), MonomialOrder::DegRevLex).unwrap())
            });
        }
    }
    group.finish();
}

fn freeness(c: &mut Criterion) {
    let mut group = c.benchmark_group("freeness");
    group.sample_size(10);
    for case in CASES {
        let ring = Ring::new(case.vars).unwrap();
        for (label, on) in modes() {
            normcross::par::set_parallel(on);
            group.bench_function(BenchmarkId::new(label, case.name), |b| {
                b.iter(|| {
                    let d = DivisorGerm::parse(&ring, black_box(case.h), None).unwrap();
                    d.is_free_at_origin().unwrap()
                })
            });
        }
    }
    group.finish();
}

criterion_group!(benches, singular_locus_basis, freeness);
criterion_main!(benches);
