use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use qmoments::families::family_closed;
use qmoments::moments::{moment_vector, MomentRoute};
use qmoments::qseries::q_binomial;
use qmoments::verify::{run_suite, Mode, Selector};
use qmoments_bench::{family, pochhammer_sum};

fn kernel(c: &mut Criterion) {
    c.bench_function("q_binomial 40 20", |b| b.iter(|| q_binomial(black_box(40), black_box(20))));
    c.bench_function("Σ 1/(q;q)_k k<=12", |b| b.iter(|| pochhammer_sum(black_box(12))));
}

fn families(c: &mut Criterion) {
    let fz = family("fz");
    c.bench_function("f_10(x,z,q) closed", |b| b.iter(|| family_closed(&fz, black_box(10)).unwrap()));
    let u = family("u");
    for route in MomentRoute::ALL {
        c.bench_function(&format!("u moments n<=8 {route}"), |b| {
            b.iter(|| moment_vector(&u, black_box(8), route).unwrap())
        });
    }
}

fn suite(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify");
    g.sample_size(10);
    let sel = Selector::parse("s4").unwrap();
    g.bench_function("section s4 order 8", |b| b.iter(|| run_suite(&sel, 8, Mode::Symbolic).unwrap()));
    g.finish();
}

criterion_group!(benches, kernel, families, suite);
criterion_main!(benches);
