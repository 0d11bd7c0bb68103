use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use lounesto::par::Execution;
use lounesto::verify::{run_suite, Suite, VerifyConfig};

fn suites(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    for suite in Suite::ALL {
        for (name, execution) in [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)] {
            let cfg = VerifyConfig { samples: 2000, seed: 1, execution, ..VerifyConfig::default() };
            group.bench_with_input(BenchmarkId::new(suite.name(), name), &cfg, |b, cfg| {
                b.iter(|| run_suite(suite, cfg))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, suites);
criterion_main!(benches);
