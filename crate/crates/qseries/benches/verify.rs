use atlas_exact::exec::Strategy;
use atlas_orders::Sign;
use atlas_qseries::{verify_identity, TheoremId};
use criterion::{criterion_group, criterion_main, Criterion};

fn bench(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify_so_even_n8");
    g.sample_size(10);
    for (name, strategy) in [("parallel", Strategy::Parallel), ("sequential", Strategy::Sequential)] {
        g.bench_function(name, |b| b.iter(|| verify_identity(TheoremId::SoEven, Sign::Plus, 8, strategy).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, bench);
criterion_main!(benches);
