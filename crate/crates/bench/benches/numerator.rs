use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use conefourier::random::{rng_from_seed, sphere_shell_cone};
use conefourier::{pk_via_interpolation, pk_via_triangulation};

fn numerators(c: &mut Criterion) {
    let mut rng = rng_from_seed(1);
    for d in 3..=4 {
        let mut group = c.benchmark_group(format!("numerator_d{d}"));
        group.sample_size(20);
        for n in d..=d + 4 {
            let cone = sphere_shell_cone(&mut rng, d, n, 8);
            group.bench_with_input(BenchmarkId::new("triangulation", n), &cone, |b, cone| {
                b.iter(|| pk_via_triangulation(cone).unwrap())
            });
            group.bench_with_input(BenchmarkId::new("interpolation", n), &cone, |b, cone| {
                b.iter(|| pk_via_interpolation(cone).unwrap())
            });
        }
        group.finish();
    }
}

criterion_group!(benches, numerators);
criterion_main!(benches);
