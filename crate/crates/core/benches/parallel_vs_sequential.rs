use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tumatroid::corpus::{fano_b, network_matrix, r10, random_regular};
use tumatroid::matroid::MatroidComparer;
use tumatroid::tumod::{SigningSearch, TuChecker};
use tumatroid::{ExactMatrix, Execution};

const STRATEGIES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn checker(execution: Execution) -> TuChecker {
    TuChecker { force: true, ..TuChecker::default() }.with_execution(execution)
}

fn tu_check(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut group = c.benchmark_group("tu_check");
    group.sample_size(10);
    for n in [6, 8] {
        // TU inputs force the full enumeration.
        let a = network_matrix(&mut rng, n, n);
        for (name, execution) in STRATEGIES {
            let ch = checker(execution);
            group.bench_with_input(BenchmarkId::new(name, n), &a, |b, a| b.iter(|| ch.check(a).unwrap()));
        }
    }
    group.finish();
}

fn signing_search(c: &mut Criterion) {
    // Fano with a full extra column: non-regular, so every mask is tried.
    let rows: Vec<Vec<u8>> = (0..3)
        .map(|i| (0..4).map(|j| fano_b().is_one_at(i, j) as u8).chain([1]).collect())
        .collect();
    let u = ExactMatrix::from_gf2_rows(&rows).unwrap();
    let mut group = c.benchmark_group("signing_search");
    group.sample_size(10);
    for (name, execution) in STRATEGIES {
        let search = SigningSearch { checker: TuChecker::default().with_execution(execution), ..SigningSearch::default() };
        group.bench_function(name, |b| b.iter(|| search.find(&u).unwrap()));
    }
    group.finish();
}

fn matroid_equality(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let m10 = r10().to_matroid();
    let m14 = random_regular(&mut rng, "", 6, 8).to_matroid();
    let mut group = c.benchmark_group("matroid_equality");
    group.sample_size(10);
    for (label, m) in [("r10", &m10), ("regular_6x8", &m14)] {
        for (name, execution) in STRATEGIES {
            let cmp = MatroidComparer { execution, ..MatroidComparer::default() };
            group.bench_with_input(BenchmarkId::new(name, label), m, |b, m| b.iter(|| cmp.equal(m, m).unwrap()));
        }
    }
    group.finish();
}

criterion_group!(benches, tu_check, signing_search, matroid_equality);
criterion_main!(benches);
