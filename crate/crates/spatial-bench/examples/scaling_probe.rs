use spatial_bench::{run_bench, BenchSpec, Operation, Strategy};

fn main() {
    let spec = BenchSpec {
        operations: vec![Operation::RotationCompose, Operation::RotationApply],
        strategies: Strategy::ALL.to_vec(),
        n_grid: vec![10, 1_000_000],
        warmup: 2,
        repetitions: 5,
        seed: 0,
    };
    let run = run_bench(&spec).unwrap();
    for r in &run.records {
        println!(
            "{:<20} {:<15} N={:<9} median={:.3e}s ops/s={:.3e}",
            r.operation.name(),
            r.strategy.name(),
            r.n,
            r.median_s,
            r.ops_per_s
        );
    }
}
