//! Rayon batches against their sequential counterparts. The campaign group
//! uses whichever backend the `parallel` feature selects; run it again with
//! `--no-default-features` to compare.

use std::fs;
use std::path::Path;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use minijs::{execute, Options};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tlfuzz_core::engine::{fuzz_loop, EngineConfig, Seed, TokenMode};
use tlfuzz_core::executor::{InProcessTarget, Target};
use tlfuzz_core::mutator::{MutationBudget, TokenMutator};
use tlfuzz_core::preproc::{build_token_map, prepare_seed};
use tlfuzz_core::{decode, encode, par, EncodedInput, TokenMap};

fn seeds() -> Vec<(String, String)> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../seeds");
    let mut v: Vec<_> = fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .map(|p| {
            (
                p.file_name().unwrap().to_string_lossy().into_owned(),
                fs::read_to_string(&p).unwrap(),
            )
        })
        .collect();
    v.sort();
    v
}

fn corpus() -> (TokenMap, Vec<Vec<u16>>) {
    let prepared: Vec<_> = seeds()
        .iter()
        .enumerate()
        .map(|(i, (n, s))| prepare_seed(n, s, 0, i).unwrap().tokens)
        .collect();
    let map = build_token_map(&prepared, &[]).unwrap();
    let codes = prepared
        .iter()
        .map(|s| encode(s, &map).unwrap().codes)
        .collect();
    (map, codes)
}

fn bench_prepare(c: &mut Criterion) {
    let seeds = seeds();
    let indexed: Vec<(usize, &(String, String))> = seeds.iter().enumerate().collect();
    let mut g = c.benchmark_group("prepare_seeds");
    g.throughput(Throughput::Elements(seeds.len() as u64));
    let f = |(i, (n, s)): &(usize, &(String, String))| prepare_seed(n, s, 0, *i).unwrap();
    g.bench_function("parallel", |b| b.iter(|| par::map(&indexed, f)));
    g.bench_function("sequential", |b| b.iter(|| par::map_seq(&indexed, f)));
    g.finish();
}

fn bench_execute(c: &mut Criterion) {
    let (map, codes) = corpus();
    let m = TokenMutator::new(&map, MutationBudget::default());
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mutants: Vec<Vec<u16>> = (0..1024)
        .map(|i| {
            let mut c = codes[i % codes.len()].clone();
            m.havoc(&mut c, &codes, &mut rng);
            c
        })
        .collect();
    let opts = Options::default();
    let run = |c: &Vec<u16>| {
        let text = decode(&EncodedInput::new(c.clone()), &map);
        execute(text.as_bytes(), None, &opts).outcome.status()
    };
    let mut g = c.benchmark_group("decode_execute");
    g.throughput(Throughput::Elements(mutants.len() as u64));
    g.bench_function("parallel", |b| b.iter(|| par::map(&mutants, run)));
    g.bench_function("sequential", |b| b.iter(|| par::map_seq(&mutants, run)));
    g.finish();
}

fn bench_campaign(c: &mut Criterion) {
    let (map, codes) = corpus();
    let mode = TokenMode::new(map, MutationBudget::default());
    let backend = if par::is_parallel() {
        "rayon"
    } else {
        "sequential"
    };
    let mut g = c.benchmark_group("campaign");
    g.sample_size(10);
    for workers in [1usize, 4] {
        let config = EngineConfig {
            workers,
            max_execs: Some(20_000),
            checkpoint_execs: None,
            ..EngineConfig::default()
        };
        g.throughput(Throughput::Elements(20_000));
        g.bench_with_input(BenchmarkId::new(backend, workers), &workers, |b, &w| {
            b.iter(|| {
                let targets: Vec<Box<dyn Target>> = (0..w)
                    .map(|_| {
                        Box::new(InProcessTarget::new(
                            minijs::harness(Options::default()),
                            1 << 16,
                        )) as Box<dyn Target>
                    })
                    .collect();
                let seeds = codes
                    .iter()
                    .enumerate()
                    .map(|(id, c)| Seed {
                        id,
                        input: c.clone(),
                    })
                    .collect();
                fuzz_loop(&mode, seeds, targets, &config, None, &mut |_| {})
                    .unwrap()
                    .stats
                    .total_execs
            })
        });
    }
    g.finish();
}

criterion_group!(benches, bench_prepare, bench_execute, bench_campaign);
criterion_main!(benches);
