use criterion::{black_box, criterion_group, criterion_main, Criterion};

use lindim_core::gfq::Field;
use lindim_core::linalg::Matrix;
use lindim_core::lindim::{lindim_general, lindim_primitive};
use lindim_core::perm::{GroupAction, PermGroup};
use lindim_core::permmod::{submodule_lattice, FGModule, DEFAULT_CAP};

fn field_mul(c: &mut Criterion) {
    for (p, t) in [(2, 8), (7, 1), (3, 5)] {
        let f = Field::new(p, t).unwrap();
        let elems: Vec<_> = f.elements().collect();
        c.bench_function(&format!("mul all pairs GF({})", f.q()), |b| {
            b.iter(|| {
                let mut acc = f.from_int(0);
                for &x in elems.iter().take(64) {
                    for &y in &elems {
                        acc = f.add(acc, f.mul(x, y));
                    }
                }
                black_box(acc)
            })
        });
    }
}

fn rref(c: &mut Criterion) {
    let f = Field::new(2, 4).unwrap();
    let n = 64;
    let rows: Vec<Vec<_>> = (0..n)
        .map(|i| (0..n).map(|j| f.from_int(((i * 31 + j * 17 + i * j) % 16) as i64)).collect())
        .collect();
    let m = Matrix::from_rows(&f, n, &rows).unwrap();
    c.bench_function("rref 64x64 GF(16)", |b| b.iter(|| black_box(m.rref())));
}

fn lattice(c: &mut Criterion) {
    let f = Field::new(2, 1).unwrap();
    let m = FGModule::permutation(&GroupAction::natural(&PermGroup::cyclic(12)), &f);
    c.bench_function("lattice C12 GF(2)", |b| {
        b.iter(|| black_box(submodule_lattice(&m, DEFAULT_CAP, 0).unwrap().nodes.len()))
    });
}

fn lindim(c: &mut Criterion) {
    let f2 = Field::new(2, 1).unwrap();
    let c15 = GroupAction::natural(&PermGroup::cyclic(15));
    c.bench_function("lindim C15 GF(2)", |b| {
        b.iter(|| black_box(lindim_general(&c15, &f2, DEFAULT_CAP, 0).unwrap().value))
    });
    let pairs = GroupAction::ksubsets(&PermGroup::symmetric(10), 2).unwrap();
    let mut g = c.benchmark_group("slow");
    g.sample_size(10);
    g.bench_function("lindim S10 on 2-sets GF(2)", |b| {
        b.iter(|| black_box(lindim_primitive(&pairs, &f2, 0).unwrap().value))
    });
    g.finish();
}

criterion_group!(benches, field_mul, rref, lattice, lindim);
criterion_main!(benches);
