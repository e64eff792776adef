//! CSV micro-benchmark over generated instances.
//!
//! One row per (size, operation): `n,m,op,wall_time_ns`. The timed region
//! covers the core operation only — instance generation, certificate
//! verification, and serialization all sit outside it. Rows stream as they
//! finish, so a long ladder shows progress.

use crate::OpArg;
use ncpath_core::domination::{mcds, mds, mids};
use ncpath_core::graph::Graph;
use ncpath_core::hamiltonicity::{hamiltonian_cycle, hamiltonian_path, min_leaf_spanning_tree};
use ncpath_core::recognition::{recognize, TargetClass};
use ncpath_testkit::generate::{gen, GenKind, GenParams, GenSpec};
use std::hint::black_box;
use std::time::Instant;

fn op_name(op: OpArg) -> &'static str {
    match op {
        OpArg::Recognize => "recognize",
        OpArg::Mds => "mds",
        OpArg::Mids => "mids",
        OpArg::Mcds => "mcds",
        OpArg::Hamcycle => "hamcycle",
        OpArg::Hampath => "hampath",
        OpArg::Minleaf => "minleaf",
    }
}

/// Times one operation; `Err` means the instance was outside the
/// operation's domain (disconnected, or not in the class).
fn time_op(op: OpArg, g: &Graph) -> Result<u128, String> {
    let start = Instant::now();
    let res: Result<(), String> = match op {
        OpArg::Recognize => recognize(black_box(g), TargetClass::NcPathTree)
            .map(|c| {
                black_box(c);
            })
            .map_err(|e| e.to_string()),
        OpArg::Mds => mds(black_box(g))
            .map(|r| {
                black_box(r);
            })
            .map_err(|e| e.to_string()),
        OpArg::Mids => mids(black_box(g))
            .map(|r| {
                black_box(r);
            })
            .map_err(|e| e.to_string()),
        OpArg::Mcds => mcds(black_box(g))
            .map(|r| {
                black_box(r);
            })
            .map_err(|e| e.to_string()),
        OpArg::Hamcycle => hamiltonian_cycle(black_box(g))
            .map(|r| {
                black_box(r);
            })
            .map_err(|e| e.to_string()),
        OpArg::Hampath => hamiltonian_path(black_box(g))
            .map(|r| {
                black_box(r);
            })
            .map_err(|e| e.to_string()),
        OpArg::Minleaf => min_leaf_spanning_tree(black_box(g))
            .map(|r| {
                black_box(r);
            })
            .map_err(|e| e.to_string()),
    };
    let wall = start.elapsed().as_nanos();
    res.map(|()| wall)
}

/// Prints the CSV; returns the process exit code.
pub fn bench(sizes: &[usize], kind: GenKind, seed: u64, ops: &[OpArg]) -> u8 {
    if sizes.is_empty() || !sizes.windows(2).all(|w| w[0] < w[1]) {
        eprintln!("bench: --sizes must be non-empty and strictly ascending");
        return 2;
    }
    println!("n,m,op,wall_time_ns");
    for &n in sizes {
        let spec = GenSpec { kind, n, seed, params: GenParams::default() };
        let g = match gen(&spec) {
            Ok(g) => g,
            Err(e) => {
                eprintln!("bench: n = {n}: {e}");
                return 2;
            }
        };
        for &op in ops {
            match time_op(op, &g) {
                Ok(wall) => println!("{},{},{},{wall}", g.n(), g.m(), op_name(op)),
                Err(e) => {
                    eprintln!("bench: {} failed at n = {n}: {e}", op_name(op));
                    return 1;
                }
            }
        }
    }
    0
}
