//! Regenerates the generator files under data/groups from first
//! principles. Every construction is certified on the spot (orders,
//! stabilizer indices); corrupted output cannot be produced silently.

mod easy;
mod hs2;
mod j1;
mod pg;
mod sz8;
mod util;

use std::path::PathBuf;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let mut out = PathBuf::from("data/groups");
    let mut targets: Vec<String> = Vec::new();
    let mut it = args.into_iter();
    while let Some(a) = it.next() {
        match a.as_str() {
            "--out" => out = PathBuf::from(it.next().expect("--out needs a path")),
            t => targets.push(t.to_string()),
        }
    }
    if targets.is_empty() {
        targets = [
            "s7", "psl219", "pgl211", "m11", "m10", "k66", "psl33", "psl42", "psl43", "sz8",
            "j1", "s11", "psl52", "psl53", "hs2",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect();
    }
    std::fs::create_dir_all(&out).expect("create output dir");
    for t in targets {
        let start = std::time::Instant::now();
        println!("[{t}]");
        match t.as_str() {
            "s7" => easy::gen_s7(&out),
            "s11" => easy::gen_s11(&out),
            "psl219" => easy::gen_psl219(&out),
            "pgl211" => easy::gen_pgl211(&out),
            "m11" => easy::gen_m11(&out),
            "m10" => easy::gen_m10(&out),
            "k66" => easy::gen_k66(&out),
            "psl33" => pg::gen_psl33(&out),
            "psl42" => pg::gen_psl42(&out),
            "psl43" => pg::gen_psl43(&out),
            "psl52" => pg::gen_psl52(&out),
            "psl53" => pg::gen_psl53(&out),
            "sz8" => sz8::gen_sz8(&out),
            "j1" => j1::gen_j1(&out),
            "hs2" => hs2::gen_hs2(&out),
            other => panic!("unknown target {other}"),
        }
        println!("  done in {:.1?}", start.elapsed());
    }
}
