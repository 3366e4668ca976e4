//! Input files for driving the `ordext` binary, and one invocation per
//! subcommand.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

pub struct Files {
    dir: TempDir,
}

impl Files {
    pub fn new() -> Self {
        let files = Files {
            dir: tempfile::tempdir().unwrap(),
        };
        for (name, text) in [
            ("chain.rel", "a < b\nb < c\n"),
            ("diamond.rel", "# diamond\n0 < x\n0 < y\nx < 1\ny < 1\n"),
            ("antichain.rel", "a\nb\nc\n---\n"),
            ("wide.rel", "p\nq\nr\ns\nt\n---\np < q\nr < s\n"),
            ("cycle.rel", "a < b\nb < c\nc < a\n"),
            ("ground.txt", "1\n2\n3\n4\n5\n"),
            ("a.txt", "1\n2\n"),
            ("b.txt", "4\n5\n"),
            ("b_overlap.txt", "2\n3\n"),
            ("blocks.txt", "3\n1\n---\n5\n"),
            ("y.txt", "y1\ny2\ny3\n"),
            ("x.txt", "x1\nx2\nx3\n"),
            ("phi.txt", "y1 -> x2\ny2 -> x3\ny3 -> x1\n"),
            ("phi_short.txt", "y1 -> x1\ny2 -> x2\n"),
            ("order.txt", "y1\nx1\ny2\nx2\n"),
            ("t1.txt", "x1\n"),
            ("t2.txt", "y1\ny2\n"),
            ("t2_wide.txt", "x1\nx2\n"),
            ("subset.txt", "0\nx\n1\n"),
            ("bad.rel", "a < b\nthis is not a pair\n"),
        ] {
            std::fs::write(files.path(name), text).unwrap();
        }
        files
    }

    pub fn path(&self, name: &str) -> PathBuf {
        self.dir.path().join(name)
    }

    pub fn dir(&self) -> &Path {
        self.dir.path()
    }
}

/// One successful invocation of every subcommand, relative to the files
/// directory, with seeded tie-breaks where a policy applies.
pub const EVERY_COMMAND: &[&[&str]] = &[
    &["validate", "diamond.rel"],
    &["validate", "diamond.rel", "--restrict", "subset.txt"],
    &["closure", "diamond.rel"],
    &["linearize", "wide.rel", "--tie-break", "seed:7"],
    &["szpilrajn", "wide.rel", "--force", "s", "p", "--tie-break", "seed:99"],
    &["enumerate", "wide.rel"],
    &["count", "wide.rel"],
    &["incomparable", "wide.rel"],
    &["incomparable", "diamond.rel", "--check", "x", "y"],
    &["bipartition", "ground.txt", "a.txt", "b.txt", "--tie-break", "seed:3"],
    &["blocks", "ground.txt", "blocks.txt", "--tie-break", "seed:3"],
    &["interleave", "y.txt", "x.txt", "phi.txt", "--tie-break", "seed:5"],
    &["dense-check", "order.txt", "t1.txt", "t2.txt"],
];

pub fn ordext(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ordext"))
        .current_dir(dir)
        .args(args)
        .env_remove("ORDEXT_ENUM_LIMIT")
        .output()
        .unwrap()
}

pub fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

pub fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}
