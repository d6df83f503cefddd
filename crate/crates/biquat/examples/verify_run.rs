//! The randomized identity harness, run small. Every algebraic law the
//! library claims is checked here against fresh seeded samples.

use biquat::verify::{identities, render, run, VerifyOptions};

fn main() {
    // same seed, same report, bit for bit; bump samples for more confidence
    let options = VerifyOptions { seed: 42, samples: 500, ..VerifyOptions::default() };
    let report = run(options);
    print!("{}", render(&report));
    assert!(report.pass);

    let n = identities().len();
    let worst = report
        .identities
        .iter()
        .max_by(|a, b| a.max_residual.total_cmp(&b.max_residual))
        .unwrap();
    println!("\n{} identities, worst residual {:.2e} ({})", n, worst.max_residual, worst.name);
}
