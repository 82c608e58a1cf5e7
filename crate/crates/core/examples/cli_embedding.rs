//! Driving the command line in-process.

fn main() {
    let queries: [&[&str]; 3] = [
        &["legcalc", "torus", "reps", "-n", "2", "-p", "3", "-q", "7", "--sign", "-"],
        &["legcalc", "--explain", "range", "check", "--knot", "fig8", "--tb", "-4", "--r", "0"],
        &["legcalc", "farey", "path", "inf", "-7/3"],
    ];
    for argv in queries {
        let (code, out) = legcalc::cli::run(argv.iter().copied());
        println!("$ {} -> exit {code}\n{out}", argv[1..].join(" "));
    }
}
